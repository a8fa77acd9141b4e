//! Writes a mesh as OFF and OBJ, reads both back, and checks they match.

use isomorph::generators::gen_hinge;
use isomorph::io::{read_mesh, write_mesh};

fn main() -> isomorph::Result<()> {
    let dir = std::env::temp_dir().join("isomorph_mesh_io");
    std::fs::create_dir_all(&dir).map_err(|source| isomorph::MorphError::Io {
        path: dir.clone(),
        source,
    })?;
    let hinge = gen_hinge(2.0);
    for name in ["hinge.off", "hinge.obj"] {
        let path = dir.join(name);
        write_mesh(&path, &hinge)?;
        let back = read_mesh(&path)?;
        println!(
            "{}: {} vertices, {} faces, identical: {}",
            path.display(),
            back.vertex_count(),
            back.face_count(),
            back.vertices() == hinge.vertices() && back.faces() == hinge.faces()
        );
    }
    Ok(())
}
