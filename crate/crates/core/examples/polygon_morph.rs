//! Exact morph between two mirrored sine strips with the polygon engine.
//!
//! Every intermediate pose realizes the interpolated edge lengths exactly.
//!
//!     cargo run --example polygon_morph -- [out_dir]

use std::path::PathBuf;

use isomorph::generators::gen_sine_strip;
use isomorph::{io, morph_sequence, Engine, MorphOptions};

fn main() -> isomorph::Result<()> {
    let out = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "polygon_frames".into()),
    );
    std::fs::create_dir_all(&out).map_err(|source| isomorph::MorphError::Io {
        path: out.clone(),
        source,
    })?;

    let up = gen_sine_strip(60, 1.0, 0.5)?;
    let down = gen_sine_strip(60, -1.0, 0.5)?;
    // the strips are already in correspondence; aligning a thin strip onto
    // its mirror image would turn it over
    let options = MorphOptions::new(Engine::Polygon).without_alignment();
    let frames = morph_sequence(&up, &down, 9, options)?;

    for (i, f) in frames.iter().enumerate() {
        let path = io::frame_path(&out, "strip", i, "off");
        io::write_mesh(&path, &f.mesh)?;
        println!(
            "t = {:.3}  Q = {:.2e}  -> {}",
            f.t.unwrap(),
            f.energy_q,
            path.display()
        );
    }
    Ok(())
}
