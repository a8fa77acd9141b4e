//! Prints the shape-space coordinates of a small strip and of the point
//! halfway to its mirror image.

use isomorph::generators::gen_sine_strip;
use isomorph::{encode, interp};

fn main() -> isomorph::Result<()> {
    let a = encode(&gen_sine_strip(4, 1.0, 0.5)?)?;
    let b = encode(&gen_sine_strip(4, -1.0, 0.5)?)?;
    let mid = interp(&a, &b, 0.5)?;
    println!(
        "dimension {} (anchor 3 + direction 2 + {} lengths + 2 x {} normals)",
        a.dimension(),
        a.edge_lengths.len(),
        a.face_normals.len()
    );
    for (name, p) in [("t=0", &a), ("t=0.5", &mid), ("t=1", &b)] {
        let flat: Vec<String> = p.to_flat().iter().map(|x| format!("{x:.4}")).collect();
        println!("{name:>6}: {}", flat.join(" "));
    }
    Ok(())
}
