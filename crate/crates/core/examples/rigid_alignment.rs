//! Recovers a known rigid motion from corresponding point sets.

use isomorph::{align, Point, Vec3};
use nalgebra::Rotation3;

fn main() -> isomorph::Result<()> {
    let source: Vec<Point> = (0..8)
        .map(|i| {
            let a = i as f64;
            Point::new(a.cos(), (1.7 * a).sin(), 0.3 * a)
        })
        .collect();
    let rotation = Rotation3::from_euler_angles(0.3, -1.1, 2.0);
    let shift = Vec3::new(4.0, -2.0, 0.5);
    let target: Vec<Point> = source.iter().map(|p| rotation * p + shift).collect();

    let found = align(&source, &target)?;
    println!(
        "rotation error    {:.2e}",
        (found.rotation - rotation.matrix()).norm()
    );
    println!(
        "translation error {:.2e}",
        (found.translation - shift).norm()
    );
    println!("residual          {:.2e}", found.residual(&source, &target));
    Ok(())
}
