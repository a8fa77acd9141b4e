//! CSV quality report comparing the engines on a hinge and a closed band.

use isomorph::engines::{MeshMorph, MorphOptions};
use isomorph::generators::{gen_cycle_strip, gen_hinge};
use isomorph::quality::{report, timed, CSV_HEADER};
use isomorph::Engine;

fn main() -> isomorph::Result<()> {
    let hinge = (
        gen_hinge(std::f64::consts::PI),
        gen_hinge(std::f64::consts::FRAC_PI_2),
    );
    let band = gen_cycle_strip();
    println!("{CSV_HEADER}");
    for (name, (a, b)) in [("hinge", hinge), ("band", band)] {
        for engine in [Engine::Polygon, Engine::Exact, Engine::Averaging] {
            let morph = match MeshMorph::prepare(&a, &b, MorphOptions::new(engine)) {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("{name}/{engine}: {e}");
                    continue;
                }
            };
            let point = morph.point_at(0.5)?;
            let (result, elapsed) = timed(|| morph.reconstruct(&point));
            let rep = report(&result?, &point, elapsed)?;
            println!("{}", rep.csv_row(&format!("{name}_{engine}")));
        }
    }
    Ok(())
}
