//! A closed band whose face-adjacency graph is a cycle. Halfway between its
//! two poses no mesh matches all interpolated lengths and normals, and the
//! exponential engine shows this as disagreeing candidate positions.

use isomorph::engines::{MeshMorph, MorphOptions};
use isomorph::generators::gen_cycle_strip;
use isomorph::Engine;

fn main() -> isomorph::Result<()> {
    let (a, b) = gen_cycle_strip();
    for engine in [Engine::Exact, Engine::Averaging] {
        let morph = MeshMorph::prepare(&a, &b, MorphOptions::new(engine))?;
        let r = morph.at(0.5)?;
        println!(
            "{engine:<9}  Q = {:.3e}  candidates = {:>3}  max spread = {:.3e}  (diameter {:.3})",
            r.energy_q,
            r.candidate_stats.total(),
            r.candidate_stats.max_spread(),
            a.diameter()
        );
        for s in &r.trace {
            println!(
                "    arc {:>2} -> vertex {:>2}: d1 = {}, d2 = {}, added {}",
                s.arc, s.apex, s.d1, s.d2, s.added
            );
        }
    }
    Ok(())
}
