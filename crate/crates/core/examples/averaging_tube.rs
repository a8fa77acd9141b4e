//! Averaging engine on a bent tube, with candidate growth reported per size.
//!
//!     cargo run --release --example averaging_tube -- [rings] [segments]

use std::time::Instant;

use isomorph::engines::{MeshMorph, MorphOptions};
use isomorph::generators::gen_articulated_tube;
use isomorph::Engine;

fn main() -> isomorph::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("a count"));
    let rings = args.next().unwrap_or(30);
    let segments = args.next().unwrap_or(30);
    let (straight, bent) = gen_articulated_tube(rings, segments, 1.2)?;
    let start = Instant::now();
    let morph = MeshMorph::prepare(&straight, &bent, MorphOptions::new(Engine::Averaging))?;
    match morph.at(0.5) {
        Ok(r) => println!(
            "n = {}  Q = {:.4e}  candidates = {} (max {} per vertex)  {:.3} s",
            straight.vertex_count(),
            r.energy_q,
            r.candidate_stats.total(),
            r.candidate_stats.max_count(),
            start.elapsed().as_secs_f64()
        ),
        Err(e) => println!("n = {}: {e}", straight.vertex_count()),
    }
    Ok(())
}
