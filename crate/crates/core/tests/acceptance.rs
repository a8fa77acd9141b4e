//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::f64::consts::{FRAC_PI_2, PI};
use std::time::{Duration, Instant};

use isomorph::engines::{polygon_reconstruct, MeshMorph, MorphOptions, SkeletonMorph};
use isomorph::generators::{gen_articulated_tube, gen_cycle_strip, gen_hinge, gen_sine_strip};
use isomorph::geom::build_dual;
use isomorph::quality::energy_q;
use isomorph::{align, encode, interp, Engine, Point, TriangleMesh, Vec3};
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

type Check = fn() -> Outcome;

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn lerp_lengths(l0: &[f64], l1: &[f64], t: f64) -> Vec<f64> {
    l0.iter()
        .zip(l1)
        .map(|(a, b)| (1.0 - t) * a + t * b)
        .collect()
}

fn polygon_exactness() -> Outcome {
    let start = Instant::now();
    let mut rng = common::rng(1001);
    let (mut worst_rel, mut worst_q_per_n): (f64, f64) = (0.0, 0.0);
    for _ in 0..100 {
        let n = rng.random_range(4..=200);
        let (m0, m1) = common::polygon_pair(n, &mut rng);
        let morph = MeshMorph::prepare(&m0, &m1, MorphOptions::new(Engine::Polygon)).unwrap();
        let (l0, l1) = (m0.edge_lengths(), m1.edge_lengths());
        for _ in 0..10 {
            let t = rng.random_range(0.0..=1.0);
            let r = morph.at(t).unwrap();
            let target = lerp_lengths(&l0, &l1, t);
            worst_rel = worst_rel.max(common::max_rel_length_error(&r.mesh, &target));
            worst_q_per_n = worst_q_per_n.max(energy_q(&r.mesh, &target).unwrap() / n as f64);
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst_rel <= 1e-9 && worst_q_per_n <= 1e-14 && elapsed < Duration::from_secs(10),
        format!(
            "max rel length error {worst_rel:.2e} (limit 1e-9), max Q/n {worst_q_per_n:.2e} (limit 1e-14), {:.2} s (limit 10 s)",
            elapsed.as_secs_f64()
        ),
    )
}

fn polygon_scaling() -> Outcome {
    let start = Instant::now();
    let mut rng = common::rng(1002);
    let mut per_element = Vec::new();
    for n in [1_000, 10_000, 100_000] {
        let (m0, m1) = common::polygon_pair(n, &mut rng);
        let dual = build_dual(&m0);
        let point = interp(&encode(&m0).unwrap(), &encode(&m1).unwrap(), 0.5).unwrap();
        let best = (0..5)
            .map(|_| {
                let s = Instant::now();
                polygon_reconstruct(&point, &m0, &dual).unwrap();
                s.elapsed()
            })
            .min()
            .unwrap();
        per_element.push(best.as_secs_f64() / n as f64);
    }
    let growth: Vec<f64> = per_element.windows(2).map(|w| w[1] / w[0]).collect();
    let elapsed = start.elapsed();
    let ok = growth.iter().all(|&g| g <= 2.5) && elapsed < Duration::from_secs(30);
    outcome(
        ok,
        format!(
            "time per vertex {:.2e} / {:.2e} / {:.2e} s, growth per decade {:.2} and {:.2} (limit 2.5), {:.2} s (limit 30 s)",
            per_element[0],
            per_element[1],
            per_element[2],
            growth[0],
            growth[1],
            elapsed.as_secs_f64()
        ),
    )
}

fn skeleton_exactness() -> Outcome {
    let mut rng = common::rng(1003);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let n = if i == 0 {
            500
        } else {
            rng.random_range(2..=500)
        };
        let sk0 = common::random_tree(n, &mut rng);
        let sk1 = common::bent_tree(&sk0, 1.2, &mut rng);
        let lengths = sk0.link_lengths();
        let morph = SkeletonMorph::prepare(&sk0, &sk1, false).unwrap();
        for k in 0..=10 {
            let r = morph.at(k as f64 / 10.0).unwrap();
            for (a, b) in r.skeleton.link_lengths().iter().zip(&lengths) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    // timing at n = 500
    let sk0 = common::random_tree(500, &mut rng);
    let sk1 = common::bent_tree(&sk0, 1.2, &mut rng);
    let morph = SkeletonMorph::prepare(&sk0, &sk1, true).unwrap();
    let points: Vec<_> = (0..100)
        .map(|k| morph.point_at(k as f64 / 99.0).unwrap())
        .collect();
    let s = Instant::now();
    for p in &points {
        isomorph::engines::skeleton_reconstruct(p, &sk0).unwrap();
    }
    let per_pose = s.elapsed() / points.len() as u32;
    outcome(
        worst <= 1e-12 && per_pose < Duration::from_millis(1),
        format!(
            "max link length drift {worst:.2e} (limit 1e-12), {:.1} µs per pose at n = 500 (limit 1 ms)",
            per_pose.as_secs_f64() * 1e6
        ),
    )
}

fn engine_equivalence() -> Outcome {
    let mut rng = common::rng(1004);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let n = rng.random_range(4..=120);
        let (m0, m1) = common::polygon_pair(n, &mut rng);
        let t = rng.random_range(0.0..=1.0);
        let results: Vec<TriangleMesh> = [Engine::Polygon, Engine::Exact, Engine::Averaging]
            .into_iter()
            .map(|e| {
                MeshMorph::prepare(&m0, &m1, MorphOptions::new(e))
                    .unwrap()
                    .at(t)
                    .unwrap()
                    .mesh
            })
            .collect();
        for i in 0..3 {
            for j in i + 1..3 {
                worst = worst.max(results[i].max_vertex_deviation(&results[j]));
            }
        }
    }
    outcome(
        worst <= 1e-9,
        format!("max pairwise vertex deviation {worst:.2e} (limit 1e-9)"),
    )
}

fn identity_fixed_point() -> Outcome {
    let mut rng = common::rng(1005);
    let ts = [0.0, 0.25, 0.5, 1.0];
    let polygons: Vec<TriangleMesh> = (0..20)
        .map(|_| {
            let n = rng.random_range(4..=80);
            common::Polygon::random(n, &mut rng).mesh()
        })
        .collect();
    let (band, _) = gen_cycle_strip();
    let (tube, _) = gen_articulated_tube(4, 5, 0.5).unwrap();
    let mut general: Vec<TriangleMesh> = vec![common::octahedron(), band, tube];
    for (w, h) in [(3, 3), (4, 3), (3, 5), (4, 4)] {
        general.push(common::grid(w, h, &mut rng));
    }
    general.extend(polygons.iter().take(20 - general.len()).cloned());

    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for (engine, meshes) in [
        (Engine::Polygon, &polygons),
        (Engine::Exact, &general),
        (Engine::Averaging, &general),
    ] {
        for (k, m) in meshes.iter().enumerate() {
            let morph = match MeshMorph::prepare(m, m, MorphOptions::new(engine)) {
                Ok(x) => x,
                Err(e) => {
                    failures.push(format!("{engine} mesh {k}: {e}"));
                    continue;
                }
            };
            for &t in &ts {
                match morph.at(t) {
                    Ok(r) => worst = worst.max(r.mesh.max_vertex_deviation(m)),
                    Err(e) => failures.push(format!("{engine} mesh {k} t={t}: {e}")),
                }
            }
        }
    }
    let mut sk_worst: f64 = 0.0;
    for _ in 0..20 {
        let n = rng.random_range(3..=200);
        let sk = common::random_tree(n, &mut rng);
        let morph = SkeletonMorph::prepare(&sk, &sk, true).unwrap();
        for &t in &ts {
            sk_worst = sk_worst.max(morph.at(t).unwrap().skeleton.max_joint_deviation(&sk));
        }
    }
    outcome(
        failures.is_empty() && worst <= 1e-9 && sk_worst <= 1e-9,
        format!(
            "max deviation {worst:.2e} over meshes, {sk_worst:.2e} over skeletons (limit 1e-9){}",
            if failures.is_empty() {
                String::new()
            } else {
                format!("; errors: {}", failures.join("; "))
            }
        ),
    )
}

fn cycle_strip_witness() -> Outcome {
    let (c0, c1) = gen_cycle_strip();
    let diameter = c0.diameter();
    let exact = MeshMorph::prepare(&c0, &c1, MorphOptions::new(Engine::Exact))
        .unwrap()
        .at(0.5)
        .unwrap();
    let spread = exact.candidate_stats.max_spread();
    let avg = MeshMorph::prepare(&c0, &c1, MorphOptions::new(Engine::Averaging))
        .unwrap()
        .at(0.5)
        .unwrap();
    let valid = avg.mesh.same_connectivity(&c0)
        && avg
            .mesh
            .vertices()
            .iter()
            .all(|p| p.coords.iter().all(|x| x.is_finite()))
        && (0..avg.mesh.face_count()).all(|f| avg.mesh.face_normal(f).is_ok());
    outcome(
        spread > 1e-3 * diameter && valid && avg.energy_q.is_finite(),
        format!(
            "exact candidate spread {spread:.3e} vs 1e-3 x diameter = {:.3e}; averaging Q = {:.3e}, mesh valid: {valid}",
            1e-3 * diameter,
            avg.energy_q
        ),
    )
}

fn hinge_beats_naive() -> Outcome {
    let (h0, h1) = (gen_hinge(PI), gen_hinge(FRAC_PI_2));
    let morph = MeshMorph::prepare(&h0, &h1, MorphOptions::new(Engine::Averaging)).unwrap();
    let target = morph.point_at(0.5).unwrap().edge_lengths;
    let q_avg = morph.at(0.5).unwrap().energy_q;
    let q_naive = energy_q(&common::naive_lerp(&h0, &h1, 0.5), &target).unwrap();
    // hand value: the free vertex lands at (0.5, -0.5, 0.5)
    let hand = 2.0 * (0.75f64.sqrt() - 1.25f64.sqrt()).powi(2);
    outcome(
        q_avg < q_naive && (q_naive - hand).abs() < 1e-12,
        format!("Q(averaging) = {q_avg:.3e} < Q(naive) = {q_naive:.6} (hand value {hand:.6})"),
    )
}

fn alignment_recovery() -> Outcome {
    let mut rng = common::rng(1008);
    let (mut rot_err, mut shift_err): (f64, f64) = (0.0, 0.0);
    let mut errors = 0;
    for _ in 0..1000 {
        let n = rng.random_range(3..=60);
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                Point::new(
                    common::gauss(&mut rng),
                    common::gauss(&mut rng),
                    common::gauss(&mut rng),
                )
            })
            .collect();
        let rot = common::random_rotation(&mut rng);
        let shift = Vec3::new(
            rng.random_range(-50.0..50.0),
            rng.random_range(-50.0..50.0),
            rng.random_range(-50.0..50.0),
        );
        let moved: Vec<Point> = pts
            .iter()
            .map(|p| Point::from(rot * p.coords + shift))
            .collect();
        match align(&pts, &moved) {
            Ok(tr) => {
                rot_err = rot_err.max((tr.rotation - rot).norm());
                shift_err = shift_err.max((tr.translation - shift).norm());
            }
            Err(_) => errors += 1,
        }
    }
    outcome(
        errors == 0 && rot_err <= 1e-9 && shift_err <= 1e-9,
        format!("max rotation error {rot_err:.2e}, max translation error {shift_err:.2e} (limit 1e-9), {errors} failures"),
    )
}

fn averaging_scale() -> Outcome {
    println!(
        "  note: the published averaging results (armadillo n=165954 Q=12277.92, human n=10002 Q=0.042674, \
         head n=11102 Q=0.003583) cannot be reproduced; those models and correspondences are not bundled, \
         so a synthetic bent tube stands in"
    );
    // how candidate counts grow with size on the same family of tubes
    for k in [20, 30, 40] {
        let (a, b) = gen_articulated_tube(k, k, 1.2).unwrap();
        let r = MeshMorph::prepare(&a, &b, MorphOptions::new(Engine::Averaging))
            .and_then(|m| m.at(0.5));
        if let Ok(r) = r {
            println!(
                "  tube n = {:>5}: {:>9} candidates, at most {:>7} on one vertex",
                a.vertex_count(),
                r.candidate_stats.total(),
                r.candidate_stats.max_count()
            );
        }
    }
    let (t0, t1) = gen_articulated_tube(100, 100, 1.2).unwrap();
    let start = Instant::now();
    let result =
        MeshMorph::prepare(&t0, &t1, MorphOptions::new(Engine::Averaging)).and_then(|m| m.at(0.5));
    let elapsed = start.elapsed();
    match result {
        Ok(r) => outcome(
            elapsed < Duration::from_secs(60),
            format!(
                "tube n = {}: {:.2} s (limit 60 s), Q = {:.3e}, {} candidates",
                t0.vertex_count(),
                elapsed.as_secs_f64(),
                r.energy_q,
                r.candidate_stats.total()
            ),
        ),
        Err(e) => outcome(
            false,
            format!(
                "tube n = {}: failed after {:.2} s: {e}",
                t0.vertex_count(),
                elapsed.as_secs_f64()
            ),
        ),
    }
}

fn sine_strip_continuity() -> Outcome {
    let a = gen_sine_strip(100, 1.0, 0.5).unwrap();
    let b = gen_sine_strip(100, -1.0, 0.5).unwrap();
    let morph = MeshMorph::prepare(
        &a,
        &b,
        MorphOptions::new(Engine::Polygon).without_alignment(),
    )
    .unwrap();
    let diameter = a.diameter();
    let dt = 1e-4;
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        let t = k as f64 / 100.0 * (1.0 - dt);
        let (p, q) = (morph.at(t).unwrap(), morph.at(t + dt).unwrap());
        worst = worst.max(p.mesh.max_vertex_deviation(&q.mesh));
    }
    outcome(
        worst < 1e-2 * diameter,
        format!(
            "max displacement over dt = 1e-4 is {worst:.3e} vs 1e-2 x diameter = {:.3e}",
            1e-2 * diameter
        ),
    )
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("polygon exactness", polygon_exactness),
        ("polygon scaling", polygon_scaling),
        ("skeleton exactness", skeleton_exactness),
        ("engine equivalence", engine_equivalence),
        ("identity fixed point", identity_fixed_point),
        ("cycle strip impossibility", cycle_strip_witness),
        ("averaging beats naive", hinge_beats_naive),
        ("alignment recovery", alignment_recovery),
        ("averaging at n = 10^4", averaging_scale),
        ("sine strip continuity", sine_strip_continuity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<26} {}  {}",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
