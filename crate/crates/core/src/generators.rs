//! Synthetic pose pairs for tests, examples and benchmarks.

use std::f64::consts::{PI, TAU};

use crate::error::{MorphError, Result};
use crate::geom::{Point, TriangleMesh, Vec3};

/// A zigzag strip following `y = amplitude · sin(x)` for `x ∈ [0, 2π]`,
/// thickened along `z`.
///
/// Vertex `2i` lies at `z = 0` and `2i + 1` at `z = thickness`. The result is
/// a triangulated 3D polygon with `2(n_segments + 1)` vertices, so its dual
/// graph is a path. Strips with amplitudes `a` and `−a` are mirror images
/// and therefore isometric.
pub fn gen_sine_strip(n_segments: usize, amplitude: f64, thickness: f64) -> Result<TriangleMesh> {
    if n_segments < 2 {
        return Err(MorphError::Config(format!(
            "sine strip needs at least 2 segments, got {n_segments}"
        )));
    }
    if !(thickness > 0.0) {
        return Err(MorphError::Config(
            "strip thickness must be positive".into(),
        ));
    }
    let mut vertices = Vec::with_capacity(2 * (n_segments + 1));
    for i in 0..=n_segments {
        let x = TAU * i as f64 / n_segments as f64;
        let y = amplitude * x.sin();
        vertices.push(Point::new(x, y, 0.0));
        vertices.push(Point::new(x, y, thickness));
    }
    let mut faces = Vec::with_capacity(2 * n_segments);
    for i in 0..n_segments {
        let (b, t, b1, t1) = (2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3);
        faces.push([b, b1, t1]);
        faces.push([b, t1, t]);
    }
    TriangleMesh::new(vertices, faces)
}

/// Vertical band of unit height around a closed equilateral pentagon.
fn pentagon_band(ring: &[Point; 5]) -> Result<TriangleMesh> {
    let mut vertices = Vec::with_capacity(10);
    for p in ring {
        vertices.push(*p);
        vertices.push(p + Vec3::z());
    }
    let mut faces = Vec::with_capacity(10);
    for i in 0..5 {
        let j = (i + 1) % 5;
        let (b, t, b1, t1) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
        faces.push([b, b1, t1]);
        faces.push([b, t1, t]);
    }
    TriangleMesh::new(vertices, faces)
}

/// Two isometric poses of a closed band whose dual graph is a single cycle.
///
/// The band has five flat rectangular walls over an equilateral pentagon.
/// The start pose uses the regular pentagon; the end pose flexes the
/// pentagon (walls keep their shape, the corner angles change). Halfway
/// between them, the interpolated wall normals turn the walls by amounts
/// that no closed pentagon with unit sides can realize, so no mesh matches
/// all interpolated lengths and normals.
pub fn gen_cycle_strip() -> (TriangleMesh, TriangleMesh) {
    let regular = pentagon_with_turns(0.0, 0.0);
    let flexed = pentagon_with_turns(35f64.to_radians(), -15f64.to_radians());
    (
        pentagon_band(&regular).expect("valid band"),
        pentagon_band(&flexed).expect("valid band"),
    )
}

/// Equilateral pentagon with `P0 = (0,0)`, `P1 = (1,0)`, counterclockwise.
/// The interior angles at `P1` and `P0` are opened by `d1` and `d0` radians
/// from the regular 108°, and `P3` closes the loop.
fn pentagon_with_turns(d1: f64, d0: f64) -> [Point; 5] {
    let interior = 3.0 * PI / 5.0;
    let p0 = Point::new(0.0, 0.0, 0.0);
    let p1 = Point::new(1.0, 0.0, 0.0);
    let a1 = PI - (interior + d1);
    let p2 = p1 + Vec3::new(a1.cos(), a1.sin(), 0.0);
    let a0 = interior + d0;
    let p4 = p0 + Vec3::new(a0.cos(), a0.sin(), 0.0);
    // P3 sits on both unit circles around P2 and P4, on the far side of P2P4
    let mid = Point::from((p2.coords + p4.coords) / 2.0);
    let half = (p4 - p2).norm() / 2.0;
    let along = (p4 - p2).normalize();
    let out = Vec3::new(-along.y, along.x, 0.0);
    let p3 = mid - out * (1.0 - half * half).sqrt();
    [p0, p1, p2, p3, p4]
}

/// Open cylindrical tube of radius 1 and length 8 along `z`, with an elbow.
///
/// Returns `(straight, bent)`. In the bent pose the middle half of the
/// centerline follows a circular arc turning by `bend` radians about the `x`
/// axis, with the rings kept perpendicular to it. The straight parts are
/// rigidly moved; only the elbow stretches (outer side) and compresses
/// (inner side), by a relative amount of about `bend / 4`.
pub fn gen_articulated_tube(
    rings: usize,
    segments: usize,
    bend: f64,
) -> Result<(TriangleMesh, TriangleMesh)> {
    if rings < 2 || segments < 3 {
        return Err(MorphError::Config(format!(
            "tube needs at least 2 rings and 3 segments, got {rings} and {segments}"
        )));
    }
    let length = 8.0;
    let (elbow_start, elbow_len) = (length / 4.0, length / 2.0);
    if !(bend.abs() < elbow_len) {
        return Err(MorphError::Config(format!(
            "bend {bend} would fold the inner wall of the elbow"
        )));
    }
    let kappa = bend / elbow_len;
    // centerline point and ring rotation angle at arc length s
    let frame = |s: f64| -> (Vec3, f64) {
        let arc = (s - elbow_start).clamp(0.0, elbow_len);
        let theta = kappa * arc;
        let (st, ct) = theta.sin_cos();
        let (dy, dz) = if kappa == 0.0 {
            (0.0, arc)
        } else {
            ((ct - 1.0) / kappa, st / kappa)
        };
        let mut c = Vec3::new(0.0, dy, elbow_start.min(s) + dz);
        let beyond = s - elbow_start - elbow_len;
        if beyond > 0.0 {
            c += Vec3::new(0.0, -st, ct) * beyond;
        }
        (c, theta)
    };
    let mut straight = Vec::with_capacity(rings * segments);
    let mut bent = Vec::with_capacity(rings * segments);
    for r in 0..rings {
        let s = length * r as f64 / (rings - 1) as f64;
        let (c, theta) = frame(s);
        let (st, ct) = theta.sin_cos();
        for k in 0..segments {
            let (y, x) = (TAU * k as f64 / segments as f64).sin_cos();
            straight.push(Point::new(x, y, s));
            bent.push(Point::from(c + Vec3::new(x, y * ct, y * st)));
        }
    }
    let mut faces = Vec::with_capacity(2 * (rings - 1) * segments);
    for r in 0..rings - 1 {
        for k in 0..segments {
            let k1 = (k + 1) % segments;
            let a = r * segments + k;
            let b = r * segments + k1;
            let c = (r + 1) * segments + k1;
            let d = (r + 1) * segments + k;
            faces.push([a, b, c]);
            faces.push([a, c, d]);
        }
    }
    let m0 = TriangleMesh::new(straight, faces.clone())?;
    let m1 = TriangleMesh::new(bent, faces)?;
    Ok((m0, m1))
}

/// Two triangles sharing the edge from `(0,0,0)` to `(1,0,0)`, opened to
/// `opening` radians (π is flat).
pub fn gen_hinge(opening: f64) -> TriangleMesh {
    let fixed = Point::new(0.5, 1.0, 0.0);
    // the free wing starts flat at -y and swings up towards +y
    let swing = PI - opening;
    let free = Point::new(0.5, -swing.cos(), swing.sin());
    TriangleMesh::new(
        vec![Point::origin(), Point::new(1.0, 0.0, 0.0), fixed, free],
        vec![[0, 1, 2], [1, 0, 3]],
    )
    .expect("valid hinge")
}
