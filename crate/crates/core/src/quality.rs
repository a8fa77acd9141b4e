//! Isometry energy and per-morph quality reports.

use std::time::{Duration, Instant};

use crate::engines::MorphResult;
use crate::error::{MorphError, Result};
use crate::geom::sphere::angle_between;
use crate::geom::TriangleMesh;
use crate::shape_space::ShapePoint;

pub const CSV_HEADER: &str = "name,n,time_sec,q,max_rel_edge_err,mean_normal_dev";

/// `Q = Σ_e (‖v₀(e) − v₁(e)‖ − l(e))²`, summed in edge order.
pub fn energy_q(mesh: &TriangleMesh, target_lengths: &[f64]) -> Result<f64> {
    if target_lengths.len() != mesh.edge_count() {
        return Err(MorphError::StructureMismatch(format!(
            "{} target lengths for {} edges",
            target_lengths.len(),
            mesh.edge_count()
        )));
    }
    Ok((0..mesh.edge_count())
        .map(|e| (mesh.edge_length(e) - target_lengths[e]).powi(2))
        .sum())
}

/// Largest `|realized − target| / target` over all edges.
pub fn max_rel_edge_error(mesh: &TriangleMesh, target_lengths: &[f64]) -> f64 {
    (0..mesh.edge_count())
        .map(|e| (mesh.edge_length(e) - target_lengths[e]).abs() / target_lengths[e])
        .fold(0.0, f64::max)
}

/// Mean angle between realized and stored face normals. Faces with zero
/// realized area count as deviating by π/2.
pub fn mean_normal_deviation(mesh: &TriangleMesh, point: &ShapePoint) -> f64 {
    let n = mesh.face_count();
    if n == 0 {
        return 0.0;
    }
    let total: f64 = (0..n)
        .map(|f| match mesh.face_normal(f) {
            Ok(realized) => angle_between(&realized, &point.face_normals[f].to_unit()),
            Err(_) => std::f64::consts::FRAC_PI_2,
        })
        .sum();
    total / n as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct MorphReport {
    pub q: f64,
    pub max_rel_edge_error: f64,
    /// Radians.
    pub mean_normal_deviation: f64,
    /// Seconds.
    pub wall_time: f64,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_faces: usize,
}

impl MorphReport {
    /// One CSV row matching [`CSV_HEADER`].
    pub fn csv_row(&self, name: &str) -> String {
        format!(
            "{},{},{:.6e},{:.17e},{:.17e},{:.17e}",
            name,
            self.n_vertices,
            self.wall_time,
            self.q,
            self.max_rel_edge_error,
            self.mean_normal_deviation
        )
    }
}

pub fn report(result: &MorphResult, point: &ShapePoint, elapsed: Duration) -> Result<MorphReport> {
    let mesh = &result.mesh;
    Ok(MorphReport {
        q: energy_q(mesh, &point.edge_lengths)?,
        max_rel_edge_error: max_rel_edge_error(mesh, &point.edge_lengths),
        mean_normal_deviation: mean_normal_deviation(mesh, point),
        wall_time: elapsed.as_secs_f64(),
        n_vertices: mesh.vertex_count(),
        n_edges: mesh.edge_count(),
        n_faces: mesh.face_count(),
    })
}

/// Runs `f` once to warm up, then times a second run and returns its output.
pub fn timed<T>(mut f: impl FnMut() -> T) -> (T, Duration) {
    drop(f());
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}
