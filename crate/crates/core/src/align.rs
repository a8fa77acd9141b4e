//! Least-squares rigid alignment of corresponding point sets.
//!
//! The end pose is aligned onto the start pose before encoding, because the
//! relative orientation of the two poses changes the interpolated normals.

use nalgebra::Matrix3;

use crate::error::{MorphError, Result};
use crate::geom::{Point, Skeleton, TriangleMesh, Vec3};

/// Relative size of the second principal extent below which a point set is
/// treated as collinear.
const COLLINEAR_TOLERANCE: f64 = 1e-12;

/// `p ↦ R·p + τ` with `R` a proper rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidTransform {
    pub rotation: Matrix3<f64>,
    pub translation: Vec3,
}

impl Default for RigidTransform {
    fn default() -> Self {
        Self::identity()
    }
}

impl RigidTransform {
    pub fn identity() -> Self {
        Self {
            rotation: Matrix3::identity(),
            translation: Vec3::zeros(),
        }
    }

    pub fn new(rotation: Matrix3<f64>, translation: Vec3) -> Self {
        Self {
            rotation,
            translation,
        }
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        Point::from(self.rotation * p.coords + self.translation)
    }

    /// Sum of squared distances between transformed `source` and `target`.
    pub fn residual(&self, source: &[Point], target: &[Point]) -> f64 {
        source
            .iter()
            .zip(target)
            .map(|(s, t)| (self.apply_point(s) - t).norm_squared())
            .sum()
    }
}

/// Proper rigid transform minimizing `Σ ‖R·sourceᵢ + τ − targetᵢ‖²`.
///
/// Centroids are removed, the cross-covariance is factored by SVD, and the
/// nearest orthogonal factor is corrected to determinant +1 by flipping the
/// axis with the smallest singular value.
pub fn align(source: &[Point], target: &[Point]) -> Result<RigidTransform> {
    if source.len() != target.len() {
        return Err(MorphError::StructureMismatch(format!(
            "{} source points but {} target points",
            source.len(),
            target.len()
        )));
    }
    if source.len() < 3 {
        return Err(MorphError::UnderdeterminedAlignment(format!(
            "need at least 3 points, got {}",
            source.len()
        )));
    }
    let cs = centroid(source);
    let ct = centroid(target);

    let mut scatter = Matrix3::zeros();
    let mut cov = Matrix3::zeros();
    for (s, t) in source.iter().zip(target) {
        let ds = s - cs;
        let dt = t - ct;
        scatter += ds * ds.transpose();
        cov += ds * dt.transpose();
    }
    let mut extents: Vec<f64> = scatter.symmetric_eigenvalues().iter().copied().collect();
    extents.sort_by(|a, b| b.total_cmp(a));
    if !(extents[1] > COLLINEAR_TOLERANCE * extents[0]) {
        return Err(MorphError::UnderdeterminedAlignment(
            "source points are collinear or coincident".into(),
        ));
    }

    let svd = cov.svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested Vᵀ");
    let v = v_t.transpose();
    let mut correction = Matrix3::identity();
    if (v * u.transpose()).determinant() < 0.0 {
        let weakest = svd
            .singular_values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap();
        correction[(weakest, weakest)] = -1.0;
    }
    let rotation = v * correction * u.transpose();
    let translation = ct.coords - rotation * cs.coords;
    Ok(RigidTransform {
        rotation,
        translation,
    })
}

fn centroid(points: &[Point]) -> Point {
    let sum = points.iter().fold(Vec3::zeros(), |acc, p| acc + p.coords);
    Point::from(sum / points.len() as f64)
}

/// Geometry that a rigid transform can move without touching connectivity.
pub trait Transformable: Sized {
    fn transformed(&self, transform: &RigidTransform) -> Self;
}

impl Transformable for TriangleMesh {
    fn transformed(&self, transform: &RigidTransform) -> Self {
        let moved = self
            .vertices()
            .iter()
            .map(|p| transform.apply_point(p))
            .collect();
        self.with_vertices(moved).expect("same vertex count")
    }
}

impl Transformable for Skeleton {
    fn transformed(&self, transform: &RigidTransform) -> Self {
        let moved = self
            .joints()
            .iter()
            .map(|p| transform.apply_point(p))
            .collect();
        self.with_joints(moved).expect("same joint count")
    }
}

impl Transformable for Vec<Point> {
    fn transformed(&self, transform: &RigidTransform) -> Self {
        self.iter().map(|p| transform.apply_point(p)).collect()
    }
}

pub fn apply<T: Transformable>(transform: &RigidTransform, shape: &T) -> T {
    shape.transformed(transform)
}
