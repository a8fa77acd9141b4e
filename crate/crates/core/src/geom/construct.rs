//! Placing the apex of a triangle from its base, two side lengths and a normal.

use crate::error::{MorphError, Result};
use crate::geom::{Point, Vec3};

/// Below this relative size the projected normal is treated as parallel to the base.
const PARALLEL_TOLERANCE: f64 = 1e-12;

/// Apex `p2` of the counterclockwise triangle `(p0, p1, p2)` whose outer
/// normal is `normal`, with `‖p2 − p0‖ = l_02` and `‖p2 − p1‖ = l_12`.
///
/// The normal is first projected onto the plane orthogonal to the base
/// `p1 − p0` and renormalized. If the lengths violate the triangle
/// inequality the apex height is clamped to zero, which leaves the apex on
/// the base line.
pub fn third_vertex(p0: &Point, p1: &Point, l_02: f64, l_12: f64, normal: &Vec3) -> Result<Point> {
    let (e, base) = base_frame(p0, p1)?;
    let n = project_normal(&e, normal).ok_or(MorphError::DegenerateNormal)?;
    Ok(apex(p0, &e, base, &n, l_02, l_12))
}

/// Like [`third_vertex`], but never fails: a normal parallel to the base is
/// replaced by a fixed perpendicular, and a zero-length base by a fixed
/// direction orthogonal to the normal.
pub(crate) fn third_vertex_lenient(
    p0: &Point,
    p1: &Point,
    l_02: f64,
    l_12: f64,
    normal: &Vec3,
) -> Point {
    let (e, base) = match base_frame(p0, p1) {
        Ok(frame) => frame,
        Err(_) => (any_perpendicular(normal), 0.0),
    };
    let n = project_normal(&e, normal).unwrap_or_else(|| any_perpendicular(&e));
    apex(p0, &e, base, &n, l_02, l_12)
}

fn base_frame(p0: &Point, p1: &Point) -> Result<(Vec3, f64)> {
    let d = p1 - p0;
    let base = d.norm();
    if base == 0.0 || !base.is_finite() {
        return Err(MorphError::DegenerateBase);
    }
    Ok((d / base, base))
}

fn project_normal(e: &Vec3, normal: &Vec3) -> Option<Vec3> {
    let scale = normal.norm();
    let n = normal - e * e.dot(normal);
    let len = n.norm();
    if !(len > PARALLEL_TOLERANCE * scale) {
        return None;
    }
    Some(n / len)
}

fn any_perpendicular(e: &Vec3) -> Vec3 {
    let axis = if e.x.abs() <= e.y.abs() && e.x.abs() <= e.z.abs() {
        Vec3::x()
    } else if e.y.abs() <= e.z.abs() {
        Vec3::y()
    } else {
        Vec3::z()
    };
    e.cross(&axis).normalize()
}

fn apex(p0: &Point, e: &Vec3, base: f64, n: &Vec3, l_02: f64, l_12: f64) -> Point {
    let along = if base > 0.0 {
        (base * base + l_02 * l_02 - l_12 * l_12) / (2.0 * base)
    } else {
        0.0
    };
    let h2 = l_02 * l_02 - along * along;
    let height = if h2 > 0.0 { h2.sqrt() } else { 0.0 };
    // (e, n × e, n) is right-handed, so the apex lies on the side that makes
    // (p0, p1, p2) counterclockwise about n
    let up = n.cross(e);
    p0 + e * along + up * height
}
