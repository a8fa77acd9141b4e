//! Directions on the unit sphere: spherical coordinates and SLERP.

use std::f64::consts::{PI, TAU};

use crate::error::{MorphError, Result};
use crate::geom::Vec3;

/// Tolerance on `‖d‖ − 1` for a vector to count as a unit direction.
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// Directions closer than this to antipodal have no unique great circle.
pub const ANTIPODAL_TOLERANCE: f64 = 1e-9;

/// A unit direction as azimuth `u ∈ [0, 2π)` and inclination `v ∈ [0, π]`.
///
/// The direction is `[sin v cos u, sin v sin u, cos v]`. At the poles the
/// azimuth is fixed to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalDir {
    pub u: f64,
    pub v: f64,
}

impl SphericalDir {
    pub fn new(u: f64, v: f64) -> Self {
        Self { u, v }
    }

    /// Unit vector pointing in this direction.
    pub fn to_unit(self) -> Vec3 {
        spherical_to_dir(self)
    }
}

pub fn dir_to_spherical(d: &Vec3) -> Result<SphericalDir> {
    let norm = d.norm();
    if !norm.is_finite() || (norm - 1.0).abs() > UNIT_TOLERANCE {
        return Err(MorphError::InvalidDirection { norm });
    }
    let planar = d.x.hypot(d.y);
    let v = planar.atan2(d.z);
    if planar == 0.0 {
        return Ok(SphericalDir { u: 0.0, v });
    }
    let mut u = d.y.atan2(d.x);
    if u < 0.0 {
        u += TAU;
    }
    // atan2 can return exactly -0.0 or values that round to 2π after the shift
    if u >= TAU {
        u = 0.0;
    }
    Ok(SphericalDir { u, v })
}

pub fn spherical_to_dir(s: SphericalDir) -> Vec3 {
    let (sv, cv) = s.v.sin_cos();
    let (su, cu) = s.u.sin_cos();
    Vec3::new(sv * cu, sv * su, cv)
}

/// Normalizes `d`, rejecting zero or non-finite vectors.
pub fn unit(d: &Vec3) -> Result<Vec3> {
    let norm = d.norm();
    if !norm.is_finite() || norm == 0.0 {
        return Err(MorphError::InvalidDirection { norm });
    }
    Ok(d / norm)
}

/// Angle between two unit vectors, accurate near 0 and π.
pub fn angle_between(a: &Vec3, b: &Vec3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

/// Spherical linear interpolation along the shorter great circle.
///
/// Returns `d0` at `t = 0` and `d1` at `t = 1` bit for bit.
pub fn slerp(d0: &Vec3, d1: &Vec3, t: f64) -> Result<Vec3> {
    for d in [d0, d1] {
        let norm = d.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > UNIT_TOLERANCE {
            return Err(MorphError::InvalidDirection { norm });
        }
    }
    let theta = angle_between(d0, d1);
    if theta > PI - ANTIPODAL_TOLERANCE {
        return Err(MorphError::AmbiguousSlerp { face: None });
    }
    if t == 0.0 || theta == 0.0 {
        return Ok(*d0);
    }
    if t == 1.0 {
        return Ok(*d1);
    }
    let out = if theta < 1e-8 {
        // sin Θ underflows the ratio; the chord and the arc agree to O(Θ³)
        d0 * (1.0 - t) + d1 * t
    } else {
        let s = theta.sin();
        d0 * (((1.0 - t) * theta).sin() / s) + d1 * ((t * theta).sin() / s)
    };
    Ok(out.normalize())
}
