//! Isometric morphing between two poses of a triangle mesh or skeleton.
//!
//! Each pose is encoded as a point in an intrinsic shape space (an anchor
//! vertex, an anchor edge direction, every edge length and every face
//! normal). Morphing interpolates those points linearly, with SLERP for the
//! directions, and rebuilds a pose by walking the face-adjacency graph.
//! Nothing is minimized numerically.
//!
//! * [`engines::polygon_reconstruct`] is exact for triangulated 3D polygons
//!   (meshes without interior vertices).
//! * [`engines::skeleton_reconstruct`] is exact for skeletons.
//! * [`engines::exponential_reconstruct`] and [`engines::averaging_reconstruct`]
//!   handle general connected meshes by averaging candidate positions along a
//!   minimum spanning tree of the dual graph.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod align;
pub mod cli;
pub mod engines;
pub mod error;
pub mod generators;
pub mod geom;
pub mod io;
pub mod quality;
pub mod shape_space;

pub use align::{align, RigidTransform};
pub use engines::{morph_sequence, morph_skeleton_sequence, Engine, MorphOptions, MorphResult};
pub use error::{MorphError, Result};
pub use geom::{Point, Skeleton, SphericalDir, TriangleMesh, Vec3};
pub use shape_space::{
    encode, encode_skeleton, interp, interp_skeleton, ShapePoint, SkeletonShapePoint,
};
