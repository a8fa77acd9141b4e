//! Geometric building blocks shared by every engine: meshes, dual graphs,
//! skeletons, directions on the sphere, and the apex construction.

pub mod construct;
pub mod dual;
pub mod mesh;
pub mod skeleton;
pub mod sphere;

pub use construct::third_vertex;
pub use dual::{build_dual, dihedral_angle, DualArc, DualGraph, DualTree, TreeStep};
pub use mesh::TriangleMesh;
pub use skeleton::Skeleton;
pub use sphere::{dir_to_spherical, slerp, spherical_to_dir, SphericalDir};

/// A position in model units.
pub type Point = nalgebra::Point3<f64>;
/// A displacement or direction.
pub type Vec3 = nalgebra::Vector3<f64>;
