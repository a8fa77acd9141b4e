use crate::error::{MorphError, Result};
use crate::geom::Skeleton;
use crate::shape_space::SkeletonShapePoint;

/// Places the root, then every child at `parent + length · direction`,
/// walking the links depth first.
pub fn skeleton_reconstruct(point: &SkeletonShapePoint, structure: &Skeleton) -> Result<Skeleton> {
    let links = structure.links();
    if point.link_lengths.len() != links.len() || point.link_dirs.len() != links.len() {
        return Err(MorphError::StructureMismatch(format!(
            "shape point has {} lengths and {} directions for {} links",
            point.link_lengths.len(),
            point.link_dirs.len(),
            links.len()
        )));
    }
    let mut joints = structure.joints().to_vec();
    joints[structure.root()] = point.root_pos;
    for (i, &(parent, child)) in links.iter().enumerate() {
        joints[child] = joints[parent] + point.link_dirs[i].to_unit() * point.link_lengths[i];
    }
    structure.with_joints(joints)
}
