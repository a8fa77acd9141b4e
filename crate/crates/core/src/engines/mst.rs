//! Minimum spanning tree of the dual graph weighted by dihedral-angle change.

use crate::error::{MorphError, Result};
use crate::geom::dual::DisjointSets;
use crate::geom::{dihedral_angle, DualGraph, DualTree, TriangleMesh};
use crate::shape_space::anchor_of;

/// `|dihedral₀(e) − dihedral₁(e)|` for every dual arc.
pub fn arc_weights(
    dual: &DualGraph,
    pose0: &TriangleMesh,
    pose1: &TriangleMesh,
) -> Result<Vec<f64>> {
    if !pose0.same_connectivity(pose1) {
        return Err(MorphError::StructureMismatch(
            "poses do not share connectivity".into(),
        ));
    }
    if dual.node_count() != pose0.face_count() {
        return Err(MorphError::StructureMismatch(
            "dual graph was built from a different mesh".into(),
        ));
    }
    dual.arcs()
        .iter()
        .map(|a| Ok((dihedral_angle(pose0, a.edge)? - dihedral_angle(pose1, a.edge)?).abs()))
        .collect()
}

/// Kruskal over arcs sorted by `(weight, arc index)`, rooted at the face
/// holding the anchor edge.
///
/// Equal weights resolve to the lower arc index, so identical poses give
/// the same tree every time.
pub fn build_mst(dual: &DualGraph, pose0: &TriangleMesh, pose1: &TriangleMesh) -> Result<DualTree> {
    let weights = arc_weights(dual, pose0, pose1)?;
    let (_, root) = anchor_of(pose0)?;
    mst_from_weights(dual, weights, root)
}

pub fn mst_from_weights(dual: &DualGraph, weights: Vec<f64>, root: usize) -> Result<DualTree> {
    let mut order: Vec<usize> = (0..dual.arc_count()).collect();
    order.sort_by(|&a, &b| weights[a].total_cmp(&weights[b]).then(a.cmp(&b)));

    let mut sets = DisjointSets::new(dual.node_count());
    let mut chosen = Vec::with_capacity(dual.node_count().saturating_sub(1));
    for a in order {
        let arc = dual.arc(a);
        if sets.union(arc.faces[0], arc.faces[1]) {
            chosen.push(a);
        }
    }
    if sets.count() > 1 {
        return Err(MorphError::DisconnectedMesh {
            components: sets.count(),
        });
    }
    DualTree::from_arcs(dual, chosen, root, weights)
}
