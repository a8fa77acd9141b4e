use crate::error::{MorphError, Result};
use crate::geom::{third_vertex, DualGraph, DualTree, Point, TriangleMesh};
use crate::shape_space::{anchor_of, ShapePoint};

use super::{decode, face_step, finish, seed, CandidateStats, MorphResult};

/// Exact reconstruction for meshes whose dual graph is a tree.
///
/// The anchor vertex and edge fix the root face; every other vertex is
/// placed once, as the apex of the face through which the traversal first
/// reaches it.
pub fn polygon_reconstruct(
    point: &ShapePoint,
    structure: &TriangleMesh,
    dual: &DualGraph,
) -> Result<MorphResult> {
    if !dual.is_tree() {
        return Err(MorphError::WrongEngine(format!(
            "the polygon engine needs a tree-shaped dual graph; this one has {} cycle(s) and {} component(s)",
            dual.cycle_rank(),
            dual.component_count()
        )));
    }
    let (_, root) = anchor_of(structure)?;
    let tree = DualTree::whole(dual, root)?;
    traverse(point, structure, dual, &tree)
}

pub(super) fn traverse(
    point: &ShapePoint,
    structure: &TriangleMesh,
    dual: &DualGraph,
    tree: &DualTree,
) -> Result<MorphResult> {
    let decoded = decode(point, structure, tree)?;
    check_faces(point, structure)?;
    let lengths = &point.edge_lengths;

    let mut positions: Vec<Option<Point>> = vec![None; structure.vertex_count()];
    for (v, p) in seed(point, structure, &decoded, true)? {
        positions[v] = Some(p);
    }
    for step in tree.steps() {
        let fs = face_step(structure, lengths, step.to, dual.arc(step.arc).edge);
        // only reachable twice when a vertex is pinched between separate fans
        if positions[fs.apex].is_some() {
            continue;
        }
        let pa = positions[fs.a].expect("parent face is placed");
        let pb = positions[fs.b].expect("parent face is placed");
        positions[fs.apex] = Some(third_vertex(
            &pa,
            &pb,
            fs.len_a,
            fs.len_b,
            &decoded.normals[step.to],
        )?);
    }
    let positions = positions
        .into_iter()
        .enumerate()
        .map(|(v, p)| {
            p.ok_or_else(|| MorphError::InvalidMesh(format!("vertex {v} is not part of any face")))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = positions.len();
    finish(
        point,
        structure,
        positions,
        CandidateStats::single(n),
        Vec::new(),
    )
}

fn check_faces(point: &ShapePoint, structure: &TriangleMesh) -> Result<()> {
    for face in 0..structure.face_count() {
        let l = structure.face_edges(face).map(|e| point.edge_lengths[e]);
        let sum: f64 = l.iter().sum();
        let longest = l.iter().copied().fold(f64::MIN, f64::max);
        if !(l.iter().all(|&x| x > 0.0) && longest - (sum - longest) <= 1e-12 * sum) {
            return Err(MorphError::TriangleInequality { face });
        }
    }
    Ok(())
}
