use crate::error::{MorphError, Result};
use crate::geom::construct::third_vertex_lenient;
use crate::geom::{DualGraph, DualTree, TriangleMesh};
use crate::shape_space::ShapePoint;

use super::{decode, face_step, finish, resolve, seed, ArcStep, CandidateSet, MorphResult};

/// Reconstruction that propagates every combination of candidates.
///
/// Crossing a tree arc whose shared edge has `d1` and `d2` candidates at its
/// endpoints adds `d1·d2` apex candidates, one per pair. Each vertex ends up
/// at the mean of its candidates. When the interpolated data is realizable
/// by a mesh, all candidates of a vertex coincide and that mesh is returned.
///
/// The candidate count can grow exponentially with the tree depth, so the
/// total is capped by `budget`.
pub fn exponential_reconstruct(
    point: &ShapePoint,
    structure: &TriangleMesh,
    dual: &DualGraph,
    tree: &DualTree,
    budget: usize,
) -> Result<MorphResult> {
    if budget < 3 {
        return Err(MorphError::Config(format!(
            "candidate budget {budget} cannot hold the three seed vertices"
        )));
    }
    traverse(point, structure, dual, tree, budget)
}

pub(super) fn traverse(
    point: &ShapePoint,
    structure: &TriangleMesh,
    dual: &DualGraph,
    tree: &DualTree,
    budget: usize,
) -> Result<MorphResult> {
    let decoded = decode(point, structure, tree)?;
    let mut cands = CandidateSet::new(structure.vertex_count());
    for (v, p) in seed(point, structure, &decoded, false)? {
        cands.push(v, p);
    }

    let mut trace = Vec::with_capacity(tree.steps().len());
    let mut fresh = Vec::new();
    for step in tree.steps() {
        let fs = face_step(
            structure,
            &point.edge_lengths,
            step.to,
            dual.arc(step.arc).edge,
        );
        let (d1, d2) = (cands.count(fs.a), cands.count(fs.b));
        let added = d1.saturating_mul(d2);
        let projected = cands.total().saturating_add(added);
        if projected > budget {
            return Err(MorphError::BudgetExceeded {
                arc: step.arc,
                projected,
                budget,
            });
        }
        let normal = &decoded.normals[step.to];
        fresh.clear();
        for pa in cands.candidates(fs.a) {
            for pb in cands.candidates(fs.b) {
                fresh.push(third_vertex_lenient(pa, pb, fs.len_a, fs.len_b, normal));
            }
        }
        for p in fresh.drain(..) {
            cands.push(fs.apex, p);
        }
        trace.push(ArcStep {
            arc: step.arc,
            apex: fs.apex,
            d1,
            d2,
            added,
        });
    }
    let positions = resolve(&cands)?;
    finish(point, structure, positions, cands.stats(), trace)
}
