use crate::error::{MorphError, Result};
use crate::geom::construct::third_vertex_lenient;
use crate::geom::{DualGraph, DualTree, TriangleMesh};
use crate::shape_space::ShapePoint;

use super::{decode, face_step, finish, resolve, seed, ArcStep, CandidateSet, MorphResult};

/// Reconstruction with a linear number of candidates per vertex.
///
/// The tree is walked depth first and each arc is crossed once. Of the two
/// endpoints of the shared edge, the one updated more recently contributes
/// only its newest candidate, which is paired with every candidate of the
/// other endpoint, so `d2` apex candidates are added per arc. Each vertex
/// ends up at the mean of its candidates.
///
/// Counts can still compound when a vertex is reached again through a
/// later face, since it inherits the whole candidate list of its partner;
/// the run stops with [`MorphError::BudgetExceeded`] before the total would
/// pass `budget`.
pub fn averaging_reconstruct(
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
    // seeds go in as anchor, anchor-edge end, root apex; the stamps that
    // decide recency never tie
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
        let a_is_recent = cands.stamp(fs.a) > cands.stamp(fs.b);
        let (recent, other) = if a_is_recent {
            (fs.a, fs.b)
        } else {
            (fs.b, fs.a)
        };
        let d1 = cands.count(recent);
        let d2 = cands.count(other);
        let projected = cands.total().saturating_add(d2);
        if projected > budget {
            return Err(MorphError::BudgetExceeded {
                arc: step.arc,
                projected,
                budget,
            });
        }
        let newest = *cands.latest(recent).expect("endpoint of a placed face");
        let normal = &decoded.normals[step.to];
        fresh.clear();
        for q in cands.candidates(other) {
            let (pa, pb) = if a_is_recent {
                (&newest, q)
            } else {
                (q, &newest)
            };
            fresh.push(third_vertex_lenient(pa, pb, fs.len_a, fs.len_b, normal));
        }
        for p in fresh.drain(..) {
            cands.push(fs.apex, p);
        }
        trace.push(ArcStep {
            arc: step.arc,
            apex: fs.apex,
            d1,
            d2,
            added: d2,
        });
    }
    let positions = resolve(&cands)?;
    finish(point, structure, positions, cands.stats(), trace)
}
