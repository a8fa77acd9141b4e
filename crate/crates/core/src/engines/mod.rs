//! Reconstruction of poses from shape-space points, and the morph drivers
//! that tie alignment, encoding, interpolation and reconstruction together.

mod averaging;
pub mod candidates;
mod exponential;
pub mod mst;
mod polygon;
mod skeleton;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::align::{align, RigidTransform, Transformable};
use crate::error::{MorphError, Result};
use crate::geom::construct::third_vertex_lenient;
use crate::geom::{
    build_dual, third_vertex, DualGraph, DualTree, Point, Skeleton, TriangleMesh, Vec3,
};
use crate::shape_space::{
    anchor_of, encode, encode_skeleton, interp, interp_skeleton, ShapePoint, SkeletonShapePoint,
};

pub use averaging::averaging_reconstruct;
pub use candidates::{CandidateSet, CandidateStats};
pub use exponential::exponential_reconstruct;
pub use mst::build_mst;
pub use polygon::polygon_reconstruct;
pub use skeleton::skeleton_reconstruct;

/// Default cap on the total number of candidates in the exponential engine.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Default cap for the averaging engine, about 480 MB of candidates.
///
/// Pairing against every candidate of the older endpoint lets counts
/// compound on meshes with many dual cycles, so this engine needs a guard
/// as well.
pub const AVERAGING_BUDGET: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Exact tree traversal; requires an acyclic dual graph.
    Polygon,
    /// Exact depth-first traversal of a skeleton.
    Skeleton,
    /// All candidate pairs along the dual MST (exponential in the worst case).
    Exact,
    /// Each MST arc traversed once, pairing against the most recent candidate.
    Averaging,
}

impl Engine {
    pub const ALL: [Engine; 4] = [
        Engine::Polygon,
        Engine::Skeleton,
        Engine::Exact,
        Engine::Averaging,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Polygon => "polygon",
            Engine::Skeleton => "skeleton",
            Engine::Exact => "exact",
            Engine::Averaging => "averaging",
        }
    }

    /// Candidate cap used when none is given; `None` for engines that place
    /// every vertex once.
    pub fn default_budget(self) -> Option<usize> {
        match self {
            Engine::Exact => Some(DEFAULT_BUDGET),
            Engine::Averaging => Some(AVERAGING_BUDGET),
            Engine::Polygon | Engine::Skeleton => None,
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = MorphError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "polygon" => Ok(Engine::Polygon),
            "skeleton" => Ok(Engine::Skeleton),
            "exact" | "exponential" => Ok(Engine::Exact),
            "averaging" => Ok(Engine::Averaging),
            other => Err(MorphError::Config(format!(
                "unknown engine '{other}' (expected polygon, skeleton, exact or averaging)"
            ))),
        }
    }
}

/// One candidate-producing arc traversal, recorded by the heuristic engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcStep {
    pub arc: usize,
    /// Vertex that received the new candidates.
    pub apex: usize,
    /// Candidate count of the first endpoint of the shared edge before the
    /// step (for the averaging engine: the more recently updated endpoint).
    pub d1: usize,
    /// Candidate count of the other endpoint.
    pub d2: usize,
    pub added: usize,
}

/// A reconstructed mesh pose with its quality data.
#[derive(Debug, Clone)]
pub struct MorphResult {
    /// Interpolation parameter, when the result belongs to a morph.
    pub t: Option<f64>,
    pub mesh: TriangleMesh,
    /// `Σ (realized − stored length)²` over all edges.
    pub energy_q: f64,
    pub candidate_stats: CandidateStats,
    pub trace: Vec<ArcStep>,
}

#[derive(Debug, Clone)]
pub struct SkeletonResult {
    pub t: Option<f64>,
    pub skeleton: Skeleton,
    pub energy_q: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorphOptions {
    pub engine: Engine,
    /// Rigidly align the end pose onto the start pose before encoding.
    pub align: bool,
    /// Candidate cap for [`Engine::Exact`] and [`Engine::Averaging`];
    /// `None` uses [`Engine::default_budget`].
    pub budget: Option<usize>,
}

impl Default for MorphOptions {
    fn default() -> Self {
        Self {
            engine: Engine::Averaging,
            align: true,
            budget: None,
        }
    }
}

impl MorphOptions {
    pub fn new(engine: Engine) -> Self {
        Self {
            engine,
            ..Self::default()
        }
    }

    pub fn without_alignment(mut self) -> Self {
        self.align = false;
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }
}

/// Everything needed to evaluate a mesh morph at any `t`.
#[derive(Debug, Clone)]
pub struct MeshMorph {
    start: TriangleMesh,
    end: TriangleMesh,
    alignment: RigidTransform,
    p0: ShapePoint,
    p1: ShapePoint,
    dual: DualGraph,
    tree: DualTree,
    options: MorphOptions,
}

impl MeshMorph {
    pub fn prepare(
        pose0: &TriangleMesh,
        pose1: &TriangleMesh,
        options: MorphOptions,
    ) -> Result<Self> {
        if !pose0.same_connectivity(pose1) {
            return Err(MorphError::StructureMismatch(
                "start and end poses do not share connectivity".into(),
            ));
        }
        let alignment = if options.align {
            align(pose1.vertices(), pose0.vertices())?
        } else {
            RigidTransform::identity()
        };
        let end = pose1.transformed(&alignment);
        let p0 = encode(pose0)?;
        let p1 = encode(&end)?;
        let dual = build_dual(pose0);
        let (_, root) = anchor_of(pose0)?;
        let tree = match options.engine {
            Engine::Polygon => DualTree::whole(&dual, root)?,
            Engine::Exact | Engine::Averaging => build_mst(&dual, pose0, &end)?,
            Engine::Skeleton => {
                return Err(MorphError::WrongEngine(
                    "the skeleton engine morphs skeletons, not meshes".into(),
                ))
            }
        };
        if options.budget.is_some_and(|b| b < 3) {
            return Err(MorphError::Config(
                "candidate budget must be at least 3 to hold the seed vertices".into(),
            ));
        }
        Ok(Self {
            start: pose0.clone(),
            end,
            alignment,
            p0,
            p1,
            dual,
            tree,
            options,
        })
    }

    pub fn start(&self) -> &TriangleMesh {
        &self.start
    }

    /// End pose after alignment.
    pub fn end(&self) -> &TriangleMesh {
        &self.end
    }

    pub fn alignment(&self) -> &RigidTransform {
        &self.alignment
    }

    pub fn dual(&self) -> &DualGraph {
        &self.dual
    }

    pub fn tree(&self) -> &DualTree {
        &self.tree
    }

    pub fn shape_points(&self) -> (&ShapePoint, &ShapePoint) {
        (&self.p0, &self.p1)
    }

    pub fn options(&self) -> &MorphOptions {
        &self.options
    }

    fn budget(&self) -> usize {
        self.options
            .budget
            .or(self.options.engine.default_budget())
            .unwrap_or(usize::MAX)
    }

    /// Shape-space point at `t`.
    pub fn point_at(&self, t: f64) -> Result<ShapePoint> {
        interp(&self.p0, &self.p1, t)
    }

    /// Rebuilds a pose from an arbitrary point with this morph's layout.
    pub fn reconstruct(&self, point: &ShapePoint) -> Result<MorphResult> {
        match self.options.engine {
            Engine::Polygon => polygon::traverse(point, &self.start, &self.dual, &self.tree),
            Engine::Exact => {
                exponential::traverse(point, &self.start, &self.dual, &self.tree, self.budget())
            }
            Engine::Averaging => {
                averaging::traverse(point, &self.start, &self.dual, &self.tree, self.budget())
            }
            Engine::Skeleton => unreachable!("rejected in prepare"),
        }
    }

    pub fn at(&self, t: f64) -> Result<MorphResult> {
        let point = self.point_at(t)?;
        let mut out = self.reconstruct(&point)?;
        out.t = Some(t);
        Ok(out)
    }

    /// Poses at `t = i / (steps − 1)`, computed in parallel.
    pub fn sequence(&self, steps: usize) -> Result<Vec<MorphResult>> {
        sample_ts(steps)?
            .into_par_iter()
            .map(|t| self.at(t))
            .collect()
    }
}

/// `steps` evenly spaced parameters from 0 to 1 inclusive.
pub fn sample_ts(steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(MorphError::Config(format!(
            "a sequence needs at least 2 steps, got {steps}"
        )));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps).map(|i| i as f64 / last).collect())
}

pub fn morph_sequence(
    pose0: &TriangleMesh,
    pose1: &TriangleMesh,
    steps: usize,
    options: MorphOptions,
) -> Result<Vec<MorphResult>> {
    MeshMorph::prepare(pose0, pose1, options)?.sequence(steps)
}

/// Everything needed to evaluate a skeleton morph at any `t`.
#[derive(Debug, Clone)]
pub struct SkeletonMorph {
    start: Skeleton,
    end: Skeleton,
    s0: SkeletonShapePoint,
    s1: SkeletonShapePoint,
}

impl SkeletonMorph {
    pub fn prepare(sk0: &Skeleton, sk1: &Skeleton, align_poses: bool) -> Result<Self> {
        if !sk0.same_structure(sk1) {
            return Err(MorphError::StructureMismatch(
                "start and end skeletons do not share a tree".into(),
            ));
        }
        let end = if align_poses {
            sk1.transformed(&align(sk1.joints(), sk0.joints())?)
        } else {
            sk1.clone()
        };
        Ok(Self {
            s0: encode_skeleton(sk0)?,
            s1: encode_skeleton(&end)?,
            start: sk0.clone(),
            end,
        })
    }

    pub fn start(&self) -> &Skeleton {
        &self.start
    }

    pub fn end(&self) -> &Skeleton {
        &self.end
    }

    pub fn point_at(&self, t: f64) -> Result<SkeletonShapePoint> {
        interp_skeleton(&self.s0, &self.s1, t)
    }

    pub fn at(&self, t: f64) -> Result<SkeletonResult> {
        let point = self.point_at(t)?;
        let skeleton = skeleton_reconstruct(&point, &self.start)?;
        let energy_q = skeleton
            .link_lengths()
            .iter()
            .zip(&point.link_lengths)
            .map(|(r, l)| (r - l).powi(2))
            .sum();
        Ok(SkeletonResult {
            t: Some(t),
            skeleton,
            energy_q,
        })
    }

    pub fn sequence(&self, steps: usize) -> Result<Vec<SkeletonResult>> {
        sample_ts(steps)?
            .into_par_iter()
            .map(|t| self.at(t))
            .collect()
    }
}

pub fn morph_skeleton_sequence(
    sk0: &Skeleton,
    sk1: &Skeleton,
    steps: usize,
    align_poses: bool,
) -> Result<Vec<SkeletonResult>> {
    SkeletonMorph::prepare(sk0, sk1, align_poses)?.sequence(steps)
}

/// Per-face data needed to place the apex when crossing `edge` into `face`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct FaceStep {
    /// Shared-edge endpoints in the winding order of `face`.
    pub a: usize,
    pub b: usize,
    pub apex: usize,
    pub len_a: f64,
    pub len_b: f64,
}

pub(crate) fn face_step(
    mesh: &TriangleMesh,
    lengths: &[f64],
    face: usize,
    edge: usize,
) -> FaceStep {
    let f = mesh.faces()[face];
    let fe = mesh.face_edges(face);
    let k = fe
        .iter()
        .position(|&e| e == edge)
        .expect("edge lies on face");
    FaceStep {
        a: f[k],
        b: f[(k + 1) % 3],
        apex: f[(k + 2) % 3],
        len_a: lengths[fe[(k + 2) % 3]],
        len_b: lengths[fe[(k + 1) % 3]],
    }
}

/// Decoded data shared by all mesh engines.
pub(crate) struct Decoded {
    pub normals: Vec<Vec3>,
    pub root_face: usize,
}

pub(crate) fn decode(point: &ShapePoint, mesh: &TriangleMesh, tree: &DualTree) -> Result<Decoded> {
    if point.edge_lengths.len() != mesh.edge_count()
        || point.face_normals.len() != mesh.face_count()
    {
        return Err(MorphError::StructureMismatch(format!(
            "shape point has {} lengths and {} normals; mesh has {} edges and {} faces",
            point.edge_lengths.len(),
            point.face_normals.len(),
            mesh.edge_count(),
            mesh.face_count()
        )));
    }
    let (_, root_face) = anchor_of(mesh)?;
    if tree.root() != root_face {
        return Err(MorphError::StructureMismatch(format!(
            "tree is rooted at face {} but the anchor face is {root_face}",
            tree.root()
        )));
    }
    Ok(Decoded {
        normals: point.face_normals.iter().map(|n| n.to_unit()).collect(),
        root_face,
    })
}

/// Positions of the anchor vertex, the far end of the anchor edge, and the
/// apex of the root face, in that order.
pub(crate) fn seed(
    point: &ShapePoint,
    mesh: &TriangleMesh,
    decoded: &Decoded,
    strict: bool,
) -> Result<[(usize, Point); 3]> {
    let [v0, v1] = mesh.edges()[0];
    let p0 = point.anchor_pos;
    let p1 = p0 + point.anchor_dir.to_unit() * point.edge_lengths[0];
    let step = face_step(mesh, &point.edge_lengths, decoded.root_face, 0);
    let pos = |v: usize| if v == v0 { p0 } else { p1 };
    let (pa, pb) = (pos(step.a), pos(step.b));
    let normal = &decoded.normals[decoded.root_face];
    let apex = if strict {
        third_vertex(&pa, &pb, step.len_a, step.len_b, normal)?
    } else {
        third_vertex_lenient(&pa, &pb, step.len_a, step.len_b, normal)
    };
    Ok([(v0, p0), (v1, p1), (step.apex, apex)])
}

pub(crate) fn finish(
    point: &ShapePoint,
    structure: &TriangleMesh,
    positions: Vec<Point>,
    candidate_stats: CandidateStats,
    trace: Vec<ArcStep>,
) -> Result<MorphResult> {
    let mesh = structure.with_vertices(positions)?;
    let energy_q = crate::quality::energy_q(&mesh, &point.edge_lengths)?;
    Ok(MorphResult {
        t: None,
        mesh,
        energy_q,
        candidate_stats,
        trace,
    })
}

/// Means of the candidate sets; every vertex must have been reached.
pub(crate) fn resolve(candidates: &CandidateSet) -> Result<Vec<Point>> {
    candidates
        .means()
        .into_iter()
        .enumerate()
        .map(|(v, p)| {
            p.ok_or_else(|| MorphError::InvalidMesh(format!("vertex {v} is not part of any face")))
        })
        .collect()
}
