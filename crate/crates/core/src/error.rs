use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the morphing pipeline.
#[derive(Debug, Error)]
pub enum MorphError {
    #[error("direction is not unit length (norm {norm})")]
    InvalidDirection { norm: f64 },

    #[error("slerp between antipodal directions is ambiguous{}", face_suffix(*.face))]
    AmbiguousSlerp { face: Option<usize> },

    #[error("base edge endpoints coincide")]
    DegenerateBase,

    #[error("normal is parallel to the base edge")]
    DegenerateNormal,

    #[error("edge ({0}, {1}) is shared by more than two faces")]
    NonManifold(usize, usize),

    #[error("edge {0} is a boundary edge and has no dihedral angle")]
    NoDihedral(usize),

    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(String),

    #[error("link from joint {parent} to joint {child} has zero length")]
    ZeroLengthLink { parent: usize, child: usize },

    #[error("alignment is underdetermined: {0}")]
    UnderdeterminedAlignment(String),

    #[error("structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("wrong engine: {0}")]
    WrongEngine(String),

    #[error("stored lengths of face {face} violate the triangle inequality")]
    TriangleInequality { face: usize },

    #[error("mesh is not connected ({components} dual components)")]
    DisconnectedMesh { components: usize },

    #[error(
        "candidate budget exceeded at dual arc {arc}: {projected} candidates projected, budget {budget}"
    )]
    BudgetExceeded {
        arc: usize,
        projected: usize,
        budget: usize,
    },

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{path}:{line}: only triangle faces are supported (found {arity} vertices)")]
    UnsupportedFace {
        path: PathBuf,
        line: usize,
        arity: usize,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn face_suffix(face: Option<usize>) -> String {
    match face {
        Some(f) => format!(" (face {f})"),
        None => String::new(),
    }
}

impl MorphError {
    /// Process exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            MorphError::Config(_) => 2,
            MorphError::Io { .. } => 3,
            MorphError::Parse { .. } | MorphError::UnsupportedFace { .. } => 4,
            MorphError::InvalidMesh(_)
            | MorphError::InvalidSkeleton(_)
            | MorphError::NonManifold(..)
            | MorphError::ZeroLengthLink { .. } => 5,
            MorphError::StructureMismatch(_) | MorphError::WrongEngine(_) => 6,
            MorphError::UnderdeterminedAlignment(_) => 7,
            MorphError::AmbiguousSlerp { .. } => 8,
            MorphError::DisconnectedMesh { .. } => 9,
            MorphError::BudgetExceeded { .. } => 10,
            MorphError::TriangleInequality { .. } => 11,
            MorphError::InvalidDirection { .. }
            | MorphError::DegenerateBase
            | MorphError::DegenerateNormal
            | MorphError::NoDihedral(_) => 12,
        }
    }
}

pub type Result<T, E = MorphError> = std::result::Result<T, E>;
