use rayon::prelude::*;

use crate::geom::{Point, Vec3};

/// Above this many candidates the pairwise spread is estimated by a
/// two-sweep farthest-point search instead of being computed exactly.
const EXACT_SPREAD_LIMIT: usize = 4096;

/// Candidate coordinates per vertex, oldest first.
///
/// Every insertion advances a global clock and stamps the vertex, so the
/// vertex updated most recently can always be told apart.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    lists: Vec<Vec<Point>>,
    stamps: Vec<u64>,
    clock: u64,
    total: usize,
}

impl CandidateSet {
    pub fn new(n_vertices: usize) -> Self {
        Self {
            lists: vec![Vec::new(); n_vertices],
            stamps: vec![0; n_vertices],
            clock: 0,
            total: 0,
        }
    }

    pub fn push(&mut self, vertex: usize, p: Point) {
        self.clock += 1;
        self.stamps[vertex] = self.clock;
        self.lists[vertex].push(p);
        self.total += 1;
    }

    pub fn count(&self, vertex: usize) -> usize {
        self.lists[vertex].len()
    }

    pub fn candidates(&self, vertex: usize) -> &[Point] {
        &self.lists[vertex]
    }

    pub fn latest(&self, vertex: usize) -> Option<&Point> {
        self.lists[vertex].last()
    }

    /// Clock value of the last insertion into `vertex`; 0 if never updated.
    pub fn stamp(&self, vertex: usize) -> u64 {
        self.stamps[vertex]
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    /// Arithmetic mean per vertex, or `None` for vertices without candidates.
    pub fn means(&self) -> Vec<Option<Point>> {
        self.lists
            .par_iter()
            .map(|c| {
                if c.is_empty() {
                    return None;
                }
                let sum = c.iter().fold(Vec3::zeros(), |acc, p| acc + p.coords);
                Some(Point::from(sum / c.len() as f64))
            })
            .collect()
    }

    pub fn stats(&self) -> CandidateStats {
        let spreads = self.lists.par_iter().map(|c| spread(c)).collect();
        CandidateStats {
            counts: self.lists.iter().map(Vec::len).collect(),
            spreads,
        }
    }
}

/// Largest pairwise distance within one candidate list.
pub fn spread(points: &[Point]) -> f64 {
    if points.len() < 2 {
        return 0.0;
    }
    if points.len() <= EXACT_SPREAD_LIMIT {
        let mut best = 0.0f64;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                best = best.max((points[i] - points[j]).norm_squared());
            }
        }
        return best.sqrt();
    }
    let farthest = |from: &Point| {
        points
            .iter()
            .map(|p| (p - from).norm())
            .enumerate()
            .fold((0, 0.0), |acc, (i, d)| if d > acc.1 { (i, d) } else { acc })
    };
    let (a, _) = farthest(&points[0]);
    farthest(&points[a]).1
}

/// Per-vertex candidate counts and spreads of one reconstruction.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CandidateStats {
    pub counts: Vec<usize>,
    pub spreads: Vec<f64>,
}

impl CandidateStats {
    /// One candidate per vertex, zero spread.
    pub fn single(n_vertices: usize) -> Self {
        Self {
            counts: vec![1; n_vertices],
            spreads: vec![0.0; n_vertices],
        }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn max_count(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    pub fn max_spread(&self) -> f64 {
        self.spreads.iter().copied().fold(0.0, f64::max)
    }
}
