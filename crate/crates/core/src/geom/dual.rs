//! Face-adjacency (dual) graphs and rooted spanning trees over them.

use crate::error::{MorphError, Result};
use crate::geom::mesh::TriangleMesh;
use crate::geom::sphere::angle_between;

/// One dual arc: an interior mesh edge and the two faces it joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualArc {
    pub edge: usize,
    /// Faces in ascending order.
    pub faces: [usize; 2],
}

impl DualArc {
    pub fn other(&self, face: usize) -> usize {
        if self.faces[0] == face {
            self.faces[1]
        } else {
            self.faces[0]
        }
    }
}

/// Dual graph of a mesh: one node per face, one arc per interior edge.
///
/// Arcs follow the mesh edge order, so arc indices are deterministic.
#[derive(Debug, Clone)]
pub struct DualGraph {
    n_nodes: usize,
    arcs: Vec<DualArc>,
    node_arcs: Vec<Vec<usize>>,
    edge_arc: Vec<Option<usize>>,
}

pub fn build_dual(mesh: &TriangleMesh) -> DualGraph {
    let mut arcs = Vec::new();
    let mut edge_arc = vec![None; mesh.edge_count()];
    let mut node_arcs = vec![Vec::new(); mesh.face_count()];
    for e in 0..mesh.edge_count() {
        if let &[f0, f1] = mesh.edge_faces(e) {
            let id = arcs.len();
            arcs.push(DualArc {
                edge: e,
                faces: [f0.min(f1), f0.max(f1)],
            });
            edge_arc[e] = Some(id);
            node_arcs[f0].push(id);
            node_arcs[f1].push(id);
        }
    }
    DualGraph {
        n_nodes: mesh.face_count(),
        arcs,
        node_arcs,
        edge_arc,
    }
}

impl DualGraph {
    pub fn node_count(&self) -> usize {
        self.n_nodes
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[DualArc] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> DualArc {
        self.arcs[id]
    }

    /// Arcs incident to a node, ascending.
    pub fn node_arcs(&self, node: usize) -> &[usize] {
        &self.node_arcs[node]
    }

    pub fn arc_of_edge(&self, edge: usize) -> Option<usize> {
        self.edge_arc[edge]
    }

    pub fn component_count(&self) -> usize {
        let mut sets = DisjointSets::new(self.n_nodes);
        for a in &self.arcs {
            sets.union(a.faces[0], a.faces[1]);
        }
        sets.count()
    }

    /// No cycles (a forest).
    pub fn is_acyclic(&self) -> bool {
        let mut sets = DisjointSets::new(self.n_nodes);
        self.arcs.iter().all(|a| sets.union(a.faces[0], a.faces[1]))
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.n_nodes > 0 && self.arcs.len() + 1 == self.n_nodes && self.is_acyclic()
    }

    /// Independent cycles: `arcs − nodes + components`.
    pub fn cycle_rank(&self) -> usize {
        self.arcs.len() + self.component_count() - self.n_nodes
    }
}

/// One step of a tree traversal: crossing `arc` from face `from` into face `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStep {
    pub arc: usize,
    pub from: usize,
    pub to: usize,
}

/// A rooted spanning tree of a [`DualGraph`].
#[derive(Debug, Clone)]
pub struct DualTree {
    root: usize,
    tree_arcs: Vec<usize>,
    parent_arc: Vec<Option<usize>>,
    steps: Vec<TreeStep>,
    weights: Vec<f64>,
}

impl DualTree {
    /// Roots the given arc subset at `root` and records a depth-first order.
    ///
    /// Children are visited in ascending arc index. `weights` holds one entry
    /// per arc of `dual` (not just the tree arcs).
    pub fn from_arcs(
        dual: &DualGraph,
        mut tree_arcs: Vec<usize>,
        root: usize,
        weights: Vec<f64>,
    ) -> Result<Self> {
        let n = dual.node_count();
        if root >= n {
            return Err(MorphError::InvalidMesh(format!(
                "root face {root} out of range"
            )));
        }
        if weights.len() != dual.arc_count() {
            return Err(MorphError::StructureMismatch(format!(
                "{} arc weights for {} arcs",
                weights.len(),
                dual.arc_count()
            )));
        }
        tree_arcs.sort_unstable();
        tree_arcs.dedup();
        // CSR adjacency; arcs are filled in ascending order per node
        let mut offsets = vec![0usize; n + 1];
        for &a in &tree_arcs {
            let arc = dual.arc(a);
            offsets[arc.faces[0] + 1] += 1;
            offsets[arc.faces[1] + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut adj_arcs = vec![0usize; offsets[n]];
        for &a in &tree_arcs {
            for f in dual.arc(a).faces {
                adj_arcs[fill[f]] = a;
                fill[f] += 1;
            }
        }
        let adj = |node: usize| &adj_arcs[offsets[node]..offsets[node + 1]];

        let mut parent_arc = vec![None; n];
        let mut visited = vec![false; n];
        let mut steps = Vec::with_capacity(n.saturating_sub(1));
        let mut stack: Vec<TreeStep> = Vec::new();
        visited[root] = true;
        let push_children = |node: usize, stack: &mut Vec<TreeStep>, visited: &[bool]| {
            for &a in adj(node).iter().rev() {
                let to = dual.arc(a).other(node);
                if !visited[to] {
                    stack.push(TreeStep {
                        arc: a,
                        from: node,
                        to,
                    });
                }
            }
        };
        push_children(root, &mut stack, &visited);
        while let Some(step) = stack.pop() {
            if visited[step.to] {
                return Err(MorphError::InvalidMesh(
                    "spanning arc set contains a cycle".into(),
                ));
            }
            visited[step.to] = true;
            parent_arc[step.to] = Some(step.arc);
            steps.push(step);
            push_children(step.to, &mut stack, &visited);
        }
        let unreached = visited.iter().filter(|v| !**v).count();
        if unreached > 0 || steps.len() != tree_arcs.len() {
            return Err(MorphError::DisconnectedMesh {
                components: dual.component_count().max(2),
            });
        }
        Ok(Self {
            root,
            tree_arcs,
            parent_arc,
            steps,
            weights,
        })
    }

    /// The dual itself as a tree, with zero weights. Fails on cyclic duals.
    pub fn whole(dual: &DualGraph, root: usize) -> Result<Self> {
        if !dual.is_acyclic() {
            return Err(MorphError::WrongEngine(
                "dual graph has cycles; use the exact or averaging engine".into(),
            ));
        }
        Self::from_arcs(
            dual,
            (0..dual.arc_count()).collect(),
            root,
            vec![0.0; dual.arc_count()],
        )
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Arc ids in the tree, ascending.
    pub fn arcs(&self) -> &[usize] {
        &self.tree_arcs
    }

    pub fn contains(&self, arc: usize) -> bool {
        self.tree_arcs.binary_search(&arc).is_ok()
    }

    pub fn parent_arc(&self, node: usize) -> Option<usize> {
        self.parent_arc[node]
    }

    /// Depth-first traversal from the root; each tree arc appears once.
    pub fn steps(&self) -> &[TreeStep] {
        &self.steps
    }

    pub fn weight(&self, arc: usize) -> f64 {
        self.weights[arc]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_weight(&self) -> f64 {
        self.tree_arcs.iter().map(|&a| self.weights[a]).sum()
    }
}

/// Unsigned angle in `[0, π]` between the normals of the two faces at an
/// interior edge.
pub fn dihedral_angle(mesh: &TriangleMesh, edge: usize) -> Result<f64> {
    match mesh.edge_faces(edge) {
        &[f0, f1] => {
            let n0 = mesh.face_normal(f0)?;
            let n1 = mesh.face_normal(f1)?;
            Ok(angle_between(&n0, &n1))
        }
        _ => Err(MorphError::NoDihedral(edge)),
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.count -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn p(x: f64, y: f64, z: f64) -> Point {
        Point::new(x, y, z)
    }

    #[test]
    fn two_triangles_one_arc() {
        let m = TriangleMesh::new(
            vec![p(0., 0., 0.), p(1., 0., 0.), p(0., 1., 0.), p(1., 1., 0.)],
            vec![[0, 1, 2], [2, 1, 3]],
        )
        .unwrap();
        let d = build_dual(&m);
        assert_eq!(d.node_count(), 2);
        assert_eq!(d.arc_count(), 1);
        assert_eq!(d.arc(0).faces, [0, 1]);
        assert!(d.is_tree());
        assert_abs_diff_eq!(dihedral_angle(&m, d.arc(0).edge).unwrap(), 0.0);
        assert!(matches!(
            dihedral_angle(&m, 0),
            Err(MorphError::NoDihedral(0))
        ));
    }

    #[test]
    fn fan_dual_is_path() {
        let verts = (0..5)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / 5.0;
                p(a.cos(), a.sin(), 0.0)
            })
            .collect();
        let m = TriangleMesh::new(verts, vec![[0, 1, 2], [0, 2, 3], [0, 3, 4]]).unwrap();
        let d = build_dual(&m);
        assert_eq!((d.node_count(), d.arc_count()), (3, 2));
        assert!(d.is_acyclic());
        assert_eq!(d.cycle_rank(), 0);
    }

    #[test]
    fn dihedral_right_angle_and_flat_fold() {
        // shared edge along x; second face folded up to the +z half plane
        let m = TriangleMesh::new(
            vec![p(0., 0., 0.), p(1., 0., 0.), p(0.5, 1., 0.), p(0.5, 0., 1.)],
            vec![[0, 1, 2], [1, 0, 3]],
        )
        .unwrap();
        let e = m.edge_index(0, 1).unwrap();
        // normals (0,0,1) and (0,1,0): dot 0
        assert_abs_diff_eq!(dihedral_angle(&m, e).unwrap(), FRAC_PI_2, epsilon = 1e-15);

        let folded = TriangleMesh::new(
            vec![p(0., 0., 0.), p(1., 0., 0.), p(0.5, 1., 0.), p(0.5, 1., 0.)],
            vec![[0, 1, 2], [1, 0, 3]],
        )
        .unwrap();
        assert_abs_diff_eq!(dihedral_angle(&folded, e).unwrap(), PI, epsilon = 1e-15);
    }

    #[test]
    fn tree_traversal_is_depth_first() {
        // strip of four faces: dual path 0-1-2-3, rooted at 1
        let m = TriangleMesh::new(
            vec![
                p(0., 0., 0.),
                p(0., 1., 0.),
                p(1., 0., 0.),
                p(1., 1., 0.),
                p(2., 0., 0.),
                p(2., 1., 0.),
            ],
            vec![[0, 2, 1], [1, 2, 3], [2, 4, 3], [3, 4, 5]],
        )
        .unwrap();
        let d = build_dual(&m);
        let t = DualTree::whole(&d, 1).unwrap();
        let order: Vec<_> = t.steps().iter().map(|s| (s.from, s.to)).collect();
        assert_eq!(order.len(), 3);
        assert_eq!(order[0].0, 1);
        assert_eq!(t.parent_arc(1), None);
        assert!(t.parent_arc(3).is_some());
        // every face reached once
        let mut seen: Vec<_> = order.iter().map(|s| s.1).collect();
        seen.sort();
        assert_eq!(seen, vec![0, 2, 3]);
    }

    #[test]
    fn disjoint_sets() {
        let mut s = DisjointSets::new(4);
        assert!(s.union(0, 1));
        assert!(s.union(2, 3));
        assert!(!s.union(1, 0));
        assert_eq!(s.count(), 2);
        assert!(s.union(0, 3));
        assert_eq!(s.find(2), s.find(1));
    }
}
