//! Indexed triangle meshes with a fixed, derived edge order.

use std::sync::Arc;

use crate::error::{MorphError, Result};
use crate::geom::{Point, Vec3};

/// Connectivity shared between all poses of one mesh structure.
#[derive(Debug, PartialEq, Eq)]
struct Topology {
    n_vertices: usize,
    faces: Vec<[usize; 3]>,
    /// Sorted lexicographically by `(min, max)`.
    edges: Vec<[usize; 2]>,
    /// Edge indices of `(f0,f1)`, `(f1,f2)`, `(f2,f0)` for every face.
    face_edges: Vec<[usize; 3]>,
    /// CSR layout: faces of edge `e` are `edge_face_ids[edge_face_start[e]..edge_face_start[e + 1]]`.
    edge_face_start: Vec<usize>,
    edge_face_ids: Vec<usize>,
}

impl Topology {
    fn build(n_vertices: usize, faces: Vec<[usize; 3]>) -> Result<Self> {
        for (fi, f) in faces.iter().enumerate() {
            if let Some(&bad) = f.iter().find(|&&v| v >= n_vertices) {
                return Err(MorphError::InvalidMesh(format!(
                    "face {fi} references vertex {bad}, but there are only {n_vertices} vertices"
                )));
            }
            if f[0] == f[1] || f[1] == f[2] || f[2] == f[0] {
                return Err(MorphError::InvalidMesh(format!(
                    "face {fi} is degenerate: {f:?}"
                )));
            }
        }

        let mut half: Vec<([usize; 2], usize)> = Vec::with_capacity(faces.len() * 3);
        for (fi, f) in faces.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (f[k], f[(k + 1) % 3]);
                half.push(([a.min(b), a.max(b)], fi));
            }
        }
        half.sort_unstable();

        let mut edges = Vec::new();
        let mut edge_face_start = vec![0];
        let mut edge_face_ids = Vec::with_capacity(half.len());
        for (i, (key, fi)) in half.iter().enumerate() {
            if i == 0 || half[i - 1].0 != *key {
                if i > 0 {
                    edge_face_start.push(edge_face_ids.len());
                }
                edges.push(*key);
            } else {
                let start = *edge_face_start.last().unwrap();
                if edge_face_ids.len() - start >= 2 {
                    return Err(MorphError::NonManifold(key[0], key[1]));
                }
                if edge_face_ids[start..].contains(fi) {
                    return Err(MorphError::InvalidMesh(format!(
                        "face {fi} uses edge ({}, {}) twice",
                        key[0], key[1]
                    )));
                }
            }
            edge_face_ids.push(*fi);
        }
        edge_face_start.push(edge_face_ids.len());

        let mut topo = Topology {
            n_vertices,
            faces,
            edges,
            face_edges: Vec::new(),
            edge_face_start,
            edge_face_ids,
        };
        topo.face_edges = topo
            .faces
            .iter()
            .map(|f| {
                let mut out = [0; 3];
                for k in 0..3 {
                    out[k] = topo.find_edge(f[k], f[(k + 1) % 3]).unwrap();
                }
                out
            })
            .collect();
        Ok(topo)
    }

    fn find_edge(&self, a: usize, b: usize) -> Option<usize> {
        let key = [a.min(b), a.max(b)];
        self.edges.binary_search(&key).ok()
    }
}

/// A triangle mesh: vertex positions plus shared, immutable connectivity.
///
/// Faces keep their input order and winding (counterclockwise under the
/// outer normal). Edges are derived from the faces and sorted by
/// `(min vertex, max vertex)`, so two meshes built from the same face list
/// always agree on edge indices.
#[derive(Debug, Clone)]
pub struct TriangleMesh {
    vertices: Vec<Point>,
    topo: Arc<Topology>,
}

impl TriangleMesh {
    pub fn new(vertices: Vec<Point>, faces: Vec<[usize; 3]>) -> Result<Self> {
        if let Some(i) = vertices
            .iter()
            .position(|p| !p.coords.iter().all(|c| c.is_finite()))
        {
            return Err(MorphError::InvalidMesh(format!(
                "vertex {i} has a non-finite coordinate"
            )));
        }
        let topo = Topology::build(vertices.len(), faces)?;
        Ok(Self {
            vertices,
            topo: Arc::new(topo),
        })
    }

    /// Same connectivity, new positions.
    pub fn with_vertices(&self, vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() != self.topo.n_vertices {
            return Err(MorphError::StructureMismatch(format!(
                "expected {} vertices, got {}",
                self.topo.n_vertices,
                vertices.len()
            )));
        }
        Ok(Self {
            vertices,
            topo: Arc::clone(&self.topo),
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.topo.faces
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.topo.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.topo.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.topo.edges.len()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.topo.find_edge(a, b)
    }

    /// Edge indices of a face, in winding order starting at `(f[0], f[1])`.
    pub fn face_edges(&self, face: usize) -> [usize; 3] {
        self.topo.face_edges[face]
    }

    /// The one or two faces incident to an edge.
    pub fn edge_faces(&self, edge: usize) -> &[usize] {
        let t = &self.topo;
        &t.edge_face_ids[t.edge_face_start[edge]..t.edge_face_start[edge + 1]]
    }

    pub fn is_interior_edge(&self, edge: usize) -> bool {
        self.edge_faces(edge).len() == 2
    }

    /// True when both meshes were built from the same vertex count and face list.
    pub fn same_connectivity(&self, other: &TriangleMesh) -> bool {
        Arc::ptr_eq(&self.topo, &other.topo) || self.topo == other.topo
    }

    pub fn edge_length(&self, edge: usize) -> f64 {
        let [a, b] = self.topo.edges[edge];
        (self.vertices[b] - self.vertices[a]).norm()
    }

    pub fn edge_lengths(&self) -> Vec<f64> {
        (0..self.edge_count())
            .map(|e| self.edge_length(e))
            .collect()
    }

    /// Unnormalized `(p1 − p0) × (p2 − p0)`.
    pub fn face_area_vector(&self, face: usize) -> Vec3 {
        let [a, b, c] = self.topo.faces[face];
        let (pa, pb, pc) = (self.vertices[a], self.vertices[b], self.vertices[c]);
        (pb - pa).cross(&(pc - pa))
    }

    /// Outer unit normal under the right-hand rule.
    pub fn face_normal(&self, face: usize) -> Result<Vec3> {
        let n = self.face_area_vector(face);
        let norm = n.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(MorphError::InvalidMesh(format!(
                "face {face} has zero area"
            )));
        }
        Ok(n / norm)
    }

    /// Vertex of `face` not on `edge`.
    pub fn opposite_vertex(&self, face: usize, edge: usize) -> usize {
        let [a, b] = self.topo.edges[edge];
        *self.topo.faces[face]
            .iter()
            .find(|&&v| v != a && v != b)
            .expect("edge belongs to face")
    }

    /// Orders the endpoints of `edge` as they appear in the winding of `face`.
    pub fn oriented_edge(&self, face: usize, edge: usize) -> (usize, usize) {
        let [a, b] = self.topo.edges[edge];
        let f = self.topo.faces[face];
        for k in 0..3 {
            if f[k] == a && f[(k + 1) % 3] == b {
                return (a, b);
            }
        }
        (b, a)
    }

    /// Vertices not referenced by any face.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut used = vec![false; self.vertex_count()];
        for f in self.faces() {
            for &v in f {
                used[v] = true;
            }
        }
        (0..used.len()).filter(|&i| !used[i]).collect()
    }

    /// Largest distance between any two vertices.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut best = 0.0f64;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                best = best.max((v[i] - v[j]).norm_squared());
            }
        }
        best.sqrt()
    }

    /// Largest per-vertex distance between two poses of the same structure.
    pub fn max_vertex_deviation(&self, other: &TriangleMesh) -> f64 {
        self.vertices
            .iter()
            .zip(&other.vertices)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}
