//! Independent shape builders shared by the integration tests.
//!
//! Nothing here calls into the reconstruction code; poses are built with
//! plain vector arithmetic so the tests can use them as oracles.

#![allow(dead_code)]

use std::collections::HashMap;

use isomorph::{Point, Skeleton, TriangleMesh, Vec3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rotation of `p` about the line through `origin` with unit direction
/// `axis`, by `angle` radians (Rodrigues).
pub fn rotate_about(p: &Point, origin: &Point, axis: &Vec3, angle: f64) -> Point {
    let v = p - origin;
    let (s, c) = angle.sin_cos();
    let r = v * c + axis.cross(&v) * s + axis * axis.dot(&v) * (1.0 - c);
    origin + r
}

pub fn random_rotation(rng: &mut impl Rng) -> nalgebra::Matrix3<f64> {
    // normalized Gaussian quaternion is uniform on SO(3)
    loop {
        let q = nalgebra::Quaternion::new(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
        if q.norm() > 1e-3 {
            return nalgebra::UnitQuaternion::from_quaternion(q)
                .to_rotation_matrix()
                .into_inner();
        }
    }
}

pub fn gauss(rng: &mut impl Rng) -> f64 {
    // Box-Muller
    let u1: f64 = rng.random_range(f64::EPSILON..1.0);
    let u2: f64 = rng.random_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// A triangulated 3D polygon on `n ≥ 3` vertices grown by attaching ears
/// to random boundary edges. Every new triangle is tilted out of its
/// neighbour's plane, so the result is genuinely non-planar.
pub struct Polygon {
    pub vertices: Vec<Point>,
    pub faces: Vec<[usize; 3]>,
    /// Interior edges as (a, b, face on the far side from the seed face).
    pub diagonals: Vec<(usize, usize, usize)>,
}

impl Polygon {
    pub fn mesh(&self) -> TriangleMesh {
        TriangleMesh::new(self.vertices.clone(), self.faces.clone()).unwrap()
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        assert!(n >= 3);
        let mut vertices = vec![
            Point::new(0.0, 0.0, 0.0),
            Point::new(1.0, 0.0, 0.0),
            Point::new(rng.random_range(0.2..0.8), rng.random_range(0.6..1.2), 0.0),
        ];
        let mut faces = vec![[0, 1, 2]];
        // directed boundary edges with the face that owns them
        let mut boundary: Vec<(usize, usize, usize)> = vec![(0, 1, 0), (1, 2, 0), (2, 0, 0)];
        let mut diagonals = Vec::new();
        while vertices.len() < n {
            let slot = rng.random_range(0..boundary.len());
            let (a, b, owner) = boundary.swap_remove(slot);
            let k = vertices.len();
            let [f0, f1, f2] = faces[owner];
            let opposite = [f0, f1, f2]
                .into_iter()
                .find(|&v| v != a && v != b)
                .unwrap();
            let (pa, pb, po) = (vertices[a], vertices[b], vertices[opposite]);
            let e = (pb - pa).normalize();
            let mid = pa + (pb - pa) * rng.random_range(0.3..0.7);
            let n_owner = (pb - pa).cross(&(po - pa)).normalize();
            let away = {
                let w = mid - po;
                (w - e * e.dot(&w)).normalize()
            };
            let tilt: f64 = rng.random_range(-1.0..1.0);
            let dir = (away * tilt.cos() + n_owner * tilt.sin()).normalize();
            let len = (pb - pa).norm() * rng.random_range(0.5..1.2);
            vertices.push(mid + dir * len);
            let f = faces.len();
            faces.push([b, a, k]);
            diagonals.push((a, b, f));
            boundary.push((a, k, f));
            boundary.push((k, b, f));
        }
        Self {
            vertices,
            faces,
            diagonals,
        }
    }

    /// Faces reachable from `start` without crossing the edge `{a, b}`.
    fn side(&self, a: usize, b: usize, start: usize) -> Vec<usize> {
        let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (f, tri) in self.faces.iter().enumerate() {
            for i in 0..3 {
                let (x, y) = (tri[i], tri[(i + 1) % 3]);
                by_edge.entry((x.min(y), x.max(y))).or_default().push(f);
            }
        }
        let cut = (a.min(b), a.max(b));
        let mut seen = vec![false; self.faces.len()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(f) = stack.pop() {
            out.push(f);
            let tri = self.faces[f];
            for i in 0..3 {
                let (x, y) = (tri[i], tri[(i + 1) % 3]);
                let key = (x.min(y), x.max(y));
                if key == cut {
                    continue;
                }
                for &g in &by_edge[&key] {
                    if !seen[g] {
                        seen[g] = true;
                        stack.push(g);
                    }
                }
            }
        }
        out
    }

    /// Isometric copy with the far side of `folds` random diagonals rotated
    /// about them by up to `max_angle` radians each.
    pub fn folded(&self, folds: usize, max_angle: f64, rng: &mut impl Rng) -> Vec<Point> {
        let mut verts = self.vertices.clone();
        if self.diagonals.is_empty() {
            return verts;
        }
        for _ in 0..folds {
            let (a, b, far) = self.diagonals[rng.random_range(0..self.diagonals.len())];
            let angle = rng.random_range(-max_angle..max_angle);
            let axis = (verts[b] - verts[a]).normalize();
            let origin = verts[a];
            let mut moved = vec![false; verts.len()];
            for f in self.side(a, b, far) {
                for v in self.faces[f] {
                    if v != a && v != b && !moved[v] {
                        moved[v] = true;
                        verts[v] = rotate_about(&verts[v], &origin, &axis, angle);
                    }
                }
            }
        }
        verts
    }
}

/// Random isometric pose pair of a triangulated polygon.
pub fn polygon_pair(n: usize, rng: &mut impl Rng) -> (TriangleMesh, TriangleMesh) {
    let poly = Polygon::random(n, rng);
    let m0 = poly.mesh();
    let bent = poly.folded(2, 80f64.to_radians(), rng);
    let m1 = m0.with_vertices(bent).unwrap();
    (m0, m1)
}

/// Random rooted tree: joint `i > 0` hangs off a random earlier joint.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Skeleton {
    let mut joints = vec![Point::origin()];
    let mut parent = vec![None];
    for i in 1..n {
        let p = rng.random_range(0..i);
        let d = Vec3::new(gauss(rng), gauss(rng), gauss(rng)).normalize();
        joints.push(joints[p] + d * rng.random_range(0.2..2.0));
        parent.push(Some(p));
    }
    Skeleton::new(joints, parent).unwrap()
}

/// Isometric re-pose of a skeleton: every subtree is swung about its
/// parent joint by a small random rotation.
pub fn bent_tree(sk: &Skeleton, max_angle: f64, rng: &mut impl Rng) -> Skeleton {
    let n = sk.joint_count();
    let mut joints = sk.joints().to_vec();
    // process joints in link preorder so parents are final before children
    for &(p, c) in sk.links() {
        let axis = Vec3::new(gauss(rng), gauss(rng), gauss(rng)).normalize();
        let angle = rng.random_range(-max_angle..max_angle);
        let origin = joints[p];
        let mut stack = vec![c];
        while let Some(j) = stack.pop() {
            joints[j] = rotate_about(&joints[j], &origin, &axis, angle);
            stack.extend_from_slice(sk.children(j));
        }
    }
    debug_assert_eq!(joints.len(), n);
    sk.with_joints(joints).unwrap()
}

/// Closed regular octahedron, outward-facing.
pub fn octahedron() -> TriangleMesh {
    let v = vec![
        Point::new(0.0, 0.0, 1.0),
        Point::new(1.0, 0.0, 0.0),
        Point::new(0.0, 1.0, 0.0),
        Point::new(-1.0, 0.0, 0.0),
        Point::new(0.0, -1.0, 0.0),
        Point::new(0.0, 0.0, -1.0),
    ];
    let f = vec![
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 1],
        [5, 2, 1],
        [5, 3, 2],
        [5, 4, 3],
        [5, 1, 4],
    ];
    TriangleMesh::new(v, f).unwrap()
}

/// Rectangular grid sheet of `w × h` vertices with slight random relief.
pub fn grid(w: usize, h: usize, rng: &mut impl Rng) -> TriangleMesh {
    let mut v = Vec::with_capacity(w * h);
    for j in 0..h {
        for i in 0..w {
            v.push(Point::new(i as f64, j as f64, rng.random_range(-0.2..0.2)));
        }
    }
    let mut f = Vec::new();
    for j in 0..h - 1 {
        for i in 0..w - 1 {
            let a = j * w + i;
            f.push([a, a + 1, a + w + 1]);
            f.push([a, a + w + 1, a + w]);
        }
    }
    TriangleMesh::new(v, f).unwrap()
}

/// Positions linearly interpolated vertex by vertex.
pub fn naive_lerp(a: &TriangleMesh, b: &TriangleMesh, t: f64) -> TriangleMesh {
    let v = a
        .vertices()
        .iter()
        .zip(b.vertices())
        .map(|(p, q)| p + (q - p) * t)
        .collect();
    a.with_vertices(v).unwrap()
}

pub fn max_rel_length_error(mesh: &TriangleMesh, targets: &[f64]) -> f64 {
    // independent of the library's quality module: lengths from raw faces
    let mut worst: f64 = 0.0;
    for tri in mesh.faces() {
        for i in 0..3 {
            let (a, b) = (tri[i], tri[(i + 1) % 3]);
            let e = mesh.edge_index(a.min(b), a.max(b)).unwrap();
            let l = (mesh.vertex(a) - mesh.vertex(b)).norm();
            worst = worst.max((l - targets[e]).abs() / targets[e]);
        }
    }
    worst
}
