//! Shape-space coordinates of mesh and skeleton poses, and linear
//! interpolation between them.
//!
//! A mesh pose is stored as the position of vertex 0, the direction of the
//! first edge incident to it, every edge length (in edge order) and every
//! outer face normal (in face order). The flat layout is
//! `[x, y, z, u, v, l_0 .. l_{|E|-1}, u_0, v_0 .. u_{|F|-1}, v_{|F|-1}]`,
//! so the dimension is `5 + |E| + 2|F|`.

use crate::error::{MorphError, Result};
use crate::geom::sphere::{dir_to_spherical, slerp, unit};
use crate::geom::{Point, Skeleton, SphericalDir, TriangleMesh};

#[derive(Debug, Clone, PartialEq)]
pub struct ShapePoint {
    pub anchor_pos: Point,
    pub anchor_dir: SphericalDir,
    pub edge_lengths: Vec<f64>,
    pub face_normals: Vec<SphericalDir>,
}

impl ShapePoint {
    pub fn dimension(&self) -> usize {
        5 + self.edge_lengths.len() + 2 * self.face_normals.len()
    }

    pub fn to_flat(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dimension());
        out.extend(self.anchor_pos.coords.iter());
        out.extend([self.anchor_dir.u, self.anchor_dir.v]);
        out.extend(&self.edge_lengths);
        for n in &self.face_normals {
            out.extend([n.u, n.v]);
        }
        out
    }

    pub fn from_flat(record: &[f64], n_edges: usize, n_faces: usize) -> Result<Self> {
        let want = 5 + n_edges + 2 * n_faces;
        if record.len() != want {
            return Err(MorphError::StructureMismatch(format!(
                "flat record has {} values, layout needs {want}",
                record.len()
            )));
        }
        let (head, rest) = record.split_at(5);
        let (lengths, normals) = rest.split_at(n_edges);
        Ok(Self {
            anchor_pos: Point::new(head[0], head[1], head[2]),
            anchor_dir: SphericalDir::new(head[3], head[4]),
            edge_lengths: lengths.to_vec(),
            face_normals: normals
                .chunks_exact(2)
                .map(|c| SphericalDir::new(c[0], c[1]))
                .collect(),
        })
    }

    fn check_layout(&self, other: &ShapePoint) -> Result<()> {
        if self.edge_lengths.len() != other.edge_lengths.len()
            || self.face_normals.len() != other.face_normals.len()
        {
            return Err(MorphError::StructureMismatch(format!(
                "layouts differ: {} edges / {} faces vs {} edges / {} faces",
                self.edge_lengths.len(),
                self.face_normals.len(),
                other.edge_lengths.len(),
                other.face_normals.len()
            )));
        }
        Ok(())
    }
}

/// Skeleton pose: root position, then link lengths and link directions in
/// depth-first order, each direction pointing away from the root.
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletonShapePoint {
    pub root_pos: Point,
    pub link_lengths: Vec<f64>,
    pub link_dirs: Vec<SphericalDir>,
}

impl SkeletonShapePoint {
    pub fn dimension(&self) -> usize {
        3 + self.link_lengths.len() + 2 * self.link_dirs.len()
    }

    pub fn to_flat(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dimension());
        out.extend(self.root_pos.coords.iter());
        out.extend(&self.link_lengths);
        for d in &self.link_dirs {
            out.extend([d.u, d.v]);
        }
        out
    }
}

/// The anchor edge (first edge incident to vertex 0) and the first face containing it.
pub fn anchor_of(mesh: &TriangleMesh) -> Result<(usize, usize)> {
    match mesh.edges().first() {
        Some([0, _]) => Ok((0, mesh.edge_faces(0)[0])),
        _ => Err(MorphError::InvalidMesh(
            "vertex 0 is not part of any face".into(),
        )),
    }
}

pub fn encode(mesh: &TriangleMesh) -> Result<ShapePoint> {
    let (anchor_edge, _) = anchor_of(mesh)?;
    if let Some(&v) = mesh.isolated_vertices().first() {
        return Err(MorphError::InvalidMesh(format!(
            "vertex {v} is not part of any face"
        )));
    }
    let edge_lengths = mesh.edge_lengths();
    if let Some(e) = edge_lengths.iter().position(|&l| !(l > 0.0)) {
        let [a, b] = mesh.edges()[e];
        return Err(MorphError::InvalidMesh(format!(
            "edge ({a}, {b}) has zero length"
        )));
    }
    let [a, b] = mesh.edges()[anchor_edge];
    let anchor_dir = dir_to_spherical(&unit(&(mesh.vertex(b) - mesh.vertex(a)))?)?;
    let face_normals = (0..mesh.face_count())
        .map(|f| dir_to_spherical(&mesh.face_normal(f)?))
        .collect::<Result<_>>()?;
    Ok(ShapePoint {
        anchor_pos: mesh.vertex(0),
        anchor_dir,
        edge_lengths,
        face_normals,
    })
}

pub fn encode_skeleton(sk: &Skeleton) -> Result<SkeletonShapePoint> {
    let joints = sk.joints();
    let mut link_lengths = Vec::with_capacity(sk.links().len());
    let mut link_dirs = Vec::with_capacity(sk.links().len());
    for &(p, c) in sk.links() {
        let d = joints[c] - joints[p];
        let len = d.norm();
        if !(len > 0.0) {
            return Err(MorphError::ZeroLengthLink {
                parent: p,
                child: c,
            });
        }
        link_lengths.push(len);
        link_dirs.push(dir_to_spherical(&(d / len))?);
    }
    Ok(SkeletonShapePoint {
        root_pos: joints[sk.root()],
        link_lengths,
        link_dirs,
    })
}

fn check_t(t: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(MorphError::Config(format!("t = {t} is outside [0, 1]")));
    }
    Ok(())
}

fn lerp(a: f64, b: f64, t: f64) -> f64 {
    (1.0 - t) * a + t * b
}

fn lerp_point(a: &Point, b: &Point, t: f64) -> Point {
    Point::from(a.coords * (1.0 - t) + b.coords * t)
}

fn slerp_dir(
    a: SphericalDir,
    b: SphericalDir,
    t: f64,
    face: Option<usize>,
) -> Result<SphericalDir> {
    let d = slerp(&a.to_unit(), &b.to_unit(), t).map_err(|e| match e {
        MorphError::AmbiguousSlerp { .. } => MorphError::AmbiguousSlerp { face },
        other => other,
    })?;
    dir_to_spherical(&d)
}

/// Linear interpolation in shape space; directions follow the great circle.
///
/// `t = 0` returns `a` and `t = 1` returns `b` unchanged.
pub fn interp(a: &ShapePoint, b: &ShapePoint, t: f64) -> Result<ShapePoint> {
    a.check_layout(b)?;
    check_t(t)?;
    if t == 0.0 {
        return Ok(a.clone());
    }
    if t == 1.0 {
        return Ok(b.clone());
    }
    let face_normals = a
        .face_normals
        .iter()
        .zip(&b.face_normals)
        .enumerate()
        .map(|(f, (na, nb))| slerp_dir(*na, *nb, t, Some(f)))
        .collect::<Result<_>>()?;
    Ok(ShapePoint {
        anchor_pos: lerp_point(&a.anchor_pos, &b.anchor_pos, t),
        anchor_dir: slerp_dir(a.anchor_dir, b.anchor_dir, t, None)?,
        edge_lengths: a
            .edge_lengths
            .iter()
            .zip(&b.edge_lengths)
            .map(|(x, y)| lerp(*x, *y, t))
            .collect(),
        face_normals,
    })
}

pub fn interp_skeleton(
    a: &SkeletonShapePoint,
    b: &SkeletonShapePoint,
    t: f64,
) -> Result<SkeletonShapePoint> {
    if a.link_lengths.len() != b.link_lengths.len() || a.link_dirs.len() != b.link_dirs.len() {
        return Err(MorphError::StructureMismatch(format!(
            "skeleton layouts differ: {} vs {} links",
            a.link_lengths.len(),
            b.link_lengths.len()
        )));
    }
    check_t(t)?;
    if t == 0.0 {
        return Ok(a.clone());
    }
    if t == 1.0 {
        return Ok(b.clone());
    }
    let link_dirs = a
        .link_dirs
        .iter()
        .zip(&b.link_dirs)
        .enumerate()
        .map(|(i, (da, db))| slerp_dir(*da, *db, t, Some(i)))
        .collect::<Result<_>>()?;
    Ok(SkeletonShapePoint {
        root_pos: lerp_point(&a.root_pos, &b.root_pos, t),
        link_lengths: a
            .link_lengths
            .iter()
            .zip(&b.link_lengths)
            .map(|(x, y)| lerp(*x, *y, t))
            .collect(),
        link_dirs,
    })
}
