//! ASCII OFF / OBJ triangle meshes and the plain-text skeleton format.
//!
//! Vertex order is preserved in both directions: it is the correspondence
//! between poses. Floats are written with 17 significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{MorphError, Result};
use crate::geom::{Point, Skeleton, TriangleMesh};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Off,
    Obj,
}

impl MeshFormat {
    pub fn from_path(path: &Path) -> Result<Self> {
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        match ext.as_deref() {
            Some("off") => Ok(MeshFormat::Off),
            Some("obj") => Ok(MeshFormat::Obj),
            _ => Err(MorphError::Config(format!(
                "{}: unknown mesh extension (expected .off or .obj)",
                path.display()
            ))),
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            MeshFormat::Off => "off",
            MeshFormat::Obj => "obj",
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> MorphError + '_ {
    move |source| MorphError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> MorphError {
    MorphError::Parse {
        path: path.to_path_buf(),
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, path: &Path, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(path, line, format!("invalid {what} '{tok}'")))
}

fn parse_point<'a>(
    mut toks: impl Iterator<Item = &'a str>,
    path: &Path,
    line: usize,
) -> Result<Point> {
    let mut c = [0.0; 3];
    for slot in &mut c {
        let tok = toks
            .next()
            .ok_or_else(|| parse_err(path, line, "expected 3 coordinates"))?;
        *slot = parse_num(tok, path, line, "coordinate")?;
    }
    Ok(Point::new(c[0], c[1], c[2]))
}

pub fn read_mesh(path: &Path) -> Result<TriangleMesh> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    match MeshFormat::from_path(path)? {
        MeshFormat::Off => parse_off(&text, path),
        MeshFormat::Obj => parse_obj(&text, path),
    }
}

pub fn write_mesh(path: &Path, mesh: &TriangleMesh) -> Result<()> {
    let text = match MeshFormat::from_path(path)? {
        MeshFormat::Off => format_off(mesh),
        MeshFormat::Obj => format_obj(mesh),
    };
    fs::write(path, text).map_err(io_err(path))
}

pub fn parse_off(text: &str, path: &Path) -> Result<TriangleMesh> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file"))?;
    let rest = header
        .strip_prefix("OFF")
        .ok_or_else(|| parse_err(path, hline, "missing OFF header"))?;
    let counts_line = if rest.trim().is_empty() {
        lines
            .next()
            .ok_or_else(|| parse_err(path, hline, "missing element counts"))?
    } else {
        (hline, rest.trim())
    };
    let mut toks = counts_line.1.split_whitespace();
    let mut count = |what: &str| -> Result<usize> {
        let tok = toks
            .next()
            .ok_or_else(|| parse_err(path, counts_line.0, format!("missing {what} count")))?;
        parse_num(tok, path, counts_line.0, what)
    };
    let nv = count("vertex")?;
    let nf = count("face")?;

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| parse_err(path, counts_line.0, "file ends before all vertices"))?;
        vertices.push(parse_point(l.split_whitespace(), path, ln)?);
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| parse_err(path, counts_line.0, "file ends before all faces"))?;
        let mut toks = l.split_whitespace();
        let arity: usize = parse_num(toks.next().unwrap(), path, ln, "face size")?;
        if arity != 3 {
            return Err(MorphError::UnsupportedFace {
                path: path.to_path_buf(),
                line: ln,
                arity,
            });
        }
        let mut f = [0usize; 3];
        for slot in &mut f {
            let tok = toks
                .next()
                .ok_or_else(|| parse_err(path, ln, "expected 3 vertex indices"))?;
            *slot = parse_num(tok, path, ln, "vertex index")?;
        }
        faces.push(f);
    }
    TriangleMesh::new(vertices, faces)
}

pub fn parse_obj(text: &str, path: &Path) -> Result<TriangleMesh> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for (ln, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("v") => vertices.push(parse_point(toks, path, ln)?),
            Some("f") => {
                let refs: Vec<&str> = toks.collect();
                if refs.len() != 3 {
                    return Err(MorphError::UnsupportedFace {
                        path: path.to_path_buf(),
                        line: ln,
                        arity: refs.len(),
                    });
                }
                let mut f = [0usize; 3];
                for (slot, r) in f.iter_mut().zip(refs) {
                    let idx: i64 =
                        parse_num(r.split('/').next().unwrap(), path, ln, "vertex index")?;
                    let n = vertices.len() as i64;
                    let resolved = match idx {
                        i if i > 0 => i - 1,
                        i if i < 0 => n + i,
                        _ => return Err(parse_err(path, ln, "vertex index 0 is not valid in OBJ")),
                    };
                    if resolved < 0 {
                        return Err(parse_err(
                            path,
                            ln,
                            format!("vertex index {idx} out of range"),
                        ));
                    }
                    *slot = resolved as usize;
                }
                faces.push(f);
            }
            _ => {}
        }
    }
    TriangleMesh::new(vertices, faces)
}

fn push_point(out: &mut String, p: &Point) {
    let _ = write!(out, "{:.16e} {:.16e} {:.16e}", p.x, p.y, p.z);
}

pub fn format_off(mesh: &TriangleMesh) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "OFF\n{} {} {}",
        mesh.vertex_count(),
        mesh.face_count(),
        mesh.edge_count()
    );
    for p in mesh.vertices() {
        push_point(&mut out, p);
        out.push('\n');
    }
    for f in mesh.faces() {
        let _ = writeln!(out, "3 {} {} {}", f[0], f[1], f[2]);
    }
    out
}

pub fn format_obj(mesh: &TriangleMesh) -> String {
    let mut out = String::new();
    for p in mesh.vertices() {
        out.push_str("v ");
        push_point(&mut out, p);
        out.push('\n');
    }
    for f in mesh.faces() {
        let _ = writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1);
    }
    out
}

/// Lines `J x y z parent`, one per joint in index order; the root has parent −1.
pub fn parse_skeleton(text: &str, path: &Path) -> Result<Skeleton> {
    let mut joints = Vec::new();
    let mut parents = Vec::new();
    for (ln, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        if toks.next() != Some("J") {
            return Err(parse_err(
                path,
                ln,
                "expected a line of the form 'J x y z parent'",
            ));
        }
        joints.push(parse_point(&mut toks, path, ln)?);
        let tok = toks
            .next()
            .ok_or_else(|| parse_err(path, ln, "missing parent index"))?;
        let parent: i64 = parse_num(tok, path, ln, "parent index")?;
        parents.push(match parent {
            -1 => None,
            p if p >= 0 => Some(p as usize),
            p => return Err(parse_err(path, ln, format!("parent index {p} is invalid"))),
        });
        if toks.next().is_some() {
            return Err(parse_err(path, ln, "trailing tokens after parent index"));
        }
    }
    Skeleton::new(joints, parents)
}

pub fn format_skeleton(sk: &Skeleton) -> String {
    let mut out = String::new();
    for (p, parent) in sk.joints().iter().zip(sk.parents()) {
        out.push_str("J ");
        push_point(&mut out, p);
        let _ = writeln!(out, " {}", parent.map_or(-1, |q| q as i64));
    }
    out
}

pub fn read_skeleton(path: &Path) -> Result<Skeleton> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_skeleton(&text, path)
}

pub fn write_skeleton(path: &Path, sk: &Skeleton) -> Result<()> {
    fs::write(path, format_skeleton(sk)).map_err(io_err(path))
}

/// `dir/prefix_0000.ext`.
pub fn frame_path(dir: &Path, prefix: &str, index: usize, ext: &str) -> PathBuf {
    dir.join(format!("{prefix}_{index:04}.{ext}"))
}
