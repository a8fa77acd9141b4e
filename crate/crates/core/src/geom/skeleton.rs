use std::sync::Arc;

use crate::error::{MorphError, Result};
use crate::geom::Point;

#[derive(Debug, PartialEq, Eq)]
struct SkeletonTopology {
    parent: Vec<Option<usize>>,
    root: usize,
    children: Vec<Vec<usize>>,
    /// `(parent, child)` pairs in depth-first order from the root.
    links: Vec<(usize, usize)>,
}

/// A rooted tree of joints.
///
/// Children of each joint are ordered by joint index, which fixes the
/// depth-first link enumeration.
#[derive(Debug, Clone)]
pub struct Skeleton {
    joints: Vec<Point>,
    topo: Arc<SkeletonTopology>,
}

impl Skeleton {
    /// `parent[i]` is `None` for the root and `Some(p)` otherwise.
    pub fn new(joints: Vec<Point>, parent: Vec<Option<usize>>) -> Result<Self> {
        let n = joints.len();
        if parent.len() != n {
            return Err(MorphError::InvalidSkeleton(format!(
                "{} joints but {} parent entries",
                n,
                parent.len()
            )));
        }
        if n == 0 {
            return Err(MorphError::InvalidSkeleton("no joints".into()));
        }
        if let Some(i) = joints
            .iter()
            .position(|p| !p.coords.iter().all(|c| c.is_finite()))
        {
            return Err(MorphError::InvalidSkeleton(format!(
                "joint {i} has a non-finite coordinate"
            )));
        }
        let roots: Vec<usize> = (0..n).filter(|&i| parent[i].is_none()).collect();
        let root = match roots.as_slice() {
            [r] => *r,
            [] => return Err(MorphError::InvalidSkeleton("no root joint".into())),
            many => {
                return Err(MorphError::InvalidSkeleton(format!(
                    "{} root joints ({:?})",
                    many.len(),
                    many
                )))
            }
        };
        let mut children = vec![Vec::new(); n];
        for (i, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(MorphError::InvalidSkeleton(format!(
                        "joint {i} has parent {p} out of range"
                    )));
                }
                if p == i {
                    return Err(MorphError::InvalidSkeleton(format!(
                        "joint {i} is its own parent"
                    )));
                }
                children[p].push(i);
            }
        }

        let mut links = Vec::with_capacity(n - 1);
        let mut stack = vec![root];
        let mut seen = 1;
        while let Some(j) = stack.pop() {
            for &c in children[j].iter().rev() {
                stack.push(c);
            }
            if let Some(p) = parent[j] {
                links.push((p, j));
                seen += 1;
            }
        }
        if seen != n {
            return Err(MorphError::InvalidSkeleton(
                "parent relation contains a cycle".into(),
            ));
        }
        Ok(Self {
            joints,
            topo: Arc::new(SkeletonTopology {
                parent,
                root,
                children,
                links,
            }),
        })
    }

    pub fn with_joints(&self, joints: Vec<Point>) -> Result<Self> {
        if joints.len() != self.joints.len() {
            return Err(MorphError::StructureMismatch(format!(
                "expected {} joints, got {}",
                self.joints.len(),
                joints.len()
            )));
        }
        Ok(Self {
            joints,
            topo: Arc::clone(&self.topo),
        })
    }

    pub fn joints(&self) -> &[Point] {
        &self.joints
    }

    pub fn joint_count(&self) -> usize {
        self.joints.len()
    }

    pub fn root(&self) -> usize {
        self.topo.root
    }

    pub fn parent(&self, joint: usize) -> Option<usize> {
        self.topo.parent[joint]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.topo.parent
    }

    pub fn children(&self, joint: usize) -> &[usize] {
        &self.topo.children[joint]
    }

    /// Links as `(parent, child)` in depth-first order.
    pub fn links(&self) -> &[(usize, usize)] {
        &self.topo.links
    }

    pub fn link_lengths(&self) -> Vec<f64> {
        self.links()
            .iter()
            .map(|&(p, c)| (self.joints[c] - self.joints[p]).norm())
            .collect()
    }

    pub fn same_structure(&self, other: &Skeleton) -> bool {
        Arc::ptr_eq(&self.topo, &other.topo) || self.topo == other.topo
    }

    pub fn max_joint_deviation(&self, other: &Skeleton) -> f64 {
        self.joints
            .iter()
            .zip(&other.joints)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}
