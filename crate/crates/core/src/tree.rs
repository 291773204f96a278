//! Breadth-first expansion of the binary tree of solutions.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solution::PPSolution;
use crate::successor::{first_successor, second_successor, SuccessorKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub solution: PPSolution,
    pub depth: usize,
    /// Successor kinds from the root, one per level.
    pub path: Vec<SuccessorKind>,
}

impl TreeNode {
    fn root() -> Self {
        TreeNode {
            solution: PPSolution::root(),
            depth: 0,
            path: Vec::new(),
        }
    }

    fn child(&self, solution: PPSolution, kind: SuccessorKind) -> Self {
        let mut path = self.path.clone();
        path.push(kind);
        TreeNode {
            solution,
            depth: self.depth + 1,
            path,
        }
    }

    /// Path as a string over `{F, S}`.
    pub fn path_string(&self) -> String {
        self.path.iter().map(|k| k.letter()).collect()
    }

    pub fn to_record(&self) -> NodeRecord {
        NodeRecord {
            m: self.solution.m(),
            x: self.solution.x().to_string(),
            y: self.solution.y().to_string(),
            depth: self.depth,
            path: self.path_string(),
        }
    }
}

/// Output record for one tree node, fields in emission order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub m: u32,
    pub x: String,
    pub y: String,
    pub depth: usize,
    pub path: String,
}

// Heap entries order by exponent only.
struct Pending(TreeNode);

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.0.solution.m() == other.0.solution.m()
    }
}

impl Eq for Pending {}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.solution.m().cmp(&other.0.solution.m())
    }
}

/// Every solution with `m ≤ max_m`, in increasing `m`.
///
/// The root is its own first successor, so only its second successor is
/// expanded. Children always have larger exponents than their parent, so a
/// min-queue on `m` emits nodes in order. A repeated exponent is an error.
pub fn enumerate(max_m: u32) -> Result<Vec<TreeNode>> {
    if max_m < 5 {
        return Err(Error::ExponentBelowRoot(max_m));
    }
    let mut queue = BinaryHeap::new();
    queue.push(Reverse(Pending(TreeNode::root())));
    let mut out: Vec<TreeNode> = Vec::new();

    while let Some(Reverse(Pending(node))) = queue.pop() {
        if let Some(last) = out.last() {
            if last.solution.m() == node.solution.m() {
                return Err(Error::DuplicateExponent(node.solution.m()));
            }
        }
        let s = &node.solution;
        let mut children = Vec::with_capacity(2);
        if !s.is_root() && 2 * s.m() - 5 <= max_m {
            children.push((first_successor(s)?, SuccessorKind::First));
        }
        if 2 * s.m() + 5 <= max_m {
            children.push((second_successor(s)?, SuccessorKind::Second));
        }
        for (child, kind) in children {
            queue.push(Reverse(Pending(node.child(child, kind))));
        }
        out.push(node);
    }
    Ok(out)
}

/// Rebuild a solution from its path.
pub fn replay(path: &[SuccessorKind]) -> Result<PPSolution> {
    path.iter().try_fold(PPSolution::root(), |s, &k| match k {
        SuccessorKind::First => first_successor(&s),
        SuccessorKind::Second => second_successor(&s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pp(x: i64, y: i64, m: u32) -> PPSolution {
        PPSolution::new(BigInt::from(x), BigInt::from(y), m).unwrap()
    }

    #[test]
    fn first_four() {
        let nodes = enumerate(35).unwrap();
        let sols: Vec<_> = nodes.iter().map(|n| n.solution.clone()).collect();
        assert_eq!(
            sols,
            [
                pp(1, 2, 5),
                pp(701, 430, 15),
                pp(262009, 78842, 25),
                pp(78606773, 10718566, 35)
            ]
        );
        let paths: Vec<_> = nodes.iter().map(TreeNode::path_string).collect();
        assert_eq!(paths, ["", "S", "SF", "SS"]);
    }

    #[test]
    fn root_only() {
        let nodes = enumerate(5).unwrap();
        assert_eq!(nodes.len(), 1);
        assert_eq!(nodes[0].depth, 0);
        assert!(nodes[0].path.is_empty());
        assert_eq!(enumerate(4), Err(Error::ExponentBelowRoot(4)));
    }

    #[test]
    fn eleven_up_to_105() {
        let nodes = enumerate(105).unwrap();
        let ms: Vec<u32> = nodes.iter().map(|n| n.solution.m()).collect();
        assert_eq!(ms, (0..=10).map(|k| 10 * k + 5).collect::<Vec<_>>());
    }

    #[test]
    fn paths_replay() {
        for node in enumerate(155).unwrap() {
            assert_eq!(replay(&node.path).unwrap(), node.solution);
            assert_eq!(node.depth, node.path.len());
        }
    }
}
