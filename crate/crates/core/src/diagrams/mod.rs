//! Combinatorial diagrams of the three categories: Brauer perfect
//! matchings, set-partition diagrams and directed matchings, with
//! composition, loop counting, tensor product, the star antiinvolution,
//! propagating numbers, crossing statistics and rotation.
//!
//! Points of a diagram in `Hom(r, s)` are indexed `0..r` for the top row
//! (left to right) and `r..r+s` for the bottom row; the total order on
//! points is the index order, tops before bottoms.

mod brauer;
mod directed;
mod enumerate;
mod partition_diagram;

pub use brauer::BrauerDiagram;
pub use directed::{DirectedDiagram, Sign};
pub use enumerate::*;
pub use partition_diagram::PartitionDiagram;

use crate::error::Result;

/// Common interface of the three diagram kinds.
pub trait DiagramLike: Clone + Ord + std::fmt::Debug {
    const KIND: &'static str;

    /// `(r, s)` for an element of `Hom(r, s)`.
    fn hom(&self) -> (usize, usize);

    /// Stacks `self` on top of `other`, returning the composite and the
    /// number of loops removed.
    fn compose(&self, other: &Self) -> Result<(Self, usize)>;

    /// Places `self` to the left of `other`.
    fn tensor(&self, other: &Self) -> Self;

    /// Rotation through a half turn: swaps the rows and reverses each.
    fn star(&self) -> Self;

    fn identity(r: usize) -> Self;

    /// Number of strands or blocks meeting both rows.
    fn propagating_number(&self) -> usize;
}

/// Disjoint-set structure used by the composition routines.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Number of crossing pairs of strands, in the total order on points:
/// pairs `(a1,b1)`, `(a2,b2)` with `a1 < a2 < b1 < b2`.
pub fn crossing_pairs(pairs: &[(usize, usize)]) -> usize {
    let mut count = 0;
    for (i, &(a1, b1)) in pairs.iter().enumerate() {
        for &(a2, b2) in &pairs[i + 1..] {
            let (x1, y1) = (a1.min(b1), a1.max(b1));
            let (x2, y2) = (a2.min(b2), a2.max(b2));
            let (lo, hi) = if x1 < x2 { ((x1, y1), (x2, y2)) } else { ((x2, y2), (x1, y1)) };
            if lo.0 < hi.0 && hi.0 < lo.1 && lo.1 < hi.1 {
                count += 1;
            }
        }
    }
    count
}

/// True when some `j` strands pairwise cross: strands
/// `(a_1,b_1)..(a_j,b_j)` with `a_1 < ... < a_j < b_1 < ... < b_j`.
pub fn has_j_crossing(pairs: &[(usize, usize)], j: usize) -> bool {
    if j == 0 {
        return true;
    }
    let mut sorted: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    sorted.sort_unstable();
    fn extend(
        sorted: &[(usize, usize)],
        from: usize,
        depth: usize,
        target: usize,
        last_a: usize,
        first_b: usize,
        last_b: usize,
    ) -> bool {
        if depth == target {
            return true;
        }
        for (i, &(a, b)) in sorted.iter().enumerate().skip(from) {
            if depth > 0 && (a <= last_a || a >= first_b || b <= last_b) {
                continue;
            }
            let nfb = if depth == 0 { b } else { first_b };
            if extend(sorted, i + 1, depth + 1, target, a, nfb, b) {
                return true;
            }
        }
        false
    }
    extend(&sorted, 0, 0, j, 0, usize::MAX, 0)
}

/// Largest `j` such that some `j` strands pairwise cross.
pub fn max_crossing(pairs: &[(usize, usize)]) -> usize {
    let mut j = 0;
    while has_j_crossing(pairs, j + 1) {
        j += 1;
    }
    j
}
