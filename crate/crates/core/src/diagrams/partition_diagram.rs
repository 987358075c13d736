//! Partition diagrams: set partitions of the `r + s` boundary points.

use std::fmt;

use crate::error::{domain, Result};

use super::{DiagramLike, UnionFind};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionDiagram {
    r: usize,
    s: usize,
    /// blocks sorted internally and by minimum
    blocks: Vec<Vec<usize>>,
}

impl PartitionDiagram {
    pub fn new(r: usize, s: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = r + s;
        let mut seen = vec![false; n];
        let mut canon = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(domain("empty block in a partition diagram"));
            }
            block.sort_unstable();
            block.dedup();
            for &p in &block {
                if p >= n {
                    return Err(domain(format!("point {p} out of range on {n} points")));
                }
                if seen[p] {
                    return Err(domain(format!("point {p} in two blocks")));
                }
                seen[p] = true;
            }
            canon.push(block);
        }
        if seen.iter().any(|&s| !s) {
            return Err(domain("blocks do not cover all points"));
        }
        canon.sort();
        Ok(PartitionDiagram { r, s, blocks: canon })
    }

    pub fn from_classes(r: usize, s: usize, class_of: &[usize]) -> Result<Self> {
        let n = r + s;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut ids: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        for p in 0..n {
            let id = *ids.entry(class_of[p]).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[id].push(p);
        }
        PartitionDiagram::new(r, s, blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// All strictly coarser diagrams: merge the blocks along a set
    /// partition of the block index set with at least one real merge.
    pub fn coarsenings(&self) -> Vec<PartitionDiagram> {
        let b = self.blocks.len();
        let mut groupings: Vec<Vec<Vec<usize>>> = Vec::new();
        gen_set_partitions(b, &mut vec![], &mut groupings);
        let mut out = Vec::new();
        for grouping in groupings {
            if grouping.len() == b {
                continue; // no merge
            }
            let blocks = grouping
                .iter()
                .map(|group| {
                    let mut merged = Vec::new();
                    for &i in group {
                        merged.extend_from_slice(&self.blocks[i]);
                    }
                    merged
                })
                .collect();
            out.push(PartitionDiagram::new(self.r, self.s, blocks).expect("merged blocks"));
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.blocks
                .iter()
                .map(|b| {
                    serde_json::Value::Array(
                        b.iter().map(|&p| serde_json::Value::from(p + 1)).collect(),
                    )
                })
                .collect(),
        )
    }
}

/// All set partitions of `{0..n}` as grouped index lists.
pub(crate) fn gen_set_partitions(n: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    gen_sp_rec(0, n, acc, out)
}

fn gen_sp_rec(next: usize, n: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if next == n {
        out.push(acc.clone());
        return;
    }
    for i in 0..acc.len() {
        acc[i].push(next);
        gen_sp_rec(next + 1, n, acc, out);
        acc[i].pop();
    }
    acc.push(vec![next]);
    gen_sp_rec(next + 1, n, acc, out);
    acc.pop();
}

impl DiagramLike for PartitionDiagram {
    const KIND: &'static str = "partition";

    fn hom(&self) -> (usize, usize) {
        (self.r, self.s)
    }

    fn compose(&self, other: &Self) -> Result<(Self, usize)> {
        if self.s != other.r {
            return Err(domain(format!(
                "cannot compose ({},{}) with ({},{})",
                self.r, self.s, other.r, other.s
            )));
        }
        let (r, mid, t) = (self.r, self.s, other.s);
        let mut uf = UnionFind::new(r + mid + t);
        for block in &self.blocks {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        for block in &other.blocks {
            for w in block.windows(2) {
                uf.union(w[0] + r, w[1] + r);
            }
        }
        let mut class_of = vec![0usize; r + t];
        for p in 0..r {
            class_of[p] = uf.find(p);
        }
        for j in 0..t {
            class_of[r + j] = uf.find(r + mid + j);
        }
        // renumber classes for from_classes
        let composed = PartitionDiagram::from_classes(r, t, &class_of)?;
        // loops: classes met only by middle points
        let mut middle_classes: Vec<usize> = (r..r + mid).map(|p| uf.find(p)).collect();
        middle_classes.sort_unstable();
        middle_classes.dedup();
        let external_classes: Vec<usize> = (0..r)
            .chain(r + mid..r + mid + t)
            .map(|p| uf.find(p))
            .collect();
        let loops = middle_classes
            .iter()
            .filter(|c| !external_classes.contains(c))
            .count();
        Ok((composed, loops))
    }

    fn tensor(&self, other: &Self) -> Self {
        let (r1, s1) = self.hom();
        let (r2, s2) = other.hom();
        let shift_self = |p: usize| if p < r1 { p } else { p + r2 };
        let shift_other = |p: usize| if p < r2 { p + r1 } else { p + r1 + s1 };
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&p| shift_self(p)).collect())
            .collect();
        blocks.extend(
            other
                .blocks
                .iter()
                .map(|b| b.iter().map(|&p| shift_other(p)).collect::<Vec<_>>()),
        );
        PartitionDiagram::new(r1 + r2, s1 + s2, blocks).expect("tensor of valid diagrams")
    }

    fn star(&self) -> Self {
        let (r, s) = self.hom();
        let map = |p: usize| {
            if p < r {
                s + (r - 1 - p)
            } else {
                s - 1 - (p - r)
            }
        };
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&p| map(p)).collect())
            .collect();
        PartitionDiagram::new(s, r, blocks).expect("star of a valid diagram")
    }

    fn identity(r: usize) -> Self {
        let blocks = (0..r).map(|i| vec![i, r + i]).collect();
        PartitionDiagram::new(r, r, blocks).expect("identity diagram")
    }

    fn propagating_number(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.iter().any(|&p| p < self.r) && b.iter().any(|&p| p >= self.r))
            .count()
    }
}

impl fmt::Debug for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{}){:?}", self.r, self.s, self.blocks)
    }
}
