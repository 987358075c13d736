//! Permutations in one-line notation, their diagram embeddings and the
//! longest-decreasing-subsequence statistic.

use crate::diagrams::{BrauerDiagram, DirectedDiagram, PartitionDiagram};
use crate::error::{domain, Result};
use crate::tableaux::Partition;

/// A permutation of `{0, .., n-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(domain("not a permutation"));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Adjacent transposition `s_i = (i, i+1)`, 1-based `i`.
    pub fn adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(domain(format!("s_{i} undefined on {n} strands")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Ok(Perm { images })
    }

    pub fn reversal(n: usize) -> Self {
        Perm {
            images: (0..n).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` then `other` (left to right, as diagrams stack).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    pub fn sign(&self) -> i64 {
        let mut inv = 0;
        for i in 0..self.images.len() {
            for j in (i + 1)..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            cycles.push(len);
        }
        Partition::from_unsorted(cycles)
    }

    /// Length of the longest decreasing subsequence, by patience-style
    /// dynamic programming on the reversed sequence.
    pub fn lds(&self) -> usize {
        // longest increasing subsequence of the reversed one-line word
        let word: Vec<usize> = self.images.iter().rev().copied().collect();
        let mut tails: Vec<usize> = Vec::new();
        for &v in &word {
            match tails.binary_search(&v) {
                Ok(pos) | Err(pos) => {
                    if pos == tails.len() {
                        tails.push(v);
                    } else {
                        tails[pos] = v;
                    }
                }
            }
        }
        tails.len()
    }

    pub fn to_brauer(&self) -> BrauerDiagram {
        let n = self.images.len();
        let pairs = (0..n).map(|i| (i, n + self.images[i])).collect();
        BrauerDiagram::new(n, n, pairs).expect("permutation diagram")
    }

    pub fn to_partition_diagram(&self) -> PartitionDiagram {
        let n = self.images.len();
        let blocks = (0..n).map(|i| vec![i, n + self.images[i]]).collect();
        PartitionDiagram::new(n, n, blocks).expect("permutation diagram")
    }

    pub fn to_directed(&self) -> DirectedDiagram {
        let n = self.images.len();
        let pairs = (0..n).map(|i| (i, n + self.images[i])).collect();
        DirectedDiagram::new(n, n, pairs).expect("permutation diagram")
    }

    /// All permutations of `{0..n}` in lexicographic order of the
    /// one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        if n <= 1 {
            return vec![Perm::identity(n)];
        }
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm {
                images: current.clone(),
            });
            // next lexicographic permutation
            let mut i = n - 1;
            while i > 0 && current[i - 1] >= current[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = n - 1;
            while current[j] <= current[i - 1] {
                j -= 1;
            }
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// A representative permutation with the given cycle type.
    pub fn with_cycle_type(lambda: &Partition) -> Perm {
        let mut images = Vec::with_capacity(lambda.size());
        let mut offset = 0;
        for &len in lambda.parts() {
            for j in 0..len {
                images.push(offset + (j + 1) % len);
            }
            offset += len;
        }
        Perm { images }
    }
}
