//! Directed Brauer diagrams: matchings of the boundary points into
//! ordered pairs, modelling mixed tensors of `V` and its dual.

use std::fmt;

use crate::error::{domain, Result};

use super::{BrauerDiagram, DiagramLike};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedDiagram {
    r: usize,
    s: usize,
    /// ordered pairs `(initial, final)`, sorted by minimum endpoint
    pairs: Vec<(usize, usize)>,
}

impl DirectedDiagram {
    pub fn new(r: usize, s: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = r + s;
        if pairs.len() * 2 != n {
            return Err(domain(format!(
                "a directed diagram on ({r},{s}) needs {} pairs, got {}",
                n / 2,
                pairs.len()
            )));
        }
        let mut seen = vec![false; n];
        for &(a, b) in &pairs {
            if a >= n || b >= n || a == b {
                return Err(domain(format!("invalid pair ({a},{b}) on {n} points")));
            }
            if seen[a] || seen[b] {
                return Err(domain(format!("point repeated in pair ({a},{b})")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        let mut canon = pairs;
        canon.sort_unstable_by_key(|&(a, b)| a.min(b));
        Ok(DirectedDiagram { r, s, pairs: canon })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn underlying(&self) -> BrauerDiagram {
        let pairs = self.pairs.iter().map(|&(a, b)| (a, b)).collect();
        BrauerDiagram::new(self.r, self.s, pairs).expect("valid underlying matching")
    }

    /// Sign word of the top edge: `+` when the point starts its strand.
    pub fn domain_word(&self) -> Vec<Sign> {
        let mut word = vec![Sign::Plus; self.r];
        for &(from, to) in &self.pairs {
            if from < self.r {
                word[from] = Sign::Plus;
            }
            if to < self.r {
                word[to] = Sign::Minus;
            }
        }
        word
    }

    /// Sign word of the bottom edge: `+` when the point ends its strand.
    pub fn codomain_word(&self) -> Vec<Sign> {
        let mut word = vec![Sign::Plus; self.s];
        for &(from, to) in &self.pairs {
            if from >= self.r {
                word[from - self.r] = Sign::Minus;
            }
            if to >= self.r {
                word[to - self.r] = Sign::Plus;
            }
        }
        word
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.pairs
                .iter()
                .map(|&(a, b)| serde_json::json!([a + 1, b + 1]))
                .collect(),
        )
    }
}

impl DiagramLike for DirectedDiagram {
    const KIND: &'static str = "directed";

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
        if self.codomain_word() != other.domain_word() {
            return Err(domain(
                "orientation clash: codomain and domain sign words differ",
            ));
        }
        let (composed, loops) = self.underlying().compose(&other.underlying())?;
        let (r, mid, t) = (self.r, self.s, other.s);
        // recover orientations: a composite strand inherits the direction
        // of the strand at its external endpoints
        let initial_at = |unified: usize| -> bool {
            if unified < r {
                self.pairs.iter().any(|&(from, _)| from == unified)
            } else {
                let local = unified - r + mid; // other's bottom point id
                other.pairs.iter().any(|&(from, _)| from == local)
            }
        };
        let mut pairs = Vec::with_capacity(composed.pairs().len());
        for &(a, b) in composed.pairs() {
            let a_initial = initial_at(a);
            let b_initial = initial_at(b);
            if a_initial == b_initial {
                return Err(domain("inconsistent strand orientation after composition"));
            }
            if a_initial {
                pairs.push((a, b));
            } else {
                pairs.push((b, a));
            }
        }
        let _ = t;
        Ok((DirectedDiagram::new(r, other.s, pairs)?, loops))
    }

    fn tensor(&self, other: &Self) -> Self {
        let (r1, s1) = self.hom();
        let (r2, s2) = other.hom();
        let shift_self = |p: usize| if p < r1 { p } else { p + r2 };
        let shift_other = |p: usize| if p < r2 { p + r1 } else { p + r1 + s1 };
        let mut pairs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .map(|&(a, b)| (shift_self(a), shift_self(b)))
            .collect();
        pairs.extend(
            other
                .pairs
                .iter()
                .map(|&(a, b)| (shift_other(a), shift_other(b))),
        );
        DirectedDiagram::new(r1 + r2, s1 + s2, pairs).expect("tensor of valid diagrams")
    }

    fn star(&self) -> Self {
        let (r, s) = self.hom();
        // ordered pairs are relabelled, never reversed
        let map = |p: usize| {
            if p < r {
                s + (r - 1 - p)
            } else {
                s - 1 - (p - r)
            }
        };
        let pairs = self.pairs.iter().map(|&(a, b)| (map(a), map(b))).collect();
        DirectedDiagram::new(s, r, pairs).expect("star of a valid diagram")
    }

    fn identity(r: usize) -> Self {
        let pairs = (0..r).map(|i| (i, r + i)).collect();
        DirectedDiagram::new(r, r, pairs).expect("identity diagram")
    }

    fn propagating_number(&self) -> usize {
        self.pairs
            .iter()
            .filter(|&&(a, b)| (a < self.r) != (b < self.r))
            .count()
    }
}

impl fmt::Debug for DirectedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{}){:?}", self.r, self.s, self.pairs)
    }
}
