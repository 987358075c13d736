//! Brauer diagrams: perfect matchings of the `r + s` boundary points.

use std::fmt;

use crate::error::{domain, Result};

use super::DiagramLike;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerDiagram {
    r: usize,
    s: usize,
    /// pairs stored `(min, max)` in the point order, sorted
    pairs: Vec<(usize, usize)>,
}

impl BrauerDiagram {
    pub fn new(r: usize, s: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = r + s;
        if pairs.len() * 2 != n {
            return Err(domain(format!(
                "a Brauer diagram on ({r},{s}) needs {} pairs, got {}",
                n / 2,
                pairs.len()
            )));
        }
        let mut seen = vec![false; n];
        let mut canon = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            if a >= n || b >= n || a == b {
                return Err(domain(format!("invalid pair ({a},{b}) on {n} points")));
            }
            if seen[a] || seen[b] {
                return Err(domain(format!("point repeated in pair ({a},{b})")));
            }
            seen[a] = true;
            seen[b] = true;
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        Ok(BrauerDiagram { r, s, pairs: canon })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Partner of a point.
    pub fn partner(&self, p: usize) -> usize {
        for &(a, b) in &self.pairs {
            if a == p {
                return b;
            }
            if b == p {
                return a;
            }
        }
        unreachable!("point {p} not covered")
    }

    /// Relabels the points of a `(0, k)` diagram by `i -> (i + shift) mod k`.
    pub fn rotate_by(&self, shift: usize) -> Result<BrauerDiagram> {
        if self.r != 0 {
            return Err(domain("rotation is defined for diagrams in Hom(0, k)"));
        }
        let k = self.s;
        let pairs = self
            .pairs
            .iter()
            .map(|&(a, b)| ((a + shift) % k, (b + shift) % k))
            .collect();
        BrauerDiagram::new(0, k, pairs)
    }

    pub fn rotate(&self) -> Result<BrauerDiagram> {
        self.rotate_by(1)
    }

    /// Pairs in 1-based labels, for serialization.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.pairs
                .iter()
                .map(|&(a, b)| serde_json::json!([a + 1, b + 1]))
                .collect(),
        )
    }
}

impl DiagramLike for BrauerDiagram {
    const KIND: &'static str = "brauer";

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
        // unified ids: self point p -> p, other point p -> p + r, so the
        // ranges are 0..r tops, r..r+mid middles, r+mid.. bottoms
        let mut nbr_self = vec![usize::MAX; r + mid];
        for &(a, b) in &self.pairs {
            nbr_self[a] = b;
            nbr_self[b] = a;
        }
        let mut nbr_other = vec![usize::MAX; mid + t];
        for &(a, b) in &other.pairs {
            nbr_other[a] = b;
            nbr_other[b] = a;
        }
        let is_middle = |id: usize| id >= r && id < r + mid;
        let mut visited = vec![false; r + mid + t];
        let mut pairs = Vec::with_capacity((r + t) / 2);
        let externals: Vec<usize> = (0..r).chain(r + mid..r + mid + t).collect();
        for &start in &externals {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            // walk the strand path, alternating between the two diagrams
            // at every middle point
            let mut current = start;
            let mut in_self = current < r;
            loop {
                let next = if in_self {
                    nbr_self[current]
                } else {
                    nbr_other[current - r] + r
                };
                visited[next] = true;
                if is_middle(next) {
                    in_self = !in_self;
                    current = next;
                } else {
                    pairs.push((start, next));
                    break;
                }
            }
        }
        // relabel externals to the composite's points: tops keep 0..r,
        // bottoms r+mid+j -> r+j
        let relabel = |id: usize| if id < r { id } else { id - mid };
        let pairs = pairs
            .into_iter()
            .map(|(a, b)| (relabel(a), relabel(b)))
            .collect();
        // loops: unvisited middle cycles
        let mut loops = 0;
        for m in r..r + mid {
            if visited[m] {
                continue;
            }
            loops += 1;
            let mut current = m;
            let mut in_self = true; // follow the self strand first
            while !visited[current] {
                visited[current] = true;
                let next = if in_self {
                    nbr_self[current]
                } else {
                    nbr_other[current - r] + r
                };
                in_self = !in_self;
                current = next;
            }
        }
        Ok((BrauerDiagram::new(r, t, pairs)?, loops))
    }

    fn tensor(&self, other: &Self) -> Self {
        let (r1, s1) = self.hom();
        let (r2, s2) = other.hom();
        let mut pairs = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        let shift_self = |p: usize| if p < r1 { p } else { p + r2 };
        let shift_other = |p: usize| if p < r2 { p + r1 } else { p + r1 + s1 };
        pairs.extend(self.pairs.iter().map(|&(a, b)| (shift_self(a), shift_self(b))));
        pairs.extend(other.pairs.iter().map(|&(a, b)| (shift_other(a), shift_other(b))));
        BrauerDiagram::new(r1 + r2, s1 + s2, pairs).expect("tensor of valid diagrams")
    }

    fn star(&self) -> Self {
        let (r, s) = self.hom();
        // half turn: top i -> bottom s + (r-1-i) position, bottom j -> top
        let map = |p: usize| {
            if p < r {
                s + (r - 1 - p)
            } else {
                s - 1 - (p - r)
            }
        };
        let pairs = self.pairs.iter().map(|&(a, b)| (map(a), map(b))).collect();
        BrauerDiagram::new(s, r, pairs).expect("star of a valid diagram")
    }

    fn identity(r: usize) -> Self {
        let pairs = (0..r).map(|i| (i, r + i)).collect();
        BrauerDiagram::new(r, r, pairs).expect("identity diagram")
    }

    fn propagating_number(&self) -> usize {
        self.pairs
            .iter()
            .filter(|&&(a, b)| a < self.r && b >= self.r)
            .count()
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{}){:?}", self.r, self.s, self.pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tl_u1() -> BrauerDiagram {
        // cup over cap on 2 strands
        BrauerDiagram::new(2, 2, vec![(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn compose_u1_u1_gives_one_loop() {
        let u = tl_u1();
        let (d, loops) = u.compose(&u).unwrap();
        assert_eq!(d, u);
        assert_eq!(loops, 1);
    }

    #[test]
    fn identity_is_neutral() {
        let u = tl_u1();
        let id = BrauerDiagram::identity(2);
        assert_eq!(id.compose(&u).unwrap(), (u.clone(), 0));
        assert_eq!(u.compose(&id).unwrap(), (u.clone(), 0));
    }

    #[test]
    fn star_swaps_cup_and_cap() {
        let cap = BrauerDiagram::new(0, 2, vec![(0, 1)]).unwrap();
        let cup = BrauerDiagram::new(2, 0, vec![(0, 1)]).unwrap();
        assert_eq!(cap.star(), cup);
        assert_eq!(cup.star(), cap);
    }

    #[test]
    fn propagating_number_examples() {
        assert_eq!(BrauerDiagram::identity(4).propagating_number(), 4);
        assert_eq!(tl_u1().propagating_number(), 0);
    }

    #[test]
    fn rotation_examples() {
        let m = BrauerDiagram::new(0, 6, vec![(0, 1), (2, 3), (4, 5)]).unwrap();
        let rotated = m.rotate().unwrap();
        assert_eq!(
            rotated,
            BrauerDiagram::new(0, 6, vec![(1, 2), (3, 4), (5, 0)]).unwrap()
        );
        // all-diameters matching is fixed by rotation
        let diam = BrauerDiagram::new(0, 6, vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(diam.rotate().unwrap(), diam);
    }
}
