//! Enumerators for the diagram families, with size guards.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{resource, Result};

use super::{
    has_j_crossing, partition_diagram::gen_set_partitions, BrauerDiagram, DirectedDiagram,
    PartitionDiagram,
};

const MAX_OBJECTS: u64 = 10_000_000;

/// `(k-1)!! = k!/(2^(k/2) (k/2)!)` for even `k`, else 0.
pub fn double_factorial_matchings(k: usize) -> BigInt {
    if k % 2 == 1 {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    let mut m = k;
    while m > 1 {
        acc *= BigInt::from(m - 1);
        m -= 2;
    }
    acc
}

pub fn bell_number(n: usize) -> BigInt {
    // Bell triangle
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![row.last().unwrap().clone()];
        for v in &row {
            let prev = next.last().unwrap().clone();
            next.push(prev + v);
        }
        row = next;
    }
    row[0].clone()
}

fn guard(count: &BigInt, what: &str) -> Result<()> {
    if count > &BigInt::from(MAX_OBJECTS) {
        return Err(resource(format!("{what}: {count} objects exceeds the guard")));
    }
    Ok(())
}

/// All perfect matchings of the ordered point set `points`.
fn matchings_of(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    if points.len() % 2 == 1 {
        return Vec::new();
    }
    let first = points[0];
    let mut out = Vec::new();
    for i in 1..points.len() {
        let partner = points[i];
        let rest: Vec<usize> = points[1..]
            .iter()
            .copied()
            .filter(|&p| p != partner)
            .collect();
        for mut m in matchings_of(&rest) {
            m.insert(0, (first, partner));
            out.push(m);
        }
    }
    out
}

/// All perfect matchings of `[k]` as diagrams in `Hom(0, k)`.
pub fn enumerate_matchings(k: usize) -> Result<Vec<BrauerDiagram>> {
    guard(&double_factorial_matchings(k), "matchings")?;
    let points: Vec<usize> = (0..k).collect();
    let mut out: Vec<BrauerDiagram> = matchings_of(&points)
        .into_iter()
        .map(|pairs| BrauerDiagram::new(0, k, pairs).expect("valid matching"))
        .collect();
    out.sort();
    Ok(out)
}

/// All Brauer diagrams in `Hom(r, s)`.
pub fn enumerate_brauer(r: usize, s: usize) -> Result<Vec<BrauerDiagram>> {
    guard(&double_factorial_matchings(r + s), "Brauer diagrams")?;
    let points: Vec<usize> = (0..r + s).collect();
    let mut out: Vec<BrauerDiagram> = matchings_of(&points)
        .into_iter()
        .map(|pairs| BrauerDiagram::new(r, s, pairs).expect("valid matching"))
        .collect();
    out.sort();
    Ok(out)
}

/// Matchings of `[k]` with no `(n+1)`-crossing.
pub fn enumerate_noncrossing(k: usize, n: usize) -> Result<Vec<BrauerDiagram>> {
    Ok(enumerate_matchings(k)?
        .into_iter()
        .filter(|d| !has_j_crossing(d.pairs(), n + 1))
        .collect())
}

/// Set partitions of `[r]` with at most `max_blocks` blocks, as sorted
/// 1-based block lists.
pub fn enumerate_setpartitions(
    r: usize,
    max_blocks: Option<usize>,
) -> Result<Vec<Vec<Vec<usize>>>> {
    guard(&bell_number(r), "set partitions")?;
    let mut raw = Vec::new();
    gen_set_partitions(r, &mut vec![], &mut raw);
    let mut out: Vec<Vec<Vec<usize>>> = raw
        .into_iter()
        .filter(|blocks| max_blocks.is_none_or(|m| blocks.len() <= m))
        .map(|blocks| {
            let mut labelled: Vec<Vec<usize>> = blocks
                .into_iter()
                .map(|b| b.into_iter().map(|p| p + 1).collect())
                .collect();
            labelled.sort();
            labelled
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All partition diagrams in `Hom(r, s)`.
pub fn enumerate_partition_diagrams(r: usize, s: usize) -> Result<Vec<PartitionDiagram>> {
    guard(&bell_number(r + s), "partition diagrams")?;
    let mut raw = Vec::new();
    gen_set_partitions(r + s, &mut vec![], &mut raw);
    let mut out: Vec<PartitionDiagram> = raw
        .into_iter()
        .map(|blocks| PartitionDiagram::new(r, s, blocks).expect("valid partition"))
        .collect();
    out.sort();
    Ok(out)
}

/// `X(r, n, k)`: matchings of `[kr]` that are `(n+1)`-noncrossing, have
/// no pair inside one of the `r` consecutive blocks of size `k`, and
/// whenever two pairs cross their four endpoints lie in four distinct
/// blocks.
pub fn enumerate_regular_diagrams(r: usize, n: usize, k: usize) -> Result<Vec<BrauerDiagram>> {
    let block = |p: usize| p / k;
    Ok(enumerate_noncrossing(k * r, n)?
        .into_iter()
        .filter(|d| {
            let pairs = d.pairs();
            if pairs.iter().any(|&(a, b)| block(a) == block(b)) {
                return false;
            }
            for (i, &(a1, b1)) in pairs.iter().enumerate() {
                for &(a2, b2) in &pairs[i + 1..] {
                    let crossing = {
                        let (lo, hi) = if a1 < a2 { ((a1, b1), (a2, b2)) } else { ((a2, b2), (a1, b1)) };
                        lo.0 < hi.0 && hi.0 < lo.1 && lo.1 < hi.1
                    };
                    if crossing {
                        let mut blocks = [block(a1), block(b1), block(a2), block(b2)];
                        blocks.sort_unstable();
                        if blocks.windows(2).any(|w| w[0] == w[1]) {
                            return false;
                        }
                    }
                }
            }
            true
        })
        .collect())
}

/// All directed diagrams in `Hom(r, s)`: every matching, every
/// orientation.
pub fn enumerate_directed(r: usize, s: usize) -> Result<Vec<DirectedDiagram>> {
    let k = r + s;
    let count = double_factorial_matchings(k) * BigInt::from(2u64).pow((k / 2) as u32);
    guard(&count, "directed diagrams")?;
    let points: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    for m in matchings_of(&points) {
        let half = m.len();
        for mask in 0..(1u64 << half) {
            let pairs: Vec<(usize, usize)> = m
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) })
                .collect();
            out.push(DirectedDiagram::new(r, s, pairs).expect("valid directed diagram"));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Directed diagrams in the walled hom set with domain `+^r1 -^r2` and
/// codomain `+^s1 -^s2`.
pub fn enumerate_directed_walled(
    r1: usize,
    r2: usize,
    s1: usize,
    s2: usize,
) -> Result<Vec<DirectedDiagram>> {
    use super::Sign;
    let r = r1 + r2;
    let s = s1 + s2;
    let domain: Vec<Sign> = (0..r)
        .map(|i| if i < r1 { Sign::Plus } else { Sign::Minus })
        .collect();
    let codomain: Vec<Sign> = (0..s)
        .map(|i| if i < s1 { Sign::Plus } else { Sign::Minus })
        .collect();
    // initial points: top + and bottom -; final points: top - and bottom +
    let initials: Vec<usize> = (0..r1).chain((0..s2).map(|j| r + s1 + j)).collect();
    let finals: Vec<usize> = (r1..r).chain((0..s1).map(|j| r + j)).collect();
    if initials.len() != finals.len() {
        return Ok(Vec::new());
    }
    let mut fact = BigInt::one();
    for i in 1..=initials.len() {
        fact *= BigInt::from(i);
    }
    guard(&fact, "walled directed diagrams")?;
    let mut out = Vec::new();
    let mut assignment = Vec::new();
    let mut used = vec![false; finals.len()];
    fn rec(
        initials: &[usize],
        finals: &[usize],
        used: &mut Vec<bool>,
        assignment: &mut Vec<(usize, usize)>,
        r: usize,
        s: usize,
        out: &mut Vec<DirectedDiagram>,
    ) {
        if assignment.len() == initials.len() {
            out.push(DirectedDiagram::new(r, s, assignment.clone()).expect("valid diagram"));
            return;
        }
        let i = assignment.len();
        for (j, &fin) in finals.iter().enumerate() {
            if used[j] {
                continue;
            }
            used[j] = true;
            assignment.push((initials[i], fin));
            rec(initials, finals, used, assignment, r, s, out);
            assignment.pop();
            used[j] = false;
        }
    }
    rec(&initials, &finals, &mut used, &mut assignment, r, s, &mut out);
    for d in &out {
        debug_assert_eq!(d.domain_word(), domain);
        debug_assert_eq!(d.codomain_word(), codomain);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
