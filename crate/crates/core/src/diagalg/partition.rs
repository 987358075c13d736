//! Partition-algebra elements: the five standard generators, the
//! Moebius-inverted elements `x_d`, and the recursively constructed
//! idempotent pair `E(r)`, `E'(r)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::diagrams::{DiagramLike, PartitionDiagram};
use crate::error::{domain, resource, Result};

use super::DiagElement;

/// `h_i`: points `i, i+1` on both rows joined into one block.
pub fn h_diagram(r: usize, i: usize) -> Result<PartitionDiagram> {
    if i == 0 || i >= r {
        return Err(domain(format!("h_{i} undefined on {r} strands")));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for a in 0..r {
        if a != i - 1 && a != i {
            blocks.push(vec![a, r + a]);
        }
    }
    blocks.push(vec![i - 1, i, r + i - 1, r + i]);
    PartitionDiagram::new(r, r, blocks)
}

/// `s_i`: the adjacent transposition.
pub fn s_diagram(r: usize, i: usize) -> Result<PartitionDiagram> {
    if i == 0 || i >= r {
        return Err(domain(format!("s_{i} undefined on {r} strands")));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for a in 0..r {
        if a != i - 1 && a != i {
            blocks.push(vec![a, r + a]);
        }
    }
    blocks.push(vec![i - 1, r + i]);
    blocks.push(vec![i, r + i - 1]);
    PartitionDiagram::new(r, r, blocks)
}

/// `p_i`: point `i` is a singleton on both rows.
pub fn p_diagram(r: usize, i: usize) -> Result<PartitionDiagram> {
    if i == 0 || i > r {
        return Err(domain(format!("p_{i} undefined on {r} strands")));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for a in 0..r {
        if a != i - 1 {
            blocks.push(vec![a, r + a]);
        }
    }
    blocks.push(vec![i - 1]);
    blocks.push(vec![r + i - 1]);
    PartitionDiagram::new(r, r, blocks)
}

/// Moebius inversion on the coarsening order: the unique elements with
/// `d = sum over d' coarser-or-equal of x_(d')`.
pub fn partition_xd(
    d: &PartitionDiagram,
    delta: &BigRational,
) -> Result<DiagElement<PartitionDiagram>> {
    if d.num_blocks() > 8 {
        return Err(resource(format!(
            "x_d inversion over {} blocks exceeds the guard",
            d.num_blocks()
        )));
    }
    let mut memo: HashMap<PartitionDiagram, DiagElement<PartitionDiagram>> = HashMap::new();
    xd_rec(d, delta, &mut memo)
}

fn xd_rec(
    d: &PartitionDiagram,
    delta: &BigRational,
    memo: &mut HashMap<PartitionDiagram, DiagElement<PartitionDiagram>>,
) -> Result<DiagElement<PartitionDiagram>> {
    if let Some(v) = memo.get(d) {
        return Ok(v.clone());
    }
    let mut x = DiagElement::from_diagram(d.clone(), delta);
    for coarser in d.coarsenings() {
        x = x.sub(&xd_rec(&coarser, delta, memo)?)?;
    }
    memo.insert(d.clone(), x.clone());
    Ok(x)
}

/// The idempotents `E(1..=r)` and `E'(1..=r)` of the partition algebra
/// built by the two-step recursion
/// `E(r) = (1/r) E'(r) [1 + (r-1) s_(r-1) - (1/(delta-2r+2)) p_r] E'(r)`,
/// `E'(r+1) = E(r) [1 - r ((delta-2r+2)/(delta-2r+1)) h_r] E(r)`
/// starting from `E'(1) = 1`.  Poles of the coefficients are rejected.
pub struct IdempotentTower {
    pub e: Vec<DiagElement<PartitionDiagram>>,
    pub e_prime: Vec<DiagElement<PartitionDiagram>>,
}

pub fn partition_idempotent_recursion(
    r_max: usize,
    delta: &BigRational,
) -> Result<IdempotentTower> {
    if r_max == 0 {
        return Err(domain("the recursion starts at r = 1"));
    }
    let mut e: Vec<DiagElement<PartitionDiagram>> = Vec::new();
    let mut e_prime: Vec<DiagElement<PartitionDiagram>> = Vec::new();
    e_prime.push(DiagElement::identity(1, delta));
    for r in 1..=r_max {
        // E(r) from E'(r)
        let eprime = &e_prime[r - 1];
        let denom = delta.clone() - BigRational::from_integer(BigInt::from(2 * r as i64 - 2));
        if denom == BigRational::from_integer(BigInt::from(0)) {
            return Err(domain(format!(
                "idempotent recursion pole: delta = {} at step E({r})",
                2 * r - 2
            )));
        }
        let mut middle = DiagElement::identity(r, delta);
        if r >= 2 {
            let s = DiagElement::from_diagram(s_diagram(r, r - 1)?, delta);
            middle = middle.add(&s.scale(&BigRational::from_integer(BigInt::from(r as i64 - 1))))?;
        }
        let p = DiagElement::from_diagram(p_diagram(r, r)?, delta);
        middle = middle.sub(&p.scale(&denom.recip()))?;
        let er = eprime
            .multiply(&middle)?
            .multiply(eprime)?
            .scale(&BigRational::new(BigInt::one(), BigInt::from(r)));
        e.push(er);

        if r == r_max {
            break;
        }
        // E'(r+1) from E(r)
        let num = delta.clone() - BigRational::from_integer(BigInt::from(2 * r as i64 - 2));
        let den = delta.clone() - BigRational::from_integer(BigInt::from(2 * r as i64 - 1));
        if den == BigRational::from_integer(BigInt::from(0)) {
            return Err(domain(format!(
                "idempotent recursion pole: delta = {} at step E'({})",
                2 * r - 1,
                r + 1
            )));
        }
        let lifted = e[r - 1].tensor_id(1);
        let h = DiagElement::from_diagram(h_diagram(r + 1, r)?, delta);
        let factor = DiagElement::identity(r + 1, delta).sub(
            &h.scale(&(BigRational::from_integer(BigInt::from(r as i64)) * num / den)),
        )?;
        e_prime.push(lifted.multiply(&factor)?.multiply(&lifted)?);
    }
    Ok(IdempotentTower { e, e_prime })
}

/// `rho(x)`: 1 on permutation diagrams, 0 on smaller propagating number.
pub fn rho(d: &PartitionDiagram) -> i64 {
    let (r, _) = d.hom();
    if d.propagating_number() == r {
        1
    } else {
        0
    }
}
