//! Exact cyclic sieving verification: the permutation character of a
//! cyclic action, computed from orbit sizes, compared against a
//! candidate polynomial modulo `q^r - 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::diagrams::{
    enumerate_matchings, enumerate_noncrossing, enumerate_regular_diagrams,
    enumerate_setpartitions, BrauerDiagram,
};
use crate::error::{domain, resource, Result};
use crate::qpoly::{qbinomial, qint, QPoly};
use crate::symfunc::{invariant_character, CharacterFamily, MultisetMode};
use crate::diagalg::Perm;

/// `chi(X) mod q^r - 1` from the multiset of orbit sizes: an orbit of
/// size `m` (with `m | r`) contributes `sum_(j<m) q^(j r/m)`.
pub fn perm_character_mod_cyclic(orbit_sizes: &[usize], r: usize) -> Result<QPoly> {
    if r == 0 {
        return Err(domain("cyclic order must be positive"));
    }
    let mut chi = QPoly::zero();
    for &m in orbit_sizes {
        if m == 0 || r % m != 0 {
            return Err(domain(format!("orbit size {m} does not divide the order {r}")));
        }
        for j in 0..m {
            chi = chi.add(&QPoly::monomial(BigInt::one(), j * (r / m)));
        }
    }
    chi.reduce_mod_cyclic(r)
}

/// Everything recorded about one verified instance.
#[derive(Clone, Debug)]
pub struct CspReport {
    pub label: String,
    pub order: usize,
    pub set_size: usize,
    pub orbit_sizes: Vec<usize>,
    pub fix_counts: Vec<usize>,
    pub polynomial: QPoly,
    pub reduced_polynomial: QPoly,
    pub chi: QPoly,
    pub pass: bool,
    /// first exponent where the reduced polynomial and chi differ
    pub witness: Option<usize>,
}

impl CspReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "order": self.order,
            "set_size": self.set_size,
            "orbit_sizes": self.orbit_sizes,
            "fix_counts": self.fix_counts,
            "polynomial": self.polynomial.to_json(),
            "reduced_polynomial": self.reduced_polynomial.to_json(),
            "chi": self.chi.to_json(),
            "pass": self.pass,
            "witness": self.witness,
        })
    }
}

/// Verifies the congruence `P = chi(X) mod q^r - 1` for the action
/// generated by `rho` on `x`.  The set must be stable under `rho` and
/// `rho^order` must be the identity.
pub fn verify_csp<T, F>(label: &str, x: &[T], rho: F, order: usize, p: &QPoly) -> Result<CspReport>
where
    T: Clone + Ord,
    F: Fn(&T) -> T,
{
    if order == 0 {
        return Err(domain("cyclic order must be positive"));
    }
    let index: BTreeMap<&T, usize> = x.iter().enumerate().map(|(i, t)| (t, i)).collect();
    if index.len() != x.len() {
        return Err(domain("the set contains duplicates"));
    }
    // stability and orbit decomposition by iteration
    let mut orbit_sizes = Vec::new();
    let mut seen = vec![false; x.len()];
    for start in 0..x.len() {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut current = x[start].clone();
        loop {
            let i = *index
                .get(&current)
                .ok_or_else(|| domain(format!("{label}: set is not stable under the rotation")))?;
            if seen[i] {
                break;
            }
            seen[i] = true;
            size += 1;
            current = rho(&current);
        }
        if order % size != 0 {
            return Err(domain(format!(
                "{label}: orbit of size {size} under an action of order {order}"
            )));
        }
        orbit_sizes.push(size);
    }
    orbit_sizes.sort_unstable();
    let chi = perm_character_mod_cyclic(&orbit_sizes, order)?;
    let reduced = p.reduce_mod_cyclic(order)?;
    let mut witness = None;
    for e in 0..order {
        if reduced.coeff(e) != chi.coeff(e) {
            witness = Some(e);
            break;
        }
    }
    let fix_counts = (0..order)
        .map(|k| {
            orbit_sizes
                .iter()
                .filter(|&&m| k % m == 0)
                .map(|&m| m)
                .sum()
        })
        .collect();
    Ok(CspReport {
        label: label.to_string(),
        order,
        set_size: x.len(),
        orbit_sizes,
        fix_counts,
        polynomial: p.clone(),
        reduced_polynomial: reduced,
        chi,
        pass: witness.is_none(),
        witness,
    })
}

/// The instances exposed by the verification harness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CspFamily {
    /// (n+1)-noncrossing perfect matchings of [2r] under rotation
    NoncrossingMatchings { r: usize, n: usize },
    /// all perfect matchings of [2r] under rotation
    AllMatchings { r: usize },
    /// X(r, n, k) under rotation by k
    RegularGraphs { r: usize, n: usize, k: usize },
    /// set partitions of [r] into at most n blocks under rotation
    SetPartitions { r: usize, n: usize },
    /// multiset partitions of {1^k..r^k} into at most n blocks
    MultisetPartitions { r: usize, n: usize, k: usize },
    /// permutations of [r] under conjugation by the long cycle
    Permutations { r: usize },
    /// noncrossing matchings of [2k] with the q-Catalan polynomial
    TemperleyLieb { k: usize },
}

const MAX_SET: usize = 1_000_000;

fn rotate_matching(d: &BrauerDiagram, shift: usize) -> BrauerDiagram {
    d.rotate_by(shift).expect("rotation of a Hom(0,k) diagram")
}

/// Builds and verifies a named instance: enumerates the set, computes
/// the fixed points by brute force, and takes the polynomial from the
/// character pipeline.
pub fn build_instance(family: &CspFamily) -> Result<CspReport> {
    match *family {
        CspFamily::NoncrossingMatchings { r, n } => {
            let x = enumerate_noncrossing(2 * r, n)?;
            guard_size(x.len())?;
            let p = invariant_character(&CharacterFamily::SpMatchings { r, n })?.fake_degree()?;
            verify_csp(
                &format!("noncrossing_matchings(r={r}, n={n})"),
                &x,
                |d| rotate_matching(d, 1),
                2 * r,
                &p,
            )
        }
        CspFamily::AllMatchings { r } => {
            let x = enumerate_matchings(2 * r)?;
            guard_size(x.len())?;
            let h2 = crate::symfunc::h_to_p("Y", 2);
            let p = crate::symfunc::h_to_p("__o", r)
                .plethysm(&h2)?
                .fake_degree()?;
            verify_csp(
                &format!("all_matchings(r={r})"),
                &x,
                |d| rotate_matching(d, 1),
                2 * r,
                &p,
            )
        }
        CspFamily::RegularGraphs { r, n, k } => {
            let x = enumerate_regular_diagrams(r, n, k)?;
            guard_size(x.len())?;
            let p =
                invariant_character(&CharacterFamily::SpSymPower { r, n, k })?.fake_degree()?;
            verify_csp(
                &format!("regular_graphs(r={r}, n={n}, k={k})"),
                &x,
                |d| rotate_matching(d, k),
                r,
                &p,
            )
        }
        CspFamily::SetPartitions { r, n } => {
            let x = enumerate_setpartitions(r, Some(n))?;
            guard_size(x.len())?;
            let p = invariant_character(&CharacterFamily::SymSets { r, n })?.fake_degree()?;
            verify_csp(
                &format!("set_partitions(r={r}, n={n})"),
                &x,
                |blocks| rotate_blocks(blocks, r),
                r,
                &p,
            )
        }
        CspFamily::MultisetPartitions { r, n, k } => {
            let x = enumerate_multiset_partitions(r, n, k)?;
            guard_size(x.len())?;
            let p = invariant_character(&CharacterFamily::SymMultiset {
                r,
                n,
                k,
                mode: MultisetMode::H,
            })?
            .fake_degree()?;
            verify_csp(
                &format!("multiset_partitions(r={r}, n={n}, k={k})"),
                &x,
                |blocks| rotate_blocks(blocks, r),
                r,
                &p,
            )
        }
        CspFamily::Permutations { r } => {
            let x = Perm::all(r);
            guard_size(x.len())?;
            let p = invariant_character(&CharacterFamily::Permutations { r })?.fake_degree()?;
            let long = Perm::new((0..r).map(|i| (i + 1) % r).collect::<Vec<_>>())?;
            let long_inv = long.inverse();
            verify_csp(
                &format!("permutations(r={r})"),
                &x,
                |pi| long_inv.then(pi).then(&long),
                r,
                &p,
            )
        }
        CspFamily::TemperleyLieb { k } => {
            let x = enumerate_noncrossing(2 * k, 1)?;
            guard_size(x.len())?;
            let p = qbinomial(2 * k, k)?.div_exact(&qint(k + 1))?;
            verify_csp(
                &format!("temperley_lieb(k={k})"),
                &x,
                |d| rotate_matching(d, 1),
                2 * k,
                &p,
            )
        }
    }
}

fn guard_size(len: usize) -> Result<()> {
    if len > MAX_SET {
        return Err(resource(format!("instance set of size {len} exceeds the guard")));
    }
    Ok(())
}

/// Rotates a block family over labels `1..=r` by `i -> i mod r + 1`.
fn rotate_blocks(blocks: &Vec<Vec<usize>>, r: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut nb: Vec<usize> = b.iter().map(|&x| x % r + 1).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    out.sort();
    out
}

/// Multiset partitions of `{1^k, ..., r^k}` into at most `n` blocks:
/// the projections of the set partitions of `k·r` labelled copies.
pub fn enumerate_multiset_partitions(r: usize, n: usize, k: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    let raw = enumerate_setpartitions(k * r, None)?;
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    for blocks in raw {
        if blocks.len() > n {
            continue;
        }
        // copy j of label i is point (i-1)k + j
        let mut projected: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                let mut vals: Vec<usize> = b.iter().map(|&p| (p - 1) / k + 1).collect();
                vals.sort_unstable();
                vals
            })
            .collect();
        projected.sort();
        out.push(projected);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
