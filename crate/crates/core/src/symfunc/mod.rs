//! Symmetric functions over the rationals in one or several named
//! alphabets, stored in the tensor power-sum basis.
//!
//! The power-sum basis makes plethysm, the Kronecker product, scalar
//! products and the diagonal all essentially diagonal operations; Schur
//! and complete/elementary symmetric functions enter through conversions.
//! Series such as `H = sum h_r` are represented by degree-capped values;
//! an absent cap means the value is an honest polynomial.

mod characters;
mod schur;

pub use characters::*;
pub use schur::{char_value, schur_to_p_map};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, internal, Result};
use crate::qpoly::QPoly;
use crate::tableaux::{enumerate_partitions, fake_degree_schur, Partition};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn z_rat(lambda: &Partition) -> BigRational {
    BigRational::from_integer(lambda.z())
}

/// A symmetric function in `alphabets.len()` alphabets; each term maps a
/// tuple of partitions (one per alphabet) to a rational coefficient of
/// the corresponding product of power sums.
#[derive(Clone)]
pub struct SymFunc {
    alphabets: Vec<String>,
    caps: Vec<Option<usize>>,
    terms: BTreeMap<Vec<Partition>, BigRational>,
}

/// Equality is mathematical: same alphabets and the same terms.  The
/// truncation caps are bookkeeping and do not enter.
impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        self.alphabets == other.alphabets && self.terms == other.terms
    }
}

impl Eq for SymFunc {}

impl SymFunc {
    pub fn zero(alphabets: &[&str]) -> Self {
        SymFunc {
            alphabets: alphabets.iter().map(|s| s.to_string()).collect(),
            caps: vec![None; alphabets.len()],
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabets: &[&str], c: BigRational) -> Self {
        let mut f = SymFunc::zero(alphabets);
        if !c.is_zero() {
            f.terms.insert(vec![Partition::empty(); f.alphabets.len()], c);
        }
        f
    }

    pub fn one(alphabets: &[&str]) -> Self {
        SymFunc::constant(alphabets, BigRational::one())
    }

    /// The power sum `p_lambda` in a single alphabet.
    pub fn p(alphabet: &str, lambda: &Partition) -> Self {
        let mut f = SymFunc::zero(&[alphabet]);
        f.terms.insert(vec![lambda.clone()], BigRational::one());
        f
    }

    pub fn alphabets(&self) -> &[String] {
        &self.alphabets
    }

    pub fn caps(&self) -> &[Option<usize>] {
        &self.caps
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Partition>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn with_cap(mut self, caps: &[Option<usize>]) -> Self {
        assert_eq!(caps.len(), self.alphabets.len());
        self.caps = caps.to_vec();
        self.prune();
        self
    }

    fn prune(&mut self) {
        let caps = self.caps.clone();
        self.terms.retain(|key, c| {
            !c.is_zero()
                && key
                    .iter()
                    .zip(&caps)
                    .all(|(lam, cap)| cap.is_none_or(|m| lam.size() <= m))
        });
    }

    fn alphabet_index(&self, alphabet: &str) -> Result<usize> {
        self.alphabets
            .iter()
            .position(|a| a == alphabet)
            .ok_or_else(|| domain(format!("unknown alphabet {alphabet}")))
    }

    /// Re-embeds into a larger alphabet list, with empty partitions in
    /// the new alphabets.
    pub fn promote(&self, alphabets: &[&str]) -> Result<SymFunc> {
        let mut positions = Vec::with_capacity(self.alphabets.len());
        for a in &self.alphabets {
            let pos = alphabets
                .iter()
                .position(|b| b == a)
                .ok_or_else(|| domain(format!("alphabet {a} missing from target list")))?;
            positions.push(pos);
        }
        let mut out = SymFunc::zero(alphabets);
        for (i, &pos) in positions.iter().enumerate() {
            out.caps[pos] = self.caps[i];
        }
        for (key, c) in &self.terms {
            let mut new_key = vec![Partition::empty(); alphabets.len()];
            for (i, lam) in key.iter().enumerate() {
                new_key[positions[i]] = lam.clone();
            }
            out.terms.insert(new_key, c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.alphabets, other.alphabets, "alphabet mismatch");
        let mut out = self.clone();
        for (i, cap) in other.caps.iter().enumerate() {
            out.caps[i] = match (out.caps[i], cap) {
                (Some(a), Some(b)) => Some(a.min(*b)),
                (Some(a), None) => Some(a),
                (None, c) => *c,
            };
        }
        for (key, c) in &other.terms {
            let entry = out.terms.entry(key.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        out.prune();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
            return out;
        }
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Product: power sums multiply by merging the parts alphabet-wise.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.alphabets, other.alphabets, "alphabet mismatch");
        let mut out = SymFunc::zero(&self.alphabets.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for (i, cap) in self.caps.iter().enumerate() {
            out.caps[i] = match (cap, other.caps[i]) {
                (Some(a), Some(b)) => Some(*a.min(&b)),
                (Some(a), None) => Some(*a),
                (None, c) => c,
            };
        }
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key: Vec<Partition> = ka
                    .iter()
                    .zip(kb)
                    .map(|(a, b)| {
                        let mut parts = a.parts().to_vec();
                        parts.extend_from_slice(b.parts());
                        Partition::from_unsorted(parts)
                    })
                    .collect();
                if key
                    .iter()
                    .zip(&out.caps)
                    .any(|(lam, cap)| cap.is_some_and(|m| lam.size() > m))
                {
                    continue;
                }
                let entry = out.terms.entry(key).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        out.prune();
        out
    }

    /// Degrees present in the given alphabet.
    pub fn degrees(&self, idx: usize) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|k| k[idx].size()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// `Some(d)` when the function is homogeneous in every alphabet.
    pub fn homogeneous_degree(&self) -> Option<Vec<usize>> {
        let mut degree: Option<Vec<usize>> = None;
        for key in self.terms.keys() {
            let d: Vec<usize> = key.iter().map(|lam| lam.size()).collect();
            match &degree {
                None => degree = Some(d),
                Some(existing) if *existing == d => {}
                _ => return None,
            }
        }
        degree
    }

    /// The part of each term whose degree in alphabet `idx` equals `d`.
    pub fn degree_component(&self, idx: usize, d: usize) -> SymFunc {
        let mut out = self.clone();
        out.terms.retain(|key, _| key[idx].size() == d);
        out
    }

    /// Plethysm `f ∘ g` for univariate `f`: each `p_k` in `f` replaces
    /// every `p_j` of `g`, in every alphabet, by `p_(jk)`.
    pub fn plethysm(&self, g: &Self) -> Result<SymFunc> {
        if self.alphabets.len() != 1 {
            return Err(domain("plethysm requires a univariate outer function"));
        }
        let g_alpha: Vec<&str> = g.alphabets.iter().map(|s| s.as_str()).collect();
        let mut out = SymFunc::zero(&g_alpha);
        out.caps = g.caps.clone();
        for (key, c) in &self.terms {
            let mut term = SymFunc::one(&g_alpha).with_cap(&g.caps);
            for &m in key[0].parts() {
                term = term.multiply(&scale_indices(g, m));
            }
            out = out.add(&term.scale(c));
        }
        Ok(out)
    }

    /// Kronecker (internal) product, diagonal in the power-sum basis:
    /// `p_lambda * p_mu = delta z_lambda p_lambda`.
    pub fn kronecker(&self, other: &Self) -> Result<SymFunc> {
        if self.alphabets != other.alphabets {
            return Err(domain("kronecker product requires identical alphabet lists"));
        }
        if let (Some(da), Some(db)) = (self.homogeneous_degree(), other.homogeneous_degree()) {
            if da != db && !self.is_zero() && !other.is_zero() {
                return Err(domain(format!(
                    "kronecker product degree mismatch: {da:?} vs {db:?}"
                )));
            }
        }
        let mut out = SymFunc::zero(&self.alphabets.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        out.caps = self.caps.clone();
        for (key, ca) in &self.terms {
            if let Some(cb) = other.terms.get(key) {
                let mut z = BigRational::one();
                for lam in key {
                    z *= z_rat(lam);
                }
                out.terms.insert(key.clone(), ca * cb * z);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Pairs the named alphabet of `self` against the same alphabet of
    /// `other` with `<p_lambda, p_mu> = delta z_lambda`, returning a
    /// function in the remaining alphabets of both factors.
    pub fn scalar_product(&self, other: &Self, alphabet: &str) -> Result<SymFunc> {
        let ia = self.alphabet_index(alphabet)?;
        let ib = other.alphabet_index(alphabet)?;
        let mut rest: Vec<String> = Vec::new();
        for (i, a) in self.alphabets.iter().enumerate() {
            if i != ia {
                rest.push(a.clone());
            }
        }
        for (i, a) in other.alphabets.iter().enumerate() {
            if i != ib {
                if rest.contains(a) {
                    return Err(domain(format!(
                        "scalar product: alphabet {a} appears on both sides outside the paired one"
                    )));
                }
                rest.push(a.clone());
            }
        }
        let rest_ref: Vec<&str> = rest.iter().map(|s| s.as_str()).collect();
        let mut out = SymFunc::zero(&rest_ref);
        let mut caps = Vec::new();
        for (i, cap) in self.caps.iter().enumerate() {
            if i != ia {
                caps.push(*cap);
            }
        }
        for (i, cap) in other.caps.iter().enumerate() {
            if i != ib {
                caps.push(*cap);
            }
        }
        out.caps = caps;
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if ka[ia] != kb[ib] {
                    continue;
                }
                let mut key = Vec::with_capacity(rest.len());
                for (i, lam) in ka.iter().enumerate() {
                    if i != ia {
                        key.push(lam.clone());
                    }
                }
                for (i, lam) in kb.iter().enumerate() {
                    if i != ib {
                        key.push(lam.clone());
                    }
                }
                let entry = out.terms.entry(key).or_insert_with(BigRational::zero);
                *entry += ca * cb * z_rat(&ka[ia]);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Scalar value of a 0-alphabet function.
    pub fn as_scalar(&self) -> Result<BigRational> {
        if !self.alphabets.is_empty() {
            return Err(domain("not a scalar symmetric function"));
        }
        Ok(self
            .terms
            .get(&Vec::new() as &Vec<Partition>)
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    /// Diagonal of a bivariate function:
    /// `∇(p_lambda(X) p_mu(Y)) = delta_(lambda,mu) z_lambda p_lambda`.
    pub fn diagonal(&self, alphabet: &str) -> Result<SymFunc> {
        if self.alphabets.len() != 2 {
            return Err(domain("diagonal requires exactly two alphabets"));
        }
        let mut out = SymFunc::zero(&[alphabet]);
        out.caps = vec![match (self.caps[0], self.caps[1]) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }];
        for (key, c) in &self.terms {
            if key[0] == key[1] {
                let entry = out
                    .terms
                    .entry(vec![key[0].clone()])
                    .or_insert_with(BigRational::zero);
                *entry += c * z_rat(&key[0]);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Schur expansion of a univariate homogeneous function of degree `r`.
    pub fn p_to_schur(&self) -> Result<BTreeMap<Partition, BigRational>> {
        if self.alphabets.len() != 1 {
            return Err(domain("Schur expansion requires a univariate function"));
        }
        let degree = self
            .homogeneous_degree()
            .ok_or_else(|| domain("Schur expansion requires a homogeneous function"))?;
        let r = degree.first().copied().unwrap_or(0);
        let mut out = BTreeMap::new();
        for lam in enumerate_partitions(r, None, false) {
            // <f, s_lambda> = sum_mu f_mu chi^lambda(mu)
            let mut c = BigRational::zero();
            for (key, fv) in &self.terms {
                let chi = char_value(&lam, &key[0]);
                if !chi.is_zero() {
                    c += fv * BigRational::from_integer(chi);
                }
            }
            if !c.is_zero() {
                out.insert(lam, c);
            }
        }
        Ok(out)
    }

    /// Fake degree: the Schur expansion paired termwise with the maj
    /// generating polynomials of the shapes.
    pub fn fake_degree(&self) -> Result<QPoly> {
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let mut out = QPoly::zero();
        for (lam, c) in self.p_to_schur()? {
            if !c.denom().is_one() {
                return Err(internal(format!(
                    "fake degree of a non-virtual character: coefficient {c} of s_{lam} is not an integer"
                )));
            }
            out = out.add(&fake_degree_schur(&lam)?.scale(c.numer()));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(key, c)| {
                serde_json::json!({
                    "partitions": key.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "alphabets": self.alphabets,
            "terms": terms,
        })
    }
}

/// Replace every `p_j`, in every alphabet, by `p_(jm)`.
fn scale_indices(g: &SymFunc, m: usize) -> SymFunc {
    let mut out = SymFunc::zero(&g.alphabets.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    out.caps = g.caps.iter().map(|c| c.map(|v| v * m)).collect();
    for (key, c) in &g.terms {
        let new_key: Vec<Partition> = key
            .iter()
            .map(|lam| Partition::from_unsorted(lam.parts().iter().map(|&p| p * m).collect()))
            .collect();
        out.terms.insert(new_key, c.clone());
    }
    out
}

/// The complete homogeneous function `h_r` in the power-sum basis:
/// `h_r = sum_(lambda ⊢ r) p_lambda / z_lambda`.
pub fn h_to_p(alphabet: &str, r: usize) -> SymFunc {
    let mut f = SymFunc::zero(&[alphabet]);
    for lam in enumerate_partitions(r, None, false) {
        f.terms.insert(vec![lam.clone()], z_rat(&lam).recip());
    }
    f
}

/// The elementary function `e_r`:
/// `e_r = sum_(lambda ⊢ r) sign(lambda) p_lambda / z_lambda`.
pub fn e_to_p(alphabet: &str, r: usize) -> SymFunc {
    let mut f = SymFunc::zero(&[alphabet]);
    for lam in enumerate_partitions(r, None, false) {
        let sign = rat(lam.cycle_type_sign());
        f.terms.insert(vec![lam.clone()], sign * z_rat(&lam).recip());
    }
    f
}

/// `h_lambda = prod h_(lambda_i)`.
pub fn h_lambda_to_p(alphabet: &str, lambda: &Partition) -> SymFunc {
    let mut f = SymFunc::one(&[alphabet]);
    for &part in lambda.parts() {
        f = f.multiply(&h_to_p(alphabet, part));
    }
    f
}

/// The Schur function `s_lambda` in the power-sum basis, through the
/// symmetric group character table.
pub fn s_to_p(alphabet: &str, lambda: &Partition) -> SymFunc {
    let mut f = SymFunc::zero(&[alphabet]);
    for (mu, c) in schur_to_p_map(lambda) {
        f.terms.insert(vec![mu], c);
    }
    f
}

/// Which classical basis a conversion starts from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    H,
    E,
    S,
}

pub fn basis_to_p(basis: Basis, alphabet: &str, lambda: &Partition) -> SymFunc {
    match basis {
        Basis::H => h_lambda_to_p(alphabet, lambda),
        Basis::E => {
            let mut f = SymFunc::one(&[alphabet]);
            for &part in lambda.parts() {
                f = f.multiply(&e_to_p(alphabet, part));
            }
            f
        }
        Basis::S => s_to_p(alphabet, lambda),
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", c)?;
            for (i, lam) in key.iter().enumerate() {
                if !lam.is_empty() {
                    write!(f, "*p{:?}({})", lam, self.alphabets[i])?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        <Self as fmt::Debug>::fmt(self, f)
    }
}
