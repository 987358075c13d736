//! Integer polynomials in one variable `q`: q-analogues and reduction
//! modulo `q^r - 1`.
//!
//! Coefficients are arbitrary-precision integers and every operation is
//! exact; there is no floating point anywhere in this crate.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};
use crate::tableaux::Partition;

/// A polynomial in `q` with integer coefficients, stored densely.
/// `coeffs[e]` is the coefficient of `q^e`; trailing zeros are stripped.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::new(vec![BigInt::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (e, c) in self.coeffs.iter().enumerate() {
            out[e] += c;
        }
        for (e, c) in other.coeffs.iter().enumerate() {
            out[e] += c;
        }
        QPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (e, c) in self.coeffs.iter().enumerate() {
            out[e] += c;
        }
        for (e, c) in other.coeffs.iter().enumerate() {
            out[e] -= c;
        }
        QPoly::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division; errors if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(domain("division of a q-polynomial by zero"));
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let d = other.coeffs.len() - 1;
        let lead = &other.coeffs[d];
        if rem.len() < other.coeffs.len() {
            return Err(domain("q-polynomial division is not exact"));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for e in (d..rem.len()).rev() {
            let c = rem[e].clone();
            if c.is_zero() {
                continue;
            }
            if (&c % lead) != BigInt::zero() {
                return Err(domain("q-polynomial division is not exact"));
            }
            let f = &c / lead;
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[e - d + j] -= &f * b;
            }
            quot[e - d] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(domain("q-polynomial division is not exact"));
        }
        Ok(QPoly::new(quot))
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Value at `q = 1`, i.e. the sum of coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Fold every exponent onto its residue mod `r`; the result has
    /// degree `< r` and is congruent to `self` modulo `q^r - 1`.
    pub fn reduce_mod_cyclic(&self, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(domain("reduction modulo q^0 - 1 is undefined"));
        }
        let mut out = vec![BigInt::zero(); r];
        for (e, c) in self.coeffs.iter().enumerate() {
            out[e % r] += c;
        }
        Ok(QPoly::new(out))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| match i64::try_from(c.clone()) {
                    Ok(v) => serde_json::Value::from(v),
                    Err(_) => serde_json::Value::from(c.to_string()),
                })
                .collect(),
        )
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{}", a)?;
            } else {
                if a != BigInt::one() {
                    write!(f, "{}*", a)?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn qint(n: usize) -> QPoly {
    QPoly::new(vec![BigInt::one(); n])
}

/// The q-factorial `[n]_q!`.
pub fn qfactorial(n: usize) -> QPoly {
    let mut acc = QPoly::one();
    for j in 1..=n {
        acc = acc.mul(&qint(j));
    }
    acc
}

/// Gaussian binomial coefficient, computed by the q-Pascal recurrence
/// `[m k] = [m-1 k-1] + q^k [m-1 k]`, which stays integral throughout.
pub fn qbinomial(m: usize, k: usize) -> Result<QPoly> {
    if k > m {
        return Err(domain(format!("qbinomial({m},{k}) requires k <= m")));
    }
    // row[j] holds [i choose j]_q while building row i
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for _ in 1..=m {
        let prev = row.clone();
        let width = prev.len() + 1;
        let mut next = Vec::with_capacity(width);
        for j in 0..width {
            let a = if j > 0 { prev[j - 1].clone() } else { QPoly::zero() };
            let b = if j < prev.len() {
                let mut shifted = vec![BigInt::zero(); j];
                shifted.extend_from_slice(prev[j].coeffs());
                QPoly::new(shifted)
            } else {
                QPoly::zero()
            };
            next.push(a.add(&b));
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// q-multinomial coefficient of a partition of `r`: the product of
/// Gaussian binomials over the partial sums of the parts.
pub fn qmultinomial(lambda: &Partition) -> Result<QPoly> {
    let mut remaining = lambda.size();
    let mut acc = QPoly::one();
    for &part in lambda.parts() {
        acc = acc.mul(&qbinomial(remaining, part)?);
        remaining -= part;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn qbinomial_small_values() {
        assert_eq!(qbinomial(2, 1).unwrap(), QPoly::from_i64(&[1, 1]));
        // subset-sum oracle for (4,2): generating function of sums of
        // 2-subsets of {0,1,2,3}, shifted down by the staircase 0+1
        let mut counts = [0i64; 5];
        for a in 0..4 {
            for b in (a + 1)..4 {
                counts[a + b - 1] += 1;
            }
        }
        assert_eq!(qbinomial(4, 2).unwrap(), QPoly::from_i64(&counts));
        assert_eq!(qbinomial(4, 2).unwrap(), QPoly::from_i64(&[1, 1, 2, 1, 1]));
        assert_eq!(
            qbinomial(6, 3).unwrap().eval_at_one(),
            BigInt::from(20)
        );
        assert!(qbinomial(2, 3).is_err());
    }

    #[test]
    fn qbinomial_product_formula_cross_check() {
        // [m k]_q = [m]_q! / ([k]_q! [m-k]_q!)
        for m in 0..=8 {
            for k in 0..=m {
                let lhs = qbinomial(m, k).unwrap();
                let num = qfactorial(m);
                let den = qfactorial(k).mul(&qfactorial(m - k));
                assert_eq!(lhs, num.div_exact(&den).unwrap(), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn qbinomial_symmetry_and_positivity() {
        for m in 0..=12usize {
            for k in 0..=m {
                let a = qbinomial(m, k).unwrap();
                let b = qbinomial(m, m - k).unwrap();
                assert_eq!(a, b);
                assert!(a.is_palindromic());
                assert!(a.has_nonnegative_coeffs());
            }
        }
    }

    #[test]
    fn qmultinomial_values() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(qmultinomial(&p(&[1, 1])).unwrap(), QPoly::from_i64(&[1, 1]));
        for r in 1..=6 {
            assert_eq!(qmultinomial(&p(&[r])).unwrap(), QPoly::one());
        }
        assert_eq!(
            qmultinomial(&p(&[2, 1])).unwrap(),
            QPoly::from_i64(&[1, 1, 1])
        );
    }

    #[test]
    fn reduce_mod_cyclic_examples() {
        let q3 = QPoly::monomial(BigInt::one(), 3);
        assert_eq!(q3.reduce_mod_cyclic(3).unwrap(), QPoly::one());
        let p = QPoly::from_i64(&[1, 0, 1, 1, 1, 0, 1]);
        assert_eq!(
            p.reduce_mod_cyclic(6).unwrap(),
            QPoly::from_i64(&[2, 0, 1, 1, 1])
        );
        assert_eq!(QPoly::zero().reduce_mod_cyclic(4).unwrap(), QPoly::zero());
        assert!(QPoly::one().reduce_mod_cyclic(0).is_err());
    }

    proptest! {
        #[test]
        fn reduce_mod_cyclic_idempotent_and_linear(
            a in proptest::collection::vec(-20i64..20, 0..14),
            b in proptest::collection::vec(-20i64..20, 0..14),
            r in 1usize..9,
        ) {
            let pa = QPoly::from_i64(&a);
            let pb = QPoly::from_i64(&b);
            let ra = pa.reduce_mod_cyclic(r).unwrap();
            prop_assert_eq!(ra.reduce_mod_cyclic(r).unwrap(), ra.clone());
            prop_assert!(ra.degree().map_or(true, |d| d < r));
            let sum_then_reduce = pa.add(&pb).reduce_mod_cyclic(r).unwrap();
            let reduce_then_sum = ra.add(&pb.reduce_mod_cyclic(r).unwrap()).reduce_mod_cyclic(r).unwrap();
            prop_assert_eq!(sum_then_reduce, reduce_then_sum);
        }
    }
}
