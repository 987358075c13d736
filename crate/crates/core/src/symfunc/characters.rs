//! Frobenius characters of the invariant-tensor representations studied
//! by the verification harness, plus the capped series they are built
//! from and the Cauchy-type diagonal identity check.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{domain, Result};
use crate::tableaux::{enumerate_partitions, Partition};

use super::{e_to_p, h_to_p, s_to_p, SymFunc};

/// `H_+ = h_1 + h_2 + ...` truncated at `cap`.
pub fn h_plus_series(alphabet: &str, cap: usize) -> SymFunc {
    let mut f = SymFunc::zero(&[alphabet]);
    for m in 1..=cap {
        f = f.add(&h_to_p(alphabet, m));
    }
    f.with_cap(&[Some(cap)])
}

/// `H_n = h_0 + ... + h_n`, a polynomial.
pub fn h_bounded(alphabet: &str, n: usize) -> SymFunc {
    let mut f = SymFunc::one(&[alphabet]);
    for m in 1..=n {
        f = f.add(&h_to_p(alphabet, m));
    }
    f
}

/// The Cauchy kernel `H(X·Y) = sum_lambda p_lambda(X) p_lambda(Y) / z_lambda`
/// truncated at total degree `cap` per alphabet.
pub fn cauchy_kernel(x: &str, y: &str, cap: usize) -> SymFunc {
    let mut f = SymFunc::zero(&[x, y]);
    for m in 0..=cap {
        for lam in enumerate_partitions(m, None, false) {
            let z = BigRational::from_integer(lam.z());
            f = f.add(&{
                let mut t = SymFunc::zero(&[x, y]);
                t.terms.insert(vec![lam.clone(), lam.clone()], z.recip());
                t
            });
        }
    }
    f.with_cap(&[Some(cap), Some(cap)])
}

/// `p_1(X) * g(Y)` as a bivariate function in `(X, Y)`.
pub fn singleton_times(x: &str, g: &SymFunc) -> Result<SymFunc> {
    let y = g.alphabets()[0].clone();
    let alphabets = [x, y.as_str()];
    let p1 = SymFunc::p(x, &Partition::new(vec![1]).unwrap()).promote(&alphabets)?;
    Ok(p1.multiply(&g.promote(&alphabets)?))
}

/// `h_r(X · g(Y))`: plethysm of `h_r` with the product species above.
pub fn h_of_x_dot(r: usize, x: &str, g: &SymFunc) -> Result<SymFunc> {
    let inner = singleton_times(x, g)?;
    h_to_p("__outer", r).plethysm(&inner)
}

/// `sum s_(lambda^t)` over `lambda ⊢ m` with all columns of even length
/// and at most `max_len` rows.
pub fn even_column_schur_sum(alphabet: &str, m: usize, max_len: usize) -> SymFunc {
    let mut f = SymFunc::zero(&[alphabet]);
    for lam in enumerate_partitions(m, Some(max_len), true) {
        f = f.add(&s_to_p(alphabet, &lam.transpose()));
    }
    f
}

/// The species of perfect matchings `H ∘ h_2` truncated at degree `cap`.
pub fn matchings_series(alphabet: &str, cap: usize) -> Result<SymFunc> {
    let mut f = SymFunc::one(&[alphabet]).with_cap(&[Some(cap)]);
    let h2 = h_to_p(alphabet, 2);
    for m in 1..=(cap / 2) {
        f = f.add(&h_to_p("__outer", m).plethysm(&h2)?.with_cap(&[Some(cap)]));
    }
    Ok(f)
}

/// `(H_n ∘ H_+)_r`: set partitions into at most `n` blocks, degree `r`.
pub fn bounded_set_partition_character(alphabet: &str, n: usize, r: usize) -> Result<SymFunc> {
    let inner = h_plus_series(alphabet, r);
    let outer = h_bounded("__outer", n);
    Ok(outer.plethysm(&inner)?.degree_component(0, r))
}

/// `h_k - h_(k-2)`, the character of a fundamental-power factor.
pub fn h_difference(alphabet: &str, k: usize) -> SymFunc {
    let mut f = h_to_p(alphabet, k);
    if k >= 2 {
        f = f.sub(&h_to_p(alphabet, k - 2));
    }
    f
}

/// Mode selector for the multiset-partition character.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MultisetMode {
    /// symmetric powers: pairs against `h_r(X·h_k(Y))`
    H,
    /// exterior powers: pairs against `h_r(X·e_k(Y))`
    E,
}

/// The invariant-character families exposed by the engine.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CharacterFamily {
    /// invariants of the 2r-th tensor power of the defining symplectic
    /// representation
    SpMatchings { r: usize, n: usize },
    /// invariants of the r-th tensor power of the k-th symmetric power
    SpSymPower { r: usize, n: usize, k: usize },
    /// invariants of the r-th tensor power of the k-th fundamental
    /// representation
    SpFundamental { r: usize, n: usize, k: usize },
    /// k-regular multigraphs without loops on r vertices (stable range)
    RegularGraphs { r: usize, k: usize },
    /// set partitions of [r] into at most n blocks
    SymSets { r: usize, n: usize },
    /// multiset partitions, symmetric (`h`) or exterior (`e`) flavour
    SymMultiset { r: usize, n: usize, k: usize, mode: MultisetMode },
    /// invariants of tensor powers of the adjoint representation of GL(n)
    GlAdjoint { r: usize, n: usize },
    /// permutations of [r] under conjugation
    Permutations { r: usize },
}

/// Frobenius character of the family, univariate in the alphabet `X`.
pub fn invariant_character(family: &CharacterFamily) -> Result<SymFunc> {
    const X: &str = "X";
    const Y: &str = "Y";
    match *family {
        CharacterFamily::SpMatchings { r, n } => {
            if n == 0 {
                return Err(domain("SpMatchings requires n >= 1"));
            }
            Ok(even_column_schur_sum(X, 2 * r, 2 * n))
        }
        CharacterFamily::SpSymPower { r, n, k } => {
            if n == 0 || k == 0 {
                return Err(domain("SpSymPower requires n, k >= 1"));
            }
            let f = h_of_x_dot(r, X, &e_to_p(Y, k))?;
            let g = even_column_schur_sum(Y, k * r, 2 * n);
            f.scalar_product(&g, Y)
        }
        CharacterFamily::SpFundamental { r, n, k } => {
            if n == 0 || k == 0 {
                return Err(domain("SpFundamental requires n, k >= 1"));
            }
            let f = h_of_x_dot(r, X, &h_difference(Y, k))?;
            let mut g = SymFunc::zero(&[Y]);
            for m in 0..=(k * r) {
                g = g.add(&even_column_schur_sum(Y, m, 2 * n));
            }
            f.scalar_product(&g, Y)
        }
        CharacterFamily::RegularGraphs { r, k } => {
            if k == 0 {
                return Err(domain("RegularGraphs requires k >= 1"));
            }
            let f = h_of_x_dot(r, X, &h_difference(Y, k))?;
            let g = matchings_series(Y, k * r)?;
            f.scalar_product(&g, Y)
        }
        CharacterFamily::SymSets { r, n } => bounded_set_partition_character(X, n, r),
        CharacterFamily::SymMultiset { r, n, k, mode } => {
            if n == 0 || k == 0 {
                return Err(domain("SymMultiset requires n, k >= 1"));
            }
            let inner = match mode {
                MultisetMode::H => h_to_p(Y, k),
                MultisetMode::E => e_to_p(Y, k),
            };
            let f = h_of_x_dot(r, X, &inner)?;
            let g = bounded_set_partition_character(Y, n, k * r)?;
            f.scalar_product(&g, Y)
        }
        CharacterFamily::GlAdjoint { r, n } => {
            let mut f = SymFunc::zero(&[X]);
            for lam in enumerate_partitions(r, Some(n), false) {
                let s = s_to_p(X, &lam);
                f = f.add(&s.kronecker(&s)?);
            }
            Ok(f)
        }
        CharacterFamily::Permutations { r } => {
            let mut f = SymFunc::zero(&[X]);
            for lam in enumerate_partitions(r, None, false) {
                f = f.add(&SymFunc::p(X, &lam));
            }
            Ok(f)
        }
    }
}

/// Checks, degree by degree up to `maxdeg`, the series identity
/// `sum_lambda (s_alpha s_lambda) * (s_beta s_lambda)
///  = (prod (1-p_k)^-1) . ((s_alpha * s_beta) ∘ s_1/(1-s_1))`.
pub fn cauchy_diagonal_identity_check(
    alpha: &Partition,
    beta: &Partition,
    maxdeg: usize,
) -> Result<bool> {
    const X: &str = "X";
    if alpha.size() != beta.size() {
        // the Kronecker pairings on both sides vanish degreewise
        return Ok(true);
    }
    let base = alpha.size();
    let s_alpha = s_to_p(X, alpha);
    let s_beta = s_to_p(X, beta);

    let mut lhs = SymFunc::zero(&[X]);
    for m in 0..=maxdeg.saturating_sub(base) {
        for lam in enumerate_partitions(m, None, false) {
            let s_lam = s_to_p(X, &lam);
            let left = s_alpha.multiply(&s_lam);
            let right = s_beta.multiply(&s_lam);
            lhs = lhs.add(&left.kronecker(&right)?);
        }
    }

    // prod (1-p_k)^{-1} = sum over all partitions of p_lambda
    let mut all_p = SymFunc::zero(&[X]);
    for m in 0..=maxdeg {
        for lam in enumerate_partitions(m, None, false) {
            all_p = all_p.add(&SymFunc::p(X, &lam));
        }
    }
    // s_1/(1-s_1) = the species of non-empty linear orders, sum p_1^m
    let mut linear_orders = SymFunc::zero(&[X]);
    for m in 1..=maxdeg {
        let mut t = SymFunc::zero(&[X]);
        t.terms.insert(
            vec![Partition::new(vec![1; m]).unwrap()],
            BigRational::one(),
        );
        linear_orders = linear_orders.add(&t);
    }
    linear_orders = linear_orders.with_cap(&[Some(maxdeg)]);
    let kron = s_alpha.kronecker(&s_beta)?;
    let rhs = all_p
        .multiply(&kron.plethysm(&linear_orders)?)
        .with_cap(&[Some(maxdeg)]);

    let lhs = lhs.with_cap(&[Some(maxdeg)]);
    Ok((0..=maxdeg).all(|d| {
        lhs.degree_component(0, d).terms() == rhs.degree_component(0, d).terms()
    }))
}

/// Scaled sum of `p_lambda` over all partitions of sizes `0..=cap`,
/// the permutation species character.
pub fn permutation_species(alphabet: &str, cap: usize) -> SymFunc {
    let mut f = SymFunc::zero(&[alphabet]);
    for m in 0..=cap {
        for lam in enumerate_partitions(m, None, false) {
            f = f.add(&SymFunc::p(alphabet, &lam));
        }
    }
    f.with_cap(&[Some(cap)])
}

