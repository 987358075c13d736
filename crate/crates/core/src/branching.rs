//! Dimension bookkeeping for the branching rules of the Brauer and
//! partition towers, driven by walk counts on the Young lattice.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diagrams::{bell_number, double_factorial_matchings};
use crate::error::Result;
use crate::evaluation::Report;
use crate::tableaux::{count_oscillating, enumerate_partitions, Partition};

/// `dim U(r, lambda)` for the Brauer tower in the semisimple regime:
/// the number of oscillating tableaux of length `r` from the empty
/// shape to `lambda` (no row bound is active below length `r`).
pub fn brauer_module_dim(r: usize, lambda: &Partition) -> BigInt {
    count_oscillating(r.max(1), r, lambda)
}

/// Verifies `dim U(r+1, lambda) = sum over mu = lambda ± cell of
/// dim U(r, mu)` and the closed product formula
/// `dim U(r, lambda) = f^lambda · C(r, p) · (r - p - 1)!!`.
pub fn brauer_branching_check(r: usize, lambda: &Partition) -> Result<Report> {
    let mut report = Report::default();
    let lhs = brauer_module_dim(r + 1, lambda);
    let mut rhs = BigInt::zero();
    for mu in lambda.add_cell().into_iter().chain(lambda.remove_cell()) {
        rhs += brauer_module_dim(r, &mu);
    }
    report.push_eq(
        format!("dim U({}, {lambda}) vs branching sum", r + 1),
        &lhs,
        &rhs,
    );

    let p = lambda.size();
    if p <= r && (r - p) % 2 == 0 {
        let dim = brauer_module_dim(r, lambda);
        let mut expect = lambda.hook_length_count();
        expect *= binomial(r, p);
        expect *= double_factorial_matchings(r - p);
        report.push_eq(
            format!("dim U({r}, {lambda}) vs f^lambda C(r,p) (r-p-1)!!"),
            &dim,
            &expect,
        );
    }
    Ok(report)
}

/// `sum over p, lambda ⊢ p of dim U(r, lambda)^2 = (2r-1)!!`, the
/// dimension of the Brauer diagram algebra.
pub fn brauer_dimension_check(r: usize) -> Result<Report> {
    let mut report = Report::default();
    let mut total = BigInt::zero();
    for p in 0..=r {
        if (r - p) % 2 == 1 {
            continue;
        }
        for lam in enumerate_partitions(p, None, false) {
            let d = brauer_module_dim(r, &lam);
            total += &d * &d;
        }
    }
    report.push_eq(
        format!("sum of squared dims at r={r} vs (2r-1)!!"),
        &total,
        &double_factorial_matchings(2 * r),
    );
    Ok(report)
}

/// Irreducible dimensions of the partition tower, built through the
/// intermediate algebras: `U(r)` restricted to `D'_r` splits along
/// `mu = lambda - cell` or `mu = lambda`, and `U'(r+1)` restricted to
/// `D_r` splits along `mu = lambda + cell` or `mu = lambda`.
pub struct PartitionTowerDims {
    /// dims of U(r, lambda) per level r
    pub u: Vec<BTreeMap<Partition, BigInt>>,
    /// dims of U'(r, lambda) per level r >= 1
    pub u_prime: Vec<BTreeMap<Partition, BigInt>>,
}

pub fn partition_tower_dims(r_max: usize) -> PartitionTowerDims {
    let mut u: Vec<BTreeMap<Partition, BigInt>> = Vec::new();
    let mut u_prime: Vec<BTreeMap<Partition, BigInt>> = Vec::new();
    let mut level: BTreeMap<Partition, BigInt> = BTreeMap::new();
    level.insert(Partition::empty(), BigInt::from(1));
    u.push(level);
    for r in 0..r_max {
        // U'(r+1, lambda) = sum over mu in {lambda + cell, lambda} U(r, mu)
        let mut prime: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (mu, d) in &u[r] {
            // mu = lambda contributes to lambda = mu
            *prime.entry(mu.clone()).or_insert_with(BigInt::zero) += d;
            // mu = lambda + cell contributes to each lambda = mu - cell
            for lam in mu.remove_cell() {
                *prime.entry(lam).or_insert_with(BigInt::zero) += d;
            }
        }
        u_prime.push(prime);
        // U(r+1, lambda) = sum over mu in {lambda - cell, lambda} U'(r+1, mu)
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (mu, d) in &u_prime[r] {
            *next.entry(mu.clone()).or_insert_with(BigInt::zero) += d;
            for lam in mu.add_cell() {
                *next.entry(lam).or_insert_with(BigInt::zero) += d;
            }
        }
        u.push(next);
    }
    PartitionTowerDims { u, u_prime }
}

/// `sum of squared dims = Bell(2r)` for the partition tower.
pub fn partition_dimension_check(r_max: usize) -> Result<Report> {
    let mut report = Report::default();
    let dims = partition_tower_dims(r_max);
    for (r, level) in dims.u.iter().enumerate() {
        let mut total = BigInt::zero();
        for d in level.values() {
            total += d * d;
        }
        report.push_eq(
            format!("partition tower squared dims at r={r} vs Bell(2r)"),
            &total,
            &bell_number(2 * r),
        );
    }
    Ok(report)
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
