//! Symmetric group character values by the Murnaghan-Nakayama border
//! strip recursion, with a per-thread memo table.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::tableaux::{enumerate_partitions, Partition};

thread_local! {
    static CHAR_MEMO: RefCell<HashMap<(Vec<usize>, Vec<usize>), BigInt>> =
        RefCell::new(HashMap::new());
}

/// The irreducible character value `chi^lambda(mu)`.
pub fn char_value(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    mn_recurse(lambda.parts(), mu.parts())
}

fn mn_recurse(lambda: &[usize], mu: &[usize]) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = CHAR_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let t = mu[0];
    let rest_mu = &mu[1..];
    // beta numbers: lambda_i + (l - i), strictly decreasing
    let l = lambda.len();
    let betas: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = BigInt::zero();
    for (pos, &beta) in betas.iter().enumerate() {
        if beta < t {
            continue;
        }
        let target = beta - t;
        if betas.contains(&target) {
            continue;
        }
        // removing a border strip of size t: the height is the number of
        // beta numbers strictly between target and beta
        let height = betas.iter().filter(|&&g| target < g && g < beta).count();
        let mut new_betas = betas.clone();
        new_betas[pos] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let new_lambda: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b + 1 + i - l)
            .filter(|&p| p > 0)
            .collect();
        let sub = mn_recurse(&new_lambda, rest_mu);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    CHAR_MEMO.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

/// The expansion `s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu`.
pub fn schur_to_p_map(lambda: &Partition) -> BTreeMap<Partition, BigRational> {
    let mut out = BTreeMap::new();
    for mu in enumerate_partitions(lambda.size(), None, false) {
        let chi = char_value(lambda, &mu);
        if !chi.is_zero() {
            out.insert(
                mu.clone(),
                BigRational::new(chi, mu.z()),
            );
        }
    }
    out
}
