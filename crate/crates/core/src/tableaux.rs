//! Partitions, standard Young tableaux with the major-index statistic,
//! fake degrees of Schur functions, and bounded oscillating tableaux.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, internal, Result};
use crate::qpoly::{qfactorial, qint, QPoly};

/// An integer partition: weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain("partition parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0];
        let parts = (0..cols)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// All columns have even length, i.e. the transpose has even parts.
    pub fn has_even_columns(&self) -> bool {
        self.transpose().parts().iter().all(|p| p % 2 == 0)
    }

    pub fn has_even_rows(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// The statistic `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Hook lengths of all cells.
    pub fn hooks(&self) -> Vec<usize> {
        let t = self.transpose();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + t.part(j) - i - 1);
            }
        }
        out
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_length_count(&self) -> BigInt {
        let mut num = BigInt::one();
        for k in 1..=self.size() {
            num *= BigInt::from(k);
        }
        for h in self.hooks() {
            num /= BigInt::from(h);
        }
        num
    }

    /// The centralizer order `z_lambda = prod m_j! j^(m_j)`.
    pub fn z(&self) -> BigInt {
        let mut mult: HashMap<usize, usize> = HashMap::new();
        for &p in &self.0 {
            *mult.entry(p).or_insert(0) += 1;
        }
        let mut z = BigInt::one();
        for (j, m) in mult {
            for i in 1..=m {
                z *= BigInt::from(i);
            }
            for _ in 0..m {
                z *= BigInt::from(j);
            }
        }
        z
    }

    /// Partitions obtained by adding one cell, longest-row first.
    pub fn add_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let above = if i == 0 { usize::MAX } else { self.0[i - 1] };
            let here = self.part(i);
            if here < above {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Partitions obtained by removing one cell.
    pub fn remove_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            let below = self.part(i + 1);
            if self.0[i] > below {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                parts.retain(|&p| p > 0);
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Sign of any permutation with this cycle type.
    pub fn cycle_type_sign(&self) -> i64 {
        let transpositions: usize = self.0.iter().map(|p| p - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.0.iter().map(|&p| serde_json::Value::from(p)).collect())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        <Self as fmt::Debug>::fmt(self, f)
    }
}

/// All partitions of `r` in reverse lexicographic order, optionally
/// keeping only those with at most `max_length` rows or with all
/// columns of even length.  The filters apply conjunctively.
pub fn enumerate_partitions(
    r: usize,
    max_length: Option<usize>,
    even_columns: bool,
) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(r, r, &mut stack, &mut out);
    out.retain(|p| max_length.is_none_or(|m| p.len() <= m));
    if even_columns {
        out.retain(|p| p.has_even_columns());
    }
    out
}

fn gen_partitions(rem: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(stack.clone()));
        return;
    }
    for part in (1..=rem.min(max_part)).rev() {
        stack.push(part);
        gen_partitions(rem - part, part, stack, out);
        stack.pop();
    }
}

/// A standard Young tableau stored as its rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn row_of(&self, value: usize) -> usize {
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&value) {
                return i;
            }
        }
        unreachable!("value {value} missing from tableau")
    }

    /// `i` is a descent when `i+1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        let n = self.shape.size();
        (1..n)
            .filter(|&i| self.row_of(i + 1) > self.row_of(i))
            .collect()
    }

    pub fn maj(&self) -> usize {
        self.descents().iter().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter().map(|&v| serde_json::Value::from(v)).collect(),
                    )
                })
                .collect(),
        )
    }
}

/// All standard Young tableaux of the given shape.  The count is
/// verified against the hook length formula.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.size();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fill_tableau(shape, n, 1, &mut rows, &mut out);
    debug_assert_eq!(BigInt::from(out.len()), shape.hook_length_count());
    out
}

fn fill_tableau(
    shape: &Partition,
    n: usize,
    next: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if next > n {
        out.push(StandardTableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    for i in 0..shape.len() {
        let filled = rows[i].len();
        if filled >= shape.part(i) {
            continue;
        }
        if i > 0 && rows[i - 1].len() <= filled {
            continue;
        }
        rows[i].push(next);
        fill_tableau(shape, n, next + 1, rows, out);
        rows[i].pop();
    }
}

/// Fake degree of a Schur function: the generating polynomial of the
/// major index over standard tableaux of the shape.  Computed a second
/// time by the q-analogue of the hook length formula,
/// `q^n(lambda) [r]_q! / prod_c [h(c)]_q`, and the two must agree.
pub fn fake_degree_schur(shape: &Partition) -> Result<QPoly> {
    let mut by_maj = QPoly::zero();
    for t in standard_tableaux(shape) {
        by_maj = by_maj.add(&QPoly::monomial(BigInt::one(), t.maj()));
    }
    let mut hook_den = QPoly::one();
    for h in shape.hooks() {
        hook_den = hook_den.mul(&qint(h));
    }
    let by_hooks = QPoly::monomial(BigInt::one(), shape.n_stat())
        .mul(&qfactorial(shape.size()).div_exact(&hook_den)?);
    if by_maj != by_hooks {
        return Err(internal(format!(
            "fake degree mismatch for {shape}: maj sum {by_maj} vs q-hook {by_hooks}"
        )));
    }
    Ok(by_maj)
}

/// An oscillating tableau: a walk on the Young lattice in which every
/// step adds or removes one cell and every shape has at most `n` rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OscillatingTableau {
    shapes: Vec<Partition>,
}

impl OscillatingTableau {
    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.shapes.iter().map(|s| s.to_json()).collect())
    }
}

/// All length-`r` oscillating tableaux from the empty shape to
/// `final_shape`, with at most `n` rows throughout.
pub fn enumerate_oscillating(n: usize, r: usize, final_shape: &Partition) -> Vec<OscillatingTableau> {
    let mut out = Vec::new();
    let mut path = vec![Partition::empty()];
    walk_oscillating(n, r, final_shape, &mut path, &mut out);
    out
}

fn walk_oscillating(
    n: usize,
    steps_left: usize,
    final_shape: &Partition,
    path: &mut Vec<Partition>,
    out: &mut Vec<OscillatingTableau>,
) {
    let current = path.last().unwrap().clone();
    if !reachable(&current, final_shape, steps_left) {
        return;
    }
    if steps_left == 0 {
        out.push(OscillatingTableau { shapes: path.clone() });
        return;
    }
    let mut nexts = current.add_cell();
    nexts.retain(|p| p.len() <= n);
    nexts.extend(current.remove_cell());
    for next in nexts {
        path.push(next);
        walk_oscillating(n, steps_left - 1, final_shape, path, out);
        path.pop();
    }
}

fn reachable(current: &Partition, target: &Partition, steps: usize) -> bool {
    // cells outside the intersection must all be removed or added
    let mut needed = 0;
    let rows = current.len().max(target.len());
    for i in 0..rows {
        let a = current.part(i);
        let b = target.part(i);
        needed += a.abs_diff(b);
    }
    needed <= steps && (steps - needed) % 2 == 0
}

/// Number of length-`r` oscillating tableaux from the empty shape back
/// to `final_shape` with at most `n` rows, without materializing them.
pub fn count_oscillating(n: usize, r: usize, final_shape: &Partition) -> BigInt {
    let mut memo: HashMap<(Partition, usize), BigInt> = HashMap::new();
    count_walk(n, r, final_shape, &Partition::empty(), &mut memo)
}

fn count_walk(
    n: usize,
    steps_left: usize,
    target: &Partition,
    current: &Partition,
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    if !reachable(current, target, steps_left) {
        return BigInt::zero();
    }
    if steps_left == 0 {
        return BigInt::one();
    }
    let key = (current.clone(), steps_left);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for next in current.add_cell() {
        if next.len() <= n {
            total += count_walk(n, steps_left - 1, target, &next, memo);
        }
    }
    for next in current.remove_cell() {
        total += count_walk(n, steps_left - 1, target, &next, memo);
    }
    memo.insert(key, total.clone());
    total
}
