//! Rank, character and fundamental-theorem checks built on top of the
//! evaluation functors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::diagalg::brauer::{e_average, pfaffian, perm_antisymmetriser};
use crate::diagalg::partition::partition_xd;
use crate::diagalg::Perm;
use crate::diagrams::{
    enumerate_matchings, enumerate_noncrossing, enumerate_partition_diagrams,
    enumerate_regular_diagrams, BrauerDiagram, PartitionDiagram,
};
use crate::error::{domain, internal, Result};
use crate::matrix::{rank_of_vectors, ExactMatrix};
use crate::symfunc::SymFunc;
use crate::tableaux::enumerate_partitions;

use super::{relations::Report, Evaluator, GroupKind, Strategy};

fn rat_vec(v: Vec<i64>) -> Vec<BigRational> {
    v.into_iter()
        .map(|x| BigRational::from_integer(BigInt::from(x)))
        .collect()
}

impl Evaluator {
    /// Coordinate vector of an invariant diagram in `Hom(0, k)`.
    pub fn invariant_vector(&self, d: &BrauerDiagram) -> Result<Vec<BigRational>> {
        Ok(rat_vec(self.ev_brauer_vector(d, Strategy::Primary)?))
    }

    pub fn invariant_vector_partition(&self, d: &PartitionDiagram) -> Result<Vec<BigRational>> {
        let m = self.ev_partition(d)?;
        Ok(m.column(0))
    }
}

/// Rank of the span of the evaluated invariant diagrams.
pub fn invariant_span_rank_brauer(e: &Evaluator, diagrams: &[BrauerDiagram]) -> Result<usize> {
    let mut vectors = Vec::with_capacity(diagrams.len());
    for d in diagrams {
        vectors.push(e.invariant_vector(d)?);
    }
    Ok(rank_of_vectors(&vectors))
}

pub fn invariant_span_rank_partition(
    e: &Evaluator,
    diagrams: &[PartitionDiagram],
) -> Result<usize> {
    let mut vectors = Vec::with_capacity(diagrams.len());
    for d in diagrams {
        vectors.push(e.invariant_vector_partition(d)?);
    }
    Ok(rank_of_vectors(&vectors))
}

/// Selects a subfamily of vectors forming a basis of the span, by
/// incremental Gaussian elimination.
fn independent_subset(vectors: &[Vec<BigRational>]) -> Vec<usize> {
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut chosen = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for b in &basis {
            // eliminate with the pivot of b
            let pivot = b.iter().position(|x| !x.is_zero()).unwrap();
            if !w[pivot].is_zero() {
                let f = w[pivot].clone() / b[pivot].clone();
                for (wj, bj) in w.iter_mut().zip(b) {
                    *wj -= &f * bj;
                }
            }
        }
        if w.iter().any(|x| !x.is_zero()) {
            basis.push(w);
            chosen.push(i);
            // keep the basis in echelon-ish form: sort by pivot
            basis.sort_by_key(|b| b.iter().position(|x| !x.is_zero()).unwrap());
        }
    }
    chosen
}

/// Frobenius character of the symmetric group action on the invariant
/// span of `Hom(0, k)` under the symplectic evaluator: for one
/// representative permutation per cycle type, the trace of its action
/// on the span, assembled as `sum tr(sigma_lambda)/z_lambda p_lambda`.
pub fn character_on_invariant_span(e: &Evaluator, k: usize) -> Result<SymFunc> {
    let vectors: Vec<Vec<BigRational>>;
    match e.kind() {
        GroupKind::Symplectic => {
            let diagrams = enumerate_matchings(k)?;
            vectors = diagrams
                .iter()
                .map(|d| e.invariant_vector(d))
                .collect::<Result<_>>()?;
        }
        GroupKind::SymmetricGroup => {
            let diagrams = enumerate_partition_diagrams(0, k)?;
            vectors = diagrams
                .iter()
                .map(|d| e.invariant_vector_partition(d))
                .collect::<Result<_>>()?;
        }
        GroupKind::GeneralLinear => {
            return Err(domain(
                "span characters are provided for the symplectic and symmetric evaluators",
            ))
        }
    }
    let chosen = independent_subset(&vectors);
    let basis: Vec<&Vec<BigRational>> = chosen.iter().map(|&i| &vectors[i]).collect();
    let rows = basis.first().map_or(0, |v| v.len());
    let a = ExactMatrix::from_fn(rows, basis.len(), |i, j| basis[j][i].clone());
    let mut ch = SymFunc::zero(&["X"]);
    for lam in enumerate_partitions(k, None, false) {
        let sigma = Perm::with_cycle_type(&lam);
        let mut tr = BigRational::zero();
        for (col, v) in basis.iter().enumerate() {
            let moved = e.perm_apply(&sigma, v);
            let coords = a
                .solve(&moved)
                .map_err(|_| internal("permuted basis vector left the span"))?;
            tr += &coords[col];
        }
        if !tr.is_zero() {
            let z = BigRational::from_integer(lam.z());
            ch = ch.add(&SymFunc::p("X", &lam).scale(&(tr / z)));
        }
    }
    Ok(ch)
}

/// Checks that the long cycle acts on invariant vectors as diagram
/// rotation: the product of crossing actions along `s_1 s_2 ... s_(k-1)`
/// sends `ev(d)` to `ev(rotate(d))` for every matching `d` of `[k]`.
pub fn rotation_vs_long_cycle(e: &Evaluator, k: usize) -> Result<bool> {
    if e.kind() != GroupKind::Symplectic {
        return Err(domain("the rotation check runs under the symplectic evaluator"));
    }
    let dim_total = e.dim().pow(k as u32);
    let mut long_cycle = ExactMatrix::identity(dim_total);
    // rho = s_1 ∘ s_2 ∘ ... ∘ s_(k-1) as functions, so the action matrix
    // is the product of the generator actions in that order
    for i in 1..k {
        let gen = e.perm_action(&Perm::adjacent(k, i)?, k)?;
        long_cycle = long_cycle.matmul(&gen)?;
    }
    for d in enumerate_matchings(k)? {
        let v = e.invariant_vector(&d)?;
        let rotated = e.invariant_vector(&d.rotate()?)?;
        let lv = (0..dim_total)
            .map(|i| {
                (0..dim_total)
                    .map(|j| long_cycle.get(i, j) * &v[j])
                    .sum::<BigRational>()
            })
            .collect::<Vec<_>>();
        if lv != rotated {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fundamental theorem checks for the symplectic evaluator on `Hom(0, 2r)`.
pub fn sp_fundamental_checks(e: &Evaluator, r: usize) -> Result<Report> {
    let n = e.rank();
    let mut report = Report::default();

    // (a) the averaged idempotent evaluates to zero
    let em = e.ev_brauer_element(&e_average(n + 1, e.delta())?)?;
    report.push(
        format!("ev(E({})) = 0", n + 1),
        em.is_zero(),
        String::new(),
    );

    // (b) sample Pfaffians evaluate to zero
    let k = 2 * r;
    if k >= 2 * (n + 1) {
        let all = enumerate_matchings(k)?;
        let mut tested = 0;
        let mut pass = true;
        for d in all.iter().step_by(3) {
            if tested == 5 {
                break;
            }
            // remove n+1 strands to expose 2(n+1) points
            let kept: Vec<(usize, usize)> = d.pairs()[n + 1..].to_vec();
            let mut uncovered: Vec<usize> =
                d.pairs()[..n + 1].iter().flat_map(|&(a, b)| [a, b]).collect();
            uncovered.sort_unstable();
            let pf = pfaffian(0, k, &kept, &uncovered, n, e.delta())?;
            let pv = e.ev_brauer_element(&pf)?;
            pass &= pv.is_zero();
            tested += 1;
        }
        report.push(
            format!("ev(Pf(f)) = 0 on {tested} samples"),
            pass,
            String::new(),
        );
    }

    // (c) span rank equals the count of (n+1)-noncrossing matchings
    let rank = invariant_span_rank_brauer(e, &enumerate_matchings(k)?)?;
    let expected = enumerate_noncrossing(k, n)?.len();
    report.push_eq(
        format!("rank of ev(matchings of [{k}]) vs (n+1)-noncrossing count"),
        &rank,
        &expected,
    );
    Ok(report)
}

/// Fundamental theorem checks for the symmetric group evaluator on
/// `Hom(0, r)`.
pub fn sn_fundamental_checks(e: &Evaluator, r: usize) -> Result<Report> {
    let n = e.rank();
    let mut report = Report::default();
    let diagrams = enumerate_partition_diagrams(0, r)?;
    let rank = invariant_span_rank_partition(e, &diagrams)?;
    let expected = diagrams.iter().filter(|d| d.num_blocks() <= n).count();
    report.push_eq(
        format!("rank of ev(partition diagrams of [{r}]) vs partitions into <= {n} blocks"),
        &rank,
        &expected,
    );

    let mut tested = 0;
    let mut pass = true;
    for d in diagrams.iter().filter(|d| d.num_blocks() > n) {
        if tested == 20 {
            break;
        }
        let x = partition_xd(d, e.delta())?;
        pass &= e.ev_partition_element(&x)?.is_zero();
        tested += 1;
    }
    report.push(
        format!("ev(x_d) = 0 for {tested} diagrams with more than {n} blocks"),
        pass,
        String::new(),
    );
    Ok(report)
}

/// Fundamental theorem checks for the permutation category inside the
/// general linear evaluator: the span of the permutation actions on
/// `⊗^r V` has rank counted by the longest decreasing subsequence.
pub fn gl_permutation_checks(e: &Evaluator, r: usize) -> Result<Report> {
    let n = e.rank();
    let mut report = Report::default();
    let mut vectors = Vec::new();
    for p in Perm::all(r) {
        let m = e.ev_directed(&p.to_directed())?;
        let mut flat = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                flat.push(m.get(i, j).clone());
            }
        }
        vectors.push(flat);
    }
    let rank = rank_of_vectors(&vectors);
    let expected = Perm::all(r).iter().filter(|p| p.lds() <= n).count();
    report.push_eq(
        format!("rank of ev(S_{r}) on tensor space vs lds <= {n} count"),
        &rank,
        &expected,
    );
    Ok(report)
}

/// Walled injectivity: with `2n >= r1+r2+s1+s2` the evaluations of all
/// directed diagrams in the walled hom set are linearly independent.
pub fn gl_walled_injectivity(
    e: &Evaluator,
    r1: usize,
    r2: usize,
    s1: usize,
    s2: usize,
) -> Result<Report> {
    let mut report = Report::default();
    let diagrams = crate::diagrams::enumerate_directed_walled(r1, r2, s1, s2)?;
    let mut vectors = Vec::new();
    for d in &diagrams {
        let m = e.ev_directed(d)?;
        let mut flat = Vec::with_capacity(m.rows() * m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                flat.push(m.get(i, j).clone());
            }
        }
        vectors.push(flat);
    }
    let rank = rank_of_vectors(&vectors);
    report.push_eq(
        format!("walled ({r1},{r2})->({s1},{s2}) rank vs diagram count"),
        &rank,
        &diagrams.len(),
    );
    Ok(report)
}

/// The image of the evaluated `X(r, n, k)` diagrams under the r-fold
/// per-block symmetrizer: its rank must equal both `|X(r, n, k)|` and
/// the dimension from the invariant character at `q = 1`.
pub fn sym_power_basis_check(n: usize, r: usize, k: usize) -> Result<Report> {
    let e = Evaluator::symplectic(n);
    let mut report = Report::default();
    let x = enumerate_regular_diagrams(r, n, k)?;

    // per-block symmetrizer: the evaluated k-antisymmetriser, which in
    // the odd convention is the plain place-symmetrizer on each block
    let sigma = e.ev_brauer_element(&perm_antisymmetriser(k, e.delta()))?;
    let mut vectors = Vec::new();
    for d in &x {
        let v = e.invariant_vector(d)?;
        // apply sigma blockwise: reshape the kr-fold tensor index as r
        // groups of k digits and act on each group
        let mut w = v;
        for block in 0..r {
            w = apply_block(&e, &sigma, &w, block, r, k)?;
        }
        vectors.push(w);
    }
    let rank = rank_of_vectors(&vectors);
    report.push_eq(
        format!("rank of symmetrized X({r},{n},{k}) vs |X|"),
        &rank,
        &x.len(),
    );

    let ch = crate::symfunc::invariant_character(&crate::symfunc::CharacterFamily::SpSymPower {
        r,
        n,
        k,
    })?;
    let dim = ch.fake_degree()?.eval_at_one();
    report.push_eq(
        format!("|X({r},{n},{k})| vs character dimension"),
        &BigInt::from(x.len()),
        &dim,
    );
    Ok(report)
}

fn apply_block(
    e: &Evaluator,
    sigma: &ExactMatrix,
    v: &[BigRational],
    block: usize,
    r: usize,
    k: usize,
) -> Result<Vec<BigRational>> {
    let dim = e.dim();
    let block_dim = dim.pow(k as u32);
    let tail = dim.pow((k * (r - 1 - block)) as u32);
    let mut out = vec![BigRational::zero(); v.len()];
    for (idx, val) in v.iter().enumerate() {
        if val.is_zero() {
            continue;
        }
        let low = idx % tail;
        let mid = idx / tail % block_dim;
        let high = idx / tail / block_dim;
        for target in 0..block_dim {
            let c = sigma.get(target, mid);
            if !c.is_zero() {
                out[(high * block_dim + target) * tail + low] += c * val;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp_span_rank_examples() {
        let e = Evaluator::symplectic(1);
        let rank = invariant_span_rank_brauer(&e, &enumerate_matchings(6).unwrap()).unwrap();
        assert_eq!(rank, 5);
        // n >= r: all matchings independent
        let e = Evaluator::symplectic(2);
        let rank = invariant_span_rank_brauer(&e, &enumerate_matchings(4).unwrap()).unwrap();
        assert_eq!(rank, 3);
    }

    #[test]
    fn sn_span_rank_examples() {
        let e = Evaluator::symmetric_group(1);
        let diagrams = enumerate_partition_diagrams(0, 3).unwrap();
        assert_eq!(invariant_span_rank_partition(&e, &diagrams).unwrap(), 1);
        let e = Evaluator::symmetric_group(2);
        let diagrams = enumerate_partition_diagrams(0, 4).unwrap();
        assert_eq!(invariant_span_rank_partition(&e, &diagrams).unwrap(), 8);
    }

    #[test]
    fn character_on_span_sp2_k4() {
        use crate::symfunc::s_to_p;
        let e = Evaluator::symplectic(1);
        let ch = character_on_invariant_span(&e, 4).unwrap();
        let expect = s_to_p("X", &crate::tableaux::Partition::new(vec![2, 2]).unwrap());
        assert_eq!(ch, expect);
    }

    #[test]
    fn rotation_matches_long_cycle_small() {
        let e = Evaluator::symplectic(1);
        assert!(rotation_vs_long_cycle(&e, 4).unwrap());
        assert!(rotation_vs_long_cycle(&e, 2).unwrap());
    }

    #[test]
    fn gl_permutation_rank_small() {
        let e = Evaluator::general_linear(1);
        let report = gl_permutation_checks(&e, 3).unwrap();
        assert!(report.all_pass(), "{:?}", report.lines);
        let e = Evaluator::general_linear(3);
        let report = gl_permutation_checks(&e, 3).unwrap();
        assert!(report.all_pass(), "{:?}", report.lines);
    }
}
