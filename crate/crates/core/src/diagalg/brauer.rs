//! Brauer-algebra elements: the averaged idempotent, Yang-Baxter
//! elements and their reduced-word products, diagrammatic Pfaffians and
//! the rewrite onto noncrossing diagrams.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::diagrams::{
    crossing_pairs, enumerate_brauer, has_j_crossing, BrauerDiagram, DiagramLike,
};
use crate::error::{domain, internal, Result};

use super::{DiagElement, Perm};

/// The diagram `u_i` (cup over cap at strands `i`, `i+1`) on `m` strands.
pub fn u_diagram(m: usize, i: usize) -> Result<BrauerDiagram> {
    if i == 0 || i >= m {
        return Err(domain(format!("u_{i} undefined on {m} strands")));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..m {
        if a != i - 1 && a != i {
            pairs.push((a, m + a));
        }
    }
    pairs.push((i - 1, i));
    pairs.push((m + i - 1, m + i));
    BrauerDiagram::new(m, m, pairs)
}

/// The crossing diagram `s_i` on `m` strands.
pub fn s_diagram(m: usize, i: usize) -> Result<BrauerDiagram> {
    Ok(Perm::adjacent(m, i)?.to_brauer())
}

/// `E(m) = (1/m!) sum of all diagrams` on `m` strands.
pub fn e_average(m: usize, delta: &BigRational) -> Result<DiagElement<BrauerDiagram>> {
    let mut acc = DiagElement::zero(m, m, delta);
    let mut count = BigInt::zero();
    for d in enumerate_brauer(m, m)? {
        acc = acc.add(&DiagElement::from_diagram(d, delta))?;
        count += BigInt::one();
    }
    let mut fact = BigInt::one();
    for i in 1..=m {
        fact *= BigInt::from(i);
    }
    Ok(acc.scale(&BigRational::new(BigInt::one(), fact)))
}

/// The antisymmetriser `(1/m!) sum sign(pi) pi` inside the span of
/// permutation diagrams.
pub fn perm_antisymmetriser(m: usize, delta: &BigRational) -> DiagElement<BrauerDiagram> {
    let mut acc = DiagElement::zero(m, m, delta);
    let mut fact = BigInt::one();
    for i in 1..=m {
        fact *= BigInt::from(i);
    }
    for p in Perm::all(m) {
        let c = BigRational::new(BigInt::from(p.sign()), fact.clone());
        acc = acc
            .add(&DiagElement::from_diagram(p.to_brauer(), delta).scale(&c))
            .expect("same hom");
    }
    acc
}

/// The Yang-Baxter element
/// `R_i(k) = (1/(k+1)) (1 + k s_i - (2k/(delta+2k-2)) u_i)`
/// on `m` strands.  The parameter `delta = 2 - 2k` is a pole.
pub fn yang_baxter_r(
    m: usize,
    i: usize,
    k: i64,
    delta: &BigRational,
) -> Result<DiagElement<BrauerDiagram>> {
    let pole = BigRational::from_integer(BigInt::from(2 - 2 * k));
    if *delta == pole {
        return Err(domain(format!(
            "R_{i}({k}) has a pole at delta = {pole}"
        )));
    }
    let kq = BigRational::from_integer(BigInt::from(k));
    let id = DiagElement::identity(m, delta);
    let s = DiagElement::from_diagram(s_diagram(m, i)?, delta);
    let u = DiagElement::from_diagram(u_diagram(m, i)?, delta);
    let u_coeff = BigRational::from_integer(BigInt::from(2 * k))
        / (delta.clone() + BigRational::from_integer(BigInt::from(2 * k - 2)));
    let inner = id
        .add(&s.scale(&kq))?
        .sub(&u.scale(&u_coeff))?;
    let norm = BigRational::new(BigInt::one(), BigInt::from(k + 1));
    Ok(inner.scale(&norm))
}

/// Product of Yang-Baxter elements along a reduced word for the longest
/// permutation of `S_(n+1)`; the crossing labels `k_p` are the
/// differences of the string numbers at each crossing.  Non-reduced
/// words and words of the wrong length are rejected.
pub fn e_from_word(
    n: usize,
    word: &[usize],
    delta: &BigRational,
) -> Result<DiagElement<BrauerDiagram>> {
    let m = n + 1;
    if word.len() != m * (m - 1) / 2 {
        return Err(domain(format!(
            "a reduced word for the longest element of S_{m} has length {}, got {}",
            m * (m - 1) / 2,
            word.len()
        )));
    }
    // track which original string occupies each position
    let mut content: Vec<usize> = (1..=m).collect();
    let mut labels = Vec::with_capacity(word.len());
    for &i in word {
        if i == 0 || i >= m {
            return Err(domain(format!("letter s_{i} out of range on {m} strands")));
        }
        let (a, b) = (content[i - 1], content[i]);
        if a > b {
            return Err(domain(format!(
                "word is not reduced: strings {b} and {a} cross twice"
            )));
        }
        labels.push((i, (b - a) as i64));
        content.swap(i - 1, i);
    }
    let mut acc = DiagElement::identity(m, delta);
    for (i, k) in labels {
        acc = acc.multiply(&yang_baxter_r(m, i, k, delta)?)?;
    }
    Ok(acc)
}

/// All reduced words for the longest element of `S_m`, by depth-first
/// search over the weak order.
pub fn reduced_words_longest(m: usize) -> Vec<Vec<usize>> {
    let target = m * (m - 1) / 2;
    let mut out = Vec::new();
    let mut word = Vec::new();
    let mut content: Vec<usize> = (1..=m).collect();
    fn rec(
        m: usize,
        target: usize,
        content: &mut Vec<usize>,
        word: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if word.len() == target {
            out.push(word.clone());
            return;
        }
        for i in 1..m {
            if content[i - 1] < content[i] {
                content.swap(i - 1, i);
                word.push(i);
                rec(m, target, content, word, out);
                word.pop();
                content.swap(i - 1, i);
            }
        }
    }
    rec(m, target, &mut content, &mut word, &mut out);
    out
}

/// Diagrammatic Pfaffian: the sum over all completions of the partial
/// matching `f` by perfect matchings of the `2(n+1)`-point set `uncovered`.
pub fn pfaffian(
    r: usize,
    s: usize,
    f: &[(usize, usize)],
    uncovered: &[usize],
    n: usize,
    delta: &BigRational,
) -> Result<DiagElement<BrauerDiagram>> {
    if uncovered.len() != 2 * (n + 1) {
        return Err(domain(format!(
            "a Pfaffian of order 2(n+1) = {} needs {} uncovered points, got {}",
            2 * (n + 1),
            2 * (n + 1),
            uncovered.len()
        )));
    }
    let total = r + s;
    let mut covered = vec![false; total];
    for &(a, b) in f {
        if a >= total || b >= total {
            return Err(domain("partial matching point out of range"));
        }
        covered[a] = true;
        covered[b] = true;
    }
    for &p in uncovered {
        if p >= total || covered[p] {
            return Err(domain("uncovered set overlaps the partial matching"));
        }
        covered[p] = true;
    }
    if covered.iter().any(|&c| !c) {
        return Err(domain("partial matching and uncovered set do not cover"));
    }
    let mut acc = DiagElement::zero(r, s, delta);
    for completion in matchings_of_points(uncovered) {
        let mut pairs = f.to_vec();
        pairs.extend(completion);
        acc = acc.add(&DiagElement::from_diagram(
            BrauerDiagram::new(r, s, pairs)?,
            delta,
        ))?;
    }
    Ok(acc)
}

fn matchings_of_points(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
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
        for mut m in matchings_of_points(&rest) {
            m.push((first, partner));
            out.push(m);
        }
    }
    out
}

/// Rewrites an element of `Hom(0, k)` onto `(n+1)`-noncrossing diagrams
/// modulo the ideal spanned by the Pfaffians of order `2(n+1)`: the
/// fully crossing matching on the `2(n+1)` points of an `(n+1)`-crossing
/// is replaced by minus the sum of the other matchings of those points.
/// Each step strictly decreases the total crossing number.
pub fn reduce_to_noncrossing(
    a: &DiagElement<BrauerDiagram>,
    n: usize,
) -> Result<DiagElement<BrauerDiagram>> {
    let (r, _) = a.hom();
    if r != 0 {
        return Err(domain("the rewrite is defined on Hom(0, k)"));
    }
    let mut current = a.clone();
    loop {
        let offender = current
            .support()
            .find(|d| has_j_crossing(d.pairs(), n + 1))
            .cloned();
        let Some(d) = offender else {
            return Ok(current);
        };
        let coeff = current.coeff(&d);
        let points = lex_least_crossing_points(&d, n + 1)
            .ok_or_else(|| internal("offender lost its crossing"))?;
        let in_crossing = |p: usize| points.contains(&p);
        let kept: Vec<(usize, usize)> = d
            .pairs()
            .iter()
            .copied()
            .filter(|&(x, y)| !in_crossing(x) && !in_crossing(y))
            .collect();
        let before = crossing_pairs(d.pairs());
        // Pf(kept) = 0 modulo the ideal: move the fully crossing term
        // across the sum
        let mut replacement = DiagElement::zero(0, d.hom().1, current.delta());
        for completion in matchings_of_points(&points) {
            let mut pairs = kept.clone();
            pairs.extend(completion);
            let candidate = BrauerDiagram::new(0, d.hom().1, pairs)?;
            if candidate == d {
                continue;
            }
            if crossing_pairs(candidate.pairs()) >= before {
                return Err(internal(
                    "rewrite failed to decrease the crossing number",
                ));
            }
            replacement = replacement.sub(&DiagElement::from_diagram(
                candidate,
                current.delta(),
            ))?;
        }
        current = current
            .sub(&DiagElement::from_diagram(d, current.delta()).scale(&coeff))?
            .add(&replacement.scale(&coeff))?;
    }
}

/// The lexicographically least point set supporting a `j`-crossing.
fn lex_least_crossing_points(d: &BrauerDiagram, j: usize) -> Option<Vec<usize>> {
    let mut sorted: Vec<(usize, usize)> = d.pairs().to_vec();
    sorted.sort_unstable();
    let mut best: Option<Vec<usize>> = None;
    fn rec(
        sorted: &[(usize, usize)],
        from: usize,
        chain: &mut Vec<(usize, usize)>,
        j: usize,
        best: &mut Option<Vec<usize>>,
    ) {
        if chain.len() == j {
            let mut pts: Vec<usize> = chain.iter().flat_map(|&(a, b)| [a, b]).collect();
            pts.sort_unstable();
            if best.as_ref().is_none_or(|b| pts < *b) {
                *best = Some(pts);
            }
            return;
        }
        for (idx, &(a, b)) in sorted.iter().enumerate().skip(from) {
            let ok = match chain.last() {
                None => true,
                Some(&(la, _)) => {
                    let first_b = chain[0].1;
                    let last_b = chain.last().unwrap().1;
                    a > la && a < first_b && b > last_b
                }
            };
            if ok {
                chain.push((a, b));
                rec(sorted, idx + 1, chain, j, best);
                chain.pop();
            }
        }
    }
    rec(&sorted, 0, &mut Vec::new(), j, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{rat, ratio};

    #[test]
    fn e2_is_idempotent_at_its_delta() {
        let delta = rat(-2);
        let e2 = e_average(2, &delta).unwrap();
        assert_eq!(e2.multiply(&e2).unwrap(), e2);
        // explicit form (1 + s_1 + u_1)/2
        let expect = DiagElement::identity(2, &delta)
            .add(&DiagElement::from_diagram(s_diagram(2, 1).unwrap(), &delta))
            .unwrap()
            .add(&DiagElement::from_diagram(u_diagram(2, 1).unwrap(), &delta))
            .unwrap()
            .scale(&ratio(1, 2));
        assert_eq!(e2, expect);
    }

    #[test]
    fn e_average_absorption() {
        for n in 1..=2usize {
            let delta = rat(-2 * (n as i64));
            let e = e_average(n + 1, &delta).unwrap();
            assert_eq!(e.multiply(&e).unwrap(), e, "idempotent n={n}");
            for i in 1..=n {
                let s = DiagElement::from_diagram(s_diagram(n + 1, i).unwrap(), &delta);
                let u = DiagElement::from_diagram(u_diagram(n + 1, i).unwrap(), &delta);
                assert_eq!(s.multiply(&e).unwrap(), e, "s_{i} E = E");
                assert_eq!(e.multiply(&s).unwrap(), e, "E s_{i} = E");
                assert!(u.multiply(&e).unwrap().is_zero(), "u_{i} E = 0");
                assert!(e.multiply(&u).unwrap().is_zero(), "E u_{i} = 0");
            }
            assert_eq!(e.trace().unwrap(), rat(0), "trace E({}) at -2n", n + 1);
        }
    }

    #[test]
    fn antisymmetriser_is_idempotent() {
        let delta = rat(9);
        for m in 1..=3 {
            let e = perm_antisymmetriser(m, &delta);
            assert_eq!(e.multiply(&e).unwrap(), e);
        }
        let e2 = perm_antisymmetriser(2, &delta);
        let expect = DiagElement::identity(2, &delta)
            .sub(&DiagElement::from_diagram(s_diagram(2, 1).unwrap(), &delta))
            .unwrap()
            .scale(&ratio(1, 2));
        assert_eq!(e2, expect);
    }

    #[test]
    fn yang_baxter_r1_at_minus_two_is_e2() {
        let delta = rat(-2);
        let r = yang_baxter_r(2, 1, 1, &delta).unwrap();
        assert_eq!(r, e_average(2, &delta).unwrap());
        assert!(yang_baxter_r(2, 1, 1, &rat(0)).is_err());
    }

    #[test]
    fn yang_baxter_equation() {
        for (h, k) in [(1i64, 1i64), (1, 2), (2, 1)] {
            for delta in [rat(-4), rat(5), ratio(7, 2)] {
                let poles = [2 - 2 * h, 2 - 2 * k, 2 - 2 * (h + k)];
                if poles.iter().any(|&p| delta == rat(p)) {
                    // the element itself is undefined here
                    assert!(
                        yang_baxter_r(3, 1, h + k, &delta).is_err()
                            || yang_baxter_r(3, 1, h, &delta).is_err()
                            || yang_baxter_r(3, 1, k, &delta).is_err()
                    );
                    continue;
                }
                let r1 = |k| yang_baxter_r(3, 1, k, &delta).unwrap();
                let r2 = |k| yang_baxter_r(3, 2, k, &delta).unwrap();
                let lhs = r1(h).multiply(&r2(h + k)).unwrap().multiply(&r1(k)).unwrap();
                let rhs = r2(k).multiply(&r1(h + k)).unwrap().multiply(&r2(h)).unwrap();
                assert_eq!(lhs, rhs, "h={h} k={k} delta={delta}");
            }
        }
    }

    #[test]
    fn yang_baxter_distant_commutation() {
        let delta = rat(5);
        let a = yang_baxter_r(4, 1, 1, &delta).unwrap();
        let b = yang_baxter_r(4, 3, 2, &delta).unwrap();
        assert_eq!(
            a.multiply(&b).unwrap(),
            b.multiply(&a).unwrap()
        );
    }

    #[test]
    fn e_from_word_examples() {
        let delta = rat(-2);
        let e = e_from_word(1, &[1], &delta).unwrap();
        assert_eq!(e, e_average(2, &delta).unwrap());

        let delta = rat(-4);
        let a = e_from_word(2, &[1, 2, 1], &delta).unwrap();
        let b = e_from_word(2, &[2, 1, 2], &delta).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, e_average(3, &delta).unwrap());

        assert!(e_from_word(2, &[1, 1, 2], &delta).is_err());
        assert!(e_from_word(2, &[1, 2], &delta).is_err());
    }

    #[test]
    fn e_from_word_is_word_independent_generically() {
        for delta in [rat(7), ratio(-9, 2)] {
            for n in 1..=2usize {
                let words = reduced_words_longest(n + 1);
                let first = e_from_word(n, &words[0], &delta).unwrap();
                for w in &words[1..] {
                    assert_eq!(e_from_word(n, w, &delta).unwrap(), first, "word {w:?}");
                }
                // generic-delta element is still idempotent
                assert_eq!(first.multiply(&first).unwrap(), first);
            }
        }
        // a sample of reduced words for n = 3
        let delta = rat(7);
        let words = reduced_words_longest(4);
        assert_eq!(words.len(), 16);
        let first = e_from_word(3, &words[0], &delta).unwrap();
        for w in words.iter().step_by(5) {
            assert_eq!(e_from_word(3, w, &delta).unwrap(), first);
        }
    }

    #[test]
    fn pfaffian_examples() {
        let delta = rat(-2);
        // Pf(empty) on Hom(2,2) at n=1: the sum of all three diagrams
        let pf = pfaffian(2, 2, &[], &[0, 1, 2, 3], 1, &delta).unwrap();
        let e2 = e_average(2, &delta).unwrap();
        assert_eq!(pf.scale(&ratio(1, 2)), e2);
        // and on Hom(0,4)
        let pf = pfaffian(0, 4, &[], &[0, 1, 2, 3], 1, &delta).unwrap();
        assert_eq!(pf.terms().len(), 3);
        assert!(pfaffian(0, 4, &[], &[0, 1, 2], 1, &delta).is_err());
    }

    #[test]
    fn rewrite_examples() {
        let delta = rat(-2);
        let three_crossing = DiagElement::from_diagram(
            BrauerDiagram::new(0, 6, vec![(0, 3), (1, 4), (2, 5)]).unwrap(),
            &delta,
        );
        let reduced = reduce_to_noncrossing(&three_crossing, 1).unwrap();
        assert!(reduced
            .support()
            .all(|d| !has_j_crossing(d.pairs(), 2)));

        // already noncrossing: unchanged
        let nested = DiagElement::from_diagram(
            BrauerDiagram::new(0, 6, vec![(0, 5), (1, 4), (2, 3)]).unwrap(),
            &delta,
        );
        assert_eq!(reduce_to_noncrossing(&nested, 1).unwrap(), nested);

        // linearity
        let sum = three_crossing.add(&nested).unwrap();
        assert_eq!(
            reduce_to_noncrossing(&sum, 1).unwrap(),
            reduced.add(&nested).unwrap()
        );
    }
}
