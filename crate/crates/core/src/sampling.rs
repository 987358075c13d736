//! Seeded random diagrams for property and functoriality tests.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::diagrams::{BrauerDiagram, DirectedDiagram, PartitionDiagram, Sign};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A uniformly random perfect matching of `r + s` points.
pub fn random_brauer(rng: &mut StdRng, r: usize, s: usize) -> BrauerDiagram {
    let mut points: Vec<usize> = (0..r + s).collect();
    points.shuffle(rng);
    let pairs = points.chunks(2).map(|c| (c[0], c[1])).collect();
    BrauerDiagram::new(r, s, pairs).expect("random matching")
}

/// A random set partition of `r + s` points, by random block labels.
pub fn random_partition_diagram(rng: &mut StdRng, r: usize, s: usize) -> PartitionDiagram {
    let n = r + s;
    loop {
        let class_of: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n.max(1))).collect();
        if let Ok(d) = PartitionDiagram::from_classes(r, s, &class_of) {
            return d;
        }
    }
}

/// A random directed matching with arbitrary orientations.
pub fn random_directed(rng: &mut StdRng, r: usize, s: usize) -> DirectedDiagram {
    let base = random_brauer(rng, r, s);
    let pairs = base
        .pairs()
        .iter()
        .map(|&(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect();
    DirectedDiagram::new(r, s, pairs).expect("random directed matching")
}

/// A random directed matching with the prescribed domain word, suitable
/// for composing after a diagram with that codomain.
pub fn random_directed_with_domain(
    rng: &mut StdRng,
    domain: &[Sign],
    s: usize,
) -> DirectedDiagram {
    let r = domain.len();
    loop {
        // initial points: top Plus; choose bottom orientations freely
        let mut initials: Vec<usize> = (0..r).filter(|&i| domain[i] == Sign::Plus).collect();
        let mut finals: Vec<usize> = (0..r).filter(|&i| domain[i] == Sign::Minus).collect();
        let bottoms: Vec<usize> = (r..r + s).collect();
        let need = (r + s) / 2;
        // split bottom points between initials and finals at random
        let mut shuffled = bottoms.clone();
        shuffled.shuffle(rng);
        for (i, &p) in shuffled.iter().enumerate() {
            if initials.len() < need && (finals.len() >= need || i % 2 == 0) {
                initials.push(p);
            } else {
                finals.push(p);
            }
        }
        if initials.len() != finals.len() {
            continue;
        }
        finals.shuffle(rng);
        let pairs: Vec<(usize, usize)> = initials.into_iter().zip(finals).collect();
        if pairs.iter().all(|&(a, b)| a != b) {
            if let Ok(d) = DirectedDiagram::new(r, s, pairs) {
                if d.domain_word() == domain {
                    return d;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::DiagramLike;

    #[test]
    fn random_diagrams_are_valid_and_deterministic() {
        let mut a = rng(7);
        let mut b = rng(7);
        for _ in 0..20 {
            let x = random_brauer(&mut a, 3, 3);
            let y = random_brauer(&mut b, 3, 3);
            assert_eq!(x, y);
            assert_eq!(x.hom(), (3, 3));
        }
    }

    #[test]
    fn random_directed_composable_pairs() {
        let mut r = rng(11);
        for _ in 0..50 {
            let x = random_directed(&mut r, 2, 2);
            let y = random_directed_with_domain(&mut r, &x.codomain_word(), 2);
            assert!(x.compose(&y).is_ok());
        }
    }
}
