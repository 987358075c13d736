//! Evaluation functors from the diagram categories onto exact matrices:
//! the symmetric group acting on its defining permutation
//! representation (partition diagrams), the symplectic group on its
//! defining representation with super signs (Brauer diagrams), and the
//! general linear group on mixed tensors (directed diagrams).

mod checks;
mod relations;

pub use checks::*;
pub use relations::{relation_test_suite, CheckLine, Report};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::diagalg::{DiagElement, Perm};
use crate::diagrams::{BrauerDiagram, DiagramLike, DirectedDiagram, PartitionDiagram};
use crate::error::{domain, resource, Result};
use crate::matrix::ExactMatrix;

const MAX_VECTOR_ENTRIES: usize = 1 << 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupKind {
    /// the symmetric group S_n on K^n, delta = n
    SymmetricGroup,
    /// Sp(2n) on K^(2n) viewed as an odd space, delta = -2n
    Symplectic,
    /// GL(n) on mixed tensors of K^n, delta = n
    GeneralLinear,
}

/// An evaluation functor, fixed by its group kind and rank.
#[derive(Clone, Debug)]
pub struct Evaluator {
    kind: GroupKind,
    n: usize,
    dim: usize,
    delta: BigRational,
}

impl Evaluator {
    pub fn symmetric_group(n: usize) -> Self {
        Evaluator {
            kind: GroupKind::SymmetricGroup,
            n,
            dim: n,
            delta: BigRational::from_integer(BigInt::from(n)),
        }
    }

    pub fn symplectic(n: usize) -> Self {
        Evaluator {
            kind: GroupKind::Symplectic,
            n,
            dim: 2 * n,
            delta: BigRational::from_integer(BigInt::from(-2 * (n as i64))),
        }
    }

    pub fn general_linear(n: usize) -> Self {
        Evaluator {
            kind: GroupKind::GeneralLinear,
            n,
            dim: n,
            delta: BigRational::from_integer(BigInt::from(n)),
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Dimension of the underlying vector space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    fn guard(&self, points: usize) -> Result<()> {
        let mut size = 1usize;
        for _ in 0..points {
            size = size
                .checked_mul(self.dim)
                .filter(|&s| s <= MAX_VECTOR_ENTRIES)
                .ok_or_else(|| resource(format!("tensor space of {points} factors too large")))?;
        }
        Ok(())
    }

    /// Gram matrix of the symplectic form, `J = [[0, I], [-I, 0]]`.
    fn gram(&self, a: usize, b: usize) -> i64 {
        let n = self.n;
        if b == a + n {
            1
        } else if a == b + n {
            -1
        } else {
            0
        }
    }

    /// Cup coefficients `<v_a, v_b>` per kind.
    fn cup_entry(&self, a: usize, b: usize) -> i64 {
        match self.kind {
            GroupKind::Symplectic => self.gram(a, b),
            _ => i64::from(a == b),
        }
    }

    /// Cap coefficients: the element dual to the cup.
    fn cap_entry(&self, a: usize, b: usize) -> i64 {
        match self.kind {
            GroupKind::Symplectic => -self.gram(a, b),
            _ => i64::from(a == b),
        }
    }

    fn cross_sign(&self) -> i64 {
        match self.kind {
            GroupKind::Symplectic => -1,
            _ => 1,
        }
    }

    /// Evaluates a Brauer diagram to the matrix `dim^s x dim^r`.
    pub fn ev_brauer(&self, d: &BrauerDiagram) -> Result<ExactMatrix> {
        if self.kind != GroupKind::Symplectic {
            return Err(domain("Brauer diagrams evaluate under the symplectic functor"));
        }
        let (r, s) = d.hom();
        self.guard(r.max(s))?;
        let layers = factorize(d, Strategy::Primary);
        let in_dim = self.dim.pow(r as u32);
        let out_dim = self.dim.pow(s as u32);
        let mut m = ExactMatrix::zeros(out_dim, in_dim);
        for col in 0..in_dim {
            let mut v = vec![0i64; in_dim];
            v[col] = 1;
            let w = self.apply_layers(&layers, r, v);
            for (i, &val) in w.iter().enumerate() {
                if val != 0 {
                    m.set(i, col, BigRational::from_integer(BigInt::from(val)));
                }
            }
        }
        Ok(m)
    }

    /// Evaluates an invariant-vector diagram in `Hom(0, k)` directly to
    /// its integer coordinate vector.
    pub fn ev_brauer_vector(&self, d: &BrauerDiagram, strategy: Strategy) -> Result<Vec<i64>> {
        if self.kind != GroupKind::Symplectic {
            return Err(domain("Brauer diagrams evaluate under the symplectic functor"));
        }
        let (r, _) = d.hom();
        if r != 0 {
            return Err(domain("vector evaluation needs a diagram in Hom(0, k)"));
        }
        self.guard(d.hom().1)?;
        let layers = factorize(d, strategy);
        Ok(self.apply_layers(&layers, 0, vec![1]))
    }

    fn apply_layers(&self, layers: &[Layer], r: usize, mut v: Vec<i64>) -> Vec<i64> {
        let dim = self.dim;
        let mut wires = r;
        for layer in layers {
            match *layer {
                Layer::Cross(p) => {
                    let hi = dim.pow((wires - 2 - p) as u32);
                    let lo_a = hi * dim;
                    let sign = self.cross_sign();
                    let mut w = vec![0i64; v.len()];
                    for (idx, &val) in v.iter().enumerate() {
                        if val == 0 {
                            continue;
                        }
                        let a = idx / lo_a % dim;
                        let b = idx / hi % dim;
                        let swapped = idx - a * lo_a - b * hi + b * lo_a + a * hi;
                        w[swapped] = sign * val;
                    }
                    v = w;
                }
                Layer::Cup(p) => {
                    let tail = dim.pow((wires - 2 - p) as u32);
                    let out_len = v.len() / dim / dim;
                    let mut w = vec![0i64; out_len];
                    for (idx, &val) in v.iter().enumerate() {
                        if val == 0 {
                            continue;
                        }
                        let low = idx % tail;
                        let b = idx / tail % dim;
                        let a = idx / (tail * dim) % dim;
                        let high = idx / (tail * dim * dim);
                        let g = self.cup_entry(a, b);
                        if g != 0 {
                            w[high * tail + low] += g * val;
                        }
                    }
                    v = w;
                    wires -= 2;
                    continue;
                }
                Layer::Cap(p) => {
                    let tail = dim.pow((wires - p) as u32);
                    let out_len = v.len() * dim * dim;
                    let mut w = vec![0i64; out_len];
                    for (idx, &val) in v.iter().enumerate() {
                        if val == 0 {
                            continue;
                        }
                        let low = idx % tail;
                        let high = idx / tail;
                        for a in 0..dim {
                            for b in 0..dim {
                                let k = self.cap_entry(a, b);
                                if k != 0 {
                                    let out = ((high * dim + a) * dim + b) * tail + low;
                                    w[out] += k * val;
                                }
                            }
                        }
                    }
                    v = w;
                    wires += 2;
                    continue;
                }
            }
        }
        v
    }

    /// Evaluates a partition diagram by the 0/1 block-equality tensor.
    pub fn ev_partition(&self, d: &PartitionDiagram) -> Result<ExactMatrix> {
        if self.kind != GroupKind::SymmetricGroup {
            return Err(domain(
                "partition diagrams evaluate under the symmetric group functor",
            ));
        }
        let (r, s) = d.hom();
        self.guard(r.max(s))?;
        let n = self.dim;
        let in_dim = n.pow(r as u32);
        let out_dim = n.pow(s as u32);
        let mut m = ExactMatrix::zeros(out_dim, in_dim);
        let one = BigRational::from_integer(BigInt::from(1));
        for col in 0..in_dim {
            let digits = to_digits(col, n, r);
            for out in self.partition_outputs(d, &digits) {
                m.set(out, col, one.clone());
            }
        }
        Ok(m)
    }

    /// Nonzero output indices of a partition diagram on the given input.
    fn partition_outputs(&self, d: &PartitionDiagram, input: &[usize]) -> Vec<usize> {
        let (r, s) = d.hom();
        let n = self.dim;
        // index per block forced by any top point; bottom-only blocks free
        let mut block_value: Vec<Option<usize>> = vec![None; d.blocks().len()];
        for (bi, block) in d.blocks().iter().enumerate() {
            for &p in block {
                if p < r {
                    match block_value[bi] {
                        None => block_value[bi] = Some(input[p]),
                        Some(v) if v == input[p] => {}
                        _ => return Vec::new(),
                    }
                }
            }
        }
        let free: Vec<usize> = (0..d.blocks().len())
            .filter(|&bi| block_value[bi].is_none())
            .collect();
        let mut outs = Vec::new();
        let total = n.pow(free.len() as u32);
        for assign in 0..total {
            let mut values = block_value.clone();
            let digits = to_digits(assign, n, free.len());
            for (v, &bi) in digits.iter().zip(&free) {
                values[bi] = Some(*v);
            }
            let mut out_digits = vec![0usize; s];
            for (bi, block) in d.blocks().iter().enumerate() {
                for &p in block {
                    if p >= r {
                        out_digits[p - r] = values[bi].unwrap();
                    }
                }
            }
            outs.push(from_digits(&out_digits, n));
        }
        outs
    }

    /// Evaluates a directed diagram by the equality tensor on the
    /// underlying matching.
    pub fn ev_directed(&self, d: &DirectedDiagram) -> Result<ExactMatrix> {
        if self.kind != GroupKind::GeneralLinear {
            return Err(domain(
                "directed diagrams evaluate under the general linear functor",
            ));
        }
        let blocks = d
            .pairs()
            .iter()
            .map(|&(a, b)| vec![a.min(b), a.max(b)])
            .collect();
        let (r, s) = d.hom();
        let as_partition = PartitionDiagram::new(r, s, blocks)?;
        self.guard(r.max(s))?;
        let n = self.dim;
        let in_dim = n.pow(r as u32);
        let out_dim = n.pow(s as u32);
        let mut m = ExactMatrix::zeros(out_dim, in_dim);
        let one = BigRational::from_integer(BigInt::from(1));
        for col in 0..in_dim {
            let digits = to_digits(col, n, r);
            for out in self.partition_outputs(&as_partition, &digits) {
                m.set(out, col, one.clone());
            }
        }
        Ok(m)
    }

    /// Evaluates a rational combination of diagrams.
    pub fn ev_element<D: DiagramLike>(
        &self,
        a: &DiagElement<D>,
        ev_diagram: impl Fn(&Self, &D) -> Result<ExactMatrix>,
    ) -> Result<ExactMatrix> {
        if *a.delta() != self.delta {
            return Err(domain(format!(
                "element has loop parameter {}, evaluator has {}",
                a.delta(),
                self.delta
            )));
        }
        let (r, s) = a.hom();
        let mut m = ExactMatrix::zeros(self.dim.pow(s as u32), self.dim.pow(r as u32));
        for (d, c) in a.terms() {
            m = m.add(&ev_diagram(self, d)?.scale(c))?;
        }
        Ok(m)
    }

    pub fn ev_brauer_element(&self, a: &DiagElement<BrauerDiagram>) -> Result<ExactMatrix> {
        self.ev_element(a, Self::ev_brauer)
    }

    pub fn ev_partition_element(&self, a: &DiagElement<PartitionDiagram>) -> Result<ExactMatrix> {
        self.ev_element(a, Self::ev_partition)
    }

    pub fn ev_directed_element(&self, a: &DiagElement<DirectedDiagram>) -> Result<ExactMatrix> {
        self.ev_element(a, Self::ev_directed)
    }

    /// The action of a permutation on `k` tensor factors: the place
    /// permutation, with the sign of the permutation in the odd
    /// (symplectic) case.
    pub fn perm_action(&self, pi: &Perm, k: usize) -> Result<ExactMatrix> {
        if pi.degree() != k {
            return Err(domain("permutation degree mismatch"));
        }
        self.guard(k)?;
        let n = self.dim;
        let total = n.pow(k as u32);
        let sign = match self.kind {
            GroupKind::Symplectic => pi.sign(),
            _ => 1,
        };
        let entry = BigRational::from_integer(BigInt::from(sign));
        let inv = pi.inverse();
        let mut m = ExactMatrix::zeros(total, total);
        for col in 0..total {
            let digits = to_digits(col, n, k);
            let out: Vec<usize> = (0..k).map(|slot| digits[inv.image(slot)]).collect();
            m.set(from_digits(&out, n), col, entry.clone());
        }
        Ok(m)
    }

    /// Applies the permutation action to an integer vector in place of
    /// building the matrix.
    pub fn perm_apply(&self, pi: &Perm, v: &[BigRational]) -> Vec<BigRational> {
        let n = self.dim;
        let k = pi.degree();
        let sign = match self.kind {
            GroupKind::Symplectic => pi.sign(),
            _ => 1,
        };
        let inv = pi.inverse();
        let mut out = vec![BigRational::zero(); v.len()];
        for (idx, val) in v.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            let digits = to_digits(idx, n, k);
            let moved: Vec<usize> = (0..k).map(|slot| digits[inv.image(slot)]).collect();
            let target = from_digits(&moved, n);
            out[target] = if sign == 1 { val.clone() } else { -val.clone() };
        }
        out
    }
}

pub(crate) fn to_digits(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut digits = vec![0usize; len];
    for slot in (0..len).rev() {
        digits[slot] = idx % base;
        idx /= base;
    }
    digits
}

pub(crate) fn from_digits(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

/// One elementary slice of a Brauer diagram: identities tensored with a
/// single crossing, cup or cap at the given wire position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    Cross(usize),
    Cup(usize),
    Cap(usize),
}

/// Which deterministic layout to use; the two must evaluate equally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Primary,
    Alternate,
}

/// Factorizes a Brauer diagram into elementary layers: first consume
/// the top arcs with cups, then create the bottom arcs with caps, then
/// sort the wires into bottom order with crossings.
pub fn factorize(d: &BrauerDiagram, strategy: Strategy) -> Vec<Layer> {
    let (r, s) = d.hom();
    let mut layers = Vec::new();
    // wires carry the point they will eventually reach
    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    enum Wire {
        Top(usize),
        Bottom(usize),
    }
    let mut wires: Vec<Wire> = (0..r).map(Wire::Top).collect();
    let mut top_arcs = Vec::new();
    let mut bottom_arcs = Vec::new();
    for &(a, b) in d.pairs() {
        if b < r {
            top_arcs.push((a, b));
        } else if a >= r {
            bottom_arcs.push((a - r, b - r));
        } else {
            // through strand: wire a targets bottom point b - r
            wires[a] = Wire::Bottom(b - r);
        }
    }
    if strategy == Strategy::Alternate {
        top_arcs.reverse();
        bottom_arcs.reverse();
    }
    for (a, b) in top_arcs {
        let pa = wires.iter().position(|&w| w == Wire::Top(a)).unwrap();
        let pb = wires.iter().position(|&w| w == Wire::Top(b)).unwrap();
        let (mut pa, mut pb) = (pa.min(pb), pa.max(pb));
        match strategy {
            Strategy::Primary => {
                // move the right wire leftwards until adjacent
                while pb > pa + 1 {
                    layers.push(Layer::Cross(pb - 1));
                    wires.swap(pb - 1, pb);
                    pb -= 1;
                }
            }
            Strategy::Alternate => {
                // move the left wire rightwards until adjacent
                while pa + 1 < pb {
                    layers.push(Layer::Cross(pa));
                    wires.swap(pa, pa + 1);
                    pa += 1;
                }
            }
        }
        layers.push(Layer::Cup(pa));
        wires.remove(pa + 1);
        wires.remove(pa);
    }
    for (a, b) in bottom_arcs {
        match strategy {
            Strategy::Primary => {
                let p = wires.len();
                layers.push(Layer::Cap(p));
                wires.push(Wire::Bottom(a));
                wires.push(Wire::Bottom(b));
            }
            Strategy::Alternate => {
                layers.push(Layer::Cap(0));
                wires.insert(0, Wire::Bottom(b));
                wires.insert(0, Wire::Bottom(a));
            }
        }
    }
    // bubble sort into bottom order
    let target = |w: &Wire| match w {
        Wire::Bottom(t) => *t,
        Wire::Top(_) => unreachable!("top wire left after cups"),
    };
    let m = wires.len();
    debug_assert_eq!(m, s);
    loop {
        let mut swapped = false;
        for p in 0..m.saturating_sub(1) {
            if target(&wires[p]) > target(&wires[p + 1]) {
                layers.push(Layer::Cross(p));
                wires.swap(p, p + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    layers
}
