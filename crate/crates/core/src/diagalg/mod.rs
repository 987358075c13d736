//! Linear algebra of diagram categories at a rational loop parameter:
//! rational combinations of diagrams in a fixed hom set, with the
//! twisted multiplication `x · y = delta^(loops) (x ∘ y)`.

pub mod brauer;
pub mod partition;
mod perm;

pub use perm::Perm;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::diagrams::{BrauerDiagram, DiagramLike};
use crate::error::{domain, Result};

/// A finite rational combination of diagrams in `Hom(r, s)`, carrying
/// the ambient loop parameter.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagElement<D: DiagramLike> {
    r: usize,
    s: usize,
    delta: BigRational,
    terms: BTreeMap<D, BigRational>,
}

impl<D: DiagramLike> DiagElement<D> {
    pub fn zero(r: usize, s: usize, delta: &BigRational) -> Self {
        DiagElement {
            r,
            s,
            delta: delta.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: D, delta: &BigRational) -> Self {
        let (r, s) = d.hom();
        let mut terms = BTreeMap::new();
        terms.insert(d, BigRational::one());
        DiagElement {
            r,
            s,
            delta: delta.clone(),
            terms,
        }
    }

    pub fn identity(r: usize, delta: &BigRational) -> Self {
        DiagElement::from_diagram(D::identity(r), delta)
    }

    pub fn hom(&self) -> (usize, usize) {
        (self.r, self.s)
    }

    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    pub fn terms(&self) -> &BTreeMap<D, BigRational> {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &D> {
        self.terms.keys()
    }

    pub fn coeff(&self, d: &D) -> BigRational {
        self.terms.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            let entry = out.terms.entry(d.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
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

    fn compatible(&self, other: &Self) -> Result<()> {
        if (self.r, self.s) != (other.r, other.s) {
            return Err(domain(format!(
                "hom type mismatch: ({},{}) vs ({},{})",
                self.r, self.s, other.r, other.s
            )));
        }
        if self.delta != other.delta {
            return Err(domain(format!(
                "loop parameter mismatch: {} vs {}",
                self.delta, other.delta
            )));
        }
        Ok(())
    }

    /// Multiplication: bilinear extension of
    /// `x · y = delta^c(x,y) (x ∘ y)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.s != other.r {
            return Err(domain(format!(
                "cannot chain ({},{}) with ({},{})",
                self.r, self.s, other.r, other.s
            )));
        }
        if self.delta != other.delta {
            return Err(domain(format!(
                "loop parameter mismatch: {} vs {}",
                self.delta, other.delta
            )));
        }
        let mut out = DiagElement::zero(self.r, other.s, &self.delta);
        for (dx, cx) in &self.terms {
            for (dy, cy) in &other.terms {
                let (composed, loops) = dx.compose(dy)?;
                let mut weight = cx * cy;
                for _ in 0..loops {
                    weight *= &self.delta;
                }
                let entry = out
                    .terms
                    .entry(composed)
                    .or_insert_with(BigRational::zero);
                *entry += weight;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.delta != other.delta {
            return Err(domain("loop parameter mismatch in tensor"));
        }
        let mut out = DiagElement::zero(self.r + other.r, self.s + other.s, &self.delta);
        for (dx, cx) in &self.terms {
            for (dy, cy) in &other.terms {
                let entry = out
                    .terms
                    .entry(dx.tensor(dy))
                    .or_insert_with(BigRational::zero);
                *entry += cx * cy;
            }
        }
        Ok(out)
    }

    /// Tensors with the identity on `k` extra strands on the right.
    pub fn tensor_id(&self, k: usize) -> Self {
        let id = D::identity(k);
        let mut out = DiagElement::zero(self.r + k, self.s + k, &self.delta);
        for (d, c) in &self.terms {
            out.terms.insert(d.tensor(&id), c.clone());
        }
        out
    }

    pub fn star(&self) -> Self {
        let mut out = DiagElement::zero(self.s, self.r, &self.delta);
        for (d, c) in &self.terms {
            out.terms.insert(d.star(), c.clone());
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&BigRational) -> BigRational) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = f(v);
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn to_json(&self, diagram_json: impl Fn(&D) -> serde_json::Value) -> serde_json::Value {
        serde_json::json!({
            "kind": D::KIND,
            "r": self.r,
            "s": self.s,
            "delta": self.delta.to_string(),
            "terms": self.terms.iter().map(|(d, c)| {
                serde_json::json!({"diagram": diagram_json(d), "coeff": c.to_string()})
            }).collect::<Vec<_>>(),
        })
    }
}

impl DiagElement<BrauerDiagram> {
    /// Diagrammatic trace of a square element: close with nested arcs,
    /// `tr(a) = eta . (a ⊗ id_m) . eta*`, returning the scalar.
    pub fn trace(&self) -> Result<BigRational> {
        if self.r != self.s {
            return Err(domain("trace requires a square hom type"));
        }
        let m = self.r;
        let eta = nested_arcs(2 * m, &self.delta);
        let closed = eta
            .multiply(&self.tensor_id(m))?
            .multiply(&eta.star())?;
        // an element of Hom(0, 0) is a scalar multiple of the empty diagram
        Ok(closed
            .terms
            .values()
            .next()
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }
}

/// The diagram of `m = 2k` nested arcs in `Hom(0, 2k)`.
pub fn nested_arcs(m: usize, delta: &BigRational) -> DiagElement<BrauerDiagram> {
    assert!(m % 2 == 0);
    let pairs = (0..m / 2).map(|i| (i, m - 1 - i)).collect();
    DiagElement::from_diagram(
        BrauerDiagram::new(0, m, pairs).expect("nested arcs"),
        delta,
    )
}

impl<D: DiagramLike> fmt::Debug for DiagElement<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", c, d)?;
        }
        Ok(())
    }
}
