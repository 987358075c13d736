//! Exact matrix checks of the defining relations of each evaluation
//! functor: duality zig-zags, symmetry, sliding conditions and the loop
//! scalar.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::diagrams::{BrauerDiagram, DirectedDiagram, PartitionDiagram};
use crate::error::Result;
use crate::matrix::ExactMatrix;

use super::{Evaluator, GroupKind};

#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, pass: bool, details: impl Into<String>) {
        self.lines.push(CheckLine {
            name: name.into(),
            pass,
            details: details.into(),
        });
    }

    pub fn push_eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        name: impl Into<String>,
        got: &T,
        expected: &T,
    ) {
        let pass = got == expected;
        let details = if pass {
            String::new()
        } else {
            format!("expected {expected:?}, got {got:?}")
        };
        self.push(name, pass, details);
    }

    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.lines
                .iter()
                .map(|l| {
                    serde_json::json!({
                        "check": l.name,
                        "pass": l.pass,
                        "details": l.details,
                    })
                })
                .collect(),
        )
    }
}

/// Runs the defining-relation suite of the evaluator.
pub fn relation_test_suite(e: &Evaluator) -> Result<Report> {
    match e.kind() {
        GroupKind::Symplectic => symplectic_relations(e),
        GroupKind::SymmetricGroup => symmetric_group_relations(e),
        GroupKind::GeneralLinear => general_linear_relations(e),
    }
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn symplectic_relations(e: &Evaluator) -> Result<Report> {
    let mut report = Report::default();
    let dim = e.dim();
    let cup = e.ev_brauer(&BrauerDiagram::new(2, 0, vec![(0, 1)])?)?;
    let cap = e.ev_brauer(&BrauerDiagram::new(0, 2, vec![(0, 1)])?)?;
    let cross = e.ev_brauer(&BrauerDiagram::new(2, 2, vec![(0, 3), (1, 2)])?)?;
    let id1 = ExactMatrix::identity(dim);
    let id2 = ExactMatrix::identity(dim * dim);

    // zig-zags: (cup ⊗ 1)(1 ⊗ cap) = 1 = (1 ⊗ cup)(cap ⊗ 1)
    let zig1 = cup.kronecker(&id1).matmul(&id1.kronecker(&cap))?;
    report.push_eq("sp zig-zag left", &zig1, &id1);
    let zig2 = id1.kronecker(&cup).matmul(&cap.kronecker(&id1))?;
    report.push_eq("sp zig-zag right", &zig2, &id1);

    // symmetry squared
    report.push_eq("sp symmetry squared", &cross.matmul(&cross)?, &id2);

    // crossing absorbed by cup and cap
    report.push_eq("sp cup after crossing", &cup.matmul(&cross)?, &cup);
    report.push_eq("sp crossing after cap", &cross.matmul(&cap)?, &cap);

    // sliding conditions on three wires
    let lhs = cup.kronecker(&id1).matmul(&id1.kronecker(&cross))?;
    let rhs = id1.kronecker(&cup).matmul(&cross.kronecker(&id1))?;
    report.push_eq("sp cup slide", &lhs, &rhs);
    let lhs = id1.kronecker(&cross).matmul(&cap.kronecker(&id1))?;
    let rhs = cross.kronecker(&id1).matmul(&id1.kronecker(&cap))?;
    report.push_eq("sp cap slide", &lhs, &rhs);

    // braid relation
    let a = cross.kronecker(&id1);
    let b = id1.kronecker(&cross);
    report.push_eq(
        "sp braid",
        &a.matmul(&b)?.matmul(&a)?,
        &b.matmul(&a)?.matmul(&b)?,
    );

    // closed loop scalar
    let loop_scalar = cup.matmul(&cap)?;
    report.push_eq("sp loop scalar", loop_scalar.get(0, 0), e.delta());

    // factorized evaluation agrees with generator products on u_1
    let u = e.ev_brauer(&crate::diagalg::brauer::u_diagram(2, 1)?)?;
    report.push_eq("sp u factorization", &u, &cap.matmul(&cup)?);

    Ok(report)
}

fn symmetric_group_relations(e: &Evaluator) -> Result<Report> {
    let mut report = Report::default();
    let dim = e.dim();
    let id1 = ExactMatrix::identity(dim);
    let id2 = ExactMatrix::identity(dim * dim);
    // the five generators
    let counit = e.ev_partition(&PartitionDiagram::new(1, 0, vec![vec![0]])?)?;
    let split = e.ev_partition(&PartitionDiagram::new(1, 2, vec![vec![0, 1, 2]])?)?;
    let merge = e.ev_partition(&PartitionDiagram::new(2, 1, vec![vec![0, 1, 2]])?)?;
    let unit = e.ev_partition(&PartitionDiagram::new(0, 1, vec![vec![0]])?)?;
    let swap = e.ev_partition(&PartitionDiagram::new(
        2,
        2,
        vec![vec![0, 3], vec![1, 2]],
    )?)?;

    report.push_eq("sn clone then merge", &merge.matmul(&split)?, &id1);
    report.push_eq(
        "sn coassociativity",
        &split.kronecker(&id1).matmul(&split)?,
        &id1.kronecker(&split).matmul(&split)?,
    );
    report.push_eq(
        "sn associativity",
        &merge.matmul(&merge.kronecker(&id1))?,
        &merge.matmul(&id1.kronecker(&merge))?,
    );
    report.push_eq("sn commutativity", &merge.matmul(&swap)?, &merge);
    report.push_eq("sn cocommutativity", &swap.matmul(&split)?, &split);
    report.push_eq(
        "sn unit law",
        &merge.matmul(&unit.kronecker(&id1))?,
        &id1,
    );
    report.push_eq(
        "sn counit law",
        &counit.kronecker(&id1).matmul(&split)?,
        &id1,
    );
    // Frobenius condition
    let frob_mid = split.matmul(&merge)?;
    report.push_eq(
        "sn frobenius left",
        &id1.kronecker(&merge).matmul(&split.kronecker(&id1))?,
        &frob_mid,
    );
    report.push_eq(
        "sn frobenius right",
        &merge.kronecker(&id1).matmul(&id1.kronecker(&split))?,
        &frob_mid,
    );
    report.push_eq("sn symmetry squared", &swap.matmul(&swap)?, &id2);
    // duality through cup = counit∘merge and cap = split∘unit
    let cup = counit.matmul(&merge)?;
    let cap = split.matmul(&unit)?;
    let zig = cup.kronecker(&id1).matmul(&id1.kronecker(&cap))?;
    report.push_eq("sn zig-zag", &zig, &id1);
    let loop_scalar = cup.matmul(&cap)?;
    report.push_eq("sn loop scalar", loop_scalar.get(0, 0), e.delta());
    Ok(report)
}

fn general_linear_relations(e: &Evaluator) -> Result<Report> {
    let mut report = Report::default();
    let dim = e.dim();
    let id1 = ExactMatrix::identity(dim);
    let id2 = ExactMatrix::identity(dim * dim);
    // oriented cups and caps: both orientations share the matrix
    let cup_vv = e.ev_directed(&DirectedDiagram::new(2, 0, vec![(0, 1)])?)?;
    let cup_rev = e.ev_directed(&DirectedDiagram::new(2, 0, vec![(1, 0)])?)?;
    let cap_vv = e.ev_directed(&DirectedDiagram::new(0, 2, vec![(0, 1)])?)?;
    let cap_rev = e.ev_directed(&DirectedDiagram::new(0, 2, vec![(1, 0)])?)?;
    let cross = e.ev_directed(&DirectedDiagram::new(2, 2, vec![(0, 3), (1, 2)])?)?;

    report.push_eq("gl oriented cups agree", &cup_vv, &cup_rev);
    report.push_eq("gl oriented caps agree", &cap_vv, &cap_rev);
    let zig1 = cup_vv.kronecker(&id1).matmul(&id1.kronecker(&cap_vv))?;
    report.push_eq("gl zig-zag left", &zig1, &id1);
    let zig2 = id1.kronecker(&cup_vv).matmul(&cap_vv.kronecker(&id1))?;
    report.push_eq("gl zig-zag right", &zig2, &id1);
    report.push_eq("gl symmetry squared", &cross.matmul(&cross)?, &id2);
    let a = cross.kronecker(&id1);
    let b = id1.kronecker(&cross);
    report.push_eq(
        "gl braid",
        &a.matmul(&b)?.matmul(&a)?,
        &b.matmul(&a)?.matmul(&b)?,
    );
    let loop_scalar = cup_vv.matmul(&cap_vv)?;
    report.push_eq("gl loop scalar", loop_scalar.get(0, 0), &rational(e.rank() as i64));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_suites_pass() {
        for n in 1..=2 {
            let report = relation_test_suite(&Evaluator::symplectic(n)).unwrap();
            assert!(report.all_pass(), "Sp(2*{n}): {:?}", report.lines);
        }
        for n in 1..=3 {
            let report = relation_test_suite(&Evaluator::symmetric_group(n)).unwrap();
            assert!(report.all_pass(), "S_{n}: {:?}", report.lines);
            let report = relation_test_suite(&Evaluator::general_linear(n)).unwrap();
            assert!(report.all_pass(), "GL({n}): {:?}", report.lines);
        }
    }
}
