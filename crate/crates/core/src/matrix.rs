//! Dense exact-rational matrices with fraction-free rank computation
//! and consistent-system solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_integer_vec(col: &[i64]) -> Self {
        ExactMatrix {
            rows: col.len(),
            cols: 1,
            data: col
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(domain("matrix shape mismatch in add"));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(domain("matrix shape mismatch in sub"));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(domain(format!(
                "matrix shape mismatch in mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, big-endian index convention: the left factor
    /// owns the most significant index digits.
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut out = ExactMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(domain("trace of a non-square matrix"));
        }
        let mut acc = BigRational::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        Ok(acc)
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Rank by integer fraction-free (Bareiss) elimination after
    /// clearing denominators row by row.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    let d = self.get(i, j).denom();
                    lcm = lcm.lcm(d);
                }
                (0..self.cols)
                    .map(|j| {
                        let v = self.get(i, j);
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect()
            })
            .collect();
        bareiss_rank(&mut m)
    }

    /// Solves `self * x = rhs` for a consistent system, returning one
    /// solution.  Errors when the system is inconsistent.
    pub fn solve(&self, rhs: &[BigRational]) -> Result<Vec<BigRational>> {
        if rhs.len() != self.rows {
            return Err(domain("right-hand side length mismatch"));
        }
        let cols = self.cols;
        let mut aug: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    (0..cols).map(|j| self.get(i, j).clone()).collect();
                row.push(rhs[i].clone());
                row
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..aug.len()).find(|&i| !aug[i][col].is_zero()) else {
                continue;
            };
            aug.swap(row, p);
            let inv = aug[row][col].clone().recip();
            for v in aug[row].iter_mut() {
                *v *= &inv;
            }
            for i in 0..aug.len() {
                if i != row && !aug[i][col].is_zero() {
                    let f = aug[i][col].clone();
                    for j in 0..=cols {
                        let upd = &aug[row][j] * &f;
                        aug[i][j] -= upd;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == aug.len() {
                break;
            }
        }
        for i in row..aug.len() {
            if !aug[i][cols].is_zero() {
                return Err(domain("inconsistent linear system"));
            }
        }
        let mut x = vec![BigRational::zero(); cols];
        for (i, &col) in pivot_cols.iter().enumerate() {
            x[col] = aug[i][cols].clone();
        }
        Ok(x)
    }

    /// JSON export, refused above the entry threshold.
    pub fn to_json(&self, max_entries: usize) -> Result<serde_json::Value> {
        if self.rows * self.cols > max_entries {
            return Err(crate::error::resource(format!(
                "matrix with {} entries exceeds the export threshold {max_entries}",
                self.rows * self.cols
            )));
        }
        Ok(serde_json::json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": (0..self.rows).map(|i| {
                (0..self.cols).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        }))
    }
}

fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for i in (row + 1)..rows {
            for j in (col + 1)..cols {
                let num = &m[row][col] * &m[i][j] - &m[i][col] * &m[row][j];
                m[i][j] = &num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        if self.rows * self.cols <= 64 {
            for i in 0..self.rows {
                let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}

/// Rank of the span of a family of vectors.
pub fn rank_of_vectors(vectors: &[Vec<BigRational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let cols = vectors[0].len();
    let m = ExactMatrix::from_fn(vectors.len(), cols, |i, j| vectors[i][j].clone());
    m.rank()
}
