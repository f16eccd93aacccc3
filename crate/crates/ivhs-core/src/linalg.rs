//! Exact linear algebra over the integers and rationals.
//!
//! The workhorse is a fraction-free row elimination with content reduction:
//! every update keeps entries integral and divides each row by the gcd of its
//! entries, which keeps coefficient growth in check on the sparse matrices
//! produced elsewhere in the crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: Vec<Vec<BigInt>>,
    pub ncols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        IntMatrix { rows, ncols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            rows: vec![vec![BigInt::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        IntMatrix {
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            ncols,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        IntMatrix::new(rows, self.nrows())
    }

    /// Rank over the rationals. Eliminates on the transpose when the matrix
    /// is taller than wide, which is cheaper and changes nothing.
    pub fn rank(&self) -> usize {
        if self.nrows() > self.ncols {
            let mut work = self.transpose().rows;
            return echelonize(&mut work, self.nrows()).len();
        }
        let mut work = self.rows.clone();
        echelonize(&mut work, self.ncols).len()
    }

    /// Primitive integer basis of the right kernel `{x : A x = 0}`.
    pub fn right_kernel(&self) -> Vec<Vec<BigInt>> {
        let mut work = self.rows.clone();
        let pivots = echelonize(&mut work, self.ncols);
        kernel_from_echelon(&work, &pivots, self.ncols)
    }
}

/// Divide a row by the gcd of its entries (no-op on the zero row).
pub fn reduce_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// In-place fraction-free row echelon form. Zero rows are dropped; returns the
/// pivot column of each surviving row (strictly increasing). Pivot rows are
/// chosen by smallest nonzero magnitude to slow entry growth.
pub fn echelonize(rows: &mut Vec<Vec<BigInt>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r >= rows.len() {
            break;
        }
        // smallest-magnitude nonzero pivot in this column
        let mut best: Option<usize> = None;
        for i in r..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            match best {
                None => best = Some(i),
                Some(b) => {
                    if rows[i][col].abs() < rows[b][col].abs() {
                        best = Some(i);
                    }
                }
            }
        }
        let Some(p) = best else { continue };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let prow = &head[r];
        let pval = prow[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..ncols {
                row[c] = &row[c] * &pval - &f * &prow[c];
            }
            reduce_row(row);
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    // drop rows that became zero in spite of having been counted (cannot
    // happen for pivot rows, but keep the invariant explicit)
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Kernel basis by back substitution from an echelon form.
fn kernel_from_echelon(rows: &[Vec<BigInt>], pivots: &[usize], ncols: usize) -> Vec<Vec<BigInt>> {
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![BigRational::zero(); ncols];
        x[f] = BigRational::one();
        for (ri, &pc) in pivots.iter().enumerate().rev() {
            let mut s = BigRational::zero();
            for c in (pc + 1)..ncols {
                if !rows[ri][c].is_zero() && !x[c].is_zero() {
                    s += BigRational::from(rows[ri][c].clone()) * &x[c];
                }
            }
            x[pc] = -s / BigRational::from(rows[ri][pc].clone());
        }
        basis.push(clear_denominators(&x));
    }
    basis
}

/// Scale a rational vector to a primitive integer vector.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let mut w: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    reduce_row(&mut w);
    w
}

/// Solve `A x = b` exactly for square integer `A`; `None` when `A` is singular.
pub fn solve_square(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.nrows();
    if n != a.ncols || b.len() != n {
        return None;
    }
    let mut m: Vec<Vec<BigRational>> = a
        .rows
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            row.iter()
                .chain(std::iter::once(bi))
                .map(|x| BigRational::from(x.clone()))
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let pv = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &pv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..=n {
                    let delta = &f * &m[col][c];
                    m[i][c] = &m[i][c] - delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    pub coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn degree(&self) -> usize {
        let mut d = 0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                d = i;
            }
        }
        d
    }

    pub fn eval(&self, t: &BigInt) -> BigRational {
        let mut acc = BigRational::zero();
        let tq = BigRational::from(t.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc * &tq + c;
        }
        acc
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

/// Newton divided-difference interpolation through `(nodes[i], values[i])`.
pub fn interpolate_polynomial(nodes: &[BigInt], values: &[BigRational]) -> Result<RationalPolynomial> {
    if nodes.len() != values.len() || nodes.is_empty() {
        return Err(Error::InvalidInput("interpolation needs matching nonempty node/value lists".into()));
    }
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::DuplicateNodes);
            }
        }
    }
    let n = nodes.len();
    // divided differences
    let mut dd: Vec<BigRational> = values.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let denom = BigRational::from(&nodes[i] - &nodes[i - k]);
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }
    // expand Newton form into monomial coefficients
    let mut coeffs = vec![BigRational::zero(); n];
    coeffs[0] = dd[0].clone();
    let mut basis = vec![BigRational::one()]; // product (t - x_0)...(t - x_{k-1})
    for k in 1..n {
        // basis *= (t - nodes[k-1])
        let shift = BigRational::from(nodes[k - 1].clone());
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * &shift;
        }
        basis = next;
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += &dd[k] * b;
        }
    }
    let mut p = RationalPolynomial { coeffs };
    p.trim();
    Ok(p)
}
