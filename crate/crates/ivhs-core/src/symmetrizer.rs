//! Symmetrizer spaces of a family of maps `α_1, ..., α_d : G⁰ → G¹`.
//!
//! A symmetrizer assigns to each `α_k` a map `q_k : G¹ → G²` such that
//! `q_i ∘ α_j = q_j ∘ α_i` for all pairs. The equations never mix the rows of
//! the `q_k` (each `G²`-coordinate satisfies the same system), so the space
//! is `G²`-many copies of the row system; the dimension computation uses
//! that reduction while membership checks work on the full matrices.

use num::bigint::BigInt;
use num::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Total unknowns above which `dimension` refuses and only membership
/// queries remain available.
pub const MAX_KERNEL_UNKNOWNS: usize = 200_000;

pub struct SymmetrizerProblem {
    pub g0: usize,
    pub g1: usize,
    pub g2: usize,
    /// the maps `α_k`, each a `g1 × g0` matrix
    pub alphas: Vec<IntMatrix>,
}

impl SymmetrizerProblem {
    pub fn new(g0: usize, g1: usize, g2: usize, alphas: Vec<IntMatrix>) -> Result<Self> {
        for a in &alphas {
            if a.nrows() != g1 || a.ncols != g0 {
                return Err(Error::InvalidInput(format!(
                    "expected {g1} x {g0} maps, got {} x {}",
                    a.nrows(),
                    a.ncols
                )));
            }
        }
        Ok(SymmetrizerProblem {
            g0,
            g1,
            g2,
            alphas,
        })
    }

    /// Random instance with entries in `-10..=10`.
    pub fn random<R: Rng>(g0: usize, g1: usize, g2: usize, d: usize, rng: &mut R) -> Self {
        let alphas = (0..d)
            .map(|_| {
                let rows = (0..g1)
                    .map(|_| {
                        (0..g0)
                            .map(|_| BigInt::from(rng.gen_range(-10i64..=10)))
                            .collect()
                    })
                    .collect();
                IntMatrix::new(rows, g0)
            })
            .collect();
        SymmetrizerProblem {
            g0,
            g1,
            g2,
            alphas,
        }
    }

    pub fn d(&self) -> usize {
        self.alphas.len()
    }

    pub fn unknowns(&self) -> usize {
        self.d() * self.g1 * self.g2
    }

    /// `3·(⌊(g1 - 1)/g0⌋ + 1)`: with at least this many generic maps the
    /// symmetrizer space collapses.
    pub fn threshold(&self) -> usize {
        3 * ((self.g1 - 1) / self.g0 + 1)
    }

    /// Row system shared by every `G²`-coordinate: unknowns are `d` row
    /// vectors `v_k` of length `g1`, equations `v_i α_j = v_j α_i`.
    fn row_system(&self) -> IntMatrix {
        let d = self.d();
        let ncols = d * self.g1;
        let mut rows = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                for c in 0..self.g0 {
                    let mut row = vec![BigInt::zero(); ncols];
                    for m in 0..self.g1 {
                        row[i * self.g1 + m] = self.alphas[j].rows[m][c].clone();
                        row[j * self.g1 + m] = -self.alphas[i].rows[m][c].clone();
                    }
                    rows.push(row);
                }
            }
        }
        IntMatrix::new(rows, ncols)
    }

    /// Dimension of the symmetrizer space.
    pub fn dimension(&self) -> Result<usize> {
        if self.unknowns() > MAX_KERNEL_UNKNOWNS {
            return Err(Error::TooLarge(format!(
                "{} unknowns; only membership checks are available",
                self.unknowns()
            )));
        }
        if self.d() < 2 {
            return Ok(self.unknowns());
        }
        let sys = self.row_system();
        let row_kernel = sys.ncols - sys.rank();
        Ok(self.g2 * row_kernel)
    }

    /// Dimension and an explicit basis. Each basis element assigns one
    /// `g2 × g1` matrix to every `α_k`; since the defining equations act on
    /// each `G²`-coordinate independently, the basis is built by placing each
    /// row-system kernel vector into each of the `g2` rows in turn.
    pub fn space(&self) -> Result<(usize, Vec<Vec<IntMatrix>>)> {
        if self.unknowns() > MAX_KERNEL_UNKNOWNS {
            return Err(Error::TooLarge(format!(
                "{} unknowns; only membership checks are available",
                self.unknowns()
            )));
        }
        let d = self.d();
        let row_kernel: Vec<Vec<BigInt>> = if d < 2 {
            (0..d * self.g1)
                .map(|i| {
                    let mut v = vec![BigInt::zero(); d * self.g1];
                    v[i] = BigInt::from(1);
                    v
                })
                .collect()
        } else {
            self.row_system().right_kernel()
        };
        let mut basis = Vec::with_capacity(self.g2 * row_kernel.len());
        for v in &row_kernel {
            for r in 0..self.g2 {
                let qs: Vec<IntMatrix> = (0..d)
                    .map(|k| {
                        let mut q = IntMatrix::zero(self.g2, self.g1);
                        q.rows[r][..self.g1]
                            .clone_from_slice(&v[k * self.g1..(k + 1) * self.g1]);
                        q
                    })
                    .collect();
                basis.push(qs);
            }
        }
        Ok((basis.len(), basis))
    }

    /// Exact membership: `qs[k]` is the `g2 × g1` matrix assigned to `α_k`.
    pub fn is_symmetrizer(&self, qs: &[IntMatrix]) -> Result<bool> {
        if qs.len() != self.d() {
            return Err(Error::InvalidInput("one q per alpha required".into()));
        }
        for q in qs {
            if q.nrows() != self.g2 || q.ncols != self.g1 {
                return Err(Error::InvalidInput(format!(
                    "expected {} x {} maps, got {} x {}",
                    self.g2,
                    self.g1,
                    q.nrows(),
                    q.ncols
                )));
            }
        }
        let prod = |q: &IntMatrix, a: &IntMatrix| -> Vec<Vec<BigInt>> {
            (0..self.g2)
                .map(|r| {
                    (0..self.g0)
                        .map(|c| (0..self.g1).map(|m| &q.rows[r][m] * &a.rows[m][c]).sum())
                        .collect()
                })
                .collect()
        };
        for i in 0..self.d() {
            for j in (i + 1)..self.d() {
                let left = prod(&qs[i], &self.alphas[j]);
                let right = prod(&qs[j], &self.alphas[i]);
                if left != right {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Outcome of repeated random trials at given sizes: how many trials had a
/// symmetrizer space of unexpected dimension.
#[derive(Debug, Clone)]
pub struct TrialReport {
    pub trials: usize,
    pub failures: usize,
    pub dims: Vec<usize>,
}

/// Run `trials` random instances and compare each dimension against
/// `expected`.
pub fn randomized_dimension_trials<R: Rng>(
    g0: usize,
    g1: usize,
    g2: usize,
    d: usize,
    trials: usize,
    expected: usize,
    rng: &mut R,
) -> Result<TrialReport> {
    let mut dims = Vec::with_capacity(trials);
    let mut failures = 0;
    for _ in 0..trials {
        let p = SymmetrizerProblem::random(g0, g1, g2, d, rng);
        let dim = p.dimension()?;
        if dim != expected {
            failures += 1;
        }
        dims.push(dim);
    }
    Ok(TrialReport {
        trials,
        failures,
        dims,
    })
}

/// Randomized check that generic families at or above the triviality
/// threshold have no nonzero symmetrizers: `failures` counts the trials
/// whose space was nonzero (expected 0). Deterministic in `seed`.
pub fn randomized_triviality_report(
    g0: usize,
    g1: usize,
    g2: usize,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<TrialReport> {
    if g0 <= 1 {
        return Err(Error::HypothesisViolation(
            "triviality requires dim of the source space > 1".into(),
        ));
    }
    let threshold = 3 * ((g1 - 1) / g0 + 1);
    if d < threshold {
        return Err(Error::HypothesisViolation(format!(
            "need at least {threshold} maps, got {d}"
        )));
    }
    if d > g0 * g1 {
        return Err(Error::HypothesisViolation(format!(
            "{d} maps cannot be independent in a {}-dimensional space",
            g0 * g1
        )));
    }
    let mut rng = crate::util::seeded_rng(seed);
    randomized_dimension_trials(g0, g1, g2, d, trials, 0, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::seeded_rng;

    #[test]
    fn single_map_gives_full_space() {
        let mut rng = seeded_rng(1);
        let p = SymmetrizerProblem::random(2, 5, 3, 1, &mut rng);
        assert_eq!(p.dimension().unwrap(), 15);
    }

    #[test]
    fn thresholds() {
        let mut rng = seeded_rng(2);
        let p = SymmetrizerProblem::random(2, 5, 3, 9, &mut rng);
        assert_eq!(p.threshold(), 9);
        let p = SymmetrizerProblem::random(3, 7, 4, 9, &mut rng);
        assert_eq!(p.threshold(), 9);
    }

    #[test]
    fn generic_instances_have_trivial_space() {
        let mut rng = seeded_rng(3);
        let r = randomized_dimension_trials(2, 5, 3, 9, 5, 0, &mut rng).unwrap();
        assert_eq!(r.failures, 0, "dims: {:?}", r.dims);
    }

    #[test]
    fn triviality_report_checks_hypotheses() {
        let r = randomized_triviality_report(2, 5, 3, 9, 5, 11).unwrap();
        assert_eq!(r.failures, 0, "dims: {:?}", r.dims);
        let r = randomized_triviality_report(3, 7, 4, 9, 5, 12).unwrap();
        assert_eq!(r.failures, 0, "dims: {:?}", r.dims);
        assert!(matches!(
            randomized_triviality_report(1, 5, 3, 15, 5, 13),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            randomized_triviality_report(2, 5, 3, 8, 5, 14),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            randomized_triviality_report(2, 5, 3, 11, 5, 15),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn basis_elements_are_symmetrizers_and_span() {
        let mut rng = seeded_rng(21);
        // below the threshold so the space is typically nonzero
        let p = SymmetrizerProblem::random(2, 6, 2, 3, &mut rng);
        let (dim, basis) = p.space().unwrap();
        assert_eq!(dim, p.dimension().unwrap());
        assert_eq!(basis.len(), dim);
        for qs in &basis {
            assert!(p.is_symmetrizer(qs).unwrap());
        }
        // an integer combination of basis elements stays in the space
        if basis.len() >= 2 {
            let combo: Vec<IntMatrix> = (0..p.d())
                .map(|k| {
                    let mut m = IntMatrix::zero(p.g2, p.g1);
                    for r in 0..p.g2 {
                        for c in 0..p.g1 {
                            m.rows[r][c] = &basis[0][k].rows[r][c] * 3
                                - &basis[1][k].rows[r][c] * 5;
                        }
                    }
                    m
                })
                .collect();
            assert!(p.is_symmetrizer(&combo).unwrap());
        }
    }

    #[test]
    fn zero_q_is_always_a_symmetrizer() {
        let mut rng = seeded_rng(4);
        let p = SymmetrizerProblem::random(2, 4, 3, 4, &mut rng);
        let zeros: Vec<IntMatrix> = (0..4).map(|_| IntMatrix::zero(3, 4)).collect();
        assert!(p.is_symmetrizer(&zeros).unwrap());
    }

    #[test]
    fn non_symmetrizer_is_rejected() {
        let mut rng = seeded_rng(5);
        let p = SymmetrizerProblem::random(2, 4, 3, 3, &mut rng);
        if p.dimension().unwrap() == 0 {
            let mut qs: Vec<IntMatrix> = (0..3).map(|_| IntMatrix::zero(3, 4)).collect();
            qs[0].rows[0][0] = BigInt::from(1);
            assert!(!p.is_symmetrizer(&qs).unwrap());
        }
    }

    #[test]
    fn oversized_dimension_query_is_refused() {
        let mut rng = seeded_rng(6);
        // 101 · 101 · 101 unknowns exceeds the kernel guard
        let p = SymmetrizerProblem::random(1, 101, 101, 101, &mut rng);
        assert!(matches!(p.dimension(), Err(Error::TooLarge(_))));
    }
}
