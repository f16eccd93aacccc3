//! Complete simplicial fans, the divisor class group, and divisor tests.
//!
//! The class group `A_{n-1} = Z^r / im(M → Z^r)` is presented by the Smith
//! normal form of the ray matrix; a divisor class is recorded as its free and
//! torsion coordinates in that presentation, plus a representative
//! coefficient vector used to enumerate monomials of the corresponding
//! graded piece of the homogeneous coordinate ring.

use std::collections::HashMap;
use std::sync::Arc;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{Inequality, LatticePolytope};
use crate::linalg::{solve_square, IntMatrix};
use crate::snf::smith_with_left;

/// Complete simplicial fan in `Z^dim`, given by primitive ray generators and
/// maximal cones as index sets into `rays`.
#[derive(Debug, Clone)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        let fan = Fan {
            dim,
            rays,
            max_cones,
        };
        fan.validate()?;
        Ok(fan)
    }

    /// Fan of projective space `P^n`: rays `e_1..e_n` and `-(e_1+..+e_n)`,
    /// maximal cones all `n`-subsets.
    pub fn projective_space(n: usize) -> Fan {
        let mut rays = Vec::with_capacity(n + 1);
        rays.push(vec![-1i64; n]);
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            rays.push(e);
        }
        Fan {
            dim: n,
            rays,
            max_cones: subsets_omitting_one(n + 1),
        }
    }

    /// Fan of the weighted projective space `P(q_0, ..., q_n)` with `q_0 = 1`:
    /// rays `e_1..e_n` and `-(q_1 e_1 + ... + q_n e_n)`.
    pub fn weighted_projective_space(weights: &[i64]) -> Result<Fan> {
        if weights.len() < 2 || weights.iter().any(|&q| q <= 0) {
            return Err(Error::InvalidInput(
                "weights must be at least two positive integers".into(),
            ));
        }
        if weights[0] != 1 {
            return Err(Error::InvalidInput(
                "the first weight must be 1 so the ray generators stay primitive".into(),
            ));
        }
        let n = weights.len() - 1;
        let mut rays = Vec::with_capacity(n + 1);
        rays.push(weights[1..].iter().map(|&q| -q).collect());
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            rays.push(e);
        }
        Fan::new(n, rays, subsets_omitting_one(n + 1))
    }

    pub fn n_rays(&self) -> usize {
        self.rays.len()
    }

    fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64(&self.rays)
    }

    fn cone_matrix(&self, cone: &[usize]) -> IntMatrix {
        // columns are the cone's rays
        let rows: Vec<Vec<BigInt>> = (0..self.dim)
            .map(|i| cone.iter().map(|&j| BigInt::from(self.rays[j][i])).collect())
            .collect();
        IntMatrix::new(rows, cone.len())
    }

    /// Structural checks: primitive distinct rays spanning `Q^dim`,
    /// simplicial full-dimensional maximal cones, every wall shared by
    /// exactly two maximal cones, and a randomized covering check that each
    /// sample direction lies in some cone.
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidInput("fan dimension must be positive".into()));
        }
        for (i, ray) in self.rays.iter().enumerate() {
            if ray.len() != self.dim {
                return Err(Error::InvalidInput(format!("ray {i} has wrong length")));
            }
            let g = ray.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            if g == 0 {
                return Err(Error::InvalidInput(format!("ray {i} is zero")));
            }
            if g != 1 {
                return Err(Error::InvalidInput(format!("ray {i} is not primitive")));
            }
            for other in &self.rays[..i] {
                if other == ray {
                    return Err(Error::InvalidInput(format!("ray {i} is a duplicate")));
                }
            }
        }
        if self.ray_matrix().rank() != self.dim {
            return Err(Error::NotComplete("rays do not span the ambient space".into()));
        }
        if self.max_cones.is_empty() {
            return Err(Error::NotComplete("no maximal cones".into()));
        }
        let mut walls: HashMap<Vec<usize>, usize> = HashMap::new();
        for (ci, cone) in self.max_cones.iter().enumerate() {
            if cone.len() != self.dim {
                return Err(Error::InvalidInput(format!(
                    "maximal cone {ci} is not full-dimensional"
                )));
            }
            for &j in cone {
                if j >= self.rays.len() {
                    return Err(Error::InvalidInput(format!(
                        "cone {ci} references unknown ray {j}"
                    )));
                }
            }
            if self.cone_matrix(cone).rank() != self.dim {
                return Err(Error::InvalidInput(format!(
                    "maximal cone {ci} is not simplicial"
                )));
            }
            for omit in 0..cone.len() {
                let mut wall: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != omit)
                    .map(|(_, &j)| j)
                    .collect();
                wall.sort_unstable();
                *walls.entry(wall).or_insert(0) += 1;
            }
        }
        for (wall, count) in &walls {
            if *count != 2 {
                return Err(Error::NotComplete(format!(
                    "wall {wall:?} lies in {count} maximal cones, expected 2"
                )));
            }
        }
        // probabilistic cover check with exact membership tests
        let mut rng = crate::util::seeded_rng(0xfa4);
        for _ in 0..24 {
            let u: Vec<BigInt> = (0..self.dim)
                .map(|_| BigInt::from(rng.gen_range(-50i64..=50)))
                .collect();
            if u.iter().all(Zero::is_zero) {
                continue;
            }
            if !self.max_cones.iter().any(|c| self.cone_contains(c, &u)) {
                return Err(Error::NotComplete(format!(
                    "direction {u:?} is not covered by any maximal cone"
                )));
            }
        }
        Ok(())
    }

    /// Exact membership of a vector in a simplicial cone.
    fn cone_contains(&self, cone: &[usize], u: &[BigInt]) -> bool {
        match solve_square(&self.cone_matrix(cone), u) {
            Some(x) => x.iter().all(|c| !c.is_negative()),
            None => false,
        }
    }
}

/// Maximal cones of a fan whose rays are in "projective position": all
/// subsets omitting exactly one of `r` rays.
fn subsets_omitting_one(r: usize) -> Vec<Vec<usize>> {
    (0..r)
        .map(|omit| (0..r).filter(|&j| j != omit).collect())
        .collect()
}

/// Divisor class: coordinates in the Smith presentation of the class group.
/// `rep` is a representative divisor coefficient vector (not part of
/// equality) used to enumerate monomials of the graded piece.
#[derive(Debug, Clone)]
pub struct DegreeClass {
    pub free: Vec<BigInt>,
    /// `(value mod modulus, modulus)` for each invariant factor `> 1`
    pub torsion: Vec<(BigInt, BigInt)>,
    pub rep: Vec<BigInt>,
}

impl PartialEq for DegreeClass {
    fn eq(&self, other: &Self) -> bool {
        self.free == other.free && self.torsion == other.torsion
    }
}
impl Eq for DegreeClass {}

impl std::hash::Hash for DegreeClass {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.free.hash(state);
        self.torsion.hash(state);
    }
}

impl DegreeClass {
    pub fn add(&self, other: &DegreeClass) -> DegreeClass {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &DegreeClass) -> DegreeClass {
        self.combine(other, true)
    }

    fn combine(&self, other: &DegreeClass, negate: bool) -> DegreeClass {
        let sign = BigInt::from(if negate { -1 } else { 1 });
        let sign = &sign;
        let free = self
            .free
            .iter()
            .zip(&other.free)
            .map(|(a, b)| a + b * sign)
            .collect();
        let torsion = self
            .torsion
            .iter()
            .zip(&other.torsion)
            .map(|((a, m), (b, _))| ((a + b * sign).mod_floor(m), m.clone()))
            .collect();
        let rep = self
            .rep
            .iter()
            .zip(&other.rep)
            .map(|(a, b)| a + b * sign)
            .collect();
        DegreeClass {
            free,
            torsion,
            rep,
        }
    }

    pub fn scale(&self, t: &BigInt) -> DegreeClass {
        DegreeClass {
            free: self.free.iter().map(|a| a * t).collect(),
            torsion: self
                .torsion
                .iter()
                .map(|(a, m)| ((a * t).mod_floor(m), m.clone()))
                .collect(),
            rep: self.rep.iter().map(|a| a * t).collect(),
        }
    }
}

/// Smith presentation of the class group of a fan, with the row transform
/// needed to read off the class of any divisor.
#[derive(Debug, Clone)]
pub struct ChowPresentation {
    pub fan: Arc<Fan>,
    /// rows of the unimodular left transform, one per ray
    left: IntMatrix,
    /// rows of `left` giving free coordinates
    free_rows: Vec<usize>,
    /// rows of `left` giving torsion coordinates, with their moduli
    torsion_rows: Vec<(usize, BigInt)>,
}

impl ChowPresentation {
    pub fn new(fan: Arc<Fan>) -> Self {
        let ray_matrix = IntMatrix::from_i64(&fan.rays);
        let s = smith_with_left(&ray_matrix);
        let r = fan.n_rays();
        let mut left = s.left;
        let rank = s.diag.len();
        let mut torsion_rows = Vec::new();
        for (i, d) in s.diag.iter().enumerate() {
            if d > &BigInt::one() {
                torsion_rows.push((i, d.clone()));
            }
        }
        let free_rows: Vec<usize> = (rank..r).collect();
        // fix signs of the free rows so that, in the familiar cases, ample
        // divisors get positive degree
        for &i in &free_rows {
            if let Some(first) = left.rows[i].iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    for x in left.rows[i].iter_mut() {
                        *x = -x.clone();
                    }
                }
            }
        }
        ChowPresentation {
            fan,
            left,
            free_rows,
            torsion_rows,
        }
    }

    /// Rank of the free part of the class group.
    pub fn picard_rank(&self) -> usize {
        self.free_rows.len()
    }

    pub fn torsion_moduli(&self) -> Vec<BigInt> {
        self.torsion_rows.iter().map(|(_, m)| m.clone()).collect()
    }

    /// Class of the divisor `Σ coeffs[j] · D_j`.
    pub fn class_of(&self, coeffs: &[BigInt]) -> Result<DegreeClass> {
        let r = self.fan.n_rays();
        if coeffs.len() != r {
            return Err(Error::InvalidInput(format!(
                "divisor has {} coefficients, fan has {r} rays",
                coeffs.len()
            )));
        }
        let dot = |row: &[BigInt]| -> BigInt { row.iter().zip(coeffs).map(|(a, b)| a * b).sum() };
        let free = self.free_rows.iter().map(|&i| dot(&self.left.rows[i])).collect();
        let torsion = self
            .torsion_rows
            .iter()
            .map(|(i, m)| (dot(&self.left.rows[*i]).mod_floor(m), m.clone()))
            .collect();
        Ok(DegreeClass {
            free,
            torsion,
            rep: coeffs.to_vec(),
        })
    }

    /// Class of the coordinate variable `z_j`, i.e. of the divisor `D_j`.
    pub fn variable_class(&self, j: usize) -> Result<DegreeClass> {
        let mut coeffs = vec![BigInt::zero(); self.fan.n_rays()];
        coeffs[j] = BigInt::one();
        self.class_of(&coeffs)
    }

    /// Anticanonical class `Σ_j [D_j]`.
    pub fn anticanonical_class(&self) -> Result<DegreeClass> {
        self.class_of(&vec![BigInt::one(); self.fan.n_rays()])
    }
}

/// Torus-invariant divisor `Σ coeffs[j] · D_j`.
#[derive(Debug, Clone)]
pub struct TorusDivisor {
    pub coeffs: Vec<BigInt>,
}

impl TorusDivisor {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        TorusDivisor {
            coeffs: coeffs.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Polytope `{ m : ⟨m, v_j⟩ + a_j ≥ 0 for all rays }` of global sections.
    pub fn polytope(&self, fan: &Fan) -> Result<LatticePolytope> {
        if self.coeffs.len() != fan.n_rays() {
            return Err(Error::InvalidInput("divisor length mismatch".into()));
        }
        let ineqs = fan
            .rays
            .iter()
            .zip(&self.coeffs)
            .map(|(ray, a)| Inequality {
                normal: ray.iter().map(|&x| BigInt::from(x)).collect(),
                offset: a.clone(),
            })
            .collect();
        LatticePolytope::new(fan.dim, ineqs)
    }

    /// Local trivializing characters `u_σ`, one per maximal cone, as rational
    /// vectors with `⟨u_σ, v_j⟩ = -a_j` on the cone's rays.
    fn support_data(&self, fan: &Fan) -> Result<Vec<Vec<num::rational::BigRational>>> {
        let mut out = Vec::with_capacity(fan.max_cones.len());
        for cone in &fan.max_cones {
            // rows ⟨u, v_j⟩, unknown u
            let rows: Vec<Vec<BigInt>> = cone
                .iter()
                .map(|&j| fan.rays[j].iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let rhs: Vec<BigInt> = cone.iter().map(|&j| -self.coeffs[j].clone()).collect();
            let u = solve_square(&IntMatrix::new(rows, fan.dim), &rhs)
                .ok_or_else(|| Error::Internal("degenerate maximal cone".into()))?;
            out.push(u);
        }
        Ok(out)
    }

    /// Cartier: each local character is integral.
    pub fn is_cartier(&self, fan: &Fan) -> Result<bool> {
        Ok(self
            .support_data(fan)?
            .iter()
            .all(|u| u.iter().all(num::rational::BigRational::is_integer)))
    }

    /// Ample (Cartier divisors only): the support function is strictly
    /// convex, i.e. `⟨u_σ, v_k⟩ > -a_k` for every maximal cone `σ` and ray
    /// `k ∉ σ`; equivalently the divisor polytope is full-dimensional with
    /// normal fan equal to the fan.
    pub fn is_ample(&self, fan: &Fan) -> Result<bool> {
        let data = self.support_data(fan)?;
        if !data
            .iter()
            .all(|u| u.iter().all(num::rational::BigRational::is_integer))
        {
            return Err(Error::NotCartier(
                "ampleness test requires a Cartier divisor".into(),
            ));
        }
        for (cone, u) in fan.max_cones.iter().zip(&data) {
            for (k, ray) in fan.rays.iter().enumerate() {
                if cone.contains(&k) {
                    continue;
                }
                let val: num::rational::BigRational = u
                    .iter()
                    .zip(ray)
                    .map(|(ui, &x)| ui * num::rational::BigRational::from(BigInt::from(x)))
                    .sum();
                if val <= num::rational::BigRational::from(-self.coeffs[k].clone()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn scale(&self, t: &BigInt) -> TorusDivisor {
        TorusDivisor {
            coeffs: self.coeffs.iter().map(|a| a * t).collect(),
        }
    }
}

/// Weights of a weighted projective space `P(1, q_1, ..., q_n)` with the
/// invariants used by the divisor criteria.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    pub weights: Vec<i64>,
}

impl WeightSystem {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.len() < 2 || weights.iter().any(|&q| q <= 0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        if weights[0] != 1 {
            return Err(Error::InvalidInput("the first weight must be 1".into()));
        }
        Ok(WeightSystem { weights })
    }

    pub fn n(&self) -> usize {
        self.weights.len() - 1
    }

    /// `lcm` of the weights.
    pub fn m(&self) -> i64 {
        self.weights.iter().fold(1i64, |acc, &q| acc.lcm(&q))
    }

    /// Sum of the weights.
    pub fn s(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn fan(&self) -> Result<Fan> {
        Fan::weighted_projective_space(&self.weights)
    }

    /// `O(d)` is Cartier iff `m | d`, ample iff additionally `d > 0`.
    pub fn is_cartier(&self, d: i64) -> bool {
        d % self.m() == 0
    }

    pub fn is_ample(&self, d: i64) -> bool {
        self.is_cartier(d) && d > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Arc<Fan> {
        Arc::new(Fan::projective_space(2))
    }

    #[test]
    fn projective_fans_validate() {
        for n in 2..=4 {
            Fan::projective_space(n).validate().unwrap();
        }
        Fan::weighted_projective_space(&[1, 1, 1, 1, 2]).unwrap();
    }

    #[test]
    fn incomplete_fan_is_rejected() {
        // only one quadrant of the plane
        let fan = Fan {
            dim: 2,
            rays: vec![vec![1, 0], vec![0, 1]],
            max_cones: vec![vec![0, 1]],
        };
        assert!(matches!(fan.validate(), Err(Error::NotComplete(_))));
    }

    #[test]
    fn projective_space_degrees_are_one() {
        let chow = ChowPresentation::new(p2());
        assert_eq!(chow.picard_rank(), 1);
        assert!(chow.torsion_moduli().is_empty());
        for j in 0..3 {
            let c = chow.variable_class(j).unwrap();
            assert_eq!(c.free, vec![BigInt::one()], "variable {j}");
        }
        let k = chow.anticanonical_class().unwrap();
        assert_eq!(k.free, vec![BigInt::from(3)]);
    }

    #[test]
    fn weighted_degrees_match_weights() {
        let fan = Arc::new(Fan::weighted_projective_space(&[1, 1, 1, 1, 2]).unwrap());
        let chow = ChowPresentation::new(fan);
        assert_eq!(chow.picard_rank(), 1);
        let expected = [1i64, 1, 1, 1, 2];
        for (j, &q) in expected.iter().enumerate() {
            let c = chow.variable_class(j).unwrap();
            assert_eq!(c.free, vec![BigInt::from(q)], "variable {j}");
        }
    }

    #[test]
    fn torsion_class_group() {
        // quotient of the plane fan with rays (2,-1), (-1,2), (-1,-1):
        // class group Z ⊕ Z/3
        let fan = Arc::new(
            Fan::new(
                2,
                vec![vec![2, -1], vec![-1, 2], vec![-1, -1]],
                vec![vec![0, 1], vec![1, 2], vec![2, 0]],
            )
            .unwrap(),
        );
        let chow = ChowPresentation::new(fan);
        assert_eq!(chow.picard_rank(), 1);
        assert_eq!(chow.torsion_moduli(), vec![BigInt::from(3)]);
    }

    #[test]
    fn hyperplane_is_cartier_and_ample() {
        let fan = p2();
        let h = TorusDivisor::from_i64(&[1, 0, 0]);
        assert!(h.is_cartier(&fan).unwrap());
        assert!(h.is_ample(&fan).unwrap());
        let zero = TorusDivisor::from_i64(&[0, 0, 0]);
        assert!(zero.is_cartier(&fan).unwrap());
        assert!(!zero.is_ample(&fan).unwrap());
        let anti = TorusDivisor::from_i64(&[-1, 0, 0]);
        assert!(!anti.is_ample(&fan).unwrap());
    }

    #[test]
    fn wps_cartier_threshold() {
        let w = WeightSystem::new(vec![1, 1, 1, 1, 2]).unwrap();
        assert_eq!(w.m(), 2);
        assert_eq!(w.s(), 6);
        assert!(!w.is_cartier(7));
        assert!(w.is_cartier(8));
        assert!(w.is_ample(8));
        // cross-check against the fan-level test: O(d) on P(1,1,1,1,2) is
        // d · D_1 with D_1 of weight 1
        let fan = w.fan().unwrap();
        for d in [7i64, 8] {
            let div = TorusDivisor::from_i64(&[0, d, 0, 0, 0]);
            assert_eq!(div.is_cartier(&fan).unwrap(), w.is_cartier(d), "d={d}");
        }
        let d8 = TorusDivisor::from_i64(&[0, 8, 0, 0, 0]);
        assert!(d8.is_ample(&fan).unwrap());
        let d7 = TorusDivisor::from_i64(&[0, 7, 0, 0, 0]);
        assert!(matches!(d7.is_ample(&fan), Err(Error::NotCartier(_))));
        let zero = TorusDivisor::from_i64(&[0, 0, 0, 0, 0]);
        assert!(!zero.is_ample(&fan).unwrap());
    }

    #[test]
    fn hyperplane_polytope_is_simplex() {
        let fan = p2();
        let h = TorusDivisor::from_i64(&[1, 0, 0]);
        let p = h.polytope(&fan).unwrap();
        assert_eq!(p.count_points().unwrap(), 3);
        assert_eq!(
            p.volume().unwrap(),
            num::rational::BigRational::new(BigInt::one(), BigInt::from(2))
        );
    }
}
