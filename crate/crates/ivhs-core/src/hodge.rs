//! Hodge numbers of a generic ample hypersurface from lattice-point counts.
//!
//! For an ample Cartier divisor `D` on a complete simplicial toric variety of
//! dimension `n` with section polytope `Δ`, the generic hypersurface of class
//! `[tD]` (a variety of dimension `k = n - 1`) has
//!
//! * `h^{k,0}` = interior lattice points of `Δ_t = tΔ`,
//! * `h^{k-1,1}` = interior points of `2Δ_t` minus `(n+1)` times those of
//!   `Δ_t` minus the relative-interior counts of the facets of `Δ_t`.
//!
//! Every interior count is evaluated twice — strict enumeration and Ehrhart
//! reciprocity — and the two must agree.

use num::bigint::BigInt;
use num::{Integer, One, Signed};

use crate::error::{Error, Result};
use crate::jacobian::{CoxRing, JacobianSystem, Section};
use crate::toric::{DegreeClass, Fan, TorusDivisor};
use crate::util::seeded_rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeNumbers {
    /// `h^{k,0}` of the hypersurface, `k` its dimension
    pub h_top: BigInt,
    /// `h^{k-1,1}`
    pub h_next: BigInt,
}

/// Interior count of `tP`, strict enumeration cross-checked against
/// `(-1)^dim E(-t)`.
fn interior_both_ways(p: &crate::lattice::LatticePolytope, t: i64) -> Result<BigInt> {
    let direct = BigInt::from(p.dilate(&BigInt::from(t)).count_interior_points()?);
    let recip = p.reciprocity_interior(t)?;
    if direct != recip {
        return Err(Error::Internal(format!(
            "interior count disagreement at t = {t}: {direct} vs {recip}"
        )));
    }
    Ok(direct)
}

pub fn hypersurface_hodge(fan: &Fan, divisor: &TorusDivisor, t: i64) -> Result<HodgeNumbers> {
    if t < 1 {
        return Err(Error::InvalidInput("dilation factor must be >= 1".into()));
    }
    if !divisor.is_ample(fan)? {
        return Err(Error::NotAmple);
    }
    let delta = divisor.polytope(fan)?;
    let delta_t = delta.dilate(&BigInt::from(t));
    let n = BigInt::from(fan.dim as i64);
    let l1 = interior_both_ways(&delta, t)?;
    let l2 = interior_both_ways(&delta, 2 * t)?;
    let facet_sum: BigInt = delta_t
        .facet_interior_counts()?
        .into_iter()
        .map(BigInt::from)
        .sum();
    let h_next = l2 - (&n + BigInt::one()) * &l1 - facet_sum;
    if h_next.is_negative() {
        return Err(Error::Internal("negative Hodge number".into()));
    }
    Ok(HodgeNumbers { h_top: l1, h_next })
}

/// Right-hand side of the moduli inequality: `3·(⌊(h^{k-1,1} - 1)/h^{k,0}⌋ + 1)`.
pub fn inequality_rhs(h: &HodgeNumbers) -> Result<BigInt> {
    if !h.h_top.is_positive() {
        return Err(Error::HypothesisViolation(
            "the inequality needs h^{k,0} > 0".into(),
        ));
    }
    let q = (&h.h_next - BigInt::one()).div_floor(&h.h_top);
    Ok(BigInt::from(3) * (q + BigInt::one()))
}

/// Jacobian-ring dimension at `gamma` for a generic section of degree `beta`:
/// the minimum over `k` seeded random sections plus (when the degree admits
/// one) the Fermat section. The flag reports whether all samples agreed.
pub fn generic_ring_dim(
    ring: &CoxRing,
    beta: &DegreeClass,
    gamma: &DegreeClass,
    seed: u64,
    k: usize,
) -> Result<(usize, bool)> {
    let mut dims = Vec::new();
    for i in 0..k.max(1) as u64 {
        let mut rng = seeded_rng(seed.wrapping_add(i));
        let f = Section::random(ring, beta, &mut rng)?;
        dims.push(JacobianSystem::new(ring, f)?.ring_dim(gamma)?);
    }
    if let Some(f) = Section::fermat(ring, beta)? {
        dims.push(JacobianSystem::new(ring, f)?.ring_dim(gamma)?);
    }
    let min = *dims.iter().min().unwrap();
    let agree = dims.iter().all(|&d| d == min);
    Ok((min, agree))
}

/// Moduli-space dimension `μ_t = dim R(f)_{[tD]}` for a generic section of
/// degree `[tD]`, restricted to ambient dimension ≥ 4.
pub fn moduli_dim(
    ring: &CoxRing,
    divisor: &TorusDivisor,
    t: i64,
    seed: u64,
) -> Result<usize> {
    let fan = ring.fan();
    if fan.dim < 4 {
        return Err(Error::DimensionTooSmall(fan.dim, 4));
    }
    if t < 1 {
        return Err(Error::InvalidInput("dilation factor must be >= 1".into()));
    }
    if !divisor.is_ample(fan)? {
        return Err(Error::NotAmple);
    }
    let scaled = divisor.scale(&BigInt::from(t));
    let beta = ring.chow.class_of(&scaled.coeffs)?;
    let (dim, _) = generic_ring_dim(ring, &beta, &beta, seed, 3)?;
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::WeightSystem;
    use std::sync::Arc;

    fn p4_hypersurface(t: i64) -> HodgeNumbers {
        let fan = Fan::projective_space(4);
        let div = TorusDivisor::from_i64(&[1, 0, 0, 0, 0]);
        hypersurface_hodge(&fan, &div, t).unwrap()
    }

    #[test]
    fn quintic_threefold() {
        let h = p4_hypersurface(5);
        assert_eq!(h.h_top, BigInt::from(1));
        assert_eq!(h.h_next, BigInt::from(101));
        assert_eq!(inequality_rhs(&h).unwrap(), BigInt::from(303));
    }

    #[test]
    fn hyperplane_section_has_no_cohomology() {
        let h = p4_hypersurface(1);
        assert_eq!(h.h_top, BigInt::from(0));
        assert_eq!(h.h_next, BigInt::from(0));
        assert!(matches!(
            inequality_rhs(&h),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn sextic_threefold() {
        let h = p4_hypersurface(6);
        assert_eq!(h.h_top, BigInt::from(5));
        assert_eq!(h.h_next, BigInt::from(255));
        assert_eq!(inequality_rhs(&h).unwrap(), BigInt::from(153));
    }

    #[test]
    fn septic_and_octic() {
        // degree-7 threefold: h^{3,0} = C(6,4) = 15,
        // h^{2,1} = C(13,4) - 5·15 - 5·C(6,3) = 715 - 75 - 100 = 540
        let h = p4_hypersurface(7);
        assert_eq!(h.h_top, BigInt::from(15));
        assert_eq!(h.h_next, BigInt::from(540));
        let h = p4_hypersurface(8);
        assert_eq!(h.h_top, BigInt::from(35));
        // C(15,4) - 5·35 - 5·C(7,3) = 1365 - 175 - 175
        assert_eq!(h.h_next, BigInt::from(1015));
    }

    #[test]
    fn weighted_octic() {
        // O(8) on P(1,1,1,1,2): h^{3,0} counts monomials of degree 8 - 6 = 2
        let w = WeightSystem::new(vec![1, 1, 1, 1, 2]).unwrap();
        let fan = w.fan().unwrap();
        let div = TorusDivisor::from_i64(&[0, 2, 0, 0, 0]);
        let h = hypersurface_hodge(&fan, &div, 4).unwrap();
        assert_eq!(h.h_top, BigInt::from(11));
    }

    #[test]
    fn quintic_and_sextic_moduli() {
        let ring = CoxRing::new(Arc::new(Fan::projective_space(4)));
        let div = TorusDivisor::from_i64(&[1, 0, 0, 0, 0]);
        assert_eq!(moduli_dim(&ring, &div, 5, 1).unwrap(), 101);
        assert_eq!(moduli_dim(&ring, &div, 6, 1).unwrap(), 185);
    }

    #[test]
    fn small_dimension_is_rejected() {
        let ring = CoxRing::new(Arc::new(Fan::projective_space(3)));
        let div = TorusDivisor::from_i64(&[1, 0, 0, 0]);
        assert!(matches!(
            moduli_dim(&ring, &div, 4, 1),
            Err(Error::DimensionTooSmall(3, 4))
        ));
    }
}
