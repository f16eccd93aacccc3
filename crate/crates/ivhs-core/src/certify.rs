//! Non-genericity certificates: the moduli inequality, injectivity of the
//! first projection, and nonvanishing of the second, assembled into a
//! machine-readable verdict.
//!
//! All integers are serialized as decimal strings so consumers never
//! overflow; the verdict equation `NonGeneric ⟺ inequality ∧ p0 ∧ p1` is
//! re-verified independently of assembly.

use num::bigint::BigInt;
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge::{generic_ring_dim, hypersurface_hodge, inequality_rhs, HodgeNumbers};
use crate::jacobian::{
    p0_injective_forced, p0_injective_monomial, pairing_nonzero_dense, pairing_nonzero_monomial,
    positive_dim_via_koszul, products_span, CoxRing, JacobianSystem, Section,
};
use crate::toric::{DegreeClass, TorusDivisor, WeightSystem};
use crate::util::seeded_rng;

pub const VERDICT_NON_GENERIC: &str = "NonGeneric";
pub const VERDICT_INCONCLUSIVE: &str = "Inconclusive";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub instance: String,
    pub h_top: String,
    pub h_next: String,
    pub mu: String,
    pub rhs: String,
    pub inequality_holds: bool,
    pub p0_injective: bool,
    pub p0_method: String,
    pub p1_nonzero: bool,
    pub p1_method: String,
    pub verdict: String,
    pub seeds: Vec<String>,
    pub warnings: Vec<String>,
}

impl Certificate {
    /// The verdict equation, re-derived from the three flags.
    pub fn verdict_consistent(&self) -> bool {
        let expect = if self.inequality_holds && self.p0_injective && self.p1_nonzero {
            VERDICT_NON_GENERIC
        } else {
            VERDICT_INCONCLUSIVE
        };
        self.verdict == expect
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization")
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("bad certificate: {e}")))
    }
}

fn seeds_used(seed: u64, k: u64) -> Vec<String> {
    (0..k).map(|i| seed.wrapping_add(i).to_string()).collect()
}

/// Injectivity of `R_e → Hom(R_c, R_{e+c})` for the generic section of
/// degree `e`. An injective witness certifies the generic value (ranks only
/// grow and quotient dimensions only shrink under genericity), so the Fermat
/// section is tried first and random samples after it.
fn generic_p0(
    ring: &CoxRing,
    e_class: &DegreeClass,
    c_class: &DegreeClass,
    seed: u64,
    k: u64,
) -> Result<bool> {
    if let Some(f) = Section::fermat(ring, e_class)? {
        let sys = JacobianSystem::new(ring, f)?;
        if p0_injective_monomial(&sys, c_class)? == Some(true) {
            return Ok(true);
        }
    }
    for i in 0..k {
        let mut rng = seeded_rng(seed.wrapping_add(i));
        let f = Section::random(ring, e_class, &mut rng)?;
        let sys = JacobianSystem::new(ring, f)?;
        if p0_injective_forced(&sys, c_class)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Nonvanishing of the pairing `R_e ⊗ R_b → R_{e+b}`, evaluated on the
/// Fermat witness when the degree admits one and on random samples
/// otherwise; per-sample the monomial, Koszul, and dense paths are tried in
/// order of cost.
fn generic_p1(
    ring: &CoxRing,
    e_class: &DegreeClass,
    b_class: &DegreeClass,
    seed: u64,
    k: u64,
) -> Result<bool> {
    if let Some(f) = Section::fermat(ring, e_class)? {
        let sys = JacobianSystem::new(ring, f)?;
        if pairing_nonzero_monomial(&sys, b_class)? == Some(true) {
            return Ok(true);
        }
    }
    let t_class = e_class.add(b_class);
    let span = products_span(ring, e_class, b_class)?;
    for i in 0..k {
        let mut rng = seeded_rng(seed.wrapping_add(i));
        let f = Section::random(ring, e_class, &mut rng)?;
        let sys = JacobianSystem::new(ring, f)?;
        if span {
            // the image fills the quotient, so nonvanishing is exactly
            // positivity of the quotient dimension
            match positive_dim_via_koszul(&sys, &t_class)? {
                Some(v) => {
                    if v {
                        return Ok(true);
                    }
                    continue;
                }
                None => {}
            }
            match sys.ring_dim(&t_class) {
                Ok(d) => {
                    if d > 0 {
                        return Ok(true);
                    }
                    continue;
                }
                Err(Error::TooLarge(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        match pairing_nonzero_dense(&sys, b_class) {
            Ok(true) => return Ok(true),
            Ok(false) => {}
            Err(Error::TooLarge(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(false)
}

/// When `p0_symbolic` is set the first projection is already certified by a
/// symbolic criterion and the rank computation is skipped.
pub(crate) fn certify(
    ring: &CoxRing,
    divisor: &TorusDivisor,
    t: i64,
    seed: u64,
    instance: String,
    p0_symbolic: Option<(bool, String)>,
) -> Result<Certificate> {
    let fan = ring.fan();
    if fan.dim < 4 {
        return Err(Error::DimensionTooSmall(fan.dim, 4));
    }
    if !divisor.is_ample(fan)? {
        return Err(Error::NotAmple);
    }
    let h: HodgeNumbers = hypersurface_hodge(fan, divisor, t)?;
    let mut warnings = Vec::new();

    let scaled = divisor.scale(&BigInt::from(t));
    let beta_t = ring.chow.class_of(&scaled.coeffs)?;
    let beta0 = ring.chow.anticanonical_class()?;
    let (mu, agree) = generic_ring_dim(ring, &beta_t, &beta_t, seed, 3)?;
    if !agree {
        warnings.push("samples disagreed on the moduli dimension; reporting the minimum".into());
    }
    let seeds = seeds_used(seed, 3);

    if h.h_top.is_zero() {
        warnings.push("criterion inapplicable: the top Hodge number vanishes".into());
        let cert = Certificate {
            instance,
            h_top: h.h_top.to_string(),
            h_next: h.h_next.to_string(),
            mu: mu.to_string(),
            rhs: "0".into(),
            inequality_holds: false,
            p0_injective: false,
            p0_method: "rank".into(),
            p1_nonzero: false,
            p1_method: "rank".into(),
            verdict: VERDICT_INCONCLUSIVE.into(),
            seeds,
            warnings,
        };
        debug_assert!(cert.verdict_consistent());
        return Ok(cert);
    }

    // injectivity first, then the inequality with μ, then the pairing
    let c_class = beta_t.sub(&beta0);
    let (p0_injective, p0_method) = match p0_symbolic {
        Some((flag, method)) => (flag, method),
        None => (
            generic_p0(ring, &beta_t, &c_class, seed, 3)?,
            "rank".to_string(),
        ),
    };

    let rhs = inequality_rhs(&h)?;
    let inequality_holds = BigInt::from(mu) >= rhs;

    let b_class = beta_t.scale(&BigInt::from(2)).sub(&beta0);
    let p1_nonzero = generic_p1(ring, &beta_t, &b_class, seed, 3)?;

    let verdict = if inequality_holds && p0_injective && p1_nonzero {
        VERDICT_NON_GENERIC
    } else {
        VERDICT_INCONCLUSIVE
    };
    let cert = Certificate {
        instance,
        h_top: h.h_top.to_string(),
        h_next: h.h_next.to_string(),
        mu: mu.to_string(),
        rhs: rhs.to_string(),
        inequality_holds,
        p0_injective,
        p0_method,
        p1_nonzero,
        p1_method: "rank".into(),
        verdict: verdict.into(),
        seeds,
        warnings,
    };
    debug_assert!(cert.verdict_consistent());
    Ok(cert)
}

pub fn check_toric(
    ring: &CoxRing,
    divisor: &TorusDivisor,
    t: i64,
    seed: u64,
) -> Result<Certificate> {
    let fan = ring.fan();
    let instance = format!(
        "toric dim {} with {} rays, divisor [{}], t={t}",
        fan.dim,
        fan.n_rays(),
        divisor
            .coeffs
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    certify(ring, divisor, t, seed, instance, None)
}

/// `m|c` and `(n+1)d − 2s − (c+e) > −s + m·n`: the symbolic injectivity
/// criterion for weighted projective space.
pub fn weighted_macaulay_condition(w: &WeightSystem, d: i64, c: i64, e: i64) -> bool {
    let (n, m, s) = (w.n() as i64, w.m(), w.s());
    c.rem_euclid(m) == 0 && (n + 1) * d - 2 * s - (c + e) > -s + m * n
}

pub fn check_wps(w: &WeightSystem, d: i64, seed: u64) -> Result<Certificate> {
    let (m, s) = (w.m(), w.s());
    if s % m != 0 {
        return Err(Error::HypothesisViolation(format!(
            "the weight sum {s} must be divisible by m = {m}"
        )));
    }
    if d % m != 0 {
        return Err(Error::NotCartier(format!(
            "degree {d} is not a multiple of m = {m}"
        )));
    }
    if d <= 0 {
        return Err(Error::NotAmple);
    }
    if w.n() < 4 {
        return Err(Error::DimensionTooSmall(w.n(), 4));
    }
    let fan = std::sync::Arc::new(w.fan()?);
    let ring = CoxRing::new(fan.clone());
    let mut coeffs = vec![0i64; fan.n_rays()];
    coeffs[0] = d;
    let divisor = TorusDivisor::from_i64(&coeffs);
    let instance = format!(
        "wps ({}) d={d}",
        w.weights
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    let p0_symbolic = if d >= 2 * m && weighted_macaulay_condition(w, d, d - s, d) {
        Some((true, "weighted-macaulay".to_string()))
    } else {
        None
    };
    certify(&ring, &divisor, 1, seed, instance, p0_symbolic)
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub first_non_generic: Option<i64>,
    pub certificates: Vec<Certificate>,
}

/// Certificates for every `t` in the range, plus the smallest `t` whose
/// verdict is NonGeneric.
pub fn scan_toric(
    ring: &CoxRing,
    divisor: &TorusDivisor,
    t_from: i64,
    t_to: i64,
    seed: u64,
) -> Result<ScanReport> {
    if t_from < 1 || t_to < t_from {
        return Err(Error::InvalidInput("bad scan range".into()));
    }
    let mut certificates = Vec::new();
    let mut first_non_generic = None;
    for t in t_from..=t_to {
        let cert = check_toric(ring, divisor, t, seed)?;
        if first_non_generic.is_none() && cert.verdict == VERDICT_NON_GENERIC {
            first_non_generic = Some(t);
        }
        certificates.push(cert);
    }
    Ok(ScanReport {
        first_non_generic,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::Fan;
    use std::sync::Arc;

    fn p4_ring() -> CoxRing {
        CoxRing::new(Arc::new(Fan::projective_space(4)))
    }

    fn hyperplane() -> TorusDivisor {
        TorusDivisor::from_i64(&[1, 0, 0, 0, 0])
    }

    #[test]
    fn quintic_certificate_is_inconclusive() {
        let ring = p4_ring();
        let cert = check_toric(&ring, &hyperplane(), 5, 1).unwrap();
        assert_eq!(cert.h_top, "1");
        assert_eq!(cert.h_next, "101");
        assert_eq!(cert.mu, "101");
        assert_eq!(cert.rhs, "303");
        assert!(!cert.inequality_holds);
        assert_eq!(cert.verdict, VERDICT_INCONCLUSIVE);
        assert!(cert.verdict_consistent());
    }

    #[test]
    fn sextic_certificate_is_non_generic() {
        let ring = p4_ring();
        let cert = check_toric(&ring, &hyperplane(), 6, 1).unwrap();
        assert_eq!(cert.h_top, "5");
        assert_eq!(cert.h_next, "255");
        assert_eq!(cert.mu, "185");
        assert_eq!(cert.rhs, "153");
        assert!(cert.inequality_holds);
        assert!(cert.p0_injective);
        assert!(cert.p1_nonzero);
        assert_eq!(cert.verdict, VERDICT_NON_GENERIC);
        assert!(cert.verdict_consistent());
    }

    #[test]
    fn zero_divisor_is_rejected() {
        let ring = p4_ring();
        let zero = TorusDivisor::from_i64(&[0, 0, 0, 0, 0]);
        assert!(matches!(
            check_toric(&ring, &zero, 5, 1),
            Err(Error::NotAmple)
        ));
    }

    #[test]
    fn hyperplane_section_gets_inapplicability_warning() {
        let ring = p4_ring();
        let cert = check_toric(&ring, &hyperplane(), 1, 1).unwrap();
        assert_eq!(cert.verdict, VERDICT_INCONCLUSIVE);
        assert!(cert
            .warnings
            .iter()
            .any(|w| w.contains("criterion inapplicable")));
    }

    #[test]
    fn wps_hypothesis_errors() {
        let w = WeightSystem::new(vec![1, 1, 1, 1, 2]).unwrap();
        assert!(matches!(check_wps(&w, 7, 1), Err(Error::NotCartier(_))));
        assert!(matches!(check_wps(&w, -2, 1), Err(Error::NotAmple)));
        // m = 3 does not divide s = 7
        let w = WeightSystem::new(vec![1, 1, 1, 1, 3]).unwrap();
        assert!(matches!(
            check_wps(&w, 6, 1),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn wps_octic_uses_the_symbolic_route() {
        let w = WeightSystem::new(vec![1, 1, 1, 1, 2]).unwrap();
        let cert = check_wps(&w, 8, 1).unwrap();
        assert!(cert.p0_injective);
        assert_eq!(cert.p0_method, "weighted-macaulay");
        assert!(cert.verdict_consistent());
    }

    #[test]
    fn macaulay_condition_instances() {
        let p4 = WeightSystem::new(vec![1, 1, 1, 1, 1]).unwrap();
        // d=5, c=0, e=5: 15 - 5 = 10 > -5 + 4 = -1
        assert!(weighted_macaulay_condition(&p4, 5, 0, 5));
        let w = WeightSystem::new(vec![1, 1, 1, 1, 2]).unwrap();
        assert!(!weighted_macaulay_condition(&w, 2, -4, 2));
        // boundary identity: with e=d, c=d−s the margin is (n−1)d − s
        for d in [6i64, 8, 10] {
            let lhs = 5 * d - 2 * w.s() - (d - w.s() + d);
            assert_eq!(lhs, 3 * d - w.s());
        }
    }

    #[test]
    fn certificate_json_round_trips() {
        let ring = p4_ring();
        let cert = check_toric(&ring, &hyperplane(), 5, 7).unwrap();
        let json = cert.to_json();
        let back = Certificate::from_json(&json).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json(), json);
    }
}
