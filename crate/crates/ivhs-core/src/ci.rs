//! Complete intersections in projective space via the bigraded Jacobian
//! ring of `F = Σ μ_a F_a` with `deg x_j = (0,1)` and `deg μ_a = (1,-d_a)`.
//!
//! Monomials are exponent vectors `[μ_1..μ_c, x_0..x_n]`. The Jacobian ideal
//! is generated by the `F_a = ∂F/∂μ_a` (bidegree `(0,d_a)`) and the
//! `∂F/∂x_j` (bidegree `(1,-1)`); graded dimensions come from exact ranks.
//! For `c = 1` everything collapses to the single-grading hypersurface
//! machinery (the Euler relation puts `F_1` inside the span of the
//! `x`-partials), and the certification path reuses it.

use num::bigint::BigInt;
use num::{BigRational, One, Zero};
use std::collections::HashSet;
use rand::Rng;
use std::collections::HashMap;
use std::sync::Arc;

use crate::certify::{certify, Certificate};
use crate::error::{Error, Result};
use crate::jacobian::{check_dense_size, multiplier_kernel_dim, CoxRing};
use crate::linalg::IntMatrix;
use crate::toric::{Fan, TorusDivisor};
use crate::util::seeded_rng;

#[derive(Debug, Clone)]
pub struct CIProblem {
    /// ambient projective space dimension
    pub n: usize,
    /// hypersurface degrees, descending
    pub degrees: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BigradedDegree {
    pub p: i64,
    pub q: i64,
}

impl CIProblem {
    pub fn new(n: usize, mut degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() || degrees.iter().any(|&d| d < 1) {
            return Err(Error::InvalidInput("degrees must be positive".into()));
        }
        if degrees.len() >= n {
            return Err(Error::InvalidInput(
                "need fewer hypersurfaces than the ambient dimension".into(),
            ));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CIProblem { n, degrees })
    }

    pub fn c(&self) -> usize {
        self.degrees.len()
    }

    pub fn dim_x(&self) -> usize {
        self.n - self.c()
    }

    /// `d(X) = Σ d_a - (n+1)`.
    pub fn d_x(&self) -> i64 {
        self.degrees.iter().sum::<i64>() - (self.n as i64 + 1)
    }

    fn n_vars(&self) -> usize {
        self.n + 1
    }

    /// Monomials `μ^b x^α` with `Σ b = p` and `Σ α - Σ b_a d_a = q`, sorted.
    pub fn ambient_basis(&self, deg: BigradedDegree) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        if deg.p < 0 {
            return out;
        }
        for b in compositions(deg.p, self.c()) {
            let xdeg = deg.q + b.iter().zip(&self.degrees).map(|(&bi, &d)| bi * d).sum::<i64>();
            if xdeg < 0 {
                continue;
            }
            for x in x_monomials(self.n_vars(), xdeg) {
                let mut m = b.clone();
                m.extend(x);
                out.push(m);
            }
        }
        out.sort();
        out
    }

    pub fn ambient_dim(&self, deg: BigradedDegree) -> usize {
        self.ambient_basis(deg).len()
    }
}

/// The hypersurface forms, as `x`-monomial terms.
#[derive(Debug, Clone)]
pub struct CIForms {
    pub forms: Vec<Vec<(BigInt, Vec<i64>)>>,
}

impl CIForms {
    /// Full-support forms with integer coefficients in `1..=20`.
    pub fn random<R: Rng>(prob: &CIProblem, rng: &mut R) -> CIForms {
        let forms = prob
            .degrees
            .iter()
            .map(|&d| {
                x_monomials(prob.n_vars(), d)
                    .into_iter()
                    .map(|m| (BigInt::from(rng.gen_range(1i64..=20)), m))
                    .collect()
            })
            .collect();
        CIForms { forms }
    }

    /// `F_a = Σ x_j^{d_a}` over a partition of the variables into `c`
    /// consecutive blocks: every `∂F/∂x_j` is a single monomial, so the
    /// `x`-partial part of the Jacobian ideal is monomial.
    pub fn disjoint_powers(prob: &CIProblem) -> CIForms {
        let c = prob.c();
        let nv = prob.n_vars();
        let base = nv / c;
        let extra = nv % c;
        let mut forms = Vec::with_capacity(c);
        let mut j = 0usize;
        for (a, &d) in prob.degrees.iter().enumerate() {
            let size = base + usize::from(a < extra);
            let mut terms = Vec::with_capacity(size);
            for _ in 0..size {
                let mut m = vec![0i64; nv];
                m[j] = d;
                terms.push((BigInt::one(), m));
                j += 1;
            }
            forms.push(terms);
        }
        CIForms { forms }
    }

    /// `F_a = Σ_j x_j^{d_a}` over all variables. Smooth for `c = 2` with
    /// distinct degrees: the two gradient rows are proportional only where
    /// every coordinate lies in `{0, λ}`, which forces the point off `X`.
    pub fn fermat(prob: &CIProblem) -> CIForms {
        let forms = prob
            .degrees
            .iter()
            .map(|&d| {
                (0..prob.n_vars())
                    .map(|j| {
                        let mut m = vec![0i64; prob.n_vars()];
                        m[j] = d;
                        (BigInt::one(), m)
                    })
                    .collect()
            })
            .collect();
        CIForms { forms }
    }

    /// Terms of `∂F/∂x_j` per variable, as `(coefficient, exponent)` pairs
    /// in `[μ, x]` layout; empty partials are dropped.
    fn partial_terms(&self, prob: &CIProblem) -> Vec<Vec<(BigInt, Vec<i64>)>> {
        let c = prob.c();
        let nv = prob.n_vars();
        let mut out = Vec::new();
        for j in 0..nv {
            let mut terms: Vec<(BigInt, Vec<i64>)> = Vec::new();
            for (a, form) in self.forms.iter().enumerate() {
                for (coef, xexp) in form {
                    if xexp[j] > 0 {
                        let mut g = vec![0i64; c + nv];
                        g[a] = 1;
                        for (k, &e) in xexp.iter().enumerate() {
                            g[c + k] = e;
                        }
                        g[c + j] -= 1;
                        terms.push((coef * BigInt::from(xexp[j]), g));
                    }
                }
            }
            if !terms.is_empty() {
                out.push(terms);
            }
        }
        out
    }

    fn partials_are_short(&self, prob: &CIProblem) -> bool {
        self.partial_terms(prob).iter().all(|t| t.len() <= 2)
    }
}

/// Union-find over row monomials tracking, per component, a linear
/// functional that vanishes on the span of the two-term columns seen so
/// far. A component is `full` once its whole coordinate subspace is
/// spanned (a one-term column, an inconsistent cycle, or an explicit mark).
struct RatioUnion {
    parent: Vec<usize>,
    weight: Vec<BigRational>,
    size: Vec<usize>,
    full: Vec<bool>,
}

impl RatioUnion {
    fn new(n: usize) -> RatioUnion {
        RatioUnion {
            parent: (0..n).collect(),
            weight: vec![BigRational::one(); n],
            size: vec![1; n],
            full: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut chain = Vec::new();
        let mut r = x;
        while self.parent[r] != r {
            chain.push(r);
            r = self.parent[r];
        }
        let mut acc = BigRational::one();
        for &y in chain.iter().rev() {
            acc *= self.weight[y].clone();
            self.weight[y] = acc.clone();
            self.parent[y] = r;
        }
        r
    }

    fn mark_full(&mut self, x: usize) {
        let r = self.find(x);
        self.full[r] = true;
    }

    /// Record the column `a·e_u + b·e_v` (both coefficients nonzero).
    fn relate(&mut self, u: usize, v: usize, a: &BigInt, b: &BigInt) {
        let ru = self.find(u);
        let rv = self.find(v);
        let wu = self.weight[u].clone();
        let wv = self.weight[v].clone();
        let ra = BigRational::from(a.clone());
        let rb = BigRational::from(b.clone());
        if ru == rv {
            if !(ra * wu + rb * wv).is_zero() {
                self.full[ru] = true;
            }
            return;
        }
        self.parent[rv] = ru;
        self.weight[rv] = -(ra * wu) / (rb * wv);
        self.size[ru] += self.size[rv];
        self.full[ru] |= self.full[rv];
    }
}

fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn x_monomials(nvars: usize, deg: i64) -> Vec<Vec<i64>> {
    if deg < 0 {
        return Vec::new();
    }
    if nvars == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for first in 0..=deg {
        for mut rest in x_monomials(nvars - 1, deg - first) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// Column blocks of the Jacobian piece in bidegree `deg`: for each `F_a` the
/// multipliers of bidegree `(p, q - d_a)`, then for each variable `x_j` the
/// multipliers of bidegree `(p-1, q+1)` against `∂F/∂x_j`.
fn jacobian_columns(
    prob: &CIProblem,
    forms: &CIForms,
    deg: BigradedDegree,
) -> Vec<(Vec<i64>, Vec<(BigInt, Vec<i64>)>)> {
    let c = prob.c();
    let nv = prob.n_vars();
    let mut cols: Vec<(Vec<i64>, Vec<(BigInt, Vec<i64>)>)> = Vec::new();
    for (a, &d) in prob.degrees.iter().enumerate() {
        let gen: Vec<(BigInt, Vec<i64>)> = forms.forms[a]
            .iter()
            .map(|(coef, xexp)| {
                let mut g = vec![0i64; c + nv];
                for (k, &e) in xexp.iter().enumerate() {
                    g[c + k] = e;
                }
                (coef.clone(), g)
            })
            .collect();
        for m in prob.ambient_basis(BigradedDegree {
            p: deg.p,
            q: deg.q - d,
        }) {
            cols.push((m, gen.clone()));
        }
    }
    for j in 0..nv {
        let mut gen: Vec<(BigInt, Vec<i64>)> = Vec::new();
        for (a, form) in forms.forms.iter().enumerate() {
            for (coef, xexp) in form {
                if xexp[j] > 0 {
                    let mut g = vec![0i64; c + nv];
                    g[a] = 1;
                    for (k, &e) in xexp.iter().enumerate() {
                        g[c + k] = e;
                    }
                    g[c + j] -= 1;
                    gen.push((coef * BigInt::from(xexp[j]), g));
                }
            }
        }
        if gen.is_empty() {
            continue;
        }
        for m in prob.ambient_basis(BigradedDegree {
            p: deg.p - 1,
            q: deg.q + 1,
        }) {
            cols.push((m, gen.clone()));
        }
    }
    cols
}

/// Dense multiplication matrix of the Jacobian piece in bidegree `deg`.
pub fn jacobian_matrix(
    prob: &CIProblem,
    forms: &CIForms,
    deg: BigradedDegree,
) -> Result<IntMatrix> {
    let basis = prob.ambient_basis(deg);
    let idx: HashMap<Vec<i64>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let cols = jacobian_columns(prob, forms, deg);
    check_dense_size(basis.len(), cols.len())?;
    let mut rows = vec![vec![BigInt::zero(); cols.len()]; basis.len()];
    for (ci, (m, gen)) in cols.iter().enumerate() {
        for (coef, g) in gen {
            let e: Vec<i64> = m.iter().zip(g).map(|(&x, &y)| x + y).collect();
            let r = *idx
                .get(&e)
                .ok_or_else(|| Error::Internal("product escapes bigraded piece".into()))?;
            rows[r][ci] += coef;
        }
    }
    Ok(IntMatrix::new(rows, cols.len()))
}

/// `dim(J_deg + span{e_m : m ∈ marked})` when every `∂F/∂x_j` has at most
/// two terms: partial-multiple columns have at most two nonzero entries, so
/// they only glue row monomials into weighted components; the `F_a`-multiple
/// columns are then eliminated densely on the per-component functionals.
fn graph_span_dim(
    prob: &CIProblem,
    forms: &CIForms,
    deg: BigradedDegree,
    marked: &HashSet<usize>,
) -> Result<usize> {
    let basis = prob.ambient_basis(deg);
    let idx: HashMap<Vec<i64>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut uf = RatioUnion::new(basis.len());
    for &r in marked {
        uf.mark_full(r);
    }
    let row_of = |m: &[i64], g: &[i64]| -> Result<usize> {
        let e: Vec<i64> = m.iter().zip(g).map(|(&x, &y)| x + y).collect();
        idx.get(&e)
            .copied()
            .ok_or_else(|| Error::Internal("product escapes bigraded piece".into()))
    };
    let gens = forms.partial_terms(prob);
    let mults = prob.ambient_basis(BigradedDegree {
        p: deg.p - 1,
        q: deg.q + 1,
    });
    for gen in &gens {
        debug_assert!(gen.len() <= 2);
        for m in &mults {
            if gen.len() == 1 {
                uf.mark_full(row_of(m, &gen[0].1)?);
            } else {
                let u = row_of(m, &gen[0].1)?;
                let v = row_of(m, &gen[1].1)?;
                uf.relate(u, v, &gen[0].0.clone(), &gen[1].0.clone());
            }
        }
    }
    // tally components and index the consistent ones
    let mut span = 0usize;
    let mut comp_row: HashMap<usize, usize> = HashMap::new();
    for r in 0..basis.len() {
        if uf.find(r) != r {
            continue;
        }
        if uf.full[r] {
            span += uf.size[r];
        } else {
            span += uf.size[r] - 1;
            let next = comp_row.len();
            comp_row.insert(r, next);
        }
    }
    // F_a-multiple columns, projected onto the component functionals
    let c = prob.c();
    let mut cols: Vec<Vec<BigRational>> = Vec::new();
    for (a, &d) in prob.degrees.iter().enumerate() {
        for m in prob.ambient_basis(BigradedDegree {
            p: deg.p,
            q: deg.q - d,
        }) {
            let mut col = vec![BigRational::zero(); comp_row.len()];
            let mut nonzero = false;
            for (coef, xexp) in &forms.forms[a] {
                let mut e: Vec<i64> = m.clone();
                for (k, &x) in xexp.iter().enumerate() {
                    e[c + k] += x;
                }
                let r = *idx
                    .get(&e)
                    .ok_or_else(|| Error::Internal("product escapes bigraded piece".into()))?;
                let root = uf.find(r);
                if let Some(&ci) = comp_row.get(&root) {
                    col[ci] += BigRational::from(coef.clone()) * uf.weight[r].clone();
                    nonzero = true;
                }
            }
            if nonzero {
                cols.push(col);
            }
        }
    }
    check_dense_size(comp_row.len(), cols.len())?;
    let rows: Vec<Vec<BigInt>> = (0..comp_row.len())
        .map(|r| {
            let mut den = BigInt::one();
            for col in &cols {
                den = num::integer::lcm(den, col[r].denom().clone());
            }
            cols.iter()
                .map(|col| (col[r].clone() * BigRational::from(den.clone())).to_integer())
                .collect()
        })
        .collect();
    Ok(span + IntMatrix::new(rows, cols.len()).rank())
}

/// `dim J_deg`, through the component reduction when the partials are
/// short, densely otherwise.
pub fn jacobian_dim(prob: &CIProblem, forms: &CIForms, deg: BigradedDegree) -> Result<usize> {
    if forms.partials_are_short(prob) {
        return graph_span_dim(prob, forms, deg, &HashSet::new());
    }
    Ok(jacobian_matrix(prob, forms, deg)?.rank())
}

pub fn quotient_dim(prob: &CIProblem, forms: &CIForms, deg: BigradedDegree) -> Result<usize> {
    Ok(prob.ambient_dim(deg) - jacobian_dim(prob, forms, deg)?)
}

/// Quotient dimension for generic forms: minimum over `k` seeded samples,
/// with an agreement flag.
pub fn generic_quotient_dim(
    prob: &CIProblem,
    deg: BigradedDegree,
    seed: u64,
    k: u64,
) -> Result<(usize, bool)> {
    let mut dims = Vec::new();
    for i in 0..k.max(1) {
        let mut rng = seeded_rng(seed.wrapping_add(i));
        let forms = CIForms::random(prob, &mut rng);
        dims.push(quotient_dim(prob, &forms, deg)?);
    }
    let min = *dims.iter().min().unwrap();
    Ok((min, dims.iter().all(|&d| d == min)))
}

/// Primitive Hodge number `h^{n-c-p,p}` as the quotient dimension at
/// `(p, d(X))`.
pub fn ci_hodge(prob: &CIProblem, forms: &CIForms, p: i64) -> Result<usize> {
    if p < 0 || p > prob.dim_x() as i64 {
        return Err(Error::InvalidInput("Hodge index out of range".into()));
    }
    quotient_dim(prob, forms, BigradedDegree { p, q: prob.d_x() })
}

/// Moduli dimension as the generic quotient at `(1,0)`.
pub fn ci_moduli(prob: &CIProblem, seed: u64) -> Result<usize> {
    if prob.d_x() < 0 {
        return Err(Error::ModuliIdentificationUnavailable);
    }
    Ok(generic_quotient_dim(prob, BigradedDegree { p: 1, q: 0 }, seed, 3)?.0)
}

/// Whether the pairing `R_e ⊗ R_b → R_{e+b}` is nonzero, together with
/// whether its image fills the quotient: computed as the rank gain of the
/// Jacobian piece at `e+b` after adjoining all monomial products.
pub fn pairing_status(
    prob: &CIProblem,
    forms: &CIForms,
    e: BigradedDegree,
    b: BigradedDegree,
) -> Result<(bool, bool)> {
    let t = BigradedDegree {
        p: e.p + b.p,
        q: e.q + b.q,
    };
    let basis_e = prob.ambient_basis(e);
    let basis_b = prob.ambient_basis(b);
    let basis_t = prob.ambient_basis(t);
    let idx: HashMap<Vec<i64>, usize> = basis_t
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let mut products: std::collections::HashSet<usize> = std::collections::HashSet::new();
    for u in &basis_e {
        for v in &basis_b {
            let m: Vec<i64> = u.iter().zip(v).map(|(&x, &y)| x + y).collect();
            if let Some(&r) = idx.get(&m) {
                products.insert(r);
            }
        }
    }
    if forms.partials_are_short(prob) {
        let dim_j = graph_span_dim(prob, forms, t, &HashSet::new())?;
        let joint = graph_span_dim(prob, forms, t, &products)?;
        return Ok((joint > dim_j, joint == basis_t.len()));
    }
    let dim_j = jacobian_dim(prob, forms, t)?;

    // rank(J + product span) = |products| + rank of the Jacobian columns
    // with the product rows removed
    let b_mat = jacobian_matrix(prob, forms, t)?;
    let ncols = b_mat.ncols;
    let rest: Vec<Vec<BigInt>> = b_mat
        .rows
        .into_iter()
        .enumerate()
        .filter(|(r, _)| !products.contains(r))
        .map(|(_, row)| row)
        .collect();
    check_dense_size(rest.len(), ncols)?;
    let joint = products.len() + IntMatrix::new(rest, ncols).rank();
    Ok((joint > dim_j, joint == basis_t.len()))
}

/// Injectivity of `R_{(1,0)} → Hom(R_{(0,d(X))}, R_{(1,d(X))})` for the
/// given forms, by the forced-kernel computation.
pub fn ci_p0_injective(prob: &CIProblem, forms: &CIForms) -> Result<bool> {
    let dx = prob.d_x();
    let e = BigradedDegree { p: 1, q: 0 };
    let c = BigradedDegree { p: 0, q: dx };
    let t = BigradedDegree { p: 1, q: dx };
    let ideal_e = jacobian_dim(prob, forms, e)?;
    let basis_e = prob.ambient_basis(e);
    let basis_c = prob.ambient_basis(c);
    let basis_t = prob.ambient_basis(t);
    let b = jacobian_matrix(prob, forms, t)?;
    let w = multiplier_kernel_dim(&basis_e, &basis_c, &basis_t, &b, ideal_e)?;
    Ok(w == ideal_e)
}

pub fn check_ci(prob: &CIProblem, seed: u64) -> Result<Certificate> {
    if prob.dim_x() < 3 {
        return Err(Error::DimensionTooSmall(prob.dim_x(), 3));
    }
    let instance = format!(
        "ci P^{} degrees ({})",
        prob.n,
        prob.degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    if prob.c() == 1 {
        // single-grading collapse: the certificate is the hypersurface one
        let fan = Arc::new(Fan::projective_space(prob.n));
        let ring = CoxRing::new(fan.clone());
        let mut coeffs = vec![0i64; fan.n_rays()];
        coeffs[0] = 1;
        let divisor = TorusDivisor::from_i64(&coeffs);
        return certify(&ring, &divisor, prob.degrees[0], seed, instance, None);
    }

    let dx = prob.d_x();
    if dx < 0 {
        return Err(Error::ModuliIdentificationUnavailable);
    }
    let mut warnings = vec!["genericity assumed (seed policy)".to_string()];
    let (h_top, a0) = generic_quotient_dim(prob, BigradedDegree { p: 0, q: dx }, seed, 3)?;
    let (h_next, a1) = generic_quotient_dim(prob, BigradedDegree { p: 1, q: dx }, seed, 3)?;
    let (mu, a2) = generic_quotient_dim(prob, BigradedDegree { p: 1, q: 0 }, seed, 3)?;
    if !(a0 && a1 && a2) {
        warnings.push("samples disagreed on a quotient dimension; reporting minima".into());
    }
    let seeds: Vec<String> = (0..3u64).map(|i| seed.wrapping_add(i).to_string()).collect();

    if h_top == 0 {
        warnings.push("criterion inapplicable: the top Hodge number vanishes".into());
        let cert = Certificate {
            instance,
            h_top: "0".into(),
            h_next: h_next.to_string(),
            mu: mu.to_string(),
            rhs: "0".into(),
            inequality_holds: false,
            p0_injective: false,
            p0_method: "rank".into(),
            p1_nonzero: false,
            p1_method: "rank".into(),
            verdict: crate::certify::VERDICT_INCONCLUSIVE.into(),
            seeds,
            warnings,
        };
        debug_assert!(cert.verdict_consistent());
        return Ok(cert);
    }

    // injectivity first: structured witness, then random samples
    let structured = CIForms::fermat(prob);
    let mut p0_injective = ci_p0_injective(prob, &structured)?;
    if !p0_injective {
        for i in 0..3u64 {
            let mut rng = seeded_rng(seed.wrapping_add(i));
            let forms = CIForms::random(prob, &mut rng);
            if ci_p0_injective(prob, &forms)? {
                p0_injective = true;
                break;
            }
        }
    }

    let rhs = BigInt::from(3) * (BigInt::from((h_next as i64 - 1).div_euclid(h_top as i64)) + 1);
    let inequality_holds = BigInt::from(mu) >= rhs;

    let e = BigradedDegree { p: 1, q: 0 };
    let b = BigradedDegree { p: 1, q: dx };
    let mut p1_nonzero = false;
    let mut surjective = None;
    match pairing_status(prob, &structured, e, b) {
        Ok((nz, onto)) => {
            p1_nonzero = nz;
            surjective = Some(onto);
        }
        Err(Error::TooLarge(_)) => {}
        Err(err) => return Err(err),
    }
    if !p1_nonzero {
        for i in 0..3u64 {
            let mut rng = seeded_rng(seed.wrapping_add(i));
            let forms = CIForms::random(prob, &mut rng);
            match pairing_status(prob, &forms, e, b) {
                Ok((nz, onto)) => {
                    if nz {
                        p1_nonzero = true;
                        surjective = Some(onto);
                        break;
                    }
                }
                Err(Error::TooLarge(_)) => {}
                Err(err) => return Err(err),
            }
        }
    }
    if let Some(onto) = surjective {
        warnings.push(format!("p1 pairing surjective onto the quotient: {onto}"));
    }

    let verdict = if inequality_holds && p0_injective && p1_nonzero {
        crate::certify::VERDICT_NON_GENERIC
    } else {
        crate::certify::VERDICT_INCONCLUSIVE
    };
    let cert = Certificate {
        instance,
        h_top: h_top.to_string(),
        h_next: h_next.to_string(),
        mu: mu.to_string(),
        rhs: rhs.to_string(),
        inequality_holds,
        p0_injective,
        p0_method: "rank".into(),
        p1_nonzero,
        p1_method: "rank".into(),
        verdict: verdict.into(),
        seeds,
        warnings,
    };
    debug_assert!(cert.verdict_consistent());
    Ok(cert)
}

fn ceil_nth_root(v: &BigInt, k: u32) -> BigInt {
    if v <= &BigInt::zero() {
        return BigInt::zero();
    }
    let r = v.nth_root(k);
    if r.pow(k) < *v {
        r + 1
    } else {
        r
    }
}

/// Smallest integer at or above the explicit non-genericity threshold for
/// `d(X)`: for `c = 1` the max of `n` and the `n`-th root of
/// `n!(2^n·3 + 4 + (n+1)^2)`; for `c ≥ 2` additionally the `(n-c)`-th root
/// of `3n^n c^{n+1} 2^n + 1` and the `c`-th root of `n! c^n (3+c²+(n+1)²)`.
pub fn effective_bound(n: usize, c: usize) -> Result<BigInt> {
    if c < 1 || c >= n {
        return Err(Error::InvalidInput("need 1 <= c < n".into()));
    }
    let big = |x: usize| BigInt::from(x as i64);
    let mut fact = BigInt::one();
    for k in 2..=n {
        fact *= big(k);
    }
    let two_n = BigInt::from(2).pow(n as u32);
    let np1_sq = big(n + 1) * big(n + 1);
    let mut best = big(n);
    if c == 1 {
        let v = &fact * (&two_n * 3 + 4 + &np1_sq);
        best = best.max(ceil_nth_root(&v, n as u32));
    } else {
        let v1 = BigInt::from(3) * big(n).pow(n as u32) * big(c).pow(n as u32 + 1) * &two_n
            + BigInt::one();
        best = best.max(ceil_nth_root(&v1, (n - c) as u32));
        let v2 = &fact * big(c).pow(n as u32) * (BigInt::from(3) + big(c) * big(c) + &np1_sq);
        best = best.max(ceil_nth_root(&v2, c as u32));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobian::{JacobianSystem, Section};

    fn quintic() -> CIProblem {
        CIProblem::new(4, vec![5]).unwrap()
    }

    fn cubic_quartic() -> CIProblem {
        CIProblem::new(5, vec![3, 4]).unwrap()
    }

    #[test]
    fn problem_validation() {
        assert!(CIProblem::new(4, vec![]).is_err());
        assert!(CIProblem::new(3, vec![2, 2, 2]).is_err());
        let p = CIProblem::new(5, vec![4, 3]).unwrap();
        assert_eq!(p.degrees, vec![4, 3]);
        assert_eq!(p.d_x(), 1);
        assert_eq!(quintic().d_x(), 0);
    }

    #[test]
    fn linear_piece_of_cubic_quartic() {
        let prob = cubic_quartic();
        let deg = BigradedDegree { p: 0, q: 1 };
        assert_eq!(prob.ambient_dim(deg), 6);
        let forms = CIForms::disjoint_powers(&prob);
        assert_eq!(jacobian_dim(&prob, &forms, deg).unwrap(), 0);
        assert_eq!(quotient_dim(&prob, &forms, deg).unwrap(), 6);
        let mut rng = seeded_rng(5);
        let rand = CIForms::random(&prob, &mut rng);
        assert_eq!(quotient_dim(&prob, &rand, deg).unwrap(), 6);
    }

    #[test]
    fn single_hypersurface_collapse() {
        // the bigraded quotient at (p, q) equals the single-grading Jacobian
        // ring dimension at q + p·d
        for d in [5i64, 6] {
            let prob = CIProblem::new(4, vec![d]).unwrap();
            let forms = CIForms::disjoint_powers(&prob);
            let ring = CoxRing::new(Arc::new(Fan::projective_space(4)));
            let beta = ring
                .chow
                .variable_class(0)
                .unwrap()
                .scale(&BigInt::from(d));
            let f = Section::fermat(&ring, &beta).unwrap().unwrap();
            let sys = JacobianSystem::new(&ring, f).unwrap();
            let dx = prob.d_x();
            for p in 0..=3i64 {
                let bi = quotient_dim(&prob, &forms, BigradedDegree { p, q: dx }).unwrap();
                let gamma = ring
                    .chow
                    .variable_class(0)
                    .unwrap()
                    .scale(&BigInt::from(dx + p * d));
                let single = if p == 0 {
                    // no generator multiple lands in μ-degree 0
                    ring.piece_dim(&gamma).unwrap()
                } else {
                    sys.ring_dim(&gamma).unwrap()
                };
                assert_eq!(bi, single, "d={d} p={p}");
            }
        }
    }

    #[test]
    fn quintic_hodge_and_moduli() {
        let prob = quintic();
        let forms = CIForms::disjoint_powers(&prob);
        assert_eq!(ci_hodge(&prob, &forms, 0).unwrap(), 1);
        assert_eq!(ci_hodge(&prob, &forms, 1).unwrap(), 101);
        assert_eq!(ci_hodge(&prob, &forms, 2).unwrap(), 101);
        assert_eq!(ci_hodge(&prob, &forms, 3).unwrap(), 1);
        assert_eq!(ci_moduli(&prob, 3).unwrap(), 101);
    }

    #[test]
    fn cubic_quartic_hodge_symmetry() {
        // h^{3,0} = h^0(O_X(1)) = 6 and h^{2,1} = h^{1,2} = 224 (χ = −456
        // from the Chern class of the (3,4) threefold, b₃ = 460)
        let prob = cubic_quartic();
        let forms = CIForms::fermat(&prob);
        assert_eq!(ci_hodge(&prob, &forms, 0).unwrap(), 6);
        assert_eq!(ci_hodge(&prob, &forms, 1).unwrap(), 224);
        assert_eq!(ci_hodge(&prob, &forms, 2).unwrap(), 224);
        // random full-support forms agree on the computable pieces
        let (h1, a1) = generic_quotient_dim(&prob, BigradedDegree { p: 1, q: 1 }, 11, 2).unwrap();
        assert!(a1);
        assert_eq!(h1, 224);
        // the disjoint-powers fixture is singular: its graded pieces are
        // strictly larger and asymmetric
        let sing = CIForms::disjoint_powers(&prob);
        assert!(ci_hodge(&prob, &sing, 1).unwrap() > 224);
    }

    #[test]
    fn intersection_of_quadrics_has_no_moduli_identification() {
        let prob = CIProblem::new(6, vec![2, 2, 2]).unwrap();
        assert_eq!(prob.d_x(), -1);
        assert!(matches!(
            ci_moduli(&prob, 1),
            Err(Error::ModuliIdentificationUnavailable)
        ));
    }

    #[test]
    fn check_ci_rejects_low_dimension() {
        let prob = CIProblem::new(4, vec![2, 2]).unwrap();
        assert!(matches!(
            check_ci(&prob, 1),
            Err(Error::DimensionTooSmall(2, 3))
        ));
    }

    #[test]
    fn check_ci_collapses_for_one_hypersurface() {
        let prob = quintic();
        let ci = check_ci(&prob, 7).unwrap();
        let ring = CoxRing::new(Arc::new(Fan::projective_space(4)));
        let divisor = TorusDivisor::from_i64(&[1, 0, 0, 0, 0]);
        let hyp = crate::certify::check_toric(&ring, &divisor, 5, 7).unwrap();
        assert_eq!(ci.instance, "ci P^4 degrees (5)");
        assert_eq!(ci.h_top, hyp.h_top);
        assert_eq!(ci.h_next, hyp.h_next);
        assert_eq!(ci.mu, hyp.mu);
        assert_eq!(ci.rhs, hyp.rhs);
        assert_eq!(ci.verdict, hyp.verdict);
        assert_eq!(ci.p0_injective, hyp.p0_injective);
        assert_eq!(ci.p1_nonzero, hyp.p1_nonzero);
    }

    #[test]
    fn check_ci_cubic_quartic_certificate() {
        let cert = check_ci(&cubic_quartic(), 11).unwrap();
        assert_eq!(cert.h_top, "6");
        assert_eq!(cert.h_next, "224");
        // rhs = 3(⌊223/6⌋ + 1) = 114
        assert_eq!(cert.rhs, "114");
        assert!(cert.verdict_consistent());
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn effective_bounds() {
        // 24·(48+4+25) = 1848, ceil of its 4th root is 7
        assert_eq!(effective_bound(4, 1).unwrap(), BigInt::from(7));
        // 3·4⁴·2⁵·2⁴+1 = 393217 (ceil sqrt 628); 24·16·32 = 12288 (ceil sqrt 111)
        assert_eq!(effective_bound(4, 2).unwrap(), BigInt::from(628));
        assert!(effective_bound(4, 4).is_err());
    }
}
