//! Lattice polytopes in halfspace representation, exact lattice-point
//! enumeration, and Ehrhart polynomials.
//!
//! A polytope lives in `Z^dim` and is cut out by inequalities
//! `⟨normal, x⟩ + offset ≥ 0` with integer data. Projections and bounds are
//! computed by Fourier–Motzkin elimination; point counts by a pruned search
//! over the bounding box.

use std::collections::HashSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{interpolate_polynomial, IntMatrix, RationalPolynomial};

/// Halfspace `⟨normal, x⟩ + offset ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Inequality {
    pub fn new_i64(normal: &[i64], offset: i64) -> Self {
        Inequality {
            normal: normal.iter().map(|&x| BigInt::from(x)).collect(),
            offset: BigInt::from(offset),
        }
    }

    /// Joint gcd reduction: canonical representative of the halfspace.
    pub fn canonical(mut self) -> Self {
        let mut g = self.offset.abs();
        for x in &self.normal {
            g = g.gcd(x);
        }
        if !g.is_zero() && !g.is_one() {
            for x in self.normal.iter_mut() {
                *x = &*x / &g;
            }
            self.offset = &self.offset / &g;
        }
        self
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        let mut s = self.offset.clone();
        for (a, x) in self.normal.iter().zip(point) {
            s += a * x;
        }
        s
    }

    fn is_constant(&self) -> bool {
        self.normal.iter().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone)]
pub struct LatticePolytope {
    pub dim: usize,
    pub ineqs: Vec<Inequality>,
}

impl LatticePolytope {
    pub fn new(dim: usize, ineqs: Vec<Inequality>) -> Result<Self> {
        for q in &ineqs {
            if q.normal.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "inequality has {} coefficients, expected {}",
                    q.normal.len(),
                    dim
                )));
            }
        }
        Ok(LatticePolytope {
            dim,
            ineqs: ineqs.into_iter().map(Inequality::canonical).collect(),
        })
    }

    /// Standard simplex `conv(0, e_1, ..., e_n)`.
    pub fn standard_simplex(dim: usize) -> Self {
        let mut ineqs = Vec::with_capacity(dim + 1);
        for i in 0..dim {
            let mut n = vec![0i64; dim];
            n[i] = 1;
            ineqs.push(Inequality::new_i64(&n, 0));
        }
        ineqs.push(Inequality {
            normal: vec![BigInt::from(-1); dim],
            offset: BigInt::one(),
        });
        LatticePolytope { dim, ineqs }
    }

    /// Scale by a nonnegative integer factor: offsets are multiplied by `t`.
    pub fn dilate(&self, t: &BigInt) -> Self {
        LatticePolytope {
            dim: self.dim,
            ineqs: self
                .ineqs
                .iter()
                .map(|q| Inequality {
                    normal: q.normal.clone(),
                    offset: &q.offset * t,
                })
                .collect(),
        }
    }

    /// Integer bounding box per coordinate; `None` when the feasible region
    /// is empty over the rationals.
    pub fn bounding_box(&self) -> Result<Option<Vec<(BigInt, BigInt)>>> {
        let mut box_ = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            let mut sys = self.ineqs.clone();
            for v in 0..self.dim {
                if v != k {
                    sys = fm_eliminate(&sys, v);
                }
            }
            let mut lo: Option<BigRational> = None;
            let mut hi: Option<BigRational> = None;
            for q in &sys {
                let a = &q.normal[k];
                if a.is_zero() {
                    if q.offset.is_negative() {
                        return Ok(None);
                    }
                    continue;
                }
                // a * x + c >= 0
                let bound = BigRational::new(-q.offset.clone(), a.clone());
                if a.is_positive() {
                    lo = Some(match lo {
                        Some(l) if l >= bound => l,
                        _ => bound,
                    });
                } else {
                    hi = Some(match hi {
                        Some(h) if h <= bound => h,
                        _ => bound,
                    });
                }
            }
            let (Some(lo), Some(hi)) = (lo, hi) else {
                return Err(Error::Unbounded(format!("coordinate {k} has no finite bound")));
            };
            if lo > hi {
                return Ok(None);
            }
            box_.push((lo.ceil().to_integer(), hi.floor().to_integer()));
        }
        Ok(Some(box_))
    }

    pub fn is_bounded(&self) -> bool {
        !matches!(self.bounding_box(), Err(Error::Unbounded(_)))
    }

    /// All lattice points (sorted lexicographically by construction).
    pub fn lattice_points(&self) -> Result<Vec<Vec<i64>>> {
        let mut pts = Vec::new();
        enumerate(self.dim, &self.ineqs, &mut |p| pts.push(p.to_vec()))?;
        Ok(pts)
    }

    pub fn count_points(&self) -> Result<u64> {
        let mut n = 0u64;
        enumerate(self.dim, &self.ineqs, &mut |_| n += 1)?;
        Ok(n)
    }

    /// Lattice points strictly inside every facet.
    pub fn count_interior_points(&self) -> Result<u64> {
        let strict: Vec<Inequality> = self
            .facets()?
            .into_iter()
            .map(|q| Inequality {
                normal: q.normal,
                offset: q.offset - BigInt::one(),
            })
            .collect();
        let mut n = 0u64;
        enumerate(self.dim, &strict, &mut |_| n += 1)?;
        Ok(n)
    }

    /// Irredundant facet inequalities. Assumes the polytope is
    /// full-dimensional (facets then correspond to irredundant halfspaces).
    pub fn facets(&self) -> Result<Vec<Inequality>> {
        let mut seen = HashSet::new();
        let mut uniq = Vec::new();
        for q in &self.ineqs {
            let c = q.clone().canonical();
            if seen.insert(c.clone()) {
                uniq.push(c);
            }
        }
        let mut keep = Vec::new();
        for i in 0..uniq.len() {
            let others: Vec<Inequality> = uniq
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            match minimize(&others, &uniq[i], self.dim)? {
                Some(min) if !min.is_negative() => {} // implied by the rest
                _ => keep.push(uniq[i].clone()),
            }
        }
        Ok(keep)
    }

    /// Count of lattice points in the relative interior of each facet.
    pub fn facet_interior_counts(&self) -> Result<Vec<u64>> {
        let facets = self.facets()?;
        let mut out = Vec::with_capacity(facets.len());
        for (i, f) in facets.iter().enumerate() {
            let mut sys = Vec::with_capacity(facets.len() + 1);
            // pin to the facet hyperplane
            sys.push(f.clone());
            sys.push(Inequality {
                normal: f.normal.iter().map(|x| -x).collect(),
                offset: -f.offset.clone(),
            });
            for (j, g) in facets.iter().enumerate() {
                if j != i {
                    sys.push(Inequality {
                        normal: g.normal.clone(),
                        offset: &g.offset - BigInt::one(),
                    });
                }
            }
            let mut n = 0u64;
            enumerate(self.dim, &sys, &mut |_| n += 1)?;
            out.push(n);
        }
        Ok(out)
    }

    /// Ehrhart polynomial `E(t) = #(tP ∩ Z^dim)`, computed by interpolation
    /// at `t = 0..=dim` and verified: `E(0) = 1` and integer values out to
    /// `t = dim + 2`.
    pub fn ehrhart(&self) -> Result<RationalPolynomial> {
        let nodes: Vec<BigInt> = (0..=self.dim as i64).map(BigInt::from).collect();
        let mut values = Vec::with_capacity(nodes.len());
        for t in &nodes {
            let c = self.dilate(t).count_points()?;
            values.push(BigRational::from(BigInt::from(c)));
        }
        if values[0] != BigRational::one() {
            return Err(Error::InvalidInput(
                "empty polytope has no Ehrhart polynomial".into(),
            ));
        }
        let p = interpolate_polynomial(&nodes, &values)?;
        for t in 0..=(self.dim as i64 + 2) {
            let v = p.eval(&BigInt::from(t));
            if !v.is_integer() {
                return Err(Error::Internal(format!(
                    "Ehrhart candidate non-integral at t = {t}"
                )));
            }
        }
        Ok(p)
    }

    /// Euclidean volume as the degree-`dim` Ehrhart coefficient (exact
    /// rational); zero exactly when the polytope is lower-dimensional.
    pub fn volume(&self) -> Result<BigRational> {
        Ok(self.ehrhart()?.coeff(self.dim))
    }

    /// Interior count of the `t`-th dilate predicted by reciprocity:
    /// `(-1)^deg E(-t)`.
    pub fn reciprocity_interior(&self, t: i64) -> Result<BigInt> {
        let e = self.ehrhart()?;
        let d = e.degree();
        let v = e.eval(&BigInt::from(-t));
        let s = if d % 2 == 0 { v } else { -v };
        if !s.is_integer() {
            return Err(Error::Internal("reciprocity value not integral".into()));
        }
        Ok(s.to_integer())
    }
}

/// Eliminate coordinate `var` by Fourier–Motzkin; the output inequalities
/// have a zero coefficient there and describe the exact projection over Q.
pub fn fm_eliminate(ineqs: &[Inequality], var: usize) -> Vec<Inequality> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    let mut seen: HashSet<Inequality> = HashSet::new();
    for q in ineqs {
        match q.normal[var].sign() {
            num::bigint::Sign::Plus => pos.push(q),
            num::bigint::Sign::Minus => neg.push(q),
            num::bigint::Sign::NoSign => {
                let c = q.clone().canonical();
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
        }
    }
    for p in &pos {
        for n in &neg {
            let a = p.normal[var].clone();
            let b = -n.normal[var].clone(); // positive
            let mut normal = Vec::with_capacity(p.normal.len());
            for (pc, nc) in p.normal.iter().zip(&n.normal) {
                normal.push(&b * pc + &a * nc);
            }
            let q = Inequality {
                normal,
                offset: &b * &p.offset + &a * &n.offset,
            }
            .canonical();
            debug_assert!(q.normal[var].is_zero());
            if !q.is_constant() || q.offset.is_negative() {
                if seen.insert(q.clone()) {
                    out.push(q);
                }
            }
        }
    }
    out
}

/// Exact minimum of `⟨objective.normal, x⟩ + objective.offset` over the
/// region cut out by `ineqs`. `None` means unbounded below (or the region is
/// empty, in which case callers treat the constraint as irrelevant anyway).
fn minimize(ineqs: &[Inequality], objective: &Inequality, dim: usize) -> Result<Option<BigRational>> {
    // extra variable y with y >= objective(x); project out x, read y's floor
    let mut sys: Vec<Inequality> = ineqs
        .iter()
        .map(|q| {
            let mut n = q.normal.clone();
            n.push(BigInt::zero());
            Inequality {
                normal: n,
                offset: q.offset.clone(),
            }
        })
        .collect();
    let mut n = objective.normal.iter().map(|x| -x).collect::<Vec<_>>();
    n.push(BigInt::one());
    sys.push(Inequality {
        normal: n,
        offset: -objective.offset.clone(),
    });
    for v in 0..dim {
        sys = fm_eliminate(&sys, v);
    }
    let mut lo: Option<BigRational> = None;
    for q in &sys {
        let a = &q.normal[dim];
        if a.is_zero() {
            if q.offset.is_negative() {
                return Ok(None); // empty region
            }
            continue;
        }
        if a.is_positive() {
            let bound = BigRational::new(-q.offset.clone(), a.clone());
            lo = Some(match lo {
                Some(l) if l >= bound => l,
                _ => bound,
            });
        }
    }
    Ok(lo)
}

/// Visit every lattice point satisfying all inequalities, by depth-first
/// search over the bounding box with suffix-bound pruning. Coordinates are
/// kept in `i128` after a range check.
fn enumerate(dim: usize, ineqs: &[Inequality], visit: &mut dyn FnMut(&[i64])) -> Result<()> {
    let poly = LatticePolytope {
        dim,
        ineqs: ineqs.to_vec(),
    };
    let Some(box_) = poly.bounding_box()? else {
        return Ok(());
    };
    let to128 = |x: &BigInt| -> Result<i128> {
        x.to_i128()
            .ok_or_else(|| Error::TooLarge("coefficient exceeds i128 in enumeration".into()))
    };
    let bounds: Vec<(i128, i128)> = box_
        .iter()
        .map(|(l, h)| Ok((to128(l)?, to128(h)?)))
        .collect::<Result<_>>()?;
    let m = ineqs.len();
    let mut normals = Vec::with_capacity(m);
    let mut offsets = Vec::with_capacity(m);
    for q in ineqs {
        let n: Vec<i128> = q.normal.iter().map(&to128).collect::<Result<_>>()?;
        normals.push(n);
        offsets.push(to128(&q.offset)?);
    }
    // suffix_max[i][k]: largest achievable contribution of coordinates k..
    // to inequality i within the box
    let mut suffix_max = vec![vec![0i128; dim + 1]; m];
    for i in 0..m {
        for k in (0..dim).rev() {
            let a = normals[i][k];
            let best = if a >= 0 { a * bounds[k].1 } else { a * bounds[k].0 };
            suffix_max[i][k] = suffix_max[i][k + 1] + best;
        }
    }

    let mut point = vec![0i64; dim];
    let mut partial = vec![vec![0i128; m]]; // partial sums per depth
    partial.reserve(dim);

    fn dfs(
        k: usize,
        dim: usize,
        bounds: &[(i128, i128)],
        normals: &[Vec<i128>],
        offsets: &[i128],
        suffix_max: &[Vec<i128>],
        point: &mut [i64],
        prev: &[i128],
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if k == dim {
            visit(point);
            return;
        }
        for x in bounds[k].0..=bounds[k].1 {
            let mut cur = Vec::with_capacity(prev.len());
            let mut ok = true;
            for i in 0..prev.len() {
                let s = prev[i] + normals[i][k] * x;
                if s + suffix_max[i][k + 1] + offsets[i] < 0 {
                    ok = false;
                }
                cur.push(s);
            }
            if ok {
                point[k] = x as i64;
                dfs(
                    k + 1,
                    dim,
                    bounds,
                    normals,
                    offsets,
                    suffix_max,
                    point,
                    &cur,
                    visit,
                );
            }
        }
    }

    // a pure-constant infeasibility (no variables) is caught by bounding_box,
    // but handle dim == 0 directly
    if dim == 0 {
        if offsets.iter().all(|&c| c >= 0) {
            visit(&[]);
        }
        return Ok(());
    }
    dfs(
        0,
        dim,
        &bounds,
        &normals,
        &offsets,
        &suffix_max,
        &mut point,
        &partial[0],
        visit,
    );
    Ok(())
}

/// H-representation of the simplex spanned by `dim + 1` affinely independent
/// lattice vertices.
pub fn simplex_from_vertices(vertices: &[Vec<i64>]) -> Result<LatticePolytope> {
    let dim = vertices
        .first()
        .ok_or_else(|| Error::InvalidInput("no vertices".into()))?
        .len();
    if vertices.len() != dim + 1 {
        return Err(Error::InvalidInput(format!(
            "a {dim}-simplex needs {} vertices",
            dim + 1
        )));
    }
    let mut ineqs = Vec::with_capacity(dim + 1);
    for i in 0..vertices.len() {
        let others: Vec<&Vec<i64>> = vertices
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v)
            .collect();
        let base = others[0];
        let rows: Vec<Vec<BigInt>> = others[1..]
            .iter()
            .map(|v| {
                v.iter()
                    .zip(base)
                    .map(|(&a, &b)| BigInt::from(a - b))
                    .collect()
            })
            .collect();
        let kernel = IntMatrix::new(rows, dim).right_kernel();
        if kernel.len() != 1 {
            return Err(Error::InvalidInput(
                "vertices are not affinely independent".into(),
            ));
        }
        let mut normal = kernel.into_iter().next().unwrap();
        let mut offset = -normal
            .iter()
            .zip(base)
            .map(|(n, &b)| n * BigInt::from(b))
            .sum::<BigInt>();
        // orient toward the omitted vertex
        let val = normal
            .iter()
            .zip(&vertices[i])
            .map(|(n, &x)| n * BigInt::from(x))
            .sum::<BigInt>()
            + &offset;
        if val.is_negative() {
            for x in normal.iter_mut() {
                *x = -x.clone();
            }
            offset = -offset;
        } else if val.is_zero() {
            return Err(Error::InvalidInput(
                "vertices are not affinely independent".into(),
            ));
        }
        ineqs.push(Inequality { normal, offset });
    }
    LatticePolytope::new(dim, ineqs)
}

/// Random full-dimensional lattice simplex with vertex coordinates in
/// `[-coord_bound, coord_bound]`.
pub fn random_lattice_simplex<R: Rng>(
    dim: usize,
    coord_bound: i64,
    rng: &mut R,
) -> LatticePolytope {
    loop {
        let vertices: Vec<Vec<i64>> = (0..=dim)
            .map(|_| {
                (0..dim)
                    .map(|_| rng.gen_range(-coord_bound..=coord_bound))
                    .collect()
            })
            .collect();
        if let Ok(p) = simplex_from_vertices(&vertices) {
            return p;
        }
    }
}

/// Cartesian product, with the factors' inequalities acting on disjoint
/// blocks of coordinates.
pub fn product(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    let dim = p.dim + q.dim;
    let mut ineqs = Vec::with_capacity(p.ineqs.len() + q.ineqs.len());
    for a in &p.ineqs {
        let mut normal = a.normal.clone();
        normal.extend(std::iter::repeat_with(BigInt::zero).take(q.dim));
        ineqs.push(Inequality {
            normal,
            offset: a.offset.clone(),
        });
    }
    for b in &q.ineqs {
        let mut normal: Vec<BigInt> = std::iter::repeat_with(BigInt::zero).take(p.dim).collect();
        normal.extend(b.normal.iter().cloned());
        ineqs.push(Inequality {
            normal,
            offset: b.offset.clone(),
        });
    }
    LatticePolytope::new(dim, ineqs)
}

/// Random axis-aligned lattice box with side lengths in `1..=max_side`,
/// translated by coordinates in `[-max_side, max_side]`.
pub fn random_lattice_box<R: Rng>(dim: usize, max_side: i64, rng: &mut R) -> LatticePolytope {
    let mut ineqs = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        let lo = rng.gen_range(-max_side..=max_side);
        let hi = lo + rng.gen_range(1..=max_side);
        let mut n = vec![0i64; dim];
        n[i] = 1;
        ineqs.push(Inequality::new_i64(&n, -lo));
        n[i] = -1;
        ineqs.push(Inequality::new_i64(&n, hi));
    }
    LatticePolytope::new(dim, ineqs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unit_cube(dim: usize) -> LatticePolytope {
        let mut ineqs = Vec::new();
        for i in 0..dim {
            let mut lo = vec![0i64; dim];
            lo[i] = 1;
            ineqs.push(Inequality::new_i64(&lo, 0));
            let mut hi = vec![0i64; dim];
            hi[i] = -1;
            ineqs.push(Inequality::new_i64(&hi, 1));
        }
        LatticePolytope::new(dim, ineqs).unwrap()
    }

    #[test]
    fn cube_counts_and_volume() {
        let c = unit_cube(3);
        assert_eq!(c.count_points().unwrap(), 8);
        assert_eq!(c.dilate(&BigInt::from(2)).count_points().unwrap(), 27);
        assert_eq!(c.volume().unwrap(), BigRational::one());
        assert_eq!(c.facets().unwrap().len(), 6);
        assert_eq!(c.count_interior_points().unwrap(), 0);
        assert_eq!(
            c.dilate(&BigInt::from(3)).count_interior_points().unwrap(),
            8
        );
    }

    #[test]
    fn simplex_ehrhart_is_binomial() {
        // E(t) for the standard n-simplex is C(t+n, n)
        for n in 1..=4usize {
            let s = LatticePolytope::standard_simplex(n);
            let e = s.ehrhart().unwrap();
            for t in 0..6i64 {
                let mut expect = BigRational::one();
                for k in 1..=n as i64 {
                    expect *= BigRational::new(BigInt::from(t + k), BigInt::from(k));
                }
                assert_eq!(e.eval(&BigInt::from(t)), expect, "n={n} t={t}");
            }
            let mut fact = BigInt::one();
            for k in 2..=n {
                fact *= BigInt::from(k);
            }
            assert_eq!(
                s.volume().unwrap(),
                BigRational::new(BigInt::one(), fact)
            );
        }
    }

    #[test]
    fn simplex_interior_matches_reciprocity() {
        let s = LatticePolytope::standard_simplex(3);
        for t in 1..=5i64 {
            let direct = s
                .dilate(&BigInt::from(t))
                .count_interior_points()
                .unwrap();
            let recip = s.reciprocity_interior(t).unwrap();
            assert_eq!(BigInt::from(direct), recip, "t={t}");
        }
    }

    #[test]
    fn redundant_inequality_is_dropped() {
        let mut ineqs = unit_cube(2).ineqs;
        ineqs.push(Inequality::new_i64(&[1, 1], 5)); // far away, redundant
        ineqs.push(Inequality::new_i64(&[1, 0], 0)); // duplicate
        let p = LatticePolytope::new(2, ineqs).unwrap();
        assert_eq!(p.facets().unwrap().len(), 4);
    }

    #[test]
    fn empty_polytope_counts_zero() {
        let p = LatticePolytope::new(
            1,
            vec![
                Inequality::new_i64(&[1], 0),
                Inequality::new_i64(&[-1], -1),
            ],
        )
        .unwrap();
        assert_eq!(p.count_points().unwrap(), 0);
    }

    #[test]
    fn unbounded_is_detected() {
        let p = LatticePolytope::new(2, vec![Inequality::new_i64(&[1, 0], 0)]).unwrap();
        assert!(matches!(p.bounding_box(), Err(Error::Unbounded(_))));
        assert!(!p.is_bounded());
    }

    #[test]
    fn facet_interior_counts_of_dilated_simplex() {
        // facets of t·(standard 2-simplex) are segments with t+1 lattice
        // points, so t-1 interior each
        let s = LatticePolytope::standard_simplex(2).dilate(&BigInt::from(4));
        let counts = s.facet_interior_counts().unwrap();
        assert_eq!(counts.len(), 3);
        assert!(counts.iter().all(|&c| c == 3));
    }

    #[test]
    fn product_multiplies_counts() {
        let s = LatticePolytope::standard_simplex(2);
        let b = unit_cube(1).dilate(&BigInt::from(3));
        let p = product(&s, &b).unwrap();
        assert_eq!(p.dim, 3);
        assert_eq!(p.count_points().unwrap(), 3 * 4);
        let e = p.ehrhart().unwrap();
        for t in 0..5i64 {
            let es = s.dilate(&BigInt::from(t)).count_points().unwrap();
            let eb = b.dilate(&BigInt::from(t)).count_points().unwrap();
            assert_eq!(
                e.eval(&BigInt::from(t)),
                BigRational::from(BigInt::from(es * eb))
            );
        }
    }

    #[test]
    fn random_boxes_count_as_side_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let p = random_lattice_box(3, 4, &mut rng);
            let bb = p.bounding_box().unwrap().unwrap();
            let expect: u64 = bb
                .iter()
                .map(|(lo, hi)| {
                    u64::try_from((hi - lo) + BigInt::one()).unwrap()
                })
                .product();
            assert_eq!(p.count_points().unwrap(), expect);
        }
    }

    #[test]
    fn random_simplices_count_vertices_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let dim = rng.gen_range(2..=3);
            let p = random_lattice_simplex(dim, 4, &mut rng);
            assert!(p.is_bounded());
            assert!(p.count_points().unwrap() >= (dim as u64) + 1);
            let e = p.ehrhart().unwrap();
            assert_eq!(e.eval(&BigInt::zero()), BigRational::from_i64(1).unwrap());
        }
    }
}
