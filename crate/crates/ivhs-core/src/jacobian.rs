//! Graded pieces of the homogeneous coordinate ring, sections, and Jacobian
//! ideals, with exact rank computations.
//!
//! Three engines compute ranks and quotient dimensions:
//! * a combinatorial path when every partial derivative is a single monomial
//!   (Fermat-type sections), where the Jacobian ideal is a monomial ideal;
//! * a guarded dense path doing fraction-free elimination on the actual
//!   multiplication matrix;
//! * partial certificates (kernel intersections, syzygy rank bounds) for
//!   questions that only need one-sided answers on large pieces.

use std::collections::HashMap;
use std::sync::Arc;

use num::bigint::BigInt;
use num::{ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::{Inequality, LatticePolytope};
use crate::linalg::{echelonize, reduce_row, IntMatrix};
use crate::toric::{ChowPresentation, DegreeClass, Fan};

/// Cells and pivots above which dense elimination is refused; callers fall
/// back to a combinatorial or partial certificate.
const MAX_DENSE_CELLS: usize = 4_000_000;
const MAX_DENSE_PIVOTS: usize = 900;

/// Homogeneous coordinate ring of a complete simplicial fan, graded by the
/// divisor class group.
pub struct CoxRing {
    pub chow: ChowPresentation,
}

impl CoxRing {
    pub fn new(fan: Arc<Fan>) -> Self {
        CoxRing {
            chow: ChowPresentation::new(fan),
        }
    }

    pub fn fan(&self) -> &Fan {
        &self.chow.fan
    }

    pub fn n_vars(&self) -> usize {
        self.fan().n_rays()
    }

    /// Exponent vectors of the monomials of the graded piece for `class`,
    /// sorted by total degree and then lexicographically. A monomial `z^a`
    /// lies in the piece exactly when `a = V m + rep` for a lattice point `m`
    /// (`V` the ray matrix), which is a bounded polytope for complete fans.
    pub fn monomial_basis(&self, class: &DegreeClass) -> Result<Vec<Vec<i64>>> {
        let fan = self.fan();
        if class.rep.len() != fan.n_rays() {
            return Err(Error::InvalidInput("class representative mismatch".into()));
        }
        let ineqs = fan
            .rays
            .iter()
            .zip(&class.rep)
            .map(|(ray, c)| Inequality {
                normal: ray.iter().map(|&x| BigInt::from(x)).collect(),
                offset: c.clone(),
            })
            .collect();
        let poly = LatticePolytope::new(fan.dim, ineqs)?;
        let points = poly.lattice_points()?;
        let mut out = Vec::with_capacity(points.len());
        for m in points {
            let a: Vec<i64> = fan
                .rays
                .iter()
                .zip(&class.rep)
                .map(|(ray, c)| {
                    let dot: i64 = ray.iter().zip(&m).map(|(&r, &x)| r * x).sum();
                    let c = c.to_i64().ok_or_else(|| {
                        Error::TooLarge("class representative exceeds i64".into())
                    })?;
                    Ok(dot + c)
                })
                .collect::<Result<_>>()?;
            debug_assert!(a.iter().all(|&x| x >= 0));
            out.push(a);
        }
        out.sort_by(|a, b| {
            let (sa, sb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            sa.cmp(&sb).then_with(|| a.cmp(b))
        });
        Ok(out)
    }

    pub fn piece_dim(&self, class: &DegreeClass) -> Result<usize> {
        Ok(self.monomial_basis(class)?.len())
    }
}

pub fn index_map(basis: &[Vec<i64>]) -> HashMap<Vec<i64>, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), i))
        .collect()
}

/// Homogeneous element of the coordinate ring: integer coefficients over
/// exponent vectors.
#[derive(Debug, Clone)]
pub struct Section {
    pub class: DegreeClass,
    pub terms: Vec<(BigInt, Vec<i64>)>,
}

impl Section {
    /// Section with uniformly random nonzero coefficients in `1..=20` over
    /// the whole monomial basis.
    pub fn random<R: Rng>(ring: &CoxRing, class: &DegreeClass, rng: &mut R) -> Result<Section> {
        let basis = ring.monomial_basis(class)?;
        if basis.is_empty() {
            return Err(Error::EmptyGradedPiece);
        }
        let terms = basis
            .into_iter()
            .map(|a| (BigInt::from(rng.gen_range(1i64..=20)), a))
            .collect();
        Ok(Section {
            class: class.clone(),
            terms,
        })
    }

    /// Sum of one pure power of each variable, when the graded piece contains
    /// one for every variable. Its partial derivatives are then single
    /// monomials and the Jacobian ideal is a monomial ideal.
    pub fn fermat(ring: &CoxRing, class: &DegreeClass) -> Result<Option<Section>> {
        let basis = ring.monomial_basis(class)?;
        let nv = ring.n_vars();
        let mut pure: Vec<Option<Vec<i64>>> = vec![None; nv];
        for a in &basis {
            let support: Vec<usize> = (0..nv).filter(|&j| a[j] != 0).collect();
            if support.len() == 1 && pure[support[0]].is_none() {
                pure[support[0]] = Some(a.clone());
            }
        }
        if pure.iter().any(Option::is_none) {
            return Ok(None);
        }
        Ok(Some(Section {
            class: class.clone(),
            terms: pure
                .into_iter()
                .map(|a| (BigInt::from(1), a.unwrap()))
                .collect(),
        }))
    }

    /// `∂/∂z_j`; the class drops by `[D_j]`.
    pub fn partial(&self, ring: &CoxRing, j: usize) -> Result<Section> {
        let dj = ring.chow.variable_class(j)?;
        let terms = self
            .terms
            .iter()
            .filter(|(_, a)| a[j] > 0)
            .map(|(c, a)| {
                let mut b = a.clone();
                b[j] -= 1;
                (c * BigInt::from(a[j]), b)
            })
            .collect();
        Ok(Section {
            class: self.class.sub(&dj),
            terms,
        })
    }
}

/// A section together with its partial derivatives: everything needed to
/// compute pieces of its Jacobian ideal and ring.
pub struct JacobianSystem<'r> {
    pub ring: &'r CoxRing,
    pub f: Section,
    pub partials: Vec<Section>,
}

impl<'r> JacobianSystem<'r> {
    pub fn new(ring: &'r CoxRing, f: Section) -> Result<Self> {
        let partials = (0..ring.n_vars())
            .map(|j| f.partial(ring, j))
            .collect::<Result<Vec<_>>>()?;
        Ok(JacobianSystem { ring, f, partials })
    }

    /// Exponents of the partials when each is a single monomial (the
    /// Jacobian ideal is then the monomial ideal they generate).
    pub fn monomial_generators(&self) -> Option<Vec<Vec<i64>>> {
        let mut gens = Vec::new();
        for p in &self.partials {
            match p.terms.len() {
                0 => {} // variable absent from f; no generator
                1 => gens.push(p.terms[0].1.clone()),
                _ => return None,
            }
        }
        Some(gens)
    }

    fn monomial_in_ideal(gens: &[Vec<i64>], a: &[i64]) -> bool {
        gens.iter()
            .any(|g| g.iter().zip(a).all(|(&gi, &ai)| ai >= gi))
    }

    /// Generator blocks of the Jacobian piece in degree `gamma`: for each
    /// variable `j` with nonzero partial, the monomials `h` of the
    /// complementary piece `gamma - deg f + [D_j]`, contributing `h · ∂f/∂z_j`.
    pub fn column_layout(&self, gamma: &DegreeClass) -> Result<Vec<(usize, Vec<Vec<i64>>)>> {
        let mut blocks = Vec::new();
        for (j, p) in self.partials.iter().enumerate() {
            if p.terms.is_empty() {
                continue;
            }
            let h_class = gamma.sub(&p.class);
            blocks.push((j, self.ring.monomial_basis(&h_class)?));
        }
        Ok(blocks)
    }

    /// Dense multiplication matrix of the Jacobian piece: rows indexed by the
    /// monomials of `S_gamma`, columns by the generators of `column_layout`.
    /// Refuses oversized instances with `Error::TooLarge`.
    pub fn matrix(&self, gamma: &DegreeClass) -> Result<IntMatrix> {
        let target = self.ring.monomial_basis(gamma)?;
        let layout = self.column_layout(gamma)?;
        let ncols: usize = layout.iter().map(|(_, b)| b.len()).sum();
        check_dense_size(target.len(), ncols)?;
        let idx = index_map(&target);
        let mut rows = vec![vec![BigInt::zero(); ncols]; target.len()];
        let mut col = 0usize;
        for (j, hs) in &layout {
            let p = &self.partials[*j];
            for h in hs {
                for (c, a) in &p.terms {
                    let e: Vec<i64> = h.iter().zip(a).map(|(&x, &y)| x + y).collect();
                    let r = *idx
                        .get(&e)
                        .ok_or_else(|| Error::Internal("product escapes graded piece".into()))?;
                    rows[r][col] += c;
                }
                col += 1;
            }
        }
        Ok(IntMatrix::new(rows, ncols))
    }

    /// `dim J_gamma`, via the monomial path when available, else dense.
    pub fn ideal_dim(&self, gamma: &DegreeClass) -> Result<usize> {
        if let Some(gens) = self.monomial_generators() {
            let target = self.ring.monomial_basis(gamma)?;
            return Ok(target
                .iter()
                .filter(|a| Self::monomial_in_ideal(&gens, a))
                .count());
        }
        Ok(self.matrix(gamma)?.rank())
    }

    /// `dim (S/J)_gamma`.
    pub fn ring_dim(&self, gamma: &DegreeClass) -> Result<usize> {
        Ok(self.ring.piece_dim(gamma)? - self.ideal_dim(gamma)?)
    }

    /// Monomial basis of `(S/J)_gamma` on the monomial path.
    pub fn quotient_monomial_basis(&self, gamma: &DegreeClass) -> Result<Option<Vec<Vec<i64>>>> {
        let Some(gens) = self.monomial_generators() else {
            return Ok(None);
        };
        let target = self.ring.monomial_basis(gamma)?;
        Ok(Some(
            target
                .into_iter()
                .filter(|a| !Self::monomial_in_ideal(&gens, a))
                .collect(),
        ))
    }
}

pub(crate) fn check_dense_size(rows: usize, cols: usize) -> Result<()> {
    if rows * cols > MAX_DENSE_CELLS || rows.min(cols) > MAX_DENSE_PIVOTS {
        return Err(Error::TooLarge(format!(
            "dense piece is {rows} x {cols}"
        )));
    }
    Ok(())
}

/// Dimension of `W = { g ∈ S_e : g · S_c ⊆ J_{e+c} }`, the pullback of the
/// kernel of the multiplication map `(S/J)_e → Hom((S/J)_c, (S/J)_{e+c})`.
/// `W` always contains `J_e`; it is computed by intersecting, one multiplier
/// monomial `h` at a time, the pullbacks of `im(J_{e+c})`.
pub fn multiplication_kernel_dim(
    sys: &JacobianSystem,
    e_class: &DegreeClass,
    c_class: &DegreeClass,
) -> Result<usize> {
    // monomial path: no cancellation is possible across distinct monomials,
    // so W is spanned by J_e plus the quotient monomials killed by every
    // multiplier
    if let Some(gens) = sys.monomial_generators() {
        let ideal = sys.ideal_dim(e_class)?;
        let qe = sys.quotient_monomial_basis(e_class)?.unwrap();
        let qc = sys.quotient_monomial_basis(c_class)?.unwrap();
        let killed = qe
            .iter()
            .filter(|g| {
                !qc.iter().any(|h| {
                    let e: Vec<i64> = g.iter().zip(h.iter()).map(|(&x, &y)| x + y).collect();
                    !JacobianSystem::monomial_in_ideal(&gens, &e)
                })
            })
            .count();
        return Ok(ideal + killed);
    }
    let target_class = e_class.add(c_class);
    let ideal_dim_beta = sys.ideal_dim(e_class)?;
    let basis_e = sys.ring.monomial_basis(e_class)?;
    let basis_c = sys.ring.monomial_basis(c_class)?;
    let basis_t = sys.ring.monomial_basis(&target_class)?;
    let b = sys.matrix(&target_class)?;
    multiplier_kernel_dim(&basis_e, &basis_c, &basis_t, &b, ideal_dim_beta)
}

/// Core of the forced-kernel computation, over arbitrary exponent-vector
/// bases of the three pieces: the dimension of the space of `basis_e`
/// combinations whose product with every `basis_c` monomial lands in the
/// column span of `b` (whose rows are indexed by `basis_t`). `floor` is a
/// known lower bound used for early exit.
pub fn multiplier_kernel_dim(
    basis_e: &[Vec<i64>],
    basis_c: &[Vec<i64>],
    basis_t: &[Vec<i64>],
    b: &IntMatrix,
    floor: usize,
) -> Result<usize> {
    let idx_t = index_map(basis_t);
    let bcols = b.ncols;

    // W starts as the whole piece (identity columns)
    let mut w: Vec<Vec<BigInt>> = (0..basis_e.len())
        .map(|i| {
            let mut v = vec![BigInt::zero(); basis_e.len()];
            v[i] = BigInt::from(1);
            v
        })
        .collect();

    for h in basis_c {
        if w.len() == floor {
            break;
        }
        let ncols = w.len() + bcols;
        check_dense_size(basis_t.len(), ncols)?;
        let mut rows = vec![vec![BigInt::zero(); ncols]; basis_t.len()];
        for (wi, wv) in w.iter().enumerate() {
            for (k, a) in basis_e.iter().enumerate() {
                if wv[k].is_zero() {
                    continue;
                }
                let e: Vec<i64> = a.iter().zip(h).map(|(&x, &y)| x + y).collect();
                let r = *idx_t
                    .get(&e)
                    .ok_or_else(|| Error::Internal("product escapes graded piece".into()))?;
                rows[r][wi] += &wv[k];
            }
        }
        for (r, row) in b.rows.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                rows[r][w.len() + c] = x.clone();
            }
        }
        let kernel = IntMatrix::new(rows, ncols).right_kernel();
        // the new W is spanned by the W-parts of the kernel vectors
        let mut projected: Vec<Vec<BigInt>> = kernel
            .into_iter()
            .map(|k| {
                let mut u: Vec<BigInt> = k[..w.len()].to_vec();
                reduce_row(&mut u);
                u
            })
            .collect();
        let pivots = echelonize(&mut projected, w.len());
        let _ = pivots;
        w = projected
            .into_iter()
            .map(|u| {
                let mut v = vec![BigInt::zero(); basis_e.len()];
                for (k, uk) in u.iter().enumerate() {
                    if !uk.is_zero() {
                        for (m, wm) in w[k].iter().enumerate() {
                            v[m] += uk * wm;
                        }
                    }
                }
                reduce_row(&mut v);
                v
            })
            .collect();
    }

    if w.len() < floor {
        return Err(Error::Internal(
            "forced-rank subspace dropped below the ideal piece".into(),
        ));
    }
    Ok(w.len())
}

/// Injectivity of `(S/J)_β → Hom((S/J)_c, (S/J)_{β+c})` where `β = deg f`:
/// injective exactly when the kernel pullback is no larger than `J_β`.
pub fn p0_injective_forced(sys: &JacobianSystem, c_class: &DegreeClass) -> Result<bool> {
    let beta = sys.f.class.clone();
    let w_dim = multiplication_kernel_dim(sys, &beta, c_class)?;
    Ok(w_dim == sys.ideal_dim(&beta)?)
}

/// Rank of the multiplication map `(S/J)_e → Hom((S/J)_c, (S/J)_{e+c})`,
/// with flags for injectivity and for surjectivity of the induced pairing
/// onto `(S/J)_{e+c}`.
pub fn multiplication_rank(
    sys: &JacobianSystem,
    e_class: &DegreeClass,
    c_class: &DegreeClass,
) -> Result<(usize, bool, bool)> {
    let dim_se = sys.ring.piece_dim(e_class)?;
    let rank = dim_se - multiplication_kernel_dim(sys, e_class, c_class)?;
    let injective = rank == sys.ring_dim(e_class)?;

    // surjectivity onto the quotient: the ideal piece together with the
    // monomial products of the two factors must fill S_{e+c}
    let t_class = e_class.add(c_class);
    let basis_e = sys.ring.monomial_basis(e_class)?;
    let basis_c = sys.ring.monomial_basis(c_class)?;
    let basis_t = sys.ring.monomial_basis(&t_class)?;
    let idx_t = index_map(&basis_t);
    let mut products: std::collections::HashSet<usize> = std::collections::HashSet::new();
    for a in &basis_e {
        for h in &basis_c {
            let e: Vec<i64> = a.iter().zip(h).map(|(&x, &y)| x + y).collect();
            if let Some(&r) = idx_t.get(&e) {
                products.insert(r);
            }
        }
    }
    // unit columns at the product rows make those rows eliminable, so
    // rank([B | units]) = |products| + rank(B with the product rows deleted);
    // only the surviving rows are materialized
    let nrest = basis_t.len() - products.len();
    let surjective_onto = if nrest == 0 {
        true
    } else {
        let layout = sys.column_layout(&t_class)?;
        let ncols: usize = layout.iter().map(|(_, b)| b.len()).sum();
        check_dense_size(nrest, ncols)?;
        let mut row_slot = vec![usize::MAX; basis_t.len()];
        let mut next = 0usize;
        for r in 0..basis_t.len() {
            if !products.contains(&r) {
                row_slot[r] = next;
                next += 1;
            }
        }
        let mut rows = vec![vec![BigInt::zero(); ncols]; nrest];
        let mut col = 0usize;
        for (j, hs) in &layout {
            let p = &sys.partials[*j];
            for h in hs {
                for (c, a) in &p.terms {
                    let e: Vec<i64> = h.iter().zip(a).map(|(&x, &y)| x + y).collect();
                    let r = *idx_t
                        .get(&e)
                        .ok_or_else(|| Error::Internal("product escapes graded piece".into()))?;
                    if row_slot[r] != usize::MAX {
                        rows[row_slot[r]][col] += c;
                    }
                }
                col += 1;
            }
        }
        products.len() + IntMatrix::new(rows, ncols).rank() == basis_t.len()
    };
    Ok((rank, injective, surjective_onto))
}

/// Injectivity on the monomial path: the kernel of the multiplication map is
/// spanned by quotient monomials `g` with `g·h ∈ J` for every quotient
/// monomial `h` of the complementary degree.
pub fn p0_injective_monomial(sys: &JacobianSystem, c_class: &DegreeClass) -> Result<Option<bool>> {
    let Some(gens) = sys.monomial_generators() else {
        return Ok(None);
    };
    let beta = sys.f.class.clone();
    let rb = sys.quotient_monomial_basis(&beta)?.unwrap();
    let rc = sys.quotient_monomial_basis(c_class)?.unwrap();
    for g in &rb {
        let survives = rc.iter().any(|h| {
            let e: Vec<i64> = g.iter().zip(h).map(|(&x, &y)| x + y).collect();
            !JacobianSystem::monomial_in_ideal(&gens, &e)
        });
        if !survives {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Whether the pairing `(S/J)_β × (S/J)_b → (S/J)_{β+b}` is nonzero, on the
/// monomial path: some product of quotient monomials stays out of the ideal.
pub fn pairing_nonzero_monomial(sys: &JacobianSystem, b_class: &DegreeClass) -> Result<Option<bool>> {
    let Some(gens) = sys.monomial_generators() else {
        return Ok(None);
    };
    let beta = sys.f.class.clone();
    let ra = sys.quotient_monomial_basis(&beta)?.unwrap();
    let rb = sys.quotient_monomial_basis(b_class)?.unwrap();
    for g in &ra {
        for h in &rb {
            let e: Vec<i64> = g.iter().zip(h).map(|(&x, &y)| x + y).collect();
            if !JacobianSystem::monomial_in_ideal(&gens, &e) {
                return Ok(Some(true));
            }
        }
    }
    Ok(Some(false))
}

/// Whether every monomial of the piece `S_{a+b}` factors as a product of an
/// `S_a`-monomial and an `S_b`-monomial. When it does, the image of the
/// pairing spans the whole quotient piece, so the pairing is nonzero exactly
/// when that piece is nonzero.
pub fn products_span(
    ring: &CoxRing,
    a_class: &DegreeClass,
    b_class: &DegreeClass,
) -> Result<bool> {
    let basis_a = ring.monomial_basis(a_class)?;
    let set_b: std::collections::HashSet<Vec<i64>> =
        ring.monomial_basis(b_class)?.into_iter().collect();
    let basis_t = ring.monomial_basis(&a_class.add(b_class))?;
    'outer: for t in &basis_t {
        for a in &basis_a {
            if a.iter().zip(t).all(|(&x, &y)| x <= y) {
                let rest: Vec<i64> = t.iter().zip(a).map(|(&y, &x)| y - x).collect();
                if set_b.contains(&rest) {
                    continue 'outer;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// One-sided certificate that `dim (S/J)_gamma > 0` for pieces too large for
/// dense elimination: the Koszul syzygies `u · (∂_i f · e_j - ∂_j f · e_i)`
/// lie in the kernel of the multiplication matrix `B`, so
/// `rank B ≤ cols(B) - rank(syzygy subset)`; once that drops below
/// `dim S_gamma` the quotient is nonzero. Returns `None` when the collected
/// syzygies are too few to conclude.
pub fn positive_dim_via_koszul(sys: &JacobianSystem, gamma: &DegreeClass) -> Result<Option<bool>> {
    let dim_s = sys.ring.piece_dim(gamma)?;
    if dim_s == 0 {
        return Ok(Some(false));
    }
    let layout = sys.column_layout(gamma)?;
    let total_cols: usize = layout.iter().map(|(_, b)| b.len()).sum();
    if total_cols < dim_s {
        return Ok(Some(true)); // the ideal cannot fill the piece
    }
    let deficit = total_cols - dim_s + 1;

    // column offsets and per-block index maps
    let mut offsets = HashMap::new();
    let mut block_idx: HashMap<usize, HashMap<Vec<i64>, usize>> = HashMap::new();
    let mut off = 0usize;
    for (j, basis) in &layout {
        offsets.insert(*j, off);
        block_idx.insert(*j, index_map(basis));
        off += basis.len();
    }

    let mut syzygies: Vec<Vec<BigInt>> = Vec::new();
    let vars: Vec<usize> = layout.iter().map(|(j, _)| *j).collect();
    'collect: for (pi, &i) in vars.iter().enumerate() {
        for &j in &vars[pi + 1..] {
            // u ranges over the piece of degree gamma - deg ∂_i f - deg ∂_j f
            let u_class = gamma
                .sub(&sys.partials[i].class)
                .sub(&sys.partials[j].class);
            let us = match sys.ring.monomial_basis(&u_class) {
                Ok(b) => b,
                Err(Error::Unbounded(_)) => continue,
                Err(e) => return Err(e),
            };
            for u in us {
                let mut col = vec![BigInt::zero(); total_cols];
                // block j gets u · ∂_i f, block i gets -(u · ∂_j f)
                for (sign, src, blk) in [(1i64, i, j), (-1, j, i)] {
                    let (Some(&o), Some(idx)) = (offsets.get(&blk), block_idx.get(&blk)) else {
                        continue;
                    };
                    for (c, a) in &sys.partials[src].terms {
                        let h: Vec<i64> = u.iter().zip(a).map(|(&x, &y)| x + y).collect();
                        let k = *idx
                            .get(&h)
                            .ok_or_else(|| Error::Internal("syzygy slot missing".into()))?;
                        col[o + k] += c * BigInt::from(sign);
                    }
                }
                syzygies.push(col);
                if syzygies.len() >= deficit + 48 {
                    break 'collect;
                }
            }
        }
    }
    if syzygies.len() < deficit {
        return Ok(None);
    }
    check_dense_size(syzygies.len(), total_cols)?;
    let rank = IntMatrix::new(syzygies, total_cols).rank();
    if rank >= deficit {
        Ok(Some(true))
    } else {
        Ok(None)
    }
}

/// Dense decision of the same pairing question, for small pieces: the
/// pairing is nonzero exactly when some product of monomials from the two
/// factors lies outside `J_{a+b}`, i.e. augmenting `B` by the corresponding
/// unit columns raises the rank.
pub fn pairing_nonzero_dense(sys: &JacobianSystem, b_class: &DegreeClass) -> Result<bool> {
    let a_class = sys.f.class.clone();
    let t_class = a_class.add(b_class);
    let basis_a = sys.ring.monomial_basis(&a_class)?;
    let basis_b = sys.ring.monomial_basis(b_class)?;
    let basis_t = sys.ring.monomial_basis(&t_class)?;
    let idx_t = index_map(&basis_t);
    let mut products: std::collections::HashSet<usize> = std::collections::HashSet::new();
    for a in &basis_a {
        for h in &basis_b {
            let e: Vec<i64> = a.iter().zip(h).map(|(&x, &y)| x + y).collect();
            if let Some(&r) = idx_t.get(&e) {
                products.insert(r);
            }
        }
    }
    let b = sys.matrix(&t_class)?;
    let base_rank = b.rank();
    if base_rank == basis_t.len() {
        return Ok(false); // the whole piece is in the ideal
    }
    let mut rows = b.rows.clone();
    let extra = products.len();
    check_dense_size(rows.len(), b.ncols + extra)?;
    for (k, &r) in products.iter().enumerate() {
        for (ri, row) in rows.iter_mut().enumerate() {
            row.push(if ri == r {
                BigInt::from(1)
            } else {
                BigInt::zero()
            });
        }
        let _ = k;
    }
    let aug_rank = IntMatrix::new(rows, b.ncols + extra).rank();
    Ok(aug_rank > base_rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::Fan;
    use crate::util::seeded_rng;

    fn p_n(n: usize) -> CoxRing {
        CoxRing::new(Arc::new(Fan::projective_space(n)))
    }

    fn degree_class(ring: &CoxRing, d: i64) -> DegreeClass {
        ring.chow.variable_class(0).unwrap().scale(&BigInt::from(d))
    }

    #[test]
    fn projective_monomial_counts_are_binomial() {
        let ring = p_n(4);
        // dim of degree-d forms in 5 variables is C(d+4, 4)
        for (d, expect) in [(1i64, 5usize), (2, 15), (5, 126), (6, 210), (7, 330)] {
            let c = degree_class(&ring, d);
            assert_eq!(ring.piece_dim(&c).unwrap(), expect, "d={d}");
        }
    }

    #[test]
    fn weighted_monomial_counts() {
        let fan = Arc::new(Fan::weighted_projective_space(&[1, 1, 1, 1, 2]).unwrap());
        let ring = CoxRing::new(fan);
        let one = ring.chow.variable_class(1).unwrap(); // a weight-1 variable
        // degree 2 in weights (1,1,1,1,2): C(5,3) quadrics in the four
        // weight-1 variables plus the weight-2 variable itself
        assert_eq!(ring.piece_dim(&one.scale(&BigInt::from(2))).unwrap(), 11);
    }

    #[test]
    fn fermat_exists_exactly_when_powers_do() {
        let ring = p_n(4);
        let f = Section::fermat(&ring, &degree_class(&ring, 5)).unwrap();
        assert!(f.is_some());
        let f = f.unwrap();
        assert_eq!(f.terms.len(), 5);
        let sys = JacobianSystem::new(&ring, f).unwrap();
        assert!(sys.monomial_generators().is_some());
    }

    #[test]
    fn quintic_jacobian_dimensions() {
        let ring = p_n(4);
        let beta = degree_class(&ring, 5);
        // Fermat
        let fermat = Section::fermat(&ring, &beta).unwrap().unwrap();
        let sys = JacobianSystem::new(&ring, fermat).unwrap();
        assert_eq!(sys.ideal_dim(&beta).unwrap(), 25);
        assert_eq!(sys.ring_dim(&beta).unwrap(), 101);
        // random section agrees
        let mut rng = seeded_rng(11);
        let f = Section::random(&ring, &beta, &mut rng).unwrap();
        let sys = JacobianSystem::new(&ring, f).unwrap();
        assert_eq!(sys.ring_dim(&beta).unwrap(), 101);
    }

    #[test]
    fn sextic_ring_dimensions() {
        let ring = p_n(4);
        let beta = degree_class(&ring, 6);
        let fermat = Section::fermat(&ring, &beta).unwrap().unwrap();
        let sys = JacobianSystem::new(&ring, fermat).unwrap();
        assert_eq!(sys.ring_dim(&beta).unwrap(), 185);
        let r7 = degree_class(&ring, 7);
        assert_eq!(sys.ring_dim(&r7).unwrap(), 255);
    }

    #[test]
    fn p0_monomial_and_forced_agree_on_sextic() {
        let ring = p_n(4);
        let beta = degree_class(&ring, 6);
        let c1 = degree_class(&ring, 1);
        let fermat = Section::fermat(&ring, &beta).unwrap().unwrap();
        let sys = JacobianSystem::new(&ring, fermat).unwrap();
        assert_eq!(p0_injective_monomial(&sys, &c1).unwrap(), Some(true));
        assert!(p0_injective_forced(&sys, &c1).unwrap());
        let mut rng = seeded_rng(23);
        let f = Section::random(&ring, &beta, &mut rng).unwrap();
        let sys = JacobianSystem::new(&ring, f).unwrap();
        assert!(p0_injective_forced(&sys, &c1).unwrap());
    }

    #[test]
    fn multiplication_ranks_on_fermat_quintic() {
        let ring = p_n(4);
        let beta = degree_class(&ring, 5);
        let f = Section::fermat(&ring, &beta).unwrap().unwrap();
        let sys = JacobianSystem::new(&ring, f).unwrap();
        let zero = degree_class(&ring, 0);
        // against R_0 the map is multiplication into R_5 itself
        let (rank, inj, _) = multiplication_rank(&sys, &beta, &zero).unwrap();
        assert_eq!(rank, 101);
        assert!(inj);
        // e = 0 acts as the identity
        let (rank, inj, _) = multiplication_rank(&sys, &zero, &beta).unwrap();
        assert_eq!(rank, 1);
        assert!(inj);
        // the Gorenstein pairing R_5 x R_5 -> R_10 is onto
        let (_, _, onto) = multiplication_rank(&sys, &beta, &beta).unwrap();
        assert!(onto);
    }

    #[test]
    fn multiplication_rank_monomial_and_dense_agree() {
        // cubic surface in P^3: small enough for the dense kernel path
        let ring = p_n(3);
        let beta = degree_class(&ring, 3);
        let c = degree_class(&ring, 1);
        let fermat = Section::fermat(&ring, &beta).unwrap().unwrap();
        let sys_m = JacobianSystem::new(&ring, fermat).unwrap();
        let mono = multiplication_rank(&sys_m, &beta, &c).unwrap();
        let mut rng = seeded_rng(31);
        let f = Section::random(&ring, &beta, &mut rng).unwrap();
        let sys_d = JacobianSystem::new(&ring, f).unwrap();
        let dense = multiplication_rank(&sys_d, &beta, &c).unwrap();
        assert_eq!(mono, dense);
    }

    #[test]
    fn pairing_monomial_on_quintic() {
        let ring = p_n(4);
        let beta = degree_class(&ring, 5);
        let fermat = Section::fermat(&ring, &beta).unwrap().unwrap();
        let sys = JacobianSystem::new(&ring, fermat).unwrap();
        // R_5 x R_5 -> R_10 is nonzero (socle degree is 15)
        assert_eq!(pairing_nonzero_monomial(&sys, &beta).unwrap(), Some(true));
        // R_5 x R_11 -> R_16 is zero (past the socle)
        let r11 = degree_class(&ring, 11);
        assert_eq!(pairing_nonzero_monomial(&sys, &r11).unwrap(), Some(false));
    }

    #[test]
    fn products_span_in_projective_space() {
        let ring = p_n(3);
        let a = degree_class(&ring, 2);
        let b = degree_class(&ring, 3);
        assert!(products_span(&ring, &a, &b).unwrap());
    }

    #[test]
    fn koszul_bound_confirms_positive_dimension() {
        // cubic surface in P^3: the socle of the Jacobian ring sits in
        // degree 4·(3-2) = 4 and is one-dimensional
        let ring = p_n(3);
        let beta = degree_class(&ring, 3);
        let mut rng = seeded_rng(5);
        let f = Section::random(&ring, &beta, &mut rng).unwrap();
        let sys = JacobianSystem::new(&ring, f).unwrap();
        let gamma = degree_class(&ring, 4);
        assert_eq!(positive_dim_via_koszul(&sys, &gamma).unwrap(), Some(true));
        // cross-check with the dense engine
        assert_eq!(sys.ring_dim(&gamma).unwrap(), 1);
    }

    #[test]
    fn pairing_dense_agrees_with_monomial() {
        // cubic in P^3 (small enough for the dense route): R_3 x R_1 -> R_4
        // pairs into the socle, so the pairing is nonzero
        let ring = p_n(3);
        let beta = degree_class(&ring, 3);
        let b = degree_class(&ring, 1);
        let fermat = Section::fermat(&ring, &beta).unwrap().unwrap();
        let sys = JacobianSystem::new(&ring, fermat).unwrap();
        let mono = pairing_nonzero_monomial(&sys, &b).unwrap().unwrap();
        let dense = pairing_nonzero_dense(&sys, &b).unwrap();
        assert_eq!(mono, dense);
        assert!(mono);
    }
}
