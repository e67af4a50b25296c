//! The named weight cones attached to a zip context: the ambient chambers
//! `X*_{+,I}` and `X*_-(L)`, the Griffiths-Schmid cone, the Hasse cones and
//! partial-Hasse-invariant weights, the highest/lowest weight cones from the
//! q-weighted norm sums, the orbit cone for split groups, and the certified
//! zip-cone presets.  Also the bar reduction modulo the determinant line and
//! the inverse Lang map on cocharacters.

use crate::cone::{Cone, ConeError, Halfspace};
use crate::roots::{Coweight, GroupError, GroupFamily, Root, Weight};
use crate::weyl::{CosetSide, WeylElt};
use crate::zipdata::ZipContext;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZipConeError {
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("the orbit cone is only defined for split groups")]
    OrbitConeNonSplit,
    #[error("no certified zip-cone preset for {0}")]
    NoPreset(String),
    #[error("cone does not contain the determinant line; bar reduction would be lossy")]
    BarWithoutDetLine,
}

/// Identifiers for the named cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedConeId {
    /// I-dominant chamber `X*_{+,I}(T)`.
    XPlusI,
    /// Anti-dominant characters of the Levi, `X*_-(L)`.
    XMinusL,
    /// Griffiths-Schmid cone.
    Gs,
    /// Image of the dominant chamber under `h_Z`.
    Hasse,
    /// Hasse cone of a single stratum, `h_w(X*_{+,w})`.
    HasseAt(WeylElt),
    /// Highest weight cone (norm sums over `W_{L_0}(F_q)`).
    Hw,
    /// Lowest weight cone (same sums applied to `lambda_0`).
    Lw,
    /// Orbit cone for split groups.
    Orb,
    /// Certified zip cone from the literature, where available.
    ZipPreset,
}

// ---------------------------------------------------------------------------
// the linear maps
// ---------------------------------------------------------------------------

/// `h_Z(lambda) = lambda - q * w_{0,I}(sigma^{-1} lambda)`.
pub fn h_z(ctx: &ZipContext, lambda: &Weight) -> Weight {
    let q = BigInt::from(ctx.q());
    let tw = ctx.w0_i().act_weight(&ctx.frobenius(lambda));
    lambda.add(&tw.scale(&q).neg())
}

/// `h_w(chi) = -w chi + q * w_{0,I} w_0 (sigma^{-1} chi)`.
pub fn h_w(ctx: &ZipContext, w: &WeylElt, chi: &Weight) -> Weight {
    let q = BigInt::from(ctx.q());
    let a = w.act_weight(chi).neg();
    let b = ctx
        .w0_i()
        .act_weight(&ctx.w0().act_weight(&ctx.frobenius(chi)));
    a.add(&b.scale(&q))
}

/// Canonical fundamental weight for the k-th simple root: the
/// `(1,...,1,0,...,0)` family, with the all-ones vector for the long simple
/// root of Sp(2n) and for the short simple root of SO(2n+1) (pairing 2).
pub fn canonical_fundamental(ctx: &ZipContext, k: usize) -> Weight {
    let n = ctx.rank();
    let ones = k + 1;
    Weight::from_i64(
        &(0..n)
            .map(|i| if i < ones { 1 } else { 0 })
            .collect::<Vec<_>>(),
    )
}

/// Weight of the partial Hasse invariant for the k-th simple root:
/// `lambda_alpha = h_{w_0}(chi_alpha)`.
pub fn hasse_weight(ctx: &ZipContext, k: usize) -> Weight {
    h_w(ctx, ctx.w0(), &canonical_fundamental(ctx, k))
}

/// Vanishing multiplicity `m_{w,alpha} = <chi, alpha^>`.
pub fn multiplicity(ctx: &ZipContext, chi: &Weight, alpha: &Root) -> Result<BigInt, GroupError> {
    ctx.roots().pairing(chi, alpha)
}

// ---------------------------------------------------------------------------
// Levi data over F_q
// ---------------------------------------------------------------------------

/// Frobenius-stable part of the Levi: the type `I_0` of the largest
/// F_q-subgroup, the orders `r_alpha`, and the sigma-fixed part of `W_{I_0}`.
#[derive(Clone, Debug)]
pub struct LeviData {
    pub i0: Vec<usize>,
    pub delta_p0: Vec<usize>,
    pub r_alpha: Vec<(Root, u32)>,
    pub w_l0_fq: Vec<WeylElt>,
}

fn sigma_on_simple(ctx: &ZipContext, k: usize) -> usize {
    let img = ctx.frobenius_root(&ctx.roots().simple()[k]);
    ctx.roots()
        .simple()
        .iter()
        .position(|a| *a == img)
        .expect("Frobenius permutes the simple roots")
}

pub fn levi_data(ctx: &ZipContext) -> LeviData {
    let i0: Vec<usize> = ctx
        .i_set()
        .iter()
        .copied()
        .filter(|&k| ctx.i_set().contains(&sigma_on_simple(ctx, k)))
        .collect();
    let nsimple = ctx.roots().simple().len();
    let delta_p0: Vec<usize> = (0..nsimple).filter(|k| !i0.contains(k)).collect();
    let r_alpha: Vec<(Root, u32)> = ctx
        .roots()
        .simple()
        .iter()
        .map(|a| {
            let r = if ctx.frobenius_root(a) == *a { 1 } else { 2 };
            (a.clone(), r)
        })
        .collect();
    let w_l0_fq: Vec<WeylElt> = ctx
        .weyl()
        .parabolic_elements(&i0)
        .into_iter()
        .filter(|w| ctx.frobenius_w(w) == *w)
        .collect();
    LeviData { i0, delta_p0, r_alpha, w_l0_fq }
}

// ---------------------------------------------------------------------------
// named cones
// ---------------------------------------------------------------------------

fn coroot_halfspace(ctx: &ZipContext, alpha: &Root, flip: bool) -> Halfspace {
    let cr = ctx.roots().coroot(alpha);
    let v: Vec<BigInt> = cr
        .iter()
        .map(|&c| BigInt::from(if flip { -c } else { c }))
        .collect();
    Halfspace::new(v).expect("coroot is nonzero")
}

fn x_plus_i_halfspaces(ctx: &ZipContext) -> Vec<Halfspace> {
    ctx.i_roots()
        .iter()
        .map(|a| coroot_halfspace(ctx, a, true))
        .collect()
}

fn positive_levi_roots(ctx: &ZipContext) -> Vec<Root> {
    // positive roots lying in the span of the I-simple roots
    let i_roots = ctx.i_roots();
    ctx.roots()
        .positive()
        .iter()
        .filter(|a| in_span(&i_roots, a))
        .cloned()
        .collect()
}

fn in_span(basis: &[Root], v: &Root) -> bool {
    if basis.is_empty() {
        return v.coords().iter().all(|&c| c == 0);
    }
    // rank check over Q
    let rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|b| {
            b.coords()
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect()
        })
        .collect();
    let mut with: Vec<Vec<BigRational>> = rows.clone();
    with.push(
        v.coords()
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect(),
    );
    rank_of(&rows) == rank_of(&with)
}

#[allow(clippy::needless_range_loop)]
fn rank_of(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let v = &m[rank][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// The dominant chamber `X*_+(T)` as a cone.
fn dominant_cone(ctx: &ZipContext) -> Result<Cone, ZipConeError> {
    let hs: Vec<Halfspace> = ctx
        .roots()
        .simple()
        .iter()
        .map(|a| coroot_halfspace(ctx, a, true))
        .collect();
    Ok(Cone::from_halfspaces(ctx.rank(), &hs)?)
}

/// Image of a cone under a linear weight map.
fn map_cone<F: Fn(&Weight) -> Weight>(c: &Cone, dim: usize, f: F) -> Result<Cone, ZipConeError> {
    let rays: Vec<Vec<BigRational>> = c
        .rays()
        .iter()
        .map(|r| f(&Weight::new(r.clone())).to_rationals())
        .collect();
    let lin: Vec<Vec<BigRational>> = c
        .lineality()
        .iter()
        .map(|l| f(&Weight::new(l.clone())).to_rationals())
        .collect();
    Ok(Cone::from_generators(dim, &rays, &lin)?)
}

/// Raw (unreduced) norm-sum inequality normals of the highest/lowest weight
/// cones; exposed so the reduction to primitive form can be checked.
pub fn norm_sum_normals(ctx: &ZipContext, low: bool) -> Vec<(Root, Vec<BigInt>)> {
    let ld = levi_data(ctx);
    let n = ctx.rank();
    let q = BigInt::from(ctx.q());
    let indices: Vec<usize> = if low {
        ld.delta_p0.clone()
    } else {
        (0..ctx.roots().simple().len())
            .filter(|k| !ctx.i_set().contains(k))
            .collect()
    };
    // lambda_0 = w_{0,I_0} w_{0,I} lambda for the lowest weight cone
    let u = if low {
        let w0i0 = ctx.weyl().longest_in(&ld.i0);
        Some(w0i0.compose(ctx.w0_i()))
    } else {
        None
    };
    let mut out = Vec::new();
    for k in indices {
        let alpha = ctx.roots().simple()[k].clone();
        let r_alpha = ld
            .r_alpha
            .iter()
            .find(|(a, _)| *a == alpha)
            .map(|(_, r)| *r)
            .unwrap();
        let mut normal = vec![BigInt::zero(); n];
        for w in &ld.w_l0_fq {
            let lw = ctx.weyl().length(w);
            // the acting element: <w u lambda, delta> = <lambda, (w u)^{-1} delta>
            let act = match &u {
                Some(u) => w.compose(u),
                None => w.clone(),
            };
            let inv = act.inverse();
            let mut delta: Vec<BigRational> = ctx
                .roots()
                .coroot(&alpha)
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect();
            for i in 0..r_alpha {
                let moved = inv.act_rationals(&delta);
                let factor = q.pow(i + lw);
                for (t, m) in moved.iter().enumerate() {
                    debug_assert!(m.is_integer());
                    normal[t] += m.to_integer() * &factor;
                }
                delta = ctx.frobenius_coweight(&delta);
            }
        }
        out.push((alpha, normal));
    }
    out
}

/// Build one of the named cones in full coordinates.
pub fn named_cone(ctx: &ZipContext, id: &NamedConeId) -> Result<Cone, ZipConeError> {
    let n = ctx.rank();
    match id {
        NamedConeId::XPlusI => Ok(Cone::from_halfspaces(n, &x_plus_i_halfspaces(ctx))?),
        NamedConeId::XMinusL => {
            let mut hs = Vec::new();
            for a in ctx.i_roots() {
                hs.push(coroot_halfspace(ctx, &a, false));
                hs.push(coroot_halfspace(ctx, &a, true));
            }
            for a in ctx.delta_p() {
                hs.push(coroot_halfspace(ctx, &a, false));
            }
            Ok(Cone::from_halfspaces(n, &hs)?)
        }
        NamedConeId::Gs => {
            let levi_pos = positive_levi_roots(ctx);
            let mut hs: Vec<Halfspace> = x_plus_i_halfspaces(ctx);
            for a in ctx.roots().positive() {
                if !levi_pos.contains(a) {
                    hs.push(coroot_halfspace(ctx, a, false));
                }
            }
            Ok(Cone::from_halfspaces(n, &hs)?)
        }
        NamedConeId::Hasse => {
            let dom = dominant_cone(ctx)?;
            map_cone(&dom, n, |w| h_z(ctx, w))
        }
        NamedConeId::HasseAt(w) => {
            let ew = ctx.weyl().lower_neighbors(w);
            let hs: Vec<Halfspace> = ew
                .iter()
                .map(|a| coroot_halfspace(ctx, a, true))
                .collect();
            let chamber = Cone::from_halfspaces(n, &hs)?;
            map_cone(&chamber, n, |chi| h_w(ctx, w, chi))
        }
        NamedConeId::Hw | NamedConeId::Lw => {
            let raw = norm_sum_normals(ctx, matches!(id, NamedConeId::Lw));
            let mut hs = x_plus_i_halfspaces(ctx);
            for (_, normal) in raw {
                hs.push(Halfspace::new(normal).expect("norm sum is nonzero"));
            }
            Ok(Cone::from_halfspaces(n, &hs)?)
        }
        NamedConeId::Orb => {
            if !ctx.family().is_split() {
                return Err(ZipConeError::OrbitConeNonSplit);
            }
            let levi_pos = positive_levi_roots(ctx);
            let outside: Vec<Root> = ctx
                .roots()
                .positive()
                .iter()
                .filter(|a| !levi_pos.contains(*a))
                .cloned()
                .collect();
            let orbits = weyl_levi_orbits(ctx, &outside);
            let q = BigInt::from(ctx.q());
            let mut hs = Vec::new();
            for orbit in &orbits {
                let m = orbit.len();
                assert!(m <= 16, "orbit too large for subset enumeration");
                for mask in 0u32..(1 << m) {
                    let mut normal = vec![BigInt::zero(); n];
                    for (t, a) in orbit.iter().enumerate() {
                        let cr = ctx.roots().coroot(a);
                        let scale = if mask & (1 << t) != 0 {
                            BigInt::one()
                        } else {
                            q.clone()
                        };
                        for (j, &c) in cr.iter().enumerate() {
                            normal[j] += BigInt::from(c) * &scale;
                        }
                    }
                    hs.push(Halfspace::new(normal).expect("orbit sum nonzero"));
                }
            }
            hs.sort();
            hs.dedup();
            Ok(Cone::from_halfspaces(n, &hs)?)
        }
        NamedConeId::ZipPreset => zip_preset(ctx),
    }
}

fn weyl_levi_orbits(ctx: &ZipContext, roots: &[Root]) -> Vec<Vec<Root>> {
    let mut remaining: Vec<Root> = roots.to_vec();
    let mut orbits = Vec::new();
    while let Some(seed) = remaining.first().cloned() {
        let mut orbit = vec![seed];
        let mut head = 0;
        while head < orbit.len() {
            let cur = orbit[head].clone();
            for &k in ctx.i_set() {
                let s = ctx.weyl().simple_reflection(k);
                let img = s.act_root(&cur);
                if !orbit.contains(&img) {
                    orbit.push(img);
                }
            }
            head += 1;
        }
        orbit.sort();
        remaining.retain(|a| !orbit.contains(a));
        orbits.push(orbit);
    }
    orbits
}

/// Number of leading ones of the defining cocharacter (the signature).
fn mu_ones(ctx: &ZipContext) -> Option<usize> {
    let mut r = 0;
    for c in ctx.mu().coords() {
        if c.is_one() {
            r += 1;
        } else if !c.is_zero() {
            return None;
        }
    }
    let coords = ctx.mu().coords();
    if coords[..r].iter().all(|c| c.is_one()) && coords[r..].iter().all(|c| c.is_zero()) {
        Some(r)
    } else {
        None
    }
}

/// The certified saturated zip cone, for the cases where the literature
/// pins it down.  Everything else is an error.
pub fn zip_preset(ctx: &ZipContext) -> Result<Cone, ZipConeError> {
    let q = ctx.q();
    let n = ctx.rank();
    let label = format!("{} with mu = {}", ctx.family(), ctx.mu());
    let ones = mu_ones(ctx).ok_or_else(|| ZipConeError::NoPreset(label.clone()))?;
    let extra: Vec<Vec<i64>> = match (ctx.family(), ones) {
        (GroupFamily::Sp(2), 2) => vec![vec![q, 1]],
        (GroupFamily::Sp(3), 3) => vec![vec![q * q, 1, q], vec![q, q * q, 1]],
        (GroupFamily::Gl(3), 2) => vec![vec![q, 1, -(q + 1)]],
        (GroupFamily::Gl(4), 3) => vec![
            vec![q * q, 1, q, -(q * q + q + 1)],
            vec![q, q * q, 1, -(q * q + q + 1)],
        ],
        (GroupFamily::Gl(4), 2) => vec![vec![q, 1, -1, -q]],
        (GroupFamily::U(3), 2) => vec![vec![q - 1, 1, -q]],
        (GroupFamily::U(4), 3) => vec![vec![q - 1, 0, 1, -q]],
        _ => return Err(ZipConeError::NoPreset(label)),
    };
    let mut hs = x_plus_i_halfspaces(ctx);
    for v in extra {
        hs.push(Halfspace::from_i64(&v).expect("preset normal nonzero"));
    }
    Ok(Cone::from_halfspaces(n, &hs)?)
}

/// Hasse-type test: Frobenius stabilizes `I` and acts on it by `-w_{0,I}`.
pub fn is_hasse_type(ctx: &ZipContext) -> bool {
    let i_roots = ctx.i_roots();
    for a in &i_roots {
        let img = ctx.frobenius_root(a);
        if !i_roots.contains(&img) {
            return false;
        }
        let expected = ctx.w0_i().act_root(a).negate();
        if img != expected {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// bar reduction
// ---------------------------------------------------------------------------

/// `bar(a_1,...,a_n) = (a_1-a_n, ..., a_{n-1}-a_n)`.
pub fn bar(lambda: &Weight) -> Weight {
    let c = lambda.coords();
    let last = c.last().expect("bar of empty weight");
    Weight::new(c[..c.len() - 1].iter().map(|x| x - last).collect())
}

fn all_ones_in_lineality(c: &Cone) -> bool {
    let dim = c.dim();
    let ones: Vec<BigRational> = vec![BigRational::one(); dim];
    // the lineality rows are in RREF; reduce and check for zero
    let mut v = ones;
    for l in c.lineality() {
        let pivot = l.iter().position(|x| !x.is_zero()).unwrap();
        if !v[pivot].is_zero() {
            let f = &v[pivot] / BigRational::from_integer(l[pivot].clone());
            for j in 0..dim {
                let d = BigRational::from_integer(l[j].clone()) * &f;
                v[j] -= d;
            }
        }
    }
    v.iter().all(Zero::is_zero)
}

/// Faithful reduction of a cone containing the determinant line to bar
/// coordinates (dimension drops by one).
pub fn bar_cone(c: &Cone) -> Result<Cone, ZipConeError> {
    if !all_ones_in_lineality(c) {
        return Err(ZipConeError::BarWithoutDetLine);
    }
    let m = c.dim() - 1;
    let rays: Vec<Vec<BigRational>> = c
        .rays()
        .iter()
        .map(|r| bar(&Weight::new(r.clone())).to_rationals())
        .collect();
    let lin: Vec<Vec<BigRational>> = c
        .lineality()
        .iter()
        .map(|l| bar(&Weight::new(l.clone())).to_rationals())
        .collect();
    Ok(Cone::from_generators(m, &rays, &lin)?)
}

/// Inverse of [`bar_cone`]: lift to full coordinates and restore the
/// determinant line.
pub fn unbar_cone(c: &Cone) -> Result<Cone, ZipConeError> {
    let n = c.dim() + 1;
    let lift = |v: &[BigInt]| -> Vec<BigRational> {
        let mut out: Vec<BigRational> = v
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        out.push(BigRational::zero());
        out
    };
    let rays: Vec<Vec<BigRational>> = c.rays().iter().map(|r| lift(r)).collect();
    let mut lin: Vec<Vec<BigRational>> = c.lineality().iter().map(|l| lift(l)).collect();
    lin.push(vec![BigRational::one(); n]);
    Ok(Cone::from_generators(n, &rays, &lin)?)
}

// ---------------------------------------------------------------------------
// the inverse Lang map on cocharacters
// ---------------------------------------------------------------------------

/// Apply `delta -> delta - q sigma(delta)`.
pub fn p_star(ctx: &ZipContext, delta: &Coweight) -> Coweight {
    let q = BigRational::from_integer(BigInt::from(ctx.q()));
    let moved = ctx.frobenius_coweight(delta.coords());
    Coweight::new(
        delta
            .coords()
            .iter()
            .zip(&moved)
            .map(|(d, m)| d - m * &q)
            .collect(),
    )
}

/// Solve `delta - q sigma(delta) = target` exactly over the rationals.
pub fn p_star_inverse(ctx: &ZipContext, target: &Coweight) -> Coweight {
    let n = ctx.rank();
    let q = BigRational::from_integer(BigInt::from(ctx.q()));
    // matrix of id - q*sigma, columns indexed by basis cocharacters
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[j] = BigRational::one();
        let s = ctx.frobenius_coweight(&e);
        let col: Vec<BigRational> = (0..n).map(|i| &e[i] - &s[i] * &q).collect();
        cols.push(col);
    }
    let rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect();
    let x = solve_square(&rows, target.coords()).expect("id - q sigma is invertible for q >= 2");
    let out = Coweight::new(x);
    debug_assert_eq!(p_star(ctx, &out), *target);
    out
}

#[allow(clippy::needless_range_loop)]
fn solve_square(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for x in aug[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..=n {
                    let v = &aug[c][j] * &f;
                    aug[i][j] -= v;
                }
            }
        }
    }
    Some(aug.iter().map(|r| r[n].clone()).collect())
}

// ---------------------------------------------------------------------------
// split-group shortcut for the highest weight cone
// ---------------------------------------------------------------------------

/// For split groups the norm sum over `W_I` factors through the minimal coset
/// representatives of the centralizer of `alpha^` in the Levi; both routes
/// must produce the same cone.
pub fn hw_via_centralizer_reps(ctx: &ZipContext) -> Result<Cone, ZipConeError> {
    assert!(ctx.family().is_split(), "shortcut is for split groups");
    let n = ctx.rank();
    let q = BigInt::from(ctx.q());
    let mut hs = x_plus_i_halfspaces(ctx);
    for alpha in ctx.delta_p() {
        let cr = ctx.roots().coroot(&alpha);
        let cr_rat: Vec<BigRational> = cr
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        // I_alpha: simple roots of the Levi whose reflections fix alpha^
        let i_alpha: Vec<usize> = ctx
            .i_set()
            .iter()
            .copied()
            .filter(|&k| {
                let s = ctx.weyl().simple_reflection(k);
                s.act_rationals(&cr_rat) == cr_rat
            })
            .collect();
        // minimal representatives of W_{I_alpha} \ W_I inside W_I
        let levi_elements = ctx.weyl().parabolic_elements(ctx.i_set());
        let reps: Vec<WeylElt> = ctx
            .weyl()
            .min_coset_reps(&i_alpha, CosetSide::Left)
            .into_iter()
            .filter(|w| levi_elements.contains(w))
            .collect();
        let mut normal = vec![BigInt::zero(); n];
        for v in &reps {
            let lw = ctx.weyl().length(v);
            let moved = v.inverse().act_rationals(&cr_rat);
            for (t, m) in moved.iter().enumerate() {
                normal[t] += m.to_integer() * q.pow(lw);
            }
        }
        hs.push(Halfspace::new(normal).expect("shortcut sum nonzero"));
    }
    Ok(Cone::from_halfspaces(n, &hs)?)
}
