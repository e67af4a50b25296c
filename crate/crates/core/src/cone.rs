//! Exact rational polyhedral cones in dimension at most 6.
//!
//! Cones are kept in a canonical saturated form: primitive extremal rays
//! reduced modulo the lineality space, lineality stored as the reduced row
//! echelon basis of its span, and facets (irredundant halfspaces) computed by
//! polarity.  Conversion between generator and halfspace descriptions is the
//! double description method with lexicographic insertion order, so output
//! ordering is deterministic.  No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

pub const MAX_DIM: usize = 6;
const MAX_CONSTRAINTS: usize = 128;

#[derive(Debug, Error)]
pub enum ConeError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {0} exceeds the supported maximum {MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("zero vector is not a valid halfspace normal")]
    ZeroNormal,
}

// ---------------------------------------------------------------------------
// small exact linear algebra helpers
// ---------------------------------------------------------------------------

pub(crate) fn dot_ii(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn dot_ir(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| BigRational::from_integer(x.clone()) * y)
        .sum()
}

fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    g
}

/// Scale a rational vector to a primitive integer vector; `None` for zero.
pub(crate) fn primitive_int(v: &[BigRational]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = content(&ints);
    Some(ints.iter().map(|x| x / &g).collect())
}

fn primitive_reduce(v: &[BigInt]) -> Option<Vec<BigInt>> {
    let g = content(v);
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

fn to_rationals(v: &[BigInt]) -> Vec<BigRational> {
    v.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

/// Reduced row echelon form; returns (rows, pivot columns).
#[allow(clippy::needless_range_loop)] // row elimination reads one row while writing another
fn rref(mut rows: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let v = &rows[r][j] * &f;
                    rows[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Canonical primitive integer basis (RREF rows) of the span of `vecs`.
fn canonical_span(vecs: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<BigRational>> = vecs.iter().map(|v| to_rationals(v)).collect();
    let (rows, _) = rref(rows);
    let _ = dim;
    rows.iter()
        .map(|row| primitive_int(row).expect("nonzero rref row"))
        .collect()
}

/// One solution of `A x = b` (free variables set to zero); `None` if inconsistent.
#[allow(clippy::needless_range_loop)]
fn gauss_solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let nrows = a.len();
    if nrows == 0 {
        return Some(Vec::new());
    }
    let ncols = a[0].len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..=ncols {
                    let v = &aug[r][j] * &f;
                    aug[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    for row in aug.iter().skip(r) {
        if row[..ncols].iter().all(Zero::is_zero) && !row[ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = aug[k][ncols].clone();
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// Halfspace
// ---------------------------------------------------------------------------

/// A closed halfspace `{ x : normal . x <= 0 }` with primitive integer normal.
/// The orientation is semantic and never flipped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    normal: Vec<BigInt>,
}

impl Halfspace {
    pub fn new(normal: Vec<BigInt>) -> Result<Self, ConeError> {
        let v = primitive_reduce(&normal).ok_or(ConeError::ZeroNormal)?;
        Ok(Halfspace { normal: v })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self, ConeError> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_rationals(coeffs: &[BigRational]) -> Result<Self, ConeError> {
        let v = primitive_int(coeffs).ok_or(ConeError::ZeroNormal)?;
        Ok(Halfspace { normal: v })
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        dot_ir(&self.normal, x)
    }

    pub fn satisfied_by(&self, x: &[BigRational]) -> bool {
        !self.eval(x).is_positive()
    }

    pub fn negate(&self) -> Halfspace {
        Halfspace {
            normal: self.normal.iter().map(|x| -x).collect(),
        }
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        to_rationals(&self.normal)
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " <= 0")
    }
}

// ---------------------------------------------------------------------------
// pointed double description
// ---------------------------------------------------------------------------

type BitMask = u128;

/// Rays of the pointed cone `{ y in Q^r : c . y <= 0 for all c }`, where the
/// first `r` constraints are the coordinate vectors `e_k`.
fn pointed_dd(r: usize, constraints: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    assert!(constraints.len() <= MAX_CONSTRAINTS, "too many constraints");
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut active: Vec<BitMask> = Vec::new();
    for j in 0..r {
        let mut v = vec![BigInt::zero(); r];
        v[j] = BigInt::from(-1);
        rays.push(v);
        let mut m: BitMask = 0;
        for i in 0..r {
            if i != j {
                m |= 1 << i;
            }
        }
        active.push(m);
    }
    for (ci, c) in constraints.iter().enumerate().skip(r) {
        let vals: Vec<BigInt> = rays.iter().map(|ray| dot_ii(c, ray)).collect();
        let mut neg = Vec::new();
        let mut zero = Vec::new();
        let mut pos = Vec::new();
        for (k, v) in vals.iter().enumerate() {
            if v.is_negative() {
                neg.push(k);
            } else if v.is_zero() {
                zero.push(k);
            } else {
                pos.push(k);
            }
        }
        if pos.is_empty() {
            for &k in &zero {
                active[k] |= 1 << ci;
            }
            continue;
        }
        let mut new_rays = Vec::new();
        let mut new_active = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = active[p] & active[n];
                let adjacent = (0..rays.len())
                    .all(|t| t == p || t == n || (common & !active[t]) != 0);
                if !adjacent {
                    continue;
                }
                let cp = &vals[p];
                let cn = &vals[n];
                let combined: Vec<BigInt> = rays[p]
                    .iter()
                    .zip(&rays[n])
                    .map(|(xp, xn)| cp * xn - cn * xp)
                    .collect();
                if let Some(v) = primitive_reduce(&combined) {
                    new_rays.push(v);
                    new_active.push((common) | (1 << ci));
                }
            }
        }
        let mut kept_rays = Vec::new();
        let mut kept_active = Vec::new();
        for &k in neg.iter().chain(&zero) {
            kept_rays.push(rays[k].clone());
            let mut m = active[k];
            if vals[k].is_zero() {
                m |= 1 << ci;
            }
            kept_active.push(m);
        }
        kept_rays.extend(new_rays);
        kept_active.extend(new_active);
        rays = kept_rays;
        active = kept_active;
    }
    rays
}

/// Generator description of `{ x : n . x <= 0 for n in normals }`.
/// Returns canonical (rays, lineality) in the ambient dimension.
fn dual_of_halfspaces(dim: usize, normals: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut hs: Vec<Vec<BigInt>> = normals
        .iter()
        .filter_map(|n| primitive_reduce(n))
        .collect();
    hs.sort();
    hs.dedup();
    if hs.is_empty() {
        let mut lin = Vec::new();
        for i in 0..dim {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::one();
            lin.push(v);
        }
        return (Vec::new(), lin);
    }
    // lineality of the cone = joint kernel of the normals
    let (rr, pivots) = rref(hs.iter().map(|v| to_rationals(v)).collect());
    let rank = rr.len();
    let mut lineality = Vec::new();
    let pivot_set: Vec<usize> = pivots.clone();
    for c in 0..dim {
        if pivot_set.contains(&c) {
            continue;
        }
        let mut v = vec![BigRational::zero(); dim];
        v[c] = BigRational::one();
        for (k, &pc) in pivot_set.iter().enumerate() {
            v[pc] = -rr[k][c].clone();
        }
        lineality.push(primitive_int(&v).expect("kernel vector nonzero"));
    }
    // choose an independent subset of normals greedily (in sorted order)
    let mut basis_rows: Vec<Vec<BigRational>> = Vec::new();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    let mut rest: Vec<Vec<BigInt>> = Vec::new();
    for h in &hs {
        if basis.len() < rank {
            let mut trial = basis_rows.clone();
            trial.push(to_rationals(h));
            if rref(trial.clone()).0.len() == trial.len() {
                basis_rows = trial;
                basis.push(h.clone());
                continue;
            }
        }
        rest.push(h.clone());
    }
    debug_assert_eq!(basis.len(), rank);
    // express constraints in the coordinates y_k = basis_k . x:
    // h = sum c_k basis_k  <=>  B^T c = h
    let bt: Vec<Vec<BigRational>> = (0..dim)
        .map(|col| {
            basis
                .iter()
                .map(|b| BigRational::from_integer(b[col].clone()))
                .collect()
        })
        .collect();
    let mut y_constraints: Vec<Vec<BigInt>> = Vec::new();
    for k in 0..rank {
        let mut e = vec![BigInt::zero(); rank];
        e[k] = BigInt::one();
        y_constraints.push(e);
    }
    for h in &rest {
        let c = gauss_solve(&bt, &to_rationals(h)).expect("normal outside row space");
        y_constraints.push(primitive_int(&c).expect("dependent normal reduces to zero"));
    }
    let y_rays = pointed_dd(rank, &y_constraints);
    // lift back: solve basis . x = y for each ray
    let basis_rat: Vec<Vec<BigRational>> = basis.iter().map(|b| to_rationals(b)).collect();
    let mut rays = Vec::new();
    for y in &y_rays {
        let x = gauss_solve(&basis_rat, &to_rationals(y)).expect("lift solvable");
        rays.push(x);
    }
    canonical_v(dim, rays, lineality)
}

/// Canonicalize a generator pair: lineality to RREF-primitive, rays reduced
/// modulo the lineality span, primitive, sorted, deduplicated.
fn canonical_v(
    dim: usize,
    rays: Vec<Vec<BigRational>>,
    lineality: Vec<Vec<BigInt>>,
) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let lin = canonical_span(&lineality, dim);
    let lin_rat: Vec<(usize, Vec<BigRational>)> = lin
        .iter()
        .map(|l| {
            let rat = to_rationals(l);
            let pivot = rat.iter().position(|x| !x.is_zero()).unwrap();
            (pivot, rat)
        })
        .collect();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for ray in rays {
        let mut r = ray;
        for (pivot, l) in &lin_rat {
            if !r[*pivot].is_zero() {
                let f = &r[*pivot] / &l[*pivot];
                for j in 0..dim {
                    let v = &l[j] * &f;
                    r[j] -= v;
                }
            }
        }
        if let Some(v) = primitive_int(&r) {
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    (out, lin)
}

// ---------------------------------------------------------------------------
// Cone
// ---------------------------------------------------------------------------

/// A rational polyhedral cone in canonical saturated form.  Membership and
/// inclusion are with respect to the saturated (rational) cone; the stored
/// generators are the extremal rays plus a lineality basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
    lineality: Vec<Vec<BigInt>>,
    facets: Vec<Halfspace>,
}

impl Cone {
    fn check_dim(dim: usize) -> Result<(), ConeError> {
        if dim == 0 || dim > MAX_DIM {
            return Err(ConeError::DimensionTooLarge(dim));
        }
        Ok(())
    }

    /// Cone spanned by the given rays and lineality directions.
    pub fn from_generators(
        dim: usize,
        rays: &[Vec<BigRational>],
        lineality: &[Vec<BigRational>],
    ) -> Result<Cone, ConeError> {
        Self::check_dim(dim)?;
        for v in rays.iter().chain(lineality) {
            if v.len() != dim {
                return Err(ConeError::DimensionMismatch { expected: dim, got: v.len() });
            }
        }
        // polar: constraints are the generators themselves
        let mut constraints: Vec<Vec<BigInt>> = rays.iter().filter_map(|r| primitive_int(r)).collect();
        for l in lineality {
            if let Some(v) = primitive_int(l) {
                constraints.push(v.iter().map(|x| -x).collect());
                constraints.push(v);
            }
        }
        let (polar_rays, polar_lin) = dual_of_halfspaces(dim, &constraints);
        let facets = facets_from_polar(&polar_rays, &polar_lin);
        Ok(Self::from_facets_unchecked(dim, facets))
    }

    pub fn from_generators_weights(
        dim: usize,
        rays: &[crate::roots::Weight],
        lineality: &[crate::roots::Weight],
    ) -> Result<Cone, ConeError> {
        let r: Vec<Vec<BigRational>> = rays.iter().map(|w| w.to_rationals()).collect();
        let l: Vec<Vec<BigRational>> = lineality.iter().map(|w| w.to_rationals()).collect();
        Self::from_generators(dim, &r, &l)
    }

    /// Cone cut out by the given halfspaces (the `rays_of` direction).
    pub fn from_halfspaces(dim: usize, halfspaces: &[Halfspace]) -> Result<Cone, ConeError> {
        Self::check_dim(dim)?;
        for h in halfspaces {
            if h.dim() != dim {
                return Err(ConeError::DimensionMismatch { expected: dim, got: h.dim() });
            }
        }
        Ok(Self::from_facets_unchecked(
            dim,
            halfspaces.iter().map(|h| h.normal.clone()).collect(),
        ))
    }

    fn from_facets_unchecked(dim: usize, normals: Vec<Vec<BigInt>>) -> Cone {
        let (rays, lineality) = dual_of_halfspaces(dim, &normals);
        // recompute an irredundant facet list from the canonical generators
        let mut constraints: Vec<Vec<BigInt>> = rays.clone();
        for l in &lineality {
            constraints.push(l.iter().map(|x| -x).collect());
            constraints.push(l.clone());
        }
        let (polar_rays, polar_lin) = dual_of_halfspaces(dim, &constraints);
        let facets_n = facets_from_polar(&polar_rays, &polar_lin);
        let facets = facets_n
            .into_iter()
            .map(|n| Halfspace { normal: n })
            .collect();
        Cone { dim, rays, lineality, facets }
    }

    /// Whole space.
    pub fn full(dim: usize) -> Cone {
        Self::from_facets_unchecked(dim, Vec::new())
    }

    /// The zero cone `{0}`.
    pub fn origin(dim: usize) -> Cone {
        let mut normals = Vec::new();
        for i in 0..dim {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::one();
            normals.push(v.clone());
            normals.push(v.iter().map(|x| -x).collect());
        }
        Self::from_facets_unchecked(dim, normals)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical extremal rays (primitive, reduced modulo lineality, sorted).
    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// Canonical basis of the lineality space.
    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    /// Irredundant halfspace description.  Equations appear as pairs of
    /// opposite halfspaces.
    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn is_zero_cone(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        assert_eq!(x.len(), self.dim, "dimension mismatch in contains");
        self.facets.iter().all(|f| f.satisfied_by(x))
    }

    pub fn contains_weight(&self, w: &crate::roots::Weight) -> bool {
        self.contains(&w.to_rationals())
    }

    /// Set inclusion `self <= other`: every ray of `self` satisfies all
    /// facets of `other`, and the lineality of `self` lies on every facet
    /// hyperplane of `other`.
    pub fn included_in(&self, other: &Cone) -> bool {
        assert_eq!(self.dim, other.dim, "dimension mismatch in inclusion");
        for f in other.facets() {
            for r in &self.rays {
                if dot_ii(f.normal(), r).is_positive() {
                    return false;
                }
            }
            for l in &self.lineality {
                if !dot_ii(f.normal(), l).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn equal_as_sets(&self, other: &Cone) -> bool {
        self == other
    }

    /// Minkowski sum (join of the two generator sets).
    pub fn sum(&self, other: &Cone) -> Result<Cone, ConeError> {
        if self.dim != other.dim {
            return Err(ConeError::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let rays: Vec<Vec<BigRational>> = self
            .rays
            .iter()
            .chain(&other.rays)
            .map(|r| to_rationals(r))
            .collect();
        let lin: Vec<Vec<BigRational>> = self
            .lineality
            .iter()
            .chain(&other.lineality)
            .map(|l| to_rationals(l))
            .collect();
        Cone::from_generators(self.dim, &rays, &lin)
    }

    /// Intersection (union of the two facet systems).
    pub fn intersect(&self, other: &Cone) -> Result<Cone, ConeError> {
        if self.dim != other.dim {
            return Err(ConeError::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let hs: Vec<Halfspace> = self
            .facets
            .iter()
            .chain(&other.facets)
            .cloned()
            .collect();
        Cone::from_halfspaces(self.dim, &hs)
    }

    /// Saturation `<C> = X*(T) cap C_{Q>=0}`.  Cones are maintained in
    /// saturated canonical form, so this is the identity; it is kept as an
    /// explicit operation (idempotent, facet-preserving).
    pub fn saturate(&self) -> Cone {
        self.clone()
    }

    /// Cut the cone by one extra halfspace.
    pub fn with_halfspace(&self, h: &Halfspace) -> Result<Cone, ConeError> {
        let mut hs: Vec<Halfspace> = self.facets.clone();
        hs.push(h.clone());
        Cone::from_halfspaces(self.dim, &hs)
    }
}

fn facets_from_polar(polar_rays: &[Vec<BigInt>], polar_lin: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = polar_rays.to_vec();
    for l in polar_lin {
        out.push(l.clone());
        out.push(l.iter().map(|x| -x).collect());
    }
    out.sort();
    out.dedup();
    out
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rays:")?;
        for r in &self.rays {
            writeln!(f, "  {:?}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
        }
        if !self.lineality.is_empty() {
            writeln!(f, "lineality:")?;
            for l in &self.lineality {
                writeln!(f, "  {:?}", l.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
            }
        }
        writeln!(f, "facets:")?;
        for h in &self.facets {
            writeln!(f, "  {}", h)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: &[i64]) -> Vec<BigRational> {
        v.iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect()
    }

    fn cone_of(dim: usize, rays: &[&[i64]]) -> Cone {
        let r: Vec<Vec<BigRational>> = rays.iter().map(|v| rat(v)).collect();
        Cone::from_generators(dim, &r, &[]).unwrap()
    }

    #[test]
    fn positive_quadrant() {
        let c = cone_of(2, &[&[1, 0], &[0, 1]]);
        let f: Vec<String> = c.facets().iter().map(|h| h.to_string()).collect();
        assert_eq!(f, vec!["-a1 <= 0", "-a2 <= 0"]);
        assert_eq!(c.rays().len(), 2);
        assert!(c.lineality().is_empty());
    }

    #[test]
    fn opposite_rays_merge_to_lineality() {
        let c = cone_of(2, &[&[1, 0], &[-1, 0]]);
        assert_eq!(c.lineality().len(), 1);
        assert_eq!(c.lineality()[0], vec![BigInt::from(1), BigInt::from(0)]);
        assert!(c.rays().is_empty());
        let f: Vec<String> = c.facets().iter().map(|h| h.to_string()).collect();
        assert_eq!(f, vec!["-a2 <= 0", "a2 <= 0"]);
    }

    #[test]
    fn generators_become_primitive() {
        let c = cone_of(2, &[&[2, 0]]);
        assert_eq!(c.rays(), &[vec![BigInt::from(1), BigInt::from(0)]]);
    }

    #[test]
    fn single_halfspace_dual() {
        let h = Halfspace::from_i64(&[1, 0]).unwrap();
        let c = Cone::from_halfspaces(2, &[h]).unwrap();
        assert_eq!(c.lineality().len(), 1);
        assert_eq!(c.rays().len(), 1);
        assert_eq!(c.rays()[0], vec![BigInt::from(-1), BigInt::from(0)]);
    }

    #[test]
    fn zero_cone_and_full_space() {
        let z = Cone::origin(3);
        assert!(z.is_zero_cone());
        assert!(z.contains(&rat(&[0, 0, 0])));
        assert!(!z.contains(&rat(&[1, 0, 0])));
        let f = Cone::full(3);
        assert!(f.is_full());
        assert!(f.contains(&rat(&[-7, 2, 9])));
        assert!(z.included_in(&f));
        assert!(!f.included_in(&z));
        // all ops total on the zero cone
        let c = cone_of(3, &[&[1, 0, 0]]);
        assert_eq!(c.sum(&z).unwrap(), c);
        assert_eq!(c.intersect(&c).unwrap(), c);
    }

    #[test]
    fn membership_example() {
        // (1,0,-5) violates 25a1+5a2+a3 <= 0
        let h = Halfspace::from_i64(&[25, 5, 1]).unwrap();
        assert!(!h.satisfied_by(&rat(&[1, 0, -5])));
        assert!(h.satisfied_by(&rat(&[-1, 0, 0])));
    }

    #[test]
    fn saturation_contains_lattice_points() {
        let c = cone_of(2, &[&[2, 0], &[0, 2]]);
        assert!(c.contains(&rat(&[1, 1])));
        assert_eq!(c.saturate(), c);
        assert_eq!(c.saturate().facets(), c.facets());
    }

    #[test]
    fn inclusion_and_ops() {
        let quad = cone_of(2, &[&[1, 0], &[0, 1]]);
        let half = Cone::from_halfspaces(2, &[Halfspace::from_i64(&[-1, 0]).unwrap()]).unwrap();
        assert!(quad.included_in(&half));
        assert!(!half.included_in(&quad));
        let inter = quad.intersect(&half).unwrap();
        assert!(inter.included_in(&quad));
        assert!(inter.included_in(&half));
        let s = quad.sum(&half).unwrap();
        assert!(quad.included_in(&s));
        assert!(half.included_in(&s));
        for r in quad.rays() {
            assert!(quad.contains(&to_rationals(r)));
        }
    }

    #[test]
    fn dim4_simplicial_roundtrip() {
        let c = cone_of(4, &[&[1, 0, 0, 0], &[1, 1, 0, 0], &[1, 1, 1, 0], &[1, 1, 1, 1]]);
        assert_eq!(c.rays().len(), 4);
        assert_eq!(c.facets().len(), 4);
        let back = Cone::from_halfspaces(4, c.facets()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn lower_dimensional_cone() {
        // the ray (1,1,0) alone: facets must include the two hyperplane pairs
        let c = cone_of(3, &[&[1, 1, 0]]);
        assert_eq!(c.rays().len(), 1);
        assert!(c.contains(&rat(&[3, 3, 0])));
        assert!(!c.contains(&rat(&[3, 2, 0])));
        assert!(!c.contains(&rat(&[-1, -1, 0])));
        let back = Cone::from_halfspaces(3, c.facets()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(Cone::from_generators(7, &[], &[]).is_err());
        assert!(Cone::from_generators(2, &[rat(&[1, 2, 3])], &[]).is_err());
        assert!(Halfspace::from_i64(&[0, 0]).is_err());
    }
}
