//! Combinatorial zip data attached to a cocharacter: the Levi type `I`, the
//! dual type `J`, the twisting element `z`, the Frobenius action, and the
//! partial order on the stratum labels `^I W`.

use crate::roots::{Coweight, GroupError, GroupFamily, Root, RootSystem, Weight};
use crate::weyl::{CosetSide, WeylElt, WeylGroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::sync::Arc;

#[derive(Clone)]
pub struct ZipContext {
    family: GroupFamily,
    mu: Coweight,
    q: i64,
    weyl: Arc<WeylGroup>,
    i_set: Vec<usize>,
    j_set: Vec<usize>,
    z: WeylElt,
    w0: WeylElt,
    w0_i: WeylElt,
}

impl std::fmt::Debug for ZipContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ZipContext")
            .field("family", &self.family)
            .field("mu", &self.mu.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>())
            .field("q", &self.q)
            .field("I", &self.i_set)
            .field("J", &self.j_set)
            .field("z", &self.z.window_string())
            .finish()
    }
}

/// Build the full combinatorial context for `(family, mu, q)`.
pub fn build_context(family: GroupFamily, mu: Coweight, q: i64) -> Result<ZipContext, GroupError> {
    family.validate()?;
    if q < 2 {
        return Err(GroupError::BadQ(q));
    }
    let n = family.rank();
    if mu.dim() != n {
        return Err(GroupError::RankMismatch { expected: n, got: mu.dim() });
    }
    let weyl = Arc::new(WeylGroup::build(family.kind(), n));
    let rs = weyl.root_system();
    // dominance and the Levi type I = { alpha in Delta : <alpha, mu> = 0 }
    let mut i_set = Vec::new();
    for (k, alpha) in rs.simple().iter().enumerate() {
        let v: BigRational = alpha
            .coords()
            .iter()
            .zip(mu.coords())
            .map(|(&a, m)| BigRational::from_integer(BigInt::from(a)) * m)
            .sum();
        if v.is_negative() {
            return Err(GroupError::NonDominant {
                root: alpha.to_string(),
                value: v.to_string(),
            });
        }
        if num_traits::Zero::is_zero(&v) {
            i_set.push(k);
        }
    }
    let w0 = weyl.longest().clone();
    let w0_i = weyl.longest_in(&i_set);
    // z = sigma(w_{0,I}) w_0 = w_0 w_{0,J}; the second identity defines J
    let sigma_w0i = frobenius_w_raw(&family, &weyl, &w0_i);
    let z = sigma_w0i.compose(&w0);
    let w0_j = w0.compose(&z);
    let mut j_set = Vec::new();
    for (k, _) in rs.simple().iter().enumerate() {
        let s = weyl.simple_reflection(k);
        if weyl.length(&w0_j.compose(s)) < weyl.length(&w0_j) {
            j_set.push(k);
        }
    }
    debug_assert_eq!(weyl.longest_in(&j_set), w0_j, "J is not the descent set of w0 z");
    Ok(ZipContext {
        family,
        mu,
        q,
        weyl,
        i_set,
        j_set,
        z,
        w0,
        w0_i,
    })
}

fn frobenius_w_raw(family: &GroupFamily, weyl: &WeylGroup, w: &WeylElt) -> WeylElt {
    if family.is_split() {
        w.clone()
    } else {
        let w0 = weyl.longest();
        w0.compose(w).compose(w0)
    }
}

impl ZipContext {
    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.family.rank()
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn mu(&self) -> &Coweight {
        &self.mu
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn roots(&self) -> &RootSystem {
        self.weyl.root_system()
    }

    /// Indices (into the simple roots) of the Levi type `I`.
    pub fn i_set(&self) -> &[usize] {
        &self.i_set
    }

    /// Indices of the dual parabolic type `J`.
    pub fn j_set(&self) -> &[usize] {
        &self.j_set
    }

    pub fn i_roots(&self) -> Vec<Root> {
        self.i_set
            .iter()
            .map(|&k| self.roots().simple()[k].clone())
            .collect()
    }

    /// Simple roots outside the Levi (`Delta^P`).
    pub fn delta_p(&self) -> Vec<Root> {
        (0..self.roots().simple().len())
            .filter(|k| !self.i_set.contains(k))
            .map(|k| self.roots().simple()[k].clone())
            .collect()
    }

    pub fn z(&self) -> &WeylElt {
        &self.z
    }

    pub fn w0(&self) -> &WeylElt {
        &self.w0
    }

    pub fn w0_i(&self) -> &WeylElt {
        &self.w0_i
    }

    /// Frobenius on the character lattice: trivial for split groups,
    /// `lambda -> -w0 lambda` for U(n).  It is an involution, so it is its
    /// own inverse.
    pub fn frobenius(&self, lambda: &Weight) -> Weight {
        if self.family.is_split() {
            lambda.clone()
        } else {
            self.w0.act_weight(lambda).neg()
        }
    }

    pub fn frobenius_root(&self, alpha: &Root) -> Root {
        if self.family.is_split() {
            alpha.clone()
        } else {
            self.w0.act_root(alpha).negate()
        }
    }

    pub fn frobenius_coweight(&self, delta: &[BigRational]) -> Vec<BigRational> {
        if self.family.is_split() {
            delta.to_vec()
        } else {
            self.w0
                .act_rationals(delta)
                .iter()
                .map(|c| -c.clone())
                .collect()
        }
    }

    /// Frobenius on the Weyl group: `w -> w0 w w0` for U(n), trivial otherwise.
    pub fn frobenius_w(&self, w: &WeylElt) -> WeylElt {
        frobenius_w_raw(&self.family, &self.weyl, w)
    }

    /// The stratum labels `^I W`, ordered by (length, window).
    pub fn min_reps_i(&self) -> Vec<WeylElt> {
        self.weyl.min_coset_reps(&self.i_set, CosetSide::Left)
    }

    /// The partial order on `^I W`: `w' <= w` when some `w1` in `W_I` has
    /// `w1 w' sigma(w1)^{-1} <=_Bruhat w`.  (The twisted conjugation acts on
    /// the smaller element; this is the orientation under which the relation
    /// is a graded partial order and matches the closure of the orbits.)
    pub fn orbit_leq(&self, w_prime: &WeylElt, w: &WeylElt) -> Result<bool, GroupError> {
        for x in [w_prime, w] {
            if !self.is_min_rep_i(x) {
                return Err(GroupError::WindowParse(format!(
                    "{} is not a minimal coset representative",
                    x
                )));
            }
        }
        for w1 in self.weyl.parabolic_elements(&self.i_set) {
            let conj = w1.compose(w_prime).compose(&self.frobenius_w(&w1).inverse());
            if self.weyl.bruhat_leq(&conj, w) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn closure(&self, w: &WeylElt) -> Result<Vec<WeylElt>, GroupError> {
        let mut out = Vec::new();
        for v in self.min_reps_i() {
            if self.orbit_leq(&v, w)? {
                out.push(v);
            }
        }
        Ok(out)
    }

    fn is_min_rep_i(&self, w: &WeylElt) -> bool {
        self.i_set.iter().all(|&i| {
            let s = self.weyl.simple_reflection(i);
            self.weyl.length(&s.compose(w)) > self.weyl.length(w)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::GroupFamily::*;

    fn ctx(fam: GroupFamily, mu: &[i64], q: i64) -> ZipContext {
        build_context(fam, Coweight::from_i64(mu), q).unwrap()
    }

    #[test]
    fn sp6_context() {
        let c = ctx(Sp(3), &[1, 1, 1], 5);
        let simple: Vec<String> = c.roots().simple().iter().map(|r| r.to_string()).collect();
        assert_eq!(simple, vec!["e1-e2", "e2-e3", "2e3"]);
        assert_eq!(c.i_set(), &[0, 1]);
        assert_eq!(c.j_set(), &[0, 1]);
    }

    #[test]
    fn gl4_31_context() {
        let c = ctx(Gl(4), &[1, 1, 1, 0], 3);
        assert_eq!(c.i_set(), &[0, 1]);
        // J = -w0(I)
        assert_eq!(c.j_set(), &[1, 2]);
    }

    #[test]
    fn u3_context() {
        let c = ctx(U(3), &[1, 1, 0], 7);
        assert_eq!(c.i_set(), &[0]);
        assert_eq!(c.j_set(), &[0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(build_context(Sp(3), Coweight::from_i64(&[0, 1, 1]), 5).is_err());
        assert!(build_context(Sp(3), Coweight::from_i64(&[1, 1]), 5).is_err());
        assert!(build_context(Sp(3), Coweight::from_i64(&[1, 1, 1]), 1).is_err());
    }

    #[test]
    fn z_consistency_everywhere() {
        for c in [
            ctx(Sp(2), &[1, 1], 5),
            ctx(Sp(3), &[1, 1, 1], 5),
            ctx(Gl(3), &[1, 1, 0], 5),
            ctx(Gl(4), &[1, 1, 1, 0], 5),
            ctx(Gl(4), &[1, 1, 0, 0], 5),
            ctx(U(3), &[1, 1, 0], 5),
            ctx(U(4), &[1, 1, 1, 0], 5),
            ctx(U(4), &[1, 1, 0, 0], 5),
            ctx(SoOdd(3), &[1, 0, 0], 5),
        ] {
            // z = sigma(w0I) w0 = w0 w0J
            let lhs = c.frobenius_w(c.w0_i()).compose(c.w0());
            let w0j = c.weyl().longest_in(c.j_set());
            let rhs = c.w0().compose(&w0j);
            assert_eq!(lhs, rhs);
            assert_eq!(&lhs, c.z());
            // Frobenius is an involution fixing w0 and permuting Delta
            assert_eq!(c.frobenius_w(&c.frobenius_w(c.z())), *c.z());
            assert_eq!(c.frobenius_w(c.w0()), *c.w0());
            for a in c.roots().simple() {
                let fa = c.frobenius_root(a);
                assert!(c.roots().simple().contains(&fa));
            }
        }
    }

    #[test]
    fn frobenius_on_weights() {
        let c = ctx(U(3), &[1, 1, 0], 5);
        let lam = Weight::from_i64(&[1, 0, 0]);
        assert_eq!(c.frobenius(&lam), Weight::from_i64(&[0, 0, -1]));
        assert_eq!(c.frobenius(&c.frobenius(&lam)), lam);
        let c = ctx(Gl(4), &[1, 1, 1, 0], 5);
        let lam = Weight::from_i64(&[3, -1, 0, 2]);
        assert_eq!(c.frobenius(&lam), lam);
    }

    #[test]
    fn orbit_order_basics() {
        let c = ctx(Sp(3), &[1, 1, 1], 5);
        let reps = c.min_reps_i();
        assert_eq!(reps.len(), 8);
        let e = WeylElt::identity(3);
        for w in &reps {
            assert!(c.orbit_leq(&e, w).unwrap());
            assert!(c.orbit_leq(w, w).unwrap());
        }
        // the unique maximal element has full closure
        let top = reps.last().unwrap();
        assert_eq!(c.closure(top).unwrap().len(), 8);
        // antisymmetric and graded by length
        for v in &reps {
            for w in &reps {
                let vw = c.orbit_leq(v, w).unwrap();
                let wv = c.orbit_leq(w, v).unwrap();
                if vw && wv {
                    assert_eq!(v, w);
                }
                if vw {
                    assert!(c.weyl().length(v) <= c.weyl().length(w));
                }
            }
        }
        // non-representative arguments are rejected
        let s2 = c.weyl().simple_reflection(1).clone();
        assert!(c.orbit_leq(&s2, top).is_err());
    }

    #[test]
    fn u3_orbit_order_uses_twisted_conjugation() {
        let c = ctx(U(3), &[1, 1, 0], 5);
        let reps = c.min_reps_i();
        assert_eq!(reps.len(), 3);
        for v in &reps {
            for w in &reps {
                let vw = c.orbit_leq(v, w).unwrap();
                if c.weyl().length(v) < c.weyl().length(w) {
                    assert!(vw);
                }
            }
        }
    }
}
