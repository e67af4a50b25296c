//! Root systems, character lattices, and pairings for the classical families.
//!
//! `X*(T)` is identified with `Z^n` throughout.  Positive roots follow the
//! lower-triangular Borel convention: type A_{n-1} has positive roots
//! `e_i - e_j` (i < j), type C_n adds `e_i + e_j` and `2e_i`, type B_n adds
//! `e_i + e_j` and `e_i`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("cocharacter is not dominant: <{root}, mu> = {value} < 0")]
    NonDominant { root: String, value: String },
    #[error("q must be an integer >= 2, got {0}")]
    BadQ(i64),
    #[error("not a root of the ambient system: {0}")]
    NotARoot(String),
    #[error("cannot parse root expression `{0}`")]
    RootParse(String),
    #[error("cannot parse window `{0}`")]
    WindowParse(String),
    #[error("rank {0} not supported for this family")]
    BadRank(usize),
}

/// Ambient Weyl chamber type of a classical family.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    A,
    B,
    C,
}

/// One of the classical group families covered by the library, with its rank.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupFamily {
    /// Split general linear group GL(n).
    Gl(usize),
    /// Quasi-split unitary group U(n), Frobenius acting by lambda -> -w0(lambda).
    U(usize),
    /// Symplectic group Sp(2n); the stored value is the rank n.
    Sp(usize),
    /// Odd special orthogonal group SO(2n+1); the stored value is the rank n.
    SoOdd(usize),
}

impl GroupFamily {
    pub fn rank(&self) -> usize {
        match *self {
            GroupFamily::Gl(n) | GroupFamily::U(n) | GroupFamily::Sp(n) | GroupFamily::SoOdd(n) => n,
        }
    }

    pub fn kind(&self) -> RootKind {
        match self {
            GroupFamily::Gl(_) | GroupFamily::U(_) => RootKind::A,
            GroupFamily::Sp(_) => RootKind::C,
            GroupFamily::SoOdd(_) => RootKind::B,
        }
    }

    /// Frobenius acts nontrivially on the character lattice only for U(n).
    pub fn is_split(&self) -> bool {
        !matches!(self, GroupFamily::U(_))
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.rank();
        if n < 1 || (matches!(self.kind(), RootKind::A) && n < 2) {
            return Err(GroupError::BadRank(n));
        }
        Ok(())
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupFamily::Gl(n) => write!(f, "GL({})", n),
            GroupFamily::U(n) => write!(f, "U({})", n),
            GroupFamily::Sp(n) => write!(f, "Sp({})", 2 * n),
            GroupFamily::SoOdd(n) => write!(f, "SO({})", 2 * n + 1),
        }
    }
}

/// A root, stored by its coordinates in `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn negate(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    /// Parse expressions of the form `e1-e2`, `e2+e3`, `2e3`, `e3`.
    pub fn parse(s: &str, n: usize) -> Result<Root, GroupError> {
        let err = || GroupError::RootParse(s.to_string());
        let mut coords = vec![0i64; n];
        let idx = |t: &str| -> Result<usize, GroupError> {
            let i: usize = t.strip_prefix('e').ok_or_else(err)?.parse().map_err(|_| err())?;
            if i == 0 || i > n {
                return Err(err());
            }
            Ok(i - 1)
        };
        if let Some(rest) = s.strip_prefix("2e") {
            let i: usize = rest.parse().map_err(|_| err())?;
            if i == 0 || i > n {
                return Err(err());
            }
            coords[i - 1] = 2;
        } else if let Some(pos) = s[1..].find(['+', '-']).map(|p| p + 1) {
            let (a, b) = (&s[..pos], &s[pos + 1..]);
            coords[idx(a)?] = 1;
            coords[idx(b)?] = if s.as_bytes()[pos] == b'+' { 1 } else { -1 };
        } else {
            coords[idx(s)?] = 1;
        }
        Ok(Root::new(coords))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<(usize, i64)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect();
        match nz.as_slice() {
            [(i, 1)] => write!(f, "e{}", i + 1),
            [(i, 2)] => write!(f, "2e{}", i + 1),
            [(i, -1)] => write!(f, "-e{}", i + 1),
            [(i, -2)] => write!(f, "-2e{}", i + 1),
            [(i, a), (j, b)] if *a == 1 || *a == -1 => {
                if *a == -1 {
                    write!(f, "-")?;
                }
                write!(f, "e{}{}e{}", i + 1, if *b * *a > 0 { "+" } else { "-" }, j + 1)
            }
            _ => write!(f, "{:?}", self.coords),
        }
    }
}

/// Character of `T`, an integer vector of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<BigInt>,
}

impl Weight {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Weight { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Weight::new(vec![BigInt::zero(); n])
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.coords
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Cocharacter of `T`, a rational vector (non-integral entries occur after
/// inverting the Lang map).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coweight {
    coords: Vec<BigRational>,
}

impl Coweight {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Coweight { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Coweight::new(
            coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// The full root datum of one classical family at fixed rank.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootKind,
    rank: usize,
    positive: Vec<Root>,
    simple: Vec<Root>,
}

impl RootSystem {
    pub fn new(kind: RootKind, rank: usize) -> Self {
        let n = rank;
        let mut positive = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[j] = -1;
                positive.push(Root::new(v));
            }
        }
        if kind != RootKind::A {
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut v = vec![0i64; n];
                    v[i] = 1;
                    v[j] = 1;
                    positive.push(Root::new(v));
                }
            }
            for i in 0..n {
                let mut v = vec![0i64; n];
                v[i] = if kind == RootKind::C { 2 } else { 1 };
                positive.push(Root::new(v));
            }
        }
        let mut simple = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            simple.push(Root::new(v));
        }
        match kind {
            RootKind::C => {
                let mut v = vec![0i64; n];
                v[n - 1] = 2;
                simple.push(Root::new(v));
            }
            RootKind::B => {
                let mut v = vec![0i64; n];
                v[n - 1] = 1;
                simple.push(Root::new(v));
            }
            RootKind::A => {}
        }
        RootSystem { kind, rank, positive, simple }
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple(&self) -> &[Root] {
        &self.simple
    }

    pub fn all_roots(&self) -> Vec<Root> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(Root::negate));
        out
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.positive.contains(r) || self.positive.contains(&r.negate())
    }

    /// Coroot as an integer coweight vector.  Type A: `(e_i-e_j)^ = e_i-e_j`;
    /// type C: `(2e_i)^ = e_i`; type B: `(e_i)^ = 2e_i`.
    pub fn coroot(&self, r: &Root) -> Vec<i64> {
        let nz: Vec<i64> = r.coords().iter().filter(|&&c| c != 0).cloned().collect();
        if nz.len() == 1 {
            if nz[0].abs() == 2 {
                return r.coords().iter().map(|c| c / 2).collect();
            }
            return r.coords().iter().map(|c| 2 * c).collect();
        }
        r.coords().to_vec()
    }

    /// Exact pairing `<lambda, alpha^>`.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<BigInt, GroupError> {
        if !self.is_root(alpha) {
            return Err(GroupError::NotARoot(alpha.to_string()));
        }
        Ok(self.pairing_unchecked(lambda, alpha))
    }

    pub fn pairing_unchecked(&self, lambda: &Weight, alpha: &Root) -> BigInt {
        let cr = self.coroot(alpha);
        lambda
            .coords()
            .iter()
            .zip(cr.iter())
            .map(|(a, &b)| a * BigInt::from(b))
            .sum()
    }

    /// Pairing of a weight with an arbitrary rational coweight.
    pub fn pair_coweight(lambda: &Weight, delta: &Coweight) -> BigRational {
        lambda
            .coords()
            .iter()
            .zip(delta.coords())
            .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let c3 = RootSystem::new(RootKind::C, 3);
        let lam = Weight::from_i64(&[1, 0, -5]);
        let e1_e3 = Root::parse("e1-e3", 3).unwrap();
        assert_eq!(c3.pairing(&lam, &e1_e3).unwrap(), BigInt::from(6));
        let beta = Root::parse("2e3", 3).unwrap();
        assert_eq!(c3.pairing(&lam, &beta).unwrap(), BigInt::from(-5));
        let a2 = RootSystem::new(RootKind::A, 3);
        let sym = Weight::from_i64(&[4, 4, 4]);
        for r in a2.positive() {
            assert_eq!(a2.pairing(&sym, r).unwrap(), BigInt::zero());
        }
    }

    #[test]
    fn pairing_rejects_non_root() {
        let a3 = RootSystem::new(RootKind::A, 4);
        let bad = Root::new(vec![1, 1, 0, 0]);
        assert!(a3.pairing(&Weight::zero(4), &bad).is_err());
    }

    #[test]
    fn root_count() {
        assert_eq!(RootSystem::new(RootKind::A, 4).positive().len(), 6);
        assert_eq!(RootSystem::new(RootKind::C, 3).positive().len(), 9);
        assert_eq!(RootSystem::new(RootKind::B, 4).positive().len(), 16);
    }

    #[test]
    fn root_display_and_parse() {
        for s in ["e1-e2", "e2+e3", "2e3", "e3"] {
            let r = Root::parse(s, 3).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!(Root::parse("x1", 3).is_err());
        assert!(Root::parse("e9", 3).is_err());
    }

    #[test]
    fn coroot_tables() {
        let b2 = RootSystem::new(RootKind::B, 2);
        let short = Root::parse("e2", 2).unwrap();
        assert_eq!(b2.coroot(&short), vec![0, 2]);
        let c2 = RootSystem::new(RootKind::C, 2);
        let long = Root::parse("2e2", 2).unwrap();
        assert_eq!(c2.coroot(&long), vec![0, 1]);
        let mixed = Root::parse("e1+e2", 2).unwrap();
        assert_eq!(c2.coroot(&mixed), vec![1, 1]);
    }
}
