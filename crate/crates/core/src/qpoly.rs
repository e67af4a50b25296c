//! Integer polynomials and rational functions in the parameter `q`.
//!
//! Certificate coefficients and claimed inequalities are stored as rational
//! functions of `q` and evaluated exactly at integer values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Integer polynomial in `q`, coefficients stored lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, q: i64) -> BigInt {
        let qb = BigInt::from(q);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &qb + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Ratio of two integer polynomials in `q`.  The denominator is never the
/// zero polynomial; evaluation is exact wherever the denominator is nonzero.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RatFunc { num, den };
        if rf.den.leading().is_negative() {
            rf.num = rf.num.neg();
            rf.den = rf.den.neg();
        }
        rf
    }

    pub fn from_poly(num: IntPoly) -> Self {
        Self::new(num, IntPoly::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::constant(0)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    /// Identically zero (as a function, not merely at one value of q).
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value at integer `q`; `None` when the denominator vanishes there.
    pub fn eval(&self, q: i64) -> Option<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval(q), d))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.num.neg(), self.den.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.num.is_zero(), "division by the zero function");
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Equality as functions, by cross multiplication.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Degree bound of the numerator after clearing denominators in a linear
    /// identity; used to pick enough sample points for symbolic checks.
    pub fn degree_bound(&self) -> usize {
        self.num.degree() + self.den.degree()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    den: Option<Vec<i64>>,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let to_i64 = |p: &IntPoly| -> Vec<i64> {
            p.coeffs()
                .iter()
                .map(|c| i64::try_from(c).expect("coefficient exceeds i64 in serialization"))
                .collect()
        };
        let den = if self.den == IntPoly::one() {
            None
        } else {
            Some(to_i64(&self.den))
        };
        RatFuncRepr { num: to_i64(&self.num), den }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RatFuncRepr::deserialize(d)?;
        let den = match repr.den {
            Some(c) => {
                let p = IntPoly::from_i64(&c);
                if p.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                p
            }
            None => IntPoly::one(),
        };
        Ok(RatFunc::new(IntPoly::from_i64(&repr.num), den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(IntPoly::from_i64(num), IntPoly::from_i64(den))
    }

    #[test]
    fn eval_exact() {
        // (q^2 + 1) / (q - 1) at q = 5 -> 26/4 = 13/2
        let f = rf(&[1, 0, 1], &[-1, 1]);
        assert_eq!(f.eval(5).unwrap(), BigRational::new(13.into(), 2.into()));
        assert!(f.eval(1).is_none());
    }

    #[test]
    fn arithmetic_identities() {
        let f = rf(&[0, 2], &[1, 1]);
        let g = rf(&[3], &[0, 1]);
        let lhs = f.add(&g).mul(&g);
        let rhs = f.mul(&g).add(&g.mul(&g));
        assert!(lhs.equivalent(&rhs));
        assert!(f.sub(&f).is_zero());
        assert!(f.div(&f).equivalent(&RatFunc::one()));
    }

    #[test]
    fn display_poly() {
        let p = IntPoly::from_i64(&[1, -2, 0, 3]);
        assert_eq!(p.to_string(), "3*q^3 - 2*q + 1");
    }

    #[test]
    fn serde_roundtrip() {
        let f = rf(&[1, 0, 1], &[-1, 1]);
        let s = serde_json::to_string(&f).unwrap();
        let g: RatFunc = serde_json::from_str(&s).unwrap();
        assert!(f.equivalent(&g));
        let h: RatFunc = serde_json::from_str("{\"num\":[5]}").unwrap();
        assert!(h.equivalent(&RatFunc::constant(5)));
    }
}
