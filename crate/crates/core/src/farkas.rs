//! Farkas certificates and exact rational LP feasibility.
//!
//! A certificate expresses a target linear form as a nonnegative combination
//! of source forms, proving that the cone cut out by the sources lies in the
//! target halfspace.  The search is a phase-one simplex over exact rationals
//! with Bland's rule (lowest index on ties), so it always terminates; on
//! infeasibility it returns a separating witness.

use crate::cone::Halfspace;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Nonnegative rational coefficients, one per source form.
#[derive(Clone, Debug, PartialEq)]
pub struct FarkasCertificate {
    coefficients: Vec<BigRational>,
}

impl FarkasCertificate {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        FarkasCertificate { coefficients }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for FarkasCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug)]
pub enum FarkasOutcome {
    /// The target equals the certified combination of the sources.
    Certificate(FarkasCertificate),
    /// A vector satisfying every source inequality but violating the target.
    Infeasible { witness: Vec<BigRational> },
}

impl FarkasOutcome {
    pub fn is_certificate(&self) -> bool {
        matches!(self, FarkasOutcome::Certificate(_))
    }
}

/// Check that `sum_i cert_i * sources_i == target` exactly with all
/// coefficients nonnegative.
pub fn verify_forms(
    target: &[BigRational],
    sources: &[Vec<BigRational>],
    cert: &FarkasCertificate,
) -> bool {
    if cert.coefficients.len() != sources.len() || !cert.is_nonnegative() {
        return false;
    }
    let dim = target.len();
    if sources.iter().any(|s| s.len() != dim) {
        return false;
    }
    for j in 0..dim {
        let mut acc = BigRational::zero();
        for (c, s) in cert.coefficients.iter().zip(sources) {
            acc += c * &s[j];
        }
        if acc != target[j] {
            return false;
        }
    }
    true
}

/// Halfspace flavor of [`verify_forms`]; indices in the certificate refer to
/// positions in `sources`.
pub fn farkas_verify(target: &Halfspace, sources: &[Halfspace], cert: &FarkasCertificate) -> bool {
    let t = target.to_rationals();
    let s: Vec<Vec<BigRational>> = sources.iter().map(|h| h.to_rationals()).collect();
    verify_forms(&t, &s, cert)
}

/// Find nonnegative `x` with `sum_i x_i sources_i == target`, or a witness
/// `y` with `target . y > 0` and `source . y <= 0` for every source.
pub fn search_forms(target: &[BigRational], sources: &[Vec<BigRational>]) -> FarkasOutcome {
    let dim = target.len();
    assert!(sources.iter().all(|s| s.len() == dim), "dimension mismatch");
    let outcome = phase_one(target, sources);
    match &outcome {
        FarkasOutcome::Certificate(cert) => {
            assert!(
                verify_forms(target, sources, cert),
                "internal: simplex produced an invalid certificate"
            );
        }
        FarkasOutcome::Infeasible { witness } => {
            let tv: BigRational = target
                .iter()
                .zip(witness)
                .map(|(a, b)| a * b)
                .sum();
            assert!(tv.is_positive(), "internal: witness does not violate target");
            for s in sources {
                let sv: BigRational = s.iter().zip(witness).map(|(a, b)| a * b).sum();
                assert!(!sv.is_positive(), "internal: witness leaves a source halfspace");
            }
        }
    }
    outcome
}

pub fn farkas_search(target: &Halfspace, sources: &[Halfspace]) -> FarkasOutcome {
    let t = target.to_rationals();
    let s: Vec<Vec<BigRational>> = sources.iter().map(|h| h.to_rationals()).collect();
    search_forms(&t, &s)
}

/// Phase-one simplex for `A x = b, x >= 0` where the columns of `A` are the
/// source forms and `b` is the target.
#[allow(clippy::needless_range_loop)]
fn phase_one(target: &[BigRational], sources: &[Vec<BigRational>]) -> FarkasOutcome {
    let m = target.len(); // constraint rows
    let k = sources.len(); // structural variables
    // row signs chosen so the right-hand side is nonnegative
    let signs: Vec<bool> = target.iter().map(|t| t.is_negative()).collect();
    let flip = |v: &BigRational, row: usize| if signs[row] { -v.clone() } else { v.clone() };
    // tableau: columns 0..k structural, k..k+m artificial, last column rhs
    let ncols = k + m + 1;
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![BigRational::zero(); ncols];
            for (j, s) in sources.iter().enumerate() {
                row[j] = flip(&s[i], i);
            }
            row[k + i] = BigRational::one();
            row[ncols - 1] = flip(&target[i], i);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    // objective row: minimize the sum of artificials; reduced costs
    // c_j - z_j with c = (0,...,0,1,...,1)
    let mut obj = vec![BigRational::zero(); ncols];
    for j in 0..ncols {
        let mut z = BigRational::zero();
        for row in t.iter() {
            z += &row[j];
        }
        let c = if (k..k + m).contains(&j) {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        obj[j] = c - z;
    }
    // note: column ncols-1 of obj now holds -(objective value)
    // Bland: entering = lowest-index column with negative reduced cost
    while let Some(enter) = (0..k + m).find(|&j| obj[j].is_negative()) {
        // ratio test; ties by lowest basis variable index (Bland)
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[ncols - 1] / &row[enter];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((li, _)) = leave else {
            // unbounded phase-one objective cannot happen (bounded below by 0)
            unreachable!("phase-one simplex unbounded");
        };
        // pivot on (li, enter)
        let piv = t[li][enter].clone();
        for x in t[li].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m {
            if i != li && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..ncols {
                    let v = &t[li][j] * &f;
                    t[i][j] -= v;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..ncols {
                let v = &t[li][j] * &f;
                obj[j] -= v;
            }
        }
        basis[li] = enter;
    }
    let objective: BigRational = -obj[ncols - 1].clone();
    if objective.is_zero() {
        let mut x = vec![BigRational::zero(); k];
        for (i, &b) in basis.iter().enumerate() {
            if b < k {
                x[b] = t[i][ncols - 1].clone();
            }
        }
        FarkasOutcome::Certificate(FarkasCertificate::new(x))
    } else {
        // simplex multipliers: y_i = 1 - reduced cost of artificial i,
        // then undo the row sign flips
        let witness: Vec<BigRational> = (0..m)
            .map(|i| {
                let y = BigRational::one() - &obj[k + i];
                if signs[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        FarkasOutcome::Infeasible { witness }
    }
}
