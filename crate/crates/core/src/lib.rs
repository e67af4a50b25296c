//! Weight cones of automorphic forms on stacks of G-zips for the classical
//! families, verified by exact rational arithmetic.
//!
//! The crate provides:
//!
//! * root data, character lattices and Weyl groups for GL(n), U(n), Sp(2n)
//!   and SO(2n+1), with the combinatorial zip data attached to a cocharacter
//!   ([`roots`], [`weyl`], [`zipdata`]);
//! * exact rational polyhedral cones in dimension at most 6, with double
//!   description conversion, and Farkas-certificate search by exact simplex
//!   ([`cone`], [`farkas`]);
//! * the named weight cones (dominance chambers, Griffiths-Schmid, Hasse,
//!   highest/lowest weight, orbit cone, certified zip-cone presets) and the
//!   partial-Hasse-invariant weights ([`cones`]);
//! * separating systems with the intersection-sum cone recursion and exact
//!   certificate verification ([`sepsys`]);
//! * the shipped case tables and runners that reproduce each of the certified
//!   computations ([`casebook`]).
//!
//! All arithmetic is exact: integers, rationals, and rational functions of
//! the prime-power parameter `q` (any integer `q >= 2` is accepted).
//!
//! ```
//! use zipcone::{build_context, named_cone, zip_preset, Coweight, GroupFamily, NamedConeId};
//!
//! let ctx = build_context(GroupFamily::Sp(3), Coweight::from_i64(&[1, 1, 1]), 5)?;
//! let hw = named_cone(&ctx, &NamedConeId::Hw)?;
//! let zip = zip_preset(&ctx)?;
//! assert!(hw.included_in(&zip));
//! assert_eq!(zip.rays().len(), 4);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod casebook;
pub mod cone;
pub mod cones;
pub mod farkas;
pub mod qpoly;
pub mod report;
pub mod roots;
pub mod sepsys;
pub mod weyl;
pub mod zipdata;

pub use casebook::{
    case_json_text, diagram_checks, extremal_ray_audit, load_case, run_case, sweep, CaseData,
    CaseError, CaseId,
};
pub use cone::{Cone, ConeError, Halfspace};
pub use cones::{
    bar, bar_cone, canonical_fundamental, h_w, h_z, hasse_weight, is_hasse_type, levi_data,
    multiplicity, named_cone, p_star, p_star_inverse, unbar_cone, zip_preset, LeviData,
    NamedConeId, ZipConeError,
};
pub use farkas::{farkas_search, farkas_verify, FarkasCertificate, FarkasOutcome};
pub use qpoly::{IntPoly, RatFunc};
pub use report::{CaseResult, Check, Status, SweepReport};
pub use roots::{Coweight, GroupError, GroupFamily, Root, RootKind, RootSystem, Weight};
pub use sepsys::{is_full_separating, SepRow, SeparatingSystem, Session};
pub use weyl::{CosetSide, WeylElt, WeylGroup};
pub use zipdata::{build_context, ZipContext};
