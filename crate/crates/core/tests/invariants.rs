//! Module-level invariants beyond the acceptance criteria: monotonicity of
//! the intersection-sum recursion, the two independent verification routes,
//! integer exactness of the certificate identities, and the symbolic
//! (all-q) verification mode.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use zipcone::casebook::{load_case, CaseId};
use zipcone::cone::{Cone, Halfspace};
use zipcone::farkas::{search_forms, FarkasOutcome};
use zipcone::report::Status;
use zipcone::roots::{Coweight, Root, Weight};
use zipcone::sepsys::{eval_form, symbolic_identities_hold, CertTerm, SepRow, Session};
use zipcone::weyl::WeylElt;
use zipcone::zipdata::build_context;

#[test]
fn monotone_soundness_of_the_recursion() {
    for (id, q) in [(CaseId::Sp6, 5i64), (CaseId::Gl4S22, 3), (CaseId::U4S31, 2)] {
        let data = load_case(id).unwrap();
        let ctx = data.context(q).unwrap();
        let mut session = Session::new(&ctx, &data.system);
        for row in &data.system.rows {
            if row.ee.is_empty() {
                continue;
            }
            let cone = session.intersection_sum_cone(&row.w);
            let hasse_e = session.hasse_cone_e(&row.w);
            assert!(
                hasse_e.included_in(&cone),
                "{} {}: hasse part not inside the cone",
                id,
                row.w
            );
            for nb in &row.neighbors {
                let sub = session.intersection_sum_cone(nb);
                let upper = hasse_e.sum(&sub).unwrap();
                assert!(
                    cone.included_in(&upper),
                    "{} {}: cone exceeds hasse + neighbor {}",
                    id,
                    row.w,
                    nb
                );
            }
        }
    }
}

#[test]
fn base_case_is_the_single_stratum_hasse_cone() {
    let data = load_case(CaseId::Sp6).unwrap();
    let ctx = data.context(5).unwrap();
    let mut session = Session::new(&ctx, &data.system);
    for w in ["132", "124", "213"] {
        let w = WeylElt::parse_window(w, 3).unwrap();
        assert_eq!(session.intersection_sum_cone(&w), session.hasse_at(&w));
    }
}

#[test]
fn certificate_and_cone_routes_agree() {
    // both the evaluated certificates and the direct polyhedral inclusion
    // must accept every claimed bound
    for (id, q) in [(CaseId::Sp6, 7i64), (CaseId::Gl4S31, 3), (CaseId::U3S21, 5)] {
        let data = load_case(id).unwrap();
        let ctx = data.context(q).unwrap();
        let mut session = Session::new(&ctx, &data.system);
        for row in &data.system.rows {
            let checks = session.verify_row(&row.w);
            for c in &checks {
                assert_ne!(
                    c.status,
                    Status::Fail,
                    "{} {}: {} :: {}",
                    id,
                    row.w,
                    c.name,
                    c.details
                );
            }
            if row.ee.is_empty() {
                continue;
            }
            let cone = session.intersection_sum_cone(&row.w);
            for b in &row.bounds {
                let v = eval_form(b, q).unwrap();
                let h = Halfspace::from_rationals(&v).unwrap();
                let half = Cone::from_halfspaces(session.eff_dim(), &[h]).unwrap();
                assert!(cone.included_in(&half), "{} {}: cone route failed", id, row.w);
            }
        }
    }
}

#[test]
fn evaluated_identity_is_exact_over_the_integers() {
    // clear denominators for the terminal certificate and check the integer
    // combination vanishes coordinate by coordinate
    let data = load_case(CaseId::Sp6).unwrap();
    let q = 5i64;
    let terminal = WeylElt::parse_window("564", 3).unwrap();
    let row = data.system.row(&terminal).unwrap();
    let cert = &row.certs[0];
    let target = eval_form(&row.bounds[0], q).unwrap();
    // gather sources in certificate term order
    let sources: Vec<Vec<BigRational>> = cert
        .terms
        .iter()
        .map(|t: &CertTerm| {
            let k = row.ee.iter().position(|a: &Root| *a == t.alpha).unwrap();
            let nb = &row.neighbors[k];
            let nb_row: &SepRow = data.system.row(nb).unwrap();
            eval_form(&nb_row.bounds[t.source_index - 1], q).unwrap()
        })
        .collect();
    let coeffs: Vec<BigRational> = cert.terms.iter().map(|t| t.coeff.eval(q).unwrap()).collect();
    let mut denom = BigInt::one();
    for c in &coeffs {
        denom = denom.lcm(c.denom());
    }
    for j in 0..target.len() {
        let mut acc = BigRational::zero();
        for (c, s) in coeffs.iter().zip(&sources) {
            acc += c * &s[j];
        }
        let diff = (&acc - &target[j]) * BigRational::from_integer(denom.clone());
        assert!(diff.is_integer());
        assert!(diff.numer().is_zero(), "coordinate {} residue {}", j, diff);
    }
    // all three coefficients are nonnegative at q = 5; the first is u(5)
    assert!(coeffs.iter().all(|c| !c.is_negative()));
    let u = data.constants["u"].eval(q).unwrap();
    assert_eq!(coeffs[0], u);
}

#[test]
fn all_shipped_rows_are_fully_separating() {
    for id in CaseId::TABLED {
        let data = load_case(id).unwrap();
        let ctx = data.context(5).unwrap();
        for row in &data.system.rows {
            assert!(
                zipcone::sepsys::is_full_separating(&ctx, &row.w),
                "{} {}",
                id,
                row.w
            );
        }
        // and all separating-system conditions hold
        let session = Session::new(&ctx, &data.system);
        for c in session.validate() {
            assert_ne!(c.status, Status::Fail, "{}: {} :: {}", id, c.name, c.details);
        }
    }
}

#[test]
fn synthetic_zero_character_fails_condition_a() {
    // replace one character by zero: condition (a) must flag it
    let data = load_case(CaseId::U3S21).unwrap();
    let mut sys = data.system.clone();
    let idx = sys.rows.iter().position(|r| !r.ee.is_empty()).unwrap();
    sys.rows[idx].chars[0] = Weight::zero(3);
    let ctx = data.context(5).unwrap();
    let session = Session::new(&ctx, &sys);
    let checks = session.validate();
    assert!(checks
        .iter()
        .any(|c| c.name.contains("(a)") && c.status == Status::Fail));
}

#[test]
fn symbolic_mode_certifies_all_q() {
    for id in CaseId::TABLED {
        let data = load_case(id).unwrap();
        let family = data.family;
        let mu = data.mu.clone();
        assert!(
            symbolic_identities_hold(&data.system, move |q| {
                build_context(family, Coweight::from_i64(&mu), q).unwrap()
            }),
            "{}",
            id
        );
    }
}

#[test]
fn terminal_certificate_search_at_q7() {
    // an independent certificate for the terminal bound can be found by
    // exact LP over the neighbor bounds (coefficients need not match)
    let data = load_case(CaseId::Sp6).unwrap();
    let q = 7i64;
    let terminal = WeylElt::parse_window("564", 3).unwrap();
    let row = data.system.row(&terminal).unwrap();
    let target = eval_form(&row.bounds[0], q).unwrap();
    let mut sources = Vec::new();
    for nb in &row.neighbors {
        for b in &data.system.row(nb).unwrap().bounds {
            sources.push(eval_form(b, q).unwrap());
        }
    }
    match search_forms(&target, &sources) {
        FarkasOutcome::Certificate(cert) => {
            assert!(zipcone::farkas::verify_forms(&target, &sources, &cert));
        }
        FarkasOutcome::Infeasible { .. } => panic!("expected a certificate at q = 7"),
    }
}

#[test]
fn terminal_certificate_search_at_q2_reports_outcome() {
    // the certified domain starts at q = 5; below it the LP outcome over the
    // published three inequalities is recorded, not asserted
    let data = load_case(CaseId::Sp6).unwrap();
    let q = 2i64;
    let terminal = WeylElt::parse_window("564", 3).unwrap();
    let row = data.system.row(&terminal).unwrap();
    let target = eval_form(&row.bounds[0], q).unwrap();
    let mut sources = Vec::new();
    for nb in &row.neighbors {
        for b in &data.system.row(nb).unwrap().bounds {
            sources.push(eval_form(b, q).unwrap());
        }
    }
    match search_forms(&target, &sources) {
        FarkasOutcome::Certificate(cert) => {
            println!("q=2 terminal bound: certificate exists: {}", cert);
            assert!(zipcone::farkas::verify_forms(&target, &sources, &cert));
        }
        FarkasOutcome::Infeasible { witness } => {
            println!(
                "q=2 terminal bound: no nonnegative combination; witness {:?}",
                witness.iter().map(|x| x.to_string()).collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn levi_data_shapes() {
    use zipcone::roots::GroupFamily::*;
    // U(4) signature (3,1): I0 is the middle root, both outer roots have
    // Frobenius order 2, the fixed subgroup has two elements
    let ctx = build_context(U(4), Coweight::from_i64(&[1, 1, 1, 0]), 5).unwrap();
    let ld = zipcone::cones::levi_data(&ctx);
    assert_eq!(ld.i0, vec![1]);
    assert_eq!(ld.delta_p0, vec![0, 2]);
    assert_eq!(ld.w_l0_fq.len(), 2);
    let r: Vec<u32> = ld.r_alpha.iter().map(|(_, r)| *r).collect();
    assert_eq!(r, vec![2, 1, 2]);
    // split groups: I0 = I and everything is fixed
    let ctx = build_context(Sp(3), Coweight::from_i64(&[1, 1, 1]), 5).unwrap();
    let ld = zipcone::cones::levi_data(&ctx);
    assert_eq!(ld.i0, ctx.i_set());
    assert_eq!(ld.w_l0_fq.len(), 6);
}

#[test]
fn intersect_and_sum_against_membership() {
    // random conic combinations of rays stay inside; intersections shrink
    let data = load_case(CaseId::Sp6).unwrap();
    let ctx = data.context(5).unwrap();
    let mut session = Session::new(&ctx, &data.system);
    let a = session.intersection_sum_cone(&WeylElt::parse_window("365", 3).unwrap());
    let b = session.intersection_sum_cone(&WeylElt::parse_window("546", 3).unwrap());
    let inter = a.intersect(&b).unwrap();
    assert!(inter.included_in(&a) && inter.included_in(&b));
    let s = a.sum(&b).unwrap();
    assert!(a.included_in(&s) && b.included_in(&s));
    for r in a.rays().iter().chain(b.rays()) {
        let v: Vec<BigRational> = r
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        assert!(s.contains(&v));
    }
}

#[test]
fn broken_certificates_are_flagged_not_fatal() {
    use zipcone::qpoly::RatFunc;
    // a certificate referencing a nonexistent source index
    let data = load_case(CaseId::U3S21).unwrap();
    let mut sys = data.system.clone();
    let idx = sys.rows.iter().position(|r| !r.certs.is_empty()).unwrap();
    sys.rows[idx].certs[0].terms[0].source_index = 9;
    let ctx = data.context(5).unwrap();
    let w = sys.rows[idx].w.clone();
    let mut session = Session::new(&ctx, &sys);
    let checks = session.verify_row(&w);
    assert!(checks
        .iter()
        .any(|c| c.status == Status::Fail && c.details.contains("unknown source")));

    // a wrong coefficient: the identity fails and a replacement is searched
    let mut sys = data.system.clone();
    sys.rows[idx].certs[0].terms[0].coeff = RatFunc::constant(7);
    let mut session = Session::new(&ctx, &sys);
    let checks = session.verify_row(&w);
    assert!(checks
        .iter()
        .any(|c| c.name.contains("identity") && c.status == Status::Fail));
    assert!(checks
        .iter()
        .any(|c| c.name.contains("replacement") && c.details.contains("found by search")));
}

#[test]
fn denominator_vanishing_is_reported() {
    use zipcone::qpoly::{IntPoly, RatFunc};
    // a coefficient with denominator (q - 5) evaluated at q = 5
    let data = load_case(CaseId::U3S21).unwrap();
    let mut sys = data.system.clone();
    let idx = sys.rows.iter().position(|r| !r.certs.is_empty()).unwrap();
    sys.rows[idx].certs[0].terms[0].coeff =
        RatFunc::new(IntPoly::from_i64(&[1]), IntPoly::from_i64(&[-5, 1]));
    let ctx = data.context(5).unwrap();
    let w = sys.rows[idx].w.clone();
    let mut session = Session::new(&ctx, &sys);
    let checks = session.verify_row(&w);
    assert!(checks
        .iter()
        .any(|c| c.status == Status::Fail && c.details.contains("denominator vanishes")));
}
