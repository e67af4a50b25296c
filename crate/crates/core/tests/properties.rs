//! Randomized property tests for the arithmetic layers.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use zipcone::cone::Cone;
use zipcone::qpoly::{IntPoly, RatFunc};
use zipcone::roots::RootKind;
use zipcone::weyl::WeylElt;

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..5).prop_map(|c| IntPoly::from_i64(&c))
}

fn nonzero_poly() -> impl Strategy<Value = IntPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn poly_eval_is_a_ring_homomorphism(a in poly(), b in poly(), q in 2i64..60) {
        prop_assert_eq!(a.add(&b).eval(q), a.eval(q) + b.eval(q));
        prop_assert_eq!(a.mul(&b).eval(q), a.eval(q) * b.eval(q));
        prop_assert_eq!(a.sub(&a).eval(q), BigInt::from(0));
    }

    #[test]
    fn ratfunc_field_identities(
        an in poly(), ad in nonzero_poly(),
        bn in poly(), bd in nonzero_poly(),
        q in 2i64..60,
    ) {
        let a = RatFunc::new(an, ad);
        let b = RatFunc::new(bn, bd);
        // distributivity through evaluation, wherever defined
        if let (Some(av), Some(bv)) = (a.eval(q), b.eval(q)) {
            if let Some(sv) = a.add(&b).eval(q) {
                prop_assert_eq!(sv, &av + &bv);
            }
            if let Some(pv) = a.mul(&b).eval(q) {
                prop_assert_eq!(pv, &av * &bv);
            }
        }
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn window_roundtrip_type_c(perm in prop::sample::subsequence((1u8..=6).collect::<Vec<_>>(), 3)) {
        // build windows from arbitrary injective digit choices when valid
        let s: String = perm.iter().map(|d| d.to_string()).collect();
        if let Ok(w) = WeylElt::parse_window(&s, 3) {
            prop_assert_eq!(w.window_string(), s);
            prop_assert!(w.compose(&w.inverse()).is_identity());
        }
    }

    #[test]
    fn conic_combinations_stay_inside(
        rays in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 1..4),
        coeffs in prop::collection::vec(0u32..6, 4),
    ) {
        let gens: Vec<Vec<BigRational>> = rays
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let cone = Cone::from_generators(3, &gens, &[]).unwrap();
        let mut point = vec![BigRational::from_integer(BigInt::from(0)); 3];
        for (g, &c) in gens.iter().zip(&coeffs) {
            for (j, x) in g.iter().enumerate() {
                point[j] += x * BigRational::from_integer(BigInt::from(c));
            }
        }
        prop_assert!(cone.contains(&point));
    }
}

#[test]
fn window_parse_rejects_invalid() {
    // digits out of range or colliding images
    assert!(WeylElt::parse_window("117", 3).is_err());
    assert!(WeylElt::parse_window("125", 3).is_err()); // 2 and 5 collide (5 = -e2)
    assert!(WeylElt::parse_window("12", 3).is_err());
    // but a legitimate signed window parses
    let w = WeylElt::parse_window("654", 3).unwrap();
    assert_eq!(w.window_string(), "654");
    let _ = RootKind::C;
}

#[test]
fn membership_agrees_between_facets_and_exact_lp() {
    // two independent routes: a point satisfies all facets iff it is a
    // nonnegative rational combination of the generators (decided by the
    // exact simplex), for cones without lineality
    use rand::{Rng, SeedableRng};
    use zipcone::farkas::search_forms;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xfacade);
    let mut agreements = 0;
    for _ in 0..200 {
        let dim = rng.gen_range(2..=4usize);
        let nrays = rng.gen_range(1..=4usize);
        let rays: Vec<Vec<BigRational>> = (0..nrays)
            .map(|_| {
                (0..dim)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-6i64..=6))))
                    .collect()
            })
            .collect();
        let cone = Cone::from_generators(dim, &rays, &[]).unwrap();
        if !cone.lineality().is_empty() {
            continue; // the LP route below characterizes pointed-generator membership
        }
        let point: Vec<BigRational> = (0..dim)
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-12i64..=12))))
            .collect();
        let by_facets = cone.contains(&point);
        let by_lp = search_forms(&point, &rays).is_certificate();
        assert_eq!(by_facets, by_lp, "rays {:?} point {:?}", rays, point);
        agreements += 1;
    }
    assert!(agreements > 100);
}
