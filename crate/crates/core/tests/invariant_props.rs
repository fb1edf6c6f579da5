mod common;

use bandprime::diagram::{checkerboard, classify_special, orient, Color, Diagram};
use bandprime::hfk::thin_hfk;
use bandprime::invariants::{bundle, gl_signature, gl_signature_with, goeritz_matrix, seifert_matrix_special, LaurentPolynomial};
use bandprime::lattice::{signature, GramForm};
use proptest::prelude::*;

fn knot() -> impl Strategy<Value = Diagram> {
    let corpus = common::alternating_corpus();
    let n = corpus.len();
    (prop::collection::vec((0..n, any::<bool>()), 1..=2), prop::collection::vec(any::<u32>(), 2)).prop_filter_map(
        "splice failed",
        move |(picks, choice)| {
            let parts: Vec<Diagram> =
                picks.iter().map(|&(i, m)| if m { corpus[i].1.mirror() } else { corpus[i].1.clone() }).collect();
            common::alternating_sum(&parts, &choice)
        },
    )
}

fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec(-4i64..=4, 0..6).prop_flat_map(|c| (Just(c), -3i32..=3)).prop_map(|(c, shift)| {
        LaurentPolynomial::from_coefficients(&c).shift(shift)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn goeritz_determinant_is_alexander_at_minus_one(d in knot()) {
        let b = bundle(&orient(&d)).unwrap();
        let cb = checkerboard(&d);
        for color in [Color::Black, Color::White] {
            let det = goeritz_matrix(&cb, color).det();
            prop_assert_eq!(det.magnitude().clone(), num_bigint::BigUint::from(b.determinant));
        }
    }

    #[test]
    fn signature_independent_of_color(d in knot()) {
        let od = orient(&d);
        prop_assert_eq!(gl_signature_with(&od, Color::Black).unwrap(), gl_signature_with(&od, Color::White).unwrap());
    }

    #[test]
    fn gl_signature_matches_seifert_form(d in knot()) {
        let od = orient(&d);
        let s = classify_special(&od).unwrap();
        prop_assume!(s.is_special_alternating());
        let v = seifert_matrix_special(&od).unwrap();
        let sym = GramForm::new(v.add(&v.transpose())).unwrap();
        let sigma = gl_signature(&od).unwrap();
        prop_assert_eq!(signature(&sym).unwrap(), sigma);
        prop_assert!(sym.rank() == 0 || sym.definiteness().is_definite());
        prop_assert_eq!(sigma.unsigned_abs() as usize, sym.rank());
    }

    #[test]
    fn mirror_negates_signature(d in knot()) {
        let (a, b) = (bundle(&orient(&d)).unwrap(), bundle(&orient(&d.mirror())).unwrap());
        prop_assert_eq!(a.signature, -b.signature);
        prop_assert_eq!(a.determinant, b.determinant);
        prop_assert_eq!(a.span(), b.span());
    }

    #[test]
    fn span_bounded_by_twice_genus(d in knot()) {
        let od = orient(&d);
        let b = bundle(&od).unwrap();
        prop_assert!(b.span() <= 2 * b.genus);
        if classify_special(&od).unwrap().is_special_alternating() {
            prop_assert_eq!(b.span(), 2 * b.genus);
            prop_assert_eq!(b.signature.abs(), 2 * b.genus);
        }
    }

    #[test]
    fn thin_hfk_identities(d in knot()) {
        let b = bundle(&orient(&d)).unwrap();
        let h = thin_hfk(&b.alexander, b.signature);
        prop_assert_eq!(h.euler_characteristic(), Some(b.alexander.clone()));
        prop_assert_eq!(h.total_rank(), b.determinant);
        prop_assert!(h.is_thin());
        let renormalized: LaurentPolynomial = b.alexander.to_string().parse().unwrap();
        prop_assert_eq!(thin_hfk(&renormalized, b.signature), h);
    }

    #[test]
    fn alexander_multiplies_under_sum(d in knot(), e in knot()) {
        prop_assume!(d.crossing_count() + e.crossing_count() <= 24);
        let Some(s) = common::alternating_sum(&[d.clone(), e.clone()], &[0, 5]) else { return Ok(()) };
        let (a, b, c) = (bundle(&orient(&d)).unwrap(), bundle(&orient(&e)).unwrap(), bundle(&orient(&s)).unwrap());
        prop_assert_eq!(c.alexander, a.alexander.mul(&b.alexander));
        prop_assert_eq!(c.signature, a.signature + b.signature);
        prop_assert_eq!(c.genus, a.genus + b.genus);
    }

    #[test]
    fn laurent_text_round_trip(p in poly()) {
        let back: LaurentPolynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn divides_products(p in poly(), q in poly()) {
        prop_assume!(!p.is_zero());
        prop_assert!(p.divides(&p.mul(&q)));
    }
}
