use nilherm_core::complex::TwoStepCoeffs;
use nilherm_core::hermitian::{is_balanced, is_skt, HermitianMetric, RegionPoint};
use nilherm_core::hodge::Hodge;
use nilherm_core::{rat, Form, Scalar};
use proptest::prelude::*;

fn small_gauss() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| Scalar::gauss(a, b, c, d))
}

/// A random form of the given degree on n = 3, up to three terms.
fn form_of_degree(k: usize) -> impl Strategy<Value = Form> {
    let letters: Vec<i8> = vec![1, 2, 3, -1, -2, -3];
    let word = proptest::sample::subsequence(letters, k);
    proptest::collection::vec((word, small_gauss()), 0..=3).prop_map(move |terms| {
        let mut f = Form::zero(3);
        for (w, c) in terms {
            f = f.add(&Form::word(3, &w, c));
        }
        f
    })
}

fn two_step() -> impl Strategy<Value = TwoStepCoeffs> {
    (0u8..=1, small_gauss(), small_gauss())
        .prop_map(|(rho, b, d)| TwoStepCoeffs::new(rho, b, d).unwrap())
}

fn metric() -> impl Strategy<Value = HermitianMetric> {
    (
        1i64..=4,
        1i64..=4,
        1i64..=4,
        small_gauss(),
        small_gauss(),
        small_gauss(),
    )
        .prop_map(|(r, s, t, u, v, z)| {
            // scale the diagonal up until the metric is positive
            let mut k = 1i64;
            loop {
                let g = HermitianMetric::new3(
                    Scalar::from_int(r * k),
                    Scalar::from_int(s * k),
                    Scalar::from_int(t * k),
                    u.clone(),
                    v.clone(),
                    z.clone(),
                )
                .unwrap();
                if g.is_positive_definite() {
                    return g;
                }
                k *= 4;
            }
        })
}

proptest! {
    #[test]
    fn wedge_is_graded_commutative(
        k in 1usize..=3,
        l in 1usize..=3,
        seed_a in form_of_degree(1),
        seed_b in form_of_degree(1),
    ) {
        // build homogeneous forms of the sampled degrees by wedging
        // with distinct fixed letters
        let barred: Vec<i8> = (1..k as i8).map(|i| -i).collect();
        let plain: Vec<i8> = (1..l as i8).collect();
        let a = seed_a.wedge(&Form::basis(3, &barred));
        let b = seed_b.wedge(&Form::basis(3, &plain));
        let ab = a.wedge(&b);
        let ba = b.wedge(&a);
        let sign = if (k * l) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(ab, ba.scale(&Scalar::from_int(sign)));
    }

    #[test]
    fn wedge_is_associative(
        a in form_of_degree(1),
        b in form_of_degree(1),
        c in form_of_degree(2),
    ) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn d_squared_vanishes_and_commutes_with_conjugation(
        coeffs in two_step(),
        f in form_of_degree(2),
    ) {
        let j = coeffs.build().unwrap();
        let df = j.eqs().d(&f);
        prop_assert!(j.eqs().d(&df).is_zero());
        prop_assert_eq!(j.eqs().d(&f.conjugate()), df.conjugate());
    }

    #[test]
    fn exact_and_approx_region_classification_agree(
        p in -8i64..=8,
        q in -8i64..=8,
        y in -8i64..=8,
        rho in 0u8..=1,
    ) {
        let exact = RegionPoint::new(
            rho,
            Scalar::exact_re(rat(p, 4)),
            Scalar::exact_re(rat(q, 4)),
            Scalar::exact_re(rat(y, 4)),
        )
        .unwrap();
        let approx = RegionPoint::new(
            rho,
            Scalar::approx(p as f64 / 4.0, 0.0),
            Scalar::approx(q as f64 / 4.0, 0.0),
            Scalar::approx(y as f64 / 4.0, 0.0),
        )
        .unwrap();
        prop_assert_eq!(exact.classify(), approx.classify());
    }
}

proptest! {
    // the classifier and Hodge properties are heavier per case
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coefficient_classifier_agrees_with_fingerprints(coeffs in two_step()) {
        let by_coeffs = coeffs.classify_algebra();
        let by_series = coeffs
            .build()
            .unwrap()
            .algebra()
            .classify_by_fingerprint()
            .unwrap();
        let tag = by_coeffs.unique().expect("coefficient classifier is decisive");
        prop_assert!(by_series.contains(tag), "{} not in {}", tag, by_series);
    }

    #[test]
    fn classification_is_a_basis_change_invariant(
        coeffs in two_step(),
        m12 in small_gauss(),
        m13 in small_gauss(),
        m23 in small_gauss(),
        d1 in 1i64..=3,
        d2 in 1i64..=3,
    ) {
        let j = coeffs.build().unwrap();
        let z = Scalar::zero;
        let m = vec![
            vec![Scalar::from_int(d1), m12, m13],
            vec![z(), Scalar::from_int(d2), m23],
            vec![z(), z(), Scalar::one()],
        ];
        let moved = j.apply_basis_change(&m).unwrap();
        prop_assert_eq!(moved.algebra().profile(), j.algebra().profile());
        prop_assert_eq!(moved.classify(), j.classify());
    }

    #[test]
    fn skt_depends_only_on_the_coefficients(coeffs in two_step(), g in metric()) {
        let j = coeffs.build().unwrap();
        prop_assert_eq!(is_skt(&j, &g).unwrap(), coeffs.skt_condition());
    }

    #[test]
    fn balanced_iff_lee_form_vanishes(coeffs in two_step(), g in metric()) {
        let j = coeffs.build().unwrap();
        let theta = Hodge::new(&j, &g).unwrap().lee_form();
        prop_assert_eq!(is_balanced(&j, &g).unwrap(), theta.is_zero());
    }
}
