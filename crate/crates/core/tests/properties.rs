use proptest::prelude::*;

use symgroth::arith::{qr, Q};
use symgroth::groth::{gtilde_to_schur, schur_to_gtilde};
use symgroth::measures::plancherel_hecke;
use symgroth::polyring::series::{h_to_p, p_to_h};
use symgroth::polyring::{Basis, BasisVector};
use symgroth::special::{p_values_consistency, EdreiThomaParams, GammaEvaluator, GammaSpec, HModel};
use symgroth::tnn::{all_minors_nonneg, criterion_nonneg, is_totally_nonnegative, ToeplitzBand};
use symgroth::{Partition, SpecValue};

fn partition() -> impl Strategy<Value = Partition> {
    parts(6, 5)
}

fn parts(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..max_part, 0..max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn rational(lo: i64, hi: i64) -> impl Strategy<Value = Q> {
    (lo..hi, 1i64..8).prop_map(|(n, d)| qr(n, d))
}

fn params() -> impl Strategy<Value = EdreiThomaParams> {
    (
        prop::collection::vec(rational(0, 8), 0..3),
        prop::collection::vec(rational(0, 8), 0..3),
        rational(0, 4),
        any::<bool>(),
    )
        .prop_map(|(alphas, betas, gamma, dual)| EdreiThomaParams {
            alphas,
            betas,
            gamma,
            model: if dual { HModel::Dual } else { HModel::EdreiThoma },
            ..Default::default()
        })
}

fn positive_spec() -> impl Strategy<Value = GammaSpec> {
    (prop::collection::vec(rational(0, 8), 0..3), prop::collection::vec((0i64..6, 6i64..8), 0..3)).prop_map(
        |(alphas, betas)| {
            let betas = betas.into_iter().map(|(n, d)| qr(n, d)).collect();
            GammaSpec::from_params(&EdreiThomaParams { alphas, betas, ..Default::default() }, 12).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_round_trip(l in partition()) {
        let back: Partition = l.to_string().parse().unwrap();
        prop_assert_eq!(&back, &l);
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn canonical_order_is_graded(a in partition(), b in partition()) {
        if a.size() < b.size() {
            prop_assert!(a < b);
        }
        if a.size() == b.size() && a.parts() > b.parts() {
            prop_assert!(a < b);
        }
    }

    #[test]
    fn newton_round_trip(cs in prop::collection::vec(rational(-6, 7), 1..7)) {
        let mut h = vec![Q::from_integer(1.into())];
        h.extend(cs);
        let p = h_to_p(&h).unwrap();
        prop_assert_eq!(p_to_h(&p).unwrap(), h);
    }

    #[test]
    fn p_closed_forms_match_newton(p in params()) {
        prop_assert!(p_values_consistency(&p, 6).unwrap());
    }

    #[test]
    fn tnn_scan_matches_criterion(values in prop::collection::vec(rational(-2, 8), 4)) {
        let mut v = vec![Q::from_integer(1.into())];
        v.extend(values);
        let band = ToeplitzBand::from_rationals(&v, Some(4)).unwrap();
        let brute = all_minors_nonneg(&band).unwrap().is_pass();
        prop_assert_eq!(criterion_nonneg(&band).unwrap().is_pass(), brute);
        prop_assert_eq!(is_totally_nonnegative(&band, 4).unwrap().is_pass(), brute);
    }

    #[test]
    fn positive_specs_give_tnn_bands(spec in positive_spec()) {
        let band = ToeplitzBand::from_gamma_spec(&spec, 5).unwrap();
        prop_assert!(all_minors_nonneg(&band).unwrap().is_pass());
        prop_assert!(criterion_nonneg(&band).unwrap().is_pass());
    }

    #[test]
    fn positive_specs_are_nonnegative(spec in positive_spec(), l in partition()) {
        let v = GammaEvaluator::new(&spec).straight(&l).unwrap();
        prop_assert!(v.certainly_nonnegative());
    }

    #[test]
    fn plancherel_hecke_normalized(m in 1usize..5, n in 1usize..5) {
        let t = plancherel_hecke(m, n).unwrap();
        prop_assert_eq!(t.total(), SpecValue::one());
        prop_assert!(t.all_nonnegative());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn schur_gtilde_round_trip(l in parts(4, 3)) {
        let unit = BasisVector::unit(Basis::Gtilde, l.clone());
        let back = schur_to_gtilde(&gtilde_to_schur(&unit, 6), 6);
        prop_assert_eq!(back, unit.truncate(6));
    }
}
