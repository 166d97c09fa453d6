//! Three-pillar identity verification at integration scale, the M-count
//! decompositions, the documented divergences of the maximal-excludant
//! displays, and the statistic series engine against enumeration.

mod common;

use excludant_core::identities::{
    compare_pillars, gf_closed_form, gf_definitional, gf_mcount, series_sequence, verify,
    McountKind, TheoremId,
};
use excludant_core::qseries::{pochhammer, PochhammerSpec, ProductSign, TruncatedSeries};
use excludant_core::statistics::{sequence_value_with_budget, StatisticId};
use num_bigint::BigInt;

/// The ten displays that do agree with the table statistics.
const SOUND: [TheoremId; 10] = [
    TheoremId::AodOdd,
    TheoremId::AodEven,
    TheoremId::SigmaMoex,
    TheoremId::SigmaMeex,
    TheoremId::Rem2,
    TheoremId::Meex4e,
    TheoremId::EvOdd,
    TheoremId::EvEven,
    TheoremId::EvSigmaMoex,
    TheoremId::EvSigmaMeex,
];

#[test]
fn sound_theorems_verify_three_ways() {
    for theorem in SOUND {
        let report = verify(theorem, 120, 25).unwrap();
        assert!(report.pass, "{}: {:?}", theorem.name(), report.mismatch);
    }
}

/// The four maximal-excludant displays generate same-parity component
/// variants of the table statistics; the verifier pins their exact first
/// points of divergence.
#[test]
fn max_excludant_displays_diverge_at_documented_indices() {
    let expect = [
        (TheoremId::AbarOdd, 6),
        (TheoremId::AbarEven, 2),
        (TheoremId::SigmabarMoax, 2),
        (TheoremId::SigmabarMeax, 3),
    ];
    for (theorem, at) in expect {
        let report = verify(theorem, 80, 30).unwrap();
        assert!(!report.pass, "{} unexpectedly verified", theorem.name());
        let mismatch = report.mismatch.unwrap();
        assert_eq!(mismatch.n, at, "{} first divergence", theorem.name());
    }
}

/// The even-max closed form is a faithful transform of its conditioning sum
/// even though both disagree with the statistic.
#[test]
fn abar_even_closed_equals_definitional_to_200() {
    let closed = gf_closed_form(TheoremId::AbarEven, 200);
    let defn = gf_definitional(TheoremId::AbarEven, 200);
    assert_eq!(closed.first_difference(&defn), None);
}

/// The odd-max chain applies a finite-index shortcut, so its closed form
/// leaves the conditioning sum at q^6.
#[test]
fn abar_odd_closed_leaves_definitional_at_six() {
    let closed = gf_closed_form(TheoremId::AbarOdd, 60);
    let defn = gf_definitional(TheoremId::AbarOdd, 60);
    assert_eq!(closed.first_difference(&defn), Some(6));
}

#[test]
fn mcount_routes_match_closed_forms_to_200() {
    let moex = gf_mcount(McountKind::Moex, 200);
    assert_eq!(moex.first_difference(&gf_closed_form(TheoremId::SigmaMoex, 200)), None);
    let meex = gf_mcount(McountKind::Meex, 200);
    assert_eq!(meex.first_difference(&gf_closed_form(TheoremId::SigmaMeex, 200)), None);
}

#[test]
fn mcount_meex_leading_term_is_doubled_distinct_odd_count() {
    // subtracting the j = 0 term (2 p_od) leaves the j >= 1 thresholds,
    // 2 sum_{j>=1} q^{j(j+1)} p_od-series; check against enumeration to 10
    let meex = gf_mcount(McountKind::Meex, 10);
    let pod = |n: u32| -> u64 {
        sequence_value_with_budget(StatisticId::AOodd, n, 45).unwrap()
            + sequence_value_with_budget(StatisticId::AOeven, n, 45).unwrap()
    };
    for n in 0..=10u32 {
        let mut want = 2 * pod(n);
        let mut j = 1u32;
        while j * (j + 1) <= n {
            want += 2 * pod(n - j * (j + 1));
            j += 1;
        }
        assert_eq!(meex.coeff(n as usize), BigInt::from(want), "n = {n}");
    }
}

/// Telescoping inner identity used by the even-max simplification:
/// `sum_{m=1}^{n} q^{4m} (q^4;q^4)_{m-1} = 1 - (q^4;q^4)_n`.
#[test]
fn telescoping_product_identity_to_200() {
    let order = 200;
    for n in 1..=20u64 {
        let mut lhs = TruncatedSeries::zero(order);
        let mut prod = TruncatedSeries::one(order);
        for m in 1..=n {
            if m >= 2 && (4 * (m - 1)) as usize <= order {
                prod.mul_factor(4 * (m - 1) as usize, -1);
            }
            let mut t = prod.clone();
            t.shift_up(4 * m as usize);
            lhs = lhs.add(&t);
        }
        let rhs = TruncatedSeries::one(order)
            .sub(&pochhammer(&PochhammerSpec::finite(ProductSign::Plus, 4, 4, n), order));
        assert_eq!(lhs.first_difference(&rhs), None, "n = {n}");
    }
}

/// Every statistic's series engine must reproduce enumeration, including the
/// four maximal-excludant statistics whose displays are unusable.
#[test]
fn series_engine_matches_enumeration_to_40() {
    for stat in StatisticId::ALL {
        let series = series_sequence(stat, 40);
        for n in 0..=40u32 {
            let want = sequence_value_with_budget(stat, n, 45).unwrap();
            assert_eq!(
                series.coeff(n as usize),
                BigInt::from(want),
                "{} at n = {n}",
                stat.name()
            );
        }
    }
}

/// Summing the bivariate refinement's coefficients over all w-powers at
/// fixed n (the w = 1 specialization) recovers the distinct-odd-part count.
#[test]
fn bivariate_w_marginal_is_class_size() {
    let closed = excludant_core::identities::gf_closed_form_bivariate(30, 15);
    for n in 0..=30u32 {
        let count = excludant_core::partitions::enumerate(
            n,
            excludant_core::partitions::PartitionClass::DistinctOddParts,
        )
        .len();
        assert_eq!(closed.w_marginal(n as usize), BigInt::from(count), "n = {n}");
    }
}

/// The corrected monotonicity picture, affirmed to n = 2000: the odd-mex
/// count grows strictly from n = 6 (equal steps at 3 and 5 before that),
/// the even-mex count from n = 11 (equal steps at 1, 2, 4, 6, 8, 10), and
/// the moex sum from n = 4.
#[test]
fn strict_growth_regression_to_2000() {
    let order = 2000;
    let cases = [
        (StatisticId::AOodd, 6usize, vec![3usize, 5]),
        (StatisticId::AOeven, 11, vec![1, 2, 4, 6, 8, 10]),
        (StatisticId::SigmaOdMoex, 4, vec![1]),
    ];
    for (stat, threshold, early) in cases {
        let series = series_sequence(stat, order);
        let violations: Vec<usize> = (1..order)
            .filter(|&n| series.coeff(n + 1) <= series.coeff(n))
            .collect();
        assert_eq!(violations, early, "{}", stat.name());
        assert!(violations.iter().all(|&n| n < threshold), "{}", stat.name());
    }
}

/// Negative control: a perturbed closed form must be caught at exactly the
/// perturbed index.
#[test]
fn perturbed_closed_form_is_caught_at_first_mismatch() {
    let order = 40;
    let defn = gf_definitional(TheoremId::AodOdd, order);
    let mut bad = gf_closed_form(TheoremId::AodOdd, order);
    bad.set_coeff(7, bad.coeff(7) + BigInt::from(1));
    let mut enumeration = Vec::new();
    for n in 0..=20u32 {
        enumeration.push(sequence_value_with_budget(StatisticId::AOodd, n, 45).unwrap());
    }
    let report = compare_pillars(TheoremId::AodOdd, &enumeration, &defn, &bad, 20);
    assert!(!report.pass);
    let mismatch = report.mismatch.unwrap();
    assert_eq!(mismatch.n, 7);
    assert_eq!(mismatch.definitional, mismatch.closed_form - BigInt::from(1));
}

/// Counting statistics have non-negative series coefficients well past the
/// enumeration range.
#[test]
fn counting_series_are_non_negative_to_2000() {
    for theorem in [
        TheoremId::AodOdd,
        TheoremId::AodEven,
        TheoremId::SigmaMoex,
        TheoremId::SigmaMeex,
        TheoremId::EvOdd,
        TheoremId::EvEven,
        TheoremId::EvSigmaMoex,
        TheoremId::EvSigmaMeex,
    ] {
        let s = gf_closed_form(theorem, 2000);
        for n in 0..=2000 {
            assert!(s.coeff(n) >= BigInt::ZERO, "{} at {n}", theorem.name());
        }
    }
}
