//! Convergence-report behavior at small scale: bookkeeping, error paths, and
//! the loud weak-monotonicity guard. The full checkpoint run at
//! n = 250/1000/4000 lives in the acceptance suite.

mod common;

use excludant_core::asymptotics::AsymContext;
use excludant_core::identities::series_sequence;
use excludant_core::statistics::StatisticId;
use excludant_core::Error;

#[test]
fn single_checkpoint_row_is_finite() {
    let mut ctx = AsymContext::new(50);
    let series = series_sequence(StatisticId::AOodd, 40);
    let report = ctx.convergence_report(StatisticId::AOodd, &[1], &series).unwrap();
    assert_eq!(report.points.len(), 1);
    let point = &report.points[0];
    assert_eq!(point.n, 1);
    assert!(!point.ratio.is_nan() && !point.ratio.is_inf());
    assert!(!point.ratio.is_negative());
}

#[test]
fn checkpoint_beyond_order_is_refused() {
    let mut ctx = AsymContext::new(40);
    let series = series_sequence(StatisticId::AOodd, 40);
    let err = ctx.convergence_report(StatisticId::AOodd, &[80], &series);
    assert!(matches!(err, Err(Error::OrderTooSmall { order: 40, checkpoint: 80 })));
}

#[test]
fn weak_monotonicity_guard_fails_loudly() {
    // the even-mex count dips between n = 1 and n = 7, which violates the
    // Tauberian hypothesis on that range
    let mut ctx = AsymContext::new(40);
    let series = series_sequence(StatisticId::AOeven, 40);
    let err = ctx.convergence_report(StatisticId::AOeven, &[1, 7], &series);
    assert!(matches!(err, Err(Error::NotWeaklyIncreasing { .. })), "{err:?}");
}

#[test]
fn small_scale_ratios_are_sane() {
    let mut ctx = AsymContext::new(50);
    let series = series_sequence(StatisticId::SigmaOdMoex, 120);
    let report = ctx
        .convergence_report(StatisticId::SigmaOdMoex, &[40, 80, 120], &series)
        .unwrap();
    let p = ctx.bits();
    for point in &report.points {
        let lo = ctx.parse("0.2");
        let hi = ctx.parse("1.8");
        assert!(point.ratio.cmp(&lo) > Some(0), "ratio too small at {}", point.n);
        assert!(point.ratio.cmp(&hi) < Some(0), "ratio too large at {}", point.n);
    }
    // approach is already visible at these tiny checkpoints
    let one = ctx.from_u64(1);
    let d40 = report.points[0].ratio.sub(&one, p, astro_float::RoundingMode::ToEven).abs();
    let d120 = report.points[2].ratio.sub(&one, p, astro_float::RoundingMode::ToEven).abs();
    assert!(d120.cmp(&d40) < Some(0));
}

#[test]
fn no_law_error_names_the_statistic() {
    let mut ctx = AsymContext::new(30);
    let series = series_sequence(StatisticId::SigmaOdMeax, 20);
    let err = ctx.convergence_report(StatisticId::SigmaOdMeax, &[10], &series);
    assert!(matches!(err, Err(Error::NoAsymptoticLaw("sigma-od-meax"))));
}
