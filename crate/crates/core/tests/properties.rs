use nestdim::basesets::{
    cantor_segments, e_alpha_points, gamma, gamma_coeff, BaseSetSpec, Interval,
};
use nestdim::boxcount::{
    epsilon_schedule, regression_dimension, sausage_measure_1d, CountRow, CountSeries, CounterKind,
};
use nestdim::experiment::count_series;
use nestdim::nests::{split_indices, NestKind, NestSpec};
use nestdim::theory::{
    bifractal_dimension, cantor_nest_dimension, nest_dimension, solve_parameters, Regime,
};
use proptest::prelude::*;

fn powm(m: u64, alpha: f64) -> f64 {
    (m as f64).powf(-alpha)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn split_inequalities(alpha in 0.1f64..4.0, log_eps in -30.0f64..-2.4) {
        let eps = log_eps.exp2();
        let s = split_indices(alpha, eps).unwrap();
        prop_assume!(s.m1 >= 1);
        let m1 = s.m1;
        let m2 = s.m2 as f64;
        prop_assert!(powm(m1 + 1, alpha) - powm(m1 + 2, alpha) < 2.0 * eps);
        prop_assert!(2.0 * eps <= powm(m1, alpha) - powm(m1 + 1, alpha));
        prop_assert!(powm(m1 + 1, alpha) <= 2.0 * m2 * eps);
        prop_assert!(2.0 * m2 * eps <= powm(m1, alpha));
    }

    #[test]
    fn cantor_refinement_is_laminar(n in 2u32..5, frac in 0.05f64..0.95, log_len in -12.0f64..-1.0) {
        let r = frac / n as f64;
        let min_len = log_len.exp2();
        let coarse = cantor_segments(n, r, min_len).unwrap();
        let fine = cantor_segments(n, r, min_len / 2.0).unwrap();
        prop_assert!(fine.len() >= coarse.len());
        for iv in &fine {
            prop_assert_eq!(coarse.iter().filter(|c| c.lo() <= iv.lo() && iv.hi() <= c.hi()).count(), 1);
        }
        for c in &coarse {
            prop_assert!(fine.iter().any(|iv| c.lo() <= iv.lo() && iv.hi() <= c.hi()));
        }
        prop_assert!(fine.windows(2).all(|w| w[0].hi() < w[1].lo()));
    }

    #[test]
    fn sausage_monotone_and_subadditive(
        a in prop::collection::vec(0.0f64..1.0, 1..30),
        b in prop::collection::vec((0.0f64..1.0, 0.0f64..0.1), 0..10),
        eps in 1e-4f64..0.05,
    ) {
        let ivs: Vec<Interval> = b.iter().map(|&(lo, w)| Interval::new(lo, lo + w).unwrap()).collect();
        let both = sausage_measure_1d(&a, &ivs, eps);
        let tol = 1e-12;
        prop_assert!(sausage_measure_1d(&a, &ivs, 2.0 * eps) >= both - tol);
        prop_assert!(both <= sausage_measure_1d(&a, &[], eps) + sausage_measure_1d(&[], &ivs, eps) + tol);
        prop_assert!(both >= sausage_measure_1d(&a, &[], eps) - tol);
    }

    #[test]
    fn centre_dimension_is_max(alpha in 0.01f64..20.0, delta in 0.0f64..=1.0) {
        let v = nest_dimension(NestKind::Centre, alpha, delta).unwrap();
        let expected = delta.max((delta + 1.0) / (alpha + 1.0));
        prop_assert!((v.value - expected).abs() < 1e-12);
        if v.regime == Regime::Critical {
            prop_assert!(!v.nondegenerate);
        }
        let outer = nest_dimension(NestKind::Outer, alpha, delta).unwrap();
        prop_assert!(outer.value >= v.value - 1e-12);
        if delta > 0.0 && alpha * delta < 1.0 {
            prop_assert!(outer.value > v.value);
        }
    }

    #[test]
    fn synthesis_round_trips(d in 0.05f64..=1.0, t in 0.001f64..0.999, n in 2u32..6) {
        let alpha = 1.0 / d - 1.0 + t;
        let delta = d * alpha + d - 1.0;
        prop_assume!(alpha > 0.0 && alpha * delta < 1.0 - 1e-9);
        let p = match solve_parameters(d, alpha, n) {
            Ok(p) => p,
            Err(_) => {
                // only a Cantor ratio below the smallest float may be refused
                prop_assert_eq!((n as f64).powf(-1.0 / delta), 0.0);
                return Ok(());
            }
        };
        prop_assert!(p.delta > 0.0 && p.delta < 1.0);
        prop_assert!(p.beta > 0.0 && p.r > 0.0 && p.r < 1.0 / n as f64);
        prop_assert!((bifractal_dimension(alpha, p.beta) - d).abs() < 1e-10);
        prop_assert!((cantor_nest_dimension(NestKind::Centre, alpha, n, p.r).unwrap() - d).abs() < 1e-10);
    }

    #[test]
    fn gamma_matches_reference(x in 0.05f64..20.0) {
        let ours = gamma(x);
        let reference = statrs::function::gamma::gamma(x);
        prop_assert!(((ours - reference) / reference).abs() < 1e-10, "x={} ours={} ref={}", x, ours, reference);
    }
}

#[test]
fn bifractal_agrees_with_nest_dimension() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 100 {
        let alpha = rng.random_range(0.01..5.0);
        let beta = rng.random_range(0.01..20.0);
        let delta = 1.0 / (1.0 + beta);
        if alpha * delta >= 1.0 {
            continue;
        }
        let v = nest_dimension(NestKind::Centre, alpha, delta)
            .unwrap()
            .value;
        assert!((bifractal_dimension(alpha, beta) - v).abs() < 1e-12);
        checked += 1;
    }
    assert!((bifractal_dimension(1e-6, 1e6) - 1.0).abs() < 1e-3);
}

#[test]
fn dimension_monotone_on_grid() {
    let alphas: Vec<f64> = (1..=50).map(|i| i as f64 * 0.1).collect();
    let deltas: Vec<f64> = (0..50).map(|j| j as f64 / 49.0).collect();
    for kind in [NestKind::Centre, NestKind::Outer] {
        let value = |a: f64, d: f64| nest_dimension(kind, a, d).unwrap().value;
        for &d in &deltas {
            for w in alphas.windows(2) {
                assert!(value(w[1], d) <= value(w[0], d) + 1e-12, "{kind} alpha");
            }
        }
        for &a in &alphas {
            for w in deltas.windows(2) {
                assert!(value(a, w[1]) >= value(a, w[0]) - 1e-12, "{kind} delta");
            }
        }
    }
}

#[test]
fn gamma_coeff_recurrence() {
    for x in [0.0, 0.5, 1.0, 1.5] {
        let lhs = gamma_coeff(x + 2.0).unwrap();
        let rhs = gamma_coeff(x).unwrap() * 2.0 * std::f64::consts::PI / (x + 2.0);
        assert!(((lhs - rhs) / rhs).abs() < 1e-9);
    }
}

#[test]
fn point_count_growth_band() {
    for alpha in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let ratios: Vec<f64> = (5..=25)
            .map(|j| {
                let eps = (-(j as f64)).exp2();
                e_alpha_points(alpha, eps).unwrap().len() as f64 * eps.powf(1.0 / (1.0 + alpha))
            })
            .collect();
        let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().copied().fold(0.0, f64::max);
        assert!(hi / lo < 4.0, "alpha {alpha}: {lo}..{hi}");
    }
}

#[test]
fn circle_nest_slope() {
    // alpha * delta = 1: the critical case, dimension 1
    let spec = NestSpec::centre(1.0, BaseSetSpec::full_circle()).unwrap();
    let schedule = epsilon_schedule((-10f64).exp2(), (-20f64).exp2(), 6).unwrap();
    let series = count_series(&spec, &schedule, CounterKind::Primitive).unwrap();
    let slope = regression_dimension(&series).unwrap().slope;
    assert!((slope - 1.0).abs() < 0.1, "{slope}");
}

#[test]
fn regression_recovers_segment() {
    let schedule = epsilon_schedule((-10f64).exp2(), (-20f64).exp2(), 11).unwrap();
    let rows = schedule
        .iter()
        .map(|&eps| CountRow {
            eps,
            count: (1.0 / eps).ceil() as u64,
        })
        .collect();
    let report = regression_dimension(&CountSeries::new(rows, CounterKind::Grid).unwrap()).unwrap();
    assert!((report.slope - 1.0).abs() < 0.01);
}
