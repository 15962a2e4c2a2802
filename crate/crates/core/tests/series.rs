//! Properties of the auxiliary series, pole bookkeeping, the casebook and
//! ingested newform data.

use std::f64::consts::TAU;
use std::sync::LazyLock;

use num_complex::Complex64;
use proptest::prelude::*;
use rsverify::casebook::{cases, verify_case, CaseKind};
use rsverify::dseries::{a_d, build_d, sos_value, AuxSeries};
use rsverify::ingest::{curve, delta_eigenvalues, satake_from_ap, x0_11_eigenvalues, NewformData};
use rsverify::poles::{pole_order, PoleInterval};
use rsverify::repalg::{expr, BaseType, Character, Context, Gen, Hypotheses, NormalOptions, VirtualRep};
use rsverify::satake::{eval, poly_equal, SatakePoint, SatakeSpace};
use rsverify::{Exec, Tri};

static SERIES: LazyLock<AuxSeries> = LazyLock::new(|| AuxSeries::new(Context::bare()));
static X0_11: LazyLock<NewformData> = LazyLock::new(|| x0_11_eigenvalues(10_000, Exec::Parallel).unwrap());

fn unit(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * t)
}

fn series_point(t: [f64; 5]) -> SatakePoint {
    let mut x = SatakePoint::identity(0);
    x.alpha = unit(t[0]);
    x.beta = unit(t[1]);
    x.alpha_prime = unit(t[2]);
    x.beta_prime = unit(t[3]);
    x.with_char(Gen::Chi, unit(t[4]))
}

fn point_for(space: &SatakeSpace, t: &[f64]) -> SatakePoint {
    let mut x = series_point([t[0], t[1], t[2], t[3], 0.0]);
    x.chars.clear();
    for (v, &tv) in t.iter().enumerate().take(space.nvars()).skip(4) {
        let g = space.var_gen(v).expect("character variable");
        let value = match space.periods()[v] {
            0 => unit(tv),
            p => unit((tv * p as f64).floor() / p as f64),
        };
        x = x.with_char(g, value);
    }
    x
}

fn pole(ctx: &Context, src: &str) -> PoleInterval {
    let x = ctx.normal_form_with(&expr::parse(src).unwrap(), NormalOptions { cg: false });
    pole_order(ctx, &x).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn series_coefficient_is_a_nonnegative_square(t in prop::array::uniform5(0.0f64..1.0), l in 1u32..=4) {
        let x = series_point(t);
        let v = a_d(&SERIES, &x, l).unwrap();
        prop_assert!(v.re >= -1e-9, "{v}");
        prop_assert!(v.im.abs() <= 1e-9, "{v}");
        prop_assert!((v.re - sos_value(&x, l)).abs() <= 1e-9 * (1.0 + v.re));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pair_pole_follows_twist_equality(a in -3i64..=3, b in -2i64..=2, te in any::<bool>()) {
        let ctx = Context::new(Hypotheses::new(BaseType::General, BaseType::General, te));
        let xi = Character::TRIVIAL.with(Gen::Chi, a).with(Gen::Omega, b);
        let src = format!("Ad(pi) (x) Ad(pi') tw {}", ctx.show_char(&xi));
        let got = pole(&ctx, &src);
        if te {
            prop_assert_eq!(got, PoleInterval::simple(ctx.is_trivial(&xi)));
        } else {
            prop_assert_eq!(got, PoleInterval::ZERO);
        }
    }

    #[test]
    fn adding_factors_never_lowers_the_pole(a in 0u32..=3, b in 0u32..=3, c in 0u32..=3) {
        let ctx = Context::new(Hypotheses::new(BaseType::General, BaseType::General, false));
        let base = format!("{} Ad(pi) (x) Ad(pi)", a + 1);
        let more = format!("{base} (+) {} zeta (+) {} Ad(pi') (x) Ad(pi')", b + 1, c + 1);
        let p0 = pole(&ctx, &base);
        let p1 = pole(&ctx, &more);
        prop_assert!(p1.min >= p0.min && p1.max >= p0.max);
        prop_assert_eq!(p1, PoleInterval::new(a + b + c + 3, a + b + c + 3));
    }

    #[test]
    fn satake_parameters_reproduce_the_trace(i in 0usize..1229) {
        let d = &*X0_11;
        let primes: Vec<u64> = d.primes().collect();
        let p = primes[i % primes.len()];
        let (a, b) = satake_from_ap(d, p).unwrap();
        prop_assert!((a * b - 1.0).norm() <= 1e-12);
        prop_assert!(((a + b).re - d.normalized(p).unwrap()).abs() <= 1e-12);
    }
}

#[test]
fn rs_pair_of_a_dual_has_a_simple_pole() {
    let ctx = Context::new(Hypotheses::new(BaseType::General, BaseType::General, false));
    assert_eq!(pole(&ctx, "Ad(pi) (x) ~Ad(pi)"), PoleInterval::new(1, 1));
    assert_eq!(pole(&ctx, "Sym^4(pi) (x) ~Sym^4(pi)"), PoleInterval::new(1, 1));
    assert_eq!(ctx.is_trivial(&Character::gen(Gen::Chi)), Tri::Unknown);
}

#[test]
fn series_has_the_anchor_degree() {
    let ctx = Context::new(Hypotheses::new(BaseType::General, BaseType::General, false));
    assert_eq!(build_d(&ctx).degree(), 324);
}

#[test]
fn curve_traces_respect_hasse() {
    for p in primal::Primes::all().take_while(|&p| p <= 10_000).map(|p| p as u64) {
        if p == curve::LEVEL {
            continue;
        }
        let a = curve::trace(p) as f64;
        assert!(a * a <= 4.0 * p as f64, "p = {p}, a_p = {a}");
    }
}

#[test]
fn delta_data_respects_deligne() {
    let d = delta_eigenvalues(2_000, Exec::Parallel).unwrap();
    for p in d.primes() {
        assert!(d.normalized(p).unwrap().abs() <= 2.0, "p = {p}");
    }
}

/// Exact verdicts on quotient identities agree with evaluation at random
/// points of each case's own Satake space.
#[test]
fn case_identities_agree_numerically() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut checked = 0;
    for spec in cases() {
        let CaseKind::Quotient { l, rhs, .. } = spec.kind else {
            continue;
        };
        let ctx = spec.context().unwrap();
        let space = SatakeSpace::new(&ctx);
        if !space.is_evaluable() {
            continue;
        }
        let d = ctx.normal_form(&expr::parse(&rsverify::dseries::expression()).unwrap());
        let pair = expr::parse(&format!(
            "{l} Ad(pi) (x) Ad(pi') tw chi (+) {l} Ad(pi) (x) Ad(pi') tw bar(chi)"
        ))
        .unwrap();
        let claimed: VirtualRep = ctx.normal_form(&pair.plus(&expr::parse(rhs).unwrap()));
        let (Ok(pl), Ok(pr)) = (space.coeff_poly(&d, 1), space.coeff_poly(&claimed, 1)) else {
            continue;
        };
        let exact = poly_equal(&pl, &pr);
        let mut max_gap = 0.0f64;
        for _ in 0..100 {
            let t: Vec<f64> = (0..16).map(|_| rng.random::<f64>()).collect();
            let x = point_for(&space, &t);
            let gap = (eval(&pl, &space, &x).unwrap() - eval(&pr, &space, &x).unwrap()).norm();
            max_gap = max_gap.max(gap);
        }
        assert_eq!(exact, max_gap < 1e-7, "case {}: exact {exact}, numeric gap {max_gap}", spec.id);
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn errata_rebalance_their_identities() {
    for spec in cases() {
        let report = verify_case(&spec, false).unwrap();
        for e in &report.errata {
            assert!(e.rebalances, "case {}: {}", spec.id, e.claim);
            assert!(e.delta.len() <= 4, "case {}", spec.id);
            assert!(report.verdicts.iter().any(|v| v.id == e.verdict && !v.status.is_pass()));
        }
    }
}

#[test]
fn every_perturbation_is_caught() {
    for spec in cases() {
        let report = verify_case(&spec, true).unwrap();
        assert!(!report.pass(), "case {}", spec.id);
        assert!(!report.errata.is_empty(), "case {}", spec.id);
    }
}
