//! The degree-324 auxiliary series and its sum-of-squares coefficient
//! identity.
//!
//! With `x = a_{Ad(pi)}` and `b = a_{Ad(pi') tw chi}` the unramified
//! coefficient of the series is `|2x + xb + b|^2`, an identity of Laurent
//! polynomials in independent Satake variables. It does not need
//! `pi` and `pi'` to be twist-inequivalent.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::repalg::{expr, Context, VirtualRep};
use crate::satake::{eval, poly_equal, LocalCoefficientPoly, PolyError, SatakeError, SatakePoint, SatakeSpace};
use crate::{Exec, TOLERANCE};

pub const DEGREE: u64 = 324;

/// The fifteen factors and their multiplicities.
pub const FACTORS: [(u32, &str); 15] = [
    (6, "zeta"),
    (4, "Ad(pi) (x) Ad(pi') tw chi"),
    (4, "Ad(pi) (x) Ad(pi') tw bar(chi)"),
    (7, "Ad(pi)"),
    (2, "Ad(pi')"),
    (2, "Ad(pi') tw chi"),
    (2, "Ad(pi') tw bar(chi)"),
    (5, "Sym^4(pi) tw omega^-2"),
    (2, "Sym^4(pi') tw omega'^-2"),
    (3, "Ad(pi) (x) Ad(pi')"),
    (3, "Ad(pi) (x) Sym^4(pi') tw omega'^-2"),
    (1, "Ad(pi') (x) Sym^4(pi) tw omega^-2"),
    (2, "Ad(pi') (x) Sym^4(pi) tw chi*omega^-2"),
    (2, "Ad(pi') (x) Sym^4(pi) tw bar(chi)*omega^-2"),
    (1, "Sym^4(pi) (x) Sym^4(pi') tw omega^-2*omega'^-2"),
];

/// The factor list as one expression.
pub fn expression() -> String {
    FACTORS
        .iter()
        .map(|(m, f)| if *m == 1 { f.to_string() } else { format!("{m} {f}") })
        .collect::<Vec<_>>()
        .join(" (+) ")
}

/// Normal form of the series under `ctx`.
///
/// # Panics
/// If the degree is not 324, which can only be a construction bug.
pub fn build_d(ctx: &Context) -> VirtualRep {
    let raw = expr::parse(&expression()).expect("built-in factor list parses");
    let d = ctx.normal_form(&raw);
    assert_eq!(d.degree(), DEGREE, "auxiliary series has wrong degree");
    d
}

/// The series together with its Satake space, under the bare context.
#[derive(Clone, Debug)]
pub struct AuxSeries {
    pub ctx: Context,
    pub space: SatakeSpace,
    pub rep: VirtualRep,
}

impl Default for AuxSeries {
    fn default() -> Self {
        Self::new(Context::bare())
    }
}

impl AuxSeries {
    pub fn new(ctx: Context) -> Self {
        let space = SatakeSpace::new(&ctx);
        let rep = build_d(&ctx);
        AuxSeries { ctx, space, rep }
    }

    pub fn coeff(&self, l: u32) -> Result<LocalCoefficientPoly, SatakeError> {
        self.space.coeff_poly(&self.rep, l)
    }

    fn atom_poly(&self, src: &str, l: u32) -> LocalCoefficientPoly {
        let x = expr::parse(src).expect("built-in expression parses");
        self.space.coeff_poly(&x, l).expect("Sym atoms are evaluable")
    }

    /// The closed form `(2x + xb + b) * conj(2x + xb + b)` at `v^l`.
    pub fn sos(&self, l: u32) -> LocalCoefficientPoly {
        let x = self.atom_poly("Ad(pi)", l);
        let b = self.atom_poly("Ad(pi') tw chi", l);
        let two = self.space.constant(2);
        let s = two.mul(&x).add(&x.mul(&b)).add(&b);
        s.mul(&s.conj())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    /// Rendered `lhs - rhs`; `"0"` when the identity holds.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SosReport {
    pub degree: u64,
    pub factors: usize,
    pub checks: Vec<IdentityCheck>,
    /// `a_D(v)` at the all-ones point.
    pub value_at_identity: i64,
    /// `a_D(v)` at the all-ones point with `chi = -1`.
    pub value_at_sign: i64,
    pub pass: bool,
}

fn check(s: &SatakeSpace, name: &str, lhs: &LocalCoefficientPoly, rhs: &LocalCoefficientPoly) -> IdentityCheck {
    IdentityCheck {
        name: name.into(),
        holds: poly_equal(lhs, rhs),
        residual: lhs.sub(rhs).render(s.names()),
    }
}

/// Proves the coefficient identity exactly at `l = 1`, plus the
/// intermediate relations the argument uses.
pub fn verify_sos(series: &AuxSeries) -> Result<SosReport, SatakeError> {
    let s = &series.space;
    let p = series.coeff(1)?;
    let q = series.sos(1);
    let mut checks = vec![check(s, "a_D = |2x + xb + b|^2", &p, &q)];
    for (base, s4) in [("pi", "Sym^4(pi) tw omega^-2"), ("pi'", "Sym^4(pi') tw omega'^-2")] {
        let x = series.atom_poly(&format!("Ad({base})"), 1);
        checks.push(check(s, &format!("conj(a_Ad({base})) = a_Ad({base})"), &x.conj(), &x));
        let rhs = s.constant(1).add(&x).add(&series.atom_poly(s4, 1));
        checks.push(check(s, &format!("a_Ad({base})^2 = 1 + a_Ad({base}) + a_{s4}"), &x.mul(&x), &rhs));
    }
    let value_at_identity = p.value_at_identity().as_int().expect("integer coefficients");
    let signed = s
        .specialize(&q, crate::repalg::Gen::Chi, 6)
        .map_err(|e| SatakeError::NotEvaluable(e.to_string()))?;
    let value_at_sign = signed.value_at_identity().as_int().expect("integer coefficients");
    let pass = checks.iter().all(|c| c.holds) && value_at_identity == DEGREE as i64;
    Ok(SosReport {
        degree: series.rep.degree(),
        factors: series.rep.len(),
        checks,
        value_at_identity,
        value_at_sign,
        pass,
    })
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum SeriesError {
    #[error(transparent)]
    Satake(#[from] SatakeError),
    #[error(transparent)]
    Eval(#[from] PolyError),
}

/// `a_D(v^l)` at `x`.
pub fn a_d(series: &AuxSeries, x: &SatakePoint, l: u32) -> Result<Complex64, SeriesError> {
    Ok(eval(&series.coeff(l)?, &series.space, x)?)
}

/// Independent oracle: `|2x + xb + b|^2` computed from the point directly.
pub fn sos_value(x: &SatakePoint, l: u32) -> f64 {
    let l = l as i32;
    let ad = |a: Complex64, b: Complex64| (a / b).powi(l) + 1.0 + (b / a).powi(l);
    let chi = x.chars.get(&crate::repalg::Gen::Chi).copied().unwrap_or(Complex64::new(1.0, 0.0));
    let xv = ad(x.alpha, x.beta);
    let bv = chi.powi(l) * ad(x.alpha_prime, x.beta_prime);
    (2.0 * xv + xv * bv + bv).norm_sqr()
}

/// One scanned `(p, l)` entry.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanValue {
    pub p: u64,
    pub l: u32,
    pub re: f64,
    pub im: f64,
    pub oracle: f64,
}

impl ScanValue {
    pub fn ok(&self) -> bool {
        self.re >= -TOLERANCE && self.im.abs() <= TOLERANCE && (self.re - self.oracle).abs() <= TOLERANCE
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub points: usize,
    pub max_l: u32,
    pub skipped: Vec<u64>,
    pub min: Option<ScanValue>,
    pub max_abs_im: f64,
    pub max_oracle_gap: f64,
    pub failures: Vec<ScanValue>,
    pub pass: bool,
}

/// Evaluates `a_D(v^l)` for every point and `l <= max_l`, comparing each
/// value with [`sos_value`]. `skipped` lists ramified primes left out by
/// the caller. Output does not depend on `exec`.
pub fn scan_positivity(
    series: &AuxSeries,
    points: &[SatakePoint],
    max_l: u32,
    skipped: Vec<u64>,
    exec: Exec,
) -> Result<PositivityReport, SeriesError> {
    let polys: Vec<LocalCoefficientPoly> = (1..=max_l).map(|l| series.coeff(l)).collect::<Result<_, _>>()?;
    let rows = exec.map(points, |x| -> Result<Vec<ScanValue>, PolyError> {
        polys
            .iter()
            .zip(1..)
            .map(|(p, l)| {
                let v = eval(p, &series.space, x)?;
                Ok(ScanValue {
                    p: x.p,
                    l,
                    re: v.re,
                    im: v.im,
                    oracle: sos_value(x, l),
                })
            })
            .collect()
    });
    let mut min: Option<ScanValue> = None;
    let mut max_abs_im = 0.0f64;
    let mut max_oracle_gap = 0.0f64;
    let mut failures = Vec::new();
    for row in rows {
        for v in row? {
            max_abs_im = max_abs_im.max(v.im.abs());
            max_oracle_gap = max_oracle_gap.max((v.re - v.oracle).abs());
            if min.is_none_or(|m| v.re < m.re) {
                min = Some(v);
            }
            if !v.ok() {
                failures.push(v);
            }
        }
    }
    Ok(PositivityReport {
        points: points.len(),
        max_l,
        skipped,
        min,
        max_abs_im,
        max_oracle_gap,
        pass: failures.is_empty(),
        failures,
    })
}
