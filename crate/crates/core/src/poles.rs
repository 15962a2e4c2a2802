//! Pole orders at `s = 1` under three-valued atom equality.
//!
//! Rules: a Hecke character has a simple pole iff it is trivial; a cuspidal
//! non-character standard L-function has none; a Rankin-Selberg pair of
//! cuspidal atoms `(A, B)` has a simple pole iff `B` is the contragredient
//! of `A`. Undecided equalities give the interval `[0, 1]`.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::repalg::{Character, Context, Factor, RepAtom, VirtualRep};
use crate::Tri;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleInterval {
    pub min: u32,
    pub max: u32,
}

impl PoleInterval {
    pub const ZERO: PoleInterval = PoleInterval { min: 0, max: 0 };

    pub fn new(min: u32, max: u32) -> Self {
        assert!(min <= max, "empty pole interval");
        PoleInterval { min, max }
    }

    /// `[1,1]`, `[0,0]` or `[0,1]` for a simple pole that is certain,
    /// excluded or undecided.
    pub fn simple(t: Tri) -> Self {
        match t {
            Tri::Yes => PoleInterval::new(1, 1),
            Tri::No => PoleInterval::ZERO,
            Tri::Unknown => PoleInterval::new(0, 1),
        }
    }

    pub fn times(self, k: u32) -> Self {
        PoleInterval::new(self.min * k, self.max * k)
    }

    pub fn is_exact(self) -> bool {
        self.min == self.max
    }
}

impl Add for PoleInterval {
    type Output = PoleInterval;
    fn add(self, o: PoleInterval) -> PoleInterval {
        PoleInterval::new(self.min + o.min, self.max + o.max)
    }
}

impl fmt::Display for PoleInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.min, self.max)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PoleError {
    #[error("cuspidality of a member of `{0}` is not declared by the hypotheses")]
    Undeclared(String),
    #[error("`{0}` has a non-cuspidal member; decompose it first")]
    NonCuspidal(String),
    #[error("`{0}` is a product of three or more atoms; no pole rule applies")]
    Formal(String),
}

fn cuspidal_members(ctx: &Context, f: &Factor) -> Result<(), PoleError> {
    for &c in &f.cores {
        match ctx.cuspidal(c) {
            Tri::Yes => {}
            Tri::No => return Err(PoleError::NonCuspidal(ctx.show_factor(f))),
            Tri::Unknown => return Err(PoleError::Undeclared(ctx.show_factor(f))),
        }
    }
    Ok(())
}

/// Pole order of a single L-factor.
pub fn factor_pole(ctx: &Context, f: &Factor) -> Result<PoleInterval, PoleError> {
    match f.cores[..] {
        [] => Ok(PoleInterval::simple(ctx.is_trivial(&f.twist))),
        [_] => {
            cuspidal_members(ctx, f)?;
            Ok(PoleInterval::ZERO)
        }
        [a, b] => {
            cuspidal_members(ctx, f)?;
            let a = RepAtom {
                core: Some(a),
                twist: Character::TRIVIAL,
            };
            let b = RepAtom {
                core: Some(b),
                twist: f.twist,
            };
            Ok(PoleInterval::simple(ctx.atom_equal(&b, &ctx.dual_atom(&a))))
        }
        _ => Err(PoleError::Formal(ctx.show_factor(f))),
    }
}

/// Sum of per-factor intervals, weighted by multiplicity.
pub fn pole_order(ctx: &Context, x: &VirtualRep) -> Result<PoleInterval, PoleError> {
    x.iter().try_fold(PoleInterval::ZERO, |acc, (f, m)| {
        Ok(acc + factor_pole(ctx, f)?.times(m))
    })
}

/// Per-factor holomorphy status at `s = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Holomorphy {
    Entire,
    SimplePole,
    PoleAtMostOne,
}

impl Holomorphy {
    fn of(i: PoleInterval) -> Holomorphy {
        match (i.min, i.max) {
            (0, 0) => Holomorphy::Entire,
            (1, 1) => Holomorphy::SimplePole,
            _ => Holomorphy::PoleAtMostOne,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Holomorphy::Entire => "entire",
            Holomorphy::SimplePole => "simple pole",
            Holomorphy::PoleAtMostOne => "pole <= 1 (unknown)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorObligation {
    pub factor: String,
    pub multiplicity: u32,
    pub interval: PoleInterval,
    pub status: Holomorphy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntiretyReport {
    pub factors: Vec<FactorObligation>,
    pub total: PoleInterval,
    /// Exponent `k` of the `(s-1)^k` factor absorbing poles.
    pub absorbed: i32,
    /// Whether `(s-1)^k X` is entire at `s = 1`.
    pub entire: Tri,
}

/// Classifies every factor and decides whether `(s-1)^k X` is holomorphic
/// at `s = 1`, where `k` is the bookkeeping exponent of `x`. Away from
/// `s = 1` every factor here is entire, so this is the whole obligation.
pub fn entirety_check(ctx: &Context, x: &VirtualRep) -> Result<EntiretyReport, PoleError> {
    let mut factors = Vec::new();
    let mut total = PoleInterval::ZERO;
    for (f, m) in x.iter() {
        let i = factor_pole(ctx, f)?;
        total = total + i.times(m);
        factors.push(FactorObligation {
            factor: ctx.show_factor(f),
            multiplicity: m,
            interval: i,
            status: Holomorphy::of(i),
        });
    }
    let k = x.s_minus_one.max(0) as u32;
    let entire = if total.max <= k {
        Tri::Yes
    } else if total.min > k {
        Tri::No
    } else {
        Tri::Unknown
    };
    Ok(EntiretyReport {
        factors,
        total,
        absorbed: x.s_minus_one,
        entire,
    })
}

/// Possible pole at `s = 1` of the partial twisted symmetric-square
/// L-function of a GL(n) form with central character `omega` twisted by
/// `chi`: none unless `chi^n omega^2 = 1`.
pub fn sym2_partial_pole(ctx: &Context, n: i64, chi: &Character, omega: &Character) -> PoleInterval {
    let test = chi.pow(n).mul(&omega.pow(2));
    match ctx.is_trivial(&test) {
        Tri::No => PoleInterval::ZERO,
        _ => PoleInterval::new(0, 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repalg::{expr, Base, BaseType, Hypotheses};

    fn rep(ctx: &Context, s: &str) -> VirtualRep {
        ctx.normal_form(&expr::parse(s).unwrap())
    }

    fn gg() -> Context {
        Context::new(Hypotheses::new(BaseType::General, BaseType::General, false))
    }

    #[test]
    fn zeta_power() {
        let ctx = gg();
        assert_eq!(pole_order(&ctx, &rep(&ctx, "6 zeta")).unwrap(), PoleInterval::new(6, 6));
    }

    #[test]
    fn sym4_pair_is_undecided() {
        let ctx = gg();
        let x = rep(&ctx, "Sym^4(pi) tw omega^-2 (x) Sym^4(pi') tw omega'^-2");
        assert_eq!(pole_order(&ctx, &x).unwrap(), PoleInterval::new(0, 1));
    }

    #[test]
    fn adjoint_pair_with_non_cubic_twist_is_entire() {
        let h = Hypotheses::new(BaseType::General, BaseType::General, false)
            .with_nontrivial(Character::parse("chi^3").unwrap());
        let ctx = Context::new(h);
        let x = rep(&ctx, "Ad(pi) (x) Ad(pi') tw chi");
        assert_eq!(pole_order(&ctx, &x).unwrap(), PoleInterval::ZERO);
        let y = rep(&ctx, "Ad(pi) (x) Ad(pi') tw chi");
        assert_eq!(entirety_check(&ctx, &y).unwrap().entire, Tri::Yes);
    }

    #[test]
    fn dual_pair_has_simple_pole() {
        let ctx = gg();
        let x = rep(&ctx, "Sym^4(pi) (x) ~Sym^4(pi')");
        assert_eq!(pole_order(&ctx, &x).unwrap(), PoleInterval::new(0, 1));
        let same = Context::new(Hypotheses::new(BaseType::General, BaseType::General, false));
        let y = same.normal_form_with(
            &expr::parse("Sym^3(pi) tw chi (x) ~(Sym^3(pi) tw chi)").unwrap(),
            crate::repalg::NormalOptions { cg: false },
        );
        assert_eq!(pole_order(&same, &y).unwrap(), PoleInterval::new(1, 1));
        let _ = Base::Pi;
    }

    #[test]
    fn undeclared_cuspidality_is_an_error() {
        let ctx = Context::bare();
        let x = rep(&ctx, "Sym^3(pi)");
        assert!(matches!(pole_order(&ctx, &x), Err(PoleError::Undeclared(_))));
        let t = Context::new(Hypotheses::new(BaseType::Tetrahedral, BaseType::General, false));
        let y = rep(&t, "Sym^3(pi)");
        assert!(matches!(pole_order(&t, &y), Err(PoleError::NonCuspidal(_))));
    }
}
