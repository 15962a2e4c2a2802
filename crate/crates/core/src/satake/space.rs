//! Satake coordinates for a character group and the coefficient map
//! `X -> a_X(v^l)`.

use super::cyclotomic::Cyc;
use super::laurent::{LocalCoefficientPoly, Monomial};
use crate::repalg::{Base, Context, Core, Gen, Character, Factor, VirtualRep, NGEN};

/// How a character generator is realised in Satake coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Role {
    /// The central character of a base, `alpha * beta`.
    Central(Base),
    /// Its own unit-modulus variable.
    Variable(usize),
    /// Determined by other generators through a relation.
    Alias(Character),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SatakeError {
    #[error("opaque atom not evaluable: {0}")]
    Opaque(String),
    #[error("character relations have no Satake realisation: {0}")]
    NotEvaluable(String),
}

/// Variable universe: `alpha, beta, alpha', beta'` followed by one
/// variable per free or torsion character generator.
#[derive(Clone, Debug)]
pub struct SatakeSpace {
    roles: Vec<Role>,
    monos: Vec<Monomial>,
    names: Vec<String>,
    periods: Vec<u32>,
    var_gen: Vec<Option<Gen>>,
    obstruction: Option<String>,
}

impl SatakeSpace {
    pub fn new(ctx: &Context) -> Self {
        let mut names: Vec<String> = ["alpha", "beta", "alpha'", "beta'"].map(String::from).to_vec();
        let mut periods = vec![0u32; 4];
        let mut var_gen: Vec<Option<Gen>> = vec![None; 4];
        let h = ctx.group.hermite();
        let mut roles = Vec::with_capacity(NGEN);
        for g in Gen::ALL {
            let role = match g {
                Gen::Omega => Role::Central(Base::Pi),
                Gen::OmegaPrime if ctx.hyp.aliased() => Role::Alias(
                    Character::gen(Gen::Omega).mul(&Character::gen(Gen::Psi).pow(2)),
                ),
                Gen::OmegaPrime => Role::Central(Base::PiPrime),
                _ => {
                    let pivot_row = h
                        .rows()
                        .iter()
                        .find(|r| r.iter().position(|&x| x != 0) == Some(g.index()));
                    match pivot_row {
                        Some(r) if r[g.index()] == 1 => {
                            let mut c = Character::TRIVIAL;
                            for (i, &x) in r.iter().enumerate() {
                                if i != g.index() {
                                    c.0[i] = -x;
                                }
                            }
                            Role::Alias(c)
                        }
                        other => {
                            let period = match other {
                                Some(r) if r.iter().filter(|&&x| x != 0).count() == 1 => r[g.index()] as u32,
                                _ => 0,
                            };
                            names.push(g.name().to_string());
                            periods.push(period);
                            var_gen.push(Some(g));
                            Role::Variable(names.len() - 1)
                        }
                    }
                }
            };
            roles.push(role);
        }
        let mut space = SatakeSpace {
            roles,
            monos: Vec::new(),
            names,
            periods,
            var_gen,
            obstruction: None,
        };
        let mut monos = Vec::with_capacity(NGEN);
        for g in Gen::ALL {
            match space.resolve(g, 0) {
                Some(m) => monos.push(m),
                None => {
                    space.obstruction = Some(format!("cyclic alias through {}", g.name()));
                    monos.push(vec![0; space.nvars()]);
                }
            }
        }
        space.monos = monos;
        if space.obstruction.is_none() {
            for r in h.rows() {
                let mut c = Character::TRIVIAL;
                c.0.copy_from_slice(r);
                let m = space.char_monomial(&c);
                if m.iter().any(|&e| e != 0) {
                    space.obstruction = Some(format!("relation {c} = 1"));
                    break;
                }
            }
        }
        space
    }

    fn resolve(&self, g: Gen, depth: usize) -> Option<Monomial> {
        if depth > NGEN {
            return None;
        }
        let mut m = vec![0i32; self.nvars()];
        match &self.roles[g.index()] {
            Role::Central(b) => {
                let (a, bb) = base_vars(*b);
                m[a] = 1;
                m[bb] = 1;
            }
            Role::Variable(v) => m[*v] = 1,
            Role::Alias(c) => {
                for h in Gen::ALL {
                    let e = c.exp(h) as i32;
                    if e != 0 {
                        let sub = self.resolve(h, depth + 1)?;
                        for (x, y) in m.iter_mut().zip(sub) {
                            *x += e * y;
                        }
                    }
                }
            }
        }
        Some(self.reduced(m))
    }

    fn reduced(&self, mut m: Monomial) -> Monomial {
        for (e, &p) in m.iter_mut().zip(&self.periods) {
            if p > 0 {
                *e = e.rem_euclid(p as i32);
            }
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn periods(&self) -> &[u32] {
        &self.periods
    }

    pub fn role(&self, g: Gen) -> &Role {
        &self.roles[g.index()]
    }

    /// The variable carrying generator `g`, if it has its own.
    pub fn var_of(&self, g: Gen) -> Option<usize> {
        match self.roles[g.index()] {
            Role::Variable(v) => Some(v),
            _ => None,
        }
    }

    pub fn var_gen(&self, v: usize) -> Option<Gen> {
        self.var_gen[v]
    }

    pub fn is_evaluable(&self) -> bool {
        self.obstruction.is_none()
    }

    pub fn char_monomial(&self, c: &Character) -> Monomial {
        let mut m = vec![0i32; self.nvars()];
        for g in Gen::ALL {
            let e = c.exp(g) as i32;
            if e != 0 {
                for (x, y) in m.iter_mut().zip(&self.monos[g.index()]) {
                    *x += e * y;
                }
            }
        }
        self.reduced(m)
    }

    pub fn zero(&self) -> LocalCoefficientPoly {
        LocalCoefficientPoly::zero(&self.periods)
    }

    pub fn constant(&self, c: i64) -> LocalCoefficientPoly {
        LocalCoefficientPoly::constant(&self.periods, Cyc::int(c))
    }

    /// Satake weights of one factor, with repetition.
    pub fn weights(&self, f: &Factor) -> Result<Vec<Monomial>, SatakeError> {
        let mut out = vec![self.char_monomial(&f.twist)];
        for &core in &f.cores {
            let Core::Sym { base, m } = core else {
                return Err(SatakeError::Opaque(core.to_string()));
            };
            let (a, b) = base_vars(base);
            let mut next = Vec::with_capacity(out.len() * (m as usize + 1));
            for w in &out {
                for j in 0..=m as i32 {
                    let mut w = w.clone();
                    w[a] += j;
                    w[b] += m as i32 - j;
                    next.push(w);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// `a_X(v^l)` as an exact polynomial: the sum over entries of
    /// multiplicity times the `l`-th power sum of the Satake weights.
    pub fn coeff_poly(&self, x: &VirtualRep, l: u32) -> Result<LocalCoefficientPoly, SatakeError> {
        if let Some(why) = &self.obstruction {
            return Err(SatakeError::NotEvaluable(why.clone()));
        }
        let mut p = self.zero();
        for (f, mult) in x.iter() {
            for w in self.weights(f)? {
                let w: Monomial = w.iter().map(|e| e * l as i32).collect();
                p.add_term(w, Cyc::int(mult as i64));
            }
        }
        Ok(p)
    }

    /// Substitutes `zeta_12^k` for the variable of `g` (if it has one).
    pub fn specialize(
        &self,
        p: &LocalCoefficientPoly,
        g: Gen,
        k: i64,
    ) -> Result<LocalCoefficientPoly, super::laurent::PolyError> {
        match self.var_of(g) {
            Some(v) => p.specialize(v, k),
            None => Ok(p.clone()),
        }
    }
}

fn base_vars(b: Base) -> (usize, usize) {
    match b {
        Base::Pi => (0, 1),
        Base::PiPrime => (2, 3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repalg::{BaseType, Hypotheses, RepAtom};
    use crate::satake::poly_equal;

    fn ctx() -> Context {
        Context::new(Hypotheses::new(BaseType::General, BaseType::General, false))
    }

    #[test]
    fn sym2_has_three_weights() {
        let ctx = ctx();
        let s = SatakeSpace::new(&ctx);
        let p = s
            .coeff_poly(&VirtualRep::from_atom(RepAtom::sym(Base::Pi, 2, Character::TRIVIAL)), 1)
            .unwrap();
        assert_eq!(p.render(s.names()), "beta^2 + alpha*beta + alpha^2");
    }

    #[test]
    fn adjoint_square_identity() {
        let ctx = ctx();
        let s = SatakeSpace::new(&ctx);
        let x = s.coeff_poly(&VirtualRep::from_atom(RepAtom::ad(Base::Pi)), 1).unwrap();
        let s4 = s
            .coeff_poly(
                &VirtualRep::from_atom(RepAtom::sym(Base::Pi, 4, Character::parse("omega^-2").unwrap())),
                1,
            )
            .unwrap();
        assert!(poly_equal(&x.mul(&x), &s.constant(1).add(&x).add(&s4)));
    }

    #[test]
    fn twisted_sym2_differs() {
        let h = Hypotheses::new(BaseType::General, BaseType::General, false)
            .with_relation(Character::parse("chi^2").unwrap());
        let ctx = Context::new(h);
        let s = SatakeSpace::new(&ctx);
        assert!(s.is_evaluable());
        let a = s.coeff_poly(&VirtualRep::from_atom(RepAtom::sym(Base::Pi, 2, Character::TRIVIAL)), 1).unwrap();
        let b = s
            .coeff_poly(&VirtualRep::from_atom(RepAtom::sym(Base::Pi, 2, Character::parse("chi").unwrap())), 1)
            .unwrap();
        assert!(!poly_equal(&a, &b));
    }

    #[test]
    fn opaque_atoms_are_rejected() {
        let ctx = ctx();
        let s = SatakeSpace::new(&ctx);
        let nu = RepAtom::opaque(crate::repalg::OpaqueLabel::Nu(Base::Pi), Character::TRIVIAL);
        assert_eq!(
            s.coeff_poly(&VirtualRep::from_atom(nu), 1),
            Err(SatakeError::Opaque("nu(pi)".into()))
        );
    }

    #[test]
    fn dihedral_relation_is_not_evaluable() {
        let ctx = Context::new(Hypotheses::new(BaseType::Dihedral, BaseType::General, false));
        assert!(!SatakeSpace::new(&ctx).is_evaluable());
    }

    #[test]
    fn user_alias_is_evaluable() {
        let h = Hypotheses::new(BaseType::Tetrahedral, BaseType::General, true)
            .with_relation(Character::parse("chi*mu^-1").unwrap());
        let s = SatakeSpace::new(&Context::new(h));
        assert!(s.is_evaluable());
        assert_eq!(s.var_of(Gen::Chi), None);
        assert_eq!(s.periods()[s.var_of(Gen::Mu).unwrap()], 3);
    }
}
