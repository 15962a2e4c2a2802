//! Finite-order character atoms and the finitely presented group they span.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::lattice::{smith_invariants, HermiteBasis};
use super::Base;
use crate::Tri;

/// Number of character generators.
pub const NGEN: usize = 10;

/// The character generators, in lattice column order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    Chi,
    /// The twist relating `pi'` to `pi` when they are twist-equivalent.
    Psi,
    /// `xi_pi|_F` for a dihedral `pi = Ind(xi_pi)`.
    Xi,
    XiPrime,
    Omega,
    OmegaPrime,
    Mu,
    MuPrime,
    Eta,
    EtaPrime,
}

impl Gen {
    pub const ALL: [Gen; NGEN] = [
        Gen::Chi,
        Gen::Psi,
        Gen::Xi,
        Gen::XiPrime,
        Gen::Omega,
        Gen::OmegaPrime,
        Gen::Mu,
        Gen::MuPrime,
        Gen::Eta,
        Gen::EtaPrime,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Chi => "chi",
            Gen::Psi => "psi",
            Gen::Xi => "xi",
            Gen::XiPrime => "xi'",
            Gen::Omega => "omega",
            Gen::OmegaPrime => "omega'",
            Gen::Mu => "mu",
            Gen::MuPrime => "mu'",
            Gen::Eta => "eta",
            Gen::EtaPrime => "eta'",
        }
    }

    pub fn from_name(s: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.name() == s)
    }

    pub fn omega(b: Base) -> Gen {
        match b {
            Base::Pi => Gen::Omega,
            Base::PiPrime => Gen::OmegaPrime,
        }
    }

    pub fn mu(b: Base) -> Gen {
        match b {
            Base::Pi => Gen::Mu,
            Base::PiPrime => Gen::MuPrime,
        }
    }

    pub fn eta(b: Base) -> Gen {
        match b {
            Base::Pi => Gen::Eta,
            Base::PiPrime => Gen::EtaPrime,
        }
    }

    pub fn xi(b: Base) -> Gen {
        match b {
            Base::Pi => Gen::Xi,
            Base::PiPrime => Gen::XiPrime,
        }
    }
}

/// An element of the free abelian group on the generators, written
/// additively. Reduction modulo relations happens in [`CharGroup`].
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Character(pub [i64; NGEN]);

impl Character {
    pub const TRIVIAL: Character = Character([0; NGEN]);

    pub fn gen(g: Gen) -> Character {
        Character::TRIVIAL.with(g, 1)
    }

    pub fn with(mut self, g: Gen, e: i64) -> Character {
        self.0[g.index()] += e;
        self
    }

    pub fn exp(&self, g: Gen) -> i64 {
        self.0[g.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Group operation (product of characters).
    pub fn mul(&self, other: &Character) -> Character {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a += b;
        }
        out
    }

    /// Inverse, which is the complex conjugate on the unitary locus.
    pub fn inv(&self) -> Character {
        self.pow(-1)
    }

    pub fn div(&self, other: &Character) -> Character {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> Character {
        let mut out = *self;
        for a in out.0.iter_mut() {
            *a *= k;
        }
        out
    }

    /// Parses a product such as `chi*omega^-2*bar(mu)` or `1`.
    pub fn parse(s: &str) -> Result<Character, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty character".into());
        }
        let mut out = Character::TRIVIAL;
        for factor in s.split('*') {
            let f = factor.trim();
            if f == "1" {
                continue;
            }
            let (head, e) = match f.split_once('^') {
                Some((h, e)) => (
                    h.trim(),
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| format!("bad exponent in `{f}`"))?,
                ),
                None => (f, 1),
            };
            let (name, sign) = match head.strip_prefix("bar(").and_then(|r| r.strip_suffix(')')) {
                Some(inner) => (inner.trim(), -1),
                None => (head, 1),
            };
            let g = Gen::from_name(name).ok_or_else(|| format!("unknown character `{name}`"))?;
            out = out.with(g, sign * e);
        }
        Ok(out)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Raw formatting; use [`CharGroup::display`] for reduced output.
impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in Gen::ALL {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", g.name())?;
            } else {
                write!(f, "{}^{}", g.name(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// The character group `Z^NGEN / L` together with known non-triviality
/// facts.
#[derive(Clone, Debug)]
pub struct CharGroup {
    relations: Vec<Character>,
    hermite: HermiteBasis,
    exponent: i64,
    nontrivial: Vec<Character>,
}

impl CharGroup {
    pub fn new(relations: Vec<Character>, nontrivial: Vec<Character>) -> Self {
        let rows: Vec<Vec<i64>> = relations.iter().map(|c| c.0.to_vec()).collect();
        let hermite = HermiteBasis::new(NGEN, &rows);
        let exponent = smith_invariants(NGEN, &rows).last().copied().unwrap_or(1);
        let mut g = CharGroup {
            relations,
            hermite,
            exponent,
            nontrivial: Vec::new(),
        };
        g.nontrivial = nontrivial.iter().map(|c| g.reduce(c)).collect();
        g
    }

    /// The group with only the standing order relations `mu^3 = eta^2 = 1`.
    pub fn standard() -> Self {
        CharGroup::new(standard_relations(), Vec::new())
    }

    pub fn relations(&self) -> &[Character] {
        &self.relations
    }

    pub fn hermite(&self) -> &HermiteBasis {
        &self.hermite
    }

    pub fn nontrivial_facts(&self) -> &[Character] {
        &self.nontrivial
    }

    /// Canonical representative modulo the relation lattice.
    pub fn reduce(&self, c: &Character) -> Character {
        let mut v = c.0;
        self.hermite.reduce(&mut v);
        Character(v)
    }

    /// Canonical representative modulo the relations plus `extra`
    /// (used for stabilizer subgroups).
    pub fn reduce_mod(&self, c: &Character, extra: &[Character]) -> Character {
        if extra.is_empty() {
            return self.reduce(c);
        }
        let rows: Vec<Vec<i64>> = extra.iter().map(|e| e.0.to_vec()).collect();
        let h = self.hermite.extended(&rows);
        let mut v = c.0;
        h.reduce(&mut v);
        Character(v)
    }

    pub fn eq(&self, a: &Character, b: &Character) -> bool {
        self.reduce(&a.div(b)).is_zero()
    }

    /// Order of `c` in the presented group; `None` for infinite order.
    pub fn order(&self, c: &Character) -> Option<i64> {
        if !self.hermite.contains(&c.pow(self.exponent).0) {
            return None;
        }
        (1..=self.exponent)
            .find(|&k| self.exponent % k == 0 && self.hermite.contains(&c.pow(k).0))
    }

    /// Three-valued triviality. `Yes` when `c` lies in the relation
    /// lattice; `No` when some power of `c` is a declared non-trivial
    /// character; `Unknown` otherwise.
    pub fn is_trivial(&self, c: &Character) -> Tri {
        let r = self.reduce(c);
        if r.is_zero() {
            return Tri::Yes;
        }
        let bound = self.order(&r).unwrap_or(12);
        for k in 1..=bound {
            let p = self.reduce(&r.pow(k));
            if self.nontrivial.contains(&p) {
                return Tri::No;
            }
        }
        Tri::Unknown
    }

    /// Display with exponents of pure-torsion generators shifted into a
    /// balanced range (so `mu^2` prints as `mu^-1`).
    pub fn display(&self, c: &Character) -> String {
        let mut r = self.reduce(c);
        for row in self.hermite.rows() {
            let nz: Vec<usize> = (0..NGEN).filter(|&i| row[i] != 0).collect();
            if let [i] = nz[..] {
                let d = row[i];
                if 2 * r.0[i] > d {
                    r.0[i] -= d;
                }
            }
        }
        r.to_string()
    }
}

pub fn standard_relations() -> Vec<Character> {
    vec![
        Character::TRIVIAL.with(Gen::Mu, 3),
        Character::TRIVIAL.with(Gen::MuPrime, 3),
        Character::TRIVIAL.with(Gen::Eta, 2),
        Character::TRIVIAL.with(Gen::EtaPrime, 2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Character {
        Character::parse(s).unwrap()
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["1", "chi", "chi^-1*omega^-2", "mu'*eta", "xi'^3"] {
            assert_eq!(c(s).to_string(), s);
        }
        assert_eq!(c("bar(chi)*bar(omega)^2"), c("chi^-1*omega^-2"));
        assert!(Character::parse("kappa").is_err());
    }

    #[test]
    fn torsion_generators_reduce() {
        let g = CharGroup::standard();
        assert!(g.eq(&c("mu^4"), &c("mu")));
        assert!(g.eq(&c("bar(eta)"), &c("eta")));
        assert_eq!(g.order(&c("mu*eta")), Some(6));
        assert_eq!(g.order(&c("chi")), None);
        assert_eq!(g.display(&c("mu^2")), "mu^-1");
    }

    #[test]
    fn triviality_uses_declared_facts_and_powers() {
        let g = CharGroup::new(standard_relations(), vec![c("mu"), c("eta")]);
        assert_eq!(g.is_trivial(&c("mu^3")), Tri::Yes);
        assert_eq!(g.is_trivial(&c("mu^2")), Tri::No);
        // (mu*eta)^4 = mu
        assert_eq!(g.is_trivial(&c("mu*eta")), Tri::No);
        assert_eq!(g.is_trivial(&c("mu*mu'")), Tri::Unknown);
        assert_eq!(g.is_trivial(&c("chi")), Tri::Unknown);
    }

    #[test]
    fn user_relation_identifies_characters() {
        let mut rel = standard_relations();
        rel.push(c("chi*mu^-1"));
        let g = CharGroup::new(rel, vec![c("mu")]);
        assert!(g.eq(&c("chi"), &c("mu")));
        assert_eq!(g.order(&c("chi")), Some(3));
        assert_eq!(g.is_trivial(&c("chi^2")), Tri::No);
    }
}
