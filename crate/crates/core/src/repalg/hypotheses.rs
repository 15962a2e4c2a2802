//! Declared global facts about `pi`, `pi'` and the character atoms.
//!
//! Nothing here is computed: cuspidality of symmetric powers, twist
//! (in)equivalence and non-triviality of characters are inputs.
//!
//! Text format, one declaration per line, `#` starts a comment:
//!
//! ```text
//! pi tetrahedral
//! pi' general
//! twist-inequivalent
//! nontrivial chi^3
//! relation chi = mu
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use super::character::{standard_relations, CharGroup, Character, Gen};
use super::Base;
use crate::Tri;

/// Position of a GL(2) base in the taxonomy of polyhedral types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseType {
    /// Induced from a quadratic extension; `Ad` is not cuspidal.
    Dihedral,
    /// Non-dihedral with `Sym^3` not cuspidal.
    Tetrahedral,
    /// `Sym^3` cuspidal, `Sym^4` not cuspidal.
    Octahedral,
    /// `Sym^3` and `Sym^4` cuspidal.
    General,
    /// Known to be non-dihedral, finer type undeclared.
    NonDihedral,
}

impl BaseType {
    pub const ALL: [BaseType; 5] = [
        BaseType::Dihedral,
        BaseType::Tetrahedral,
        BaseType::Octahedral,
        BaseType::General,
        BaseType::NonDihedral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseType::Dihedral => "dihedral",
            BaseType::Tetrahedral => "tetrahedral",
            BaseType::Octahedral => "octahedral",
            BaseType::General => "general",
            BaseType::NonDihedral => "non-dihedral",
        }
    }

    pub fn from_name(s: &str) -> Option<BaseType> {
        BaseType::ALL.into_iter().find(|t| t.name() == s)
    }

    pub fn is_dihedral(self) -> Tri {
        Tri::from_bool(self == BaseType::Dihedral)
    }

    /// Cuspidality of `Sym^m` of a base of this type.
    pub fn sym_cuspidal(self, m: u32) -> Tri {
        use BaseType::*;
        match (m, self) {
            (0 | 1, _) => Tri::Yes,
            (2, Dihedral) => Tri::No,
            (2, _) => Tri::Yes,
            (3, Dihedral | Tetrahedral) => Tri::No,
            (3, Octahedral | General) => Tri::Yes,
            (4, Dihedral | Tetrahedral | Octahedral) => Tri::No,
            (4, General) => Tri::Yes,
            _ => Tri::Unknown,
        }
    }

    /// The flags `(dihedral, Sym^3 cuspidal, Sym^4 cuspidal)` that select
    /// this type; `None` for the undetermined type.
    pub fn flags(self) -> Option<(bool, bool, bool)> {
        match self {
            BaseType::Dihedral => Some((true, false, false)),
            BaseType::Tetrahedral => Some((false, false, false)),
            BaseType::Octahedral => Some((false, true, false)),
            BaseType::General => Some((false, true, true)),
            BaseType::NonDihedral => None,
        }
    }

    /// Inverse of [`BaseType::flags`]; `None` for impossible combinations.
    pub fn from_flags(dihedral: bool, sym3: bool, sym4: bool) -> Option<BaseType> {
        BaseType::ALL
            .into_iter()
            .find(|t| t.flags() == Some((dihedral, sym3, sym4)))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub pi: Option<BaseType>,
    pub pi_prime: Option<BaseType>,
    /// `Some(true)` for `pi ~ pi'`, `Some(false)` for `pi !~ pi'`.
    pub twist_equivalent: Option<bool>,
    pub nontrivial: Vec<Character>,
    /// Extra relations `c = 1`.
    pub relations: Vec<Character>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("hypothesis line {line}: {msg}")]
pub struct HypothesisError {
    pub line: usize,
    pub msg: String,
}

impl Hypotheses {
    pub fn new(pi: BaseType, pi_prime: BaseType, twist_equivalent: bool) -> Self {
        Hypotheses {
            pi: Some(pi),
            pi_prime: Some(pi_prime),
            twist_equivalent: Some(twist_equivalent),
            ..Default::default()
        }
    }

    pub fn base_type(&self, b: Base) -> Option<BaseType> {
        match b {
            Base::Pi => self.pi,
            Base::PiPrime => self.pi_prime,
        }
    }

    pub fn with_nontrivial(mut self, c: Character) -> Self {
        self.nontrivial.push(c);
        self
    }

    pub fn with_relation(mut self, c: Character) -> Self {
        self.relations.push(c);
        self
    }

    /// Whether `pi'` is rewritten as `pi tw psi`.
    pub fn aliased(&self) -> bool {
        self.twist_equivalent == Some(true)
    }

    /// Builds the character group: standing order relations, the relations
    /// implied by the declared types, and the user relations.
    pub fn char_group(&self) -> CharGroup {
        let mut rel = standard_relations();
        let mut nontrivial = self.nontrivial.clone();
        for b in [Base::Pi, Base::PiPrime] {
            match self.base_type(b) {
                Some(BaseType::Dihedral) => {
                    // pi = Ind(xi) forces (xi|_F)^2 = omega^2; the quadratic
                    // character of the field is omega * bar(xi|_F).
                    let eps = Character::gen(Gen::omega(b)).div(&Character::gen(Gen::xi(b)));
                    rel.push(eps.pow(2));
                    nontrivial.push(eps);
                }
                Some(BaseType::Tetrahedral) => nontrivial.push(Character::gen(Gen::mu(b))),
                Some(BaseType::Octahedral) => nontrivial.push(Character::gen(Gen::eta(b))),
                _ => {}
            }
        }
        if self.aliased() {
            // omega' = omega * psi^2
            rel.push(
                Character::gen(Gen::OmegaPrime)
                    .div(&Character::gen(Gen::Omega))
                    .div(&Character::gen(Gen::Psi).pow(2)),
            );
        }
        rel.extend(self.relations.iter().copied());
        CharGroup::new(rel, nontrivial)
    }

    pub fn parse(text: &str) -> Result<Hypotheses, HypothesisError> {
        let mut h = Hypotheses::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| HypothesisError { line: i + 1, msg };
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match head {
                "pi" | "pi'" => {
                    let t = BaseType::from_name(rest)
                        .ok_or_else(|| err(format!("unknown type `{rest}`")))?;
                    if head == "pi" {
                        h.pi = Some(t);
                    } else {
                        h.pi_prime = Some(t);
                    }
                }
                "twist-equivalent" | "twist-inequivalent" if rest.is_empty() => {
                    h.twist_equivalent = Some(head == "twist-equivalent");
                }
                "nontrivial" => h.nontrivial.push(Character::parse(rest).map_err(err)?),
                "relation" => {
                    let (l, r) = rest
                        .split_once('=')
                        .ok_or_else(|| err("relation needs `=`".into()))?;
                    let l = Character::parse(l).map_err(err)?;
                    let r = Character::parse(r).map_err(err)?;
                    h.relations.push(l.div(&r));
                }
                _ => return Err(err(format!("unrecognised declaration `{line}`"))),
            }
        }
        Ok(h)
    }
}

impl fmt::Display for Hypotheses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = self.pi {
            writeln!(f, "pi {}", t.name())?;
        }
        if let Some(t) = self.pi_prime {
            writeln!(f, "pi' {}", t.name())?;
        }
        match self.twist_equivalent {
            Some(true) => writeln!(f, "twist-equivalent")?,
            Some(false) => writeln!(f, "twist-inequivalent")?,
            None => {}
        }
        for c in &self.nontrivial {
            writeln!(f, "nontrivial {c}")?;
        }
        for c in &self.relations {
            writeln!(f, "relation {c} = 1")?;
        }
        Ok(())
    }
}
