//! Atomic automorphic symbols and the L-factors built from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::character::{Character, Gen};

/// The two GL(2) bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Base {
    Pi,
    PiPrime,
}

impl Base {
    pub fn name(self) -> &'static str {
        match self {
            Base::Pi => "pi",
            Base::PiPrime => "pi'",
        }
    }

    pub fn other(self) -> Base {
        match self {
            Base::Pi => Base::PiPrime,
            Base::PiPrime => Base::Pi,
        }
    }

    pub fn omega(self) -> Character {
        Character::gen(Gen::omega(self))
    }
}

/// GL(2) atoms without Satake coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OpaqueLabel {
    /// The dihedral constituent of `Sym^4 tw omega^-2` for an octahedral base.
    Nu(Base),
    /// `Ind(xi^2)` for a dihedral base `Ind(xi)`.
    InducedXiSq(Base),
}

impl OpaqueLabel {
    pub fn base(self) -> Base {
        match self {
            OpaqueLabel::Nu(b) | OpaqueLabel::InducedXiSq(b) => b,
        }
    }
}

/// The untwisted part of an atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Core {
    Sym { base: Base, m: u32 },
    Opaque(OpaqueLabel),
}

impl Core {
    pub fn sym(base: Base, m: u32) -> Core {
        Core::Sym { base, m }
    }

    pub fn base(self) -> Base {
        match self {
            Core::Sym { base, .. } => base,
            Core::Opaque(l) => l.base(),
        }
    }

    pub fn degree(self) -> u64 {
        match self {
            Core::Sym { m, .. } => m as u64 + 1,
            Core::Opaque(_) => 2,
        }
    }

    /// Twist under which the atom is conventionally displayed:
    /// `omega^-(m/2)` for symmetric powers, so `Sym^2` shows as `Ad` and
    /// `Sym^4` as `Sym^4 tw omega^-2`.
    pub fn natural_twist(self) -> Character {
        match self {
            Core::Sym { base, m } => base.omega().pow(-((m / 2) as i64)),
            Core::Opaque(_) => Character::TRIVIAL,
        }
    }

    /// `s` such that the contragredient of `core tw c` is `core tw c^-1 s^-1`,
    /// i.e. the central-character shift of the core.
    pub fn dual_shift(self) -> Character {
        match self {
            Core::Sym { base, m } => base.omega().pow(m as i64),
            Core::Opaque(OpaqueLabel::Nu(_)) => Character::TRIVIAL,
            // central character of Ind(xi^2) is eps_K * xi|_F^2 = omega * xi|_F
            Core::Opaque(OpaqueLabel::InducedXiSq(b)) => {
                b.omega().mul(&Character::gen(Gen::xi(b)))
            }
        }
    }

    fn write_name(self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Core::Sym { base, m: 1 } => write!(f, "{}", base.name()),
            Core::Sym { base, m: 2 } => write!(f, "Ad({})", base.name()),
            Core::Sym { base, m } => write!(f, "Sym^{m}({})", base.name()),
            Core::Opaque(OpaqueLabel::Nu(b)) => write!(f, "nu({})", b.name()),
            Core::Opaque(OpaqueLabel::InducedXiSq(b)) => write!(f, "Ind({})", b.name()),
        }
    }

    /// Twist carried by the displayed name itself (`Ad(pi)` already means
    /// `Sym^2(pi) tw omega^-1`).
    pub fn display_offset(self) -> Character {
        match self {
            Core::Sym { base, m: 2 } => base.omega().inv(),
            _ => Character::TRIVIAL,
        }
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_name(f)
    }
}

/// A character (`core = None`) or a twisted core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RepAtom {
    pub core: Option<Core>,
    pub twist: Character,
}

impl RepAtom {
    pub fn char(c: Character) -> RepAtom {
        RepAtom {
            core: None,
            twist: c,
        }
    }

    pub fn sym(base: Base, m: u32, twist: Character) -> RepAtom {
        RepAtom {
            core: Some(Core::sym(base, m)),
            twist,
        }
    }

    /// `Ad(b) = Sym^2(b) tw omega_b^-1`.
    pub fn ad(base: Base) -> RepAtom {
        RepAtom::sym(base, 2, base.omega().inv())
    }

    pub fn opaque(label: OpaqueLabel, twist: Character) -> RepAtom {
        RepAtom {
            core: Some(Core::Opaque(label)),
            twist,
        }
    }

    pub fn tw(mut self, c: Character) -> RepAtom {
        self.twist = self.twist.mul(&c);
        self
    }

    pub fn degree(&self) -> u64 {
        self.core.map_or(1, Core::degree)
    }
}

/// One L-factor: a tensor word of cores with a single total twist.
///
/// No cores is a Hecke character, one core a standard L-function, two cores
/// a Rankin-Selberg pair. Longer words are kept formally. Because twists
/// commute through tensor products only the total matters, which is what
/// makes the representation canonical once the cores are sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub cores: Vec<Core>,
    pub twist: Character,
}

impl Factor {
    pub fn char(c: Character) -> Factor {
        Factor {
            cores: Vec::new(),
            twist: c,
        }
    }

    pub fn atom(a: RepAtom) -> Factor {
        Factor {
            cores: a.core.into_iter().collect(),
            twist: a.twist,
        }
    }

    pub fn pair(a: RepAtom, b: RepAtom) -> Factor {
        let mut f = Factor::atom(a);
        f.cores.extend(b.core);
        f.twist = f.twist.mul(&b.twist);
        f.cores.sort();
        f
    }

    /// Tensor product of two factors.
    pub fn tensor(&self, other: &Factor) -> Factor {
        let mut cores = self.cores.clone();
        cores.extend(other.cores.iter().copied());
        cores.sort();
        Factor {
            cores,
            twist: self.twist.mul(&other.twist),
        }
    }

    pub fn tw(&self, c: &Character) -> Factor {
        Factor {
            cores: self.cores.clone(),
            twist: self.twist.mul(c),
        }
    }

    pub fn degree(&self) -> u64 {
        self.cores.iter().map(|c| c.degree()).product()
    }

    pub fn is_char(&self) -> bool {
        self.cores.is_empty()
    }

    /// Members in display convention: every member except the last carries
    /// its natural twist, the last one absorbs the remainder.
    pub fn members(&self) -> Vec<RepAtom> {
        if self.cores.is_empty() {
            return vec![RepAtom::char(self.twist)];
        }
        let mut rest = self.twist;
        let mut out = Vec::with_capacity(self.cores.len());
        for (i, &core) in self.cores.iter().enumerate() {
            let t = if i + 1 == self.cores.len() {
                rest
            } else {
                core.natural_twist()
            };
            rest = rest.div(&t);
            out.push(RepAtom {
                core: Some(core),
                twist: t,
            });
        }
        out
    }

    /// Renders in the expression grammar, formatting characters with `fmt_char`.
    pub fn render(&self, fmt_char: &dyn Fn(&Character) -> String) -> String {
        let parts: Vec<String> = self
            .members()
            .iter()
            .map(|a| render_atom(a, fmt_char))
            .collect();
        parts.join(" (x) ")
    }
}

pub fn render_atom(a: &RepAtom, fmt_char: &dyn Fn(&Character) -> String) -> String {
    match a.core {
        None => {
            let s = fmt_char(&a.twist);
            if s == "1" {
                "zeta".into()
            } else {
                s
            }
        }
        Some(core) => {
            let t = a.twist.div(&core.display_offset());
            let s = fmt_char(&t);
            if s == "1" {
                core.to_string()
            } else if s.contains('*') {
                format!("{core} tw ({s})")
            } else {
                format!("{core} tw {s}")
            }
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|c| c.to_string()))
    }
}
