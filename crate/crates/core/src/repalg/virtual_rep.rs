//! Multisets of L-factors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::atom::{Factor, RepAtom};

/// A product `(s-1)^k * prod L(s, F)^m` of L-factors with positive
/// multiplicities. Isobaric sum corresponds to multiplying L-functions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualRep {
    pub entries: BTreeMap<Factor, u32>,
    pub s_minus_one: i32,
}

impl VirtualRep {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_factor(f: Factor, mult: u32) -> Self {
        let mut v = Self::new();
        v.add(f, mult);
        v
    }

    pub fn from_atom(a: RepAtom) -> Self {
        Self::from_factor(Factor::atom(a), 1)
    }

    pub fn add(&mut self, f: Factor, mult: u32) {
        if mult > 0 {
            *self.entries.entry(f).or_insert(0) += mult;
        }
    }

    pub fn with(mut self, f: Factor, mult: u32) -> Self {
        self.add(f, mult);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Factor, u32)> {
        self.entries.iter().map(|(f, &m)| (f, m))
    }

    pub fn multiplicity(&self, f: &Factor) -> u32 {
        self.entries.get(f).copied().unwrap_or(0)
    }

    /// Isobaric sum.
    pub fn plus(&self, other: &VirtualRep) -> VirtualRep {
        let mut out = self.clone();
        for (f, m) in other.iter() {
            out.add(f.clone(), m);
        }
        out.s_minus_one += other.s_minus_one;
        out
    }

    pub fn scaled(&self, k: u32) -> VirtualRep {
        let mut out = VirtualRep::new();
        for (f, m) in self.iter() {
            out.add(f.clone(), m * k);
        }
        out.s_minus_one = self.s_minus_one * k as i32;
        out
    }

    /// Total degree of the Euler product.
    pub fn degree(&self) -> u64 {
        self.iter().map(|(f, m)| f.degree() * m as u64).sum()
    }

    /// `self - other` as a signed multiset (bookkeeping exponent ignored).
    pub fn minus(&self, other: &VirtualRep) -> Delta {
        let mut d = Delta::from(self);
        for (f, m) in other.iter() {
            d.add(f.clone(), -(m as i64));
        }
        d
    }
}

/// A signed multiset of factors, used for differences and corrections.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta {
    pub entries: BTreeMap<Factor, i64>,
}

impl Delta {
    pub fn add(&mut self, f: Factor, m: i64) {
        let e = self.entries.entry(f.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.entries.remove(&f);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Factor, i64)> {
        self.entries.iter().map(|(f, &m)| (f, m))
    }

    /// Number of distinct factors with a non-zero delta.
    pub fn atoms(&self) -> usize {
        self.entries.len()
    }

    /// Converts back to a [`VirtualRep`] if every multiplicity is positive.
    pub fn to_rep(&self) -> Option<VirtualRep> {
        let mut v = VirtualRep::new();
        for (f, m) in self.iter() {
            if m < 0 {
                return None;
            }
            v.add(f.clone(), u32::try_from(m).ok()?);
        }
        Some(v)
    }

    /// `rep + self`, failing if a multiplicity would go negative.
    pub fn apply(&self, rep: &VirtualRep) -> Option<VirtualRep> {
        let mut d = Delta::from(rep);
        for (f, m) in self.iter() {
            d.add(f.clone(), m);
        }
        let mut out = d.to_rep()?;
        out.s_minus_one = rep.s_minus_one;
        Some(out)
    }
}

impl From<&VirtualRep> for Delta {
    fn from(v: &VirtualRep) -> Delta {
        Delta {
            entries: v.iter().map(|(f, m)| (f.clone(), m as i64)).collect(),
        }
    }
}
