//! Hypothesis-dependent operations: normal form, products, duality and
//! three-valued atom equality.

use super::atom::{Base, Core, Factor, OpaqueLabel, RepAtom};
use super::cg::cg_expand;
use super::character::{CharGroup, Character, Gen};
use super::hypotheses::{BaseType, Hypotheses};
use super::virtual_rep::VirtualRep;
use crate::Tri;

/// Normal-form switches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalOptions {
    /// Expand same-base symmetric-power products by Clebsch-Gordan.
    pub cg: bool,
}

impl Default for NormalOptions {
    fn default() -> Self {
        NormalOptions { cg: true }
    }
}

/// A character group together with the hypotheses that produced it.
#[derive(Clone, Debug)]
pub struct Context {
    pub hyp: Hypotheses,
    pub group: CharGroup,
}

/// Known stabilizer `{c : core tw c = core}`: generators, and whether the
/// generators span the whole stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilizer {
    pub gens: Vec<Character>,
    pub exact: bool,
}

impl Context {
    pub fn new(hyp: Hypotheses) -> Self {
        let group = hyp.char_group();
        Context { hyp, group }
    }

    /// No hypotheses at all; only the standing order relations hold.
    pub fn bare() -> Self {
        Context::new(Hypotheses::default())
    }

    fn base_type(&self, b: Base) -> Option<BaseType> {
        self.hyp.base_type(b)
    }

    pub fn is_trivial(&self, c: &Character) -> Tri {
        self.group.is_trivial(c)
    }

    /// Rewrites `pi'` atoms in terms of `pi` under twist-equivalence and
    /// turns `Sym^0` into a character twist.
    fn canon_core(&self, core: Core) -> (Option<Core>, Character) {
        let psi = Character::gen(Gen::Psi);
        match core {
            Core::Sym { m: 0, .. } => (None, Character::TRIVIAL),
            Core::Sym {
                base: Base::PiPrime,
                m,
            } if self.hyp.aliased() => (Some(Core::sym(Base::Pi, m)), psi.pow(m as i64)),
            Core::Opaque(OpaqueLabel::Nu(Base::PiPrime)) if self.hyp.aliased() => {
                (Some(Core::Opaque(OpaqueLabel::Nu(Base::Pi))), Character::TRIVIAL)
            }
            Core::Opaque(OpaqueLabel::InducedXiSq(Base::PiPrime)) if self.hyp.aliased() => (
                Some(Core::Opaque(OpaqueLabel::InducedXiSq(Base::Pi))),
                psi.pow(2),
            ),
            other => (Some(other), Character::TRIVIAL),
        }
    }

    fn canon_atom(&self, a: &RepAtom) -> RepAtom {
        match a.core {
            None => *a,
            Some(core) => {
                let (core, t) = self.canon_core(core);
                RepAtom {
                    core,
                    twist: a.twist.mul(&t),
                }
            }
        }
    }

    /// Declared decomposition of a non-cuspidal core into `(core, twist)`
    /// summands.
    pub fn decomposition(&self, core: Core) -> Option<Vec<(Option<Core>, Character)>> {
        let Core::Sym { base: b, m } = core else {
            return None;
        };
        let w = b.omega();
        match (m, self.base_type(b)?) {
            (4, BaseType::Tetrahedral) => {
                // Sym^4 tw omega^-2 = Ad + mu + bar(mu)
                let mu = Character::gen(Gen::mu(b));
                Some(vec![
                    (Some(Core::sym(b, 2)), w),
                    (None, mu.mul(&w.pow(2))),
                    (None, mu.inv().mul(&w.pow(2))),
                ])
            }
            (4, BaseType::Octahedral) => {
                // Sym^4 tw omega^-2 = nu + Ad tw eta
                let eta = Character::gen(Gen::eta(b));
                Some(vec![
                    (Some(Core::Opaque(OpaqueLabel::Nu(b))), w.pow(2)),
                    (Some(Core::sym(b, 2)), eta.mul(&w)),
                ])
            }
            (2, BaseType::Dihedral) => {
                // Sym^2 Ind(xi) = Ind(xi^2) + xi|_F
                Some(vec![
                    (Some(Core::Opaque(OpaqueLabel::InducedXiSq(b))), Character::TRIVIAL),
                    (None, Character::gen(Gen::xi(b))),
                ])
            }
            _ => None,
        }
    }

    pub fn stabilizer(&self, core: Core) -> Stabilizer {
        let st = |gens: Vec<Character>, exact: bool| Stabilizer { gens, exact };
        let eps = |b: Base| b.omega().div(&Character::gen(Gen::xi(b)));
        match core {
            Core::Opaque(OpaqueLabel::Nu(b)) => st(vec![Character::gen(Gen::eta(b))], false),
            Core::Opaque(OpaqueLabel::InducedXiSq(b)) => st(vec![eps(b)], false),
            Core::Sym { base: b, m } => match (m, self.base_type(b)) {
                (0, _) => st(vec![], true),
                (1, Some(BaseType::Dihedral)) => st(vec![eps(b)], false),
                (1, Some(_)) => st(vec![], true),
                (2, Some(BaseType::Tetrahedral)) => st(vec![Character::gen(Gen::mu(b))], true),
                (2, Some(BaseType::Octahedral | BaseType::General)) => st(vec![], true),
                (3, Some(BaseType::Octahedral)) => st(vec![Character::gen(Gen::eta(b))], true),
                _ => st(vec![], false),
            },
        }
    }

    /// Cuspidality of a core under the hypotheses.
    pub fn cuspidal(&self, core: Core) -> Tri {
        match core {
            Core::Opaque(_) => Tri::Yes,
            Core::Sym { base, m } => {
                let base = if self.hyp.aliased() { Base::Pi } else { base };
                match self.base_type(base) {
                    Some(t) => t.sym_cuspidal(m),
                    None if m <= 1 => Tri::Yes,
                    None => Tri::Unknown,
                }
            }
        }
    }

    /// Normal form of a single factor with multiplicity, accumulated into `out`.
    fn normalize_into(&self, f: &Factor, mult: u32, opts: NormalOptions, out: &mut VirtualRep) {
        let mut work = vec![f.clone()];
        while let Some(mut f) = work.pop() {
            // aliasing and Sym^0
            let mut cores = Vec::with_capacity(f.cores.len());
            for &c in &f.cores {
                let (c, t) = self.canon_core(c);
                f.twist = f.twist.mul(&t);
                cores.extend(c);
            }
            cores.sort();
            f.cores = cores;

            if let Some(i) = f.cores.iter().position(|&c| self.decomposition(c).is_some()) {
                let parts = self.decomposition(f.cores[i]).unwrap_or_default();
                for (core, t) in parts {
                    let mut cores = f.cores.clone();
                    cores.remove(i);
                    cores.extend(core);
                    work.push(Factor {
                        cores,
                        twist: f.twist.mul(&t),
                    });
                }
                continue;
            }

            if opts.cg {
                if let Some((i, j)) = same_base_sym_pair(&f.cores) {
                    let (Core::Sym { base, m: a }, Core::Sym { m: b, .. }) = (f.cores[i], f.cores[j])
                    else {
                        unreachable!()
                    };
                    for (d, r) in cg_expand(a, b) {
                        let mut cores: Vec<Core> = f
                            .cores
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i && k != j)
                            .map(|(_, &c)| c)
                            .collect();
                        cores.push(Core::sym(base, d));
                        work.push(Factor {
                            cores,
                            twist: f.twist.mul(&base.omega().pow(r as i64)),
                        });
                    }
                    continue;
                }
            }

            let stab: Vec<Character> = f
                .cores
                .iter()
                .flat_map(|&c| self.stabilizer(c).gens)
                .collect();
            f.twist = self.group.reduce_mod(&f.twist, &stab);
            out.add(f, mult);
        }
    }

    pub fn normal_form_with(&self, x: &VirtualRep, opts: NormalOptions) -> VirtualRep {
        let mut out = VirtualRep::new();
        for (f, m) in x.iter() {
            self.normalize_into(f, m, opts, &mut out);
        }
        out.s_minus_one = x.s_minus_one;
        out
    }

    pub fn normal_form(&self, x: &VirtualRep) -> VirtualRep {
        self.normal_form_with(x, NormalOptions::default())
    }

    pub fn normal_factor(&self, f: &Factor) -> VirtualRep {
        self.normal_form(&VirtualRep::from_factor(f.clone(), 1))
    }

    /// Rankin-Selberg product, extended bilinearly. The bookkeeping
    /// exponent of the result is zero.
    pub fn rs_product_with(&self, a: &VirtualRep, b: &VirtualRep, opts: NormalOptions) -> VirtualRep {
        let mut raw = VirtualRep::new();
        for (fa, ma) in a.iter() {
            for (fb, mb) in b.iter() {
                raw.add(fa.tensor(fb), ma * mb);
            }
        }
        self.normal_form_with(&raw, opts)
    }

    pub fn rs_product(&self, a: &VirtualRep, b: &VirtualRep) -> VirtualRep {
        self.rs_product_with(a, b, NormalOptions::default())
    }

    pub fn dual_factor(&self, f: &Factor) -> Factor {
        let shift = f
            .cores
            .iter()
            .fold(Character::TRIVIAL, |acc, c| acc.mul(&c.dual_shift()));
        Factor {
            cores: f.cores.clone(),
            twist: f.twist.inv().div(&shift),
        }
    }

    pub fn dual_atom(&self, a: &RepAtom) -> RepAtom {
        let shift = a.core.map_or(Character::TRIVIAL, |c| c.dual_shift());
        RepAtom {
            core: a.core,
            twist: a.twist.inv().div(&shift),
        }
    }

    pub fn contragredient_with(&self, x: &VirtualRep, opts: NormalOptions) -> VirtualRep {
        let mut raw = VirtualRep::new();
        for (f, m) in x.iter() {
            raw.add(self.dual_factor(f), m);
        }
        raw.s_minus_one = x.s_minus_one;
        self.normal_form_with(&raw, opts)
    }

    pub fn contragredient(&self, x: &VirtualRep) -> VirtualRep {
        self.contragredient_with(x, NormalOptions::default())
    }

    /// Elements of the known stabilizer subgroup of `core`.
    fn stabilizer_elements(&self, core: Core) -> Vec<Character> {
        let mut elems = vec![Character::TRIVIAL];
        let gens = self.stabilizer(core).gens;
        let mut i = 0;
        while i < elems.len() && elems.len() < 64 {
            for g in &gens {
                let n = self.group.reduce(&elems[i].mul(g));
                if !elems.contains(&n) {
                    elems.push(n);
                }
            }
            i += 1;
        }
        elems
    }

    /// Whether `core tw d = core`; `skip_trivial` evaluates under the
    /// assumption `d != 1`.
    fn self_twisted(&self, core: Core, d: &Character, skip_trivial: bool) -> Tri {
        let stab = self.stabilizer(core);
        let mut acc = Tri::No;
        for s in self.stabilizer_elements(core) {
            if skip_trivial && s.is_zero() {
                continue;
            }
            acc = acc.or(self.is_trivial(&d.div(&s)));
        }
        if !stab.exact {
            acc = acc.or(Tri::Unknown);
        }
        acc
    }

    /// Three-valued isomorphism test for twisted atoms.
    pub fn atom_equal(&self, a: &RepAtom, b: &RepAtom) -> Tri {
        let a = self.canon_atom(a);
        let b = self.canon_atom(b);
        match (a.core, b.core) {
            (None, None) => self.is_trivial(&a.twist.div(&b.twist)),
            (None, Some(_)) | (Some(_), None) => Tri::No,
            (Some(x), Some(y)) if x == y => self.self_twisted(x, &a.twist.div(&b.twist), false),
            (Some(x), Some(y)) => {
                if x.degree() != y.degree() {
                    return Tri::No;
                }
                match (x, y) {
                    (Core::Sym { m: 1, .. }, Core::Sym { m: 1, .. }) => {
                        if self.hyp.twist_equivalent == Some(false) {
                            Tri::No
                        } else {
                            Tri::Unknown
                        }
                    }
                    (Core::Sym { base: bx, m: 2 }, Core::Sym { base: by, m: 2 }) => {
                        // Ad(bx) tw s vs Ad(by) tw t  <=>  Ad(bx) vs Ad(by) tw t/s
                        let s = a.twist.mul(&bx.omega());
                        let t = b.twist.mul(&by.omega());
                        self.adjoint_twist_equal(bx, by, &t.div(&s))
                    }
                    (Core::Sym { base, m: 1 }, Core::Opaque(_))
                    | (Core::Opaque(_), Core::Sym { base, m: 1 }) => {
                        match self.base_type(base) {
                            Some(t) if t != BaseType::Dihedral => Tri::No,
                            _ => Tri::Unknown,
                        }
                    }
                    _ => Tri::Unknown,
                }
            }
        }
    }

    /// Whether `Ad(bx) = Ad(by) tw xi` for distinct bases, by enumerating
    /// the possible worlds for `(xi^3 = 1, xi = 1)`.
    fn adjoint_twist_equal(&self, bx: Base, by: Base, xi: &Character) -> Tri {
        let nondihedral = |b: Base| matches!(self.base_type(b), Some(t) if t != BaseType::Dihedral);
        if !nondihedral(bx) || !nondihedral(by) {
            return Tri::Unknown;
        }
        let t3 = self.is_trivial(&xi.pow(3));
        let t1 = self.is_trivial(xi);
        let coprime_to_3 = matches!(self.group.order(xi), Some(n) if n % 3 != 0);
        let compatible = |t: Tri, w: bool| match t {
            Tri::Yes => w,
            Tri::No => !w,
            Tri::Unknown => true,
        };
        let mut all_distinct = true;
        for (cube_trivial, trivial) in [(false, false), (true, true), (true, false)] {
            if !compatible(t3, cube_trivial) || !compatible(t1, trivial) {
                continue;
            }
            if coprime_to_3 && cube_trivial && !trivial {
                continue;
            }
            let distinct = if !cube_trivial {
                Tri::Yes
            } else if trivial {
                // Ad(pi) = Ad(pi') forces pi ~ pi'
                match self.hyp.twist_equivalent {
                    Some(false) => Tri::Yes,
                    _ => Tri::Unknown,
                }
            } else {
                let sx = self.self_twisted(Core::sym(bx, 2), xi, true);
                let sy = self.self_twisted(Core::sym(by, 2), xi, true);
                !sx.or(sy)
            };
            if distinct != Tri::Yes {
                all_distinct = false;
            }
        }
        if all_distinct {
            Tri::No
        } else {
            Tri::Unknown
        }
    }

    /// Renders a character in reduced, balanced form.
    pub fn show_char(&self, c: &Character) -> String {
        self.group.display(c)
    }

    pub fn show_factor(&self, f: &Factor) -> String {
        f.render(&|c| self.group.display(c))
    }

    /// One line per factor, `mult  factor`.
    pub fn show_rep(&self, x: &VirtualRep) -> String {
        let mut s = String::new();
        for (f, m) in x.iter() {
            s.push_str(&format!("{m:>3}  {}\n", self.show_factor(f)));
        }
        if x.s_minus_one != 0 {
            s.push_str(&format!("(s-1)^{}\n", x.s_minus_one));
        }
        s
    }
}

fn same_base_sym_pair(cores: &[Core]) -> Option<(usize, usize)> {
    for i in 0..cores.len() {
        for j in i + 1..cores.len() {
            if let (Core::Sym { base: a, m: ma }, Core::Sym { base: b, m: mb }) = (cores[i], cores[j]) {
                if a == b && ma > 0 && mb > 0 {
                    return Some((i, j));
                }
            }
        }
    }
    None
}
