//! A linear notation for isobaric sums of L-factors.
//!
//! ```text
//! sum     := term ("(+)" term)*
//! term    := [count] product
//! product := unary ("(x)" unary)*
//! unary   := "~" unary | primary ("tw" character)*
//! primary := "(" sum ")" | "pi" | "pi'" | "Ad(" base ")" | "Sym^" n "(" base ")"
//!          | "nu(" base ")" | "Ind(" base ")" | "zeta" | character
//! character := factor ("*" factor)*   with factor := name ["^" int] | "bar(" name ")" | "1"
//! ```
//!
//! `tw` binds tightest, then `(x)` (Rankin-Selberg), then `(+)` (isobaric).
//! `~` is the contragredient. Evaluation is purely formal: the result is
//! not normalised.

use super::atom::{Base, Core, Factor, OpaqueLabel};
use super::character::{Character, Gen};
use super::virtual_rep::VirtualRep;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("parse error at column {col}: {msg}")]
pub struct ParseError {
    pub col: usize,
    pub msg: String,
}

pub fn parse(src: &str) -> Result<VirtualRep, ParseError> {
    let mut p = Parser { s: src.as_bytes(), i: 0 };
    let v = p.sum()?;
    p.ws();
    if p.i < p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Renders a rep as a parseable expression.
pub fn render(x: &VirtualRep, fmt_char: &dyn Fn(&Character) -> String) -> String {
    let terms: Vec<String> = x
        .iter()
        .map(|(f, m)| {
            let body = f.render(fmt_char);
            if m == 1 {
                body
            } else {
                format!("{m} {body}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" (+) ")
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            col: self.i + 1,
            msg: msg.into(),
        }
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn rest(&self) -> &[u8] {
        &self.s[self.i..]
    }

    fn peek_op(&mut self, op: &str) -> bool {
        self.ws();
        self.rest().starts_with(op.as_bytes())
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.peek_op(tok) {
            self.i += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{tok}`")))
        }
    }

    /// Identifier including trailing primes.
    fn ident(&mut self) -> Option<String> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
            self.i += 1;
        }
        if self.i == start || self.s[start].is_ascii_digit() {
            self.i = start;
            return None;
        }
        while self.i < self.s.len() && self.s[self.i] == b'\'' {
            self.i += 1;
        }
        Some(String::from_utf8_lossy(&self.s[start..self.i]).into_owned())
    }

    fn int(&mut self) -> Option<i64> {
        self.ws();
        let start = self.i;
        if self.i < self.s.len() && self.s[self.i] == b'-' {
            self.i += 1;
        }
        let digits = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if self.i == digits {
            self.i = start;
            return None;
        }
        std::str::from_utf8(&self.s[start..self.i]).ok()?.parse().ok()
    }

    fn sum(&mut self) -> Result<VirtualRep, ParseError> {
        let mut v = self.term()?;
        while self.eat("(+)") {
            v = v.plus(&self.term()?);
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<VirtualRep, ParseError> {
        let save = self.i;
        if let Some(n) = self.int() {
            self.ws();
            let starts_product = self.i < self.s.len()
                && !self.rest().starts_with(b"(+)")
                && !self.rest().starts_with(b"(x)")
                && !matches!(self.s[self.i], b')' | b'*' | b'^');
            if starts_product && n > 0 {
                return Ok(self.product()?.scaled(n as u32));
            }
            if n == 0 && !starts_product {
                return Ok(VirtualRep::new());
            }
            self.i = save;
        }
        self.product()
    }

    fn product(&mut self) -> Result<VirtualRep, ParseError> {
        let mut v = self.unary()?;
        while self.eat("(x)") {
            let w = self.unary()?;
            v = tensor(&v, &w);
        }
        Ok(v)
    }

    fn unary(&mut self) -> Result<VirtualRep, ParseError> {
        if self.eat("~") {
            let v = self.unary()?;
            let mut out = VirtualRep::new();
            for (f, m) in v.iter() {
                let shift = f
                    .cores
                    .iter()
                    .fold(Character::TRIVIAL, |acc, c| acc.mul(&c.dual_shift()));
                out.add(
                    Factor {
                        cores: f.cores.clone(),
                        twist: f.twist.inv().div(&shift),
                    },
                    m,
                );
            }
            return Ok(out);
        }
        let mut v = self.primary()?;
        loop {
            let save = self.i;
            match self.ident() {
                Some(w) if w == "tw" => {
                    let c = self.character()?;
                    let mut out = VirtualRep::new();
                    for (f, m) in v.iter() {
                        out.add(f.tw(&c), m);
                    }
                    v = out;
                }
                _ => {
                    self.i = save;
                    break;
                }
            }
        }
        Ok(v)
    }

    fn base_arg(&mut self) -> Result<Base, ParseError> {
        self.expect("(")?;
        let b = match self.ident().as_deref() {
            Some("pi") => Base::Pi,
            Some("pi'") => Base::PiPrime,
            _ => return Err(self.err("expected `pi` or `pi'`")),
        };
        self.expect(")")?;
        Ok(b)
    }

    fn primary(&mut self) -> Result<VirtualRep, ParseError> {
        self.ws();
        if self.rest().starts_with(b"(") && !self.rest().starts_with(b"(+)") && !self.rest().starts_with(b"(x)") {
            self.i += 1;
            let v = self.sum()?;
            self.expect(")")?;
            return Ok(v);
        }
        let save = self.i;
        let core_rep = |core: Core| VirtualRep::from_factor(Factor { cores: vec![core], twist: Character::TRIVIAL }, 1);
        match self.ident().as_deref() {
            Some("pi") => return Ok(core_rep(Core::sym(Base::Pi, 1))),
            Some("pi'") => return Ok(core_rep(Core::sym(Base::PiPrime, 1))),
            Some("zeta") => return Ok(VirtualRep::from_factor(Factor::char(Character::TRIVIAL), 1)),
            Some("Ad") => {
                let b = self.base_arg()?;
                return Ok(VirtualRep::from_factor(
                    Factor {
                        cores: vec![Core::sym(b, 2)],
                        twist: b.omega().inv(),
                    },
                    1,
                ));
            }
            Some("nu") => return Ok(core_rep(Core::Opaque(OpaqueLabel::Nu(self.base_arg()?)))),
            Some("Ind") => {
                return Ok(core_rep(Core::Opaque(OpaqueLabel::InducedXiSq(self.base_arg()?))))
            }
            Some("Sym") => {
                self.expect("^")?;
                let m = self
                    .int()
                    .filter(|&m| (0..=64).contains(&m))
                    .ok_or_else(|| self.err("expected symmetric power degree"))?;
                let b = self.base_arg()?;
                return Ok(core_rep(Core::sym(b, m as u32)));
            }
            _ => self.i = save,
        }
        let c = self.character()?;
        Ok(VirtualRep::from_factor(Factor::char(c), 1))
    }

    fn char_factor(&mut self) -> Result<Character, ParseError> {
        self.ws();
        if self.rest().starts_with(b"1") {
            self.i += 1;
            return Ok(Character::TRIVIAL);
        }
        if self.eat("(") {
            let c = self.character()?;
            self.expect(")")?;
            return self.char_power(c);
        }
        let save = self.i;
        let name = self.ident().ok_or_else(|| self.err("expected a character"))?;
        let c = if name == "bar" {
            self.expect("(")?;
            let inner = self.character()?;
            self.expect(")")?;
            inner.inv()
        } else {
            match Gen::from_name(&name) {
                Some(g) => Character::gen(g),
                None => {
                    self.i = save;
                    return Err(self.err(&format!("unknown symbol `{name}`")));
                }
            }
        };
        self.char_power(c)
    }

    fn char_power(&mut self, c: Character) -> Result<Character, ParseError> {
        if self.eat("^") {
            let e = self.int().ok_or_else(|| self.err("expected exponent"))?;
            Ok(c.pow(e))
        } else {
            Ok(c)
        }
    }

    fn character(&mut self) -> Result<Character, ParseError> {
        let mut c = self.char_factor()?;
        while self.eat("*") {
            c = c.mul(&self.char_factor()?);
        }
        Ok(c)
    }
}

fn tensor(a: &VirtualRep, b: &VirtualRep) -> VirtualRep {
    let mut out = VirtualRep::new();
    for (fa, ma) in a.iter() {
        for (fb, mb) in b.iter() {
            out.add(fa.tensor(fb), ma * mb);
        }
    }
    out
}
