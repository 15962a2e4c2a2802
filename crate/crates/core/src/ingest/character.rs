use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;

use super::modular::{is_fundamental, kronecker};
use super::IngestError;
use crate::TOLERANCE;

/// A Hecke character of `GL_1` over `Q`, read off at primes.
#[derive(Clone, Debug, PartialEq)]
pub enum CharacterData {
    Trivial,
    /// The quadratic character `(D/.)` of a fundamental discriminant.
    Kronecker(i64),
    /// Explicit values; primes dividing `modulus` are ramified.
    Table { modulus: u64, values: BTreeMap<u64, Complex64> },
}

impl CharacterData {
    pub fn kronecker(d: i64) -> Result<Self, IngestError> {
        if !is_fundamental(d) {
            return Err(IngestError::Parse {
                line: 0,
                msg: format!("{d} is not a fundamental discriminant"),
            });
        }
        Ok(CharacterData::Kronecker(d))
    }

    /// Parses `trivial`, `kron:D` or `file:PATH`.
    pub fn from_spec(spec: &str) -> Result<Self, IngestError> {
        let spec = spec.trim();
        if spec == "trivial" || spec == "1" {
            return Ok(CharacterData::Trivial);
        }
        if let Some(d) = spec.strip_prefix("kron:").or_else(|| spec.strip_prefix("kronecker:")) {
            let d = d.trim().parse::<i64>().map_err(|e| IngestError::Parse {
                line: 0,
                msg: format!("bad discriminant {d:?}: {e}"),
            })?;
            return Self::kronecker(d);
        }
        if let Some(path) = spec.strip_prefix("file:") {
            return Self::load(path);
        }
        Err(IngestError::Parse {
            line: 0,
            msg: format!("unknown character {spec:?}; expected trivial, kron:D or file:PATH"),
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, IngestError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| IngestError::Io(format!("{}: {e}", path.display())))?;
        Self::parse_table(&text)
    }

    /// Lines `p<TAB>re<TAB>im` under a `#modulus M` header.
    pub fn parse_table(text: &str) -> Result<Self, IngestError> {
        let mut modulus = None;
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |msg: String| IngestError::Parse { line, msg };
            let raw = raw.trim();
            if raw.is_empty() {
                continue;
            }
            if let Some(rest) = raw.strip_prefix('#') {
                let mut words = rest.split_whitespace();
                if words.next() == Some("modulus") {
                    let m = words
                        .next()
                        .and_then(|w| w.parse::<u64>().ok())
                        .filter(|&m| m > 0)
                        .ok_or_else(|| err("expected `#modulus M`".into()))?;
                    modulus = Some(m);
                }
                continue;
            }
            if modulus.is_none() {
                return Err(err("missing `#modulus M` header".into()));
            }
            let cols: Vec<&str> = raw.split_whitespace().collect();
            let [p, re, im] = cols[..] else {
                return Err(err(format!("expected 3 columns, found {}", cols.len())));
            };
            let p = p.parse::<u64>().map_err(|e| err(format!("prime {p:?}: {e}")))?;
            let re = re.parse::<f64>().map_err(|e| err(format!("{re:?}: {e}")))?;
            let im = im.parse::<f64>().map_err(|e| err(format!("{im:?}: {e}")))?;
            let v = Complex64::new(re, im);
            if (v.norm() - 1.0).abs() > TOLERANCE {
                return Err(err(format!("chi({p}) has modulus {}", v.norm())));
            }
            values.insert(p, v);
        }
        let modulus = modulus.ok_or(IngestError::Parse {
            line: 0,
            msg: "missing `#modulus M` header".into(),
        })?;
        Ok(CharacterData::Table { modulus, values })
    }

    pub fn modulus(&self) -> u64 {
        match self {
            CharacterData::Trivial => 1,
            CharacterData::Kronecker(d) => d.unsigned_abs(),
            CharacterData::Table { modulus, .. } => *modulus,
        }
    }

    /// `chi(p)`, or `None` when `p` is ramified or absent from a table.
    pub fn value(&self, p: u64) -> Option<Complex64> {
        if self.modulus().is_multiple_of(p) {
            return None;
        }
        match self {
            CharacterData::Trivial => Some(Complex64::new(1.0, 0.0)),
            CharacterData::Kronecker(d) => Some(Complex64::new(kronecker(*d, p) as f64, 0.0)),
            CharacterData::Table { values, .. } => values.get(&p).copied(),
        }
    }
}
