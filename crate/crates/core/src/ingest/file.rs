use std::collections::BTreeMap;
use std::path::Path;

use super::{IngestError, NewformData};

pub fn load_eigenvalue_file(path: impl AsRef<Path>) -> Result<NewformData, IngestError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| IngestError::Io(format!("{}: {e}", path.display())))?;
    parse_eigenvalues(&text)
}

/// `#weight k level N`, then one `p<TAB>a_p` line per prime. Other `#` lines
/// are comments.
pub fn parse_eigenvalues(text: &str) -> Result<NewformData, IngestError> {
    let mut header: Option<(u32, u64)> = None;
    let mut ap = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| IngestError::Parse { line, msg };
        let raw = raw.trim();
        if raw.is_empty() {
            continue;
        }
        if let Some(rest) = raw.strip_prefix('#') {
            let words: Vec<&str> = rest.split_whitespace().collect();
            if words.first() == Some(&"weight") {
                let ["weight", k, "level", n] = words[..] else {
                    return Err(err("expected `#weight k level N`".into()));
                };
                let k = k.parse::<u32>().ok().filter(|&k| k > 0);
                let n = n.parse::<u64>().ok().filter(|&n| n > 0);
                let (Some(k), Some(n)) = (k, n) else {
                    return Err(err("weight and level must be positive integers".into()));
                };
                header = Some((k, n));
            }
            continue;
        }
        if header.is_none() {
            return Err(err("missing `#weight k level N` header".into()));
        }
        let cols: Vec<&str> = raw.split_whitespace().collect();
        let [p, a] = cols[..] else {
            return Err(err(format!("expected 2 columns, found {}", cols.len())));
        };
        let p = p
            .parse::<u64>()
            .ok()
            .filter(|&p| primal::is_prime(p))
            .ok_or_else(|| err(format!("{p:?} is not a prime")))?;
        let a = a
            .parse::<i128>()
            .map_err(|e| err(format!("a_{p} = {a:?} is not an integer: {e}")))?;
        if ap.insert(p, a).is_some() {
            return Err(err(format!("duplicate entry for p = {p}")));
        }
    }
    let (weight, level) = header.ok_or(IngestError::Parse {
        line: 0,
        msg: "missing `#weight k level N` header".into(),
    })?;
    let bound = ap.keys().next_back().copied().unwrap_or(0);
    NewformData::new(weight, level, ap, bound)
}
