//! Report builders for each subcommand.

use std::fmt;
use std::path::Path;

use sha2::{Digest, Sha256};

use rsverify::casebook::{self, CaseError};
use rsverify::dseries::{self, AuxSeries, ScanValue};
use rsverify::ingest::{self, CharacterData, IngestError, NewformData};
use rsverify::poles::{entirety_check, PoleError};
use rsverify::repalg::{expr, Context, Hypotheses, NormalOptions};
use rsverify::report::{Status, Verdict};
use rsverify::satake::SatakeSpace;
use rsverify::Exec;

/// Bad arguments or unreadable input; reported on stderr with exit 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<CaseError> for UsageError {
    fn from(e: CaseError) -> Self {
        UsageError(e.to_string())
    }
}

pub struct Outcome {
    pub digest: String,
    pub verdicts: Vec<Verdict>,
}

fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn read(path: &Path) -> Result<String, UsageError> {
    std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

const SOS_IDS: [&str; 5] = [
    "sos/identity",
    "sos/ad-real/pi",
    "sos/ad-square/pi",
    "sos/ad-real/pi'",
    "sos/ad-square/pi'",
];

pub fn verify_sos() -> Result<Outcome, UsageError> {
    let series = AuxSeries::default();
    let r = dseries::verify_sos(&series).map_err(|e| UsageError(e.to_string()))?;
    let mut verdicts: Vec<Verdict> = SOS_IDS
        .iter()
        .zip(&r.checks)
        .map(|(id, c)| {
            Verdict::new(*id, Status::from_bool(c.holds))
                .detail(c.name.clone())
                .detail(format!("residual: {}", c.residual))
        })
        .collect();
    verdicts.push(
        Verdict::new(
            "sos/degree",
            Status::from_bool(r.degree == dseries::DEGREE && r.value_at_identity == dseries::DEGREE as i64),
        )
        .detail(format!("{} factors, degree {}", r.factors, r.degree))
        .detail(format!("a_D(v) at the all-ones point: {}", r.value_at_identity)),
    );
    verdicts.push(
        Verdict::new("sos/sign", Status::from_bool(r.value_at_sign == 36))
            .detail(format!("a_D(v) at the all-ones point with chi = -1: {}", r.value_at_sign)),
    );
    Ok(Outcome {
        digest: digest(&["sos", &dseries::expression()]),
        verdicts,
    })
}

fn case_digest(id: &str, perturbed: bool) -> Result<String, UsageError> {
    let spec = casebook::case(id)?;
    Ok(digest(&["case", spec.id, &spec.hypotheses, if perturbed { "perturbed" } else { "" }]))
}

pub fn verify_case(id: &str, perturbed: bool) -> Result<Outcome, UsageError> {
    let spec = casebook::case(id)?;
    let r = casebook::verify_case(&spec, perturbed)?;
    Ok(Outcome {
        digest: case_digest(id, perturbed)?,
        verdicts: r.verdicts,
    })
}

pub fn verify_all(exec: Exec) -> Result<Outcome, UsageError> {
    let r = casebook::run_all(exec)?;
    let ids: Vec<String> = r.cases.iter().map(|c| c.id.clone()).collect();
    let mut parts = vec!["all".to_string()];
    for id in &ids {
        parts.push(case_digest(id, false)?);
    }
    let mut verdicts = vec![Verdict::new(
        "casebook/count",
        Status::from_bool(r.cases.len() == 11),
    )
    .detail(format!("{} case reports: {}", r.cases.len(), ids.join(" ")))];
    for c in r.cases {
        verdicts.extend(c.verdicts);
    }
    verdicts.extend(r.bridge.verdicts);
    let refs: Vec<&str> = parts.iter().map(String::as_str).collect();
    Ok(Outcome {
        digest: digest(&refs),
        verdicts,
    })
}

pub fn verify_bridge() -> Outcome {
    Outcome {
        digest: digest(&["bridge"]),
        verdicts: casebook::verify_plethysm_bridge().verdicts,
    }
}

fn context(hyp: Option<&Path>) -> Result<(Context, String), UsageError> {
    match hyp {
        None => Ok((Context::bare(), String::new())),
        Some(path) => {
            let text = read(path)?;
            let h = Hypotheses::parse(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok((Context::new(h), text))
        }
    }
}

pub fn expand(src: &str, hyp: Option<&Path>, l: u32, cg: bool) -> Result<Outcome, UsageError> {
    let (ctx, hyp_text) = context(hyp)?;
    let x = expr::parse(src).map_err(|e| UsageError(e.to_string()))?;
    let nf = ctx.normal_form_with(&x, NormalOptions { cg });
    let mut verdicts = vec![Verdict::new("expand/normal-form", Status::Pass)
        .detail(format!("degree {}, {} distinct factors", nf.degree(), nf.len()))
        .details(ctx.show_rep(&nf).lines().map(str::to_string))];
    let space = SatakeSpace::new(&ctx);
    verdicts.push(match space.coeff_poly(&nf, l) {
        Ok(p) => Verdict::new("expand/coefficients", Status::Pass)
            .detail(format!("a(v^{l}) = {}", p.render(space.names())))
            .detail(format!("value at the all-ones point: {}", p.value_at_identity())),
        Err(e) => Verdict::new("expand/coefficients", Status::Unknown).detail(e.to_string()),
    });
    Ok(Outcome {
        digest: digest(&["expand", src, &hyp_text, &l.to_string(), if cg { "cg" } else { "pair" }]),
        verdicts,
    })
}

pub fn poles(src: &str, hyp: &Path, cg: bool) -> Result<Outcome, UsageError> {
    let (ctx, hyp_text) = context(Some(hyp))?;
    let x = expr::parse(src).map_err(|e| UsageError(e.to_string()))?;
    let nf = ctx.normal_form_with(&x, NormalOptions { cg });
    let verdicts = match entirety_check(&ctx, &nf) {
        Ok(r) => {
            let mut ledger = Verdict::new("poles/ledger", Status::Pass);
            for f in &r.factors {
                ledger = ledger.detail(format!(
                    "{:>3} x {}: {} {}",
                    f.multiplicity,
                    f.factor,
                    f.interval,
                    f.status.label()
                ));
            }
            ledger = ledger.detail(format!("total pole order: {}", r.total));
            vec![
                ledger,
                Verdict::new("poles/entire", Status::from_tri(r.entire))
                    .detail(format!("(s-1)^{} absorbs at most {} poles", r.absorbed, r.absorbed.max(0)))
                    .detail(format!("total pole order: {}", r.total)),
            ]
        }
        Err(e) => {
            let status = match e {
                PoleError::NonCuspidal(_) => Status::Fail,
                PoleError::Undeclared(_) | PoleError::Formal(_) => Status::Unknown,
            };
            vec![Verdict::new("poles/ledger", status).detail(e.to_string())]
        }
    };
    Ok(Outcome {
        digest: digest(&["poles", src, &hyp_text, if cg { "cg" } else { "pair" }]),
        verdicts,
    })
}

enum Loaded<T> {
    Ok(T, String),
    /// Data that parsed but failed a sanity gate.
    Rejected(Verdict),
}

fn load_form(role: &str, src: &str, xmax: u64, exec: Exec) -> Result<Loaded<NewformData>, UsageError> {
    let id = format!("ingest/{role}");
    let built = match src {
        "delta" => ingest::delta_eigenvalues(xmax, exec).map(|d| (d, "delta".to_string())),
        "x0_11" | "11a" => ingest::x0_11_eigenvalues(xmax, exec).map(|d| (d, "x0_11".to_string())),
        _ => {
            let path = Path::new(src.strip_prefix("file:").unwrap_or(src));
            let text = read(path)?;
            ingest::parse_eigenvalues(&text).map(|d| (d, text))
        }
    };
    match built {
        Ok((d, key)) => Ok(Loaded::Ok(d, key)),
        Err(IngestError::BoundViolation { p, ap, weight }) => Ok(Loaded::Rejected(
            Verdict::new(id, Status::Fail)
                .detail(format!("{src}: Deligne bound violated"))
                .detail(format!(
                    "reproducer: p = {p}, a_p = {ap} exceeds 2 p^(({weight}-1)/2) = {:.3}",
                    2.0 * (p as f64).powf((weight as f64 - 1.0) / 2.0)
                )),
        )),
        Err(e) => Err(UsageError(format!("{src}: {e}"))),
    }
}

fn show_value(v: &ScanValue) -> String {
    format!(
        "p = {}, l = {}: a_D = {:.6e} {:+.3e}i, closed form {:.6e}",
        v.p, v.l, v.re, v.im, v.oracle
    )
}

pub fn scan(form1: &str, form2: &str, chi: &str, xmax: u64, lmax: u32, exec: Exec) -> Result<Outcome, UsageError> {
    if xmax < 2 || lmax == 0 {
        return Err(UsageError("need --xmax >= 2 and --lmax >= 1".into()));
    }
    let chi_data = CharacterData::from_spec(chi).map_err(|e| UsageError(format!("{chi}: {e}")))?;
    let mut verdicts = Vec::new();
    let mut keys = vec!["scan".to_string(), chi.to_string(), xmax.to_string(), lmax.to_string()];
    let mut forms = Vec::new();
    for (role, src) in [("form1", form1), ("form2", form2)] {
        match load_form(role, src, xmax, exec)? {
            Loaded::Ok(d, key) => {
                verdicts.push(Verdict::new(format!("ingest/{role}"), Status::Pass).detail(format!("{src}: {d}")));
                keys.push(key);
                forms.push(d);
            }
            Loaded::Rejected(v) => verdicts.push(v),
        }
    }
    let refs: Vec<&str> = keys.iter().map(String::as_str).collect();
    let digest = digest(&refs);
    let [f1, f2] = &forms[..] else {
        return Ok(Outcome { digest, verdicts });
    };
    verdicts.push(
        Verdict::new("ingest/char", Status::Pass).detail(format!("{chi}: modulus {}", chi_data.modulus())),
    );
    let (points, skipped) = match ingest::build_points(f1, f2, &chi_data, xmax) {
        Ok(v) => v,
        Err(e) => {
            verdicts.push(Verdict::new("scan/points", Status::Fail).detail(format!("reproducer: {e}")));
            return Ok(Outcome { digest, verdicts });
        }
    };
    let series = AuxSeries::default();
    let r = dseries::scan_positivity(&series, &points, lmax, skipped, exec)
        .map_err(|e| UsageError(e.to_string()))?;
    let skipped: Vec<String> = r.skipped.iter().map(u64::to_string).collect();
    let negative: Vec<&ScanValue> = r.failures.iter().filter(|v| v.re < -rsverify::TOLERANCE).collect();
    let mut positivity = Verdict::new("scan/positivity", Status::from_bool(negative.is_empty()))
        .detail(format!("{} primes up to {}, l = 1..{}", r.points, xmax, r.max_l))
        .detail(format!(
            "skipped (ramified): {}",
            if skipped.is_empty() { "none".to_string() } else { skipped.join(" ") }
        ));
    if let Some(m) = &r.min {
        positivity = positivity.detail(format!("minimum: {}", show_value(m)));
    }
    for v in negative.iter().take(5) {
        positivity = positivity.detail(format!("reproducer: {}", show_value(v)));
    }
    verdicts.push(positivity);
    let imag: Vec<&ScanValue> = r.failures.iter().filter(|v| v.im.abs() > rsverify::TOLERANCE).collect();
    let mut imaginary = Verdict::new("scan/imaginary", Status::from_bool(imag.is_empty()))
        .detail(format!("max |Im a_D| = {:.3e}", r.max_abs_im));
    for v in imag.iter().take(5) {
        imaginary = imaginary.detail(format!("reproducer: {}", show_value(v)));
    }
    verdicts.push(imaginary);
    let gap: Vec<&ScanValue> = r
        .failures
        .iter()
        .filter(|v| (v.re - v.oracle).abs() > rsverify::TOLERANCE)
        .collect();
    let mut oracle = Verdict::new("scan/closed-form", Status::from_bool(gap.is_empty()))
        .detail(format!("max |a_D - |2x + xb + b|^2| = {:.3e}", r.max_oracle_gap));
    for v in gap.iter().take(5) {
        oracle = oracle.detail(format!("reproducer: {}", show_value(v)));
    }
    verdicts.push(oracle);
    Ok(Outcome { digest, verdicts })
}
