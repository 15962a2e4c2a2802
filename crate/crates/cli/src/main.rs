use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rsverify::report::Report;
use rsverify::Exec;

mod commands;

use commands::{Outcome, UsageError};

/// Exact and numeric checks of Rankin-Selberg coefficient identities.
#[derive(Parser, Debug)]
#[command(name = "rsverify", version)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Run every loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    /// Print wall-clock time in the text report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one of the verifiers.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// Normal form and coefficient polynomial of a representation expression.
    Expand {
        expr: String,
        /// Hypotheses file (`pi <type>`, `pi' <type>`, `twist-equivalent`, ...).
        #[arg(long)]
        hyp: Option<PathBuf>,
        /// Power `l` of the coefficient `a(v^l)`.
        #[arg(long, default_value_t = 1)]
        l: u32,
        /// Keep products of two symmetric powers of one base unexpanded.
        #[arg(long)]
        pair_view: bool,
    },
    /// Positivity scan of the auxiliary series over real eigenvalue data.
    Scan {
        /// `delta`, `x0_11`, or an eigenvalue file (`file:PATH` or a path).
        #[arg(long)]
        form1: String,
        #[arg(long)]
        form2: String,
        /// `trivial`, `kron:D` or `file:PATH`.
        #[arg(long = "char", default_value = "trivial")]
        chi: String,
        #[arg(long, default_value_t = 1000)]
        xmax: u64,
        #[arg(long, default_value_t = 4)]
        lmax: u32,
    },
    /// Pole ledger at `s = 1` of a representation expression.
    Poles {
        expr: String,
        #[arg(long)]
        hyp: PathBuf,
        #[arg(long)]
        pair_view: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Target {
    /// The sum-of-squares identity for the auxiliary series.
    Sos,
    /// One case of the casebook.
    Case {
        id: String,
        /// Add one to a single claimed multiplicity.
        #[arg(long)]
        perturb: bool,
    },
    /// Every case plus the plethysm bridge.
    All,
    /// The plethysm bridge alone.
    Bridge,
}

fn configure_threads() -> Result<(), UsageError> {
    let Ok(v) = std::env::var("LCALC_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| UsageError(format!("LCALC_THREADS={v:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| UsageError(e.to_string()))
}

fn dispatch(cli: &Cli, exec: Exec) -> Result<(String, Outcome), UsageError> {
    let out = match &cli.command {
        Command::Verify { target } => match target {
            Target::Sos => ("verify sos".into(), commands::verify_sos()?),
            Target::Case { id, perturb } => {
                let name = if *perturb {
                    format!("verify case {id} --perturb")
                } else {
                    format!("verify case {id}")
                };
                (name, commands::verify_case(id, *perturb)?)
            }
            Target::All => ("verify all".into(), commands::verify_all(exec)?),
            Target::Bridge => ("verify bridge".into(), commands::verify_bridge()),
        },
        Command::Expand { expr, hyp, l, pair_view } => (
            format!("expand {expr:?}"),
            commands::expand(expr, hyp.as_deref(), *l, !*pair_view)?,
        ),
        Command::Scan { form1, form2, chi, xmax, lmax } => (
            format!("scan --form1 {form1} --form2 {form2} --char {chi} --xmax {xmax} --lmax {lmax}"),
            commands::scan(form1, form2, chi, *xmax, *lmax, exec)?,
        ),
        Command::Poles { expr, hyp, pair_view } => (
            format!("poles {expr:?}"),
            commands::poles(expr, hyp, !*pair_view)?,
        ),
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let start = Instant::now();
    let (command, inputs) = match dispatch(&cli, exec) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = Report {
        command,
        inputs_digest: inputs.digest,
        verdicts: inputs.verdicts,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    if cli.json {
        let mut shown = report.clone();
        if !cli.timing {
            shown.timing_ms = 0;
        }
        println!("{}", serde_json::to_string_pretty(&shown).expect("report serializes"));
    } else {
        print!("{}", report.render(cli.timing));
    }
    if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
