//! `stablab` command-line front end.
//!
//! Exit codes: 0 success, 1 a checked property was violated, 2 usage or
//! input error, 3 resource cap exceeded.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use stablab_core::idealization::{
    stability_trials, Coeff, Fp, IdealizationRing, Rational, Stability, TrialRecord,
};
use stablab_core::numsg::parse_int_list;
use stablab_core::quadalg::{AlgebraFile, StructureAlgebra};
use stablab_core::relideal::{blowup_tower, IdealRecord};
use stablab_core::ringlab::{stable_ring_report, two_generator_check};
use stablab_core::sweep::{self, SweepConfig};
use stablab_core::{Error, Execution, NumericalSemigroup, RelativeIdeal};

#[derive(Parser, Debug)]
#[command(name = "stablab", version, about = "Semigroup, algebra and idealization models for stable ideals")]
struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for sweeps; defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Omit the elapsed-time field.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerical semigroup analyses.
    #[command(subcommand)]
    Sg(SgCommand),
    /// Exhaustive invariant sweep over all semigroups up to a genus.
    Sweep {
        #[arg(long)]
        max_genus: u32,
    },
    /// Structure-constant algebras.
    #[command(subcommand)]
    Alg(AlgCommand),
    /// Nagata idealization checks.
    #[command(subcommand)]
    Idealization(IdealizationCommand),
}

#[derive(Subcommand, Debug)]
enum SgCommand {
    Info { generators: String },
    Ideal {
        generators: String,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        /// Include the stability verdicts.
        #[arg(long)]
        stable: bool,
    },
    Tower {
        generators: String,
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    Report { generators: String },
    TwoGen {
        generators: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Subcommand, Debug)]
enum AlgCommand {
    Classify { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum IdealizationCommand {
    Check(CheckArgs),
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// F2, F3, F5 or Q.
    #[arg(long, default_value = "F2")]
    field: String,
    #[arg(long, default_value_t = 1)]
    rank: usize,
    #[arg(long, default_value_t = 16)]
    prec: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
}

#[derive(Serialize)]
struct AnalysisReport {
    command: String,
    input: String,
    version: &'static str,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
    result: Value,
}

enum Failure {
    Input(Error),
    Cap(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::TooLarge(_) => Failure::Cap(e),
            other => Failure::Input(other),
        }
    }
}

struct Outcome {
    command: String,
    input: String,
    result: Value,
    text: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let exec = Execution::from_jobs(cli.jobs);
    let outcome = match dispatch(&cli, exec) {
        Ok(o) => o,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(Failure::Cap(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let report = AnalysisReport {
        command: outcome.command,
        input: outcome.input,
        version: env!("CARGO_PKG_VERSION"),
        seed: cli.seed,
        elapsed_ms: (!cli.no_timing).then(|| start.elapsed().as_millis()),
        result: outcome.result,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        print!("{}", outcome.text);
        if let Some(ms) = report.elapsed_ms {
            println!("elapsed_ms: {ms}");
        }
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn dispatch(cli: &Cli, exec: Execution) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Sg(cmd) => sg(cmd),
        Command::Sweep { max_genus } => {
            let report = sweep::run_with(SweepConfig::new(*max_genus), exec)?;
            let result = serde_json::to_value(&report).expect("serializable");
            Ok(Outcome {
                command: format!("sweep --max-genus {max_genus}"),
                input: max_genus.to_string(),
                text: render::sweep(&report),
                passed: report.is_clean(),
                result,
            })
        }
        Command::Alg(AlgCommand::Classify { file }) => alg_classify(file),
        Command::Idealization(IdealizationCommand::Check(args)) => idealization_check(args, cli.seed, exec),
    }
}

fn semigroup(text: &str) -> Result<Arc<NumericalSemigroup>, Failure> {
    Ok(Arc::new(NumericalSemigroup::parse(text)?))
}

fn sg(cmd: &SgCommand) -> Result<Outcome, Failure> {
    let (command, input, result, header, passed) = match cmd {
        SgCommand::Info { generators } => {
            let s = semigroup(generators)?;
            let inv = s.invariants();
            let header = format!(
                "{}: m={} edim={} F={} c={} genus={}\n",
                s, inv.multiplicity, inv.embedding_dimension, inv.frobenius, inv.conductor, inv.genus
            );
            let mut v = serde_json::to_value(inv).expect("serializable");
            v["generators"] = json!(s.generators());
            v["gaps"] = json!(s.gaps());
            ("sg info".to_string(), s.to_string(), v, header, true)
        }
        SgCommand::Ideal { generators, ideal, stable } => {
            let s = semigroup(generators)?;
            let gens = parse_int_list(ideal)?;
            let i = RelativeIdeal::new(s.clone(), &gens)?;
            let mut v = json!({
                "ideal": IdealRecord::from(&i),
                "mu": i.minimal_generator_count(),
                "min": i.min(),
                "conductor": i.conductor(),
                "end_semigroup": i.end_semigroup(),
            });
            if *stable {
                v["stable"] = json!(i.is_stable());
                v["stable_via_endomorphisms"] = json!(i.is_stable_via_endomorphisms());
                v["witnesses"] = json!(i.stable_witnesses().collect::<Vec<_>>());
            }
            let cmd = if *stable { "sg ideal --stable" } else { "sg ideal" };
            (cmd.to_string(), format!("{s} {i}"), v, String::new(), true)
        }
        SgCommand::Tower { generators, cap } => {
            let s = semigroup(generators)?;
            let t = blowup_tower(&s, *cap);
            if !t.reached_normalization {
                return Err(Failure::Cap(Error::CapExceeded {
                    requested: (*cap + 1) as u32,
                    cap: *cap as u32,
                }));
            }
            let v = serde_json::to_value(&t).expect("serializable");
            (format!("sg tower --cap {cap}"), s.to_string(), v, String::new(), true)
        }
        SgCommand::Report { generators } => {
            let s = semigroup(generators)?;
            let r = stable_ring_report(&s)?;
            let v = serde_json::to_value(&r).expect("serializable");
            ("sg report".to_string(), s.to_string(), v, String::new(), r.agreement)
        }
        SgCommand::TwoGen { generators, n_max } => {
            let s = semigroup(generators)?;
            if *n_max < 2 {
                return Err(Failure::Input(Error::Parse("--n-max must be at least 2".into())));
            }
            let r = two_generator_check(&s, *n_max);
            (
                format!("sg two-gen --n-max {n_max}"),
                s.to_string(),
                serde_json::to_value(&r).expect("serializable"),
                String::new(),
                r.agree,
            )
        }
    };
    let text = header + &render::record(&result);
    Ok(Outcome {
        command,
        input,
        result,
        text,
        passed,
    })
}

fn alg_classify(path: &PathBuf) -> Result<Outcome, Failure> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(Error::Parse(format!("{}: {e}", path.display()))))?;
    let file: AlgebraFile =
        serde_json::from_str(&raw).map_err(|e| Failure::Input(Error::Parse(e.to_string())))?;
    let alg = StructureAlgebra::from_file(&file)?;
    let violation = alg.quadratic_violation()?;
    let class = alg.classify_handelman()?;
    let result = json!({
        "field": file.field,
        "dim": alg.dim(),
        "quadratic": violation.is_none(),
        "class": class,
        "maximal_ideals": alg.maximal_ideal_count()?,
        "violating_pair": violation,
    });
    Ok(Outcome {
        command: "alg classify".into(),
        input: path.display().to_string(),
        text: render::record(&result),
        result,
        passed: true,
    })
}

#[derive(Serialize)]
struct HilbertProbe {
    n: usize,
    length: Option<usize>,
    skipped: Option<String>,
}

fn idealization_check(args: &CheckArgs, seed: u64, exec: Execution) -> Result<Outcome, Failure> {
    match args.field.as_str() {
        "F2" => run_check::<Fp<2>>(args, seed, exec),
        "F3" => run_check::<Fp<3>>(args, seed, exec),
        "F5" => run_check::<Fp<5>>(args, seed, exec),
        "Q" => run_check::<Rational>(args, seed, exec),
        other => Err(Failure::Input(Error::UnsupportedField(other.to_string()))),
    }
}

fn run_check<F: Coeff>(args: &CheckArgs, seed: u64, exec: Execution) -> Result<Outcome, Failure> {
    let ring = IdealizationRing::new::<F>(args.rank, args.prec)?;
    let sz = ring.square_zero_prime_check::<F>();

    let probes: Vec<HilbertProbe> = (1..=7)
        .map(|n| match ring.hilbert_length::<F>(n) {
            Ok(len) => HilbertProbe { n, length: Some(len), skipped: None },
            Err(e) => HilbertProbe { n, length: None, skipped: Some(e.to_string()) },
        })
        .collect();
    let expected_slope = 1 + args.rank;
    let slopes: Vec<Value> = (2..=6)
        .filter_map(|n| {
            let a = probes[n - 1].length?;
            let b = probes[n].length?;
            Some(json!({"n": n, "difference": b - a, "ok": b - a == expected_slope}))
        })
        .collect();
    let slopes_ok = slopes.iter().all(|s| s["ok"] == json!(true));

    let trials: Vec<TrialRecord> = stability_trials::<F>(ring, args.trials, seed, exec);
    let count = |v: Stability| trials.iter().filter(|t| t.verdict == v).count();
    let (stable, not_stable, inconclusive) =
        (count(Stability::Stable), count(Stability::NotStable), count(Stability::Inconclusive));
    let inconclusive_rate = if trials.is_empty() { 0.0 } else { inconclusive as f64 / trials.len() as f64 };
    let passed = sz.p_squared_zero && sz.quotient_is_dvr && slopes_ok && not_stable == 0 && inconclusive_rate < 0.05;

    let result = json!({
        "field": F::NAME,
        "rank": args.rank,
        "precision": args.prec,
        "square_zero_prime": sz,
        "expected_slope": expected_slope,
        "hilbert": probes,
        "slopes": slopes,
        "trials": args.trials,
        "stable": stable,
        "not_stable": not_stable,
        "inconclusive": inconclusive,
        "inconclusive_rate": inconclusive_rate,
        "margin_rule": "stable is certified when xI contains t^k R for some k < N; margin = N - k",
        "per_trial": trials,
        "passed": passed,
    });
    Ok(Outcome {
        command: format!(
            "idealization check --field {} --rank {} --prec {} --trials {}",
            args.field, args.rank, args.prec, args.trials
        ),
        input: format!("V*V^{} over {} mod t^{}", args.rank, F::NAME, args.prec),
        text: render::idealization(&result),
        result,
        passed,
    })
}
