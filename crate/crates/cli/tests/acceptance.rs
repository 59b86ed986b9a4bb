//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.
//!
//! Runs without the libtest harness so the lines are always shown.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use stablab_core::idealization::{stability_trials, Coeff, Fp, IdealizationRing, Rational, Stability};
use stablab_core::quadalg::{enumerate_algebras, samples, GaloisField, HandelmanClass};
use stablab_core::relideal::blowup_tower;
use stablab_core::sweep::{self, SweepConfig, SweepReport, CHECK_AGREEMENT, CHECK_MULT_TRIPLE, CHECK_POWER, CHECK_STABILITY_ORACLES, CHECK_TOWER};
use stablab_core::{Execution, NumericalSemigroup};

struct Gate {
    failures: usize,
}

impl Gate {
    fn report(&mut self, id: u32, ok: bool, detail: String) {
        println!("[{}] AC{id}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
    }
}

fn sweep_to(g: u32) -> (SweepReport, Duration) {
    let start = Instant::now();
    let r = sweep::run_with(SweepConfig::new(g), Execution::default()).expect("genus within cap");
    (r, start.elapsed())
}

fn tally_line(r: &SweepReport, check: &str) -> (bool, String) {
    let t = r.tally(check);
    (
        t.violations == 0 && t.checked > 0,
        format!("{check} checked {} violations {}", t.checked, t.violations),
    )
}

fn handelman(gate: &mut Gate) {
    let start = Instant::now();
    let mut classes: BTreeMap<String, usize> = BTreeMap::new();
    let mut valid = 0;
    let mut errors = Vec::new();
    let mut too_many_max_ideals = 0;
    for dim in 1..=3 {
        for alg in enumerate_algebras(GaloisField::F2, dim).expect("enumerable") {
            valid += 1;
            match alg.classify_handelman() {
                Ok(HandelmanClass::NotQuadratic) => {}
                Ok(c) => {
                    *classes.entry(c.to_string()).or_default() += 1;
                    if alg.maximal_ideal_count().expect("small") > 3 {
                        too_many_max_ideals += 1;
                    }
                }
                Err(e) => errors.push(e.to_string()),
            }
        }
    }
    let f2_cubed = samples::product_of_fields(GaloisField::F2, 3).classify_handelman();
    let f3_cubed = samples::product_of_fields(GaloisField::F3, 3).classify_handelman();
    let f4 = samples::f4_over_f2().classify_handelman();
    let samples_ok = f2_cubed == Ok(HandelmanClass::FxFxFOverF2)
        && f3_cubed == Ok(HandelmanClass::NotQuadratic)
        && f4 == Ok(HandelmanClass::QuadraticFieldExtension);
    let elapsed = start.elapsed();
    let ok = errors.is_empty()
        && too_many_max_ideals == 0
        && classes.len() == 5
        && samples_ok
        && elapsed < Duration::from_secs(60);
    gate.report(
        7,
        ok,
        format!(
            "{valid} valid F2 algebras (d<=3), quadratic classes {classes:?}, unclassifiable {}, \
             F2^3 {f2_cubed:?}, F3^3 {f3_cubed:?}, F4/F2 {f4:?}, {:.2}s",
            errors.len(),
            elapsed.as_secs_f64()
        ),
    );
}

fn idealization_rank<F: Coeff>(rank: usize) -> (bool, String) {
    let ring = IdealizationRing::new::<F>(rank, 16).expect("valid ring");
    let lengths: Vec<usize> = (2..=7).map(|n| ring.hilbert_length::<F>(n).expect("n <= 8")).collect();
    let diffs: Vec<usize> = lengths.windows(2).map(|w| w[1] - w[0]).collect();
    let slopes_ok = diffs.iter().all(|&d| d == 1 + rank);
    let sz = ring.square_zero_prime_check::<F>();
    let trials = stability_trials::<F>(ring, 100, 0x5EED + rank as u64, Execution::default());
    let stable = trials.iter().filter(|t| t.verdict == Stability::Stable).count();
    let inconclusive = trials.iter().filter(|t| t.verdict == Stability::Inconclusive).count();
    let not_stable = trials.len() - stable - inconclusive;
    let ok = slopes_ok && sz.p_squared_zero && sz.quotient_is_dvr && not_stable == 0 && inconclusive * 20 < trials.len();
    (
        ok,
        format!(
            "{} r={rank}: slopes {diffs:?}, P^2=0 {}, stable {stable}/100, inconclusive {inconclusive}",
            F::NAME,
            sz.p_squared_zero
        ),
    )
}

fn idealization(gate: &mut Gate) {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for rank in 1..=3 {
        for (pass, line) in [idealization_rank::<Fp<2>>(rank), idealization_rank::<Rational>(rank)] {
            ok &= pass;
            parts.push(line);
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(30);
    gate.report(8, ok, format!("{}; {:.2}s", parts.join("; "), elapsed.as_secs_f64()));
}

fn determinism(gate: &mut Gate) {
    let run = |jobs: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_stablab"));
        cmd.args(["sweep", "--max-genus", "10", "--seed", "1", "--no-timing", "--json"]);
        if let Some(j) = jobs {
            cmd.args(["--jobs", j]);
        }
        let out = cmd.output().expect("binary runs");
        (out.status.code(), out.stdout)
    };
    let base = run(None);
    let runs = [run(None), run(Some("1")), run(Some("4"))];
    let ok = base.0 == Some(0) && !base.1.is_empty() && runs.iter().all(|r| *r == base);
    gate.report(
        9,
        ok,
        format!("sweep --max-genus 10 JSON ({} bytes) identical across default, --jobs 1, --jobs 4: {ok}", base.1.len()),
    );
}

fn main() -> ExitCode {
    let mut gate = Gate { failures: 0 };

    let (r12, t12) = sweep_to(12);
    let (ok, line) = tally_line(&r12, CHECK_AGREEMENT);
    gate.report(
        1,
        ok && r12.semigroups == 1413 && t12 < Duration::from_secs(120),
        format!("genus <= 12, {} semigroups: {line}, {:.2}s", r12.semigroups, t12.as_secs_f64()),
    );

    let (ok, line) = tally_line(&r12, CHECK_POWER);
    gate.report(2, ok, format!("genus <= 12, n_max {}: {line}", r12.config.power_n_max));

    let (r8, _) = sweep_to(8);
    let s = r8.sally;
    gate.report(
        3,
        s.hard_violations == 0 && s.ideals > 0,
        format!(
            "genus <= 8: {} integral ideals, hypothesis {}, hard violations {}, boundary cases {}",
            s.ideals, s.hypothesis_true, s.hard_violations, s.boundary_cases
        ),
    );

    let (r10, _) = sweep_to(10);
    let (ok, line) = tally_line(&r10, CHECK_STABILITY_ORACLES);
    gate.report(4, ok, format!("genus <= 10: {line}"));

    let (ok, line) = tally_line(&r12, CHECK_MULT_TRIPLE);
    gate.report(5, ok, format!("genus <= 12: {line}"));

    let (ok, line) = tally_line(&r12, CHECK_TOWER);
    let s345 = NumericalSemigroup::from_generators(&[3, 4, 5]).expect("valid");
    let tower = blowup_tower(&s345, 8);
    let expected = vec![s345.clone(), NumericalSemigroup::naturals()];
    let exact = tower.tower == expected;
    gate.report(6, ok && exact, format!("genus <= 12: {line}; <3,4,5> tower exact: {exact}"));

    handelman(&mut gate);
    idealization(&mut gate);
    determinism(&mut gate);

    if gate.failures == 0 {
        println!("acceptance: all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", gate.failures);
        ExitCode::FAILURE
    }
}
