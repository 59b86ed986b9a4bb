//! Exhaustive invariant sweep over every numerical semigroup up to a genus.
//!
//! Each semigroup is analysed independently (in parallel when enabled); the
//! per-semigroup outcomes are merged in enumeration order and violations are
//! sorted canonically, so the report does not depend on scheduling.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::numsg::{enumerate_semigroups, NumericalSemigroup};
use crate::par::{self, Execution};
use crate::relideal::{blowup_tower, enumerate_normalized_ideals, RelativeIdeal};
use crate::ringlab::{
    greither_check, minimal_multiplicity_check, multiplicity_via_hilbert, report_from_ideals,
    sally_check, two_generator_check,
};

pub const CHECK_SEMIGROUP: &str = "semigroup_axioms";
pub const CHECK_AGREEMENT: &str = "stable_ring_agreement";
pub const CHECK_BASS_IDEALS: &str = "bass_ideals";
pub const CHECK_POWER: &str = "power_two_generated";
pub const CHECK_SALLY: &str = "sally";
pub const CHECK_GREITHER: &str = "greither";
pub const CHECK_MIN_MULT: &str = "minimal_multiplicity";
pub const CHECK_MULT_TRIPLE: &str = "multiplicity_triple";
pub const CHECK_STABILITY_ORACLES: &str = "stability_oracles";
pub const CHECK_TOWER: &str = "tower";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_genus: u32,
    /// Largest power probed by the two-generator check.
    pub power_n_max: usize,
    /// Largest power probed by the Sally check.
    pub sally_n_max: usize,
}

impl SweepConfig {
    pub fn new(max_genus: u32) -> Self {
        SweepConfig {
            max_genus,
            power_n_max: 8,
            sally_n_max: 4,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: usize,
    pub violations: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SallyTally {
    pub ideals: usize,
    pub hypothesis_true: usize,
    pub conclusion_true: usize,
    /// Hypothesis holds and conclusion fails.
    pub hard_violations: usize,
    /// Conclusion holds but no power up to `n_max` is two-generated; the
    /// monomial model predicts none of these.
    pub boundary_cases: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub semigroup: Vec<u32>,
    pub ideal: Option<Vec<i64>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub semigroups: usize,
    pub per_genus: Vec<usize>,
    pub ideals: usize,
    /// Semigroups all of whose monomial ideals are stable.
    pub stable_semigroups: usize,
    /// Semigroups of multiplicity at most 2.
    pub bass_semigroups: usize,
    /// Semigroups where the monomial stability verdict and the
    /// multiplicity verdict differ.
    pub verdict_divergences: usize,
    pub checks: BTreeMap<String, Tally>,
    pub sally: SallyTally,
    pub total_violations: usize,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.total_violations == 0
    }

    pub fn tally(&self, check: &str) -> Tally {
        self.checks.get(check).copied().unwrap_or_default()
    }
}

#[derive(Default)]
struct Outcome {
    genus: u32,
    ideals: usize,
    all_stable: bool,
    bass: bool,
    checks: BTreeMap<&'static str, Tally>,
    sally: SallyTally,
    violations: Vec<Violation>,
}

impl Outcome {
    fn record(&mut self, check: &'static str, ok: bool, s: &NumericalSemigroup, ideal: Option<&RelativeIdeal>, detail: impl FnOnce() -> String) {
        let t = self.checks.entry(check).or_default();
        t.checked += 1;
        if !ok {
            t.violations += 1;
            self.violations.push(Violation {
                check: check.to_string(),
                semigroup: s.generators().to_vec(),
                ideal: ideal.map(|i| i.generators().to_vec()),
                detail: detail(),
            });
        }
    }
}

fn semigroup_axioms_hold(s: &NumericalSemigroup) -> bool {
    let top = 2 * s.conductor() as i64;
    let closed = (0..=top)
        .filter(|&z| s.contains(z))
        .all(|z| (0..=top - z).filter(|&w| s.contains(w)).all(|w| s.contains(z + w)));
    let m = s.multiplicity();
    let apery_ok = s
        .apery_set(m)
        .map(|ap| *ap.iter().max().unwrap() as i64 - m as i64 == s.frobenius())
        .unwrap_or(false);
    closed && apery_ok && s.embedding_dimension() <= m
}

fn analyse(s: &NumericalSemigroup, cfg: &SweepConfig) -> Outcome {
    let arc = Arc::new(s.clone());
    let mut out = Outcome {
        genus: s.genus(),
        ..Outcome::default()
    };
    out.record(CHECK_SEMIGROUP, semigroup_axioms_hold(s), s, None, || {
        "closure, Apéry or edim <= m failed".into()
    });

    let ideals = enumerate_normalized_ideals(&arc).expect("genus within cap");
    out.ideals = ideals.len();

    let report = report_from_ideals(&arc, &ideals);
    out.all_stable = report.all_stable;
    out.bass = report.is_bass;
    out.record(CHECK_AGREEMENT, report.agreement, s, None, || {
        format!(
            "all_stable={} quadratic={} bass={}",
            report.all_stable, report.quadratic_over_normalization, report.is_bass
        )
    });
    if report.is_bass {
        let ok = report.all_stable && report.max_mu <= 2;
        out.record(CHECK_BASS_IDEALS, ok, s, None, || {
            format!("max_mu={} stable={}/{}", report.max_mu, report.stable_count, report.ideal_count)
        });
    }

    let two = two_generator_check(&arc, cfg.power_n_max);
    out.record(CHECK_POWER, two.agree, s, None, || format!("power mu {:?}", two.power_mu));

    let g = greither_check(&arc);
    out.record(CHECK_GREITHER, g.agree && g.quadratic_implied, s, None, || format!("{g:?}"));

    let mm = minimal_multiplicity_check(&arc);
    out.record(CHECK_MIN_MULT, mm.ok, s, None, || format!("{mm:?}"));

    let via_hilbert = multiplicity_via_hilbert(&arc);
    let m = s.multiplicity();
    let triple_ok = via_hilbert.as_ref().is_ok_and(|&h| h == m) && g.mu_normalization == m as usize;
    out.record(CHECK_MULT_TRIPLE, triple_ok, s, None, || {
        format!("m={m} hilbert={via_hilbert:?} mu_normalization={}", g.mu_normalization)
    });

    let tower = blowup_tower(s, s.genus() as usize + 1);
    let mut tower_ok = tower.reached_normalization && tower.stabilization_index <= s.genus() as usize;
    if m == 2 {
        let n = tower.stabilization_index;
        let seq_ok = tower.multiplicity_sequence[..n].iter().all(|&x| x == 2)
            && tower.multiplicity_sequence[n] == 1;
        // M_i = 2 + S_{i+1} as sets of integers.
        let steps_ok = (0..n).all(|i| {
            let max_ideal = RelativeIdeal::max_ideal(Arc::new(tower.tower[i].clone()));
            let next = Arc::new(tower.tower[i + 1].clone());
            RelativeIdeal::new(next, &[2]).expect("nonempty").same_set(&max_ideal)
        });
        tower_ok &= seq_ok && steps_ok && n == s.genus() as usize;
    }
    out.record(CHECK_TOWER, tower_ok, s, None, || {
        format!(
            "multiplicity sequence {:?}, index {}",
            tower.multiplicity_sequence, tower.stabilization_index
        )
    });

    let shift = s.conductor() as i64;
    for ideal in &ideals {
        let a = ideal.is_stable();
        let b = ideal.is_stable_via_endomorphisms();
        let c = ideal.is_stable_by_search();
        out.record(CHECK_STABILITY_ORACLES, a == b && b == c, s, Some(ideal), || {
            format!("sum={a} endomorphism={b} search={c}")
        });

        let integral = ideal.translate(shift);
        debug_assert!(integral.is_integral());
        let sc = sally_check(&integral, cfg.sally_n_max);
        out.sally.ideals += 1;
        out.sally.hypothesis_true += sc.hypothesis as usize;
        out.sally.conclusion_true += sc.conclusion as usize;
        if sc.conclusion && !sc.hypothesis {
            out.sally.boundary_cases += 1;
        }
        if !sc.ok {
            out.sally.hard_violations += 1;
        }
        out.record(CHECK_SALLY, sc.ok, s, Some(&integral), || format!("{sc:?}"));
    }
    out
}

/// Runs the sweep with the default execution mode.
pub fn run(cfg: SweepConfig) -> Result<SweepReport> {
    run_with(cfg, Execution::default())
}

pub fn run_with(cfg: SweepConfig, exec: Execution) -> Result<SweepReport> {
    let semigroups = enumerate_semigroups(cfg.max_genus)?;
    let outcomes = par::map(exec, &semigroups, |s| analyse(s, &cfg));
    Ok(merge(cfg, outcomes))
}

fn merge(cfg: SweepConfig, outcomes: Vec<Outcome>) -> SweepReport {
    let mut per_genus = vec![0; cfg.max_genus as usize + 1];
    let mut checks: BTreeMap<String, Tally> = BTreeMap::new();
    let mut sally = SallyTally::default();
    let mut violations = Vec::new();
    let (mut ideals, mut stable, mut bass, mut divergences) = (0, 0, 0, 0);
    let semigroups = outcomes.len();
    for o in outcomes {
        per_genus[o.genus as usize] += 1;
        ideals += o.ideals;
        stable += o.all_stable as usize;
        bass += o.bass as usize;
        divergences += (o.all_stable != o.bass) as usize;
        for (k, t) in o.checks {
            let e = checks.entry(k.to_string()).or_default();
            e.checked += t.checked;
            e.violations += t.violations;
        }
        sally.ideals += o.sally.ideals;
        sally.hypothesis_true += o.sally.hypothesis_true;
        sally.conclusion_true += o.sally.conclusion_true;
        sally.hard_violations += o.sally.hard_violations;
        sally.boundary_cases += o.sally.boundary_cases;
        violations.extend(o.violations);
    }
    violations.sort();
    SweepReport {
        config: cfg,
        semigroups,
        per_genus,
        ideals,
        stable_semigroups: stable,
        bass_semigroups: bass,
        verdict_divergences: divergences,
        checks,
        sally,
        total_violations: violations.len(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_zero() {
        let r = run_with(SweepConfig::new(0), Execution::Sequential).unwrap();
        assert_eq!(r.semigroups, 1);
        assert!(r.is_clean());
    }

    #[test]
    fn small_sweep_is_clean_and_order_independent() {
        let seq = run_with(SweepConfig::new(6), Execution::Sequential).unwrap();
        assert!(seq.is_clean(), "{:?}", seq.violations);
        assert_eq!(seq.per_genus, vec![1, 1, 2, 4, 7, 12, 23]);
        let par = run_with(SweepConfig::new(6), Execution::ParallelWith { jobs: 3 }).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(run(SweepConfig::new(99)).is_err());
    }
}
