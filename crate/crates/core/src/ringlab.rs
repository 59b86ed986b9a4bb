//! Ring-level predicates on the monomial model: Hilbert functions,
//! multiplicity, the quadratic-extension test and the stable/Bass/two-generator
//! cross-checks.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numsg::{NumericalSemigroup, DEFAULT_GENUS_CAP};
use crate::relideal::{enumerate_normalized_ideals_capped, RelativeIdeal};

/// `H(n) = |S \ nM|`, the length of `R/M^n`; `H(0) = 0`.
pub fn hilbert_function(s: &Arc<NumericalSemigroup>, n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    let power = RelativeIdeal::max_ideal(s.clone()).nfold(n);
    hilbert_count(s, &power)
}

fn hilbert_count(s: &NumericalSemigroup, power: &RelativeIdeal) -> u64 {
    (0..power.conductor())
        .filter(|&z| s.contains(z) && !power.contains(z))
        .count() as u64
}

/// Multiplicity read off as the eventual slope of the Hilbert function.
///
/// `H` is linear once `n·m >= c`, so the probe window `[1, 2c + 4]` always
/// suffices; the last two differences must agree.
pub fn multiplicity_via_hilbert(s: &Arc<NumericalSemigroup>) -> Result<u32> {
    let top = 2 * s.conductor() as usize + 4;
    let m = RelativeIdeal::max_ideal(s.clone());
    let mut power = m.clone();
    let mut values = Vec::with_capacity(top + 2);
    values.push(hilbert_count(s, &power));
    for _ in 1..=top {
        power = power.sum(&m)?;
        values.push(hilbert_count(s, &power));
    }
    let diffs: Vec<u64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    match diffs.as_slice() {
        [.., a, b] if a == b => Ok(*b as u32),
        _ => Err(Error::NotStabilized),
    }
}

/// Whether `S ⊆ T` is quadratic: `x + y ∈ S ∪ (x + S) ∪ (y + S)` for all
/// `x, y ∈ T`.
///
/// Only `x, y < c_S` need checking: if `x >= c_S` then `x ∈ S` and
/// `x + y ∈ y + S`.
pub fn is_monomial_quadratic(s: &NumericalSemigroup, t: &NumericalSemigroup) -> Result<bool> {
    if (0..=t.conductor() as i64).any(|z| s.contains(z) && !t.contains(z)) {
        return Err(Error::NotASubsemigroup);
    }
    let c = s.conductor() as i64;
    let below: Vec<i64> = (0..c).filter(|&z| t.contains(z)).collect();
    let ok = below.iter().all(|&x| {
        below.iter().all(|&y| {
            let z = x + y;
            s.contains(z) || s.contains(z - x) || s.contains(z - y)
        })
    });
    Ok(ok)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableRingReport {
    pub semigroup: NumericalSemigroup,
    pub ideal_count: usize,
    pub stable_count: usize,
    pub max_mu: usize,
    pub all_stable: bool,
    #[serde(rename = "quadratic")]
    pub quadratic_over_normalization: bool,
    #[serde(rename = "bass")]
    pub is_bass: bool,
    pub agreement: bool,
}

/// Bass verdict for a semigroup ring: multiplicity at most 2.
pub fn is_bass(s: &NumericalSemigroup) -> bool {
    s.multiplicity() <= 2
}

pub fn stable_ring_report(s: &Arc<NumericalSemigroup>) -> Result<StableRingReport> {
    stable_ring_report_capped(s, DEFAULT_GENUS_CAP)
}

pub fn stable_ring_report_capped(s: &Arc<NumericalSemigroup>, cap: u32) -> Result<StableRingReport> {
    let ideals = enumerate_normalized_ideals_capped(s, cap)?;
    Ok(report_from_ideals(s, &ideals))
}

pub(crate) fn report_from_ideals(s: &Arc<NumericalSemigroup>, ideals: &[RelativeIdeal]) -> StableRingReport {
    let stable_count = ideals.iter().filter(|i| i.is_stable()).count();
    let max_mu = ideals
        .iter()
        .map(RelativeIdeal::minimal_generator_count)
        .max()
        .unwrap_or(0);
    let all_stable = stable_count == ideals.len();
    let quadratic = is_monomial_quadratic(s, &NumericalSemigroup::naturals()).expect("S ⊆ ℕ");
    let bass = is_bass(s);
    StableRingReport {
        semigroup: (**s).clone(),
        ideal_count: ideals.len(),
        stable_count,
        max_mu,
        all_stable,
        quadratic_over_normalization: quadratic,
        is_bass: bass,
        agreement: all_stable == quadratic && quadratic == bass,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGeneratorCheck {
    /// `μ(M^n)` for `n = 2..=n_max`.
    pub power_mu: Vec<usize>,
    pub power_two_generated: bool,
    pub mult_le_2: bool,
    pub agree: bool,
}

/// Some power `M^n` (`2 <= n <= n_max`) is two-generated iff the
/// multiplicity is at most 2.
pub fn two_generator_check(s: &Arc<NumericalSemigroup>, n_max: usize) -> TwoGeneratorCheck {
    let m = RelativeIdeal::max_ideal(s.clone());
    let mut power = m.clone();
    let mut power_mu = Vec::new();
    for _ in 2..=n_max {
        power = power.sum(&m).expect("same ambient");
        power_mu.push(power.minimal_generator_count());
    }
    let power_two_generated = power_mu.iter().any(|&mu| mu <= 2);
    let mult_le_2 = s.multiplicity() <= 2;
    TwoGeneratorCheck {
        power_mu,
        power_two_generated,
        mult_le_2,
        agree: power_two_generated == mult_le_2,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SallyCheck {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub ok: bool,
}

/// `I^n` two-generated for some `2 <= n <= n_max` implies `I` two-generated
/// and stable.
pub fn sally_check(ideal: &RelativeIdeal, n_max: usize) -> SallyCheck {
    let mut power = ideal.clone();
    let mut hypothesis = false;
    for _ in 2..=n_max {
        power = power.sum(ideal).expect("same ambient");
        if power.minimal_generator_count() <= 2 {
            hypothesis = true;
            break;
        }
    }
    let conclusion = ideal.minimal_generator_count() <= 2 && ideal.is_stable();
    SallyCheck {
        hypothesis,
        conclusion,
        ok: !hypothesis || conclusion,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreitherCheck {
    pub mu_normalization: usize,
    pub bass: bool,
    pub agree: bool,
    /// Two-generated normalization forces a quadratic extension.
    pub quadratic_implied: bool,
}

pub fn greither_check(s: &Arc<NumericalSemigroup>) -> GreitherCheck {
    let mu = RelativeIdeal::normalization(s.clone()).minimal_generator_count();
    let bass = is_bass(s);
    let quadratic = is_monomial_quadratic(s, &NumericalSemigroup::naturals()).expect("S ⊆ ℕ");
    GreitherCheck {
        mu_normalization: mu,
        bass,
        agree: (mu <= 2) == bass,
        quadratic_implied: mu > 2 || quadratic,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalMultiplicityCheck {
    pub m_stable: bool,
    pub edim_eq_mult: bool,
    pub ok: bool,
}

/// A stable maximal ideal forces embedding dimension = multiplicity.
pub fn minimal_multiplicity_check(s: &Arc<NumericalSemigroup>) -> MinimalMultiplicityCheck {
    let m_stable = RelativeIdeal::max_ideal(s.clone()).is_stable();
    let edim_eq_mult = s.embedding_dimension() == s.multiplicity();
    MinimalMultiplicityCheck {
        m_stable,
        edim_eq_mult,
        ok: !m_stable || edim_eq_mult,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u32]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(g).unwrap())
    }

    fn naturals() -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::naturals())
    }

    #[test]
    fn hilbert_examples() {
        let n = naturals();
        for k in 0..8 {
            assert_eq!(hilbert_function(&n, k), k as u64);
        }
        let s = sg(&[2, 3]);
        assert_eq!(
            (1..=3).map(|k| hilbert_function(&s, k)).collect::<Vec<_>>(),
            vec![1, 3, 5]
        );
        let s = sg(&[3, 4, 5]);
        assert_eq!(hilbert_function(&s, 1), 1);
        assert_eq!(hilbert_function(&s, 2), 4);
        assert_eq!(hilbert_function(&s, 0), 0);
    }

    #[test]
    fn multiplicity_from_hilbert() {
        assert_eq!(multiplicity_via_hilbert(&naturals()).unwrap(), 1);
        assert_eq!(multiplicity_via_hilbert(&sg(&[2, 3])).unwrap(), 2);
        assert_eq!(multiplicity_via_hilbert(&sg(&[3, 4, 5])).unwrap(), 3);
        assert_eq!(multiplicity_via_hilbert(&sg(&[5, 7, 11])).unwrap(), 5);
    }

    #[test]
    fn quadratic_examples() {
        let n = NumericalSemigroup::naturals();
        assert!(is_monomial_quadratic(&sg(&[2, 5]), &n).unwrap());
        assert!(!is_monomial_quadratic(&sg(&[3, 4, 5]), &n).unwrap());
        let s = sg(&[3, 7]);
        assert!(is_monomial_quadratic(&s, &s).unwrap());
        assert_eq!(
            is_monomial_quadratic(&sg(&[2, 3]), &sg(&[3, 4])),
            Err(Error::NotASubsemigroup)
        );
    }

    #[test]
    fn report_examples() {
        let r = stable_ring_report(&sg(&[2, 5])).unwrap();
        assert!(r.all_stable && r.quadratic_over_normalization && r.is_bass && r.agreement);
        assert_eq!(r.max_mu, 2);

        let r = stable_ring_report(&sg(&[3, 4, 5])).unwrap();
        assert!(!r.all_stable && !r.quadratic_over_normalization && !r.is_bass && r.agreement);
        let bad = RelativeIdeal::new(sg(&[3, 4, 5]), &[0, 1]).unwrap();
        assert!(!bad.is_stable());

        let r = stable_ring_report(&naturals()).unwrap();
        assert!(r.all_stable && r.quadratic_over_normalization && r.is_bass && r.agreement);
        assert_eq!(r.ideal_count, 1);
    }

    #[test]
    fn report_json_field_names() {
        let r = stable_ring_report(&sg(&[3, 4, 5])).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in ["all_stable", "quadratic", "bass", "max_mu", "agreement"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn two_generator_examples() {
        let r = two_generator_check(&sg(&[2, 7]), 8);
        assert_eq!(r.power_mu[0], 2);
        assert!(r.power_two_generated && r.agree);
        let m = RelativeIdeal::max_ideal(sg(&[2, 7]));
        assert_eq!(m.nfold(2).generators(), &[4, 9]);

        let r = two_generator_check(&sg(&[3, 4, 5]), 8);
        assert!(r.power_mu.iter().all(|&mu| mu == 3));
        assert!(!r.power_two_generated && r.agree);

        let r = two_generator_check(&naturals(), 8);
        assert!(r.power_mu.iter().all(|&mu| mu == 1));
        assert!(r.agree);
    }

    #[test]
    fn sally_examples() {
        let s = sg(&[2, 5]);
        let m = RelativeIdeal::max_ideal(s.clone());
        let r = sally_check(&m, 3);
        assert!(r.hypothesis && r.conclusion && r.ok);

        let p = RelativeIdeal::new(s.clone(), &[4]).unwrap();
        let r = sally_check(&p, 2);
        assert!(r.hypothesis && r.conclusion);

        let i = RelativeIdeal::new(s.clone(), &[2, 5]).unwrap();
        assert_eq!(i.nfold(2).generators(), &[4, 7]);
        assert!(sally_check(&i, 2).ok);

        // ℕ over ⟨3,4,5⟩ needs three generators, so its square is not
        // two-generated and the hypothesis never fires.
        let s = sg(&[3, 4, 5]);
        let i = RelativeIdeal::new(s, &[3, 4]).unwrap();
        let r = sally_check(&i, 6);
        assert!(!r.hypothesis && !r.conclusion && r.ok);
    }

    #[test]
    fn greither_examples() {
        let r = greither_check(&sg(&[2, 9]));
        assert_eq!((r.mu_normalization, r.bass, r.agree), (2, true, true));
        assert!(r.quadratic_implied);
        let r = greither_check(&sg(&[3, 4, 5]));
        assert_eq!((r.mu_normalization, r.bass, r.agree), (3, false, true));
        let r = greither_check(&naturals());
        assert_eq!((r.mu_normalization, r.agree), (1, true));
    }

    #[test]
    fn minimal_multiplicity_examples() {
        let r = minimal_multiplicity_check(&sg(&[3, 4, 5]));
        assert!(r.m_stable && r.edim_eq_mult && r.ok);
        let r = minimal_multiplicity_check(&sg(&[3, 4]));
        assert!(!r.m_stable && r.ok);
        let r = minimal_multiplicity_check(&naturals());
        assert!(r.m_stable && r.edim_eq_mult && r.ok);
    }
}
