//! Monomial fractional ideals of a numerical semigroup ring.
//!
//! A relative ideal `I` of `S` is a subset of the integers with `I + S ⊆ I`
//! that has a translate inside `S`. It is stored through its unique minimal
//! generating set together with a membership window `[min, conductor)`;
//! every integer at or above the ideal's conductor is a member.
//!
//! Stability is decided with the single candidate `x = min(I)`: if
//! `I + I = x + I` then comparing minima gives `2·min(I) = x + min(I)`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numsg::{NumericalSemigroup, DEFAULT_GENUS_CAP};

#[derive(Clone, Debug)]
pub struct RelativeIdeal {
    ambient: Arc<NumericalSemigroup>,
    generators: Vec<i64>,
    min: i64,
    conductor: i64,
    /// `members[z - min]` for `min <= z < conductor`.
    members: Vec<bool>,
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.ambient.generators() == other.ambient.generators()
    }
}

impl Eq for RelativeIdeal {}

impl RelativeIdeal {
    /// The ideal `⋃ (g + S)` over `gens`, reduced to minimal generators.
    pub fn new(ambient: Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        let min = *gens.iter().min().ok_or(Error::EmptyInput)?;
        let c = ambient.conductor() as i64;
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let window: Vec<bool> = (min..min + c)
            .map(|z| sorted.iter().take_while(|&&g| g <= z).any(|&g| ambient.contains(z - g)))
            .collect();
        Ok(Self::from_window(ambient, min, window))
    }

    /// Builds the ideal whose members in `[min, min + window.len())` are given
    /// by `window` and which contains everything above. `window[0]` must be true.
    fn from_window(ambient: Arc<NumericalSemigroup>, min: i64, mut window: Vec<bool>) -> Self {
        while window.last() == Some(&true) {
            window.pop();
        }
        let conductor = min + window.len() as i64;
        let mut ideal = RelativeIdeal {
            ambient,
            generators: Vec::new(),
            min,
            conductor,
            members: window,
        };
        let m = ideal.ambient.multiplicity() as i64;
        let gens: Vec<i64> = (min..conductor + m)
            .filter(|&z| {
                ideal.contains(z)
                    && !ideal
                        .ambient
                        .generators()
                        .iter()
                        .any(|&a| ideal.contains(z - a as i64))
            })
            .collect();
        ideal.generators = gens;
        ideal
    }

    /// `S` viewed as an ideal of itself.
    pub fn unit(ambient: Arc<NumericalSemigroup>) -> Self {
        Self::new(ambient, &[0]).expect("nonempty")
    }

    /// The maximal ideal `S \ {0}`.
    pub fn max_ideal(ambient: Arc<NumericalSemigroup>) -> Self {
        let gens: Vec<i64> = ambient.generators().iter().map(|&g| g as i64).collect();
        Self::new(ambient, &gens).expect("nonempty")
    }

    /// The normalization `ℕ` as an `S`-module.
    pub fn normalization(ambient: Arc<NumericalSemigroup>) -> Self {
        let c = ambient.conductor() as i64;
        let gens: Vec<i64> = (0..=c).collect();
        Self::new(ambient, &gens).expect("nonempty")
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    /// Least integer `k` with `[k, ∞) ⊆ I`.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn contains(&self, z: i64) -> bool {
        let min = self.min();
        if z >= self.conductor {
            true
        } else if z < min {
            false
        } else {
            self.members[(z - min) as usize]
        }
    }

    /// Minimal number of generators; by graded Nakayama this is also the
    /// ring-theoretic count for the monomial ideal.
    pub fn minimal_generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    /// `I ⊆ S`.
    pub fn is_integral(&self) -> bool {
        self.generators.iter().all(|&g| self.ambient.contains(g))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient)
            || self.ambient.generators() == other.ambient.generators()
        {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// The monomial product `IJ`: the ideal generated by all pairwise sums of
    /// generators.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let gens: Vec<i64> = self
            .generators
            .iter()
            .flat_map(|&a| other.generators.iter().map(move |&b| a + b))
            .collect();
        Self::new(self.ambient.clone(), &gens)
    }

    pub fn translate(&self, t: i64) -> Self {
        RelativeIdeal {
            ambient: self.ambient.clone(),
            generators: self.generators.iter().map(|g| g + t).collect(),
            min: self.min + t,
            conductor: self.conductor + t,
            members: self.members.clone(),
        }
    }

    /// The `n`-fold sum `I + ... + I`, i.e. the power `I^n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn nfold(&self, n: usize) -> Self {
        assert!(n >= 1, "nfold needs n >= 1");
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.sum(self).expect("same ambient");
        }
        acc
    }

    /// The endomorphism semigroup `E(I) = {z : z + I ⊆ I}`.
    pub fn end_semigroup(&self) -> NumericalSemigroup {
        let span = (self.conductor - self.min()).max(0);
        let window: Vec<bool> = (0..span)
            .map(|z| self.generators.iter().all(|&g| self.contains(g + z)))
            .collect();
        NumericalSemigroup::from_closed_window(&window)
    }

    /// `I² = min(I) + I`.
    pub fn is_stable(&self) -> bool {
        self.sum(self).expect("same ambient") == self.translate(self.min())
    }

    /// Stability read through the endomorphism semigroup: `I = min(I) + E(I)`
    /// as sets of integers.
    pub fn is_stable_via_endomorphisms(&self) -> bool {
        let e = self.end_semigroup();
        let min = self.min();
        let top = self.conductor.max(min + e.conductor() as i64);
        (min..=top).all(|z| self.contains(z) == e.contains(z - min))
    }

    /// Stability by trying every `x ∈ I` below the conductor as a witness for
    /// `I + I = x + I`.
    pub fn is_stable_by_search(&self) -> bool {
        self.stable_witnesses().next().is_some()
    }

    /// All `x ∈ I` with `x <= conductor` and `I + I = x + I`.
    pub fn stable_witnesses(&self) -> impl Iterator<Item = i64> + '_ {
        let square = self.sum(self).expect("same ambient");
        (self.min()..=self.conductor)
            .filter(|&x| self.contains(x))
            .filter(move |&x| self.translate(x) == square)
    }

    /// Same set of integers, regardless of ambient semigroup.
    pub fn same_set(&self, other: &Self) -> bool {
        self.min() == other.min() && self.conductor == other.conductor && self.members == other.members
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}+{}", parts.join(","), self.ambient)
    }
}

/// Serialized form: minimal generators plus ambient generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub generators: Vec<i64>,
    pub ambient: Vec<u32>,
}

impl From<&RelativeIdeal> for IdealRecord {
    fn from(ideal: &RelativeIdeal) -> Self {
        IdealRecord {
            generators: ideal.generators.clone(),
            ambient: ideal.ambient.generators().to_vec(),
        }
    }
}

impl TryFrom<IdealRecord> for RelativeIdeal {
    type Error = Error;

    fn try_from(rec: IdealRecord) -> Result<Self> {
        let s = NumericalSemigroup::from_generators(&rec.ambient)?;
        RelativeIdeal::new(Arc::new(s), &rec.generators)
    }
}

/// Every relative ideal `I` with `min(I) = 0` and `I ⊆ ℕ`, i.e. `S ∪ T` for
/// subsets `T` of the gaps with `(S ∪ T) + S ⊆ S ∪ T`.
pub fn enumerate_normalized_ideals(s: &Arc<NumericalSemigroup>) -> Result<Vec<RelativeIdeal>> {
    enumerate_normalized_ideals_capped(s, DEFAULT_GENUS_CAP)
}

pub fn enumerate_normalized_ideals_capped(
    s: &Arc<NumericalSemigroup>,
    cap: u32,
) -> Result<Vec<RelativeIdeal>> {
    if s.genus() > cap {
        return Err(Error::CapExceeded {
            requested: s.genus(),
            cap,
        });
    }
    let mut gaps = s.gaps();
    gaps.reverse();
    let c = s.conductor() as usize;
    let mut chosen = vec![false; c + 1];
    let mut out = Vec::new();
    // Gaps are decided from the largest down; including x only needs the
    // already-decided larger values x + a.
    fn walk(
        s: &Arc<NumericalSemigroup>,
        gaps: &[u32],
        idx: usize,
        chosen: &mut Vec<bool>,
        out: &mut Vec<RelativeIdeal>,
    ) {
        if idx == gaps.len() {
            let window: Vec<bool> = (0..chosen.len())
                .map(|z| chosen[z] || s.contains(z as i64))
                .collect();
            out.push(RelativeIdeal::from_window(s.clone(), 0, window));
            return;
        }
        let x = gaps[idx];
        walk(s, gaps, idx + 1, chosen, out);
        let closed = s.generators().iter().all(|&a| {
            let y = (x + a) as i64;
            s.contains(y) || chosen.get(y as usize).copied().unwrap_or(true)
        });
        if closed {
            chosen[x as usize] = true;
            walk(s, gaps, idx + 1, chosen, out);
            chosen[x as usize] = false;
        }
    }
    walk(s, &gaps, 0, &mut chosen, &mut out);
    Ok(out)
}

/// The blow-up sequence `S₀ ⊆ S₁ ⊆ …` with `S_{i+1} = E(M_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub tower: Vec<NumericalSemigroup>,
    pub multiplicity_sequence: Vec<u32>,
    pub stabilization_index: usize,
    pub reached_normalization: bool,
}

/// Iterates `S ↦ E(max_ideal(S))` until the naturals or `cap` steps.
pub fn blowup_tower(s: &NumericalSemigroup, cap: usize) -> TowerReport {
    let mut tower = vec![s.clone()];
    while !tower.last().unwrap().is_naturals() && tower.len() <= cap {
        let current = Arc::new(tower.last().unwrap().clone());
        tower.push(RelativeIdeal::max_ideal(current).end_semigroup());
    }
    let reached = tower.last().unwrap().is_naturals();
    TowerReport {
        multiplicity_sequence: tower.iter().map(NumericalSemigroup::multiplicity).collect(),
        stabilization_index: tower.len() - 1,
        reached_normalization: reached,
        tower,
    }
}
