//! Numerical semigroups: cofinite additive submonoids of the nonnegative
//! integers.
//!
//! A [`NumericalSemigroup`] stores its unique minimal generating set and a
//! membership table on `[0, c]`, where `c` is the conductor. Every query about
//! membership reduces to that window since all integers `>= c` are members.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest genus accepted by the enumerators unless a caller raises it.
pub const DEFAULT_GENUS_CAP: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    conductor: u32,
    /// `members[z]` for `0 <= z <= conductor`.
    members: Vec<bool>,
    genus: u32,
}

/// The five standard invariants of a numerical semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub multiplicity: u32,
    pub embedding_dimension: u32,
    pub frobenius: i64,
    pub conductor: u32,
    pub genus: u32,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The full monoid of nonnegative integers.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            generators: vec![1],
            conductor: 0,
            members: vec![true],
            genus: 0,
        }
    }

    /// Builds the semigroup generated by `gens`, dropping redundant generators.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let apery = apery_by_shortest_paths(&gens);
        let m = gens[0];
        let max_apery = *apery.iter().max().expect("m >= 1");
        let conductor = (max_apery + 1).saturating_sub(m as u64) as u32;
        let members: Vec<bool> = (0..=conductor as u64)
            .map(|z| z >= apery[(z % m as u64) as usize])
            .collect();
        let genus = members.iter().filter(|&&b| !b).count() as u32;

        let is_member = |z: u32| z >= conductor || members[z as usize];
        let generators = gens
            .iter()
            .copied()
            .filter(|&x| !(1..=x / 2).any(|y| is_member(y) && is_member(x - y)))
            .collect();

        Ok(NumericalSemigroup {
            generators,
            conductor,
            members,
            genus,
        })
    }

    /// Builds a semigroup from a membership window: `window[z]` says whether
    /// `z` is a member and every integer `>= window.len()` is a member.
    /// The window must describe a set closed under addition containing 0.
    pub(crate) fn from_closed_window(window: &[bool]) -> Self {
        debug_assert!(window.is_empty() || window[0]);
        let mut conductor = window.len();
        while conductor > 0 && window[conductor - 1] {
            conductor -= 1;
        }
        let members: Vec<bool> = (0..=conductor)
            .map(|z| z >= conductor || window[z])
            .collect();
        let is_member = |z: usize| z >= conductor || members[z];
        let m = (1..).find(|&z| is_member(z)).expect("cofinite");
        let generators = (1..=conductor + m)
            .filter(|&x| is_member(x) && !(1..=x / 2).any(|y| is_member(y) && is_member(x - y)))
            .map(|x| x as u32)
            .collect();
        let genus = members.iter().filter(|&&b| !b).count() as u32;
        NumericalSemigroup {
            generators,
            conductor: conductor as u32,
            members,
            genus,
        }
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u32 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> u32 {
        self.generators.len() as u32
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Largest non-member, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z >= self.conductor as i64 {
            true
        } else {
            self.members[z as usize]
        }
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor)
            .filter(|&z| !self.members[z as usize])
            .collect()
    }

    /// For each residue class modulo `k`, the least member in that class.
    pub fn apery_set(&self, k: u32) -> Result<Vec<u32>> {
        if k == 0 || !self.contains(k as i64) {
            return Err(Error::NotAMember(k as i64));
        }
        let mut out = vec![u32::MAX; k as usize];
        let mut found = 0;
        let mut z = 0u32;
        while found < k {
            if self.contains(z as i64) && out[(z % k) as usize] == u32::MAX {
                out[(z % k) as usize] = z;
                found += 1;
            }
            z += 1;
        }
        Ok(out)
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            frobenius: self.frobenius(),
            conductor: self.conductor,
            genus: self.genus,
        }
    }

    /// `S \ {x}`, which is again a numerical semigroup when `x` is a minimal
    /// generator.
    pub(crate) fn remove_generator(&self, x: u32) -> Self {
        debug_assert!(self.generators.contains(&x));
        let len = (x as usize + 1).max(self.members.len());
        let window: Vec<bool> = (0..len)
            .map(|z| z != x as usize && self.contains(z as i64))
            .collect();
        Self::from_closed_window(&window)
    }

    /// Children in the semigroup tree: remove a minimal generator exceeding
    /// the Frobenius number.
    pub fn tree_children(&self) -> Vec<NumericalSemigroup> {
        let f = self.frobenius();
        self.generators
            .iter()
            .filter(|&&x| x as i64 > f)
            .map(|&x| self.remove_generator(x))
            .collect()
    }

    /// Parses `⟨a,b,c⟩`, `<a,b,c>` or `a,b,c`.
    pub fn parse(text: &str) -> Result<Self> {
        let gens = parse_int_list(text)?
            .into_iter()
            .map(|z| u32::try_from(z).map_err(|_| Error::NonPositiveGenerator))
            .collect::<Result<Vec<u32>>>()?;
        Self::from_generators(&gens)
    }
}

/// Parses a comma-separated list of integers, optionally wrapped in angle
/// brackets.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let trimmed = text
        .trim()
        .trim_start_matches(['⟨', '<', '('])
        .trim_end_matches(['⟩', '>', ')']);
    if trimmed.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    trimmed
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
        })
        .collect()
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(u32::to_string).collect();
        write!(f, "⟨{}⟩", parts.join(","))
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let gens = Vec::<u32>::deserialize(d)?;
        NumericalSemigroup::from_generators(&gens).map_err(serde::de::Error::custom)
    }
}

// Least element in each residue class mod gens[0], by Dijkstra on residues.
fn apery_by_shortest_paths(gens: &[u32]) -> Vec<u64> {
    let m = gens[0] as usize;
    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &gens[1..] {
            let nr = (r + g as usize) % m;
            let nd = d + g as u64;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// Every numerical semigroup of genus at most `max_genus`, walked level by
/// level down the semigroup tree rooted at the naturals.
pub fn enumerate_semigroups(max_genus: u32) -> Result<Vec<NumericalSemigroup>> {
    enumerate_semigroups_capped(max_genus, DEFAULT_GENUS_CAP)
}

pub fn enumerate_semigroups_capped(max_genus: u32, cap: u32) -> Result<Vec<NumericalSemigroup>> {
    if max_genus > cap {
        return Err(Error::CapExceeded {
            requested: max_genus,
            cap,
        });
    }
    let mut out = vec![NumericalSemigroup::naturals()];
    let mut level_start = 0;
    for _ in 0..max_genus {
        let level_end = out.len();
        let next: Vec<NumericalSemigroup> = out[level_start..level_end]
            .iter()
            .flat_map(NumericalSemigroup::tree_children)
            .collect();
        level_start = level_end;
        out.extend(next);
    }
    Ok(out)
}
