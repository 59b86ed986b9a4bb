//! Nagata idealization `V⋆L` over a truncated DVR.
//!
//! `V = F[[t]]` is modeled modulo `t^N` and `L = V^r` is free of rank `r`.
//! Elements are coordinate vectors `(v, ℓ_1, …, ℓ_r)` multiplied by
//! `(v₁,ℓ₁)(v₂,ℓ₂) = (v₁v₂, v₁ℓ₂ + v₂ℓ₁)`. An ideal is stored as the Howell
//! form of the `V`-submodule of `V^{1+r}` it spans, which is canonical, so
//! ideal equality is equality of reduced bases.
//!
//! Verdicts computed modulo `t^N` are lifted to the complete ring through
//! Nakayama: if `t^k V^{1+r} ⊆ J + t^N V^{1+r}` for some `k < N` then
//! `t^k V^{1+r} ⊆ J`, so any equality `I² = xI` observed modulo `t^N` with
//! `xI` saturated below `N` holds exactly. Inequalities modulo `t^N` always
//! hold exactly.

pub mod coeff;
pub mod series;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Execution};
pub use coeff::{Coeff, Fp, Rational};
pub use series::TruncatedSeries;

/// `(v, ℓ)` stored as `1 + r` truncated series; index 0 is the `V` part.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<F> {
    coords: Vec<TruncatedSeries<F>>,
}

impl<F: Coeff> Element<F> {
    pub fn new(v: TruncatedSeries<F>, l: Vec<TruncatedSeries<F>>) -> Self {
        let mut coords = vec![v];
        coords.extend(l);
        Element { coords }
    }

    pub fn v(&self) -> &TruncatedSeries<F> {
        &self.coords[0]
    }

    pub fn l(&self) -> &[TruncatedSeries<F>] {
        &self.coords[1..]
    }

    pub fn coords(&self) -> &[TruncatedSeries<F>] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(TruncatedSeries::is_zero)
    }

    fn zero(dim: usize, precision: usize) -> Self {
        Element {
            coords: vec![TruncatedSeries::zero(precision); dim],
        }
    }

    fn add(&self, other: &Self) -> Self {
        Element {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        Element {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    /// Multiplication by a scalar of `V`.
    fn scale(&self, s: &TruncatedSeries<F>) -> Self {
        Element {
            coords: self.coords.iter().map(|a| a.mul(s)).collect(),
        }
    }

    fn shift_up(&self, k: usize) -> Self {
        Element {
            coords: self.coords.iter().map(|a| a.shift_up(k)).collect(),
        }
    }

    /// Valuation of the `V` component.
    pub fn v_valuation(&self) -> Option<usize> {
        self.v().valuation()
    }

    fn mul_law(&self, other: &Self) -> Self {
        let v = self.v().mul(other.v());
        let l = self
            .l()
            .iter()
            .zip(other.l())
            .map(|(l1, l2)| self.v().mul(l2).add(&other.v().mul(l1)))
            .collect();
        Element::new(v, l)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdealizationRing {
    rank: usize,
    precision: usize,
}

/// Product together with the precision flags attached to it.
#[derive(Clone, PartialEq, Debug)]
pub struct MulOutcome<F> {
    pub product: Element<F>,
    pub regular: bool,
    /// Set when the `V` component has valuation at least `N/2`.
    pub precision_warning: bool,
}

impl IdealizationRing {
    /// Builds `V⋆V^rank` modulo `t^precision` and spot-checks the ring axioms
    /// on seeded random triples over the coefficient field `F`.
    pub fn new<F: Coeff>(rank: usize, precision: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::BadRank(rank));
        }
        if precision < 4 {
            return Err(Error::BadPrecision(precision));
        }
        let ring = IdealizationRing { rank, precision };
        ring.check_axioms::<F>()?;
        Ok(ring)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    fn dim(&self) -> usize {
        1 + self.rank
    }

    fn check_axioms<F: Coeff>(&self) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let one = self.one::<F>();
        for _ in 0..8 {
            let a = self.random_element::<F, _>(&mut rng, 0);
            let b = self.random_element::<F, _>(&mut rng, 0);
            let c = self.random_element::<F, _>(&mut rng, 0);
            let ab = a.mul_law(&b);
            if ab != b.mul_law(&a) {
                return Err(Error::AxiomFailure("commutativity".into()));
            }
            if ab.mul_law(&c) != a.mul_law(&b.mul_law(&c)) {
                return Err(Error::AxiomFailure("associativity".into()));
            }
            if a.mul_law(&one) != a {
                return Err(Error::AxiomFailure("identity".into()));
            }
            if a.mul_law(&b.add(&c)) != ab.add(&a.mul_law(&c)) {
                return Err(Error::AxiomFailure("distributivity".into()));
            }
        }
        Ok(())
    }

    fn conforms<F>(&self, e: &Element<F>) -> bool
    where
        F: Coeff,
    {
        e.coords.len() == self.dim() && e.coords.iter().all(|c| c.precision() == self.precision)
    }

    pub fn element<F: Coeff>(&self, v: TruncatedSeries<F>, l: Vec<TruncatedSeries<F>>) -> Result<Element<F>> {
        let e = Element::new(v, l);
        if self.conforms(&e) {
            Ok(e)
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Builds an element from integer coefficient lists.
    pub fn element_from_ints<F: Coeff>(&self, v: &[i64], l: &[&[i64]]) -> Result<Element<F>> {
        let series = |c: &[i64]| TruncatedSeries::from_coeffs(self.precision, c.iter().map(|&x| F::from_i64(x)).collect());
        let mut ls: Vec<TruncatedSeries<F>> = l.iter().map(|c| series(c)).collect();
        if ls.len() > self.rank {
            return Err(Error::RingMismatch);
        }
        ls.resize(self.rank, TruncatedSeries::zero(self.precision));
        self.element(series(v), ls)
    }

    pub fn one<F: Coeff>(&self) -> Element<F> {
        let mut e = Element::zero(self.dim(), self.precision);
        e.coords[0] = TruncatedSeries::one(self.precision);
        e
    }

    /// `(t, 0)`.
    pub fn uniformizer<F: Coeff>(&self) -> Element<F> {
        let mut e = Element::zero(self.dim(), self.precision);
        e.coords[0] = TruncatedSeries::monomial(self.precision, 1);
        e
    }

    /// `(0, e_k)` for `k` in `1..=rank`.
    pub fn basis_l<F: Coeff>(&self, k: usize) -> Element<F> {
        let mut e = Element::zero(self.dim(), self.precision);
        e.coords[k] = TruncatedSeries::one(self.precision);
        e
    }

    pub fn mul<F: Coeff>(&self, a: &Element<F>, b: &Element<F>) -> Result<Element<F>> {
        if !self.conforms(a) || !self.conforms(b) {
            return Err(Error::RingMismatch);
        }
        Ok(a.mul_law(b))
    }

    pub fn element_mul<F: Coeff>(&self, a: &Element<F>, b: &Element<F>) -> Result<MulOutcome<F>> {
        let product = self.mul(a, b)?;
        let val = product.v_valuation();
        Ok(MulOutcome {
            regular: self.is_regular(&product),
            precision_warning: val.is_none_or(|v| v >= self.precision / 2),
            product,
        })
    }

    /// Nonzero `V` component at precision.
    pub fn is_regular<F: Coeff>(&self, e: &Element<F>) -> bool {
        e.v_valuation().is_some()
    }

    fn random_series<F: Coeff, R: Rng + ?Sized>(&self, rng: &mut R, valuation: usize) -> TruncatedSeries<F> {
        let mut coeffs: Vec<F> = (0..self.precision).map(|_| F::random(rng)).collect();
        coeffs[0] = F::random_nonzero(rng);
        TruncatedSeries::from_coeffs(self.precision, coeffs).shift_up(valuation)
    }

    fn random_element<F: Coeff, R: Rng + ?Sized>(&self, rng: &mut R, valuation: usize) -> Element<F> {
        let v = self.random_series(rng, valuation);
        let l = (0..self.rank)
            .map(|_| {
                let coeffs = (0..self.precision).map(|_| F::random(rng)).collect();
                TruncatedSeries::from_coeffs(self.precision, coeffs)
            })
            .collect();
        Element::new(v, l)
    }

    /// One to three generators, the first with `V` valuation below `N/4`,
    /// the others either pure `L` elements or of random small valuation.
    pub fn random_regular_generators<F: Coeff, R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Element<F>> {
        let max_val = (self.precision / 4).saturating_sub(1);
        let count = rng.gen_range(1..=3);
        (0..count)
            .map(|i| {
                let val = rng.gen_range(0..=max_val);
                let mut e = self.random_element::<F, R>(rng, val);
                if i > 0 && rng.gen_bool(1.0 / 3.0) {
                    e.coords[0] = TruncatedSeries::zero(self.precision);
                }
                e
            })
            .collect()
    }

    /// `M = ((t,0), (0,e_1), …, (0,e_r))`.
    pub fn maximal_ideal<F: Coeff>(&self) -> Ideal<F> {
        let mut gens = vec![self.uniformizer()];
        gens.extend((1..=self.rank).map(|k| self.basis_l(k)));
        Ideal::from_generators(*self, &gens).expect("nonempty")
    }

    /// `P = 0⋆L`.
    pub fn square_zero_prime<F: Coeff>(&self) -> Ideal<F> {
        let gens: Vec<Element<F>> = (1..=self.rank).map(|k| self.basis_l(k)).collect();
        Ideal::from_generators(*self, &gens).expect("nonempty")
    }

    /// Dimension over the base field of `R/M^n`.
    pub fn hilbert_length<F: Coeff>(&self, n: usize) -> Result<usize> {
        if n == 0 {
            return Ok(0);
        }
        if 2 * n > self.precision {
            return Err(Error::PrecisionTooLow {
                n,
                needed: 2 * n,
                precision: self.precision,
            });
        }
        let m = self.maximal_ideal::<F>();
        let mut power = m.clone();
        for _ in 1..n {
            power = power.product(&m);
        }
        Ok(power.colength().expect("M^n contains t^n R"))
    }

    pub fn square_zero_prime_check<F: Coeff>(&self) -> SquareZeroPrimeCheck {
        // P is spanned over V by (0, e_k) and the product is V-bilinear, so
        // vanishing on basis pairs is exact.
        let p_squared_zero = (1..=self.rank).all(|i| {
            (1..=self.rank).all(|j| self.basis_l::<F>(i).mul_law(&self.basis_l(j)).is_zero())
        });
        let p = self.square_zero_prime::<F>();
        // R/P ≅ V: P has no pivot in the V column and unit pivots elsewhere.
        let p_is_l = p.rows.len() == self.rank
            && p.rows.iter().all(|r| r.col >= 1 && r.valuation == 0);
        // The maximal ideal of R/P is generated by the image of t, and t is
        // not nilpotent below precision.
        let t = self.uniformizer::<F>();
        let m_principal = self.maximal_ideal::<F>()
            == Ideal::from_generators(*self, std::slice::from_ref(&t)).expect("nonempty").add(&p);
        let t_not_nilpotent = (1..self.precision).all(|k| {
            let mut power = self.one::<F>();
            for _ in 0..k {
                power = power.mul_law(&t);
            }
            power.v_valuation() == Some(k)
        });
        SquareZeroPrimeCheck {
            p_squared_zero,
            quotient_is_dvr: p_is_l && m_principal && t_not_nilpotent,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SquareZeroPrimeCheck {
    pub p_squared_zero: bool,
    pub quotient_is_dvr: bool,
}

#[derive(Clone, PartialEq, Debug)]
struct PivotRow<F> {
    col: usize,
    valuation: usize,
    row: Element<F>,
}

/// An ideal of `V⋆L` modulo `t^N`, stored in Howell form.
#[derive(Clone, PartialEq, Debug)]
pub struct Ideal<F> {
    ring: IdealizationRing,
    generators: Vec<Element<F>>,
    rows: Vec<PivotRow<F>>,
}

impl<F: Coeff> Ideal<F> {
    /// Each ring generator `(v, ℓ)` contributes the module generators
    /// `(v, ℓ)` and `(0, v·e_k)`.
    pub fn from_generators(ring: IdealizationRing, gens: &[Element<F>]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.iter().any(|g| !ring.conforms(g)) {
            return Err(Error::RingMismatch);
        }
        let mut module = Vec::new();
        for g in gens {
            module.push(g.clone());
            for k in 1..=ring.rank {
                module.push(g.mul_law(&ring.basis_l(k)));
            }
        }
        Ok(Ideal {
            ring,
            generators: gens.to_vec(),
            rows: howell_form(ring, module),
        })
    }

    fn from_module(ring: IdealizationRing, module: Vec<Element<F>>) -> Self {
        let rows = howell_form(ring, module);
        Ideal {
            ring,
            generators: rows.iter().map(|r| r.row.clone()).collect(),
            rows,
        }
    }

    pub fn ring(&self) -> IdealizationRing {
        self.ring
    }

    pub fn generators(&self) -> &[Element<F>] {
        &self.generators
    }

    /// Reduced basis as `(pivot column, pivot valuation)` pairs.
    pub fn pivots(&self) -> Vec<(usize, usize)> {
        self.rows.iter().map(|r| (r.col, r.valuation)).collect()
    }

    pub fn basis(&self) -> Vec<Element<F>> {
        self.rows.iter().map(|r| r.row.clone()).collect()
    }

    pub fn contains(&self, e: &Element<F>) -> bool {
        let mut x = e.clone();
        for r in &self.rows {
            let entry = &x.coords[r.col];
            match entry.valuation() {
                None => continue,
                Some(v) if v < r.valuation => return false,
                Some(_) => {
                    let factor = entry.shift_down(r.valuation);
                    x = x.sub(&r.row.scale(&factor));
                }
            }
        }
        x.is_zero()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(&r.row))
    }

    pub fn add(&self, other: &Self) -> Self {
        let module = self.basis().into_iter().chain(other.basis()).collect();
        Self::from_module(self.ring, module)
    }

    /// The ideal product: pairwise products of module generators span it.
    pub fn product(&self, other: &Self) -> Self {
        let module = self
            .rows
            .iter()
            .flat_map(|a| other.rows.iter().map(move |b| a.row.mul_law(&b.row)))
            .collect();
        Self::from_module(self.ring, module)
    }

    /// `xI`.
    pub fn scaled(&self, x: &Element<F>) -> Self {
        let module = self.rows.iter().map(|r| x.mul_law(&r.row)).collect();
        Self::from_module(self.ring, module)
    }

    /// Dimension over the base field of `V^{1+r}/I` (all arithmetic modulo
    /// `t^N`); `None` unless every column has a pivot.
    pub fn colength(&self) -> Option<usize> {
        if self.rows.len() != self.ring.dim() {
            return None;
        }
        Some(self.rows.iter().map(|r| r.valuation).sum())
    }

    /// Least `k < N` with `t^k V^{1+r} ⊆ I`.
    pub fn saturation(&self) -> Option<usize> {
        let n = self.ring.precision;
        (0..n).find(|&k| {
            (0..self.ring.dim()).all(|j| {
                let mut e = Element::zero(self.ring.dim(), n);
                e.coords[j] = TruncatedSeries::monomial(n, k);
                self.contains(&e)
            })
        })
    }

    /// Some generator has `V` valuation below `N/2`.
    pub fn is_regular(&self) -> bool {
        let half = self.ring.precision / 2;
        self.generators
            .iter()
            .any(|g| g.v_valuation().is_some_and(|v| v < half))
    }

    /// Searches for `x` with `I² = xI` among the generators and their
    /// pairwise sums, in order of `V` valuation.
    pub fn is_stable_ideal(&self) -> Result<StabilityReport<F>> {
        if !self.is_regular() {
            return Err(Error::NotRegular);
        }
        let n = self.ring.precision;
        let half = n / 2;
        let mut candidates: Vec<Element<F>> = self.generators.clone();
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                candidates.push(self.generators[i].add(&self.generators[j]));
            }
        }
        candidates.sort_by_key(|c| c.v_valuation().unwrap_or(usize::MAX));
        let square = self.product(self);
        let mut guard_tripped = false;
        for (tried, x) in candidates.iter().enumerate() {
            let val = x.v_valuation();
            let safe = val.is_some_and(|v| v < half);
            let x_ideal = self.scaled(x);
            if x_ideal == square {
                match x_ideal.saturation() {
                    Some(k) => {
                        return Ok(StabilityReport {
                            verdict: Stability::Stable,
                            witness: Some(x.clone()),
                            witness_valuation: val,
                            margin: Some(n - k),
                            candidates_tried: tried + 1,
                        })
                    }
                    None => guard_tripped = true,
                }
            } else if !safe {
                guard_tripped = true;
            }
        }
        Ok(StabilityReport {
            verdict: if guard_tripped {
                Stability::Inconclusive
            } else {
                Stability::NotStable
            },
            witness: None,
            witness_valuation: None,
            margin: None,
            candidates_tried: candidates.len(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    NotStable,
    Inconclusive,
}

#[derive(Clone, PartialEq, Debug)]
pub struct StabilityReport<F> {
    pub verdict: Stability,
    pub witness: Option<Element<F>>,
    pub witness_valuation: Option<usize>,
    /// `N - k` where `t^k R ⊆ xI`; how far below the truncation the
    /// equality was certified.
    pub margin: Option<usize>,
    pub candidates_tried: usize,
}

/// Howell form over `V/t^N`: pivots normalized to `t^v`, entries above each
/// pivot reduced below `t^v`, and `t^{N-v}` multiples of each pivot row
/// pushed back for elimination so the form is canonical.
fn howell_form<F: Coeff>(ring: IdealizationRing, module: Vec<Element<F>>) -> Vec<PivotRow<F>> {
    let n = ring.precision;
    let mut pool: Vec<Element<F>> = module.into_iter().filter(|e| !e.is_zero()).collect();
    let mut basis: Vec<PivotRow<F>> = Vec::new();
    for col in 0..ring.dim() {
        let best = pool
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.coords[col].valuation().map(|v| (v, i)))
            .min();
        let Some((v, idx)) = best else {
            continue;
        };
        let pivot = pool.swap_remove(idx);
        let unit = pivot.coords[col].shift_down(v).inverse().expect("unit part");
        let pivot = pivot.scale(&unit);
        for e in pool.iter_mut() {
            if !e.coords[col].is_zero() {
                let factor = e.coords[col].shift_down(v);
                *e = e.sub(&pivot.scale(&factor));
            }
        }
        if v > 0 {
            pool.push(pivot.shift_up(n - v));
        }
        pool.retain(|e| !e.is_zero());
        basis.push(PivotRow {
            col,
            valuation: v,
            row: pivot,
        });
    }
    debug_assert!(pool.is_empty());
    for j in 0..basis.len() {
        let (col, v) = (basis[j].col, basis[j].valuation);
        let pivot = basis[j].row.clone();
        for row in basis[..j].iter_mut() {
            let high = row.row.coords[col].shift_down(v);
            if !high.is_zero() {
                row.row = row.row.sub(&pivot.scale(&high));
            }
        }
    }
    basis
}

/// One randomized stability trial, as reported by the CLI.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub generators: usize,
    pub min_generator_valuation: Option<usize>,
    pub verdict: Stability,
    pub witness_valuation: Option<usize>,
    pub margin: Option<usize>,
}

/// Runs `trials` seeded random stability trials; each trial derives its own
/// generator from `seed` and its index, so the output is independent of
/// scheduling.
pub fn stability_trials<F: Coeff>(
    ring: IdealizationRing,
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Vec<TrialRecord> {
    let indices: Vec<usize> = (0..trials).collect();
    par::map(exec, &indices, |&trial| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let gens = ring.random_regular_generators::<F, _>(&mut rng);
        let ideal = Ideal::from_generators(ring, &gens).expect("nonempty");
        let report = ideal.is_stable_ideal().expect("generated regular");
        TrialRecord {
            trial,
            generators: gens.len(),
            min_generator_valuation: gens.iter().filter_map(Element::v_valuation).min(),
            verdict: report.verdict,
            witness_valuation: report.witness_valuation,
            margin: report.margin,
        }
    })
}
