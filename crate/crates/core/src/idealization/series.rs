use super::coeff::Coeff;

/// Element of `V/t^N` for `V = F[[t]]`: exactly `N` coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Coeff> TruncatedSeries<F> {
    pub fn zero(precision: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![F::zero(); precision],
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::monomial(precision, 0)
    }

    /// `t^k` (zero when `k >= N`).
    pub fn monomial(precision: usize, k: usize) -> Self {
        let mut s = Self::zero(precision);
        if k < precision {
            s.coeffs[k] = F::one();
        }
        s
    }

    /// Truncates or zero-pads `coeffs` to `precision` terms.
    pub fn from_coeffs(precision: usize, mut coeffs: Vec<F>) -> Self {
        coeffs.resize(precision, F::zero());
        TruncatedSeries { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Least index with a nonzero coefficient; `None` when zero at precision.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(F::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision();
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn scale(&self, c: &F) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.precision();
        let mut coeffs = vec![F::zero(); n];
        if k < n {
            coeffs[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        TruncatedSeries { coeffs }
    }

    /// Drops the first `k` coefficients, padding with zeros: the quotient by
    /// `t^k` when `t^k` divides the series.
    pub fn shift_down(&self, k: usize) -> Self {
        let n = self.precision();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i + k).cloned().unwrap_or_else(F::zero))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// The part of degree `< k`.
    pub fn truncate_below(&self, k: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i < k { c.clone() } else { F::zero() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Inverse of a unit modulo `t^N`.
    pub fn inverse(&self) -> Option<Self> {
        let a0_inv = self.coeffs.first()?.inv()?;
        let n = self.precision();
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(a0_inv.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&out[k - i]));
            }
            out.push(acc.mul(&a0_inv).neg());
        }
        Some(TruncatedSeries { coeffs: out })
    }

    /// `self / other` when `v(self) >= v(other)` and `other` is nonzero at
    /// precision. The quotient is determined modulo `t^(N - v(other))`; the
    /// representative returned has zero coefficients above that.
    pub fn divide(&self, other: &Self) -> Option<Self> {
        let v = other.valuation()?;
        match self.valuation() {
            None => return Some(Self::zero(self.precision())),
            Some(w) if w < v => return None,
            _ => {}
        }
        let unit = other.shift_down(v).inverse()?;
        Some(self.shift_down(v).mul(&unit).truncate_below(self.precision() - v))
    }
}
