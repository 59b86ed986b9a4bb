use std::fmt::Debug;

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;

/// Exact coefficient field for truncated power series.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// A random element; for the rationals a small integer.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let c = Self::random(rng);
            if !c.is_zero() {
                return c;
            }
        }
    }
}

/// Prime field `F_P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: u32) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

macro_rules! prime_name {
    ($p:expr) => {
        match $p {
            2 => "F2",
            3 => "F3",
            5 => "F5",
            _ => "Fp",
        }
    };
}

impl<const P: u32> Coeff for Fp<P> {
    const NAME: &'static str = prime_name!(P);

    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % P)
    }

    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + P - other.0) % P)
    }

    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u64 * other.0 as u64) % P as u64) as u32)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(P-2).
        let mut base = *self;
        let mut exp = P - 2;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        Some(acc)
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }
}

/// Exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rational(pub BigRational);

impl Coeff for Rational {
    const NAME: &'static str = "Q";

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }

    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }

    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-3..=3))
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
}
