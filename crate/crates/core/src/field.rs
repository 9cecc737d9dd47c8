//! Exact coefficient fields.
//!
//! Everything in this crate is generic over [`Field`]. Two instances ship with
//! the crate: [`BigRational`] (the rationals) and
//! [`GaussianRational`](crate::gaussian::GaussianRational) (the Gaussian
//! rationals `Q(i)`, which is what the crate-root aliases use). Floating point
//! types are deliberately not fields here: every check in this crate is an
//! exact equality.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact field with decidable equality.
pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_bigint(n: BigInt) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn checked_inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.checked_inv().ok_or(Error::DivisionByZero)?;
        Ok(self.clone() * &inv)
    }

    /// Integer power; negative exponents need an invertible base.
    fn pow_i(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.checked_inv().ok_or(Error::DivisionByZero)? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Ok(acc)
    }
}

impl Field for BigRational {
    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Binomial coefficient `C(n, k)` as a field element; zero when `k > n`.
pub fn binom<F: Field>(n: u32, k: u32) -> F {
    if k > n {
        return F::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    F::from_bigint(num / den)
}
