use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rat;
use crate::error::{Error, Result};

/// Exact computation field shared by numeric and symbolic evaluation.
///
/// Everything above the arithmetic kernel is generic over this trait, so the
/// same word or formula code runs on [`Rat`] points and on
/// [`RatFunc`](super::RatFunc) expressions.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_rat(&Rat::from_int(v))
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }

    fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.powi(-e);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        Ok(acc)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Product of a slice, 1 when empty.
pub fn product<F: Field>(xs: &[F]) -> F {
    xs.iter().fold(F::one(), |acc, x| acc * x)
}

/// Sum of a slice, 0 when empty.
pub fn sum<F: Field>(xs: &[F]) -> F {
    xs.iter().fold(F::zero(), |acc, x| acc + x)
}

impl Field for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn from_int(v: i64) -> Self {
        Rat::from_int(v)
    }
    fn powi(&self, e: i64) -> Result<Self> {
        self.pow(e)
    }
    fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.checked_div(other)
    }
}
