//! Scalars of the max-times semifield.
//!
//! The semifield is the set of nonnegative reals with `max` as addition and
//! ordinary multiplication as multiplication. Three realizations are
//! provided:
//!
//! * `f64` for fast approximate work,
//! * [`BigRational`] for exact work when every value stays rational,
//! * [`Radical`](crate::Radical) for exact work that also needs a `k`-th
//!   root of a rational (the spectral radius of a rational matrix).

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Relative tolerance used by the floating-point realization for equality
/// tests (collinearity, reciprocity, ties).
pub const FLOAT_RELATIVE_TOLERANCE: f64 = 1e-9;

/// A nonnegative element of the max-times semifield.
///
/// `oplus` is `max` and `otimes` is the usual product. Every nonzero element
/// has a multiplicative inverse.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + PartialEq + Send + Sync + 'static {
    /// Whether comparisons in this realization are exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;

    /// Converts a rational; `None` if it is negative.
    fn from_rational(value: &BigRational) -> Option<Self>;

    fn is_zero(&self) -> bool;

    /// Total order on values. Floating-point NaN never arises from valid
    /// inputs and compares equal.
    fn cmp_value(&self, other: &Self) -> Ordering;

    /// Equality with the realization's tolerance: exact for rational types,
    /// relative [`FLOAT_RELATIVE_TOLERANCE`] for `f64`.
    fn approx_eq(&self, other: &Self) -> bool;

    fn otimes(&self, other: &Self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Exact `k`-th root, `None` when the realization cannot hold it.
    fn root(&self, k: u32) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// Tropical addition: the maximum.
    fn oplus(&self, other: &Self) -> Self {
        if self.cmp_value(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// `self / other`; `None` when `other` is zero.
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.otimes(&inv))
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.otimes(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.otimes(&base);
            }
        }
        acc
    }

    fn is_one(&self) -> bool {
        self.approx_eq(&Self::one())
    }

    fn from_integer(value: u64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(value)))
            .expect("nonnegative integer")
    }
}

/// Relative-tolerance comparison used by the `f64` realization.
pub fn float_close(a: f64, b: f64) -> bool {
    if a == b {
        return true;
    }
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= FLOAT_RELATIVE_TOLERANCE * scale
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        if value.is_negative() {
            return None;
        }
        ToPrimitive::to_f64(value)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        float_close(*self, *other)
    }

    fn otimes(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn root(&self, k: u32) -> Option<Self> {
        match k {
            0 => None,
            1 => Some(*self),
            _ => Some(libm::pow(*self, 1.0 / f64::from(k))),
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Exact `k`-th root of a nonnegative rational, if it is a perfect power.
pub fn rational_root(value: &BigRational, k: u32) -> Option<BigRational> {
    if k == 0 || value.is_negative() {
        return None;
    }
    if k == 1 || Zero::is_zero(value) || One::is_one(value) {
        return Some(value.clone());
    }
    let num = value.numer().nth_root(k);
    let den = value.denom().nth_root(k);
    if num.pow(k) == *value.numer() && den.pow(k) == *value.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        if value.is_negative() {
            None
        } else {
            Some(value.clone())
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn otimes(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn root(&self, k: u32) -> Option<Self> {
        rational_root(self, k)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn pow(&self, k: u32) -> Self {
        num_traits::pow(self.clone(), k as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_root(&q(8, 27), 3), Some(q(2, 3)));
        assert_eq!(rational_root(&q(2, 1), 2), None);
        assert_eq!(rational_root(&q(1, 1), 7), Some(q(1, 1)));
        assert_eq!(rational_root(&q(0, 1), 3), Some(q(0, 1)));
        assert_eq!(rational_root(&q(-8, 1), 3), None);
    }

    #[test]
    fn float_tolerance_is_relative() {
        assert!(float_close(1e12, 1e12 + 1.0));
        assert!(!float_close(1.0, 1.0 + 1e-6));
        assert!(float_close(0.0, 0.0));
        assert!(!float_close(0.0, 1e-300));
    }

    #[test]
    fn oplus_is_max() {
        assert_eq!(q(1, 2).oplus(&q(1, 3)), q(1, 2));
        assert_eq!(Scalar::oplus(&2.0_f64, &3.0), 3.0);
        assert_eq!(q(2, 3).pow(3), q(8, 27));
        assert_eq!(Scalar::pow(&2.0_f64, 10), 1024.0);
    }

    #[test]
    fn negative_rationals_are_rejected() {
        assert!(<f64 as Scalar>::from_rational(&q(-1, 2)).is_none());
        assert!(<BigRational as Scalar>::from_rational(&q(-1, 2)).is_none());
    }
}
