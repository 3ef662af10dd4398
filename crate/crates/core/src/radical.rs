//! Exact scalars of the form `c * root(P, k)^e`.
//!
//! The tropical spectral radius of a rational matrix is the `k`-th root of a
//! rational cycle product and is usually irrational. Everything downstream of
//! it (the scaled matrix, its Kleene star, score vectors, contrast ratios) is
//! a rational multiple of an integer power of that root, so the set
//! `{c * mu^e : c >= 0 rational, e integer}` for one fixed `mu` is closed
//! under every semifield operation and can be compared exactly.

use alloc::sync::Arc;
use core::cmp::Ordering;
use core::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::rational_root;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Base {
    /// Positive rational that is not a perfect `d`-th power for any `d > 1`
    /// dividing `index`.
    radicand: BigRational,
    /// At least 2.
    index: u32,
}

/// An exact nonnegative real `coeff * radicand^(exp / index)`.
///
/// Values built from different irrational bases cannot be combined; doing so
/// panics. A single rating run only ever introduces one base.
#[derive(Clone)]
pub struct Radical {
    coeff: BigRational,
    /// `0 <= exp < base.index`; zero iff `base` is `None`.
    exp: u32,
    base: Option<Arc<Base>>,
}

impl Radical {
    pub fn rational(value: BigRational) -> Self {
        assert!(
            !value.is_negative(),
            "radical coefficient must be nonnegative"
        );
        Radical {
            coeff: value,
            exp: 0,
            base: None,
        }
    }

    /// The exact `k`-th root of a nonnegative rational.
    ///
    /// The root is reduced so that the stored radicand is not a perfect power
    /// of any divisor of the stored index; perfect powers come back rational.
    pub fn root_of(value: &BigRational, k: u32) -> Option<Self> {
        if k == 0 || value.is_negative() {
            return None;
        }
        if let Some(r) = rational_root(value, k) {
            return Some(Radical::rational(r));
        }
        // Strip the largest divisor d of k for which value is a perfect d-th power.
        let mut radicand = value.clone();
        let mut index = k;
        for d in (2..k).rev() {
            if k.is_multiple_of(d) {
                if let Some(r) = rational_root(value, d) {
                    radicand = r;
                    index = k / d;
                    break;
                }
            }
        }
        Some(Radical {
            coeff: <BigRational as One>::one(),
            exp: 1,
            base: Some(Arc::new(Base { radicand, index })),
        })
    }

    /// The rational coefficient `c`.
    pub fn coefficient(&self) -> &BigRational {
        &self.coeff
    }

    /// `Some(value)` when the number is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.base.is_none() {
            Some(&self.coeff)
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.base.is_none()
    }

    fn normalized(coeff: BigRational, exp: u32, base: Option<Arc<Base>>) -> Self {
        if Zero::is_zero(&coeff) || exp == 0 {
            Radical {
                coeff,
                exp: 0,
                base: None,
            }
        } else {
            Radical { coeff, exp, base }
        }
    }

    fn shared_base(&self, other: &Self) -> Option<Arc<Base>> {
        match (&self.base, &other.base) {
            (Some(a), Some(b)) => {
                assert!(
                    Arc::ptr_eq(a, b) || a == b,
                    "cannot combine radicals over different bases"
                );
                Some(a.clone())
            }
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (None, None) => None,
        }
    }
}

impl PartialEq for Radical {
    fn eq(&self, other: &Self) -> bool {
        self.coeff == other.coeff
            && self.exp == other.exp
            && match (&self.base, &other.base) {
                (Some(a), Some(b)) => a == b,
                (None, None) => true,
                _ => false,
            }
    }
}

impl fmt::Debug for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Radical({self})")
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(base) = &self.base else {
            return write!(f, "{}", self.coeff);
        };
        let g = self.exp.gcd(&base.index);
        let (e, k) = (self.exp / g, base.index / g);
        if !One::is_one(&self.coeff) {
            write!(f, "{}*", self.coeff)?;
        }
        if base.radicand.is_integer() {
            write!(f, "{}", base.radicand)?;
        } else {
            write!(f, "({})", base.radicand)?;
        }
        write!(f, "^({e}/{k})")
    }
}

impl crate::scalar::Scalar for Radical {
    const EXACT: bool = true;

    fn zero() -> Self {
        Radical::rational(<BigRational as Zero>::zero())
    }

    fn one() -> Self {
        Radical::rational(<BigRational as One>::one())
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        if value.is_negative() {
            None
        } else {
            Some(Radical::rational(value.clone()))
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.coeff)
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        if self.exp == other.exp {
            return self.coeff.cmp(&other.coeff);
        }
        let base = self
            .shared_base(other)
            .expect("nonzero exponent has a base");
        // self/other = (c1/c2) * mu^d with 0 < |d| < index; raise to the index.
        let ratio = &self.coeff / &other.coeff;
        let lhs = num_traits::pow(ratio, base.index as usize);
        if self.exp > other.exp {
            let d = (self.exp - other.exp) as usize;
            (lhs * num_traits::pow(base.radicand.clone(), d)).cmp(&<BigRational as One>::one())
        } else {
            let d = (other.exp - self.exp) as usize;
            lhs.cmp(&num_traits::pow(base.radicand.clone(), d))
        }
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn otimes(&self, other: &Self) -> Self {
        let base = self.shared_base(other);
        let mut coeff = &self.coeff * &other.coeff;
        let mut exp = self.exp + other.exp;
        if let Some(b) = &base {
            if exp >= b.index {
                exp -= b.index;
                coeff *= &b.radicand;
            }
        }
        Radical::normalized(coeff, exp, base)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.base {
            None => Some(Radical::rational(self.coeff.recip())),
            Some(b) => {
                // (c mu^e)^-1 = c^-1 P^-1 mu^(k-e)
                let coeff = (&self.coeff * &b.radicand).recip();
                Some(Radical::normalized(
                    coeff,
                    b.index - self.exp,
                    self.base.clone(),
                ))
            }
        }
    }

    fn root(&self, k: u32) -> Option<Self> {
        if self.base.is_some() {
            return None;
        }
        Radical::root_of(&self.coeff, k)
    }

    fn to_f64(&self) -> f64 {
        let c = ToPrimitive::to_f64(&self.coeff).unwrap_or(f64::NAN);
        match &self.base {
            None => c,
            Some(b) => {
                let p = ToPrimitive::to_f64(&b.radicand).unwrap_or(f64::NAN);
                c * libm::pow(p, f64::from(self.exp) / f64::from(b.index))
            }
        }
    }
}
