use alloc::format;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// The tropical spectral radius: the largest geometric mean of a cycle.
///
/// The maximizing cycle is kept as the pair `(cycle_product, cycle_length)`
/// so that `lambda^cycle_length = cycle_product` holds exactly even when the
/// scalar realization cannot hold `lambda` itself.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralRadius<S> {
    /// `lambda`, when the realization can represent the root.
    pub value: Option<S>,
    pub cycle_product: S,
    pub cycle_length: u32,
    pub approx: f64,
}

impl<S: Scalar> SpectralRadius<S> {
    /// `lambda` or an [`Error::Unrepresentable`].
    pub fn lambda(&self) -> Result<&S> {
        self.value.as_ref().ok_or_else(|| {
            Error::Unrepresentable(format!(
                "({})^(1/{})",
                self.cycle_product, self.cycle_length
            ))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.cycle_product.is_zero()
    }
}

/// Orders `p1^(1/k1)` against `p2^(1/k2)` without taking roots.
pub fn cmp_cycle_means<S: Scalar>(p1: &S, k1: u32, p2: &S, k2: u32) -> Ordering {
    p1.pow(k2).cmp_value(&p2.pow(k1))
}

/// Maximum cycle geometric mean of a square matrix.
///
/// `(A^k)[i][i]` is the heaviest closed walk of length `k` through `i`, and
/// every closed walk splits into simple cycles, so the maximum over
/// `k = 1..n` of `max_i (A^k)[i][i]^(1/k)` is the spectral radius.
/// On equal means the shortest cycle wins.
pub fn spectral_radius<S: Scalar>(a: &Matrix<S>) -> Result<SpectralRadius<S>> {
    let n = a.require_square()?;
    let mut best_product = S::zero();
    let mut best_length = 1u32;
    let mut power = Matrix::identity(n);
    for k in 1..=n as u32 {
        power = power.otimes(a)?;
        let diag = (0..n).fold(S::zero(), |acc, i| acc.oplus(power.get(i, i)));
        if diag.is_zero() {
            continue;
        }
        if best_product.is_zero()
            || cmp_cycle_means(&diag, k, &best_product, best_length) == Ordering::Greater
        {
            best_product = diag;
            best_length = k;
        }
    }
    let value = best_product.root(best_length);
    let approx = libm::pow(best_product.to_f64(), 1.0 / f64::from(best_length));
    Ok(SpectralRadius {
        value,
        cycle_product: best_product,
        cycle_length: best_length,
        approx,
    })
}
