//! Slow, obviously-correct reference routines for cross-checking the
//! optimized paths. None of these are used by the rating pipeline.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::rating::{ComparisonMatrix, ScoreFamily};
use crate::scalar::Scalar;
use crate::spectral::SpectralRadius;

/// Default bound on evaluated lattice points.
pub const DEFAULT_COST_GUARD: u128 = 10_000_000;

/// Largest order accepted by [`brute_force_spectral_radius`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// A geometric grid: each free coordinate takes `points_per_axis` values
/// spaced evenly in log scale over `[1/log_range, log_range]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeSpec {
    points_per_axis: usize,
    log_range: f64,
}

impl LatticeSpec {
    pub fn new(points_per_axis: usize, log_range: f64) -> Result<Self> {
        if points_per_axis < 2 {
            return Err(Error::Precondition(
                "lattice needs at least 2 points per axis".into(),
            ));
        }
        if !(log_range > 1.0 && log_range.is_finite()) {
            return Err(Error::Precondition(
                "lattice range must be finite and above 1".into(),
            ));
        }
        Ok(LatticeSpec {
            points_per_axis,
            log_range,
        })
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    pub fn log_range(&self) -> f64 {
        self.log_range
    }

    /// Axis values in increasing order, endpoints included.
    pub fn axis(&self) -> Vec<f64> {
        let last = (self.points_per_axis - 1) as f64;
        (0..self.points_per_axis)
            .map(|m| libm::pow(self.log_range, -1.0 + 2.0 * m as f64 / last))
            .collect()
    }

    /// Number of points with `free` free coordinates.
    pub fn size(&self, free: usize) -> u128 {
        (self.points_per_axis as u128).saturating_pow(free as u32)
    }

    fn guard(&self, free: usize, limit: u128) -> Result<()> {
        let points = self.size(free);
        if points > limit {
            Err(Error::CostGuard { points, limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// Calls `visit` with every vector whose first entry is 1 and whose other
/// entries range over the lattice axis.
fn for_each_point(dim: usize, axis: &[f64], mut visit: impl FnMut(&[f64])) {
    let mut cursor = vec![0usize; dim.saturating_sub(1)];
    let mut x = vec![1.0; dim];
    for (k, xi) in x.iter_mut().skip(1).enumerate() {
        *xi = axis[cursor[k]];
    }
    loop {
        visit(&x);
        let mut k = cursor.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            cursor[k] += 1;
            if cursor[k] < axis.len() {
                x[k + 1] = axis[cursor[k]];
                break;
            }
            cursor[k] = 0;
            x[k + 1] = axis[0];
        }
    }
}

/// Spectral radius by listing every index tuple `(i1, …, ik)`, `k = 1..n`,
/// and its cyclic product `a[i1][i2] … a[ik][i1]`.
///
/// Means are compared as `p1^k2` against `p2^k1`; the shortest cycle wins
/// ties, so the result is directly comparable with
/// [`spectral_radius`](crate::spectral_radius).
pub fn brute_force_spectral_radius<S: Scalar>(a: &Matrix<S>) -> Result<SpectralRadius<S>> {
    let n = a.require_square()?;
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::CostGuard {
            points: (n as u128).saturating_pow(n as u32),
            limit: (MAX_ENUMERATION_ORDER as u128).pow(MAX_ENUMERATION_ORDER as u32),
        });
    }
    let mut best = S::zero();
    let mut best_len = 1u32;
    for k in 1..=n {
        let mut tuple = vec![0usize; k];
        loop {
            let mut product = S::one();
            for t in 0..k {
                product = product.otimes(a.get(tuple[t], tuple[(t + 1) % k]));
            }
            let better = !product.is_zero()
                && (best.is_zero()
                    || product.pow(best_len).cmp_value(&best.pow(k as u32)) == Ordering::Greater);
            if better {
                best = product;
                best_len = k as u32;
            }
            // next tuple
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                tuple[pos] += 1;
                if tuple[pos] < n {
                    break;
                }
                tuple[pos] = 0;
            }
            if tuple.iter().all(|&t| t == 0) {
                break;
            }
        }
    }
    Ok(SpectralRadius {
        value: best.root(best_len),
        approx: libm::pow(best.to_f64(), 1.0 / f64::from(best_len)),
        cycle_product: best,
        cycle_length: best_len,
    })
}

/// Smallest approximation error `max_{i,j} a_ij x_j / x_i` over the lattice,
/// with `x_1 = 1`. This is an upper bound on the true minimum.
pub fn grid_search_objective_min<S: Scalar>(
    a: &ComparisonMatrix<S>,
    lattice: &LatticeSpec,
    cost_guard: u128,
) -> Result<f64> {
    let n = a.n();
    lattice.guard(n - 1, cost_guard)?;
    let m: Vec<f64> = a.matrix().entries().iter().map(Scalar::to_f64).collect();
    let axis = lattice.axis();
    let mut best = f64::INFINITY;
    for_each_point(n, &axis, |x| {
        let mut worst = 0.0_f64;
        'rows: for i in 0..n {
            let inv = 1.0 / x[i];
            for j in 0..n {
                let v = m[i * n + j] * x[j] * inv;
                if v > worst {
                    worst = v;
                    if worst >= best {
                        break 'rows;
                    }
                }
            }
        }
        if worst < best {
            best = worst;
        }
    });
    Ok(best)
}

/// Extremal contrast ratio of `B u` over lattice-sampled `u` with `u_1 = 1`.
pub fn brute_force_contrast<S: Scalar>(
    f: &ScoreFamily<S>,
    lattice: &LatticeSpec,
    extremum: Extremum,
    cost_guard: u128,
) -> Result<f64> {
    let b = &f.generator;
    let (n, g) = b.shape();
    lattice.guard(g - 1, cost_guard)?;
    let m: Vec<f64> = b.entries().iter().map(Scalar::to_f64).collect();
    let axis = lattice.axis();
    let mut best = match extremum {
        Extremum::Min => f64::INFINITY,
        Extremum::Max => 0.0,
    };
    let mut x = vec![0.0; n];
    for_each_point(g, &axis, |u| {
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = (0..g).map(|j| m[i * g + j] * u[j]).fold(0.0, f64::max);
        }
        let hi = x.iter().copied().fold(0.0, f64::max);
        let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
        let c = hi / lo;
        best = match extremum {
            Extremum::Min => best.min(c),
            Extremum::Max => best.max(c),
        };
    });
    Ok(best)
}

/// Whether `x` lies in the tropical column span of `b`.
///
/// Uses the projection `B (x^- B)^-`, whose coefficients
/// `u_j = min_i x_i / b_ij` form the largest `u` with `B u <= x`; `x` is in
/// the span iff the projection reproduces it.
pub fn span_membership<S: Scalar>(b: &Matrix<S>, x: &Vector<S>) -> Result<bool> {
    if b.rows() != x.dim() {
        return Err(Error::Dimension {
            op: "span_membership",
            left: b.shape(),
            right: (x.dim(), 1),
        });
    }
    if let Some(col) = (0..b.cols()).find(|&j| b.column(j).is_zero()) {
        return Err(Error::Precondition(alloc::format!(
            "generator column {} is zero",
            col + 1
        )));
    }
    x.require_regular("x")?;
    let coeffs = b
        .columns()
        .iter()
        .map(|col| Ok(x.conj_dot(col)?.inv().expect("nonzero column")))
        .collect::<Result<Vec<S>>>()?;
    let projection = b.apply(&Vector::new(coeffs)?)?;
    Ok(projection.approx_eq(x))
}
