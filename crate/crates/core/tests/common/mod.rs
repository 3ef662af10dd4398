#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tropical_rating::{BigRational, Matrix, Radical, Scalar, Vector};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Entry `p/q` with `p, q` drawn from `1..=max`.
pub fn random_ratio<R: Rng>(rng: &mut R, max: i64) -> Q {
    q(rng.gen_range(1..=max), rng.gen_range(1..=max))
}

/// Symmetrically reciprocal matrix whose upper triangle holds ratios of
/// integers up to 9.
pub fn random_reciprocal<R: Rng>(rng: &mut R, n: usize) -> Matrix<Q> {
    let mut rows = vec![vec![q(1, 1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = random_ratio(rng, 9);
            rows[j][i] = v.recip();
            rows[i][j] = v;
        }
    }
    Matrix::from_rows(rows).unwrap()
}

pub fn random_positive_matrix<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    max: i64,
) -> Matrix<Q> {
    let entries = (0..rows * cols).map(|_| random_ratio(rng, max)).collect();
    Matrix::new(rows, cols, entries).unwrap()
}

/// Nonnegative matrix with roughly `zero_share` of the entries zero.
pub fn random_sparse_matrix<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    zero_share: f64,
) -> Matrix<Q> {
    let entries = (0..rows * cols)
        .map(|_| {
            if rng.gen_bool(zero_share) {
                q(0, 1)
            } else {
                random_ratio(rng, 9)
            }
        })
        .collect();
    Matrix::new(rows, cols, entries).unwrap()
}

pub fn random_positive_vector<R: Rng>(rng: &mut R, n: usize, max: i64) -> Vector<Q> {
    Vector::new((0..n).map(|_| random_ratio(rng, max)).collect()).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn exact(m: &Matrix<Q>) -> Matrix<Radical> {
    m.map(|x| Radical::rational(x.clone()))
}

pub fn exact_vec(v: &Vector<Q>) -> Vector<Radical> {
    v.map(|x| Radical::rational(x.clone()))
}

pub fn float(m: &Matrix<Q>) -> Matrix<f64> {
    m.map(Scalar::to_f64)
}

/// Matrix with entries `2^e`, `e` in `-span..=span`, zero with the given
/// probability.
pub fn random_dyadic<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    span: i32,
    zero_share: f64,
) -> Matrix<Q> {
    let entries = (0..rows * cols)
        .map(|_| {
            if rng.gen_bool(zero_share) {
                q(0, 1)
            } else {
                pow2(rng.gen_range(-span..=span))
            }
        })
        .collect();
    Matrix::new(rows, cols, entries).unwrap()
}

pub fn pow2(e: i32) -> Q {
    if e >= 0 {
        q(1 << e, 1)
    } else {
        q(1, 1 << -e)
    }
}

/// Every vector `(1, 2^e2, …, 2^en)` with exponents in `-span..=span`.
pub fn dyadic_lattice(n: usize, span: i32) -> Vec<Vector<Q>> {
    let mut out = vec![vec![q(1, 1)]];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-span..=span).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(pow2(e));
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|v| Vector::new(v).unwrap()).collect()
}
