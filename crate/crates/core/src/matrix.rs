//! Dense matrices and vectors over the max-times semifield.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense column vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(entries: Vec<S>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Vector { entries })
    }

    /// The all-ones vector.
    pub fn ones(dim: usize) -> Self {
        assert!(dim > 0, "vector dimension must be positive");
        Vector {
            entries: vec![S::one(); dim],
        }
    }

    pub fn from_rationals(values: &[(i64, i64)]) -> Result<Self> {
        let entries = values
            .iter()
            .enumerate()
            .map(|(i, &(n, d))| {
                let q = num_rational::BigRational::new(n.into(), d.into());
                S::from_rational(&q).ok_or(Error::NonPositiveEntry { row: i, col: 0 })
            })
            .collect::<Result<Vec<_>>>()?;
        Vector::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn iter(&self) -> core::slice::Iter<'_, S> {
        self.entries.iter()
    }

    /// Every entry is nonzero.
    pub fn is_regular(&self) -> bool {
        self.entries.iter().all(|x| !x.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn require_regular(&self, what: &'static str) -> Result<()> {
        match self.entries.iter().position(S::is_zero) {
            Some(index) => Err(Error::IrregularVector { what, index }),
            None => Ok(()),
        }
    }

    /// Tropical sum of the entries, `1^T x`.
    pub fn max_entry(&self) -> S {
        self.entries.iter().fold(S::zero(), |acc, x| acc.oplus(x))
    }

    /// Entrywise reciprocal with zeros kept, i.e. the conjugate `x^-` read as
    /// a column.
    pub fn conjugate(&self) -> Vector<S> {
        Vector {
            entries: self
                .entries
                .iter()
                .map(|x| x.inv().unwrap_or_else(S::zero))
                .collect(),
        }
    }

    /// The scalar `x^- y = max_i y_i / x_i` over nonzero `x_i`.
    pub fn conj_dot(&self, other: &Vector<S>) -> Result<S> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension {
                op: "conj_dot",
                left: (1, self.dim()),
                right: (other.dim(), 1),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .filter_map(|(x, y)| y.div(x))
            .fold(S::zero(), |acc, v| acc.oplus(&v)))
    }

    pub fn scale(&self, c: &S) -> Vector<S> {
        Vector {
            entries: self.entries.iter().map(|x| c.otimes(x)).collect(),
        }
    }

    pub fn oplus(&self, other: &Vector<S>) -> Result<Vector<S>> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension {
                op: "vector oplus",
                left: (self.dim(), 1),
                right: (other.dim(), 1),
            });
        }
        Ok(Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        })
    }

    /// Rescales so that the largest entry equals one.
    pub fn normalized(&self) -> Result<Vector<S>> {
        let top = self.max_entry();
        let inv = top.inv().ok_or(Error::ZeroOperand("vector"))?;
        Ok(self.scale(&inv))
    }

    /// Reorders entries so that `result[perm[i]] = self[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Vector<S> {
        assert_eq!(perm.len(), self.dim());
        let mut entries = self.entries.clone();
        for (i, &p) in perm.iter().enumerate() {
            entries[p] = self.entries[i].clone();
        }
        Vector { entries }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Vector<T> {
        Vector {
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn approx_eq(&self, other: &Vector<S>) -> bool {
        self.dim() == other.dim()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b))
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;

    fn index(&self, i: usize) -> &S {
        &self.entries[i]
    }
}

/// True iff `a = c * b` for some `c > 0`. Zero patterns must agree.
pub fn columns_collinear<S: Scalar>(a: &Vector<S>, b: &Vector<S>) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension {
            op: "columns_collinear",
            left: (a.dim(), 1),
            right: (b.dim(), 1),
        });
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperand("collinearity operand"));
    }
    let mut factor: Option<S> = None;
    for (x, y) in a.iter().zip(b.iter()) {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => continue,
            (false, false) => {
                let c = x.div(y).expect("nonzero divisor");
                match &factor {
                    None => factor = Some(c),
                    Some(f) if f.approx_eq(&c) => {}
                    Some(_) => return Ok(false),
                }
            }
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n * m);
        for row in rows {
            if row.len() != m {
                return Err(Error::Shape {
                    expected: m,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Matrix::new(n, m, entries)
    }

    /// Builds a matrix from `(numerator, denominator)` pairs, row by row.
    pub fn from_rationals(rows: &[&[(i64, i64)]]) -> Result<Self> {
        let rows = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &(n, d))| {
                        let q = num_rational::BigRational::new(n.into(), d.into());
                        S::from_rational(&q).ok_or(Error::NonPositiveEntry { row: i, col: j })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }

    pub fn from_columns(columns: &[Vector<S>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vector::dim);
        if columns.iter().any(|c| c.dim() != rows) {
            return Err(Error::Shape {
                expected: rows,
                found: columns
                    .iter()
                    .map(Vector::dim)
                    .find(|&d| d != rows)
                    .unwrap_or(0),
            });
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                entries.push(c[i].clone());
            }
        }
        Matrix::new(rows, cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix shape must be positive");
        Matrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = S::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        Vector {
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn columns(&self) -> Vec<Vector<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Errors with the first zero row, if any.
    pub fn require_row_regular(&self) -> Result<()> {
        match (0..self.rows).find(|&i| self.row(i).iter().all(S::is_zero)) {
            Some(row) => Err(Error::ZeroRow { row }),
            None => Ok(()),
        }
    }

    /// Tropical sum `a ⊕ b`, the entrywise maximum.
    pub fn oplus(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension {
                op: "mat_add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        })
    }

    /// Tropical product `a ⊗ b`: `max_k a[i][k] * b[k][j]`.
    pub fn otimes(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..other.cols {
                let mut acc = S::zero();
                for (k, a) in row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.oplus(&a.otimes(b));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// `a ⊗ x` for a column vector.
    pub fn apply(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if self.cols != x.dim() {
            return Err(Error::Dimension {
                op: "mat_vec",
                left: self.shape(),
                right: (x.dim(), 1),
            });
        }
        Ok(Vector {
            entries: (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(x.iter())
                        .fold(S::zero(), |acc, (a, b)| acc.oplus(&a.otimes(b)))
                })
                .collect(),
        })
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| c.otimes(x)).collect(),
        }
    }

    /// Multiplicative conjugate transpose: `result[i][j] = 1 / a[j][i]`,
    /// zero where `a[j][i]` is zero.
    pub fn conjugate(&self) -> Result<Matrix<S>> {
        if self.is_zero() {
            return Err(Error::ZeroOperand("matrix to conjugate"));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for i in 0..self.cols {
            for j in 0..self.rows {
                entries.push(self.get(j, i).inv().unwrap_or_else(S::zero));
            }
        }
        Ok(Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        })
    }

    /// `a^p` with `a^0 = I`.
    pub fn power(&self, p: u32) -> Result<Matrix<S>> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(n);
        for _ in 0..p {
            acc = acc.otimes(self)?;
        }
        Ok(acc)
    }

    /// Kleene star `I ⊕ a ⊕ … ⊕ a^(n-1)`, accumulated power by power.
    pub fn kleene_star(&self) -> Result<Matrix<S>> {
        let n = self.require_square()?;
        let mut star = Matrix::identity(n);
        let mut power = Matrix::identity(n);
        for _ in 1..n {
            power = power.otimes(self)?;
            star = star.oplus(&power)?;
        }
        Ok(star)
    }

    /// `P a P^T` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Matrix<S> {
        let n = self.rows;
        assert!(self.is_square() && perm.len() == n);
        let mut entries = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                entries[perm[i] * n + perm[j]] = self.get(i, j).clone();
            }
        }
        Matrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn approx_eq(&self, other: &Matrix<S>) -> bool {
        self.shape() == other.shape()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn m(rows: &[&[(i64, i64)]]) -> Matrix<Q> {
        Matrix::from_rationals(rows).unwrap()
    }

    fn ints(rows: &[&[i64]]) -> Matrix<Q> {
        let rows: Vec<Vec<(i64, i64)>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| (x, 1)).collect())
            .collect();
        let refs: Vec<&[(i64, i64)]> = rows.iter().map(Vec::as_slice).collect();
        m(&refs)
    }

    fn example_a_lambda() -> Matrix<Q> {
        m(&[
            &[(1, 2), (1, 6), (1, 4), (1, 6)],
            &[(3, 2), (1, 2), (2, 1), (1, 2)],
            &[(1, 1), (1, 8), (1, 2), (1, 1)],
            &[(3, 2), (1, 2), (1, 4), (1, 2)],
        ])
    }

    #[test]
    fn addition_is_entrywise_max() {
        let a = ints(&[&[1, 2], &[3, 4]]);
        let b = ints(&[&[4, 1], &[2, 5]]);
        assert_eq!(a.oplus(&b).unwrap(), ints(&[&[4, 2], &[3, 5]]));
        assert_eq!(a.oplus(&a).unwrap(), a);
        assert_eq!(Matrix::zeros(2, 2).oplus(&a).unwrap(), a);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = ints(&[&[1, 2], &[3, 4]]);
        let b = ints(&[&[1, 2, 3]]);
        assert!(matches!(a.oplus(&b), Err(Error::Dimension { .. })));
        assert!(matches!(b.otimes(&a), Err(Error::Dimension { .. })));
        assert!(matches!(b.power(2), Err(Error::NotSquare { .. })));
        assert!(matches!(b.kleene_star(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn identity_is_neutral() {
        let a = example_a_lambda();
        assert_eq!(Matrix::identity(4).otimes(&a).unwrap(), a);
        assert_eq!(a.otimes(&Matrix::identity(4)).unwrap(), a);
    }

    #[test]
    fn scaling() {
        let a = ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.scale(&Q::from_integer(1.into())), a);
        assert_eq!(a.scale(&Q::from_integer(0.into())), Matrix::zeros(2, 2));
    }

    #[test]
    fn powers() {
        let a = example_a_lambda();
        assert_eq!(a.power(0).unwrap(), Matrix::identity(4));
        assert_eq!(a.power(1).unwrap(), a);
        // (A_λ²)[1][3] (0-based) = max_k A_λ[1][k] A_λ[k][3]
        //   = max(3/2·1/6, 1/2·1/2, 2·1, 1/2·1/2) = 2
        let sq = a.power(2).unwrap();
        assert_eq!(*sq.get(1, 3), Q::from_integer(2.into()));
    }

    #[test]
    fn kleene_star_of_example_scaled_matrix() {
        let expected = m(&[
            &[(1, 1), (1, 6), (1, 3), (1, 3)],
            &[(3, 1), (1, 1), (2, 1), (2, 1)],
            &[(3, 2), (1, 2), (1, 1), (1, 1)],
            &[(3, 2), (1, 2), (1, 1), (1, 1)],
        ]);
        assert_eq!(example_a_lambda().kleene_star().unwrap(), expected);
        assert_eq!(
            Matrix::<Q>::zeros(3, 3).kleene_star().unwrap(),
            Matrix::identity(3)
        );
    }

    #[test]
    fn conjugate_transpose() {
        let x = m(&[&[(1, 3)], &[(1, 1)], &[(1, 2)], &[(1, 2)]]);
        assert_eq!(x.conjugate().unwrap(), ints(&[&[3, 1, 2, 2]]));
        let b1 = m(&[
            &[(1, 3), (0, 1)],
            &[(1, 1), (0, 1)],
            &[(1, 2), (0, 1)],
            &[(1, 2), (0, 1)],
        ]);
        let ones = Matrix::from_columns(&[Vector::ones(4)]).unwrap();
        assert_eq!(
            b1.conjugate().unwrap().otimes(&ones).unwrap(),
            ints(&[&[3], &[0]])
        );
        assert!(matches!(
            Matrix::<Q>::zeros(2, 3).conjugate(),
            Err(Error::ZeroOperand(_))
        ));
        let a = example_a_lambda();
        assert_eq!(a.conjugate().unwrap().conjugate().unwrap(), a);
    }

    #[test]
    fn collinearity_of_star_columns() {
        let star = example_a_lambda().kleene_star().unwrap();
        let c = star.columns();
        assert!(columns_collinear(&c[1], &c[2]).unwrap());
        assert!(columns_collinear(&c[2], &c[3]).unwrap());
        assert!(!columns_collinear(&c[0], &c[1]).unwrap());
        assert!(columns_collinear(&c[0], &c[0]).unwrap());
        let z = Vector::new(vec![Q::from_integer(0.into()); 4]).unwrap();
        assert!(columns_collinear(&c[0], &z).is_err());
        let p = Vector::<Q>::from_rationals(&[(1, 1), (0, 1)]).unwrap();
        let q = Vector::<Q>::from_rationals(&[(2, 1), (1, 1)]).unwrap();
        assert!(!columns_collinear(&p, &q).unwrap());
    }

    #[test]
    fn vector_helpers() {
        let x = Vector::<Q>::from_rationals(&[(1, 3), (1, 1), (1, 2)]).unwrap();
        assert_eq!(x.max_entry(), Q::from_integer(1.into()));
        let y = Vector::<Q>::from_rationals(&[(1, 1), (1, 1), (1, 1)]).unwrap();
        // x^- y = max(3, 1, 2)
        assert_eq!(x.conj_dot(&y).unwrap(), Q::from_integer(3.into()));
        assert_eq!(
            x.permuted(&[2, 0, 1]),
            Vector::<Q>::from_rationals(&[(1, 1), (1, 2), (1, 3)]).unwrap()
        );
    }
}
