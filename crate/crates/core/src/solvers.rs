//! Closed-form solvers for three tropical optimization problems.
//!
//! * [`solve_min_quadratic`]: minimize `x^- A x`.
//! * [`solve_min_ratio`]: minimize `q^- x (A x)^- p`.
//! * [`solve_max_ratio`]: maximize `q^- x (A x)^- p`.
//!
//! Each returns the optimum and the complete solution set as one or more
//! generator matrices `G`, the set being `{G u : u != 0}`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{columns_collinear, Matrix, Vector};
use crate::scalar::Scalar;
use crate::spectral::spectral_radius;

/// Default bound on the number of row selections examined by
/// [`solve_min_ratio`].
pub const DEFAULT_SELECTION_CAP: usize = 4096;

/// Which construction produced a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `(lambda^-1 A)^*`.
    KleeneStar,
    /// `I ⊕ Δ^-1 A1^- p q^-` for the row selection with `kept[i]` the column
    /// retained in row `i`.
    RowSelection(Vec<usize>),
    /// `I ⊕ A_sk^- A` for the retained entry `(s, k)`.
    EntrySelection { row: usize, col: usize },
}

/// A solution family `{generator ⊗ u : u != 0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanGenerators<S> {
    pub generator: Matrix<S>,
    /// Every construction that produced this family, in enumeration order.
    pub sources: Vec<Provenance>,
}

impl<S: Scalar> SpanGenerators<S> {
    pub fn new(generator: Matrix<S>, source: Provenance) -> Self {
        SpanGenerators {
            generator,
            sources: vec![source],
        }
    }

    /// `generator ⊗ u`.
    pub fn member(&self, u: &Vector<S>) -> Result<Vector<S>> {
        self.generator.apply(u)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOutcome<S> {
    pub optimum: S,
    pub families: Vec<SpanGenerators<S>>,
    /// The selection cap cut the enumeration short.
    pub truncated: bool,
}

impl<S: Scalar> SolveOutcome<S> {
    /// The first family in enumeration order.
    pub fn canonical(&self) -> &SpanGenerators<S> {
        &self.families[0]
    }
}

/// Which entries of a base matrix a selection keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Row `i` keeps column `kept[i]`.
    Rows(Vec<usize>),
    /// Only entry `(row, col)` is kept.
    Entry { row: usize, col: usize },
}

/// A base matrix with all but the selected entries replaced by zero.
#[derive(Clone, Debug)]
pub struct SelectionMatrix<S> {
    base: Arc<Matrix<S>>,
    selection: Selection,
}

impl<S: Scalar> SelectionMatrix<S> {
    pub fn new(base: Arc<Matrix<S>>, selection: Selection) -> Result<Self> {
        let (rows, cols) = base.shape();
        match &selection {
            Selection::Rows(kept) => {
                if kept.len() != rows {
                    return Err(Error::Shape {
                        expected: rows,
                        found: kept.len(),
                    });
                }
                for (i, &j) in kept.iter().enumerate() {
                    if j >= cols || base.get(i, j).is_zero() {
                        return Err(Error::Precondition(alloc::format!(
                            "row {} must keep a nonzero entry",
                            i + 1
                        )));
                    }
                }
            }
            Selection::Entry { row, col } => {
                if *row >= rows || *col >= cols {
                    return Err(Error::Precondition(alloc::format!(
                        "entry ({}, {}) outside a {rows}x{cols} matrix",
                        row + 1,
                        col + 1
                    )));
                }
            }
        }
        Ok(SelectionMatrix { base, selection })
    }

    pub fn selection(&self) -> &Selection {
        &self.selection
    }

    pub fn base(&self) -> &Matrix<S> {
        &self.base
    }

    pub fn to_matrix(&self) -> Matrix<S> {
        let (rows, cols) = self.base.shape();
        let mut out = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let keep = match &self.selection {
                    Selection::Rows(kept) => kept[i] == j,
                    Selection::Entry { row, col } => *row == i && *col == j,
                };
                out.push(if keep {
                    self.base.get(i, j).clone()
                } else {
                    S::zero()
                });
            }
        }
        Matrix::new(rows, cols, out).expect("shape preserved")
    }
}

/// Result of [`enumerate_row_selections`].
#[derive(Clone, Debug)]
pub struct RowSelections<S> {
    pub selections: Vec<SelectionMatrix<S>>,
    /// Size of the full cartesian product (saturating).
    pub total: u128,
    pub truncated: bool,
}

/// `x^- A x = max_{i,j} a_ij x_j / x_i`.
pub fn quadratic_objective<S: Scalar>(a: &Matrix<S>, x: &Vector<S>) -> Result<S> {
    x.require_regular("x")?;
    x.conj_dot(&a.apply(x)?)
}

/// `q^- x (A x)^- p`.
pub fn ratio_objective<S: Scalar>(
    a: &Matrix<S>,
    p: &Vector<S>,
    q: &Vector<S>,
    x: &Vector<S>,
) -> Result<S> {
    let ax = a.apply(x)?;
    ax.require_regular("A x")?;
    Ok(q.conj_dot(x)?.otimes(&ax.conj_dot(p)?))
}

/// True when every column of `a` is collinear to a column of `b` and vice
/// versa.
pub fn same_span_columns<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> bool {
    if a.rows() != b.rows() {
        return false;
    }
    let ca = a.columns();
    let cb = b.columns();
    let covered = |xs: &[Vector<S>], ys: &[Vector<S>]| {
        xs.iter().all(|x| {
            ys.iter().any(|y| match (x.is_zero(), y.is_zero()) {
                (true, true) => true,
                (false, false) => columns_collinear(x, y).unwrap_or(false),
                _ => false,
            })
        })
    };
    covered(&ca, &cb) && covered(&cb, &ca)
}

/// Merges families whose generators have the same columns up to scaling,
/// keeping the first of each class and accumulating sources.
pub fn merge_families<S: Scalar>(families: Vec<SpanGenerators<S>>) -> Vec<SpanGenerators<S>> {
    let mut merged: Vec<SpanGenerators<S>> = Vec::new();
    for fam in families {
        match merged
            .iter_mut()
            .find(|m| same_span_columns(&m.generator, &fam.generator))
        {
            Some(existing) => existing.sources.extend(fam.sources),
            None => merged.push(fam),
        }
    }
    merged
}

/// Minimizes `x^- A x`.
///
/// The minimum is the spectral radius `lambda` and the regular minimizers
/// are `(lambda^-1 A)^* u`.
pub fn solve_min_quadratic<S: Scalar>(a: &Matrix<S>) -> Result<SolveOutcome<S>> {
    a.require_square()?;
    let sr = spectral_radius(a)?;
    if sr.is_zero() {
        return Err(Error::ZeroSpectralRadius);
    }
    let lambda = sr.lambda()?.clone();
    let inv = lambda.inv().expect("nonzero spectral radius");
    let generator = a.scale(&inv).kleene_star()?;
    Ok(SolveOutcome {
        optimum: lambda,
        families: vec![SpanGenerators::new(generator, Provenance::KleeneStar)],
        truncated: false,
    })
}

fn check_ratio_shapes<S: Scalar>(a: &Matrix<S>, p: &Vector<S>, q: &Vector<S>) -> Result<()> {
    if p.dim() != a.rows() {
        return Err(Error::Dimension {
            op: "p against A",
            left: a.shape(),
            right: (p.dim(), 1),
        });
    }
    if q.dim() != a.cols() {
        return Err(Error::Dimension {
            op: "q against A",
            left: a.shape(),
            right: (q.dim(), 1),
        });
    }
    Ok(())
}

/// `Δ = (A q)^- p`, the minimum of `q^- x (A x)^- p`.
pub fn min_ratio_value<S: Scalar>(a: &Matrix<S>, p: &Vector<S>, q: &Vector<S>) -> Result<S> {
    check_ratio_shapes(a, p, q)?;
    a.require_row_regular()?;
    if p.is_zero() {
        return Err(Error::ZeroOperand("p"));
    }
    q.require_regular("q")?;
    a.apply(q)?.conj_dot(p)
}

/// Zeroes every entry of `a` below `delta^-1 p_i / q_j`.
///
/// `delta` must equal `(A q)^- p`; that guarantees a retained entry in every
/// row.
pub fn sparsify<S: Scalar>(
    a: &Matrix<S>,
    p: &Vector<S>,
    q: &Vector<S>,
    delta: &S,
) -> Result<Matrix<S>> {
    let expected = min_ratio_value(a, p, q)?;
    if !expected.approx_eq(delta) {
        return Err(Error::Precondition(alloc::format!(
            "delta must be (A q)^- p = {expected}, got {delta}"
        )));
    }
    let delta_inv = delta.inv().expect("positive delta");
    let (rows, cols) = a.shape();
    let mut out = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let scaled = delta_inv.otimes(&p[i]);
        for j in 0..cols {
            let threshold = scaled.div(&q[j]).expect("regular q");
            let entry = a.get(i, j);
            let keep = entry.cmp_value(&threshold) != core::cmp::Ordering::Less
                || entry.approx_eq(&threshold);
            out.push(if keep { entry.clone() } else { S::zero() });
        }
    }
    let sparse = Matrix::new(rows, cols, out)?;
    sparse.require_row_regular()?;
    Ok(sparse)
}

/// Every way of keeping one nonzero entry per row, in lexicographic order
/// of the kept column indices (row 1 most significant), up to `cap`.
pub fn enumerate_row_selections<S: Scalar>(
    a_hat: &Matrix<S>,
    cap: usize,
) -> Result<RowSelections<S>> {
    if cap == 0 {
        return Err(Error::Precondition(
            "selection cap must be at least 1".into(),
        ));
    }
    a_hat.require_row_regular()?;
    let choices: Vec<Vec<usize>> = (0..a_hat.rows())
        .map(|i| {
            (0..a_hat.cols())
                .filter(|&j| !a_hat.get(i, j).is_zero())
                .collect()
        })
        .collect();
    let total = choices
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    let base = Arc::new(a_hat.clone());
    let mut cursor = vec![0usize; choices.len()];
    let mut selections = Vec::new();
    loop {
        if selections.len() == cap {
            break;
        }
        let kept = cursor
            .iter()
            .zip(&choices)
            .map(|(&c, opts)| opts[c])
            .collect();
        selections.push(SelectionMatrix::new(base.clone(), Selection::Rows(kept))?);
        // odometer with the last row fastest
        let mut row = choices.len();
        loop {
            if row == 0 {
                return Ok(RowSelections {
                    selections,
                    total,
                    truncated: false,
                });
            }
            row -= 1;
            cursor[row] += 1;
            if cursor[row] < choices[row].len() {
                break;
            }
            cursor[row] = 0;
        }
    }
    Ok(RowSelections {
        truncated: (selections.len() as u128) < total,
        selections,
        total,
    })
}

/// Minimizes `q^- x (A x)^- p` for row-regular `A`, nonzero `p` and regular
/// `q`.
///
/// The minimum is `Δ = (A q)^- p`. Each selection `A1` from the sparsified
/// matrix contributes the family `(I ⊕ Δ^-1 A1^- p q^-) u`; families with the
/// same generator columns up to scaling are merged.
pub fn solve_min_ratio<S: Scalar>(
    a: &Matrix<S>,
    p: &Vector<S>,
    q: &Vector<S>,
    cap: usize,
) -> Result<SolveOutcome<S>> {
    let delta = min_ratio_value(a, p, q)?;
    let a_hat = sparsify(a, p, q, &delta)?;
    let listing = enumerate_row_selections(&a_hat, cap)?;
    let delta_inv = delta.inv().expect("positive delta");
    let q_conj = q.conjugate();
    let n = a.cols();
    let identity = Matrix::identity(n);
    let mut families = Vec::with_capacity(listing.selections.len());
    for sel in &listing.selections {
        let a1 = sel.to_matrix();
        let w = a1.conjugate()?.apply(p)?.scale(&delta_inv);
        let mut outer = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                outer.push(w[i].otimes(&q_conj[j]));
            }
        }
        let generator = identity.oplus(&Matrix::new(n, n, outer)?)?;
        let kept = match sel.selection() {
            Selection::Rows(kept) => kept.clone(),
            Selection::Entry { .. } => unreachable!("row selections only"),
        };
        families.push(SpanGenerators::new(
            generator,
            Provenance::RowSelection(kept),
        ));
    }
    Ok(SolveOutcome {
        optimum: delta,
        families: merge_families(families),
        truncated: listing.truncated,
    })
}

/// `q_j^-1 · max_i p_i / a_ij` for every column `j`; the maximum is the
/// optimum of [`solve_max_ratio`].
pub fn max_ratio_column_scores<S: Scalar>(
    a: &Matrix<S>,
    p: &Vector<S>,
    q: &Vector<S>,
) -> Result<Vector<S>> {
    check_ratio_shapes(a, p, q)?;
    for j in 0..a.cols() {
        if let Some(row) = (0..a.rows()).find(|&i| a.get(i, j).is_zero()) {
            return Err(Error::IrregularColumn { col: j, row });
        }
    }
    p.require_regular("p")?;
    q.require_regular("q")?;
    let a_conj_p = a.conjugate()?.apply(p)?;
    let scores = (0..a.cols())
        .map(|j| a_conj_p[j].div(&q[j]).expect("regular q"))
        .collect();
    Vector::new(scores)
}

/// Maximizes `q^- x (A x)^- p` for `A` with regular columns and regular
/// `p`, `q`.
///
/// The maximum is `Δ = q^- A^- p`. Every maximizing pair `(s, k)`, with `k`
/// a best column and `s` a best row within it, contributes the family
/// `(I ⊕ A_sk^- A) u`. Pairs are visited with `k` then `s` ascending, so the
/// first family is the one for the lexicographically smallest `(k, s)`.
pub fn solve_max_ratio<S: Scalar>(
    a: &Matrix<S>,
    p: &Vector<S>,
    q: &Vector<S>,
) -> Result<SolveOutcome<S>> {
    let scores = max_ratio_column_scores(a, p, q)?;
    let delta = scores.max_entry();
    let n = a.cols();
    let mut families = Vec::new();
    for k in (0..n).filter(|&j| scores[j].approx_eq(&delta)) {
        let ratios: Vec<S> = (0..a.rows())
            .map(|i| p[i].div(a.get(i, k)).expect("regular column"))
            .collect();
        let best = ratios.iter().fold(S::zero(), |acc, r| acc.oplus(r));
        for s in (0..a.rows()).filter(|&i| ratios[i].approx_eq(&best)) {
            let pivot_inv = a.get(s, k).inv().expect("regular column");
            let mut generator = Matrix::<S>::identity(n).entries().to_vec();
            for j in 0..n {
                let v = pivot_inv.otimes(a.get(s, j));
                generator[k * n + j] = generator[k * n + j].oplus(&v);
            }
            families.push(SpanGenerators::new(
                Matrix::new(n, n, generator)?,
                Provenance::EntrySelection { row: s, col: k },
            ));
        }
    }
    Ok(SolveOutcome {
        optimum: delta,
        families: merge_families(families),
        truncated: false,
    })
}
