//! Rating alternatives from a pairwise comparison matrix.
//!
//! The score vectors are the minimizers of the log-Chebyshev error
//! `max_{i,j} a_ij x_j / x_i`. When that set holds more than one ray, the
//! members with the smallest and the largest contrast ratio
//! `max_i x_i / min_i x_i` are reported as representatives.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{columns_collinear, Matrix, Vector};
use crate::scalar::Scalar;
use crate::solvers::{
    max_ratio_column_scores, merge_families, quadratic_objective, solve_max_ratio, solve_min_ratio,
    Provenance, SolveOutcome, SpanGenerators,
};
use crate::spectral::{spectral_radius, SpectralRadius};

/// A validated square matrix with positive entries and `a_ij a_ji = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonMatrix<S> {
    matrix: Matrix<S>,
    labels: Option<Vec<String>>,
}

impl<S: Scalar> ComparisonMatrix<S> {
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Relabels alternatives so that alternative `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> ComparisonMatrix<S> {
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = ls.clone();
            for (i, &p) in perm.iter().enumerate() {
                out[p] = ls[i].clone();
            }
            out
        });
        ComparisonMatrix {
            matrix: self.matrix.permuted(perm),
            labels,
        }
    }
}

/// Checks a raw matrix and wraps it as a [`ComparisonMatrix`].
///
/// With `auto_symmetrize`, the strictly lower triangle is overwritten by the
/// reciprocals of the upper triangle before checking.
pub fn validate<S: Scalar>(
    raw: Matrix<S>,
    labels: Option<Vec<String>>,
    auto_symmetrize: bool,
) -> Result<ComparisonMatrix<S>> {
    let n = raw.require_square()?;
    if let Some(ls) = &labels {
        if ls.len() != n {
            return Err(Error::LabelCount {
                labels: ls.len(),
                alternatives: n,
            });
        }
    }
    let matrix = if auto_symmetrize {
        let mut rows: Vec<Vec<S>> = (0..n).map(|i| raw.row(i).to_vec()).collect();
        for i in 0..n {
            for j in i + 1..n {
                rows[j][i] = raw
                    .get(i, j)
                    .inv()
                    .ok_or(Error::NonPositiveEntry { row: i, col: j })?;
            }
        }
        Matrix::from_rows(rows)?
    } else {
        raw
    };
    for i in 0..n {
        for j in 0..n {
            if matrix.get(i, j).is_zero() {
                return Err(Error::NonPositiveEntry { row: i, col: j });
            }
        }
    }
    let one = S::one();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !matrix.get(i, j).otimes(matrix.get(j, i)).approx_eq(&one))
        .collect();
    if !pairs.is_empty() {
        return Err(Error::Reciprocity { pairs });
    }
    Ok(ComparisonMatrix { matrix, labels })
}

/// True iff `a_ij = a_ik a_kj` for all `i, j, k`.
pub fn is_consistent<S: Scalar>(a: &ComparisonMatrix<S>) -> bool {
    let m = &a.matrix;
    let n = a.n();
    (0..n).all(|i| {
        (0..n).all(|j| (0..n).all(|k| m.get(i, j).approx_eq(&m.get(i, k).otimes(m.get(k, j)))))
    })
}

/// The consistent matrix `a_ij = w_i / w_j`.
pub fn consistent_from_weights<S: Scalar>(w: &Vector<S>) -> Result<ComparisonMatrix<S>> {
    w.require_regular("weight vector")?;
    let n = w.dim();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(w[i].div(&w[j]).expect("regular weights"));
        }
    }
    Ok(ComparisonMatrix {
        matrix: Matrix::new(n, n, entries)?,
        labels: None,
    })
}

/// The approximation error `max_{i,j} a_ij x_j / x_i`.
pub fn objective<S: Scalar>(a: &ComparisonMatrix<S>, x: &Vector<S>) -> Result<S> {
    if x.dim() != a.n() {
        return Err(Error::Dimension {
            op: "objective",
            left: a.matrix.shape(),
            right: (x.dim(), 1),
        });
    }
    quadratic_objective(&a.matrix, x)
}

/// `max_i x_i / min_i x_i`.
pub fn contrast_ratio<S: Scalar>(x: &Vector<S>) -> Result<S> {
    x.require_regular("score vector")?;
    Ok(x.max_entry().otimes(&x.conjugate().max_entry()))
}

/// Drops columns collinear to an earlier column and rescales the rest to
/// a maximum entry of one.
pub fn canonical_columns<S: Scalar>(m: &Matrix<S>) -> Result<Matrix<S>> {
    let mut kept: Vec<Vector<S>> = Vec::new();
    for col in m.columns() {
        let col = col.normalized()?;
        let mut duplicate = false;
        for k in &kept {
            if columns_collinear(k, &col)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            kept.push(col);
        }
    }
    Matrix::from_columns(&kept)
}

/// All minimizers of the approximation error, `{B u : u != 0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreFamily<S> {
    pub spectral: SpectralRadius<S>,
    /// The minimum error, the spectral radius of the comparison matrix.
    pub lambda: S,
    /// Pairwise non-collinear columns, each with maximum entry one.
    pub generator: Matrix<S>,
}

impl<S: Scalar> ScoreFamily<S> {
    pub fn member(&self, u: &Vector<S>) -> Result<Vector<S>> {
        self.generator.apply(u)
    }

    /// Number of generator columns.
    pub fn rank(&self) -> usize {
        self.generator.cols()
    }
}

pub fn score_family<S: Scalar>(a: &ComparisonMatrix<S>) -> Result<ScoreFamily<S>> {
    let spectral = spectral_radius(&a.matrix)?;
    if spectral.is_zero() {
        return Err(Error::ZeroSpectralRadius);
    }
    let lambda = spectral.lambda()?.clone();
    let inv = lambda.inv().expect("nonzero spectral radius");
    let star = a.matrix.scale(&inv).kleene_star()?;
    Ok(ScoreFamily {
        spectral,
        lambda,
        generator: canonical_columns(&star)?,
    })
}

/// A least or most differentiating score vector with its contrast ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct Representative<S> {
    /// First column of the first family, maximum entry one.
    pub vector: Vector<S>,
    pub contrast: S,
    /// Every extremal family mapped to score space as `B G`, canonicalized
    /// and merged.
    pub families: Vec<SpanGenerators<S>>,
    pub truncated: bool,
}

fn contrast_problem<S: Scalar>(f: &ScoreFamily<S>) -> (Vector<S>, Vector<S>) {
    let b = &f.generator;
    let p = Vector::ones(b.rows());
    let col_max: Vec<S> = b.columns().iter().map(Vector::max_entry).collect();
    let q = Vector::new(col_max).expect("nonempty").conjugate();
    (p, q)
}

fn to_score_space<S: Scalar>(
    f: &ScoreFamily<S>,
    outcome: SolveOutcome<S>,
) -> Result<Representative<S>> {
    let mut families = Vec::with_capacity(outcome.families.len());
    for fam in outcome.families {
        let x = f.generator.otimes(&fam.generator)?;
        families.push(SpanGenerators {
            generator: canonical_columns(&x)?,
            sources: fam.sources,
        });
    }
    let families = merge_families(families);
    let vector = families[0].generator.column(0);
    Ok(Representative {
        vector,
        contrast: outcome.optimum,
        families,
        truncated: outcome.truncated,
    })
}

/// Members of the family with the smallest contrast ratio.
pub fn least_differentiating<S: Scalar>(
    f: &ScoreFamily<S>,
    cap: usize,
) -> Result<Representative<S>> {
    let (p, q) = contrast_problem(f);
    let outcome = solve_min_ratio(&f.generator, &p, &q, cap)?;
    to_score_space(f, outcome)
}

/// Members of the family with the largest contrast ratio.
pub fn most_differentiating<S: Scalar>(f: &ScoreFamily<S>) -> Result<Representative<S>> {
    let (p, q) = contrast_problem(f);
    let outcome = solve_max_ratio(&f.generator, &p, &q)?;
    to_score_space(f, outcome)
}

/// Contrast ratio of each generator column, `1^T b_j b_j^- 1`.
pub fn column_contrasts<S: Scalar>(f: &ScoreFamily<S>) -> Result<Vector<S>> {
    let (p, q) = contrast_problem(f);
    max_ratio_column_scores(&f.generator, &p, &q)
}

/// The `(row, column)` pivots of the most differentiating families.
pub fn pivots<S>(rep: &Representative<S>) -> Vec<(usize, usize)> {
    rep.families
        .iter()
        .flat_map(|f| f.sources.iter())
        .filter_map(|s| match s {
            Provenance::EntrySelection { row, col } => Some((*row, *col)),
            _ => None,
        })
        .collect()
}

/// Alternatives by descending score; equal scores share a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranking(pub Vec<Vec<usize>>);

impl Ranking {
    pub fn of<S: Scalar>(x: &Vector<S>) -> Ranking {
        let mut order: Vec<usize> = (0..x.dim()).collect();
        order.sort_by(|&a, &b| x[b].cmp_value(&x[a]).then(a.cmp(&b)));
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in order {
            match groups.last_mut() {
                Some(g) if x[g[0]].approx_eq(&x[i]) => g.push(i),
                _ => groups.push(alloc::vec![i]),
            }
        }
        Ranking(groups)
    }

    pub fn top(&self) -> &[usize] {
        &self.0[0]
    }

    pub fn bottom(&self) -> &[usize] {
        self.0.last().expect("nonempty ranking")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatingReport<S> {
    pub family: ScoreFamily<S>,
    pub least: Representative<S>,
    pub most: Representative<S>,
    pub least_ranking: Ranking,
    pub most_ranking: Ranking,
    pub consistent: bool,
    /// The selection cap cut the least-differentiating search short.
    pub truncated: bool,
}

impl<S: Scalar> RatingReport<S> {
    pub fn least_contrast(&self) -> &S {
        &self.least.contrast
    }

    pub fn most_contrast(&self) -> &S {
        &self.most.contrast
    }
}

/// Score family, both representatives and their rankings.
pub fn rate<S: Scalar>(a: &ComparisonMatrix<S>, cap: usize) -> Result<RatingReport<S>> {
    let family = score_family(a)?;
    let least = least_differentiating(&family, cap)?;
    let most = most_differentiating(&family)?;
    Ok(RatingReport {
        least_ranking: Ranking::of(&least.vector),
        most_ranking: Ranking::of(&most.vector),
        consistent: is_consistent(a),
        truncated: least.truncated,
        family,
        least,
        most,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::Radical;
    use alloc::vec;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn example() -> ComparisonMatrix<Q> {
        let raw = Matrix::from_rationals(&[
            &[(1, 1), (1, 3), (1, 2), (1, 3)],
            &[(3, 1), (1, 1), (4, 1), (1, 1)],
            &[(2, 1), (1, 4), (1, 1), (2, 1)],
            &[(3, 1), (1, 1), (1, 2), (1, 1)],
        ])
        .unwrap();
        validate(raw, None, false).unwrap()
    }

    fn vq(xs: &[(i64, i64)]) -> Vector<Q> {
        Vector::from_rationals(xs).unwrap()
    }

    #[test]
    fn validation() {
        let bad = Matrix::<Q>::from_rationals(&[&[(1, 1), (2, 1)], &[(3, 1), (1, 1)]]).unwrap();
        assert_eq!(
            validate(bad.clone(), None, false).unwrap_err(),
            Error::Reciprocity {
                pairs: vec![(0, 1)]
            }
        );
        let fixed = validate(bad, None, true).unwrap();
        assert_eq!(*fixed.matrix().get(1, 0), q(1, 2));
        assert!(validate(Matrix::<Q>::identity(1), None, false).is_ok());
        let zero = Matrix::<Q>::from_rationals(&[&[(1, 1), (0, 1)], &[(1, 1), (1, 1)]]).unwrap();
        assert_eq!(
            validate(zero, None, false).unwrap_err(),
            Error::NonPositiveEntry { row: 0, col: 1 }
        );
        let rect = Matrix::<Q>::from_rationals(&[&[(1, 1), (1, 1)]]).unwrap();
        assert!(matches!(
            validate(rect, None, false),
            Err(Error::NotSquare { .. })
        ));
        let labels = Some(vec![String::from("a")]);
        assert!(matches!(
            validate(Matrix::<Q>::identity(2), labels, false),
            Err(Error::LabelCount { .. })
        ));
        let diag = Matrix::<Q>::from_rationals(&[&[(2, 1)]]).unwrap();
        assert!(matches!(
            validate(diag, None, true),
            Err(Error::Reciprocity { .. })
        ));
    }

    #[test]
    fn consistency() {
        let w = vq(&[(2, 1), (1, 1), (4, 1)]);
        let c = consistent_from_weights(&w).unwrap();
        assert!(is_consistent(&c));
        assert!(!is_consistent(&example()));
        assert!(is_consistent(
            &validate(Matrix::<Q>::identity(1), None, false).unwrap()
        ));
        let two = consistent_from_weights(&vq(&[(2, 1), (1, 1)])).unwrap();
        assert_eq!(
            two.matrix(),
            &Matrix::from_rationals(&[&[(1, 1), (2, 1)], &[(1, 2), (1, 1)]]).unwrap()
        );
        let ones = consistent_from_weights(&vq(&[(1, 1), (1, 1), (1, 1)])).unwrap();
        assert!(ones.matrix().entries().iter().all(|x| *x == q(1, 1)));
        assert!(consistent_from_weights(&vq(&[(1, 1), (0, 1)])).is_err());
    }

    #[test]
    fn objective_and_contrast() {
        let a = example();
        let x = vq(&[(1, 3), (1, 1), (1, 2), (1, 2)]);
        assert_eq!(objective(&a, &x).unwrap(), q(2, 1));
        assert_eq!(objective(&a, &x.scale(&q(7, 3))).unwrap(), q(2, 1));
        assert_eq!(contrast_ratio(&x).unwrap(), q(3, 1));
        assert_eq!(
            contrast_ratio(&vq(&[(1, 6), (1, 1), (1, 2), (1, 2)])).unwrap(),
            q(6, 1)
        );
        assert_eq!(contrast_ratio(&vq(&[(5, 1), (5, 1)])).unwrap(), q(1, 1));
        assert!(contrast_ratio(&vq(&[(5, 1), (0, 1)])).is_err());
        assert!(objective(&a, &vq(&[(1, 1), (0, 1), (1, 1), (1, 1)])).is_err());

        let w = vq(&[(2, 1), (1, 1), (4, 1)]);
        let c = consistent_from_weights(&w).unwrap();
        assert_eq!(objective(&c, &w).unwrap(), q(1, 1));
    }

    #[test]
    fn example_family() {
        let f = score_family(&example()).unwrap();
        assert_eq!(f.lambda, q(2, 1));
        let expected = Matrix::from_rationals(&[
            &[(1, 3), (1, 6)],
            &[(1, 1), (1, 1)],
            &[(1, 2), (1, 2)],
            &[(1, 2), (1, 2)],
        ])
        .unwrap();
        assert_eq!(f.generator, expected);
    }

    #[test]
    fn example_representatives() {
        let report = rate(&example(), 4096).unwrap();
        assert_eq!(report.least.vector, vq(&[(1, 3), (1, 1), (1, 2), (1, 2)]));
        assert_eq!(report.least.contrast, q(3, 1));
        assert_eq!(report.least.families.len(), 1);
        assert_eq!(report.least.families[0].sources.len(), 8);
        assert_eq!(report.most.vector, vq(&[(1, 6), (1, 1), (1, 2), (1, 2)]));
        assert_eq!(report.most.contrast, q(6, 1));
        assert_eq!(pivots(&report.most), vec![(0, 1)]);
        assert_eq!(
            report.least_ranking,
            Ranking(vec![vec![1], vec![2, 3], vec![0]])
        );
        assert_eq!(report.most_ranking, report.least_ranking);
        assert!(!report.consistent);
        assert!(!report.truncated);
        let cc = column_contrasts(&report.family).unwrap();
        assert_eq!(cc.entries(), &[q(3, 1), q(6, 1)]);
    }

    #[test]
    fn single_alternative() {
        let a = validate(Matrix::<Q>::identity(1), None, false).unwrap();
        let report = rate(&a, 16).unwrap();
        assert_eq!(report.family.generator, Matrix::identity(1));
        assert_eq!(report.least.contrast, q(1, 1));
        assert_eq!(report.most.contrast, q(1, 1));
    }

    #[test]
    fn consistent_input_has_one_ray() {
        let w = vq(&[(2, 1), (1, 1), (4, 1)]);
        let report = rate(&consistent_from_weights(&w).unwrap(), 16).unwrap();
        assert_eq!(report.family.lambda, q(1, 1));
        assert_eq!(report.family.rank(), 1);
        assert_eq!(report.least.vector, vq(&[(1, 2), (1, 4), (1, 1)]));
        assert_eq!(report.least.vector, report.most.vector);
        assert_eq!(report.least.contrast, q(4, 1));
    }

    #[test]
    fn irrational_radius_stays_exact() {
        let raw = Matrix::<Radical>::from_rationals(&[
            &[(1, 1), (2, 1), (1, 1)],
            &[(1, 2), (1, 1), (3, 1)],
            &[(1, 1), (1, 3), (1, 1)],
        ])
        .unwrap();
        let a = validate(raw, None, false).unwrap();
        let report = rate(&a, 64).unwrap();
        // cycle 1->2->3->1 has product 6
        assert_eq!(report.family.lambda.pow(3), Radical::from_integer(6));
        for col in report.family.generator.columns() {
            assert_eq!(objective(&a, &col).unwrap(), report.family.lambda);
        }
        assert_eq!(
            contrast_ratio(&report.least.vector).unwrap(),
            report.least.contrast
        );
        assert_eq!(
            contrast_ratio(&report.most.vector).unwrap(),
            report.most.contrast
        );
    }

    #[test]
    fn float_mode_matches_exact_example() {
        let a = validate(example().matrix().map(|x| x.to_f64()), None, false).unwrap();
        let report = rate(&a, 4096).unwrap();
        assert!((report.family.lambda - 2.0).abs() < 1e-12);
        assert!((report.least.contrast - 3.0).abs() < 1e-9);
        assert!((report.most.contrast - 6.0).abs() < 1e-9);
        assert_eq!(
            report.least_ranking,
            Ranking(vec![vec![1], vec![2, 3], vec![0]])
        );
    }
}
