use serde::Serialize;
use tropical_rating::{pivots, Ranking, RatingReport, Representative, Scalar};

use crate::config::Arithmetic;

/// One extremal score vector. Rankings are 1-based tie groups.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepresentativeReport {
    pub scores: Vec<String>,
    pub contrast: String,
    pub ranking: Vec<Vec<usize>>,
    /// Number of distinct extremal families found.
    pub families: usize,
}

/// Retained entry `(row, column)` of a most differentiating family, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pivot {
    pub row: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub arithmetic: &'static str,
    pub alternatives: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub spectral_radius: String,
    pub consistent: bool,
    pub truncated: bool,
    pub generators: Vec<Vec<String>>,
    pub least_differentiating: RepresentativeReport,
    pub most_differentiating: RepresentativeReport,
    pub pivots: Vec<Pivot>,
}

fn strings<'a, S: Scalar>(values: impl IntoIterator<Item = &'a S>) -> Vec<String> {
    values.into_iter().map(ToString::to_string).collect()
}

fn representative<S: Scalar>(rep: &Representative<S>, ranking: &Ranking) -> RepresentativeReport {
    RepresentativeReport {
        scores: strings(rep.vector.iter()),
        contrast: rep.contrast.to_string(),
        ranking: ranking
            .0
            .iter()
            .map(|g| g.iter().map(|i| i + 1).collect())
            .collect(),
        families: rep.families.len(),
    }
}

impl Report {
    pub fn new<S: Scalar>(
        rating: &RatingReport<S>,
        labels: Option<Vec<String>>,
        arithmetic: Arithmetic,
    ) -> Self {
        let family = &rating.family;
        Report {
            arithmetic: arithmetic.name(),
            alternatives: family.generator.rows(),
            labels,
            spectral_radius: family.lambda.to_string(),
            consistent: rating.consistent,
            truncated: rating.truncated,
            generators: family
                .generator
                .columns()
                .iter()
                .map(|c| strings(c.iter()))
                .collect(),
            least_differentiating: representative(&rating.least, &rating.least_ranking),
            most_differentiating: representative(&rating.most, &rating.most_ranking),
            pivots: pivots(&rating.most)
                .into_iter()
                .map(|(row, col)| Pivot {
                    row: row + 1,
                    column: col + 1,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    fn name(&self, alternative: usize) -> String {
        match &self.labels {
            Some(ls) => ls[alternative - 1].clone(),
            None => alternative.to_string(),
        }
    }

    fn ranking_line(&self, ranking: &[Vec<usize>]) -> String {
        ranking
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&i| self.name(i))
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join(" > ")
    }

    fn representative_section(&self, title: &str, rep: &RepresentativeReport, out: &mut String) {
        out.push_str(&format!("\n{title} (contrast {})\n", rep.contrast));
        let mut rank = vec![0; self.alternatives];
        for (g, group) in rep.ranking.iter().enumerate() {
            for &i in group {
                rank[i - 1] = g + 1;
            }
        }
        let mut rows = vec![vec![
            "alternative".to_string(),
            "score".into(),
            "rank".into(),
        ]];
        for (i, (score, r)) in rep.scores.iter().zip(&rank).enumerate() {
            rows.push(vec![self.name(i + 1), score.clone(), r.to_string()]);
        }
        table(&rows, out);
        out.push_str(&format!("  ranking: {}\n", self.ranking_line(&rep.ranking)));
        if rep.families > 1 {
            out.push_str(&format!(
                "  {} distinct families attain this contrast\n",
                rep.families
            ));
        }
    }

    pub fn to_text(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let summary = vec![
            vec!["arithmetic".to_string(), self.arithmetic.to_string()],
            vec!["alternatives".into(), self.alternatives.to_string()],
            vec!["spectral radius".into(), self.spectral_radius.clone()],
            vec!["consistent".into(), yes_no(self.consistent).into()],
            vec!["truncated".into(), yes_no(self.truncated).into()],
        ];
        table(&summary, &mut out);

        out.push_str(&format!(
            "\nscore family ({} generators)\n",
            self.generators.len()
        ));
        let mut header = vec!["alternative".to_string()];
        header.extend((1..=self.generators.len()).map(|j| format!("b{j}")));
        let mut rows = vec![header];
        for i in 0..self.alternatives {
            let mut row = vec![self.name(i + 1)];
            row.extend(self.generators.iter().map(|c| c[i].clone()));
            rows.push(row);
        }
        table(&rows, &mut out);

        self.representative_section(
            "least differentiating",
            &self.least_differentiating,
            &mut out,
        );
        self.representative_section("most differentiating", &self.most_differentiating, &mut out);
        out
    }
}

/// Left-aligned columns separated by two spaces, indented by two.
fn table(rows: &[Vec<String>], out: &mut String) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let mut line = String::from("  ");
        for (j, cell) in row.iter().enumerate() {
            line.push_str(cell);
            if j + 1 < row.len() {
                let pad = widths[j] - cell.chars().count() + 2;
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}
