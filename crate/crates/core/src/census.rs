//! Tables of GOF-knot counts over every canonical fraction up to a bound.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::classify::{canonical_fractions, report_for};
use crate::par::{flat_map_range, Execution};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub alpha: i64,
    pub beta: i64,
    pub count: usize,
    pub witnesses: Vec<BraidWord>,
}

impl CensusRow {
    /// `alpha<TAB>beta<TAB>count<TAB>words`, words joined by `;`.
    pub fn to_tsv(&self) -> String {
        let words: Vec<String> = self.witnesses.iter().map(|w| w.to_string()).collect();
        format!(
            "{}\t{}\t{}\t{}",
            self.alpha,
            self.beta,
            self.count,
            words.join(";")
        )
    }
}

/// One row per canonical fraction with `alpha <= max_alpha`, sorted by
/// `(alpha, beta)`.
pub fn census(max_alpha: i64, exec: Execution) -> Vec<CensusRow> {
    flat_map_range(0..=max_alpha.max(0), exec, |alpha| {
        canonical_fractions(alpha)
            .into_iter()
            .map(|f| {
                let report = report_for(f);
                CensusRow {
                    alpha: f.alpha(),
                    beta: f.beta(),
                    count: report.count,
                    witnesses: report.witnesses.into_iter().map(|w| w.word).collect(),
                }
            })
            .collect()
    })
}

/// Number of canonical fractions with each count `0..=3`.
pub fn histogram(rows: &[CensusRow]) -> [usize; 4] {
    let mut h = [0; 4];
    for row in rows {
        h[row.count.min(3)] += 1;
    }
    h
}
