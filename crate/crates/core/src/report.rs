//! The JSON analysis report. Field names are part of the public interface;
//! `schema/analysis-report.schema.json` documents them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::ClassReport;
use crate::graph::Graph;
use crate::linear_coloring::linear_color;
use crate::oracles::{
    brute_chromatic, brute_lambda, clique_number, independence_number, is_colinear, is_linear, Membership,
};

/// Largest graph for the exhaustive `χ`, `ω`, `α` searches.
pub const MAX_BRUTE_N: usize = 16;
/// Largest graph for the hereditary co-linear / linear tests.
pub const MAX_DEEP_N: usize = 10;
/// Largest graph for the partition-search `λ` oracle.
pub const MAX_BRUTE_LAMBDA_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("{what} is limited to n <= {max} (graph has {n} vertices); pass --force to override")]
    SizeGuard { what: &'static str, n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    /// Run the exponential co-linear and linear membership tests.
    pub deep: bool,
    /// Cross-check `λ` with the partition-search oracle.
    pub brute_lambda: bool,
    /// Ignore the size guards.
    pub force: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Numbers {
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub lambda: usize,
    pub lambda_complement: usize,
    /// Partition-search `λ`, present only when requested.
    pub lambda_brute: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colorings {
    /// Optimal linear coloring of the graph (colors are 1-based).
    pub linear: Vec<usize>,
    /// Optimal linear coloring of the complement; a proper coloring of the graph.
    pub complement_linear: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub numbers: Numbers,
    pub classes: ClassReport,
    /// Present only for deep analyses.
    pub colinear: Option<Membership>,
    /// Present only for deep analyses.
    pub linear: Option<Membership>,
    pub coloring: Colorings,
}

impl AnalysisReport {
    /// `ω ≤ χ ≤ λ(Ḡ)`, `α ≤ λ`, and the partition-search `λ` agrees when present.
    pub fn numbers_consistent(&self) -> bool {
        let x = &self.numbers;
        x.omega <= x.chi
            && x.chi <= x.lambda_complement
            && x.alpha <= x.lambda
            && x.lambda_brute.is_none_or(|b| b == x.lambda)
    }
}

fn guard(what: &'static str, n: usize, max: usize, force: bool) -> Result<(), AnalyzeError> {
    if n > max && !force {
        Err(AnalyzeError::SizeGuard { what, n, max })
    } else {
        Ok(())
    }
}

pub fn analyze(g: &Graph, id: &str, opts: AnalyzeOptions) -> Result<AnalysisReport, AnalyzeError> {
    let n = g.n();
    guard("exact chi/omega/alpha", n, MAX_BRUTE_N, opts.force)?;
    if opts.deep {
        guard("co-linear/linear membership", n, MAX_DEEP_N, opts.force)?;
    }
    if opts.brute_lambda {
        guard("partition-search lambda", n, MAX_BRUTE_LAMBDA_N, opts.force)?;
    }

    let linear = linear_color(g);
    let complement_linear = linear_color(&g.complement());
    Ok(AnalysisReport {
        id: id.to_string(),
        n,
        m: g.edge_count(),
        numbers: Numbers {
            chi: brute_chromatic(g),
            omega: clique_number(g),
            alpha: independence_number(g),
            lambda: linear.k(),
            lambda_complement: complement_linear.k(),
            lambda_brute: opts.brute_lambda.then(|| brute_lambda(g)),
        },
        classes: ClassReport::of(g),
        colinear: opts.deep.then(|| is_colinear(g)),
        linear: opts.deep.then(|| is_linear(g)),
        coloring: Colorings {
            linear: linear.colors().to_vec(),
            complement_linear: complement_linear.colors().to_vec(),
        },
    })
}
