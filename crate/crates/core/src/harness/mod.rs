//! Corpus-wide verification of every identity, inequality and closed form,
//! with a deterministic, diff-stable JSON report.

pub mod bench;
pub mod checks;
pub mod corpus;

use rayon::prelude::*;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub use checks::{evaluate, evaluate_graph, CheckContext, CheckId, PathTable, Profile, Verdict};
pub use corpus::{corpus, tnd_sweep, CorpusConfig, CorpusItem, Family};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{default_alpha_grid, Alpha};
use crate::io::{from_graph6, to_graph6};
use crate::json::real;

/// Per-check cap on recorded counterexamples and equality witnesses.
pub const MAX_RECORDED: usize = 10;
const BATCH: usize = 4096;
const PATH_TABLE_N: usize = 128;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub corpus: CorpusConfig,
    pub alpha_grid: Vec<Alpha>,
    /// Relative tolerance for floating-point comparisons.
    pub tolerance: f64,
    /// Checks to run; empty means all of them.
    pub checks: Vec<CheckId>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            corpus: CorpusConfig::default(),
            alpha_grid: default_alpha_grid(),
            tolerance: 1e-9,
            checks: Vec::new(),
        }
    }
}

impl SuiteConfig {
    pub fn selected_checks(&self) -> Vec<CheckId> {
        if self.checks.is_empty() {
            CheckId::ALL.to_vec()
        } else {
            let mut out = self.checks.clone();
            out.sort();
            out.dedup();
            out
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub corpus_index: usize,
    pub label: String,
    pub graph6: String,
    pub alpha: Option<f64>,
    pub detail: String,
}

impl Counterexample {
    pub fn graph(&self) -> Result<Graph> {
        from_graph6(&self.graph6)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRecord {
    pub check: CheckId,
    pub graphs_tested: usize,
    pub passes: usize,
    pub failures: usize,
    pub equality_hits: usize,
    /// Smallest slack over passing graphs.
    pub worst_slack: Option<f64>,
    pub equality_witnesses: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckRecord {
    fn new(check: CheckId) -> Self {
        CheckRecord {
            check,
            graphs_tested: 0,
            passes: 0,
            failures: 0,
            equality_hits: 0,
            worst_slack: None,
            equality_witnesses: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    fn absorb(&mut self, item: &CorpusItem, verdict: Verdict) -> Result<()> {
        match verdict {
            Verdict::Skip => {}
            Verdict::Pass { equality, slack } => {
                self.graphs_tested += 1;
                self.passes += 1;
                if equality {
                    self.equality_hits += 1;
                    if item.family == Family::Named
                        && self.equality_witnesses.len() < MAX_RECORDED
                        && !self.equality_witnesses.contains(&item.label)
                    {
                        self.equality_witnesses.push(item.label.clone());
                    }
                }
                if let Some(s) = slack {
                    self.worst_slack = Some(self.worst_slack.map_or(s, |w| w.min(s)));
                }
            }
            Verdict::Fail { alpha, detail } => {
                self.graphs_tested += 1;
                self.failures += 1;
                if self.counterexamples.len() < MAX_RECORDED {
                    self.counterexamples.push(Counterexample {
                        corpus_index: item.index,
                        label: item.label.clone(),
                        graph6: to_graph6(&item.graph)?,
                        alpha,
                        detail,
                    });
                }
            }
        }
        Ok(())
    }

    fn to_json(&self) -> Value {
        let counterexamples: Vec<Value> = self
            .counterexamples
            .iter()
            .map(|c| {
                json!({
                    "corpus_index": c.corpus_index,
                    "label": c.label,
                    "graph6": c.graph6,
                    "alpha": c.alpha.map_or(Value::Null, real),
                    "detail": c.detail,
                })
            })
            .collect();
        json!({
            "check_id": self.check.code(),
            "exact": self.check.is_exact(),
            "graphs_tested": self.graphs_tested,
            "passes": self.passes,
            "failures": self.failures,
            "equality_hits": self.equality_hits,
            "worst_slack": self.worst_slack.map_or(Value::Null, real),
            "equality_witnesses": self.equality_witnesses,
            "counterexamples": counterexamples,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub corpus_digest: String,
    pub corpus_size: usize,
    pub alpha_grid: Vec<Alpha>,
    pub tolerance: f64,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn total_failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn record(&self, check: CheckId) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("corpus_digest".into(), json!(self.corpus_digest));
        root.insert("corpus_size".into(), json!(self.corpus_size));
        root.insert(
            "alpha_grid".into(),
            Value::Array(self.alpha_grid.iter().map(|a| real(a.get())).collect()),
        );
        root.insert("tolerance".into(), real(self.tolerance));
        root.insert("total_failures".into(), json!(self.total_failures()));
        root.insert(
            "checks".into(),
            Value::Array(self.checks.iter().map(CheckRecord::to_json).collect()),
        );
        Value::Object(root)
    }
}

/// Evaluates the selected checks on every corpus graph.
///
/// Graphs are profiled in parallel batches and folded into the report in
/// corpus order, so the output is identical for any thread count.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport> {
    if !config.tolerance.is_finite() {
        return Err(Error::param("tolerance", "must be finite"));
    }
    if config.alpha_grid.is_empty() {
        return Err(Error::param("alpha", "grid must not be empty"));
    }
    let checks = config.selected_checks();
    let paths = PathTable::new(PATH_TABLE_N, &config.alpha_grid);
    let ctx = CheckContext {
        alphas: &config.alpha_grid,
        tolerance: config.tolerance,
        paths: &paths,
    };
    let mut records: Vec<CheckRecord> = checks.iter().map(|&c| CheckRecord::new(c)).collect();
    let mut hasher = Sha256::new();
    let mut size = 0;

    let mut items = corpus(&config.corpus)?.peekable();
    while items.peek().is_some() {
        let batch: Vec<CorpusItem> = items.by_ref().take(BATCH).collect();
        let verdicts: Vec<Result<Vec<Verdict>>> = batch
            .par_iter()
            .map(|item| {
                let profile = Profile::new(&item.graph);
                checks
                    .iter()
                    .map(|&c| evaluate(c, &profile, &ctx))
                    .collect()
            })
            .collect();
        for (item, row) in batch.iter().zip(verdicts) {
            hasher.update(to_graph6(&item.graph)?.as_bytes());
            hasher.update(b"\n");
            size += 1;
            for (record, verdict) in records.iter_mut().zip(row?) {
                record.absorb(item, verdict)?;
            }
        }
    }

    Ok(VerificationReport {
        corpus_digest: hex::encode(hasher.finalize()),
        corpus_size: size,
        alpha_grid: config.alpha_grid.clone(),
        tolerance: config.tolerance,
        checks: records,
    })
}
