//! Degree-formula fast path versus the all-pairs BFS sweep, on families
//! where a formula is exact.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::bounds::{
    approx_eq, bounds_diameter, bounds_girth7_or_tree, bounds_tqfree, formulas_tnd, Measure,
};
use crate::error::{Error, Result};
use crate::generators::{complete, cycle, path, star, t_tree, TndCase, TndSpec};
use crate::graph::Graph;
use crate::invariants::{zagreb_m1, zagreb_m2, Alpha};
use crate::metrics::distance_summary;

pub const VALUE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchFamily {
    Star,
    Complete,
    /// `T(n, 2)` with a single loaded branch.
    Bistar,
    /// `T(n, 4)` with two loaded branches.
    Tnd,
    Path,
    Cycle,
}

impl BenchFamily {
    pub const ALL: [BenchFamily; 6] = [
        BenchFamily::Star,
        BenchFamily::Complete,
        BenchFamily::Bistar,
        BenchFamily::Tnd,
        BenchFamily::Path,
        BenchFamily::Cycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchFamily::Star => "star",
            BenchFamily::Complete => "complete",
            BenchFamily::Bistar => "bistar",
            BenchFamily::Tnd => "tnd",
            BenchFamily::Path => "path",
            BenchFamily::Cycle => "cycle",
        }
    }

    fn no_formula(self, n: usize, reason: &str) -> Error {
        Error::NoExactFormula {
            family: self.name().to_string(),
            n,
            reason: reason.to_string(),
        }
    }

    /// The family member on `n` vertices, rejecting sizes where no formula
    /// is exact.
    pub fn build(self, n: usize) -> Result<Graph> {
        match self {
            BenchFamily::Star if n >= 2 => star(n),
            BenchFamily::Complete if n >= 2 => complete(n),
            BenchFamily::Bistar if n >= 4 => Ok(t_tree(&bistar_spec(n))),
            BenchFamily::Tnd if n >= 7 => Ok(t_tree(&two_branch_spec(n))),
            BenchFamily::Path if (2..=5).contains(&n) => path(n),
            BenchFamily::Cycle if (3..=9).contains(&n) => cycle(n),
            BenchFamily::Path => Err(self.no_formula(n, "diameter exceeds 4")),
            BenchFamily::Cycle => Err(self.no_formula(n, "needs 3 ≤ n ≤ 9")),
            _ => Err(self.no_formula(n, "family member too small")),
        }
    }

    /// Closeness from degrees alone, using the structural diameter of the
    /// family. Runs in `O(n + m)`.
    pub fn formula_closeness(self, g: &Graph) -> Result<f64> {
        let (n, m) = (g.n(), g.m());
        let report = match self {
            BenchFamily::Star => bounds_diameter(n, m, (n as u32 - 1).min(2), Measure::Closeness)?,
            BenchFamily::Complete => bounds_diameter(n, m, 1, Measure::Closeness)?,
            BenchFamily::Bistar | BenchFamily::Tnd => {
                let (branches, case) = match self {
                    BenchFamily::Bistar => (2, TndCase::SingleBranch),
                    _ => (4, TndCase::TwoBranches),
                };
                return Ok(formulas_tnd(n, branches, zagreb_m1(g), case, Alpha::HALF)?.closeness);
            }
            BenchFamily::Path => bounds_girth7_or_tree(
                n,
                m,
                zagreb_m1(g),
                zagreb_m2(g),
                n as u32 - 1,
                Measure::Closeness,
                true,
            )?,
            BenchFamily::Cycle => {
                let d = n as u32 / 2;
                match n {
                    3 | 4 => bounds_diameter(n, m, d, Measure::Closeness)?,
                    5..=7 => bounds_tqfree(n, m, zagreb_m1(g), d, Measure::Closeness, true)?,
                    _ => bounds_girth7_or_tree(
                        n,
                        m,
                        zagreb_m1(g),
                        zagreb_m2(g),
                        d,
                        Measure::Closeness,
                        true,
                    )?,
                }
            }
        };
        report
            .lower
            .ok_or_else(|| self.no_formula(n, "bound has no lower side"))
    }
}

impl fmt::Display for BenchFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BenchFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "benchmark family",
                name: s.to_string(),
            })
    }
}

fn bistar_spec(n: usize) -> TndSpec {
    TndSpec::new(vec![n - 3, 0]).expect("two branches").0
}

fn two_branch_spec(n: usize) -> TndSpec {
    let rest = n - 5;
    TndSpec::new(vec![rest.div_ceil(2), rest / 2, 0, 0])
        .expect("four branches")
        .0
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: BenchFamily,
    pub n: usize,
    pub bfs_value: f64,
    pub formula_value: f64,
    pub values_equal: bool,
    /// Mean wall-clock seconds per repetition.
    pub bfs_seconds: f64,
    pub formula_seconds: f64,
}

/// Times both routes on each size. Values are compared before any timing
/// is taken; rows with `values_equal = false` are still reported.
pub fn fastpath_benchmark(
    family: BenchFamily,
    sizes: &[usize],
    repetitions: usize,
) -> Result<Vec<BenchRow>> {
    let reps = repetitions.max(1);
    let graphs = sizes
        .iter()
        .map(|&n| family.build(n))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let bfs_value = distance_summary(g).closeness();
        let formula_value = family.formula_closeness(g)?;
        let values_equal = approx_eq(bfs_value, formula_value, VALUE_TOLERANCE);

        let start = Instant::now();
        for _ in 0..reps {
            std::hint::black_box(distance_summary(std::hint::black_box(g)).closeness());
        }
        let bfs_seconds = start.elapsed().as_secs_f64() / reps as f64;

        let start = Instant::now();
        for _ in 0..reps {
            std::hint::black_box(family.formula_closeness(std::hint::black_box(g))?);
        }
        let formula_seconds = start.elapsed().as_secs_f64() / reps as f64;

        rows.push(BenchRow {
            family,
            n: g.n(),
            bfs_value,
            formula_value,
            values_equal,
            bfs_seconds,
            formula_seconds,
        });
    }
    Ok(rows)
}
