//! Individual checks, each evaluated on one graph at a time.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{
    approx_eq, closeness_path_closed_form, gc_path_closed_form, BoundId, BoundReport,
    GraphParameters, Measure,
};
use crate::error::{Error, Result};
use crate::generators::path;
use crate::graph::Graph;
use crate::invariants::{is_hexagon, structural_flags_with, zagreb_m1, zagreb_m2, Alpha};
use crate::invariants::{reduced_zagreb_m2, StructuralFlags};
use crate::metrics::{distance_summary, girth, DistanceSummary};

/// Tolerance for comparisons where both sides come from the same distances.
pub const SAME_DATA_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// Path minimizes generalized closeness among trees of the same order.
    PathMinimalTree,
    /// `d(G, 2) = M₁/2 - m` for triangle- and quadrangle-free graphs.
    DistanceTwoPairs,
    /// `M₁ ≤ n(n + 1 - r)`, equality exactly for Moore graphs of diameter 2
    /// and the hexagon.
    ZagrebRadius,
    /// `W_P ≤ M₂ - M₁ + m`, equality exactly for trees and girth ≥ 7.
    WienerPolarity,
    GlobalBounds,
    DiameterBounds,
    TriangleQuadrangleFreeBounds,
    MooreRadiusBound,
    GirthSevenOrTreeBounds,
    TndFormulas,
    ReducedZagreb,
    ClosenessConsistency,
    PathClosedForm,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::PathMinimalTree,
        CheckId::DistanceTwoPairs,
        CheckId::ZagrebRadius,
        CheckId::WienerPolarity,
        CheckId::GlobalBounds,
        CheckId::DiameterBounds,
        CheckId::TriangleQuadrangleFreeBounds,
        CheckId::MooreRadiusBound,
        CheckId::GirthSevenOrTreeBounds,
        CheckId::TndFormulas,
        CheckId::ReducedZagreb,
        CheckId::ClosenessConsistency,
        CheckId::PathClosedForm,
    ];

    pub fn code(self) -> &'static str {
        match self {
            CheckId::PathMinimalTree => "thm2_5",
            CheckId::DistanceTwoPairs => "thm2_6",
            CheckId::ZagrebRadius => "thm2_7",
            CheckId::WienerPolarity => "thm2_8",
            CheckId::GlobalBounds => "thm3_1",
            CheckId::DiameterBounds => "thm3_2",
            CheckId::TriangleQuadrangleFreeBounds => "thm3_3",
            CheckId::MooreRadiusBound => "cor3_4",
            CheckId::GirthSevenOrTreeBounds => "thm3_5",
            CheckId::TndFormulas => "cor3_10",
            CheckId::ReducedZagreb => "rm2_identity",
            CheckId::ClosenessConsistency => "gc_closeness",
            CheckId::PathClosedForm => "path_closed_form",
        }
    }

    /// Exact integer identities and inequalities; no tolerance applies.
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            CheckId::DistanceTwoPairs
                | CheckId::ZagrebRadius
                | CheckId::WienerPolarity
                | CheckId::ReducedZagreb
        )
    }

    fn bound(self) -> Option<BoundId> {
        match self {
            CheckId::GlobalBounds => Some(BoundId::Global),
            CheckId::DiameterBounds => Some(BoundId::Diameter),
            CheckId::TriangleQuadrangleFreeBounds => Some(BoundId::TriangleQuadrangleFree),
            CheckId::MooreRadiusBound => Some(BoundId::MooreRadius),
            CheckId::GirthSevenOrTreeBounds => Some(BoundId::GirthSevenOrTree),
            _ => None,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.code() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "check",
                name: s.to_string(),
            })
    }
}

/// Outcome of one check on one graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// The check's preconditions do not hold for this graph.
    Skip,
    Pass {
        equality: bool,
        /// Distance to the nearest violated side, when meaningful.
        slack: Option<f64>,
    },
    Fail {
        alpha: Option<f64>,
        detail: String,
    },
}

/// Everything the checks need about one graph, computed once.
pub struct Profile<'g> {
    pub graph: &'g Graph,
    pub summary: DistanceSummary,
    pub girth: Option<u32>,
    pub flags: StructuralFlags,
    pub m1: u64,
    pub m2: u64,
    pub rm2: u64,
    pub params: Option<GraphParameters>,
}

impl<'g> Profile<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let summary = distance_summary(graph);
        let girth = girth(graph);
        let flags = structural_flags_with(graph, &summary, girth);
        let params = match (summary.radius, summary.diameter) {
            (Some(r), Some(d)) => Some(GraphParameters::from_parts(
                graph, &summary, girth, flags, r, d,
            )),
            _ => None,
        };
        Profile {
            graph,
            m1: zagreb_m1(graph),
            m2: zagreb_m2(graph),
            rm2: reduced_zagreb_m2(graph),
            summary,
            girth,
            flags,
            params,
        }
    }
}

/// Generalized closeness of `P_n` at each α, by BFS.
#[derive(Debug, Default)]
pub struct PathTable {
    rows: Vec<Vec<f64>>,
}

impl PathTable {
    pub fn new(max_n: usize, alphas: &[Alpha]) -> Self {
        let rows = (0..=max_n)
            .map(|n| match n {
                0 => vec![0.0; alphas.len()],
                _ => {
                    let s = distance_summary(&path(n).expect("n ≥ 1"));
                    alphas.iter().map(|&a| s.generalized_closeness(a)).collect()
                }
            })
            .collect();
        PathTable { rows }
    }

    fn get(&self, n: usize, alphas: &[Alpha]) -> Vec<f64> {
        match self.rows.get(n) {
            Some(row) => row.clone(),
            None => {
                let s = distance_summary(&path(n).expect("n ≥ 1"));
                alphas.iter().map(|&a| s.generalized_closeness(a)).collect()
            }
        }
    }
}

pub struct CheckContext<'a> {
    pub alphas: &'a [Alpha],
    pub tolerance: f64,
    pub paths: &'a PathTable,
}

/// Folds per-α outcomes into one verdict: fail on the first failure, else
/// pass with the smallest slack, counting equality only if every sample hit.
struct Tally {
    equality: bool,
    slack: Option<f64>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            equality: true,
            slack: None,
        }
    }

    fn record(&mut self, equality: bool, slack: Option<f64>) {
        self.equality &= equality;
        if let Some(s) = slack {
            let s = s.max(0.0);
            self.slack = Some(self.slack.map_or(s, |old: f64| old.min(s)));
        }
    }

    fn finish(self) -> Verdict {
        Verdict::Pass {
            equality: self.equality,
            slack: self.slack,
        }
    }
}

fn fail(alpha: Option<f64>, detail: String) -> Verdict {
    Verdict::Fail { alpha, detail }
}

fn measures(alphas: &[Alpha]) -> impl Iterator<Item = Measure> + '_ {
    alphas
        .iter()
        .map(|&a| Measure::Generalized(a))
        .chain(std::iter::once(Measure::Closeness))
}

fn check_bound_report(
    report: &BoundReport,
    value: f64,
    tol: f64,
    tally: &mut Tally,
) -> Option<Verdict> {
    let alpha = report.measure.alpha().map(Alpha::get);
    if !report.contains(value, tol) {
        return Some(fail(
            alpha,
            format!(
                "{} {} = {value} outside [{:?}, {:?}]",
                report.id.code(),
                report.measure.name(),
                report.lower,
                report.upper
            ),
        ));
    }
    if report.equality_expected() && !report.attained(value, tol) {
        return Some(fail(
            alpha,
            format!(
                "{} {} = {value} expected to meet {:?} of [{:?}, {:?}]",
                report.id.code(),
                report.measure.name(),
                report.equality,
                report.lower,
                report.upper
            ),
        ));
    }
    let below = report.lower.map(|lo| value - lo);
    let above = report.upper.map(|hi| hi - value);
    let slack = match (below, above) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    tally.record(report.equality_expected(), slack);
    None
}

fn bound_check(id: BoundId, p: &Profile, ctx: &CheckContext) -> Result<Verdict> {
    let Some(params) = &p.params else {
        return Ok(Verdict::Skip);
    };
    let mut tally = Tally::new();
    let mut seen = false;
    for measure in measures(ctx.alphas) {
        let reports = params.reports(measure)?;
        let Some(report) = reports.iter().find(|r| r.id == id) else {
            continue;
        };
        if !report.applicable {
            continue;
        }
        seen = true;
        let value = measure.evaluate(&p.summary);
        if let Some(v) = check_bound_report(report, value, ctx.tolerance, &mut tally) {
            return Ok(v);
        }
    }
    if !seen {
        return Ok(Verdict::Skip);
    }
    Ok(tally.finish())
}

/// Runs one check against a prepared profile.
pub fn evaluate(check: CheckId, p: &Profile, ctx: &CheckContext) -> Result<Verdict> {
    let g = p.graph;
    let (n, m) = (g.n() as i64, g.m() as i64);
    let (m1, m2) = (p.m1 as i64, p.m2 as i64);
    let tol = ctx.tolerance;
    let verdict = match check {
        CheckId::PathMinimalTree => {
            if !p.flags.is_tree {
                return Ok(Verdict::Skip);
            }
            let reference = ctx.paths.get(g.n(), ctx.alphas);
            let mut tally = Tally::new();
            for (&alpha, path_gc) in ctx.alphas.iter().zip(reference) {
                let value = p.summary.generalized_closeness(alpha);
                if value < path_gc - tol * path_gc.abs().max(value.abs()).max(1.0) {
                    return Ok(fail(
                        Some(alpha.get()),
                        format!("GC(T) = {value} below GC(P_n) = {path_gc}"),
                    ));
                }
                tally.record(approx_eq(value, path_gc, tol), Some(value - path_gc));
            }
            tally.finish()
        }
        CheckId::DistanceTwoPairs => {
            if !p.flags.triangle_quadrangle_free() {
                return Ok(Verdict::Skip);
            }
            let twice_pairs = 2 * p.summary.pairs_at(2) as i64;
            if twice_pairs == m1 - 2 * m {
                Verdict::Pass {
                    equality: true,
                    slack: Some(0.0),
                }
            } else {
                fail(
                    None,
                    format!(
                        "d(G,2) = {} but M1/2 - m = {}",
                        twice_pairs / 2,
                        (m1 - 2 * m) as f64 / 2.0
                    ),
                )
            }
        }
        CheckId::ZagrebRadius => {
            let (Some(params), true) = (&p.params, p.flags.triangle_quadrangle_free()) else {
                return Ok(Verdict::Skip);
            };
            let bound = n * (n + 1 - params.radius as i64);
            let extremal = p.flags.is_moore_diam2 || is_hexagon(g, p.girth);
            if m1 > bound {
                fail(None, format!("M1 = {m1} exceeds n(n+1-r) = {bound}"))
            } else if (m1 == bound) != extremal {
                fail(
                    None,
                    format!("M1 = {m1}, n(n+1-r) = {bound}, Moore-or-hexagon = {extremal}"),
                )
            } else {
                Verdict::Pass {
                    equality: m1 == bound,
                    slack: Some((bound - m1) as f64),
                }
            }
        }
        CheckId::WienerPolarity => {
            if !p.summary.connected {
                return Ok(Verdict::Skip);
            }
            let wp = p.summary.wiener_polarity() as i64;
            let bound = m2 - m1 + m;
            let expected = p.flags.tree_or_girth_ge_7();
            if wp > bound {
                fail(None, format!("W_P = {wp} exceeds M2 - M1 + m = {bound}"))
            } else if (wp == bound) != expected {
                fail(
                    None,
                    format!("W_P = {wp}, M2 - M1 + m = {bound}, tree-or-girth≥7 = {expected}"),
                )
            } else {
                Verdict::Pass {
                    equality: wp == bound,
                    slack: Some((bound - wp) as f64),
                }
            }
        }
        CheckId::GlobalBounds
        | CheckId::DiameterBounds
        | CheckId::TriangleQuadrangleFreeBounds
        | CheckId::MooreRadiusBound
        | CheckId::GirthSevenOrTreeBounds => {
            let id = check.bound().expect("bound-backed check");
            return bound_check(id, p, ctx);
        }
        CheckId::TndFormulas => {
            let Some(params) = &p.params else {
                return Ok(Verdict::Skip);
            };
            if params.tnd.as_ref().and_then(|s| s.case()).is_none() {
                return Ok(Verdict::Skip);
            }
            let mut tally = Tally::new();
            for measure in measures(ctx.alphas) {
                let reports = params.reports(measure)?;
                let report = reports
                    .iter()
                    .find(|r| matches!(r.id, BoundId::TndSingleBranch | BoundId::TndTwoBranches))
                    .expect("recognized T(n, D) tree yields a formula report");
                let value = measure.evaluate(&p.summary);
                if let Some(v) = check_bound_report(report, value, tol, &mut tally) {
                    return Ok(v);
                }
            }
            tally.finish()
        }
        CheckId::ReducedZagreb => {
            if p.rm2 as i64 == m2 - m1 + m {
                Verdict::Pass {
                    equality: true,
                    slack: Some(0.0),
                }
            } else {
                fail(
                    None,
                    format!("RM2 = {} but M2 - M1 + m = {}", p.rm2, m2 - m1 + m),
                )
            }
        }
        CheckId::ClosenessConsistency => {
            let c = p.summary.closeness();
            let gc = p.summary.generalized_closeness(Alpha::HALF);
            if (gc - c).abs() <= SAME_DATA_TOLERANCE * (1.0 + c) {
                Verdict::Pass {
                    equality: true,
                    slack: Some(0.0),
                }
            } else {
                fail(Some(0.5), format!("GC(1/2) = {gc} but C = {c}"))
            }
        }
        CheckId::PathClosedForm => {
            if !(g.is_path() && g.n() >= 2) {
                return Ok(Verdict::Skip);
            }
            let mut tally = Tally::new();
            for &alpha in ctx.alphas {
                let closed = gc_path_closed_form(g.n(), alpha)?;
                let bfs = p.summary.generalized_closeness(alpha);
                if !approx_eq(closed, bfs, tol) {
                    return Ok(fail(
                        Some(alpha.get()),
                        format!("closed form {closed} but BFS {bfs}"),
                    ));
                }
                tally.record(true, Some(0.0));
            }
            let closed = closeness_path_closed_form(g.n())?;
            let bfs = p.summary.closeness();
            if !approx_eq(closed, bfs, tol) {
                return Ok(fail(
                    Some(0.5),
                    format!("2n - 4 + 0.5^(n-2) = {closed} but BFS closeness {bfs}"),
                ));
            }
            tally.finish()
        }
    };
    Ok(verdict)
}

/// Convenience wrapper: profile `g` and run one check.
pub fn evaluate_graph(check: CheckId, g: &Graph, ctx: &CheckContext) -> Result<Verdict> {
    evaluate(check, &Profile::new(g), ctx)
}
