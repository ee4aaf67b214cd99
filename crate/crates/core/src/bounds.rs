//! Closed-form bounds and exact formulas for closeness and generalized
//! closeness in terms of `n`, `m`, diameter, radius and the Zagreb indices.
//!
//! The bound functions take scalars so they can be checked independently of
//! any graph code; [`GraphParameters`] extracts those scalars from a graph.
//! Each generalized-closeness bound has a closeness counterpart written out
//! separately, so the two can be compared at `α = 1/2`.

use crate::error::{Error, Result};
use crate::generators::{TndCase, TndSpec};
use crate::graph::Graph;
use crate::invariants::{
    is_hexagon, structural_flags_with, zagreb_m1, zagreb_m2, Alpha, StructuralFlags,
};
use crate::metrics::{distance_summary, girth, DistanceSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    /// Path/complete-graph interval, valid for every connected graph.
    Global,
    /// Interval in `n`, `m` and the diameter; exact for diameter ≤ 2.
    Diameter,
    /// Triangle- and quadrangle-free interval using `M₁`; exact for
    /// diameter ≤ 3.
    TriangleQuadrangleFree,
    /// Closeness upper bound in `n`, `m` and the radius.
    MooreRadius,
    /// Trees and girth ≥ 7 interval using `M₁`, `M₂`; exact for diameter ≤ 4.
    GirthSevenOrTree,
    /// `T(n, D)` with a single loaded branch.
    TndSingleBranch,
    /// `T(n, D)` with at least two loaded branches.
    TndTwoBranches,
}

impl BoundId {
    pub const ALL: [BoundId; 7] = [
        BoundId::Global,
        BoundId::Diameter,
        BoundId::TriangleQuadrangleFree,
        BoundId::MooreRadius,
        BoundId::GirthSevenOrTree,
        BoundId::TndSingleBranch,
        BoundId::TndTwoBranches,
    ];

    /// Identifier used in serialized reports.
    pub fn code(self) -> &'static str {
        match self {
            BoundId::Global => "T3_1",
            BoundId::Diameter => "T3_2",
            BoundId::TriangleQuadrangleFree => "T3_3",
            BoundId::MooreRadius => "C3_4",
            BoundId::GirthSevenOrTree => "T3_5",
            BoundId::TndSingleBranch => "C3_10_case1",
            BoundId::TndTwoBranches => "C3_10_case2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    Closeness,
    Generalized(Alpha),
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Closeness => "closeness",
            Measure::Generalized(_) => "generalized_closeness",
        }
    }

    pub fn alpha(self) -> Option<Alpha> {
        match self {
            Measure::Closeness => None,
            Measure::Generalized(a) => Some(a),
        }
    }

    /// The value of this measure read from a distance distribution.
    pub fn evaluate(self, summary: &DistanceSummary) -> f64 {
        match self {
            Measure::Closeness => summary.closeness(),
            Measure::Generalized(a) => summary.generalized_closeness(a),
        }
    }
}

/// Which side of the interval the measure is expected to meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    Lower,
    Upper,
    Both,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub id: BoundId,
    pub measure: Measure,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// The preconditions of the bound hold.
    pub applicable: bool,
    /// Set when a sufficient condition for equality holds.
    pub equality: Option<BoundSide>,
}

impl BoundReport {
    fn new(id: BoundId, measure: Measure, lower: Option<f64>, upper: Option<f64>) -> Self {
        BoundReport {
            id,
            measure,
            lower,
            upper,
            applicable: true,
            equality: None,
        }
    }

    pub fn equality_expected(&self) -> bool {
        self.equality.is_some()
    }

    /// True when `value` lies in the interval, allowing a relative slack of
    /// `tol` on each present side.
    pub fn contains(&self, value: f64, tol: f64) -> bool {
        let lower_ok = self
            .lower
            .is_none_or(|lo| value >= lo - tol * scale(lo, value));
        let upper_ok = self
            .upper
            .is_none_or(|hi| value <= hi + tol * scale(hi, value));
        lower_ok && upper_ok
    }

    /// True when `value` meets every side named by `equality`.
    pub fn attained(&self, value: f64, tol: f64) -> bool {
        let close = |side: Option<f64>| side.is_some_and(|b| approx_eq(b, value, tol));
        match self.equality {
            None => false,
            Some(BoundSide::Lower) => close(self.lower),
            Some(BoundSide::Upper) => close(self.upper),
            Some(BoundSide::Both) => close(self.lower) && close(self.upper),
        }
    }
}

fn scale(a: f64, b: f64) -> f64 {
    a.abs().max(b.abs()).max(1.0)
}

/// Relative comparison with an absolute floor of `tol` near zero.
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * scale(a, b)
}

fn pairs(n: usize) -> f64 {
    (n * n.saturating_sub(1)) as f64
}

fn check_diameter(d: u32) -> Result<()> {
    if d < 1 {
        return Err(Error::param("d", "diameter must be at least 1"));
    }
    Ok(())
}

/// `GC(P_n) = 2 Σ_{k=1}^{n-1} (n-k) α^k` in closed form.
pub fn gc_path_closed_form(n: usize, alpha: Alpha) -> Result<f64> {
    if n < 1 {
        return Err(Error::param("n", "must be at least 1"));
    }
    let a = alpha.get();
    let n = n as f64;
    Ok(2.0 * (n * a * (1.0 - a) - a * (1.0 - a.powf(n))) / ((1.0 - a) * (1.0 - a)))
}

/// `C(P_n) = 2n - 4 + 2^{2-n}`.
pub fn closeness_path_closed_form(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::param("n", "must be at least 1"));
    }
    Ok(2.0 * n as f64 - 4.0 + 0.5f64.powi(n as i32 - 2))
}

/// The path minimizes and the complete graph maximizes either measure among
/// connected graphs on `n` vertices.
pub fn bounds_global(n: usize, measure: Measure) -> Result<BoundReport> {
    let (lower, upper) = match measure {
        Measure::Generalized(alpha) => (gc_path_closed_form(n, alpha)?, alpha.get() * pairs(n)),
        Measure::Closeness => (closeness_path_closed_form(n)?, pairs(n) / 2.0),
    };
    Ok(BoundReport::new(
        BoundId::Global,
        measure,
        Some(lower),
        Some(upper),
    ))
}

/// Every non-adjacent pair sits at distance between 2 and `d`.
pub fn bounds_diameter(n: usize, m: usize, d: u32, measure: Measure) -> Result<BoundReport> {
    check_diameter(d)?;
    let nn = pairs(n);
    let m = m as f64;
    let (lower, upper) = match measure {
        Measure::Generalized(alpha) => {
            let a = alpha.get();
            (
                alpha.pow(d) * nn + 2.0 * m * a * (1.0 - alpha.pow(d - 1)),
                a * a * nn + 2.0 * m * a * (1.0 - a),
            )
        }
        Measure::Closeness => (
            nn / 2f64.powi(d as i32) + m * (1.0 - 0.5f64.powi(d as i32 - 1)),
            (nn + 2.0 * m) / 4.0,
        ),
    };
    let mut report = BoundReport::new(BoundId::Diameter, measure, Some(lower), Some(upper));
    if d <= 2 {
        report.equality = Some(BoundSide::Both);
    }
    Ok(report)
}

/// Uses `d(G, 2) = M₁/2 - m`, valid when the graph has neither triangles
/// nor quadrangles; all remaining pairs sit at distance between 3 and `d`.
pub fn bounds_tqfree(
    n: usize,
    m: usize,
    m1: u64,
    d: u32,
    measure: Measure,
    triangle_quadrangle_free: bool,
) -> Result<BoundReport> {
    let nn = pairs(n);
    let (m, m1) = (m as f64, m1 as f64);
    let (lower, upper) = match measure {
        Measure::Generalized(alpha) => {
            let a = alpha.get();
            let near = a * a * (m1 - 2.0 * m) + 2.0 * m * a;
            (
                alpha.pow(d) * (nn - m1) + near,
                alpha.pow(3) * (nn - m1) + near,
            )
        }
        Measure::Closeness => (
            (nn - m1) / 2f64.powi(d as i32) + (m1 + 2.0 * m) / 4.0,
            (nn + m1 + 4.0 * m) / 8.0,
        ),
    };
    let mut report = BoundReport::new(
        BoundId::TriangleQuadrangleFree,
        measure,
        Some(lower),
        Some(upper),
    );
    report.applicable = triangle_quadrangle_free;
    if triangle_quadrangle_free && d <= 3 {
        report.equality = Some(BoundSide::Both);
    }
    Ok(report)
}

/// Closeness upper bound `[n(2n - r) + 4m] / 8` for connected triangle- and
/// quadrangle-free graphs. `extremal` marks Moore graphs of diameter 2 and
/// the hexagon, where the bound is attained.
pub fn bound_moore(
    n: usize,
    m: usize,
    r: u32,
    triangle_quadrangle_free: bool,
    extremal: bool,
) -> BoundReport {
    let n_f = n as f64;
    let upper = (n_f * (2.0 * n_f - r as f64) + 4.0 * m as f64) / 8.0;
    let mut report = BoundReport::new(BoundId::MooreRadius, Measure::Closeness, None, Some(upper));
    report.applicable = triangle_quadrangle_free;
    if triangle_quadrangle_free && extremal {
        report.equality = Some(BoundSide::Upper);
    }
    report
}

/// Trees and graphs of girth at least 7 additionally satisfy
/// `d(G, 3) = M₂ - M₁ + m`; the rest of the pairs sit between 4 and `d`.
pub fn bounds_girth7_or_tree(
    n: usize,
    m: usize,
    m1: u64,
    m2: u64,
    d: u32,
    measure: Measure,
    tree_or_girth_ge_7: bool,
) -> Result<BoundReport> {
    let nn = pairs(n);
    let (m, m1, m2) = (m as f64, m1 as f64, m2 as f64);
    let far = nn + m1 - 2.0 * m - 2.0 * m2;
    let (lower, upper) = match measure {
        Measure::Generalized(alpha) => {
            let a = alpha.get();
            let near = 2.0 * alpha.pow(3) * (m2 + m)
                + a * a * m1 * (1.0 - 2.0 * a)
                + 2.0 * m * a * (1.0 - a);
            (alpha.pow(d) * far + near, alpha.pow(4) * far + near)
        }
        Measure::Closeness => (
            far / 2f64.powi(d as i32) + (m2 + 3.0 * m) / 4.0,
            (nn + m1 + 2.0 * m2 + 10.0 * m) / 16.0,
        ),
    };
    let mut report = BoundReport::new(BoundId::GirthSevenOrTree, measure, Some(lower), Some(upper));
    report.applicable = tree_or_girth_ge_7;
    if tree_or_girth_ge_7 && d <= 4 {
        report.equality = Some(BoundSide::Both);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TndValues {
    pub gc: f64,
    pub closeness: f64,
}

/// Exact closeness and generalized closeness of a tree in `T(n, D)` from
/// `n`, `D` and `M₁`. Both cases use `RM₂ = (D - 1)(n - D - 1)`.
pub fn formulas_tnd(
    n: usize,
    branches: usize,
    m1: u64,
    case: TndCase,
    alpha: Alpha,
) -> Result<TndValues> {
    if branches < 2 {
        return Err(Error::param("D", format!("need D ≥ 2, got {branches}")));
    }
    let min_n = match case {
        TndCase::SingleBranch => branches + 2,
        TndCase::TwoBranches => branches + 3,
    };
    if n < min_n {
        return Err(Error::param(
            "n",
            format!("{case:?} needs n ≥ {min_n} when D = {branches}, got {n}"),
        ));
    }
    let a = alpha.get();
    let rm2 = ((branches - 1) * (n - branches - 1)) as f64;
    let (nn, m1, edges) = (pairs(n), m1 as f64, (n - 1) as f64);
    let tail = a * a * m1 + 2.0 * edges * a * (1.0 - a);
    let values = match case {
        TndCase::SingleBranch => TndValues {
            gc: 2.0 * alpha.pow(3) * rm2 + tail,
            closeness: (rm2 + m1 + 2.0 * edges) / 4.0,
        },
        TndCase::TwoBranches => TndValues {
            gc: alpha.pow(4) * (nn - m1) + 2.0 * alpha.pow(3) * rm2 * (1.0 - a) + tail,
            closeness: (edges * (n as f64 + 8.0) + 2.0 * rm2 + 3.0 * m1) / 16.0,
        },
    };
    Ok(values)
}

/// Report form of [`formulas_tnd`]: a degenerate interval at the exact value.
pub fn tnd_report(spec: &TndSpec, m1: u64, measure: Measure) -> Result<Option<BoundReport>> {
    let Some(case) = spec.case() else {
        return Ok(None);
    };
    let alpha = measure.alpha().unwrap_or(Alpha::HALF);
    let values = formulas_tnd(spec.vertex_count(), spec.branches(), m1, case, alpha)?;
    let value = match measure {
        Measure::Closeness => values.closeness,
        Measure::Generalized(_) => values.gc,
    };
    let id = match case {
        TndCase::SingleBranch => BoundId::TndSingleBranch,
        TndCase::TwoBranches => BoundId::TndTwoBranches,
    };
    let mut report = BoundReport::new(id, measure, Some(value), Some(value));
    report.equality = Some(BoundSide::Both);
    Ok(Some(report))
}

/// The scalars every bound needs, read off a connected graph.
#[derive(Debug, Clone)]
pub struct GraphParameters {
    pub n: usize,
    pub m: usize,
    pub m1: u64,
    pub m2: u64,
    pub radius: u32,
    pub diameter: u32,
    pub flags: StructuralFlags,
    pub is_path: bool,
    pub is_complete: bool,
    pub is_hexagon: bool,
    pub tnd: Option<TndSpec>,
}

impl GraphParameters {
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let summary = distance_summary(g);
        Self::with_summary(g, &summary)
    }

    pub fn with_summary(g: &Graph, summary: &DistanceSummary) -> Result<Self> {
        let (Some(radius), Some(diameter)) = (summary.radius, summary.diameter) else {
            return Err(Error::Disconnected);
        };
        let girth = girth(g);
        let flags = structural_flags_with(g, summary, girth);
        Ok(Self::from_parts(g, summary, girth, flags, radius, diameter))
    }

    pub(crate) fn from_parts(
        g: &Graph,
        summary: &DistanceSummary,
        girth: Option<u32>,
        flags: StructuralFlags,
        radius: u32,
        diameter: u32,
    ) -> Self {
        GraphParameters {
            n: g.n(),
            m: g.m(),
            m1: zagreb_m1(g),
            m2: zagreb_m2(g),
            radius,
            diameter,
            flags,
            is_path: g.is_path(),
            is_complete: g.is_complete(),
            is_hexagon: is_hexagon(g, girth),
            tnd: TndSpec::recognize(g, summary),
        }
    }

    /// Every bound report for `measure`, in [`BoundId`] order. Bounds that do
    /// not exist for this graph (single vertex, non-`T(n, D)` trees, the
    /// closeness-only radius bound under a generalized measure) are omitted;
    /// bounds whose structural preconditions fail are returned with
    /// `applicable = false`.
    pub fn reports(&self, measure: Measure) -> Result<Vec<BoundReport>> {
        let mut out = Vec::with_capacity(BoundId::ALL.len());
        let mut global = bounds_global(self.n, measure)?;
        global.equality = match (self.is_path, self.is_complete) {
            (true, true) => Some(BoundSide::Both),
            (true, false) => Some(BoundSide::Lower),
            (false, true) => Some(BoundSide::Upper),
            (false, false) => None,
        };
        out.push(global);
        if self.diameter >= 1 {
            out.push(bounds_diameter(self.n, self.m, self.diameter, measure)?);
        }
        let tq_free = self.flags.triangle_quadrangle_free();
        out.push(bounds_tqfree(
            self.n,
            self.m,
            self.m1,
            self.diameter,
            measure,
            tq_free,
        )?);
        if measure == Measure::Closeness {
            out.push(bound_moore(
                self.n,
                self.m,
                self.radius,
                tq_free,
                self.flags.is_moore_diam2 || self.is_hexagon,
            ));
        }
        out.push(bounds_girth7_or_tree(
            self.n,
            self.m,
            self.m1,
            self.m2,
            self.diameter,
            measure,
            self.flags.tree_or_girth_ge_7(),
        )?);
        if let Some(spec) = &self.tnd {
            out.extend(tnd_report(spec, self.m1, measure)?);
        }
        Ok(out)
    }
}
