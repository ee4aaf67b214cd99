//! Closeness, generalized closeness, Zagreb-type degree indices, the Wiener
//! polarity index and the structural predicates the bounds depend on.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{distance_summary, girth, DistanceSummary};

/// Base of the generalized closeness, restricted to the open interval (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Alpha(f64);

impl Alpha {
    pub const HALF: Alpha = Alpha(0.5);

    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value < 1.0 {
            Ok(Alpha(value))
        } else {
            Err(Error::AlphaOutOfRange(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn pow(self, k: u32) -> f64 {
        self.0.powi(k as i32)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Alpha::new(value)
    }
}

/// The default sampling grid for property suites.
pub fn default_alpha_grid() -> Vec<Alpha> {
    [0.1, 0.25, 0.5, 0.75, 0.9].into_iter().map(Alpha).collect()
}

impl DistanceSummary {
    /// `GC(G) = Σ_i Σ_{j≠i} α^d(i,j)`. Unreachable pairs contribute nothing.
    pub fn generalized_closeness(&self, alpha: Alpha) -> f64 {
        self.ordered_pair_sum(|k| alpha.pow(k))
    }

    /// `C(G) = Σ_i Σ_{j≠i} 2^-d(i,j)`.
    pub fn closeness(&self) -> f64 {
        self.ordered_pair_sum(|k| (-(k as f64)).exp2())
    }

    /// Number of pairs at distance 3.
    pub fn wiener_polarity(&self) -> u64 {
        self.pairs_at(3)
    }
}

pub fn closeness(g: &Graph) -> f64 {
    distance_summary(g).closeness()
}

pub fn generalized_closeness(g: &Graph, alpha: f64) -> Result<f64> {
    let alpha = Alpha::new(alpha)?;
    Ok(distance_summary(g).generalized_closeness(alpha))
}

/// First Zagreb index: sum of squared degrees.
pub fn zagreb_m1(g: &Graph) -> u64 {
    g.degrees().map(|d| (d * d) as u64).sum()
}

/// Second Zagreb index: sum over edges of the product of endpoint degrees.
pub fn zagreb_m2(g: &Graph) -> u64 {
    g.edges()
        .map(|(u, v)| (g.degree(u) * g.degree(v)) as u64)
        .sum()
}

/// Reduced second Zagreb index: sum over edges of `(d_u - 1)(d_v - 1)`.
pub fn reduced_zagreb_m2(g: &Graph) -> u64 {
    g.edges()
        .map(|(u, v)| ((g.degree(u) - 1) * (g.degree(v) - 1)) as u64)
        .sum()
}

pub fn wiener_polarity(g: &Graph) -> u64 {
    distance_summary(g).wiener_polarity()
}

/// True when some edge has a common neighbor of both endpoints.
pub fn has_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    })
}

/// True when two distinct vertices share at least two common neighbors.
pub fn has_quadrangle(g: &Graph) -> bool {
    let n = g.n();
    let mut seen_from = vec![usize::MAX; n];
    for u in 0..n {
        for &w in g.neighbors(u) {
            for &v in g.neighbors(w) {
                if v == u {
                    continue;
                }
                if seen_from[v] == u {
                    return true;
                }
                seen_from[v] = u;
            }
        }
    }
    false
}

/// Structural predicates the bounds are conditioned on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StructuralFlags {
    pub is_tree: bool,
    pub triangle_free: bool,
    pub quadrangle_free: bool,
    pub girth_ge_7: bool,
    pub is_moore_diam2: bool,
}

impl StructuralFlags {
    pub fn triangle_quadrangle_free(&self) -> bool {
        self.triangle_free && self.quadrangle_free
    }

    pub fn tree_or_girth_ge_7(&self) -> bool {
        self.is_tree || self.girth_ge_7
    }
}

/// Moore graph of diameter 2: k-regular, diameter 2, girth 5, `n = k² + 1`.
pub fn is_moore_diam2(g: &Graph, summary: &DistanceSummary, girth: Option<u32>) -> bool {
    match g.is_regular() {
        Some(k) => summary.diameter == Some(2) && girth == Some(5) && g.n() == k * k + 1,
        None => false,
    }
}

/// The hexagon, identified by its invariant signature: six vertices,
/// 2-regular, connected, girth 6.
pub fn is_hexagon(g: &Graph, girth: Option<u32>) -> bool {
    g.n() == 6 && g.is_regular() == Some(2) && g.is_connected() && girth == Some(6)
}

pub fn structural_flags(g: &Graph) -> StructuralFlags {
    let summary = distance_summary(g);
    let girth = girth(g);
    structural_flags_with(g, &summary, girth)
}

pub(crate) fn structural_flags_with(
    g: &Graph,
    summary: &DistanceSummary,
    girth: Option<u32>,
) -> StructuralFlags {
    StructuralFlags {
        is_tree: summary.connected && g.n() >= 1 && g.m() + 1 == g.n(),
        triangle_free: !has_triangle(g),
        quadrangle_free: !has_quadrangle(g),
        girth_ge_7: girth.is_none_or(|len| len >= 7),
        is_moore_diam2: is_moore_diam2(g, summary, girth),
    }
}

/// All measures of one graph, computed from a single distance sweep.
#[derive(Debug, Clone)]
pub struct InvariantSet {
    pub n: usize,
    pub m: usize,
    pub closeness: f64,
    /// Generalized closeness at each requested α, in request order.
    pub gc_alpha: Vec<(Alpha, f64)>,
    pub m1: u64,
    pub m2: u64,
    pub rm2: u64,
    pub wiener_polarity: u64,
    pub girth: Option<u32>,
    pub flags: StructuralFlags,
    pub summary: DistanceSummary,
}

impl InvariantSet {
    pub fn compute(g: &Graph, alphas: &[Alpha]) -> Self {
        let summary = distance_summary(g);
        let girth = girth(g);
        let flags = structural_flags_with(g, &summary, girth);
        InvariantSet {
            n: g.n(),
            m: g.m(),
            closeness: summary.closeness(),
            gc_alpha: alphas
                .iter()
                .map(|&a| (a, summary.generalized_closeness(a)))
                .collect(),
            m1: zagreb_m1(g),
            m2: zagreb_m2(g),
            rm2: reduced_zagreb_m2(g),
            wiener_polarity: summary.wiener_polarity(),
            girth,
            flags,
            summary,
        }
    }

    pub fn connected(&self) -> bool {
        self.summary.connected
    }
}
