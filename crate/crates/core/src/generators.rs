//! Named graph families, the `T(n, D)` trees, Prüfer decoding, exhaustive
//! enumeration and seeded random connected graphs.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::DistanceSummary;

/// Largest vertex count accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_N: usize = 6;

fn require_min(name: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::param(
            name,
            format!("must be at least {min}, got {n}"),
        ))
    } else {
        Ok(())
    }
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("generator produced an invalid edge")
}

pub fn path(n: usize) -> Result<Graph> {
    require_min("n", n, 1)?;
    Ok(build(n, (1..n).map(|i| (i - 1, i))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require_min("n", n, 3)?;
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn complete(n: usize) -> Result<Graph> {
    require_min("n", n, 1)?;
    Ok(build(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    ))
}

/// The star `S_n`: vertex 0 joined to `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph> {
    require_min("n", n, 1)?;
    Ok(build(n, (1..n).map(|v| (0, v))))
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i`–`i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    build(10, outer.chain(inner).chain(spokes))
}

pub fn pentagon() -> Graph {
    build(5, (0..5).map(|i| (i, (i + 1) % 5)))
}

/// Parameters of a tree `T(r_1, …, r_D)`: a star with `D` leaves `v_i`,
/// each carrying `r_i` pendant vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TndSpec {
    pendants: Vec<usize>,
}

/// Which closed form applies to a `T(n, D)` tree with `n > D + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TndCase {
    /// Only `r_1 > 0`; the tree is a bistar of diameter 3.
    SingleBranch,
    /// `r_1, r_2 > 0`; diameter 4.
    TwoBranches,
}

impl TndSpec {
    /// Validates `D = pendants.len() ≥ 2`. Unsorted input is sorted
    /// non-increasing; the returned flag reports whether that happened.
    pub fn new(mut pendants: Vec<usize>) -> Result<(Self, bool)> {
        if pendants.len() < 2 {
            return Err(Error::param(
                "r",
                format!("need at least 2 branches, got {}", pendants.len()),
            ));
        }
        let sorted = pendants.windows(2).all(|w| w[0] >= w[1]);
        if !sorted {
            pendants.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok((TndSpec { pendants }, !sorted))
    }

    /// Number of branches `D`.
    pub fn branches(&self) -> usize {
        self.pendants.len()
    }

    pub fn pendants(&self) -> &[usize] {
        &self.pendants
    }

    /// `n = 1 + D + Σ r_i`.
    pub fn vertex_count(&self) -> usize {
        1 + self.branches() + self.pendants.iter().sum::<usize>()
    }

    /// `None` for the star (all `r_i = 0`).
    pub fn case(&self) -> Option<TndCase> {
        match (self.pendants[0], self.pendants[1]) {
            (0, _) => None,
            (_, 0) => Some(TndCase::SingleBranch),
            _ => Some(TndCase::TwoBranches),
        }
    }

    /// Recognizes a tree as a member of some `T(n, D)` with `n > D + 1`:
    /// a vertex of degree at least 2 and eccentricity exactly 2.
    pub fn recognize(g: &Graph, summary: &DistanceSummary) -> Option<Self> {
        if !g.is_tree() {
            return None;
        }
        let center = (0..g.n()).find(|&c| g.degree(c) >= 2 && summary.ecc[c] == Some(2))?;
        let pendants = g
            .neighbors(center)
            .iter()
            .map(|&v| g.degree(v) - 1)
            .collect();
        TndSpec::new(pendants).ok().map(|(spec, _)| spec)
    }
}

/// Builds `T(r_1, …, r_D)`: center 0, branch vertices `1..=D`, then the
/// pendants of branch 1, branch 2, … in order.
pub fn t_tree(spec: &TndSpec) -> Graph {
    let d = spec.branches();
    let mut edges: Vec<(usize, usize)> = (1..=d).map(|v| (0, v)).collect();
    let mut next = d + 1;
    for (i, &r) in spec.pendants().iter().enumerate() {
        for _ in 0..r {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    build(next, edges)
}

/// Decodes a Prüfer sequence of length `n - 2` into its labeled tree.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut remaining = vec![1usize; n];
    for &v in seq {
        remaining[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding ran out of leaves");
        edges.push((leaf, v));
        remaining[v] -= 1;
        if remaining[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Ok(build(n, edges))
}

/// Every labeled tree on `n ≥ 1` vertices, in lexicographic Prüfer order.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    require_min("n", n, 1)?;
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let tree = if n == 1 {
            Graph::empty(1)
        } else {
            tree_from_pruefer(&seq).expect("in-range sequence")
        };
        done = true;
        for slot in seq.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                done = false;
                break;
            }
            *slot = 0;
        }
        Some(tree)
    }))
}

/// Streams every connected labeled graph on `n ≤ 6` vertices in ascending
/// edge-bitmask order. Bit `i` of the mask selects the `i`-th pair in
/// lexicographic order `(0,1), (0,2), …, (n-2,n-1)`.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::param(
            "n",
            format!("exhaustive enumeration is capped at {MAX_ENUMERATION_N}, got {n}"),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u32 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut nbrs = [0u8; MAX_ENUMERATION_N];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                nbrs[u] |= 1 << v;
                nbrs[v] |= 1 << u;
            }
        }
        if n > 1 {
            let all = ((1u16 << n) - 1) as u8;
            let mut reach = 1u8;
            loop {
                let grown = (0..n)
                    .filter(|&v| reach >> v & 1 == 1)
                    .fold(reach, |acc, v| acc | nbrs[v]);
                if grown == reach {
                    break;
                }
                reach = grown;
            }
            if reach != all {
                return None;
            }
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(build(n, edges))
    }))
}

/// SplitMix64 (Steele, Lea and Flood), with its standard published constants.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `0..bound`, by rejection of the biased low zone.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }
}

/// A uniformly random labeled spanning tree (random Prüfer sequence) plus
/// `extra_edges` distinct non-tree edges, all driven by [`SplitMix64`].
pub fn random_connected_graph(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    require_min("n", n, 1)?;
    let room = n * (n - 1) / 2 - (n - 1);
    if extra_edges > room {
        return Err(Error::param(
            "extra_edges",
            format!("at most {room} non-tree edges fit on {n} vertices, got {extra_edges}"),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let tree = match n {
        1 => Graph::empty(1),
        2 => path(2)?,
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
            tree_from_pruefer(&seq)?
        }
    };
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    for i in 0..extra_edges {
        let j = i + rng.below((candidates.len() - i) as u64) as usize;
        candidates.swap(i, j);
    }
    Ok(build(
        n,
        tree.edges()
            .chain(candidates[..extra_edges].iter().copied()),
    ))
}
