//! Distance-based metrics: the distance distribution `d(G, k)`,
//! eccentricities, radius, diameter and girth.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::Graph;

/// Graphs below this size are swept sequentially.
const PARALLEL_THRESHOLD: usize = 256;

/// Distance profile of a graph, built from one BFS per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSummary {
    /// `counts[k]` is the number of unordered pairs at distance exactly `k`.
    /// Index 0 is always zero; the vector ends at the largest finite distance.
    counts: Vec<u64>,
    /// Per-vertex eccentricity; `None` when some vertex is unreachable.
    pub ecc: Vec<Option<u32>>,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
    pub connected: bool,
}

impl DistanceSummary {
    /// `d(G, k)`: number of unordered vertex pairs at distance `k`.
    pub fn pairs_at(&self, k: u32) -> u64 {
        self.counts.get(k as usize).copied().unwrap_or(0)
    }

    /// Nonzero entries of the distance distribution, ascending in `k`.
    pub fn distribution(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(k, &c)| (k as u32, c))
    }

    /// Largest finite distance between two vertices (0 for graphs without
    /// edges).
    pub fn max_finite_distance(&self) -> u32 {
        (self.counts.len() - 1) as u32
    }

    /// Number of unordered pairs joined by a path.
    pub fn finite_pairs(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `Σ_{i≠j} w(d(i, j))` over reachable ordered pairs, accumulated in
    /// ascending distance order.
    pub(crate) fn ordered_pair_sum(&self, weight: impl Fn(u32) -> f64) -> f64 {
        self.distribution()
            .map(|(k, c)| 2.0 * c as f64 * weight(k))
            .sum()
    }
}

#[derive(Default)]
struct Partial {
    counts: Vec<u64>,
    ecc: Vec<Option<u32>>,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        if self.counts.len() < other.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (slot, c) in self.counts.iter_mut().zip(other.counts) {
            *slot += c;
        }
        self.ecc.extend(other.ecc);
    }
}

fn sweep(g: &Graph, sources: std::ops::Range<usize>) -> Partial {
    let n = g.n();
    let mut dist = vec![None; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut part = Partial {
        counts: vec![0],
        ecc: Vec::with_capacity(sources.len()),
    };
    for s in sources {
        dist.iter_mut().for_each(|d| *d = None);
        g.bfs_into(s, &mut dist, &mut queue);
        let mut ecc = Some(0u32);
        for (t, d) in dist.iter().enumerate() {
            match *d {
                Some(d) => {
                    ecc = ecc.map(|e| e.max(d));
                    if t > s {
                        let k = d as usize;
                        if part.counts.len() <= k {
                            part.counts.resize(k + 1, 0);
                        }
                        part.counts[k] += 1;
                    }
                }
                None => ecc = None,
            }
        }
        part.ecc.push(ecc);
    }
    part
}

/// Runs one BFS per vertex and tabulates the distance distribution,
/// eccentricities, radius and diameter.
///
/// For disconnected graphs every eccentricity, the radius and the diameter
/// are `None`, and only reachable pairs are counted. The result does not
/// depend on how sources are scheduled across threads.
pub fn distance_summary(g: &Graph) -> DistanceSummary {
    let n = g.n();
    let partial = if n < PARALLEL_THRESHOLD {
        sweep(g, 0..n)
    } else {
        let chunk = (n / (4 * rayon::current_num_threads())).max(16);
        let ranges: Vec<_> = (0..n)
            .step_by(chunk)
            .map(|start| start..(start + chunk).min(n))
            .collect();
        let parts: Vec<Partial> = ranges.into_par_iter().map(|r| sweep(g, r)).collect();
        parts.into_iter().fold(
            Partial {
                counts: vec![0],
                ecc: Vec::with_capacity(n),
            },
            |mut acc, p| {
                acc.absorb(p);
                acc
            },
        )
    };
    let connected = partial.ecc.iter().all(Option::is_some);
    let (radius, diameter) = if !connected {
        (None, None)
    } else if n == 0 {
        (Some(0), Some(0))
    } else {
        let eccs = partial.ecc.iter().flatten();
        (eccs.clone().min().copied(), eccs.max().copied())
    };
    DistanceSummary {
        counts: partial.counts,
        ecc: partial.ecc,
        radius,
        diameter,
        connected,
    }
}

/// Length of the shortest cycle, or `None` for acyclic graphs.
///
/// Runs a BFS from every vertex and records the shortest closed walk formed
/// by a non-tree edge; the minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.n();
    if g.is_acyclic() {
        return None;
    }
    let mut best = u32::MAX;
    let mut dist: Vec<Option<u32>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = None);
        queue.clear();
        dist[root] = Some(0);
        parent[root] = usize::MAX;
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            if 2 * du + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                match dist[w] {
                    None => {
                        dist[w] = Some(du + 1);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(dw) if parent[u] != w => {
                        best = best.min(du + dw + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                    Some(_) => {}
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    Some(best)
}
