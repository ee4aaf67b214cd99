//! The verification corpus: named graphs, exhaustive small graphs, all
//! small labeled trees, a `T(n, D)` sweep, paths and seeded random graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::{
    complete, cycle, enumerate_connected_graphs, labeled_trees, path, pentagon, petersen,
    random_connected_graph, star, t_tree, SplitMix64, TndSpec, MAX_ENUMERATION_N,
};
use crate::graph::Graph;

/// Largest tree order accepted for exhaustive Prüfer enumeration.
pub const MAX_TREE_N: usize = 9;
const RANDOM_MIN_N: u64 = 7;
const RANDOM_MAX_N: u64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Named,
    Exhaustive,
    Trees,
    Tnd,
    Paths,
    Random,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Named,
        Family::Exhaustive,
        Family::Trees,
        Family::Tnd,
        Family::Paths,
        Family::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Named => "named",
            Family::Exhaustive => "exhaustive",
            Family::Trees => "trees",
            Family::Tnd => "tnd",
            Family::Paths => "paths",
            Family::Random => "random",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "corpus family",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig {
    pub families: Vec<Family>,
    /// Exhaustive connected labeled graphs on `1..=max_n` vertices.
    pub max_n: usize,
    /// All labeled trees on `1..=trees_max_n` vertices.
    pub trees_max_n: usize,
    /// `T(n, D)` for `2 ≤ D ≤ tnd_max_branches` and `Σ r_i ≤ tnd_max_pendants`.
    pub tnd_max_branches: usize,
    pub tnd_max_pendants: usize,
    /// Paths `P_1..=P_path_max_n`.
    pub path_max_n: usize,
    pub random_count: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            families: Family::ALL.to_vec(),
            max_n: MAX_ENUMERATION_N,
            trees_max_n: 8,
            tnd_max_branches: 6,
            tnd_max_pendants: 12,
            path_max_n: 64,
            random_count: 100,
            seed: 42,
        }
    }
}

impl CorpusConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n > MAX_ENUMERATION_N {
            return Err(Error::param(
                "max_n",
                format!("exhaustive enumeration is capped at {MAX_ENUMERATION_N}"),
            ));
        }
        if self.trees_max_n > MAX_TREE_N {
            return Err(Error::param(
                "trees_max_n",
                format!("tree enumeration is capped at {MAX_TREE_N}"),
            ));
        }
        Ok(())
    }

    fn includes(&self, family: Family) -> bool {
        self.families.contains(&family)
    }
}

#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub index: usize,
    pub family: Family,
    pub label: String,
    pub graph: Graph,
}

fn lollipop(cycle_len: usize, tail: usize) -> Graph {
    let n = cycle_len + tail;
    let ring = (0..cycle_len).map(|i| (i, (i + 1) % cycle_len));
    let stick = (cycle_len..n).map(|v| (if v == cycle_len { 0 } else { v - 1 }, v));
    Graph::new(n, ring.chain(stick)).expect("valid lollipop")
}

/// Two poles joined by internally disjoint paths with the given numbers of
/// interior vertices.
fn theta(interiors: &[usize]) -> Graph {
    let n = 2 + interiors.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in interiors {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(n, edges).expect("valid theta graph")
}

/// Heawood graph: the 14-cycle with chords `i`–`i+5` from even `i`.
fn heawood() -> Graph {
    let ring = (0..14).map(|i| (i, (i + 1) % 14));
    let chords = (0..14).step_by(2).map(|i| (i, (i + 5) % 14));
    Graph::new(14, ring.chain(chords)).expect("valid Heawood graph")
}

fn named_graphs() -> Vec<(String, Graph)> {
    let tnd = |r: &[usize]| t_tree(&TndSpec::new(r.to_vec()).expect("valid spec").0);
    let mut out = vec![
        ("petersen".to_string(), petersen()),
        ("pentagon".to_string(), pentagon()),
        ("C6".to_string(), cycle(6).expect("n ≥ 3")),
        ("T(5,0,0,0)".to_string(), tnd(&[5, 0, 0, 0])),
        ("T(4,1,0,0)".to_string(), tnd(&[4, 1, 0, 0])),
        ("heawood".to_string(), heawood()),
    ];
    out.extend((3..=16).map(|n| (format!("C{n}"), cycle(n).expect("n ≥ 3"))));
    out.extend((1..=8).map(|n| (format!("K{n}"), complete(n).expect("n ≥ 1"))));
    out.extend((3..=12).map(|n| (format!("S{n}"), star(n).expect("n ≥ 1"))));
    for (k, tail) in [
        (7, 1),
        (7, 3),
        (8, 2),
        (9, 4),
        (6, 2),
        (5, 3),
        (4, 2),
        (3, 3),
    ] {
        out.push((format!("lollipop(C{k},{tail})"), lollipop(k, tail)));
    }
    for interiors in [[3, 3, 3], [2, 2, 2], [3, 4, 5], [1, 2, 3]] {
        out.push((format!("theta{interiors:?}"), theta(&interiors)));
    }
    out
}

/// Non-increasing sequences of `parts` non-negative integers summing to `total`.
fn pendant_profiles(parts: usize, total: usize) -> Vec<Vec<usize>> {
    fn fill(
        parts: usize,
        total: usize,
        cap: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for first in (0..=cap.min(total)).rev() {
            if first * parts < total {
                break;
            }
            prefix.push(first);
            fill(parts - 1, total - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(parts, total, total, &mut Vec::new(), &mut out);
    out
}

/// Every `TndSpec` with `2 ≤ D ≤ max_branches` and `Σ r_i ≤ max_pendants`.
pub fn tnd_sweep(max_branches: usize, max_pendants: usize) -> Vec<TndSpec> {
    let mut specs = Vec::new();
    for d in 2..=max_branches {
        for total in 0..=max_pendants {
            for r in pendant_profiles(d, total) {
                specs.push(TndSpec::new(r).expect("D ≥ 2").0);
            }
        }
    }
    specs
}

/// Parameters of the `index`-th random corpus graph.
fn random_parameters(master: &mut SplitMix64, index: usize) -> (usize, usize, u64) {
    let n = (RANDOM_MIN_N + master.below(RANDOM_MAX_N - RANDOM_MIN_N + 1)) as usize;
    let room = n * (n - 1) / 2 - (n - 1);
    let extra = if index.is_multiple_of(2) {
        master.below(4) as usize
    } else {
        master.below((2 * n).min(room) as u64 + 1) as usize
    };
    (n, extra, master.next_u64())
}

/// Streams the corpus in a fixed order: named graphs, exhaustive graphs by
/// ascending `n`, trees by ascending `n`, the `T(n, D)` sweep, paths, then
/// random graphs.
pub fn corpus(config: &CorpusConfig) -> Result<impl Iterator<Item = CorpusItem>> {
    config.validate()?;
    let mut sources: Vec<Box<dyn Iterator<Item = (Family, String, Graph)>>> = Vec::new();

    if config.includes(Family::Named) {
        sources.push(Box::new(
            named_graphs()
                .into_iter()
                .map(|(label, g)| (Family::Named, label, g)),
        ));
    }
    if config.includes(Family::Exhaustive) {
        for n in 1..=config.max_n {
            sources.push(Box::new(enumerate_connected_graphs(n)?.enumerate().map(
                move |(i, g)| (Family::Exhaustive, format!("connected n={n} #{i}"), g),
            )));
        }
    }
    if config.includes(Family::Trees) {
        for n in 1..=config.trees_max_n {
            sources.push(Box::new(
                labeled_trees(n)?
                    .enumerate()
                    .map(move |(i, g)| (Family::Trees, format!("tree n={n} #{i}"), g)),
            ));
        }
    }
    if config.includes(Family::Tnd) {
        let specs = tnd_sweep(config.tnd_max_branches, config.tnd_max_pendants);
        sources.push(Box::new(specs.into_iter().map(|spec| {
            let label = format!("T{:?}", spec.pendants());
            (Family::Tnd, label, t_tree(&spec))
        })));
    }
    if config.includes(Family::Paths) {
        sources
            .push(Box::new((1..=config.path_max_n).map(|n| {
                (Family::Paths, format!("P{n}"), path(n).expect("n ≥ 1"))
            })));
    }
    if config.includes(Family::Random) {
        let mut master = SplitMix64::new(config.seed);
        let count = config.random_count;
        sources.push(Box::new((0..count).map(move |i| {
            let (n, extra, seed) = random_parameters(&mut master, i);
            let g = random_connected_graph(n, extra, seed).expect("feasible parameters");
            (
                Family::Random,
                format!("random #{i} (n={n}, extra={extra})"),
                g,
            )
        })));
    }

    Ok(sources
        .into_iter()
        .flatten()
        .enumerate()
        .map(|(index, (family, label, graph))| CorpusItem {
            index,
            family,
            label,
            graph,
        }))
}
