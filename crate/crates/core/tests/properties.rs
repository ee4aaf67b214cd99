use closeness_core::bounds::{GraphParameters, Measure};
use closeness_core::generators::{
    path, random_connected_graph, t_tree, tree_from_pruefer, TndSpec,
};
use closeness_core::invariants::{reduced_zagreb_m2, structural_flags, zagreb_m1, zagreb_m2};
use closeness_core::io::{from_graph6, parse_edgelist, to_graph6, write_edgelist};
use closeness_core::{distance_summary, girth, Alpha, Graph};
use proptest::prelude::*;
use proptest::sample::select;

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_flat_map(|(n, seed)| {
        let room = (n - 1) * (n - 2) / 2;
        (0..=room.min(3 * n)).prop_map(move |extra| random_connected_graph(n, extra, seed).unwrap())
    })
}

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(|seq| tree_from_pruefer(&seq).unwrap())
    })
}

fn alpha() -> impl Strategy<Value = Alpha> {
    select(vec![0.1, 0.3, 0.5, 0.7, 0.9]).prop_map(|a| Alpha::new(a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn pair_counts_cover_reachable_pairs(g in any_graph(12)) {
        let s = distance_summary(&g);
        let n = g.n() as u64;
        let counted: u64 = s.distribution().map(|(_, c)| c).sum();
        prop_assert_eq!(counted, s.finite_pairs());
        prop_assert_eq!(s.connected, g.is_connected());
        if s.connected {
            prop_assert_eq!(s.finite_pairs(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn radius_and_diameter(g in connected_graph(30)) {
        let s = distance_summary(&g);
        let (r, d) = (s.radius.unwrap(), s.diameter.unwrap());
        prop_assert!(r <= d && d <= 2 * r);
        prop_assert_eq!(s.max_finite_distance(), d);
    }

    #[test]
    fn bfs_distances_are_symmetric(g in any_graph(8)) {
        let rows: Vec<_> = (0..g.n()).map(|v| g.bfs_distances(v).unwrap()).collect();
        for (u, row) in rows.iter().enumerate() {
            for (v, d) in row.iter().enumerate() {
                prop_assert_eq!(*d, rows[v][u]);
            }
        }
    }

    #[test]
    fn girth_five_iff_no_short_cycles(g in any_graph(10)) {
        let f = structural_flags(&g);
        let long = girth(&g).is_none_or(|k| k >= 5);
        prop_assert_eq!(long, f.triangle_free && f.quadrangle_free);
        prop_assert_eq!(f.girth_ge_7, girth(&g).is_none_or(|k| k >= 7));
    }

    #[test]
    fn adding_an_edge_never_lowers_gc(g in any_graph(8), pick in any::<prop::sample::Index>(), a in alpha()) {
        let missing: Vec<_> = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        let h = g.with_edge(u, v).unwrap();
        let before = distance_summary(&g).generalized_closeness(a);
        let after = distance_summary(&h).generalized_closeness(a);
        prop_assert!(after >= before);
    }

    #[test]
    fn path_minimizes_gc_among_trees(t in tree(16), a in alpha()) {
        let p = path(t.n()).unwrap();
        let gc_t = distance_summary(&t).generalized_closeness(a);
        let gc_p = distance_summary(&p).generalized_closeness(a);
        prop_assert!(gc_p <= gc_t * (1.0 + 1e-12));
    }

    #[test]
    fn tnd_tree_shape(r in proptest::collection::vec(0usize..6, 2..=6)) {
        let (spec, _) = TndSpec::new(r).unwrap();
        let g = t_tree(&spec);
        prop_assert!(g.is_tree());
        prop_assert_eq!(g.n(), spec.vertex_count());
        prop_assert_eq!(g.degree(0), spec.branches());
        for (i, &ri) in spec.pendants().iter().enumerate() {
            prop_assert_eq!(g.degree(i + 1), ri + 1);
        }
        let loaded = spec.pendants().iter().filter(|&&x| x > 0).count();
        let want = match loaded { 0 => 2, 1 => 3, _ => 4 };
        prop_assert_eq!(distance_summary(&g).diameter, Some(want));
        let s = distance_summary(&g);
        let expected = spec.case().map(|_| spec.clone());
        prop_assert_eq!(TndSpec::recognize(&g, &s), expected);
    }

    #[test]
    fn reduced_zagreb_identity(g in any_graph(12)) {
        let m = g.m() as i64;
        let want = zagreb_m2(&g) as i64 - zagreb_m1(&g) as i64 + m;
        // Isolated vertices contribute nothing to either side.
        prop_assert_eq!(reduced_zagreb_m2(&g) as i64, want);
    }

    #[test]
    fn closeness_is_gc_at_one_half(g in any_graph(12)) {
        let s = distance_summary(&g);
        prop_assert_eq!(s.closeness().to_bits(), s.generalized_closeness(Alpha::HALF).to_bits());
    }

    #[test]
    fn bounds_contain_the_exact_value(g in connected_graph(20), a in alpha()) {
        let s = distance_summary(&g);
        let params = GraphParameters::with_summary(&g, &s).unwrap();
        for measure in [Measure::Generalized(a), Measure::Closeness] {
            let truth = measure.evaluate(&s);
            for r in params.reports(measure).unwrap() {
                if r.applicable {
                    prop_assert!(r.contains(truth, 1e-9), "{:?} {} {:?}", r.id, truth, r);
                }
                if r.equality_expected() {
                    prop_assert!(r.attained(truth, 1e-9), "{:?} {} {:?}", r.id, truth, r);
                }
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in any_graph(62)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trip(g in connected_graph(20)) {
        let text = write_edgelist(&g, None);
        let parsed = parse_edgelist(&text).unwrap();
        let relabel = |(u, v): (usize, usize)| {
            let (a, b) = (&parsed.labels[u], &parsed.labels[v]);
            let (a, b): (usize, usize) = (a.parse().unwrap(), b.parse().unwrap());
            (a.min(b), a.max(b))
        };
        let mut back: Vec<_> = parsed.graph.edges().map(relabel).collect();
        back.sort_unstable();
        prop_assert_eq!(back, g.edges().collect::<Vec<_>>());
    }
}
