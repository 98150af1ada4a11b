mod common;

use common::*;
use nplab::construct::{
    certify_sufficient, extend_with_pendants, label_reduced_lobster, label_union_of_stars,
};
use nplab::corpus::graphs_of_order;
use nplab::graph::generators;
use nplab::graph::LobsterSpec;
use nplab::labeling::{neighborhood_graphs, unique_neighborhood_graph};
use nplab::randomgraphs::{chord_cycle_lengths, sample_gnd, sample_gnp};
use nplab::search::{find_hamilton_cycle, scan_graph6_str, ScanConfig, ScanMode};
use nplab::{parse_graph6, write_graph6, Graph, Labeling, Reason, SearchBudget};
use proptest::prelude::*;

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trips(g in arb_graph(70)) {
        let text = write_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn labeling_text_round_trips(perm in Just((1..=40usize).collect::<Vec<_>>()).prop_shuffle()) {
        let f = Labeling::new(perm).unwrap();
        prop_assert_eq!(f.to_string().parse::<Labeling>().unwrap(), f);
    }

    #[test]
    fn hamilton_cycles_validate(g in arb_graph(12)) {
        if let Some(c) = find_hamilton_cycle(&g, &SearchBudget::nodes(200_000)).found() {
            prop_assert!(is_hamilton_cycle(&g, c.vertices()));
        }
    }

    #[test]
    fn certificates_verify_independently(g in arb_graph(11)) {
        let cert = certify_sufficient(&g, &SearchBudget::nodes(2_000_000));
        if let Some(f) = cert.labeling() {
            prop_assert!(npl_holds(&g, f.as_slice()));
        }
    }

    #[test]
    fn gnd_is_regular_and_simple(n in 4usize..40, d in 1usize..6, seed in any::<u64>()) {
        prop_assume!(d < n && (n * d) % 2 == 0);
        let g = sample_gnd(n, d, seed).unwrap();
        prop_assert!(g.is_regular(d));
        prop_assert_eq!(g.edge_count(), n * d / 2);
    }

    #[test]
    fn gnp_is_reproducible(n in 1usize..30, p in 0.0f64..=1.0, seed in any::<u64>()) {
        prop_assert_eq!(sample_gnp(n, p, seed).unwrap(), sample_gnp(n, p, seed).unwrap());
    }

    #[test]
    fn star_unions_are_prime(sizes in proptest::collection::vec(0usize..=15, 1..6), big in proptest::option::of(16usize..30)) {
        let mut sizes = sizes;
        sizes.extend(big);
        let r = label_union_of_stars(&sizes).unwrap();
        prop_assert!(prime_holds(&r.graph, r.labeling.as_slice()));
    }

    #[test]
    fn reduced_lobsters_and_pendants(degrees in proptest::collection::vec(3usize..10, 1..5), extra in proptest::collection::vec((0usize..100, 1usize..4), 0..4)) {
        let spec = LobsterSpec::reduced(&degrees).unwrap();
        let l = label_reduced_lobster(&spec).unwrap();
        prop_assert!(npl_holds(&l.graph, l.certificate.labeling().unwrap().as_slice()));
        let hosts: Vec<usize> = (0..l.graph.order()).filter(|&v| l.graph.degree(v) > 2).collect();
        let attach: Vec<(usize, usize)> = extra.iter().map(|&(h, c)| (hosts[h % hosts.len()], c)).collect();
        let (g, cert) = extend_with_pendants(&l.graph, &l.certificate, &attach).unwrap();
        prop_assert!(npl_holds(&g, cert.labeling().unwrap().as_slice()));
    }
}

#[test]
fn corpus_round_trips() {
    for n in 2..=8 {
        for line in graphs_of_order(n).unwrap().lines() {
            let g = parse_graph6(line).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(write_graph6(&g), line);
        }
    }
}

#[test]
fn neighborhood_graphs_choose_inside_neighborhoods() {
    for line in graphs_of_order(5).unwrap().lines() {
        let g = parse_graph6(line).unwrap();
        for h in neighborhood_graphs(&g).take(50) {
            assert!(h.belongs_to(&g));
            for (v, pair) in h.chosen().iter().enumerate() {
                match pair {
                    Some((a, b)) => assert!(g.has_edge(v, *a) && g.has_edge(v, *b)),
                    None => assert!(g.degree(v) < 2),
                }
            }
        }
    }
    let c7 = generators::cycle(7).unwrap();
    assert!(unique_neighborhood_graph(&c7).is_some());
}

#[test]
fn parallel_scan_matches_serial() {
    let text: String = (2..=7).map(|n| graphs_of_order(n).unwrap()).collect();
    for mode in [ScanMode::Exact, ScanMode::FastCertify] {
        let serial = ScanConfig {
            mode,
            threads: 1,
            chunk_lines: 97,
            ..ScanConfig::default()
        };
        let parallel = ScanConfig {
            mode,
            threads: 4,
            ..ScanConfig::default()
        };
        let a = scan_graph6_str(&text, &serial).unwrap();
        let b = scan_graph6_str(&text, &parallel).unwrap();
        assert_eq!(a, b);
        assert!(a.summary.is_complete());
    }
}

/// Samples of order 2 mod 4 certified through an odd chord really have one.
#[test]
fn odd_chord_route_uses_odd_cycles() {
    let budget = SearchBudget::unlimited();
    let mut seen = 0;
    for n in [10, 14, 18] {
        for seed in 0..40 {
            let g = sample_gnd(n, 3, seed).unwrap();
            let cert = certify_sufficient(&g, &budget);
            if let Reason::OddChord { cycle, chord, k } = cert.reason() {
                let (a, b) = chord_cycle_lengths(cycle, *chord);
                assert!(a % 2 == 1 && b % 2 == 1, "{a} {b}");
                assert!(*k == a || *k == b);
                assert!(g.has_edge(chord.0, chord.1));
                assert!(is_hamilton_cycle(&g, cycle));
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}
