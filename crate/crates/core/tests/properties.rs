use std::collections::BTreeSet;

use ndl_core::graph::{
    apply_two_switch, bipartite_subgraph, degree_sequence, enumerate_two_switches,
    induced_subgraph, Graph,
};
use ndl_core::graphicality::{erdos_gallai, is_graphic_ndl, Partition};
use ndl_core::io;
use ndl_core::oracle::naive_two_switches;
use ndl_core::realization::{
    apply_n_switch, canonical_realization, enumerate_n_switches, realize_ndl, steer_to_canonical,
    switch_sequence,
};
use ndl_core::reconstruction::{
    deck_of, degree_sequence_from_deck, degrees_from_deck, edge_count_from_deck, ndl_from_deck,
};
use ndl_core::tableau::{canonicalize, derive, is_feasible, ndl_entry_sum, ndl_of};
use ndl_core::uniqueness::{is_ndl_unique_graph, is_ndl_unique_tableau, non_uniqueness_witness};
use proptest::prelude::*;
use proptest::sample::Index;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), prop::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
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
}

/// A random graph with many degree ties, so N-switches are common.
fn regularish(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n, 1usize..4, any::<u64>()).prop_map(|(n, k, seed)| {
        let degrees = vec![k.min(n - 1); n];
        let degrees = if degrees.iter().sum::<usize>() % 2 == 1 {
            let mut d = degrees;
            d[0] -= 1;
            d
        } else {
            degrees
        };
        let mut g = canonical_realization(&degrees).unwrap();
        // shuffle inside the realization space with a few 2-switches
        let mut state = seed;
        for _ in 0..20 {
            let moves = enumerate_two_switches(&g);
            if moves.is_empty() {
                break;
            }
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            g = apply_two_switch(&g, moves[(state >> 33) as usize % moves.len()]).unwrap();
        }
        g
    })
}

fn walk_n_switches(g: &Graph, picks: &[Index]) -> Graph {
    let mut h = g.clone();
    for pick in picks {
        let moves = enumerate_n_switches(&h);
        if moves.is_empty() {
            break;
        }
        h = apply_n_switch(&h, moves[pick.index(moves.len())]).unwrap();
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn two_switches_preserve_degrees(g in graph(10), pick in any::<Index>()) {
        let moves = enumerate_two_switches(&g);
        prop_assume!(!moves.is_empty());
        let m = moves[pick.index(moves.len())];
        let h = apply_two_switch(&g, m).unwrap();
        prop_assert_eq!(h.degrees(), g.degrees());
        prop_assert_ne!(&h, &g);
        prop_assert_eq!(apply_two_switch(&h, m.inverse()).unwrap(), g);
    }

    #[test]
    fn two_switch_enumeration_matches_scan(g in graph(8)) {
        let fast: BTreeSet<_> = enumerate_two_switches(&g).into_iter().collect();
        let slow: BTreeSet<_> = naive_two_switches(&g).into_iter().map(|m| m.canonical()).collect();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn ndl_shape(g in graph(12)) {
        let t = ndl_of(&g);
        prop_assert!(is_feasible(&t));
        prop_assert_eq!(t.lengths(), g.degrees());
        prop_assert_eq!(ndl_entry_sum(&t), g.degrees().iter().map(|d| d * d).sum::<usize>());
        prop_assert!(is_graphic_ndl(&t));
    }

    #[test]
    fn derived_lists_match_subgraphs(g in graph(10)) {
        let dl = derive(&ndl_of(&g)).unwrap();
        prop_assert!(dl.is_consistent());
        for (k, class) in &dl.classes {
            let (sub, _) = induced_subgraph(&g, class).unwrap();
            prop_assert_eq!(&sub.degrees(), &dl.same_deg[k]);
        }
        for ((k, l), list) in &dl.cross_deg {
            let (x, y) = (&dl.classes[k], &dl.classes[l]);
            let (sub, _) = bipartite_subgraph(&g, x, y).unwrap();
            let d = sub.degrees();
            prop_assert_eq!(&d[..x.len()], &list.part_x[..]);
            prop_assert_eq!(&d[x.len()..], &list.part_y[..]);
        }
    }

    #[test]
    fn realizations_round_trip(g in graph(12)) {
        let t = ndl_of(&g);
        let h = realize_ndl(&t).unwrap();
        prop_assert_eq!(ndl_of(&h), t);
    }

    #[test]
    fn canonical_realization_has_the_degrees(g in graph(12)) {
        let d = g.degrees();
        prop_assert!(erdos_gallai(&Partition::from(d.as_slice())));
        prop_assert_eq!(canonical_realization(&d).unwrap().degrees(), d);
    }

    #[test]
    fn steering_is_deterministic(g in graph(10)) {
        let (target, moves) = steer_to_canonical(&g);
        prop_assert_eq!(&target, &canonical_realization(&g.degrees()).unwrap());
        let mut h = g.clone();
        for m in moves {
            h = apply_two_switch(&h, m).unwrap();
        }
        prop_assert_eq!(h, target);
    }

    #[test]
    fn n_switches_preserve_the_ndl(g in regularish(10), pick in any::<Index>()) {
        let moves = enumerate_n_switches(&g);
        prop_assume!(!moves.is_empty());
        let m = moves[pick.index(moves.len())];
        let h = apply_n_switch(&g, m).unwrap();
        prop_assert_eq!(ndl_of(&h), ndl_of(&g));
    }

    #[test]
    fn switch_sequences_connect_realizations(
        g in regularish(11),
        picks in prop::collection::vec(any::<Index>(), 0..12),
    ) {
        let h = walk_n_switches(&g, &picks);
        let path = switch_sequence(&g, &h).unwrap();
        let t = ndl_of(&g);
        let mut cur = g.clone();
        for m in &path.moves {
            cur = apply_n_switch(&cur, *m).unwrap();
            prop_assert_eq!(&ndl_of(&cur), &t);
        }
        prop_assert_eq!(cur, h);
    }

    #[test]
    fn uniqueness_agrees_with_moves(g in graph(9)) {
        let unique = is_ndl_unique_graph(&g);
        prop_assert_eq!(is_ndl_unique_tableau(&ndl_of(&g)).unwrap(), unique);
        prop_assert_eq!(enumerate_n_switches(&g).is_empty(), unique);
        match non_uniqueness_witness(&g) {
            None => prop_assert!(unique),
            Some(m) => {
                prop_assert!(!unique);
                let h = apply_n_switch(&g, m).unwrap();
                prop_assert_ne!(&h, &g);
                prop_assert_eq!(ndl_of(&h), ndl_of(&g));
            }
        }
    }

    #[test]
    fn decks_recover_the_ndl(g in graph(10)) {
        prop_assume!(g.vertex_count() >= 3);
        let deck = deck_of(&g);
        prop_assert_eq!(edge_count_from_deck(&deck).unwrap(), g.edge_count());
        prop_assert_eq!(degrees_from_deck(&deck).unwrap(), g.degrees());
        prop_assert_eq!(degree_sequence_from_deck(&deck).unwrap(), degree_sequence(&g));
        prop_assert_eq!(ndl_from_deck(&deck).unwrap(), canonicalize(&ndl_of(&g)));
    }

    #[test]
    fn formats_round_trip(g in graph(70)) {
        prop_assert_eq!(&io::from_graph6(&io::to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&io::read_edge_list(&io::write_edge_list(&g)).unwrap(), &g);
        prop_assert_eq!(&io::graph_from_json(&io::graph_to_json(&g)).unwrap(), &g);
        let t = ndl_of(&g);
        prop_assert_eq!(io::tableau_from_json(&io::tableau_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn graph6_rejects_corruption(g in graph(20), at in any::<Index>(), byte in 0u8..=255) {
        let s = io::to_graph6(&g);
        let mut bytes = s.into_bytes();
        let i = at.index(bytes.len());
        prop_assume!(!(63..=126).contains(&byte));
        bytes[i] = byte;
        if let Ok(text) = String::from_utf8(bytes) {
            prop_assert!(io::from_graph6(&text).is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn larger_graphs_round_trip_through_graph6(n in 63usize..200, bits in prop::collection::vec((any::<Index>(), any::<Index>()), 0..300)) {
        let edges: Vec<_> = bits
            .iter()
            .map(|(a, b)| (a.index(n), b.index(n)))
            .filter(|(u, v)| u != v)
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let s = io::to_graph6(&g);
        prop_assert!(s.starts_with('~'));
        prop_assert_eq!(io::from_graph6(&s).unwrap(), g);
    }
}
