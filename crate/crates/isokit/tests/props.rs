//! Property tests: format round trips, bijection-action invariants, and
//! preorder behavior on randomized inputs.

use proptest::prelude::*;

use isokit::core::formats::{
    parse_dataset, parse_graph, parse_hypergraph, parse_itemset, parse_network,
    parse_permutation, serialize_dataset, serialize_graph, serialize_hypergraph,
    serialize_itemset, serialize_network, serialize_permutation,
};
use isokit::core::{Dataset, Domain, Graph, Hypergraph, Item, Itemset, Permutation};
use isokit::reduce::{gi_to_ii, ii_to_hgi, GiInstance, IiInstance};
use isokit::solve::{si_decide, verify_si_witness};
use isokit::sortnet::{mask_is_sorted, Comparator, ComparatorNetwork};

fn itemset_strategy(max_n: usize, max_rows: usize) -> impl Strategy<Value = Itemset> {
    (0..=max_n).prop_flat_map(move |n| {
        let bound = 1u64 << n;
        prop::collection::btree_set(0..bound, 0..=max_rows).prop_map(move |masks| {
            let items = masks.into_iter().map(|m| Item::from_mask(n, m)).collect();
            Itemset::new(Domain::new(n), items).unwrap()
        })
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let all_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let count = all_pairs.len();
        prop::collection::vec(any::<bool>(), count).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = all_pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn hypergraph_strategy(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (0..=max_n).prop_flat_map(|n| {
        let bound = 1u64 << n;
        prop::collection::vec(0..bound, 0..=4).prop_map(move |masks| {
            let edges: Vec<Item> = masks.into_iter().map(|m| Item::from_mask(n, m)).collect();
            Hypergraph::from_edge_items(n, edges).unwrap()
        })
    })
}

fn network_strategy(max_n: usize) -> impl Strategy<Value = ComparatorNetwork> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(
            prop::collection::vec((0..n, 0..n), 0..=n / 2),
            0..=4,
        )
        .prop_map(move |raw_layers| {
            let mut layers = Vec::new();
            for raw in raw_layers {
                let mut used = vec![false; n];
                let mut layer = Vec::new();
                for (a, b) in raw {
                    if a != b && !used[a] && !used[b] {
                        used[a] = true;
                        used[b] = true;
                        layer.push(Comparator::new(a, b).unwrap());
                    }
                }
                layers.push(layer);
            }
            ComparatorNetwork::new(n, layers).unwrap()
        })
    })
}

fn permutation_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|map| Permutation::new(map).unwrap())
}

proptest! {
    #[test]
    fn itemset_parse_serialize_round_trip(s in itemset_strategy(8, 6)) {
        prop_assert_eq!(parse_itemset(&serialize_itemset(&s)).unwrap(), s);
    }

    #[test]
    fn dataset_parse_serialize_round_trip(
        sets in prop::collection::vec(itemset_strategy(4, 4), 0..4)
    ) {
        // Rebuild over one shared domain size to satisfy the dataset rule.
        let n = sets.iter().map(Itemset::domain_size).max().unwrap_or(0);
        let widened: Vec<Itemset> = sets
            .iter()
            .map(|s| {
                let rows: Vec<Item> = s
                    .items()
                    .iter()
                    .map(|i| Item::from_mask(n, i.mask()))
                    .collect();
                Itemset::new(Domain::new(n), rows).unwrap()
            })
            .collect();
        let d = Dataset::new(widened).unwrap();
        prop_assert_eq!(parse_dataset(&serialize_dataset(&d)).unwrap(), d);
    }

    #[test]
    fn graph_parse_serialize_round_trip(g in graph_strategy(7)) {
        prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn hypergraph_parse_serialize_round_trip(h in hypergraph_strategy(6)) {
        prop_assert_eq!(parse_hypergraph(&serialize_hypergraph(&h)).unwrap(), h);
    }

    #[test]
    fn network_parse_serialize_round_trip(net in network_strategy(6)) {
        prop_assert_eq!(parse_network(&serialize_network(&net)).unwrap(), net);
    }

    #[test]
    fn permutation_round_trip(perm in (0usize..=8).prop_flat_map(permutation_of)) {
        prop_assert_eq!(parse_permutation(&serialize_permutation(&perm)).unwrap(), perm);
    }

    #[test]
    fn bijection_action_preserves_structure(
        (s, j) in itemset_strategy(6, 6)
            .prop_flat_map(|s| {
                let n = s.domain_size();
                (Just(s), permutation_of(n))
            })
    ) {
        let mapped = s.apply(&j).unwrap();
        prop_assert_eq!(mapped.len(), s.len());
        prop_assert_eq!(mapped.cardinality_multiset(), s.cardinality_multiset());
        prop_assert_eq!(mapped.apply(&j.inverse()).unwrap(), s);
    }

    #[test]
    fn bijection_composition_matches(
        (s, j1, j2) in itemset_strategy(5, 5)
            .prop_flat_map(|s| {
                let n = s.domain_size();
                (Just(s), permutation_of(n), permutation_of(n))
            })
    ) {
        let sequential = s.apply(&j1).unwrap().apply(&j2).unwrap();
        let composed = s.apply(&j1.then(&j2).unwrap()).unwrap();
        prop_assert_eq!(sequential, composed);
    }

    #[test]
    fn graph_action_preserves_degrees(
        (g, p) in graph_strategy(6)
            .prop_flat_map(|g| {
                let n = g.vertex_count();
                (Just(g), permutation_of(n))
            })
    ) {
        let h = g.apply(&p).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.degree_multiset(), g.degree_multiset());
        prop_assert_eq!(h.apply(&p.inverse()).unwrap(), g);
    }

    #[test]
    fn reduction_size_accounting(s in itemset_strategy(5, 5), t in itemset_strategy(5, 5)) {
        let inst = IiInstance { s: s.clone(), t };
        let (hgi, _) = ii_to_hgi(&inst);
        prop_assert_eq!(hgi.g.vertex_count(), s.len());
        prop_assert_eq!(hgi.g.hyperedge_count(), s.domain_size());
    }

    #[test]
    fn incidence_items_cover_vertices(g in graph_strategy(6)) {
        let inst = GiInstance { g: g.clone(), h: g.clone() };
        let (ii, eg, _) = gi_to_ii(&inst);
        prop_assert_eq!(eg.len(), g.edge_count());
        prop_assert_eq!(ii.s.domain_size(), g.edge_count());
        prop_assert!(ii.s.len() <= g.vertex_count());
        // Every edge position appears in exactly two vertex items before
        // collapse, so each column sum is 1 or 2 after it.
        for c in 0..ii.s.domain_size() {
            let sum = ii.s.column_sum(c);
            prop_assert!(sum == 1 || sum == 2);
        }
    }

    #[test]
    fn subitemset_isomorphism_is_reflexive(s in itemset_strategy(5, 6)) {
        let inst = IiInstance { s: s.clone(), t: s };
        let j = si_decide(&inst).unwrap();
        prop_assert!(j.is_some());
        prop_assert!(verify_si_witness(&inst, &j.unwrap()));
    }

    #[test]
    fn sorted_inputs_are_fixed_points(net in network_strategy(6)) {
        let n = net.channels();
        for k in 0..=n {
            let mask = if k == 0 { 0 } else { ((1u64 << k) - 1) << (n - k) };
            prop_assert!(mask_is_sorted(n, mask));
            prop_assert_eq!(net.eval_mask(mask), mask);
        }
    }

    #[test]
    fn sorts_iff_output_count_is_n_plus_one(net in network_strategy(5)) {
        let outputs = net.output_itemset(20).unwrap();
        prop_assert_eq!(net.sorts(20).unwrap(), outputs.len() == net.channels() + 1);
    }

    #[test]
    fn appending_layers_never_grows_outputs(net in network_strategy(5)) {
        let before = net.output_itemset(20).unwrap().len();
        let extended = net
            .with_layer(vec![Comparator::new(0, 1).unwrap()])
            .unwrap();
        prop_assert!(extended.output_itemset(20).unwrap().len() <= before);
    }

    #[test]
    fn relabeling_transports_outputs_by_rho(
        (net, p) in network_strategy(5)
            .prop_flat_map(|net| {
                let n = net.channels();
                (Just(net), permutation_of(n))
            })
    ) {
        let (relabeled, rho) = net.relabel(&p).unwrap();
        let lhs = relabeled.output_itemset(20).unwrap();
        let rhs = net.output_itemset(20).unwrap().apply(&rho).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
