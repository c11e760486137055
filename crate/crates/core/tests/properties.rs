// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use closeness_core::{
    bfs_distances, bridge_join, coalesce_join, compose_bridge, compose_coalesce, graph_closeness, line_graph, shadow,
    shadow_closeness, total_closeness, vertex_closeness, DyadicOp, DyadicValue, Graph,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn to_rational(v: &DyadicValue) -> BigRational {
    BigRational::new(v.numerator().clone(), BigInt::from(1) << v.exponent())
}

fn dyadic() -> impl Strategy<Value = (i64, u32)> {
    (-10_000i64..10_000, 0u32..=30)
}

/// Arbitrary simple graph: order in `1..=max_order`, each pair present with the given bit.
fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn connected_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order, any::<u64>(), any::<u64>()).prop_map(|(n, budget_seed, seed)| {
        let lo = n - 1;
        let hi = n * (n - 1) / 2;
        let budget = lo + (budget_seed as usize) % (hi - lo + 1);
        closeness_core::gen_random_connected(n, budget, seed).unwrap()
    })
}

/// Graph closeness from all ordered pairs with floating distances replaced by
/// an exact rational sum; independent of the histogram accumulation.
fn pairwise_oracle(g: &Graph) -> BigRational {
    let mut total = BigRational::from_integer(BigInt::from(0));
    for i in 0..g.order() {
        let row = bfs_distances(g, i).unwrap();
        for (j, d) in row.dist.iter().enumerate() {
            if let (true, Some(d)) = (j != i, d) {
                total += BigRational::new(BigInt::from(1), BigInt::from(1) << *d);
            }
        }
    }
    total
}

proptest! {
    #[test]
    fn arithmetic_matches_big_rationals((a, ea) in dyadic(), (b, eb) in dyadic()) {
        let x = DyadicValue::new(a, ea);
        let y = DyadicValue::new(b, eb);
        let (rx, ry) = (to_rational(&x), to_rational(&y));
        prop_assert_eq!(to_rational(&DyadicOp::Add.apply(&x, &y)), &rx + &ry);
        prop_assert_eq!(to_rational(&DyadicOp::Sub.apply(&x, &y)), &rx - &ry);
        prop_assert_eq!(to_rational(&DyadicOp::Mul.apply(&x, &y)), &rx * &ry);
        prop_assert_eq!(x.cmp(&y), rx.cmp(&ry));
    }

    #[test]
    fn normalization_is_canonical((a, e) in dyadic(), extra in 0u32..20) {
        let x = DyadicValue::new(a, e);
        prop_assert!(x.exponent() == 0 || x.numerator() % 2 != BigInt::from(0));
        // Idempotent, and invariant under re-expansion to a larger exponent.
        prop_assert_eq!(DyadicValue::new(x.numerator().clone(), x.exponent()), x.clone());
        let expanded = DyadicValue::new(x.numerator() << extra, x.exponent() + extra);
        prop_assert_eq!(&expanded, &x);
        prop_assert_eq!(x.to_string().parse::<DyadicValue>().unwrap(), x);
    }

    #[test]
    fn closeness_matches_pairwise_sum(g in graph(9)) {
        let report = graph_closeness(&g);
        prop_assert_eq!(to_rational(&report.total), pairwise_oracle(&g));
        let sum: DyadicValue = report.per_vertex.iter().sum();
        prop_assert_eq!(sum, report.total);
    }

    #[test]
    fn pair_contributions_are_symmetric(g in graph(9)) {
        let rows: Vec<_> = (0..g.order()).map(|i| bfs_distances(&g, i).unwrap()).collect();
        for i in 0..g.order() {
            for j in 0..g.order() {
                prop_assert_eq!(rows[i].dist[j], rows[j].dist[i]);
            }
        }
    }

    #[test]
    fn closeness_bounds(g in graph(9)) {
        let n = g.order();
        let report = graph_closeness(&g);
        for (i, c) in report.per_vertex.iter().enumerate() {
            let cap = DyadicValue::new(n as i64 - 1, 1);
            prop_assert!(*c >= DyadicValue::zero() && *c <= cap);
            prop_assert_eq!(*c == cap, g.degree(i) == n - 1);
        }
        let cap = DyadicValue::new((n * (n - 1)) as i64, 1);
        prop_assert!(report.total <= cap);
        prop_assert_eq!(report.total == cap, g.is_complete());
    }

    #[test]
    fn component_additivity(a in graph(7), b in graph(7)) {
        let union = a.disjoint_union(&b);
        prop_assert_eq!(total_closeness(&union), total_closeness(&a) + total_closeness(&b));
    }

    #[test]
    fn edge_monotonicity(g in graph(8)) {
        let base = total_closeness(&g);
        for (u, v) in g.non_edges().collect::<Vec<_>>() {
            let mut h = g.clone();
            h.add_edge(u, v).unwrap();
            prop_assert!(total_closeness(&h) >= base);
        }
        for (u, v) in g.edges().collect::<Vec<_>>() {
            let mut h = g.clone();
            h.remove_edge(u, v).unwrap();
            prop_assert!(total_closeness(&h) <= base);
        }
    }

    #[test]
    fn shadow_identity_on_connected_graphs(g in connected_graph(10)) {
        prop_assume!(g.order() >= 2);
        let expected = shadow_closeness(&total_closeness(&g), g.order());
        prop_assert_eq!(total_closeness(&shadow(&g).graph), expected);
    }

    #[test]
    fn shadow_copies_sit_at_distance_two(g in graph(9)) {
        prop_assume!(g.min_degree().unwrap_or(0) >= 1);
        let s = shadow(&g).graph;
        let n = g.order();
        for v in 0..n {
            prop_assert_eq!(bfs_distances(&s, v).unwrap().dist[v + n], Some(2));
        }
    }

    #[test]
    fn shadow_structure(g in graph(9)) {
        let s = shadow(&g).graph;
        prop_assert_eq!(s.order(), 2 * g.order());
        prop_assert_eq!(s.edge_count(), 4 * g.edge_count());
        s.validate().unwrap();
    }

    #[test]
    fn line_graph_degree_identity(g in graph(9)) {
        let l = line_graph(&g).graph;
        prop_assert_eq!(l.order(), g.edge_count());
        let expected: usize = (0..g.order()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.edge_count(), expected);
        l.validate().unwrap();
    }

    #[test]
    fn bridge_composition(a in graph(10), b in graph(10), ps in any::<usize>(), qs in any::<usize>()) {
        let (p, q) = (ps % a.order(), qs % b.order());
        let joined = bridge_join(&a, p, &b, q).unwrap().graph;
        let expected = compose_bridge(
            &total_closeness(&a),
            &total_closeness(&b),
            &vertex_closeness(&a, p).unwrap(),
            &vertex_closeness(&b, q).unwrap(),
        );
        prop_assert_eq!(total_closeness(&joined), expected);
    }

    #[test]
    fn coalesce_composition(a in graph(10), b in graph(10), ps in any::<usize>(), qs in any::<usize>()) {
        let (p, q) = (ps % a.order(), qs % b.order());
        let merged = coalesce_join(&a, p, &b, q).unwrap().graph;
        prop_assert_eq!(merged.order(), a.order() + b.order() - 1);
        let expected = compose_coalesce(
            &total_closeness(&a),
            &total_closeness(&b),
            &vertex_closeness(&a, p).unwrap(),
            &vertex_closeness(&b, q).unwrap(),
        );
        prop_assert_eq!(total_closeness(&merged), expected);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(back.order(), g.order());
    }
}
