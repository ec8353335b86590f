//! Relations checked against a brute-force scan of cycle traversals.

use std::collections::HashSet;

use brauer_core::fixtures::example_configuration;
use brauer_core::generator::{generate_random, GeneratorBounds};
use brauer_core::quiver::{build_quiver, generate_relations, special_cycles, ArrowIx};
use brauer_core::{BrauerConfiguration, VertexId};

/// Pairs (a, b) with b right after a somewhere in a traversal of C^μ f(C).
fn consecutive_in_traversals(g: &BrauerConfiguration) -> HashSet<(ArrowIx, ArrowIx)> {
    let q = build_quiver(g).unwrap();
    let mut pairs = HashSet::new();
    for a in g.nontruncated_vertices() {
        let mu = g.multiplicity(a).unwrap() as usize;
        for c in special_cycles(g, &q, a).unwrap() {
            let mut walk: Vec<ArrowIx> = c
                .arrows
                .iter()
                .copied()
                .cycle()
                .take(mu * c.len())
                .collect();
            walk.push(c.arrows[0]);
            pairs.extend(walk.windows(2).map(|w| (w[0], w[1])));
        }
    }
    pairs
}

fn check_type_three(g: &BrauerConfiguration) {
    let q = build_quiver(g).unwrap();
    let rel = generate_relations(g, &q).unwrap();
    let consecutive = consecutive_in_traversals(g);
    let mut expected = HashSet::new();
    for (i, a) in q.arrows().iter().enumerate() {
        for (j, b) in q.arrows().iter().enumerate() {
            if a.target == b.source && !consecutive.contains(&(ArrowIx(i), ArrowIx(j))) {
                expected.insert((ArrowIx(i), ArrowIx(j)));
            }
        }
    }
    let got: HashSet<_> = rel.type_three.iter().copied().collect();
    assert_eq!(got.len(), rel.type_three.len());
    assert_eq!(got, expected);
}

#[test]
fn example_type_three_matches_scan() {
    let g = example_configuration();
    check_type_three(&g);

    let q = build_quiver(&g).unwrap();
    let rel = generate_relations(&g, &q).unwrap();
    let a22 = q.find_arrow(&VertexId::new("2"), 2).unwrap();
    let a11 = q.find_arrow(&VertexId::new("1"), 1).unwrap();
    assert!(!consecutive_in_traversals(&g).contains(&(a22, a11)));
    assert!(rel.type_three.contains(&(a22, a11)));
}

#[test]
fn random_type_three_matches_scan() {
    for seed in 0..200 {
        check_type_three(&generate_random(&GeneratorBounds::new(seed, 5, 5, 3, 3)).unwrap());
    }
}

#[test]
fn type_one_and_two_counts() {
    for seed in 0..200 {
        let g = generate_random(&GeneratorBounds::new(seed, 5, 5, 3, 3)).unwrap();
        let q = build_quiver(&g).unwrap();
        let rel = generate_relations(&g, &q).unwrap();

        let cycles: usize = g
            .nontruncated_vertices()
            .map(|a| special_cycles(&g, &q, a).unwrap().len())
            .sum();
        assert_eq!(rel.type_two.len(), cycles);

        // k cycles anchored at a polygon give k(k-1)/2 unordered pairs.
        let mut expected = 0;
        for p in g.polygons() {
            let k: u64 = p
                .members
                .iter()
                .filter(|(a, _)| !g.is_truncated(a).unwrap())
                .map(|(_, c)| c)
                .sum();
            expected += k * k.saturating_sub(1) / 2;
        }
        assert_eq!(rel.type_one.len() as u64, expected);
        for (c, d) in &rel.type_one {
            assert_eq!(c.cycle.anchor, d.cycle.anchor);
            assert_ne!(c.cycle, d.cycle);
        }
    }
}
