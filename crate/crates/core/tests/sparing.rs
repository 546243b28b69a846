mod common;

use common::{arb_graph, brute_sparing, random_graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weak_iasi::graph::{
    graph_union, make_complete, make_complete_bipartite, make_cycle, make_path,
};
use weak_iasi::label::{is_weak_iasi, mono_indexed_edges, restrict};
use weak_iasi::sparing::{mono_count_spectrum, sparing_exact, sparing_oracle};
use weak_iasi::Graph;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_matches_enumeration(g in arb_graph(11)) {
        let cert = sparing_exact(&g).unwrap();
        prop_assert_eq!(cert.value, brute_sparing(&g));
        prop_assert_eq!(cert.value, sparing_oracle(&g).unwrap());
        prop_assert!(is_weak_iasi(&g, &cert.labeling).unwrap().verdict());
        prop_assert_eq!(mono_indexed_edges(&g, &cert.labeling).unwrap(), cert.mono_edges);
    }

    #[test]
    fn removing_edges_never_increases_phi(g in arb_graph(10), keep in proptest::collection::vec(any::<bool>(), 45)) {
        let mut h = Graph::new();
        for v in g.vertices() {
            h.add_vertex(v);
        }
        for (e, k) in g.edges().zip(keep) {
            if k {
                h.add_edge(e.lo(), e.hi()).unwrap();
            }
        }
        prop_assert!(sparing_exact(&h).unwrap().value <= sparing_exact(&g).unwrap().value);
    }

    #[test]
    fn restriction_stays_weak(g in arb_graph(10), keep in proptest::collection::vec(any::<bool>(), 10)) {
        let cert = sparing_exact(&g).unwrap();
        let mut h = Graph::new();
        for (v, k) in g.vertices().zip(&keep) {
            if *k {
                h.add_vertex(v);
            }
        }
        for e in g.edges() {
            if h.contains_vertex(e.lo()) && h.contains_vertex(e.hi()) {
                h.add_edge(e.lo(), e.hi()).unwrap();
            }
        }
        let f = restrict(&cert.labeling, &h).unwrap();
        prop_assert!(is_weak_iasi(&h, &f).unwrap().verdict());
    }

    #[test]
    fn disjoint_union_is_additive(a in arb_graph(7), b in arb_graph(7)) {
        let b = b.shifted(a.max_id().map_or(0, |v| v.0 + 1)).unwrap();
        let u = graph_union(&a, &b);
        let sum = sparing_exact(&a).unwrap().value + sparing_exact(&b).unwrap().value;
        prop_assert_eq!(sparing_exact(&u).unwrap().value, sum);
    }
}

#[test]
fn cycle_spectra_keep_parity() {
    for n in 3..=16u32 {
        let spectrum = mono_count_spectrum(&make_cycle(n).unwrap()).unwrap();
        assert!(
            spectrum.iter().all(|x| x % 2 == (n % 2) as usize),
            "C_{n}: {spectrum:?}"
        );
        assert_eq!(spectrum.iter().next(), Some(&((n % 2) as usize)));
    }
}

#[test]
fn complete_graphs() {
    for n in 2..=9u32 {
        let want = ((n - 1) * (n - 2) / 2) as usize;
        assert_eq!(
            sparing_exact(&make_complete(n).unwrap()).unwrap().value,
            want
        );
        assert_eq!(brute_sparing(&make_complete(n).unwrap()), want);
    }
}

#[test]
fn bipartite_graphs_need_no_mono_edges() {
    for a in 1..=5 {
        for b in 1..=5 {
            assert_eq!(
                sparing_exact(&make_complete_bipartite(a, b).unwrap())
                    .unwrap()
                    .value,
                0
            );
        }
    }
    for n in 1..=12 {
        assert_eq!(sparing_exact(&make_path(n).unwrap()).unwrap().value, 0);
    }
}

#[test]
fn seeded_random_graphs_up_to_sixteen_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(12..=16);
        let p = rng.gen_range(0.15..0.7);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(sparing_exact(&g).unwrap().value, brute_sparing(&g), "{g:?}");
    }
}
