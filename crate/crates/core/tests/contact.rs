mod common;

use common::*;
use graph_burning::contact::{
    bootstrap_percolate, firefight_bruteforce, firefight_pk_free, is_pk_free, longest_induced_path_from,
    verify_firefighter, ContactError, PlacementFault,
};
use graph_burning::generators::{gnp, random_cograph, random_split};
use graph_burning::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0..0.6f64).prop_map(|(n, seed, p)| gnp(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

#[test]
fn three_path() {
    let g = Graph::path(3);
    assert_eq!(verify_firefighter(&g, 1, &[0]).unwrap().saved, 1);
    assert!(matches!(
        verify_firefighter(&g, 1, &[1]),
        Err(ContactError::InvalidPlacement { step: 2, vertex: 1, fault: PlacementFault::AlreadyBurned })
    ));
    let run = verify_firefighter(&g, 0, &[1]).unwrap();
    assert_eq!((run.saved, run.protected.clone()), (2, vec![1]));
    assert_eq!(firefight_bruteforce(&g, 0, 9).unwrap().saved, 2);
}

#[test]
fn derived_saved_counts() {
    for n in 2..=7 {
        for s in 0..n {
            assert_eq!(firefight_bruteforce(&Graph::complete(n), s, 9).unwrap().saved, 1, "K{n}");
        }
    }
    assert_eq!(firefight_bruteforce(&Graph::star(3), 0, 9).unwrap().saved, 1);
    assert_eq!(firefight_bruteforce(&Graph::star(3), 1, 9).unwrap().saved, 3);
}

#[test]
fn protecting_twice_is_invalid() {
    let g = Graph::path(6);
    assert!(matches!(
        verify_firefighter(&g, 0, &[3, 3]),
        Err(ContactError::InvalidPlacement { step: 3, fault: PlacementFault::AlreadyProtected, .. })
    ));
}

#[test]
fn pk_free_matches_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..60 {
        let n = rng.gen_range(1..=9);
        let g = if i % 2 == 0 { random_split(&mut rng, n, 0.4, false).0 } else { random_cograph(&mut rng, n, false) };
        assert!(!has_induced_path(&g, 5));
        assert!(is_pk_free(&g, 5));
        let s = rng.gen_range(0..n);
        let brute = firefight_bruteforce(&g, s, 9).unwrap();
        let fast = firefight_pk_free(&g, s, 5).unwrap();
        assert_eq!(fast.saved, brute.saved, "{:?} from {s}", g.edges());
        assert_eq!(naive_firefight(&g, s, &fast.placements), Some(fast.saved));
    }
}

#[test]
fn pk_free_edge_cases() {
    let g = Graph::path(4);
    assert!(firefight_pk_free(&g, 0, 2).unwrap().placements.is_empty());
    let cliques = Graph::complete(3).disjoint_union(&Graph::complete(4));
    assert!(is_pk_free(&cliques, 3));
    assert_eq!(firefight_pk_free(&cliques, 0, 3).unwrap().saved, cliques.order() - 3 + 1);
}

#[test]
fn optimal_strategies_are_short() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..80 {
        let n = rng.gen_range(1..=8);
        let g = gnp(&mut rng, n, 0.35);
        let s = rng.gen_range(0..n);
        let l = longest_induced_path_from(&g, s);
        let best = firefight_bruteforce(&g, s, 9).unwrap();
        assert!(best.placements.len() < l.max(1), "{} placements, l = {l}", best.placements.len());
    }
}

#[test]
fn percolation_examples() {
    let k4 = Graph::complete(4);
    let run = bootstrap_percolate(&k4, &[0, 1], 2).unwrap();
    assert!(run.percolates);
    assert_eq!(run.stabilized_at, 1);
    let p3 = Graph::path(3);
    let run = bootstrap_percolate(&p3, &[0, 2], 2).unwrap();
    assert_eq!(run.timeline[1], vec![0, 1, 2]);
    assert!(run.percolates && !run.literal_range);
    let all = bootstrap_percolate(&p3, &[0, 1, 2], 3).unwrap();
    assert!(all.percolates && all.literal_range);
    assert_eq!(all.stabilized_at, 0);
    assert!(matches!(bootstrap_percolate(&p3, &[0], 1), Err(ContactError::ThresholdTooSmall(1))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn firefighter_matches_naive(
        g in arb_graph(10),
        origin in 0usize..10,
        placements in prop::collection::vec(0usize..10, 0..5),
    ) {
        let n = g.order();
        let origin = origin % n;
        let placements: Vec<usize> = placements.into_iter().map(|v| v % n).collect();
        let naive = naive_firefight(&g, origin, &placements);
        match verify_firefighter(&g, origin, &placements) {
            Ok(run) => {
                prop_assert_eq!(Some(run.saved), naive);
                prop_assert_eq!(run.saved, n - run.burned.len());
            }
            Err(ContactError::InvalidPlacement { .. }) => prop_assert_eq!(naive, None),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn percolation_is_monotone(g in arb_graph(14), seed in prop::collection::vec(0usize..14, 0..6), r in 2usize..5) {
        let seed: Vec<usize> = seed.into_iter().map(|v| v % g.order()).collect();
        let run = bootstrap_percolate(&g, &seed, r).unwrap();
        prop_assert!(run.stabilized_at <= g.order());
        for pair in run.timeline.windows(2) {
            prop_assert!(pair[0].iter().all(|v| pair[1].contains(v)));
        }
        let last = run.timeline.last().unwrap();
        for v in 0..g.order() {
            if !last.contains(&v) {
                let count = last.iter().filter(|&&a| a == v || g.has_edge(a, v)).count();
                prop_assert!(count < r);
            }
        }
        prop_assert_eq!(run.percolates, last.len() == g.order());
    }
}
