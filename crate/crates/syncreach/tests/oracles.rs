//! Brute-force cross-checks: every frozen constant in these tests is
//! recomputed from first principles by an independent route.

mod common;

use rand::Rng;

use syncreach::families::{cerny, corpus_groups, cyclic_group};
use syncreach::format::parse_automaton;
use syncreach::group::{enumerate_rank_maps, group_automaton, is_primitive_blocks};
use syncreach::pairs::all_two_sets_distinguishable;
use syncreach::power::{
    is_completely_reachable_exact, is_synchronizing, max_syn_complexity, shortest_sync_word,
    syn_state_complexity,
};
use syncreach::random::{random_automaton, rng_from_seed};
use syncreach::transformation::Transformation;
use syncreach::{Limits, SemiAutomaton};

#[test]
fn bfs_shortest_word_equals_lex_enumeration() {
    let limits = Limits::default();
    // curated instances with the classical (n-1)^2 lengths
    for n in [3usize, 4] {
        let a = cerny(n).unwrap();
        let bfs = shortest_sync_word(&a, &limits).unwrap().unwrap();
        let brute = common::shortest_sync_word_bruteforce(&a, (n - 1) * (n - 1)).unwrap();
        assert_eq!(bfs, brute, "cerny({})", n);
    }
    // random instances: identical words, not just identical lengths
    let mut rng = rng_from_seed(21);
    let mut compared = 0;
    while compared < 60 {
        let n = rng.gen_range(2..=4);
        let letters = rng.gen_range(1..=3);
        let a = random_automaton(&mut rng, n, letters);
        let bfs = shortest_sync_word(&a, &limits).unwrap();
        match bfs {
            Some(word) => {
                let brute = common::shortest_sync_word_bruteforce(&a, word.len()).unwrap();
                assert_eq!(word, brute);
                compared += 1;
            }
            None => assert!(!is_synchronizing(&a)),
        }
    }
}

#[test]
fn rank_map_enumeration_matches_filtering_all_maps() {
    for n in 2..=4usize {
        // odometer over all n^n maps
        let mut by_rank = vec![0usize; n + 1];
        let total = (n as u64).pow(n as u32);
        for code in 0..total {
            let mut value = code;
            let mut images = Vec::with_capacity(n);
            for _ in 0..n {
                images.push((value % n as u64) as usize);
                value /= n as u64;
            }
            by_rank[Transformation::new(images).unwrap().rank()] += 1;
        }
        for r in 1..=n {
            assert_eq!(
                enumerate_rank_maps(n, r, None).unwrap().count(),
                by_rank[r],
                "n = {}, r = {}",
                n,
                r
            );
        }
    }
}

/// Search for a completely reachable automaton on 3 states with two
/// equivalent 2-sets. The 2-set test must answer false on it and its state
/// complexity must sit strictly below 2^n - n.
#[test]
fn exhaustive_search_finds_equivalent_two_sets() {
    let limits = Limits::default();
    let n = 3usize;
    let decode = |mut code: u32| {
        let mut images = Vec::with_capacity(n);
        for _ in 0..n {
            images.push((code % 3) as usize);
            code /= 3;
        }
        Transformation::new(images).unwrap()
    };
    let mut found = None;
    // no 2-letter instance exists on 3 states; scan 3-letter ones in lex
    // order of the letter codes
    'search: for a_code in 0..27u32 {
        for b_code in 0..27u32 {
            for c_code in 0..27u32 {
                let automaton = SemiAutomaton::new(
                    n,
                    vec![
                        ("a".into(), decode(a_code)),
                        ("b".into(), decode(b_code)),
                        ("c".into(), decode(c_code)),
                    ],
                )
                .unwrap();
                if is_completely_reachable_exact(&automaton, &limits).unwrap()
                    && !all_two_sets_distinguishable(&automaton).unwrap()
                {
                    found = Some(automaton);
                    break 'search;
                }
            }
        }
    }
    let automaton = found.expect("a 3-letter instance exists");
    assert!(
        (syn_state_complexity(&automaton, &limits).unwrap() as u128) < max_syn_complexity(n)
    );
    // and the brute-force refinement agrees that two 2-sets coincide
    assert!(!common::all_two_sets_distinguishable_bruteforce(&automaton));
}

/// Rystsov's characterization: primitive iff every rank-(n-1) extension
/// yields a synchronizing automaton.
#[test]
fn primitivity_matches_synchronization_of_all_extensions() {
    let limits = Limits::default();
    for (name, group) in corpus_groups() {
        let n = group.degree();
        if !(3..=6).contains(&n) {
            continue;
        }
        let mut all_synchronize = true;
        for f in enumerate_rank_maps(n, n - 1, Some(&group)).unwrap() {
            if !is_synchronizing(&group_automaton(&group, &f).unwrap()) {
                all_synchronize = false;
                break;
            }
        }
        assert_eq!(
            is_primitive_blocks(&group),
            all_synchronize,
            "rystsov mismatch on {}",
            name
        );
    }
    let _ = limits;
}

/// Adjoining any rank-4 map to the 5-cycle group gives an automaton whose
/// Γ₁ graph is strongly connected (so complete reachability is certified)
/// and whose 2-sets are all pairwise distinguishable.
#[test]
fn c5_with_any_rank_4_map_certifies_and_distinguishes() {
    use syncreach::gamma1::{completely_reachable_certificate, ReachabilityCertificate};
    let c5 = cyclic_group(5).unwrap();
    let mut swept = 0;
    for f in enumerate_rank_maps(5, 4, Some(&c5)).unwrap() {
        let automaton = group_automaton(&c5, &f).unwrap();
        assert_eq!(
            completely_reachable_certificate(&automaton),
            ReachabilityCertificate::Proven
        );
        assert!(all_two_sets_distinguishable(&automaton).unwrap());
        swept += 1;
    }
    // 5 * C(5,2) * 4! = 1200 rank-4 maps, in 240 conjugacy classes
    assert_eq!(swept, 240);
}

/// C5 has four orbits on ordered pairs of distinct points (the 20 pairs in
/// orbits of size 5), hence is not 2-transitive.
#[test]
fn c5_ordered_pair_orbits() {
    use std::collections::HashSet;
    let c5 = cyclic_group(5).unwrap();
    let gen: Vec<_> = c5.generator_actions().collect();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut orbit_count = 0;
    for p in 0..5 {
        for q in 0..5 {
            if p == q || seen.contains(&(p, q)) {
                continue;
            }
            orbit_count += 1;
            let mut frontier = vec![(p, q)];
            seen.insert((p, q));
            while let Some((x, y)) = frontier.pop() {
                for g in &gen {
                    let next = (g.apply(x), g.apply(y));
                    if seen.insert(next) {
                        frontier.push(next);
                    }
                }
            }
        }
    }
    assert_eq!(orbit_count, 4);
}

/// The cross-block idempotent on C4 keeps the automaton completely
/// reachable; a same-block idempotent breaks it. Both directions pinned.
#[test]
fn c4_idempotents_split_by_block_structure() {
    let limits = Limits::default();
    let c4 = cyclic_group(4).unwrap();
    // blocks of C4 are {0,2} and {1,3}; merging across blocks stays
    // completely reachable
    let cross_block = Transformation::new(vec![0, 0, 2, 3]).unwrap(); // 1 -> 0
    let a = group_automaton(&c4, &cross_block).unwrap();
    assert!(is_completely_reachable_exact(&a, &limits).unwrap());
    // merging inside a block does not
    let same_block = Transformation::new(vec![2, 1, 2, 3]).unwrap(); // 0 -> 2
    let a = group_automaton(&c4, &same_block).unwrap();
    assert!(!is_completely_reachable_exact(&a, &limits).unwrap());
    assert!(!is_synchronizing(&a));
}

#[test]
fn gamma1_dot_for_parsed_automaton_is_stable() {
    // a two-state automaton whose only letter merges: single seeded edge
    let a = parse_automaton("states 2\nletter m 0 0\n").unwrap();
    let dot = syncreach::gamma1::gamma1(&a).to_dot();
    assert_eq!(dot, "digraph gamma1 {\n  0;\n  1;\n  1 -> 0;\n}\n");
}
