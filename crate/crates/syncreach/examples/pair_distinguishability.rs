//! Distinguishability of 2-sets in the power automaton, decided on the small
//! automaton over 2-subsets plus one merged singleton class. All 2-sets
//! being pairwise distinguishable is necessary for the synchronizing-word
//! language to reach its maximal state complexity 2^n - n — but, perhaps
//! surprisingly, not sufficient: the second automaton below is completely
//! reachable with all 2-sets distinguishable, yet two larger subsets merge.
//!
//! Run with: cargo run -p syncreach --example pair_distinguishability

use syncreach::automaton::SemiAutomaton;
use syncreach::families::cerny;
use syncreach::pairs::{all_two_sets_distinguishable, pair_marking, word_distinguishes};
use syncreach::power::{max_syn_complexity, syn_state_complexity};
use syncreach::{Limits, Transformation};

fn main() {
    let limits = Limits::default();

    let automaton = cerny(4).unwrap();
    println!(
        "Cerny(4): all 2-sets distinguishable = {}",
        all_two_sets_distinguishable(&automaton).unwrap()
    );
    // extract a concrete distinguishing word and replay it
    let marking = pair_marking(&automaton, true).unwrap();
    let (x, y) = ((0, 1), (2, 3));
    let word = marking.distinguishing_word(x, y).unwrap();
    println!(
        "  {{0,1}} vs {{2,3}}: word \"{}\" distinguishes: {}",
        automaton.format_word(&word),
        word_distinguishes(&automaton, x, y, &word)
    );
    println!(
        "  sc(Syn) = {} = bound {}",
        syn_state_complexity(&automaton, &limits).unwrap(),
        max_syn_complexity(4)
    );

    // the caveat: 2-set distinguishability does not force maximal sc
    let subtle = SemiAutomaton::new(
        3,
        vec![
            ("a".into(), Transformation::new(vec![2, 2, 1]).unwrap()),
            ("b".into(), Transformation::new(vec![2, 2, 0]).unwrap()),
            ("c".into(), Transformation::new(vec![0, 1, 0]).unwrap()),
        ],
    )
    .unwrap();
    println!();
    println!("3-state automaton a=[2,2,1], b=[2,2,0], c=[0,1,0]:");
    println!(
        "  all 2-sets distinguishable = {}",
        all_two_sets_distinguishable(&subtle).unwrap()
    );
    println!(
        "  sc(Syn) = {} < bound {}",
        syn_state_complexity(&subtle, &limits).unwrap(),
        max_syn_complexity(3)
    );
    println!("  ({{0,1,2}} and {{1,2}} share every successor row and merge)");
}
