//! Full analysis of the Černý family: the classical slowly synchronizing
//! automata with reset length (n-1)^2 and maximal state complexity of their
//! synchronizing-word language.
//!
//! Run with: cargo run -p syncreach --example analyze_cerny

use syncreach::families::cerny;
use syncreach::power::{analyze, max_syn_complexity};
use syncreach::Limits;

fn main() {
    let limits = Limits::default();
    for n in 3..=8 {
        let automaton = cerny(n).unwrap();
        let report = analyze(&automaton, &limits).unwrap();
        let word = report.shortest_word.as_ref().unwrap();
        println!("Cerny automaton on {} states", n);
        println!("  shortest reset word: {}", automaton.format_word(word));
        println!(
            "  length {} = (n-1)^2 = {}",
            word.len(),
            (n - 1) * (n - 1)
        );
        println!(
            "  completely reachable: {} ({} subsets)",
            report.completely_reachable, report.reachable_subset_count
        );
        println!(
            "  sc(Syn) = {} (sharp bound 2^n - n = {})",
            report.sc_syn.unwrap(),
            max_syn_complexity(n)
        );
        println!();
    }
}
