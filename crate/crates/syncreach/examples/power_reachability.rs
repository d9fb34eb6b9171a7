//! Subset reachability in the power automaton: which sets of states can the
//! full state set be mapped onto? An automaton where every non-empty subset
//! is reachable is called completely reachable.
//!
//! Run with: cargo run -p syncreach --example power_reachability

use syncreach::families::cerny;
use syncreach::power::{is_completely_reachable_exact, reachable_subsets};
use syncreach::Limits;

fn main() {
    let limits = Limits::default();
    let automaton = cerny(4).unwrap();
    let subsets = reachable_subsets(&automaton, &limits).unwrap();
    println!(
        "Cerny automaton on 4 states: {} reachable subsets of 15 possible",
        subsets.len()
    );
    for (i, subset) in subsets.iter().enumerate() {
        println!("  {:2}: {}", i, subset);
    }
    println!(
        "completely reachable: {}",
        is_completely_reachable_exact(&automaton, &limits).unwrap()
    );

    // larger members of the family stay completely reachable
    for n in 5..=8 {
        let a = cerny(n).unwrap();
        println!(
            "cerny({}): completely reachable = {}",
            n,
            is_completely_reachable_exact(&a, &limits).unwrap()
        );
    }
}
