//! Parse an automaton from the `.aut` text format and compute its shortest
//! reset word by breadth-first search over the power automaton. Ties among
//! minimum-length words go to the lexicographically smallest letter
//! sequence, so the output is reproducible.
//!
//! Run with: cargo run -p syncreach --example shortest_reset

use syncreach::format::parse_automaton;
use syncreach::power::{is_synchronizing, shortest_sync_word};
use syncreach::Limits;

const INPUT: &str = "\
# a 5-state automaton with a rotation and a partial merge
states 5
letter r 1 2 3 4 0
letter m 0 1 2 3 0
";

const PERMUTATIONS_ONLY: &str = "\
states 4
letter a 1 2 3 0
letter b 1 0 2 3
";

fn main() {
    let limits = Limits::default();

    let automaton = parse_automaton(INPUT).unwrap();
    println!("synchronizing: {}", is_synchronizing(&automaton));
    let word = shortest_sync_word(&automaton, &limits).unwrap().unwrap();
    println!(
        "shortest reset word: {} (length {})",
        automaton.format_word(&word),
        word.len()
    );
    let image = automaton.apply_word(&automaton.full_states(), &word);
    println!("image of the full state set: {}", image);

    // permutations preserve cardinality, so no reset word can exist
    let rigid = parse_automaton(PERMUTATIONS_ONLY).unwrap();
    println!();
    println!("permutation-only automaton:");
    println!("  synchronizing: {}", is_synchronizing(&rigid));
    println!(
        "  shortest word: {:?}",
        shortest_sync_word(&rigid, &limits).unwrap()
    );
}
