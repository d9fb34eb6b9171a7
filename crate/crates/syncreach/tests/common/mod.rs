//! Brute-force oracles shared by the integration tests. Everything here
//! recomputes the properties from first principles, independently of the
//! library's algorithmic path.
//!
//! Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use syncreach::automaton::{SemiAutomaton, Word};
use syncreach::state_set::StateSet;

/// Distinguishability classes over ALL non-empty subsets of the full power
/// automaton (not only the reachable ones), by naive partition refinement.
/// Index of subset S = bits(S) - 1.
pub fn full_subset_classes(a: &SemiAutomaton) -> Vec<usize> {
    let n = a.state_count();
    assert!(n <= 16, "oracle is exponential, keep n small");
    let total = (1usize << n) - 1;
    let letters = a.letter_count();
    let mut transitions = vec![vec![0usize; letters]; total];
    for bits in 1..=total as u64 {
        let set = StateSet::from_bits(n, bits);
        for letter in 0..letters {
            transitions[bits as usize - 1][letter] =
                a.step_set(&set, letter).bits() as usize - 1;
        }
    }
    let mut class: Vec<usize> = (1..=total as u64)
        .map(|bits| usize::from(bits.count_ones() == 1))
        .collect();
    loop {
        let mut next = vec![0usize; total];
        let mut assignment: std::collections::HashMap<Vec<usize>, usize> =
            std::collections::HashMap::new();
        for i in 0..total {
            let mut signature = vec![class[i]];
            for letter in 0..letters {
                signature.push(class[transitions[i][letter]]);
            }
            let fresh = assignment.len();
            next[i] = *assignment.entry(signature).or_insert(fresh);
        }
        let stable = assignment.len()
            == {
                let mut distinct = class.clone();
                distinct.sort_unstable();
                distinct.dedup();
                distinct.len()
            };
        class = next;
        if stable {
            return class;
        }
    }
}

/// Independent route to "all 2-sets pairwise distinguishable": no two
/// distinct 2-sets share a distinguishability class in the full power
/// automaton.
pub fn all_two_sets_distinguishable_bruteforce(a: &SemiAutomaton) -> bool {
    let n = a.state_count();
    let classes = full_subset_classes(a);
    let mut seen = std::collections::HashSet::new();
    for set in StateSet::subsets_of_size(n, 2) {
        if !seen.insert(classes[set.bits() as usize - 1]) {
            return false;
        }
    }
    true
}

/// First synchronizing word in length-then-lex order, by plain enumeration.
pub fn shortest_sync_word_bruteforce(a: &SemiAutomaton, max_len: usize) -> Option<Word> {
    let letters = a.letter_count();
    let full = a.full_states();
    for length in 0..=max_len {
        let total = (letters as u64).pow(length as u32);
        let mut current = vec![0usize; length];
        for _ in 0..total {
            let word = Word::new(current.clone());
            if a.apply_word(&full, &word).is_singleton() {
                return Some(word);
            }
            // advance the odometer from the least significant (rightmost)
            // digit; scanning words this way is exactly lex order
            let mut position = length;
            while position > 0 {
                position -= 1;
                if current[position] + 1 < letters {
                    current[position] += 1;
                    for digit in current.iter_mut().skip(position + 1) {
                        *digit = 0;
                    }
                    break;
                }
            }
        }
    }
    None
}
