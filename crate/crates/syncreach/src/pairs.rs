//! Polynomial-time distinguishability test for the 2-sets of states in the
//! power automaton.
//!
//! Distinguishability of 2-sets can be decided on the small automaton `P₂`
//! whose states are the 2-subsets plus a single absorbing, accepting class
//! standing for all singletons (which are never pairwise distinguishable and
//! can be merged up front). Because the image of a 2-set under a letter is a
//! 2-set or a singleton, `P₂` is closed under the letter actions, so a pair
//! of 2-sets is distinguishable in `P₂` exactly when it is distinguishable in
//! the full power automaton.
//!
//! For a completely reachable automaton, pairwise distinguishability of all
//! 2-sets is *necessary* for `sc(Syn(A)) = 2^n - n`: maximal state
//! complexity means all reachable non-singleton subsets are pairwise
//! distinguishable, and complete reachability makes every 2-set such a
//! state. It is not sufficient. A 3-state witness (frozen in the tests
//! below) is completely reachable and strongly connected with all three
//! 2-sets pairwise distinguishable, yet `Q` and a 2-set have identical
//! successor rows under every letter and collapse in the minimal automaton,
//! so its sc stays below the bound. Callers that need `sc = 2^n - n` exactly
//! (e.g. the sync-maximality sweep) use this test as a fast rejection and
//! confirm survivors against the exact state complexity.
//!
//! The marking runs as a queue-driven backward propagation over unordered
//! pairs of `P₂`-states instead of the naive repeated full-table passes; the
//! fixpoint is the same.

use crate::automaton::{SemiAutomaton, Word};
use crate::error::{Error, Result};
use crate::state_set::StateSet;

/// The automaton on all 2-subsets of the states plus one merged
/// singleton-class state. The class is absorbing and accepting.
pub struct PairAutomaton {
    n: usize,
    pairs: Vec<(usize, usize)>,
    transitions: Vec<Vec<usize>>, // [letter][state] -> state
}

impl PairAutomaton {
    /// Number of states: `n(n-1)/2` pairs plus the singleton class.
    pub fn state_count(&self) -> usize {
        self.pairs.len() + 1
    }

    /// Index of the absorbing singleton-class state.
    pub fn singleton_class(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair_states(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.transitions[letter][state]
    }

    pub fn pair_state_index(&self, p: usize, q: usize) -> Option<usize> {
        if p == q || p >= self.n || q >= self.n {
            return None;
        }
        let (p, q) = (p.min(q), p.max(q));
        Some(p * self.n - p * (p + 1) / 2 + (q - p - 1))
    }
}

pub fn build_pair_automaton(a: &SemiAutomaton) -> Result<PairAutomaton> {
    let n = a.state_count();
    if n < 2 {
        return Err(Error::Degenerate { n });
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for p in 0..n {
        for q in p + 1..n {
            pairs.push((p, q));
        }
    }
    let class = pairs.len();
    let mut transitions = vec![vec![0usize; pairs.len() + 1]; a.letter_count()];
    for letter in 0..a.letter_count() {
        let action = a.letter_action(letter);
        for (i, &(p, q)) in pairs.iter().enumerate() {
            let (tp, tq) = (action.apply(p), action.apply(q));
            transitions[letter][i] = if tp == tq {
                class
            } else {
                let (p2, q2) = (tp.min(tq), tp.max(tq));
                p2 * n - p2 * (p2 + 1) / 2 + (q2 - p2 - 1)
            };
        }
        transitions[letter][class] = class;
    }
    Ok(PairAutomaton {
        n,
        pairs,
        transitions,
    })
}

/// Result of the marking fixpoint over unordered pairs of `P₂`-states.
/// A marked pair is distinguishable; with witnesses enabled, a concrete
/// distinguishing word can be extracted for any marked pair.
pub struct PairMarking {
    automaton: PairAutomaton,
    marked: Vec<bool>,
    // (letter, successor state-pair index); None marks a base entry
    // (2-set vs singleton class), distinguished by the empty word
    parents: Option<Vec<Option<(usize, usize)>>>,
}

impl PairMarking {
    fn index(&self, i: usize, j: usize) -> usize {
        let m = self.automaton.state_count();
        let (i, j) = (i.min(j), i.max(j));
        debug_assert!(i < j && j < m);
        i * m - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn pair_automaton(&self) -> &PairAutomaton {
        &self.automaton
    }

    /// Distinguishability of two distinct `P₂`-states.
    pub fn is_marked(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        self.marked[self.index(i, j)]
    }

    pub fn marked_count(&self) -> usize {
        self.marked.iter().filter(|&&m| m).count()
    }

    /// True iff every pair of distinct 2-sets is marked.
    pub fn all_two_set_pairs_marked(&self) -> bool {
        let class = self.automaton.singleton_class();
        for i in 0..class {
            for j in i + 1..class {
                if !self.marked[self.index(i, j)] {
                    return false;
                }
            }
        }
        true
    }

    /// A word distinguishing the 2-sets `{p1,q1}` and `{p2,q2}`: exactly one
    /// of their images under the word is a singleton. `None` when the pair is
    /// unmarked or witnesses were not recorded.
    pub fn distinguishing_word(
        &self,
        first: (usize, usize),
        second: (usize, usize),
    ) -> Option<Word> {
        let parents = self.parents.as_ref()?;
        let i = self.automaton.pair_state_index(first.0, first.1)?;
        let j = self.automaton.pair_state_index(second.0, second.1)?;
        if i == j || !self.is_marked(i, j) {
            return None;
        }
        let mut word = Vec::new();
        let (mut i, mut j) = (i, j);
        while let Some((letter, _)) = parents[self.index(i, j)] {
            word.push(letter);
            let ni = self.automaton.step(i, letter);
            let nj = self.automaton.step(j, letter);
            i = ni.min(nj);
            j = ni.max(nj);
        }
        Some(Word::new(word))
    }
}

/// Runs the marking to its fixpoint. Marks never get removed; the queue
/// carries each newly marked pair exactly once.
pub fn pair_marking(a: &SemiAutomaton, with_witnesses: bool) -> Result<PairMarking> {
    let automaton = build_pair_automaton(a)?;
    let m = automaton.state_count();
    let entries = m * (m - 1) / 2;
    let mut marking = PairMarking {
        automaton,
        marked: vec![false; entries],
        parents: with_witnesses.then(|| vec![None; entries]),
    };

    // preimage lists per letter
    let letter_count = a.letter_count();
    let mut preimages: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); m]; letter_count];
    for letter in 0..letter_count {
        for state in 0..m {
            let target = marking.automaton.step(state, letter);
            preimages[letter][target].push(state);
        }
    }

    let class = marking.automaton.singleton_class();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for state in 0..class {
        let e = marking.index(state, class);
        marking.marked[e] = true;
        queue.push((state, class));
    }

    while let Some((i, j)) = queue.pop() {
        let source = marking.index(i, j);
        for letter in 0..letter_count {
            for &u in &preimages[letter][i] {
                for &v in &preimages[letter][j] {
                    if u == v {
                        continue;
                    }
                    let e = marking.index(u, v);
                    if !marking.marked[e] {
                        marking.marked[e] = true;
                        if let Some(parents) = marking.parents.as_mut() {
                            parents[e] = Some((letter, source));
                        }
                        queue.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
    }
    Ok(marking)
}

/// True iff every pair of distinct 2-subsets of the states is
/// distinguishable in the power automaton.
pub fn all_two_sets_distinguishable(a: &SemiAutomaton) -> Result<bool> {
    Ok(pair_marking(a, false)?.all_two_set_pairs_marked())
}

/// The polynomial 2-set screen for `sc(Syn(A)) = 2^n - n`: `false` rules
/// maximality out on completely reachable automata; `true` is necessary but
/// not conclusive (see the module docs). Only meaningful when the automaton
/// is completely reachable (or carries a Γ₁ certificate); the precondition
/// is not checked here because deciding it exactly is exponential. Callers
/// report which certificate accompanied the answer.
pub fn has_max_syn_sc(a: &SemiAutomaton) -> Result<bool> {
    all_two_sets_distinguishable(a)
}

/// Replay helper for witness words: exactly one of the two 2-sets must be
/// mapped to a singleton.
pub fn word_distinguishes(
    a: &SemiAutomaton,
    first: (usize, usize),
    second: (usize, usize),
    w: &Word,
) -> bool {
    let n = a.state_count();
    let s1 = StateSet::from_states(n, [first.0, first.1]);
    let s2 = StateSet::from_states(n, [second.0, second.1]);
    a.apply_word(&s1, w).is_singleton() != a.apply_word(&s2, w).is_singleton()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cerny;
    use crate::transformation::Transformation;

    #[test]
    fn pair_automaton_shape() {
        let a = cerny(4).unwrap();
        let pa = build_pair_automaton(&a).unwrap();
        assert_eq!(pa.state_count(), 7); // 6 pairs + class

        let swap = SemiAutomaton::new(
            2,
            vec![("s".into(), Transformation::from_cycles(2, &[vec![0, 1]]).unwrap())],
        )
        .unwrap();
        let pa = build_pair_automaton(&swap).unwrap();
        assert_eq!(pa.state_count(), 2);
        // the swap fixes both states
        assert_eq!(pa.step(0, 0), 0);
        assert_eq!(pa.step(1, 0), 1);

        let one = SemiAutomaton::new(1, vec![("a".into(), Transformation::identity(1))]).unwrap();
        assert!(matches!(
            build_pair_automaton(&one),
            Err(Error::Degenerate { n: 1 })
        ));
    }

    #[test]
    fn constant_letter_sends_every_pair_to_class() {
        let a =
            SemiAutomaton::new(3, vec![("c".into(), Transformation::constant(3, 0))]).unwrap();
        let pa = build_pair_automaton(&a).unwrap();
        for state in 0..pa.pair_states().len() {
            assert_eq!(pa.step(state, 0), pa.singleton_class());
        }
    }

    #[test]
    fn cerny_two_sets_all_distinguishable() {
        for n in 3..=8 {
            assert!(all_two_sets_distinguishable(&cerny(n).unwrap()).unwrap());
        }
    }

    #[test]
    fn permutation_automata_distinguish_nothing() {
        for n in 3..=5 {
            let cycle = Transformation::from_cycles(n, &[(0..n).collect()]).unwrap();
            let swap = Transformation::from_cycles(n, &[vec![0, 1]]).unwrap();
            let a = SemiAutomaton::new(n, vec![("r".into(), cycle), ("s".into(), swap)]).unwrap();
            assert!(!all_two_sets_distinguishable(&a).unwrap());
            // no marks ever reach pair/pair entries
            let marking = pair_marking(&a, false).unwrap();
            let class = marking.pair_automaton().singleton_class();
            for i in 0..class {
                for j in i + 1..class {
                    assert!(!marking.is_marked(i, j));
                }
            }
        }
    }

    #[test]
    fn n_equals_2_is_vacuously_true() {
        let swap = SemiAutomaton::new(
            2,
            vec![("s".into(), Transformation::from_cycles(2, &[vec![0, 1]]).unwrap())],
        )
        .unwrap();
        assert!(all_two_sets_distinguishable(&swap).unwrap());
    }

    #[test]
    fn witnesses_replay() {
        let a = cerny(4).unwrap();
        let marking = pair_marking(&a, true).unwrap();
        let pairs: Vec<(usize, usize)> = marking.pair_automaton().pair_states().to_vec();
        for (i, &x) in pairs.iter().enumerate() {
            for &y in pairs.iter().skip(i + 1) {
                let w = marking
                    .distinguishing_word(x, y)
                    .expect("all pairs distinguishable in C4");
                assert!(word_distinguishes(&a, x, y, &w), "word fails for {:?} {:?}", x, y);
            }
        }
    }

    #[test]
    fn marking_is_idempotent() {
        let a = cerny(5).unwrap();
        let m1 = pair_marking(&a, false).unwrap();
        let m2 = pair_marking(&a, false).unwrap();
        assert_eq!(m1.marked_count(), m2.marked_count());
    }

    // On this automaton Q = {0,1,2} and {1,2} have identical successor rows
    // under every letter and are both non-accepting, so they merge in the
    // minimal automaton even though the automaton is completely reachable
    // and all three 2-sets are pairwise distinguishable.
    #[test]
    fn two_set_distinguishability_does_not_force_max_sc() {
        use crate::limits::Limits;
        use crate::power::{
            is_completely_reachable_exact, max_syn_complexity, syn_state_complexity,
        };
        let a = SemiAutomaton::new(
            3,
            vec![
                ("a".into(), Transformation::new(vec![2, 2, 1]).unwrap()),
                ("b".into(), Transformation::new(vec![2, 2, 0]).unwrap()),
                ("c".into(), Transformation::new(vec![0, 1, 0]).unwrap()),
            ],
        )
        .unwrap();
        let limits = Limits::default();
        assert!(is_completely_reachable_exact(&a, &limits).unwrap());
        assert!(a.is_strongly_connected());
        assert!(all_two_sets_distinguishable(&a).unwrap());
        for letter in 0..3 {
            assert_eq!(
                a.step_set(&StateSet::full(3), letter),
                a.step_set(&StateSet::from_states(3, [1, 2]), letter)
            );
        }
        let sc = syn_state_complexity(&a, &limits).unwrap();
        assert_eq!(sc, 4);
        assert!((sc as u128) < max_syn_complexity(3));
    }
}
