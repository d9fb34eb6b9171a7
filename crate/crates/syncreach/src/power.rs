//! Exact analyses on the power automaton: synchronizability, shortest reset
//! word, complete reachability, and the state complexity of the set of
//! synchronizing words.
//!
//! The power automaton has the subsets of `Q` as states, starts at `Q`,
//! accepts the singletons, and inherits the letter actions; it recognizes
//! exactly the synchronizing words. The empty set is never reachable from
//! `Q`, so the state complexity of the accepted language is at most
//! `2^n - n` (the n singletons collapse to one class).

use std::collections::HashMap;

use crate::automaton::{SemiAutomaton, Word};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::state_set::StateSet;

fn ensure_exhaustive(a: &SemiAutomaton, limits: &Limits) -> Result<()> {
    let n = a.state_count();
    if n > StateSet::MAX_UNIVERSE {
        return Err(Error::StateSpaceTooLarge {
            n,
            limit: StateSet::MAX_UNIVERSE,
        });
    }
    if n > limits.exhaustive_n {
        return Err(Error::StateSpaceTooLarge {
            n,
            limit: limits.exhaustive_n,
        });
    }
    Ok(())
}

fn pair_index(n: usize, p: usize, q: usize) -> usize {
    debug_assert!(p < q && q < n);
    p * n - p * (p + 1) / 2 + (q - p - 1)
}

/// A view of an automaton as its power automaton: states are the subsets of
/// `Q`, the start state is `Q` itself, the accepting states are the
/// singletons, and a letter acts by taking images. The empty set is never
/// reachable from the start state.
pub struct PowerAutomatonView<'a> {
    source: &'a SemiAutomaton,
}

impl<'a> PowerAutomatonView<'a> {
    pub fn new(source: &'a SemiAutomaton) -> Self {
        PowerAutomatonView { source }
    }

    pub fn source(&self) -> &SemiAutomaton {
        self.source
    }

    pub fn start(&self) -> StateSet {
        self.source.full_states()
    }

    pub fn is_accepting(&self, s: &StateSet) -> bool {
        s.is_singleton()
    }

    pub fn step(&self, s: &StateSet, letter: usize) -> StateSet {
        self.source.step_set(s, letter)
    }

    /// Whether the view accepts a word, i.e. the word synchronizes the
    /// underlying automaton.
    pub fn accepts(&self, w: &Word) -> bool {
        self.is_accepting(&self.source.apply_word(&self.start(), w))
    }
}

/// Decides synchronizability by the classical pairwise criterion: the
/// automaton is synchronizing iff every 2-set of states can be merged.
/// Polynomial in `n`, no subset-space construction.
pub fn is_synchronizing(a: &SemiAutomaton) -> bool {
    let n = a.state_count();
    if n <= 1 {
        return true;
    }
    let pair_count = n * (n - 1) / 2;
    let mut mergeable = vec![false; pair_count];
    let mut queue: Vec<usize> = Vec::new();
    // reverse edges of the pair graph
    let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); pair_count];
    for p in 0..n {
        for q in p + 1..n {
            let source = pair_index(n, p, q);
            for letter in 0..a.letter_count() {
                let action = a.letter_action(letter);
                let (tp, tq) = (action.apply(p), action.apply(q));
                if tp == tq {
                    if !mergeable[source] {
                        mergeable[source] = true;
                        queue.push(source);
                    }
                } else {
                    let target = pair_index(n, tp.min(tq), tp.max(tq));
                    reverse[target].push(source);
                }
            }
        }
    }
    while let Some(t) = queue.pop() {
        for &s in &reverse[t] {
            if !mergeable[s] {
                mergeable[s] = true;
                queue.push(s);
            }
        }
    }
    mergeable.iter().all(|&m| m)
}

/// Index from subset bits to BFS discovery position: a direct table for
/// small universes, a hash map otherwise.
enum SubsetIndex {
    Table(Vec<u32>),
    Map(HashMap<u64, usize>),
}

impl SubsetIndex {
    fn new(n: usize) -> Self {
        if n <= 16 {
            SubsetIndex::Table(vec![u32::MAX; 1 << n])
        } else {
            SubsetIndex::Map(HashMap::new())
        }
    }

    fn get(&self, bits: u64) -> Option<usize> {
        match self {
            SubsetIndex::Table(table) => {
                let v = table[bits as usize];
                (v != u32::MAX).then_some(v as usize)
            }
            SubsetIndex::Map(map) => map.get(&bits).copied(),
        }
    }

    /// Returns false when the key was already present.
    fn insert(&mut self, bits: u64, position: usize) -> bool {
        match self {
            SubsetIndex::Table(table) => {
                if table[bits as usize] != u32::MAX {
                    return false;
                }
                table[bits as usize] = position as u32;
                true
            }
            SubsetIndex::Map(map) => map.insert(bits, position).is_none(),
        }
    }
}

/// BFS over the reachable part of the power automaton, in discovery order.
/// Letters are scanned in index order, so the order is deterministic and the
/// parent pointers describe lexicographically least shortest words.
fn power_bfs(a: &SemiAutomaton) -> (Vec<StateSet>, SubsetIndex, Vec<Option<(usize, usize)>>) {
    let start = a.full_states();
    let mut order: Vec<StateSet> = vec![start];
    let mut index = SubsetIndex::new(a.state_count());
    index.insert(start.bits(), 0);
    // parent[i] = (predecessor index, letter)
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut head = 0;
    while head < order.len() {
        let current = order[head];
        for letter in 0..a.letter_count() {
            let next = a.step_set(&current, letter);
            if index.insert(next.bits(), order.len()) {
                order.push(next);
                parent.push(Some((head, letter)));
            }
        }
        head += 1;
    }
    (order, index, parent)
}

/// All subsets reachable from `Q` in the power automaton, in BFS discovery
/// order. Always contains `Q`; never contains the empty set.
pub fn reachable_subsets(a: &SemiAutomaton, limits: &Limits) -> Result<Vec<StateSet>> {
    ensure_exhaustive(a, limits)?;
    Ok(power_bfs(a).0)
}

/// A minimum-length synchronizing word, or `None` when the automaton is not
/// synchronizing. Ties are broken by the lexicographically smallest sequence
/// of letter indices.
pub fn shortest_sync_word(a: &SemiAutomaton, limits: &Limits) -> Result<Option<Word>> {
    ensure_exhaustive(a, limits)?;
    let (order, _, parent) = power_bfs(a);
    for (i, set) in order.iter().enumerate() {
        if set.is_singleton() {
            let mut letters = Vec::new();
            let mut at = i;
            while let Some((prev, letter)) = parent[at] {
                letters.push(letter);
                at = prev;
            }
            letters.reverse();
            return Ok(Some(Word::new(letters)));
        }
    }
    Ok(None)
}

/// Exhaustive complete-reachability test: exactly the `2^n - 1` non-empty
/// subsets are reachable from `Q`.
pub fn is_completely_reachable_exact(a: &SemiAutomaton, limits: &Limits) -> Result<bool> {
    ensure_exhaustive(a, limits)?;
    let count = power_bfs(a).0.len() as u128;
    Ok(count == (1u128 << a.state_count()) - 1)
}

/// The minimal complete DFA of the set of synchronizing words: the reachable
/// subsets of the power automaton refined by distinguishability (Moore
/// partition refinement seeded with singletons vs non-singletons).
pub struct SynMinimalDfa {
    class_count: usize,
    start_class: usize,
    accepting: Vec<bool>,
    transitions: Vec<Vec<usize>>, // [class][letter]
}

impl SynMinimalDfa {
    pub fn state_count(&self) -> usize {
        self.class_count
    }

    pub fn accepts(&self, w: &Word) -> bool {
        let mut class = self.start_class;
        for &letter in w.letters() {
            class = self.transitions[class][letter];
        }
        self.accepting[class]
    }
}

/// Largest reachable-part size handled by the quadratic pair-marking route;
/// beyond it the memory for the pair table is not worth it and Moore
/// refinement takes over.
const PAIR_MARKING_MAX_STATES: usize = 4096;

/// Distinguishability classes via backward pair marking (table filling):
/// mark pairs with differing acceptance, propagate along letter preimages,
/// then union the unmarked pairs. Quadratic in `m` but pass-free.
fn classes_by_pair_marking(
    m: usize,
    letter_count: usize,
    transitions: &[Vec<usize>],
    accepting: &[bool],
) -> Vec<usize> {
    let entry = |i: usize, j: usize| {
        let (i, j) = (i.min(j), i.max(j));
        i * m - i * (i + 1) / 2 + (j - i - 1)
    };
    let mut marked = vec![false; m * (m - 1) / 2];
    let mut preimages: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); m]; letter_count];
    for (i, row) in transitions.iter().enumerate() {
        for letter in 0..letter_count {
            preimages[letter][row[letter]].push(i);
        }
    }
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if accepting[i] != accepting[j] {
                marked[entry(i, j)] = true;
                queue.push((i, j));
            }
        }
    }
    while let Some((i, j)) = queue.pop() {
        for letter in 0..letter_count {
            for &u in &preimages[letter][i] {
                for &v in &preimages[letter][j] {
                    if u != v && !marked[entry(u, v)] {
                        marked[entry(u, v)] = true;
                        queue.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
    }
    // unmarked pairs are equivalent; number the classes by their smallest
    // member
    let mut class = vec![usize::MAX; m];
    let mut count = 0;
    for i in 0..m {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = count;
        for j in i + 1..m {
            if class[j] == usize::MAX && !marked[entry(i, j)] {
                class[j] = count;
            }
        }
        count += 1;
    }
    class
}

/// Distinguishability classes by Moore refinement; linear memory, up to `m`
/// passes.
fn classes_by_moore_refinement(
    m: usize,
    letter_count: usize,
    transitions: &[Vec<usize>],
    accepting: &[bool],
) -> Vec<usize> {
    let mut class: Vec<usize> = accepting.iter().map(|&acc| usize::from(acc)).collect();
    let mut class_count = 2.min(m);
    loop {
        let mut assignment: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next_class = vec![0usize; m];
        for i in 0..m {
            let mut signature = Vec::with_capacity(letter_count + 1);
            signature.push(class[i]);
            for letter in 0..letter_count {
                signature.push(class[transitions[i][letter]]);
            }
            let fresh = assignment.len();
            let id = *assignment.entry(signature).or_insert(fresh);
            next_class[i] = id;
        }
        let new_count = assignment.len();
        class = next_class;
        if new_count == class_count {
            return class;
        }
        class_count = new_count;
    }
}

pub fn syn_minimal_dfa(a: &SemiAutomaton, limits: &Limits) -> Result<SynMinimalDfa> {
    ensure_exhaustive(a, limits)?;
    let (order, index, _) = power_bfs(a);
    let m = order.len();
    let letter_count = a.letter_count();
    let mut transitions = vec![vec![0usize; letter_count]; m];
    for (i, set) in order.iter().enumerate() {
        for letter in 0..letter_count {
            let next = a.step_set(set, letter);
            transitions[i][letter] = index.get(next.bits()).expect("closed under letters");
        }
    }
    let accepting: Vec<bool> = order.iter().map(|s| s.is_singleton()).collect();

    let class = if m <= PAIR_MARKING_MAX_STATES {
        classes_by_pair_marking(m, letter_count, &transitions, &accepting)
    } else {
        classes_by_moore_refinement(m, letter_count, &transitions, &accepting)
    };
    let class_count = class.iter().copied().max().unwrap_or(0) + 1;

    let mut quotient_transitions = vec![vec![0usize; letter_count]; class_count];
    let mut quotient_accepting = vec![false; class_count];
    for i in 0..m {
        quotient_accepting[class[i]] = accepting[i];
        for letter in 0..letter_count {
            quotient_transitions[class[i]][letter] = class[transitions[i][letter]];
        }
    }
    Ok(SynMinimalDfa {
        class_count,
        start_class: class[0],
        accepting: quotient_accepting,
        transitions: quotient_transitions,
    })
}

/// State complexity of the set of synchronizing words. For a
/// non-synchronizing automaton the language is empty and the minimal
/// automaton has a single state, so the result is 1.
pub fn syn_state_complexity(a: &SemiAutomaton, limits: &Limits) -> Result<usize> {
    Ok(syn_minimal_dfa(a, limits)?.state_count())
}

/// The sharp upper bound `2^n - n` on `sc(Syn(A))`.
pub fn max_syn_complexity(n: usize) -> u128 {
    (1u128 << n) - n as u128
}

/// Summary of the power-automaton analyses for one automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynReport {
    pub synchronizing: bool,
    pub shortest_word: Option<Word>,
    pub sc_syn: Option<usize>,
    pub completely_reachable: bool,
    pub reachable_subset_count: usize,
}

pub fn analyze(a: &SemiAutomaton, limits: &Limits) -> Result<SynReport> {
    let shortest_word = shortest_sync_word(a, limits)?;
    let synchronizing = shortest_word.is_some();
    debug_assert_eq!(synchronizing, is_synchronizing(a));
    let reachable = reachable_subsets(a, limits)?;
    let completely_reachable =
        reachable.len() as u128 == (1u128 << a.state_count()) - 1;
    let sc_syn = syn_state_complexity(a, limits)?;
    Ok(SynReport {
        synchronizing,
        shortest_word,
        sc_syn: Some(sc_syn),
        completely_reachable,
        reachable_subset_count: reachable.len(),
    })
}

impl SynReport {
    /// Line-oriented `key: value` rendering.
    pub fn render_text(&self, a: &SemiAutomaton) -> String {
        let mut out = String::new();
        out.push_str(&format!("states: {}\n", a.state_count()));
        out.push_str(&format!("letters: {}\n", a.letter_count()));
        out.push_str(&format!(
            "alphabet: {}\n",
            a.letters().map(|(n, _)| n).collect::<Vec<_>>().join(" ")
        ));
        out.push_str(&format!("synchronizing: {}\n", self.synchronizing));
        match &self.shortest_word {
            Some(w) => {
                out.push_str(&format!("shortest_sync_length: {}\n", w.len()));
                out.push_str(&format!("shortest_sync_word: {}\n", a.format_word(w)));
            }
            None => {
                out.push_str("shortest_sync_length: -\n");
                out.push_str("shortest_sync_word: -\n");
            }
        }
        match self.sc_syn {
            Some(sc) => out.push_str(&format!("sc_syn: {}\n", sc)),
            None => out.push_str("sc_syn: -\n"),
        }
        out.push_str(&format!(
            "max_sc_bound: {}\n",
            max_syn_complexity(a.state_count())
        ));
        out.push_str(&format!(
            "completely_reachable: {}\n",
            self.completely_reachable
        ));
        out.push_str(&format!(
            "reachable_subsets: {}\n",
            self.reachable_subset_count
        ));
        out
    }

    /// Machine-readable single-line rendering.
    pub fn render_record(&self, a: &SemiAutomaton) -> String {
        let (len, word) = match &self.shortest_word {
            Some(w) if w.is_empty() => ("0".to_string(), "ε".to_string()),
            Some(w) => (
                w.len().to_string(),
                w.letters()
                    .iter()
                    .map(|&l| a.letter_name(l))
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            None => ("-".to_string(), "-".to_string()),
        };
        format!(
            "states={} letters={} synchronizing={} shortest_sync_length={} shortest_sync_word={} sc_syn={} completely_reachable={} reachable_subsets={}",
            a.state_count(),
            a.letter_count(),
            self.synchronizing,
            len,
            word,
            self.sc_syn.map_or("-".to_string(), |v| v.to_string()),
            self.completely_reachable,
            self.reachable_subset_count
        )
    }
}
