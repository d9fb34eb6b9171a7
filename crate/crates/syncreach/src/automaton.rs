use std::fmt;

use crate::error::{Error, Result};
use crate::graph;
use crate::state_set::StateSet;
use crate::transformation::Transformation;

/// A word over an automaton's alphabet, as a sequence of letter indices.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.0)
    }
}

/// A finite, deterministic, complete semi-automaton: a state count `n` and
/// one transformation of `{0, …, n-1}` per alphabet letter. States are the
/// indices `0..n`; letters are addressed by index and carry a display name.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiAutomaton {
    n: usize,
    letters: Vec<(String, Transformation)>,
}

impl SemiAutomaton {
    pub fn new(n: usize, letters: Vec<(String, Transformation)>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidAutomaton(
                "an automaton needs at least one state".into(),
            ));
        }
        if letters.is_empty() {
            return Err(Error::InvalidAutomaton(
                "an automaton needs at least one letter".into(),
            ));
        }
        for (name, action) in &letters {
            if action.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: action.degree(),
                });
            }
            if name.is_empty() {
                return Err(Error::InvalidAutomaton("empty letter name".into()));
            }
            if name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAutomaton(format!(
                    "letter name {:?} contains whitespace",
                    name
                )));
            }
        }
        for i in 0..letters.len() {
            for j in i + 1..letters.len() {
                if letters[i].0 == letters[j].0 {
                    return Err(Error::InvalidAutomaton(format!(
                        "duplicate letter name {:?}",
                        letters[i].0
                    )));
                }
            }
        }
        Ok(SemiAutomaton { n, letters })
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    pub fn letter_name(&self, letter: usize) -> &str {
        &self.letters[letter].0
    }

    pub fn letter_action(&self, letter: usize) -> &Transformation {
        &self.letters[letter].1
    }

    pub fn letters(&self) -> impl Iterator<Item = (&str, &Transformation)> {
        self.letters.iter().map(|(n, t)| (n.as_str(), t))
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|(n, _)| n == name)
    }

    /// The full state set `Q`. Requires `n ≤ 64`.
    pub fn full_states(&self) -> StateSet {
        StateSet::full(self.n)
    }

    /// One step of the power automaton: image of `s` under a letter.
    pub fn step_set(&self, s: &StateSet, letter: usize) -> StateSet {
        self.letters[letter].1.apply_set(s)
    }

    /// `δ(S, w)`, folding the word left to right.
    pub fn apply_word(&self, s: &StateSet, w: &Word) -> StateSet {
        assert_eq!(s.universe(), self.n, "state set universe mismatch");
        let mut current = *s;
        for &letter in w.letters() {
            assert!(letter < self.letters.len(), "letter index out of range");
            current = self.letters[letter].1.apply_set(&current);
        }
        current
    }

    /// `δ_w` as a single transformation of the states.
    pub fn word_transformation(&self, w: &Word) -> Transformation {
        let mut t = Transformation::identity(self.n);
        for &letter in w.letters() {
            assert!(letter < self.letters.len(), "letter index out of range");
            t = t
                .compose(&self.letters[letter].1)
                .expect("letter degrees are validated at construction");
        }
        t
    }

    /// Renders a word with the automaton's letter names; the empty word
    /// prints as `ε`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".into();
        }
        w.letters()
            .iter()
            .map(|&l| self.letters[l].0.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a space-separated sequence of letter names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            match self.letter_index(token) {
                Some(i) => letters.push(i),
                None => {
                    return Err(Error::InvalidAutomaton(format!(
                        "unknown letter {:?}",
                        token
                    )))
                }
            }
        }
        Ok(Word(letters))
    }

    /// Strong connectivity of the state digraph under all letters.
    pub fn is_strongly_connected(&self) -> bool {
        let adjacency: Vec<Vec<usize>> = (0..self.n)
            .map(|q| {
                let mut targets: Vec<usize> =
                    self.letters.iter().map(|(_, t)| t.apply(q)).collect();
                targets.sort_unstable();
                targets.dedup();
                targets
            })
            .collect();
        graph::strongly_connected_components(&adjacency).len() == 1
    }
}

impl fmt::Debug for SemiAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemiAutomaton(n={}", self.n)?;
        for (name, t) in &self.letters {
            write!(f, ", {}={}", name, t)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cerny;

    #[test]
    fn apply_word_on_cerny() {
        let a = cerny(4).unwrap();
        let q = a.full_states();
        let b = a.parse_word("b").unwrap();
        assert_eq!(a.apply_word(&q, &b), StateSet::from_states(4, [0, 1, 2]));
        assert_eq!(a.apply_word(&q, &Word::empty()), q);
    }

    #[test]
    fn apply_word_folds() {
        let a = cerny(4).unwrap();
        let q = a.full_states();
        let bab = a.parse_word("b a b").unwrap();
        let ba = a.parse_word("b a").unwrap();
        let b = a.parse_word("b").unwrap();
        assert_eq!(
            a.apply_word(&q, &bab),
            a.apply_word(&a.apply_word(&q, &ba), &b)
        );
    }

    #[test]
    fn word_transformation_cases() {
        let a = cerny(4).unwrap();
        assert!(a.word_transformation(&Word::empty()).is_identity());
        let b = a.parse_word("b").unwrap();
        assert_eq!(&a.word_transformation(&b), a.letter_action(1));
        let aaaa = a.parse_word("a a a a").unwrap();
        assert!(a.word_transformation(&aaaa).is_identity());
    }

    #[test]
    fn rank_of_word_matches_image_of_full_set() {
        let a = cerny(5).unwrap();
        let w = a.parse_word("b a b b a").unwrap();
        let t = a.word_transformation(&w);
        assert_eq!(t.rank(), a.apply_word(&a.full_states(), &w).len());
    }

    #[test]
    fn construction_validation() {
        let id = Transformation::identity(3);
        assert!(SemiAutomaton::new(3, vec![]).is_err());
        assert!(SemiAutomaton::new(3, vec![("a b".into(), id.clone())]).is_err());
        assert!(SemiAutomaton::new(3, vec![("".into(), id.clone())]).is_err());
        assert!(SemiAutomaton::new(
            3,
            vec![("a".into(), id.clone()), ("a".into(), id.clone())]
        )
        .is_err());
        assert!(SemiAutomaton::new(4, vec![("a".into(), id)]).is_err());
    }

    #[test]
    fn strongly_connected() {
        assert!(cerny(4).unwrap().is_strongly_connected());
        let id = Transformation::identity(3);
        let a = SemiAutomaton::new(3, vec![("a".into(), id)]).unwrap();
        assert!(!a.is_strongly_connected());
    }
}
