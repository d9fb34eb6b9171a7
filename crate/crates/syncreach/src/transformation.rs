use std::fmt;

use crate::error::{Error, Result};
use crate::state_set::StateSet;

/// A total map on the state set `{0, …, n-1}`, stored by its image vector:
/// `images[q]` is the image of state `q`.
///
/// Composition is read in automaton order everywhere in this crate: the word
/// `uv` applies `u` first and `v` second.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let n = images.len();
        for (state, &image) in images.iter().enumerate() {
            if image >= n {
                return Err(Error::ImageOutOfRange {
                    state,
                    image,
                    degree: n,
                });
            }
        }
        Ok(Transformation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Transformation {
            images: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, target: usize) -> Self {
        assert!(target < n);
        Transformation {
            images: vec![target; n],
        }
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are
    /// fixed. Rejects out-of-range or repeated points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        assert!(n >= 1);
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= n {
                    return Err(Error::ImageOutOfRange {
                        state: p,
                        image: p,
                        degree: n,
                    });
                }
                if seen[p] {
                    return Err(Error::InvalidGroup(format!(
                        "point {} appears in more than one cycle",
                        p
                    )));
                }
                seen[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Transformation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, q: usize) -> usize {
        self.images[q]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Cardinality of the image.
    pub fn rank(&self) -> usize {
        rank_of_images(&self.images)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(q, &i)| q == i)
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn is_idempotent(&self) -> bool {
        // f∘f = f iff f fixes every point of its image
        self.images.iter().all(|&i| self.images[i] == i)
    }

    /// Applies `self` first, then `second`.
    pub fn compose(&self, second: &Self) -> Result<Self> {
        if self.degree() != second.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: second.degree(),
            });
        }
        Ok(Transformation {
            images: self.images.iter().map(|&q| second.images[q]).collect(),
        })
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_permutation() {
            return None;
        }
        let mut inverse = vec![0; self.degree()];
        for (q, &i) in self.images.iter().enumerate() {
            inverse[i] = q;
        }
        Some(Transformation { images: inverse })
    }

    /// Conjugate of `self` by the permutation `g`: the map sending `x` to
    /// `g(self(g⁻¹(x)))`, i.e. `self` after relabelling the states by `g`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        let g_inv = g.inverse().ok_or(Error::NotAPermutation)?;
        g_inv.compose(self)?.compose(g)
    }

    /// Image of a set of states.
    pub fn apply_set(&self, s: &StateSet) -> StateSet {
        assert_eq!(s.universe(), self.degree(), "universe mismatch");
        StateSet::from_states(s.universe(), s.iter().map(|q| self.images[q]))
    }

    /// Full preimage `{q | self(q) ∈ s}`.
    pub fn preimage(&self, s: &StateSet) -> StateSet {
        assert_eq!(s.universe(), self.degree(), "universe mismatch");
        StateSet::from_states(
            s.universe(),
            (0..self.degree()).filter(|&q| s.contains(self.images[q])),
        )
    }
}

/// Image cardinality of a raw image vector; bitmask-based for degrees that
/// fit in a word.
pub(crate) fn rank_of_images(images: &[usize]) -> usize {
    if images.len() <= 64 {
        let mut mask = 0u64;
        for &i in images {
            mask |= 1 << i;
        }
        mask.count_ones() as usize
    } else {
        let mut seen = vec![false; images.len()];
        let mut rank = 0;
        for &i in images {
            if !seen[i] {
                seen[i] = true;
                rank += 1;
            }
        }
        rank
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", img)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle4() -> Transformation {
        Transformation::new(vec![1, 2, 3, 0]).unwrap()
    }

    fn merge4() -> Transformation {
        // i ↦ i for i < 3, 3 ↦ 0
        Transformation::new(vec![0, 1, 2, 0]).unwrap()
    }

    #[test]
    fn identity_compose() {
        let t = merge4();
        let id = Transformation::identity(4);
        assert_eq!(id.compose(&t).unwrap(), t);
        assert_eq!(t.compose(&id).unwrap(), t);
    }

    #[test]
    fn constant_absorbs() {
        let t = cycle4();
        let c = Transformation::constant(4, 0);
        assert_eq!(t.compose(&c).unwrap(), c);
    }

    #[test]
    fn compose_applies_left_to_right() {
        // cycle then merge: images [1, 2, 0, 0]
        let result = cycle4().compose(&merge4()).unwrap();
        assert_eq!(result.images(), &[1, 2, 0, 0]);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let t3 = Transformation::identity(3);
        let t4 = Transformation::identity(4);
        assert_eq!(
            t3.compose(&t4),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn rank_values() {
        assert_eq!(Transformation::identity(5).rank(), 5);
        assert_eq!(Transformation::constant(5, 3).rank(), 1);
        assert_eq!(merge4().rank(), 3);
    }

    #[test]
    fn permutation_iff_distinct_images() {
        assert!(cycle4().is_permutation());
        assert!(!merge4().is_permutation());
        assert!(!Transformation::constant(3, 0).is_permutation());
    }

    #[test]
    fn preimage_cases() {
        let s = StateSet::from_states(4, [0]);
        assert_eq!(
            merge4().preimage(&s),
            StateSet::from_states(4, [0, 3])
        );
        let id = Transformation::identity(4);
        let any = StateSet::from_states(4, [1, 3]);
        assert_eq!(id.preimage(&any), any);
        assert_eq!(merge4().preimage(&StateSet::full(4)), StateSet::full(4));
    }

    #[test]
    fn idempotents() {
        let f = Transformation::new(vec![0, 0, 2, 3]).unwrap();
        assert!(f.is_idempotent());
        assert_eq!(f.compose(&f).unwrap(), f);
        assert!(!cycle4().is_idempotent());
        assert!(Transformation::identity(4).is_idempotent());
    }

    #[test]
    fn inverse_roundtrip() {
        let g = cycle4();
        let inv = g.inverse().unwrap();
        assert!(g.compose(&inv).unwrap().is_identity());
        assert!(merge4().inverse().is_none());
    }

    #[test]
    fn cycles_build_permutations() {
        let g = Transformation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(g.images(), &[1, 2, 3, 0]);
        let h = Transformation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(h.images(), &[1, 0, 3, 2]);
        assert!(Transformation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Transformation::from_cycles(3, &[vec![0, 5]]).is_err());
    }

    #[test]
    fn out_of_range_image_rejected() {
        assert!(Transformation::new(vec![0, 3]).is_err());
        assert!(Transformation::new(vec![]).is_err());
    }
}
