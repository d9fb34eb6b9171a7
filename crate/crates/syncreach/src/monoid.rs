//! Enumeration of the transformation monoid of an automaton by closure under
//! composition. Exponential in general; used as a brute-force oracle.

use std::collections::HashSet;

use crate::automaton::SemiAutomaton;
use crate::error::{Error, Result};
use crate::transformation::Transformation;

/// All elements of `⟨δ_x | x ∈ Σ⟩` including the identity (the action of the
/// empty word), in BFS discovery order. Errors out when the monoid grows
/// past `cap`.
pub fn transformation_monoid(a: &SemiAutomaton, cap: usize) -> Result<Vec<Transformation>> {
    let identity = Transformation::identity(a.state_count());
    let mut seen: HashSet<Transformation> = HashSet::new();
    seen.insert(identity.clone());
    let mut order = vec![identity];
    let mut head = 0;
    while head < order.len() {
        let current = order[head].clone();
        for letter in 0..a.letter_count() {
            let next = current
                .compose(a.letter_action(letter))
                .expect("letter degrees are validated at construction");
            if seen.insert(next.clone()) {
                if order.len() >= cap {
                    return Err(Error::MonoidTooLarge { cap });
                }
                order.push(next);
            }
        }
        head += 1;
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cerny;

    #[test]
    fn cyclic_letter_generates_cyclic_monoid() {
        let a = SemiAutomaton::new(
            4,
            vec![(
                "a".into(),
                Transformation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
            )],
        )
        .unwrap();
        // identity + three non-trivial rotations
        assert_eq!(transformation_monoid(&a, 1000).unwrap().len(), 4);
    }

    #[test]
    fn contains_constant_iff_synchronizing() {
        let a = cerny(4).unwrap();
        let monoid = transformation_monoid(&a, 100_000).unwrap();
        assert!(monoid.iter().any(|t| t.rank() == 1));
    }

    #[test]
    fn cap_is_enforced() {
        let a = cerny(5).unwrap();
        assert!(matches!(
            transformation_monoid(&a, 10),
            Err(Error::MonoidTooLarge { cap: 10 })
        ));
    }
}
