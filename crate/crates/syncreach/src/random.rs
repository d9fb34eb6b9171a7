//! Seeded random instances for cross-validation corpora.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automaton::SemiAutomaton;
use crate::limits::Limits;
use crate::power::is_completely_reachable_exact;
use crate::transformation::Transformation;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_transformation<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    Transformation::new((0..n).map(|_| rng.gen_range(0..n)).collect()).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Transformation::new(images).unwrap()
}

/// A map with image of size exactly `r`: pick the image points and a
/// transversal hitting each one, then fill the rest arbitrarily inside the
/// image.
pub fn random_map_of_rank<R: Rng>(rng: &mut R, n: usize, r: usize) -> Transformation {
    assert!(r >= 1 && r <= n);
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let image: Vec<usize> = points[..r].to_vec();
    let mut domain: Vec<usize> = (0..n).collect();
    domain.shuffle(rng);
    let mut images = vec![usize::MAX; n];
    for (i, &p) in domain[..r].iter().enumerate() {
        images[p] = image[i];
    }
    for value in images.iter_mut() {
        if *value == usize::MAX {
            *value = image[rng.gen_range(0..r)];
        }
    }
    Transformation::new(images).unwrap()
}

fn letter_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|i| {
            char::from_u32('a' as u32 + (i % 26) as u32)
                .unwrap()
                .to_string()
                .repeat(i / 26 + 1)
        })
        .collect()
}

/// Uniformly random letters.
pub fn random_automaton<R: Rng>(rng: &mut R, n: usize, letters: usize) -> SemiAutomaton {
    let names = letter_names(letters);
    let actions = names
        .into_iter()
        .map(|name| (name, random_transformation(rng, n)))
        .collect();
    SemiAutomaton::new(n, actions).unwrap()
}

/// A random permutation plus a random map of rank n-1; this shape is
/// completely reachable often enough to make rejection sampling cheap.
pub fn random_perm_plus_merge<R: Rng>(rng: &mut R, n: usize) -> SemiAutomaton {
    let letters = vec![
        ("a".to_string(), random_permutation(rng, n)),
        ("b".to_string(), random_map_of_rank(rng, n, n - 1)),
    ];
    SemiAutomaton::new(n, letters).unwrap()
}

/// Rejection-samples a completely reachable automaton on `n` states.
pub fn random_completely_reachable<R: Rng>(
    rng: &mut R,
    n: usize,
    limits: &Limits,
) -> SemiAutomaton {
    loop {
        let candidate = if rng.gen_bool(0.7) {
            random_perm_plus_merge(rng, n)
        } else {
            let letters = rng.gen_range(2..=3);
            random_automaton(rng, n, letters)
        };
        if is_completely_reachable_exact(&candidate, limits).unwrap() {
            return candidate;
        }
    }
}
