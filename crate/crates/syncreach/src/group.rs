//! Permutation-group property tests: orbits, k-homogeneity, k-transitivity,
//! primitivity (a block-system route and an independent complete-reachability
//! route), sync-maximality, k-reachability, and related sufficient
//! conditions.
//!
//! Group elements are never enumerated: orbit computations walk the
//! generator action, and the map sweeps deduplicate by conjugacy under the
//! group, which relabels the associated automaton by a bijection and so
//! preserves reachability, distinguishability and state complexity.

use std::collections::HashSet;

use crate::automaton::SemiAutomaton;
use crate::error::{Error, Result};
use crate::gamma1::{completely_reachable_certificate, ReachabilityCertificate};
use crate::limits::Limits;
use crate::pairs::all_two_sets_distinguishable;
use crate::power::{
    is_completely_reachable_exact, max_syn_complexity, reachable_subsets, syn_state_complexity,
};
use crate::state_set::StateSet;
use crate::transformation::Transformation;

/// A permutation group of degree `n`, given by generators. The identity is
/// always implicitly a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<(String, Transformation)>,
    name: Option<String>,
}

impl PermGroup {
    pub fn new(
        degree: usize,
        generators: Vec<(String, Transformation)>,
        name: Option<String>,
    ) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidGroup("degree must be at least 1".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidGroup(
                "a group needs at least one generator".into(),
            ));
        }
        for (gen_name, action) in &generators {
            if action.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: action.degree(),
                });
            }
            if !action.is_permutation() {
                return Err(Error::InvalidGroup(format!(
                    "generator {:?} is not a permutation",
                    gen_name
                )));
            }
            if gen_name.is_empty() || gen_name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidGroup(format!(
                    "bad generator name {:?}",
                    gen_name
                )));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if generators[i].0 == generators[j].0 {
                    return Err(Error::InvalidGroup(format!(
                        "duplicate generator name {:?}",
                        generators[i].0
                    )));
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            name,
        })
    }

    /// The trivial group of the given degree.
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: vec![("id".into(), Transformation::identity(degree))],
            name: Some("trivial".into()),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, &Transformation)> {
        self.generators.iter().map(|(n, t)| (n.as_str(), t))
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_actions(&self) -> impl Iterator<Item = &Transformation> {
        self.generators.iter().map(|(_, t)| t)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
}

/// The partition of the k-subsets of `[n]` into orbits under the group
/// action. Blocks are sorted and numbered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSetOrbits {
    k: usize,
    blocks: Vec<Vec<StateSet>>,
}

impl KSetOrbits {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<StateSet>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_single_orbit(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn block_containing(&self, s: &StateSet) -> Option<&[StateSet]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(s).is_ok())
            .map(|b| b.as_slice())
    }
}

/// Orbit partition of the k-subsets under the generator action (BFS per
/// orbit). k = 1 gives the point orbits, so a single block means transitive.
pub fn orbits_on_k_sets(g: &PermGroup, k: usize) -> Result<KSetOrbits> {
    let n = g.degree();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let mut visited: HashSet<u64> = HashSet::new();
    let mut blocks = Vec::new();
    for start in StateSet::subsets_of_size(n, k) {
        if visited.contains(&start.bits()) {
            continue;
        }
        let mut orbit = vec![start];
        visited.insert(start.bits());
        let mut head = 0;
        while head < orbit.len() {
            let current = orbit[head];
            for action in g.generator_actions() {
                let next = action.apply_set(&current);
                if visited.insert(next.bits()) {
                    orbit.push(next);
                }
            }
            head += 1;
        }
        orbit.sort();
        blocks.push(orbit);
    }
    blocks.sort_by_key(|b| b[0]);
    Ok(KSetOrbits { k, blocks })
}

pub fn is_k_homogeneous(g: &PermGroup, k: usize) -> Result<bool> {
    Ok(orbits_on_k_sets(g, k)?.is_single_orbit())
}

/// Single orbit on points.
pub fn is_transitive(g: &PermGroup) -> bool {
    orbits_on_k_sets(g, 1)
        .expect("k = 1 is always in range")
        .is_single_orbit()
}

/// Single orbit on ordered k-tuples of distinct points.
pub fn is_k_transitive(g: &PermGroup, k: usize) -> Result<bool> {
    let n = g.degree();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let total: u128 = (0..k).map(|i| (n - i) as u128).product();
    let start: Vec<usize> = (0..k).collect();
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    visited.insert(start.clone());
    let mut queue = vec![start];
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        for action in g.generator_actions() {
            let next: Vec<usize> = current.iter().map(|&p| action.apply(p)).collect();
            if !visited.contains(&next) {
                visited.insert(next.clone());
                queue.push(next);
            }
        }
        head += 1;
    }
    Ok(visited.len() as u128 == total)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx.max(ry)] = rx.min(ry);
        true
    }
}

/// Finest G-congruence identifying `p` and `q` (Atkinson's closure): merge
/// the pair, then propagate merges through every generator to a fixpoint.
fn minimal_congruence_class_count(g: &PermGroup, p: usize, q: usize) -> usize {
    let n = g.degree();
    let mut dsu = Dsu::new(n);
    let mut queue = vec![(p, q)];
    dsu.union(p, q);
    while let Some((x, y)) = queue.pop() {
        for action in g.generator_actions() {
            let (gx, gy) = (action.apply(x), action.apply(y));
            if dsu.union(gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    let mut roots = HashSet::new();
    for x in 0..n {
        roots.insert(dsu.find(x));
    }
    roots.len()
}

/// Primitivity by block systems: no nontrivial proper G-invariant
/// equivalence relation exists. Degrees n ≤ 2 are primitive by convention.
/// An intransitive group of degree ≥ 3 is never primitive (some invariant
/// partition other than the two trivial ones always exists), so transitivity
/// is checked first and the pair closure is only run on transitive groups,
/// where testing the pairs {0, a} suffices.
pub fn is_primitive_blocks(g: &PermGroup) -> bool {
    let n = g.degree();
    if n <= 2 {
        return true;
    }
    if !is_transitive(g) {
        return false;
    }
    (1..n).all(|a| minimal_congruence_class_count(g, 0, a) == 1)
}

/// Lazily yields every transformation of `[n]` of rank exactly `r`, in
/// lexicographic order of image vectors. With `dedup = Some(G)`, only one
/// representative per conjugacy class `f ~ g∘f∘g⁻¹` (g ∈ G) is produced:
/// the lexicographically first member of each class.
pub struct RankMaps<'g> {
    n: usize,
    r: usize,
    next_images: Option<Vec<usize>>,
    dedup: Option<(&'g PermGroup, HashSet<Vec<usize>>)>,
}

impl<'g> RankMaps<'g> {
    /// Moves the odometer to the next image vector (or exhausts it).
    fn advance(&mut self) {
        if let Some(images) = self.next_images.as_mut() {
            let mut i = images.len();
            loop {
                if i == 0 {
                    self.next_images = None;
                    break;
                }
                i -= 1;
                if images[i] + 1 < self.n {
                    images[i] += 1;
                    for v in images.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    break;
                }
            }
        }
    }

    fn conjugacy_orbit(group: &PermGroup, f: &Transformation) -> Vec<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(f.images().to_vec());
        let mut queue = vec![f.clone()];
        let mut head = 0;
        while head < queue.len() {
            let current = queue[head].clone();
            for action in group.generator_actions() {
                let conjugate = current
                    .conjugate_by(action)
                    .expect("generators are permutations of the same degree");
                if seen.insert(conjugate.images().to_vec()) {
                    queue.push(conjugate);
                }
            }
            head += 1;
        }
        seen.into_iter().collect()
    }
}

impl Iterator for RankMaps<'_> {
    type Item = Transformation;

    fn next(&mut self) -> Option<Transformation> {
        loop {
            let images = self.next_images.as_ref()?;
            let mut result = None;
            if crate::transformation::rank_of_images(images) == self.r {
                match self.dedup.as_mut() {
                    Some((group, seen)) => {
                        if !seen.contains(images.as_slice()) {
                            let candidate =
                                Transformation::new(images.clone()).expect("in range");
                            for member in Self::conjugacy_orbit(group, &candidate) {
                                seen.insert(member);
                            }
                            result = Some(candidate);
                        }
                    }
                    None => {
                        result = Some(Transformation::new(images.clone()).expect("in range"));
                    }
                }
            }
            self.advance();
            if result.is_some() {
                return result;
            }
        }
    }
}

pub fn enumerate_rank_maps(
    n: usize,
    r: usize,
    dedup: Option<&PermGroup>,
) -> Result<RankMaps<'_>> {
    if r < 1 || r > n {
        return Err(Error::RankOutOfRange { rank: r, n });
    }
    if let Some(group) = dedup {
        if group.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: group.degree(),
            });
        }
    }
    Ok(RankMaps {
        n,
        r,
        next_images: Some(vec![0; n]),
        dedup: dedup.map(|g| (g, HashSet::new())),
    })
}

/// All idempotent maps of rank n-1: the identity except that one point is
/// sent to another (fixed) point. There are exactly n(n-1) of them, yielded
/// in order of (moved point, target).
pub fn idempotent_rank_n_minus_1_maps(n: usize) -> Vec<Transformation> {
    assert!(n >= 2);
    let mut maps = Vec::with_capacity(n * (n - 1));
    for moved in 0..n {
        for target in 0..n {
            if moved == target {
                continue;
            }
            let mut images: Vec<usize> = (0..n).collect();
            images[moved] = target;
            maps.push(Transformation::new(images).expect("in range"));
        }
    }
    maps
}

/// The semi-automaton whose letters are the generators of `G` (named
/// g1, …, gk) followed by the map `f`.
pub fn group_automaton(g: &PermGroup, f: &Transformation) -> Result<SemiAutomaton> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: f.degree(),
        });
    }
    let mut letters: Vec<(String, Transformation)> = g
        .generator_actions()
        .enumerate()
        .map(|(i, t)| (format!("g{}", i + 1), t.clone()))
        .collect();
    letters.push(("f".into(), f.clone()));
    SemiAutomaton::new(g.degree(), letters)
}

/// Primitivity via complete reachability: `G` of degree ≥ 3 is primitive iff
/// adding any rank-(n-1) map makes every non-empty subset reachable, and it
/// is enough to test the n(n-1) idempotents of rank n-1.
pub fn is_primitive_via_reachability(g: &PermGroup, limits: &Limits) -> Result<bool> {
    let n = g.degree();
    if n <= 2 {
        return Ok(true);
    }
    for f in idempotent_rank_n_minus_1_maps(n) {
        let automaton = group_automaton(g, &f)?;
        if !is_completely_reachable_exact(&automaton, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is the automaton completely reachable? Tries the polynomial Γ₁
/// certificate first and falls back to the exhaustive check.
fn completely_reachable_fast(a: &SemiAutomaton, limits: &Limits) -> Result<bool> {
    if completely_reachable_certificate(a) == ReachabilityCertificate::Proven {
        return Ok(true);
    }
    is_completely_reachable_exact(a, limits)
}

/// Sync-maximality: for every map f of rank n-1, the automaton made of the
/// generators and f has `sc(Syn) = 2^n - n`. Groups of degree ≤ 2 are
/// sync-maximal by convention.
///
/// Each f is first screened by two valid rejections — an automaton that is
/// not completely reachable, or has two indistinguishable 2-sets, cannot
/// have maximal sc — and survivors are confirmed against the exact state
/// complexity. The 2-set screen alone would not be conclusive: there are
/// completely reachable automata with all 2-sets distinguishable whose sc is
/// below the maximum (see the pair-distinguishability tests).
pub fn is_sync_maximal(g: &PermGroup, limits: &Limits) -> Result<bool> {
    is_sync_maximal_with(g, limits, true)
}

/// As `is_sync_maximal`, with conjugacy dedup switchable (the answers are
/// identical; dedup only skips relabelled copies).
pub fn is_sync_maximal_with(g: &PermGroup, limits: &Limits, dedup: bool) -> Result<bool> {
    let n = g.degree();
    if n <= 2 {
        return Ok(true);
    }
    if n > limits.sync_max_n {
        return Err(Error::StateSpaceTooLarge {
            n,
            limit: limits.sync_max_n,
        });
    }
    for f in enumerate_rank_maps(n, n - 1, dedup.then_some(g))? {
        let automaton = group_automaton(g, &f)?;
        if !completely_reachable_fast(&automaton, limits)? {
            return Ok(false);
        }
        if !all_two_sets_distinguishable(&automaton)? {
            return Ok(false);
        }
        if syn_state_complexity(&automaton, limits)? as u128 != max_syn_complexity(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The subset sizes a k-reachable group must realize: n-k, n-2k, …,
/// n-(⌈n/k⌉-1)·k.
pub fn k_reachable_sizes(n: usize, k: usize) -> Vec<usize> {
    let steps = n.div_ceil(k) - 1;
    (1..=steps).map(|i| n - i * k).collect()
}

/// k-reachability: adding any map of rank n-k makes every subset whose size
/// appears in `k_reachable_sizes` reachable from the full state set.
pub fn is_k_reachable(g: &PermGroup, k: usize, limits: &Limits) -> Result<bool> {
    is_k_reachable_with(g, k, limits, true)
}

pub fn is_k_reachable_with(
    g: &PermGroup,
    k: usize,
    limits: &Limits,
    dedup: bool,
) -> Result<bool> {
    let n = g.degree();
    if k < 1 || k > n - 1 {
        return Err(Error::KOutOfRange { k, n });
    }
    let bound = if k == 1 {
        limits.k_reach_n_k1
    } else {
        limits.k_reach_n
    };
    if n > bound {
        return Err(Error::StateSpaceTooLarge { n, limit: bound });
    }
    let sizes = k_reachable_sizes(n, k);
    for f in enumerate_rank_maps(n, n - k, dedup.then_some(g))? {
        let automaton = group_automaton(g, &f)?;
        let reachable: HashSet<u64> = reachable_subsets(&automaton, limits)?
            .into_iter()
            .map(|s| s.bits())
            .collect();
        for &size in &sizes {
            for subset in StateSet::subsets_of_size(n, size) {
                if !reachable.contains(&subset.bits()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Quantifier mode for `khom_char_check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KhomMode {
    /// Some map of rank n-k realizes all (n-k)-subsets.
    SomeF,
    /// Every map of rank n-k realizes all (n-k)-subsets.
    AnyF,
}

/// The reachability characterization of k-homogeneity: `G` is k-homogeneous
/// iff every (equivalently, some) added map of rank n-k makes every subset
/// of size n-k reachable. Both modes agree with the orbit test.
pub fn khom_char_check(
    g: &PermGroup,
    k: usize,
    mode: KhomMode,
    limits: &Limits,
) -> Result<bool> {
    let n = g.degree();
    if k < 1 || k > n - 1 {
        return Err(Error::KOutOfRange { k, n });
    }
    let bound = if k == 1 {
        limits.k_reach_n_k1
    } else {
        limits.k_reach_n
    };
    if n > bound {
        return Err(Error::StateSpaceTooLarge { n, limit: bound });
    }
    let target_size = n - k;
    for f in enumerate_rank_maps(n, n - k, Some(g))? {
        let automaton = group_automaton(g, &f)?;
        let reachable: HashSet<u64> = reachable_subsets(&automaton, limits)?
            .into_iter()
            .map(|s| s.bits())
            .collect();
        let all_reachable = StateSet::subsets_of_size(n, target_size)
            .all(|s| reachable.contains(&s.bits()));
        match mode {
            KhomMode::SomeF => {
                if all_reachable {
                    return Ok(true);
                }
            }
            KhomMode::AnyF => {
                if !all_reachable {
                    return Ok(false);
                }
            }
        }
    }
    Ok(match mode {
        KhomMode::SomeF => false,
        KhomMode::AnyF => true,
    })
}

/// The sandwich condition: for every 2-subset {a,b}, every A with
/// 1 ≤ |A| ≤ n-2 and every c outside {a,b}, some g ∈ G satisfies
/// {c} ⊆ g(A) ⊆ [n] \ {a,b}. Membership is decided on the orbit of A under
/// the generators, never by listing the group. When the condition holds,
/// adding any rank-(n-2) map makes every non-empty subset of size ≤ n-2
/// reachable, and the group is 2-homogeneous.
pub fn inclusion_exclusion_condition(g: &PermGroup) -> Result<bool> {
    let n = g.degree();
    if !(3..=8).contains(&n) {
        return Err(Error::DegreeOutOfRange { n, min: 3, max: 8 });
    }
    let full = StateSet::full(n).bits();
    for size in 1..=(n - 2) {
        for a_set in StateSet::subsets_of_size(n, size) {
            // orbit of A under the generators
            let mut orbit: Vec<u64> = vec![a_set.bits()];
            let mut seen: HashSet<u64> = orbit.iter().copied().collect();
            let mut head = 0;
            while head < orbit.len() {
                let current = StateSet::from_bits(n, orbit[head]);
                for action in g.generator_actions() {
                    let next = action.apply_set(&current).bits();
                    if seen.insert(next) {
                        orbit.push(next);
                    }
                }
                head += 1;
            }
            for a in 0..n {
                for b in a + 1..n {
                    let excluded = (1u64 << a) | (1u64 << b);
                    // union of orbit members avoiding {a, b}; the condition
                    // holds for this (A, a, b) iff every c outside {a, b}
                    // appears in some avoiding member
                    let mut available = 0u64;
                    for &member in &orbit {
                        if member & excluded == 0 {
                            available |= member;
                        }
                    }
                    if available | excluded != full {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// A concrete witness that a group is not primitive: an idempotent map of
/// rank n-1 together with a non-empty subset that is unreachable in the
/// associated automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImprimitivityWitness {
    pub f: Transformation,
    pub unreachable: StateSet,
}

/// Searches the idempotents of rank n-1 in deterministic order and returns
/// the first one whose automaton misses a subset, with the smallest-bitmask
/// missing subset. Primitive groups yield `None`.
pub fn imprimitivity_witness(
    g: &PermGroup,
    limits: &Limits,
) -> Result<Option<ImprimitivityWitness>> {
    let n = g.degree();
    if n <= 2 {
        return Ok(None);
    }
    for f in idempotent_rank_n_minus_1_maps(n) {
        let automaton = group_automaton(g, &f)?;
        let reachable: HashSet<u64> = reachable_subsets(&automaton, limits)?
            .into_iter()
            .map(|s| s.bits())
            .collect();
        if reachable.len() as u128 == (1u128 << n) - 1 {
            continue;
        }
        for bits in 1..(1u64 << n) {
            if !reachable.contains(&bits) {
                return Ok(Some(ImprimitivityWitness {
                    f,
                    unreachable: StateSet::from_bits(n, bits),
                }));
            }
        }
    }
    Ok(None)
}
