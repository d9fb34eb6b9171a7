//! The Γ₁ graph of Bondar and Volkov and its strong-connectivity criterion:
//! if Γ₁(A) is strongly connected, then A is completely reachable. The
//! criterion is sufficient, not necessary, so the non-connected case yields
//! `Unknown`, never "false".
//!
//! Γ₁(A) has an edge (p, q) whenever some word w of rank n-1 excludes p from
//! the image and gives q a two-element preimage. The polynomial construction
//! used here searches over abstract pairs (p, q) instead of words: every
//! rank-(n-1) word factors as a permutation prefix, a first rank-dropping
//! letter, and a suffix of letters that each preserve the (n-1)-element
//! image. The permutation prefix changes neither the excluded point nor the
//! duplicate-preimage target, so each rank-(n-1) *letter* seeds one pair,
//! and extending a word by a letter y that is injective on the current image
//! `[n] \ {p}` moves the pair to (p', y(q)) where p' is the unique point
//! outside y([n] \ {p}). The reachable pairs are exactly the edges; the
//! brute-force oracle below re-derives the edge set from the full
//! transformation monoid and is used to cross-validate this.

use std::collections::BTreeSet;

use crate::automaton::SemiAutomaton;
use crate::error::Result;
use crate::graph;
use crate::limits::Limits;
use crate::monoid::transformation_monoid;
use crate::transformation::Transformation;

/// A directed graph on the states of an automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma1Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Gamma1Graph {
    pub fn new(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        for &(p, q) in &edges {
            assert!(p < n && q < n, "edge ({}, {}) out of range", p, q);
        }
        Gamma1Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, p: usize, q: usize) -> bool {
        self.edges.contains(&(p, q))
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.n];
        for &(p, q) in &self.edges {
            adjacency[p].push(q);
        }
        adjacency
    }

    /// Strong connectivity over all `n` vertices; isolated vertices make the
    /// graph disconnected for n ≥ 2.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        graph::strongly_connected_components(&self.adjacency()).len() == 1
    }

    /// Components sorted internally and numbered by smallest contained
    /// vertex.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        graph::strongly_connected_components(&self.adjacency())
    }

    /// DOT rendering with vertices 0..n-1 and edges in lexicographic order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph gamma1 {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {};\n", v));
        }
        for &(p, q) in &self.edges {
            out.push_str(&format!("  {} -> {};\n", p, q));
        }
        out.push_str("}\n");
        out
    }
}

/// The (p, q) signature of a rank-(n-1) transformation: the excluded point
/// and the point with a two-element preimage.
fn rank_n_minus_1_signature(t: &Transformation) -> Option<(usize, usize)> {
    let n = t.degree();
    let mut count = vec![0usize; n];
    for &image in t.images() {
        count[image] += 1;
    }
    let mut excluded = None;
    let mut doubled = None;
    for (state, &c) in count.iter().enumerate() {
        match c {
            0 => {
                if excluded.replace(state).is_some() {
                    return None; // rank below n-1
                }
            }
            2 => {
                if doubled.replace(state).is_some() {
                    return None;
                }
            }
            1 => {}
            _ => return None,
        }
    }
    match (excluded, doubled) {
        (Some(p), Some(q)) => Some((p, q)),
        _ => None,
    }
}

/// Builds Γ₁(A) by the pair search described in the module docs. O(n³·|Σ|).
pub fn gamma1(a: &SemiAutomaton) -> Gamma1Graph {
    let n = a.state_count();
    let mut edges = BTreeSet::new();
    if n < 2 {
        return Gamma1Graph { n, edges };
    }
    let mut seen = vec![false; n * n];
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for letter in 0..a.letter_count() {
        if let Some((p, q)) = rank_n_minus_1_signature(a.letter_action(letter)) {
            if !seen[p * n + q] {
                seen[p * n + q] = true;
                queue.push((p, q));
            }
        }
    }
    let mut hit = vec![false; n];
    while let Some((p, q)) = queue.pop() {
        edges.insert((p, q));
        for letter in 0..a.letter_count() {
            let action = a.letter_action(letter);
            hit.fill(false);
            let mut injective = true;
            for s in (0..n).filter(|&s| s != p) {
                let t = action.apply(s);
                if hit[t] {
                    injective = false;
                    break;
                }
                hit[t] = true;
            }
            if !injective {
                continue;
            }
            let p2 = (0..n).find(|&t| !hit[t]).expect("image misses one point");
            let q2 = action.apply(q);
            if !seen[p2 * n + q2] {
                seen[p2 * n + q2] = true;
                queue.push((p2, q2));
            }
        }
    }
    Gamma1Graph { n, edges }
}

/// Brute-force Γ₁ straight from the definition: enumerate the transformation
/// monoid, keep the rank-(n-1) elements and read off their signatures.
pub fn gamma1_oracle(a: &SemiAutomaton, limits: &Limits) -> Result<Gamma1Graph> {
    let n = a.state_count();
    let mut edges = BTreeSet::new();
    for t in transformation_monoid(a, limits.monoid_cap)? {
        if let Some((p, q)) = rank_n_minus_1_signature(&t) {
            edges.insert((p, q));
        }
    }
    Ok(Gamma1Graph { n, edges })
}

/// Outcome of the sufficient criterion. `Unknown` carries no information:
/// the automaton may or may not be completely reachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReachabilityCertificate {
    Proven,
    Unknown,
}

impl std::fmt::Display for ReachabilityCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReachabilityCertificate::Proven => write!(f, "proven"),
            ReachabilityCertificate::Unknown => write!(f, "unknown"),
        }
    }
}

pub fn completely_reachable_certificate(a: &SemiAutomaton) -> ReachabilityCertificate {
    if gamma1(a).is_strongly_connected() {
        ReachabilityCertificate::Proven
    } else {
        ReachabilityCertificate::Unknown
    }
}
