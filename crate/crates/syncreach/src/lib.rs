//! Decision procedures for synchronization properties of finite
//! deterministic semi-automata and for the permutation-group notions tied to
//! them.
//!
//! For automata: synchronizability, shortest reset words, complete
//! reachability (exhaustively and via the Γ₁ strong-connectivity
//! certificate), and the state complexity of the set of synchronizing words,
//! including the polynomial 2-set distinguishability test that decides
//! maximality of that state complexity on completely reachable automata.
//!
//! For permutation groups: orbits on k-sets, k-homogeneity, k-transitivity,
//! primitivity by two independent routes (block systems, and complete
//! reachability of the automata obtained by adjoining a rank-(n-1) map),
//! sync-maximality, and k-reachability.
//!
//! Every non-trivial algorithm is paired with a brute-force oracle and the
//! [`verify`] module cross-checks the characterizations on a corpus; the
//! `syncreach` binary exposes everything as subcommands (`analyze`,
//! `max-sc`, `gamma1`, `group`, `generate`, `verify-theorems`).
//!
//! The runnable examples are the best starting point:
//!
//! ```text
//! cargo run -p syncreach --example analyze_cerny
//! cargo run -p syncreach --example shortest_reset
//! cargo run -p syncreach --example power_reachability
//! cargo run -p syncreach --example gamma1_graph
//! cargo run -p syncreach --example pair_distinguishability
//! cargo run -p syncreach --example group_properties
//! cargo run -p syncreach --example sync_maximal
//! cargo run -p syncreach --example k_reachable
//! cargo run -p syncreach --example imprimitivity_witness
//! cargo run -p syncreach --example verify_corpus
//! ```
//!
//! All values are immutable after construction and all operations are pure,
//! so analyses of distinct inputs can run concurrently.

pub mod automaton;
pub mod error;
pub mod families;
pub mod format;
pub mod gamma1;
mod graph;
pub mod group;
pub mod limits;
pub mod monoid;
pub mod pairs;
pub mod power;
pub mod random;
pub mod state_set;
pub mod transformation;
pub mod verify;

pub use automaton::{SemiAutomaton, Word};
pub use error::{Error, Result};
pub use gamma1::{Gamma1Graph, ReachabilityCertificate};
pub use group::{KSetOrbits, KhomMode, PermGroup};
pub use limits::Limits;
pub use power::SynReport;
pub use state_set::StateSet;
pub use transformation::Transformation;
