//! The Γ₁ graph and the Bondar–Volkov criterion: strong connectivity of
//! Γ₁(A) is a polynomially checkable sufficient condition for complete
//! reachability. The certificate is one-directional, so a non-connected
//! graph yields "unknown", never "no".
//!
//! Run with: cargo run -p syncreach --example gamma1_graph

use syncreach::families::{cerny, cyclic_group};
use syncreach::gamma1::{completely_reachable_certificate, gamma1, gamma1_oracle};
use syncreach::group::group_automaton;
use syncreach::power::is_completely_reachable_exact;
use syncreach::{Limits, Transformation};

fn main() {
    let limits = Limits::default();

    let automaton = cerny(4).unwrap();
    let graph = gamma1(&automaton);
    println!("Γ1 of the Cerny automaton on 4 states ({} edges):", graph.edge_count());
    print!("{}", graph.to_dot());
    println!("strongly connected: {}", graph.is_strongly_connected());
    println!(
        "certificate: {}",
        completely_reachable_certificate(&automaton)
    );
    // the brute-force monoid construction agrees
    assert_eq!(graph, gamma1_oracle(&automaton, &limits).unwrap());

    // a same-block merge on the 4-cycle group: Γ1 splits into two 2-cycles,
    // the certificate stays unknown, and the automaton is indeed not
    // completely reachable
    let c4 = cyclic_group(4).unwrap();
    let same_block = Transformation::new(vec![2, 1, 2, 3]).unwrap();
    let blocked = group_automaton(&c4, &same_block).unwrap();
    let graph = gamma1(&blocked);
    println!();
    println!("4-cycle group with the merge 0 -> 2:");
    println!("  components: {:?}", graph.strongly_connected_components());
    println!("  certificate: {}", completely_reachable_certificate(&blocked));
    println!(
        "  exhaustive check: completely reachable = {}",
        is_completely_reachable_exact(&blocked, &limits).unwrap()
    );
}
