//! A constructive certificate of imprimitivity: for an imprimitive group
//! there is a rank-(n-1) idempotent whose adjoined automaton misses some
//! subset entirely. The witness (the map and the unreachable subset) is
//! emitted and then replayed from scratch.
//!
//! Run with: cargo run -p syncreach --example imprimitivity_witness

use syncreach::families::{corpus_groups, cyclic_group};
use syncreach::group::{group_automaton, imprimitivity_witness, is_primitive_blocks};
use syncreach::power::reachable_subsets;
use syncreach::Limits;

fn main() {
    let limits = Limits::default();

    let c4 = cyclic_group(4).unwrap();
    let witness = imprimitivity_witness(&c4, &limits).unwrap().unwrap();
    println!("4-cycle group ⟨(0 1 2 3)⟩ is imprimitive (blocks {{0,2}} / {{1,3}})");
    println!("  witness idempotent f = {} (rank {})", witness.f, witness.f.rank());
    println!("  unreachable subset: {}", witness.unreachable);

    // replay: rebuild the automaton and re-run the subset BFS
    let automaton = group_automaton(&c4, &witness.f).unwrap();
    let reachable = reachable_subsets(&automaton, &limits).unwrap();
    let still_missing = !reachable.contains(&witness.unreachable);
    println!(
        "  replay: {} of 15 subsets reachable, witness missing = {}",
        reachable.len(),
        still_missing
    );
    assert!(still_missing);

    println!();
    println!("witnesses across the corpus (primitive groups yield none):");
    for (name, group) in corpus_groups() {
        if group.degree() < 3 {
            continue;
        }
        match imprimitivity_witness(&group, &limits).unwrap() {
            Some(w) => println!("  {:<15} f = {}, unreachable {}", name, w.f, w.unreachable),
            None => {
                assert!(is_primitive_blocks(&group));
                println!("  {:<15} primitive, no witness", name);
            }
        }
    }
}
