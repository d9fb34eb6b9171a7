//! Survey of the curated permutation groups: transitivity, 2-homogeneity,
//! 2-transitivity, and primitivity by both routes (block systems and
//! complete reachability of the automata obtained by adjoining rank-(n-1)
//! idempotents).
//!
//! Run with: cargo run -p syncreach --example group_properties

use syncreach::families::corpus_groups;
use syncreach::group::{
    is_k_homogeneous, is_k_transitive, is_primitive_blocks, is_primitive_via_reachability,
    is_transitive,
};
use syncreach::Limits;

fn main() {
    let limits = Limits::default();
    println!(
        "{:<15} {:>3} {:>10} {:>6} {:>7} {:>14} {:>13}",
        "group", "n", "transitive", "2-hom", "2-trans", "prim(blocks)", "prim(reach)"
    );
    for (name, group) in corpus_groups() {
        let n = group.degree();
        let two_hom = n >= 2 && is_k_homogeneous(&group, 2).unwrap();
        let two_trans = n >= 2 && is_k_transitive(&group, 2).unwrap();
        let blocks = is_primitive_blocks(&group);
        let reach = is_primitive_via_reachability(&group, &limits).unwrap();
        assert_eq!(blocks, reach);
        println!(
            "{:<15} {:>3} {:>10} {:>6} {:>7} {:>14} {:>13}",
            name,
            n,
            is_transitive(&group),
            two_hom,
            two_trans,
            blocks,
            reach
        );
    }
    println!();
    println!("the two primitivity columns agree on every group, as they must");
}
