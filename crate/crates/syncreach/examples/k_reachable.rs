//! k-reachable permutation groups: adding any map of rank n-k must make
//! every subset of cardinality n-k, n-2k, … reachable from the full state
//! set. 1-reachability coincides with primitivity, (n-1)-reachability with
//! transitivity, and k-reachability always forces k-homogeneity.
//!
//! Run with: cargo run -p syncreach --example k_reachable

use syncreach::families::corpus_groups;
use syncreach::group::{
    is_k_homogeneous, is_k_reachable, is_primitive_blocks, is_transitive, k_reachable_sizes,
};
use syncreach::Limits;

fn main() {
    let limits = Limits::default();
    println!("required subset sizes, degree 6: k=1 -> {:?}, k=2 -> {:?}, k=3 -> {:?}",
        k_reachable_sizes(6, 1),
        k_reachable_sizes(6, 2),
        k_reachable_sizes(6, 3),
    );
    println!();
    println!("{:<15} {:>3} {:>6} {:>6} {:>6} {:>22}", "group", "n", "k=1", "k=2", "k=3", "(n-1)-reachable");
    for (name, group) in corpus_groups() {
        let n = group.degree();
        if n > limits.k_reach_n {
            continue;
        }
        let mut cells = Vec::new();
        for k in 1..=3 {
            if k <= n - 1 {
                let value = is_k_reachable(&group, k, &limits).unwrap();
                // k-reachability must imply k-homogeneity
                if value {
                    assert!(is_k_homogeneous(&group, k).unwrap());
                }
                cells.push(value.to_string());
            } else {
                cells.push("-".into());
            }
        }
        let top = is_k_reachable(&group, n - 1, &limits).unwrap();
        assert_eq!(top, is_transitive(&group));
        assert_eq!(
            is_k_reachable(&group, 1, &limits).unwrap(),
            is_primitive_blocks(&group)
        );
        println!(
            "{:<15} {:>3} {:>6} {:>6} {:>6} {:>22}",
            name, n, cells[0], cells[1], cells[2], top
        );
    }
    println!();
    println!("column k=1 equals primitivity and the last column equals transitivity");
}
