//! Sync-maximal permutation groups: adding any rank-(n-1) map to the
//! generators must give an automaton whose synchronizing-word language has
//! state complexity exactly 2^n - n. The 5-cycle group is the classical
//! separating example: it is sync-maximal but not 2-homogeneous (its 2-sets
//! split into two orbits), so sync-maximality sits strictly between
//! 2-homogeneity and primitivity.
//!
//! Run with: cargo run -p syncreach --example sync_maximal

use syncreach::families::{agl15, cyclic_group, klein_four_group, symmetric_group};
use syncreach::group::{is_k_homogeneous, is_primitive_blocks, is_sync_maximal, orbits_on_k_sets};
use syncreach::Limits;

fn main() {
    let limits = Limits::default();

    let c5 = cyclic_group(5).unwrap();
    println!("5-cycle group ⟨(0 1 2 3 4)⟩:");
    let orbits = orbits_on_k_sets(&c5, 2).unwrap();
    println!("  orbits on 2-sets ({} of them):", orbits.block_count());
    for (i, block) in orbits.blocks().iter().enumerate() {
        let members: Vec<String> = block.iter().map(|s| s.to_string()).collect();
        println!("    orbit {}: {}", i, members.join(" "));
    }
    println!("  2-homogeneous: {}", is_k_homogeneous(&c5, 2).unwrap());
    println!("  primitive:     {}", is_primitive_blocks(&c5));
    println!("  sync-maximal:  {}", is_sync_maximal(&c5, &limits).unwrap());

    println!();
    for (name, group) in [
        ("AGL(1,5) = ⟨x+1, 2x⟩ (2-homogeneous)", agl15()),
        ("symmetric group S4", symmetric_group(4).unwrap()),
        ("4-cycle group (imprimitive)", cyclic_group(4).unwrap()),
        ("Klein four-group (imprimitive)", klein_four_group()),
    ] {
        println!(
            "{}: sync-maximal = {}",
            name,
            is_sync_maximal(&group, &limits).unwrap()
        );
    }
}
