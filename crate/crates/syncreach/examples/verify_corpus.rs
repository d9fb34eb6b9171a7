//! Run every theorem cross-check against the built-in corpus and print the
//! per-instance report. This is the same engine behind the
//! `syncreach verify-theorems` subcommand.
//!
//! Run with: cargo run -p syncreach --example verify_corpus

use syncreach::verify::{curated_corpus, verify_theorems};
use syncreach::Limits;

fn main() {
    let corpus = curated_corpus();
    println!(
        "corpus: {} automata, {} groups",
        corpus.automata.len(),
        corpus.groups.len()
    );
    let report = verify_theorems(&corpus, &Limits::default(), 0).unwrap();
    print!("{}", report.render());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
