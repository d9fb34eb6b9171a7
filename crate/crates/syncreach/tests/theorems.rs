//! The full cross-check run over the built-in corpus must come back green.

use syncreach::verify::{curated_corpus, verify_theorems};
use syncreach::Limits;

#[test]
fn curated_corpus_passes_every_check() {
    let report = verify_theorems(&curated_corpus(), &Limits::default(), 0).unwrap();
    let failed: Vec<String> = report
        .lines
        .iter()
        .filter(|l| !l.passed)
        .map(|l| format!("{} [{}]: {}", l.check, l.instance, l.detail))
        .collect();
    assert!(failed.is_empty(), "failing checks:\n{}", failed.join("\n"));
    assert!(report.checks() > 300, "corpus coverage shrank unexpectedly");
    println!("{} checks, 0 failed", report.checks());
}
