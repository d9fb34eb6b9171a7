//! Cross-validation of the implemented characterizations on a corpus of
//! automata and groups. Each executed (check, instance) pair produces one
//! pass/fail line; the report order is canonical regardless of execution
//! order.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rand::Rng;
use thiserror::Error;

use crate::automaton::{SemiAutomaton, Word};
use crate::error::Error;
use crate::families::{corpus_automata, corpus_groups};
use crate::format::{parse_automaton, parse_group, ParseError};
use crate::gamma1::{
    completely_reachable_certificate, gamma1, gamma1_oracle, ReachabilityCertificate,
};
use crate::group::{
    group_automaton, idempotent_rank_n_minus_1_maps, imprimitivity_witness,
    is_k_homogeneous, is_k_reachable, is_primitive_blocks, is_primitive_via_reachability,
    is_sync_maximal, is_sync_maximal_with, is_transitive, khom_char_check, KhomMode, PermGroup,
};
use crate::limits::Limits;
use crate::pairs::has_max_syn_sc;
use crate::power::{
    is_completely_reachable_exact, is_synchronizing, max_syn_complexity, reachable_subsets,
    syn_minimal_dfa, syn_state_complexity,
};
use crate::random::{random_map_of_rank, rng_from_seed};
use crate::state_set::StateSet;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
}

/// The instances a verification run works on.
#[derive(Default)]
pub struct Corpus {
    pub automata: Vec<(String, SemiAutomaton)>,
    pub groups: Vec<(String, PermGroup)>,
}

impl Corpus {
    pub fn is_empty(&self) -> bool {
        self.automata.is_empty() && self.groups.is_empty()
    }
}

/// The built-in corpus: the Černý family plus the curated groups.
pub fn curated_corpus() -> Corpus {
    Corpus {
        automata: corpus_automata(),
        groups: corpus_groups(),
    }
}

/// Loads every `.aut` and `.grp` file of a directory, sorted by file name.
pub fn load_corpus_dir(dir: &Path) -> Result<Corpus, CorpusError> {
    let wrap_io = |source: io::Error, path: &Path| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| wrap_io(e, dir))?
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| wrap_io(e, dir))?
        .into_iter()
        .map(|entry| entry.path())
        .collect();
    paths.sort();
    let mut corpus = Corpus::default();
    for path in paths {
        let extension = path.extension().and_then(|e| e.to_str());
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("unnamed")
            .to_string();
        match extension {
            Some("aut") => {
                let text = fs::read_to_string(&path).map_err(|e| wrap_io(e, &path))?;
                let automaton = parse_automaton(&text)
                    .map_err(|source| CorpusError::Parse {
                        path: path.clone(),
                        source,
                    })?;
                corpus.automata.push((stem, automaton));
            }
            Some("grp") => {
                let text = fs::read_to_string(&path).map_err(|e| wrap_io(e, &path))?;
                let group = parse_group(&text).map_err(|source| CorpusError::Parse {
                    path: path.clone(),
                    source,
                })?;
                corpus.groups.push((stem, group));
            }
            _ => {}
        }
    }
    Ok(corpus)
}

#[derive(Debug, Clone)]
pub struct CheckLine {
    pub check: String,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Default)]
pub struct VerifyReport {
    pub lines: Vec<CheckLine>,
}

impl VerifyReport {
    pub fn checks(&self) -> usize {
        self.lines.len()
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let status = if line.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{} {} [{}]{}{}",
                status,
                line.check,
                line.instance,
                if line.detail.is_empty() { "" } else { ": " },
                line.detail
            );
        }
        let _ = writeln!(out, "{} checks, {} failed", self.checks(), self.failures());
        out
    }

    fn push(&mut self, check: &str, instance: &str, passed: bool, detail: String) {
        self.lines.push(CheckLine {
            check: check.to_string(),
            instance: instance.to_string(),
            passed,
            detail,
        });
    }
}

fn eq_detail<T: PartialEq + std::fmt::Debug>(left: T, right: T) -> (bool, String) {
    let passed = left == right;
    let detail = if passed {
        format!("{:?}", left)
    } else {
        format!("{:?} vs {:?}", left, right)
    };
    (passed, detail)
}

/// An implication check: records the hypothesis so vacuous passes are
/// visible.
fn implication(premise: bool, conclusion: bool) -> (bool, String) {
    if !premise {
        (true, "premise false".into())
    } else {
        (conclusion, "premise holds".into())
    }
}

fn automaton_checks(
    report: &mut VerifyReport,
    name: &str,
    a: &SemiAutomaton,
    limits: &Limits,
    rng: &mut impl Rng,
) -> Result<(), Error> {
    let n = a.state_count();
    if n > limits.exhaustive_n || n > StateSet::MAX_UNIVERSE {
        return Ok(());
    }

    let sc = syn_state_complexity(a, limits)?;
    let max_sc = max_syn_complexity(n);
    let completely_reachable = is_completely_reachable_exact(a, limits)?;

    if n >= 2 {
        report.push(
            "sc_bound",
            name,
            (sc as u128) <= max_sc,
            format!("sc = {}, bound = {}", sc, max_sc),
        );
    }

    // strongly connected + maximal sc forces complete reachability
    let (passed, detail) = implication(
        a.is_strongly_connected() && sc as u128 == max_sc,
        completely_reachable,
    );
    report.push("scc_max_sc_implies_completely_reachable", name, passed, detail);

    // the reachable subsets are closed under every letter
    let reachable = reachable_subsets(a, limits)?;
    let reachable_bits: HashSet<u64> = reachable.iter().map(|s| s.bits()).collect();
    let closed = reachable.iter().all(|s| {
        (0..a.letter_count()).all(|x| reachable_bits.contains(&a.step_set(s, x).bits()))
    });
    report.push(
        "reachable_subsets_closed_under_letters",
        name,
        closed,
        format!("{} subsets", reachable.len()),
    );

    // Γ₁ certificate soundness
    let certificate = completely_reachable_certificate(a);
    let (passed, detail) = implication(
        certificate == ReachabilityCertificate::Proven,
        completely_reachable,
    );
    report.push("gamma1_certificate_sound", name, passed, detail);

    // Γ₁ pair-search agrees with the monoid oracle (kept to small monoids)
    if n <= 6 {
        match gamma1_oracle(a, limits) {
            Ok(oracle) => {
                let fast = gamma1(a);
                let (passed, detail) = eq_detail(fast.edge_count(), oracle.edge_count());
                report.push(
                    "gamma1_matches_oracle",
                    name,
                    passed && fast == oracle,
                    detail,
                );
            }
            Err(Error::MonoidTooLarge { .. }) => {}
            Err(e) => return Err(e),
        }
    }

    // maximal sc requires all 2-sets to be pairwise distinguishable; the
    // converse is false, so only this direction is checked
    if completely_reachable && n >= 2 {
        let (passed, detail) = implication(sc as u128 == max_sc, has_max_syn_sc(a)?);
        report.push("max_sc_implies_two_sets_distinguishable", name, passed, detail);
    }

    // language membership agrees between direct simulation and the minimal
    // automaton built for the state complexity
    let dfa = syn_minimal_dfa(a, limits)?;
    let mut consistent = true;
    for _ in 0..64 {
        let length = rng.gen_range(0..=2 * n);
        let word = Word::new(
            (0..length)
                .map(|_| rng.gen_range(0..a.letter_count()))
                .collect(),
        );
        let direct = a.apply_word(&a.full_states(), &word).is_singleton();
        if direct != dfa.accepts(&word) {
            consistent = false;
            break;
        }
    }
    report.push(
        "syn_membership_consistent",
        name,
        consistent,
        "64 sampled words".into(),
    );

    // named Černý instances must show the family's known values
    if let Some(n_str) = name.strip_prefix("cerny_") {
        if let Ok(expected_n) = n_str.parse::<usize>() {
            let word = crate::power::shortest_sync_word(a, limits)?;
            let passed = expected_n == n
                && word.as_ref().map(Word::len) == Some((n - 1) * (n - 1))
                && completely_reachable
                && sc as u128 == max_sc;
            report.push(
                "cerny_family_profile",
                name,
                passed,
                format!(
                    "reset length {:?}, sc {}",
                    word.map(|w| w.len()),
                    sc
                ),
            );
        }
    }
    Ok(())
}

fn group_checks(
    report: &mut VerifyReport,
    name: &str,
    g: &PermGroup,
    limits: &Limits,
    rng: &mut impl Rng,
) -> Result<(), Error> {
    let n = g.degree();
    if n > limits.exhaustive_n || n > StateSet::MAX_UNIVERSE {
        return Ok(());
    }
    let primitive = is_primitive_blocks(g);

    // primitivity: block systems vs complete reachability
    if n <= limits.exhaustive_n {
        let (passed, detail) = eq_detail(primitive, is_primitive_via_reachability(g, limits)?);
        report.push("primitive_blocks_vs_reachability", name, passed, detail);
    }

    // primitive iff every rank-(n-1) extension synchronizes
    if n >= 3 && n <= limits.sync_max_n {
        let mut all_synchronize = true;
        for f in crate::group::enumerate_rank_maps(n, n - 1, Some(g))? {
            if !is_synchronizing(&group_automaton(g, &f)?) {
                all_synchronize = false;
                break;
            }
        }
        let (passed, detail) = eq_detail(primitive, all_synchronize);
        report.push("primitive_iff_all_extensions_synchronize", name, passed, detail);
    }

    // hierarchy: 2-homogeneous ⇒ sync-maximal ⇒ primitive
    if n <= limits.sync_max_n {
        let sync_maximal = is_sync_maximal(g, limits)?;
        let (passed, detail) = implication(sync_maximal, primitive);
        report.push("sync_maximal_implies_primitive", name, passed, detail);
        if n >= 2 {
            let two_homogeneous = is_k_homogeneous(g, 2)?;
            let (passed, detail) = implication(two_homogeneous, sync_maximal);
            report.push("two_homogeneous_implies_sync_maximal", name, passed, detail);
        }
    }

    // 2-homogeneous with n > 2 ⇒ transitive
    if n > 2 {
        let (passed, detail) = implication(is_k_homogeneous(g, 2)?, is_transitive(g));
        report.push("two_homogeneous_implies_transitive", name, passed, detail);
    }

    // k-reachable ⇒ k-homogeneous; plus the k = 1 and k = n-1 readings
    for k in 1..n.min(4) {
        let bound = if k == 1 {
            limits.k_reach_n_k1
        } else {
            limits.k_reach_n
        };
        if n > bound {
            continue;
        }
        let k_reachable = is_k_reachable(g, k, limits)?;
        let (passed, detail) = implication(k_reachable, is_k_homogeneous(g, k)?);
        report.push(
            &format!("k_reachable_implies_k_homogeneous_k{}", k),
            name,
            passed,
            detail,
        );
        if k == 1 {
            let (passed, detail) = eq_detail(k_reachable, primitive);
            report.push("one_reachable_iff_primitive", name, passed, detail);
        }
    }
    if n >= 2 && (n - 1 == 1 || n <= limits.k_reach_n) {
        let (passed, detail) = eq_detail(is_k_reachable(g, n - 1, limits)?, is_transitive(g));
        report.push("n_minus_1_reachable_iff_transitive", name, passed, detail);
    }

    // the reachability characterization of k-homogeneity agrees with the
    // orbit count, in both quantifier modes
    for k in 1..n.min(4) {
        let bound = if k == 1 {
            limits.k_reach_n_k1
        } else {
            limits.k_reach_n
        };
        if n > bound {
            continue;
        }
        let orbit_answer = is_k_homogeneous(g, k)?;
        let any_f = khom_char_check(g, k, KhomMode::AnyF, limits)?;
        let some_f = khom_char_check(g, k, KhomMode::SomeF, limits)?;
        report.push(
            &format!("k_homogeneous_three_way_k{}", k),
            name,
            any_f == orbit_answer && some_f == orbit_answer,
            format!("orbits {}, any_f {}, some_f {}", orbit_answer, any_f, some_f),
        );
    }

    // maximal sc forces transitivity and complete reachability (n > 2)
    if n > 2 && n <= limits.k_reach_n {
        let mut ok = true;
        for f in crate::group::enumerate_rank_maps(n, n - 1, Some(g))? {
            let automaton = group_automaton(g, &f)?;
            let max = syn_state_complexity(&automaton, limits)? as u128 == max_syn_complexity(n);
            if max && !(is_transitive(g) && is_completely_reachable_exact(&automaton, limits)?) {
                ok = false;
                break;
            }
        }
        report.push(
            "max_sc_implies_transitive_and_completely_reachable",
            name,
            ok,
            String::new(),
        );
    }

    // maps of rank below n-1 never reach maximal sc
    if n >= 3 && n <= limits.sync_max_n {
        let mut ok = true;
        for _ in 0..5 {
            let rank = rng.gen_range(1..n - 1);
            let f = random_map_of_rank(rng, n, rank);
            let automaton = group_automaton(g, &f)?;
            if syn_state_complexity(&automaton, limits)? as u128 == max_syn_complexity(n) {
                ok = false;
                break;
            }
        }
        report.push("low_rank_never_max_sc", name, ok, "5 sampled maps".into());
    }

    // dedup soundness of the sync-maximality sweep
    if n <= 5 {
        let (passed, detail) = eq_detail(
            is_sync_maximal_with(g, limits, true)?,
            is_sync_maximal_with(g, limits, false)?,
        );
        report.push("sync_maximal_dedup_sound", name, passed, detail);
    }

    // Γ₁ of a group automaton is closed under the diagonal generator action
    if n >= 3 && n <= limits.sync_max_n {
        let mut equivariant = true;
        'outer: for f in idempotent_rank_n_minus_1_maps(n) {
            let graph = gamma1(&group_automaton(g, &f)?);
            for (p, q) in graph.edges() {
                for action in g.generator_actions() {
                    if !graph.contains_edge(action.apply(p), action.apply(q)) {
                        equivariant = false;
                        break 'outer;
                    }
                }
            }
        }
        report.push("gamma1_group_equivariance", name, equivariant, String::new());
    }

    // the sandwich condition implies 2-homogeneity and low-subset
    // reachability under sampled rank-(n-2) maps
    if (3..=8).contains(&n) && n <= limits.k_reach_n {
        let condition = crate::group::inclusion_exclusion_condition(g)?;
        if condition {
            let (passed, detail) = implication(condition, is_k_homogeneous(g, 2)?);
            report.push("sandwich_implies_two_homogeneous", name, passed, detail);
            let mut ok = true;
            'sample: for _ in 0..3 {
                let f = random_map_of_rank(rng, n, n - 2);
                let automaton = group_automaton(g, &f)?;
                let bits: HashSet<u64> = reachable_subsets(&automaton, limits)?
                    .iter()
                    .map(|s| s.bits())
                    .collect();
                for size in 1..=(n - 2) {
                    for subset in StateSet::subsets_of_size(n, size) {
                        if !bits.contains(&subset.bits()) {
                            ok = false;
                            break 'sample;
                        }
                    }
                }
            }
            report.push(
                "sandwich_implies_small_subsets_reachable",
                name,
                ok,
                "3 sampled maps".into(),
            );
        }
    }

    // an imprimitive group must yield a replayable witness
    if n >= 3 && n <= limits.exhaustive_n && !primitive {
        let witness = imprimitivity_witness(g, limits)?;
        let passed = match &witness {
            Some(w) => {
                let automaton = group_automaton(g, &w.f)?;
                let reachable = reachable_subsets(&automaton, limits)?;
                w.f.is_idempotent()
                    && w.f.rank() == n - 1
                    && !reachable.contains(&w.unreachable)
            }
            None => false,
        };
        report.push(
            "imprimitivity_witness_replayable",
            name,
            passed,
            witness.map_or("no witness".into(), |w| {
                format!("f = {}, unreachable {}", w.f, w.unreachable)
            }),
        );
    }

    Ok(())
}

/// Runs every applicable check against every corpus instance. Instances
/// whose size exceeds the limits are skipped silently; the `seed` drives the
/// sampled-word and sampled-map checks.
pub fn verify_theorems(corpus: &Corpus, limits: &Limits, seed: u64) -> Result<VerifyReport, Error> {
    let mut report = VerifyReport::default();
    let mut rng = rng_from_seed(seed);
    for (name, automaton) in &corpus.automata {
        automaton_checks(&mut report, name, automaton, limits, &mut rng)?;
    }
    for (name, group) in &corpus.groups {
        group_checks(&mut report, name, group, limits, &mut rng)?;
    }
    report
        .lines
        .sort_by(|a, b| (&a.check, &a.instance).cmp(&(&b.check, &b.instance)));
    Ok(report)
}
