//! Command-line front end. All logic lives in the library; this binary
//! parses arguments, dispatches, and prints.
//!
//! Exit codes: 0 on success, 1 when `verify-theorems` finds a failing
//! check, 2 on input errors (bad files, bad arguments, exceeded limits).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use syncreach::families::{build_family, FamilyObject, FamilySpec};
use syncreach::format::{
    parse_automaton, parse_group, serialize_automaton, serialize_group,
};
use syncreach::gamma1::{
    completely_reachable_certificate, gamma1, gamma1_oracle, ReachabilityCertificate,
};
use syncreach::group::{
    is_k_homogeneous, is_k_reachable, is_k_transitive, is_primitive_blocks,
    is_primitive_via_reachability, is_sync_maximal, is_transitive, orbits_on_k_sets,
    PermGroup,
};
use syncreach::pairs::all_two_sets_distinguishable;
use syncreach::power::{analyze, is_completely_reachable_exact, max_syn_complexity, syn_state_complexity};
use syncreach::verify::{curated_corpus, load_corpus_dir, verify_theorems, Corpus};
use syncreach::{Limits, SemiAutomaton};

#[derive(Parser)]
#[command(
    name = "syncreach",
    version,
    about = "Synchronizing automata, complete reachability, and permutation group analysis"
)]
struct Cli {
    /// Override every state-count limit with N.
    #[arg(long, global = true, value_name = "N")]
    limit_n: Option<usize>,

    /// Seed for the sampled checks and random corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Record,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PrimitiveMode {
    Blocks,
    Reach,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Full power-automaton analysis of an .aut file.
    Analyze {
        file: PathBuf,
    },
    /// Decide whether sc(Syn(A)) is maximal (2^n - n).
    MaxSc {
        file: PathBuf,
        /// Use the polynomial 2-set distinguishability test (needs the
        /// automaton to be completely reachable to be meaningful).
        #[arg(long, conflicts_with = "exact")]
        poly: bool,
        /// Use the exhaustive power-automaton computation.
        #[arg(long)]
        exact: bool,
    },
    /// Emit the Γ₁ graph of an .aut file in DOT format.
    Gamma1 {
        file: PathBuf,
        /// Build the graph from the full transformation monoid instead of
        /// the pair search (slow; small automata only).
        #[arg(long)]
        oracle: bool,
    },
    /// Permutation-group property tests on a .grp file.
    Group {
        file: PathBuf,
        #[arg(long)]
        transitive: bool,
        #[arg(long, value_name = "K")]
        k_homogeneous: Option<usize>,
        #[arg(long, value_name = "K")]
        k_transitive: Option<usize>,
        /// Primitivity route: block systems, complete reachability, or both.
        #[arg(long, value_name = "MODE", num_args = 0..=1, default_missing_value = "both")]
        primitive: Option<PrimitiveMode>,
        #[arg(long)]
        sync_maximal: bool,
        #[arg(long, value_name = "K")]
        k_reachable: Option<usize>,
        /// Print the orbits on K-sets.
        #[arg(long, value_name = "K")]
        orbits: Option<usize>,
    },
    /// Write a curated family member as an .aut or .grp file.
    Generate {
        /// cerny | cyclic | symmetric | alternating | dihedral | klein4 |
        /// agl15 | trivial
        family: String,
        /// Parameter n, where the family takes one.
        n: Option<usize>,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the theorem cross-checks over a corpus (built-in when no
    /// directory is given).
    VerifyTheorems {
        /// Directory of .aut / .grp files to use as the corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Append this many random automata (5 states or fewer) to the
        /// corpus.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// Sweep small primitive corpus groups for one that is not
    /// sync-maximal. Reports findings without asserting anything.
    SearchCounterexample {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

enum CliError {
    Input(String),
    PropertyFailure,
}

impl From<syncreach::Error> for CliError {
    fn from(e: syncreach::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))
}

fn load_automaton(path: &Path) -> Result<SemiAutomaton, CliError> {
    let text = read_file(path)?;
    parse_automaton(&text).map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))
}

fn load_group(path: &Path) -> Result<PermGroup, CliError> {
    let text = read_file(path)?;
    parse_group(&text).map_err(|e| CliError::Input(format!("{}: {}", path.display(), e)))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let limits = match cli.limit_n {
        Some(n) => Limits::with_n(n),
        None => Limits::default(),
    };

    match cli.command {
        Command::Analyze { file } => {
            let automaton = load_automaton(&file)?;
            let report = analyze(&automaton, &limits)?;
            match cli.format {
                OutputFormat::Record => println!("{}", report.render_record(&automaton)),
                _ => print!("{}", report.render_text(&automaton)),
            }
            Ok(())
        }
        Command::MaxSc { file, poly, exact } => {
            let automaton = load_automaton(&file)?;
            let n = automaton.state_count();
            if n < 2 {
                return Err(CliError::Input("max-sc needs at least 2 states".into()));
            }
            if exact {
                let sc = syn_state_complexity(&automaton, &limits)?;
                println!("max_sc: {}", sc as u128 == max_syn_complexity(n));
                println!("method: exact");
                println!("certificate: exact");
            } else {
                // --poly is the default route
                let _ = poly;
                let answer = all_two_sets_distinguishable(&automaton)?;
                let certificate = match completely_reachable_certificate(&automaton) {
                    ReachabilityCertificate::Proven => "gamma1".to_string(),
                    ReachabilityCertificate::Unknown => {
                        match is_completely_reachable_exact(&automaton, &limits) {
                            Ok(true) => "exact".to_string(),
                            Ok(false) => "none (not completely reachable)".to_string(),
                            Err(_) => "none (state space too large to check)".to_string(),
                        }
                    }
                };
                println!("max_sc: {}", answer);
                println!("method: poly");
                println!("certificate: {}", certificate);
            }
            Ok(())
        }
        Command::Gamma1 { file, oracle } => {
            let automaton = load_automaton(&file)?;
            let graph = if oracle {
                gamma1_oracle(&automaton, &limits)?
            } else {
                gamma1(&automaton)
            };
            print!("{}", graph.to_dot());
            Ok(())
        }
        Command::Group {
            file,
            transitive,
            k_homogeneous,
            k_transitive,
            primitive,
            sync_maximal,
            k_reachable,
            orbits,
        } => {
            let group = load_group(&file)?;
            let mut printed = false;
            if transitive {
                println!("transitive: {}", is_transitive(&group));
                printed = true;
            }
            if let Some(k) = k_homogeneous {
                println!("{}-homogeneous: {}", k, is_k_homogeneous(&group, k)?);
                printed = true;
            }
            if let Some(k) = k_transitive {
                println!("{}-transitive: {}", k, is_k_transitive(&group, k)?);
                printed = true;
            }
            if let Some(mode) = primitive {
                if mode == PrimitiveMode::Blocks || mode == PrimitiveMode::Both {
                    println!("primitive(blocks): {}", is_primitive_blocks(&group));
                }
                if mode == PrimitiveMode::Reach || mode == PrimitiveMode::Both {
                    println!(
                        "primitive(reach): {}",
                        is_primitive_via_reachability(&group, &limits)?
                    );
                }
                printed = true;
            }
            if sync_maximal {
                println!("sync_maximal: {}", is_sync_maximal(&group, &limits)?);
                printed = true;
            }
            if let Some(k) = k_reachable {
                println!("{}-reachable: {}", k, is_k_reachable(&group, k, &limits)?);
                printed = true;
            }
            if let Some(k) = orbits {
                let orbit_partition = orbits_on_k_sets(&group, k)?;
                println!(
                    "orbits({}): {} blocks",
                    k,
                    orbit_partition.block_count()
                );
                for (i, block) in orbit_partition.blocks().iter().enumerate() {
                    let members: Vec<String> =
                        block.iter().map(|s| s.to_string()).collect();
                    println!("block {}: {}", i, members.join(" "));
                }
                printed = true;
            }
            if !printed {
                println!("degree: {}", group.degree());
                println!("generators: {}", group.generator_count());
                println!("transitive: {}", is_transitive(&group));
            }
            Ok(())
        }
        Command::Generate { family, n, output } => {
            let spec = FamilySpec::parse(&family, n)?;
            let (text, default_extension) = match build_family(&spec)? {
                FamilyObject::Automaton(a) => (serialize_automaton(&a), "aut"),
                FamilyObject::Group(g) => (serialize_group(&g), "grp"),
            };
            let content = format!("# {}\n{}", spec, text);
            match output {
                Some(path) => {
                    let path = if path.extension().is_none() {
                        path.with_extension(default_extension)
                    } else {
                        path
                    };
                    fs::write(&path, content).map_err(|e| {
                        CliError::Input(format!("{}: {}", path.display(), e))
                    })?;
                    println!("wrote {}", path.display());
                }
                None => print!("{}", content),
            }
            Ok(())
        }
        Command::VerifyTheorems { corpus, random } => {
            let mut corpus = match corpus {
                Some(dir) => load_corpus_dir(&dir)
                    .map_err(|e| CliError::Input(e.to_string()))?,
                None => curated_corpus(),
            };
            append_random_automata(&mut corpus, random, cli.seed);
            let report = verify_theorems(&corpus, &limits, cli.seed)?;
            print!("{}", report.render());
            if report.all_passed() {
                Ok(())
            } else {
                Err(CliError::PropertyFailure)
            }
        }
        Command::SearchCounterexample { max_n } => {
            let mut found = false;
            for (name, group) in syncreach::families::corpus_groups() {
                let n = group.degree();
                if n > max_n || n > limits.sync_max_n || !is_primitive_blocks(&group) {
                    continue;
                }
                let sync_maximal = is_sync_maximal(&group, &limits)?;
                println!(
                    "{} (degree {}): primitive, sync_maximal = {}",
                    name, n, sync_maximal
                );
                if !sync_maximal {
                    found = true;
                    println!("counterexample candidate: {}", name);
                }
            }
            if !found {
                println!("no counterexample among the swept groups");
            }
            Ok(())
        }
    }
}

fn append_random_automata(corpus: &mut Corpus, count: usize, seed: u64) {
    use syncreach::random::{random_automaton, rng_from_seed};
    let mut rng = rng_from_seed(seed);
    for i in 0..count {
        use rand::Rng;
        let n = rng.gen_range(2..=5);
        let letters = rng.gen_range(1..=3);
        corpus
            .automata
            .push((format!("random_{}", i), random_automaton(&mut rng, n, letters)));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::PropertyFailure) => ExitCode::from(1),
        Err(CliError::Input(message)) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}
