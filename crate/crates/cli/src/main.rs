//! `natord`: run verification suites, evaluate order predicates on elements
//! read from files, and draw the generated preorder sublattice.
//!
//! Exit codes: 0 success, 1 a suite found failures, 2 usage, guard or parse
//! errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use natord::lattice_lab::{standard_sublattice, Element, NamedOrder, UniverseKind, UniverseTable};
use natord::suites::{run_suite, SuiteConfig, SUITES};
use natord::{partition_orders, relation_orders, Partition, Relation};

#[derive(Parser)]
#[command(
    name = "natord",
    version,
    about = "Mitsch's natural partial order on binary relations and partition diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write its report.
    Check(CheckArgs),
    /// Evaluate an order predicate on two elements read from files.
    Order(OrderArgs),
    /// Write the Hasse diagram of the generated preorder sublattice as DOT.
    Hasse(HasseArgs),
    /// List every element of a universe with its index.
    Enumerate(UniverseArgs),
    /// List the available suites.
    Suites,
}

#[derive(Args)]
struct UniverseArgs {
    /// `relations` or `partitions`.
    #[arg(long)]
    universe: Option<UniverseKind>,
    /// Ground-set size.
    #[arg(long)]
    n: Option<usize>,
    /// Lift the universe size guards.
    #[arg(long)]
    force_large: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Suite name (alternatively `--suite`).
    suite_name: Option<String>,
    #[arg(long = "suite")]
    suite_flag: Option<String>,
    #[command(flatten)]
    universe: UniverseArgs,
    /// Number of sampled pairs or triples.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct OrderArgs {
    /// Predicate: eq, mitsch, mitsch-oracle, mitsch-fast, incl, rincl, meet-incl,
    /// meet-rev, incl-then-mitsch, rincl-then-mitsch.
    pred: String,
    a: PathBuf,
    b: PathBuf,
    #[arg(long, default_value = "relations")]
    universe: UniverseKind,
    #[arg(long)]
    force_large: bool,
}

#[derive(Args)]
struct HasseArgs {
    /// `relations` or `partitions` (alternatively `--universe`).
    universe_pos: Option<UniverseKind>,
    /// Ground-set size (alternatively `--n`).
    n_pos: Option<usize>,
    #[command(flatten)]
    universe: UniverseArgs,
    /// Write DOT here instead of standard output.
    #[arg(long)]
    dot: Option<PathBuf>,
}

/// Failure that maps to an exit code.
enum Failure {
    Usage(String),
    Io(String),
}

impl From<natord::Error> for Failure {
    fn from(e: natord::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn pick<T: PartialEq + std::fmt::Debug>(
    what: &str,
    positional: Option<T>,
    flag: Option<T>,
) -> Result<T, Failure> {
    match (positional, flag) {
        (Some(p), Some(f)) if p != f => Err(Failure::Usage(format!(
            "conflicting values for {what}: {p:?} and {f:?}"
        ))),
        (Some(v), _) | (None, Some(v)) => Ok(v),
        (None, None) => Err(Failure::Usage(format!("missing {what}"))),
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check(args: CheckArgs) -> Result<bool, Failure> {
    let suite = pick("suite", args.suite_name, args.suite_flag)?;
    let kind = pick("--universe", None, args.universe.universe)?;
    let n = pick("--n", None, args.universe.n)?;
    let cfg = SuiteConfig {
        kind,
        n,
        sample: args.sample,
        seed: args.seed,
        force_large: args.universe.force_large,
    };
    let report = run_suite(&suite, &cfg)?;
    let mut json = serde_json::to_string_pretty(&report).expect("report serialises");
    json.push('\n');
    write_out(args.report.as_deref(), &json)?;
    eprint!("{report}");
    eprintln!("  wall time: {:.3}s", report.wall_time.as_secs_f64());
    Ok(report.passed)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn order(args: OrderArgs) -> Result<(), Failure> {
    let a_text = read(&args.a)?;
    let b_text = read(&args.b)?;
    let pred = args.pred.replace('_', "-");
    let verdict = match args.universe {
        UniverseKind::Relations => {
            let a: Relation = a_text.parse()?;
            let b: Relation = b_text.parse()?;
            match pred.as_str() {
                "mitsch-oracle" if args.force_large => {
                    a.is_subset(&b)?;
                    relation_orders::mitsch_le_oracle_unguarded(&a, &b)
                }
                "mitsch-oracle" => relation_orders::mitsch_le_oracle(&a, &b)?,
                "meet-rev" => {
                    let witness = relation_orders::meet_rev_witnesses(&a, &b)?;
                    println!("{}", witness.is_some());
                    if let Some(w) = witness {
                        print!("epsilon:\n{}phi:\n{}", w.epsilon(), w.phi());
                    }
                    return Ok(());
                }
                _ => relation_predicate(pred.parse()?, &a, &b)?,
            }
        }
        UniverseKind::Partitions => {
            let a: Partition = a_text.trim().parse()?;
            let b: Partition = b_text.trim().parse()?;
            match pred.as_str() {
                "mitsch-fast" => partition_orders::mitsch_le_fast(&a, &b)?,
                "mitsch-oracle" => partition_mitsch(&a, &b, args.force_large)?,
                _ => partition_predicate(pred.parse()?, &a, &b, args.force_large)?,
            }
        }
    };
    println!("{verdict}");
    Ok(())
}

fn relation_predicate(pred: NamedOrder, a: &Relation, b: &Relation) -> natord::Result<bool> {
    use relation_orders as ro;
    match pred {
        NamedOrder::Eq => {
            a.is_subset(b)?;
            Ok(a == b)
        }
        NamedOrder::Mitsch => ro::mitsch_le(a, b),
        NamedOrder::Incl => a.is_subset(b),
        NamedOrder::Rincl => b.is_subset(a),
        NamedOrder::MitschAndIncl => ro::meet_with_inclusion(a, b),
        NamedOrder::MitschAndRincl => ro::meet_with_reverse_inclusion(a, b),
        NamedOrder::InclThenMitsch => ro::comp_subset_then_le(a, b),
        NamedOrder::RinclThenMitsch => ro::comp_supset_then_le(a, b),
    }
}

fn partition_mitsch(a: &Partition, b: &Partition, force_large: bool) -> natord::Result<bool> {
    if force_large {
        a.refinement_le(b)?;
        partition_orders::mitsch_le_within(a, b, &Partition::enumerate(a.n()))
    } else {
        partition_orders::mitsch_le_oracle(a, b)
    }
}

fn partition_predicate(
    pred: NamedOrder,
    a: &Partition,
    b: &Partition,
    force_large: bool,
) -> natord::Result<bool> {
    use partition_orders as po;
    match pred {
        NamedOrder::Eq => {
            a.refinement_le(b)?;
            Ok(a == b)
        }
        NamedOrder::Mitsch => partition_mitsch(a, b, force_large),
        NamedOrder::Incl => a.refinement_le(b),
        NamedOrder::Rincl => b.refinement_le(a),
        NamedOrder::MitschAndIncl => {
            Ok(a.refinement_le(b)? && partition_mitsch(a, b, force_large)?)
        }
        NamedOrder::MitschAndRincl => {
            Ok(b.refinement_le(a)? && partition_mitsch(a, b, force_large)?)
        }
        NamedOrder::InclThenMitsch => po::comp_subset_then_le(a, b),
        NamedOrder::RinclThenMitsch => po::comp_supset_then_le(a, b),
    }
}

fn table<E: Element>(n: usize, force_large: bool) -> natord::Result<UniverseTable<E>> {
    if force_large {
        Ok(UniverseTable::new_unguarded(n))
    } else {
        UniverseTable::new(n)
    }
}

fn hasse(args: HasseArgs) -> Result<(), Failure> {
    let kind = pick("universe", args.universe_pos, args.universe.universe)?;
    let n = pick("n", args.n_pos, args.universe.n)?;
    let force = args.universe.force_large;
    let lattice = match kind {
        UniverseKind::Relations => standard_sublattice(&table::<Relation>(n, force)?)?,
        UniverseKind::Partitions => standard_sublattice(&table::<Partition>(n, force)?)?,
    };
    write_out(args.dot.as_deref(), &lattice.to_dot())
}

fn enumerate(args: UniverseArgs) -> Result<(), Failure> {
    let kind = pick("--universe", None, args.universe)?;
    let n = pick("--n", None, args.n)?;
    let lines: Vec<String> = match kind {
        UniverseKind::Relations => table::<Relation>(n, args.force_large)?
            .elements()
            .iter()
            .map(Element::encode)
            .collect(),
        UniverseKind::Partitions => table::<Partition>(n, args.force_large)?
            .elements()
            .iter()
            .map(Element::encode)
            .collect(),
    };
    let mut out = String::new();
    for (i, l) in lines.iter().enumerate() {
        out.push_str(&format!("{i}\t{l}\n"));
    }
    write_out(None, &out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => check(args).map(|passed| if passed { 0 } else { 1 }),
        Command::Order(args) => order(args).map(|_| 0),
        Command::Hasse(args) => hasse(args).map(|_| 0),
        Command::Enumerate(args) => enumerate(args).map(|_| 0),
        Command::Suites => {
            for s in SUITES {
                let kinds: Vec<String> = s.support.iter().map(|k| k.kind.to_string()).collect();
                println!("{:<26} [{}] {}", s.name, kinds.join(","), s.summary);
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
