//! Command-line front end: generation, counting, enumeration, verification
//! and Hamilton search for involution Gray codes.
//!
//! Exit codes: 0 success/verified, 1 verification failure, 2 usage or
//! input error, 3 search exhausted or timed out.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use involution_codes::cayley::{generating_set, verify_hamilton_cycle};
use involution_codes::counting::{count, enumerate};
use involution_codes::optimal::{
    distance2_graph, find_hamilton, optimal_code_b, optimal_code_d, verify_distance2,
    HamiltonTarget, SearchOutcome,
};
use involution_codes::recursive::{coverage_report, gray_code, validate_properties};
use involution_codes::report::ValidationReport;
use involution_codes::{CodeList, GroupType};

#[derive(Parser)]
#[command(
    name = "invcodes",
    about = "Gray codes for involutions of the classical Weyl groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(alias = "a")]
    A,
    #[value(alias = "b")]
    B,
    #[value(alias = "d")]
    D,
}

impl From<TypeArg> for GroupType {
    fn from(t: TypeArg) -> GroupType {
        match t {
            TypeArg::A => GroupType::A,
            TypeArg::B => GroupType::B,
            TypeArg::D => GroupType::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Recursive,
    Optimal,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Coverage,
    Gray,
    Cayley,
    Distance2,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectArg {
    Cycle,
    Path,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of involutions of the given type and rank.
    Count {
        #[arg(long = "type", value_enum)]
        group: TypeArg,
        #[arg(long)]
        n: usize,
    },
    /// List all involutions of the given type and rank.
    Enumerate {
        #[arg(long = "type", value_enum)]
        group: TypeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Generate a Gray code.
    Generate {
        #[arg(long = "type", value_enum)]
        group: TypeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        algorithm: AlgorithmArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify a code file against one of the checkers.
    Verify {
        #[arg(long = "type", value_enum)]
        group: TypeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        check: CheckArg,
        /// Enforce the strengthened type B move rules.
        #[arg(long = "strict-b", default_value_t = false)]
        strict_b: bool,
        /// Input path; `-` reads standard input.
        #[arg(long)]
        input: PathBuf,
    },
    /// Search for a Hamilton path or cycle in the distance-2 graph.
    Search {
        #[arg(long = "type", value_enum)]
        group: TypeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        object: ObjectArg,
        /// Closeness bound; only distance 2 is supported.
        #[arg(long, default_value_t = 2)]
        distance: usize,
        #[arg(long = "timeout-seconds", default_value_t = 60)]
        timeout_seconds: u64,
        /// Reserved for parallel search; any value yields identical output.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, involution_codes::Error> {
    match cmd {
        Command::Count { group, n } => {
            println!("{}", count(group.into(), n)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { group, n, format } => {
            let list = enumerate(group.into(), n)?;
            emit(&list, "enumerate", format, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            group,
            n,
            algorithm,
            format,
            output,
        } => {
            let group: GroupType = group.into();
            let (list, name) = match algorithm {
                AlgorithmArg::Recursive => (gray_code(group, n)?, "recursive"),
                AlgorithmArg::Optimal => match group {
                    GroupType::A => {
                        eprintln!(
                            "error: no distance-2 code exists for type A; \
                             use --algorithm recursive"
                        );
                        return Ok(ExitCode::from(2));
                    }
                    GroupType::B => (optimal_code_b(n)?, "optimal"),
                    GroupType::D => (optimal_code_d(n)?, "optimal"),
                },
            };
            emit(&list, name, format, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            group,
            n,
            check,
            strict_b,
            input,
        } => {
            let group: GroupType = group.into();
            let list = read_input(group, n, &input)?;
            let report = match check {
                CheckArg::Coverage => {
                    let mut r = ValidationReport::default();
                    coverage_report(&list, &mut r);
                    r
                }
                CheckArg::Gray => validate_properties(&list, strict_b),
                CheckArg::Cayley => {
                    let t = generating_set(group, n)?;
                    verify_hamilton_cycle(&list, &t)
                }
                CheckArg::Distance2 => verify_distance2(&list, true),
            };
            if report.pass() {
                println!("OK");
                Ok(ExitCode::SUCCESS)
            } else {
                let v = report.first().expect("failing report has a violation");
                println!("FAIL index={} {}", v.index, v.message);
                Ok(ExitCode::from(1))
            }
        }
        Command::Search {
            group,
            n,
            object,
            distance,
            timeout_seconds,
            threads,
        } => {
            let group: GroupType = group.into();
            if group != GroupType::D {
                eprintln!("error: search supports --type D only");
                return Ok(ExitCode::from(2));
            }
            if distance != 2 {
                eprintln!("error: only --distance 2 is supported");
                return Ok(ExitCode::from(2));
            }
            if threads == 0 {
                eprintln!("error: --threads must be at least 1");
                return Ok(ExitCode::from(2));
            }
            let graph = distance2_graph(group, n)?;
            let target = match object {
                ObjectArg::Cycle => HamiltonTarget::Cycle,
                ObjectArg::Path => HamiltonTarget::Path,
            };
            let budget = Duration::from_secs(timeout_seconds);
            let outcome = find_hamilton(&graph, target, Some(budget));
            print_search_report(&outcome);
            match outcome {
                SearchOutcome::Found { .. } => Ok(ExitCode::SUCCESS),
                _ => Ok(ExitCode::from(3)),
            }
        }
    }
}

fn print_search_report(outcome: &SearchOutcome) {
    let report = match outcome {
        SearchOutcome::Found {
            code,
            nodes_expanded,
            elapsed,
        } => {
            let witness: Vec<Vec<i32>> = code.iter().map(|w| w.word().to_vec()).collect();
            serde_json::json!({
                "outcome": "found",
                "witness": witness,
                "nodes_expanded": nodes_expanded,
                "elapsed_ms": elapsed.as_millis() as u64,
            })
        }
        SearchOutcome::Exhausted {
            nodes_expanded,
            elapsed,
        } => serde_json::json!({
            "outcome": "exhausted",
            "nodes_expanded": nodes_expanded,
            "elapsed_ms": elapsed.as_millis() as u64,
        }),
        SearchOutcome::TimedOut {
            budget,
            nodes_expanded,
        } => serde_json::json!({
            "outcome": "timed_out",
            "nodes_expanded": nodes_expanded,
            "elapsed_ms": budget.as_millis() as u64,
        }),
    };
    println!("{report}");
}

fn read_input(
    group: GroupType,
    n: usize,
    path: &PathBuf,
) -> Result<CodeList, involution_codes::Error> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        CodeList::read(group, n, buf.as_bytes())
    } else {
        let file = File::open(path)?;
        CodeList::read(group, n, BufReader::new(file))
    }
}

fn emit(
    list: &CodeList,
    algorithm: &str,
    format: FormatArg,
    output: Option<&std::path::Path>,
) -> Result<(), involution_codes::Error> {
    let mut sink: Box<dyn Write> = match output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        FormatArg::Text => list.write(algorithm, &mut sink)?,
        FormatArg::Json => {
            let code: Vec<Vec<i32>> = list.iter().map(|w| w.word().to_vec()).collect();
            let doc = serde_json::json!({
                "type": list.group().to_string(),
                "n": list.rank(),
                "algorithm": algorithm,
                "code": code,
            });
            writeln!(sink, "{doc}").map_err(involution_codes::Error::from)?;
        }
    }
    sink.flush().map_err(involution_codes::Error::from)?;
    Ok(())
}
