use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;

use lassalle::partitions::{
    for_each_oriented_connected_matching, for_each_oriented_connected_partition,
};
use lassalle::permutation::{sn_for_each, Permutation, DEFAULT_ORACLE_BOUND};
use lassalle::sequences::{
    d_table, e_table, lassalle as lassalle_terms, refined_lassalle_eye,
    refined_lassalle_first_entry, CountTable,
};
use lassalle::trees::count_trees_with_postorder;
use lassalle::verify::{run_suite, Suite};
use lassalle::{vhc, Error, PhiImage};

#[derive(Parser)]
#[command(
    name = "lassalle",
    version,
    about = "Stack-sorting preimages, hook configurations, and their partition bijection"
)]
struct Cli {
    /// Worker threads for exhaustive sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Send a permutation through the sorting stack one or more times.
    Sort {
        /// Space-separated entries, e.g. "3 1 4 2".
        permutation: String,
        /// Number of passes through the stack.
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Count the preimages of a permutation under the stack-sorting map.
    Fertility {
        /// Space-separated entries, e.g. "2 3 1 4".
        permutation: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Run every method and insist that they agree.
        #[arg(long)]
        all_methods: bool,
    },
    /// Stream a family of objects to stdout, one per line.
    Enumerate {
        kind: Kind,
        /// Host length for configurations and words; ground-set size for
        /// partitions and matchings.
        size: usize,
        #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
        format: StreamFormat,
    },
    /// Print a named table of counts.
    Table {
        name: TableName,
        /// Number of terms, or the refinement parameter k.
        bound: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Cross-check the independent computations against each other.
    Verify {
        /// One of: all, bijection, identities, recurrences, conjecture.
        #[arg(default_value = "all")]
        suite: String,
        /// Size ceiling for the exhaustive sweeps.
        #[arg(long)]
        bound: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Sum of Catalan products over valid hook configurations.
    Formula,
    /// Count binary plane trees with the given postorder reading.
    Trees,
    /// Apply the stack to every candidate preimage.
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Valid hook configurations over every host of the given length.
    Vhc,
    /// Uniquely sorted permutations of the given (odd) length.
    UniquelySorted,
    /// Connected partitions with a uniquely sourced acyclic orientation.
    PTilde,
    /// The same restricted to perfect matchings.
    MTilde,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StreamFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    /// The Lassalle sequence.
    Lassalle,
    /// Hook configurations by host length and tail length.
    D,
    /// Uniquely sorted permutations by length and tail length.
    E,
    /// Uniquely sorted permutations of length 2k+1 by first entry.
    RefinedFirst,
    /// Uniquely sorted permutations of length 2k+1 by eye.
    RefinedEye,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("could not configure {jobs} worker threads: {e}");
        }
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Sort { permutation, iterations } => {
            let pi: Permutation = permutation.parse()?;
            println!("{}", pi.iterate_sort(iterations));
            Ok(ExitCode::SUCCESS)
        }
        Command::Fertility { permutation, method, all_methods } => {
            let pi: Permutation = permutation.parse()?;
            fertility_command(&pi, method, all_methods)
        }
        Command::Enumerate { kind, size, format } => {
            enumerate_command(kind, size, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { name, bound, format } => {
            table_command(name, bound, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, bound } => {
            let suite: Suite = suite.parse()?;
            Ok(verify_command(suite, bound))
        }
    }
}

fn fertility_one_method(pi: &Permutation, method: Method) -> Result<BigInt, Error> {
    match method {
        Method::Formula => Ok(vhc::fertility(pi)),
        Method::Trees => count_trees_with_postorder(&pi.normalize()),
        Method::Oracle => Ok(BigInt::from(pi.preimages_bruteforce()?.len())),
    }
}

fn fertility_command(
    pi: &Permutation,
    method: Method,
    all_methods: bool,
) -> Result<ExitCode, Error> {
    if !all_methods {
        println!("{}", fertility_one_method(pi, method)?);
        return Ok(ExitCode::SUCCESS);
    }
    let mut seen: Vec<BigInt> = Vec::new();
    for (method, label) in [
        (Method::Formula, "formula"),
        (Method::Trees, "trees"),
        (Method::Oracle, "oracle"),
    ] {
        if method == Method::Oracle && pi.len() > DEFAULT_ORACLE_BOUND {
            eprintln!(
                "skipping the oracle: length {} exceeds the exhaustive bound {}",
                pi.len(),
                DEFAULT_ORACLE_BOUND
            );
            continue;
        }
        let count = fertility_one_method(pi, method)?;
        println!("{label}: {count}");
        seen.push(count);
    }
    if seen.windows(2).all(|w| w[0] == w[1]) {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("the methods disagree");
        Ok(ExitCode::FAILURE)
    }
}

fn enumerate_command(kind: Kind, size: usize, format: StreamFormat) -> Result<(), Error> {
    match kind {
        Kind::Vhc => {
            if size > DEFAULT_ORACLE_BOUND {
                return Err(Error::BoundExceeded { size, bound: DEFAULT_ORACLE_BOUND });
            }
            let mut failure = None;
            sn_for_each(size, |pi| {
                if failure.is_some() {
                    return;
                }
                for config in vhc::enumerate_vhcs(pi) {
                    match format {
                        StreamFormat::Text => println!("{config}"),
                        StreamFormat::Json => match serde_json::to_string(&config) {
                            Ok(line) => println!("{line}"),
                            Err(e) => failure = Some(Error::Parse(e.to_string())),
                        },
                    }
                }
            });
            failure.map_or(Ok(()), Err)
        }
        Kind::UniquelySorted => {
            if size.is_multiple_of(2) {
                return Err(Error::OutOfRange(format!(
                    "uniquely sorted permutations have odd length, got {size}"
                )));
            }
            for pi in vhc::enumerate_uniquely_sorted((size - 1) / 2)? {
                match format {
                    StreamFormat::Text => println!("{pi}"),
                    StreamFormat::Json => {
                        println!("{}", serde_json::to_string(&pi).map_err(json_error)?)
                    }
                }
            }
            Ok(())
        }
        Kind::PTilde => {
            if size > lassalle::partitions::DEFAULT_PARTITION_BOUND {
                return Err(Error::BoundExceeded {
                    size,
                    bound: lassalle::partitions::DEFAULT_PARTITION_BOUND,
                });
            }
            let mut failure = None;
            for_each_oriented_connected_partition(size, |partition, orientation| {
                if failure.is_none() {
                    failure = print_pair(partition, orientation, format).err();
                }
            });
            failure.map_or(Ok(()), Err)
        }
        Kind::MTilde => {
            if size % 2 == 1 {
                return Err(Error::OutOfRange(format!(
                    "perfect matchings need an even ground set, got {size}"
                )));
            }
            if size > lassalle::partitions::DEFAULT_MATCHING_BOUND {
                return Err(Error::BoundExceeded {
                    size,
                    bound: lassalle::partitions::DEFAULT_MATCHING_BOUND,
                });
            }
            let mut failure = None;
            for_each_oriented_connected_matching(size, |partition, orientation| {
                if failure.is_none() {
                    failure = print_pair(partition, orientation, format).err();
                }
            });
            failure.map_or(Ok(()), Err)
        }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn print_pair(
    partition: &lassalle::SetPartition,
    orientation: &lassalle::Orientation,
    format: StreamFormat,
) -> Result<(), Error> {
    match format {
        StreamFormat::Text => println!("{}", format!("{partition} ; {orientation}").trim_end()),
        StreamFormat::Json => {
            let image = PhiImage {
                partition: partition.clone(),
                orientation: orientation.clone(),
            };
            println!("{}", serde_json::to_string(&image).map_err(json_error)?);
        }
    }
    Ok(())
}

struct TableData {
    comments: Vec<&'static str>,
    columns: Vec<&'static str>,
    rows: Vec<(Vec<usize>, BigInt)>,
}

fn triangle_rows(table: &CountTable) -> Vec<(Vec<usize>, BigInt)> {
    table.rows().map(|(m, n, v)| (vec![m, n], v.clone())).collect()
}

fn table_command(name: TableName, bound: usize, format: TableFormat) -> Result<(), Error> {
    let data = match name {
        TableName::Lassalle => TableData {
            comments: vec![
                "alternating binomial convolution of Catalan numbers",
                "cross-checked against exhaustive enumeration of uniquely sorted permutations",
            ],
            columns: vec!["m", "value"],
            rows: lassalle_terms(bound)
                .into_iter()
                .enumerate()
                .map(|(i, v)| (vec![i + 1], v))
                .collect(),
        },
        TableName::D => TableData {
            comments: vec![
                "hook configurations with host tail length m over hosts of length n",
                "computed by the two-index convolution; cross-checked against exhaustive censuses",
            ],
            columns: vec!["m", "n", "value"],
            rows: triangle_rows(&d_table(bound)),
        },
        TableName::E => TableData {
            comments: vec![
                "uniquely sorted permutations of length n with tail length m",
                "odd column sums give the Lassalle sequence; even columns vanish",
            ],
            columns: vec!["m", "n", "value"],
            rows: triangle_rows(&e_table(bound)),
        },
        TableName::RefinedFirst => TableData {
            comments: vec!["uniquely sorted permutations of length 2k+1 counted by first entry"],
            columns: vec!["first_entry", "count"],
            rows: refined_lassalle_first_entry(bound)?
                .into_iter()
                .enumerate()
                .map(|(i, v)| (vec![i + 1], v))
                .collect(),
        },
        TableName::RefinedEye => TableData {
            comments: vec!["uniquely sorted permutations of length 2k+1 counted by eye"],
            columns: vec!["eye", "count"],
            rows: refined_lassalle_eye(bound)?
                .into_iter()
                .enumerate()
                .map(|(i, v)| (vec![i], v))
                .collect(),
        },
    };
    match format {
        TableFormat::Csv => {
            for comment in &data.comments {
                println!("# {comment}");
            }
            println!("{}", data.columns.join(","));
            for (indices, value) in &data.rows {
                let mut fields: Vec<String> = indices.iter().map(usize::to_string).collect();
                fields.push(value.to_string());
                println!("{}", fields.join(","));
            }
        }
        TableFormat::Json => {
            let rows: Vec<serde_json::Value> = data
                .rows
                .iter()
                .map(|(indices, value)| {
                    let mut row: Vec<serde_json::Value> =
                        indices.iter().map(|&i| i.into()).collect();
                    row.push(value.to_string().into());
                    serde_json::Value::Array(row)
                })
                .collect();
            let body = serde_json::json!({
                "columns": data.columns,
                "rows": rows,
            });
            println!("{}", serde_json::to_string(&body).map_err(json_error)?);
        }
    }
    Ok(())
}

fn verify_command(suite: Suite, bound: Option<usize>) -> ExitCode {
    let report = run_suite(suite, bound, true);
    for check in report.checks() {
        if check.pass {
            println!(
                "pass {} ({}) [{}]: {}",
                check.name, check.params, check.provenance, check.computed
            );
        } else {
            println!(
                "FAIL {} ({}) [{}]: expected {}; computed {}",
                check.name, check.params, check.provenance, check.expected, check.computed
            );
        }
    }
    let failures = report.failures().count();
    let total = report.checks().len();
    if failures == 0 {
        println!("verified: {total} checks, 0 failures");
        ExitCode::SUCCESS
    } else {
        println!("verified: {total} checks, {failures} failures");
        ExitCode::FAILURE
    }
}
