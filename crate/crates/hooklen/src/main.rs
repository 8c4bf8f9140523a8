use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hooklen::json::{decomposition_details, partition_to_json, report_to_json, series_to_json};
use hooklen::runner::{run_jobs, TimedReport};
use hooklen::{random_table, RANDOM_TABLE_LEN};
use hooklen_core::classes::{enumerate_class, ClassSpec};
use hooklen_core::verify::{
    catalog, check_ids, class_statistic_series, lhs_series, rhs_formula, CheckParams, HookWeight, Marks,
};
use hooklen_core::{decompose, Error, Partition, Ring, TruncatedSeries};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hooklen", version, about = "Hook lengths, Littlewood decomposition and q-series identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Truncation order N.
    #[arg(long, global = true)]
    order: Option<usize>,
    #[arg(long = "n-max", global = true)]
    n_max: Option<usize>,
    /// Degree cap D for y, x and u.
    #[arg(long = "degree-cap", global = true)]
    degree_cap: Option<usize>,
    /// Worker threads for catalog runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(short = 't', long = "t", global = true)]
    t: Option<usize>,
    #[arg(short = 'z', long = "z", global = true, allow_negative_numbers = true)]
    z: Option<i64>,
    #[arg(long, global = true)]
    beta: Option<u32>,
    /// Hook weight ρ (or ρ1): const:<r>, ind:<h>, pow:<b>, table:<r>,<r>,…
    #[arg(long, global = true)]
    rho: Option<HookWeight>,
    /// Additive hook weight ρ2.
    #[arg(long, global = true)]
    rho2: Option<HookWeight>,
    /// Seed of the random ρ table used by `verify all`.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// t-core, t-quotient, boundary word and core vector of a partition.
    Decompose {
        #[arg(short = 'p', long, allow_hyphen_values = true)]
        partition: String,
    },
    /// Class membership of a partition.
    Classify {
        #[arg(short = 'p', long, allow_hyphen_values = true)]
        partition: String,
        #[arg(required = true)]
        classes: Vec<String>,
    },
    /// Members of a class of weight n.
    Enumerate { class: String, n: usize },
    /// Coefficients of a series.
    Series {
        #[command(subcommand)]
        which: SeriesSource,
    },
    /// Runs a catalog check, or `all` of them.
    Verify {
        id: String,
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand)]
enum SeriesSource {
    /// Counting series of a class.
    Class { class: String },
    /// Enumerated side of an identity.
    Lhs { id: String },
    /// Product side of an identity.
    Rhs { id: String },
}

/// Errors that exit with status 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Usage> {
    match &cli.command {
        Command::Decompose { partition } => {
            let p: Partition = partition.parse()?;
            let t = cli.t.ok_or_else(|| anyhow!("decompose needs -t"))?;
            if t == 0 {
                return Err(Error::InvalidModulus.into());
            }
            print_decomposition(cli.format, &p, t);
            Ok(true)
        }
        Command::Classify { partition, classes } => {
            let p: Partition = partition.parse()?;
            let specs = classes.iter().map(|s| s.parse::<ClassSpec>()).collect::<Result<Vec<_>, _>>()?;
            print_classes(cli.format, &p, &specs);
            Ok(true)
        }
        Command::Enumerate { class, n } => {
            let members = enumerate_class(class.parse()?, *n);
            match cli.format {
                Format::Json => println!("{}", Value::from(members.iter().map(partition_to_json).collect::<Vec<_>>())),
                Format::Tsv => members.iter().for_each(|p| println!("{p}")),
                Format::Human => members.iter().for_each(|p| println!("[{p}]")),
            }
            Ok(true)
        }
        Command::Series { which } => {
            let s = match which {
                SeriesSource::Class { class } => {
                    class_statistic_series(class.parse()?, 1, cli.order.unwrap_or(20), &Marks::none())?
                }
                SeriesSource::Lhs { id } => lhs_series(id, &params(cli)).map_err(|e| unknown(e, id))?,
                SeriesSource::Rhs { id } => rhs_formula(id, &params(cli)).map_err(|e| unknown(e, id))?,
            };
            print_series(cli.format, &s);
            Ok(true)
        }
        Command::Verify { id, quick } => verify(cli, id, *quick),
    }
}

fn params(cli: &Cli) -> CheckParams {
    CheckParams {
        t: cli.t,
        z: cli.z,
        beta: cli.beta,
        order: cli.order,
        degree_cap: cli.degree_cap,
        n_max: cli.n_max,
        rho1: cli.rho.clone(),
        rho2: cli.rho2.clone(),
    }
}

fn unknown(e: Error, id: &str) -> anyhow::Error {
    match e {
        Error::UnknownCheck(_) => {
            anyhow!("unknown check `{id}`; known checks: {}", check_ids().collect::<Vec<_>>().join(", "))
        }
        e => e.into(),
    }
}

fn verify(cli: &Cli, id: &str, quick: bool) -> Result<bool, Usage> {
    let jobs = if id == "all" {
        let seed = cli.seed.unwrap_or_else(rand::random);
        eprintln!("random ρ table seed {seed}");
        catalog(quick, Some(random_table(seed, RANDOM_TABLE_LEN)))
    } else {
        if !check_ids().any(|c| c == id) {
            return Err(unknown(Error::UnknownCheck(id.into()), id).into());
        }
        vec![(id.to_string(), params(cli))]
    };
    let results = run_jobs(&jobs, cli.jobs);
    let mut reports = Vec::with_capacity(results.len());
    for (r, (id, _)) in results.into_iter().zip(&jobs) {
        reports.push(r.map_err(|e| unknown(e, id))?);
    }
    print_reports(cli.format, &reports, id == "all");
    Ok(reports.iter().all(|r| r.report.passed()))
}

fn bracketed(p: &Partition) -> String {
    format!("[{p}]")
}

fn print_decomposition(format: Format, p: &Partition, t: usize) {
    let d = decompose(p, t);
    let v = decomposition_details(p, &d);
    match format {
        Format::Json => println!("{v}"),
        Format::Tsv | Format::Human => {
            let quotient: Vec<String> = d.quotient().iter().map(bracketed).collect();
            let rows = [
                ("partition", bracketed(p)),
                ("t", t.to_string()),
                ("core", bracketed(d.core())),
                ("quotient", format!("[{}]", quotient.join(","))),
                ("word", v["word"].as_str().unwrap_or_default().to_string()),
                ("kappa", v["kappa"].to_string()),
            ];
            for (k, val) in rows {
                if format == Format::Tsv {
                    println!("{k}\t{val}");
                } else {
                    println!("{k:<10}{val}");
                }
            }
        }
    }
}

fn print_classes(format: Format, p: &Partition, specs: &[ClassSpec]) {
    match format {
        Format::Json => {
            let classes: Vec<Value> = specs
                .iter()
                .map(|s| json!({"class": s.to_string(), "member": s.contains(p)}))
                .collect();
            println!("{}", json!({"partition": partition_to_json(p), "classes": classes}));
        }
        Format::Tsv => specs.iter().for_each(|s| println!("{s}\t{}", s.contains(p))),
        Format::Human => specs.iter().for_each(|s| println!("{:<12}{}", s.to_string(), s.contains(p))),
    }
}

fn print_series(format: Format, s: &TruncatedSeries) {
    let coeffs = s.coefficients();
    match format {
        Format::Json => println!("{}", series_to_json(s)),
        Format::Tsv => coeffs.iter().enumerate().for_each(|(n, c)| println!("{n}\t{c}")),
        Format::Human => match s.ring() {
            Ring::Rational => {
                println!("{}", coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            }
            Ring::Poly { .. } => coeffs.iter().enumerate().for_each(|(n, c)| println!("q^{n}: {c}")),
        },
    }
}

fn print_reports(format: Format, reports: &[TimedReport], many: bool) {
    match format {
        Format::Json => {
            let all: Vec<Value> = reports.iter().map(report_to_json).collect();
            if many {
                println!("{}", Value::from(all));
            } else {
                println!("{}", all[0]);
            }
        }
        Format::Tsv => {
            println!("identity_id\tparams\tverdict\tmax_order_checked\twitness_n\tlhs\trhs\telapsed_ms");
            for r in reports {
                let rep = &r.report;
                let params: Vec<String> = rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let (n, lhs, rhs) = match &rep.witness {
                    Some(w) => (w.n.to_string(), w.lhs.clone(), w.rhs.clone()),
                    None => Default::default(),
                };
                println!(
                    "{}\t{}\t{}\t{}\t{n}\t{lhs}\t{rhs}\t{}",
                    rep.identity_id,
                    params.join(" "),
                    rep.verdict.as_str(),
                    rep.max_order_checked,
                    r.elapsed_ms
                );
            }
        }
        Format::Human => {
            for r in reports {
                println!("{} ({} ms)", r.report, r.elapsed_ms);
                if !many || !r.report.passed() {
                    r.report.notes.iter().for_each(|n| println!("    {n}"));
                }
            }
            if many {
                let passed = reports.iter().filter(|r| r.report.passed()).count();
                println!("{passed}/{} checks passed", reports.len());
            }
        }
    }
}
