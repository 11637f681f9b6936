use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use overpartition::enumerate::{enum_pops, Constraint};
use overpartition::tilings::{pop_to_tiling, render, RenderFormat, Window};
use overpartition::{Partition, PlaneOverpartition};
use overpartition_cli::bijection::{self, Kind};
use overpartition_cli::catalog::{verify_report, CATALOG};
use overpartition_cli::params::{parse_params, Args};
use overpartition_cli::report::{Status, VerificationReport};
use overpartition_cli::suite::{run_suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "popcheck",
    version,
    about = "Check plane overpartition generating functions against enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TileFormat {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check.
    Verify {
        #[arg(long)]
        identity: String,
        /// Comma-separated `key=value` pairs, e.g. `r=2,c=3` or `lambda=[2,1]`.
        #[arg(long, default_value = "")]
        params: String,
        /// Truncation order in q.
        #[arg(long, default_value_t = 10)]
        max_q: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a suite of checks from a TOML file, or the bundled one.
    Suite {
        #[arg(long)]
        suite: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the available checks.
    List,
    /// Apply a bijection to a JSON object read from stdin or a file.
    Bijection {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Draw the domino tiling of a plane overpartition.
    Tile {
        /// Rows separated by `/`, overlines as `'`, e.g. `3 2' 1/2`.
        #[arg(long)]
        pop: String,
        /// Shape for the window; defaults to the shape of the filling.
        #[arg(long, value_delimiter = ',')]
        shape: Option<Vec<u32>>,
        /// Bound on the entries for the window; defaults to the largest one.
        #[arg(long)]
        max_entry: Option<u32>,
        /// Explicit window `t_min,t_max,x_min,x_max`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        window: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: TileFormat,
    },
    /// Print plane overpartitions as JSON lines.
    Enum {
        /// One of all, shape, bounded-shape, box, max-entry, parts-in.
        #[arg(long, default_value = "all")]
        constraint: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        max_weight: u64,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print_reports(reports: &[VerificationReport], format: Format) -> ExitCode {
    match format {
        Format::Text => {
            for r in reports {
                println!("{r}");
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(reports).expect("serializable")
        ),
    }
    if reports.iter().any(|r| r.status == Status::Error) {
        ExitCode::from(2)
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn constraint(name: &str, args: &Args) -> Result<Constraint, String> {
    let e = |e: overpartition_cli::params::ParamError| e.to_string();
    Ok(match name {
        "all" => Constraint::All,
        "shape" => Constraint::Shape(args.partition("lambda").map_err(e)?),
        "bounded-shape" => Constraint::BoundedShape(args.partition("lambda").map_err(e)?),
        "box" => Constraint::Box(args.u32("r").map_err(e)?, args.u32("c").map_err(e)?),
        "max-entry" => Constraint::MaxEntry(args.u32("n").map_err(e)?),
        "parts-in" => Constraint::PartsIn(args.set("set").map_err(e)?),
        other => return Err(format!("unknown constraint `{other}`")),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            identity,
            params,
            max_q,
            format,
        } => {
            let params = match parse_params(&params) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            print_reports(&[verify_report(&identity, &params, max_q)], format)
        }
        Command::Suite { suite, format } => {
            let config = match suite {
                Some(path) => match SuiteConfig::load(&path) {
                    Ok(c) => c,
                    Err(e) => return usage(e),
                },
                None => SuiteConfig::default_suite(),
            };
            print_reports(&run_suite(&config), format)
        }
        Command::List => {
            for i in CATALOG {
                println!("{:<22} {:<28} {}", i.id, i.params, i.about);
            }
            ExitCode::SUCCESS
        }
        Command::Bijection { kind, input } => {
            let mut text = String::new();
            let read = match input {
                Some(path) => std::fs::read_to_string(path).map(|s| text = s),
                None => io::stdin().read_to_string(&mut text).map(|_| ()),
            };
            if let Err(e) = read {
                return usage(e);
            }
            let value: serde_json::Value = match serde_json::from_str(&text) {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            match bijection::run(kind, &value) {
                Ok(record) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&record).expect("serializable")
                    );
                    if record.consistent {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => usage(e),
            }
        }
        Command::Tile {
            pop,
            shape,
            max_entry,
            window,
            format,
        } => {
            let pop = match PlaneOverpartition::parse(&pop) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let window = match window.as_deref() {
                Some(&[t_min, t_max, x_min, x_max]) => Window {
                    t_min,
                    t_max,
                    x_min,
                    x_max,
                },
                Some(_) => return usage("--window takes t_min,t_max,x_min,x_max"),
                None => {
                    let shape = shape.map(Partition::new).unwrap_or_else(|| pop.shape());
                    Window::for_shape(&shape, max_entry.unwrap_or(pop.largest()))
                }
            };
            let tiling = match pop_to_tiling(&pop, window) {
                Ok(t) => t,
                Err(e) => return usage(e),
            };
            let fmt = match format {
                TileFormat::Ascii => RenderFormat::Ascii,
                TileFormat::Svg => RenderFormat::Svg,
            };
            print!("{}", render(&tiling, fmt));
            ExitCode::SUCCESS
        }
        Command::Enum {
            constraint: name,
            params,
            max_weight,
        } => {
            let params = match parse_params(&params) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let c = match constraint(&name, &Args(&params)) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for p in enum_pops(&c, max_weight) {
                if writeln!(out, "{}", serde_json::to_string(&p).expect("serializable")).is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
    }
}
