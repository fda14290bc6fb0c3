use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kantor_core::catalog::{catalog, run_item_suite, self_test};
use kantor_core::format::SystemFile;
use kantor_core::triple::SignPair;
use kantor_core::workbench::{
    build_lie, convert, decompose, default_suites, multiplicities, parse_vector, reports_json, resolve_input,
    resolve_map, run_suite, Direction, Options,
};
use kantor_core::{Error, Report};

#[derive(Parser)]
#[command(
    name = "kantor",
    version,
    about = "Exact checks and constructions for triple systems, structurable algebras and graded Lie superalgebras"
)]
struct Cli {
    /// Worker threads for identity sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Default)]
struct Inputs {
    /// Sign pair as e,d, e.g. -1,1.
    #[arg(long, allow_hyphen_values = true)]
    signs: Option<SignPair>,
    /// A vector such as 1,0,0,0 (left unit, or f for skew-twist-11).
    #[arg(long, allow_hyphen_values = true)]
    unit: Option<String>,
    /// A linear-map file or catalog id.
    #[arg(long)]
    map: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in systems, or print one as a file.
    Catalog {
        /// Print this item in the file format instead of listing.
        id: Option<String>,
        /// Check every item against its declared suites.
        #[arg(long)]
        self_test: bool,
    },
    /// Run verification suites on a file or catalog id.
    Verify {
        input: String,
        /// Suite name; repeatable. Defaults depend on the input.
        #[arg(long)]
        suite: Vec<String>,
        #[command(flatten)]
        inputs: Inputs,
        /// Append timing to each report.
        #[arg(long)]
        timing: bool,
    },
    /// Transform a system and write the verified result.
    Convert {
        input: String,
        /// kts-to-structurable | structurable-to-kts | twist | double-m21 | mu-normalize | skew-twist-11
        direction: Direction,
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the graded Lie (super)algebra g(U) of a triple system.
    BuildLie {
        input: String,
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose under osp(1,2) and print module multiplicities.
    Decompose {
        input: String,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Run suites and write all reports as JSON.
    Report {
        input: String,
        #[arg(long)]
        suite: Vec<String>,
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn options(i: &Inputs) -> Result<Options, Error> {
    Ok(Options {
        unit: i.unit.as_deref().map(parse_vector).transpose()?,
        signs: i.signs,
        map: i.map.as_deref().map(resolve_map).transpose()?,
    })
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Unsupported(_) | Error::InvalidSign(_) | Error::DimensionMismatch { .. } => 2,
        _ => 1,
    }
}

fn collect_reports(input: &str, suites: &[String], inputs: &Inputs) -> Result<Vec<Report>, Error> {
    let (file, item) = resolve_input(input)?;
    let opts = options(inputs)?;
    let suites = if suites.is_empty() {
        default_suites(&file, item.as_ref())
    } else {
        suites.to_vec()
    };
    if suites.is_empty() {
        return Err(Error::Unsupported(format!(
            "a {} has no default suite; check it with --suite automorphism --map on its system",
            file.kind()
        )));
    }
    let mut out = Vec::new();
    for s in &suites {
        let r = match &item {
            Some(it) if it.base.is_some() && opts.map.is_none() => run_item_suite(it, s)?,
            _ => {
                let mut r = run_suite(&file, s, &opts)?;
                r.item = item.as_ref().map(|i| i.id.to_string());
                r
            }
        };
        out.push(r);
    }
    Ok(out)
}

fn emit(file: &SystemFile, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(p) => file.save(p),
        None => {
            print!("{}", file.to_canonical_string());
            Ok(())
        }
    }
}

fn verdict(reports: &[Report]) -> u8 {
    if reports.iter().all(Report::passed) {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Catalog { id: Some(id), .. } => {
            let (file, _) = resolve_input(&id)?;
            print!("{}", file.to_canonical_string());
            Ok(0)
        }
        Command::Catalog {
            id: None,
            self_test: true,
        } => {
            let reports = self_test()?;
            for r in &reports {
                print!("{}", r.render(false));
            }
            Ok(verdict(&reports))
        }
        Command::Catalog {
            id: None,
            self_test: false,
        } => {
            for item in catalog() {
                let on = item.base.map(|b| format!(" on {b}")).unwrap_or_default();
                println!(
                    "{:<16} {:<20} dim {:<3} {}{on}",
                    item.id,
                    item.file.kind(),
                    item.file.dim(),
                    item.description
                );
            }
            Ok(0)
        }
        Command::Verify {
            input,
            suite,
            inputs,
            timing,
        } => {
            let reports = collect_reports(&input, &suite, &inputs)?;
            for r in &reports {
                print!("{}", r.render(timing));
            }
            Ok(verdict(&reports))
        }
        Command::Report {
            input,
            suite,
            inputs,
            out,
        } => {
            let reports = collect_reports(&input, &suite, &inputs)?;
            let json = reports_json(&reports);
            match out {
                Some(p) => std::fs::write(&p, json).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
                None => print!("{json}"),
            }
            Ok(verdict(&reports))
        }
        Command::Convert {
            input,
            direction,
            inputs,
            out,
        } => {
            let (file, _) = resolve_input(&input)?;
            let result = convert(&file, direction, &options(&inputs)?)?;
            emit(&result, &out)?;
            Ok(0)
        }
        Command::BuildLie { input, inputs, out } => {
            let (file, _) = resolve_input(&input)?;
            let result = build_lie(&file, &options(&inputs)?)?;
            emit(&result, &out)?;
            Ok(0)
        }
        Command::Decompose { input, inputs } => {
            let (file, _) = resolve_input(&input)?;
            let d = decompose(&file, &options(&inputs)?)?;
            print!("{}", d.report.render(false));
            println!("{}", multiplicities(&d));
            Ok(verdict(std::slice::from_ref(&d.report)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
