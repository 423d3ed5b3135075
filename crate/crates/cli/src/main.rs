use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bimonad_cli::commands::{self, RunReport};
use bimonad_cli::fixtures::{write_all, write_json};
use bimonad_cli::CliError;
use clap::{Parser, Subcommand};

/// Exact verification of bialgebroids, bimonads and their Eilenberg-Moore
/// categories. Exit status: 0 all checks pass, 1 a check fails, 2 bad input.
#[derive(Parser)]
#[command(name = "bimonad", version)]
struct Cli {
    /// Write the machine-readable report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the bialgebroid axioms.
    CheckBialgebroid { path: PathBuf },
    /// Check the ten bimonad diagrams of a presentation or a bialgebroid.
    CheckBimonad {
        path: PathBuf,
        /// Extra test objects: module files over E (R, E, A, AA are always tested).
        #[arg(long, value_delimiter = ',')]
        tests: Vec<String>,
    },
    /// Rebuild the bimonad structure from the module-category adjunction.
    Roundtrip {
        path: PathBuf,
        /// Restrict to these of R (or k), E, A, AA.
        #[arg(long, value_delimiter = ',')]
        tests: Vec<String>,
    },
    /// Convert a bialgebroid to its bimonad presentation.
    ToBimonad {
        path: PathBuf,
        /// Write the presentation here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Recover the bialgebroid of a bimonad presentation.
    Extract {
        path: PathBuf,
        /// Write the bialgebroid here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check a monad morphism or a bialgebroid map.
    CheckMorphism { path: PathBuf },
    /// Eilenberg-Moore checks on a catalogue of A-modules.
    Em { path: PathBuf, catalogue: PathBuf },
    /// Enumerate the algebras of the monad (−)^C on a set of size A.
    EnumerateSetAlgebras {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        up_to_iso: bool,
        /// Candidate cap; overrides BIALG_ENUM_CAP.
        #[arg(long)]
        cap: Option<u128>,
        /// Write the list of tables here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check the bimonad diagrams of (−)^C on sets of the given sizes.
    CheckSetBimonad {
        #[arg(long)]
        c: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
        sizes: Vec<usize>,
    },
    /// Validate a set T-algebra table.
    CheckSetAlgebra { path: PathBuf },
    /// Write the fixture library and its manifest.
    Fixtures {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn emit(path: &Option<PathBuf>, run: &RunReport, key: &str) -> Result<(), CliError> {
    match (path, run.payload.get(key)) {
        (Some(p), Some(v)) => write_json(p, v),
        _ => Ok(()),
    }
}

fn run(cli: &Cli) -> Result<Option<RunReport>, CliError> {
    let report = match &cli.cmd {
        Cmd::CheckBialgebroid { path } => commands::check_bialgebroid(path)?,
        Cmd::CheckBimonad { path, tests } => commands::check_bimonad(path, tests)?,
        Cmd::Roundtrip { path, tests } => commands::roundtrip(path, tests)?,
        Cmd::ToBimonad { path, emit: e } => {
            let r = commands::to_bimonad(path)?;
            emit(e, &r, "bimonad")?;
            r
        }
        Cmd::Extract { path, emit: e } => {
            let r = commands::extract(path)?;
            emit(e, &r, "bialgebroid")?;
            r
        }
        Cmd::CheckMorphism { path } => commands::check_morphism(path)?,
        Cmd::Em { path, catalogue } => commands::em(path, catalogue)?,
        Cmd::EnumerateSetAlgebras { c, a, up_to_iso, cap, emit: e } => {
            if let Some(cap) = cap {
                std::env::set_var("BIALG_ENUM_CAP", cap.to_string());
            }
            let r = commands::enumerate_set_algebras(*c, *a, *up_to_iso)?;
            emit(e, &r, "algebras")?;
            r
        }
        Cmd::CheckSetBimonad { c, sizes } => commands::check_set_bimonad(*c, sizes)?,
        Cmd::CheckSetAlgebra { path } => commands::check_set_algebra(path)?,
        Cmd::Fixtures { dir } => {
            for f in write_all(dir)? {
                println!("{}", Path::new(dir).join(f).display());
            }
            return Ok(None);
        }
    };
    if let Some(p) = &cli.out {
        write_json(p, &report.to_json())?;
    }
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(r)) => {
            print!("{}", r.summary());
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
