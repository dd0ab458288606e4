use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wreathmac::cache;
use wreathmac::cherednik::{c_delta_with, c_l_from, d_delta, kostka_matrix, GradedMatrix};
use wreathmac::combinatorics::multipartitions_of;
use wreathmac::render::{matrix_to_json, render_char_table, render_fake_degrees, render_matrix, Format, MatrixKind};
use wreathmac::verify::{self, Limits, Suite};
use wreathmac::wreath::KostkaRoute;
use wreathmac::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Graded characters of restricted rational Cherednik algebras for C_l wr S_n.
#[derive(Parser)]
#[command(name = "wreathmac", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the t,t-Kostka matrix, rows L(lambda), columns irreducibles.
    Kostka {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        output: Output,
        /// How the Kostka polynomials are computed.
        #[arg(long, value_enum, default_value_t = Route::Plethystic)]
        route: Route,
    },
    /// Print the decomposition matrices of standard and simple modules.
    Decomp {
        #[arg(value_enum, default_value_t = Which::All)]
        which: Which,
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        output: Output,
    },
    /// Print fake degrees and their shifted forms.
    FakeDegrees {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        output: Output,
    },
    /// Compute the character table, store it in the cache and print it.
    CharTable {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        ell_max: usize,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Group {
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    n: usize,
    /// Character table cache directory.
    #[arg(long, env = "WREATHMAC_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Compute matrix rows in parallel.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_parser = parse_format, default_value = "text")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Plethystic,
    CharacterSum,
    /// Both routes, failing on any disagreement.
    Verified,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Cdelta,
    Ddelta,
    Cl,
    All,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl Group {
    fn prepare(&self) -> Result<(), Failure> {
        if self.ell == 0 {
            return Err(Failure::Usage("--ell must be at least 1".into()));
        }
        if let Some(dir) = &self.cache_dir {
            cache::load_or_compute(self.ell, self.n, Some(dir))?;
        }
        Ok(())
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn decomp(which: Which, group: &Group, format: Format) -> Result<String, Failure> {
    let (ell, n) = (group.ell, group.n);
    if which == Which::Ddelta {
        return Ok(render_matrix(&d_delta(ell, n), MatrixKind::DDelta, format));
    }
    let cd = c_delta_with(ell, n, group.parallel)?;
    if which == Which::Cdelta {
        return Ok(render_matrix(&cd, MatrixKind::CDelta, format));
    }
    let cl = c_l_from(&cd)?;
    if which == Which::Cl {
        return Ok(render_matrix(&cl, MatrixKind::CL, format));
    }
    let dd = d_delta(ell, n);
    let holds = dd.mul(&cl)? == cd;
    let tables: [(&GradedMatrix, MatrixKind); 3] =
        [(&cd, MatrixKind::CDelta), (&dd, MatrixKind::DDelta), (&cl, MatrixKind::CL)];
    let status = if holds { "holds" } else { "FAILS" };
    let text = match format {
        Format::Json => {
            let parsed: Vec<serde_json::Value> = tables
                .iter()
                .map(|(m, k)| serde_json::from_str(&matrix_to_json(m, *k)).expect("rendered JSON parses"))
                .collect();
            let doc = serde_json::json!({ "matrices": parsed, "c_delta_equals_d_delta_c_l": holds });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text | Format::Latex => {
            let comment = if format == Format::Latex { "% " } else { "" };
            let mut s: String = tables.iter().map(|(m, k)| render_matrix(m, *k, format) + "\n").collect();
            s.push_str(&format!("{comment}C_Delta = D_Delta C_L: {status}\n"));
            s
        }
    };
    if holds {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Internal("C_Delta differs from D_Delta C_L".into()))
    }
}

fn char_table(group: &Group, format: Format) -> Result<String, Failure> {
    let dir = group.cache_dir.clone().unwrap_or_else(|| PathBuf::from(".wreathmac-cache"));
    let table = cache::load_or_compute(group.ell, group.n, Some(&dir))?;
    let path = cache::cache_path(&dir, group.ell, group.n);
    let src = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let reloaded = cache::table_from_json(&src)?;
    if reloaded != *table {
        return Err(Failure::Internal(format!("{} does not reload to the computed table", path.display())));
    }
    eprintln!("cache: {} (reloaded identically)", path.display());
    Ok(render_char_table(&table, format))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Kostka { group, output, route } => {
            group.prepare()?;
            let route = match route {
                Route::Plethystic => KostkaRoute::Plethystic,
                Route::CharacterSum => KostkaRoute::CharacterSum,
                Route::Verified => KostkaRoute::Verified,
            };
            let m = kostka_matrix(group.ell, group.n, route, group.parallel)?;
            emit(&render_matrix(&m, MatrixKind::Kostka, output.format), output.out.as_deref())
        }
        Command::Decomp { which, group, output } => {
            group.prepare()?;
            emit(&decomp(which, &group, output.format)?, output.out.as_deref())
        }
        Command::FakeDegrees { group, output } => {
            group.prepare()?;
            let labels = multipartitions_of(group.ell, group.n);
            emit(&render_fake_degrees(&labels, output.format), output.out.as_deref())
        }
        Command::CharTable { group, output } => {
            group.prepare()?;
            emit(&char_table(&group, output.format)?, output.out.as_deref())
        }
        Command::Verify { suite, ell_max, n_max, out } => {
            if ell_max == 0 {
                return Err(Failure::Usage("--ell-max must be at least 1".into()));
            }
            let report = verify::run(suite, Limits { ell_max, n_max })?;
            emit(&report.to_string(), out.as_deref())?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification(format!("suite {} failed", suite.name())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
