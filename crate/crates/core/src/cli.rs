//! Command-line front end. Exit codes: 0 success, 1 theorem violation,
//! 2 input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::builtins;
use crate::curvature::{levi_civita, CurvaturePack};
use crate::derived::PseudoProjectiveParams;
use crate::kernel::rat::{self, Rat};
use crate::manifold::{classify_contact, parse_manifold, FrameManifold};
use crate::report::{render_structure, structure_flags, Report, TheoremDto};
use crate::soliton::{solve_soliton, verify_theorems, SolitonVariant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

fn parse_rat(s: &str) -> Result<Rat, String> {
    rat::parse(s).map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<String, String> {
    if SolitonVariant::NAMES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown variant; expected one of: {}", SolitonVariant::NAMES.join(", ")))
    }
}

#[derive(Debug, Parser)]
#[command(name = "sasaki", version, about = "Exact curvature and soliton checks on contact metric frame manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct PseudoArgs {
    /// Pseudo-projective coefficient a (integer or p/q)
    #[arg(long, default_value = "1", value_parser = parse_rat, allow_hyphen_values = true)]
    a: Rat,
    /// Pseudo-projective coefficient b (integer or p/q)
    #[arg(long, default_value = "1", value_parser = parse_rat, allow_hyphen_values = true)]
    b: Rat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a manifold file and print its structure classification
    Validate { path: PathBuf },
    /// Print the full report
    Report {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        pseudo: PseudoArgs,
        /// Scalar curvature used in the pseudo-projective tensor
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        r_override: Option<Rat>,
    },
    /// Solve a soliton equation for (λ, μ)
    Soliton {
        path: PathBuf,
        #[arg(long, default_value = "star-conformal-eta", value_parser = parse_variant)]
        variant: String,
        #[command(flatten)]
        pseudo: PseudoArgs,
    },
    /// Check every theorem whose hypothesis holds; exits 1 on a violation
    CheckTheorems {
        path: PathBuf,
        #[command(flatten)]
        pseudo: PseudoArgs,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        r_override: Option<Rat>,
    },
    /// Built-in example manifolds
    Examples {
        #[command(subcommand)]
        command: ExamplesCommand,
    },
}

#[derive(Debug, Subcommand)]
enum ExamplesCommand {
    /// List the built-in names
    List,
    /// Print a built-in manifold as a manifold file
    Export { name: String },
}

struct InputError(String);

fn load(path: &Path) -> Result<FrameManifold, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_manifold(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn params(p: &PseudoArgs, r_override: Option<Rat>) -> Result<PseudoProjectiveParams, InputError> {
    PseudoProjectiveParams::new(p.a.clone(), p.b.clone(), r_override).map_err(|e| InputError(e.to_string()))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, InputError> {
    let io = |e: std::io::Error| InputError(format!("write failed: {e}"));
    match cli.command {
        Command::Validate { path } => {
            let m = load(&path)?;
            let class = classify_contact(&m, &levi_civita(&m));
            write!(out, "manifold {} (dimension {})\n{}", m.name(), m.dim(), render_structure(&structure_flags(&class)))
                .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Report {
            path,
            format,
            pseudo,
            r_override,
        } => {
            let m = load(&path)?;
            let report = Report::build(&m, &params(&pseudo, r_override)?);
            let body = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            out.write_all(body.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Soliton { path, variant, pseudo } => {
            params(&pseudo, None)?;
            let m = load(&path)?;
            let conn = levi_civita(&m);
            let pack = CurvaturePack::new(&m, &conn);
            let v = SolitonVariant::named(&variant).expect("validated by the parser");
            let sol = solve_soliton(&m, &pack, &conn, &v);
            writeln!(out, "{}", sol.summary()).map_err(io)?;
            if let (Some(l), Some(mu)) = (sol.render_lambda(), sol.mu.as_ref()) {
                writeln!(out, "{l}, μ = {}", rat::render(mu)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::CheckTheorems {
            path,
            pseudo,
            r_override,
        } => {
            let p = params(&pseudo, r_override)?;
            let m = load(&path)?;
            let conn = levi_civita(&m);
            let pack = CurvaturePack::new(&m, &conn);
            let report = verify_theorems(&m, &pack, &conn, &p);
            for e in &report.entries {
                let dto = TheoremDto::from(e);
                writeln!(out, "{}\n  {}", dto.line(), dto.details).map_err(io)?;
            }
            let violations = report.violations().count();
            writeln!(out, "violations: {violations}").map_err(io)?;
            Ok(if violations == 0 { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Examples { command } => {
            match command {
                ExamplesCommand::List => {
                    for name in builtins::NAMES {
                        writeln!(out, "{name}").map_err(io)?;
                    }
                }
                ExamplesCommand::Export { name } => {
                    let doc = builtins::document(&name).ok_or_else(|| {
                        InputError(format!("unknown example {name:?}; try one of: {}", builtins::NAMES.join(", ")))
                    })?;
                    out.write_all(doc.to_json().as_bytes()).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}
