//! Command-line driver: parse workspace files, dispatch to the library, and
//! emit deterministic reports.
//!
//! Arguments mix file paths and artifact names: tokens ending in a known
//! extension (`.fc .fp .fm .fj .fs .fb .fa .fw`) are loaded into the
//! workspace, every other token is a name or inline spec, in order. Exit
//! codes: `0` computation succeeded and all checked properties hold, `1` a
//! checked property fails (witness printed), `2` malformed input or a
//! resource-guard trip.

mod commands;
mod report;

pub use report::Report;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use toposkit::{Guard, TkError};

#[derive(Parser, Debug)]
#[command(name = "toposkit", version, about = "Exact finite topos computations")]
pub struct Cli {
    /// Emit the report as JSON (schema version inside).
    #[arg(long, global = true)]
    pub json: bool,

    /// Bound on enumeration candidate counts (overrides TOPOSKIT_MAX_ENUM).
    #[arg(long, global = true)]
    pub max_enum: Option<u64>,

    /// Seed recorded in the report and used by sampled probe selection.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Load files, validate every artifact, and list the workspace.
    Validate { inputs: Vec<String> },
    /// The subobject classifier of a category: sieve counts and truth map.
    Omega { inputs: Vec<String> },
    /// Characteristic map of a mono given as a named presheaf map.
    Char { inputs: Vec<String> },
    /// The subobject lattice of a presheaf.
    Sub { inputs: Vec<String> },
    /// Full classifier verification over the standard corpus.
    VerifyClassifier { inputs: Vec<String> },
    /// Enumerate all Grothendieck topologies on a category.
    Topologies { inputs: Vec<String> },
    /// Enumerate Lawvere–Tierney operators and cross-check the bijection.
    LtOps { inputs: Vec<String> },
    /// Sheaf condition for a presheaf against a topology spec.
    IsSheaf { inputs: Vec<String> },
    /// Sheafification of a presheaf with unit diagnostics.
    Sheafify { inputs: Vec<String> },
    /// The frame of opens of a space.
    Frame { inputs: Vec<String> },
    /// The canonical topology of a space.
    Canonical { inputs: Vec<String> },
    /// The sheaf of sections of a bundle.
    Sections { inputs: Vec<String> },
    /// The étale space of a presheaf on a space's open poset.
    Etale { inputs: Vec<String> },
    /// Sobriety with irreducible-closed-set witnesses.
    Sober { inputs: Vec<String> },
    /// Points of the frame of opens and spatiality.
    Spatial { inputs: Vec<String> },
    /// Recover the locale as subobjects of the terminal sheaf.
    RecoverLocale { inputs: Vec<String> },
    /// The adjoint triple along a functor, with adjunction certificates.
    Triple { inputs: Vec<String> },
    /// Certify the geometric morphism induced by a functor.
    VerifyGm { inputs: Vec<String> },
    /// Points of a presheaf topos as flat functors up to isomorphism.
    Points {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        inputs: Vec<String>,
    },
    /// Classify a left-exact functor (a named diagram functor or
    /// `yoneda(<category>)`).
    ClassifyLex { inputs: Vec<String> },
    /// Internal group axioms.
    CheckGroup { inputs: Vec<String> },
    /// Internal identity over generalized elements: `<algebra> <lhs> <rhs>`.
    CheckId {
        inputs: Vec<String>,
        /// Guard equation for an implication: two expressions.
        #[arg(long, num_args = 2)]
        given: Option<Vec<String>>,
    },
    /// Internal field axioms in both variants.
    CheckField {
        inputs: Vec<String>,
        #[arg(long, default_value = "both")]
        variant: String,
    },
    /// Axiom audits over a declared corpus.
    Etcs {
        #[command(subcommand)]
        sub: EtcsCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum EtcsCmd {
    Audit {
        /// Workspace file declaring the corpus (and candidates).
        #[arg(long)]
        corpus: PathBuf,
        /// Comma-separated checks: well-pointed, choice, nno, global.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Corpus name when the workspace declares several.
        #[arg(long)]
        corpus_name: Option<String>,
    },
}

const EXTENSIONS: [&str; 8] = ["fc", "fp", "fm", "fj", "fs", "fb", "fa", "fw"];

/// Split command tokens into workspace files and name/spec tokens.
pub fn split_inputs(inputs: &[String]) -> (Vec<PathBuf>, Vec<String>) {
    let mut files = Vec::new();
    let mut names = Vec::new();
    for tok in inputs {
        let is_file = EXTENSIONS
            .iter()
            .any(|ext| tok.ends_with(&format!(".{ext}")));
        if is_file {
            files.push(PathBuf::from(tok));
        } else {
            names.push(tok.clone());
        }
    }
    (files, names)
}

fn guard_from(cli_max: Option<u64>) -> Guard {
    match cli_max {
        Some(limit) => Guard::new(limit),
        None => match std::env::var("TOPOSKIT_MAX_ENUM") {
            Ok(v) => v.parse().map(Guard::new).unwrap_or_default(),
            Err(_) => Guard::default(),
        },
    }
}

/// Run the CLI on pre-parsed arguments; returns the exit code and the
/// rendered report.
pub fn run(argv: &[String]) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with its own formatting.
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let guard = guard_from(cli.max_enum);
    let started = std::time::Instant::now();
    let mut report = Report::new(commands::command_name(&cli.cmd));
    if let Some(seed) = cli.seed {
        report.param("seed", seed.to_string());
    }
    report.param("max-enum", guard.limit().to_string());
    let outcome = commands::dispatch(&cli, &guard, &mut report);
    report.timing_ms = started.elapsed().as_millis();
    let code = match outcome {
        Ok(holds) => {
            report.verdict = if holds { "ok".into() } else { "fail".into() };
            if holds {
                0
            } else {
                1
            }
        }
        Err(e) => {
            report.verdict = "error".into();
            report.witness(error_text(&e));
            2
        }
    };
    let rendered = if cli.json {
        report.render_json()
    } else {
        report.render_text()
    };
    (code, rendered)
}

fn error_text(e: &TkError) -> String {
    format!("{e}")
}
