//! Command-line front end: one subcommand per module operation plus the
//! named verification suites, all emitting JSON reports.
//!
//! Every invocation prints a single JSON document:
//! `{"schema_version": 1, "command": "...", "result": {...},
//! "timing_ms": ...}`. The `result` payload is deterministic — object
//! keys are sorted and no timestamps appear inside it — while
//! `timing_ms` is the one field consumers are expected to ignore when
//! comparing runs. Domain failures print the same envelope with an
//! `error` object in place of `result` and exit with code 1; usage
//! errors exit with code 2.
//!
//! Two environment variables tune resource use and are documented in
//! `--help`: `STRATA_TRUNCATION_BOUND` (Milnor-number truncation
//! ceiling) and `STRATA_SEARCH_BUDGET` (state budget for kernel
//! searches).

use std::ffi::OsString;
use std::io::BufRead;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_integer::Integer;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::diagram::DynkinDiagram;
use crate::error::Error;
use crate::garside::{ArtinWord, CentralPower, Garside};
use crate::milnor;
use crate::poly::BivariatePoly;
use crate::report::{self, SuiteConfig, SUITE_NAMES};
use crate::semigroup::{self, GapSequence, NumericalSemigroup};
use crate::transvection::{self, SearchBudget, SymplecticConfig};
use crate::weyl::RootSystem;
use crate::Result;

const ENV_HELP: &str = "Environment variables:
  STRATA_TRUNCATION_BOUND  truncation ceiling for Milnor-number stabilization
                           (positive integer; default 64)
  STRATA_SEARCH_BUDGET     state budget for kernel searches and the kernel
                           verification suite (positive integer; default 50000)";

#[derive(Parser)]
#[command(
    name = "strata",
    version,
    about = "Exact-arithmetic toolkit: Dynkin diagrams, Garside normal forms, \
             plane-curve germs, numerical semigroups, and symplectic monodromy",
    after_help = ENV_HELP
)]
struct Cli {
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root-system data for an admitted diagram.
    Dynkin {
        #[command(subcommand)]
        cmd: DynkinCmd,
    },
    /// Artin-group words and Garside normal forms.
    Artin {
        #[command(subcommand)]
        cmd: ArtinCmd,
    },
    /// Milnor number and monomial basis of a plane-curve germ.
    Milnor {
        /// Germ polynomial, e.g. "x^3 + y^5".
        #[arg(long)]
        poly: String,
        /// Truncation ceiling; overrides STRATA_TRUNCATION_BOUND.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Versal deformation family of a germ; optionally a smoothness batch.
    Versal {
        /// Germ polynomial, e.g. "x^3 + y^5".
        #[arg(long)]
        poly: String,
        /// Read one comma-separated rational parameter vector per line
        /// from standard input and test each fiber for smoothness.
        #[arg(long)]
        smooth: bool,
        /// Truncation ceiling; overrides STRATA_TRUNCATION_BOUND.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Numerical semigroups, gap sequences, spin parity, classification.
    Semigroup(SemigroupArgs),
    /// The homology representation by symplectic transvections.
    Monodromy {
        #[command(subcommand)]
        cmd: MonodromyCmd,
    },
    /// Run the named verification suites.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Suite name or "all".
        #[arg(value_parser = suite_values())]
        suite: String,
    },
}

fn suite_values() -> clap::builder::PossibleValuesParser {
    let names: Vec<&'static str> = std::iter::once("all")
        .chain(SUITE_NAMES.iter().copied())
        .collect();
    clap::builder::PossibleValuesParser::new(names)
}

#[derive(Subcommand)]
enum DynkinCmd {
    /// Rank, roots, Coxeter number, invariant degrees, longest element.
    Info {
        /// Diagram name (`A5`, `D4`, `E8`) or explicit JSON
        /// `{"vertices": [...], "edges": [[i, j], ...]}`.
        diagram: String,
    },
}

#[derive(Subcommand)]
enum ArtinCmd {
    /// Garside normal form of a word.
    Nf {
        #[arg(long)]
        diagram: String,
        /// Whitespace-separated signed letters, e.g. "1 2 -3".
        #[arg(long)]
        word: String,
    },
    /// Word-problem equality of two words.
    Equal {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Equality modulo the central cyclic subgroup, with witness.
    InnEqual {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Args)]
struct SemigroupArgs {
    /// Comma-separated generators, e.g. "3,5".
    #[arg(
        long,
        value_delimiter = ',',
        required_unless_present = "gaps",
        conflicts_with = "gaps"
    )]
    gens: Option<Vec<u64>>,
    /// Comma-separated gap list, e.g. "1,2,4,7".
    #[arg(long, value_delimiter = ',')]
    gaps: Option<Vec<u64>>,
    /// Require the genus-4 classification (error for other genera).
    #[arg(long)]
    classify: bool,
}

#[derive(Subcommand)]
enum MonodromyCmd {
    /// Verify every braid and commutation relation in the representation.
    CheckRelations { diagram: String },
    /// Image matrix of a word.
    Image {
        diagram: String,
        /// Whitespace-separated signed letters, e.g. "1 2 1".
        #[arg(long)]
        word: String,
    },
    /// Image of the Garside element and its multiplicative order.
    DeltaImage {
        diagram: String,
        /// Order-scan ceiling (default 10000).
        #[arg(long)]
        order_bound: Option<u64>,
    },
    /// Breadth-first probe for homologically trivial non-trivial words.
    KernelSearch {
        diagram: String,
        /// Maximum word length to enumerate.
        #[arg(long = "max-len")]
        max_len: u32,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget_seconds: Option<u64>,
        /// Unique-state budget; overrides STRATA_SEARCH_BUDGET.
        #[arg(long)]
        budget_states: Option<u64>,
    },
}

/// Parses argv, runs the command, prints the JSON envelope, and maps the
/// outcome to an exit code: 0 success, 1 domain error or failed
/// verification, 2 usage error.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(2));
        }
    };
    let pretty = cli.pretty;
    let started = Instant::now();
    let (payload, code) = match execute(cli.command) {
        Ok(Outcome::Success(result)) => (
            json!({
                "schema_version": 1,
                "command": echo,
                "result": result,
                "timing_ms": elapsed_ms(started),
            }),
            ExitCode::SUCCESS,
        ),
        Ok(Outcome::Failure(result)) => (
            json!({
                "schema_version": 1,
                "command": echo,
                "result": result,
                "timing_ms": elapsed_ms(started),
            }),
            ExitCode::from(1),
        ),
        Err(err) => (
            json!({
                "schema_version": 1,
                "command": echo,
                "error": {"kind": error_kind(&err), "message": err.to_string()},
                "timing_ms": elapsed_ms(started),
            }),
            ExitCode::from(1),
        ),
    };
    let rendered = if pretty {
        serde_json::to_string_pretty(&payload)
    } else {
        serde_json::to_string(&payload)
    }
    .expect("JSON value serializes");
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{rendered}") {
        // A closed pipe (e.g. `| head`) is not an error worth reporting.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return code;
        }
        eprintln!("error writing report: {e}");
        return ExitCode::from(1);
    }
    code
}

fn elapsed_ms(started: Instant) -> f64 {
    started.elapsed().as_secs_f64() * 1e3
}

enum Outcome {
    Success(Value),
    /// Well-formed run whose verdict is negative (failed verification).
    Failure(Value),
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::InvalidDiagram(_) => "invalid_diagram",
        Error::Parse { .. } => "parse",
        Error::LetterOutOfRange { .. } => "letter_out_of_range",
        Error::DiagramMismatch(_) => "diagram_mismatch",
        Error::InvalidSemigroup(_) => "invalid_semigroup",
        Error::NotASemigroup { .. } => "not_a_semigroup",
        Error::GenusMismatch(_) => "genus_mismatch",
        Error::InvalidGerm(_) => "invalid_germ",
        Error::NotIsolated { .. } => "not_isolated",
        Error::ParameterLength { .. } => "parameter_length",
        Error::InvalidOrientation(_) => "invalid_orientation",
        Error::InvalidInput(_) => "invalid_input",
        Error::Overflow(_) => "overflow",
        Error::DepthBound { .. } => "depth_bound",
        Error::Internal(_) => "internal",
    }
}

fn env_u64(name: &str) -> Result<Option<u64>> {
    match std::env::var(name) {
        Ok(text) => text.trim().parse::<u64>().map(Some).map_err(|_| {
            Error::InvalidInput(format!("{name} must be a positive integer, got `{text}`"))
        }),
        Err(_) => Ok(None),
    }
}

fn truncation_bound(flag: Option<u32>) -> Result<u32> {
    if let Some(b) = flag {
        return Ok(b);
    }
    Ok(env_u64("STRATA_TRUNCATION_BOUND")?
        .map(|v| u32::try_from(v).unwrap_or(u32::MAX))
        .unwrap_or(milnor::DEFAULT_TRUNCATION_BOUND))
}

fn search_budget_states(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    Ok(env_u64("STRATA_SEARCH_BUDGET")?.unwrap_or(50_000))
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Dynkin {
            cmd: DynkinCmd::Info { diagram },
        } => dynkin_info(&diagram),
        Command::Artin { cmd } => artin(cmd),
        Command::Milnor { poly, bound } => milnor_cmd(&poly, bound),
        Command::Versal {
            poly,
            smooth,
            bound,
        } => versal_cmd(&poly, smooth, bound),
        Command::Semigroup(args) => semigroup_cmd(args),
        Command::Monodromy { cmd } => monodromy(cmd),
        Command::VerifyPaper { suite } => verify_paper(&suite),
    }
}

fn dynkin_info(text: &str) -> Result<Outcome> {
    let d = DynkinDiagram::parse(text)?;
    let rs = RootSystem::new(&d);
    let degrees = rs.invariant_degrees()?;
    let gcd = degrees.iter().fold(0usize, |a, &x| a.gcd(&x));
    let edges: Vec<[usize; 2]> = d.edges().map(|(a, b)| [a, b]).collect();
    Ok(Outcome::Success(json!({
        "name": d.name(),
        "family": d.family().to_string(),
        "rank": d.rank(),
        "vertices": d.vertices().collect::<Vec<_>>(),
        "edges": edges,
        "positive_roots": rs.positive_roots().len(),
        "coxeter_number": rs.coxeter_number(),
        "degrees": degrees,
        "gcd": gcd,
        "w0_is_minus_id": rs.longest_is_minus_identity(),
    })))
}

fn artin(cmd: ArtinCmd) -> Result<Outcome> {
    match cmd {
        ArtinCmd::Nf { diagram, word } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let g = Garside::new(&d);
            let w = ArtinWord::parse(&d, &word)?;
            let nf = g.normal_form(&w)?;
            Ok(Outcome::Success(json!({
                "delta_power": nf.delta_power(),
                "simples": g.factor_words(&nf),
            })))
        }
        ArtinCmd::Equal {
            diagram,
            left,
            right,
        } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let g = Garside::new(&d);
            let l = ArtinWord::parse(&d, &left)?;
            let r = ArtinWord::parse(&d, &right)?;
            Ok(Outcome::Success(json!({"equal": g.are_equal(&l, &r)?})))
        }
        ArtinCmd::InnEqual {
            diagram,
            left,
            right,
        } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let g = Garside::new(&d);
            let l = ArtinWord::parse(&d, &left)?;
            let r = ArtinWord::parse(&d, &right)?;
            let inn = g.inn_equal(&l, &r)?;
            Ok(Outcome::Success(json!({
                "equal": inn.equal(),
                "equal_mod_center": inn.equal_mod_center,
                "modulus": match inn.modulus {
                    CentralPower::Delta => "delta",
                    CentralPower::DeltaSquared => "delta_squared",
                },
                "witness": inn.witness,
            })))
        }
    }
}

fn monomial_text(m: (u32, u32)) -> String {
    BivariatePoly::monomial(m).to_string()
}

fn milnor_cmd(poly: &str, bound: Option<u32>) -> Result<Outcome> {
    let f = BivariatePoly::parse(poly)?;
    let data = milnor::milnor_with_bound(&f, truncation_bound(bound)?)?;
    let basis: Vec<String> = data.basis().iter().map(|&m| monomial_text(m)).collect();
    Ok(Outcome::Success(json!({
        "milnor_number": data.milnor_number(),
        "basis": basis,
    })))
}

fn parse_rational_vector(line: &str) -> Result<Vec<BigRational>> {
    line.split(',')
        .map(|part| {
            let token = part.trim();
            BigRational::from_str(token)
                .map_err(|_| Error::InvalidInput(format!("`{token}` is not a rational number")))
        })
        .collect()
}

fn versal_cmd(poly: &str, smooth: bool, bound: Option<u32>) -> Result<Outcome> {
    let f = BivariatePoly::parse(poly)?;
    let family = milnor::build_versal_with_bound(&f, truncation_bound(bound)?)?;
    let parameters: Vec<Value> = family
        .parameters()
        .iter()
        .map(|p| json!({"name": p.name, "monomial": monomial_text(p.monomial)}))
        .collect();
    let family_json = json!({
        "base": family.base().to_string(),
        "parameters": parameters,
    });
    if !smooth {
        return Ok(Outcome::Success(family_json));
    }
    let stdin = std::io::stdin();
    let mut fibers = Vec::new();
    for line in stdin.lock().lines() {
        let line = line.map_err(|e| Error::InvalidInput(format!("reading standard input: {e}")))?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let vector = parse_rational_vector(trimmed)?;
        let smooth = milnor::fiber_is_smooth(&family, &vector)?;
        fibers.push(json!({"parameters": trimmed, "smooth": smooth}));
    }
    Ok(Outcome::Success(
        json!({"family": family_json, "fibers": fibers}),
    ))
}

fn semigroup_cmd(args: SemigroupArgs) -> Result<Outcome> {
    let s: NumericalSemigroup = match (&args.gens, &args.gaps) {
        (Some(gens), None) => NumericalSemigroup::from_generators(gens)?,
        (None, Some(gaps)) => semigroup::gaps_to_semigroup(&GapSequence::new(gaps)?),
        _ => unreachable!("clap enforces exactly one input"),
    };
    let gs = s.gap_sequence();
    let spin = semigroup::spin_parity(&gs);
    let classification: Value = if gs.genus() == 4 {
        serde_json::to_value(semigroup::classify_genus4(&gs)?).expect("serializable label")
    } else if args.classify {
        return Err(Error::GenusMismatch(gs.genus()));
    } else {
        Value::Null
    };
    Ok(Outcome::Success(json!({
        "generators": s.generators(),
        "gaps": s.gaps(),
        "genus": s.genus(),
        "frobenius": s.frobenius(),
        "h0": spin.h0,
        "parity": serde_json::to_value(spin.parity).expect("serializable parity"),
        "classification": classification,
    })))
}

fn monodromy(cmd: MonodromyCmd) -> Result<Outcome> {
    match cmd {
        MonodromyCmd::CheckRelations { diagram } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let cfg = SymplecticConfig::new(&d);
            let checks = transvection::check_geometric_relations(&cfg);
            let all_pass = checks.iter().all(|c| c.pass);
            Ok(Outcome::Success(json!({
                "diagram": d.name(),
                "det": cfg.det(),
                "unimodular": cfg.is_unimodular(),
                "relations": serde_json::to_value(&checks).expect("serializable checks"),
                "all_pass": all_pass,
            })))
        }
        MonodromyCmd::Image { diagram, word } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let cfg = SymplecticConfig::new(&d);
            let w = ArtinWord::parse(&d, &word)?;
            let m = transvection::rep_word(&cfg, &w)?;
            Ok(Outcome::Success(json!({
                "matrix": m.rows(),
                "det": m.det(),
                "preserves_form": m.preserves_form(&cfg),
            })))
        }
        MonodromyCmd::DeltaImage {
            diagram,
            order_bound,
        } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let cfg = SymplecticConfig::new(&d);
            let image = transvection::delta_image_with_bound(
                &cfg,
                order_bound.unwrap_or(transvection::DEFAULT_ORDER_BOUND),
            )?;
            let order: Value = match image.order {
                Some(k) => json!(k),
                None => json!("infinite"),
            };
            Ok(Outcome::Success(json!({
                "matrix": image.matrix.rows(),
                "order": order,
            })))
        }
        MonodromyCmd::KernelSearch {
            diagram,
            max_len,
            budget_seconds,
            budget_states,
        } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let cfg = SymplecticConfig::new(&d);
            let budget = SearchBudget {
                max_states: Some(search_budget_states(budget_states)?),
                time_limit: budget_seconds.map(std::time::Duration::from_secs),
            };
            let search = transvection::kernel_search_with_budget(&cfg, max_len, &budget)?;
            let certificates: Vec<Vec<i64>> = search
                .certificates
                .iter()
                .map(|w| w.letters().to_vec())
                .collect();
            Ok(Outcome::Success(json!({
                "max_length": max_len,
                "complete": search.complete,
                "explored_depth": search.explored_depth,
                "visited_states": search.visited_states,
                "certificates": certificates,
            })))
        }
    }
}

fn verify_paper(suite: &str) -> Result<Outcome> {
    let config = SuiteConfig {
        search_budget: search_budget_states(None)?,
        truncation_bound: truncation_bound(None)?,
    };
    let suites = if suite == "all" {
        report::run_all(&config)
    } else {
        vec![report::run_suite(suite, &config)?]
    };
    let pass = suites.iter().all(|s| s.pass);
    let failing: Vec<String> = suites
        .iter()
        .flat_map(|s| {
            s.checks
                .iter()
                .filter(|c| !c.pass)
                .map(move |c| format!("{}/{}", s.name, c.name))
        })
        .collect();
    let payload = json!({
        "pass": pass,
        "failing": failing,
        "suites": serde_json::to_value(&suites).expect("serializable suites"),
    });
    Ok(if pass {
        Outcome::Success(payload)
    } else {
        Outcome::Failure(payload)
    })
}
