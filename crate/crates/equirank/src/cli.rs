//! Command-line front door: build groups and actions from spec strings or
//! files, run classification / rank / generating sets / verification, and
//! emit JSON or text reports.
//!
//! Exit codes: 0 success, 1 failed verification checks, 2 parse error,
//! 3 validation error, 4 budget refusal.

use std::fs;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::action::{ActionError, GAction};
use crate::equivariant::{classify_elementary_collapsing, GMap};
use crate::io::{
    self, analyze_report, gens_report, lower_bound_check, rank_json_report, to_json_string,
    ActionFile, CheckJson, LoadError,
};
use crate::oracle::{
    self, check_invariant_suite, collapsing_types, enumerate_aut, enumerate_end,
    generates_modulo_aut, min_generating_size, verify_lower_bound, OracleError,
};
use crate::rank::{generating_set_v, generating_set_w, rank_report, RankReport, TypedGenerator};

#[derive(Parser)]
#[command(
    name = "equirank",
    version,
    about = "Orbit/stabilizer classification and relative rank of equivariant endomorphism monoids"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an action: blocks, orbits, stabilizers, multiplicities
    Analyze(ActionArgs),
    /// Compute the rank report: relative rank, monoid orders, U-sets
    Rank(ActionArgs),
    /// Emit a generating set with collapsing-type annotations
    Gens(GensArgs),
    /// Run the brute-force verification suite against the formulas
    Verify(VerifyArgs),
    /// Build a shift action and write it as an action file
    Shift(ShiftArgs),
    /// Check, compose, or take kernels of map files
    #[command(subcommand)]
    Map(MapCommand),
}

#[derive(Args)]
struct ActionArgs {
    /// Group spec: cyclic:n | symmetric:k | file:path
    #[arg(long)]
    group: Option<String>,
    /// Action spec: shift:q | coset:ids | regular | union:a+b | file:path
    #[arg(long)]
    action: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
    /// Cap on enumerated/closed monoid size
    #[arg(long = "budget-enum", default_value_t = oracle::DEFAULT_ENUM_BUDGET)]
    budget_enum: usize,
    /// Cap on subset tests in the exhaustive minimality search
    #[arg(long = "budget-search", default_value_t = oracle::DEFAULT_SEARCH_BUDGET)]
    budget_search: u64,
}

#[derive(Args)]
struct GensArgs {
    #[command(flatten)]
    common: ActionArgs,
    /// Which generating set to emit
    #[arg(long, value_enum, ignore_case = true, default_value_t = GenSet::V)]
    set: GenSet,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: ActionArgs,
    /// Also run the exhaustive minimal-generating-set search
    #[arg(long = "exhaustive-min")]
    exhaustive_min: bool,
}

#[derive(Args)]
struct ShiftArgs {
    /// Group spec: cyclic:n | symmetric:k | file:path
    #[arg(long)]
    group: String,
    /// Alphabet size
    #[arg(long)]
    alphabet: usize,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum MapCommand {
    /// Check a map file for equivariance over an action
    Check {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        action: String,
        #[arg(long = "map")]
        map: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compose two map files (first applied last)
    Compose {
        /// Outer map file
        a: String,
        /// Inner map file
        b: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Print the kernel partition of a map file
    Kernel {
        #[arg(long = "map")]
        map: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GenSet {
    #[value(name = "V")]
    V,
    #[value(name = "W")]
    W,
}

enum Failure {
    Parse(String),
    Validation(String),
    Budget(String),
    ChecksFailed,
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Validation(_) => 3,
            Failure::Budget(_) => 4,
            Failure::ChecksFailed => 1,
        }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Parse(_) => Failure::Parse(e.to_string()),
            LoadError::Validation(_) => Failure::Validation(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } | OracleError::SearchBudgetExceeded { .. } => {
                Failure::Budget(e.to_string())
            }
            OracleError::NotGenerating => Failure::Validation(e.to_string()),
        }
    }
}

struct Output {
    stdout: String,
    out_path: Option<String>,
    exit: i32,
}

/// Parses argv and runs; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            match output.out_path {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &output.stdout) {
                        eprintln!("error: cannot write {path}: {e}");
                        return 3;
                    }
                }
                None => print!("{}", output.stdout),
            }
            output.exit
        }
        Err(failure) => {
            match &failure {
                Failure::Parse(m) | Failure::Validation(m) | Failure::Budget(m) => {
                    eprintln!("error: {m}");
                }
                Failure::ChecksFailed => eprintln!("error: verification checks failed"),
            }
            failure.code()
        }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Rank(args) => cmd_rank(args),
        Command::Gens(args) => cmd_gens(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Shift(args) => cmd_shift(args),
        Command::Map(cmd) => cmd_map(cmd),
    }
}

fn load_action(group: &Option<String>, action_spec: &str) -> Result<GAction, Failure> {
    match group {
        Some(gspec) => {
            let g = io::parse_group_spec(gspec)?;
            Ok(io::parse_action_spec(action_spec, &g)?)
        }
        None => {
            let path = action_spec.strip_prefix("file:").ok_or_else(|| {
                Failure::Parse(format!(
                    "--group is required unless the action is file-backed, got {action_spec:?}"
                ))
            })?;
            Ok(io::load_action_file(path)?)
        }
    }
}

fn cmd_analyze(args: ActionArgs) -> Result<Output, Failure> {
    let action = load_action(&args.group, &args.action)?;
    let classification = action.classify();
    let report = analyze_report(&action, &classification);
    let stdout = match args.format {
        Format::Json => to_json_string(&report) + "\n",
        Format::Text => {
            let mut s = format!(
                "group order {}, {} points, {} stabilizer classes\nalpha = {:?}\n",
                report.group_order,
                report.points,
                report.classes.len(),
                report.alpha
            );
            for (i, c) in report.classes.iter().enumerate() {
                s += &format!(
                    "class {i}: H = {:?} (order {}), N = {:?}, alpha = {}\n",
                    c.stabilizer, c.stabilizer_order, c.normalizer, c.alpha
                );
                s += &format!("  block: {:?}\n", c.block);
                for o in &c.orbits {
                    s += &format!("  orbit: {:?}\n", o);
                }
            }
            s
        }
    };
    Ok(Output {
        stdout,
        out_path: args.out,
        exit: 0,
    })
}

fn render_rank(report: &RankReport, format: Format) -> String {
    match format {
        Format::Json => to_json_string(&rank_json_report(report)) + "\n",
        Format::Text => {
            let mut s = format!(
                "relative rank = {}\nkappa = {}\naut order = {}\nend order = {}\n",
                report.relative_rank, report.kappa, report.aut_order, report.end_order
            );
            for (i, c) in report.classes.iter().enumerate() {
                let us: Vec<String> = c
                    .u_classes
                    .iter()
                    .map(|cl| cl.canonical().to_string())
                    .collect();
                s += &format!(
                    "class {i}: |H| = {}, alpha = {}, |U| = {}, U = {}\n",
                    c.stabilizer_order,
                    c.alpha,
                    c.u_size(),
                    us.join(" ")
                );
            }
            s
        }
    }
}

fn cmd_rank(args: ActionArgs) -> Result<Output, Failure> {
    let action = load_action(&args.group, &args.action)?;
    let classification = action.classify();
    let report = rank_report(&action, &classification);
    Ok(Output {
        stdout: render_rank(&report, args.format),
        out_path: args.out,
        exit: 0,
    })
}

fn cmd_gens(args: GensArgs) -> Result<Output, Failure> {
    let action = load_action(&args.common.group, &args.common.action)?;
    let classification = action.classify();
    let (name, gens) = match args.set {
        GenSet::V => ("V", generating_set_v(&action, &classification)),
        GenSet::W => {
            let typed: Vec<TypedGenerator> = generating_set_w(&action, &classification)
                .into_iter()
                .map(|map| {
                    let ty = classify_elementary_collapsing(&action, &classification, &map)
                        .expect("collapsings are equivariant")
                        .expect("collapsings are elementary");
                    TypedGenerator { map, ty }
                })
                .collect();
            ("W", typed)
        }
    };
    let report = gens_report(name, &gens);
    let stdout = match args.common.format {
        Format::Json => to_json_string(&report) + "\n",
        Format::Text => {
            let mut s = format!("set {} with {} maps\n", report.set, report.count);
            for m in &report.maps {
                s += &format!(
                    "{:?} type ({}, {:?})\n",
                    m.image, m.class_index, m.target_class
                );
            }
            s
        }
    };
    Ok(Output {
        stdout,
        out_path: args.common.out,
        exit: 0,
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<Output, Failure> {
    let common = args.common;
    let action = load_action(&common.group, &common.action)?;
    let classification = action.classify();
    let report = rank_report(&action, &classification);

    if report.end_order > BigUint::from(common.budget_enum) {
        // formulas stay available even when enumeration is refused
        let mut stdout = render_rank(&report, common.format);
        stdout += &format!(
            "enumeration refused: end order {} over budget {}\n",
            report.end_order, common.budget_enum
        );
        return Ok(Output {
            stdout,
            out_path: common.out,
            exit: 4,
        });
    }

    let mut extra: Vec<CheckJson> = Vec::new();

    let start = Instant::now();
    let end = enumerate_end(&action, common.budget_enum)?;
    extra.push(CheckJson {
        name: "end_count_matches_formula".into(),
        pass: BigUint::from(end.len()) == report.end_order,
        count: end.len() as u64,
        detail: format!("formula {}", report.end_order),
        elapsed_ms: start.elapsed().as_millis() as u64,
    });

    let start = Instant::now();
    let aut = enumerate_aut(&action, common.budget_enum)?;
    extra.push(CheckJson {
        name: "aut_count_matches_formula".into(),
        pass: BigUint::from(aut.len()) == report.aut_order,
        count: aut.len() as u64,
        detail: format!("formula {}", report.aut_order),
        elapsed_ms: start.elapsed().as_millis() as u64,
    });

    let v: Vec<GMap> = generating_set_v(&action, &classification)
        .into_iter()
        .map(|t| t.map)
        .collect();
    let w = generating_set_w(&action, &classification);

    let start = Instant::now();
    let v_generates = generates_modulo_aut(&action, &v, common.budget_enum)?;
    extra.push(CheckJson {
        name: "v_generates_modulo_aut".into(),
        pass: v_generates,
        count: v.len() as u64,
        detail: String::new(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    });

    let start = Instant::now();
    let w_generates = generates_modulo_aut(&action, &w, common.budget_enum)?;
    extra.push(CheckJson {
        name: "w_generates_modulo_aut".into(),
        pass: w_generates,
        count: w.len() as u64,
        detail: String::new(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    });

    let types = collapsing_types(&action, &classification);
    extra.push(CheckJson {
        name: "type_count_matches_relative_rank".into(),
        pass: types.len() == report.relative_rank,
        count: types.len() as u64,
        detail: format!("relative rank {}", report.relative_rank),
        elapsed_ms: 0,
    });

    if v_generates {
        let start = Instant::now();
        let lb = verify_lower_bound(&action, &v, common.budget_enum)?;
        extra.push(lower_bound_check(&lb, start.elapsed().as_millis() as u64));
    }

    if args.exhaustive_min {
        let start = Instant::now();
        let cap = report.relative_rank;
        let min = min_generating_size(&action, cap, common.budget_enum, common.budget_search)?;
        extra.push(CheckJson {
            name: "exhaustive_min_matches_formula".into(),
            pass: min == report.relative_rank,
            count: min as u64,
            detail: format!("formula {}", report.relative_rank),
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }

    let suite = check_invariant_suite(&action, common.budget_enum)?;
    let verify = io::verify_report(&suite, extra);
    let all_pass = verify.all_pass;

    let stdout = match common.format {
        Format::Json => to_json_string(&verify) + "\n",
        Format::Text => {
            let mut s = String::new();
            for c in &verify.checks {
                s += &format!(
                    "check {}: {} (count={}, elapsed={}ms){}\n",
                    c.name,
                    if c.pass { "PASS" } else { "FAIL" },
                    c.count,
                    c.elapsed_ms,
                    if c.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" [{}]", c.detail)
                    }
                );
            }
            s += if all_pass {
                "all checks passed\n"
            } else {
                "some checks FAILED\n"
            };
            s
        }
    };
    if all_pass {
        Ok(Output {
            stdout,
            out_path: common.out,
            exit: 0,
        })
    } else {
        // still emit the report before signalling failure
        match common.out {
            Some(path) => {
                fs::write(&path, &stdout)
                    .map_err(|e| Failure::Validation(format!("cannot write {path}: {e}")))?;
            }
            None => print!("{stdout}"),
        }
        Err(Failure::ChecksFailed)
    }
}

fn cmd_shift(args: ShiftArgs) -> Result<Output, Failure> {
    let group = io::parse_group_spec(&args.group)?;
    let action = GAction::shift(group, args.alphabet).map_err(|e| match e {
        ActionError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
        other => Failure::Validation(other.to_string()),
    })?;
    let file = ActionFile::from_action(&action, Some(&args.group));
    Ok(Output {
        stdout: to_json_string(&file) + "\n",
        out_path: args.out,
        exit: 0,
    })
}

fn cmd_map(cmd: MapCommand) -> Result<Output, Failure> {
    match cmd {
        MapCommand::Check {
            group,
            action,
            map,
            format,
        } => {
            let action = load_action(&group, &action)?;
            let map = io::load_map_file(&map)?;
            let equivariant = crate::equivariant::is_equivariant(&action, map.image())
                .map_err(|e| Failure::Validation(e.to_string()))?;
            let stdout = match format {
                Format::Json => format!("{{\"equivariant\": {equivariant}}}\n"),
                Format::Text => format!("equivariant: {equivariant}\n"),
            };
            Ok(Output {
                stdout,
                out_path: None,
                exit: 0,
            })
        }
        MapCommand::Compose { a, b, out } => {
            let fa = io::load_map_file(&a)?;
            let fb = io::load_map_file(&b)?;
            let composed = fa
                .compose(&fb)
                .map_err(|e| Failure::Validation(e.to_string()))?;
            let stdout = serde_json::to_string(&composed.image().to_vec())
                .expect("vector serializes")
                + "\n";
            Ok(Output {
                stdout,
                out_path: out,
                exit: 0,
            })
        }
        MapCommand::Kernel { map, format } => {
            let f = io::load_map_file(&map)?;
            let kernel = f.kernel();
            let stdout = match format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct KernelJson<'a> {
                        blocks: &'a [Vec<usize>],
                        pair_count: usize,
                    }
                    to_json_string(&KernelJson {
                        blocks: kernel.classes(),
                        pair_count: kernel.pair_count(),
                    }) + "\n"
                }
                Format::Text => {
                    let mut s = format!("pair count = {}\n", kernel.pair_count());
                    for b in kernel.classes() {
                        s += &format!("block: {:?}\n", b);
                    }
                    s
                }
            };
            Ok(Output {
                stdout,
                out_path: None,
                exit: 0,
            })
        }
    }
}
