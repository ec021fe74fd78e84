//! Command-line front end. Four subcommands cover the workflow:
//!
//! * `verify`: run check suites against an algebra and report pass/fail.
//! * `contract`: push an algebra through a contraction map and compare the
//!   limit against a target, item by item.
//! * `expand`: normal order and truncate a single expression.
//! * `act`: apply a realized operator to a lattice function.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails or a limit
//! diverges, 2 on usage or parse errors. Output is deterministic; wall
//! times are recorded per check group unless `--deterministic` is given.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::contraction::{ContractionError, ContractionMap};
use crate::hopf::rmatrix;
use crate::realization::{apply, realize, wave_residual, RealizationKind};
use crate::registry::{self, AlgebraBundle, CheckKind};
use crate::report::{ReportItem, RunConfig, Status, VerificationReport};
use crate::specdsl;

#[derive(Parser)]
#[command(
    name = "qalg",
    version,
    about = "Exact verification of deformed conformal algebras, their Hopf \
             structure, R-matrix, discrete wave-equation symmetries and \
             contraction limits",
    after_help = "Exit codes: 0 all checks pass; 1 a check fails or a limit \
                  diverges; 2 usage or parse errors."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run check suites against an algebra and report the results
    Verify(VerifyArgs),
    /// Contract an algebra and compare the limit against a target
    Contract(ContractArgs),
    /// Normal order and truncate an expression inside an algebra
    Expand(ExpandArgs),
    /// Apply a realized phase-space operator to a function of x and t
    Act(ActArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Built-in algebra name (so22, uso22, uiso21, usl2, uso22-swapped)
    /// or path to a .qalg file
    #[arg(long, default_value = "uso22")]
    algebra: String,
    /// Truncation order N; identities are certified mod tau^(N+1)
    #[arg(long, env = "QALG_ORDER", default_value_t = crate::DEFAULT_ORDER)]
    order: u32,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Suppress wall-time fields so identical runs are byte-identical
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated subset of jacobi, hopf, rmatrix, realization,
    /// symmetry, subalgebras; `all` selects every group the algebra
    /// supports. The quantum Yang-Baxter cube check always runs at order
    /// min(N, 4); everything else runs at N.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Worker threads for independent check groups
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    /// The algebra's own contraction section (built-in for uso22)
    Rescale,
    /// No rescaling at all; the contraction reproduces the source
    Identity,
}

#[derive(Args)]
struct ContractArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Algebra the limit should equal (defaults to uiso21 for uso22, and
    /// to the source itself under --map identity)
    #[arg(long)]
    target: Option<String>,
    /// Which generator rescaling to apply
    #[arg(long, value_enum, default_value_t = MapKind::Rescale)]
    map: MapKind,
    /// Keep tau fixed instead of absorbing one power of the contraction
    /// parameter into it (demonstrates why the rescaling is necessary)
    #[arg(long)]
    no_param_rescale: bool,
}

#[derive(Args)]
struct ExpandArgs {
    /// Expression in the algebra's generators, tau, exp() and S(...)
    /// (antipode of the whole expression), e.g. "(exp(tau*H) - 1)/tau"
    expr: String,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ActArgs {
    /// Operator: casimir-classical, casimir-deformed, or a realized
    /// generator such as K-deformed, C1-classical
    action: String,
    /// Polynomial in x and t (tau allowed as a scalar), e.g. "x^2 + t^2"
    function: String,
    #[command(flatten)]
    common: CommonArgs,
}

/// Parse argv and dispatch. This is the whole binary behind `fn main`.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Contract(args) => cmd_contract(args),
        Command::Expand(args) => cmd_expand(args),
        Command::Act(args) => cmd_act(args),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_or_exit(name: &str, order: u32) -> Result<AlgebraBundle, ExitCode> {
    match registry::resolve(name, order) {
        Ok(bundle) => {
            for w in &bundle.warnings {
                eprintln!("note: {w}");
            }
            Ok(bundle)
        }
        Err(e) => Err(usage_error(e)),
    }
}

fn emit(report: &VerificationReport, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let bundle = match resolve_or_exit(&args.common.algebra, args.common.order) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let applicable = bundle.applicable_checks();
    let checks: Vec<CheckKind> = if args.checks.trim() == "all" {
        applicable.clone()
    } else {
        let mut out = Vec::new();
        for token in args.checks.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let Some(kind) = CheckKind::from_id(token) else {
                return usage_error(format!(
                    "unknown check `{token}`; expected a comma-separated subset of \
                     jacobi, hopf, rmatrix, realization, symmetry, subalgebras, or `all`"
                ));
            };
            if !applicable.contains(&kind) {
                return usage_error(format!(
                    "check `{token}` does not apply to algebra `{}`",
                    bundle.name
                ));
            }
            out.push(kind);
        }
        if out.is_empty() {
            return usage_error("no checks selected");
        }
        out
    };

    // The Yang-Baxter cube check gets its own, lower order: the triple
    // tensor product is an order of magnitude more expensive than every
    // other check.
    let qybe_hopf = if checks.contains(&CheckKind::RMatrix)
        && bundle.hopf.is_some()
        && args.common.order > 4
    {
        match resolve_or_exit(&args.common.algebra, 4) {
            Ok(b) => b.hopf,
            Err(code) => return code,
        }
    } else {
        None
    };

    let config = RunConfig { jobs: args.jobs.max(1), timing: !args.common.deterministic, qybe_hopf };
    let report = crate::report::run_verification(&bundle, &checks, &config);
    emit(&report, args.common.format)
}

fn cmd_contract(args: ContractArgs) -> ExitCode {
    let source = match resolve_or_exit(&args.common.algebra, args.common.order) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let map = match args.map {
        MapKind::Rescale => match &source.contraction {
            Some(m) => m.clone(),
            None => {
                return usage_error(format!(
                    "algebra `{}` has no contraction map; pass --map identity or \
                     load a .qalg file with a contraction section",
                    source.name
                ))
            }
        },
        MapKind::Identity => ContractionMap::new(vec![0; source.spec.ngens()], 0),
    };
    let map = if args.no_param_rescale { map.without_param_rescale() } else { map };

    let target_name = match (&args.target, args.map) {
        (Some(t), _) => t.clone(),
        (None, MapKind::Identity) => args.common.algebra.clone(),
        (None, MapKind::Rescale) if source.name == "uso22" => "uiso21".to_string(),
        (None, MapKind::Rescale) => {
            return usage_error(format!(
                "no default contraction target for `{}`; pass --target",
                source.name
            ))
        }
    };
    let target = match resolve_or_exit(&target_name, args.common.order) {
        Ok(b) => b,
        Err(code) => return code,
    };
    if source.spec.generator_names() != target.spec.generator_names() {
        return usage_error(format!(
            "source and target generator sets differ: {:?} vs {:?}",
            source.spec.generator_names(),
            target.spec.generator_names()
        ));
    }

    let names = source.spec.generator_names();
    let mut items = Vec::new();
    for (lo, hi) in source.spec.pairs() {
        let subject = format!("[{}, {}]", names[hi], names[lo]);
        let item = match map.contract_bracket(&source.spec, hi, lo) {
            Ok(el) => {
                let want = target.spec.bracket(hi, lo);
                let ok = el == *want;
                let witness = if ok {
                    String::new()
                } else {
                    format!("limit {} != target {}", el.display(names), want.display(names))
                };
                ReportItem::new("contract.bracket", subject, ok, witness)
            }
            Err(e) => diverged_item("contract.bracket", subject, e),
        };
        items.push(item);
    }

    if let (Some(hs), Some(ht)) = (&source.hopf, &target.hopf) {
        for rank in 0..hs.ngens() {
            let subject = format!("Delta({})", names[rank]);
            let item = match map.contract_tensor(
                hs.coproduct_of_rank(rank),
                map.scale_of(rank),
                &subject,
            ) {
                Ok(t) => {
                    let want = ht.coproduct_of_rank(rank);
                    let ok = t == *want;
                    let witness = if ok {
                        String::new()
                    } else {
                        format!("limit {} != target {}", t.display(names), want.display(names))
                    };
                    ReportItem::new("contract.coproduct", subject, ok, witness)
                }
                Err(e) => diverged_item("contract.coproduct", subject, e),
            };
            items.push(item);
        }
        if hs.rmatrix_pair().is_some() && ht.rmatrix_pair().is_some() {
            let item = match (rmatrix(hs), rmatrix(ht)) {
                (Ok(r_src), Ok(r_tgt)) => match map.contract_tensor(&r_src, 0, "R") {
                    Ok(r_lim) => {
                        let ok = r_lim == r_tgt;
                        let witness = if ok {
                            String::new()
                        } else {
                            format!(
                                "limit {} != target {}",
                                r_lim.display(names),
                                r_tgt.display(names)
                            )
                        };
                        ReportItem::new("contract.rmatrix", "R", ok, witness)
                    }
                    Err(e) => diverged_item("contract.rmatrix", "R".to_string(), e),
                },
                (Err(e), _) | (_, Err(e)) => {
                    ReportItem::new("contract.rmatrix", "R", false, e.to_string())
                }
            };
            items.push(item);
        }
    }

    let label = format!("{} -> {}", source.name, target.name);
    let report = VerificationReport::assemble(&label, args.common.order, items);
    emit(&report, args.common.format)
}

fn diverged_item(check: &str, subject: String, err: ContractionError) -> ReportItem {
    let mut item = ReportItem::new(check, subject, false, err.to_string());
    if matches!(err, ContractionError::Diverges { .. }) {
        item.status = Status::Diverged;
    }
    item
}

/// `S(...)` wrapping the whole expression means "antipode of the inside".
fn antipode_wrapped(s: &str) -> Option<&str> {
    let inner = s.trim().strip_prefix("S(")?.strip_suffix(')')?;
    let mut depth = 0i64;
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    (depth == 0).then_some(inner)
}

fn cmd_expand(args: ExpandArgs) -> ExitCode {
    let bundle = match resolve_or_exit(&args.common.algebra, args.common.order) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let (body, wrapped) = match antipode_wrapped(&args.expr) {
        Some(inner) => (inner, true),
        None => (args.expr.as_str(), false),
    };
    let ast = match specdsl::parse_expression(body) {
        Ok(ast) => ast,
        Err(e) => return usage_error(e),
    };
    let mut el = match specdsl::eval_expression(&bundle.spec, &ast) {
        Ok(el) => el,
        Err(e) => return usage_error(e),
    };
    if wrapped {
        let Some(hs) = bundle.hopf.as_ref() else {
            return usage_error(format!(
                "S(...) needs an antipode, but `{}` carries no coproduct table",
                bundle.name
            ));
        };
        el = match hs.antipode(&el) {
            Ok(el) => el,
            Err(e) => return usage_error(e),
        };
    }
    let names = bundle.spec.generator_names();
    let rendered = format!("{} + O(tau^{})", el.display(names), el.order() + 1);
    match args.common.format {
        Format::Text => println!("{rendered}"),
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "algebra": bundle.name,
                "truncation_order": args.common.order,
                "expr": args.expr,
                "result": el.display(names),
                "exact_mod_tau_power": el.order() + 1,
            })
        ),
    }
    ExitCode::SUCCESS
}

fn cmd_act(args: ActArgs) -> ExitCode {
    let Some((head, kind_name)) = args.action.rsplit_once('-') else {
        return usage_error(format!(
            "operator `{}` should look like casimir-deformed or K-classical",
            args.action
        ));
    };
    let kind = match kind_name {
        "classical" => RealizationKind::Classical,
        "deformed" => RealizationKind::Deformed,
        other => {
            return usage_error(format!(
                "unknown realization `{other}`; expected classical or deformed"
            ))
        }
    };
    let order = args.common.order;
    let ast = match specdsl::parse_expression(&args.function) {
        Ok(ast) => ast,
        Err(e) => return usage_error(e),
    };
    let f = match specdsl::eval_polynomial(&ast, order) {
        Ok(f) => f,
        Err(e) => return usage_error(e),
    };

    let (image, solution) = if head == "casimir" {
        match wave_residual(kind, &f) {
            Ok(residual) => {
                let is_solution = residual.is_zero();
                (residual, Some(is_solution))
            }
            Err(e) => return usage_error(e),
        }
    } else {
        let Some(op) = realize(kind, head, order) else {
            return usage_error(format!(
                "no realized operator `{head}`; expected casimir or one of D, H, P, K, C1, C2"
            ));
        };
        match apply(&op, &f) {
            Ok(image) => (image, None),
            Err(e) => return usage_error(e),
        }
    };

    match args.common.format {
        Format::Text => {
            println!("{}", image.display());
            if let Some(is_solution) = solution {
                println!("{}", if is_solution { "solution" } else { "not a solution" });
            }
        }
        Format::Json => {
            let mut obj = serde_json::json!({
                "action": args.action,
                "function": args.function,
                "order": order,
                "image": image.display(),
            });
            if let Some(is_solution) = solution {
                obj["solution"] = serde_json::Value::Bool(is_solution);
            }
            println!("{obj}");
        }
    }
    ExitCode::SUCCESS
}
