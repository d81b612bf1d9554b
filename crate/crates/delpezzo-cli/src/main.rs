//! Scenario runner and report emitter for the del Pezzo workbench.
//!
//! Subcommands: `run` (scenario files or the built-in paper-suite),
//! `list-checks`, `classify`, `singular-locus`, `project-check`. Reports
//! are deterministic: fixed seed, records sorted by check id, timings
//! excluded unless `--timings` is passed.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use delpezzo::algebra::rational::{parse_rat, Rat};
use delpezzo::classifier::{self, BinaryCubic, Equivalence};
use delpezzo::report::{CheckRecord, Report, Status};
use delpezzo::suite::{all_checks, check_table, CheckCtx};
use delpezzo::{actions, projections, sections, MultiPoly, Vars};

#[derive(Parser)]
#[command(
    name = "delpezzo",
    about = "Exact verification workbench for quintic del Pezzo varieties",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock timings (breaks byte-identical reports).
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run scenarios from a file, or the built-in paper-suite.
    Run {
        /// JSON scenario file (array of scenario objects). Without it the
        /// built-in "paper-suite" scenario is available.
        #[arg(long)]
        scenarios: Option<PathBuf>,
        /// Scenario name to run, or "all".
        #[arg(long, default_value = "all")]
        select: String,
        /// Worker threads for concurrent checks.
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        /// Seed for the deterministic samplers.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the check id → module/operation mapping table.
    ListChecks {
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Decide PGL2(Q)-equivalence of two cubics (or two X3 parameters).
    Classify {
        /// Univariate cubic over Q, e.g. "x^3-2" (roots at infinity when
        /// the degree drops).
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        /// First X3 parameter (nonzero rational, e.g. 2 or -3/7).
        #[arg(long, allow_hyphen_values = true)]
        beta1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta2: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Certify the singular scheme of X3(beta).
    SingularLocus {
        /// Nonzero rational beta.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify the projection/Sarkisov-link identities.
    ProjectCheck {
        /// Link level: all, g, z, w or trinodal.
        #[arg(long, default_value = "all")]
        level: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

#[derive(Deserialize, Clone, Default)]
struct Scenario {
    name: String,
    kind: String,
    #[serde(default)]
    select: Option<String>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    membership_cap: Option<u32>,
    #[serde(default)]
    tower_cap: Option<usize>,
    #[serde(default)]
    samples: Option<usize>,
    #[serde(default)]
    beta: Option<String>,
    #[serde(default)]
    beta1: Option<String>,
    #[serde(default)]
    beta2: Option<String>,
    #[serde(default)]
    f: Option<String>,
    #[serde(default)]
    g: Option<String>,
    #[serde(default)]
    action: Option<String>,
    #[serde(default)]
    level: Option<String>,
    /// Skew form as 10 upper-triangle rationals in the fixed index order
    /// (w12, w13, w14, w15, w23, w24, w25, w34, w35, w45).
    #[serde(default)]
    s: Option<Vec<String>>,
    #[serde(default)]
    s_prime: Option<Vec<String>>,
    /// A subspace of V as an echelon basis matrix (rows of 5 rationals).
    #[serde(default)]
    v3: Option<Vec<Vec<String>>>,
}

fn builtin_scenarios() -> Vec<Scenario> {
    vec![Scenario {
        name: "paper-suite".into(),
        kind: "verify-paper-suite".into(),
        ..Scenario::default()
    }]
}

fn parse_nonzero_rat(s: &str, what: &str) -> Result<Rat> {
    let q = parse_rat(s).map_err(|e| anyhow!("invalid {what} `{s}`: {e}"))?;
    if q == Rat::new(0.into(), 1.into()) {
        bail!("{what} must be nonzero");
    }
    Ok(q)
}

/// Schema validation before any computation runs.
fn validate_scenarios(scenarios: &[Scenario]) -> Result<()> {
    let mut names = BTreeSet::new();
    for s in scenarios {
        if !names.insert(s.name.clone()) {
            bail!("duplicate scenario name `{}`", s.name);
        }
        match s.kind.as_str() {
            "verify-paper-suite" => {}
            "singular-locus" => {
                let beta = s
                    .beta
                    .as_deref()
                    .ok_or_else(|| anyhow!("scenario `{}`: missing beta", s.name))?;
                parse_nonzero_rat(beta, "beta")
                    .with_context(|| format!("scenario `{}`", s.name))?;
            }
            "classify" => {
                let by_beta = s.beta1.is_some() && s.beta2.is_some();
                let by_cubic = s.f.is_some() && s.g.is_some();
                if !(by_beta || by_cubic) {
                    bail!("scenario `{}`: classify needs beta1/beta2 or f/g", s.name);
                }
                if let (Some(b1), Some(b2)) = (&s.beta1, &s.beta2) {
                    parse_nonzero_rat(b1, "beta1")?;
                    parse_nonzero_rat(b2, "beta2")?;
                }
                if let Some(f) = &s.f {
                    parse_cubic(f)?;
                }
                if let Some(g) = &s.g {
                    parse_cubic(g)?;
                }
            }
            "verify-action" => {
                let action = s
                    .action
                    .as_deref()
                    .ok_or_else(|| anyhow!("scenario `{}`: missing action", s.name))?;
                if !ACTION_NAMES.contains(&action) {
                    bail!(
                        "scenario `{}`: unknown action `{action}` (expected one of {ACTION_NAMES:?})",
                        s.name
                    );
                }
                if let Some(b) = &s.beta {
                    parse_nonzero_rat(b, "beta")?;
                }
                if let Some(form) = &s.s {
                    parse_skew_form(form)?;
                }
                if let Some(form) = &s.s_prime {
                    parse_skew_form(form)?;
                }
                if let Some(rows) = &s.v3 {
                    parse_subspace(rows)?;
                }
            }
            "project-check" => {
                let level = s.level.as_deref().unwrap_or("all");
                if !["all", "g", "z", "w", "trinodal"].contains(&level) {
                    bail!("scenario `{}`: unknown level `{level}`", s.name);
                }
            }
            other => bail!("scenario `{}`: unknown kind `{other}`", s.name),
        }
    }
    Ok(())
}

const ACTION_NAMES: [&str; 7] = [
    "rho6",
    "rho5",
    "rho4",
    "rho_bar5",
    "trinodal",
    "p2_toric",
    "p2_nontoric",
];

fn parse_cubic(text: &str) -> Result<BinaryCubic> {
    let vars = Vars::new(["x"]);
    let p =
        MultiPoly::parse(&vars, text).map_err(|e| anyhow!("invalid cubic `{text}`: {e}"))?;
    let up = delpezzo::algebra::factor::multipoly_to_upoly(&p, "x");
    BinaryCubic::from_univariate(&up).map_err(|e| anyhow!("invalid cubic `{text}`: {e}"))
}

/// Ten upper-triangle rationals in the fixed index order.
fn parse_skew_form(entries: &[String]) -> Result<delpezzo::grassmannian::SkewForm> {
    if entries.len() != 10 {
        bail!("skew form needs exactly 10 upper-triangle entries");
    }
    let upper: Vec<Rat> = entries
        .iter()
        .map(|t| parse_rat(t).map_err(|e| anyhow!("invalid skew entry `{t}`: {e}")))
        .collect::<Result<_>>()?;
    Ok(delpezzo::grassmannian::SkewForm::from_upper(&upper))
}

/// An echelon basis matrix: rows of 5 rationals each.
fn parse_subspace(rows: &[Vec<String>]) -> Result<delpezzo::grassmannian::Subspace> {
    let vecs: Vec<Vec<Rat>> = rows
        .iter()
        .map(|row| {
            if row.len() != 5 {
                bail!("subspace rows must have 5 entries");
            }
            row.iter()
                .map(|t| parse_rat(t).map_err(|e| anyhow!("invalid entry `{t}`: {e}")))
                .collect()
        })
        .collect::<Result<_>>()?;
    delpezzo::grassmannian::Subspace::new(vecs).map_err(|e| anyhow!("invalid subspace: {e}"))
}

fn record(
    check: &str,
    module: &str,
    anchor: &str,
    status: Status,
    detail: Value,
    ms: u128,
) -> CheckRecord {
    CheckRecord {
        check: check.to_string(),
        module: module.to_string(),
        anchor: anchor.to_string(),
        status,
        detail,
        wall_ms: ms,
    }
}

fn run_scenario(s: &Scenario, cli_seed: u64, workers: usize) -> Result<Report> {
    let ctx = CheckCtx {
        seed: s.seed.unwrap_or(cli_seed),
        membership_cap: s.membership_cap.unwrap_or(4),
        tower_cap: s.tower_cap.unwrap_or(36),
        samples: s.samples.unwrap_or(25),
    };
    match s.kind.as_str() {
        "verify-paper-suite" => {
            let filter = s.select.clone();
            let selected: Vec<_> = all_checks()
                .into_iter()
                .filter(|c| match &filter {
                    None => true,
                    Some(f) => f == "all" || c.id.starts_with(f.as_str()),
                })
                .collect();
            if selected.is_empty() {
                bail!("scenario `{}`: filter matches no checks", s.name);
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.max(1))
                .build()
                .context("building worker pool")?;
            use rayon::prelude::*;
            let records: Vec<CheckRecord> = pool.install(|| {
                selected
                    .par_iter()
                    .map(|c| {
                        let start = std::time::Instant::now();
                        let (status, detail) = (c.run)(&ctx);
                        record(
                            c.id,
                            c.module,
                            c.anchor,
                            status,
                            detail,
                            start.elapsed().as_millis(),
                        )
                    })
                    .collect()
            });
            Ok(Report::new(&s.name, records))
        }
        "singular-locus" => {
            let beta = parse_nonzero_rat(s.beta.as_deref().unwrap(), "beta")?;
            let start = std::time::Instant::now();
            let rep = sections::verify_singular_scheme_x3(&beta)
                .map_err(|e| anyhow!("singular-locus: {e}"))?;
            let status = if rep.pass { Status::Pass } else { Status::Fail };
            let detail = serde_json::to_value(&rep)?;
            Ok(Report::new(
                &s.name,
                vec![record(
                    "sections/singular_scheme",
                    "sections",
                    "Its singular locus Sing(X_3(beta)) is the closed sub-scheme",
                    status,
                    detail,
                    start.elapsed().as_millis(),
                )],
            ))
        }
        "classify" => {
            let start = std::time::Instant::now();
            let (f, g, label) = if let (Some(b1), Some(b2)) = (&s.beta1, &s.beta2) {
                let b1 = parse_nonzero_rat(b1, "beta1")?;
                let b2 = parse_nonzero_rat(b2, "beta2")?;
                (
                    classifier::cubic_from_beta(&b1).map_err(|e| anyhow!("{e}"))?,
                    classifier::cubic_from_beta(&b2).map_err(|e| anyhow!("{e}"))?,
                    format!("X3({b1}) vs X3({b2})"),
                )
            } else {
                (
                    parse_cubic(s.f.as_deref().unwrap())?,
                    parse_cubic(s.g.as_deref().unwrap())?,
                    "cubic pair".to_string(),
                )
            };
            let outcome = classifier::pgl2_equivalent(&f, &g).map_err(|e| anyhow!("{e}"))?;
            let detail = classification_json(&outcome);
            Ok(Report::new(
                &s.name,
                vec![record(
                    "classifier/pgl2_equivalent",
                    "classifier",
                    &format!("PGL2(k)-orbits of smooth 0-dimensional sub-schemes [{label}]"),
                    Status::Pass,
                    detail,
                    start.elapsed().as_millis(),
                )],
            ))
        }
        "verify-action" => run_action_scenario(s, &ctx),
        "project-check" => run_project_scenario(s),
        other => bail!("unknown scenario kind `{other}`"),
    }
}

fn classification_json(outcome: &Equivalence) -> Value {
    match outcome {
        Equivalence::Isomorphic(cert) => json!({
            "status": "isomorphic",
            "certificate": {"matrix": cert.matrix, "scale": cert.scale},
        }),
        Equivalence::Inequivalent(reason) => json!({
            "status": "inequivalent",
            "reason": serde_json::to_value(reason).unwrap_or(Value::Null),
        }),
    }
}

fn run_action_scenario(s: &Scenario, ctx: &CheckCtx) -> Result<Report> {
    let name = s.action.as_deref().unwrap();
    let beta = match &s.beta {
        Some(b) => Some(parse_nonzero_rat(b, "beta")?),
        None => None,
    };
    let mut records = Vec::new();
    let start = std::time::Instant::now();

    let (action, rep, variety): (
        actions::CoordAction,
        Option<actions::UnipotentRep>,
        Option<sections::Variety>,
    ) = match name {
        "rho6" => (
            actions::induce_on_coordinates(&actions::rho6()),
            Some(actions::rho6()),
            Some(sections::make_grassmannian()),
        ),
        "rho5" => {
            let z = sections::standard_z();
            let a = actions::restrict_action(
                &actions::induce_on_coordinates(&actions::rho5()),
                &z,
                "rho5|Z",
            )
            .map_err(|e| anyhow!("{e}"))?;
            (a, Some(actions::rho5()), Some(z.variety))
        }
        "rho4" => {
            let w = sections::standard_w();
            let a = actions::restrict_action(
                &actions::induce_on_coordinates(&actions::rho4()),
                &w,
                "rho4|W",
            )
            .map_err(|e| anyhow!("{e}"))?;
            (a, Some(actions::rho4()), Some(w.variety))
        }
        "rho_bar5" => (
            actions::induce_on_coordinates(&actions::rho_bar5()),
            Some(actions::rho_bar5()),
            None,
        ),
        "trinodal" => {
            let action = match &beta {
                Some(b) => actions::trinodal_action(b).map_err(|e| anyhow!("{e}"))?,
                None => actions::trinodal_action_symbolic(),
            };
            let variety = match &beta {
                Some(b) => sections::make_x3(b).map_err(|e| anyhow!("{e}"))?.variety,
                None => sections::make_x3_symbolic().variety,
            };
            (action, None, Some(variety))
        }
        "p2_toric" => (actions::p2_toric(), None, None),
        "p2_nontoric" => (actions::p2_nontoric(), None, None),
        other => bail!("unknown action `{other}`"),
    };

    let additive = actions::check_additive(&action);
    records.push(record(
        &format!("actions/additivity[{name}]"),
        "actions",
        "abelian unipotent algebraic k-group",
        if additive.is_ok() {
            Status::Pass
        } else {
            Status::Fail
        },
        match &additive {
            Ok(()) => json!({"ok": true}),
            Err(w) => json!({"coordinate": w.coordinate, "residual": w.residual}),
        },
        start.elapsed().as_millis(),
    ));
    if let Some(rep) = &rep {
        let faithful = actions::check_faithful(rep);
        records.push(record(
            &format!("actions/faithfulness[{name}]"),
            "actions",
            "faithful actions with a dense orbit",
            if faithful { Status::Pass } else { Status::Fail },
            json!({"parameters": rep.params.len()}),
            start.elapsed().as_millis(),
        ));
    }
    if let Some(variety) = &variety {
        if action.coords == variety.coords {
            let inv = actions::check_invariance(&action, variety, ctx.membership_cap)
                .map_err(|e| anyhow!("{e}"))?;
            records.push(record(
                &format!("actions/invariance[{name}]"),
                "actions",
                "admits a vector group structure",
                if inv.ok { Status::Pass } else { Status::Fail },
                serde_json::to_value(&inv)?,
                start.elapsed().as_millis(),
            ));
        }
    }

    // User-supplied geometry: skew forms and subspaces ride along in the
    // scenario and are checked against the rank/isotropy criteria.
    if let Some(entries) = &s.s {
        let form = parse_skew_form(entries)?;
        let (rank, kernel) = delpezzo::grassmannian::skew_rank_kernel(&form);
        records.push(record(
            "grassmannian/skew_rank_kernel[scenario]",
            "grassmannian",
            "Z is smooth if and only if s~ has rank 4",
            Status::Pass,
            json!({"rank": rank, "kernel_dim": kernel.dim()}),
            start.elapsed().as_millis(),
        ));
        if let Some(prime_entries) = &s.s_prime {
            let prime = parse_skew_form(prime_entries)?;
            let pencil = delpezzo::grassmannian::pencil_all_rank4(&form, &prime);
            records.push(record(
                "grassmannian/pencil_all_rank4[scenario]",
                "grassmannian",
                "whose non-zero elements all have rank 4",
                match &pencil {
                    Ok(true) => Status::Pass,
                    _ => Status::Fail,
                },
                json!({"all_rank4": format!("{pencil:?}")}),
                start.elapsed().as_millis(),
            ));
        }
        if let Some(rows) = &s.v3 {
            let v3 = parse_subspace(rows)?;
            let isotropic = delpezzo::grassmannian::plane22_in_section(&v3, &form)
                .map_err(|e| anyhow!("{e}"))?;
            records.push(record(
                "grassmannian/plane22_in_section[scenario]",
                "grassmannian",
                "if and only if V3 is s-isotropic",
                if isotropic { Status::Pass } else { Status::Fail },
                json!({"isotropic": isotropic}),
                start.elapsed().as_millis(),
            ));
        }
    }
    Ok(Report::new(&s.name, records))
}

fn run_project_scenario(s: &Scenario) -> Result<Report> {
    let level = s.level.as_deref().unwrap_or("all");
    let mut records = Vec::new();
    let start = std::time::Instant::now();
    let levels = projections::link_level_subschemes();

    let mut push_inverse = |name: &str,
                            variety: sections::Variety,
                            kept: Vec<&str>,
                            sub: &sections::Variety|
     -> Result<()> {
        let pi = projections::RationalMap::coordinate_projection(
            &format!("pi|{name}"),
            &variety,
            &kept,
        );
        let cert =
            projections::verify_inverse(&variety, &pi, sub).map_err(|e| anyhow!("{e}"))?;
        records.push(record(
            &format!("projections/inverse[{name}]"),
            "projections",
            "The birational inverse Phi_i of pi_Xi,i",
            if cert.pass { Status::Pass } else { Status::Fail },
            serde_json::to_value(&cert)?,
            start.elapsed().as_millis(),
        ));
        Ok(())
    };

    match level {
        "g" => push_inverse(
            "G",
            sections::make_grassmannian(),
            vec!["w12", "w13", "w14", "w15", "w23", "w24", "w25"],
            &levels[0],
        )?,
        "z" => push_inverse(
            "Z",
            sections::standard_z().variety,
            vec!["w12", "w13", "w14", "w15", "w23", "w25"],
            &levels[1],
        )?,
        "w" => push_inverse(
            "W",
            sections::standard_w().variety,
            vec!["w12", "w13", "w14", "w15", "w23"],
            &levels[2],
        )?,
        "trinodal" => {
            let tp = projections::trinodal_projection_symbolic();
            let x3 = sections::make_x3_symbolic().variety;
            let cert =
                projections::verify_inverse(&x3, &tp.map, &tp.s).map_err(|e| anyhow!("{e}"))?;
            records.push(record(
                "projections/inverse[X3]",
                "projections",
                "complete linear system of quadrics of P3 containing S_X3",
                if cert.pass { Status::Pass } else { Status::Fail },
                serde_json::to_value(&cert)?,
                start.elapsed().as_millis(),
            ));
        }
        "all" => {
            for check in all_checks()
                .into_iter()
                .filter(|c| c.module == "projections")
            {
                let ctx = CheckCtx::default();
                let t = std::time::Instant::now();
                let (status, detail) = (check.run)(&ctx);
                records.push(record(
                    check.id,
                    check.module,
                    check.anchor,
                    status,
                    detail,
                    t.elapsed().as_millis(),
                ));
            }
        }
        other => bail!("unknown level `{other}`"),
    }
    Ok(Report::new(&s.name, records))
}

fn emit(report: &Report, output: &OutputArgs) -> Result<()> {
    let text = match output.format {
        Format::Json => serde_json::to_string_pretty(&report.to_json(output.timings))? + "\n",
        Format::Md => report.to_markdown(output.timings),
    };
    match &output.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {path:?}"))?;
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            scenarios,
            select,
            workers,
            seed,
            output,
        } => {
            if select.trim().is_empty() {
                bail!("empty --select: name a scenario or pass `all`");
            }
            let list: Vec<Scenario> = match &scenarios {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading {path:?}"))?;
                    serde_json::from_str(&text)
                        .map_err(|e| anyhow!("parse error in {path:?}: {e}"))?
                }
                None => builtin_scenarios(),
            };
            validate_scenarios(&list)?;
            let chosen: Vec<&Scenario> = if select == "all" {
                list.iter().collect()
            } else {
                let found: Vec<&Scenario> = list.iter().filter(|s| s.name == select).collect();
                if found.is_empty() {
                    bail!(
                        "unknown scenario `{select}` (available: {})",
                        list.iter()
                            .map(|s| s.name.as_str())
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
                found
            };
            let mut all_pass = true;
            for s in chosen {
                let report = run_scenario(s, seed, workers)?;
                all_pass &= report.overall() == Status::Pass;
                emit(&report, &output)?;
            }
            Ok(all_pass)
        }
        Command::ListChecks { format } => {
            let mut text = String::new();
            match format {
                Format::Json => {
                    let rows: Vec<Value> = check_table()
                        .into_iter()
                        .map(|(id, module, op)| {
                            json!({"check": id, "module": module, "operation": op})
                        })
                        .collect();
                    text.push_str(&serde_json::to_string_pretty(&json!(rows))?);
                    text.push('\n');
                }
                Format::Md => {
                    text.push_str("| check | module | operation |\n|---|---|---|\n");
                    for (id, module, op) in check_table() {
                        text.push_str(&format!("| `{id}` | {module} | {op} |\n"));
                    }
                }
            }
            // Tolerate downstream consumers closing the pipe early.
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(true)
        }
        Command::Classify {
            f,
            g,
            beta1,
            beta2,
            output,
        } => {
            let outcome = match (f, g, beta1, beta2) {
                (Some(f), Some(g), None, None) => {
                    let f = parse_cubic(&f)?;
                    let g = parse_cubic(&g)?;
                    classifier::pgl2_equivalent(&f, &g).map_err(|e| anyhow!("{e}"))?
                }
                (None, None, Some(b1), Some(b2)) => {
                    let b1 = parse_nonzero_rat(&b1, "beta1")?;
                    let b2 = parse_nonzero_rat(&b2, "beta2")?;
                    classifier::classify_x3(&b1, &b2).map_err(|e| anyhow!("{e}"))?
                }
                _ => bail!("pass either --f/--g or --beta1/--beta2"),
            };
            let detail = classification_json(&outcome);
            match output.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&detail)?),
                Format::Md => println!("{detail}"),
            }
            Ok(true)
        }
        Command::SingularLocus { beta, output } => {
            let beta = parse_nonzero_rat(&beta, "beta")?;
            let rep = sections::verify_singular_scheme_x3(&beta).map_err(|e| anyhow!("{e}"))?;
            let ok = rep.pass;
            let report = Report::new(
                "singular-locus",
                vec![record(
                    "sections/singular_scheme",
                    "sections",
                    "Its singular locus Sing(X_3(beta)) is the closed sub-scheme",
                    if ok { Status::Pass } else { Status::Fail },
                    serde_json::to_value(&rep)?,
                    0,
                )],
            );
            emit(&report, &output)?;
            Ok(ok)
        }
        Command::ProjectCheck { level, output } => {
            let scenario = Scenario {
                name: "project-check".into(),
                kind: "project-check".into(),
                level: Some(level),
                ..Scenario::default()
            };
            let report = run_project_scenario(&scenario)?;
            let ok = report.overall() == Status::Pass;
            emit(&report, &output)?;
            Ok(ok)
        }
    }
}
