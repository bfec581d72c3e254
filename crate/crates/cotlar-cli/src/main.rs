//! Command-line front end: configuration ingestion, verification
//! campaigns, JSON reporting and DOT export.
//!
//! Exit codes: 0 = clean, 1 = violations or refutations found,
//! 2 = configuration error, 3 = word cap exceeded.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use cotlar::algebra::{ratio_report, residual_campaign};
use cotlar::building::{
    building_symbol, distance_parabolic_subgroup, finer_model, DeltaTable,
};
use cotlar::coxeter::{CanonicalElement, CoxeterSystem};
use cotlar::descriptor::{InputDescriptor, ParsedInput};
use cotlar::geometry::{classify, halfspace_side, nested_offenders};
use cotlar::gp::{GPElement, GraphProduct};
use cotlar::group::{
    commuting_generators, parabolic_subgroup, trivial_subgroup, Group, SubgroupPredicate,
};
use cotlar::scalar::parse_exact;
use cotlar::symbol::{mw_symbol, Symbol};
use cotlar::verify::verify_cotlar;
use cotlar::Error;

const SCHEMA_VERSION: &str = "1";
const ENV_MAX_WORD_LEN: &str = "COTLAR_MAX_WORD_LEN";

#[derive(Parser)]
#[command(
    name = "cotlar",
    about = "Verification workbench for wall symbols on Coxeter groups and buildings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum NumericMode {
    Exact,
    Float,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorBy {
    Symbol,
    Side,
    Class,
}

#[derive(Subcommand)]
enum Command {
    /// Check the nested condition of a generator row
    Nested {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        generator: String,
    },
    /// Brute-force scan of the pairwise symbol identity over a ball
    VerifyCotlar {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        generator: String,
        #[arg(long)]
        radius: usize,
        /// subgroup mode: parabolic | trivial | list:w1,w2,...
        #[arg(long, default_value = "parabolic")]
        g0: String,
        /// component values c0,c1,... for the multi-valued model
        /// (graph-product inputs only)
        #[arg(long)]
        values: Option<String>,
    },
    /// Exact operator-level defect over seeded test functions
    Residual {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        generator: String,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = 20)]
        samples: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value = "parabolic")]
        g0: String,
        #[arg(long, value_enum, default_value_t = NumericMode::Exact)]
        numeric: NumericMode,
    },
    /// Sampled norm ratios against the reference bound shape
    LpRatio {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        generator: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 200)]
        samples: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Check the chamber-system axioms over a materialized distance table
    Axioms {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// corrupt one table entry "i,j" first (negative control)
        #[arg(long)]
        corrupt: Option<String>,
    },
    /// Emit the six-class table of a ball
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        generator: String,
        #[arg(long, default_value_t = 4)]
        radius: usize,
    },
    /// Export the chamber-adjacency graph of a ball as DOT
    ExportDot {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        generator: String,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = ColorBy::Symbol)]
        color: ColorBy,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WordTooLong { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct Envelope {
    version: &'static str,
    command: String,
    config: Value,
    result: Value,
}

fn emit(command: &str, config: Value, result: Value, exit: u8) -> u8 {
    let envelope = Envelope {
        version: SCHEMA_VERSION,
        command: command.to_owned(),
        config,
        result,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&envelope).expect("reports serialize")
    );
    exit
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    };
    eprintln!("completed in {} ms", started.elapsed().as_millis());
    ExitCode::from(code)
}

fn load_input(path: &PathBuf) -> Result<(InputDescriptor, ParsedInput), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
    let descriptor = InputDescriptor::from_json(&text).map_err(|e| Failure::config(e.to_string()))?;
    let mut parsed = descriptor.build().map_err(Failure::from)?;
    if let Some(cap) = env_cap()? {
        parsed = match parsed {
            ParsedInput::Coxeter(sys) => ParsedInput::Coxeter(sys.with_max_word_len(cap)),
            ParsedInput::GraphProduct(gp) => ParsedInput::GraphProduct(gp.with_max_word_len(cap)),
        };
    }
    Ok((descriptor, parsed))
}

fn env_cap() -> Result<Option<usize>, Failure> {
    match std::env::var(ENV_MAX_WORD_LEN) {
        Ok(text) => text
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Failure::config(format!("invalid {ENV_MAX_WORD_LEN}={text}"))),
        Err(_) => Ok(None),
    }
}

fn config_echo(descriptor: &InputDescriptor, extra: Value) -> Value {
    let mut obj = json!({
        "input": serde_json::to_value(descriptor).expect("descriptor serializes"),
    });
    if let (Some(map), Value::Object(extra)) = (obj.as_object_mut(), extra) {
        for (k, v) in extra {
            map.insert(k, v);
        }
    }
    obj
}

/// Resolves a --g0 mode against a Coxeter system.
fn coxeter_subgroup(
    system: &CoxeterSystem,
    s: usize,
    mode: &str,
) -> Result<SubgroupPredicate<CanonicalElement>, Failure> {
    match mode {
        "parabolic" => Ok(parabolic_subgroup(
            system,
            commuting_generators(system, s),
        )),
        "trivial" => Ok(trivial_subgroup(system.identity())),
        other => {
            let list = other
                .strip_prefix("list:")
                .ok_or_else(|| Failure::config(format!("unknown --g0 mode {other:?}")))?;
            let mut members = std::collections::BTreeSet::new();
            for token in list.split(',').filter(|t| !t.is_empty()) {
                let word = system.parse_word(token).map_err(Failure::from)?;
                members.insert(system.reduce(&word).map_err(Failure::from)?);
            }
            Ok(SubgroupPredicate::new(
                format!("list of {} elements", members.len()),
                move |e: &CanonicalElement| members.contains(e),
            ))
        }
    }
}

fn gp_subgroup(
    gp: &GraphProduct,
    u: usize,
    mode: &str,
) -> Result<SubgroupPredicate<GPElement>, Failure> {
    match mode {
        "parabolic" => Ok(distance_parabolic_subgroup(gp, u)),
        "trivial" => Ok(trivial_subgroup(gp.gp_identity())),
        other => {
            let list = other
                .strip_prefix("list:")
                .ok_or_else(|| Failure::config(format!("unknown --g0 mode {other:?}")))?;
            let mut members = std::collections::BTreeSet::new();
            for token in list.split(',').filter(|t| !t.is_empty()) {
                members.insert(gp.parse_element(token).map_err(Failure::from)?);
            }
            Ok(SubgroupPredicate::new(
                format!("list of {} elements", members.len()),
                move |e: &GPElement| members.contains(e),
            ))
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Nested { config, generator } => {
            let (descriptor, parsed) = load_input(&config)?;
            let system = match &parsed {
                ParsedInput::Coxeter(sys) => sys.clone(),
                ParsedInput::GraphProduct(gp) => gp.type_system().clone(),
            };
            let s = system.index_of(&generator).map_err(Failure::from)?;
            let offenders = nested_offenders(&system, s);
            let nested = offenders.is_empty();
            let result = json!({
                "generator": generator,
                "nested": nested,
                "offenders": offenders
                    .iter()
                    .map(|(t, m)| json!([system.name(*t), m.to_string()]))
                    .collect::<Vec<_>>(),
            });
            let echo = config_echo(&descriptor, json!({ "generator": generator }));
            Ok(emit("nested", echo, result, u8::from(!nested)))
        }

        Command::VerifyCotlar {
            config,
            generator,
            radius,
            g0,
            values,
        } => {
            let (descriptor, parsed) = load_input(&config)?;
            let echo = config_echo(
                &descriptor,
                json!({
                    "generator": generator,
                    "radius": radius,
                    "g0": g0,
                    "values": values,
                }),
            );
            let (result, clean) = match &parsed {
                ParsedInput::Coxeter(system) => {
                    if values.is_some() {
                        return Err(Failure::config(
                            "--values requires a graph_product input",
                        ));
                    }
                    let s = system.index_of(&generator).map_err(Failure::from)?;
                    let symbol = mw_symbol(system, s);
                    let subgroup = coxeter_subgroup(system, s, &g0)?;
                    let report =
                        verify_cotlar(system, &symbol, &subgroup, radius).map_err(Failure::from)?;
                    (
                        render::cotlar_report(system, &report),
                        report.holds(),
                    )
                }
                ParsedInput::GraphProduct(gp) => {
                    let u = gp.index_of(&generator).map_err(Failure::from)?;
                    let subgroup = gp_subgroup(gp, u, &g0)?;
                    let symbol: Symbol<GPElement> = match &values {
                        None => building_symbol(gp, u).map_err(Failure::from)?,
                        Some(text) => {
                            let parsed_values = parse_values(text)?;
                            let model = finer_model(gp, u, parsed_values, radius)
                                .map_err(Failure::from)?;
                            model.ensure_constraint().map_err(Failure::from)?;
                            model.symbol().clone()
                        }
                    };
                    let report =
                        verify_cotlar(gp, &symbol, &subgroup, radius).map_err(Failure::from)?;
                    (render::cotlar_report(gp, &report), report.holds())
                }
            };
            Ok(emit("verify-cotlar", echo, result, u8::from(!clean)))
        }

        Command::Residual {
            config,
            generator,
            radius,
            samples,
            seed,
            g0,
            numeric,
        } => {
            if matches!(numeric, NumericMode::Float) {
                return Err(Failure::config(
                    "the defect identity is exact; float mode is reserved for lp-ratio sampling",
                ));
            }
            let (descriptor, parsed) = load_input(&config)?;
            let echo = config_echo(
                &descriptor,
                json!({
                    "generator": generator,
                    "radius": radius,
                    "samples": samples,
                    "seed": seed,
                    "g0": g0,
                    "numeric": "exact",
                }),
            );
            let (reports, all_zero) = match &parsed {
                ParsedInput::Coxeter(system) => {
                    let s = system.index_of(&generator).map_err(Failure::from)?;
                    let symbol = mw_symbol(system, s);
                    let subgroup = coxeter_subgroup(system, s, &g0)?;
                    run_residuals(system, &symbol, &subgroup, radius, samples, seed)?
                }
                ParsedInput::GraphProduct(gp) => {
                    let u = gp.index_of(&generator).map_err(Failure::from)?;
                    let symbol = building_symbol(gp, u).map_err(Failure::from)?;
                    let subgroup = gp_subgroup(gp, u, &g0)?;
                    run_residuals(gp, &symbol, &subgroup, radius, samples, seed)?
                }
            };
            let result = json!({
                "samples": samples,
                "all_residuals_zero": all_zero,
                "residuals": reports,
            });
            Ok(emit("residual", echo, result, u8::from(!all_zero)))
        }

        Command::LpRatio {
            config,
            generator,
            radius,
            k,
            samples,
            seed,
        } => {
            let (descriptor, parsed) = load_input(&config)?;
            let echo = config_echo(
                &descriptor,
                json!({
                    "generator": generator,
                    "radius": radius,
                    "k": k,
                    "samples": samples,
                    "seed": seed,
                    "numeric": "float",
                }),
            );
            if k == 0 {
                return Err(Failure::config("k must be positive"));
            }
            let report = match &parsed {
                ParsedInput::Coxeter(system) => {
                    let s = system.index_of(&generator).map_err(Failure::from)?;
                    ratio_report(system, &mw_symbol(system, s), k, radius, samples, seed)
                        .map_err(Failure::from)?
                }
                ParsedInput::GraphProduct(gp) => {
                    let u = gp.index_of(&generator).map_err(Failure::from)?;
                    let symbol = building_symbol(gp, u).map_err(Failure::from)?;
                    ratio_report(gp, &symbol, k, radius, samples, seed).map_err(Failure::from)?
                }
            };
            let result = serde_json::to_value(&report).expect("report serializes");
            Ok(emit("lp-ratio", echo, result, 0))
        }

        Command::Axioms {
            config,
            radius,
            corrupt,
        } => {
            let (descriptor, parsed) = load_input(&config)?;
            let echo = config_echo(
                &descriptor,
                json!({ "radius": radius, "corrupt": corrupt }),
            );
            let report = match &parsed {
                ParsedInput::Coxeter(system) => {
                    let mut table = DeltaTable::materialize(system, radius).map_err(Failure::from)?;
                    apply_corruption(&mut table, system, &corrupt)?;
                    table.check().map_err(Failure::from)?
                }
                ParsedInput::GraphProduct(gp) => {
                    let mut table = DeltaTable::materialize(gp, radius).map_err(Failure::from)?;
                    apply_corruption(&mut table, gp.type_system(), &corrupt)?;
                    table.check().map_err(Failure::from)?
                }
            };
            let passed = report.passed();
            let result = serde_json::to_value(&report).expect("report serializes");
            Ok(emit("axioms", echo, result, u8::from(!passed)))
        }

        Command::Classify {
            config,
            generator,
            radius,
        } => {
            let (descriptor, parsed) = load_input(&config)?;
            let system = match &parsed {
                ParsedInput::Coxeter(sys) => sys.clone(),
                ParsedInput::GraphProduct(gp) => gp.type_system().clone(),
            };
            let s = system.index_of(&generator).map_err(Failure::from)?;
            let mut table = Vec::new();
            for g in system.ball(radius).map_err(Failure::from)? {
                let class = classify(&system, s, &g).map_err(Failure::from)?;
                table.push(json!({
                    "element": system.format_element(&g),
                    "length": g.length(),
                    "class": class,
                    "side": halfspace_side(&system, s, &g),
                }));
            }
            let echo = config_echo(
                &descriptor,
                json!({ "generator": generator, "radius": radius }),
            );
            let result = json!({ "ball_size": table.len(), "table": table });
            Ok(emit("classify", echo, result, 0))
        }

        Command::ExportDot {
            config,
            generator,
            radius,
            color,
        } => {
            let (_, parsed) = load_input(&config)?;
            let dot = match &parsed {
                ParsedInput::Coxeter(system) => {
                    let s = system.index_of(&generator).map_err(Failure::from)?;
                    render::dot_graph(system, system, s, radius, color_tag(color))?
                }
                ParsedInput::GraphProduct(gp) => {
                    let u = gp.index_of(&generator).map_err(Failure::from)?;
                    render::dot_graph(gp, gp.type_system(), u, radius, color_tag(color))?
                }
            };
            println!("{dot}");
            Ok(0)
        }
    }
}

fn color_tag(color: ColorBy) -> render::ColorTag {
    match color {
        ColorBy::Symbol => render::ColorTag::Symbol,
        ColorBy::Side => render::ColorTag::Side,
        ColorBy::Class => render::ColorTag::Class,
    }
}

fn parse_values(text: &str) -> Result<Vec<cotlar::scalar::ExactComplex>, Failure> {
    text.split(',')
        .map(|t| {
            parse_exact(t).ok_or_else(|| Failure::config(format!("invalid complex value {t:?}")))
        })
        .collect()
}

fn run_residuals<G: Group>(
    group: &G,
    symbol: &Symbol<G::Elem>,
    subgroup: &SubgroupPredicate<G::Elem>,
    radius: usize,
    samples: u32,
    seed: u64,
) -> Result<(Vec<Value>, bool), Failure> {
    let campaign =
        residual_campaign(group, symbol, subgroup, radius, samples, seed).map_err(Failure::from)?;
    let mut reports = Vec::new();
    let mut all_zero = true;
    for (index, (support, report)) in campaign.iter().enumerate() {
        all_zero &= report.exact_zero;
        reports.push(json!({
            "sample": index,
            "support": support,
            "exact_zero": report.exact_zero,
            "residual": if report.exact_zero { "0 (exact)".to_owned() }
                        else { report.max_coefficient.clone().unwrap_or_default() },
        }));
    }
    Ok((reports, all_zero))
}

fn apply_corruption(
    table: &mut DeltaTable,
    type_system: &CoxeterSystem,
    corrupt: &Option<String>,
) -> Result<(), Failure> {
    let Some(spec) = corrupt else {
        return Ok(());
    };
    let (i, j) = spec
        .split_once(',')
        .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
        .ok_or_else(|| Failure::config(format!("--corrupt expects \"i,j\", got {spec:?}")))?;
    if i >= table.chamber_count() || j >= table.chamber_count() {
        return Err(Failure::config(format!(
            "--corrupt indices out of range (table has {} chambers)",
            table.chamber_count()
        )));
    }
    // a deterministic wrong value: a length-3 zigzag word of the type
    // system (falls back to a generator for rank 1)
    let wrong = if type_system.rank() >= 2 {
        type_system.reduce(&[0, 1, 0]).map_err(Failure::from)?
    } else {
        type_system.generator(0).map_err(Failure::from)?
    };
    table.corrupt_entry(i, j, wrong);
    Ok(())
}
