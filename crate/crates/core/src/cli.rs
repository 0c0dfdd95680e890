//! Command-line interface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::degrees::{dimension_audit, is_good_parabolic, levi_degrees, Partition};
use crate::error::Error;
use crate::hitchin::{
    coordinate_bounds, trace_power_check, verify_inclusion, witness_search, VerifyConfig,
    WitnessConfig, DEFAULT_COEFF_BOUND, SCHEMA_VERSION,
};
use crate::lie::{build_algebra, LieType};
use crate::parabolic::{build_parabolic, G2Parabolic, ParabolicDescription, ParabolicSpec};
use crate::plot::newton_svg;
use crate::type_d::{
    codim_report, component_analysis, polygon_m_sequence, richardson_jordan_type, NewtonPolygon,
};

#[derive(Debug, Parser)]
#[command(
    name = "parahitchin",
    version,
    about = "Local parabolic Hitchin maps in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degrees, Levi degrees and predicted exponents of a parabolic.
    Describe(RunArgs),
    /// Sample Higgs germs and check the predicted valuation bounds.
    Verify(RunArgs),
    /// Find germs attaining the predicted valuations.
    Witness(RunArgs),
    /// Look for a germ with a double pole in tr(A^4) for the (3,1) parabolic of sl_4.
    TraceCheck(RunArgs),
    /// Newton polygon and relevant pairs of a type-D parabolic.
    Newton(RunArgs),
    /// Components and singularity of the Newton-polygon space.
    Components(RunArgs),
    /// Codimension identities of a type-D parabolic.
    Codim(RunArgs),
    /// Dimension count of the global Hitchin base.
    AuditDim(RunArgs),
}

impl Command {
    pub fn args(&self) -> &RunArgs {
        match self {
            Command::Describe(a)
            | Command::Verify(a)
            | Command::Witness(a)
            | Command::TraceCheck(a)
            | Command::Newton(a)
            | Command::Components(a)
            | Command::Codim(a)
            | Command::AuditDim(a) => a,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Debug, Default, Args)]
pub struct RunArgs {
    /// Lie type: A, B, C, D or G2.
    #[arg(long = "type")]
    pub lie_type: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Block sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub blocks: Option<Vec<usize>>,
    /// 1-based simple roots outside the Levi, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub marked_roots: Option<Vec<usize>>,
    /// G2 parabolic: borel, line or plane.
    #[arg(long)]
    pub parabolic: Option<String>,
    /// Jordan type for `newton` and `components` without a parabolic.
    #[arg(long, value_delimiter = ',')]
    pub delta: Option<Vec<usize>>,
    /// JSON file with any of the fields above; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Working precision N (coefficients known modulo t^N).
    #[arg(long)]
    pub precision: Option<usize>,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub coeff_bound: Option<i64>,
    /// Target valuations for `witness`, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub targets: Option<Vec<i64>>,
    #[arg(long)]
    pub genus: Option<usize>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Also write the Newton polygon picture to this file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long, env = "PARAHITCHIN_THREADS")]
    pub threads: Option<usize>,
}

/// Contents of a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "type")]
    pub lie_type: Option<String>,
    pub rank: Option<usize>,
    pub blocks: Option<Vec<usize>>,
    pub marked_roots: Option<Vec<usize>>,
    pub g2_parabolic: Option<String>,
    pub delta: Option<Vec<usize>>,
    pub precision: Option<usize>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub coeff_bound: Option<i64>,
    pub targets: Option<Vec<i64>>,
    pub genus: Option<usize>,
    pub format: Option<Format>,
}

/// A configuration problem, reported with exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    fn new(field: &str, message: impl Into<String>) -> ConfigError {
        ConfigError {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid `{}`: {}", self.field, self.message)
    }
}

/// Resolved configuration of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub lie_type: Option<LieType>,
    pub rank: Option<usize>,
    pub description: Option<ParabolicDescription>,
    pub delta: Option<Vec<usize>>,
    pub precision: Option<usize>,
    pub trials: u64,
    pub seed: Option<u64>,
    pub coeff_bound: i64,
    pub targets: Option<Vec<i64>>,
    pub genus: usize,
    pub format: Format,
}

impl RunConfig {
    pub fn resolve(args: &RunArgs) -> Result<RunConfig, ConfigError> {
        let file = match &args.config {
            None => FileConfig::default(),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| ConfigError::new("config", format!("{}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| ConfigError::new("config", e.to_string()))?
            }
        };
        let lie_type = args
            .lie_type
            .clone()
            .or(file.lie_type)
            .map(|s| {
                s.parse::<LieType>()
                    .map_err(|e| ConfigError::new("type", e.to_string()))
            })
            .transpose()?;
        let rank = args
            .rank
            .or(file.rank)
            .or((lie_type == Some(LieType::G2)).then_some(2));
        let blocks = args.blocks.clone().or(file.blocks);
        let marked = args.marked_roots.clone().or(file.marked_roots);
        let g2 = args.parabolic.clone().or(file.g2_parabolic);
        let given = [blocks.is_some(), marked.is_some(), g2.is_some()];
        if given.iter().filter(|b| **b).count() > 1 {
            return Err(ConfigError::new(
                "parabolic",
                "give only one of --blocks, --marked-roots and --parabolic",
            ));
        }
        let description = if let Some(b) = blocks {
            Some(ParabolicDescription::Blocks(b))
        } else if let Some(s) = marked {
            Some(ParabolicDescription::MarkedRoots(s))
        } else if let Some(name) = g2 {
            let p: G2Parabolic = name
                .parse()
                .map_err(|e: Error| ConfigError::new("parabolic", e.to_string()))?;
            Some(ParabolicDescription::G2(p))
        } else {
            None
        };
        let coeff_bound = args
            .coeff_bound
            .or(file.coeff_bound)
            .unwrap_or(DEFAULT_COEFF_BOUND);
        if coeff_bound < 0 {
            return Err(ConfigError::new("coeff_bound", "must be nonnegative"));
        }
        let precision = args.precision.or(file.precision);
        if precision == Some(0) {
            return Err(ConfigError::new("precision", "must be positive"));
        }
        Ok(RunConfig {
            lie_type,
            rank,
            description,
            delta: args.delta.clone().or(file.delta),
            precision,
            trials: args.trials.or(file.trials).unwrap_or(100),
            seed: args.seed.or(file.seed),
            coeff_bound,
            targets: args.targets.clone().or(file.targets),
            genus: args.genus.or(file.genus).unwrap_or(2),
            format: args.format.or(file.format).unwrap_or(Format::Json),
        })
    }

    pub fn parabolic(&self) -> Result<ParabolicSpec, ConfigError> {
        let ty = self
            .lie_type
            .ok_or_else(|| ConfigError::new("type", "missing"))?;
        let rank = self
            .rank
            .ok_or_else(|| ConfigError::new("rank", "missing"))?;
        let description = self.description.clone().ok_or_else(|| {
            ConfigError::new("parabolic", "give --blocks, --marked-roots or --parabolic")
        })?;
        let field = match &description {
            ParabolicDescription::Blocks(_) => "blocks",
            ParabolicDescription::MarkedRoots(_) => "marked_roots",
            ParabolicDescription::G2(_) => "parabolic",
        };
        let g = build_algebra(ty, rank).map_err(|e| ConfigError::new("rank", e.to_string()))?;
        build_parabolic(&g, description).map_err(|e| ConfigError::new(field, e.to_string()))
    }

    fn seed(&self) -> Result<u64, ConfigError> {
        self.seed
            .ok_or_else(|| ConfigError::new("seed", "required for reproducible sampling"))
    }
}

/// The result of one command: exit status and the rendered report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
    pub svg: Option<String>,
}

enum Failure {
    Config(ConfigError),
    Run(Error),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Failure {
        Failure::Config(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Run(e)
    }
}

/// Runs a parsed command and returns the rendered report.
pub fn execute(command: &Command) -> Outcome {
    let args = command.args();
    let result = RunConfig::resolve(args)
        .map_err(Failure::from)
        .and_then(|cfg| {
            let run = || dispatch(command, &cfg).map(|(ok, v, svg)| (ok, v, svg, cfg.format));
            match args.threads {
                Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Failure::Config(ConfigError::new("threads", e.to_string())))?
                    .install(run),
                Some(_) => Err(Failure::Config(ConfigError::new(
                    "threads",
                    "must be positive",
                ))),
                None => run(),
            }
        });
    match result {
        Ok((ok, value, svg, format)) => {
            let report = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&value).expect("serializable report") + "\n"
                }
                Format::Text => render_text(&value),
                Format::Svg => match &svg {
                    Some(s) => s.clone(),
                    None => {
                        return Outcome {
                            status: 2,
                            report: "error: invalid `format`: svg output needs `newton`\n".into(),
                            svg: None,
                        }
                    }
                },
            };
            Outcome {
                status: if ok { 0 } else { 1 },
                report,
                svg,
            }
        }
        Err(Failure::Config(e)) => Outcome {
            status: 2,
            report: format!("error: {e}\n"),
            svg: None,
        },
        Err(Failure::Run(e)) => Outcome {
            status: 1,
            report: format!("error: {e}\n"),
            svg: None,
        },
    }
}

type Dispatched = (bool, Value, Option<String>);

fn dispatch(command: &Command, cfg: &RunConfig) -> Result<Dispatched, Failure> {
    match command {
        Command::Describe(_) => describe(cfg),
        Command::Verify(_) => {
            let par = cfg.parabolic()?;
            let vc = VerifyConfig {
                trials: cfg.trials,
                precision: cfg.precision,
                seed: cfg.seed()?,
                coeff_bound: cfg.coeff_bound,
            };
            let r = verify_inclusion(&par, &vc)?;
            Ok((r.all_pass(), to_value(&r), None))
        }
        Command::Witness(_) => {
            let par = cfg.parabolic()?;
            let wc = WitnessConfig {
                budget: cfg.trials,
                seed: cfg.seed()?,
                coeff_bound: cfg.coeff_bound,
                precision: cfg.precision,
            };
            let r = witness_search(&par, cfg.targets.as_deref(), &wc).map_err(|e| match e {
                Error::Precondition(_) | Error::SizeMismatch { .. } if cfg.targets.is_some() => {
                    Failure::Config(ConfigError::new("targets", e.to_string()))
                }
                other => Failure::Run(other),
            })?;
            Ok((r.all_found(), to_value(&r), None))
        }
        Command::TraceCheck(_) => {
            let par = cfg.parabolic()?;
            let seed = cfg.seed.unwrap_or(0);
            let r = trace_power_check(&par, cfg.trials.max(1000), seed, cfg.coeff_bound)
                .map_err(|e| Failure::Config(ConfigError::new("parabolic", e.to_string())))?;
            Ok((r.found, to_value(&r), None))
        }
        Command::Newton(_) => newton(cfg),
        Command::Components(_) => {
            let (label, delta) = jordan_type(cfg)?;
            let r = component_analysis(&delta);
            let mut v = to_value(&r);
            v["schema_version"] = json!(SCHEMA_VERSION);
            v["parabolic"] = json!(label);
            Ok((true, v, None))
        }
        Command::Codim(_) => {
            let par = cfg.parabolic()?;
            if par.lie_type() != LieType::D {
                return Err(ConfigError::new("type", "codim needs type D").into());
            }
            let good = is_good_parabolic(&par);
            match codim_report(&par) {
                Ok(r) => {
                    let mut v = to_value(&r);
                    v["schema_version"] = json!(SCHEMA_VERSION);
                    v["parabolic"] = json!(par.description().to_string());
                    v["good"] = json!(good.good);
                    v["identities_hold"] = json!(true);
                    Ok((true, v, None))
                }
                Err(Error::Identity(msg)) => Ok((
                    false,
                    json!({
                        "schema_version": SCHEMA_VERSION,
                        "parabolic": par.description().to_string(),
                        "identities_hold": false,
                        "failure": msg,
                    }),
                    None,
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::AuditDim(_) => {
            let par = cfg.parabolic()?;
            let r = dimension_audit(&par, cfg.genus)
                .map_err(|e| Failure::Config(ConfigError::new("genus", e.to_string())))?;
            let mut v = to_value(&r);
            v["schema_version"] = json!(SCHEMA_VERSION);
            v["parabolic"] = json!(par.description().to_string());
            Ok((r.holds, v, None))
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

fn describe(cfg: &RunConfig) -> Result<Dispatched, Failure> {
    let par = cfg.parabolic()?;
    let good = is_good_parabolic(&par);
    let bounds = coordinate_bounds(&par)?;
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "parabolic": par.description().to_string(),
        "type": par.lie_type(),
        "rank": par.rank(),
        "marked_roots": par.marked_roots(),
        "d": bounds.d,
        "m": bounds.m,
        "exponents": bounds.bounds,
        "levi_degrees": levi_degrees(&par),
        "good": good.good,
        "violated": good.violated,
        "newton_polygon": bounds.newton,
        "dims": {"g": par.dim_g(), "l": par.dim_l(), "n": par.dim_n()},
    });
    Ok((true, v, None))
}

fn jordan_type(cfg: &RunConfig) -> Result<(String, Partition), Failure> {
    if let Some(delta) = &cfg.delta {
        if delta.is_empty() || delta.contains(&0) {
            return Err(ConfigError::new("delta", "parts must be positive").into());
        }
        let p = Partition::new(delta.clone());
        let label = format!("delta {}", join(p.parts()));
        return Ok((label, p));
    }
    let par = cfg.parabolic()?;
    if par.lie_type() != LieType::D {
        return Err(ConfigError::new("type", "Newton polygons need type D or --delta").into());
    }
    let delta = richardson_jordan_type(&par)?;
    Ok((par.description().to_string(), delta))
}

fn newton(cfg: &RunConfig) -> Result<Dispatched, Failure> {
    let (label, delta) = jordan_type(cfg)?;
    let polygon = NewtonPolygon::new(&delta);
    let comps = component_analysis(&delta);
    let pairs: Vec<(usize, usize)> = polygon
        .even_edges
        .iter()
        .flat_map(|e| e.pairs.iter().copied())
        .collect();
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "parabolic": label,
        "delta": polygon.delta,
        "degree": polygon.degree,
        "mu": polygon.mu(),
        "m": polygon_m_sequence(&delta),
        "relevant_pairs": pairs,
        "even_edges": polygon.even_edges,
        "segments": comps.segments,
        "components": comps.component_count,
        "singular": comps.singular,
    });
    Ok((true, v, Some(newton_svg(&polygon))))
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `path = value` lines, one per JSON leaf.
fn render_text(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&p, x, out);
                }
            }
            Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
                let items: Vec<String> = xs.iter().map(scalar).collect();
                out.push_str(&format!("{prefix} = [{}]\n", items.join(", ")));
            }
            Value::Array(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, out);
                }
            }
            other => out.push_str(&format!("{prefix} = {}\n", scalar(other))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    walk("", v, &mut out);
    out
}

/// Parses `argv`, runs the command and writes the outputs; returns the exit status.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    let outcome = execute(&cli.command);
    let args = cli.command.args();
    if outcome.status == 2 || outcome.report.starts_with("error:") {
        eprint!("{}", outcome.report);
        return outcome.status;
    }
    if let (Some(path), Some(svg)) = (&args.svg, &outcome.svg) {
        if let Err(e) = std::fs::write(path, svg) {
            eprintln!("error: invalid `svg`: {}: {e}", path.display());
            return 2;
        }
    }
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.report) {
                eprintln!("error: invalid `output`: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{}", outcome.report),
    }
    outcome.status
}
