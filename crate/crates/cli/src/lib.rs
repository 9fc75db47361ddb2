//! Command-line front end: every command reads one arrangement file and writes
//! one JSON document to standard output.
//!
//! Exit status is 0 on success, 1 when a verification run measures Betti
//! numbers that differ from the prediction, and 2 for any input error. Input
//! errors are also written to standard output as JSON, under an `error` key.

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use linecomp::generate::{generate_random, Profile};
use linecomp::io::{parse_file, ArrangementFile};
use linecomp::rat_serde::{parse_rat, rat_to_string};
use linecomp::sweep::{SweepError, Violation};
use linecomp::verifier::{verify_arrangement_with, RasterOptions, VerificationReport, VerifyError};
use linecomp::{Arrangement, HandleTrace, IntersectionPoset, InvariantReport, Rat, SpaceGraph, SweepPlan};

pub const TOOL: &str = "linecomp";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "linecomp", version, about = "Topology of complements of line arrangements")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArg {
    /// Arrangement file; `-` or omitted reads standard input.
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Genus, Betti numbers and homotopy type of the complement.
    Analyze {
        #[command(flatten)]
        input: InputArg,
        /// Emit the full bundle: report, poset, sweep and (with --grid) verification.
        #[arg(long)]
        bundle: bool,
        /// Grid resolution for the verification part of --bundle.
        #[arg(long, requires = "bundle")]
        grid: Option<usize>,
    },
    /// Hasse diagram of the intersection poset and the data recovered from it.
    Poset {
        #[command(flatten)]
        input: InputArg,
        /// Print the Hasse diagram as Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Height sweep and handle trace.
    Sweep {
        #[command(flatten)]
        input: InputArg,
        /// Height direction as comma-separated rationals, e.g. `1,2,4`.
        #[arg(long)]
        direction: Option<String>,
    },
    /// Measure Betti numbers of the rasterized complement and compare.
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// Grid cubes per axis.
        #[arg(long, default_value_t = 32)]
        grid: usize,
        /// Permit four-dimensional rasterization (memory grows as grid^4).
        #[arg(long)]
        allow_4d: bool,
        /// Block only cubes meeting a line, without the balls around multiple points.
        #[arg(long)]
        no_junction_blocks: bool,
    },
    /// Generate a seeded random arrangement file.
    Gen {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count: usize,
        /// generic, mixed or pencil(k).
        #[arg(long, default_value = "generic")]
        profile: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        name: Option<String>,
    },
}

/// An input error: `kind` is machine-readable, `details` carries structured
/// fields such as paths or indices.
#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
    details: Value,
}

impl Failure {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
            details: Value::Null,
        }
    }

    fn with(mut self, details: impl Serialize) -> Self {
        self.details = serde_json::to_value(details).expect("plain data");
        self
    }
}

enum Output {
    Json(Value, i32),
    Text(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetSummary {
    pub hasse_edges: Vec<(String, String)>,
    pub recovered_t: BTreeMap<String, usize>,
    pub recovered_d: usize,
    pub height: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub plan: SweepPlan,
    pub trace: HandleTrace,
    pub predicted_betti: Option<Vec<usize>>,
}

/// Whether the formula and the sweep agree on `g`.
#[derive(Debug, Clone, Serialize)]
pub struct SelfCheck {
    pub formula_g: usize,
    pub sweep_g: usize,
    pub all_trivial: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportBundle {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_digest: String,
    pub report: InvariantReport,
    pub poset: PosetSummary,
    pub sweep: SweepSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
    pub self_check: SelfCheck,
}

pub fn input_digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn poset_summary(a: &Arrangement) -> PosetSummary {
    let p = IntersectionPoset::build(a);
    PosetSummary {
        hasse_edges: p.hasse_edges().into_iter().map(|(x, y)| (x.to_string(), y.to_string())).collect(),
        recovered_t: string_keys(&p.recover_t()),
        recovered_d: p.recover_d(),
        height: p.height(),
    }
}

pub fn sweep_summary(a: &Arrangement, direction: Option<&[Rat]>) -> Result<SweepSummary, SweepError> {
    let graph = SpaceGraph::from_arrangement(a);
    let plan = match direction {
        Some(v) => graph.sweep_events(v)?,
        None => graph.sweep_events(&graph.find_generic_direction())?,
    };
    let trace = HandleTrace::from_plan(&plan);
    Ok(SweepSummary {
        predicted_betti: trace.predicted_betti(),
        plan,
        trace,
    })
}

pub fn self_check(report: &InvariantReport, trace: &HandleTrace) -> SelfCheck {
    SelfCheck {
        formula_g: report.g,
        sweep_g: trace.final_g,
        all_trivial: trace.all_trivial,
        consistent: !trace.all_trivial || trace.final_g == report.g,
    }
}

pub fn bundle(a: &Arrangement, digest: String, grid: Option<usize>) -> Result<ReportBundle, VerifyError> {
    let report = a.predict_topology();
    let sweep = sweep_summary(a, None).expect("searched direction is generic");
    let verification = grid
        .map(|m| verify_arrangement_with(a, m, RasterOptions::default()))
        .transpose()?;
    Ok(ReportBundle {
        tool: TOOL,
        version: VERSION,
        input_digest: digest,
        self_check: self_check(&report, &sweep.trace),
        poset: poset_summary(a),
        report,
        sweep,
        verification,
    })
}

fn string_keys(m: &BTreeMap<usize, usize>) -> BTreeMap<String, usize> {
    m.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn envelope(digest: &str, key: &str, body: impl Serialize) -> Value {
    let mut v = json!({ "tool": TOOL, "version": VERSION, "input_digest": digest });
    v[key] = serde_json::to_value(body).expect("plain data");
    v
}

fn read_input(input: &InputArg, stdin: &mut dyn Read) -> Result<(Arrangement, String), Failure> {
    let bytes = match input.input.as_deref() {
        None => read_all(stdin)?,
        Some(p) if p.as_os_str() == "-" => read_all(stdin)?,
        Some(p) => fs::read(p).map_err(|e| Failure::new("io", format!("{}: {e}", p.display())))?,
    };
    let text = String::from_utf8(bytes.clone()).map_err(|e| Failure::new("encoding", e.to_string()))?;
    let arrangement = parse_file(&text)
        .and_then(|f| f.to_arrangement())
        .map_err(|e| Failure::new("parse", e.to_string()).with(e))?;
    Ok((arrangement, input_digest(&bytes)))
}

fn read_all(stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    stdin
        .read_to_end(&mut buf)
        .map_err(|e| Failure::new("io", format!("standard input: {e}")))?;
    Ok(buf)
}

fn parse_direction(text: &str, n: usize) -> Result<Vec<Rat>, Failure> {
    let v = text
        .split(',')
        .map(parse_rat)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::new("invalid_direction", e))?;
    if v.len() != n {
        return Err(Failure::new(
            "invalid_direction",
            format!("direction has {} coordinates, expected {n}", v.len()),
        ));
    }
    Ok(v)
}

fn sweep_failure(e: SweepError, graph: &SpaceGraph) -> Failure {
    match &e {
        SweepError::NonGenericDirection(v) => {
            let mut details = serde_json::to_value(v).expect("plain data");
            if let Violation::PerpendicularEdge { edge } = v {
                let carrier = &graph.edges()[*edge].carrier;
                details["line"] = json!({
                    "point": carrier.base().coords().iter().map(rat_to_string).collect::<Vec<_>>(),
                    "direction": carrier.dir_rat().iter().map(rat_to_string).collect::<Vec<_>>(),
                });
            }
            Failure::new("non_generic_direction", e.to_string()).with(json!({ "violation": details }))
        }
        _ => Failure::new("invalid_direction", e.to_string()),
    }
}

fn verify_failure(e: VerifyError) -> Failure {
    let message = e.to_string();
    match e {
        VerifyError::ResolutionTooCoarse { resolution, reason } => Failure::new("resolution_too_coarse", message)
            .with(json!({ "resolution": resolution, "reason": reason })),
        VerifyError::WrongDimension { found, .. } => {
            Failure::new("wrong_dimension", message).with(json!({ "dimension": found }))
        }
        VerifyError::InvalidResolution(m) => Failure::new("invalid_resolution", message).with(json!({ "resolution": m })),
    }
}

fn execute(cli: Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match cli.command {
        Command::Analyze { input, bundle: false, .. } => {
            let (a, digest) = read_input(&input, stdin)?;
            let report = a.predict_topology();
            let sweep = sweep_summary(&a, None).expect("searched direction is generic");
            let mut v = envelope(&digest, "report", &report);
            v["self_check"] = serde_json::to_value(self_check(&report, &sweep.trace)).expect("plain data");
            Ok(Output::Json(v, 0))
        }
        Command::Analyze { input, bundle: true, grid } => {
            let (a, digest) = read_input(&input, stdin)?;
            let b = self::bundle(&a, digest, grid).map_err(verify_failure)?;
            let code = match &b.verification {
                Some(r) if !r.matches => 1,
                _ => 0,
            };
            Ok(Output::Json(serde_json::to_value(b).expect("plain data"), code))
        }
        Command::Poset { input, dot } => {
            let (a, digest) = read_input(&input, stdin)?;
            if dot {
                return Ok(Output::Text(IntersectionPoset::build(&a).to_dot()));
            }
            Ok(Output::Json(envelope(&digest, "poset", poset_summary(&a)), 0))
        }
        Command::Sweep { input, direction } => {
            let (a, digest) = read_input(&input, stdin)?;
            let v = direction.map(|d| parse_direction(&d, a.dimension())).transpose()?;
            let summary = sweep_summary(&a, v.as_deref())
                .map_err(|e| sweep_failure(e, &SpaceGraph::from_arrangement(&a)))?;
            Ok(Output::Json(envelope(&digest, "sweep", summary), 0))
        }
        Command::Verify {
            input,
            grid,
            allow_4d,
            no_junction_blocks,
        } => {
            let (a, digest) = read_input(&input, stdin)?;
            let options = RasterOptions {
                allow_four_dimensional: allow_4d,
                skip_junction_blocks: no_junction_blocks,
            };
            let report = verify_arrangement_with(&a, grid, options).map_err(verify_failure)?;
            let code = if report.matches { 0 } else { 1 };
            Ok(Output::Json(envelope(&digest, "verification", report), code))
        }
        Command::Gen {
            dim,
            count,
            profile,
            seed,
            name,
        } => {
            let profile: Profile = profile
                .parse()
                .map_err(|e: linecomp::generate::GenerateError| Failure::new("invalid_profile", e.to_string()))?;
            let a = generate_random(dim, count, profile, seed).map_err(|e| Failure::new("generate", e.to_string()))?;
            let mut file = ArrangementFile::from_arrangement(&a);
            file.name = Some(name.unwrap_or_else(|| format!("{profile}-n{dim}-d{count}")));
            file.seed = Some(seed);
            Ok(Output::Json(serde_json::to_value(file).expect("plain data"), 0))
        }
    }
}

fn write_json(out: &mut dyn Write, v: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("plain data");
    let _ = writeln!(out, "{text}");
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let pretty = cli.pretty;
    match execute(cli, stdin) {
        Ok(Output::Json(v, code)) => {
            write_json(stdout, &v, pretty);
            if code == 1 {
                let _ = writeln!(stderr, "linecomp: measured Betti numbers differ from the prediction");
            }
            code
        }
        Ok(Output::Text(t)) => {
            let _ = write!(stdout, "{t}");
            0
        }
        Err(f) => {
            let mut error = json!({ "kind": f.kind, "message": f.message });
            if !f.details.is_null() {
                error["details"] = f.details;
            }
            write_json(stdout, &json!({ "tool": TOOL, "version": VERSION, "error": error }), pretty);
            let _ = writeln!(stderr, "linecomp: {}", f.message);
            2
        }
    }
}
