//! Command-line front end: problem files in, reports out.

use crate::engine::{self, EngineError, HypothesisReport, Region};
use crate::oracle::Tolerances;
use crate::parser::parse_polynomial;
use crate::polynomial::{PolynomialMap, Variables};
use crate::rational::parse_rat;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid problem file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("component {index}: {message}")]
    Component { index: usize, message: String },
    #[error("{0}")]
    Problem(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl CliError {
    /// Exit code for this error: 1 usage/parse, 2 non-generic,
    /// 3 not-immersion, 4 hypothesis failure, 5 degenerate form.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(EngineError::NotImmersion { .. }) => 3,
            CliError::Engine(EngineError::HypothesisFailure { .. }) => 4,
            CliError::Engine(EngineError::DegenerateForm { .. }) => 5,
            _ => 1,
        }
    }
}

/// On-disk problem description.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub map: Vec<String>,
    #[serde(default)]
    pub kind: ProblemKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    #[default]
    CrossCap,
    Immersion,
}

impl ProblemFile {
    pub fn load(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_string(),
            source,
        })?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Parses the component strings and validates the shape for the kind.
    pub fn to_map(&self) -> Result<PolynomialMap, CliError> {
        let vars = Variables::new(&self.variables)
            .map_err(|e| CliError::Problem(e.to_string()))?;
        let mut comps = Vec::with_capacity(self.map.len());
        for (index, text) in self.map.iter().enumerate() {
            let p = parse_polynomial(text, &vars).map_err(|e| CliError::Component {
                index,
                message: e.to_string(),
            })?;
            comps.push(p);
        }
        let m = vars.len();
        let c = comps.len();
        let expected = match self.kind {
            ProblemKind::CrossCap => 2 * m - 1,
            ProblemKind::Immersion => 2 * m - 2,
        };
        if m < 3 || m % 2 == 0 || c != expected {
            return Err(CliError::Problem(format!(
                "expected an odd variable count m >= 3 with {expected} components, got m = {m}, components = {c}"
            )));
        }
        Ok(PolynomialMap::new(&vars, comps))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "crosscap",
    about = "Count and sign-classify cross-cap singularities of polynomial maps",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Problem file (JSON with variables, map, kind).
    pub input: String,
    /// Seed for the oracle and for row-transform retries.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Retry budget for the pivot-minor hypothesis.
    #[arg(long, default_value_t = 8)]
    pub max_retries: u32,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Oracle residual acceptance tolerance.
    #[arg(long, default_value_t = 1e-8)]
    pub tol_residual: f64,
    /// Oracle point deduplication distance.
    #[arg(long, default_value_t = 1e-6)]
    pub tol_dedup: f64,
}

impl CommonArgs {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            residual: self.tol_residual,
            dedup: self.tol_dedup,
            ..Tolerances::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every singular point of the map is a cross-cap.
    Generic {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Signed count of cross-caps over a region.
    Zeta {
        #[command(flatten)]
        common: CommonArgs,
        /// Ball region: squared radius, an exact rational like 3 or 1/100.
        #[arg(long, group = "region_choice")]
        radius_squared: Option<String>,
        /// Annulus region: two squared radii.
        #[arg(long, num_args = 2, group = "region_choice")]
        annulus: Option<Vec<String>>,
        /// Custom region polynomial u (the region is u >= 0).
        #[arg(long, group = "region_choice")]
        region: Option<String>,
    },
    /// Locate and sign-classify every real cross-cap.
    Crosscaps {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Intersection number of an immersed sphere (kind = immersion).
    Inumber {
        #[command(flatten)]
        common: CommonArgs,
        /// Sphere: squared radius, an exact rational.
        #[arg(long, group = "radius")]
        radius_squared: Option<String>,
        /// Use a ball certified to contain every singular point.
        #[arg(long, group = "radius")]
        auto_large_radius: bool,
    },
}

/// One machine-readable report shape for every command; absent fields are
/// omitted from the JSON.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signatures: Option<Signatures>,
    #[serde(rename = "dim_A", skip_serializing_if = "Option::is_none")]
    pub dim_a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub totals: Option<TotalsReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retries: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_number: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_squared: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<f64>>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            generic: None,
            zeta: None,
            signatures: None,
            dim_a: None,
            hypotheses: None,
            points: None,
            totals: None,
            retries: None,
            intersection_number: None,
            radius_squared: None,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct Signatures {
    pub delta: i64,
    pub u_delta: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PointReport {
    pub coords: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i64>,
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct TotalsReport {
    pub count: usize,
    pub positives: usize,
    pub negatives: usize,
    pub zeta: i64,
}

/// Runs a full command line (excluding the binary name) and returns the
/// rendered output plus the process exit code.
pub fn run<I, S>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(
        std::iter::once(std::ffi::OsString::from("crosscap"))
            .chain(args.into_iter().map(Into::into)),
    ) {
        Ok(cli) => cli,
        Err(e) => return (e.to_string(), 1),
    };
    let format = command_format(&cli.command);
    match execute(cli.command) {
        Ok((report, code)) => (render(&report, format), code),
        Err(e) => (render_error(&e, format), e.exit_code()),
    }
}

fn command_format(cmd: &Command) -> Format {
    match cmd {
        Command::Generic { common }
        | Command::Zeta { common, .. }
        | Command::Crosscaps { common }
        | Command::Inumber { common, .. } => common.format,
    }
}

fn execute(cmd: Command) -> Result<(Report, i32), CliError> {
    match cmd {
        Command::Generic { common } => cmd_generic(&common),
        Command::Zeta {
            common,
            radius_squared,
            annulus,
            region,
        } => cmd_zeta(&common, radius_squared, annulus, region),
        Command::Crosscaps { common } => cmd_crosscaps(&common),
        Command::Inumber {
            common,
            radius_squared,
            auto_large_radius,
        } => cmd_inumber(&common, radius_squared, auto_large_radius),
    }
}

fn load_crosscap_problem(
    common: &CommonArgs,
) -> Result<engine::CrossCapProblem, CliError> {
    let file = ProblemFile::load(&common.input)?;
    if file.kind != ProblemKind::CrossCap {
        return Err(CliError::Problem(
            "this command expects kind = \"crosscap\"".into(),
        ));
    }
    Ok(engine::build_problem(file.to_map()?)?)
}

fn cmd_generic(common: &CommonArgs) -> Result<(Report, i32), CliError> {
    let problem = load_crosscap_problem(common)?;
    let tol = common.tolerances();
    let gen = engine::check_generic(&problem, common.seed, &tol)?;
    let mut report = Report::new("generic");
    report.generic = Some(gen.generic);
    report.dim_a = Some(problem.dimension());
    report.points = Some(
        gen.points
            .iter()
            .map(|p| PointReport {
                coords: p.coordinates.clone(),
                sign: None,
                residual: p.residual,
            })
            .collect(),
    );
    report.witness = gen
        .points
        .iter()
        .find(|p| !(p.corank_one && p.transversal))
        .map(|p| p.coordinates.clone());
    let code = if gen.generic { 0 } else { 2 };
    Ok((report, code))
}

fn parse_radius(text: &str) -> Result<crate::rational::Rat, CliError> {
    parse_rat(text).map_err(|e| CliError::Problem(format!("bad rational `{text}`: {e}")))
}

fn cmd_zeta(
    common: &CommonArgs,
    radius_squared: Option<String>,
    annulus: Option<Vec<String>>,
    region: Option<String>,
) -> Result<(Report, i32), CliError> {
    let problem = load_crosscap_problem(common)?;
    let (reg, radius_text) = match (radius_squared, annulus, region) {
        (Some(r), None, None) => {
            let q = parse_radius(&r)?;
            (Region::ball(q.clone()), Some(q.to_string()))
        }
        (None, Some(pair), None) => {
            let r1 = parse_radius(&pair[0])?;
            let r2 = parse_radius(&pair[1])?;
            let text = format!("{r1}..{r2}");
            (Region::annulus(r1, r2), Some(text))
        }
        (None, None, Some(u_text)) => {
            let u = parse_polynomial(&u_text, problem.map().variables())
                .map_err(|e| CliError::Problem(e.to_string()))?;
            (Region::Custom { u }, None)
        }
        _ => {
            return Err(CliError::Problem(
                "pick exactly one of --radius-squared, --annulus, --region".into(),
            ))
        }
    };
    let tol = common.tolerances();
    let result = engine::zeta(&problem, &reg, common.seed, common.max_retries, &tol)?;
    let mut report = Report::new("zeta");
    report.zeta = Some(result.zeta);
    report.signatures = Some(Signatures {
        delta: result.sig_delta,
        u_delta: result.sig_u_delta,
    });
    report.dim_a = Some(result.dim_a);
    report.hypotheses = Some(result.hypotheses);
    report.retries = Some(result.retries_used);
    report.radius_squared = radius_text;
    Ok((report, 0))
}

fn cmd_crosscaps(common: &CommonArgs) -> Result<(Report, i32), CliError> {
    let problem = load_crosscap_problem(common)?;
    let tol = common.tolerances();
    let (signed, totals) = engine::classify(&problem, common.seed, &tol)?;
    let mut report = Report::new("crosscaps");
    report.dim_a = Some(problem.dimension());
    report.points = Some(
        signed
            .iter()
            .map(|s| PointReport {
                coords: s.point.coordinates.clone(),
                sign: Some(s.sign),
                residual: s.point.residual,
            })
            .collect(),
    );
    report.totals = Some(TotalsReport {
        count: totals.count,
        positives: totals.positives,
        negatives: totals.negatives,
        zeta: totals.signed_sum,
    });
    Ok((report, 0))
}

fn cmd_inumber(
    common: &CommonArgs,
    radius_squared: Option<String>,
    auto_large_radius: bool,
) -> Result<(Report, i32), CliError> {
    let file = ProblemFile::load(&common.input)?;
    if file.kind != ProblemKind::Immersion {
        return Err(CliError::Problem(
            "inumber expects kind = \"immersion\"".into(),
        ));
    }
    let g = file.to_map()?;
    let tol = common.tolerances();
    let radius = match (radius_squared, auto_large_radius) {
        (Some(r), false) => parse_radius(&r)?,
        (None, true) => {
            let problem = engine::build_problem(engine::augmented_map(&g)?)?;
            let points = problem.oracle_points(common.seed, &tol)?;
            engine::auto_radius_sq(&points)
        }
        _ => {
            return Err(CliError::Problem(
                "pick exactly one of --radius-squared or --auto-large-radius".into(),
            ))
        }
    };
    let (value, zres) =
        engine::intersection_number(&g, &radius, common.seed, common.max_retries, &tol)?;
    let mut report = Report::new("inumber");
    report.intersection_number = Some(value);
    report.zeta = Some(zres.zeta);
    report.signatures = Some(Signatures {
        delta: zres.sig_delta,
        u_delta: zres.sig_u_delta,
    });
    report.dim_a = Some(zres.dim_a);
    report.hypotheses = Some(zres.hypotheses);
    report.retries = Some(zres.retries_used);
    report.radius_squared = Some(radius.to_string());
    Ok((report, 0))
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable"),
        Format::Text => render_text(report),
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    use std::fmt::Write;
    let _ = writeln!(out, "command: {}", report.command);
    if let Some(g) = report.generic {
        let _ = writeln!(out, "generic: {g}");
    }
    if let Some(i) = report.intersection_number {
        let _ = writeln!(out, "intersection number: {i}");
    }
    if let Some(z) = report.zeta {
        let _ = writeln!(out, "zeta: {z}");
    }
    if let Some(s) = &report.signatures {
        let _ = writeln!(out, "signatures: delta = {}, u*delta = {}", s.delta, s.u_delta);
    }
    if let Some(d) = report.dim_a {
        let _ = writeln!(out, "dim A: {d}");
    }
    if let Some(r) = &report.radius_squared {
        let _ = writeln!(out, "radius squared: {r}");
    }
    if let Some(h) = &report.hypotheses {
        let _ = writeln!(
            out,
            "hypotheses: finite = {}, unit pivot = {}, nondegenerate = ({}, {}), boundary clear = {}",
            h.finite_dimension,
            h.unit_pivot,
            h.theta_delta_nondegenerate,
            h.theta_u_delta_nondegenerate,
            h.boundary_clear
        );
    }
    if let Some(r) = report.retries {
        let _ = writeln!(out, "retries: {r}");
    }
    if let Some(points) = &report.points {
        let _ = writeln!(out, "points ({}):", points.len());
        for p in points {
            let sign = match p.sign {
                Some(s) if s > 0 => "+1",
                Some(_) => "-1",
                None => "  ",
            };
            let coords = p
                .coords
                .iter()
                .map(|x| format!("{x:+.10}"))
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(out, "  {sign}  ({coords})  residual {:.3e}", p.residual);
        }
    }
    if let Some(t) = &report.totals {
        let _ = writeln!(
            out,
            "totals: count = {}, positives = {}, negatives = {}, zeta = {}",
            t.count, t.positives, t.negatives, t.zeta
        );
    }
    if let Some(w) = &report.witness {
        let _ = writeln!(out, "witness: {w:?}");
    }
    out
}

fn render_error(err: &CliError, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "error": {
                "exit_code": err.exit_code(),
                "message": err.to_string(),
            }
        }))
        .expect("serializable"),
        Format::Text => format!("error: {err}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn fixture(dir: &tempfile::TempDir, name: &str, content: &str) -> String {
        let path = dir.path().join(name);
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(content.as_bytes()).unwrap();
        path.to_string_lossy().into_owned()
    }

    fn whitney_json() -> &'static str {
        r#"{"variables": ["x", "y", "z"],
            "map": ["x^2", "y", "z", "x*y", "x*z"],
            "kind": "crosscap"}"#
    }

    #[test]
    fn generic_command_on_whitney() {
        let dir = tempfile::tempdir().unwrap();
        let path = fixture(&dir, "w.json", whitney_json());
        let (out, code) = run(["generic", path.as_str()]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("generic: true"));
    }

    #[test]
    fn zeta_command_json_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let path = fixture(&dir, "w.json", whitney_json());
        let args = [
            "zeta",
            path.as_str(),
            "--radius-squared",
            "1",
            "--format",
            "json",
        ];
        let (out1, code1) = run(args);
        let (out2, code2) = run(args);
        assert_eq!(code1, 0);
        assert_eq!(code2, 0);
        assert_eq!(out1, out2, "reports must be byte-identical");
        let report: Report = serde_json::from_str(&out1).unwrap();
        assert_eq!(report.zeta, Some(-1));
        // round trip: parse and re-serialize compare equal
        let again = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(out1, again);
    }

    #[test]
    fn malformed_polynomial_is_exit_one() {
        let dir = tempfile::tempdir().unwrap();
        let path = fixture(
            &dir,
            "bad.json",
            r#"{"variables": ["x", "y", "z"],
                "map": ["x^2 +", "y", "z", "x*y", "x*z"]}"#,
        );
        let (out, code) = run(["generic", path.as_str()]);
        assert_eq!(code, 1);
        assert!(out.contains("component 0"), "{out}");
    }

    #[test]
    fn missing_region_flag_is_usage_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = fixture(&dir, "w.json", whitney_json());
        let (_, code) = run(["zeta", path.as_str()]);
        assert_eq!(code, 1);
    }

    #[test]
    fn crosscaps_command_totals() {
        let dir = tempfile::tempdir().unwrap();
        let path = fixture(&dir, "w.json", whitney_json());
        let (out, code) = run(["crosscaps", path.as_str(), "--format", "json"]);
        assert_eq!(code, 0, "{out}");
        let report: Report = serde_json::from_str(&out).unwrap();
        let totals = report.totals.unwrap();
        assert_eq!(
            (totals.count, totals.positives, totals.negatives, totals.zeta),
            (1, 0, 1, -1)
        );
    }

    #[test]
    fn inumber_requires_immersion_kind() {
        let dir = tempfile::tempdir().unwrap();
        let path = fixture(&dir, "w.json", whitney_json());
        let (out, code) = run(["inumber", path.as_str(), "--auto-large-radius"]);
        assert_eq!(code, 1);
        assert!(out.contains("immersion"), "{out}");
    }

    #[test]
    fn nongeneric_map_exits_two_with_witness() {
        let dir = tempfile::tempdir().unwrap();
        let path = fixture(
            &dir,
            "cusp.json",
            r#"{"variables": ["x", "y", "z"],
                "map": ["x^3", "y", "z", "x*y", "x*z"]}"#,
        );
        let (out, code) = run(["generic", path.as_str(), "--format", "json"]);
        assert_eq!(code, 2, "{out}");
        let report: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(report.generic, Some(false));
        assert!(report.witness.is_some());
    }
}
