//! Command-line interface.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage, 3 size guard,
//! 4 gated feature.

use crate::algebra::suite::{run_suite, sweep, SuiteOptions};
use crate::algebra::Algebra;
use crate::error::{AduError, Result};
use crate::geometry::{build_form_poset, graph_json, DualPolarGraph, FiberRule, FormKind, FormModel, RankedPoset};
use crate::laurent::{inverse_psi_st, parse_laurent, psi_st, AlgebraSignature, LaurentPoly, LaurentTermJson};
use crate::rep::{
    casimir_action, casimir_checks, parse_family, table_check, verify_family, Convention, Family, ModuleSpec, Row,
    RowJson, SparseMat, VerifyOptions,
};
use crate::report::{all_pass, Check};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SIZE_GUARD: i32 = 3;
pub const EXIT_GATED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "adu", version, about = "Augmented down-up algebras and their poset modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the algebra property suite for one signature, or sweep many.
    VerifyAlgebra(VerifyAlgebraArgs),
    /// Apply psi -> psi_{s,t} or its inverse.
    PhiMap(PhiMapArgs),
    /// Build a catalog poset and write it as JSON.
    #[command(alias = "export")]
    BuildPoset(BuildPosetArgs),
    /// Check that e, f, k give a module on the poset.
    VerifyModule(VerifyModuleArgs),
    /// Casimir matrices and their centrality checks.
    Casimir(CasimirArgs),
    /// Check psi_{s,t}(phi) = varphi symbolically for every catalog row.
    TableCheck(OutArgs),
}

#[derive(Args, Debug)]
pub struct OutArgs {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyAlgebraArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    pub s: Option<i64>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
    pub t: Option<i64>,
    /// `EXP:COEFF; ...` (e.g. `const:-1`, `2:q^3 - 1; -1:q`) or LaurentPoly JSON.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub phi: String,
    /// Sweep all s != t in [-R, R] with random phi instead.
    #[arg(long)]
    pub sweep: bool,
    #[arg(long, default_value_t = 3)]
    pub range: i64,
    /// Random phi per (s, t) in a sweep.
    #[arg(long, default_value_t = 20)]
    pub phis: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub triples: usize,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct PhiMapArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub s: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
    /// Input Laurent polynomial, same grammar as `--phi`.
    #[arg(long, allow_hyphen_values = true)]
    pub psi: String,
    /// Apply the inverse map on the image.
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// polar, polar_top, attenuated, alt, her, quad or hem.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub b: usize,
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long = "M")]
    pub m: Option<usize>,
    /// Catalog polar parameter: 0, 1, 2, 1/2 or 3/2.
    #[arg(long)]
    pub eps: Option<String>,
    /// Base vertex for polar_top (default: every vertex for verification, 0 for export).
    #[arg(long)]
    pub base: Option<usize>,
    /// Form poset model: extension, rank-metric, rank-metric:rank, rank-metric:half, rank-metric:half-ceil.
    #[arg(long)]
    pub model: Option<String>,
}

#[derive(Args, Debug)]
pub struct BuildPosetArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// For polar_top: also write the dual polar graph (edges, base_vertex, distances).
    #[arg(long)]
    pub graph: bool,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct VerifyModuleArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Use only the default convention instead of trying each in turn.
    #[arg(long)]
    pub no_calibrate: bool,
    /// Verify against another catalog row (negative control).
    #[arg(long)]
    pub row: Option<String>,
    /// Polar row offset: row eps = catalog eps + OFFSET.
    #[arg(long, allow_hyphen_values = true)]
    pub eps_offset: Option<String>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct CasimirArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Include every nonzero matrix entry in the report.
    #[arg(long)]
    pub matrices: bool,
    #[command(flatten)]
    pub out: OutArgs,
}

pub fn exit_code(e: &AduError) -> i32 {
    match e {
        AduError::SizeGuard { .. } => EXIT_SIZE_GUARD,
        AduError::Gated(_) => EXIT_GATED,
        AduError::InvalidSignature(_)
        | AduError::SupportViolation { .. }
        | AduError::Parse(_)
        | AduError::Unsupported(_)
        | AduError::SignatureMismatch => EXIT_USAGE,
        AduError::DivisionByZero | AduError::PoleAtSqrt { .. } | AduError::Disconnected | AduError::Io(_) => EXIT_FAIL,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match run(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn emit<T: Serialize>(value: &T, out: &OutArgs) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    emit_text(&text, out)
}

fn emit_text(text: &str, out: &OutArgs) -> Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn status(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

pub fn run(cmd: &Command) -> Result<i32> {
    match cmd {
        Command::VerifyAlgebra(a) => verify_algebra(a),
        Command::PhiMap(a) => phi_map(a),
        Command::BuildPoset(a) => build_poset(a),
        Command::VerifyModule(a) => verify_module_cmd(a),
        Command::Casimir(a) => casimir_cmd(a),
        Command::TableCheck(out) => table_check_cmd(out),
    }
}

#[derive(Serialize)]
struct SignatureJson {
    s: i64,
    t: i64,
    phi: Vec<LaurentTermJson>,
}

impl From<&AlgebraSignature> for SignatureJson {
    fn from(sig: &AlgebraSignature) -> Self {
        Self { s: sig.s(), t: sig.t(), phi: sig.phi().to_json_terms() }
    }
}

#[derive(Serialize)]
struct AlgebraReport {
    signature: SignatureJson,
    checks: Vec<Check>,
    timing_ms: u128,
}

#[derive(Serialize)]
struct SweepReport {
    seed: u64,
    signatures: usize,
    failures: usize,
    entries: Vec<AlgebraReport>,
    timing_ms: u128,
}

fn verify_algebra(a: &VerifyAlgebraArgs) -> Result<i32> {
    let opts = SuiteOptions { seed: a.seed, triples: a.triples, samples: a.samples };
    let start = Instant::now();
    if a.sweep {
        let entries: Vec<AlgebraReport> = sweep(-a.range..=a.range, a.phis, &opts)
            .into_iter()
            .map(|e| AlgebraReport { signature: (&e.signature).into(), checks: e.checks, timing_ms: 0 })
            .collect();
        let failures = entries.iter().filter(|e| !all_pass(&e.checks)).count();
        let report =
            SweepReport { seed: a.seed, signatures: entries.len(), failures, entries, timing_ms: start.elapsed().as_millis() };
        emit(&report, &a.out)?;
        return Ok(status(failures == 0));
    }
    let (s, t) = (a.s.expect("required"), a.t.expect("required"));
    let sig = AlgebraSignature::new(s, t, parse_laurent(&a.phi)?)?;
    let checks = run_suite(&Algebra::new(sig.clone()), &opts);
    let pass = all_pass(&checks);
    emit(&AlgebraReport { signature: (&sig).into(), checks, timing_ms: start.elapsed().as_millis() }, &a.out)?;
    Ok(status(pass))
}

#[derive(Serialize)]
struct PhiMapReport {
    s: i64,
    t: i64,
    direction: &'static str,
    input: Vec<LaurentTermJson>,
    output: Vec<LaurentTermJson>,
    text: String,
}

fn phi_map(a: &PhiMapArgs) -> Result<i32> {
    if a.s == a.t {
        return Err(AduError::InvalidSignature(format!("s and t must differ (both are {})", a.s)));
    }
    let psi = parse_laurent(&a.psi)?;
    let out: LaurentPoly = if a.inverse { inverse_psi_st(&psi, a.s, a.t)? } else { psi_st(&psi, a.s, a.t) };
    let report = PhiMapReport {
        s: a.s,
        t: a.t,
        direction: if a.inverse { "inverse" } else { "forward" },
        input: psi.to_json_terms(),
        output: out.to_json_terms(),
        text: out.to_string(),
    };
    emit(&report, &OutArgs { out: None })?;
    Ok(EXIT_PASS)
}

fn parse_model(text: &str, kind: FormKind) -> Result<FormModel> {
    Ok(match text.trim() {
        "extension" => FormModel::Extension,
        "rank-metric" => FormModel::candidates(kind)[0],
        "rank-metric:rank" => FormModel::RankMetric(FiberRule::Rank),
        "rank-metric:half" => FormModel::RankMetric(FiberRule::HalfRank),
        "rank-metric:half-ceil" => FormModel::RankMetric(FiberRule::HalfRankCeil),
        other => return Err(AduError::Parse(format!("unknown form model {other:?}"))),
    })
}

fn family_of(a: &FamilyArgs) -> Result<Family> {
    let fam = parse_family(&a.family, a.b, a.n, a.m, a.eps.as_deref(), a.base)?;
    if a.model.is_some() && !matches!(fam, Family::Form { .. }) {
        return Err(AduError::Parse("--model applies only to alt, her and quad".into()));
    }
    Ok(fam)
}

fn model_convention(a: &FamilyArgs, fam: &Family) -> Result<Option<Convention>> {
    match (&a.model, fam) {
        (Some(m), Family::Form { kind, .. }) => Ok(Some(Convention::Form(parse_model(m, *kind)?))),
        _ => Ok(None),
    }
}

fn build_poset(a: &BuildPosetArgs) -> Result<i32> {
    let fam = family_of(&a.family)?;
    let conv = model_convention(&a.family, &fam)?.unwrap_or(fam.default_convention());
    let fam = match fam {
        Family::PolarTop { b, n, kind, base } => Family::PolarTop { b, n, kind, base: Some(base.unwrap_or(0)) },
        Family::Form { kind, b, n } => {
            let Convention::Form(model) = conv else { unreachable!() };
            let p = build_form_poset(kind, b, n, model)?;
            emit_text(&(p.to_json() + "\n"), &a.out)?;
            return Ok(EXIT_PASS);
        }
        other => other,
    };
    if a.graph {
        let Family::PolarTop { b, n, kind, base } = fam else {
            return Err(AduError::Parse("--graph applies only to polar_top".into()));
        };
        let g = DualPolarGraph::from_poset(&crate::geometry::build_polar(b, n, kind)?)?;
        let x = base.unwrap_or(0);
        let top = crate::geometry::build_polar_top(&g, x)?;
        emit_text(&(graph_json(&g, &top, x) + "\n"), &a.out)?;
        return Ok(EXIT_PASS);
    }
    let p: RankedPoset = fam.build(conv)?.remove(0);
    emit_text(&(p.to_json() + "\n"), &a.out)?;
    Ok(EXIT_PASS)
}

fn verify_module_cmd(a: &VerifyModuleArgs) -> Result<i32> {
    let fam = family_of(&a.family)?;
    let mut convention = model_convention(&a.family, &fam)?;
    if let Some(off) = &a.eps_offset {
        if !matches!(fam, Family::Polar { .. } | Family::PolarTop { .. }) {
            return Err(AduError::Parse("--eps-offset applies only to polar and polar_top".into()));
        }
        convention = Some(Convention::EpsOffset(crate::geometry::parse_half(off)?));
    }
    let row = match &a.row {
        Some(r) => Some(Row::parse(r).ok_or_else(|| AduError::Parse(format!("unknown row {r:?}")))?),
        None => None,
    };
    let opts = VerifyOptions { calibrate: !a.no_calibrate, row, convention };
    let report = verify_family(&fam, &opts)?;
    emit(&report, &a.out)?;
    Ok(status(report.passed()))
}

#[derive(Serialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<(usize, usize, String)>,
}

impl From<&SparseMat> for MatrixJson {
    fn from(m: &SparseMat) -> Self {
        Self { dim: m.dim(), entries: m.entries().map(|(r, c, x)| (r, c, x.to_string())).collect() }
    }
}

#[derive(Serialize)]
struct CasimirReport {
    family: String,
    params: serde_json::Value,
    convention: String,
    row: RowJson,
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_s: Option<MatrixJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_t: Option<MatrixJson>,
    timing_ms: u128,
}

fn casimir_cmd(a: &CasimirArgs) -> Result<i32> {
    let start = Instant::now();
    let fam = family_of(&a.family)?;
    let fam = match fam {
        Family::PolarTop { b, n, kind, base } => Family::PolarTop { b, n, kind, base: Some(base.unwrap_or(0)) },
        other => other,
    };
    let conv = model_convention(&a.family, &fam)?.unwrap_or(fam.default_convention());
    let p = fam.build(conv)?.remove(0);
    let row = crate::rep::table_row(fam.row(), fam.row_params(conv));
    let spec = ModuleSpec { row: row.clone(), b: fam.field_order() as u64 };
    let checks = casimir_checks(&spec, &p)?;
    let (cs, ct) = if a.matrices {
        let (cs, ct) = casimir_action(&spec, &p)?;
        (Some((&cs).into()), Some((&ct).into()))
    } else {
        (None, None)
    };
    let pass = all_pass(&checks);
    let report = CasimirReport {
        family: fam.row().name().into(),
        params: fam.params(),
        convention: conv.to_string(),
        row: (&row).into(),
        checks,
        c_s: cs,
        c_t: ct,
        timing_ms: start.elapsed().as_millis(),
    };
    emit(&report, &a.out)?;
    Ok(status(pass))
}

#[derive(Serialize)]
struct TableCheckReport {
    rows: Vec<TableEntry>,
    passed: bool,
}

#[derive(Serialize)]
struct TableEntry {
    label: String,
    s: i64,
    t: i64,
    consistent: bool,
}

fn table_check_cmd(out: &OutArgs) -> Result<i32> {
    let rows: Vec<TableEntry> = table_check()
        .into_iter()
        .map(|(r, ok)| TableEntry { label: r.describe(), s: r.s, t: r.t, consistent: ok })
        .collect();
    let passed = rows.iter().all(|r| r.consistent);
    emit(&TableCheckReport { rows, passed }, out)?;
    Ok(status(passed))
}
