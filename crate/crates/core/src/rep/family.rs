//! Catalog families, their posets, and self-calibrating verification.

use super::module::{casimir_checks, verify_module, ModuleSpec};
use super::table::{table_row, Row, RowParams, TableRow};
use crate::error::{AduError, Result};
use crate::geometry::{
    build_attenuated, build_form_poset, build_hemmeter, build_polar, build_polar_top, fmt_half, DualPolarGraph,
    FormKind, FormModel, PolarKind, RankedPoset,
};
use crate::laurent::LaurentTermJson;
use crate::report::{all_pass, Check};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Polar { b: usize, n: usize, kind: PolarKind },
    Attenuated { b: usize, n: usize, m: usize },
    Form { kind: FormKind, b: usize, n: usize },
    Hem { b: usize, n: usize },
    /// `base = None` means every vertex of the dual polar graph.
    PolarTop { b: usize, n: usize, kind: PolarKind, base: Option<usize> },
}

/// Poset-construction choice tried during calibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Standard,
    Form(FormModel),
    /// Row `eps` equals the catalog `eps` plus `offset2 / 2`.
    EpsOffset(i64),
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::Standard => write!(f, "standard"),
            Convention::Form(m) => write!(f, "{m}"),
            Convention::EpsOffset(o) => write!(f, "row eps = catalog eps {} {}", if *o < 0 { "-" } else { "+" }, fmt_half(o.abs())),
        }
    }
}

impl Family {
    pub fn row(&self) -> Row {
        match self {
            Family::Polar { .. } => Row::Polar,
            Family::Attenuated { .. } => Row::Attenuated,
            Family::Form { kind: FormKind::Alt, .. } => Row::Alt,
            Family::Form { kind: FormKind::Her, .. } => Row::Her,
            Family::Form { kind: FormKind::Quad, .. } => Row::Quad,
            Family::Hem { .. } => Row::Hem,
            Family::PolarTop { .. } => Row::PolarTop,
        }
    }

    pub fn field_order(&self) -> usize {
        match *self {
            Family::Polar { b, .. }
            | Family::Attenuated { b, .. }
            | Family::Form { b, .. }
            | Family::Hem { b, .. }
            | Family::PolarTop { b, .. } => b,
        }
    }

    pub fn params(&self) -> Value {
        match *self {
            Family::Polar { b, n, kind } => json!({ "b": b, "N": n, "eps": fmt_half(kind.doubled()) }),
            Family::Attenuated { b, n, m } => json!({ "b": b, "N": n, "M": m }),
            Family::Form { b, n, .. } | Family::Hem { b, n } => json!({ "b": b, "N": n }),
            Family::PolarTop { b, n, kind, base } => {
                json!({ "b": b, "N": n, "eps": fmt_half(kind.doubled()), "base_vertex": base })
            }
        }
    }

    pub fn conventions(&self) -> Vec<Convention> {
        match self {
            Family::Polar { .. } | Family::PolarTop { .. } => vec![Convention::EpsOffset(0), Convention::EpsOffset(-2)],
            Family::Form { kind, .. } => FormModel::candidates(*kind).into_iter().map(Convention::Form).collect(),
            _ => vec![Convention::Standard],
        }
    }

    /// The convention used when none is requested: the one the catalog rows
    /// are known to match.
    pub fn default_convention(&self) -> Convention {
        match self {
            Family::Polar { .. } | Family::PolarTop { .. } => Convention::EpsOffset(-2),
            Family::Form { .. } => Convention::Form(FormModel::Extension),
            _ => Convention::Standard,
        }
    }

    /// Row parameters under a convention.
    pub fn row_params(&self, conv: Convention) -> RowParams {
        let off = match conv {
            Convention::EpsOffset(o) => o,
            _ => 0,
        };
        match *self {
            Family::Polar { n, kind, .. } | Family::PolarTop { n, kind, .. } => {
                RowParams { n: n as i64, m: 0, eps2: kind.doubled() + off }
            }
            Family::Attenuated { n, m, .. } => RowParams { n: n as i64, m: m as i64, eps2: 0 },
            Family::Form { n, .. } | Family::Hem { n, .. } => RowParams { n: n as i64, m: 0, eps2: 0 },
        }
    }

    /// All posets for the family under `conv` (one per base vertex for
    /// `PolarTop` without a fixed base).
    pub fn build(&self, conv: Convention) -> Result<Vec<RankedPoset>> {
        Ok(match *self {
            Family::Polar { b, n, kind } => vec![build_polar(b, n, kind)?],
            Family::Attenuated { b, n, m } => vec![build_attenuated(b, n, m)?],
            Family::Form { kind, b, n } => {
                let model = match conv {
                    Convention::Form(m) => m,
                    _ => FormModel::Extension,
                };
                vec![build_form_poset(kind, b, n, model)?]
            }
            Family::Hem { b, n } => vec![build_hemmeter(b, n)?],
            Family::PolarTop { b, n, kind, base } => {
                let g = DualPolarGraph::from_poset(&build_polar(b, n, kind)?)?;
                match base {
                    Some(x) => vec![build_polar_top(&g, x)?],
                    None => (0..g.len()).map(|x| build_polar_top(&g, x)).collect::<Result<_>>()?,
                }
            }
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RowJson {
    pub s: i64,
    pub t: i64,
    pub varphi: Vec<LaurentTermJson>,
    pub phi: Vec<LaurentTermJson>,
    pub label: String,
}

impl From<&TableRow> for RowJson {
    fn from(r: &TableRow) -> Self {
        Self { s: r.s, t: r.t, varphi: r.varphi.to_json_terms(), phi: r.phi.to_json_terms(), label: r.describe() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Attempt {
    pub convention: String,
    pub row: String,
    pub fibers: Vec<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleReport {
    pub family: String,
    pub params: Value,
    pub row: RowJson,
    pub checks: Vec<Check>,
    pub timing_ms: u128,
    pub convention: String,
    pub fibers: Vec<usize>,
    pub attempts: Vec<Attempt>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Try every convention and keep the first that passes.
    pub calibrate: bool,
    /// Use this row instead of the family's own (negative controls).
    pub row: Option<Row>,
    pub convention: Option<Convention>,
}

/// Module and Casimir checks over all posets of one convention; check names
/// get a `base x:` prefix when several base vertices are involved.
fn run_convention(family: &Family, conv: Convention, row: &TableRow) -> Result<(Vec<Check>, Vec<usize>)> {
    let posets = family.build(conv)?;
    let b = family.field_order() as u64;
    let spec = ModuleSpec { row: row.clone(), b };
    let many = posets.len() > 1;
    let mut checks = Vec::new();
    for (x, p) in posets.iter().enumerate() {
        let mut cs = verify_module(&spec, p)?;
        if all_pass(&cs) {
            cs.extend(casimir_checks(&spec, p)?);
        }
        if many {
            for c in &mut cs {
                c.name = format!("base {x}: {}", c.name);
            }
        }
        checks.extend(cs);
    }
    if many {
        let sizes: Vec<Vec<usize>> = posets.iter().map(RankedPoset::fiber_sizes).collect();
        let same = sizes.windows(2).all(|w| w[0] == w[1]);
        checks.push(Check::from_witness(
            "fiber sizes independent of base vertex",
            (!same).then(|| format!("{sizes:?}")),
        ));
    }
    Ok((checks, posets[0].fiber_sizes()))
}

pub fn verify_family(family: &Family, opts: &VerifyOptions) -> Result<ModuleReport> {
    let start = Instant::now();
    let row_kind = opts.row.unwrap_or(family.row());
    let candidates = match (opts.convention, opts.calibrate) {
        (Some(c), _) => vec![c],
        (None, true) => family.conventions(),
        (None, false) => vec![family.default_convention()],
    };
    let mut attempts = Vec::new();
    let mut chosen = None;
    let mut first = None;
    for conv in candidates {
        let row = table_row(row_kind, family.row_params(conv));
        let (checks, fibers) = run_convention(family, conv, &row)?;
        let passed = all_pass(&checks);
        attempts.push(Attempt { convention: conv.to_string(), row: row.describe(), fibers: fibers.clone(), passed });
        let result = (conv, row, checks, fibers);
        if passed {
            chosen = Some(result);
            break;
        }
        first.get_or_insert(result);
    }
    let (conv, row, checks, fibers) = chosen.or(first).expect("at least one convention");
    Ok(ModuleReport {
        family: family.row().name().into(),
        params: family.params(),
        row: RowJson::from(&row),
        checks,
        timing_ms: start.elapsed().as_millis(),
        convention: conv.to_string(),
        fibers,
        attempts,
    })
}

/// Parses a family name plus parameters as given on the command line.
pub fn parse_family(
    name: &str,
    b: usize,
    n: usize,
    m: Option<usize>,
    eps: Option<&str>,
    base: Option<usize>,
) -> Result<Family> {
    let row = Row::parse(name).ok_or_else(|| AduError::Unsupported(format!("unknown family {name:?}")))?;
    let need = |what: &str| AduError::Unsupported(format!("family {row} needs --{what}"));
    let kind = || -> Result<PolarKind> { PolarKind::parse(eps.ok_or_else(|| need("eps"))?) };
    Ok(match row {
        Row::Polar => Family::Polar { b, n, kind: kind()? },
        Row::PolarTop => Family::PolarTop { b, n, kind: kind()?, base },
        Row::Attenuated => Family::Attenuated { b, n, m: m.ok_or_else(|| need("M"))? },
        Row::Alt => Family::Form { kind: FormKind::Alt, b, n },
        Row::Her => Family::Form { kind: FormKind::Her, b, n },
        Row::Quad => Family::Form { kind: FormKind::Quad, b, n },
        Row::Hem => Family::Hem { b, n },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calibration_records_attempts() {
        let fam = Family::Form { kind: FormKind::Alt, b: 2, n: 2 };
        let r = verify_family(&fam, &VerifyOptions { calibrate: true, ..Default::default() }).unwrap();
        assert!(r.passed());
        assert_eq!(r.convention, "extension");
        assert_eq!(r.attempts.len(), 2);
        assert!(!r.attempts[0].passed);
    }

    #[test]
    fn polar_offset() {
        let fam = Family::Polar { b: 2, n: 2, kind: PolarKind::PARABOLIC };
        let r = verify_family(&fam, &VerifyOptions { calibrate: true, ..Default::default() }).unwrap();
        assert!(r.passed());
        assert_eq!(r.fibers, vec![1, 15, 15]);
        assert_eq!(r.convention, "row eps = catalog eps - 1");
    }

    #[test]
    fn wrong_row_fails_cleanly() {
        let fam = Family::Attenuated { b: 2, n: 2, m: 1 };
        let r = verify_family(&fam, &VerifyOptions { row: Some(Row::Alt), ..Default::default() }).unwrap();
        assert!(!r.passed());
        assert!(r.checks.iter().any(|c| c.witness.is_some()));
    }

    #[test]
    fn hem_is_gated() {
        let fam = parse_family("hem", 3, 3, None, None, None).unwrap();
        assert!(matches!(verify_family(&fam, &VerifyOptions::default()), Err(AduError::Gated(_))));
    }
}
