//! The certified cases: machine-readable encodings of the per-stratum tables
//! and constants, plus runners that re-verify every row and the headline cone
//! facts at a given q.
//!
//! Case data ships as JSON (one file per case, schema under `schemas/`);
//! the `ZIPCONE_DATA` environment variable overrides the data directory.

use crate::cone::{Cone, ConeError, Halfspace};
use crate::cones::{
    self, bar, bar_cone, hasse_weight, is_hasse_type, named_cone, zip_preset, NamedConeId,
    ZipConeError,
};
use crate::farkas::search_forms;
use crate::qpoly::RatFunc;
use crate::report::{CaseResult, Check, SweepReport};
use crate::roots::{Coweight, GroupError, GroupFamily, Root, Weight};
use crate::sepsys::{eval_form, CertTemplate, CertTerm, SepRow, SeparatingSystem, Session};
use crate::weyl::WeylElt;
use crate::zipdata::{build_context, ZipContext};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CaseError {
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
    #[error("failed to read case data: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse case data: {0}")]
    Json(#[from] serde_json::Error),
    #[error("case data invalid: {0}")]
    Data(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    ZipCone(#[from] ZipConeError),
}

/// Identifiers of the shipped cases.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CaseId {
    Sp4,
    Sp6,
    Gl3S21,
    Gl4S31,
    Gl4S22,
    U3S21,
    U4S31,
    BnSpin2,
    BnSpin3,
    BnSpin4,
    U4S22Exploratory,
}

impl CaseId {
    pub const ALL: [CaseId; 11] = [
        CaseId::Sp4,
        CaseId::Sp6,
        CaseId::Gl3S21,
        CaseId::Gl4S31,
        CaseId::Gl4S22,
        CaseId::U3S21,
        CaseId::U4S31,
        CaseId::BnSpin2,
        CaseId::BnSpin3,
        CaseId::BnSpin4,
        CaseId::U4S22Exploratory,
    ];

    /// Cases with per-stratum certificate tables.
    pub const TABLED: [CaseId; 5] = [
        CaseId::Sp6,
        CaseId::Gl4S31,
        CaseId::Gl4S22,
        CaseId::U3S21,
        CaseId::U4S31,
    ];

    /// Cases with a certified zip-cone preset.
    pub const WITH_PRESET: [CaseId; 7] = [
        CaseId::Sp4,
        CaseId::Sp6,
        CaseId::Gl3S21,
        CaseId::Gl4S31,
        CaseId::Gl4S22,
        CaseId::U3S21,
        CaseId::U4S31,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseId::Sp4 => "sp4",
            CaseId::Sp6 => "sp6",
            CaseId::Gl3S21 => "gl3-21",
            CaseId::Gl4S31 => "gl4-31",
            CaseId::Gl4S22 => "gl4-22",
            CaseId::U3S21 => "u3-21",
            CaseId::U4S31 => "u4-31",
            CaseId::BnSpin2 => "bn-spin-2",
            CaseId::BnSpin3 => "bn-spin-3",
            CaseId::BnSpin4 => "bn-spin-4",
            CaseId::U4S22Exploratory => "u4-22-exploratory",
        }
    }

    pub fn parse(s: &str) -> Result<CaseId, CaseError> {
        CaseId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| CaseError::UnknownCase(s.to_string()))
    }
}

impl std::fmt::Display for CaseId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

// ---------------------------------------------------------------------------
// on-disk schema (field order matches the canonical sorted-key JSON form)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseFile {
    pub bar: bool,
    pub certified: bool,
    pub constants: BTreeMap<String, RatFunc>,
    pub family: String,
    pub id: String,
    pub mu: Vec<i64>,
    pub q_min: i64,
    pub rank: usize,
    pub rows: Vec<RowFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RowFile {
    pub bounds: Vec<Vec<RatFunc>>,
    pub certs: Vec<CertFile>,
    pub chars: Vec<Vec<i64>>,
    pub e_w: Vec<String>,
    pub ee: Vec<String>,
    pub h: Vec<Vec<RatFunc>>,
    pub neighbors: Vec<String>,
    pub w: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scale: Option<RatFunc>,
    pub terms: Vec<TermFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermFile {
    pub alpha: String,
    pub coeff: RatFunc,
    pub i: usize,
}

/// Canonical serialization (sorted keys, two-space indent, trailing newline).
pub fn canonical_case_json(file: &CaseFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("serializable");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// loading
// ---------------------------------------------------------------------------

/// A loaded case: context constructor data, the separating system, constants.
#[derive(Clone, Debug)]
pub struct CaseData {
    pub id: CaseId,
    pub family: GroupFamily,
    pub mu: Vec<i64>,
    pub q_min: i64,
    pub certified: bool,
    pub constants: BTreeMap<String, RatFunc>,
    pub system: SeparatingSystem,
    pub raw: CaseFile,
}

impl CaseData {
    pub fn context(&self, q: i64) -> Result<ZipContext, CaseError> {
        Ok(build_context(self.family, Coweight::from_i64(&self.mu), q)?)
    }
}

fn embedded_json(id: CaseId) -> &'static str {
    match id {
        CaseId::Sp4 => include_str!("../../../data/cases/sp4.json"),
        CaseId::Sp6 => include_str!("../../../data/cases/sp6.json"),
        CaseId::Gl3S21 => include_str!("../../../data/cases/gl3-21.json"),
        CaseId::Gl4S31 => include_str!("../../../data/cases/gl4-31.json"),
        CaseId::Gl4S22 => include_str!("../../../data/cases/gl4-22.json"),
        CaseId::U3S21 => include_str!("../../../data/cases/u3-21.json"),
        CaseId::U4S31 => include_str!("../../../data/cases/u4-31.json"),
        CaseId::BnSpin2 => include_str!("../../../data/cases/bn-spin-2.json"),
        CaseId::BnSpin3 => include_str!("../../../data/cases/bn-spin-3.json"),
        CaseId::BnSpin4 => include_str!("../../../data/cases/bn-spin-4.json"),
        CaseId::U4S22Exploratory => {
            include_str!("../../../data/cases/u4-22-exploratory.json")
        }
    }
}

/// Raw JSON text for a case, honoring the `ZIPCONE_DATA` directory override.
pub fn case_json_text(id: CaseId) -> Result<String, CaseError> {
    if let Ok(dir) = std::env::var("ZIPCONE_DATA") {
        let path = std::path::Path::new(&dir).join(format!("{}.json", id.as_str()));
        return Ok(std::fs::read_to_string(path)?);
    }
    Ok(embedded_json(id).to_string())
}

fn family_from_str(s: &str, rank: usize) -> Result<GroupFamily, CaseError> {
    match s {
        "gl" => Ok(GroupFamily::Gl(rank)),
        "u" => Ok(GroupFamily::U(rank)),
        "sp" => Ok(GroupFamily::Sp(rank)),
        "so-odd" => Ok(GroupFamily::SoOdd(rank)),
        other => Err(CaseError::Data(format!("unknown family tag `{}`", other))),
    }
}

pub fn parse_case_file(file: &CaseFile) -> Result<CaseData, CaseError> {
    let id = CaseId::parse(&file.id)?;
    let family = family_from_str(&file.family, file.rank)?;
    let n = file.rank;
    if file.mu.len() != n {
        return Err(CaseError::Data("mu length does not match rank".into()));
    }
    let mut rows = Vec::new();
    for rf in &file.rows {
        let w = WeylElt::parse_window(&rf.w, n)?;
        let parse_roots = |v: &[String]| -> Result<Vec<Root>, CaseError> {
            v.iter().map(|s| Ok(Root::parse(s, n)?)).collect()
        };
        let e_w = parse_roots(&rf.e_w)?;
        let ee = parse_roots(&rf.ee)?;
        let neighbors = rf
            .neighbors
            .iter()
            .map(|s| Ok(WeylElt::parse_window(s, n)?))
            .collect::<Result<Vec<_>, CaseError>>()?;
        if ee.len() != neighbors.len() || ee.len() != rf.chars.len() || ee.len() != rf.h.len() {
            return Err(CaseError::Data(format!(
                "row {}: EE, neighbors, chars and h must be parallel",
                rf.w
            )));
        }
        let chars: Vec<Weight> = rf.chars.iter().map(|c| Weight::from_i64(c)).collect();
        let certs = rf
            .certs
            .iter()
            .map(|cf| {
                Ok(CertTemplate {
                    scale: cf.scale.clone().unwrap_or_else(RatFunc::one),
                    terms: cf
                        .terms
                        .iter()
                        .map(|t| {
                            Ok(CertTerm {
                                alpha: Root::parse(&t.alpha, n)?,
                                source_index: t.i,
                                coeff: t.coeff.clone(),
                            })
                        })
                        .collect::<Result<Vec<_>, CaseError>>()?,
                })
            })
            .collect::<Result<Vec<_>, CaseError>>()?;
        rows.push(SepRow {
            w,
            e_w,
            ee,
            neighbors,
            chars,
            h_stored: rf.h.clone(),
            bounds: rf.bounds.clone(),
            certs,
        });
    }
    Ok(CaseData {
        id,
        family,
        mu: file.mu.clone(),
        q_min: file.q_min,
        certified: file.certified,
        constants: file.constants.clone(),
        system: SeparatingSystem { rows, q_min: file.q_min, bar: file.bar },
        raw: file.clone(),
    })
}

/// Load and validate one case.  Stored h-values are checked against
/// recomputation at q in {2, 5, 13} before the data is accepted.
pub fn load_case(id: CaseId) -> Result<CaseData, CaseError> {
    let text = case_json_text(id)?;
    let file: CaseFile = serde_json::from_str(&text)?;
    let data = parse_case_file(&file)?;
    if data.id != id {
        return Err(CaseError::Data(format!(
            "file id `{}` does not match requested `{}`",
            data.id, id
        )));
    }
    for q in [2, 5, 13] {
        let ctx = data.context(q)?;
        let session = Session::new(&ctx, &data.system);
        for row in &data.system.rows {
            let hvals = session.h_values(row);
            for (k, hv) in hvals.iter().enumerate() {
                let stored = eval_form(&row.h_stored[k], q).ok_or_else(|| {
                    CaseError::Data(format!("row {}: stored h undefined at q={}", row.w, q))
                })?;
                if stored != hv.to_rationals() {
                    return Err(CaseError::Data(format!(
                        "row {}: stored h({}) differs from recomputation at q={}",
                        row.w, row.ee[k], q
                    )));
                }
            }
        }
    }
    Ok(data)
}

// ---------------------------------------------------------------------------
// runners
// ---------------------------------------------------------------------------

fn halfspace_at(form: &[RatFunc], q: i64) -> Option<Halfspace> {
    let v = eval_form(form, q)?;
    Halfspace::from_rationals(&v).ok()
}

fn fact(name: &str, ok: bool, details: impl Into<String>) -> Check {
    Check::of(format!("fact: {}", name), ok, details)
}

/// Bar image of the Hasse cone (or the cone itself for split full-rank cases).
fn effective_cone(ctx: &ZipContext, sys_bar: bool, id: &NamedConeId) -> Result<Cone, CaseError> {
    let c = named_cone(ctx, id)?;
    if sys_bar {
        Ok(bar_cone(&c)?)
    } else {
        Ok(c)
    }
}

/// Run one case at one q: row-by-row verification, the terminal inclusions,
/// and the case's headline cone facts.
pub fn run_case(id: CaseId, q: i64) -> Result<CaseResult, CaseError> {
    let data = load_case(id)?;
    if q < 2 {
        return Err(CaseError::Group(GroupError::BadQ(q)));
    }
    if q < data.q_min {
        let reason = match id {
            CaseId::Sp6 => {
                let u = &data.constants["u"];
                format!(
                    "q = {} below the certified domain q >= {}: u(q) numerator evaluates to {} < 0, so the terminal certificate has a negative coefficient",
                    q,
                    data.q_min,
                    u.num().eval(q)
                )
            }
            _ => format!("q = {} below the certified domain q >= {}", q, data.q_min),
        };
        return Ok(CaseResult::new(
            id.as_str(),
            q,
            vec![Check::refused("q domain", reason)],
        ));
    }
    let ctx = data.context(q)?;
    let mut checks: Vec<Check> = Vec::new();
    if !data.certified {
        checks.push(Check::info(
            "exploratory case",
            "no certified tables are published for this case; only certificate-search tooling applies",
        ));
        return Ok(CaseResult::new(id.as_str(), q, checks));
    }
    let mut session = Session::new(&ctx, &data.system);
    // separating-system conditions
    checks.extend(session.validate());
    // per-row verification
    let mut row_ws: Vec<WeylElt> = data.system.rows.iter().map(|r| r.w.clone()).collect();
    row_ws.sort_by_key(|w| (ctx.weyl().length(w), w.window_string()));
    for w in &row_ws {
        checks.extend(session.verify_row(w));
    }
    // claimed bounds hold for the intersection-sum cone: the independent
    // polyhedral route, cross-checking the certificate route
    for w in &row_ws {
        let row = data.system.row(w).unwrap();
        if row.ee.is_empty() {
            continue;
        }
        let cone = session.intersection_sum_cone(w);
        for (j, b) in row.bounds.iter().enumerate() {
            let Some(h) = halfspace_at(b, q) else {
                checks.push(Check::fail(
                    format!("{} cone bound {}", w, j + 1),
                    "bound undefined at this q",
                ));
                continue;
            };
            let half = Cone::from_halfspaces(session.eff_dim(), std::slice::from_ref(&h))?;
            checks.push(Check::of(
                format!("{} cone within bound {}", w, j + 1),
                cone.included_in(&half),
                format!("{}", h),
            ));
            // derived facets imply the claimed bound by exact LP as well
            let derived = session.derive_bounds(w);
            let sources: Vec<Vec<BigRational>> =
                derived.iter().map(|f| f.to_rationals()).collect();
            let found = search_forms(&h.to_rationals(), &sources).is_certificate();
            checks.push(Check::of(
                format!("{} bound {} implied by derived facets", w, j + 1),
                found,
                format!("{} derived facets", sources.len()),
            ));
        }
    }
    checks.extend(case_conclusions(&data, &ctx, &mut session, q)?);
    Ok(CaseResult::new(id.as_str(), q, checks))
}

/// The I-dominant chamber in the coordinates the system works in.
fn chamber_eff(ctx: &ZipContext, sys_bar: bool) -> Result<Cone, CaseError> {
    effective_cone(ctx, sys_bar, &NamedConeId::XPlusI)
}

fn case_conclusions(
    data: &CaseData,
    ctx: &ZipContext,
    session: &mut Session,
    q: i64,
) -> Result<Vec<Check>, CaseError> {
    let mut checks = Vec::new();
    let sys_bar = data.system.bar;
    // The chamber condition is ambient throughout: only I-dominant weights
    // carry sections, so cone inclusions into chamber-bounded targets are
    // asserted for the chamber part of the recursion cones.
    match data.id {
        CaseId::Sp6 => {
            let terminal = WeylElt::parse_window("564", 3)?;
            let hw = named_cone(ctx, &NamedConeId::Hw)?;
            let claimed = halfspace_at(&data.system.row(&terminal).unwrap().bounds[0], q)
                .expect("terminal bound defined");
            let expect = Halfspace::from_i64(&[q * q, q, 1]).unwrap();
            checks.push(fact(
                "terminal [564] bound is the highest-weight facet",
                claimed == expect && hw.facets().contains(&expect),
                format!("{}", expect),
            ));
            let cone = session.intersection_sum_cone(&terminal);
            let half = Cone::from_halfspaces(3, &[expect])?;
            checks.push(fact(
                "intersection-sum cone of [564] within the highest-weight halfspace",
                cone.included_in(&half),
                String::new(),
            ));
            let clamped = cone.intersect(&chamber_eff(ctx, sys_bar)?)?;
            checks.push(fact(
                "chamber part of the [564] cone within the highest-weight cone",
                clamped.included_in(&hw),
                String::new(),
            ));
            let preset = zip_preset(ctx)?;
            let hasse = named_cone(ctx, &NamedConeId::Hasse)?;
            let total = hasse.sum(&clamped)?;
            checks.push(fact(
                "hasse cone + terminal cone within the zip cone",
                total.included_in(&preset),
                String::new(),
            ));
            checks.push(preset_ray_fact(ctx, sys_bar, &sp6_expected_rays(q))?);
        }
        CaseId::Gl4S31 => {
            let terminal = WeylElt::parse_window("4312", 4)?;
            let hw = effective_cone(ctx, true, &NamedConeId::Hw)?;
            let claimed = halfspace_at(&data.system.row(&terminal).unwrap().bounds[0], q)
                .expect("terminal bound defined");
            // bar of the full facet (q^2, q, 1, -(q^2+q+1))
            let expect = Halfspace::from_i64(&[q * q, q, 1]).unwrap();
            let full_facet = Halfspace::from_i64(&[q * q, q, 1, -(q * q + q + 1)]).unwrap();
            let hw_full = named_cone(ctx, &NamedConeId::Hw)?;
            checks.push(fact(
                "terminal [4312] bound is the bar of the highest-weight facet",
                claimed == expect
                    && hw_full.facets().contains(&full_facet)
                    && hw.facets().contains(&expect),
                format!("{}", expect),
            ));
            let cone = session.intersection_sum_cone(&terminal);
            let half = Cone::from_halfspaces(3, &[expect])?;
            checks.push(fact(
                "intersection-sum cone of [4312] within the highest-weight halfspace",
                cone.included_in(&half),
                String::new(),
            ));
            let clamped = cone.intersect(&chamber_eff(ctx, sys_bar)?)?;
            checks.push(fact(
                "chamber part of the [4312] cone within the highest-weight cone",
                clamped.included_in(&hw),
                String::new(),
            ));
            let preset = effective_cone(ctx, true, &NamedConeId::ZipPreset)?;
            let hasse = effective_cone(ctx, true, &NamedConeId::Hasse)?;
            checks.push(fact(
                "hasse cone + terminal cone within the zip cone",
                hasse.sum(&clamped)?.included_in(&preset),
                String::new(),
            ));
            checks.push(preset_ray_fact(ctx, sys_bar, &sp6_expected_rays(q))?);
        }
        CaseId::Gl4S22 => {
            let w3421 = WeylElt::parse_window("3421", 4)?;
            let w4312 = WeylElt::parse_window("4312", 4)?;
            let w4321 = WeylElt::parse_window("4321", 4)?;
            for (w, name) in [(&w3421, "[3421]"), (&w4312, "[4312]"), (&w4321, "[4321]")] {
                let cone = session.intersection_sum_cone(w);
                let row = data.system.row(w).unwrap();
                let ok = row.bounds.iter().all(|b| {
                    halfspace_at(b, q)
                        .and_then(|h| Cone::from_halfspaces(3, &[h]).ok())
                        .map(|half| cone.included_in(&half))
                        .unwrap_or(false)
                });
                checks.push(fact(
                    &format!("intersection-sum cone of {} within its claimed bounds", name),
                    ok,
                    String::new(),
                ));
            }
            // cone equalities C_hw = <C_Hasse> = <C_zip> = closed form
            let hw = named_cone(ctx, &NamedConeId::Hw)?;
            let hasse = named_cone(ctx, &NamedConeId::Hasse)?.saturate();
            let preset = zip_preset(ctx)?;
            let closed = {
                let mut hs = vec![Halfspace::from_i64(&[q, 1, -1, -q]).unwrap()];
                hs.push(Halfspace::from_i64(&[-1, 1, 0, 0]).unwrap());
                hs.push(Halfspace::from_i64(&[0, 0, -1, 1]).unwrap());
                Cone::from_halfspaces(4, &hs)?
            };
            checks.push(fact(
                "highest-weight cone = saturated hasse cone = zip cone = closed form",
                hw == hasse && hasse == preset && preset == closed,
                String::new(),
            ));
            checks.push(fact("hasse type", is_hasse_type(ctx), String::new()));
            let cone = session.intersection_sum_cone(&w4321);
            let clamped = cone.intersect(&chamber_eff(ctx, sys_bar)?)?;
            let hasse_bar = effective_cone(ctx, true, &NamedConeId::Hasse)?;
            let preset_bar = effective_cone(ctx, true, &NamedConeId::ZipPreset)?;
            checks.push(fact(
                "hasse cone + terminal cone within the zip cone",
                hasse_bar.sum(&clamped)?.included_in(&preset_bar),
                String::new(),
            ));
        }
        CaseId::U3S21 => {
            let terminal = WeylElt::parse_window("231", 3)?;
            let cone = session.intersection_sum_cone(&terminal);
            let bound = Halfspace::from_i64(&[1, 0]).unwrap();
            let half = Cone::from_halfspaces(2, std::slice::from_ref(&bound))?;
            checks.push(fact(
                "intersection-sum cone of [231] within a1 <= 0 (bar coordinates)",
                cone.included_in(&half),
                "full coordinates: a1 - a3 <= 0".to_string(),
            ));
            let derived = session.derive_bounds(&terminal);
            checks.push(fact(
                "derived facets of [231] contain a1 <= 0",
                derived.contains(&bound),
                String::new(),
            ));
            let lw = named_cone(ctx, &NamedConeId::Lw)?;
            let lw_closed = Cone::from_halfspaces(
                3,
                &[
                    Halfspace::from_i64(&[q - 1, 1, -q]).unwrap(),
                    Halfspace::from_i64(&[-1, 1, 0]).unwrap(),
                ],
            )?;
            checks.push(fact(
                "lowest-weight cone closed form",
                lw == lw_closed,
                String::new(),
            ));
            let hw = named_cone(ctx, &NamedConeId::Hw)?;
            let hw_closed = Cone::from_halfspaces(
                3,
                &[
                    Halfspace::from_i64(&[q, -(q - 1), -1]).unwrap(),
                    Halfspace::from_i64(&[-1, 1, 0]).unwrap(),
                ],
            )?;
            checks.push(fact(
                "highest-weight cone closed form",
                hw == hw_closed,
                String::new(),
            ));
            let preset = zip_preset(ctx)?;
            checks.push(fact("zip cone equals the lowest-weight cone", preset == lw, String::new()));
            let clamped = cone.intersect(&chamber_eff(ctx, sys_bar)?)?;
            let hasse_bar = effective_cone(ctx, true, &NamedConeId::Hasse)?;
            let preset_bar = effective_cone(ctx, true, &NamedConeId::ZipPreset)?;
            checks.push(fact(
                "hasse cone + terminal cone within the zip cone",
                hasse_bar.sum(&clamped)?.included_in(&preset_bar),
                String::new(),
            ));
        }
        CaseId::U4S31 => {
            // raw norm sums reduce to the two closed-form inequalities
            let raw = cones::norm_sum_normals(ctx, true);
            let reduced: Vec<Halfspace> = raw
                .iter()
                .map(|(_, nrm)| Halfspace::new(nrm.clone()).unwrap())
                .collect();
            let first = Halfspace::from_i64(&[q - 1, 0, 1, -q]).unwrap();
            let second = Halfspace::from_i64(&[0, -(q - 1), q, -1]).unwrap();
            checks.push(fact(
                "norm sums reduce to the two closed-form inequalities",
                reduced.len() == 2 && reduced.contains(&first) && reduced.contains(&second),
                String::new(),
            ));
            // the first inequality implies the second inside the chamber
            let mut sources = vec![first.to_rationals()];
            for k in ctx.i_set() {
                let cr = ctx.roots().coroot(&ctx.roots().simple()[*k]);
                sources.push(
                    cr.iter()
                        .map(|&c| BigRational::from_integer(BigInt::from(-c)))
                        .collect(),
                );
            }
            checks.push(fact(
                "first closed-form inequality implies the second within the chamber",
                search_forms(&second.to_rationals(), &sources).is_certificate(),
                String::new(),
            ));
            let terminal = WeylElt::parse_window("3421", 4)?;
            let cone = session.intersection_sum_cone(&terminal);
            let bound = Halfspace::from_i64(&[q - 1, 1, 0]).unwrap();
            let half = Cone::from_halfspaces(3, &[bound])?;
            checks.push(fact(
                "intersection-sum cone of [3421] within (q-1)a1 + a2 <= 0 (bar coordinates)",
                cone.included_in(&half),
                String::new(),
            ));
            let lw = named_cone(ctx, &NamedConeId::Lw)?;
            let preset = zip_preset(ctx)?;
            let closed = Cone::from_halfspaces(
                4,
                &[
                    Halfspace::from_i64(&[q - 1, 0, 1, -q]).unwrap(),
                    Halfspace::from_i64(&[-1, 1, 0, 0]).unwrap(),
                    Halfspace::from_i64(&[0, -1, 1, 0]).unwrap(),
                ],
            )?;
            checks.push(fact(
                "zip cone equals the lowest-weight cone closed form",
                preset == lw && lw == closed,
                String::new(),
            ));
            let lam = Weight::from_i64(&[q + 1, q + 1, 1, q]);
            checks.push(fact(
                "hasse weight of the first simple root lies in the lowest-weight cone",
                lw.contains_weight(&lam),
                format!("{}", lam),
            ));
            let clamped = cone.intersect(&chamber_eff(ctx, sys_bar)?)?;
            let hasse_bar = effective_cone(ctx, true, &NamedConeId::Hasse)?;
            let preset_bar = effective_cone(ctx, true, &NamedConeId::ZipPreset)?;
            checks.push(fact(
                "hasse cone + terminal cone within the zip cone",
                hasse_bar.sum(&clamped)?.included_in(&preset_bar),
                String::new(),
            ));
        }
        CaseId::Sp4 => {
            let hw = named_cone(ctx, &NamedConeId::Hw)?;
            let hasse = named_cone(ctx, &NamedConeId::Hasse)?.saturate();
            let preset = zip_preset(ctx)?;
            checks.push(fact(
                "zip cone = saturated hasse cone = highest-weight cone",
                preset == hasse && hasse == hw,
                String::new(),
            ));
            checks.push(fact("hasse type", is_hasse_type(ctx), String::new()));
            let mut expected: Vec<Vec<BigRational>> = vec![
                Weight::from_i64(&[1, -q]).to_rationals(),
                Weight::from_i64(&[-1, -1]).to_rationals(),
            ];
            expected.sort();
            checks.push(preset_ray_fact(ctx, sys_bar, &expected)?);
        }
        CaseId::Gl3S21 => {
            let hw = named_cone(ctx, &NamedConeId::Hw)?;
            let hasse = named_cone(ctx, &NamedConeId::Hasse)?.saturate();
            let preset = zip_preset(ctx)?;
            checks.push(fact(
                "zip cone = saturated hasse cone = highest-weight cone",
                preset == hasse && hasse == hw,
                String::new(),
            ));
            checks.push(fact("hasse type", is_hasse_type(ctx), String::new()));
        }
        CaseId::BnSpin2 | CaseId::BnSpin3 | CaseId::BnSpin4 => {
            checks.push(fact("hasse type", is_hasse_type(ctx), String::new()));
            let n = ctx.rank();
            let hasse = named_cone(ctx, &NamedConeId::Hasse)?.saturate();
            let mut hs = Vec::new();
            let mut v = vec![0i64; n];
            v[0] = q + 1;
            if n > 1 {
                v[1] = q - 1;
            }
            hs.push(Halfspace::from_i64(&v).unwrap());
            for k in ctx.i_set() {
                let cr = ctx.roots().coroot(&ctx.roots().simple()[*k]);
                let neg: Vec<i64> = cr.iter().map(|&c| -c).collect();
                hs.push(Halfspace::from_i64(&neg).unwrap());
            }
            let closed = Cone::from_halfspaces(n, &hs)?;
            checks.push(fact(
                "saturated hasse cone closed form",
                hasse == closed,
                format!("(q+1)a1 + (q-1)a2 <= 0 within the chamber, n = {}", n),
            ));
        }
        CaseId::U4S22Exploratory => unreachable!("handled before conclusions"),
    }
    Ok(checks)
}

fn sp6_expected_rays(q: i64) -> Vec<Vec<BigRational>> {
    let mut v = vec![
        Weight::from_i64(&[1, 0, -q]).to_rationals(),
        Weight::from_i64(&[-1, -1, -1]).to_rationals(),
        Weight::from_i64(&[1, 1, -(q * q + q)]).to_rationals(),
        Weight::from_i64(&[q + 1, -q * q, -q * q]).to_rationals(),
    ];
    v.sort();
    v
}

fn preset_ray_fact(
    ctx: &ZipContext,
    bar_coords: bool,
    expected_sorted: &[Vec<BigRational>],
) -> Result<Check, CaseError> {
    let preset = zip_preset(ctx)?;
    let eff = if bar_coords { bar_cone(&preset)? } else { preset };
    let rays: Vec<Vec<BigRational>> = eff
        .rays()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let expected: Vec<Vec<BigInt>> = expected_sorted
        .iter()
        .map(|v| {
            crate::cone::Halfspace::from_rationals(v)
                .expect("nonzero expected ray")
                .normal()
                .to_vec()
        })
        .collect();
    let got: Vec<Vec<BigInt>> = eff.rays().to_vec();
    let mut exp_sorted = expected;
    exp_sorted.sort();
    Ok(fact(
        "zip cone extremal rays",
        got == exp_sorted,
        format!("{} rays", rays.len()),
    ))
}

/// Inclusion chain of the cone diagram for one case at one q.
pub fn diagram_checks(id: CaseId, q: i64) -> Result<Vec<Check>, CaseError> {
    let data = load_case(id)?;
    let ctx = data.context(q)?;
    let mut checks = Vec::new();
    let label = |s: &str| format!("{} q={} {}", id, q, s);
    let xminus = named_cone(&ctx, &NamedConeId::XMinusL)?;
    let gs = named_cone(&ctx, &NamedConeId::Gs)?;
    let hw = named_cone(&ctx, &NamedConeId::Hw)?;
    let lw = named_cone(&ctx, &NamedConeId::Lw)?;
    let xplus = named_cone(&ctx, &NamedConeId::XPlusI)?;
    checks.push(Check::of(
        label("X-(L) within hw"),
        xminus.included_in(&hw),
        String::new(),
    ));
    checks.push(Check::of(label("GS within lw"), gs.included_in(&lw), String::new()));
    if CaseId::WITH_PRESET.contains(&id) {
        let preset = zip_preset(&ctx)?;
        checks.push(Check::of(
            label("hw within zip"),
            hw.included_in(&preset),
            String::new(),
        ));
        checks.push(Check::of(
            label("GS within zip"),
            gs.included_in(&preset),
            String::new(),
        ));
        checks.push(Check::of(
            label("zip within the chamber"),
            preset.included_in(&xplus),
            String::new(),
        ));
        if ctx.family().is_split() {
            let orb = named_cone(&ctx, &NamedConeId::Orb)?;
            let orb_chamber = orb.intersect(&xplus)?;
            checks.push(Check::of(
                label("zip within orbit cone and chamber"),
                preset.included_in(&orb_chamber),
                String::new(),
            ));
        }
    }
    Ok(checks)
}

/// Repeated `run_case` over a set of cases and q values.
pub fn sweep(ids: &[CaseId], qs: &[i64]) -> Result<SweepReport, CaseError> {
    let mut entries = Vec::new();
    for &id in ids {
        for &q in qs {
            entries.push(run_case(id, q)?);
        }
    }
    Ok(SweepReport::new(entries))
}

// ---------------------------------------------------------------------------
// extremal ray audit
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct RayAuditEntry {
    pub alpha: String,
    pub hasse_weight: Vec<i64>,
    pub generates_extremal_ray: bool,
    pub outside_gs: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RayAudit {
    pub case: String,
    pub q: i64,
    pub bar_coordinates: bool,
    pub rays: Vec<Vec<i64>>,
    pub entries: Vec<RayAuditEntry>,
}

/// Extremal rays of the preset and, per simple root, whether the partial
/// Hasse invariant weight generates one of them and lies outside the
/// Griffiths-Schmid cone.
pub fn extremal_ray_audit(id: CaseId, q: i64) -> Result<RayAudit, CaseError> {
    let data = load_case(id)?;
    let ctx = data.context(q)?;
    let preset = zip_preset(&ctx)?;
    let bar_coords = data.system.bar;
    let eff = if bar_coords { bar_cone(&preset)? } else { preset };
    let gs = named_cone(&ctx, &NamedConeId::Gs)?;
    let to_i64 = |v: &[BigInt]| -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap_or(i64::MAX)).collect()
    };
    let rays: Vec<Vec<i64>> = eff.rays().iter().map(|r| to_i64(r)).collect();
    let mut entries = Vec::new();
    for (k, alpha) in ctx.roots().simple().iter().enumerate() {
        let lam = hasse_weight(&ctx, k);
        let lam_eff = if bar_coords { bar(&lam) } else { lam.clone() };
        let primitive = Halfspace::from_rationals(&lam_eff.to_rationals())
            .map(|h| h.normal().to_vec())
            .ok();
        let extremal = primitive
            .map(|p| eff.rays().contains(&p))
            .unwrap_or(false);
        let outside = !gs.contains_weight(&lam);
        entries.push(RayAuditEntry {
            alpha: alpha.to_string(),
            hasse_weight: lam
                .coords()
                .iter()
                .map(|x| i64::try_from(x).unwrap_or(i64::MAX))
                .collect(),
            generates_extremal_ray: extremal,
            outside_gs: outside,
        });
    }
    Ok(RayAudit {
        case: id.as_str().to_string(),
        q,
        bar_coordinates: bar_coords,
        rays,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_load() {
        for id in CaseId::ALL {
            let data = load_case(id).unwrap_or_else(|e| panic!("{}: {}", id, e));
            assert_eq!(data.id, id);
        }
    }

    #[test]
    fn row_counts() {
        assert_eq!(load_case(CaseId::Sp6).unwrap().system.rows.len(), 24);
        assert_eq!(load_case(CaseId::U3S21).unwrap().system.rows.len(), 3);
        assert_eq!(load_case(CaseId::Gl4S31).unwrap().system.rows.len(), 8);
        assert_eq!(load_case(CaseId::Gl4S22).unwrap().system.rows.len(), 17);
        assert_eq!(load_case(CaseId::U4S31).unwrap().system.rows.len(), 8);
    }

    #[test]
    fn gl4_22_has_epsilon_bound_pair() {
        let data = load_case(CaseId::Gl4S22).unwrap();
        assert!(data.constants.contains_key("epsilon"));
        let w = WeylElt::parse_window("3421", 4).unwrap();
        let row = data.system.row(&w).unwrap();
        assert_eq!(row.bounds.len(), 2);
        // first bound a2 <= 0, second a1 + eps(q) a2 <= 0
        let b1 = eval_form(&row.bounds[0], 7).unwrap();
        assert_eq!(b1, Weight::from_i64(&[0, 1, 0]).to_rationals());
        let b2 = eval_form(&row.bounds[1], 7).unwrap();
        let eps = data.constants["epsilon"].eval(7).unwrap();
        assert_eq!(b2[0], BigRational::from_integer(1.into()));
        assert_eq!(b2[1], eps);
    }

    #[test]
    fn unknown_case_is_an_error() {
        assert!(matches!(CaseId::parse("nope"), Err(CaseError::UnknownCase(_))));
    }

    #[test]
    fn exploratory_case_loads_without_certificates() {
        let data = load_case(CaseId::U4S22Exploratory).unwrap();
        assert!(!data.certified);
        assert!(data.system.rows.is_empty());
        let result = run_case(CaseId::U4S22Exploratory, 5).unwrap();
        assert!(result.passed());
        assert!(result.checks.iter().any(|c| c.name == "exploratory case"));
    }

    #[test]
    fn canonical_json_is_a_fixed_point() {
        for id in CaseId::ALL {
            let text = case_json_text(id).unwrap();
            let file: CaseFile = serde_json::from_str(&text).unwrap();
            let once = canonical_case_json(&file);
            let file2: CaseFile = serde_json::from_str(&once).unwrap();
            let twice = canonical_case_json(&file2);
            assert_eq!(once, twice, "{} canonical form is not a fixed point", id);
        }
    }

    #[test]
    fn embedded_data_is_canonical() {
        for id in CaseId::ALL {
            let text = case_json_text(id).unwrap();
            let file: CaseFile = serde_json::from_str(&text).unwrap();
            assert_eq!(
                canonical_case_json(&file),
                text,
                "{}: shipped file differs from its canonical serialization",
                id
            );
        }
    }
}
