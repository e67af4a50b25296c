//! Command line front end: describe cones, verify cases, search certificates,
//! enumerate strata, sweep q, and emit SVG slice figures and JSON reports.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage error, 3 refused domain.

mod svg;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;
use zipcone::casebook::{extremal_ray_audit, load_case, run_case, CaseData, CaseId};
use zipcone::cone::Halfspace;
use zipcone::cones::{bar_cone, named_cone, NamedConeId};
use zipcone::farkas::{search_forms, FarkasOutcome};
use zipcone::report::{CaseResult, Status, SweepReport};
use zipcone::roots::{Coweight, GroupFamily};
use zipcone::sepsys::Session;
use zipcone::weyl::WeylElt;
use zipcone::zipdata::{build_context, ZipContext};

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "zipcone",
    version,
    about = "Weight cones on stacks of G-zips: exact verification and exploration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the halfspace description and extremal rays of a named cone.
    Describe(DescribeArgs),
    /// Re-verify a case's tables and headline facts; JSON report.
    Verify(VerifyArgs),
    /// Search a Farkas certificate for a target inequality over the derived
    /// facets of one stratum cone.
    Certify(CertifyArgs),
    /// List the stratum labels with lengths, neighbor root sets, and the
    /// closure order.
    Strata(StrataArgs),
    /// Draw a two-dimensional slice of the case's cones as SVG.
    Plot(PlotArgs),
    /// Run several cases over several q values; JSON report.
    Sweep(SweepArgs),
    /// Report preset extremal rays and which partial Hasse invariant weights
    /// generate them.
    RayAudit(RayAuditArgs),
}

#[derive(Args)]
struct ContextArgs {
    /// Case identifier (sp4, sp6, gl3-21, gl4-31, gl4-22, u3-21, u4-31,
    /// bn-spin-2/3/4, u4-22-exploratory).
    #[arg(long)]
    case: Option<String>,
    /// Group family (gl, u, sp, so-odd); alternative to --case.
    #[arg(long)]
    family: Option<String>,
    /// Cocharacter as comma-separated integers, e.g. "1,1,0".
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Args)]
struct DescribeArgs {
    #[command(flatten)]
    ctx: ContextArgs,
    #[arg(long)]
    q: i64,
    /// Cone id: xplusI, xminusL, gs, hasse, hasseAt=WINDOW, hw, lw, orb, zip.
    #[arg(long)]
    cone: String,
    /// Show bar coordinates (GL/U families).
    #[arg(long)]
    bar: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    case: String,
    #[arg(long)]
    q: Option<i64>,
    /// Inclusive range "LO..HI".
    #[arg(long, value_name = "LO..HI")]
    q_range: Option<String>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    case: String,
    /// Stratum window, e.g. 4312.
    #[arg(long)]
    w: String,
    #[arg(long)]
    q: i64,
    /// Target inequality "c1,c2,..." meaning c . lambda <= 0.
    #[arg(long)]
    target: String,
}

#[derive(Args)]
struct StrataArgs {
    #[arg(long)]
    case: String,
    #[arg(long, default_value_t = 2)]
    q: i64,
    /// Emit a DOT graph of the closure order instead of text.
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    case: String,
    #[arg(long)]
    q: i64,
    #[arg(long)]
    out: String,
    /// Slice functional "s1,s2,..." for the plane s . x = -1.
    #[arg(long)]
    slice: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated case ids; empty string for the empty sweep.
    #[arg(long)]
    cases: String,
    /// Comma-separated q values.
    #[arg(long)]
    q_set: String,
    /// Parallel workers over (case, q) pairs.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct RayAuditArgs {
    #[arg(long)]
    case: String,
    #[arg(long)]
    q: i64,
}

#[derive(Serialize)]
struct ToolReport {
    version: String,
    entries: Vec<CaseResult>,
    overall: Status,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Describe(a) => cmd_describe(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Strata(a) => cmd_strata(a),
        Command::Plot(a) => cmd_plot(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::RayAudit(a) => cmd_ray_audit(a),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn usage_err(msg: impl Into<String>) -> anyhow::Error {
    anyhow::anyhow!(msg.into())
}

/// Write to stdout, treating a closed pipe as success.
fn print_out(text: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.into()),
    }
}

fn parse_i64_list(s: &str) -> anyhow::Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| usage_err(format!("bad integer `{}`: {}", t, e))))
        .collect()
}

/// Context from either a case id or an explicit family/mu pair.
fn build_ctx(args: &ContextArgs, q: i64) -> anyhow::Result<(ZipContext, Option<CaseData>)> {
    if let Some(case) = &args.case {
        let id = CaseId::parse(case)?;
        let data = load_case(id)?;
        let ctx = data.context(q)?;
        return Ok((ctx, Some(data)));
    }
    let family = args
        .family
        .as_deref()
        .ok_or_else(|| usage_err("either --case or --family/--mu is required"))?;
    let mu = parse_i64_list(
        args.mu
            .as_deref()
            .ok_or_else(|| usage_err("--mu is required with --family"))?,
    )?;
    let rank = mu.len();
    let fam = match family {
        "gl" => GroupFamily::Gl(rank),
        "u" => GroupFamily::U(rank),
        "sp" => GroupFamily::Sp(rank),
        "so-odd" => GroupFamily::SoOdd(rank),
        other => return Err(usage_err(format!("unknown family `{}`", other))),
    };
    let ctx = build_context(fam, Coweight::from_i64(&mu), q)?;
    Ok((ctx, None))
}

fn cmd_describe(args: DescribeArgs) -> anyhow::Result<u8> {
    let (ctx, _) = build_ctx(&args.ctx, args.q)?;
    let id = match args.cone.to_ascii_lowercase().as_str() {
        "xplusi" => NamedConeId::XPlusI,
        "xminusl" => NamedConeId::XMinusL,
        "gs" => NamedConeId::Gs,
        "hasse" => NamedConeId::Hasse,
        "hw" => NamedConeId::Hw,
        "lw" => NamedConeId::Lw,
        "orb" => NamedConeId::Orb,
        "zip" => NamedConeId::ZipPreset,
        other => {
            if let Some(win) = other.strip_prefix("hasseat=") {
                NamedConeId::HasseAt(WeylElt::parse_window(win, ctx.rank())?)
            } else {
                return Err(usage_err(format!("unknown cone id `{}`", other)));
            }
        }
    };
    let cone = named_cone(&ctx, &id)?;
    let cone = if args.bar { bar_cone(&cone)? } else { cone };
    let mut out = String::new();
    out.push_str(&format!(
        "{} at q = {}, cone `{}`{}\n",
        ctx.family(),
        args.q,
        args.cone,
        if args.bar { " (bar coordinates)" } else { "" }
    ));
    out.push_str("halfspaces:\n");
    for h in cone.facets() {
        out.push_str(&format!("  {}\n", h));
    }
    out.push_str("extremal rays:\n");
    for r in cone.rays() {
        out.push_str(&format!(
            "  ({})\n",
            r.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
        ));
    }
    if !cone.lineality().is_empty() {
        out.push_str("lineality:\n");
        for l in cone.lineality() {
            out.push_str(&format!(
                "  ({})\n",
                l.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
            ));
        }
    }
    print_out(&out)?;
    Ok(EXIT_PASS)
}

fn parse_q_range(s: &str) -> anyhow::Result<(i64, i64)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| usage_err("expected LO..HI"))?;
    Ok((lo.trim().parse()?, hi.trim().parse()?))
}

fn emit_report(entries: Vec<CaseResult>, out: Option<&str>) -> anyhow::Result<u8> {
    let sweep = SweepReport::new(entries);
    let report = ToolReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        overall: sweep.overall,
        entries: sweep.entries,
    };
    let json = serde_json::to_string_pretty(&report)? + "\n";
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(json.as_bytes())?;
        }
        None => print_out(&json)?,
    }
    Ok(match report.overall {
        Status::Pass | Status::Info => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
        Status::Refused => EXIT_REFUSED,
    })
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let id = CaseId::parse(&args.case)?;
    let qs: Vec<i64> = match (&args.q, &args.q_range) {
        (Some(q), None) => vec![*q],
        (None, Some(r)) => {
            let (lo, hi) = parse_q_range(r)?;
            (lo..=hi).collect()
        }
        _ => return Err(usage_err("exactly one of --q or --q-range is required")),
    };
    let mut entries = Vec::new();
    for q in qs {
        entries.push(run_case(id, q)?);
    }
    emit_report(entries, args.out.as_deref())
}

fn cmd_certify(args: CertifyArgs) -> anyhow::Result<u8> {
    let id = CaseId::parse(&args.case)?;
    let data = load_case(id)?;
    let ctx = data.context(args.q)?;
    let w = WeylElt::parse_window(&args.w, ctx.rank())?;
    if !ctx.weyl().contains(&w) {
        return Err(usage_err(format!("{} is not an element of this Weyl group", w)));
    }
    let coeffs = parse_i64_list(&args.target)?;
    let mut session = Session::new(&ctx, &data.system);
    if coeffs.len() != session.eff_dim() {
        return Err(usage_err(format!(
            "target has {} coefficients but the cone dimension is {}",
            coeffs.len(),
            session.eff_dim()
        )));
    }
    let target: Vec<BigRational> = coeffs
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    let derived = session.derive_bounds(&w);
    let sources: Vec<Vec<BigRational>> = derived.iter().map(Halfspace::to_rationals).collect();
    let mut out = format!(
        "target {} over {} derived facets of the stratum cone at {}\n",
        args.target,
        sources.len(),
        w
    );
    match search_forms(&target, &sources) {
        FarkasOutcome::Certificate(cert) => {
            out.push_str("certificate found:\n");
            for (h, c) in derived.iter().zip(cert.coefficients()) {
                if !num_traits::Zero::is_zero(c) {
                    out.push_str(&format!("  {}  *  [{}]\n", c, h));
                }
            }
            print_out(&out)?;
            Ok(EXIT_PASS)
        }
        FarkasOutcome::Infeasible { witness } => {
            out.push_str(&format!(
                "infeasible; separating witness ({})\n",
                witness
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ));
            print_out(&out)?;
            Ok(EXIT_FAIL)
        }
    }
}

fn cmd_strata(args: StrataArgs) -> anyhow::Result<u8> {
    let id = CaseId::parse(&args.case)?;
    let data = load_case(id)?;
    let ctx = data.context(args.q)?;
    let reps = ctx.min_reps_i();
    // covering relations of the closure order
    let mut covers: Vec<(usize, usize)> = Vec::new();
    for (i, v) in reps.iter().enumerate() {
        for (j, w) in reps.iter().enumerate() {
            if i == j || !ctx.orbit_leq(v, w)? {
                continue;
            }
            let has_middle = reps.iter().enumerate().any(|(k, u)| {
                k != i
                    && k != j
                    && ctx.orbit_leq(v, u).unwrap_or(false)
                    && ctx.orbit_leq(u, w).unwrap_or(false)
            });
            if !has_middle {
                covers.push((i, j));
            }
        }
    }
    let mut out = String::new();
    if args.dot {
        out.push_str("digraph strata {\n  rankdir=LR;\n");
        for w in &reps {
            out.push_str(&format!(
                "  \"{}\" [label=\"{} (l={})\"];\n",
                w.window_string(),
                w,
                ctx.weyl().length(w)
            ));
        }
        for (i, j) in &covers {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                reps[*i].window_string(),
                reps[*j].window_string()
            ));
        }
        out.push_str("}\n");
    } else {
        out.push_str(&format!(
            "{} strata for {} (dimension of a stratum = length + dim P)\n",
            reps.len(),
            ctx.family()
        ));
        for w in &reps {
            let ew = ctx.weyl().lower_neighbors(w);
            out.push_str(&format!(
                "  {}  l={}  E_w = {{{}}}\n",
                w,
                ctx.weyl().length(w),
                ew.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
            ));
        }
        out.push_str("closure cover relations:\n");
        for (i, j) in &covers {
            out.push_str(&format!("  {} < {}\n", reps[*i], reps[*j]));
        }
    }
    print_out(&out)?;
    Ok(EXIT_PASS)
}

fn cmd_plot(args: PlotArgs) -> anyhow::Result<u8> {
    let id = CaseId::parse(&args.case)?;
    let slice = match &args.slice {
        Some(s) => Some(parse_i64_list(s)?),
        None => None,
    };
    match svg::render_case(id, args.q, slice.as_deref()) {
        Ok(doc) => {
            std::fs::write(&args.out, doc)?;
            print_out(&format!("wrote {}\n", args.out))?;
            Ok(EXIT_PASS)
        }
        Err(svg::PlotError::UnsupportedDimension(d)) => {
            eprintln!("error: unsupported effective dimension {}", d);
            Ok(EXIT_USAGE)
        }
        Err(svg::PlotError::Other(e)) => Err(e),
    }
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<u8> {
    let ids: Vec<CaseId> = if args.cases.trim().is_empty() {
        vec![]
    } else {
        args.cases
            .split(',')
            .map(|s| CaseId::parse(s.trim()).map_err(anyhow::Error::from))
            .collect::<anyhow::Result<_>>()?
    };
    let qs = parse_i64_list(&args.q_set)?;
    let pairs: Vec<(CaseId, i64)> = ids
        .iter()
        .flat_map(|&id| qs.iter().map(move |&q| (id, q)))
        .collect();
    let jobs = args.jobs.max(1);
    let entries: Vec<CaseResult> = if jobs == 1 || pairs.len() <= 1 {
        pairs
            .iter()
            .map(|&(id, q)| run_case(id, q).map_err(anyhow::Error::from))
            .collect::<anyhow::Result<_>>()?
    } else {
        // fan out over (case, q); results are re-sorted deterministically
        let chunks: Vec<Vec<(CaseId, i64)>> = pairs
            .chunks(pairs.len().div_ceil(jobs))
            .map(|c| c.to_vec())
            .collect();
        let mut handles = Vec::new();
        for chunk in chunks {
            handles.push(std::thread::spawn(move || {
                chunk
                    .into_iter()
                    .map(|(id, q)| run_case(id, q))
                    .collect::<Result<Vec<_>, _>>()
            }));
        }
        let mut all = Vec::new();
        for h in handles {
            all.extend(h.join().expect("worker panicked")?);
        }
        all
    };
    emit_report(entries, args.out.as_deref())
}

fn cmd_ray_audit(args: RayAuditArgs) -> anyhow::Result<u8> {
    let id = CaseId::parse(&args.case)?;
    let audit = extremal_ray_audit(id, args.q)?;
    print_out(&(serde_json::to_string_pretty(&audit)? + "\n"))?;
    Ok(EXIT_PASS)
}
