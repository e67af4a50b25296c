//! SVG slice figures: a two-dimensional generic slice of the
//! three-dimensional cones (slice plane `s . x = -1`), or a direct sector
//! picture when the effective cone dimension is two.  Labels carry exact
//! integer coordinates; all geometry is computed exactly and only projected
//! to floats for drawing.

use num_bigint::BigInt;
use zipcone::casebook::{load_case, CaseId};
use zipcone::cone::{Cone, Halfspace};
use zipcone::cones::{bar, bar_cone, hasse_weight, named_cone, zip_preset, NamedConeId};
use zipcone::zipdata::ZipContext;

pub enum PlotError {
    UnsupportedDimension(usize),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for PlotError {
    fn from(e: anyhow::Error) -> Self {
        PlotError::Other(e)
    }
}

macro_rules! plot_try {
    ($e:expr) => {
        $e.map_err(|err| PlotError::Other(anyhow::anyhow!("{}", err)))?
    };
}

struct Drawn {
    label: &'static str,
    fill: &'static str,
    stroke: &'static str,
    cone: Cone,
}

pub fn render_case(id: CaseId, q: i64, slice: Option<&[i64]>) -> Result<String, PlotError> {
    let data = plot_try!(load_case(id));
    let ctx = plot_try!(data.context(q));
    let barred = data.system.bar;
    let eff_dim = if barred { ctx.rank() - 1 } else { ctx.rank() };
    if !matches!(eff_dim, 2 | 3) || !CaseId::WITH_PRESET.contains(&id) {
        return Err(PlotError::UnsupportedDimension(eff_dim));
    }
    let eff = |cone: Cone| -> Result<Cone, PlotError> {
        if barred {
            Ok(plot_try!(bar_cone(&cone)))
        } else {
            Ok(cone)
        }
    };
    let preset = eff(plot_try!(zip_preset(&ctx)))?;
    let gs = eff(plot_try!(named_cone(&ctx, &NamedConeId::Gs)))?;
    let hw = eff(plot_try!(named_cone(&ctx, &NamedConeId::Hw)))?;
    let lw = eff(plot_try!(named_cone(&ctx, &NamedConeId::Lw)))?;
    let mut drawn = vec![Drawn {
        label: "zip cone",
        fill: "#c8dcf0",
        stroke: "#3465a4",
        cone: preset.clone(),
    }];
    if lw != hw {
        drawn.push(Drawn { label: "lw cone", fill: "#e4d9f0", stroke: "#75507b", cone: lw });
    }
    drawn.push(Drawn { label: "hw cone", fill: "#d0e8c8", stroke: "#4e9a06", cone: hw });
    drawn.push(Drawn { label: "GS cone", fill: "#f0d8c8", stroke: "#ce5c00", cone: gs });
    // the divisibility region: the part of the zip cone violating the
    // terminal bound
    let region_normal: Vec<i64> = match id {
        CaseId::Sp6 | CaseId::Gl4S31 => vec![q * q, q, 1],
        CaseId::Gl4S22 => vec![1, 0, -1],
        CaseId::U4S31 => vec![q - 1, 1, 0],
        CaseId::Sp4 | CaseId::Gl3S21 | CaseId::U3S21 => vec![1, 0],
        _ => return Err(PlotError::UnsupportedDimension(eff_dim)),
    };
    let neg: Vec<i64> = region_normal.iter().map(|c| -c).collect();
    let region_h = plot_try!(Halfspace::from_i64(&neg));
    let region = plot_try!(preset.with_halfspace(&region_h));
    // partial Hasse invariant weights in effective coordinates
    let mut points: Vec<(String, Vec<BigInt>)> = Vec::new();
    for (k, alpha) in ctx.roots().simple().iter().enumerate() {
        let lam = hasse_weight(&ctx, k);
        let lam_eff = if barred { bar(&lam) } else { lam.clone() };
        points.push((
            format!("weight[{}] = {}", alpha, lam),
            lam_eff.coords().to_vec(),
        ));
    }
    let title = format!("{} at q = {}", ctx.family(), q);
    if eff_dim == 3 {
        // default slice functional: all ones, except where a shipped ray has
        // nonnegative pairing with it (the (2,2) linear case in bar
        // coordinates, whose first Hasse weight is (1,1,q+1))
        let default_slice = if id == CaseId::Gl4S22 {
            vec![1, 1, -1]
        } else {
            vec![1; 3]
        };
        let s = slice.map(|v| v.to_vec()).unwrap_or(default_slice);
        if s.len() != 3 {
            return Err(PlotError::Other(anyhow::anyhow!("slice functional must have 3 entries")));
        }
        render_slice(&title, &ctx, barred, &drawn, &region, &points, &s)
    } else {
        render_sectors(&title, &ctx, barred, &drawn, &region, &points)
    }
}

fn to_f64(x: &BigInt) -> f64 {
    x.to_string().parse::<f64>().unwrap_or(0.0)
}


fn chamber_normals(ctx: &ZipContext, barred: bool) -> Vec<Vec<f64>> {
    ctx.i_roots()
        .iter()
        .map(|a| {
            let cr = ctx.roots().coroot(a);
            let v: Vec<i64> = if barred {
                cr[..cr.len() - 1].to_vec()
            } else {
                cr
            };
            v.iter().map(|&c| c as f64).collect()
        })
        .collect()
}

fn fmt(x: f64) -> String {
    format!("{:.4}", x)
}

struct Svg {
    body: String,
    min: (f64, f64),
    max: (f64, f64),
}

impl Svg {
    fn new() -> Self {
        Svg { body: String::new(), min: (f64::MAX, f64::MAX), max: (f64::MIN, f64::MIN) }
    }

    fn grow(&mut self, p: (f64, f64)) {
        self.min.0 = self.min.0.min(p.0);
        self.min.1 = self.min.1.min(p.1);
        self.max.0 = self.max.0.max(p.0);
        self.max.1 = self.max.1.max(p.1);
    }

    fn polygon(&mut self, pts: &[(f64, f64)], fill: &str, stroke: &str, opacity: f64) {
        if pts.len() < 2 {
            return;
        }
        for p in pts {
            self.grow(*p);
        }
        let path: Vec<String> = pts.iter().map(|p| format!("{},{}", fmt(p.0), fmt(-p.1))).collect();
        if pts.len() == 2 {
            self.body.push_str(&format!(
                "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"0.02\"/>\n",
                path.join(" "),
                stroke
            ));
        } else {
            self.body.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"{}\" fill-opacity=\"{}\" stroke=\"{}\" stroke-width=\"0.015\"/>\n",
                path.join(" "),
                fill,
                opacity,
                stroke
            ));
        }
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, dashed: bool) {
        self.grow(a);
        self.grow(b);
        self.body.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"0.01\"{}/>\n",
            fmt(a.0),
            fmt(-a.1),
            fmt(b.0),
            fmt(-b.1),
            stroke,
            if dashed { " stroke-dasharray=\"0.05,0.05\"" } else { "" }
        ));
    }

    fn point(&mut self, p: (f64, f64), label: &str) {
        self.grow(p);
        self.body.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"0.025\" fill=\"#cc0000\"/>\n",
            fmt(p.0),
            fmt(-p.1)
        ));
        self.body.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"0.07\" fill=\"#222222\">{}</text>\n",
            fmt(p.0 + 0.03),
            fmt(-p.1 - 0.02),
            label
        ));
    }

    fn finish(self, title: &str, legend: &[(&str, &str)]) -> String {
        let pad = 0.35;
        let (x0, y0) = (self.min.0 - pad, -(self.max.1 + pad));
        let w = (self.max.0 - self.min.0) + 2.0 * pad;
        let h = (self.max.1 - self.min.1) + 2.0 * pad;
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
            fmt(x0),
            fmt(y0),
            fmt(w.max(0.1)),
            fmt(h.max(0.1))
        ));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"0.09\" fill=\"#000000\">{}</text>\n",
            fmt(x0 + 0.05),
            fmt(y0 + 0.12),
            title
        ));
        for (i, (label, color)) in legend.iter().enumerate() {
            out.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-size=\"0.07\" fill=\"{}\">{}</text>\n",
                fmt(x0 + 0.05),
                fmt(y0 + 0.24 + 0.09 * i as f64),
                color,
                label
            ));
        }
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

/// Slice mode for three-dimensional effective cones.
fn render_slice(
    title: &str,
    ctx: &ZipContext,
    barred: bool,
    drawn: &[Drawn],
    region: &Cone,
    points: &[(String, Vec<BigInt>)],
    s: &[i64],
) -> Result<String, PlotError> {
    let sf: Vec<f64> = s.iter().map(|&x| x as f64).collect();
    // orthonormal basis of the slice plane
    let axis = if sf[0].abs() <= sf[1].abs() && sf[0].abs() <= sf[2].abs() {
        [1.0, 0.0, 0.0]
    } else if sf[1].abs() <= sf[2].abs() {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let cross = |a: &[f64], b: &[f64]| {
        vec![
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut u = cross(&sf, &axis);
    let nu = norm(&u);
    u.iter_mut().for_each(|x| *x /= nu);
    let mut v = cross(&sf, &u);
    let nv = norm(&v);
    v.iter_mut().for_each(|x| *x /= nv);
    let project = |ray: &[BigInt]| -> Result<(f64, f64), PlotError> {
        let dot: i64 = ray
            .iter()
            .zip(s)
            .map(|(r, &c)| i64::try_from(r).unwrap_or(0) * c)
            .sum();
        if dot >= 0 {
            return Err(PlotError::Other(anyhow::anyhow!(
                "ray ({}) does not meet the slice plane; choose another --slice",
                ray.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
            )));
        }
        let t = -1.0 / dot as f64;
        let p: Vec<f64> = ray.iter().map(|x| to_f64(x) * t).collect();
        Ok((
            p.iter().zip(&u).map(|(a, b)| a * b).sum(),
            p.iter().zip(&v).map(|(a, b)| a * b).sum(),
        ))
    };
    let mut svg = Svg::new();
    // chamber walls as dashed lines through the slice
    for n in chamber_normals(ctx, barred) {
        // direction of the wall in the slice plane and one point on it
        let d3 = cross(&sf, &n);
        if norm(&d3) < 1e-9 {
            continue;
        }
        let ss: f64 = sf.iter().map(|x| x * x).sum();
        let ns: f64 = n.iter().zip(&sf).map(|(a, b)| a * b).sum();
        let nn: f64 = n.iter().map(|x| x * x).sum();
        let denom = ss - ns * ns / nn;
        if denom.abs() < 1e-9 {
            continue;
        }
        let a = -1.0 / denom;
        let b = -a * ns / nn;
        let x0: Vec<f64> = (0..3).map(|i| a * sf[i] + b * n[i]).collect();
        let p0 = (
            x0.iter().zip(&u).map(|(p, q)| p * q).sum::<f64>(),
            x0.iter().zip(&v).map(|(p, q)| p * q).sum::<f64>(),
        );
        let dir = (
            d3.iter().zip(&u).map(|(p, q)| p * q).sum::<f64>(),
            d3.iter().zip(&v).map(|(p, q)| p * q).sum::<f64>(),
        );
        let len = (dir.0 * dir.0 + dir.1 * dir.1).sqrt().max(1e-9);
        let t = 3.0 / len;
        svg.line(
            (p0.0 - dir.0 * t, p0.1 - dir.1 * t),
            (p0.0 + dir.0 * t, p0.1 + dir.1 * t),
            "#888888",
            true,
        );
    }
    for d in drawn {
        let mut pts = Vec::new();
        for r in d.cone.rays() {
            pts.push(project(r)?);
        }
        sort_by_angle(&mut pts);
        svg.polygon(&pts, d.fill, d.stroke, 0.5);
        for (p, r) in d.cone.rays().iter().map(|r| (project(r), r)) {
            let p = p?;
            svg.grow(p);
            let coords = r.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",");
            svg.body.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-size=\"0.05\" fill=\"{}\">({})</text>\n",
                fmt(p.0 + 0.01),
                fmt(-p.1 + 0.05),
                d.stroke,
                coords
            ));
        }
    }
    // grey divisibility region
    if !region.is_zero_cone() {
        let mut pts = Vec::new();
        for r in region.rays() {
            pts.push(project(r)?);
        }
        sort_by_angle(&mut pts);
        svg.polygon(&pts, "#999999", "#555555", 0.65);
    }
    for (label, coords) in points {
        let sdot: i64 = coords
            .iter()
            .zip(s)
            .map(|(r, &c)| i64::try_from(r).unwrap_or(0) * c)
            .sum();
        if sdot < 0 {
            let p = project(coords)?;
            svg.point(p, label);
        }
    }
    let legend: Vec<(&str, &str)> = drawn
        .iter()
        .map(|d| (d.label, d.stroke))
        .chain([("divisibility region", "#555555")])
        .collect();
    Ok(svg.finish(title, &legend))
}

/// Direct sector picture for two-dimensional effective cones.
fn render_sectors(
    title: &str,
    ctx: &ZipContext,
    barred: bool,
    drawn: &[Drawn],
    region: &Cone,
    points: &[(String, Vec<BigInt>)],
) -> Result<String, PlotError> {
    let unit = |r: &[BigInt]| -> (f64, f64) {
        let x = to_f64(&r[0]);
        let y = to_f64(&r[1]);
        let n = (x * x + y * y).sqrt().max(1e-9);
        (x / n, y / n)
    };
    let mut svg = Svg::new();
    for n in chamber_normals(ctx, barred) {
        // wall through the origin orthogonal to n
        let d = (-n[1], n[0]);
        svg.line((-1.5 * d.0, -1.5 * d.1), (1.5 * d.0, 1.5 * d.1), "#888888", true);
    }
    for d in drawn {
        let mut pts: Vec<(f64, f64)> = vec![(0.0, 0.0)];
        let mut rays: Vec<(f64, f64)> = d.cone.rays().iter().map(|r| unit(r)).collect();
        sort_by_angle(&mut rays);
        pts.extend(rays.iter().map(|&(x, y)| (1.3 * x, 1.3 * y)));
        svg.polygon(&pts, d.fill, d.stroke, 0.5);
        for r in d.cone.rays() {
            let p = unit(r);
            let coords = r.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",");
            svg.body.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-size=\"0.05\" fill=\"{}\">({})</text>\n",
                fmt(1.35 * p.0),
                fmt(-1.35 * p.1),
                d.stroke,
                coords
            ));
            svg.grow((1.5 * p.0, 1.5 * p.1));
        }
    }
    if !region.is_zero_cone() && !region.rays().is_empty() {
        let mut pts: Vec<(f64, f64)> = vec![(0.0, 0.0)];
        let mut rays: Vec<(f64, f64)> = region.rays().iter().map(|r| unit(r)).collect();
        sort_by_angle(&mut rays);
        pts.extend(rays.iter().map(|&(x, y)| (1.3 * x, 1.3 * y)));
        svg.polygon(&pts, "#999999", "#555555", 0.65);
    }
    for (label, coords) in points {
        let x = to_f64(&coords[0]);
        let y = to_f64(&coords[1]);
        let n = (x * x + y * y).sqrt();
        if n > 1e-9 {
            svg.point((x / n, y / n), label);
        }
    }
    let legend: Vec<(&str, &str)> = drawn
        .iter()
        .map(|d| (d.label, d.stroke))
        .chain([("divisibility region", "#555555")])
        .collect();
    Ok(svg.finish(title, &legend))
}

fn sort_by_angle(pts: &mut [(f64, f64)]) {
    if pts.is_empty() {
        return;
    }
    let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
    let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
    pts.sort_by(|a, b| {
        let aa = (a.1 - cy).atan2(a.0 - cx);
        let bb = (b.1 - cy).atan2(b.0 - cx);
        aa.partial_cmp(&bb).unwrap_or(std::cmp::Ordering::Equal)
    });
}
