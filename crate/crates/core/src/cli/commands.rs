use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use super::input::{read_matrix, read_polygon};
use super::{AnalyzeArgs, ConvexArgs, FuzzArgs, GalleryArgs, Shape};
use super::{EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK, EXIT_THEOREM_VIOLATION};
use crate::bounds::{evaluate_bounds_with, fuzz_conjectures, BoundOptions, BoundReport, FuzzConfig, FuzzSummary};
use crate::convexgeom::{
    ellipse_min_width_product, ellipse_width, least_width_direction, min_width_product, polygon_area,
    reuleaux_area, reuleaux_triangle, width_pair, witness_quadrilateral, ConvexPolygon, EllipseSpec,
    DEFAULT_REFINE_TOL,
};
use crate::gallery::{run_gallery, Check, GalleryEntry};
use crate::numrange::{boundary, width_profile, DEFAULT_WIDTH_ANGLES};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Largest boundary sample written to a report.
const REPORT_BOUNDARY_LEN: usize = 512;
const PROFILE_LEN: usize = 90;

fn write_output(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

/// Pretty JSON with a trailing newline. Floats are written in the shortest
/// form that parses back to the same `f64`.
fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    write_output(out, &text)
}

fn fail(code: i32, msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    code
}

#[derive(Debug, Serialize)]
pub struct InputInfo {
    pub path: String,
    pub n: usize,
}

#[derive(Debug, Serialize)]
pub struct BoundaryReport {
    /// `[t, h(t)]` pairs.
    pub support: Vec<[f64; 2]>,
    /// `[t, re, im]` boundary points.
    pub points: Vec<[f64; 3]>,
}

#[derive(Debug, Serialize)]
pub struct WidthsReport {
    /// `[t, value]` pairs.
    pub bx: Vec<[f64; 2]>,
    pub by: Vec<[f64; 2]>,
    pub product: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub seconds: f64,
}

/// Output of `analyze`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    pub input: InputInfo,
    pub angles: usize,
    pub bounds: BoundReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<BoundaryReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub widths: Option<WidthsReport>,
    pub timing: Timing,
}

fn pairs(t: &[f64], v: &[f64]) -> Vec<[f64; 2]> {
    t.iter().zip(v).map(|(&t, &v)| [t, v]).collect()
}

pub fn analyze(args: &AnalyzeArgs) -> i32 {
    let start = Instant::now();
    let a = match read_matrix(&args.file) {
        Ok(a) => a,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    if args.angles < 8 {
        return fail(EXIT_INPUT, format!("--angles must be at least 8, got {}", args.angles));
    }
    let opts = BoundOptions {
        area_angles: args.angles,
        theorem_tol: args.theorem_tol,
        ..BoundOptions::default()
    };
    let bounds = match evaluate_bounds_with(&a, &opts) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let boundary = if args.boundary {
        match boundary(&a, args.angles) {
            Ok(s) => {
                let s = s.downsample(REPORT_BOUNDARY_LEN);
                Some(BoundaryReport {
                    support: pairs(&s.angles, &s.support),
                    points: s.angles.iter().zip(&s.points).map(|(&t, z)| [t, z.re, z.im]).collect(),
                })
            }
            Err(e) => return fail(EXIT_INPUT, e),
        }
    } else {
        None
    };
    let widths = if args.widths {
        match width_profile(&a, DEFAULT_WIDTH_ANGLES) {
            Ok(p) => Some(WidthsReport {
                bx: pairs(&p.angles, &p.bx),
                by: pairs(&p.angles, &p.by),
                product: pairs(&p.angles, &p.product),
            }),
            Err(e) => return fail(EXIT_INPUT, e),
        }
    } else {
        None
    };

    let violations = bounds.satisfied.violations();
    let report = Report {
        tool_version: TOOL_VERSION,
        input: InputInfo {
            path: args.file.display().to_string(),
            n: a.dim(),
        },
        angles: args.angles,
        bounds,
        boundary,
        widths,
        timing: Timing {
            seconds: start.elapsed().as_secs_f64(),
        },
    };
    if let Err(e) = emit_json(args.out.as_deref(), &report) {
        return fail(EXIT_INPUT, e);
    }
    if violations.is_empty() {
        EXIT_OK
    } else {
        eprintln!("theorem bound violated: {}", violations.join(", "));
        EXIT_CHECK_FAILED
    }
}

#[derive(Debug, Serialize)]
struct GalleryOutput {
    #[serde(flatten)]
    entry: GalleryEntry,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn gallery(args: &GalleryArgs) -> i32 {
    let pattern = match args.filter.as_deref().map(glob::Pattern::new).transpose() {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, format!("invalid filter: {e}")),
    };
    let results = run_gallery(pattern.as_ref());
    if results.is_empty() {
        eprintln!(
            "warning: no gallery entry matches `{}`",
            args.filter.as_deref().unwrap_or("")
        );
    }
    let mut all_pass = true;
    let mut out = Vec::with_capacity(results.len());
    for (name, result) in results {
        let item = match result {
            Ok(entry) => {
                let pass = entry.passed();
                eprintln!("{} {name} ({} checks)", if pass { "PASS" } else { "FAIL" }, entry.checks.len());
                for c in entry.failures() {
                    eprintln!("    {}: expected {:?} {}, got {} (tol {})", c.quantity, c.relation, c.expected, c.got, c.tol);
                }
                GalleryOutput { entry, pass, error: None }
            }
            Err(e) => {
                eprintln!("FAIL {name}: {e}");
                GalleryOutput {
                    entry: GalleryEntry::new(name, None),
                    pass: false,
                    error: Some(e.to_string()),
                }
            }
        };
        all_pass &= item.pass;
        out.push(item);
    }
    if let Err(e) = emit_json(args.out.as_deref(), &out) {
        return fail(EXIT_INPUT, e);
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

#[derive(Debug, Serialize)]
struct FuzzReport<'a> {
    tool_version: &'static str,
    conjecture_candidate: bool,
    theorem_violation: bool,
    summary: &'a FuzzSummary,
}

/// Fixed-width scientific notation with 17 significant digits.
fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_csv(path: &Path, records: &[crate::bounds::FuzzRecord]) -> Result<(), String> {
    let mut w = csv::Writer::from_path(path).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    let to_string = |e: csv::Error| e.to_string();
    w.write_record(["seed", "n", "ensemble", "conj1_slack", "conj2_slack"]).map_err(to_string)?;
    for r in records {
        w.write_record([
            r.seed.to_string(),
            r.n.to_string(),
            r.ensemble.tag().to_string(),
            sci(r.conj1_slack),
            sci(r.conj2_slack),
        ])
        .map_err(to_string)?;
    }
    w.flush().map_err(|e| e.to_string())
}

pub fn fuzz(args: &FuzzArgs) -> i32 {
    if args.dim == 0 || args.trials == 0 {
        return fail(EXIT_INPUT, "--dim and --trials must be positive");
    }
    if args.angles < 8 {
        return fail(EXIT_INPUT, format!("--angles must be at least 8, got {}", args.angles));
    }
    let cfg = FuzzConfig {
        area_angles: args.angles,
        theorem_tol: args.theorem_tol,
        conjecture_tol: args.conjecture_tol,
        ..FuzzConfig::new(args.ensemble, args.dim, args.trials, args.seed)
    };
    let outcome = match fuzz_conjectures(&cfg) {
        Ok(o) => o,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    if let Some(path) = &args.csv {
        if let Err(e) = write_csv(path, &outcome.records) {
            return fail(EXIT_INPUT, e);
        }
    }
    let s = &outcome.summary;
    let report = FuzzReport {
        tool_version: TOOL_VERSION,
        conjecture_candidate: s.has_conjecture_candidate(),
        theorem_violation: s.has_theorem_violation(),
        summary: s,
    };
    if let Err(e) = emit_json(args.out.as_deref(), &report) {
        return fail(EXIT_INPUT, e);
    }
    if let (Some(c1), Some(c2)) = (s.min_conj1.first(), s.min_conj2.first()) {
        eprintln!(
            "{} x {}x{}: min conj1 slack {:e} (seed {}), min conj2 slack {:e} (seed {})",
            s.trials, s.n, s.n, c1.slack, c1.seed, c2.slack, c2.seed
        );
    }
    if s.has_conjecture_candidate() {
        eprintln!("*** CONJECTURE CANDIDATE ***");
        for (label, hits) in [("conjecture 1", &s.conj1_candidates), ("conjecture 2", &s.conj2_candidates)] {
            for h in hits.iter().take(10) {
                eprintln!("    {label}: seed {} relative slack {:e}", h.seed, h.slack);
            }
        }
    }
    if s.has_theorem_violation() {
        for h in s.theorem_violations.iter().take(10) {
            eprintln!("theorem violation: seed {} relative slack {:e}", h.seed, h.slack);
        }
        return EXIT_THEOREM_VIOLATION;
    }
    EXIT_OK
}

/// Output of `convex`.
#[derive(Debug, Serialize)]
pub struct ConvexReport {
    pub tool_version: &'static str,
    pub shape: String,
    pub area: f64,
    pub min_width_product: f64,
    /// Angle of the minimizing frame.
    pub angle: f64,
    pub ratio: f64,
    pub least_width: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_area: Option<f64>,
    /// `[t, w_k, w_j]` over `[0, π/2)`.
    pub width_profile: Vec<[f64; 3]>,
    pub checks: Vec<Check>,
}

fn profile(f: impl Fn(f64) -> (f64, f64)) -> Vec<[f64; 3]> {
    (0..PROFILE_LEN)
        .map(|k| {
            let t = FRAC_PI_2 * k as f64 / PROFILE_LEN as f64;
            let (wk, wj) = f(t);
            [t, wk, wj]
        })
        .collect()
}

fn polygon_report(name: &str, poly: &ConvexPolygon, angles: usize) -> Result<ConvexReport, String> {
    let area = polygon_area(poly);
    let diam = poly.diameter();
    if poly.is_degenerate() || area <= 1e-12 * diam * diam {
        return Err(format!("degenerate {name}: zero area"));
    }
    let (angle, product) = min_width_product(poly, angles, DEFAULT_REFINE_TOL).map_err(|e| e.to_string())?;
    let (t_least, least_width) = least_width_direction(poly);
    let q = witness_quadrilateral(poly).map_err(|e| e.to_string())?;
    let witness_area = polygon_area(&q);
    let at_least = width_pair(poly, t_least).product();
    let ratio = product / area;
    let scale = diam * diam;
    let checks = vec![
        Check::at_least("ratio", 1.0, ratio, 1e-6),
        Check::at_most("ratio", 2.0, ratio, 1e-6),
        Check::at_most("min_width_product - 2 area", 0.0, product - 2.0 * area, 1e-9 * scale),
        Check::equal("2 witness_area", at_least, 2.0 * witness_area, 1e-8 * scale),
    ];
    Ok(ConvexReport {
        tool_version: TOOL_VERSION,
        shape: name.to_string(),
        area,
        min_width_product: product,
        angle,
        ratio,
        least_width,
        witness_area: Some(witness_area),
        width_profile: profile(|t| {
            let p = width_pair(poly, t);
            (p.wk, p.wj)
        }),
        checks,
    })
}

fn positive(name: &str, v: f64) -> Result<f64, String> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("--{name} must be positive, got {v}"))
    }
}

fn convex_report(args: &ConvexArgs) -> Result<ConvexReport, String> {
    if args.angles < 64 {
        return Err(format!("--angles must be at least 64, got {}", args.angles));
    }
    match args.shape {
        Shape::Triangle => {
            let r = positive("a", args.a.unwrap_or(1.0))?;
            let poly = ConvexPolygon::equilateral_triangle(r).map_err(|e| e.to_string())?;
            let mut rep = polygon_report("triangle", &poly, args.angles)?;
            let expected = 1.5 * 3f64.sqrt() * r * r;
            rep.checks.push(Check::equal("min_width_product", expected, rep.min_width_product, 1e-6 * r * r));
            rep.checks.push(Check::equal("ratio", 2.0, rep.ratio, 1e-6));
            Ok(rep)
        }
        Shape::Reuleaux => {
            let w = positive("width", args.width.unwrap_or(1.0))?;
            let poly = reuleaux_triangle(w, args.samples).map_err(|e| e.to_string())?;
            let mut rep = polygon_report("reuleaux", &poly, args.angles)?;
            rep.checks.push(Check::equal("area", reuleaux_area(w), rep.area, 1e-3 * w * w));
            rep.checks.push(Check::equal("ratio", 2.0 / (PI - 3f64.sqrt()), rep.ratio, 5e-3));
            Ok(rep)
        }
        Shape::Polygon => {
            let path = args.file.as_ref().ok_or("--shape polygon needs --file")?;
            let poly = read_polygon(path).map_err(|e| e.to_string())?;
            polygon_report("polygon", &poly, args.angles)
        }
        Shape::Ellipse => {
            let a = positive("a", args.a.unwrap_or(2.0))?;
            let b = positive("b", args.b.unwrap_or(1.0))?;
            let e = EllipseSpec::canonical(a, b).map_err(|e| e.to_string())?;
            let (angle, product) = ellipse_min_width_product(&e, args.angles, DEFAULT_REFINE_TOL).map_err(|e| e.to_string())?;
            let area = e.area();
            let ratio = product / area;
            let checks = vec![
                Check::equal("min_width_product", 4.0 * a * b, product, 1e-9 * (a * b).max(1.0)),
                Check::equal("ratio", 4.0 / PI, ratio, 1e-9),
            ];
            Ok(ConvexReport {
                tool_version: TOOL_VERSION,
                shape: "ellipse".into(),
                area,
                min_width_product: product,
                angle,
                ratio,
                least_width: 2.0 * b,
                witness_area: None,
                width_profile: profile(|t| {
                    let p = ellipse_width(&e, t);
                    (p.wk, p.wj)
                }),
                checks,
            })
        }
    }
}

pub fn convex(args: &ConvexArgs) -> i32 {
    let report = match convex_report(args) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    if let Err(e) = emit_json(args.out.as_deref(), &report) {
        return fail(EXIT_INPUT, e);
    }
    let failed: Vec<_> = report.checks.iter().filter(|c| !c.pass).collect();
    for c in &failed {
        eprintln!("check failed: {} expected {:?} {}, got {}", c.quantity, c.relation, c.expected, c.got);
    }
    if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}
