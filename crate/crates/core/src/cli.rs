//! `rectcover` command line: enumerate, support, cover, gen, render, verify.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 limit exceeded.

use crate::builder::{build_complete_support, subfamily_support};
use crate::error::Error;
use crate::geom::{Rect, SimplePolygon};
use crate::hypergraph::{verify_support, witness_points, CoverTarget, SupportGraph};
use crate::instances::{gen_antirectangle, gen_beta, gen_biclique_boundary, gen_interior_biclique, gen_random};
use crate::io::{GraphFile, PolygonFile};
use crate::maxrect::{enumerate_maximal, is_maximal, RectFamily};
use crate::planar::{lr_planarity, planar_with_face};
use crate::solver::{exact_cover, local_search_cover, CoverSolution};
use crate::svg::{render, Panel};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

const DEFAULT_LIMIT: usize = 2_000_000;

#[derive(Parser, Debug)]
#[command(name = "rectcover", version, about = "Maximal-rectangle covers and planar supports of orthogonal polygons")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List all maximal rectangles of the polygon.
    Enumerate { input: PathBuf },
    /// Build a planar support and write it as JSON (or DOT).
    Support {
        input: PathBuf,
        /// `all`, `file` (rectangles listed in the input) or comma-separated indices into the maximal family.
        #[arg(long, default_value = "all")]
        subset: String,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        check_planar: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cover the boundary, the corners or the interior with maximal rectangles.
    Cover {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Boundary)]
        target: Target,
        /// Local search swap size.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        #[arg(long)]
        exact: bool,
        /// Node limit of the exact search.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Write an instance as a polygon file.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        kb: usize,
        #[arg(long, default_value_t = 4)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        grid: i64,
        /// Defaults to RECTCOVER_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the polygon with overlays as SVG.
    Render {
        input: PathBuf,
        #[arg(long = "overlay", value_enum)]
        overlays: Vec<Overlay>,
        #[arg(long, value_enum, default_value_t = Target::Boundary)]
        target: Target,
        /// With the cover overlay: local search swap size; combined with --exact gives two panels.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a graph file against a polygon: support, planarity, shared outer face.
    Verify {
        input: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "all")]
        subset: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Boundary,
    Corner,
    Interior,
}

impl From<Target> for CoverTarget {
    fn from(t: Target) -> CoverTarget {
        match t {
            Target::Boundary => CoverTarget::Boundary,
            Target::Corner => CoverTarget::Corner,
            Target::Interior => CoverTarget::Interior,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Beta,
    Biclique,
    InteriorBiclique,
    Antirectangle,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Overlay {
    Cover,
    Support,
    Witnesses,
}

/// Failure carrying its exit code.
struct Fail(i32, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = if matches!(e, Error::LimitExceeded(_)) { EXIT_LIMIT } else { EXIT_INPUT };
        Fail(code, e.to_string())
    }
}

fn input_err(m: impl Into<String>) -> Fail {
    Fail(EXIT_INPUT, m.into())
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(Fail(code, m)) => {
            let _ = writeln!(err, "error: {m}");
            code
        }
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<i32, Fail> {
    match cmd {
        Cmd::Enumerate { input } => cmd_enumerate(&input, out),
        Cmd::Support { input, subset, verify, check_planar, dot, out: dest } => {
            cmd_support(&input, &subset, verify, check_planar, dot, dest.as_deref(), out)
        }
        Cmd::Cover { input, target, k, max_k, exact, limit } => cmd_cover(&input, target.into(), k, max_k, exact, limit, out),
        Cmd::Gen { family, kb, r, s, n, grid, seed, out: dest } => cmd_gen(family, kb, r, s, n, grid, seed, dest.as_deref(), out),
        Cmd::Render { input, overlays, target, k, exact, limit, out: dest } => {
            cmd_render(&input, &overlays, target.into(), k, exact, limit, dest.as_deref(), out)
        }
        Cmd::Verify { input, graph, subset } => cmd_verify(&input, &graph, &subset, out),
    }
}

fn read_input(path: &Path) -> Result<(PolygonFile, SimplePolygon), Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    let file = PolygonFile::from_json(&text)?;
    let poly = file.polygon()?;
    Ok((file, poly))
}

fn emit(text: &str, dest: Option<&Path>, out: &mut dyn Write) -> Result<(), Fail> {
    match dest {
        Some(p) => std::fs::write(p, text).map_err(|e| input_err(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| input_err(e.to_string())),
    }
}

fn rect_json(r: &Rect) -> serde_json::Value {
    json!([r.x1, r.y1, r.x2, r.y2])
}

fn cmd_enumerate(input: &Path, out: &mut dyn Write) -> Result<i32, Fail> {
    let (_, poly) = read_input(input)?;
    let fam = enumerate_maximal(&poly);
    let mut s = String::new();
    for (i, r) in fam.iter().enumerate() {
        s.push_str(&format!("{i} {} {} {} {}\n", r.x1, r.y1, r.x2, r.y2));
    }
    s.push_str(&format!("count {}\n", fam.len()));
    emit(&s, None, out)?;
    Ok(EXIT_OK)
}

/// The family a subset selector names, in the order the graph uses.
fn select(file: &PolygonFile, poly: &SimplePolygon, subset: &str) -> Result<RectFamily, Fail> {
    let all = enumerate_maximal(poly);
    match subset {
        "all" => Ok(all),
        "file" => {
            let fam = file.family(poly)?.ok_or_else(|| input_err("--subset file needs \"rects\" in the input"))?;
            for r in fam.iter() {
                if !is_maximal(poly, r)? {
                    return Err(Error::NotMaximalMember(*r).into());
                }
            }
            Ok(fam)
        }
        list => {
            let mut idx = Vec::new();
            for t in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let i: usize = t.parse().map_err(|_| input_err(format!("bad subset index {t:?}")))?;
                if i >= all.len() {
                    return Err(input_err(format!("subset index {i} out of range ({} maximal rectangles)", all.len())));
                }
                idx.push(i);
            }
            idx.sort_unstable();
            idx.dedup();
            Ok(all.select(&idx))
        }
    }
}

fn support_for(poly: &SimplePolygon, fam: &RectFamily) -> Result<SupportGraph, Fail> {
    if fam.rects() == enumerate_maximal(poly).rects() {
        Ok(build_complete_support(poly))
    } else {
        Ok(subfamily_support(poly, fam)?)
    }
}

/// Problems found by the support, planarity and face checks, as text lines.
fn graph_problems(poly: &SimplePolygon, fam: &RectFamily, g: &SupportGraph, support: bool, planar: bool) -> Vec<String> {
    let mut bad = Vec::new();
    if support {
        for v in verify_support(poly, fam, g, CoverTarget::Boundary) {
            bad.push(format!("witness {} splits into {} components", v.point, v.components.len()));
        }
    }
    if planar {
        if !lr_planarity(g).is_planar() {
            bad.push("graph is not planar".to_string());
        } else if !g.outer.is_empty() && !planar_with_face(g, &g.outer) {
            bad.push("outer vertices do not share a face".to_string());
        }
    }
    bad
}

fn cmd_support(
    input: &Path,
    subset: &str,
    verify: bool,
    check_planar: bool,
    dot: bool,
    dest: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let (file, poly) = read_input(input)?;
    let fam = select(&file, &poly, subset)?;
    let g = support_for(&poly, &fam)?;
    let gf = GraphFile::from_graph(&g);
    let text = if dot { gf.to_dot(Some(&fam)) } else { gf.to_json() };
    emit(&text, dest, out)?;
    let bad = graph_problems(&poly, &fam, &g, verify, check_planar);
    if bad.is_empty() {
        Ok(EXIT_OK)
    } else {
        Err(Fail(EXIT_VERIFY, bad.join("; ")))
    }
}

fn check_k(k: usize, max_k: usize) -> Result<(), Fail> {
    if k == 0 || k > max_k {
        return Err(input_err(format!("--k {k} outside 1..={max_k} (raise --max-k to allow more)")));
    }
    Ok(())
}

fn solution_json(sol: &CoverSolution, fam: &RectFamily) -> serde_json::Value {
    json!({
        "size": sol.size(),
        "chosen": sol.chosen.iter().map(|&i| rect_json(&fam.get(i))).collect::<Vec<_>>(),
        "iterations": sol.iterations,
    })
}

fn cmd_cover(
    input: &Path,
    target: CoverTarget,
    k: Option<usize>,
    max_k: usize,
    exact: bool,
    limit: usize,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let (_, poly) = read_input(input)?;
    let fam = enumerate_maximal(&poly);
    let k = if exact { k } else { Some(k.unwrap_or(2)) };
    let mut report = json!({ "target": format!("{target:?}").to_lowercase(), "maximal": fam.len() });
    let local = match k {
        Some(k) => {
            check_k(k, max_k)?;
            let sol = local_search_cover(&poly, target, k);
            report["local"] = solution_json(&sol, &fam);
            report["local"]["k"] = json!(k);
            Some(sol)
        }
        None => None,
    };
    if exact {
        let sol = exact_cover(&poly, target, limit)?;
        report["exact"] = solution_json(&sol, &fam);
        if let Some(l) = &local {
            report["ratio"] = json!(l.size() as f64 / sol.size() as f64);
        }
    }
    let mut text = serde_json::to_string(&report).expect("json value");
    text.push('\n');
    emit(&text, None, out)?;
    Ok(EXIT_OK)
}

fn default_seed() -> Result<u64, Fail> {
    match std::env::var("RECTCOVER_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| input_err(format!("RECTCOVER_SEED={v:?} is not an integer"))),
        Err(_) => Ok(0),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: Family,
    kb: usize,
    r: usize,
    s: usize,
    n: usize,
    grid: i64,
    seed: Option<u64>,
    dest: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let bundle = match family {
        Family::Beta => gen_beta(kb)?,
        Family::Biclique => gen_biclique_boundary(),
        Family::InteriorBiclique => gen_interior_biclique(r)?,
        Family::Antirectangle => gen_antirectangle(r, s)?,
        Family::Random => {
            let seed = match seed {
                Some(s) => s,
                None => default_seed()?,
            };
            let poly = gen_random(n, grid, seed)?;
            emit(&PolygonFile::from_polygon(&poly, None).to_json(), dest, out)?;
            return Ok(EXIT_OK);
        }
    };
    let mut file = PolygonFile::from_polygon(&bundle.polygon, bundle.family.as_ref());
    file.expected = bundle.expected.clone();
    emit(&file.to_json(), dest, out)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_render(
    input: &Path,
    overlays: &[Overlay],
    target: CoverTarget,
    k: Option<usize>,
    exact: bool,
    limit: usize,
    dest: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Fail> {
    let (file, poly) = read_input(input)?;
    let fam = match file.family(&poly)? {
        Some(f) => f,
        None => enumerate_maximal(&poly),
    };
    let mut panels = Vec::new();
    if overlays.contains(&Overlay::Support) {
        let g = support_for(&poly, &fam)?;
        panels.push(Panel { title: "support".into(), rects: fam.rects().to_vec(), graph: Some(g), points: Vec::new() });
    }
    if overlays.contains(&Overlay::Cover) {
        let all = enumerate_maximal(&poly);
        let mut sols = Vec::new();
        if let Some(k) = k.or(if exact { None } else { Some(2) }) {
            check_k(k, 5)?;
            sols.push((format!("local search k={k}"), local_search_cover(&poly, target, k)));
        }
        if exact {
            sols.push(("exact".to_string(), exact_cover(&poly, target, limit)?));
        }
        for (title, sol) in sols {
            let rects = sol.chosen.iter().map(|&i| all.get(i)).collect();
            panels.push(Panel { title: format!("{title}: {}", sol.size()), rects, graph: None, points: Vec::new() });
        }
    }
    if overlays.contains(&Overlay::Witnesses) {
        let points = witness_points(&poly, &fam, target).points;
        panels.push(Panel { title: "witnesses".into(), rects: Vec::new(), graph: None, points });
    }
    emit(&render(&poly, &panels), dest, out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(input: &Path, graph: &Path, subset: &str, out: &mut dyn Write) -> Result<i32, Fail> {
    let (file, poly) = read_input(input)?;
    let fam = select(&file, &poly, subset)?;
    let text = std::fs::read_to_string(graph).map_err(|e| input_err(format!("{}: {e}", graph.display())))?;
    let g = GraphFile::from_json(&text)?.to_graph()?;
    if g.n != fam.len() {
        return Err(input_err(format!("graph has {} vertices, family has {}", g.n, fam.len())));
    }
    let bad = graph_problems(&poly, &fam, &g, true, true);
    if bad.is_empty() {
        emit("ok\n", None, out)?;
        Ok(EXIT_OK)
    } else {
        emit(&bad.iter().map(|b| format!("{b}\n")).collect::<String>(), None, out)?;
        Ok(EXIT_VERIFY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("rectcover").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["enumerate", "/nonexistent/file.json"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn gen_beta_lists_expected() {
        let (code, out, _) = run_str(&["gen", "--family", "beta", "--kb", "2"]);
        assert_eq!(code, 0);
        let f = PolygonFile::from_json(&out).unwrap();
        assert_eq!(f.expected["theta_b"], 6);
        assert_eq!(f.rects.unwrap().len(), 6);
    }
}
