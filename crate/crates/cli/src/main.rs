//! `u3`: roots, inversion sets, closures, joins, snakes, property checks and
//! SVG figures for the rank-3 universal Coxeter group.

mod input;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use u3::biclosed::{convex_closure, join, two_closure, Bipartition, Coloring, RootSet};
use u3::checks::{run_check, CheckParams, REGISTRY};
use u3::complex::faces_of_edge;
use u3::descriptor::{roots_to_depth, weak_sep_lines, BiclosedDescriptor, Resolved, SepLines};
use u3::render::{render_svg, RenderOptions};
use u3::roots::{enumerate_roots, inversion_set, roots_up_to_height, EnumeratedRoot};
use u3::snakes::{build_snake_pair, h_snake_of_pair, verify_weak_separation, HSnake, Outcome, SnakePair, DEFAULT_BUDGET};
use u3::{Error, Word};

use input::Input;

#[derive(Parser)]
#[command(name = "u3", version, about = "Exact computations for the rank-3 universal Coxeter group")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List positive roots with depth, height, tree edge and faces.
    Roots(RootsArgs),
    /// Inversion set of a reduced word, e.g. `u3 inv 121`.
    Inv { word: String },
    /// 2-closure or convex closure of a root set file.
    Closure(ClosureArgs),
    /// Join of biclosed sets given as descriptor or root set files.
    Join(JoinArgs),
    /// Build the pair of snakes for a descriptor or bipartition file.
    Snake(SnakeArgs),
    /// Run a named property suite.
    Check(CheckArgs),
    /// Draw the disk, tessellation and Cayley tree, optionally colored.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args)]
struct RootsArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=24))]
    max_depth: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=100_000))]
    max_height: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct ClosureArgs {
    /// Root set JSON: {"height_bound": N, "roots": [[x,y,z], ...]}.
    #[arg(long)]
    input: String,
    #[arg(long, conflicts_with = "convex", required_unless_present = "convex")]
    two: bool,
    #[arg(long)]
    convex: bool,
    /// Report height.
    #[arg(long = "N", default_value_t = 20)]
    n: u64,
    /// Work height for the 2-closure.
    #[arg(long = "M", default_value_t = 60)]
    m: u64,
}

#[derive(Args)]
struct JoinArgs {
    /// Two or more descriptor or root set files.
    #[arg(long, num_args = 2.., required = true)]
    input: Vec<String>,
    #[arg(long = "N", default_value_t = 20)]
    n: u64,
    #[arg(long = "M", default_value_t = 60)]
    m: u64,
    /// Also compare with the convex closure of the union.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct SnakeArgs {
    #[arg(long)]
    input: String,
    /// Depth budget for following the snakes.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    depth: u32,
    /// Write an SVG figure here.
    #[arg(long)]
    svg: Option<String>,
    /// Deepest edge drawn in the figure.
    #[arg(long, default_value_t = 6)]
    render_depth: u32,
    /// Write the snake trace JSON here.
    #[arg(long)]
    trace: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    /// One of the registered suites (see `u3 check list`).
    name: String,
    #[arg(long)]
    depth: Option<u32>,
    #[arg(long = "N")]
    n: Option<u64>,
    #[arg(long = "M")]
    m: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Print the full report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Optional descriptor or bipartition file coloring the edges.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, default_value_t = 6)]
    depth: u32,
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    no_tessellation: bool,
    #[arg(long)]
    roots: bool,
    #[arg(long)]
    snakes: bool,
}

enum Failure {
    Usage(String),
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::NotReduced(_) | Error::InvalidGenerator(_) | Error::InvalidDescriptor(_) | Error::UnknownRoot(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Property(e.to_string()),
        }
    }
}

type Res = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
            eprintln!("error: usage: {first}");
            return ExitCode::from(2);
        }
    };
    let r = match cli.cmd {
        Cmd::Roots(a) => roots(a),
        Cmd::Inv { word } => inv(&word),
        Cmd::Closure(a) => closure(a),
        Cmd::Join(a) => join_cmd(a),
        Cmd::Snake(a) => snake(a),
        Cmd::Check(a) => check(a),
        Cmd::Render(a) => render(a),
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: usage: {}", m.replace('\n', " "));
            ExitCode::from(2)
        }
        Err(Failure::Property(m)) => {
            eprintln!("error: {}", m.replace('\n', " "));
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn write_out(path: &str, text: &str) -> Res {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

/// Integers as JSON numbers; serde_json parses arbitrary-size literals.
fn num(x: &impl std::fmt::Display) -> serde_json::Value {
    let s = x.to_string();
    serde_json::from_str(&s).unwrap_or(serde_json::Value::String(s))
}

fn roots(a: RootsArgs) -> Res {
    let list: Vec<EnumeratedRoot> = match (a.max_depth, a.max_height) {
        (None, None) => return Err(Failure::Usage("give --max-depth or --max-height".into())),
        (Some(d), None) => enumerate_roots(d, None),
        (d, Some(h)) => {
            let mut v = roots_up_to_height(h);
            if let Some(d) = d {
                v.retain(|e| e.root.depth <= d);
            }
            v
        }
    };
    match a.format {
        Format::Json => {
            let rows: Vec<_> = list
                .iter()
                .map(|e| {
                    let faces: Vec<String> = faces_of_edge(&e.edge).iter().map(|(f, _)| f.to_string()).collect();
                    let v = &e.root.vec;
                    json!({
                        "root": [num(&v.x), num(&v.y), num(&v.z)],
                        "depth": e.root.depth,
                        "height": num(&e.root.height),
                        "lower": e.edge.lower,
                        "upper": e.edge.upper(),
                        "faces": faces,
                    })
                })
                .collect();
            emit(&(serde_json::to_string_pretty(&rows).expect("json") + "\n"));
        }
        Format::Tsv => {
            let mut out = String::from("x\ty\tz\tdepth\theight\tlower\tupper\tfaces\n");
            for e in &list {
                let faces: Vec<String> = faces_of_edge(&e.edge).iter().map(|(f, _)| f.to_string()).collect();
                let v = &e.root.vec;
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    v.x,
                    v.y,
                    v.z,
                    e.root.depth,
                    e.root.height,
                    e.edge.lower,
                    e.edge.upper(),
                    faces.join(";")
                );
            }
            emit(&out);
        }
    }
    Ok(())
}

fn inv(word: &str) -> Res {
    let w = Word::parse(word)?;
    let roots: Vec<String> = inversion_set(&w).iter().map(|r| r.vec.bracket()).collect();
    println!("{}", json!({"word": w, "length": w.len(), "inversions": roots}));
    Ok(())
}

fn as_root_set(i: Input, bound: u64) -> Result<RootSet, Failure> {
    match i {
        Input::Descriptor(d) => Ok(d.resolve()?.realize_height(bound)),
        Input::Roots(s) => Ok(s),
        Input::Coloring(b) => Ok(b.red()),
    }
}

fn closure(a: ClosureArgs) -> Res {
    if a.n > a.m {
        return Err(Failure::Usage("--N must not exceed --M".into()));
    }
    let x = as_root_set(input::read(&a.input)?, 2 * a.m)?;
    let out = if a.convex {
        json!({"set": convex_closure(&x.restrict_height(a.m), a.n)})
    } else {
        let c = two_closure(&x, a.n, a.m);
        json!({"set": c.set, "stable": c.stable})
    };
    println!("{out}");
    Ok(())
}

fn join_cmd(a: JoinArgs) -> Res {
    if a.n > a.m {
        return Err(Failure::Usage("--N must not exceed --M".into()));
    }
    let sets: Vec<RootSet> =
        a.input.iter().map(|p| as_root_set(input::read(p)?, 2 * a.m)).collect::<Result<_, _>>()?;
    let j = join(&sets, a.n, a.m, a.verify);
    println!("{}", serde_json::to_string(&j).expect("json"));
    if j.verified == Some(false) {
        return Err(Failure::Property("2-closure and convex closure of the union differ".into()));
    }
    Ok(())
}

/// Depth at which separation claims are tested for lazily colored inputs.
const SEPARATION_DEPTH: u32 = 10;

fn red_blue(c: &dyn Coloring, depth: u32) -> (RootSet, RootSet) {
    let all = roots_to_depth(depth);
    let (r, b): (Vec<_>, Vec<_>) = all.iter().cloned().partition(|x| {
        let e = u3::roots::locate_root(&x.vec).expect("enumerated root");
        c.color(&e) == Some(u3::biclosed::Color::Red)
    });
    (RootSet::new(None, Some(depth), r), RootSet::new(None, Some(depth), b))
}

fn describe(sp: &SnakePair, c: &dyn Coloring, desc: Option<&Resolved>) -> Result<(String, bool), Failure> {
    let depth = c.depth_limit().unwrap_or(SEPARATION_DEPTH).min(SEPARATION_DEPTH);
    match &sp.outcome {
        Outcome::MeetAt(w) => {
            let (r, b) = red_blue(c, depth);
            let SepLines::Lines(lines) = weak_sep_lines(&BiclosedDescriptor::finite(w.clone()))? else {
                return Ok((format!("MeetAt {w}; enclosed edges: 0"), true));
            };
            let ok = lines.iter().all(|l| verify_weak_separation(&r, &b, l).separated);
            let status = if ok { "verified" } else { "failed" };
            let line = format!(
                "MeetAt {w}; enclosed edges: {}; separation: {status} ({} tangent lines)",
                sp.enclosed_edges().len(),
                lines.len()
            );
            Ok((line, ok))
        }
        Outcome::Exhausted(d) => Ok((format!("Exhausted: snakes not closed within depth {d}"), true)),
        Outcome::Limits(..) => {
            let HSnake::Enclosed(enc) = h_snake_of_pair(sp)? else { unreachable!("truncation route") };
            let arcs = if enc.certifies_distinct() { "two disjoint arcs" } else { "overlapping arcs" };
            match desc.and_then(|d| d.line().cloned()) {
                Some(l) => {
                    let (r, b) = red_blue(c, depth);
                    let inside = enc.contains_line(&l) || !enc.certifies_distinct();
                    let ok = inside && verify_weak_separation(&r, &b, &l).separated;
                    let status = if ok { "verified" } else { "failed" };
                    Ok((format!("Limits: {arcs}; H_snake = {l}; separation: {status}"), ok))
                }
                None => Ok((format!("Limits: {arcs}; H_snake enclosed by the arcs; separation: not determined"), true)),
            }
        }
    }
}

fn coloring_of(i: Input) -> Result<(Option<Resolved>, Option<Bipartition>), Failure> {
    match i {
        Input::Descriptor(d) => Ok((Some(d.resolve()?), None)),
        Input::Coloring(b) => Ok((None, Some(b))),
        Input::Roots(s) => {
            let d = s.depth_bound.ok_or_else(|| Failure::Usage("root set input needs a depth_bound".into()))?;
            Ok((None, Some(Bipartition::from_set(d, &s))))
        }
    }
}

fn snake(a: SnakeArgs) -> Res {
    let (desc, bp) = coloring_of(input::read(&a.input)?)?;
    let lazy = desc.as_ref().map(|d| d.coloring());
    let c: &dyn Coloring = match (&lazy, &bp) {
        (Some(l), _) => l,
        (None, Some(b)) => b,
        _ => unreachable!("one coloring is present"),
    };
    let sp = build_snake_pair(c, a.depth)?;
    let (line, ok) = describe(&sp, c, desc.as_ref())?;
    println!("{line}");
    if let Some(p) = &a.trace {
        write_out(p, &serde_json::to_string_pretty(&sp.trace_json()).expect("json"))?;
    }
    if let Some(p) = &a.svg {
        let opts = RenderOptions { depth: a.render_depth, ..RenderOptions::default() };
        write_out(p, &render_svg(&opts, Some(c), Some(&sp)))?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Property("weak separation failed".into()))
    }
}

fn check(a: CheckArgs) -> Res {
    if a.name == "list" {
        for c in REGISTRY {
            println!("{}\tcriterion {}\t{}", c.name, c.criterion, c.about);
        }
        return Ok(());
    }
    let p = CheckParams { depth: a.depth, n: a.n, m: a.m, samples: a.samples, seed: a.seed };
    let report = run_check(&a.name, &p).map_err(|e| Failure::Usage(e.to_string()))?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("json"));
    } else {
        println!("{}", report.summary_line());
        for f in &report.failures {
            println!("  {f}");
        }
    }
    if !report.passed {
        Err(Failure::Property(format!("check {} failed", a.name)))
    } else if !report.within_limit() {
        Err(Failure::Property(format!("check {} exceeded its time limit", a.name)))
    } else {
        Ok(())
    }
}

fn render(a: RenderArgs) -> Res {
    let mut opts = RenderOptions { depth: a.depth, ..RenderOptions::default() };
    opts.show.tessellation = !a.no_tessellation;
    opts.show.rescaled_roots = a.roots;
    let (desc, bp) = match &a.input {
        Some(p) => coloring_of(input::read(p)?)?,
        None => (None, None),
    };
    let lazy = desc.as_ref().map(|d| d.coloring());
    let c: Option<&dyn Coloring> = match (&lazy, &bp) {
        (Some(l), _) => Some(l),
        (None, Some(b)) => Some(b),
        _ => None,
    };
    let sp = match (a.snakes, c) {
        (true, Some(c)) => Some(build_snake_pair(c, DEFAULT_BUDGET)?),
        _ => None,
    };
    let svg = render_svg(&opts, c, sp.as_ref());
    match &a.out {
        Some(p) => write_out(p, &svg),
        None => {
            emit(&svg);
            Ok(())
        }
    }
}
