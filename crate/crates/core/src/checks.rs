//! Named property suites over truncations, each returning a report.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::biclosed::{faces_up_to, is_parabolic_biclosed, join, parabolic_two_closure, Bipartition, Color, Coloring, RootSet};
use crate::complex::{faces_of_edge, Face};
use crate::descriptor::{
    cji_by_definition, covers, is_complete_join_irreducible, lower_covers, roots_to_depth, weak_sep_lines,
    extreme_run, BiclosedDescriptor, LineContent, SepLines, REMOVABLE_SEARCH_HEIGHT,
};
use crate::error::Error;
use crate::geometry::{boundary_points, rescale, AffinePoint, IdealPoint};
use crate::render::{render_svg, RenderOptions};
use crate::linalg::IVec3;
use crate::roots::{enumerate_roots, inversion_set, inversion_set_by_matrix, locate_root, Edge, Root};
use crate::sampling::{random_infinite_descriptor, random_parabolic_biclosed, random_secant_descriptor, rng};
use crate::separation::{separate_point_sets, verify_separation};
use crate::snakes::{build_snake_pair, h_snake_of_pair, snake_manifold_check, verify_weak_separation, HSnake, Outcome};
use crate::word::Word;

/// A registered suite: name, acceptance criterion number, time limit.
pub struct CheckInfo {
    pub name: &'static str,
    pub criterion: u32,
    pub limit: Duration,
    pub about: &'static str,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const REGISTRY: &[CheckInfo] = &[
    CheckInfo { name: "heightnorm", criterion: 1, limit: secs(5), about: "roots have Q = 1 and height^2 Q(rescaled) = 1" },
    CheckInfo { name: "inversion-sets", criterion: 2, limit: secs(10), about: "matrix and path inversion sets agree" },
    CheckInfo { name: "rank2-parabolics", criterion: 3, limit: secs(10), about: "each root lies in two faces" },
    CheckInfo { name: "change-at-source", criterion: 4, limit: secs(30), about: "face color changes sit at the source" },
    CheckInfo { name: "finite-snake", criterion: 5, limit: secs(30), about: "snakes of Inv(w) meet at w" },
    CheckInfo { name: "theorem-main", criterion: 6, limit: secs(120), about: "biclosed sets are weakly separable" },
    CheckInfo { name: "h-snake", criterion: 7, limit: secs(120), about: "snake arcs enclose the separating line" },
    CheckInfo { name: "theorem-main2", criterion: 8, limit: secs(300), about: "2-closure of a union equals its convex closure" },
    CheckInfo { name: "close-delta", criterion: 9, limit: secs(60), about: "parabolic 2-closure of the simple roots" },
    CheckInfo { name: "covers", criterion: 10, limit: secs(120), about: "covers add exactly one root" },
    CheckInfo { name: "join-irr", criterion: 10, limit: secs(120), about: "join-irreducible classifier vs definition" },
    CheckInfo { name: "svg", criterion: 11, limit: secs(10), about: "byte-stable SVG with the expected structure" },
];

pub fn info(name: &str) -> Option<&'static CheckInfo> {
    REGISTRY.iter().find(|c| c.name == name)
}

/// Optional overrides; each suite has its own defaults.
#[derive(Clone, Debug, Default)]
pub struct CheckParams {
    pub depth: Option<u32>,
    pub n: Option<u64>,
    pub m: Option<u64>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub criterion: u32,
    pub passed: bool,
    /// Number of instances checked.
    pub checked: usize,
    /// First failures, each with enough to reproduce it.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub seconds: f64,
    pub limit_seconds: f64,
}

impl CheckReport {
    pub fn within_limit(&self) -> bool {
        self.seconds <= self.limit_seconds
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed && self.within_limit() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} criterion {} {}: {} checked, {} failures, {:.2}s (limit {:.0}s)",
            self.criterion,
            self.name,
            self.checked,
            self.failures.len(),
            self.seconds,
            self.limit_seconds
        );
        for n in &self.notes {
            s.push_str("; ");
            s.push_str(n);
        }
        s
    }
}

const MAX_REPORTED: usize = 10;

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
    failed: usize,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(what());
            }
        }
    }

    fn absorb(&mut self, results: Vec<Result<(), String>>) {
        for r in results {
            self.check(r.is_ok(), || r.err().unwrap_or_default());
        }
    }
}

/// Runs a registered suite.
pub fn run_check(name: &str, p: &CheckParams) -> Result<CheckReport, Error> {
    let info = info(name).ok_or_else(|| Error::Parse(format!("unknown check {name:?}")))?;
    let start = Instant::now();
    let t = match name {
        "heightnorm" => heightnorm(p.depth.unwrap_or(10)),
        "inversion-sets" => inversion_sets(p.depth.unwrap_or(8)),
        "rank2-parabolics" => rank2_parabolics(p.depth.unwrap_or(8)),
        "change-at-source" => change_at_source(p.depth.unwrap_or(8), p.samples.unwrap_or(50), p.seed.unwrap_or(1)),
        "finite-snake" => finite_snake(p.depth.unwrap_or(6)),
        "theorem-main" => theorem_main(p.depth.unwrap_or(10), p.samples.unwrap_or(100), p.seed.unwrap_or(2)),
        "h-snake" => h_snake(p.samples.unwrap_or(50), p.seed.unwrap_or(3)),
        "theorem-main2" => theorem_main2(p.n.unwrap_or(20), p.m.unwrap_or(60), p.samples.unwrap_or(200), p.seed.unwrap_or(7)),
        "close-delta" => close_delta(p.n.unwrap_or(20), p.m.unwrap_or(40)),
        "covers" => covers_check(p.depth.unwrap_or(12), p.samples.unwrap_or(20), p.seed.unwrap_or(4)),
        "join-irr" => join_irr(p.n.unwrap_or(12), p.samples.unwrap_or(40), p.seed.unwrap_or(5)),
        "svg" => svg_check(p.seed.unwrap_or(6)),
        _ => unreachable!("registry and dispatch agree"),
    };
    let Tally { checked, failures, failed, notes } = t;
    Ok(CheckReport {
        name: name.to_string(),
        criterion: info.criterion,
        passed: failed == 0 && checked > 0,
        checked,
        failures,
        notes,
        seconds: start.elapsed().as_secs_f64(),
        limit_seconds: info.limit.as_secs_f64(),
    })
}

fn heightnorm(depth: u32) -> Tally {
    let mut t = Tally::default();
    let roots = enumerate_roots(depth, None);
    let expected = 3 * ((1usize << depth) - 1);
    for e in &roots {
        let r = &e.root;
        let hat = rescale(r);
        let h = num_rational::BigRational::from_integer(r.height.clone());
        let ok = r.vec.is_nonnegative() && r.vec.q().is_one() && (&h * &h * hat.q_value()).is_one();
        t.check(ok, || format!("root {} fails the height norm", r.vec.bracket()));
    }
    t.check(roots.len() == expected, || format!("{} roots, expected {expected}", roots.len()));
    t.notes.push(format!("{} roots", roots.len()));
    t
}

fn inversion_sets(depth: u32) -> Tally {
    let mut t = Tally::default();
    let roots: Vec<Root> = roots_to_depth(depth).to_vec();
    let words = Word::all_up_to(depth as usize);
    let results: Vec<Result<(), String>> = words
        .par_iter()
        .map(|w| {
            let path: HashSet<Root> = inversion_set(w).into_iter().collect();
            let mat: HashSet<Root> = inversion_set_by_matrix(w, roots.iter()).into_iter().collect();
            if path == mat && path.len() == w.len() {
                Ok(())
            } else {
                Err(format!("Inv({w}): path {} roots, matrix {} roots", path.len(), mat.len()))
            }
        })
        .collect();
    t.absorb(results);
    t.notes.push(format!("{} words", words.len()));
    t
}

fn rank2_parabolics(depth: u32) -> Tally {
    let mut t = Tally::default();
    let roots = enumerate_roots(depth, None);
    for e in &roots {
        let edge = &e.edge;
        // every face whose source is a prefix of the lower vertex
        let mut cands: Vec<Face> = Vec::new();
        for i in 0..=edge.lower.len() {
            let p = edge.lower.prefix(i);
            match p.last() {
                None => cands.extend(Face::around(&p)),
                Some(g) => {
                    let [a, b] = g.others();
                    cands.push(Face::new(&p, a, b));
                }
            }
        }
        let containing: Vec<&Face> = cands.iter().filter(|f| f.position_of(edge).is_some()).collect();
        let simple_in = containing.iter().filter(|f| f.src() == &edge.lower).count();
        let listed: HashSet<Face> = faces_of_edge(edge).into_iter().map(|(f, _)| f).collect();
        let ok = containing.len() == 2
            && listed.len() == 2
            && containing.iter().all(|f| listed.contains(*f))
            && (edge.depth() == 1 || simple_in == 1);
        t.check(ok, || format!("root {} lies in {} faces, relatively simple in {simple_in}", e.root.vec.bracket(), containing.len()));
    }
    t.notes.push(format!("{} roots", roots.len()));
    t
}

/// Color-change positions on a face, counted from scratch.
fn changes_by_scan(c: &dyn Coloring, f: &Face, k: i64) -> Vec<i64> {
    let col = |j: i64| c.color(&f.edge(j));
    let mut out = Vec::new();
    if let (Some(a), Some(b)) = (col(-1), col(1)) {
        if a != b {
            out.push(0);
        }
    }
    for m in 1..k {
        for s in [-1, 1] {
            if let (Some(a), Some(b)) = (col(s * m), col(s * (m + 1))) {
                if a != b {
                    out.push(s * m);
                }
            }
        }
    }
    out
}

fn change_at_source(depth: u32, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut r = rng(seed);
    let faces = faces_up_to(depth);
    for i in 0..samples {
        let bp = random_parabolic_biclosed(&mut r, depth, 0.8);
        t.check(is_parabolic_biclosed(&bp, depth, depth as usize), || format!("sample {i} (seed {seed}) is not parabolic biclosed"));
        for f in &faces {
            let ch = changes_by_scan(&bp, f, 6);
            let ok = ch.len() <= 2 && (ch.is_empty() || ch.contains(&0));
            t.check(ok, || format!("sample {i} (seed {seed}): face {f} changes at {ch:?}"));
        }
    }
    t.notes.push(format!("{samples} colorings, {} faces each", faces.len()));
    t
}

fn finite_snake(max_len: u32) -> Tally {
    let mut t = Tally::default();
    let words = Word::all_up_to(max_len as usize);
    let results: Vec<Result<(), String>> = words
        .par_iter()
        .map(|w| {
            let depth = w.len() as u32 + 3;
            let inv: HashSet<Root> = inversion_set(w).into_iter().collect();
            let bp = Bipartition::from_predicate(depth, |r| inv.contains(r));
            let sp = build_snake_pair(&bp, depth).map_err(|e| format!("{w}: {e}"))?;
            if sp.outcome != Outcome::MeetAt(w.clone()) {
                return Err(format!("{w}: outcome {:?}", sp.outcome));
            }
            let path: HashSet<Edge> = (1..=w.len()).map(|i| Edge::into_vertex(&w.prefix(i)).unwrap()).collect();
            if sp.enclosed_edges() != path {
                return Err(format!("{w}: enclosed edges differ from the path"));
            }
            let rep = snake_manifold_check(&sp, &bp, depth - 2);
            if !rep.ok() {
                return Err(format!("{w}: {}", rep.problems.join("; ")));
            }
            Ok(())
        })
        .collect();
    t.absorb(results);
    t.notes.push(format!("{} words of length 1..={max_len}", words.len()));
    t
}

/// Removes roots on `line` (if any), then certifies hull disjointness.
fn separation_case(d: &BiclosedDescriptor, depth: u32) -> Result<(), String> {
    let r = d.resolve().map_err(|e| e.to_string())?;
    let all = roots_to_depth(depth);
    let line = match weak_sep_lines(d).map_err(|e| e.to_string())? {
        SepLines::AtInfinity => None,
        SepLines::Lines(ls) => Some(ls[0].clone()),
    };
    let off = |x: &Root| line.as_ref().map_or(true, |l| l.side_of_vec(&x.vec) != 0);
    let (red, blue): (Vec<&Root>, Vec<&Root>) = all.iter().filter(|x| off(x)).partition(|x| r.contains(&x.vec));
    let rp: Vec<AffinePoint> = red.iter().map(|x| rescale(x)).collect();
    let bp: Vec<AffinePoint> = blue.iter().map(|x| rescale(x)).collect();
    // an empty side is separated by any line
    if !rp.is_empty() && !bp.is_empty() {
        let sep = separate_point_sets(&rp, &bp);
        if !sep.is_line() {
            return Err(format!("{d}: hulls meet"));
        }
        if !verify_separation(&sep, &rp, &bp) {
            return Err(format!("{d}: separating line fails verification"));
        }
    }
    if let Some(l) = &line {
        let rs = RootSet::new(None, Some(depth), all.iter().filter(|x| r.contains(&x.vec)).cloned());
        let bs = RootSet::new(None, Some(depth), all.iter().filter(|x| !r.contains(&x.vec)).cloned());
        if !verify_weak_separation(&rs, &bs, l).separated {
            return Err(format!("{d}: not weakly separated by {l}"));
        }
    }
    Ok(())
}

fn theorem_main(depth: u32, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut ds: Vec<BiclosedDescriptor> = Vec::new();
    let mut words = vec![Word::identity()];
    words.extend(Word::all_up_to(6));
    for w in &words {
        ds.push(BiclosedDescriptor::finite(w.clone()));
        ds.push(BiclosedDescriptor::cofinite(w.clone()));
    }
    let mut r = rng(seed);
    ds.extend((0..samples).map(|_| random_infinite_descriptor(&mut r)));
    let results: Vec<Result<(), String>> = ds.par_iter().map(|d| separation_case(d, depth)).collect();
    t.absorb(results);
    t.notes.push(format!("{} finite/cofinite, {samples} infinite", 2 * words.len()));
    t
}

fn h_snake(samples: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut r = rng(seed);
    let ds: Vec<BiclosedDescriptor> = (0..samples).map(|_| random_secant_descriptor(&mut r)).collect();
    let results: Vec<Result<(), String>> = ds
        .par_iter()
        .map(|d| {
            let res = d.resolve().map_err(|e| e.to_string())?;
            let line = res.line().expect("secant").clone();
            let c = res.coloring();
            let pts = boundary_points(&line);
            let mut prev = None;
            for budget in [8, 16, 24] {
                let sp = build_snake_pair(&c, budget).map_err(|e| format!("{d}: {e}"))?;
                let enc = match h_snake_of_pair(&sp) {
                    Ok(HSnake::Enclosed(enc)) => enc,
                    _ => return Err(format!("{d}: budget {budget} outcome {:?}", sp.outcome)),
                };
                if budget == 24 && !enc.contains_line(&line) {
                    return Err(format!("{d}: arcs at budget 24 miss the line"));
                }
                for p in &pts {
                    let p = IdealPoint::Implicit(p.clone());
                    if !(enc.arc1.contains(&p) || enc.arc2.contains(&p)) {
                        return Err(format!("{d}: budget {budget} arcs miss an endpoint"));
                    }
                }
                if let Some((a1, a2)) = &prev {
                    if !(crate::geometry::Arc::contains_arc(a1, &enc.arc1) && crate::geometry::Arc::contains_arc(a2, &enc.arc2)) {
                        return Err(format!("{d}: arcs at budget {budget} do not nest"));
                    }
                }
                prev = Some((enc.arc1, enc.arc2));
            }
            Ok(())
        })
        .collect();
    t.absorb(results);
    t.notes.push(format!("{samples} secant descriptors"));
    t
}

fn theorem_main2(n: u64, m: u64, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut r = rng(seed);
    let inputs: Vec<Vec<BiclosedDescriptor>> = (0..samples)
        .map(|i| {
            let k = if i % 2 == 0 { 2 } else { 3 };
            (0..k).map(|_| crate::sampling::random_descriptor(&mut r)).collect()
        })
        .collect();
    let outcomes: Vec<(bool, Result<(), String>)> = inputs
        .par_iter()
        .enumerate()
        .map(|(i, ds)| {
            let realize = |bound: u64| -> Result<Vec<RootSet>, String> {
                ds.iter().map(|d| d.resolve().map(|x| x.realize_height(bound)).map_err(|e| e.to_string())).collect()
            };
            let names = || ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" + ");
            let sets = match realize(2 * m) {
                Ok(s) => s,
                Err(e) => return (false, Err(e)),
            };
            let j = join(&sets, n, m, true);
            let bad = |msg: &str| Err(format!("sample {i} (seed {seed}) {}: {msg}", names()));
            if j.stable {
                return (true, if j.verified == Some(true) { Ok(()) } else { bad("2-closure differs from convex closure") });
            }
            let m2 = 120.max(2 * m);
            let sets = match realize(2 * m2) {
                Ok(s) => s,
                Err(e) => return (false, Err(e)),
            };
            let j2 = join(&sets, n, m2, true);
            (false, if j2.verified == Some(true) { Ok(()) } else { bad("unstable, and the rerun disagrees") })
        })
        .collect();
    let stable = outcomes.iter().filter(|(s, _)| *s).count();
    t.absorb(outcomes.into_iter().map(|(_, r)| r).collect());
    let ratio = stable as f64 / samples.max(1) as f64;
    t.check(ratio >= 0.95, || format!("stability flag held in {stable}/{samples} samples"));
    t.notes.push(format!("stable {stable}/{samples}"));
    t
}

fn close_delta(n: u64, m: u64) -> Tally {
    let mut t = Tally::default();
    let delta = RootSet::with_height(m, Root::simples());
    let c = parabolic_two_closure(&delta, n, m);
    let all = crate::truncation::Truncation::by_height(n);
    for r in &all.roots {
        t.check(c.set.contains(r), || format!("root {} missing from the closure", r.vec.bracket()));
    }
    t.notes.push(format!("{} roots of height <= {n}", all.len()));
    t
}

fn covers_check(depth: u32, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut ds = Vec::new();
    let mut words = vec![Word::identity()];
    words.extend(Word::all_up_to(4));
    for w in words {
        ds.push(BiclosedDescriptor::finite(w.clone()));
        ds.push(BiclosedDescriptor::cofinite(w));
    }
    let mut r = rng(seed);
    ds.extend((0..samples).map(|_| random_infinite_descriptor(&mut r)));
    let pairs: Vec<(BiclosedDescriptor, BiclosedDescriptor)> = ds
        .iter()
        .flat_map(|d| {
            let up = covers(d).unwrap_or_default().into_iter().map(|u| (d.clone(), u));
            let down = lower_covers(d).unwrap_or_default().into_iter().map(|l| (l, d.clone()));
            up.chain(down).collect::<Vec<_>>()
        })
        .collect();
    let results: Vec<Result<(), String>> = pairs
        .par_iter()
        .map(|(lo, hi)| {
            let (rl, rh) = (lo.resolve().map_err(|e| e.to_string())?, hi.resolve().map_err(|e| e.to_string())?);
            let a = rl.realize_depth(depth);
            let b = rh.realize_depth(depth);
            // boundary steps can add a root deeper than the truncation; those
            // lie on the line, in the extreme runs from either end
            let mut extra: Vec<IVec3> = Vec::new();
            if let Some(LineContent::Rank2 { left, right }) = rh.content() {
                for v in extreme_run(&left.vec, &right.vec, 12).into_iter().chain(extreme_run(&right.vec, &left.vec, 12)) {
                    if locate_root(&v).map_or(true, |e| e.depth() > depth) && !extra.contains(&v) {
                        extra.push(v);
                    }
                }
            }
            if extra.iter().any(|v| rl.contains(v) && !rh.contains(v)) {
                return Err(format!("{lo} < {hi}: a deep line root is lost"));
            }
            let gained = extra.iter().filter(|v| rh.contains(v) && !rl.contains(v)).count();
            let diff = b.difference(&a).len() + gained;
            if a.is_subset(&b) && diff == 1 {
                Ok(())
            } else {
                Err(format!("{lo} < {hi}: difference has {diff} roots"))
            }
        })
        .collect();
    t.absorb(results);
    t.notes.push(format!("{} cover pairs from {} descriptors", pairs.len(), ds.len()));
    t
}

fn join_irr(n: u64, samples: usize, seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut ds = Vec::new();
    let mut words = vec![Word::identity()];
    words.extend(Word::all_up_to(4));
    for w in words {
        ds.push(BiclosedDescriptor::finite(w));
    }
    let finite = ds.len();
    let mut r = rng(seed);
    // the definition test can only reach boundary roots of moderate height
    let reachable = |d: &BiclosedDescriptor| match d.resolve().ok().as_ref().and_then(|x| x.content().cloned()) {
        Some(LineContent::Rank2 { left, right }) => extreme_run(&left.vec, &right.vec, 6)
            .into_iter()
            .chain(extreme_run(&right.vec, &left.vec, 6))
            .all(|v| v.sum() <= BigInt::from(REMOVABLE_SEARCH_HEIGHT)),
        _ => true,
    };
    let mut skipped = 0;
    while ds.len() < finite + samples {
        let d = random_infinite_descriptor(&mut r);
        if reachable(&d) {
            ds.push(d);
        } else {
            skipped += 1;
        }
    }
    let results: Vec<(bool, Result<(), String>)> = ds
        .par_iter()
        .map(|d| {
            let claim = is_complete_join_irreducible(d);
            // the truncation must hold every inversion of a finite word
            let n = match d {
                BiclosedDescriptor::Finite { word } => {
                    inversion_set(word).iter().map(|x| x.height_u64()).max().unwrap_or(0).max(n)
                }
                _ => n,
            };
            let res = match cji_by_definition(d, n) {
                Ok(ev) if ev.join_irreducible == claim => Ok(()),
                Ok(ev) => Err(format!("{d}: classifier {claim}, definition {} ({ev:?})", ev.join_irreducible)),
                Err(e) => Err(format!("{d}: {e}")),
            };
            (claim, res)
        })
        .collect();
    let positive = results.iter().filter(|(c, _)| *c).count();
    t.absorb(results.into_iter().map(|(_, r)| r).collect());
    t.notes.push(format!(
        "{finite} finite, {samples} infinite, {positive} join-irreducible; {skipped} draws skipped for line roots above height {REMOVABLE_SEARCH_HEIGHT}"
    ));
    t
}

fn svg_check(seed: u64) -> Tally {
    let mut t = Tally::default();
    let mut r = rng(seed);
    let ds = [BiclosedDescriptor::finite(Word::from_indices(&[1, 2]).unwrap()), random_secant_descriptor(&mut r)];
    let opts = RenderOptions::default();
    for d in &ds {
        let Ok(res) = d.resolve() else {
            t.check(false, || format!("{d}: invalid"));
            continue;
        };
        let c = res.coloring();
        let Ok(sp) = build_snake_pair(&c, 12) else {
            t.check(false, || format!("{d}: no snakes"));
            continue;
        };
        let a = render_svg(&opts, Some(&c), Some(&sp));
        let b = render_svg(&opts, Some(&c), Some(&sp));
        t.check(a == b, || format!("{d}: output not byte-stable"));
        let red = enumerate_roots(opts.depth, None).iter().filter(|e| c.color(&e.edge) == Some(Color::Red)).count();
        let total = 3 * ((1usize << opts.depth) - 1);
        t.check(a.matches(r#"class="snake""#).count() == 2, || format!("{d}: expected two snake polylines"));
        t.check(a.matches(r#"class="edge red""#).count() == red, || format!("{d}: red edge count"));
        t.check(a.matches(r#"class="edge blue""#).count() == total - red, || format!("{d}: blue edge count"));
    }
    t
}
