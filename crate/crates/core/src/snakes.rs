//! Snakes: curves through the faces of the Cayley tree that separate red
//! edges from blue ones. Built forward from `v_id`, one segment per face with
//! a color change; the outcome is a meeting vertex (finite sets) or two arcs
//! of `∂𝔻` enclosing the limit points.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use crate::biclosed::{faces_up_to, Color, Coloring, RootSet};
use crate::complex::Face;
use crate::descriptor::BiclosedDescriptor;
use crate::error::Error;
use crate::geometry::{boundary_points, AffLine, AffinePoint, Arc, IdealPoint};
use crate::linalg::{act, IVec3};
use crate::roots::{Edge, Root};
use crate::word::{Generator, Word};

/// Default depth budget for following snakes.
pub const DEFAULT_BUDGET: u32 = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SegmentEnd {
    /// The second color change on the face boundary.
    Vertex(Word),
    /// No second change within the scanned window of `window` edges per side.
    Boundary { window: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SnakeSegment {
    pub face: Face,
    pub from: Word,
    pub to: SegmentEnd,
    /// Signed position of `to` on the face boundary (0 for boundary ends).
    pub position: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SnakeEnd {
    /// The snake stops at a vertex whose lower edge is the odd color.
    Head(Word),
    /// The last segment runs to `∂𝔻` through its face.
    Boundary { face: Face, window: usize },
    /// The next face lies beyond the depth budget.
    Budget(Word),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snake {
    pub segments: Vec<SnakeSegment>,
    pub end: SnakeEnd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    MeetAt(Word),
    Limits(Arc, Arc),
    Exhausted(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakePair {
    pub s1: Snake,
    pub s2: Snake,
    pub outcome: Outcome,
    pub budget: u32,
}

fn change(c: &dyn Coloring, a: &Edge, b: &Edge) -> Option<bool> {
    Some(c.color(a)? != c.color(b)?)
}

/// Vertex positions `j` (of `u_j`) on the boundary of `f` where two boundary
/// edges of different colors meet, scanning `β_{±1}, …, β_{±k}` as far as the
/// coloring is known. At most two, with `0` among them when nonempty.
pub fn color_changes(c: &dyn Coloring, f: &Face, k: usize) -> Result<Vec<i64>, Error> {
    let mut out = Vec::new();
    if k == 0 {
        return Ok(out);
    }
    match change(c, &f.edge(-1), &f.edge(1)) {
        Some(true) => out.push(0),
        Some(false) => {}
        None => return Ok(out),
    }
    for m in 1..k as i64 {
        for s in [1, -1] {
            if let Some(true) = change(c, &f.edge(s * m), &f.edge(s * (m + 1))) {
                out.push(s * m);
            }
        }
    }
    if out.len() > 2 || (!out.is_empty() && out[0] != 0) {
        return Err(Error::NotParabolicBiclosed { face: f.to_string(), positions: out });
    }
    Ok(out)
}

fn limit(c: &dyn Coloring, budget: u32) -> u32 {
    c.depth_limit().map_or(budget, |d| d.min(budget))
}

/// The face with source `v` when the two upper edges of `v` differ in color.
fn next_face(c: &dyn Coloring, v: &Word) -> Option<Face> {
    let [a, b] = v.last().expect("non-identity").others();
    let ea = Edge::new(v.clone(), a).ok()?;
    let eb = Edge::new(v.clone(), b).ok()?;
    if change(c, &ea, &eb)? {
        Some(Face::new(v, a, b))
    } else {
        None
    }
}

fn follow(c: &dyn Coloring, start: Face, budget: u32) -> Result<Snake, Error> {
    let mut segments = Vec::new();
    let mut face = start;
    loop {
        let src = face.src().clone();
        let k = (budget as usize).saturating_sub(src.len());
        let ch = color_changes(c, &face, k)?;
        if ch.len() < 2 {
            segments.push(SnakeSegment { face: face.clone(), from: src, to: SegmentEnd::Boundary { window: k }, position: 0 });
            return Ok(Snake { segments, end: SnakeEnd::Boundary { face, window: k } });
        }
        let m = ch[1];
        let v = face.vertex(m);
        segments.push(SnakeSegment { face: face.clone(), from: src, to: SegmentEnd::Vertex(v.clone()), position: m });
        if v.len() as u32 >= budget {
            return Ok(Snake { segments, end: SnakeEnd::Budget(v) });
        }
        match next_face(c, &v) {
            Some(f) => face = f,
            None => return Ok(Snake { segments, end: SnakeEnd::Head(v) }),
        }
    }
}

/// Builds both snakes from `v_id` and classifies the outcome. The budget is
/// clipped to the depth the coloring knows.
pub fn build_snake_pair(c: &dyn Coloring, budget: u32) -> Result<SnakePair, Error> {
    let budget = limit(c, budget);
    if budget == 0 {
        return Err(Error::OutsideTruncation);
    }
    let id = Word::identity();
    let [g1, g2, g3] = Generator::ALL;
    let simple = |g| c.color(&Edge::new(id.clone(), g).unwrap()).ok_or(Error::OutsideTruncation);
    let cols = [simple(g1)?, simple(g2)?, simple(g3)?];
    let starts: Vec<Face> = [(g1, g2), (g1, g3), (g2, g3)]
        .into_iter()
        .filter(|(a, b)| cols[a.pos()] != cols[b.pos()])
        .map(|(a, b)| Face::new(&id, a, b))
        .collect();
    if starts.is_empty() {
        return Err(Error::Degenerate);
    }
    let (s1, s2) = rayon::join(|| follow(c, starts[0].clone(), budget), || follow(c, starts[1].clone(), budget));
    let (s1, s2) = (s1?, s2?);
    let outcome = match (&s1.end, &s2.end) {
        (SnakeEnd::Head(a), SnakeEnd::Head(b)) if a == b => Outcome::MeetAt(a.clone()),
        (SnakeEnd::Head(a), SnakeEnd::Head(b)) => {
            return Err(Error::NotParabolicBiclosed { face: format!("heads {a} and {b}"), positions: Vec::new() })
        }
        (SnakeEnd::Head(_), _) | (_, SnakeEnd::Head(_)) => Outcome::Exhausted(budget),
        _ => Outcome::Limits(end_arc(&s1.end)?, end_arc(&s2.end)?),
    };
    Ok(SnakePair { s1, s2, outcome, budget })
}

fn point(v: &IVec3) -> AffinePoint {
    AffinePoint::from_homogeneous(v).expect("ideal points of positive vectors")
}

/// The two endpoints of `Ĥ_β` for the edge's root `β = w·α_g`:
/// `w(α_g + α_x)` for the other generators `x`.
pub fn mirror_ends(e: &Edge) -> [AffinePoint; 2] {
    let g = IVec3::basis(e.gen);
    e.gen.others().map(|x| point(&act(&e.lower, &(g.clone() + IVec3::basis(x)))))
}

/// The arc of `∂𝔻` beyond `Ĥ_β` (away from `O`) for the lower edge of `v`.
pub fn far_arc(v: &Word) -> Result<Arc, Error> {
    let Some(e) = Edge::into_vertex(v) else { return Ok(Arc::Full) };
    let [x, y] = e.gen.others();
    let inner = act(v, &(IVec3::basis(x) + IVec3::basis(y)));
    let [a, b] = mirror_ends(&e);
    Arc::through(&a, &b, &point(&inner))
}

/// Arc around a face's ideal point bounded by the far mirror endpoints of
/// `β_{±k}`.
pub fn face_arc(f: &Face, k: usize) -> Result<Arc, Error> {
    let q = f.ideal_point();
    let far = |j: i64| {
        let ends = mirror_ends(&f.edge(j));
        if ends[0] == q {
            ends[1].clone()
        } else {
            ends[0].clone()
        }
    };
    Arc::through(&far(-(k as i64)), &far(k as i64), &q)
}

/// Arc of `∂𝔻` known to contain the limit point of a snake with this end.
pub fn end_arc(end: &SnakeEnd) -> Result<Arc, Error> {
    match end {
        SnakeEnd::Head(_) => Err(Error::FiniteOutcome),
        SnakeEnd::Budget(v) => far_arc(v),
        SnakeEnd::Boundary { face, window } if *window >= 1 => face_arc(face, *window),
        SnakeEnd::Boundary { face, .. } => far_arc(face.src()),
    }
}

impl Snake {
    /// Vertices visited: the source of each segment, then the final vertex.
    pub fn vertices(&self) -> Vec<Word> {
        let mut out: Vec<Word> = self.segments.iter().map(|s| s.from.clone()).collect();
        if let Some(SnakeSegment { to: SegmentEnd::Vertex(v), .. }) = self.segments.last() {
            out.push(v.clone());
        }
        out
    }
}

/// Boundary edges of a segment's face between `from` and `to`: the part of
/// the face boundary the segment cuts off.
pub fn inner_path(s: &SnakeSegment) -> Vec<Edge> {
    match s.to {
        SegmentEnd::Vertex(_) => (1..=s.position.abs()).map(|j| s.face.edge(j * s.position.signum())).collect(),
        SegmentEnd::Boundary { .. } => Vec::new(),
    }
}

impl SnakePair {
    pub fn segments(&self) -> impl Iterator<Item = &SnakeSegment> {
        self.s1.segments.iter().chain(self.s2.segments.iter())
    }

    /// Edges cut off by the segments; for a meeting pair, the edges enclosed.
    pub fn enclosed_edges(&self) -> HashSet<Edge> {
        self.segments().flat_map(inner_path).collect()
    }

    /// Snake trace: per snake, the ordered segments.
    pub fn trace_json(&self) -> Value {
        let seg = |s: &SnakeSegment| {
            json!({
                "face": s.face,
                "from_word": s.from,
                "to": match &s.to {
                    SegmentEnd::Vertex(v) => json!(v),
                    SegmentEnd::Boundary { .. } => json!("boundary"),
                },
            })
        };
        let outcome = match &self.outcome {
            Outcome::MeetAt(w) => json!({"kind": "meet_at", "word": w}),
            Outcome::Limits(..) => json!({"kind": "limits"}),
            Outcome::Exhausted(d) => json!({"kind": "exhausted", "depth": d}),
        };
        json!({
            "s1": self.s1.segments.iter().map(seg).collect::<Vec<_>>(),
            "s2": self.s2.segments.iter().map(seg).collect::<Vec<_>>(),
            "outcome": outcome,
        })
    }
}

/// Problems found by [`snake_manifold_check`]; empty means the check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ManifoldReport {
    pub problems: Vec<String>,
    pub faces_checked: usize,
}

impl ManifoldReport {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Checks that the pair is a 1-manifold through every face with a color
/// change (sources of length at most `depth`), that each snake visits a weak
/// order chain, and that each segment separates its face's boundary window
/// into a red side and a blue side.
pub fn snake_manifold_check(sp: &SnakePair, c: &dyn Coloring, depth: u32) -> ManifoldReport {
    let mut rep = ManifoldReport::default();
    let mut degree: HashMap<Word, usize> = HashMap::new();
    let faces: HashSet<&Face> = sp.segments().map(|s| &s.face).collect();
    for s in sp.segments() {
        *degree.entry(s.from.clone()).or_default() += 1;
        if let SegmentEnd::Vertex(v) = &s.to {
            *degree.entry(v.clone()).or_default() += 1;
        }
    }
    let open_ends: Vec<&Word> = [&sp.s1.end, &sp.s2.end]
        .into_iter()
        .filter_map(|e| match e {
            SnakeEnd::Budget(v) => Some(v),
            _ => None,
        })
        .collect();
    for (v, d) in &degree {
        let expect = if open_ends.contains(&v) { open_ends.iter().filter(|x| **x == v).count() } else { 2 };
        if *d != expect {
            rep.problems.push(format!("vertex {v} has {d} incident segments"));
        }
    }
    for snake in [&sp.s1, &sp.s2] {
        let vs = snake.vertices();
        for p in vs.windows(2) {
            if !(p[0].len() < p[1].len() && p[0].is_prefix_of(&p[1])) {
                rep.problems.push(format!("snake steps from {} to {} outside weak order", p[0], p[1]));
            }
        }
        for p in snake.segments.windows(2) {
            if p[0].to != SegmentEnd::Vertex(p[1].from.clone()) {
                rep.problems.push(format!("segments in {} and {} do not chain", p[0].face, p[1].face));
            }
        }
    }
    let window = |f: &Face| (sp.budget as usize).saturating_sub(f.src().len());
    for f in faces_up_to(depth + 1) {
        let k = window(&f);
        if k == 0 {
            continue;
        }
        rep.faces_checked += 1;
        if change(c, &f.edge(-1), &f.edge(1)) == Some(true) && !faces.contains(&f) {
            rep.problems.push(format!("face {f} has a color change but no segment"));
        }
    }
    for s in sp.segments() {
        let k = window(&s.face);
        let colors: Vec<(i64, Color)> = (1..=k as i64)
            .flat_map(|j| [j, -j])
            .filter_map(|j| c.color(&s.face.edge(j)).map(|col| (j, col)))
            .collect();
        let inside = |j: i64| match s.to {
            SegmentEnd::Vertex(_) => j.signum() == s.position.signum() && j.abs() <= s.position.abs(),
            SegmentEnd::Boundary { .. } => j > 0,
        };
        let mut sides: [HashSet<Color>; 2] = Default::default();
        for (j, col) in colors {
            sides[inside(j) as usize].insert(col);
        }
        if sides.iter().any(|x| x.len() > 1) || (!sides[0].is_empty() && sides[0] == sides[1]) {
            rep.problems.push(format!("segment in {} does not split its window by color", s.face));
        }
    }
    rep
}

/// Exact line for a descriptor, or an enclosure for a truncated snake pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HSnake {
    Exact(AffLine),
    Enclosed(ArcEnclosedLine),
}

/// All lines meeting `∂𝔻` once in each of two arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcEnclosedLine {
    pub arc1: Arc,
    pub arc2: Arc,
}

impl ArcEnclosedLine {
    /// Whether `l` meets `∂𝔻` in one point of each arc.
    pub fn contains_line(&self, l: &AffLine) -> bool {
        let pts = boundary_points(l);
        if pts.len() != 2 {
            return false;
        }
        let p = IdealPoint::Implicit(pts[0].clone());
        let q = IdealPoint::Implicit(pts[1].clone());
        (self.arc1.contains(&p) && self.arc2.contains(&q)) || (self.arc1.contains(&q) && self.arc2.contains(&p))
    }

    /// The limits are certainly distinct points.
    pub fn certifies_distinct(&self) -> bool {
        self.arc1.disjoint(&self.arc2)
    }
}

pub fn h_snake_of_pair(sp: &SnakePair) -> Result<HSnake, Error> {
    match &sp.outcome {
        Outcome::MeetAt(_) => Err(Error::FiniteOutcome),
        Outcome::Limits(a, b) => Ok(HSnake::Enclosed(ArcEnclosedLine { arc1: a.clone(), arc2: b.clone() })),
        Outcome::Exhausted(_) => Err(Error::OutsideTruncation),
    }
}

pub fn h_snake_of_descriptor(d: &BiclosedDescriptor) -> Result<HSnake, Error> {
    match d.canonical()? {
        BiclosedDescriptor::Infinite { line, .. } => Ok(HSnake::Exact(line)),
        _ => Err(Error::FiniteOutcome),
    }
}

/// Result of a weak separation test: roots on the line are set aside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakSeparation {
    pub separated: bool,
    /// Sign of `⟨n, β⟩` on the red roots off the line (0 if there are none).
    pub red_side: i8,
    pub on_line: Vec<Root>,
}

/// Every root of `r` off `l` lies strictly on one side and every root of `b`
/// off `l` strictly on the other.
pub fn verify_weak_separation(r: &RootSet, b: &RootSet, l: &AffLine) -> WeakSeparation {
    let mut on_line = Vec::new();
    let mut signs = [HashSet::new(), HashSet::new()];
    for (i, set) in [r, b].into_iter().enumerate() {
        for x in set.iter() {
            match l.side_of_vec(&x.vec) {
                0 => on_line.push(x.clone()),
                s => {
                    signs[i].insert(s);
                }
            }
        }
    }
    let one = |s: &HashSet<i8>| s.len() <= 1;
    let separated = one(&signs[0]) && one(&signs[1]) && signs[0].is_disjoint(&signs[1]);
    let red_side = signs[0].iter().next().copied().unwrap_or(0);
    WeakSeparation { separated, red_side, on_line }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biclosed::Bipartition;
    use crate::descriptor::{End, HalfSide, Mode, Rank2Biclosed};
    use crate::geometry::{classify_line, line_through, rescale, DiskClass};
    use crate::roots::inversion_set;

    fn w(ix: &[u8]) -> Word {
        Word::from_indices(ix).unwrap()
    }

    fn inv_bp(word: &Word, depth: u32) -> Bipartition {
        let inv: HashSet<Root> = inversion_set(word).into_iter().collect();
        Bipartition::from_predicate(depth, |r| inv.contains(r))
    }

    fn face12() -> Face {
        Face::new(&Word::identity(), Generator::S1, Generator::S2)
    }

    #[test]
    fn color_change_examples() {
        assert_eq!(color_changes(&inv_bp(&w(&[1]), 8), &face12(), 6).unwrap(), vec![0, 1]);
        assert_eq!(color_changes(&inv_bp(&w(&[1, 2]), 8), &face12(), 6).unwrap(), vec![0, 2]);
        assert!(color_changes(&inv_bp(&w(&[3]), 8), &face12(), 6).unwrap().is_empty());
        let mut bad = inv_bp(&w(&[1]), 8);
        bad.set(&face12().edge(3), Color::Red);
        assert!(matches!(color_changes(&bad, &face12(), 6), Err(Error::NotParabolicBiclosed { .. })));
    }

    #[test]
    fn finite_examples() {
        let sp = build_snake_pair(&inv_bp(&w(&[1]), 8), 24).unwrap();
        assert_eq!(sp.outcome, Outcome::MeetAt(w(&[1])));
        let e: Vec<Root> = sp.enclosed_edges().iter().map(|e| e.root()).collect();
        assert_eq!(e, vec![Root::simple(Generator::S1)]);
        let sp = build_snake_pair(&inv_bp(&w(&[1, 2]), 8), 24).unwrap();
        assert_eq!(sp.outcome, Outcome::MeetAt(w(&[1, 2])));
        let mut e: Vec<IVec3> = sp.enclosed_edges().iter().map(|e| e.root().vec).collect();
        e.sort();
        assert_eq!(e, vec![IVec3::from_i64(1, 0, 0), IVec3::from_i64(2, 1, 0)]);
        assert!(snake_manifold_check(&sp, &inv_bp(&w(&[1, 2]), 8), 6).ok());
        let all_blue = Bipartition::from_predicate(6, |_| false);
        assert_eq!(build_snake_pair(&all_blue, 24).unwrap_err(), Error::Degenerate);
    }

    #[test]
    fn finite_round_trip_and_cofinite() {
        for word in Word::all_up_to(5) {
            for complement in [false, true] {
                let inv: HashSet<Root> = inversion_set(&word).into_iter().collect();
                let bp = Bipartition::from_predicate(8, |r| inv.contains(r) != complement);
                let sp = build_snake_pair(&bp, 24).unwrap();
                assert_eq!(sp.outcome, Outcome::MeetAt(word.clone()), "{word}");
                let path: HashSet<Edge> =
                    (1..=word.len()).map(|i| Edge::into_vertex(&word.prefix(i)).unwrap()).collect();
                assert_eq!(sp.enclosed_edges(), path);
                let rep = snake_manifold_check(&sp, &bp, 6);
                assert!(rep.ok(), "{word}: {:?}", rep.problems);
            }
        }
    }

    #[test]
    fn parabolic_system_limits_at_ideal_point() {
        let phi12 = Bipartition::from_predicate(10, |r| r.vec.z == 0.into());
        let mut prev: Option<(Arc, Arc)> = None;
        for budget in [4, 7, 10] {
            let sp = build_snake_pair(&phi12, budget).unwrap();
            let Outcome::Limits(a, b) = sp.outcome.clone() else { panic!("{:?}", sp.outcome) };
            let q = face12().ideal_point();
            assert!(a.contains_rational(&q) && b.contains_rational(&q));
            if let Some((pa, pb)) = prev {
                assert!(pa.contains_arc(&a) && pb.contains_arc(&b));
                assert!(a.measure() < pa.measure());
            }
            assert!(snake_manifold_check(&sp, &phi12, budget - 2).ok());
            prev = Some((a, b));
        }
    }

    fn secant() -> BiclosedDescriptor {
        let l = line_through(&rescale(&Root::new(IVec3::from_i64(1, 0, 0), 1)), &rescale(&Root::new(IVec3::from_i64(0, 2, 1), 2)))
            .unwrap();
        assert_eq!(classify_line(&l), DiskClass::Secant);
        BiclosedDescriptor::Infinite { line: l, side: HalfSide::Far, boundary: Some(Rank2Biclosed::new(End::Right, Mode::Finite, 1)) }
    }

    #[test]
    fn secant_arcs_enclose_descriptor_line() {
        let d = secant();
        let r = d.resolve().unwrap();
        let c = r.coloring();
        let mut prev: Option<(Arc, Arc)> = None;
        for budget in [8, 16, 24] {
            let sp = build_snake_pair(&c, budget).unwrap();
            let HSnake::Enclosed(enc) = h_snake_of_pair(&sp).unwrap() else { panic!() };
            assert!(enc.certifies_distinct());
            let HSnake::Exact(l) = h_snake_of_descriptor(&d).unwrap() else { panic!() };
            assert!(enc.contains_line(&l));
            if let Some((pa, pb)) = prev {
                assert!(pa.contains_arc(&enc.arc1) && pb.contains_arc(&enc.arc2));
            }
            prev = Some((enc.arc1, enc.arc2));
        }
        let sp = build_snake_pair(&c, 12).unwrap();
        assert!(snake_manifold_check(&sp, &c, 10).ok());
    }

    /// Chains each face with a change back to a face at `v_id` through the
    /// other face changing at its source; the segment sets must agree.
    #[test]
    fn backward_chains_match_forward_construction() {
        let d = secant();
        let r = d.resolve().unwrap();
        let bps = [
            Bipartition::from_predicate(9, |x| r.contains(&x.vec)),
            inv_bp(&w(&[1, 2, 3, 1, 2]), 9),
            Bipartition::from_predicate(9, |x| x.vec.z == 0.into()),
        ];
        for bp in bps {
            let sp = build_snake_pair(&bp, 9).unwrap();
            let forward: HashMap<Face, SegmentEnd> = sp.segments().map(|s| (s.face.clone(), s.to.clone())).collect();
            let starts = [sp.s1.segments[0].face.clone(), sp.s2.segments[0].face.clone()];
            for f in faces_up_to(6) {
                if change(&bp, &f.edge(-1), &f.edge(1)) != Some(true) {
                    continue;
                }
                assert!(forward.contains_key(&f), "{f}");
                let mut g = f.clone();
                let mut steps = 0;
                while !g.src().is_empty() {
                    let v = g.src().clone();
                    let prev = Face::around(&v)
                        .into_iter()
                        .filter(|h| h != &g && change(&bp, &h.edge(-1), &h.edge(1)).is_some())
                        .find(|h| forward.get(h) == Some(&SegmentEnd::Vertex(v.clone())))
                        .unwrap_or_else(|| panic!("no predecessor for {g}"));
                    g = prev;
                    steps += 1;
                    assert!(steps < 10);
                }
                assert!(starts.contains(&g));
            }
        }
    }

    #[test]
    fn weak_separation_examples() {
        let word = w(&[1, 2, 3]);
        let d = BiclosedDescriptor::finite(word.clone());
        let r = d.resolve().unwrap().realize_depth(8);
        let all = crate::descriptor::roots_to_depth(8);
        let b = RootSet::new(None, Some(8), all.iter().filter(|x| !r.contains(x)).cloned());
        let crate::descriptor::SepLines::Lines(ls) = crate::descriptor::weak_sep_lines(&d).unwrap() else { panic!() };
        for l in &ls {
            let ws = verify_weak_separation(&r, &b, l);
            assert!(ws.separated);
            let sw = verify_weak_separation(&b, &r, l);
            assert!(sw.separated && sw.red_side == -ws.red_side);
        }
        let sd = secant();
        let res = sd.resolve().unwrap();
        let r = res.realize_depth(8);
        let b = RootSet::new(None, Some(8), all.iter().filter(|x| !r.contains(x)).cloned());
        let HSnake::Exact(l) = h_snake_of_descriptor(&sd).unwrap() else { panic!() };
        let ws = verify_weak_separation(&r, &b, &l);
        assert!(ws.separated);
        assert!(ws.on_line.iter().all(|x| l.side_of_vec(&x.vec) == 0));
        assert!(!verify_weak_separation(&r, &b, &face12().line()).separated);
    }

    #[test]
    fn far_arcs_nest_along_the_tree() {
        assert_eq!(far_arc(&Word::identity()).unwrap(), Arc::Full);
        for v in Word::all_up_to(6) {
            let a = far_arc(&v).unwrap();
            for g in Generator::ALL.into_iter().filter(|&g| v.ascends(g)) {
                let b = far_arc(&v.times(g)).unwrap();
                assert!(a.contains_arc(&b) && b.measure() < a.measure(), "{v} {g}");
            }
        }
    }
}
