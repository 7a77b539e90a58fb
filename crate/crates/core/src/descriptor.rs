//! Symbolic biclosed sets: finite, cofinite, and half-planes with a rank-2
//! boundary part; realization, cover relations and join-irreducibility.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::biclosed::{is_biclosed, Coloring, Color, RootSet};
use crate::error::Error;
use crate::geometry::{classify_line, line_through, rescale, AffLine, AffinePoint, DiskClass};
use crate::linalg::{act, IVec3, Mat3};
use crate::roots::{enumerate_roots, inversion_set, Edge, Root};
use crate::truncation::Truncation;
use crate::word::{Generator, Word};

/// Default height searched for roots lying on a descriptor's line.
pub const CONTENT_SEARCH_HEIGHT: u64 = 240;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Left,
    Right,
}

impl End {
    pub fn other(self) -> End {
        match self {
            End::Left => End::Right,
            End::Right => End::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Finite,
    Cofinite,
}

/// A biclosed subset of an infinite rank-2 system: the `k` extreme roots
/// from one end (finite) or the complement of those (cofinite).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Rank2Biclosed {
    pub side: End,
    pub mode: Mode,
    pub k: u32,
}

impl Rank2Biclosed {
    /// Canonical form: the empty and full sets always use the left end.
    pub fn new(side: End, mode: Mode, k: u32) -> Self {
        let side = if k == 0 { End::Left } else { side };
        Rank2Biclosed { side, mode, k }
    }

    pub fn empty() -> Self {
        Rank2Biclosed::new(End::Left, Mode::Finite, 0)
    }

    pub fn full() -> Self {
        Rank2Biclosed::new(End::Left, Mode::Cofinite, 0)
    }

    pub fn is_empty(&self) -> bool {
        self.mode == Mode::Finite && self.k == 0
    }

    pub fn is_full(&self) -> bool {
        self.mode == Mode::Cofinite && self.k == 0
    }
}

impl<'de> Deserialize<'de> for Rank2Biclosed {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            side: End,
            mode: Mode,
            k: u32,
        }
        let r = Repr::deserialize(d)?;
        Ok(Rank2Biclosed::new(r.side, r.mode, r.k))
    }
}

impl fmt::Display for Rank2Biclosed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = match self.mode {
            Mode::Finite => "finite",
            Mode::Cofinite => "cofinite",
        };
        let s = match self.side {
            End::Left => "left",
            End::Right => "right",
        };
        write!(f, "{m}({s},{})", self.k)
    }
}

/// Which open half-plane of the line contributes its roots: `near` is the
/// one containing the center `O` (the positive side of the canonical normal
/// when `O` is on the line).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HalfSide {
    Far,
    Near,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BiclosedDescriptor {
    Finite { word: Word },
    Cofinite { word: Word },
    Infinite { line: AffLine, side: HalfSide, boundary: Option<Rank2Biclosed> },
}

impl fmt::Display for BiclosedDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BiclosedDescriptor::Finite { word } => write!(f, "finite({word})"),
            BiclosedDescriptor::Cofinite { word } => write!(f, "cofinite({word})"),
            BiclosedDescriptor::Infinite { line, side, boundary } => {
                let s = match side {
                    HalfSide::Far => "far",
                    HalfSide::Near => "near",
                };
                match boundary {
                    Some(b) => write!(f, "infinite({line}, {s}, {b})"),
                    None => write!(f, "infinite({line}, {s}, none)"),
                }
            }
        }
    }
}

/// The positive roots on a line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineContent {
    Empty,
    Single(Root),
    /// An infinite rank-2 system with simple roots at the two ends of the
    /// line order.
    Rank2 { left: Root, right: Root },
}

/// Roots on `line` found up to height `search`. Two or more roots mean an
/// infinite dihedral system whose simple roots are the lowest members, hence
/// the extremes found.
pub fn line_content(line: &AffLine, search: u64) -> LineContent {
    let t = Truncation::by_height(search);
    let on: Vec<&Root> = t.roots.iter().filter(|r| line.side_of_vec(&r.vec) == 0).collect();
    match on.len() {
        0 => LineContent::Empty,
        1 => LineContent::Single(on[0].clone()),
        _ => {
            let mut left = on[0];
            let mut right = on[0];
            for r in &on[1..] {
                if line.order(&r.vec, &left.vec) > 0 {
                    left = r;
                }
                if line.order(&right.vec, &r.vec) > 0 {
                    right = r;
                }
            }
            LineContent::Rank2 { left: left.clone(), right: right.clone() }
        }
    }
}

/// The first `k` roots of a rank-2 system counted from one end: `ρ`,
/// `r_ρ(σ)`, `r_ρ r_σ(ρ)`, … for end root `ρ` and opposite end root `σ`.
pub fn extreme_run(rho: &IVec3, sigma: &IVec3, k: usize) -> Vec<IVec3> {
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let mut v = if i % 2 == 0 { rho.clone() } else { sigma.clone() };
        for step in (0..i).rev() {
            v = v.reflect(if step % 2 == 0 { rho } else { sigma });
        }
        out.push(v);
    }
    out
}

/// A validated descriptor with everything needed for membership tests.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub desc: BiclosedDescriptor,
    kind: Kind,
}

#[derive(Clone, Debug)]
enum Kind {
    Finite { inv: Mat3 },
    Cofinite { inv: Mat3 },
    Infinite { line: AffLine, sign: i8, content: LineContent, boundary: Option<Rank2Biclosed>, run: Vec<IVec3> },
}

impl BiclosedDescriptor {
    pub fn finite(w: Word) -> Self {
        BiclosedDescriptor::Finite { word: w }
    }

    pub fn cofinite(w: Word) -> Self {
        BiclosedDescriptor::Cofinite { word: w }
    }

    /// Validates and canonicalizes with the default content search.
    pub fn resolve(&self) -> Result<Resolved, Error> {
        self.resolve_with(CONTENT_SEARCH_HEIGHT)
    }

    pub fn resolve_with(&self, search: u64) -> Result<Resolved, Error> {
        let kind = match self {
            BiclosedDescriptor::Finite { word } => Kind::Finite { inv: Mat3::of_word(&word.inverse()) },
            BiclosedDescriptor::Cofinite { word } => Kind::Cofinite { inv: Mat3::of_word(&word.inverse()) },
            BiclosedDescriptor::Infinite { line, side, boundary } => {
                let bad = |m: &str| Err(Error::InvalidDescriptor(format!("{m}: {self}")));
                let class = classify_line(line);
                if class == DiskClass::Exterior {
                    return bad("line misses the disk");
                }
                let content = line_content(line, search);
                let boundary = match (&content, boundary) {
                    (LineContent::Empty, None) => None,
                    (LineContent::Empty, Some(_)) => return bad("boundary given for a line without roots"),
                    (LineContent::Single(_), None) => None,
                    (LineContent::Single(_), Some(b)) if b.is_empty() => None,
                    (LineContent::Single(_), Some(b)) if b.is_full() => Some(*b),
                    (LineContent::Single(_), Some(_)) => return bad("a single root admits only an empty or full boundary"),
                    (LineContent::Rank2 { .. }, None) => return bad("rank-2 line content needs a boundary"),
                    (LineContent::Rank2 { .. }, Some(b)) => Some(Rank2Biclosed::new(b.side, b.mode, b.k)),
                };
                if class == DiskClass::Tangent {
                    if let (LineContent::Rank2 { .. }, Some(b)) = (&content, &boundary) {
                        match side {
                            HalfSide::Far if b.mode != Mode::Cofinite => {
                                return bad("tangent line on the far side needs a cofinite boundary")
                            }
                            HalfSide::Near if b.mode != Mode::Finite => {
                                return bad("tangent line on the near side needs a finite boundary")
                            }
                            _ => {}
                        }
                    }
                }
                let near = match line.center_side() {
                    0 => 1,
                    s => s,
                };
                let sign = if *side == HalfSide::Near { near } else { -near };
                let run = match (&content, &boundary) {
                    (LineContent::Rank2 { left, right }, Some(b)) => {
                        let (rho, sigma) = if b.side == End::Left { (left, right) } else { (right, left) };
                        extreme_run(&rho.vec, &sigma.vec, b.k as usize)
                    }
                    _ => Vec::new(),
                };
                Kind::Infinite { line: line.clone(), sign, content, boundary, run }
            }
        };
        let desc = match (self, &kind) {
            (BiclosedDescriptor::Infinite { line, side, .. }, Kind::Infinite { boundary, .. }) => {
                BiclosedDescriptor::Infinite { line: line.clone(), side: *side, boundary: *boundary }
            }
            _ => self.clone(),
        };
        Ok(Resolved { desc, kind })
    }

    /// Canonical form, or the validation error.
    pub fn canonical(&self) -> Result<BiclosedDescriptor, Error> {
        Ok(self.resolve()?.desc)
    }
}

impl Resolved {
    /// Membership of a positive root.
    pub fn contains(&self, beta: &IVec3) -> bool {
        match &self.kind {
            Kind::Finite { inv } => inv.apply(beta).is_nonpositive(),
            Kind::Cofinite { inv } => !inv.apply(beta).is_nonpositive(),
            Kind::Infinite { line, sign, boundary, run, .. } => match line.side_of_vec(beta) {
                0 => match boundary {
                    None => false,
                    Some(b) => run.contains(beta) == (b.mode == Mode::Finite),
                },
                s => s == *sign,
            },
        }
    }

    pub fn line(&self) -> Option<&AffLine> {
        match &self.kind {
            Kind::Infinite { line, .. } => Some(line),
            _ => None,
        }
    }

    pub fn content(&self) -> Option<&LineContent> {
        match &self.kind {
            Kind::Infinite { content, .. } => Some(content),
            _ => None,
        }
    }

    /// All members of height at most `n`.
    pub fn realize_height(&self, n: u64) -> RootSet {
        let t = Truncation::by_height(n);
        RootSet::with_height(n, t.roots.iter().filter(|r| self.contains(&r.vec)).cloned())
    }

    /// All members of depth at most `d`.
    pub fn realize_depth(&self, d: u32) -> RootSet {
        let roots = roots_to_depth(d);
        RootSet::new(None, Some(d), roots.iter().filter(|r| self.contains(&r.vec)).cloned())
    }

    /// Coloring of the whole tree, evaluated edge by edge on demand.
    pub fn coloring(&self) -> DescriptorColoring<'_> {
        DescriptorColoring { d: self, cache: Mutex::new(HashMap::new()) }
    }
}

/// Shared list of all roots up to a depth.
pub fn roots_to_depth(d: u32) -> Arc<Vec<Root>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Root>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&d) {
        return v.clone();
    }
    let v: Arc<Vec<Root>> = Arc::new(enumerate_roots(d, None).into_iter().map(|e| e.root).collect());
    cache.lock().unwrap().entry(d).or_insert(v).clone()
}

/// Colors edges red when their root belongs to the descriptor's set.
pub struct DescriptorColoring<'a> {
    d: &'a Resolved,
    cache: Mutex<HashMap<Edge, Color>>,
}

impl Coloring for DescriptorColoring<'_> {
    fn color(&self, e: &Edge) -> Option<Color> {
        if let Some(c) = self.cache.lock().unwrap().get(e) {
            return Some(*c);
        }
        let c = Color::of(self.d.contains(&e.root().vec));
        self.cache.lock().unwrap().insert(e.clone(), c);
        Some(c)
    }

    fn depth_limit(&self) -> Option<u32> {
        None
    }
}

fn boundary_step(b: Rank2Biclosed, up: bool) -> Vec<Rank2Biclosed> {
    use Mode::*;
    let n = Rank2Biclosed::new;
    match (b.mode, up, b.k) {
        (Finite, true, 0) => vec![n(End::Left, Finite, 1), n(End::Right, Finite, 1)],
        (Finite, true, k) => vec![n(b.side, Finite, k + 1)],
        (Finite, false, 0) => vec![],
        (Finite, false, k) => vec![n(b.side, Finite, k - 1)],
        (Cofinite, true, 0) => vec![],
        (Cofinite, true, k) => vec![n(b.side, Cofinite, k - 1)],
        (Cofinite, false, 0) => vec![n(End::Left, Cofinite, 1), n(End::Right, Cofinite, 1)],
        (Cofinite, false, k) => vec![n(b.side, Cofinite, k + 1)],
    }
}

fn neighbours(r: &Resolved, up: bool) -> Vec<BiclosedDescriptor> {
    use BiclosedDescriptor::*;
    match &r.desc {
        Finite { word } | Cofinite { word } => {
            let grow = matches!(r.desc, Finite { .. }) == up;
            if grow {
                let out: Vec<Word> = Generator::ALL.iter().filter(|&&g| word.ascends(g)).map(|&g| word.times(g)).collect();
                out.into_iter()
                    .map(|w| if matches!(r.desc, Finite { .. }) { Finite { word: w } } else { Cofinite { word: w } })
                    .collect()
            } else if word.is_empty() {
                Vec::new()
            } else {
                let w = word.prefix(word.len() - 1);
                vec![if matches!(r.desc, Finite { .. }) { Finite { word: w } } else { Cofinite { word: w } }]
            }
        }
        Infinite { line, side, boundary } => {
            let content = r.content().expect("infinite");
            let next: Vec<Option<Rank2Biclosed>> = match (content, boundary) {
                (LineContent::Empty, _) => Vec::new(),
                (LineContent::Single(_), None) if up => vec![Some(Rank2Biclosed::full())],
                (LineContent::Single(_), Some(_)) if !up => vec![None],
                (LineContent::Single(_), _) => Vec::new(),
                (LineContent::Rank2 { .. }, Some(b)) => boundary_step(*b, up).into_iter().map(Some).collect(),
                (LineContent::Rank2 { .. }, None) => Vec::new(),
            };
            next.into_iter()
                .map(|b| Infinite { line: line.clone(), side: *side, boundary: b })
                .filter(|d| d.resolve().is_ok())
                .collect()
        }
    }
}

/// Upper covers: sets with exactly one more root.
pub fn covers(d: &BiclosedDescriptor) -> Result<Vec<BiclosedDescriptor>, Error> {
    Ok(neighbours(&d.resolve()?, true))
}

/// Lower covers: sets with exactly one root fewer.
pub fn lower_covers(d: &BiclosedDescriptor) -> Result<Vec<BiclosedDescriptor>, Error> {
    Ok(neighbours(&d.resolve()?, false))
}

/// Complete join-irreducibles: nonempty finite sets, and half-planes whose
/// boundary part is a proper cofinite subset of the line's system.
pub fn is_complete_join_irreducible(d: &BiclosedDescriptor) -> bool {
    match d {
        BiclosedDescriptor::Finite { word } => !word.is_empty(),
        BiclosedDescriptor::Cofinite { .. } => false,
        BiclosedDescriptor::Infinite { boundary, .. } => {
            matches!(boundary, Some(b) if b.mode == Mode::Cofinite && b.k >= 1)
        }
    }
}

/// Evidence gathered by [`cji_by_definition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CjiEvidence {
    /// Candidate roots whose removal leaves a biclosed set.
    pub removable: Vec<[i64; 3]>,
    /// A strictly smaller biclosed set containing the removable root, if one
    /// was found.
    pub smaller_containing: Option<String>,
    pub join_irreducible: bool,
}

/// Decides join-irreducibility from the definition at truncation scale: the
/// set must have exactly one lower cover `R ∖ {α}` (found by trying every
/// member of height at most `n`, checked biclosed at height `3n`), and no
/// strictly smaller biclosed set from a search family may contain `α`.
///
/// For finite sets the family is every subset; otherwise it is the finite
/// sets of length at most 6, the tree path through `α` and its extensions,
/// and half-planes on lines through `α̂` and one other root.
fn root_of(v: IVec3) -> Root {
    let depth = crate::roots::locate_root(&v).expect("positive root").depth();
    Root::new(v, depth)
}

/// Tallest line root tried as the removable root of a half-plane.
pub const REMOVABLE_SEARCH_HEIGHT: u64 = 1500;

/// Whether `X ∖ {α}` is biclosed, for biclosed `X ∋ α`. Both closure
/// conditions live in rank-2 subsystems, and along a subsystem's root order
/// a biclosed set changes membership at most once. Non-end roots of a
/// subsystem are taller than both ends together, so searching heights up to
/// `max(ht(α), m)` finds both ends of every subsystem through `α` except
/// those whose other end is taller than `m`. Memberships are exact.
fn removable_exact(r: &Resolved, alpha: &Root, m: u64) -> bool {
    let h = alpha.height_u64();
    let t = Truncation::by_height(h.max(m));
    let a_hat = rescale(alpha);
    let mut lines: HashMap<AffLine, Vec<&Root>> = HashMap::new();
    for g in t.roots.iter().filter(|g| *g != alpha) {
        if let Ok(l) = line_through(&a_hat, &rescale(g)) {
            lines.entry(l).or_default().push(g);
        }
    }
    let bit = |v: &IVec3| r.contains(v);
    lines.into_iter().all(|(l, on)| {
        let (mut left, mut right) = (&alpha.vec, &alpha.vec);
        for g in on {
            if l.order(&g.vec, left) > 0 {
                left = &g.vec;
            }
            if l.order(right, &g.vec) > 0 {
                right = &g.vec;
            }
        }
        let mut neighbours = None;
        for (a, b) in [(left, right), (right, left)] {
            let mut run = Vec::new();
            for i in 1.. {
                let v = extreme_run(a, b, i).pop().expect("nonempty run");
                let tall = v.sum() > alpha.height;
                run.push(v);
                if tall {
                    break;
                }
            }
            if let Some(j) = run.iter().position(|v| *v == alpha.vec) {
                let mut nb = vec![extreme_run(a, b, j + 2).pop().expect("nonempty run")];
                if j > 0 {
                    nb.push(run[j - 1].clone());
                }
                neighbours = Some(nb);
                break;
            }
        }
        let nb = neighbours.expect("alpha lies in its own subsystem");
        let before = (bit(left) != bit(right)) as i32;
        let delta: i32 = nb.iter().map(|v| if bit(v) { 1 } else { -1 }).sum();
        before + delta <= 1
    })
}

pub fn cji_by_definition(d: &BiclosedDescriptor, n: u64) -> Result<CjiEvidence, Error> {
    let m = 3 * n;
    let r = d.resolve()?;
    let full = r.realize_height(m);
    let mut low: Vec<Root> = full.iter().filter(|x| x.height_u64() <= n).cloned().collect();
    // a boundary on the line can make a tall line root the removable one
    if let Some(LineContent::Rank2 { left, right }) = r.content() {
        for v in extreme_run(&left.vec, &right.vec, 8).into_iter().chain(extreme_run(&right.vec, &left.vec, 8)) {
            let x = root_of(v);
            if x.height_u64() <= REMOVABLE_SEARCH_HEIGHT && r.contains(&x.vec) && !low.contains(&x) {
                low.push(x);
            }
        }
    }
    let removable: Vec<Root> = low.iter().filter(|a| removable_exact(&r, a, m)).cloned().collect();
    let arr = |r: &Root| crate::biclosed::root_to_array(&r.vec).expect("small root");
    let mut ev = CjiEvidence { removable: removable.iter().map(arr).collect(), smaller_containing: None, join_irreducible: false };
    if removable.len() != 1 {
        return Ok(ev);
    }
    let alpha = &removable[0];
    // the comparison must see α itself and the roots around it
    let lines_m = m;
    let m = m.max(2 * alpha.height_u64());
    let full = if m == lines_m { full } else { r.realize_height(m) };
    let strictly_below = |s: &RootSet| s.contains(alpha) && s.is_subset(&full) && s.len() < full.len();
    if let BiclosedDescriptor::Finite { word } = &r.desc {
        let members: Vec<Root> = inversion_set(word);
        for mask in 0u32..(1 << members.len()) {
            let s = RootSet::with_height(m, (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i].clone()));
            if strictly_below(&s) && is_biclosed(&s.restrict_height(m), m) {
                ev.smaller_containing = Some(format!("subset {mask:b}"));
                return Ok(ev);
            }
        }
        ev.join_irreducible = true;
        return Ok(ev);
    }
    let mut family: Vec<BiclosedDescriptor> = Word::all_up_to(6).into_iter().map(BiclosedDescriptor::finite).collect();
    let edge = crate::roots::locate_root(&alpha.vec)?;
    let path = edge.upper();
    family.push(BiclosedDescriptor::finite(path.clone()));
    let mut layer = vec![path];
    for _ in 0..4 {
        let mut next = Vec::new();
        for w in &layer {
            for g in Generator::ALL {
                if w.ascends(g) {
                    next.push(w.times(g));
                }
            }
        }
        family.extend(next.iter().cloned().map(BiclosedDescriptor::finite));
        layer = next;
    }
    let t = Truncation::by_height(lines_m);
    let a_hat = rescale(alpha);
    for g in &t.roots {
        if g == alpha {
            continue;
        }
        let line = match line_through(&a_hat, &rescale(g)) {
            Ok(l) => l,
            Err(_) => continue,
        };
        for side in [HalfSide::Far, HalfSide::Near] {
            let mut bs = vec![None];
            for e in [End::Left, End::Right] {
                for mode in [Mode::Finite, Mode::Cofinite] {
                    for k in 0..=3 {
                        bs.push(Some(Rank2Biclosed::new(e, mode, k)));
                    }
                }
            }
            bs.dedup();
            for b in bs {
                family.push(BiclosedDescriptor::Infinite { line: line.clone(), side, boundary: b });
            }
        }
    }
    // lines through α̂ and a vertex of the tree usually meet no other root
    let mut ws = vec![Word::identity()];
    ws.extend(Word::all_up_to(5));
    for w in ws {
        let v = AffinePoint::from_homogeneous(&act(&w, &IVec3::from_i64(1, 1, 1))).expect("interior point");
        let Ok(line) = line_through(&a_hat, &v) else { continue };
        for side in [HalfSide::Far, HalfSide::Near] {
            for b in [None, Some(Rank2Biclosed::full())] {
                family.push(BiclosedDescriptor::Infinite { line: line.clone(), side, boundary: b });
            }
        }
    }
    for cand in family {
        let res = match cand.resolve_with(m) {
            Ok(x) => x,
            Err(_) => continue,
        };
        if !res.contains(&alpha.vec) {
            continue;
        }
        let s = res.realize_height(m);
        if strictly_below(&s) {
            ev.smaller_containing = Some(res.desc.to_string());
            return Ok(ev);
        }
    }
    ev.join_irreducible = true;
    Ok(ev)
}

/// Weakly separating lines of a descriptor's set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "lines", rename_all = "snake_case")]
pub enum SepLines {
    /// The empty or full set: the separating plane is `x+y+z = 0`, which has
    /// no trace in the affine plane.
    AtInfinity,
    Lines(Vec<AffLine>),
}

/// For finite and cofinite sets, the three tangent lines spanned by pairs of
/// edges at the vertex `v_w`; for half-planes, the line itself.
pub fn weak_sep_lines(d: &BiclosedDescriptor) -> Result<SepLines, Error> {
    let r = d.resolve()?;
    match &r.desc {
        BiclosedDescriptor::Finite { word } | BiclosedDescriptor::Cofinite { word } => {
            if word.is_empty() {
                return Ok(SepLines::AtInfinity);
            }
            let mut roots = vec![Edge::into_vertex(word).expect("nonempty").root()];
            for g in Generator::ALL {
                if word.ascends(g) {
                    roots.push(Edge::new(word.clone(), g)?.root());
                }
            }
            let pts: Vec<_> = roots.iter().map(rescale).collect();
            Ok(SepLines::Lines(vec![
                line_through(&pts[0], &pts[1])?,
                line_through(&pts[0], &pts[2])?,
                line_through(&pts[1], &pts[2])?,
            ]))
        }
        BiclosedDescriptor::Infinite { line, .. } => Ok(SepLines::Lines(vec![line.clone()])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Face;
    use crate::geometry::AffinePoint;

    fn w(ix: &[u8]) -> Word {
        Word::from_indices(ix).unwrap()
    }

    fn v(x: i64, y: i64, z: i64) -> IVec3 {
        IVec3::from_i64(x, y, z)
    }

    fn face12_line() -> AffLine {
        Face::new(&Word::identity(), Generator::S1, Generator::S2).line()
    }

    #[test]
    fn json_format() {
        let d = BiclosedDescriptor::finite(w(&[1, 2]));
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"kind":"finite","word":[1,2]}"#);
        let d = BiclosedDescriptor::Infinite {
            line: face12_line(),
            side: HalfSide::Far,
            boundary: Some(Rank2Biclosed::new(End::Right, Mode::Cofinite, 1)),
        };
        let js = serde_json::to_string(&d).unwrap();
        assert_eq!(js, r#"{"kind":"infinite","line":[1,1,0],"side":"far","boundary":{"side":"right","mode":"cofinite","k":1}}"#);
        let back: BiclosedDescriptor = serde_json::from_str(&js).unwrap();
        assert_eq!(back, d);
        let d: BiclosedDescriptor =
            serde_json::from_str(r#"{"kind":"infinite","line":[1,0,0],"side":"near","boundary":null}"#).unwrap();
        assert!(d.resolve().is_ok());
        let d: BiclosedDescriptor = serde_json::from_str(
            r#"{"kind":"infinite","line":[1,1,0],"side":"far","boundary":{"side":"right","mode":"cofinite","k":0}}"#,
        )
        .unwrap();
        assert_eq!(
            d,
            BiclosedDescriptor::Infinite { line: face12_line(), side: HalfSide::Far, boundary: Some(Rank2Biclosed::full()) }
        );
    }

    #[test]
    fn face_line_content_and_runs() {
        let line = face12_line();
        let content = line_content(&line, 60);
        assert_eq!(
            content,
            LineContent::Rank2 { left: Root::new(v(0, 1, 0), 1), right: Root::new(v(1, 0, 0), 1) }
        );
        let run = extreme_run(&v(0, 1, 0), &v(1, 0, 0), 3);
        assert_eq!(run, vec![v(0, 1, 0), v(1, 2, 0), v(2, 3, 0)]);
        let f = Face::new(&Word::identity(), Generator::S1, Generator::S2);
        for j in 1..=5 {
            assert_eq!(extreme_run(&v(1, 0, 0), &v(0, 1, 0), 5)[j - 1], f.root(j as i64).vec);
            assert_eq!(extreme_run(&v(0, 1, 0), &v(1, 0, 0), 5)[j - 1], f.root(-(j as i64)).vec);
        }
    }

    #[test]
    fn realize_examples() {
        let r = BiclosedDescriptor::finite(w(&[1, 2])).resolve().unwrap();
        let s = r.realize_height(20);
        assert_eq!(s.len(), 2);
        assert!(s.contains_vec(&v(1, 0, 0)) && s.contains_vec(&v(2, 1, 0)));
        let d = BiclosedDescriptor::Infinite { line: face12_line(), side: HalfSide::Far, boundary: Some(Rank2Biclosed::full()) };
        let s = d.resolve().unwrap().realize_height(40);
        let t = Truncation::by_height(40);
        let phi12: Vec<&Root> = t.roots.iter().filter(|r| r.vec.z == 0.into()).collect();
        assert_eq!(s.len(), phi12.len());
        assert!(phi12.iter().all(|r| s.contains(r)));
        // half-system of a secant line
        let a1 = AffLine::new(&v(1, 0, 0)).unwrap();
        let d = BiclosedDescriptor::Infinite { line: a1.clone(), side: HalfSide::Far, boundary: None };
        let r = d.resolve().unwrap();
        assert_eq!(r.content(), Some(&LineContent::Empty));
        let s = r.realize_height(40);
        assert!(s.contains_vec(&v(1, 0, 0)));
        for x in t.roots.iter() {
            assert_eq!(s.contains(x), a1.side_of_vec(&x.vec) > 0);
        }
        assert!(is_biclosed(&s, 40));
    }

    #[test]
    fn validation() {
        let ext = AffLine::new(&v(1, 1, 2)).unwrap();
        assert_eq!(classify_line(&ext), DiskClass::Exterior);
        assert!(BiclosedDescriptor::Infinite { line: ext, side: HalfSide::Far, boundary: None }.resolve().is_err());
        let l = face12_line();
        let fin = Some(Rank2Biclosed::new(End::Left, Mode::Finite, 2));
        let cof = Some(Rank2Biclosed::new(End::Left, Mode::Cofinite, 2));
        assert!(BiclosedDescriptor::Infinite { line: l.clone(), side: HalfSide::Far, boundary: fin }.resolve().is_err());
        assert!(BiclosedDescriptor::Infinite { line: l.clone(), side: HalfSide::Far, boundary: cof }.resolve().is_ok());
        assert!(BiclosedDescriptor::Infinite { line: l.clone(), side: HalfSide::Near, boundary: cof }.resolve().is_err());
        assert!(BiclosedDescriptor::Infinite { line: l.clone(), side: HalfSide::Near, boundary: fin }.resolve().is_ok());
        assert!(BiclosedDescriptor::Infinite { line: l, side: HalfSide::Near, boundary: None }.resolve().is_err());
    }

    #[test]
    fn descriptor_sets_are_biclosed() {
        let l = face12_line();
        let mut ds = Vec::new();
        for k in 0..4 {
            for e in [End::Left, End::Right] {
                ds.push(BiclosedDescriptor::Infinite { line: l.clone(), side: HalfSide::Near, boundary: Some(Rank2Biclosed::new(e, Mode::Finite, k)) });
                ds.push(BiclosedDescriptor::Infinite { line: l.clone(), side: HalfSide::Far, boundary: Some(Rank2Biclosed::new(e, Mode::Cofinite, k)) });
            }
        }
        // secant line through two roots
        let sec = line_through(&rescale(&Root::new(v(1, 0, 0), 1)), &rescale(&Root::new(v(0, 2, 1), 2))).unwrap();
        assert_eq!(classify_line(&sec), DiskClass::Secant);
        for side in [HalfSide::Near, HalfSide::Far] {
            for mode in [Mode::Finite, Mode::Cofinite] {
                for k in 0..3 {
                    ds.push(BiclosedDescriptor::Infinite { line: sec.clone(), side, boundary: Some(Rank2Biclosed::new(End::Right, mode, k)) });
                }
            }
        }
        for d in ds {
            let s = d.resolve().unwrap().realize_height(60);
            assert!(is_biclosed(&s, 60), "{d}");
        }
    }

    #[test]
    fn covers_examples() {
        let c = covers(&BiclosedDescriptor::finite(Word::identity())).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(lower_covers(&BiclosedDescriptor::cofinite(w(&[1]))).unwrap().len(), 2);
        assert_eq!(lower_covers(&BiclosedDescriptor::cofinite(Word::identity())).unwrap().len(), 3);
        assert!(!is_complete_join_irreducible(&BiclosedDescriptor::cofinite(w(&[1, 2]))));
        let d = BiclosedDescriptor::Infinite {
            line: face12_line(),
            side: HalfSide::Far,
            boundary: Some(Rank2Biclosed::new(End::Right, Mode::Cofinite, 1)),
        };
        assert!(is_complete_join_irreducible(&d));
        // upper cover re-adds the right end root
        let up = covers(&d).unwrap();
        assert_eq!(up.len(), 1);
        let a = d.resolve().unwrap().realize_height(40);
        let b = up[0].resolve().unwrap().realize_height(40);
        assert_eq!(b.difference(&a), vec![Root::new(v(1, 0, 0), 1)]);
    }

    #[test]
    fn weak_sep_lines_are_tangent_and_separate() {
        for word in Word::all_up_to(4) {
            for d in [BiclosedDescriptor::finite(word.clone()), BiclosedDescriptor::cofinite(word.clone())] {
                let SepLines::Lines(lines) = weak_sep_lines(&d).unwrap() else { panic!() };
                let r = d.resolve().unwrap();
                for l in &lines {
                    assert_eq!(classify_line(l), DiskClass::Tangent);
                    let mut signs = [std::collections::BTreeSet::new(), std::collections::BTreeSet::new()];
                    for x in roots_to_depth(8).iter() {
                        let s = l.side_of_vec(&x.vec);
                        if s != 0 {
                            signs[r.contains(&x.vec) as usize].insert(s);
                        }
                    }
                    assert!(signs[0].len() <= 1 && signs[1].len() <= 1 && signs[0] != signs[1], "{d} {l}");
                }
            }
        }
        assert_eq!(weak_sep_lines(&BiclosedDescriptor::finite(Word::identity())).unwrap(), SepLines::AtInfinity);
        let _ = AffinePoint::center();
    }

    #[test]
    fn join_irreducible_by_definition() {
        let l = face12_line();
        let mut ds = vec![
            BiclosedDescriptor::finite(w(&[1])),
            BiclosedDescriptor::finite(w(&[1, 2, 3])),
            BiclosedDescriptor::finite(Word::identity()),
            BiclosedDescriptor::cofinite(w(&[2])),
        ];
        for (side, mode, k) in [(End::Right, Mode::Cofinite, 1), (End::Left, Mode::Cofinite, 2), (End::Left, Mode::Cofinite, 0)] {
            ds.push(BiclosedDescriptor::Infinite { line: l.clone(), side: HalfSide::Far, boundary: Some(Rank2Biclosed::new(side, mode, k)) });
        }
        ds.push(BiclosedDescriptor::Infinite { line: l, side: HalfSide::Near, boundary: Some(Rank2Biclosed::new(End::Left, Mode::Finite, 2)) });
        for d in ds {
            let ev = cji_by_definition(&d, 12).unwrap();
            assert_eq!(ev.join_irreducible, is_complete_join_irreducible(&d), "{d} {ev:?}");
        }
    }
}
