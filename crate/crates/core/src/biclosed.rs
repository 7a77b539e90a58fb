//! Root sets inside truncations: closedness, closures, joins, and colorings
//! of the Cayley tree.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::Face;
use crate::error::Error;
use crate::geometry::{rescale, AffinePoint};
use crate::linalg::IVec3;
use crate::roots::{enumerate_roots, locate_root, Edge, Root};
use crate::separation::{convex_combination, convex_hull};
use crate::truncation::Truncation;
use crate::word::{Generator, Word};

/// A finite set of positive roots with the bounds it was computed under.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSet {
    pub height_bound: Option<u64>,
    pub depth_bound: Option<u32>,
    roots: BTreeSet<Root>,
}

impl RootSet {
    pub fn new<I: IntoIterator<Item = Root>>(height_bound: Option<u64>, depth_bound: Option<u32>, roots: I) -> Self {
        RootSet { height_bound, depth_bound, roots: roots.into_iter().collect() }
    }

    pub fn with_height<I: IntoIterator<Item = Root>>(n: u64, roots: I) -> Self {
        RootSet::new(Some(n), None, roots)
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn contains_vec(&self, v: &IVec3) -> bool {
        self.roots.contains(&Root { vec: v.clone(), height: v.sum(), depth: 0 })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter()
    }

    /// Members of height at most `n`, relabelled with that bound.
    pub fn restrict_height(&self, n: u64) -> RootSet {
        let h = num_bigint::BigInt::from(n);
        RootSet::new(Some(n), self.depth_bound, self.roots.iter().filter(|r| r.height <= h).cloned())
    }

    pub fn union<'a, I: IntoIterator<Item = &'a RootSet>>(sets: I) -> RootSet {
        let mut out = RootSet::default();
        for s in sets {
            out.roots.extend(s.roots.iter().cloned());
            out.height_bound = match (out.height_bound, s.height_bound) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        out
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.roots.is_subset(&other.roots)
    }

    pub fn difference(&self, other: &RootSet) -> Vec<Root> {
        self.roots.difference(&other.roots).cloned().collect()
    }

    fn mask(&self, t: &Truncation) -> Vec<bool> {
        let mut m = vec![false; t.len()];
        for r in &self.roots {
            if let Some(i) = t.index_of(&r.vec) {
                m[i] = true;
            }
        }
        m
    }

    fn from_mask(t: &Truncation, m: &[bool], n: u64) -> RootSet {
        let h = num_bigint::BigInt::from(n);
        RootSet::with_height(
            n,
            t.roots.iter().zip(m).filter(|(r, &b)| b && r.height <= h).map(|(r, _)| r.clone()),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RootSetRepr {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    height_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    depth_bound: Option<u32>,
    roots: Vec<[i64; 3]>,
}

/// `[x,y,z]` as machine integers (serialization only).
pub fn root_to_array(r: &IVec3) -> Result<[i64; 3], String> {
    use num_traits::ToPrimitive;
    let f = |t: &num_bigint::BigInt| t.to_i64().ok_or_else(|| format!("root {} exceeds 64 bits", r.bracket()));
    Ok([f(&r.x)?, f(&r.y)?, f(&r.z)?])
}

/// Validates a triple as a positive root and recovers its depth.
pub fn root_from_array(a: [i64; 3]) -> Result<Root, Error> {
    let v = IVec3::from_i64(a[0], a[1], a[2]);
    let e = locate_root(&v)?;
    Ok(Root::new(v, e.depth()))
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let roots = self
            .roots
            .iter()
            .map(|r| root_to_array(&r.vec))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        RootSetRepr { height_bound: self.height_bound, depth_bound: self.depth_bound, roots }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RootSetRepr::deserialize(d)?;
        let roots = r
            .roots
            .into_iter()
            .map(root_from_array)
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(RootSet::new(r.height_bound, r.depth_bound, roots))
    }
}

/// Whether each line's members in the set form one contiguous run.
fn closed_mask(t: &Truncation, m: &[bool], tangent_only: bool) -> bool {
    t.lines().lines.iter().filter(|l| l.tangent || !tangent_only).all(|l| {
        let inside: Vec<usize> = (0..l.members.len()).filter(|&k| m[l.members[k]]).collect();
        match (inside.first(), inside.last()) {
            (Some(a), Some(b)) => b - a + 1 == inside.len(),
            _ => true,
        }
    })
}

/// Closed within the truncation of height `n`: every rank-2 cone spanned by
/// two members stays inside, as far as the truncation sees.
pub fn is_closed(s: &RootSet, n: u64) -> bool {
    let t = Truncation::by_height(n);
    closed_mask(&t, &s.mask(&t), false)
}

/// `s` and its complement in the truncation of height `n` are both closed.
pub fn is_biclosed(s: &RootSet, n: u64) -> bool {
    let t = Truncation::by_height(n);
    let m = s.mask(&t);
    let c: Vec<bool> = m.iter().map(|b| !b).collect();
    closed_mask(&t, &m, false) && closed_mask(&t, &c, false)
}

/// Least fixpoint of filling each line between its extreme members.
fn closure_mask(t: &Truncation, mut m: Vec<bool>, tangent_only: bool) -> Vec<bool> {
    let idx = t.lines();
    let mut queue: VecDeque<usize> = VecDeque::new();
    let mut queued = vec![false; idx.lines.len()];
    for (i, &b) in m.iter().enumerate() {
        if b {
            for &l in &idx.incidence[i] {
                if !queued[l] && (idx.lines[l].tangent || !tangent_only) {
                    queued[l] = true;
                    queue.push_back(l);
                }
            }
        }
    }
    while let Some(l) = queue.pop_front() {
        queued[l] = false;
        let members = &idx.lines[l].members;
        let first = members.iter().position(|&i| m[i]);
        let last = members.iter().rposition(|&i| m[i]);
        if let (Some(a), Some(b)) = (first, last) {
            for &i in &members[a..=b] {
                if !m[i] {
                    m[i] = true;
                    for &l2 in &idx.incidence[i] {
                        if !queued[l2] && (idx.lines[l2].tangent || !tangent_only) {
                            queued[l2] = true;
                            queue.push_back(l2);
                        }
                    }
                }
            }
        }
    }
    m
}

/// Result of a closure computed at a work bound, reported at a target bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Closure {
    pub set: RootSet,
    /// Re-running at twice the work bound changes nothing at the target
    /// bound.
    pub stable: bool,
}

fn closure_at(x: &RootSet, n: u64, m: u64, tangent_only: bool) -> Closure {
    assert!(n <= m, "target bound must not exceed the work bound");
    let run = |bound: u64| {
        let t = Truncation::by_height(bound);
        let out = closure_mask(&t, x.restrict_height(bound).mask(&t), tangent_only);
        RootSet::from_mask(&t, &out, n)
    };
    let set = run(m);
    let stable = run(2 * m) == set;
    Closure { set, stable }
}

/// Smallest set containing `x` that is closed within height `m`, restricted
/// to height `n`. Members of `x` above `m` are ignored.
pub fn two_closure(x: &RootSet, n: u64, m: u64) -> Closure {
    closure_at(x, n, m, false)
}

/// As [`two_closure`], but only cones inside face subsystems are filled.
pub fn parabolic_two_closure(x: &RootSet, n: u64, m: u64) -> Closure {
    closure_at(x, n, m, true)
}

/// Roots of height at most `n` in the cone over `x`: the rescaled root must
/// be a convex combination of a triangle fanned from one hull vertex of the
/// rescaled generators.
pub fn convex_closure(x: &RootSet, n: u64) -> RootSet {
    let t = Truncation::by_height(n);
    if x.is_empty() {
        return RootSet::with_height(n, []);
    }
    let pts: Vec<AffinePoint> = x.iter().map(rescale).collect();
    let hull = convex_hull(&pts);
    RootSet::with_height(
        n,
        t.roots.iter().filter(|r| convex_combination(&pts, &hull, &rescale(r)).is_some()).cloned(),
    )
}

/// Output of [`join`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinResult {
    pub set: RootSet,
    pub stable: bool,
    /// In verification mode: whether the convex closure of the union agrees.
    pub verified: Option<bool>,
}

/// Join of biclosed sets as the 2-closure of their union at work bound `m`,
/// reported at height `n`. Inputs should be realized to height `2m` so the
/// stability re-run sees the larger union.
pub fn join(sets: &[RootSet], n: u64, m: u64, verify: bool) -> JoinResult {
    let union = RootSet::union(sets.iter());
    let (closure, convex) = rayon::join(
        || two_closure(&union, n, m),
        || verify.then(|| convex_closure(&union.restrict_height(m), n)),
    );
    let verified = convex.map(|c| c == closure.set);
    JoinResult { set: closure.set, stable: closure.stable, verified }
}

/// Edge colors: red edges are the set, blue edges its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn of(member: bool) -> Color {
        if member {
            Color::Red
        } else {
            Color::Blue
        }
    }
}

/// A coloring of (part of) the Cayley tree's edges.
pub trait Coloring: Sync {
    /// `None` outside the known region.
    fn color(&self, e: &Edge) -> Option<Color>;
    /// Deepest edge depth with a known color, if bounded.
    fn depth_limit(&self) -> Option<u32>;
}

/// A stored coloring of every edge up to depth `depth`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub depth: u32,
    colors: HashMap<Word, Color>,
}

impl Bipartition {
    /// Colors each root of depth at most `depth` red iff `member` holds.
    pub fn from_predicate(depth: u32, mut member: impl FnMut(&Root) -> bool) -> Bipartition {
        let colors = enumerate_roots(depth, None)
            .into_iter()
            .map(|e| (e.edge.upper(), Color::of(member(&e.root))))
            .collect();
        Bipartition { depth, colors }
    }

    pub fn from_set(depth: u32, red: &RootSet) -> Bipartition {
        Bipartition::from_predicate(depth, |r| red.contains(r))
    }

    /// Direct construction from edge colors keyed by upper endpoint. Fails
    /// unless every edge up to `depth` is colored.
    pub fn from_colors(depth: u32, colors: HashMap<Word, Color>) -> Result<Bipartition, Error> {
        let expected = 3 * ((1usize << depth) - 1);
        if colors.len() != expected || colors.keys().any(|w| w.is_empty() || w.len() > depth as usize) {
            return Err(Error::InvalidDescriptor("coloring is not total on the truncation".into()));
        }
        Ok(Bipartition { depth, colors })
    }

    /// No edge colored yet; fill with [`Bipartition::set`].
    pub fn empty(depth: u32) -> Bipartition {
        Bipartition { depth, colors: HashMap::new() }
    }

    pub fn set(&mut self, e: &Edge, c: Color) {
        self.colors.insert(e.upper(), c);
    }

    pub fn red(&self) -> RootSet {
        self.collect(Color::Red)
    }

    pub fn blue(&self) -> RootSet {
        self.collect(Color::Blue)
    }

    fn collect(&self, c: Color) -> RootSet {
        RootSet::new(
            None,
            Some(self.depth),
            self.colors.iter().filter(|(_, &k)| k == c).map(|(w, _)| Edge::into_vertex(w).unwrap().root()),
        )
    }

    pub fn count(&self, c: Color) -> usize {
        self.colors.values().filter(|&&k| k == c).count()
    }
}

impl Coloring for Bipartition {
    fn color(&self, e: &Edge) -> Option<Color> {
        self.colors.get(&e.upper()).copied()
    }

    fn depth_limit(&self) -> Option<u32> {
        Some(self.depth)
    }
}

/// Faces with at least one boundary edge of depth at most `depth`, keyed by
/// source vertex.
pub fn faces_up_to(depth: u32) -> Vec<Face> {
    let mut out = Vec::new();
    let [a, b, c] = Generator::ALL;
    out.extend([Face::new(&Word::identity(), a, b), Face::new(&Word::identity(), a, c), Face::new(&Word::identity(), b, c)]);
    for len in 1..depth as usize {
        for w in Word::all_of_length(len) {
            let [x, y] = w.last().unwrap().others();
            out.push(Face::new(&w, x, y));
        }
    }
    out
}

/// Number of color changes along a face's boundary in line order
/// (`β_{-1}, …, β_{-k}, β_k, …, β_1`), over the visible window of size at
/// most `k`. `None` if not even `β_{±1}` is visible.
pub fn line_order_changes(c: &dyn Coloring, f: &Face, k: usize) -> Option<usize> {
    let mut seq = Vec::new();
    let mut neg = Vec::new();
    let mut pos = Vec::new();
    for j in 1..=k as i64 {
        match (c.color(&f.edge(-j)), c.color(&f.edge(j))) {
            (Some(a), Some(b)) => {
                neg.push(a);
                pos.push(b);
            }
            _ => break,
        }
    }
    if neg.is_empty() {
        return None;
    }
    seq.extend(neg);
    seq.extend(pos.into_iter().rev());
    Some(seq.windows(2).filter(|p| p[0] != p[1]).count())
}

/// Every face window (size `k`, clipped to what the coloring shows) is an
/// initial or final segment of the face's boundary order.
pub fn is_parabolic_biclosed(c: &dyn Coloring, depth: u32, k: usize) -> bool {
    faces_up_to(depth).iter().all(|f| line_order_changes(c, f, k).map_or(true, |n| n <= 1))
}
