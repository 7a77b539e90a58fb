//! Positive roots as Cayley-tree edges: construction, inversion sets and
//! breadth-first enumeration.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::Error;
use crate::linalg::{act, IVec3, Mat3};
use crate::word::{Generator, Word};

/// A positive root with its height and tree depth.
///
/// Equality, hashing and ordering only look at the vector; ordering is by
/// height first so sorted sets read naturally.
#[derive(Clone, Debug)]
pub struct Root {
    pub vec: IVec3,
    pub height: BigInt,
    pub depth: u32,
}

impl Root {
    /// Wraps a vector with a known depth. The vector must be a positive root.
    pub fn new(vec: IVec3, depth: u32) -> Self {
        debug_assert!(vec.is_nonnegative() && vec.q().is_one());
        let height = vec.sum();
        Root { vec, height, depth }
    }

    pub fn simple(g: Generator) -> Self {
        Root::new(IVec3::basis(g), 1)
    }

    pub fn simples() -> [Root; 3] {
        Generator::ALL.map(Root::simple)
    }

    pub fn height_u64(&self) -> u64 {
        self.height.to_u64().unwrap_or(u64::MAX)
    }
}

impl PartialEq for Root {
    fn eq(&self, o: &Self) -> bool {
        self.vec == o.vec
    }
}
impl Eq for Root {}

impl Hash for Root {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.vec.hash(h)
    }
}

impl Ord for Root {
    fn cmp(&self, o: &Self) -> Ordering {
        self.height.cmp(&o.height).then_with(|| self.vec.cmp(&o.vec))
    }
}
impl PartialOrd for Root {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// An edge `w → w·s` of the Cayley tree, oriented away from the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub lower: Word,
    pub gen: Generator,
}

impl Edge {
    pub fn new(lower: Word, gen: Generator) -> Result<Self, Error> {
        if !lower.ascends(gen) {
            return Err(Error::EdgeTowardIdentity);
        }
        Ok(Edge { lower, gen })
    }

    pub fn upper(&self) -> Word {
        self.lower.times(self.gen)
    }

    pub fn depth(&self) -> u32 {
        self.lower.len() as u32 + 1
    }

    /// The edge whose upper endpoint is `w` (none for the identity).
    pub fn into_vertex(w: &Word) -> Option<Edge> {
        let g = w.last()?;
        Some(Edge { lower: w.prefix(w.len() - 1), gen: g })
    }

    /// The two edges leaving `w·s` away from the identity.
    pub fn children(&self) -> [Edge; 2] {
        let up = self.upper();
        self.gen.others().map(|h| Edge { lower: up.clone(), gen: h })
    }

    pub fn root(&self) -> Root {
        Root::new(act(&self.lower, &IVec3::basis(self.gen)), self.depth())
    }
}

/// `w · αi` for an edge pointing away from the identity.
pub fn positive_root_of_edge(w: &Word, i: Generator) -> Result<Root, Error> {
    Ok(Edge::new(w.clone(), i)?.root())
}

/// Inversion set as the edge labels along the tree path from the identity.
pub fn inversion_set(w: &Word) -> Vec<Root> {
    let mut out = Vec::with_capacity(w.len());
    let mut m = Mat3::identity();
    for (k, &g) in w.letters().iter().enumerate() {
        out.push(Root::new(m.column(g), k as u32 + 1));
        m = m.mul_generator(g);
    }
    out
}

/// Inversion set by the defining test: `β` such that `w⁻¹ β` is negative,
/// scanned over the supplied candidates.
pub fn inversion_set_by_matrix<'a, I: IntoIterator<Item = &'a Root>>(w: &Word, candidates: I) -> Vec<Root> {
    let winv = Mat3::of_word(&w.inverse());
    candidates
        .into_iter()
        .filter(|b| winv.apply(&b.vec).is_nonpositive())
        .cloned()
        .collect()
}

/// Whether `β ∈ Inv(w)` by the matrix test.
pub fn is_inversion(w: &Word, beta: &IVec3) -> bool {
    Mat3::of_word(&w.inverse()).apply(beta).is_nonpositive()
}

/// Tree edge of an arbitrary vector, found by reflecting it down to a simple
/// root along height-decreasing simple reflections. Fails unless the vector
/// is a positive root.
pub fn locate_root(v: &IVec3) -> Result<Edge, Error> {
    let bad = || Error::UnknownRoot(v.bracket());
    if !v.is_nonnegative() || !v.q().is_one() {
        return Err(bad());
    }
    let mut cur = v.clone();
    let mut path: Vec<Generator> = Vec::new();
    loop {
        if let Some(g) = Generator::ALL.into_iter().find(|&g| cur == IVec3::basis(g)) {
            let lower = Word::from_reduced(path).map_err(|_| bad())?;
            return Edge::new(lower, g).map_err(|_| bad());
        }
        let s = cur.sum();
        let g = Generator::ALL
            .into_iter()
            .find(|&g| cur.get(g.pos()) * 2 > s)
            .ok_or_else(bad)?;
        cur = cur.reflect(&IVec3::basis(g));
        if !cur.is_nonnegative() {
            return Err(bad());
        }
        path.push(g);
    }
}

/// A root produced by enumeration, with its tree position.
#[derive(Clone, Debug)]
pub struct EnumeratedRoot {
    pub root: Root,
    pub parent: Option<Root>,
    pub edge: Edge,
}

struct Frontier {
    edge: Edge,
    root: Root,
    /// Matrix of the lower endpoint.
    lower: Mat3,
}

/// Breadth-first enumeration of tree edges up to `max_depth`, optionally
/// pruning subtrees whose root height exceeds `max_height`.
///
/// Pruning is only used after height monotonicity has been checked (see
/// [`height_monotone_up_to`]); every expanded edge is also re-checked and a
/// violation falls back to the unpruned walk.
pub fn enumerate_roots(max_depth: u32, max_height: Option<&BigInt>) -> Vec<EnumeratedRoot> {
    assert!(max_depth >= 1, "max_depth must be at least 1");
    match max_height {
        Some(h) if height_monotone_up_to(max_depth.min(MONOTONE_CHECK_DEPTH)) => {
            match walk(max_depth, Some(h)) {
                Some(v) => v,
                None => unpruned_then_filter(max_depth, h),
            }
        }
        Some(h) => unpruned_then_filter(max_depth, h),
        None => walk(max_depth, None).expect("unpruned walk never aborts"),
    }
}

/// Every root of height at most `h`. Depth never exceeds height, so the depth
/// bound `h` loses nothing.
pub fn roots_up_to_height(h: u64) -> Vec<EnumeratedRoot> {
    enumerate_roots(h.max(1) as u32, Some(&BigInt::from(h)))
}

fn unpruned_then_filter(max_depth: u32, h: &BigInt) -> Vec<EnumeratedRoot> {
    walk(max_depth, None)
        .expect("unpruned walk never aborts")
        .into_iter()
        .filter(|e| &e.root.height <= h)
        .collect()
}

/// Returns `None` if a pruned walk sees a child not higher than its parent.
fn walk(max_depth: u32, max_height: Option<&BigInt>) -> Option<Vec<EnumeratedRoot>> {
    let mut out = Vec::new();
    let mut layer: Vec<Frontier> = Generator::ALL
        .iter()
        .map(|&g| Frontier {
            edge: Edge { lower: Word::identity(), gen: g },
            root: Root::simple(g),
            lower: Mat3::identity(),
        })
        .collect();
    for r in &layer {
        out.push(EnumeratedRoot { root: r.root.clone(), parent: None, edge: r.edge.clone() });
    }
    for depth in 2..=max_depth {
        let mut next = Vec::with_capacity(layer.len() * 2);
        for f in &layer {
            let m = f.lower.mul_generator(f.edge.gen);
            for child in f.edge.children() {
                let root = Root::new(m.column(child.gen), depth);
                if let Some(h) = max_height {
                    if root.height <= f.root.height {
                        return None;
                    }
                    if &root.height > h {
                        continue;
                    }
                }
                out.push(EnumeratedRoot { root: root.clone(), parent: Some(f.root.clone()), edge: child.clone() });
                next.push(Frontier { edge: child, root, lower: m.clone() });
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Some(out)
}

/// Depth to which height monotonicity is verified exhaustively before any
/// pruned enumeration (deeper pruned walks keep checking edge by edge).
pub const MONOTONE_CHECK_DEPTH: u32 = 12;

/// Exhaustive check that child roots are strictly higher than parent roots
/// for all edges up to `depth`. Results are cached.
pub fn height_monotone_up_to(depth: u32) -> bool {
    static CACHE: OnceLock<u32> = OnceLock::new();
    let verified = *CACHE.get_or_init(|| {
        let all = walk(MONOTONE_CHECK_DEPTH, None).expect("unpruned walk never aborts");
        let ok = all
            .iter()
            .all(|e| e.parent.as_ref().map_or(true, |p| e.root.height > p.height));
        if ok {
            MONOTONE_CHECK_DEPTH
        } else {
            0
        }
    });
    depth <= verified
}

/// Read-only map from root vectors to their tree edges.
#[derive(Clone, Debug, Default)]
pub struct RootIndex {
    map: HashMap<IVec3, (Edge, Root)>,
}

impl RootIndex {
    pub fn build<'a, I: IntoIterator<Item = &'a EnumeratedRoot>>(roots: I) -> Self {
        let map = roots
            .into_iter()
            .map(|e| (e.root.vec.clone(), (e.edge.clone(), e.root.clone())))
            .collect();
        RootIndex { map }
    }

    pub fn edge(&self, v: &IVec3) -> Result<&Edge, Error> {
        self.map.get(v).map(|p| &p.0).ok_or_else(|| Error::UnknownRoot(v.bracket()))
    }

    pub fn root(&self, v: &IVec3) -> Option<&Root> {
        self.map.get(v).map(|p| &p.1)
    }

    pub fn contains(&self, v: &IVec3) -> bool {
        self.map.contains_key(v)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}
