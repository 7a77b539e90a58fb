//! Faces of the Cayley tree (rank-2 parabolic cosets), their boundary roots
//! and the rank-2 cones spanned by pairs of roots.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::geometry::{line_through, rescale, AffLine, AffinePoint};
use crate::linalg::{act, sign, IVec3};
use crate::roots::{Edge, Root, RootIndex};
use crate::word::{Generator, Word};

/// A face: the coset `src · ⟨si, sj⟩`, keyed by its shortest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    src: Word,
    pair: [Generator; 2],
}

impl Face {
    /// The face of the coset `w · ⟨si, sj⟩`.
    pub fn new(w: &Word, a: Generator, b: Generator) -> Face {
        assert!(a != b, "a face needs two distinct generators");
        let pair = if a < b { [a, b] } else { [b, a] };
        Face { src: w.strip_suffix_in(pair), pair }
    }

    pub fn src(&self) -> &Word {
        &self.src
    }

    /// The two generators, ordered `i < j`.
    pub fn pair(&self) -> [Generator; 2] {
        self.pair
    }

    /// The boundary vertex `u_j`: `u_0 = src`, positive positions start with
    /// `si`, negative ones with `sj`, letters alternating.
    pub fn vertex(&self, j: i64) -> Word {
        let (first, second) = if j >= 0 { (self.pair[0], self.pair[1]) } else { (self.pair[1], self.pair[0]) };
        let mut w = self.src.clone();
        for step in 0..j.unsigned_abs() {
            w = w.times(if step % 2 == 0 { first } else { second });
        }
        w
    }

    /// The boundary edge `β_j` (`j ≠ 0`): from `u_{j∓1}` to `u_j`.
    pub fn edge(&self, j: i64) -> Edge {
        assert!(j != 0, "boundary positions are nonzero");
        let lower = self.vertex(j - j.signum());
        let upper = self.vertex(j);
        let gen = *upper.letters().last().expect("nonempty");
        Edge { lower, gen }
    }

    pub fn root(&self, j: i64) -> Root {
        self.edge(j).root()
    }

    /// `src · (αi + αj)`: the ideal point the face's boundary accumulates to.
    pub fn ideal_point(&self) -> AffinePoint {
        let v = IVec3::basis(self.pair[0]) + IVec3::basis(self.pair[1]);
        AffinePoint::from_homogeneous(&act(&self.src, &v)).expect("positive vector")
    }

    /// The line carrying the rescaled boundary roots; tangent to the disk at
    /// [`Face::ideal_point`].
    pub fn line(&self) -> AffLine {
        line_through(&rescale(&self.root(1)), &rescale(&self.root(-1))).expect("distinct simple roots")
    }

    /// Position of an edge on this face's boundary, if it lies there.
    pub fn position_of(&self, e: &Edge) -> Option<i64> {
        let up = e.upper();
        if !self.src.is_prefix_of(&up) || up.len() == self.src.len() {
            return None;
        }
        let tail = &up.letters()[self.src.len()..];
        if !tail.iter().all(|g| self.pair.contains(g)) {
            return None;
        }
        let n = tail.len() as i64;
        Some(if tail[0] == self.pair[0] { n } else { -n })
    }

    /// The boundary window `β_{-k} … β_{-1}, β_1 … β_k`.
    pub fn window(&self, k: usize) -> BoundaryWindow {
        assert!(k >= 1, "window size must be positive");
        let k = k as i64;
        let entries = (-k..=k)
            .filter(|&j| j != 0)
            .map(|j| {
                let edge = self.edge(j);
                let root = edge.root();
                WindowEntry { position: j, edge, root }
            })
            .collect();
        BoundaryWindow { face: self.clone(), k: k as usize, entries }
    }

    /// The three faces around a vertex.
    pub fn around(w: &Word) -> [Face; 3] {
        let [a, b, c] = Generator::ALL;
        [Face::new(w, a, b), Face::new(w, a, c), Face::new(w, b, c)]
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {{{},{}}})", self.src, self.pair[0].index(), self.pair[1].index())
    }
}

#[derive(Serialize, Deserialize)]
struct FaceRepr {
    src: Word,
    pair: [Generator; 2],
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FaceRepr { src: self.src.clone(), pair: self.pair }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = FaceRepr::deserialize(d)?;
        if r.pair[0] == r.pair[1] {
            return Err(serde::de::Error::custom("face pair must have distinct generators"));
        }
        let f = Face::new(&r.src, r.pair[0], r.pair[1]);
        if f.src != r.src {
            return Err(serde::de::Error::custom("face src must be the shortest coset element"));
        }
        Ok(f)
    }
}

/// One boundary position of a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowEntry {
    pub position: i64,
    pub edge: Edge,
    pub root: Root,
}

/// Boundary roots of a face at positions `-k..=k` (zero excluded), in
/// increasing position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryWindow {
    pub face: Face,
    pub k: usize,
    pub entries: Vec<WindowEntry>,
}

impl BoundaryWindow {
    pub fn at(&self, j: i64) -> &WindowEntry {
        let k = self.k as i64;
        assert!(j != 0 && j.abs() <= k, "position outside the window");
        let idx = if j < 0 { j + k } else { j + k - 1 };
        &self.entries[idx as usize]
    }

    /// Positions in the order of the rescaled roots along the face line:
    /// `-1, -2, …, -k, k, …, 2, 1`.
    pub fn line_order(&self) -> Vec<i64> {
        let k = self.k as i64;
        (1..=k).map(|j| -j).chain((1..=k).rev()).collect()
    }
}

/// `(w, w·s)` for the edge labelled by a root.
pub fn edge_endpoints(index: &RootIndex, beta: &IVec3) -> Result<(Word, Word), Error> {
    let e = index.edge(beta)?;
    Ok((e.lower.clone(), e.upper()))
}

/// The two faces bordered by an edge, with whether the edge's root is
/// relatively simple (a boundary edge at the source) in each.
pub fn faces_of_edge(e: &Edge) -> [(Face, bool); 2] {
    let [a, b] = e.gen.others();
    [a, b].map(|h| {
        let f = Face::new(&e.lower, e.gen, h);
        let simple = f.src() == &e.lower;
        (f, simple)
    })
}

/// Roots `γ` with `height ≤ bound` in the cone spanned by `α, β`, found by
/// scanning `candidates` and solving `γ = aα + bβ` exactly.
pub fn rank2_cone_roots<'a, I>(alpha: &Root, beta: &Root, candidates: I) -> Vec<Root>
where
    I: IntoIterator<Item = &'a Root>,
{
    assert!(alpha != beta, "cone generators must differ");
    let n = alpha.vec.cross(&beta.vec);
    let mut out: Vec<Root> = candidates
        .into_iter()
        .filter(|g| in_cone(&alpha.vec, &beta.vec, &n, &g.vec))
        .cloned()
        .collect();
    out.sort();
    out
}

/// Whether `g ∈ cone(a, b)`, given `n = a × b ≠ 0`: `g` must be in the span,
/// and `g × b`, `a × g` must point along `n`.
pub fn in_cone(a: &IVec3, b: &IVec3, n: &IVec3, g: &IVec3) -> bool {
    n.dot(g) == 0.into() && sign(&g.cross(b).dot(n)) >= 0 && sign(&a.cross(g).dot(n)) >= 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{classify_line, DiskClass};
    use crate::roots::{enumerate_roots, roots_up_to_height};

    fn w(ix: &[u8]) -> Word {
        Word::from_indices(ix).unwrap()
    }

    fn v(x: i64, y: i64, z: i64) -> IVec3 {
        IVec3::from_i64(x, y, z)
    }

    #[test]
    fn window_examples() {
        let f = Face::new(&Word::identity(), Generator::S1, Generator::S2);
        let win = f.window(2);
        assert_eq!(win.at(1).root.vec, v(1, 0, 0));
        assert_eq!(win.at(2).root.vec, v(2, 1, 0));
        assert_eq!(win.at(-1).root.vec, v(0, 1, 0));
        assert_eq!(win.at(-2).root.vec, v(1, 2, 0));
        let f = Face::new(&w(&[3]), Generator::S1, Generator::S2);
        assert_eq!(f.root(1).vec, v(1, 0, 2));
        assert_eq!(f.root(-1).vec, v(0, 1, 2));
    }

    #[test]
    fn faces_of_edge_examples() {
        let e = Edge::new(Word::identity(), Generator::S1).unwrap();
        let fs = faces_of_edge(&e);
        assert!(fs.iter().all(|(_, s)| *s));
        let e = Edge::new(w(&[1]), Generator::S2).unwrap();
        assert_eq!(e.root().vec, v(2, 1, 0));
        let fs = faces_of_edge(&e);
        assert_eq!(fs[0], (Face::new(&Word::identity(), Generator::S1, Generator::S2), false));
        assert_eq!(fs[1], (Face::new(&w(&[1]), Generator::S2, Generator::S3), true));
        let e = Edge::new(w(&[1, 2]), Generator::S1).unwrap();
        assert_eq!(e.root().vec, v(3, 2, 0));
        let fs = faces_of_edge(&e);
        assert_eq!(fs[0].0, Face::new(&Word::identity(), Generator::S1, Generator::S2));
        assert_eq!(fs[1], (Face::new(&w(&[1, 2]), Generator::S1, Generator::S3), true));
    }

    #[test]
    fn endpoints_from_index() {
        let all = enumerate_roots(4, None);
        let idx = RootIndex::build(&all);
        assert_eq!(edge_endpoints(&idx, &v(0, 1, 0)).unwrap(), (Word::identity(), w(&[2])));
        assert_eq!(edge_endpoints(&idx, &v(2, 1, 0)).unwrap(), (w(&[1]), w(&[1, 2])));
        assert_eq!(edge_endpoints(&idx, &v(3, 2, 0)).unwrap(), (w(&[1, 2]), w(&[1, 2, 1])));
        assert!(edge_endpoints(&idx, &v(5, 5, 5)).is_err());
    }

    #[test]
    fn every_root_in_two_faces_once_relatively_simple() {
        for e in enumerate_roots(8, None) {
            let fs = faces_of_edge(&e.edge);
            assert_ne!(fs[0].0, fs[1].0);
            let simple = fs.iter().filter(|(_, s)| *s).count();
            if e.edge.depth() == 1 {
                assert_eq!(simple, 2);
            } else {
                assert_eq!(simple, 1);
            }
            for (f, _) in &fs {
                let j = f.position_of(&e.edge).expect("edge on its face");
                assert_eq!(f.root(j), e.root);
            }
        }
    }

    #[test]
    fn window_collinear_ordered_and_tangent() {
        for d in 0..=5 {
            for src in std::iter::once(Word::identity()).chain(Word::all_of_length(d)) {
                if d > 0 && src.is_empty() {
                    continue;
                }
                for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                    let (a, b) = (Generator::ALL[a], Generator::ALL[b]);
                    if src.last().map_or(false, |g| g == a || g == b) {
                        continue;
                    }
                    let f = Face::new(&src, a, b);
                    let line = f.line();
                    assert_eq!(classify_line(&line), DiskClass::Tangent);
                    assert_eq!(crate::geometry::tangency_point(&line), Some(f.ideal_point()));
                    let win = f.window(6);
                    let order = win.line_order();
                    let pts: Vec<_> = order.iter().map(|&j| win.at(j).root.vec.clone()).collect();
                    for p in &pts {
                        assert_eq!(line.side_of_vec(p), 0);
                    }
                    let dir = line.order(&pts[0], &pts[1]);
                    assert_ne!(dir, 0);
                    for pair in pts.windows(2) {
                        assert_eq!(line.order(&pair[0], &pair[1]), dir);
                    }
                    assert_eq!(&f.window(5).entries[..5], &win.entries[1..6]);
                }
            }
        }
    }

    #[test]
    fn distinct_faces_have_distinct_vertex_sets() {
        use std::collections::HashSet;
        let mut seen: HashSet<Vec<Word>> = HashSet::new();
        let mut faces: HashSet<Face> = HashSet::new();
        for src in std::iter::once(Word::identity()).chain(Word::all_up_to(6)) {
            for f in Face::around(&src) {
                faces.insert(f);
            }
        }
        for f in &faces {
            let mut vs: Vec<Word> = (-4..=4).map(|j| f.vertex(j)).collect();
            vs.sort();
            assert!(seen.insert(vs), "face {f} repeats a vertex set");
        }
    }

    #[test]
    fn cone_examples() {
        let roots: Vec<Root> = roots_up_to_height(20).into_iter().map(|e| e.root).collect();
        let a1 = Root::new(v(1, 0, 0), 1);
        let a2 = Root::new(v(0, 1, 0), 1);
        let r210 = Root::new(v(2, 1, 0), 2);
        let r120 = Root::new(v(1, 2, 0), 2);
        let small: Vec<Root> = roots.iter().filter(|r| r.height_u64() <= 3).cloned().collect();
        let got: Vec<IVec3> = rank2_cone_roots(&a1, &a2, &small).into_iter().map(|r| r.vec).collect();
        assert_eq!(got.len(), 4);
        for x in [v(1, 0, 0), v(0, 1, 0), v(2, 1, 0), v(1, 2, 0)] {
            assert!(got.contains(&x));
        }
        let got = rank2_cone_roots(&a1, &r210, &roots);
        assert_eq!(got.len(), 2);
        let got = rank2_cone_roots(&a1, &r120, &roots);
        let plane: Vec<&Root> = roots.iter().filter(|r| r.vec.z == 0.into()).collect();
        assert_eq!(got.len(), plane.len() - 1);
        assert!(!got.iter().any(|r| r.vec == v(0, 1, 0)));
    }

    #[test]
    fn cone_matches_face_order() {
        // pairs on a face boundary: the cone is the run between them in line order
        let roots: Vec<Root> = roots_up_to_height(200).into_iter().map(|e| e.root).collect();
        for f in Face::around(&w(&[1, 3])).iter().chain(Face::around(&Word::identity()).iter()) {
            let win = f.window(5);
            let order = win.line_order();
            for a in 0..order.len() {
                for b in a + 1..order.len() {
                    let ra = &win.at(order[a]).root;
                    let rb = &win.at(order[b]).root;
                    let cone = rank2_cone_roots(ra, rb, &roots);
                    let cone_in_window: Vec<&Root> =
                        cone.iter().filter(|r| win.entries.iter().any(|e| &e.root == *r)).collect();
                    assert_eq!(cone_in_window.len(), b - a + 1);
                    for r in &cone {
                        assert!(r.height > ra.height.clone().min(rb.height.clone()) || r == ra || r == rb);
                    }
                }
            }
        }
    }
}
