//! Height-bounded truncations of the positive roots, with every line of the
//! affine plane that carries at least three rescaled roots.
//!
//! Two roots span a cone whose roots are exactly the roots on the segment
//! between their rescalings, so closure questions reduce to intervals on
//! these lines.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::linalg::IVec3;
use crate::roots::{roots_up_to_height, Root};

/// Largest supported height bound (keeps line keys inside `i128`).
pub const MAX_HEIGHT: u64 = 1 << 20;

/// A line through three or more rescaled roots of a truncation.
#[derive(Clone, Debug)]
pub struct RootLine {
    /// Indices into [`Truncation::roots`], sorted along the line.
    pub members: Vec<usize>,
    /// Whether the line is tangent to the disk (a face line).
    pub tangent: bool,
}

#[derive(Clone, Debug, Default)]
pub struct LineIndex {
    pub lines: Vec<RootLine>,
    /// For each root, the lines through it.
    pub incidence: Vec<Vec<usize>>,
}

/// All positive roots of height at most `height_bound`, sorted by height.
#[derive(Debug)]
pub struct Truncation {
    pub height_bound: u64,
    pub roots: Vec<Root>,
    pos: HashMap<IVec3, usize>,
    lines: OnceLock<LineIndex>,
}

type K3 = [i128; 3];

fn small(v: &IVec3) -> K3 {
    [v.x.to_i128().unwrap(), v.y.to_i128().unwrap(), v.z.to_i128().unwrap()]
}

fn cross(a: &K3, b: &K3) -> K3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: &K3, b: &K3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Primitive, first nonzero entry positive.
fn canonical(mut v: K3) -> K3 {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g != 0 {
        v.iter_mut().for_each(|t| *t /= g);
    }
    if v.iter().find(|t| **t != 0).map_or(false, |t| *t < 0) {
        v.iter_mut().for_each(|t| *t = -*t);
    }
    v
}

impl Truncation {
    /// The shared truncation at height `n`, built once per bound.
    pub fn by_height(n: u64) -> Arc<Truncation> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Truncation>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&n) {
            return t.clone();
        }
        let t = Arc::new(Truncation::build(n));
        cache.lock().unwrap().entry(n).or_insert(t).clone()
    }

    fn build(n: u64) -> Truncation {
        assert!((1..=MAX_HEIGHT).contains(&n), "height bound out of range");
        let mut roots: Vec<Root> = roots_up_to_height(n).into_iter().map(|e| e.root).collect();
        roots.sort();
        let pos = roots.iter().enumerate().map(|(i, r)| (r.vec.clone(), i)).collect();
        Truncation { height_bound: n, roots, pos, lines: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, v: &IVec3) -> Option<usize> {
        self.pos.get(v).copied()
    }

    pub fn lines(&self) -> &LineIndex {
        self.lines.get_or_init(|| self.build_lines())
    }

    fn build_lines(&self) -> LineIndex {
        let vs: Vec<K3> = self.roots.iter().map(|r| small(&r.vec)).collect();
        let mut found: HashMap<K3, Vec<usize>> = HashMap::new();
        for i in 0..vs.len() {
            let mut local: HashMap<K3, Vec<usize>> = HashMap::new();
            for j in i + 1..vs.len() {
                local.entry(canonical(cross(&vs[i], &vs[j]))).or_default().push(j);
            }
            for (key, js) in local {
                if js.len() >= 2 && !found.contains_key(&key) {
                    let mut m = js;
                    m.push(i);
                    found.insert(key, m);
                }
            }
        }
        let mut keys: Vec<K3> = found.keys().copied().collect();
        keys.sort();
        let mut lines = Vec::with_capacity(keys.len());
        let mut incidence = vec![Vec::new(); vs.len()];
        for key in keys {
            let mut members = found.remove(&key).unwrap();
            let d = cross(&key, &[1, 1, 1]);
            let at = |i: usize| (dot(&d, &vs[i]), vs[i].iter().sum::<i128>());
            members.sort_by(|&a, &b| {
                let (pa, sa) = at(a);
                let (pb, sb) = at(b);
                (pa * sb).cmp(&(pb * sa))
            });
            // form normal (I − J) key; tangent iff its Q vanishes
            let s: i128 = key.iter().sum();
            let u = [key[0] - s, key[1] - s, key[2] - s];
            let q = 2 * dot(&u, &u) - u.iter().sum::<i128>().pow(2);
            let id = lines.len();
            for &m in &members {
                incidence[m].push(id);
            }
            lines.push(RootLine { members, tangent: q == 0 });
        }
        LineIndex { lines, incidence }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::rank2_cone_roots;

    #[test]
    fn counts() {
        for (h, n) in [(3, 9), (20, 75), (40, 183), (60, 297)] {
            assert_eq!(Truncation::by_height(h).len(), n);
        }
    }

    #[test]
    fn segments_are_cones() {
        // for every pair on a line, the members strictly between are the cone
        let t = Truncation::by_height(40);
        let idx = t.lines();
        for line in &idx.lines {
            let m = &line.members;
            for a in 0..m.len() {
                for b in a + 1..m.len() {
                    let cone = rank2_cone_roots(&t.roots[m[a]], &t.roots[m[b]], &t.roots);
                    assert_eq!(cone.len(), b - a + 1);
                    for k in a..=b {
                        assert!(cone.contains(&t.roots[m[k]]));
                    }
                }
            }
        }
    }

    #[test]
    fn pairs_off_lines_span_no_other_root() {
        let t = Truncation::by_height(20);
        let idx = t.lines();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let shared = idx.incidence[i].iter().any(|l| idx.incidence[j].contains(l));
                if !shared {
                    assert_eq!(rank2_cone_roots(&t.roots[i], &t.roots[j], &t.roots).len(), 2);
                }
            }
        }
    }

    #[test]
    fn tangent_flag_matches_classification() {
        use crate::geometry::{classify_line, line_through, rescale, DiskClass};
        let t = Truncation::by_height(30);
        for line in &t.lines().lines {
            let a = rescale(&t.roots[line.members[0]]);
            let b = rescale(&t.roots[line.members[1]]);
            let class = classify_line(&line_through(&a, &b).unwrap());
            assert_ne!(class, DiskClass::Exterior);
            assert_eq!(line.tangent, class == DiskClass::Tangent);
        }
    }
}
