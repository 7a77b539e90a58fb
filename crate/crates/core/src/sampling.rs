//! Seeded random inputs: descriptors of biclosed sets and parabolic biclosed
//! colorings of the tree.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::biclosed::{Bipartition, Color, Coloring};
use crate::complex::Face;
use crate::descriptor::{line_content, BiclosedDescriptor, End, HalfSide, LineContent, Mode, Rank2Biclosed};
use crate::geometry::{classify_line, line_through, rescale, DiskClass};
use crate::roots::{enumerate_roots, Edge};
use crate::truncation::Truncation;
use crate::word::{Generator, Word};

pub use rand::SeedableRng;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Height of the roots used to pick random lines.
const LINE_ROOT_HEIGHT: u64 = 30;

pub fn random_word(rng: &mut Rng64, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters = Vec::with_capacity(len);
    while letters.len() < len {
        let g = Generator::ALL[rng.gen_range(0..3)];
        if letters.last() != Some(&g) {
            letters.push(g);
        }
    }
    Word::from_reduced(letters).expect("no repeated adjacent letters")
}

fn random_boundary(rng: &mut Rng64, content: &LineContent, tangent: bool, side: HalfSide) -> Option<Rank2Biclosed> {
    match content {
        LineContent::Empty => None,
        LineContent::Single(_) => rng.gen_bool(0.5).then(Rank2Biclosed::full),
        LineContent::Rank2 { .. } => {
            let mode = if tangent {
                if side == HalfSide::Far {
                    Mode::Cofinite
                } else {
                    Mode::Finite
                }
            } else if rng.gen_bool(0.5) {
                Mode::Finite
            } else {
                Mode::Cofinite
            };
            let end = if rng.gen_bool(0.5) { End::Left } else { End::Right };
            Some(Rank2Biclosed::new(end, mode, rng.gen_range(0..4)))
        }
    }
}

/// A half-plane descriptor on a secant line through two rescaled roots.
pub fn random_secant_descriptor(rng: &mut Rng64) -> BiclosedDescriptor {
    let t = Truncation::by_height(LINE_ROOT_HEIGHT);
    loop {
        let a = t.roots.choose(rng).unwrap();
        let b = t.roots.choose(rng).unwrap();
        let Ok(line) = line_through(&rescale(a), &rescale(b)) else { continue };
        if classify_line(&line) != DiskClass::Secant {
            continue;
        }
        let side = if rng.gen_bool(0.5) { HalfSide::Far } else { HalfSide::Near };
        let content = line_content(&line, LINE_ROOT_HEIGHT);
        let boundary = random_boundary(rng, &content, false, side);
        let d = BiclosedDescriptor::Infinite { line, side, boundary };
        if let Ok(r) = d.resolve() {
            return r.desc;
        }
    }
}

/// A half-plane descriptor on the tangent line of a random face.
pub fn random_tangent_descriptor(rng: &mut Rng64) -> BiclosedDescriptor {
    loop {
        let w = random_word(rng, 4);
        let (a, b) = match w.last() {
            Some(g) => {
                let [a, b] = g.others();
                (a, b)
            }
            None => {
                let mut gs = Generator::ALL.to_vec();
                gs.shuffle(rng);
                (gs[0], gs[1])
            }
        };
        let face = Face::new(&w, a, b);
        let line = face.line();
        let side = if rng.gen_bool(0.5) { HalfSide::Far } else { HalfSide::Near };
        let content = line_content(&line, LINE_ROOT_HEIGHT);
        let boundary = random_boundary(rng, &content, true, side);
        let d = BiclosedDescriptor::Infinite { line, side, boundary };
        if let Ok(r) = d.resolve() {
            return r.desc;
        }
    }
}

/// Secant with probability 3/4, otherwise tangent.
pub fn random_infinite_descriptor(rng: &mut Rng64) -> BiclosedDescriptor {
    if rng.gen_bool(0.75) {
        random_secant_descriptor(rng)
    } else {
        random_tangent_descriptor(rng)
    }
}

/// Finite, cofinite or infinite, roughly one third each.
pub fn random_descriptor(rng: &mut Rng64) -> BiclosedDescriptor {
    match rng.gen_range(0..3) {
        0 => BiclosedDescriptor::finite(random_word(rng, 6)),
        1 => BiclosedDescriptor::cofinite(random_word(rng, 6)),
        _ => random_infinite_descriptor(rng),
    }
}

/// The face in which `e` is not one of the two edges at the source, with
/// its position there. Edges at `v_id` have none.
pub fn binding_face(e: &Edge) -> Option<(Face, i64)> {
    let h = e.lower.last()?;
    let f = Face::new(&e.lower, h, e.gen);
    let j = f.position_of(e).expect("edge on its face");
    Some((f, j))
}

/// A random coloring up to `depth` whose restriction to every face is an
/// initial or final segment of the face's boundary order, with both colors
/// among the simple roots (otherwise the coloring is constant). Edges are colored
/// by depth; each edge keeps the color of its predecessor on the face with
/// probability `stay`, and switches only when the face stays extendable.
pub fn random_parabolic_biclosed(rng: &mut Rng64, depth: u32, stay: f64) -> Bipartition {
    let mut bp = Bipartition::empty(depth);
    let mut edges: Vec<Edge> = enumerate_roots(depth, None).into_iter().map(|e| e.edge).collect();
    edges.sort_by_key(|e| e.depth());
    let simple = loop {
        let c: Vec<bool> = (0..3).map(|_| rng.gen_bool(0.5)).collect();
        if c.iter().any(|&x| x) && !c.iter().all(|&x| x) {
            break c;
        }
    };
    for e in &edges {
        let Some((f, j)) = binding_face(e) else {
            bp.set(e, Color::of(simple[e.gen.pos()]));
            continue;
        };
        let prev = bp.color(&f.edge(j - j.signum())).expect("shallower edge");
        let other = if prev == Color::Red { Color::Blue } else { Color::Red };
        let c = if !rng.gen_bool(stay) && switch_allowed(&bp, &f, j, other) { other } else { prev };
        bp.set(e, c);
    }
    bp
}

/// Whether giving `β_j` color `c` keeps the face completable: changes inside
/// the colored negative run, inside the positive run, and between their last
/// entries add up to at most one.
fn switch_allowed(bp: &Bipartition, f: &Face, j: i64, c: Color) -> bool {
    let run = |sign: i64| {
        let mut out = Vec::new();
        let mut i = 1;
        loop {
            let pos = sign * i;
            let col = if pos == j { Some(c) } else { bp.color(&f.edge(pos)) };
            match col {
                Some(x) => out.push(x),
                None => break,
            }
            i += 1;
        }
        out
    };
    let neg = run(-1);
    let pos = run(1);
    let changes = |v: &[Color]| v.windows(2).filter(|p| p[0] != p[1]).count();
    let mid = match (neg.last(), pos.last()) {
        (Some(a), Some(b)) => (a != b) as usize,
        _ => 0,
    };
    changes(&neg) + changes(&pos) + mid <= 1
}
