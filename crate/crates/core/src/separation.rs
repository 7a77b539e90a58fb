//! Exact separation of two finite point sets of the affine plane.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::geometry::{orientation, AffLine, AffinePoint};
use crate::linalg::{det3, IVec3, Vec3};

/// Outcome of [`separate_point_sets`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Separation {
    /// The first set lies strictly on side `p_side` of `line`, the second
    /// strictly on the other side.
    Line { line: AffLine, p_side: i8 },
    /// A point lying in both convex hulls.
    Witness { point: AffinePoint },
}

impl Separation {
    pub fn is_line(&self) -> bool {
        matches!(self, Separation::Line { .. })
    }
}

fn cmp_xy(a: &AffinePoint, b: &AffinePoint) -> Ordering {
    let (ha, hb) = (a.homogeneous(), b.homogeneous());
    let (sa, sb) = (ha.sum(), hb.sum());
    (&ha.x * &sb).cmp(&(&hb.x * &sa)).then_with(|| (&ha.y * &sb).cmp(&(&hb.y * &sa)))
}

/// Counter-clockwise hull vertices (indices into `pts`), collinear points
/// dropped. One index for a single point, two for a segment.
pub fn convex_hull(pts: &[AffinePoint]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&i, &j| cmp_xy(&pts[i], &pts[j]));
    idx.dedup_by(|i, j| pts[*i] == pts[*j]);
    if idx.len() <= 2 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for pass in 0..2 {
        let start = hull.len();
        let it: Box<dyn Iterator<Item = &usize>> =
            if pass == 0 { Box::new(idx.iter()) } else { Box::new(idx.iter().rev()) };
        for &i in it {
            while hull.len() >= start + 2
                && orientation(&pts[hull[hull.len() - 2]], &pts[hull[hull.len() - 1]], &pts[i]) <= 0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    if hull.len() == 2 && pts[hull[0]] == pts[hull[1]] {
        hull.pop();
    }
    hull
}

/// Whether `x` lies in the closed hull given by ccw vertices.
pub fn in_hull(pts: &[AffinePoint], hull: &[usize], x: &AffinePoint) -> bool {
    match hull.len() {
        0 => false,
        1 => pts[hull[0]] == *x,
        2 => on_segment(&pts[hull[0]], &pts[hull[1]], x),
        n => (0..n).all(|i| orientation(&pts[hull[i]], &pts[hull[(i + 1) % n]], x) >= 0),
    }
}

fn on_segment(a: &AffinePoint, b: &AffinePoint, x: &AffinePoint) -> bool {
    if orientation(a, b, x) != 0 {
        return false;
    }
    let (lo, hi) = if cmp_xy(a, b) == Ordering::Greater { (b, a) } else { (a, b) };
    cmp_xy(lo, x) != Ordering::Greater && cmp_xy(x, hi) != Ordering::Greater
}

fn edges(hull: &[usize]) -> Vec<(usize, usize)> {
    match hull.len() {
        0 | 1 => Vec::new(),
        2 => vec![(hull[0], hull[1]), (hull[1], hull[0])],
        n => (0..n).map(|i| (hull[i], hull[(i + 1) % n])).collect(),
    }
}

/// A strict separating line from a hull edge of `a_pts` with every point of
/// `b_hull` strictly to its right, or `None`.
fn edge_separator(
    a_pts: &[AffinePoint],
    a_hull: &[usize],
    b_pts: &[AffinePoint],
    b_hull: &[usize],
) -> Option<AffLine> {
    for (i, j) in edges(a_hull) {
        let (a, b) = (&a_pts[i], &a_pts[j]);
        if b_hull.iter().all(|&k| orientation(a, b, &b_pts[k]) < 0) {
            // functional n0·x = det(a,b,x): ≥ 0 on the first hull, < 0 on the second
            let n0 = a.homogeneous().cross(b.homogeneous());
            let worst = b_hull
                .iter()
                .map(|&k| {
                    let h = b_pts[k].homogeneous();
                    BigRational::new(n0.dot(h), h.sum())
                })
                .max()
                .expect("nonempty hull");
            // shift by half the gap: n1 = n0 − (worst/2)(1,1,1)
            let two_den = worst.denom() * 2;
            let n1 = n0.scale(&two_den) - IVec3::from_i64(1, 1, 1).scale(worst.numer());
            return AffLine::new(&n1.euclid_to_form()).ok();
        }
    }
    None
}

type Q2 = (BigRational, BigRational);

fn xy(p: &AffinePoint) -> Q2 {
    let c = p.coords();
    (c.x, c.y)
}

fn sub2(a: &Q2, b: &Q2) -> Q2 {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn dot2(a: &Q2, b: &Q2) -> BigRational {
    &a.0 * &b.0 + &a.1 * &b.1
}

/// Closest point to `x` on segment `ab` (planar coordinates, exact).
fn closest_on_segment(a: &Q2, b: &Q2, x: &Q2) -> Q2 {
    let d = sub2(b, a);
    let dd = dot2(&d, &d);
    if dd.is_zero() {
        return a.clone();
    }
    let mut t = dot2(&sub2(x, a), &d) / dd;
    if t.is_negative() {
        t = BigRational::zero();
    } else if t > BigRational::one() {
        t = BigRational::one();
    }
    (&a.0 + &d.0 * &t, &a.1 + &d.1 * &t)
}

fn hull_pieces(pts: &[AffinePoint], hull: &[usize]) -> Vec<(Q2, Q2)> {
    match hull.len() {
        1 => vec![(xy(&pts[hull[0]]), xy(&pts[hull[0]]))],
        _ => edges(hull).into_iter().map(|(i, j)| (xy(&pts[i]), xy(&pts[j]))).collect(),
    }
}

fn from_xy(p: &Q2) -> AffinePoint {
    let z = BigRational::one() - &p.0 - &p.1;
    AffinePoint::from_rationals(&Vec3::new(p.0.clone(), p.1.clone(), z)).expect("sums to one")
}

/// Decides whether the convex hulls of `p` and `q` meet. Returns a strict
/// separating line or a common point.
pub fn separate_point_sets(p: &[AffinePoint], q: &[AffinePoint]) -> Separation {
    assert!(!p.is_empty() && !q.is_empty(), "point sets must be nonempty");
    let hp = convex_hull(p);
    let hq = convex_hull(q);
    let oriented = |line: AffLine| {
        let p_side = line.side(&p[hp[0]]);
        Separation::Line { line, p_side }
    };
    if let Some(l) = edge_separator(p, &hp, q, &hq) {
        return oriented(l);
    }
    if let Some(l) = edge_separator(q, &hq, p, &hp) {
        return oriented(l);
    }
    // shared points: a vertex inside the other hull, or crossing edges
    for &i in &hp {
        if in_hull(q, &hq, &p[i]) {
            return Separation::Witness { point: p[i].clone() };
        }
    }
    for &j in &hq {
        if in_hull(p, &hp, &q[j]) {
            return Separation::Witness { point: q[j].clone() };
        }
    }
    for (a, b) in edges(&hp) {
        for (c, d) in edges(&hq) {
            let (pa, pb, pc, pd) = (&p[a], &p[b], &q[c], &q[d]);
            let o1 = orientation(pa, pb, pc);
            let o2 = orientation(pa, pb, pd);
            let o3 = orientation(pc, pd, pa);
            let o4 = orientation(pc, pd, pb);
            if o1 * o2 < 0 && o3 * o4 < 0 {
                let l1 = pa.homogeneous().cross(pb.homogeneous());
                let l2 = pc.homogeneous().cross(pd.homogeneous());
                let x = AffinePoint::from_homogeneous(&l1.cross(&l2)).expect("crossing segments meet");
                return Separation::Witness { point: x };
            }
        }
    }
    // disjoint: the perpendicular bisector of a closest pair separates strictly
    let pieces_p = hull_pieces(p, &hp);
    let pieces_q = hull_pieces(q, &hq);
    let mut best: Option<(BigRational, Q2, Q2)> = None;
    let mut consider = |a: Q2, b: Q2| {
        let d = sub2(&a, &b);
        let dist = dot2(&d, &d);
        if best.as_ref().map_or(true, |(bd, _, _)| dist < *bd) {
            best = Some((dist, a, b));
        }
    };
    for &i in &hp {
        let x = xy(&p[i]);
        for (a, b) in &pieces_q {
            consider(x.clone(), closest_on_segment(a, b, &x));
        }
    }
    for &j in &hq {
        let x = xy(&q[j]);
        for (a, b) in &pieces_p {
            consider(closest_on_segment(a, b, &x), x.clone());
        }
    }
    let (dist, cp, cq) = best.expect("nonempty hulls");
    if dist.is_zero() {
        return Separation::Witness { point: from_xy(&cp) };
    }
    // φ(x,y) = (cq − cp)·((x,y) − m), negative on p, positive on q
    let d = sub2(&cq, &cp);
    let two = BigRational::from_integer(2.into());
    let m = ((&cp.0 + &cq.0) / &two, (&cp.1 + &cq.1) / &two);
    let c = -dot2(&d, &m);
    // a x + b y + c on the plane x+y+z = 1 is n·(x,y,z) with n = (a+c, b+c, c)
    let n = Vec3::new(&d.0 + &c, &d.1 + &c, c.clone());
    let n = crate::linalg::clear_denominators(&n);
    let line = AffLine::new(&n.euclid_to_form()).expect("nondegenerate bisector");
    oriented(line)
}

/// Expresses `x` as a convex combination of `pts` restricted to the hull
/// `hull`, by a triangle fan. Returns `(index, weight)` pairs.
pub fn convex_combination(pts: &[AffinePoint], hull: &[usize], x: &AffinePoint) -> Option<Vec<(usize, BigRational)>> {
    let hx = x.homogeneous();
    let weight = |num: BigInt, den: BigInt, s_a: &BigInt| BigRational::new(num * s_a, den * hx.sum());
    match hull.len() {
        0 => None,
        1 => (pts[hull[0]] == *x).then(|| vec![(hull[0], BigRational::one())]),
        2 => {
            if !on_segment(&pts[hull[0]], &pts[hull[1]], x) {
                return None;
            }
            let (a, b) = (xy(&pts[hull[0]]), xy(&pts[hull[1]]));
            let xx = xy(x);
            let d = sub2(&b, &a);
            let t = dot2(&sub2(&xx, &a), &d) / dot2(&d, &d);
            Some(vec![(hull[0], BigRational::one() - &t), (hull[1], t)])
        }
        n => {
            let a = hull[0];
            for k in 1..n - 1 {
                let (b, c) = (hull[k], hull[k + 1]);
                let (ha, hb, hc) = (pts[a].homogeneous(), pts[b].homogeneous(), pts[c].homogeneous());
                let den = det3(ha, hb, hc);
                if den.is_zero() {
                    continue;
                }
                let la = weight(det3(hx, hb, hc), den.clone(), &ha.sum());
                let lb = weight(det3(ha, hx, hc), den.clone(), &hb.sum());
                let lc = weight(det3(ha, hb, hx), den, &hc.sum());
                if !la.is_negative() && !lb.is_negative() && !lc.is_negative() {
                    return Some(vec![(a, la), (b, lb), (c, lc)]);
                }
            }
            None
        }
    }
}

/// Checks a certificate: a separating line strictly splits the sets, a
/// witness is an exact convex combination of each set.
pub fn verify_separation(sep: &Separation, p: &[AffinePoint], q: &[AffinePoint]) -> bool {
    match sep {
        Separation::Line { line, p_side } => {
            *p_side != 0
                && p.iter().all(|x| line.side(x) == *p_side)
                && q.iter().all(|x| line.side(x) == -*p_side)
        }
        Separation::Witness { point } => {
            let check = |pts: &[AffinePoint]| {
                let hull = convex_hull(pts);
                match convex_combination(pts, &hull, point) {
                    None => false,
                    Some(ws) => {
                        let total: BigRational = ws.iter().map(|(_, w)| w.clone()).sum();
                        let mut acc = Vec3::new(BigRational::zero(), BigRational::zero(), BigRational::zero());
                        for (i, w) in &ws {
                            acc = acc + pts[*i].coords().map(|t| t * w);
                        }
                        total.is_one() && ws.iter().all(|(_, w)| !w.is_negative()) && acc == point.coords()
                    }
                }
            };
            check(p) && check(q)
        }
    }
}
