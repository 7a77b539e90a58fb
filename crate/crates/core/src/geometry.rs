//! The affine plane `x+y+z = 1`, the disk `Q ≤ 0`, lines and ideal points.
//!
//! Points are stored homogeneously as primitive integer vectors with positive
//! coordinate sum; the affine point is the vector divided by its sum. All
//! predicates are integer sign computations.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::linalg::{clear_denominators, det3, sign, IVec3, QVec3, Vec3};
use crate::roots::Root;

/// A point of the affine plane `x+y+z = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePoint {
    h: IVec3,
}

impl AffinePoint {
    /// The point on the ray of `v`. Fails for vectors in `x+y+z = 0`.
    pub fn from_homogeneous(v: &IVec3) -> Result<Self, Error> {
        if v.sum().is_zero() {
            return Err(Error::NotAffine);
        }
        Ok(AffinePoint { h: v.positive_sum_direction() })
    }

    pub fn from_rationals(v: &QVec3) -> Result<Self, Error> {
        if v.sum() != BigRational::from_integer(1.into()) {
            return Err(Error::NotAffine);
        }
        AffinePoint::from_homogeneous(&clear_denominators(v))
    }

    /// `O = (1/3, 1/3, 1/3)`.
    pub fn center() -> Self {
        AffinePoint { h: IVec3::from_i64(1, 1, 1) }
    }

    /// Primitive homogeneous representative with positive sum.
    pub fn homogeneous(&self) -> &IVec3 {
        &self.h
    }

    pub fn coords(&self) -> QVec3 {
        let s = self.h.sum();
        self.h.map(|t| BigRational::new(t.clone(), s.clone()))
    }

    /// `Q` of the affine point, exactly.
    pub fn q_value(&self) -> BigRational {
        let s = self.h.sum();
        BigRational::new(self.h.q(), &s * &s)
    }

    /// Approximate planar coordinates, for rendering only.
    pub fn to_f64(&self) -> [f64; 3] {
        let s = big_to_f64(&self.h.sum());
        [big_to_f64(&self.h.x) / s, big_to_f64(&self.h.y) / s, big_to_f64(&self.h.z) / s]
    }
}

fn big_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords();
        write!(f, "({},{},{})", c.x, c.y, c.z)
    }
}

impl Serialize for AffinePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let c = self.coords();
        [c.x, c.y, c.z].map(|t| format!("{}/{}", t.numer(), t.denom())).serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffinePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = <[String; 3]>::deserialize(d)?;
        let parse = |s: &String| s.parse::<BigRational>().map_err(serde::de::Error::custom);
        let v = Vec3::new(parse(&parts[0])?, parse(&parts[1])?, parse(&parts[2])?);
        AffinePoint::from_rationals(&v).map_err(serde::de::Error::custom)
    }
}

/// `β / height(β)`.
pub fn rescale(beta: &Root) -> AffinePoint {
    AffinePoint { h: beta.vec.primitive() }
}

/// Sign of `Q(p)`: negative inside the disk, zero on its boundary.
pub fn disk_position(p: &AffinePoint) -> i8 {
    sign(&p.h.q())
}

/// Sign of the planar orientation of three affine points.
pub fn orientation(a: &AffinePoint, b: &AffinePoint, c: &AffinePoint) -> i8 {
    sign(&det3(&a.h, &b.h, &c.h))
}

/// A line `{p : <normal, p> = 0}` of the affine plane, with canonical normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffLine {
    normal: IVec3,
}

impl AffLine {
    pub fn new(normal: &IVec3) -> Result<Self, Error> {
        let n = normal.canonical_direction();
        if n.is_zero() || (n.x == n.y && n.y == n.z) {
            return Err(Error::DegenerateLine);
        }
        Ok(AffLine { normal: n })
    }

    pub fn normal(&self) -> &IVec3 {
        &self.normal
    }

    /// Sign of `<normal, v>` for a homogeneous vector.
    pub fn side_of_vec(&self, v: &IVec3) -> i8 {
        sign(&self.normal.inner(v))
    }

    pub fn side(&self, p: &AffinePoint) -> i8 {
        self.side_of_vec(&p.h)
    }

    pub fn contains(&self, p: &AffinePoint) -> bool {
        self.side(p) == 0
    }

    /// Side of the center `O`.
    pub fn center_side(&self) -> i8 {
        self.side(&AffinePoint::center())
    }

    /// Euclidean normal of the plane through the origin spanned by the line.
    pub fn euclid_normal(&self) -> IVec3 {
        self.normal.form_to_euclid()
    }

    /// Direction vector of the line inside `x+y+z = 0`.
    pub fn direction(&self) -> IVec3 {
        self.euclid_normal().cross(&IVec3::from_i64(1, 1, 1))
    }

    /// A homogeneous point on the line with positive coordinate sum.
    pub fn base_point(&self) -> IVec3 {
        let n = self.euclid_normal();
        for e in [IVec3::from_i64(1, 0, 0), IVec3::from_i64(0, 1, 0), IVec3::from_i64(0, 0, 1)] {
            let p = n.cross(&e);
            if !p.sum().is_zero() {
                return p.positive_sum_direction();
            }
        }
        unreachable!("a nondegenerate line meets the affine plane")
    }

    /// Order of two points of the line along [`AffLine::direction`]:
    /// positive when `a` comes before `b`.
    pub fn order(&self, a: &IVec3, b: &IVec3) -> i8 {
        sign(&det3(&self.euclid_normal(), a, b))
    }
}

impl fmt::Display for AffLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.normal.bracket())
    }
}

impl Serialize for AffLine {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        let n = &self.normal;
        let mut out = [0i64; 3];
        for (o, t) in out.iter_mut().zip([&n.x, &n.y, &n.z]) {
            *o = t.to_i64().ok_or_else(|| serde::ser::Error::custom("line normal exceeds 64 bits"))?;
        }
        out.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffLine {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b, c] = <[i64; 3]>::deserialize(d)?;
        AffLine::new(&IVec3::from_i64(a, b, c)).map_err(serde::de::Error::custom)
    }
}

/// Position of a line relative to the disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiskClass {
    Secant,
    Tangent,
    Exterior,
}

/// The line `Ĥ_p`.
pub fn dual_line(p: &AffinePoint) -> Result<AffLine, Error> {
    if p.h.x == p.h.y && p.h.y == p.h.z {
        return Err(Error::PolarUndefined);
    }
    AffLine::new(&p.h)
}

/// The line through two distinct points.
pub fn line_through(p: &AffinePoint, q: &AffinePoint) -> Result<AffLine, Error> {
    let n = p.h.cross(&q.h);
    if n.is_zero() {
        return Err(Error::CoincidentPoints);
    }
    AffLine::new(&n.euclid_to_form())
}

/// The pole `û` of the line (none when the normal lies in `x+y+z = 0`).
pub fn pole(l: &AffLine) -> Option<AffinePoint> {
    AffinePoint::from_homogeneous(&l.normal).ok()
}

/// Restricts `Q` to the line as `Q(p + t d)` and classifies by the sign of
/// the discriminant `<p,d>² − Q(p) Q(d)`.
pub fn classify_line(l: &AffLine) -> DiskClass {
    let p = l.base_point();
    let d = l.direction();
    let b = p.inner(&d);
    let disc = &b * &b - p.q() * d.q();
    match sign(&disc) {
        1 => DiskClass::Secant,
        0 => DiskClass::Tangent,
        _ => DiskClass::Exterior,
    }
}

/// Second classification route: the sign of `Q(normal)` is the sign of the
/// determinant of the form on the orthogonal plane, up to a negative factor.
pub fn classify_by_normal(l: &AffLine) -> DiskClass {
    match sign(&l.normal.q()) {
        1 => DiskClass::Secant,
        0 => DiskClass::Tangent,
        _ => DiskClass::Exterior,
    }
}

/// Tangency point of a tangent line (its pole).
pub fn tangency_point(l: &AffLine) -> Option<AffinePoint> {
    if classify_line(l) != DiskClass::Tangent {
        return None;
    }
    pole(l)
}

/// Sign of `a + b √d` for integers with `d ≥ 0`.
pub fn sign_surd(a: &BigInt, b: &BigInt, d: &BigInt) -> i8 {
    let (sa, sb) = (sign(a), if d.is_zero() { 0 } else { sign(b) });
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    let lhs = a * a;
    let rhs = b * b * d;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => 0,
    }
}

/// One of the (at most two) points where a line meets `∂𝔻`, kept implicit:
/// the point is `p + t d` with `t = (−b ± √disc) / a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadPoint {
    p: IVec3,
    d: IVec3,
    a: BigInt,
    b: BigInt,
    disc: BigInt,
    plus: bool,
}

impl QuadPoint {
    /// Sign of `<u, x>` at the point.
    pub fn sign_of(&self, u: &IVec3) -> i8 {
        let fp = u.inner(&self.p);
        let fd = u.inner(&self.d);
        let a_part = &self.a * &fp - &self.b * &fd;
        let b_part = if self.plus { fd } else { -fd };
        sign_surd(&a_part, &b_part, &self.disc)
    }

    /// Exact rational point when the discriminant is a perfect square.
    pub fn rational(&self) -> Option<AffinePoint> {
        let r = self.disc.sqrt();
        if &r * &r != self.disc {
            return None;
        }
        let num = if self.plus { -&self.b + r } else { -&self.b - r };
        let t = BigRational::new(num, self.a.clone());
        let pq = self.p.to_rational();
        let dq = self.d.to_rational();
        let x = pq + dq.scale(&t);
        AffinePoint::from_homogeneous(&clear_denominators(&x)).ok()
    }

    /// Floating approximation for rendering.
    pub fn to_f64(&self) -> [f64; 3] {
        let t = (-big_to_f64(&self.b) + if self.plus { 1.0 } else { -1.0 } * big_to_f64(&self.disc).sqrt())
            / big_to_f64(&self.a);
        let v = [
            big_to_f64(&self.p.x) + t * big_to_f64(&self.d.x),
            big_to_f64(&self.p.y) + t * big_to_f64(&self.d.y),
            big_to_f64(&self.p.z) + t * big_to_f64(&self.d.z),
        ];
        let s = v[0] + v[1] + v[2];
        [v[0] / s, v[1] / s, v[2] / s]
    }
}

/// The intersection points of a line with `∂𝔻`, in the line's order
/// (one point, repeated, for tangent lines; none for exterior lines).
pub fn boundary_points(l: &AffLine) -> Vec<QuadPoint> {
    let p = l.base_point();
    let d = l.direction();
    let a = d.q();
    let b = p.inner(&d);
    let disc = &b * &b - p.q() * &a;
    if disc.is_negative() {
        return Vec::new();
    }
    let mk = |plus| QuadPoint { p: p.clone(), d: d.clone(), a: a.clone(), b: b.clone(), disc: disc.clone(), plus };
    vec![mk(false), mk(true)]
}

/// A point of `∂𝔻`, rational or implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealPoint {
    Rational(AffinePoint),
    Implicit(QuadPoint),
}

impl IdealPoint {
    pub fn sign_of(&self, u: &IVec3) -> i8 {
        match self {
            IdealPoint::Rational(p) => sign(&u.inner(p.homogeneous())),
            IdealPoint::Implicit(q) => q.sign_of(u),
        }
    }

    pub fn to_f64(&self) -> [f64; 3] {
        match self {
            IdealPoint::Rational(p) => p.to_f64(),
            IdealPoint::Implicit(q) => q.to_f64(),
        }
    }
}

/// A closed arc of `∂𝔻`: the part on side `side` of a chord, or the whole
/// circle. Chord endpoints are rational ideal points; `interior` is a
/// rational ideal point strictly inside the arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arc {
    Full,
    Part { chord: AffLine, side: i8, ends: [AffinePoint; 2], interior: AffinePoint },
}

impl Arc {
    /// The arc with endpoints `e0, e1` containing `interior`.
    pub fn through(e0: &AffinePoint, e1: &AffinePoint, interior: &AffinePoint) -> Result<Arc, Error> {
        let chord = line_through(e0, e1)?;
        let side = chord.side(interior);
        if side == 0 {
            return Err(Error::CoincidentPoints);
        }
        Ok(Arc::Part { chord, side, ends: [e0.clone(), e1.clone()], interior: interior.clone() })
    }

    pub fn contains(&self, x: &IdealPoint) -> bool {
        match self {
            Arc::Full => true,
            Arc::Part { chord, side, .. } => {
                let s = x.sign_of(chord.normal());
                s == 0 || s == *side
            }
        }
    }

    pub fn contains_rational(&self, p: &AffinePoint) -> bool {
        self.contains(&IdealPoint::Rational(p.clone()))
    }

    fn strictly_inside(&self, p: &AffinePoint) -> bool {
        match self {
            Arc::Full => true,
            Arc::Part { chord, side, .. } => chord.side(p) == *side,
        }
    }

    /// Whether `other ⊆ self`.
    pub fn contains_arc(&self, other: &Arc) -> bool {
        match (self, other) {
            (Arc::Full, _) => true,
            (_, Arc::Full) => false,
            (Arc::Part { ends, .. }, Arc::Part { ends: oe, interior: oi, .. }) => {
                oe.iter().all(|e| self.contains_rational(e))
                    && self.contains_rational(oi)
                    && !ends.iter().any(|e| !oe.contains(e) && other.strictly_inside(e))
            }
        }
    }

    /// Whether the two closed arcs share no point.
    pub fn disjoint(&self, other: &Arc) -> bool {
        match (self, other) {
            (Arc::Full, _) | (_, Arc::Full) => false,
            (Arc::Part { ends, .. }, Arc::Part { ends: oe, .. }) => {
                !oe.iter().any(|e| self.contains_rational(e)) && !ends.iter().any(|e| other.contains_rational(e))
            }
        }
    }

    /// A rational measure increasing with the arc's angle `ψ ∈ [0, 2π]`:
    /// `1 − cos ψ` up to a half turn, `3 + cos ψ` beyond, and 4 for the
    /// whole circle.
    pub fn measure(&self) -> BigRational {
        match self {
            Arc::Full => BigRational::from_integer(4.into()),
            Arc::Part { chord, side, ends, .. } => {
                let o = AffinePoint::center().coords();
                let a = ends[0].coords() - o.clone();
                let b = ends[1].coords() - o;
                let cos = a.inner(&b) / a.inner(&a);
                let one = BigRational::from_integer(1.into());
                let three = BigRational::from_integer(3.into());
                if chord.center_side() == -*side {
                    one - cos
                } else if chord.center_side() == 0 {
                    BigRational::from_integer(2.into())
                } else {
                    three + cos
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::enumerate_roots;

    fn pt(x: i64, y: i64, z: i64) -> AffinePoint {
        AffinePoint::from_homogeneous(&IVec3::from_i64(x, y, z)).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rescale_examples() {
        let r = Root::new(IVec3::from_i64(2, 1, 0), 2);
        assert_eq!(rescale(&r).coords(), Vec3::new(q(2, 3), q(1, 3), q(0, 1)));
        let r = Root::new(IVec3::from_i64(3, 2, 0), 3);
        assert_eq!(rescale(&r).q_value(), q(1, 25));
    }

    #[test]
    fn disk_examples() {
        let o = AffinePoint::center();
        assert_eq!(disk_position(&o), -1);
        assert_eq!(o.q_value(), q(-1, 3));
        assert_eq!(disk_position(&pt(1, 1, 0)), 0);
        assert_eq!(disk_position(&pt(1, 0, 0)), 1);
    }

    #[test]
    fn line_examples() {
        let a1 = pt(1, 0, 0);
        let a2 = pt(0, 1, 0);
        let l = line_through(&a1, &a2).unwrap();
        assert_eq!(l.normal(), &IVec3::from_i64(1, 1, 0));
        assert_eq!(dual_line(&pt(1, 1, 0)).unwrap(), l);
        assert_eq!(classify_line(&l), DiskClass::Tangent);
        assert_eq!(classify_line(&dual_line(&a1).unwrap()), DiskClass::Secant);
        assert_eq!(classify_line(&dual_line(&pt(2, 1, 1)).unwrap()), DiskClass::Exterior);
        assert_eq!(dual_line(&AffinePoint::center()).unwrap_err(), Error::PolarUndefined);
        assert_eq!(line_through(&a1, &a1).unwrap_err(), Error::CoincidentPoints);
        assert_eq!(tangency_point(&l).unwrap(), pt(1, 1, 0));
    }

    #[test]
    fn classification_routes_agree() {
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                for c in -4i64..=4 {
                    if let Ok(l) = AffLine::new(&IVec3::from_i64(a, b, c)) {
                        assert_eq!(classify_line(&l), classify_by_normal(&l), "{l}");
                    }
                }
            }
        }
    }

    #[test]
    fn duality_round_trip() {
        for e in enumerate_roots(6, None) {
            let p = rescale(&e.root);
            assert_eq!(pole(&dual_line(&p).unwrap()).unwrap(), p);
        }
    }

    #[test]
    fn tangents_meet_at_pole() {
        // chord through two ideal points; the tangents there meet at its pole
        let p = pt(1, 1, 0);
        let r = pt(1, 0, 1);
        let chord = line_through(&p, &r).unwrap();
        let t1 = dual_line(&p).unwrap();
        let t2 = dual_line(&r).unwrap();
        let meet = t1.euclid_normal().cross(&t2.euclid_normal());
        assert_eq!(AffinePoint::from_homogeneous(&meet).unwrap(), pole(&chord).unwrap());
    }

    #[test]
    fn implicit_points_on_circle() {
        let l = dual_line(&pt(1, 0, 0)).unwrap();
        let pts = boundary_points(&l);
        assert_eq!(pts.len(), 2);
        let rat: Vec<_> = pts.iter().map(|p| p.rational().unwrap()).collect();
        for p in &rat {
            assert_eq!(disk_position(p), 0);
            assert!(l.contains(p));
        }
        assert_ne!(rat[0], rat[1]);
        // sign evaluation agrees with the rational point
        for (qp, rp) in pts.iter().zip(&rat) {
            for u in [IVec3::from_i64(1, 2, -3), IVec3::from_i64(0, 1, 0), IVec3::from_i64(5, -1, 2)] {
                assert_eq!(qp.sign_of(&u), sign(&u.inner(rp.homogeneous())));
            }
        }
    }

    #[test]
    fn surd_signs() {
        let s = |a: i64, b: i64, d: i64| sign_surd(&a.into(), &b.into(), &d.into());
        assert_eq!(s(3, -1, 2), 1);
        assert_eq!(s(1, -1, 2), -1);
        assert_eq!(s(-2, 1, 4), 0);
        assert_eq!(s(0, 1, 2), 1);
        assert_eq!(s(-1, 0, 2), -1);
    }

    #[test]
    fn arcs() {
        // far side of the line through α̂1 and the ideal points (1/2,1/2,0), (1/2,0,1/2)
        let e0 = pt(1, 1, 0);
        let e1 = pt(1, 0, 1);
        let inner = pt(4, 1, 1);
        let arc = Arc::through(&e0, &e1, &inner).unwrap();
        assert!(arc.contains_rational(&inner));
        assert!(!arc.contains_rational(&pt(0, 1, 1)));
        assert!(arc.measure() < BigRational::from_integer(2.into()));
        let big = Arc::through(&e0, &e1, &pt(0, 1, 1)).unwrap();
        assert!(big.measure() > BigRational::from_integer(2.into()));
        assert!(!arc.contains_arc(&big));
        assert!(Arc::Full.contains_arc(&arc));
        assert!(arc.contains_arc(&arc));
    }
}
