//! Exact 3-vectors and 3x3 matrices in the simple-root basis, the bilinear
//! form, and the generator matrices of the reflection representation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::word::{Generator, Word};

/// A coordinate triple `(x, y, z)` in the basis `α1, α2, α3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

pub type IVec3 = Vec3<BigInt>;
pub type QVec3 = Vec3<BigRational>;

impl<T> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3 { x, y, z }
    }

    pub fn get(&self, i: usize) -> &T {
        match i {
            0 => &self.x,
            1 => &self.y,
            _ => &self.z,
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Vec3<U> {
        Vec3::new(f(&self.x), f(&self.y), f(&self.z))
    }

    pub fn to_array(&self) -> [&T; 3] {
        [&self.x, &self.y, &self.z]
    }
}

impl<T> Vec3<T>
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    pub fn zero() -> Self {
        Vec3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn basis(g: Generator) -> Self {
        let mut v = [T::zero(), T::zero(), T::zero()];
        v[g.pos()] = T::one();
        let [x, y, z] = v;
        Vec3::new(x, y, z)
    }

    pub fn sum(&self) -> T {
        self.x.clone() + self.y.clone() + self.z.clone()
    }

    /// Euclidean dot product of coordinates.
    pub fn dot(&self, o: &Self) -> T {
        self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone() + self.z.clone() * o.z.clone()
    }

    /// The form with `<αi,αi> = 1` and `<αi,αj> = -1`.
    pub fn inner(&self, o: &Self) -> T {
        let s = self.sum() * o.sum();
        self.dot(o) + self.dot(o) - s
    }

    /// `Q(v) = x² + y² + z² − 2(xy + xz + yz)`.
    pub fn q(&self) -> T {
        self.inner(self)
    }

    pub fn cross(&self, o: &Self) -> Self {
        Vec3::new(
            self.y.clone() * o.z.clone() - self.z.clone() * o.y.clone(),
            self.z.clone() * o.x.clone() - self.x.clone() * o.z.clone(),
            self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|t| t.clone() * c.clone())
    }

    /// Applies `G⁻¹` up to the factor 2, i.e. `(I − J) v`: turns a Euclidean
    /// normal into a form normal.
    pub fn euclid_to_form(&self) -> Self {
        let s = self.sum();
        Vec3::new(self.x.clone() - s.clone(), self.y.clone() - s.clone(), self.z.clone() - s)
    }

    /// Applies the Gram matrix `G = 2I − J`: turns a form normal into a
    /// Euclidean normal.
    pub fn form_to_euclid(&self) -> Self {
        let s = self.sum();
        let two = T::one() + T::one();
        Vec3::new(
            two.clone() * self.x.clone() - s.clone(),
            two.clone() * self.y.clone() - s.clone(),
            two * self.z.clone() - s,
        )
    }

    /// Reflection in the root `r` (with `Q(r) = 1`).
    pub fn reflect(&self, r: &Self) -> Self {
        let c = self.inner(r);
        let two = T::one() + T::one();
        self.clone() - r.scale(&(two * c))
    }
}

impl<T: Clone + Add<Output = T>> Add for Vec3<T> {
    type Output = Vec3<T>;
    fn add(self, o: Self) -> Self {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Clone + Sub<Output = T>> Sub for Vec3<T> {
    type Output = Vec3<T>;
    fn sub(self, o: Self) -> Self {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Neg<Output = T>> Neg for Vec3<T> {
    type Output = Vec3<T>;
    fn neg(self) -> Self {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl<T: fmt::Display> fmt::Display for Vec3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

impl IVec3 {
    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Vec3::new(BigInt::from(x), BigInt::from(y), BigInt::from(z))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.x.is_negative() && !self.y.is_negative() && !self.z.is_negative()
    }

    pub fn is_nonpositive(&self) -> bool {
        !self.x.is_positive() && !self.y.is_positive() && !self.z.is_positive()
    }

    /// Divides out the gcd of the coordinates.
    pub fn primitive(&self) -> Self {
        let g = self.x.gcd(&self.y).gcd(&self.z);
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        self.map(|t| t / &g)
    }

    /// Primitive, with the first nonzero coordinate positive.
    pub fn canonical_direction(&self) -> Self {
        let p = self.primitive();
        let lead = [&p.x, &p.y, &p.z].into_iter().find(|t| !t.is_zero()).cloned();
        match lead {
            Some(l) if l.is_negative() => -p,
            _ => p,
        }
    }

    /// Primitive, with positive coordinate sum when the sum is nonzero.
    pub fn positive_sum_direction(&self) -> Self {
        let p = self.primitive();
        if p.sum().is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn to_rational(&self) -> QVec3 {
        self.map(|t| BigRational::from_integer(t.clone()))
    }

    /// Compact display `[x,y,z]`.
    pub fn bracket(&self) -> String {
        format!("[{},{},{}]", self.x, self.y, self.z)
    }
}

/// Clears denominators of a rational vector, returning a primitive integer
/// vector with the same direction (and same sign pattern).
pub fn clear_denominators(v: &QVec3) -> IVec3 {
    let l = v.x.denom().lcm(v.y.denom()).lcm(v.z.denom());
    let f = |t: &BigRational| (t * BigRational::from_integer(l.clone())).to_integer();
    Vec3::new(f(&v.x), f(&v.y), f(&v.z)).primitive()
}

pub fn det3(a: &IVec3, b: &IVec3, c: &IVec3) -> BigInt {
    a.dot(&b.cross(c))
}

/// Sign of an integer as -1, 0, 1.
pub fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn sign_q(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// A 3x3 integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3(pub [[BigInt; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        let o = || BigInt::one();
        let z = || BigInt::zero();
        Mat3([[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]])
    }

    /// The matrix of `s_i`: `x ↦ x − 2<αi,x> αi`.
    pub fn generator(g: Generator) -> Self {
        let mut m = Mat3::identity();
        let i = g.pos();
        for j in 0..3 {
            m.0[i][j] = if i == j { BigInt::from(-1) } else { BigInt::from(2) };
        }
        m
    }

    /// The matrix of a word, `s_{i1} s_{i2} ⋯`.
    pub fn of_word(w: &Word) -> Self {
        let mut m = Mat3::identity();
        for &g in w.letters() {
            m = m.mul_generator(g);
        }
        m
    }

    /// `self · s_g`, computed by column operations.
    pub fn mul_generator(&self, g: Generator) -> Self {
        let i = g.pos();
        let mut out = self.clone();
        for r in 0..3 {
            let row = &self.0[r];
            for j in 0..3 {
                out.0[r][j] = if j == i { -row[i].clone() } else { &row[j] + &row[i] * 2 };
            }
        }
        out
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let mut out = Mat3::identity();
        for r in 0..3 {
            for c in 0..3 {
                out.0[r][c] = (0..3).map(|k| &self.0[r][k] * &o.0[k][c]).sum();
            }
        }
        out
    }

    pub fn apply(&self, v: &IVec3) -> IVec3 {
        let row = |r: &[BigInt; 3]| &r[0] * &v.x + &r[1] * &v.y + &r[2] * &v.z;
        Vec3::new(row(&self.0[0]), row(&self.0[1]), row(&self.0[2]))
    }

    pub fn apply_q(&self, v: &QVec3) -> QVec3 {
        let row = |r: &[BigInt; 3]| {
            v.x.clone() * BigRational::from_integer(r[0].clone())
                + v.y.clone() * BigRational::from_integer(r[1].clone())
                + v.z.clone() * BigRational::from_integer(r[2].clone())
        };
        Vec3::new(row(&self.0[0]), row(&self.0[1]), row(&self.0[2]))
    }

    pub fn column(&self, g: Generator) -> IVec3 {
        let c = g.pos();
        Vec3::new(self.0[0][c].clone(), self.0[1][c].clone(), self.0[2][c].clone())
    }
}

/// Applies a word to a vector: `w · v`.
pub fn act(w: &Word, v: &IVec3) -> IVec3 {
    let mut out = v.clone();
    for &g in w.letters().iter().rev() {
        out = Mat3::generator(g).apply(&out);
    }
    out
}

/// Rational version of [`act`].
pub fn act_q(w: &Word, v: &QVec3) -> QVec3 {
    let mut out = v.clone();
    for &g in w.letters().iter().rev() {
        out = Mat3::generator(g).apply_q(&out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(g: u8) -> IVec3 {
        IVec3::basis(Generator::new(g).unwrap())
    }

    #[test]
    fn form_values() {
        assert_eq!(a(1).inner(&a(1)), BigInt::from(1));
        assert_eq!(a(1).inner(&a(2)), BigInt::from(-1));
        assert_eq!((a(1) + a(2)).q(), BigInt::from(0));
        assert_eq!(IVec3::from_i64(1, 1, 1).q(), BigInt::from(-3));
    }

    #[test]
    fn act_examples() {
        let s1 = Word::from_indices(&[1]).unwrap();
        assert_eq!(act(&s1, &a(1)), IVec3::from_i64(-1, 0, 0));
        assert_eq!(act(&Word::identity(), &a(2)), a(2));
        assert_eq!(act(&s1, &a(2)), IVec3::from_i64(2, 1, 0));
        let w = Word::from_indices(&[1, 2]).unwrap();
        assert_eq!(act(&w, &a(1)), IVec3::from_i64(3, 2, 0));
    }

    #[test]
    fn generator_matches_reflection_formula() {
        for g in Generator::ALL {
            for h in Generator::ALL {
                let by_matrix = Mat3::generator(g).apply(&a(h.index()));
                let by_formula = a(h.index()).reflect(&a(g.index()));
                assert_eq!(by_matrix, by_formula);
            }
        }
    }

    #[test]
    fn word_matrix_columns_are_images() {
        let w = Word::from_indices(&[3, 1, 2, 3, 1]).unwrap();
        let m = Mat3::of_word(&w);
        for g in Generator::ALL {
            assert_eq!(m.column(g), act(&w, &a(g.index())));
        }
    }

    #[test]
    fn gram_conversions_invert() {
        let v = IVec3::from_i64(3, -5, 7);
        let back = v.form_to_euclid().euclid_to_form();
        // (I − J)(2I − J) = 2I
        assert_eq!(back, v.scale(&BigInt::from(2)));
    }

    proptest! {
        #[test]
        fn generators_preserve_form(x in -50i64..50, y in -50i64..50, z in -50i64..50,
                                    u in -50i64..50, v in -50i64..50, t in -50i64..50, g in 1u8..4) {
            let p = IVec3::from_i64(x, y, z);
            let q = IVec3::from_i64(u, v, t);
            let m = Mat3::generator(Generator::new(g).unwrap());
            prop_assert_eq!(m.apply(&p).inner(&m.apply(&q)), p.inner(&q));
            prop_assert_eq!(m.apply(&m.apply(&p)), p);
        }

        #[test]
        fn inner_is_symmetric(x in -50i64..50, y in -50i64..50, z in -50i64..50,
                              u in -50i64..50, v in -50i64..50, t in -50i64..50) {
            let p = IVec3::from_i64(x, y, z);
            let q = IVec3::from_i64(u, v, t);
            prop_assert_eq!(p.inner(&q), q.inner(&p));
            prop_assert_eq!(p.inner(&q), p.dot(&q.form_to_euclid()));
        }
    }
}
