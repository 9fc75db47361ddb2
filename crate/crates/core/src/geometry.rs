//! Exact rational points and canonical affine lines.
//!
//! Every predicate here is decided in exact arithmetic. A [`Line`] is stored
//! in a canonical form (base point closest to the origin, primitive integer
//! direction whose first nonzero entry is positive) so two lines are equal as
//! point sets exactly when they compare equal field by field.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
}

/// A point of ℝⁿ with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointN(Vec<Rat>);

impl PointN {
    pub fn new(coords: Vec<Rat>) -> Self {
        Self(coords)
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        Self(coords.into_iter().map(rat_int).collect())
    }

    pub fn origin(n: usize) -> Self {
        Self(vec![Rat::zero(); n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }
}

impl fmt::Display for PointN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for PointN {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::rat_serde::vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for PointN {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        crate::rat_serde::vec::deserialize(d).map(PointN)
    }
}

/// An affine line in canonical form.
///
/// `base` is the point of the line closest to the origin, so `base · dir = 0`.
/// `dir` is a primitive integer vector whose first nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    base: PointN,
    dir: Vec<BigInt>,
}

impl Line {
    pub fn base(&self) -> &PointN {
        &self.base
    }

    pub fn dir(&self) -> &[BigInt] {
        &self.dir
    }

    pub fn dim(&self) -> usize {
        self.dir.len()
    }

    /// Direction as rationals, convenient for mixed arithmetic.
    pub fn dir_rat(&self) -> Vec<Rat> {
        self.dir.iter().map(|c| Rat::from_integer(c.clone())).collect()
    }

    /// The point `base + t·dir`.
    pub fn point_at(&self, t: &Rat) -> PointN {
        PointN(
            self.base
                .coords()
                .iter()
                .zip(&self.dir)
                .map(|(b, u)| b + t * Rat::from_integer(u.clone()))
                .collect(),
        )
    }

    /// Parameter `t` of the orthogonal projection of `x` onto the line.
    /// Equals the exact parameter when `x` lies on the line.
    pub fn parameter_of(&self, x: &PointN) -> Rat {
        let dir = self.dir_rat();
        let w = sub(x.coords(), self.base.coords());
        dot(&w, &dir) / dot(&dir, &dir)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + t(", self.base)?;
        for (i, c) in self.dir.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntersectionResult {
    Empty,
    Point(PointN),
    Coincident,
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn norm_sq(a: &[Rat]) -> Rat {
    dot(a, a)
}

pub fn int_dot(a: &[BigInt], v: &[Rat]) -> Rat {
    a.iter()
        .zip(v)
        .fold(Rat::zero(), |acc, (x, y)| acc + y * Rat::from_integer(x.clone()))
}

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_direction(u: &[Rat]) -> Result<Vec<BigInt>, GeometryError> {
    if u.iter().all(Zero::is_zero) {
        return Err(GeometryError::ZeroDirection);
    }
    let lcm = u
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = u
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let first_negative = ints
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(Signed::is_negative);
    for c in &mut ints {
        *c /= &g;
        if first_negative {
            *c = -&*c;
        }
    }
    Ok(ints)
}

/// The unique canonical line through `p` parallel to `u`.
pub fn canonicalize_line(p: &PointN, u: &[Rat]) -> Result<Line, GeometryError> {
    let n = p.dim();
    if n < 2 {
        return Err(GeometryError::DimensionTooSmall(n));
    }
    if u.len() != n {
        return Err(GeometryError::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    let dir = primitive_direction(u)?;
    let dir_rat: Vec<Rat> = dir.iter().map(|c| Rat::from_integer(c.clone())).collect();
    let t = dot(p.coords(), &dir_rat) / dot(&dir_rat, &dir_rat);
    let base = p
        .coords()
        .iter()
        .zip(&dir_rat)
        .map(|(x, d)| x - &t * d)
        .collect();
    Ok(Line {
        base: PointN(base),
        dir,
    })
}

fn check_dims(expected: usize, found: usize) -> Result<(), GeometryError> {
    if expected == found {
        Ok(())
    } else {
        Err(GeometryError::DimensionMismatch { expected, found })
    }
}

/// Solves for the parameters `(s, t)` minimizing `|a(s) − b(t)|` between two
/// non-parallel lines. The 2×2 Gram system is nonsingular for non-parallel
/// directions.
pub(crate) fn closest_parameters(a: &Line, b: &Line) -> (Rat, Rat) {
    let da = a.dir_rat();
    let db = b.dir_rat();
    let w = sub(b.base.coords(), a.base.coords());
    // s·da − t·db ≈ w  ⇒  [aa −ab; ab −bb] (s, t) = (da·w, db·w)
    let aa = dot(&da, &da);
    let ab = dot(&da, &db);
    let bb = dot(&db, &db);
    let rw = dot(&da, &w);
    let sw = dot(&db, &w);
    let det = &ab * &ab - &aa * &bb;
    let s = (&ab * &sw - &bb * &rw) / &det;
    let t = (&aa * &sw - &ab * &rw) / &det;
    (s, t)
}

pub fn intersect_lines(a: &Line, b: &Line) -> Result<IntersectionResult, GeometryError> {
    check_dims(a.dim(), b.dim())?;
    if a == b {
        return Ok(IntersectionResult::Coincident);
    }
    // canonical directions are equal exactly when the lines are parallel
    if a.dir == b.dir {
        return Ok(IntersectionResult::Empty);
    }
    let (s, t) = closest_parameters(a, b);
    let pa = a.point_at(&s);
    let pb = b.point_at(&t);
    if pa == pb {
        Ok(IntersectionResult::Point(pa))
    } else {
        Ok(IntersectionResult::Empty)
    }
}

pub fn point_on_line(x: &PointN, l: &Line) -> Result<bool, GeometryError> {
    check_dims(l.dim(), x.dim())?;
    let w = sub(x.coords(), l.base.coords());
    let (i, d) = l
        .dir
        .iter()
        .enumerate()
        .find(|(_, d)| !d.is_zero())
        .expect("canonical direction is nonzero");
    let lambda = &w[i] / Rat::from_integer(d.clone());
    Ok(w
        .iter()
        .zip(&l.dir)
        .all(|(wi, di)| *wi == &lambda * Rat::from_integer(di.clone())))
}

/// Squared Euclidean distance from `x` to the line.
pub fn point_line_distance_sq(x: &PointN, l: &Line) -> Rat {
    let t = l.parameter_of(x);
    norm_sq(&sub(x.coords(), l.point_at(&t).coords()))
}

/// Squared distance between two distinct lines, `None` if they meet.
pub fn line_line_distance_sq(a: &Line, b: &Line) -> Option<Rat> {
    if a == b {
        return None;
    }
    if a.dir == b.dir {
        return Some(point_line_distance_sq(a.base(), b));
    }
    let (s, t) = closest_parameters(a, b);
    let d = norm_sq(&sub(a.point_at(&s).coords(), b.point_at(&t).coords()));
    if d.is_zero() {
        None
    } else {
        Some(d)
    }
}

/// Midpoint of the closest-approach segment of two skew lines.
pub(crate) fn closest_approach_midpoint(a: &Line, b: &Line) -> Option<PointN> {
    if a.dir == b.dir {
        return None;
    }
    let (s, t) = closest_parameters(a, b);
    let pa = a.point_at(&s);
    let pb = b.point_at(&t);
    let half = rat(1, 2);
    Some(PointN(
        pa.coords()
            .iter()
            .zip(pb.coords())
            .map(|(x, y)| (x + y) * &half)
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().copied().map(rat_int).collect()
    }

    fn line(p: &[i64], u: &[i64]) -> Line {
        canonicalize_line(&PointN::from_ints(p.iter().copied()), &ints(u)).unwrap()
    }

    #[test]
    fn canonical_form_examples() {
        let l = line(&[0, 0, 5], &[2, 0, 0]);
        assert_eq!(l.base(), &PointN::from_ints([0, 0, 5]));
        assert_eq!(l.dir(), &[BigInt::from(1), BigInt::from(0), BigInt::from(0)]);

        let l = line(&[1, 1], &[0, -3]);
        assert_eq!(l.base(), &PointN::from_ints([1, 0]));
        assert_eq!(l.dir(), &[BigInt::from(0), BigInt::from(1)]);

        let l = line(&[3, 0, 0], &[1, 0, 0]);
        assert_eq!(l.base(), &PointN::origin(3));
    }

    #[test]
    fn rational_direction_is_cleared() {
        let l = canonicalize_line(
            &PointN::origin(2),
            &[rat(-1, 2), rat(3, 4)],
        )
        .unwrap();
        assert_eq!(l.dir(), &[BigInt::from(2), BigInt::from(-3)]);
    }

    #[test]
    fn canonicalize_errors() {
        assert_eq!(
            canonicalize_line(&PointN::origin(3), &ints(&[0, 0, 0])),
            Err(GeometryError::ZeroDirection)
        );
        assert_eq!(
            canonicalize_line(&PointN::origin(3), &ints(&[1, 0])),
            Err(GeometryError::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            canonicalize_line(&PointN::origin(1), &ints(&[1])),
            Err(GeometryError::DimensionTooSmall(1))
        );
    }

    #[test]
    fn intersection_examples() {
        let x = line(&[0, 0], &[1, 0]);
        let y = line(&[0, 0], &[0, 1]);
        assert_eq!(
            intersect_lines(&x, &y).unwrap(),
            IntersectionResult::Point(PointN::origin(2))
        );
        let h = line(&[0, 1], &[1, 0]);
        assert_eq!(intersect_lines(&x, &h).unwrap(), IntersectionResult::Empty);
        assert_eq!(intersect_lines(&x, &x).unwrap(), IntersectionResult::Coincident);

        let x3 = line(&[0, 0, 0], &[1, 0, 0]);
        let skew = line(&[0, 1, 0], &[0, 0, 1]);
        assert_eq!(intersect_lines(&x3, &skew).unwrap(), IntersectionResult::Empty);
        assert!(intersect_lines(&x3, &x).is_err());
    }

    #[test]
    fn incidence_examples() {
        let x3 = line(&[0, 0, 0], &[1, 0, 0]);
        assert!(point_on_line(&PointN::from_ints([2, 0, 0]), &x3).unwrap());
        assert!(!point_on_line(&PointN::from_ints([0, 1, 0]), &x3).unwrap());
        assert!(point_on_line(x3.base(), &x3).unwrap());
    }

    #[test]
    fn distances() {
        let x3 = line(&[0, 0, 0], &[1, 0, 0]);
        let skew = line(&[0, 1, 0], &[0, 0, 1]);
        assert_eq!(line_line_distance_sq(&x3, &skew), Some(rat_int(1)));
        let par = line(&[0, 3, 4], &[1, 0, 0]);
        assert_eq!(line_line_distance_sq(&x3, &par), Some(rat_int(25)));
        let y3 = line(&[0, 0, 0], &[0, 1, 0]);
        assert_eq!(line_line_distance_sq(&x3, &y3), None);
        assert_eq!(
            point_line_distance_sq(&PointN::from_ints([7, 1, 1]), &x3),
            rat_int(2)
        );
    }
}
