//! Exact radii: rationals and square roots of non-negative rationals.
//!
//! Under the Euclidean norm the minimum of `|f|` over a simplex is the square
//! root of a rational, so every radius is stored either as a rational or by
//! its square. Comparisons never leave ℚ: single radii are compared by signed
//! squares, and differences of radii by repeated squaring with explicit sign
//! tracking.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{Signed, ToPrimitive, Zero};

use super::Rational;

#[derive(Clone, Debug)]
pub enum ExactRadius {
    Rat(Rational),
    /// The square root of the (non-negative) payload.
    SqrtRat(Rational),
}

impl ExactRadius {
    pub fn zero() -> Self {
        ExactRadius::Rat(Rational::zero())
    }

    pub fn rat(value: Rational) -> Self {
        ExactRadius::Rat(value)
    }

    pub fn int(value: i64) -> Self {
        ExactRadius::Rat(Rational::from_integer(value.into()))
    }

    pub fn sqrt(square: Rational) -> Self {
        assert!(!square.is_negative(), "square root of a negative rational");
        ExactRadius::SqrtRat(square)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactRadius::Rat(v) | ExactRadius::SqrtRat(v) => v.is_zero(),
        }
    }

    /// Sign in `{-1, 0, 1}`.
    pub fn signum(&self) -> i32 {
        match self {
            ExactRadius::Rat(v) => sign_of(v),
            ExactRadius::SqrtRat(v) => i32::from(!v.is_zero()),
        }
    }

    /// `value²`, always rational.
    pub fn square(&self) -> Rational {
        match self {
            ExactRadius::Rat(v) => v * v,
            ExactRadius::SqrtRat(q) => q.clone(),
        }
    }

    /// The value itself when it is rational (a `SqrtRat` of a perfect square counts).
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            ExactRadius::Rat(v) => Some(v.clone()),
            ExactRadius::SqrtRat(q) => rational_sqrt(q),
        }
    }

    /// Multiplication by a non-negative rational.
    pub fn scale(&self, factor: &Rational) -> ExactRadius {
        assert!(!factor.is_negative(), "radius scaled by a negative factor");
        match self {
            ExactRadius::Rat(v) => ExactRadius::Rat(v * factor),
            ExactRadius::SqrtRat(q) => ExactRadius::SqrtRat(q * factor * factor),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactRadius::Rat(v) => v.to_f64().unwrap_or(f64::NAN),
            ExactRadius::SqrtRat(q) => q.to_f64().unwrap_or(f64::NAN).sqrt(),
        }
    }

    fn signed_square(&self) -> (i32, Rational) {
        (self.signum(), self.square())
    }
}

pub(crate) fn sign_of(v: &Rational) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

fn ordering_of(sign: i32) -> Ordering {
    sign.cmp(&0)
}

/// Exact square root when `q` is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Exact comparison of two radii.
pub fn cmp_radius(a: &ExactRadius, b: &ExactRadius) -> Ordering {
    if let (ExactRadius::Rat(x), ExactRadius::Rat(y)) = (a, b) {
        return x.cmp(y);
    }
    let (sa, qa) = a.signed_square();
    let (sb, qb) = b.signed_square();
    if sa != sb {
        return sa.cmp(&sb);
    }
    match sa {
        0 => Ordering::Equal,
        1 => qa.cmp(&qb),
        _ => qb.cmp(&qa),
    }
}

impl PartialEq for ExactRadius {
    fn eq(&self, other: &Self) -> bool {
        cmp_radius(self, other) == Ordering::Equal
    }
}

impl Eq for ExactRadius {}

impl PartialOrd for ExactRadius {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRadius {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_radius(self, other)
    }
}

impl Hash for ExactRadius {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Consistent with `Eq`: equal radii share sign and square.
        let (s, q) = self.signed_square();
        s.hash(state);
        q.hash(state);
    }
}

impl fmt::Display for ExactRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactRadius::Rat(v) => write!(f, "{v}"),
            ExactRadius::SqrtRat(q) => match rational_sqrt(q) {
                Some(r) => write!(f, "{r}"),
                None => write!(f, "sqrt({q})"),
            },
        }
    }
}

/// Sign of `a + b·√u` for `u ≥ 0`.
fn sign_lin_sqrt(a: &Rational, b: &Rational, u: &Rational) -> i32 {
    let sa = sign_of(a);
    if b.is_zero() || u.is_zero() {
        return sa;
    }
    let sb = sign_of(b);
    if sa == 0 || sa == sb {
        return sb;
    }
    // Opposite signs: the larger square wins.
    match sign_of(&(a * a - b * b * u)) {
        0 => 0,
        1 => sa,
        _ => sb,
    }
}

/// Sign of `b·√u + c·√v`.
fn sign_two_sqrt(b: &Rational, u: &Rational, c: &Rational, v: &Rational) -> i32 {
    let s1 = if u.is_zero() { 0 } else { sign_of(b) };
    let s2 = if v.is_zero() { 0 } else { sign_of(c) };
    if s1 == 0 {
        return s2;
    }
    if s2 == 0 || s1 == s2 {
        return s1;
    }
    match (b * b * u).cmp(&(c * c * v)) {
        Ordering::Greater => s1,
        Ordering::Less => s2,
        Ordering::Equal => 0,
    }
}

/// Sign of `α + β·√u + γ·√v`.
fn sign_three(alpha: &Rational, beta: &Rational, u: &Rational, gamma: &Rational, v: &Rational) -> i32 {
    let sw = sign_two_sqrt(beta, u, gamma, v);
    let sa = sign_of(alpha);
    if sw == 0 {
        return sa;
    }
    if sa == 0 || sa == sw {
        return sw;
    }
    // |α| against |W| with W = β√u + γ√v, W² = β²u + γ²v + 2βγ√(uv).
    let rest = alpha * alpha - beta * beta * u - gamma * gamma * v;
    let two = Rational::from_integer(2.into());
    match sign_lin_sqrt(&rest, &(-(two * beta * gamma)), &(u * v)) {
        0 => 0,
        1 => sa,
        _ => sw,
    }
}

/// Exact ordering of `|a − b|` against `|c − d|`.
pub fn cmp_radius_diff(a: &ExactRadius, b: &ExactRadius, c: &ExactRadius, d: &ExactRadius) -> Ordering {
    if let (ExactRadius::Rat(a), ExactRadius::Rat(b), ExactRadius::Rat(c), ExactRadius::Rat(d)) = (a, b, c, d) {
        return (a - b).abs().cmp(&(c - d).abs());
    }
    let (sa, qa) = a.signed_square();
    let (sb, qb) = b.signed_square();
    let (sc, qc) = c.signed_square();
    let (sd, qd) = d.signed_square();
    // (a−b)² − (c−d)² = (qa+qb−qc−qd) − 2·sa·sb·√(qa·qb) + 2·sc·sd·√(qc·qd)
    let alpha = &qa + &qb - &qc - &qd;
    let beta = Rational::from_integer((-2 * sa * sb).into());
    let gamma = Rational::from_integer((2 * sc * sd).into());
    ordering_of(sign_three(&alpha, &beta, &(&qa * &qb), &gamma, &(&qc * &qd)))
}

/// The absolute difference `|hi − lo|` of two radii, kept symbolic.
///
/// Bottleneck distances between Euclidean barcodes are differences of square
/// roots and are generally not themselves radii; a `Gap` carries them exactly.
#[derive(Clone, Debug)]
pub struct Gap {
    pub hi: ExactRadius,
    pub lo: ExactRadius,
}

impl Gap {
    pub fn between(a: &ExactRadius, b: &ExactRadius) -> Gap {
        if a >= b {
            Gap { hi: a.clone(), lo: b.clone() }
        } else {
            Gap { hi: b.clone(), lo: a.clone() }
        }
    }

    pub fn of(r: &ExactRadius) -> Gap {
        Gap::between(r, &ExactRadius::zero())
    }

    pub fn zero() -> Gap {
        Gap::of(&ExactRadius::zero())
    }

    pub fn scale(&self, factor: &Rational) -> Gap {
        Gap { hi: self.hi.scale(factor), lo: self.lo.scale(factor) }
    }

    pub fn half(&self) -> Gap {
        self.scale(&Rational::new(1.into(), 2.into()))
    }

    /// Collapses to a single radius when the difference is representable.
    pub fn as_radius(&self) -> Option<ExactRadius> {
        if self.lo.is_zero() {
            return Some(match &self.hi {
                ExactRadius::Rat(v) => ExactRadius::Rat(v.abs()),
                other => other.clone(),
            });
        }
        if self.hi == self.lo {
            return Some(ExactRadius::zero());
        }
        match (self.hi.as_rational(), self.lo.as_rational()) {
            (Some(h), Some(l)) => Some(ExactRadius::Rat((h - l).abs())),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        (self.hi.to_f64() - self.lo.to_f64()).abs()
    }
}

impl PartialEq for Gap {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Gap {}

impl PartialOrd for Gap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gap {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_radius_diff(&self.hi, &self.lo, &other.hi, &other.lo)
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_radius() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{} - {}", self.hi, self.lo),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn rat(n: i64, d: i64) -> ExactRadius {
        ExactRadius::Rat(q(n, d))
    }

    fn sq(n: i64, d: i64) -> ExactRadius {
        ExactRadius::sqrt(q(n, d))
    }

    #[test]
    fn compares_rationals_with_roots() {
        assert_eq!(cmp_radius(&rat(1, 2), &sq(1, 2)), Ordering::Less);
        assert_eq!(cmp_radius(&rat(3, 1), &rat(3, 1)), Ordering::Equal);
        assert_eq!(cmp_radius(&sq(2, 1), &rat(2, 1)), Ordering::Less);
        assert_eq!(rat(5, 1), sq(25, 1));
        assert_eq!(cmp_radius(&rat(-1, 1), &sq(0, 1)), Ordering::Less);
    }

    #[test]
    fn compares_differences() {
        assert_eq!(cmp_radius_diff(&rat(1, 1), &rat(0, 1), &rat(3, 1), &rat(2, 1)), Ordering::Equal);
        assert_eq!(cmp_radius_diff(&sq(2, 1), &rat(1, 1), &rat(1, 2), &rat(0, 1)), Ordering::Less);
        assert_eq!(cmp_radius_diff(&sq(5, 1), &sq(2, 1), &rat(1, 1), &rat(0, 1)), Ordering::Less);
        // √2 − 1 against 2 − √2: 2√2 < 3.
        assert_eq!(cmp_radius_diff(&sq(2, 1), &rat(1, 1), &rat(2, 1), &sq(2, 1)), Ordering::Less);
        // |√9 − √4| = 1
        assert_eq!(cmp_radius_diff(&sq(9, 1), &sq(4, 1), &rat(1, 1), &rat(0, 1)), Ordering::Equal);
    }

    #[test]
    fn gap_collapses_when_rational() {
        let g = Gap::between(&sq(9, 4), &rat(1, 2));
        assert_eq!(g.as_radius(), Some(rat(1, 1)));
        assert!(Gap::between(&sq(2, 1), &rat(1, 1)).as_radius().is_none());
        assert_eq!(Gap::of(&rat(2, 1)).half(), Gap::of(&rat(1, 1)));
    }

    fn radius() -> impl Strategy<Value = ExactRadius> {
        (0i64..40, 1i64..6, any::<bool>()).prop_map(|(n, d, root)| if root { sq(n, d) } else { rat(n, d) })
    }

    proptest! {
        #[test]
        fn order_agrees_with_floats(a in radius(), b in radius()) {
            let (x, y) = (a.to_f64(), b.to_f64());
            if (x - y).abs() > 1e-9 {
                prop_assert_eq!(cmp_radius(&a, &b), x.partial_cmp(&y).unwrap());
            }
            prop_assert_eq!(cmp_radius(&a, &b), cmp_radius(&b, &a).reverse());
        }

        #[test]
        fn order_is_transitive(a in radius(), b in radius(), c in radius()) {
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
        }

        #[test]
        fn difference_order_agrees_with_floats(a in radius(), b in radius(), c in radius(), d in radius()) {
            let x = (a.to_f64() - b.to_f64()).abs();
            let y = (c.to_f64() - d.to_f64()).abs();
            if (x - y).abs() > 1e-9 {
                prop_assert_eq!(cmp_radius_diff(&a, &b, &c, &d), x.partial_cmp(&y).unwrap());
            }
            prop_assert_eq!(cmp_radius_diff(&a, &b, &c, &d), cmp_radius_diff(&c, &d, &a, &b).reverse());
        }
    }
}
