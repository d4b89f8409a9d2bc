//! Exact arithmetic in the golden field `{a + b·φ}` with `φ² = φ + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{Field, OrderedField, Ring};

/// `a + b·φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GoldenNumber<T> {
    pub a: T,
    pub b: T,
}

impl<T: Ring> GoldenNumber<T> {
    pub fn new(a: T, b: T) -> Self {
        Self { a, b }
    }

    pub fn from_base(a: T) -> Self {
        Self { a, b: T::zero() }
    }

    pub fn phi() -> Self {
        Self::new(T::zero(), T::one())
    }

    /// Galois conjugate, `φ ↦ 1 - φ`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone() + self.b.clone(), -self.b.clone())
    }

    /// Field norm `x·conj(x) = a² + ab - b²`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() + self.a.clone() * self.b.clone()
            - self.b.clone() * self.b.clone()
    }
}

impl<T: OrderedField> GoldenNumber<T> {
    /// Exact sign of the real number `a + bφ`.
    ///
    /// With `u = 2a + b`, `v = b` the value is `(u + v√5)/2`; mixed signs are
    /// decided by comparing `u²` with `5v²`.
    pub fn sign(&self) -> Ordering {
        let two = T::one() + T::one();
        let u = two * self.a.clone() + self.b.clone();
        let v = self.b.clone();
        let zero = T::zero();
        let su = u.partial_cmp(&zero).expect("ordered field");
        let sv = v.partial_cmp(&zero).expect("ordered field");
        match (su, sv) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            (su, _) => {
                let five = T::one() + T::one() + T::one() + T::one() + T::one();
                let u2 = u.clone() * u;
                let v2 = five * v.clone() * v;
                let c = u2.partial_cmp(&v2).expect("ordered field");
                if su == Ordering::Greater {
                    c
                } else {
                    c.reverse()
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl<T: Ring> Add for GoldenNumber<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Ring> Sub for GoldenNumber<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Ring> Neg for GoldenNumber<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<T: Ring> Mul for GoldenNumber<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let bd = self.b.clone() * rhs.b.clone();
        Self::new(
            self.a.clone() * rhs.a.clone() + bd.clone(),
            self.a * rhs.b + self.b * rhs.a + bd,
        )
    }
}

impl<T: Field> Div for GoldenNumber<T> {
    type Output = Self;
    /// Panics on division by zero (the norm of a nonzero element never vanishes).
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in the golden field");
        let num = self * rhs.conjugate();
        Self::new(num.a / n.clone(), num.b / n)
    }
}

impl<T: Ring> Zero for GoldenNumber<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Ring> One for GoldenNumber<T> {
    fn one() -> Self {
        Self::new(T::one(), T::zero())
    }
}

impl<T: OrderedField> PartialOrd for GoldenNumber<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).sign())
    }
}

impl<T: Ring + fmt::Display + Signed> fmt::Display for GoldenNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}φ", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}φ", self.a, self.b.abs()),
            (false, false) => write!(f, "{} + {}φ", self.a, self.b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type G = GoldenNumber<BigRational>;

    fn g(a: i64, b: i64) -> G {
        G::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        assert_eq!(G::phi() * G::phi(), G::phi() + G::one());
    }

    #[test]
    fn inverse_of_phi_is_phi_minus_one() {
        assert_eq!(G::one() / G::phi(), g(-1, 1));
    }

    #[test]
    fn ordering_near_cancellation() {
        // φ - 1.618 > 0 and φ - 1.619 < 0; scaled by 1000 to stay integral.
        assert_eq!(g(-1618, 1000).sign(), Ordering::Greater);
        assert_eq!(g(-1619, 1000).sign(), Ordering::Less);
        // 1 - φ < 0 < φ - 1
        assert!(g(1, -1) < G::zero());
        assert!(g(-1, 1) > G::zero());
        assert_eq!(g(0, 0).sign(), Ordering::Equal);
    }

    #[test]
    fn display() {
        assert_eq!(g(2, -1).to_string(), "2 - 1φ");
        assert_eq!(g(0, 3).to_string(), "3φ");
    }

    proptest! {
        #[test]
        fn sign_agrees_with_floating_point(a in -1000i64..1000, b in -1000i64..1000) {
            let phi = (1.0 + 5f64.sqrt()) / 2.0;
            let approx = a as f64 + b as f64 * phi;
            prop_assume!(approx.abs() > 1e-6);
            let expected = if approx > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(g(a, b).sign(), expected);
        }

        #[test]
        fn multiplication_is_commutative_and_norm_multiplicative(
            a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50
        ) {
            let (x, y) = (g(a, b), g(c, d));
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        }
    }
}
