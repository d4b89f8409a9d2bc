//! Dense univariate polynomials with coefficients stored in ascending degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Field, Ring};

/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        Self { coeffs }
    }

    /// Monic polynomial with the given roots, `(x - r_1)(x - r_2)…`.
    pub fn from_roots(roots: &[T]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc * Self::new(vec![-r.clone(), T::one()])
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * crate::scalar::from_count::<T>(k))
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Field> Polynomial<T> {
    /// Divides through by the leading coefficient. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => {
                let inv = T::one() / lead.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d_deg].clone();
        let mut rem = self.coeffs.clone();
        let Some(n_deg) = self.degree().filter(|&n| n >= d_deg) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![T::zero(); n_deg - d_deg + 1];
        for k in (0..=n_deg - d_deg).rev() {
            let top = rem[k + d_deg].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / lead.clone();
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        rem.truncate(d_deg);
        (Self::new(quot), Self::new(rem))
    }

    /// `true` iff `self` divides `other` exactly.
    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (self.clone() * other.clone()).div_rem(&g).0.monic()
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }
}

impl Polynomial<BigRational> {
    /// Integer form, if every coefficient is already an integer.
    pub fn to_integer(&self) -> Option<Polynomial<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }

    /// Multiplies by the lcm of the denominators and divides by the content,
    /// giving a primitive integer polynomial with positive leading coefficient.
    pub fn clear_denominators(&self) -> Polynomial<BigInt> {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return Polynomial::zero();
        }
        let sign = if ints.last().is_some_and(|c| c.is_negative()) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Polynomial::new(ints.into_iter().map(|c| c / &content * &sign).collect())
    }
}

impl Polynomial<BigInt> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> Polynomial<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl<T: Ring> Add for Polynomial<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Sub for Polynomial<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Ring> Mul for Polynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Ring> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

/// Product of all factors; `1` for an empty list.
pub fn poly_product<T: Ring>(factors: &[Polynomial<T>]) -> Polynomial<T> {
    factors.iter().fold(Polynomial::one(), |acc, f| &acc * f)
}

impl<T: Ring + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    /// Renders like `x^3 - 4x^2 + 4x - 1`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::from_i64(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = ip(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(ip(&[]).degree(), None);
    }

    #[test]
    fn square_of_x_minus_one() {
        assert_eq!(ip(&[-1, 1]) * ip(&[-1, 1]), ip(&[1, -2, 1]));
    }

    #[test]
    fn display_matches_usual_notation() {
        assert_eq!(ip(&[-1, 4, -4, 1]).to_string(), "x^3 - 4x^2 + 4x - 1");
        assert_eq!(ip(&[288, -19344]).to_string(), "-19344x + 288");
        assert_eq!(ip(&[]).to_string(), "0");
        assert_eq!(ip(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn div_rem_reconstructs_dividend() {
        let a = ip(&[1, -128, 1795, -8837, 19239]).to_rational();
        let b = ip(&[1, -3, 1]).to_rational();
        let (q, r) = a.div_rem(&b);
        assert_eq!(q * b + r, a);
    }

    #[test]
    fn gcd_and_lcm() {
        let a = ip(&[-1, 1]) * ip(&[1, -3, 1]);
        let b = ip(&[-1, 1]) * ip(&[1, -8, 1]);
        let (a, b) = (a.to_rational(), b.to_rational());
        assert_eq!(a.gcd(&b), ip(&[-1, 1]).to_rational());
        let l = a.lcm(&b);
        assert_eq!(l.degree(), Some(5));
        assert!(a.divides(&l) && b.divides(&l));
    }

    #[test]
    fn square_free_drops_repeated_roots() {
        let p = (ip(&[-1, 1]) * ip(&[-1, 1]) * ip(&[2, 1])).to_rational();
        assert_eq!(
            p.square_free().monic(),
            (ip(&[-1, 1]) * ip(&[2, 1])).to_rational()
        );
    }

    #[test]
    fn clear_denominators_gives_primitive_form() {
        let half = BigRational::new(1.into(), 2.into());
        let p = Polynomial::new(vec![
            half.clone(),
            -half * BigRational::from_integer(3.into()),
        ]);
        assert_eq!(p.clear_denominators(), ip(&[-1, 3]));
        assert_eq!(p.to_integer(), None);
    }

    #[test]
    fn works_over_floats() {
        let p = Polynomial::new(vec![-2.0_f64, 0.0, 1.0]);
        assert!((p.eval(&2f64.sqrt())).abs() < 1e-12);
        assert_eq!(p.derivative(), Polynomial::new(vec![0.0, 2.0]));
    }
}
