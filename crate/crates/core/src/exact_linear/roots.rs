//! Real-root isolation with Sturm chains and exact bisection.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::OrderedField;

use super::polynomial::Polynomial;

/// Open interval `(low, high)` holding exactly one real root of the
/// polynomial it was isolated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval<T> {
    pub low: T,
    pub high: T,
}

impl<T: OrderedField> RootInterval<T> {
    pub fn width(&self) -> T {
        self.high.clone() - self.low.clone()
    }

    pub fn midpoint(&self) -> T {
        let two = T::one() + T::one();
        (self.low.clone() + self.high.clone()) / two
    }

    pub fn contains(&self, x: &T) -> bool {
        &self.low < x && x < &self.high
    }

    /// The interval grown by `margin` on both sides.
    pub fn widen(&self, margin: &T) -> Self {
        Self {
            low: self.low.clone() - margin.clone(),
            high: self.high.clone() + margin.clone(),
        }
    }
}

impl RootInterval<BigRational> {
    /// Midpoint rounded half-up to `digits` decimal places.
    pub fn midpoint_decimal(&self, digits: usize) -> String {
        to_decimal(&self.midpoint(), digits)
    }
}

impl<T: fmt::Display> fmt::Display for RootInterval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.low, self.high)
    }
}

/// Renders an exact rational as a fixed-point decimal, rounding half away
/// from zero.
pub fn to_decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2)))
        .floor()
        .to_integer();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{:0>width$}",
            frac_part.to_string(),
            width = digits
        )
    }
}

/// Canonical Sturm chain `p, p', -rem(p, p'), …`.
#[derive(Clone, Debug)]
pub struct SturmChain<T> {
    chain: Vec<Polynomial<T>>,
}

impl<T: OrderedField> SturmChain<T> {
    pub fn new(p: &Polynomial<T>) -> Self {
        let mut chain = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let prev = chain.last().expect("chain is never empty");
            let rem = prev.div_rem(&next).1;
            chain.push(next);
            next = -rem;
        }
        Self { chain }
    }

    pub fn polynomials(&self) -> &[Polynomial<T>] {
        &self.chain
    }

    /// Number of sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &T) -> usize {
        let mut last: Option<bool> = None;
        let mut count = 0;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let positive = v.is_positive();
            if last.is_some_and(|l| l != positive) {
                count += 1;
            }
            last = Some(positive);
        }
        count
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_roots(&self, a: &T, b: &T) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// `1 + max |c_i / c_n|`: every root has absolute value strictly below it.
pub fn cauchy_bound<T: OrderedField>(p: &Polynomial<T>) -> T {
    let lead = p.leading().cloned().unwrap_or_else(T::one).abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / lead.clone())
        .fold(T::zero(), |m, c| if c > m { c } else { m });
    max + T::one()
}

/// Brackets the largest real root of `p` in an interval no wider than
/// `precision`.
///
/// Isolation runs on the square-free part of `p`, so the returned endpoints
/// always show a sign change of that part and contain exactly one of its roots.
pub fn isolate_dominant_root<T: OrderedField>(
    p: &Polynomial<T>,
    precision: &T,
) -> Result<RootInterval<T>> {
    if !precision.is_positive() {
        return Err(Error::NonPositivePrecision);
    }
    match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let simple = p.square_free();
    let sturm = SturmChain::new(&simple);
    let bound = cauchy_bound(&simple);
    let mut low = -bound.clone();
    let mut high = bound;
    if sturm.count_roots(&low, &high) == 0 {
        return Err(Error::NoRealRoot);
    }
    let two = T::one() + T::one();
    let three = two.clone() + T::one();
    loop {
        let isolated = sturm.count_roots(&low, &high) == 1;
        if isolated && high.clone() - low.clone() <= *precision {
            return Ok(RootInterval { low, high });
        }
        let width = high.clone() - low.clone();
        let mut split = (low.clone() + high.clone()) / two.clone();
        if simple.eval(&split).is_zero() {
            // Roots are isolated points, so a nearby third-point split works.
            split = low.clone() + width.clone() / three.clone();
            if simple.eval(&split).is_zero() {
                split = low.clone() + width * two.clone() / three.clone();
            }
        }
        if sturm.count_roots(&split, &high) >= 1 {
            low = split;
        } else {
            high = split;
        }
    }
}

/// Every real root of `p`, each in its own interval of width at most `precision`,
/// in increasing order.
pub fn isolate_real_roots<T: OrderedField>(
    p: &Polynomial<T>,
    precision: &T,
) -> Result<Vec<RootInterval<T>>> {
    if !precision.is_positive() {
        return Err(Error::NonPositivePrecision);
    }
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let simple = p.square_free();
    let sturm = SturmChain::new(&simple);
    let bound = cauchy_bound(&simple);
    let mut out = Vec::new();
    let mut pending = vec![(-bound.clone(), bound)];
    let two = T::one() + T::one();
    let three = two.clone() + T::one();
    while let Some((low, high)) = pending.pop() {
        match sturm.count_roots(&low, &high) {
            0 => {}
            1 if high.clone() - low.clone() <= *precision => out.push(RootInterval { low, high }),
            _ => {
                let width = high.clone() - low.clone();
                let mut split = (low.clone() + high.clone()) / two.clone();
                if simple.eval(&split).is_zero() {
                    split = low.clone() + width / three.clone();
                }
                pending.push((low, split.clone()));
                pending.push((split, high));
            }
        }
    }
    out.sort_by(|a, b| a.low.partial_cmp(&b.low).expect("ordered field"));
    Ok(out)
}
