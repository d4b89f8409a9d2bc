//! Linear homogeneous recurrences with constant rational coefficients.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::RationalPolynomial;

/// Terms `x_start, x_{start+1}, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub start_index: i64,
    pub terms: Vec<BigRational>,
}

impl Sequence {
    pub fn new(start_index: i64, terms: Vec<BigRational>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InsufficientData { have: 0, need: 1 });
        }
        Ok(Self { start_index, terms })
    }

    pub fn from_integers<I, T>(start_index: i64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(
            start_index,
            terms
                .into_iter()
                .map(|t| BigRational::from_integer(t.into()))
                .collect(),
        )
    }

    pub fn from_biguints<'a>(
        start_index: i64,
        terms: impl IntoIterator<Item = &'a BigUint>,
    ) -> Result<Self> {
        Self::from_integers(
            start_index,
            terms.into_iter().map(|t| BigInt::from(t.clone())),
        )
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term with index `n`, if present.
    pub fn get(&self, n: i64) -> Option<&BigRational> {
        let offset = usize::try_from(n - self.start_index).ok()?;
        self.terms.get(offset)
    }

    /// Sub-sequence starting at index `from`.
    pub fn from_index(&self, from: i64) -> Result<Self> {
        let offset = usize::try_from(from - self.start_index)
            .map_err(|_| Error::Argument(format!("index {from} precedes the sequence start")))?;
        if offset >= self.terms.len() {
            return Err(Error::InsufficientData {
                have: self.terms.len(),
                need: offset + 1,
            });
        }
        Self::new(from, self.terms[offset..].to_vec())
    }
}

/// `x_n = c_1·x_{n-1} + … + c_d·x_{n-d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    coefficients: Vec<BigRational>,
}

impl RecurrenceCoeffs {
    /// Rejects an empty list and a zero last coefficient.
    pub fn new(coefficients: Vec<BigRational>) -> Result<Self> {
        match coefficients.last() {
            None => Err(Error::Argument(
                "a recurrence needs at least one coefficient".into(),
            )),
            Some(c) if c.is_zero() => Err(Error::Argument(
                "the last recurrence coefficient must be nonzero".into(),
            )),
            Some(_) => Ok(Self { coefficients }),
        }
    }

    pub fn from_i64(coefficients: &[i64]) -> Result<Self> {
        Self::new(
            coefficients
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// `x^d - c_1 x^{d-1} - … - c_d`.
    pub fn characteristic_polynomial(&self) -> RationalPolynomial {
        let d = self.order();
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = BigRational::one();
        for (i, c) in self.coefficients.iter().enumerate() {
            coeffs[d - 1 - i] = -c.clone();
        }
        RationalPolynomial::new(coeffs)
    }

    /// Continues `s` by `count` terms.
    pub fn extend(&self, s: &Sequence, count: usize) -> Result<Sequence> {
        let d = self.order();
        if s.len() < d {
            return Err(Error::InsufficientData {
                have: s.len(),
                need: d,
            });
        }
        let mut terms = s.terms.clone();
        for _ in 0..count {
            let n = terms.len();
            let next = self
                .coefficients
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (i, c)| {
                    acc + c * &terms[n - 1 - i]
                });
            terms.push(next);
        }
        Sequence::new(s.start_index, terms)
    }
}

/// `true` iff every window of `order + 1` consecutive terms satisfies `r`.
pub fn verify_recurrence(s: &Sequence, r: &RecurrenceCoeffs) -> Result<bool> {
    let d = r.order();
    if s.len() < d + 1 {
        return Err(Error::InsufficientData {
            have: s.len(),
            need: d + 1,
        });
    }
    Ok(s.terms.windows(d + 1).all(|w| {
        let predicted = r
            .coefficients
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (i, c)| acc + c * &w[d - 1 - i]);
        predicted == w[d]
    }))
}

/// Shortest linear recurrence consistent with every supplied term, by
/// Berlekamp–Massey over the rationals. Leading zeros are dropped first.
///
/// The result is only certified on the given prefix. An all-zero sequence
/// yields the empty (order 0) recurrence.
pub fn find_minimal_recurrence(s: &Sequence) -> Result<RecurrenceCoeffs> {
    if s.len() < 2 {
        return Err(Error::InsufficientData {
            have: s.len(),
            need: 2,
        });
    }
    let terms: Vec<&BigRational> = s.terms.iter().skip_while(|t| t.is_zero()).collect();

    // Connection polynomials in the form 1 + c_1 z + … + c_L z^L.
    let mut current = vec![BigRational::one()];
    let mut previous = vec![BigRational::one()];
    let mut length = 0usize;
    let mut shift = 1usize;
    let mut last_discrepancy = BigRational::one();

    for n in 0..terms.len() {
        let discrepancy =
            (1..=length).fold(terms[n].clone(), |acc, i| acc + &current[i] * terms[n - i]);
        if discrepancy.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &discrepancy / &last_discrepancy;
        let snapshot = current.clone();
        if current.len() < previous.len() + shift {
            current.resize(previous.len() + shift, BigRational::zero());
        }
        for (i, p) in previous.iter().enumerate() {
            current[i + shift] = &current[i + shift] - &factor * p;
        }
        if 2 * length <= n {
            length = n + 1 - length;
            previous = snapshot;
            last_discrepancy = discrepancy;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    current.resize(length + 1, BigRational::zero());
    Ok(RecurrenceCoeffs {
        coefficients: current[1..].iter().map(|c| -c.clone()).collect(),
    })
}
