//! Level-by-level census of the ten vertex classes and of their value sums.
//!
//! Both quantities advance by the same ten linear rules. Each rule has a
//! nonnegative integer numerator row and a divisor equal to the number of
//! incoming edges of that class; value sums use the numerators alone, while
//! counts divide by the multiplicity, which must be exact at every level.

use std::fmt;
use std::ops::Index;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::RationalMatrix;

/// Vertex classes. `One` sits on level-tetrahedron corners, A/B on its edges,
/// C/D/E on its faces and F/G/H/K in its interior.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    K,
    One,
}

impl VertexClass {
    /// Matrix and table order: `a, b, c, d, e, f, g, h, k, v`.
    pub const ALL: [VertexClass; 10] = [
        VertexClass::A,
        VertexClass::B,
        VertexClass::C,
        VertexClass::D,
        VertexClass::E,
        VertexClass::F,
        VertexClass::G,
        VertexClass::H,
        VertexClass::K,
        VertexClass::One,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Lower-case column label (`v` for the corner class).
    pub fn label(self) -> &'static str {
        match self {
            VertexClass::A => "a",
            VertexClass::B => "b",
            VertexClass::C => "c",
            VertexClass::D => "d",
            VertexClass::E => "e",
            VertexClass::F => "f",
            VertexClass::G => "g",
            VertexClass::H => "h",
            VertexClass::K => "k",
            VertexClass::One => "v",
        }
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexClass::One => write!(f, "1"),
            other => write!(f, "{}", other.label().to_ascii_uppercase()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MosaicMode {
    /// {4,3,3,5}
    Hyperbolic,
    /// {4,3,3,4}, the classical Pascal simplex.
    Euclidean,
}

impl MosaicMode {
    /// Classes that occur at all. The Euclidean simplex has no B, D, E, G,
    /// H or K vertices.
    pub fn has_class(self, class: VertexClass) -> bool {
        match self {
            MosaicMode::Hyperbolic => true,
            MosaicMode::Euclidean => !matches!(
                class,
                VertexClass::B
                    | VertexClass::D
                    | VertexClass::E
                    | VertexClass::G
                    | VertexClass::H
                    | VertexClass::K
            ),
        }
    }
}

impl fmt::Display for MosaicMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MosaicMode::Hyperbolic => write!(f, "hyperbolic"),
            MosaicMode::Euclidean => write!(f, "euclidean"),
        }
    }
}

/// Which quantity a matrix or step refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Counts,
    Values,
}

/// Closed subsystems of the growth rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    /// `a, b, v`: the level-tetrahedron edges.
    Edges,
    /// `a, b, c, d, e, v`: edges and faces.
    Faces,
}

impl Block {
    pub fn classes(self) -> &'static [VertexClass] {
        use VertexClass::*;
        match self {
            Block::Edges => &[A, B, One],
            Block::Faces => &[A, B, C, D, E, One],
        }
    }
}

struct GrowthRule {
    numerators: [u32; 10],
    divisor: u32,
}

const fn rule(numerators: [u32; 10], divisor: u32) -> GrowthRule {
    GrowthRule {
        numerators,
        divisor,
    }
}

//                          a  b  c  d  e   f   g    h    k  v
const GROWTH: [GrowthRule; 10] = [
    rule([2, 2, 0, 0, 0, 0, 0, 0, 0, 3], 2),
    rule([1, 2, 0, 0, 0, 0, 0, 0, 0, 0], 1),
    rule([2, 0, 3, 2, 0, 0, 0, 0, 0, 0], 3),
    rule([0, 2, 3, 4, 5, 0, 0, 0, 0, 0], 2),
    rule([0, 0, 3, 4, 6, 0, 0, 0, 0, 0], 1),
    rule([0, 0, 1, 0, 0, 4, 2, 0, 0, 0], 4),
    rule([0, 0, 0, 1, 0, 6, 6, 5, 0, 0], 3),
    rule([0, 0, 0, 0, 1, 12, 12, 12, 12, 0], 2),
    rule([0, 0, 0, 0, 0, 94, 97, 101, 107, 0], 1),
    rule([0, 0, 0, 0, 0, 0, 0, 0, 0, 1], 1),
];

/// One nonnegative integer per vertex class, in [`VertexClass::ALL`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ClassVector([BigUint; 10]);

impl ClassVector {
    pub fn from_array(values: [BigUint; 10]) -> Self {
        Self(values)
    }

    pub fn from_u64(values: [u64; 10]) -> Self {
        Self(values.map(BigUint::from))
    }

    fn seed() -> Self {
        let mut v = Self::default();
        v.0[VertexClass::One.index()] = BigUint::one();
        v
    }

    fn corners() -> Self {
        let mut v = Self::default();
        v.0[VertexClass::One.index()] = BigUint::from(4u32);
        v
    }

    pub fn as_slice(&self) -> &[BigUint; 10] {
        &self.0
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.0
            .iter()
            .map(|x| BigRational::from_integer(BigInt::from(x.clone())))
            .collect()
    }
}

impl Index<VertexClass> for ClassVector {
    type Output = BigUint;

    fn index(&self, class: VertexClass) -> &BigUint {
        &self.0[class.index()]
    }
}

fn check_closure(mode: MosaicMode, v: &ClassVector, level: u64) -> Result<()> {
    for class in VertexClass::ALL {
        if !mode.has_class(class) && !v[class].is_zero() {
            return Err(Error::Invariant(format!(
                "class {class} is nonzero at level {level} in {mode} mode"
            )));
        }
    }
    Ok(())
}

/// One application of the growth rules, from `level` to `level + 1`.
fn step(quantity: Quantity, mode: MosaicMode, level: u64, v: &ClassVector) -> Result<ClassVector> {
    check_closure(mode, v, level)?;
    let mut next = ClassVector::default();
    for (class, rule) in VertexClass::ALL.into_iter().zip(&GROWTH) {
        if !mode.has_class(class) {
            continue;
        }
        let numerator: BigUint = rule
            .numerators
            .iter()
            .zip(&v.0)
            .filter(|(c, _)| **c != 0)
            .map(|(c, x)| x * *c)
            .sum();
        next.0[class.index()] = match quantity {
            Quantity::Values => numerator,
            Quantity::Counts => {
                let (q, r) = numerator.div_rem(&BigUint::from(rule.divisor));
                if !r.is_zero() {
                    return Err(Error::InexactDivision {
                        class,
                        level,
                        divisor: rule.divisor,
                    });
                }
                q
            }
        };
    }
    check_closure(mode, &next, level + 1)?;
    Ok(next)
}

/// Vertex counts per class at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCensus {
    pub level: u64,
    pub mode: MosaicMode,
    pub counts: ClassVector,
}

impl LevelCensus {
    pub fn seed(mode: MosaicMode) -> Self {
        Self {
            level: 0,
            mode,
            counts: ClassVector::seed(),
        }
    }

    pub fn count(&self, class: VertexClass) -> &BigUint {
        &self.counts[class]
    }

    /// Number of vertices on the level, including the four corners.
    pub fn total_vertices(&self) -> BigUint {
        self.counts.total()
    }

    /// Count of `class` on a single face of the level tetrahedron (C, D, E)
    /// or a single edge (A, B).
    pub fn per_cell_share(&self, class: VertexClass) -> Result<BigUint> {
        per_cell_share(&self.counts, class)
    }
}

/// Per-class value sums at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelValueSums {
    pub level: u64,
    pub mode: MosaicMode,
    pub sums: ClassVector,
}

impl LevelValueSums {
    pub fn seed(mode: MosaicMode) -> Self {
        Self {
            level: 0,
            mode,
            sums: ClassVector::seed(),
        }
    }

    pub fn sum(&self, class: VertexClass) -> &BigUint {
        &self.sums[class]
    }

    /// Sum of all vertex values on the level.
    pub fn total(&self) -> BigUint {
        self.sums.total()
    }

    pub fn per_cell_share(&self, class: VertexClass) -> Result<BigUint> {
        per_cell_share(&self.sums, class)
    }
}

fn per_cell_share(v: &ClassVector, class: VertexClass) -> Result<BigUint> {
    let parts = match class {
        VertexClass::A | VertexClass::B => 6u32,
        VertexClass::C | VertexClass::D | VertexClass::E => 4,
        other => {
            return Err(Error::Argument(format!(
                "class {other} is not confined to edges or faces"
            )))
        }
    };
    let (q, r) = v[class].div_rem(&BigUint::from(parts));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Invariant(format!(
            "{} of class {class} does not split evenly over {parts} cells",
            v[class]
        )))
    }
}

pub fn advance_census(c: &LevelCensus) -> Result<LevelCensus> {
    if c.level == 0 {
        return Err(Error::Precondition(
            "level 0 is the seed; use census_at for level 1".into(),
        ));
    }
    Ok(LevelCensus {
        level: c.level + 1,
        mode: c.mode,
        counts: step(Quantity::Counts, c.mode, c.level, &c.counts)?,
    })
}

pub fn advance_value_sums(v: &LevelValueSums) -> Result<LevelValueSums> {
    if v.level == 0 {
        return Err(Error::Precondition(
            "level 0 is the seed; use value_sums_at for level 1".into(),
        ));
    }
    Ok(LevelValueSums {
        level: v.level + 1,
        mode: v.mode,
        sums: step(Quantity::Values, v.mode, v.level, &v.sums)?,
    })
}

/// Censuses for levels `0..=n`.
pub fn census_levels(mode: MosaicMode, n: u64) -> Result<Vec<LevelCensus>> {
    let mut out = vec![LevelCensus::seed(mode)];
    if n >= 1 {
        out.push(LevelCensus {
            level: 1,
            mode,
            counts: ClassVector::corners(),
        });
    }
    while (out.len() as u64) <= n {
        let next = advance_census(out.last().expect("nonempty"))?;
        out.push(next);
    }
    Ok(out)
}

pub fn census_at(mode: MosaicMode, n: u64) -> Result<LevelCensus> {
    if n == 0 {
        return Ok(LevelCensus::seed(mode));
    }
    let mut c = LevelCensus {
        level: 1,
        mode,
        counts: ClassVector::corners(),
    };
    while c.level < n {
        c = advance_census(&c)?;
    }
    Ok(c)
}

pub fn total_vertices(c: &LevelCensus) -> BigUint {
    c.total_vertices()
}

/// Value sums for levels `0..=n`.
pub fn value_sums_levels(mode: MosaicMode, n: u64) -> Result<Vec<LevelValueSums>> {
    let mut out = vec![LevelValueSums::seed(mode)];
    if n >= 1 {
        out.push(LevelValueSums {
            level: 1,
            mode,
            sums: ClassVector::corners(),
        });
    }
    while (out.len() as u64) <= n {
        let next = advance_value_sums(out.last().expect("nonempty"))?;
        out.push(next);
    }
    Ok(out)
}

pub fn value_sums_at(mode: MosaicMode, n: u64) -> Result<LevelValueSums> {
    if n == 0 {
        return Ok(LevelValueSums::seed(mode));
    }
    let mut v = LevelValueSums {
        level: 1,
        mode,
        sums: ClassVector::corners(),
    };
    while v.level < n {
        v = advance_value_sums(&v)?;
    }
    Ok(v)
}

/// The 10x10 matrix taking the class vector at level `n` to level `n + 1`,
/// rows and columns in [`VertexClass::ALL`] order.
pub fn coefficient_matrix(quantity: Quantity) -> RationalMatrix {
    mode_coefficient_matrix(MosaicMode::Hyperbolic, quantity)
}

/// As [`coefficient_matrix`], with the rows and columns of classes absent in
/// `mode` zeroed out.
pub fn mode_coefficient_matrix(mode: MosaicMode, quantity: Quantity) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(10, 10);
    for (i, row_class) in VertexClass::ALL.into_iter().enumerate() {
        let rule = &GROWTH[i];
        for (j, col_class) in VertexClass::ALL.into_iter().enumerate() {
            if !mode.has_class(row_class) || !mode.has_class(col_class) {
                continue;
            }
            let den = match quantity {
                Quantity::Counts => rule.divisor,
                Quantity::Values => 1,
            };
            m.set(
                i,
                j,
                BigRational::new(rule.numerators[j].into(), den.into()),
            );
        }
    }
    m
}

/// The closed subsystem on `block`, rows taken from the same growth rules.
pub fn reduced_coefficient_matrix(block: Block, quantity: Quantity) -> RationalMatrix {
    let keep: Vec<usize> = block.classes().iter().map(|c| c.index()).collect();
    coefficient_matrix(quantity).submatrix(&keep)
}

/// Integer numerator of the growth rule for `row` at column `col`: how many
/// `row` children one vertex of class `col` produces, counted with multiplicity.
pub fn growth_numerator(row: VertexClass, col: VertexClass) -> u32 {
    GROWTH[row.index()].numerators[col.index()]
}

/// Number of incoming edges of a vertex of `class` (the divisor of its rule).
pub fn incoming_edges(class: VertexClass) -> u32 {
    GROWTH[class.index()].divisor
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_and_first_level() {
        let c0 = census_at(MosaicMode::Hyperbolic, 0).unwrap();
        assert_eq!(
            c0.counts,
            ClassVector::from_u64([0, 0, 0, 0, 0, 0, 0, 0, 0, 1])
        );
        assert_eq!(c0.total_vertices(), BigUint::one());
        let c1 = census_at(MosaicMode::Hyperbolic, 1).unwrap();
        assert_eq!(c1.total_vertices(), BigUint::from(4u32));
    }

    #[test]
    fn advancing_the_seed_is_a_precondition_error() {
        let seed = LevelCensus::seed(MosaicMode::Hyperbolic);
        assert!(matches!(advance_census(&seed), Err(Error::Precondition(_))));
        let seed = LevelValueSums::seed(MosaicMode::Euclidean);
        assert!(matches!(
            advance_value_sums(&seed),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn level_two_edge_vertices() {
        let c2 = census_at(MosaicMode::Hyperbolic, 2).unwrap();
        assert_eq!(
            c2.counts,
            ClassVector::from_u64([6, 0, 0, 0, 0, 0, 0, 0, 0, 4])
        );
    }

    #[test]
    fn inexact_division_is_reported() {
        // a' = (2a + 2b + 3v)/2 with v odd cannot be an integer.
        let bad = LevelCensus {
            level: 3,
            mode: MosaicMode::Hyperbolic,
            counts: ClassVector::from_u64([0, 0, 0, 0, 0, 0, 0, 0, 0, 3]),
        };
        assert_eq!(
            advance_census(&bad),
            Err(Error::InexactDivision {
                class: VertexClass::A,
                level: 3,
                divisor: 2
            })
        );
    }

    #[test]
    fn euclidean_rejects_hyperbolic_only_classes() {
        let bad = LevelCensus {
            level: 3,
            mode: MosaicMode::Euclidean,
            counts: ClassVector::from_u64([12, 6, 4, 0, 0, 0, 0, 0, 0, 4]),
        };
        assert!(matches!(advance_census(&bad), Err(Error::Invariant(_))));
    }

    #[test]
    fn euclidean_level_three_to_four() {
        let c3 = LevelCensus {
            level: 3,
            mode: MosaicMode::Euclidean,
            counts: ClassVector::from_u64([12, 0, 4, 0, 0, 0, 0, 0, 0, 4]),
        };
        let c4 = advance_census(&c3).unwrap();
        assert_eq!(
            c4.counts,
            ClassVector::from_u64([18, 0, 12, 0, 0, 1, 0, 0, 0, 4])
        );
    }

    #[test]
    fn per_cell_shares() {
        let c5 = census_at(MosaicMode::Hyperbolic, 5).unwrap();
        assert_eq!(
            c5.per_cell_share(VertexClass::A).unwrap(),
            BigUint::from(9u32)
        );
        assert_eq!(
            c5.per_cell_share(VertexClass::E).unwrap(),
            BigUint::from(39u32)
        );
        assert!(c5.per_cell_share(VertexClass::K).is_err());
    }

    #[test]
    fn b_row_of_the_counts_matrix() {
        let m = coefficient_matrix(Quantity::Counts);
        let expected: Vec<BigRational> = [1, 2, 0, 0, 0, 0, 0, 0, 0, 0]
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        assert_eq!(m.row(1), expected.as_slice());
    }

    #[test]
    fn edge_block_matrix() {
        let m = reduced_coefficient_matrix(Block::Edges, Quantity::Counts);
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(m.row(0), &[q(1, 1), q(1, 1), q(3, 2)]);
        assert_eq!(m.row(1), &[q(1, 1), q(2, 1), q(0, 1)]);
        assert_eq!(m.row(2), &[q(0, 1), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn class_labels() {
        assert_eq!(VertexClass::One.to_string(), "1");
        assert_eq!(VertexClass::K.to_string(), "K");
        let labels: Vec<_> = VertexClass::ALL.iter().map(|c| c.label()).collect();
        assert_eq!(labels.join(","), "a,b,c,d,e,f,g,h,k,v");
    }
}
