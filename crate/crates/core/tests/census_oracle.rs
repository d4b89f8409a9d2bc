//! Census checks against independent computations: a brute-force walk of the
//! Euclidean 4-cube lattice, the coefficient matrices, and reference values.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use hyperbolic_pascal::census::{
    advance_census, census_at, census_levels, mode_coefficient_matrix, value_sums_at,
    value_sums_levels, ClassVector, MosaicMode, Quantity, VertexClass,
};
use hyperbolic_pascal::Error;

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Level `n` of the lattice N^4: class from the number of nonzero coordinates,
/// value = number of monotone lattice paths (a multinomial coefficient).
fn lattice_level(n: u64) -> ([u64; 10], [BigUint; 10]) {
    use VertexClass::*;
    let mut counts = [0u64; 10];
    let mut sums: [BigUint; 10] = Default::default();
    for x in 0..=n {
        for y in 0..=n - x {
            for z in 0..=n - x - y {
                let w = n - x - y - z;
                let coords = [x, y, z, w];
                let nonzero = coords.iter().filter(|&&c| c > 0).count();
                let class = match nonzero {
                    0 | 1 => One,
                    2 => A,
                    3 => C,
                    _ => F,
                };
                let value = coords
                    .iter()
                    .fold(factorial(n), |acc, &c| acc / factorial(c));
                counts[class.index()] += 1;
                sums[class.index()] += value;
            }
        }
    }
    (counts, sums)
}

#[test]
fn euclidean_mode_matches_lattice_enumeration() {
    let counts = census_levels(MosaicMode::Euclidean, 14).unwrap();
    let sums = value_sums_levels(MosaicMode::Euclidean, 14).unwrap();
    // Level 0 is the base vertex alone; the lattice walk would also call it a winger.
    for n in 1..=14u64 {
        let (want_counts, want_sums) = lattice_level(n);
        for class in VertexClass::ALL {
            assert_eq!(
                *counts[n as usize].count(class),
                BigUint::from(want_counts[class.index()]),
                "count of {class} at level {n}"
            );
            assert_eq!(
                *sums[n as usize].sum(class),
                want_sums[class.index()],
                "value sum of {class} at level {n}"
            );
        }
    }
}

#[test]
fn reference_values_at_levels_five_and_six() {
    use VertexClass::*;
    let c5 = census_at(MosaicMode::Hyperbolic, 5).unwrap();
    let expected: [u64; 10] = [54, 72, 36, 96, 156, 4, 6, 12, 94, 4];
    for class in VertexClass::ALL {
        assert_eq!(
            *c5.count(class),
            BigUint::from(expected[class.index()]),
            "{class}"
        );
    }
    assert_eq!(c5.total_vertices(), BigUint::from(534u32));
    let c6 = census_at(MosaicMode::Hyperbolic, 6).unwrap();
    assert_eq!(*c6.count(K), BigUint::from(12228u32));
    assert_eq!(*c6.count(H), BigUint::from(774u32));
    let v6 = value_sums_at(MosaicMode::Hyperbolic, 6).unwrap();
    assert_eq!(*v6.sum(K), BigUint::from(323592u32));
}

#[test]
fn euclidean_small_levels() {
    use VertexClass::*;
    let c3 = census_at(MosaicMode::Euclidean, 3).unwrap();
    assert_eq!(*c3.count(A), BigUint::from(12u32));
    assert_eq!(*c3.count(C), BigUint::from(4u32));
    assert_eq!(c3.total_vertices(), BigUint::from(20u32));
    let v3 = value_sums_at(MosaicMode::Euclidean, 3).unwrap();
    assert_eq!(v3.total(), BigUint::from(64u32));
}

fn agrees_with_matrix(mode: MosaicMode, quantity: Quantity, levels: u64) {
    let m = mode_coefficient_matrix(mode, quantity);
    let vectors: Vec<_> = match quantity {
        Quantity::Counts => census_levels(mode, levels)
            .unwrap()
            .iter()
            .map(|c| c.counts.to_rational())
            .collect(),
        Quantity::Values => value_sums_levels(mode, levels)
            .unwrap()
            .iter()
            .map(|v| v.sums.to_rational())
            .collect(),
    };
    // The first step out of the base vertex is special; the rules hold from level 1.
    for n in 1..levels as usize {
        let next = m.mul_vec(&vectors[n]).unwrap();
        assert_eq!(
            next,
            vectors[n + 1],
            "{mode} {quantity:?} level {n} -> {}",
            n + 1
        );
    }
}

#[test]
fn matrix_iteration_agrees_with_rules() {
    for mode in [MosaicMode::Hyperbolic, MosaicMode::Euclidean] {
        for quantity in [Quantity::Counts, Quantity::Values] {
            agrees_with_matrix(mode, quantity, 50);
        }
    }
}

#[test]
fn integral_to_level_1000_in_both_modes() {
    for mode in [MosaicMode::Hyperbolic, MosaicMode::Euclidean] {
        let c = census_at(mode, 1000).unwrap();
        assert_eq!(c.level, 1000);
        let v = value_sums_at(mode, 1000).unwrap();
        assert!(!v.total().is_zero());
    }
    let euclid = value_sums_at(MosaicMode::Euclidean, 1000).unwrap();
    assert_eq!(euclid.total(), BigUint::from(4u32).pow(1000));
}

#[test]
fn closure_violation_is_reported() {
    let mut c = census_at(MosaicMode::Euclidean, 2).unwrap();
    let mut raw = c.counts.as_slice().clone();
    raw[VertexClass::B.index()] = BigUint::one();
    c.counts = ClassVector::from_array(raw);
    assert!(matches!(advance_census(&c), Err(Error::Invariant(_))));
}
