use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use hyperbolic_pascal::census::{census_levels, MosaicMode, VertexClass};
use hyperbolic_pascal::exact_linear::{
    char_poly, isolate_dominant_root, min_poly, Matrix, SturmChain,
};
use hyperbolic_pascal::recurrence::{
    find_minimal_recurrence, verify_recurrence, RecurrenceCoeffs, Sequence,
};
use hyperbolic_pascal::{IntPolynomial, RationalMatrix, RationalPolynomial};

fn int_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..=20, 0..6).prop_map(|c| IntPolynomial::from_i64(&c))
}

fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |e| {
            Matrix::new(
                n,
                n,
                e.into_iter()
                    .map(|x| BigRational::from_integer(x.into()))
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

proptest! {
    #[test]
    fn multiplication_commutes(p in int_poly(), q in int_poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_associates(p in int_poly(), q in int_poly(), r in int_poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn division_reconstructs(p in int_poly(), q in int_poly()) {
        prop_assume!(!q.is_zero());
        let (p, q) = (p.to_rational(), q.to_rational());
        let (quot, rem) = p.div_rem(&q);
        prop_assert!(rem.is_zero() || rem.degree() < q.degree());
        prop_assert_eq!((&quot * &q) + rem, p);
    }

    #[test]
    fn minimal_divides_characteristic(m in small_matrix()) {
        let chi = char_poly(&m).unwrap();
        let mu = min_poly(&m).unwrap();
        prop_assert!(mu.is_monic());
        prop_assert!(mu.divides(&chi));
        prop_assert_eq!(chi.degree(), Some(m.rows()));
        // Cayley-Hamilton for mu, checked on every basis vector via Horner.
        let n = m.rows();
        for i in 0..n {
            let mut e = vec![BigRational::zero(); n];
            e[i] = rational(1, 1);
            let mut acc = vec![BigRational::zero(); n];
            for c in mu.coeffs().iter().rev() {
                acc = m.mul_vec(&acc).unwrap();
                for (a, b) in acc.iter_mut().zip(&e) {
                    *a += c * b;
                }
            }
            prop_assert!(acc.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn dominant_root_interval_brackets_one_root(
        roots in prop::collection::vec(-30i64..=30, 1..6),
        den in 1i64..=8,
    ) {
        let rs: Vec<BigRational> = roots.iter().map(|&r| rational(r, den)).collect();
        let p = RationalPolynomial::from_roots(&rs);
        let precision = rational(1, 1000);
        let iv = isolate_dominant_root(&p, &precision).unwrap();
        prop_assert!(iv.width() <= precision);
        let biggest = rs.iter().max().unwrap().clone();
        prop_assert!(iv.low < biggest && biggest <= iv.high);
        let sq = p.square_free();
        let chain = SturmChain::new(&sq);
        prop_assert_eq!(chain.count_roots(&iv.low, &iv.high), 1);
        let (lo, hi) = (sq.eval(&iv.low), sq.eval(&iv.high));
        prop_assert!(hi.is_zero() || lo.is_negative() != hi.is_negative());
    }

    #[test]
    fn berlekamp_massey_output_verifies(
        coeffs in prop::collection::vec(-3i64..=3, 1..5),
        init in prop::collection::vec(-5i64..=5, 5),
    ) {
        prop_assume!(*coeffs.last().unwrap() != 0);
        let rec = RecurrenceCoeffs::from_i64(&coeffs).unwrap();
        let d = coeffs.len();
        let seed = Sequence::from_integers(0, init[..d].iter().copied()).unwrap();
        let s = rec.extend(&seed, 2 * d + 4).unwrap();
        let found = find_minimal_recurrence(&s).unwrap();
        prop_assert!(found.order() <= d);
        if found.order() > 0 {
            prop_assert!(verify_recurrence(&s, &found).unwrap());
        }
        prop_assert!(found.characteristic_polynomial().divides(&rec.characteristic_polynomial()));
    }
}

#[test]
fn face_class_recurrence_from_a_long_prefix() {
    let levels = census_levels(MosaicMode::Hyperbolic, 15).unwrap();
    let e: Vec<_> = levels[4..]
        .iter()
        .map(|c| c.count(VertexClass::E).clone())
        .collect();
    let s = Sequence::from_biguints(4, &e).unwrap();
    let found = find_minimal_recurrence(&s).unwrap();
    let stated = RecurrenceCoeffs::from_i64(&[12, -37, 37, -12, 1]).unwrap();
    assert_eq!(found.order(), 5);
    assert_eq!(
        found.characteristic_polynomial(),
        stated.characteristic_polynomial()
    );
    assert!(verify_recurrence(&s, &stated).unwrap());
}

#[test]
fn fibonacci_is_found_exactly() {
    let s = Sequence::from_integers(0, [0i64, 1, 1, 2, 3, 5, 8, 13, 21, 34]).unwrap();
    let r = find_minimal_recurrence(&s).unwrap();
    assert_eq!(r.coefficients(), &[rational(1, 1), rational(1, 1)]);
}
