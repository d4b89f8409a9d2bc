//! Checks behind `hps verify`: reference tables, recurrences, polynomials,
//! growth ratios and vertex-figure classifications.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::census::{
    census_levels, coefficient_matrix, growth_numerator, reduced_coefficient_matrix,
    value_sums_levels, Block, MosaicMode, Quantity, VertexClass,
};
use crate::error::Result;
use crate::exact_linear::{char_poly, isolate_dominant_root, min_poly, poly_product};
use crate::hpt::{self, row_census};
use crate::recurrence::{find_minimal_recurrence, verify_recurrence, RecurrenceCoeffs, Sequence};
use crate::vertex_figure::{
    build_polytope, classify_all, incidence_stats, ClassificationCounts, PolytopeName,
};
use crate::{IntPolynomial, RationalPolynomial, RationalRootInterval};

/// Vertex counts per class on levels 0..=10 of the hyperbolic simplex; rows
/// `a, b, c, d, e, f, g, h, k, v, s`.
pub const COUNT_TABLE: [[u64; 11]; 11] = [
    [0, 0, 6, 12, 24, 54, 132, 336, 870, 2268, 5928],
    [0, 0, 0, 6, 24, 72, 198, 528, 1392, 3654, 9576],
    [0, 0, 0, 4, 12, 36, 136, 696, 4512, 33004, 253260],
    [0, 0, 0, 0, 12, 96, 708, 5388, 41868, 328116, 2579232],
    [0, 0, 0, 0, 12, 156, 1428, 11808, 94488, 747936, 5899092],
    [0, 0, 0, 0, 1, 4, 16, 86, 1111, 70970, 7610192],
    [0, 0, 0, 0, 0, 6, 72, 1702, 137462, 15061942, 1694955086],
    [
        0,
        0,
        0,
        0,
        0,
        12,
        774,
        79254,
        8862504,
        998747934,
        112617248352,
    ],
    [
        0,
        0,
        0,
        0,
        0,
        94,
        12228,
        1395058,
        157449038,
        17755598218,
        2002190230214,
    ],
    [1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4],
    [
        1,
        4,
        10,
        26,
        89,
        534,
        15696,
        1494860,
        166593249,
        18770594046,
        2116518790936,
    ],
];

/// Per-class value sums on levels 0..=10; same row order as [`COUNT_TABLE`].
pub const VALUE_TABLE: [[u64; 11]; 11] = [
    [0, 0, 12, 36, 108, 348, 1164, 3948, 13452, 45900, 156684],
    [0, 0, 0, 12, 60, 228, 804, 2772, 9492, 32436, 110772],
    [
        0, 0, 0, 24, 144, 840, 5808, 48552, 458736, 4588008, 46916592,
    ],
    [
        0, 0, 0, 0, 96, 1296, 14400, 152592, 1592448, 16530384, 171272832,
    ],
    [
        0, 0, 0, 0, 72, 1248, 15192, 166176, 1753080, 18264480, 189472440,
    ],
    [
        0, 0, 0, 0, 24, 240, 2280, 26880, 667944, 51411168, 5797305000,
    ],
    [
        0,
        0,
        0,
        0,
        0,
        240,
        5976,
        255936,
        24140328,
        2793536160,
        331243298952,
    ],
    [
        0,
        0,
        0,
        0,
        0,
        360,
        38400,
        4458168,
        528618816,
        62831416920,
        7469847072960,
    ],
    [
        0,
        0,
        0,
        0,
        0,
        2256,
        323592,
        39296736,
        4682378232,
        556809369792,
        66200381333976,
    ],
    [1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4],
    [
        1,
        4,
        16,
        76,
        508,
        7060,
        407620,
        44411764,
        5239632532,
        622525195252,
        74007676940212,
    ],
];

/// Minimal polynomial of the counts matrix, ascending coefficients.
pub const COUNTS_MIN_POLY: [i64; 10] = [-1, 128, -1795, 8837, -19239, 19239, -8837, 1795, -128, 1];

/// Characteristic (= minimal) polynomial of the values matrix.
pub const VALUES_CHAR_POLY: [i64; 11] = [
    288, -19344, 151320, -438532, 608920, -445156, 175292, -36277, 3635, -147, 1,
];

/// Irreducible factors of [`COUNTS_MIN_POLY`].
pub const COUNTS_FACTORS: [&[i64]; 4] =
    [&[-1, 1], &[1, -3, 1], &[1, -8, 1], &[1, -116, 366, -116, 1]];

/// Irreducible factors of [`VALUES_CHAR_POLY`].
pub const VALUES_FACTORS: [&[i64]; 4] = [
    &[-1, 1],
    &[2, -4, 1],
    &[-6, 28, -13, 1],
    &[24, -1428, 1214, -129, 1],
];

/// Recurrence coefficients `c_1..c_d` with the first index they hold from.
pub struct StatedRecurrence {
    pub name: &'static str,
    pub coefficients: &'static [i64],
    pub from_index: i64,
}

pub const COUNTS_ORDER_9: StatedRecurrence = StatedRecurrence {
    name: "order 9",
    coefficients: &[128, -1795, 8837, -19239, 19239, -8837, 1795, -128, 1],
    from_index: 10,
};
pub const COUNTS_ORDER_5: StatedRecurrence = StatedRecurrence {
    name: "order 5",
    coefficients: &[12, -37, 37, -12, 1],
    from_index: 6,
};
pub const COUNTS_ORDER_3: StatedRecurrence = StatedRecurrence {
    name: "order 3",
    coefficients: &[4, -4, 1],
    from_index: 4,
};
pub const VALUES_ORDER_10: StatedRecurrence = StatedRecurrence {
    name: "order 10",
    coefficients: &[
        147, -3635, 36277, -175292, 445156, -608920, 438532, -151320, 19344, -288,
    ],
    from_index: 11,
};
pub const VALUES_ORDER_6: StatedRecurrence = StatedRecurrence {
    name: "order 6",
    coefficients: &[18, -99, 226, -224, 92, -12],
    from_index: 7,
};
pub const VALUES_ORDER_3: StatedRecurrence = StatedRecurrence {
    name: "order 3",
    coefficients: &[5, -6, 2],
    from_index: 4,
};

impl StatedRecurrence {
    pub fn coeffs(&self) -> RecurrenceCoeffs {
        RecurrenceCoeffs::from_i64(self.coefficients).expect("stated recurrences are valid")
    }
}

/// Expected growth ratios and the half-widths they are checked at.
pub const COUNTS_GROWTH: (&str, &str) = ("112.763", "0.0005");
pub const VALUES_GROWTH: (&str, &str) = ("118.89", "0.005");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn push(
        &mut self,
        name: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> bool {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
        pass
    }

    /// A check whose pass condition is not plain string equality.
    pub fn push_with(
        &mut self,
        name: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) -> bool {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
        pass
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{}: expected {}, actual {} ... {}",
                c.name,
                c.expected,
                c.actual,
                if c.pass { "pass" } else { "FAIL" }
            )?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        writeln!(
            f,
            "overall: {} ({passed}/{} checks passed)",
            if self.passed() { "pass" } else { "FAIL" },
            self.checks.len()
        )
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Row label used in table checks (`s` for the level total).
fn row_label(row: usize, hatted: bool) -> String {
    let base = VertexClass::ALL.get(row).map_or("s", |c| c.label());
    if hatted {
        format!("{base}^")
    } else {
        base.to_string()
    }
}

/// Per-level columns for `quantity` in `mode`: one vector of 11 entries
/// (`a..k, v, total`) per level `0..=n`.
pub fn table_columns(mode: MosaicMode, quantity: Quantity, n: u64) -> Result<Vec<Vec<BigUint>>> {
    let columns = match quantity {
        Quantity::Counts => census_levels(mode, n)?
            .into_iter()
            .map(|c| {
                let mut col = c.counts.as_slice().to_vec();
                col.push(c.total_vertices());
                col
            })
            .collect(),
        Quantity::Values => value_sums_levels(mode, n)?
            .into_iter()
            .map(|v| {
                let mut col = v.sums.as_slice().to_vec();
                col.push(v.total());
                col
            })
            .collect(),
    };
    Ok(columns)
}

/// Per-row sequences `(label, terms for levels 0..=n)`, built from [`table_columns`].
pub fn table_rows(mode: MosaicMode, quantity: Quantity, n: u64) -> Result<Vec<Vec<BigUint>>> {
    let cols = table_columns(mode, quantity, n)?;
    Ok((0..11)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect())
}

fn table_check(report: &mut VerificationReport, quantity: Quantity) -> Result<()> {
    let (table, title, hatted) = match quantity {
        Quantity::Counts => (&COUNT_TABLE, "vertex count table", false),
        Quantity::Values => (&VALUE_TABLE, "value sum table", true),
    };
    let rows = table_rows(MosaicMode::Hyperbolic, quantity, 10)?;
    for (r, expected) in table.iter().enumerate() {
        report.push(
            format!("{title} row {}", row_label(r, hatted)),
            join(expected),
            join(&rows[r]),
        );
    }
    Ok(())
}

/// Euclidean restriction: zero classes stay zero, value totals are `4^n`,
/// vertex totals are `binomial(n+3, 3)`.
pub fn euclidean_checks(max_level: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let counts = census_levels(MosaicMode::Euclidean, max_level)?;
    let values = value_sums_levels(MosaicMode::Euclidean, max_level)?;
    let absent: Vec<VertexClass> = VertexClass::ALL
        .into_iter()
        .filter(|c| !MosaicMode::Euclidean.has_class(*c))
        .collect();
    let mut zero_ok = true;
    for (c, v) in counts.iter().zip(&values) {
        zero_ok &= absent
            .iter()
            .all(|&k| c.count(k) == &BigUint::ZERO && v.sum(k) == &BigUint::ZERO);
    }
    report.push(
        format!("euclidean levels 0..={max_level}: classes b,d,e,g,h,k"),
        "all zero",
        if zero_ok {
            "all zero"
        } else {
            "nonzero entries"
        },
    );
    report.push(
        format!("euclidean value totals, levels 0..={max_level}"),
        join((0..=max_level).map(|n| BigUint::from(4u32).pow(n as u32))),
        join(values.iter().map(|v| v.total())),
    );
    report.push(
        format!("euclidean vertex totals binomial(n+3,3), levels 0..={max_level}"),
        join((0..=max_level).map(|n| binomial(BigUint::from(n + 3), BigUint::from(3u32)))),
        join(counts.iter().map(|c| c.total_vertices())),
    );
    let triangular: Vec<u64> = (0..=max_level).map(|n| (n + 1) * (n + 2) / 2).collect();
    let matches_triangular = counts
        .iter()
        .zip(&triangular)
        .filter(|(c, t)| c.total_vertices() == BigUint::from(**t))
        .count();
    report.note(format!(
        "the triangular count (n+1)(n+2)/2 agrees with the Euclidean level totals on only \
         {matches_triangular} of {} levels; those totals are binomial(n+3,3), the triangular \
         count describes a level of the Pascal pyramid",
        max_level + 1
    ));
    Ok(report)
}

/// Six times the per-row A/B tallies of the {4,5} triangle equal the A/B
/// censuses for `2 <= n <= max_level`; {4,4} rows are binomial.
pub fn hpt_checks(max_level: u64, pascal_rows: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let counts = census_levels(MosaicMode::Hyperbolic, max_level)?;
    let values = value_sums_levels(MosaicMode::Hyperbolic, max_level)?;
    let rows = hpt::rows(5, max_level)?;
    let six = BigUint::from(6u32);
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for n in 2..=max_level as usize {
        let rc = row_census(&rows[n]);
        expected.push(format!(
            "({},{},{},{})",
            counts[n].count(VertexClass::A),
            counts[n].count(VertexClass::B),
            values[n].sum(VertexClass::A),
            values[n].sum(VertexClass::B)
        ));
        actual.push(format!(
            "({},{},{},{})",
            BigUint::from(rc.count_a) * &six,
            BigUint::from(rc.count_b) * &six,
            &rc.sum_a * &six,
            &rc.sum_b * &six
        ));
    }
    report.push(
        format!("{{4,5}} rows 2..={max_level}: 6x(#A,#B,sum A,sum B) vs (a,b,a^,b^)"),
        expected.join(" "),
        actual.join(" "),
    );
    let pascal = hpt::rows(4, pascal_rows)?;
    let binomial_ok = pascal.iter().all(|r| {
        let n = r.row_index;
        r.values()
            .iter()
            .enumerate()
            .all(|(k, v)| *v == binomial(BigUint::from(n), BigUint::from(k as u64)))
            && r.len() as u64 == n + 1
    });
    report.push(
        format!("{{4,4}} rows 0..={pascal_rows} are binomial coefficients"),
        true,
        binomial_ok,
    );
    report.push(
        format!("{{4,4}} row sums 0..={pascal_rows}"),
        join((0..=pascal_rows).map(|n| BigUint::from(2u32).pow(n as u32))),
        join(pascal.iter().map(|r| r.value_sum())),
    );
    Ok(report)
}

/// Both reference tables, the Euclidean restriction and the triangle cross-check.
pub fn verify_tables() -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    table_check(&mut report, Quantity::Counts)?;
    table_check(&mut report, Quantity::Values)?;
    report.extend(euclidean_checks(15)?);
    report.extend(hpt_checks(10, 20)?);
    Ok(report)
}

fn int_poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn integral(p: &RationalPolynomial) -> String {
    p.to_integer()
        .map_or_else(|| format!("non-integral {p}"), |q| q.to_string())
}

/// Recurrence-and-factor checks for one of the two matrices.
pub fn polynomial_checks(quantity: Quantity) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let m = coefficient_matrix(quantity);
    let minimal = min_poly(&m)?;
    let characteristic = char_poly(&m)?;
    let (label, stated, factors) = match quantity {
        Quantity::Counts => ("counts", int_poly(&COUNTS_MIN_POLY), &COUNTS_FACTORS),
        Quantity::Values => ("values", int_poly(&VALUES_CHAR_POLY), &VALUES_FACTORS),
    };
    report.push(
        format!("{label} matrix minimal polynomial"),
        &stated,
        integral(&minimal),
    );
    let product = poly_product(&factors.iter().map(|f| int_poly(f)).collect::<Vec<_>>());
    report.push(
        format!("{label} printed factors expand to"),
        &stated,
        &product,
    );
    match quantity {
        Quantity::Counts => {
            let (quotient, remainder) = characteristic.div_rem(&stated.to_rational());
            let linear_integral = remainder.is_zero()
                && quotient.degree() == Some(1)
                && quotient.to_integer().is_some();
            report.push_with(
                "counts characteristic polynomial / minimal polynomial",
                "integer linear factor",
                format!("{} (remainder {remainder})", integral(&quotient)),
                linear_integral,
            );
        }
        Quantity::Values => {
            report.push(
                "values matrix characteristic polynomial",
                &stated,
                integral(&characteristic),
            );
        }
    }
    let (face, edge) = match quantity {
        Quantity::Counts => (&COUNTS_ORDER_5, &COUNTS_ORDER_3),
        Quantity::Values => (&VALUES_ORDER_6, &VALUES_ORDER_3),
    };
    let face = integral(&face.coeffs().characteristic_polynomial());
    let edge = integral(&edge.coeffs().characteristic_polynomial());
    let face_block = reduced_coefficient_matrix(Block::Faces, quantity);
    let edge_block = reduced_coefficient_matrix(Block::Edges, quantity);
    report.push(
        format!("{label} {{a..e,v}} block minimal polynomial"),
        &face,
        integral(&min_poly(&face_block)?),
    );
    report.push(
        format!("{label} {{a,b,v}} block minimal polynomial"),
        &edge,
        integral(&min_poly(&edge_block)?),
    );
    Ok(report)
}

/// The dominant-root interval for `quantity`'s quartic at `precision`.
pub fn growth_root(quantity: Quantity, precision: &BigRational) -> Result<RationalRootInterval> {
    let quartic = match quantity {
        Quantity::Counts => COUNTS_FACTORS[3],
        Quantity::Values => VALUES_FACTORS[3],
    };
    isolate_dominant_root(&int_poly(quartic).to_rational(), precision)
}

pub(crate) fn parse_decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32))
}

/// Dominant roots against the stated ratios, and level-25/level-24 total
/// ratios against the isolated roots.
pub fn growth_checks() -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let precision = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(9)));
    let margin = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(6)));
    for (quantity, (value, tol), label) in [
        (Quantity::Counts, COUNTS_GROWTH, "vertex"),
        (Quantity::Values, VALUES_GROWTH, "value"),
    ] {
        let root = growth_root(quantity, &precision)?;
        let target = parse_decimal(value);
        let tol_q = parse_decimal(tol);
        let inside = (&root.low - &target).abs_le(&tol_q) && (&root.high - &target).abs_le(&tol_q);
        report.push_with(
            format!("{label} growth ratio (dominant root)"),
            format!("{value} +- {tol}"),
            format!(
                "{} in ({}, {})",
                root.midpoint_decimal(9),
                root.low,
                root.high
            ),
            inside,
        );
        let totals = &table_rows(MosaicMode::Hyperbolic, quantity, 25)?[10];
        let ratio = BigRational::new(
            BigInt::from(totals[25].clone()),
            BigInt::from(totals[24].clone()),
        );
        let widened = root.widen(&margin);
        report.push_with(
            format!("{label} total ratio level 25 / level 24"),
            format!("within 1e-6 of {}", root.midpoint_decimal(9)),
            crate::exact_linear::to_decimal(&ratio, 12),
            widened.contains(&ratio),
        );
    }
    Ok(report)
}

trait AbsLe {
    fn abs_le(&self, bound: &Self) -> bool;
}

impl AbsLe for BigRational {
    fn abs_le(&self, bound: &Self) -> bool {
        use num_traits::Signed;
        self.abs() <= *bound
    }
}

pub fn verify_polynomials() -> Result<VerificationReport> {
    let mut report = polynomial_checks(Quantity::Counts)?;
    report.extend(polynomial_checks(Quantity::Values)?);
    report.extend(growth_checks()?);
    Ok(report)
}

/// Which stated recurrences each table row must satisfy.
fn stated_for(quantity: Quantity, row: usize) -> Vec<&'static StatedRecurrence> {
    let (full, face, edge) = match quantity {
        Quantity::Counts => (&COUNTS_ORDER_9, &COUNTS_ORDER_5, &COUNTS_ORDER_3),
        Quantity::Values => (&VALUES_ORDER_10, &VALUES_ORDER_6, &VALUES_ORDER_3),
    };
    match row {
        0 | 1 => vec![full, face, edge],
        2..=4 => vec![full, face],
        _ => vec![full],
    }
}

/// Every row sequence up to `max_level` satisfies its stated recurrences from
/// the stated first index. Berlekamp–Massey then runs on each sequence with at
/// least `2·order + 2` nonzero terms (extending past `max_level` for rows that
/// start late) and must find a recurrence whose characteristic polynomial
/// divides the most specific stated one.
pub fn recurrence_checks(quantity: Quantity, max_level: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let longest = match quantity {
        Quantity::Counts => COUNTS_ORDER_9.coefficients.len(),
        Quantity::Values => VALUES_ORDER_10.coefficients.len(),
    } as u64;
    // Every row is nonzero from level 5 on.
    let fit_level = max_level.max(4 + 2 * longest + 2);
    let rows = table_rows(MosaicMode::Hyperbolic, quantity, fit_level)?;
    let hatted = quantity == Quantity::Values;
    for (r, terms) in rows.iter().enumerate() {
        let label = row_label(r, hatted);
        let full = Sequence::from_biguints(0, &terms[..=max_level as usize])?;
        let stated = stated_for(quantity, r);
        for rec in &stated {
            let window = full.from_index(rec.from_index - rec.coefficients.len() as i64)?;
            let ok = verify_recurrence(&window, &rec.coeffs())?;
            report.push(
                format!(
                    "{label}_n, n = {}..={max_level}: {} recurrence",
                    rec.from_index, rec.name
                ),
                true,
                ok,
            );
        }
        let target = stated.last().expect("at least one stated recurrence");
        let first_nonzero = terms.iter().position(|t| *t != BigUint::ZERO).unwrap_or(0) as u64;
        let last = max_level.max(first_nonzero + 2 * target.coefficients.len() as u64 + 1);
        let prefix = Sequence::from_biguints(1, &terms[1..=last as usize])?;
        let found = find_minimal_recurrence(&prefix)?;
        let target_poly = target.coeffs().characteristic_polynomial();
        let found_poly = found.characteristic_polynomial();
        report.push_with(
            format!(
                "{label}_n, n = 1..={last}: minimal recurrence (order {})",
                found.order()
            ),
            format!("divides {}", integral(&target_poly)),
            integral(&found_poly),
            found_poly.divides(&target_poly),
        );
    }
    Ok(report)
}

pub fn verify_recurrences() -> Result<VerificationReport> {
    let mut report = recurrence_checks(Quantity::Counts, 20)?;
    report.extend(recurrence_checks(Quantity::Values, 20)?);
    Ok(report)
}

/// Expected classification for each seed size, from the vertex-figure argument.
pub fn expected_classification(name: PolytopeName, seed_size: usize) -> ClassificationCounts {
    use VertexClass::*;
    let counts: &[(VertexClass, usize)] = match (name, seed_size) {
        (PolytopeName::SixHundredCell, 1) => &[(H, 12), (K, 107)],
        (PolytopeName::SixHundredCell, 2) => &[(G, 5), (H, 12), (K, 101)],
        (PolytopeName::SixHundredCell, 3) => &[(F, 2), (G, 6), (H, 12), (K, 97)],
        (PolytopeName::SixHundredCell, 4) => &[(F, 4), (G, 6), (H, 12), (K, 94)],
        (PolytopeName::Icosahedron, 1) => &[(D, 5), (E, 6)],
        (PolytopeName::Icosahedron, 2) => &[(C, 2), (D, 4), (E, 4)],
        (PolytopeName::Icosahedron, 3) => &[(C, 3), (D, 3), (E, 3)],
        _ => &[],
    };
    ClassificationCounts::new(seed_size, counts)
}

/// The class whose vertices see `seed_size` parents in the vertex figure.
fn parent_class(name: PolytopeName, seed_size: usize) -> VertexClass {
    use VertexClass::*;
    match (name, seed_size) {
        (PolytopeName::SixHundredCell, 1) => K,
        (PolytopeName::SixHundredCell, 2) => H,
        (PolytopeName::SixHundredCell, 3) => G,
        (PolytopeName::SixHundredCell, 4) => F,
        (PolytopeName::Icosahedron, 1) => E,
        (PolytopeName::Icosahedron, 2) => D,
        _ => C,
    }
}

/// Children of each class read from the growth-rule column of the parent class.
fn growth_rule_children(name: PolytopeName, seed_size: usize) -> ClassificationCounts {
    use VertexClass::*;
    let parent = parent_class(name, seed_size);
    let children: &[VertexClass] = match name {
        PolytopeName::SixHundredCell => &[F, G, H, K],
        PolytopeName::Icosahedron => &[C, D, E],
    };
    let counts: Vec<(VertexClass, usize)> = children
        .iter()
        .map(|&c| (c, growth_numerator(c, parent) as usize))
        .collect();
    ClassificationCounts::new(seed_size, &counts)
}

pub fn classification_checks(name: PolytopeName) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let p = build_polytope(name);
    let stats = incidence_stats(&p);
    match name {
        PolytopeName::SixHundredCell => {
            report.push(
                "600-cell V/E/F/C",
                "120/720/1200/600",
                format!(
                    "{}/{}/{}/{}",
                    stats.vertices, stats.edges, stats.triangles, stats.tetrahedra
                ),
            );
            report.push(
                "600-cell per vertex edges/faces/cells",
                "12/30/20",
                format!(
                    "{:?}/{:?}/{:?}",
                    stats.edges_per_vertex, stats.triangles_per_vertex, stats.tetrahedra_per_vertex
                )
                .replace("Some(", "")
                .replace(')', ""),
            );
            report.push(
                "600-cell per edge faces/cells",
                "5/5",
                format!(
                    "{:?}/{:?}",
                    stats.triangles_per_edge, stats.tetrahedra_per_edge
                )
                .replace("Some(", "")
                .replace(')', ""),
            );
            report.push(
                "600-cell cells per face",
                "2",
                stats
                    .tetrahedra_per_triangle
                    .map_or("irregular".into(), |x| x.to_string()),
            );
            report.push(
                "600-cell vertex neighbourhoods induce icosahedra",
                true,
                p.neighbors_form_icosahedra(),
            );
        }
        PolytopeName::Icosahedron => {
            report.push(
                "icosahedron V/E/F",
                "12/30/20",
                format!("{}/{}/{}", stats.vertices, stats.edges, stats.triangles),
            );
            report.push(
                "icosahedron faces per edge",
                "2",
                stats
                    .triangles_per_edge
                    .map_or("irregular".into(), |x| x.to_string()),
            );
        }
    }
    for m in 1..=name.max_seed() {
        let all = classify_all(&p, m)?;
        let expected = expected_classification(name, m);
        let actual = match all.uniform() {
            Some(c) => c.to_string(),
            None => format!(
                "non-uniform: {}",
                all.outcomes
                    .iter()
                    .map(|(k, (_, n))| format!("{k} x{n}"))
                    .collect::<Vec<_>>()
                    .join("; ")
            ),
        };
        report.push(
            format!("{name} m={m} ({} cliques)", all.cliques),
            &expected,
            actual,
        );
        report.push(
            format!(
                "{name} m={m} matches growth-rule column {}",
                parent_class(name, m)
            ),
            &expected,
            growth_rule_children(name, m),
        );
        report.push(
            format!("{name} m={m} seed + classified vertices"),
            p.vertex_count(),
            all.outcomes
                .values()
                .map(|(c, _)| c.accounted_vertices().to_string())
                .collect::<Vec<_>>()
                .join("|"),
        );
    }
    Ok(report)
}

pub fn verify_classification() -> Result<VerificationReport> {
    let mut report = classification_checks(PolytopeName::Icosahedron)?;
    report.extend(classification_checks(PolytopeName::SixHundredCell)?);
    Ok(report)
}

pub fn verify_all() -> Result<VerificationReport> {
    let mut report = verify_tables()?;
    report.extend(verify_recurrences()?);
    report.extend(verify_polynomials()?);
    report.extend(verify_classification()?);
    Ok(report)
}
