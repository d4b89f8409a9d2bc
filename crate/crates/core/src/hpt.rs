//! Rows of the hyperbolic Pascal triangle on the square mosaic {4,q}.
//!
//! Row `n + 1` is built from row `n` left to right: a winger, then for every
//! consecutive parent pair one shared `A` child (value = sum of the pair),
//! followed by the `B` children of the right-hand parent (`q - 4` for an `A`
//! parent, `q - 3` for a `B` parent, none for a winger), then the closing
//! winger. At `q = 4` no `B` vertices appear and the rows are binomial.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HptClass {
    One,
    A,
    B,
}

/// Indices into the previous row; `A` entries have two parents, the rest one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parents {
    None,
    Single(usize),
    Pair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HptEntry {
    pub class: HptClass,
    pub value: BigUint,
    pub parents: Parents,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HptRow {
    pub q: u32,
    pub row_index: u64,
    pub entries: Vec<HptEntry>,
}

impl HptRow {
    /// Row 0: the single base vertex.
    pub fn first(q: u32) -> Result<Self> {
        if q < 4 {
            return Err(Error::Argument(format!("q must be at least 4, got {q}")));
        }
        Ok(Self {
            q,
            row_index: 0,
            entries: vec![HptEntry {
                class: HptClass::One,
                value: BigUint::one(),
                parents: Parents::None,
            }],
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> Vec<BigUint> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }

    pub fn classes(&self) -> Vec<HptClass> {
        self.entries.iter().map(|e| e.class).collect()
    }

    pub fn value_sum(&self) -> BigUint {
        self.entries.iter().map(|e| &e.value).sum()
    }

    fn b_children(&self, class: HptClass) -> u32 {
        match class {
            HptClass::One => 0,
            HptClass::A => self.q - 4,
            HptClass::B => self.q - 3,
        }
    }
}

fn winger(parent: usize) -> HptEntry {
    HptEntry {
        class: HptClass::One,
        value: BigUint::one(),
        parents: Parents::Single(parent),
    }
}

pub fn next_row(r: &HptRow) -> HptRow {
    let last = r.entries.len() - 1;
    let mut entries = vec![winger(0)];
    for (i, pair) in r.entries.windows(2).enumerate() {
        entries.push(HptEntry {
            class: HptClass::A,
            value: &pair[0].value + &pair[1].value,
            parents: Parents::Pair(i, i + 1),
        });
        let right = &pair[1];
        for _ in 0..r.b_children(right.class) {
            entries.push(HptEntry {
                class: HptClass::B,
                value: right.value.clone(),
                parents: Parents::Single(i + 1),
            });
        }
    }
    entries.push(winger(last));
    HptRow {
        q: r.q,
        row_index: r.row_index + 1,
        entries,
    }
}

/// Rows `0..=n` of the triangle {4,q}.
pub fn rows(q: u32, n: u64) -> Result<Vec<HptRow>> {
    let mut out = vec![HptRow::first(q)?];
    for _ in 0..n {
        let next = next_row(out.last().expect("nonempty"));
        out.push(next);
    }
    Ok(out)
}

pub fn row(q: u32, n: u64) -> Result<HptRow> {
    let mut r = HptRow::first(q)?;
    for _ in 0..n {
        r = next_row(&r);
    }
    Ok(r)
}

/// Per-class tallies of one row.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RowCensus {
    pub count_a: u64,
    pub count_b: u64,
    pub sum_a: BigUint,
    pub sum_b: BigUint,
    pub count_one: u64,
    pub sum_one: BigUint,
}

pub fn row_census(r: &HptRow) -> RowCensus {
    let mut c = RowCensus::default();
    for e in &r.entries {
        let (count, sum) = match e.class {
            HptClass::One => (&mut c.count_one, &mut c.sum_one),
            HptClass::A => (&mut c.count_a, &mut c.sum_a),
            HptClass::B => (&mut c.count_b, &mut c.sum_b),
        };
        *count += 1;
        *sum += &e.value;
    }
    c
}

fn node_style(class: HptClass) -> &'static str {
    match class {
        HptClass::One => "shape=circle, style=filled, fillcolor=gray",
        HptClass::A => "shape=box, style=filled, fillcolor=red",
        HptClass::B => "shape=diamond, style=filled, fillcolor=cyan",
    }
}

/// Layered digraph, one `rank=same` subgraph per row, edges parent → child.
pub fn rows_to_dot(rows: &[HptRow]) -> Result<String> {
    let Some(first) = rows.first() else {
        return Err(Error::Argument("no rows to render".into()));
    };
    for pair in rows.windows(2) {
        if pair[1].row_index != pair[0].row_index + 1 || pair[1].q != pair[0].q {
            return Err(Error::Argument(format!(
                "rows {} and {} are not consecutive rows of one triangle",
                pair[0].row_index, pair[1].row_index
            )));
        }
    }
    let mut out = String::new();
    writeln!(out, "digraph hpt_4_{} {{", first.q).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    for r in rows {
        writeln!(out, "  subgraph row_{} {{", r.row_index).unwrap();
        writeln!(out, "    rank=same;").unwrap();
        for (i, e) in r.entries.iter().enumerate() {
            writeln!(
                out,
                "    n{}_{} [label=\"{}\", {}];",
                r.row_index,
                i,
                e.value,
                node_style(e.class)
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for r in rows.iter().skip(1) {
        let p = r.row_index - 1;
        for (i, e) in r.entries.iter().enumerate() {
            let parents: &[usize] = match &e.parents {
                Parents::None => &[],
                Parents::Single(a) => std::slice::from_ref(a),
                Parents::Pair(a, b) => &[*a, *b],
            };
            for parent in parents {
                writeln!(out, "  n{p}_{parent} -> n{}_{i};", r.row_index).unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

/// Triangle rows as CSV: `row,position,class,value`.
pub fn rows_to_csv(rows: &[HptRow]) -> String {
    let mut out = String::from("row,position,class,value\n");
    for r in rows {
        for (i, e) in r.entries.iter().enumerate() {
            let class = match e.class {
                HptClass::One => "1",
                HptClass::A => "A",
                HptClass::B => "B",
            };
            writeln!(out, "{},{},{},{}", r.row_index, i, class, e.value).unwrap();
        }
    }
    out
}

impl HptRow {
    /// `true` if the values read the same reversed.
    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n / 2).all(|i| self.entries[i].value == self.entries[n - 1 - i].value)
    }

    /// Every A equals the sum of its two parents and every B or winger equals
    /// its single parent (wingers are 1).
    pub fn respects_parents(&self, parent_row: &HptRow) -> bool {
        self.entries.iter().all(|e| match (e.class, e.parents) {
            (HptClass::A, Parents::Pair(a, b)) => {
                e.value == &parent_row.entries[a].value + &parent_row.entries[b].value
            }
            (HptClass::B, Parents::Single(a)) => e.value == parent_row.entries[a].value,
            (HptClass::One, Parents::Single(_)) => e.value.is_one(),
            _ => false,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(r: &HptRow) -> Vec<u64> {
        r.entries
            .iter()
            .map(|e| u64::try_from(&e.value).unwrap())
            .collect()
    }

    #[test]
    fn q5_row_three() {
        let r = row(5, 3).unwrap();
        assert_eq!(vals(&r), [1, 3, 2, 3, 1]);
        use HptClass::*;
        assert_eq!(r.classes(), [One, A, B, A, One]);
    }

    #[test]
    fn q5_row_four() {
        let r = row(5, 4).unwrap();
        let c = row_census(&r);
        let a: Vec<u64> = r
            .entries
            .iter()
            .filter(|e| e.class == HptClass::A)
            .map(|e| u64::try_from(&e.value).unwrap())
            .collect();
        let b: Vec<u64> = r
            .entries
            .iter()
            .filter(|e| e.class == HptClass::B)
            .map(|e| u64::try_from(&e.value).unwrap())
            .collect();
        assert_eq!(a, [4, 5, 5, 4]);
        assert_eq!(b, [3, 2, 2, 3]);
        assert_eq!(c.sum_a, BigUint::from(18u32));
        assert_eq!(c.sum_b, BigUint::from(10u32));
    }

    #[test]
    fn q4_is_pascal() {
        assert_eq!(vals(&row(4, 4).unwrap()), [1, 4, 6, 4, 1]);
        let c = row_census(&row(4, 7).unwrap());
        assert_eq!((c.count_a, c.count_b), (6, 0));
    }

    #[test]
    fn small_q_is_rejected() {
        assert!(HptRow::first(3).is_err());
    }

    #[test]
    fn dot_rejects_gaps() {
        let rs = rows(5, 3).unwrap();
        assert!(rows_to_dot(&[rs[0].clone(), rs[2].clone()]).is_err());
        assert!(rows_to_dot(&[]).is_err());
    }

    #[test]
    fn dot_counts() {
        let rs = rows(5, 3).unwrap();
        let dot = rows_to_dot(&rs).unwrap();
        assert_eq!(dot.matches("label=").count(), 11);
        assert_eq!(dot.matches("->").count(), 13);
        let dot = rows_to_dot(&rows(5, 1).unwrap()).unwrap();
        assert_eq!(dot.matches("label=").count(), 3);
        assert_eq!(dot.matches("->").count(), 2);
    }

    #[test]
    fn csv_layout() {
        let csv = rows_to_csv(&rows(4, 1).unwrap());
        assert_eq!(csv, "row,position,class,value\n0,0,1,1\n1,0,1,1\n1,1,1,1\n");
    }
}
