//! `hps` command-line front end.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 usage error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Number, Value};

use crate::census::{coefficient_matrix, MosaicMode, Quantity, VertexClass};
use crate::error::{Error, Result};
use crate::exact_linear::{char_poly, isolate_dominant_root, min_poly, poly_product};
use crate::hpt;
use crate::verify::{self, table_columns, VerificationReport};
use crate::vertex_figure::{build_polytope, classify_all, incidence_stats, PolytopeName};
use crate::IntPolynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default cap on explicit triangle rows.
pub const DEFAULT_MAX_ROWS: u64 = 18;

#[derive(Debug, Parser)]
#[command(
    name = "hps",
    version,
    about = "Exact censuses, recurrences and vertex-figure checks for the hyperbolic Pascal simplex {4,3,3,5}"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex counts per class, one row per level.
    Census(TableArgs),
    /// Sums of vertex values per class, one row per level.
    Sums(TableArgs),
    /// Run a group of checks and print a report.
    Verify {
        #[arg(value_enum, default_value_t = VerifyGroup::All)]
        group: VerifyGroup,
    },
    /// Minimal and characteristic polynomials and the growth ratio.
    Spectral {
        #[arg(long, value_enum, default_value_t = KindArg::Counts)]
        kind: KindArg,
        /// Width of the root interval: decimal (0.0001), exponent (1e-4) or fraction (1/10000).
        #[arg(long, default_value = "1e-6")]
        precision: String,
    },
    /// Rows of the hyperbolic Pascal triangle {4,q}.
    Hpt {
        #[arg(long, default_value_t = 5)]
        q: u32,
        /// Last row index to emit.
        #[arg(long)]
        rows: u64,
        #[arg(long, value_enum, default_value_t = HptFormat::Csv)]
        format: HptFormat,
        /// Refuse to build more rows than this (row sizes grow exponentially for q > 4).
        #[arg(long, default_value_t = DEFAULT_MAX_ROWS)]
        max_rows: u64,
    },
    /// Icosahedron / 600-cell facts.
    Polytope {
        #[arg(long, value_enum)]
        name: PolytopeArg,
        #[arg(long, value_enum, default_value_t = EmitArg::Stats)]
        emit: EmitArg,
    },
}

#[derive(Debug, clap::Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Hyperbolic)]
    pub mode: ModeArg,
    /// Last level to emit.
    #[arg(long)]
    pub levels: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Hyperbolic,
    Euclidean,
}

impl From<ModeArg> for MosaicMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Hyperbolic => MosaicMode::Hyperbolic,
            ModeArg::Euclidean => MosaicMode::Euclidean,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HptFormat {
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyGroup {
    Tables,
    Recurrences,
    Polynomials,
    Classification,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Counts,
    Values,
}

impl From<KindArg> for Quantity {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Counts => Quantity::Counts,
            KindArg::Values => Quantity::Values,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolytopeArg {
    Icosahedron,
    #[value(name = "600-cell")]
    SixHundredCell,
}

impl From<PolytopeArg> for PolytopeName {
    fn from(p: PolytopeArg) -> Self {
        match p {
            PolytopeArg::Icosahedron => PolytopeName::Icosahedron,
            PolytopeArg::SixHundredCell => PolytopeName::SixHundredCell,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitArg {
    Stats,
    Adjacency,
    Classification,
}

/// Parses `0.001`, `1e-3`, `1/1000` or an integer into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a number: {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}0")
        .parse::<BigInt>()
        .map_err(|_| bad())?
        / 10;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10u32);
    let mut value = BigRational::from_integer(digits);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if negative { -value } else { value })
}

/// CSV/JSON column names: `a..k, v, s`, hatted with a caret for value sums.
pub fn table_header(quantity: Quantity) -> Vec<String> {
    let hat = if quantity == Quantity::Values {
        "^"
    } else {
        ""
    };
    let mut cols = vec!["level".to_string()];
    cols.extend(
        VertexClass::ALL
            .iter()
            .map(|c| format!("{}{hat}", c.label())),
    );
    cols.push(format!("s{hat}"));
    cols
}

fn render_table(
    quantity: Quantity,
    mode: MosaicMode,
    levels: u64,
    format: OutputFormat,
) -> Result<String> {
    let columns = table_columns(mode, quantity, levels)?;
    let header = table_header(quantity);
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str(&header.join(","));
            out.push('\n');
            for (level, col) in columns.iter().enumerate() {
                let fields: Vec<String> = std::iter::once(level.to_string())
                    .chain(col.iter().map(BigUint::to_string))
                    .collect();
                out.push_str(&fields.join(","));
                out.push('\n');
            }
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = columns
                .iter()
                .enumerate()
                .map(|(level, col)| {
                    let mut obj = Map::new();
                    obj.insert(header[0].clone(), Value::Number(Number::from(level as u64)));
                    for (name, x) in header[1..].iter().zip(col) {
                        obj.insert(name.clone(), exact_number(x));
                    }
                    Value::Object(obj)
                })
                .collect();
            let doc = serde_json::json!({
                "mode": mode.to_string(),
                "quantity": match quantity { Quantity::Counts => "counts", Quantity::Values => "values" },
                "rows": rows,
            });
            out.push_str(&serde_json::to_string_pretty(&doc).expect("json serialization"));
            out.push('\n');
        }
        OutputFormat::Text => {
            let cells: Vec<Vec<String>> = columns
                .iter()
                .enumerate()
                .map(|(level, col)| {
                    std::iter::once(level.to_string())
                        .chain(col.iter().map(BigUint::to_string))
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].len())
                        .chain([header[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |row: &[String]| {
                row.iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            out.push_str(&line(&header));
            out.push('\n');
            for r in &cells {
                out.push_str(&line(r));
                out.push('\n');
            }
        }
    }
    Ok(out)
}

/// Integer as a plain JSON number token, however large.
fn exact_number(x: &BigUint) -> Value {
    Value::Number(
        x.to_string()
            .parse()
            .expect("decimal digits form a JSON number"),
    )
}

fn render_spectral(quantity: Quantity, precision: &BigRational) -> Result<String> {
    if !precision.is_positive() {
        return Err(Error::NonPositivePrecision);
    }
    let m = coefficient_matrix(quantity);
    let minimal = min_poly(&m)?;
    let characteristic = char_poly(&m)?;
    let show = |p: &crate::RationalPolynomial| {
        p.to_integer()
            .map_or_else(|| p.to_string(), |q: IntPolynomial| q.to_string())
    };
    let (stated, factors) = match quantity {
        Quantity::Counts => (&verify::COUNTS_MIN_POLY[..], &verify::COUNTS_FACTORS),
        Quantity::Values => (&verify::VALUES_CHAR_POLY[..], &verify::VALUES_FACTORS),
    };
    let factor_polys: Vec<IntPolynomial> =
        factors.iter().map(|f| IntPolynomial::from_i64(f)).collect();
    let product = poly_product(&factor_polys);
    let stated = IntPolynomial::from_i64(stated);
    let factored: Vec<String> = factor_polys.iter().map(|f| format!("({f})")).collect();
    let root = isolate_dominant_root(&minimal, precision)?;
    let digits = decimal_digits(precision);
    let (quotient, remainder) = characteristic.div_rem(&minimal);

    let mut out = String::new();
    let kind = match quantity {
        Quantity::Counts => "counts",
        Quantity::Values => "values",
    };
    out.push_str(&format!("matrix: {kind} (order a,b,c,d,e,f,g,h,k,v)\n"));
    out.push_str(&format!("minimal polynomial: {}\n", show(&minimal)));
    out.push_str(&format!(
        "characteristic polynomial: {}\n",
        show(&characteristic)
    ));
    out.push_str(&format!(
        "characteristic / minimal: {}{}\n",
        show(&quotient),
        if remainder.is_zero() {
            ""
        } else {
            " (inexact)"
        }
    ));
    out.push_str(&format!("factorization: {}\n", factored.join("")));
    let matches = minimal.to_integer().as_ref() == Some(&stated) && product == stated;
    out.push_str(&format!(
        "factorization check: {}\n",
        if matches { "pass" } else { "FAIL" }
    ));
    out.push_str(&format!(
        "dominant root interval: ({}, {})\n",
        root.low, root.high
    ));
    out.push_str(&format!(
        "dominant root midpoint: {}\n",
        root.midpoint_decimal(digits)
    ));
    Ok(out)
}

/// Decimal places needed to show a value at the given resolution.
fn decimal_digits(precision: &BigRational) -> usize {
    let mut digits = 0;
    let mut scale = BigRational::one();
    let ten = BigRational::from_integer(BigInt::from(10u32));
    while &scale > precision && digits < 60 {
        scale /= ten.clone();
        digits += 1;
    }
    digits
}

fn render_polytope(name: PolytopeName, emit: EmitArg) -> Result<String> {
    let p = build_polytope(name);
    Ok(match emit {
        EmitArg::Stats => {
            let mut s = format!("polytope: {name}\n");
            s.push_str(&incidence_stats(&p).to_string());
            if name == PolytopeName::SixHundredCell {
                s.push_str(&format!(
                    "vertex neighbourhoods are icosahedra: {}\n",
                    p.neighbors_form_icosahedra()
                ));
            }
            s
        }
        EmitArg::Adjacency => p.adjacency_dump(),
        EmitArg::Classification => {
            let mut s = String::new();
            for m in 1..=name.max_seed() {
                let all = classify_all(&p, m)?;
                for (key, (_, n)) in &all.outcomes {
                    s.push_str(&format!(
                        "{name} m={m}: {key} ({n} of {} cliques)\n",
                        all.cliques
                    ));
                }
            }
            s
        }
    })
}

fn run_verify(group: VerifyGroup) -> Result<VerificationReport> {
    match group {
        VerifyGroup::Tables => verify::verify_tables(),
        VerifyGroup::Recurrences => verify::verify_recurrences(),
        VerifyGroup::Polynomials => verify::verify_polynomials(),
        VerifyGroup::Classification => verify::verify_classification(),
        VerifyGroup::All => verify::verify_all(),
    }
}

/// Executes a parsed command, writing data to `out`. Returns the exit code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Census(args) => {
            render_table(Quantity::Counts, args.mode.into(), args.levels, args.format)
                .map(|s| (s, EXIT_OK))
        }
        Command::Sums(args) => {
            render_table(Quantity::Values, args.mode.into(), args.levels, args.format)
                .map(|s| (s, EXIT_OK))
        }
        Command::Verify { group } => run_verify(group).map(|r| {
            let code = if r.passed() { EXIT_OK } else { EXIT_FAILED };
            (r.to_string(), code)
        }),
        Command::Spectral { kind, precision } => match parse_rational(&precision) {
            Ok(p) => render_spectral(kind.into(), &p).map(|s| (s, EXIT_OK)),
            Err(e) => {
                let _ = writeln!(err, "hps: --precision: {e}");
                return EXIT_USAGE;
            }
        },
        Command::Hpt {
            q,
            rows,
            format,
            max_rows,
        } => {
            if rows > max_rows {
                let _ = writeln!(
                    err,
                    "hps: --rows {rows} exceeds --max-rows {max_rows}; raise --max-rows to build it"
                );
                return EXIT_USAGE;
            }
            hpt::rows(q, rows).and_then(|rs| match format {
                HptFormat::Csv => Ok((hpt::rows_to_csv(&rs), EXIT_OK)),
                HptFormat::Dot => hpt::rows_to_dot(&rs).map(|s| (s, EXIT_OK)),
            })
        }
        Command::Polytope { name, emit } => {
            render_polytope(name.into(), emit).map(|s| (s, EXIT_OK))
        }
    };
    match result {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_FAILED;
            }
            code
        }
        Err(e @ (Error::Argument(_) | Error::Parse(_) | Error::NonPositivePrecision)) => {
            let _ = writeln!(err, "hps: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "hps: {e}");
            EXIT_FAILED
        }
    }
}

/// Parses `argv` (program name first) and runs it.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hps").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_rational_forms() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(parse_rational("1e-6").unwrap(), q(1, 1_000_000));
        assert_eq!(parse_rational("0.001").unwrap(), q(1, 1000));
        assert_eq!(parse_rational("1/8").unwrap(), q(1, 8));
        assert_eq!(parse_rational("2.5E2").unwrap(), q(250, 1));
        assert_eq!(parse_rational("-3").unwrap(), q(-3, 1));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        let (code, out, err) = run_capture(&["frobnicate"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }

    #[test]
    fn unknown_flag_is_a_usage_error() {
        let (code, _, _) = run_capture(&["census", "--levels", "3", "--bogus"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn euclidean_level_zero() {
        let (code, out, _) = run_capture(&["census", "--mode", "euclidean", "--levels", "0"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "level,a,b,c,d,e,f,g,h,k,v,s\n0,0,0,0,0,0,0,0,0,0,1,1\n"
        );
    }

    #[test]
    fn sums_header_is_hatted() {
        let (_, out, _) = run_capture(&["sums", "--levels", "1"]);
        assert_eq!(
            out.lines().next().unwrap(),
            "level,a^,b^,c^,d^,e^,f^,g^,h^,k^,v^,s^"
        );
    }

    #[test]
    fn json_numbers_are_exact() {
        let (code, out, _) = run_capture(&["census", "--levels", "10", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"s\": 2116518790936"));
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 11);
    }

    #[test]
    fn text_table_is_aligned() {
        let (code, out, _) = run_capture(&["census", "--levels", "5", "--format", "text"]);
        assert_eq!(code, EXIT_OK);
        let widths: Vec<usize> = out.lines().map(str::len).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn hpt_row_cap() {
        let (code, _, err) = run_capture(&["hpt", "--q", "5", "--rows", "40"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--max-rows"));
        let (code, _, _) = run_capture(&["hpt", "--q", "3", "--rows", "2"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn spectral_prints_growth_ratio() {
        let (code, out, _) = run_capture(&["spectral", "--kind", "counts", "--precision", "1e-6"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("dominant root midpoint: 112.763"), "{out}");
        assert!(out.contains("factorization check: pass"));
        assert!(out.contains("characteristic / minimal: x - 1"));
        let (code, _, _) = run_capture(&["spectral", "--precision", "0"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn decimal_digits_for_precision() {
        assert_eq!(decimal_digits(&parse_rational("1e-6").unwrap()), 6);
        assert_eq!(decimal_digits(&parse_rational("0.005").unwrap()), 3);
        assert_eq!(decimal_digits(&parse_rational("2").unwrap()), 0);
    }
}
