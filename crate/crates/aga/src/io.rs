//! Text formats: grading sets, ideal files, degrees and weights.
//!
//! Grading file: `d` lines of `n` integers (the rows of `A`). Inline form:
//! rows separated by `;`, entries by spaces or commas.
//!
//! Ideal file: one generator per line, `u=2,0,1,0 v=0,2,0,0 c=3/2` for
//! `x^u - c x^v`; without `v` the line is the monomial `x^u`, and `c`
//! defaults to 1. Blank lines and `#` comments are skipped.

use std::fmt;
use std::path::Path;

use aga_core::grading::{Binomial, Degree, ExponentVector, GradingSet};
use aga_core::groebner::BinomialIdeal;
use aga_core::hilbert::MonomialIdeal;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A malformed input; maps to the usage exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn read_arg(arg: &str) -> Result<String, ParseError> {
    if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| ParseError(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_ints<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, ParseError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| ParseError(format!("not an integer: {t:?}"))))
        .collect()
}

/// Parse grading text: newline- or `;`-separated rows.
pub fn parse_grading_text(text: &str) -> Result<GradingSet, ParseError> {
    let rows: Vec<Vec<u64>> = text
        .lines()
        .flat_map(|l| strip_comment(l).split(';').map(str::to_string).collect::<Vec<_>>())
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_ints(&l))
        .collect::<Result<_, _>>()?;
    if rows.is_empty() {
        return err("empty grading");
    }
    GradingSet::from_rows(&rows).map_err(|e| ParseError(format!("grading: {e}")))
}

/// A `--grading` argument: a path to a grading file, or the inline text.
pub fn parse_grading(arg: &str) -> Result<GradingSet, ParseError> {
    parse_grading_text(&read_arg(arg)?)
}

/// Exact rational `p/q` or integer.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// Comma-separated rationals, e.g. a weight vector.
pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>, ParseError> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_rational).collect()
}

fn parse_exponents(s: &str, n: usize) -> Result<ExponentVector, ParseError> {
    let e: Vec<u32> = parse_ints(s)?;
    if e.len() != n {
        return err(format!("exponent vector {s:?} has {} entries, expected {n}", e.len()));
    }
    Ok(ExponentVector::new(e))
}

/// One ideal-file line.
pub fn parse_generator(line: &str, n: usize) -> Result<Binomial, ParseError> {
    let (mut u, mut v, mut c) = (None, None, None);
    for field in line.split_whitespace() {
        let Some((key, value)) = field.split_once('=') else {
            return err(format!("expected key=value, found {field:?}"));
        };
        match key {
            "u" => u = Some(parse_exponents(value, n)?),
            "v" => v = Some(parse_exponents(value, n)?),
            "c" => c = Some(parse_rational(value)?),
            _ => return err(format!("unknown field {key:?}")),
        }
    }
    let Some(u) = u else { return err(format!("missing u in {line:?}")) };
    match v {
        None => Ok(Binomial::monomial(u)),
        Some(v) => {
            let c = c.unwrap_or_else(BigRational::one);
            if c.is_zero() {
                return err(format!("zero coefficient in {line:?}"));
            }
            Ok(Binomial::oriented(u, v, c))
        }
    }
}

/// Parse an ideal file against the grading `a`.
pub fn parse_ideal_text(text: &str, a: &GradingSet) -> Result<BinomialIdeal, ParseError> {
    let gens = text
        .lines()
        .map(strip_comment)
        .filter(|l| !l.is_empty())
        .map(|l| parse_generator(l, a.n()))
        .collect::<Result<Vec<_>, _>>()?;
    BinomialIdeal::new(a.clone(), gens).map_err(|e| ParseError(format!("ideal: {e}")))
}

pub fn read_ideal(path: &str, a: &GradingSet) -> Result<BinomialIdeal, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError(format!("{path}: {e}")))?;
    parse_ideal_text(&text, a)
}

/// The monomial ideal of a binomial ideal file that lists only monomials.
pub fn as_monomial(j: &BinomialIdeal) -> Result<MonomialIdeal, ParseError> {
    if j.binomials().next().is_some() {
        return err("expected a monomial ideal (no v fields)");
    }
    MonomialIdeal::new(j.grading().clone(), j.monomials().cloned().collect())
        .map_err(|e| ParseError(format!("ideal: {e}")))
}

fn join_exps(u: &ExponentVector) -> String {
    u.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Render one generator in ideal-file syntax.
pub fn format_generator(g: &Binomial) -> String {
    if g.is_monomial() {
        return format!("u={}", join_exps(g.u()));
    }
    format!("u={} v={} c={}", join_exps(g.u()), join_exps(g.v()), g.c())
}

pub fn format_ideal(gens: &[Binomial]) -> String {
    gens.iter().map(|g| format_generator(g) + "\n").collect()
}

/// Degrees as the user wrote them: `d = 1` degrees are multiplied back by
/// the common divisor the grading set divided out.
pub fn user_degree(a: &GradingSet, b: &Degree) -> Vec<u64> {
    b.iter().map(|&x| x * a.scale()).collect()
}

pub fn format_degree(a: &GradingSet, b: &Degree) -> String {
    let c = user_degree(a, b);
    if c.len() == 1 {
        c[0].to_string()
    } else {
        format!("({})", c.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
    }
}

/// Parse a user degree; `None` if it is not a multiple of the scale (and
/// hence outside the semigroup).
pub fn parse_degree(a: &GradingSet, s: &str) -> Result<Option<Degree>, ParseError> {
    let c: Vec<u64> = parse_ints(s)?;
    if c.len() != a.d() {
        return err(format!("degree {s:?} has {} entries, expected {}", c.len(), a.d()));
    }
    let k = a.scale();
    if c.iter().any(|x| x % k != 0) {
        return Ok(None);
    }
    Ok(Some(Degree::new(c.into_iter().map(|x| x / k).collect())))
}
