//! The `aga` command line.

use std::collections::BTreeMap;
use std::io::Write;

use aga_core::census::{enumerate_mono_agas, selection_of, verify_selection, CensusOptions};
use aga_core::coherence::{coherence_test, CoherenceVerdict};
use aga_core::error::Error;
use aga_core::geom::is_vertex;
use aga_core::grading::{degree_of, enumerate_fiber, Binomial, Degree, ExponentVector, GradingSet};
use aga_core::graver::{primitive_binomials, Completeness, GraverOptions, SearchBound};
use aga_core::groebner::{buchberger, initial_monomial_ideal_with, toric_gb_with, BinomialIdeal, TermOrder};
use aga_core::hilbert::{hilbert_numerator, is_a_graded_monomial, MonomialIdeal};
use aga_core::paramspace::{ideal_to_point, injectivity_threshold, scheme_equations, DEFAULT_EQUATION_LIMIT};
use aga_core::structure::{
    radical_mono, subdivision_of, subdivision_of_binomial, torus_invariants, torus_isomorphic,
    DEFAULT_NILPOTENCY_POWER,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::io::{self, ParseError};
use crate::registry::{self, weight_form};
use crate::scan::{self, ScanKind};
use crate::table1;

#[derive(Parser, Debug)]
#[command(name = "aga", version, about = "Exact computations with A-graded algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized examples.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct GradingArg {
    /// Grading file (d rows of n integers) or inline rows, e.g. "1 3 4 7" or "3 2 1 0; 0 1 2 3".
    #[arg(long)]
    grading: String,
}

#[derive(Args, Debug)]
struct BoundArg {
    /// Degree cap for d = 1, zonotope parameter r for d >= 2.
    #[arg(long)]
    bound: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lattice points of a fiber, with vertex flags.
    Fiber {
        #[command(flatten)]
        g: GradingArg,
        /// Degree, comma separated for d >= 2.
        #[arg(long)]
        degree: String,
        /// Mark standard monomials of this monomial ideal (ideal file format).
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Primitive binomials: "u | v | degree".
    Graver {
        #[command(flatten)]
        g: GradingArg,
        #[command(flatten)]
        b: BoundArg,
    },
    /// Reduced Groebner basis of the toric ideal or of an ideal file.
    Gb {
        #[command(flatten)]
        g: GradingArg,
        /// Ideal file: one generator per line, "u=a,b,.. [v=..] [c=p/q]"; '#' starts a comment.
        #[arg(long)]
        ideal: Option<String>,
        /// Comma-separated weights (rationals allowed); lex x1 > ... > xn breaks ties. Plain lex if absent.
        #[arg(long)]
        weight: Option<String>,
        #[command(flatten)]
        b: BoundArg,
    },
    /// Initial monomial ideal of the toric ideal under a weight.
    Initial {
        #[command(flatten)]
        g: GradingArg,
        #[arg(long)]
        weight: String,
        /// Break weight ties by lex instead of rejecting the weight.
        #[arg(long)]
        tiebreak: bool,
        #[command(flatten)]
        b: BoundArg,
    },
    /// All monomial A-graded ideals, one per line.
    Census {
        #[command(flatten)]
        g: GradingArg,
        #[command(flatten)]
        b: BoundArg,
    },
    /// Coherence test of a monomial A-graded ideal.
    Coherence {
        #[command(flatten)]
        g: GradingArg,
        /// Ideal file: one generator per line, "u=a,b,.. [v=..] [c=p/q]"; '#' starts a comment.
        #[arg(long)]
        ideal: String,
    },
    /// Classification of all A = {a1 < a2 < a3 < a4} in 1..9 (TSV).
    Table1 {
        /// Also print rows without incoherent ideals.
        #[arg(long)]
        all: bool,
    },
    /// Hilbert numerator ("coeff @ degree") and the A-graded verdict.
    Hilbert {
        #[command(flatten)]
        g: GradingArg,
        /// Ideal file: one generator per line, "u=a,b,.. [v=..] [c=p/q]"; '#' starts a comment.
        #[arg(long)]
        ideal: String,
    },
    /// Radical of a monomial ideal.
    Radical {
        #[command(flatten)]
        g: GradingArg,
        /// Ideal file: one generator per line, "u=a,b,.. [v=..] [c=p/q]"; '#' starts a comment.
        #[arg(long)]
        ideal: String,
    },
    /// Maximal cells of the subdivision of an A-graded ideal.
    Subdivision {
        #[command(flatten)]
        g: GradingArg,
        /// Ideal file: one generator per line, "u=a,b,.. [v=..] [c=p/q]"; '#' starts a comment.
        #[arg(long)]
        ideal: String,
        /// Power used for nilpotency tests of binomial ideals.
        #[arg(long, default_value_t = DEFAULT_NILPOTENCY_POWER)]
        power: u32,
    },
    /// Torus invariants of the binomial generators.
    Invariants {
        #[command(flatten)]
        g: GradingArg,
        /// Ideal file: one generator per line, "u=a,b,.. [v=..] [c=p/q]"; '#' starts a comment.
        #[arg(long)]
        ideal: String,
        /// Second ideal file to test for torus isomorphism.
        #[arg(long)]
        other: Option<String>,
    },
    /// Equations of the truncated parameter scheme, or the point of an ideal.
    Scheme {
        #[command(flatten)]
        g: GradingArg,
        /// Truncation level (default: the injectivity threshold).
        #[arg(long)]
        r: Option<u64>,
        /// Ideal file: one generator per line, "u=a,b,.. [v=..] [c=p/q]"; '#' starts a comment.
        #[arg(long)]
        ideal: Option<String>,
        /// Largest number of equations to generate.
        #[arg(long, default_value_t = DEFAULT_EQUATION_LIMIT)]
        limit: usize,
    },
    /// Recompute a named example and compare with its expected values.
    Example {
        /// Example name; omit to list them.
        name: Option<String>,
    },
    /// Search a bounded range for counterexamples or witnesses.
    ConjectureScan {
        #[arg(value_enum)]
        kind: ScanKind,
        /// Smallest entry (coherence-nd2).
        #[arg(long, default_value_t = 1)]
        min_entry: u64,
        /// Largest entry (coherence-nd2).
        #[arg(long, default_value_t = 10)]
        max_entry: u64,
        /// Grading (subdivision-realization).
        #[arg(long)]
        grading: Option<String>,
    },
}

/// Why a command failed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

/// Rendered result: both formats, one of which gets printed. A failed
/// example still prints its report before the nonzero exit.
pub struct Output {
    text: String,
    json: Value,
    status: i32,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, status: 0 }
    }
}

/// Run the CLI on `argv` (program name first). Returns the exit status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return 2;
        }
    };
    match pool.install(|| execute(&cli)) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json values serialize") + "\n",
            };
            let _ = out.write_all(body.as_bytes());
            o.status
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn graver_options(a: &GradingSet, b: &BoundArg) -> GraverOptions {
    match b.bound {
        None => GraverOptions::default(),
        Some(r) if a.d() == 1 => GraverOptions::with_bound(SearchBound::Cap(Degree::scalar(r / a.scale()))),
        Some(r) => GraverOptions::with_bound(SearchBound::Zonotope(r)),
    }
}

fn completeness_label(c: &Completeness) -> String {
    match c {
        Completeness::Certified => "certified".into(),
        Completeness::ConjecturedBound { r } => format!("uncertified (zonotope bound r = {r})"),
        Completeness::Truncated => "uncertified (truncated)".into(),
    }
}

fn exps(u: &ExponentVector) -> Value {
    json!(u.exps())
}

fn join_spaced(u: &ExponentVector) -> String {
    u.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn generator_json(g: &Binomial) -> Value {
    if g.is_monomial() {
        json!({ "u": exps(g.u()) })
    } else {
        json!({ "u": exps(g.u()), "v": exps(g.v()), "c": g.c().to_string() })
    }
}

fn ideal_output(gens: &[Binomial], extra: &str) -> Output {
    let mut text = io::format_ideal(gens);
    text.push_str(extra);
    Output::new(text, json!({ "generators": gens.iter().map(generator_json).collect::<Vec<_>>() }))
}

fn weight_vector(a: &GradingSet, s: &str) -> Res<Vec<num_rational::BigRational>> {
    let w = io::parse_rationals(s)?;
    if w.len() != a.n() {
        return Err(Failure::Usage(format!("weight has {} entries, expected {}", w.len(), a.n())));
    }
    Ok(w)
}

/// The monomial ideal behind an A-graded input: itself, or the lex initial
/// ideal of a binomial ideal (same Hilbert function).
fn leading_ideal(j: &BinomialIdeal) -> Res<MonomialIdeal> {
    if j.binomials().next().is_none() {
        return Ok(io::as_monomial(j)?);
    }
    Ok(buchberger(j, &TermOrder::lex(j.grading().n()))?.initial_ideal()?)
}

fn require_a_graded(i: &MonomialIdeal) -> Res<()> {
    let v = is_a_graded_monomial(i, &SearchBound::Default)?;
    if let Some((b, c)) = v.witness {
        let a = i.grading();
        return Err(Failure::Domain(format!(
            "not A-graded: degree {} has {c} standard monomials",
            io::format_degree(a, &b)
        )));
    }
    Ok(())
}

fn execute(cli: &Cli) -> Res<Output> {
    match &cli.command {
        Command::Fiber { g, degree, ideal } => fiber(g, degree, ideal.as_deref()),
        Command::Graver { g, b } => graver(g, b),
        Command::Gb { g, ideal, weight, b } => gb(g, ideal.as_deref(), weight.as_deref(), b),
        Command::Initial { g, weight, tiebreak, b } => initial(g, weight, *tiebreak, b),
        Command::Census { g, b } => census(g, b),
        Command::Coherence { g, ideal } => coherence(g, ideal),
        Command::Table1 { all } => table(*all),
        Command::Hilbert { g, ideal } => hilbert(g, ideal),
        Command::Radical { g, ideal } => radical(g, ideal),
        Command::Subdivision { g, ideal, power } => subdivision(g, ideal, *power),
        Command::Invariants { g, ideal, other } => invariants(g, ideal, other.as_deref()),
        Command::Scheme { g, r, ideal, limit } => scheme(g, *r, ideal.as_deref(), *limit),
        Command::Example { name } => example(name.as_deref(), cli.seed),
        Command::ConjectureScan { kind, min_entry, max_entry, grading } => {
            let report = scan::run(*kind, *min_entry, *max_entry, grading.as_deref())?;
            Ok(Output::new(report.text(), report.json()))
        }
    }
}

fn fiber(g: &GradingArg, degree: &str, ideal: Option<&str>) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let mono = match ideal {
        Some(p) => Some(io::as_monomial(&io::read_ideal(p, &a)?)?),
        None => None,
    };
    let points = match io::parse_degree(&a, degree)? {
        Some(b) => enumerate_fiber(&a, &b)?,
        None => return Ok(Output::new("# 0 points\n".into(), json!({ "points": [] }))),
    };
    let mut text = format!("# {} points\n", points.len());
    let mut rows = Vec::new();
    for u in &points.points {
        let v = is_vertex(&points, u)?;
        text.push_str(&format!("{u} vertex={v}"));
        let mut row = json!({ "u": exps(u), "vertex": v });
        if let Some(i) = &mono {
            let s = !i.contains(u);
            text.push_str(&format!(" standard={s}"));
            row["standard"] = json!(s);
        }
        text.push('\n');
        rows.push(row);
    }
    Ok(Output::new(text, json!({ "points": rows })))
}

fn graver(g: &GradingArg, b: &BoundArg) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let p = primitive_binomials(&a, &graver_options(&a, b))?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for bin in &p.binomials {
        let d = degree_of(&a, bin.u())?;
        text.push_str(&format!("{} | {} | {}\n", join_spaced(bin.u()), join_spaced(bin.v()), io::format_degree(&a, &d)));
        rows.push(json!({ "u": exps(bin.u()), "v": exps(bin.v()), "degree": io::user_degree(&a, &d) }));
    }
    let status = completeness_label(&p.completeness);
    text.push_str(&format!("# {} primitive binomials; {status}\n", p.len()));
    Ok(Output::new(text, json!({ "binomials": rows, "completeness": status })))
}

fn gb(g: &GradingArg, ideal: Option<&str>, weight: Option<&str>, b: &BoundArg) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let ord = match weight {
        Some(w) => TermOrder::weight(weight_vector(&a, w)?),
        None => TermOrder::lex(a.n()),
    };
    let basis = match ideal {
        Some(p) => buchberger(&io::read_ideal(p, &a)?, &ord)?,
        None => toric_gb_with(&a, &ord, &graver_options(&a, b))?,
    };
    Ok(ideal_output(basis.elements(), ""))
}

fn initial(g: &GradingArg, weight: &str, tiebreak: bool, b: &BoundArg) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let w = weight_vector(&a, weight)?;
    let tie = tiebreak.then(|| (0..a.n()).collect());
    let init = initial_monomial_ideal_with(&a, &w, tie, &graver_options(&a, b))?;
    let gens: Vec<Binomial> = init.ideal.generators().iter().cloned().map(Binomial::monomial).collect();
    let extra = if init.tiebreak_used { "# tiebreak used\n" } else { "" };
    let mut o = ideal_output(&gens, extra);
    o.json["tiebreak_used"] = json!(init.tiebreak_used);
    Ok(o)
}

fn census(g: &GradingArg, b: &BoundArg) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let opts = CensusOptions {
        graver: graver_options(&a, b),
        ..Default::default()
    };
    let c = enumerate_mono_agas(&a, &opts)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for s in &c.selections {
        text.push_str(&format!("{}\n", s.ideal));
        let selection: BTreeMap<String, Value> = s
            .choice
            .iter()
            .map(|(d, u)| (io::format_degree(&a, d), exps(u)))
            .collect();
        let gens: Vec<Value> = s.ideal.generators().iter().map(exps).collect();
        rows.push(json!({ "generators": gens, "selection": selection }));
    }
    let status = completeness_label(&c.primitive.completeness);
    text.push_str(&format!("# {} monomial A-graded ideals; {status}\n", c.len()));
    Ok(Output::new(text, json!({ "ideals": rows, "completeness": status })))
}

fn coherence(g: &GradingArg, ideal: &str) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let i = io::as_monomial(&io::read_ideal(ideal, &a)?)?;
    require_a_graded(&i)?;
    let opts = CensusOptions::default();
    let primitive = primitive_binomials(&a, &opts.graver)?;
    let choice = selection_of(&i, &primitive.max_degree())?;
    let sel = verify_selection(&a, &choice, &opts)?
        .map_err(|r| Failure::Domain(format!("not a monomial A-graded ideal: {r:?}")))?;
    match coherence_test(&sel, &primitive)? {
        CoherenceVerdict::Coherent { omega } => {
            let w: Vec<String> = omega.iter().map(ToString::to_string).collect();
            let text = format!("coherent\nomega = ({})\n", w.join(","));
            Ok(Output::new(text, json!({ "coherent": true, "omega": w })))
        }
        v @ CoherenceVerdict::Incoherent { .. } => {
            let CoherenceVerdict::Incoherent { rows, multipliers } = &v else { unreachable!() };
            let mut text = String::from("incoherent\n");
            let mut jrows = Vec::new();
            for (r, y) in rows.iter().zip(multipliers) {
                let big = |u: &ExponentVector| u.iter().map(|&x| num_bigint::BigInt::from(x)).collect::<Vec<_>>();
                text.push_str(&format!(
                    "{y} * ({} > {})  degree {}\n",
                    weight_form(&big(&r.competitor)),
                    weight_form(&big(&r.standard)),
                    io::format_degree(&a, &r.degree)
                ));
                jrows.push(json!({
                    "degree": io::user_degree(&a, &r.degree),
                    "standard": exps(&r.standard),
                    "competitor": exps(&r.competitor),
                    "multiplier": y.to_string(),
                }));
            }
            let (lhs, rhs) = v.combined_sides().expect("incoherent verdict");
            text.push_str(&format!("sum: {} > {}\n", weight_form(&lhs), weight_form(&rhs)));
            let side = |s: &[num_bigint::BigInt]| s.iter().map(ToString::to_string).collect::<Vec<_>>();
            Ok(Output::new(
                text,
                json!({ "coherent": false, "certificate": jrows, "left": side(&lhs), "right": side(&rhs) }),
            ))
        }
    }
}

fn table(all: bool) -> Res<Output> {
    let rows = table1::classify_all()?;
    let mut text = String::new();
    let mut jrows = Vec::new();
    for (q, c) in rows.iter().filter(|(_, c)| all || c.incoherent > 0) {
        text.push_str(&table1::tsv_row(q, c));
        text.push('\n');
        jrows.push(json!({ "set": q, "graver": c.graver, "census": c.census, "incoherent": c.incoherent }));
    }
    Ok(Output::new(text, json!(jrows)))
}

fn hilbert(g: &GradingArg, ideal: &str) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let i = leading_ideal(&io::read_ideal(ideal, &a)?)?;
    let num = hilbert_numerator(&i)?;
    let mut text = String::new();
    let mut terms = Vec::new();
    for (b, c) in num.terms() {
        text.push_str(&format!("{c} @ {}\n", io::format_degree(&a, b)));
        terms.push(json!({ "coeff": c.to_string(), "degree": io::user_degree(&a, b) }));
    }
    let v = is_a_graded_monomial(&i, &SearchBound::Default)?;
    let mut verdict = json!({ "a_graded": v.a_graded, "completeness": completeness_label(&v.completeness) });
    text.push_str(&format!("A-graded: {}", v.a_graded));
    if let Some((b, c)) = &v.witness {
        text.push_str(&format!(" (degree {} has {c} standard monomials)", io::format_degree(&a, b)));
        verdict["witness"] = json!({ "degree": io::user_degree(&a, b), "count": c });
    }
    text.push('\n');
    Ok(Output::new(text, json!({ "numerator": terms, "verdict": verdict })))
}

fn radical(g: &GradingArg, ideal: &str) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let i = io::as_monomial(&io::read_ideal(ideal, &a)?)?;
    let r = radical_mono(&i);
    let gens: Vec<Binomial> = r.generators().iter().cloned().map(Binomial::monomial).collect();
    Ok(ideal_output(&gens, ""))
}

fn subdivision(g: &GradingArg, ideal: &str, power: u32) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let j = io::read_ideal(ideal, &a)?;
    require_a_graded(&leading_ideal(&j)?)?;
    let sub = if j.binomials().next().is_none() {
        subdivision_of(&io::as_monomial(&j)?)?
    } else {
        subdivision_of_binomial(&buchberger(&j, &TermOrder::lex(a.n()))?, power)?
    };
    let mut text: String = sub.maximal_cells.iter().map(|c| format!("{c}\n")).collect();
    if sub.heuristic {
        text.push_str(&format!("# cells from normal forms of powers up to {power}\n"));
    }
    let cells: Vec<Vec<usize>> = sub.maximal_cells.iter().map(|c| c.sigma.iter().map(|i| i + 1).collect()).collect();
    Ok(Output::new(text, json!({ "cells": cells, "heuristic": sub.heuristic })))
}

fn invariants(g: &GradingArg, ideal: &str, other: Option<&str>) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let j = io::read_ideal(ideal, &a)?;
    let r = torus_invariants(&j)?;
    let mut text = r.to_string();
    if r.kernel_basis.is_empty() {
        text.push_str("# no invariants\n");
    }
    let kernel: Vec<Vec<String>> = r.kernel_basis.iter().map(|z| z.iter().map(ToString::to_string).collect()).collect();
    let values: Vec<String> = r.invariant_values.iter().map(ToString::to_string).collect();
    let mut js = json!({ "kernel": kernel, "values": values });
    if let Some(p) = other {
        let k = io::read_ideal(p, &a)?;
        let iso = torus_isomorphic(&j, &k)?;
        text.push_str(&format!("torus isomorphic: {iso}\n"));
        js["torus_isomorphic"] = json!(iso);
    }
    Ok(Output::new(text, js))
}

fn scheme(g: &GradingArg, r: Option<u64>, ideal: Option<&str>, limit: usize) -> Res<Output> {
    let a = io::parse_grading(&g.grading)?;
    let r = match r {
        Some(r) => r,
        None => injectivity_threshold(&primitive_binomials(&a, &GraverOptions::default())?)?,
    };
    if let Some(p) = ideal {
        let j = io::read_ideal(p, &a)?;
        let f = ideal_to_point(&j, r)?;
        let blocks: Vec<Value> = f
            .blocks
            .iter()
            .map(|(b, coords)| {
                let cs: Vec<Value> = coords.iter().map(|(u, c)| json!({ "u": exps(u), "c": c.to_string() })).collect();
                json!({ "degree": io::user_degree(&a, b), "coordinates": cs })
            })
            .collect();
        return Ok(Output::new(f.to_string(), json!({ "r": r, "blocks": blocks })));
    }
    let eqs = scheme_equations(&a, r, limit)?;
    let mut text = format!("# {} equations at r = {r}\n", eqs.len());
    for e in &eqs {
        text.push_str(&format!("{e}\n"));
    }
    let js: Vec<String> = eqs.iter().map(ToString::to_string).collect();
    Ok(Output::new(text, json!({ "r": r, "equations": js })))
}

fn example(name: Option<&str>, seed: u64) -> Res<Output> {
    let Some(name) = name else {
        let text = registry::EXAMPLES.iter().map(|e| format!("{:<26} {}\n", e.name, e.summary)).collect();
        let js: Vec<Value> = registry::EXAMPLES.iter().map(|e| json!({ "name": e.name, "summary": e.summary })).collect();
        return Ok(Output::new(text, json!(js)));
    };
    let Some(ex) = registry::find(name) else {
        return Err(Failure::Usage(format!("unknown example {name:?}; run `aga example` for the list")));
    };
    let rep = ex.run(seed)?;
    let mut text: String = rep.lines.iter().map(|l| format!("{l}\n")).collect();
    let mut checks = Vec::new();
    for c in &rep.checks {
        if c.passed() {
            text.push_str(&format!("check {}: ok\n", c.label));
        } else {
            text.push_str(&format!("check {}: MISMATCH expected {}, got {}\n", c.label, c.expected, c.actual));
        }
        checks.push(json!({ "label": c.label, "expected": c.expected, "actual": c.actual, "passed": c.passed() }));
    }
    let pass = rep.passed();
    text.push_str(&format!("example {}: {}\n", rep.name, if pass { "pass" } else { "FAIL" }));
    let mut o = Output::new(text, json!({ "name": rep.name, "lines": rep.lines, "checks": checks, "passed": pass }));
    o.status = if pass { 0 } else { 1 };
    Ok(o)
}
