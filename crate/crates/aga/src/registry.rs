//! Named worked examples: each recomputes its quantities and compares them
//! with embedded expected values.

use std::collections::BTreeSet;
use std::fmt::Display;

use aga_core::census::{selection_of, standard_monomials, verify_selection, CensusOptions};
use aga_core::coherence::{classify, coherence_test, CoherenceVerdict};
use aga_core::error::{Error, Result};
use aga_core::geom::{is_edge, is_vertex};
use aga_core::grading::{degree_of, enumerate_fiber, Binomial, Degree, ExponentVector, GradingSet};
use aga_core::graver::{primitive_binomials, GraverOptions, PrimitiveSet, SearchBound};
use aga_core::groebner::{buchberger, is_groebner_degree, toric_gb, BinomialIdeal, TermOrder};
use aga_core::hilbert::{is_a_graded_monomial, semigroup_series_d1, MonomialIdeal};
use aga_core::paramspace::{ideal_to_point, injectivity_threshold, point_to_ideal};
use aga_core::structure::{subdivision_of, subdivision_of_binomial, torus_invariants, torus_isomorphic, DEFAULT_NILPOTENCY_POWER};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One compared quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExampleReport {
    pub name: String,
    pub lines: Vec<String>,
    pub checks: Vec<Check>,
}

impl ExampleReport {
    fn new(name: &str) -> Self {
        ExampleReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn check(&mut self, label: &str, expected: impl Display, actual: impl Display) {
        self.checks.push(Check {
            label: label.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    run: fn(u64) -> Result<ExampleReport>,
}

impl Example {
    pub fn run(&self, seed: u64) -> Result<ExampleReport> {
        (self.run)(seed)
    }
}

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "incoherent-1347",
        summary: "an incoherent monomial A-graded ideal for A = {1,3,4,7}, its certificate and standard monomials",
        run: incoherent_1347,
    },
    Example {
        name: "family-1347",
        summary: "a flat three-parameter family of A-graded ideals for A = {1,3,4,7}",
        run: family_1347,
    },
    Example {
        name: "family-invariant",
        summary: "the torus invariant c1*c3/c2^2 of the family",
        run: family_invariant,
    },
    Example {
        name: "degree-bound-sharp",
        summary: "the bound a_{n-1}*a_n on generator degrees is attained",
        run: degree_bound_sharp,
    },
    Example {
        name: "non-vertex-standard",
        summary: "a standard monomial in the interior of its fiber, A = {3,4,5,13,14}",
        run: non_vertex_standard,
    },
    Example {
        name: "non-groebner-degree",
        summary: "a primitive degree that is not a Groebner degree, A = {15,20,23,24}",
        run: non_groebner_degree,
    },
    Example {
        name: "radical-moduli",
        summary: "subdivision and coefficient invariant of a six-column configuration in dimension 3",
        run: radical_moduli,
    },
    Example {
        name: "twisted-cubic",
        summary: "one-dimensional in every primitive degree without being A-graded",
        run: twisted_cubic,
    },
    Example {
        name: "three-generator-coherence",
        summary: "every monomial A-graded ideal is coherent for random three-element A",
        run: three_generator_coherence,
    },
    Example {
        name: "scheme-equivariance",
        summary: "points of the parameter scheme and torus twists, A = {1,3,4,7}",
        run: scheme_equivariance,
    },
];

pub fn find(name: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.name == name)
}

fn ev(x: &[u32]) -> ExponentVector {
    ExponentVector::new(x.to_vec())
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn rand_q(rng: &mut ChaCha8Rng) -> BigRational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-9i64..=9);
    }
    q(n, rng.gen_range(1..=6))
}

fn joined<T: Display>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// `2*w1 + w3` for the weight of `x^u`.
pub(crate) fn weight_form(u: &[BigInt]) -> String {
    let terms: Vec<String> = u
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != BigInt::from(0))
        .map(|(i, c)| {
            if *c == BigInt::from(1) {
                format!("w{}", i + 1)
            } else {
                format!("{c}*w{}", i + 1)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn as_big(u: &ExponentVector) -> Vec<BigInt> {
    u.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn grading_1347() -> GradingSet {
    GradingSet::one_dim(&[1, 3, 4, 7]).expect("valid grading")
}

/// `<x1^3, x1x2, x2^2, x2x3, x1x4, x1^2x3^2, x1x3^4, x2x4^3, x4^4>`.
pub fn incoherent_ideal_1347() -> MonomialIdeal {
    let gens = [
        [3, 0, 0, 0], [1, 1, 0, 0], [0, 2, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1],
        [2, 0, 2, 0], [1, 0, 4, 0], [0, 1, 0, 3], [0, 0, 0, 4],
    ];
    MonomialIdeal::new(grading_1347(), gens.iter().map(|g| ev(g)).collect()).expect("valid ideal")
}

/// Standard monomials of the incoherent ideal in degrees 1 to 28.
pub const STANDARD_TABLE_1347: [&str; 28] = [
    "x1", "x1^2", "x2", "x3", "x1*x3", "x1^2*x3", "x4", "x3^2", "x1*x3^2", "x2*x4", "x3*x4", "x3^3",
    "x1*x3^3", "x4^2", "x3^2*x4", "x3^4", "x2*x4^2", "x3*x4^2", "x3^3*x4", "x3^5", "x4^3", "x3^2*x4^2",
    "x3^4*x4", "x3^6", "x3*x4^3", "x3^3*x4^2", "x3^5*x4", "x3^7",
];

fn incoherent_1347(_seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("incoherent-1347");
    let i = incoherent_ideal_1347();
    let a = i.grading().clone();
    rep.line(format!("I = {i}"));
    let graded = is_a_graded_monomial(&i, &SearchBound::Default)?;
    rep.check("A-graded", true, graded.a_graded);

    let primitive = primitive_binomials(&a, &GraverOptions::default())?;
    let choice = selection_of(&i, &primitive.max_degree())?;
    let sel = verify_selection(&a, &choice, &CensusOptions::default())?
        .map_err(|r| Error::Inconsistent(format!("selection rejected: {r:?}")))?;
    let verdict = coherence_test(&sel, &primitive)?;
    match &verdict {
        CoherenceVerdict::Coherent { omega } => {
            rep.line(format!("coherent, omega = ({})", joined(omega, ",")));
            rep.check("coherent", false, true);
        }
        CoherenceVerdict::Incoherent { rows, multipliers } => {
            rep.line("incoherent; certificate:");
            for (r, y) in rows.iter().zip(multipliers) {
                rep.line(format!(
                    "  {y} * ({} > {})   degree {}: {} in I, {} standard",
                    weight_form(&as_big(&r.competitor)),
                    weight_form(&as_big(&r.standard)),
                    r.degree,
                    r.competitor.monomial_string(),
                    r.standard.monomial_string(),
                ));
            }
            let (lhs, rhs) = verdict.combined_sides().expect("incoherent");
            rep.line(format!("  sum: {} > {}", weight_form(&lhs), weight_form(&rhs)));
            rep.check("coherent", false, false);
            rep.check("certificate degrees", "6,17,28", joined(rows.iter().map(|r| &r.degree), ","));
            rep.check("certificate multipliers", "1,2,1", joined(multipliers, ","));
            rep.check("left side", "2*w1 + 2*w2 + 8*w3 + 4*w4", weight_form(&lhs));
            rep.check("right side", "2*w1 + 2*w2 + 8*w3 + 4*w4", weight_form(&rhs));
        }
    }

    let table = standard_monomials(&i, &Degree::scalar(28))?;
    rep.line("standard monomials:");
    let mut got = Vec::new();
    for (b, u) in table.iter().filter(|(b, _)| !b.is_zero()) {
        rep.line(format!("  {b:>2}  {}", u.monomial_string()));
        got.push(u.monomial_string());
    }
    rep.check("standard monomials 1..28", STANDARD_TABLE_1347.join(" "), got.join(" "));
    Ok(rep)
}

/// The ten generators of the family with parameters `c`.
pub fn family_generators(c: &[BigRational; 3]) -> Vec<Binomial> {
    let mut gens = vec![
        Binomial::oriented(ev(&[2, 0, 1, 0]), ev(&[0, 2, 0, 0]), c[0].clone()),
        Binomial::oriented(ev(&[1, 0, 4, 0]), ev(&[0, 1, 0, 2]), c[1].clone()),
        Binomial::oriented(ev(&[0, 0, 7, 0]), ev(&[0, 0, 0, 4]), c[2].clone()),
    ];
    for m in [[3, 0, 0, 0], [1, 1, 0, 0], [1, 0, 0, 1], [0, 3, 0, 0], [0, 2, 0, 1], [0, 1, 1, 0], [0, 1, 0, 3]] {
        gens.push(Binomial::monomial(ev(&m)));
    }
    gens
}

pub fn family_ideal(c: &[BigRational; 3]) -> BinomialIdeal {
    BinomialIdeal::new(grading_1347(), family_generators(c)).expect("homogeneous generators")
}

/// Whether a binomial ideal is A-graded, via its lex initial ideal.
pub fn binomial_ideal_is_a_graded(j: &BinomialIdeal) -> Result<bool> {
    let gb = buchberger(j, &TermOrder::lex(j.grading().n()))?;
    Ok(is_a_graded_monomial(&gb.initial_ideal()?, &SearchBound::Default)?.a_graded)
}

fn family_1347(seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("family-1347");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut params: Vec<[BigRational; 3]> = Vec::new();
    for k in 0..20 {
        // every other member is a torus twist of its predecessor
        let c = if k % 2 == 1 {
            let lambda: Vec<BigRational> = (0..4).map(|_| rand_q(&mut rng)).collect();
            let t = family_ideal(&params[k - 1]).twisted(&lambda)?;
            let g = t.generators();
            [g[0].c().clone(), g[1].c().clone(), g[2].c().clone()]
        } else {
            [rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng)]
        };
        params.push(c);
    }
    let (mut reduced, mut graded) = (0, 0);
    let ideals: Vec<BinomialIdeal> = params.iter().map(family_ideal).collect();
    for (c, j) in params.iter().zip(&ideals) {
        let gb = buchberger(j, &TermOrder::lex(4))?;
        let mut want = j.generators().to_vec();
        want.sort();
        let mut got = gb.elements().to_vec();
        got.sort();
        reduced += usize::from(got == want);
        graded += usize::from(is_a_graded_monomial(&gb.initial_ideal()?, &SearchBound::Default)?.a_graded);
        rep.line(format!("c = ({}), c1*c3/c2^2 = {}", joined(c, ", "), &c[0] * &c[2] / (&c[1] * &c[1])));
    }
    rep.check("generators form a reduced lex basis", 20, reduced);
    rep.check("A-graded members", 20, graded);
    let inv = |c: &[BigRational; 3]| &c[0] * &c[2] / (&c[1] * &c[1]);
    let (mut agree, mut pairs, mut iso) = (0, 0, 0);
    for x in 0..ideals.len() {
        for y in x + 1..ideals.len() {
            let same = torus_isomorphic(&ideals[x], &ideals[y])?;
            pairs += 1;
            iso += usize::from(same);
            agree += usize::from(same == (inv(&params[x]) == inv(&params[y])));
        }
    }
    rep.line(format!("{iso} of {pairs} pairs torus isomorphic"));
    rep.check("isomorphism iff equal invariant", pairs, agree);
    Ok(rep)
}

fn family_invariant(seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("family-invariant");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..5 {
        let c = [rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng)];
        let r = torus_invariants(&family_ideal(&c))?;
        if k == 0 {
            for row in &r.exponent_matrix {
                rep.line(format!("u - v: ({})", joined(row, ",")));
            }
        }
        let kernel: Vec<String> = r.kernel_basis.iter().map(|z| format!("({})", joined(z, ","))).collect();
        rep.line(format!("c = ({}): {}", joined(&c, ", "), r.to_string().trim_end()));
        rep.check("kernel", "(1,-2,1)", kernel.join(" "));
        rep.check("invariant", &c[0] * &c[2] / (&c[1] * &c[1]), joined(&r.invariant_values, " "));
    }
    Ok(rep)
}

/// Random sorted `A` with `gcd(a_{n-1}, a_n) = 1` and overall gcd 1.
fn random_coprime_top(rng: &mut ChaCha8Rng) -> Vec<u64> {
    loop {
        let n = rng.gen_range(3..=4);
        let mut pool: Vec<u64> = (1..=12).collect();
        pool.shuffle(rng);
        let mut e = pool[..n].to_vec();
        e.sort_unstable();
        let all = e.iter().fold(0, |g, &x| g.gcd(&x));
        if e[n - 2].gcd(&e[n - 1]) == 1 && all == 1 {
            return e;
        }
    }
}

fn degree_bound_sharp(seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("degree-bound-sharp");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let e = random_coprime_top(&mut rng);
        let n = e.len();
        let (p, q) = (e[n - 2], e[n - 1]);
        let a = GradingSet::one_dim(&e)?;
        let gb = toric_gb(&a, &TermOrder::lex(n))?;
        let mut x = vec![0u32; n];
        x[n - 1] = p as u32;
        let mut y = vec![0u32; n];
        y[n - 2] = q as u32;
        let pair = BTreeSet::from([ev(&x), ev(&y)]);
        let found = gb
            .elements()
            .iter()
            .any(|g| !g.is_monomial() && BTreeSet::from([g.u().clone(), g.v().clone()]) == pair);
        let init = gb.initial_ideal()?;
        let top = init.generator_degrees()?.into_iter().map(|b| b[0]).max().unwrap_or(0);
        rep.line(format!("A = {{{}}}: lex initial ideal {init}", joined(&e, ",")));
        let label = format!("A = {{{}}}", joined(&e, ","));
        rep.check(&format!("{label}: x{n}^{p} - x{}^{q} in lex basis", n - 1), true, found);
        rep.check(&format!("{label}: top generator degree"), p * q, top);
    }
    Ok(rep)
}

fn non_vertex_standard(_seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("non-vertex-standard");
    let a = GradingSet::one_dim(&[3, 4, 5, 13, 14])?;
    let gens = [
        [3, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 2, 0, 0], [1, 0, 0, 0, 1],
        [0, 1, 0, 0, 1], [0, 0, 1, 0, 1], [0, 0, 0, 0, 2],
    ];
    let i = MonomialIdeal::new(a.clone(), gens.iter().map(|g| ev(g)).collect())?;
    rep.line(format!("I = {i}"));
    rep.check("A-graded", true, is_a_graded_monomial(&i, &SearchBound::Default)?.a_graded);
    // (1/(1-t) - t - t^2) (1-t) = 1 - t + t^3
    let s = semigroup_series_d1(&a)?;
    let mut num = s.numerator.clone();
    while num.last() == Some(&0) {
        num.pop();
    }
    rep.check("series numerator over 1-t", "1,-1,0,1", joined(&num, ","));
    let f = enumerate_fiber(&a, &Degree::scalar(15))?;
    rep.check(
        "fiber(15)",
        "(0,0,3,0,0) (1,3,0,0,0) (2,1,1,0,0) (5,0,0,0,0)",
        joined(&f.points, " "),
    );
    let u = ev(&[2, 1, 1, 0, 0]);
    for p in &f.points {
        let v = is_vertex(&f, p)?;
        let std = !i.contains(p);
        rep.line(format!("{p} {} vertex: {v}", if std { "standard," } else { "in I," }));
        rep.check(&format!("{p} vertex"), p != &u, v);
    }
    rep.check("(2,1,1,0,0) standard", true, !i.contains(&u));
    Ok(rep)
}

fn non_groebner_degree(_seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("non-groebner-degree");
    let a = GradingSet::one_dim(&[15, 20, 23, 24])?;
    let b = Degree::scalar(138);
    let primitive = primitive_binomials(&a, &GraverOptions::default())?;
    let at: Vec<&Binomial> = primitive.of_degree(&b).collect();
    rep.check("primitive binomials of degree 138", "x1^2*x2^3*x4^2 - x3^6", joined(&at, "; "));
    let f = enumerate_fiber(&a, &b)?;
    let edge = match at.first() {
        Some(g) => is_edge(&f, g.u(), g.v())?,
        None => true,
    };
    let gdeg = is_groebner_degree(&a, &b)?;
    rep.line(format!(
        "{} primitive binomial of degree 138; edge test: {edge}; Groebner degree: {gdeg}",
        if at.len() == 1 { "unique" } else { "not a unique" }
    ));
    rep.check("edge", false, edge);
    rep.check("Groebner degree", false, gdeg);
    Ok(rep)
}

pub fn radical_moduli_grading() -> GradingSet {
    GradingSet::new(vec![
        vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4], vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2],
    ])
    .expect("valid grading")
}

/// Seven monomials and three binomials with coefficients `c`.
pub fn radical_moduli_ideal(c: &[BigRational; 3]) -> BinomialIdeal {
    let mut gens: Vec<Binomial> = [
        [1, 1, 1, 0, 0, 0], [1, 0, 0, 0, 1, 1], [0, 1, 0, 1, 0, 1], [0, 0, 1, 1, 1, 0],
        [1, 1, 0, 0, 0, 2], [1, 0, 1, 0, 2, 0], [0, 1, 1, 2, 0, 0],
    ]
    .iter()
    .map(|m| Binomial::monomial(ev(m)))
    .collect();
    gens.push(Binomial::oriented(ev(&[1, 0, 0, 0, 4, 0]), ev(&[0, 1, 0, 4, 0, 0]), c[0].clone()));
    gens.push(Binomial::oriented(ev(&[0, 1, 0, 0, 0, 4]), ev(&[0, 0, 1, 0, 4, 0]), c[1].clone()));
    gens.push(Binomial::oriented(ev(&[0, 0, 1, 4, 0, 0]), ev(&[1, 0, 0, 0, 0, 4]), c[2].clone()));
    BinomialIdeal::new(radical_moduli_grading(), gens).expect("homogeneous generators")
}

fn radical_moduli(seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("radical-moduli");
    let a = radical_moduli_grading();
    let one = [q(1, 1), q(1, 1), q(1, 1)];
    let j = radical_moduli_ideal(&one);
    let mono = MonomialIdeal::new(a.clone(), j.monomials().cloned().collect())?;
    let sub = subdivision_of(&mono)?;
    let cells: BTreeSet<String> = sub.maximal_cells.iter().map(|c| c.to_string()).collect();
    rep.line(format!("cells: {}", joined(&cells, " ")));
    rep.check("cells", "{1,2,4,5} {1,3,4,6} {2,3,5,6} {4,5,6}", joined(&cells, " "));
    let gb = buchberger(&j, &TermOrder::lex(a.n()))?;
    let heur = subdivision_of_binomial(&gb, DEFAULT_NILPOTENCY_POWER)?;
    rep.check("cells from normal forms", joined(&sub.maximal_cells, " "), joined(&heur.maximal_cells, " "));

    let bins = BinomialIdeal::new(a.clone(), j.binomials().cloned().collect())?;
    let r = torus_invariants(&bins)?;
    let kernel: Vec<String> = r.kernel_basis.iter().map(|z| format!("({})", joined(z, ","))).collect();
    rep.line(format!("invariant lattice: {}", kernel.join(" ")));
    rep.check("invariant lattice", "(1,1,1)", kernel.join(" "));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut agree, mut trivial) = (0, 0);
    for k in 0..10 {
        let (c1, c2) = (rand_q(&mut rng), rand_q(&mut rng));
        let c3 = if k % 2 == 0 { (&c1 * &c2).recip() } else { rand_q(&mut rng) };
        let c = [c1, c2, c3];
        let product = &c[0] * &c[1] * &c[2];
        let iso = torus_isomorphic(&radical_moduli_ideal(&c), &j)?;
        let value = torus_invariants(&BinomialIdeal::new(a.clone(), radical_moduli_ideal(&c).binomials().cloned().collect())?)?;
        rep.check("invariant equals c1*c2*c3", &product, joined(&value.invariant_values, " "));
        rep.line(format!("c = ({}): c1*c2*c3 = {product}, isomorphic to c = (1,1,1): {iso}", joined(&c, ", ")));
        agree += usize::from(iso == (product == q(1, 1)));
        trivial += usize::from(iso);
    }
    rep.check("triviality iff c1*c2*c3 = 1", 10, agree);
    rep.check("trivial triples", 5, trivial);
    Ok(rep)
}

pub fn twisted_cubic_grading() -> GradingSet {
    GradingSet::new(vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]).expect("valid grading")
}

fn twisted_cubic(_seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("twisted-cubic");
    let a = twisted_cubic_grading();
    let p: PrimitiveSet = primitive_binomials(&a, &GraverOptions::default())?;
    let bins: BTreeSet<String> = p.binomials.iter().map(Binomial::to_poly_string).collect();
    for g in &p.binomials {
        rep.line(format!("{g}   degree {}", degree_of(&a, g.u())?));
    }
    rep.check(
        "primitive binomials",
        "x1*x3 - x2^2; x1*x4 - x2*x3; x1*x4^2 - x3^3; x1^2*x4 - x2^3; x2*x4 - x3^2",
        joined(&bins, "; "),
    );
    let degs: BTreeSet<String> = p.degrees.iter().map(Degree::to_string).collect();
    rep.check("primitive degrees", "(2,4) (3,3) (3,6) (4,2) (6,3)", joined(&degs, " "));
    let i = MonomialIdeal::new(a, vec![ev(&[1, 0, 0, 1]), ev(&[0, 2, 0, 0]), ev(&[0, 0, 2, 0])])?;
    let v = is_a_graded_monomial(&i, &SearchBound::Default)?;
    let witness = v.witness.as_ref().map(|(b, c)| format!("{b} count {c}")).unwrap_or_else(|| "none".into());
    rep.line(format!("{i}: A-graded {}, witness {witness}", v.a_graded));
    rep.check("A-graded", false, v.a_graded);
    let ok = matches!(&v.witness, Some((b, 0)) if b.coords() == [4, 5] || b.coords() == [5, 4]);
    rep.check("witness (4,5) or (5,4) with count 0", true, ok);
    Ok(rep)
}

/// Random three-element sets with entries in `1..=12`.
pub fn random_triples(seed: u64, count: usize) -> Vec<[u64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut pool: Vec<u64> = (1..=12).collect();
        pool.shuffle(&mut rng);
        let mut t = [pool[0], pool[1], pool[2]];
        t.sort_unstable();
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

fn three_generator_coherence(seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("three-generator-coherence");
    for t in random_triples(seed, 10) {
        let c = classify(&GradingSet::one_dim(&t)?)?;
        rep.line(format!("A = {{{}}}: {} primitive, {} monomial A-graded, {} incoherent", joined(t, ","), c.graver, c.census, c.incoherent));
        rep.check(&format!("A = {{{}}} incoherent", joined(t, ",")), 0, c.incoherent);
    }
    Ok(rep)
}

fn scheme_equivariance(seed: u64) -> Result<ExampleReport> {
    let mut rep = ExampleReport::new("scheme-equivariance");
    let a = grading_1347();
    let primitive = primitive_binomials(&a, &GraverOptions::default())?;
    let r = injectivity_threshold(&primitive)?;
    rep.line(format!("r = {r}"));
    let lex = TermOrder::lex(4);
    let j = buchberger(&family_ideal(&[q(1, 1), q(1, 1), q(1, 1)]), &lex)?;
    let f = ideal_to_point(&j.ideal, r)?;
    rep.check("point on scheme", true, f.on_scheme(&a)?);
    let back = point_to_ideal(&a, &f)?;
    rep.check("round trip", joined(j.elements(), ", "), joined(back.generators(), ", "));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut on, mut equi) = (0, 0);
    for _ in 0..20 {
        let lambda: Vec<BigRational> = (0..4).map(|_| rand_q(&mut rng)).collect();
        let inv: Vec<BigRational> = lambda.iter().map(|l| l.recip()).collect();
        let g = f.twisted(&lambda)?;
        on += usize::from(g.on_scheme(&a)?);
        let lhs = point_to_ideal(&a, &g)?;
        let rhs = buchberger(&j.ideal.twisted(&inv)?, &lex)?;
        equi += usize::from(lhs.generators() == rhs.elements());
    }
    rep.line(format!("{on} of 20 twisted points on the scheme, {equi} of 20 equivariant"));
    rep.check("twisted points on scheme", 20, on);
    rep.check("ideal of twisted point is the twisted ideal", 20, equi);
    Ok(rep)
}
