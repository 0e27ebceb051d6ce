//! Acceptance criteria 1 to 11, one status line each. Exact arithmetic
//! throughout; nothing is compared with a tolerance.
//!
//! `cargo test --test acceptance -- 2 7` runs only the listed criteria.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use aga::registry::{family_ideal, radical_moduli_ideal};
use aga::table1::{bracket, classify_all};
use aga_core::census::{enumerate_mono_agas, selection_of, standard_monomials, verify_selection, CensusOptions};
use aga_core::coherence::{coherence_rows, coherence_test, CoherenceVerdict};
use aga_core::geom::{is_edge, is_vertex};
use aga_core::grading::{enumerate_fiber, Binomial, Degree, DegreeBox, ExponentVector, GradingSet};
use aga_core::graver::{primitive_binomials, Completeness, GraverOptions, SearchBound};
use aga_core::groebner::{
    buchberger, initial_monomial_ideal, is_groebner_degree, toric_gb, BinomialIdeal, TermOrder,
};
use aga_core::hilbert::{hilbert_numerator, is_a_graded_monomial, semigroup_series_d1, MonomialIdeal};
use aga_core::lp::{lp_feasible, LinearConstraint, LpOutcome, Relation};
use aga_core::paramspace::{ideal_to_point, injectivity_threshold, point_to_ideal};
use aga_core::structure::{subdivision_of, torus_invariants, torus_isomorphic};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
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

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn one_dim(e: &[u64]) -> GradingSet {
    GradingSet::one_dim(e).unwrap()
}

// ---------------------------------------------------------------- 1

const LISTED_QUADRUPLES: [(&str, usize, usize, usize); 28] = [
    ("[1347]", 27, 53, 2),
    ("[1349]", 23, 38, 2),
    ("[1456]", 26, 51, 2),
    ("[1459]", 37, 90, 10),
    ("[1567]", 35, 79, 6),
    ("[1568]", 27, 58, 4),
    ("[1578]", 33, 79, 2),
    ("[1678]", 41, 112, 18),
    ("[1689]", 32, 82, 6),
    ("[1789]", 52, 174, 42),
    ("[2357]", 30, 75, 6),
    ("[2358]", 31, 83, 10),
    ("[2359]", 24, 58, 8),
    ("[2379]", 31, 82, 6),
    ("[2567]", 30, 67, 2),
    ("[2579]", 45, 168, 42),
    ("[2678]", 27, 53, 2),
    ("[2689]", 23, 38, 2),
    ("[2789]", 41, 113, 10),
    ("[3459]", 30, 63, 2),
    ("[3479]", 31, 64, 2),
    ("[3578]", 35, 88, 2),
    ("[3589]", 33, 81, 8),
    ("[4569]", 32, 84, 6),
    ("[4579]", 40, 120, 6),
    ("[5678]", 35, 90, 2),
    ("[5789]", 40, 113, 2),
    ("[6789]", 37, 94, 6),
];

fn criterion_1() -> Outcome {
    let rows = classify_all().map_err(e)?;
    ensure!(rows.len() == 126, "{} quadruples", rows.len());
    let listed: BTreeMap<&str, (usize, usize, usize)> = LISTED_QUADRUPLES.iter().map(|&(k, g, c, i)| (k, (g, c, i))).collect();
    let mut matched = 0;
    let mut problems = Vec::new();
    for (qd, c) in &rows {
        let key = bracket(qd);
        let got = (c.graver, c.census, c.incoherent);
        match listed.get(key.as_str()) {
            Some(&want) if want == got => matched += 1,
            Some(want) => problems.push(format!("{key}: expected {want:?}, got {got:?}")),
            None if c.incoherent > 0 => problems.push(format!("{key}: unlisted but {got:?}")),
            None => {}
        }
    }
    ensure!(problems.is_empty(), "{matched}/28 listed rows match; {}", problems.join("; "));
    Ok(format!("{matched}/28 listed rows match, 98 unlisted quadruples have 0 incoherent"))
}

// ---------------------------------------------------------------- 2, 3

fn incoherent_ideal() -> MonomialIdeal {
    let gens = [
        [3, 0, 0, 0], [1, 1, 0, 0], [0, 2, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1],
        [2, 0, 2, 0], [1, 0, 4, 0], [0, 1, 0, 3], [0, 0, 0, 4],
    ];
    MonomialIdeal::new(one_dim(&[1, 3, 4, 7]), gens.iter().map(|g| ev(g)).collect()).unwrap()
}

fn criterion_2() -> Outcome {
    let i = incoherent_ideal();
    let a = i.grading().clone();
    let v = is_a_graded_monomial(&i, &SearchBound::Default).map_err(e)?;
    ensure!(v.a_graded && v.completeness == Completeness::Certified, "A-graded verdict {v:?}");
    let primitive = primitive_binomials(&a, &GraverOptions::default()).map_err(e)?;
    let choice = selection_of(&i, &primitive.max_degree()).map_err(e)?;
    let sel = verify_selection(&a, &choice, &CensusOptions::default())
        .map_err(e)?
        .map_err(|r| format!("{r:?}"))?;
    let verdict = coherence_test(&sel, &primitive).map_err(e)?;
    let all = coherence_rows(&sel, &primitive).map_err(e)?;
    ensure!(verdict.verify(&all), "certificate does not verify");
    let CoherenceVerdict::Incoherent { rows, multipliers } = &verdict else {
        return Err("reported coherent".into());
    };
    let degrees: Vec<u64> = rows.iter().map(|r| r.degree[0]).collect();
    ensure!(degrees == [6, 17, 28], "rows at degrees {degrees:?}");
    let ys: Vec<BigInt> = vec![1.into(), 2.into(), 1.into()];
    ensure!(multipliers == &ys, "multipliers {multipliers:?}");
    let pairs: Vec<(ExponentVector, ExponentVector)> = rows.iter().map(|r| (r.competitor.clone(), r.standard.clone())).collect();
    let want = vec![
        (ev(&[0, 2, 0, 0]), ev(&[2, 0, 1, 0])),
        (ev(&[1, 0, 4, 0]), ev(&[0, 1, 0, 2])),
        (ev(&[0, 0, 0, 4]), ev(&[0, 0, 7, 0])),
    ];
    ensure!(pairs == want, "rows {pairs:?}");
    let (lhs, rhs) = verdict.combined_sides().unwrap();
    let side: Vec<BigInt> = [2, 2, 8, 4].iter().map(|&x| BigInt::from(x)).collect();
    ensure!(lhs == side && rhs == side, "sides {lhs:?} {rhs:?}");
    Ok("incoherent; rows 6/17/28, multipliers (1,2,1), both sides 2w1+2w2+8w3+4w4".into())
}

const STANDARD_TABLE: [&str; 28] = [
    "x1", "x1^2", "x2", "x3", "x1*x3", "x1^2*x3", "x4", "x3^2", "x1*x3^2", "x2*x4", "x3*x4", "x3^3",
    "x1*x3^3", "x4^2", "x3^2*x4", "x3^4", "x2*x4^2", "x3*x4^2", "x3^3*x4", "x3^5", "x4^3", "x3^2*x4^2",
    "x3^4*x4", "x3^6", "x3*x4^3", "x3^3*x4^2", "x3^5*x4", "x3^7",
];

fn criterion_3() -> Outcome {
    let table = standard_monomials(&incoherent_ideal(), &Degree::scalar(28)).map_err(e)?;
    let got: Vec<(u64, String)> = table
        .iter()
        .filter(|(b, _)| !b.is_zero())
        .map(|(b, u)| (b[0], u.monomial_string()))
        .collect();
    let want: Vec<(u64, String)> = STANDARD_TABLE.iter().enumerate().map(|(k, s)| (k as u64 + 1, s.to_string())).collect();
    ensure!(got == want, "table differs: {got:?}");
    Ok("28 entries equal".into())
}

// ---------------------------------------------------------------- 4

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut params: Vec<[BigRational; 3]> = Vec::new();
    for k in 0..20 {
        let c = match k % 4 {
            // a torus twist of the previous member keeps the invariant
            1 => {
                let lambda: Vec<BigRational> = (0..4).map(|_| rand_q(&mut rng)).collect();
                let t = family_ideal(&params[k - 1]).twisted(&lambda).map_err(e)?;
                let g = t.generators();
                [g[0].c().clone(), g[1].c().clone(), g[2].c().clone()]
            }
            // same invariant, not obtained by a twist
            3 => {
                let p = &params[k - 1];
                let s = rand_q(&mut rng);
                [&p[0] * &s, &p[1] * &s, &p[2] * &s]
            }
            _ => [rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng)],
        };
        params.push(c);
    }
    let ideals: Vec<BinomialIdeal> = params.iter().map(family_ideal).collect();
    for j in &ideals {
        ensure!(j.len() == 10, "{} generators", j.len());
        let gb = buchberger(j, &TermOrder::lex(4)).map_err(e)?;
        let mut want = j.generators().to_vec();
        want.sort();
        let mut got = gb.elements().to_vec();
        got.sort();
        ensure!(got == want, "lex basis differs from the generators");
        let init = gb.initial_ideal().map_err(e)?;
        ensure!(is_a_graded_monomial(&init, &SearchBound::Default).map_err(e)?.a_graded, "not A-graded");
    }
    let inv = |c: &[BigRational; 3]| &c[0] * &c[2] / (&c[1] * &c[1]);
    let (mut same, mut total) = (0, 0);
    for x in 0..ideals.len() {
        for y in x + 1..ideals.len() {
            let iso = torus_isomorphic(&ideals[x], &ideals[y]).map_err(e)?;
            ensure!(iso == (inv(&params[x]) == inv(&params[y])), "pair ({x},{y}) misclassified");
            same += usize::from(iso);
            total += 1;
        }
    }
    ensure!(same >= 10, "only {same} isomorphic pairs exercised");
    Ok(format!("20 members A-graded and reduced; {total} pairs classified ({same} isomorphic)"))
}

// ---------------------------------------------------------------- 5

fn criterion_5() -> Outcome {
    let a = one_dim(&[3, 4, 5, 13, 14]);
    let gens = [
        [3, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 2, 0, 0], [1, 0, 0, 0, 1],
        [0, 1, 0, 0, 1], [0, 0, 1, 0, 1], [0, 0, 0, 0, 2],
    ];
    let i = MonomialIdeal::new(a.clone(), gens.iter().map(|g| ev(g)).collect()).map_err(e)?;
    ensure!(is_a_graded_monomial(&i, &SearchBound::Default).map_err(e)?.a_graded, "not A-graded");
    // 1/(1-t) - t - t^2 = (1 - t + t^3)/(1-t)
    let s = semigroup_series_d1(&a).map_err(e)?;
    let mut num = s.numerator.clone();
    while num.last() == Some(&0) {
        num.pop();
    }
    ensure!(num == [1, -1, 0, 1], "series numerator {num:?}");
    let f = enumerate_fiber(&a, &Degree::scalar(15)).map_err(e)?;
    let pts: BTreeSet<ExponentVector> = f.points.iter().cloned().collect();
    let want: BTreeSet<ExponentVector> =
        [[5, 0, 0, 0, 0], [1, 3, 0, 0, 0], [2, 1, 1, 0, 0], [0, 0, 3, 0, 0]].iter().map(|p| ev(p)).collect();
    ensure!(pts == want && f.len() == 4, "fiber {pts:?}");
    let u = ev(&[2, 1, 1, 0, 0]);
    ensure!(!i.contains(&u), "(2,1,1,0,0) not standard");
    for p in &f.points {
        ensure!(is_vertex(&f, p).map_err(e)? == (p != &u), "vertex flag of {p}");
    }
    Ok("series 1/(1-t) - t - t^2, 4 fiber points, (2,1,1,0,0) standard and not a vertex".into())
}

// ---------------------------------------------------------------- 6

fn criterion_6() -> Outcome {
    let a = one_dim(&[15, 20, 23, 24]);
    let b = Degree::scalar(138);
    let p = primitive_binomials(&a, &GraverOptions::default()).map_err(e)?;
    let at: Vec<&Binomial> = p.of_degree(&b).collect();
    ensure!(at.len() == 1, "{} primitive binomials of degree 138", at.len());
    let g = at[0];
    let pair = BTreeSet::from([g.u().clone(), g.v().clone()]);
    ensure!(pair == BTreeSet::from([ev(&[2, 3, 0, 2]), ev(&[0, 0, 6, 0])]), "binomial {g}");
    let f = enumerate_fiber(&a, &b).map_err(e)?;
    ensure!(!is_edge(&f, g.u(), g.v()).map_err(e)?, "segment is an edge");
    ensure!(!is_groebner_degree(&a, &b).map_err(e)?, "138 is a Groebner degree");
    Ok("x1^2*x2^3*x4^2 - x3^6 unique; not an edge; not a Groebner degree".into())
}

// ---------------------------------------------------------------- 7

fn criterion_7() -> Outcome {
    let one = [q(1, 1), q(1, 1), q(1, 1)];
    let j = radical_moduli_ideal(&one);
    let a = j.grading().clone();
    let mono = MonomialIdeal::new(a.clone(), j.monomials().cloned().collect()).map_err(e)?;
    let sub = subdivision_of(&mono).map_err(e)?;
    let cells: BTreeSet<Vec<usize>> = sub.maximal_cells.iter().map(|c| c.sigma.iter().map(|i| i + 1).collect()).collect();
    let want: BTreeSet<Vec<usize>> = [vec![4, 5, 6], vec![1, 2, 4, 5], vec![2, 3, 5, 6], vec![1, 3, 4, 6]].into();
    ensure!(cells == want, "cells {cells:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut trivial = 0;
    for k in 0..10 {
        let (c1, c2) = (rand_q(&mut rng), rand_q(&mut rng));
        let c3 = if k % 2 == 0 { (&c1 * &c2).recip() } else { rand_q(&mut rng) };
        let c = [c1, c2, c3];
        let jc = radical_moduli_ideal(&c);
        let bins = BinomialIdeal::new(a.clone(), jc.binomials().cloned().collect()).map_err(e)?;
        let r = torus_invariants(&bins).map_err(e)?;
        let k111: Vec<Vec<BigInt>> = vec![vec![1.into(), 1.into(), 1.into()]];
        ensure!(r.kernel_basis == k111, "kernel {:?}", r.kernel_basis);
        let product = &c[0] * &c[1] * &c[2];
        ensure!(r.invariant_values == [product.clone()], "invariant {:?}", r.invariant_values);
        let iso = torus_isomorphic(&jc, &j).map_err(e)?;
        ensure!(iso == product.is_one(), "triviality wrong for {c:?}");
        trivial += usize::from(iso);
    }
    Ok(format!("4 cells; kernel (1,1,1), invariant c1*c2*c3; {trivial}/10 trivial exactly when the product is 1"))
}

// ---------------------------------------------------------------- 8

fn criterion_8() -> Outcome {
    let a = GradingSet::new(vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]).map_err(e)?;
    let p = primitive_binomials(&a, &GraverOptions::default()).map_err(e)?;
    let got: BTreeSet<BTreeSet<ExponentVector>> =
        p.binomials.iter().map(|g| BTreeSet::from([g.u().clone(), g.v().clone()])).collect();
    let want: BTreeSet<BTreeSet<ExponentVector>> = [
        ([1, 0, 1, 0], [0, 2, 0, 0]),
        ([1, 0, 0, 1], [0, 1, 1, 0]),
        ([0, 1, 0, 1], [0, 0, 2, 0]),
        ([2, 0, 0, 1], [0, 3, 0, 0]),
        ([1, 0, 0, 2], [0, 0, 3, 0]),
    ]
    .iter()
    .map(|(u, v)| BTreeSet::from([ev(u), ev(v)]))
    .collect();
    ensure!(p.len() == 5 && got == want, "primitive binomials {got:?}");
    let degs: BTreeSet<Vec<u64>> = p.degrees.iter().map(|d| d.to_vec()).collect();
    let want_d: BTreeSet<Vec<u64>> = [[4, 2], [3, 3], [2, 4], [6, 3], [3, 6]].iter().map(|d| d.to_vec()).collect();
    ensure!(degs == want_d, "degrees {degs:?}");
    let i = MonomialIdeal::new(a, vec![ev(&[1, 0, 0, 1]), ev(&[0, 2, 0, 0]), ev(&[0, 0, 2, 0])]).map_err(e)?;
    let v = is_a_graded_monomial(&i, &SearchBound::Default).map_err(e)?;
    ensure!(!v.a_graded, "reported A-graded");
    let ok = matches!(&v.witness, Some((b, 0)) if b.coords() == [4, 5] || b.coords() == [5, 4]);
    ensure!(ok, "witness {:?}", v.witness);
    Ok(format!("5 binomials, 5 degrees; not A-graded, witness {} count 0", v.witness.unwrap().0))
}

// ---------------------------------------------------------------- 9

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut seen = BTreeSet::new();
    while seen.len() < 10 {
        let mut pool: Vec<u64> = (1..=12).collect();
        pool.shuffle(&mut rng);
        let mut t = [pool[0], pool[1], pool[2]];
        t.sort_unstable();
        seen.insert(t);
    }
    let mut members = 0;
    for t in &seen {
        let a = one_dim(t);
        let census = enumerate_mono_agas(&a, &CensusOptions::default()).map_err(e)?;
        for sel in &census.selections {
            let v = coherence_test(sel, &census.primitive).map_err(e)?;
            ensure!(v.is_coherent(), "{t:?}: incoherent member {}", sel.ideal);
            ensure!(v.verify(&coherence_rows(sel, &census.primitive).map_err(e)?), "{t:?}: weight fails");
            members += 1;
        }
    }
    Ok(format!("10 triples, {members} census members, all coherent with verified weights"))
}

// ---------------------------------------------------------------- 10

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut done = Vec::new();
    while done.len() < 5 {
        let n = rng.gen_range(3..=5);
        let mut pool: Vec<u64> = (1..=13).collect();
        pool.shuffle(&mut rng);
        let mut ent = pool[..n].to_vec();
        ent.sort_unstable();
        let (p, q) = (ent[n - 2], ent[n - 1]);
        if p.gcd(&q) != 1 || ent.iter().fold(0, |g, &x| g.gcd(&x)) != 1 || done.contains(&(p, q)) {
            continue;
        }
        let a = one_dim(&ent);
        let gb = toric_gb(&a, &TermOrder::lex(n)).map_err(e)?;
        let mut x = vec![0u32; n];
        x[n - 1] = p as u32;
        let mut y = vec![0u32; n];
        y[n - 2] = q as u32;
        let target = BTreeSet::from([ev(&x), ev(&y)]);
        let found = gb
            .elements()
            .iter()
            .any(|g| !g.is_monomial() && BTreeSet::from([g.u().clone(), g.v().clone()]) == target);
        ensure!(found, "{ent:?}: x{n}^{p} - x{}^{q} missing from the lex basis", n - 1);
        let init = gb.initial_ideal().map_err(e)?;
        let degs = init.generator_degrees().map_err(e)?;
        ensure!(degs.iter().any(|b| b[0] == p * q), "{ent:?}: no generator of degree {}", p * q);
        ensure!(degs.iter().all(|b| b[0] <= p * q), "{ent:?}: generator above the bound");
        done.push((p, q));
    }
    Ok(format!("pairs {done:?}"))
}

// ---------------------------------------------------------------- 11

/// Primitive pairs by definition: same degree, disjoint supports, and no
/// common divisor degree strictly between 0 and the degree.
fn graver_oracle(a: &[u64], top: u64) -> BTreeSet<BTreeSet<Vec<u32>>> {
    let n = a.len();
    let mut by_degree: BTreeMap<u64, Vec<Vec<u32>>> = BTreeMap::new();
    fn rec(a: &[u64], top: u64, i: usize, deg: u64, u: &mut Vec<u32>, out: &mut BTreeMap<u64, Vec<Vec<u32>>>) {
        if i == a.len() {
            out.entry(deg).or_default().push(u.clone());
            return;
        }
        let mut k = 0;
        while deg + k * a[i] <= top {
            u[i] = k as u32;
            rec(a, top, i + 1, deg + k * a[i], u, out);
            k += 1;
        }
        u[i] = 0;
    }
    rec(a, top, 0, 0, &mut vec![0; n], &mut by_degree);
    let divisor_degrees = |u: &[u32]| -> BTreeSet<u64> {
        let mut s = BTreeSet::from([0u64]);
        for (i, &x) in u.iter().enumerate() {
            let prev: Vec<u64> = s.iter().copied().collect();
            for d in prev {
                for k in 1..=x as u64 {
                    s.insert(d + k * a[i]);
                }
            }
        }
        s
    };
    let mut out = BTreeSet::new();
    for (&b, mons) in &by_degree {
        for (x, u) in mons.iter().enumerate() {
            for v in &mons[x + 1..] {
                if u.iter().zip(v).any(|(p, q)| p * q != 0) {
                    continue;
                }
                let du = divisor_degrees(u);
                let dv = divisor_degrees(v);
                if du.intersection(&dv).all(|&d| d == 0 || d == b) {
                    out.insert(BTreeSet::from([u.clone(), v.clone()]));
                }
            }
        }
    }
    out
}

fn suite_graver() -> Result<usize, String> {
    let mut sets = 0;
    for mask in 1u32..1 << 9 {
        if mask.count_ones() > 3 {
            continue;
        }
        let entries: Vec<u64> = (0..9).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let a = one_dim(&entries);
        let norm: Vec<u64> = a.columns().iter().map(|c| c[0]).collect();
        let mut s = norm.clone();
        s.sort_unstable();
        let bound = if s.len() < 2 { 0 } else { s[s.len() - 2] * s[s.len() - 1] };
        let want = graver_oracle(&norm, 2 * bound);
        let p = primitive_binomials(&a, &GraverOptions::default()).map_err(e)?;
        let got: BTreeSet<BTreeSet<Vec<u32>>> =
            p.binomials.iter().map(|g| BTreeSet::from([g.u().to_vec(), g.v().to_vec()])).collect();
        ensure!(got == want, "primitive binomials of {entries:?} differ from the oracle");
        sets += 1;
    }
    Ok(sets)
}

/// Coefficients of `prod 1/(1 - t^{a_i})` up to `cap` (one dimension).
fn series(a: &[u64], cap: usize) -> Vec<u64> {
    let mut c = vec![0u64; cap + 1];
    c[0] = 1;
    for &x in a {
        for m in x as usize..=cap {
            c[m] += c[m - x as usize];
        }
    }
    c
}

fn suite_fibers(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut checked = 0;
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let mut pool: Vec<u64> = (1..=12).collect();
        pool.shuffle(rng);
        let a = one_dim(&pool[..n]);
        let norm: Vec<u64> = a.columns().iter().map(|c| c[0]).collect();
        let want = series(&norm, 40);
        for b in 0..=40u64 {
            let f = enumerate_fiber(&a, &Degree::scalar(b)).map_err(e)?;
            ensure!(f.len() as u64 == want[b as usize], "{norm:?} degree {b}");
            checked += 1;
        }
    }
    // two dimensions: count by brute force over a box of exponents
    let a = GradingSet::new(vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]).map_err(e)?;
    let mut counts: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for u in 0..=4u64 {
        for v in 0..=6u64 {
            for w in 0..=6u64 {
                for x in 0..=4u64 {
                    *counts.entry((3 * u + 2 * v + w, v + 2 * w + 3 * x)).or_default() += 1;
                }
            }
        }
    }
    for b0 in 0..=12u64 {
        for b1 in 0..=12u64 {
            let f = enumerate_fiber(&a, &Degree::new(vec![b0, b1])).map_err(e)?;
            ensure!(f.len() as u64 == counts.get(&(b0, b1)).copied().unwrap_or(0), "({b0},{b1})");
            checked += 1;
        }
    }
    Ok(checked)
}

fn suite_lp(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let (mut feas, mut infeas) = (0, 0);
    for _ in 0..1000 {
        let dim = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=7);
        let cs: Vec<LinearConstraint> = (0..m)
            .map(|_| {
                let row: Vec<BigRational> = (0..dim).map(|_| q(rng.gen_range(-3..=3), 1)).collect();
                let rhs = q(rng.gen_range(-3..=3), 1);
                if rng.gen_bool(0.25) {
                    LinearConstraint::eq(row, rhs)
                } else {
                    LinearConstraint::ge(row, rhs)
                }
            })
            .collect();
        match lp_feasible(dim, &cs).map_err(e)? {
            LpOutcome::Feasible(x) => {
                ensure!(cs.iter().all(|c| c.is_satisfied_by(&x)), "point violates a constraint");
                feas += 1;
            }
            LpOutcome::Infeasible(cert) => {
                let mut combo = vec![BigRational::zero(); dim];
                let mut rhs = BigRational::zero();
                for (c, y) in cs.iter().zip(&cert.multipliers) {
                    ensure!(c.relation != Relation::Ge || !y.is_negative(), "negative multiplier on an inequality");
                    for (k, x) in c.normal.iter().enumerate() {
                        combo[k] += y * x;
                    }
                    rhs += y * &c.rhs;
                }
                ensure!(combo.iter().all(Zero::is_zero) && rhs.is_positive(), "certificate fails");
                infeas += 1;
            }
        }
    }
    ensure!(feas > 100 && infeas > 100, "{feas} feasible, {infeas} infeasible");
    Ok(1000)
}

fn suite_hilbert(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let mut pool: Vec<u64> = (1..=9).collect();
        pool.shuffle(rng);
        let a = one_dim(&pool[..n]);
        let gens: Vec<ExponentVector> = (0..rng.gen_range(0..=5))
            .map(|_| ExponentVector::new((0..n).map(|_| rng.gen_range(0..=3)).collect()))
            .filter(|g| !g.is_zero())
            .collect();
        let i = MonomialIdeal::new(a.clone(), gens).map_err(e)?;
        let (bx, got) = hilbert_numerator(&i)
            .map_err(e)?
            .expand(&a, &Degree::scalar(60), 1 << 20)
            .map_err(e)?;
        let want: Vec<BigInt> = bx
            .degrees()
            .map(|b| {
                let f = enumerate_fiber(&a, &b).unwrap();
                BigInt::from(f.points.iter().filter(|u| !i.contains(u)).count())
            })
            .collect();
        ensure!(got == want, "Hilbert coefficients of {i}");
    }
    Ok(40)
}

fn suite_census(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut checked = 0;
    for ent in [vec![1, 3, 4, 7], vec![2, 3, 5], vec![3, 4, 5, 7]] {
        let a = one_dim(&ent);
        let census = enumerate_mono_agas(&a, &CensusOptions::default()).map_err(e)?;
        let members: BTreeSet<Vec<ExponentVector>> =
            census.selections.iter().map(|s| s.ideal.generators().to_vec()).collect();
        for s in &census.selections {
            // soundness by direct counting past the largest primitive degree
            let top = 2 * census.primitive.max_degree()[0] + 10;
            let bx = DegreeBox::new(&Degree::scalar(top), 1 << 20).map_err(e)?;
            let reach = series(&a.columns().iter().map(|c| c[0]).collect::<Vec<_>>(), top as usize);
            for b in bx.degrees() {
                let f = enumerate_fiber(&a, &b).map_err(e)?;
                let std = f.points.iter().filter(|u| !s.ideal.contains(u)).count();
                ensure!(std == usize::from(reach[b[0] as usize] > 0), "{}: {std} standard in degree {b}", s.ideal);
            }
        }
        for _ in 0..50 {
            let w: Vec<BigRational> = (0..a.n()).map(|_| q(rng.gen_range(0..=40), 1)).collect();
            let init = initial_monomial_ideal(&a, &w, Some((0..a.n()).collect())).map_err(e)?;
            ensure!(members.contains(init.ideal.generators()), "{ent:?}: initial ideal {} missing", init.ideal);
            checked += 1;
        }
    }
    Ok(checked)
}

fn suite_scheme(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let a = one_dim(&[1, 3, 4, 7]);
    let r = injectivity_threshold(&primitive_binomials(&a, &GraverOptions::default()).map_err(e)?).map_err(e)?;
    let lex = TermOrder::lex(4);
    let mono = incoherent_ideal();
    let monomial = BinomialIdeal::new(a.clone(), mono.generators().iter().cloned().map(Binomial::monomial).collect())
        .map_err(e)?;
    let mut twists = 0;
    for j in [family_ideal(&[q(2, 1), q(-1, 3), q(5, 2)]), monomial] {
        let gb = buchberger(&j, &lex).map_err(e)?;
        let f = ideal_to_point(&gb.ideal, r).map_err(e)?;
        ensure!(f.on_scheme(&a).map_err(e)?, "point off the scheme");
        ensure!(point_to_ideal(&a, &f).map_err(e)?.generators() == gb.elements(), "round trip differs");
        for _ in 0..20 {
            let lambda: Vec<BigRational> = (0..4).map(|_| rand_q(rng)).collect();
            let inv: Vec<BigRational> = lambda.iter().map(|l| l.recip()).collect();
            let g = f.twisted(&lambda).map_err(e)?;
            ensure!(g.on_scheme(&a).map_err(e)?, "twisted point off the scheme");
            let lhs = point_to_ideal(&a, &g).map_err(e)?;
            let rhs = buchberger(&gb.ideal.twisted(&inv).map_err(e)?, &lex).map_err(e)?;
            ensure!(lhs.generators() == rhs.elements(), "twist not equivariant");
            twists += 1;
        }
    }
    Ok(twists)
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = suite_graver()?;
    let f = suite_fibers(&mut rng)?;
    let l = suite_lp(&mut rng)?;
    let h = suite_hilbert(&mut rng)?;
    let c = suite_census(&mut rng)?;
    let s = suite_scheme(&mut rng)?;
    Ok(format!(
        "graver {g} sets, fibers {f} degrees, lp {l} systems, hilbert {h} ideals, census {c} weights, scheme {s} twists"
    ))
}

// ----------------------------------------------------------------

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "quadruple classification", limit: Duration::from_secs(900), run: criterion_1 },
        Criterion { id: 2, title: "incoherence certificate", limit: Duration::from_secs(1), run: criterion_2 },
        Criterion { id: 3, title: "standard-monomial table", limit: Duration::from_secs(1), run: criterion_3 },
        Criterion { id: 4, title: "flat family and its invariant", limit: Duration::from_secs(5), run: criterion_4 },
        Criterion { id: 5, title: "standard monomial off the vertices", limit: Duration::from_secs(1), run: criterion_5 },
        Criterion { id: 6, title: "primitive but not Groebner degree", limit: Duration::from_secs(30), run: criterion_6 },
        Criterion { id: 7, title: "subdivision and torus invariant", limit: Duration::from_secs(5), run: criterion_7 },
        Criterion { id: 8, title: "twisted cubic", limit: Duration::from_secs(1), run: criterion_8 },
        Criterion { id: 9, title: "three-element coherence spot check", limit: Duration::from_secs(120), run: criterion_9 },
        Criterion { id: 10, title: "degree bound attained", limit: Duration::from_secs(60), run: criterion_10 },
        Criterion { id: 11, title: "property suites", limit: Duration::from_secs(600), run: criterion_11 },
    ];
    let selected: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = Vec::new();
    for c in criteria.iter().filter(|c| selected.is_empty() || selected.contains(&c.id)) {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > c.limit => Err(format!("{d}; took {took:.1?}, limit {:?}", c.limit)),
            o => o,
        };
        match &outcome {
            Ok(d) => println!("criterion {:>2} PASS  {} ({took:.1?}): {d}", c.id, c.title),
            Err(d) => {
                println!("criterion {:>2} FAIL  {} ({took:.1?}): {d}", c.id, c.title);
                failed.push(c.id);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
