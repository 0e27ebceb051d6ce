//! Buchberger's algorithm specialized to binomial ideals, toric ideals and
//! their initial ideals, and the edge criteria for Gröbner degrees.
//!
//! Every element is `x^u - c x^v` or a monomial `x^u`. S-pairs and
//! reductions of such elements have at most two terms, so the engine never
//! leaves this class. All ideals here are `A`-homogeneous, so a weight
//! order with arbitrary signs is a valid term order degree by degree.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::is_edge;
use crate::graver::{is_primitive, primitive_binomials, GraverOptions};
use crate::grading::{degree_of, enumerate_fiber, Binomial, Degree, ExponentVector, GradingSet};
use crate::hilbert::MonomialIdeal;
use crate::lattice::integer_kernel;

/// A monomial order. Weight orders compare `omega . u` first and let the
/// larger weight lead; ties fall through to the lex tiebreak.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Lex with `x_{perm[0]} > x_{perm[1]} > ...`.
    Lex(Vec<usize>),
    Weight {
        omega: Vec<BigRational>,
        tiebreak: Vec<usize>,
    },
}

impl TermOrder {
    /// `x_1 > x_2 > ... > x_n`.
    pub fn lex(n: usize) -> Self {
        TermOrder::Lex((0..n).collect())
    }

    pub fn weight(omega: Vec<BigRational>) -> Self {
        let n = omega.len();
        TermOrder::Weight {
            omega,
            tiebreak: (0..n).collect(),
        }
    }

    pub fn weight_int(omega: &[i64]) -> Self {
        Self::weight(omega.iter().map(|&w| BigRational::from_integer(w.into())).collect())
    }

    pub fn weight_with_tiebreak(omega: Vec<BigRational>, tiebreak: Vec<usize>) -> Self {
        TermOrder::Weight { omega, tiebreak }
    }

    fn perm(&self) -> &[usize] {
        match self {
            TermOrder::Lex(p) => p,
            TermOrder::Weight { tiebreak, .. } => tiebreak,
        }
    }

    /// Comparison by the weight alone (`Equal` for lex orders).
    pub fn weight_cmp(&self, u: &ExponentVector, v: &ExponentVector) -> Ordering {
        match self {
            TermOrder::Lex(_) => Ordering::Equal,
            TermOrder::Weight { omega, .. } => weigh(omega, u).cmp(&weigh(omega, v)),
        }
    }

    pub fn cmp(&self, u: &ExponentVector, v: &ExponentVector) -> Ordering {
        self.weight_cmp(u, v).then_with(|| {
            for &i in self.perm() {
                match u[i].cmp(&v[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    fn check(&self, n: usize) -> Result<()> {
        let perm = self.perm();
        let mut seen = vec![false; n];
        let valid = perm.len() == n && perm.iter().all(|&i| i < n && !core::mem::replace(&mut seen[i], true));
        if !valid {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: perm.len(),
            });
        }
        if let TermOrder::Weight { omega, .. } = self {
            if omega.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: omega.len(),
                });
            }
        }
        Ok(())
    }
}

fn weigh(omega: &[BigRational], u: &ExponentVector) -> BigRational {
    omega
        .iter()
        .zip(u.iter())
        .filter(|(_, &e)| e != 0)
        .map(|(w, &e)| w * BigRational::from_integer(BigInt::from(e)))
        .sum()
}

/// An `A`-homogeneous ideal generated by binomials and monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialIdeal {
    grading: GradingSet,
    generators: Vec<Binomial>,
}

impl BinomialIdeal {
    /// Checks that every binomial is homogeneous.
    pub fn new(grading: GradingSet, generators: Vec<Binomial>) -> Result<Self> {
        for g in &generators {
            let du = degree_of(&grading, g.u())?;
            if !g.is_monomial() {
                if degree_of(&grading, g.v())? != du {
                    return Err(Error::DegreeMismatch);
                }
                if g.u() == g.v() {
                    return Err(Error::DegenerateBinomial);
                }
            }
        }
        Ok(BinomialIdeal {
            grading,
            generators,
        })
    }

    pub fn grading(&self) -> &GradingSet {
        &self.grading
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generators that are genuine binomials.
    pub fn binomials(&self) -> impl Iterator<Item = &Binomial> {
        self.generators.iter().filter(|g| !g.is_monomial())
    }

    /// Generators that are monomials.
    pub fn monomials(&self) -> impl Iterator<Item = &ExponentVector> {
        self.generators.iter().filter(|g| g.is_monomial()).map(Binomial::u)
    }

    /// The image under `x_i -> lambda_i x_i`: `x^u - c x^v` becomes
    /// `x^u - c lambda^{v - u} x^v` after rescaling to a monic lead.
    pub fn twisted(&self, lambda: &[BigRational]) -> Result<BinomialIdeal> {
        if lambda.len() != self.grading.n() {
            return Err(Error::DimensionMismatch {
                expected: self.grading.n(),
                found: lambda.len(),
            });
        }
        if lambda.iter().any(Zero::is_zero) {
            return Err(Error::ZeroCoefficient);
        }
        let generators = self
            .generators
            .iter()
            .map(|g| {
                if g.is_monomial() {
                    return g.clone();
                }
                let c = g.c() * character(lambda, &g.v().difference(g.u()));
                Binomial::oriented(g.u().clone(), g.v().clone(), c)
            })
            .collect();
        Ok(BinomialIdeal {
            grading: self.grading.clone(),
            generators,
        })
    }
}

/// `prod_i lambda_i^{z_i}`.
pub fn character(lambda: &[BigRational], z: &[i64]) -> BigRational {
    let mut out = BigRational::one();
    for (l, &e) in lambda.iter().zip(z) {
        let p = num_traits::pow(l.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            out *= p;
        } else {
            out /= p;
        }
    }
    out
}

/// Up to two terms, sorted decreasing, monic, nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<(ExponentVector, BigRational)>);

impl Poly {
    fn build(ord: &TermOrder, mut terms: Vec<(ExponentVector, BigRational)>) -> Option<Poly> {
        terms.sort_by(|x, y| ord.cmp(&y.0, &x.0));
        let mut merged: Vec<(ExponentVector, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|t| !t.1.is_zero());
        let lc = merged.first()?.1.clone();
        for t in merged.iter_mut() {
            t.1 /= &lc;
        }
        Some(Poly(merged))
    }

    fn from_binomial(ord: &TermOrder, g: &Binomial) -> Option<Poly> {
        let mut terms = vec![(g.u().clone(), BigRational::one())];
        if !g.is_monomial() {
            terms.push((g.v().clone(), -g.c().clone()));
        }
        Poly::build(ord, terms)
    }

    fn lead(&self) -> &ExponentVector {
        &self.0[0].0
    }

    fn to_binomial(&self) -> Binomial {
        match &self.0[..] {
            [(u, _)] => Binomial::monomial(u.clone()),
            [(u, _), (v, q)] => Binomial::oriented(u.clone(), v.clone(), -q.clone()),
            _ => unreachable!("binomial arithmetic produced more than two terms"),
        }
    }

    /// `self - q x^shift g`.
    fn minus_multiple(&self, ord: &TermOrder, q: &BigRational, shift: &ExponentVector, g: &Poly) -> Option<Poly> {
        let mut terms = self.0.clone();
        for (m, c) in &g.0 {
            terms.push((m.add(shift), -(q * c)));
        }
        Poly::build(ord, terms)
    }
}

fn spoly(ord: &TermOrder, f: &Poly, g: &Poly) -> Option<Poly> {
    let l = f.lead().lcm(g.lead());
    let sf = l.checked_sub(f.lead()).expect("lcm");
    let sg = l.checked_sub(g.lead()).expect("lcm");
    let mut terms: Vec<(ExponentVector, BigRational)> = f.0.iter().map(|(m, c)| (m.add(&sf), c.clone())).collect();
    terms.extend(g.0.iter().map(|(m, c)| (m.add(&sg), -c.clone())));
    Poly::build(ord, terms)
}

/// Full reduction: every term is reduced until no lead of `basis` divides it.
fn normal_form(ord: &TermOrder, mut f: Option<Poly>, basis: &[Poly]) -> Option<Poly> {
    'outer: loop {
        let p = f?;
        for k in 0..p.0.len() {
            let (m, q) = &p.0[k];
            if let Some(g) = basis.iter().find(|g| g.lead().divides(m)) {
                let shift = m.checked_sub(g.lead()).expect("divides");
                f = p.minus_multiple(ord, q, &shift, g);
                continue 'outer;
            }
        }
        return Some(p);
    }
}

/// A reduced Gröbner basis together with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    /// Monic, lead term first, sorted by degree (graded-lex) then lead.
    pub ideal: BinomialIdeal,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Binomial] {
        &self.ideal.generators
    }

    /// The ideal of leading monomials.
    pub fn initial_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(
            self.ideal.grading.clone(),
            self.ideal.generators.iter().map(|g| g.u().clone()).collect(),
        )
    }

    fn polys(&self) -> Vec<Poly> {
        self.ideal
            .generators
            .iter()
            .filter_map(|g| Poly::from_binomial(&self.order, g))
            .collect()
    }

    /// Normal form of the monomial `x^u`: `Some((c, w))` for `c x^w`,
    /// `None` if `x^u` lies in the ideal.
    pub fn reduce_monomial(&self, u: &ExponentVector) -> Option<(BigRational, ExponentVector)> {
        let mut cur = u.clone();
        let mut coeff = BigRational::one();
        while let Some(g) = self.ideal.generators.iter().find(|g| g.u().divides(&cur)) {
            if g.is_monomial() {
                return None;
            }
            let shift = cur.checked_sub(g.u()).expect("divides");
            coeff *= g.c();
            cur = g.v().add(&shift);
        }
        Some((coeff, cur))
    }

    /// Whether `x^u - c x^v` lies in the ideal.
    pub fn contains(&self, g: &Binomial) -> bool {
        let basis = self.polys();
        normal_form(&self.order, Poly::from_binomial(&self.order, g), &basis).is_none()
    }
}

/// Reduced Gröbner basis of `j` under `ord`.
pub fn buchberger(j: &BinomialIdeal, ord: &TermOrder) -> Result<GroebnerBasis> {
    let a = &j.grading;
    ord.check(a.n())?;
    let mut basis: Vec<Poly> = Vec::new();
    // pending pairs keyed by (lcm degree, lcm) for normal selection
    let mut pending: BTreeSet<(u64, Degree, ExponentVector, usize, usize)> = BTreeSet::new();
    let mut pending_idx: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |basis: &mut Vec<Poly>,
                    pending: &mut BTreeSet<(u64, Degree, ExponentVector, usize, usize)>,
                    pending_idx: &mut BTreeSet<(usize, usize)>,
                    p: Poly|
     -> Result<()> {
        let k = basis.len();
        for (i, q) in basis.iter().enumerate() {
            let l = q.lead().lcm(p.lead());
            let deg = degree_of(a, &l)?;
            pending.insert((deg.total(), deg, l, i, k));
            pending_idx.insert((i, k));
        }
        basis.push(p);
        Ok(())
    };

    for g in &j.generators {
        let reduced = normal_form(ord, Poly::from_binomial(ord, g), &basis);
        if let Some(p) = reduced {
            push(&mut basis, &mut pending, &mut pending_idx, p)?;
        }
    }
    while let Some((_, _, l, i, k)) = pending.pop_first() {
        pending_idx.remove(&(i, k));
        let (fi, fk) = (&basis[i], &basis[k]);
        if fi.lead().gcd(fk.lead()).is_zero() {
            continue;
        }
        let chain = (0..basis.len()).any(|m| {
            m != i
                && m != k
                && basis[m].lead().divides(&l)
                && !pending_idx.contains(&(i.min(m), i.max(m)))
                && !pending_idx.contains(&(k.min(m), k.max(m)))
        });
        if chain {
            continue;
        }
        let s = spoly(ord, fi, fk);
        if let Some(h) = normal_form(ord, s, &basis) {
            push(&mut basis, &mut pending, &mut pending_idx, h)?;
        }
    }
    reduce_basis(a, ord, basis)
}

fn reduce_basis(a: &GradingSet, ord: &TermOrder, basis: Vec<Poly>) -> Result<GroebnerBasis> {
    // minimal: drop elements whose lead is divisible by another lead
    let mut minimal: Vec<Poly> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|x, y| x.lead().total().cmp(&y.lead().total()).then_with(|| ord.cmp(x.lead(), y.lead())));
    for p in sorted {
        if !minimal.iter().any(|q| q.lead().divides(p.lead())) {
            minimal.push(p);
        }
    }
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .map(|(_, p)| p.clone())
            .collect();
        let p = normal_form(ord, Some(minimal[k].clone()), &others).ok_or_else(|| {
            Error::Inconsistent("element of a minimal basis reduced to zero".into())
        })?;
        reduced.push(p);
    }
    let mut gens: Vec<(Degree, Binomial)> = reduced
        .iter()
        .map(|p| Ok((degree_of(a, p.lead())?, p.to_binomial())))
        .collect::<Result<_>>()?;
    gens.sort_by(|x, y| x.0.graded_cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
    Ok(GroebnerBasis {
        order: ord.clone(),
        ideal: BinomialIdeal {
            grading: a.clone(),
            generators: gens.into_iter().map(|(_, g)| g).collect(),
        },
    })
}

/// The toric ideal generated by the primitive binomials found within the
/// default (or given) bound. Complete for `d = 1`.
pub fn toric_generators(a: &GradingSet, opts: &GraverOptions) -> Result<BinomialIdeal> {
    let p = primitive_binomials(a, opts)?;
    BinomialIdeal::new(a.clone(), p.binomials)
}

/// Reduced Gröbner basis of `I_A`, seeded from the primitive binomials.
pub fn toric_gb(a: &GradingSet, ord: &TermOrder) -> Result<GroebnerBasis> {
    toric_gb_with(a, ord, &GraverOptions::default())
}

pub fn toric_gb_with(a: &GradingSet, ord: &TermOrder, opts: &GraverOptions) -> Result<GroebnerBasis> {
    buchberger(&toric_generators(a, opts)?, ord)
}

/// `I_A` without any degree bound: lattice-basis binomials saturated by
/// every variable in turn.
///
/// Saturating by `x_i` uses the weight `-e_i`, under which the lead term
/// carries the least power of `x_i` of all terms; dividing each basis
/// element by that power generates `J : x_i^infinity`.
pub fn toric_ideal_by_saturation(a: &GradingSet) -> Result<BinomialIdeal> {
    let n = a.n();
    let rows: Vec<Vec<i64>> = a
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).map_err(|_| Error::Overflow)).collect())
        .collect::<Result<_>>()?;
    let kernel = integer_kernel(&rows, n);
    let mut gens: Vec<Binomial> = Vec::with_capacity(kernel.len());
    for z in kernel {
        let mut u = vec![0u32; n];
        let mut v = vec![0u32; n];
        for (i, x) in z.iter().enumerate() {
            let e = u32::try_from(x.abs()).map_err(|_| Error::Overflow)?;
            if x.is_positive() {
                u[i] = e;
            } else {
                v[i] = e;
            }
        }
        gens.push(Binomial::pure(ExponentVector::new(u), ExponentVector::new(v)));
    }
    let mut j = BinomialIdeal::new(a.clone(), gens)?;
    for i in 0..n {
        let mut omega = vec![BigRational::zero(); n];
        omega[i] = -BigRational::one();
        let gb = buchberger(&j, &TermOrder::weight(omega))?;
        let gens = gb
            .ideal
            .generators
            .into_iter()
            .map(|g| {
                let k = g.u()[i];
                let strip = |w: &ExponentVector| {
                    let mut x = w.clone().into_inner();
                    x[i] -= k;
                    ExponentVector::new(x)
                };
                if g.is_monomial() {
                    Binomial::monomial(strip(g.u()))
                } else {
                    Binomial::oriented(strip(g.u()), strip(g.v()), g.c().clone())
                }
            })
            .collect();
        j = BinomialIdeal::new(a.clone(), gens)?;
    }
    Ok(j)
}

/// `in_omega(I_A)` as a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialIdeal {
    pub ideal: MonomialIdeal,
    /// The weight alone left ties that the lex tiebreak resolved.
    pub tiebreak_used: bool,
}

/// The monomial initial ideal of `I_A` under `omega` (larger weight leads,
/// so standard monomials are weight-minimal in their fibers). With ties and
/// no tiebreak the weight is rejected as degenerate.
pub fn initial_monomial_ideal(
    a: &GradingSet,
    omega: &[BigRational],
    tiebreak: Option<Vec<usize>>,
) -> Result<InitialIdeal> {
    initial_monomial_ideal_with(a, omega, tiebreak, &GraverOptions::default())
}

pub fn initial_monomial_ideal_with(
    a: &GradingSet,
    omega: &[BigRational],
    tiebreak: Option<Vec<usize>>,
    opts: &GraverOptions,
) -> Result<InitialIdeal> {
    let explicit = tiebreak.is_some();
    let perm = tiebreak.unwrap_or_else(|| (0..a.n()).collect());
    let ord = TermOrder::weight_with_tiebreak(omega.to_vec(), perm);
    let gb = toric_gb_with(a, &ord, opts)?;
    let tiebreak_used = gb
        .elements()
        .iter()
        .any(|g| !g.is_monomial() && ord.weight_cmp(g.u(), g.v()) == Ordering::Equal);
    if tiebreak_used && !explicit {
        return Err(Error::DegenerateWeight);
    }
    Ok(InitialIdeal {
        ideal: gb.initial_ideal()?,
        tiebreak_used,
    })
}

/// Primitive direction of `v - u`, sign-normalized (first nonzero positive).
pub fn edge_direction(u: &ExponentVector, v: &ExponentVector) -> Vec<i64> {
    let mut d = v.difference(u);
    let g = d.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    if g > 1 {
        for x in d.iter_mut() {
            *x /= g;
        }
    }
    if d.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in d.iter_mut() {
            *x = -*x;
        }
    }
    d
}

/// Directions of all edges of `P[b]`.
pub fn fiber_edge_directions(a: &GradingSet, b: &Degree) -> Result<BTreeSet<Vec<i64>>> {
    let f = enumerate_fiber(a, b)?;
    let mut out = BTreeSet::new();
    for (k, u) in f.points.iter().enumerate() {
        for v in &f.points[k + 1..] {
            if is_edge(&f, u, v)? {
                out.insert(edge_direction(u, v));
            }
        }
    }
    Ok(out)
}

/// Some edge of `P[b]` is parallel to no edge of any `P[b']` with
/// `b' in NA`, `b' <= b`, `b' != b`.
pub fn is_groebner_degree(a: &GradingSet, b: &Degree) -> Result<bool> {
    let f = enumerate_fiber(a, b)?;
    if f.is_empty() {
        return Err(Error::NotInSemigroup(b.clone()));
    }
    let top = fiber_edge_directions(a, b)?;
    if top.is_empty() {
        return Ok(false);
    }
    let mut lower: BTreeSet<Vec<i64>> = BTreeSet::new();
    for bp in crate::grading::semigroup_members_up_to(a, b)? {
        if &bp == b {
            continue;
        }
        lower.extend(fiber_edge_directions(a, &bp)?);
        if top.is_subset(&lower) {
            return Ok(false);
        }
    }
    Ok(!top.is_subset(&lower))
}

/// A primitive binomial lies in some reduced Gröbner basis of `I_A` iff
/// its two terms span an edge of their fiber.
pub fn in_some_reduced_gb(a: &GradingSet, g: &Binomial) -> Result<bool> {
    if g.is_monomial() {
        return Err(Error::NotPrimitive);
    }
    if !is_primitive(a, g.u(), g.v())? {
        return Err(Error::NotPrimitive);
    }
    let f = enumerate_fiber(a, &degree_of(a, g.u())?)?;
    is_edge(&f, g.u(), g.v())
}
