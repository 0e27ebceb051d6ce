//! Hilbert series of monomial ideals in the `A`-grading, and the exact
//! test for a monomial quotient to be `A`-graded.
//!
//! The numerator `N(I)` of `H(S/I; t) = N(I) / prod_i (1 - t^{a_i})` is
//! computed by pivot splitting
//!
//! ```text
//! N(I) = N(I + <p>) + t^{deg p} N(I : p)
//! ```
//!
//! with `p` a pure power of a variable shared by two generators.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graver::{default_cap, zonotope_box, Completeness, SearchBound};
use crate::grading::{
    degree_of, fiber_counts, semigroup_table, Degree, DegreeBox, ExponentVector, Fiber,
    GradingSet, DEFAULT_BOX_LIMIT,
};

/// A monomial ideal given by its minimal generators, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    grading: GradingSet,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalizes and sorts the generators.
    pub fn new(grading: GradingSet, generators: Vec<ExponentVector>) -> Result<Self> {
        for g in &generators {
            grading.check_exponent(g)?;
        }
        Ok(MonomialIdeal {
            grading,
            generators: minimalize(generators),
        })
    }

    pub fn zero(grading: GradingSet) -> Self {
        MonomialIdeal {
            grading,
            generators: Vec::new(),
        }
    }

    pub fn grading(&self) -> &GradingSet {
        &self.grading
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    /// Monomials of the fiber outside the ideal.
    pub fn standard_in<'a>(&'a self, fiber: &'a Fiber) -> impl Iterator<Item = &'a ExponentVector> {
        fiber.points.iter().filter(move |u| !self.contains(u))
    }

    /// Degrees of the minimal generators.
    pub fn generator_degrees(&self) -> Result<Vec<Degree>> {
        self.generators
            .iter()
            .map(|g| degree_of(&self.grading, g))
            .collect()
    }

    /// The ideal generated by the squarefree parts of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            grading: self.grading.clone(),
            generators: minimalize(self.generators.iter().map(|g| g.squarefree()).collect()),
        }
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.grading != other.grading {
            return Err(Error::Inconsistent("intersecting ideals over different gradings".into()));
        }
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for g in &self.generators {
            for h in &other.generators {
                gens.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.grading.clone(), gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&g.monomial_string())?;
        }
        f.write_str(">")
    }
}

/// Drop generators divisible by another one, dedupe, sort.
pub fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by_key(|g| g.total());
    gens.dedup();
    let mut out: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

/// A Laurent-free polynomial in `t_1..t_d` with exponents in `N^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    d: usize,
    terms: BTreeMap<Degree, BigInt>,
}

impl HilbertNumerator {
    pub fn zero(d: usize) -> Self {
        HilbertNumerator {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(d: usize) -> Self {
        Self::monomial(Degree::zero(d), BigInt::one())
    }

    pub fn monomial(b: Degree, c: BigInt) -> Self {
        let mut p = Self::zero(b.len());
        p.add_term(b, c);
        p
    }

    /// `1 - t^b`.
    pub fn one_minus(b: &Degree) -> Self {
        let mut p = Self::one(b.len());
        p.add_term(b.clone(), -BigInt::one());
        p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Degree, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, b: &Degree) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: Degree, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.d);
        for (b, c) in &self.terms {
            for (b2, c2) in &other.terms {
                let s = b.checked_add(b2).expect("degree overflow in numerator");
                out.add_term(s, c * c2);
            }
        }
        out
    }

    /// Multiply by `t^b`.
    pub fn shift(&self, b: &Degree) -> Self {
        HilbertNumerator {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.checked_add(b).expect("degree overflow in numerator"), c.clone()))
                .collect(),
        }
    }

    /// Lowest term in graded-lex order.
    pub fn lowest_term(&self) -> Option<(&Degree, &BigInt)> {
        self.terms.iter().min_by(|x, y| x.0.graded_cmp(y.0))
    }

    /// Coefficients of `self / prod_i (1 - t^{a_i})` over the box `[0, cap]`.
    pub fn expand(&self, a: &GradingSet, cap: &Degree, limit: usize) -> Result<(DegreeBox, Vec<BigInt>)> {
        let (bx, counts) = fiber_counts(a, cap, limit)?;
        let mut out = vec![BigInt::zero(); bx.size()];
        for (b, c) in &self.terms {
            if bx.index(b).is_none() {
                continue;
            }
            for idx in 0..bx.size() {
                let t = bx.degree(idx);
                if let Some(rest) = t.checked_sub(b) {
                    let r = bx.index(&rest).expect("inside box");
                    if counts[r] != 0 {
                        out[idx] += c * BigInt::from(counts[r]);
                    }
                }
            }
        }
        Ok((bx, out))
    }
}

impl fmt::Display for HilbertNumerator {
    /// One term per line, `coeff @ degree`, graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|x, y| x.0.graded_cmp(y.0));
        for (b, c) in terms {
            writeln!(f, "{c} @ {b}")?;
        }
        Ok(())
    }
}

/// `N(I)` with `H(S/I) = N(I) / prod_i (1 - t^{a_i})`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Result<HilbertNumerator> {
    let a = &ideal.grading;
    numerator_rec(a, ideal.generators.clone())
}

fn numerator_rec(a: &GradingSet, gens: Vec<ExponentVector>) -> Result<HilbertNumerator> {
    let d = a.d();
    if gens.is_empty() {
        return Ok(HilbertNumerator::one(d));
    }
    if gens.iter().any(|g| g.is_zero()) {
        return Ok(HilbertNumerator::zero(d));
    }
    let n = a.n();
    let mut occurrences = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                occurrences[i] += 1;
            }
        }
    }
    let pivot_var = (0..n).filter(|&i| occurrences[i] >= 2).max_by_key(|&i| occurrences[i]);
    let Some(i) = pivot_var else {
        // pairwise coprime
        let mut out = HilbertNumerator::one(d);
        for g in &gens {
            out = out.mul(&HilbertNumerator::one_minus(&degree_of(a, g)?));
        }
        return Ok(out);
    };
    let e = gens.iter().map(|g| g[i]).filter(|&x| x > 0).min().expect("occurs");
    let mut p = ExponentVector::zero(n).into_inner();
    p[i] = e;
    let p = ExponentVector::new(p);

    let mut sum = gens.clone();
    sum.push(p.clone());
    let sum = minimalize(sum);
    let quotient = minimalize(
        gens.iter()
            .map(|g| {
                let mut x = g.clone().into_inner();
                x[i] = x[i].saturating_sub(e);
                ExponentVector::new(x)
            })
            .collect(),
    );
    let left = numerator_rec(a, sum)?;
    let right = numerator_rec(a, quotient)?;
    Ok(left.add(&right.shift(&degree_of(a, &p)?)))
}

/// `q(t) = (1 - t) sum_{m in NA} t^m` and the Frobenius number, `d = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSeries {
    /// Coefficients of `q`, index = exponent.
    pub numerator: Vec<i64>,
    /// Largest integer outside `NA`; `-1` if there is none.
    pub frobenius: i64,
}

impl SemigroupSeries {
    pub fn contains(&self, m: u64) -> bool {
        if (m as i128) > self.frobenius as i128 {
            return true;
        }
        // prefix sums of q recover the indicator
        self.numerator[..=m as usize].iter().sum::<i64>() == 1
    }

    pub fn as_numerator(&self) -> HilbertNumerator {
        let mut p = HilbertNumerator::zero(1);
        for (k, &c) in self.numerator.iter().enumerate() {
            p.add_term(Degree::scalar(k as u64), BigInt::from(c));
        }
        p
    }
}

pub fn semigroup_series_d1(a: &GradingSet) -> Result<SemigroupSeries> {
    if a.d() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: a.d(),
        });
    }
    let entries: Vec<u64> = a.columns().iter().map(|c| c[0]).collect();
    let lo = *entries.iter().min().expect("nonempty");
    let hi = *entries.iter().max().expect("nonempty");
    // gcd 1 after normalization, so every gap lies below lo * hi
    let len = lo.checked_mul(hi).ok_or(Error::Overflow)? as usize + 1;
    let bx = DegreeBox::new(&Degree::scalar(len as u64), DEFAULT_BOX_LIMIT)?;
    let member = semigroup_table(a, &bx);
    let frobenius = (0..member.len()).rev().find(|&m| !member[m]).map_or(-1, |m| m as i64);
    let top = (frobenius + 1) as usize;
    let mut numerator = vec![0i64; top + 1];
    for m in 0..top {
        if member[m] {
            numerator[m] += 1;
            numerator[m + 1] -= 1;
        }
    }
    numerator[top] += 1;
    Ok(SemigroupSeries {
        numerator,
        frobenius,
    })
}

/// Outcome of the `A`-gradedness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVerdict {
    pub a_graded: bool,
    /// First degree (graded-lex) with a wrong count, and that count.
    pub witness: Option<(Degree, u64)>,
    /// `Certified` for every `false` verdict and for `d = 1`.
    pub completeness: Completeness,
}

impl GradedVerdict {
    pub fn into_result(self) -> Result<()> {
        match self.witness {
            None => Ok(()),
            Some((degree, count)) => Err(Error::NotAGraded { degree, count }),
        }
    }
}

/// Decide whether `S/I` has one standard monomial in every degree of `NA`.
///
/// For `d = 1` this is the polynomial identity
/// `N(I) (1 - t) = q(t) prod_i (1 - t^{a_i})`; the lowest term of the
/// difference locates the first wrong degree. For `d >= 2` the series are
/// compared on a bounded box (`SearchBound` as for primitive binomials).
pub fn is_a_graded_monomial(ideal: &MonomialIdeal, bound: &SearchBound) -> Result<GradedVerdict> {
    let a = &ideal.grading;
    let num = hilbert_numerator(ideal)?;
    if a.d() == 1 {
        let s = semigroup_series_d1(a)?;
        let mut rhs = s.as_numerator();
        for col in a.columns() {
            rhs = rhs.mul(&HilbertNumerator::one_minus(col));
        }
        let lhs = num.mul(&HilbertNumerator::one_minus(&Degree::scalar(1)));
        let diff = lhs.sub(&rhs);
        let witness = match diff.lowest_term() {
            None => None,
            Some((m, c)) => {
                let count = BigInt::from(s.contains(m[0]) as u8) + c;
                let count = if count.is_negative() {
                    return Err(Error::Inconsistent(alloc::format!(
                        "negative standard-monomial count at degree {m}"
                    )));
                } else {
                    u64::try_from(count).map_err(|_| Error::Overflow)?
                };
                Some((m.clone(), count))
            }
        };
        return Ok(GradedVerdict {
            a_graded: witness.is_none(),
            witness,
            completeness: Completeness::Certified,
        });
    }
    let (cap, status) = match bound {
        SearchBound::Default => default_cap(a),
        SearchBound::Zonotope(r) => (zonotope_box(a, *r), Completeness::Truncated),
        SearchBound::Cap(c) => (c.clone(), Completeness::Truncated),
    };
    let (bx, coeffs) = num.expand(a, &cap, DEFAULT_BOX_LIMIT)?;
    let member = semigroup_table(a, &bx);
    let mut order: Vec<usize> = (0..bx.size()).collect();
    order.sort_by(|&x, &y| bx.degree(x).graded_cmp(&bx.degree(y)));
    for idx in order {
        let want = BigInt::from(member[idx] as u8);
        if coeffs[idx] != want {
            let count = u64::try_from(&coeffs[idx]).map_err(|_| {
                Error::Inconsistent(String::from("negative standard-monomial count"))
            })?;
            return Ok(GradedVerdict {
                a_graded: false,
                witness: Some((bx.degree(idx), count)),
                completeness: Completeness::Certified,
            });
        }
    }
    Ok(GradedVerdict {
        a_graded: true,
        witness: None,
        completeness: status,
    })
}
