//! Grading sets, degrees, exponent vectors and fibers.
//!
//! A grading set is a list of nonzero columns `a_1, ..., a_n` in `N^d`. A
//! monomial `x^u` has degree `deg(u) = sum u_i a_i`, and the fiber over a
//! degree `b` is the finite set of exponent vectors with `deg(u) = b`. All
//! other modules are phrased in terms of these objects.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Deref;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A degree in `N^d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(Vec<u64>);

impl Degree {
    pub fn new(coords: Vec<u64>) -> Self {
        Degree(coords)
    }

    pub fn zero(d: usize) -> Self {
        Degree(vec![0; d])
    }

    pub fn scalar(b: u64) -> Self {
        Degree(vec![b])
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &Degree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &Degree) -> Option<Degree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }

    /// Componentwise difference, `None` if any coordinate would go negative.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }

    pub fn checked_scale(&self, k: u64) -> Option<Degree> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Graded-lex comparison: total first, then lexicographic. This order
    /// refines the componentwise partial order.
    pub fn graded_cmp(&self, other: &Degree) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Deref for Degree {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for Degree {
    fn from(v: Vec<u64>) -> Self {
        Degree(v)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// An exponent vector `u` in `N^n`, standing for the monomial `x^u`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `supp(u) = { i : u_i != 0 }`.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support as a bit mask; only valid for `n <= 64`.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << i))
    }

    /// `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Least common multiple of two monomials.
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Replace every nonzero exponent by 1.
    pub fn squarefree(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&e| u32::from(e != 0)).collect())
    }

    pub fn scale(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&e| e * k).collect())
    }

    /// Total degree `sum u_i`.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// `u - v` as a signed integer vector.
    pub fn difference(&self, other: &ExponentVector) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| i64::from(*a) - i64::from(*b))
            .collect()
    }

    /// Render as `x1^2*x3`, or `1` for the constant monomial.
    pub fn monomial_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            let _ = write!(s, "x{}", i + 1);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl Deref for ExponentVector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The configuration `A = {a_1, ..., a_n}` of nonzero degree columns.
///
/// For `d = 1` a common divisor `g > 1` of all entries is divided out and
/// remembered in [`GradingSet::scale`]; all computations run on the
/// normalized columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingSet {
    dim: usize,
    columns: Vec<Degree>,
    scale: u64,
}

impl GradingSet {
    /// Build from a list of columns, each of length `d`.
    pub fn new(columns: Vec<Vec<u64>>) -> Result<Self> {
        let Some(first) = columns.first() else {
            return Err(Error::InvalidGrading("no columns".into()));
        };
        let dim = first.len();
        if dim == 0 {
            return Err(Error::InvalidGrading("columns must have positive length".into()));
        }
        for c in &columns {
            if c.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.len(),
                });
            }
            if c.iter().all(|&x| x == 0) {
                return Err(Error::InvalidGrading("zero column".into()));
            }
        }
        let distinct: BTreeSet<&Vec<u64>> = columns.iter().collect();
        if distinct.len() != columns.len() {
            return Err(Error::InvalidGrading("duplicate column".into()));
        }
        if columns.len() > 64 {
            return Err(Error::InvalidGrading("at most 64 columns are supported".into()));
        }
        let mut scale = 1;
        let mut columns: Vec<Degree> = columns.into_iter().map(Degree).collect();
        if dim == 1 {
            let g = columns.iter().fold(0u64, |g, c| g.gcd(&c[0]));
            if g > 1 {
                scale = g;
                for c in &mut columns {
                    c.0[0] /= g;
                }
            }
        }
        Ok(GradingSet {
            dim,
            columns,
            scale,
        })
    }

    /// A one-dimensional grading set `{a_1, ..., a_n}`.
    pub fn one_dim(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&a| vec![a]).collect())
    }

    /// Build from `d` rows of `n` entries each (the matrix `A`).
    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidGrading("no rows".into()));
        };
        let n = first.len();
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
        }
        Self::new((0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect())
    }

    pub fn d(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, i: usize) -> &Degree {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Degree] {
        &self.columns
    }

    /// The common divisor that was divided out (1 if none).
    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.dim)
            .map(|j| self.columns.iter().map(|c| c[j]).collect())
            .collect()
    }

    /// The sub-configuration on the given column indices.
    pub fn restrict(&self, indices: &[usize]) -> Result<GradingSet> {
        GradingSet::new(indices.iter().map(|&i| self.columns[i].0.clone()).collect())
    }

    /// Sum of all columns.
    pub fn column_sum(&self) -> Degree {
        let mut s = vec![0u64; self.dim];
        for c in &self.columns {
            for (x, y) in s.iter_mut().zip(c.iter()) {
                *x += y;
            }
        }
        Degree(s)
    }

    /// Largest squared Euclidean norm of a column.
    pub fn max_norm_squared(&self) -> u64 {
        self.columns
            .iter()
            .map(|c| c.iter().map(|x| x * x).sum::<u64>())
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn check_degree(&self, b: &Degree) -> Result<()> {
        if b.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: b.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_exponent(&self, u: &ExponentVector) -> Result<()> {
        if u.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: u.len(),
            });
        }
        Ok(())
    }
}

/// `deg(u) = sum u_i a_i`.
pub fn degree_of(a: &GradingSet, u: &ExponentVector) -> Result<Degree> {
    a.check_exponent(u)?;
    let mut out = vec![0u64; a.d()];
    for (col, &e) in a.columns.iter().zip(u.iter()) {
        if e == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(col.iter()) {
            *o = x
                .checked_mul(u64::from(e))
                .and_then(|p| o.checked_add(p))
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(Degree(out))
}

/// All exponent vectors of one degree, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub degree: Degree,
    pub points: Vec<ExponentVector>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.points.binary_search(u).is_ok()
    }

    pub fn index_of(&self, u: &ExponentVector) -> Option<usize> {
        self.points.binary_search(u).ok()
    }
}

/// Enumerate `deg^{-1}(b)`.
///
/// Depth-first over the variables in index order with values increasing,
/// which yields the points already in lexicographic order.
pub fn enumerate_fiber(a: &GradingSet, b: &Degree) -> Result<Fiber> {
    a.check_degree(b)?;
    let n = a.n();
    let d = a.d();
    // reachable[i][j]: some column k >= i has a nonzero j-th coordinate
    let mut reachable = vec![vec![false; d]; n + 1];
    for i in (0..n).rev() {
        for j in 0..d {
            reachable[i][j] = reachable[i + 1][j] || a.columns[i][j] > 0;
        }
    }
    let mut points = Vec::new();
    let mut current = vec![0u32; n];
    let mut rem = b.0.clone();
    fiber_dfs(a, &reachable, 0, &mut rem, &mut current, &mut points);
    Ok(Fiber {
        degree: b.clone(),
        points,
    })
}

fn fiber_dfs(
    a: &GradingSet,
    reachable: &[Vec<bool>],
    i: usize,
    rem: &mut [u64],
    current: &mut [u32],
    out: &mut Vec<ExponentVector>,
) {
    let n = a.n();
    if i == n {
        if rem.iter().all(|&r| r == 0) {
            out.push(ExponentVector(current.to_vec()));
        }
        return;
    }
    for (j, &r) in rem.iter().enumerate() {
        if r > 0 && !reachable[i][j] {
            return;
        }
    }
    let col = &a.columns[i];
    let max = col
        .iter()
        .zip(rem.iter())
        .filter(|(c, _)| **c > 0)
        .map(|(c, r)| r / c)
        .min()
        .unwrap_or(0);
    if i + 1 == n {
        // the last variable is forced
        let k = col
            .iter()
            .zip(rem.iter())
            .find(|(c, _)| **c > 0)
            .map(|(c, r)| r / c)
            .unwrap_or(0);
        if k <= max && col.iter().zip(rem.iter()).all(|(c, r)| c * k == *r) {
            current[i] = k as u32;
            out.push(ExponentVector(current.to_vec()));
            current[i] = 0;
        }
        return;
    }
    for k in 0..=max {
        for (r, c) in rem.iter_mut().zip(col.iter()) {
            *r -= c * k;
        }
        current[i] = k as u32;
        fiber_dfs(a, reachable, i + 1, rem, current, out);
        for (r, c) in rem.iter_mut().zip(col.iter()) {
            *r += c * k;
        }
    }
    current[i] = 0;
}

/// Row-major indexing of the lattice box `[0, cap]` in `N^d`.
#[derive(Clone, Debug)]
pub struct DegreeBox {
    cap: Degree,
    strides: Vec<usize>,
    size: usize,
}

impl DegreeBox {
    /// Fails with a guard error if the box has more than `limit` cells.
    pub fn new(cap: &Degree, limit: usize) -> Result<Self> {
        let mut strides = vec![0usize; cap.len()];
        let mut size = 1usize;
        for j in (0..cap.len()).rev() {
            strides[j] = size;
            size = usize::try_from(cap[j])
                .ok()
                .and_then(|c| c.checked_add(1))
                .and_then(|c| size.checked_mul(c))
                .filter(|&s| s <= limit)
                .ok_or(Error::GuardExceeded {
                    what: "degree box cells",
                    limit,
                })?;
        }
        Ok(DegreeBox {
            cap: cap.clone(),
            strides,
            size,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cap(&self) -> &Degree {
        &self.cap
    }

    pub fn index(&self, b: &Degree) -> Option<usize> {
        if !b.leq(&self.cap) {
            return None;
        }
        Some(b.iter().zip(&self.strides).map(|(x, s)| *x as usize * s).sum())
    }

    pub fn degree(&self, mut idx: usize) -> Degree {
        let mut out = vec![0u64; self.cap.len()];
        for (o, s) in out.iter_mut().zip(&self.strides) {
            *o = (idx / s) as u64;
            idx %= s;
        }
        Degree(out)
    }

    /// All degrees of the box, in row-major (= lexicographic) order.
    pub fn degrees(&self) -> impl Iterator<Item = Degree> + '_ {
        (0..self.size).map(move |i| self.degree(i))
    }
}

/// Default ceiling on the number of cells in dense degree tables.
pub const DEFAULT_BOX_LIMIT: usize = 4_000_000;

/// Number of lattice points in every fiber of the box `[0, cap]`,
/// i.e. the coefficients of `prod_i 1/(1 - t^{a_i})`.
pub fn fiber_counts(a: &GradingSet, cap: &Degree, limit: usize) -> Result<(DegreeBox, Vec<u64>)> {
    a.check_degree(cap)?;
    let bx = DegreeBox::new(cap, limit)?;
    let mut counts = vec![0u64; bx.size()];
    counts[0] = 1;
    // One column at a time: standard unbounded-knapsack counting. Row-major
    // order visits b - a_i before b.
    for col in &a.columns {
        let Some(shift) = bx.index(col) else { continue };
        for idx in 0..bx.size() {
            if idx < shift {
                continue;
            }
            let b = bx.degree(idx);
            if let Some(prev) = b.checked_sub(col) {
                let p = bx.index(&prev).expect("inside box");
                counts[idx] = counts[idx].saturating_add(counts[p]);
            }
        }
    }
    Ok((bx, counts))
}

/// All `b <= cap` that lie in `NA` (including 0), in lexicographic order.
pub fn semigroup_members_up_to(a: &GradingSet, cap: &Degree) -> Result<Vec<Degree>> {
    a.check_degree(cap)?;
    let bx = DegreeBox::new(cap, DEFAULT_BOX_LIMIT)?;
    let member = semigroup_table(a, &bx);
    Ok((0..bx.size())
        .filter(|&i| member[i])
        .map(|i| bx.degree(i))
        .collect())
}

/// Membership table of `NA` over a box.
pub fn semigroup_table(a: &GradingSet, bx: &DegreeBox) -> Vec<bool> {
    let mut member = vec![false; bx.size()];
    member[0] = true;
    for idx in 1..bx.size() {
        let b = bx.degree(idx);
        member[idx] = a.columns.iter().any(|col| {
            b.checked_sub(col)
                .and_then(|p| bx.index(&p))
                .is_some_and(|p| member[p])
        });
    }
    member
}

/// The binomial `x^u - c x^v` with `c` an exact nonzero rational, or the
/// monomial `x^u` (stored with `c = 0` and `v = 0`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    u: ExponentVector,
    v: ExponentVector,
    c: BigRational,
}

impl Binomial {
    /// A monomial generator `x^u`, carried with an absorbing zero tail.
    pub fn monomial(u: ExponentVector) -> Self {
        let n = u.len();
        Binomial {
            u,
            v: ExponentVector::zero(n),
            c: BigRational::zero(),
        }
    }

    /// `x^u - c x^v` with the given orientation, no normalization.
    pub fn oriented(u: ExponentVector, v: ExponentVector, c: BigRational) -> Self {
        if c.is_zero() {
            return Binomial::monomial(u);
        }
        Binomial { u, v, c }
    }

    /// `x^u - x^v`.
    pub fn pure(u: ExponentVector, v: ExponentVector) -> Self {
        Binomial {
            u,
            v,
            c: BigRational::one(),
        }
    }

    /// The first (leading) term's exponent.
    pub fn u(&self) -> &ExponentVector {
        &self.u
    }

    pub fn v(&self) -> &ExponentVector {
        &self.v
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    pub fn is_monomial(&self) -> bool {
        self.c.is_zero()
    }

    /// Flip to `x^v - (1/c) x^u` (same ideal member up to a unit).
    pub fn flipped(&self) -> Binomial {
        if self.is_monomial() {
            return self.clone();
        }
        Binomial {
            u: self.v.clone(),
            v: self.u.clone(),
            c: self.c.recip(),
        }
    }

    /// Orientation-normalized copy: `u >lex v`.
    pub fn canonical(&self) -> Binomial {
        if !self.is_monomial() && self.u < self.v {
            self.flipped()
        } else {
            self.clone()
        }
    }

    /// `u - v`.
    pub fn difference(&self) -> Vec<i64> {
        self.u.difference(&self.v)
    }

    /// Render as e.g. `x1^2*x3 - 3/2*x2^2`.
    pub fn to_poly_string(&self) -> String {
        let mut s = self.u.monomial_string();
        if self.is_monomial() {
            return s;
        }
        let (sign, mag) = if self.c < BigRational::zero() {
            ("+", -self.c.clone())
        } else {
            ("-", self.c.clone())
        };
        s.push(' ');
        s.push_str(sign);
        s.push(' ');
        if !mag.is_one() {
            s.push_str(&alloc::format!("{mag}*"));
        }
        s.push_str(&self.v.monomial_string());
        s
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly_string())
    }
}

/// Canonical form of `x^u - c x^v`: oriented so that `u >lex v`, with
/// coefficient in lowest terms. `(v, u, c)` and `(u, v, 1/c)` give the same
/// value.
pub fn canonical_binomial(
    a: &GradingSet,
    u: ExponentVector,
    v: ExponentVector,
    c: BigRational,
) -> Result<Binomial> {
    if c.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    if u == v {
        return Err(Error::DegenerateBinomial);
    }
    if degree_of(a, &u)? != degree_of(a, &v)? {
        return Err(Error::DegreeMismatch);
    }
    Ok(Binomial { u, v, c }.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ev(x: &[u32]) -> ExponentVector {
        ExponentVector::new(x.to_vec())
    }

    #[test]
    fn degree_examples() {
        let a = GradingSet::one_dim(&[1, 3, 4, 7]).unwrap();
        assert_eq!(degree_of(&a, &ev(&[2, 0, 1, 0])).unwrap(), Degree::scalar(6));
        assert_eq!(degree_of(&a, &ev(&[0, 0, 0, 0])).unwrap(), Degree::scalar(0));
        let a = GradingSet::one_dim(&[3, 4, 5, 13, 14]).unwrap();
        assert_eq!(degree_of(&a, &ev(&[2, 1, 1, 0, 0])).unwrap(), Degree::scalar(15));
        assert!(matches!(
            degree_of(&a, &ev(&[1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fiber_of_fifteen() {
        let a = GradingSet::one_dim(&[3, 4, 5, 13, 14]).unwrap();
        let f = enumerate_fiber(&a, &Degree::scalar(15)).unwrap();
        assert_eq!(
            f.points,
            vec![
                ev(&[0, 0, 3, 0, 0]),
                ev(&[1, 3, 0, 0, 0]),
                ev(&[2, 1, 1, 0, 0]),
                ev(&[5, 0, 0, 0, 0]),
            ]
        );
    }

    #[test]
    fn fiber_of_six_and_zero() {
        let a = GradingSet::one_dim(&[1, 3, 4, 7]).unwrap();
        let f = enumerate_fiber(&a, &Degree::scalar(6)).unwrap();
        assert_eq!(
            f.points,
            vec![ev(&[0, 2, 0, 0]), ev(&[2, 0, 1, 0]), ev(&[3, 1, 0, 0]), ev(&[6, 0, 0, 0])]
        );
        let z = enumerate_fiber(&a, &Degree::scalar(0)).unwrap();
        assert_eq!(z.points, vec![ev(&[0, 0, 0, 0])]);
    }

    #[test]
    fn empty_fiber_is_a_value() {
        let a = GradingSet::one_dim(&[3, 4, 5, 13, 14]).unwrap();
        assert!(enumerate_fiber(&a, &Degree::scalar(2)).unwrap().is_empty());
    }

    #[test]
    fn semigroup_members() {
        let a = GradingSet::one_dim(&[3, 4, 5, 13, 14]).unwrap();
        let m = semigroup_members_up_to(&a, &Degree::scalar(7)).unwrap();
        let got: Vec<u64> = m.iter().map(|b| b[0]).collect();
        assert_eq!(got, vec![0, 3, 4, 5, 6, 7]);

        let a = GradingSet::one_dim(&[1, 5]).unwrap();
        let m = semigroup_members_up_to(&a, &Degree::scalar(9)).unwrap();
        assert_eq!(m.len(), 10);
    }

    #[test]
    fn twisted_cubic_members() {
        let a = GradingSet::new(vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]).unwrap();
        let m = semigroup_members_up_to(&a, &Degree::new(vec![3, 3])).unwrap();
        let expected: Vec<Degree> = [[0, 0], [0, 3], [1, 2], [2, 1], [3, 0], [3, 3]]
            .iter()
            .map(|x| Degree::new(x.to_vec()))
            .collect();
        assert_eq!(m, expected);
        for b in &m {
            assert_eq!((b[0] + b[1]) % 3, 0);
        }
    }

    #[test]
    fn gcd_normalization() {
        let a = GradingSet::one_dim(&[4, 6, 10]).unwrap();
        assert_eq!(a.scale(), 2);
        assert_eq!(a.column(1), &Degree::scalar(3));
        assert!(GradingSet::one_dim(&[3, 3]).is_err());
        assert!(GradingSet::one_dim(&[0, 3]).is_err());
    }

    #[test]
    fn canonical_orientation() {
        let a = GradingSet::one_dim(&[1, 3, 4, 7]).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let b = canonical_binomial(&a, ev(&[0, 2, 0, 0]), ev(&[2, 0, 1, 0]), half.clone()).unwrap();
        assert_eq!(b.u(), &ev(&[2, 0, 1, 0]));
        assert_eq!(b.c(), &BigRational::from_integer(2.into()));
        let b2 = canonical_binomial(&a, ev(&[2, 0, 1, 0]), ev(&[0, 2, 0, 0]), half.recip()).unwrap();
        assert_eq!(b, b2);
        assert_eq!(b.canonical(), b);
        assert_eq!(
            canonical_binomial(&a, ev(&[1, 0, 0, 0]), ev(&[1, 0, 0, 0]), half.clone()),
            Err(Error::DegenerateBinomial)
        );
        assert_eq!(
            canonical_binomial(&a, ev(&[1, 0, 0, 0]), ev(&[0, 1, 0, 0]), half),
            Err(Error::DegreeMismatch)
        );
    }
}
