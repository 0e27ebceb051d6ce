//! Primitive binomials (the Graver basis of the toric ideal) by fiber sweep.
//!
//! Fibers are visited in increasing degree. A pair `(u, v)` of one fiber is
//! primitive iff no proper factor pair `u' <= u`, `v' <= v` shares a degree;
//! a minimal factor pair is itself primitive of smaller degree, which is
//! what lets the sweep test pairs against the primitives found so far.
//!
//! For `d = 1` every primitive binomial has degree at most `a_{n-1} a_n`
//! (taking the two largest entries), so the sweep up to that bound is
//! complete. For `d >= 2` the default box is the zonotope `Z_r` with
//! `r = (n - d) a^d`, `a` the largest Euclidean column norm. Completeness
//! in that case rests on the conjectured sufficiency of this bound and is
//! reported as such.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::grading::{
    degree_of, enumerate_fiber, semigroup_table, Binomial, Degree, DegreeBox, ExponentVector,
    GradingSet, DEFAULT_BOX_LIMIT,
};

/// How far a computation searched, and what that buys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// The bound is a theorem: nothing is missing.
    Certified,
    /// Complete if the zonotope bound `Z_r` holds (conjectural for `d >= 2`).
    ConjecturedBound { r: u64 },
    /// The caller supplied a bound below the default; no completeness claim.
    Truncated,
}

impl Completeness {
    pub fn is_certified(&self) -> bool {
        matches!(self, Completeness::Certified)
    }
}

/// Which box of degrees a sweep covers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum SearchBound {
    /// `a_{n-1} a_n` for `d = 1`; `Z_r`, `r = (n - d) a^d`, otherwise.
    #[default]
    Default,
    /// The bounding box of `Z_r(A)` for an explicit `r`.
    Zonotope(u64),
    /// All degrees componentwise below the cap.
    Cap(Degree),
}

#[derive(Clone, Debug)]
pub struct GraverOptions {
    pub bound: SearchBound,
    /// Largest fiber the sweep will enumerate.
    pub fiber_limit: usize,
    /// Largest number of cells in the degree box.
    pub box_limit: usize,
}

impl Default for GraverOptions {
    fn default() -> Self {
        GraverOptions {
            bound: SearchBound::Default,
            fiber_limit: 200_000,
            box_limit: DEFAULT_BOX_LIMIT,
        }
    }
}

impl GraverOptions {
    pub fn with_bound(bound: SearchBound) -> Self {
        GraverOptions {
            bound,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct PrimitiveSet {
    pub grading: GradingSet,
    /// Canonically oriented (`u >lex v`), `c = 1`, sorted by degree then `u`.
    pub binomials: Vec<Binomial>,
    /// The distinct primitive degrees, graded-lex sorted.
    pub degrees: Vec<Degree>,
    /// Degree cap that was swept.
    pub cap: Degree,
    pub completeness: Completeness,
}

impl PrimitiveSet {
    pub fn len(&self) -> usize {
        self.binomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.binomials.is_empty()
    }

    pub fn contains_degree(&self, b: &Degree) -> bool {
        self.degrees.binary_search_by(|x| x.graded_cmp(b)).is_ok()
    }

    /// Componentwise maximum of the primitive degrees (0 if none).
    pub fn max_degree(&self) -> Degree {
        self.degrees
            .iter()
            .fold(Degree::zero(self.grading.d()), |m, b| m.join(b))
    }

    /// Binomials of one degree.
    pub fn of_degree<'a>(&'a self, b: &'a Degree) -> impl Iterator<Item = &'a Binomial> + 'a {
        let a = &self.grading;
        self.binomials
            .iter()
            .filter(move |g| degree_of(a, g.u()).ok().as_ref() == Some(b))
    }
}

/// `r = ceil((n - d) a^d)` with `a` the largest Euclidean norm of a column.
pub fn zonotope_parameter(a: &GradingSet) -> u64 {
    let n = a.n() as u64;
    let d = a.d() as u64;
    if n <= d {
        return 1;
    }
    // (n-d)^2 * (a^2)^d, then ceil sqrt
    let sq = BigUint::from(n - d).pow(2) * BigUint::from(a.max_norm_squared()).pow(d as u32);
    let mut r = sq.sqrt();
    if &r * &r < sq {
        r += 1u32;
    }
    r.to_u64().unwrap_or(u64::MAX).max(1)
}

/// The default sweep cap and its completeness status.
pub fn default_cap(a: &GradingSet) -> (Degree, Completeness) {
    if a.d() == 1 {
        let mut entries: Vec<u64> = a.columns().iter().map(|c| c[0]).collect();
        entries.sort_unstable();
        let cap = match entries.len() {
            0 | 1 => 0,
            k => entries[k - 2].saturating_mul(entries[k - 1]),
        };
        (Degree::scalar(cap), Completeness::Certified)
    } else {
        let r = zonotope_parameter(a);
        (zonotope_box(a, r), Completeness::ConjecturedBound { r })
    }
}

/// Bounding box of `Z_r(A)`: `r` times the column sum.
pub fn zonotope_box(a: &GradingSet, r: u64) -> Degree {
    let s = a.column_sum();
    Degree::new(s.iter().map(|x| x.saturating_mul(r)).collect())
}

fn resolve_bound(a: &GradingSet, bound: &SearchBound) -> (Degree, Completeness) {
    let (default, status) = default_cap(a);
    let cap = match bound {
        SearchBound::Default => return (default, status),
        SearchBound::Zonotope(r) => zonotope_box(a, *r),
        SearchBound::Cap(c) => c.clone(),
    };
    if default.leq(&cap) {
        (cap, status)
    } else {
        (cap, Completeness::Truncated)
    }
}

/// Exhaustive factor scan: no proper `(u', v')` with `u' <= u`, `v' <= v`
/// and `deg u' = deg v'`.
pub fn is_primitive(a: &GradingSet, u: &ExponentVector, v: &ExponentVector) -> Result<bool> {
    let b = degree_of(a, u)?;
    if degree_of(a, v)? != b {
        return Err(Error::DegreeMismatch);
    }
    if u == v {
        return Err(Error::DegenerateBinomial);
    }
    let du = divisor_degrees(a, u)?;
    let dv = divisor_degrees(a, v)?;
    let zero = Degree::zero(a.d());
    Ok(du.intersection(&dv).all(|x| *x == zero || *x == b))
}

fn divisor_degrees(a: &GradingSet, u: &ExponentVector) -> Result<BTreeSet<Degree>> {
    let mut out: BTreeSet<Degree> = BTreeSet::new();
    out.insert(Degree::zero(a.d()));
    for (i, &e) in u.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let col = a.column(i);
        let mut next = BTreeSet::new();
        for base in &out {
            let mut cur = base.clone();
            next.insert(cur.clone());
            for _ in 0..e {
                cur = cur.checked_add(col).ok_or(Error::Overflow)?;
                next.insert(cur.clone());
            }
        }
        out = next;
    }
    Ok(out)
}

/// Bit set over `0..=len` used for the one-dimensional primitivity test.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len / 64 + 1])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn or_shifted(&mut self, src: &Bits, shift: usize, len: usize) {
        let words = shift / 64;
        let bits = shift % 64;
        let n = self.0.len();
        for k in (words..n).rev() {
            let lo = src.0[k - words] << bits;
            let hi = if bits > 0 && k > words {
                src.0[k - words - 1] >> (64 - bits)
            } else {
                0
            };
            self.0[k] |= lo | hi;
        }
        // clear bits past len
        let last = len % 64;
        if last != 63 {
            self.0[n - 1] &= (1u64 << (last + 1)) - 1;
        }
    }

    fn intersects_except(&self, other: &Bits, skip_a: usize, skip_b: usize) -> bool {
        for (k, (x, y)) in self.0.iter().zip(&other.0).enumerate() {
            let mut w = x & y;
            if skip_a / 64 == k {
                w &= !(1u64 << (skip_a % 64));
            }
            if skip_b / 64 == k {
                w &= !(1u64 << (skip_b % 64));
            }
            if w != 0 {
                return true;
            }
        }
        false
    }
}

fn divisor_bits(cols: &[u64], u: &ExponentVector, b: usize) -> Bits {
    let mut cur = Bits::new(b);
    cur.set(0);
    for (i, &e) in u.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let step = cols[i] as usize;
        let base = cur.clone();
        for k in 1..=e as usize {
            let shift = step * k;
            if shift > b {
                break;
            }
            cur.or_shifted(&base, shift, b);
        }
    }
    cur
}

/// All primitive binomials with degree inside the chosen bound.
pub fn primitive_binomials(a: &GradingSet, opts: &GraverOptions) -> Result<PrimitiveSet> {
    let (cap, completeness) = resolve_bound(a, &opts.bound);
    let bx = DegreeBox::new(&cap, opts.box_limit)?;
    let member = semigroup_table(a, &bx);
    let mut degrees: Vec<Degree> = (1..bx.size())
        .filter(|&i| member[i])
        .map(|i| bx.degree(i))
        .collect();
    degrees.sort_by(|x, y| x.graded_cmp(y));

    let one_dim = a.d() == 1;
    let cols: Vec<u64> = if one_dim {
        a.columns().iter().map(|c| c[0]).collect()
    } else {
        Vec::new()
    };

    let mut found: Vec<Binomial> = Vec::new();
    let mut prim_degrees: Vec<Degree> = Vec::new();
    for b in degrees {
        let fiber = enumerate_fiber(a, &b)?;
        if fiber.len() < 2 {
            continue;
        }
        if fiber.len() > opts.fiber_limit {
            return Err(Error::GuardExceeded {
                what: "fiber size in primitive sweep",
                limit: opts.fiber_limit,
            });
        }
        let mut by_mask: BTreeMap<u64, Vec<&ExponentVector>> = BTreeMap::new();
        for p in &fiber.points {
            by_mask.entry(p.support_mask()).or_default().push(p);
        }
        let masks: Vec<u64> = by_mask.keys().copied().collect();
        let bits: Option<BTreeMap<&ExponentVector, Bits>> = one_dim.then(|| {
            fiber
                .points
                .iter()
                .map(|p| (p, divisor_bits(&cols, p, b[0] as usize)))
                .collect()
        });
        let before = found.len();
        for (x, &m1) in masks.iter().enumerate() {
            for &m2 in &masks[x + 1..] {
                if m1 & m2 != 0 {
                    continue;
                }
                for &p in &by_mask[&m1] {
                    for &q in &by_mask[&m2] {
                        let (u, v) = if p > q { (p, q) } else { (q, p) };
                        let primitive = match &bits {
                            Some(bits) => {
                                let top = b[0] as usize;
                                !bits[u].intersects_except(&bits[v], 0, top)
                            }
                            None => !has_factor_pair(&found[..before], u, v),
                        };
                        if primitive {
                            found.push(Binomial::pure(u.clone(), v.clone()));
                        }
                    }
                }
            }
        }
        if found.len() > before {
            found[before..].sort();
            prim_degrees.push(b);
        }
    }
    Ok(PrimitiveSet {
        grading: a.clone(),
        binomials: found,
        degrees: prim_degrees,
        cap,
        completeness,
    })
}

/// Some known primitive `(p, q)` divides `(u, v)` in either orientation.
fn has_factor_pair(known: &[Binomial], u: &ExponentVector, v: &ExponentVector) -> bool {
    known.iter().any(|g| {
        (g.u().divides(u) && g.v().divides(v)) || (g.v().divides(u) && g.u().divides(v))
    })
}

/// Degrees of [`primitive_binomials`], deduplicated.
pub fn primitive_degrees(a: &GradingSet, opts: &GraverOptions) -> Result<Vec<Degree>> {
    Ok(primitive_binomials(a, opts)?.degrees)
}
