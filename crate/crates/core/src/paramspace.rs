//! Truncated parameter scheme of `A`-graded binomial ideals.
//!
//! A point assigns to every degree `b ∈ Z_r(A) ∩ NA` a projective vector
//! `f^b` indexed by the fiber of `b`. The scheme is cut out by
//!
//! ```text
//! f^b_u f^{b+c}_{v+w} = f^b_v f^{b+c}_{u+w}    (deg u = deg v = b, deg w = c)
//! ```
//!
//! and a point gives the ideal `I_f = < f^b_u x^v - f^b_v x^u >`.
//! Coordinates `f^b_u` of an ideal are read off normal forms: `x^u` reduces
//! to `f^b_u` times the standard monomial of degree `b`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grading::{
    degree_of, enumerate_fiber, semigroup_table, Binomial, Degree, DegreeBox, ExponentVector, GradingSet,
    DEFAULT_BOX_LIMIT,
};
use crate::graver::{zonotope_box, PrimitiveSet};
use crate::groebner::{buchberger, BinomialIdeal, TermOrder};
use crate::hilbert::MonomialIdeal;
use crate::lp::{int, lp_feasible, LinearConstraint};

/// Default cap on the number of generated scheme equations.
pub const DEFAULT_EQUATION_LIMIT: usize = 2_000_000;

/// `b = sum lambda_i a_i` with `0 <= lambda_i <= r`.
pub fn zonotope_contains(a: &GradingSet, r: u64, b: &Degree) -> Result<bool> {
    a.check_degree(b)?;
    let n = a.n();
    let mut cs = Vec::with_capacity(2 * n + a.d());
    for i in 0..n {
        let mut row = alloc::vec![BigRational::zero(); n];
        row[i] = BigRational::one();
        cs.push(LinearConstraint::ge(row.clone(), BigRational::zero()));
        row[i] = -BigRational::one();
        cs.push(LinearConstraint::ge(row, int(-(r as i64))));
    }
    for j in 0..a.d() {
        let row = a.columns().iter().map(|c| int(c[j] as i64)).collect();
        cs.push(LinearConstraint::eq(row, int(b[j] as i64)));
    }
    Ok(lp_feasible(n, &cs)?.is_feasible())
}

/// `Z_r(A) ∩ NA`, in graded-lex order.
pub fn zonotope_degrees(a: &GradingSet, r: u64) -> Result<Vec<Degree>> {
    let bx = DegreeBox::new(&zonotope_box(a, r), DEFAULT_BOX_LIMIT)?;
    let table = semigroup_table(a, &bx);
    let mut out = Vec::new();
    for (k, b) in bx.degrees().enumerate() {
        // for d = 1 the zonotope is the whole interval [0, r sum a_i]
        if table[k] && (a.d() == 1 || zonotope_contains(a, r, &b)?) {
            out.push(b);
        }
    }
    out.sort_by(Degree::graded_cmp);
    Ok(out)
}

/// Smallest `r` with every primitive degree inside `Z_r(A)`.
pub fn injectivity_threshold(primitive: &PrimitiveSet) -> Result<u64> {
    let a = &primitive.grading;
    let mut r = 1;
    while !primitive
        .degrees
        .iter()
        .map(|b| zonotope_contains(a, r, b))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|x| x)
    {
        r += 1;
    }
    Ok(r)
}

/// `M_r`: monomials `x^u` with `deg(u) + c ∉ Z_r(A)` for every `c ∈ NA`.
///
/// The degrees below some point of `Z_r(A) ∩ NA` form a down-set `D` of
/// the semigroup order, reached from the zonotope by subtracting columns
/// (every intermediate step stays in `NA`). `M_r` is spanned by the
/// monomials with degree outside `D`; its minimal generators are one
/// variable above a monomial with degree in `D`.
pub fn truncation_ideal(a: &GradingSet, r: u64) -> Result<MonomialIdeal> {
    let bx = DegreeBox::new(&zonotope_box(a, r), DEFAULT_BOX_LIMIT)?;
    let table = semigroup_table(a, &bx);
    let mut down: BTreeSet<Degree> = zonotope_degrees(a, r)?.into_iter().collect();
    let mut stack: Vec<Degree> = down.iter().cloned().collect();
    while let Some(b) = stack.pop() {
        for c in a.columns() {
            let Some(x) = b.checked_sub(c) else { continue };
            let inside = bx.index(&x).is_some_and(|k| table[k]);
            if inside && down.insert(x.clone()) {
                stack.push(x);
            }
        }
    }
    let n = a.n();
    let mut gens = Vec::new();
    for b in &down {
        for w in enumerate_fiber(a, b)?.points {
            for i in 0..n {
                let u = w.add(&ExponentVector::unit(n, i));
                if down.contains(&degree_of(a, &u)?) {
                    continue;
                }
                let mut minimal = true;
                for j in (0..n).filter(|&j| u[j] > 0) {
                    let below = u.checked_sub(&ExponentVector::unit(n, j)).expect("positive entry");
                    if !down.contains(&degree_of(a, &below)?) {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    gens.push(u);
                }
            }
        }
    }
    MonomialIdeal::new(a.clone(), gens)
}

/// `f^b_u f^{b+c}_{v+w} = f^b_v f^{b+c}_{u+w}` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SchemeEquation {
    pub b: Degree,
    pub u: ExponentVector,
    pub v: ExponentVector,
    pub c: Degree,
    pub w: ExponentVector,
}

impl SchemeEquation {
    pub fn holds(&self, f: &SchemePoint) -> bool {
        let bc = self
            .b
            .checked_add(&self.c)
            .expect("equation degrees lie in the zonotope");
        let zero = BigRational::zero();
        let get = |d: &Degree, x: &ExponentVector| f.coordinate(d, x).unwrap_or(&zero);
        get(&self.b, &self.u) * get(&bc, &self.v.add(&self.w))
            == get(&self.b, &self.v) * get(&bc, &self.u.add(&self.w))
    }
}

impl fmt::Display for SchemeEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bc = self.b.checked_add(&self.c).ok_or(fmt::Error)?;
        write!(
            f,
            "f[{b}]{u} * f[{bc}]{vw} = f[{b}]{v} * f[{bc}]{uw}",
            b = self.b,
            u = self.u,
            v = self.v,
            vw = self.v.add(&self.w),
            uw = self.u.add(&self.w),
        )
    }
}

fn fibers_of(a: &GradingSet, degrees: &[Degree]) -> Result<BTreeMap<Degree, Vec<ExponentVector>>> {
    degrees
        .iter()
        .map(|b| Ok((b.clone(), enumerate_fiber(a, b)?.points)))
        .collect()
}

/// All equations of the scheme at level `r`, `c != 0`.
pub fn scheme_equations(a: &GradingSet, r: u64, limit: usize) -> Result<Vec<SchemeEquation>> {
    let degrees = zonotope_degrees(a, r)?;
    let fibers = fibers_of(a, &degrees)?;
    let mut out = Vec::new();
    for (b, fb) in fibers.iter().filter(|(_, f)| f.len() >= 2) {
        for (c, fc) in fibers.iter().filter(|(c, _)| !c.is_zero()) {
            let Some(bc) = b.checked_add(c) else { continue };
            if !fibers.contains_key(&bc) {
                continue;
            }
            for w in fc {
                for (k, u) in fb.iter().enumerate() {
                    for v in &fb[k + 1..] {
                        let (u, v) = if u < v { (u, v) } else { (v, u) };
                        out.push(SchemeEquation {
                            b: b.clone(),
                            u: u.clone(),
                            v: v.clone(),
                            c: c.clone(),
                            w: w.clone(),
                        });
                        if out.len() > limit {
                            return Err(Error::GuardExceeded {
                                what: "scheme equations",
                                limit,
                            });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// One affine chart per block: the least monomial with a nonzero
/// coordinate has coordinate 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemePoint {
    pub r: u64,
    pub blocks: BTreeMap<Degree, BTreeMap<ExponentVector, BigRational>>,
}

impl SchemePoint {
    /// Rescale every block into its chart; an all-zero block is rejected.
    pub fn new(r: u64, mut blocks: BTreeMap<Degree, BTreeMap<ExponentVector, BigRational>>) -> Result<Self> {
        for (b, block) in blocks.iter_mut() {
            let Some(lead) = block.values().find(|x| !x.is_zero()).cloned() else {
                return Err(Error::NotAGraded {
                    degree: b.clone(),
                    count: 0,
                });
            };
            for x in block.values_mut() {
                *x /= &lead;
            }
        }
        Ok(SchemePoint { r, blocks })
    }

    /// The point with every coordinate 1.
    pub fn ones(a: &GradingSet, r: u64) -> Result<Self> {
        let fibers = fibers_of(a, &zonotope_degrees(a, r)?)?;
        let blocks = fibers
            .into_iter()
            .map(|(b, f)| (b, f.into_iter().map(|u| (u, BigRational::one())).collect()))
            .collect();
        SchemePoint::new(r, blocks)
    }

    pub fn coordinate(&self, b: &Degree, u: &ExponentVector) -> Option<&BigRational> {
        self.blocks.get(b)?.get(u)
    }

    /// `(lambda . f)^b_u = lambda^u f^b_u`.
    pub fn twisted(&self, lambda: &[BigRational]) -> Result<Self> {
        if lambda.iter().any(Zero::is_zero) {
            return Err(Error::ZeroCoefficient);
        }
        let blocks = self
            .blocks
            .iter()
            .map(|(b, block)| {
                let block = block
                    .iter()
                    .map(|(u, x)| {
                        let mut y = x.clone();
                        for (l, &e) in lambda.iter().zip(u.iter()) {
                            y *= num_traits::pow(l.clone(), e as usize);
                        }
                        (u.clone(), y)
                    })
                    .collect();
                (b.clone(), block)
            })
            .collect();
        SchemePoint::new(self.r, blocks)
    }

    /// Blocks are indexed by exactly the fibers of `Z_r(A) ∩ NA`.
    pub fn check_shape(&self, a: &GradingSet) -> Result<()> {
        let fibers = fibers_of(a, &zonotope_degrees(a, self.r)?)?;
        let same = fibers.len() == self.blocks.len()
            && fibers.iter().zip(&self.blocks).all(|((b, f), (b2, block))| {
                b == b2 && f.len() == block.len() && f.iter().all(|u| block.contains_key(u))
            });
        if same {
            Ok(())
        } else {
            Err(Error::Inconsistent("point blocks do not match the fibers".into()))
        }
    }

    pub fn satisfies(&self, equations: &[SchemeEquation]) -> bool {
        equations.iter().all(|e| e.holds(self))
    }

    /// All scheme equations hold, checking only those with `u` the chart
    /// monomial `s` of its block.
    ///
    /// With `f_s = 1`, the equations for `(s, u)` and `(s, v)` give
    /// `f_u f_{v+w} = f_u f_v f_{s+w} = f_v f_{u+w}`.
    pub fn on_scheme(&self, a: &GradingSet) -> Result<bool> {
        let fibers = fibers_of(a, &zonotope_degrees(a, self.r)?)?;
        for (b, block) in self.blocks.iter().filter(|(_, x)| x.len() >= 2) {
            let (s, fs) = block.iter().find(|(_, x)| !x.is_zero()).expect("charted block");
            for (c, fc) in fibers.iter().filter(|(c, _)| !c.is_zero()) {
                let Some(bc) = b.checked_add(c) else { continue };
                let Some(upper) = self.blocks.get(&bc) else { continue };
                for w in fc {
                    let at = |x: &ExponentVector| upper.get(&x.add(w)).cloned().unwrap_or_else(BigRational::zero);
                    let fsw = at(s);
                    for (v, fv) in block.iter().filter(|(v, _)| *v != s) {
                        if fs * at(v) != fv * &fsw {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Printed as one `exp : p/q` line per coordinate under a `[b]` header.
impl fmt::Display for SchemePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, block) in &self.blocks {
            writeln!(f, "[{b}]")?;
            for (u, x) in block {
                writeln!(f, "{u} : {x}")?;
            }
        }
        Ok(())
    }
}

/// `I_f` as a reduced lex Gröbner basis, after checking the equations.
///
/// Blocks must be in chart form, as produced by [`SchemePoint::new`].
pub fn point_to_ideal(a: &GradingSet, f: &SchemePoint) -> Result<BinomialIdeal> {
    f.check_shape(a)?;
    if !f.on_scheme(a)? {
        return Err(Error::NotOnScheme);
    }
    // f_u x^v - f_v x^u is a combination of the binomials pairing u and v
    // with the chart monomial s (f_s = 1), so those suffice
    let mut gens = Vec::new();
    for block in f.blocks.values() {
        let (s, _) = block.iter().find(|(_, x)| !x.is_zero()).expect("charted block");
        for (v, fv) in block.iter().filter(|(v, _)| *v != s) {
            if fv.is_zero() {
                gens.push(Binomial::monomial(v.clone()));
            } else {
                gens.push(Binomial::oriented(v.clone(), s.clone(), fv.clone()));
            }
        }
    }
    let j = BinomialIdeal::new(a.clone(), gens)?;
    Ok(buchberger(&j, &TermOrder::lex(a.n()))?.ideal)
}

/// The point of an `A`-graded ideal at level `r`.
pub fn ideal_to_point(j: &BinomialIdeal, r: u64) -> Result<SchemePoint> {
    let a = j.grading();
    let gb = buchberger(j, &TermOrder::lex(a.n()))?;
    let mut blocks = BTreeMap::new();
    for b in zonotope_degrees(a, r)? {
        let mut block = BTreeMap::new();
        let mut standard: BTreeSet<ExponentVector> = BTreeSet::new();
        for u in enumerate_fiber(a, &b)?.points {
            let x = match gb.reduce_monomial(&u) {
                None => BigRational::zero(),
                Some((c, s)) => {
                    standard.insert(s);
                    c
                }
            };
            block.insert(u, x);
        }
        if standard.len() != 1 {
            return Err(Error::NotAGraded {
                degree: b,
                count: standard.len() as u64,
            });
        }
        blocks.insert(b, block);
    }
    SchemePoint::new(r, blocks)
}
