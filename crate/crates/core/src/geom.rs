//! Polytope predicates on fibers, decided by exact LP.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grading::{Degree, ExponentVector, Fiber};
use crate::lp::{int, lp_feasible, LinearConstraint};

fn diff_row(p: &ExponentVector, u: &ExponentVector) -> Vec<BigRational> {
    p.difference(u).into_iter().map(int).collect()
}

/// `u` is a vertex of `conv(F)`: some linear functional is minimized over
/// the fiber exactly at `u`.
pub fn is_vertex(fiber: &Fiber, u: &ExponentVector) -> Result<bool> {
    if !fiber.contains(u) {
        return Err(Error::NotInFiber);
    }
    let cs: Vec<LinearConstraint> = fiber
        .points
        .iter()
        .filter(|p| *p != u)
        .map(|p| LinearConstraint::ge(diff_row(p, u), BigRational::one()))
        .collect();
    Ok(lp_feasible(u.len(), &cs)?.is_feasible())
}

/// `conv{u, v}` is an edge of `conv(F)` containing no third fiber point:
/// some functional is constant on `{u, v}` and strictly larger on every
/// other point of the fiber.
pub fn is_edge(fiber: &Fiber, u: &ExponentVector, v: &ExponentVector) -> Result<bool> {
    if !fiber.contains(u) || !fiber.contains(v) {
        return Err(Error::NotInFiber);
    }
    if u == v {
        return Err(Error::DegenerateBinomial);
    }
    let mut cs: Vec<LinearConstraint> = Vec::with_capacity(fiber.len());
    cs.push(LinearConstraint::eq(diff_row(v, u), BigRational::zero()));
    cs.extend(
        fiber
            .points
            .iter()
            .filter(|p| *p != u && *p != v)
            .map(|p| LinearConstraint::ge(diff_row(p, u), BigRational::one())),
    );
    Ok(lp_feasible(u.len(), &cs)?.is_feasible())
}

/// `b = sum lambda_i g_i` with every `lambda_i > 0`.
///
/// Homogenized as `lambda_i >= 1`, `t >= 1`, `sum lambda_i g_i = t b`.
pub fn in_relative_interior(generators: &[Degree], b: &Degree) -> Result<bool> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidGrading("no generators".into()));
    };
    let d = first.len();
    for g in generators.iter().chain(core::iter::once(b)) {
        if g.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: g.len(),
            });
        }
    }
    let m = generators.len();
    let dim = m + 1;
    let mut cs = Vec::with_capacity(dim + d);
    for i in 0..dim {
        let mut row = alloc::vec![BigRational::zero(); dim];
        row[i] = BigRational::one();
        cs.push(LinearConstraint::ge(row, BigRational::one()));
    }
    for j in 0..d {
        let mut row: Vec<BigRational> = generators.iter().map(|g| int(g[j] as i64)).collect();
        row.push(-int(b[j] as i64));
        cs.push(LinearConstraint::eq(row, BigRational::zero()));
    }
    Ok(lp_feasible(dim, &cs)?.is_feasible())
}

/// `b` lies in the closed cone `pos(generators)`.
pub fn in_cone(generators: &[Degree], b: &Degree) -> Result<bool> {
    let d = b.len();
    let m = generators.len();
    let mut cs = Vec::with_capacity(m + d);
    for i in 0..m {
        let mut row = alloc::vec![BigRational::zero(); m];
        row[i] = BigRational::one();
        cs.push(LinearConstraint::ge(row, BigRational::zero()));
    }
    for j in 0..d {
        let row: Vec<BigRational> = generators.iter().map(|g| int(g[j] as i64)).collect();
        cs.push(LinearConstraint::eq(row, int(b[j] as i64)));
    }
    Ok(lp_feasible(m, &cs)?.is_feasible())
}
