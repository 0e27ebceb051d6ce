//! Exact rational feasibility for systems `a_k . x >= b_k` / `a_k . x = b_k`
//! over free variables, with Farkas certificates on infeasibility.
//!
//! The system is decided through its homogeneous dual
//!
//! ```text
//!     maximize  sum_k b_k y_k   s.t.  sum_k y_k a_k = 0,  y_k >= 0 on >= rows
//! ```
//!
//! which is always feasible (`y = 0`). It is unbounded exactly when the
//! primal system is infeasible, and the unbounded ray is the certificate.
//! Otherwise the simplex multipliers of the final basis are a primal point.
//! Every right-hand side of the dual is zero, so all pivots are degenerate;
//! Bland's rule prevents cycling.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `normal . x >= rhs`
    Ge,
    /// `normal . x = rhs`
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub normal: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl LinearConstraint {
    pub fn ge(normal: Vec<BigRational>, rhs: BigRational) -> Self {
        LinearConstraint {
            normal,
            relation: Relation::Ge,
            rhs,
        }
    }

    pub fn eq(normal: Vec<BigRational>, rhs: BigRational) -> Self {
        LinearConstraint {
            normal,
            relation: Relation::Eq,
            rhs,
        }
    }

    /// `normal . x >= 1` for an integer normal; the homogeneous stand-in for `> 0`.
    pub fn strict_int(normal: &[i64]) -> Self {
        Self::ge(normal.iter().map(|&x| int(x)).collect(), BigRational::one())
    }

    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        let lhs = dot(&self.normal, x);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// Multipliers `y` (one per constraint) with `sum y_k a_k = 0` and
/// `sum y_k b_k > 0`, `y_k >= 0` on inequality rows. Equality rows may
/// carry either sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub multipliers: Vec<BigRational>,
}

impl FarkasCertificate {
    /// Exact check of the certificate against its system.
    pub fn verify(&self, constraints: &[LinearConstraint], dim: usize) -> bool {
        if self.multipliers.len() != constraints.len() {
            return false;
        }
        let mut combo = vec![BigRational::zero(); dim];
        let mut rhs = BigRational::zero();
        for (y, c) in self.multipliers.iter().zip(constraints) {
            if c.relation == Relation::Ge && y.is_negative() {
                return false;
            }
            if y.is_zero() {
                continue;
            }
            for (s, a) in combo.iter_mut().zip(&c.normal) {
                *s += y * a;
            }
            rhs += y * &c.rhs;
        }
        combo.iter().all(Zero::is_zero) && rhs.is_positive()
    }

    /// Rescale to the smallest integer multipliers.
    pub fn integer_multipliers(&self) -> Vec<BigInt> {
        to_primitive_integers(&self.multipliers)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(Vec<BigRational>),
    Infeasible(FarkasCertificate),
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }

    /// Both branches are checkable by substitution.
    pub fn verify(&self, constraints: &[LinearConstraint], dim: usize) -> bool {
        match self {
            LpOutcome::Feasible(x) => {
                x.len() == dim && constraints.iter().all(|c| c.is_satisfied_by(x))
            }
            LpOutcome::Infeasible(cert) => cert.verify(constraints, dim),
        }
    }
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub(crate) fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Scale a rational vector to coprime integers with the same direction.
pub fn to_primitive_integers(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Decide feasibility of `constraints` in `dim` free variables.
///
/// An empty system is feasible at the origin.
pub fn lp_feasible(dim: usize, constraints: &[LinearConstraint]) -> Result<LpOutcome> {
    for c in constraints {
        if c.normal.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: c.normal.len(),
            });
        }
    }
    if constraints.is_empty() {
        return Ok(LpOutcome::Feasible(vec![BigRational::zero(); dim]));
    }

    // Dual columns: one per >= row, two (y+, y-) per = row.
    let mut col_source: Vec<(usize, bool)> = Vec::new();
    for (k, c) in constraints.iter().enumerate() {
        col_source.push((k, false));
        if c.relation == Relation::Eq {
            col_source.push((k, true));
        }
    }
    let ncols = col_source.len();
    let width = ncols + dim;
    let mut rows: Vec<Vec<BigRational>> = (0..dim)
        .map(|j| {
            let mut row = vec![BigRational::zero(); width];
            for (col, &(k, neg)) in col_source.iter().enumerate() {
                let a = &constraints[k].normal[j];
                row[col] = if neg { -a.clone() } else { a.clone() };
            }
            row[ncols + j] = BigRational::one();
            row
        })
        .collect();
    let mut reduced: Vec<BigRational> = (0..width)
        .map(|col| {
            if col < ncols {
                let (k, neg) = col_source[col];
                let b = &constraints[k].rhs;
                if neg {
                    -b.clone()
                } else {
                    b.clone()
                }
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let mut basis: Vec<usize> = (ncols..width).collect();
    let mut is_basic = vec![false; width];
    for &b in &basis {
        is_basic[b] = true;
    }

    loop {
        let entering = (0..ncols).find(|&j| !is_basic[j] && reduced[j].is_positive());
        let Some(j) = entering else {
            // optimal: read the primal point off the artificial columns
            let x: Vec<BigRational> = (0..dim).map(|i| -reduced[ncols + i].clone()).collect();
            if !constraints.iter().all(|c| c.is_satisfied_by(&x)) {
                return Err(Error::Inconsistent("simplex returned an infeasible point".into()));
            }
            return Ok(LpOutcome::Feasible(x));
        };

        // Artificial rows are bounded at zero from both sides and must leave
        // on any nonzero entry; real rows block on positive entries.
        let mut pivot_row: Option<usize> = None;
        for (i, &b) in basis.iter().enumerate() {
            let e = &rows[i][j];
            if b >= ncols && !e.is_zero() {
                pivot_row = Some(i);
                break;
            }
        }
        if pivot_row.is_none() {
            pivot_row = basis
                .iter()
                .enumerate()
                .filter(|(i, &b)| b < ncols && rows[*i][j].is_positive())
                .min_by_key(|(_, &b)| b)
                .map(|(i, _)| i);
        }
        let Some(r) = pivot_row else {
            // unbounded ray: y_j = 1, basic y_B = -column
            let mut y = vec![BigRational::zero(); constraints.len()];
            let mut add = |col: usize, val: BigRational| {
                let (k, neg) = col_source[col];
                if neg {
                    y[k] -= val;
                } else {
                    y[k] += val;
                }
            };
            add(j, BigRational::one());
            for (i, &b) in basis.iter().enumerate() {
                if b < ncols && !rows[i][j].is_zero() {
                    add(b, -rows[i][j].clone());
                }
            }
            let cert = FarkasCertificate { multipliers: y };
            if !cert.verify(constraints, dim) {
                return Err(Error::Inconsistent("simplex returned an invalid certificate".into()));
            }
            return Ok(LpOutcome::Infeasible(cert));
        };

        pivot(&mut rows, &mut reduced, r, j);
        is_basic[basis[r]] = false;
        basis[r] = j;
        is_basic[j] = true;
    }
}

fn pivot(rows: &mut [Vec<BigRational>], reduced: &mut [BigRational], r: usize, j: usize) {
    let inv = rows[r][j].recip();
    for x in rows[r].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let prow = rows[r].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == r || row[j].is_zero() {
            continue;
        }
        let f = row[j].clone();
        for (x, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
    if !reduced[j].is_zero() {
        let f = reduced[j].clone();
        for (x, p) in reduced.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
}
