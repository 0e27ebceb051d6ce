//! Coherence of monomial `A`-graded ideals.
//!
//! `I` equals `in_omega(I_A)` iff at every primitive degree `b` the
//! standard monomial `u_b` is the unique weight minimum of its fiber:
//! `omega . (v - u_b) >= 1` for all other `v`. Necessity is clear. For
//! sufficiency, every minimal generator of `I` sits at a primitive degree
//! and is then a leading term, so `I` is contained in `in_omega(I_A)`; both
//! have the Hilbert function of `I_A`, hence they are equal. A torus
//! rescaling fixes monomial ideals, so equality is the right test.
//!
//! The system is solved by row generation, starting from the rows that
//! compare each minimal generator with its standard monomial. An
//! infeasible subsystem already refutes the whole system; its certificate
//! is shrunk to an irreducible support and scaled to coprime integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::census::{enumerate_mono_agas, CensusOptions, StandardSelection};
use crate::error::{Error, Result};
use crate::graver::PrimitiveSet;
use crate::grading::{enumerate_fiber, Degree, ExponentVector, GradingSet};
use crate::lp::{lp_feasible, to_primitive_integers, FarkasCertificate, LinearConstraint, LpOutcome};

/// One inequality `omega . (v - u) >= 1`: `v` must outweigh the standard `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceRow {
    pub degree: Degree,
    pub standard: ExponentVector,
    pub competitor: ExponentVector,
}

impl CoherenceRow {
    pub fn constraint(&self) -> LinearConstraint {
        LinearConstraint::strict_int(&self.competitor.difference(&self.standard))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoherenceVerdict {
    /// `I = in_omega(I_A)`.
    Coherent { omega: Vec<BigInt> },
    /// Positive integer multipliers on the listed rows: the weights cancel
    /// while the right-hand sides add up to a positive number.
    Incoherent {
        rows: Vec<CoherenceRow>,
        multipliers: Vec<BigInt>,
    },
}

impl CoherenceVerdict {
    pub fn is_coherent(&self) -> bool {
        matches!(self, CoherenceVerdict::Coherent { .. })
    }

    /// Exact check: every row holds for `omega`, or the multipliers cancel
    /// the weights while adding up positive right-hand sides.
    pub fn verify(&self, all_rows: &[CoherenceRow]) -> bool {
        match self {
            CoherenceVerdict::Coherent { omega } => {
                let w: Vec<BigRational> = omega.iter().cloned().map(BigRational::from_integer).collect();
                all_rows.iter().all(|r| r.constraint().is_satisfied_by(&w))
            }
            CoherenceVerdict::Incoherent { rows, multipliers } => {
                let cert = FarkasCertificate {
                    multipliers: multipliers.iter().cloned().map(BigRational::from_integer).collect(),
                };
                let cs: Vec<LinearConstraint> = rows.iter().map(CoherenceRow::constraint).collect();
                let n = rows.first().map_or(0, |r| r.standard.len());
                rows.iter().all(|r| all_rows.contains(r)) && cert.verify(&cs, n)
            }
        }
    }

    /// The combined identity `sum y_k omega.(v_k - u_k) = 0` as the pair of
    /// weight vectors `(sum y_k v_k, sum y_k u_k)`; both sides are equal.
    pub fn combined_sides(&self) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
        let CoherenceVerdict::Incoherent { rows, multipliers } = self else {
            return None;
        };
        let n = rows.first()?.standard.len();
        let mut lhs = alloc::vec![BigInt::zero(); n];
        let mut rhs = alloc::vec![BigInt::zero(); n];
        for (r, y) in rows.iter().zip(multipliers) {
            for i in 0..n {
                lhs[i] += y * BigInt::from(r.competitor[i]);
                rhs[i] += y * BigInt::from(r.standard[i]);
            }
        }
        Some((lhs, rhs))
    }
}

/// All rows of the coherence system of `sel`.
pub fn coherence_rows(sel: &StandardSelection, primitive: &PrimitiveSet) -> Result<Vec<CoherenceRow>> {
    let a = &sel.grading;
    let mut rows = Vec::new();
    for b in &primitive.degrees {
        let u = sel.standard(b).ok_or_else(|| Error::NotInSemigroup(b.clone()))?;
        for v in enumerate_fiber(a, b)?.points {
            if &v != u {
                rows.push(CoherenceRow {
                    degree: b.clone(),
                    standard: u.clone(),
                    competitor: v,
                });
            }
        }
    }
    Ok(rows)
}

/// Decide whether `sel` is an initial ideal of `I_A`.
pub fn coherence_test(sel: &StandardSelection, primitive: &PrimitiveSet) -> Result<CoherenceVerdict> {
    let a = &sel.grading;
    if sel.grading != primitive.grading {
        return Err(Error::Inconsistent("selection and primitive set use different gradings".into()));
    }
    let all = coherence_rows(sel, primitive)?;
    let n = a.n();
    let mut active: Vec<usize> = all
        .iter()
        .enumerate()
        .filter(|(_, r)| sel.ideal.generators().contains(&r.competitor))
        .map(|(k, _)| k)
        .collect();
    loop {
        let cs: Vec<LinearConstraint> = active.iter().map(|&k| all[k].constraint()).collect();
        match lp_feasible(n, &cs)? {
            LpOutcome::Feasible(x) => {
                let violated: Vec<usize> = (0..all.len())
                    .filter(|k| !all[*k].constraint().is_satisfied_by(&x))
                    .collect();
                if violated.is_empty() {
                    // a positive rescaling keeps each integer-valued row >= 1
                    let omega = to_primitive_integers(&x);
                    return Ok(CoherenceVerdict::Coherent { omega });
                }
                active.extend(violated);
            }
            LpOutcome::Infeasible(cert) => {
                let support: Vec<usize> = active
                    .iter()
                    .zip(&cert.multipliers)
                    .filter(|(_, y)| !y.is_zero())
                    .map(|(&k, _)| k)
                    .collect();
                return irreducible_certificate(n, &all, support);
            }
        }
    }
}

/// Drop rows while the rest stays infeasible, then certify what remains.
fn irreducible_certificate(n: usize, all: &[CoherenceRow], mut support: Vec<usize>) -> Result<CoherenceVerdict> {
    let mut k = 0;
    while k < support.len() {
        let trial: Vec<usize> = support.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, &r)| r).collect();
        let cs: Vec<LinearConstraint> = trial.iter().map(|&r| all[r].constraint()).collect();
        if !lp_feasible(n, &cs)?.is_feasible() {
            support = trial;
        } else {
            k += 1;
        }
    }
    let cs: Vec<LinearConstraint> = support.iter().map(|&r| all[r].constraint()).collect();
    let LpOutcome::Infeasible(cert) = lp_feasible(n, &cs)? else {
        return Err(Error::Inconsistent("irreducible subsystem became feasible".into()));
    };
    let ints = cert.integer_multipliers();
    let mut pairs: Vec<(CoherenceRow, BigInt)> = support
        .iter()
        .zip(ints)
        .filter(|(_, y)| !y.is_zero())
        .map(|(&r, y)| (all[r].clone(), y))
        .collect();
    pairs.sort_by(|x, y| x.0.degree.graded_cmp(&y.0.degree).then_with(|| x.0.competitor.cmp(&y.0.competitor)));
    let (rows, multipliers) = pairs.into_iter().unzip();
    Ok(CoherenceVerdict::Incoherent { rows, multipliers })
}

/// `(primitive binomials, mono-AGAs, incoherent mono-AGAs)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub graver: usize,
    pub census: usize,
    pub incoherent: usize,
}

pub fn classify(a: &GradingSet) -> Result<Classification> {
    let census = enumerate_mono_agas(a, &CensusOptions::default())?;
    let mut incoherent = 0;
    for sel in &census.selections {
        if !coherence_test(sel, &census.primitive)?.is_coherent() {
            incoherent += 1;
        }
    }
    Ok(Classification {
        graver: census.primitive.len(),
        census: census.len(),
        incoherent,
    })
}

/// All quadruples `1 <= a_1 < a_2 < a_3 < a_4 <= 9` in lex order.
pub fn table1_quadruples() -> Vec<[u64; 4]> {
    let mut out = Vec::with_capacity(126);
    for a in 1..=9 {
        for b in a + 1..=9 {
            for c in b + 1..=9 {
                for d in c + 1..=9 {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// `classify` over every quadruple, sequentially.
pub fn table1() -> Result<Vec<([u64; 4], Classification)>> {
    table1_quadruples()
        .into_iter()
        .map(|q| Ok((q, classify(&GradingSet::one_dim(&q)?)?)))
        .collect()
}
