//! The census of monomial `A`-graded ideals.
//!
//! A monomial ideal `I` is `A`-graded iff it picks exactly one standard
//! monomial in each fiber, and the standard monomials are closed under
//! division. The search walks the degrees of `NA` up to the largest
//! primitive degree in graded-lex order, which refines divisibility.
//!
//! At degree `b` the only possible standard monomials are the candidates:
//! monomials all of whose maximal proper divisors are standard. Every
//! candidate that is not chosen is then a minimal generator of `I` in
//! degree `b`. Minimal generators of an `A`-graded ideal only occur in
//! primitive degrees: let `x^u` be a minimal generator with standard
//! monomial `x^v` of the same degree. If `x^u - x^v` were not primitive
//! there would be `u' <= u`, `v' <= v` with `deg u' = deg v'` and
//! `0 != u' != u`. Then `x^{u'}` and `x^{u - u'}` are proper divisors of a
//! minimal generator, hence standard, and `x^{v'}`, `x^{v - v'}` divide a
//! standard monomial, hence are standard. One standard monomial per degree
//! forces `u' = v'` and `u - u' = v - v'`, so `u = v`, which is absurd.
//! So at a non-primitive degree the branch survives only with exactly one
//! candidate; at a primitive degree it branches over all candidates. No
//! ideal has a minimal generator beyond the last primitive degree, so each
//! leaf determines its ideal, which is then certified by the Hilbert series
//! test.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graver::{primitive_binomials, Completeness, GraverOptions, PrimitiveSet, SearchBound};
use crate::grading::{
    degree_of, enumerate_fiber, semigroup_table, Degree, DegreeBox, ExponentVector, GradingSet,
    DEFAULT_BOX_LIMIT,
};
use crate::hilbert::{is_a_graded_monomial, MonomialIdeal};

/// One standard monomial per degree of `NA` up to a cap, with the ideal it
/// induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardSelection {
    pub grading: GradingSet,
    pub choice: BTreeMap<Degree, ExponentVector>,
    pub ideal: MonomialIdeal,
    pub completeness: Completeness,
}

impl StandardSelection {
    pub fn standard(&self, b: &Degree) -> Option<&ExponentVector> {
        self.choice.get(b)
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    pub graver: GraverOptions,
    /// Box used to certify `A`-gradedness when `d >= 2`.
    pub certify: SearchBound,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub primitive: PrimitiveSet,
    /// Sorted by generator list.
    pub selections: Vec<StandardSelection>,
}

impl Census {
    pub fn len(&self) -> usize {
        self.selections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selections.is_empty()
    }
}

struct Search<'a> {
    a: &'a GradingSet,
    bx: DegreeBox,
    member: Vec<bool>,
    primitive: Vec<bool>,
    order: Vec<usize>,
    shifts: Vec<Option<usize>>,
}

impl Search<'_> {
    /// Monomials at `idx` whose maximal proper divisors are all standard.
    fn candidates(&self, idx: usize, chosen: &[Option<ExponentVector>]) -> Vec<ExponentVector> {
        let mut out: Vec<ExponentVector> = Vec::new();
        for (i, shift) in self.shifts.iter().enumerate() {
            let Some(s) = shift else { continue };
            if idx < *s {
                continue;
            }
            let b = self.bx.degree(idx);
            let Some(prev) = b.checked_sub(self.a.column(i)) else { continue };
            let p = self.bx.index(&prev).expect("inside box");
            let Some(base) = &chosen[p] else { continue };
            let w = base.add(&ExponentVector::unit(self.a.n(), i));
            if !out.contains(&w) && self.closed(&w, &b, chosen) {
                out.push(w);
            }
        }
        out.sort();
        out
    }

    fn closed(&self, w: &ExponentVector, b: &Degree, chosen: &[Option<ExponentVector>]) -> bool {
        (0..self.a.n()).filter(|&j| w[j] > 0).all(|j| {
            let prev = b.checked_sub(self.a.column(j)).expect("divisor degree");
            let p = self.bx.index(&prev).expect("inside box");
            let mut x = w.clone().into_inner();
            x[j] -= 1;
            chosen[p].as_ref() == Some(&ExponentVector::new(x))
        })
    }

    fn run(
        &self,
        level: usize,
        chosen: &mut Vec<Option<ExponentVector>>,
        gens: &mut Vec<ExponentVector>,
        leaves: &mut Vec<Vec<Option<ExponentVector>>>,
        leaf_gens: &mut Vec<Vec<ExponentVector>>,
    ) {
        let Some(&idx) = self.order.get(level) else {
            leaves.push(chosen.clone());
            leaf_gens.push(gens.clone());
            return;
        };
        let cands = self.candidates(idx, chosen);
        if cands.is_empty() {
            return;
        }
        if !self.primitive[idx] {
            if cands.len() == 1 {
                chosen[idx] = Some(cands[0].clone());
                self.run(level + 1, chosen, gens, leaves, leaf_gens);
                chosen[idx] = None;
            }
            return;
        }
        for k in 0..cands.len() {
            let mark = gens.len();
            gens.extend(cands.iter().enumerate().filter(|&(m, _)| m != k).map(|(_, c)| c.clone()));
            chosen[idx] = Some(cands[k].clone());
            self.run(level + 1, chosen, gens, leaves, leaf_gens);
            chosen[idx] = None;
            gens.truncate(mark);
        }
    }
}

/// Every monomial `A`-graded ideal, each certified.
pub fn enumerate_mono_agas(a: &GradingSet, opts: &CensusOptions) -> Result<Census> {
    let primitive = primitive_binomials(a, &opts.graver)?;
    let cap = primitive.max_degree();
    let bx = DegreeBox::new(&cap, DEFAULT_BOX_LIMIT)?;
    let member = semigroup_table(a, &bx);
    let mut prim = alloc::vec![false; bx.size()];
    for b in &primitive.degrees {
        prim[bx.index(b).expect("primitive degree inside its own join")] = true;
    }
    let mut order: Vec<usize> = (1..bx.size()).filter(|&i| member[i]).collect();
    order.sort_by(|&x, &y| bx.degree(x).graded_cmp(&bx.degree(y)));
    let shifts = a.columns().iter().map(|c| bx.index(c)).collect();
    let search = Search {
        a,
        bx,
        member,
        primitive: prim,
        order,
        shifts,
    };
    let mut chosen = alloc::vec![None; search.bx.size()];
    chosen[0] = Some(ExponentVector::zero(a.n()));
    let mut leaves = Vec::new();
    let mut leaf_gens = Vec::new();
    search.run(0, &mut chosen, &mut Vec::new(), &mut leaves, &mut leaf_gens);

    let mut selections = Vec::with_capacity(leaves.len());
    for (leaf, gens) in leaves.into_iter().zip(leaf_gens) {
        let ideal = MonomialIdeal::new(a.clone(), gens)?;
        let verdict = is_a_graded_monomial(&ideal, &opts.certify)?;
        if !verdict.a_graded {
            continue;
        }
        let choice = leaf
            .into_iter()
            .enumerate()
            .filter(|(i, _)| search.member[*i])
            .map(|(i, u)| (search.bx.degree(i), u.expect("every member degree chosen")))
            .collect();
        selections.push(StandardSelection {
            grading: a.clone(),
            choice,
            ideal,
            completeness: join(&primitive.completeness, &verdict.completeness),
        });
    }
    selections.sort_by(|x, y| x.ideal.generators().cmp(y.ideal.generators()));
    Ok(Census {
        primitive,
        selections,
    })
}

fn join(x: &Completeness, y: &Completeness) -> Completeness {
    match (x, y) {
        (Completeness::Certified, c) | (c, Completeness::Certified) => c.clone(),
        (Completeness::Truncated, _) | (_, Completeness::Truncated) => Completeness::Truncated,
        (c, _) => c.clone(),
    }
}

/// Why a proposed selection fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// No monomial is chosen at a degree of `NA` below the cap.
    Missing(Degree),
    /// The chosen monomial does not have the degree it is filed under.
    WrongDegree(Degree),
    /// A divisor of the chosen monomial is not the choice at its degree.
    NotDivisorClosed(Degree),
    /// The induced ideal has `count` standard monomials at `degree`.
    NotAGraded { degree: Degree, count: u64 },
}

/// Check a selection over all degrees of `NA` up to the largest primitive
/// degree and return it with its induced ideal.
pub fn verify_selection(
    a: &GradingSet,
    choice: &BTreeMap<Degree, ExponentVector>,
    opts: &CensusOptions,
) -> Result<core::result::Result<StandardSelection, Rejection>> {
    let primitive = primitive_binomials(a, &opts.graver)?;
    let cap = primitive.max_degree();
    let mut degrees = crate::grading::semigroup_members_up_to(a, &cap)?;
    degrees.sort_by(|x, y| x.graded_cmp(y));
    let mut gens = Vec::new();
    for b in &degrees {
        let Some(u) = choice.get(b) else {
            return Ok(Err(Rejection::Missing(b.clone())));
        };
        if &degree_of(a, u)? != b {
            return Ok(Err(Rejection::WrongDegree(b.clone())));
        }
        for j in (0..a.n()).filter(|&j| u[j] > 0) {
            let mut x = u.clone().into_inner();
            x[j] -= 1;
            let prev = b.checked_sub(a.column(j)).expect("divisor degree");
            if choice.get(&prev) != Some(&ExponentVector::new(x)) {
                return Ok(Err(Rejection::NotDivisorClosed(b.clone())));
            }
        }
        // non-standard monomials whose maximal divisors are all standard
        for w in enumerate_fiber(a, b)?.points {
            if &w == u {
                continue;
            }
            let minimal = (0..a.n()).filter(|&j| w[j] > 0).all(|j| {
                let mut x = w.clone().into_inner();
                x[j] -= 1;
                let prev = b.checked_sub(a.column(j)).expect("divisor degree");
                choice.get(&prev) == Some(&ExponentVector::new(x))
            });
            if minimal {
                gens.push(w);
            }
        }
    }
    let ideal = MonomialIdeal::new(a.clone(), gens)?;
    let verdict = is_a_graded_monomial(&ideal, &opts.certify)?;
    if let Some((degree, count)) = verdict.witness {
        return Ok(Err(Rejection::NotAGraded { degree, count }));
    }
    let choice = degrees
        .iter()
        .map(|b| (b.clone(), choice[b].clone()))
        .collect();
    Ok(Ok(StandardSelection {
        grading: a.clone(),
        choice,
        ideal,
        completeness: join(&primitive.completeness, &verdict.completeness),
    }))
}

/// The choice map read off a monomial ideal: its unique standard monomial
/// in each degree of `NA` up to `up_to`.
pub fn selection_of(ideal: &MonomialIdeal, up_to: &Degree) -> Result<BTreeMap<Degree, ExponentVector>> {
    Ok(standard_monomials(ideal, up_to)?.into_iter().collect())
}

/// The standard monomial of each degree of `NA` up to `up_to`, in
/// graded-lex order. Fails at the first degree without exactly one.
pub fn standard_monomials(ideal: &MonomialIdeal, up_to: &Degree) -> Result<Vec<(Degree, ExponentVector)>> {
    let a = ideal.grading();
    let mut degrees = crate::grading::semigroup_members_up_to(a, up_to)?;
    degrees.sort_by(|x, y| x.graded_cmp(y));
    let mut out = Vec::with_capacity(degrees.len());
    for b in degrees {
        let fiber = enumerate_fiber(a, &b)?;
        let std: Vec<&ExponentVector> = ideal.standard_in(&fiber).collect();
        if std.len() != 1 {
            return Err(Error::NotAGraded {
                degree: b,
                count: std.len() as u64,
            });
        }
        out.push((b, std[0].clone()));
    }
    Ok(out)
}
