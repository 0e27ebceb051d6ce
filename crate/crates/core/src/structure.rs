//! Radicals, polyhedral subdivisions and torus invariants.
//!
//! For a monomial ideal `I`, the monomial `x^u` is nilpotent modulo `I` iff
//! some minimal generator `g` has `supp(g) ⊆ supp(u)`. If so, `g` divides
//! `x^{ku}` once `k` reaches the largest exponent of `g`; conversely a
//! generator dividing some power `x^{ku}` has its support inside
//! `supp(u)`. So the supports of non-nilpotent monomials are exactly the
//! sets `σ` that contain no generator support.
//!
//! The cell of a degree `b` is the largest such `σ` with `b` in the relative
//! interior of `pos(σ)`: some monomial with support exactly `σ` then has
//! degree a multiple of `b`. The maximal cells are found among the degrees
//! `b_σ = Σ_{i ∈ σ} a_i`, because a maximal cell `σ` equals `cell(b_σ)`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geom::{in_cone, in_relative_interior};
use crate::grading::{enumerate_fiber, Binomial, Degree, DegreeBox, ExponentVector, GradingSet};
use crate::groebner::{buchberger, toric_ideal_by_saturation, BinomialIdeal, GroebnerBasis, TermOrder};
use crate::hilbert::MonomialIdeal;
use crate::lattice::integer_kernel;
use crate::lp::{int, lp_feasible, LinearConstraint};

/// Largest number of variables for the subset scans.
pub const MAX_SUBSET_VARIABLES: usize = 20;

/// Power used by the Gröbner-basis nilpotency test for binomial ideals.
pub const DEFAULT_NILPOTENCY_POWER: u32 = 20;

const SAMPLE_LIMIT: usize = 20_000;

/// A set of column indices (0-based, sorted).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub sigma: Vec<usize>,
}

impl Cell {
    fn from_mask(mask: u64) -> Cell {
        Cell {
            sigma: (0..64).filter(|i| mask >> i & 1 == 1).collect(),
        }
    }

    fn mask(&self) -> u64 {
        self.sigma.iter().fold(0, |m, i| m | 1 << i)
    }

    /// The generators `a_i`, `i ∈ σ`.
    pub fn cone(&self, a: &GradingSet) -> Vec<Degree> {
        self.sigma.iter().map(|&i| a.column(i).clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }
}

/// Printed 1-based, e.g. `{4,5,6}`.
impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.sigma.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub grading: GradingSet,
    /// Sorted by size, largest first, then by indices.
    pub maximal_cells: Vec<Cell>,
    /// Cells came from bounded-power normal forms rather than the exact
    /// support criterion.
    pub heuristic: bool,
}

fn check_subset_size(a: &GradingSet) -> Result<()> {
    if a.n() > MAX_SUBSET_VARIABLES {
        return Err(Error::GuardExceeded {
            what: "variables for subset scan",
            limit: MAX_SUBSET_VARIABLES,
        });
    }
    Ok(())
}

/// Supports that carry non-nilpotent monomials: no generator support inside.
fn valid_supports_monomial(ideal: &MonomialIdeal) -> Vec<u64> {
    let n = ideal.grading().n();
    let gens: Vec<u64> = ideal.generators().iter().map(ExponentVector::support_mask).collect();
    (0..1u64 << n).filter(|&s| gens.iter().all(|&g| g & !s != 0)).collect()
}

/// Supports `σ` with `x_σ^power` outside the ideal of `gb`.
fn valid_supports_gb(gb: &GroebnerBasis, power: u32) -> Vec<u64> {
    let n = gb.ideal.grading().n();
    (0..1u64 << n)
        .filter(|&s| {
            let u = ExponentVector::new((0..n).map(|i| if s >> i & 1 == 1 { power } else { 0 }).collect());
            gb.reduce_monomial(&u).is_some()
        })
        .collect()
}

fn maximal_masks(masks: &[u64]) -> Vec<u64> {
    masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&o| o != m && o & m == m))
        .collect()
}

fn cell_among(a: &GradingSet, valid: &[u64], b: &Degree) -> Result<Cell> {
    a.check_degree(b)?;
    if enumerate_fiber(a, b)?.is_empty() {
        return Err(Error::NotInSemigroup(b.clone()));
    }
    if b.is_zero() {
        return Ok(Cell { sigma: Vec::new() });
    }
    let mut hits = Vec::new();
    for &s in valid.iter().filter(|&&s| s != 0) {
        let cell = Cell::from_mask(s);
        if in_relative_interior(&cell.cone(a), b)? {
            hits.push(s);
        }
    }
    let top = maximal_masks(&hits);
    match top.as_slice() {
        [s] => Ok(Cell::from_mask(*s)),
        [] => Err(Error::Inconsistent(alloc::format!("no cell carries degree {b}"))),
        _ => Err(Error::Inconsistent(alloc::format!(
            "degree {b} has {} maximal cells",
            top.len()
        ))),
    }
}

/// `cell(b)` of a monomial `A`-graded ideal.
pub fn cell_of(ideal: &MonomialIdeal, b: &Degree) -> Result<Cell> {
    check_subset_size(ideal.grading())?;
    cell_among(ideal.grading(), &valid_supports_monomial(ideal), b)
}

/// `cell(b)` of a binomial ideal, deciding nilpotency of `x_σ` by the normal
/// form of `x_σ^power`. Exact only when the power is large enough.
pub fn cell_of_binomial(gb: &GroebnerBasis, b: &Degree, power: u32) -> Result<Cell> {
    check_subset_size(gb.ideal.grading())?;
    cell_among(gb.ideal.grading(), &valid_supports_gb(gb, power), b)
}

fn subdivision_among(a: &GradingSet, valid: &[u64], heuristic: bool) -> Result<Subdivision> {
    let mut cells: BTreeSet<Cell> = BTreeSet::new();
    for &s in valid.iter().filter(|&&s| s != 0) {
        let sigma = Cell::from_mask(s);
        let b = sigma
            .cone(a)
            .into_iter()
            .try_fold(Degree::zero(a.d()), |acc, c| acc.checked_add(&c))
            .ok_or(Error::Overflow)?;
        cells.insert(cell_among(a, valid, &b)?);
    }
    let masks: Vec<u64> = cells.iter().map(Cell::mask).collect();
    let mut maximal_cells: Vec<Cell> = maximal_masks(&masks).into_iter().map(Cell::from_mask).collect();
    maximal_cells.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    let sub = Subdivision {
        grading: a.clone(),
        maximal_cells,
        heuristic,
    };
    check_fan(&sub)?;
    check_coverage(&sub)?;
    Ok(sub)
}

/// The subdivision underlying a monomial `A`-graded ideal.
pub fn subdivision_of(ideal: &MonomialIdeal) -> Result<Subdivision> {
    check_subset_size(ideal.grading())?;
    subdivision_among(ideal.grading(), &valid_supports_monomial(ideal), false)
}

/// The subdivision of a binomial ideal from bounded-power normal forms.
pub fn subdivision_of_binomial(gb: &GroebnerBasis, power: u32) -> Result<Subdivision> {
    check_subset_size(gb.ideal.grading())?;
    subdivision_among(gb.ideal.grading(), &valid_supports_gb(gb, power), true)
}

fn cone_row(c: &Degree) -> Vec<BigRational> {
    c.iter().map(|&x| int(x as i64)).collect()
}

/// Some functional `l` separating `pos(σ)` (`l >= 0`) from `pos(τ)`
/// (`l <= 0`) is nonzero on `a_k`.
fn separable_at(sigma: &[Degree], tau: &[Degree], k: &Degree, on_sigma: bool) -> Result<bool> {
    let d = k.len();
    let mut cs = Vec::with_capacity(sigma.len() + tau.len() + 1);
    for c in sigma {
        cs.push(LinearConstraint::ge(cone_row(c), BigRational::zero()));
    }
    for c in tau {
        cs.push(LinearConstraint::ge(cone_row(c).into_iter().map(|x| -x).collect(), BigRational::zero()));
    }
    let row = cone_row(k);
    let row = if on_sigma { row } else { row.into_iter().map(|x| -x).collect() };
    cs.push(LinearConstraint::ge(row, BigRational::one()));
    Ok(lp_feasible(d, &cs)?.is_feasible())
}

fn same_cone(x: &[Degree], y: &[Degree]) -> Result<bool> {
    let inside = |p: &[Degree], q: &[Degree]| -> Result<bool> {
        for c in p {
            if q.is_empty() || !in_cone(q, c)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(inside(x, y)? && inside(y, x)?)
}

/// `pos(σ) ∩ pos(τ)` is a face of both cones.
///
/// Summing, over each column, a separating functional that is nonzero there
/// gives one functional `l` whose zero set on the columns is as small as
/// possible. Both cones meet `l^⊥` in faces that contain the intersection;
/// the intersection is a common face iff these two faces coincide.
pub fn meet_in_common_face(a: &GradingSet, x: &Cell, y: &Cell) -> Result<bool> {
    let cx = x.cone(a);
    let cy = y.cone(a);
    let mut zx = Vec::new();
    for c in &cx {
        if !separable_at(&cx, &cy, c, true)? {
            zx.push(c.clone());
        }
    }
    let mut zy = Vec::new();
    for c in &cy {
        if !separable_at(&cx, &cy, c, false)? {
            zy.push(c.clone());
        }
    }
    same_cone(&zx, &zy)
}

fn check_fan(sub: &Subdivision) -> Result<()> {
    let cells = &sub.maximal_cells;
    for (i, x) in cells.iter().enumerate() {
        for y in &cells[i + 1..] {
            if !meet_in_common_face(&sub.grading, x, y)? {
                return Err(Error::Inconsistent(alloc::format!("cells {x} and {y} overlap")));
            }
        }
    }
    Ok(())
}

fn rank(cols: &[Degree], d: usize) -> Result<usize> {
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|j| cols.iter().map(|c| i64::try_from(c[j]).map_err(|_| Error::Overflow)).collect())
        .collect::<Result<_>>()?;
    Ok(cols.len() - integer_kernel(&rows, cols.len()).len())
}

/// Normals of the facets of a full-dimensional cone, oriented inward.
fn facets(cols: &[Degree], d: usize) -> Result<Vec<Vec<BigInt>>> {
    let mut out: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for pick in 0..1u64 << cols.len() {
        if pick.count_ones() as usize != d - 1 {
            continue;
        }
        let rows: Vec<Vec<i64>> = Cell::from_mask(pick)
            .sigma
            .iter()
            .map(|&k| cols[k].iter().map(|&x| i64::try_from(x).map_err(|_| Error::Overflow)).collect())
            .collect::<Result<_>>()?;
        let ker = integer_kernel(&rows, d);
        let [l] = ker.as_slice() else { continue };
        let vals: Vec<BigInt> = cols.iter().map(|c| dot_big(l, c)).collect();
        let pos = vals.iter().any(Signed::is_positive);
        let neg = vals.iter().any(Signed::is_negative);
        if pos != neg {
            out.insert(if neg { l.iter().map(|x| -x).collect() } else { l.clone() });
        }
    }
    Ok(out.into_iter().collect())
}

fn dot_big(l: &[BigInt], c: &Degree) -> BigInt {
    l.iter().zip(c.iter()).map(|(x, &y)| x * BigInt::from(y)).sum()
}

/// The cells cover `pos(A)`.
///
/// When `A` spans `R^d`, every cell must be full-dimensional and every facet
/// of a cell must either lie on the boundary of `pos(A)` or be the facet of
/// another cell on the opposite side. Lattice points of a box are sampled
/// as a second check.
fn check_coverage(sub: &Subdivision) -> Result<()> {
    let a = &sub.grading;
    let d = a.d();
    if rank(a.columns(), d)? == d {
        for x in &sub.maximal_cells {
            let cx = x.cone(a);
            if rank(&cx, d)? != d {
                return Err(Error::Inconsistent(alloc::format!("cell {x} is not full-dimensional")));
            }
            if d == 1 {
                continue;
            }
            for l in facets(&cx, d)? {
                if a.columns().iter().all(|c| !dot_big(&l, c).is_negative()) {
                    continue;
                }
                let face: Vec<Degree> = cx.iter().filter(|c| dot_big(&l, c).is_zero()).cloned().collect();
                let mut matched = false;
                for y in sub.maximal_cells.iter().filter(|y| *y != x) {
                    let cy = y.cone(a);
                    if cy.iter().any(|c| dot_big(&l, c).is_positive()) {
                        continue;
                    }
                    let other: Vec<Degree> = cy.iter().filter(|c| dot_big(&l, c).is_zero()).cloned().collect();
                    if same_cone(&face, &other)? {
                        matched = true;
                        break;
                    }
                }
                if !matched {
                    return Err(Error::Inconsistent(alloc::format!("a facet of cell {x} is exposed")));
                }
            }
        }
    }
    let sum = a.column_sum();
    let mut cap: Vec<u64> = sum.to_vec();
    while cap.iter().map(|&c| c as usize + 1).product::<usize>() > SAMPLE_LIMIT {
        for c in cap.iter_mut() {
            *c = (*c / 2).max(1);
        }
    }
    let bx = DegreeBox::new(&Degree::new(cap), SAMPLE_LIMIT)?;
    let cones: Vec<Vec<Degree>> = sub.maximal_cells.iter().map(|x| x.cone(a)).collect();
    for b in bx.degrees() {
        if b.is_zero() || !in_cone(a.columns(), &b)? {
            continue;
        }
        let mut covered = false;
        for c in &cones {
            if in_cone(c, &b)? {
                covered = true;
                break;
            }
        }
        if !covered {
            return Err(Error::Inconsistent(alloc::format!("degree {b} lies in no cell")));
        }
    }
    Ok(())
}

/// `I_σ + <x_j : j ∉ σ>` for each maximal cell, with `I_σ` the toric ideal
/// of the sub-configuration, as reduced lex Gröbner bases.
pub fn stanley_components(sub: &Subdivision) -> Result<Vec<BinomialIdeal>> {
    let a = &sub.grading;
    let n = a.n();
    let mut out = Vec::with_capacity(sub.maximal_cells.len());
    for cell in &sub.maximal_cells {
        let mut gens: Vec<Binomial> = (0..n)
            .filter(|j| !cell.sigma.contains(j))
            .map(|j| Binomial::monomial(ExponentVector::unit(n, j)))
            .collect();
        if !cell.is_empty() {
            let sub_a = a.restrict(&cell.sigma)?;
            let lift = |w: &ExponentVector| {
                let mut x = vec![0u32; n];
                for (k, &i) in cell.sigma.iter().enumerate() {
                    x[i] = w[k];
                }
                ExponentVector::new(x)
            };
            for g in toric_ideal_by_saturation(&sub_a)?.generators() {
                gens.push(Binomial::oriented(lift(g.u()), lift(g.v()), g.c().clone()));
            }
        }
        let j = BinomialIdeal::new(a.clone(), gens)?;
        out.push(buchberger(&j, &TermOrder::lex(n))?.ideal);
    }
    Ok(out)
}

/// `Rad(I)` of a monomial ideal.
pub fn radical_mono(ideal: &MonomialIdeal) -> MonomialIdeal {
    ideal.radical()
}

/// `∩_σ <x_j : j ∉ σ>` over the maximal cells.
pub fn stanley_monomial_part(sub: &Subdivision) -> Result<MonomialIdeal> {
    let a = &sub.grading;
    let n = a.n();
    let mut acc: Option<MonomialIdeal> = None;
    for cell in &sub.maximal_cells {
        let prime = MonomialIdeal::new(
            a.clone(),
            (0..n).filter(|j| !cell.sigma.contains(j)).map(|j| ExponentVector::unit(n, j)).collect(),
        )?;
        acc = Some(match acc {
            None => prime,
            Some(x) => x.intersect(&prime)?,
        });
    }
    Ok(acc.unwrap_or_else(|| MonomialIdeal::zero(a.clone())))
}

/// Multiplicative invariants of the coefficients under the torus action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusInvariantReport {
    /// Row `k` is `u_k - v_k` for the `k`-th binomial `x^u - c x^v`.
    pub exponent_matrix: Vec<Vec<i64>>,
    /// Hermite basis of `{ z : sum z_k (u_k - v_k) = 0 }`.
    pub kernel_basis: Vec<Vec<BigInt>>,
    /// `prod_k c_k^{z_k}` per basis vector.
    pub invariant_values: Vec<BigRational>,
}

fn power_product(c: &[&BigRational], z: &[BigInt]) -> Result<BigRational> {
    let mut out = BigRational::one();
    for (ck, zk) in c.iter().zip(z) {
        let e = zk.abs().to_usize().ok_or(Error::Overflow)?;
        let p = num_traits::pow((*ck).clone(), e);
        if zk.is_negative() {
            out /= p;
        } else {
            out *= p;
        }
    }
    Ok(out)
}

/// Invariants of the binomial generators of `j` as given; monomial
/// generators are skipped.
pub fn torus_invariants(j: &BinomialIdeal) -> Result<TorusInvariantReport> {
    let bins: Vec<&Binomial> = j.binomials().collect();
    let exponent_matrix: Vec<Vec<i64>> = bins.iter().map(|g| g.difference()).collect();
    let n = j.grading().n();
    let transposed: Vec<Vec<i64>> = (0..n).map(|i| exponent_matrix.iter().map(|r| r[i]).collect()).collect();
    let kernel_basis = integer_kernel(&transposed, bins.len());
    let coeffs: Vec<&BigRational> = bins.iter().map(|g| g.c()).collect();
    let invariant_values = kernel_basis
        .iter()
        .map(|z| power_product(&coeffs, z))
        .collect::<Result<_>>()?;
    Ok(TorusInvariantReport {
        exponent_matrix,
        kernel_basis,
        invariant_values,
    })
}

/// Some `λ ∈ (k*)^n` over an algebraically closed field maps `j` onto `k`.
///
/// Torus rescaling keeps leading monomials, so the reduced lex bases must
/// share their terms. The coefficient ratios `c'_k / c_k` then have to lie
/// in the image of `λ ↦ (λ^{v_k - u_k})_k`, a subtorus cut out by the
/// characters in the (saturated) left kernel of the exponent matrix.
pub fn torus_isomorphic(j: &BinomialIdeal, k: &BinomialIdeal) -> Result<bool> {
    if j.grading() != k.grading() {
        return Ok(false);
    }
    let ord = TermOrder::lex(j.grading().n());
    let gj = buchberger(j, &ord)?;
    let gk = buchberger(k, &ord)?;
    let (ej, ek) = (gj.elements(), gk.elements());
    if ej.len() != ek.len() || ej.iter().zip(ek).any(|(x, y)| x.u() != y.u() || x.v() != y.v()) {
        return Ok(false);
    }
    let ratios: Vec<Binomial> = ej
        .iter()
        .zip(ek)
        .filter(|(x, _)| !x.is_monomial())
        .map(|(x, y)| Binomial::oriented(x.u().clone(), x.v().clone(), y.c() / x.c()))
        .collect();
    let report = torus_invariants(&BinomialIdeal::new(j.grading().clone(), ratios)?)?;
    Ok(report.invariant_values.iter().all(One::is_one))
}

impl fmt::Display for TorusInvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (z, v) in self.kernel_basis.iter().zip(&self.invariant_values) {
            let zs: Vec<String> = z.iter().map(|x| alloc::format!("{x}")).collect();
            writeln!(f, "({}) -> {v}", zs.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(x: &[u32]) -> ExponentVector {
        ExponentVector::new(x.to_vec())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn incoherent_ideal() -> MonomialIdeal {
        let a = GradingSet::one_dim(&[1, 3, 4, 7]).unwrap();
        let gens = [
            [3, 0, 0, 0], [1, 1, 0, 0], [0, 2, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1],
            [2, 0, 2, 0], [1, 0, 4, 0], [0, 1, 0, 3], [0, 0, 0, 4],
        ];
        MonomialIdeal::new(a, gens.iter().map(|g| ev(g)).collect()).unwrap()
    }

    fn family(c: [BigRational; 3]) -> BinomialIdeal {
        let a = GradingSet::one_dim(&[1, 3, 4, 7]).unwrap();
        let [c1, c2, c3] = c;
        let mut gens = vec![
            Binomial::oriented(ev(&[2, 0, 1, 0]), ev(&[0, 2, 0, 0]), c1),
            Binomial::oriented(ev(&[1, 0, 4, 0]), ev(&[0, 1, 0, 2]), c2),
            Binomial::oriented(ev(&[0, 0, 7, 0]), ev(&[0, 0, 0, 4]), c3),
        ];
        for m in [[3, 0, 0, 0], [1, 1, 0, 0], [1, 0, 0, 1], [0, 3, 0, 0], [0, 2, 0, 1], [0, 1, 1, 0], [0, 1, 0, 3]] {
            gens.push(Binomial::monomial(ev(&m)));
        }
        BinomialIdeal::new(a, gens).unwrap()
    }

    fn radical_moduli_grading() -> GradingSet {
        GradingSet::new(vec![
            vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4], vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2],
        ])
        .unwrap()
    }

    fn radical_moduli_binomials(c: [BigRational; 3]) -> Vec<Binomial> {
        let [c1, c2, c3] = c;
        vec![
            Binomial::oriented(ev(&[1, 0, 0, 0, 4, 0]), ev(&[0, 1, 0, 4, 0, 0]), c1),
            Binomial::oriented(ev(&[0, 1, 0, 0, 0, 4]), ev(&[0, 0, 1, 0, 4, 0]), c2),
            Binomial::oriented(ev(&[0, 0, 1, 4, 0, 0]), ev(&[1, 0, 0, 0, 0, 4]), c3),
        ]
    }

    fn radical_moduli_monomials() -> Vec<ExponentVector> {
        [
            [1, 1, 1, 0, 0, 0], [1, 0, 0, 0, 1, 1], [0, 1, 0, 1, 0, 1], [0, 0, 1, 1, 1, 0],
            [1, 1, 0, 0, 0, 2], [1, 0, 1, 0, 2, 0], [0, 1, 1, 2, 0, 0],
        ]
        .iter()
        .map(|m| ev(m))
        .collect()
    }

    fn cells(sub: &Subdivision) -> Vec<String> {
        sub.maximal_cells.iter().map(|c| alloc::format!("{c}")).collect()
    }

    #[test]
    fn cells_of_incoherent_ideal() {
        let i = incoherent_ideal();
        for b in [1, 4, 7, 13, 28] {
            assert_eq!(cell_of(&i, &Degree::scalar(b)).unwrap().sigma, [2]);
        }
        assert_eq!(cells(&subdivision_of(&i).unwrap()), ["{3}"]);
    }

    #[test]
    fn cells_over_two_three() {
        let a = GradingSet::one_dim(&[2, 3]).unwrap();
        let i = MonomialIdeal::new(a.clone(), vec![ev(&[3, 0])]).unwrap();
        assert_eq!(cell_of(&i, &Degree::scalar(6)).unwrap().sigma, [1]);
        let j = MonomialIdeal::new(a.clone(), vec![ev(&[0, 2])]).unwrap();
        assert_eq!(cells(&subdivision_of(&j).unwrap()), ["{1}"]);
        let z = MonomialIdeal::zero(a);
        assert_eq!(cell_of(&z, &Degree::scalar(5)).unwrap().sigma, [0, 1]);
        assert!(matches!(cell_of(&z, &Degree::scalar(1)), Err(Error::NotInSemigroup(_))));
    }

    #[test]
    fn nilpotency_matches_bounded_powers() {
        let i = incoherent_ideal();
        let top = i.generators().iter().flat_map(|g| g.iter().copied()).max().unwrap();
        let valid = valid_supports_monomial(&i);
        for s in 0..16u64 {
            let u = ExponentVector::new((0..4).map(|k| if s >> k & 1 == 1 { 3 * top } else { 0 }).collect());
            assert_eq!(valid.contains(&s), !i.contains(&u), "support {s:b}");
        }
    }

    #[test]
    fn radical_moduli_subdivision() {
        let a = radical_moduli_grading();
        let mono = MonomialIdeal::new(a.clone(), radical_moduli_monomials()).unwrap();
        let sub = subdivision_of(&mono).unwrap();
        assert_eq!(cells(&sub), ["{1,2,4,5}", "{1,3,4,6}", "{2,3,5,6}", "{4,5,6}"]);

        let one = || [q(1, 1), q(1, 1), q(1, 1)];
        let mut gens: Vec<Binomial> = radical_moduli_monomials().into_iter().map(Binomial::monomial).collect();
        gens.extend(radical_moduli_binomials(one()));
        let j = BinomialIdeal::new(a.clone(), gens).unwrap();
        let gb = buchberger(&j, &TermOrder::lex(6)).unwrap();
        let heur = subdivision_of_binomial(&gb, DEFAULT_NILPOTENCY_POWER).unwrap();
        assert!(heur.heuristic);
        assert_eq!(heur.maximal_cells, sub.maximal_cells);

        let comps = stanley_components(&sub).unwrap();
        let tri = &comps[3];
        let mut want: Vec<Binomial> = (0..3).map(|j| Binomial::monomial(ExponentVector::unit(6, j))).collect();
        want.sort();
        let mut got = tri.generators().to_vec();
        got.sort();
        assert_eq!(got, want);
        assert_eq!(comps[0].binomials().count(), 1);
        let b = comps[0].binomials().next().unwrap();
        assert_eq!(b.u(), &ev(&[1, 0, 0, 0, 4, 0]));
        assert_eq!(b.v(), &ev(&[0, 1, 0, 4, 0, 0]));
    }

    #[test]
    fn example_4_2_invariant() {
        let a = radical_moduli_grading();
        let j = BinomialIdeal::new(a, radical_moduli_binomials([q(2, 1), q(3, 1), q(5, 7)])).unwrap();
        let r = torus_invariants(&j).unwrap();
        assert_eq!(r.kernel_basis, [vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]]);
        assert_eq!(r.invariant_values, [q(30, 7)]);
    }

    #[test]
    fn family_invariant_and_isomorphism() {
        let j = family([q(3, 1), q(2, 1), q(5, 1)]);
        let r = torus_invariants(&j).unwrap();
        assert_eq!(r.exponent_matrix, [vec![2, -2, 1, 0], vec![1, -1, 4, -2], vec![0, 0, 7, -4]]);
        assert_eq!(r.kernel_basis, [vec![BigInt::from(1), BigInt::from(-2), BigInt::from(1)]]);
        assert_eq!(r.invariant_values, [q(15, 4)]);

        let e = family([q(1, 1), q(1, 1), q(1, 1)]);
        assert!(torus_isomorphic(&e, &family([q(4, 1), q(2, 1), q(1, 1)])).unwrap());
        assert!(!torus_isomorphic(&e, &family([q(2, 1), q(1, 1), q(1, 1)])).unwrap());
        assert!(torus_isomorphic(&j, &j).unwrap());
    }

    #[test]
    fn isomorphism_has_explicit_twist() {
        // c = (4,2,1) from (1,1,1): x1 -> 2 x1 solves it
        let lambda = [q(2, 1), q(1, 1), q(1, 1), q(1, 1)];
        let e = family([q(1, 1), q(1, 1), q(1, 1)]);
        let t = e.twisted(&lambda).unwrap();
        let ord = TermOrder::lex(4);
        let tg = buchberger(&t, &ord).unwrap();
        let target = buchberger(&family([q(1, 4), q(1, 2), q(1, 1)]), &ord).unwrap();
        assert_eq!(tg.elements(), target.elements());
        assert!(torus_isomorphic(&e, &family([q(1, 4), q(1, 2), q(1, 1)])).unwrap());
    }

    #[test]
    fn single_binomial_has_no_invariants() {
        let a = GradingSet::one_dim(&[2, 3]).unwrap();
        let j = BinomialIdeal::new(a, vec![Binomial::oriented(ev(&[3, 0]), ev(&[0, 2]), q(7, 1))]).unwrap();
        let r = torus_invariants(&j).unwrap();
        assert!(r.kernel_basis.is_empty());
    }

    #[test]
    fn radical_equals_stanley_monomial_part() {
        let i = incoherent_ideal();
        let r = radical_mono(&i);
        let want: Vec<ExponentVector> = vec![ev(&[0, 0, 0, 1]), ev(&[0, 1, 0, 0]), ev(&[1, 0, 0, 0])];
        assert_eq!(r.generators(), want.as_slice());
        let sub = subdivision_of(&i).unwrap();
        assert_eq!(stanley_monomial_part(&sub).unwrap(), r);
        assert_eq!(radical_mono(&r), r);
        let comps = stanley_components(&sub).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].generators().iter().all(Binomial::is_monomial));
        assert_eq!(comps[0].len(), 3);
    }

    #[test]
    fn overlapping_cells_are_detected() {
        let a = GradingSet::new(vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let x = Cell { sigma: vec![0, 1] };
        let y = Cell { sigma: vec![0, 2] };
        let z = Cell { sigma: vec![1, 2] };
        assert!(!meet_in_common_face(&a, &x, &y).unwrap());
        assert!(meet_in_common_face(&a, &y, &z).unwrap());
    }
}
