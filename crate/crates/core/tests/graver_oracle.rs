//! Primitive binomials against a brute-force subset-sum oracle, for every
//! one-dimensional grading set with at most four entries from 1..=9.

use std::collections::{BTreeMap, BTreeSet};

use aga_core::grading::{ExponentVector, GradingSet};
use aga_core::graver::{primitive_binomials, GraverOptions};
use aga_core::groebner::{toric_gb, TermOrder};

const WORDS: usize = 6;

type Bits = [u64; WORDS];

/// Degrees of all divisors of `x^u`, as a bitset.
fn divisor_degrees(a: &[u64], u: &[u32], top: usize) -> Bits {
    let mut reach = vec![false; top + 1];
    reach[0] = true;
    for (&ai, &e) in a.iter().zip(u) {
        for _ in 0..e {
            for s in (0..=top).rev() {
                if reach[s] && s + ai as usize <= top {
                    reach[s + ai as usize] = true;
                }
            }
        }
    }
    let mut bits = [0u64; WORDS];
    for (s, &r) in reach.iter().enumerate() {
        if r {
            bits[s / 64] |= 1 << (s % 64);
        }
    }
    bits
}

/// Monomials supported inside `mask`, grouped by degree up to `top`.
fn monomials_on(a: &[u64], mask: u32, top: u64) -> BTreeMap<u64, Vec<Vec<u32>>> {
    let n = a.len();
    let mut out: BTreeMap<u64, Vec<Vec<u32>>> = BTreeMap::new();
    let mut u = vec![0u32; n];
    fn rec(a: &[u64], mask: u32, top: u64, i: usize, deg: u64, u: &mut Vec<u32>, out: &mut BTreeMap<u64, Vec<Vec<u32>>>) {
        if i == a.len() {
            out.entry(deg).or_default().push(u.clone());
            return;
        }
        if mask >> i & 1 == 0 {
            rec(a, mask, top, i + 1, deg, u, out);
            return;
        }
        let mut e = 1;
        while deg + e as u64 * a[i] <= top {
            u[i] = e;
            rec(a, mask, top, i + 1, deg + e as u64 * a[i], u, out);
            e += 1;
        }
        u[i] = 0;
    }
    rec(a, mask, top, 0, 0, &mut u, &mut out);
    out
}

/// Pairs `(u, v)` with disjoint full supports, equal degree `b <= top`, and
/// no common divisor degree strictly between 0 and `b`.
fn oracle(a: &[u64], top: u64) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let n = a.len();
    let full = (1u32 << n) - 1;
    let mut out = BTreeSet::new();
    for s in 1..full {
        let t = full & !s;
        if s > t {
            continue;
        }
        for tsub in 1..=t {
            if tsub & t != tsub {
                continue;
            }
            let left = monomials_on(a, s, top);
            let right = monomials_on(a, tsub, top);
            for (b, us) in &left {
                let Some(vs) = right.get(b) else { continue };
                for u in us {
                    let du = divisor_degrees(a, u, top as usize);
                    for v in vs {
                        let dv = divisor_degrees(a, v, top as usize);
                        let mut common = [0u64; WORDS];
                        for k in 0..WORDS {
                            common[k] = du[k] & dv[k];
                        }
                        common[0] &= !1;
                        common[*b as usize / 64] &= !(1 << (*b % 64));
                        if common.iter().all(|&w| w == 0) {
                            let (x, y) = if u > v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
                            out.insert((x, y));
                        }
                    }
                }
            }
        }
    }
    out
}

fn all_sets() -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for mask in 1u32..1 << 9 {
        if mask.count_ones() <= 4 {
            out.push((0..9).filter(|i| mask >> i & 1 == 1).map(|i| i as u64 + 1).collect());
        }
    }
    out
}

#[test]
fn primitive_binomials_match_oracle_on_small_sets() {
    for entries in all_sets() {
        let a = GradingSet::one_dim(&entries).unwrap();
        let norm: Vec<u64> = a.columns().iter().map(|c| c[0]).collect();
        let mut sorted = norm.clone();
        sorted.sort_unstable();
        let bound = match sorted.len() {
            1 => 0,
            k => sorted[k - 2] * sorted[k - 1],
        };
        let want = oracle(&norm, (2 * bound).min(WORDS as u64 * 64 - 1));
        let p = primitive_binomials(&a, &GraverOptions::default()).unwrap();
        assert!(p.completeness.is_certified());
        let got: BTreeSet<(Vec<u32>, Vec<u32>)> = p
            .binomials
            .iter()
            .map(|g| {
                let (u, v) = (g.u().exps().to_vec(), g.v().exps().to_vec());
                if u > v { (u, v) } else { (v, u) }
            })
            .collect();
        assert_eq!(got, want, "A = {entries:?}");
    }
}

#[test]
fn reduced_bases_are_primitive() {
    for entries in all_sets().into_iter().filter(|e| e.len() >= 2) {
        let a = GradingSet::one_dim(&entries).unwrap();
        let p = primitive_binomials(&a, &GraverOptions::default()).unwrap();
        let canon: BTreeSet<_> = p.binomials.iter().map(|g| g.canonical()).collect();
        let n = a.n();
        let rev: Vec<usize> = (0..n).rev().collect();
        for ord in [TermOrder::lex(n), TermOrder::Lex(rev)] {
            for g in toric_gb(&a, &ord).unwrap().elements() {
                assert!(canon.contains(&g.canonical()), "A = {entries:?}: {g} not primitive");
            }
        }
    }
}

#[test]
fn degree_bound_is_attained() {
    for entries in all_sets().into_iter().filter(|e| e.len() >= 2) {
        let k = entries.len();
        let (p, q) = (entries[k - 2], entries[k - 1]);
        if num_integer::gcd(p, q) != 1 || entries.iter().fold(0, |g, &x| num_integer::gcd(g, x)) != 1 {
            continue;
        }
        let a = GradingSet::one_dim(&entries).unwrap();
        let prim = primitive_binomials(&a, &GraverOptions::default()).unwrap();
        let mut u = vec![0u32; k];
        u[k - 1] = p as u32;
        let mut v = vec![0u32; k];
        v[k - 2] = q as u32;
        let g = (ExponentVector::new(u), ExponentVector::new(v));
        assert!(prim.binomials.iter().any(|b| (b.u(), b.v()) == (&g.0, &g.1) || (b.u(), b.v()) == (&g.1, &g.0)));
        assert_eq!(prim.max_degree()[0], p * q, "A = {entries:?}");
    }
}
