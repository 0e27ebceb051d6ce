//! Integer kernels and Hermite normal form.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row Hermite normal form of the lattice spanned by `rows`: echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        // gcd-eliminate column `col` below `rank`
        loop {
            let pivot = (rank..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&x, &y| rows[x][col].abs().cmp(&rows[y][col].abs()));
            let Some(p) = pivot else { break };
            rows.swap(rank, p);
            let mut done = true;
            for r in rank + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[rank][col]);
                let (head, tail) = rows.split_at_mut(r);
                for (x, y) in tail[0].iter_mut().zip(&head[rank]) {
                    *x -= &q * y;
                }
                if !tail[0][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rank < rows.len() && !rows[rank][col].is_zero() {
            if rows[rank][col].is_negative() {
                for x in rows[rank].iter_mut() {
                    *x = -x.clone();
                }
            }
            for r in 0..rank {
                let q = rows[r][col].div_floor(&rows[rank][col]);
                if q.is_zero() {
                    continue;
                }
                let (head, tail) = rows.split_at_mut(rank);
                for (x, y) in head[r].iter_mut().zip(&tail[0]) {
                    *x -= &q * y;
                }
            }
            rank += 1;
        }
    }
    rows.truncate(rank);
    rows
}

/// A basis of `{ z in Z^ncols : m z = 0 }` in Hermite normal form.
pub fn integer_kernel(m: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let h = m.len();
    // row j = (column j of m | e_j); echelonize the left block
    let mut rows: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut r: Vec<BigInt> = m.iter().map(|row| BigInt::from(row[j])).collect();
            r.extend((0..ncols).map(|k| BigInt::from((k == j) as i64)));
            r
        })
        .collect();
    let mut rank = 0;
    for col in 0..h {
        loop {
            let pivot = (rank..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&x, &y| rows[x][col].abs().cmp(&rows[y][col].abs()));
            let Some(p) = pivot else { break };
            rows.swap(rank, p);
            let mut done = true;
            for r in rank + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[rank][col]);
                let (head, tail) = rows.split_at_mut(r);
                for (x, y) in tail[0].iter_mut().zip(&head[rank]) {
                    *x -= &q * y;
                }
                if !tail[0][col].is_zero() {
                    done = false;
                }
            }
            if done {
                rank += 1;
                break;
            }
        }
    }
    let kernel: Vec<Vec<BigInt>> = rows
        .into_iter()
        .skip(rank)
        .map(|r| r[h..].to_vec())
        .collect();
    hermite_normal_form(kernel)
}
