//! Smith normal form of integer matrices over arbitrary-precision integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero invariant factors `d_1 | d_2 | … | d_r` (all positive) of a
/// `rows × cols` integer matrix.
pub fn invariant_factors(matrix: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_axpy(&mut a, i, t, &q);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_axpy(&mut a, j, t, &q);
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // A smaller remainder sits in row or column t; make it the pivot.
                let (pi, pj) = min_abs_in_cross(&a, t, rows, cols);
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad_row {
                Some(i) => {
                    let one = BigInt::from(-1);
                    row_axpy(&mut a, t, i, &one);
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_in_cross(a: &[Vec<BigInt>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..rows {
        if !a[i][t].is_zero() && (a[best.0][best.1].is_zero() || a[i][t].abs() < a[best.0][best.1].abs()) {
            best = (i, t);
        }
    }
    for j in t..cols {
        if !a[t][j].is_zero() && (a[best.0][best.1].is_zero() || a[t][j].abs() < a[best.0][best.1].abs()) {
            best = (t, j);
        }
    }
    best
}

/// `row[dst] -= q * row[src]`.
fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let src_row = a[src].clone();
    for (x, s) in a[dst].iter_mut().zip(src_row.iter()) {
        *x -= q * s;
    }
}

/// `col[dst] -= q * col[src]`.
fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let s = row[src].clone();
        row[dst] -= q * s;
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn factors(rows: &[&[i64]], cols: usize) -> Vec<i64> {
        invariant_factors(&m(rows), cols).iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(factors(&[&[2]], 1), vec![2]);
        assert_eq!(factors(&[&[2, 4], &[6, 8]], 2), vec![2, 4]);
        assert_eq!(factors(&[&[2, 0], &[0, 3]], 2), vec![1, 6]);
        assert_eq!(factors(&[&[0, 0], &[0, 0]], 2), Vec::<i64>::new());
        assert_eq!(factors(&[], 3), Vec::<i64>::new());
        assert_eq!(factors(&[&[4, 6, 8]], 3), vec![2]);
        assert_eq!(factors(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]], 3), vec![1, 1]);
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let a = vec![vec![big.clone(), BigInt::zero()], vec![BigInt::zero(), big.clone() * 2]];
        let d = invariant_factors(&a, 2);
        assert_eq!(d, vec![big.clone(), big * 2]);
    }
}
