//! Exact linear algebra over the rationals: fraction-free rank and
//! solving consistent systems.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Rank over ℚ: denominators cleared per row, then Bareiss fraction-free
/// elimination over the integers.
pub fn rank_rational(matrix: &[Vec<BigRational>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().abs()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let val = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Express `target` in the span of `columns` (vectors of equal length);
/// `None` when the system is inconsistent.  Plain Gaussian elimination
/// over ℚ on the augmented matrix.
#[allow(clippy::needless_range_loop)]
pub fn solve_in_span(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let k = columns.len();
    let rows = target.len();
    let mut aug: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; k];
    let mut row = 0usize;
    for col in 0..k {
        let Some(p) = (row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].clone();
        for c in col..=k {
            aug[row][c] = &aug[row][c] / &inv;
        }
        for r in 0..rows {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=k {
                    let sub = &f * &aug[row][c];
                    aug[r][c] = &aug[r][c] - sub;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
        if row == rows {
            break;
        }
    }
    // inconsistent iff some residual row is (0..0 | nonzero)
    for r in aug.iter() {
        if r[..k].iter().all(|x| x.is_zero()) && !r[k].is_zero() {
            return None;
        }
    }
    let mut out = vec![BigRational::zero(); k];
    for (col, &p) in pivot_of_col.iter().enumerate() {
        if p != usize::MAX {
            out[col] = aug[p][k].clone();
        }
    }
    Some(out)
}
