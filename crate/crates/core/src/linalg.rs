//! Dense exact matrices: products over `Z[w]` and fraction-free elimination over `Z`.

use crate::cyclo::CycloInt;
use crate::{Error, Result};

pub type CycloMatrix = Vec<Vec<CycloInt>>;

pub fn identity(size: usize, order: u32) -> CycloMatrix {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        CycloInt::one(order)
                    } else {
                        CycloInt::zero(order)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &CycloMatrix, b: &CycloMatrix, order: u32) -> CycloMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "matrix dimensions do not match");
            (0..cols)
                .map(|j| {
                    let mut acc = CycloInt::zero(order);
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn trace(a: &CycloMatrix, order: u32) -> CycloInt {
    a.iter()
        .enumerate()
        .fold(CycloInt::zero(order), |acc, (i, row)| &acc + &row[i])
}

pub fn from_integers(a: &[Vec<i8>], order: u32) -> CycloMatrix {
    a.iter()
        .map(|row| {
            row.iter()
                .map(|&e| CycloInt::from_int(order, i64::from(e)))
                .collect()
        })
        .collect()
}

fn overflow() -> Error {
    Error::Internal("integer overflow in exact elimination".into())
}

/// Bareiss fraction-free elimination; returns the rank and, for square
/// input, the determinant (0 when singular).
fn bareiss(a: &[Vec<i8>]) -> Result<(usize, i128)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&e| i128::from(e)).collect())
        .collect();
    let mut rank = 0;
    let mut prev = 1i128;
    let mut sign = 1i128;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = m[i][j]
                    .checked_mul(m[rank][c])
                    .zip(m[i][c].checked_mul(m[rank][j]))
                    .and_then(|(s, t)| s.checked_sub(t))
                    .ok_or_else(overflow)?;
                if v % prev != 0 {
                    return Err(Error::Internal(
                        "inexact division in Bareiss elimination".into(),
                    ));
                }
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        sign * if rows == 0 { 1 } else { prev }
    } else {
        0
    };
    Ok((rank, det))
}

/// Rank over the rationals of an integer matrix.
pub fn rank(a: &[Vec<i8>]) -> Result<usize> {
    bareiss(a).map(|(r, _)| r)
}

/// Determinant of a square integer matrix.
pub fn determinant(a: &[Vec<i8>]) -> Result<i128> {
    if a.iter().any(|r| r.len() != a.len()) {
        return Err(Error::Invalid("determinant of a non-square matrix".into()));
    }
    bareiss(a).map(|(_, d)| d)
}
