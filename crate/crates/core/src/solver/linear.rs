//! Fox colorings mod p and the link determinant, both from the crossing/arc
//! coloring matrix (row per crossing: +2 at the over arc, -1 at each under
//! arc).

use crate::diagram::Diagram;
use crate::error::{Error, Result};

fn coloring_matrix(d: &Diagram) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; d.num_arcs()]; d.num_crossings()];
    for (row, c) in m.iter_mut().zip(d.crossings()) {
        row[c.over] += 2;
        row[c.under_in] -= 1;
        row[c.under_out] -= 1;
    }
    m
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

fn rank_mod_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = (*x - f * pv).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut base: i64, mut exp: i64, p: i64) -> i64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Number of Fox p-colorings (including the constant ones).
pub fn fox_coloring_count(d: &Diagram, p: u64) -> Result<u128> {
    d.check()?;
    if d.free_loops() > 0 {
        return Err(Error::FreeLoops(d.free_loops()));
    }
    if !is_prime(p) || p > i32::MAX as u64 {
        return Err(Error::NotPrime(p));
    }
    let rank = rank_mod_p(coloring_matrix(d), p as i64);
    let nullity = (d.num_arcs() - rank) as u32;
    (p as u128).checked_pow(nullity).ok_or(Error::Overflow("fox coloring count"))
}

/// Exact determinant by fraction-free (Bareiss) elimination.
fn bareiss_det(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    let overflow = || Error::Overflow("determinant");
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]).ok_or_else(overflow)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or_else(overflow)?;
                m[i][j] = a.checked_sub(b).ok_or_else(overflow)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(if n == 0 { sign } else { sign * m[n - 1][n - 1] })
}

/// Absolute value of the first minor obtained by deleting `row` and `col`.
pub fn determinant_minor(d: &Diagram, row: usize, col: usize) -> Result<u128> {
    d.check()?;
    if d.free_loops() > 0 {
        return Err(Error::FreeLoops(d.free_loops()));
    }
    let n = d.num_arcs();
    if n == 0 {
        return Err(Error::EmptyDiagram);
    }
    if row >= n || col >= n {
        return Err(Error::NoSuchArc(row.max(col)));
    }
    let minor: Vec<Vec<i128>> = coloring_matrix(d)
        .into_iter()
        .enumerate()
        .filter(|&(r, _)| r != row)
        .map(|(_, r)| {
            r.into_iter()
                .enumerate()
                .filter(|&(c, _)| c != col)
                .map(|(_, x)| x as i128)
                .collect()
        })
        .collect();
    Ok(bareiss_det(minor)?.unsigned_abs())
}

pub fn determinant(d: &Diagram) -> Result<u128> {
    determinant_minor(d, d.num_arcs().saturating_sub(1), d.num_arcs().saturating_sub(1))
}
