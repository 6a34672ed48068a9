//! Exact linear algebra helpers: fraction-free elimination over the
//! integers and kernel computation over the rationals. Internal to the
//! crate; sized for the small dense systems the field and algebra layers
//! produce (dimension <= a few hundred).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Solves the square integer system `a * x = rhs` exactly.
///
/// Fraction-free (Bareiss) elimination: every intermediate entry is a minor
/// of the original matrix, so integer divisions are exact and coefficient
/// growth stays polynomial. Returns `None` when the matrix is singular.
pub(crate) fn solve_integer_system(
    a: &[Vec<BigInt>],
    rhs: &[BigInt],
) -> Option<Vec<BigRational>> {
    let n = a.len();
    debug_assert!(rhs.len() == n && a.iter().all(|row| row.len() == n));
    if n == 0 {
        return Some(Vec::new());
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut v = row.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot_row);
        for i in k + 1..n {
            for j in k + 1..=n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from(m[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from(m[i][i].clone());
    }
    Some(x)
}

/// Basis of the right kernel `{x : a x = 0}` of a rational matrix, one
/// primitive integer vector per free column (ascending column order), each
/// scaled to content 1 with a positive leading entry.
pub(crate) fn rational_kernel(a: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    assert!(!a.is_empty(), "kernel needs at least one row for the shape");
    let rows = a.len();
    let cols = a[0].len();
    let mut m = a.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..cols {
        let rank = pivot_cols.len();
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for j in col..cols {
            m[rank][j] = &m[rank][j] / &pivot;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in col..cols {
                    m[r][j] = &m[r][j] - &(&factor * &m[rank][j]);
                }
            }
        }
        pivot_cols.push(col);
        if pivot_cols.len() == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            if pc < free {
                v[pc] = -m[row][free].clone();
            }
        }
        basis.push(primitive_integer(&v));
    }
    basis
}

/// Clears denominators and divides by the content; flips sign so the first
/// nonzero entry is positive.
fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let mut denom = BigInt::one();
    for x in v {
        denom = denom.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&denom / x.denom()))
        .collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if !content.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &content;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    ints
}
