//! Shared oracle helpers for the integration suites.
//!
//! Everything here recomputes its answer from first principles with plain
//! dense linear algebra so the library's closed forms have an independent
//! reference to agree with. Columns are materialized with direct f64 angle
//! arithmetic rather than the library's reduced-angle tables.

#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::TAU;

pub fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Solves A c = b for square complex A by Gaussian elimination with
/// partial pivoting. Panics on a numerically singular matrix, which the
/// callers never feed it.
pub fn solve_complex(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Vec<Complex64> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n));
    assert_eq!(b.len(), n);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r, &s| a[r][col].norm().total_cmp(&a[s][col].norm()))
            .unwrap();
        assert!(a[pivot][col].norm() > 1e-14, "singular system at column {col}");
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                let above = a[col][k];
                a[row][k] -= factor * above;
            }
            let rhs = b[col];
            b[row] -= factor * rhs;
        }
    }
    let mut c = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * c[k];
        }
        c[row] = acc / a[row][row];
    }
    c
}

/// Least-squares fit of real samples x against complex columns via the
/// normal equations. Returns the coefficient vector.
pub fn ls_fit(columns: &[Vec<Complex64>], x: &[f64]) -> Vec<Complex64> {
    let m = columns.len();
    assert!(m > 0);
    assert!(columns.iter().all(|c| c.len() == x.len()));
    let mut gram = vec![vec![Complex64::new(0.0, 0.0); m]; m];
    let mut rhs = vec![Complex64::new(0.0, 0.0); m];
    for (r, cr) in columns.iter().enumerate() {
        for (c, cc) in columns.iter().enumerate() {
            gram[r][c] = cr.iter().zip(cc).map(|(a, b)| a.conj() * b).sum();
        }
        rhs[r] = cr.iter().zip(x).map(|(a, &v)| a.conj() * v).sum();
    }
    solve_complex(gram, rhs)
}

/// The exponential column e^{j 2π k n / q} of length n_len.
pub fn exp_column(q: usize, k: usize, n_len: usize) -> Vec<Complex64> {
    (0..n_len)
        .map(|n| Complex64::from_polar(1.0, TAU * (k as f64) * (n as f64) / (q as f64)))
        .collect()
}

/// Coefficients of the least-squares fit of x onto the atom pair
/// {e^{j 2π k n / q}, its conjugate}, with both columns scaled to unit
/// norm so the coefficients share the convention of `Atom::project`.
/// Real atoms (q ≤ 2) span a single column, so one coefficient comes
/// back.
pub fn pair_ls_fit(q: usize, k: usize, x: &[f64]) -> Vec<Complex64> {
    let scale = 1.0 / (x.len() as f64).sqrt();
    let g: Vec<Complex64> = exp_column(q, k, x.len()).iter().map(|z| z * scale).collect();
    if q <= 2 {
        return ls_fit(&[g], x);
    }
    let conj: Vec<Complex64> = g.iter().map(|z| z.conj()).collect();
    ls_fit(&[g, conj], x)
}

/// Energy of the least-squares projection of x onto the φ(q) exponential
/// columns with gcd(k, q) = 1.
pub fn subspace_ls_energy(q: usize, x: &[f64]) -> f64 {
    let columns: Vec<Vec<Complex64>> = (1..=q)
        .filter(|&k| gcd(k, q) == 1)
        .map(|k| exp_column(q, k, x.len()))
        .collect();
    let coef = ls_fit(&columns, x);
    (0..x.len())
        .map(|n| {
            let y: Complex64 = columns.iter().zip(&coef).map(|(c, a)| a * c[n]).sum();
            y.re * y.re
        })
        .sum()
}

/// Direct norm squared of the unit-amplitude cosine of period q over
/// n_len samples.
pub fn cosine_component_energy(q: usize, n_len: usize) -> f64 {
    (0..n_len).map(|n| (TAU * (n as f64) / (q as f64)).cos().powi(2)).sum()
}
