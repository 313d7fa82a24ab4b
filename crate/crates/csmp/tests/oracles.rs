//! Validates the dense least-squares oracles in `common` against cases
//! small enough to work by hand, then checks the library's closed forms
//! against the oracle on deterministic inputs. The randomized sweeps live
//! in the acceptance suite; this file establishes that the reference
//! answers themselves can be trusted.

mod common;

use common::{exp_column, ls_fit, pair_ls_fit, solve_complex, subspace_ls_energy};
use csmp::signals::sum_of_cosines;
use csmp::Atom;
use num_complex::Complex64;
use std::f64::consts::TAU;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn solver_recovers_hand_built_solution() {
    let a = vec![vec![c(2.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(1.0, 0.0)]];
    let truth = [c(1.0, 1.0), c(3.0, 0.0)];
    let b = vec![
        a[0][0] * truth[0] + a[0][1] * truth[1],
        a[1][0] * truth[0] + a[1][1] * truth[1],
    ];
    let got = solve_complex(a, b);
    for (g, t) in got.iter().zip(&truth) {
        assert!((g - t).norm() < 1e-12, "got {g}, want {t}");
    }
}

#[test]
fn solver_applies_partial_pivoting() {
    let a = vec![vec![c(1e-30, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(1.0, 0.0)]];
    let b = vec![c(1.0, 0.0), c(2.0, 0.0)];
    let got = solve_complex(a, b);
    assert!((got[0] - c(1.0, 0.0)).norm() < 1e-9);
    assert!((got[1] - c(1.0, 0.0)).norm() < 1e-9);
}

#[test]
fn ls_fit_recovers_planted_coefficients_on_orthogonal_columns() {
    let n = 25;
    let columns: Vec<Vec<Complex64>> = (1..5).map(|k| exp_column(5, k, n)).collect();
    let x: Vec<f64> = (0..n)
        .map(|t| {
            let th = TAU * t as f64 / 5.0;
            3.0 * th.cos() + (2.0 * th).sin()
        })
        .collect();
    let coef = ls_fit(&columns, &x);
    let want = [c(1.5, 0.0), c(0.0, -0.5), c(0.0, 0.5), c(1.5, 0.0)];
    for (got, want) in coef.iter().zip(&want) {
        assert!((got - want).norm() < 1e-12, "got {got}, want {want}");
    }
}

#[test]
fn pair_fit_returns_conjugate_coefficients() {
    let x = [1.0, -2.0, 3.5, 0.25, -1.0, 4.0, 0.5];
    let coef = pair_ls_fit(5, 2, &x);
    assert_eq!(coef.len(), 2);
    assert!((coef[1] - coef[0].conj()).norm() < 1e-12);
}

#[test]
fn pair_fit_matches_closed_form_on_fixed_vectors() {
    let x = [1.0, 2.0, 3.0, 4.0, 5.0, -1.0, 0.5, 2.5];
    for (q, i) in [(3usize, 1usize), (4, 1), (5, 1), (5, 2), (7, 3), (8, 2)] {
        let atom = Atom::new(q, i, x.len()).unwrap();
        let alpha = atom.project(&x).unwrap().alpha;
        let coef = pair_ls_fit(q, atom.k, &x);
        assert!(
            (coef[0] - alpha).norm() < 1e-12,
            "q={q} i={i}: closed form {alpha}, least squares {}",
            coef[0]
        );
    }
}

#[test]
fn pair_fit_matches_closed_form_for_real_atoms() {
    let x = [0.5, -1.5, 2.0, 3.0, -0.25, 1.0];
    for q in [1usize, 2] {
        let atom = Atom::new(q, 1, x.len()).unwrap();
        let alpha = atom.project(&x).unwrap().alpha;
        let coef = pair_ls_fit(q, atom.k, &x);
        assert_eq!(coef.len(), 1);
        assert!(coef[0].im.abs() < 1e-12);
        assert!((coef[0] - alpha).norm() < 1e-12);
    }
}

#[test]
fn subspace_energy_is_total_for_members_and_zero_for_orthogonal_input() {
    let member = sum_of_cosines(&[5], 25).unwrap();
    let input: f64 = member.iter().map(|v| v * v).sum();
    let fitted = subspace_ls_energy(5, &member);
    assert!((fitted - input).abs() < 1e-9 * input);

    let constant = vec![1.0; 6];
    assert!(subspace_ls_energy(3, &constant) < 1e-18);
}

#[test]
fn stage_one_energies_match_subspace_fit_when_periods_divide_length() {
    let x = sum_of_cosines(&[4, 7], 28).unwrap();
    let table = csmp::periodicity::period_energy_table(&x, 10).unwrap();
    for q in [4usize, 7] {
        let oracle = subspace_ls_energy(q, &x);
        let got = table.energy(q);
        assert!(
            (got - oracle).abs() < 1e-9 * oracle,
            "q={q}: recursion {got}, least squares {oracle}"
        );
    }
}
