//! Integer machinery underneath the Ramanujan subspaces: Euler totients,
//! coprime residue sets, Ramanujan sums, and the conjugate pairing of
//! residues that splits each subspace into two-dimensional real planes.
//!
//! For a period q the subspace S_q is spanned by the complex exponentials
//! at frequencies 2πk/q with gcd(k, q) = 1, so its dimension is φ(q).
//! Conjugation maps the residue k to q - k, which pairs the exponentials
//! into φ(q)/2 planes for q >= 3 and leaves q ∈ {1, 2} self-paired.

use crate::error::Error;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Greatest common divisor by the Euclidean algorithm.
pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Euler's totient φ(q): the count of integers in [1, q] coprime to q.
///
/// Computed from the prime factorization of q by trial division, which is
/// comfortably fast for every period this crate handles (q up to 1e5).
pub fn euler_totient(q: usize) -> Result<usize, Error> {
    if q == 0 {
        return Err(Error::ZeroPeriod);
    }
    let mut remaining = q;
    let mut phi = q;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            phi -= phi / p;
            while remaining % p == 0 {
                remaining /= p;
            }
        }
        p += 1;
    }
    if remaining > 1 {
        phi -= phi / remaining;
    }
    Ok(phi)
}

/// The coprime residues of q in increasing order: all k in [1, q] with
/// gcd(k, q) = 1. For q = 1 this is `[1]`.
pub fn coprime_residues(q: usize) -> Result<Vec<usize>, Error> {
    if q == 0 {
        return Err(Error::ZeroPeriod);
    }
    Ok((1..=q).filter(|&k| gcd(k, q) == 1).collect())
}

/// The Ramanujan sum c_q(n) = Σ e^{j2πkn/q} over the coprime residues k.
///
/// The sum is an integer for every (q, n) and is q-periodic in n; it is
/// evaluated with angles reduced mod q and returned as the real part after
/// checking that the imaginary residue is negligible.
pub fn ramanujan_sum(q: usize, n: usize) -> Result<f64, Error> {
    if q == 0 {
        return Err(Error::ZeroPeriod);
    }
    let n_mod = n % q;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..=q {
        if gcd(k, q) == 1 {
            let r = (k * n_mod) % q;
            acc += Complex64::cis(TAU * r as f64 / q as f64);
        }
    }
    debug_assert!(
        acc.im.abs() < 1e-9 * q as f64,
        "imaginary residue {} for c_{q}({n})",
        acc.im
    );
    Ok(acc.re)
}

/// One conjugate pair of coprime residues of a period q.
///
/// `index` is the 1-based pair index used throughout the crate; `k` is the
/// representative residue below q/2 and `partner` is q - k. Periods 1 and 2
/// have a single self-paired residue whose atom is real.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugatePair {
    pub index: usize,
    pub k: usize,
    pub partner: usize,
}

impl ConjugatePair {
    /// True when the pair collapses onto itself (q <= 2), making the atom real.
    pub fn is_self_conjugate(&self) -> bool {
        self.k == self.partner
    }
}

/// Number of conjugate pairs of S_q: 1 for q <= 2, φ(q)/2 otherwise.
pub fn pair_count(q: usize) -> Result<usize, Error> {
    if q <= 2 {
        if q == 0 {
            return Err(Error::ZeroPeriod);
        }
        return Ok(1);
    }
    Ok(euler_totient(q)? / 2)
}

/// Enumerates the conjugate pairs (i, k_i, q - k_i) of a period in
/// increasing order of k_i.
pub fn conjugate_pairs(q: usize) -> Result<Vec<ConjugatePair>, Error> {
    if q == 0 {
        return Err(Error::ZeroPeriod);
    }
    if q <= 2 {
        return Ok(vec![ConjugatePair { index: 1, k: 1, partner: 1 }]);
    }
    let mut pairs = Vec::with_capacity(euler_totient(q)? / 2);
    let mut index = 1;
    for k in 1..q {
        if 2 * k >= q {
            break;
        }
        if gcd(k, q) == 1 {
            pairs.push(ConjugatePair { index, k, partner: q - k });
            index += 1;
        }
    }
    Ok(pairs)
}

/// Residue bookkeeping for one candidate period, computed once and shared
/// by the pursuit inner loop.
#[derive(Debug, Clone)]
pub struct PeriodStructure {
    q: usize,
    residues: Vec<usize>,
    pairs: Vec<ConjugatePair>,
}

impl PeriodStructure {
    pub fn new(q: usize) -> Result<Self, Error> {
        Ok(PeriodStructure {
            q,
            residues: coprime_residues(q)?,
            pairs: conjugate_pairs(q)?,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// φ(q), the dimension of S_q.
    pub fn totient(&self) -> usize {
        self.residues.len()
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[ConjugatePair] {
        &self.pairs
    }
}

/// Σ φ(q) for q in [1, max_q]: the column count of the full Ramanujan
/// dictionary up to max_q (79852 for max_q = 512).
pub fn dictionary_columns(max_q: usize) -> Result<usize, Error> {
    if max_q == 0 {
        return Err(Error::ZeroPeriod);
    }
    let mut total = 0;
    for q in 1..=max_q {
        total += euler_totient(q)?;
    }
    Ok(total)
}

/// Σ pair_count(q) for q in [1, max_q]: how many conjugate planes the
/// pursuit can choose from (39927 for max_q = 512).
pub fn ccs_count(max_q: usize) -> Result<usize, Error> {
    if max_q == 0 {
        return Err(Error::ZeroPeriod);
    }
    let mut total = 0;
    for q in 1..=max_q {
        total += pair_count(q)?;
    }
    Ok(total)
}

/// Flat 1-based position of pair i of period q when all conjugate planes
/// are laid out in period order: Σ_{p < q} pair_count(p) + i.
///
/// Purely a diagnostic enumeration; the pursuit never materializes the
/// dictionary this indexes into.
pub fn dictionary_index(q: usize, index: usize) -> Result<usize, Error> {
    let pairs = pair_count(q)?;
    if index == 0 || index > pairs {
        return Err(Error::PairIndexOutOfRange { q, index, pairs });
    }
    let before = if q == 1 { 0 } else { ccs_count(q - 1)? };
    Ok(before + index)
}
