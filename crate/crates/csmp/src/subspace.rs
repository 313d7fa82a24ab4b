//! Conjugate-pair atoms and the closed-form projection of a real signal
//! onto the plane an atom spans with its conjugate.
//!
//! An atom is the unit-norm exponential g[n] = e^{j2πkn/q} / √N for a
//! coprime residue k of the period q. For q >= 3 the pair {g, conj(g)}
//! spans a two-dimensional plane whose projection of a real signal is
//! v = 2·Re(α g); periods 1 and 2 give real atoms and the plane collapses
//! to a line. Angles are always reduced mod q before evaluating the
//! exponential, so atoms for q <= 2 come out exactly real.

use crate::error::Error;
use crate::ramanujan::conjugate_pairs;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Guard threshold for the projection denominator 1 - |c|^2.
pub const DEGENERACY_GUARD: f64 = 1e-12;

/// Table of the q-th roots of unity, e^{j2πr/q} for r in [0, q).
pub(crate) fn unit_roots(q: usize) -> Vec<Complex64> {
    (0..q)
        .map(|r| Complex64::cis(TAU * r as f64 / q as f64))
        .collect()
}

/// One conjugate-pair atom of a Ramanujan subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Atom {
    /// Candidate period.
    pub q: usize,
    /// 1-based conjugate-pair index within S_q.
    pub pair_index: usize,
    /// Coprime residue selecting the frequency 2πk/q.
    pub k: usize,
    /// Number of samples the atom is defined on.
    pub n_len: usize,
    /// Angular frequency 2πk/q.
    pub omega: f64,
    /// Unit-norm scaling 1/√N.
    pub norm_const: f64,
    /// Self correlation c = Σ g[n]^2 of the atom against its conjugate,
    /// evaluated as the geometric sum (1/N)·Σ e^{j2nω}.
    pub self_corr: Complex64,
    /// True for q <= 2, where the atom is real and equals its conjugate.
    pub is_real: bool,
}

impl Atom {
    /// Builds the atom for conjugate pair `pair_index` of period `q` on
    /// `n_len` samples.
    ///
    /// Rejects out-of-range pair indices and geometries where the plane
    /// degenerates numerically (1 - |c|^2 below [`DEGENERACY_GUARD`]) even
    /// though q >= 3, which only happens for very short signals.
    pub fn new(q: usize, pair_index: usize, n_len: usize) -> Result<Atom, Error> {
        if n_len == 0 {
            return Err(Error::EmptySignal);
        }
        let pairs = conjugate_pairs(q)?;
        if pair_index == 0 || pair_index > pairs.len() {
            return Err(Error::PairIndexOutOfRange { q, index: pair_index, pairs: pairs.len() });
        }
        let k = pairs[pair_index - 1].k;
        let is_real = q <= 2;
        let norm_const = 1.0 / (n_len as f64).sqrt();

        let roots = unit_roots(q);
        let double_k = (2 * k) % q;
        let mut acc = Complex64::new(0.0, 0.0);
        for n in 0..n_len {
            acc += roots[(double_k * (n % q)) % q];
        }
        let self_corr = acc / n_len as f64;

        if !is_real && 1.0 - self_corr.norm_sqr() < DEGENERACY_GUARD {
            return Err(Error::DegenerateAtom { q, index: pair_index, n_len });
        }

        Ok(Atom {
            q,
            pair_index,
            k,
            n_len,
            omega: TAU * k as f64 / q as f64,
            norm_const,
            self_corr,
            is_real,
        })
    }

    /// Materializes the atom as a complex vector of length `n_len`.
    pub fn vector(&self) -> Vec<Complex64> {
        let roots = unit_roots(self.q);
        (0..self.n_len)
            .map(|n| self.norm_const * roots[(self.k * (n % self.q)) % self.q])
            .collect()
    }

    /// Projects a real signal onto the plane spanned by the atom and its
    /// conjugate, returning the coefficient and the exact energy of the
    /// extracted real vector.
    ///
    /// For q >= 3 the coefficient solves the two-column least-squares
    /// system in closed form, α = (⟨x,g⟩ - conj(c)·⟨x,conj(g)⟩) / (1 - |c|^2)
    /// with ⟨a,b⟩ = Σ a[n]·conj(b[n]); the conjugate column then carries
    /// conj(α) and the extraction is v = 2·Re(α g). Real atoms reduce to the
    /// one-dimensional projection v = ⟨x,g⟩·g.
    pub fn project(&self, x: &[f64]) -> Result<Component, Error> {
        if x.len() != self.n_len {
            return Err(Error::LengthMismatch { expected: self.n_len, got: x.len() });
        }
        let roots = unit_roots(self.q);

        // s = Σ x[n]·g[n]; with x real, ⟨x,g⟩ = conj(s) and ⟨x,conj(g)⟩ = s.
        let mut s = Complex64::new(0.0, 0.0);
        for (n, &xn) in x.iter().enumerate() {
            s += xn * roots[(self.k * (n % self.q)) % self.q];
        }
        s *= self.norm_const;

        let alpha = if self.is_real {
            Complex64::new(s.re, 0.0)
        } else {
            let c = self.self_corr;
            let denom = 1.0 - c.norm_sqr();
            if denom < DEGENERACY_GUARD {
                return Err(Error::DegenerateAtom {
                    q: self.q,
                    index: self.pair_index,
                    n_len: self.n_len,
                });
            }
            (s.conj() - c.conj() * s) / denom
        };

        let energy = extraction_energy(self, alpha, &roots);
        Ok(Component { atom: self.clone(), alpha, energy })
    }
}

/// ‖v‖^2 of the extracted vector, summed directly rather than through the
/// 2|α|^2 + 2Re(α^2 c) identity so the value stays exact for every geometry.
fn extraction_energy(atom: &Atom, alpha: Complex64, roots: &[Complex64]) -> f64 {
    let mut energy = 0.0;
    for n in 0..atom.n_len {
        let g = atom.norm_const * roots[(atom.k * (n % atom.q)) % atom.q];
        let v = if atom.is_real { (alpha * g).re } else { 2.0 * (alpha * g).re };
        energy += v * v;
    }
    energy
}

/// One extracted periodic component: the atom, its coefficient, and the
/// energy of the real vector it removed from the residual.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub atom: Atom,
    /// Coefficient of the atom; its conjugate pair carries conj(alpha).
    pub alpha: Complex64,
    /// ‖v‖^2 of the extracted real vector.
    pub energy: f64,
}

impl Component {
    /// Materializes the extracted real vector v = 2·Re(α g) (or α g for a
    /// real atom).
    pub fn vector(&self) -> Vec<f64> {
        let roots = unit_roots(self.atom.q);
        let scale = if self.atom.is_real { 1.0 } else { 2.0 };
        (0..self.atom.n_len)
            .map(|n| {
                let g = self.atom.norm_const * roots[(self.atom.k * (n % self.atom.q)) % self.atom.q];
                scale * (self.alpha * g).re
            })
            .collect()
    }
}
