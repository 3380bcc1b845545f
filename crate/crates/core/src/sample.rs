//! Deterministic pseudo-random generation of exact matrices.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::rank;
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational, Rational};

/// SplitMix64 mix of `(seed, index)`, used for per-trial seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(index.wrapping_mul(0xBF58_476D_1CE4_E5B9));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seeded generator of rationals, Gaussian rationals and structured matrices.
///
/// Numerators are drawn from `[-bound, bound]`, denominators from `[1, den_bound]`.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
    den_bound: i64,
    complex: bool,
}

impl Sampler {
    pub fn new(seed: u64, bound: i64) -> Self {
        let bound = bound.max(1);
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound,
            den_bound: bound,
            complex: false,
        }
    }

    /// Entries get a random imaginary part when `complex` is set.
    pub fn complex(mut self, complex: bool) -> Self {
        self.complex = complex;
        self
    }

    pub fn den_bound(mut self, den_bound: i64) -> Self {
        self.den_bound = den_bound.max(1);
        self
    }

    pub fn is_complex(&self) -> bool {
        self.complex
    }

    pub fn set_complex(&mut self, complex: bool) {
        self.complex = complex;
    }

    pub fn integer(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("nonempty choice")
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-self.bound..=self.bound);
        let d = self.rng.gen_range(1..=self.den_bound);
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn real_scalar(&mut self) -> GaussianRational {
        GaussianRational::real(self.rational())
    }

    pub fn scalar(&mut self) -> GaussianRational {
        if self.complex {
            let re = self.rational();
            GaussianRational::new(re, self.rational())
        } else {
            self.real_scalar()
        }
    }

    pub fn matrix(&mut self, m: usize, n: usize) -> Matrix {
        Matrix::from_fn(m, n, |_, _| self.scalar())
    }

    /// Matrix with integer entries in `[lo, hi]` (complex parts too when enabled).
    pub fn int_matrix(&mut self, m: usize, n: usize, lo: i64, hi: i64) -> Matrix {
        let complex = self.complex;
        Matrix::from_fn(m, n, |_, _| {
            let re = GaussianRational::from_int(self.integer(lo, hi));
            if complex {
                &re + &(&GaussianRational::i() * &GaussianRational::from_int(self.integer(lo, hi)))
            } else {
                re
            }
        })
    }

    pub fn hermitian(&mut self, n: usize) -> Matrix {
        let mut h = Matrix::zeros(n, n);
        for i in 0..n {
            h.set(i, i, self.real_scalar());
            for j in i + 1..n {
                let z = self.scalar();
                h.set(j, i, z.conj());
                h.set(i, j, z);
            }
        }
        h
    }

    /// Hermitian with integer entries in `[lo, hi]`.
    pub fn int_hermitian(&mut self, n: usize, lo: i64, hi: i64) -> Matrix {
        let a = self.int_matrix(n, n, lo, hi);
        Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => a.get(i, j).clone(),
            std::cmp::Ordering::Equal => GaussianRational::real(a.get(i, i).re().clone()),
            std::cmp::Ordering::Greater => a.get(j, i).conj(),
        })
    }

    /// Gram matrix `VV*` with `V` of size `n x k`, hence PSD of rank at most `k`.
    pub fn gram(&mut self, n: usize, k: usize) -> Matrix {
        let v = self.matrix(n, k);
        &v * &v.adjoint()
    }

    pub fn psd(&mut self, n: usize) -> Matrix {
        self.gram(n, n)
    }

    /// Product `L R` of random `m x r` and `r x n` factors (rank at most `r`).
    pub fn low_rank(&mut self, m: usize, n: usize, r: usize) -> Matrix {
        let l = self.matrix(m, r);
        let rr = self.matrix(r, n);
        &l * &rr
    }

    /// Random matrix with rank drawn uniformly from `0..=min(m, n)`, sometimes full.
    pub fn any_rank(&mut self, m: usize, n: usize) -> Matrix {
        let top = m.min(n);
        let r = self.rng.gen_range(0..=top);
        if r == top && self.coin(0.5) {
            self.matrix(m, n)
        } else {
            self.low_rank(m, n, r)
        }
    }

    /// Random nonsingular matrix (rejection sampling).
    pub fn nonsingular(&mut self, n: usize) -> Matrix {
        loop {
            let p = self.matrix(n, n);
            if rank(&p) == n {
                return p;
            }
        }
    }
}

/// Reproducible Hermitian `n x n` matrix for `seed`.
pub fn sample_hermitian(seed: u64, n: usize, bound: i64) -> Matrix {
    Sampler::new(seed, bound).hermitian(n)
}

/// Reproducible PSD `n x n` matrix `VV*` for `seed`.
pub fn sample_psd(seed: u64, n: usize, bound: i64) -> Matrix {
    Sampler::new(seed, bound).psd(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::inertia;

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(sample_hermitian(1, 2, 3), sample_hermitian(1, 2, 3));
        assert!(sample_hermitian(1, 2, 3).is_hermitian());
    }

    #[test]
    fn psd_samples_have_no_negative_inertia() {
        for seed in 0..50 {
            let p = sample_psd(seed, 3, 4);
            assert_eq!(inertia(&p).unwrap().minus, 0);
        }
    }

    #[test]
    fn distinct_seeds_rarely_collide() {
        let collisions = (0..100)
            .filter(|&s| sample_hermitian(2 * s, 3, 5) == sample_hermitian(2 * s + 1, 3, 5))
            .count();
        assert!(collisions <= 1, "{collisions} collisions");
    }

    #[test]
    fn entries_respect_bounds() {
        let mut s = Sampler::new(9, 3);
        for _ in 0..200 {
            let q = s.rational();
            assert!(q.numer().magnitude() <= &3u32.into());
            assert!(q.denom() <= &3.into());
        }
        let mut c = Sampler::new(4, 2).complex(true);
        assert!(c.hermitian(3).is_hermitian());
        assert_eq!(rank(&c.nonsingular(3)), 3);
        assert!(rank(&c.low_rank(4, 4, 2)) <= 2);
    }
}
