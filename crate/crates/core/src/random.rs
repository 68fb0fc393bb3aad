//! Seeded generators for randomized checks. All draws are small Gaussian
//! rationals so exact arithmetic stays cheap.

use num::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exterior::{basis, Form};
use crate::hodge::HermitianMetric;
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar};

/// The generator behind every seeded check.
pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into())
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::new(random_rational(rng), random_rational(rng))
}

pub fn random_nonzero_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let c = random_scalar(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random form of bidegree `(p, q)`; each monomial is present with
/// probability 1/2.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, p: usize, q: usize) -> Form {
    let mut f = Form::zero(n);
    for m in basis(n, p, q) {
        if rng.gen_bool(0.5) {
            f.add_term(m, random_scalar(rng));
        }
    }
    f
}

/// A random positive-definite Hermitian metric, rejecting draws that fail
/// the leading-minor test.
pub fn random_metric<R: Rng>(rng: &mut R, n: usize) -> HermitianMetric {
    loop {
        let mut h = Matrix::zeros(n, n);
        for i in 0..n {
            let d = Rational::new(rng.gen_range(1i64..=6).into(), rng.gen_range(1i64..=2).into());
            h[(i, i)] = Scalar::real(d);
            for j in i + 1..n {
                let c = if rng.gen_bool(0.3) {
                    Scalar::zero()
                } else {
                    random_scalar(rng)
                };
                h[(j, i)] = c.conj();
                h[(i, j)] = c;
            }
        }
        if let Ok(g) = HermitianMetric::new(h) {
            return g;
        }
    }
}

/// Coefficients `(A, B, C, D, E)` for the pluriclosed nilmanifold family.
/// Every other draw is solved for `C` so that the pluriclosed condition holds.
pub fn random_skt_tuple<R: Rng>(rng: &mut R) -> [Scalar; 5] {
    let a = random_scalar(rng);
    let d = random_scalar(rng);
    let e = random_scalar(rng);
    if rng.gen_bool(0.5) {
        let b = random_nonzero_scalar(rng);
        // 2 Re(B̄C) = −(|A|² + |D|² + |E|²)
        let s = a.norm_sqr() + d.norm_sqr() + e.norm_sqr();
        let k = -(s / (b.norm_sqr() * Rational::from_integer(2.into())));
        let t = random_rational(rng);
        let c = &b.scale(&k) + &(&b * &Scalar::new(Rational::zero(), t));
        [a, b, c, d, e]
    } else {
        [a, random_scalar(rng), random_scalar(rng), d, e]
    }
}
