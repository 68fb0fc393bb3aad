//! Shared fixtures for the criterion benches.

use aeppli_core::random::{random_form, random_metric, rng};
use aeppli_core::{corpus, Form, HermitianMetric, StructureEquations};

pub fn equations(name: &str) -> StructureEquations {
    corpus::load(name).expect("corpus entry").equations
}

/// Two seeded forms of bidegrees `(1,1)` and `(1,0)` in dimension `n`.
pub fn form_pair(n: usize, seed: u64) -> (Form, Form) {
    let mut r = rng(seed);
    (random_form(&mut r, n, 1, 1), random_form(&mut r, n, 1, 0))
}

pub fn metric(n: usize, seed: u64) -> HermitianMetric {
    random_metric(&mut rng(seed), n)
}
