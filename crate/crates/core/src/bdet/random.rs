use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PolyMatrix;
use crate::poly::{Monomial, Polynomial};

pub const DEFAULT_SEED: u64 = 42;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries `c q^{e/2}` with `c ∈ {±1, ±2, ±3}` and `e ∈ 0..=4`.
pub fn random_monomial_matrix<R: Rng>(n: usize, rng: &mut R) -> PolyMatrix {
    PolyMatrix::from_fn(n, |_, _| {
        let mut c: i64 = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        let e: i64 = rng.gen_range(0..=4);
        Polynomial::term(Monomial::q_halves(e), BigRational::from_integer(c.into()))
    })
}

/// Constant entries `a / b` with `a ∈ ±{1, …, 9}`, `b ∈ 1..=5`. Entries are
/// never zero, so `λ`-determinant recursions on them do not stall.
pub fn random_rational_matrix<R: Rng>(n: usize, rng: &mut R) -> PolyMatrix {
    PolyMatrix::from_fn(n, |_, _| {
        let mut a: i64 = rng.gen_range(1..=9);
        if rng.gen_bool(0.5) {
            a = -a;
        }
        let b: i64 = rng.gen_range(1..=5);
        Polynomial::constant(BigRational::new(a.into(), b.into()))
    })
}
