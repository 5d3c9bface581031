//! Vandermonde `λ`-products `∏_{i<j} (x_i + λ x_j)` and their weighted
//! variants `∏_{i<j} (x_i + λ q^{j-i} x_j)`, together with the expansion as
//! a sum of one monomial per tournament.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{check_bound, Result};
use crate::poly::{sign_specialization, HalfExp, Monomial, Polynomial};
use crate::tournament::{enumerate_tn_with_limit, Tournament};

pub const MAX_PRODUCT_N: usize = 7;
pub const MAX_SUM_N: usize = 6;

/// A tournament-sum expansion split by transitivity.
#[derive(Clone, Debug, PartialEq)]
pub struct VandermondeExpansion {
    pub n: usize,
    pub weighted: bool,
    pub total: Polynomial,
    pub transitive_part: Polynomial,
    pub cyclic_part: Polynomial,
    /// Tournaments that contributed to each part.
    pub transitive_count: usize,
    pub cyclic_count: usize,
}

/// Fully expanded product over all pairs `i < j`.
pub fn vandermonde_product(n: usize, weighted: bool) -> Result<Polynomial> {
    check_bound("vandermonde_product", n, MAX_PRODUCT_N)?;
    let mut acc = Polynomial::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            let q = if weighted { i64::from(j - i) } else { 0 };
            let factor = Polynomial::x(i)
                + Polynomial::monomial(
                    Monomial::lambda_pow(1)
                        .mul(&Monomial::q_pow(q))
                        .mul(&Monomial::x_pow(j, 1)),
                );
            acc = &acc * &factor;
        }
    }
    Ok(acc)
}

/// `ρ(G) = λ^{ℓ(G)} ∏ x_j^{ω(j)}`, or `χ(G) = ρ(G) q^{β(G)}` when weighted.
pub fn tournament_monomial(g: &Tournament, weighted: bool) -> Monomial {
    let q = if weighted { g.beta() as i64 } else { 0 };
    let x = g
        .outdegrees()
        .into_iter()
        .enumerate()
        .map(|(j, d)| (j as u32 + 1, d as u32))
        .collect();
    Monomial::from_parts(HalfExp::from_int(q), g.length() as i64, x)
}

pub fn tournament_sum(n: usize, weighted: bool) -> Result<VandermondeExpansion> {
    let mut transitive_part = Polynomial::zero();
    let mut cyclic_part = Polynomial::zero();
    let (mut transitive_count, mut cyclic_count) = (0, 0);
    for g in enumerate_tn_with_limit(n, MAX_SUM_N)? {
        let m = tournament_monomial(&g, weighted);
        if g.is_transitive() {
            transitive_part.add_term(m, BigRational::one());
            transitive_count += 1;
        } else {
            cyclic_part.add_term(m, BigRational::one());
            cyclic_count += 1;
        }
    }
    Ok(VandermondeExpansion {
        n,
        weighted,
        total: &transitive_part + &cyclic_part,
        transitive_part,
        cyclic_part,
        transitive_count,
        cyclic_count,
    })
}

/// The weighted cyclic part at `x_1 = … = x_n = 1`, `λ = -1`.
pub fn vanishing_check(n: usize) -> Result<Polynomial> {
    let e = tournament_sum(n, true)?;
    e.cyclic_part.eval(&sign_specialization(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn example_v3() -> Polynomial {
        p(
            "x1^2*x2 + l*q*x1*x2^2 + l*q*x1^2*x3 + l^2*q^2*x1*x2*x3 + l*q^2*x1*x2*x3 \
           + l^2*q^3*x2^2*x3 + l^2*q^3*x1*x3^2 + l^3*q^4*x2*x3^2",
        )
    }

    #[test]
    fn small_products() {
        assert_eq!(vandermonde_product(1, true).unwrap(), Polynomial::one());
        assert_eq!(vandermonde_product(2, false).unwrap(), p("x1 + l*x2"));
        assert_eq!(vandermonde_product(3, true).unwrap(), example_v3());
        assert!(vandermonde_product(8, false).is_err());
    }

    #[test]
    fn tournament_sum_n3() {
        let e = tournament_sum(3, true).unwrap();
        assert_eq!(e.total, example_v3());
        assert_eq!((e.transitive_count, e.cyclic_count), (6, 2));
        assert_eq!(e.cyclic_part, p("l*q^2*x1*x2*x3 + l^2*q^2*x1*x2*x3"));
        assert!(tournament_sum(2, false).unwrap().cyclic_part.is_zero());
    }

    #[test]
    fn cyclic_part_vanishes() {
        for n in 2..=5 {
            assert!(vanishing_check(n).unwrap().is_zero(), "n = {n}");
        }
    }

    #[test]
    fn specialized_v3_is_b3() {
        let v = vandermonde_product(3, true).unwrap();
        assert_eq!(
            v.eval(&sign_specialization(3)).unwrap(),
            p("1 - 2*q + 2*q^3 - q^4")
        );
    }
}
