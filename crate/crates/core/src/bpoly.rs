//! Signed bigrassmannian polynomials
//! `B_n(q) = Σ_{w ∈ S_n} (-1)^{ℓ(w)} q^{β(w)} = ∏_{k=1}^{n-1} (1 - q^k)^{n-k}`
//! by four independent routes, and the two-variable `B_n(λ, q)`.

use std::fmt;

use num_rational::BigRational;

use crate::bdet::{bdet_condense, permanent_q_with_limit, Deformation, PolyMatrix};
use crate::error::{check_bound, Result};
use crate::perm::enumerate_sn_with_limit;
use crate::poly::{Monomial, Polynomial};

pub const MAX_SIGNED_SUM_N: usize = 9;
pub const MAX_PRODUCT_N: usize = 30;
pub const MAX_RECURSION_N: usize = 30;
pub const MAX_DETERMINANT_N: usize = 12;
pub const MAX_LAMBDA_Q_N: usize = 15;
pub const MAX_READING_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    SignedSum,
    Product,
    Recursion,
    Determinant,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::SignedSum,
        Route::Product,
        Route::Recursion,
        Route::Determinant,
    ];

    pub fn default_limit(self) -> usize {
        match self {
            Route::SignedSum => MAX_SIGNED_SUM_N,
            Route::Product => MAX_PRODUCT_N,
            Route::Recursion => MAX_RECURSION_N,
            Route::Determinant => MAX_DETERMINANT_N,
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::SignedSum => "sum",
            Route::Product => "product",
            Route::Recursion => "recursion",
            Route::Determinant => "det",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnResult {
    pub n: usize,
    pub poly: Polynomial,
    pub route: Route,
}

/// `binom(n+1, 3)`, the degree of `B_n` and the largest value of `β` on `S_n`.
pub fn max_beta(n: usize) -> usize {
    (n + 1) * n * n.saturating_sub(1) / 6
}

pub fn bn(n: usize, route: Route) -> Result<BnResult> {
    bn_with_limit(n, route, route.default_limit())
}

pub fn bn_with_limit(n: usize, route: Route, max: usize) -> Result<BnResult> {
    let poly = match route {
        Route::SignedSum => signed_sum(n, max)?,
        Route::Product => {
            check_bound("bn_product", n, max)?;
            product(n, -1)
        }
        Route::Recursion => {
            check_bound("bn_recursion", n, max)?;
            recursion(n, -1)?
        }
        Route::Determinant => {
            check_bound("bn_determinant", n, max)?;
            bdet_condense(&PolyMatrix::ones(n))?
        }
    };
    Ok(BnResult { n, poly, route })
}

pub fn bn_signed_sum(n: usize) -> Result<Polynomial> {
    bn(n, Route::SignedSum).map(|r| r.poly)
}

pub fn bn_product(n: usize) -> Result<Polynomial> {
    bn(n, Route::Product).map(|r| r.poly)
}

/// `B_1 = 1`, `B_2 = 1 - q`, `B_n = B_{n-1}^2 / B_{n-2} · (1 - q^{n-1})`.
pub fn bn_recursion(n: usize) -> Result<Polynomial> {
    bn(n, Route::Recursion).map(|r| r.poly)
}

/// `det(q^{(i-j)^2/2})`, evaluated by weighted condensation on the ones matrix.
pub fn bn_determinant(n: usize) -> Result<Polynomial> {
    bn(n, Route::Determinant).map(|r| r.poly)
}

fn signed_sum(n: usize, max: usize) -> Result<Polynomial> {
    check_bound("bn_signed_sum", n, max)?;
    let mut coeffs = vec![0i64; max_beta(n) + 1];
    for w in enumerate_sn_with_limit(n, max)? {
        coeffs[w.beta() as usize] += w.sign();
    }
    Ok(Polynomial::from_q_coeffs(&coeffs))
}

/// `1 + c λ q^k` with `c = ±1`; `c = -1` without `λ` when `lambda_sign` is -1.
fn factor(k: usize, lambda_sign: i64) -> Polynomial {
    let q = Monomial::q_pow(k as i64);
    if lambda_sign == 0 {
        Polynomial::one() + Polynomial::monomial(Monomial::lambda_pow(1).mul(&q))
    } else {
        Polynomial::one()
            + Polynomial::monomial(q).scale(&BigRational::from_integer(lambda_sign.into()))
    }
}

/// `∏_{k=1}^{n-1} factor(k)^{n-k}`.
fn product(n: usize, lambda_sign: i64) -> Polynomial {
    let mut acc = Polynomial::one();
    for k in 1..n {
        acc = &acc * &factor(k, lambda_sign).pow((n - k) as u32);
    }
    acc
}

fn recursion(n: usize, lambda_sign: i64) -> Result<Polynomial> {
    let mut prev2 = Polynomial::one();
    let mut prev1 = Polynomial::one();
    if n <= 1 {
        return Ok(prev1);
    }
    for m in 2..=n {
        let next = if m == 2 {
            factor(1, lambda_sign)
        } else {
            (&prev1 * &prev1).div_exact(&prev2)? * factor(m - 1, lambda_sign)
        };
        prev2 = std::mem::replace(&mut prev1, next);
    }
    Ok(prev1)
}

/// `Σ_w (-1)^{ℓ(w)} β(w)`, straight from the statistics.
pub fn sign_balance(n: usize) -> Result<i64> {
    let mut total = 0i64;
    for w in enumerate_sn_with_limit(n, MAX_SIGNED_SUM_N)? {
        total += w.sign() * w.beta() as i64;
    }
    Ok(total)
}

/// `B_n(λ, q) = ∏_{k=1}^{n-1} (1 + λ q^k)^{n-k}`.
pub fn bn_lambda_q(n: usize) -> Result<Polynomial> {
    check_bound("bn_lambda_q", n, MAX_LAMBDA_Q_N)?;
    Ok(product(n, 0))
}

/// `B_n(λ, q) = B_{n-1}(λ, q)^2 / B_{n-2}(λ, q) · (1 + λ q^{n-1})`.
pub fn bn_lambda_q_recursion(n: usize) -> Result<Polynomial> {
    check_bound("bn_lambda_q", n, MAX_LAMBDA_Q_N)?;
    recursion(n, 0)
}

/// `Σ_w q^{β(w)}` as the permanent of `(q^{(i-j)^2/2})`.
pub fn reading_polynomial(n: usize) -> Result<Polynomial> {
    reading_polynomial_with_limit(n, MAX_READING_N)
}

pub fn reading_polynomial_with_limit(n: usize, max: usize) -> Result<Polynomial> {
    check_bound("reading", n, max)?;
    permanent_q_with_limit(&PolyMatrix::ones(n).deform(Deformation::B), max)
}

/// The four routes side by side.
#[derive(Clone, Debug)]
pub struct RouteComparison {
    pub n: usize,
    pub results: Vec<BnResult>,
}

impl RouteComparison {
    pub fn agree(&self) -> bool {
        self.results.windows(2).all(|w| w[0].poly == w[1].poly)
    }
}

pub fn verify_all(n: usize) -> Result<RouteComparison> {
    let results = Route::ALL
        .iter()
        .map(|&r| bn(n, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(RouteComparison { n, results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::sign_specialization;
    use num_bigint::BigInt;
    use num_traits::One;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn signed_sums_small() {
        assert_eq!(bn_signed_sum(2).unwrap(), p("1 - q"));
        assert_eq!(bn_signed_sum(3).unwrap(), p("1 - 2*q + 2*q^3 - q^4"));
        assert_eq!(
            bn_signed_sum(4).unwrap(),
            p("1 - 3*q + q^2 + 4*q^3 - 2*q^4 - 2*q^5 - 2*q^6 + 4*q^7 + q^8 - 3*q^9 + q^10")
        );
    }

    #[test]
    fn degenerate_sizes() {
        for r in Route::ALL {
            assert!(bn(1, r).unwrap().poly.is_one(), "{r}");
            assert!(bn(0, r).unwrap().poly.is_one(), "{r}");
        }
    }

    #[test]
    fn routes_agree_small() {
        for n in 1..=6 {
            assert!(verify_all(n).unwrap().agree(), "n = {n}");
        }
    }

    #[test]
    fn recursion_matches_product_at_ten() {
        assert_eq!(bn_recursion(10).unwrap(), bn_product(10).unwrap());
    }

    #[test]
    fn shape_of_b_n() {
        for n in 1..=12 {
            let b = bn_product(n).unwrap();
            let c = b.q_coeffs().unwrap();
            assert_eq!(c.len() - 1, max_beta(n));
            assert!(c[0].is_one());
            assert_eq!(c.last().unwrap().magnitude(), BigInt::one().magnitude());
        }
    }

    #[test]
    fn sign_balance_values() {
        assert_eq!(sign_balance(2).unwrap(), -1);
        assert_eq!(sign_balance(3).unwrap(), 0);
        assert_eq!(sign_balance(5).unwrap(), 0);
    }

    #[test]
    fn lambda_q_routes() {
        assert_eq!(bn_lambda_q(2).unwrap(), p("1 + l*q"));
        assert_eq!(bn_lambda_q(5).unwrap(), bn_lambda_q_recursion(5).unwrap());
        let at = bn_lambda_q(4)
            .unwrap()
            .eval(&crate::poly::Substitution::new().lambda(-BigRational::one()))
            .unwrap();
        assert_eq!(at, bn_signed_sum(4).unwrap());
        let _ = sign_specialization;
    }

    #[test]
    fn bounds() {
        assert!(bn_signed_sum(10).is_err());
        assert!(bn_determinant(13).is_err());
        assert!(bn_with_limit(13, Route::Determinant, 13).is_ok());
    }
}
