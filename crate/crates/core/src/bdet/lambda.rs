use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RationalFunction};

/// Robbins–Rumsey `λ`-determinant:
/// `|M| = (|M_1^1| |M_k^k| + λ |M_k^1| |M_1^k|) / |M_{1k}^{1k}|`
/// over contiguous blocks, with `|∅| = 1` and `|(a)| = a`.
pub fn lambda_det(a: &PolyMatrix) -> Result<RationalFunction> {
    condense_with(a, |_| Polynomial::lambda())
}

/// The same recursion with `λ` replaced by `λ q^{k-1}` at block size `k`.
pub fn lambda_q_det(a: &PolyMatrix) -> Result<RationalFunction> {
    condense_with(a, |k| {
        Polynomial::monomial(Monomial::lambda_pow(1).mul(&Monomial::q_pow(k as i64 - 1)))
    })
}

fn condense_with(a: &PolyMatrix, weight: impl Fn(usize) -> Polynomial) -> Result<RationalFunction> {
    let n = a.n();
    if n == 0 {
        return Ok(RationalFunction::one());
    }
    let width = |s: usize| n - s + 1;
    let mut smaller: Vec<RationalFunction> = vec![RationalFunction::one(); (n + 1) * (n + 1)];
    let mut current: Vec<RationalFunction> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| RationalFunction::from_poly(a.get(i, j).clone()))
        .collect();

    for size in 2..=n {
        let (w_prev, w_prev2, w_new) = (width(size - 1), width(size - 2), width(size));
        let wt = RationalFunction::from_poly(weight(size));
        let mut next = Vec::with_capacity(w_new * w_new);
        for r in 0..w_new {
            for c in 0..w_new {
                let interior = &smaller[(r + 1) * w_prev2 + (c + 1)];
                if interior.is_zero() {
                    return Err(Error::ZeroMinor {
                        row: r + 2,
                        column: c + 2,
                        size: size - 2,
                    });
                }
                let diag = &current[r * w_prev + c] * &current[(r + 1) * w_prev + (c + 1)];
                let anti = &current[r * w_prev + (c + 1)] * &current[(r + 1) * w_prev + c];
                let numer = &diag + &(&wt * &anti);
                next.push(numer.checked_div(interior)?);
            }
        }
        smaller = std::mem::replace(&mut current, next);
    }
    Ok(current.pop().expect("1x1 table at the end"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bdet::{det_classic, random_rational_matrix, seeded_rng};
    use crate::poly::Substitution;
    use num_rational::BigRational;
    use num_traits::One;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two() {
        let a = PolyMatrix::from_fn(2, |i, j| Polynomial::x(((i - 1) * 2 + j) as u32));
        let v = lambda_det(&a).unwrap();
        assert_eq!(v.to_polynomial().unwrap(), p("x1*x4 + l*x2*x3"));
    }

    #[test]
    fn vandermonde_matrix() {
        let n = 3;
        let a = PolyMatrix::from_fn(n, |i, j| {
            Polynomial::monomial(Monomial::x_pow(j as u32, (n - i) as u32))
        });
        let v = lambda_det(&a).unwrap().to_polynomial().unwrap();
        assert_eq!(v, p("x1 + l*x2") * p("x1 + l*x3") * p("x2 + l*x3"));
    }

    #[test]
    fn at_minus_one_is_the_determinant() {
        let mut rng = seeded_rng(5);
        let minus_one = Substitution::new().lambda(-BigRational::one());
        for n in 1..=4 {
            let a = random_rational_matrix(n, &mut rng);
            let v = lambda_det(&a).unwrap().eval(&minus_one).unwrap();
            assert_eq!(v, RationalFunction::from_poly(det_classic(&a).unwrap()));
        }
    }

    #[test]
    fn lambda_q_of_ones() {
        assert_eq!(
            lambda_q_det(&PolyMatrix::ones(2))
                .unwrap()
                .to_polynomial()
                .unwrap(),
            p("1 + l*q")
        );
        let expect = p("1 + l*q").pow(3) * p("1 + l*q^2").pow(2) * p("1 + l*q^3");
        assert_eq!(
            lambda_q_det(&PolyMatrix::ones(4))
                .unwrap()
                .to_polynomial()
                .unwrap(),
            expect
        );
    }

    #[test]
    fn zero_minor_is_reported() {
        let a = PolyMatrix::from_fn(3, |i, j| {
            if (i, j) == (2, 2) {
                Polynomial::zero()
            } else {
                Polynomial::one()
            }
        });
        assert_eq!(
            lambda_det(&a).unwrap_err(),
            Error::ZeroMinor {
                row: 2,
                column: 2,
                size: 1
            }
        );
    }
}
