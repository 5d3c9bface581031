use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::{Polynomial, Substitution};
use crate::error::{Error, Result};

/// Quotient of two polynomials with a nonzero denominator.
///
/// Reduction is lazy: only monomial content and exact polynomial quotients
/// are cancelled, there is no multivariate gcd. Equality is decided by
/// cross-multiplication, so unreduced representations still compare equal.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction { num, den }.reduced())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator has been cancelled away.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.div_exact(&self.den).ok()
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        }
        .reduced())
    }

    pub fn recip(&self) -> Result<RationalFunction> {
        RationalFunction::one().checked_div(self)
    }

    /// Substitutes into numerator and denominator.
    pub fn eval(&self, sub: &Substitution) -> Result<RationalFunction> {
        let num = self.num.eval(sub)?;
        let den = self.den.eval(sub)?;
        RationalFunction::new(num, den)
    }

    fn reduced(self) -> Self {
        let RationalFunction { mut num, mut den } = self;
        if num.is_zero() {
            return RationalFunction::zero();
        }
        if den.is_one() {
            return RationalFunction { num, den };
        }
        // Monomial content.
        let g = common_content(&num, &den);
        if !g.is_one() {
            num = num
                .div_exact(&Polynomial::monomial(g.clone()))
                .expect("content divides");
            den = den
                .div_exact(&Polynomial::monomial(g))
                .expect("content divides");
        }
        if let Ok(q) = num.div_exact(&den) {
            return RationalFunction::from_poly(q);
        }
        if let Ok(q) = den.div_exact(&num) {
            return RationalFunction {
                num: Polynomial::one(),
                den: q,
            }
            .normalized();
        }
        RationalFunction { num, den }.normalized()
    }

    /// Makes the denominator's leading coefficient 1.
    fn normalized(self) -> Self {
        let lc = self.den.leading_term().map(|(_, c)| c.clone());
        match lc {
            Some(c) if !c.is_one() => {
                let inv = c.recip();
                RationalFunction {
                    num: self.num.scale(&inv),
                    den: self.den.scale(&inv),
                }
            }
            _ => self,
        }
    }
}

fn common_content(a: &Polynomial, b: &Polynomial) -> super::Monomial {
    let ca = a.monomial_content();
    let cb = b.monomial_content();
    let q = ca.q().halves().min(cb.q().halves());
    let l = ca.lambda().min(cb.lambda());
    let x = ca
        .x_exps()
        .iter()
        .filter_map(|&(i, e)| {
            let f = cb.x_exp(i);
            (f > 0).then(|| (i, e.min(f)))
        })
        .collect();
    super::Monomial::from_parts(super::HalfExp::from_halves(q), l, x)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .reduced();
        }
        RationalFunction {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn inverse_product_is_one() {
        let a = RationalFunction::from_poly(p("1 + 2*q - l*x1"));
        assert_eq!(&a * &a.recip().unwrap(), RationalFunction::one());
    }

    #[test]
    fn cross_multiplication_equality() {
        assert_eq!(
            rf("1 - q^2", "1 - q"),
            RationalFunction::from_poly(p("1 + q"))
        );
        // reduces all the way
        assert!(rf("1 - q^2", "1 - q").denom().is_one());
        assert_ne!(rf("1", "1 + q"), rf("1", "1 - q"));
    }

    #[test]
    fn irreducible_quotients_are_kept() {
        let a = rf("1 + q", "1 - q");
        let b = rf("q", "1 + q");
        let s = &a + &b;
        // (1+q)^2 + q(1-q) over (1-q)(1+q)
        assert_eq!(s, rf("1 + 3*q", "1 - q^2"));
        assert_eq!(&(&s - &b), &a);
        assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::one());
    }

    #[test]
    fn monomial_content_cancels() {
        let a = rf("x1^2*q + x1*q^2", "x1*q^(1/2)");
        assert_eq!(a.to_polynomial().unwrap(), p("x1*q^(1/2) + q^(3/2)"));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(p("1"), Polynomial::zero()).unwrap_err(),
            Error::DivisionByZero
        );
        assert_eq!(
            RationalFunction::one()
                .checked_div(&RationalFunction::zero())
                .unwrap_err(),
            Error::DivisionByZero
        );
    }
}
