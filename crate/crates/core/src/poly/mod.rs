//! Exact sparse polynomials in `q^{1/2}`, `λ` and `x_1, x_2, …` over the
//! rationals, plus a lazily reduced rational-function type.
//!
//! `q` and `λ` are Laurent variables (negative exponents allowed, `q` in
//! half steps); the `x_i` carry nonnegative exponents only.

mod monomial;
mod parse;
mod ratfun;

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub use monomial::{HalfExp, Monomial};
pub use ratfun::RationalFunction;

/// Sparse polynomial in canonical form: no zero coefficient is ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    /// `q^{halves/2}`.
    pub fn q_halves(halves: i64) -> Self {
        Self::monomial(Monomial::q_halves(halves))
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(Monomial::q_pow(exp))
    }

    pub fn lambda() -> Self {
        Self::monomial(Monomial::lambda_pow(1))
    }

    /// The variable `x_index` (1-based).
    pub fn x(index: u32) -> Self {
        Self::monomial(Monomial::x_pow(index, 1))
    }

    /// `c_0 + c_1 q + c_2 q^2 + …`
    pub fn from_q_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = Polynomial::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(
                Monomial::q_pow(k as i64),
                BigRational::from_integer(c.clone().into()),
            );
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.last_key_value()
    }

    /// Largest `q` exponent among the terms.
    pub fn q_degree(&self) -> Option<HalfExp> {
        self.terms.keys().map(Monomial::q).max()
    }

    /// Smallest `q` exponent among the terms.
    pub fn q_valuation(&self) -> Option<HalfExp> {
        self.terms.keys().next().map(Monomial::q)
    }

    /// Coefficient list `[c_0, c_1, …]` when `self` is a polynomial in `q`
    /// alone with nonnegative integral exponents and integer coefficients.
    pub fn q_coeffs(&self) -> Option<Vec<BigInt>> {
        let mut out: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            if m.lambda() != 0 || !m.x_exps().is_empty() || !c.is_integer() {
                return None;
            }
            let e = m.q().as_int().filter(|&e| e >= 0)? as usize;
            if out.len() <= e {
                out.resize(e + 1, BigInt::zero());
            }
            out[e] = c.to_integer();
        }
        Some(out)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The quotient `self / divisor` when it is a polynomial.
    ///
    /// Both operands are shifted by a monomial so that every `q` and `λ`
    /// exponent is nonnegative; long division then runs under a well order
    /// and terminates. Any leftover remainder means the division is inexact.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let shift_a = self.laurent_shift();
        let shift_b = divisor.laurent_shift();
        let mut rem = self.mul_monomial(&shift_a).terms;
        let b = divisor.mul_monomial(&shift_b);
        let (lb_m, lb_c) = b.leading_term().expect("nonzero divisor");
        let (lb_m, lb_c) = (lb_m.clone(), lb_c.clone());

        let mut quotient = Polynomial::zero();
        while let Some((lt_m, lt_c)) = rem.last_key_value() {
            let m = lt_m.div(&lb_m).ok_or_else(inexact)?;
            if m.q().halves() < 0 || m.lambda() < 0 {
                return Err(inexact());
            }
            let c = lt_c / &lb_c;
            for (bm, bc) in &b.terms {
                let key = bm.mul(&m);
                let delta = bc * &c;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quotient.terms.insert(m, c);
        }
        // quotient * shift_b / shift_a
        let back = shift_b.div(&shift_a).expect("shifts carry no x exponents");
        Ok(quotient.mul_monomial(&back))
    }

    /// Monomial `q^a λ^b` that lifts every `q`/`λ` exponent to at least 0.
    fn laurent_shift(&self) -> Monomial {
        let min_q = self.terms.keys().map(|m| m.q().halves()).min().unwrap_or(0);
        let min_l = self.terms.keys().map(Monomial::lambda).min().unwrap_or(0);
        Monomial::q_halves(-min_q).mul(&Monomial::lambda_pow(-min_l))
    }

    /// Substitutes rational values for `λ` and any subset of the `x_i`.
    /// `q` is never substituted here.
    pub fn eval(&self, sub: &Substitution) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut lambda = m.lambda();
            if let Some(v) = &sub.lambda {
                coef *= rational_pow(v, lambda, "l")?;
                lambda = 0;
            }
            let mut xs = Vec::with_capacity(m.x_exps().len());
            for &(i, e) in m.x_exps() {
                match sub.x_value(i) {
                    Some(v) => coef *= rational_pow(v, i64::from(e), "x")?,
                    None => xs.push((i, e)),
                }
            }
            out.add_term(m.with_lambda(lambda).with_x(xs), coef);
        }
        Ok(out)
    }

    /// Substitutes `q = 1` (so `q^{1/2} = 1` as well).
    pub fn at_q_one(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.without_q(), c.clone());
        }
        out
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn q_reflect(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.with_q(-m.q()), c.clone());
        }
        out
    }

    /// Value when no variables remain.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest monomial dividing every term (`q`, `λ` minima may be negative).
    pub(crate) fn monomial_content(&self) -> Monomial {
        let Some(first) = self.terms.keys().next() else {
            return Monomial::one();
        };
        let min_q = self.terms.keys().map(|m| m.q().halves()).min().unwrap_or(0);
        let min_l = self.terms.keys().map(Monomial::lambda).min().unwrap_or(0);
        let mut x: Vec<(u32, u32)> = first.x_exps().to_vec();
        for m in self.terms.keys().skip(1) {
            x = x
                .into_iter()
                .filter_map(|(i, e)| {
                    let f = m.x_exp(i);
                    (f > 0).then(|| (i, e.min(f)))
                })
                .collect();
        }
        Monomial::from_parts(HalfExp::from_halves(min_q), min_l, x)
    }
}

fn rational_pow(v: &BigRational, exp: i64, var: &str) -> Result<BigRational> {
    if exp >= 0 {
        Ok(Pow::pow(v, exp as u64))
    } else if v.is_zero() {
        Err(Error::NegativeExponentAtZero {
            variable: var.to_string(),
            exponent: exp,
        })
    } else {
        Ok(Pow::pow(v.recip(), exp.unsigned_abs()))
    }
}

/// Values for `λ` and the `x_i`; unset variables are left symbolic.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    lambda: Option<BigRational>,
    x: BTreeMap<u32, BigRational>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lambda(mut self, v: BigRational) -> Self {
        self.lambda = Some(v);
        self
    }

    pub fn x(mut self, index: u32, v: BigRational) -> Self {
        self.x.insert(index, v);
        self
    }

    /// Sets `x_1 = … = x_n = v`.
    pub fn all_x(mut self, n: u32, v: BigRational) -> Self {
        for i in 1..=n {
            self.x.insert(i, v.clone());
        }
        self
    }

    fn x_value(&self, index: u32) -> Option<&BigRational> {
        self.x.get(&index)
    }
}

/// `x_1 = … = x_n = 1, λ = -1`, the specialization that turns tournament
/// sums into signed permutation sums.
pub fn sign_specialization(n: u32) -> Substitution {
    Substitution::new()
        .lambda(-BigRational::one())
        .all_x(n, BigRational::one())
}

fn mul_polys(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero();
    }
    let mut acc: HashMap<Monomial, BigRational> =
        HashMap::with_capacity(a.terms.len() * b.terms.len() / 2 + 1);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let c = ca * cb;
            match acc.entry(ma.mul(mb)) {
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::hash_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += c;
                }
            }
        }
    }
    Polynomial {
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl MulAssign<&Polynomial> for Polynomial {
    fn mul_assign(&mut self, rhs: &Polynomial) {
        *self = mul_polys(self, rhs);
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        mul_polys(self, rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                $tr::$f(&self, &rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                $tr::$f(&self, rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                $tr::$f(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::from_int(c)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

/// Whether every coefficient is an integer.
pub fn has_integer_coeffs(p: &Polynomial) -> bool {
    p.terms().all(|(_, c)| c.is_integer())
}

/// Whether the leading coefficient is `±1`.
pub fn is_unit_leading(p: &Polynomial) -> bool {
    p.leading_term().is_some_and(|(_, c)| c.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Polynomial {
        Polynomial::q_pow(1)
    }

    fn one() -> Polynomial {
        Polynomial::one()
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &(one() - q()) + &q();
        assert_eq!(p, one());
        assert_eq!(p.len(), 1);
        assert_eq!(&Polynomial::zero() + &q(), q());
    }

    #[test]
    fn square_matches_hand_expansion() {
        let a = &one() - &q();
        let hand = Polynomial::from_q_coeffs(&[1, -2, 1]);
        assert!((&a * &a - hand).is_zero());
    }

    #[test]
    fn half_powers_multiply() {
        let h = Polynomial::q_halves(1);
        assert_eq!(&h * &h, q());
        assert_eq!(&h * &one(), h);
    }

    #[test]
    fn vandermonde_factor_product() {
        let lq = Polynomial::lambda() * q();
        let a = Polynomial::x(1) + &lq * Polynomial::x(2);
        let b = Polynomial::x(2) + &lq * Polynomial::x(3);
        let expected = Polynomial::x(1) * Polynomial::x(2)
            + &lq * Polynomial::x(1) * Polynomial::x(3)
            + &lq * Polynomial::x(2) * Polynomial::x(2)
            + &lq * &lq * Polynomial::x(2) * Polynomial::x(3);
        assert_eq!(a * b, expected);
    }

    #[test]
    fn exact_division() {
        let a = Polynomial::from_q_coeffs(&[1, 0, -1]);
        let b = Polynomial::from_q_coeffs(&[1, -1]);
        assert_eq!(a.div_exact(&b).unwrap(), Polynomial::from_q_coeffs(&[1, 1]));

        let err = b
            .div_exact(&Polynomial::from_q_coeffs(&[1, 1]))
            .unwrap_err();
        assert!(matches!(err, Error::InexactDivision { .. }));
        assert_eq!(a.div_exact(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_handles_laurent_exponents() {
        let a = Polynomial::q_halves(-3) + Polynomial::lambda() * Polynomial::q_halves(5);
        let b = Polynomial::q_halves(-1) - Polynomial::lambda().pow(2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
    }

    #[test]
    fn squared_b3_over_b2() {
        let b2 = Polynomial::from_q_coeffs(&[1, -1]);
        let b3 = Polynomial::from_q_coeffs(&[1, -2, 0, 2, -1]);
        let expected = b2.pow(3) * Polynomial::from_q_coeffs(&[1, 0, -1]).pow(2);
        assert_eq!(b3.pow(2).div_exact(&b2).unwrap(), expected);
    }

    #[test]
    fn eval_substitutes_lambda_and_x() {
        let p = Polynomial::x(1) * Polynomial::lambda() * q() + Polynomial::x(2);
        let v = p.eval(&sign_specialization(2)).unwrap();
        assert_eq!(v, one() - q());

        let partial = p.eval(&Substitution::new().x(1, r(2))).unwrap();
        assert_eq!(
            partial,
            Polynomial::from_int(2) * Polynomial::lambda() * q() + Polynomial::x(2)
        );

        let untouched = Polynomial::from_q_coeffs(&[3, 0, 1]);
        assert_eq!(untouched.eval(&sign_specialization(3)).unwrap(), untouched);
    }

    #[test]
    fn eval_rejects_zero_with_negative_exponent() {
        let p = Polynomial::monomial(Monomial::lambda_pow(-2));
        let err = p.eval(&Substitution::new().lambda(r(0))).unwrap_err();
        assert!(matches!(
            err,
            Error::NegativeExponentAtZero { exponent: -2, .. }
        ));
        assert_eq!(
            p.eval(&Substitution::new().lambda(r(2))).unwrap(),
            Polynomial::constant(BigRational::new(1.into(), 4.into()))
        );
    }

    #[test]
    fn q_coeff_extraction() {
        let p = Polynomial::from_q_coeffs(&[1, -2, 0, 2, -1]);
        let c: Vec<i64> = p
            .q_coeffs()
            .unwrap()
            .into_iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(c, vec![1, -2, 0, 2, -1]);
        assert!(Polynomial::q_halves(1).q_coeffs().is_none());
    }
}
