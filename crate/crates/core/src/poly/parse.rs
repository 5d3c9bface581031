//! Text form of polynomials.
//!
//! ```text
//! poly    := [sign] term { sign term }      sign := '+' | '-'
//! term    := coef [ '*' factors ] | factors
//! coef    := integer [ '/' positive-integer ]
//! factors := factor { '*' factor }
//! factor  := 'q' [pow] | 'l' [pow] | 'x' index [pow]
//! pow     := '^' ( integer | '(' integer [ '/' '2' ] ')' )
//! ```
//!
//! Whitespace is ignored and `l` stands for `λ`. Printing emits the same
//! grammar with terms in ascending monomial order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{HalfExp, Monomial, Polynomial};
use crate::error::{Error, Result};

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Cursor {
    fn new(s: &str) -> Self {
        Cursor {
            chars: s
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            end: s.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<i64> {
        let at = self.offset();
        i64::try_from(self.digits()?).map_err(|_| Error::Parse {
            position: at,
            message: "number too large".into(),
        })
    }

    fn signed_small(&mut self) -> Result<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.small()?;
        Ok(if neg { -v } else { v })
    }

    /// Exponent in halves.
    fn pow(&mut self) -> Result<i64> {
        if !self.eat('^') {
            return Ok(2);
        }
        if self.eat('(') {
            let v = self.signed_small()?;
            let halves = if self.eat('/') {
                let at = self.offset();
                if self.small()? != 2 {
                    return Err(Error::Parse {
                        position: at,
                        message: "only halves are allowed as fractional exponents".into(),
                    });
                }
                v
            } else {
                2 * v
            };
            self.expect(')')?;
            Ok(halves)
        } else {
            Ok(2 * self.signed_small()?)
        }
    }
}

fn parse_factor(cur: &mut Cursor, mono: &mut Monomial) -> Result<()> {
    let at = cur.offset();
    let integral = |halves: i64| -> Result<i64> {
        if halves % 2 == 0 {
            Ok(halves / 2)
        } else {
            Err(Error::Parse {
                position: at,
                message: "half exponents are only allowed on q".into(),
            })
        }
    };
    match cur.peek() {
        Some('q') => {
            cur.pos += 1;
            let h = cur.pow()?;
            *mono = mono.mul(&Monomial::q_halves(h));
        }
        Some('l') => {
            cur.pos += 1;
            let e = integral(cur.pow()?)?;
            *mono = mono.mul(&Monomial::lambda_pow(e));
        }
        Some('x') => {
            cur.pos += 1;
            let idx = cur.small()?;
            if idx < 1 || idx > i64::from(u32::MAX) {
                return Err(Error::Parse {
                    position: at,
                    message: "x index must be a positive integer".into(),
                });
            }
            let e = integral(cur.pow()?)?;
            if e < 0 {
                return Err(Error::Parse {
                    position: at,
                    message: "x exponents must be nonnegative".into(),
                });
            }
            *mono = mono.mul(&Monomial::x_pow(idx as u32, e as u32));
        }
        _ => return Err(cur.error("expected a factor 'q', 'l' or 'x<index>'")),
    }
    Ok(())
}

fn parse_term(cur: &mut Cursor) -> Result<(Monomial, BigRational)> {
    let mut mono = Monomial::one();
    let mut coef = BigRational::one();
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let num = cur.digits()?;
        let den = if cur.eat('/') {
            let at = cur.offset();
            let d = cur.digits()?;
            if d.is_zero() {
                return Err(Error::Parse {
                    position: at,
                    message: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::one()
        };
        coef = BigRational::new(num, den);
        if !cur.eat('*') {
            return Ok((mono, coef));
        }
    }
    parse_factor(cur, &mut mono)?;
    while cur.eat('*') {
        parse_factor(cur, &mut mono)?;
    }
    Ok((mono, coef))
}

pub(crate) fn parse(s: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(s);
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let mut poly = Polynomial::zero();
    let mut first = true;
    while cur.peek().is_some() {
        let neg = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(cur.error("expected '+' or '-'"));
        };
        let (m, c) = parse_term(&mut cur)?;
        poly.add_term(m, if neg { -c } else { c });
        first = false;
    }
    Ok(poly)
}

fn write_pow(f: &mut fmt::Formatter<'_>, var: &str, exp: HalfExp) -> fmt::Result {
    match exp.as_int() {
        Some(1) => write!(f, "{var}"),
        Some(e) if e >= 0 => write!(f, "{var}^{e}"),
        Some(e) => write!(f, "{var}^({e})"),
        None => write!(f, "{var}^({}/2)", exp.halves()),
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut sep = "";
    if m.q() != HalfExp::ZERO {
        write_pow(f, "q", m.q())?;
        sep = "*";
    }
    if m.lambda() != 0 {
        f.write_str(sep)?;
        write_pow(f, "l", HalfExp::from_int(m.lambda()))?;
        sep = "*";
    }
    for &(i, e) in m.x_exps() {
        f.write_str(sep)?;
        write_pow(f, &format!("x{i}"), HalfExp::from_int(i64::from(e)))?;
        sep = "*";
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parses_b3() {
        assert_eq!(
            p("1 - 2*q + 2*q^3 - q^4"),
            Polynomial::from_q_coeffs(&[1, -2, 0, 2, -1])
        );
        assert_eq!(
            p("1 - 2*q + 2*q^3 - q^4").to_string(),
            "1 - 2*q + 2*q^3 - q^4"
        );
    }

    #[test]
    fn parses_half_and_negative_exponents() {
        let h = p("q^(1/2)");
        let (m, _) = h.terms().next().unwrap();
        assert_eq!(m.q().halves(), 1);

        let t = p("3/2*q^(-1)*l^2*x1");
        let (m, c) = t.terms().next().unwrap();
        assert_eq!(m.q().halves(), -2);
        assert_eq!(m.lambda(), 2);
        assert_eq!(m.x_exp(1), 1);
        assert_eq!(*c, BigRational::new(3.into(), 2.into()));
        assert_eq!(t.to_string(), "3/2*q^(-1)*l^2*x1");
        assert_eq!(p("q^-1"), p("q^(-1)"));
        assert_eq!(p("q^(-3/2)").to_string(), "q^(-3/2)");
    }

    #[test]
    fn whitespace_and_zero() {
        assert_eq!(p(" - q + q "), Polynomial::zero());
        assert_eq!(p("0"), Polynomial::zero());
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("x2 * x2 * l"), p("l*x2^2"));
    }

    #[test]
    fn reports_errors_with_position() {
        match "1 + * q".parse::<Polynomial>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("l^(1/2)".parse::<Polynomial>().is_err());
        assert!("x0".parse::<Polynomial>().is_err());
        assert!("q^(1/3)".parse::<Polynomial>().is_err());
        assert!("2/0".parse::<Polynomial>().is_err());
        assert!("".parse::<Polynomial>().is_err());
        assert!("q q".parse::<Polynomial>().is_err());
    }
}
