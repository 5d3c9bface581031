use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Exponent of `q` counted in halves: `q^{3/2}` has `halves() == 3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfExp(i64);

impl HalfExp {
    pub const ZERO: HalfExp = HalfExp(0);

    pub const fn from_halves(halves: i64) -> Self {
        HalfExp(halves)
    }

    pub const fn from_int(exp: i64) -> Self {
        HalfExp(2 * exp)
    }

    pub const fn halves(self) -> i64 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer exponent, if there is one.
    pub const fn as_int(self) -> Option<i64> {
        if self.is_integral() {
            Some(self.0 / 2)
        } else {
            None
        }
    }
}

impl Add for HalfExp {
    type Output = HalfExp;
    fn add(self, rhs: HalfExp) -> HalfExp {
        HalfExp(self.0 + rhs.0)
    }
}

impl Sub for HalfExp {
    type Output = HalfExp;
    fn sub(self, rhs: HalfExp) -> HalfExp {
        HalfExp(self.0 - rhs.0)
    }
}

impl Neg for HalfExp {
    type Output = HalfExp;
    fn neg(self) -> HalfExp {
        HalfExp(-self.0)
    }
}

impl fmt::Display for HalfExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_int() {
            Some(e) => write!(f, "{e}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// A power product `q^a λ^b x_1^{c_1} ⋯ x_n^{c_n}`.
///
/// `q` and `λ` exponents may be negative; `x` exponents are positive and
/// stored sparsely as `(index, exponent)` pairs sorted by index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    q: HalfExp,
    lambda: i64,
    x: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn q_halves(halves: i64) -> Self {
        Monomial {
            q: HalfExp::from_halves(halves),
            ..Self::default()
        }
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::q_halves(2 * exp)
    }

    pub fn lambda_pow(exp: i64) -> Self {
        Monomial {
            lambda: exp,
            ..Self::default()
        }
    }

    /// `x_index^exp`; `index` is 1-based.
    pub fn x_pow(index: u32, exp: u32) -> Self {
        assert!(index >= 1, "x variables are 1-based");
        let x = if exp == 0 {
            Vec::new()
        } else {
            vec![(index, exp)]
        };
        Monomial {
            x,
            ..Self::default()
        }
    }

    pub(crate) fn from_parts(q: HalfExp, lambda: i64, mut x: Vec<(u32, u32)>) -> Self {
        x.retain(|&(_, e)| e != 0);
        x.sort_unstable_by_key(|&(i, _)| i);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(x.len());
        for (i, e) in x {
            match merged.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => merged.push((i, e)),
            }
        }
        Monomial {
            q,
            lambda,
            x: merged,
        }
    }

    pub fn q(&self) -> HalfExp {
        self.q
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    pub fn x_exp(&self, index: u32) -> u32 {
        self.x
            .iter()
            .find(|&&(i, _)| i == index)
            .map_or(0, |&(_, e)| e)
    }

    pub fn x_exps(&self) -> &[(u32, u32)] {
        &self.x
    }

    pub fn is_one(&self) -> bool {
        self.q == HalfExp::ZERO && self.lambda == 0 && self.x.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut x = Vec::with_capacity(self.x.len() + other.x.len());
        let (mut a, mut b) = (self.x.iter().peekable(), other.x.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, e)), Some(&&(j, f))) => match i.cmp(&j) {
                    Ordering::Less => {
                        x.push((i, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        x.push((j, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        x.push((i, e + f));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    x.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    x.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            q: self.q + other.q,
            lambda: self.lambda + other.lambda,
            x,
        }
    }

    /// `self / other`, or `None` when some `x` exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut x = self.x.clone();
        for &(j, f) in &other.x {
            let slot = x.iter_mut().find(|(i, _)| *i == j)?;
            if slot.1 < f {
                return None;
            }
            slot.1 -= f;
        }
        x.retain(|&(_, e)| e != 0);
        Some(Monomial {
            q: self.q - other.q,
            lambda: self.lambda - other.lambda,
            x,
        })
    }

    pub fn pow(&self, exp: u32) -> Monomial {
        let e = i64::from(exp);
        let x = if exp == 0 {
            Vec::new()
        } else {
            self.x.iter().map(|&(i, f)| (i, f * exp)).collect()
        };
        Monomial {
            q: HalfExp::from_halves(self.q.halves() * e),
            lambda: self.lambda * e,
            x,
        }
    }

    pub(crate) fn without_q(&self) -> Monomial {
        Monomial {
            q: HalfExp::ZERO,
            ..self.clone()
        }
    }

    pub(crate) fn with_q(&self, q: HalfExp) -> Monomial {
        Monomial { q, ..self.clone() }
    }

    pub(crate) fn with_lambda(&self, lambda: i64) -> Monomial {
        Monomial {
            lambda,
            ..self.clone()
        }
    }

    pub(crate) fn with_x(&self, x: Vec<(u32, u32)>) -> Monomial {
        Monomial { x, ..self.clone() }
    }
}

fn cmp_x(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    // Lexicographic on the dense exponent vector (x_1, x_2, ...), missing
    // entries counting as zero. Compatible with multiplication.
    let (mut ia, mut ib) = (a.iter(), b.iter());
    let (mut pa, mut pb) = (ia.next(), ib.next());
    loop {
        match (pa, pb) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(i, e)), Some(&(j, f))) => {
                if i < j {
                    return Ordering::Greater;
                }
                if j < i {
                    return Ordering::Less;
                }
                match e.cmp(&f) {
                    Ordering::Equal => {
                        pa = ia.next();
                        pb = ib.next();
                    }
                    other => return other,
                }
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q
            .cmp(&other.q)
            .then(self.lambda.cmp(&other.lambda))
            .then_with(|| cmp_x(&self.x, &other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
