use num_rational::BigRational;

use super::{Deformation, PolyMatrix};
use crate::error::{check_bound, Result};
use crate::perm::{enumerate_sn_with_limit, Permutation};
use crate::poly::{Monomial, Polynomial};

/// Largest size for the `n!`-term Leibniz sums.
pub const MAX_LEIBNIZ_N: usize = 8;
pub const MAX_INVARIANCE_N: usize = 7;
/// Largest size for the `2^n`-subset permanent.
pub const MAX_PERMANENT_N: usize = 10;

/// `Σ_w (-1)^{ℓ(w)} weight(w) ∏ a_{i,w(i)}`.
fn leibniz(
    a: &PolyMatrix,
    max: usize,
    operation: &'static str,
    weight: impl Fn(&Permutation) -> Monomial,
) -> Result<Polynomial> {
    check_bound(operation, a.n(), max)?;
    let mut sum = Polynomial::zero();
    'perms: for w in enumerate_sn_with_limit(a.n(), max)? {
        let mut term = Polynomial::monomial(weight(&w));
        for i in 1..=a.n() {
            let e = a.get(i, w.apply(i));
            if e.is_zero() {
                continue 'perms;
            }
            term = &term * e;
        }
        if w.length() % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    Ok(sum)
}

/// Classical determinant by the Leibniz sum.
pub fn det_classic(a: &PolyMatrix) -> Result<Polynomial> {
    det_classic_with_limit(a, MAX_LEIBNIZ_N)
}

pub fn det_classic_with_limit(a: &PolyMatrix, max: usize) -> Result<Polynomial> {
    leibniz(a, max, "det_classic", |_| Monomial::one())
}

/// `bdet(A)` straight from its defining signed, `q^{β}`-weighted sum.
pub fn bdet_definition(a: &PolyMatrix) -> Result<Polynomial> {
    bdet_definition_with_limit(a, MAX_LEIBNIZ_N)
}

pub fn bdet_definition_with_limit(a: &PolyMatrix, max: usize) -> Result<Polynomial> {
    leibniz(a, max, "bdet_definition", |w| {
        Monomial::q_pow(w.beta() as i64)
    })
}

/// `det(bA)` with `b_ij = q^{(i-j)^2/2}`.
pub fn bdet_via_deformation(a: &PolyMatrix) -> Result<Polynomial> {
    bdet_via_deformation_with_limit(a, MAX_LEIBNIZ_N)
}

pub fn bdet_via_deformation_with_limit(a: &PolyMatrix, max: usize) -> Result<Polynomial> {
    check_bound("bdet_via_deformation", a.n(), max)?;
    det_classic_with_limit(&a.deform(Deformation::B), max)
}

/// The determinants of the `b`, `b′` and `b″` deformations of `A`.
pub fn little_invariance_check(a: &PolyMatrix) -> Result<[Polynomial; 3]> {
    check_bound("little_invariance_check", a.n(), MAX_INVARIANCE_N)?;
    Ok([
        det_classic(&a.deform(Deformation::B))?,
        det_classic(&a.deform(Deformation::BPrime))?,
        det_classic(&a.deform(Deformation::BDoublePrime))?,
    ])
}

/// Determinant by first-row cofactor expansion, memoized over column
/// subsets: `O(2^n n)` polynomial operations, no division.
pub fn det_laplace(a: &PolyMatrix) -> Polynomial {
    let n = a.n();
    if n == 0 {
        return Polynomial::one();
    }
    assert!(
        n < usize::BITS as usize,
        "matrix too large for subset expansion"
    );
    // minors[mask] = det of the bottom |mask| rows restricted to columns in mask.
    let mut minors = vec![Polynomial::zero(); 1 << n];
    minors[0] = Polynomial::one();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 1usize..1 << n {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for (size, masks) in by_size.iter().enumerate().skip(1) {
        let row = n - size + 1;
        for &mask in masks {
            let mut acc = Polynomial::zero();
            let mut pos = 0;
            for col in 0..n {
                if mask >> col & 1 == 0 {
                    continue;
                }
                let e = a.get(row, col + 1);
                let rest = &minors[mask & !(1 << col)];
                if !e.is_zero() && !rest.is_zero() {
                    let t = e * rest;
                    if pos % 2 == 0 {
                        acc += &t;
                    } else {
                        acc -= &t;
                    }
                }
                pos += 1;
            }
            minors[mask] = acc;
        }
    }
    std::mem::take(&mut minors[(1 << n) - 1])
}

/// Permanent by Ryser's inclusion–exclusion over column subsets, visited in
/// Gray-code order so each step updates the row sums by one column.
pub fn permanent_q(a: &PolyMatrix) -> Result<Polynomial> {
    permanent_q_with_limit(a, MAX_PERMANENT_N)
}

pub fn permanent_q_with_limit(a: &PolyMatrix, max: usize) -> Result<Polynomial> {
    let n = a.n();
    check_bound("permanent_q", n, max)?;
    if n == 0 {
        return Ok(Polynomial::one());
    }
    if let Some(p) = q_entries(a).and_then(|e| permanent_dense(n, &e)) {
        return Ok(p);
    }
    let mut row_sums = vec![Polynomial::zero(); n];
    let mut total = Polynomial::zero();
    let mut gray = 0usize;
    for k in 1usize..1 << n {
        let col = k.trailing_zeros() as usize;
        let next = k ^ (k >> 1);
        let adding = next > gray;
        gray = next;
        for (i, s) in row_sums.iter_mut().enumerate() {
            let e = a.get(i + 1, col + 1);
            if adding {
                *s += e;
            } else {
                *s -= e;
            }
        }
        if row_sums.iter().any(Polynomial::is_zero) {
            continue;
        }
        let mut prod = row_sums[0].clone();
        for s in &row_sums[1..] {
            prod = &prod * s;
        }
        // (-1)^{n - |S|}
        if (n - gray.count_ones() as usize) % 2 == 1 {
            total -= &prod;
        } else {
            total += &prod;
        }
    }
    Ok(total)
}

/// Entries as `(half-exponent, coefficient)` lists when every entry is an
/// integer combination of nonnegative powers of `q^{1/2}`.
fn q_entries(a: &PolyMatrix) -> Option<Vec<Vec<(usize, i128)>>> {
    let n = a.n();
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let mut entry = Vec::new();
            for (m, c) in a.get(i, j).terms() {
                if m.lambda() != 0
                    || !m.x_exps().is_empty()
                    || m.q().halves() < 0
                    || !c.is_integer()
                {
                    return None;
                }
                let c = i128::try_from(c.to_integer()).ok()?;
                entry.push((usize::try_from(m.q().halves()).ok()?, c));
            }
            out.push(entry);
        }
    }
    Some(out)
}

/// Ryser over dense machine-integer coefficient vectors in `q^{1/2}`.
/// Returns `None` on overflow so the caller can fall back to exact rationals.
fn permanent_dense(n: usize, entries: &[Vec<(usize, i128)>]) -> Option<Polynomial> {
    let width = entries.iter().flatten().map(|&(e, _)| e).max().unwrap_or(0) + 1;
    let mut row_sums = vec![vec![0i128; width]; n];
    let mut total = vec![0i128; n * (width - 1) + 1];
    let mut gray = 0usize;
    for k in 1usize..1 << n {
        let col = k.trailing_zeros() as usize;
        let next = k ^ (k >> 1);
        let adding = next > gray;
        gray = next;
        for (i, s) in row_sums.iter_mut().enumerate() {
            for &(e, c) in &entries[i * n + col] {
                s[e] = if adding {
                    s[e].checked_add(c)?
                } else {
                    s[e].checked_sub(c)?
                };
            }
        }
        let mut prod = vec![1i128];
        for s in &row_sums {
            let support: Vec<(usize, i128)> = s
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e, c))
                .collect();
            if support.is_empty() {
                prod.clear();
                break;
            }
            let mut next = vec![0i128; prod.len() + width - 1];
            for (d, &p) in prod.iter().enumerate().filter(|(_, &p)| p != 0) {
                for &(e, c) in &support {
                    next[d + e] = next[d + e].checked_add(p.checked_mul(c)?)?;
                }
            }
            prod = next;
        }
        let negative = (n - gray.count_ones() as usize) % 2 == 1;
        for (d, &p) in prod.iter().enumerate() {
            total[d] = if negative {
                total[d].checked_sub(p)?
            } else {
                total[d].checked_add(p)?
            };
        }
    }
    let mut out = Polynomial::zero();
    for (d, c) in total.into_iter().enumerate().filter(|(_, c)| *c != 0) {
        out.add_term(
            Monomial::q_halves(d as i64),
            BigRational::from_integer(c.into()),
        );
    }
    Some(out)
}

/// `Σ_w q^{β(w)}` for small `n`, summed directly over `S_n`.
#[cfg(test)]
pub(crate) fn unsigned_beta_sum(n: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    for w in enumerate_sn_with_limit(n, MAX_LEIBNIZ_N).unwrap() {
        p.add_term(Monomial::q_pow(w.beta() as i64), num_traits::One::one());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bdet::{random_monomial_matrix, seeded_rng};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn symbolic(n: usize) -> PolyMatrix {
        // distinct variables x_{(i-1)n + j}
        PolyMatrix::from_fn(n, |i, j| Polynomial::x(((i - 1) * n + j) as u32))
    }

    #[test]
    fn classic_small_cases() {
        assert_eq!(
            det_classic(&PolyMatrix::identity(4)).unwrap(),
            Polynomial::one()
        );
        assert_eq!(det_classic(&symbolic(2)).unwrap(), p("x1*x4 - x2*x3"));
        assert_eq!(
            det_classic(&PolyMatrix::ones(0)).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn deformed_ones_3x3() {
        let b = PolyMatrix::ones(3).deform(Deformation::B);
        let b3 = p("1 - 2*q + 2*q^3 - q^4");
        assert_eq!(det_classic(&b).unwrap(), b3);
        let printed_reading = p("1 - q").pow(3);
        assert_ne!(det_classic(&b).unwrap(), printed_reading);
        assert_eq!(p("1-q").pow(2) * p("1 - q^2"), b3);
    }

    #[test]
    fn bdet_small_definitions() {
        let a1 = symbolic(1);
        assert_eq!(bdet_definition(&a1).unwrap(), p("x1"));
        assert_eq!(bdet_definition(&symbolic(2)).unwrap(), p("x1*x4 - q*x2*x3"));
        let three =
            p("x1*x5*x9 - q*x2*x4*x9 - q*x1*x6*x8 + q^3*x2*x6*x7 + q^3*x3*x4*x8 - q^4*x3*x5*x7");
        assert_eq!(bdet_definition(&symbolic(3)).unwrap(), three);
        assert_eq!(bdet_via_deformation(&symbolic(3)).unwrap(), three);
        assert_eq!(
            bdet_definition(&PolyMatrix::ones(0)).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn laplace_matches_leibniz() {
        let mut rng = seeded_rng(7);
        for n in 0..=5 {
            let a = random_monomial_matrix(n, &mut rng);
            assert_eq!(det_laplace(&a), det_classic(&a).unwrap());
        }
        assert_eq!(
            det_laplace(&symbolic(3)),
            det_classic(&symbolic(3)).unwrap()
        );
    }

    #[test]
    fn double_prime_is_transposed_prime() {
        let mut rng = seeded_rng(11);
        let a = random_monomial_matrix(4, &mut rng);
        assert_eq!(
            a.transpose().deform(Deformation::BPrime).transpose(),
            a.deform(Deformation::BDoublePrime)
        );
    }

    #[test]
    fn invariance_on_ones_and_identity() {
        let b3 = p("1 - 2*q + 2*q^3 - q^4");
        for d in little_invariance_check(&PolyMatrix::ones(3)).unwrap() {
            assert_eq!(d, b3);
        }
        for d in little_invariance_check(&PolyMatrix::identity(3)).unwrap() {
            assert!(d.is_one());
        }
    }

    #[test]
    fn permanent_reading_lists() {
        let perm = |n| permanent_q(&PolyMatrix::ones(n).deform(Deformation::B)).unwrap();
        assert_eq!(perm(2), p("1 + q"));
        assert_eq!(perm(3), p("1 + 2*q + 2*q^3 + q^4"));
        assert_eq!(
            perm(4),
            p("1 + 3*q + q^2 + 4*q^3 + 2*q^4 + 2*q^5 + 2*q^6 + 4*q^7 + q^8 + 3*q^9 + q^10")
        );
        for n in 0..=6 {
            assert_eq!(perm(n), unsigned_beta_sum(n), "n = {n}");
        }
        assert_eq!(permanent_q(&symbolic(2)).unwrap(), p("x1*x4 + x2*x3"));
    }

    #[test]
    fn dense_and_generic_permanents_agree() {
        let mut rng = seeded_rng(13);
        for n in 1..=6 {
            let a = random_monomial_matrix(n, &mut rng);
            let dense = permanent_dense(n, &q_entries(&a).unwrap()).unwrap();
            // an x factor in every entry forces the generic route
            let generic = permanent_q(&a.map(|e| e * &Polynomial::x(1))).unwrap();
            let x1n = Polynomial::x(1).pow(n as u32);
            assert_eq!(generic, &dense * &x1n);
        }
    }

    #[test]
    fn bounds_enforced() {
        assert!(det_classic(&PolyMatrix::ones(9)).is_err());
        assert!(permanent_q(&PolyMatrix::ones(11)).is_err());
        assert!(little_invariance_check(&PolyMatrix::ones(8)).is_err());
    }
}
