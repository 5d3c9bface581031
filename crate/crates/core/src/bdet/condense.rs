use super::det::{bdet_definition, det_classic, det_laplace};
use super::{Deformation, PolyMatrix};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CondenseStats {
    /// Contiguous minors computed by the exact-division step.
    pub condensed: usize,
    /// Minors whose interior vanished and were expanded directly.
    pub fallbacks: usize,
}

/// `bdet(A)` by weighted condensation:
///
/// `bdet(M) bdet(M_{1k}^{1k}) = bdet(M_1^1) bdet(M_k^k) - q^{k-1} bdet(M_k^1) bdet(M_1^k)`
///
/// evaluated over every contiguous `k × k` block, smallest first. A block
/// whose interior minor is the zero polynomial is instead evaluated as the
/// determinant of its own `b`-deformation by cofactor expansion.
pub fn bdet_condense(a: &PolyMatrix) -> Result<Polynomial> {
    bdet_condense_with_stats(a).map(|(p, _)| p)
}

pub fn bdet_condense_with_stats(a: &PolyMatrix) -> Result<(Polynomial, CondenseStats)> {
    let n = a.n();
    let mut stats = CondenseStats::default();
    if n == 0 {
        return Ok((Polynomial::one(), stats));
    }
    // table[s][r * (n - s + 1) + c]: bdet of the s×s block at (r+1, c+1).
    let width = |s: usize| n - s + 1;
    let mut smaller: Vec<Polynomial> = vec![Polynomial::one(); (n + 1) * (n + 1)];
    let mut current: Vec<Polynomial> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| a.get(i, j).clone())
        .collect();

    for size in 2..=n {
        let (w_prev, w_prev2, w_new) = (width(size - 1), width(size - 2), width(size));
        let weight = Polynomial::monomial(Monomial::q_pow(size as i64 - 1));
        let mut next = Vec::with_capacity(w_new * w_new);
        for r in 0..w_new {
            for c in 0..w_new {
                let interior = &smaller[(r + 1) * w_prev2 + (c + 1)];
                let value = if interior.is_zero() {
                    stats.fallbacks += 1;
                    let block = a.block(r + 1, c + 1, size);
                    det_laplace(&block.deform(Deformation::B))
                } else {
                    stats.condensed += 1;
                    let top_left = &current[r * w_prev + c];
                    let bottom_right = &current[(r + 1) * w_prev + (c + 1)];
                    let top_right = &current[r * w_prev + (c + 1)];
                    let bottom_left = &current[(r + 1) * w_prev + c];
                    let numer = top_left * bottom_right - &weight * &(top_right * bottom_left);
                    numer.div_exact(interior)?
                };
                next.push(value);
            }
        }
        smaller = std::mem::replace(&mut current, next);
    }
    Ok((current.pop().expect("1x1 table at the end"), stats))
}

/// Outcome of checking weighted condensation on one matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationReport {
    /// The identity itself, with all five bdets from the definition.
    pub identity: bool,
    /// With `C = bA` and `|·|` the classical determinant:
    /// `|C_{1n}^{1n}| = bdet(A_{1n}^{1n})`, `|C_1^1| = bdet(A_1^1)`,
    /// `|C_n^n| = bdet(A_n^n)`, `|C_n^1| = q^{(n-1)/2} bdet(A_n^1)`,
    /// `|C_1^n| = q^{(n-1)/2} bdet(A_1^n)`.
    pub auxiliary: [bool; 5],
}

impl CondensationReport {
    pub fn holds(&self) -> bool {
        self.identity && self.auxiliary.iter().all(|&b| b)
    }
}

pub fn condensation_identity_check(a: &PolyMatrix) -> Result<CondensationReport> {
    let n = a.n();
    if n < 2 {
        return Err(Error::MatrixFormat(format!(
            "condensation needs n >= 2, got {n}"
        )));
    }
    let minors: [(&[usize], &[usize]); 5] = [
        (&[1, n], &[1, n]),
        (&[1], &[1]),
        (&[n], &[n]),
        (&[n], &[1]),
        (&[1], &[n]),
    ];
    let bdets = minors
        .iter()
        .map(|(r, c)| bdet_definition(&a.minor(r, c)))
        .collect::<Result<Vec<_>>>()?;
    let [inner, tl, br, nr, rn] = <[Polynomial; 5]>::try_from(bdets).expect("five minors");

    let whole = bdet_definition(a)?;
    let shift = Polynomial::q_pow(n as i64 - 1);
    let identity = &whole * &inner == &tl * &br - &shift * &(&nr * &rn);

    let c = a.deform(Deformation::B);
    let half = Polynomial::q_halves(n as i64 - 1);
    let expected = [
        inner.clone(),
        tl.clone(),
        br.clone(),
        &half * &nr,
        &half * &rn,
    ];
    let mut auxiliary = [false; 5];
    for (k, ((r, cols), want)) in minors.iter().zip(&expected).enumerate() {
        auxiliary[k] = det_classic(&c.minor(r, cols))? == *want;
    }
    Ok(CondensationReport {
        identity,
        auxiliary,
    })
}
