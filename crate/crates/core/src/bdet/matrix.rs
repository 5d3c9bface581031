use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Square matrix of polynomials, row-major, indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Polynomial>,
}

/// Entrywise monomial deformations `a_ij -> f_ij a_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deformation {
    /// `q^{(i-j)^2/2}`
    B,
    /// `q^{i(i-j)}`
    BPrime,
    /// `q^{j(j-i)}`
    BDoublePrime,
}

impl Deformation {
    pub const ALL: [Deformation; 3] = [
        Deformation::B,
        Deformation::BPrime,
        Deformation::BDoublePrime,
    ];

    pub fn factor(self, i: usize, j: usize) -> Monomial {
        let (i, j) = (i as i64, j as i64);
        match self {
            Deformation::B => Monomial::q_halves((i - j) * (i - j)),
            Deformation::BPrime => Monomial::q_pow(i * (i - j)),
            Deformation::BDoublePrime => Monomial::q_pow(j * (j - i)),
        }
    }
}

impl PolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::MatrixFormat(format!(
                "row of length {} in a {n}x{n} matrix",
                bad.len()
            )));
        }
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_, _| Polynomial::one())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// The `size × size` block whose top-left entry is `(row, col)`.
    pub fn block(&self, row: usize, col: usize, size: usize) -> PolyMatrix {
        assert!(
            row + size <= self.n + 1 && col + size <= self.n + 1,
            "block out of range"
        );
        Self::from_fn(size, |i, j| self.get(row + i - 1, col + j - 1).clone())
    }

    /// Deletes the listed rows and columns (1-based), like `A_{rows}^{cols}`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let keep_r: Vec<usize> = (1..=self.n).filter(|i| !rows.contains(i)).collect();
        let keep_c: Vec<usize> = (1..=self.n).filter(|j| !cols.contains(j)).collect();
        assert_eq!(keep_r.len(), keep_c.len(), "minor must stay square");
        Self::from_fn(keep_r.len(), |i, j| {
            self.get(keep_r[i - 1], keep_c[j - 1]).clone()
        })
    }

    pub fn deform(&self, fam: Deformation) -> PolyMatrix {
        Self::from_fn(self.n, |i, j| {
            self.get(i, j).mul_monomial(&fam.factor(i, j))
        })
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|i| (1..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl fmt::Display for PolyMatrix {
    /// `n=<n>` then one line per row, entries separated by `;`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join("; "))?;
        }
        Ok(())
    }
}

impl FromStr for PolyMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MatrixFormat("empty input".into()))?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::MatrixFormat(format!("expected 'n=<int>', got {header:?}")))?;
        let mut rows = Vec::with_capacity(n);
        for (r, line) in lines.enumerate() {
            let row = line
                .split(';')
                .map(|cell| {
                    cell.parse::<Polynomial>()
                        .map_err(|e| Error::MatrixFormat(format!("row {}: {e}", r + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::MatrixFormat(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        PolyMatrix::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_deformation_of_ones() {
        let b = PolyMatrix::ones(4).deform(Deformation::B);
        let expect = ["1", "q^(1/2)", "q^2", "q^(9/2)"];
        for (j, e) in expect.iter().enumerate() {
            assert_eq!(b.get(1, j + 1).to_string(), *e);
            assert_eq!(b.get(j + 1, 1).to_string(), *e);
        }
        assert_eq!(b.get(2, 4).to_string(), "q^2");
        assert!(b.is_symmetric());
    }

    #[test]
    fn b_prime_keeps_diagonal() {
        let id = PolyMatrix::identity(5);
        assert_eq!(id.deform(Deformation::BPrime), id);
        assert_eq!(id.deform(Deformation::BDoublePrime), id);
    }

    #[test]
    fn file_format_round_trip() {
        let text = "n=2\n1 - q; q^(1/2)\n0 ; 3/2*l*x1\n";
        let m: PolyMatrix = text.parse().unwrap();
        assert_eq!(m.get(2, 2).to_string(), "3/2*l*x1");
        assert_eq!(m.to_string().parse::<PolyMatrix>().unwrap(), m);
        assert!("n=2\n1;2\n".parse::<PolyMatrix>().is_err());
        assert!("n=2\n1;2\n3\n".parse::<PolyMatrix>().is_err());
        assert!("m=2".parse::<PolyMatrix>().is_err());
        assert!("n=1\nq^(1/3)".parse::<PolyMatrix>().is_err());
    }

    #[test]
    fn minors_and_blocks() {
        let m = PolyMatrix::from_fn(4, |i, j| Polynomial::from_int((10 * i + j) as i64));
        let inner = m.minor(&[1, 4], &[1, 4]);
        assert_eq!(inner, m.block(2, 2, 2));
        assert_eq!(m.minor(&[4], &[1]), m.block(1, 2, 3));
        assert_eq!(m.minor(&[], &[]), m);
    }
}
