//! Permutations of `[n] = {1, …, n}` in one-line notation and the
//! statistics on them: length, inversion set, the bigrassmannian statistic
//! `β`, descents, Bruhat order and Rothe diagrams. All indices are 1-based.

mod bruhat;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{check_bound, Error, Result};

pub use bruhat::{bigrassmannians_below, bruhat_leq, BruhatClosure};

/// Default largest `n` for which `S_n` is enumerated.
pub const MAX_ENUMERATION_N: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

/// The three equivalent formulas for `β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaMethod {
    /// `Σ_{(i,j) ∈ N(w)} (j - i)`
    InversionSum,
    /// `½ Σ_i (i - w(i))²`
    SquareSum,
    /// `Σ_i i (i - w(i))`
    LinearSum,
}

impl BetaMethod {
    pub const ALL: [BetaMethod; 3] = [
        BetaMethod::InversionSum,
        BetaMethod::SquareSum,
        BetaMethod::LinearSum,
    ];
}

/// `N(w) = {(i, j) : i < j, w⁻¹(i) > w⁻¹(j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }
}

impl Permutation {
    /// Builds a permutation from its one-line word (values `1..=n`).
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a bijection on [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `n n-1 … 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Permutation { word: inv }
    }

    /// `(u ∘ w)(i) = u(w(i))`.
    pub fn compose(u: &Permutation, w: &Permutation) -> Result<Permutation> {
        if u.n() != w.n() {
            return Err(Error::SizeMismatch {
                left: u.n(),
                right: w.n(),
            });
        }
        Ok(Permutation {
            word: w.word.iter().map(|&k| u.apply(k)).collect(),
        })
    }

    /// Right multiplication by the transposition `t_ij`: swaps positions `i`, `j`.
    pub fn mul_transposition(&self, i: usize, j: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(i - 1, j - 1);
        Permutation { word }
    }

    pub fn inversions(&self) -> InversionSet {
        let inv = self.inverse();
        let n = self.n();
        let mut pairs = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if inv.apply(i) > inv.apply(j) {
                    pairs.insert((i, j));
                }
            }
        }
        InversionSet { pairs }
    }

    /// `ℓ(w)`: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn beta(&self) -> u64 {
        self.beta_by(BetaMethod::LinearSum)
    }

    pub fn beta_by(&self, method: BetaMethod) -> u64 {
        let pairs = self
            .word
            .iter()
            .enumerate()
            .map(|(p, &v)| (p as i64 + 1, v as i64));
        match method {
            BetaMethod::InversionSum => self.inversions().iter().map(|(i, j)| (j - i) as u64).sum(),
            BetaMethod::SquareSum => {
                let twice: i64 = pairs.map(|(i, v)| (i - v) * (i - v)).sum();
                assert!(twice % 2 == 0, "sum of squared displacements is even");
                (twice / 2) as u64
            }
            BetaMethod::LinearSum => {
                let s: i64 = pairs.map(|(i, v)| i * (i - v)).sum();
                u64::try_from(s).expect("linear displacement sum is nonnegative")
            }
        }
    }

    /// Positions `j` with `w(j) > w(j+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// Exactly one descent in `w` and exactly one in `w⁻¹`.
    pub fn is_bigrassmannian(&self) -> bool {
        self.descents().len() == 1 && self.inverse().descents().len() == 1
    }

    /// `{(i, j) : i < w⁻¹(j), j < w(i)}`.
    pub fn rothe_diagram(&self) -> BTreeSet<(usize, usize)> {
        let inv = self.inverse();
        let n = self.n();
        let mut cells = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if i < inv.apply(j) && j < self.apply(i) {
                    cells.insert((i, j));
                }
            }
        }
        cells
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(usize::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// `"3412"` or, for `n > 9`, `"10,3,1,…"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(format!("cannot parse {s:?}"));
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

/// All of `S_n` in lexicographic order.
pub fn enumerate_sn(n: usize) -> Result<Permutations> {
    enumerate_sn_with_limit(n, MAX_ENUMERATION_N)
}

pub fn enumerate_sn_with_limit(n: usize, max: usize) -> Result<Permutations> {
    check_bound("enumerate_sn", n, max)?;
    Ok(Permutations {
        next: Some((1..=n).collect()),
    })
}

/// Lexicographic iterator over `S_n`.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_lex(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..w.len())
        .rev()
        .find(|&j| w[j] > w[i])
        .expect("pivot exists");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(p("1234").length(), 0);
        assert_eq!(p("3412").length(), 4);
        assert_eq!(p("4321").length(), 6);
    }

    #[test]
    fn beta_of_3412_by_each_formula() {
        for m in BetaMethod::ALL {
            assert_eq!(p("3412").beta_by(m), 8);
            assert_eq!(Permutation::identity(5).beta_by(m), 0);
        }
        let pairs: Vec<_> = p("3412").inversions().iter().collect();
        assert_eq!(pairs, vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
    }

    #[test]
    fn bigrassmannian_predicate() {
        assert!(p("1324").is_bigrassmannian());
        assert!(!p("1234").is_bigrassmannian());
        assert!(!p("4321").is_bigrassmannian());
        let count = enumerate_sn(4)
            .unwrap()
            .filter(Permutation::is_bigrassmannian)
            .count();
        assert_eq!(count, 10);
    }

    #[test]
    fn group_operations() {
        let w = p("3412");
        assert_eq!(w.inverse(), w);
        let u = p("25314");
        assert_eq!(
            Permutation::compose(&u, &u.inverse()).unwrap(),
            Permutation::identity(5)
        );
        assert_eq!(u.inverse().inverse(), u);
        assert!(matches!(
            Permutation::compose(&u, &w),
            Err(Error::SizeMismatch { left: 5, right: 4 })
        ));
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<_> = enumerate_sn(4).unwrap().collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_sn(0).unwrap().count(), 1);
        assert_eq!(enumerate_sn(1).unwrap().count(), 1);
        assert!(matches!(
            enumerate_sn(10),
            Err(Error::BoundExceeded { n: 10, max: 9, .. })
        ));
    }

    #[test]
    fn rothe_diagram_of_35241() {
        let w = p("35241");
        let d = w.rothe_diagram();
        assert_eq!(d.len(), 7);
        assert_eq!(w.length(), 7);
        assert_eq!(w.beta(), 15);
        assert!(Permutation::identity(4).rothe_diagram().is_empty());
    }

    #[test]
    fn parsing() {
        assert!("3312".parse::<Permutation>().is_err());
        assert!("0123".parse::<Permutation>().is_err());
        assert!("12a".parse::<Permutation>().is_err());
        let big = p("10,1,2,3,4,5,6,7,8,9");
        assert_eq!(big.to_string(), "10,1,2,3,4,5,6,7,8,9");
        assert_eq!(big.apply(1), 10);
        assert_eq!(p("3412").to_string(), "3412");
    }
}
