use std::collections::{HashMap, VecDeque};

use super::{enumerate_sn, enumerate_sn_with_limit, Permutation};
use crate::error::{Error, Result};

/// `u ≤ w` in Bruhat order, by prefix-sort dominance: for every `k`, the
/// sorted values `u(1..k)` are entrywise at most the sorted `w(1..k)`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: w.n(),
        });
    }
    let n = u.n();
    let mut pu: Vec<usize> = Vec::with_capacity(n);
    let mut pw: Vec<usize> = Vec::with_capacity(n);
    for k in 0..n.saturating_sub(1) {
        insert_sorted(&mut pu, u.word()[k]);
        insert_sorted(&mut pw, w.word()[k]);
        if pu.iter().zip(&pw).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let at = v.partition_point(|&y| y < x);
    v.insert(at, x);
}

/// `B(w)`: the bigrassmannian permutations weakly below `w`, in
/// lexicographic order.
pub fn bigrassmannians_below(w: &Permutation) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for u in enumerate_sn(w.n())? {
        if u.is_bigrassmannian() && bruhat_leq(&u, w)? {
            out.push(u);
        }
    }
    Ok(out)
}

/// Bruhat order on `S_n` built literally as the transitive closure of
/// `v → v·t_ij` with `ℓ(v) < ℓ(v·t_ij)`. Quadratic memory; meant as an
/// exhaustive reference for small `n`.
#[derive(Clone, Debug)]
pub struct BruhatClosure {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    above: Vec<Vec<bool>>,
}

impl BruhatClosure {
    pub const MAX_N: usize = 6;

    pub fn new(n: usize) -> Result<Self> {
        let elements: Vec<Permutation> = enumerate_sn_with_limit(n, Self::MAX_N)?.collect();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, p)| (p, k))
            .collect();
        let lengths: Vec<usize> = elements.iter().map(Permutation::length).collect();
        let succ: Vec<Vec<usize>> = elements
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let mut s = Vec::new();
                for i in 1..=n {
                    for j in i + 1..=n {
                        let w = v.mul_transposition(i, j);
                        let t = index[&w];
                        if lengths[t] > lengths[k] {
                            s.push(t);
                        }
                    }
                }
                s
            })
            .collect();

        let mut above = vec![vec![false; elements.len()]; elements.len()];
        for (start, row) in above.iter_mut().enumerate() {
            row[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &t in &succ[v] {
                    if !row[t] {
                        row[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        Ok(BruhatClosure {
            elements,
            index,
            above,
        })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn leq(&self, u: &Permutation, w: &Permutation) -> Result<bool> {
        let a = self.position(u)?;
        let b = self.position(w)?;
        Ok(self.above[a][b])
    }

    fn position(&self, p: &Permutation) -> Result<usize> {
        let n = self.elements.first().map_or(0, Permutation::n);
        self.index.get(p).copied().ok_or(Error::SizeMismatch {
            left: p.n(),
            right: n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn examples_in_s4() {
        assert!(bruhat_leq(&p("2134"), &p("2341")).unwrap());
        assert!(!bruhat_leq(&p("4123"), &p("2341")).unwrap());
        assert!(bruhat_leq(&p("3412"), &p("3412")).unwrap());
        let closure = BruhatClosure::new(4).unwrap();
        assert!(closure.leq(&p("2134"), &p("2341")).unwrap());
        assert!(!closure.leq(&p("4123"), &p("2341")).unwrap());
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            bruhat_leq(&p("21"), &p("321")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn prefix_criterion_matches_closure_on_s4() {
        let closure = BruhatClosure::new(4).unwrap();
        for u in closure.elements() {
            for w in closure.elements() {
                assert_eq!(
                    bruhat_leq(u, w).unwrap(),
                    closure.leq(u, w).unwrap(),
                    "{u} {w}"
                );
            }
        }
    }

    #[test]
    fn bigrassmannians_below_examples() {
        assert!(bigrassmannians_below(&Permutation::identity(4))
            .unwrap()
            .is_empty());
        assert_eq!(bigrassmannians_below(&p("3412")).unwrap().len(), 8);
        assert_eq!(bigrassmannians_below(&p("4321")).unwrap().len(), 10);
    }
}
