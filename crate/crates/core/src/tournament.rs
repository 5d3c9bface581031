//! Tournaments on `[n]`: orientations of the complete graph, stored as one
//! bit per pair `i < j` (set means the inversion `j → i`).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{check_bound, Error, Result};
use crate::perm::Permutation;

/// Largest `n` representable (55 pair bits fit in a `u64`).
pub const MAX_N: usize = 11;
/// Default bound for [`enumerate_tn`].
pub const MAX_ENUMERATION_N: usize = 7;
/// Default bound for [`perfect_matching`].
pub const MAX_MATCHING_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tournament {
    n: usize,
    bits: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleSign {
    /// `k → j → i → k`: two inversions.
    Positive,
    /// `i → j → k → i`: one inversion.
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub sign: CycleSign,
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `1 ≤ i < j ≤ n`, in lexicographic order.
pub fn pair_rank(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

/// All triples `i < j < k` in lexicographic order.
pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
}

impl Tournament {
    /// The transitive tournament with every edge `i → j`, `i < j`.
    pub fn new(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_bound("tournament", n, MAX_N)?;
        let m = pair_count(n);
        if m < 64 && bits >> m != 0 {
            return Err(Error::InvalidTournament(format!(
                "bits {bits:#b} exceed {m} pairs"
            )));
        }
        Ok(Tournament { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Whether the edge between `i < j` is the inversion `j → i`.
    pub fn is_inversion(&self, i: usize, j: usize) -> bool {
        self.bits >> pair_rank(self.n, i, j) & 1 == 1
    }

    /// Whether `a → b` (`a ≠ b`).
    pub fn beats(&self, a: usize, b: usize) -> bool {
        if a < b {
            !self.is_inversion(a, b)
        } else {
            self.is_inversion(b, a)
        }
    }

    /// `ℓ(G)`: number of inversions.
    pub fn length(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// `β(G) = Σ_{j → i, j > i} (j - i)`.
    pub fn beta(&self) -> u64 {
        let mut total = 0;
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.is_inversion(i, j) {
                    total += (j - i) as u64;
                }
            }
        }
        total
    }

    /// `ω_G(j)`.
    pub fn outdegree(&self, j: usize) -> usize {
        (1..=self.n).filter(|&v| v != j && self.beats(j, v)).count()
    }

    pub fn outdegrees(&self) -> Vec<usize> {
        (1..=self.n).map(|j| self.outdegree(j)).collect()
    }

    pub fn cycle_at(&self, i: usize, j: usize, k: usize) -> Option<CycleSign> {
        let (ij, jk, ik) = (
            self.is_inversion(i, j),
            self.is_inversion(j, k),
            self.is_inversion(i, k),
        );
        match (ij, jk, ik) {
            (false, false, true) => Some(CycleSign::Negative),
            (true, true, false) => Some(CycleSign::Positive),
            _ => None,
        }
    }

    /// Every 3-cycle, triples in lexicographic order.
    pub fn cycles(&self) -> Vec<Cycle> {
        triples(self.n)
            .filter_map(|(i, j, k)| self.cycle_at(i, j, k).map(|sign| Cycle { i, j, k, sign }))
            .collect()
    }

    pub fn first_cycle(&self) -> Option<(usize, usize, usize)> {
        triples(self.n).find(|&(i, j, k)| self.cycle_at(i, j, k).is_some())
    }

    pub fn is_transitive(&self) -> bool {
        self.first_cycle().is_none()
    }

    /// `C_ijk`: reverses the three edges of the triple if they form a cycle,
    /// otherwise returns `self`.
    pub fn reverse_cycle(&self, i: usize, j: usize, k: usize) -> Tournament {
        assert!(i < j && j < k && k <= self.n, "need i < j < k <= n");
        if self.cycle_at(i, j, k).is_none() {
            return *self;
        }
        Tournament {
            n: self.n,
            bits: self.bits ^ triple_mask(self.n, i, j, k),
        }
    }

    /// `G(w)`: `j → i` is an inversion iff `(i, j) ∈ N(w)`.
    pub fn from_permutation(w: &Permutation) -> Result<Tournament> {
        let n = w.n();
        check_bound("tournament", n, MAX_N)?;
        let inv = w.inverse();
        let mut bits = 0u64;
        for i in 1..=n {
            for j in i + 1..=n {
                if inv.apply(i) > inv.apply(j) {
                    bits |= 1 << pair_rank(n, i, j);
                }
            }
        }
        Ok(Tournament { n, bits })
    }

    /// Inverse of [`Tournament::from_permutation`]. In a transitive
    /// tournament the outdegrees are `0..n` and vertex `v` sits at position
    /// `n - ω(v)` of the word.
    pub fn to_permutation(&self) -> Result<Permutation> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive(self.to_string()));
        }
        let mut word = vec![0; self.n];
        for v in 1..=self.n {
            word[self.n - 1 - self.outdegree(v)] = v;
        }
        Permutation::new(word)
    }
}

fn triple_mask(n: usize, i: usize, j: usize, k: usize) -> u64 {
    1 << pair_rank(n, i, j) | 1 << pair_rank(n, j, k) | 1 << pair_rank(n, i, k)
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..pair_count(self.n) {
            f.write_str(if self.bits >> r & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Tournament {
    type Err = Error;

    /// Bit string in pair-rank order; its length fixes `n`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let m = s.len();
        let n = (1..=MAX_N)
            .find(|&n| pair_count(n) == m)
            .ok_or_else(|| Error::InvalidTournament(format!("{m} is not a triangular number")))?;
        let mut bits = 0u64;
        for (r, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << r,
                '0' => {}
                _ => return Err(Error::InvalidTournament(format!("bad character {c:?}"))),
            }
        }
        Tournament::from_bits(n, bits)
    }
}

/// All `2^{n(n-1)/2}` tournaments on `[n]`, ordered by bit pattern.
pub fn enumerate_tn(n: usize) -> Result<impl Iterator<Item = Tournament>> {
    enumerate_tn_with_limit(n, MAX_ENUMERATION_N)
}

pub fn enumerate_tn_with_limit(n: usize, max: usize) -> Result<impl Iterator<Item = Tournament>> {
    check_bound("enumerate_tn", n, max.min(MAX_N))?;
    let total = 1u64 << pair_count(n);
    Ok((0..total).map(move |bits| Tournament { n, bits }))
}

/// A pair `{a, b}` with `b = C_ijk(a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub a: Tournament,
    pub b: Tournament,
    pub triple: (usize, usize, usize),
}

#[derive(Clone, Debug)]
pub struct Matching {
    pub pairs: Vec<MatchedPair>,
    /// Pairs formed by the lexicographic pass before any repair.
    pub lexicographic_pairs: usize,
    /// Augmenting paths applied after the lexicographic pass.
    pub augmentations: usize,
    /// Non-transitive tournaments left without a partner.
    pub unmatched: Vec<Tournament>,
}

impl Matching {
    pub fn is_perfect(&self) -> bool {
        self.unmatched.is_empty()
    }
}

const NONE: u32 = u32::MAX;

/// Pairs off `T_n ∖ S_n` so that partners differ by one cycle reversal.
///
/// First pass: for each triple in lexicographic order, every still-unpaired
/// tournament in which the triple is a cycle is paired with its reversal,
/// provided that one is unpaired too. Reversing a cycle can create or
/// destroy a cycle on an earlier triple, so this pass alone leaves
/// tournaments behind from `n = 5` on. Second pass: augmenting paths in the
/// reversal graph, which is bipartite by length parity, complete it.
pub fn perfect_matching(n: usize) -> Result<Matching> {
    perfect_matching_with_limit(n, MAX_MATCHING_N)
}

pub fn perfect_matching_with_limit(n: usize, max: usize) -> Result<Matching> {
    check_bound("perfect_matching", n, max.min(MAX_N))?;
    let total = 1usize << pair_count(n);
    let ts: Vec<(usize, usize, usize)> = triples(n).collect();
    let masks: Vec<u64> = ts
        .iter()
        .map(|&(i, j, k)| triple_mask(n, i, j, k))
        .collect();
    let tour = |bits: usize| Tournament {
        n,
        bits: bits as u64,
    };
    let has_cycle = |bits: usize, t: usize| {
        let (i, j, k) = ts[t];
        tour(bits).cycle_at(i, j, k).is_some()
    };
    let nontransitive: Vec<bool> = (0..total).map(|b| !tour(b).is_transitive()).collect();
    let mut mate = vec![NONE; total];

    for (t, &mask) in masks.iter().enumerate() {
        for g in 0..total {
            if mate[g] == NONE && has_cycle(g, t) {
                let h = g ^ mask as usize;
                if mate[h] == NONE {
                    mate[g] = h as u32;
                    mate[h] = g as u32;
                }
            }
        }
    }
    let lexicographic_pairs = mate.iter().filter(|&&m| m != NONE).count() / 2;

    let mut augmentations = 0;
    let free: Vec<usize> = (0..total)
        .filter(|&g| nontransitive[g] && mate[g] == NONE && (g.count_ones() % 2 == 0))
        .collect();
    let mut parent = vec![NONE; total];
    let mut touched: Vec<usize> = Vec::new();
    for root in free {
        if mate[root] != NONE {
            continue;
        }
        // BFS over even vertices; parent[odd] = even vertex it was reached from.
        let mut queue = VecDeque::from([root]);
        let mut end = None;
        'search: while let Some(u) = queue.pop_front() {
            for (t, &mask) in masks.iter().enumerate() {
                if !has_cycle(u, t) {
                    continue;
                }
                let v = u ^ mask as usize;
                if parent[v] != NONE || v == root {
                    continue;
                }
                parent[v] = u as u32;
                touched.push(v);
                if mate[v] == NONE {
                    end = Some(v);
                    break 'search;
                }
                queue.push_back(mate[v] as usize);
            }
        }
        if let Some(mut v) = end {
            loop {
                let u = parent[v] as usize;
                let next = mate[u];
                mate[v] = u as u32;
                mate[u] = v as u32;
                if next == NONE {
                    break;
                }
                v = next as usize;
            }
            augmentations += 1;
        }
        for v in touched.drain(..) {
            parent[v] = NONE;
        }
    }

    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    for g in 0..total {
        if !nontransitive[g] {
            continue;
        }
        let h = mate[g];
        if h == NONE {
            unmatched.push(tour(g));
        } else if (g as u32) < h {
            let diff = (g ^ h as usize) as u64;
            let t = masks
                .iter()
                .position(|&m| m == diff)
                .expect("partners differ by a triple");
            pairs.push(MatchedPair {
                a: tour(g),
                b: tour(h as usize),
                triple: ts[t],
            });
        }
    }
    Ok(Matching {
        pairs,
        lexicographic_pairs,
        augmentations,
        unmatched,
    })
}
