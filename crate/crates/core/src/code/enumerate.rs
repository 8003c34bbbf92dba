//! Odometer enumeration of a code as `Σ c_j g_j`, `0 ≤ c_j < radix_j`.

use crate::par::{fold_ranges, Strategy};
use crate::ring::ChainRing;

/// The additive group the words live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Chain(ChainRing),
    /// `Z_m`.
    Modular(u64),
}

impl Group {
    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            Group::Chain(r) => r.add(a, b),
            Group::Modular(m) => {
                let s = a as u128 + b as u128;
                (s % *m as u128) as u64
            }
        }
    }

    fn scalar(&self, k: u64, a: u64) -> u64 {
        match self {
            Group::Chain(r) => r.mul(r.from_int(k as i64), a),
            Group::Modular(m) => ((k as u128 * a as u128) % *m as u128) as u64,
        }
    }

    fn neg(&self, a: u64) -> u64 {
        match self {
            Group::Chain(r) => r.neg(a),
            Group::Modular(m) => (m - a % m) % m,
        }
    }
}

/// A finite set of words `{Σ c_j g_j : 0 ≤ c_j < radix_j}` in bijection
/// with its digit tuples.
#[derive(Clone, Debug)]
pub struct WordSpace {
    group: Group,
    n: usize,
    gens: Vec<Vec<u64>>,
    radix: Vec<u64>,
    // -(radix-1)·g, applied when a digit wraps to zero
    wrap: Vec<Vec<u64>>,
}

impl WordSpace {
    pub fn new(group: Group, n: usize, gens: Vec<Vec<u64>>, radix: Vec<u64>) -> Self {
        let wrap = gens
            .iter()
            .zip(&radix)
            .map(|(g, &r)| g.iter().map(|&a| group.neg(group.scalar(r - 1, a))).collect())
            .collect();
        WordSpace {
            group,
            n,
            gens,
            radix,
            wrap,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of words, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        self.radix
            .iter()
            .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
            .unwrap_or(u128::MAX)
    }

    pub fn word_at(&self, mut idx: u128) -> Vec<u64> {
        let mut w = vec![0u64; self.n];
        for (g, &r) in self.gens.iter().zip(&self.radix) {
            let c = (idx % r as u128) as u64;
            idx /= r as u128;
            if c != 0 {
                for (a, &b) in w.iter_mut().zip(g) {
                    *a = self.group.add(*a, self.group.scalar(c, b));
                }
            }
        }
        w
    }

    fn digits_at(&self, mut idx: u128) -> Vec<u64> {
        self.radix
            .iter()
            .map(|&r| {
                let c = (idx % r as u128) as u64;
                idx /= r as u128;
                c
            })
            .collect()
    }

    /// Visits words with indices in `start..end`; stops early when `visit`
    /// returns `false`.
    pub fn scan<F: FnMut(&[u64]) -> bool>(&self, start: u128, end: u128, mut visit: F) {
        if start >= end {
            return;
        }
        let mut word = self.word_at(start);
        let mut digits = self.digits_at(start);
        let mut idx = start;
        loop {
            if !visit(&word) {
                return;
            }
            idx += 1;
            if idx >= end {
                return;
            }
            // increment the odometer
            for j in 0..digits.len() {
                if digits[j] + 1 < self.radix[j] {
                    digits[j] += 1;
                    for (a, &b) in word.iter_mut().zip(&self.gens[j]) {
                        *a = self.group.add(*a, b);
                    }
                    break;
                }
                digits[j] = 0;
                for (a, &b) in word.iter_mut().zip(&self.wrap[j]) {
                    *a = self.group.add(*a, b);
                }
            }
        }
    }

    pub fn iter(&self) -> WordIter<'_> {
        WordIter {
            space: self,
            next: 0,
            total: self.size(),
        }
    }

    /// Least weight of a nonzero word, `None` if every word is zero.
    /// Stops as soon as a word of weight `floor` is seen.
    pub fn min_weight(&self, strategy: Strategy, floor: usize) -> Option<usize> {
        let best = fold_ranges(
            strategy,
            self.size(),
            usize::MAX,
            |a, b| {
                let mut best = usize::MAX;
                self.scan(a, b, |w| {
                    let wt = w.iter().filter(|&&x| x != 0).count();
                    if wt > 0 && wt < best {
                        best = wt;
                    }
                    best > floor
                });
                best
            },
            usize::min,
        );
        (best != usize::MAX).then_some(best)
    }
}

pub struct WordIter<'a> {
    space: &'a WordSpace,
    next: u128,
    total: u128,
}

impl Iterator for WordIter<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.next >= self.total {
            return None;
        }
        let w = self.space.word_at(self.next);
        self.next += 1;
        Some(w)
    }
}
