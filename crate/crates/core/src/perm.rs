//! Permutations of `{1..n}` in one-line notation.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation `w` of `{1..n}`, stored by its images `w(1), .., w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Builds `w` from the one-line word `w(1) w(2) .. w(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > crate::MAX_N {
            return Err(Error::RankTooLarge(n));
        }
        let mut seen = [false; 17];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotAPermutation(n));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not defined in S_{n}");
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The long cycle `c = (1, 2, .., n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| ((i + 1) % n + 1) as u8).collect(),
        }
    }

    /// The longest element `w_0(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u8; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| j as usize == i + 1)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A reduced word `[a_1, .., a_L]` with `w = s_{a_1} s_{a_2} .. s_{a_L}`,
    /// found by sorting the one-line word from the right (right descents).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut u = self.images.clone();
        let mut found = Vec::new();
        while let Some(j) = (0..u.len().saturating_sub(1)).find(|&j| u[j] > u[j + 1]) {
            // u <- u s_{j+1}
            u.swap(j, j + 1);
            found.push(j + 1);
        }
        found.reverse();
        found
    }

    /// A second reduced word, built from left descents.
    pub fn reduced_word_left(&self) -> Vec<usize> {
        // w = s_a u with u shorter iff a+1 appears before a in one-line w.
        let mut u = self.clone();
        let mut word = Vec::new();
        while !u.is_identity() {
            let inv = u.inverse();
            let a = (1..u.n()).rev().find(|&a| inv.apply(a) > inv.apply(a + 1)).unwrap();
            word.push(a);
            u = Permutation::adjacent(u.n(), a).compose(&u);
        }
        word
    }

    /// Builds `s_{a_1} .. s_{a_L}`.
    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        word.iter()
            .fold(Self::identity(n), |acc, &a| acc.compose(&Self::adjacent(n, a)))
    }

    /// Cycle lengths in weakly decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = alloc::vec![false; n + 1];
        let mut lens = Vec::new();
        for i in 1..=n {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.apply(j);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Adjacent-transposition word of the standard representative of a cycle
    /// type: cycles on consecutive runs `(a, a+1, .., b) = s_a s_{a+1} .. s_{b-1}`.
    pub fn cycle_type_word(cycle_type: &[usize]) -> Vec<usize> {
        let mut word = Vec::new();
        let mut start = 1;
        for &len in cycle_type {
            word.extend(start..start + len - 1);
            start += len;
        }
        word
    }

    /// All permutations of `{1..n}` in lexicographic order of one-line words.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
