//! Set partitions of `{1..n}`, noncrossing predicates and enumeration,
//! segmented permutations and cyclic interval decompositions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subset::{crosses, Subset};

/// A set partition in canonical form: blocks sorted by their minimum.
///
/// The total order is by block count, then singleton count, then the block
/// lists compared lexicographically. Printed output follows this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Subset>,
}

impl SetPartition {
    /// Validates that `blocks` are nonempty, disjoint and cover `{1..n}`.
    pub fn from_subsets(n: usize, mut blocks: Vec<Subset>) -> Result<Self> {
        if n > crate::MAX_N {
            return Err(Error::RankTooLarge(n));
        }
        let full = Subset::full(n);
        let mut seen = Subset::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::EmptyBlock);
            }
            if !b.is_subset(full) {
                let bad = b.difference(full).min().unwrap_or(0);
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            if !seen.is_disjoint(*b) {
                let dup = seen.intersection(*b).min().unwrap_or(0);
                return Err(Error::InvalidPartition(format!("element {dup} appears twice")));
            }
            seen = seen.union(*b);
        }
        if seen != full {
            let miss = full.difference(seen).min().unwrap_or(0);
            return Err(Error::InvalidPartition(format!("element {miss} is missing")));
        }
        blocks.sort_by_key(|b| b.min());
        Ok(SetPartition { n, blocks })
    }

    pub fn from_blocks<I, B>(n: usize, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        let mut subs = Vec::new();
        for b in blocks {
            let mut s = Subset::EMPTY;
            for i in b {
                if i == 0 || i > n.min(crate::MAX_N) {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
                if s.contains(i) {
                    return Err(Error::InvalidPartition(format!("element {i} appears twice")));
                }
                s = s.insert(i);
            }
            subs.push(s);
        }
        Self::from_subsets(n, subs)
    }

    /// Builds the partition whose blocks are the level sets of a labelling
    /// `labels[i-1]` of each element.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let mut blocks: Vec<(usize, Subset)> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match blocks.iter_mut().find(|(x, _)| *x == l) {
                Some((_, s)) => *s = s.insert(i + 1),
                None => blocks.push((l, Subset::singleton(i + 1))),
            }
        }
        Self::from_subsets(n, blocks.into_iter().map(|(_, s)| s).collect())
    }

    pub fn one_block(n: usize) -> Result<Self> {
        if n == 0 {
            return Self::from_subsets(0, Vec::new());
        }
        Self::from_subsets(n, vec![Subset::full(n)])
    }

    pub fn singletons(n: usize) -> Result<Self> {
        Self::from_subsets(n, (1..=n).map(Subset::singleton).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn num_singletons(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    /// Index into [`SetPartition::blocks`] of the block containing `i`.
    pub fn block_index(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(i))
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(i) && b.contains(j))
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_pairs_iter().next().is_none()
    }

    fn crossing_pairs_iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.blocks.len();
        (0..k).flat_map(move |a| (a + 1..k).map(move |b| (a, b)))
            .filter(move |&(a, b)| crosses(self.blocks[a], self.blocks[b]))
    }

    /// Unordered pairs of block indices whose union is crossing.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        self.crossing_pairs_iter().collect()
    }

    /// Number of crossing block pairs; zero iff noncrossing.
    pub fn tangle(&self) -> usize {
        self.crossing_pairs_iter().count()
    }

    /// Crossing, but made noncrossing by some adjacent transposition.
    pub fn is_almost_noncrossing(&self) -> bool {
        !self.is_noncrossing() && !self.almost_noncrossing_indices().is_empty()
    }

    /// The `i` such that `i, i+1` lie in different blocks and swapping them
    /// yields a noncrossing partition.
    pub fn almost_noncrossing_indices(&self) -> Vec<usize> {
        (1..self.n)
            .filter(|&i| {
                !self.same_block(i, i + 1)
                    && self
                        .apply_perm(&Permutation::adjacent(self.n, i))
                        .map(|p| p.is_noncrossing())
                        .unwrap_or(false)
            })
            .collect()
    }

    /// The partition with blocks `w(B)`.
    pub fn apply_perm(&self, w: &Permutation) -> Result<SetPartition> {
        if w.n() != self.n {
            return Err(Error::RankMismatch(self.n, w.n()));
        }
        let blocks = self.blocks.iter().map(|b| b.map(|i| w.apply(i))).collect();
        SetPartition::from_subsets(self.n, blocks)
    }

    /// Replaces the blocks at indices `a` and `b` by `new_blocks`.
    pub fn replace_pair(&self, a: usize, b: usize, new_blocks: &[Subset]) -> Result<SetPartition> {
        let mut blocks: Vec<Subset> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != a && i != b)
            .map(|(_, s)| *s)
            .collect();
        blocks.extend_from_slice(new_blocks);
        SetPartition::from_subsets(self.n, blocks)
    }

    /// Elements listed block by block, the form used for text output.
    pub fn block_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.to_vec()).collect()
    }
}

impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.blocks.len().cmp(&other.blocks.len()))
            .then_with(|| self.num_singletons().cmp(&other.num_singletons()))
            .then_with(|| {
                for (a, b) in self.blocks.iter().zip(&other.blocks) {
                    match a.lex_cmp(*b) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `1 3 / 2 4` style text.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(" / ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Set partitions of `{1..n}`, optionally restricted to `k` blocks, `m`
/// singletons and noncrossing ones, in restricted-growth-string order.
pub fn enumerate(n: usize, k: Option<usize>, m: Option<usize>, noncrossing: bool) -> Result<Vec<SetPartition>> {
    if n > crate::MAX_N {
        return Err(Error::RankTooLarge(n));
    }
    if let Some(k) = k {
        if k > n {
            return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
        }
    }
    if let Some(m) = m {
        if m > k.unwrap_or(n) {
            return Err(Error::InvalidParameters(format!("m = {m} exceeds the block count")));
        }
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    let mut blocks: Vec<Subset> = Vec::new();
    rgs(1, n, k, m, noncrossing, &mut labels, &mut blocks, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn rgs(
    i: usize,
    n: usize,
    k: Option<usize>,
    m: Option<usize>,
    nc: bool,
    labels: &mut Vec<usize>,
    blocks: &mut Vec<Subset>,
    out: &mut Vec<SetPartition>,
) {
    if i > n {
        if k.is_some_and(|k| blocks.len() != k) {
            return;
        }
        if m.is_some_and(|m| blocks.iter().filter(|b| b.len() == 1).count() != m) {
            return;
        }
        out.push(SetPartition {
            n,
            blocks: blocks.clone(),
        });
        return;
    }
    let remaining = n - i + 1;
    for l in 0..=blocks.len() {
        let opens = l == blocks.len();
        let used = blocks.len() + usize::from(opens);
        if let Some(k) = k {
            if used > k || used + (remaining - 1) < k {
                continue;
            }
        }
        if opens {
            blocks.push(Subset::singleton(i));
        } else {
            let b = blocks[l].insert(i);
            // Adding i can only create a crossing with a block having an
            // element between max(B) and i; check that pair directly.
            if nc && blocks.iter().enumerate().any(|(j, &c)| j != l && crosses(b, c)) {
                continue;
            }
            blocks[l] = b;
        }
        labels[i - 1] = l;
        rgs(i + 1, n, k, m, nc, labels, blocks, out);
        if opens {
            blocks.pop();
        } else {
            blocks[l] = blocks[l].remove(i);
        }
    }
}

/// A permutation cut into consecutive segments by a composition `alpha`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SegmentedPermutation {
    w: Permutation,
    alpha: Vec<usize>,
}

impl SegmentedPermutation {
    pub fn new(w: Permutation, alpha: Vec<usize>) -> Result<Self> {
        if alpha.contains(&0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        let total: usize = alpha.iter().sum();
        if total != w.n() {
            return Err(Error::InvalidComposition(format!(
                "parts sum to {total}, expected {}",
                w.n()
            )));
        }
        Ok(SegmentedPermutation { w, alpha })
    }

    /// From explicit segments, e.g. `[[5,3,6],[7],[2,1],[8,4]]`.
    pub fn from_segments(segments: &[Vec<usize>]) -> Result<Self> {
        let images: Vec<usize> = segments.iter().flatten().copied().collect();
        let w = Permutation::from_images(&images)?;
        Self::new(w, segments.iter().map(|s| s.len()).collect())
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// Number of segments.
    pub fn k(&self) -> usize {
        self.alpha.len()
    }

    pub fn segments(&self) -> Vec<Vec<usize>> {
        let images = self.w.images();
        let mut out = Vec::with_capacity(self.alpha.len());
        let mut start = 0;
        for &a in &self.alpha {
            out.push(images[start..start + a].to_vec());
            start += a;
        }
        out
    }

    pub fn to_partition(&self) -> SetPartition {
        SetPartition::from_blocks(self.n(), self.segments()).expect("segments of a permutation")
    }

    pub fn odd_part_sum(&self) -> usize {
        odd_part_sum(&self.alpha)
    }
}

/// `α_1 + α_3 + α_5 + ..`.
pub fn odd_part_sum(alpha: &[usize]) -> usize {
    alpha.iter().step_by(2).sum()
}

/// Blocks in canonical order, each listed ascending.
pub fn canonical_segperm(pi: &SetPartition) -> SegmentedPermutation {
    SegmentedPermutation::from_segments(&pi.block_lists()).expect("blocks of a partition")
}

/// Segments separated by `|`, e.g. `5 3 6 | 7 | 2 1 | 8 4`.
impl fmt::Display for SegmentedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, seg) in self.segments().iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            for (j, x) in seg.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SegmentedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Maximal cyclic intervals `A_1, B_1, .., A_m, B_m` of the ordered set
/// `A ⊔ B`, alternating between the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub a: Vec<Subset>,
    pub b: Vec<Subset>,
}

impl CyclicDecomposition {
    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// The intervals in cyclic order `A_1, B_1, A_2, ..`.
    pub fn intervals(&self) -> Vec<Subset> {
        self.a.iter().zip(&self.b).flat_map(|(x, y)| [*x, *y]).collect()
    }
}

/// Splits `A ⊔ B` into maximal cyclic runs. When `min(A ⊔ B)` lies in `A`
/// the first interval is the run containing it; otherwise the first
/// interval is the `A`-run following the `B`-run that contains it.
pub fn cyclic_decomposition(a: Subset, b: Subset, n: usize) -> Result<CyclicDecomposition> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyBlock);
    }
    if !a.is_disjoint(b) {
        return Err(Error::Overlapping);
    }
    let full = Subset::full(n);
    if !a.union(b).is_subset(full) {
        let bad = a.union(b).difference(full).min().unwrap_or(0);
        return Err(Error::IndexOutOfRange { index: bad, n });
    }
    // Linear runs as (side is A, elements).
    let mut runs: Vec<(bool, Subset)> = Vec::new();
    for x in a.union(b).iter() {
        let side = a.contains(x);
        match runs.last_mut() {
            Some((s, r)) if *s == side => *r = r.insert(x),
            _ => runs.push((side, Subset::singleton(x))),
        }
    }
    if runs.len() > 2 && runs[0].0 == runs[runs.len() - 1].0 {
        let (_, last) = runs.pop().expect("nonempty");
        runs[0].1 = runs[0].1.union(last);
    }
    // runs[0] contains the minimum; rotate so an A-run comes first.
    if !runs[0].0 {
        runs.rotate_left(1);
    }
    let a_runs = runs.iter().step_by(2).map(|r| r.1).collect();
    let b_runs = runs.iter().skip(1).step_by(2).map(|r| r.1).collect();
    Ok(CyclicDecomposition { a: a_runs, b: b_runs })
}


#[cfg(test)]
mod props {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    const N: usize = 7;

    /// Restricted growth strings give every partition of `[N]` exactly once.
    fn partition() -> impl Strategy<Value = SetPartition> {
        prop::collection::vec(0usize..N, N).prop_map(|raw| {
            let mut labels = Vec::with_capacity(N);
            let mut next = 0;
            for r in raw {
                let l = r.min(next);
                if l == next {
                    next += 1;
                }
                labels.push(l);
            }
            SetPartition::from_labels(&labels).unwrap()
        })
    }

    fn perm() -> impl Strategy<Value = Permutation> {
        Just((1..=N).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn action_composes(pi in partition(), v in perm(), w in perm()) {
            prop_assert_eq!(pi.apply_perm(&w.compose(&v)).unwrap(), pi.apply_perm(&v).unwrap().apply_perm(&w).unwrap());
        }

        #[test]
        fn action_preserves_strata(pi in partition(), w in perm()) {
            let q = pi.apply_perm(&w).unwrap();
            prop_assert_eq!((q.num_blocks(), q.num_singletons()), (pi.num_blocks(), pi.num_singletons()));
        }

        #[test]
        fn tangle_counts_crossing_pairs(pi in partition()) {
            prop_assert_eq!(pi.tangle() == 0, pi.is_noncrossing());
            let blocks = pi.blocks();
            let brute = (0..blocks.len())
                .flat_map(|a| (a + 1..blocks.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| crate::subset::crosses(blocks[a], blocks[b]))
                .count();
            prop_assert_eq!(pi.tangle(), brute);
        }

        #[test]
        fn canonical_segperm_recovers_partition(pi in partition()) {
            let sp = canonical_segperm(&pi);
            prop_assert_eq!(sp.to_partition(), pi.clone());
            prop_assert_eq!(sp.k(), pi.num_blocks());
            prop_assert!(!pi.to_string().is_empty());
        }

        #[test]
        fn cyclic_intervals_alternate(pi in partition()) {
            prop_assume!(pi.num_blocks() >= 2);
            let (a, b) = (pi.blocks()[0], pi.blocks()[1]);
            let d = cyclic_decomposition(a, b, N).unwrap();
            let ivs = d.intervals();
            prop_assert_eq!(ivs.len(), 2 * d.m());
            let mut cover = Subset::default();
            for (t, iv) in ivs.iter().enumerate() {
                let side = if t % 2 == 0 { a } else { b };
                prop_assert!(iv.is_subset(side));
                prop_assert!(iv.is_disjoint(cover));
                cover = cover.union(*iv);
            }
            prop_assert_eq!(cover, a.union(b));
        }
    }
}
