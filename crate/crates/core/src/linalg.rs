//! Exact sparse row reduction over the rationals.
//!
//! Vectors are sorted `(key, value)` lists with no zero entries. Rows are
//! kept in echelon form keyed by their leading (smallest) key, so inserting a
//! vector costs one sweep over the pivots it meets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::extalg::{Fermion, Monomial, Rational};

pub type SparseVec<K> = Vec<(K, Rational)>;

/// Sorts, merges repeated keys and drops zeros.
pub fn normalize<K: Ord + Copy>(mut v: SparseVec<K>) -> SparseVec<K> {
    v.sort_by_key(|a| a.0);
    let mut out: SparseVec<K> = Vec::with_capacity(v.len());
    for (k, c) in v {
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((k, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if lc.is_zero() {
            out.pop();
        }
    }
    out
}

pub fn fermion_vec(f: &Fermion) -> SparseVec<Monomial> {
    f.terms().map(|(m, c)| (*m, c.clone())).collect()
}

/// `a + c · b` for sorted vectors.
fn axpy<K: Ord + Copy>(a: &[(K, Rational)], c: &Rational, b: &[(K, Rational)]) -> SparseVec<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let s = &a[i].1 + c * &b[j].1;
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn axpy_map(a: &mut BTreeMap<usize, Rational>, c: &Rational, b: &BTreeMap<usize, Rational>) {
    for (k, x) in b {
        let e = a.entry(*k).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            a.remove(k);
        }
    }
}

#[derive(Clone, Debug)]
struct Row<K> {
    vec: SparseVec<K>,
    /// This row as a combination of the inserted vectors.
    combo: BTreeMap<usize, Rational>,
}

/// An incrementally built row echelon form.
///
/// Pivots are taken in key order rather than by coefficient size; the inputs
/// here are small-integer vectors where this keeps entries short.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    rows: BTreeMap<K, Row<K>>,
    track: bool,
    inserted: usize,
}

impl<K: Ord + Copy> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Copy> Echelon<K> {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
            track: false,
            inserted: 0,
        }
    }

    /// Records how each row arises from the inserted vectors, enabling
    /// [`Echelon::solve`].
    pub fn with_tracking() -> Self {
        Echelon {
            track: true,
            ..Self::new()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors offered so far; the index of the next one.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    fn reduce_inner(&self, mut v: SparseVec<K>, mut combo: Option<&mut BTreeMap<usize, Rational>>) -> SparseVec<K> {
        let mut start = 0;
        loop {
            let hit = v[start..]
                .iter()
                .position(|(k, _)| self.rows.contains_key(k))
                .map(|p| p + start);
            let Some(p) = hit else { return v };
            let row = &self.rows[&v[p].0];
            let c = -v[p].1.clone();
            v = axpy(&v, &c, &row.vec);
            if let Some(cm) = combo.as_deref_mut() {
                axpy_map(cm, &c, &row.combo);
            }
            // Entries before `p` are untouched and the pivot entry is gone.
            start = p;
        }
    }

    /// The residual of `v` modulo the current span.
    pub fn reduce(&self, v: SparseVec<K>) -> SparseVec<K> {
        self.reduce_inner(v, None)
    }

    pub fn in_span(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether it increased the rank.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let mut combo = BTreeMap::new();
        if self.track {
            combo.insert(idx, Rational::one());
        }
        let mut r = if self.track {
            self.reduce_inner(v, Some(&mut combo))
        } else {
            self.reduce_inner(v, None)
        };
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.recip();
        for e in r.iter_mut() {
            e.1 *= &inv;
        }
        for c in combo.values_mut() {
            *c *= &inv;
        }
        self.rows.insert(r[0].0, Row { vec: r, combo });
        true
    }

    /// Coefficients `x` with `Σ x_i v_i = target` over the inserted vectors,
    /// or `None` if `target` is outside the span. Needs tracking.
    pub fn solve(&self, target: SparseVec<K>) -> Option<BTreeMap<usize, Rational>> {
        assert!(self.track, "solve needs an echelon built with tracking");
        let mut combo = BTreeMap::new();
        let r = self.reduce_inner(target, Some(&mut combo));
        if !r.is_empty() {
            return None;
        }
        // target - Σ combo = 0 was accumulated with negated signs.
        for c in combo.values_mut() {
            *c = -core::mem::take(c);
        }
        Some(combo)
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Copy, I: IntoIterator<Item = SparseVec<K>>>(vs: I) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}
