//! The skein action of `S_n` on linear combinations of noncrossing
//! partitions, the crossing-resolution map `σ`, and the projection `p` from
//! all partitions onto noncrossing ones.
//!
//! `p(π)` is characterised by `F_π = Σ_μ c_{π,μ} F_μ` over noncrossing `μ`
//! with the same number of blocks. It is computed two ways: by an exact
//! linear solve against the noncrossing fermions ([`NcSolver`]), and by
//! repeatedly resolving one crossing pair of blocks ([`resolve_greedy`]).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::extalg::{rat, Monomial, Rational};
use crate::fermions::big_f;
use crate::linalg::{fermion_vec, Echelon};
use crate::perm::Permutation;
use crate::setpart::{cyclic_decomposition, enumerate, SetPartition};
use crate::subset::Subset;

/// A linear combination of noncrossing partitions of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcVector {
    n: usize,
    terms: BTreeMap<SetPartition, Rational>,
}

impl NcVector {
    pub fn zero(n: usize) -> Self {
        NcVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector of a noncrossing partition.
    pub fn basis(pi: &SetPartition) -> Result<Self> {
        let mut v = Self::zero(pi.n());
        v.add_term(pi.clone(), rat(1))?;
        Ok(v)
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SetPartition, Rational)>,
    {
        let mut v = Self::zero(n);
        for (p, c) in terms {
            v.add_term(p, c)?;
        }
        Ok(v)
    }

    /// Adds `c · pi`, rejecting crossing partitions and rank mismatches.
    pub fn add_term(&mut self, pi: SetPartition, c: Rational) -> Result<()> {
        if pi.n() != self.n {
            return Err(Error::RankMismatch(self.n, pi.n()));
        }
        if !pi.is_noncrossing() {
            return Err(Error::InvalidPartition(format!("{pi} is crossing")));
        }
        self.add_unchecked(pi, c);
        Ok(())
    }

    fn add_unchecked(&mut self, pi: SetPartition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(pi).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("just inserted");
            self.terms.remove(&key);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &NcVector, c: &Rational) {
        assert_eq!(self.n, other.n, "mismatched ground set");
        for (p, x) in &other.terms {
            self.add_unchecked(p.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> NcVector {
        let mut out = NcVector::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in output order: block count, singleton count, then blocks.
    pub fn terms(&self) -> impl Iterator<Item = (&SetPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, pi: &SetPartition) -> Rational {
        self.terms.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl core::ops::Neg for NcVector {
    type Output = NcVector;
    fn neg(self) -> NcVector {
        self.scale(&rat(-1))
    }
}

impl core::ops::Add<&NcVector> for &NcVector {
    type Output = NcVector;
    fn add(self, rhs: &NcVector) -> NcVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &rat(1));
        out
    }
}

impl core::ops::Sub<&NcVector> for &NcVector {
    type Output = NcVector;
    fn sub(self, rhs: &NcVector) -> NcVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &rat(-1));
        out
    }
}

/// Signed sum such as `-{1 2 / 3 4} - {1 4 / 2 3}`; `0` when empty.
impl fmt::Display for NcVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{{{p}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NcVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcVector[n={}]({})", self.n, self)
    }
}

/// `σ(π)` computed at the index `i`, where `π` is crossing and swapping
/// `i, i+1` makes it noncrossing.
///
/// With `B_i ∋ i` and `B_{i+1} ∋ i+1`, the result is `π_1 + π_2`, minus
/// `π_3` when `|B_i| > 2`, minus `π_4` when `|B_{i+1}| > 2`, where the two
/// blocks are replaced by
///
/// - `π_1`: `(B_i - i) ∪ {i+1}` and `(B_{i+1} - {i+1}) ∪ {i}`,
/// - `π_2`: `(B_i ∪ B_{i+1}) - {i, i+1}` and `{i, i+1}`,
/// - `π_3`: `B_i - {i}` and `B_{i+1} ∪ {i}`,
/// - `π_4`: `B_{i+1} - {i+1}` and `B_i ∪ {i+1}`.
pub fn sigma(pi: &SetPartition, i: usize) -> Result<NcVector> {
    let n = pi.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if pi.is_noncrossing() {
        return Err(Error::Precondition(format!("{pi} is already noncrossing")));
    }
    let (a, b) = (
        pi.block_index(i).expect("covered"),
        pi.block_index(i + 1).expect("covered"),
    );
    if a == b {
        return Err(Error::Precondition(format!("{i} and {} share a block", i + 1)));
    }
    if !pi.apply_perm(&Permutation::adjacent(n, i))?.is_noncrossing() {
        return Err(Error::Precondition(format!("swapping {i} and {} leaves {pi} crossing", i + 1)));
    }
    let (bi, bj) = (pi.blocks()[a], pi.blocks()[b]);
    let (x, y) = (Subset::singleton(i), Subset::singleton(i + 1));
    let mut out = NcVector::zero(n);
    let mut push = |blocks: [Subset; 2], c: i64| -> Result<()> {
        let p = pi.replace_pair(a, b, &blocks)?;
        out.add_term(p, rat(c))
    };
    push([bi.difference(x).union(y), bj.difference(y).union(x)], 1)?;
    push([bi.union(bj).difference(x.union(y)), x.union(y)], 1)?;
    if bi.len() > 2 {
        push([bi.difference(x), bj.union(x)], -1)?;
    }
    if bj.len() > 2 {
        push([bj.difference(y), bi.union(y)], -1)?;
    }
    Ok(out)
}

/// The skein action of `s_i` on a single noncrossing partition.
pub fn skein_si_basis(i: usize, pi: &SetPartition) -> Result<NcVector> {
    let n = pi.n();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let q = pi.apply_perm(&Permutation::adjacent(n, i))?;
    if q.is_noncrossing() {
        let mut v = NcVector::zero(n);
        v.add_term(q, rat(-1))?;
        Ok(v)
    } else {
        sigma(&q, i)
    }
}

/// The skein action of `s_i`, extended linearly.
pub fn skein_si(i: usize, v: &NcVector) -> Result<NcVector> {
    let mut out = NcVector::zero(v.n);
    for (p, c) in &v.terms {
        out.add_scaled(&skein_si_basis(i, p)?, c);
    }
    Ok(out)
}

/// The skein action of `w`, applying the letters of a reduced word
/// `w = s_{a_1} ⋯ s_{a_L}` from the right.
pub fn skein_act(w: &Permutation, v: &NcVector) -> Result<NcVector> {
    skein_act_word(&w.reduced_word(), v)
}

/// Applies `s_{a_1} ⋯ s_{a_L}` to `v`, rightmost letter first.
pub fn skein_act_word(word: &[usize], v: &NcVector) -> Result<NcVector> {
    let mut out = v.clone();
    for &a in word.iter().rev() {
        out = skein_si(a, &out)?;
    }
    Ok(out)
}

/// Exact solver for `F_π = Σ c_μ F_μ` over `μ ∈ NC(n, k)`.
#[derive(Clone, Debug)]
pub struct NcSolver {
    n: usize,
    k: usize,
    basis: Vec<SetPartition>,
    echelon: Echelon<Monomial>,
}

impl NcSolver {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let basis = enumerate(n, Some(k), None, true)?;
        let mut echelon = Echelon::with_tracking();
        for mu in &basis {
            if !echelon.insert(fermion_vec(&big_f(mu))) {
                return Err(Error::Inconsistent);
            }
        }
        Ok(NcSolver { n, k, basis, echelon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> &[SetPartition] {
        &self.basis
    }

    /// `p(π)` for a partition with `k` blocks.
    pub fn resolve(&self, pi: &SetPartition) -> Result<NcVector> {
        if pi.n() != self.n {
            return Err(Error::RankMismatch(self.n, pi.n()));
        }
        if pi.num_blocks() != self.k {
            return Err(Error::InvalidParameters(format!(
                "solver is for {} blocks, partition has {}",
                self.k,
                pi.num_blocks()
            )));
        }
        if pi.is_noncrossing() {
            return NcVector::basis(pi);
        }
        let x = self
            .echelon
            .solve(fermion_vec(&big_f(pi)))
            .ok_or(Error::Inconsistent)?;
        let mut out = NcVector::zero(self.n);
        for (idx, c) in x {
            out.add_term(self.basis[idx].clone(), c)?;
        }
        Ok(out)
    }
}

/// `p(π)` by an exact linear solve. Builds a fresh [`NcSolver`]; callers
/// resolving many partitions should keep one per `(n, k)`.
pub fn resolve_algebraic(pi: &SetPartition) -> Result<NcVector> {
    if pi.is_noncrossing() {
        return NcVector::basis(pi);
    }
    NcSolver::new(pi.n(), pi.num_blocks())?.resolve(pi)
}

/// The signed two-block pieces `(S, T, ε)` resolving the pair `{A / B}`.
///
/// With the cyclic decomposition `A_1, B_1, .., A_m, B_m` of `A ⊔ B` and
/// `m ≥ 2`, the pieces are the splits of the `2m` intervals into two
/// complementary cyclic arcs `S / T`, with `ε = 0` if a side has fewer than
/// two elements, `+1` if each arc holds an odd number of intervals, and
/// `-1` otherwise. Zero pieces are omitted. When `m < 2` the pair is already
/// noncrossing and is returned unchanged with `ε = 1`.
pub fn two_block_terms(a: Subset, b: Subset, n: usize) -> Result<Vec<(Subset, Subset, i32)>> {
    let d = cyclic_decomposition(a, b, n)?;
    if d.m() < 2 {
        return Ok(alloc::vec![(a, b, 1)]);
    }
    let iv = d.intervals();
    let len = iv.len();
    let mut out: Vec<(Subset, Subset, i32)> = Vec::new();
    for start in 0..len {
        for arc in 1..len {
            let s = (0..arc).fold(Subset::EMPTY, |acc, t| acc.union(iv[(start + t) % len]));
            let t = a.union(b).difference(s);
            if s.len() < 2 || t.len() < 2 {
                continue;
            }
            // Count each unordered split once, keyed by the side holding min(A ⊔ B).
            if !s.contains(a.union(b).min().expect("nonempty")) {
                continue;
            }
            if out.iter().any(|&(x, _, _)| x == s) {
                continue;
            }
            out.push((s, t, if arc % 2 == 1 { 1 } else { -1 }));
        }
    }
    out.sort_by(|x, y| x.0.lex_cmp(y.0));
    Ok(out)
}

/// [`two_block_terms`] as a vector over `[n]`, with every element outside
/// `A ⊔ B` a singleton block.
pub fn two_block_resolution(a: Subset, b: Subset, n: usize) -> Result<NcVector> {
    let rest: Vec<Subset> = Subset::full(n).difference(a.union(b)).iter().map(Subset::singleton).collect();
    let mut out = NcVector::zero(n);
    for (s, t, e) in two_block_terms(a, b, n)? {
        let mut blocks = rest.clone();
        blocks.push(s);
        blocks.push(t);
        out.add_term(SetPartition::from_subsets(n, blocks)?, rat(i64::from(e)))?;
    }
    Ok(out)
}

/// How [`resolve_greedy`] picks the next crossing pair of blocks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GreedyPolicy {
    /// The crossing pair minimal in `(min A, min B)`.
    #[default]
    LexMin,
    /// The crossing pair whose resolution leaves the smallest worst-case
    /// tangle, ties broken as in `LexMin`.
    MaxTangleReduction,
}

fn choose_pair(pi: &SetPartition, policy: GreedyPolicy) -> Result<Option<(usize, usize)>> {
    let pairs = pi.crossing_pairs();
    match policy {
        GreedyPolicy::LexMin => Ok(pairs.into_iter().next()),
        GreedyPolicy::MaxTangleReduction => {
            let mut best: Option<((usize, usize), usize)> = None;
            for (x, y) in pairs {
                let blocks = pi.blocks();
                let mut worst = 0;
                for (s, t, _) in two_block_terms(blocks[x], blocks[y], pi.n())? {
                    worst = worst.max(pi.replace_pair(x, y, &[s, t])?.tangle());
                }
                if best.is_none_or(|(_, w)| worst < w) {
                    best = Some(((x, y), worst));
                }
            }
            Ok(best.map(|b| b.0))
        }
    }
}

/// `p(π)` by resolving one crossing block pair at a time with
/// [`two_block_terms`], other blocks held fixed. Each step lowers the tangle.
pub fn resolve_greedy(pi: &SetPartition, policy: GreedyPolicy) -> Result<NcVector> {
    let mut memo = BTreeMap::new();
    greedy(pi, policy, &mut memo)
}

fn greedy(
    pi: &SetPartition,
    policy: GreedyPolicy,
    memo: &mut BTreeMap<SetPartition, NcVector>,
) -> Result<NcVector> {
    if let Some(v) = memo.get(pi) {
        return Ok(v.clone());
    }
    let out = match choose_pair(pi, policy)? {
        None => NcVector::basis(pi)?,
        Some((x, y)) => {
            let blocks = pi.blocks();
            let tangle = pi.tangle();
            let mut acc = NcVector::zero(pi.n());
            for (s, t, e) in two_block_terms(blocks[x], blocks[y], pi.n())? {
                let q = pi.replace_pair(x, y, &[s, t])?;
                debug_assert!(q.tangle() < tangle);
                acc.add_scaled(&greedy(&q, policy, memo)?, &rat(i64::from(e)));
            }
            acc
        }
    };
    memo.insert(pi.clone(), out.clone());
    Ok(out)
}

/// A dense integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: alloc::vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DegreeMismatch(self.cols, other.rows));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<i64> = (0..self.cols).map(|c| self.get(r, c)).collect();
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

fn to_i64(c: &Rational) -> Result<i64> {
    if !c.is_integer() {
        return Err(Error::Representation(format!("non-integer entry {c}")));
    }
    c.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Representation("entry exceeds 64 bits".into()))
}

/// The matrix of `v ↦ op(v)` on the span of `basis`; column `j` is the image
/// of `basis[j]`.
pub fn operator_matrix<F>(basis: &[SetPartition], op: F) -> Result<IntMatrix>
where
    F: Fn(&NcVector) -> Result<NcVector>,
{
    let index: BTreeMap<&SetPartition, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut m = IntMatrix::zeros(basis.len(), basis.len());
    for (j, p) in basis.iter().enumerate() {
        for (q, c) in op(&NcVector::basis(p)?)?.terms() {
            let &i = index
                .get(q)
                .ok_or_else(|| Error::Representation(format!("{q} is outside the basis")))?;
            m.set(i, j, to_i64(c)?);
        }
    }
    Ok(m)
}

/// The skein representation matrix of `w` on the span of `basis`, which
/// must be a union of `(k, m)` strata such as `NC(n)` or `NC(n, k, m)`.
pub fn rep_matrix(w: &Permutation, basis: &[SetPartition]) -> Result<IntMatrix> {
    let word = w.reduced_word();
    operator_matrix(basis, |v| skein_act_word(&word, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extalg::Fermion;
    use alloc::string::ToString;
    use alloc::vec;

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::from_blocks(n, blocks.iter().map(|b| b.iter().copied())).unwrap()
    }
    fn s(xs: &[usize]) -> Subset {
        Subset::from_elements(xs.iter().copied())
    }
    fn vec_of(n: usize, terms: &[(i64, &[&[usize]])]) -> NcVector {
        NcVector::from_terms(n, terms.iter().map(|(c, b)| (sp(n, b), rat(*c)))).unwrap()
    }

    /// `Σ c_μ F_μ` for a combination of partitions.
    fn fermion_of(v: &NcVector) -> Fermion {
        let mut f = Fermion::zero(v.n()).unwrap();
        for (p, c) in v.terms() {
            f.add_scaled(&big_f(p), c);
        }
        f
    }

    #[test]
    fn nc_vector_rejects_crossing() {
        assert!(NcVector::basis(&sp(4, &[&[1, 3], &[2, 4]])).is_err());
        let v = vec_of(4, &[(1, &[&[1, 2], &[3, 4]]), (-1, &[&[1, 2], &[3, 4]])]);
        assert!(v.is_zero());
        assert_eq!(v.to_string(), "0");
    }

    #[test]
    fn sigma_examples() {
        let v = sigma(&sp(4, &[&[1, 3], &[2, 4]]), 1).unwrap();
        assert_eq!(v, vec_of(4, &[(1, &[&[1, 4], &[2, 3]]), (1, &[&[1, 2], &[3, 4]])]));
        let v = sigma(&sp(5, &[&[1, 3, 5], &[2, 4]]), 3).unwrap();
        let expected = vec_of(
            5,
            &[(1, &[&[1, 4, 5], &[2, 3]]), (1, &[&[1, 2, 5], &[3, 4]]), (-1, &[&[1, 5], &[2, 3, 4]])],
        );
        assert_eq!(v, expected);
        assert_eq!(sigma(&sp(5, &[&[1, 3, 5], &[2, 4]]), 2).unwrap(), expected);
        assert!(sigma(&sp(5, &[&[1, 3, 5], &[2, 4]]), 1).is_err());
        assert!(sigma(&sp(4, &[&[1, 2], &[3, 4]]), 2).is_err());
        // Every adjacent swap uncrosses the chord pair; all give the same σ.
        let chord = sp(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(sigma(&chord, 2).unwrap(), sigma(&chord, 3).unwrap());
        assert!(sigma(&chord, 4).is_err());
    }

    #[test]
    fn sigma_is_independent_of_index_and_resolves_fermions() {
        for n in 4..=6 {
            for p in enumerate(n, None, None, false).unwrap() {
                let idx = p.almost_noncrossing_indices();
                if p.is_noncrossing() || idx.is_empty() {
                    continue;
                }
                let first = sigma(&p, idx[0]).unwrap();
                for &i in &idx[1..] {
                    assert_eq!(sigma(&p, i).unwrap(), first, "{p:?}");
                }
                assert!((&big_f(&p) + &fermion_of(&first)).is_zero(), "{p:?}");
            }
        }
    }

    #[test]
    fn skein_si_examples() {
        let v = skein_si(2, &vec_of(4, &[(1, &[&[1, 2], &[3, 4]])])).unwrap();
        assert_eq!(v, vec_of(4, &[(1, &[&[1, 4], &[2, 3]]), (1, &[&[1, 2], &[3, 4]])]));
        let p = vec_of(4, &[(1, &[&[1, 2], &[3], &[4]])]);
        assert_eq!(skein_si(1, &p).unwrap(), -p.clone());
        // Singleton blocks also pick up the sign.
        let q = vec_of(3, &[(1, &[&[1], &[2, 3]])]);
        assert_eq!(skein_si(1, &q).unwrap(), -vec_of(3, &[(1, &[&[2], &[1, 3]])]));
    }

    #[test]
    fn global_symmetries() {
        let pi = sp(6, &[&[1, 5, 6], &[2, 4], &[3]]);
        let c = Permutation::long_cycle(6);
        let v = skein_act(&c, &NcVector::basis(&pi).unwrap()).unwrap();
        assert_eq!(v, vec_of(6, &[(-1, &[&[1, 2, 6], &[3, 5], &[4]])]));
        let w0 = Permutation::longest(6);
        let v = skein_act(&w0, &NcVector::basis(&pi).unwrap()).unwrap();
        // (-1)^C(6,2) = -1
        assert_eq!(v, NcVector::basis(&pi.apply_perm(&w0).unwrap()).unwrap().scale(&rat(-1)));
        for p in enumerate(5, None, None, true).unwrap() {
            let v = skein_act(&Permutation::longest(5), &NcVector::basis(&p).unwrap()).unwrap();
            assert_eq!(v, NcVector::basis(&p.apply_perm(&Permutation::longest(5)).unwrap()).unwrap());
        }
    }

    #[test]
    fn local_symmetries() {
        let nc = enumerate(5, None, None, true).unwrap();
        for w in Permutation::all(5) {
            for p in &nc {
                let q = p.apply_perm(&w).unwrap();
                if q.is_noncrossing() {
                    let v = skein_act(&w, &NcVector::basis(p).unwrap()).unwrap();
                    assert_eq!(v, NcVector::basis(&q).unwrap().scale(&rat(i64::from(w.sign()))));
                }
            }
        }
    }

    #[test]
    fn action_is_independent_of_word() {
        let nc = enumerate(5, None, None, true).unwrap();
        for w in Permutation::all(5).iter().step_by(7) {
            let (r, l) = (w.reduced_word(), w.reduced_word_left());
            for p in nc.iter().step_by(3) {
                let b = NcVector::basis(p).unwrap();
                assert_eq!(skein_act_word(&r, &b).unwrap(), skein_act_word(&l, &b).unwrap());
            }
        }
    }

    #[test]
    fn skein_action_matches_fermions() {
        // s_i · F_μ = sign(s_i) F_{s_i μ} = -F_{s_i μ}, expanded through p.
        let n = 5;
        for p in enumerate(n, None, None, true).unwrap() {
            for i in 1..n {
                let v = skein_si(i, &NcVector::basis(&p).unwrap()).unwrap();
                let lhs = big_f(&p).act(&Permutation::adjacent(n, i)).unwrap();
                assert_eq!(lhs, fermion_of(&v));
            }
        }
    }

    #[test]
    fn chord_resolution() {
        let pi = sp(4, &[&[1, 3], &[2, 4]]);
        let expected = vec_of(4, &[(-1, &[&[1, 2], &[3, 4]]), (-1, &[&[1, 4], &[2, 3]])]);
        assert_eq!(resolve_algebraic(&pi).unwrap(), expected);
        assert_eq!(resolve_greedy(&pi, GreedyPolicy::LexMin).unwrap(), expected);
        assert_eq!(two_block_resolution(s(&[1, 3]), s(&[2, 4]), 4).unwrap(), expected);
        let nc = sp(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(resolve_algebraic(&nc).unwrap(), NcVector::basis(&nc).unwrap());
        assert_eq!(resolve_greedy(&nc, GreedyPolicy::LexMin).unwrap(), NcVector::basis(&nc).unwrap());
        assert_eq!(two_block_resolution(s(&[1, 2]), s(&[3, 4]), 4).unwrap(), NcVector::basis(&nc).unwrap());
    }

    #[test]
    fn chord_resolution_with_extra_point() {
        let pi = sp(5, &[&[1, 3], &[2, 4], &[5]]);
        let expected = vec_of(5, &[(-1, &[&[1, 2], &[3, 4], &[5]]), (-1, &[&[1, 4], &[2, 3], &[5]])]);
        assert_eq!(resolve_algebraic(&pi).unwrap(), expected);
    }

    #[test]
    fn two_block_example_sixteen() {
        let a = s(&[1, 2, 4, 8, 9, 10, 12, 13, 14, 15, 16]);
        let b = s(&[3, 5, 6, 7, 11]);
        let terms = two_block_terms(a, b, 16).unwrap();
        assert_eq!(terms.len(), 12);
        // Single-interval sides {3}, {4}, {11} never appear.
        for (x, y, _) in &terms {
            assert!(x.len() >= 2 && y.len() >= 2);
        }
        let odd = terms.iter().filter(|t| t.2 == 1).count();
        assert_eq!(odd, 6);
        let v = two_block_resolution(a, b, 16).unwrap();
        assert_eq!(v.len(), 12);
    }

    #[test]
    fn two_block_resolution_matches_fermions() {
        // F_{A/B} = Σ ε F_{S/T} for every pair of disjoint subsets covering [n].
        for n in 2..=7 {
            let full = Subset::full(n);
            for bits in 1u16..(1 << n) - 1 {
                let a = Subset(bits);
                let b = full.difference(a);
                if a.min() > b.min() {
                    continue;
                }
                let v = two_block_resolution(a, b, n).unwrap();
                let p = SetPartition::from_subsets(n, vec![a, b]).unwrap();
                assert_eq!(fermion_of(&v), big_f(&p), "{p:?}");
            }
        }
    }

    #[test]
    fn asterisk_resolution() {
        let pi = sp(8, &[&[1, 5], &[2, 6], &[3, 7], &[4, 8]]);
        let v = resolve_algebraic(&pi).unwrap();
        assert_eq!(v.len(), 14);
        let twos = v.terms().filter(|(_, c)| c.abs() == rat(2)).count();
        assert_eq!(twos, 2);
        assert!(v.terms().all(|(_, c)| c.abs() == rat(1) || c.abs() == rat(2)));
        assert_eq!(resolve_greedy(&pi, GreedyPolicy::LexMin).unwrap(), v);
        assert_eq!(resolve_greedy(&pi, GreedyPolicy::MaxTangleReduction).unwrap(), v);
    }

    #[test]
    fn greedy_matches_algebraic_on_small_sets() {
        for n in 1..=5 {
            let solvers: Vec<NcSolver> = (0..=n).map(|k| NcSolver::new(n, k).unwrap()).collect();
            for p in enumerate(n, None, None, false).unwrap() {
                let alg = solvers[p.num_blocks()].resolve(&p).unwrap();
                assert!(alg.is_integral());
                assert_eq!(resolve_greedy(&p, GreedyPolicy::LexMin).unwrap(), alg, "{p:?}");
                assert_eq!(resolve_greedy(&p, GreedyPolicy::MaxTangleReduction).unwrap(), alg);
                for (q, _) in alg.terms() {
                    assert_eq!(q.num_blocks(), p.num_blocks());
                    assert_eq!(q.num_singletons(), p.num_singletons());
                }
            }
        }
    }

    #[test]
    fn resolution_is_equivariant() {
        let n = 5;
        let solvers: Vec<NcSolver> = (0..=n).map(|k| NcSolver::new(n, k).unwrap()).collect();
        let parts = enumerate(n, None, None, false).unwrap();
        for (t, w) in Permutation::all(n).iter().enumerate().step_by(11) {
            for p in parts.iter().skip(t % 3).step_by(3) {
                let q = p.apply_perm(w).unwrap();
                let lhs = solvers[q.num_blocks()].resolve(&q).unwrap().scale(&rat(i64::from(w.sign())));
                let rhs = skein_act(w, &solvers[p.num_blocks()].resolve(p).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn coxeter_relations_small() {
        for n in 1..=5 {
            let basis = enumerate(n, None, None, true).unwrap();
            let m: Vec<IntMatrix> = (1..n).map(|i| rep_matrix(&Permutation::adjacent(n, i), &basis).unwrap()).collect();
            let id = IntMatrix::identity(basis.len());
            for i in 0..m.len() {
                assert_eq!(m[i].mul(&m[i]).unwrap(), id);
                for j in i + 2..m.len() {
                    assert_eq!(m[i].mul(&m[j]).unwrap(), m[j].mul(&m[i]).unwrap());
                }
                if i + 1 < m.len() {
                    let a = m[i].mul(&m[i + 1]).unwrap().mul(&m[i]).unwrap();
                    let b = m[i + 1].mul(&m[i]).unwrap().mul(&m[i + 1]).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
        assert_eq!(rep_matrix(&Permutation::identity(4), &enumerate(4, None, None, true).unwrap()).unwrap(), IntMatrix::identity(14));
    }

    #[test]
    fn rep_matrix_rejects_non_invariant_basis() {
        let basis = vec![sp(4, &[&[1, 2], &[3, 4]])];
        assert!(rep_matrix(&Permutation::adjacent(4, 2), &basis).is_err());
    }
}
