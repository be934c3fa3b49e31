//! The commutative quadratic model: the polynomial ring `R` on variables
//! `y_B` (`B ⊆ [n]` nonempty, bidegree `(|B|, 1)`), the ideal `J` of
//! products with overlapping supports and the ideal `I` of crossing
//! relations `y_A y_B - Σ ε(S,T) y_S y_T`.
//!
//! `J` is never built: a [`DisjointMonomial`] can only hold disjoint
//! supports, which is exactly a basis of `R/J`. Reduction modulo `I` rewrites
//! crossing pairs until only noncrossing supports remain.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::extalg::{rat, Fermion, Monomial, Rational};
use crate::fermions::rho_block;
use crate::linalg::{fermion_vec, rank};
use crate::numbers::{binomial, narayana, stirling2};
use crate::setpart::{enumerate, SetPartition};
use crate::skein::two_block_terms;
use crate::subset::{crosses, Subset};

/// A product `y_{B_1} ⋯ y_{B_k}` of pairwise disjoint supports, kept sorted
/// by minimum element. The empty product is `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DisjointMonomial {
    n: usize,
    supports: Vec<Subset>,
}

impl DisjointMonomial {
    pub fn new(n: usize, mut supports: Vec<Subset>) -> Result<Self> {
        if n > crate::MAX_N {
            return Err(Error::RankTooLarge(n));
        }
        let full = Subset::full(n);
        let mut seen = Subset::EMPTY;
        for s in &supports {
            if s.is_empty() {
                return Err(Error::EmptyBlock);
            }
            if !s.is_subset(full) {
                let bad = s.difference(full).min().unwrap_or(0);
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            if !seen.is_disjoint(*s) {
                return Err(Error::Overlapping);
            }
            seen = seen.union(*s);
        }
        supports.sort_by_key(|s| s.min());
        Ok(DisjointMonomial { n, supports })
    }

    pub fn one(n: usize) -> Self {
        DisjointMonomial { n, supports: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn supports(&self) -> &[Subset] {
        &self.supports
    }

    /// The union of the supports.
    pub fn ground(&self) -> Subset {
        self.supports.iter().fold(Subset::EMPTY, |a, s| a.union(*s))
    }

    /// `(q-degree, t-degree) = (|∪B|, number of factors)`.
    pub fn bidegree(&self) -> (usize, usize) {
        (self.ground().len(), self.supports.len())
    }

    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.supports.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                if crosses(self.supports[a], self.supports[b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_pairs().is_empty()
    }

    fn replace_pair(&self, a: usize, b: usize, new: [Subset; 2]) -> DisjointMonomial {
        let mut s: Vec<Subset> = self
            .supports
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != a && i != b)
            .map(|(_, x)| *x)
            .collect();
        s.extend(new);
        s.sort_by_key(|x| x.min());
        DisjointMonomial { n: self.n, supports: s }
    }

    /// The image `ρ_{B_1} ∘ ⋯ ∘ ρ_{B_k} (θ_U)` with `U` the union of the
    /// supports, under which `R/(I+J)` acts on the exterior algebra.
    pub fn evaluate(&self) -> Fermion {
        let u = self.ground();
        let mut f = Fermion::monomial(self.n, Monomial::new(u, Subset::EMPTY), rat(1)).expect("rank checked");
        for &b in &self.supports {
            f = rho_block(b, &f).expect("supports are valid");
        }
        f
    }
}

impl Ord for DisjointMonomial {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then(self.bidegree().cmp(&other.bidegree()))
            .then_with(|| {
                self.supports
                    .iter()
                    .zip(&other.supports)
                    .map(|(a, b)| a.lex_cmp(*b))
                    .find(|o| o.is_ne())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
    }
}

impl PartialOrd for DisjointMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DisjointMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.supports.is_empty() {
            return f.write_str("1");
        }
        for (k, s) in self.supports.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str("y[")?;
            write!(f, "{s}")?;
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DisjointMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A linear combination of disjoint-support monomials.
pub type QuadCombination = BTreeMap<DisjointMonomial, Rational>;

/// Which crossing pair [`reduce_with`] rewrites first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RewriteOrder {
    #[default]
    FirstPair,
    LastPair,
}

/// Rewrites `m` into noncrossing monomials modulo `I`.
pub fn reduce(m: &DisjointMonomial) -> QuadCombination {
    reduce_with(m, RewriteOrder::FirstPair)
}

pub fn reduce_with(m: &DisjointMonomial, order: RewriteOrder) -> QuadCombination {
    let mut memo = BTreeMap::new();
    reduce_memo(m, order, &mut memo)
}

fn reduce_memo(
    m: &DisjointMonomial,
    order: RewriteOrder,
    memo: &mut BTreeMap<DisjointMonomial, QuadCombination>,
) -> QuadCombination {
    if let Some(v) = memo.get(m) {
        return v.clone();
    }
    let pairs = m.crossing_pairs();
    let pick = match order {
        RewriteOrder::FirstPair => pairs.first(),
        RewriteOrder::LastPair => pairs.last(),
    };
    let out = match pick {
        None => {
            let mut v = QuadCombination::new();
            v.insert(m.clone(), rat(1));
            v
        }
        Some(&(a, b)) => {
            let mut acc = QuadCombination::new();
            let terms = two_block_terms(m.supports[a], m.supports[b], m.n).expect("disjoint supports");
            for (s, t, e) in terms {
                for (q, c) in reduce_memo(&m.replace_pair(a, b, [s, t]), order, memo) {
                    let entry = acc.entry(q.clone()).or_insert_with(Rational::zero);
                    *entry += c * rat(i64::from(e));
                    if entry.is_zero() {
                        acc.remove(&q);
                    }
                }
            }
            acc
        }
    };
    memo.insert(m.clone(), out.clone());
    out
}

/// Which quotient [`hilbert_series`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quotient {
    /// `R/J`: disjoint supports.
    ModJ,
    /// `R/(I+J)`: disjoint and noncrossing supports.
    ModIJ,
}

/// Dense table `h[m][k]`: the dimension of the `q^m t^k` component,
/// `C(n,m)·Stir(m,k)` for `R/J` and `C(n,m)·Nar(m,k)` for `R/(I+J)`.
pub fn hilbert_series(n: usize, which: Quotient) -> Result<Vec<Vec<u128>>> {
    if n > crate::MAX_N {
        return Err(Error::RankTooLarge(n));
    }
    let mut h = vec![vec![0u128; n + 1]; n + 1];
    for m in 0..=n {
        for k in 0..=m {
            let inner = match which {
                Quotient::ModJ => stirling2(m, k),
                Quotient::ModIJ => narayana(m, k),
            };
            h[m][k] = binomial(n, m) * inner;
        }
    }
    Ok(h)
}

/// The standard monomials on ground set `u`: all (noncrossing, for `R/(I+J)`)
/// partitions of `u` read as products of `y_B`.
pub fn standard_monomials(n: usize, u: Subset, which: Quotient) -> Result<Vec<DisjointMonomial>> {
    let elems = u.to_vec();
    let parts = enumerate(elems.len(), None, None, which == Quotient::ModIJ)?;
    parts
        .iter()
        .map(|p| {
            let supports = p.blocks().iter().map(|b| b.map(|i| elems[i - 1])).collect();
            DisjointMonomial::new(n, supports)
        })
        .collect()
}

/// [`hilbert_series`] recomputed by listing standard monomials.
pub fn hilbert_series_enumerated(n: usize, which: Quotient) -> Result<Vec<Vec<u128>>> {
    if n > crate::MAX_N {
        return Err(Error::RankTooLarge(n));
    }
    let mut h = vec![vec![0u128; n + 1]; n + 1];
    for bits in 0u32..(1u32 << n) {
        for m in standard_monomials(n, Subset(bits as u16), which)? {
            let (q, t) = m.bidegree();
            h[q][t] += 1;
        }
    }
    Ok(h)
}

/// For every ground set `U ⊆ [n]`: the noncrossing monomials on `U` have
/// independent images in the exterior algebra, and every disjoint monomial
/// on `U` has the same image as its reduction.
pub fn check_basis(n: usize) -> Result<bool> {
    for bits in 0u32..(1u32 << n) {
        let u = Subset(bits as u16);
        let nc = standard_monomials(n, u, Quotient::ModIJ)?;
        if rank(nc.iter().map(|m| fermion_vec(&m.evaluate()))) != nc.len() {
            return Ok(false);
        }
        for m in standard_monomials(n, u, Quotient::ModJ)? {
            if m.evaluate() != evaluate_combination(n, &reduce(&m)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether both rewrite orders give the same reduction for every disjoint
/// monomial covering some `U ⊆ [n]`.
pub fn check_confluence(n: usize) -> Result<bool> {
    for bits in 0u32..(1u32 << n) {
        for m in standard_monomials(n, Subset(bits as u16), Quotient::ModJ)? {
            if reduce_with(&m, RewriteOrder::FirstPair) != reduce_with(&m, RewriteOrder::LastPair) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Σ c · evaluate(m)`.
pub fn evaluate_combination(n: usize, v: &QuadCombination) -> Fermion {
    let mut f = Fermion::zero(n).expect("rank checked");
    for (m, c) in v {
        f.add_scaled(&m.evaluate(), c);
    }
    f
}

/// The monomial `Π y_B` over the blocks of a partition of `[n]`.
pub fn from_partition(pi: &SetPartition) -> DisjointMonomial {
    DisjointMonomial {
        n: pi.n(),
        supports: pi.blocks().to_vec(),
    }
}

/// Reads a reduced combination whose monomials cover all of `[n]` as a
/// combination of partitions.
pub fn to_partitions(n: usize, v: &QuadCombination) -> Result<Vec<(SetPartition, Rational)>> {
    v.iter()
        .map(|(m, c)| {
            let p = SetPartition::from_subsets(n, m.supports.clone())
                .map_err(|_| Error::Precondition(format!("{m} does not cover [{n}]")))?;
            Ok((p, c.clone()))
        })
        .collect()
}
