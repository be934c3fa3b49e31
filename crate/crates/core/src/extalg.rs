//! Exact arithmetic in the exterior algebra `∧{θ_1..θ_n, ξ_1..ξ_n}`.
//!
//! A basis monomial `θ_S · ξ_T` is stored as the pair of subsets `(S, T)`.
//! The canonical generator order is `θ_1 < .. < θ_n < ξ_1 < .. < ξ_n`, and
//! every sign below comes from counting transpositions against that order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subset::Subset;

pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// One of the `2n` anticommuting generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Theta(usize),
    Xi(usize),
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::Theta(i) | Generator::Xi(i) => i,
        }
    }
}

/// The θ-degree and ξ-degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub i: usize,
    pub j: usize,
}

impl Bidegree {
    pub fn new(i: usize, j: usize) -> Self {
        Bidegree { i, j }
    }
}

/// The canonical monomial `θ_S · ξ_T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub theta: Subset,
    pub xi: Subset,
}

/// Number of pairs `(x, y)` with `x ∈ xs`, `y ∈ ys`, `x > y`.
#[inline]
fn cross_inversions(xs: Subset, ys: Subset) -> usize {
    ys.iter().map(|y| xs.count_above(y)).sum()
}

/// Parity of the inversions of a word with distinct letters.
fn word_parity(word: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                odd = !odd;
            }
        }
    }
    odd
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        theta: Subset::EMPTY,
        xi: Subset::EMPTY,
    };

    pub fn new(theta: Subset, xi: Subset) -> Self {
        Monomial { theta, xi }
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::Theta(i) => Monomial::new(Subset::singleton(i), Subset::EMPTY),
            Generator::Xi(i) => Monomial::new(Subset::EMPTY, Subset::singleton(i)),
        }
    }

    pub fn bidegree(self) -> Bidegree {
        Bidegree::new(self.theta.len(), self.xi.len())
    }

    pub fn degree(self) -> usize {
        self.theta.len() + self.xi.len()
    }

    pub fn contains(self, g: Generator) -> bool {
        match g {
            Generator::Theta(i) => self.theta.contains(i),
            Generator::Xi(i) => self.xi.contains(i),
        }
    }

    /// `self ∧ other = ±m`, or `None` when a generator repeats. The flag is
    /// `true` for a minus sign.
    pub fn wedge(self, other: Monomial) -> Option<(Monomial, bool)> {
        if !self.theta.is_disjoint(other.theta) || !self.xi.is_disjoint(other.xi) {
            return None;
        }
        // θ_S ξ_T θ_S' ξ_T': move θ_S' left past ξ_T, then merge each alphabet.
        let swaps = self.xi.len() * other.theta.len()
            + cross_inversions(self.theta, other.theta)
            + cross_inversions(self.xi, other.xi);
        Some((
            Monomial::new(self.theta.union(other.theta), self.xi.union(other.xi)),
            swaps % 2 == 1,
        ))
    }

    /// `self ⊙ f` on monomials, characterised by `⟨self · m, f⟩ = ⟨m, self ⊙ f⟩`.
    pub fn contract(self, f: Monomial) -> Option<(Monomial, bool)> {
        if !self.theta.is_subset(f.theta) || !self.xi.is_subset(f.xi) {
            return None;
        }
        let rest = Monomial::new(f.theta.difference(self.theta), f.xi.difference(self.xi));
        let (_, neg) = self.wedge(rest).expect("disjoint by construction");
        Some((rest, neg))
    }

    /// `w · θ_S ξ_T = θ_{w(s_1)} .. θ_{w(s_a)} ξ_{w(t_1)} .. ξ_{w(t_b)}`, re-sorted.
    pub fn act(self, w: &Permutation) -> (Monomial, bool) {
        let th: Vec<usize> = self.theta.iter().map(|i| w.apply(i)).collect();
        let xi: Vec<usize> = self.xi.iter().map(|i| w.apply(i)).collect();
        let neg = word_parity(&th) ^ word_parity(&xi);
        (
            Monomial::new(Subset::from_elements(th), Subset::from_elements(xi)),
            neg,
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.theta
            .len()
            .cmp(&other.theta.len())
            .then(self.xi.len().cmp(&other.xi.len()))
            .then_with(|| self.theta.lex_cmp(other.theta))
            .then_with(|| self.xi.lex_cmp(other.xi))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of canonical monomials with rational
/// coefficients. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fermion {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn check_rank(n: usize) -> Result<()> {
    if n > crate::MAX_N {
        Err(Error::RankTooLarge(n))
    } else {
        Ok(())
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

pub(crate) fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Fermion {
    pub fn zero(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Fermion {
            n,
            terms: BTreeMap::new(),
        })
    }

    /// The unit `1`.
    pub fn one(n: usize) -> Result<Self> {
        Self::monomial(n, Monomial::ONE, rat(1))
    }

    pub fn monomial(n: usize, m: Monomial, c: Rational) -> Result<Self> {
        check_rank(n)?;
        let full = Subset::full(n);
        if !m.theta.is_subset(full) || !m.xi.is_subset(full) {
            let bad = m.theta.union(m.xi).difference(full).min().unwrap_or(0);
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, c);
        Ok(Fermion { n, terms })
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self> {
        check_index(n, g.index())?;
        Self::monomial(n, Monomial::generator(g), rat(1))
    }

    pub fn theta(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, Generator::Theta(i))
    }

    pub fn xi(n: usize, i: usize) -> Result<Self> {
        Self::generator(n, Generator::Xi(i))
    }

    /// `θ_1 θ_2 .. θ_n`.
    pub fn theta_top(n: usize) -> Result<Self> {
        Self::monomial(n, Monomial::new(Subset::full(n), Subset::EMPTY), rat(1))
    }

    /// Builds a fermion from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut f = Fermion::zero(n)?;
        let full = Subset::full(n);
        for (m, c) in terms {
            if !m.theta.is_subset(full) || !m.xi.is_subset(full) {
                let bad = m.theta.union(m.xi).difference(full).min().unwrap_or(0);
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            add_term(&mut f.terms, m, c);
        }
        Ok(f)
    }

    pub(crate) fn from_map(n: usize, terms: BTreeMap<Monomial, Rational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Fermion { n, terms }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn same_rank(&self, other: &Fermion) -> Result<()> {
        if self.n != other.n {
            Err(Error::RankMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn scale(&self, c: &Rational) -> Fermion {
        if c.is_zero() {
            return Fermion {
                n: self.n,
                terms: BTreeMap::new(),
            };
        }
        Fermion {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Fermion) -> Result<Fermion> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, *m, c.clone());
        }
        Ok(out)
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Fermion, c: &Rational) {
        assert_eq!(self.n, other.n, "mismatched ambient rank");
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            add_term(&mut self.terms, *m, x * c);
        }
    }

    /// The exterior product `self ∧ other`.
    pub fn wedge(&self, other: &Fermion) -> Result<Fermion> {
        self.same_rank(other)?;
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((m, neg)) = a.wedge(*b) {
                    let c = x * y;
                    add_term(&mut terms, m, if neg { -c } else { c });
                }
            }
        }
        Ok(Fermion { n: self.n, terms })
    }

    /// The contraction `self ⊙ f`.
    ///
    /// On a single generator this deletes the generator from each monomial of
    /// `f` with sign `(-1)^(s-1)`, `s` its position in the canonical
    /// `2n`-letter order. Products contract factor by factor starting from
    /// the leftmost, so that `⟨g · h, f⟩ = ⟨h, g ⊙ f⟩`.
    pub fn contract(&self, f: &Fermion) -> Result<Fermion> {
        self.same_rank(f)?;
        let mut terms = BTreeMap::new();
        for (g, x) in &self.terms {
            for (m, y) in &f.terms {
                if let Some((r, neg)) = g.contract(*m) {
                    let c = x * y;
                    add_term(&mut terms, r, if neg { -c } else { c });
                }
            }
        }
        Ok(Fermion { n: self.n, terms })
    }

    /// Contraction by a single generator.
    pub fn contract_generator(&self, g: Generator) -> Fermion {
        let gm = Monomial::generator(g);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if let Some((r, neg)) = gm.contract(*m) {
                add_term(&mut terms, r, if neg { -c.clone() } else { c.clone() });
            }
        }
        Fermion { n: self.n, terms }
    }

    /// Left multiplication by a single generator.
    pub fn mul_generator(&self, g: Generator) -> Fermion {
        let gm = Monomial::generator(g);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if let Some((r, neg)) = gm.wedge(*m) {
                add_term(&mut terms, r, if neg { -c.clone() } else { c.clone() });
            }
        }
        Fermion { n: self.n, terms }
    }

    /// The inner product making the monomial basis orthonormal.
    pub fn inner(&self, other: &Fermion) -> Result<Rational> {
        self.same_rank(other)?;
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rational::zero();
        for (m, c) in &small.terms {
            if let Some(d) = big.terms.get(m) {
                acc += c * d;
            }
        }
        Ok(acc)
    }

    /// The diagonal action `θ_i ↦ θ_{w(i)}`, `ξ_i ↦ ξ_{w(i)}`.
    pub fn act(&self, w: &Permutation) -> Result<Fermion> {
        if w.n() != self.n {
            return Err(Error::RankMismatch(self.n, w.n()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (r, neg) = m.act(w);
            add_term(&mut terms, r, if neg { -c.clone() } else { c.clone() });
        }
        Ok(Fermion { n: self.n, terms })
    }

    /// The projection onto bidegree `d`.
    pub fn bidegree_component(&self, d: Bidegree) -> Fermion {
        Fermion {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The set of bidegrees carrying a nonzero term.
    pub fn bidegrees(&self) -> Vec<Bidegree> {
        let mut v: Vec<Bidegree> = self.terms.keys().map(|m| m.bidegree()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `Some(d)` when every term has bidegree `d`.
    pub fn homogeneous_bidegree(&self) -> Option<Bidegree> {
        let b = self.bidegrees();
        (b.len() == 1).then(|| b[0])
    }

    /// Sets one generator to zero.
    pub fn substitute_zero(&self, g: Generator) -> Fermion {
        Fermion {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.contains(g))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Neg for Fermion {
    type Output = Fermion;
    fn neg(mut self) -> Fermion {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &Fermion {
    type Output = Fermion;
    fn neg(self) -> Fermion {
        -self.clone()
    }
}

impl AddAssign<&Fermion> for Fermion {
    fn add_assign(&mut self, rhs: &Fermion) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl SubAssign<&Fermion> for Fermion {
    fn sub_assign(&mut self, rhs: &Fermion) {
        self.add_scaled(rhs, &-Rational::one());
    }
}

impl Add<&Fermion> for &Fermion {
    type Output = Fermion;
    fn add(self, rhs: &Fermion) -> Fermion {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Fermion> for &Fermion {
    type Output = Fermion;
    fn sub(self, rhs: &Fermion) -> Fermion {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Fermion {
    type Output = Fermion;
    fn add(mut self, rhs: Fermion) -> Fermion {
        self += &rhs;
        self
    }
}

impl Sub for Fermion {
    type Output = Fermion;
    fn sub(mut self, rhs: Fermion) -> Fermion {
        self -= &rhs;
        self
    }
}

/// All monomials of bidegree `d` in rank `n`, in the canonical term order.
pub fn monomials_of_bidegree(n: usize, d: Bidegree) -> Vec<Monomial> {
    let thetas = subsets_of_size(n, d.i);
    let xis = subsets_of_size(n, d.j);
    let mut out = Vec::with_capacity(thetas.len() * xis.len());
    for &s in &thetas {
        for &t in &xis {
            out.push(Monomial::new(s, t));
        }
    }
    out.sort();
    out
}

/// All `size`-element subsets of `{1..n}`.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    for bits in 0u32..(1u32 << n) {
        if bits.count_ones() as usize == size {
            out.push(Subset(bits as u16));
        }
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.theta.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "t{i}")?;
            first = false;
        }
        for i in self.xi.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "x{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Text form: a signed sum such as `3/2*t1 t3 x2 - x1`, `0` for zero.
impl fmt::Display for Fermion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write_coefficient(f, &a)?;
            } else {
                if !a.is_one() {
                    write_coefficient(f, &a)?;
                    f.write_str("*")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Fermion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fermion[n={}]({})", self.n, self)
    }
}
