//! Characters of symmetric groups and Schur expansions: character tables by
//! the Murnaghan–Nakayama rule, Frobenius images of integer representations,
//! Kronecker products, multiplication by `s_{(1^m)}` and dominance order.
//!
//! Class functions are vectors indexed like the columns of a
//! [`CharacterTable`]. Everything is exact integer arithmetic.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::numbers::factorial;
use crate::perm::Permutation;
use num_traits::{ToPrimitive, Zero};

use crate::extalg::Rational;
use crate::setpart::SetPartition;
use crate::skein::{skein_act_word, IntMatrix, NcVector};

/// Largest `n` for which character tables are built.
pub const MAX_CHARACTER_N: usize = 10;

/// A weakly decreasing list of positive parts.
///
/// Ordered reverse-lexicographically, so `(3) < (2,1) < (1,1,1)` and sums
/// print with the most dominant shapes first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl IntPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameters("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(IntPartition { parts })
    }

    pub fn empty() -> Self {
        IntPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> IntPartition {
        let w = self.part(0);
        IntPartition {
            parts: (0..w).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect(),
        }
    }

    /// Partitions of `n`, in the order of [`IntPartition`]'s `Ord`.
    pub fn all(n: usize) -> Vec<IntPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
            if rem == 0 {
                out.push(IntPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        go(n, n, &mut cur, &mut out);
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`, the centralizer order of the class `λ`.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_default() += 1;
            z *= p as u128;
        }
        for &m in counts.values() {
            z *= factorial(m);
        }
        z
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if self.parts.iter().map(|&p| p - 1).sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// The hook `(a, 1^b)`, or `None` when `a < 1` (read as zero). `(0)` with
/// `b = 0` is the empty partition.
pub fn hook(a: i64, b: i64) -> Option<IntPartition> {
    if b < 0 {
        return None;
    }
    if a == 0 && b == 0 {
        return Some(IntPartition::empty());
    }
    if a < 1 {
        return None;
    }
    let mut parts = vec![a as usize];
    parts.extend(core::iter::repeat_n(1, b as usize));
    Some(IntPartition { parts })
}

/// The flag shape `(a, a, 1^b)`, or `None` unless `b ≥ 0` and `a ≥ 1`;
/// `a = b = 0` gives the empty partition.
pub fn flag(a: i64, b: i64) -> Option<IntPartition> {
    if b < 0 {
        return None;
    }
    if a == 0 && b == 0 {
        return Some(IntPartition::empty());
    }
    if a < 1 {
        return None;
    }
    let mut parts = vec![a as usize, a as usize];
    parts.extend(core::iter::repeat_n(1, b as usize));
    Some(IntPartition { parts })
}

impl Ord for IntPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for IntPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `(5,4,1)`; the empty partition prints as `()`.
impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `λ ≤ μ` in dominance order.
pub fn dominance_leq(lambda: &IntPartition, mu: &IntPartition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::DegreeMismatch(lambda.size(), mu.size()));
    }
    let (mut a, mut b) = (0, 0);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.part(i);
        b += mu.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An integer combination `Σ c_λ s_λ` of Schur functions of one degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFunc {
    n: usize,
    coeffs: BTreeMap<IntPartition, i64>,
}

impl SymFunc {
    pub fn zero(n: usize) -> Self {
        SymFunc {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn schur(lambda: IntPartition) -> Self {
        let mut f = SymFunc::zero(lambda.size());
        f.coeffs.insert(lambda, 1);
        f
    }

    /// `s_λ`, or zero of degree `n` when the shape is missing.
    pub fn schur_or_zero(lambda: Option<IntPartition>, n: usize) -> Self {
        lambda.map_or_else(|| SymFunc::zero(n), SymFunc::schur)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, lambda: &IntPartition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IntPartition, &i64)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: IntPartition, c: i64) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::DegreeMismatch(self.n, lambda.size()));
        }
        let e = self.coeffs.entry(lambda.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&lambda);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SymFunc, sign: i64) -> Result<SymFunc> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), sign * c)?;
        }
        Ok(out)
    }

    /// The character `Σ c_λ χ^λ` as a class function.
    pub fn character(&self, table: &CharacterTable) -> Result<Vec<i128>> {
        if table.n != self.n {
            return Err(Error::DegreeMismatch(table.n, self.n));
        }
        let mut chi = vec![0i128; table.classes.len()];
        for (l, &c) in &self.coeffs {
            let row = table.row(l);
            for (x, &v) in chi.iter_mut().zip(&table.values[row]) {
                *x += i128::from(c) * i128::from(v);
            }
        }
        Ok(chi)
    }
}

/// `3*s(5,4) - s(4,4,1)`; zero prints as `0`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, &c)) in self.coeffs.iter().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Irreducible characters `χ^λ(μ)` of `S_n`. Rows and columns are both
/// indexed by [`IntPartition::all`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<IntPartition>,
    index: BTreeMap<IntPartition, usize>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u128>,
}

/// `χ^λ(μ)` for the beta-set `beta` of `λ`, stripping rim hooks of the
/// lengths in `mu` from the front.
fn mn_value(beta: &mut Vec<usize>, mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for idx in 0..beta.len() {
        let b = beta[idx];
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // Removing a rim hook of length r moves bead b to b - r; the height
        // is the number of beads jumped over.
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        beta[idx] = b - r;
        let v = mn_value(beta, rest);
        beta[idx] = b;
        total += if height % 2 == 0 { v } else { -v };
    }
    total
}

impl CharacterTable {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_CHARACTER_N {
            return Err(Error::InvalidParameters(format!(
                "character tables are limited to n ≤ {MAX_CHARACTER_N}"
            )));
        }
        let classes = IntPartition::all(n);
        let fact = factorial(n);
        let class_sizes = classes.iter().map(|mu| fact / mu.z()).collect();
        let mut values = Vec::with_capacity(classes.len());
        for lambda in &classes {
            let l = lambda.len();
            let mut beta: Vec<usize> = lambda.parts.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
            values.push(classes.iter().map(|mu| mn_value(&mut beta, &mu.parts)).collect());
        }
        let index = classes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(CharacterTable {
            n,
            classes,
            index,
            values,
            class_sizes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[IntPartition] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u128] {
        &self.class_sizes
    }

    fn row(&self, lambda: &IntPartition) -> usize {
        self.index[lambda]
    }

    /// `χ^λ(μ)`.
    pub fn value(&self, lambda: &IntPartition, mu: &IntPartition) -> i64 {
        self.values[self.row(lambda)][self.row(mu)]
    }

    /// `⟨χ, ψ⟩ = (1/n!) Σ_μ |C_μ| χ(μ) ψ(μ)`, or `None` if not an integer.
    pub fn inner(&self, chi: &[i128], psi: &[i128]) -> Option<i128> {
        let mut acc: i128 = 0;
        for ((c, &a), &b) in self.class_sizes.iter().zip(chi).zip(psi) {
            acc += *c as i128 * a * b;
        }
        let fact = factorial(self.n) as i128;
        (acc % fact == 0).then_some(acc / fact)
    }

    /// Expands a class function in irreducible characters. Fails unless every
    /// multiplicity is an integer.
    pub fn decompose(&self, chi: &[i128]) -> Result<SymFunc> {
        if chi.len() != self.classes.len() {
            return Err(Error::DegreeMismatch(self.classes.len(), chi.len()));
        }
        let mut out = SymFunc::zero(self.n);
        for (i, lambda) in self.classes.iter().enumerate() {
            let row: Vec<i128> = self.values[i].iter().map(|&v| i128::from(v)).collect();
            let c = self
                .inner(&row, chi)
                .ok_or_else(|| Error::Representation(format!("non-integer multiplicity of {lambda}")))?;
            let c = i64::try_from(c).map_err(|_| Error::Representation("multiplicity overflow".into()))?;
            out.add_term(lambda.clone(), c)?;
        }
        Ok(out)
    }
}

/// `a * b`, the Kronecker (internal) product.
pub fn kronecker(a: &SymFunc, b: &SymFunc, table: &CharacterTable) -> Result<SymFunc> {
    if a.n != b.n {
        return Err(Error::DegreeMismatch(a.n, b.n));
    }
    let (x, y) = (a.character(table)?, b.character(table)?);
    let prod: Vec<i128> = x.iter().zip(&y).map(|(p, q)| p * q).collect();
    table.decompose(&prod)
}

/// All shapes obtained from `lambda` by adding `m` cells, no two in one row.
pub fn add_vertical_strip(lambda: &IntPartition, m: usize) -> Vec<IntPartition> {
    let rows = lambda.len() + m;
    let mut out = Vec::new();
    let mut add = vec![0usize; rows];
    fn go(i: usize, left: usize, lambda: &IntPartition, add: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if i == add.len() {
            if left == 0 {
                let parts: Vec<usize> = (0..add.len()).map(|r| lambda.part(r) + add[r]).filter(|&p| p > 0).collect();
                out.push(IntPartition { parts });
            }
            return;
        }
        for a in 0..=left.min(1) {
            // The new row length must not exceed the one above.
            let new = lambda.part(i) + a;
            if i > 0 && new > lambda.part(i - 1) + add[i - 1] {
                continue;
            }
            add[i] = a;
            go(i + 1, left - a, lambda, add, out);
        }
        add[i] = 0;
    }
    go(0, m, lambda, &mut add, &mut out);
    out
}

/// `a · s_{(1^m)}` by the dual Pieri rule.
pub fn pieri_vertical(a: &SymFunc, m: usize) -> SymFunc {
    let mut out = SymFunc::zero(a.n + m);
    for (lambda, &c) in &a.coeffs {
        for mu in add_vertical_strip(lambda, m) {
            out.add_term(mu, c).expect("degree n + m");
        }
    }
    out
}

/// Checks `s_i² = e`, `s_i s_j = s_j s_i` for `|i - j| > 1` and the braid
/// relation on the generator matrices `gens[i-1] = ρ(s_i)`.
pub fn check_coxeter(gens: &[IntMatrix]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(true);
    };
    let id = IntMatrix::identity(first.rows());
    for i in 0..gens.len() {
        if gens[i].mul(&gens[i])? != id {
            return Ok(false);
        }
        for j in i + 2..gens.len() {
            if gens[i].mul(&gens[j])? != gens[j].mul(&gens[i])? {
                return Ok(false);
            }
        }
        if i + 1 < gens.len() {
            let a = gens[i].mul(&gens[i + 1])?.mul(&gens[i])?;
            let b = gens[i + 1].mul(&gens[i])?.mul(&gens[i + 1])?;
            if a != b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Frobenius image of the representation generated by
/// `gens[i-1] = ρ(s_i)`, from traces on one element per conjugacy class.
pub fn frobenius_from_rep(gens: &[IntMatrix], table: &CharacterTable) -> Result<SymFunc> {
    let n = table.n();
    if gens.len() != n.saturating_sub(1) {
        return Err(Error::Representation(format!(
            "expected {} generators, got {}",
            n.saturating_sub(1),
            gens.len()
        )));
    }
    let dim = gens.first().map_or(1, |g| g.rows());
    if gens.iter().any(|g| g.rows() != dim || g.cols() != dim) {
        return Err(Error::Representation("generators must be square of one size".into()));
    }
    if !check_coxeter(gens)? {
        return Err(Error::Representation("Coxeter relations fail".into()));
    }
    let mut chi = Vec::with_capacity(table.classes().len());
    for mu in table.classes() {
        let mut m = IntMatrix::identity(dim);
        for &a in &Permutation::cycle_type_word(mu.parts()) {
            m = m.mul(&gens[a - 1])?;
        }
        chi.push(i128::from(m.trace()));
    }
    let f = table.decompose(&chi)?;
    if f.terms().any(|(_, &c)| c < 0) {
        return Err(Error::Representation("negative multiplicity".into()));
    }
    Ok(f)
}

/// Trace of the skein action of `s_{a_1} ⋯ s_{a_L}` on the span of `basis`,
/// computed one basis vector at a time without forming matrices.
pub fn skein_trace(word: &[usize], basis: &[SetPartition]) -> Result<i64> {
    let mut tr = Rational::zero();
    for pi in basis {
        tr += skein_act_word(word, &NcVector::basis(pi)?)?.coefficient(pi);
    }
    if !tr.is_integer() {
        return Err(Error::Representation(format!("non-integer trace {tr}")));
    }
    tr.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Representation("trace exceeds 64 bits".into()))
}

/// The Frobenius image of the skein module on `basis`, a union of `(k, m)`
/// strata, from [`skein_trace`] on one element per class.
pub fn skein_frobenius(basis: &[SetPartition], table: &CharacterTable) -> Result<SymFunc> {
    let chi = table
        .classes()
        .iter()
        .map(|mu| skein_trace(&Permutation::cycle_type_word(mu.parts()), basis).map(i128::from))
        .collect::<Result<Vec<_>>>()?;
    table.decompose(&chi)
}

/// `Σ_m s_{(k-m,k-m,1^{n-2k+m})} · s_{(1^m)}`, the Frobenius image of the
/// skein module on noncrossing partitions of `[n]` with `k` blocks.
pub fn nc_frobenius(n: usize, k: usize) -> SymFunc {
    let mut out = SymFunc::zero(n);
    for m in 0..=k {
        out = out
            .checked_add(&nc_stratum_frobenius(n, k, m), 1)
            .expect("same degree");
    }
    out
}

/// `s_{(k-m,k-m,1^{n-2k+m})} · s_{(1^m)}`, the image of the stratum with `m`
/// singleton blocks.
pub fn nc_stratum_frobenius(n: usize, k: usize, m: usize) -> SymFunc {
    let (n, k, m) = (n as i64, k as i64, m as i64);
    match flag(k - m, n - 2 * k + m) {
        Some(shape) => pieri_vertical(&SymFunc::schur(shape), m as usize),
        None => SymFunc::zero(n as usize),
    }
}

/// `s_{(n-i,1^i)} * s_{(n-j,1^j)} - s_{(n-i+1,1^{i-1})} * s_{(n-j+1,1^{j-1})}`
/// for `i + j < n`, zero otherwise: the image of the fermionic diagonal
/// coinvariants in bidegree `(i, j)`.
///
/// Conjugating both factors of the subtracted product shows that on the
/// extreme diagonal `i + j = n - 1` this equals the form with `i + 1, j + 1`.
pub fn fdr_frobenius(n: usize, i: usize, j: usize, table: &CharacterTable) -> Result<SymFunc> {
    if i + j >= n {
        return Ok(SymFunc::zero(n));
    }
    let hook_product = |a: i64, b: i64| -> Result<SymFunc> {
        let n = n as i64;
        match (hook(n - a, a), hook(n - b, b)) {
            (Some(x), Some(y)) if x.size() == y.size() => kronecker(&SymFunc::schur(x), &SymFunc::schur(y), table),
            _ => Ok(SymFunc::zero(n as usize)),
        }
    };
    let (i, j) = (i as i64, j as i64);
    hook_product(i, j)?.checked_add(&hook_product(i - 1, j - 1)?, -1)
}

/// Right side of the hook Kronecker identity for `NC(n, k)`:
/// `s_{(k,1^{n-k})} * s_{(n-k+1,1^{k-1})} - s_{(k-1,1^{n-k+1})} * s_{(n-k,1^k)}`.
pub fn hook_kronecker_difference(n: usize, k: usize, table: &CharacterTable) -> Result<SymFunc> {
    let (ni, ki) = (n as i64, k as i64);
    let term = |a: Option<IntPartition>, b: Option<IntPartition>| -> Result<SymFunc> {
        match (a, b) {
            (Some(x), Some(y)) => kronecker(&SymFunc::schur(x), &SymFunc::schur(y), table),
            _ => Ok(SymFunc::zero(n)),
        }
    };
    let first = term(hook(ki, ni - ki), hook(ni - ki + 1, ki - 1))?;
    let second = term(hook(ki - 1, ni - ki + 1), hook(ni - ki, ki))?;
    first.checked_add(&second, -1)
}
