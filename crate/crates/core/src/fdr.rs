//! The fermionic diagonal coinvariant ring: the exterior algebra modulo the
//! ideal generated by the invariants `θ = Σ θ_i`, `ξ = Σ ξ_i` and
//! `δ = Σ θ_i ξ_i`.
//!
//! The quotient is never built. Every statement about it is reduced to the
//! rank of an explicit spanning set inside one bidegree slice.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::extalg::{monomials_of_bidegree, subsets_of_size, Bidegree, Fermion, Monomial, Rational};
use crate::fermions::{big_f, small_f, xi_sum};
use crate::linalg::{fermion_vec, Echelon};
use crate::numbers::{binomial, binomial_signed, narayana};
use crate::setpart::{enumerate, SetPartition};
use crate::MAX_N;

/// `(θ, ξ, δ)` in rank `n`.
pub fn invariant_generators(n: usize) -> Result<(Fermion, Fermion, Fermion)> {
    let mut theta = Fermion::zero(n)?;
    let mut delta = Fermion::zero(n)?;
    for i in 1..=n {
        let t = Fermion::theta(n, i)?;
        delta += &t.wedge(&Fermion::xi(n, i)?)?;
        theta += &t;
    }
    Ok((theta, xi_sum(n), delta))
}

fn check_bidegree(n: usize, i: usize, j: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::RankTooLarge(n));
    }
    if i > n || j > n {
        return Err(Error::InvalidParameters(alloc::format!("bidegree ({i},{j}) exceeds n = {n}")));
    }
    Ok(())
}

/// Spanning set of the ideal in bidegree `(i, j)`: products of each invariant
/// with every monomial of the complementary bidegree.
fn ideal_spanning_set(n: usize, i: usize, j: usize) -> Result<Vec<Fermion>> {
    let (theta, xi, delta) = invariant_generators(n)?;
    let mut out = Vec::new();
    let mut multiply = |g: &Fermion, di: usize, dj: usize| -> Result<()> {
        if i < di || j < dj {
            return Ok(());
        }
        for m in monomials_of_bidegree(n, Bidegree::new(i - di, j - dj)) {
            let p = g.wedge(&Fermion::monomial(n, m, Rational::from_integer(1.into()))?)?;
            if !p.is_zero() {
                out.push(p);
            }
        }
        Ok(())
    };
    multiply(&theta, 1, 0)?;
    multiply(&xi, 0, 1)?;
    multiply(&delta, 1, 1)?;
    Ok(out)
}

fn ideal_echelon(n: usize, i: usize, j: usize) -> Result<Echelon<Monomial>> {
    let mut e = Echelon::new();
    for f in ideal_spanning_set(n, i, j)? {
        e.insert(fermion_vec(&f));
    }
    Ok(e)
}

/// Dimension of the ideal in bidegree `(i, j)`.
pub fn ideal_slice_dimension(n: usize, i: usize, j: usize) -> Result<usize> {
    check_bidegree(n, i, j)?;
    Ok(ideal_echelon(n, i, j)?.rank())
}

/// Dimension of the quotient in bidegree `(i, j)`, by row reduction.
pub fn fdr_dimension(n: usize, i: usize, j: usize) -> Result<usize> {
    check_bidegree(n, i, j)?;
    let full = binomial(n, i) * binomial(n, j);
    Ok(full as usize - ideal_slice_dimension(n, i, j)?)
}

/// `C(n-1,i)C(n-1,j) - C(n-1,i-1)C(n-1,j-1)` for `i + j < n`, else 0.
///
/// On the extreme diagonal `i + j = n - 1` this agrees with the shifted form
/// `C(n-1,i)C(n-1,j) - C(n-1,i+1)C(n-1,j+1)`, which elsewhere can go negative.
pub fn fdr_dimension_closed(n: usize, i: usize, j: usize) -> u128 {
    if n == 0 || i + j >= n {
        return 0;
    }
    let (m, i, j) = (n as i64 - 1, i as i64, j as i64);
    binomial_signed(m, i) * binomial_signed(m, j) - binomial_signed(m, i - 1) * binomial_signed(m, j - 1)
}

/// `C(n-1,i)C(n-1,j) - C(n-1,i+1)C(n-1,j+1)` as a signed integer, for
/// comparison with [`fdr_dimension_closed`].
pub fn fdr_dimension_shifted(n: usize, i: usize, j: usize) -> i128 {
    if n == 0 || i + j >= n {
        return 0;
    }
    let (m, i, j) = (n as i64 - 1, i as i64, j as i64);
    (binomial_signed(m, i) * binomial_signed(m, j)) as i128
        - (binomial_signed(m, i + 1) * binomial_signed(m, j + 1)) as i128
}

/// The full table `dims[i][j]`, `0 ≤ i, j ≤ n`.
pub fn fdr_dimension_table(n: usize) -> Result<Vec<Vec<usize>>> {
    (0..=n).map(|i| (0..=n).map(|j| fdr_dimension(n, i, j)).collect()).collect()
}

fn nc_small_fermions(n: usize, k: usize) -> Result<Vec<Fermion>> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(alloc::format!("need 1 ≤ k ≤ n, got k = {k}, n = {n}")));
    }
    Ok(enumerate(n, Some(k), None, true)?.iter().map(small_f).collect())
}

/// Whether the fermions `fs`, all of bidegree `(n-k, k-1)`, stay linearly
/// independent modulo the ideal and have `Nar(n,k)` members.
pub fn descends_independently(n: usize, k: usize, fs: &[Fermion]) -> Result<bool> {
    let (i, j) = (n - k, k - 1);
    let mut e = ideal_echelon(n, i, j)?;
    let ideal = e.rank();
    for f in fs {
        if f.homogeneous_bidegree().is_some_and(|d| d != Bidegree::new(i, j)) {
            return Ok(false);
        }
        e.insert(fermion_vec(f));
    }
    Ok(fs.len() as u128 == narayana(n, k) && e.rank() == ideal + fs.len())
}

/// `{f_π : π ∈ NC(n,k)}` maps to a basis of the quotient in bidegree
/// `(n-k, k-1)`.
pub fn check_basis_descends(n: usize, k: usize) -> Result<bool> {
    check_bidegree(n, 0, 0)?;
    descends_independently(n, k, &nc_small_fermions(n, k)?)
}

/// Whether `θ ∧ f` is independent over `f ∈ fs` with `Nar(n,k)` members.
pub fn theta_injective_on(n: usize, k: usize, fs: &[Fermion]) -> Result<bool> {
    let (theta, _, _) = invariant_generators(n)?;
    let mut e = Echelon::new();
    for f in fs {
        e.insert(fermion_vec(&theta.wedge(f)?));
    }
    Ok(fs.len() as u128 == narayana(n, k) && e.rank() == fs.len())
}

/// Multiplication by `θ` is injective on the span of `{f_π : π ∈ NC(n,k)}`.
pub fn check_theta_injectivity(n: usize, k: usize) -> Result<bool> {
    check_bidegree(n, 0, 0)?;
    theta_injective_on(n, k, &nc_small_fermions(n, k)?)
}

/// `⟨F_π, ξ δ θ_S ξ_T⟩ = 0` for every `S, T`; only the sizes matching the
/// bidegree of `F_π` can contribute.
pub fn check_orthogonality(pi: &SetPartition) -> Result<bool> {
    let n = pi.n();
    let k = pi.num_blocks();
    let (_, xi, delta) = invariant_generators(n)?;
    let f = big_f(pi);
    if n < k + 1 || k < 2 {
        return Ok(true);
    }
    let xd = xi.wedge(&delta)?;
    for s in subsets_of_size(n, n - k - 1) {
        for t in subsets_of_size(n, k - 2) {
            let m = Fermion::monomial(n, Monomial::new(s, t), Rational::from_integer(1.into()))?;
            if !f.inner(&xd.wedge(&m)?)?.eq(&Rational::from_integer(0.into())) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
