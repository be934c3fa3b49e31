//! Block operators and the fermions attached to set partitions and
//! segmented permutations.
//!
//! `ρ_B(f) = Σ_{i≠j∈B} ξ_i·(θ_j ⊙ f)` (with `ρ_{{i}} = ξ_i·(θ_i ⊙ -)`), and
//! `ψ_B` agrees with `ρ_B` except that it kills singleton blocks. The
//! partition fermion is `F_π = ρ_π(θ_1⋯θ_n)` and `f_π = ξ ⊙ F_π` where
//! `ξ = ξ_1 + ⋯ + ξ_n`.
//!
//! Two fermions are built from a segmented permutation `(w, α)`: the product
//! `G_{w,α}` and its antisymmetrization `F̃_{w,α}` over the parabolic
//! subgroup of the segments. `F̃` only depends on the underlying partition
//! and differs from `F_π` by a sign depending on `n` and the number of
//! blocks `k`:
//!
//! ```text
//! F̃_π = (-1)^(n + k(k-1)/2) F_π        f̃_π = (-1)^(k(k+1)/2) f_π
//! ```
//!
//! So the `f` sign is `+1` for `k ≡ 0, 3 (mod 4)` and `-1` for
//! `k ≡ 1, 2 (mod 4)` at every `n`, while the `F` sign agrees with it only
//! when `n - k` is even. For instance `F̃_{12} = θ_1ξ_1 - θ_2ξ_2 = F_{{1,2}}`.
//! Both formulas are checked exhaustively in the tests below.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::extalg::{add_term, rat, Fermion, Generator, Monomial, Rational};
use crate::perm::Permutation;
use crate::setpart::{canonical_segperm, SegmentedPermutation, SetPartition};
use crate::subset::Subset;

/// Largest parabolic subgroup [`antisymmetrize`] will iterate over.
pub const ANTISYMMETRIZE_LIMIT: u128 = 10_000_000;

/// `Σ ξ_i · (θ_j ⊙ f)` over the given `(i, j)` pairs.
fn xi_theta_sum(f: &Fermion, pairs: &[(usize, usize)]) -> Fermion {
    let mut terms = BTreeMap::new();
    for (m, c) in f.terms() {
        for &(i, j) in pairs {
            if !m.theta.contains(j) || m.xi.contains(i) {
                continue;
            }
            let theta = m.theta.remove(j);
            // θ_j sits after the θ's below it; ξ_i passes all remaining θ's
            // and the ξ's below i.
            let swaps = m.theta.count_below(j) + theta.len() + m.xi.count_below(i);
            let r = Monomial::new(theta, m.xi.insert(i));
            add_term(&mut terms, r, if swaps % 2 == 1 { -c.clone() } else { c.clone() });
        }
    }
    Fermion::from_map(f.n(), terms)
}

fn check_subset(b: Subset, n: usize) -> Result<()> {
    if b.is_empty() {
        return Err(Error::EmptyBlock);
    }
    if !b.is_subset(Subset::full(n)) {
        let bad = b.difference(Subset::full(n)).min().unwrap_or(0);
        return Err(Error::IndexOutOfRange { index: bad, n });
    }
    Ok(())
}

fn ordered_pairs(b: Subset) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in b.iter() {
        for j in b.iter() {
            if i != j {
                v.push((i, j));
            }
        }
    }
    v
}

/// The block operator `ρ_B`.
pub fn rho_block(b: Subset, f: &Fermion) -> Result<Fermion> {
    check_subset(b, f.n())?;
    if b.len() == 1 {
        let i = b.min().expect("nonempty");
        return Ok(xi_theta_sum(f, &[(i, i)]));
    }
    Ok(xi_theta_sum(f, &ordered_pairs(b)))
}

/// `ψ_B`: equal to `ρ_B` on blocks of size at least two, zero otherwise.
pub fn psi_block(b: Subset, f: &Fermion) -> Result<Fermion> {
    check_subset(b, f.n())?;
    Ok(xi_theta_sum(f, &ordered_pairs(b)))
}

/// `ψ_{A,B}(f) = Σ_{a∈A, b∈B} ξ_a·(θ_b ⊙ f) + ξ_b·(θ_a ⊙ f)`.
pub fn psi_pair(a: Subset, b: Subset, f: &Fermion) -> Result<Fermion> {
    check_subset(a, f.n())?;
    check_subset(b, f.n())?;
    if !a.is_disjoint(b) {
        return Err(Error::Overlapping);
    }
    let mut pairs = Vec::new();
    for x in a.iter() {
        for y in b.iter() {
            pairs.push((x, y));
            pairs.push((y, x));
        }
    }
    Ok(xi_theta_sum(f, &pairs))
}

fn check_partition_rank(pi: &SetPartition, f: &Fermion) -> Result<()> {
    if pi.n() != f.n() {
        Err(Error::RankMismatch(pi.n(), f.n()))
    } else {
        Ok(())
    }
}

/// `ρ_π`: the composite of `ρ_B` over the blocks of `π`.
pub fn rho_partition(pi: &SetPartition, f: &Fermion) -> Result<Fermion> {
    check_partition_rank(pi, f)?;
    let mut g = f.clone();
    for &b in pi.blocks() {
        g = rho_block(b, &g)?;
    }
    Ok(g)
}

/// `ψ_π`: the composite of `ψ_B` over the blocks of `π`.
pub fn psi_partition(pi: &SetPartition, f: &Fermion) -> Result<Fermion> {
    check_partition_rank(pi, f)?;
    let mut g = f.clone();
    for &b in pi.blocks() {
        g = psi_block(b, &g)?;
    }
    Ok(g)
}

/// `ξ_1 + ⋯ + ξ_n`.
pub fn xi_sum(n: usize) -> Fermion {
    let mut f = Fermion::zero(n).expect("rank checked by caller");
    for i in 1..=n {
        f += &Fermion::xi(n, i).expect("in range");
    }
    f
}

/// `F_π = ρ_π(θ_1⋯θ_n)`, of bidegree `(n-k, k)`.
pub fn big_f(pi: &SetPartition) -> Fermion {
    let top = Fermion::theta_top(pi.n()).expect("partition rank is bounded");
    rho_partition(pi, &top).expect("blocks of a valid partition")
}

/// `f_π = ξ ⊙ F_π`, of bidegree `(n-k, k-1)`.
pub fn small_f(pi: &SetPartition) -> Fermion {
    xi_sum(pi.n()).contract(&big_f(pi)).expect("same rank")
}

/// `G_{w,α}`: up to the sign `sign(w)·(-1)^{|α|_odd}`, the product over
/// segments of `θ` on all but the last letter, followed by one `ξ` factor
/// per segment (the sum over all but the last letter, or the lone letter).
pub fn big_g(sp: &SegmentedPermutation) -> Fermion {
    let n = sp.n();
    let segs = sp.segments();
    let mut g = Fermion::one(n).expect("rank bounded by the permutation");
    for seg in &segs {
        for &x in &seg[..seg.len() - 1] {
            g = g.wedge(&Fermion::theta(n, x).expect("in range")).expect("same rank");
        }
    }
    for seg in &segs {
        let letters = if seg.len() > 1 { &seg[..seg.len() - 1] } else { &seg[..] };
        let mut xs = Fermion::zero(n).expect("rank");
        for &x in letters {
            xs += &Fermion::xi(n, x).expect("in range");
        }
        g = g.wedge(&xs).expect("same rank");
    }
    let negative = (sp.w().sign() < 0) ^ (sp.odd_part_sum() % 2 == 1);
    if negative {
        -g
    } else {
        g
    }
}

/// `g_{w,α} = (-1)^(n-k) ξ ⊙ G_{w,α}`.
pub fn small_g(sp: &SegmentedPermutation) -> Fermion {
    let g = xi_sum(sp.n()).contract(&big_g(sp)).expect("same rank");
    if (sp.n() - sp.k()) % 2 == 1 {
        -g
    } else {
        g
    }
}

/// Order of the parabolic subgroup `Π_B S_B`.
pub fn parabolic_order(pi: &SetPartition) -> u128 {
    pi.blocks()
        .iter()
        .map(|b| crate::numbers::factorial(b.len()))
        .fold(1u128, |a, x| a.saturating_mul(x))
}

/// All elements of the parabolic subgroup fixing each block of `pi`.
pub fn parabolic_elements(pi: &SetPartition) -> Result<Vec<Permutation>> {
    let order = parabolic_order(pi);
    if order > ANTISYMMETRIZE_LIMIT {
        return Err(Error::SubgroupTooLarge(order));
    }
    let n = pi.n();
    let mut images: Vec<Vec<usize>> = alloc::vec![(1..=n).collect()];
    for b in pi.blocks() {
        let elems = b.to_vec();
        let local = Permutation::all(elems.len());
        let mut next = Vec::with_capacity(images.len() * local.len());
        for img in &images {
            for u in &local {
                let mut v = img.clone();
                for (t, &x) in elems.iter().enumerate() {
                    v[x - 1] = elems[u.apply(t + 1) - 1];
                }
                next.push(v);
            }
        }
        images = next;
    }
    Ok(images
        .iter()
        .map(|v| Permutation::from_images(v).expect("block permutation"))
        .collect())
}

/// `Σ_{w ∈ S_π} (sign(w)) w·f` over the parabolic subgroup of `pi`; the
/// sign is included when `signed` is set.
pub fn antisymmetrize(pi: &SetPartition, signed: bool, f: &Fermion) -> Result<Fermion> {
    if pi.n() != f.n() {
        return Err(Error::RankMismatch(pi.n(), f.n()));
    }
    let mut acc = Fermion::zero(f.n())?;
    let minus = -Rational::from_integer(BigInt::from(1));
    let one = rat(1);
    for w in parabolic_elements(pi)? {
        let wf = f.act(&w)?;
        let c = if signed && w.sign() < 0 { &minus } else { &one };
        acc.add_scaled(&wf, c);
    }
    Ok(acc)
}

fn tilde_denominator(sp: &SegmentedPermutation) -> Rational {
    let d: u128 = sp
        .alpha()
        .iter()
        .map(|&a| crate::numbers::factorial(a - 1))
        .product();
    Rational::from_integer(BigInt::from(d))
}

/// `F̃_{w,α} = [S_{w,α}]^- · G_{w,α} / Π (α_i - 1)!`.
pub fn tilde_big_f(sp: &SegmentedPermutation) -> Result<Fermion> {
    let s = antisymmetrize(&sp.to_partition(), true, &big_g(sp))?;
    Ok(s.scale(&tilde_denominator(sp).recip()))
}

/// `f̃_{w,α} = [S_{w,α}]^- · g_{w,α} / Π (α_i - 1)!`.
pub fn tilde_small_f(sp: &SegmentedPermutation) -> Result<Fermion> {
    let s = antisymmetrize(&sp.to_partition(), true, &small_g(sp))?;
    Ok(s.scale(&tilde_denominator(sp).recip()))
}

/// The sign `F̃_π / F_π` for a partition of `[n]` with `k` blocks.
pub fn tilde_big_sign(n: usize, k: usize) -> i32 {
    if (n + k * k.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The sign `f̃_π / f_π` for a partition with `k` blocks.
pub fn tilde_small_sign(k: usize) -> i32 {
    if (k * (k + 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Copies a fermion into a larger ambient rank.
pub fn embed(f: &Fermion, n: usize) -> Result<Fermion> {
    if n < f.n() {
        return Err(Error::RankMismatch(f.n(), n));
    }
    Fermion::from_terms(n, f.terms().map(|(m, c)| (*m, c.clone())))
}

/// `π̄`: `π` with `n` deleted (and its block, if `{n}` is a singleton).
pub fn remove_last(pi: &SetPartition) -> Result<SetPartition> {
    let n = pi.n();
    if n == 0 {
        return Err(Error::Precondition("empty ground set".into()));
    }
    let blocks = pi
        .blocks()
        .iter()
        .map(|b| b.remove(n))
        .filter(|b| !b.is_empty())
        .collect();
    SetPartition::from_subsets(n - 1, blocks)
}

/// How `F̃_{π̄}` is recovered from `F̃_π`, by the size of the block `B ∋ n`:
///
/// - `|B| ≥ 3`: `F̃_{π̄} = ± θ_n ⊙ (F̃_π |_{ξ_n = 0})`,
/// - `B = {i, n}`: `F̃_{π̄} = ± θ_i ⊙ F̃_π`,
/// - `B = {n}`: `F̃_{π̄} = ± ξ_n ⊙ F̃_π`.
///
/// Returns the sign, or `None` if the right side is not `±F̃_{π̄}`.
pub fn n_removal_sign(pi: &SetPartition) -> Result<Option<i32>> {
    let n = pi.n();
    if n < 2 {
        return Err(Error::Precondition("n-removal needs n ≥ 2".into()));
    }
    let b = pi.blocks()[pi.block_index(n).expect("n is covered")];
    let lhs = embed(&tilde_big_f(&canonical_segperm(&remove_last(pi)?))?, n)?;
    let ft = tilde_big_f(&canonical_segperm(pi))?;
    let rhs = match b.len() {
        1 => ft.contract_generator(Generator::Xi(n)),
        2 => ft.contract_generator(Generator::Theta(b.min().expect("nonempty"))),
        _ => ft.substitute_zero(Generator::Xi(n)).contract_generator(Generator::Theta(n)),
    };
    Ok(if lhs == rhs {
        Some(1)
    } else if lhs == -rhs {
        Some(-1)
    } else {
        None
    })
}

/// The signs `(-1)^n`, `(-1)^(n-1)` and `(-1)^(k-1)` for the three cases of
/// [`n_removal_sign`], in the form usually quoted for this relation.
pub fn n_removal_quoted_sign(pi: &SetPartition) -> i32 {
    let n = pi.n();
    let b = pi.blocks()[pi.block_index(n).expect("n is covered")];
    let e = match b.len() {
        1 => pi.num_blocks() - 1,
        2 => n - 1,
        _ => n,
    };
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The sign [`n_removal_sign`] actually takes. It matches
/// [`n_removal_quoted_sign`] except when `{n}` is a singleton block and `n`
/// is odd, where the sign is `(-1)^(n+k-1)` rather than `(-1)^(k-1)`.
pub fn n_removal_observed_sign(pi: &SetPartition) -> i32 {
    let n = pi.n();
    let quoted = n_removal_quoted_sign(pi);
    let b = pi.blocks()[pi.block_index(n).expect("n is covered")];
    if b.len() == 1 && n % 2 == 1 {
        -quoted
    } else {
        quoted
    }
}

/// Whether the n-removal relation holds with the quoted signs.
pub fn check_n_removal(pi: &SetPartition) -> Result<bool> {
    Ok(n_removal_sign(pi)? == Some(n_removal_quoted_sign(pi)))
}
