//! Named invariant checks, each a function of the largest `n` to test.
//!
//! Every check returns `Ok(true)` when the property holds on all inputs it
//! visits. Randomized checks use fixed seeds so reports are reproducible.
//! Some checks cap `n` below `n_max` where the cost grows too fast.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::extalg::{monomials_of_bidegree, rat, Bidegree, Fermion, Generator, Monomial};
use crate::fdr;
use crate::fermions::{
    big_f, psi_block, psi_pair, rho_block, small_f, tilde_big_f, tilde_big_sign, tilde_small_f, tilde_small_sign,
    n_removal_observed_sign, n_removal_sign,
};
use crate::linalg::{fermion_vec, rank};
use crate::numbers::{bell, binomial, catalan, narayana, stirling2};
use crate::perm::Permutation;
use crate::quadring::{self, Quotient};
use crate::repsym::{self, CharacterTable, SymFunc};
use crate::setpart::{canonical_segperm, cyclic_decomposition, enumerate, SetPartition};
use crate::skein::{operator_matrix, rep_matrix, resolve_greedy, sigma, skein_act, skein_si_basis, GreedyPolicy,
    IntMatrix, NcSolver, NcVector};
use crate::subset::Subset;

/// A named check.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn(usize) -> Result<bool>,
}

impl core::fmt::Debug for Check {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name)
    }
}

/// Largest `n_max` accepted by the suite.
pub const MAX_VERIFY_N: usize = 7;

/// All checks, in report order.
pub fn checks() -> Vec<Check> {
    macro_rules! c {
        ($name:literal, $f:expr) => {
            Check { name: $name, run: $f }
        };
    }
    alloc::vec![
        c!("extalg.adjointness", extalg_adjointness),
        c!("extalg.leibniz", extalg_leibniz),
        c!("extalg.contraction_equivariance", extalg_contraction_equivariance),
        c!("extalg.bidegree_dimensions", extalg_bidegree_dimensions),
        c!("setpart.counts", setpart_counts),
        c!("setpart.cyclic_decomposition", setpart_cyclic_decomposition),
        c!("setpart.action", setpart_action),
        c!("fermions.rho_commute", fermions_rho_commute),
        c!("fermions.psi_identities", fermions_psi_identities),
        c!("fermions.equivariance", fermions_equivariance),
        c!("fermions.degrees", fermions_degrees),
        c!("fermions.antisymmetrized_signs", fermions_antisymmetrized_signs),
        c!("fermions.n_removal", fermions_n_removal),
        c!("skein.sigma_resolves", skein_sigma_resolves),
        c!("skein.coxeter", skein_coxeter),
        c!("skein.greedy_matches_algebraic", skein_greedy_matches_algebraic),
        c!("skein.equivariance", skein_equivariance),
        c!("skein.global_symmetry", skein_global_symmetry),
        c!("skein.basis_rank", skein_basis_rank),
        c!("quadring.hilbert", quadring_hilbert),
        c!("quadring.basis", quadring_basis),
        c!("quadring.confluence", quadring_confluence),
        c!("repsym.orthogonality", repsym_orthogonality),
        c!("repsym.skein_frobenius", repsym_skein_frobenius),
        c!("repsym.hook_kronecker", repsym_hook_kronecker),
        c!("repsym.multiplicity_bound", repsym_multiplicity_bound),
        c!("fdr.dimensions", fdr_dimensions),
        c!("fdr.basis_descends", fdr_basis_descends),
        c!("fdr.theta_injectivity", fdr_theta_injectivity),
        c!("fdr.orthogonality", fdr_orthogonality),
    ]
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A fermion with up to `terms` random monomials and coefficients in `-3..=3`.
pub fn random_fermion(rng: &mut ChaCha8Rng, n: usize, terms: usize) -> Fermion {
    let mut f = Fermion::zero(n).expect("n is bounded by callers");
    for _ in 0..terms {
        let m = Monomial::new(random_bits(rng, n), random_bits(rng, n));
        f += &Fermion::monomial(n, m, rat(rng.gen_range(-3..=3))).expect("in range");
    }
    f
}

fn random_bits(rng: &mut ChaCha8Rng, n: usize) -> Subset {
    Subset(rng.gen_range(0..1u32 << n) as u16)
}

/// A random nonempty subset of `{1..n}`, `n ≥ 1`.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Subset {
    Subset(rng.gen_range(1..1u32 << n) as u16)
}

/// A random homogeneous fermion of the given bidegree.
fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, d: Bidegree, terms: usize) -> Fermion {
    let monos = monomials_of_bidegree(n, d);
    let mut f = Fermion::zero(n).expect("bounded");
    if monos.is_empty() {
        return f;
    }
    for _ in 0..terms {
        let m = monos[rng.gen_range(0..monos.len())];
        f += &Fermion::monomial(n, m, rat(rng.gen_range(-3..=3))).expect("in range");
    }
    f
}

fn generators(n: usize) -> impl Iterator<Item = Generator> {
    (1..=n).map(Generator::Theta).chain((1..=n).map(Generator::Xi))
}

fn extalg_adjointness(n_max: usize) -> Result<bool> {
    let mut r = rng(1);
    for trial in 0..240 {
        let n = 1 + trial % n_max.clamp(1, 5);
        let d = |r: &mut ChaCha8Rng| Bidegree::new(r.gen_range(0..=n.min(2)), r.gen_range(0..=n.min(2)));
        let (df, dg) = (d(&mut r), d(&mut r));
        let f = random_homogeneous(&mut r, n, df, 3);
        let g = random_homogeneous(&mut r, n, dg, 3);
        let h = random_fermion(&mut r, n, 12) + f.wedge(&g)?;
        if f.wedge(&g)?.inner(&h)? != g.inner(&f.contract(&h)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn extalg_leibniz(n_max: usize) -> Result<bool> {
    let mut r = rng(2);
    for trial in 0..200 {
        let n = 1 + trial % n_max.clamp(1, 5);
        let d = Bidegree::new(r.gen_range(0..=n), r.gen_range(0..=n));
        let f = random_homogeneous(&mut r, n, d, 4);
        let g = random_fermion(&mut r, n, 6);
        let sign = if (d.i + d.j).is_multiple_of(2) { rat(1) } else { rat(-1) };
        for gen in generators(n) {
            let lhs = f.wedge(&g)?.contract_generator(gen);
            let rhs = f.contract_generator(gen).wedge(&g)? + f.wedge(&g.contract_generator(gen))?.scale(&sign);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn extalg_contraction_equivariance(n_max: usize) -> Result<bool> {
    let mut r = rng(3);
    for trial in 0..200 {
        let n = 1 + trial % n_max.clamp(1, 5);
        let perms = Permutation::all(n);
        let w = &perms[r.gen_range(0..perms.len())];
        let g = random_fermion(&mut r, n, 3);
        let f = random_fermion(&mut r, n, 8);
        if g.contract(&f)?.act(w)? != g.act(w)?.contract(&f.act(w)?)? {
            return Ok(false);
        }
        if g.wedge(&f)?.act(w)? != g.act(w)?.wedge(&f.act(w)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn extalg_bidegree_dimensions(n_max: usize) -> Result<bool> {
    for n in 0..=n_max {
        for i in 0..=n {
            for j in 0..=n {
                let monos = monomials_of_bidegree(n, Bidegree::new(i, j));
                let vs = monos.iter().map(|&m| fermion_vec(&Fermion::monomial(n, m, rat(1)).expect("in range")));
                if rank(vs) as u128 != binomial(n, i) * binomial(n, j) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn setpart_counts(n_max: usize) -> Result<bool> {
    for n in 0..=n_max.max(8) {
        if enumerate(n, None, None, false)?.len() as u128 != bell(n) {
            return Ok(false);
        }
        if n <= 10 && enumerate(n, None, None, true)?.len() as u128 != catalan(n) {
            return Ok(false);
        }
        for k in 0..=n {
            let all = enumerate(n, Some(k), None, false)?.len() as u128;
            let nc = enumerate(n, Some(k), None, true)?.len() as u128;
            if all != stirling2(n, k) || nc != narayana(n, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn setpart_cyclic_decomposition(n_max: usize) -> Result<bool> {
    for n in 2..=n_max {
        for pi in enumerate(n, Some(2), None, false)? {
            let [a, b] = [pi.blocks()[0], pi.blocks()[1]];
            let d = cyclic_decomposition(a, b, n)?;
            let ivs = d.intervals();
            // Intervals alternate between the two blocks and cover both.
            let mut cover = Subset::default();
            for (t, iv) in ivs.iter().enumerate() {
                let side = if t % 2 == 0 { a } else { b };
                if !iv.is_subset(side) || !iv.is_disjoint(cover) {
                    return Ok(false);
                }
                cover = cover.union(*iv);
            }
            if cover != a.union(b) || ivs.len() != 2 * d.m() || (d.m() >= 2) != !pi.is_noncrossing() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn setpart_action(n_max: usize) -> Result<bool> {
    let n = n_max.min(5);
    let perms = Permutation::all(n);
    for pi in enumerate(n, None, None, false)? {
        for (t, w) in perms.iter().enumerate().step_by(7) {
            let v = &perms[(t * 13 + 5) % perms.len()];
            let q = pi.apply_perm(w)?;
            if q.num_blocks() != pi.num_blocks() || q.num_singletons() != pi.num_singletons() {
                return Ok(false);
            }
            if pi.apply_perm(&w.compose(v))? != pi.apply_perm(v)?.apply_perm(w)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn fermions_rho_commute(n_max: usize) -> Result<bool> {
    if n_max == 0 {
        return Ok(true);
    }
    let mut r = rng(4);
    for trial in 0..200 {
        let n = 1 + trial % n_max.min(5);
        let f = random_fermion(&mut r, n, 6);
        let (a, b) = (random_subset(&mut r, n), random_subset(&mut r, n));
        if rho_block(a, &rho_block(b, &f)?)? != rho_block(b, &rho_block(a, &f)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two disjoint nonempty random subsets of `{1..n}`, `n ≥ 2`.
fn random_disjoint_pair(r: &mut ChaCha8Rng, n: usize) -> (Subset, Subset) {
    loop {
        let (a, b) = (random_subset(r, n), random_subset(r, n));
        if a.is_disjoint(b) {
            return (a, b);
        }
    }
}

/// The ψ commutation identities and `ψ_{A⊔B} = ψ_A + ψ_{A,B} + ψ_B` on
/// `instances` random inputs at rank `n ≥ 2`.
pub fn psi_identities_hold(n: usize, instances: usize, seed: u64) -> Result<bool> {
    let mut r = rng(seed);
    for _ in 0..instances {
        let f = random_fermion(&mut r, n, 8);
        let (a, b) = random_disjoint_pair(&mut r, n);
        let (c, d) = random_disjoint_pair(&mut r, n);
        let e = random_subset(&mut r, n);
        if psi_block(a, &psi_block(e, &f)?)? != psi_block(e, &psi_block(a, &f)?)? {
            return Ok(false);
        }
        if psi_pair(a, b, &psi_block(e, &f)?)? != psi_block(e, &psi_pair(a, b, &f)?)? {
            return Ok(false);
        }
        if psi_pair(a, b, &psi_pair(c, d, &f)?)? != psi_pair(c, d, &psi_pair(a, b, &f)?)? {
            return Ok(false);
        }
        let split = psi_block(a, &f)? + psi_pair(a, b, &f)? + psi_block(b, &f)?;
        if psi_block(a.union(b), &f)? != split {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fermions_psi_identities(n_max: usize) -> Result<bool> {
    if n_max < 2 {
        return Ok(true);
    }
    psi_identities_hold(n_max.min(5), 200, 5)
}

fn fermions_equivariance(n_max: usize) -> Result<bool> {
    let n = n_max.min(4);
    let perms = Permutation::all(n);
    for pi in enumerate(n, None, None, false)? {
        let (bf, sf) = (big_f(&pi), small_f(&pi));
        for w in &perms {
            let q = pi.apply_perm(w)?;
            let s = rat(i64::from(w.sign()));
            if bf.act(w)? != big_f(&q).scale(&s) || sf.act(w)? != small_f(&q).scale(&s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn fermions_degrees(n_max: usize) -> Result<bool> {
    if n_max == 0 {
        return Ok(true);
    }
    let mut r = rng(6);
    for trial in 0..100 {
        let n = 1 + trial % n_max.min(5);
        let d = Bidegree::new(r.gen_range(1..=n), r.gen_range(0..n));
        let f = random_homogeneous(&mut r, n, d, 6);
        let b = random_subset(&mut r, n);
        for g in [rho_block(b, &f)?, psi_block(b, &f)?] {
            if g.homogeneous_bidegree().is_some_and(|e| e != Bidegree::new(d.i - 1, d.j + 1)) {
                return Ok(false);
            }
        }
    }
    for n in 1..=n_max.min(6) {
        for pi in enumerate(n, None, None, false)? {
            let k = pi.num_blocks();
            if big_f(&pi).homogeneous_bidegree() != Some(Bidegree::new(n - k, k))
                || small_f(&pi).homogeneous_bidegree() != Some(Bidegree::new(n - k, k - 1))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `F̃ = (-1)^(n + C(k,2)) F` and `f̃ = (-1)^(C(k+1,2)) f` on all of `Π(n)`.
fn fermions_antisymmetrized_signs(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.min(6) {
        for pi in enumerate(n, None, None, false)? {
            let k = pi.num_blocks();
            let sp = canonical_segperm(&pi);
            if tilde_big_f(&sp)? != big_f(&pi).scale(&rat(tilde_big_sign(n, k).into())) {
                return Ok(false);
            }
            if tilde_small_f(&sp)? != small_f(&pi).scale(&rat(tilde_small_sign(k).into())) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn fermions_n_removal(n_max: usize) -> Result<bool> {
    for n in 2..=n_max.min(6) {
        for pi in enumerate(n, None, None, false)? {
            if n_removal_sign(&pi)? != Some(n_removal_observed_sign(&pi)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn skein_sigma_resolves(n_max: usize) -> Result<bool> {
    for n in 2..=n_max {
        for pi in enumerate(n, None, None, false)?.into_iter().filter(|p| !p.is_noncrossing()) {
            let mut first: Option<NcVector> = None;
            for i in pi.almost_noncrossing_indices() {
                let v = sigma(&pi, i)?;
                let mut total = big_f(&pi);
                for (mu, c) in v.terms() {
                    total.add_scaled(&big_f(mu), c);
                }
                if !total.is_zero() || first.as_ref().is_some_and(|f| *f != v) {
                    return Ok(false);
                }
                first.get_or_insert(v);
            }
        }
    }
    Ok(true)
}

/// Coxeter relations for the operators `op(i, π)` on `NC(n)`.
pub fn coxeter_holds<F>(n: usize, op: F) -> Result<bool>
where
    F: Fn(usize, &SetPartition) -> Result<NcVector>,
{
    let basis = enumerate(n, None, None, true)?;
    let gens = (1..n)
        .map(|i| {
            operator_matrix(&basis, |v| {
                let mut out = NcVector::zero(n);
                for (p, c) in v.terms() {
                    out.add_scaled(&op(i, p)?, c);
                }
                Ok(out)
            })
        })
        .collect::<Result<Vec<IntMatrix>>>()?;
    repsym::check_coxeter(&gens)
}

fn skein_coxeter(n_max: usize) -> Result<bool> {
    for n in 1..=n_max {
        if !coxeter_holds(n, skein_si_basis)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn skein_greedy_matches_algebraic(n_max: usize) -> Result<bool> {
    for n in 1..=n_max {
        for k in 1..=n {
            let solver = NcSolver::new(n, k)?;
            for pi in enumerate(n, Some(k), None, false)? {
                let a = solver.resolve(&pi)?;
                if !a.is_integral() {
                    return Ok(false);
                }
                for policy in [GreedyPolicy::LexMin, GreedyPolicy::MaxTangleReduction] {
                    if resolve_greedy(&pi, policy)? != a {
                        return Ok(false);
                    }
                }
                if a.terms().any(|(mu, _)| mu.num_singletons() != pi.num_singletons()) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn skein_equivariance(n_max: usize) -> Result<bool> {
    let mut r = rng(8);
    for n in 2..=n_max.min(6) {
        let parts = enumerate(n, None, None, false)?;
        let perms = Permutation::all(n);
        let solvers = (0..=n).map(|k| NcSolver::new(n, k)).collect::<Result<Vec<_>>>()?;
        for _ in 0..40 {
            let pi = &parts[r.gen_range(0..parts.len())];
            let w = &perms[r.gen_range(0..perms.len())];
            let q = pi.apply_perm(w)?;
            let lhs = solvers[q.num_blocks()].resolve(&q)?.scale(&rat(w.sign().into()));
            let rhs = skein_act(w, &solvers[pi.num_blocks()].resolve(pi)?)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn skein_global_symmetry(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.min(6) {
        let w0 = Permutation::longest(n);
        let c = Permutation::long_cycle(n);
        let s0 = rat(w0.sign().into());
        let sc = rat(c.sign().into());
        for pi in enumerate(n, None, None, true)? {
            let v = NcVector::basis(&pi)?;
            if skein_act(&w0, &v)? != NcVector::basis(&pi.apply_perm(&w0)?)?.scale(&s0) {
                return Ok(false);
            }
            if skein_act(&c, &v)? != NcVector::basis(&pi.apply_perm(&c)?)?.scale(&sc) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn skein_basis_rank(n_max: usize) -> Result<bool> {
    for n in 1..=n_max {
        for k in 1..=n {
            let nc = enumerate(n, Some(k), None, true)?;
            let expected = narayana(n, k) as usize;
            if rank(nc.iter().map(|p| fermion_vec(&big_f(p)))) != expected
                || rank(nc.iter().map(|p| fermion_vec(&small_f(p)))) != expected
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn quadring_hilbert(n_max: usize) -> Result<bool> {
    for n in 0..=n_max.min(6) {
        for which in [Quotient::ModJ, Quotient::ModIJ] {
            if quadring::hilbert_series(n, which)? != quadring::hilbert_series_enumerated(n, which)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn quadring_basis(n_max: usize) -> Result<bool> {
    for n in 0..=n_max.min(6) {
        if !quadring::check_basis(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn quadring_confluence(n_max: usize) -> Result<bool> {
    for n in 0..=n_max.min(5) {
        if !quadring::check_confluence(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn repsym_orthogonality(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.max(2) {
        let t = CharacterTable::new(n)?;
        let chars: Vec<Vec<i128>> = t
            .classes()
            .iter()
            .map(|l| SymFunc::schur(l.clone()).character(&t))
            .collect::<Result<_>>()?;
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                if t.inner(a, b) != Some(i128::from(i == j)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn repsym_skein_frobenius(n_max: usize) -> Result<bool> {
    for n in 1..=n_max {
        let t = CharacterTable::new(n)?;
        for k in 1..=n {
            for m in 0..=k {
                let basis = enumerate(n, Some(k), Some(m), true)?;
                let expected = repsym::nc_stratum_frobenius(n, k, m);
                if basis.is_empty() {
                    if !expected.is_zero() {
                        return Ok(false);
                    }
                    continue;
                }
                let gens = (1..n)
                    .map(|i| rep_matrix(&Permutation::adjacent(n, i), &basis))
                    .collect::<Result<Vec<_>>>()?;
                if repsym::frobenius_from_rep(&gens, &t)? != expected {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn repsym_hook_kronecker(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.max(2) {
        let t = CharacterTable::new(n)?;
        for k in 1..=n {
            if repsym::nc_frobenius(n, k) != repsym::hook_kronecker_difference(n, k, &t)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn repsym_multiplicity_bound(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.max(2) {
        for k in 1..=n {
            for (lambda, &c) in repsym::nc_frobenius(n, k).terms() {
                if !(1..=2).contains(&c) || lambda.part(1) + 1 < lambda.part(0) || lambda.part(2) >= 3 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn fdr_dimensions(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.min(6) {
        for i in 0..=n {
            for j in 0..=n {
                if fdr::fdr_dimension(n, i, j)? as u128 != fdr::fdr_dimension_closed(n, i, j) {
                    return Ok(false);
                }
            }
        }
        let diag: u128 = (1..=n).map(|k| fdr::fdr_dimension_closed(n, n - k, k - 1)).sum();
        if diag != catalan(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fdr_basis_descends(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.min(6) {
        for k in 1..=n {
            if !fdr::check_basis_descends(n, k)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn fdr_theta_injectivity(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.min(6) {
        for k in 1..=n {
            if !fdr::check_theta_injectivity(n, k)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn fdr_orthogonality(n_max: usize) -> Result<bool> {
    for n in 1..=n_max.min(5) {
        for pi in enumerate(n, None, None, false)? {
            if !fdr::check_orthogonality(&pi)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
