//! End-to-end acceptance run (a plain binary, so the report is never captured). Prints one PASS/FAIL line per criterion with
//! indented detail lines, then checks the outcome against `KNOWN_FAILURES`:
//! criteria listed there state identities that exhaustive computation
//! refutes, so they are expected to fail and the run asserts that they still
//! do. Everything else must pass within its time budget.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use skeinlab::formats::{parse_fermion, parse_partition, parse_permutation, parse_segmented};
use skeinlab_core::extalg::Generator;
use skeinlab_core::fdr::{check_basis_descends, check_theta_injectivity, fdr_dimension};
use skeinlab_core::fermions::{big_f, big_g, embed, remove_last, small_f, small_g, tilde_big_f, tilde_small_f};
use skeinlab_core::linalg::{fermion_vec, rank};
use skeinlab_core::quadring::{check_basis, check_confluence, hilbert_series, hilbert_series_enumerated, Quotient};
use skeinlab_core::repsym::{
    fdr_frobenius, frobenius_from_rep, hook, hook_kronecker_difference, kronecker, pieri_vertical,
    skein_frobenius, CharacterTable, IntPartition, SymFunc,
};
use skeinlab_core::setpart::{canonical_segperm, enumerate};
use skeinlab_core::skein::{
    rep_matrix, resolve_algebraic, resolve_greedy, sigma, skein_act, GreedyPolicy, IntMatrix, NcVector,
};
use skeinlab_core::verify::psi_identities_hold;
use skeinlab_core::{Error, Fermion, Permutation, Rational, SetPartition};

/// Criteria whose stated identity is false as written.
const KNOWN_FAILURES: &[usize] = &[8, 10];

// Oracles, deliberately naive and independent of the library's number module.

fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[k as usize]
}

fn narayana(n: usize, k: usize) -> i128 {
    if n == 0 {
        return i128::from(k == 0);
    }
    if k == 0 {
        return 0;
    }
    let (n, k) = (n as i64, k as i64);
    binom(n, k) * binom(n, k - 1) / n as i128
}

fn catalan(n: usize) -> i128 {
    let mut c = vec![1i128];
    for m in 1..=n {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c[n]
}

fn stirling(n: usize, k: usize) -> i128 {
    let mut s = vec![vec![0i128; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            s[i][j] = j as i128 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    s[n][k]
}

fn rat(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn sign(e: usize) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn signed(f: &Fermion, s: i32) -> Fermion {
    if s == 1 {
        f.clone()
    } else {
        -f
    }
}

fn part(s: &str) -> SetPartition {
    parse_partition(s).unwrap()
}

fn fermion(s: &str, n: usize) -> Fermion {
    parse_fermion(s, Some(n)).unwrap()
}

fn shape(parts: &[usize]) -> IntPartition {
    IntPartition::new(parts.to_vec()).unwrap()
}

struct Log(Vec<String>);

impl Log {
    /// Records a sub-check and returns its outcome.
    fn check(&mut self, ok: bool, what: impl Into<String>) -> bool {
        self.0.push(format!("    [{}] {}", if ok { "ok" } else { "FAIL" }, what.into()));
        ok
    }

    fn note(&mut self, what: impl Into<String>) {
        self.0.push(format!("    note: {}", what.into()));
    }
}

fn worked_examples(log: &mut Log) -> bool {
    let mut ok = true;
    let pi = part("1 3 / 2");
    ok &= log.check(big_f(&pi) == fermion("x3 x2 t3 - x1 x2 t1", 3), "F({1,3/2}) = x3 x2 t3 - x1 x2 t1");
    ok &= log.check(
        small_f(&pi) == fermion("x2 t3 - x3 t3 - x2 t1 + x1 t1", 3),
        "f({1,3/2}) = x2 t3 - x3 t3 - x2 t1 + x1 t1",
    );

    let sp = parse_segmented("5 3 6 | 7 | 2 1 | 8 4").unwrap();
    let thetas = fermion("-t5 t3 t2 t8", 8);
    let x53 = fermion("x5 + x3", 8);
    let expected_g = thetas.wedge(&x53).unwrap().wedge(&fermion("x7 x2 x8", 8)).unwrap();
    ok &= log.check(big_g(&sp) == expected_g, "G(536.7.21.84) = -(t5 t3)(t2)(t8)(x5+x3)(x7)(x2)(x8)");
    let bracket = fermion("2*x7 x2 x8", 8)
        - x53.wedge(&fermion("x2 x8", 8)).unwrap()
        + x53.wedge(&fermion("x7 x8", 8)).unwrap()
        - x53.wedge(&fermion("x7 x2", 8)).unwrap();
    ok &= log.check(small_g(&sp) == thetas.wedge(&bracket).unwrap(), "g(536.7.21.84) four-term bracket");

    let chord = NcVector::from_terms(4, [(part("1 2 / 3 4"), rat(-1)), (part("1 4 / 2 3"), rat(-1))]).unwrap();
    ok &= log.check(resolve_algebraic(&part("1 3 / 2 4")).unwrap() == chord, "p({1,3/2,4}) = -{1,2/3,4} - {1,4/2,3}");

    let c = parse_permutation("2 3 4 5 6 1").unwrap();
    let rotated = skein_act(&c, &NcVector::basis(&part("1 5 6 / 2 4 / 3")).unwrap()).unwrap();
    let expected = NcVector::from_terms(6, [(part("1 2 6 / 3 5 / 4"), rat(-1))]).unwrap();
    ok &= log.check(rotated == expected, "c.{1,5,6/2,4/3} = -{1,2,6/3,5/4}");

    let w0 = Permutation::longest(6);
    let w0_sign = sign(15);
    let mut w0_ok = true;
    for pi in enumerate(6, None, None, true).unwrap() {
        let got = skein_act(&w0, &NcVector::basis(&pi).unwrap()).unwrap();
        let reflected = NcVector::from_terms(6, [(pi.apply_perm(&w0).unwrap(), rat(w0_sign.into()))]).unwrap();
        w0_ok &= got == reflected;
    }
    ok &= log.check(w0_ok, "w0.pi = (-1)^C(6,2) w0(pi) for all pi in NC(6)");
    ok
}

fn coxeter(log: &mut Log) -> bool {
    let mut ok = true;
    for n in 1..=6 {
        let basis = enumerate(n, None, None, true).unwrap();
        let s: Vec<IntMatrix> = (1..n).map(|i| rep_matrix(&Permutation::adjacent(n, i), &basis).unwrap()).collect();
        let id = IntMatrix::identity(basis.len());
        let mut good = true;
        for i in 0..s.len() {
            good &= s[i].mul(&s[i]).unwrap() == id;
            for j in i + 2..s.len() {
                good &= s[i].mul(&s[j]).unwrap() == s[j].mul(&s[i]).unwrap();
            }
            if i + 1 < s.len() {
                let lhs = s[i].mul(&s[i + 1]).unwrap().mul(&s[i]).unwrap();
                let rhs = s[i + 1].mul(&s[i]).unwrap().mul(&s[i + 1]).unwrap();
                good &= lhs == rhs;
            }
        }
        ok &= log.check(good, format!("n={n}: |NC|={}, involution, commuting and braid relations", basis.len()));
    }
    ok
}

fn oracle_equivalence(log: &mut Log) -> bool {
    let all = enumerate(6, None, None, false).unwrap();
    let (mut agree, mut integral) = (0, 0);
    for pi in &all {
        let a = resolve_algebraic(pi).unwrap();
        integral += usize::from(a.is_integral());
        let lex = resolve_greedy(pi, GreedyPolicy::LexMin).unwrap();
        let tangle = resolve_greedy(pi, GreedyPolicy::MaxTangleReduction).unwrap();
        agree += usize::from(lex == a && tangle == a);
    }
    let n = all.len();
    log.check(n == 203, format!("|Pi(6)| = {n}"))
        & log.check(agree == n, format!("greedy (both policies) = algebraic on {agree}/{n}"))
        & log.check(integral == n, format!("integral coefficients on {integral}/{n}"))
}

fn skein_relation(log: &mut Log) -> bool {
    let (mut cases, mut good) = (0, 0);
    for pi in enumerate(6, None, None, false).unwrap().into_iter().filter(|p| !p.is_noncrossing()) {
        for i in pi.almost_noncrossing_indices() {
            let mut total = big_f(&pi);
            for (mu, c) in sigma(&pi, i).unwrap().terms() {
                total.add_scaled(&big_f(mu), c);
            }
            cases += 1;
            good += usize::from(total.is_zero());
        }
    }
    let mut ok = log.check(cases > 0 && good == cases, format!("F(pi) + F(sigma(pi)) = 0 on {good}/{cases} (pi, i) in ANC(6)"));
    for seed in [1, 2] {
        ok &= log.check(
            psi_identities_hold(5, 200, seed).unwrap(),
            format!("psi commutations and psi split, 200 random instances at n=5, seed {seed}"),
        );
    }
    ok
}

fn basis_ranks(log: &mut Log) -> bool {
    let mut ok = true;
    for n in 1..=7 {
        let mut good = true;
        for k in 1..=n {
            let nc = enumerate(n, Some(k), None, true).unwrap();
            let want = narayana(n, k) as usize;
            good &= rank(nc.iter().map(|p| fermion_vec(&big_f(p)))) == want;
            good &= rank(nc.iter().map(|p| fermion_vec(&small_f(p)))) == want;
        }
        ok &= log.check(good, format!("n={n}: rank F = rank f = Nar(n,k) for all k"));
    }
    let counts: Vec<usize> = (0..=10).map(|n| enumerate(n, None, None, true).unwrap().len()).collect();
    ok & log.check(
        counts.iter().enumerate().all(|(n, &c)| c as i128 == catalan(n)),
        format!("|NC(n)| for n = 0..10: {counts:?}"),
    )
}

fn frobenius_images(log: &mut Log) -> bool {
    let mut ok = true;
    for n in 1..=7 {
        let table = CharacterTable::new(n).unwrap();
        let mut good = true;
        for k in 1..=n {
            for m in 0..=k {
                let basis = enumerate(n, Some(k), Some(m), true).unwrap();
                let (a, b) = (k as i64 - m as i64, (n + m) as i64 - 2 * k as i64);
                let expected = if b >= 0 && (a >= 1 || b == 0) {
                    let mut parts = vec![a as usize; if a > 0 { 2 } else { 0 }];
                    parts.extend(std::iter::repeat_n(1, b as usize));
                    pieri_vertical(&SymFunc::schur(shape(&parts)), m)
                } else {
                    SymFunc::zero(n)
                };
                if basis.is_empty() {
                    good &= expected.is_zero();
                    continue;
                }
                let gens: Vec<IntMatrix> =
                    (1..n).map(|i| rep_matrix(&Permutation::adjacent(n, i), &basis).unwrap()).collect();
                good &= frobenius_from_rep(&gens, &table).unwrap() == expected;
            }
        }
        ok &= log.check(good, format!("n={n}: every (k, m) stratum"));
    }
    let pieri = pieri_vertical(&SymFunc::schur(shape(&[4, 4])), 1);
    ok &= log.check(pieri.to_string() == "s(5,4) + s(4,4,1)", format!("s44 . s1 = {pieri}"));
    let table = CharacterTable::new(9).unwrap();
    let basis = enumerate(9, Some(5), Some(1), true).unwrap();
    ok & log.check(skein_frobenius(&basis, &table).unwrap() == pieri, "Frob V(9,5,1) from traces = s54 + s441")
}

fn hook_kronecker(log: &mut Log) -> bool {
    let mut ok = true;
    for n in 1..=8 {
        let table = CharacterTable::new(n).unwrap();
        let mut good = true;
        for k in 1..=n {
            let skein = skein_frobenius(&enumerate(n, Some(k), None, true).unwrap(), &table).unwrap();
            let rhs = hook_kronecker_difference(n, k, &table).unwrap();
            good &= skein == rhs;
            good &= rhs == fdr_frobenius(n, n - k, k - 1, &table).unwrap();
            let dim: i128 = rhs.character(&table).unwrap()[table.classes().len() - 1];
            good &= dim == narayana(n, k);
        }
        ok &= log.check(good, format!("n={n}: Frob C[NC(n,k)] = hook difference = Frob FDR(n-k,k-1), dim Nar"));
    }
    // The identity as printed pairs (k,1^(n-k)) with (n-k-1,1^(k-1)), a shape
    // of size n-2, so its first Kronecker product is undefined.
    let (mut ill_typed, mut cases) = (0, 0);
    for n in 3..=8 {
        let table = CharacterTable::new(n).unwrap();
        for k in 1..=n {
            let (ni, ki) = (n as i64, k as i64);
            if let (Some(a), Some(b)) = (hook(ki, ni - ki), hook(ni - ki - 1, ki - 1)) {
                cases += 1;
                let r = kronecker(&SymFunc::schur(a), &SymFunc::schur(b), &table);
                ill_typed += usize::from(matches!(r, Err(Error::DegreeMismatch(..))));
            }
        }
    }
    log.note(format!(
        "printed form s(k,1^(n-k)) * s(n-k-1,1^(k-1)) is degree-mismatched in {ill_typed}/{cases} cases; \
         checked s(k,1^(n-k)) * s(n-k+1,1^(k-1)) - s(k-1,1^(n-k+1)) * s(n-k,1^k) instead"
    ));
    ok & (ill_typed == cases)
}

fn fdr(log: &mut Log) -> bool {
    let mut stated_bad = Vec::new();
    let mut corrected_bad = 0;
    let mut good_diag = true;
    for n in 1..=6 {
        for i in 0..=n {
            for j in 0..=n {
                let got = fdr_dimension(n, i, j).unwrap() as i128;
                let (a, b, m) = (i as i64, j as i64, n as i64 - 1);
                let stated = if i + j < n { binom(m, a) * binom(m, b) - binom(m, a + 1) * binom(m, b + 1) } else { 0 };
                let corrected = if i + j < n { binom(m, a) * binom(m, b) - binom(m, a - 1) * binom(m, b - 1) } else { 0 };
                if got != stated {
                    stated_bad.push((n, i, j, got, stated));
                }
                corrected_bad += usize::from(got != corrected);
            }
        }
        let diag: Vec<i128> = (1..=n).map(|k| fdr_dimension(n, n - k, k - 1).unwrap() as i128).collect();
        good_diag &= diag.iter().enumerate().all(|(k, &d)| d == narayana(n, k + 1));
        good_diag &= diag.iter().sum::<i128>() == catalan(n);
    }
    let first = stated_bad.first().map(|(n, i, j, got, want)| format!("; first: n={n} ({i},{j}) dim {got}, formula {want}"));
    let mut ok = log.check(
        stated_bad.is_empty(),
        format!(
            "dim = C(n-1,i)C(n-1,j) - C(n-1,i+1)C(n-1,j+1) for i+j<n, n<=6: {} cells disagree{}",
            stated_bad.len(),
            first.unwrap_or_default()
        ),
    );
    log.note(format!(
        "C(n-1,i)C(n-1,j) - C(n-1,i-1)C(n-1,j-1) disagrees on {corrected_bad} cells; both forms coincide on i+j = n-1"
    ));
    ok &= log.check(good_diag, "dim (n-k, k-1) = Nar(n,k), summing to Cat(n), n<=6");
    for n in 1..=6 {
        let good = (1..=n).all(|k| check_basis_descends(n, k).unwrap() && check_theta_injectivity(n, k).unwrap());
        ok &= log.check(good, format!("n={n}: bases descend and theta-multiplication injective for all k"));
    }
    ok
}

fn quadratic_ring(log: &mut Log) -> bool {
    let mut ok = true;
    for n in 0..=6 {
        let mut good = true;
        for (which, inner) in [(Quotient::ModIJ, narayana as fn(usize, usize) -> i128), (Quotient::ModJ, stirling)] {
            let closed = hilbert_series(n, which).unwrap();
            good &= closed == hilbert_series_enumerated(n, which).unwrap();
            for m in 0..=n {
                for k in 0..=n {
                    let want = if k <= m { binom(n as i64, m as i64) * inner(m, k) } else { 0 };
                    good &= closed[m][k] as i128 == want;
                }
            }
        }
        good &= check_basis(n).unwrap();
        ok &= log.check(good, format!("n={n}: Hilbert series of both quotients, standard monomials form a basis"));
    }
    for n in 0..=5 {
        ok &= log.check(check_confluence(n).unwrap(), format!("n={n}: reduction confluent"));
    }
    ok
}

fn sign_rules(log: &mut Log) -> bool {
    let eps = |k: usize| if k.is_multiple_of(4) || k % 4 == 3 { 1 } else { -1 };
    let all = enumerate(5, None, None, false).unwrap();

    let (mut big_bad, mut small_bad, mut observed_bad) = (Vec::new(), 0, 0);
    for pi in &all {
        let sp = canonical_segperm(pi);
        let k = pi.num_blocks();
        let tilde = tilde_big_f(&sp).unwrap();
        observed_bad += usize::from(tilde != signed(&big_f(pi), sign(pi.n() + k * (k - 1) / 2)));
        if tilde != signed(&big_f(pi), eps(k)) {
            big_bad.push(pi.clone());
        }
        small_bad += usize::from(tilde_small_f(&sp).unwrap() != signed(&small_f(pi), eps(k)));
    }
    let mut ok = log.check(
        big_bad.is_empty(),
        format!(
            "tilde F = eps(k) F on Pi(5): {} of {} disagree{}",
            big_bad.len(),
            all.len(),
            big_bad.first().map(|p| format!(", e.g. {p}")).unwrap_or_default()
        ),
    );
    log.note(format!(
        "on Pi(5), tilde f = eps(k) f disagrees on {small_bad} and tilde F = (-1)^(n+C(k,2)) F on {observed_bad}"
    ));

    // Restriction to [n-1], written out from the primitives.
    let mut failures = [0usize; 3];
    let mut totals = [0usize; 3];
    for pi in &all {
        let n = pi.n();
        let b = pi.blocks()[pi.block_index(n).unwrap()];
        let bar = remove_last(pi).unwrap();
        let lhs = embed(&tilde_big_f(&canonical_segperm(&bar)).unwrap(), n).unwrap();
        let ft = tilde_big_f(&canonical_segperm(pi)).unwrap();
        let (case, rhs, s) = match b.len() {
            1 => (0, ft.contract_generator(Generator::Xi(n)), sign(pi.num_blocks() - 1)),
            2 => (1, ft.contract_generator(Generator::Theta(b.min().unwrap())), sign(n - 1)),
            _ => (2, ft.substitute_zero(Generator::Xi(n)).contract_generator(Generator::Theta(n)), sign(n)),
        };
        totals[case] += 1;
        failures[case] += usize::from(lhs != signed(&rhs, s));
    }
    for (case, label) in ["|B| = 1, sign (-1)^(k-1)", "|B| = 2, sign (-1)^(n-1)", "|B| >= 3, sign (-1)^n"].iter().enumerate() {
        ok &= log.check(
            failures[case] == 0,
            format!("n-removal {label}: {} of {} disagree", failures[case], totals[case]),
        );
    }
    ok
}

type Criterion = (usize, &'static str, u64, fn(&mut Log) -> bool);

const CRITERIA: &[Criterion] = &[
    (1, "worked examples", 1, worked_examples),
    (2, "Coxeter relations on C[NC(n)], n <= 6", 60, coxeter),
    (3, "greedy and algebraic resolution agree on Pi(6)", 120, oracle_equivalence),
    (4, "skein relation and psi identities", 60, skein_relation),
    (5, "Narayana ranks, Catalan counts", 120, basis_ranks),
    (6, "Frobenius images of skein strata", 300, frobenius_images),
    (7, "hook Kronecker identity, n <= 8", 60, hook_kronecker),
    (8, "FDR dimensions and bases, n <= 6", 300, fdr),
    (9, "quadratic ring Hilbert series and confluence", 120, quadratic_ring),
    (10, "tilde-F sign rule and n-removal on Pi(5)", 60, sign_rules),
];

fn main() {
    let mut failed = Vec::new();
    for &(id, title, budget, run) in CRITERIA {
        let mut log = Log(Vec::new());
        let start = Instant::now();
        let ok = run(&mut log);
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let verdict = if ok && in_time { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {verdict} {title} ({:.2} s, budget {budget} s)", elapsed.as_secs_f64());
        for line in &log.0 {
            println!("{line}");
        }
        if !in_time {
            println!("    [FAIL] over time budget");
        }
        if !(ok && in_time) {
            failed.push(id);
        }
    }
    println!("failed: {failed:?}, expected: {KNOWN_FAILURES:?}");
    if failed != KNOWN_FAILURES {
        std::process::exit(1);
    }
}
