//! Classical counting sequences used as oracles throughout the crate.

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Binomial coefficient with the convention `C(n, k) = 0` for negative `k`.
pub fn binomial_signed(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as usize, k as usize)
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// Narayana number: noncrossing partitions of `[n]` with `k` blocks.
/// `Nar(0, 0) = 1`.
pub fn narayana(n: usize, k: usize) -> u128 {
    if n == 0 {
        return u128::from(k == 0);
    }
    if k == 0 || k > n {
        return 0;
    }
    binomial(n, k) * binomial(n, k - 1) / n as u128
}

/// Stirling number of the second kind.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = alloc::vec![0u128; k + 1];
    row[0] = 1;
    for m in 1..=n {
        for j in (1..=k.min(m)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

pub fn bell(n: usize) -> u128 {
    (0..=n).map(|k| stirling2(n, k)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(catalan(4), 14);
        assert_eq!(catalan(10), 16796);
        assert_eq!(narayana(4, 2), 6);
        assert_eq!(narayana(7, 3), 105);
        assert_eq!(stirling2(3, 2), 3);
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(stirling2(4, 0), 0);
        assert_eq!(bell(3), 5);
        assert_eq!(bell(6), 203);
        assert_eq!(factorial(7), 5040);
    }

    #[test]
    fn narayana_rows_sum_to_catalan() {
        for n in 0..=12 {
            let s: u128 = (0..=n).map(|k| narayana(n, k)).sum();
            assert_eq!(s, catalan(n));
        }
    }
}
