//! Text formats for partitions, permutations, segmented permutations and
//! fermions.
//!
//! Partitions are blocks of whitespace-separated integers split by `/`, as in
//! `1 3 / 2 4`; commas and an enclosing pair of braces are also accepted.
//! The ground set size is the largest element and every element of `1..=n`
//! must appear. Permutations are either `1 2 3 -> 2 3 1` (each source maps to
//! the target below it) or the one-line image `2 3 1`. Segmented permutations
//! split a one-line word into segments with `|`. Fermions are sums of terms
//! `c*t1 t3 x2` where `t`/`x` stand for `θ`/`ξ`.

use std::fmt;

use num_bigint::BigInt;
use skeinlab_core::extalg::{Generator, Monomial};
use skeinlab_core::{Fermion, Permutation, Rational, SegmentedPermutation, SetPartition, Subset, MAX_N};

/// A syntax or validation error with a 1-based column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: expected {}, found {}", self.column, self.expected, self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Sym(char),
    Arrow,
    Word(String),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "'{v}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Arrow => f.write_str("'->'"),
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(s: &str) -> Result<Self, ParseError> {
        let chars: Vec<char> = s.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v = text.parse().map_err(|_| ParseError {
                    column: col,
                    expected: "a small integer".into(),
                    found: format!("'{text}'"),
                })?;
                toks.push((Tok::Int(v), col));
            } else if c == '-' && chars.get(i + 1) == Some(&'>') {
                toks.push((Tok::Arrow, col));
                i += 2;
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                toks.push((Tok::Word(chars[start..i].iter().collect()), col));
            } else if "/|,{}*+-".contains(c) {
                toks.push((Tok::Sym(c), col));
                i += 1;
            } else {
                return Err(ParseError {
                    column: col,
                    expected: "a digit, '/', '|', '->' or whitespace".into(),
                    found: format!("'{c}'"),
                });
            }
        }
        toks.push((Tok::End, chars.len() + 1));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            column: self.column(),
            expected: expected.into(),
            found: self.peek().to_string(),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => Err(self.error("end of input")),
        }
    }

    /// An element of `1..=MAX_N`.
    fn element(&mut self) -> Result<(usize, usize), ParseError> {
        let col = self.column();
        match self.peek().clone() {
            Tok::Int(v) if (1..=MAX_N as u64).contains(&v) => {
                self.next();
                Ok((v as usize, col))
            }
            Tok::Int(_) => Err(self.error(&format!("an element of 1..={MAX_N}"))),
            _ => Err(self.error("an integer")),
        }
    }

    fn int_run(&mut self) -> Result<Vec<(usize, usize)>, ParseError> {
        let mut out = Vec::new();
        while matches!(self.peek(), Tok::Int(_)) {
            out.push(self.element()?);
            self.eat(',');
        }
        Ok(out)
    }
}

fn invalid(column: usize, expected: impl Into<String>, found: impl Into<String>) -> ParseError {
    ParseError {
        column,
        expected: expected.into(),
        found: found.into(),
    }
}

/// Parses a set partition; `n` is the largest element.
pub fn parse_partition(s: &str) -> Result<SetPartition, ParseError> {
    let mut lx = Lexer::new(s)?;
    let braced = lx.eat('{');
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    loop {
        let block = lx.int_run()?;
        if block.is_empty() {
            return Err(lx.error("an integer"));
        }
        blocks.push(block);
        if !lx.eat('/') {
            break;
        }
    }
    if braced && !lx.eat('}') {
        return Err(lx.error("'/' or '}'"));
    }
    lx.expect_end().map_err(|_| lx.error("an integer, '/' or end of input"))?;
    let n = blocks.iter().flatten().map(|&(v, _)| v).max().unwrap_or(0);
    let mut seen = vec![false; n + 1];
    for &(v, col) in blocks.iter().flatten() {
        if std::mem::replace(&mut seen[v], true) {
            return Err(invalid(col, "each element once", format!("a repeated {v}")));
        }
    }
    if let Some(missing) = (1..=n).find(|&v| !seen[v]) {
        return Err(invalid(1, format!("every element of 1..={n}"), format!("no {missing}")));
    }
    let sets = blocks.iter().map(|b| Subset::from_elements(b.iter().map(|&(v, _)| v))).collect();
    SetPartition::from_subsets(n, sets).map_err(|e| invalid(1, "a set partition", e.to_string()))
}

/// Parses a permutation, either as `a b c -> x y z` or as a one-line image.
pub fn parse_permutation(s: &str) -> Result<Permutation, ParseError> {
    let mut lx = Lexer::new(s)?;
    let first = lx.int_run()?;
    if first.is_empty() {
        return Err(lx.error("an integer"));
    }
    let n = first.len();
    let images: Vec<usize> = if *lx.peek() == Tok::Arrow {
        lx.next();
        let arrow_col = lx.column();
        let second = lx.int_run()?;
        lx.expect_end().map_err(|_| lx.error("an integer or end of input"))?;
        if second.len() != n {
            return Err(invalid(arrow_col, format!("{n} images"), format!("{}", second.len())));
        }
        let mut images = vec![0; n + 1];
        for (&(src, col), &(dst, _)) in first.iter().zip(&second) {
            if src > n || images[src] != 0 {
                return Err(invalid(col, format!("each of 1..={n} once as a source"), format!("'{src}'")));
            }
            images[src] = dst;
        }
        images[1..].to_vec()
    } else {
        lx.expect_end().map_err(|_| lx.error("an integer, '->' or end of input"))?;
        first.iter().map(|&(v, _)| v).collect()
    };
    Permutation::from_images(&images).map_err(|_| invalid(1, format!("a permutation of 1..={n}"), format!("{images:?}")))
}

/// Parses a segmented permutation such as `5 3 6 | 7 | 2 1 | 8 4`.
pub fn parse_segmented(s: &str) -> Result<SegmentedPermutation, ParseError> {
    let mut lx = Lexer::new(s)?;
    let mut segments = Vec::new();
    loop {
        let seg = lx.int_run()?;
        if seg.is_empty() {
            return Err(lx.error("an integer"));
        }
        segments.push(seg.iter().map(|&(v, _)| v).collect::<Vec<_>>());
        if !lx.eat('|') {
            break;
        }
    }
    lx.expect_end().map_err(|_| lx.error("an integer, '|' or end of input"))?;
    SegmentedPermutation::from_segments(&segments).map_err(|e| invalid(1, "a segmented permutation", e.to_string()))
}

/// Parses a fermion in rank `n`, or in the smallest rank holding all indices.
pub fn parse_fermion(s: &str, n: Option<usize>) -> Result<Fermion, ParseError> {
    let mut lx = Lexer::new(s)?;
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    let mut top = 0;
    if *lx.peek() == Tok::End {
        return Err(lx.error("a term"));
    }
    let mut first = true;
    while *lx.peek() != Tok::End {
        let mut sign = 1i64;
        if lx.eat('-') {
            sign = -1;
        } else if !lx.eat('+') && !first {
            return Err(lx.error("'+' or '-'"));
        }
        first = false;
        let mut coeff = Rational::from_integer(BigInt::from(sign));
        let mut has_coeff = false;
        if let Tok::Int(a) = *lx.peek() {
            lx.next();
            let mut c = Rational::from_integer(BigInt::from(a));
            if lx.eat('/') {
                match lx.next() {
                    (Tok::Int(b), _) if b > 0 => c /= Rational::from_integer(BigInt::from(b)),
                    (t, col) => return Err(invalid(col, "a positive denominator", t.to_string())),
                }
            }
            coeff *= c;
            has_coeff = true;
        }
        let mut m = Monomial::ONE;
        let mut gens = 0;
        if has_coeff && !lx.eat('*')
            && matches!(lx.peek(), Tok::Word(_)) {
                return Err(lx.error("'*'"));
            }
        while let Tok::Word(w) = lx.peek().clone() {
            let col = lx.column();
            lx.next();
            let g = match w.as_str() {
                "t" => Generator::Theta,
                "x" => Generator::Xi,
                _ => return Err(invalid(col, "'t' or 'x'", format!("'{w}'"))),
            };
            let (i, _) = lx.element()?;
            top = top.max(i);
            let (next, neg) = m
                .wedge(Monomial::generator(g(i)))
                .ok_or_else(|| invalid(col, "distinct generators within a term", format!("a repeated {w}{i}")))?;
            if neg {
                coeff = -coeff;
            }
            m = next;
            gens += 1;
        }
        if gens == 0 && !has_coeff {
            return Err(lx.error("a coefficient or generator"));
        }
        terms.push((m, coeff));
    }
    let n = n.unwrap_or(top);
    Fermion::from_terms(n, terms).map_err(|e| invalid(1, format!("indices within 1..={n}"), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        let p = parse_partition("1 3 / 2 4").unwrap();
        assert_eq!(p.to_string(), "1 3 / 2 4");
        assert_eq!(parse_partition("{1,3/2,4}").unwrap(), p);
        assert_eq!(parse_partition("  4 2/3 1 ").unwrap(), p);
        let e = parse_partition("1 3 / / 2").unwrap_err();
        assert_eq!((e.column, e.expected.as_str(), e.found.as_str()), (7, "an integer", "'/'"));
        assert!(parse_partition("1 3 / 4").unwrap_err().found.contains("no 2"));
        assert!(parse_partition("1 2 / 2").unwrap_err().found.contains("repeated 2"));
        assert_eq!(parse_partition("1 x").unwrap_err().column, 3);
        assert!(parse_partition("").is_err());
        assert!(parse_partition("1 17").is_err());
    }

    #[test]
    fn permutations() {
        let c = parse_permutation("1 2 3 4 5 6 -> 2 3 4 5 6 1").unwrap();
        assert_eq!(c, Permutation::long_cycle(6));
        assert_eq!(parse_permutation("2 3 4 5 6 1").unwrap(), c);
        assert_eq!(parse_permutation("3 1 2 -> 1 2 3").unwrap().images(), vec![2, 3, 1]);
        assert!(parse_permutation("1 1").is_err());
        assert_eq!(parse_permutation("1 2 -> 2").unwrap_err().column, 8);
        assert!(parse_permutation("1 2 -> 2 1 /").is_err());
    }

    #[test]
    fn segmented() {
        let sp = parse_segmented("5 3 6 | 7 | 2 1 | 8 4").unwrap();
        assert_eq!(sp.alpha(), &[3, 1, 2, 2]);
        assert_eq!(sp.to_string(), "5 3 6 | 7 | 2 1 | 8 4");
        assert!(parse_segmented("1 | | 2").is_err());
    }

    #[test]
    fn fermions() {
        let f = parse_fermion("2 - x1 + 3/2*t1 t3 x2", None).unwrap();
        assert_eq!(f.n(), 3);
        assert_eq!(f.to_string(), "2 - x1 + 3/2*t1 t3 x2");
        // Out-of-order generators pick up the sign of the reordering.
        assert_eq!(parse_fermion("x2 t1", Some(2)).unwrap(), -parse_fermion("t1 x2", Some(2)).unwrap());
        assert_eq!(parse_fermion("t1 - t1", Some(1)).unwrap().to_string(), "0");
        assert!(parse_fermion("t1 t1", None).is_err());
        assert!(parse_fermion("t1 x2", Some(1)).is_err());
        assert_eq!(parse_fermion("t1 x2 y3", None).unwrap_err().column, 7);
        assert!(parse_fermion("3 t1", None).is_err());
    }
}
