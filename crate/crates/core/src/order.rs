//! The weight-then-exponent-lex total order on GF(q)^n and a lazy enumerator
//! that walks the space in that order.
//!
//! Two vectors of equal weight are compared through their exponent vectors
//! `(log x_1, ..., log x_n)`, where a zero entry has the exponent −∞ and sorts
//! below every real exponent. Mapping `0 -> 0` and `ζ^e -> e + 1` turns each
//! vector into a base-q digit string whose numeric value is the tie-break, so
//! the enumerator only needs to count upward through digit strings with a
//! fixed number of nonzero digits.

use std::cmp::Ordering;

use crate::code::weight;
use crate::gf::{Elem, Field};

/// Exponent vector of `x`; `None` marks a zero entry (−∞).
pub fn exponent_vector(field: &Field, x: &[Elem]) -> Vec<Option<u32>> {
    x.iter().map(|&e| field.dlog(e)).collect()
}

/// Total order: weight first, then exponent vectors lexicographically.
///
/// Panics if the lengths differ.
pub fn compare(field: &Field, x: &[Elem], y: &[Elem]) -> Ordering {
    assert_eq!(x.len(), y.len(), "compare on vectors of different length");
    weight(x).cmp(&weight(y)).then_with(|| {
        x.iter()
            .zip(y)
            .find(|(a, b)| a != b)
            .map_or(Ordering::Equal, |(&a, &b)| field.rank(a).cmp(&field.rank(b)))
    })
}

#[inline]
pub fn precedes(field: &Field, x: &[Elem], y: &[Elem]) -> bool {
    compare(field, x, y) == Ordering::Less
}

/// Number of vectors of weight `1..=wmax` in GF(q)^n.
pub fn count_upto(n: usize, q: u32, wmax: usize) -> u128 {
    (1..=wmax.min(n)).fold(0u128, |acc, w| acc.saturating_add(binomial(n, w).saturating_mul((q as u128 - 1).saturating_pow(w as u32))))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1u128;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Streams every nonzero vector of weight at most `wmax`, strictly
/// increasing under [`compare`].
#[derive(Clone, Debug)]
pub struct Enumerator {
    field: Field,
    // digits[j] = rank of entry j
    digits: Vec<u32>,
    current: Vec<Elem>,
    weight: usize,
    wmin: usize,
    wmax: usize,
    started: bool,
    exhausted: bool,
}

impl Enumerator {
    pub fn new(field: &Field, n: usize, wmax: usize) -> Enumerator {
        Enumerator::with_range(field, n, 1, wmax)
    }

    /// Only vectors with weight in `wmin..=wmax`.
    pub fn with_range(field: &Field, n: usize, wmin: usize, wmax: usize) -> Enumerator {
        let wmax = wmax.min(n);
        let wmin = wmin.max(1);
        Enumerator {
            field: field.clone(),
            digits: vec![0; n],
            current: vec![Elem::ZERO; n],
            weight: 0,
            wmin,
            wmax,
            started: false,
            exhausted: wmin > wmax,
        }
    }

    /// Weight of the vectors currently being produced (0 before the first
    /// call to [`Enumerator::advance`]).
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Weight of the vector the next call to [`Enumerator::advance`] will
    /// return, or `None` if the stream is exhausted. Does not advance.
    pub fn peek_weight(&self) -> Option<usize> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            return Some(self.wmin);
        }
        let mut probe = self.digits.clone();
        if successor(&mut probe, self.weight, self.field.q()) {
            Some(self.weight)
        } else if self.weight < self.wmax {
            Some(self.weight + 1)
        } else {
            None
        }
    }

    /// Moves to the next vector and borrows it.
    pub fn advance(&mut self) -> Option<&[Elem]> {
        if self.exhausted {
            return None;
        }
        let q = self.field.q();
        if !self.started {
            self.started = true;
            self.weight = self.wmin;
            fill_smallest(&mut self.digits, 0, self.wmin);
        } else if !successor(&mut self.digits, self.weight, q) {
            if self.weight == self.wmax {
                self.exhausted = true;
                return None;
            }
            self.weight += 1;
            self.digits.iter_mut().for_each(|d| *d = 0);
            fill_smallest(&mut self.digits, 0, self.weight);
        }
        for (e, &d) in self.current.iter_mut().zip(&self.digits) {
            *e = self.field.from_rank(d);
        }
        Some(&self.current)
    }
}

impl Iterator for Enumerator {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        self.advance().map(<[Elem]>::to_vec)
    }
}

/// Writes the smallest digit string with `count` nonzero digits into
/// `digits[from..]`: zeros followed by trailing ones.
fn fill_smallest(digits: &mut [u32], from: usize, count: usize) {
    let len = digits.len();
    for (j, d) in digits.iter_mut().enumerate().skip(from) {
        *d = if j >= len - count { 1 } else { 0 };
    }
}

/// Next digit string (most significant first) with exactly `w` nonzero
/// digits. Returns false if `digits` is already the largest.
fn successor(digits: &mut [u32], w: usize, q: u32) -> bool {
    let n = digits.len();
    let mut prefix_nonzero: Vec<usize> = Vec::with_capacity(n + 1);
    prefix_nonzero.push(0);
    for &d in digits.iter() {
        let last = *prefix_nonzero.last().unwrap();
        prefix_nonzero.push(last + usize::from(d != 0));
    }
    for pos in (0..n).rev() {
        let d = digits[pos];
        if d + 1 >= q {
            continue;
        }
        // raising a digit never turns it into zero, so the new digit is nonzero
        let used = prefix_nonzero[pos] + 1;
        if used > w {
            continue;
        }
        let need = w - used;
        let room = n - pos - 1;
        if need > room {
            continue;
        }
        digits[pos] = d + 1;
        fill_smallest(digits, pos + 1, need);
        return true;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[u16]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn example_pair_over_gf4() {
        let f = Field::with_default_poly(4).unwrap();
        // (1, α, 0, α²) vs (α², α, 0, α) with α = 2 and α² = 3
        let x = v(&[1, 2, 0, 3]);
        let y = v(&[3, 2, 0, 2]);
        assert_eq!(exponent_vector(&f, &x), vec![Some(0), Some(1), None, Some(2)]);
        assert_eq!(compare(&f, &x, &y), Ordering::Less);
        assert_eq!(compare(&f, &x, &x), Ordering::Equal);
        assert_eq!(compare(&f, &y, &x), Ordering::Greater);
    }

    #[test]
    fn zero_sorts_below_exponents() {
        let f = Field::with_default_poly(2).unwrap();
        assert_eq!(compare(&f, &v(&[0, 0, 1]), &v(&[0, 1, 0])), Ordering::Less);
        assert_eq!(compare(&f, &v(&[1, 1, 0]), &v(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn enumerate_weight_one_binary() {
        let f = Field::with_default_poly(2).unwrap();
        let got: Vec<_> = Enumerator::new(&f, 3, 1).collect();
        assert_eq!(got, vec![v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])]);
    }

    #[test]
    fn enumerate_empty_for_zero_weight() {
        let f = Field::with_default_poly(3).unwrap();
        assert_eq!(Enumerator::new(&f, 4, 0).count(), 0);
        assert_eq!(Enumerator::new(&f, 4, 0).peek_weight(), None);
    }

    #[test]
    fn enumerate_counts_match_binomial_sums() {
        for q in [2u64, 3, 4, 5] {
            let f = Field::with_default_poly(q).unwrap();
            for n in 1..=5 {
                for wmax in 0..=n {
                    let got = Enumerator::new(&f, n, wmax).count() as u128;
                    assert_eq!(got, count_upto(n, q as u32, wmax), "q={q} n={n} wmax={wmax}");
                }
            }
        }
        assert_eq!(count_upto(10, 2, 7), 967);
    }

    #[test]
    fn enumeration_is_strictly_increasing_and_exhaustive() {
        for q in [2u64, 3, 4] {
            let f = Field::with_default_poly(q).unwrap();
            let n = 4;
            let all: Vec<_> = Enumerator::new(&f, n, n).collect();
            for pair in all.windows(2) {
                assert_eq!(compare(&f, &pair[0], &pair[1]), Ordering::Less);
            }
            assert_eq!(all.len() as u64, q.pow(n as u32) - 1);
        }
    }

    #[test]
    fn peek_weight_tracks_levels() {
        let f = Field::with_default_poly(2).unwrap();
        let mut e = Enumerator::new(&f, 3, 2);
        assert_eq!(e.peek_weight(), Some(1));
        for _ in 0..3 {
            e.advance();
        }
        assert_eq!(e.weight(), 1);
        assert_eq!(e.peek_weight(), Some(2));
        for _ in 0..3 {
            e.advance();
        }
        assert_eq!(e.peek_weight(), None);
        assert!(e.advance().is_none());
    }

    #[test]
    fn single_level_range() {
        let f = Field::with_default_poly(3).unwrap();
        let lvl: Vec<_> = Enumerator::with_range(&f, 4, 2, 2).collect();
        assert_eq!(lvl.len(), 6 * 4);
        assert!(lvl.iter().all(|x| weight(x) == 2));
        let all: Vec<_> = Enumerator::new(&f, 4, 2).filter(|x| weight(x) == 2).collect();
        assert_eq!(lvl, all);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(50, 25), 126_410_606_437_752);
    }
}
