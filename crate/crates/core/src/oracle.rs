//! Brute-force ground truth for small codes.
//!
//! Nothing here touches the ordering, the test-set engine or the recovery
//! module; everything is answered by enumerating codewords or coefficient
//! vectors outright.

use std::collections::BTreeSet;

use crate::code::{support, weight, LinearCode};
use crate::error::{Error, Result};
use crate::gf::Elem;

/// All codewords of `code`, provided there are at most `budget` of them.
pub fn enumerate_codewords(code: &LinearCode, budget: u128) -> Result<Vec<Vec<Elem>>> {
    Ok(code.codewords(budget)?.collect())
}

/// Dual codewords, by enumerating the dual code's messages.
fn dual_codewords(code: &LinearCode, budget: u128) -> Result<Vec<Vec<Elem>>> {
    let h = code.parity_check();
    if h.is_empty() {
        return Ok(vec![vec![Elem::ZERO; code.n()]]);
    }
    // The parity-check rows generate the dual even when it is degenerate,
    // so walk their span directly instead of going through `dual()`.
    let f = code.field();
    let count = (f.q() as u128).checked_pow(h.len() as u32).unwrap_or(u128::MAX);
    if count > budget {
        return Err(Error::BudgetExceeded { needed: count, budget });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut msg = vec![0u32; h.len()];
    loop {
        let mut x = vec![Elem::ZERO; code.n()];
        for (row, &m) in h.iter().zip(&msg) {
            f.axpy(&mut x, Elem(m as u16), row);
        }
        out.push(x);
        let mut t = 0;
        loop {
            if t == msg.len() {
                return Ok(out);
            }
            msg[t] += 1;
            if msg[t] < f.q() {
                break;
            }
            msg[t] = 0;
            t += 1;
        }
    }
}

/// Exact per-coordinate locality: the lightest dual codeword through `i`,
/// minus one.
pub fn loc_exact(code: &LinearCode, i: usize, budget: u128) -> Result<usize> {
    if i >= code.n() {
        return Err(Error::IndexOutOfRange(i));
    }
    let dual = dual_codewords(code, budget)?;
    lightest_through(&dual, i).map(|w| w - 1).ok_or(Error::DistanceOne(i))
}

/// [`loc_exact`] for every coordinate, sharing one enumeration.
pub fn localities_exact(code: &LinearCode, budget: u128) -> Result<Vec<usize>> {
    let dual = dual_codewords(code, budget)?;
    (0..code.n()).map(|i| lightest_through(&dual, i).map(|w| w - 1).ok_or(Error::DistanceOne(i))).collect()
}

/// Lightest weight of a dual codeword through each coordinate.
pub fn dual_weights_through(code: &LinearCode, budget: u128) -> Result<Vec<Option<usize>>> {
    let dual = dual_codewords(code, budget)?;
    Ok((0..code.n()).map(|i| lightest_through(&dual, i)).collect())
}

fn lightest_through(words: &[Vec<Elem>], i: usize) -> Option<usize> {
    words.iter().filter(|w| !w[i].is_zero()).map(|w| weight(w)).min()
}

/// Minimum distance of the dual, by enumeration of the dual.
pub fn dual_distance(code: &LinearCode, budget: u128) -> Result<usize> {
    let dual = dual_codewords(code, budget)?;
    Ok(dual.iter().map(|w| weight(w)).filter(|&w| w > 0).min().unwrap_or(0))
}

fn nonzero_codeword(code: &LinearCode, x: &[Elem]) -> Result<()> {
    if !code.is_codeword(x)? || x.iter().all(|e| e.is_zero()) {
        return Err(Error::NotACodeword);
    }
    Ok(())
}

/// No nonzero codeword has support strictly inside `supp(x)`.
pub fn is_minimal(code: &LinearCode, x: &[Elem], budget: u128) -> Result<bool> {
    nonzero_codeword(code, x)?;
    let sx = support(x);
    for y in code.codewords(budget)? {
        let sy = support(&y);
        if !sy.is_empty() && sy.is_subset(&sx) && sy != sx {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `i ∈ supp(x)` and no codeword `y` has `i ∈ supp(y) ⊊ supp(x)`.
pub fn is_i_minimal(code: &LinearCode, x: &[Elem], i: usize, budget: u128) -> Result<bool> {
    nonzero_codeword(code, x)?;
    if x.get(i).is_none_or(|e| e.is_zero()) {
        return Ok(false);
    }
    let sx = support(x);
    for y in code.codewords(budget)? {
        if y[i].is_zero() {
            continue;
        }
        let sy = support(&y);
        if sy.is_subset(&sx) && sy != sx {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three characterizations of "R is a recovery set for i":
/// column `i` of `G` is a combination of the columns in `R` (searched over
/// all coefficient vectors); the projection ranks on `R` and `R ∪ {i}`
/// agree; some dual codeword has `i ∈ supp ⊆ R ∪ {i}`.
pub fn recovery_set_equiv(code: &LinearCode, r: &BTreeSet<usize>, i: usize, budget: u128) -> Result<(bool, bool, bool)> {
    let n = code.n();
    if i >= n {
        return Err(Error::IndexOutOfRange(i));
    }
    if let Some(&j) = r.iter().find(|&&j| j >= n) {
        return Err(Error::IndexOutOfRange(j));
    }
    if r.contains(&i) {
        return Err(Error::Invariant(format!("coordinate {} is inside R", i + 1)));
    }
    let f = code.field();
    let g = code.generator();
    let col = |j: usize| -> Vec<Elem> { g.iter().map(|row| row[j]).collect() };
    let target = col(i);
    let cols: Vec<Vec<Elem>> = r.iter().map(|&j| col(j)).collect();

    let combos = (f.q() as u128).checked_pow(cols.len() as u32).unwrap_or(u128::MAX);
    if combos > budget {
        return Err(Error::BudgetExceeded { needed: combos, budget });
    }
    let mut in_span = false;
    let mut coeffs = vec![0u32; cols.len()];
    'search: loop {
        let mut acc = vec![Elem::ZERO; g.len()];
        for (c, &a) in cols.iter().zip(&coeffs) {
            f.axpy(&mut acc, Elem(a as u16), c);
        }
        if acc == target {
            in_span = true;
            break;
        }
        let mut t = 0;
        loop {
            if t == coeffs.len() {
                break 'search;
            }
            coeffs[t] += 1;
            if coeffs[t] < f.q() {
                break;
            }
            coeffs[t] = 0;
            t += 1;
        }
    }

    let mut with_i = r.clone();
    with_i.insert(i);
    let ranks_equal = code.projection_rank(r)? == code.projection_rank(&with_i)?;

    let dual_word = dual_codewords(code, budget)?.iter().any(|w| !w[i].is_zero() && support(w).is_subset(&with_i));

    Ok((in_span, ranks_equal, dual_word))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k.min(n + 1)).fold(1u128, |acc, i| if i >= n { 0 } else { acc * (n - i) as u128 / (i + 1) as u128 })
}

/// Upper bound on the candidates drawn by the test-set search for a code of
/// length `n` and dimension `k`: `Σ_{i=0}^{n-k+1} C(n,i) (q-1)^i`.
pub fn d_bound(n: usize, k: usize, q: u32) -> u128 {
    let top = (n + 1).saturating_sub(k).min(n);
    (0..=top).fold(0u128, |acc, i| acc.saturating_add(binomial(n, i).saturating_mul((q as u128 - 1).saturating_pow(i as u32))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;
    use crate::gf::Field;

    fn v(xs: &[u16]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem(x)).collect()
    }

    fn toy() -> LinearCode {
        let f = Field::with_default_poly(2).unwrap();
        LinearCode::from_generator(&f, &[v(&[1, 0, 1]), v(&[0, 1, 1])]).unwrap()
    }

    #[test]
    fn toy_enumeration_and_locality() {
        let c = toy();
        assert_eq!(enumerate_codewords(&c, DEFAULT_BUDGET).unwrap().len(), 4);
        for i in 0..3 {
            assert_eq!(loc_exact(&c, i, DEFAULT_BUDGET).unwrap(), 2);
        }
        assert_eq!(dual_distance(&c, DEFAULT_BUDGET).unwrap(), 3);
        let d = c.dual().unwrap();
        assert!(is_minimal(&d, &v(&[1, 1, 1]), DEFAULT_BUDGET).unwrap());
        assert_eq!(is_minimal(&d, &v(&[1, 0, 1]), DEFAULT_BUDGET).unwrap_err(), Error::NotACodeword);
    }

    #[test]
    fn repetition_locality() {
        let f = Field::with_default_poly(2).unwrap();
        let c = LinearCode::from_generator(&f, &[v(&[1, 1, 1, 1])]).unwrap();
        assert_eq!(localities_exact(&c, DEFAULT_BUDGET).unwrap(), vec![1; 4]);
    }

    #[test]
    fn prop1_toy() {
        let c = toy();
        assert_eq!(recovery_set_equiv(&c, &[1, 2].into(), 0, DEFAULT_BUDGET).unwrap(), (true, true, true));
        assert_eq!(recovery_set_equiv(&c, &BTreeSet::new(), 0, DEFAULT_BUDGET).unwrap(), (false, false, false));
        assert_eq!(recovery_set_equiv(&c, &[1].into(), 0, DEFAULT_BUDGET).unwrap(), (false, false, false));
    }

    #[test]
    fn d_bound_values() {
        assert_eq!(d_bound(10, 4, 2), 968);
        assert_eq!(d_bound(6, 6, 3), 1 + 6 * 2);
        let want: u128 = (0..=6).map(|i| binomial(9, i) * 3u128.pow(i as u32)).sum();
        assert_eq!(d_bound(9, 4, 4), want);
    }

    #[test]
    fn minimality_agrees_with_per_coordinate_minimality() {
        let f = Field::with_default_poly(3).unwrap();
        let c = LinearCode::from_generator(&f, &[v(&[1, 0, 1, 2, 1]), v(&[0, 1, 2, 1, 1])]).unwrap();
        let d = c.min_distance_exhaustive(DEFAULT_BUDGET).unwrap();
        for x in enumerate_codewords(&c, DEFAULT_BUDGET).unwrap() {
            if weight(&x) == 0 {
                continue;
            }
            let minimal = is_minimal(&c, &x, DEFAULT_BUDGET).unwrap();
            if weight(&x) == d {
                assert!(minimal);
            }
            let per_i: Vec<bool> = support(&x).into_iter().map(|i| is_i_minimal(&c, &x, i, DEFAULT_BUDGET).unwrap()).collect();
            assert_eq!(minimal, per_i.iter().all(|&b| b));
            assert_eq!(minimal, per_i.iter().any(|&b| b));
        }
    }
}
