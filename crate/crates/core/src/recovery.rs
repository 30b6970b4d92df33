//! Sharp recovery structures, erasure repair, and locality bounds.

use std::collections::BTreeSet;

use crate::code::{support, weight, LinearCode, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::oracle;
use crate::testset::{BuildStats, Options, TestSet};

/// Recovery data for one coordinate: a dual codeword `word` with the
/// coordinate in its support, and the set of coordinates read to repair it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoverySet {
    pub coord: usize,
    pub set: BTreeSet<usize>,
    pub word: Vec<Elem>,
}

impl RecoverySet {
    pub fn locality(&self) -> usize {
        self.set.len()
    }
}

/// An elementary recovery structure: one recovery set per coordinate.
#[derive(Clone, Debug)]
pub struct RecoveryStructure {
    code: LinearCode,
    sets: Vec<RecoverySet>,
    /// Whether the construction certified every set as smallest possible.
    certified: bool,
    /// Minimum distance of the code, when it was affordable to compute.
    min_distance: Option<usize>,
    stats: BuildStats,
}

impl RecoveryStructure {
    /// Assembles a structure from explicit sets, checking that each word is a
    /// dual codeword through its coordinate and that the set covers the rest
    /// of the word's support.
    pub fn from_sets(code: &LinearCode, sets: Vec<RecoverySet>) -> Result<RecoveryStructure> {
        if sets.len() != code.n() {
            return Err(Error::LengthMismatch { expected: code.n(), got: sets.len() });
        }
        for (i, s) in sets.iter().enumerate() {
            if s.coord != i {
                return Err(Error::Invariant(format!("set {i} is labelled for coordinate {}", s.coord)));
            }
            if s.word.get(i).is_none_or(|e| e.is_zero()) {
                return Err(Error::Invariant(format!("coordinate {} not in support of its word", i + 1)));
            }
            if !code.is_dual_codeword(&s.word)? {
                return Err(Error::Invariant(format!("word of coordinate {} is not a dual codeword", i + 1)));
            }
            if s.set.contains(&i) {
                return Err(Error::Invariant(format!("recovery set of {} contains itself", i + 1)));
            }
            let needed: BTreeSet<usize> = support(&s.word).into_iter().filter(|&j| j != i).collect();
            if !needed.is_subset(&s.set) {
                return Err(Error::Invariant(format!("recovery set of {} misses part of its word", i + 1)));
            }
            if let Some(&j) = s.set.iter().find(|&&j| j >= code.n()) {
                return Err(Error::IndexOutOfRange(j));
            }
        }
        Ok(RecoveryStructure { code: code.clone(), sets, certified: false, min_distance: None, stats: BuildStats::default() })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn sets(&self) -> &[RecoverySet] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &RecoverySet {
        &self.sets[i]
    }

    pub fn localities(&self) -> Vec<usize> {
        self.sets.iter().map(RecoverySet::locality).collect()
    }

    pub fn locality(&self) -> usize {
        self.sets.iter().map(RecoverySet::locality).max().unwrap_or(0)
    }

    /// Smallest weight among the recovery words.
    pub fn dual_distance(&self) -> usize {
        self.sets.iter().map(|s| weight(&s.word)).min().unwrap_or(0)
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.min_distance
    }

    pub fn stats(&self) -> &BuildStats {
        &self.stats
    }

    /// `Some(true)` iff the locality meets the Singleton-like bound with
    /// equality. Unknown when the minimum distance was not computed.
    pub fn is_optimal(&self) -> Option<bool> {
        let d = self.min_distance?;
        Some(singleton_slack(self.code.n(), self.code.k(), d, self.locality()) == Some(0))
    }

    /// Returns a copy with the minimum distance filled in.
    pub fn with_min_distance(mut self, d: usize) -> Self {
        self.min_distance = Some(d);
        self
    }

    /// Repairs coordinate `i` of `x` from its recovery set. Entries outside
    /// the set are ignored; if they are all present the completed vector is
    /// checked for membership.
    pub fn recover(&self, x: &[Option<Elem>], i: usize) -> Result<Elem> {
        self.code.check_len(x)?;
        if i >= self.code.n() {
            return Err(Error::IndexOutOfRange(i));
        }
        let value = self.solve(x, i)?;
        let mut full: Vec<Elem> = Vec::with_capacity(x.len());
        for (j, e) in x.iter().enumerate() {
            match (j == i, e) {
                (true, _) => full.push(value),
                (false, Some(e)) => full.push(*e),
                (false, None) => return Ok(value),
            }
        }
        if !self.code.is_codeword(&full)? {
            return Err(Error::NotACodeword);
        }
        Ok(value)
    }

    fn solve(&self, x: &[Option<Elem>], i: usize) -> Result<Elem> {
        let f = self.code.field();
        let s = &self.sets[i];
        let mut acc = Elem::ZERO;
        for &j in &s.set {
            let wj = s.word[j];
            if wj.is_zero() {
                continue;
            }
            let xj = x[j].ok_or(Error::RecoverySetErased { coord: i, erased: j })?;
            acc = f.add(acc, f.mul(wj, xj));
        }
        // x_i = -w_i^{-1} (sum over the rest of w_j x_j)
        let inv = f.inv(s.word[i])?;
        Ok(f.neg(f.mul(inv, acc)))
    }

    /// Repairs as many erasures as possible, repeatedly filling any erased
    /// coordinate whose recovery set is fully present.
    pub fn recover_multi(&self, x: &[Option<Elem>]) -> Result<Vec<Elem>> {
        self.code.check_len(x)?;
        let mut cur = x.to_vec();
        loop {
            let erased: Vec<usize> = (0..cur.len()).filter(|&j| cur[j].is_none()).collect();
            if erased.is_empty() {
                break;
            }
            let mut progress = false;
            for i in erased {
                if self.sets[i].set.iter().all(|&j| cur[j].is_some() || self.sets[i].word[j].is_zero()) {
                    cur[i] = Some(self.solve(&cur, i)?);
                    progress = true;
                }
            }
            if !progress {
                return Err(Error::Stalled((0..cur.len()).filter(|&j| cur[j].is_none()).collect()));
            }
        }
        let full: Vec<Elem> = cur.into_iter().map(|e| e.expect("all filled")).collect();
        if !self.code.is_codeword(&full)? {
            return Err(Error::NotACodeword);
        }
        Ok(full)
    }
}

/// Builds a sharp recovery structure for `code` from a test set of its dual.
pub fn sharp_structure(code: &LinearCode) -> Result<RecoveryStructure> {
    sharp_structure_with(code, &Options::recovery(), DEFAULT_BUDGET)
}

/// As [`sharp_structure`], with explicit test-set options. The minimum
/// distance (for the optimality flag) is computed only if `q^k` is within
/// `budget`.
pub fn sharp_structure_with(code: &LinearCode, opts: &Options, budget: u128) -> Result<RecoveryStructure> {
    if let Some(i) = code.weight_one_coordinate() {
        return Err(Error::DistanceOne(i));
    }
    let ts = TestSet::compute(code.field(), code.parity_check(), opts)?;
    sharp_structure_from(code, &ts, budget)
}

/// The sharp structure read off an already computed test set of the dual.
pub fn sharp_structure_from(code: &LinearCode, ts: &TestSet, budget: u128) -> Result<RecoveryStructure> {
    if let Some(i) = code.weight_one_coordinate() {
        return Err(Error::DistanceOne(i));
    }
    let uncovered = ts.uncovered();
    if !uncovered.is_empty() {
        return Err(Error::Incomplete(uncovered));
    }
    let mut structure = structure_from_test_set(code, ts)?;
    structure.certified = ts.is_certified();
    structure.stats = ts.stats().clone();
    if code.num_codewords() <= budget {
        structure.min_distance = Some(code.min_distance_exhaustive(budget)?);
    }
    Ok(structure)
}

/// Picks, for every coordinate, the lightest test-set word through it.
pub fn structure_from_test_set(code: &LinearCode, ts: &TestSet) -> Result<RecoveryStructure> {
    let mut sets = Vec::with_capacity(code.n());
    for i in 0..code.n() {
        let el = ts.lightest_through(i).ok_or_else(|| Error::Incomplete([i].into()))?;
        let set = support(&el.word).into_iter().filter(|&j| j != i).collect();
        sets.push(RecoverySet { coord: i, set, word: el.word.clone() });
    }
    let s = RecoveryStructure::from_sets(code, sets)?;
    check_recovery_sets(&s)?;
    Ok(s)
}

/// Every set must satisfy `dim C(R) = dim C(R ∪ {i})`.
fn check_recovery_sets(s: &RecoveryStructure) -> Result<()> {
    for rs in &s.sets {
        let mut with_i = rs.set.clone();
        with_i.insert(rs.coord);
        if s.code.projection_rank(&rs.set)? != s.code.projection_rank(&with_i)? {
            return Err(Error::Invariant(format!("set of coordinate {} is not a recovery set", rs.coord + 1)));
        }
    }
    Ok(())
}

/// `k + d + ⌈k/r⌉ ≤ n + 2`.
pub fn singleton_bound_check(n: usize, k: usize, d: usize, r: usize) -> bool {
    singleton_slack(n, k, d, r).is_some()
}

/// `(n + 2) − (k + d + ⌈k/r⌉)` when nonnegative.
fn singleton_slack(n: usize, k: usize, d: usize, r: usize) -> Option<usize> {
    if r == 0 {
        return None;
    }
    (n + 2).checked_sub(k + d + k.div_ceil(r))
}

/// Smallest `r ≥ 1` allowed by the Singleton-like bound.
pub fn singleton_locality_bound(n: usize, k: usize, d: usize) -> Option<usize> {
    (1..=k.max(1)).find(|&r| singleton_bound_check(n, k, d, r))
}

/// The larger of the Singleton-like bound and `d(C^⊥) − 1`.
pub fn locality_lower_bound(n: usize, k: usize, d: usize, dual_distance: usize) -> usize {
    let singleton = singleton_locality_bound(n, k, d).unwrap_or(0);
    singleton.max(dual_distance.saturating_sub(1))
}

/// Lower bound for a computed structure; needs its minimum distance.
pub fn locality_lower_bounds(s: &RecoveryStructure) -> Option<usize> {
    let d = s.min_distance?;
    Some(locality_lower_bound(s.code.n(), s.code.k(), d, s.dual_distance()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Every set has the exact per-coordinate locality (oracle-checked).
    /// `None` when the dual code is too large to enumerate.
    pub sharp: Option<bool>,
    pub optimal: Option<bool>,
}

/// Checks sharpness against the brute-force oracle and optimality against
/// the Singleton-like bound.
pub fn classify(s: &RecoveryStructure, budget: u128) -> Result<Classification> {
    let sharp = match s.code.dual() {
        Ok(dual) if dual.num_codewords() <= budget => {
            let exact = oracle::localities_exact(&s.code, budget)?;
            Some(exact.iter().zip(&s.sets).all(|(&e, rs)| e == rs.locality()))
        }
        _ => None,
    };
    let optimal = match s.min_distance {
        Some(_) => s.is_optimal(),
        None if s.code.num_codewords() <= budget => {
            let d = s.code.min_distance_exhaustive(budget)?;
            Some(singleton_slack(s.code.n(), s.code.k(), d, s.locality()) == Some(0))
        }
        None => None,
    };
    Ok(Classification { sharp, optimal })
}
