//! Gröbner test sets for linear codes.
//!
//! The construction walks GF(q)^n in increasing [`compare`] order and sorts
//! every visited vector into one of three bins:
//!
//! * **skipped**: some vector obtained by deleting one nonzero entry is not a
//!   coset leader, so this vector is neither a leader nor a minimal
//!   non-leader;
//! * **leader**: its coset (keyed by syndrome) has not been seen yet, so it is
//!   the smallest vector of its coset;
//! * **syzygy**: its coset already has a leader `u`, so `v − u` is a codeword
//!   and `(v, u)` is recorded, unless `v = λ ℓ` for an existing lead `ℓ` whose
//!   scaled trail `λ u_ℓ` is still below `v`, in which case the scaled element
//!   already reduces it.
//!
//! The emitted pairs form a reduction system: reducing any vector by them
//! ends at its coset leader, so a vector is a codeword exactly when it
//! reduces to zero. Each coordinate's lightest word through that coordinate
//! also has the smallest weight any codeword through it can have; the
//! recovery module builds on that.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use crate::code::{support, weight, LinearCode, Matrix};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::key::{Key, Packer};
use crate::order::{compare, Enumerator};

/// A codeword written as `lead − trail` with `trail` below `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy {
    pub lead: Vec<Elem>,
    pub trail: Vec<Elem>,
    pub word: Vec<Elem>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Stop once every coordinate's lightest word is certified minimal.
    #[default]
    Recovery,
    /// Run until every coset leader and every minimal non-leader is known.
    Full,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub mode: Mode,
    /// Largest candidate weight to draw. `None` uses `n − r + 1` for an
    /// `r`-dimensional code, which bounds both the covering radius plus one
    /// and the weight of any minimal codeword.
    pub weight_bound: Option<usize>,
}

impl Options {
    pub fn full() -> Options {
        Options { mode: Mode::Full, weight_bound: None }
    }

    pub fn recovery() -> Options {
        Options { mode: Mode::Recovery, weight_bound: None }
    }
}

/// Bookkeeping from a construction run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Vectors drawn from the enumerator.
    pub candidates: u64,
    /// Highest candidate weight whose level was fully processed.
    pub levels_completed: usize,
    pub weight_bound: usize,
    pub leaders: usize,
    /// Minimal non-leaders dropped because a scaled element covers them.
    pub pruned: usize,
}

/// `true` iff some `λ ≠ 0` has `w_j = λ g_j` on the support of `g`.
pub fn divides(field: &Field, g: &[Elem], w: &[Elem]) -> bool {
    division_scalar(field, g, w).is_some()
}

/// The scalar `λ` with `w_j = λ g_j` for every `j` in `supp(g)`, if any.
/// The zero vector divides everything with `λ = 1`.
pub fn division_scalar(field: &Field, g: &[Elem], w: &[Elem]) -> Option<Elem> {
    let mut lambda = None;
    for (&a, &b) in g.iter().zip(w) {
        if a.is_zero() {
            continue;
        }
        if b.is_zero() {
            return None;
        }
        let l = field.div(b, a).ok()?;
        match lambda {
            None => lambda = Some(l),
            Some(prev) if prev != l => return None,
            _ => {}
        }
    }
    Some(lambda.unwrap_or(Elem::ONE))
}

/// All single reduction steps `x − λ t` (λ ≠ 0, `t` in `words`) that land
/// strictly below `x`, as `(word index, λ, result)`.
pub fn single_step_reductions(field: &Field, x: &[Elem], words: &[Vec<Elem>]) -> Vec<(usize, Elem, Vec<Elem>)> {
    let mut out = Vec::new();
    for (idx, t) in words.iter().enumerate() {
        for lambda in field.nonzero() {
            let mut y = x.to_vec();
            field.axpy(&mut y, field.neg(lambda), t);
            if compare(field, &y, x) == Ordering::Less {
                out.push((idx, lambda, y));
            }
        }
    }
    out
}

/// Reduces `x` by an arbitrary list of words, always taking the first
/// improving step. Without the test-set structure the result need not be
/// unique.
pub fn reduce_by_words(field: &Field, x: &[Elem], words: &[Vec<Elem>]) -> Vec<Elem> {
    let mut r = x.to_vec();
    while let Some(next) = first_step(field, &r, words.iter().map(Vec::as_slice)) {
        r = next;
    }
    r
}

fn first_step<'a>(field: &Field, x: &[Elem], words: impl Iterator<Item = &'a [Elem]>) -> Option<Vec<Elem>> {
    for t in words {
        for lambda in field.nonzero() {
            let mut y = x.to_vec();
            field.axpy(&mut y, field.neg(lambda), t);
            if compare(field, &y, x) == Ordering::Less {
                return Some(y);
            }
        }
    }
    None
}

fn normalize(field: &Field, x: &[Elem]) -> Vec<Elem> {
    match x.iter().find(|e| !e.is_zero()) {
        Some(&first) => {
            let inv = field.inv(first).expect("nonzero");
            field.scale(inv, x)
        }
        None => x.to_vec(),
    }
}

/// A Gröbner test set of a linear code.
#[derive(Clone, Debug)]
pub struct TestSet {
    code: LinearCode,
    elements: Vec<Syzygy>,
    packer: Packer,
    by_lead: HashMap<Key, usize>,
    by_normalized_lead: HashMap<Key, Vec<usize>>,
    max_lead_weight: usize,
    /// Per coordinate, the smallest weight of an element word through it.
    coverage: Vec<Option<usize>>,
    complete: bool,
    certified: bool,
    stats: BuildStats,
}

impl TestSet {
    /// Computes a test set for the code generated by `rows`.
    pub fn compute(field: &Field, rows: &[Vec<Elem>], opts: &Options) -> Result<TestSet> {
        let code = LinearCode::from_generator(field, rows)?;
        Ok(Builder::new(code, opts).run())
    }

    /// Computes a test set for an existing code.
    pub fn for_code(code: &LinearCode, opts: &Options) -> TestSet {
        Builder::new(code.clone(), opts).run()
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn field(&self) -> &Field {
        self.code.field()
    }

    pub fn elements(&self) -> &[Syzygy] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn stats(&self) -> &BuildStats {
        &self.stats
    }

    /// True when every coset leader and minimal non-leader has been found,
    /// so that reduction decides membership.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// True when each coordinate's lightest element word is known to be a
    /// lightest codeword through that coordinate.
    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn coverage(&self) -> &[Option<usize>] {
        &self.coverage
    }

    pub fn leads(&self) -> impl Iterator<Item = &[Elem]> {
        self.elements.iter().map(|s| s.lead.as_slice())
    }

    /// Element with exactly this lead.
    pub fn find_lead(&self, lead: &[Elem]) -> Option<&Syzygy> {
        self.by_lead.get(&self.packer.key(lead)).map(|&i| &self.elements[i])
    }

    /// Among elements whose word contains coordinate `i`, the lightest.
    ///
    /// Ties prefer the support whose sorted coordinate list is
    /// lexicographically first (recovery sets lean towards low coordinates),
    /// then the word that is smallest under [`compare`].
    pub fn lightest_through(&self, i: usize) -> Option<&Syzygy> {
        let f = self.field();
        self.elements.iter().filter(|s| !s.word[i].is_zero()).min_by(|a, b| {
            weight(&a.word)
                .cmp(&weight(&b.word))
                .then_with(|| support(&a.word).cmp(&support(&b.word)))
                .then_with(|| compare(f, &a.word, &b.word))
        })
    }

    /// One step of reduction: some `x − λ t` strictly below `x`.
    pub fn reduce_step(&self, x: &[Elem]) -> Option<Vec<Elem>> {
        if let Some(y) = self.indexed_step(x) {
            return Some(y);
        }
        if self.complete {
            // every reducible vector has a lead dividing it
            return None;
        }
        first_step(self.field(), x, self.elements.iter().map(|s| s.word.as_slice()))
    }

    /// Reduces `x` until no element applies.
    pub fn reduce(&self, x: &[Elem]) -> Vec<Elem> {
        let mut r = x.to_vec();
        while let Some(next) = self.reduce_step(&r) {
            r = next;
        }
        r
    }

    /// The whole chain `x = v_0 ≻ v_1 ≻ ... ≻ v_s`, normal form last.
    pub fn reduce_trace(&self, x: &[Elem]) -> Vec<Vec<Elem>> {
        let mut chain = vec![x.to_vec()];
        while let Some(next) = self.reduce_step(chain.last().unwrap()) {
            chain.push(next);
        }
        chain
    }

    /// Membership by reduction to zero. Exact only for complete test sets;
    /// for partial ones `true` is still a proof of membership.
    pub fn is_member(&self, x: &[Elem]) -> bool {
        self.reduce(x).iter().all(|e| e.is_zero())
    }

    /// Searches the lead indices for an element that divides a sub-vector of
    /// `x` supported on at most `max_lead_weight` coordinates.
    fn indexed_step(&self, x: &[Elem]) -> Option<Vec<Elem>> {
        let f = self.field();
        let supp: Vec<usize> = support(x).into_iter().collect();
        let limit = self.max_lead_weight.min(supp.len());
        let mut chosen = Vec::with_capacity(limit);
        let mut found = None;
        for size in 1..=limit {
            subsets(&supp, size, 0, &mut chosen, &mut |s| {
                let mut sub = vec![Elem::ZERO; x.len()];
                for &j in s {
                    sub[j] = x[j];
                }
                if let Some(&idx) = self.by_lead.get(&self.packer.key(&sub)) {
                    let mut y = x.to_vec();
                    field_sub_assign(f, &mut y, Elem::ONE, &self.elements[idx].word);
                    found = Some(y);
                    return true;
                }
                let norm = normalize(f, &sub);
                if let Some(list) = self.by_normalized_lead.get(&self.packer.key(&norm)) {
                    for &idx in list {
                        let el = &self.elements[idx];
                        let lambda = division_scalar(f, &el.lead, &sub).expect("same normal form");
                        let mut y = x.to_vec();
                        field_sub_assign(f, &mut y, lambda, &el.word);
                        if compare(f, &y, x) == Ordering::Less {
                            found = Some(y);
                            return true;
                        }
                    }
                }
                false
            });
            if found.is_some() {
                break;
            }
        }
        found
    }

    /// Rebuilds a test set from serialized elements, for inspection and
    /// reduction. Completeness is not re-established.
    pub fn from_elements(code: &LinearCode, elements: Vec<Syzygy>) -> Result<TestSet> {
        let f = code.field();
        let packer = Packer::new(f.q(), code.n());
        let mut ts = TestSet {
            code: code.clone(),
            elements: Vec::new(),
            packer,
            by_lead: HashMap::new(),
            by_normalized_lead: HashMap::new(),
            max_lead_weight: 0,
            coverage: vec![None; code.n()],
            complete: false,
            certified: false,
            stats: BuildStats::default(),
        };
        for s in elements {
            code.check_len(&s.lead)?;
            code.check_len(&s.trail)?;
            if f.sub_vec(&s.lead, &s.trail) != s.word || !code.is_codeword(&s.word)? {
                return Err(Error::Invariant("element word is not lead - trail in the code".into()));
            }
            if compare(f, &s.trail, &s.lead) != Ordering::Less {
                return Err(Error::Invariant("element trail does not precede its lead".into()));
            }
            ts.push(s);
        }
        Ok(ts)
    }

    fn push(&mut self, s: Syzygy) {
        let idx = self.elements.len();
        self.by_lead.insert(self.packer.key(&s.lead), idx);
        let norm = normalize(self.field(), &s.lead);
        self.by_normalized_lead.entry(self.packer.key(&norm)).or_default().push(idx);
        self.max_lead_weight = self.max_lead_weight.max(weight(&s.lead));
        let w = weight(&s.word);
        for i in support(&s.word) {
            let c = &mut self.coverage[i];
            *c = Some(c.map_or(w, |old| old.min(w)));
        }
        self.elements.push(s);
    }

    /// Coordinates not yet touched by any element word.
    pub fn uncovered(&self) -> BTreeSet<usize> {
        self.coverage.iter().enumerate().filter(|(_, c)| c.is_none()).map(|(i, _)| i).collect()
    }
}

fn field_sub_assign(f: &Field, y: &mut [Elem], lambda: Elem, word: &[Elem]) {
    f.axpy(y, f.neg(lambda), word);
}

/// Calls `visit` on each `size`-subset of `items`, stopping early when it
/// returns true.
fn subsets(items: &[usize], size: usize, start: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if chosen.len() == size {
        return visit(chosen);
    }
    let remaining = size - chosen.len();
    for i in start..=items.len().saturating_sub(remaining) {
        if i >= items.len() {
            break;
        }
        chosen.push(items[i]);
        let stop = subsets(items, size, i + 1, chosen, visit);
        chosen.pop();
        if stop {
            return true;
        }
    }
    false
}

struct Builder {
    code: LinearCode,
    opts: Options,
    packer: Packer,
    syndrome_packer: Packer,
    // column j of the parity-check matrix
    columns: Matrix,
    leaders: Vec<Vec<Elem>>,
    leader_keys: HashSet<Key>,
    cosets: HashMap<Key, usize>,
    max_leader_weight: usize,
}

impl Builder {
    fn new(code: LinearCode, opts: &Options) -> Builder {
        let f = code.field().clone();
        let n = code.n();
        let h = code.parity_check();
        let columns: Matrix = (0..n).map(|j| h.iter().map(|r| r[j]).collect()).collect();
        let packer = Packer::new(f.q(), n);
        let syndrome_packer = Packer::new(f.q(), h.len());
        Builder {
            code,
            opts: *opts,
            packer,
            syndrome_packer,
            columns,
            leaders: Vec::new(),
            leader_keys: HashSet::new(),
            cosets: HashMap::new(),
            max_leader_weight: 0,
        }
    }

    fn syndrome(&self, v: &[Elem]) -> Key {
        let f = self.code.field();
        let mut s = vec![Elem::ZERO; self.columns.first().map_or(0, Vec::len)];
        for (j, &x) in v.iter().enumerate() {
            if !x.is_zero() {
                f.axpy(&mut s, x, &self.columns[j]);
            }
        }
        self.syndrome_packer.key(&s)
    }

    fn record_leader(&mut self, v: &[Elem], key: Key, syn: Key) {
        self.cosets.insert(syn, self.leaders.len());
        self.leaders.push(v.to_vec());
        self.leader_keys.insert(key);
        self.max_leader_weight = self.max_leader_weight.max(weight(v));
    }

    fn run(mut self) -> TestSet {
        let f = self.code.field().clone();
        let n = self.code.n();
        let r = self.code.k();
        let bound = self.opts.weight_bound.unwrap_or(n - r + 1).min(n);
        let total_cosets = (f.q() as u128).checked_pow((n - r) as u32);

        let mut ts = TestSet::from_elements(&self.code, Vec::new()).expect("empty test set is valid");
        let mut stats = BuildStats { weight_bound: bound, ..BuildStats::default() };

        let zero = vec![Elem::ZERO; n];
        let zkey = self.packer.key(&zero);
        let zsyn = self.syndrome(&zero);
        self.record_leader(&zero, zkey, zsyn);

        let mut done = false;
        for w in 1..=bound {
            let mut level = Enumerator::with_range(&f, n, w, w);
            while let Some(v) = level.advance() {
                stats.candidates += 1;
                let key = self.packer.key(v);
                let all_divisors_lead = v
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| !e.is_zero())
                    .all(|(j, _)| self.leader_keys.contains(&self.packer.without(&key, j)));
                if !all_divisors_lead {
                    continue;
                }
                let syn = self.syndrome(v);
                let Some(&leader_idx) = self.cosets.get(&syn) else {
                    let v = v.to_vec();
                    self.record_leader(&v, key, syn);
                    continue;
                };
                let trail = &self.leaders[leader_idx];
                if covered_by_scaled_lead(&f, &ts, v) {
                    stats.pruned += 1;
                    continue;
                }
                let word = f.sub_vec(v, trail);
                ts.push(Syzygy { lead: v.to_vec(), trail: trail.clone(), word });
            }
            stats.levels_completed = w;

            let stop = match self.opts.mode {
                Mode::Recovery => certified_at(ts.coverage(), w),
                Mode::Full => self.all_leaders_found(total_cosets) && w > self.max_leader_weight,
            };
            if stop {
                done = true;
                break;
            }
        }

        stats.leaders = self.leaders.len();
        let complete = self.all_leaders_found(total_cosets) && stats.levels_completed > self.max_leader_weight;
        ts.complete = complete;
        ts.certified = certified_at(ts.coverage(), stats.levels_completed) || (complete && ts.uncovered().is_empty());
        let _ = done;
        ts.stats = stats;
        ts
    }

    fn all_leaders_found(&self, total: Option<u128>) -> bool {
        total.is_some_and(|t| self.leaders.len() as u128 == t)
    }
}

/// After every candidate of weight at most `w` has been processed, a
/// coordinate whose lightest word so far has weight `b` is settled once
/// `⌈b/2⌉ ≤ w`: a lightest codeword through the coordinate has a
/// non-leader divisor of weight at most half its own, rounded up, and the
/// element generated from it passes through the coordinate.
fn certified_at(coverage: &[Option<usize>], w: usize) -> bool {
    coverage.iter().all(|c| c.is_some_and(|b| b.div_ceil(2) <= w))
}

/// A minimal non-leader `v` needs no element of its own when `v = λ ℓ` for
/// some lead `ℓ` with `λ · trail(ℓ)` still below `v`.
fn covered_by_scaled_lead(f: &Field, ts: &TestSet, v: &[Elem]) -> bool {
    let norm = normalize(f, v);
    let Some(list) = ts.by_normalized_lead.get(&ts.packer.key(&norm)) else {
        return false;
    };
    list.iter().any(|&idx| {
        let el = &ts.elements[idx];
        let lambda = division_scalar(f, &el.lead, v).expect("same normal form");
        compare(f, &f.scale(lambda, &el.trail), v) == Ordering::Less
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[u16]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem(x)).collect()
    }

    fn gf2() -> Field {
        Field::with_default_poly(2).unwrap()
    }

    #[test]
    fn divides_examples() {
        let f = gf2();
        assert!(divides(&f, &v(&[0, 1, 0]), &v(&[0, 1, 1])));
        assert!(!divides(&f, &v(&[0, 1, 0]), &v(&[1, 0, 1])));
        assert!(divides(&f, &v(&[1, 1, 0]), &v(&[1, 1, 0])));
        let f4 = Field::with_default_poly(4).unwrap();
        assert_eq!(division_scalar(&f4, &v(&[1, 2, 0]), &v(&[2, 3, 1])), Some(Elem(2)));
        assert_eq!(division_scalar(&f4, &v(&[1, 2, 0]), &v(&[2, 2, 1])), None);
    }

    #[test]
    fn toy_example_leads_and_trail() {
        let f = gf2();
        let ts = TestSet::compute(&f, &[v(&[1, 0, 1]), v(&[0, 1, 1])], &Options::full()).unwrap();
        let leads: BTreeSet<_> = ts.leads().map(<[Elem]>::to_vec).collect();
        assert_eq!(leads, [v(&[0, 1, 0]), v(&[1, 0, 0])].into_iter().collect());
        assert_eq!(ts.find_lead(&v(&[0, 1, 0])).unwrap().trail, v(&[0, 0, 1]));
        assert!(ts.is_complete());
    }

    #[test]
    fn two_different_one_step_reductions() {
        let f = gf2();
        let words = vec![v(&[0, 1, 1, 0, 0, 1]), v(&[1, 1, 0, 1, 1, 0])];
        let x = v(&[1, 1, 1, 1, 1, 0]);
        let steps = single_step_reductions(&f, &x, &words);
        let results: Vec<_> = steps.iter().map(|(_, _, y)| y.clone()).collect();
        assert!(results.contains(&v(&[1, 0, 0, 1, 1, 1])));
        assert!(results.contains(&v(&[0, 0, 1, 0, 0, 0])));
    }

    #[test]
    fn full_space_has_unit_leads() {
        let f = Field::with_default_poly(3).unwrap();
        let rows: Matrix = (0..3).map(|i| (0..3).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }).collect()).collect();
        let ts = TestSet::compute(&f, &rows, &Options::full()).unwrap();
        assert_eq!(ts.len(), 3);
        assert!(ts.leads().all(|l| weight(l) == 1));
        for x in Enumerator::new(&f, 3, 3) {
            assert!(ts.is_member(&x));
        }
    }

    #[test]
    fn zero_reduces_to_zero() {
        let f = gf2();
        let ts = TestSet::compute(&f, &[v(&[1, 0, 1]), v(&[0, 1, 1])], &Options::full()).unwrap();
        assert_eq!(ts.reduce(&v(&[0, 0, 0])), v(&[0, 0, 0]));
        assert!(!ts.is_member(&v(&[1, 1, 1])));
    }

    #[test]
    fn degenerate_input_rejected() {
        let f = gf2();
        assert_eq!(TestSet::compute(&f, &[v(&[1, 0, 1])], &Options::full()).unwrap_err(), Error::DegenerateCode(1));
    }

    #[test]
    fn subsets_enumerates_all() {
        let mut seen = Vec::new();
        subsets(&[1, 4, 7, 9], 2, 0, &mut Vec::new(), &mut |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![1, 4]);
        assert_eq!(seen[5], vec![7, 9]);
    }
}
