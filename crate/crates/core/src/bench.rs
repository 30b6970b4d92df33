//! Random-code benchmark harness.
//!
//! Each trial draws a uniformly random `k × n` matrix over GF(q) until it has
//! full rank and both the code and its dual have minimum distance above one,
//! then times the construction of a sharp recovery structure. The candidate
//! count (vectors drawn from the enumerator) is machine independent and is
//! the number to compare across runs; wall-clock time is only indicative.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{rank, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::oracle::d_bound;
use crate::recovery::{sharp_structure_with, RecoveryStructure};
use crate::testset::Options;

/// Give up on a parameter set after this many rejected draws in a row.
const MAX_DRAWS: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub trial: usize,
    pub elapsed_ms: f64,
    pub candidates: u64,
    pub loc: usize,
    pub dual_distance: usize,
}

/// Uniform random `k × n` matrix of rank `k`.
pub fn random_full_rank(field: &Field, n: usize, k: usize, rng: &mut impl Rng) -> Vec<Vec<Elem>> {
    assert!(k <= n, "k > n");
    loop {
        let m: Vec<Vec<Elem>> = (0..k).map(|_| (0..n).map(|_| Elem(rng.gen_range(0..field.q()) as u16)).collect()).collect();
        if rank(field, &m) == k {
            return m;
        }
    }
}

/// A random code with `d(C) > 1` and `d(C^⊥) > 1`.
pub fn random_lrc_candidate(field: &Field, n: usize, k: usize, rng: &mut impl Rng) -> Result<LinearCode> {
    if k == 0 || k >= n {
        return Err(Error::Invariant(format!("no [{n},{k}] code has both distances above one")));
    }
    for _ in 0..MAX_DRAWS {
        let g = random_full_rank(field, n, k, rng);
        // a zero column of G is a weight-one dual word
        let Ok(code) = LinearCode::from_generator(field, &g) else { continue };
        // a zero column of H is a weight-one codeword
        if code.weight_one_coordinate().is_none() {
            return Ok(code);
        }
    }
    Err(Error::Invariant(format!("no suitable [{n},{k}] code over GF({}) after {MAX_DRAWS} draws", field.q())))
}

/// One timed run. The structure is fully validated before it is returned.
pub fn time_structure(code: &LinearCode) -> Result<(RecoveryStructure, f64)> {
    let start = Instant::now();
    // budget 0 skips the exhaustive minimum distance, which is not part of
    // the algorithm being measured
    let s = sharp_structure_with(code, &Options::recovery(), 0)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    Ok((s, ms))
}

pub fn bench(q: u64, n: usize, k: usize, trials: usize, seed: u64) -> Result<Vec<BenchRecord>> {
    let field = Field::with_default_poly(q)?;
    // The test set is enumerated for the dual, whose dimension is n - k;
    // its minimal words weigh at most k + 1, which caps the search there.
    let bound = d_bound(n, n.saturating_sub(k), field.q());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for trial in 0..trials {
        let code = random_lrc_candidate(&field, n, k, &mut rng)?;
        let (s, elapsed_ms) = time_structure(&code)?;
        let candidates = s.stats().candidates;
        if candidates as u128 > bound {
            return Err(Error::BudgetExceeded { needed: candidates as u128, budget: bound });
        }
        out.push(BenchRecord {
            q: field.q(),
            n,
            k,
            trial,
            elapsed_ms,
            candidates,
            loc: s.locality(),
            dual_distance: s.dual_distance(),
        });
    }
    Ok(out)
}

pub const CSV_HEADER: &str = "q,n,k,trial,elapsed_ms,candidates,loc,dual_distance";

/// CSV with a header row. Timings are omitted when `with_time` is false so
/// that the output is byte-for-byte reproducible.
pub fn to_csv(records: &[BenchRecord], with_time: bool) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in records {
        let t = if with_time { format!("{:.3}", r.elapsed_ms) } else { String::new() };
        let _ = writeln!(s, "{},{},{},{},{},{},{},{}", r.q, r.n, r.k, r.trial, t, r.candidates, r.loc, r.dual_distance);
    }
    s
}

#[derive(Clone, Debug, PartialEq)]
pub struct Averages {
    pub elapsed_ms: f64,
    pub candidates: f64,
    pub loc: f64,
    pub dual_distance: f64,
}

pub fn averages(records: &[BenchRecord]) -> Option<Averages> {
    if records.is_empty() {
        return None;
    }
    let n = records.len() as f64;
    let mean = |f: fn(&BenchRecord) -> f64| records.iter().map(f).sum::<f64>() / n;
    Some(Averages {
        elapsed_ms: mean(|r| r.elapsed_ms),
        candidates: mean(|r| r.candidates as f64),
        loc: mean(|r| r.loc as f64),
        dual_distance: mean(|r| r.dual_distance as f64),
    })
}
