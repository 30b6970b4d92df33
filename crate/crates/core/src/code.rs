//! Linear codes given by generator and parity-check matrices.
//!
//! Coordinates are 0-based inside the library. Everything printed for users
//! (reports, CLI output) is converted to 1-based indices at the boundary.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Default limit on the number of codewords an exhaustive routine may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

pub type Matrix = Vec<Vec<Elem>>;

pub fn support(x: &[Elem]) -> BTreeSet<usize> {
    x.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(|(i, _)| i).collect()
}

pub fn weight(x: &[Elem]) -> usize {
    x.iter().filter(|e| !e.is_zero()).count()
}

/// Row echelon form of `rows`. Returns the reduced rows (zero rows dropped)
/// and the pivot column of each.
pub fn rref(field: &Field, rows: &[Vec<Elem>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = field.neg(m[i][c]);
                field.axpy(&mut m[i], factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &Field, rows: &[Vec<Elem>]) -> usize {
    rref(field, rows).1.len()
}

/// Basis of the right kernel `{x : M x^T = 0}` of a matrix with `n` columns.
fn kernel(field: &Field, rows: &[Vec<Elem>], n: usize) -> Matrix {
    let (red, pivots) = rref(field, rows);
    let mut basis = Vec::with_capacity(n - pivots.len());
    let mut pivot_of_col = vec![None; n];
    for (row, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = Some(row);
    }
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut h = vec![Elem::ZERO; n];
        h[free] = Elem::ONE;
        for (row, &c) in pivots.iter().enumerate() {
            h[c] = field.neg(red[row][free]);
        }
        basis.push(h);
    }
    basis
}

/// A linear `[n, k]` code over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    g: Matrix,
    h: Matrix,
}

impl LinearCode {
    /// Builds a code from generating rows. Dependent rows are dropped (the
    /// first independent rows are kept in their original order) and a
    /// parity-check matrix is derived from the reduced echelon form.
    pub fn from_generator(field: &Field, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        let n = match rows.first() {
            Some(r) => r.len(),
            None => return Err(Error::ZeroMatrix),
        };
        for r in rows {
            if r.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: r.len() });
            }
            if let Some(e) = r.iter().find(|e| e.code() >= field.q()) {
                return Err(Error::ElementOutOfRange { code: e.code(), q: field.q() });
            }
        }
        let mut g: Matrix = Vec::new();
        for r in rows {
            let mut trial = g.clone();
            trial.push(r.clone());
            if rank(field, &trial) == trial.len() {
                g = trial;
            }
        }
        if g.is_empty() {
            return Err(Error::ZeroMatrix);
        }
        if let Some(c) = (0..n).find(|&c| g.iter().all(|r| r[c].is_zero())) {
            return Err(Error::DegenerateCode(c));
        }
        let h = kernel(field, &g, n);
        let code = LinearCode { field: field.clone(), n, g, h };
        code.check_orthogonal()?;
        Ok(code)
    }

    /// Builds a code from a parity-check matrix.
    pub fn from_parity_check(field: &Field, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        let n = match rows.first() {
            Some(r) => r.len(),
            None => return Err(Error::ZeroMatrix),
        };
        let (h, _) = rref(field, rows);
        let g = kernel(field, &h, n);
        LinearCode::from_generator(field, &g)
    }

    fn check_orthogonal(&self) -> Result<()> {
        for gr in &self.g {
            for hr in &self.h {
                if !self.field.dot(gr, hr).is_zero() {
                    return Err(Error::RankError("G * H^T != 0".into()));
                }
            }
        }
        if rank(&self.field, &self.g) != self.k() || self.h.len() + self.k() != self.n {
            return Err(Error::RankError("rank(G) + rank(H) != n".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.g.len()
    }

    pub fn generator(&self) -> &Matrix {
        &self.g
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.h
    }

    /// The dual code. Its generator is this code's parity-check matrix.
    ///
    /// The dual of a code is never degenerate unless the code contains a
    /// weight-one word; that case (and the trivial `[n, n]` code, whose dual is
    /// zero) is reported as an error.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.h.is_empty() {
            return Err(Error::ZeroMatrix);
        }
        if let Some(c) = (0..self.n).find(|&c| self.h.iter().all(|r| r[c].is_zero())) {
            return Err(Error::DegenerateCode(c));
        }
        Ok(LinearCode { field: self.field.clone(), n: self.n, g: self.h.clone(), h: self.g.clone() })
    }

    pub fn check_len<T>(&self, x: &[T]) -> Result<()> {
        if x.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.n, got: x.len() })
        }
    }

    /// Syndrome `H x^T`.
    pub fn syndrome(&self, x: &[Elem]) -> Vec<Elem> {
        self.h.iter().map(|r| self.field.dot(r, x)).collect()
    }

    pub fn is_codeword(&self, x: &[Elem]) -> Result<bool> {
        self.check_len(x)?;
        Ok(self.h.iter().all(|r| self.field.dot(r, x).is_zero()))
    }

    /// True iff `x` is orthogonal to every row of `G`, i.e. `x` lies in the
    /// dual code.
    pub fn is_dual_codeword(&self, x: &[Elem]) -> Result<bool> {
        self.check_len(x)?;
        Ok(self.g.iter().all(|r| self.field.dot(r, x).is_zero()))
    }

    /// Dimension of the projection onto `coords`: the rank of those columns
    /// of `G`.
    pub fn projection_rank(&self, coords: &BTreeSet<usize>) -> Result<usize> {
        if let Some(&c) = coords.iter().find(|&&c| c >= self.n) {
            return Err(Error::IndexOutOfRange(c));
        }
        if coords.is_empty() {
            return Ok(0);
        }
        let sub: Matrix = self.g.iter().map(|r| coords.iter().map(|&c| r[c]).collect()).collect();
        Ok(rank(&self.field, &sub))
    }

    /// Encodes a message of length `k`.
    pub fn encode(&self, msg: &[Elem]) -> Vec<Elem> {
        let mut x = vec![Elem::ZERO; self.n];
        for (row, &m) in self.g.iter().zip(msg) {
            self.field.axpy(&mut x, m, row);
        }
        x
    }

    pub fn num_codewords(&self) -> u128 {
        (self.field.q() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX)
    }

    /// Iterates over all `q^k` codewords, starting with zero.
    pub fn codewords(&self, budget: u128) -> Result<Codewords<'_>> {
        let needed = self.num_codewords();
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(Codewords { code: self, msg: vec![0; self.k()], current: vec![Elem::ZERO; self.n], done: false })
    }

    /// Minimum nonzero weight by full enumeration.
    pub fn min_distance_exhaustive(&self, budget: u128) -> Result<usize> {
        Ok(self.codewords(budget)?.map(|c| weight(&c)).filter(|&w| w > 0).min().unwrap_or(0))
    }

    /// `d(C) = 1` exactly when some unit vector is a codeword, i.e. some
    /// column of `H` vanishes. Returns that coordinate.
    pub fn weight_one_coordinate(&self) -> Option<usize> {
        (0..self.n).find(|&c| self.h.iter().all(|r| r[c].is_zero()))
    }
}

/// Odometer over all messages; each step adds one generator row.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    msg: Vec<u32>,
    current: Vec<Elem>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let f = &self.code.field;
        let q = f.q();
        // digit t runs through ranks 0, 1, ..., q-1; moving from rank r to
        // r+1 adds (from_rank(r+1) - from_rank(r)) * g_t.
        let mut t = 0;
        loop {
            if t == self.msg.len() {
                self.done = true;
                break;
            }
            let old = f.from_rank(self.msg[t]);
            let next_rank = (self.msg[t] + 1) % q;
            let new = f.from_rank(next_rank);
            f.axpy(&mut self.current, f.sub(new, old), &self.code.g[t]);
            self.msg[t] = next_rank;
            if next_rank != 0 {
                break;
            }
            t += 1;
        }
        Some(out)
    }
}
