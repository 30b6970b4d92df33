//! Table-driven arithmetic in GF(p^m).
//!
//! Elements are stored as their canonical integer code: the element
//! `c_0 + c_1 β + ... + c_{m-1} β^{m-1}` (β a root of the primitive
//! polynomial) is encoded as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, so zero is
//! code 0 and one is code 1. Because the polynomial is primitive, β is also the
//! designated generator ζ of the multiplicative group, and every nonzero
//! element has a discrete logarithm in `[0, q-2]`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_Q: u64 = 1 << 16;

/// Largest field size for which [`Field::with_default_poly`] will search for
/// a primitive polynomial.
pub const DEFAULT_POLY_MAX_Q: u64 = 1 << 10;

/// A field element, identified by its canonical code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn code(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    primpoly: Vec<u32>,
    // exp[i] = ζ^i for i in [0, 2(q-1)), doubled to skip a modulo in `mul`.
    exp: Vec<Elem>,
    // log[c] for nonzero c; log[0] is unused.
    log: Vec<u32>,
    neg: Vec<Elem>,
    // Full addition table for small fields, indexed a * q + b.
    add: Option<Vec<Elem>>,
}

/// A finite field GF(p^m) with exp/log tables.
///
/// Cloning is cheap; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.primpoly == other.0.primpoly)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}; p={}, m={}, primpoly={:?})", self.q(), self.p(), self.m(), self.primpoly())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut m = 0u32;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1 && p <= u32::MAX as u64).then_some((p as u32, m))
}

impl Field {
    /// Builds GF(p^m) from a monic primitive polynomial given as its m+1
    /// coefficients `c_0, ..., c_m` (lowest degree first).
    pub fn new(p: u32, m: u32, primpoly: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || primpoly.len() != m as usize + 1 || primpoly[m as usize] != 1 {
            return Err(Error::DegreeMismatch { expected: m, coeffs: primpoly.to_vec() });
        }
        if primpoly.iter().any(|&c| c >= p) {
            return Err(Error::DegreeMismatch { expected: m, coeffs: primpoly.to_vec() });
        }
        let q64 = (p as u64).checked_pow(m).filter(|&q| q <= MAX_Q);
        let q = match q64 {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge((p as u64).saturating_pow(m))),
        };

        let order = q - 1;
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut digits = vec![0u32; m as usize];
        digits[0] = 1;
        for i in 0..order {
            let code = pack(&digits, p);
            if code == 0 || (i > 0 && code == 1) || log[code as usize] != u32::MAX {
                return Err(Error::NotPrimitive(primpoly.to_vec(), p));
            }
            log[code as usize] = i;
            exp.push(Elem(code as u16));
            times_root(&mut digits, primpoly, p);
        }
        if pack(&digits, p) != 1 {
            return Err(Error::NotPrimitive(primpoly.to_vec(), p));
        }
        let doubled = exp.clone();
        exp.extend(doubled);

        let neg = (0..q)
            .map(|c| {
                let d: Vec<u32> = unpack(c, p, m).into_iter().map(|x| (p - x) % p).collect();
                Elem(pack(&d, p) as u16)
            })
            .collect();

        let add = (q <= 256).then(|| {
            let mut t = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    t.push(Elem(add_digits(a, b, p, m) as u16));
                }
            }
            t
        });

        Ok(Field(Arc::new(Inner { p, m, q, primpoly: primpoly.to_vec(), exp, log, neg, add })))
    }

    /// GF(q) with the primitive polynomial whose low coefficients
    /// `c_0..c_{m-1}`, read as a base-p integer, are smallest.
    pub fn with_default_poly(q: u64) -> Result<Field> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrime(q.min(u32::MAX as u64) as u32))?;
        if q > DEFAULT_POLY_MAX_Q {
            return Err(Error::NoDefaultPolynomial(q));
        }
        let q = q as u32;
        for low in 0..q {
            let mut coeffs = unpack(low, p, m);
            coeffs.push(1);
            if let Ok(f) = Field::new(p, m, &coeffs) {
                return Ok(f);
            }
        }
        Err(Error::NoDefaultPolynomial(q as u64))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn primpoly(&self) -> &[u32] {
        &self.0.primpoly
    }

    /// Validates a canonical code.
    pub fn elem(&self, code: u32) -> Result<Elem> {
        if code < self.q() {
            Ok(Elem(code as u16))
        } else {
            Err(Error::ElementOutOfRange { code, q: self.q() })
        }
    }

    /// The primitive element ζ.
    pub fn zeta(&self) -> Elem {
        self.0.exp[1 % (self.q() as usize - 1).max(1)]
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q() as u16).map(Elem)
    }

    /// Nonzero elements in code order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> {
        (1..self.q() as u16).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        if inner.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        match &inner.add {
            Some(t) => t[a.0 as usize * inner.q as usize + b.0 as usize],
            None => Elem(add_digits(a.code(), b.code(), inner.p, inner.m) as u16),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a.0 as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let l = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        self.0.exp[l as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q() - 1;
        Ok(self.0.exp[((order - self.0.log[a.0 as usize]) % order) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let order = (self.q() - 1) as u64;
        let l = (self.0.log[a.0 as usize] as u64 * (e % order)) % order;
        self.0.exp[l as usize]
    }

    /// Discrete logarithm base ζ; `None` stands for the −∞ exponent of zero.
    #[inline]
    pub fn dlog(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.0.log[a.0 as usize])
    }

    /// `ζ^e`.
    #[inline]
    pub fn exp(&self, e: u64) -> Elem {
        self.0.exp[(e % (self.q() as u64 - 1)) as usize]
    }

    /// Position of `a` in the ordering `0 < ζ^0 < ζ^1 < ... < ζ^{q-2}`.
    #[inline]
    pub fn rank(&self, a: Elem) -> u32 {
        if a.is_zero() {
            0
        } else {
            self.0.log[a.0 as usize] + 1
        }
    }

    /// Inverse of [`Field::rank`].
    #[inline]
    pub fn from_rank(&self, r: u32) -> Elem {
        if r == 0 {
            Elem::ZERO
        } else {
            self.0.exp[(r - 1) as usize]
        }
    }

    /// Base-p digits of an element, lowest first.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        unpack(a.code(), self.p(), self.m())
    }

    pub fn check_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    // Vector helpers used throughout the crate.

    /// `a + λ b`, in place into `a`.
    pub fn axpy(&self, a: &mut [Elem], lambda: Elem, b: &[Elem]) {
        if lambda.is_zero() {
            return;
        }
        for (x, &y) in a.iter_mut().zip(b) {
            *x = self.add(*x, self.mul(lambda, y));
        }
    }

    pub fn scale(&self, lambda: Elem, v: &[Elem]) -> Vec<Elem> {
        v.iter().map(|&x| self.mul(lambda, x)).collect()
    }

    pub fn sub_vec(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn unpack(mut code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(code % p);
        code /= p;
    }
    d
}

fn add_digits(a: u32, b: u32, p: u32, m: u32) -> u32 {
    let da = unpack(a, p, m);
    let db = unpack(b, p, m);
    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    pack(&sum, p)
}

/// Multiplies the element with the given digits by the root β, reducing with
/// `β^m = -(c_0 + ... + c_{m-1} β^{m-1})`.
fn times_root(digits: &mut [u32], poly: &[u32], p: u32) {
    let m = digits.len();
    let top = digits[m - 1];
    for j in (1..m).rev() {
        digits[j] = digits[j - 1];
    }
    digits[0] = 0;
    for j in 0..m {
        digits[j] = (digits[j] + top * (p - poly[j]) % p) % p;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multiplication of canonical codes as polynomials over GF(p) reduced
    /// modulo the field polynomial, without any tables.
    fn poly_mul_oracle(a: u32, b: u32, p: u32, poly: &[u32]) -> u32 {
        let m = poly.len() - 1;
        let da = unpack(a, p, m as u32);
        let db = unpack(b, p, m as u32);
        let mut prod = vec![0u32; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for j in 0..m {
                let sub = c * poly[j] % p;
                prod[deg - m + j] = (prod[deg - m + j] + p - sub) % p;
            }
        }
        pack(&prod[..m], p)
    }

    fn gf4() -> Field {
        Field::new(2, 2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn gf2_is_the_prime_field() {
        let f = Field::new(2, 1, &[1, 1]).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.zeta(), Elem::ONE);
        assert_eq!(f.add(Elem::ONE, Elem::ONE), Elem::ZERO);
    }

    #[test]
    fn gf4_alpha_squared_is_one_plus_alpha() {
        let f = gf4();
        let alpha = Elem(2);
        assert_eq!(f.zeta(), alpha);
        assert_eq!(f.mul(alpha, alpha), Elem(3));
        assert_eq!(f.add(alpha, alpha), Elem::ZERO);
        assert_eq!(f.add(alpha, Elem::ONE), Elem(3));
    }

    #[test]
    fn gf4_dlog_values() {
        let f = gf4();
        assert_eq!(f.dlog(Elem(0)), None);
        assert_eq!(f.dlog(Elem(1)), Some(0));
        assert_eq!(f.dlog(Elem(2)), Some(1));
        assert_eq!(f.dlog(Elem(3)), Some(2));
    }

    #[test]
    fn gf5_addition_is_mod_5() {
        let f = Field::with_default_poly(5).unwrap();
        assert_eq!(f.add(Elem(3), Elem(4)), Elem(2));
        assert_eq!(f.neg(Elem(2)), Elem(3));
    }

    #[test]
    fn gf8_tables_match_polynomial_oracle() {
        let poly = [1, 1, 0, 1];
        let f = Field::new(2, 3, &poly).unwrap();
        let mut acc = 1;
        for i in 0..7u64 {
            assert_eq!(f.exp(i).code(), acc);
            acc = poly_mul_oracle(acc, 2, 2, &poly);
        }
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(f.mul(Elem(a), Elem(b)).code(), poly_mul_oracle(a as u32, b as u32, 2, &poly));
            }
        }
    }

    #[test]
    fn gf9_and_gf27_match_polynomial_oracle() {
        for q in [9u64, 27, 25, 16] {
            let f = Field::with_default_poly(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let want = poly_mul_oracle(a.code(), b.code(), f.p(), f.primpoly());
                    assert_eq!(f.mul(a, b).code(), want, "q={q} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(Field::new(4, 1, &[1, 1]).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(Field::new(2, 2, &[1, 0, 1]), Err(Error::NotPrimitive(..))));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5
        assert!(matches!(Field::new(2, 4, &[1, 1, 1, 1, 1]), Err(Error::NotPrimitive(..))));
        assert!(matches!(Field::new(2, 2, &[1, 1]), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(Field::new(2, 2, &[1, 1, 0]), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(Field::new(2, 17, &[0; 18]), Err(Error::DegreeMismatch { .. }) | Err(Error::FieldTooLarge(_))));
        assert_eq!(gf4().inv(Elem::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn default_polynomials() {
        assert_eq!(Field::with_default_poly(4).unwrap().primpoly(), &[1, 1, 1]);
        assert_eq!(Field::with_default_poly(8).unwrap().primpoly(), &[1, 1, 0, 1]);
        assert_eq!(Field::with_default_poly(16).unwrap().primpoly(), &[1, 1, 0, 0, 1]);
        assert!(Field::with_default_poly(6).is_err());
        assert!(Field::with_default_poly(2048).is_err());
        for q in [2u64, 3, 5, 7, 11, 13, 32, 49, 64, 81, 121, 128, 243, 256, 1024] {
            assert_eq!(Field::with_default_poly(q).unwrap().q() as u64, q);
        }
    }

    #[test]
    fn prime_power_splits() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::with_default_poly(q).unwrap();
            for c in f.nonzero() {
                assert_eq!(f.exp(f.dlog(c).unwrap() as u64), c);
            }
            for a in f.elements() {
                assert_eq!(f.mul(a, Elem::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for b in f.elements() {
                    if !a.is_zero() && !b.is_zero() {
                        let lhs = f.dlog(f.mul(a, b)).unwrap();
                        let rhs = (f.dlog(a).unwrap() + f.dlog(b).unwrap()) % (f.q() - 1);
                        assert_eq!(lhs, rhs);
                    }
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn large_field_without_add_table() {
        let f = Field::new(3, 6, &[2, 1, 0, 0, 0, 0, 1]);
        // x^6 + x + 2 over GF(3) is primitive
        let f = f.unwrap();
        assert_eq!(f.q(), 729);
        let a = Elem(400);
        let b = Elem(123);
        assert_eq!(f.sub(f.add(a, b), b), a);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        assert_eq!(f.pow(f.zeta(), 728), Elem::ONE);
    }

    #[test]
    fn rank_round_trip() {
        let f = gf4();
        for a in f.elements() {
            assert_eq!(f.from_rank(f.rank(a)), a);
        }
        assert_eq!(f.rank(Elem(3)), 3);
    }
}
