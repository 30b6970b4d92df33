//! Invariants checked on generated inputs.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sharp_lrc::bench::random_lrc_candidate;
use sharp_lrc::code::{rank, support, weight, LinearCode, DEFAULT_BUDGET};
use sharp_lrc::io::{parse_code, print_code};
use sharp_lrc::oracle::localities_exact;
use sharp_lrc::order::{compare, precedes};
use sharp_lrc::recovery::sharp_structure;
use sharp_lrc::testset::{Options, TestSet};
use sharp_lrc::{Elem, Field};

const QS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(QS.to_vec()).prop_map(|q| Field::with_default_poly(q).unwrap())
}

fn vector(f: &Field, n: usize) -> impl Strategy<Value = Vec<Elem>> {
    prop::collection::vec((0..f.q()).prop_map(|c| Elem(c as u16)), n)
}

/// A small random code with both distances above one, drawn through the
/// benchmark generator so that it matches the swept population.
fn small_code() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2u64, 3, 4, 5]), 5usize..=9, any::<u64>()).prop_flat_map(|(q, n, seed)| {
        (2usize..=(n - 2).min(5)).prop_map(move |k| {
            let f = Field::with_default_poly(q).unwrap();
            random_lrc_candidate(&f, n, k, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in field(), a in 0u32..512, b in 0u32..512, c in 0u32..512) {
        let q = f.q();
        let (a, b, c) = (Elem((a % q) as u16), Elem((b % q) as u16), Elem((c % q) as u16));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            prop_assert_eq!(f.exp(f.dlog(a).unwrap() as u64), a);
            prop_assert_eq!(f.pow(a, (q - 1) as u64), Elem::ONE);
        }
        prop_assert_eq!(f.from_rank(f.rank(a)), a);
    }

    #[test]
    fn order_is_weight_graded_and_total((f, x, y) in field().prop_flat_map(|f| {
        let n = 5;
        (Just(f.clone()), vector(&f, n), vector(&f, n))
    })) {
        let o = compare(&f, &x, &y);
        prop_assert_eq!(o, compare(&f, &y, &x).reverse());
        prop_assert_eq!(o.is_eq(), x == y);
        if weight(&x) < weight(&y) {
            prop_assert!(precedes(&f, &x, &y));
        }
    }

    #[test]
    fn generator_and_parity_check_are_orthogonal(code in small_code()) {
        let f = code.field();
        for g in code.generator() {
            for h in code.parity_check() {
                prop_assert!(f.dot(g, h).is_zero());
            }
        }
        prop_assert_eq!(rank(f, code.generator()) + rank(f, code.parity_check()), code.n());
        prop_assert_eq!(parse_code(&print_code(&code)).unwrap(), code);
    }

    #[test]
    fn reduction_stays_in_coset_and_decreases((code, x) in small_code().prop_flat_map(|c| {
        let v = vector(c.field(), c.n());
        (Just(c), v)
    })) {
        let ts = TestSet::for_code(&code, &Options::full());
        let f = code.field();
        let chain = ts.reduce_trace(&x);
        for w in chain.windows(2) {
            prop_assert!(precedes(f, &w[1], &w[0]));
        }
        let nf = chain.last().unwrap();
        prop_assert!(code.is_codeword(&f.sub_vec(&x, nf)).unwrap());
        prop_assert_eq!(nf.iter().all(|e| e.is_zero()), code.is_codeword(&x).unwrap());
        // the normal form is the smallest vector of its coset, so it never
        // outweighs x
        prop_assert!(weight(nf) <= weight(&x));
    }

    #[test]
    fn sharp_structure_matches_brute_force(code in small_code()) {
        let s = sharp_structure(&code).unwrap();
        prop_assert_eq!(s.localities(), localities_exact(&code, DEFAULT_BUDGET).unwrap());
        for rs in s.sets() {
            prop_assert!(code.is_dual_codeword(&rs.word).unwrap());
            let mut with_i = rs.set.clone();
            with_i.insert(rs.coord);
            prop_assert_eq!(support(&rs.word), with_i.clone());
            prop_assert_eq!(code.projection_rank(&rs.set).unwrap(), code.projection_rank(&with_i).unwrap());
        }
    }

    #[test]
    fn single_erasures_round_trip((code, msg, i) in small_code().prop_flat_map(|c| {
        let m = vector(c.field(), c.k());
        let n = c.n();
        (Just(c), m, 0..n)
    })) {
        let s = sharp_structure(&code).unwrap();
        let x = code.encode(&msg);
        let mut y: Vec<Option<Elem>> = x.iter().copied().map(Some).collect();
        y[i] = None;
        prop_assert_eq!(s.recover(&y, i).unwrap(), x[i]);
        prop_assert_eq!(s.recover_multi(&y).unwrap(), x);
    }
}
