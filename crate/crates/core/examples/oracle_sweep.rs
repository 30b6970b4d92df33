//! Compares sharp structures with brute force on random small codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sharp_lrc::bench::random_lrc_candidate;
use sharp_lrc::cli::verify_code;
use sharp_lrc::code::DEFAULT_BUDGET;
use sharp_lrc::Field;

fn main() -> sharp_lrc::Result<()> {
    let trials = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(40);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut mismatches = 0;
    for t in 0..trials {
        let q = [2u64, 3, 4, 5][rng.gen_range(0..4)];
        let n = rng.gen_range(6..=12);
        let k = rng.gen_range(2..=6.min(n - 2));
        let code = random_lrc_candidate(&Field::with_default_poly(q)?, n, k, &mut rng)?;
        let bad = verify_code(&code, 200, &mut rng, DEFAULT_BUDGET)?;
        println!("{t:>3}: q={q} [{n},{k}] {}", if bad.is_empty() { "ok".to_string() } else { bad.join("; ") });
        mismatches += bad.len();
    }
    println!("{trials} codes, {mismatches} mismatches");
    Ok(())
}
