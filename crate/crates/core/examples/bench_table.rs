//! Average candidate counts and timings on random codes, in the shape of
//! the usual "[n,k] over GF(q)" benchmark table.
//!
//! `cargo run --release --example bench_table`

use sharp_lrc::bench::{averages, bench};

fn main() -> sharp_lrc::Result<()> {
    println!("{:>3} {:>8} {:>10} {:>12} {:>6} {:>6}", "q", "[n,k]", "mean ms", "candidates", "loc", "d_dual");
    let rows = [(2, 10, 4), (3, 10, 4), (4, 10, 4), (5, 10, 4), (2, 20, 5), (2, 30, 8), (2, 50, 10)];
    for (q, n, k) in rows {
        let trials = if n >= 50 { 3 } else { 20 };
        let r = bench(q, n, k, trials, 1)?;
        let m = averages(&r).expect("at least one trial");
        println!(
            "{q:>3} {:>8} {:>10.3} {:>12.1} {:>6.2} {:>6.2}",
            format!("[{n},{k}]"),
            m.elapsed_ms,
            m.candidates,
            m.loc,
            m.dual_distance
        );
    }
    Ok(())
}
