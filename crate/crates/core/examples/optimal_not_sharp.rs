//! Optimality does not imply sharpness.
//!
//! Evaluating the polynomials a0 + a1 x + (a2 + a3 x) x^3 on the three cosets
//! of {1, 3, 9} in GF(13)* gives a [9,4,5] code. Since x^3 is constant on
//! each coset, every coset is a local [3,2] code, so each coordinate has a
//! recovery set of size 2, which meets the Singleton-like bound. Padding
//! every set with one extra coordinate gives locality 3; the bound still
//! holds with equality because ⌈4/2⌉ = ⌈4/3⌉, so the padded structure is
//! optimal, yet it is not sharp.

use sharp_lrc::code::LinearCode;
use sharp_lrc::io::format_report;
use sharp_lrc::recovery::{classify, sharp_structure, singleton_bound_check, RecoveryStructure};
use sharp_lrc::{Elem, Field};

fn main() -> sharp_lrc::Result<()> {
    let f = Field::with_default_poly(13)?;
    // cosets of the subgroup {1, 3, 9} of GF(13)*, on which x^3 is constant
    let points = [1u16, 3, 9, 2, 6, 5, 4, 12, 10];
    // f(x) = a0 + a1 x + (a2 + a3 x) x^3
    let rows: Vec<Vec<Elem>> = [0u64, 1, 3, 4]
        .iter()
        .map(|&e| points.iter().map(|&p| f.pow(Elem(p), e)).collect())
        .collect();
    let code = LinearCode::from_generator(&f, &rows)?;
    let d = code.min_distance_exhaustive(1 << 20)?;
    println!("[{}, {}, {d}] code over GF(13)", code.n(), code.k());

    let sharp = sharp_structure(&code)?;
    print!("{}", format_report(&sharp));

    let mut padded = sharp.sets().to_vec();
    for rs in &mut padded {
        let extra = (0..code.n()).find(|j| *j != rs.coord && !rs.set.contains(j)).expect("n > 3");
        rs.set.insert(extra);
    }
    let padded = RecoveryStructure::from_sets(&code, padded)?.with_min_distance(d);
    println!("\npadded structure: loc = {}", padded.locality());
    println!("bound holds: {}", singleton_bound_check(code.n(), code.k(), d, padded.locality()));
    let c = classify(&padded, 1 << 20)?;
    println!("optimal: {:?}, sharp: {:?}", c.optimal, c.sharp);
    Ok(())
}
