//! The [9,4,5] code over GF(4): a sharp recovery structure of locality 3
//! read off the test set of its [9,5,4] dual.

use std::time::Instant;

use sharp_lrc::io::{format_report, format_set, parse_code};
use sharp_lrc::recovery::{classify, locality_lower_bounds, sharp_structure};
use sharp_lrc::testset::{Options, TestSet};

fn main() -> sharp_lrc::Result<()> {
    let code = parse_code(include_str!("../fixtures/example1.code"))?;
    println!("[{}, {}] code over GF({})", code.n(), code.k(), code.field().q());

    let start = Instant::now();
    let s = sharp_structure(&code)?;
    println!("structure in {:?}, {} candidates", start.elapsed(), s.stats().candidates);
    print!("{}", format_report(&s));

    for rs in s.sets() {
        let mut full = rs.set.clone();
        full.insert(rs.coord);
        println!("R_{} ∪ {{{}}} = {}", rs.coord + 1, rs.coord + 1, format_set(&full));
    }

    println!("d = {:?}, lower bound on loc = {:?}", s.min_distance(), locality_lower_bounds(&s));
    println!("{:?}", classify(&s, 1 << 20)?);

    let full = TestSet::for_code(&code.dual()?, &Options::full());
    println!("full test set of the dual: {} elements (complete: {})", full.len(), full.is_complete());
    Ok(())
}
