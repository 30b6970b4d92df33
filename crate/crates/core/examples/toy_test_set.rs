//! Gröbner test sets on the smallest interesting inputs: the binary [3,2]
//! code, and a two-element set showing that reduction is not confluent.

use sharp_lrc::code::LinearCode;
use sharp_lrc::gf::{Elem, Field};
use sharp_lrc::io::format_word;
use sharp_lrc::testset::{single_step_reductions, Options, TestSet};

fn v(xs: &[u16]) -> Vec<Elem> {
    xs.iter().map(|&x| Elem(x)).collect()
}

fn main() -> sharp_lrc::Result<()> {
    let f = Field::with_default_poly(2)?;
    let code = LinearCode::from_generator(&f, &[v(&[1, 0, 1]), v(&[0, 1, 1])])?;

    let ts = TestSet::for_code(&code, &Options::full());
    println!("test set of the [3,2] code ({} elements):", ts.len());
    for s in ts.elements() {
        println!("  {} - {}   word {}", format_word(&s.lead), format_word(&s.trail), format_word(&s.word));
    }

    for x in [v(&[1, 1, 0]), v(&[1, 1, 1]), v(&[0, 1, 1])] {
        let chain: Vec<String> = ts.reduce_trace(&x).iter().map(|y| format_word(y)).collect();
        println!("{}  member={}", chain.join(" -> "), ts.is_member(&x));
    }

    // Two different one-step reductions of the same vector.
    let t1 = v(&[0, 1, 1, 0, 0, 1]);
    let t2 = v(&[1, 1, 0, 1, 1, 0]);
    let x = v(&[1, 1, 1, 1, 1, 0]);
    println!("\nreductions of {} by {{t1, t2}}:", format_word(&x));
    for (idx, _, y) in single_step_reductions(&f, &x, &[t1, t2]) {
        println!("  by t{}: {}", idx + 1, format_word(&y));
    }
    Ok(())
}
