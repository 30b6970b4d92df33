//! Arithmetic in GF(p^m) and the order used by the test-set search.
//!
//! Run with `cargo run --example field_arithmetic`.

use sharp_lrc::gf::{Elem, Field};
use sharp_lrc::order::{compare, exponent_vector, Enumerator};

fn main() -> sharp_lrc::Result<()> {
    // GF(4) = GF(2)[x]/(x^2 + x + 1); element codes pack the coefficients
    // base p, so a = 2 and a^2 = a + 1 = 3.
    let f4 = Field::new(2, 2, &[1, 1, 1])?;
    let a = f4.zeta();
    println!("GF(4): a = {}, a^2 = {}, a^3 = {}", a.code(), f4.pow(a, 2).code(), f4.pow(a, 3).code());

    println!("multiplication table:");
    for x in f4.elements() {
        let row: Vec<String> = f4.elements().map(|y| f4.mul(x, y).code().to_string()).collect();
        println!("  {}", row.join(" "));
    }

    // A field with odd characteristic, built from the default polynomial.
    let f9 = Field::with_default_poly(9)?;
    let b = f9.zeta();
    println!("\nGF(9) with primpoly {:?}", f9.primpoly());
    for e in 0..8 {
        let x = f9.exp(e);
        println!("  zeta^{e} = {:>2}  digits {:?}  inverse {}", x.code(), f9.digits(x), f9.inv(x)?.code());
    }
    assert_eq!(f9.pow(b, 8), Elem::ONE);

    // Weight first, then exponent vectors with zero below everything.
    let x = vec![Elem(1), Elem(2), Elem(0), Elem(3)];
    let y = vec![Elem(3), Elem(2), Elem(0), Elem(2)];
    println!("\nexp(x) = {:?}", exponent_vector(&f4, &x));
    println!("exp(y) = {:?}", exponent_vector(&f4, &y));
    println!("x vs y: {:?}", compare(&f4, &x, &y));

    let f2 = Field::with_default_poly(2)?;
    let first: Vec<String> = Enumerator::new(&f2, 4, 2)
        .take(8)
        .map(|v| v.iter().map(|e| e.code().to_string()).collect())
        .collect();
    println!("first vectors of GF(2)^4 in order: {}", first.join(" "));
    Ok(())
}
