//! Repairing erasures from a recovery structure, one coordinate at a time
//! and as a cascade.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sharp_lrc::io::{format_word, parse_code};
use sharp_lrc::recovery::sharp_structure;
use sharp_lrc::{Elem, Error};

fn show(x: &[Option<Elem>]) -> String {
    x.iter().map(|e| e.map_or("?".to_string(), |e| e.code().to_string())).collect::<Vec<_>>().join(",")
}

fn main() -> sharp_lrc::Result<()> {
    let code = parse_code(include_str!("../fixtures/example1.code"))?;
    let s = sharp_structure(&code)?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    let msg: Vec<Elem> = (0..code.k()).map(|_| Elem(rng.gen_range(0..4))).collect();
    let x = code.encode(&msg);
    println!("codeword      {}", format_word(&x));

    // single erasure: read only the 3 coordinates of R_i
    for i in [0, 4, 8] {
        let mut y: Vec<Option<Elem>> = x.iter().copied().map(Some).collect();
        y[i] = None;
        let value = s.recover(&y, i)?;
        let reads: Vec<usize> = s.set(i).set.iter().map(|j| j + 1).collect();
        println!("erase x_{}: {}  -> {} (reads {:?})", i + 1, show(&y), value.code(), reads);
        assert_eq!(value, x[i]);
    }

    // several erasures, repaired in whatever order becomes possible
    let mut y: Vec<Option<Elem>> = x.iter().copied().map(Some).collect();
    for i in [4, 6, 8] {
        y[i] = None;
    }
    println!("cascade       {}", show(&y));
    println!("repaired      {}", format_word(&s.recover_multi(&y)?));

    // too many erasures
    let mut y: Vec<Option<Elem>> = x.iter().copied().map(Some).collect();
    for e in y.iter_mut().take(6) {
        *e = None;
    }
    match s.recover_multi(&y) {
        Err(Error::Stalled(rest)) => println!("stalled with {} coordinates unrecoverable", rest.len()),
        other => println!("unexpected: {other:?}"),
    }

    // a corrupted survivor is caught
    let mut y: Vec<Option<Elem>> = x.iter().copied().map(Some).collect();
    y[0] = None;
    y[5] = Some(Elem((x[5].0 + 1) % 4));
    println!("corrupted input: {:?}", s.recover(&y, 0).unwrap_err());
    Ok(())
}
