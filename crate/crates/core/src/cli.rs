//! The `lrc` command line.
//!
//! Exit status is 0 on success, 1 when the input is well formed but the
//! computation fails (bad code file, unrecoverable word, oracle mismatch, ...)
//! and 2 on usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bench::{self, averages, random_lrc_candidate, to_csv};
use crate::code::{LinearCode, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::io::{self, format_report, format_test_set, parse_word};
use crate::oracle;
use crate::recovery::{classify, sharp_structure_from, sharp_structure_with};
use crate::testset::{Mode, Options, TestSet};

#[derive(Parser, Debug)]
#[command(name = "lrc", version, about = "Sharp recovery structures for linear codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print n, k, q and, within budget, d(C) and d(C^⊥).
    Analyze(CodeArg),
    /// Print a sharp recovery structure, one line per coordinate.
    Structure(StructureArgs),
    /// Fill the `?` entries of a word from the recovery structure.
    Recover(RecoverArgs),
    /// Time structure construction on seeded random codes.
    Bench(BenchArgs),
    /// Cross-check the structure against brute force.
    OracleVerify(VerifyArgs),
}

#[derive(Args, Debug)]
struct CodeArg {
    /// Code file (`field ...`, `code n= k=`, `G`/`H`, rows).
    #[arg(long)]
    code: PathBuf,
}

#[derive(Args, Debug)]
struct StructureArgs {
    #[arg(long)]
    code: PathBuf,
    /// Run the test-set construction to exhaustion and print its size.
    #[arg(long)]
    full_testset: bool,
    /// Only enumerate candidates up to this weight.
    #[arg(long)]
    weight_bound: Option<usize>,
    /// Also write the test set, one `lead= trail= word=` line per element.
    #[arg(long)]
    testset_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RecoverArgs {
    #[arg(long)]
    code: PathBuf,
    /// Comma-separated codes, `?` for erased entries, e.g. `0,1,?,3`.
    #[arg(long)]
    word: String,
    /// Write the completed word here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV to this file and print only the averages.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["code", "random"])))]
struct VerifyArgs {
    #[arg(long)]
    code: Option<PathBuf>,
    /// Verify seeded random codes with n ≤ 12, k ≤ 6, q ∈ {2,3,4,5}.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random membership probes per code.
    #[arg(long, default_value_t = 1000)]
    probes: usize,
}

/// Enumeration budget, overridable through `LRC_BUDGET`.
pub fn budget() -> u128 {
    std::env::var("LRC_BUDGET").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.cmd {
        Command::Analyze(a) => analyze(&a.code, out),
        Command::Structure(a) => structure(&a, out),
        Command::Recover(a) => recover(&a, out),
        Command::Bench(a) => run_bench(&a, out),
        Command::OracleVerify(a) => verify(&a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn load(path: &Path) -> Result<LinearCode> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })?;
    io::parse_code(&text)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Parse { line: 0, msg: format!("{}: {e}", path.display()) })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Parse { line: 0, msg: format!("output: {e}") })
}

fn analyze(path: &Path, out: &mut dyn Write) -> Result<()> {
    let code = load(path)?;
    let budget = budget();
    let unknown = |r: Result<usize>| match r {
        Ok(d) => d.to_string(),
        Err(Error::BudgetExceeded { .. }) => "unknown".into(),
        Err(e) => format!("error ({e})"),
    };
    let d = unknown(code.min_distance_exhaustive(budget));
    let dd = unknown(oracle::dual_distance(&code, budget));
    let f = code.field();
    emit(out, &format!("q={} p={} m={} n={} k={} d={d} dual_distance={dd}\n", f.q(), f.p(), f.m(), code.n(), code.k()))
}

fn structure(a: &StructureArgs, out: &mut dyn Write) -> Result<()> {
    let code = load(&a.code)?;
    let opts = Options {
        mode: if a.full_testset { Mode::Full } else { Mode::Recovery },
        weight_bound: a.weight_bound,
    };
    let budget = budget();
    let ts = TestSet::compute(code.field(), code.parity_check(), &opts)?;
    if let Some(p) = &a.testset_out {
        write_file(p, &format_test_set(ts.elements()))?;
    }
    let s = sharp_structure_from(&code, &ts, budget)?;
    let mut text = format_report(&s);
    if a.full_testset {
        text.push_str(&format!("testset elements={} complete={}\n", ts.len(), yes_no(ts.is_complete())));
    }
    emit(out, &text)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn recover(a: &RecoverArgs, out: &mut dyn Write) -> Result<()> {
    let code = load(&a.code)?;
    let word = parse_word(code.field(), &a.word)?;
    code.check_len(&word)?;
    let s = sharp_structure_with(&code, &Options::recovery(), 0)?;
    let full = s.recover_multi(&word)?;
    let line = format!("{}\n", io::format_word(&full));
    match &a.out {
        Some(p) => write_file(p, &line),
        None => emit(out, &line),
    }
}

fn run_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<()> {
    let records = bench::bench(a.q, a.n, a.k, a.trials, a.seed)?;
    let csv = to_csv(&records, true);
    let mut text = String::new();
    match &a.csv {
        Some(p) => write_file(p, &csv)?,
        None => text.push_str(&csv),
    }
    if let Some(m) = averages(&records) {
        text.push_str(&format!(
            "# mean elapsed_ms={:.3} candidates={:.2} loc={:.2} dual_distance={:.2}\n",
            m.elapsed_ms, m.candidates, m.loc, m.dual_distance
        ));
    }
    emit(out, &text)
}

/// Differences between the test-set route and brute force on one code.
pub fn verify_code(code: &LinearCode, probes: usize, rng: &mut impl Rng, budget: u128) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let s = sharp_structure_with(code, &Options::recovery(), budget)?;
    let exact = oracle::localities_exact(code, budget)?;
    for (i, (got, want)) in s.localities().iter().zip(&exact).enumerate() {
        if got != want {
            bad.push(format!("loc_{} = {got}, brute force {want}", i + 1));
        }
    }
    let dd = oracle::dual_distance(code, budget)?;
    if s.dual_distance() != dd {
        bad.push(format!("dual distance {} vs brute force {dd}", s.dual_distance()));
    }
    if let Ok(c) = classify(&s, budget) {
        if c.sharp == Some(false) {
            bad.push("structure not sharp".into());
        }
    }

    // reduction to zero decides membership only for a complete test set
    let ts = TestSet::compute(code.field(), code.parity_check(), &Options::full())?;
    if !ts.is_complete() {
        bad.push("full test set did not complete".into());
    }
    let dual = ts.code();
    let f = code.field();
    for _ in 0..probes {
        // mix dual codewords in, otherwise membership is almost always false
        let x: Vec<Elem> = if rng.gen_bool(0.5) {
            let msg: Vec<Elem> = (0..dual.k()).map(|_| Elem(rng.gen_range(0..f.q()) as u16)).collect();
            dual.encode(&msg)
        } else {
            (0..code.n()).map(|_| Elem(rng.gen_range(0..f.q()) as u16)).collect()
        };
        if ts.is_member(&x) != code.is_dual_codeword(&x)? {
            bad.push(format!("membership disagrees on {}", io::format_word(&x)));
            break;
        }
    }
    Ok(bad)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<()> {
    let budget = budget();
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let codes: Vec<LinearCode> = match &a.code {
        Some(p) => vec![load(p)?],
        None => {
            let mut v = Vec::with_capacity(a.trials);
            for _ in 0..a.trials {
                let q = [2u64, 3, 4, 5][rng.gen_range(0..4)];
                let n = rng.gen_range(6..=12);
                let k = rng.gen_range(2..=6.min(n - 2));
                v.push(random_lrc_candidate(&Field::with_default_poly(q)?, n, k, &mut rng)?);
            }
            v
        }
    };
    let mut mismatches = 0;
    let mut text = String::new();
    for (t, code) in codes.iter().enumerate() {
        let bad = verify_code(code, a.probes, &mut rng, budget)?;
        let status = if bad.is_empty() { "ok" } else { "MISMATCH" };
        text.push_str(&format!("code={} q={} n={} k={} {status}\n", t + 1, code.field().q(), code.n(), code.k()));
        for b in &bad {
            text.push_str(&format!("  {b}\n"));
        }
        mismatches += bad.len();
    }
    text.push_str(&format!("verified={} mismatches={mismatches}\n", codes.len()));
    emit(out, &text)?;
    if mismatches > 0 {
        return Err(Error::Invariant(format!("{mismatches} oracle mismatches")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> String {
        format!("{}/fixtures/example1.code", env!("CARGO_MANIFEST_DIR"))
    }

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("lrc").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn structure_on_fixture() {
        let (code, out, _) = call(&["structure", "--code", &fixture()]);
        assert_eq!(code, 0);
        assert!(out.ends_with("summary loc=3 dual_distance=4 optimal=yes\n"), "{out}");
        assert_eq!(out.lines().count(), 10);
    }

    #[test]
    fn recover_fills_erasure() {
        // the fourth generator row with its last entry erased
        let (code, out, err) = call(&["recover", "--code", &fixture(), "--word", "0,0,0,1,2,1,2,0,?"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out, "0,0,0,1,2,1,2,0,3\n");
    }

    #[test]
    fn usage_and_domain_errors() {
        assert_eq!(call(&["structure", "--bogus"]).0, 2);
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["oracle-verify"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["structure", "--code", "/nonexistent/file"]).0, 1);
        // 1,0,0,... is not a codeword, so the completed word is rejected
        assert_eq!(call(&["recover", "--code", &fixture(), "--word", "1,0,0,0,0,0,0,0,?"]).0, 1);
    }

    #[test]
    fn bench_prints_one_row_per_trial() {
        let (code, out, _) = call(&["bench", "--q", "2", "--n", "10", "--k", "4", "--trials", "20"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 21);
    }

    #[test]
    fn oracle_verify_on_fixture_and_random() {
        let (code, out, _) = call(&["oracle-verify", "--code", &fixture(), "--probes", "200"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = call(&["oracle-verify", "--random", "--trials", "5", "--probes", "50"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("mismatches=0"));
    }
}
