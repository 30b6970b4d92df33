//! Plain-text formats: code files, structure reports and test-set dumps.
//!
//! A code file looks like
//!
//! ```text
//! # comments and blank lines are ignored
//! field q=4 p=2 m=2 primpoly=1,1,1
//! code n=9 k=4
//! G
//! 1 0 0 0 2 3 2 3 1
//! ...
//! ```
//!
//! Entries are canonical integer codes of field elements. The matrix is
//! either a generator (`G`, `k` rows) or a parity check (`H`, `n - k` rows).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::code::{rank, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::recovery::RecoveryStructure;
use crate::testset::Syzygy;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Generator,
    ParityCheck,
}

/// A parsed code file, kept verbatim so printing it back is lossless.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub field: Field,
    pub n: usize,
    pub k: usize,
    pub kind: MatrixKind,
    pub rows: Vec<Vec<Elem>>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// `key=value` pairs after a leading keyword.
fn fields<'a>(lineno: usize, rest: &'a str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let mut out = vec![None; keys.len()];
    for tok in rest.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| parse_err(lineno, format!("expected key=value, got `{tok}`")))?;
        let slot = keys.iter().position(|&x| x == k).ok_or_else(|| parse_err(lineno, format!("unknown key `{k}`")))?;
        if out[slot].replace(v).is_some() {
            return Err(parse_err(lineno, format!("duplicate key `{k}`")));
        }
    }
    keys.iter()
        .zip(out)
        .map(|(k, v)| v.ok_or_else(|| parse_err(lineno, format!("missing `{k}=`"))))
        .collect()
}

fn num<T: std::str::FromStr>(lineno: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| parse_err(lineno, format!("not a number: `{s}`")))
}

fn int_list<T: std::str::FromStr>(lineno: usize, s: &str, sep: char) -> Result<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(sep).map(|t| num(lineno, t.trim())).collect()
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<CodeFile> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let last_line = text.lines().count().max(1);
        let mut next = |what: &str| lines.next().ok_or_else(|| parse_err(last_line, format!("unexpected end of file, expected {what}")));

        let (ln, l) = next("field header")?;
        let rest = l.strip_prefix("field").ok_or_else(|| parse_err(ln, "expected `field q=.. p=.. m=.. primpoly=..`"))?;
        let v = fields(ln, rest, &["q", "p", "m", "primpoly"])?;
        let (q, p, m): (u64, u32, u32) = (num(ln, v[0])?, num(ln, v[1])?, num(ln, v[2])?);
        let poly: Vec<u32> = int_list(ln, v[3], ',')?;
        if (p as u64).checked_pow(m) != Some(q) {
            return Err(parse_err(ln, format!("q={q} is not p^m = {p}^{m}")));
        }
        let field = Field::new(p, m, &poly)?;

        let (ln, l) = next("code header")?;
        let rest = l.strip_prefix("code").ok_or_else(|| parse_err(ln, "expected `code n=.. k=..`"))?;
        let v = fields(ln, rest, &["n", "k"])?;
        let (n, k): (usize, usize) = (num(ln, v[0])?, num(ln, v[1])?);
        if n == 0 || k > n {
            return Err(parse_err(ln, format!("invalid dimensions n={n} k={k}")));
        }

        let (ln, l) = next("`G` or `H`")?;
        let kind = match l {
            "G" => MatrixKind::Generator,
            "H" => MatrixKind::ParityCheck,
            _ => return Err(parse_err(ln, format!("expected `G` or `H`, got `{l}`"))),
        };
        let want = match kind {
            MatrixKind::Generator => k,
            MatrixKind::ParityCheck => n - k,
        };

        let mut rows = Vec::with_capacity(want);
        for (ln, l) in lines {
            if rows.len() == want {
                return Err(parse_err(ln, format!("expected {want} rows, found more")));
            }
            let codes: Vec<u32> = l.split_whitespace().map(|t| num(ln, t)).collect::<Result<_>>()?;
            if codes.len() != n {
                return Err(parse_err(ln, format!("row has {} entries, expected {n}", codes.len())));
            }
            let row = codes.into_iter().map(|c| field.elem(c)).collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != want {
            return Err(parse_err(last_line, format!("expected {want} rows, found {}", rows.len())));
        }
        if !rows.is_empty() && rank(&field, &rows) != want {
            return Err(Error::RankError(format!("the {want} matrix rows are linearly dependent")));
        }
        Ok(CodeFile { field, n, k, kind, rows })
    }

    /// Canonical file for `code`, written with its generator matrix.
    pub fn from_code(code: &LinearCode) -> CodeFile {
        CodeFile {
            field: code.field().clone(),
            n: code.n(),
            k: code.k(),
            kind: MatrixKind::Generator,
            rows: code.generator().clone(),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        match self.kind {
            MatrixKind::Generator => LinearCode::from_generator(&self.field, &self.rows),
            MatrixKind::ParityCheck => {
                if self.rows.is_empty() {
                    // k = n: the whole space
                    let id = (0..self.n).map(|i| (0..self.n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }).collect()).collect::<Vec<_>>();
                    return LinearCode::from_generator(&self.field, &id);
                }
                LinearCode::from_parity_check(&self.field, &self.rows)
            }
        }
    }

    pub fn print(&self) -> String {
        let f = &self.field;
        let poly: Vec<String> = f.primpoly().iter().map(u32::to_string).collect();
        let mut s = format!("field q={} p={} m={} primpoly={}\ncode n={} k={}\n", f.q(), f.p(), f.m(), poly.join(","), self.n, self.k);
        s.push_str(match self.kind {
            MatrixKind::Generator => "G\n",
            MatrixKind::ParityCheck => "H\n",
        });
        for r in &self.rows {
            s.push_str(&join(r, " "));
            s.push('\n');
        }
        s
    }
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    CodeFile::parse(text)?.to_code()
}

pub fn print_code(code: &LinearCode) -> String {
    CodeFile::from_code(code).print()
}

fn join(x: &[Elem], sep: &str) -> String {
    x.iter().map(|e| e.code().to_string()).collect::<Vec<_>>().join(sep)
}

/// A word with erasures: comma-separated codes, `?` for an erased entry.
pub fn parse_word(field: &Field, s: &str) -> Result<Vec<Option<Elem>>> {
    s.split(',')
        .map(|t| match t.trim() {
            "?" => Ok(None),
            t => field.elem(num(1, t)?).map(Some),
        })
        .collect()
}

pub fn format_word(x: &[Elem]) -> String {
    join(x, ",")
}

/// One line of a structure report, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub i: usize,
    pub loc: usize,
    pub set: Vec<usize>,
    pub word: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<ReportLine>,
    pub loc: usize,
    pub dual_distance: usize,
    pub optimal: Option<bool>,
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

/// `i=.. loc=.. R=.. w=..` per coordinate, then the summary line.
pub fn format_report(s: &RecoveryStructure) -> String {
    let mut out = String::new();
    for r in s.sets() {
        let set: Vec<String> = r.set.iter().map(|j| (j + 1).to_string()).collect();
        let _ = writeln!(out, "i={} loc={} R={} w={}", r.coord + 1, r.locality(), set.join(","), join(&r.word, " "));
    }
    let _ = writeln!(out, "summary loc={} dual_distance={} optimal={}", s.locality(), s.dual_distance(), yes_no(s.is_optimal()));
    out
}

pub fn parse_report(text: &str) -> Result<Report> {
    let mut lines = Vec::new();
    let mut summary = None;
    for (ln, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if l.is_empty() {
            continue;
        }
        if let Some(rest) = l.strip_prefix("summary") {
            let v = fields(ln, rest, &["loc", "dual_distance", "optimal"])?;
            let optimal = match v[2] {
                "yes" => Some(true),
                "no" => Some(false),
                "unknown" => None,
                o => return Err(parse_err(ln, format!("bad optimal value `{o}`"))),
            };
            summary = Some((num(ln, v[0])?, num(ln, v[1])?, optimal));
            continue;
        }
        // w= holds space-separated entries, so split it off first
        let (head, w) = l.split_once(" w=").ok_or_else(|| parse_err(ln, "missing w="))?;
        let v = fields(ln, head, &["i", "loc", "R"])?;
        lines.push(ReportLine {
            i: num(ln, v[0])?,
            loc: num(ln, v[1])?,
            set: int_list(ln, v[2], ',')?,
            word: w.split_whitespace().map(|t| num(ln, t)).collect::<Result<_>>()?,
        });
    }
    let (loc, dual_distance, optimal) = summary.ok_or_else(|| parse_err(text.lines().count(), "missing summary line"))?;
    Ok(Report { lines, loc, dual_distance, optimal })
}

/// `lead=.. trail=.. word=..` per element, comma-separated codes.
pub fn format_test_set(elements: &[Syzygy]) -> String {
    let mut out = String::new();
    for s in elements {
        let _ = writeln!(out, "lead={} trail={} word={}", join(&s.lead, ","), join(&s.trail, ","), join(&s.word, ","));
    }
    out
}

pub fn parse_test_set(field: &Field, text: &str) -> Result<Vec<Syzygy>> {
    let mut out = Vec::new();
    for (ln, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim())) {
        if l.is_empty() {
            continue;
        }
        let v = fields(ln, l, &["lead", "trail", "word"])?;
        let vec = |s: &str| -> Result<Vec<Elem>> { int_list::<u32>(ln, s, ',')?.into_iter().map(|c| field.elem(c)).collect() };
        out.push(Syzygy { lead: vec(v[0])?, trail: vec(v[1])?, word: vec(v[2])? });
    }
    Ok(out)
}

/// 1-based rendering of a coordinate set, e.g. `{1,2,8}`.
pub fn format_set(s: &BTreeSet<usize>) -> String {
    format!("{{{}}}", s.iter().map(|j| (j + 1).to_string()).collect::<Vec<_>>().join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX1: &str = include_str!("../fixtures/example1.code");

    #[test]
    fn example_fixture_round_trips() {
        let f = CodeFile::parse(EX1).unwrap();
        assert_eq!((f.n, f.k, f.field.q()), (9, 4, 4));
        let printed = f.print();
        assert_eq!(CodeFile::parse(&printed).unwrap(), f);
        assert_eq!(CodeFile::parse(&printed).unwrap().print(), printed);
        let code = f.to_code().unwrap();
        assert_eq!(parse_code(&print_code(&code)).unwrap(), code);
    }

    #[test]
    fn zero_column_is_degenerate() {
        let text = "field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=1\nG\n1 0 1\n";
        assert_eq!(parse_code(text).unwrap_err(), Error::DegenerateCode(1));
    }

    #[test]
    fn parity_check_files() {
        let text = "field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=2\nH\n1 1 1\n";
        let c = parse_code(text).unwrap();
        assert_eq!(c.k(), 2);
        assert!(c.is_codeword(&[Elem(1), Elem(1), Elem(0)]).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = [
            ("field q=4 p=2 m=2\n", 1),
            ("# c\nfield q=4 p=2 m=2 primpoly=1,1,1\ncode n=3\n", 3),
            ("field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=1\nX\n", 3),
            ("field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=1\nG\n1 1\n", 4),
            ("field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=1\nG\n1 1 1\n1 1 1\n", 5),
            ("field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=1\nG\n1 x 1\n", 4),
        ];
        for (text, line) in bad {
            match CodeFile::parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        let dep = "field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=2\nG\n1 1 1\n1 1 1\n";
        assert!(matches!(CodeFile::parse(dep), Err(Error::RankError(_))));
        let range = "field q=2 p=2 m=1 primpoly=1,1\ncode n=3 k=1\nG\n1 2 1\n";
        assert_eq!(CodeFile::parse(range).unwrap_err(), Error::ElementOutOfRange { code: 2, q: 2 });
    }

    #[test]
    fn words_with_erasures() {
        let f = Field::with_default_poly(4).unwrap();
        assert_eq!(parse_word(&f, "0,3,?,1").unwrap(), vec![Some(Elem(0)), Some(Elem(3)), None, Some(Elem(1))]);
        assert!(parse_word(&f, "0,4").is_err());
        assert_eq!(format_word(&[Elem(2), Elem(0)]), "2,0");
    }

    #[test]
    fn report_and_test_set_round_trip() {
        let code = parse_code(EX1).unwrap();
        let s = crate::recovery::sharp_structure(&code).unwrap();
        let text = format_report(&s);
        let r = parse_report(&text).unwrap();
        assert_eq!(r.lines.len(), 9);
        assert_eq!(r.loc, s.locality());
        for (line, set) in r.lines.iter().zip(s.sets()) {
            assert_eq!(line.set, set.set.iter().map(|j| j + 1).collect::<Vec<_>>());
            assert_eq!(line.word, set.word.iter().map(|e| e.code()).collect::<Vec<_>>());
        }

        let ts = crate::testset::TestSet::compute(code.field(), code.parity_check(), &Default::default()).unwrap();
        let dumped = format_test_set(ts.elements());
        assert_eq!(parse_test_set(code.field(), &dumped).unwrap(), ts.elements());
    }
}
