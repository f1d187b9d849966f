//! Plumbing behind the `excla` binary: the matrix file format and the three
//! subcommands, written so tests can drive them without spawning a process.

use std::fmt::Write as _;
use std::io::Write;

use excla::conformance::{run_both, Family, SuiteResult, DEFAULT_SIZES};
use excla::ec::{describe_arg_code, describe_call_code, info_array_buffer, TerseContext, VerboseContext};
use excla::lapack::{gesv_ec, GESV_INFO_LEN};
use excla::probe::run_probes;
use excla::{Context, FlagReport, Real, Scalar};
use thiserror::Error;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NONZERO_INFO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `n nrhs`")]
    MissingHeader,
    #[error("bad integer `{0}`")]
    BadInteger(String),
    #[error("bad number `{0}`")]
    BadNumber(String),
    #[error("expected {expected} entries, found {found}")]
    RowLength { expected: usize, found: usize },
    #[error("file ends after {found} of {expected} rows")]
    MissingRows { expected: usize, found: usize },
    #[error("unexpected content after the last row")]
    TrailingContent,
}

/// A square system `A X = B`, both stored column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub n: usize,
    pub nrhs: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

/// (line number, column of each token, token) for every non-blank, non-comment line.
type Row<'a> = (usize, Vec<(usize, &'a str)>);

fn rows(text: &str) -> impl Iterator<Item = Row<'_>> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let toks: Vec<(usize, &str)> = body
            .split_whitespace()
            .map(|t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t))
            .collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn number(line: usize, (column, tok): (usize, &str)) -> Result<f64, ParseError> {
    // std accepts inf, infinity and nan in any case
    tok.parse::<f64>().map_err(|_| ParseError { line, column, kind: ParseErrorKind::BadNumber(tok.into()) })
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut it = rows(text);
        let last_line = text.lines().count().max(1);
        let (hl, header) = it.next().ok_or(ParseError { line: 1, column: 1, kind: ParseErrorKind::MissingHeader })?;
        if header.len() != 2 {
            let column = header.get(2).map_or(1, |t| t.0);
            return Err(ParseError { line: hl, column, kind: ParseErrorKind::MissingHeader });
        }
        let int = |(column, tok): (usize, &str)| {
            tok.parse::<usize>().map_err(|_| ParseError { line: hl, column, kind: ParseErrorKind::BadInteger(tok.into()) })
        };
        let n = int(header[0])?;
        let nrhs = int(header[1])?;

        let read_block = |cols: usize, it: &mut dyn Iterator<Item = Row<'_>>| -> Result<Vec<f64>, ParseError> {
            let mut m = vec![0.0; n * cols];
            if cols == 0 {
                return Ok(m);
            }
            for i in 0..n {
                let (line, toks) = it.next().ok_or(ParseError {
                    line: last_line,
                    column: 1,
                    kind: ParseErrorKind::MissingRows { expected: n, found: i },
                })?;
                if toks.len() != cols {
                    let column = toks.get(cols).map_or_else(|| toks.last().map_or(1, |t| t.0 + t.1.len()), |t| t.0);
                    return Err(ParseError { line, column, kind: ParseErrorKind::RowLength { expected: cols, found: toks.len() } });
                }
                for (j, &t) in toks.iter().enumerate() {
                    m[i + j * n] = number(line, t)?;
                }
            }
            Ok(m)
        };
        let a = read_block(n, &mut it)?;
        let b = read_block(nrhs, &mut it)?;
        if let Some((line, toks)) = it.next() {
            return Err(ParseError { line, column: toks[0].0, kind: ParseErrorKind::TrailingContent });
        }
        Ok(MatrixFile { n, nrhs, a, b })
    }

    /// Inverse of [`MatrixFile::parse`]; numbers use the shortest round-trip form.
    pub fn serialize(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.nrhs);
        for (m, cols) in [(&self.a, self.n), (&self.b, self.nrhs)] {
            for i in 0..self.n {
                let row: Vec<String> = (0..cols).map(|j| m[i + j * self.n].to_string()).collect();
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn cmd_probe(format: Format, out: &mut dyn Write) -> i32 {
    let r = run_probes();
    let _ = match format {
        Format::Text => write!(out, "{}", r.to_text()),
        Format::Json => writeln!(out, "{}", r.to_json()),
    };
    EXIT_OK
}

/// Resolve routine names; the first unknown one is returned as the error.
pub fn parse_families(names: &[String]) -> Result<Vec<Family>, String> {
    if names.is_empty() || names.iter().any(|n| n.eq_ignore_ascii_case("all")) {
        return Ok(Family::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in names {
        let f = Family::parse(name).ok_or_else(|| name.clone())?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

pub fn run_conformance(families: &[Family], sizes: &[usize], ulps: u64) -> SuiteResult {
    let sizes = if sizes.is_empty() { &DEFAULT_SIZES[..] } else { sizes };
    run_both(families, sizes, ulps)
}

pub fn cmd_conformance(names: &[String], sizes: &[usize], ulps: u64, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let families = match parse_families(names) {
        Ok(f) => f,
        Err(bad) => {
            let _ = writeln!(err, "unknown routine `{bad}` (expected iamax, nrm2, rotg, trsv, ger, gesv, regression or all)");
            return EXIT_USAGE;
        }
    };
    let r = run_conformance(&families, sizes, ulps);
    let _ = match format {
        Format::Text => {
            let mut s = r.render_grid();
            for f in r.failures.iter().take(20) {
                let _ = writeln!(s, "FAIL {}: expected {}, got {}", f.id, f.expected, f.got);
            }
            write!(out, "{s}")
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("plain data serializes")),
    };
    if r.failed == 0 {
        EXIT_OK
    } else {
        EXIT_NONZERO_INFO
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    Verbose,
    Terse,
}

/// Result of one solve, independent of how it is printed.
#[derive(Debug, Clone)]
pub struct Solved {
    pub n: usize,
    pub nrhs: usize,
    /// Solution (or whatever the driver left in B), column-major, widened to f64.
    pub x: Vec<f64>,
    pub info: i32,
    pub info_array: Vec<i32>,
    pub how: i32,
}

pub fn solve<T: Real + Scalar>(m: &MatrixFile, what: i32, how: i32, ctx: &dyn Context) -> Solved {
    let n = m.n;
    let mut a: Vec<T> = m.a.iter().map(|&v| T::from_f64_lossy(v)).collect();
    let mut b: Vec<T> = m.b.iter().map(|&v| T::from_f64_lossy(v)).collect();
    let mut ipiv = vec![0; n];
    let mut ia = info_array_buffer(GESV_INFO_LEN);
    let ld = n.max(1) as i32;
    let info = gesv_ec(n as i32, m.nrhs as i32, &mut a, ld, &mut ipiv, &mut b, ld, FlagReport::new(what, how), &mut ia, Some(ctx));
    Solved { n, nrhs: m.nrhs, x: b.iter().map(|v| v.to_f64_lossless()).collect(), info, info_array: ia, how }
}

/// Plain-language meaning of a driver INFO value.
pub fn describe_info(info: i32, n: usize) -> String {
    let n = n as i32;
    match info {
        0 => "success".into(),
        -3 => "A contains Inf/NaN on input".into(),
        -6 => "B contains Inf/NaN on input".into(),
        i if i < 0 => format!("argument {} is invalid", -i),
        i if i <= n => format!("U({i},{i}) is exactly zero, A is singular"),
        i if i == n + 1 => "LU factors contain Inf/NaN".into(),
        i if i == n + 2 => "solution contains Inf/NaN".into(),
        i if i == n + 3 => "factorization reported Inf/NaN".into(),
        i if i == n + 4 => "triangular solve reported Inf/NaN".into(),
        _ => "unknown code".into(),
    }
}

const SLOT_NAMES: [&str; 6] = ["legacy INFO", "WHAT used", "HOW used", "INFO", "arguments", "calls"];

/// Ten lines, one per report slot, slot numbers 1-based.
pub fn decode_info_array(ia: &[i32]) -> String {
    let mut s = String::new();
    for (k, &v) in ia.iter().enumerate() {
        let _ = match k {
            0..=5 => writeln!(s, "  [{:>2}] {:<12} = {v}", k + 1, SLOT_NAMES[k]),
            6 => writeln!(s, "  [{:>2}] A: {}", k + 1, describe_arg_code(v)),
            7 => writeln!(s, "  [{:>2}] B: {}", k + 1, describe_arg_code(v)),
            8 => writeln!(s, "  [{:>2}] GETRF: {}", k + 1, describe_call_code(v)),
            9 => writeln!(s, "  [{:>2}] GETRS: {}", k + 1, describe_call_code(v)),
            _ => writeln!(s, "  [{:>2}] {v}", k + 1),
        };
    }
    s
}

pub fn render_solved(r: &Solved) -> String {
    let mut s = String::from("x =\n");
    for i in 0..r.n {
        let row: Vec<String> = (0..r.nrhs).map(|j| r.x[i + j * r.n].to_string()).collect();
        let _ = writeln!(s, "  {}", row.join(" "));
    }
    let _ = writeln!(s, "INFO = {} ({})", r.info, describe_info(r.info, r.n));
    if r.how >= 1 {
        s.push_str("info_array:\n");
        s.push_str(&decode_info_array(&r.info_array));
    }
    s
}

pub fn cmd_solve(text: &str, what: i32, how: i32, report: ReportMode, single: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let m = match MatrixFile::parse(text) {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(err, "parse error: {e}");
            return EXIT_USAGE;
        }
    };
    let ctx: Box<dyn Context> = match report {
        ReportMode::Verbose => Box::new(VerboseContext::stderr()),
        ReportMode::Terse => Box::new(TerseContext),
    };
    let r = if single { solve::<f32>(&m, what, how, ctx.as_ref()) } else { solve::<f64>(&m, what, how, ctx.as_ref()) };
    let _ = write!(out, "{}", render_solved(&r));
    if r.info == 0 {
        EXIT_OK
    } else {
        EXIT_NONZERO_INFO
    }
}
