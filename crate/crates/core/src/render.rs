//! Text, CSV, JSON and plain PGM encodings of residue and sign matrices.
//!
//! JSON uses one schema for both kinds:
//! `{"n": int, "m": int, "kind": "residue"|"sign", "rows": [[int, ...], ...]}`.
//! Sign PGM maps `+1 -> 255`, `-1 -> 0`, `0 -> 128` with maxval 255; residue
//! PGM uses maxval `m - 1`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multfunc::{Sign, SignMatrix};
use crate::seqmatrix::ResidueMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RenderFormat {
    Text,
    Csv,
    Json,
    Pgm,
}

impl RenderFormat {
    pub const ALL: [RenderFormat; 4] = [RenderFormat::Text, RenderFormat::Csv, RenderFormat::Json, RenderFormat::Pgm];

    pub fn name(self) -> &'static str {
        match self {
            RenderFormat::Text => "text",
            RenderFormat::Csv => "csv",
            RenderFormat::Json => "json",
            RenderFormat::Pgm => "pgm",
        }
    }
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(RenderFormat::Text),
            "csv" => Ok(RenderFormat::Csv),
            "json" => Ok(RenderFormat::Json),
            "pgm" => Ok(RenderFormat::Pgm),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Residue,
    Sign,
}

#[derive(Serialize, Deserialize)]
struct JsonMatrix {
    n: usize,
    m: u64,
    kind: Kind,
    rows: Vec<Vec<i64>>,
}

const PGM_PLUS: u64 = 255;
const PGM_MINUS: u64 = 0;
const PGM_ZERO: u64 = 128;

fn sign_text(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+1",
        Sign::Minus => "-1",
        Sign::Zero => " 0",
    }
}

fn pgm_level(s: Sign) -> u64 {
    match s {
        Sign::Plus => PGM_PLUS,
        Sign::Minus => PGM_MINUS,
        Sign::Zero => PGM_ZERO,
    }
}

fn join_rows<T: Copy>(rows: impl Iterator<Item = impl AsRef<[T]>>, sep: &str, cell: impl Fn(T) -> String) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.as_ref().iter().map(|&v| cell(v)).collect();
        out.push_str(&line.join(sep));
        out.push('\n');
    }
    out
}

fn pgm_header(n: usize, maxval: u64) -> String {
    format!("P2\n{n} {n}\n{maxval}\n")
}

pub fn render_residue(a: &ResidueMatrix, format: RenderFormat) -> Result<String> {
    let rows = a.grid().rows();
    Ok(match format {
        RenderFormat::Text => {
            let width = (a.modulus().get() - 1).to_string().len();
            join_rows(rows, " ", |v: u64| format!("{v:>width$}"))
        }
        RenderFormat::Csv => join_rows(rows, ",", |v: u64| v.to_string()),
        RenderFormat::Json => {
            let doc = JsonMatrix {
                n: a.side(),
                m: a.modulus().get(),
                kind: Kind::Residue,
                rows: rows.map(|r| r.iter().map(|&v| v as i64).collect()).collect(),
            };
            json_line(&doc)
        }
        RenderFormat::Pgm => {
            let maxval = a.modulus().get() - 1;
            if maxval > 65_535 {
                return Err(Error::Unsupported(format!(
                    "plain PGM allows maxval up to 65535; modulus {} is too large",
                    a.modulus()
                )));
            }
            let mut out = pgm_header(a.side(), maxval);
            out.push_str(&join_rows(rows, " ", |v: u64| v.to_string()));
            out
        }
    })
}

pub fn render_sign(s: &SignMatrix, format: RenderFormat) -> String {
    let rows = s.grid().rows();
    match format {
        RenderFormat::Text => join_rows(rows, " ", |v: Sign| sign_text(v).to_string()),
        RenderFormat::Csv => join_rows(rows, ",", |v: Sign| v.to_i8().to_string()),
        RenderFormat::Json => {
            let n = s.side();
            let doc = JsonMatrix {
                n,
                m: (n as u64) * (n as u64) + 1,
                kind: Kind::Sign,
                rows: rows.map(|r| r.iter().map(|v| v.to_i8() as i64).collect()).collect(),
            };
            json_line(&doc)
        }
        RenderFormat::Pgm => {
            let mut out = pgm_header(s.side(), 255);
            out.push_str(&join_rows(rows, " ", |v: Sign| pgm_level(v).to_string()));
            out
        }
    }
}

fn json_line(doc: &JsonMatrix) -> String {
    let mut s = serde_json::to_string(doc).expect("matrix json is always serializable");
    s.push('\n');
    s
}

fn split_rows(input: &str, sep: Option<char>) -> Vec<Vec<String>> {
    input
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| match sep {
            Some(c) => l.split(c).map(|t| t.trim().to_string()).collect(),
            None => l.split_whitespace().map(str::to_string).collect(),
        })
        .collect()
}

fn parse_token<T: FromStr>(tok: &str) -> Result<T> {
    // "+1" is accepted by integer parsing
    tok.parse::<T>().map_err(|_| Error::Parse(format!("bad entry `{tok}`")))
}

fn sign_from_int(v: i64) -> Result<Sign> {
    i8::try_from(v)
        .ok()
        .and_then(Sign::from_i8)
        .ok_or_else(|| Error::Parse(format!("sign entry out of range: {v}")))
}

fn parse_json(input: &str) -> Result<JsonMatrix> {
    let doc: JsonMatrix = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.rows.len() != doc.n {
        return Err(Error::ShapeMismatch { expected: doc.n, got: format!("{} rows", doc.rows.len()) });
    }
    let expected_m = (doc.n as u64).checked_mul(doc.n as u64).map(|v| v + 1);
    if expected_m != Some(doc.m) {
        return Err(Error::Parse(format!("m = {} does not equal n^2 + 1 for n = {}", doc.m, doc.n)));
    }
    Ok(doc)
}

/// Plain PGM: `(side, maxval, samples)`; `#` comments are skipped.
fn parse_pgm(input: &str) -> Result<(usize, u64, Vec<u64>)> {
    let mut tokens = input
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    if tokens.next() != Some("P2") {
        return Err(Error::Parse("missing P2 magic".into()));
    }
    let mut header = || -> Result<u64> {
        parse_token(tokens.next().ok_or_else(|| Error::Parse("truncated PGM header".into()))?)
    };
    let (w, h, maxval) = (header()?, header()?, header()?);
    if w != h {
        return Err(Error::ShapeMismatch { expected: w as usize, got: format!("{w}x{h}") });
    }
    let samples: Vec<u64> = tokens.map(parse_token).collect::<Result<_>>()?;
    if samples.len() as u64 != w * h {
        return Err(Error::Parse(format!("expected {} samples, found {}", w * h, samples.len())));
    }
    if let Some(&bad) = samples.iter().find(|&&v| v > maxval) {
        return Err(Error::Parse(format!("sample {bad} exceeds maxval {maxval}")));
    }
    Ok((w as usize, maxval, samples))
}

fn chunk(samples: Vec<u64>, n: usize) -> Vec<Vec<u64>> {
    samples.chunks(n.max(1)).map(<[u64]>::to_vec).collect()
}

pub fn parse_residue(format: RenderFormat, input: &str) -> Result<ResidueMatrix> {
    match format {
        RenderFormat::Text | RenderFormat::Csv => {
            let sep = (format == RenderFormat::Csv).then_some(',');
            let rows = split_rows(input, sep)
                .into_iter()
                .map(|r| r.iter().map(|t| parse_token::<u64>(t)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            ResidueMatrix::from_rows(rows)
        }
        RenderFormat::Json => {
            let doc = parse_json(input)?;
            if doc.kind != Kind::Residue {
                return Err(Error::Parse("expected kind \"residue\"".into()));
            }
            let rows = doc
                .rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|v| u64::try_from(v).map_err(|_| Error::Parse(format!("negative residue {v}"))))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            ResidueMatrix::from_rows(rows)
        }
        RenderFormat::Pgm => {
            let (n, maxval, samples) = parse_pgm(input)?;
            if maxval != (n as u64) * (n as u64) {
                return Err(Error::Parse(format!("residue PGM needs maxval n^2 = {}, found {maxval}", n * n)));
            }
            ResidueMatrix::from_rows(chunk(samples, n))
        }
    }
}

pub fn parse_sign(format: RenderFormat, input: &str) -> Result<SignMatrix> {
    match format {
        RenderFormat::Text | RenderFormat::Csv => {
            let sep = (format == RenderFormat::Csv).then_some(',');
            let rows = split_rows(input, sep)
                .into_iter()
                .map(|r| r.iter().map(|t| parse_token::<i64>(t).and_then(sign_from_int)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            SignMatrix::from_rows(rows)
        }
        RenderFormat::Json => {
            let doc = parse_json(input)?;
            if doc.kind != Kind::Sign {
                return Err(Error::Parse("expected kind \"sign\"".into()));
            }
            let rows = doc
                .rows
                .into_iter()
                .map(|r| r.into_iter().map(sign_from_int).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            SignMatrix::from_rows(rows)
        }
        RenderFormat::Pgm => {
            let (n, maxval, samples) = parse_pgm(input)?;
            if maxval != 255 {
                return Err(Error::Parse(format!("sign PGM needs maxval 255, found {maxval}")));
            }
            let rows = chunk(samples, n)
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|v| match v {
                            PGM_PLUS => Ok(Sign::Plus),
                            PGM_MINUS => Ok(Sign::Minus),
                            PGM_ZERO => Ok(Sign::Zero),
                            other => Err(Error::Parse(format!("gray level {other} is not a sign"))),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            SignMatrix::from_rows(rows)
        }
    }
}

/// Renders a cycle-length list as `{1,6,2}`.
pub fn brace_list<T: std::fmt::Display>(items: &[T]) -> String {
    let mut s = String::from("{");
    for (k, v) in items.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{v}");
    }
    s.push('}');
    s
}
