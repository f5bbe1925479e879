//! The `key = value` code-spec file format.
//!
//! ```text
//! # comment
//! q = 7
//! m = 5
//! n = 5
//! iota.v1 = 1 1 1 1 1        # ascending residues, one key per component
//! iota.v2 = 1 1 1 1 1
//! iota.v3 = 1 1 1 1 1
//! ell.std = 5,1,2 2,4,4 3,6,0 4,2,6   # or a+bv+cv^2 per power of x
//! theta.std = 6,0,0 1,0,0
//! ```
//!
//! Each generator is given either by its three `.v1/.v2/.v3` lines or by a
//! single `.std` line. Unknown or repeated keys are errors.

use std::collections::BTreeMap;

use crate::code::{CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::ring::RElem;
use crate::rpoly::RPoly;

const GENERATORS: [&str; 3] = ["iota", "ell", "theta"];

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// `(line number, key, value)` for each non-comment line.
fn entries(text: &str) -> Result<Vec<(usize, String, String)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (k, v) = body
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("expected `key = value`, got `{body}`")))?;
        out.push((line, k.trim().to_owned(), v.trim().to_owned()));
    }
    Ok(out)
}

fn parse_usize(line: usize, key: &str, v: &str) -> Result<usize> {
    v.parse()
        .map_err(|_| parse_err(line, format!("`{key}` must be a non-negative integer, got `{v}`")))
}

/// Parses `a,b,c` tokens into an `R` polynomial, ascending in `x`.
pub fn parse_std_poly(ctx: FieldCtx, line: usize, v: &str) -> Result<RPoly> {
    let coeffs = v
        .split_whitespace()
        .map(|t| RElem::parse_standard(ctx, t).map_err(|e| parse_err(line, e)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RPoly::from_standard(ctx, &coeffs))
}

/// Header values and the raw generator lines of a file.
struct Document {
    ctx: FieldCtx,
    m: usize,
    n: usize,
    lines: usize,
    rest: BTreeMap<String, (usize, String)>,
    repeated: Vec<(usize, String)>,
}

fn read_document(text: &str, allowed: impl Fn(&str) -> bool, repeatable: &str) -> Result<Document> {
    let mut header: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    let mut rest = BTreeMap::new();
    let mut repeated = Vec::new();
    for (line, k, v) in entries(text)? {
        if k == repeatable {
            repeated.push((line, v));
            continue;
        }
        let dup = |k: &str| parse_err(line, format!("key `{k}` given twice"));
        match k.as_str() {
            "q" | "m" | "n" => {
                let key = match k.as_str() {
                    "q" => "q",
                    "m" => "m",
                    _ => "n",
                };
                if header.insert(key, (line, parse_usize(line, key, &v)?)).is_some() {
                    return Err(dup(key));
                }
            }
            other if allowed(other) => {
                if rest.insert(k.clone(), (line, v)).is_some() {
                    return Err(dup(&k));
                }
            }
            other => return Err(parse_err(line, format!("unknown key `{other}`"))),
        }
    }
    let lines = text.lines().count();
    let get = |k: &str| {
        header
            .get(k)
            .copied()
            .ok_or_else(|| parse_err(lines, format!("missing key `{k}`")))
    };
    let (q_line, q) = get("q")?;
    let ctx = FieldCtx::new(q as u64).map_err(|e| parse_err(q_line, e.to_string()))?;
    let (m_line, m) = get("m")?;
    let (n_line, n) = get("n")?;
    if m == 0 {
        return Err(parse_err(m_line, "`m` must be at least 1"));
    }
    if n == 0 {
        return Err(parse_err(n_line, "`n` must be at least 1"));
    }
    Ok(Document {
        ctx,
        m,
        n,
        lines,
        rest,
        repeated,
    })
}

fn is_generator_key(k: &str) -> bool {
    GENERATORS.iter().any(|g| {
        k.strip_prefix(g)
            .is_some_and(|s| matches!(s, ".v1" | ".v2" | ".v3" | ".std"))
    })
}

/// A parsed spec file before validation.
#[derive(Clone, Debug)]
pub struct SpecFile {
    pub ctx: FieldCtx,
    pub m: usize,
    pub n: usize,
    pub iota: RPoly,
    pub ell: RPoly,
    pub theta: RPoly,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        let doc = read_document(text, is_generator_key, "")?;
        let ctx = doc.ctx;
        let mut polys = Vec::new();
        for g in GENERATORS {
            let std = doc.rest.get(&format!("{g}.std"));
            let comps: Vec<_> = (1..=3).map(|i| doc.rest.get(&format!("{g}.v{i}"))).collect();
            let any_comp = comps.iter().find_map(|c| *c);
            let p = match (std, any_comp) {
                (Some((line, _)), Some(_)) => {
                    return Err(parse_err(*line, format!("`{g}` given both as `.std` and by components")))
                }
                (Some((line, v)), None) => parse_std_poly(ctx, *line, v)?,
                (None, Some((line, _))) => {
                    let mut out = Vec::new();
                    for (i, c) in comps.iter().enumerate() {
                        let (l, v) = c.ok_or_else(|| {
                            parse_err(*line, format!("`{g}.v{}` is missing", i + 1))
                        })?;
                        out.push(Poly::parse(ctx, v).map_err(|e| parse_err(*l, e))?);
                    }
                    RPoly::from_components(out.try_into().expect("three components"))
                }
                (None, None) => return Err(parse_err(doc.lines, format!("generator `{g}` is missing"))),
            };
            polys.push(p);
        }
        let [iota, ell, theta]: [RPoly; 3] = polys.try_into().expect("three generators");
        Ok(Self {
            ctx,
            m: doc.m,
            n: doc.n,
            iota,
            ell,
            theta,
        })
    }

    pub fn to_code(&self) -> Result<CodeSpec> {
        CodeSpec::new(
            self.ctx,
            self.m,
            self.n,
            self.iota.clone(),
            self.ell.clone(),
            self.theta.clone(),
        )
    }
}

/// Serializes a code in the component form; [`SpecFile::parse`] reads it back.
pub fn write_spec(code: &CodeSpec) -> String {
    code.to_string()
}

/// Parses `a,b,c a,b,c ... | a,b,c ...`.
pub fn parse_codeword(ctx: FieldCtx, m: usize, n: usize, text: &str) -> std::result::Result<Codeword, String> {
    let (l, r) = text
        .split_once('|')
        .ok_or_else(|| "expected `left | right`".to_owned())?;
    let block = |s: &str, len: usize, side: &str| -> std::result::Result<Vec<RElem>, String> {
        let v = s
            .split_whitespace()
            .map(|t| RElem::parse_standard(ctx, t))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if v.len() != len {
            return Err(format!("{side} block has {} entries, expected {len}", v.len()));
        }
        Ok(v)
    };
    Ok(Codeword::new(block(l, m, "left")?, block(r, n, "right")?))
}

/// A words file: `q`, `m`, `n` and any number of `word = ...` lines.
pub fn parse_words(text: &str) -> Result<(FieldCtx, usize, usize, Vec<Codeword>)> {
    let doc = read_document(text, |_| false, "word")?;
    let words = doc
        .repeated
        .iter()
        .map(|(line, v)| parse_codeword(doc.ctx, doc.m, doc.n, v).map_err(|e| parse_err(*line, e)))
        .collect::<Result<Vec<_>>>()?;
    if words.is_empty() {
        return Err(parse_err(doc.lines, "no `word` lines"));
    }
    Ok((doc.ctx, doc.m, doc.n, words))
}
