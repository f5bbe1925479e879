//! Command implementations behind the `dcc` binary.
//!
//! Each command returns an [`Outcome`] instead of printing, so the same code
//! paths are exercised by tests. Exit codes: 0 success, 1 mathematical
//! failure or counterexample, 2 parse error, 3 resource cap exceeded.

pub mod spec_file;

use std::fmt::Write as _;

use crate::code::{CodeSpec, DEFAULT_ENUMERATION_CAP};
use crate::dual::{dual_code, Method};
use crate::error::Error;
use crate::examples::example1;
use crate::matrix::counts::{code_counts, code_dimension};
use crate::matrix::distance::min_distance;
use crate::matrix::generator::{natural_matrices, standardize_code};
use crate::matrix::FqMatrix;
use crate::dual::RhoForm;
use crate::verify::{run_all_with, CorpusConfig};

use spec_file::{parse_codeword, parse_words, write_spec, SpecFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Self { code, stdout, stderr }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::TooLarge { .. } => EXIT_CAP,
            _ => EXIT_FAILURE,
        };
        Self::fail(code, String::new(), format!("error: {e}\n"))
    }
}

fn load(text: &str) -> Result<CodeSpec, Outcome> {
    let f = SpecFile::parse(text).map_err(|e| Outcome::from_error(&e))?;
    f.to_code().map_err(|e| Outcome::from_error(&e))
}

macro_rules! try_out {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(o) => return o,
        }
    };
}

/// Reports every structural condition per component.
pub fn validate(text: &str) -> Outcome {
    let f = try_out!(SpecFile::parse(text).map_err(|e| Outcome::from_error(&e)));
    let v = CodeSpec::validate(f.m, f.n, &f.iota, &f.ell, &f.theta);
    let mut out = String::new();
    for c in &v.conditions {
        let mark = if c.holds { "ok  " } else { "FAIL" };
        let _ = writeln!(out, "{mark} v{} {}", c.component, c.name);
    }
    if v.is_valid() {
        out.push_str("valid\n");
        Outcome::ok(out)
    } else {
        out.push_str("invalid\n");
        Outcome::fail(EXIT_FAILURE, out, String::new())
    }
}

fn matrices_text(ms: &[FqMatrix; 3], extra: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (i, g) in ms.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "# v{}{}", i + 1, extra(i));
        out.push_str(&g.to_text());
    }
    out
}

/// Natural generator matrices, or the standardized forms with their
/// permutations, `k` values and parity-check matrices.
pub fn genmat(text: &str, standardized: bool) -> Outcome {
    let code = try_out!(load(text));
    if !standardized {
        return Outcome::ok(matrices_text(&natural_matrices(&code), |_| String::new()));
    }
    let forms = match standardize_code(&code) {
        Ok(f) => f,
        Err(e) => return Outcome::from_error(&e),
    };
    let mut out = String::new();
    for (i, f) in forms.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let perm: Vec<String> = f.perm.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "# v{} k = {}", i + 1, f.k);
        let _ = writeln!(out, "# perm = {}", perm.join(" "));
        out.push_str(&f.matrix.to_text());
        let _ = writeln!(out, "# parity check (natural column order)");
        out.push_str(&f.parity_check().to_text());
    }
    Outcome::ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualMethod {
    Formula,
    Nullspace,
    Both,
}

/// The dual in spec-file form; `Both` compares the two methods.
pub fn dual(text: &str, method: DualMethod) -> Outcome {
    let code = try_out!(load(text));
    let run = |m| dual_code(&code, m).map(|d| d.code);
    match method {
        DualMethod::Formula | DualMethod::Nullspace => {
            let m = if method == DualMethod::Formula {
                Method::Formula
            } else {
                Method::Nullspace
            };
            match run(m) {
                Ok(d) => Outcome::ok(write_spec(&d)),
                Err(e) => Outcome::from_error(&e),
            }
        }
        DualMethod::Both => {
            let (f, n) = match (run(Method::Formula), run(Method::Nullspace)) {
                (Ok(f), Ok(n)) => (f, n),
                (Err(e), _) | (_, Err(e)) => return Outcome::from_error(&e),
            };
            let mut out = format!("# formula\n{}# nullspace\n{}", write_spec(&f), write_spec(&n));
            if f == n {
                out.push_str("EQUAL\n");
                Outcome::ok(out)
            } else {
                out.push_str("DIFFER\n");
                Outcome::fail(EXIT_FAILURE, out, String::new())
            }
        }
    }
}

/// `[length,dimension,distance]` of each requested component code;
/// components are 1-based.
pub fn mindist(text: &str, components: &[usize], cap: u64) -> Outcome {
    let code = try_out!(load(text));
    let gs = natural_matrices(&code);
    let mut out = String::new();
    for &i in components {
        let g = &gs[i - 1];
        match min_distance(g, cap) {
            Ok(d) => {
                let d = d.map_or("-".to_owned(), |d| d.to_string());
                let _ = writeln!(out, "v{i} [{},{},{d}]", g.ncols(), g.rank());
            }
            Err(e) => {
                let mut o = Outcome::from_error(&e);
                o.stdout = out;
                return o;
            }
        }
    }
    Outcome::ok(out)
}

/// Every codeword in standard form, one per line, then the count.
pub fn enumerate(text: &str, cap: u64) -> Outcome {
    let code = try_out!(load(text));
    let iter = match code.enumerate(cap) {
        Ok(it) => it,
        Err(e) => return Outcome::from_error(&e),
    };
    let mut out = String::new();
    let total = iter.total();
    for w in iter {
        let _ = writeln!(out, "{w}");
    }
    let _ = writeln!(out, "# {total} codewords");
    Outcome::ok(out)
}

/// Exit 0 if the word is a codeword, 1 otherwise.
pub fn member(text: &str, word: &str) -> Outcome {
    let code = try_out!(load(text));
    let w = match parse_codeword(code.ctx(), code.m(), code.n(), word) {
        Ok(w) => w,
        Err(e) => return Outcome::fail(EXIT_PARSE, String::new(), format!("error: {e}\n")),
    };
    match code.contains(&w) {
        Ok(true) => Outcome::ok("member\n".into()),
        Ok(false) => Outcome::fail(EXIT_FAILURE, "not a member\n".into(), String::new()),
        Err(e) => Outcome::from_error(&e),
    }
}

/// Generators of the smallest code containing the listed words.
pub fn canonicalize(text: &str) -> Outcome {
    let (ctx, m, n, words) = match parse_words(text) {
        Ok(v) => v,
        Err(e) => return Outcome::from_error(&e),
    };
    match CodeSpec::canonicalize(ctx, m, n, &words) {
        Ok(c) => Outcome::ok(write_spec(&c)),
        Err(e) => Outcome::from_error(&e),
    }
}

/// Runs the corpus suites; exit 1 with the first counterexample on failure.
/// `form` selects how `rho` is computed in the closed-form dual.
pub fn verify(cfg: &CorpusConfig, form: RhoForm) -> Outcome {
    let report = match run_all_with(cfg, form) {
        Ok(r) => r,
        Err(e) => return Outcome::from_error(&e),
    };
    let mut out = format!(
        "corpus: {} codes, seed {}, q in {:?}\n",
        cfg.cases, cfg.seed, cfg.qset
    );
    let mut err = String::new();
    for s in &report.suites {
        let mark = if s.ok() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{mark} {} ({}/{})", s.name, s.passed, s.total);
        if let Some(f) = &s.failure {
            let _ = writeln!(err, "counterexample for `{}`: {}", s.name, f.message);
            if let Some(c) = &f.code {
                err.push_str("# code under test\n");
                err.push_str(&write_spec(c));
            }
        }
    }
    out.push_str("rho closed forms vs nullspace dual (codes with nonzero rho):\n");
    for a in &report.audit {
        let _ = writeln!(
            out,
            "  {:<58} matched {:>4}  differ {:>4}  undefined {:>4}",
            a.form.describe(),
            a.matched,
            a.mismatched,
            a.undefined
        );
    }
    if report.ok() {
        Outcome::ok(out)
    } else {
        Outcome::fail(EXIT_FAILURE, out, err)
    }
}

/// Natural generator matrices of the worked example, row by row.
pub const EXAMPLE1_MATRICES: [[[u32; 10]; 5]; 3] = [
    [
        [1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
        [5, 2, 3, 4, 0, 6, 1, 0, 0, 0],
        [0, 5, 2, 3, 4, 0, 6, 1, 0, 0],
        [4, 0, 5, 2, 3, 0, 0, 6, 1, 0],
        [3, 4, 0, 5, 2, 0, 0, 0, 6, 1],
    ],
    [
        [1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
        [1, 3, 2, 5, 0, 6, 1, 0, 0, 0],
        [0, 1, 3, 2, 5, 0, 6, 1, 0, 0],
        [5, 0, 1, 3, 2, 0, 0, 6, 1, 0],
        [2, 5, 0, 1, 3, 0, 0, 0, 6, 1],
    ],
    [
        [1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
        [6, 2, 4, 1, 0, 6, 1, 0, 0, 0],
        [0, 6, 2, 4, 1, 0, 6, 1, 0, 0],
        [1, 0, 6, 2, 4, 0, 0, 6, 1, 0],
        [4, 1, 0, 6, 2, 0, 0, 0, 6, 1],
    ],
];

pub const EXAMPLE1_DECOMPOSITION: &str =
    "ell = (4x^3 + 3x^2 + 2x + 5)v1 + (5x^3 + 2x^2 + 3x + 1)v2 + (x^3 + 4x^2 + 2x + 6)v3";

/// Builds the worked example, prints its data and checks every expected value.
pub fn example1_report() -> Outcome {
    let code = example1();
    let mut out = String::new();
    let mut diverged = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            diverged.push(what.to_owned());
        }
    };

    let ell = code.ell();
    let line = format!(
        "ell = ({})v1 + ({})v2 + ({})v3",
        ell.component(1),
        ell.component(2),
        ell.component(3)
    );
    let _ = writeln!(out, "{line}");
    check(line == EXAMPLE1_DECOMPOSITION, "ell decomposition");

    let gs = natural_matrices(&code);
    out.push('\n');
    out.push_str(&matrices_text(&gs, |_| String::new()));
    for (i, g) in gs.iter().enumerate() {
        let rows: Vec<Vec<i64>> = EXAMPLE1_MATRICES[i]
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        check(*g == FqMatrix::from_rows(code.ctx(), 10, &rows), &format!("matrix G{}", i + 1));
    }

    out.push('\n');
    for (i, g) in gs.iter().enumerate() {
        let d = min_distance(g, DEFAULT_ENUMERATION_CAP).ok().flatten();
        let d_text = d.map_or("-".to_owned(), |d| d.to_string());
        let _ = writeln!(out, "v{} [{},{},{d_text}]", i + 1, g.ncols(), g.rank());
        check(g.ncols() == 10 && g.rank() == 5 && d == Some(5), &format!("parameters of P_v{}(C)", i + 1));
    }

    match code_dimension(&code) {
        Ok(d) => {
            let _ = writeln!(out, "\ndim C = {d}");
            check(d == 15, "dimension");
        }
        Err(e) => check(false, &format!("dimension ({e})")),
    }
    match code_counts(&code) {
        Ok(c) => {
            let _ = writeln!(
                out,
                "|C| = 7^{}  |C_m| = 7^{}  |C_n| = 7^{}  |(C^perp)_m| = 7^{}  |(C^perp)_n| = 7^{}",
                c.card_c, c.card_cm, c.card_cn, c.card_dual_m, c.card_dual_n
            );
            check(c.card_cn == 12, "|C_n|");
        }
        Err(e) => check(false, &format!("cardinalities ({e})")),
    }

    match (dual_code(&code, Method::Formula), dual_code(&code, Method::Nullspace)) {
        (Ok(f), Ok(n)) => {
            let _ = write!(out, "\n# dual (formula)\n{}", write_spec(&f.code));
            let verdict = if f.code == n.code { "EQUAL" } else { "DIFFER" };
            let _ = writeln!(out, "dual methods: {verdict}");
            check(f.code == n.code, "dual methods");
        }
        (Err(e), _) | (_, Err(e)) => check(false, &format!("dual ({e})")),
    }

    if diverged.is_empty() {
        Outcome::ok(out)
    } else {
        let err = format!("divergent: {}\n", diverged.join(", "));
        Outcome::fail(EXIT_FAILURE, out, err)
    }
}
