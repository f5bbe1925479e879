//! Seeded random corpus and the property suites run over it.
//!
//! Every check returns `Err(message)` on failure so the first counterexample
//! can be reported together with the code that produced it.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{circ, lcm, CodeSpec, Codeword};
use crate::dual::{dual_code, dual_with_rho_form, verify_duality, Method, RhoForm};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::matrix::counts::{card_product_form, card_sum_form, code_counts, code_dimension, dimension_formula};
use crate::matrix::generator::{natural_matrices, standardize_code};
use crate::matrix::{FqMatrix, RowSpace};
use crate::poly::Poly;
use crate::ring::RElem;
use crate::rpoly::RPoly;

/// Codes whose size is at most this are also checked by full enumeration.
pub const SMALL_CODE: u64 = 20_000;

#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub cases: usize,
    pub seed: u64,
    pub qset: Vec<u64>,
    pub max_m: usize,
    pub max_n: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            cases: 200,
            seed: 1,
            qset: vec![3, 5, 7],
            max_m: 8,
            max_n: 8,
        }
    }
}

pub fn random_poly(rng: &mut impl Rng, ctx: FieldCtx, len: usize) -> Poly {
    let coeffs: Vec<i64> = (0..len).map(|_| rng.random_range(0..ctx.p() as i64)).collect();
    Poly::new(ctx, &coeffs)
}

/// A random monic divisor of `x^k - 1`, including both trivial ones.
pub fn random_divisor(rng: &mut impl Rng, ctx: FieldCtx, k: usize) -> Poly {
    let xk1 = Poly::x_pow_minus_one(ctx, k);
    match rng.random_range(0..6) {
        0 => Poly::one(ctx),
        1 => xk1,
        _ => {
            let mut d = xk1.gcd(&random_poly(rng, ctx, k)).expect("x^k - 1 != 0");
            if rng.random_bool(0.5) {
                let e = xk1.gcd(&random_poly(rng, ctx, k)).expect("x^k - 1 != 0");
                let prod = &d * &e;
                if prod.divides(&xk1) {
                    d = prod;
                }
            }
            d
        }
    }
}

/// A random valid code: random divisors for `iota` and `theta`, and `ell` a
/// random multiple of `iota / gcd(iota, (x^n - 1)/theta)` (or zero).
pub fn random_code(rng: &mut impl Rng, ctx: FieldCtx, m: usize, n: usize) -> CodeSpec {
    let xn1 = Poly::x_pow_minus_one(ctx, n);
    let mut iotas = Vec::new();
    let mut ells = Vec::new();
    let mut thetas = Vec::new();
    for _ in 0..3 {
        let iota = random_divisor(rng, ctx, m);
        let theta = random_divisor(rng, ctx, n);
        let ell = if rng.random_range(0..5) == 0 {
            Poly::zero(ctx)
        } else {
            let cof = xn1.div_exact(&theta).expect("divisor");
            let base = iota.div_exact(&iota.gcd(&cof).expect("nonzero")).expect("divisor");
            (&base * &random_poly(rng, ctx, m)).rem(&iota).expect("nonzero")
        };
        // an arbitrary unit multiple of theta; normalization rescales ell
        let unit = rng.random_range(1..ctx.p());
        iotas.push(iota);
        ells.push(ell.scale(unit));
        thetas.push(theta.scale(unit));
    }
    let arr = |v: Vec<Poly>| -> [Poly; 3] { v.try_into().expect("three components") };
    CodeSpec::new(
        ctx,
        m,
        n,
        RPoly::from_components(arr(iotas)),
        RPoly::from_components(arr(ells)),
        RPoly::from_components(arr(thetas)),
    )
    .expect("random generators satisfy the structural conditions")
}

/// Deterministic corpus: `q` cycles through `qset`, `m` and `n` are uniform.
pub fn corpus(cfg: &CorpusConfig) -> Result<Vec<CodeSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ctxs = cfg
        .qset
        .iter()
        .map(|&q| FieldCtx::new(q))
        .collect::<Result<Vec<_>>>()?;
    if ctxs.is_empty() {
        return Err(Error::Dimension("qset is empty".into()));
    }
    Ok((0..cfg.cases)
        .map(|k| {
            let ctx = ctxs[k % ctxs.len()];
            let m = rng.random_range(1..=cfg.max_m);
            let n = rng.random_range(1..=cfg.max_n);
            random_code(&mut rng, ctx, m, n)
        })
        .collect())
}

/// A uniformly random codeword of `code`.
pub fn random_codeword(rng: &mut impl Rng, code: &CodeSpec) -> Codeword {
    let ctx = code.ctx();
    let vecs = code.generator_matrices().map(|g| {
        let mut v = vec![0u32; g.ncols()];
        for r in g.row_iter() {
            let c = ctx.elem(rng.random_range(0..ctx.p() as i64));
            for (x, &y) in v.iter_mut().zip(r) {
                *x = (ctx.elem(*x as i64) + c * ctx.elem(y as i64)).value();
            }
        }
        v
    });
    Codeword::from_component_vectors(ctx, code.m(), [&vecs[0], &vecs[1], &vecs[2]])
}

/// A uniformly random vector of `R^m x R^n`.
pub fn random_word(rng: &mut impl Rng, ctx: FieldCtx, m: usize, n: usize) -> Codeword {
    let mut elem = || {
        RElem::from_components([0; 3].map(|_| ctx.elem(rng.random_range(0..ctx.p() as i64))))
    };
    let left = (0..m).map(|_| elem()).collect();
    let right = (0..n).map(|_| elem()).collect();
    Codeword::new(left, right)
}

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_enough(code: &CodeSpec) -> bool {
    (code.ctx().p() as f64).powi(code.measured_dimension() as i32) <= SMALL_CODE as f64
}

pub fn check_dimension(code: &CodeSpec) -> Check {
    code_dimension(code).map(|_| ()).map_err(|e| e.to_string())
}

pub fn check_counts(code: &CodeSpec) -> Check {
    code_counts(code).map(|_| ()).map_err(|e| e.to_string())
}

/// `|C|` equals the product of the component sizes, and not their sum.
/// Small codes are counted by enumeration; for larger ones the product
/// exponent is compared with the dimension formula and the values are
/// compared whenever they fit in a `u128`.
pub fn check_card_product(code: &CodeSpec) -> Check {
    let product = card_product_form(code);
    let sum = card_sum_form(code);
    if small_enough(code) {
        let measured = code.enumerate(SMALL_CODE).map_err(|e| e.to_string())?.count() as u128;
        ensure(product == Some(measured), || format!("product form {product:?} != |C| = {measured}"))?;
        return ensure(sum != Some(measured), || format!("sum form unexpectedly equals |C| = {measured}"));
    }
    let ranks: usize = code.generator_matrices().iter().map(FqMatrix::rank).sum();
    let expect = dimension_formula(code);
    ensure(ranks == expect, || format!("product exponent {ranks} != dimension formula {expect}"))?;
    if let (Some(p), Some(s)) = (product, sum) {
        ensure(p != s, || format!("sum form unexpectedly equals product form {p}"))?;
    }
    Ok(())
}

/// The closed-form dual equals the nullspace dual and passes [`verify_duality`].
pub fn check_dual_methods(code: &CodeSpec) -> Check {
    check_dual_against(code, |c| dual_code(c, Method::Formula).map(|d| d.code))
}

/// As [`check_dual_methods`] with an arbitrary closed-form dual.
pub fn check_dual_against(code: &CodeSpec, formula: impl Fn(&CodeSpec) -> Result<CodeSpec>) -> Check {
    let f = formula(code).map_err(|e| format!("formula dual: {e}"))?;
    let n = dual_code(code, Method::Nullspace).map_err(|e| format!("nullspace dual: {e}"))?.code;
    ensure(f == n, || format!("formula dual\n{f}differs from nullspace dual\n{n}"))?;
    ensure(f.same_code(&n), || "canonical forms agree but row spaces differ".into())?;
    let report = verify_duality(code, &f);
    ensure(report.passed(), || match &report.witness {
        Some((d, c, ip)) => format!("<{d}, {c}> = {ip}"),
        None => format!(
            "dim C + dim D = {} + {} != {}",
            report.dim_c, report.dim_d, report.ambient
        ),
    })
}

pub fn check_double_dual(code: &CodeSpec) -> Check {
    let d = dual_code(code, Method::Formula).map_err(|e| e.to_string())?.code;
    let dd = dual_code(&d, Method::Formula).map_err(|e| e.to_string())?.code;
    ensure(&dd == code, || format!("double dual\n{dd}differs from the code"))
}

/// `deg iota_bar_i = m - deg g_i` and `deg theta_bar_i = n - deg iota_i - deg theta_i + deg g_i`.
pub fn check_dual_degrees(code: &CodeSpec) -> Check {
    let d = dual_code(code, Method::Formula).map_err(|e| e.to_string())?;
    let g = code.iota_ell_gcd();
    for i in 1..=3 {
        let dg = g.component(i).degree().expect("nonzero");
        let di = code.iota().component(i).degree().expect("nonzero");
        let dt = code.theta().component(i).degree().expect("nonzero");
        let got_i = d.iota_bar().component(i).degree().expect("nonzero");
        let got_t = d.theta_bar().component(i).degree().expect("nonzero");
        ensure(got_i == code.m() - dg, || {
            format!("component {i}: deg iota_bar = {got_i}, expected {}", code.m() - dg)
        })?;
        let expect_t = code.n() + dg - di - dt;
        ensure(got_t == expect_t, || {
            format!("component {i}: deg theta_bar = {got_t}, expected {expect_t}")
        })?;
    }
    Ok(())
}

/// Block shape, `G H^t = 0` and `rank G + rank H = m + n` per component.
pub fn check_standardized(code: &CodeSpec) -> Check {
    let forms = standardize_code(code).map_err(|e| e.to_string())?;
    let len = code.m() + code.n();
    for (i, (f, g)) in forms.iter().zip(natural_matrices(code)).enumerate() {
        f.check_shape().map_err(|e| format!("component {}: {e}", i + 1))?;
        let h = f.parity_check();
        ensure(g.mul(&h.transpose()).is_zero(), || format!("component {}: G H^t != 0", i + 1))?;
        let hp = f.parity_check_permuted();
        ensure(f.matrix.mul(&hp.transpose()).is_zero(), || {
            format!("component {}: permuted G H^t != 0", i + 1)
        })?;
        ensure(g.rank() + h.rank() == len, || format!("component {}: rank G + rank H != m + n", i + 1))?;
    }
    Ok(())
}

/// `iota_i | ((x^n - 1)/theta_i) gcd(iota_i, ell_i)`.
pub fn check_kernel_gcd(code: &CodeSpec) -> Check {
    let xn1 = Poly::x_pow_minus_one(code.ctx(), code.n());
    let g = code.iota_ell_gcd();
    for i in 1..=3 {
        let cof = xn1.div_exact(code.theta().component(i)).map_err(|e| e.to_string())?;
        ensure(code.iota().component(i).divides(&(&cof * g.component(i))), || {
            format!("component {i}: iota does not divide (x^n-1)/theta * gcd(iota, ell)")
        })?;
    }
    Ok(())
}

/// Every shift of a nullspace basis word lies in the dual again.
pub fn check_dual_shift_closed(code: &CodeSpec) -> Check {
    let dual = dual_code(code, Method::Nullspace).map_err(|e| e.to_string())?.code;
    let gs = code.generator_matrices();
    for w in crate::dual::nullspace_words(code) {
        let s = w.shift();
        for (i, g) in gs.iter().enumerate() {
            let v = s.component_vector(i + 1);
            ensure(g.mul(&FqMatrix::from_residue_rows(code.ctx(), v.len(), vec![v]).transpose()).is_zero(), || {
                format!("shift of dual word {w} is not orthogonal to C")
            })?;
        }
        ensure(dual.contains(&s).unwrap_or(false), || format!("shift of dual word {w} left the dual"))?;
    }
    Ok(())
}

/// `circ(h, g) = 0` for all generators `h` of the closed-form dual, `g` of `C`.
pub fn check_circ_orthogonality(code: &CodeSpec) -> Check {
    let d = dual_code(code, Method::Formula).map_err(|e| e.to_string())?.code;
    for h in d.generators() {
        for g in code.generators() {
            let r = circ(&h, &g);
            ensure(r.is_zero(), || format!("circ({h}, {g}) = {:?}", r.to_text()))?;
        }
    }
    Ok(())
}

/// A separable code has the separable dual `<((x^m-1)/iota* | 0), (0 | (x^n-1)/theta*)>`.
pub fn check_separable_dual(code: &CodeSpec) -> Check {
    if !code.is_separable() {
        return Ok(());
    }
    let ctx = code.ctx();
    let d = dual_code(code, Method::Formula).map_err(|e| e.to_string())?.code;
    ensure(d.is_separable(), || "dual of a separable code is not separable".into())?;
    let xm1 = RPoly::splat(Poly::x_pow_minus_one(ctx, code.m()));
    let xn1 = RPoly::splat(Poly::x_pow_minus_one(ctx, code.n()));
    let expect = CodeSpec::new(
        ctx,
        code.m(),
        code.n(),
        code.iota().reciprocal().quotient_of(&xm1).expect("divisor"),
        RPoly::zero(ctx),
        code.theta().reciprocal().quotient_of(&xn1).expect("divisor"),
    )
    .map_err(|e| e.to_string())?;
    ensure(d == expect, || format!("separable dual\n{d}expected\n{expect}"))
}

pub fn check_canonical_round_trip(code: &CodeSpec) -> Check {
    let back = CodeSpec::canonicalize(code.ctx(), code.m(), code.n(), &code.generators())
        .map_err(|e| e.to_string())?;
    ensure(&back == code, || format!("canonicalized generators give\n{back}"))
}

/// Every codeword's shift is a codeword (all codewords when small, a
/// generating set otherwise), and the codeword set projects onto the row
/// spaces of `G_i`.
pub fn check_shift_closure(code: &CodeSpec) -> Check {
    let words: Vec<Codeword> = if small_enough(code) {
        code.enumerate(SMALL_CODE).map_err(|e| e.to_string())?.collect()
    } else {
        let mut v = Vec::new();
        for g in code.generators() {
            let mut s = g;
            for _ in 0..code.l() {
                v.push(s.clone());
                s = s.shift();
            }
        }
        v
    };
    for w in &words {
        let s = w.shift();
        ensure(code.contains(&s).unwrap_or(false), || format!("shift of {w} is not a codeword"))?;
    }
    if small_enough(code) {
        for (i, g) in code.generator_matrices().iter().enumerate() {
            let proj: HashSet<Vec<u32>> = words.iter().map(|w| w.component_vector(i + 1)).collect();
            let expect = (code.ctx().p() as usize).pow(g.rank() as u32);
            ensure(proj.len() == expect, || {
                format!("component {}: {} projected words, expected {expect}", i + 1, proj.len())
            })?;
        }
    }
    Ok(())
}

pub type CodeCheck = fn(&CodeSpec) -> Check;

/// The per-code suites, in report order.
pub const CODE_CHECKS: &[(&str, CodeCheck)] = &[
    ("dimension formula vs rank", check_dimension),
    ("cardinality exponents vs ranks", check_counts),
    ("|C| product form (sum form fails)", check_card_product),
    ("kernel gcd divisibility", check_kernel_gcd),
    ("canonical round trip", check_canonical_round_trip),
    ("shift closure", check_shift_closure),
    ("dual: formula == nullspace", check_dual_methods),
    ("dual: double dual", check_double_dual),
    ("dual: degree formulas", check_dual_degrees),
    ("dual: circ orthogonality", check_circ_orthogonality),
    ("dual: nullspace dual shift-closed", check_dual_shift_closed),
    ("dual: separable codes", check_separable_dual),
    ("standardized form and parity check", check_standardized),
];

#[derive(Clone, Debug)]
pub struct Failure {
    pub message: String,
    pub code: Option<CodeSpec>,
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub failure: Option<Failure>,
}

impl SuiteOutcome {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_owned(),
            passed: 0,
            total: 0,
            failure: None,
        }
    }

    fn record(&mut self, result: Check, code: Option<&CodeSpec>) {
        self.total += 1;
        match result {
            Ok(()) => self.passed += 1,
            Err(message) => {
                if self.failure.is_none() {
                    self.failure = Some(Failure {
                        message,
                        code: code.cloned(),
                    });
                }
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

/// Runs one per-code check over a corpus.
pub fn run_code_check(name: &str, check: impl Fn(&CodeSpec) -> Check, codes: &[CodeSpec]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(name);
    for c in codes {
        out.record(check(c), Some(c));
    }
    out
}

/// `circ(c, d) = 0` iff `c` is orthogonal to every shift of `d`, and the
/// coefficient of `x^{l-1-s}` is `<c, d rotated left by s>`. Half of the pairs
/// take `c` from the dual of the code generated by `d`, so both sides of the
/// equivalence occur.
pub fn suite_circ(rng: &mut impl Rng, instances: usize, qset: &[u64]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("circ vanishes iff all shifts are orthogonal");
    for k in 0..instances {
        let ctx = FieldCtx::new(qset[k % qset.len()]).expect("prime");
        let (m, n) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let d = random_word(rng, ctx, m, n);
        let c = if k % 2 == 0 {
            random_word(rng, ctx, m, n)
        } else {
            let gen = CodeSpec::canonicalize(ctx, m, n, std::slice::from_ref(&d)).expect("valid");
            let dual = dual_code(&gen, Method::Nullspace).expect("dual").code;
            random_codeword(rng, &dual)
        };
        out.record(check_circ_pair(&c, &d), None);
    }
    out
}

pub fn check_circ_pair(c: &Codeword, d: &Codeword) -> Check {
    let l = lcm(c.m(), c.n());
    let r = circ(c, d);
    let mut all_zero = true;
    for s in 0..l {
        // rotating left by s is T^{l-s}
        let ip = c.inner(&d.shift_by(l - s));
        all_zero &= ip.is_zero();
        for i in 1..=3 {
            ensure(r.component(i).coeff(l - 1 - s) == ip.project(i), || {
                format!("coefficient of x^{} in component {i} is not <c, d_({s})> for c = {c}, d = {d}", l - 1 - s)
            })?;
        }
    }
    ensure(r.is_zero() == all_zero, || format!("circ({c}, {d}) = 0 is {}", r.is_zero()))
}

/// If `circ(c, d) = 0` and the right block of `c` or `d` vanishes, then
/// `c^1 (d^1)* ≡ 0 mod x^m - 1`; symmetrically for vanishing left blocks.
/// Returns the suite and the number of instances where the hypothesis held.
pub fn suite_block_vanishing(rng: &mut impl Rng, instances: usize, qset: &[u64]) -> (SuiteOutcome, usize) {
    let mut out = SuiteOutcome::new("vanishing block implies other-block product vanishes");
    let mut hypotheses = 0;
    for k in 0..instances {
        let ctx = FieldCtx::new(qset[k % qset.len()]).expect("prime");
        let (m, n) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let kill_right = k % 2 == 0;
        let mut c = random_word(rng, ctx, m, n);
        let mut d = random_word(rng, ctx, m, n);
        let zero = Codeword::zero(ctx, m, n);
        let keep = if kill_right { m } else { n };
        if rng.random_bool(0.5) {
            c = if kill_right { Codeword::new(c.left().to_vec(), zero.right().to_vec()) } else { Codeword::new(zero.left().to_vec(), c.right().to_vec()) };
        } else {
            d = if kill_right { Codeword::new(d.left().to_vec(), zero.right().to_vec()) } else { Codeword::new(zero.left().to_vec(), d.right().to_vec()) };
        }
        // Usually pick c from the annihilator so that the hypothesis holds.
        if rng.random_range(0..4) != 0 {
            let modulus = Poly::x_pow_minus_one(ctx, keep);
            let comps = [1, 2, 3].map(|i| {
                let dp = if kill_right { d.left_poly(i) } else { d.right_poly(i) };
                let ann = if dp.is_zero() {
                    Poly::one(ctx)
                } else {
                    modulus.div_exact(&modulus.gcd(&dp.reciprocal()).expect("nonzero")).expect("divisor")
                };
                (&ann * &random_poly(rng, ctx, keep)).rem(&modulus).expect("nonzero")
            });
            let blocks = RPoly::from_components(comps);
            let other = RPoly::zero(ctx);
            let cnew = if kill_right {
                Codeword::from_polys(m, n, &blocks, &other)
            } else {
                Codeword::from_polys(m, n, &other, &blocks)
            };
            c = cnew;
        }
        if !circ(&c, &d).is_zero() {
            out.record(Ok(()), None);
            continue;
        }
        hypotheses += 1;
        let modulus = Poly::x_pow_minus_one(ctx, keep);
        let res = (1..=3).try_for_each(|i| {
            let (cp, dp) = if kill_right {
                (c.left_poly(i), d.left_poly(i))
            } else {
                (c.right_poly(i), d.right_poly(i))
            };
            let prod = (&cp * &dp.reciprocal()).rem(&modulus).expect("nonzero");
            ensure(prod.is_zero(), || format!("c = {c}, d = {d}: product {prod} in component {i}"))
        });
        out.record(res, None);
    }
    (out, hypotheses)
}

/// Standard-basis coefficients `(a, b, c)` of each power of `x`.
fn std_coeffs(p: &RPoly) -> Vec<[u32; 3]> {
    p.coefficients()
        .iter()
        .map(|r| {
            let (a, b, c) = r.to_standard();
            [a.value(), b.value(), c.value()]
        })
        .collect()
}

/// `(a + bv + cv^2)(d + ev + fv^2)` using only `v^3 = v`.
fn std_mul(ctx: FieldCtx, x: [u32; 3], y: [u32; 3]) -> [u32; 3] {
    let e = |v: u32| ctx.elem(v as i64);
    let (a, b, c) = (e(x[0]), e(x[1]), e(x[2]));
    let (d, f1, f2) = (e(y[0]), e(y[1]), e(y[2]));
    [
        (a * d).value(),
        (a * f1 + b * d + b * f2 + c * f1).value(),
        (a * f2 + b * f1 + c * d + c * f2).value(),
    ]
}

/// Product of standard-basis polynomials over `R`, as a flat `F_q` vector of
/// length `3 * len`.
fn std_poly_mul(ctx: FieldCtx, a: &[[u32; 3]], b: &[[u32; 3]], len: usize) -> Vec<u32> {
    let mut out = vec![0u32; 3 * len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let p = std_mul(ctx, *x, *y);
            for t in 0..3 {
                let slot = &mut out[3 * (i + j) + t];
                *slot = ctx.add(*slot, p[t]);
            }
        }
    }
    out
}

/// Whether `target` lies in `sum_k multiples_k * R[x]_{<= deg}`, decided by
/// linear algebra on standard-basis coefficients (no idempotents involved).
fn in_ideal(ctx: FieldCtx, gens: &[&RPoly], target: &RPoly, deg: usize) -> bool {
    let gens: Vec<Vec<[u32; 3]>> = gens.iter().map(|g| std_coeffs(g)).collect();
    let tgt = std_coeffs(target);
    let len = gens.iter().map(Vec::len).max().unwrap_or(0) + deg + 1;
    let len = len.max(tgt.len());
    let mut rows = Vec::new();
    for g in &gens {
        for j in 0..=deg {
            for unit in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
                let mut e = vec![[0u32; 3]; j + 1];
                e[j] = unit;
                rows.push(std_poly_mul(ctx, &e, g, len));
            }
        }
    }
    let mut t = vec![0u32; 3 * len];
    for (j, c) in tgt.iter().enumerate() {
        t[3 * j..3 * j + 3].copy_from_slice(c);
    }
    if rows.is_empty() {
        return t.iter().all(|&v| v == 0);
    }
    RowSpace::new(&FqMatrix::from_residue_rows(ctx, 3 * len, rows)).contains(&t)
}

fn random_rpoly(rng: &mut impl Rng, ctx: FieldCtx, max_len: usize, nonzero: bool) -> RPoly {
    let comps = [0; 3].map(|_| loop {
        let len = rng.random_range(0..=max_len);
        let p = random_poly(rng, ctx, len);
        if !(nonzero && p.is_zero()) {
            break p;
        }
    });
    RPoly::from_components(comps)
}

/// Componentwise divisibility agrees with divisibility in `R[x]`.
pub fn suite_divisibility(rng: &mut impl Rng, instances: usize, qset: &[u64]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("divisibility is componentwise");
    for k in 0..instances {
        let ctx = FieldCtx::new(qset[k % qset.len()]).expect("prime");
        let a = random_rpoly(rng, ctx, 4, false);
        let b = if k % 2 == 0 {
            &random_rpoly(rng, ctx, 3, false) * &a
        } else {
            random_rpoly(rng, ctx, 6, false)
        };
        let deg = b.coefficients().len();
        let lhs = a.divides(&b);
        let rhs = in_ideal(ctx, &[&a], &b, deg);
        out.record(
            ensure(lhs == rhs, || format!("a = {:?}, b = {:?}: componentwise {lhs}, in R[x] {rhs}", a.to_text(), b.to_text())),
            None,
        );
    }
    out
}

/// The componentwise gcd divides both inputs and generates the same ideal.
pub fn suite_gcd(rng: &mut impl Rng, instances: usize, qset: &[u64]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("gcd is componentwise");
    for k in 0..instances {
        let ctx = FieldCtx::new(qset[k % qset.len()]).expect("prime");
        let common = random_rpoly(rng, ctx, 3, true);
        let a = &random_rpoly(rng, ctx, 4, true) * &common;
        let b = &random_rpoly(rng, ctx, 4, false) * &common;
        let g = a.gcd(&b).expect("a is nonzero");
        let deg = a.coefficients().len() + b.coefficients().len();
        let res = ensure(in_ideal(ctx, &[&g], &a, deg) && in_ideal(ctx, &[&g], &b, deg), || {
            format!("gcd {:?} does not divide a, b", g.to_text())
        })
        .and_then(|_| {
            ensure(in_ideal(ctx, &[&a, &b], &g, deg), || {
                format!("gcd {:?} is not in the ideal <a, b>", g.to_text())
            })
        })
        .and_then(|_| {
            ensure(g.components().iter().all(|c| c.leading() == Some(1)), || "gcd not monic".into())
        });
        out.record(res, None);
    }
    out
}

/// `(ab)* = a* b*`.
pub fn suite_reciprocal_product(rng: &mut impl Rng, instances: usize, qset: &[u64]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("reciprocal of a product");
    for k in 0..instances {
        let ctx = FieldCtx::new(qset[k % qset.len()]).expect("prime");
        let a = random_rpoly(rng, ctx, 6, true);
        let b = random_rpoly(rng, ctx, 6, true);
        let lhs = (&a * &b).reciprocal();
        // oracle: reverse the coefficient list of each product by hand
        let rhs = &a.reciprocal() * &b.reciprocal();
        let manual = (&a * &b).map(|p| {
            let mut c: Vec<i64> = p.residues().iter().map(|&v| v as i64).collect();
            c.reverse();
            Poly::new(ctx, &c).monic()
        });
        out.record(
            ensure(lhs == rhs && lhs == manual, || format!("a = {:?}, b = {:?}", a.to_text(), b.to_text())),
            None,
        );
    }
    out
}

/// `(x^m - 1) omega_n(x^m) = x^{mn} - 1`.
pub fn suite_omega(rng: &mut impl Rng, instances: usize, qset: &[u64]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("(x^m - 1) omega_n(x^m) = x^(mn) - 1");
    for k in 0..instances {
        let ctx = FieldCtx::new(qset[k % qset.len()]).expect("prime");
        let (m, n) = (rng.random_range(1..=12), rng.random_range(1..=12));
        let lhs = &Poly::x_pow_minus_one(ctx, m) * &Poly::omega(ctx, n, m);
        out.record(
            ensure(lhs == Poly::x_pow_minus_one(ctx, m * n), || format!("m = {m}, n = {n}")),
            None,
        );
    }
    out
}

/// `r** = r` for monic `r` with nonzero constant term.
pub fn suite_double_reciprocal(rng: &mut impl Rng, instances: usize, qset: &[u64]) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("r** = r");
    for k in 0..instances {
        let ctx = FieldCtx::new(qset[k % qset.len()]).expect("prime");
        let comps = [0; 3].map(|_| {
            let len = rng.random_range(1..=7);
            let mut c: Vec<i64> = (0..len).map(|_| rng.random_range(0..ctx.p() as i64)).collect();
            c[0] = rng.random_range(1..ctx.p() as i64);
            c.push(1);
            Poly::new(ctx, &c)
        });
        let r = RPoly::from_components(comps);
        out.record(
            ensure(r.reciprocal().reciprocal() == r, || format!("r = {:?}", r.to_text())),
            None,
        );
    }
    out
}

/// Canonicalizing random words gives the `F_q`-span of all `v_i T^s w`,
/// computed directly.
pub fn suite_canonical_closure(rng: &mut impl Rng, instances: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("canonicalization equals brute-force closure");
    let ctx = FieldCtx::new(3).expect("prime");
    for _ in 0..instances {
        let (m, n) = (rng.random_range(1..=4), rng.random_range(1..=4));
        let count = rng.random_range(1..=3);
        let words: Vec<Codeword> = (0..count)
            .map(|_| {
                let w = random_word(rng, ctx, m, n);
                // thin out components so codes of every size occur
                let mask = RElem::from_components([0; 3].map(|_| ctx.elem(rng.random_range(0..2))));
                w.scale(mask)
            })
            .collect();
        out.record(check_closure(ctx, m, n, &words), None);
    }
    out
}

pub fn check_closure(ctx: FieldCtx, m: usize, n: usize, words: &[Codeword]) -> Check {
    let code = CodeSpec::canonicalize(ctx, m, n, words).map_err(|e| e.to_string())?;
    let l = lcm(m, n);
    // flat vectors: component 1, then 2, then 3
    let flat = |w: &Codeword| -> Vec<u32> { (1..=3).flat_map(|i| w.component_vector(i)).collect() };
    let mut rows = Vec::new();
    for w in words {
        let mut s = w.clone();
        for _ in 0..l {
            for i in 1..=3 {
                rows.push(flat(&s.scale(RElem::idempotent(ctx, i))));
            }
            s = s.shift();
        }
    }
    let closure = FqMatrix::from_residue_rows(ctx, 3 * (m + n), rows);
    let mut code_rows = Vec::new();
    let len = m + n;
    for (i, g) in code.generator_matrices().iter().enumerate() {
        for r in g.row_iter() {
            let mut v = vec![0u32; 3 * len];
            v[i * len..(i + 1) * len].copy_from_slice(r);
            code_rows.push(v);
        }
    }
    let code_mat = FqMatrix::from_residue_rows(ctx, 3 * len, code_rows);
    ensure(RowSpace::same_span(&closure, &code_mat), || {
        format!("canonical code\n{code}does not span the closure of the input words")
    })?;
    if small_enough(&code) {
        let enumerated: HashSet<Vec<u32>> = code
            .enumerate(SMALL_CODE)
            .map_err(|e| e.to_string())?
            .map(|w| flat(&w))
            .collect();
        let basis = RowSpace::new(&closure).basis().clone();
        let q = ctx.p() as u64;
        let mut span = HashSet::new();
        for idx in 0..q.pow(basis.nrows() as u32) {
            let mut v = vec![0u32; 3 * len];
            let mut t = idx;
            for r in basis.row_iter() {
                let c = (t % q) as u32;
                t /= q;
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = ctx.add(*x, ctx.mul(c, y));
                }
            }
            span.insert(v);
        }
        ensure(span == enumerated, || "enumerated code differs from the closure set".into())?;
    }
    Ok(())
}

/// How each way of writing `rho` fares against the nullspace dual.
#[derive(Clone, Debug)]
pub struct RhoAudit {
    pub form: RhoForm,
    pub matched: usize,
    pub mismatched: usize,
    /// The form could not be evaluated (non-invertible factor) or gave an invalid triple.
    pub undefined: usize,
    /// Codes where `rho` is forced to zero in every component.
    pub trivial: usize,
}

pub fn audit_rho_forms(codes: &[CodeSpec]) -> Vec<RhoAudit> {
    RhoForm::ALL
        .iter()
        .map(|&form| {
            let mut a = RhoAudit {
                form,
                matched: 0,
                mismatched: 0,
                undefined: 0,
                trivial: 0,
            };
            for c in codes {
                let forced_zero = (1..=3).all(|i| {
                    let io = c.iota().component(i);
                    let g = io.gcd(c.ell().component(i)).expect("nonzero");
                    c.ell().component(i).is_zero() || io.div_exact(&g).expect("divisor").is_constant()
                });
                if forced_zero {
                    a.trivial += 1;
                    continue;
                }
                let reference = dual_code(c, Method::Nullspace).expect("nullspace dual").code;
                match dual_with_rho_form(c, form) {
                    Ok(d) if d == reference => a.matched += 1,
                    Ok(_) => a.mismatched += 1,
                    Err(_) => a.undefined += 1,
                }
            }
            a
        })
        .collect()
}

/// Everything `dcc verify` runs.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suites: Vec<SuiteOutcome>,
    pub audit: Vec<RhoAudit>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::ok)
    }
}

pub fn run_all(cfg: &CorpusConfig) -> Result<VerifyReport> {
    run_all_with(cfg, RhoForm::Congruence)
}

/// As [`run_all`], with the closed-form dual built from the given `rho` form.
/// Any form other than [`RhoForm::Congruence`] is a deliberately broken dual,
/// used to confirm that the suites catch it.
pub fn run_all_with(cfg: &CorpusConfig, form: RhoForm) -> Result<VerifyReport> {
    let codes = corpus(cfg)?;
    let mut suites: Vec<SuiteOutcome> = CODE_CHECKS
        .iter()
        .map(|&(name, check)| {
            if form != RhoForm::Congruence && name == "dual: formula == nullspace" {
                run_code_check(name, |c| check_dual_against(c, |c| dual_with_rho_form(c, form)), &codes)
            } else {
                run_code_check(name, check, &codes)
            }
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9_7f4a_7c15);
    let per = cfg.cases.max(1) * 5 / 2;
    let instances = if cfg.cases == 0 { 0 } else { per.max(500) };
    suites.push(suite_circ(&mut rng, instances, &cfg.qset));
    suites.push(suite_block_vanishing(&mut rng, instances, &cfg.qset).0);
    suites.push(suite_divisibility(&mut rng, instances, &cfg.qset));
    suites.push(suite_gcd(&mut rng, instances, &cfg.qset));
    suites.push(suite_reciprocal_product(&mut rng, instances, &cfg.qset));
    suites.push(suite_omega(&mut rng, instances, &cfg.qset));
    suites.push(suite_double_reciprocal(&mut rng, instances, &cfg.qset));
    suites.push(suite_canonical_closure(&mut rng, instances / 5));
    Ok(VerifyReport {
        suites,
        audit: audit_rho_forms(&codes),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic() {
        let cfg = CorpusConfig {
            cases: 12,
            ..Default::default()
        };
        assert_eq!(corpus(&cfg).unwrap(), corpus(&cfg).unwrap());
        let other = CorpusConfig { seed: 2, ..cfg.clone() };
        assert_ne!(corpus(&cfg).unwrap(), corpus(&other).unwrap());
    }

    #[test]
    fn empty_corpus_passes_vacuously() {
        let r = run_all(&CorpusConfig {
            cases: 0,
            ..Default::default()
        })
        .unwrap();
        assert!(r.ok());
        assert!(r.suites.iter().all(|s| s.total == 0));
    }

    #[test]
    fn perturbed_dual_is_caught() {
        let codes = corpus(&CorpusConfig {
            cases: 40,
            ..Default::default()
        })
        .unwrap();
        let caught = codes
            .iter()
            .find_map(|c| check_dual_against(c, |c| dual_with_rho_form(c, RhoForm::EllInverse)).err());
        assert!(caught.is_some());
    }

    #[test]
    fn ideal_oracle_sanity() {
        let ctx = FieldCtx::new(5).unwrap();
        let a = RPoly::splat(Poly::new(ctx, &[1, 1]));
        let b = RPoly::splat(Poly::new(ctx, &[4, 0, 1]));
        assert!(in_ideal(ctx, &[&a], &b, 2));
        assert!(!in_ideal(ctx, &[&b], &a, 2));
        // v1 divides v1 x but not x
        let v1 = RPoly::from_components([Poly::one(ctx), Poly::zero(ctx), Poly::zero(ctx)]);
        let x = Poly::monomial(ctx, 1, 1);
        let v1x = RPoly::from_components([x.clone(), Poly::zero(ctx), Poly::zero(ctx)]);
        assert!(in_ideal(ctx, &[&v1], &v1x, 2));
        assert!(!in_ideal(ctx, &[&v1], &RPoly::splat(x), 2));
    }
}
