//! Double cyclic codes over `R`.
//!
//! A code of length `(m, n)` is an `R[x]`-submodule of
//! `R[x]/(x^m - 1) x R[x]/(x^n - 1)`, and every such submodule has the form
//! `C = <(iota | 0), (ell | theta)>`. [`CodeSpec`] stores these generators in
//! canonical form, per component `i`:
//!
//! * `iota_i` is the monic generator of `{u : (u | 0) in C}` and divides `x^m - 1`
//!   (the zero ideal is represented by `x^m - 1` itself),
//! * `theta_i` is the monic generator of the right projection and divides `x^n - 1`,
//! * `ell_i` is reduced modulo `iota_i`, and `(ell_i | theta_i)` lies in `C`.
//!
//! The triple is then an invariant of the code, so two `CodeSpec`s compare
//! equal exactly when they describe the same set of codewords.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::matrix::generator::natural_matrices;
use crate::matrix::{FqMatrix, RowSpace};
use crate::poly::Poly;
use crate::ring::RElem;
use crate::rpoly::RPoly;

/// Default limit on the number of codewords an exhaustive operation may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

pub fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// `q^exponent` as a float, for reporting, and as an exact count when it fits.
pub(crate) fn check_cap(q: u32, exponent: usize, cap: u64) -> Result<u64> {
    let exact = (q as u64).checked_pow(exponent as u32);
    match exact {
        Some(count) if count <= cap => Ok(count),
        _ => Err(Error::TooLarge {
            exponent: exponent as u32,
            required: (q as f64).powi(exponent as i32),
            cap,
        }),
    }
}

/// One of the conditions checked when a generator triple is accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub component: usize,
    pub name: &'static str,
    pub holds: bool,
}

/// Outcome of checking the structural conditions on `(iota, ell, theta)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub conditions: Vec<Condition>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&Condition> {
        self.conditions.iter().find(|c| !c.holds)
    }
}

pub const COND_IOTA_DIVIDES: &str = "iota | x^m - 1";
pub const COND_THETA_DIVIDES: &str = "theta | x^n - 1";
pub const COND_ELL_REDUCED: &str = "deg ell < deg iota (after reduction mod iota)";
pub const COND_KERNEL: &str = "iota | (x^n - 1)/theta * ell";
pub const COND_KERNEL_GCD: &str = "iota | (x^n - 1)/theta * gcd(iota, ell)";

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CodeSpec {
    ctx: FieldCtx,
    m: usize,
    n: usize,
    iota: RPoly,
    ell: RPoly,
    theta: RPoly,
}

struct Normalized {
    iota: [Poly; 3],
    ell: [Poly; 3],
    theta: [Poly; 3],
    validation: Validation,
}

fn normalize(m: usize, n: usize, iota: &RPoly, ell: &RPoly, theta: &RPoly) -> Normalized {
    let ctx = iota.ctx();
    let xm1 = Poly::x_pow_minus_one(ctx, m);
    let xn1 = Poly::x_pow_minus_one(ctx, n);
    let mut conditions = Vec::new();
    let mut out_iota = Vec::new();
    let mut out_ell = Vec::new();
    let mut out_theta = Vec::new();
    for i in 1..=3 {
        let mut push = |name, holds| {
            conditions.push(Condition {
                component: i,
                name,
                holds,
            })
        };
        let io = match iota.component(i) {
            z if z.is_zero() => xm1.clone(),
            f => f.monic(),
        };
        let th_raw = match theta.component(i) {
            z if z.is_zero() => xn1.clone(),
            f => f.clone(),
        };
        let io_ok = io.divides(&xm1);
        let th_ok = th_raw.divides(&xn1);
        push(COND_IOTA_DIVIDES, io_ok);
        push(COND_THETA_DIVIDES, th_ok);

        // Scaling theta to monic scales the whole generator (ell | theta).
        let lc_inv = ctx
            .inv(th_raw.leading().expect("nonzero"))
            .expect("nonzero leading coefficient");
        let th = th_raw.scale(lc_inv);
        let mut el = ell.component(i).scale(lc_inv).rem(&xm1).expect("x^m - 1 != 0");

        if io_ok && th_ok {
            // Leading-term cancellation by multiples of iota, i.e. reduction mod iota.
            el = el.rem(&io).expect("iota != 0");
            push(COND_ELL_REDUCED, el.degree() < io.degree());
            let cof = xn1.div_exact(&th).expect("theta | x^n - 1");
            push(COND_KERNEL, io.divides(&(&cof * &el)));
            let g = io.gcd(&el).expect("iota != 0");
            push(COND_KERNEL_GCD, io.divides(&(&cof * &g)));
        }
        out_iota.push(io);
        out_ell.push(el);
        out_theta.push(th);
    }
    let arr = |v: Vec<Poly>| -> [Poly; 3] { v.try_into().expect("three components") };
    Normalized {
        iota: arr(out_iota),
        ell: arr(out_ell),
        theta: arr(out_theta),
        validation: Validation { conditions },
    }
}

impl CodeSpec {
    /// Validates and normalizes a generator triple.
    ///
    /// Zero components of `iota` / `theta` stand for `x^m - 1` / `x^n - 1`.
    /// `theta` is made monic (scaling `ell` by the same unit), `iota` is made
    /// monic and `ell` is reduced modulo `iota`. Fails with
    /// [`Error::InvalidGenerator`] naming the first violated condition.
    pub fn new(
        ctx: FieldCtx,
        m: usize,
        n: usize,
        iota: RPoly,
        ell: RPoly,
        theta: RPoly,
    ) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Dimension("block lengths must be at least 1".into()));
        }
        for p in [&iota, &ell, &theta] {
            if p.ctx() != ctx {
                return Err(Error::ContextMismatch {
                    left: ctx.p(),
                    right: p.ctx().p(),
                });
            }
        }
        let norm = normalize(m, n, &iota, &ell, &theta);
        if let Some(c) = norm.validation.first_failure() {
            return Err(Error::InvalidGenerator {
                component: c.component,
                condition: c.name.to_owned(),
            });
        }
        Ok(Self {
            ctx,
            m,
            n,
            iota: RPoly::from_components(norm.iota),
            ell: RPoly::from_components(norm.ell),
            theta: RPoly::from_components(norm.theta),
        })
    }

    /// Runs every condition without failing early.
    pub fn validate(m: usize, n: usize, iota: &RPoly, ell: &RPoly, theta: &RPoly) -> Validation {
        normalize(m, n, iota, ell, theta).validation
    }

    /// The zero code of length `(m, n)`.
    pub fn zero(ctx: FieldCtx, m: usize, n: usize) -> Self {
        Self::new(
            ctx,
            m,
            n,
            RPoly::splat(Poly::x_pow_minus_one(ctx, m)),
            RPoly::zero(ctx),
            RPoly::splat(Poly::x_pow_minus_one(ctx, n)),
        )
        .expect("zero code is valid")
    }

    /// The whole space `R^m x R^n`.
    pub fn full(ctx: FieldCtx, m: usize, n: usize) -> Self {
        Self::new(ctx, m, n, RPoly::one(ctx), RPoly::zero(ctx), RPoly::one(ctx))
            .expect("full code is valid")
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `lcm(m, n)`, the order of the shift operator.
    pub fn l(&self) -> usize {
        lcm(self.m, self.n)
    }

    pub fn iota(&self) -> &RPoly {
        &self.iota
    }

    pub fn ell(&self) -> &RPoly {
        &self.ell
    }

    pub fn theta(&self) -> &RPoly {
        &self.theta
    }

    /// `gcd(iota_i, ell_i)` per component.
    pub fn iota_ell_gcd(&self) -> RPoly {
        self.iota.gcd(&self.ell).expect("iota components are nonzero")
    }

    /// `k_i = deg iota_i - deg gcd(iota_i, ell_i)`.
    pub fn k(&self) -> [usize; 3] {
        let g = self.iota_ell_gcd();
        [1, 2, 3].map(|i| self.iota.component(i).deg0() - g.component(i).deg0())
    }

    /// The generators `(iota | 0)` and `(ell | theta)` as codewords.
    pub fn generators(&self) -> [Codeword; 2] {
        let zero = RPoly::zero(self.ctx);
        [
            Codeword::from_polys(self.m, self.n, &self.iota, &zero),
            Codeword::from_polys(self.m, self.n, &self.ell, &self.theta),
        ]
    }

    /// Natural generator matrices `G_1, G_2, G_3`.
    pub fn generator_matrices(&self) -> [FqMatrix; 3] {
        natural_matrices(self)
    }

    /// `F_q`-dimension, measured as the total rank of the generator matrices.
    pub fn measured_dimension(&self) -> usize {
        self.generator_matrices().iter().map(FqMatrix::rank).sum()
    }

    /// Membership by reduction against the row spaces of `G_i`.
    pub fn contains(&self, c: &Codeword) -> Result<bool> {
        if c.m() != self.m || c.n() != self.n {
            return Err(Error::Dimension(format!(
                "codeword has length ({}, {}), code has ({}, {})",
                c.m(),
                c.n(),
                self.m,
                self.n
            )));
        }
        Ok(self
            .generator_matrices()
            .iter()
            .enumerate()
            .all(|(i, g)| RowSpace::new(g).contains(&c.component_vector(i + 1))))
    }

    /// Every codeword exactly once. Fails if `q^dim` exceeds `cap`.
    pub fn enumerate(&self, cap: u64) -> Result<CodewordIter> {
        CodewordIter::new(self, cap)
    }

    /// Whether `C = C_m x C_n`, by comparing `rank(G_i)` with the ranks of
    /// its two column blocks.
    pub fn is_separable(&self) -> bool {
        self.generator_matrices().iter().all(|g| {
            let left = g.columns(0..self.m).rank();
            let right = g.columns(self.m..self.m + self.n).rank();
            g.rank() == left + right
        })
    }

    /// Whether two specs describe the same codeword set, decided by row-space
    /// comparison (independent of the canonical-form argument behind `==`).
    pub fn same_code(&self, other: &CodeSpec) -> bool {
        self.m == other.m
            && self.n == other.n
            && self.ctx == other.ctx
            && self
                .generator_matrices()
                .iter()
                .zip(other.generator_matrices().iter())
                .all(|(a, b)| RowSpace::same_span(a, b))
    }

    /// The smallest double cyclic code containing `spanning`.
    ///
    /// Per component: `theta` is the gcd of `x^n - 1` with every right block,
    /// `ell` the left-block combination realizing it (tracked through the
    /// extended gcd), and `iota` the gcd of `x^m - 1`, `((x^n - 1)/theta) * ell`
    /// and every word's left block after its right block is cancelled.
    pub fn canonicalize(
        ctx: FieldCtx,
        m: usize,
        n: usize,
        spanning: &[Codeword],
    ) -> Result<CodeSpec> {
        if m == 0 || n == 0 {
            return Err(Error::Dimension("block lengths must be at least 1".into()));
        }
        for w in spanning {
            if w.m() != m || w.n() != n {
                return Err(Error::Dimension(
                    "spanning word has the wrong length".into(),
                ));
            }
        }
        let xm1 = Poly::x_pow_minus_one(ctx, m);
        let xn1 = Poly::x_pow_minus_one(ctx, n);
        let mut iotas = Vec::new();
        let mut ells = Vec::new();
        let mut thetas = Vec::new();
        for i in 1..=3 {
            let words: Vec<(Poly, Poly)> = spanning
                .iter()
                .map(|w| (w.left_poly(i), w.right_poly(i)))
                .collect();
            let mut g = xn1.clone();
            let mut ell = Poly::zero(ctx);
            for (u, w) in &words {
                if w.is_zero() {
                    continue;
                }
                let (g2, a, b) = g.ext_gcd(w)?;
                ell = (&(&a * &ell) + &(&b * u)).rem(&xm1)?;
                g = g2;
            }
            let theta = g;
            let cof = xn1.div_exact(&theta)?;
            let mut iota = xm1.gcd(&(&cof * &ell).rem(&xm1)?)?;
            for (u, w) in &words {
                let e = w.div_exact(&theta)?;
                let kappa = (u - &(&e * &ell)).rem(&xm1)?;
                iota = iota.gcd(&kappa)?;
            }
            iotas.push(iota);
            ells.push(ell);
            thetas.push(theta);
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
        .map_err(|e| Error::InvariantViolation(format!("canonicalized generators rejected: {e}")))
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q = {}", self.ctx.p())?;
        writeln!(f, "m = {}", self.m)?;
        writeln!(f, "n = {}", self.n)?;
        for (name, p) in [("iota", &self.iota), ("ell", &self.ell), ("theta", &self.theta)] {
            for i in 1..=3 {
                writeln!(f, "{name}.v{i} = {}", p.component(i).to_text())?;
            }
        }
        Ok(())
    }
}

/// A vector `(c^1 | c^2)` in `R^m x R^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Codeword {
    left: Vec<RElem>,
    right: Vec<RElem>,
}

impl Codeword {
    pub fn new(left: Vec<RElem>, right: Vec<RElem>) -> Self {
        assert!(!left.is_empty() && !right.is_empty(), "blocks must be non-empty");
        Self { left, right }
    }

    pub fn zero(ctx: FieldCtx, m: usize, n: usize) -> Self {
        Self::new(vec![RElem::zero(ctx); m], vec![RElem::zero(ctx); n])
    }

    /// Coefficient vectors of `left mod (x^m - 1)` and `right mod (x^n - 1)`.
    pub fn from_polys(m: usize, n: usize, left: &RPoly, right: &RPoly) -> Self {
        let ctx = left.ctx();
        let block = |p: &RPoly, len: usize| -> Vec<RElem> {
            let modulus = Poly::x_pow_minus_one(ctx, len);
            let red = p.map(|c| c.rem(&modulus).expect("nonzero modulus"));
            (0..len)
                .map(|j| RElem::from_components([1, 2, 3].map(|i| red.component(i).coeff(j))))
                .collect()
        };
        Self::new(block(left, m), block(right, n))
    }

    /// Assembles `sum_i v_i * vecs[i]` from three `F_q` vectors of length `m + n`.
    pub fn from_component_vectors(ctx: FieldCtx, m: usize, vecs: [&[u32]; 3]) -> Self {
        let len = vecs[0].len();
        assert!(vecs.iter().all(|v| v.len() == len) && len > m);
        let all: Vec<RElem> = (0..len)
            .map(|j| RElem::from_components([0, 1, 2].map(|i| ctx.elem(vecs[i][j] as i64))))
            .collect();
        Self::new(all[..m].to_vec(), all[m..].to_vec())
    }

    pub fn m(&self) -> usize {
        self.left.len()
    }

    pub fn n(&self) -> usize {
        self.right.len()
    }

    pub fn ctx(&self) -> FieldCtx {
        self.left[0].ctx()
    }

    pub fn left(&self) -> &[RElem] {
        &self.left
    }

    pub fn right(&self) -> &[RElem] {
        &self.right
    }

    pub fn is_zero(&self) -> bool {
        self.left.iter().chain(&self.right).all(RElem::is_zero)
    }

    /// `P_{v_i}` of the whole word, left block then right block.
    pub fn component_vector(&self, i: usize) -> Vec<u32> {
        self.left
            .iter()
            .chain(&self.right)
            .map(|r| r.project(i).value())
            .collect()
    }

    fn block_poly(block: &[RElem], i: usize) -> Poly {
        let ctx = block[0].ctx();
        Poly::from_residues(ctx, block.iter().map(|r| r.project(i).value()).collect())
    }

    /// `P_{v_i}` of the left block as a polynomial.
    pub fn left_poly(&self, i: usize) -> Poly {
        Self::block_poly(&self.left, i)
    }

    /// `P_{v_i}` of the right block as a polynomial.
    pub fn right_poly(&self, i: usize) -> Poly {
        Self::block_poly(&self.right, i)
    }

    /// The simultaneous cyclic shift `T`: both blocks rotate right by one.
    pub fn shift(&self) -> Codeword {
        let mut left = self.left.clone();
        let mut right = self.right.clone();
        left.rotate_right(1);
        right.rotate_right(1);
        Self { left, right }
    }

    /// `T^k`.
    pub fn shift_by(&self, k: usize) -> Codeword {
        let mut left = self.left.clone();
        let mut right = self.right.clone();
        let (m, n) = (left.len(), right.len());
        left.rotate_right(k % m);
        right.rotate_right(k % n);
        Self { left, right }
    }

    /// `<c, d> = sum c^1_i d^1_i + sum c^2_j d^2_j` in `R`.
    pub fn inner(&self, other: &Codeword) -> RElem {
        assert_eq!((self.m(), self.n()), (other.m(), other.n()), "length mismatch");
        self.left
            .iter()
            .zip(&other.left)
            .chain(self.right.iter().zip(&other.right))
            .fold(RElem::zero(self.ctx()), |acc, (a, b)| acc + *a * *b)
    }

    pub fn add(&self, other: &Codeword) -> Codeword {
        Self {
            left: self.left.iter().zip(&other.left).map(|(a, b)| *a + *b).collect(),
            right: self.right.iter().zip(&other.right).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn scale(&self, r: RElem) -> Codeword {
        Self {
            left: self.left.iter().map(|a| *a * r).collect(),
            right: self.right.iter().map(|a| *a * r).collect(),
        }
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_block = |b: &[RElem]| {
            b.iter()
                .map(RElem::to_standard_text)
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} | {}", fmt_block(&self.left), fmt_block(&self.right))
    }
}

/// `Σ_j d_j x^{l-1-j}`, i.e. `x^{l-1-deg d} * (raw reciprocal of d)`.
fn reversed_into(d: &Poly, l: usize) -> Poly {
    match d.degree() {
        None => d.clone(),
        Some(deg) => d.raw_reciprocal().shift(l - 1 - deg),
    }
}

/// The pairing `c ∘ d` into `R[x]/(x^l - 1)`, per component
/// `c^1 ω_{l/m}(x^m) x^{l-1-deg d^1} rev(d^1) + c^2 ω_{l/n}(x^n) x^{l-1-deg d^2} rev(d^2)`.
///
/// `rev` is the unnormalized reciprocal `x^{deg d} d(1/x)`, so the
/// coefficient of `x^{l-1-s}` is exactly `<c, d_(s)>`, where `d_(s)` is `d`
/// with both blocks rotated left by `s`. `c ∘ d = 0` iff `c` is orthogonal to
/// every shift of `d`.
pub fn circ(c: &Codeword, d: &Codeword) -> RPoly {
    assert_eq!((c.m(), c.n()), (d.m(), d.n()), "length mismatch");
    let ctx = c.ctx();
    let (m, n) = (c.m(), c.n());
    let l = lcm(m, n);
    let xl1 = Poly::x_pow_minus_one(ctx, l);
    let om = Poly::omega(ctx, l / m, m);
    let on = Poly::omega(ctx, l / n, n);
    let comps = [1, 2, 3].map(|i| {
        let t1 = &(&c.left_poly(i) * &om) * &reversed_into(&d.left_poly(i), l);
        let t2 = &(&c.right_poly(i) * &on) * &reversed_into(&d.right_poly(i), l);
        (&t1 + &t2).rem(&xl1).expect("nonzero modulus")
    });
    RPoly::from_components(comps)
}

/// Lazily enumerates a code's codewords by index. Index ranges are disjoint
/// slices of the codeword set, so callers may split the work.
pub struct CodewordIter {
    ctx: FieldCtx,
    m: usize,
    bases: [FqMatrix; 3],
    next: u64,
    end: u64,
}

impl CodewordIter {
    fn new(code: &CodeSpec, cap: u64) -> Result<Self> {
        let bases = code.generator_matrices().map(|g| RowSpace::new(&g).basis().clone());
        let dim: usize = bases.iter().map(FqMatrix::nrows).sum();
        let total = check_cap(code.ctx.p(), dim, cap)?;
        Ok(Self {
            ctx: code.ctx,
            m: code.m,
            bases,
            next: 0,
            end: total,
        })
    }

    /// Total number of codewords, `q^dim`.
    pub fn total(&self) -> u64 {
        self.end
    }

    /// Restricts the iterator to indices in `range` (clamped to the total).
    pub fn with_range(mut self, range: std::ops::Range<u64>) -> Self {
        let total = self.end;
        self.next = range.start.min(total);
        self.end = range.end.min(total);
        self
    }

    fn decode(&self, mut idx: u64) -> Codeword {
        let p = self.ctx.p() as u64;
        let vecs = self.bases.clone().map(|b| {
            let mut v = vec![0u32; b.ncols()];
            for r in 0..b.nrows() {
                let coef = (idx % p) as u32;
                idx /= p;
                if coef == 0 {
                    continue;
                }
                for (x, &g) in v.iter_mut().zip(b.row(r)) {
                    *x = self.ctx.add(*x, self.ctx.mul(coef, g));
                }
            }
            v
        });
        Codeword::from_component_vectors(self.ctx, self.m, [&vecs[0], &vecs[1], &vecs[2]])
    }
}

impl Iterator for CodewordIter {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.next >= self.end {
            return None;
        }
        let c = self.decode(self.next);
        self.next += 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.end - self.next) as usize;
        (rem, Some(rem))
    }
}

/// A scalar of `R` given by its idempotent components.
pub fn relem(ctx: FieldCtx, comps: [i64; 3]) -> RElem {
    RElem::from_components(comps.map(|v| ctx.elem(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::example1;
    use std::collections::HashSet;

    fn f7() -> FieldCtx {
        FieldCtx::new(7).unwrap()
    }

    fn f3() -> FieldCtx {
        FieldCtx::new(3).unwrap()
    }

    #[test]
    fn example1_is_accepted_as_is() {
        let c = example1();
        let ctx = f7();
        assert_eq!(c.iota(), &RPoly::splat(Poly::new(ctx, &[1, 1, 1, 1, 1])));
        assert_eq!(c.theta(), &RPoly::splat(Poly::new(ctx, &[6, 1])));
        assert_eq!(c.ell().component(1), &Poly::new(ctx, &[5, 2, 3, 4]));
        assert_eq!(c.l(), 5);
        assert_eq!(c.k(), [4, 4, 4]);
    }

    #[test]
    fn zero_code_is_valid() {
        let ctx = f7();
        let z = CodeSpec::new(
            ctx,
            3,
            4,
            RPoly::splat(Poly::x_pow_minus_one(ctx, 3)),
            RPoly::zero(ctx),
            RPoly::splat(Poly::x_pow_minus_one(ctx, 4)),
        )
        .unwrap();
        assert_eq!(z, CodeSpec::zero(ctx, 3, 4));
        // zero components are read as x^k - 1
        let z2 = CodeSpec::new(ctx, 3, 4, RPoly::zero(ctx), RPoly::zero(ctx), RPoly::zero(ctx));
        assert_eq!(z2.unwrap(), z);
        assert_eq!(z.measured_dimension(), 0);
    }

    #[test]
    fn rejects_non_divisor_theta() {
        let ctx = f7();
        let theta = RPoly::from_components([
            Poly::new(ctx, &[1, 1]),
            Poly::new(ctx, &[6, 1]),
            Poly::new(ctx, &[6, 1]),
        ]);
        let err = CodeSpec::new(
            ctx,
            5,
            5,
            RPoly::splat(Poly::new(ctx, &[1, 1, 1, 1, 1])),
            RPoly::zero(ctx),
            theta,
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::InvalidGenerator {
                component: 1,
                condition: COND_THETA_DIVIDES.into()
            }
        );
    }

    #[test]
    fn rejects_kernel_condition_failure() {
        // iota = x - 1, theta = 1, ell = 1: (x^n-1)/theta * ell = x^n - 1 is
        // fine, so use theta = x^n - 1 (right block zero) with ell = 1 instead.
        let ctx = f3();
        let err = CodeSpec::new(
            ctx,
            2,
            2,
            RPoly::splat(Poly::new(ctx, &[2, 1])),
            RPoly::splat(Poly::one(ctx)),
            RPoly::splat(Poly::one(ctx)),
        );
        // (x^2-1)/1 * 1 = x^2 - 1 is divisible by x - 1: valid
        assert!(err.is_ok());
        let err = CodeSpec::new(
            ctx,
            2,
            2,
            RPoly::splat(Poly::new(ctx, &[2, 1])),
            RPoly::splat(Poly::one(ctx)),
            RPoly::splat(Poly::new(ctx, &[2, 1])),
        )
        .unwrap_err();
        // (x^2-1)/(x-1) = x + 1 and x - 1 does not divide x + 1 over F_3
        assert_eq!(
            err,
            Error::InvalidGenerator {
                component: 1,
                condition: COND_KERNEL.into()
            }
        );
    }

    #[test]
    fn ell_is_reduced_and_theta_made_monic() {
        let ctx = f7();
        let iota = RPoly::splat(Poly::new(ctx, &[6, 1]));
        // theta = 2(1 + x + x^2 + x^3 + x^4): making it monic scales ell = x^2
        // by 4, and 4x^2 reduces to 4 mod (x - 1)
        let c = CodeSpec::new(
            ctx,
            5,
            5,
            iota,
            RPoly::splat(Poly::monomial(ctx, 1, 2)),
            RPoly::splat(Poly::new(ctx, &[2, 2, 2, 2, 2])),
        )
        .unwrap();
        assert_eq!(c.theta(), &RPoly::splat(Poly::new(ctx, &[1, 1, 1, 1, 1])));
        assert_eq!(c.ell(), &RPoly::splat(Poly::new(ctx, &[4])));
    }

    #[test]
    fn shift_examples() {
        let ctx = f7();
        let e = |v| relem(ctx, [v, v, v]);
        let c = Codeword::new(vec![e(1), e(2)], vec![e(3), e(4), e(5)]);
        assert_eq!(
            c.shift(),
            Codeword::new(vec![e(2), e(1)], vec![e(5), e(3), e(4)])
        );
        let mut t = c.clone();
        for _ in 0..lcm(2, 3) {
            t = t.shift();
        }
        assert_eq!(t, c);
        assert_eq!(c.shift_by(6), c);
        assert_eq!(c.shift_by(4), c.shift().shift().shift().shift());
    }

    #[test]
    fn shift_is_multiplication_by_x() {
        let c = example1();
        let [_, g] = c.generators();
        let x = Poly::monomial(c.ctx(), 1, 1);
        let left = c.ell().map(|p| p * &x);
        let right = c.theta().map(|p| p * &x);
        assert_eq!(g.shift(), Codeword::from_polys(5, 5, &left, &right));
    }

    #[test]
    fn membership() {
        let c = example1();
        let [g0, g1] = c.generators();
        assert!(c.contains(&g0).unwrap());
        assert!(c.contains(&g1.shift().shift()).unwrap());
        assert!(c.contains(&Codeword::zero(c.ctx(), 4, 5)).is_err());
    }

    #[test]
    fn membership_matches_enumeration_over_f3() {
        let ctx = f3();
        // iota = x + 1, ell = 1, theta = x - 1 over F_3, m = n = 2
        let c = CodeSpec::new(
            ctx,
            2,
            2,
            RPoly::splat(Poly::new(ctx, &[1, 1])),
            RPoly::from_components([Poly::one(ctx), Poly::zero(ctx), Poly::zero(ctx)]),
            RPoly::from_components([
                Poly::new(ctx, &[2, 1]),
                Poly::one(ctx),
                Poly::x_pow_minus_one(ctx, 2),
            ]),
        )
        .unwrap();
        let words: HashSet<Codeword> = c.enumerate(DEFAULT_ENUMERATION_CAP).unwrap().collect();
        assert_eq!(words.len() as u64, 3u64.pow(c.measured_dimension() as u32));
        // the whole ambient space R^2 x R^2 has 3^12 elements; sample all
        // words whose v2 and v3 parts are zero and compare membership
        for idx in 0..81u32 {
            let v: Vec<u32> = (0..4).map(|k| (idx / 3u32.pow(k)) % 3).collect();
            let zero = vec![0u32; 4];
            let w = Codeword::from_component_vectors(ctx, 2, [&v, &zero, &zero]);
            assert_eq!(c.contains(&w).unwrap(), words.contains(&w), "{w}");
        }
    }

    #[test]
    fn enumeration_counts() {
        let ctx = f3();
        let z = CodeSpec::zero(ctx, 2, 3);
        let all: Vec<_> = z.enumerate(10).unwrap().collect();
        assert_eq!(all, vec![Codeword::zero(ctx, 2, 3)]);

        // m = n = 1, iota = 1: left block free, right block theta
        let c = CodeSpec::new(ctx, 1, 1, RPoly::one(ctx), RPoly::zero(ctx), RPoly::zero(ctx)).unwrap();
        let count = c.enumerate(1000).unwrap().count();
        assert_eq!(count, 27);
        assert_eq!(c.measured_dimension(), 3);

        let full = CodeSpec::full(ctx, 3, 3);
        assert!(matches!(full.enumerate(1000), Err(Error::TooLarge { exponent: 18, .. })));
    }

    #[test]
    fn enumeration_ranges_partition() {
        let ctx = f3();
        let c = CodeSpec::new(ctx, 1, 2, RPoly::one(ctx), RPoly::zero(ctx), RPoly::splat(Poly::new(ctx, &[2, 1]))).unwrap();
        let total = c.enumerate(10_000).unwrap().total();
        let a: Vec<_> = c.enumerate(10_000).unwrap().with_range(0..total / 2).collect();
        let b: Vec<_> = c.enumerate(10_000).unwrap().with_range(total / 2..total).collect();
        let whole: HashSet<_> = c.enumerate(10_000).unwrap().collect();
        assert_eq!(a.len() + b.len(), whole.len());
        let joined: HashSet<_> = a.into_iter().chain(b).collect();
        assert_eq!(joined, whole);
    }

    #[test]
    fn example1_projection_has_7_pow_5_words() {
        let c = example1();
        let g1 = &c.generator_matrices()[0];
        assert_eq!(g1.rank(), 5);
        assert_eq!(check_cap(7, g1.rank(), DEFAULT_ENUMERATION_CAP).unwrap(), 16_807);
    }

    #[test]
    fn canonicalize_round_trips_generators() {
        let c = example1();
        let back = CodeSpec::canonicalize(c.ctx(), 5, 5, &c.generators()).unwrap();
        assert_eq!(back, c);
        assert!(back.same_code(&c));
    }

    #[test]
    fn canonicalize_zero_word() {
        let ctx = f7();
        let c = CodeSpec::canonicalize(ctx, 3, 2, &[Codeword::zero(ctx, 3, 2)]).unwrap();
        assert_eq!(c, CodeSpec::zero(ctx, 3, 2));
        assert!(c.iota().components().iter().all(|p| *p == Poly::x_pow_minus_one(ctx, 3)));
    }

    #[test]
    fn separability() {
        let ctx = f7();
        let sep = CodeSpec::new(
            ctx,
            5,
            5,
            RPoly::splat(Poly::new(ctx, &[6, 1])),
            RPoly::zero(ctx),
            RPoly::splat(Poly::new(ctx, &[1, 1, 1, 1, 1])),
        )
        .unwrap();
        assert!(sep.is_separable());
        assert!(!example1().is_separable());
        assert_eq!(example1().measured_dimension(), 15);
        assert!(CodeSpec::zero(ctx, 4, 2).is_separable());
    }

    #[test]
    fn circ_of_zero_is_zero() {
        let c = example1();
        let [_, g] = c.generators();
        assert!(circ(&Codeword::zero(c.ctx(), 5, 5), &g).is_zero());
    }

    #[test]
    fn circ_with_equal_lengths_needs_no_omega() {
        let c = example1();
        let [g0, g1] = c.generators();
        let l = 5;
        let xl1 = Poly::x_pow_minus_one(c.ctx(), l);
        let got = circ(&g1, &g0);
        for i in 1..=3 {
            let d1 = g0.left_poly(i);
            let expect = (&g1.left_poly(i) * &d1.raw_reciprocal().shift(l - 1 - d1.deg0()))
                .rem(&xl1)
                .unwrap();
            assert_eq!(got.component(i), &expect);
        }
    }
}
