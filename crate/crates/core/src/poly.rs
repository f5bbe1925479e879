//! Dense univariate polynomials over `F_p`.
//!
//! Coefficients are stored in ascending order (`coeffs[i]` is the coefficient
//! of `x^i`) with no trailing zeros, so the zero polynomial is the empty
//! vector and `degree()` returns `None` for it. `None` sorts below every
//! `Some(d)`, which is the "minus infinity" convention for `deg(0)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Fq};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    ctx: FieldCtx,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Builds a polynomial from raw residues, trimming trailing zeros.
    /// Residues must already be reduced.
    pub(crate) fn from_residues(ctx: FieldCtx, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < ctx.p()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { ctx, coeffs }
    }

    /// Builds a polynomial from ascending integer coefficients (any sign).
    pub fn new(ctx: FieldCtx, coeffs: &[i64]) -> Self {
        Self::from_residues(ctx, coeffs.iter().map(|&c| ctx.reduce(c)).collect())
    }

    pub fn from_fq(ctx: FieldCtx, coeffs: &[Fq]) -> Result<Self> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.ctx() != ctx {
                return Err(Error::ContextMismatch {
                    left: ctx.p(),
                    right: c.ctx().p(),
                });
            }
            raw.push(c.value());
        }
        Ok(Self::from_residues(ctx, raw))
    }

    pub fn zero(ctx: FieldCtx) -> Self {
        Self {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: FieldCtx) -> Self {
        Self { ctx, coeffs: vec![1] }
    }

    /// `c * x^k`.
    pub fn monomial(ctx: FieldCtx, c: i64, k: usize) -> Self {
        let c = ctx.reduce(c);
        if c == 0 {
            return Self::zero(ctx);
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self { ctx, coeffs }
    }

    /// `x^k - 1`.
    pub fn x_pow_minus_one(ctx: FieldCtx, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[0] = ctx.neg(1);
        coeffs[k] = ctx.add(coeffs[k], 1);
        Self::from_residues(ctx, coeffs)
    }

    /// `ω_k(x^e) = 1 + x^e + x^{2e} + ... + x^{(k-1)e}`.
    pub fn omega(ctx: FieldCtx, k: usize, arg_power: usize) -> Self {
        assert!(k >= 1 && arg_power >= 1, "omega needs k, arg_power >= 1");
        let mut coeffs = vec![0; (k - 1) * arg_power + 1];
        for i in 0..k {
            coeffs[i * arg_power] = 1;
        }
        Self { ctx, coeffs }
    }

    #[inline]
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Degree, `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg(0)` read as 0. Only for formulas where the zero
    /// polynomial cannot occur or contributes nothing.
    pub(crate) fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Ascending residues, no trailing zeros.
    pub fn residues(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Fq {
        self.ctx.elem(self.raw(i) as i64)
    }

    #[inline]
    pub(crate) fn raw(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    fn check(&self, other: &Poly) {
        assert_eq!(self.ctx, other.ctx, "polynomials over different fields");
    }

    pub fn scale(&self, c: u32) -> Poly {
        let ctx = self.ctx;
        Self::from_residues(ctx, self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self {
            ctx: self.ctx,
            coeffs,
        }
    }

    /// Scale so that the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(self.ctx.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: Fq) -> Fq {
        let ctx = self.ctx;
        let acc = self
            .coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| ctx.add(ctx.mul(acc, x.value()), c));
        ctx.elem(acc as i64)
    }

    /// Quotient and remainder with `deg(r) < deg(b)`.
    pub fn divmod(&self, b: &Poly) -> Result<(Poly, Poly)> {
        self.check(b);
        let ctx = self.ctx;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(ctx), self.clone()));
        }
        let inv_lc = ctx.inv(b.coeffs[db])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = ctx.mul(rem[k + db], inv_lc);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                rem[k + j] = ctx.sub(rem[k + j], ctx.mul(c, bj));
            }
        }
        rem.truncate(db);
        Ok((Self::from_residues(ctx, quot), Self::from_residues(ctx, rem)))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divmod(b)?.1)
    }

    /// `self / b`, failing with an invariant violation when the division
    /// leaves a remainder.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(b)?;
        if !r.is_zero() {
            return Err(Error::InvariantViolation(format!(
                "{b} does not divide {self}"
            )));
        }
        Ok(q)
    }

    /// Whether `self` divides `other`. The zero polynomial divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let ctx = self.ctx;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(ctx), Poly::zero(ctx));
        let (mut t0, mut t1) = (Poly::zero(ctx), Poly::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let inv = ctx.inv(r0.leading().expect("nonzero gcd"))?;
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Inverse of `self` modulo `m`, reduced below `deg(m)`.
    pub fn inv_mod(&self, m: &Poly) -> Result<Poly> {
        match m.degree() {
            None => return Err(Error::DivisionByZero),
            Some(0) => return Err(Error::NotInvertible),
            Some(_) => {}
        }
        let a = self.rem(m)?;
        if a.is_zero() {
            return Err(Error::NotInvertible);
        }
        let (g, s, _) = a.ext_gcd(m)?;
        if !g.is_one() {
            return Err(Error::NotInvertible);
        }
        s.rem(m)
    }

    /// `(self * b) mod modulus`.
    pub fn mulmod(&self, b: &Poly, modulus: &Poly) -> Result<Poly> {
        (self * b).rem(modulus)
    }

    /// `x^deg(r) * r(1/x)` with no normalization. Its constant term is the
    /// leading coefficient of `r` and its leading coefficient is the lowest
    /// nonzero coefficient of `r`.
    pub fn raw_reciprocal(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_residues(self.ctx, coeffs)
    }

    /// Monic reciprocal: the raw reciprocal divided by the lowest nonzero
    /// coefficient of `r`. `0* = 0`.
    pub fn reciprocal(&self) -> Poly {
        self.raw_reciprocal().monic()
    }

    /// Ascending, space-separated residues; the zero polynomial renders `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the ascending residue format of [`Poly::to_text`]. Tokens must
    /// be integers; they are reduced modulo `p`.
    pub fn parse(ctx: FieldCtx, text: &str) -> std::result::Result<Poly, String> {
        let mut coeffs = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| format!("malformed residue token `{tok}`"))?;
            coeffs.push(v);
        }
        Ok(Poly::new(ctx, &coeffs))
    }
}

impl fmt::Display for Poly {
    /// Human-readable form, highest degree first, e.g. `4x^3 + 3x^2 + 2x + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let ctx = self.ctx;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_residues(ctx, (0..n).map(|i| ctx.add(self.raw(i), rhs.raw(i))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let ctx = self.ctx;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_residues(ctx, (0..n).map(|i| ctx.sub(self.raw(i), rhs.raw(i))).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let ctx = self.ctx;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(ctx);
        }
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Poly::from_residues(ctx, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let ctx = self.ctx;
        Poly::from_residues(ctx, self.coeffs.iter().map(|&c| ctx.neg(c)).collect())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
