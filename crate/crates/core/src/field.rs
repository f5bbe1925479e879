//! Prime field arithmetic.
//!
//! [`FieldCtx`] fixes an odd prime `p`; [`Fq`] is a residue in `[0, p)` tagged
//! with its context. The `std::ops` implementations panic when two operands
//! come from different fields; the `checked_*` methods report
//! [`Error::ContextMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// An odd prime modulus. Cheap to copy; every polynomial and matrix carries one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    p: u32,
}

impl FieldCtx {
    /// Builds the context for `F_p`. Rejects 2, composites and anything that
    /// does not fit in 32 bits.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Residue of an arbitrary signed integer.
    pub fn elem(&self, value: i64) -> Fq {
        Fq {
            value: value.rem_euclid(self.p as i64) as u32,
            ctx: *self,
        }
    }

    pub fn zero(&self) -> Fq {
        self.elem(0)
    }

    pub fn one(&self) -> Fq {
        self.elem(1)
    }

    // Raw residue kernels used by the polynomial and matrix code.

    #[inline]
    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as u32
    }

    #[inline]
    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub(crate) fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Inverse by the extended Euclidean algorithm on integers.
    pub(crate) fn inv(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub(crate) fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p`, always fully reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fq {
    value: u32,
    ctx: FieldCtx,
}

impl Fq {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_ctx(&self, other: &Fq) -> Result<FieldCtx> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.p,
                right: other.ctx.p,
            });
        }
        Ok(self.ctx)
    }

    pub fn checked_add(self, other: Fq) -> Result<Fq> {
        let ctx = self.same_ctx(&other)?;
        Ok(Fq {
            value: ctx.add(self.value, other.value),
            ctx,
        })
    }

    pub fn checked_sub(self, other: Fq) -> Result<Fq> {
        let ctx = self.same_ctx(&other)?;
        Ok(Fq {
            value: ctx.sub(self.value, other.value),
            ctx,
        })
    }

    pub fn checked_mul(self, other: Fq) -> Result<Fq> {
        let ctx = self.same_ctx(&other)?;
        Ok(Fq {
            value: ctx.mul(self.value, other.value),
            ctx,
        })
    }

    /// Multiplicative inverse; [`Error::DivisionByZero`] for zero.
    pub fn inv(self) -> Result<Fq> {
        Ok(Fq {
            value: self.ctx.inv(self.value)?,
            ctx: self.ctx,
        })
    }
}

macro_rules! impl_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Fq {
            type Output = Fq;
            fn $method(self, rhs: Fq) -> Fq {
                self.$checked(rhs).expect("field context mismatch")
            }
        }
    };
}

impl_op!(Add, add, checked_add);
impl_op!(Sub, sub, checked_sub);
impl_op!(Mul, mul, checked_mul);

impl Neg for Fq {
    type Output = Fq;
    fn neg(self) -> Fq {
        Fq {
            value: self.ctx.neg(self.value),
            ctx: self.ctx,
        }
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> FieldCtx {
        FieldCtx::new(7).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        for p in [0, 1, 2, 4, 9, 15, 49, 91] {
            assert_eq!(FieldCtx::new(p), Err(Error::InvalidModulus(p)));
        }
        for p in [3, 5, 7, 101, 65_521] {
            assert!(FieldCtx::new(p).is_ok());
        }
    }

    #[test]
    fn small_arithmetic() {
        let f = f7();
        assert_eq!(f.elem(6) + f.elem(1), f.zero());
        assert_eq!(f.elem(4) * f.elem(2), f.one());
        for x in 0..7 {
            assert_eq!(f.zero() * f.elem(x), f.zero());
        }
        assert_eq!(f.elem(2) - f.elem(5), f.elem(4));
        assert_eq!(-f.elem(3), f.elem(4));
    }

    #[test]
    fn inverses() {
        let f = f7();
        assert_eq!(f.elem(1).inv().unwrap(), f.elem(1));
        assert_eq!(f.elem(6).inv().unwrap(), f.elem(6));
        assert_eq!(f.elem(2).inv().unwrap(), f.elem(4));
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_of_every_unit() {
        for p in [3u64, 5, 7, 11, 13, 31, 97, 101] {
            let f = FieldCtx::new(p).unwrap();
            for a in 1..p as i64 {
                let x = f.elem(a);
                assert_eq!(x * x.inv().unwrap(), f.one(), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn mixed_contexts_are_rejected() {
        let a = f7().elem(3);
        let b = FieldCtx::new(5).unwrap().elem(3);
        assert_eq!(
            a.checked_add(b),
            Err(Error::ContextMismatch { left: 7, right: 5 })
        );
        assert!(a.checked_mul(b).is_err());
        assert!(a.checked_sub(b).is_err());
    }

    #[test]
    fn field_axioms_spot_check() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in [3u64, 5, 7, 11, 101] {
            let f = FieldCtx::new(p).unwrap();
            for _ in 0..200 {
                let [a, b, c] = [0; 3].map(|_| f.elem(rng.random_range(0..p as i64)));
                assert_eq!((a + b) + c, a + (b + c));
                assert_eq!((a * b) * c, a * (b * c));
                assert_eq!(a * (b + c), a * b + a * c);
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
            }
        }
    }
}
