//! Polynomials over `R`, stored as the triple of their `F_q[x]` projections.
//!
//! `R[x] = F_q[x]v1 + F_q[x]v2 + F_q[x]v3`, so divisibility, gcds and
//! reciprocals all reduce to the corresponding `F_q[x]` operation per
//! component.

use std::ops::{Add, Mul, Sub};

use crate::error::Result;
use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::ring::RElem;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RPoly {
    comps: [Poly; 3],
}

impl RPoly {
    pub fn from_components(comps: [Poly; 3]) -> Self {
        let ctx = comps[0].ctx();
        assert!(
            comps.iter().all(|c| c.ctx() == ctx),
            "components over different fields"
        );
        Self { comps }
    }

    /// The same `F_q` polynomial in every component (i.e. `f = f*v1 + f*v2 + f*v3`).
    pub fn splat(f: Poly) -> Self {
        Self {
            comps: [f.clone(), f.clone(), f],
        }
    }

    pub fn zero(ctx: FieldCtx) -> Self {
        Self::splat(Poly::zero(ctx))
    }

    pub fn one(ctx: FieldCtx) -> Self {
        Self::splat(Poly::one(ctx))
    }

    /// Decomposes a polynomial given by standard-basis coefficients
    /// (ascending in `x`) into its three projections.
    pub fn from_standard(ctx: FieldCtx, coeffs: &[RElem]) -> Self {
        let comps = [0usize, 1, 2].map(|i| {
            Poly::from_residues(
                ctx,
                coeffs.iter().map(|r| r.project(i + 1).value()).collect(),
            )
        });
        Self { comps }
    }

    /// Coefficients in `R`, ascending in `x`, padded to the largest component degree.
    pub fn coefficients(&self) -> Vec<RElem> {
        let len = self
            .comps
            .iter()
            .map(|c| c.residues().len())
            .max()
            .unwrap_or(0);
        (0..len)
            .map(|j| RElem::from_components([0, 1, 2].map(|i| self.comps[i].coeff(j))))
            .collect()
    }

    pub fn ctx(&self) -> FieldCtx {
        self.comps[0].ctx()
    }

    /// `P_{v_i}`, `i` in `1..=3`.
    pub fn component(&self, i: usize) -> &Poly {
        &self.comps[i - 1]
    }

    pub fn components(&self) -> &[Poly; 3] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> RPoly {
        Self {
            comps: [0, 1, 2].map(|i| f(&self.comps[i])),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Poly) -> Result<Poly>) -> Result<RPoly> {
        let [a, b, c] = [0, 1, 2].map(|i| f(&self.comps[i]));
        Ok(Self {
            comps: [a?, b?, c?],
        })
    }

    fn zip(&self, other: &RPoly, f: impl Fn(&Poly, &Poly) -> Poly) -> RPoly {
        Self {
            comps: [0, 1, 2].map(|i| f(&self.comps[i], &other.comps[i])),
        }
    }

    fn try_zip(&self, other: &RPoly, f: impl Fn(&Poly, &Poly) -> Result<Poly>) -> Result<RPoly> {
        let [a, b, c] = [0, 1, 2].map(|i| f(&self.comps[i], &other.comps[i]));
        Ok(Self {
            comps: [a?, b?, c?],
        })
    }

    /// `self | other` in `R[x]`: every component divides its counterpart.
    /// A zero component divides only a zero component.
    pub fn divides(&self, other: &RPoly) -> bool {
        (0..3).all(|i| self.comps[i].divides(&other.comps[i]))
    }

    /// Componentwise quotient `other / self`; `None` unless `self | other`.
    /// Components where both sides are zero get quotient zero.
    pub fn quotient_of(&self, other: &RPoly) -> Option<RPoly> {
        if !self.divides(other) {
            return None;
        }
        Some(self.zip(other, |a, b| {
            if a.is_zero() {
                Poly::zero(a.ctx())
            } else {
                b.div_exact(a).expect("checked divisibility")
            }
        }))
    }

    /// Componentwise monic gcd.
    pub fn gcd(&self, other: &RPoly) -> Result<RPoly> {
        self.try_zip(other, Poly::gcd)
    }

    /// Componentwise monic reciprocal, zero components stay zero.
    pub fn reciprocal(&self) -> RPoly {
        self.map(Poly::reciprocal)
    }

    pub fn rem(&self, modulus: &RPoly) -> Result<RPoly> {
        self.try_zip(modulus, Poly::rem)
    }

    /// One line per component, ascending residues.
    pub fn to_text(&self) -> [String; 3] {
        [0, 1, 2].map(|i| self.comps[i].to_text())
    }
}

impl Add for &RPoly {
    type Output = RPoly;
    fn add(self, rhs: &RPoly) -> RPoly {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &RPoly {
    type Output = RPoly;
    fn sub(self, rhs: &RPoly) -> RPoly {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul for &RPoly {
    type Output = RPoly;
    fn mul(self, rhs: &RPoly) -> RPoly {
        self.zip(rhs, |a, b| a * b)
    }
}
