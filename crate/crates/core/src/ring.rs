//! The ring `R = F_q[v]/(v^3 - v)`.
//!
//! Elements are stored in the idempotent basis
//! `v1 = 1 - v^2`, `v2 = (v + v^2)/2`, `v3 = (v^2 - v)/2`. The three idempotents
//! are orthogonal and sum to 1, so addition and multiplication act
//! componentwise. The coordinate `r_i` is the projection `P_{v_i}(r)`, which is
//! the evaluation of the standard form `a + bv + cv^2` at `v = 0, 1, -1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{FieldCtx, Fq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RElem {
    comps: [Fq; 3],
}

impl RElem {
    pub fn from_components(comps: [Fq; 3]) -> Self {
        let ctx = comps[0].ctx();
        assert!(
            comps.iter().all(|c| c.ctx() == ctx),
            "components over different fields"
        );
        Self { comps }
    }

    pub fn zero(ctx: FieldCtx) -> Self {
        Self {
            comps: [ctx.zero(); 3],
        }
    }

    pub fn one(ctx: FieldCtx) -> Self {
        Self {
            comps: [ctx.one(); 3],
        }
    }

    /// The idempotent `v_i`, `i` in `1..=3`.
    pub fn idempotent(ctx: FieldCtx, i: usize) -> Self {
        assert!((1..=3).contains(&i), "idempotent index must be 1, 2 or 3");
        let mut comps = [ctx.zero(); 3];
        comps[i - 1] = ctx.one();
        Self { comps }
    }

    /// `a + bv + cv^2` in idempotent coordinates: `(a, a+b+c, a-b+c)`.
    pub fn from_standard(a: Fq, b: Fq, c: Fq) -> Self {
        Self::from_components([a, a + b + c, a - b + c])
    }

    /// Inverse of [`RElem::from_standard`]: returns `(a, b, c)`.
    pub fn to_standard(&self) -> (Fq, Fq, Fq) {
        let [r1, r2, r3] = self.comps;
        let half = r1.ctx().elem(2).inv().expect("odd characteristic");
        let a = r1;
        let b = (r2 - r3) * half;
        let c = (r2 + r3) * half - r1;
        (a, b, c)
    }

    pub fn ctx(&self) -> FieldCtx {
        self.comps[0].ctx()
    }

    pub fn components(&self) -> [Fq; 3] {
        self.comps
    }

    /// `P_{v_i}`, `i` in `1..=3`.
    pub fn project(&self, i: usize) -> Fq {
        assert!((1..=3).contains(&i), "projection index must be 1, 2 or 3");
        self.comps[i - 1]
    }

    /// Scalar multiple by an `F_q` element, `c*r`.
    pub fn scale(&self, c: Fq) -> Self {
        Self {
            comps: self.comps.map(|x| x * c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Fq::is_zero)
    }

    /// A unit of `R` has every component nonzero.
    pub fn is_unit(&self) -> bool {
        self.comps.iter().all(|c| !c.is_zero())
    }

    /// Parses `a,b,c` meaning `a + bv + cv^2`.
    pub fn parse_standard(ctx: FieldCtx, text: &str) -> Result<Self, String> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(format!("expected `a,b,c`, got `{text}`"));
        }
        let mut vals = [ctx.zero(); 3];
        for (slot, part) in vals.iter_mut().zip(&parts) {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| format!("malformed residue token `{part}`"))?;
            *slot = ctx.elem(v);
        }
        Ok(Self::from_standard(vals[0], vals[1], vals[2]))
    }

    /// Renders the standard form as `a,b,c`.
    pub fn to_standard_text(&self) -> String {
        let (a, b, c) = self.to_standard();
        format!("{a},{b},{c}")
    }
}

impl Add for RElem {
    type Output = RElem;
    fn add(self, rhs: RElem) -> RElem {
        Self {
            comps: [0, 1, 2].map(|i| self.comps[i] + rhs.comps[i]),
        }
    }
}

impl Sub for RElem {
    type Output = RElem;
    fn sub(self, rhs: RElem) -> RElem {
        Self {
            comps: [0, 1, 2].map(|i| self.comps[i] - rhs.comps[i]),
        }
    }
}

impl Mul for RElem {
    type Output = RElem;
    fn mul(self, rhs: RElem) -> RElem {
        Self {
            comps: [0, 1, 2].map(|i| self.comps[i] * rhs.comps[i]),
        }
    }
}

impl Neg for RElem {
    type Output = RElem;
    fn neg(self) -> RElem {
        Self {
            comps: self.comps.map(|c| -c),
        }
    }
}

impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.comps;
        write!(f, "({a},{b},{c})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn f7() -> FieldCtx {
        FieldCtx::new(7).unwrap()
    }

    fn std7(a: i64, b: i64, c: i64) -> RElem {
        let f = f7();
        RElem::from_standard(f.elem(a), f.elem(b), f.elem(c))
    }

    fn comps7(x: [i64; 3]) -> RElem {
        let f = f7();
        RElem::from_components(x.map(|v| f.elem(v)))
    }

    // Multiply in the standard basis using v^3 = v directly.
    fn standard_mul(ctx: FieldCtx, x: (i64, i64, i64), y: (i64, i64, i64)) -> (Fq, Fq, Fq) {
        let (a, b, c) = x;
        let (d, e, f) = y;
        // (a + bv + cv^2)(d + ev + fv^2) with v^3 = v, v^4 = v^2
        let k0 = a * d;
        let k1 = a * e + b * d + (b * f + c * e);
        let k2 = a * f + b * e + c * d + c * f;
        (ctx.elem(k0), ctx.elem(k1), ctx.elem(k2))
    }

    #[test]
    fn basis_change_examples() {
        assert_eq!(std7(1, 0, 0), comps7([1, 1, 1]));
        assert_eq!(std7(0, 1, 0), comps7([0, 1, 6]));
        assert_eq!(std7(4, 2, 6), comps7([4, 5, 1]));
        let f = f7();
        assert_eq!(comps7([1, 1, 1]).to_standard(), (f.one(), f.zero(), f.zero()));
        assert_eq!(comps7([1, 0, 0]).to_standard(), (f.one(), f.zero(), f.elem(6)));
        let half = f.elem(2).inv().unwrap();
        assert_eq!(comps7([0, 1, 0]).to_standard(), (f.zero(), half, half));
    }

    #[test]
    fn idempotent_products() {
        let f = f7();
        let [v1, v2, v3] = [1, 2, 3].map(|i| RElem::idempotent(f, i));
        assert!((v1 * v2).is_zero());
        assert_eq!(v2 * v2, v2);
        assert_eq!(v1 + v2 + v3, RElem::one(f));
        // v * v = v^2
        let v = std7(0, 1, 0);
        assert_eq!(v * v, comps7([0, 1, 1]));
        assert_eq!(v * v, std7(0, 0, 1));
        // v^3 = v
        assert_eq!(v * v * v, v);
    }

    #[test]
    fn projections() {
        let f = f7();
        let a = f.elem(5);
        let v1a = RElem::idempotent(f, 1).scale(a);
        assert_eq!(v1a.project(1), a);
        assert!(v1a.project(2).is_zero());
        assert_eq!(std7(5, 1, 2).project(3), f.elem(6));
    }

    #[test]
    fn randomized_ring_laws() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for p in [3u64, 5, 7, 11] {
            let ctx = FieldCtx::new(p).unwrap();
            let pi = p as i64;
            for _ in 0..300 {
                let mut draw = || {
                    (
                        rng.random_range(0..pi),
                        rng.random_range(0..pi),
                        rng.random_range(0..pi),
                    )
                };
                let (x, y, z) = (draw(), draw(), draw());
                let to = |t: (i64, i64, i64)| {
                    RElem::from_standard(ctx.elem(t.0), ctx.elem(t.1), ctx.elem(t.2))
                };
                let (rx, ry, rz) = (to(x), to(y), to(z));

                // conversion round trip
                let (a, b, c) = rx.to_standard();
                assert_eq!((a, b, c), (ctx.elem(x.0), ctx.elem(x.1), ctx.elem(x.2)));

                // product agrees with standard-basis multiplication
                assert_eq!((rx * ry).to_standard(), standard_mul(ctx, x, y));

                // projections are evaluations at v = 0, 1, -1
                for (i, v) in [(1, 0i64), (2, 1), (3, -1)] {
                    assert_eq!(rx.project(i), ctx.elem(x.0 + x.1 * v + x.2 * v * v));
                }

                // reconstitution r = sum P_{v_i}(r) v_i
                let recon = (1..=3).fold(RElem::zero(ctx), |acc, i| {
                    acc + RElem::idempotent(ctx, i).scale(rx.project(i))
                });
                assert_eq!(recon, rx);

                assert_eq!(rx * (ry + rz), rx * ry + rx * rz);
                assert_eq!((rx * ry) * rz, rx * (ry * rz));
                for i in 1..=3 {
                    assert_eq!((rx * ry).project(i), rx.project(i) * ry.project(i));
                    assert_eq!((rx + ry).project(i), rx.project(i) + ry.project(i));
                }
            }
        }
    }

    #[test]
    fn standard_text() {
        let f = f7();
        let r = RElem::parse_standard(f, "4,2,6").unwrap();
        assert_eq!(r, std7(4, 2, 6));
        assert_eq!(r.to_standard_text(), "4,2,6");
        assert!(RElem::parse_standard(f, "4,2").is_err());
        assert!(RElem::parse_standard(f, "4,q,6").is_err());
    }
}
