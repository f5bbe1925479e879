//! Dual codes, computed from closed-form generators and independently from
//! nullspaces.
//!
//! With `g_i = gcd(iota_i, ell_i)`, `iota~_i = iota_i / g_i`, `ell~_i = ell_i / g_i`
//! and `*` the monic reciprocal, the dual of `C` is generated by
//!
//! ```text
//! iota_bar  = (x^m - 1) / g*
//! theta_bar = (x^n - 1) g* / (iota* theta*)
//! ell_bar   = rho (x^m - 1) / iota*
//! ```
//!
//! where `rho_i` solves
//! `lambda_i x^{l-1-deg ell_i} ell~*_i rho_i + beta_i x^{l-1-deg theta_i} ≡ 0 (mod iota~*_i)`,
//! `beta_i` being the constant term of `theta_i` and `lambda_i` the lowest
//! nonzero coefficient of `ell_i`. These two scalars come from the fact that
//! the pairing [`circ`](crate::code::circ) reverses coefficients without
//! normalizing.

use crate::code::{circ, CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::RElem;
use crate::rpoly::RPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Formula,
    Nullspace,
}

/// A dual code together with how it was obtained.
#[derive(Clone, Debug)]
pub struct DualResult {
    pub code: CodeSpec,
    /// The multiplier in `ell_bar = rho (x^m - 1)/iota*`; only the formula route has one.
    pub rho: Option<RPoly>,
    pub method: Method,
}

impl DualResult {
    pub fn iota_bar(&self) -> &RPoly {
        self.code.iota()
    }

    pub fn ell_bar(&self) -> &RPoly {
        self.code.ell()
    }

    pub fn theta_bar(&self) -> &RPoly {
        self.code.theta()
    }
}

/// `(x^m - 1) / gcd(iota_i, ell_i)*` per component.
pub fn dual_iota(code: &CodeSpec) -> RPoly {
    let xm1 = Poly::x_pow_minus_one(code.ctx(), code.m());
    code.iota_ell_gcd()
        .map(|g| xm1.div_exact(&g.reciprocal()).expect("g* divides x^m - 1"))
}

/// `(x^n - 1) gcd(iota_i, ell_i)* / (iota_i* theta_i*)` per component.
pub fn dual_theta(code: &CodeSpec) -> Result<RPoly> {
    let xn1 = Poly::x_pow_minus_one(code.ctx(), code.n());
    let g = code.iota_ell_gcd();
    let comps = [1, 2, 3].map(|i| {
        let num = &xn1 * &g.component(i).reciprocal();
        let den = &code.iota().component(i).reciprocal() * &code.theta().component(i).reciprocal();
        num.div_exact(&den).map_err(|_| {
            Error::InvariantViolation(format!("dual theta division is not exact in component {i}"))
        })
    });
    let [a, b, c] = comps;
    Ok(RPoly::from_components([a?, b?, c?]))
}

/// `x^e mod f` for a modulus dividing `x^m - 1`, where `x` has order dividing `m`.
fn x_pow_mod(e: i64, m: usize, f: &Poly) -> Result<Poly> {
    let e = e.rem_euclid(m as i64) as usize;
    Poly::monomial(f.ctx(), 1, e).rem(f)
}

/// Ways of writing `rho`. [`RhoForm::Congruence`] is the one used by
/// [`dual_ell`]; the others are kept so they can be compared against the
/// nullspace dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoForm {
    /// `-(beta/lambda) x^{l-1-deg theta} (x^{l-1-deg ell} ell~*)^{-1} mod iota~*`.
    Congruence,
    /// `-x^{l-deg theta-1} (x^{l-deg ell} ell~*)^{-1} mod iota~*`.
    UnscaledShifted,
    /// `-x^{l-deg theta+deg iota} (ell~*)^{-1} mod iota~*`.
    EllInverse,
    /// `-x^{l-deg theta+deg iota} (iota~*)^{-1} mod iota~*`.
    IotaInverse,
}

impl RhoForm {
    pub const ALL: [RhoForm; 4] = [
        RhoForm::Congruence,
        RhoForm::UnscaledShifted,
        RhoForm::EllInverse,
        RhoForm::IotaInverse,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            RhoForm::Congruence => "-(beta/lambda) x^(l-1-deg theta) (x^(l-1-deg ell) ell~*)^-1",
            RhoForm::UnscaledShifted => "-x^(l-deg theta-1) (x^(l-deg ell) ell~*)^-1",
            RhoForm::EllInverse => "-x^(l-deg theta+deg iota) (ell~*)^-1",
            RhoForm::IotaInverse => "-x^(l-deg theta+deg iota) (iota~*)^-1",
        }
    }
}

/// `rho_i` in the given form, or `0` when `ell_i = 0` or `iota~_i` is constant.
pub fn rho_component(code: &CodeSpec, i: usize, form: RhoForm) -> Result<Poly> {
    let ctx = code.ctx();
    let (m, l) = (code.m(), code.l() as i64);
    let iota = code.iota().component(i);
    let ell = code.ell().component(i);
    let theta = code.theta().component(i);
    let g = iota.gcd(ell)?;
    let iota_t = iota.div_exact(&g)?;
    if ell.is_zero() || iota_t.is_constant() {
        return Ok(Poly::zero(ctx));
    }
    let ell_t = ell.div_exact(&g)?;
    let modulus = iota_t.reciprocal();
    let (dl, dt, di) = (ell.deg0() as i64, theta.deg0() as i64, iota.deg0() as i64);
    let rho = match form {
        RhoForm::Congruence => {
            let beta = theta.raw(0);
            let lambda = ell.raw(ell.valuation().expect("nonzero"));
            let scale = ctx.mul(beta, ctx.inv(lambda)?);
            let inv = ell_t.reciprocal().inv_mod(&modulus)?;
            x_pow_mod(dl - dt, m, &modulus)?
                .mulmod(&inv, &modulus)?
                .scale(ctx.neg(scale))
        }
        RhoForm::UnscaledShifted => {
            let inv = ell_t.reciprocal().inv_mod(&modulus)?;
            x_pow_mod(dl - dt - 1, m, &modulus)?.mulmod(&inv, &modulus)?.scale(ctx.neg(1))
        }
        RhoForm::EllInverse => {
            let inv = ell_t.reciprocal().inv_mod(&modulus)?;
            x_pow_mod(l - dt + di, m, &modulus)?.mulmod(&inv, &modulus)?.scale(ctx.neg(1))
        }
        RhoForm::IotaInverse => {
            let inv = iota_t.reciprocal().inv_mod(&modulus)?;
            x_pow_mod(l - dt + di, m, &modulus)?.mulmod(&inv, &modulus)?.scale(ctx.neg(1))
        }
    };
    Ok(rho)
}

fn ell_bar_from(code: &CodeSpec, form: RhoForm) -> Result<(RPoly, RPoly)> {
    let xm1 = Poly::x_pow_minus_one(code.ctx(), code.m());
    let [r1, r2, r3] = [1, 2, 3].map(|i| rho_component(code, i, form));
    let rho = RPoly::from_components([r1?, r2?, r3?]);
    let ell_bar = RPoly::from_components([1, 2, 3].map(|i| {
        let cof = xm1
            .div_exact(&code.iota().component(i).reciprocal())
            .expect("iota* divides x^m - 1");
        (rho.component(i) * &cof).rem(&xm1).expect("nonzero modulus")
    }));
    Ok((ell_bar, rho))
}

/// `(ell_bar, rho)` with `rho` solved from the orthogonality congruence.
pub fn dual_ell(code: &CodeSpec) -> Result<(RPoly, RPoly)> {
    ell_bar_from(code, RhoForm::Congruence).map_err(|e| match e {
        Error::NotInvertible => {
            Error::InvariantViolation("reciprocal of ell~ is not invertible mod iota~*".into())
        }
        other => other,
    })
}

/// The dual built with `rho` in the given form. Fails if the form is
/// undefined (a non-invertible factor) or yields generators that do not
/// form a valid triple.
pub fn dual_with_rho_form(code: &CodeSpec, form: RhoForm) -> Result<CodeSpec> {
    let (ell_bar, _) = ell_bar_from(code, form)?;
    CodeSpec::new(code.ctx(), code.m(), code.n(), dual_iota(code), ell_bar, dual_theta(code)?)
}

fn formula_dual(code: &CodeSpec) -> Result<DualResult> {
    let (ell_bar, rho) = dual_ell(code)?;
    let dual = CodeSpec::new(code.ctx(), code.m(), code.n(), dual_iota(code), ell_bar, dual_theta(code)?)
        .map_err(|e| Error::InvariantViolation(format!("closed-form dual generators rejected: {e}")))?;
    Ok(DualResult {
        code: dual,
        rho: Some(rho),
        method: Method::Formula,
    })
}

/// Basis of `C_i^⊥` for each component, as codewords `v_i * row`.
pub fn nullspace_words(code: &CodeSpec) -> Vec<Codeword> {
    let ctx = code.ctx();
    let m = code.m();
    let len = m + code.n();
    let zero = vec![0u32; len];
    let mut words = Vec::new();
    for (i, g) in code.generator_matrices().iter().enumerate() {
        for row in g.nullspace().row_iter() {
            let mut vecs: [&[u32]; 3] = [&zero, &zero, &zero];
            vecs[i] = row;
            words.push(Codeword::from_component_vectors(ctx, m, vecs));
        }
    }
    if words.is_empty() {
        words.push(Codeword::zero(ctx, m, code.n()));
    }
    words
}

fn nullspace_dual(code: &CodeSpec) -> Result<DualResult> {
    let dual = CodeSpec::canonicalize(code.ctx(), code.m(), code.n(), &nullspace_words(code))?;
    Ok(DualResult {
        code: dual,
        rho: None,
        method: Method::Nullspace,
    })
}

pub fn dual_code(code: &CodeSpec, method: Method) -> Result<DualResult> {
    match method {
        Method::Formula => formula_dual(code),
        Method::Nullspace => nullspace_dual(code),
    }
}

/// Outcome of [`verify_duality`].
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub dim_c: usize,
    pub dim_d: usize,
    /// `3(m + n)`.
    pub ambient: usize,
    /// First `(d, c, <d, c>)` with a nonzero inner product, if any. `c` is a
    /// shift of a generator of `C`, `d` a generator of `D`.
    pub witness: Option<(Codeword, Codeword, RElem)>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none() && self.dim_c + self.dim_d == self.ambient
    }
}

/// Whether `D = C^⊥`: every generator of `D` is orthogonal to every shift
/// of every generator of `C`, and the dimensions are complementary.
pub fn verify_duality(c: &CodeSpec, d: &CodeSpec) -> DualityReport {
    let l = c.l();
    let mut witness = None;
    'outer: for h in d.generators() {
        for g in c.generators() {
            let mut shifted = g.clone();
            for _ in 0..l {
                let ip = h.inner(&shifted);
                if !ip.is_zero() {
                    witness = Some((h.clone(), shifted, ip));
                    break 'outer;
                }
                shifted = shifted.shift();
            }
        }
    }
    DualityReport {
        dim_c: c.measured_dimension(),
        dim_d: d.measured_dimension(),
        ambient: 3 * (c.m() + c.n()),
        witness,
    }
}

/// `circ(h, g)` for every generator `h` of `D` and `g` of `C`; all vanish iff
/// the generators of `D` are orthogonal to `C`.
pub fn circ_orthogonal(c: &CodeSpec, d: &CodeSpec) -> bool {
    d.generators()
        .iter()
        .all(|h| c.generators().iter().all(|g| circ(h, g).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::example1;
    use crate::field::FieldCtx;

    #[test]
    fn example1_dual_both_ways() {
        let c = example1();
        let f = dual_code(&c, Method::Formula).unwrap();
        let n = dual_code(&c, Method::Nullspace).unwrap();
        assert_eq!(f.code, n.code);
        let ctx = c.ctx();
        assert_eq!(f.iota_bar(), &RPoly::splat(Poly::x_pow_minus_one(ctx, 5)));
        assert_eq!(f.theta_bar(), &RPoly::one(ctx));
        // ell_bar is reduced mod iota_bar = x^5 - 1
        assert_eq!(f.ell_bar().component(1), &Poly::new(ctx, &[6, 5, 1, 0, 2]));
        assert_eq!(f.ell_bar().component(2), &Poly::new(ctx, &[1, 6, 0, 2, 5]));
        assert_eq!(f.ell_bar().component(3), &Poly::new(ctx, &[1, 5, 0, 6, 2]));
        assert!(verify_duality(&c, &f.code).passed());
        assert!(circ_orthogonal(&c, &f.code));
    }

    #[test]
    fn zero_code_dual_is_full() {
        let ctx = FieldCtx::new(5).unwrap();
        let z = CodeSpec::zero(ctx, 3, 2);
        for method in [Method::Formula, Method::Nullspace] {
            let d = dual_code(&z, method).unwrap();
            assert_eq!(d.code, CodeSpec::full(ctx, 3, 2));
            assert!(d.ell_bar().is_zero());
        }
        assert!(verify_duality(&z, &CodeSpec::full(ctx, 3, 2)).passed());
    }

    #[test]
    fn separable_dual() {
        let ctx = FieldCtx::new(7).unwrap();
        let iota = RPoly::splat(Poly::new(ctx, &[6, 1]));
        let theta = RPoly::splat(Poly::new(ctx, &[1, 1, 1, 1, 1]));
        let c = CodeSpec::new(ctx, 5, 5, iota.clone(), RPoly::zero(ctx), theta.clone()).unwrap();
        let d = dual_code(&c, Method::Formula).unwrap();
        assert!(d.rho.as_ref().unwrap().is_zero());
        assert!(d.ell_bar().is_zero());
        let xm1 = RPoly::splat(Poly::x_pow_minus_one(ctx, 5));
        assert_eq!(d.iota_bar(), &iota.reciprocal().quotient_of(&xm1).unwrap());
        assert_eq!(d.theta_bar(), &theta.reciprocal().quotient_of(&xm1).unwrap());
        assert!(d.code.is_separable());
    }

    #[test]
    fn self_pairing_of_example1_fails_with_witness() {
        let c = example1();
        let r = verify_duality(&c, &c);
        assert!(!r.passed());
        let (h, g, ip) = r.witness.unwrap();
        assert_eq!(h.inner(&g), ip);
        assert!(!ip.is_zero());
    }
}
