//! Dimension and cardinality formulas, each checked against ranks.
//!
//! All cardinalities are `q`-exponents: a count of `q^e` is reported as `e`.

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::matrix::FqMatrix;

/// Exponents of `|C|`, `|C_m|`, `|C_n|`, `|(C^⊥)_m|`, `|(C^⊥)_n|`, where
/// `C_m` / `C_n` are the projections onto the left / right block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub card_c: usize,
    pub card_cm: usize,
    pub card_cn: usize,
    pub card_dual_m: usize,
    pub card_dual_n: usize,
}

struct Degrees {
    iota: usize,
    theta: usize,
    k: usize,
}

fn degrees(code: &CodeSpec) -> Degrees {
    let sum = |f: &dyn Fn(usize) -> usize| (1..=3).map(f).sum::<usize>();
    Degrees {
        iota: sum(&|i| code.iota().component(i).deg0()),
        theta: sum(&|i| code.theta().component(i).deg0()),
        k: code.k().iter().sum(),
    }
}

/// `3m + 3n - Σ(deg iota_i + deg theta_i)`.
pub fn dimension_formula(code: &CodeSpec) -> usize {
    let d = degrees(code);
    3 * code.m() + 3 * code.n() - d.iota - d.theta
}

/// The dimension formula, after asserting that it equals `Σ rank(G_i)`.
pub fn code_dimension(code: &CodeSpec) -> Result<usize> {
    let formula = dimension_formula(code);
    let measured = code.measured_dimension();
    if formula != measured {
        return Err(Error::InvariantViolation(format!(
            "dimension formula gives {formula}, generator ranks give {measured}"
        )));
    }
    Ok(formula)
}

/// Exponents from the degree data.
///
/// `|(C^⊥)_m| = q^{Σ deg iota_i}`: the left projection of the dual is the
/// orthogonal complement of `{u : (u | 0) in C} = <iota>`, which has
/// dimension `m - deg iota_i` per component.
pub fn formula_counts(code: &CodeSpec) -> Counts {
    let d = degrees(code);
    let (m, n) = (code.m(), code.n());
    Counts {
        card_c: dimension_formula(code),
        card_cm: 3 * m + d.k - d.iota,
        card_cn: 3 * n - d.theta,
        card_dual_m: d.iota,
        card_dual_n: d.theta + d.k,
    }
}

/// The left-dual exponent `Σ deg theta_i` in the form found in the
/// literature; kept so tests can show it disagrees with measurement.
pub fn printed_dual_m_exponent(code: &CodeSpec) -> usize {
    degrees(code).theta
}

/// Exponents measured as ranks of the generator matrices, their column
/// blocks and their nullspaces.
pub fn measured_counts(code: &CodeSpec) -> Counts {
    let (m, n) = (code.m(), code.n());
    let gs = code.generator_matrices();
    let duals: Vec<FqMatrix> = gs.iter().map(FqMatrix::nullspace).collect();
    let left = |g: &FqMatrix| g.columns(0..m).rank();
    let right = |g: &FqMatrix| g.columns(m..m + n).rank();
    Counts {
        card_c: gs.iter().map(FqMatrix::rank).sum(),
        card_cm: gs.iter().map(left).sum(),
        card_cn: gs.iter().map(right).sum(),
        card_dual_m: duals.iter().map(left).sum(),
        card_dual_n: duals.iter().map(right).sum(),
    }
}

/// Formula exponents, after asserting that each equals its measured value.
pub fn code_counts(code: &CodeSpec) -> Result<Counts> {
    let f = formula_counts(code);
    let m = measured_counts(code);
    if f != m {
        return Err(Error::InvariantViolation(format!(
            "cardinality formulas {f:?} disagree with ranks {m:?}"
        )));
    }
    Ok(f)
}

fn component_sizes(code: &CodeSpec) -> Option<Vec<u128>> {
    let q = code.ctx().p() as u128;
    code.generator_matrices()
        .iter()
        .map(|g| q.checked_pow(g.rank() as u32))
        .collect()
}

/// `|C|` from the component sizes as a product, `Π q^{dim C_i}`; `None` on overflow.
pub fn card_product_form(code: &CodeSpec) -> Option<u128> {
    component_sizes(code)?
        .into_iter()
        .try_fold(1u128, |acc, s| acc.checked_mul(s))
}

/// `|C|` from the component sizes as a sum, `Σ q^{dim C_i}`; `None` on overflow.
pub fn card_sum_form(code: &CodeSpec) -> Option<u128> {
    component_sizes(code)?
        .into_iter()
        .try_fold(0u128, |acc, s| acc.checked_add(s))
}
