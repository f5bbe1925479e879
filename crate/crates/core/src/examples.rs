//! Worked example: a code of length `(5, 5)` over `F_7` whose three
//! component codes are `[10, 5, 5]` codes.

use crate::code::CodeSpec;
use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::ring::RElem;
use crate::rpoly::RPoly;

/// Standard-basis coefficients `a,b,c` (meaning `a + bv + cv^2`) of `ell`,
/// ascending in `x`.
pub const EXAMPLE1_ELL_STD: [&str; 4] = ["5,1,2", "2,4,4", "3,6,0", "4,2,6"];

/// `iota = 1 + x + x^2 + x^3 + x^4`, `theta = x + 6` and `ell` from
/// [`EXAMPLE1_ELL_STD`], with `q = 7`, `m = n = 5`.
pub fn example1() -> CodeSpec {
    let ctx = FieldCtx::new(7).expect("7 is prime");
    let coeffs: Vec<RElem> = EXAMPLE1_ELL_STD
        .iter()
        .map(|t| RElem::parse_standard(ctx, t).expect("well-formed"))
        .collect();
    CodeSpec::new(
        ctx,
        5,
        5,
        RPoly::splat(Poly::new(ctx, &[1, 1, 1, 1, 1])),
        RPoly::from_standard(ctx, &coeffs),
        RPoly::splat(Poly::new(ctx, &[6, 1])),
    )
    .expect("valid generators")
}
