//! Double cyclic codes over `R = F_q + vF_q + v^2F_q` with `v^3 = v`.
//!
//! `R` splits as three copies of `F_q` through the idempotents `v1, v2, v3`,
//! so a code over `R` is three `F_q` codes glued together. This crate keeps
//! that split explicit: ring elements and polynomials are stored by
//! component, and every structural statement is checked per component.
//!
//! ```
//! use double_cyclic::examples::example1;
//! use double_cyclic::matrix::distance::min_distance;
//!
//! let code = example1();
//! for g in code.generator_matrices() {
//!     assert_eq!((g.ncols(), g.rank()), (10, 5));
//!     assert_eq!(min_distance(&g, 1_000_000).unwrap(), Some(5));
//! }
//! ```

pub mod cli;
pub mod code;
pub mod dual;
pub mod error;
pub mod examples;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod rpoly;
pub mod verify;

pub use code::{circ, CodeSpec, Codeword};
pub use dual::{dual_code, verify_duality, DualResult, Method};
pub use error::{Error, Result};
pub use field::{FieldCtx, Fq};
pub use matrix::FqMatrix;
pub use poly::Poly;
pub use ring::RElem;
pub use rpoly::RPoly;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/ring.md")]
    mod ring {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/duals.md")]
    mod duals {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
