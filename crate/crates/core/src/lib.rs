//! Exact graded characters of simple modules of restricted rational
//! Cherednik algebras for the wreath products `C_l wr S_n` at generic
//! parameters.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalars`]: rationals, cyclotomic fields, Laurent polynomials and
//!   rational functions in `t`.
//! * [`combinatorics`]: partitions, multipartitions and their statistics.
//! * [`symfunc`]: symmetric functions in the power-sum basis, `S_n`
//!   characters, plethysm and the `q = t` specialization `G_lambda(x; t, t)`.
//! * [`wreath`]: multisymmetric functions, wreath character tables, the
//!   Frobenius map and the `t,t`-Kostka-Macdonald coefficients.
//! * [`cherednik`]: the decomposition matrices `C_Delta`, `D_Delta`, `C_L`.
//!
//! ```
//! use wreathmac::cherednik::c_l;
//!
//! let cl = c_l(2, 2).unwrap();
//! assert_eq!(cl.size(), 5);
//! assert_eq!(cl.entry(2, 2).to_string(), "t^2+1");
//! ```

pub mod cache;
pub mod cherednik;
pub mod combinatorics;
pub mod error;
pub mod golden;
pub mod render;
pub mod scalars;
pub mod symfunc;
pub mod verify;
pub mod wreath;

pub use error::{Error, Result};
