//! Trombetti-Zhou maximum rank distance codes over F_{q^{2n}}: code
//! construction, encoding, and polynomial-time interpolation-based decoding
//! up to the unique decoding radius, including the boundary case where the
//! free parameter of the key equation is pinned down by a quadratic.
//!
//! Modules:
//! - [`ffield`]: exact arithmetic in F_{p^d} with the subfield tower
//!   F_q < F_{q^n} < F_{q^{2n}}, Frobenius machinery, square roots, and
//!   dense linear algebra.
//! - [`linpoly`]: linearized polynomials in the twisted monomial basis
//!   x^{[i]} = x^{q^{si}}, Dickson matrices, kernels, Moore interpolation.
//! - [`code`]: code parameters, gamma search, and encoding.
//! - [`bm`]: shift-register synthesis (Berlekamp-Massey over twisted taps)
//!   and the one-parameter solution family on the decoding boundary.
//! - [`decoder`]: the full interpolation decoder.
//! - [`oracle`]: brute-force ground truth used by tests and verification.
//! - [`bench`]: operation-count scaling harness.

pub mod bench;
pub mod bm;
pub mod code;
pub mod decoder;
mod error;
pub mod ffield;
pub mod linpoly;
pub mod oracle;

pub use error::{Error, FailureDiagnostic, Result};
pub use ffield::{Fe, FieldCtx};
