//! Exact arithmetic in the field `Q(r, s)`.
//!
//! [`Poly2`] is a sparse integer polynomial in `r` and `s`; [`RatF`] is a
//! reduced quotient of two of them. The parameters are treated as independent
//! transcendentals, so `r^m s^n = 1` only for `m = n = 0`.

mod dense;
pub mod poly;
pub mod ratf;

pub use poly::{grlex, Exp2, Poly2};
pub use ratf::{RatF, RatfInterp};
