//! Exact symbolic models of the two-parameter quantum algebra `U = U+_{r,s}(B2)`,
//! its localizations and quantum torus, its derivations, and the Hopf algebras
//! `U>=0` and its augmented version, together with the checks that certify
//! their identities at exact arithmetic over `Q(r, s)`.

pub mod algebras;
pub mod coeff;
pub mod derivations;
pub mod error;
pub mod expr;
pub mod free;
pub mod hopf;
pub mod linalg;
pub mod pbw;
pub mod report;
pub mod suites;

pub use coeff::{Poly2, RatF};
pub use error::{Error, Result};
