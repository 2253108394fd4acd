//! First-order Newton polygon analysis of monic integer polynomials at a prime,
//! and a monogenity classifier for the pure fields defined by
//! `x^(2^u 3^v 5^t) - m`.
//!
//! The layers build on each other:
//!
//! * [`arith`]: valuations, square-free testing, irreducible counts.
//! * [`ffpoly`]: polynomials over `F_p` and `F_p[x]/(phi)`, factorization.
//! * [`zxpoly`]: integer polynomials, parsing, phi-adic expansions, discriminants.
//! * [`polygon`]: Newton polygons, residual polynomials, the phi-index.
//! * [`ore`]: per-prime analysis (regularity, index, prime ideal data).
//! * [`monogen`]: maximality test, common index divisor rules, classifier.
//! * [`oracle`]: deliberately naive cross-checks used by the test suites.
//! * [`cli`]: the command-line front end.

pub mod arith;
pub mod cli;
pub mod error;
pub mod ffpoly;
pub mod monogen;
pub mod oracle;
pub mod ore;
pub mod polygon;
pub mod zxpoly;

pub use error::{Error, Result};
