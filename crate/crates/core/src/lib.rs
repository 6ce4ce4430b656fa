//! Exact k-nomial coefficients and the triangle of numbers of order k.
//!
//! Line `n` of the triangle of order `k` lists the coefficients of
//! `(1 + x + ... + x^(k-1))^n`. Order 2 is the classical Pascal triangle.
//! Lines are produced by a running window sum over the previous line, and
//! the [`identities`] module checks the classical properties of the
//! triangle against an independent polynomial-expansion oracle.
//!
//! With the default `parallel` feature, [`identities::verify_all`] spreads
//! its independent checks over a rayon pool. Without it everything runs on
//! the calling thread.

mod error;
pub mod identities;
mod par;
mod params;
mod triangle;

pub use error::Error;
pub use params::{make_params, KNomialParams, Parity};
pub use triangle::{
    coefficient, next_row, row, row_width, triangle, CoefficientQuery, Row, Triangle,
};

pub use num_bigint::{BigInt, BigUint};

pub type Result<T, E = Error> = std::result::Result<T, E>;
