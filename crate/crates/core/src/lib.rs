//! Exact verification toolkit for the graded ring of Siegel modular forms of
//! degree two and level five.
//!
//! Everything is computed over the rationals or inside the cyclotomic field of
//! conductor 40, so every check is an exact equality.

pub mod cyclotomic;
pub mod error;
pub mod fourier;
pub mod gendata;
pub mod hilbert;
pub mod invariants;
pub mod jacobian;
pub mod lattice;
pub mod linalg;
pub mod polyring;
pub mod ranks;
pub mod weilrep;

pub use error::{Error, Result};
pub use fourier::{Exponent, FourierSeries, Var};
pub use gendata::GeneratorSet;
pub use polyring::GradedPoly;

/// Exact rational numbers used throughout.
pub type Rational = num_rational::BigRational;

/// Integer as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The fraction `n / d` as a [`Rational`]. Panics if `d` is zero.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
