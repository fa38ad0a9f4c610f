//! Exact-arithmetic representation theory for |1|-graded (AHS) parabolic
//! geometries: tensor-product decompositions, Casimir constants, invariance
//! conformal weights, and the complete curvature-corrected formulas of the
//! standard invariant differential operators of any order.
//!
//! Everything is computed over exact rationals; there is no floating point
//! anywhere in the library. The coefficient calculus in [`coeffs`] is generic
//! over the scalar type, with the concrete rational instantiation fixed by
//! the aliases at the crate root.

pub mod casimir;
pub mod catalog;
pub mod coeffs;
pub mod decomp;
pub mod error;
mod linalg;
pub mod operator;
pub mod rootsystem;

pub use error::{Error, Result};

/// The scalar used by all lattice and Weyl-group machinery: an exact,
/// always-reduced big rational with positive denominator.
pub type Rat = num_rational::BigRational;

/// Exact integer used for dimensions and multiplicity bookkeeping.
pub type Int = num_bigint::BigInt;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the exact fraction `n / d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Render a rational as `p` or `p/q`, never as a decimal.
pub fn fmt_rat(x: &Rat) -> String {
    x.to_string()
}

/// Parse `p` or `p/q` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        t.trim().parse::<Int>().map_err(|_| Error::ParseWeight(s.to_string()))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den == Int::from(0) {
                return Err(Error::ParseWeight(s.to_string()));
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}
