//! Serde helpers: exact numbers travel as strings, never as floats.

use num::{BigRational, BigUint};
use serde::Serializer;

pub(crate) fn rational<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(&format_args!("{}/{}", r.numer(), r.denom()))
}

pub(crate) fn option_rational<S: Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => rational(r, s),
        None => s.serialize_none(),
    }
}

pub(crate) fn biguint<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Display form used by reports and the CLI.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
