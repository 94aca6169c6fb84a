//! Exact rationals used for degrees, densities, ε and every bound.

use num_traits::Zero;

/// Reduced fraction with `i128` parts.
pub type Rational = num_rational::Ratio<i128>;

/// Float rendering for display only; never used in comparisons.
pub fn to_f64(q: &Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{0}` is not a rational of the form p or p/q")]
pub struct ParseRationalError(pub alloc::string::String);

/// Parses `p` or `p/q` (optional leading `-`, no whitespace inside).
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.into());
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let p: i128 = p.parse().map_err(|_| err())?;
    let q: i128 = q.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(p, q))
}
