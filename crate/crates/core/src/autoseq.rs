//! Automaticity analysis of the leading-coefficient sequence.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::series::LaurentSeries;

/// Generating series theta = sum_{i=1..N} lambda_i T^{-i}, known down to
/// exponent -N.
pub fn coefficient_series(field: &Field, lambdas: &[u32]) -> Result<LaurentSeries> {
    if lambdas.is_empty() {
        return Err(Error::InvalidInput("need at least one coefficient".into()));
    }
    Ok(LaurentSeries::from_window(
        field.clone(),
        -1,
        lambdas.to_vec(),
        Some(-(lambdas.len() as i64)),
    ))
}
