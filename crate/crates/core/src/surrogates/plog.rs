use crate::error::{Error, Result};

/// Signed logarithmic squashing: `ln(1 + y)` for `y >= 0`, `-ln(1 - y)` below.
pub fn plog(y: f64) -> Result<f64> {
    if !y.is_finite() {
        return Err(Error::NumericInput);
    }
    Ok(if y >= 0.0 { y.ln_1p() } else { -(-y).ln_1p() })
}

pub fn plog_inv(z: f64) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::NumericInput);
    }
    Ok(if z >= 0.0 { z.exp_m1() } else { -(-z).exp_m1() })
}
