//! Thin wrappers over the log-gamma routine plus the factorial helpers the
//! rules need.

use crate::error::{Error, Result};

/// `ln Γ(x)` for `x > 0`.
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma called with non-positive argument {x}");
    libm::lgamma_r(x).0
}

/// `ln |Γ(x)|` and the sign of `Γ(x)`; errors at the poles.
pub fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Domain(format!("gamma function has a pole at {x}")));
    }
    let (v, s) = libm::lgamma_r(x);
    Ok((v, if s < 0 { -1.0 } else { 1.0 }))
}

/// `ln n!`, exact table lookup for small `n`.
pub fn ln_factorial(n: usize) -> f64 {
    if n < FACTORIALS.len() {
        FACTORIALS[n].ln()
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

/// `n!` as a double; exact through `n = 22`.
pub fn factorial(n: usize) -> f64 {
    if n < FACTORIALS.len() {
        FACTORIALS[n]
    } else {
        ln_gamma(n as f64 + 1.0).exp()
    }
}

const FACTORIALS: [f64; 23] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
];

/// `ln ∏_{j=0}^{count-1} (start + j)`, the log of a rising factorial.
pub fn ln_rising(start: f64, count: usize) -> f64 {
    (0..count).map(|j| (start + j as f64).ln()).sum()
}
