//! The three classical families: polynomial evaluation by three-term
//! recurrence, weights, normalization constants `k_n`, and the normalized
//! weighted functions `q_n = ω Q_n / k_n` (`ℓ_n^(α)`, `h_n`, `p_n^(α,β)`).

mod identity;

pub use identity::{evaluate_identity, family_identity_residual, Identity, IdentityEvaluation};

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::special::{ln_factorial, ln_gamma};

/// Largest degree accepted by the public operations.
pub const N_MAX: usize = 120;

/// Logs beyond this magnitude switch `eval_normalized` to a pure log-space product.
const LOG_SCALE_THRESHOLD: f64 = 300.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    Laguerre { alpha: f64 },
    Hermite,
    Jacobi { alpha: f64, beta: f64 },
}

/// A validated family with its parameters.
///
/// Laguerre requires `alpha > -1`, Jacobi requires `alpha, beta > -1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilySpec {
    family: Family,
}

impl FamilySpec {
    pub fn laguerre(alpha: f64) -> Result<Self> {
        check_exponent("alpha", alpha)?;
        Ok(Self {
            family: Family::Laguerre { alpha },
        })
    }

    pub fn hermite() -> Self {
        Self {
            family: Family::Hermite,
        }
    }

    pub fn jacobi(alpha: f64, beta: f64) -> Result<Self> {
        check_exponent("alpha", alpha)?;
        check_exponent("beta", beta)?;
        Ok(Self {
            family: Family::Jacobi { alpha, beta },
        })
    }

    pub fn new(family: Family) -> Result<Self> {
        match family {
            Family::Laguerre { alpha } => Self::laguerre(alpha),
            Family::Hermite => Ok(Self::hermite()),
            Family::Jacobi { alpha, beta } => Self::jacobi(alpha, beta),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn name(&self) -> &'static str {
        match self.family {
            Family::Laguerre { .. } => "laguerre",
            Family::Hermite => "hermite",
            Family::Jacobi { .. } => "jacobi",
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match self.family {
            Family::Laguerre { alpha } | Family::Jacobi { alpha, .. } => Some(alpha),
            Family::Hermite => None,
        }
    }

    pub fn beta(&self) -> Option<f64> {
        match self.family {
            Family::Jacobi { beta, .. } => Some(beta),
            _ => None,
        }
    }

    /// The open interval `(a, b)` of orthogonality.
    pub fn interval(&self) -> (f64, f64) {
        match self.family {
            Family::Laguerre { .. } => (0.0, f64::INFINITY),
            Family::Hermite => (f64::NEG_INFINITY, f64::INFINITY),
            Family::Jacobi { .. } => (-1.0, 1.0),
        }
    }

    /// The family of the weight `ω·Q` from the Rodrigues table: raises every
    /// exponent by `by` (Hermite is unchanged).
    pub fn shifted(&self, by: f64) -> FamilySpec {
        let family = match self.family {
            Family::Laguerre { alpha } => Family::Laguerre { alpha: alpha + by },
            Family::Hermite => Family::Hermite,
            Family::Jacobi { alpha, beta } => Family::Jacobi {
                alpha: alpha + by,
                beta: beta + by,
            },
        };
        FamilySpec { family }
    }

    /// `∫_a^b ω(t) dt`.
    pub fn zeroth_moment(&self) -> f64 {
        match self.family {
            Family::Laguerre { alpha } => ln_gamma(alpha + 1.0).exp(),
            Family::Hermite => PI.sqrt(),
            Family::Jacobi { alpha, beta } => (ln_jacobi_k0(alpha, beta)).exp(),
        }
    }
}

fn check_exponent(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > -1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be a finite number > -1, got {v}")))
    }
}

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n > N_MAX {
        Err(Error::Capability(format!(
            "degree {n} exceeds the supported maximum {N_MAX}"
        )))
    } else {
        Ok(())
    }
}

/// `Q_n(t)` by forward recurrence, no validation.
pub(crate) fn poly(spec: &FamilySpec, n: usize, t: f64) -> f64 {
    match spec.family {
        Family::Laguerre { alpha } => laguerre_poly(alpha, n, t),
        Family::Hermite => hermite_poly(n, t),
        Family::Jacobi { alpha, beta } => jacobi_poly(alpha, beta, n, t),
    }
}

pub(crate) fn laguerre_poly(alpha: f64, n: usize, t: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = -t + alpha + 1.0;
    for k in 2..=n {
        let k = k as f64;
        let next = ((2.0 * k - 1.0 + alpha - t) * cur - (k - 1.0 + alpha) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

pub(crate) fn hermite_poly(n: usize, t: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * t;
    for k in 2..=n {
        let next = 2.0 * t * cur - 2.0 * (k - 1) as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

pub(crate) fn jacobi_poly(alpha: f64, beta: f64, n: usize, t: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let s = alpha + beta;
    let mut cur = 0.5 * ((s + 2.0) * t + (alpha - beta));
    let ab2 = alpha * alpha - beta * beta;
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + s;
        let a1 = 2.0 * k * (k + s) * (c - 2.0);
        let a2 = (c - 1.0) * ab2;
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
        let next = ((a2 + a3 * t) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Q_n(t)` and `Q_n'(t)`, the derivative taken from the family's lowering
/// relation rather than by differencing.
pub(crate) fn poly_with_derivative(spec: &FamilySpec, n: usize, t: f64) -> (f64, f64) {
    let p = poly(spec, n, t);
    if n == 0 {
        return (p, 0.0);
    }
    let dp = match spec.family {
        Family::Laguerre { alpha } => -laguerre_poly(alpha + 1.0, n - 1, t),
        Family::Hermite => 2.0 * n as f64 * hermite_poly(n - 1, t),
        Family::Jacobi { alpha, beta } => {
            0.5 * (n as f64 + alpha + beta + 1.0) * jacobi_poly(alpha + 1.0, beta + 1.0, n - 1, t)
        }
    };
    (p, dp)
}

/// Evaluate `Q_n(t)` (`L_n^(α)`, `H_n` or `P_n^(α,β)`) by three-term recurrence.
pub fn eval_polynomial(spec: &FamilySpec, n: usize, t: f64) -> Result<f64> {
    check_degree(n)?;
    if !t.is_finite() {
        return Err(Error::Domain(format!("evaluation point must be finite, got {t}")));
    }
    Ok(poly(spec, n, t))
}

fn ln_jacobi_k0(alpha: f64, beta: f64) -> f64 {
    let s = alpha + beta;
    (s + 1.0) * LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0) - ln_gamma(s + 2.0)
}

/// `ln k_n`, no validation.
pub(crate) fn ln_norm(spec: &FamilySpec, n: usize) -> f64 {
    let nf = n as f64;
    match spec.family {
        Family::Laguerre { alpha } => ln_gamma(nf + alpha + 1.0) - ln_factorial(n),
        Family::Hermite => nf * LN_2 + ln_factorial(n) + 0.5 * PI.ln(),
        Family::Jacobi { alpha, beta } => {
            if n == 0 {
                // (2n+s+1)Γ(n+s+1) collapses to Γ(s+2), which stays finite for s in (-2, -1].
                return ln_jacobi_k0(alpha, beta);
            }
            let s = alpha + beta;
            (s + 1.0) * LN_2 + ln_gamma(nf + alpha + 1.0) + ln_gamma(nf + beta + 1.0)
                - (2.0 * nf + s + 1.0).ln()
                - ln_gamma(nf + s + 1.0)
                - ln_factorial(n)
        }
    }
}

/// `ln k_n`, where `k_n = ∫ Q_n² ω`.
pub fn log_norm_constant(spec: &FamilySpec, n: usize) -> Result<f64> {
    check_degree(n)?;
    Ok(ln_norm(spec, n))
}

/// `ln ω(t)`; `-∞` where the weight vanishes at an endpoint.
///
/// `one_minus`/`one_plus` carry `1 - t` and `1 + t` for Jacobi so that callers
/// integrating near ±1 can pass the exact distance to the endpoint.
pub(crate) fn ln_weight_parts(spec: &FamilySpec, t: f64, one_minus: f64, one_plus: f64) -> Result<f64> {
    match spec.family {
        Family::Laguerre { alpha } => {
            if t > 0.0 && t.is_finite() {
                Ok(alpha * t.ln() - t)
            } else if t == 0.0 {
                endpoint_log_weight(alpha, "t = 0")
            } else {
                Err(Error::Domain(format!("Laguerre weight is defined on [0, ∞), got t = {t}")))
            }
        }
        Family::Hermite => {
            if t.is_finite() {
                Ok(-t * t)
            } else {
                Err(Error::Domain(format!("evaluation point must be finite, got {t}")))
            }
        }
        Family::Jacobi { alpha, beta } => {
            if !(one_minus >= 0.0 && one_plus >= 0.0) {
                return Err(Error::Domain(format!("Jacobi weight is defined on [-1, 1], got t = {t}")));
            }
            let right = if one_minus == 0.0 {
                endpoint_log_weight(alpha, "t = 1")?
            } else {
                alpha * one_minus.ln()
            };
            let left = if one_plus == 0.0 {
                endpoint_log_weight(beta, "t = -1")?
            } else {
                beta * one_plus.ln()
            };
            Ok(right + left)
        }
    }
}

pub(crate) fn ln_weight(spec: &FamilySpec, t: f64) -> Result<f64> {
    ln_weight_parts(spec, t, 1.0 - t, 1.0 + t)
}

fn endpoint_log_weight(exponent: f64, at: &str) -> Result<f64> {
    if exponent > 0.0 {
        Ok(f64::NEG_INFINITY)
    } else if exponent == 0.0 {
        Ok(0.0)
    } else {
        Err(Error::Domain(format!(
            "weight diverges at {at} (exponent {exponent} < 0)"
        )))
    }
}

/// The value of `q_n(t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalizedFunctionValue {
    pub value: f64,
    /// Whether the product was formed entirely in log space.
    pub log_scale_used: bool,
}

/// `sign · exp(ln_abs)`; `sign == 0` encodes an exact zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct LogValue {
    pub sign: f64,
    pub ln_abs: f64,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue {
        sign: 0.0,
        ln_abs: f64::NEG_INFINITY,
    };

    pub fn value(&self) -> f64 {
        if self.sign == 0.0 {
            0.0
        } else {
            self.sign * self.ln_abs.exp()
        }
    }

    /// Multiply by `|x|^power / power!`-style factors given as a log.
    pub fn scaled(self, sign: f64, ln_factor: f64) -> LogValue {
        if self.sign == 0.0 || sign == 0.0 {
            LogValue::ZERO
        } else {
            LogValue {
                sign: self.sign * sign,
                ln_abs: self.ln_abs + ln_factor,
            }
        }
    }
}

/// Evaluator for a fixed `(spec, n)` with `ln k_n` cached.
#[derive(Clone, Copy, Debug)]
pub(crate) struct NormalizedEvaluator {
    spec: FamilySpec,
    n: usize,
    ln_k: f64,
}

impl NormalizedEvaluator {
    pub fn new(spec: FamilySpec, n: usize) -> Self {
        Self {
            spec,
            n,
            ln_k: ln_norm(&spec, n),
        }
    }

    pub fn ln_norm(&self) -> f64 {
        self.ln_k
    }

    pub fn log_value(&self, t: f64) -> Result<LogValue> {
        self.log_value_parts(t, 1.0 - t, 1.0 + t)
    }

    pub fn log_value_parts(&self, t: f64, one_minus: f64, one_plus: f64) -> Result<LogValue> {
        let lw = ln_weight_parts(&self.spec, t, one_minus, one_plus)?;
        let p = poly(&self.spec, self.n, t);
        if p == 0.0 || lw == f64::NEG_INFINITY {
            return Ok(LogValue::ZERO);
        }
        Ok(LogValue {
            sign: p.signum(),
            ln_abs: p.abs().ln() + lw - self.ln_k,
        })
    }

    pub fn value(&self, t: f64) -> Result<NormalizedFunctionValue> {
        let lw = ln_weight(&self.spec, t)?;
        let p = poly(&self.spec, self.n, t);
        if p == 0.0 || lw == f64::NEG_INFINITY {
            return Ok(NormalizedFunctionValue {
                value: 0.0,
                log_scale_used: false,
            });
        }
        let lp = p.abs().ln();
        let log_scale_used = lw.abs() > LOG_SCALE_THRESHOLD
            || lp.abs() > LOG_SCALE_THRESHOLD
            || self.ln_k.abs() > LOG_SCALE_THRESHOLD;
        let value = if log_scale_used {
            p.signum() * (lp + lw - self.ln_k).exp()
        } else {
            lw.exp() * p * (-self.ln_k).exp()
        };
        Ok(NormalizedFunctionValue {
            value,
            log_scale_used,
        })
    }
}

/// Evaluate the normalized weighted function `q_n(t) = ω(t) Q_n(t) / k_n`.
///
/// Endpoints are accepted only where the weight is finite (`t = 0` for
/// Laguerre iff `α >= 0`, `t = ±1` for Jacobi iff the matching exponent is
/// `>= 0`).
pub fn eval_normalized(spec: &FamilySpec, n: usize, t: f64) -> Result<NormalizedFunctionValue> {
    check_degree(n)?;
    NormalizedEvaluator::new(*spec, n).value(t)
}

/// `q_n(t)` without degree validation, for internal sums at shifted parameters.
pub(crate) fn normalized(spec: &FamilySpec, n: usize, t: f64) -> Result<f64> {
    Ok(NormalizedEvaluator::new(*spec, n).value(t)?.value)
}
