//! Closed-form L¹ rules: absolute moments `∫ |t|^i / i! · |q_n(t)| dt` as
//! signed sums over the zeros of `Q_n`, plus the Cauchy–Schwarz upper bounds.
//!
//! Every summand is formed in log space and the ledger total is a compensated
//! sum in ascending order of magnitude, because the sums alternate and cancel
//! heavily for large `n`.

use crate::error::{Error, Result};
use crate::families::{
    check_degree, ln_norm, ln_weight, poly, Family, FamilySpec, LogValue, NormalizedEvaluator,
};
use crate::special::{ln_factorial, ln_gamma, ln_gamma_signed, ln_rising};
use crate::sum::ordered_sum;
use crate::zeros::{compute_zeros, ZeroSet};
use std::f64::consts::{LN_2, PI};

/// Largest moment order accepted by the rules and the oracle.
pub const I_MAX: usize = 60;

/// The target integral `∫ |t|^i / i! · |q_n(t)| dt`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentRequest {
    pub family: FamilySpec,
    pub n: usize,
    pub i: usize,
}

impl MomentRequest {
    /// Validates `1 <= n <= N_MAX`, `i <= I_MAX` and the rule hypothesis `i < n`.
    pub fn new(family: FamilySpec, n: usize, i: usize) -> Result<Self> {
        let req = Self { family, n, i };
        req.validate()?;
        Ok(req)
    }

    fn validate(&self) -> Result<()> {
        check_moment_args(self.n, self.i)
    }
}

fn check_moment_args(n: usize, i: usize) -> Result<()> {
    check_degree(n)?;
    if i > I_MAX {
        return Err(Error::Capability(format!(
            "moment order i = {i} exceeds the supported maximum {I_MAX}"
        )));
    }
    if n == 0 {
        return Err(Error::Usage(
            "n = 0: q_0 does not change sign, no zero-sum rule applies; use the oracle".into(),
        ));
    }
    if i >= n {
        return Err(Error::Usage(format!(
            "no closed-form rule for i = {i} >= n = {n}; use the oracle instead"
        )));
    }
    Ok(())
}

/// One summand of a rule; `order` is the inner index `k` (0 for single sums).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TermEntry {
    /// 1-based index of the zero `t_m`.
    pub zero_index: usize,
    pub order: usize,
    pub value: f64,
}

/// Per-zero summands of a rule and their compensated total.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedTermLedger {
    pub terms: Vec<TermEntry>,
    /// Origin contribution of the odd-moment rules.
    pub middle_term: Option<f64>,
    pub total: f64,
}

impl SignedTermLedger {
    fn from_terms(terms: Vec<TermEntry>, middle_term: Option<f64>) -> Self {
        let mut values: Vec<f64> = terms.iter().map(|t| t.value).collect();
        values.extend(middle_term);
        let total = ordered_sum(&values);
        Self {
            terms,
            middle_term,
            total,
        }
    }

    /// `Σ |term|`, the scale against which cancellation is measured.
    pub fn abs_sum(&self) -> f64 {
        self.terms.iter().map(|t| t.value.abs()).sum::<f64>() + self.middle_term.map_or(0.0, f64::abs)
    }

    /// Left-to-right uncompensated sum, for diagnostics.
    pub fn naive_total(&self) -> f64 {
        self.terms.iter().map(|t| t.value).sum::<f64>() + self.middle_term.unwrap_or(0.0)
    }

    /// Multiply every entry (and the total) by `factor`.
    fn scaled(mut self, factor: f64) -> Self {
        for t in &mut self.terms {
            t.value *= factor;
        }
        self.middle_term = self.middle_term.map(|m| m * factor);
        self.total *= factor;
        self
    }
}

fn parity(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `sign · exp(ln_coef) · t^power · q`, with `t^0 = 1` even at `t = 0`.
fn term(sign: f64, ln_coef: f64, t: f64, power: usize, q: LogValue) -> f64 {
    if power > 0 && t == 0.0 {
        return 0.0;
    }
    let (t_sign, ln_t) = if power == 0 {
        (1.0, 0.0)
    } else {
        (if t < 0.0 { parity(power) } else { 1.0 }, power as f64 * t.abs().ln())
    };
    q.scaled(sign * t_sign, ln_coef + ln_t).value()
}

/// The inner sums `Σ_k c_k t^{i-k}/(i-k)! q_{n-1-k}^{(+1+k)}(t)` shared by all
/// three families: `ln_coef(k)` gives `ln|c_k|`, `coef_sign(k)` its sign.
struct InnerSum {
    i: usize,
    evaluators: Vec<NormalizedEvaluator>,
    ln_coef: Vec<f64>,
    coef_sign: Vec<f64>,
}

impl InnerSum {
    fn new(
        spec: &FamilySpec,
        n: usize,
        i: usize,
        ln_coef: impl Fn(usize) -> f64,
        coef_sign: impl Fn(usize) -> f64,
    ) -> Self {
        Self {
            i,
            evaluators: (0..=i)
                .map(|k| NormalizedEvaluator::new(spec.shifted(1.0 + k as f64), n - 1 - k))
                .collect(),
            ln_coef: (0..=i).map(&ln_coef).collect(),
            coef_sign: (0..=i).map(&coef_sign).collect(),
        }
    }

    fn push(&self, out: &mut Vec<TermEntry>, m: usize, sign: f64, t: f64) -> Result<()> {
        for k in 0..=self.i {
            let q = self.evaluators[k].log_value(t)?;
            let power = self.i - k;
            let ln_c = self.ln_coef[k] - ln_factorial(power);
            out.push(TermEntry {
                zero_index: m,
                order: k,
                value: term(sign * self.coef_sign[k], ln_c, t, power, q),
            });
        }
        Ok(())
    }

    /// `c_i q_{n-1-i}^{(+1+i)}(0)`.
    fn at_origin(&self) -> Result<f64> {
        let q = self.evaluators[self.i].log_value(0.0)?;
        Ok(q.scaled(self.coef_sign[self.i], self.ln_coef[self.i]).value())
    }
}

/// Signs `(-1)^{m+n}` for even `i`; for odd `i`, `(-1)^{m+n+1}` left of the
/// origin, `(-1)^{m+n}` right of it, and the origin term `(-1)^{n0+n} c_i q(0)`.
/// `skip_origin_zero` drops a zero at `t = 0` together with the origin term
/// (they cancel exactly).
fn symmetric_rule(
    zs: &ZeroSet,
    inner: &InnerSum,
    skip_origin_zero: bool,
) -> Result<SignedTermLedger> {
    let n = zs.n;
    let n0 = zs.n0;
    let mut terms = Vec::with_capacity(n * (inner.i + 1));
    let odd = inner.i % 2 == 1;
    for (idx, &t) in zs.zeros.iter().enumerate() {
        let m = idx + 1;
        if odd && skip_origin_zero && m == n0 && t == 0.0 {
            continue;
        }
        let sign = if odd && m <= n0 {
            parity(m + n + 1)
        } else {
            parity(m + n)
        };
        inner.push(&mut terms, m, sign, t)?;
    }
    let middle = if odd {
        let origin_is_zero = n0 > 0 && zs.zeros[n0 - 1] == 0.0;
        if skip_origin_zero && origin_is_zero {
            None
        } else {
            Some(parity(n0 + n) * inner.at_origin()?)
        }
    } else {
        None
    };
    Ok(SignedTermLedger::from_terms(terms, middle))
}

/// `∫ |Q_n| ω` (not normalized by `k_n`) by the generic zero-sum rule
/// `2 μ_{n-1}/|μ_n| Σ_j (-1)^{j+1} ω(t_j) Q(t_j) Q_{n-1,ωQ}(t_j)`.
pub fn l1_norm_generic(spec: &FamilySpec, n: usize) -> Result<SignedTermLedger> {
    check_moment_args(n, 0)?;
    let zs = compute_zeros(spec, n)?;
    let nf = n as f64;
    // μ_{n-1} / |μ_n|
    let (ratio_sign, ln_ratio) = match spec.family() {
        Family::Laguerre { .. } => (1.0, -nf.ln()),
        Family::Hermite => (parity(n - 1), 0.0),
        Family::Jacobi { .. } => (parity(n - 1), -(2.0 * nf).ln()),
    };
    let raised = spec.shifted(1.0);
    let mut terms = Vec::with_capacity(n);
    for (idx, &t) in zs.zeros.iter().enumerate() {
        let j = idx + 1;
        let big_q = match spec.family() {
            Family::Laguerre { .. } => t,
            Family::Hermite => 1.0,
            Family::Jacobi { .. } => (1.0 - t) * (1.0 + t),
        };
        let p = poly(&raised, n - 1, t);
        let sign = ratio_sign * parity(j + 1) * big_q.signum() * p.signum();
        let ln_abs = LN_2 + ln_ratio + ln_weight(spec, t)? + big_q.abs().ln() + p.abs().ln();
        let value = if p == 0.0 { 0.0 } else { sign * ln_abs.exp() };
        terms.push(TermEntry {
            zero_index: j,
            order: 0,
            value,
        });
    }
    Ok(SignedTermLedger::from_terms(terms, None))
}

fn laguerre_spec(alpha: f64) -> Result<FamilySpec> {
    FamilySpec::laguerre(alpha)
}

/// `∫_0^∞ t^i/i! |ℓ_n^(α)(t)| dt`.
pub fn laguerre_moment(alpha: f64, n: usize, i: usize) -> Result<SignedTermLedger> {
    let spec = laguerre_spec(alpha)?;
    check_moment_args(n, i)?;
    let zs = compute_zeros(&spec, n)?;
    let inner = InnerSum::new(&spec, n, i, |_| LN_2, parity);
    let mut terms = Vec::with_capacity(n * (i + 1));
    for (idx, &t) in zs.zeros.iter().enumerate() {
        inner.push(&mut terms, idx + 1, parity(idx + 2), t)?;
    }
    Ok(SignedTermLedger::from_terms(terms, None))
}

/// `∥ℓ_n^(α)∥₁ = 2 Σ (-1)^{m+1} ℓ_{n-1}^(α)(t_m)`.
pub fn laguerre_norm(alpha: f64, n: usize) -> Result<SignedTermLedger> {
    let spec = laguerre_spec(alpha)?;
    check_moment_args(n, 0)?;
    let zs = compute_zeros(&spec, n)?;
    let q = NormalizedEvaluator::new(spec, n - 1);
    single_sum(&zs, &q, |m| parity(m + 1), LN_2, 0)
}

/// `∫_0^∞ t^{n-1} |ℓ_n^(α)(t)| dt` (without the `1/(n-1)!`).
pub fn laguerre_top_moment(alpha: f64, n: usize) -> Result<SignedTermLedger> {
    let spec = laguerre_spec(alpha)?;
    check_moment_args(n, 0)?;
    let zs = compute_zeros(&spec, n)?;
    let q = NormalizedEvaluator::new(spec, n - 1);
    single_sum(&zs, &q, |m| parity(m + 1), LN_2 - (alpha + n as f64).ln(), n)
}

/// `Σ_m sign(m) e^{ln_coef} t_m^power q(t_m)`.
fn single_sum(
    zs: &ZeroSet,
    q: &NormalizedEvaluator,
    sign: impl Fn(usize) -> f64,
    ln_coef: f64,
    power: usize,
) -> Result<SignedTermLedger> {
    let mut terms = Vec::with_capacity(zs.n);
    for (idx, &t) in zs.zeros.iter().enumerate() {
        let m = idx + 1;
        terms.push(TermEntry {
            zero_index: m,
            order: 0,
            value: term(sign(m), ln_coef, t, power, q.log_value(t)?),
        });
    }
    Ok(SignedTermLedger::from_terms(terms, None))
}

/// `∫_0^∞ |d^k/dt^k ℓ_n^(α)| dt = ∥ℓ_{n+k}^(α-k)∥₁`, valid for `α > k - 1`.
pub fn laguerre_sobolev_norm(alpha: f64, n: usize, k: usize) -> Result<SignedTermLedger> {
    if k == 0 {
        return Err(Error::Usage("derivative order k must be >= 1".into()));
    }
    if !(alpha > k as f64 - 1.0) {
        return Err(Error::Domain(format!(
            "the derivative identity needs α > k - 1, got α = {alpha}, k = {k}"
        )));
    }
    laguerre_norm(alpha - k as f64, n + k)
}

/// `∫ |t|^i/i! |h_n(t)| dt`.
pub fn hermite_moment(n: usize, i: usize) -> Result<SignedTermLedger> {
    check_moment_args(n, i)?;
    let spec = FamilySpec::hermite();
    let zs = compute_zeros(&spec, n)?;
    // (n-1-k)! / (n! 2^k)
    let inner = InnerSum::new(
        &spec,
        n,
        i,
        |k| ln_factorial(n - 1 - k) - ln_factorial(n) - k as f64 * LN_2,
        |_| 1.0,
    );
    symmetric_rule(&zs, &inner, true)
}

/// `∥h_n∥₁ = (1/n) Σ (-1)^{m+n} h_{n-1}(t_m)`.
pub fn hermite_norm(n: usize) -> Result<SignedTermLedger> {
    check_moment_args(n, 0)?;
    let spec = FamilySpec::hermite();
    let zs = compute_zeros(&spec, n)?;
    let q = NormalizedEvaluator::new(spec, n - 1);
    single_sum(&zs, &q, |m| parity(m + n), -(n as f64).ln(), 0)
}

/// `∫_{-1}^1 |t|^i/i! |p_n^(α,β)(t)| dt`.
pub fn jacobi_moment(alpha: f64, beta: f64, n: usize, i: usize) -> Result<SignedTermLedger> {
    let spec = FamilySpec::jacobi(alpha, beta)?;
    check_moment_args(n, i)?;
    let zs = compute_zeros(&spec, n)?;
    let s = alpha + beta;
    // 2^{k+2} Γ(n+s+1)/Γ(n+k+s+2) = 2^{k+2} / ∏_{j=0}^{k} (n+s+1+j)
    let inner = InnerSum::new(
        &spec,
        n,
        i,
        |k| (k as f64 + 2.0) * LN_2 - ln_rising(n as f64 + s + 1.0, k + 1),
        |_| 1.0,
    );
    symmetric_rule(&zs, &inner, false)
}

/// `∥p_n^(α,β)∥₁` from same-parameter values of `p_{n-1}` at the zeros.
pub fn jacobi_norm(alpha: f64, beta: f64, n: usize) -> Result<SignedTermLedger> {
    let spec = FamilySpec::jacobi(alpha, beta)?;
    check_moment_args(n, 0)?;
    let zs = compute_zeros(&spec, n)?;
    let nf = n as f64;
    let s = alpha + beta;
    // (n+s)/(2n+s-1) is 1 at n = 1, where both vanish when s = -1
    let middle_ratio = if n == 1 {
        1.0
    } else {
        (nf + s) / (2.0 * nf + s - 1.0)
    };
    let factor = 4.0 / (nf + s + 1.0) * middle_ratio * (2.0 * nf + s + 1.0) / (2.0 * nf + s);
    let q = NormalizedEvaluator::new(spec, n - 1);
    single_sum(&zs, &q, |m| parity(m + n), factor.ln(), 0)
}

/// Absolute moment by the family's rule.
pub fn moment(req: &MomentRequest) -> Result<SignedTermLedger> {
    req.validate()?;
    match req.family.family() {
        Family::Laguerre { alpha } => laguerre_moment(alpha, req.n, req.i),
        Family::Hermite => hermite_moment(req.n, req.i),
        Family::Jacobi { alpha, beta } => jacobi_moment(alpha, beta, req.n, req.i),
    }
}

/// `∥q_n∥₁` by the family's same-parameter norm rule.
pub fn norm(spec: &FamilySpec, n: usize) -> Result<SignedTermLedger> {
    match spec.family() {
        Family::Laguerre { alpha } => laguerre_norm(alpha, n),
        Family::Hermite => hermite_norm(n),
        Family::Jacobi { alpha, beta } => jacobi_norm(alpha, beta, n),
    }
}

/// Upper bound comparable with `moment(req).total`, or `None` for `i = 0`
/// where no bound is provided. The Jacobi bound carries the unit-constant
/// convention and is divided by `i!` to match the moment normalization.
pub fn bound(req: &MomentRequest) -> Result<Option<f64>> {
    if req.i == 0 {
        return Ok(None);
    }
    let b = match req.family.family() {
        Family::Laguerre { alpha } => bound_laguerre(alpha, req.n, req.i)?,
        Family::Hermite => bound_hermite(req.n, req.i)?,
        Family::Jacobi { alpha, beta } => {
            (bound_jacobi(alpha, beta, req.n, req.i)?.ln() - ln_factorial(req.i)).exp()
        }
    };
    Ok(Some(b))
}

fn check_bound_orders(n: usize, i: usize) -> Result<()> {
    if n == 0 || i == 0 {
        return Err(Error::Usage(format!(
            "bounds are stated for n, i >= 1, got n = {n}, i = {i}"
        )));
    }
    Ok(())
}

/// `(n! Γ(2i+α+1) / ((i!)² Γ(α+n+1)))^{1/2}`, bounding
/// `∫_0^∞ t^i/i! |ℓ_n^(α)| dt`; requires `α > -(i+1)`.
pub fn bound_laguerre(alpha: f64, n: usize, i: usize) -> Result<f64> {
    check_bound_orders(n, i)?;
    if !(alpha > -(i as f64 + 1.0)) {
        return Err(Error::Domain(format!("bound needs α > -(i+1), got α = {alpha}, i = {i}")));
    }
    let (ln_top, s_top) = ln_gamma_signed(2.0 * i as f64 + alpha + 1.0)?;
    let (ln_bot, s_bot) = ln_gamma_signed(alpha + n as f64 + 1.0)?;
    if s_top * s_bot < 0.0 {
        return Err(Error::Domain(format!(
            "bound radicand is negative for α = {alpha}, n = {n}, i = {i}"
        )));
    }
    let ln_sq = ln_factorial(n) + ln_top - 2.0 * ln_factorial(i) - ln_bot;
    Ok((0.5 * ln_sq).exp())
}

/// `1 / √(2^n n! i! √π)`, bounding `∫ |t|^i/i! |h_n| dt`.
pub fn bound_hermite(n: usize, i: usize) -> Result<f64> {
    check_bound_orders(n, i)?;
    let ln_sq = n as f64 * LN_2 + ln_factorial(n) + ln_factorial(i) + 0.5 * PI.ln();
    Ok((-0.5 * ln_sq).exp())
}

/// `√c_n · ((2i)!/Γ(2i+β+2) + (2i)!/Γ(2i+α+2))^{1/2}` with `c_n = 1/k_n`,
/// the Cauchy–Schwarz bound for `∫ |t|^i |p_n^(α,β)| dt` with the
/// endpoint-splitting constants set to 1.
pub fn bound_jacobi(alpha: f64, beta: f64, n: usize, i: usize) -> Result<f64> {
    let spec = FamilySpec::jacobi(alpha, beta)?;
    check_bound_orders(n, i)?;
    let two_i = 2.0 * i as f64;
    let ln_f = ln_factorial(2 * i);
    let tail = (ln_f - ln_gamma(two_i + beta + 2.0)).exp() + (ln_f - ln_gamma(two_i + alpha + 2.0)).exp();
    Ok((-0.5 * ln_norm(&spec, n)).exp() * tail.sqrt())
}

/// Right-hand side of the Laguerre antiderivative identity:
/// `Σ_k (-1)^k t^{i-k}/(i-k)! ℓ_{n-1-k}^(α+1+k)(t)`.
pub fn laguerre_antiderivative(alpha: f64, n: usize, i: usize, t: f64) -> Result<f64> {
    let spec = laguerre_spec(alpha)?;
    check_moment_args(n, i)?;
    antiderivative(&InnerSum::new(&spec, n, i, |_| 0.0, parity), t)
}

/// `-(1/n!) Σ_k (n-1-k)!/(2^{k+1}(i-k)!) t^{i-k} h_{n-1-k}(t)`.
pub fn hermite_antiderivative(n: usize, i: usize, t: f64) -> Result<f64> {
    check_moment_args(n, i)?;
    let inner = InnerSum::new(
        &FamilySpec::hermite(),
        n,
        i,
        |k| ln_factorial(n - 1 - k) - ln_factorial(n) - (k as f64 + 1.0) * LN_2,
        |_| -1.0,
    );
    antiderivative(&inner, t)
}

/// `-Σ_k 2^{k+1} Γ(n+s+1)/Γ(n+k+s+2) t^{i-k}/(i-k)! p_{n-1-k}^(α+1+k, β+1+k)(t)`.
pub fn jacobi_antiderivative(alpha: f64, beta: f64, n: usize, i: usize, t: f64) -> Result<f64> {
    let spec = FamilySpec::jacobi(alpha, beta)?;
    check_moment_args(n, i)?;
    let s = alpha + beta;
    let inner = InnerSum::new(
        &spec,
        n,
        i,
        |k| (k as f64 + 1.0) * LN_2 - ln_rising(n as f64 + s + 1.0, k + 1),
        |_| -1.0,
    );
    antiderivative(&inner, t)
}

fn antiderivative(inner: &InnerSum, t: f64) -> Result<f64> {
    let mut terms = Vec::with_capacity(inner.i + 1);
    inner.push(&mut terms, 0, 1.0, t)?;
    let values: Vec<f64> = terms.iter().map(|e| e.value).collect();
    Ok(ordered_sum(&values))
}

/// Scale a ledger by `1/k_n`, turning the generic rule into the normalized norm.
pub fn normalize_generic(spec: &FamilySpec, n: usize, ledger: SignedTermLedger) -> SignedTermLedger {
    let k = (-ln_norm(spec, n)).exp();
    ledger.scaled(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }

    #[test]
    fn generic_rule_examples() {
        let e = std::f64::consts::E;
        let l = l1_norm_generic(&FamilySpec::laguerre(0.0).unwrap(), 1).unwrap();
        assert_relative_eq!(l.total, 2.0 / e, max_relative = 1e-14);
        let h = l1_norm_generic(&FamilySpec::hermite(), 1).unwrap();
        assert_relative_eq!(h.total, 2.0, max_relative = 1e-14);
        let j = l1_norm_generic(&FamilySpec::jacobi(0.0, 0.0).unwrap(), 2).unwrap();
        assert_relative_eq!(j.total, 4.0 * sqrt(3.0) / 9.0, max_relative = 1e-14);
    }

    #[test]
    fn laguerre_examples() {
        let e = std::f64::consts::E;
        assert_relative_eq!(laguerre_norm(0.0, 1).unwrap().total, 2.0 / e, max_relative = 1e-14);
        let r2 = sqrt(2.0);
        let expected = 2.0 * (-2.0f64).exp() * (r2.exp() * (r2 - 1.0) + (-r2).exp() * (1.0 + r2));
        assert_relative_eq!(laguerre_moment(0.0, 2, 0).unwrap().total, expected, max_relative = 1e-13);
        assert_relative_eq!(laguerre_norm(0.0, 2).unwrap().total, expected, max_relative = 1e-13);
        // (1/6) ∫ t² |3 - t| e^{-t} dt = 9 e^{-3}; ℓ_1^(2) = t² e^{-t} (3 - t) / 3!
        assert_relative_eq!(laguerre_moment(2.0, 1, 0).unwrap().total, 9.0 * (-3.0f64).exp(), max_relative = 1e-13);
        assert_relative_eq!(laguerre_top_moment(0.0, 1).unwrap().total, 2.0 / e, max_relative = 1e-14);
        assert_relative_eq!(
            laguerre_sobolev_norm(2.0, 0, 1).unwrap().total,
            4.0 * (-2.0f64).exp(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn hermite_examples() {
        let sp = sqrt(PI);
        assert_relative_eq!(hermite_norm(1).unwrap().total, 1.0 / sp, max_relative = 1e-14);
        assert_relative_eq!(
            4.0 * sp * hermite_moment(2, 0).unwrap().total,
            2.0 * sqrt(2.0) * (-0.5f64).exp(),
            max_relative = 1e-13
        );
        assert_relative_eq!(
            4.0 * sp * hermite_moment(2, 1).unwrap().total,
            4.0 * (-0.5f64).exp() - 1.0,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            12.0 * sp * hermite_moment(3, 1).unwrap().total,
            3.0 * sqrt(6.0) * (-1.5f64).exp(),
            max_relative = 1e-13
        );
        assert_relative_eq!(
            12.0 * sp * 2.0 * hermite_moment(3, 2).unwrap().total,
            2.0 * (7.0 * (-1.5f64).exp() - 0.5),
            max_relative = 1e-13
        );
        assert_relative_eq!(
            12.0 * sp * hermite_norm(3).unwrap().total,
            1.0 + 4.0 * (-1.5f64).exp(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn jacobi_examples() {
        assert_relative_eq!(jacobi_norm(0.0, 0.0, 2).unwrap().total, 10.0 * sqrt(3.0) / 9.0, max_relative = 1e-14);
        assert_relative_eq!(jacobi_moment(0.0, 0.0, 2, 1).unwrap().total, 25.0 / 24.0, max_relative = 1e-14);
        assert_relative_eq!(jacobi_moment(0.0, 0.0, 3, 0).unwrap().total, 91.0 / 40.0, max_relative = 1e-14);
        assert_relative_eq!(jacobi_norm(0.0, 0.0, 3).unwrap().total, 91.0 / 40.0, max_relative = 1e-14);
        assert_relative_eq!(jacobi_moment(1.0, 0.0, 2, 1).unwrap().total, 18921.0 / 25000.0, max_relative = 1e-14);
        assert_relative_eq!(jacobi_moment(1.0, 0.0, 2, 0).unwrap().total, 72.0 * sqrt(6.0) / 125.0, max_relative = 1e-14);
    }

    #[test]
    fn bounds_examples() {
        assert_relative_eq!(bound_laguerre(0.0, 2, 1).unwrap(), sqrt(2.0), max_relative = 1e-14);
        assert!(bound_laguerre(0.0, 2, 1).unwrap() >= laguerre_moment(0.0, 2, 1).unwrap().total);
        // 3! Γ(5) / ((2!)² Γ(4)) = 6
        assert_relative_eq!(bound_laguerre(0.0, 3, 2).unwrap(), sqrt(6.0), max_relative = 1e-14);
        assert_relative_eq!(bound_laguerre(1.5, 4, 3).unwrap(), (24.0 * ln_gamma(8.5).exp() / (36.0 * ln_gamma(6.5).exp())).sqrt(), max_relative = 1e-13);
        assert_relative_eq!(bound_hermite(2, 1).unwrap(), 1.0 / sqrt(8.0 * sqrt(PI)), max_relative = 1e-14);
        assert!(hermite_moment(2, 1).unwrap().total <= bound_hermite(2, 1).unwrap());
        assert_relative_eq!(bound_jacobi(0.0, 0.0, 1, 1).unwrap(), 1.0, max_relative = 1e-14);
        assert!(bound_jacobi(0.0, 0.0, 3, 2).unwrap() >= 2.0 * jacobi_moment(0.0, 0.0, 3, 2).unwrap().total);
    }

    #[test]
    fn refusals() {
        assert!(matches!(laguerre_moment(0.0, 2, 3), Err(Error::Usage(_))));
        assert!(matches!(hermite_moment(2, 2), Err(Error::Usage(_))));
        assert!(matches!(l1_norm_generic(&FamilySpec::hermite(), 0), Err(Error::Usage(_))));
        assert!(matches!(laguerre_sobolev_norm(0.5, 1, 2), Err(Error::Domain(_))));
        assert!(matches!(jacobi_moment(-1.0, 0.0, 2, 0), Err(Error::Domain(_))));
        assert!(matches!(hermite_moment(121, 0), Err(Error::Capability(_))));
        assert!(matches!(bound_hermite(3, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn origin_zero_cancels_in_jacobi_odd_rule() {
        let ledger = jacobi_moment(0.5, 0.5, 5, 3).unwrap();
        assert!(ledger.middle_term.is_some());
        let at_origin: f64 = ledger
            .terms
            .iter()
            .filter(|t| t.zero_index == 3)
            .map(|t| t.value)
            .sum();
        assert_relative_eq!(at_origin, -ledger.middle_term.unwrap(), max_relative = 1e-15);
    }
}
