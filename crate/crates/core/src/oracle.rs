//! Brute-force reference integrator for `∫ |t|^i / i! · |q_n(t)| dt`.
//!
//! The domain is cut at the zeros of `Q_n` (and at the origin for odd `i`),
//! every panel is integrated with an adaptive Gauss–Legendre rule, and on
//! infinite intervals the integral is truncated where an analytic majorant of
//! the tail falls below `tail_rel` times the integral. Nothing here depends on
//! the closed-form rules; only the function evaluator and the zero finder are
//! shared.

use crate::error::{Error, Result};
use crate::families::{check_degree, poly, Family, FamilySpec, NormalizedEvaluator};
use crate::l1rules::I_MAX;
use crate::special::ln_factorial;
use crate::sum::{ordered_sum, CompensatedSum};
use crate::zeros::compute_zeros;
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    /// Points of the per-panel Gauss–Legendre rule.
    pub order: usize,
    /// Relative agreement required between a panel and its two halves.
    pub rel_tol: f64,
    pub max_depth: usize,
    /// Tail majorant allowed, relative to the integral of `|f|`.
    pub tail_rel: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            order: 31,
            rel_tol: 1e-13,
            max_depth: 40,
            tail_rel: 1e-16,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleResult {
    pub value: f64,
    /// Sum of the per-leaf refinement differences plus the tail majorant.
    pub est_abs_error: f64,
    pub panels: usize,
    /// Where an infinite interval was cut off.
    pub truncation_point: Option<f64>,
    /// Analytic majorant of the discarded tail (0 on finite intervals).
    pub tail_bound: f64,
}

/// `∫ |t|^i / i! · |q_n(t)| dt` with the default configuration.
pub fn oracle_moment(spec: &FamilySpec, n: usize, i: usize) -> Result<OracleResult> {
    oracle_moment_with(spec, n, i, &OracleConfig::default())
}

/// `∫ t^i / i! · q_n(t) dt` (no absolute values).
pub fn oracle_signed_moment(spec: &FamilySpec, n: usize, i: usize) -> Result<OracleResult> {
    oracle_signed_moment_with(spec, n, i, &OracleConfig::default())
}

pub fn oracle_moment_with(spec: &FamilySpec, n: usize, i: usize, cfg: &OracleConfig) -> Result<OracleResult> {
    Oracle::new(spec, n, i, cfg)?.run(true)
}

pub fn oracle_signed_moment_with(
    spec: &FamilySpec,
    n: usize,
    i: usize,
    cfg: &OracleConfig,
) -> Result<OracleResult> {
    Oracle::new(spec, n, i, cfg)?.run(false)
}

/// Nodes and weights of the `order`-point Gauss–Legendre rule on `[0, 1]`.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let nf = order as f64;
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    for k in 0..order.div_ceil(2) {
        let mut x = (PI * (k as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=order {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            let p = if order == 0 { 1.0 } else { p1 };
            dp = nf * (x * p - p0) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1, 1] -> [0, 1]
        nodes[k] = 0.5 * (1.0 - x);
        nodes[order - 1 - k] = 0.5 * (1.0 + x);
        weights[k] = 0.5 * w;
        weights[order - 1 - k] = 0.5 * w;
    }
    (nodes, weights)
}

/// Parametrization of a panel by `u ∈ [0, 1]`.
#[derive(Clone, Copy, Debug)]
enum PanelMap {
    Affine { left: f64, right: f64 },
    /// `t = a + len · u^m`, clustering nodes at a singular left endpoint.
    LeftPower { a: f64, len: f64, m: i32 },
    /// `t = b - len · u^m`.
    RightPower { b: f64, len: f64, m: i32 },
}

/// A point of the domain: `t`, `1 - t`, `1 + t` and `dt/du`.
#[derive(Clone, Copy, Debug)]
struct Point {
    t: f64,
    one_minus: f64,
    one_plus: f64,
    jacobian: f64,
}

impl PanelMap {
    fn point(&self, u: f64) -> Option<Point> {
        match *self {
            PanelMap::Affine { left, right } => {
                let t = left + (right - left) * u;
                Some(Point {
                    t,
                    one_minus: 1.0 - t,
                    one_plus: 1.0 + t,
                    jacobian: right - left,
                })
            }
            PanelMap::LeftPower { a, len, m } => {
                let d = len * u.powi(m);
                if d == 0.0 || !d.is_normal() {
                    return None;
                }
                let t = a + d;
                Some(Point {
                    t,
                    one_minus: 1.0 - t,
                    one_plus: if a == -1.0 { d } else { 1.0 + t },
                    jacobian: len * m as f64 * u.powi(m - 1),
                })
            }
            PanelMap::RightPower { b, len, m } => {
                let d = len * u.powi(m);
                if d == 0.0 || !d.is_normal() {
                    return None;
                }
                let t = b - d;
                Some(Point {
                    t,
                    one_minus: if b == 1.0 { d } else { 1.0 - t },
                    one_plus: 1.0 + t,
                    jacobian: len * m as f64 * u.powi(m - 1),
                })
            }
        }
    }

    fn bounds(&self) -> (f64, f64) {
        match *self {
            PanelMap::Affine { left, right } => (left, right),
            PanelMap::LeftPower { a, len, .. } => (a, a + len),
            PanelMap::RightPower { b, len, .. } => (b - len, b),
        }
    }
}

/// Substitution power for an endpoint where the integrand behaves like
/// `(t - a)^γ`; `None` when it is smooth there.
fn endpoint_power(gamma: f64) -> Option<i32> {
    let smooth = gamma >= 0.0 && gamma.fract() == 0.0;
    if smooth {
        None
    } else {
        Some((3.0 / (gamma + 1.0)).ceil().max(1.0) as i32)
    }
}

struct Oracle<'a> {
    spec: FamilySpec,
    n: usize,
    i: usize,
    cfg: &'a OracleConfig,
    q: NormalizedEvaluator,
    ln_i_fact: f64,
    zeros: Vec<f64>,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl<'a> Oracle<'a> {
    fn new(spec: &FamilySpec, n: usize, i: usize, cfg: &'a OracleConfig) -> Result<Self> {
        check_degree(n)?;
        if i > I_MAX {
            return Err(Error::Capability(format!(
                "moment order i = {i} exceeds the supported maximum {I_MAX}"
            )));
        }
        if cfg.order < 2 || cfg.max_depth == 0 {
            return Err(Error::Usage("oracle rule order must be >= 2 and max depth >= 1".into()));
        }
        let zeros = if n == 0 {
            Vec::new()
        } else {
            compute_zeros(spec, n)?.zeros
        };
        let (nodes, weights) = gauss_legendre(cfg.order);
        Ok(Self {
            spec: *spec,
            n,
            i,
            cfg,
            q: NormalizedEvaluator::new(*spec, n),
            ln_i_fact: ln_factorial(i),
            zeros,
            nodes,
            weights,
        })
    }

    /// `t^i / i! · q_n(t) · dt/du`, or its absolute value.
    fn integrand(&self, p: &Point, absolute: bool) -> Result<f64> {
        let q = self.q.log_value_parts(p.t, p.one_minus, p.one_plus)?;
        if q.sign == 0.0 {
            return Ok(0.0);
        }
        if self.i > 0 && p.t == 0.0 {
            return Ok(0.0);
        }
        let ln_t = if self.i == 0 { 0.0 } else { self.i as f64 * p.t.abs().ln() };
        let t_sign = if p.t < 0.0 && self.i % 2 == 1 { -1.0 } else { 1.0 };
        let v = q.sign * t_sign * (q.ln_abs + ln_t - self.ln_i_fact).exp() * p.jacobian;
        Ok(if absolute { v.abs() } else { v })
    }

    fn rule(&self, map: &PanelMap, u0: f64, u1: f64, absolute: bool) -> Result<f64> {
        let h = u1 - u0;
        let mut acc = CompensatedSum::new();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            if let Some(p) = map.point(u0 + h * x) {
                acc.add(w * self.integrand(&p, absolute)?);
            }
        }
        Ok(h * acc.total())
    }

    fn adapt(
        &self,
        map: &PanelMap,
        span: (f64, f64),
        whole: f64,
        depth: usize,
        absolute: bool,
        floor: f64,
        leaves: &mut Vec<(f64, f64)>,
    ) -> Result<()> {
        let (u0, u1) = span;
        let mid = 0.5 * (u0 + u1);
        let left = self.rule(map, u0, mid, absolute)?;
        let right = self.rule(map, mid, u1, absolute)?;
        let refined = left + right;
        let diff = (refined - whole).abs();
        if diff <= (self.cfg.rel_tol * refined.abs()).max(floor) {
            leaves.push((refined, diff));
            return Ok(());
        }
        if depth >= self.cfg.max_depth {
            let (a, b) = map.bounds();
            return Err(Error::Numerical(format!(
                "oracle panel [{a}, {b}] did not converge at depth {depth} (u ∈ [{u0}, {u1}], difference {diff:e})"
            )));
        }
        self.adapt(map, (u0, mid), left, depth + 1, absolute, floor, leaves)?;
        self.adapt(map, (mid, u1), right, depth + 1, absolute, floor, leaves)
    }

    fn endpoint_exponents(&self) -> (Option<i32>, Option<i32>) {
        match self.spec.family() {
            Family::Laguerre { alpha } => (endpoint_power(alpha + self.i as f64), None),
            Family::Hermite => (None, None),
            Family::Jacobi { alpha, beta } => (endpoint_power(beta), endpoint_power(alpha)),
        }
    }

    fn panels(&self, lo: f64, hi: f64) -> Vec<PanelMap> {
        let mut cuts = vec![lo];
        cuts.extend(self.zeros.iter().copied());
        let split_origin = self.i % 2 == 1 || matches!(self.spec.family(), Family::Jacobi { .. }) && self.n == 0;
        if split_origin && lo < 0.0 && hi > 0.0 {
            cuts.push(0.0);
        }
        cuts.push(hi);
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let (a, b) = self.spec.interval();
        let (left_power, right_power) = self.endpoint_exponents();
        cuts.windows(2)
            .map(|w| match (w[0] == a, w[1] == b, left_power, right_power) {
                (true, _, Some(m), _) => PanelMap::LeftPower { a, len: w[1] - a, m },
                (_, true, _, Some(m)) => PanelMap::RightPower { b, len: b - w[0], m },
                _ => PanelMap::Affine { left: w[0], right: w[1] },
            })
            .collect()
    }

    fn check_sign(&self, map: &PanelMap) -> Result<()> {
        if self.n == 0 {
            return Ok(());
        }
        let mut seen = 0.0;
        for k in 0..16 {
            let u = 0.5 * (1.0 - ((2 * k + 1) as f64 * PI / 32.0).cos());
            let Some(p) = map.point(u) else { continue };
            let s = poly(&self.spec, self.n, p.t).signum();
            if poly(&self.spec, self.n, p.t) == 0.0 {
                continue;
            }
            if seen == 0.0 {
                seen = s;
            } else if s != seen {
                let (a, b) = map.bounds();
                return Err(Error::Numerical(format!(
                    "q_n changes sign inside oracle panel [{a}, {b}] near t = {}",
                    p.t
                )));
            }
        }
        Ok(())
    }

    /// `ln` of an upper bound for `∫_{|t|>T} |t|^i/i! |q_n|`.
    fn ln_tail_majorant(&self, big_t: f64) -> Option<f64> {
        let nf = self.n as f64;
        let ifl = self.i as f64;
        let ln_k = self.q.ln_norm();
        match self.spec.family() {
            Family::Laguerre { alpha } => {
                // |L_n(t)| <= L_n(-1) t^n for t >= 1 (coefficients alternate in sign)
                let s = poly(&self.spec, self.n, -1.0);
                let sigma = nf + ifl + alpha + 1.0;
                Some(s.ln() - self.ln_i_fact - ln_k + ln_upper_gamma_bound(sigma, big_t)?)
            }
            Family::Hermite => {
                // Σ|coefficients of H_n| via A_k = 2 A_{k-1} + 2(k-1) A_{k-2}
                let (mut a0, mut a1) = (1.0f64, 2.0f64);
                let s = if self.n == 0 {
                    1.0
                } else {
                    for k in 2..=self.n {
                        let a2 = 2.0 * a1 + 2.0 * (k as f64 - 1.0) * a0;
                        a0 = a1;
                        a1 = a2;
                    }
                    a1
                };
                // two tails, each (1/2) Γ((n+i+1)/2, T²)
                let sigma = 0.5 * (nf + ifl + 1.0);
                Some(s.ln() - self.ln_i_fact - ln_k + ln_upper_gamma_bound(sigma, big_t * big_t)?)
            }
            Family::Jacobi { .. } => None,
        }
    }

    fn run(&self, absolute: bool) -> Result<OracleResult> {
        let (a, b) = self.spec.interval();
        let (lo, hi, truncation) = match self.spec.family() {
            Family::Jacobi { .. } => (a, b, None),
            _ => {
                let big_t = self.truncation_point()?;
                let lo = if a.is_finite() { a } else { -big_t };
                (lo, big_t, Some(big_t))
            }
        };
        let maps = self.panels(lo, hi);
        for m in &maps {
            self.check_sign(m)?;
        }
        let coarse: Vec<f64> = maps
            .iter()
            .map(|m| self.rule(m, 0.0, 1.0, true))
            .collect::<Result<_>>()?;
        let scale = ordered_sum(&coarse).abs();
        let floor = 1e-15 * scale.max(f64::MIN_POSITIVE);
        let mut leaves = Vec::new();
        for m in &maps {
            let whole = self.rule(m, 0.0, 1.0, absolute)?;
            self.adapt(m, (0.0, 1.0), whole, 0, absolute, floor, &mut leaves)?;
        }
        let values: Vec<f64> = leaves.iter().map(|l| l.0).collect();
        let value = ordered_sum(&values);
        let tail_bound = match truncation {
            Some(t) => self.ln_tail_majorant(t).map_or(0.0, f64::exp),
            None => 0.0,
        };
        let est = leaves.iter().map(|l| l.1).sum::<f64>() + tail_bound;
        Ok(OracleResult {
            value,
            est_abs_error: est,
            panels: maps.len(),
            truncation_point: truncation,
            tail_bound,
        })
    }

    /// Smallest `T` (grown geometrically from `1.5 · max|t_j|`) whose tail
    /// majorant is below `tail_rel` times a coarse estimate of `∫|f|`.
    fn truncation_point(&self) -> Result<f64> {
        let nf = self.n as f64;
        let ifl = self.i as f64;
        let largest = self.zeros.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        let sigma = match self.spec.family() {
            Family::Laguerre { alpha } => nf + ifl + alpha + 1.0,
            _ => 0.5 * (nf + ifl + 1.0),
        };
        let min_t = match self.spec.family() {
            Family::Laguerre { .. } => sigma + 2.0,
            _ => (sigma + 2.0).sqrt(),
        };
        let mut big_t = (1.5 * largest).max(min_t).max(2.0);
        let coarse_scale = {
            let maps = self.panels(if self.spec.interval().0.is_finite() { 0.0 } else { -big_t }, big_t);
            let v: Vec<f64> = maps
                .iter()
                .map(|m| self.rule(m, 0.0, 1.0, true))
                .collect::<Result<_>>()?;
            ordered_sum(&v)
        };
        if !(coarse_scale > 0.0) {
            return Err(Error::Numerical(format!(
                "oracle could not size the truncation point (coarse integral {coarse_scale:e})"
            )));
        }
        let target = (self.cfg.tail_rel * coarse_scale).ln();
        for _ in 0..2000 {
            if let Some(ln_tail) = self.ln_tail_majorant(big_t) {
                if ln_tail <= target {
                    return Ok(big_t);
                }
            }
            big_t *= 1.02;
        }
        Err(Error::Numerical("oracle truncation point search did not terminate".into()))
    }
}

/// `ln` of `x^{σ-1} e^{-x} · max(1, x/(x-σ+1))`, an upper bound for the
/// upper incomplete gamma `Γ(σ, x)` when `x > σ - 1`.
fn ln_upper_gamma_bound(sigma: f64, x: f64) -> Option<f64> {
    if x <= sigma - 1.0 || x <= 0.0 {
        return None;
    }
    let factor = (x / (x - sigma + 1.0)).max(1.0);
    Some((sigma - 1.0) * x.ln() - x + factor.ln())
}

/// The tail majorant as reported by the oracle, for external checks.
pub fn tail_majorant(spec: &FamilySpec, n: usize, i: usize, big_t: f64) -> Result<Option<f64>> {
    let cfg = OracleConfig::default();
    let o = Oracle::new(spec, n, i, &cfg)?;
    Ok(o.ln_tail_majorant(big_t).map(f64::exp))
}
