//! Zeros of `Q_n` and the Christoffel numbers of the `n`-point Gauss rule.
//!
//! The zeros are the eigenvalues of the symmetric tridiagonal Jacobi matrix
//! built from the monic recurrence coefficients; the Christoffel numbers are
//! `μ₀ v₁ⱼ²` where `v₁ⱼ` is the first component of the normalized eigenvector.
//! Eigenvalues come from implicit-shift QL, followed by one Newton step on the
//! recurrence-evaluated polynomial.

use crate::error::{Error, Result};
use crate::families::{check_degree, poly_with_derivative, Family, FamilySpec};
use crate::special::ln_gamma;
use crate::sum::CompensatedSum;

/// Computed zeros within this distance of the origin are pinned to `0.0`.
pub const ORIGIN_SNAP: f64 = 1e-13;

const MAX_QL_ITERATIONS: usize = 60;

/// Sorted zeros of `Q_n` together with the Gauss weights.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroSet {
    pub family: FamilySpec,
    pub n: usize,
    /// Strictly increasing, all inside the open interval.
    pub zeros: Vec<f64>,
    /// Number of zeros `<= 0`, so that `0 ∈ [t_{n0}, t_{n0+1})` with
    /// `t_0 = a` and `t_{n+1} = b` (1-based).
    pub n0: usize,
    pub christoffel: Vec<f64>,
}

impl ZeroSet {
    /// `Σ λ_j f(t_j)`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.zeros
            .iter()
            .zip(&self.christoffel)
            .map(|(&t, &w)| w * f(t))
            .collect::<CompensatedSum>()
            .total()
    }
}

/// Diagonal and squared off-diagonal of the monic Jacobi matrix.
/// `off_sq[k]` couples rows `k-1` and `k` (index 0 unused).
pub fn recurrence_coefficients(spec: &FamilySpec, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut diag = Vec::with_capacity(n);
    let mut off_sq = Vec::with_capacity(n);
    for k in 0..n {
        let kf = k as f64;
        let (a, b) = match spec.family() {
            Family::Laguerre { alpha } => (2.0 * kf + alpha + 1.0, kf * (kf + alpha)),
            Family::Hermite => (0.0, kf / 2.0),
            Family::Jacobi { alpha, beta } => {
                let s = alpha + beta;
                let c = 2.0 * kf + s;
                let a = if k == 0 {
                    (beta - alpha) / (s + 2.0)
                } else {
                    (beta * beta - alpha * alpha) / (c * (c + 2.0))
                };
                let b = match k {
                    0 => 0.0,
                    // the (k + α + β) factor cancels against (2k + α + β - 1) at k = 1
                    1 => 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s)),
                    _ => {
                        4.0 * kf * (kf + alpha) * (kf + beta) * (kf + s)
                            / (c * c * (c + 1.0) * (c - 1.0))
                    }
                };
                (a, b)
            }
        };
        diag.push(a);
        off_sq.push(b);
    }
    (diag, off_sq)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix, tracking only the
/// first row of the eigenvector matrix. `sub[i]` couples `i` and `i+1`.
fn tridiagonal_ql(diag: &mut [f64], sub: &mut [f64], first_row: &mut [f64]) -> Result<()> {
    let n = diag.len();
    if n == 0 {
        return Ok(());
    }
    sub[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if sub[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::Numerical(format!(
                    "tridiagonal QL did not converge for eigenvalue {l} of {n} after {MAX_QL_ITERATIONS} sweeps (residual coupling {:e})",
                    sub[l]
                )));
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * sub[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + sub[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * sub[i];
                let b = c * sub[i];
                r = f.hypot(g);
                sub[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    sub[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                let fz = first_row[i + 1];
                first_row[i + 1] = s * first_row[i] + c * fz;
                first_row[i] = c * first_row[i] - s * fz;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            sub[l] = g;
            sub[m] = 0.0;
        }
    }
    Ok(())
}

fn is_symmetric(spec: &FamilySpec) -> bool {
    match spec.family() {
        Family::Hermite => true,
        Family::Jacobi { alpha, beta } => alpha == beta,
        Family::Laguerre { .. } => false,
    }
}

/// Zeros of `Q_n` (`1 <= n <= N_MAX`) with Christoffel numbers and the
/// origin-split index.
pub fn compute_zeros(spec: &FamilySpec, n: usize) -> Result<ZeroSet> {
    check_degree(n)?;
    if n == 0 {
        return Err(Error::Usage("Q_0 has no zeros; n must be >= 1".into()));
    }
    let (mut diag, off_sq) = recurrence_coefficients(spec, n);
    let mut sub: Vec<f64> = (0..n)
        .map(|i| if i + 1 < n { off_sq[i + 1].sqrt() } else { 0.0 })
        .collect();
    let mut first_row = vec![0.0; n];
    first_row[0] = 1.0;
    tridiagonal_ql(&mut diag, &mut sub, &mut first_row)?;

    let mu0 = spec.zeroth_moment();
    let mut pairs: Vec<(f64, f64)> = diag
        .iter()
        .zip(&first_row)
        .map(|(&t, &v)| (newton_step(spec, n, t), mu0 * v * v))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (mut zeros, mut christoffel): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();

    if is_symmetric(spec) {
        for j in 0..n / 2 {
            let k = n - 1 - j;
            let t = 0.5 * (zeros[k] - zeros[j]);
            let w = 0.5 * (christoffel[k] + christoffel[j]);
            zeros[j] = -t;
            zeros[k] = t;
            christoffel[j] = w;
            christoffel[k] = w;
        }
        if n % 2 == 1 {
            zeros[n / 2] = 0.0;
        }
    }
    for t in zeros.iter_mut() {
        if t.abs() <= ORIGIN_SNAP {
            *t = 0.0;
        }
    }

    let (a, b) = spec.interval();
    let ordered = zeros.windows(2).all(|w| w[0] < w[1]);
    let interior = zeros.iter().all(|&t| t > a && t < b);
    if !ordered || !interior {
        return Err(Error::Numerical(format!(
            "zeros of the degree-{n} {} polynomial are not strictly increasing inside ({a}, {b})",
            spec.name()
        )));
    }
    let n0 = split_index(&zeros);
    Ok(ZeroSet {
        family: *spec,
        n,
        zeros,
        n0,
        christoffel,
    })
}

/// One Newton step `t - Q_n(t)/Q_n'(t)`.
pub fn newton_step(spec: &FamilySpec, n: usize, t: f64) -> f64 {
    let (p, dp) = poly_with_derivative(spec, n, t);
    if dp == 0.0 || !dp.is_finite() || !p.is_finite() {
        return t;
    }
    let next = t - p / dp;
    if next.is_finite() {
        next
    } else {
        t
    }
}

fn split_index(zeros: &[f64]) -> usize {
    zeros.iter().take_while(|&&t| t <= 0.0).count()
}

/// The index `n0` with `0 ∈ [t_{n0}, t_{n0+1})`; a zero exactly at the
/// origin is the left end of that interval.
pub fn origin_split(zs: &ZeroSet) -> usize {
    split_index(&zs.zeros)
}

/// `∫_a^b t^k ω(t) dt` for `k = 0..=max_power`.
pub fn weighted_monomial_moments(spec: &FamilySpec, max_power: usize) -> Vec<f64> {
    let mut m = Vec::with_capacity(max_power + 1);
    match spec.family() {
        Family::Laguerre { alpha } => {
            let mut v = ln_gamma(alpha + 1.0).exp();
            for k in 0..=max_power {
                if k > 0 {
                    v *= k as f64 + alpha;
                }
                m.push(v);
            }
        }
        Family::Hermite => {
            // ∫ t^{2j} e^{-t²} = Γ(j + 1/2)
            let mut even = std::f64::consts::PI.sqrt();
            for k in 0..=max_power {
                if k % 2 == 1 {
                    m.push(0.0);
                } else {
                    if k > 0 {
                        even *= (k - 1) as f64 / 2.0;
                    }
                    m.push(even);
                }
            }
        }
        Family::Jacobi { alpha, beta } => {
            // integrating d/dt[t^k (1-t)^{α+1} (1+t)^{β+1}] over (-1, 1):
            // k m_{k-1} + (β - α) m_k - (k + α + β + 2) m_{k+1} = 0
            let s = alpha + beta;
            m.push(spec.zeroth_moment());
            for k in 0..max_power {
                let prev = if k == 0 { 0.0 } else { k as f64 * m[k - 1] };
                let next = (prev + (beta - alpha) * m[k]) / (k as f64 + s + 2.0);
                m.push(next);
            }
        }
    }
    m
}

/// Apply the `n`-point Gauss rule to `p` (ascending coefficients, degree
/// `<= 2n-1`) and return `(Σ λ_j p(t_j), ∫ p ω)`.
pub fn gauss_rule_check(spec: &FamilySpec, n: usize, coeffs: &[f64]) -> Result<(f64, f64)> {
    let degree = coeffs
        .iter()
        .rposition(|&c| c != 0.0)
        .unwrap_or(0);
    if n == 0 || degree > 2 * n - 1 {
        return Err(Error::Usage(format!(
            "an {n}-point Gauss rule is exact only up to degree {}, polynomial has degree {degree}",
            (2 * n).saturating_sub(1)
        )));
    }
    let zs = compute_zeros(spec, n)?;
    let horner = |t: f64| coeffs[..=degree].iter().rev().fold(0.0, |acc, &c| acc * t + c);
    let quadrature = zs.integrate(horner);
    let moments = weighted_monomial_moments(spec, degree);
    let exact = coeffs[..=degree]
        .iter()
        .zip(&moments)
        .map(|(c, m)| c * m)
        .collect::<CompensatedSum>()
        .total();
    Ok((quadrature, exact))
}

/// `max_j |Q_n(t_j)|` relative to `|Q_n'(t_j)|` times the gap to the nearest
/// neighbour; a scale-free measure of how well each zero was located.
pub fn zero_residuals(zs: &ZeroSet) -> Vec<f64> {
    let n = zs.zeros.len();
    (0..n)
        .map(|j| {
            let t = zs.zeros[j];
            let (p, dp) = poly_with_derivative(&zs.family, zs.n, t);
            let gap = [j.checked_sub(1), (j + 1 < n).then_some(j + 1)]
                .into_iter()
                .flatten()
                .map(|k| (zs.zeros[k] - t).abs())
                .fold(f64::INFINITY, f64::min);
            let gap = if gap.is_finite() { gap } else { 1.0 };
            p.abs() / (dp.abs() * gap)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn closed_form_zero_sets() {
        let h = compute_zeros(&FamilySpec::hermite(), 2).unwrap();
        let r = 0.5f64.sqrt();
        assert_relative_eq!(h.zeros[0], -r, max_relative = 1e-15);
        assert_relative_eq!(h.zeros[1], r, max_relative = 1e-15);

        let l = compute_zeros(&FamilySpec::laguerre(0.0).unwrap(), 2).unwrap();
        assert_relative_eq!(l.zeros[0], 2.0 - 2f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(l.zeros[1], 2.0 + 2f64.sqrt(), max_relative = 1e-15);

        let j = compute_zeros(&FamilySpec::jacobi(0.0, 0.0).unwrap(), 3).unwrap();
        let r = 0.6f64.sqrt();
        assert_relative_eq!(j.zeros[0], -r, max_relative = 1e-15);
        assert_eq!(j.zeros[1], 0.0);
        assert_relative_eq!(j.zeros[2], r, max_relative = 1e-15);

        let h3 = compute_zeros(&FamilySpec::hermite(), 3).unwrap();
        assert_eq!(h3.zeros[1], 0.0);
        assert_relative_eq!(h3.zeros[2], 1.5f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn origin_split_examples() {
        for n in 1..8 {
            let l = compute_zeros(&FamilySpec::laguerre(1.5).unwrap(), n).unwrap();
            assert_eq!(origin_split(&l), 0);
        }
        let h3 = compute_zeros(&FamilySpec::hermite(), 3).unwrap();
        assert_eq!(origin_split(&h3), 2);
        assert_eq!(h3.n0, 2);
        let j = compute_zeros(&FamilySpec::jacobi(1.0, 0.0).unwrap(), 2).unwrap();
        assert_eq!(origin_split(&j), 1);
        let h4 = compute_zeros(&FamilySpec::hermite(), 4).unwrap();
        assert_eq!(h4.n0, 2);
    }

    #[test]
    fn gauss_rule_examples() {
        let (q, e) = gauss_rule_check(&FamilySpec::hermite(), 1, &[0.0, 1.0]).unwrap();
        assert_eq!((q, e), (0.0, 0.0));
        let (q, e) = gauss_rule_check(&FamilySpec::laguerre(0.0).unwrap(), 2, &[0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_relative_eq!(q, 6.0, max_relative = 1e-14);
        assert_relative_eq!(e, 6.0, max_relative = 1e-15);
        let (q, e) = gauss_rule_check(&FamilySpec::jacobi(0.0, 0.0).unwrap(), 2, &[0.0, 0.0, 1.0]).unwrap();
        assert_relative_eq!(q, 2.0 / 3.0, max_relative = 1e-14);
        assert_relative_eq!(e, 2.0 / 3.0, max_relative = 1e-15);
        assert!(matches!(
            gauss_rule_check(&FamilySpec::hermite(), 1, &[0.0, 0.0, 1.0]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn degree_limits() {
        assert!(matches!(compute_zeros(&FamilySpec::hermite(), 121), Err(Error::Capability(_))));
        assert!(matches!(compute_zeros(&FamilySpec::hermite(), 0), Err(Error::Usage(_))));
        let zs = compute_zeros(&FamilySpec::hermite(), 120).unwrap();
        assert_eq!(zs.zeros.len(), 120);
        let zs = compute_zeros(&FamilySpec::laguerre(4.0).unwrap(), 120).unwrap();
        assert!(zero_residuals(&zs).iter().all(|&r| r <= 1e-10));
    }

    #[test]
    fn jacobi_moments_small_powers() {
        // ∫ t^k (1-t)(1+t)^2 dt by direct expansion
        let spec = FamilySpec::jacobi(1.0, 2.0).unwrap();
        let m = weighted_monomial_moments(&spec, 4);
        // (1-t)(1+t)^2 = 1 + t - t² - t³
        let exact = |k: i32| {
            let mono = |p: i32| if p % 2 == 0 { 2.0 / (p + 1) as f64 } else { 0.0 };
            mono(k) + mono(k + 1) - mono(k + 2) - mono(k + 3)
        };
        for k in 0..=4 {
            assert_relative_eq!(m[k as usize], exact(k), max_relative = 1e-14, epsilon = 1e-15);
        }
    }
}
