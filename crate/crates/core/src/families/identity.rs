//! Algebraic and differential identities satisfied by the families, evaluated
//! as `LHS - RHS` at a point. Derivatives come from the lowering relations
//! (`L_n' = -L_{n-1}^(α+1)`, `H_n' = 2n H_{n-1}`,
//! `P_n' = (n+α+β+1)/2 · P_{n-1}^(α+1,β+1)`), never from finite differences.

use std::fmt;
use std::str::FromStr;

use super::{
    check_degree, hermite_poly, jacobi_poly, laguerre_poly, ln_norm, ln_weight, normalized, Family,
    FamilySpec,
};
use crate::error::{Error, Result};
use crate::special::{factorial, ln_factorial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `ℓ_n^(α) = ℓ_{n-1}^(α) - ℓ_{n-1}^(α+1)`
    LaguerreShift,
    /// `L_n^(α) = Σ_k (-1)^k L_{n-k}^(α+1+k)`
    LaguerreExpansion,
    /// `n L_n^(α) = (n+α) L_{n-1}^(α) - t L_{n-1}^(α+1)`
    LaguerreLowering,
    /// `t L_n^(α+1) = (n+α) L_{n-1}^(α) - (n-t) L_n^(α)`
    LaguerreRaising,
    /// `t y'' + (α+1-t) y' + n y = 0`
    LaguerreOde,
    /// `d/dt ℓ_n^(α) = ℓ_{n+1}^(α-1)` (needs `α > 0`)
    LaguerreDerivative,
    /// `h_n^(k) = (-1)^k 2^k (n+1)…(n+k) h_{n+k}`
    HermiteDerivative { order: usize },
    /// `y'' - 2t y' + 2n y = 0`
    HermiteOde,
    /// `h_n(-t) = (-1)^n h_n(t)`
    HermiteParity,
    /// `P_n^(α,β)(t) = (-1)^n P_n^(β,α)(-t)`
    JacobiSymmetry,
    /// `p_n^(α,β)(-t) = (-1)^n p_n^(β,α)(t)`
    JacobiParity,
    /// `(1-t²) y'' + (β-α-(α+β+2)t) y' + n(n+α+β+1) y = 0`
    JacobiOde,
    /// `d/dt p_n^(α,β) = -(n+α+β)/2 · p_{n+1}^(α-1,β-1)` (needs `α, β > 0`)
    JacobiDerivative,
    /// `p_{n-1}^(α+1,β+1)` as a combination of `p_{n-1}, p_n, p_{n+1}`
    JacobiRaise,
    /// three-term recurrence for `p_{n+1}^(α,β)`
    JacobiRecurrence,
    /// `p_{n-1}^(α+1,β+1)` as a combination of `p_{n-1}` and `p_n`
    JacobiRaiseTwoTerm,
}

impl Identity {
    pub const ALL: [Identity; 16] = [
        Identity::LaguerreShift,
        Identity::LaguerreExpansion,
        Identity::LaguerreLowering,
        Identity::LaguerreRaising,
        Identity::LaguerreOde,
        Identity::LaguerreDerivative,
        Identity::HermiteDerivative { order: 1 },
        Identity::HermiteOde,
        Identity::HermiteParity,
        Identity::JacobiSymmetry,
        Identity::JacobiParity,
        Identity::JacobiOde,
        Identity::JacobiDerivative,
        Identity::JacobiRaise,
        Identity::JacobiRecurrence,
        Identity::JacobiRaiseTwoTerm,
    ];

    pub fn family_name(&self) -> &'static str {
        use Identity::*;
        match self {
            LaguerreShift | LaguerreExpansion | LaguerreLowering | LaguerreRaising
            | LaguerreOde | LaguerreDerivative => "laguerre",
            HermiteDerivative { .. } | HermiteOde | HermiteParity => "hermite",
            _ => "jacobi",
        }
    }

    /// Differential equations are checked against a looser tolerance.
    pub fn is_ode(&self) -> bool {
        matches!(
            self,
            Identity::LaguerreOde | Identity::HermiteOde | Identity::JacobiOde
        )
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Identity::*;
        let s = match self {
            LaguerreShift => "laguerre-shift",
            LaguerreExpansion => "laguerre-expansion",
            LaguerreLowering => "laguerre-lowering",
            LaguerreRaising => "laguerre-raising",
            LaguerreOde => "laguerre-ode",
            LaguerreDerivative => "laguerre-derivative",
            HermiteDerivative { order } => return write!(f, "hermite-derivative:{order}"),
            HermiteOde => "hermite-ode",
            HermiteParity => "hermite-parity",
            JacobiSymmetry => "jacobi-symmetry",
            JacobiParity => "jacobi-parity",
            JacobiOde => "jacobi-ode",
            JacobiDerivative => "jacobi-derivative",
            JacobiRaise => "jacobi-raise",
            JacobiRecurrence => "jacobi-recurrence",
            JacobiRaiseTwoTerm => "jacobi-raise-two-term",
        };
        f.write_str(s)
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(order) = s.strip_prefix("hermite-derivative") {
            let order = match order.strip_prefix(':') {
                None if order.is_empty() => 1,
                Some(k) => k
                    .parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| Error::Usage(format!("bad derivative order in '{s}'")))?,
                None => return Err(Error::Usage(format!("unknown identity '{s}'"))),
            };
            return Ok(Identity::HermiteDerivative { order });
        }
        Identity::ALL
            .iter()
            .copied()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| Error::Usage(format!("unknown identity '{s}'")))
    }
}

/// Both sides of an identity and the magnitude of the largest term involved.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityEvaluation {
    pub lhs: f64,
    pub rhs: f64,
    pub scale: f64,
}

impl IdentityEvaluation {
    pub fn residual(&self) -> f64 {
        self.lhs - self.rhs
    }

    fn from_terms(lhs: f64, rhs: f64, terms: &[f64]) -> Self {
        let scale = terms
            .iter()
            .chain([lhs, rhs].iter())
            .fold(0.0f64, |m, x| m.max(x.abs()));
        Self { lhs, rhs, scale }
    }
}

/// `LHS - RHS` of the selected identity at `t`.
pub fn family_identity_residual(id: Identity, spec: &FamilySpec, n: usize, t: f64) -> Result<f64> {
    Ok(evaluate_identity(id, spec, n, t)?.residual())
}

fn sign_pow(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

pub fn evaluate_identity(id: Identity, spec: &FamilySpec, n: usize, t: f64) -> Result<IdentityEvaluation> {
    check_degree(n)?;
    if !t.is_finite() {
        return Err(Error::Domain(format!("evaluation point must be finite, got {t}")));
    }
    let nf = n as f64;
    match (id, spec.family()) {
        (Identity::LaguerreShift, Family::Laguerre { alpha }) => {
            need(n >= 1, || "laguerre-shift needs n >= 1".into())?;
            let lhs = normalized(spec, n, t)?;
            let a = normalized(spec, n - 1, t)?;
            let b = normalized(&FamilySpec::laguerre(alpha + 1.0)?, n - 1, t)?;
            Ok(IdentityEvaluation::from_terms(lhs, a - b, &[a, b]))
        }
        (Identity::LaguerreExpansion, Family::Laguerre { alpha }) => {
            let lhs = laguerre_poly(alpha, n, t);
            let terms: Vec<f64> = (0..=n)
                .map(|k| sign_pow(k) * laguerre_poly(alpha + 1.0 + k as f64, n - k, t))
                .collect();
            let rhs = crate::sum::ordered_sum(&terms);
            Ok(IdentityEvaluation::from_terms(lhs, rhs, &terms))
        }
        (Identity::LaguerreLowering, Family::Laguerre { alpha }) => {
            need(n >= 1, || "laguerre-lowering needs n >= 1".into())?;
            let lhs = nf * laguerre_poly(alpha, n, t);
            let a = (nf + alpha) * laguerre_poly(alpha, n - 1, t);
            let b = t * laguerre_poly(alpha + 1.0, n - 1, t);
            Ok(IdentityEvaluation::from_terms(lhs, a - b, &[a, b]))
        }
        (Identity::LaguerreRaising, Family::Laguerre { alpha }) => {
            need(n >= 1, || "laguerre-raising needs n >= 1".into())?;
            let lhs = t * laguerre_poly(alpha + 1.0, n, t);
            let a = (nf + alpha) * laguerre_poly(alpha, n - 1, t);
            let b = (nf - t) * laguerre_poly(alpha, n, t);
            Ok(IdentityEvaluation::from_terms(lhs, a - b, &[a, b]))
        }
        (Identity::LaguerreOde, Family::Laguerre { alpha }) => {
            let y = laguerre_poly(alpha, n, t);
            let dy = if n >= 1 { -laguerre_poly(alpha + 1.0, n - 1, t) } else { 0.0 };
            let d2y = if n >= 2 { laguerre_poly(alpha + 2.0, n - 2, t) } else { 0.0 };
            let terms = [t * d2y, (alpha + 1.0 - t) * dy, nf * y];
            Ok(IdentityEvaluation::from_terms(terms.iter().sum(), 0.0, &terms))
        }
        (Identity::LaguerreDerivative, Family::Laguerre { alpha }) => {
            need(alpha > 0.0, || format!("laguerre-derivative needs alpha > 0, got {alpha}"))?;
            need(t > 0.0, || format!("laguerre-derivative needs t > 0, got {t}"))?;
            // d/dt [t^α e^{-t} L_n] / k_n = ℓ_n (α/t - 1) - t^α e^{-t} L_{n-1}^(α+1) / k_n
            let ell = normalized(spec, n, t)?;
            let a = ell * (alpha / t - 1.0);
            let b = if n >= 1 {
                (ln_weight(spec, t)? - ln_norm(spec, n)).exp() * laguerre_poly(alpha + 1.0, n - 1, t)
            } else {
                0.0
            };
            let rhs = normalized(&FamilySpec::laguerre(alpha - 1.0)?, n + 1, t)?;
            Ok(IdentityEvaluation::from_terms(a - b, rhs, &[a, b]))
        }
        (Identity::HermiteDerivative { order }, Family::Hermite) => {
            // Leibniz on e^{-t²}·H_n with (e^{-t²})^(j) = (-1)^j H_j e^{-t²}
            // and H_n^(m) = 2^m n!/(n-m)! H_{n-m}.
            let pref = (-t * t - ln_norm(spec, n)).exp();
            let terms: Vec<f64> = (0..=order)
                .map(|j| {
                    let m = order - j;
                    if m > n {
                        return 0.0;
                    }
                    let binom = factorial(order) / (factorial(j) * factorial(m));
                    let dh = (m as f64 * std::f64::consts::LN_2 + ln_factorial(n) - ln_factorial(n - m)).exp()
                        * hermite_poly(n - m, t);
                    pref * binom * sign_pow(j) * hermite_poly(j, t) * dh
                })
                .collect();
            let lhs = crate::sum::ordered_sum(&terms);
            let coef = sign_pow(order)
                * (order as f64 * std::f64::consts::LN_2 + ln_factorial(n + order) - ln_factorial(n)).exp();
            let rhs = coef * normalized(spec, n + order, t)?;
            Ok(IdentityEvaluation::from_terms(lhs, rhs, &terms))
        }
        (Identity::HermiteOde, Family::Hermite) => {
            let y = hermite_poly(n, t);
            let dy = if n >= 1 { 2.0 * nf * hermite_poly(n - 1, t) } else { 0.0 };
            let d2y = if n >= 2 { 4.0 * nf * (nf - 1.0) * hermite_poly(n - 2, t) } else { 0.0 };
            let terms = [d2y, -2.0 * t * dy, 2.0 * nf * y];
            Ok(IdentityEvaluation::from_terms(terms.iter().sum(), 0.0, &terms))
        }
        (Identity::HermiteParity, Family::Hermite) => {
            let lhs = normalized(spec, n, -t)?;
            let rhs = sign_pow(n) * normalized(spec, n, t)?;
            Ok(IdentityEvaluation::from_terms(lhs, rhs, &[]))
        }
        (Identity::JacobiSymmetry, Family::Jacobi { alpha, beta }) => {
            let lhs = jacobi_poly(alpha, beta, n, t);
            let rhs = sign_pow(n) * jacobi_poly(beta, alpha, n, -t);
            Ok(IdentityEvaluation::from_terms(lhs, rhs, &[]))
        }
        (Identity::JacobiParity, Family::Jacobi { alpha, beta }) => {
            let lhs = normalized(spec, n, -t)?;
            let rhs = sign_pow(n) * normalized(&FamilySpec::jacobi(beta, alpha)?, n, t)?;
            Ok(IdentityEvaluation::from_terms(lhs, rhs, &[]))
        }
        (Identity::JacobiOde, Family::Jacobi { alpha, beta }) => {
            let s = alpha + beta;
            let y = jacobi_poly(alpha, beta, n, t);
            let dy = if n >= 1 {
                0.5 * (nf + s + 1.0) * jacobi_poly(alpha + 1.0, beta + 1.0, n - 1, t)
            } else {
                0.0
            };
            let d2y = if n >= 2 {
                0.25 * (nf + s + 1.0) * (nf + s + 2.0) * jacobi_poly(alpha + 2.0, beta + 2.0, n - 2, t)
            } else {
                0.0
            };
            let terms = [
                (1.0 - t * t) * d2y,
                (beta - alpha - (s + 2.0) * t) * dy,
                nf * (nf + s + 1.0) * y,
            ];
            Ok(IdentityEvaluation::from_terms(terms.iter().sum(), 0.0, &terms))
        }
        (Identity::JacobiDerivative, Family::Jacobi { alpha, beta }) => {
            need(alpha > 0.0 && beta > 0.0, || {
                format!("jacobi-derivative needs alpha, beta > 0, got ({alpha}, {beta})")
            })?;
            need(t > -1.0 && t < 1.0, || format!("jacobi-derivative needs -1 < t < 1, got {t}"))?;
            let s = alpha + beta;
            let p = normalized(spec, n, t)?;
            let a = p * (beta / (1.0 + t) - alpha / (1.0 - t));
            let b = if n >= 1 {
                (ln_weight(spec, t)? - ln_norm(spec, n)).exp()
                    * 0.5
                    * (nf + s + 1.0)
                    * jacobi_poly(alpha + 1.0, beta + 1.0, n - 1, t)
            } else {
                0.0
            };
            let rhs = -0.5 * (nf + s) * normalized(&FamilySpec::jacobi(alpha - 1.0, beta - 1.0)?, n + 1, t)?;
            Ok(IdentityEvaluation::from_terms(a + b, rhs, &[a, b]))
        }
        (Identity::JacobiRaise, Family::Jacobi { alpha, beta }) => {
            let s = alpha + beta;
            check_raise_domain(n, s)?;
            let lhs = normalized(&spec.shifted(1.0), n - 1, t)?;
            let c = 2.0 * nf + s;
            let a = (nf + s) * (nf + s + 1.0) / (c * (c - 1.0)) * normalized(spec, n - 1, t)?;
            let b = (nf + s + 1.0) * (alpha - beta) / (c * (c + 2.0)) * normalized(spec, n, t)?;
            let d = (nf + alpha + 1.0) * (nf + beta + 1.0) / ((c + 2.0) * (c + 3.0))
                * normalized(spec, n + 1, t)?;
            Ok(IdentityEvaluation::from_terms(lhs, a + b - d, &[a, b, d]))
        }
        (Identity::JacobiRecurrence, Family::Jacobi { alpha, beta }) => {
            let s = alpha + beta;
            check_raise_domain(n, s)?;
            let c = 2.0 * nf + s;
            let lhs = (nf + alpha + 1.0) * (nf + beta + 1.0) / (c + 3.0) * normalized(spec, n + 1, t)?;
            let a = -(c + 2.0) * (nf + s) * nf / (c * (c - 1.0)) * normalized(spec, n - 1, t)?;
            let b = ((c + 2.0) * c * t + alpha * alpha - beta * beta) / (2.0 * c) * normalized(spec, n, t)?;
            Ok(IdentityEvaluation::from_terms(lhs, a + b, &[a, b]))
        }
        (Identity::JacobiRaiseTwoTerm, Family::Jacobi { alpha, beta }) => {
            let s = alpha + beta;
            check_raise_domain(n, s)?;
            let c = 2.0 * nf + s;
            let lhs = normalized(&spec.shifted(1.0), n - 1, t)?;
            let a = (nf + s) * (c + 1.0) / (c * (c - 1.0)) * normalized(spec, n - 1, t)?;
            let b = 0.5 * ((alpha - beta) / c - t) * normalized(spec, n, t)?;
            Ok(IdentityEvaluation::from_terms(lhs, a + b, &[a, b]))
        }
        (id, _) => Err(Error::Usage(format!(
            "identity {id} applies to the {} family, not {}",
            id.family_name(),
            spec.name()
        ))),
    }
}

fn check_raise_domain(n: usize, s: f64) -> Result<()> {
    need(n >= 1, || "this identity needs n >= 1".into())?;
    need(2.0 * n as f64 + s - 1.0 > 0.0, || {
        format!("coefficients are singular at n = {n}, alpha + beta = {s}")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_checks() {
        let l0 = FamilySpec::laguerre(0.0).unwrap();
        assert!(family_identity_residual(Identity::LaguerreShift, &l0, 3, 1.7).unwrap().abs() <= 1e-13);
        let h = FamilySpec::hermite();
        assert!(
            family_identity_residual(Identity::HermiteDerivative { order: 1 }, &h, 2, 0.3)
                .unwrap()
                .abs()
                <= 1e-13
        );
        let j = FamilySpec::jacobi(0.5, -0.25).unwrap();
        assert!(family_identity_residual(Identity::JacobiRaiseTwoTerm, &j, 4, -0.4).unwrap().abs() <= 1e-12);
    }

    #[test]
    fn ids_round_trip_through_strings() {
        for id in Identity::ALL {
            assert_eq!(id.to_string().parse::<Identity>().unwrap(), id);
        }
        assert_eq!(
            "hermite-derivative:3".parse::<Identity>().unwrap(),
            Identity::HermiteDerivative { order: 3 }
        );
        assert!(matches!("bessel-ode".parse::<Identity>(), Err(Error::Usage(_))));
        assert!("hermite-derivative:0".parse::<Identity>().is_err());
    }

    #[test]
    fn wrong_family_is_usage_error() {
        let h = FamilySpec::hermite();
        assert!(matches!(
            family_identity_residual(Identity::JacobiOde, &h, 3, 0.1),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn higher_hermite_derivatives() {
        let h = FamilySpec::hermite();
        for order in 1..=4 {
            for n in 0..8 {
                let e = evaluate_identity(Identity::HermiteDerivative { order }, &h, n, 0.8).unwrap();
                assert!(e.residual().abs() <= 1e-13 * e.scale.max(1e-300), "order {order} n {n}: {e:?}");
            }
        }
    }
}
