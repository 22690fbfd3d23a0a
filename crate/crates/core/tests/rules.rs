use ortho_l1::l1rules::*;
use ortho_l1::oracle::gauss_legendre;
use ortho_l1::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn lag(a: f64) -> FamilySpec {
    FamilySpec::laguerre(a).unwrap()
}

fn jac(a: f64, b: f64) -> FamilySpec {
    FamilySpec::jacobi(a, b).unwrap()
}

#[test]
fn corollaries_against_oracle() {
    let o = oracle_moment(&lag(0.5), 7, 0).unwrap().value;
    assert!(rel(laguerre_norm(0.5, 7).unwrap().total, o) <= 1e-9);

    // ∫ t^{n-1} |ℓ_n| = (n-1)! × the i = n-1 absolute moment
    let o = oracle_moment(&lag(1.0), 3, 2).unwrap().value * 2.0;
    assert!(rel(laguerre_top_moment(1.0, 3).unwrap().total, o) <= 1e-9);

    let o = oracle_moment(&lag(0.5), 5, 0).unwrap().value;
    assert!(rel(laguerre_sobolev_norm(2.5, 3, 2).unwrap().total, o) <= 1e-9);

    let o = oracle_moment(&FamilySpec::hermite(), 10, 0).unwrap().value;
    assert!(rel(hermite_norm(10).unwrap().total, o) <= 1e-9);

    let o = oracle_moment(&jac(-0.5, 1.5), 6, 0).unwrap().value;
    assert!(rel(jacobi_norm(-0.5, 1.5, 6).unwrap().total, o) <= 1e-9);
}

#[test]
fn sobolev_norm_shifts_parameters() {
    assert_eq!(
        laguerre_sobolev_norm(1.0, 1, 1).unwrap().total,
        laguerre_norm(0.0, 2).unwrap().total
    );
}

#[test]
fn bounds_dominate_oracle_moments() {
    let o = oracle_moment(&lag(1.5), 9, 3).unwrap().value;
    assert!(bound_laguerre(1.5, 9, 3).unwrap() > o);
    let o = oracle_moment(&FamilySpec::hermite(), 20, 5).unwrap().value;
    assert!(bound_hermite(20, 5).unwrap() > o);
    // the Jacobi bound is for ∫|t|^i |p_n| (no 1/i!)
    let o = oracle_moment(&jac(0.0, 0.0), 3, 2).unwrap().value * 2.0;
    assert!(bound_jacobi(0.0, 0.0, 3, 2).unwrap() > o);
}

#[test]
fn laguerre_bound_accepts_wider_alpha() {
    // α in (-(i+1), -1] is outside every family but allowed by the bound
    assert!(bound_laguerre(-1.5, 3, 2).unwrap().is_finite());
    assert!(matches!(bound_laguerre(-3.0, 3, 2), Err(Error::Domain(_))));
}

#[test]
fn specialisations() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..10 {
        let a = rng.gen_range(-0.9..4.0);
        let b = rng.gen_range(-0.9..4.0);
        for n in 1..=25 {
            let m = laguerre_moment(a, n, 0).unwrap().total;
            assert!(rel(m, laguerre_norm(a, n).unwrap().total) <= 1e-12, "lag a {a} n {n}");
            let top = laguerre_moment(a, n, n - 1).unwrap().total;
            let fact: f64 = (1..n).map(|k| k as f64).product();
            let cor = laguerre_top_moment(a, n).unwrap().total;
            assert!(rel(top * fact, cor) <= 1e-12, "top a {a} n {n}: {} vs {cor}", top * fact);
            let m = jacobi_moment(a, b, n, 0).unwrap().total;
            assert!(rel(m, jacobi_norm(a, b, n).unwrap().total) <= 1e-12, "jac {a} {b} n {n}");
        }
    }
    for n in 1..=25 {
        assert!(rel(hermite_moment(n, 0).unwrap().total, hermite_norm(n).unwrap().total) <= 1e-13);
    }
}

#[test]
fn generic_rule_matches_family_norms() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for draw in 0..10 {
        let spec = match draw % 3 {
            0 => lag(rng.gen_range(-0.9..4.0)),
            1 => FamilySpec::hermite(),
            _ => jac(rng.gen_range(-0.9..4.0), rng.gen_range(-0.9..4.0)),
        };
        for n in 1..=25 {
            let generic = normalize_generic(&spec, n, l1_norm_generic(&spec, n).unwrap()).total;
            let specific = norm(&spec, n).unwrap().total;
            assert!(rel(generic, specific) <= 1e-12, "{spec:?} n {n}: {generic} vs {specific}");
        }
    }
}

#[test]
fn ledgers_are_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..60 {
        let n = rng.gen_range(1..=N_MAX);
        let i = rng.gen_range(0..n.min(I_MAX + 1));
        let spec = match rng.gen_range(0..3) {
            0 => lag(rng.gen_range(-0.9..4.0)),
            1 => FamilySpec::hermite(),
            _ => jac(rng.gen_range(-0.9..4.0), rng.gen_range(-0.9..4.0)),
        };
        let ledger = moment(&MomentRequest::new(spec, n, i).unwrap()).unwrap();
        let abs = ledger.abs_sum();
        assert!(ledger.total.is_finite());
        assert!(ledger.total >= -1e-13 * abs);
        assert!((ledger.total - ledger.naive_total()).abs() <= 1e-13 * abs);
        assert_eq!(ledger.middle_term.is_some(), i % 2 == 1 && !matches!(spec.family(), Family::Laguerre { .. }) && !(matches!(spec.family(), Family::Hermite) && n % 2 == 1));
    }
}

#[test]
fn top_degree_against_oracle() {
    for (spec, i) in [(lag(2.0), 0), (lag(-0.5), 7), (FamilySpec::hermite(), 0), (FamilySpec::hermite(), 5), (jac(0.5, -0.5), 0), (jac(3.0, 1.0), 9)] {
        let f = moment(&MomentRequest::new(spec, N_MAX, i).unwrap()).unwrap().total;
        let o = oracle_moment(&spec, N_MAX, i).unwrap().value;
        assert!(rel(f, o) <= 1e-9, "{spec:?} i {i}: {f} vs {o}");
    }
}

#[test]
fn requests_are_validated() {
    let h = FamilySpec::hermite();
    assert!(matches!(MomentRequest::new(h, 3, 3), Err(Error::Usage(_))));
    assert!(matches!(MomentRequest::new(h, 0, 0), Err(Error::Usage(_))));
    assert!(matches!(MomentRequest::new(h, 100, 61), Err(Error::Capability(_))));
    assert!(MomentRequest::new(h, 100, 60).is_ok());
    assert_eq!(bound(&MomentRequest::new(h, 3, 0).unwrap()).unwrap(), None);
}

/// `q'` via the derivative identities, independent of the library rules.
fn normalized_derivative(spec: &FamilySpec, n: usize, t: f64) -> f64 {
    let q0 = eval_normalized(spec, 0, t).unwrap().value;
    let w_over_k = q0 * (log_norm_constant(spec, 0).unwrap() - log_norm_constant(spec, n).unwrap()).exp();
    let p = eval_polynomial(spec, n, t).unwrap();
    let nf = n as f64;
    let (dlog_w, dp) = match spec.family() {
        Family::Laguerre { alpha } => (
            alpha / t - 1.0,
            if n == 0 { 0.0 } else { -eval_polynomial(&spec.shifted(1.0), n - 1, t).unwrap() },
        ),
        Family::Hermite => (
            -2.0 * t,
            if n == 0 { 0.0 } else { 2.0 * nf * eval_polynomial(spec, n - 1, t).unwrap() },
        ),
        Family::Jacobi { alpha, beta } => (
            -alpha / (1.0 - t) + beta / (1.0 + t),
            if n == 0 {
                0.0
            } else {
                0.5 * (nf + alpha + beta + 1.0) * eval_polynomial(&spec.shifted(1.0), n - 1, t).unwrap()
            },
        ),
    };
    w_over_k * (dlog_w * p + dp)
}

/// `d/dt Σ_k c_k t^{i-k}/(i-k)! q_k(t)` and the scale `Σ |pieces|`.
fn antiderivative_rate(spec: &FamilySpec, n: usize, i: usize, t: f64) -> (f64, f64) {
    let nf = n as f64;
    let mut total = 0.0;
    let mut scale = 0.0;
    for k in 0..=i {
        let c = match spec.family() {
            Family::Laguerre { .. } => if k % 2 == 0 { 1.0 } else { -1.0 },
            Family::Hermite => {
                let f: f64 = ((n - k)..=n).map(|j| j as f64).product();
                -1.0 / (f * 2f64.powi(k as i32 + 1))
            }
            Family::Jacobi { alpha, beta } => {
                let s = alpha + beta;
                let r: f64 = (0..=k).map(|j| nf + s + 1.0 + j as f64).product();
                -2f64.powi(k as i32 + 1) / r
            }
        };
        let shifted = spec.shifted(1.0 + k as f64);
        let p = i - k;
        let fact: f64 = (1..=p).map(|j| j as f64).product();
        let q = eval_normalized(&shifted, n - 1 - k, t).unwrap().value;
        let dq = normalized_derivative(&shifted, n - 1 - k, t);
        let a = if p == 0 { 0.0 } else { c * t.powi(p as i32 - 1) / (fact / p as f64) * q };
        let b = c * t.powi(p as i32) / fact * dq;
        total += a + b;
        scale += a.abs() + b.abs();
    }
    (total, scale)
}

#[test]
fn antiderivative_identities_differentiate_to_the_integrand() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for draw in 0..300 {
        let spec = match draw % 3 {
            0 => lag(rng.gen_range(-0.9..4.0)),
            1 => FamilySpec::hermite(),
            _ => jac(rng.gen_range(-0.9..4.0), rng.gen_range(-0.9..4.0)),
        };
        let n = rng.gen_range(1..=15);
        let i = rng.gen_range(0..n);
        let t = match spec.family() {
            Family::Laguerre { .. } => rng.gen_range(0.01..3.0 * n as f64 + 5.0),
            Family::Hermite => rng.gen_range(-5.0..5.0),
            Family::Jacobi { .. } => rng.gen_range(-0.99..0.99),
        };
        let (rate, scale) = antiderivative_rate(&spec, n, i, t);
        let fact: f64 = (1..=i).map(|j| j as f64).product();
        let integrand = t.powi(i as i32) / fact * eval_normalized(&spec, n, t).unwrap().value;
        assert!(
            (rate - integrand).abs() <= 1e-10 * scale.max(integrand.abs()),
            "{spec:?} n {n} i {i} t {t}: {rate} vs {integrand}"
        );
    }
}

/// `F(y) - F(x) = ∫_x^y t^i/i! q_n` for the library antiderivatives.
#[test]
fn antiderivatives_integrate_correctly() {
    let (nodes, weights) = gauss_legendre(62);
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for draw in 0..90 {
        let (spec, x, y) = match draw % 3 {
            0 => (lag(rng.gen_range(-0.5..3.0)), rng.gen_range(0.1..2.0), rng.gen_range(2.0..4.0)),
            1 => (FamilySpec::hermite(), rng.gen_range(-1.5..0.0), rng.gen_range(0.0..1.5)),
            _ => (jac(rng.gen_range(-0.5..3.0), rng.gen_range(-0.5..3.0)), rng.gen_range(-0.5..0.0), rng.gen_range(0.0..0.5)),
        };
        let n = rng.gen_range(1..=6);
        let i = rng.gen_range(0..n);
        let f = |t: f64| match spec.family() {
            Family::Laguerre { alpha } => laguerre_antiderivative(alpha, n, i, t).unwrap(),
            Family::Hermite => hermite_antiderivative(n, i, t).unwrap(),
            Family::Jacobi { alpha, beta } => jacobi_antiderivative(alpha, beta, n, i, t).unwrap(),
        };
        let fact: f64 = (1..=i).map(|j| j as f64).product();
        let integral: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|(u, w)| {
                let t = x + (y - x) * u;
                w * (y - x) * t.powi(i as i32) / fact * eval_normalized(&spec, n, t).unwrap().value
            })
            .sum();
        let diff = f(y) - f(x);
        assert!((diff - integral).abs() <= 1e-12 * (1.0 + integral.abs()), "{spec:?} n {n} i {i}: {diff} vs {integral}");
    }
}
