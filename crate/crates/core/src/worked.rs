//! Closed-form reference integrals for low-degree functions, each paired
//! with the rule that reproduces it.

use crate::error::Result;
use crate::families::FamilySpec;
use crate::l1rules::{
    hermite_moment, hermite_norm, jacobi_moment, jacobi_norm, laguerre_moment, laguerre_norm,
    laguerre_top_moment,
};
use std::f64::consts::PI;

/// Which rule evaluates a worked example.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Same-parameter norm rule for `∥q_n∥₁`.
    Norm,
    /// Zero-sum rule for the `i`-th absolute moment.
    Moment,
    /// `∫ t^{n-1} |ℓ_n^(α)|`, Laguerre only.
    TopMoment,
}

#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub id: &'static str,
    /// The integral as written by hand.
    pub integral: &'static str,
    pub family: FamilySpec,
    pub n: usize,
    pub i: usize,
    pub rule: Rule,
    /// Factor turning the rule's total into the displayed integral.
    pub scale: f64,
    pub exact_text: &'static str,
    pub exact: f64,
}

impl WorkedExample {
    /// `scale ·` (rule total).
    pub fn formula_value(&self) -> Result<f64> {
        use crate::families::Family::*;
        let total = match (self.family.family(), self.rule) {
            (Laguerre { alpha }, Rule::Norm) => laguerre_norm(alpha, self.n)?.total,
            (Laguerre { alpha }, Rule::Moment) => laguerre_moment(alpha, self.n, self.i)?.total,
            (Laguerre { alpha }, Rule::TopMoment) => laguerre_top_moment(alpha, self.n)?.total,
            (Hermite, Rule::Norm) => hermite_norm(self.n)?.total,
            (Hermite, _) => hermite_moment(self.n, self.i)?.total,
            (Jacobi { alpha, beta }, Rule::Norm) => jacobi_norm(alpha, beta, self.n)?.total,
            (Jacobi { alpha, beta }, _) => jacobi_moment(alpha, beta, self.n, self.i)?.total,
        };
        Ok(self.scale * total)
    }

    /// `|formula - exact| / |exact|`.
    pub fn rel_error(&self) -> Result<f64> {
        Ok(((self.formula_value()? - self.exact) / self.exact).abs())
    }
}

/// The sixteen reference integrals.
pub fn worked_examples() -> Vec<WorkedExample> {
    let lag = |a: f64| FamilySpec::laguerre(a).expect("valid parameter");
    let jac = |a: f64, b: f64| FamilySpec::jacobi(a, b).expect("valid parameters");
    let her = FamilySpec::hermite();
    let e = f64::exp;
    let (r2, r3, r6, sp) = (2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt(), PI.sqrt());
    vec![
        WorkedExample {
            id: "laguerre-a0-n2-norm",
            integral: "∫_0^∞ (1/2) e^{-t} |t²-4t+2| dt",
            family: lag(0.0),
            n: 2,
            i: 0,
            rule: Rule::Norm,
            scale: 1.0,
            exact_text: "2e^{-2}(e^{√2}(√2-1) + e^{-√2}(1+√2))",
            exact: 2.0 * e(-2.0) * (e(r2) * (r2 - 1.0) + e(-r2) * (1.0 + r2)),
        },
        WorkedExample {
            id: "laguerre-a0-n2-top",
            integral: "∫_0^∞ (1/2) e^{-t} t |t²-4t+2| dt",
            family: lag(0.0),
            n: 2,
            i: 1,
            rule: Rule::TopMoment,
            scale: 1.0,
            exact_text: "2e^{-2}(e^{√2}(5√2-7) + e^{-√2}(5√2+7))",
            exact: 2.0 * e(-2.0) * (e(r2) * (5.0 * r2 - 7.0) + e(-r2) * (5.0 * r2 + 7.0)),
        },
        WorkedExample {
            id: "laguerre-a2-n1-norm",
            integral: "(1/6) ∫_0^∞ t² |3-t| e^{-t} dt",
            family: lag(2.0),
            n: 1,
            i: 0,
            rule: Rule::Norm,
            scale: 1.0,
            exact_text: "9e^{-3}",
            exact: 9.0 * e(-3.0),
        },
        WorkedExample {
            id: "laguerre-a1-n2-norm",
            integral: "(1/6) ∫_0^∞ t |t²-6t+6| e^{-t} dt",
            family: lag(1.0),
            n: 2,
            i: 0,
            rule: Rule::Norm,
            scale: 1.0,
            exact_text: "e^{-3+√3}(4√3-6) + e^{-3-√3}(4√3+6)",
            exact: e(-3.0 + r3) * (4.0 * r3 - 6.0) + e(-3.0 - r3) * (4.0 * r3 + 6.0),
        },
        WorkedExample {
            id: "laguerre-a1-n2-i1",
            integral: "(1/6) ∫_0^∞ t² |t²-6t+6| e^{-t} dt",
            family: lag(1.0),
            n: 2,
            i: 1,
            rule: Rule::Moment,
            scale: 1.0,
            exact_text: "2e^{-3}(e^{√3}(14√3-24) + e^{-√3}(14√3+24))",
            exact: 2.0 * e(-3.0) * (e(r3) * (14.0 * r3 - 24.0) + e(-r3) * (14.0 * r3 + 24.0)),
        },
        WorkedExample {
            id: "hermite-n2-norm",
            integral: "∫ |2t²-1| e^{-t²} dt",
            family: her,
            n: 2,
            i: 0,
            rule: Rule::Norm,
            scale: 4.0 * sp,
            exact_text: "2√2 e^{-1/2}",
            exact: 2.0 * r2 * e(-0.5),
        },
        WorkedExample {
            id: "hermite-n2-i1",
            integral: "∫ |t(2t²-1)| e^{-t²} dt",
            family: her,
            n: 2,
            i: 1,
            rule: Rule::Moment,
            scale: 4.0 * sp,
            exact_text: "4e^{-1/2} - 1",
            exact: 4.0 * e(-0.5) - 1.0,
        },
        WorkedExample {
            id: "hermite-n3-norm",
            integral: "∫ |t(2t²-3)| e^{-t²} dt",
            family: her,
            n: 3,
            i: 0,
            rule: Rule::Norm,
            scale: 12.0 * sp,
            exact_text: "1 + 4e^{-3/2}",
            exact: 1.0 + 4.0 * e(-1.5),
        },
        WorkedExample {
            id: "hermite-n3-i1",
            integral: "∫ |t²(2t²-3)| e^{-t²} dt",
            family: her,
            n: 3,
            i: 1,
            rule: Rule::Moment,
            scale: 12.0 * sp,
            exact_text: "3√6 e^{-3/2}",
            exact: 3.0 * r6 * e(-1.5),
        },
        WorkedExample {
            id: "hermite-n3-i2",
            integral: "∫ |t³(2t²-3)| e^{-t²} dt",
            family: her,
            n: 3,
            i: 2,
            rule: Rule::Moment,
            scale: 12.0 * sp * 2.0,
            exact_text: "2(7e^{-3/2} - 1/2)",
            exact: 2.0 * (7.0 * e(-1.5) - 0.5),
        },
        WorkedExample {
            id: "jacobi-a0-b0-n2-norm",
            integral: "∫_{-1}^1 (5/4) |3t²-1| dt",
            family: jac(0.0, 0.0),
            n: 2,
            i: 0,
            rule: Rule::Norm,
            scale: 1.0,
            exact_text: "10√3/9",
            exact: 10.0 * r3 / 9.0,
        },
        WorkedExample {
            id: "jacobi-a0-b0-n2-i1",
            integral: "∫_{-1}^1 (5/4) |t(3t²-1)| dt",
            family: jac(0.0, 0.0),
            n: 2,
            i: 1,
            rule: Rule::Moment,
            scale: 1.0,
            exact_text: "25/24",
            exact: 25.0 / 24.0,
        },
        WorkedExample {
            id: "jacobi-a0-b0-n3-norm",
            integral: "∫_{-1}^1 (7/4) |5t³-3t| dt",
            family: jac(0.0, 0.0),
            n: 3,
            i: 0,
            rule: Rule::Norm,
            scale: 1.0,
            exact_text: "91/40",
            exact: 91.0 / 40.0,
        },
        WorkedExample {
            id: "jacobi-a0-b0-n3-i1",
            integral: "∫_{-1}^1 (7/4) |t(5t³-3t)| dt",
            family: jac(0.0, 0.0),
            n: 3,
            i: 1,
            rule: Rule::Moment,
            scale: 1.0,
            exact_text: "(42/25)√(3/5)",
            exact: 42.0 / 25.0 * 0.6f64.sqrt(),
        },
        WorkedExample {
            id: "jacobi-a1-b0-n2-norm",
            integral: "∫_{-1}^1 (3/4) |-5t³+3t²+3t-1| dt",
            family: jac(1.0, 0.0),
            n: 2,
            i: 0,
            rule: Rule::Norm,
            scale: 1.0,
            exact_text: "(72/125)√6",
            exact: 72.0 / 125.0 * r6,
        },
        WorkedExample {
            id: "jacobi-a1-b0-n2-i1",
            integral: "∫_{-1}^1 (3/4) |t(-5t³+3t²+3t-1)| dt",
            family: jac(1.0, 0.0),
            n: 2,
            i: 1,
            rule: Rule::Moment,
            scale: 1.0,
            exact_text: "18921/25000",
            exact: 18921.0 / 25000.0,
        },
    ]
}
