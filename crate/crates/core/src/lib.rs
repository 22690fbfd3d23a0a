//! L¹-weighted norms and absolute moments of the classical orthogonal
//! polynomial functions (Laguerre, Hermite, Jacobi).
//!
//! The closed-form rules in [`l1rules`] express
//! `∫ |t|^i / i! · |q_n(t)| dt` as alternating sums over the zeros of the
//! underlying polynomial, where `q_n = ω Q_n / k_n` is the weighted function
//! normalized by the squared L²(ω) norm of `Q_n`. Every rule can be checked
//! against [`oracle`], a brute-force integrator that splits the domain at the
//! zeros and integrates each single-sign panel.
//!
//! ```
//! use ortho_l1::l1rules::jacobi_norm;
//!
//! // ∫_{-1}^{1} (5/4)|3t² - 1| dt = 10√3 / 9
//! let ledger = jacobi_norm(0.0, 0.0, 2).unwrap();
//! assert!((ledger.total - 10.0 * 3f64.sqrt() / 9.0).abs() < 1e-14);
//! ```

pub mod error;
pub mod families;
pub mod l1rules;
pub mod oracle;
pub mod special;
pub mod sum;
pub mod worked;
pub mod zeros;

pub use error::{Error, Result};
pub use families::{
    eval_normalized, eval_polynomial, family_identity_residual, log_norm_constant, Family,
    FamilySpec, Identity, NormalizedFunctionValue, N_MAX,
};
pub use l1rules::{MomentRequest, SignedTermLedger, TermEntry};
pub use oracle::{oracle_moment, oracle_signed_moment, OracleConfig, OracleResult};
pub use zeros::{compute_zeros, gauss_rule_check, origin_split, ZeroSet};
