//! Fixtures shared by the benchmarks.

use ortho_l1::FamilySpec;

/// One representative parameter choice per family.
pub fn representative_specs() -> [(&'static str, FamilySpec); 3] {
    [
        ("laguerre", FamilySpec::laguerre(0.5).expect("valid alpha")),
        ("hermite", FamilySpec::hermite()),
        ("jacobi", FamilySpec::jacobi(-0.3, 1.2).expect("valid alpha, beta")),
    ]
}

/// Degrees swept by the scaling benchmarks.
pub const DEGREES: [usize; 4] = [5, 20, 60, 120];
