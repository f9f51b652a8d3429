//! Tolerance policy shared by every characterization test.
//!
//! Scalar equality is relative — `|lhs − rhs| ≤ tol · max(1, |lhs|, |rhs|)` —
//! because the tested quantities span orders of magnitude. Matrix tests use
//! the max-entrywise absolute difference against the same base tolerance.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Base relative tolerance for scalar equality/inequality tests.
    pub scalar: f64,
    /// Absolute tolerance for max-entry matrix comparisons.
    pub matrix: f64,
    /// Eigenvalue grouping tolerance; `None` selects `1e-9 · max(1, λ₀)`.
    pub grouping: Option<f64>,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { scalar: 1e-6, matrix: 1e-6, grouping: None }
    }
}

impl Tolerances {
    /// A single base tolerance for both scalar and matrix tests.
    pub fn with_base(tol: f64) -> Self {
        Tolerances { scalar: tol, matrix: tol, ..Default::default() }
    }

    /// Effective tolerance for a scalar comparison of `lhs` and `rhs`.
    pub fn scalar_for(&self, lhs: f64, rhs: f64) -> f64 {
        self.scalar * 1.0_f64.max(lhs.abs()).max(rhs.abs())
    }
}
