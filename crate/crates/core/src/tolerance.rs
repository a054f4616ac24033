//! Numerical tolerances shared by the eigensolver, the invariant checks
//! and the CLI verification suites.

/// Jacobi stops once the off-diagonal Frobenius norm drops below this times n.
pub const JACOBI_OFF_NORM_PER_N: f64 = 1e-12;
/// Sweep cap; hitting it is an error.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Off-diagonal entries smaller than this are not rotated away.
pub const JACOBI_ROTATION_SKIP: f64 = 1e-30;

/// `|sum of eigenvalues|` (the trace of an adjacency matrix is 0).
pub const TRACE: f64 = 1e-8;
/// `|sum of squared eigenvalues - 2m|`.
pub const SQUARE_TRACE: f64 = 1e-6;
/// Entrywise agreement between a computed and a closed-form spectrum.
pub const SPECTRUM_MATCH: f64 = 1e-7;
/// Slack for energy inequalities, energy additivity and `lambda_1 = k`.
pub const BOUND_SLACK: f64 = 1e-8;
/// Computed Paley energy against `(p - 1)(1 + sqrt p) / 2`.
pub const PALEY_ENERGY: f64 = 1e-6;
/// `ratio = energy / e0` as stored in a report.
pub const RATIO_CONSISTENCY: f64 = 1e-12;
