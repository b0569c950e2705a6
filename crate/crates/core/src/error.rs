//! Error type shared by all modules.

use thiserror::Error;

/// Errors surfaced by polynomial arithmetic, root finding, and the
/// limit-ratio methods.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The leading `y`-coefficient of a specialized polynomial (numerically)
    /// vanished: a fiber root escaped to infinity and the fiber census is
    /// ill-posed at this point.
    #[error("leading coefficient |a_g(x0)| = {magnitude:e} at or below floor {floor:e}")]
    DegenerateLeading { magnitude: f64, floor: f64 },

    /// The discriminant is identically zero: the polynomial has a repeated
    /// factor in `y`, so jump analysis does not apply.
    #[error("discriminant in y is identically zero (repeated y-factor)")]
    NotSquarefreeGenerically,

    /// The simultaneous root iteration left `stuck` roots above tolerance.
    #[error("root iteration failed to converge for {stuck} root(s)")]
    NoConvergence { stuck: usize },

    /// Successive quadrature refinements disagree by more than the allowed
    /// multiple of the target tolerance.
    #[error("quadrature did not converge: refinement delta {delta:e} exceeds {limit:e}")]
    QuadratureNonconvergent { delta: f64, limit: f64 },

    /// Doubling the scan grid changed the number of detected jumps, so cells
    /// may contain more than one jump each.
    #[error("jump scan too coarse: {coarse} jump cells at base grid, {fine} at doubled grid")]
    GridTooCoarse { coarse: usize, fine: usize },

    /// The integrand's denominator nearly vanishes on the integration
    /// contour.
    #[error("pole near contour: min |p| on contour = {min_abs:e}")]
    PoleNearContour { min_abs: f64 },

    /// The operation requires a reciprocal polynomial (centrally symmetric
    /// coefficient matrix) and the input is not one.
    #[error("polynomial is not reciprocal (coefficient matrix not centrally symmetric)")]
    NonReciprocal,

    /// A nonunimodular root was found in the all-unimodular sector.
    #[error("sector violation: root {root} (|root| = {modulus}) inside the unimodular sector")]
    SectorViolation { root: String, modulus: f64 },

    /// Malformed family or polynomial specification.
    #[error("bad spec: {0}")]
    BadSpec(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
