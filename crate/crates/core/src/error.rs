//! Error types shared by all modules.

use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Validation and computation failures.
///
/// Every rejected precondition maps to its own variant so callers can tell
/// failures apart without string matching.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("hbar must be positive")]
    NonPositiveHbar,
    #[error("mass must be positive")]
    NonPositiveMass,
    #[error("compactification radius at index {index} must be positive")]
    NonPositiveRadius { index: usize },
    #[error("number of compact dimensions must lie in 1..=6, got {dim}")]
    DimensionOutOfRange { dim: usize },
    #[error("operation requires a single compact dimension (cylinder), geometry has {dim}")]
    NotCylinder { dim: usize },
    #[error("non-propagating incident wave: k1 must be positive")]
    NonPropagatingWave,
    #[error("angular amplitudes F1 and G1 must not both vanish")]
    ZeroAngularAmplitudes,
    #[error("{name} must be a finite number")]
    NonFinite { name: &'static str },
    #[error("amplitude identity violated: {identity}")]
    AmplitudeIdentity { identity: &'static str },
    #[error("wave part `{part}` is not defined in region `{region}`")]
    PartRegionMismatch {
        part: &'static str,
        region: &'static str,
    },
    #[error("finite-difference step must be positive")]
    NonPositiveStep,
    #[error("grid or list must be nonempty")]
    EmptyGrid,
    #[error("grid must be strictly increasing at index {index}")]
    NonMonotoneGrid { index: usize },
    #[error("duplicate surface point in field grid")]
    DuplicatePoint,
    #[error("degenerate grid on nodal set: incident current vanishes at every point")]
    DegenerateGrid,
    #[error("barrier width must be positive")]
    NonPositiveWidth,
    #[error("widths must be positive and strictly decreasing at index {index}")]
    BadWidthList { index: usize },
    #[error("energy cutoff must be positive")]
    NonPositiveCutoff,
    #[error("mode vector has length {got}, geometry has {expected} compact dimensions")]
    ModeDimensionMismatch { expected: usize, got: usize },
    #[error("no measured levels supplied")]
    EmptyLevels,
    #[error("all assigned modes are zero; the quadratic ladder is undetermined")]
    AllZeroModes,
    #[error("inconsistent ladder: level {index} has a nonzero mode but delta_E <= 0")]
    InconsistentLadder { index: usize },
    #[error("measurement uncertainty at level {index} is negative")]
    NegativeSigma { index: usize },
    #[error("levels mix exact (sigma = 0) and noisy measurements; weights are undefined")]
    MixedSigmas,
    #[error("fitted curvature coefficient for mode direction {index} is not positive")]
    NonPositiveCurvature { index: usize },
    #[error("offsets must be sorted strictly ascending at index {index}")]
    UnsortedOffsets { index: usize },
    #[error("offset at index {index} must be positive")]
    NonPositiveOffset { index: usize },
    #[error("relative tolerance must lie in (0, 0.5)")]
    InvalidTolerance,
    #[error("design matrix is rank deficient in mode directions {directions:?}")]
    RankDeficient { directions: Vec<usize> },
    #[error(transparent)]
    Assignment(#[from] AssignmentFailure),
}

/// Mode assignment failed: the offsets do not follow a `c * n^2` ladder.
#[derive(Debug, Clone, PartialEq, Error)]
#[error(
    "offset {observed} at index {index} deviates from the quadratic-ladder prediction \
     {predicted} (start hypotheses n_start <= {max_start} exhausted)"
)]
pub struct AssignmentFailure {
    /// Index of the first offset that broke the ladder under the n_start = 1
    /// hypothesis.
    pub index: usize,
    /// The offending measured offset.
    pub observed: f64,
    /// The ladder value predicted for that slot.
    pub predicted: f64,
    /// Largest starting mode that was tried before giving up.
    pub max_start: u32,
}
