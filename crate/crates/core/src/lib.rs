//! Quantum scattering of free particles off a one-dimensional delta
//! potential when extra spatial dimensions are compactified.
//!
//! The particle lives on the surface of a cylinder: one infinite axis
//! carrying the delta potential and a compact circle (or, for spectra and
//! fits, up to six circles). The crate provides
//!
//! - closed-form reflection/transmission amplitudes and coefficients
//!   ([`scattering`]),
//! - probability-current fields with a finite-difference cross-check and
//!   coefficient recovery from current ratios ([`currents`]),
//! - the quantized compact-mode spectrum, channel classification, and the
//!   periodicity test behind the quantization ([`spectrum`]),
//! - an independent square-barrier transfer-matrix oracle that converges to
//!   the delta amplitudes as the width shrinks ([`barrier`]),
//! - weighted least-squares recovery of compactification radii from
//!   measured energy offsets ([`inference`]).
//!
//! Everything is generic over the scalar type through [`Scalar`]
//! (`f32` or `f64`); the `*64` aliases below cover the common case.
//!
//! ```
//! use kkscatter::{Complex64, CompactGeometry64, PhysicalConfig64, ScatteringSetup64};
//! use kkscatter::scattering::coefficients;
//!
//! let setup = ScatteringSetup64::new(
//!     1.0,                        // delta strength
//!     1.0,                        // axial wavenumber
//!     0,                          // angular mode
//!     Complex64::new(1.0, 0.0),   // F1
//!     Complex64::new(0.0, 0.0),   // G1
//!     PhysicalConfig64::natural(),
//!     CompactGeometry64::cylinder(1.0)?,
//! )?;
//! let amps = coefficients(&setup);
//! assert!((amps.r1() - 0.5).abs() < 1e-12);
//! assert!((amps.r1() + amps.t1() - 1.0).abs() < 1e-12);
//! # Ok::<(), kkscatter::Error>(())
//! ```

pub mod barrier;
pub mod currents;
pub mod error;
pub mod inference;
pub mod scalar;
pub mod scattering;
pub mod spectrum;
pub mod types;

pub use error::{AssignmentFailure, Error, Result};
pub use scalar::Scalar;
pub use types::{
    CompactGeometry, MAX_COMPACT_DIMS, PhysicalConfig, ScatteringAmplitudes, ScatteringSetup,
};

/// Double-precision complex number.
pub type Complex64 = num_complex::Complex<f64>;
/// Double-precision unit system.
pub type PhysicalConfig64 = PhysicalConfig<f64>;
/// Double-precision compact geometry.
pub type CompactGeometry64 = CompactGeometry<f64>;
/// Double-precision scattering setup.
pub type ScatteringSetup64 = ScatteringSetup<f64>;
/// Double-precision amplitudes and coefficients.
pub type ScatteringAmplitudes64 = ScatteringAmplitudes<f64>;
