//! Shared physical configuration, geometry, and validated scattering data.
//!
//! All types are immutable value types: fields are validated once at
//! construction and only exposed through accessors, so they are safe to
//! share and send between concurrent tasks.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, is_positive, lit};

/// Largest number of compact dimensions supported by the spectrum and
/// inference routines.
pub const MAX_COMPACT_DIMS: usize = 6;

/// Unit system: values of the reduced Planck constant and the particle mass.
///
/// Defaults to natural units `hbar = mass = 1`; every formula in the crate
/// carries the constants explicitly, so SI values work as well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConfig<T> {
    hbar: T,
    mass: T,
}

impl<T: Scalar> PhysicalConfig<T> {
    pub fn new(hbar: T, mass: T) -> Result<Self> {
        if !is_positive(hbar) {
            return Err(Error::NonPositiveHbar);
        }
        if !is_positive(mass) {
            return Err(Error::NonPositiveMass);
        }
        Ok(Self { hbar, mass })
    }

    /// Natural units, `hbar = mass = 1`.
    pub fn natural() -> Self {
        Self {
            hbar: T::one(),
            mass: T::one(),
        }
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    /// Kinetic prefactor `hbar^2 / 2m` shared by the dispersion relations.
    pub fn kinetic_factor(&self) -> T {
        self.hbar * self.hbar / (lit::<T>(2.0) * self.mass)
    }
}

impl<T: Scalar> Default for PhysicalConfig<T> {
    fn default() -> Self {
        Self::natural()
    }
}

/// Ordered list of compactification radii, one per compact dimension.
///
/// Length 1 describes the cylinder; up to [`MAX_COMPACT_DIMS`] radii model a
/// higher-dimensional torus.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactGeometry<T> {
    radii: Vec<T>,
}

impl<T: Scalar> CompactGeometry<T> {
    pub fn new(radii: Vec<T>) -> Result<Self> {
        let dim = radii.len();
        if dim == 0 || dim > MAX_COMPACT_DIMS {
            return Err(Error::DimensionOutOfRange { dim });
        }
        for (index, &radius) in radii.iter().enumerate() {
            if !is_positive(radius) {
                return Err(Error::NonPositiveRadius { index });
            }
        }
        Ok(Self { radii })
    }

    /// Single compact circle of the given radius.
    pub fn cylinder(radius: T) -> Result<Self> {
        Self::new(vec![radius])
    }

    pub fn dim(&self) -> usize {
        self.radii.len()
    }

    pub fn radii(&self) -> &[T] {
        &self.radii
    }

    /// The unique radius of a one-dimensional geometry.
    pub fn single_radius(&self) -> Result<T> {
        if self.dim() == 1 {
            Ok(self.radii[0])
        } else {
            Err(Error::NotCylinder { dim: self.dim() })
        }
    }
}

/// Everything needed to scatter one angular mode off the delta potential:
/// coupling strength, axial wavenumber, angular mode data, units, and the
/// cylinder geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatteringSetup<T> {
    lambda: T,
    k1: T,
    n: i64,
    f1: Complex<T>,
    g1: Complex<T>,
    config: PhysicalConfig<T>,
    geometry: CompactGeometry<T>,
}

impl<T: Scalar> ScatteringSetup<T> {
    /// Validates and builds a setup.
    ///
    /// `lambda` may be negative (attractive potential). The incident beam
    /// must propagate (`k1 > 0`), the angular amplitudes must not both
    /// vanish, and the geometry must be a cylinder.
    pub fn new(
        lambda: T,
        k1: T,
        n: i64,
        f1: Complex<T>,
        g1: Complex<T>,
        config: PhysicalConfig<T>,
        geometry: CompactGeometry<T>,
    ) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(Error::NonFinite { name: "lambda" });
        }
        if !k1.is_finite() {
            return Err(Error::NonFinite { name: "k1" });
        }
        if !is_positive(k1) {
            return Err(Error::NonPropagatingWave);
        }
        if !f1.re.is_finite() || !f1.im.is_finite() {
            return Err(Error::NonFinite { name: "F1" });
        }
        if !g1.re.is_finite() || !g1.im.is_finite() {
            return Err(Error::NonFinite { name: "G1" });
        }
        if f1 == Complex::new(T::zero(), T::zero()) && g1 == Complex::new(T::zero(), T::zero()) {
            return Err(Error::ZeroAngularAmplitudes);
        }
        if geometry.dim() != 1 {
            return Err(Error::NotCylinder {
                dim: geometry.dim(),
            });
        }
        Ok(Self {
            lambda,
            k1,
            n,
            f1,
            g1,
            config,
            geometry,
        })
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn k1(&self) -> T {
        self.k1
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn f1(&self) -> Complex<T> {
        self.f1
    }

    pub fn g1(&self) -> Complex<T> {
        self.g1
    }

    pub fn config(&self) -> &PhysicalConfig<T> {
        &self.config
    }

    pub fn geometry(&self) -> &CompactGeometry<T> {
        &self.geometry
    }

    /// Cylinder radius.
    pub fn radius(&self) -> T {
        self.geometry.radii()[0]
    }

    /// Coupling wavenumber `m * lambda / hbar^2`, the inverse length scale
    /// set by the delta strength.
    pub(crate) fn coupling_wavenumber(&self) -> T {
        self.config.mass() * self.lambda / (self.config.hbar() * self.config.hbar())
    }
}

/// Relative scattering amplitudes and the derived coefficients.
///
/// `r` and `t` are the reflected and transmitted amplitudes relative to the
/// incident one; `r1` and `t1` are the corresponding probability
/// coefficients. Construction enforces `r1 = |r|^2`, `t1 = |t|^2`,
/// `r1 + t1 = 1`, and the continuity identity `1 + r = t`, each within the
/// scalar's identity tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringAmplitudes<T> {
    r: Complex<T>,
    t: Complex<T>,
    r1: T,
    t1: T,
}

impl<T: Scalar> ScatteringAmplitudes<T> {
    /// Builds from amplitudes plus independently computed coefficients,
    /// verifying all identities.
    pub fn new(r: Complex<T>, t: Complex<T>, r1: T, t1: T) -> Result<Self> {
        let tol = T::identity_tol();
        let unit = T::one();
        if (r.norm_sqr() - r1).abs() > tol || (t.norm_sqr() - t1).abs() > tol {
            return Err(Error::AmplitudeIdentity {
                identity: "coefficients must equal the squared amplitude magnitudes",
            });
        }
        if (r1 + t1 - unit).abs() > tol {
            return Err(Error::AmplitudeIdentity {
                identity: "R1 + T1 must equal 1",
            });
        }
        if ((r + unit) - t).norm() > tol {
            return Err(Error::AmplitudeIdentity {
                identity: "1 + r must equal t",
            });
        }
        Ok(Self { r, t, r1, t1 })
    }

    /// Builds from the amplitude ratios alone, deriving the coefficients as
    /// squared magnitudes.
    pub fn from_ratios(r: Complex<T>, t: Complex<T>) -> Result<Self> {
        Self::new(r, t, r.norm_sqr(), t.norm_sqr())
    }

    /// Reflected amplitude ratio.
    pub fn r(&self) -> Complex<T> {
        self.r
    }

    /// Transmitted amplitude ratio.
    pub fn t(&self) -> Complex<T> {
        self.t
    }

    /// Reflection coefficient.
    pub fn r1(&self) -> T {
        self.r1
    }

    /// Transmission coefficient.
    pub fn t1(&self) -> T {
        self.t1
    }
}
