//! Probability-current fields on the cylinder surface.
//!
//! The closed forms share a common structure: with `X` one of `A1`,
//! `A1 * r`, `A1 * t` and `Phi(phi) = F1 cos(n phi) + G1 sin(n phi)`,
//!
//! ```text
//! j_phi = (hbar |X|^2 / 2m) * (n / R) * i (F1 G1* - F1* G1)
//! j_z   = +/- (hbar |X|^2 / 2m) * 2 k1 * |Phi(phi)|^2
//! ```
//!
//! with the minus sign on the reflected axial component. The bracket in
//! `j_phi` is purely imaginary, so both components are real. A central
//! finite-difference evaluation of the defining expression
//! `J = (i hbar / 2m)(psi grad psi* - psi* grad psi)` serves as an
//! independent numerical cross-check for the closed forms; the gradient's
//! angular component carries the cylindrical metric factor `1/R`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, is_positive, lit};
use crate::types::{ScatteringAmplitudes, ScatteringSetup};

/// Side of the potential: `Left` is the incident side (`z < 0`), `Right`
/// the transmitted side (`z > 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Left,
    Right,
}

impl Region {
    fn name(self) -> &'static str {
        match self {
            Region::Left => "left",
            Region::Right => "right",
        }
    }
}

/// Component of the full wavefunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WavePart {
    Incident,
    Reflected,
    Transmitted,
    /// Sum of all components present in the region.
    Total,
}

impl WavePart {
    fn name(self) -> &'static str {
        match self {
            WavePart::Incident => "incident",
            WavePart::Reflected => "reflected",
            WavePart::Transmitted => "transmitted",
            WavePart::Total => "total",
        }
    }
}

/// One of the three current fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurrentPart {
    Incident,
    Reflected,
    Transmitted,
}

impl CurrentPart {
    pub fn name(self) -> &'static str {
        match self {
            CurrentPart::Incident => "incident",
            CurrentPart::Reflected => "reflected",
            CurrentPart::Transmitted => "transmitted",
        }
    }

    fn wave_part(self) -> WavePart {
        match self {
            CurrentPart::Incident => WavePart::Incident,
            CurrentPart::Reflected => WavePart::Reflected,
            CurrentPart::Transmitted => WavePart::Transmitted,
        }
    }

    /// Region in which this field lives.
    pub fn region(self) -> Region {
        match self {
            CurrentPart::Incident | CurrentPart::Reflected => Region::Left,
            CurrentPart::Transmitted => Region::Right,
        }
    }
}

/// Point on the cylinder surface; `phi` is normalized into `[0, 2*pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint<T> {
    phi: T,
    z: T,
}

impl<T: Scalar> SurfacePoint<T> {
    pub fn new(phi: T, z: T) -> Self {
        let tau = T::TAU();
        let mut wrapped = phi - (phi / tau).floor() * tau;
        if wrapped >= tau {
            wrapped -= tau;
        }
        if wrapped < T::zero() {
            wrapped += tau;
        }
        Self { phi: wrapped, z }
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    pub fn z(&self) -> T {
        self.z
    }
}

/// Probability-current vector on the surface: angular and axial components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentVector<T> {
    pub j_phi: T,
    pub j_z: T,
}

impl<T: Scalar> CurrentVector<T> {
    /// Euclidean magnitude of the vector.
    pub fn norm(&self) -> T {
        self.j_phi.hypot(self.j_z)
    }
}

/// Angular factor `F1 cos(n phi) + G1 sin(n phi)`.
pub fn angular_factor<T: Scalar>(phi: T, n: i64, f1: Complex<T>, g1: Complex<T>) -> Complex<T> {
    let arg = T::from_i64(n).expect("angular mode fits in the scalar type") * phi;
    f1.scale(arg.cos()) + g1.scale(arg.sin())
}

/// Evaluates one wavefunction component at a surface point.
///
/// Incident and reflected parts exist on the left, the transmitted part on
/// the right; `Total` is the full wavefunction of the chosen region.
pub fn wavefunction<T: Scalar>(
    region: Region,
    part: WavePart,
    point: &SurfacePoint<T>,
    setup: &ScatteringSetup<T>,
    amplitudes: &ScatteringAmplitudes<T>,
    a1: Complex<T>,
) -> Result<Complex<T>> {
    let phase = setup.k1() * point.z();
    let forward = Complex::new(T::zero(), phase).exp();
    let backward = Complex::new(T::zero(), -phase).exp();
    let angular = angular_factor(point.phi(), setup.n(), setup.f1(), setup.g1());
    let incident = a1 * forward * angular;
    let reflected = a1 * amplitudes.r() * backward * angular;
    let transmitted = a1 * amplitudes.t() * forward * angular;
    match (region, part) {
        (Region::Left, WavePart::Incident) => Ok(incident),
        (Region::Left, WavePart::Reflected) => Ok(reflected),
        (Region::Left, WavePart::Total) => Ok(incident + reflected),
        (Region::Right, WavePart::Transmitted) | (Region::Right, WavePart::Total) => {
            Ok(transmitted)
        }
        _ => Err(Error::PartRegionMismatch {
            part: part.name(),
            region: region.name(),
        }),
    }
}

fn part_weight<T: Scalar>(
    part: CurrentPart,
    amplitudes: &ScatteringAmplitudes<T>,
    a1: Complex<T>,
) -> T {
    let base = a1.norm_sqr();
    match part {
        CurrentPart::Incident => base,
        CurrentPart::Reflected => base * amplitudes.r1(),
        CurrentPart::Transmitted => base * amplitudes.t1(),
    }
}

/// Closed-form current vector of one field at one point.
pub fn current_closed_form<T: Scalar>(
    part: CurrentPart,
    point: &SurfacePoint<T>,
    setup: &ScatteringSetup<T>,
    amplitudes: &ScatteringAmplitudes<T>,
    a1: Complex<T>,
) -> CurrentVector<T> {
    let two = lit::<T>(2.0);
    let cfg = setup.config();
    let pref = cfg.hbar() / (two * cfg.mass()) * part_weight(part, amplitudes, a1);
    let n = T::from_i64(setup.n()).expect("angular mode fits in the scalar type");
    let f1 = setup.f1();
    let g1 = setup.g1();

    // i (F1 G1* - F1* G1) = -2 Im(F1 G1*), a real number.
    let bracket = -two * (f1 * g1.conj()).im;
    let j_phi = pref * (n / setup.radius()) * bracket;

    // |Phi|^2 expanded over the quadrature terms.
    let arg = n * point.phi();
    let cos = arg.cos();
    let sin = arg.sin();
    let angular = f1.norm_sqr() * cos * cos
        + (f1 * g1.conj()).re * (two * sin * cos)
        + g1.norm_sqr() * sin * sin;
    let sign = match part {
        CurrentPart::Reflected => -T::one(),
        _ => T::one(),
    };
    let j_z = sign * pref * two * setup.k1() * angular;

    CurrentVector { j_phi, j_z }
}

/// Finite-difference current with complex residue, before the real part is
/// taken.
///
/// Exposed so callers can check that the imaginary residue of the defining
/// expression vanishes numerically.
pub fn current_numerical_complex<T: Scalar>(
    part: CurrentPart,
    point: &SurfacePoint<T>,
    setup: &ScatteringSetup<T>,
    amplitudes: &ScatteringAmplitudes<T>,
    a1: Complex<T>,
    h: T,
) -> Result<(Complex<T>, Complex<T>)> {
    if !is_positive(h) {
        return Err(Error::NonPositiveStep);
    }
    let region = part.region();
    let wave = part.wave_part();
    let psi_at = |phi: T, z: T| -> Result<Complex<T>> {
        wavefunction(
            region,
            wave,
            &SurfacePoint::new(phi, z),
            setup,
            amplitudes,
            a1,
        )
    };

    let two_h = lit::<T>(2.0) * h;
    let psi = psi_at(point.phi(), point.z())?;
    let d_z =
        (psi_at(point.phi(), point.z() + h)? - psi_at(point.phi(), point.z() - h)?).unscale(two_h);
    let d_phi =
        (psi_at(point.phi() + h, point.z())? - psi_at(point.phi() - h, point.z())?).unscale(two_h);
    // Angular gradient component carries the metric factor 1/R.
    let grad_phi = d_phi.unscale(setup.radius());

    let cfg = setup.config();
    let factor = Complex::new(T::zero(), cfg.hbar() / (lit::<T>(2.0) * cfg.mass()));
    let density = |grad: Complex<T>| factor * (psi * grad.conj() - psi.conj() * grad);
    Ok((density(grad_phi), density(d_z)))
}

/// Current vector from central finite differences of the defining
/// expression; independent numerical cross-check for
/// [`current_closed_form`].
pub fn current_numerical<T: Scalar>(
    part: CurrentPart,
    point: &SurfacePoint<T>,
    setup: &ScatteringSetup<T>,
    amplitudes: &ScatteringAmplitudes<T>,
    a1: Complex<T>,
    h: T,
) -> Result<CurrentVector<T>> {
    let (j_phi, j_z) = current_numerical_complex(part, point, setup, amplitudes, a1, h)?;
    Ok(CurrentVector {
        j_phi: j_phi.re,
        j_z: j_z.re,
    })
}

/// Characteristic current magnitude of the incident field, used to decide
/// whether a grid point sits on the nodal set.
fn incident_scale<T: Scalar>(setup: &ScatteringSetup<T>, a1: Complex<T>) -> T {
    let two = lit::<T>(2.0);
    let cfg = setup.config();
    let pref = cfg.hbar() / (two * cfg.mass()) * a1.norm_sqr();
    let n = T::from_i64(setup.n()).expect("angular mode fits in the scalar type");
    let axial = two * setup.k1() * (setup.f1().norm_sqr() + setup.g1().norm_sqr());
    let angular = (n / setup.radius() * two * (setup.f1() * setup.g1().conj()).im).abs();
    pref * (axial + angular)
}

/// Recovers the reflection and transmission coefficients as pointwise
/// current-magnitude ratios `|J_r| / |J_i|` and `|J_t| / |J_i|`.
///
/// The position-dependent factors cancel, so the ratios are identical at
/// every point off the nodal set; the result is averaged over the usable
/// points. Fails if the incident current vanishes on the whole grid.
pub fn coefficients_from_currents<T: Scalar>(
    setup: &ScatteringSetup<T>,
    amplitudes: &ScatteringAmplitudes<T>,
    a1: Complex<T>,
    grid: &[SurfacePoint<T>],
) -> Result<(T, T)> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let floor = incident_scale(setup, a1) * T::epsilon().sqrt();
    let mut r_sum = T::zero();
    let mut t_sum = T::zero();
    let mut used = 0usize;
    for point in grid {
        let incident = current_closed_form(CurrentPart::Incident, point, setup, amplitudes, a1);
        let norm_i = incident.norm();
        if norm_i <= floor {
            continue;
        }
        let reflected = current_closed_form(CurrentPart::Reflected, point, setup, amplitudes, a1);
        let transmitted =
            current_closed_form(CurrentPart::Transmitted, point, setup, amplitudes, a1);
        r_sum += reflected.norm() / norm_i;
        t_sum += transmitted.norm() / norm_i;
        used += 1;
    }
    if used == 0 {
        return Err(Error::DegenerateGrid);
    }
    let count = T::from_usize(used).expect("grid size fits in the scalar type");
    Ok((r_sum / count, t_sum / count))
}

/// A current field sampled over a set of distinct surface points.
#[derive(Debug, Clone, PartialEq)]
pub struct CurrentField<T> {
    part: CurrentPart,
    entries: Vec<(SurfacePoint<T>, CurrentVector<T>)>,
    amplitude_a1: Complex<T>,
}

impl<T: Scalar> CurrentField<T> {
    /// Evaluates the closed-form current of `part` over `points`.
    pub fn evaluate(
        part: CurrentPart,
        points: &[SurfacePoint<T>],
        setup: &ScatteringSetup<T>,
        amplitudes: &ScatteringAmplitudes<T>,
        a1: Complex<T>,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let mut sorted: Vec<(T, T)> = points.iter().map(|p| (p.phi(), p.z())).collect();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint);
        }
        let entries = points
            .iter()
            .map(|point| {
                (
                    *point,
                    current_closed_form(part, point, setup, amplitudes, a1),
                )
            })
            .collect();
        Ok(Self {
            part,
            entries,
            amplitude_a1: a1,
        })
    }

    pub fn part(&self) -> CurrentPart {
        self.part
    }

    pub fn entries(&self) -> &[(SurfacePoint<T>, CurrentVector<T>)] {
        &self.entries
    }

    pub fn amplitude_a1(&self) -> Complex<T> {
        self.amplitude_a1
    }
}

/// Uniform rectangular surface grid: `n_phi` angles covering `[0, 2*pi)`
/// and `n_z` axial stations covering `[z_min, z_max]` inclusive.
///
/// Points are ordered angle-major. A single axial station sits at `z_min`.
pub fn surface_grid<T: Scalar>(
    n_phi: usize,
    n_z: usize,
    z_min: T,
    z_max: T,
) -> Vec<SurfacePoint<T>> {
    let mut points = Vec::with_capacity(n_phi * n_z);
    let tau = T::TAU();
    for i in 0..n_phi {
        let phi = tau * T::from_usize(i).expect("grid index fits in the scalar type")
            / T::from_usize(n_phi).expect("grid size fits in the scalar type");
        for j in 0..n_z {
            let z = if n_z == 1 {
                z_min
            } else {
                let frac = T::from_usize(j).expect("grid index fits in the scalar type")
                    / T::from_usize(n_z - 1).expect("grid size fits in the scalar type");
                z_min + (z_max - z_min) * frac
            };
            points.push(SurfacePoint::new(phi, z));
        }
    }
    points
}
