//! Square-barrier scattering by exact interface matching.
//!
//! A rectangular barrier of height `V0` and width `a` regularizes the delta
//! potential: as `a -> 0` at fixed area `V0 * a = lambda`, its amplitudes
//! converge (first order in `a`) to the closed-form delta amplitudes. That
//! makes this module an independent numerical cross-check for the analytic
//! ones; the analytic module does not depend on it.
//!
//! Matching plane waves at both interfaces gives, with
//! `q^2 = k^2 - 2 m V0 / hbar^2` and `s = sin(q a) / q` continued through
//! `q^2 <= 0`,
//!
//! ```text
//! den = cos(q a) - i ((k^2 + q^2) / 2k) s
//! r   = -i ((k^2 - q^2) / 2k) s / den
//! t   = exp(-i k a) / den
//! ```
//!
//! There is no step-size error anywhere; the barrier width is the only
//! convergence parameter.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, is_positive, lit};
use crate::scattering;
use crate::types::{CompactGeometry, PhysicalConfig, ScatteringSetup};

/// Rectangular barrier: height `V0` (negative for a well) and positive
/// width `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierSpec<T> {
    height: T,
    width: T,
}

impl<T: Scalar> BarrierSpec<T> {
    pub fn new(height: T, width: T) -> Result<Self> {
        if !height.is_finite() {
            return Err(Error::NonFinite { name: "height" });
        }
        if !is_positive(width) {
            return Err(Error::NonPositiveWidth);
        }
        Ok(Self { height, width })
    }

    /// Barrier of width `a` whose area equals the delta strength:
    /// `V0 = lambda / a`.
    pub fn from_delta_strength(lambda: T, width: T) -> Result<Self> {
        if !is_positive(width) {
            return Err(Error::NonPositiveWidth);
        }
        Self::new(lambda / width, width)
    }

    pub fn height(&self) -> T {
        self.height
    }

    pub fn width(&self) -> T {
        self.width
    }

    /// Barrier area `V0 * a`.
    pub fn area(&self) -> T {
        self.height * self.width
    }
}

/// `1 / cosh(x)` without overflow for large `x`.
fn sech<T: Scalar>(x: T) -> T {
    let e = (-x.abs()).exp();
    lit::<T>(2.0) * e / (T::one() + e * e)
}

/// Exact reflection and transmission amplitudes of a square barrier for a
/// beam of wavenumber `k1`.
///
/// The interior solution is trigonometric above the barrier, hyperbolic
/// below it (evaluated in scaled form so large opacities do not overflow),
/// and linear exactly at the top. Satisfies `|r|^2 + |t|^2 = 1`.
pub fn barrier_amplitudes<T: Scalar>(
    k1: T,
    barrier: &BarrierSpec<T>,
    config: &PhysicalConfig<T>,
) -> Result<(Complex<T>, Complex<T>)> {
    if !k1.is_finite() {
        return Err(Error::NonFinite { name: "k1" });
    }
    if !is_positive(k1) {
        return Err(Error::NonPropagatingWave);
    }
    let two = lit::<T>(2.0);
    let a = barrier.width();
    let q_sq = k1 * k1 - two * config.mass() * barrier.height() / (config.hbar() * config.hbar());

    // (cos-like term, sin(q a)/q continuation, scale on the transmitted wave)
    let (cos_term, s, t_scale) = if q_sq > T::zero() {
        let q = q_sq.sqrt();
        ((q * a).cos(), (q * a).sin() / q, T::one())
    } else if q_sq == T::zero() {
        (T::one(), a, T::one())
    } else {
        let kappa = (-q_sq).sqrt();
        // Scaled by 1/cosh(kappa a) to keep the opaque limit finite.
        (T::one(), (kappa * a).tanh() / kappa, sech(kappa * a))
    };

    let den = Complex::new(cos_term, -(k1 * k1 + q_sq) / (two * k1) * s);
    let r = Complex::new(T::zero(), -(k1 * k1 - q_sq) / (two * k1) * s) / den;
    let t = Complex::new(T::zero(), -k1 * a).exp().scale(t_scale) / den;
    Ok((r, t))
}

/// One row of a delta-limit convergence study.
///
/// `r_*`/`t_*` are reflection and transmission coefficients; `err` is the
/// amplitude-level distance `|r_b - r_d| + |t_b - t_d|` between the barrier
/// and the delta closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaLimitRow<T> {
    pub width: T,
    pub height: T,
    pub r_barrier: T,
    pub t_barrier: T,
    pub r_delta: T,
    pub t_delta: T,
    pub err: T,
}

/// Shrinks the barrier at fixed area `lambda` down a strictly decreasing
/// width list and tabulates the distance to the delta amplitudes.
///
/// The error column decreases first order in the width.
pub fn delta_limit_study<T: Scalar>(
    k1: T,
    lambda: T,
    widths: &[T],
    config: &PhysicalConfig<T>,
) -> Result<Vec<DeltaLimitRow<T>>> {
    if widths.is_empty() {
        return Err(Error::EmptyGrid);
    }
    for (index, &width) in widths.iter().enumerate() {
        let decreasing = index == 0 || width < widths[index - 1];
        if !is_positive(width) || !decreasing {
            return Err(Error::BadWidthList { index });
        }
    }

    let setup = ScatteringSetup::new(
        lambda,
        k1,
        0,
        Complex::new(T::one(), T::zero()),
        Complex::new(T::zero(), T::zero()),
        *config,
        CompactGeometry::cylinder(T::one())?,
    )?;
    let r_delta = scattering::reflection_amplitude(&setup);
    let t_delta = scattering::transmission_amplitude(&setup);

    widths
        .iter()
        .map(|&width| {
            let barrier = BarrierSpec::from_delta_strength(lambda, width)?;
            let (r, t) = barrier_amplitudes(k1, &barrier, config)?;
            Ok(DeltaLimitRow {
                width,
                height: barrier.height(),
                r_barrier: r.norm_sqr(),
                t_barrier: t.norm_sqr(),
                r_delta: r_delta.norm_sqr(),
                t_delta: t_delta.norm_sqr(),
                err: (r - r_delta).norm() + (t - t_delta).norm(),
            })
        })
        .collect()
}
