//! Closed-form delta-potential scattering amplitudes and coefficients.
//!
//! With `alpha = m * lambda / hbar^2` the relative amplitudes are
//!
//! ```text
//! r = -i alpha / (k1 + i alpha)        t = k1 / (k1 + i alpha)
//! ```
//!
//! and the coefficients follow as `R1 = alpha^2 / (k1^2 + alpha^2)`,
//! `T1 = k1^2 / (k1^2 + alpha^2)`. The angular mode data never enter: the
//! potential is independent of the compact coordinate, so the modes do not
//! mix.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, lit};
use crate::types::{CompactGeometry, PhysicalConfig, ScatteringAmplitudes, ScatteringSetup};

/// Reflected amplitude ratio `r = -i alpha / (k1 + i alpha)`.
pub fn reflection_amplitude<T: Scalar>(setup: &ScatteringSetup<T>) -> Complex<T> {
    let alpha = setup.coupling_wavenumber();
    Complex::new(T::zero(), -alpha) / Complex::new(setup.k1(), alpha)
}

/// Transmitted amplitude ratio `t = k1 / (k1 + i alpha)`.
///
/// Satisfies the continuity identity `1 + r = t`.
pub fn transmission_amplitude<T: Scalar>(setup: &ScatteringSetup<T>) -> Complex<T> {
    let alpha = setup.coupling_wavenumber();
    Complex::new(setup.k1(), T::zero()) / Complex::new(setup.k1(), alpha)
}

/// Scattering amplitudes together with the reflection and transmission
/// coefficients.
///
/// The coefficients are evaluated from their closed forms and cross-checked
/// against `|r|^2` and `|t|^2`; the two routes always agree within the
/// scalar's identity tolerance for a valid setup.
pub fn coefficients<T: Scalar>(setup: &ScatteringSetup<T>) -> ScatteringAmplitudes<T> {
    let alpha = setup.coupling_wavenumber();
    let k1 = setup.k1();
    let denom = k1 * k1 + alpha * alpha;
    let r1 = alpha * alpha / denom;
    let t1 = k1 * k1 / denom;
    let r = reflection_amplitude(setup);
    let t = transmission_amplitude(setup);
    ScatteringAmplitudes::new(r, t, r1, t1)
        .expect("closed-form coefficients agree with amplitude magnitudes")
}

/// Residuals of the matching conditions at the potential for a candidate
/// amplitude pair.
///
/// Returns `(rho1, rho2)` with
///
/// ```text
/// rho1 = 1 + r - t
/// rho2 = i k1 t - i k1 (1 - r) - (2 m lambda / hbar^2) t
/// ```
///
/// Both vanish exactly when `(r, t)` solve the scattering problem.
pub fn boundary_residuals<T: Scalar>(
    setup: &ScatteringSetup<T>,
    r: Complex<T>,
    t: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    let one = Complex::new(T::one(), T::zero());
    let ik1 = Complex::new(T::zero(), setup.k1());
    let jump = lit::<T>(2.0) * setup.coupling_wavenumber();
    let rho1 = one + r - t;
    let rho2 = ik1 * t - ik1 * (one - r) - t.scale(jump);
    (rho1, rho2)
}

/// One row of a coefficient sweep: wavenumber, axial kinetic energy, and
/// the amplitudes at that wavenumber.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow<T> {
    pub k1: T,
    pub e_axial: T,
    pub amplitudes: ScatteringAmplitudes<T>,
}

/// Evaluates coefficients over a strictly increasing wavenumber grid.
///
/// `e_axial = hbar^2 k1^2 / 2m` accompanies each row. Rows are independent;
/// output order follows the grid.
pub fn sweep_coefficients<T: Scalar>(
    lambda: T,
    k1_grid: &[T],
    config: &PhysicalConfig<T>,
    geometry: &CompactGeometry<T>,
) -> Result<Vec<SweepRow<T>>> {
    if k1_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    for (index, pair) in k1_grid.windows(2).enumerate() {
        if pair[1] <= pair[0] {
            return Err(Error::NonMonotoneGrid { index: index + 1 });
        }
    }
    k1_grid
        .iter()
        .map(|&k1| {
            let setup = ScatteringSetup::new(
                lambda,
                k1,
                0,
                Complex::new(T::one(), T::zero()),
                Complex::new(T::zero(), T::zero()),
                *config,
                geometry.clone(),
            )?;
            Ok(SweepRow {
                k1,
                e_axial: config.kinetic_factor() * k1 * k1,
                amplitudes: coefficients(&setup),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    type C = Complex<f64>;

    fn setup(lambda: f64, k1: f64) -> ScatteringSetup<f64> {
        setup_with_mode(lambda, k1, 0, C::new(1.0, 0.0), C::new(0.0, 0.0))
    }

    fn setup_with_mode(lambda: f64, k1: f64, n: i64, f1: C, g1: C) -> ScatteringSetup<f64> {
        ScatteringSetup::new(
            lambda,
            k1,
            n,
            f1,
            g1,
            PhysicalConfig::natural(),
            CompactGeometry::cylinder(1.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn no_potential_means_no_reflection() {
        let s = setup(0.0, 1.0);
        assert_eq!(reflection_amplitude(&s), C::new(0.0, 0.0));
        assert_eq!(transmission_amplitude(&s), C::new(1.0, 0.0));
    }

    #[test]
    fn unit_coupling_amplitudes() {
        let s = setup(1.0, 1.0);
        let r = reflection_amplitude(&s);
        let t = transmission_amplitude(&s);
        assert_relative_eq!(r.re, -0.5, max_relative = 1e-15);
        assert_relative_eq!(r.im, -0.5, max_relative = 1e-15);
        assert_relative_eq!(t.re, 0.5, max_relative = 1e-15);
        assert_relative_eq!(t.im, -0.5, max_relative = 1e-15);
    }

    #[test]
    fn double_coupling_magnitudes() {
        let s = setup(2.0, 1.0);
        assert_relative_eq!(reflection_amplitude(&s).norm_sqr(), 0.8, epsilon = 1e-15);
        assert_relative_eq!(transmission_amplitude(&s).norm_sqr(), 0.2, epsilon = 1e-15);
    }

    #[test]
    fn coefficient_examples() {
        let amps = coefficients(&setup(0.0, 3.0));
        assert_eq!((amps.r1(), amps.t1()), (0.0, 1.0));

        let amps = coefficients(&setup(1.0, 1.0));
        assert_relative_eq!(amps.r1(), 0.5, epsilon = 1e-15);
        assert_relative_eq!(amps.t1(), 0.5, epsilon = 1e-15);

        // Slow beam on a finite barrier reflects almost completely.
        let amps = coefficients(&setup(1.0, 1e-8));
        assert_relative_eq!(amps.r1(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn analytic_amplitudes_solve_the_matching_conditions() {
        let s = setup(1.7, 0.3);
        let amps = coefficients(&s);
        let (rho1, rho2) = boundary_residuals(&s, amps.r(), amps.t());
        assert!(rho1.norm() < 1e-15);
        assert!(rho2.norm() < 1e-15);
    }

    #[test]
    fn free_solution_violates_the_jump_condition() {
        let s = setup(1.0, 1.0);
        let (rho1, rho2) = boundary_residuals(&s, C::new(0.0, 0.0), C::new(1.0, 0.0));
        assert_eq!(rho1, C::new(0.0, 0.0));
        assert_eq!(rho2, C::new(-2.0, 0.0));
    }

    #[test]
    fn residuals_of_an_arbitrary_candidate_pair() {
        let s = setup(0.0, 1.0);
        let (rho1, rho2) = boundary_residuals(&s, C::new(1.0, 0.0), C::new(2.0, 0.0));
        assert_eq!(rho1, C::new(0.0, 0.0));
        assert_eq!(rho2, C::new(0.0, 2.0));
    }

    #[test]
    fn sweep_single_row() {
        let rows = sweep_coefficients(
            1.0,
            &[1.0],
            &PhysicalConfig::natural(),
            &CompactGeometry::cylinder(1.0).unwrap(),
        )
        .unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].k1, 1.0);
        assert_eq!(rows[0].e_axial, 0.5);
        assert_relative_eq!(rows[0].amplitudes.r1(), 0.5, epsilon = 1e-15);
        assert_relative_eq!(rows[0].amplitudes.t1(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn sweep_transparent_potential() {
        let rows = sweep_coefficients(
            0.0,
            &[1.0, 2.0],
            &PhysicalConfig::natural(),
            &CompactGeometry::cylinder(1.0).unwrap(),
        )
        .unwrap();
        for row in rows {
            assert_eq!(row.amplitudes.r1(), 0.0);
            assert_eq!(row.amplitudes.t1(), 1.0);
        }
    }

    #[test]
    fn sweep_rejects_bad_grids() {
        let cfg = PhysicalConfig::natural();
        let geom = CompactGeometry::cylinder(1.0).unwrap();
        assert_eq!(
            sweep_coefficients(1.0, &[], &cfg, &geom).unwrap_err(),
            Error::EmptyGrid
        );
        assert_eq!(
            sweep_coefficients(1.0, &[2.0, 1.0], &cfg, &geom).unwrap_err(),
            Error::NonMonotoneGrid { index: 1 }
        );
        assert_eq!(
            sweep_coefficients(1.0, &[1.0, 1.0], &cfg, &geom).unwrap_err(),
            Error::NonMonotoneGrid { index: 1 }
        );
    }

    #[test]
    fn reflection_coefficient_is_even_in_lambda() {
        for &(lambda, k1) in &[(0.7, 0.2), (3.0, 1.5), (9.5, 8.0)] {
            let plus = coefficients(&setup(lambda, k1));
            let minus = coefficients(&setup(-lambda, k1));
            assert_eq!(plus.r1(), minus.r1());
            assert_eq!(plus.t1(), minus.t1());
        }
    }

    proptest! {
        #[test]
        fn unitarity_holds(lambda in -10.0..10.0f64, k1 in 1e-3..10.0f64) {
            let amps = coefficients(&setup(lambda, k1));
            prop_assert!((amps.r1() + amps.t1() - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn continuity_identity_holds(lambda in -10.0..10.0f64, k1 in 1e-3..10.0f64) {
            let s = setup(lambda, k1);
            let r = reflection_amplitude(&s);
            let t = transmission_amplitude(&s);
            prop_assert!(((r + 1.0) - t).norm() <= 1e-12);
        }

        #[test]
        fn ratio_of_amplitudes_is_purely_imaginary(
            lambda in prop_oneof![0.01..10.0f64, -10.0..-0.01f64],
            k1 in 1e-3..10.0f64,
        ) {
            let s = setup(lambda, k1);
            let ratio = reflection_amplitude(&s) / transmission_amplitude(&s);
            prop_assert!(ratio.re.abs() <= 1e-12);
        }

        #[test]
        fn amplitudes_ignore_angular_data(
            lambda in -10.0..10.0f64,
            k1 in 1e-3..10.0f64,
            n in -5i64..=5,
            f_re in -2.0..2.0f64,
            f_im in -2.0..2.0f64,
            g_re in -2.0..2.0f64,
            g_im in -2.0..2.0f64,
        ) {
            prop_assume!(f_re != 0.0 || f_im != 0.0 || g_re != 0.0 || g_im != 0.0);
            let base = setup(lambda, k1);
            let varied = setup_with_mode(lambda, k1, n, C::new(f_re, f_im), C::new(g_re, g_im));
            prop_assert_eq!(reflection_amplitude(&base), reflection_amplitude(&varied));
            prop_assert_eq!(transmission_amplitude(&base), transmission_amplitude(&varied));
        }

        #[test]
        fn analytic_residuals_vanish(lambda in -10.0..10.0f64, k1 in 1e-3..10.0f64) {
            let s = setup(lambda, k1);
            let amps = coefficients(&s);
            let (rho1, rho2) = boundary_residuals(&s, amps.r(), amps.t());
            prop_assert!(rho1.norm() <= 1e-12);
            prop_assert!(rho2.norm() <= 1e-12);
        }
    }
}
