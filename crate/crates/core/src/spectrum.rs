//! Quantized mode spectrum of a particle on compact circles.
//!
//! Each compact dimension of radius `R_i` adds `n_i^2 hbar^2 / (2 m R_i^2)`
//! to the energy, with integer `n_i` forced by single-valuedness of the
//! angular factor. Modes are enumerated with `n_i >= 0`; the sign freedom
//! of each nonzero index is carried as a degeneracy factor instead.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, is_positive, lit};
use crate::types::{CompactGeometry, PhysicalConfig};

/// One energy level of the compact spectrum.
///
/// Produced by [`enumerate_levels`]: `compact_energy` is the mode-sum
/// offset, `degeneracy = 2^(#nonzero modes)` counts the sign choices, and
/// `open` records whether the channel propagates at the query energy.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumLevel<T> {
    pub modes: Vec<i64>,
    pub compact_energy: T,
    pub degeneracy: u32,
    pub open: bool,
}

/// Channel character of a mode at a given total energy: propagating with
/// axial wavenumber `k1`, or evanescent with decay rate `kappa`.
///
/// A closed channel is a value, not an error; threshold modes
/// (`E = compact_energy`) count as closed because the beam no longer
/// propagates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Channel<T> {
    Open { k1: T },
    Closed { kappa: T },
}

/// Energy stored in the compact directions for one mode vector.
pub fn compact_energy<T: Scalar>(
    modes: &[i64],
    config: &PhysicalConfig<T>,
    geometry: &CompactGeometry<T>,
) -> Result<T> {
    if modes.len() != geometry.dim() {
        return Err(Error::ModeDimensionMismatch {
            expected: geometry.dim(),
            got: modes.len(),
        });
    }
    let factor = config.kinetic_factor();
    let mut total = T::zero();
    for (&n, &radius) in modes.iter().zip(geometry.radii()) {
        let n = T::from_i64(n).expect("mode index fits in the scalar type");
        total += factor * n * n / (radius * radius);
    }
    Ok(total)
}

/// Total energy `hbar^2 k1^2 / 2m + compact_energy(modes)`.
pub fn total_energy<T: Scalar>(
    k1: T,
    modes: &[i64],
    config: &PhysicalConfig<T>,
    geometry: &CompactGeometry<T>,
) -> Result<T> {
    let compact = compact_energy(modes, config, geometry)?;
    Ok(config.kinetic_factor() * k1 * k1 + compact)
}

/// Inverts the dispersion relation at total energy `energy` for the given
/// mode vector.
pub fn axial_wavenumber<T: Scalar>(
    energy: T,
    modes: &[i64],
    config: &PhysicalConfig<T>,
    geometry: &CompactGeometry<T>,
) -> Result<Channel<T>> {
    let compact = compact_energy(modes, config, geometry)?;
    let two_m = lit::<T>(2.0) * config.mass();
    let hbar = config.hbar();
    if energy > compact {
        Ok(Channel::Open {
            k1: (two_m * (energy - compact)).sqrt() / hbar,
        })
    } else {
        Ok(Channel::Closed {
            kappa: (two_m * (compact - energy)).sqrt() / hbar,
        })
    }
}

/// All levels with `compact_energy <= e_max`, sorted by energy with ties
/// broken lexicographically by mode vector.
///
/// The `open` flag classifies each level at beam energy `e_max` (threshold
/// levels are closed). The search box per dimension is
/// `n_i <= ceil(R_i * sqrt(2 m e_max) / hbar)`, which provably contains
/// every admissible mode.
pub fn enumerate_levels<T: Scalar>(
    e_max: T,
    config: &PhysicalConfig<T>,
    geometry: &CompactGeometry<T>,
) -> Result<Vec<SpectrumLevel<T>>> {
    if !is_positive(e_max) {
        return Err(Error::NonPositiveCutoff);
    }
    let momentum_scale = (lit::<T>(2.0) * config.mass() * e_max).sqrt() / config.hbar();
    let bounds: Vec<i64> = geometry
        .radii()
        .iter()
        .map(|&radius| {
            (radius * momentum_scale)
                .ceil()
                .to_i64()
                .expect("mode bound fits in i64")
        })
        .collect();

    let mut levels = Vec::new();
    let mut modes = vec![0i64; geometry.dim()];
    collect_modes(e_max, config, geometry, &bounds, &mut modes, 0, &mut levels);

    levels.sort_by(|a, b| {
        a.compact_energy
            .partial_cmp(&b.compact_energy)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.modes.cmp(&b.modes))
    });
    Ok(levels)
}

fn collect_modes<T: Scalar>(
    e_max: T,
    config: &PhysicalConfig<T>,
    geometry: &CompactGeometry<T>,
    bounds: &[i64],
    modes: &mut Vec<i64>,
    dim: usize,
    levels: &mut Vec<SpectrumLevel<T>>,
) {
    if dim == bounds.len() {
        let energy =
            compact_energy(modes, config, geometry).expect("mode vector length matches geometry");
        if energy <= e_max {
            let nonzero = modes.iter().filter(|&&n| n != 0).count() as u32;
            levels.push(SpectrumLevel {
                modes: modes.clone(),
                compact_energy: energy,
                degeneracy: 1 << nonzero,
                open: energy < e_max,
            });
        }
        return;
    }
    for n in 0..=bounds[dim] {
        modes[dim] = n;
        collect_modes(e_max, config, geometry, bounds, modes, dim + 1, levels);
    }
    modes[dim] = 0;
}

/// Number of sample angles used by [`check_periodicity`].
const PERIODICITY_SAMPLES: usize = 32;

/// Tests whether an angular factor with real order `n_value` is single
/// valued on the circle.
///
/// Evaluates `max |Phi(phi + 2*pi) - Phi(phi)|` over sample angles for
/// `Phi(phi) = cos(n_value * phi) + i sin(n_value * phi)` and compares it
/// against `tol` (which must be positive). True exactly when `n_value` is
/// integral up to tolerance-induced slack.
pub fn check_periodicity<T: Scalar>(n_value: T, tol: T) -> bool {
    let tau = T::TAU();
    let mut worst = T::zero();
    for i in 0..PERIODICITY_SAMPLES {
        let phi = tau * T::from_usize(i).expect("sample index fits in the scalar type")
            / T::from_usize(PERIODICITY_SAMPLES).expect("sample count fits in the scalar type");
        let here = angular_pair(n_value, phi);
        let there = angular_pair(n_value, phi + tau);
        let diff = ((there.0 - here.0).powi(2) + (there.1 - here.1).powi(2)).sqrt();
        if diff > worst {
            worst = diff;
        }
    }
    worst <= tol
}

fn angular_pair<T: Scalar>(order: T, phi: T) -> (T, T) {
    ((order * phi).cos(), (order * phi).sin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn natural() -> PhysicalConfig<f64> {
        PhysicalConfig::natural()
    }

    fn circle(radius: f64) -> CompactGeometry<f64> {
        CompactGeometry::cylinder(radius).unwrap()
    }

    #[test]
    fn total_energy_examples() {
        let cfg = natural();
        assert_eq!(total_energy(1.0, &[0], &cfg, &circle(1.0)).unwrap(), 0.5);
        assert_eq!(total_energy(0.0, &[2], &cfg, &circle(1.0)).unwrap(), 2.0);
        let torus = CompactGeometry::new(vec![1.0, 0.5]).unwrap();
        assert_eq!(total_energy(0.0, &[1, 1], &cfg, &torus).unwrap(), 2.5);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = total_energy(1.0, &[1, 2], &natural(), &circle(1.0)).unwrap_err();
        assert_eq!(
            err,
            Error::ModeDimensionMismatch {
                expected: 1,
                got: 2
            }
        );
    }

    #[test]
    fn axial_wavenumber_examples() {
        let cfg = natural();
        let geom = circle(1.0);
        assert_eq!(
            axial_wavenumber(0.5, &[0], &cfg, &geom).unwrap(),
            Channel::Open { k1: 1.0 }
        );
        // Threshold counts as closed.
        assert_eq!(
            axial_wavenumber(2.0, &[2], &cfg, &geom).unwrap(),
            Channel::Closed { kappa: 0.0 }
        );
        match axial_wavenumber(1.0, &[2], &cfg, &geom).unwrap() {
            Channel::Closed { kappa } => assert_relative_eq!(kappa, 2f64.sqrt(), epsilon = 1e-15),
            other => panic!("expected closed channel, got {other:?}"),
        }
    }

    #[test]
    fn enumerate_small_circle_spectrum() {
        let levels = enumerate_levels(1.0, &natural(), &circle(1.0)).unwrap();
        let summary: Vec<(Vec<i64>, f64, u32, bool)> = levels
            .iter()
            .map(|l| (l.modes.clone(), l.compact_energy, l.degeneracy, l.open))
            .collect();
        assert_eq!(
            summary,
            vec![(vec![0], 0.0, 1, true), (vec![1], 0.5, 2, true)]
        );
    }

    #[test]
    fn enumerate_excludes_modes_above_cutoff() {
        let levels = enumerate_levels(0.4, &natural(), &circle(1.0)).unwrap();
        assert_eq!(levels.len(), 1);
        assert_eq!(levels[0].modes, vec![0]);
    }

    #[test]
    fn enumerate_threshold_level_is_closed() {
        let levels = enumerate_levels(0.5, &natural(), &circle(1.0)).unwrap();
        assert_eq!(levels.len(), 2);
        assert_eq!(levels[1].compact_energy, 0.5);
        assert!(!levels[1].open);
        assert!(levels[0].open);
    }

    #[test]
    fn enumerate_two_torus_with_tie_break() {
        let torus = CompactGeometry::new(vec![1.0, 1.0]).unwrap();
        let levels = enumerate_levels(0.6, &natural(), &torus).unwrap();
        let modes: Vec<Vec<i64>> = levels.iter().map(|l| l.modes.clone()).collect();
        assert_eq!(modes, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(levels[1].compact_energy, 0.5);
        assert_eq!(levels[1].degeneracy, 2);
        assert_eq!(levels[0].degeneracy, 1);
    }

    #[test]
    fn halving_the_radius_quadruples_compact_energies() {
        let cfg = natural();
        for n in 0..6i64 {
            let full = compact_energy(&[n], &cfg, &circle(1.0)).unwrap();
            let half = compact_energy(&[n], &cfg, &circle(0.5)).unwrap();
            assert_eq!(half, 4.0 * full);
        }
    }

    #[test]
    fn enumerate_rejects_bad_cutoff() {
        assert_eq!(
            enumerate_levels(0.0, &natural(), &circle(1.0)).unwrap_err(),
            Error::NonPositiveCutoff
        );
        assert_eq!(
            enumerate_levels(-2.0, &natural(), &circle(1.0)).unwrap_err(),
            Error::NonPositiveCutoff
        );
    }

    #[test]
    fn periodicity_examples() {
        assert!(check_periodicity(3.0, 1e-9));
        assert!(check_periodicity(0.0, 1e-9));
        assert!(check_periodicity(-7.0, 1e-9));
        assert!(!check_periodicity(0.5, 1e-9));
        // The mismatch magnitude at half-integer order is the full diameter.
        let phi = 0.0f64;
        let diff = ((0.5 * (phi + std::f64::consts::TAU)).cos() - (0.5 * phi).cos()).abs();
        assert_relative_eq!(diff, 2.0, epsilon = 1e-12);
    }

    proptest! {
        #[test]
        fn energy_wavenumber_round_trip(
            e in 0.01..50.0f64,
            n in 0i64..6,
            radius in 0.2..3.0f64,
        ) {
            let cfg = natural();
            let geom = circle(radius);
            match axial_wavenumber(e, &[n], &cfg, &geom).unwrap() {
                Channel::Open { k1 } => {
                    let back = total_energy(k1, &[n], &cfg, &geom).unwrap();
                    prop_assert!((back - e).abs() <= 1e-12 * e.max(1.0));
                }
                Channel::Closed { kappa } => {
                    // Closed channel: energy deficit reproduces kappa.
                    let compact = compact_energy(&[n], &cfg, &geom).unwrap();
                    prop_assert!(compact >= e);
                    prop_assert!((kappa * kappa / 2.0 - (compact - e)).abs() <= 1e-12 * compact.max(1.0));
                }
            }
        }

        #[test]
        fn enumeration_matches_brute_force(
            e_max in 0.1..20.0f64,
            r0 in 0.2..2.0f64,
            r1 in 0.2..2.0f64,
            dim in 1usize..=3,
        ) {
            let radii = match dim {
                1 => vec![r0],
                2 => vec![r0, r1],
                _ => vec![r0, r1, (r0 + r1) / 2.0],
            };
            let geom = CompactGeometry::new(radii.clone()).unwrap();
            let cfg = natural();
            let levels = enumerate_levels(e_max, &cfg, &geom).unwrap();

            // Independent scan over an oversized box.
            let mut expected = std::collections::BTreeSet::new();
            let bounds: Vec<i64> = radii
                .iter()
                .map(|r| (r * (2.0 * e_max).sqrt()).ceil() as i64 + 1)
                .collect();
            let mut stack = vec![vec![]];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == radii.len() {
                    let energy: f64 = prefix
                        .iter()
                        .zip(&radii)
                        .map(|(&n, &r)| (n as f64 * n as f64) / (2.0 * r * r))
                        .sum();
                    if energy <= e_max {
                        expected.insert(prefix.clone());
                    }
                    continue;
                }
                for n in 0..=bounds[prefix.len()] {
                    let mut next = prefix.clone();
                    next.push(n);
                    stack.push(next);
                }
            }
            let got: std::collections::BTreeSet<Vec<i64>> =
                levels.iter().map(|l| l.modes.clone()).collect();
            prop_assert_eq!(got, expected);

            // Sorted by energy, nondecreasing.
            for pair in levels.windows(2) {
                prop_assert!(pair[0].compact_energy <= pair[1].compact_energy);
            }
            // Degeneracy counts sign choices.
            for level in &levels {
                let nonzero = level.modes.iter().filter(|&&n| n != 0).count() as u32;
                prop_assert_eq!(level.degeneracy, 1u32 << nonzero);
            }
        }

        #[test]
        fn scaling_law_in_the_radius(
            n in 1i64..6,
            radius in 0.1..5.0f64,
            scale in 1.1..4.0f64,
        ) {
            let cfg = natural();
            let base = compact_energy(&[n], &cfg, &circle(radius)).unwrap();
            let shrunk = compact_energy(&[n], &cfg, &circle(radius / scale)).unwrap();
            prop_assert!((shrunk - scale * scale * base).abs() <= 1e-12 * shrunk.abs().max(1.0));
        }

        #[test]
        fn periodicity_accepts_integers_rejects_others(
            n in -10i64..=10,
            frac in 0.001..0.999f64,
        ) {
            prop_assert!(check_periodicity(n as f64, 1e-9));
            prop_assert!(!check_periodicity(n as f64 + frac, 1e-9));
        }
    }
}
