//! Recovery of compactification radii from measured energy offsets.
//!
//! A single compact dimension imprints the quadratic ladder
//! `delta_E = c * n^2` with `c = hbar^2 / (2 m R^2)` on the energy offsets
//! above the continuum edge; `d` compact dimensions contribute one such
//! term per dimension. Fitting the curvature coefficients by weighted
//! least squares through the origin inverts the relation:
//! `R_i = hbar / sqrt(2 m c_i)`.
//!
//! The continuum edge is assumed already subtracted by the caller; all
//! routines work on offsets, not absolute energies.

use crate::error::{AssignmentFailure, Error, Result};
use crate::scalar::{Scalar, is_nonnegative, is_positive, lit};
use crate::types::PhysicalConfig;

/// One measured energy offset with its assigned mode and uncertainty
/// (`sigma = 0` means exact).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasuredLevel<T> {
    pub n: u32,
    pub delta_e: T,
    pub sigma: T,
}

impl<T: Scalar> MeasuredLevel<T> {
    pub fn new(n: u32, delta_e: T, sigma: T) -> Self {
        Self { n, delta_e, sigma }
    }

    /// Exact measurement (`sigma = 0`).
    pub fn exact(n: u32, delta_e: T) -> Self {
        Self::new(n, delta_e, T::zero())
    }
}

/// Result of a single-radius fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusFit<T> {
    radius: T,
    curvature_coeff: T,
    rms_residual: T,
}

impl<T: Scalar> RadiusFit<T> {
    /// Recovered compactification radius `hbar / sqrt(2 m c)`.
    pub fn radius(&self) -> T {
        self.radius
    }

    /// Fitted ladder curvature `c = hbar^2 / (2 m R^2)`.
    pub fn curvature_coeff(&self) -> T {
        self.curvature_coeff
    }

    /// Weighted root-mean-square residual of the fit.
    pub fn rms_residual(&self) -> T {
        self.rms_residual
    }
}

/// One measured offset of a torus spectrum with its assigned mode vector.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusLevel<T> {
    pub modes: Vec<i64>,
    pub delta_e: T,
    pub sigma: T,
}

impl<T: Scalar> TorusLevel<T> {
    pub fn new(modes: Vec<i64>, delta_e: T, sigma: T) -> Self {
        Self {
            modes,
            delta_e,
            sigma,
        }
    }

    pub fn exact(modes: Vec<i64>, delta_e: T) -> Self {
        Self::new(modes, delta_e, T::zero())
    }
}

/// Result of a multi-radius fit.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusFit<T> {
    radii: Vec<T>,
    curvature_coeffs: Vec<T>,
    rms_residual: T,
}

impl<T: Scalar> TorusFit<T> {
    /// Recovered radii, one per compact dimension.
    pub fn radii(&self) -> &[T] {
        &self.radii
    }

    pub fn curvature_coeffs(&self) -> &[T] {
        &self.curvature_coeffs
    }

    pub fn rms_residual(&self) -> T {
        self.rms_residual
    }
}

/// Validates sigmas and returns one weight per level, or an error.
///
/// All-exact data gets uniform weights; otherwise every sigma must be
/// positive and the weights are `1 / sigma^2`.
fn weights<T: Scalar>(sigmas: &[T]) -> Result<Vec<T>> {
    for (index, &sigma) in sigmas.iter().enumerate() {
        if !is_nonnegative(sigma) {
            return Err(Error::NegativeSigma { index });
        }
    }
    let zeros = sigmas.iter().filter(|&&s| s == T::zero()).count();
    if zeros == sigmas.len() {
        Ok(vec![T::one(); sigmas.len()])
    } else if zeros == 0 {
        Ok(sigmas.iter().map(|&s| T::one() / (s * s)).collect())
    } else {
        Err(Error::MixedSigmas)
    }
}

fn radius_from_curvature<T: Scalar>(c: T, config: &PhysicalConfig<T>) -> T {
    config.hbar() / (lit::<T>(2.0) * config.mass() * c).sqrt()
}

/// Fits the ladder curvature through the origin and inverts it to a radius.
///
/// `c = sum(w n^2 dE) / sum(w n^4)`; needs at least one nonzero mode, and
/// every nonzero mode must come with a positive offset.
pub fn fit_radius<T: Scalar>(
    levels: &[MeasuredLevel<T>],
    config: &PhysicalConfig<T>,
) -> Result<RadiusFit<T>> {
    if levels.is_empty() {
        return Err(Error::EmptyLevels);
    }
    for (index, level) in levels.iter().enumerate() {
        if level.n > 0 && !is_positive(level.delta_e) {
            return Err(Error::InconsistentLadder { index });
        }
    }
    if levels.iter().all(|level| level.n == 0) {
        return Err(Error::AllZeroModes);
    }
    let sigmas: Vec<T> = levels.iter().map(|l| l.sigma).collect();
    let w = weights(&sigmas)?;

    let mut numerator = T::zero();
    let mut denominator = T::zero();
    for (level, &weight) in levels.iter().zip(&w) {
        let n = T::from_u32(level.n).expect("mode fits in the scalar type");
        let n_sq = n * n;
        numerator += weight * n_sq * level.delta_e;
        denominator += weight * n_sq * n_sq;
    }
    let c = numerator / denominator;
    if !is_positive(c) {
        return Err(Error::NonPositiveCurvature { index: 0 });
    }

    let mut residual_sq = T::zero();
    let mut weight_sum = T::zero();
    for (level, &weight) in levels.iter().zip(&w) {
        let n = T::from_u32(level.n).expect("mode fits in the scalar type");
        let miss = level.delta_e - c * n * n;
        residual_sq += weight * miss * miss;
        weight_sum += weight;
    }

    Ok(RadiusFit {
        radius: radius_from_curvature(c, config),
        curvature_coeff: c,
        rms_residual: (residual_sq / weight_sum).sqrt(),
    })
}

/// Diagnostic variant of [`fit_radius`] that also fits a constant offset.
///
/// The physical ladder passes through the origin, so a well-subtracted
/// continuum edge shows up here as an intercept compatible with zero;
/// a significant intercept flags a miscalibrated edge. Returns the fit
/// (radius from the curvature alone) together with the intercept. Needs at
/// least two distinct mode numbers, otherwise the two parameters are not
/// separable.
pub fn fit_radius_with_intercept<T: Scalar>(
    levels: &[MeasuredLevel<T>],
    config: &PhysicalConfig<T>,
) -> Result<(RadiusFit<T>, T)> {
    if levels.is_empty() {
        return Err(Error::EmptyLevels);
    }
    for (index, level) in levels.iter().enumerate() {
        if level.n > 0 && !is_positive(level.delta_e) {
            return Err(Error::InconsistentLadder { index });
        }
    }
    if levels.iter().all(|level| level.n == 0) {
        return Err(Error::AllZeroModes);
    }
    let sigmas: Vec<T> = levels.iter().map(|l| l.sigma).collect();
    let w = weights(&sigmas)?;

    // Normal equations for the design (n^2, 1).
    let mut matrix = vec![vec![T::zero(); 2]; 2];
    let mut rhs = vec![T::zero(); 2];
    for (level, &weight) in levels.iter().zip(&w) {
        let n = T::from_u32(level.n).expect("mode fits in the scalar type");
        let n_sq = n * n;
        matrix[0][0] += weight * n_sq * n_sq;
        matrix[0][1] += weight * n_sq;
        matrix[1][0] += weight * n_sq;
        matrix[1][1] += weight;
        rhs[0] += weight * n_sq * level.delta_e;
        rhs[1] += weight * level.delta_e;
    }
    let solution = solve_symmetric(matrix, rhs)?;
    let (c, intercept) = (solution[0], solution[1]);
    if !is_positive(c) {
        return Err(Error::NonPositiveCurvature { index: 0 });
    }

    let mut residual_sq = T::zero();
    let mut weight_sum = T::zero();
    for (level, &weight) in levels.iter().zip(&w) {
        let n = T::from_u32(level.n).expect("mode fits in the scalar type");
        let miss = level.delta_e - c * n * n - intercept;
        residual_sq += weight * miss * miss;
        weight_sum += weight;
    }

    Ok((
        RadiusFit {
            radius: radius_from_curvature(c, config),
            curvature_coeff: c,
            rms_residual: (residual_sq / weight_sum).sqrt(),
        },
        intercept,
    ))
}

/// Fits one curvature coefficient per compact dimension by weighted least
/// squares over the squared mode numbers, then inverts each to a radius.
///
/// Fails with the unresolved directions when the mode sampling cannot
/// separate the coefficients.
pub fn fit_torus_radii<T: Scalar>(
    levels: &[TorusLevel<T>],
    config: &PhysicalConfig<T>,
    dim: usize,
) -> Result<TorusFit<T>> {
    if dim == 0 || dim > crate::types::MAX_COMPACT_DIMS {
        return Err(Error::DimensionOutOfRange { dim });
    }
    if levels.is_empty() {
        return Err(Error::EmptyLevels);
    }
    for (index, level) in levels.iter().enumerate() {
        if level.modes.len() != dim {
            return Err(Error::ModeDimensionMismatch {
                expected: dim,
                got: level.modes.len(),
            });
        }
        if level.modes.iter().any(|&n| n != 0) && !is_positive(level.delta_e) {
            return Err(Error::InconsistentLadder { index });
        }
    }
    let sigmas: Vec<T> = levels.iter().map(|l| l.sigma).collect();
    let w = weights(&sigmas)?;

    // Normal equations over the squared mode numbers.
    let mut matrix = vec![vec![T::zero(); dim]; dim];
    let mut rhs = vec![T::zero(); dim];
    for (level, &weight) in levels.iter().zip(&w) {
        let squares: Vec<T> = level
            .modes
            .iter()
            .map(|&n| {
                let n = T::from_i64(n).expect("mode fits in the scalar type");
                n * n
            })
            .collect();
        for i in 0..dim {
            rhs[i] += weight * squares[i] * level.delta_e;
            for j in 0..dim {
                matrix[i][j] += weight * squares[i] * squares[j];
            }
        }
    }

    let coeffs = solve_symmetric(matrix, rhs)?;
    for (index, &c) in coeffs.iter().enumerate() {
        if !is_positive(c) {
            return Err(Error::NonPositiveCurvature { index });
        }
    }

    let mut residual_sq = T::zero();
    let mut weight_sum = T::zero();
    for (level, &weight) in levels.iter().zip(&w) {
        let mut prediction = T::zero();
        for (i, &n) in level.modes.iter().enumerate() {
            let n = T::from_i64(n).expect("mode fits in the scalar type");
            prediction += coeffs[i] * n * n;
        }
        let miss = level.delta_e - prediction;
        residual_sq += weight * miss * miss;
        weight_sum += weight;
    }

    Ok(TorusFit {
        radii: coeffs
            .iter()
            .map(|&c| radius_from_curvature(c, config))
            .collect(),
        curvature_coeffs: coeffs,
        rms_residual: (residual_sq / weight_sum).sqrt(),
    })
}

/// Gaussian elimination with partial pivoting; reports columns without a
/// usable pivot as rank-deficient directions.
fn solve_symmetric<T: Scalar>(mut matrix: Vec<Vec<T>>, mut rhs: Vec<T>) -> Result<Vec<T>> {
    let dim = rhs.len();
    let scale = matrix
        .iter()
        .flatten()
        .fold(T::zero(), |acc, &v| acc.max(v.abs()));
    let tol = scale * T::epsilon() * lit::<T>(64.0);

    let mut pivot_row_of_col = vec![usize::MAX; dim];
    let mut deficient = Vec::new();
    let mut row = 0usize;
    for col in 0..dim {
        let Some(best) = (row..dim).max_by(|&a, &b| {
            matrix[a][col]
                .abs()
                .partial_cmp(&matrix[b][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        }) else {
            deficient.push(col);
            continue;
        };
        if matrix[best][col].abs() <= tol {
            deficient.push(col);
            continue;
        }
        matrix.swap(row, best);
        rhs.swap(row, best);
        let pivot_row = matrix[row].clone();
        let pivot_rhs = rhs[row];
        for lower in (row + 1)..dim {
            let factor = matrix[lower][col] / pivot_row[col];
            for (k, entry) in matrix[lower].iter_mut().enumerate().skip(col) {
                *entry -= factor * pivot_row[k];
            }
            rhs[lower] -= factor * pivot_rhs;
        }
        pivot_row_of_col[col] = row;
        row += 1;
    }
    if !deficient.is_empty() {
        return Err(Error::RankDeficient {
            directions: deficient,
        });
    }

    let mut solution = vec![T::zero(); dim];
    for col in (0..dim).rev() {
        let row = pivot_row_of_col[col];
        let mut acc = rhs[row];
        for k in (col + 1)..dim {
            acc -= matrix[row][k] * solution[k];
        }
        solution[col] = acc / matrix[row][col];
    }
    Ok(solution)
}

/// Hypotheses tried for the mode of the smallest offset.
const MAX_START_MODE: u32 = 3;

/// Assigns consecutive integer modes to sorted positive offsets.
///
/// The smallest offset is first hypothesized to be `n = 1`; if the
/// quadratic ladder then fails within `tol_rel`, the start mode is advanced
/// up to `n = 3` (covering ladders whose lowest rungs were not observed).
/// Returns exact levels ready for [`fit_radius`], or the first mismatch of
/// the base hypothesis.
pub fn assign_modes<T: Scalar>(offsets: &[T], tol_rel: T) -> Result<Vec<MeasuredLevel<T>>> {
    if !is_positive(tol_rel) || tol_rel >= lit::<T>(0.5) {
        return Err(Error::InvalidTolerance);
    }
    if offsets.is_empty() {
        return Err(Error::EmptyLevels);
    }
    for (index, &offset) in offsets.iter().enumerate() {
        if !is_positive(offset) {
            return Err(Error::NonPositiveOffset { index });
        }
        if index > 0 && offset <= offsets[index - 1] {
            return Err(Error::UnsortedOffsets { index });
        }
    }

    let mut base_mismatch: Option<(usize, T, T)> = None;
    for start in 1..=MAX_START_MODE {
        let start_sq = T::from_u32(start * start).expect("mode fits in the scalar type");
        let c = offsets[0] / start_sq;
        let mut mismatch = None;
        for (i, &offset) in offsets.iter().enumerate().skip(1) {
            let n = start + i as u32;
            let predicted = c * T::from_u32(n * n).expect("mode fits in the scalar type");
            if (offset - predicted).abs() > tol_rel * predicted {
                mismatch = Some((i, offset, predicted));
                break;
            }
        }
        match mismatch {
            None => {
                return Ok(offsets
                    .iter()
                    .enumerate()
                    .map(|(i, &offset)| MeasuredLevel::exact(start + i as u32, offset))
                    .collect());
            }
            Some(found) => {
                if start == 1 {
                    base_mismatch = Some(found);
                }
            }
        }
    }

    let (index, observed, predicted) =
        base_mismatch.expect("a multi-offset ladder that failed every hypothesis has a mismatch");
    Err(Error::Assignment(AssignmentFailure {
        index,
        observed: observed.to_f64().unwrap_or(f64::NAN),
        predicted: predicted.to_f64().unwrap_or(f64::NAN),
        max_start: MAX_START_MODE,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn natural() -> PhysicalConfig<f64> {
        PhysicalConfig::natural()
    }

    fn exact_ladder(c: f64, modes: &[u32]) -> Vec<MeasuredLevel<f64>> {
        modes
            .iter()
            .map(|&n| MeasuredLevel::exact(n, c * (n * n) as f64))
            .collect()
    }

    #[test]
    fn unit_radius_ladder_round_trips() {
        let fit = fit_radius(&exact_ladder(0.5, &[1, 2, 3]), &natural()).unwrap();
        assert_eq!(fit.radius(), 1.0);
        assert_eq!(fit.curvature_coeff(), 0.5);
        assert_eq!(fit.rms_residual(), 0.0);
    }

    #[test]
    fn single_level_inversion() {
        let fit = fit_radius(&[MeasuredLevel::exact(1, 2.0)], &natural()).unwrap();
        assert_eq!(fit.curvature_coeff(), 2.0);
        assert_eq!(fit.radius(), 0.5);
    }

    #[test]
    fn invalid_ladders_are_rejected() {
        assert_eq!(fit_radius(&[], &natural()).unwrap_err(), Error::EmptyLevels);
        assert_eq!(
            fit_radius(&[MeasuredLevel::exact(1, -1.0)], &natural()).unwrap_err(),
            Error::InconsistentLadder { index: 0 }
        );
        assert_eq!(
            fit_radius(&[MeasuredLevel::exact(0, 0.0)], &natural()).unwrap_err(),
            Error::AllZeroModes
        );
        assert_eq!(
            fit_radius(&[MeasuredLevel::new(1, 1.0, -0.1)], &natural()).unwrap_err(),
            Error::NegativeSigma { index: 0 }
        );
        let mixed = vec![
            MeasuredLevel::new(1, 0.5, 0.0),
            MeasuredLevel::new(2, 2.0, 0.1),
        ];
        assert_eq!(
            fit_radius(&mixed, &natural()).unwrap_err(),
            Error::MixedSigmas
        );
    }

    #[test]
    fn uniform_sigmas_match_exact_weights() {
        let exact = exact_ladder(0.5, &[1, 2, 3]);
        let noisy: Vec<_> = exact
            .iter()
            .map(|l| MeasuredLevel::new(l.n, l.delta_e, 0.3))
            .collect();
        let a = fit_radius(&exact, &natural()).unwrap();
        let b = fit_radius(&noisy, &natural()).unwrap();
        assert_relative_eq!(a.radius(), b.radius(), epsilon = 1e-12);
    }

    #[test]
    fn doubling_offsets_halves_the_radius_exactly() {
        let base = exact_ladder(0.5, &[1, 2, 3, 4]);
        let scaled: Vec<_> = base
            .iter()
            .map(|l| MeasuredLevel::exact(l.n, 4.0 * l.delta_e))
            .collect();
        let r0 = fit_radius(&base, &natural()).unwrap().radius();
        let r1 = fit_radius(&scaled, &natural()).unwrap().radius();
        assert_eq!(r1, r0 / 2.0);
    }

    #[test]
    fn assign_modes_examples() {
        let levels = assign_modes(&[0.5, 2.0, 4.5], 0.05).unwrap();
        let modes: Vec<u32> = levels.iter().map(|l| l.n).collect();
        assert_eq!(modes, vec![1, 2, 3]);
        assert_eq!(levels[0].delta_e, 0.5);

        // Missing lowest rung is recovered by the shifted hypothesis.
        let levels = assign_modes(&[2.0, 4.5], 0.05).unwrap();
        let modes: Vec<u32> = levels.iter().map(|l| l.n).collect();
        assert_eq!(modes, vec![2, 3]);

        let err = assign_modes(&[0.5, 0.6], 0.05).unwrap_err();
        match err {
            Error::Assignment(failure) => {
                assert_eq!(failure.index, 1);
                assert_eq!(failure.observed, 0.6);
                assert_eq!(failure.predicted, 2.0);
            }
            other => panic!("expected assignment failure, got {other:?}"),
        }
    }

    #[test]
    fn assign_modes_validates_input() {
        assert_eq!(
            assign_modes(&[0.5, 2.0], 0.0).unwrap_err(),
            Error::InvalidTolerance
        );
        assert_eq!(
            assign_modes(&[0.5, 2.0], 0.5).unwrap_err(),
            Error::InvalidTolerance
        );
        assert_eq!(
            assign_modes::<f64>(&[], 0.05).unwrap_err(),
            Error::EmptyLevels
        );
        assert_eq!(
            assign_modes(&[2.0, 0.5], 0.05).unwrap_err(),
            Error::UnsortedOffsets { index: 1 }
        );
        assert_eq!(
            assign_modes(&[-1.0, 0.5], 0.05).unwrap_err(),
            Error::NonPositiveOffset { index: 0 }
        );
    }

    #[test]
    fn intercept_mode_flags_a_shifted_edge() {
        // A clean ladder fits a zero intercept and the same radius.
        let clean = exact_ladder(0.5, &[1, 2, 3, 4]);
        let (fit, intercept) = fit_radius_with_intercept(&clean, &natural()).unwrap();
        assert!(intercept.abs() < 1e-12);
        assert_relative_eq!(
            fit.radius(),
            fit_radius(&clean, &natural()).unwrap().radius(),
            epsilon = 1e-12
        );

        // A miscalibrated continuum edge appears as the intercept while the
        // curvature (and hence the radius) is unchanged.
        let shifted: Vec<_> = clean
            .iter()
            .map(|l| MeasuredLevel::exact(l.n, l.delta_e + 0.25))
            .collect();
        let (fit, intercept) = fit_radius_with_intercept(&shifted, &natural()).unwrap();
        assert_relative_eq!(intercept, 0.25, epsilon = 1e-12);
        assert_relative_eq!(fit.radius(), 1.0, epsilon = 1e-12);
        assert!(fit.rms_residual() < 1e-12);

        // One distinct mode number cannot separate slope from intercept.
        let degenerate = vec![
            MeasuredLevel::exact(2, 2.0),
            MeasuredLevel::exact(2, 2.0 + 1e-9),
        ];
        assert!(matches!(
            fit_radius_with_intercept(&degenerate, &natural()).unwrap_err(),
            Error::RankDeficient { .. }
        ));
    }

    #[test]
    fn torus_fit_recovers_two_radii() {
        // Radii (1, 0.5) in natural units: c = (0.5, 2.0).
        let levels = vec![
            TorusLevel::exact(vec![1, 0], 0.5),
            TorusLevel::exact(vec![0, 1], 2.0),
            TorusLevel::exact(vec![1, 1], 2.5),
        ];
        let fit = fit_torus_radii(&levels, &natural(), 2).unwrap();
        assert_relative_eq!(fit.radii()[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(fit.radii()[1], 0.5, epsilon = 1e-12);
        assert!(fit.rms_residual() < 1e-12);
    }

    #[test]
    fn degenerate_mode_sampling_is_reported() {
        let levels = vec![
            TorusLevel::exact(vec![1, 1], 2.5),
            TorusLevel::exact(vec![2, 2], 10.0),
        ];
        let err = fit_torus_radii(&levels, &natural(), 2).unwrap_err();
        assert_eq!(
            err,
            Error::RankDeficient {
                directions: vec![1]
            }
        );
    }

    #[test]
    fn torus_fit_validates_input() {
        assert_eq!(
            fit_torus_radii::<f64>(&[], &natural(), 2).unwrap_err(),
            Error::EmptyLevels
        );
        let wrong = vec![TorusLevel::exact(vec![1], 0.5)];
        assert_eq!(
            fit_torus_radii(&wrong, &natural(), 2).unwrap_err(),
            Error::ModeDimensionMismatch {
                expected: 2,
                got: 1
            }
        );
        assert!(matches!(
            fit_torus_radii(&wrong, &natural(), 0).unwrap_err(),
            Error::DimensionOutOfRange { .. }
        ));
    }

    #[test]
    fn one_dimensional_torus_fit_matches_fit_radius() {
        let levels = vec![
            MeasuredLevel::new(1, 0.52, 0.01),
            MeasuredLevel::new(2, 1.97, 0.02),
            MeasuredLevel::new(3, 4.51, 0.01),
        ];
        let torus: Vec<_> = levels
            .iter()
            .map(|l| TorusLevel::new(vec![l.n as i64], l.delta_e, l.sigma))
            .collect();
        let single = fit_radius(&levels, &natural()).unwrap();
        let multi = fit_torus_radii(&torus, &natural(), 1).unwrap();
        assert_relative_eq!(single.radius(), multi.radii()[0], epsilon = 1e-12);
        assert_relative_eq!(single.rms_residual(), multi.rms_residual(), epsilon = 1e-12);
    }

    proptest! {
        #[test]
        fn exact_ladders_round_trip(radius in 0.01..10.0f64) {
            let c = 1.0 / (2.0 * radius * radius);
            let levels = exact_ladder(c, &[1, 2, 3, 4, 5]);
            let fit = fit_radius(&levels, &natural()).unwrap();
            prop_assert!((fit.radius() - radius).abs() <= 1e-9 * radius);
        }

        #[test]
        fn scaling_offsets_rescales_the_radius(
            radius in 0.1..5.0f64,
            s in 0.2..4.0f64,
        ) {
            let c = 1.0 / (2.0 * radius * radius);
            let base = exact_ladder(c, &[1, 2, 3]);
            let scaled: Vec<_> = base
                .iter()
                .map(|l| MeasuredLevel::exact(l.n, s * s * l.delta_e))
                .collect();
            let r0 = fit_radius(&base, &natural()).unwrap().radius();
            let r1 = fit_radius(&scaled, &natural()).unwrap().radius();
            prop_assert!((r1 - r0 / s).abs() <= 1e-12 * r0.max(1.0));
        }
    }
}
