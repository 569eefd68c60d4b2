//! Generic floating-point scalar used by every physics routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar, implemented for `f32` and `f64`.
///
/// All formulas in the crate are written against this trait; pick `f64`
/// unless you have a reason not to. The associated tolerance scales the
/// built-in identity checks (unitarity, continuity) with the precision of
/// the scalar.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance for the amplitude identities enforced at
    /// construction time.
    fn identity_tol() -> Self;
}

impl Scalar for f32 {
    fn identity_tol() -> Self {
        1e-5
    }
}

impl Scalar for f64 {
    fn identity_tol() -> Self {
        1e-12
    }
}

/// Converts an `f64` literal into the working scalar type.
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal must be representable in the scalar type")
}

/// Finite and strictly positive; false for NaN and infinities.
pub(crate) fn is_positive<T: Scalar>(x: T) -> bool {
    x.is_finite() && x > T::zero()
}

/// Finite and nonnegative; false for NaN and infinities.
pub(crate) fn is_nonnegative<T: Scalar>(x: T) -> bool {
    x.is_finite() && x >= T::zero()
}
