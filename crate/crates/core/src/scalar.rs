//! Real scalar types usable as the component type of complex amplitudes.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating point component type: `f32` or `f64`.
///
/// Encoded words only ever hold 0 and 1, but the Grover diffusion step
/// produces arbitrary reals, so a single float type serves every module.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    /// Tolerance used when deciding whether an amplitude is part of the
    /// stored word.
    fn default_support_eps() -> Self;

    /// Converts a count; exact for every count the simulator can hold.
    fn from_count(count: usize) -> Self {
        Self::from_usize(count).expect("count representable as float")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn default_support_eps() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn default_support_eps() -> Self {
        1e-5
    }
}

/// Neumaier-compensated sum; keeps 2^24-term reductions accurate to a few
/// ulps.
pub fn compensated_sum<T: Scalar, I: IntoIterator<Item = T>>(values: I) -> T {
    let (mut sum, mut carry) = (T::zero(), T::zero());
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry = carry + ((sum - t) + v);
        } else {
            carry = carry + ((v - t) + sum);
        }
        sum = t;
    }
    sum + carry
}
