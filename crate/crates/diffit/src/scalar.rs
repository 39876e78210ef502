//! Floating-point element abstraction.
//!
//! Training and sampling run in `f32`; gradient-check suites run in `f64`
//! where central finite differences are trustworthy. Everything downstream is
//! generic over [`Scalar`] so both precisions share one code path.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub trait Scalar:
    Copy
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    const ZERO: Self;
    const ONE: Self;
    /// Dtype name used in error messages and checkpoint metadata.
    const NAME: &'static str;

    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn from_f32(v: f32) -> Self;
    fn to_f32(self) -> f32;

    fn is_finite_val(self) -> bool;
    fn abs_val(self) -> Self;
    fn sqrt_val(self) -> Self;
    fn exp_val(self) -> Self;
    fn ln_val(self) -> Self;
    fn tanh_val(self) -> Self;
    fn max_val(self, other: Self) -> Self;
    fn min_val(self, other: Self) -> Self;
}

macro_rules! impl_scalar {
    ($ty:ty, $name:literal) => {
        impl Scalar for $ty {
            const ZERO: Self = 0.0;
            const ONE: Self = 1.0;
            const NAME: &'static str = $name;

            #[inline(always)]
            fn from_f64(v: f64) -> Self {
                v as $ty
            }
            #[inline(always)]
            fn to_f64(self) -> f64 {
                self as f64
            }
            #[inline(always)]
            fn from_f32(v: f32) -> Self {
                v as $ty
            }
            #[inline(always)]
            fn to_f32(self) -> f32 {
                self as f32
            }

            #[inline(always)]
            fn is_finite_val(self) -> bool {
                self.is_finite()
            }
            #[inline(always)]
            fn abs_val(self) -> Self {
                self.abs()
            }
            #[inline(always)]
            fn sqrt_val(self) -> Self {
                self.sqrt()
            }
            #[inline(always)]
            fn exp_val(self) -> Self {
                self.exp()
            }
            #[inline(always)]
            fn ln_val(self) -> Self {
                self.ln()
            }
            #[inline(always)]
            fn tanh_val(self) -> Self {
                self.tanh()
            }
            #[inline(always)]
            fn max_val(self, other: Self) -> Self {
                self.max(other)
            }
            #[inline(always)]
            fn min_val(self, other: Self) -> Self {
                self.min(other)
            }
        }
    };
}

impl_scalar!(f32, "f32");
impl_scalar!(f64, "f64");
