//! Scalar abstractions.
//!
//! [`Scalar`] is what sparse operators and Fock vectors are generic over:
//! plain floats, complex floats and the exact surd fields. [`ExactField`] is
//! the coefficient field of a [`Surd`](crate::Surd) and of exact moment
//! integrals.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, Num, One, ToPrimitive, Zero};

use crate::exact::rational::{complex_fraction_string, fraction_string};
use crate::{ComplexRational, Rational, C64};

/// An exact field closed under complex conjugation.
pub trait ExactField:
    Clone + PartialEq + Debug + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn conj(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_c64(&self) -> C64;
    /// Canonical text form, fractions always written `num/den`.
    fn render(&self) -> String;
}

impl ExactField for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_c64(&self) -> C64 {
        C64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn render(&self) -> String {
        fraction_string(self)
    }
}

impl ExactField for ComplexRational {
    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.clone(), Rational::zero())
    }

    fn to_c64(&self) -> C64 {
        C64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn render(&self) -> String {
        complex_fraction_string(self)
    }
}

/// Element type of [`SparseOperator`](crate::fock::SparseOperator) and
/// [`FockVector`](crate::fock::FockVector).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `√n`, exact where the type allows.
    fn sqrt_of(n: u64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn conj(&self) -> Self;
    /// Modulus as a double; used for relative tolerances.
    fn magnitude(&self) -> f64;
    fn render(&self) -> String;
}

/// Lossy view of any scalar as a double-precision complex number.
pub trait ToComplex64 {
    fn to_c64(&self) -> C64;
}

macro_rules! real_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn sqrt_of(n: u64) -> Self {
                (n as $t).sqrt()
            }

            fn from_rational(r: &Rational) -> Self {
                <$t as num_traits::NumCast>::from(r.to_f64().unwrap_or(f64::NAN))
                    .unwrap_or(<$t>::nan())
            }

            fn conj(&self) -> Self {
                *self
            }

            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }

            fn render(&self) -> String {
                format!("{:.6e}", self)
            }
        }

        impl ToComplex64 for $t {
            fn to_c64(&self) -> C64 {
                C64::new(*self as f64, 0.0)
            }
        }

        impl Scalar for Complex<$t> {
            fn sqrt_of(n: u64) -> Self {
                Complex::new((n as $t).sqrt(), 0.0)
            }

            fn from_rational(r: &Rational) -> Self {
                Complex::new(<$t as Scalar>::from_rational(r), 0.0)
            }

            fn conj(&self) -> Self {
                Complex::conj(self)
            }

            fn magnitude(&self) -> f64 {
                self.norm() as f64
            }

            fn render(&self) -> String {
                format!("{:.6e}{:+.6e}i", self.re, self.im)
            }
        }

        impl ToComplex64 for Complex<$t> {
            fn to_c64(&self) -> C64 {
                C64::new(self.re as f64, self.im as f64)
            }
        }
    };
}

real_float_scalar!(f32);
real_float_scalar!(f64);

/// Norm-wise relative error `|a − b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_error<T: Float>(a: Complex<T>, b: Complex<T>) -> T {
    let scale = a.norm().max(b.norm());
    if scale.is_zero() {
        T::zero()
    } else {
        (a - b).norm() / scale
    }
}
