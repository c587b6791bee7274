use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

pub use num_complex::Complex;

/// Real scalar the whole crate is generic over.
///
/// Every numeric threshold is a method here so that `f32` builds get
/// tolerances matched to single precision. The `f64` values are the
/// reference thresholds quoted throughout the documentation.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Entrywise `|h - h†|` allowed before a matrix counts as non-Hermitian.
    fn hermitian_tol() -> Self;
    /// Allowed `|Tr ρ - 1|` for a density matrix.
    fn trace_tol() -> Self;
    /// Most negative eigenvalue a density matrix may carry.
    fn state_eig_tol() -> Self;
    /// Eigenvalues (or radicands) below `-psd_tol` are hard errors rather
    /// than round-off to clamp.
    fn psd_tol() -> Self;
    /// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
    fn jacobi_tol() -> Self;
    /// Tolerance on parameter constraints such as `α² + β² + γ² = 1`.
    fn param_tol() -> Self;
    /// `N` above this counts as Bell nonlocal; also the edge slack of
    /// region classification.
    fn bell_tol() -> Self;

    /// Converts an `f64` literal. Panics only if the value is not
    /// representable at all, which never happens for the literals used here.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Positive eigenvalues this small relative to the matrix scale are
    /// indistinguishable from Jacobi round-off.
    #[inline]
    fn round_off_floor(scale: Self) -> Self {
        Self::epsilon() * Self::of(64.0) * scale.max(Self::one())
    }
}

macro_rules! impl_real {
    ($t:ty, herm = $h:expr, trace = $tr:expr, eig = $e:expr, psd = $p:expr,
     jacobi = $j:expr, param = $pa:expr, bell = $b:expr) => {
        impl Real for $t {
            #[inline]
            fn hermitian_tol() -> Self {
                $h
            }
            #[inline]
            fn trace_tol() -> Self {
                $tr
            }
            #[inline]
            fn state_eig_tol() -> Self {
                $e
            }
            #[inline]
            fn psd_tol() -> Self {
                $p
            }
            #[inline]
            fn jacobi_tol() -> Self {
                $j
            }
            #[inline]
            fn param_tol() -> Self {
                $pa
            }
            #[inline]
            fn bell_tol() -> Self {
                $b
            }
        }
    };
}

impl_real!(
    f64,
    herm = 1e-12,
    trace = 1e-12,
    eig = 1e-10,
    psd = 1e-8,
    jacobi = 1e-13,
    param = 1e-12,
    bell = 1e-12
);
impl_real!(
    f32,
    herm = 1e-5,
    trace = 1e-5,
    eig = 1e-5,
    psd = 1e-4,
    jacobi = 1e-6,
    param = 1e-5,
    bell = 1e-5
);

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn re<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}
