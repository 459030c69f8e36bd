//! Classical fourth-order Runge–Kutta stepping for small autonomous systems.

use std::ops::{Add, Mul};

/// Fixed-size state vectors whose components support linear combination.
pub trait Component: Copy + Add<Output = Self> + Mul<f64, Output = Self> {}

impl<T: Copy + Add<Output = T> + Mul<f64, Output = T>> Component for T {}

#[inline]
pub(crate) fn axpy<T: Component, const N: usize>(y: &[T; N], h: f64, k: &[T; N]) -> [T; N] {
    std::array::from_fn(|i| y[i] + k[i] * h)
}

/// One RK4 step of `y' = f(y)`.
#[inline]
pub fn rk4_step<T, const N: usize, F>(y: &[T; N], h: f64, f: F) -> [T; N]
where
    T: Component,
    F: Fn(&[T; N]) -> [T; N],
{
    let k1 = f(y);
    let k2 = f(&axpy(y, 0.5 * h, &k1));
    let k3 = f(&axpy(y, 0.5 * h, &k2));
    let k4 = f(&axpy(y, h, &k3));
    std::array::from_fn(|i| y[i] + (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h / 6.0))
}
