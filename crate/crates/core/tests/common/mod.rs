//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use std::f64::consts::TAU;

/// Lagrange form `Σ f_i Π_{j≠i} (x - x_j) / (x_i - x_j)`.
pub fn lagrange(nodes: &[f64], values: &[f64], x: f64) -> f64 {
    nodes
        .iter()
        .zip(values)
        .enumerate()
        .map(|(i, (&xi, &fi))| {
            let l: f64 = nodes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &xj)| (x - xj) / (xi - xj))
                .product();
            fi * l
        })
        .sum()
}

/// Balanced trigonometric interpolant through values at `2πj/n`, from the
/// discrete Fourier coefficients. For even `n` the Nyquist mode enters as
/// `c cos(nθ/2)`.
pub fn dft_trig(values: &[f64], theta: f64) -> f64 {
    let n = values.len();
    let coeff = |k: i64| -> (f64, f64) {
        let (mut re, mut im) = (0.0, 0.0);
        for (j, &f) in values.iter().enumerate() {
            let a = -(k as f64) * TAU * j as f64 / n as f64;
            re += f * a.cos();
            im += f * a.sin();
        }
        (re / n as f64, im / n as f64)
    };
    let half = (n / 2) as i64;
    let top = if n.is_multiple_of(2) { half - 1 } else { half };
    let mut total = 0.0;
    for k in -top..=top {
        let (re, im) = coeff(k);
        let a = k as f64 * theta;
        total += re * a.cos() - im * a.sin();
    }
    if n.is_multiple_of(2) {
        let (re, _) = coeff(half);
        total += re * (half as f64 * theta).cos();
    }
    total
}

/// Tensor-product oracle on an unshifted disk grid: DFT along each circle,
/// then Lagrange along the radius.
pub fn tensor_oracle(radial: &[f64], n2: usize, values: &[f64], r: f64, theta: f64) -> f64 {
    let along: Vec<f64> = values.chunks(n2).map(|row| dft_trig(row, theta)).collect();
    lagrange(radial, &along, r)
}

/// Chebyshev points of the second kind on `[0, 2]`, cosine form.
pub fn chebyshev_on_0_2(n: usize) -> Vec<f64> {
    (0..=n)
        .map(|i| 1.0 - (std::f64::consts::PI * i as f64 / n as f64).cos())
        .collect()
}
