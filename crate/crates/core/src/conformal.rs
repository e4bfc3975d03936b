//! Conformal point shifts.
//!
//! [`RadialShift`] is the Bayliss–Turkel tangent map `g1(x) = β + tan(λ(x - μ)) / α`
//! on `[0, 2]`, calibrated so that both endpoints are fixed. [`AngularShift`]
//! is a circle diffeomorphism of `[0, 2π)` that clusters nodes around `φ̄`:
//!
//! ```text
//! g2(θ) = θ - 2 arg(1 + η e^{i(θ - φ̄)})
//! g2'(θ) = (1 - η²) / (1 + 2η cos(θ - φ̄) + η²)
//! ```
//!
//! so the node density at `φ̄` grows by `(1 + η) / (1 - η)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bary::wrap_angle;
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialShift {
    alpha: f64,
    beta: f64,
    lambda: f64,
    mu: f64,
}

impl RadialShift {
    /// Tangent map clustering nodes around `beta` with density `alpha`.
    pub fn new(beta: f64, alpha: f64) -> Result<Self> {
        if !(beta > 0.0 && beta < 2.0) {
            return Err(invalid(format!(
                "radial front location beta = {beta} must lie in (0, 2)"
            )));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(invalid(format!(
                "radial density alpha = {alpha} must be positive"
            )));
        }
        let lo = (alpha * (0.0 - beta)).atan();
        let hi = (alpha * (2.0 - beta)).atan();
        let lambda = (hi - lo) / 2.0;
        let mu = 0.0 - lo / lambda;
        Ok(Self {
            alpha,
            beta,
            lambda,
            mu,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `g1(x)` for `x` in `[0, 2]`; endpoints map to themselves exactly.
    pub fn apply(&self, x: f64) -> Result<f64> {
        if x.is_nan() || !(0.0..=2.0).contains(&x) {
            return Err(Error::Domain {
                value: x,
                lo: 0.0,
                hi: 2.0,
            });
        }
        if x == 0.0 || x == 2.0 {
            return Ok(x);
        }
        let y = self.beta + (self.lambda * (x - self.mu)).tan() / self.alpha;
        Ok(y.clamp(0.0, 2.0))
    }

    /// `g1'(x) = λ sec²(λ(x - μ)) / α`.
    pub fn derivative(&self, x: f64) -> f64 {
        let c = (self.lambda * (x - self.mu)).cos();
        self.lambda / (self.alpha * c * c)
    }
}

pub fn make_radial_shift(beta: f64, alpha: f64) -> Result<RadialShift> {
    RadialShift::new(beta, alpha)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularShift {
    phi_bar: f64,
    eta: f64,
}

impl AngularShift {
    pub fn new(phi_bar: f64, eta: f64) -> Result<Self> {
        if !phi_bar.is_finite() {
            return Err(invalid("cluster centre phi_bar must be finite"));
        }
        // eta = 1 would put a zero of g2' at phi_bar
        if !(0.0..1.0).contains(&eta) {
            return Err(invalid(format!(
                "angular density eta = {eta} must lie in [0, 1)"
            )));
        }
        Ok(Self {
            phi_bar: wrap_angle(phi_bar),
            eta,
        })
    }

    pub fn phi_bar(&self) -> f64 {
        self.phi_bar
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Continuous lift of the map to the real line: strictly increasing,
    /// `lift(θ + 2π) = lift(θ) + 2π`.
    pub fn lift(&self, theta: f64) -> f64 {
        let psi = theta - self.phi_bar;
        theta - 2.0 * (self.eta * psi.sin()).atan2(1.0 + self.eta * psi.cos())
    }

    /// `g2(θ)` reduced to `[0, 2π)`.
    pub fn apply(&self, theta: f64) -> f64 {
        wrap_angle(self.lift(theta))
    }

    pub fn derivative(&self, theta: f64) -> f64 {
        let e = self.eta;
        (1.0 - e * e) / (1.0 + 2.0 * e * (theta - self.phi_bar).cos() + e * e)
    }

    /// The map in its original complex-logarithm form
    /// `-i log((e^{iφ̄} + η e^{iθ}) / (1 + e^{iφ̄} η e^{-iθ}))`, for comparison
    /// only. Its range is an arc of width `4 arcsin η`, so it is not a
    /// bijection of the circle and is never used to place nodes.
    pub fn apply_as_printed(&self, theta: f64) -> f64 {
        let i = Complex64::i();
        let num = (i * self.phi_bar).exp() + self.eta * (i * theta).exp();
        let den = 1.0 + (i * self.phi_bar).exp() * self.eta * (-i * theta).exp();
        let z = -i * (num / den).ln();
        wrap_angle(z.re)
    }
}

pub fn make_angular_shift(phi_bar: f64, eta: f64) -> Result<AngularShift> {
    AngularShift::new(phi_bar, eta)
}

/// Antipode of the cluster centre, where nodes are sparsest.
pub fn antipode(shift: &AngularShift) -> f64 {
    wrap_angle(shift.phi_bar() + PI)
}
