//! Built-in test domains, their evaluation rectangles, and shift defaults.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::conformal::{AngularShift, RadialShift};
use crate::error::{invalid, Result};
use crate::starlike::StarlikeDomain;

/// Limaçon.
pub fn rho1(t: f64) -> f64 {
    1.5 + 1.2 * t.cos()
}

/// First butterfly.
pub fn rho2(t: f64) -> f64 {
    1.0 - t.cos() * (3.0 * t).sin()
}

/// Second butterfly.
pub fn rho3(t: f64) -> f64 {
    7.5 - t.sin() + 4.0 * (3.0 * t).sin() - (7.0 * t).sin() + 3.0 * (2.0 * t).cos()
}

/// Asterisk.
pub fn rho4(t: f64) -> f64 {
    (10.0 * t).sin() + 2.2
}

/// Polar radius of the square `[-1, 1]²`; has corners.
pub fn rho5(t: f64) -> f64 {
    (1.0 / t.cos().abs()).min(1.0 / t.sin().abs())
}

/// Number of samples behind `square_smoothed`.
pub const SQUARE_SAMPLES: usize = 64;

pub const BUILTIN_NAMES: [&str; 6] = [
    "limacon",
    "butterfly1",
    "butterfly2",
    "asterisk",
    "square",
    "square_smoothed",
];

/// Axis-aligned evaluation rectangle `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rect {
    pub const fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Self {
        Self { x0, x1, y0, y1 }
    }

    /// Bounding box of the domain's boundary, padded by 5%.
    pub fn around(domain: &StarlikeDomain) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for k in 0..4096 {
            let t = TAU * k as f64 / 4096.0;
            let r = domain.rho(t);
            let (x, y) = (r * t.cos(), r * t.sin());
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let pad = 0.05 * (x1 - x0).max(y1 - y0);
        Self::new(x0 - pad, x1 + pad, y0 - pad, y1 + pad)
    }
}

/// A domain together with its name and evaluation rectangle.
#[derive(Debug, Clone)]
pub struct TestDomain {
    pub name: String,
    pub domain: StarlikeDomain,
    pub rect: Rect,
}

/// Equispaced samples of [`rho5`].
pub fn square_samples(n: usize) -> (Vec<f64>, Vec<f64>) {
    let thetas: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    let rhos = thetas.iter().map(|&t| rho5(t)).collect();
    (thetas, rhos)
}

pub fn builtin_domain(name: &str) -> Result<TestDomain> {
    let (domain, rect) = match name {
        "limacon" => (
            StarlikeDomain::from_function(rho1)?,
            Rect::new(-1.0, 3.0, -2.0, 2.0),
        ),
        "butterfly1" => (
            StarlikeDomain::from_function(rho2)?,
            Rect::new(-2.0, 2.0, -2.0, 2.0),
        ),
        "butterfly2" => (
            StarlikeDomain::from_function(rho3)?,
            Rect::new(-13.0, 13.0, -10.0, 10.0),
        ),
        "asterisk" => (
            StarlikeDomain::from_function(rho4)?,
            Rect::new(-4.0, 4.0, -4.0, 4.0),
        ),
        "square" => (
            StarlikeDomain::from_function(rho5)?,
            Rect::new(-2.0, 2.0, -2.0, 2.0),
        ),
        "square_smoothed" => {
            let (t, r) = square_samples(SQUARE_SAMPLES);
            (
                StarlikeDomain::from_samples(t, r)?,
                Rect::new(-2.0, 2.0, -2.0, 2.0),
            )
        }
        _ => {
            return Err(invalid(format!(
                "unknown domain {name:?}; expected one of {}",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };
    Ok(TestDomain {
        name: name.to_string(),
        domain,
        rect,
    })
}

pub const DEFAULT_ALPHA: f64 = 2.8;
pub const DEFAULT_ETA: f64 = 0.65;

/// Parameters of the radial and angular point shifts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftParams {
    pub alpha: f64,
    pub beta: f64,
    pub eta: f64,
    pub phi_bar: f64,
}

impl ShiftParams {
    /// Clusters nodes at the Cartesian point `front`: `φ̄` is its angle and
    /// `β` its disk radius `2|front| / ρ(φ̄)`.
    pub fn at_front(domain: &StarlikeDomain, front: (f64, f64)) -> Result<Self> {
        let (x, y) = front;
        let phi_bar = crate::bary::wrap_angle(y.atan2(x));
        let beta = 2.0 * x.hypot(y) / domain.rho(phi_bar);
        if !(beta > 0.0 && beta < 2.0) {
            return Err(invalid(format!(
                "front ({x}, {y}) is not strictly inside the domain (disk radius {beta})"
            )));
        }
        Ok(Self {
            alpha: DEFAULT_ALPHA,
            beta,
            eta: DEFAULT_ETA,
            phi_bar,
        })
    }

    /// Defaults on the bare disk: `β = 1`, `φ̄ = 7π/4`.
    pub fn disk_default() -> Self {
        Self {
            alpha: DEFAULT_ALPHA,
            beta: 1.0,
            eta: DEFAULT_ETA,
            phi_bar: 7.0 * PI / 4.0,
        }
    }

    pub fn shifts(&self) -> Result<(RadialShift, AngularShift)> {
        Ok((
            RadialShift::new(self.beta, self.alpha)?,
            AngularShift::new(self.phi_bar, self.eta)?,
        ))
    }
}
