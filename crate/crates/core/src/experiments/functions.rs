//! Test functions for the convergence experiments.

use std::fmt;
use std::str::FromStr;

use super::erf::erf;
use crate::error::{invalid, Error};

/// `3 e^{-x² + y + 1} + 3`: entire, needs no point shifts.
pub fn f1(x: f64, y: f64) -> f64 {
    3.0 * (-x * x + y + 1.0).exp() + 3.0
}

const F2_EPS: f64 = 100.0;

/// Steep error-function front along `x = -0.6`, damped by a Gaussian centred
/// at `(-0.6, 0.6)`.
pub fn f2_printed(x: f64, y: f64) -> f64 {
    let s = (F2_EPS / 2.0).sqrt();
    let u = x + 0.6;
    let v = y - 0.6;
    40.0 * erf(s * u) / erf(s) * (-30.0 * u * u).exp() * (-60.0 * v * v).exp()
}

/// [`f2_printed`] reflected through the origin: front at `(0.6, -0.6)`,
/// i.e. radius `0.6√2` at angle `7π/4`.
pub fn f2(x: f64, y: f64) -> f64 {
    f2_printed(-x, -y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestFunction {
    F1,
    F2,
    F2Printed,
}

impl TestFunction {
    pub const ALL: [TestFunction; 3] =
        [TestFunction::F1, TestFunction::F2, TestFunction::F2Printed];

    pub fn name(self) -> &'static str {
        match self {
            TestFunction::F1 => "f1",
            TestFunction::F2 => "f2",
            TestFunction::F2Printed => "f2-printed",
        }
    }

    pub fn eval(self, x: f64, y: f64) -> f64 {
        match self {
            TestFunction::F1 => f1(x, y),
            TestFunction::F2 => f2(x, y),
            TestFunction::F2Printed => f2_printed(x, y),
        }
    }

    /// Cartesian location of the steep front, if any.
    pub fn front(self) -> Option<(f64, f64)> {
        match self {
            TestFunction::F1 => None,
            TestFunction::F2 => Some((0.6, -0.6)),
            TestFunction::F2Printed => Some((-0.6, 0.6)),
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|t| t.name()).collect();
                invalid(format!(
                    "unknown function {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}
