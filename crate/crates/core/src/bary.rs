//! One-dimensional barycentric kernels.
//!
//! Two families live here: the algebraic (radial) interpolant in second
//! barycentric form with weights `(-1)^i δ_i`, which is the polynomial
//! interpolant at Chebyshev points of the second kind and Berrut's rational
//! interpolant at any other (e.g. conformally shifted) node set, and the
//! trigonometric (angular) interpolant with kernel `cst((θ - θ_j) / 2)`, which
//! is the balanced trigonometric polynomial at equispaced nodes.
//!
//! Both evaluators are read-only and return the stored datum bit-exactly when
//! the evaluation point collides with a node.

use std::f64::consts::{PI, TAU};

use crate::error::{invalid, Error, Result};

/// Unit roundoff of `f64`.
pub const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// Collision guard, in units of the unit roundoff.
const COLLISION_FACTOR: f64 = 4.0;

/// Reduces an angle to `[0, 2π)` with one remainder operation.
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid rounds tiny negative inputs up to exactly 2π
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Two-sum accumulator: the running sum plus the exact rounding error of every
/// addition, folded back in at the end.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    hi: f64,
    lo: f64,
}

impl CompensatedSum {
    #[inline]
    pub(crate) fn add(&mut self, x: f64) {
        let s = self.hi + x;
        let bp = s - self.hi;
        self.lo += (self.hi - (s - bp)) + (x - bp);
        self.hi = s;
    }

    #[inline]
    pub(crate) fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// Index of the largest kernel entry in magnitude (first one on ties).
#[inline]
pub(crate) fn dominant_index(kernel: &[f64]) -> usize {
    let mut best = 0;
    let mut best_abs = f64::NEG_INFINITY;
    for (i, k) in kernel.iter().enumerate() {
        let a = k.abs();
        if a > best_abs {
            best = i;
            best_abs = a;
        }
    }
    best
}

/// Barycentric quotient `Σ k_i f_i / Σ k_i` for a precomputed kernel vector.
///
/// The data are centred on the value at the dominant node before summing, so
/// `f_ref + Σ k_i (f_i - f_ref) / Σ k_i` is evaluated instead. The two are
/// equal in exact arithmetic; the centred form reproduces constants exactly and
/// does not depend on the order of the terms through the choice of `f_ref`.
pub fn barycentric_quotient(kernel: &[f64], values: &[f64]) -> f64 {
    debug_assert_eq!(kernel.len(), values.len());
    quotient_with(kernel, |i| values[i])
}

#[inline]
pub(crate) fn quotient_with(kernel: &[f64], value: impl Fn(usize) -> f64) -> f64 {
    let f_ref = value(dominant_index(kernel));
    let mut num = CompensatedSum::default();
    let mut den = CompensatedSum::default();
    for (i, &k) in kernel.iter().enumerate() {
        num.add(k * (value(i) - f_ref));
        den.add(k);
    }
    f_ref + num.value() / den.value()
}

/// Lebesgue-function value `Σ |k_i| / |Σ k_i|` for a kernel vector.
pub(crate) fn lebesgue_sum(kernel: &[f64]) -> f64 {
    let mut abs = CompensatedSum::default();
    let mut den = CompensatedSum::default();
    for &k in kernel {
        abs.add(k.abs());
        den.add(k);
    }
    abs.value() / den.value().abs()
}

/// `(-1)^i δ_i` with `δ` halved at both ends.
fn berrut_weights(len: usize) -> Vec<f64> {
    (0..len)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            if i == 0 || i + 1 == len {
                0.5 * sign
            } else {
                sign
            }
        })
        .collect()
}

fn check_interval((a, b): (f64, f64)) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(invalid(format!("interval [{a}, {b}] must satisfy a < b")));
    }
    Ok(())
}

/// Radial node set: strictly increasing nodes in `[a, b]` with alternating
/// barycentric weights.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet1D {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    interval: (f64, f64),
}

impl NodeSet1D {
    /// `n + 1` Chebyshev points of the second kind on `interval`, endpoints
    /// included, with weights `(-1)^i δ_i`.
    pub fn chebyshev(n: usize, interval: (f64, f64)) -> Result<Self> {
        if n == 0 {
            return Err(invalid("Chebyshev node count n must be at least 1"));
        }
        check_interval(interval)?;
        let (a, b) = interval;
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        // sin form: -cos(iπ/n) == sin(π(2i - n) / 2n), symmetric about the midpoint
        let nodes = (0..=n)
            .map(|i| match i {
                0 => a,
                _ if i == n => b,
                _ => mid + half * (PI * (2 * i) as f64 / (2 * n) as f64 - PI / 2.0).sin(),
            })
            .collect();
        Self::from_parts(nodes, berrut_weights(n + 1), interval)
    }

    /// Arbitrary strictly increasing nodes with Berrut weights `(-1)^i δ_i`.
    /// With conformally shifted Chebyshev nodes this is the shifted radial
    /// interpolant evaluated in physical coordinates.
    pub fn with_berrut_weights(nodes: Vec<f64>, interval: (f64, f64)) -> Result<Self> {
        let weights = berrut_weights(nodes.len());
        Self::from_parts(nodes, weights, interval)
    }

    pub fn from_parts(nodes: Vec<f64>, weights: Vec<f64>, interval: (f64, f64)) -> Result<Self> {
        check_interval(interval)?;
        if nodes.is_empty() {
            return Err(invalid("node set is empty"));
        }
        if nodes.len() != weights.len() {
            return Err(invalid(format!(
                "{} nodes but {} weights",
                nodes.len(),
                weights.len()
            )));
        }
        let (a, b) = interval;
        if nodes.iter().any(|x| !(a..=b).contains(x)) {
            return Err(invalid(format!("nodes must lie in [{a}, {b}]")));
        }
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("nodes must be strictly increasing"));
        }
        if weights.iter().any(|w| !w.is_finite()) || weights.windows(2).any(|w| w[0] * w[1] >= 0.0)
        {
            return Err(invalid("weights must be finite and alternate in sign"));
        }
        Ok(Self {
            nodes,
            weights,
            interval,
        })
    }

    /// Same nodes with every weight multiplied by the matching `η_i`.
    pub fn with_eta(&self, eta: &EtaWeights) -> Result<Self> {
        if eta.0.len() != self.nodes.len() {
            return Err(invalid("eta length does not match node count"));
        }
        let weights = self
            .weights
            .iter()
            .zip(&eta.0)
            .map(|(w, e)| w * e)
            .collect();
        Self::from_parts(self.nodes.clone(), weights, self.interval)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Absolute distance under which `x` is treated as sitting on a node.
    pub fn collision_tolerance(&self) -> f64 {
        let (a, b) = self.interval;
        COLLISION_FACTOR * UNIT_ROUNDOFF * a.abs().max(b.abs())
    }

    /// Fills `out` with `w_i / (x - x_i)`. Returns the colliding node index
    /// instead when `x` sits on a node, leaving `out` partially written.
    pub fn kernel(&self, x: f64, out: &mut [f64]) -> Option<usize> {
        debug_assert_eq!(out.len(), self.nodes.len());
        let tol = self.collision_tolerance();
        for (i, ((&xi, &wi), o)) in self
            .nodes
            .iter()
            .zip(&self.weights)
            .zip(out.iter_mut())
            .enumerate()
        {
            let d = x - xi;
            if d.abs() <= tol {
                return Some(i);
            }
            *o = wi / d;
        }
        None
    }

    pub(crate) fn check_point(&self, x: f64) -> Result<()> {
        let (lo, hi) = self.interval;
        if x.is_nan() || x < lo || x > hi {
            return Err(Error::Domain { value: x, lo, hi });
        }
        Ok(())
    }

    /// Evaluates the interpolant through `values` at `x`.
    pub fn eval(&self, values: &[f64], x: f64) -> Result<f64> {
        if values.len() != self.nodes.len() {
            return Err(invalid(format!(
                "{} values for {} nodes",
                values.len(),
                self.nodes.len()
            )));
        }
        self.check_point(x)?;
        let mut k = vec![0.0; self.nodes.len()];
        Ok(match self.kernel(x, &mut k) {
            Some(i) => values[i],
            None => barycentric_quotient(&k, values),
        })
    }

    /// Lebesgue function `Σ |b_i(x)|`; equals 1 on the nodes.
    pub fn lebesgue_function(&self, x: f64) -> f64 {
        let mut k = vec![0.0; self.nodes.len()];
        match self.kernel(x, &mut k) {
            Some(_) => 1.0,
            None => lebesgue_sum(&k),
        }
    }
}

/// Chebyshev points of the second kind on `interval`; see [`NodeSet1D::chebyshev`].
pub fn chebyshev_nodes(n: usize, interval: (f64, f64)) -> Result<NodeSet1D> {
    NodeSet1D::chebyshev(n, interval)
}

/// Radial weight factors `η_i` on `[0, 2]`, selected by which endpoints are nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaWeights(Vec<f64>);

impl EtaWeights {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// Computes `η_i` for radial nodes on `[0, 2]`. `has_zero` / `has_two` state
/// whether 0 and 2 belong to the node set and must agree with the nodes.
pub fn radial_eta_weights(nodes: &NodeSet1D, has_zero: bool, has_two: bool) -> Result<EtaWeights> {
    let xs = nodes.nodes();
    if xs.iter().any(|x| !(0.0..=2.0).contains(x)) {
        return Err(invalid("radial nodes must lie in [0, 2]"));
    }
    if has_zero != (xs[0] == 0.0) || has_two != (xs[xs.len() - 1] == 2.0) {
        return Err(invalid("endpoint flags disagree with the node set"));
    }
    let eta = xs
        .iter()
        .map(|&x| {
            let t = (x - 1.0) * (x - 1.0);
            match (has_zero, has_two) {
                (false, false) => (1.0 - t).sqrt(),
                (false, true) => ((1.0 + t) / 2.0).sqrt(),
                (true, false) => ((1.0 - t) / 2.0).sqrt(),
                (true, true) => 1.0,
            }
        })
        .collect();
    Ok(EtaWeights(eta))
}

/// Which kernel the trigonometric interpolant uses; fixed by node-count parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CstKind {
    /// `csc`, odd node count.
    Cosecant,
    /// `cot`, even node count.
    Cotangent,
}

impl CstKind {
    pub fn for_count(n: usize) -> Self {
        if n % 2 == 1 {
            CstKind::Cosecant
        } else {
            CstKind::Cotangent
        }
    }
}

/// `csc(u)` or `cot(u)`. Reports [`Error::NodeCollision`] when `|sin u|` is
/// within the collision guard.
pub fn cst(u: f64, kind: CstKind) -> Result<f64> {
    let s = u.sin();
    if s.abs() <= COLLISION_FACTOR * UNIT_ROUNDOFF {
        return Err(Error::NodeCollision);
    }
    Ok(match kind {
        CstKind::Cosecant => 1.0 / s,
        CstKind::Cotangent => u.cos() / s,
    })
}

/// Angular node set on `[0, 2π)` with its sign weights.
///
/// For plain node lists the signs are `(-1)^j`. Node lists produced by a circle
/// map are reduced into `[0, 2π)` and sorted; a node moved by an odd multiple
/// of 2π flips its sign in the cosecant case because `csc(u + π) = -csc(u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicNodeSet {
    nodes: Vec<f64>,
    signs: Vec<f64>,
    kind: CstKind,
}

impl PeriodicNodeSet {
    /// `θ_j = 2πj / n`, `j = 0..n`.
    pub fn equispaced(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid("equispaced angular nodes need n >= 2"));
        }
        let nodes = (0..n).map(|j| TAU * j as f64 / n as f64).collect();
        Self::from_sorted(nodes)
    }

    /// Strictly increasing nodes in `[0, 2π)` with signs `(-1)^j`.
    pub fn from_sorted(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(invalid("angular node set needs at least 2 nodes"));
        }
        if nodes.iter().any(|t| !(0.0..TAU).contains(t)) {
            return Err(invalid("angular nodes must lie in [0, 2π)"));
        }
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("angular nodes must be strictly increasing"));
        }
        let signs = (0..nodes.len())
            .map(|j| if j % 2 == 0 { 1.0 } else { -1.0 })
            .collect();
        let kind = CstKind::for_count(nodes.len());
        Ok(Self { nodes, signs, kind })
    }

    /// Nodes given on the lifted circle: strictly increasing reals spanning
    /// less than one period, e.g. the images of equispaced nodes under a
    /// circle diffeomorphism.
    pub fn from_lifted(lifted: &[f64]) -> Result<Self> {
        let n = lifted.len();
        if n < 2 {
            return Err(invalid("angular node set needs at least 2 nodes"));
        }
        if lifted.iter().any(|t| !t.is_finite()) || lifted.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid(
                "lifted angular nodes must be finite and strictly increasing",
            ));
        }
        if lifted[n - 1] - lifted[0] >= TAU {
            return Err(invalid("lifted angular nodes must span less than 2π"));
        }
        let kind = CstKind::for_count(n);
        let mut pairs: Vec<(f64, f64)> = lifted
            .iter()
            .enumerate()
            .map(|(j, &t)| {
                let reduced = wrap_angle(t);
                let wraps = ((t - reduced) / TAU).round() as i64;
                let mut sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                if kind == CstKind::Cosecant && wraps.rem_euclid(2) == 1 {
                    sign = -sign;
                }
                (reduced, sign)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(invalid("angular nodes coincide after reduction to [0, 2π)"));
        }
        let (nodes, signs) = pairs.into_iter().unzip();
        Ok(Self { nodes, signs, kind })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn signs(&self) -> &[f64] {
        &self.signs
    }

    pub fn kind(&self) -> CstKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Fills `out` with `s_j cst((θ - θ_j) / 2)`; returns the colliding node
    /// index instead when `θ` sits on a node.
    pub fn kernel(&self, theta: f64, out: &mut [f64]) -> Option<usize> {
        debug_assert_eq!(out.len(), self.nodes.len());
        let t = wrap_angle(theta);
        let tol = COLLISION_FACTOR * UNIT_ROUNDOFF;
        for (j, ((&tj, &sj), o)) in self
            .nodes
            .iter()
            .zip(&self.signs)
            .zip(out.iter_mut())
            .enumerate()
        {
            let u = 0.5 * (t - tj);
            let s = u.sin();
            if s.abs() <= tol {
                return Some(j);
            }
            *o = match self.kind {
                CstKind::Cosecant => sj / s,
                CstKind::Cotangent => sj * u.cos() / s,
            };
        }
        None
    }

    /// Evaluates the trigonometric interpolant through `values` at `theta`
    /// (taken modulo 2π).
    pub fn eval(&self, values: &[f64], theta: f64) -> Result<f64> {
        if values.len() != self.nodes.len() {
            return Err(invalid(format!(
                "{} values for {} angular nodes",
                values.len(),
                self.nodes.len()
            )));
        }
        if !theta.is_finite() {
            return Err(invalid("angle must be finite"));
        }
        let mut k = vec![0.0; self.nodes.len()];
        Ok(match self.kernel(theta, &mut k) {
            Some(j) => values[j],
            None => barycentric_quotient(&k, values),
        })
    }

    pub fn lebesgue_function(&self, theta: f64) -> f64 {
        let mut k = vec![0.0; self.nodes.len()];
        match self.kernel(theta, &mut k) {
            Some(_) => 1.0,
            None => lebesgue_sum(&k),
        }
    }
}

/// Equispaced angular nodes; see [`PeriodicNodeSet::equispaced`].
pub fn equispaced_nodes(n: usize) -> Result<PeriodicNodeSet> {
    PeriodicNodeSet::equispaced(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lagrange(nodes: &[f64], values: &[f64], x: f64) -> f64 {
        (0..nodes.len())
            .map(|i| {
                let li: f64 = (0..nodes.len())
                    .filter(|&j| j != i)
                    .map(|j| (x - nodes[j]) / (nodes[i] - nodes[j]))
                    .product();
                values[i] * li
            })
            .sum()
    }

    #[test]
    fn chebyshev_two_intervals() {
        let ns = chebyshev_nodes(2, (0.0, 2.0)).unwrap();
        assert_eq!(ns.nodes(), &[0.0, 1.0, 2.0]);
        assert_eq!(ns.weights(), &[0.5, -1.0, 0.5]);
    }

    #[test]
    fn chebyshev_four_intervals_second_node() {
        // 1 - cos(π/4), high-precision value
        let ns = chebyshev_nodes(4, (0.0, 2.0)).unwrap();
        assert!((ns.nodes()[1] - 0.292_893_218_813_452_5).abs() < 1e-15);
        assert_eq!(ns.weights(), &[0.5, -1.0, 1.0, -1.0, 0.5]);
    }

    #[test]
    fn chebyshev_general_interval_hits_endpoints() {
        let ns = chebyshev_nodes(7, (-3.0, 5.0)).unwrap();
        assert_eq!(ns.nodes()[0], -3.0);
        assert_eq!(ns.nodes()[7], 5.0);
        assert!(ns.nodes().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn chebyshev_rejects_bad_input() {
        assert!(matches!(
            chebyshev_nodes(0, (0.0, 2.0)),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            chebyshev_nodes(3, (2.0, 2.0)),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            chebyshev_nodes(3, (2.0, 0.0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn eta_cases() {
        let both = chebyshev_nodes(5, (0.0, 2.0)).unwrap();
        let eta = radial_eta_weights(&both, true, true).unwrap();
        assert!(eta.as_slice().iter().all(|&e| e == 1.0));

        let mid = NodeSet1D::with_berrut_weights(vec![0.5, 1.0, 1.5], (0.0, 2.0)).unwrap();
        let eta = radial_eta_weights(&mid, false, false).unwrap();
        assert_eq!(eta.as_slice()[1], 1.0);

        let right = NodeSet1D::with_berrut_weights(vec![0.5, 1.0, 2.0], (0.0, 2.0)).unwrap();
        let eta = radial_eta_weights(&right, false, true).unwrap();
        assert_eq!(eta.as_slice()[2], 1.0);

        assert!(radial_eta_weights(&right, true, true).is_err());
        let scaled = mid
            .with_eta(&radial_eta_weights(&mid, false, false).unwrap())
            .unwrap();
        assert_eq!(scaled.weights()[1], -1.0);
    }

    #[test]
    fn eta_rejects_nodes_outside_radial_interval() {
        let wide = NodeSet1D::with_berrut_weights(vec![-1.0, 0.5, 3.0], (-1.0, 3.0)).unwrap();
        assert!(matches!(
            radial_eta_weights(&wide, false, false),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn rational_eval_examples() {
        let ns = chebyshev_nodes(2, (0.0, 2.0)).unwrap();
        let sq: Vec<f64> = ns.nodes().iter().map(|x| x * x).collect();
        let v = ns.eval(&sq, 0.5).unwrap();
        assert!((v - lagrange(ns.nodes(), &sq, 0.5)).abs() < 1e-15);
        assert!((v - 0.25).abs() < 1e-15);

        assert_eq!(ns.eval(&[3.5; 3], 1.37).unwrap(), 3.5);
        assert_eq!(ns.eval(&sq, 1.0).unwrap(), sq[1]);
    }

    #[test]
    fn rational_eval_errors() {
        let ns = chebyshev_nodes(3, (0.0, 2.0)).unwrap();
        assert!(matches!(
            ns.eval(&[1.0, 2.0], 0.3),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            ns.eval(&[1.0; 4], 2.0 + 1e-12),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            ns.eval(&[1.0; 4], -0.1),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            ns.eval(&[1.0; 4], f64::NAN),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn collision_uses_tight_absolute_guard() {
        let ns = chebyshev_nodes(2, (0.0, 2.0)).unwrap();
        let vals = [1.0, 5.0, 2.0];
        // within 4u·2 of the node: datum returned
        assert_eq!(ns.eval(&vals, 1.0 + 4.0 * UNIT_ROUNDOFF).unwrap(), 5.0);
        // a few ulps further out: the quotient itself, still close to the datum
        let near = ns.eval(&vals, 1.0 + 1e-14).unwrap();
        assert!((near - 5.0).abs() < 1e-12);
    }

    #[test]
    fn equispaced_examples() {
        let four = equispaced_nodes(4).unwrap();
        assert_eq!(four.kind(), CstKind::Cotangent);
        let expect = [0.0, PI / 2.0, PI, 3.0 * PI / 2.0];
        for (a, b) in four.nodes().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        let three = equispaced_nodes(3).unwrap();
        assert_eq!(three.kind(), CstKind::Cosecant);
        assert!((three.nodes()[2] - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!(matches!(
            equispaced_nodes(1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn cst_examples() {
        assert!(cst(PI / 2.0, CstKind::Cotangent).unwrap().abs() < 1e-16);
        assert!((cst(PI / 2.0, CstKind::Cosecant).unwrap() - 1.0).abs() < 1e-16);
        assert!((cst(PI / 6.0, CstKind::Cosecant).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(cst(0.0, CstKind::Cotangent), Err(Error::NodeCollision));
        assert_eq!(cst(PI, CstKind::Cosecant), Err(Error::NodeCollision));
    }

    #[test]
    fn trig_eval_examples() {
        let ns = equispaced_nodes(4).unwrap();
        let c: Vec<f64> = ns.nodes().iter().map(|t| t.cos()).collect();
        assert!((ns.eval(&c, PI / 3.0).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(ns.eval(&[-2.0; 4], 0.4).unwrap(), -2.0);
        assert_eq!(ns.eval(&c, PI).unwrap(), c[2]);
        // modulo 2π
        assert_eq!(ns.eval(&c, PI + TAU).unwrap(), c[2]);
        assert!(matches!(
            ns.eval(&[1.0; 3], 0.1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn lifted_nodes_keep_sign_alternation() {
        for n in [5usize, 6] {
            let lifted: Vec<f64> = (0..n).map(|j| -1.0 + TAU * j as f64 / n as f64).collect();
            let set = PeriodicNodeSet::from_lifted(&lifted).unwrap();
            assert!(set.nodes().windows(2).all(|w| w[0] < w[1]));
            assert!(set.signs().windows(2).all(|w| w[0] * w[1] < 0.0));
            // a rigid rotation of equispaced nodes interpolates like the original set
            let f = |t: f64| (t + 0.3).sin() + 0.2 * (2.0 * t).cos();
            let vals: Vec<f64> = set.nodes().iter().map(|&t| f(t)).collect();
            let direct: Vec<f64> = lifted.iter().map(|&t| f(t)).collect();
            let rotated = |theta: f64| {
                let mut k = vec![0.0; n];
                for (j, &t) in lifted.iter().enumerate() {
                    let u = 0.5 * (theta - t);
                    let s = if j % 2 == 0 { 1.0 } else { -1.0 };
                    k[j] = if n % 2 == 1 {
                        s / u.sin()
                    } else {
                        s * u.cos() / u.sin()
                    };
                }
                barycentric_quotient(&k, &direct)
            };
            for theta in [0.1, 1.7, 3.3, 5.9] {
                assert!((set.eval(&vals, theta).unwrap() - rotated(theta)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn wrap_angle_stays_below_two_pi() {
        assert_eq!(wrap_angle(-1e-18), 0.0);
        assert_eq!(wrap_angle(TAU), 0.0);
        assert!((wrap_angle(-PI / 2.0) - 1.5 * PI).abs() < 1e-15);
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let mut s = CompensatedSum::default();
        for x in [1e16, 1.0, -1e16, 1.0] {
            s.add(x);
        }
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn lebesgue_two_node_interpolant_is_one() {
        let ns = chebyshev_nodes(1, (0.0, 2.0)).unwrap();
        for x in [0.1, 0.7, 1.0, 1.9] {
            assert!((ns.lebesgue_function(x) - 1.0).abs() < 1e-14);
        }
    }
}
