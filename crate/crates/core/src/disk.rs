//! Tensor-product rational interpolant on the radius-2 disk, i.e. on the box
//! `[0, 2] × [0, 2π)` in polar coordinates.
//!
//! Radial direction: Chebyshev points of the second kind on `[0, 2]`, optionally
//! moved by a [`RadialShift`]. Angular direction: equispaced points, optionally
//! moved by an [`AngularShift`]. The interpolant is evaluated in physical
//! coordinates with the plain alternating weights, so shifted grids never need
//! the inverse maps.

use rayon::prelude::*;

use crate::bary::{dominant_index, quotient_with, CompensatedSum, NodeSet1D, PeriodicNodeSet};
use crate::conformal::{AngularShift, RadialShift};
use crate::error::{invalid, Error, Result};

/// Radial interval of the disk.
pub const RADIAL_INTERVAL: (f64, f64) = (0.0, 2.0);

/// Physical node sets plus the sampled values, radial index major:
/// `values[i * n_angular + j] = f(y_i, φ_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorGrid {
    radial: NodeSet1D,
    angular: PeriodicNodeSet,
    values: Vec<f64>,
}

impl TensorGrid {
    pub fn new(radial: NodeSet1D, angular: PeriodicNodeSet, values: Vec<f64>) -> Result<Self> {
        if radial.interval() != RADIAL_INTERVAL {
            return Err(invalid("radial nodes must live on [0, 2]"));
        }
        let (nr, na) = (radial.len(), angular.len());
        if values.len() != nr * na {
            return Err(invalid(format!(
                "value matrix has {} entries, expected {nr} x {na}",
                values.len()
            )));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Sampling {
                i: k / na,
                j: k % na,
                value: values[k],
            });
        }
        // every angular sample on the centre row refers to the same point
        if radial.nodes()[0] == 0.0 && values[..na].iter().any(|&v| v != values[0]) {
            return Err(invalid(
                "samples at the disk centre differ between angular nodes",
            ));
        }
        Ok(Self {
            radial,
            angular,
            values,
        })
    }

    pub fn radial(&self) -> &NodeSet1D {
        &self.radial
    }

    pub fn angular(&self) -> &PeriodicNodeSet {
        &self.angular
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(radial node count, angular node count)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.radial.len(), self.angular.len())
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.angular.len() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let na = self.angular.len();
        &self.values[i * na..(i + 1) * na]
    }
}

/// Builds shifted or unshifted disk grids and samples a function on them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskBuilder {
    n1: usize,
    n2: usize,
    radial_shift: Option<RadialShift>,
    angular_shift: Option<AngularShift>,
}

impl DiskBuilder {
    /// `n1 + 1` radial and `n2` angular nodes.
    pub fn new(n1: usize, n2: usize) -> Result<Self> {
        if n1 < 2 {
            return Err(invalid(format!(
                "n1 = {n1}: need at least 2 radial intervals"
            )));
        }
        if n2 < 3 {
            return Err(invalid(format!("n2 = {n2}: need at least 3 angular nodes")));
        }
        Ok(Self {
            n1,
            n2,
            radial_shift: None,
            angular_shift: None,
        })
    }

    pub fn radial_shift(mut self, shift: Option<RadialShift>) -> Self {
        self.radial_shift = shift;
        self
    }

    pub fn angular_shift(mut self, shift: Option<AngularShift>) -> Self {
        self.angular_shift = shift;
        self
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// Physical nodes `y_i = g1(r_i)` and `φ_j = g2(θ_j)`.
    pub fn node_sets(&self) -> Result<(NodeSet1D, PeriodicNodeSet)> {
        let cheb = NodeSet1D::chebyshev(self.n1, RADIAL_INTERVAL)?;
        let radial = match &self.radial_shift {
            None => cheb,
            Some(g) => {
                let ys = cheb
                    .nodes()
                    .iter()
                    .map(|&r| g.apply(r))
                    .collect::<Result<Vec<_>>>()?;
                NodeSet1D::with_berrut_weights(ys, RADIAL_INTERVAL)?
            }
        };
        let equi = PeriodicNodeSet::equispaced(self.n2)?;
        let angular = match &self.angular_shift {
            None => equi,
            Some(g) => {
                let lifted: Vec<f64> = equi.nodes().iter().map(|&t| g.lift(t)).collect();
                PeriodicNodeSet::from_lifted(&lifted)?
            }
        };
        Ok((radial, angular))
    }

    /// Samples `f(r, θ)` on the grid, rows in parallel. The centre is sampled
    /// once and broadcast along its row.
    pub fn sample<F>(&self, f: F) -> Result<DiskInterpolant>
    where
        F: Fn(f64, f64) -> f64 + Sync,
    {
        let (radial, angular) = self.node_sets()?;
        let rows: Vec<Vec<f64>> = radial
            .nodes()
            .par_iter()
            .map(|&r| sample_row(r, angular.nodes(), &f))
            .collect();
        let values = rows.concat();
        TensorGrid::new(radial, angular, values).map(DiskInterpolant::from_grid)
    }

    /// Same as [`sample`](Self::sample) but calls `f` from the current thread
    /// only, in row-major order.
    pub fn sample_sequential<F>(&self, mut f: F) -> Result<DiskInterpolant>
    where
        F: FnMut(f64, f64) -> f64,
    {
        let (radial, angular) = self.node_sets()?;
        let mut values = Vec::with_capacity(radial.len() * angular.len());
        for &r in radial.nodes() {
            values.extend(sample_row(r, angular.nodes(), &mut f));
        }
        TensorGrid::new(radial, angular, values).map(DiskInterpolant::from_grid)
    }
}

fn sample_row(r: f64, thetas: &[f64], mut f: impl FnMut(f64, f64) -> f64) -> Vec<f64> {
    if r == 0.0 {
        let centre = f(0.0, thetas[0]);
        vec![centre; thetas.len()]
    } else {
        thetas.iter().map(|&t| f(r, t)).collect()
    }
}

/// Convenience wrapper around [`DiskBuilder`].
pub fn build_disk_interpolant<F>(
    n1: usize,
    n2: usize,
    radial_shift: Option<RadialShift>,
    angular_shift: Option<AngularShift>,
    f: F,
) -> Result<DiskInterpolant>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    DiskBuilder::new(n1, n2)?
        .radial_shift(radial_shift)
        .angular_shift(angular_shift)
        .sample(f)
}

/// Tensor-product interpolant on the disk.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskInterpolant {
    grid: TensorGrid,
}

impl DiskInterpolant {
    pub fn from_grid(grid: TensorGrid) -> Self {
        Self { grid }
    }

    pub fn grid(&self) -> &TensorGrid {
        &self.grid
    }

    /// Evaluates at polar coordinates `(r, θ)`, `r` in `[0, 2]`.
    ///
    /// One pass over the value matrix: the angular kernel vector is computed
    /// once and contracted against each row. Points on a node circle or ray
    /// fall back to the exact one-dimensional interpolant along it.
    pub fn eval(&self, r: f64, theta: f64) -> Result<f64> {
        let g = &self.grid;
        g.radial.check_point(r)?;
        if !theta.is_finite() {
            return Err(invalid("angle must be finite"));
        }
        let (nr, na) = g.dims();
        let mut a = vec![0.0; nr];
        let mut b = vec![0.0; na];
        let hit_r = g.radial.kernel(r, &mut a);
        let hit_t = g.angular.kernel(theta, &mut b);
        Ok(match (hit_r, hit_t) {
            (Some(i), Some(j)) => g.value(i, j),
            (Some(i), None) => quotient_with(&b, |j| g.row(i)[j]),
            (None, Some(j)) => quotient_with(&a, |i| g.value(i, j)),
            (None, None) => {
                let f_ref = g.value(dominant_index(&a), dominant_index(&b));
                let mut num = CompensatedSum::default();
                for (i, &ai) in a.iter().enumerate() {
                    let mut inner = CompensatedSum::default();
                    for (&bj, &v) in b.iter().zip(g.row(i)) {
                        inner.add(bj * (v - f_ref));
                    }
                    num.add(ai * inner.value());
                }
                let mut den_r = CompensatedSum::default();
                a.iter().for_each(|&x| den_r.add(x));
                let mut den_t = CompensatedSum::default();
                b.iter().for_each(|&x| den_t.add(x));
                f_ref + num.value() / (den_r.value() * den_t.value())
            }
        })
    }

    pub fn lebesgue_estimate(&self, m1: usize, m2: usize) -> Result<f64> {
        lebesgue_estimate(&self.grid, m1, m2)
    }
}

/// How [`lebesgue_estimate_with`] scans the evaluation lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LebesgueScan {
    /// Product of the two one-dimensional maxima.
    #[default]
    Product,
    /// Sum of all `|B_ij|` at every lattice point; for cross-checking.
    Full,
}

/// Cell-centred lattice: `m1` radii in `(0, 2)` and `m2` angles in `(0, 2π)`.
pub fn lebesgue_lattice(m1: usize, m2: usize) -> (Vec<f64>, Vec<f64>) {
    let rs = (0..m1)
        .map(|k| 2.0 * (k as f64 + 0.5) / m1 as f64)
        .collect();
    let ts = (0..m2)
        .map(|l| std::f64::consts::TAU * (l as f64 + 0.5) / m2 as f64)
        .collect();
    (rs, ts)
}

/// Estimate of the Lebesgue constant on an `m1 × m2` lattice.
pub fn lebesgue_estimate(grid: &TensorGrid, m1: usize, m2: usize) -> Result<f64> {
    lebesgue_estimate_with(grid, m1, m2, LebesgueScan::Product)
}

pub fn lebesgue_estimate_with(
    grid: &TensorGrid,
    m1: usize,
    m2: usize,
    scan: LebesgueScan,
) -> Result<f64> {
    if m1 == 0 || m2 == 0 {
        return Err(invalid("Lebesgue lattice needs m1, m2 >= 1"));
    }
    let (rs, ts) = lebesgue_lattice(m1, m2);
    Ok(match scan {
        LebesgueScan::Product => {
            let radial = rs
                .par_iter()
                .map(|&r| grid.radial.lebesgue_function(r))
                .reduce(|| 0.0, f64::max);
            let angular = ts
                .par_iter()
                .map(|&t| grid.angular.lebesgue_function(t))
                .reduce(|| 0.0, f64::max);
            radial * angular
        }
        LebesgueScan::Full => rs
            .par_iter()
            .map(|&r| {
                ts.iter()
                    .map(|&t| basis_abs_sum(grid, r, t))
                    .fold(0.0, f64::max)
            })
            .reduce(|| 0.0, f64::max),
    })
}

/// `Σ_ij |b_i(r) b_j(θ)|` by the double sum.
pub(crate) fn basis_abs_sum(grid: &TensorGrid, r: f64, theta: f64) -> f64 {
    let (nr, na) = grid.dims();
    let mut a = vec![0.0; nr];
    let mut b = vec![0.0; na];
    // on a node line the basis collapses to the other direction's basis
    let a_basis: Vec<f64> = match grid.radial.kernel(r, &mut a) {
        Some(i) => (0..nr).map(|k| if k == i { 1.0 } else { 0.0 }).collect(),
        None => {
            let s: f64 = a.iter().sum();
            a.iter().map(|x| x / s).collect()
        }
    };
    let b_basis: Vec<f64> = match grid.angular.kernel(theta, &mut b) {
        Some(j) => (0..na).map(|k| if k == j { 1.0 } else { 0.0 }).collect(),
        None => {
            let s: f64 = b.iter().sum();
            b.iter().map(|x| x / s).collect()
        }
    };
    let mut total = CompensatedSum::default();
    for ai in &a_basis {
        for bj in &b_basis {
            total.add((ai * bj).abs());
        }
    }
    total.value()
}
