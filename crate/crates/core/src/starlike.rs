//! Starlike domains `{(ξ cos φ, ξ sin φ) : 0 ≤ ξ ≤ ρ(φ)}` and interpolation on
//! them through the radial transplant `S(ξ, φ) = (2ξ / ρ(φ), φ)` onto the
//! radius-2 disk.

use std::f64::consts::TAU;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::bary::{wrap_angle, PeriodicNodeSet};
use crate::conformal::{AngularShift, RadialShift};
use crate::disk::{lebesgue_lattice, DiskBuilder, DiskInterpolant};
use crate::error::{invalid, Error, Result};

/// Number of equispaced angles used to validate a boundary.
pub const SCAN_POINTS: usize = 4096;

/// Relative slack for points on the boundary.
pub const BOUNDARY_SLACK: f64 = 1e-12;

const PERIODICITY_TOL: f64 = 1e-9;

/// Max second difference over mean second difference above which ρ is
/// reported as rough.
const ROUGHNESS_RATIO: f64 = 100.0;

/// Cartesian evaluation points this close to a node ray or circle are moved
/// onto it, so that node coordinates reproduce their samples exactly despite
/// the roundoff of `atan2` and `hypot`.
const SNAP_TOL: f64 = 16.0 * f64::EPSILON;

type RhoFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Boundary {
    Closed(RhoFn),
    Smoothed {
        nodes: PeriodicNodeSet,
        rhos: Vec<f64>,
    },
}

/// A domain starlike with respect to the origin, given by its boundary radius.
#[derive(Clone)]
pub struct StarlikeDomain {
    boundary: Boundary,
    rho_min: f64,
    rho_max: f64,
    rough: bool,
}

impl fmt::Debug for StarlikeDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.boundary {
            Boundary::Closed(_) => "closed-form".to_string(),
            Boundary::Smoothed { rhos, .. } => format!("{} samples", rhos.len()),
        };
        f.debug_struct("StarlikeDomain")
            .field("boundary", &kind)
            .field("rho_min", &self.rho_min)
            .field("rho_max", &self.rho_max)
            .field("rough", &self.rough)
            .finish()
    }
}

impl StarlikeDomain {
    /// Domain with a closed-form boundary radius. `rho` must be positive and
    /// 2π-periodic; both are checked on a scan of [`SCAN_POINTS`] angles.
    pub fn from_function<F>(rho: F) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        for k in 0..SCAN_POINTS {
            let t = TAU * k as f64 / SCAN_POINTS as f64;
            let (a, b) = (rho(t), rho(t + TAU));
            if a.is_finite() && b.is_finite() && (a - b).abs() > PERIODICITY_TOL * a.abs().max(1.0)
            {
                return Err(Error::InvalidBoundary(format!(
                    "radius is not 2π-periodic: ρ({t}) = {a}, ρ({t} + 2π) = {b}"
                )));
            }
        }
        Self::validated(Boundary::Closed(Arc::new(rho)))
    }

    /// Domain whose boundary radius is the trigonometric barycentric
    /// interpolant through `(thetas[k], rhos[k])`.
    pub fn from_samples(thetas: Vec<f64>, rhos: Vec<f64>) -> Result<Self> {
        if thetas.len() != rhos.len() {
            return Err(invalid(format!(
                "{} angles but {} radii",
                thetas.len(),
                rhos.len()
            )));
        }
        if thetas.len() < 3 {
            return Err(invalid("a sampled boundary needs at least 3 samples"));
        }
        if let Some(r) = rhos.iter().find(|r| !(r.is_finite() && **r > 0.0)) {
            return Err(invalid(format!(
                "boundary sample radius {r} is not positive"
            )));
        }
        let nodes = PeriodicNodeSet::from_sorted(thetas)?;
        Self::validated(Boundary::Smoothed { nodes, rhos })
    }

    /// Reads a sampled boundary: two whitespace-separated columns `theta rho`
    /// per line, radians, `#` starts a comment.
    pub fn from_boundary_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let (thetas, rhos) = parse_boundary_samples(&text)?;
        Self::from_samples(thetas, rhos)
    }

    fn validated(boundary: Boundary) -> Result<Self> {
        let mut dom = Self {
            boundary,
            rho_min: 0.0,
            rho_max: 0.0,
            rough: false,
        };
        let scan: Vec<f64> = (0..SCAN_POINTS)
            .map(|k| {
                let t = TAU * k as f64 / SCAN_POINTS as f64;
                let r = dom.rho(t);
                if r.is_finite() && r > 0.0 {
                    Ok(r)
                } else {
                    Err(Error::NotStarlike { theta: t, rho: r })
                }
            })
            .collect::<Result<_>>()?;
        dom.rho_min = scan.iter().copied().fold(f64::INFINITY, f64::min);
        dom.rho_max = scan.iter().copied().fold(0.0, f64::max);
        dom.rough = is_rough(&scan);
        if dom.rough {
            log::warn!("boundary radius is not smooth; expect slow convergence near the boundary");
        }
        Ok(dom)
    }

    /// Boundary radius at `theta` (taken modulo 2π).
    pub fn rho(&self, theta: f64) -> f64 {
        let t = wrap_angle(theta);
        match &self.boundary {
            Boundary::Closed(f) => f(t),
            Boundary::Smoothed { nodes, rhos } => nodes.eval(rhos, t).unwrap_or(f64::NAN),
        }
    }

    pub fn rho_min(&self) -> f64 {
        self.rho_min
    }

    pub fn rho_max(&self) -> f64 {
        self.rho_max
    }

    /// Whether the boundary scan showed isolated spikes in the second
    /// differences of ρ, e.g. corners.
    pub fn is_rough(&self) -> bool {
        self.rough
    }

    /// Sample angles and radii for a sampled boundary.
    pub fn samples(&self) -> Option<(&[f64], &[f64])> {
        match &self.boundary {
            Boundary::Closed(_) => None,
            Boundary::Smoothed { nodes, rhos } => Some((nodes.nodes(), rhos)),
        }
    }

    /// `S(ξ, φ) = (2ξ / ρ(φ), φ mod 2π)`.
    pub fn map_s(&self, xi: f64, phi: f64) -> Result<(f64, f64)> {
        if !(xi.is_finite() && phi.is_finite()) || xi < 0.0 {
            return Err(invalid(format!(
                "polar point ({xi}, {phi}) needs finite xi >= 0"
            )));
        }
        let t = wrap_angle(phi);
        let rho = self.rho(t);
        if xi > rho * (1.0 + BOUNDARY_SLACK) {
            return Err(Error::OutsideDomain {
                x: xi * phi.cos(),
                y: xi * phi.sin(),
            });
        }
        Ok(((2.0 * xi / rho).min(2.0), t))
    }

    /// `S^{-1}(r, θ) = (r ρ(θ) / 2, θ mod 2π)`.
    pub fn map_s_inv(&self, r: f64, theta: f64) -> Result<(f64, f64)> {
        if r.is_nan() || !(0.0..=2.0).contains(&r) {
            return Err(Error::Domain {
                value: r,
                lo: 0.0,
                hi: 2.0,
            });
        }
        if !theta.is_finite() {
            return Err(invalid("angle must be finite"));
        }
        let t = wrap_angle(theta);
        Ok((r * self.rho(t) / 2.0, t))
    }

    /// Whether `(x, y)` lies in the closed domain, up to a relative slack of
    /// [`BOUNDARY_SLACK`].
    pub fn contains(&self, x: f64, y: f64) -> bool {
        let t = wrap_angle(y.atan2(x));
        x.hypot(y) <= self.rho(t) * (1.0 + BOUNDARY_SLACK)
    }
}

fn is_rough(scan: &[f64]) -> bool {
    let n = scan.len();
    let d2: Vec<f64> = (0..n)
        .map(|k| (scan[(k + 1) % n] - 2.0 * scan[k] + scan[(k + n - 1) % n]).abs())
        .collect();
    let mean = d2.iter().sum::<f64>() / n as f64;
    let max = d2.iter().copied().fold(0.0, f64::max);
    mean > 0.0 && max > ROUGHNESS_RATIO * mean
}

/// Parses the two-column boundary format; see
/// [`StarlikeDomain::from_boundary_file`].
pub fn parse_boundary_samples(text: &str) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut thetas = Vec::new();
    let mut rhos = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let cols: Vec<&str> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .collect();
        let parsed: Vec<f64> = cols.iter().filter_map(|c| c.parse().ok()).collect();
        if cols.len() != 2 || parsed.len() != 2 {
            return Err(Error::InvalidBoundary(format!(
                "line {}: expected two numbers `theta rho`, got {line:?}",
                lineno + 1
            )));
        }
        thetas.push(parsed[0]);
        rhos.push(parsed[1]);
    }
    Ok((thetas, rhos))
}

pub fn domain_from_function<F>(rho: F) -> Result<StarlikeDomain>
where
    F: Fn(f64) -> f64 + Send + Sync + 'static,
{
    StarlikeDomain::from_function(rho)
}

pub fn domain_from_samples(thetas: Vec<f64>, rhos: Vec<f64>) -> Result<StarlikeDomain> {
    StarlikeDomain::from_samples(thetas, rhos)
}

/// Interpolant `I[f] ∘ S` on a starlike domain.
#[derive(Debug, Clone)]
pub struct DomainInterpolant {
    domain: StarlikeDomain,
    disk: DiskInterpolant,
    radial_shift: Option<RadialShift>,
    angular_shift: Option<AngularShift>,
    rho_at_nodes: Vec<f64>,
}

/// Samples `f(x, y)` on the homothetic grid with polar coordinates
/// `(y_i ρ(φ_j) / 2, φ_j)`, where `y_i`, `φ_j` are the (possibly shifted)
/// disk nodes.
pub fn build_domain_interpolant<F>(
    domain: &StarlikeDomain,
    n1: usize,
    n2: usize,
    radial_shift: Option<RadialShift>,
    angular_shift: Option<AngularShift>,
    f: F,
) -> Result<DomainInterpolant>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let builder = DiskBuilder::new(n1, n2)?
        .radial_shift(radial_shift)
        .angular_shift(angular_shift);
    let disk = builder.sample(|r, t| {
        let xi = r * domain.rho(t) / 2.0;
        f(xi * t.cos(), xi * t.sin())
    })?;
    let rho_at_nodes = disk
        .grid()
        .angular()
        .nodes()
        .iter()
        .map(|&t| domain.rho(t))
        .collect();
    Ok(DomainInterpolant {
        domain: domain.clone(),
        disk,
        radial_shift,
        angular_shift,
        rho_at_nodes,
    })
}

impl DomainInterpolant {
    pub fn domain(&self) -> &StarlikeDomain {
        &self.domain
    }

    pub fn disk(&self) -> &DiskInterpolant {
        &self.disk
    }

    pub fn radial_shift(&self) -> Option<&RadialShift> {
        self.radial_shift.as_ref()
    }

    pub fn angular_shift(&self) -> Option<&AngularShift> {
        self.angular_shift.as_ref()
    }

    /// Cartesian coordinates of grid node `(i, j)`.
    pub fn node(&self, i: usize, j: usize) -> (f64, f64) {
        let g = self.disk.grid();
        let t = g.angular().nodes()[j];
        let xi = g.radial().nodes()[i] * self.rho_at_nodes[j] / 2.0;
        (xi * t.cos(), xi * t.sin())
    }

    /// Disk coordinates `S(x, y)`, snapped onto a node ray or circle when
    /// within roundoff of one.
    pub fn to_disk(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(invalid(format!("point ({x}, {y}) is not finite")));
        }
        let g = self.disk.grid();
        let xi = x.hypot(y);
        let mut t = wrap_angle(y.atan2(x));
        let mut rho = self.domain.rho(t);
        // same test as `contains`, before any snapping
        if xi > rho * (1.0 + BOUNDARY_SLACK) {
            return Err(Error::OutsideDomain { x, y });
        }
        if let Some(j) = nearest_angle(g.angular().nodes(), t) {
            t = g.angular().nodes()[j];
            rho = self.rho_at_nodes[j];
        }
        let mut r = (2.0 * xi / rho).min(2.0);
        let radial = g.radial().nodes();
        let k = radial.partition_point(|&v| v < r);
        for i in [k.saturating_sub(1), k.min(radial.len() - 1)] {
            if (radial[i] - r).abs() <= SNAP_TOL * radial[i].max(1.0) {
                r = radial[i];
            }
        }
        Ok((r, t))
    }

    /// Evaluates at a Cartesian point of the closed domain.
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        let (r, t) = self.to_disk(x, y)?;
        self.disk.eval(r, t)
    }

    /// Evaluates at disk coordinates `(r, θ)`.
    pub fn eval_disk(&self, r: f64, theta: f64) -> Result<f64> {
        self.disk.eval(r, theta)
    }

    /// Lebesgue constant estimate over the image under `S^{-1}` of the
    /// `m1 × m2` cell-centred disk lattice. Each point goes through the
    /// Cartesian evaluation path.
    pub fn lebesgue_estimate(&self, m1: usize, m2: usize) -> Result<f64> {
        if m1 == 0 || m2 == 0 {
            return Err(invalid("Lebesgue lattice needs m1, m2 >= 1"));
        }
        let g = self.disk.grid();
        let (rs, ts) = lebesgue_lattice(m1, m2);
        let mut best = 0.0f64;
        for &t in &ts {
            for &r in &rs {
                let (xi, phi) = self.domain.map_s_inv(r, t)?;
                let (rr, tt) = self.to_disk(xi * phi.cos(), xi * phi.sin())?;
                let lam = g.radial().lebesgue_function(rr) * g.angular().lebesgue_function(tt);
                best = best.max(lam);
            }
        }
        Ok(best)
    }
}

fn nearest_angle(nodes: &[f64], t: f64) -> Option<usize> {
    let k = nodes.partition_point(|&v| v < t);
    let n = nodes.len();
    [(k + n - 1) % n, k % n].into_iter().find(|&j| {
        let d = (t - nodes[j]).abs();
        d.min(TAU - d) <= SNAP_TOL * nodes[j].max(1.0)
    })
}
