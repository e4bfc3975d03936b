//! Linear rational barycentric interpolation on starlike planar domains.
//!
//! A function on a starlike domain is pulled back to the radius-2 disk by the
//! radial transplant `(ξ, φ) ↦ (2ξ / ρ(φ), φ)` and interpolated there on a
//! polar tensor grid: Chebyshev-type rational interpolation in the radius and
//! trigonometric interpolation in the angle. Both node families can be moved
//! by conformal maps that cluster points near a steep front.
//!
//! ```
//! use starbary::{build_disk_interpolant, DiskInterpolant};
//!
//! let f = |r: f64, t: f64| r * t.cos();
//! let di: DiskInterpolant = build_disk_interpolant(16, 32, None, None, f).unwrap();
//! let v = di.eval(0.5, 1.0).unwrap();
//! assert!((v - 0.5 * 1f64.cos()).abs() < 1e-12);
//! ```

pub mod bary;
pub mod conformal;
pub mod disk;
pub mod error;
pub mod experiments;
pub mod starlike;

pub use bary::{
    barycentric_quotient, chebyshev_nodes, cst, equispaced_nodes, radial_eta_weights, wrap_angle,
    CstKind, EtaWeights, NodeSet1D, PeriodicNodeSet,
};
pub use conformal::{antipode, make_angular_shift, make_radial_shift, AngularShift, RadialShift};
pub use disk::{
    build_disk_interpolant, lebesgue_estimate, lebesgue_estimate_with, lebesgue_lattice,
    DiskBuilder, DiskInterpolant, LebesgueScan, TensorGrid,
};
pub use error::{Error, Result};
pub use starlike::{
    build_domain_interpolant, domain_from_function, domain_from_samples, parse_boundary_samples,
    DomainInterpolant, StarlikeDomain,
};
