//! Hybrid high-order (HHO) polytopal finite elements on 2D meshes, with a
//! Newton solver for nonlocal elliptic problems of Kirchhoff type.
//!
//! The building blocks are organized bottom-up:
//!
//! - [`mesh`]: polytopal meshes (triangular, Cartesian, hexagonal, Kershaw
//!   generators), topology construction, and a plain-text file format;
//! - [`quadrature`]: Gauss rules on segments and polygonal cells;
//! - [`basis`]: scaled monomial bases and L2-orthogonal projections;
//! - [`sparse`]: CSC matrices, a simplicial sparse Cholesky and a CG solver;
//! - [`space`]: local reconstruction/stabilization operators, hybrid fields,
//!   discrete norms, and global assembly;
//! - [`problem`]: Kirchhoff problem data and the built-in instances;
//! - [`solver`]: residual/Jacobian of the two-field formulation, bordered
//!   elimination, static condensation, the Newton loop, and the smallest
//!   discrete eigenvalue;
//! - [`study`]: manufactured-solution convergence studies and reports.

pub mod basis;
pub mod error;
pub mod mesh;
pub mod problem;
pub mod quadrature;
pub mod solver;
pub mod space;
pub mod sparse;
pub mod study;

pub use error::{Error, Result};
