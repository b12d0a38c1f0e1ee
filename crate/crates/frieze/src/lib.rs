//! Exact-arithmetic toolkit for 2-frieze patterns.
//!
//! A 2-frieze is a grid of numbers on the integer and half-integer lattice in
//! which every entry equals the product of its horizontal neighbours minus the
//! product of its vertical neighbours. Closed friezes — bounded above and
//! below by a row of 1's and two rows of 0's — are equivalent to third-order
//! difference equations with trivial monodromy, to polygons in 3-space with
//! unit consecutive determinants, and to seeds of a cluster algebra. This
//! crate implements all four presentations over exact rationals, plus the
//! enumeration and constructive calculus of the positive-integer (arithmetic)
//! closed friezes, and the classical Coxeter–Conway patterns they generalize.
//!
//! Entry points:
//!
//! - [`frieze`](crate::frieze): coefficient rows, window propagation, the
//!   determinant formula, symmetry checks.
//! - [`polygon`]: monodromy, closure, polygons, convexity, projective lifting.
//! - [`cluster`]: quiver/seed mutation, the frieze quiver, the bipartite belt,
//!   zig-zag charts, the presymplectic form.
//! - [`arith`]: enumeration of arithmetic friezes, dihedral orbits,
//!   stabilization, connected sums, semi-infinite integer friezes.
//! - [`classical`]: Coxeter–Conway friezes and their triangulation calculus.

pub mod arith;
pub mod classical;
pub mod cluster;
pub mod error;
pub mod frieze;
pub mod io;
pub mod matrix;
pub mod polygon;
pub mod rat;

pub use error::{
    ArithError, ClassicalError, ClusterError, FriezeError, IoError, MatrixError, PolygonError,
};
pub use frieze::{CoefficientRow, DoubledIndex, Frieze2Window};
pub use matrix::MatExact;
pub use rat::Rat;
