//! 2-step nilpotent L∞-algebras of finite simple hypergraphs.
//!
//! Every finite simple hypergraph `G` determines a 2-step nilpotent
//! L∞-algebra `L(G)`: one degree-0 generator per vertex, one generator of
//! degree `2 − k` per `k`-edge, and brackets that send a tuple of vertices
//! to the edge they span (if any). This crate builds `L(G)` and the free
//! graded-commutative algebra on its shifted dual with the transposed
//! differential, and computes:
//!
//! * exact Betti numbers and truncated Poincaré series over ℚ,
//! * closed-form cross-checks for low cohomological degrees,
//! * systems of distinct representatives and the symplectic forms they
//!   induce (existence is equivalent to an SDR plus a parity condition),
//! * hypergraph isomorphism with invariant fingerprints.
//!
//! All arithmetic is exact: rational coefficients, integer matrices,
//! fraction-free rank computation.

pub mod cohomology;
pub mod error;
pub mod hypergraph;
pub mod isomorphism;
pub mod linfty;
pub mod mcalg;
pub(crate) mod series;
pub mod symplectic;

pub use error::{Error, Result};
pub use hypergraph::{EdgeProfile, Hypergraph};
pub use linfty::LInftyAlgebra;
pub use mcalg::{MCAlgebra, Monomial, Polynomial};
