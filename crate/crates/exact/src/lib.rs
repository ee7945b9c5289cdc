//! Exact arithmetic substrate: arbitrary-precision rationals, sparse
//! multivariate polynomials, polynomial-matrix determinants, resultants,
//! kernel bases, squarefree decomposition and Sturm real-root counting.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

pub mod matrix;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod roots;

pub use matrix::{MatrixError, PolyMatrix, QMatrix};
pub use parse::{parse_poly, parse_poly_with};
pub use poly::{Mono, Poly};
pub use rational::{fmt_rat, parse_rat, rat, rat_to_f64, ratio, Rat};
pub use resultant::{discriminant_wrt, resultant_wrt, ResultantError};
pub use roots::{
    isolate_real_roots, real_root_count, refine_root, squarefree_decompose, squarefree_part,
    RootError, UniPoly,
};
