//! Chromatic quasisymmetric functions of unit interval graphs, computed
//! two independent ways: by enumerating proper colorings, and by a product
//! of simple-reflection operators acting on the affine weight lattice.
//!
//! Module map:
//! - [`combinatorics`]: Hessenberg functions, root ideals, graphs, modular triples.
//! - [`symfunc`]: partitions, Laurent coefficients, m/s/e bases, Kostka and LR numbers.
//! - [`affine_weyl`]: affine weights, reflections, the operator product formula.
//! - [`chromatic`]: the coloring oracle, graded multiplicities and the law checks.
//! - [`cli`]: the `csf` command-line driver.

pub mod affine_weyl;
pub mod chromatic;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod symfunc;

pub use error::{Error, Result};
