//! Exact computation of derivations, inner derivations and first cohomology
//! of finite-dimensional algebras, with a focus on trivial extensions
//! `A ⋉ M` and triangular matrix algebras.

#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::wrong_self_convention)]

pub mod algebra;
pub mod bimodule;
pub mod cohomology;
pub mod derivations;
pub mod field;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod report;
pub mod standard;
pub mod trivext;
