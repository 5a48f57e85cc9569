//! Exact arithmetic for framed type-B Hecke algebras, their Markov traces,
//! and the solid-torus link invariants built from them.

pub mod coeff;
pub mod coxeterb;
pub mod invariants;
pub mod cyclic;
pub mod markov;
pub mod oracle;
pub mod suites;
pub mod ybalgebra;
