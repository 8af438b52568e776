//! Finite graded rings and modules, prime-like submodule predicates, and an
//! exhaustive claim checker over enumerated corpora.

pub mod algebra;
pub mod error;
pub mod grading;
pub mod lattice;
pub mod predicates;
pub mod constructions;
pub mod theorems;
