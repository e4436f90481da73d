//! Exact algebra and combinatorics behind the Jack connection coefficients
//! `a^λ_{μν}(α)` and `h^λ_{μν}(α)`.
//!
//! Everything here is `no_std` with `alloc`: integer partitions, the field
//! `ℚ(α)`, power-sum symmetric functions and their differential operators,
//! the coefficient engine, a Gram–Schmidt Jack oracle, and the matching and
//! star-hypermap enumerators carrying the `wt` and `ϑ` statistics.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod engine;
pub mod error;
pub mod hypermap;
pub mod jack;
pub mod matching;
pub mod partition;
pub mod powersum;
pub mod ratfunc;

pub use engine::{CoeffKind, CoeffTable, CoefficientEngine, Recurrences};
pub use error::*;
pub use partition::{partitions_of, Partition, Surgery};
pub use powersum::{GradedOperator, OperatorTower, PSFun};
pub use ratfunc::{BetaPoly, RatFunc};
