//! Exact computation in combinatorial Hopf algebras of endofunctions,
//! permutations, set partitions, parking functions and their quotients.

pub mod combinat;
pub mod eqsym;
pub mod error;
pub mod hopf;
pub mod linear;
pub mod parkfunc;
pub mod phisym;
pub mod qdeform;
pub mod registry;
pub mod ring;
pub mod sgqsym;
pub mod stalactic;
pub mod symfunc;

pub use error::{Error, Result};
pub use linear::{Label, LinComb, Tensor2};
pub use ring::{QPoly, Ring};
