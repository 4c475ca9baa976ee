//! Deterministic query complexity on slices of the Boolean cube.
//!
//! The crate is organised around the objects the experiments need:
//!
//! * [`slice`]: subsets of `[n]`, colex numbering, slice functions and the
//!   consistency query the whole solver is built on.
//! * [`solver`] and [`tree`]: exact `D_k(f)` by Questioner/Adversary minimax,
//!   decision trees, exhaustive tree census and the composition construction.
//! * [`interval`] and [`counting`]: certified log-space arithmetic for the
//!   decision-tree counting bound and the central-binomial ratio.
//! * [`discmax`]: the Disc-max-d family, its exact completion oracle and the
//!   sufficient conditions for both outcomes to remain possible.
//! * [`game`]: the Positioner/Signgiver prefix and interval games.

pub mod census;
pub mod counting;
pub mod discmax;
pub mod error;
pub mod game;
pub mod interval;
pub mod slice;
pub mod solver;
pub mod tree;

pub use error::{Error, Result};
