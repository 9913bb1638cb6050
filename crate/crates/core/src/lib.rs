//! Exact computation with partial dynamical systems on totally disconnected
//! compact spaces.
//!
//! The crate models three concrete systems: the path space of a
//! Cuntz–Krieger matrix acted on by a free group, the doubled-point
//! Cantor set acted on by `ℚₙ ⋊ ℤ`, and the residue space of `ℤ` acted on by
//! `ℚ ⋊ ℚ^×`. On top of them it provides
//!
//! * the Boolean algebra of clopen sets ([`space`]),
//! * normal forms in the acting groups ([`group`]),
//! * the partial action on clopen sets and functions ([`action`]),
//! * the dense `*`-algebra of finite sums `Σ f_t δ_t` ([`crossprod`]),
//! * construction and verification of paradoxical decompositions and their
//!   lift to properly infinite projections ([`paradox`]),
//! * graph checks for path-space systems ([`graph`]).
//!
//! All arithmetic is exact; there are no tolerances anywhere.
//!
//! ```
//! use pcx::action::PartialSystem;
//! use pcx::space::AdjacencyMatrix;
//!
//! let sys = PartialSystem::path_space(AdjacencyMatrix::full(2)?);
//! let whole = sys.space().whole();
//! let witness = pcx::paradox::find_witness(&sys, &whole)?;
//! assert!(pcx::paradox::verify_witness(&sys, &witness)?.pass);
//! # Ok::<(), pcx::Error>(())
//! ```

pub mod action;
pub mod cli;
pub mod crossprod;
pub mod error;
pub mod graph;
pub mod group;
pub mod json;
pub mod paradox;
pub mod space;

pub use error::{Error, Result};

/// Exact rational scalars.
pub type Q = num_rational::Ratio<i128>;
