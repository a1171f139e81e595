//! Exact arithmetic for the m-Riordan groups: classical (m = 1), double,
//! triple, quadruple and general m.
//!
//! Everything is built on [`series::Series`], a truncated power series with
//! big-rational coefficients. Group elements live in [`group`], derived
//! sequences in [`seq`], and the lattice-path counting oracle in [`lattice`].

pub mod cli;
pub mod doc;
pub mod expr;
pub mod fixtures;
pub mod group;
pub mod lattice;
pub mod seq;
pub mod series;

pub use group::{CoeffMatrix, GroupError, MRiordanElement, Subgroup};
pub use series::{rat, BlockProfile, Rat, Series, SeriesError};
