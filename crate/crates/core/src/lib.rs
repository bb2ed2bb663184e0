//! Superstring construction for sets of equal-length strings.
//!
//! Given `n` distinct strings that all have the same length `r`, this crate
//! builds short common superstrings by translating the instance into a
//! sequence of exactly solvable 2-SCS problems: a de Bruijn graph on the
//! `(r-1)`-mers gives a first solution, cutting it at artificial edges gives
//! contigs, and further rounds on generalized `(r-j)`-spectra merge those
//! contigs greedily down the overlap hierarchy.
//!
//! The crate ships the solvers themselves ([`hierarchy`]), the exact eulerian
//! 2-SCS machinery they stand on ([`euler`]), exact and greedy baselines for
//! benchmarking ([`oracle`]), the approximation-ratio envelope functions with
//! CSV curve export ([`bounds`]), and a seeded instance generator ([`gen`]).

pub mod bounds;
pub mod euler;
pub mod gen;
pub mod graph;
pub mod hierarchy;
pub mod instance;
pub mod oracle;

pub use instance::{
    is_superstring, max_overlap, naive_concat, validate_instance, Algorithm, Instance,
    InstanceError, SuperstringSolution,
};
