//! Spectral-gap laboratory for regular graphs.
//!
//! The crate builds the extremal cubic and quartic families with small
//! algebraic connectivity, computes spectra and relaxation times, runs a
//! proper-switching descent, certifies minimizers by exhaustive enumeration
//! at small orders, and evaluates asymptotic ratios at large orders through
//! equitable-partition quotients.
//!
//! Module map:
//! - [`graph`]: simple-graph data model, block decomposition, isomorphism,
//!   graph6/DOT/edge-list formats.
//! - [`spectra`]: dense symmetric eigensolver (cyclic Jacobi), Laplacian
//!   quadratic forms, spectral reports, relaxation time.
//! - [`families`]: constructors for every graph family used here, plus the
//!   cosine test vector and the column cell partitions.
//! - [`quotient`]: equitable partitions, divisor matrices, banded Sturm
//!   bisection for huge path-like quotients, asymptotics tables.
//! - [`switching`]: elementary moves, proper switches, Rayleigh deltas, and
//!   the mu-descent local search.
//! - [`search`]: isomorph-free enumeration of connected regular graphs and
//!   the certification drivers.
//! - [`cli`]: the command-line front end (also used by the `specgap` binary).

pub mod cli;
pub mod families;
pub mod graph;
pub mod numfmt;
pub mod quotient;
pub mod random;
pub mod search;
pub mod spectra;
pub mod switching;
pub mod tol;
