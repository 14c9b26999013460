//! Exact spectra of normal Cayley graphs on the symmetric group.
//!
//! A connection set that is a union of non-identity conjugacy classes of
//! `S_n` yields a normal Cayley graph whose spectrum is computable exactly
//! from the irreducible characters: each shape `zeta` contributes the
//! eigenvalue `sum_C |C| chi_zeta(C) / dim(zeta)` with multiplicity
//! `dim(zeta)^2`. This crate computes those spectra with big-integer /
//! big-rational arithmetic, decides the Aldous property (is the strictly
//! second largest eigenvalue attained by the standard shape `(n-1,1)`?),
//! and cross-checks everything against a brute-force oracle that builds
//! the actual `n! x n!` adjacency matrix.
//!
//! Module map:
//!
//! * [`partitions`] - partitions, class sizes, signs, derangement counts;
//! * [`characters`] - Murnaghan-Nakayama character engine, hook-length
//!   dimensions, closed-form character families, cache files;
//! * [`connection_sets`] - selector grammar and class-union connection sets;
//! * [`spectra`] - exact spectra, Aldous checks, closed-form eigenvalues,
//!   gap tables, scans;
//! * [`oracle`] - permutation-level brute force: dense eigensolves, BFS
//!   components, subgroup closure;
//! * [`cli`] - the `snspec` command-line surface.

pub mod characters;
pub mod cli;
pub mod connection_sets;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod spectra;

pub use error::Error;
