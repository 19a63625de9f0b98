//! Exact expansion of curves on triangulated surfaces.
//!
//! A triangulated surface with marked boundary determines an exchange
//! matrix, and every curve between marked points determines a Laurent
//! polynomial in the initial variables `x1..xn` and coefficients `y1..yn`.
//! This crate computes that polynomial exactly, two independent ways --
//! by enumerating complete paths shadowing the curve, and by counting
//! closed position sets of the curve's string module -- and can verify
//! the result a third way by mutating seeds along a flip sequence.
//!
//! The pieces:
//!
//! * [`laurent`] -- exact Laurent polynomials over `BigInt`.
//! * [`surface`] -- triangulated surfaces, curves, flips, a text format.
//! * [`quiver`] -- the arrow pattern, relations, and exchange matrix of a
//!   triangulation.
//! * [`strings`] -- string modules of curves and their closed position sets.
//! * [`paths`] -- complete paths shadowing a curve and their weights.
//! * [`cluster`] -- seeds, matrix mutation, and search over triangulations.
//! * [`expansion`] -- the two expansion routes and their cross-checks.

pub mod cli;
pub mod cluster;
pub mod expansion;
pub mod laurent;
pub mod paths;
pub mod quiver;
pub mod strings;
pub mod surface;
