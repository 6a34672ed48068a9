//! Exact computational algebra for a family of questions about finite groups
//! inside division rings.
//!
//! The crate provides four layers, each usable on its own:
//!
//! * [`arith`] — deterministic integer utilities (factorization, Euler phi,
//!   multiplicative orders, CRT) used everywhere else.
//! * [`groups`] — split metacyclic presentations `G(m, n, r)` with exact
//!   element arithmetic, centers, Sylow subgroups, isomorphism testing, and
//!   enumeration of isomorphism classes by order.
//! * [`classify`] — a rule engine deciding, per presentation or per order,
//!   whether a group is obstructed from embedding in a division ring
//!   (`NotAmitsur`), forced to be cyclic (`ForcedCyclic`), or survives as a
//!   `Candidate`.
//! * [`group_ring`], [`cyclotomic`], [`algebra`] — the integer group ring
//!   with the telescoping product certificate, exact cyclotomic field
//!   arithmetic, and cyclic algebras `(L/F, sigma, omega)` in which the
//!   surviving candidate groups embed as unit groups.
//!
//! Everything is exact: big integers and big rationals only, no floating
//! point, no silent overflow. The crate is `no_std` (with `alloc`); IO and
//! report serialization live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod arith;
pub mod classify;
pub mod cyclotomic;
pub mod group_ring;
pub mod groups;
mod linalg;
pub mod rng;

/// Largest group order the search-heavy operations (isomorphism testing,
/// enumeration, scans) accept by default. Brute-force generator-image search
/// degrades quickly beyond this.
pub const DESK_BOUND: u64 = 10_000;
