//! Exact symbolic engine for the finite-type cluster algebra structure on the
//! double Bruhat cell `G^{e,c^2}` of a classical algebraic group, together
//! with the crystal-theoretic description of its cluster variables.
//!
//! The crate computes every cluster variable of `C[G^{e,c^2}]` for types
//! B/C/D (type A is supported for representations and generalized-minor
//! evaluation) in the factorized torus coordinates `(a; Y_{s,i})`, and
//! machine-checks that each cluster variable is a positive-integer sum of
//! monomial realizations of Demazure crystals.
//!
//! Modules, bottom-up:
//!
//! * [`laurent`] — exact Laurent-polynomial arithmetic in the doubly indexed
//!   variables `Y_{s,i}` with an attached formal torus character `a^λ`,
//!   including exact multivariate division.
//! * [`rootdata`] — Cartan matrices, reduced words, the doubled Coxeter word,
//!   the `e(i)`/`k⁻` combinatorics, and almost-positive-root counting.
//! * [`rep`] — weight bases and group-element actions for the fundamental
//!   representations (wedge powers and spin representations) plus the
//!   contravariant bilinear pairing.
//! * [`crystal`] — the monomial realization of crystals (Kashiwara operators
//!   through the monomials `A_{s,i}`) and Demazure crystal generation.
//! * [`cluster`] — exchange matrices from reduced words, seed mutation,
//!   finite-type enumeration, and mutation diagrams.
//! * [`minor`] — generalized minors evaluated on the factorized chart
//!   `x̄^G_i(a; Y)`, the initial seed, and the factorization maps φ/ψ.
//! * [`verifier`] — executable statements of the main theorems: cluster
//!   variables after prescribed mutation sequences versus sums of Demazure
//!   monomial realizations, plus the explicit intermediate identities.
//!
//! The crate is `no_std` (it only needs `alloc`); all values are immutable
//! after construction and all operations are pure functions.

#![no_std]
#![deny(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cluster;
pub mod crystal;
pub mod laurent;
pub mod minor;
pub mod rep;
pub mod rootdata;
pub mod verifier;
