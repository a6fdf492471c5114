//! Exact-arithmetic toolkit for coincident-root loci of binary forms.
//!
//! A binary form of degree `d` factors into linear forms; fixing the
//! multiplicity pattern λ (a partition of `d`) cuts out a projective variety
//! X_λ inside ℙ^d, the coincident-root locus.  This crate computes, in exact
//! rational arithmetic throughout:
//!
//! - partition combinatorics: refinement order, degree formulas for X_λ, the
//!   merge set describing its singular locus ([`partitions`]);
//! - the SL₂ character ring: Clebsch–Gordan products, symmetric-power
//!   plethysms, exterior powers, and a brute-force weight oracle
//!   ([`charring`]);
//! - character-level predictions for the graded pieces of the ideal of X_λ
//!   from an Eagon–Northcott-style complex ([`encomplex`]);
//! - ground truth for the same graded pieces by exact linear algebra on the
//!   coefficient substitution map, with SL₂ characters read off from weight
//!   blocks, plus a Gröbner-elimination cross-check ([`ideal_la`]);
//! - classical covariants via transvectants, vanishing criteria on X_λ, and
//!   exact calibration of covariant combinations ([`covariants`]);
//! - supporting exact polynomial arithmetic ([`polyring`]) and linear
//!   algebra ([`linalg`]).

pub mod charring;
pub mod covariants;
pub mod encomplex;
pub mod groebner;
pub mod ideal_la;
pub mod linalg;
pub mod partitions;
pub mod polyring;

pub use charring::Character;
pub use covariants::Covariant;
pub use ideal_la::{GradedPieceReport, KernelConfig};
pub use partitions::{MergeSet, Partition};
pub use polyring::{BinaryForm, MultiPoly, PolyRing, Rat};
