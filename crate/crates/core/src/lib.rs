//! Exact combinatorial machinery for torus-covering T²-links.
//!
//! A torus-covering T²-link is determined by a pair of commuting braids
//! `(a, b)` of the same degree. This crate provides:
//!
//! * [`braid`]: braid words, their permutations and Artin's action on the
//!   free group, which doubles as a word-problem oracle for braids;
//! * [`group`]: link-group presentations, abelianization through Smith normal
//!   form, and Knuth–Bendix completion used to certify free abelian groups;
//! * [`quandle`]: finite quandles, 3-cocycles stored as exponent tables and
//!   the Laurent polynomial ring the invariants live in;
//! * [`chart`]: torus charts without black vertices modelled as braid-word
//!   rewriting movies, quandle colorings and the cocycle invariant;
//! * [`triple`]: the exhaustive case analysis bounding the triple point
//!   number from below.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod braid;
pub mod chart;
pub mod group;
pub mod quandle;
pub mod triple;

pub use braid::{BraidError, BraidLetter, BraidWord, FreeWord, GeneratorImages, Permutation};
pub use chart::{build_movie, cocycle_invariant, validate_movie, ChartError, ColorVector, MovieEvent, MovieLimits, TorusChartMovie, WhiteVertexRecord};
pub use triple::{certify_lower_bound, CaseReport, DiagramHypothesis, TriplePointProfile, Verdict};
pub use quandle::{Cocycle3, LaurentPoly, Quandle, QuandleError};
pub use group::{AbelianInvariants, FreeAbelianVerdict, GroupPresentation, KbLimits, RewriteSystem};
