//! Exact computations in finite topos theory.
//!
//! Everything here is finite and enumerated: categories are given by complete
//! composition tables, presheaves take values in finite sets, and every
//! universal property that the library claims can be re-checked by exhaustive
//! search. The main entry points are:
//!
//! * [`fincat`] — finite categories, functors, categories of elements;
//! * [`psh`] — the presheaf topos over a finite base: limits, colimits,
//!   exponentials, epi/mono classification and image factorization;
//! * [`classifier`] — sieves, the subobject classifier Ω, characteristic
//!   maps, and subobject lattices;
//! * [`sites`] — Grothendieck topologies, Lawvere–Tierney operators, the
//!   sheaf condition, and sheafification by the plus construction;
//! * [`spaces`] — finite topological spaces, frames, bundles, étale spaces,
//!   sobriety and locale recovery;
//! * [`geom`] — geometric morphisms, Kan-extension adjoint triples, points
//!   as flat functors, and classification of left-exact functors;
//! * [`internal`] — internal groups, rings and the internal field axioms;
//! * [`etcs`] — well-pointedness, Choice and natural-numbers-object audits
//!   over a declared corpus of objects;
//! * [`files`] — the line-oriented text formats and workspace loader.

pub mod classifier;
pub mod error;
pub mod etcs;
pub mod files;
pub mod fincat;
pub mod fixtures;
pub mod geom;
pub mod internal;
pub mod psh;
pub mod sites;
pub mod spaces;
pub mod util;

pub use error::{Guard, TkError};
