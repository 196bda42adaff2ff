//! Finite germs of categories and their Garside machinery.
//!
//! A germ is a finite set of elements with identities and a partial product.
//! This crate validates the germ axioms, decides whether a germ is a Garside
//! germ (so that the category it presents carries greedy normal forms),
//! computes those normal forms and solves the word problem, and derives the
//! classical and dual braid-monoid germs from finite Coxeter groups of types
//! A, B and I2.
//!
//! Start from a derived germ and normalize a word:
//!
//! ```
//! use garside::coxeter::{classical_germ, CoxeterSpec};
//! use garside::engine::{CategoryEngine, PathWord};
//!
//! let germ = classical_germ(&CoxeterSpec::a(3)).unwrap();
//! let engine = CategoryEngine::new(&germ).unwrap();
//! let atoms = garside::germ::axiom_report(&germ).atoms;
//! let w = PathWord::new(&germ, vec![atoms[0], atoms[1], atoms[0]]).unwrap();
//! let nf = engine.normal_form(&w).unwrap();
//! assert_eq!(engine.s_length(&nf), 1); // aba = Δ, a single germ element
//! ```
//!
//! The runnable programs under `examples/` walk through each capability;
//! the `garside` binary exposes the same operations on germ files.

pub mod analyzer;
pub mod cli;
pub mod coxeter;
pub mod engine;
pub mod format;
pub mod germ;
pub mod report;

pub use analyzer::{is_garside_germ, GarsideVerdict, JTable};
pub use engine::{CategoryEngine, NormalForm, PathWord};
pub use germ::{axiom_report, validate_germ, AxiomReport, ElementId, GermTable, ObjectId};
