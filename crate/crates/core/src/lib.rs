//! Arithmetization of syntax for the formal system P.
//!
//! The crate is organized around five layers:
//!
//! * [`syntax`] — the object language: typed variables, terms, formulas,
//!   parsing, rendering and substitution.
//! * [`codec`] — Gödel numbering: sign codes, prime-power sequence
//!   encoding/decoding over arbitrary-precision integers, and the symbolic
//!   [`codec::GnValue`] tree for numbers too large to materialize.
//! * [`metafun`] — the metamathematical functions Z, Neg, Imp, Con and Sb,
//!   implemented at the sign-sequence level so they can be cross-checked
//!   against the AST route in `syntax`.
//! * [`kernel`] — a Hilbert-style proof checker for the propositional
//!   fragment of P: axiom-instance matchers, modus ponens, proof scripts,
//!   tautology checking and contradiction scans.
//! * [`replay`] — builds the derivation objects s, t, u under each defensible
//!   reading of their defining equations and audits derivation steps
//!   (4)–(7), producing a machine-checkable report.
//!
//! [`corpus`] supplies the exhaustive small-formula enumeration that drives
//! most of the property tests.

pub mod codec;
pub mod corpus;
pub mod kernel;
pub mod metafun;
pub mod primes;
pub mod replay;
pub mod syntax;
