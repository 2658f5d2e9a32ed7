//! Exact-arithmetic engine for the sl2 weight system on chord diagrams.
//!
//! The crate is organized around the objects it computes with:
//!
//! * [`algebra`] — exact rationals, polynomials in the Casimir symbol `c`,
//!   truncated power series, Stirling combinatorics and interpolation;
//! * [`chords`] — chord diagrams as double-occurrence words;
//! * [`graphs`] — small simple graphs with canonical certificates;
//! * [`hopf`] — the graded Hopf algebra of graphs and the projection onto
//!   primitive elements;
//! * [`sl2`] — the weight-system evaluator (Chmutov–Varchenko rewriting)
//!   together with closed forms, recurrences and generating functions for
//!   the complete bipartite families;
//! * [`oracle`] — an independent brute-force evaluator working in
//!   finite-dimensional irreducible representations of sl2;
//! * [`checks`] — the named verification suites wired into the CLI.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod algebra;
pub mod chords;
pub mod checks;
pub mod graphs;
pub mod hopf;
pub mod oracle;
pub mod sl2;

pub use algebra::{CasimirPoly, Rational, SeriesX};
pub use chords::ChordDiagram;
pub use graphs::Graph;
