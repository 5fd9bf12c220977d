//! Combinatorial core of virtual knot theory.
//!
//! Everything here works on [`GaussDiagram`]s (signed, directed chord
//! diagrams) and on structures derived from them:
//!
//! - [`gauss`]: the diagram type, its text grammar, canonical form and the
//!   elementary involutions (mirror, inverse, crossing change, virtualization).
//! - [`realize`]: deciding whether a diagram comes from a planar knot diagram.
//! - [`moves`]: Reidemeister moves on Gauss diagrams and bounded equivalence search.
//! - [`parity`]: Gaussian parity and the odd writhe.
//! - [`free`]: free knots, framed four-valent graphs and smoothings.
//! - [`poly`], [`matrix`], [`sawollek`]: exact Laurent polynomials, determinants
//!   and the normalized Sawollek polynomial.
//! - [`seifert`]: disk-band presentations of Seifert surfaces, knot diagrams
//!   drawn on them, and the map to virtual knots.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod free;
pub mod gauss;
pub mod matrix;
pub mod moves;
pub mod parity;
pub mod poly;
pub mod realize;
pub mod sawollek;
pub mod seifert;

pub use gauss::{Arrow, Endpoint, GaussDiagram, GaussError, Label, Role, Sign, Token};
pub use parity::{gaussian_parity, odd_writhe, Parity};
pub use poly::LaurentPolynomial2;
pub use realize::is_realizable;
pub use sawollek::normalized_sawollek;
