//! Exact content-ideal computations over concretely presented base rings.
//!
//! `orclab` computes Ohm-Rush content ideals of polynomial, affine-semigroup,
//! and finitely presented power-series elements over presented rings (prime
//! fields, the integers, modular rings, artinian monomial quotients),
//! decides bounded Gaussianness with replayable witness searches, certifies
//! graded ideal inequalities over `K[u_1..u_r]` without Gröbner bases, and
//! forges the two classical constructions relating Gaussian elements to
//! locally principal content. A deterministic scenario runner binds ring
//! families to theorem-shaped checks and emits reproducible JSON reports.
//!
//! All arithmetic is exact: residues, arbitrary-precision integers and
//! rationals, and echelon linear algebra over prime fields. No floating
//! point anywhere.
//!
//! Start with the `examples/` directory: each example is a runnable tour of
//! one capability (ring presentations, ideal arithmetic, content and
//! Gaussian checks, witness sweeps, the forged constructions, transport
//! laws, Dedekind-Mertens exponents, series content, scenario reports).

pub mod content;
pub mod error;
pub mod forge;
pub mod graded;
pub mod grammar;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod ring;
pub mod scenario;

pub use error::{Error, Result};
pub use ideal::Ideal;

pub use ring::{Ring, RingElement, RingSpec};
