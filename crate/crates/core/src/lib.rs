//! Exact computation engine for the fragile power domination process.
//!
//! PMUs (phasor measurement units) are placed on the vertices of a graph, each
//! one fails independently with probability `q`, and the survivors run the
//! power domination process (closed-neighbourhood domination followed by zero
//! forcing). Everything the crate reports about that random process is exact:
//! expected observation counts and full-observation probabilities are integer
//! polynomials in `q`, and evaluation happens over arbitrary-precision
//! rationals.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, simulation and
//! the command-line front end live in the `fragpd` companion crate.
//!
//! ```
//! use fragpd_core::{fragile, generators, Limits, Placement, Poly};
//!
//! let g = generators::fixture_fig1();
//! let p: Placement = "3,4".parse().unwrap();
//! let e = fragile::expected_value_poly(&g, &p, &Limits::default()).unwrap();
//! assert_eq!(e, Poly::from_bernstein(&[(10, 1, 1), (7, 0, 2)]));
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod closed_forms;
mod error;
pub mod fragile;
pub mod generators;
mod graph;
mod limits;
mod placement;
pub mod poly;
pub mod propagation;
pub mod subsets;

pub use error::{Error, Result};
pub use graph::Graph;
pub use limits::Limits;
pub use placement::Placement;
pub use poly::Poly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
