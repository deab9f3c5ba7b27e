//! Face-number arithmetic for two-dimensional Buchsbaum simplicial
//! complexes.
//!
//! The crate answers three questions about an integer vector
//! `h = (h_0, h_1, h_2, h_3)`:
//!
//! * **decide** — is `h` the h-vector of some two-dimensional Buchsbaum
//!   simplicial complex (connected or not)? See [`hvec`].
//! * **construct** — if so, build an explicit witness complex together
//!   with a step-by-step certificate. See [`realizer`].
//! * **verify** — check the characterizations against exact simplicial
//!   homology (over the rationals and over GF(2)) and against exhaustive
//!   enumeration of all small pure 2-complexes. See [`homology`],
//!   [`properties`] and [`oracle`].
//!
//! Everything is exact integer arithmetic; there are no floating-point
//! numbers anywhere. The crate is `no_std` (it allocates, so `alloc` is
//! required) and has no runtime dependencies. Vertices are `1..=64` and
//! faces are bitmasks, which covers every workload the crate targets.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod complex;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod homology;
pub mod hvec;
pub mod oracle;
pub mod properties;
pub mod realizer;

pub use complex::{Face, GlueClass, SimplicialComplex};
pub use homology::{BettiVector, Field};
pub use hvec::{FVector, HVector};
