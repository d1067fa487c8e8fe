//! Edge-intersection graphs of paths on a grid (EPG) for outerplanar graphs.
//!
//! The crate builds bend-bounded EPG representations, classifies maximal
//! outerplanar graphs and cacti by their (monotonic) bend number, and checks
//! every construction with an independent verifier and exhaustive oracles.
//!
//! ```
//! use epg::graph::{gen_named, Named};
//! use epg::{b2m, grid};
//!
//! let sun = gen_named(Named::NSun(5)).unwrap();
//! let rep = b2m::build_nsun_b2m(5).unwrap();
//! assert!(grid::verify(&sun, &rep, Some(2), true).pass);
//! ```

pub mod b2m;
pub mod cactus;
mod coords;
pub mod embedding;
pub mod graph;
pub mod grid;
pub mod maxouter;
pub mod oracle;
