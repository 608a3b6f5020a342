//! Community-aware immunization of networks with non-overlapping communities.
//!
//! The crate is `no_std` (it needs `alloc`) and holds every algorithm of the
//! toolkit: graph and partition types, Louvain detection, the community-aware
//! centralities and their classical baselines, random-walk immunization
//! strategies, a discrete-time SIR engine and an LFR-style generator.
//! File IO, CSV output and the command line live in the `modimmune` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod centrality;
pub mod community;
pub mod epidemic;
mod error;
pub mod fixtures;
pub mod graph;
pub mod lfr;
pub mod partition;
pub mod rng;
pub mod strategy;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{EdgeListLoad, Graph};
pub use partition::Partition;
pub use strategy::Strategy;
