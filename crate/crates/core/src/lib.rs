//! Multinomial lattices `L(v)`, the weak order on permutations through
//! clopen inversion sets, join dependency and congruences, and the
//! `SD_n(∧)` equations.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod congruence;
pub mod error;
pub mod irreducibles;
pub mod lattice;
pub mod multinomial;
pub mod ops;
pub mod perm;
pub mod sd_engine;

pub use error::{Error, Result};

/// Size limits guarding the factorial blow-up of enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest word length `k` accepted by enumerations.
    pub max_k: usize,
    /// Largest lattice materialized as explicit tables.
    pub max_elements: usize,
    /// Largest number of join irreducibles for congruence enumeration.
    pub max_ji: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_k: 10, max_elements: 5000, max_ji: 24 }
    }
}
