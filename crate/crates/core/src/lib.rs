#![no_std]
extern crate alloc;

pub mod census;
pub mod coherence;
pub mod error;
pub mod geom;
pub mod grading;
pub mod graver;
pub mod groebner;
pub mod hilbert;
pub mod lattice;
pub mod lp;
pub mod paramspace;
pub mod structure;

pub use error::{Error, Result};
