//! Exact characters, Gelfand–Tsetlin bases, Yangian spectra, fermionic Fock
//! spaces and wave functions for the spin Calogero-type Hilbert spaces
//! `H_N(n, k)`.

pub mod error;
pub mod poly;
pub mod symfunc;
pub mod diagrams;
pub mod characters;
pub mod yangian;
pub mod wavefunc;
pub mod fock;
pub mod verify;

pub use error::{Error, Result};
