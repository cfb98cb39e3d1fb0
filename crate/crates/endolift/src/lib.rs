//! endolift: an exact-arithmetic workbench for the modular representation
//! theory of dihedral 2-groups in characteristic 2.
//!
//! The crate constructs the endo-trivial modules of these groups, computes
//! their invariants (syzygies, restriction fingerprints, the Xi pair), does
//! ordinary character theory over one cyclotomic integer ring, and produces
//! lifting evidence over the truncations Z/2^n of the 2-adic integers. A
//! verification layer turns each checkable statement into a machine-readable
//! report; see the `examples/` directory for runnable entry points and the
//! `endolift` binary for the command line interface.

pub mod chars;
pub mod config;
pub mod deform;
pub mod dihedral;
pub mod endotriv;
pub mod error;
pub mod exactalg;
pub mod files;
pub mod golden;
pub mod modrep;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
