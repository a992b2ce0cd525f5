//! Exact computations with the level-`l` Fock space of affine `sl_e`.
//!
//! The crate covers
//!
//! * multipartition combinatorics: boxes, residues, addable and removable
//!   cells ([`multipartition`]),
//! * the affine weight lattice and the weight map ([`weight`]),
//! * the Fock space as an `sl_e^`-module over the rationals ([`fock`]),
//! * Kashiwara operators by the signature rule and crystal graphs ([`crystal`]),
//! * checkers for crystal axioms, perfect bases and component counts ([`analysis`]),
//! * the cyclotomic Hecke algebra built from its presentation, with
//!   Jucys-Murphy elements and central characters ([`hecke`]),
//! * the command-line front end ([`cli`]).
//!
//! ```
//! use fock_crystal::multipartition::{Multicharge, Multipartition};
//! use fock_crystal::weight::wt;
//!
//! let c = Multicharge::new(2, vec![0, 1]).unwrap();
//! let mp = Multipartition::parse("[[1],[1]]").unwrap();
//! assert_eq!(wt(&mp, &c).to_json(), r#"{"lambda":[1,1],"delta":-1}"#);
//! ```

pub mod analysis;
pub mod cli;
pub mod crystal;
pub mod cyclotomic;
pub mod error;
pub mod fock;
pub mod hecke;
pub mod linalg;
pub mod multipartition;
pub mod report;
pub mod weight;

pub use error::{Error, Result};
