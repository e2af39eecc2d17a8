//! Newton-Okounkov polytopes of complete flag varieties of the classical
//! groups, computed from lowest-term valuations on open Schubert cell
//! coordinates and certified against FFLV and Gelfand-Zetlin polytopes.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`] exact rational scalars, sparse polynomials, lex orders, minors;
//! * [`rootdata`] classical group types, dominant weights, Weyl dimensions and degrees;
//! * [`schubertcell`] the coordinate matrix of the open cell with dependent entries eliminated;
//! * [`valuation`] lowest-term valuations and Plücker minor spaces;
//! * [`polytope`] exact rational polyhedral kernel;
//! * [`patterns`] GZ and FFLV polytopes from tables and Dyck paths;
//! * [`nobody`] the end-to-end certification pipeline.

pub mod error;
pub mod exactalg;
pub mod nobody;
pub mod patterns;
pub mod polytope;
pub mod rootdata;
pub mod schubertcell;
pub mod valuation;

pub use error::{Error, Result};
pub use exactalg::{ExponentVector, Rational, SparsePolynomial, VariableOrder};
pub use nobody::{CertificationReport, NOBodyResult, Pipeline, Verdict};
pub use polytope::{HPolytope, LatticeSpec, VPolytope};
pub use rootdata::{DominantWeight, Family, GroupType};
pub use schubertcell::CellModel;
pub use valuation::{MinorSpace, ValuationPoint};
