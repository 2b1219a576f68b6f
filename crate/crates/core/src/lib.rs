//! S3-colorings of link diagrams.
//!
//! A coloring assigns a non-identity element of the symmetric group S3 to
//! every arc of a diagram such that at each crossing with over arc `x`,
//! incoming under arc `y` and outgoing under arc `z`,
//! `x y = z x` (positive crossing) or `x z = y x` (negative crossing).
//!
//! The crate provides the group kernel ([`group`]), the diagram model
//! ([`diagram`]), family generators and text formats ([`notation`]), the
//! enumeration engine and linear invariants ([`solver`]), Reidemeister
//! insertions ([`moves`]) and the verification sweeps behind the CLI
//! ([`verify`]).

pub mod diagram;
pub mod error;
pub mod group;
pub mod moves;
pub mod notation;
pub mod par;
pub mod solver;
pub mod verify;

pub use diagram::{ArcId, Crossing, Diagram, Sign};
pub use error::{Error, ParseError, Result};
pub use group::{ClassLabel, S3Element};
pub use notation::FamilySpec;
pub use par::Exec;
pub use solver::{Classification, Coloring, Palette};
