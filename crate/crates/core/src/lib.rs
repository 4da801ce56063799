//! Preferred extensions of abstract argumentation frameworks, computed by
//! reducing them to naive-set enumeration.
//!
//! Three routes are provided:
//!
//! * [`recognition`] decides whether the naive sets already are the
//!   preferred extensions;
//! * [`recasting`] adds attacks to an admissible-closed framework so that
//!   its naive sets become the preferred extensions;
//! * [`lattice`] builds a framework on the irreducible self-defending sets
//!   whose naive sets map onto the preferred extensions by union.
//!
//! Naive sets are listed with polynomial delay by [`misenum`]. The
//! exhaustive [`oracle`] checks all of the above on small inputs.

pub mod error;
pub mod fixtures;
pub mod framework;
pub mod generators;
pub mod implication;
pub mod lattice;
pub mod misenum;
pub mod oracle;
pub mod parse;
pub mod recasting;
pub mod recognition;
pub mod set;

pub use error::{Error, ParseError, Result};
pub use framework::{Argument, ArgumentationFramework, ConflictGraph};
pub use implication::{Implication, ImplicationalSystem};
pub use lattice::{IrreducibleIndex, MetaFramework};
pub use misenum::UndirectedGraph;
pub use oracle::{OracleLimit, Semantics};
pub use set::{ArgumentSet, SetFamily};
