//! Finite semigroups as Cayley tables, their embedded groups, and the
//! Smarandache taxonomy built on top of them.
//!
//! Products follow one convention everywhere: for transformations, `f·g`
//! applies `f` first and then `g`.

pub mod classify;
pub mod cosets;
pub mod error;
pub mod format;
pub mod group;
pub mod notions;
pub mod oracle;
pub mod products;
pub mod report;
pub mod semigroup;
pub mod subgroups;
pub mod transformation;
pub mod verify;

pub use error::{Error, Result};
pub use semigroup::{ElementSet, FiniteSemigroup};
pub use subgroups::{EmbeddedGroup, IdentityPolicy, SubgroupOptions};
pub use transformation::Transformation;
