pub mod base_change;
pub mod beliefset_change;
pub mod cli;
pub mod error;
pub mod formula;
pub mod horn_change;
pub mod limits;
pub mod postulates;
pub mod semantics;
pub mod verify;

pub use error::{Error, Result};
pub use formula::{Atom, Formula, Signature};
pub use limits::Limits;
