//! Sharp recovery structures for linear codes over finite fields.

pub mod bench;
pub mod cli;
pub mod code;
pub mod error;
pub mod gf;
pub mod io;
mod key;
pub mod oracle;
pub mod order;
pub mod recovery;
pub mod testset;

pub use code::LinearCode;
pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use recovery::{sharp_structure, RecoveryStructure};
pub use testset::TestSet;
