//! Built-in cloning-system instances.

pub mod matrix;
pub mod power;
pub mod signed;
pub mod symmetric;
pub mod trivial;

pub use matrix::MatrixSystem;
pub use power::{CyclicGroup, PowerSystem, S3Base};
pub use signed::SignedSystem;
pub use symmetric::SymmetricSystem;
pub use trivial::TrivialSystem;
