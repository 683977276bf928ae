pub mod alphabet;
pub mod cli;
pub mod error;
pub mod finite;
pub mod formats;
pub mod infinite;
pub mod reproduce;
pub mod shift;
pub mod wang;

pub use alphabet::{Alphabet, Sym, Word};
pub use error::{Error, Result};
