//! Parametrized families of Hopf algebras and their cocycles.

pub mod bosonization;
pub mod double;
pub mod en;
pub mod group;
pub mod monomial;
mod words;

pub use bosonization::*;
pub use double::*;
pub use en::*;
pub use group::*;
pub use monomial::*;
