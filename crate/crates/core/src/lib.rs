//! Flat plumbing baskets: encode a braid as a flat basket code, decode a code
//! back into its boundary link, compute invariants, and enumerate small codes.

pub mod basket;
pub mod braid;
pub mod coder;
mod error;
pub mod enumerate;
pub mod invariants;

pub use basket::{FlatBasketCode, LinkDiagram};
pub use braid::BraidWord;
pub use error::{BraidError, CodeError, EnumerateError, LinkError, ParseError};
