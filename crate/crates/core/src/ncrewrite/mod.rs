//! Noncommutative normal ordering over a presented algebra.
//!
//! A [`Presentation`] lists generators in their normal-form order together
//! with a rewrite rule for every out-of-order adjacent pair. Polynomials are
//! sums of [`Word`]s; [`Presentation::normal_order`] rewrites the leftmost
//! out-of-order pair of runs until every word is sorted.

mod confluence;
mod hom;
mod json;
mod parse;
mod poly;
mod presentation;
pub mod render;
mod tensor;
mod word;

pub use confluence::{alphabet, confluence_check, ConfluenceReport};
pub use hom::{apply_hom, power_image};
pub use json::{half_string, parse_half, poly_from_json, poly_to_json};
pub use parse::parse;
pub use poly::NCPoly;
pub use presentation::{GenKind, Generator, Presentation, PresentationBuilder, Sector, DEFAULT_GUARD};
pub use render::{RenderScalar, Style};
pub use tensor::{embed, embed_word, split_word, tensor_power, tensor_product, tensor_square, tensor_word};
pub use word::{Letter, Run, Word};
