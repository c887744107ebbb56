//! Root data, Weyl group elements and word combinatorics.
//!
//! Everything lives in the root lattice: a weight is a coordinate vector in
//! the basis of simple roots, and `r_i(α_j) = α_j − a_ij α_i`. Generator
//! indices are zero-based in the API and one-based when displayed.

mod cartan;
mod mat;
pub mod perm;
mod weyl;
mod word;

pub use cartan::{reflect_weight, CartanData, Weight};
pub(crate) use mat::Mat;
pub use weyl::{bruhat_leq, demazure_product, element_of_word, enumerate_group, reduced_words, WeylElement};
pub use word::{subwords_by_product, subwords_with_product, Subword, SubwordMode, Word, MAX_WORD_LEN};
