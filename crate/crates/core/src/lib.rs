//! Explicit bijection between lattice words and subgraphs of a labelled cycle.
//!
//! For `1 <= k <= n`, the words over `{R, U, D}` with `k` Rs, `k` Us and
//! `n - k` Ds whose first letter is not `D` are in one-to-one correspondence
//! with the subgraphs of the cycle on `0..2n` that have `n` edges and `k`
//! connected components (isolated vertices count as components).
//!
//! Both sides split into a "star" class and a "zero" class. A word is star
//! when some `D` has no `R` before it; a subgraph is star when it avoids
//! vertex `0`. Each word is summarised by a [`PqProfile`] (the lengths of the
//! gaps between consecutive `U`s and between consecutive `R`s), and the
//! profile places the components around the cycle.
//!
//! The crate also carries exhaustive enumerators for both sides, the
//! closed-form counts of each class, and a harness that checks the maps are
//! mutually inverse bijections for small parameters.

mod bijection;
mod count;
mod enumerate;
mod error;
mod params;
mod profile;
mod subgraph;
mod verify;
mod word;

pub use bijection::{
    star_profile_to_subgraph, subgraph_to_profile, subgraph_to_word, word_to_subgraph,
    zero_profile_to_subgraph,
};
pub use count::{binomial, count_table, count_w_star, count_w_zero, CountTable};
pub use enumerate::{enumerate_subgraphs, enumerate_words, Words};
pub use error::{Error, Result};
pub use params::CycleParams;
pub use profile::{profile_to_word, word_to_profile, PqProfile};
pub use subgraph::{classify_subgraph, expand_arc, normalize_edges, Arc, CycleSubgraph};
pub use verify::{verify_bijection, VerificationReport};
pub use word::{classify_word, parse_word, Letter, Word};

/// Which half of the partition a word, profile or subgraph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    /// Words with a `D` before every `R`; subgraphs avoiding vertex `0`.
    Star,
    /// Everything else.
    Zero,
}

pub type WordClass = Class;
pub type SubgraphClass = Class;

impl std::fmt::Display for Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Class::Star => f.write_str("star"),
            Class::Zero => f.write_str("zero"),
        }
    }
}
