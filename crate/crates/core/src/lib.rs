//! Computation with morphic words and their subshifts: lazy fixed-point
//! expansion, letter growth classification, subshift factor oracles,
//! lexicographically extremal words under arbitrary total orders, forced
//! prefix (cone) analysis, return words and derived words, and synthesis of
//! verified finite morphic representations of extremal words.

pub mod alphabet;
pub mod caps;
pub mod cases;
pub mod classify;
mod error;
pub mod factors;
pub mod format;
pub mod lazy;
pub mod morphism;
pub mod mx;
pub mod oracle;
pub mod returns;
pub mod synth;
pub mod word;

pub use alphabet::{parse_order, Alphabet, LexCmp, Letter, TotalOrder};
pub use caps::Caps;
pub use error::{Error, Result};
pub use factors::FactorSet;
pub use lazy::LazyWord;
pub use morphism::Morphism;
pub use oracle::FactorOracle;
pub use synth::MorphicRep;
pub use word::Word;
