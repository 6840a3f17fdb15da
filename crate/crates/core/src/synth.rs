//! stub
use crate::alphabet::Letter;
use crate::morphism::Morphism;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepNote { FixedPointCase, LimitCase, UltimatelyPeriodic }

#[derive(Debug, Clone)]
pub struct MorphicRep {
    pub prepend: Word,
    pub drop: usize,
    pub seed: Letter,
    pub generator: Morphism,
    pub coding: Morphism,
    pub note: RepNote,
}
