//! Chord-diagram toolkit: arc numbers of circle immersions, the odd
//! obstruction family `C_{2n+1}`, and planar realizability of Gauss codes.
//!
//! A diagram has arc number 2 exactly when it has no sub-diagram equivalent to
//! some `C_{2n+1}`. [`arcnum`] decides arc = 2 with an antipodal scan,
//! [`obstruction`] extracts a witness otherwise, and [`enumerate`] checks the
//! two sides against each other over every small diagram.

pub mod arcnum;
pub mod cli;
pub mod curves;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod obstruction;
pub mod realize;
pub mod render;

pub use arcnum::{arc_number, find_cutting_pair, ArcPartition, CuttingPair};
pub use diagram::{CanonicalCode, Chord, ChordDiagram, Format, GapIndex};
pub use error::{Error, Result};
pub use obstruction::{find_obstruction, make_c, ObstructionWitness};

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Brute-force arc number (chords).
    pub bruteforce: usize,
    /// Obstruction subset search (chords).
    pub subset: usize,
    /// Matching enumeration (chords).
    pub enumeration: usize,
    /// Theorem and lemma verification (chords).
    pub verify: usize,
    /// Rotation-system search (chords).
    pub genus: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            bruteforce: arcnum::DEFAULT_BRUTEFORCE_GUARD,
            subset: obstruction::DEFAULT_SUBSET_GUARD,
            enumeration: enumerate::DEFAULT_ENUMERATION_GUARD,
            verify: enumerate::DEFAULT_VERIFY_GUARD,
            genus: realize::DEFAULT_GENUS_GUARD,
        }
    }
}

impl Guards {
    pub fn uniform(limit: usize) -> Self {
        Guards {
            bruteforce: limit,
            subset: limit,
            enumeration: limit,
            verify: limit,
            genus: limit,
        }
    }
}
