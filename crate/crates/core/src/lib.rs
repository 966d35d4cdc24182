//! Explicit representing matrices for every irreducible representation of the
//! symmetric group `S_n`, the monomial group `S^(r)_n` (the wreath product of a
//! cyclic group of order `r` with `S_n`) and the hyperoctahedral group `H_n`.
//!
//! Each irreducible module is cut out of a permutation module on words by a
//! Specht matrix with entries in `{0, +1, -1}`. The representing matrix of a
//! group element `g` in the standard basis is
//! `(M [g]_X)^heart * (M^heart)^-1`, where `M^heart` is the square submatrix
//! on the rows and columns coming from standard tableaux. All arithmetic is
//! exact; entries for `S^(r)_n` live in the cyclotomic integers.
//!
//! Composition is left-to-right throughout: `x.(gh) = (x.g).h`, and matrices
//! act on row vectors.

pub mod combinat;
pub mod cyclo;
pub mod groups;
pub mod linalg;
pub mod repmod;
pub mod shapes;
pub mod specht;
pub mod verify;
pub mod words;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use cyclo::CycloInt;
pub use groups::{Element, MonomialElement, Permutation, SignedPermutation};
pub use repmod::{CharacterTable, RepMatrix, SpechtModule};
pub use shapes::{BiPartition, MultiPartition, Partition, Shape};
pub use specht::{Heart, SpechtMatrix, WordPair};
pub use words::{Letter, Word};

/// The three word systems, one per group family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Words over `[n]`, acted on by `S_n`.
    Plain,
    /// `r`-words: letters carry a radius and a phase in `Z/r`; the group is `S^(r)_n`.
    RWord(u32),
    /// Biwords: letters carry a phase in `{-1, 0, +1}`; the group is `H_n`.
    BiWord,
}

impl Flavor {
    /// Order of the roots of unity in the group (1 for `S_n`, 2 for `H_n`).
    pub fn r(self) -> u32 {
        match self {
            Flavor::Plain => 1,
            Flavor::RWord(r) => r,
            Flavor::BiWord => 2,
        }
    }

    /// Order of the cyclotomic ring the representing matrices live in.
    pub fn scalar_order(self) -> u32 {
        match self {
            Flavor::RWord(r) => r,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Plain => "plain",
            Flavor::RWord(_) => "rword",
            Flavor::BiWord => "biword",
        }
    }

    /// Builds a flavor from its name and an `r` that only matters for `rword`.
    pub fn from_name(name: &str, r: u32) -> Result<Self, Error> {
        match name {
            "plain" => Ok(Flavor::Plain),
            "rword" if r >= 1 => Ok(Flavor::RWord(r)),
            "rword" => Err(Error::Parse("rword needs r >= 1".into())),
            "biword" => Ok(Flavor::BiWord),
            other => Err(Error::Parse(format!("unknown flavor {other:?}"))),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::RWord(r) => write!(f, "rword({r})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Flavor {
    type Err = Error;

    /// Accepts `plain`, `biword`, `rword(3)` and `rword3`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("rword") {
            let digits = rest.trim_start_matches('(').trim_end_matches(')');
            let r = digits
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad flavor {s:?}")))?;
            return Flavor::from_name("rword", r);
        }
        Flavor::from_name(s, 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid value: {0}")]
    Invalid(String),
    #[error("refusing to build {what} of size {size}: exceeds cap {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },
    #[error("incompatible: {0}")]
    Incompatible(String),
    #[error("pair is not free: {0}")]
    NotFree(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Cyclo(#[from] cyclo::CycloError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Size limits; exceeding one is a refusal, never a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group that may be enumerated element by element.
    pub group: u128,
    /// Largest word orbit that may be listed.
    pub orbit: u128,
    /// Largest Specht matrix (rows times columns) that may be materialized.
    pub matrix: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group: 1_000_000,
            orbit: 1_000_000,
            matrix: 10_000_000,
        }
    }
}

impl Caps {
    pub(crate) fn check(what: &str, size: u128, cap: u128) -> Result<()> {
        if size > cap {
            Err(Error::CapExceeded {
                what: what.to_string(),
                size,
                cap,
            })
        } else {
            Ok(())
        }
    }
}
