//! End-to-end AJ verification for twist-knot cables, with the `≐` comparator,
//! the applicability condition, an on-disk value cache and JSON reports.

mod cache;
mod condition;
mod equiv;
mod verify;

use thiserror::Error;

use crate::apoly::ApolyError;
use crate::guess::GuessError;
use crate::jones::JonesError;
use crate::poly::PolyError;
use crate::qtorus::SequenceError;

pub use cache::{read_sequence_file, write_sequence_file, Cache, CACHE_ENV, EVALUATOR_VERSION};
pub use condition::{theorem_condition, threshold_condition};
pub use equiv::{m_equiv, Convention, Equivalence};
pub use verify::{
    verify_aj, verify_unknot, CapsReport, Stage, UnknotReport, Verdict, VerificationReport, VerifyConfig, REPORT_SCHEMA,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("m = 0 is the unknot, not a twist knot")]
    ZeroTwist,
    #[error("cable parameter r = {0} must be odd")]
    EvenR(i64),
    #[error("sequence file line {line}: {msg}")]
    SequenceFile { line: usize, msg: String },
    #[error("cache: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Jones(#[from] JonesError),
    #[error(transparent)]
    Guess(#[from] GuessError),
    #[error(transparent)]
    Apoly(#[from] ApolyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}
