//! Knot diagrams, the Kauffman bracket and colored Jones sequences of twist
//! knots and their (r,2)-cables.
//!
//! Normalisation: `J_U(n) = [n]`, `J_K(1) = 1`, framing 0, and
//! `J_K(n+1) = (−1)^n ⟨S_n(K)⟩` with the bracket variable `t`.

mod bracket;
mod builder;
mod cable;
mod diagram;
mod fast;
mod skein;

pub use bracket::{kauffman_bracket, kauffman_bracket_in_order, BracketConfig, TLVector};
pub use builder::{cable2_morse, twist_crossing_signs, twist_knot_diagram, twist_knot_morse, MorseDiagram, MorseOp};
pub use cable::{
    adequate_degree_bounds, cable_degree, cable_jones, cable_sequence, verify_cable_identity, verify_cable_pair,
    CableDegree,
};
pub use diagram::{diagram_stats, Crossing, DiagramStats, PlanarDiagram, Sign};
pub use fast::{colored_jones_fast, twist_sequence};
pub use skein::{chebyshev, colored_jones_morse, colored_jones_skein, SkeinConfig};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::qtorus::SequenceError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JonesError {
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("m = 0 is the unknot, not a twist knot")]
    ZeroTwist,
    #[error("cable parameter r = {0} must be odd")]
    EvenR(i64),
    #[error("colors start at 1, got {0}")]
    BadColor(i64),
    #[error("slice width {width} exceeds the cap {cap}")]
    WidthCap { width: usize, cap: usize },
    #[error("color {n} exceeds the skein color cap {cap}")]
    ColorCap { n: i64, cap: i64 },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Knots the sequence machinery knows how to name and cache.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnotId {
    Unknot,
    Twist(i64),
    Cable { m: i64, r: i64 },
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotId::Unknot => write!(f, "unknot"),
            KnotId::Twist(m) => write!(f, "twist({m})"),
            KnotId::Cable { m, r } => write!(f, "cable({m},{r})"),
        }
    }
}

impl FromStr for KnotId {
    type Err = JonesError;

    fn from_str(s: &str) -> Result<Self, JonesError> {
        let bad = || JonesError::Parse { line: 1, msg: format!("unknown knot id `{s}`") };
        let args = |inner: &str| -> Result<Vec<i64>, JonesError> {
            inner.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
        };
        let s = s.trim();
        if s == "unknot" {
            return Ok(KnotId::Unknot);
        }
        if let Some(inner) = s.strip_prefix("twist(").and_then(|r| r.strip_suffix(')')) {
            if let [m] = args(inner)?[..] {
                return Ok(KnotId::Twist(m));
            }
        }
        if let Some(inner) = s.strip_prefix("cable(").and_then(|r| r.strip_suffix(')')) {
            if let [m, r] = args(inner)?[..] {
                return Ok(KnotId::Cable { m, r });
            }
        }
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knot_id_roundtrip() {
        for k in [KnotId::Unknot, KnotId::Twist(-3), KnotId::Cable { m: 1, r: 9 }] {
            assert_eq!(k.to_string().parse::<KnotId>().unwrap(), k);
        }
        assert!("twist(a)".parse::<KnotId>().is_err());
    }
}
