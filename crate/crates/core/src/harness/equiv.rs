use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::apoly::APoly;
use crate::poly::{strip_monomial, Var};
use crate::IntPoly;

/// Which substitution made the second argument proportional to the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Identity,
    InvertL,
    InvertM,
    InvertBoth,
}

impl Convention {
    pub const ALL: [Convention; 4] =
        [Convention::Identity, Convention::InvertL, Convention::InvertM, Convention::InvertBoth];

    fn apply_poly(self, p: &IntPoly) -> IntPoly {
        let (l, m) = match self {
            Convention::Identity => return p.clone(),
            Convention::InvertL => (true, false),
            Convention::InvertM => (false, true),
            Convention::InvertBoth => (true, true),
        };
        p.map_monomials(|e| {
            let mut e = *e;
            if l {
                e[Var::L.idx()] = -e[Var::L.idx()];
            }
            if m {
                e[Var::M.idx()] = -e[Var::M.idx()];
            }
            e
        })
    }
}

impl Convention {
    /// The substituted polynomial, with unit monomials cleared.
    pub fn apply(self, p: &APoly) -> APoly {
        APoly::new(strip_monomial(&self.apply_poly(p.poly()))).expect("a substitution keeps the polynomial nonzero")
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Identity => "identity",
            Convention::InvertL => "L -> 1/L",
            Convention::InvertM => "M -> 1/M",
            Convention::InvertBoth => "L -> 1/L, M -> 1/M",
        })
    }
}

/// Outcome of [`m_equiv`]: `convention` is the first variant that matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub convention: Option<Convention>,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.convention.is_some()
    }

    pub fn holds_directly(&self) -> bool {
        self.convention == Some(Convention::Identity)
    }
}

/// `f ≐ g`: `f/g` is free of `L` once unit monomials are cleared. The mirror
/// conventions `L → L⁻¹` and `M → M⁻¹` are tried after the identity.
/// Zero inputs cannot reach here: [`APoly`] refuses them.
pub fn m_equiv(f: &APoly, g: &APoly) -> Equivalence {
    let convention = Convention::ALL.into_iter().find(|c| proportional(f.poly(), &c.apply_poly(g.poly())));
    Equivalence { convention }
}

fn proportional(f: &IntPoly, g: &IntPoly) -> bool {
    let split = |p: &IntPoly| -> BTreeMap<i32, IntPoly> { strip_monomial(p).by_power(Var::L) };
    let (f, g) = (split(f), split(g));
    if !f.keys().eq(g.keys()) {
        return false;
    }
    let pairs: Vec<(&IntPoly, &IntPoly)> = f.values().zip(g.values()).collect();
    pairs.iter().enumerate().all(|(i, (fi, gi))| pairs[i + 1..].iter().all(|(fj, gj)| *fi * *gj == *fj * *gi))
}
