//! The line-oriented term format `[e_t, e_M, e_L, num, den]`.

use std::fmt::Write;

use num_bigint::BigInt;

use super::multi::{exps, MultiLaurent, Var};
use super::PolyError;
use crate::scalar::Fraction;

/// One record per term, sorted by `(e_t, e_M, e_L)`.
pub fn write_terms<C: Fraction>(p: &MultiLaurent<C>) -> Result<String, PolyError> {
    for v in [Var::Lambda, Var::Z] {
        if p.involves(v) {
            return Err(PolyError::UnexpectedVariable(v));
        }
    }
    let mut out = String::new();
    for (e, c) in p.terms() {
        let (n, d) = c.to_fraction();
        writeln!(out, "[{}, {}, {}, {}, {}]", e[0], e[1], e[2], n, d).unwrap();
    }
    Ok(out)
}

/// Inverse of [`write_terms`]. Blank lines and `#` comments are skipped.
pub fn parse_terms<C: Fraction>(text: &str) -> Result<MultiLaurent<C>, PolyError> {
    let mut p = MultiLaurent::zero();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| PolyError::Parse { line: i + 1, msg: msg.to_string() };
        let inner = line
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| err("expected [e_t, e_M, e_L, num, den]"))?;
        let fields: Vec<&str> = inner.split(',').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(err("expected five fields"));
        }
        let mut e = [0i32; 3];
        for (slot, f) in e.iter_mut().zip(&fields[..3]) {
            *slot = f.parse().map_err(|_| err("bad exponent"))?;
        }
        let num: BigInt = fields[3].parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = fields[4].parse().map_err(|_| err("bad denominator"))?;
        let c = C::from_fraction(num, den).ok_or_else(|| err("coefficient not representable"))?;
        p.add_term(exps(&[(Var::T, e[0]), (Var::M, e[1]), (Var::L, e[2])]), c);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn roundtrip_sorted() {
        let p: MultiLaurent<BigRational> =
            MultiLaurent::term(3, &[(Var::T, 2), (Var::L, 1)]) - MultiLaurent::term(1, &[(Var::T, -2), (Var::M, 4)]);
        let text = write_terms(&p).unwrap();
        assert_eq!(text, "[-2, 4, 0, -1, 1]\n[2, 0, 1, 3, 1]\n");
        assert_eq!(parse_terms::<BigRational>(&text).unwrap(), p);
    }

    #[test]
    fn fractions_and_errors() {
        let p: MultiLaurent<BigRational> = parse_terms("# c\n[0, 1, 0, 1, 2]\n").unwrap();
        assert_eq!(p.coeff(&exps(&[(Var::M, 1)])), BigRational::new(1.into(), 2.into()));
        assert!(parse_terms::<BigInt>("[0, 1, 0, 1, 2]").is_err());
        assert!(matches!(parse_terms::<BigInt>("[0, 1]"), Err(PolyError::Parse { line: 1, .. })));
        let bad = MultiLaurent::<BigInt>::var(Var::Lambda);
        assert!(write_terms(&bad).is_err());
    }
}
