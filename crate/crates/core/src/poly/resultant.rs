use std::collections::HashMap;

use super::multi::{MultiLaurent, Var};
use super::PolyError;
use crate::scalar::Ring;

/// Coefficients of `f` as a polynomial in `v`, index = power.
fn coefficients<C: Ring>(f: &MultiLaurent<C>, v: Var) -> Result<Vec<MultiLaurent<C>>, PolyError> {
    let parts = f.by_power(v);
    if parts.keys().next().is_some_and(|&k| k < 0) {
        return Err(PolyError::NegativeExponent(v));
    }
    let deg = parts.keys().next_back().copied().unwrap_or(0) as usize;
    let mut out = vec![MultiLaurent::zero(); deg + 1];
    for (k, c) in parts {
        out[k as usize] = c;
    }
    Ok(out)
}

/// Determinant by Laplace expansion along rows, memoised on the set of used
/// columns. Exponential in the size, which stays tiny for Sylvester matrices
/// of the degrees that occur here, but division-free so it works over any ring.
fn determinant<C: Ring>(m: &[Vec<MultiLaurent<C>>]) -> MultiLaurent<C> {
    let n = m.len();
    assert!(n <= 30, "matrix too large for cofactor expansion");
    let mut layer: HashMap<u32, MultiLaurent<C>> = HashMap::from([(0, MultiLaurent::one())]);
    for row in m {
        let mut next: HashMap<u32, MultiLaurent<C>> = HashMap::new();
        for (mask, acc) in &layer {
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                // Inversions contributed by placing column j after the used ones.
                let above = (mask >> (j + 1)).count_ones();
                let mut term = acc * entry;
                if above % 2 == 1 {
                    term = -term;
                }
                let slot = next.entry(mask | (1 << j)).or_insert_with(MultiLaurent::zero);
                *slot += &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
    }
    layer.remove(&((1u32 << n).wrapping_sub(1))).unwrap_or_else(MultiLaurent::zero)
}

/// Resultant eliminating `v`, normalised to `lc(f)^{deg g} · Π g(αᵢ)` over the
/// roots `αᵢ` of `f`.
pub fn resultant<C: Ring>(f: &MultiLaurent<C>, g: &MultiLaurent<C>, v: Var) -> Result<MultiLaurent<C>, PolyError> {
    let fc = coefficients(f, v)?;
    let gc = coefficients(g, v)?;
    let (df, dg) = (fc.len() - 1, gc.len() - 1);
    if df == 0 && dg == 0 {
        return Err(PolyError::NoDegree(v));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(MultiLaurent::zero());
    }
    let n = df + dg;
    let mut rows = Vec::with_capacity(n);
    for i in 0..dg {
        let mut row = vec![MultiLaurent::zero(); n];
        for k in 0..=df {
            row[i + k] = fc[df - k].clone();
        }
        rows.push(row);
    }
    for i in 0..df {
        let mut row = vec![MultiLaurent::zero(); n];
        for k in 0..=dg {
            row[i + k] = gc[dg - k].clone();
        }
        rows.push(row);
    }
    Ok(determinant(&rows))
}
