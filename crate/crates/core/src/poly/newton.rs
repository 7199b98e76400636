use std::collections::BTreeSet;

use super::multi::{MultiLaurent, Var};
use super::PolyError;
use crate::scalar::Ring;

/// Lattice point `(L-exponent, M-exponent)`.
pub type Point = (i64, i64);

/// Convex hull vertices, counterclockwise from the lexicographically smallest.
/// Collinear boundary points are not vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonPolygon {
    pub vertices: Vec<Point>,
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

impl NewtonPolygon {
    /// Andrew's monotone chain; strict turns only.
    pub fn hull<I: IntoIterator<Item = Point>>(points: I) -> Option<Self> {
        let pts: Vec<Point> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if pts.is_empty() {
            return None;
        }
        if pts.len() <= 2 {
            return Some(NewtonPolygon { vertices: pts });
        }
        let mut lower: Vec<Point> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Point> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        // All points collinear: the chain degenerates to the two endpoints.
        lower.dedup();
        if lower.len() == 2 && lower[0] == lower[1] {
            lower.pop();
        }
        Some(NewtonPolygon { vertices: lower })
    }

    pub fn vertex_set(&self) -> BTreeSet<Point> {
        self.vertices.iter().copied().collect()
    }

    /// Inside or on the boundary.
    pub fn contains(&self, p: Point) -> bool {
        match self.vertices.as_slice() {
            [] => false,
            [a] => *a == p,
            [a, b] => {
                cross(*a, *b, p) == 0
                    && (a.0.min(b.0)..=a.0.max(b.0)).contains(&p.0)
                    && (a.1.min(b.1)..=a.1.max(b.1)).contains(&p.1)
            }
            vs => (0..vs.len()).all(|i| cross(vs[i], vs[(i + 1) % vs.len()], p) >= 0),
        }
    }

    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let sums = self.vertices.iter().flat_map(|a| other.vertices.iter().map(move |b| (a.0 + b.0, a.1 + b.1)));
        NewtonPolygon::hull(sums).expect("sum of nonempty polygons")
    }
}

/// Newton polygon of a polynomial in `L, M`.
pub fn newton_polygon<C: Ring>(f: &MultiLaurent<C>) -> Result<NewtonPolygon, PolyError> {
    if let Some(v) = f.variables().into_iter().find(|v| !matches!(v, Var::L | Var::M)) {
        return Err(PolyError::UnexpectedVariable(v));
    }
    NewtonPolygon::hull(f.terms().map(|(e, _)| (e[Var::L.idx()] as i64, e[Var::M.idx()] as i64))).ok_or(PolyError::Zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn single_monomial() {
        let f = MultiLaurent::<BigInt>::term(5, &[(Var::L, 2), (Var::M, 3)]);
        assert_eq!(newton_polygon(&f).unwrap().vertices, vec![(2, 3)]);
    }

    #[test]
    fn segment_and_square() {
        let seg = NewtonPolygon::hull([(0, 6), (1, 0)]).unwrap();
        assert_eq!(seg.vertices, vec![(0, 6), (1, 0)]);
        let sq = NewtonPolygon::hull([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0)]).unwrap();
        assert_eq!(sq.vertices, vec![(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert!(sq.contains((1, 1)) && sq.contains((2, 1)) && !sq.contains((3, 0)));
    }

    #[test]
    fn collinear_points_reduce_to_endpoints() {
        let seg = NewtonPolygon::hull([(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
        assert_eq!(seg.vertices, vec![(0, 0), (3, 3)]);
        assert!(seg.contains((2, 2)) && !seg.contains((2, 1)));
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(newton_polygon(&MultiLaurent::<BigInt>::zero()), Err(PolyError::Zero));
    }
}
