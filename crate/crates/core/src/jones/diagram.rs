use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::JonesError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// `X[a, b, c, d]`: edges counterclockwise starting at the incoming under-strand.
/// The over-strand joins `b` and `d`; the crossing is positive when it runs
/// from `d` to `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [u32; 4],
    pub sign: Sign,
}

impl Crossing {
    /// The two pairings of ports: weight `t` first, weight `t⁻¹` second.
    pub fn smoothings(&self) -> [[(usize, usize); 2]; 2] {
        [[(0, 1), (2, 3)], [(0, 3), (1, 2)]]
    }

    /// Same crossing seen from the other side of the page.
    pub fn mirrored(&self) -> Crossing {
        let [a, b, c, d] = self.edges;
        let edges = match self.sign {
            Sign::Positive => [d, a, b, c],
            Sign::Negative => [b, c, d, a],
        };
        Crossing { edges, sign: self.sign.flip() }
    }
}

/// Crossing list plus any crossingless circles, blackboard framed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// `k_±`, `s_±` and the writhe of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramStats {
    pub k_plus: usize,
    pub k_minus: usize,
    pub s_plus: usize,
    pub s_minus: usize,
    pub w: i64,
}

impl DiagramStats {
    pub fn k(&self) -> usize {
        self.k_plus + self.k_minus
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            y = std::mem::replace(&mut self.0[y], r);
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
    fn components(&mut self) -> usize {
        (0..self.0.len()).filter(|&i| self.find(i) == i).count()
    }
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, JonesError> {
        let mut count: HashMap<u32, usize> = HashMap::new();
        for c in &crossings {
            for e in c.edges {
                *count.entry(e).or_default() += 1;
            }
        }
        if let Some((e, n)) = count.iter().find(|(_, &n)| n != 2) {
            return Err(JonesError::Malformed(format!("edge {e} appears {n} times")));
        }
        Ok(PlanarDiagram { crossings, free_loops })
    }

    pub fn unknot() -> Self {
        PlanarDiagram { crossings: Vec::new(), free_loops: 1 }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.as_i64()).sum()
    }

    pub fn mirror(&self) -> Self {
        PlanarDiagram {
            crossings: self.crossings.iter().map(Crossing::mirrored).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Dense relabelling of edges to `0..2k`, for array-indexed algorithms.
    pub(crate) fn dense_edges(&self) -> (Vec<[usize; 4]>, usize) {
        let mut ids: HashMap<u32, usize> = HashMap::new();
        let xs = self
            .crossings
            .iter()
            .map(|c| {
                c.edges.map(|e| {
                    let n = ids.len();
                    *ids.entry(e).or_insert(n)
                })
            })
            .collect();
        (xs, ids.len())
    }

    /// Number of circles after smoothing every crossing the same way
    /// (`0` = the weight-`t` smoothing).
    pub fn state_circles(&self, choice: impl Fn(usize) -> usize) -> usize {
        let (xs, n) = self.dense_edges();
        let mut uf = UnionFind::new(n);
        for (i, (x, c)) in xs.iter().zip(&self.crossings).enumerate() {
            for (p, q) in c.smoothings()[choice(i)] {
                uf.union(x[p], x[q]);
            }
        }
        uf.components() + self.free_loops
    }

    pub fn stats(&self) -> DiagramStats {
        let k_plus = self.crossings.iter().filter(|c| c.sign == Sign::Positive).count();
        DiagramStats {
            k_plus,
            k_minus: self.crossings.len() - k_plus,
            s_plus: self.state_circles(|_| 0),
            s_minus: self.state_circles(|_| 1),
            w: self.writhe(),
        }
    }

    /// Components of the underlying link.
    pub fn components(&self) -> usize {
        let (xs, n) = self.dense_edges();
        let mut uf = UnionFind::new(n);
        for x in &xs {
            uf.union(x[0], x[2]);
            uf.union(x[1], x[3]);
        }
        uf.components() + self.free_loops
    }

    /// Every edge runs from an under-port to an over-port.
    pub fn is_alternating(&self) -> bool {
        let mut under: HashMap<u32, usize> = HashMap::new();
        for c in &self.crossings {
            for e in [c.edges[0], c.edges[2]] {
                *under.entry(e).or_default() += 1;
            }
        }
        // 2k under-ports over 2k edges: each edge must get exactly one.
        under.values().all(|&n| n == 1)
    }
}

/// Free-function form of [`PlanarDiagram::stats`].
pub fn diagram_stats(d: &PlanarDiagram) -> DiagramStats {
    d.stats()
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            let [a, b, cc, d] = c.edges;
            let s = if c.sign == Sign::Positive { '+' } else { '-' };
            writeln!(f, "X {a} {b} {cc} {d} {s}")?;
        }
        for _ in 0..self.free_loops {
            writeln!(f, "O")?;
        }
        Ok(())
    }
}

impl FromStr for PlanarDiagram {
    type Err = JonesError;

    /// One crossing per line, `X a b c d [+|-]`; `O` adds a free circle and
    /// `#` starts a comment.
    fn from_str(s: &str) -> Result<Self, JonesError> {
        let mut crossings = Vec::new();
        let mut loops = 0;
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| JonesError::Parse { line: i + 1, msg: msg.to_string() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["O"] => loops += 1,
                ["X", a, b, c, d, s] => {
                    let mut edges = [0u32; 4];
                    for (slot, f) in edges.iter_mut().zip([a, b, c, d]) {
                        *slot = f.parse().map_err(|_| bad("edge labels must be nonnegative integers"))?;
                    }
                    let sign = match *s {
                        "+" => Sign::Positive,
                        "-" => Sign::Negative,
                        _ => return Err(bad("sign must be + or -")),
                    };
                    crossings.push(Crossing { edges, sign });
                }
                _ => return Err(bad("expected `X a b c d [+|-]` or `O`")),
            }
        }
        PlanarDiagram::new(crossings, loops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X 1 4 2 5 -\nX 3 6 4 1 -\nX 5 2 6 3 -\n";

    #[test]
    fn parse_roundtrip() {
        let d: PlanarDiagram = TREFOIL.parse().unwrap();
        assert_eq!(d.num_crossings(), 3);
        assert_eq!(d.to_string(), TREFOIL);
        assert_eq!(d.to_string().parse::<PlanarDiagram>().unwrap(), d);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("X 1 2 3 +".parse::<PlanarDiagram>(), Err(JonesError::Parse { line: 1, .. })));
        assert!(matches!("X 1 2 3 4 *".parse::<PlanarDiagram>(), Err(JonesError::Parse { .. })));
        assert!(matches!("X 1 2 3 4 +".parse::<PlanarDiagram>(), Err(JonesError::Malformed(_))));
    }

    #[test]
    fn trefoil_stats() {
        let d: PlanarDiagram = TREFOIL.parse().unwrap();
        let s = d.stats();
        assert_eq!((s.k_plus, s.k_minus, s.w), (0, 3, -3));
        assert!(s.s_plus + s.s_minus <= s.k() + 2);
        assert_eq!(s.s_plus + s.s_minus, 5);
        assert!(d.is_alternating());
        assert_eq!(d.components(), 1);
        let m = d.mirror();
        assert_eq!(m.writhe(), 3);
        assert_eq!((m.stats().s_plus, m.stats().s_minus), (s.s_minus, s.s_plus));
    }

    #[test]
    fn unknot_circle() {
        let s = PlanarDiagram::unknot().stats();
        assert_eq!((s.k(), s.s_plus, s.s_minus, s.w), (0, 1, 1, 0));
    }
}
