//! Diagrams drawn as a top-to-bottom sequence of caps, crossings and cups.
//!
//! Strands occupy integer positions on a horizontal line. Building a diagram
//! this way makes blackboard parallels trivial: every position becomes a band
//! of `n` positions and every crossing a grid of `n²` crossings.

use super::diagram::{Crossing, PlanarDiagram, Sign};
use super::JonesError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorseOp {
    /// New arc occupying positions `i, i+1`.
    Cap(usize),
    /// Join positions `i, i+1` and remove them.
    Cup(usize),
    /// Strands at `i, i+1` swap; `left_over` says the strand coming from
    /// the upper left passes over.
    Cross { at: usize, left_over: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseDiagram {
    pub ops: Vec<MorseOp>,
}

// Port order around a crossing, counterclockwise: TL, BL, BR, TR.
// Strands run TL–BR (ports 0, 2) and BL–TR (ports 1, 3).
const TL: usize = 0;
const BL: usize = 1;
const BR: usize = 2;
const TR: usize = 3;

fn opposite(port: usize) -> usize {
    (port & !3) | ((port + 2) & 3)
}

impl MorseDiagram {
    pub fn new(ops: Vec<MorseOp>) -> Self {
        MorseDiagram { ops }
    }

    /// One circle, no crossings.
    pub fn unknot() -> Self {
        MorseDiagram { ops: vec![MorseOp::Cap(0), MorseOp::Cup(0)] }
    }

    pub fn mirror(&self) -> Self {
        let ops = self
            .ops
            .iter()
            .map(|op| match *op {
                MorseOp::Cross { at, left_over } => MorseOp::Cross { at, left_over: !left_over },
                other => other,
            })
            .collect();
        MorseDiagram { ops }
    }

    /// Blackboard `n`-parallel: each strand replaced by `n` copies.
    pub fn parallel(&self, n: usize) -> Self {
        assert!(n >= 1);
        let mut ops = Vec::new();
        for op in &self.ops {
            match *op {
                MorseOp::Cap(i) => ops.extend((0..n).map(|k| MorseOp::Cap(i * n + k))),
                MorseOp::Cup(i) => ops.extend((0..n).map(|k| MorseOp::Cup(i * n + n - 1 - k))),
                MorseOp::Cross { at, left_over } => {
                    // Move each strand of the right band leftwards across the left band.
                    for j in 0..n {
                        for s in (j..j + n).rev() {
                            ops.push(MorseOp::Cross { at: at * n + s, left_over });
                        }
                    }
                }
            }
        }
        MorseDiagram { ops }
    }

    fn crossing_count(&self) -> usize {
        self.ops.iter().filter(|op| matches!(op, MorseOp::Cross { .. })).count()
    }

    /// Oriented PD code; each component is oriented by walking it from its
    /// lowest-numbered port, and edges are labelled consecutively along the walk.
    pub fn to_pd(&self) -> Result<PlanarDiagram, JonesError> {
        let k = self.crossing_count();
        let mut next_node = 4 * k;
        let mut links: Vec<(usize, usize)> = Vec::new();
        let mut pos: Vec<usize> = Vec::new();
        let mut over: Vec<bool> = Vec::with_capacity(k);
        let bad = |msg: String| JonesError::Malformed(msg);
        for (step, op) in self.ops.iter().enumerate() {
            match *op {
                MorseOp::Cap(i) => {
                    if i > pos.len() {
                        return Err(bad(format!("step {step}: cap at {i} beyond {} strands", pos.len())));
                    }
                    let (a, b) = (next_node, next_node + 1);
                    next_node += 2;
                    links.push((a, b));
                    pos.splice(i..i, [a, b]);
                }
                MorseOp::Cup(i) => {
                    if i + 1 >= pos.len() {
                        return Err(bad(format!("step {step}: cup at {i} with {} strands", pos.len())));
                    }
                    links.push((pos[i], pos[i + 1]));
                    pos.drain(i..i + 2);
                }
                MorseOp::Cross { at, left_over } => {
                    if at + 1 >= pos.len() {
                        return Err(bad(format!("step {step}: crossing at {at} with {} strands", pos.len())));
                    }
                    let c = 4 * over.len();
                    links.push((pos[at], c + TL));
                    links.push((pos[at + 1], c + TR));
                    pos[at] = c + BL;
                    pos[at + 1] = c + BR;
                    over.push(left_over);
                }
            }
        }
        if !pos.is_empty() {
            return Err(bad(format!("{} strands left open", pos.len())));
        }

        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); next_node];
        for (id, &(a, b)) in links.iter().enumerate() {
            adj[a].push(id);
            adj[b].push(id);
        }
        let other_end = |link: usize, node: usize| {
            let (a, b) = links[link];
            if a == node {
                b
            } else {
                a
            }
        };
        // Resolve chains of cap/cup nodes into port-to-port edges.
        let mut partner = vec![usize::MAX; 4 * k];
        let mut used = vec![false; links.len()];
        for p in 0..4 * k {
            if partner[p] != usize::MAX {
                continue;
            }
            let (mut node, mut link) = (p, adj[p][0]);
            loop {
                used[link] = true;
                node = other_end(link, node);
                if node < 4 * k {
                    break;
                }
                link = if adj[node][0] == link { adj[node][1] } else { adj[node][0] };
            }
            partner[p] = node;
            partner[node] = p;
        }
        // Whatever is left forms crossingless circles.
        let mut loops = 0;
        for start in 0..links.len() {
            if used[start] {
                continue;
            }
            loops += 1;
            let (mut node, mut link) = (links[start].0, start);
            while !used[link] {
                used[link] = true;
                node = other_end(link, node);
                link = if adj[node][0] == link { adj[node][1] } else { adj[node][0] };
            }
        }

        let mut label = vec![0u32; 4 * k];
        let mut incoming = vec![false; 4 * k];
        let mut visited = vec![false; 4 * k];
        let mut next_label = 1u32;
        for p0 in 0..4 * k {
            if visited[p0] {
                continue;
            }
            let mut exit = p0;
            loop {
                let enter = partner[exit];
                label[exit] = next_label;
                label[enter] = next_label;
                next_label += 1;
                incoming[enter] = true;
                visited[exit] = true;
                visited[enter] = true;
                exit = opposite(enter);
                if exit == p0 {
                    break;
                }
            }
        }

        let crossings = (0..k)
            .map(|c| {
                let base = 4 * c;
                let under = if over[c] { [BL, TR] } else { [TL, BR] };
                let u = if incoming[base + under[0]] { under[0] } else { under[1] };
                let edges = std::array::from_fn(|i| label[base + (u + i) % 4]);
                let over_in = if incoming[base + (u + 3) % 4] { Sign::Positive } else { Sign::Negative };
                Crossing { edges, sign: over_in }
            })
            .collect();
        PlanarDiagram::new(crossings, loops)
    }
}

/// Caps on (0,1), (2,3), then `a` half-twists of the middle strands, a
/// two-crossing clasp on the left pair, and cups on (1,2), (0,3).
fn two_bridge(a: usize, twist_left_over: bool, clasp_left_over: bool) -> MorseDiagram {
    let mut ops = vec![MorseOp::Cap(0), MorseOp::Cap(2)];
    ops.extend((0..a).map(|_| MorseOp::Cross { at: 1, left_over: twist_left_over }));
    ops.extend((0..2).map(|_| MorseOp::Cross { at: 0, left_over: clasp_left_over }));
    ops.extend([MorseOp::Cup(1), MorseOp::Cup(0)]);
    MorseDiagram::new(ops)
}

/// Expected `(k_+, k_−)` of the reduced twist-knot diagram.
pub fn twist_crossing_signs(m: i64) -> (usize, usize) {
    if m > 0 {
        (2 * m as usize, 2)
    } else {
        ((1 - 2 * m) as usize, 0)
    }
}

/// The reduced alternating diagram of `K_m`: a clasp plus `|m|` full twists,
/// with chirality fixed by the crossing-sign counts `(k_+, k_−)`.
pub fn twist_knot_morse(m: i64) -> Result<MorseDiagram, JonesError> {
    if m == 0 {
        return Err(JonesError::ZeroTwist);
    }
    let a = if m > 0 { 2 * m as usize } else { (-2 * m - 1) as usize };
    let want = twist_crossing_signs(m);
    for (tw, cl) in [(true, false), (false, true)] {
        for d in [two_bridge(a, tw, cl), two_bridge(a, tw, cl).mirror()] {
            let pd = d.to_pd()?;
            let s = pd.stats();
            if pd.components() == 1 && pd.is_alternating() && (s.k_plus, s.k_minus) == want {
                return Ok(d);
            }
        }
    }
    Err(JonesError::Malformed(format!("no plat diagram matches K_{m}")))
}

pub fn twist_knot_diagram(m: i64) -> Result<PlanarDiagram, JonesError> {
    twist_knot_morse(m)?.to_pd()
}

/// Diagram of the `(r,2)`-cable: the blackboard 2-parallel with `r − 2w`
/// extra half-twists between the two copies.
pub fn cable2_morse(base: &MorseDiagram, r: i64) -> Result<MorseDiagram, JonesError> {
    let w = base.to_pd()?.writhe();
    let h = r - 2 * w;
    let par = base.parallel(2);
    let Some(first_cap) = par.ops.iter().position(|op| matches!(op, MorseOp::Cap(_))) else {
        return Err(JonesError::Malformed("base diagram has no caps".into()));
    };
    let at = match par.ops[first_cap] {
        MorseOp::Cap(i) => i,
        _ => unreachable!(),
    };
    // After the two nested caps the copies of one strand sit at `at`, `at+1`.
    let build = |left_over: bool| {
        let mut ops = par.ops.clone();
        let twist = (0..h.unsigned_abs()).map(|_| MorseOp::Cross { at, left_over });
        ops.splice(first_cap + 2..first_cap + 2, twist);
        MorseDiagram::new(ops)
    };
    let want = if h >= 0 { Sign::Positive } else { Sign::Negative };
    for left_over in [true, false] {
        let d = build(left_over);
        let pd = d.to_pd()?;
        if h == 0 || pd.crossings()[0].sign == want {
            return Ok(d);
        }
    }
    unreachable!("one of the two over/under choices has the wanted sign")
}
