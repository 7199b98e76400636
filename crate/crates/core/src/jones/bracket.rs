//! Kauffman bracket by sweeping crossings one at a time and keeping, for every
//! crossingless matching of the cut edges, its accumulated coefficient.

use std::collections::HashMap;

use super::diagram::PlanarDiagram;
use super::JonesError;
use crate::poly::TPoly;
use crate::Integer;

#[derive(Clone, Copy, Debug)]
pub struct BracketConfig {
    /// Largest number of cut edges allowed between processed and unprocessed crossings.
    pub width_cap: usize,
}

impl Default for BracketConfig {
    fn default() -> Self {
        BracketConfig { width_cap: 26 }
    }
}

/// `δ = −t² − t⁻²`, the value of a circle.
pub(crate) fn delta() -> TPoly<Integer> {
    TPoly::from_terms([(2, Integer::from(-1)), (-2, Integer::from(-1))])
}

fn delta_pow(k: usize, cache: &mut Vec<TPoly<Integer>>) -> &TPoly<Integer> {
    while cache.len() <= k {
        let next = match cache.last() {
            None => TPoly::one(),
            Some(p) => p * &delta(),
        };
        cache.push(next);
    }
    &cache[k]
}

/// Partial bracket of a sliced diagram: the cut edges in `frontier` order and,
/// for each way they are paired up by arcs already resolved, its coefficient.
/// `pairing[i]` is the frontier slot joined to slot `i`.
#[derive(Clone, Debug)]
pub struct TLVector {
    frontier: Vec<usize>,
    states: HashMap<Vec<u8>, TPoly<Integer>>,
}

impl TLVector {
    fn empty() -> Self {
        TLVector { frontier: Vec::new(), states: HashMap::from([(Vec::new(), TPoly::one())]) }
    }

    pub fn width(&self) -> usize {
        self.frontier.len()
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> impl Iterator<Item = (&[u8], &TPoly<Integer>)> {
        self.states.iter().map(|(k, v)| (k.as_slice(), v))
    }
}

#[derive(Clone, Copy)]
enum Port {
    /// The edge is already cut; it sits in this frontier slot.
    Closes(usize),
    /// Both ends of the edge are at this crossing, the other one at this port.
    Kink(usize),
    /// The edge becomes a new cut edge.
    Opens,
}

/// Absorb one crossing (dense edge ids in port order) into the vector.
fn absorb(
    v: &TLVector,
    x: &[usize; 4],
    smoothings: &[[(usize, usize); 2]; 2],
    dpow: &mut Vec<TPoly<Integer>>,
) -> TLVector {
    let f = v.frontier.len();
    let ports: [Port; 4] = std::array::from_fn(|i| {
        if let Some(s) = v.frontier.iter().position(|&e| e == x[i]) {
            Port::Closes(s)
        } else if let Some(j) = (0..4).find(|&j| j != i && x[j] == x[i]) {
            Port::Kink(j)
        } else {
            Port::Opens
        }
    });
    let closed: Vec<bool> = (0..f).map(|s| ports.iter().any(|p| matches!(p, Port::Closes(c) if *c == s))).collect();

    // Node ids: slots 0..f, ports f..f+4.  New frontier: surviving slots, then opened ports.
    let mut new_index = vec![usize::MAX; f + 4];
    let mut frontier = Vec::new();
    for s in 0..f {
        if !closed[s] {
            new_index[s] = frontier.len();
            frontier.push(v.frontier[s]);
        }
    }
    for i in 0..4 {
        if matches!(ports[i], Port::Opens) {
            new_index[f + i] = frontier.len();
            frontier.push(x[i]);
        }
    }

    // Links that do not depend on the state: edges into the crossing.
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    for i in 0..4 {
        match ports[i] {
            Port::Closes(s) => fixed.push((s, f + i)),
            Port::Kink(j) if j > i => fixed.push((f + i, f + j)),
            _ => {}
        }
    }

    let mut out: HashMap<Vec<u8>, TPoly<Integer>> = HashMap::new();
    let n = f + 4;
    let mut adj: Vec<[usize; 2]> = vec![[usize::MAX; 2]; n];
    let mut links: Vec<(usize, usize)> = Vec::with_capacity(f + 8);
    for (pairing, coeff) in &v.states {
        for (s, arcs) in smoothings.iter().enumerate() {
            links.clear();
            links.extend(fixed.iter().copied());
            for a in 0..f {
                let b = pairing[a] as usize;
                if a < b {
                    links.push((a, b));
                }
            }
            links.extend(arcs.iter().map(|&(p, q)| (f + p, f + q)));
            adj.iter_mut().for_each(|a| *a = [usize::MAX; 2]);
            for (id, &(a, b)) in links.iter().enumerate() {
                for node in [a, b] {
                    let slot = if adj[node][0] == usize::MAX { 0 } else { 1 };
                    adj[node][slot] = id;
                }
            }
            let other = |id: usize, node: usize| if links[id].0 == node { links[id].1 } else { links[id].0 };
            let mut used = vec![false; links.len()];
            let mut key = vec![0u8; frontier.len()];
            for start in 0..n {
                if new_index[start] == usize::MAX || used[adj[start][0]] {
                    continue;
                }
                let (mut node, mut id) = (start, adj[start][0]);
                loop {
                    used[id] = true;
                    node = other(id, node);
                    if new_index[node] != usize::MAX {
                        break;
                    }
                    id = if adj[node][0] == id { adj[node][1] } else { adj[node][0] };
                }
                key[new_index[start]] = new_index[node] as u8;
                key[new_index[node]] = new_index[start] as u8;
            }
            let mut loops = 0;
            for start in 0..links.len() {
                if used[start] {
                    continue;
                }
                loops += 1;
                let (mut node, mut id) = (links[start].0, start);
                while !used[id] {
                    used[id] = true;
                    node = other(id, node);
                    id = if adj[node][0] == id { adj[node][1] } else { adj[node][0] };
                }
            }
            let weight = if s == 0 { 1 } else { -1 };
            let term = (coeff * delta_pow(loops, dpow)).shift(weight);
            let slot = out.entry(key).or_insert_with(TPoly::zero);
            *slot = &*slot + &term;
        }
    }
    out.retain(|_, p| !p.is_zero());
    TLVector { frontier, states: out }
}

/// Crossing order that keeps the cut small: repeatedly take the crossing
/// whose absorption leaves the fewest cut edges.
fn greedy_order(xs: &[[usize; 4]], nedges: usize) -> Vec<usize> {
    let mut open = vec![false; nedges];
    let mut done = vec![false; xs.len()];
    let mut order = Vec::with_capacity(xs.len());
    for _ in 0..xs.len() {
        let best = (0..xs.len())
            .filter(|&c| !done[c])
            .min_by_key(|&c| {
                let closes = xs[c].iter().filter(|&&e| open[e]).count() as i64;
                let opens = xs[c]
                    .iter()
                    .enumerate()
                    .filter(|&(i, &e)| !open[e] && !xs[c].iter().enumerate().any(|(j, &g)| j != i && g == e))
                    .count() as i64;
                (opens - closes, -closes, c)
            })
            .unwrap();
        done[best] = true;
        for (i, &e) in xs[best].iter().enumerate() {
            let twice = xs[best].iter().enumerate().any(|(j, &g)| j != i && g == e);
            if !twice {
                open[e] = !open[e];
            }
        }
        order.push(best);
    }
    order
}

/// `⟨D⟩` with `⟨○⟩ = −t² − t⁻²` and `⟨∅⟩ = 1`: unnormalised, blackboard framed.
pub fn kauffman_bracket(d: &PlanarDiagram, cfg: &BracketConfig) -> Result<TPoly<Integer>, JonesError> {
    let (xs, n) = d.dense_edges();
    let order = greedy_order(&xs, n);
    kauffman_bracket_in_order(d, &order, cfg)
}

/// The bracket with crossings absorbed in a prescribed order.
pub fn kauffman_bracket_in_order(
    d: &PlanarDiagram,
    order: &[usize],
    cfg: &BracketConfig,
) -> Result<TPoly<Integer>, JonesError> {
    let (xs, _) = d.dense_edges();
    let mut seen = vec![false; xs.len()];
    if order.len() != xs.len() || order.iter().any(|&c| c >= xs.len() || std::mem::replace(&mut seen[c], true)) {
        return Err(JonesError::Malformed("crossing order is not a permutation".into()));
    }
    let mut dpow = Vec::new();
    let mut v = TLVector::empty();
    for &c in order {
        let smoothings = d.crossings()[c].smoothings();
        v = absorb(&v, &xs[c], &smoothings, &mut dpow);
        if v.width() > cfg.width_cap {
            return Err(JonesError::WidthCap { width: v.width(), cap: cfg.width_cap });
        }
    }
    debug_assert_eq!(v.width(), 0);
    let closed = v.states.remove(&Vec::new()).unwrap_or_else(TPoly::zero);
    let loops = delta_pow(d.free_loops(), &mut dpow).clone();
    Ok(&closed * &loops)
}
