//! Interval graph recognition and interval model synthesis.
//!
//! A graph is an interval graph iff its maximal cliques admit a linear order
//! in which the cliques containing any one vertex are consecutive. Models
//! are built from such an order: vertex `v` gets the open interval
//! `(first, last + 1)` over the positions of the cliques containing it.
//!
//! The search core works on `u64` adjacency masks restricted to a vertex
//! subset; see [`is_interval_masked`].

use std::collections::HashSet;

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::graph::{Graph, MASK_CAP};

/// Default vertex cap for clique enumeration and recognition.
pub const CLIQUE_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    intervals: Vec<(Coord, Coord)>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(Coord, Coord)>) -> Result<IntervalModel> {
        if let Some(v) = intervals.iter().position(|(lo, hi)| lo >= hi) {
            return Err(Error::InvalidModels(format!("interval of vertex {v} is empty")));
        }
        Ok(IntervalModel { intervals })
    }

    pub fn intervals(&self) -> &[(Coord, Coord)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Graph in which `u ~ v` iff the open intervals of `u` and `v` meet.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.intervals.len();
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| {
                let (a, b) = (&self.intervals[u], &self.intervals[v]);
                a.0 < b.1 && b.0 < a.1
            })
            .collect();
        Graph::new(n, edges).expect("pairs are distinct")
    }
}

/// Maximal cliques in an order where each vertex's cliques are consecutive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueOrder {
    cliques: Vec<Vec<usize>>,
}

impl CliqueOrder {
    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    /// Integer model over clique positions for a graph on `n` vertices.
    pub fn model(&self, n: usize) -> IntervalModel {
        let mut span: Vec<Option<(usize, usize)>> = vec![None; n];
        for (pos, clique) in self.cliques.iter().enumerate() {
            for &v in clique {
                span[v] = Some(match span[v] {
                    None => (pos, pos),
                    Some((first, _)) => (first, pos),
                });
            }
        }
        let intervals = span
            .into_iter()
            .map(|s| {
                let (first, last) = s.expect("every vertex lies in a maximal clique");
                (Coord::int(first as i64), Coord::int(last as i64 + 1))
            })
            .collect();
        IntervalModel { intervals }
    }
}

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).unwrap();
    for v in bits(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Maximal cliques of the subgraph induced on `verts`, as masks, sorted by
/// their vertex lists.
pub fn maximal_cliques_masked(adj: &[u64], verts: u64) -> Vec<u64> {
    let local: Vec<u64> = adj.iter().map(|a| a & verts).collect();
    let mut out = Vec::new();
    bron_kerbosch(&local, 0, verts, 0, &mut out);
    out.sort_by_key(|&m| bits(m).collect::<Vec<_>>());
    out
}

/// All maximal cliques, each once, as sorted vertex lists in lexicographic
/// order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.n() > CLIQUE_CAP {
        return Err(Error::TooLarge { n: g.n(), cap: CLIQUE_CAP });
    }
    let adj = g.adjacency_masks()?;
    Ok(maximal_cliques_masked(&adj, full_mask(g.n())).into_iter().map(|m| bits(m).collect()).collect())
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Chordality of the subgraph induced on `verts`, by maximum cardinality
/// search and a perfect-elimination check.
pub fn is_chordal_masked(adj: &[u64], verts: u64) -> bool {
    let mut weight = [0u8; 64];
    let mut pos = [0u8; 64];
    let mut numbered = 0u64;
    let mut step = 0u8;
    let mut left = verts;
    while left != 0 {
        let v = bits(left).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        let earlier = adj[v] & numbered;
        if earlier != 0 {
            let u = bits(earlier).max_by_key(|&u| pos[u]).unwrap();
            let rest = earlier & !(1 << u);
            if rest & !adj[u] != 0 {
                return false;
            }
        }
        pos[v] = step;
        step += 1;
        numbered |= 1 << v;
        left &= !(1 << v);
        for w in bits(adj[v] & left) {
            weight[w] += 1;
        }
    }
    true
}

/// Whether the subgraph induced on `verts` contains an asteroidal triple.
pub fn has_asteroidal_triple_masked(adj: &[u64], verts: u64) -> bool {
    let vs: Vec<usize> = bits(verts).collect();
    let k = vs.len();
    if k < 3 {
        return false;
    }
    // comp[i][j]: component of G[verts - N[vs[i]]] containing vs[j], 0 if none.
    let mut comp = vec![0u64; k * k];
    for (i, &c) in vs.iter().enumerate() {
        let mut remaining = verts & !adj[c] & !(1 << c);
        while remaining != 0 {
            let seed = remaining & remaining.wrapping_neg();
            let mut component = seed;
            loop {
                let grown = bits(component).fold(component, |acc, v| acc | (adj[v] & remaining));
                if grown == component {
                    break;
                }
                component = grown;
            }
            remaining &= !component;
            for (j, &v) in vs.iter().enumerate() {
                if component >> v & 1 == 1 {
                    comp[i * k + j] = component;
                }
            }
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            if adj[vs[a]] >> vs[b] & 1 == 1 {
                continue;
            }
            for c in b + 1..k {
                if adj[vs[a]] >> vs[c] & 1 == 1 || adj[vs[b]] >> vs[c] & 1 == 1 {
                    continue;
                }
                let joined = |avoid: usize, from: usize, to: usize| comp[avoid * k + from] >> vs[to] & 1 == 1;
                if joined(c, a, b) && joined(a, b, c) && joined(b, a, c) {
                    return true;
                }
            }
        }
    }
    false
}

/// Interval-graph test on an induced subgraph: chordal and free of
/// asteroidal triples. This is the hot predicate of the decision search.
pub fn is_interval_masked(adj: &[u64], verts: u64) -> bool {
    is_chordal_masked(adj, verts) && !has_asteroidal_triple_masked(adj, verts)
}

/// Consecutive order of the maximal cliques of the subgraph induced on
/// `verts`, or `None` if there is none. Deterministic: the first order
/// found trying cliques in sorted order.
pub fn clique_order_masked(adj: &[u64], verts: u64) -> Option<Vec<u64>> {
    let cliques = maximal_cliques_masked(adj, verts);
    let m = cliques.len();
    if m > 64 {
        return None;
    }
    let mut failed: HashSet<(u64, usize)> = HashSet::new();

    #[allow(clippy::too_many_arguments)]
    fn place(
        cliques: &[u64],
        placed: u64,
        last: usize,
        seen: u64,
        order: &mut Vec<usize>,
        failed: &mut HashSet<(u64, usize)>,
    ) -> bool {
        let m = cliques.len();
        if order.len() == m {
            return true;
        }
        if failed.contains(&(placed, last)) {
            return false;
        }
        let unplaced_union = (0..m).filter(|&i| placed >> i & 1 == 0).fold(0u64, |acc, i| acc | cliques[i]);
        // Vertices of the last clique still needed later must continue.
        let open = cliques[last] & unplaced_union;
        for next in 0..m {
            if placed >> next & 1 == 1 {
                continue;
            }
            let c = cliques[next];
            if c & seen & !cliques[last] != 0 || open & !c != 0 {
                continue;
            }
            order.push(next);
            if place(cliques, placed | 1 << next, next, seen | c, order, failed) {
                return true;
            }
            order.pop();
        }
        failed.insert((placed, last));
        false
    }

    if m == 0 {
        return Some(Vec::new());
    }
    let mut order = Vec::with_capacity(m);
    for first in 0..m {
        order.push(first);
        if place(&cliques, 1 << first, first, cliques[first], &mut order, &mut failed) {
            return Some(order.into_iter().map(|i| cliques[i]).collect());
        }
        order.pop();
    }
    None
}

/// Consecutive clique order of `g`, if `g` is an interval graph.
pub fn clique_order(g: &Graph) -> Result<Option<CliqueOrder>> {
    if g.n() > CLIQUE_CAP {
        return Err(Error::TooLarge { n: g.n(), cap: CLIQUE_CAP });
    }
    let adj = g.adjacency_masks()?;
    let verts = full_mask(g.n());
    if !is_chordal_masked(&adj, verts) {
        return Ok(None);
    }
    Ok(clique_order_masked(&adj, verts)
        .map(|order| CliqueOrder { cliques: order.into_iter().map(|m| bits(m).collect()).collect() }))
}

/// An interval model of `g` whose open-interval intersection graph is
/// exactly `g`, or `None` if `g` is not an interval graph.
pub fn recognize_interval(g: &Graph) -> Result<Option<IntervalModel>> {
    Ok(clique_order(g)?.map(|o| o.model(g.n())))
}

/// Fast yes/no interval test on a whole graph.
pub fn is_interval(g: &Graph) -> Result<bool> {
    if g.n() > MASK_CAP {
        return Err(Error::TooLarge { n: g.n(), cap: MASK_CAP });
    }
    let adj = g.adjacency_masks()?;
    Ok(is_interval_masked(&adj, full_mask(g.n())))
}
