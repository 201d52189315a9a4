//! Brute-force reference checkers. They share no code path with the
//! production recognizer or the decision search and exist to cross-check
//! them on small inputs.

use std::collections::HashMap;

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::geometry::{Layout, Mode, Rect};
use crate::graph::Graph;
use crate::represent::extract;

/// Largest vertex count for [`is_interval_oracle`]'s subset enumeration.
pub const ORACLE_VERTEX_CAP: usize = 16;
/// Largest number of maximal cliques [`is_interval_oracle`] will permute.
pub const ORACLE_CLIQUE_CAP: usize = 12;
/// Default vertex cap for [`geometric_oracle`].
pub const GEOMETRIC_CAP: usize = 4;
/// Hard ceiling for [`geometric_oracle_with_cap`].
pub const GEOMETRIC_MAX: usize = 5;

fn subset_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let is_clique = |s: u32| (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || g.has_edge(u, v)));
    let mut out = Vec::new();
    for s in 1u32..(1u32 << n) {
        if !is_clique(s) {
            continue;
        }
        let maximal = (0..n).all(|w| s >> w & 1 == 1 || !is_clique(s | 1 << w));
        if maximal {
            out.push((0..n).filter(|&v| s >> v & 1 == 1).collect());
        }
    }
    out
}

/// Interval-graph test straight from the definition: some ordering of the
/// maximal cliques keeps every vertex's cliques consecutive. Cliques come
/// from subset enumeration; orders are enumerated exhaustively, abandoning
/// a prefix once it already separates some vertex's cliques.
pub fn is_interval_oracle(g: &Graph) -> Result<bool> {
    if g.n() > ORACLE_VERTEX_CAP {
        return Err(Error::TooLarge { n: g.n(), cap: ORACLE_VERTEX_CAP });
    }
    if g.n() == 0 {
        return Ok(true);
    }
    let cliques = subset_cliques(g);
    if cliques.len() > ORACLE_CLIQUE_CAP {
        return Err(Error::TooManyCliques { count: cliques.len(), cap: ORACLE_CLIQUE_CAP });
    }

    fn consecutive(prefix: &[usize], cliques: &[Vec<usize>], n: usize) -> bool {
        (0..n).all(|v| {
            let hits: Vec<usize> =
                prefix.iter().enumerate().filter(|(_, &c)| cliques[c].contains(&v)).map(|(i, _)| i).collect();
            hits.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }

    fn permute(prefix: &mut Vec<usize>, used: &mut [bool], cliques: &[Vec<usize>], n: usize) -> bool {
        if !consecutive(prefix, cliques, n) {
            return false;
        }
        if prefix.len() == cliques.len() {
            return true;
        }
        for i in 0..cliques.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            prefix.push(i);
            let ok = permute(prefix, used, cliques, n);
            prefix.pop();
            used[i] = false;
            if ok {
                return true;
            }
        }
        false
    }

    let mut used = vec![false; cliques.len()];
    Ok(permute(&mut Vec::new(), &mut used, &cliques, g.n()))
}

fn pair_index(u: usize, v: usize, n: usize) -> usize {
    debug_assert!(u < v);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Every pattern of pairwise open-interval overlaps that `n` intervals with
/// endpoints in `0..2n` can produce, restricted to patterns inside
/// `allowed`, with one witness placement each. `2n` positions suffice for
/// every weak ordering of the `2n` endpoints.
fn axis_patterns(n: usize, allowed: u32) -> HashMap<u32, Vec<(i64, i64)>> {
    let slots = 2 * n as i64;
    let mut out = HashMap::new();
    let mut cur: Vec<(i64, i64)> = Vec::with_capacity(n);

    fn rec(
        n: usize,
        slots: i64,
        allowed: u32,
        mask: u32,
        cur: &mut Vec<(i64, i64)>,
        out: &mut HashMap<u32, Vec<(i64, i64)>>,
    ) {
        let i = cur.len();
        if i == n {
            out.entry(mask).or_insert_with(|| cur.clone());
            return;
        }
        for lo in 0..slots {
            for hi in lo + 1..slots {
                let mut m = mask;
                for (j, &(a, b)) in cur.iter().enumerate() {
                    if a < hi && lo < b {
                        m |= 1 << pair_index(j, i, n);
                    }
                }
                if m & !allowed != 0 {
                    continue;
                }
                cur.push((lo, hi));
                rec(n, slots, allowed, m, cur, out);
                cur.pop();
            }
        }
    }

    rec(n, slots, allowed, 0, &mut cur, &mut out);
    out
}

/// Decides representability by enumerating layouts directly: every
/// placement of the `2n` x-endpoints and `2n` y-endpoints on a grid fine
/// enough to realize all their weak orderings. Visibility along each axis
/// depends only on that axis' placement, so the enumeration is done per
/// axis and the two halves are paired up. The witness layout is returned
/// after re-checking it with [`extract`].
pub fn geometric_witness(g: &Graph, mode: Mode, cap: usize) -> Result<Option<Layout>> {
    let n = g.n();
    if n > cap.min(GEOMETRIC_MAX) {
        return Err(Error::TooLarge { n, cap: cap.min(GEOMETRIC_MAX) });
    }
    let target: u32 = g.edges().fold(0, |m, (u, v)| m | 1 << pair_index(u, v, n));
    let patterns = axis_patterns(n, target);
    let mut keys: Vec<&u32> = patterns.keys().collect();
    keys.sort();
    for &x_mask in &keys {
        for &y_mask in &keys {
            let covers = x_mask | y_mask == target;
            let legal = mode == Mode::Intersecting || x_mask & y_mask == 0;
            if !(covers && legal) {
                continue;
            }
            let xs = &patterns[x_mask];
            let ys = &patterns[y_mask];
            let rects = (0..n)
                .map(|v| {
                    Rect::new(
                        g.label(v),
                        Coord::int(xs[v].0),
                        Coord::int(xs[v].1),
                        Coord::int(ys[v].0),
                        Coord::int(ys[v].1),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            let layout = Layout::new(rects, mode)?;
            let got = extract(&layout)?;
            assert!(got.same_edges(g), "geometric oracle produced a wrong witness");
            return Ok(Some(layout));
        }
    }
    Ok(None)
}

/// Whether `g` is a transparent rectangle visibility graph, by exhaustive
/// layout enumeration. Refuses graphs above [`GEOMETRIC_CAP`] vertices.
pub fn geometric_oracle(g: &Graph) -> Result<bool> {
    Ok(geometric_witness(g, Mode::Disjoint, GEOMETRIC_CAP)?.is_some())
}

/// [`geometric_oracle`] with an explicit cap, at most [`GEOMETRIC_MAX`].
pub fn geometric_oracle_with_cap(g: &Graph, cap: usize) -> Result<bool> {
    Ok(geometric_witness(g, Mode::Disjoint, cap)?.is_some())
}
