#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use trvg::geometry::interiors_disjoint;
use trvg::{Graph, Layout, Mode, Rect};

/// Up to `n` rectangles with integer corners in `0..grid`, interiors
/// pairwise disjoint. Ids are `r0, r1, ...`.
pub fn random_disjoint_layout<R: Rng>(rng: &mut R, n: usize, grid: i64) -> Layout {
    let mut rects: Vec<Rect> = Vec::new();
    let mut tries = 0;
    while rects.len() < n && tries < 2000 {
        tries += 1;
        let x0 = rng.gen_range(0..grid - 1);
        let y0 = rng.gen_range(0..grid - 1);
        let x1 = rng.gen_range(x0 + 1..=(x0 + 4).min(grid));
        let y1 = rng.gen_range(y0 + 1..=(y0 + 4).min(grid));
        let r = Rect::from_ints(format!("r{}", rects.len()), x0, x1, y0, y1).unwrap();
        if rects.iter().all(|o| interiors_disjoint(o, &r)) {
            rects.push(r);
        }
    }
    Layout::new(rects, Mode::Disjoint).unwrap()
}

/// Rectangles with integer corners that may overlap.
pub fn random_layout<R: Rng>(rng: &mut R, n: usize, grid: i64) -> Layout {
    let rects = (0..n)
        .map(|i| {
            let x0 = rng.gen_range(0..grid - 1);
            let y0 = rng.gen_range(0..grid - 1);
            let x1 = rng.gen_range(x0 + 1..=grid);
            let y1 = rng.gen_range(y0 + 1..=grid);
            Rect::from_ints(format!("r{i}"), x0, x1, y0, y1).unwrap()
        })
        .collect();
    Layout::new(rects, Mode::Intersecting).unwrap()
}

/// A random proper coloring of `g`: vertices in random order, each takes
/// a random allowed color or, sometimes, a new one. Colors are `0..k`.
pub fn random_proper_coloring<R: Rng>(rng: &mut R, g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut col: Vec<Option<usize>> = vec![None; g.n()];
    let mut k = 0;
    for &v in &order {
        let allowed: Vec<usize> = (0..k).filter(|&c| g.neighbors(v).iter().all(|&u| col[u] != Some(c))).collect();
        let c = if allowed.is_empty() || rng.gen_bool(0.2) { k } else { *allowed.choose(rng).unwrap() };
        if c == k {
            k += 1;
        }
        col[v] = Some(c);
    }
    col.into_iter().map(Option::unwrap).collect()
}

/// Graph with `n` vertices, each pair adjacent with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).unwrap()
}

/// Visibility edges computed straight from the coordinates, by rectangle
/// index: open projections overlap on either axis.
pub fn naive_edges(layout: &Layout) -> Vec<(usize, usize)> {
    let r = layout.rects();
    let mut out = Vec::new();
    for a in 0..r.len() {
        for b in a + 1..r.len() {
            let ys = r[a].y_lo().max(r[b].y_lo()) < r[a].y_hi().min(r[b].y_hi());
            let xs = r[a].x_lo().max(r[b].x_lo()) < r[a].x_hi().min(r[b].x_hi());
            if ys || xs {
                out.push((a, b));
            }
        }
    }
    out
}

/// `layout` realizes `g` with rectangle `i` as vertex `i`.
pub fn realizes_positionally(layout: &Layout, g: &Graph) -> bool {
    layout.len() == g.n() && naive_edges(layout) == g.edges().collect::<Vec<_>>()
}

/// `layout` realizes `g` with rectangle ids equal to vertex labels, or
/// positionally if `g` is unlabeled.
pub fn realizes_by_label(layout: &Layout, g: &Graph) -> bool {
    if g.labels().is_none() {
        return realizes_positionally(layout, g);
    }
    if layout.len() != g.n() {
        return false;
    }
    let idx: Vec<usize> = match layout.rects().iter().map(|r| g.vertex_by_label(r.id())).collect() {
        Some(v) => v,
        None => return false,
    };
    let mut got: Vec<(usize, usize)> =
        naive_edges(layout).into_iter().map(|(a, b)| (idx[a].min(idx[b]), idx[a].max(idx[b]))).collect();
    got.sort();
    got == g.edges().collect::<Vec<_>>()
}
