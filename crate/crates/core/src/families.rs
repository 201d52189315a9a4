//! Closed-form classifiers, edge bounds, constructions for complete
//! multipartite graphs, and the named fixtures.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::geometry::{sees, Axis, Layout, Mode, Rect};
use crate::graph::{complete_multipartite, Graph, PartList};
use crate::io::parse_layout;
use crate::represent::{decide_trvg, Budget, Screens, Verdict};

/// Whether `K_{p,q}` is a TRVG. Order-insensitive.
pub fn classify_bipartite(p: usize, q: usize) -> bool {
    let (p, q) = (p.min(q), p.max(q));
    p <= 2 || (p, q) == (3, 3) || (p, q) == (3, 4)
}

/// Whether `K_{a_1,...,a_k}` is a TRVG.
pub fn classify_multipartite(parts: &PartList) -> bool {
    let a = parts.sizes();
    match a.len() {
        1 => true,
        2 => classify_bipartite(a[0], a[1]),
        k => {
            let tail = (a[k - 3], a[k - 2], a[k - 1]);
            a[k - 2] <= 2 || matches!(tail, (1, 3, 3) | (1, 3, 4) | (2, 3, 3) | (2, 3, 4))
        }
    }
}

/// What is known about the complement of the squared cycle `C_n^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dn2Status {
    KnownYes,
    Open,
    KnownNo,
}

pub fn classify_dn2(n: usize) -> Result<Dn2Status> {
    match n {
        0..=4 => Err(Error::TooSmall { n, min: 5 }),
        5..=9 => Ok(Dn2Status::KnownYes),
        10..=14 => Ok(Dn2Status::Open),
        _ => Ok(Dn2Status::KnownNo),
    }
}

/// Outcome of a closed-form classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Class {
    #[serde(rename = "TRVG")]
    Trvg,
    #[serde(rename = "non-TRVG")]
    NonTrvg,
    #[serde(rename = "open")]
    Open,
}

impl Class {
    fn of(yes: bool) -> Class {
        if yes {
            Class::Trvg
        } else {
            Class::NonTrvg
        }
    }
}

/// A classification query as reported by the CLI and the service.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub graph: String,
    pub class: Class,
}

pub fn classify_multipartite_report(parts: &PartList) -> Classification {
    let sizes = parts.sizes().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
    Classification { graph: format!("K_{{{sizes}}}"), class: Class::of(classify_multipartite(parts)) }
}

pub fn classify_bipartite_report(p: usize, q: usize) -> Classification {
    Classification { graph: format!("K_{{{p},{q}}}"), class: Class::of(classify_bipartite(p, q)) }
}

pub fn classify_dn2_report(n: usize) -> Result<Classification> {
    let class = match classify_dn2(n)? {
        Dn2Status::KnownYes => Class::Trvg,
        Dn2Status::Open => Class::Open,
        Dn2Status::KnownNo => Class::NonTrvg,
    };
    Ok(Classification { graph: format!("D2_{n}"), class })
}

/// Maximum edge count of a `k`-partite TRVG on `n` vertices:
/// `2(k-1)n - k(k-1)`.
pub fn edge_bound(n: usize, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    2 * (k - 1) * n - k * (k - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundCheck {
    Within { k: usize, n: usize, e: usize },
    Violated { k: usize, n: usize, e: usize },
}

/// Compares `e(g)` with [`edge_bound`] for the given proper partition
/// (`parts[v]` is the part of vertex `v`; `k` counts the parts in use).
pub fn bound_check(g: &Graph, parts: &[usize]) -> Result<BoundCheck> {
    if parts.len() != g.n() {
        return Err(Error::InvalidArgument(format!("{} part indices for {} vertices", parts.len(), g.n())));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| parts[u] == parts[v]) {
        return Err(Error::NotKPartite { u, v });
    }
    let k = parts.iter().collect::<BTreeSet<_>>().len();
    let (n, e) = (g.n(), g.edge_count());
    Ok(if e as i64 > edge_bound(n, k) { BoundCheck::Violated { k, n, e } } else { BoundCheck::Within { k, n, e } })
}

/// A proper coloring with the fewest colors, by backtracking. Colors are
/// `0..k`; the first vertex in degree order gets color 0.
pub fn chromatic_partition(g: &Graph) -> Result<Vec<usize>> {
    let adj = g.adjacency_masks()?;
    let n = g.n();
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));

    fn color(i: usize, k: usize, used: usize, order: &[usize], adj: &[u64], col: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        // A fresh color is interchangeable with any other fresh color.
        for c in 0..k.min(used + 1) {
            let clash = order[..i].iter().any(|&u| adj[v] >> u & 1 == 1 && col[u] == c);
            if clash {
                continue;
            }
            col[v] = c;
            if color(i + 1, k, used.max(c + 1), order, adj, col) {
                return true;
            }
        }
        false
    }

    let mut col = vec![0; n];
    for k in 1..=n.max(1) {
        if color(0, k, 0, &order, &adj, &mut col) {
            return Ok(col);
        }
    }
    unreachable!("n colors always suffice")
}

/// Per ordered part pair, how many rectangles of part `j` each rectangle of
/// part `i` sees horizontally (`x`) and vertically (`y`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisibilityCounts {
    /// Rectangle indices of each part, in layout order.
    members: Vec<Vec<usize>>,
    /// `counts[i][j][l] = (x, y)` for the `l`-th rectangle of part `i`.
    counts: Vec<Vec<Vec<(usize, usize)>>>,
}

impl VisibilityCounts {
    pub fn parts(&self) -> usize {
        self.members.len()
    }

    pub fn part_size(&self, i: usize) -> usize {
        self.members[i].len()
    }

    pub fn members(&self, i: usize) -> &[usize] {
        &self.members[i]
    }

    /// Counts of the `l`-th rectangle of part `i` towards part `j`.
    pub fn get(&self, i: usize, j: usize, l: usize) -> (usize, usize) {
        self.counts[i][j][l]
    }

    /// Total over part `i` of sightings of part `j` along `axis`.
    pub fn total(&self, i: usize, j: usize, axis: Axis) -> usize {
        self.counts[i][j].iter().map(|&(x, y)| if axis == Axis::H { x } else { y }).sum()
    }
}

/// Tallies sightings between parts. `coloring[r]` is the part of rectangle
/// `r` (parts numbered from 0; empty parts are allowed). Same-part
/// rectangles must not see each other.
pub fn visibility_counts(layout: &Layout, coloring: &[usize]) -> Result<VisibilityCounts> {
    check_coloring_len(layout, coloring)?;
    layout.check_disjoint()?;
    let rects = layout.rects();
    for a in 0..rects.len() {
        for b in a + 1..rects.len() {
            if coloring[a] == coloring[b]
                && (sees(&rects[a], &rects[b], Axis::H) || sees(&rects[a], &rects[b], Axis::V))
            {
                return Err(Error::SamePartVisibility { a: rects[a].id().into(), b: rects[b].id().into() });
            }
        }
    }
    Ok(tally(layout, coloring))
}

/// [`visibility_counts`] without the disjointness and proper-coloring
/// checks.
pub fn visibility_tally(layout: &Layout, coloring: &[usize]) -> Result<VisibilityCounts> {
    check_coloring_len(layout, coloring)?;
    Ok(tally(layout, coloring))
}

fn check_coloring_len(layout: &Layout, coloring: &[usize]) -> Result<()> {
    if coloring.len() != layout.len() {
        return Err(Error::InvalidArgument(format!("{} colors for {} rectangles", coloring.len(), layout.len())));
    }
    Ok(())
}

fn tally(layout: &Layout, coloring: &[usize]) -> VisibilityCounts {
    let rects = layout.rects();
    let k = coloring.iter().max().map_or(0, |m| m + 1);
    let mut members = vec![Vec::new(); k];
    for (r, &p) in coloring.iter().enumerate() {
        members[p].push(r);
    }
    let counts = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    members[i]
                        .iter()
                        .map(|&a| {
                            let seen = |axis| {
                                members[j].iter().filter(|&&b| b != a && sees(&rects[a], &rects[b], axis)).count()
                            };
                            (seen(Axis::H), seen(Axis::V))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    VisibilityCounts { members, counts }
}

/// `n_j >= (sum over part i of sightings of part j along axis) - (n_i - 1)`.
pub fn sighting_inequality_holds(counts: &VisibilityCounts, i: usize, j: usize, axis: Axis) -> bool {
    let n_i = counts.part_size(i) as i64;
    let n_j = counts.part_size(j) as i64;
    n_j >= counts.total(i, j, axis) as i64 - (n_i - 1)
}

/// Adds one rectangle right of the bounding box spanning its full height,
/// and for `ids.len() == 2` a second one above it spanning its full width.
/// The new rectangles see every old one and not each other.
pub fn extend_cover_with_ids(layout: &Layout, ids: &[String]) -> Result<Layout> {
    if !(1..=2).contains(&ids.len()) {
        return Err(Error::InvalidArgument(format!("can add 1 or 2 covering rectangles, not {}", ids.len())));
    }
    let bb = layout.bounding_box()?;
    let one = Coord::int(1);
    let two = Coord::int(2);
    let mut out = layout.clone();
    out.push(Rect::new(
        ids[0].clone(),
        bb.x_hi().add(&one),
        bb.x_hi().add(&two),
        bb.y_lo().clone(),
        bb.y_hi().clone(),
    )?)?;
    if let Some(id) = ids.get(1) {
        out.push(Rect::new(
            id.clone(),
            bb.x_lo().clone(),
            bb.x_hi().clone(),
            bb.y_hi().add(&one),
            bb.y_hi().add(&two),
        )?)?;
    }
    Ok(out)
}

/// [`extend_cover_with_ids`] with generated ids `cover{i}`.
pub fn extend_cover(layout: &Layout, count: usize) -> Result<Layout> {
    let mut ids = Vec::new();
    let mut i = layout.len();
    while ids.len() < count {
        let id = format!("cover{i}");
        if layout.get(&id).is_none() {
            ids.push(id);
        }
        i += 1;
    }
    extend_cover_with_ids(layout, &ids)
}

fn part_labels(part: usize, size: usize) -> Vec<String> {
    (0..size).map(|j| format!("p{}_{}", part + 1, j + 1)).collect()
}

fn relabel(layout: &Layout, ids: &[String]) -> Result<Layout> {
    let rects = layout.rects().iter().zip(ids).map(|(r, id)| r.with_id(id.clone())).collect();
    Layout::new(rects, layout.mode())
}

/// Stored layouts of `K_{3,3}` and `K_{3,4}`, as produced by the search.
pub const K33_BASE_JSON: &str = include_str!("../fixtures/k33_base.json");
pub const K34_BASE_JSON: &str = include_str!("../fixtures/k34_base.json");

/// Layout of `K_{p,q}` (`p <= q`), ids in part order: the stored
/// layout for `(3,3)` and `(3,4)`, a fresh search otherwise.
fn base_layout(p: usize, q: usize) -> Result<Layout> {
    match (p, q) {
        (3, 3) => parse_layout(K33_BASE_JSON),
        (3, 4) => parse_layout(K34_BASE_JSON),
        _ => {
            let base_parts = PartList::new(vec![p, q])?;
            let decision = decide_trvg(&complete_multipartite(&base_parts), Budget::default(), Screens::NONE)?;
            match decision.verdict {
                Verdict::Yes(cert) => Ok(cert),
                _ => Err(Error::NotRepresentable(format!("search found no layout for K_{{{p},{q}}}"))),
            }
        }
    }
}

/// Representation of `K_{a_1,...,a_k}`: a searched representation of the
/// two largest parts, then one bounding-box cover per remaining part,
/// from `a_{k-2}` down to `a_1`. Rectangle ids match the labels of
/// [`complete_multipartite`].
pub fn construct_multipartite(parts: &PartList) -> Result<Layout> {
    if !classify_multipartite(parts) {
        return Err(Error::NotRepresentable(format!(
            "K_{:?} is not a TRVG by the complete multipartite classification",
            parts.sizes()
        )));
    }
    let a = parts.sizes();
    let k = a.len();
    if k == 1 {
        let rects = part_labels(0, a[0])
            .into_iter()
            .enumerate()
            .map(|(i, id)| {
                let i = i as i64;
                Rect::from_ints(id, i, i + 1, i, i + 1)
            })
            .collect::<Result<Vec<_>>>()?;
        return Layout::new(rects, Mode::Disjoint);
    }
    let cert = base_layout(a[k - 2], a[k - 1])?;
    let mut ids = part_labels(k - 2, a[k - 2]);
    ids.extend(part_labels(k - 1, a[k - 1]));
    let mut layout = relabel(&cert, &ids)?;
    for p in (0..k - 2).rev() {
        layout = extend_cover_with_ids(&layout, &part_labels(p, a[p]))?;
    }
    Ok(layout.normalize())
}

/// Named layouts and graphs shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Five abutting unit squares in a row.
    Fig1K5,
    /// The 13-vertex graph `G` separating the two classes.
    Fig6aG,
    /// The intersecting layout of `G`.
    Fig6bItrvg,
    /// A disjoint layout of `G'`.
    Fig7aGprime,
    /// `G'`: the subgraph of `G` induced on the A-, B- and C-vertices.
    GraphGprime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureValue {
    Layout(Layout),
    Graph(Graph),
}

pub const FIG1_K5_JSON: &str = include_str!("../fixtures/fig1_k5.json");
pub const FIG6B_ITRVG_JSON: &str = include_str!("../fixtures/fig6b_itrvg.json");
pub const FIG7A_GPRIME_JSON: &str = include_str!("../fixtures/fig7a_gprime.json");

impl Fixture {
    pub const ALL: [Fixture; 5] =
        [Fixture::Fig1K5, Fixture::Fig6aG, Fixture::Fig6bItrvg, Fixture::Fig7aGprime, Fixture::GraphGprime];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Fig1K5 => "fig1_k5",
            Fixture::Fig6aG => "fig6a_G",
            Fixture::Fig6bItrvg => "fig6b_itrvg",
            Fixture::Fig7aGprime => "fig7a_Gprime",
            Fixture::GraphGprime => "graph_Gprime",
        }
    }

    pub fn from_name(name: &str) -> Result<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
    }
}

fn fig6a_graph() -> Graph {
    let names = ["A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "D1", "D2", "D3", "E1", "E2"];
    let group = |p: char| -> Vec<usize> { (0..names.len()).filter(|&i| names[i].starts_with(p)).collect() };
    let mut edges = Vec::new();
    for (x, y) in [('A', 'B'), ('B', 'C'), ('C', 'D'), ('D', 'E')] {
        for &u in &group(x) {
            for &v in &group(y) {
                edges.push((u, v));
            }
        }
    }
    edges.push((6, 7));
    Graph::new(names.len(), edges)
        .and_then(|g| g.with_labels(names.iter().map(|s| s.to_string()).collect()))
        .expect("fixture graph is simple")
}

pub fn fixture(which: Fixture) -> FixtureValue {
    let layout = |text: &str| FixtureValue::Layout(parse_layout(text).expect("shipped fixture parses"));
    match which {
        Fixture::Fig1K5 => layout(FIG1_K5_JSON),
        Fixture::Fig6bItrvg => layout(FIG6B_ITRVG_JSON),
        Fixture::Fig7aGprime => layout(FIG7A_GPRIME_JSON),
        Fixture::Fig6aG => FixtureValue::Graph(fig6a_graph()),
        Fixture::GraphGprime => {
            let g = fig6a_graph();
            FixtureValue::Graph(g.induced(&[0, 1, 2, 3, 4, 5, 6, 7]).expect("in range"))
        }
    }
}

/// Canonical document text of a fixture: the shipped file for layouts, a
/// graph document for graphs.
pub fn fixture_text(which: Fixture) -> String {
    match which {
        Fixture::Fig1K5 => FIG1_K5_JSON.to_string(),
        Fixture::Fig6bItrvg => FIG6B_ITRVG_JSON.to_string(),
        Fixture::Fig7aGprime => FIG7A_GPRIME_JSON.to_string(),
        Fixture::Fig6aG | Fixture::GraphGprime => crate::io::serialize_graph(&fixture_graph(which)),
    }
}

/// The fixture as a layout; panics on a graph fixture.
pub fn fixture_layout(which: Fixture) -> Layout {
    match fixture(which) {
        FixtureValue::Layout(l) => l,
        FixtureValue::Graph(_) => panic!("{} is a graph fixture", which.name()),
    }
}

/// The fixture as a graph; panics on a layout fixture.
pub fn fixture_graph(which: Fixture) -> Graph {
    match fixture(which) {
        FixtureValue::Graph(g) => g,
        FixtureValue::Layout(_) => panic!("{} is a layout fixture", which.name()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphic;
    use crate::represent::extract;

    fn pl(v: &[usize]) -> PartList {
        PartList::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bipartite_classification() {
        assert!(classify_bipartite(3, 4));
        assert!(classify_bipartite(4, 3));
        assert!(!classify_bipartite(3, 5));
        assert!(!classify_bipartite(4, 4));
        assert!(classify_bipartite(2, 1_000_000));
    }

    #[test]
    fn multipartite_classification() {
        assert!(!classify_multipartite(&pl(&[3, 3, 3])));
        assert!(classify_multipartite(&pl(&[2, 3, 4])));
        assert!(classify_multipartite(&pl(&[2, 2, 2, 2])));
        assert!(!classify_multipartite(&pl(&[1, 3, 5])));
        assert!(classify_multipartite(&pl(&[7])));
    }

    #[test]
    fn dn2_status() {
        assert_eq!(classify_dn2(9).unwrap(), Dn2Status::KnownYes);
        assert_eq!(classify_dn2(12).unwrap(), Dn2Status::Open);
        assert_eq!(classify_dn2(20).unwrap(), Dn2Status::KnownNo);
        assert!(classify_dn2(4).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(edge_bound(10, 2), 18);
        assert_eq!(edge_bound(8, 2), 14);
        assert_eq!(edge_bound(7, 2), 12);
        assert_eq!(edge_bound(9, 3), 30);
        let k44 = complete_multipartite(&pl(&[4, 4]));
        assert_eq!(bound_check(&k44, &pl(&[4, 4]).membership()).unwrap(), BoundCheck::Violated { k: 2, n: 8, e: 16 });
        let k333 = complete_multipartite(&pl(&[3, 3, 3]));
        assert!(matches!(bound_check(&k333, &pl(&[3, 3, 3]).membership()).unwrap(), BoundCheck::Within { .. }));
        assert!(matches!(bound_check(&k44, &[0; 8]), Err(Error::NotKPartite { .. })));
    }

    #[test]
    fn chromatic_numbers() {
        let k = |g: &Graph| chromatic_partition(g).unwrap().into_iter().max().map_or(0, |m| m + 1);
        assert_eq!(k(&Graph::cycle(5)), 3);
        assert_eq!(k(&Graph::cycle(6)), 2);
        assert_eq!(k(&complete_multipartite(&pl(&[3, 3, 3]))), 3);
        assert_eq!(k(&Graph::empty(3)), 1);
    }

    #[test]
    fn sighting_inequality_on_row() {
        let row = fixture_layout(Fixture::Fig1K5);
        let counts = visibility_tally(&row, &[0, 1, 1, 1, 1]).unwrap();
        assert_eq!(counts.total(0, 1, Axis::H), 4);
        assert!(sighting_inequality_holds(&counts, 0, 1, Axis::H));
        let counts = visibility_counts(&row, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(counts.total(0, 1, Axis::H), 1);
        assert_eq!(counts.total(0, 1, Axis::V), 0);
        let parts = pl(&[3, 4]);
        let l = construct_multipartite(&parts).unwrap();
        let counts = visibility_counts(&l, &parts.membership()).unwrap();
        for (i, j) in [(0, 1), (1, 0)] {
            for axis in [Axis::H, Axis::V] {
                assert!(sighting_inequality_holds(&counts, i, j, axis));
            }
        }
        assert_eq!(counts.total(0, 1, Axis::H) + counts.total(0, 1, Axis::V), 12);
    }

    #[test]
    fn same_part_visibility_rejected() {
        let row = fixture_layout(Fixture::Fig1K5);
        assert!(matches!(visibility_counts(&row, &[0, 0, 1, 1, 1]), Err(Error::SamePartVisibility { .. })));
    }

    #[test]
    fn cover_extensions() {
        let row = fixture_layout(Fixture::Fig1K5);
        assert!(extract(&extend_cover(&row, 1).unwrap()).unwrap().same_edges(&Graph::complete(6)));

        let pair = Layout::new(
            vec![Rect::from_ints("a", 0, 1, 0, 1).unwrap(), Rect::from_ints("b", 1, 2, 0, 1).unwrap()],
            Mode::Disjoint,
        )
        .unwrap();
        let g = extract(&extend_cover(&pair, 2).unwrap()).unwrap();
        assert!(g.same_edges(&complete_multipartite(&pl(&[1, 1, 2]))));
        assert!(!g.has_edge(2, 3));

        let single = Layout::new(vec![Rect::from_ints("a", 0, 1, 0, 1).unwrap()], Mode::Disjoint).unwrap();
        assert_eq!(extract(&extend_cover(&single, 1).unwrap()).unwrap().edge_count(), 1);
        assert!(extend_cover(&Layout::empty(Mode::Disjoint), 1).is_err());
        assert!(extend_cover(&single, 3).is_err());
    }

    #[test]
    fn constructions() {
        let l = construct_multipartite(&pl(&[1, 1, 1])).unwrap();
        assert!(extract(&l).unwrap().same_edges(&Graph::complete(3)));
        let parts = pl(&[2, 3, 4]);
        let l = construct_multipartite(&parts).unwrap();
        let rep =
            crate::represent::verify(&l, &complete_multipartite(&parts), &crate::represent::Mapping::Identity).unwrap();
        assert!(rep.ok, "{rep:?}");
        assert!(matches!(construct_multipartite(&pl(&[3, 3, 3])), Err(Error::NotRepresentable(_))));
    }

    #[test]
    fn stored_base_layouts_match_search() {
        for (p, q, text) in [(3, 3, K33_BASE_JSON), (3, 4, K34_BASE_JSON)] {
            let g = complete_multipartite(&pl(&[p, q]));
            let d = decide_trvg(&g, Budget::default(), Screens::NONE).unwrap();
            let cert = d.verdict.certificate().unwrap();
            assert_eq!(crate::io::serialize_layout(cert), text);
            assert!(crate::represent::verify(cert, &g, &crate::represent::Mapping::Identity).unwrap().ok);
        }
    }

    #[test]
    fn fixtures_extract() {
        let k5 = extract(&fixture_layout(Fixture::Fig1K5)).unwrap();
        assert!(k5.same_edges(&Graph::complete(5)));
        let g = fixture_graph(Fixture::Fig6aG);
        assert_eq!((g.n(), g.edge_count()), (13, 28));
        let got = extract(&fixture_layout(Fixture::Fig6bItrvg)).unwrap();
        assert!(isomorphic(&got, &g).unwrap().is_some());
        let gp = fixture_graph(Fixture::GraphGprime);
        let got = extract(&fixture_layout(Fixture::Fig7aGprime)).unwrap();
        assert!(isomorphic(&got, &gp).unwrap().is_some());
        assert!(Fixture::from_name("nope").is_err());
    }
}
