//! From layouts to graphs and back: visibility extraction, certificate
//! checking, layout realization from per-axis interval models, and the
//! exhaustive decision procedures in [`search`].

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::geometry::{sees, Axis, Layout, Mode, Rect};
use crate::graph::{isomorphic, Graph};
use crate::interval::IntervalModel;

pub mod search;

pub use search::{decide_itrvg, decide_trvg, Budget, Decision, Evidence, Screens, Verdict};

/// Visibility graph of a layout. Vertex `i` is rectangle `i`, labeled by
/// its id. A `Disjoint` layout with overlapping interiors is rejected.
pub fn extract(layout: &Layout) -> Result<Graph> {
    layout.check_disjoint()?;
    let rects = layout.rects();
    let n = rects.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if sees(&rects[i], &rects[j], Axis::H) || sees(&rects[i], &rects[j], Axis::V) {
                edges.push((i, j));
            }
        }
    }
    let labels = rects.iter().map(|r| r.id().to_string()).collect();
    Graph::new(n, edges)?.with_labels(labels)
}

/// How rectangles are matched to target vertices in [`verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mapping {
    /// Rectangle ids equal target labels; positional if the target is unlabeled.
    Identity,
    /// Explicit rectangle id to vertex index map.
    Explicit(HashMap<String, usize>),
    /// Any bijection; found by isomorphism search.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    /// Target edges the layout does not realize, as label pairs.
    pub missing: Vec<(String, String)>,
    /// Realized edges absent from the target, as label pairs.
    pub extra: Vec<(String, String)>,
    /// Target vertex of each rectangle, in layout order.
    pub bijection: Option<Vec<usize>>,
}

fn resolve_mapping(layout: &Layout, target: &Graph, mapping: &Mapping) -> Result<Vec<usize>> {
    let n = target.n();
    let map: Vec<usize> = match mapping {
        Mapping::Identity => match target.labels() {
            Some(_) => layout
                .rects()
                .iter()
                .map(|r| {
                    target
                        .vertex_by_label(r.id())
                        .ok_or_else(|| Error::InvalidMapping(format!("no vertex labeled `{}`", r.id())))
                })
                .collect::<Result<_>>()?,
            None => (0..n).collect(),
        },
        Mapping::Explicit(m) => layout
            .rects()
            .iter()
            .map(|r| {
                m.get(r.id())
                    .copied()
                    .ok_or_else(|| Error::InvalidMapping(format!("rectangle `{}` is unmapped", r.id())))
            })
            .collect::<Result<_>>()?,
        Mapping::Search => unreachable!("resolved by isomorphism"),
    };
    let mut hit = vec![false; n];
    for &v in &map {
        if v >= n || std::mem::replace(&mut hit[v], true) {
            return Err(Error::InvalidMapping(format!("vertex {v} is out of range or used twice")));
        }
    }
    Ok(map)
}

/// Checks that `layout` represents `target`.
pub fn verify(layout: &Layout, target: &Graph, mapping: &Mapping) -> Result<VerifyReport> {
    if layout.len() != target.n() {
        return Err(Error::SizeMismatch { layout: layout.len(), graph: target.n() });
    }
    let realized = extract(layout)?;
    let map = match mapping {
        Mapping::Search => match isomorphic(&realized, target)? {
            Some(f) => f,
            None => {
                return Ok(VerifyReport { ok: false, missing: vec![], extra: vec![], bijection: None });
            }
        },
        _ => resolve_mapping(layout, target, mapping)?,
    };
    let mut inverse = vec![0; target.n()];
    for (i, &v) in map.iter().enumerate() {
        inverse[v] = i;
    }
    let name = |u: usize, v: usize| (target.label(u), target.label(v));
    let missing = target
        .edges()
        .filter(|&(u, v)| !realized.has_edge(inverse[u], inverse[v]))
        .map(|(u, v)| name(u, v))
        .collect::<Vec<_>>();
    let extra = realized
        .edges()
        .map(|(i, j)| (map[i].min(map[j]), map[i].max(map[j])))
        .filter(|&(u, v)| !target.has_edge(u, v))
        .map(|(u, v)| name(u, v))
        .collect::<Vec<_>>();
    Ok(VerifyReport { ok: missing.is_empty() && extra.is_empty(), missing, extra, bijection: Some(map) })
}

/// Which sight lines witness an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeLabel {
    H,
    V,
    Both,
}

impl EdgeLabel {
    pub fn includes(self, axis: Axis) -> bool {
        matches!((self, axis), (EdgeLabel::Both, _) | (EdgeLabel::H, Axis::H) | (EdgeLabel::V, Axis::V))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AssignMode {
    /// Every edge on exactly one axis.
    Partition,
    /// `Both` allowed.
    Cover,
}

impl AssignMode {
    pub fn layout_mode(self) -> Mode {
        match self {
            AssignMode::Partition => Mode::Disjoint,
            AssignMode::Cover => Mode::Intersecting,
        }
    }
}

/// An axis label for every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeAssignment {
    mode: AssignMode,
    labels: BTreeMap<(usize, usize), EdgeLabel>,
}

impl EdgeAssignment {
    /// The labeled pairs must be exactly the edges of `g`.
    pub fn new(g: &Graph, mode: AssignMode, labels: BTreeMap<(usize, usize), EdgeLabel>) -> Result<EdgeAssignment> {
        let labels: BTreeMap<_, _> = labels.into_iter().map(|((u, v), l)| ((u.min(v), u.max(v)), l)).collect();
        if labels.len() != g.edge_count() || !labels.keys().all(|&(u, v)| g.has_edge(u, v)) {
            return Err(Error::InvalidModels("labels do not cover exactly the edge set".into()));
        }
        if mode == AssignMode::Partition && labels.values().any(|&l| l == EdgeLabel::Both) {
            return Err(Error::InvalidModels("`Both` label in a partition".into()));
        }
        Ok(EdgeAssignment { mode, labels })
    }

    /// Every edge on one axis.
    pub fn uniform(g: &Graph, label: EdgeLabel) -> EdgeAssignment {
        let mode = if label == EdgeLabel::Both { AssignMode::Cover } else { AssignMode::Partition };
        EdgeAssignment { mode, labels: g.edges().map(|e| (e, label)).collect() }
    }

    pub fn mode(&self) -> AssignMode {
        self.mode
    }

    pub fn labels(&self) -> &BTreeMap<(usize, usize), EdgeLabel> {
        &self.labels
    }

    pub fn label(&self, u: usize, v: usize) -> Option<EdgeLabel> {
        self.labels.get(&(u.min(v), u.max(v))).copied()
    }

    /// Spanning subgraph of `g` on the edges seen along `axis`.
    pub fn axis_graph(&self, n: usize, axis: Axis) -> Graph {
        let edges = self.labels.iter().filter(|(_, l)| l.includes(axis)).map(|(&e, _)| e);
        Graph::new(n, edges).expect("assignment edges are simple")
    }
}

/// Builds the layout whose rectangle `v` is `x_model[v] × y_model[v]`.
/// The y-model must realize exactly the horizontally seen edges and the
/// x-model exactly the vertically seen ones. Rectangle ids are `g`'s labels.
pub fn realize(g: &Graph, asg: &EdgeAssignment, y_model: &IntervalModel, x_model: &IntervalModel) -> Result<Layout> {
    let n = g.n();
    if y_model.len() != n || x_model.len() != n {
        return Err(Error::InvalidModels(format!(
            "models have {} and {} intervals for {n} vertices",
            y_model.len(),
            x_model.len()
        )));
    }
    for (axis, model) in [(Axis::H, y_model), (Axis::V, x_model)] {
        let want = asg.axis_graph(n, axis);
        if !model.intersection_graph().same_edges(&want) {
            return Err(Error::InvalidModels(format!("{axis:?} model does not match the {axis:?} edges")));
        }
    }
    let rects = (0..n)
        .map(|v| {
            let (x_lo, x_hi) = x_model.intervals()[v].clone();
            let (y_lo, y_hi) = y_model.intervals()[v].clone();
            Rect::new(g.label(v), x_lo, x_hi, y_lo, y_hi)
        })
        .collect::<Result<Vec<_>>>()?;
    Layout::new(rects, asg.mode().layout_mode())
}

/// Row of unit squares, each seeing all others horizontally.
pub fn row_layout(ids: &[String]) -> Result<Layout> {
    let rects = ids
        .iter()
        .enumerate()
        .map(|(i, id)| {
            Rect::new(id.clone(), Coord::int(i as i64), Coord::int(i as i64 + 1), Coord::zero(), Coord::int(1))
        })
        .collect::<Result<Vec<_>>>()?;
    Layout::new(rects, Mode::Disjoint)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::recognize_interval;

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    #[test]
    fn row_of_five_is_k5() {
        let ids: Vec<String> = (0..5).map(|i| format!("s{i}")).collect();
        let g = extract(&row_layout(&ids).unwrap()).unwrap();
        assert!(g.same_edges(&k(5)));
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn single_rect_is_k1() {
        let l = Layout::new(vec![Rect::from_ints("a", 0, 1, 0, 1).unwrap()], Mode::Disjoint).unwrap();
        assert_eq!(extract(&l).unwrap().n(), 1);
    }

    #[test]
    fn overlap_in_disjoint_mode_is_named() {
        let l = Layout::new(
            vec![Rect::from_ints("a", 0, 2, 0, 2).unwrap(), Rect::from_ints("b", 1, 3, 1, 3).unwrap()],
            Mode::Disjoint,
        )
        .unwrap();
        match extract(&l) {
            Err(Error::OverlapViolation { a, b }) => assert_eq!((a.as_str(), b.as_str()), ("a", "b")),
            other => panic!("{other:?}"),
        }
        assert_eq!(extract(&l.with_mode(Mode::Intersecting)).unwrap().edge_count(), 1);
    }

    #[test]
    fn realize_k5_all_horizontal() {
        let g = k(5);
        let asg = EdgeAssignment::uniform(&g, EdgeLabel::H);
        let y = recognize_interval(&asg.axis_graph(5, Axis::H)).unwrap().unwrap();
        let x = recognize_interval(&asg.axis_graph(5, Axis::V)).unwrap().unwrap();
        let l = realize(&g, &asg, &y, &x).unwrap();
        assert!(extract(&l).unwrap().same_edges(&g));
        // x-intervals pairwise disjoint: a row.
        assert!(l.rects().iter().enumerate().all(|(i, a)| l.rects()[i + 1..].iter().all(|b| !sees(a, b, Axis::V))));
    }

    #[test]
    fn realize_c4_from_matchings() {
        let g = Graph::cycle(4);
        let labels = [((0, 1), EdgeLabel::H), ((2, 3), EdgeLabel::H), ((1, 2), EdgeLabel::V), ((0, 3), EdgeLabel::V)];
        let asg = EdgeAssignment::new(&g, AssignMode::Partition, labels.into_iter().collect()).unwrap();
        let y = recognize_interval(&asg.axis_graph(4, Axis::H)).unwrap().unwrap();
        let x = recognize_interval(&asg.axis_graph(4, Axis::V)).unwrap().unwrap();
        let l = realize(&g, &asg, &y, &x).unwrap();
        assert_eq!(l.mode(), Mode::Disjoint);
        assert!(l.check_disjoint().is_ok());
        assert!(extract(&l).unwrap().same_edges(&g));
    }

    #[test]
    fn realize_empty_graph_is_staircase() {
        let g = Graph::empty(3);
        let asg = EdgeAssignment::uniform(&g, EdgeLabel::H);
        let m = recognize_interval(&g).unwrap().unwrap();
        let l = realize(&g, &asg, &m, &m).unwrap();
        assert_eq!(extract(&l).unwrap().edge_count(), 0);
    }

    #[test]
    fn realize_rejects_mismatched_models() {
        let g = Graph::path(3);
        let asg = EdgeAssignment::uniform(&g, EdgeLabel::H);
        let wrong = recognize_interval(&Graph::complete(3)).unwrap().unwrap();
        let x = recognize_interval(&Graph::empty(3)).unwrap().unwrap();
        assert!(matches!(realize(&g, &asg, &wrong, &x), Err(Error::InvalidModels(_))));
    }

    #[test]
    fn assignment_validation() {
        let g = Graph::path(3);
        let bad = [((0, 1), EdgeLabel::Both), ((1, 2), EdgeLabel::H)].into_iter().collect();
        assert!(EdgeAssignment::new(&g, AssignMode::Partition, bad).is_err());
        let short = [((0, 1), EdgeLabel::H)].into_iter().collect();
        assert!(EdgeAssignment::new(&g, AssignMode::Cover, short).is_err());
    }

    #[test]
    fn verify_with_search_and_identity() {
        let ids: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let l = row_layout(&ids).unwrap();
        let rep = verify(&l, &k(5), &Mapping::Search).unwrap();
        assert!(rep.ok);
        assert!(verify(&l, &k(5), &Mapping::Identity).unwrap().ok);
        let rep = verify(&l, &Graph::path(5), &Mapping::Identity).unwrap();
        assert!(!rep.ok);
        assert_eq!(rep.extra.len(), 6);
        assert!(matches!(verify(&l, &k(4), &Mapping::Search), Err(Error::SizeMismatch { .. })));
    }
}
