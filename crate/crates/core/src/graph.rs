//! Simple undirected graphs, the graph families studied here, and the small
//! combinatorial searches (isomorphism, induced `K_{3,3,3}`) run on them.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// Largest vertex count the bitmask-based algorithms accept.
pub const MASK_CAP: usize = 64;

/// Default cap for [`isomorphic`].
pub const ISO_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("repeated edge {u}-{v}")));
            }
        }
        Ok(Graph { n, edges: set, labels: None })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: BTreeSet::new(), labels: None }
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges, labels: None }
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Builds from symmetric adjacency bitmasks.
    pub fn from_masks(adj: &[u64]) -> Graph {
        let n = adj.len();
        let edges =
            (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v))).collect();
        Graph { n, edges, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidGraph(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        let distinct: BTreeSet<_> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidGraph("labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The vertex label, or its 0-based index when unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n > MASK_CAP {
            return Err(Error::TooLarge { n: self.n, cap: MASK_CAP });
        }
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(adj)
    }

    /// Same vertex count and edge set, ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges == other.edges
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|e| !self.edges.contains(e))
            .collect();
        Graph { n: self.n, edges, labels: self.labels.clone() }
    }

    /// Subgraph induced on `verts`, renumbered `0..verts.len()` in the given
    /// order. Labels are carried over; an unlabeled graph gets its original
    /// indices as labels.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph> {
        let mut pos = HashMap::new();
        for (i, &v) in verts.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
            if pos.insert(v, i).is_some() {
                return Err(Error::InvalidGraph(format!("vertex {v} listed twice")));
            }
        }
        let mut edges = BTreeSet::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.insert((i, j));
                }
            }
        }
        let labels = verts.iter().map(|&v| self.label(v)).collect();
        Ok(Graph { n: verts.len(), edges, labels: Some(labels) })
    }

    /// Renames vertex `v` to `perm[v]`. Labels move with their vertices.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v]))).collect();
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for (v, lab) in l.iter().enumerate() {
                out[perm[v]] = lab.clone();
            }
            out
        });
        Graph { n: self.n, edges, labels }
    }
}

/// Part sizes of a complete multipartite graph, kept nondecreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartList(Vec<usize>);

impl PartList {
    /// Sorts the sizes; every size must be positive and the list nonempty.
    pub fn new(mut sizes: Vec<usize>) -> Result<PartList> {
        if sizes.is_empty() {
            return Err(Error::InvalidPartList("no parts".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidPartList("part of size 0".into()));
        }
        sizes.sort_unstable();
        Ok(PartList(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part index of every vertex of [`complete_multipartite`].
    pub fn membership(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(p, &s)| std::iter::repeat_n(p, s)).collect()
    }

    /// Every nondecreasing part list with exactly `k` parts and at most
    /// `max_total` vertices in total.
    pub fn enumerate(k: usize, max_total: usize) -> Vec<PartList> {
        fn rec(k: usize, min: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<PartList>) {
            if k == 0 {
                out.push(PartList(cur.clone()));
                return;
            }
            let mut s = min;
            while s * k <= left {
                cur.push(s);
                rec(k - 1, s, left - s, cur, out);
                cur.pop();
                s += 1;
            }
        }
        let mut out = Vec::new();
        if k > 0 {
            rec(k, 1, max_total, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// `K_{a_1,...,a_k}`; vertex `j` of part `i` is labeled `p{i+1}_{j+1}`.
pub fn complete_multipartite(parts: &PartList) -> Graph {
    let member = parts.membership();
    let n = member.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| member[u] != member[v]).collect();
    let labels = parts
        .sizes()
        .iter()
        .enumerate()
        .flat_map(|(p, &s)| (0..s).map(move |j| format!("p{}_{}", p + 1, j + 1)))
        .collect();
    Graph { n, edges, labels: Some(labels) }
}

/// Complement of the squared cycle `C_n^2`. Vertex `i` carries label
/// `v{i+1}`.
pub fn d2(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| {
            let d = v - u;
            d.min(n - d) > 2
        })
        .collect();
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    Ok(Graph { n, edges, labels: Some(labels) })
}

fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    (0..g.n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).into_iter().map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

/// Lexicographically least bijection `f` (with `f[v]` the image of `v`)
/// carrying `g1` onto `g2`, if one exists. Graphs above `cap` vertices are
/// refused.
pub fn isomorphic_with_cap(g1: &Graph, g2: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    let n = g1.n;
    if n.max(g2.n) > cap.min(MASK_CAP) {
        return Err(Error::TooLarge { n: n.max(g2.n), cap: cap.min(MASK_CAP) });
    }
    if n != g2.n || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let inv1 = vertex_invariants(g1);
    let inv2 = vertex_invariants(g2);
    let mut s1 = inv1.clone();
    let mut s2 = inv2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }
    let a1 = g1.adjacency_masks()?;
    let a2 = g2.adjacency_masks()?;

    fn extend(
        i: usize,
        map: &mut Vec<usize>,
        used: u64,
        a1: &[u64],
        a2: &[u64],
        inv1: &[(usize, Vec<usize>)],
        inv2: &[(usize, Vec<usize>)],
    ) -> bool {
        let n = a1.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used >> j & 1 == 1 || inv1[i] != inv2[j] {
                continue;
            }
            let consistent = (0..i).all(|k| (a1[i] >> k & 1) == (a2[j] >> map[k] & 1));
            if !consistent {
                continue;
            }
            map.push(j);
            if extend(i + 1, map, used | 1 << j, a1, a2, inv1, inv2) {
                return true;
            }
            map.pop();
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    Ok(extend(0, &mut map, 0, &a1, &a2, &inv1, &inv2).then_some(map))
}

/// [`isomorphic_with_cap`] with the default cap of [`ISO_CAP`] vertices.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    isomorphic_with_cap(g1, g2, ISO_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K333Search {
    /// Nine vertices, listed part by part, inducing `K_{3,3,3}`.
    Found(Vec<usize>),
    Absent,
    /// The node budget ran out before the search space was covered.
    BudgetExhausted,
}

impl K333Search {
    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            K333Search::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// Searches for an induced `K_{3,3,3}` part by part: three independent
/// triples, pairwise completely joined, ordered by their least vertex.
/// `max_nodes` bounds the number of triples examined.
pub fn find_induced_k333(g: &Graph, max_nodes: Option<u64>) -> Result<K333Search> {
    let adj = g.adjacency_masks()?;
    let n = g.n;
    let mut nodes = 0u64;
    let budget = max_nodes.unwrap_or(u64::MAX);

    // Independent triples inside `pool`, least vertex first.
    let triples = |pool: u64| -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        let verts: Vec<usize> = (0..n).filter(|&v| pool >> v & 1 == 1).collect();
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if adj[a] >> b & 1 == 1 {
                    continue;
                }
                for &c in &verts[j + 1..] {
                    if adj[a] >> c & 1 == 0 && adj[b] >> c & 1 == 0 {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let above = |v: usize| -> u64 { all & !((2u64 << v) - 1) };
    let common = |t: &[usize; 3]| adj[t[0]] & adj[t[1]] & adj[t[2]];

    for t1 in triples(all) {
        let pool2 = common(&t1) & above(t1[0]);
        if pool2.count_ones() < 6 {
            nodes += 1;
            continue;
        }
        for t2 in triples(pool2) {
            nodes += 1;
            if nodes > budget {
                return Ok(K333Search::BudgetExhausted);
            }
            let pool3 = pool2 & common(&t2) & above(t2[0]);
            if let Some(t3) = triples(pool3).into_iter().next() {
                let mut w = t1.to_vec();
                w.extend(t2);
                w.extend(t3);
                return Ok(K333Search::Found(w));
            }
        }
    }
    Ok(K333Search::Absent)
}

/// All graphs on `n` vertices up to isomorphism, for exhaustive checks.
/// Practical up to `n = 7` (1044 graphs).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = HashMap::new();
        let mut order = Vec::new();
        for g in &level {
            for nbrs in 0u64..(1u64 << (m - 1)) {
                let mut edges: Vec<_> = g.edges().collect();
                edges.extend((0..m - 1).filter(|&u| nbrs >> u & 1 == 1).map(|u| (u, m - 1)));
                let h = Graph::new(m, edges).expect("valid extension");
                let mut key = vertex_invariants(&h);
                key.sort();
                let bucket = buckets.entry(key.clone()).or_default();
                let fresh = bucket.iter().all(|other| isomorphic_with_cap(&h, other, MASK_CAP).unwrap().is_none());
                if fresh {
                    if bucket.is_empty() {
                        order.push(key);
                    }
                    bucket.push(h);
                }
            }
        }
        level = order.into_iter().flat_map(|k| buckets.remove(&k).unwrap()).collect();
    }
    level
}
