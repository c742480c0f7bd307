//! Simple undirected graphs, the generators used throughout the crate, and the
//! four graph operations: union, join, Cartesian product and rooted
//! composition.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

pub type Vertex = usize;

const MAX_VERTICES: usize = i32::MAX as usize;

/// Undirected simple graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

/// A graph together with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: Vertex,
}

/// A connected component of some host graph, with the map back to host indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    /// `host[i]` is the host vertex that became vertex `i` of `graph`.
    pub host: Vec<Vertex>,
}

/// The graph families the crate knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `n` isolated vertices.
    Empty(usize),
    /// `K_{1,leaves}` with the center at vertex 0.
    Star(usize),
    /// `K_1 + C_n`.
    Wheel(usize),
    /// `mK_1 + P_n`.
    Fan {
        m: usize,
        n: usize,
    },
    /// `mK_1 + C_n`.
    Cone {
        m: usize,
        n: usize,
    },
    Hypercube(usize),
    RandomTree {
        n: usize,
        seed: u64,
    },
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    /// Builds from adjacency lists that are already symmetric, sorted and loop-free.
    fn from_sorted_adjacency(adj: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| { l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v) }));
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs(0).iter().all(|d| d.is_some())
    }

    /// Distances from `source`, `None` for unreachable vertices.
    pub fn bfs(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.components().iter().all(|c| c.graph.is_tree())
    }

    /// Subgraph induced by `vertices` (relabelled in the given order).
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<_> = self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// `G - x`.
    pub fn remove_vertex(&self, x: Vertex) -> Graph {
        let keep: Vec<_> = (0..self.n()).filter(|&v| v != x).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(Component {
                graph: self.induced_subgraph(&members),
                host: members,
            });
        }
        out
    }

    /// Renders the edge-list interchange format.
    pub fn to_edge_list_string(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let mut it = l.split_whitespace();
            let mut next = || -> Result<usize> {
                it.next()
                    .ok_or_else(|| Error::Parse {
                        line,
                        msg: "expected two integers".into(),
                    })?
                    .parse()
                    .map_err(|e| Error::Parse {
                        line,
                        msg: format!("{e}"),
                    })
            };
            let pair = (next()?, next()?);
            if it.next().is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "expected two integers".into(),
                });
            }
            Ok(pair)
        };

        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, l) = lines.next().ok_or(Error::Parse {
                line: 0,
                msg: format!("expected {m} edges, found {}", edges.len()),
            })?;
            edges.push(parse_pair(line, l)?);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                msg: "trailing data after edge list".into(),
            });
        }
        Graph::from_edge_list(n, &edges)
    }
}

/// Disjoint union; `h` is shifted by `g.n()`.
pub fn union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut adj = g.adj.clone();
    adj.extend(h.adj.iter().map(|l| l.iter().map(|&v| v + off).collect()));
    Graph::from_sorted_adjacency(adj)
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.n(), h.n());
    let mut adj = Vec::with_capacity(n + m);
    for list in &g.adj {
        let mut l = list.clone();
        l.extend(n..n + m);
        adj.push(l);
    }
    for list in &h.adj {
        let mut l: Vec<_> = (0..n).collect();
        l.extend(list.iter().map(|&v| v + n));
        adj.push(l);
    }
    Graph::from_sorted_adjacency(adj)
}

/// Cartesian product with row-major indexing: `(x, y) -> x * |V(H)| + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.n(), h.n());
    let mut adj = vec![Vec::new(); n * m];
    for x in 0..n {
        for y in 0..m {
            let list = &mut adj[x * m + y];
            list.extend(g.adj[x].iter().map(|&x2| x2 * m + y));
            list.extend(h.adj[y].iter().map(|&y2| x * m + y2));
            list.sort_unstable();
        }
    }
    Graph::from_sorted_adjacency(adj)
}

/// Disjoint union of `(G, v)` and `(H, u)` plus the edge `vu`, rooted at `v`.
pub fn compose_rooted(g: &RootedGraph, h: &RootedGraph) -> RootedGraph {
    let mut graph = union(&g.graph, &h.graph);
    let (v, u) = (g.root, g.graph.n() + h.root);
    graph.adj[v].push(u);
    graph.adj[v].sort_unstable();
    graph.adj[u].push(v);
    graph.adj[u].sort_unstable();
    RootedGraph { graph, root: g.root }
}

impl RootedGraph {
    pub fn new(graph: Graph, root: Vertex) -> Result<Self> {
        if root >= graph.n() {
            return Err(Error::IndexOutOfRange {
                vertex: root,
                n: graph.n(),
            });
        }
        Ok(Self { graph, root })
    }

    pub fn single() -> Self {
        Self {
            graph: Graph::empty(1),
            root: 0,
        }
    }
}

pub fn generate(family: Family) -> Result<Graph> {
    let invalid = |msg: &str| Err(Error::InvalidParameter(format!("{family:?}: {msg}")));
    match family {
        Family::Path(n) => {
            if n < 1 {
                return invalid("path needs n >= 1");
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edge_list(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return invalid("cycle needs n >= 3");
            }
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((n - 1, 0));
            Graph::from_edge_list(n, &edges)
        }
        Family::Complete(n) => {
            if n < 1 {
                return invalid("complete graph needs n >= 1");
            }
            let adj = (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect();
            Ok(Graph::from_sorted_adjacency(adj))
        }
        Family::Empty(n) => Ok(Graph::empty(n)),
        Family::Star(leaves) => Ok(join(&Graph::empty(1), &Graph::empty(leaves))),
        Family::Wheel(n) => {
            if n < 3 {
                return invalid("wheel needs n >= 3");
            }
            Ok(join(&Graph::empty(1), &generate(Family::Cycle(n))?))
        }
        Family::Fan { m, n } => {
            if m < 1 || n < 1 {
                return invalid("fan needs m >= 1 and n >= 1");
            }
            Ok(join(&Graph::empty(m), &generate(Family::Path(n))?))
        }
        Family::Cone { m, n } => {
            if m < 1 || n < 3 {
                return invalid("cone needs m >= 1 and n >= 3");
            }
            Ok(join(&Graph::empty(m), &generate(Family::Cycle(n))?))
        }
        Family::Hypercube(n) => {
            if n > 30 {
                return invalid("hypercube dimension above 30");
            }
            let p2 = generate(Family::Path(2))?;
            Ok((0..n).fold(Graph::empty(1), |q, _| cartesian_product(&q, &p2)))
        }
        Family::RandomTree { n, seed } => {
            if n < 1 {
                return invalid("tree needs n >= 1");
            }
            Ok(random_tree(n, seed))
        }
    }
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a tree.
pub fn tree_from_prufer(n: usize, seq: &[Vertex]) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidParameter(format!(
            "Prüfer sequence of length {} does not describe a tree on {n} vertices",
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::IndexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&i| degree[i] == 1).unwrap();
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if v < ptr && degree[v] == 1 {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edge_list(n, &edges)
}

/// Uniform labelled tree from a Prüfer sequence drawn with SplitMix64.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        _ => {
            let mut rng = SplitMix64::new(seed);
            let seq: Vec<_> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
            tree_from_prufer(n, &seq).expect("sequence entries are in range")
        }
    }
}
