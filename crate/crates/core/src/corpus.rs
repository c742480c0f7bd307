//! Graph corpora used for exhaustive and randomized checking.

use crate::graph::{random_tree, tree_from_prufer, Graph, Vertex};
use crate::rng::SplitMix64;

/// Every labeled graph on `n` vertices, in order of the edge bitmask over
/// the sorted vertex pairs. There are `2^(n(n-1)/2)` of them, so `n <= 7`.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "too many labeled graphs on {n} vertices");
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).expect("pairs are valid")
    })
}

/// Connected labeled graphs on `n` vertices.
pub fn all_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_labeled_graphs(n).filter(Graph::is_connected)
}

/// Every labeled tree on `n` vertices, one per Prüfer sequence.
pub fn all_prufer_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Graph::empty(1)],
        2 => return vec![Graph::from_edge_list(2, &[(0, 1)]).unwrap()],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut seq = vec![0; len];
    for mut code in 0..total {
        for slot in seq.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        out.push(tree_from_prufer(n, &seq).expect("valid sequence"));
    }
    out
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("pairs are valid")
}

/// A random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let tree = random_tree(n, rng.next_u64());
    let mut edges = tree.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("pairs are valid")
}
