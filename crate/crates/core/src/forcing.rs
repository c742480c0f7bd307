//! The zero forcing process and the predicates built on it.
//!
//! A black vertex with exactly one white neighbor forces that neighbor black.
//! The closure of a black set is the fixed point of that rule; it does not
//! depend on the order in which forces are applied.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::vertex_set::VertexSet;

/// Sequence of `(forcer, forced)` pairs in application order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForceTrace {
    pub steps: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SetClass {
    ZeroForcingSet,
    FailedStalled,
    FailedProgressing,
}

/// Runs the forcing process to its fixed point.
///
/// Among the forces available at any moment the lowest-index forcer goes
/// first, so traces are deterministic. Runs in `O((n + m) log n)`.
pub fn closure(g: &Graph, black: &VertexSet) -> (VertexSet, ForceTrace) {
    let n = g.n();
    assert_eq!(black.universe(), n, "black set built for a different graph");
    let mut is_black: Vec<bool> = (0..n).map(|v| black.contains(v)).collect();
    let mut white_count: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().filter(|&&w| !is_black[w]).count())
        .collect();

    let mut ready: BinaryHeap<Reverse<Vertex>> = (0..n)
        .filter(|&v| is_black[v] && white_count[v] == 1)
        .map(Reverse)
        .collect();
    let mut trace = ForceTrace::default();

    while let Some(Reverse(b)) = ready.pop() {
        if white_count[b] != 1 {
            continue;
        }
        let w = *g
            .neighbors(b)
            .iter()
            .find(|&&w| !is_black[w])
            .expect("count says one white neighbor");
        is_black[w] = true;
        trace.steps.push((b, w));
        for &x in g.neighbors(w) {
            white_count[x] -= 1;
            if is_black[x] && white_count[x] == 1 {
                ready.push(Reverse(x));
            }
        }
        if white_count[w] == 1 {
            ready.push(Reverse(w));
        }
    }

    let mut out = VertexSet::empty(n);
    for v in (0..n).filter(|&v| is_black[v]) {
        out.insert(v);
    }
    (out, trace)
}

/// Checks that every step of `trace`, replayed from `black`, forces the unique
/// white neighbor of a black forcer.
pub fn trace_is_valid(g: &Graph, black: &VertexSet, trace: &ForceTrace) -> bool {
    let mut current = black.clone();
    for &(b, w) in &trace.steps {
        if !current.contains(b) || current.contains(w) || !g.has_edge(b, w) {
            return false;
        }
        let whites = g.neighbors(b).iter().filter(|&&x| !current.contains(x)).count();
        if whites != 1 {
            return false;
        }
        current.insert(w);
    }
    true
}

pub fn classify(g: &Graph, black: &VertexSet) -> SetClass {
    let (fin, _) = closure(g, black);
    if fin.len() == g.n() {
        SetClass::ZeroForcingSet
    } else if &fin == black {
        SetClass::FailedStalled
    } else {
        SetClass::FailedProgressing
    }
}

fn white_neighbors(g: &Graph, white: &VertexSet, b: Vertex) -> usize {
    g.neighbors(b).iter().filter(|&&x| white.contains(x)).count()
}

/// Non-empty `white` such that no vertex outside it has exactly one neighbor in it.
pub fn is_fort(g: &Graph, white: &VertexSet) -> bool {
    !white.is_empty()
        && (0..g.n())
            .filter(|&b| !white.contains(b))
            .all(|b| white_neighbors(g, white, b) != 1)
}

/// `v` is black with at least one white neighbor; every other black vertex
/// has a number of white neighbors different from one.
pub fn is_v_fort(g: &Graph, white: &VertexSet, v: Vertex) -> bool {
    !white.contains(v)
        && white_neighbors(g, white, v) >= 1
        && (0..g.n())
            .filter(|&b| b != v && !white.contains(b))
            .all(|b| white_neighbors(g, white, b) != 1)
}
