//! Linear-time zero blocking number of trees.
//!
//! Every vertex `v` carries a [`DpState`] for the subtree built so far and
//! rooted at `v`:
//!
//! * `b1`: least fort avoiding `v`,
//! * `b11`: least `v`-fort (`v` black with at least one white neighbor,
//!   every other black vertex sees zero or at least two whites),
//! * `b0`: least fort containing `v`.
//!
//! Vertices are processed in reverse BFS order from the root and each one is
//! folded into its parent with [`dp_merge`]. The answer is `min(b1, b0)` at
//! the root. Each merge records which term attained each minimum so that a
//! fort of optimal size can be read back afterwards.

use std::collections::VecDeque;

use crate::count::{ExtendedCount, Finite, Infinite};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpState {
    pub b1: ExtendedCount,
    pub b11: ExtendedCount,
    pub b0: ExtendedCount,
}

impl DpState {
    /// State of a lone vertex: only `{v}` itself is a fort.
    pub const SINGLE: DpState = DpState {
        b1: Infinite,
        b11: Infinite,
        b0: Finite(1),
    };

    /// `B(G)` for the rooted graph this state describes.
    pub fn value(&self) -> ExtendedCount {
        self.b1.min(self.b0)
    }
}

/// Vertices ordered by non-increasing distance from the root (root last),
/// with the parent of every non-root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedOrder {
    pub order: Vec<Vertex>,
    pub parent: Vec<Option<Vertex>>,
}

impl RootedOrder {
    pub fn root(&self) -> Vertex {
        *self.order.last().expect("order is non-empty")
    }
}

pub fn root_and_order(t: &Graph, root: Option<Vertex>) -> Result<RootedOrder> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let root = root.unwrap_or(0);
    if root >= n {
        return Err(Error::IndexOutOfRange { vertex: root, n });
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in t.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    order.reverse();
    Ok(RootedOrder { order, parent })
}

/// Which term attained each of the three minima in a merge; `0` is the first
/// listed term. Ties go to the earliest term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Choice {
    b1: u8,
    b11: u8,
    b0: u8,
}

fn argmin<const N: usize>(terms: [ExtendedCount; N]) -> (ExtendedCount, u8) {
    let mut best = (terms[0], 0);
    for (i, &t) in terms.iter().enumerate().skip(1) {
        if t < best.0 {
            best = (t, i as u8);
        }
    }
    best
}

fn merge_with_choice(p: DpState, c: DpState) -> (DpState, Choice) {
    let (b1, c1) = argmin([p.b1, c.b1, p.b11 + c.b0]);
    let (b11, c11) = argmin([p.b11, c.b0]);
    let (b0, c0) = argmin([p.b0 + c.b11, p.b0 + c.b0]);
    (
        DpState { b1, b11, b0 },
        Choice {
            b1: c1,
            b11: c11,
            b0: c0,
        },
    )
}

/// State of the composition of `(G, v)` (state `parent`) and `(H, u)` (state
/// `child`) joined by the edge `vu`:
///
/// ```text
/// b1  = min(G.b1, H.b1, G.b11 + H.b0)
/// b11 = min(G.b11, H.b0)
/// b0  = min(G.b0 + H.b11, G.b0 + H.b0)
/// ```
pub fn dp_merge(parent: DpState, child: DpState) -> DpState {
    merge_with_choice(parent, child).0
}

/// Result of the tree program: the value, a fort attaining it, and the final
/// state at the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSolution {
    pub value: ExtendedCount,
    pub witness: VertexSet,
    pub root_state: DpState,
}

#[derive(Clone, Copy)]
enum Kind {
    B1,
    B11,
    B0,
}

pub fn zbs_tree(t: &Graph, root: Option<Vertex>) -> Result<TreeSolution> {
    let order = root_and_order(t, root)?;
    let n = t.n();
    let mut state = vec![DpState::SINGLE; n];
    // merges[p] lists (child, choice) in the order the children were folded in.
    let mut merges: Vec<Vec<(Vertex, Choice)>> = vec![Vec::new(); n];

    for &v in &order.order[..n - 1] {
        let p = order.parent[v].expect("non-root vertex has a parent");
        let (next, choice) = merge_with_choice(state[p], state[v]);
        state[p] = next;
        merges[p].push((v, choice));
    }

    let r = order.root();
    let root_state = state[r];
    let (value, pick) = argmin([root_state.b1, root_state.b0]);
    let start = if pick == 0 { Kind::B1 } else { Kind::B0 };
    let witness = recover(n, &merges, r, start);
    Ok(TreeSolution {
        value,
        witness,
        root_state,
    })
}

/// Walks the recorded choices back from the root. A task `(v, kind, j)` asks
/// for the optimal `kind` set of `v`'s subtree after its first `j` merges.
fn recover(n: usize, merges: &[Vec<(Vertex, Choice)>], root: Vertex, start: Kind) -> VertexSet {
    let mut out = VertexSet::empty(n);
    let mut stack = vec![(root, start, merges[root].len())];
    while let Some((v, kind, j)) = stack.pop() {
        if j == 0 {
            // Only b0 is finite for a lone vertex.
            debug_assert!(matches!(kind, Kind::B0));
            out.insert(v);
            continue;
        }
        let (c, choice) = merges[v][j - 1];
        let full = merges[c].len();
        match kind {
            Kind::B1 => match choice.b1 {
                0 => stack.push((v, Kind::B1, j - 1)),
                1 => stack.push((c, Kind::B1, full)),
                _ => {
                    stack.push((v, Kind::B11, j - 1));
                    stack.push((c, Kind::B0, full));
                }
            },
            Kind::B11 => match choice.b11 {
                0 => stack.push((v, Kind::B11, j - 1)),
                _ => stack.push((c, Kind::B0, full)),
            },
            Kind::B0 => {
                stack.push((v, Kind::B0, j - 1));
                match choice.b0 {
                    0 => stack.push((c, Kind::B11, full)),
                    _ => stack.push((c, Kind::B0, full)),
                }
            }
        }
    }
    out
}
