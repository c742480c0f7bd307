//! Fixed-size fort enumeration.
//!
//! Candidates of size `k` are visited in increasing bitmask order (colex):
//! the largest element is chosen first, then the next largest below it, and
//! so on. A partial white set is abandoned as soon as some black vertex has
//! exactly one white neighbor and neither it nor any of its neighbors can
//! still be added (all remaining choices lie below the last chosen vertex).

use rayon::prelude::*;

use crate::graph::{Graph, Vertex};

/// Layers with more candidates than this are split across the rayon pool.
const PARALLEL_THRESHOLD: u128 = 200_000;

pub(crate) struct FortSearch<'a> {
    g: &'a Graph,
    /// Smallest vertex whose addition could change the count at `b`: `min(b, N(b))`.
    key: Vec<Vertex>,
}

struct State {
    white: Vec<bool>,
    count: Vec<u32>,
    chosen: Vec<Vertex>,
}

impl State {
    fn new(n: usize) -> Self {
        Self {
            white: vec![false; n],
            count: vec![0; n],
            chosen: Vec::new(),
        }
    }

    fn add(&mut self, g: &Graph, x: Vertex) {
        self.white[x] = true;
        self.chosen.push(x);
        for &b in g.neighbors(x) {
            self.count[b] += 1;
        }
    }

    fn pop(&mut self, g: &Graph) {
        let x = self.chosen.pop().expect("pop on empty state");
        self.white[x] = false;
        for &b in g.neighbors(x) {
            self.count[b] -= 1;
        }
    }
}

impl<'a> FortSearch<'a> {
    pub(crate) fn new(g: &'a Graph) -> Self {
        let key = (0..g.n())
            .map(|b| g.neighbors(b).first().map_or(b, |&w| w.min(b)))
            .collect();
        Self { g, key }
    }

    /// Whether the partial set can still be completed with `remaining`
    /// vertices drawn from `0..bound`.
    fn viable(&self, st: &State, bound: Vertex, remaining: usize) -> bool {
        st.chosen.iter().all(|&w| {
            self.g
                .neighbors(w)
                .iter()
                .all(|&b| st.white[b] || st.count[b] != 1 || (remaining > 0 && self.key[b] < bound))
        })
    }

    /// Visits every fort of size `k` whose largest vertex is `top`, in
    /// increasing bitmask order. Stops when `visit` returns `false`.
    fn scan_top<F>(&self, k: usize, top: Vertex, visit: &mut F) -> bool
    where
        F: FnMut(&[Vertex]) -> bool,
    {
        let mut st = State::new(self.g.n());
        st.add(self.g, top);
        if !self.viable(&st, top, k - 1) {
            return true;
        }
        if k == 1 {
            return visit(&st.chosen);
        }
        self.descend(&mut st, k, top, visit)
    }

    fn descend<F>(&self, st: &mut State, k: usize, bound: Vertex, visit: &mut F) -> bool
    where
        F: FnMut(&[Vertex]) -> bool,
    {
        let remaining = k - st.chosen.len();
        for x in remaining - 1..bound {
            st.add(self.g, x);
            let keep_going = if !self.viable(st, x, remaining - 1) {
                true
            } else if remaining == 1 {
                visit(&st.chosen)
            } else {
                self.descend(st, k, x, visit)
            };
            st.pop(self.g);
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn sorted(chosen: &[Vertex]) -> Vec<Vertex> {
        let mut v = chosen.to_vec();
        v.sort_unstable();
        v
    }

    /// The fort of size `k` with the least bitmask, if any.
    pub(crate) fn first(&self, k: usize) -> Option<Vec<Vertex>> {
        let n = self.g.n();
        if k == 0 || k > n {
            return None;
        }
        let find = |top: Vertex| {
            let mut found = None;
            self.scan_top(k, top, &mut |w| {
                found = Some(Self::sorted(w));
                false
            });
            found
        };
        if binomial(n, k) >= PARALLEL_THRESHOLD {
            (k - 1..n).into_par_iter().find_map_first(find)
        } else {
            (k - 1..n).find_map(find)
        }
    }

    /// Every fort of size `k`, in increasing bitmask order.
    pub(crate) fn all(&self, k: usize) -> Vec<Vec<Vertex>> {
        let n = self.g.n();
        if k == 0 || k > n {
            return Vec::new();
        }
        let collect = |top: Vertex| {
            let mut out = Vec::new();
            self.scan_top(k, top, &mut |w| {
                out.push(Self::sorted(w));
                true
            });
            out
        };
        if binomial(n, k) >= PARALLEL_THRESHOLD {
            let parts: Vec<_> = (k - 1..n).into_par_iter().map(collect).collect();
            parts.into_iter().flatten().collect()
        } else {
            (k - 1..n).flat_map(collect).collect()
        }
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
