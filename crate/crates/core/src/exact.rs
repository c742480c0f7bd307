//! Exhaustive oracles: minimum forts (`B`), the second zero blocking number
//! (`B'`), maximum stalled sets (`F`), domination number, vertex cover,
//! stability number and twins.
//!
//! Every search scans candidate sets in increasing cardinality and, within a
//! cardinality, in increasing bitmask order. The witness returned is the
//! numerically least optimal bitmask.

use serde::Serialize;

use crate::count::{ExtendedCount, Finite, Infinite};
use crate::error::{Error, Result};
use crate::forcing::{classify, SetClass};
use crate::graph::{Graph, Vertex};
use crate::search::FortSearch;
use crate::vertex_set::VertexSet;

pub use crate::search::binomial;

/// Largest graph accepted by unbounded exhaustive searches.
pub const MAX_BRUTE_FORCE_N: usize = 24;
/// Largest single cardinality layer a bounded search may scan.
pub const CANDIDATE_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptResult {
    pub size: ExtendedCount,
    pub witness: Option<VertexSet>,
}

impl OptResult {
    fn found(witness: VertexSet) -> Self {
        Self {
            size: Finite(witness.len() as u64),
            witness: Some(witness),
        }
    }

    fn none() -> Self {
        Self {
            size: Infinite,
            witness: None,
        }
    }

    /// Convenience for callers that know the value is finite.
    pub fn value(&self) -> u64 {
        self.size.finite().expect("optimum is infinite")
    }
}

fn require_small(g: &Graph, what: &str) -> Result<()> {
    if g.n() > MAX_BRUTE_FORCE_N {
        return Err(Error::TooLarge(format!(
            "{what} by exhaustive search needs n <= {MAX_BRUTE_FORCE_N}, got {}",
            g.n()
        )));
    }
    Ok(())
}

fn require_layer_budget(n: usize, max_k: usize) -> Result<()> {
    let worst = (0..=max_k.min(n)).map(|k| binomial(n, k)).max().unwrap_or(0);
    if worst > CANDIDATE_BUDGET {
        return Err(Error::TooLarge(format!(
            "a layer of C({n}, <= {max_k}) = {worst} candidates exceeds the budget of {CANDIDATE_BUDGET}"
        )));
    }
    Ok(())
}

fn set_of(n: usize, vertices: Vec<Vertex>) -> VertexSet {
    VertexSet::from_vertices(n, vertices).expect("search yields in-range vertices")
}

fn min_fort_from(g: &Graph, floor: usize, ceiling: usize) -> OptResult {
    let search = FortSearch::new(g);
    (floor..=ceiling)
        .find_map(|k| search.first(k))
        .map_or_else(OptResult::none, |w| OptResult::found(set_of(g.n(), w)))
}

/// Minimum fort size `B(G)`.
///
/// With a `bound`, only sizes up to the bound are examined and `Infinite` means
/// that no fort that small exists. Unbounded searches require
/// `n <= MAX_BRUTE_FORCE_N`; bounded ones on larger graphs require every
/// layer to fit in `CANDIDATE_BUDGET`.
pub fn min_fort(g: &Graph, bound: Option<usize>) -> Result<OptResult> {
    let n = g.n();
    let ceiling = match bound {
        None => {
            require_small(g, "minimum fort")?;
            n
        }
        Some(b) => {
            if n > MAX_BRUTE_FORCE_N {
                require_layer_budget(n, b)?;
            }
            b.min(n)
        }
    };
    Ok(min_fort_from(g, 1, ceiling))
}

/// Second zero blocking number `B'(G)`: the least fort of size at least two.
pub fn second_min_fort(g: &Graph) -> Result<OptResult> {
    require_small(g, "second minimum fort")?;
    Ok(min_fort_from(g, 2, g.n()))
}

/// All forts of exactly `k` vertices, sorted by bitmask.
pub fn forts_of_size(g: &Graph, k: usize) -> Result<Vec<VertexSet>> {
    if binomial(g.n(), k) > CANDIDATE_BUDGET {
        return Err(Error::TooLarge(format!(
            "C({}, {k}) exceeds the candidate budget",
            g.n()
        )));
    }
    let search = FortSearch::new(g);
    Ok(search.all(k).into_iter().map(|w| set_of(g.n(), w)).collect())
}

/// Every fort of size `B(G)`, sorted by bitmask.
///
/// Limited by the cumulative number of candidates scanned rather than by `n`,
/// so sparse layers on larger graphs (e.g. `Q_5`) remain reachable.
pub fn enumerate_min_forts(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let search = FortSearch::new(g);
    let mut spent: u128 = 0;
    for k in 1..=n {
        spent = spent.saturating_add(binomial(n, k));
        if spent > CANDIDATE_BUDGET {
            return Err(Error::TooLarge(format!(
                "enumerating forts of size <= {k} on {n} vertices exceeds the candidate budget"
            )));
        }
        if search.first(k).is_some() {
            return Ok(search.all(k).into_iter().map(|w| set_of(n, w)).collect());
        }
    }
    Ok(Vec::new())
}

/// Subsets of `0..n` with `k` elements as masks, in increasing order.
fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n < 64);
    let limit = 1u64 << n;
    let mut next = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let x = next?;
        next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let y = (((r ^ x) >> 2) / c) | r;
            (y < limit).then_some(y)
        };
        Some(x)
    })
}

fn first_mask<I, P>(n: usize, sizes: I, pred: P) -> Option<u64>
where
    I: IntoIterator<Item = usize>,
    P: Fn(u64) -> bool,
{
    sizes.into_iter().find_map(|k| masks_of_size(n, k).find(|&m| pred(m)))
}

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    Ok(())
}

/// Failed zero forcing number `F(G)`: the largest stalled black set.
///
/// Decided with the forcing engine, independently of the fort predicate.
pub fn max_stalled(g: &Graph) -> Result<OptResult> {
    require_small(g, "maximum stalled set")?;
    require_nonempty(g)?;
    let n = g.n();
    let mask = first_mask(n, (0..n).rev(), |m| {
        classify(g, &VertexSet::from_mask(n, m)) == SetClass::FailedStalled
    })
    .expect("the empty black set is always stalled");
    Ok(OptResult::found(VertexSet::from_mask(n, mask)))
}

fn closed_neighborhood_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
        .collect()
}

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    (0..g.n()).all(|v| set.contains(v) || g.neighbors(v).iter().any(|&w| set.contains(w)))
}

pub fn is_vertex_cover(g: &Graph, set: &VertexSet) -> bool {
    g.edges().iter().all(|&(u, v)| set.contains(u) || set.contains(v))
}

pub fn is_stable(g: &Graph, set: &VertexSet) -> bool {
    g.edges().iter().all(|&(u, v)| !(set.contains(u) && set.contains(v)))
}

/// Domination number `γ(G)`.
pub fn domination_number(g: &Graph) -> Result<OptResult> {
    require_small(g, "domination number")?;
    require_nonempty(g)?;
    let n = g.n();
    let closed = closed_neighborhood_masks(g);
    let full = (1u64 << n) - 1;
    let mask = first_mask(n, 1..=n, |m| {
        VertexSet::from_mask(n, m).iter().fold(0, |acc, v| acc | closed[v]) == full
    })
    .expect("the whole vertex set dominates");
    Ok(OptResult::found(VertexSet::from_mask(n, mask)))
}

/// Minimum vertex cover size `τ(G)`.
pub fn min_vertex_cover(g: &Graph) -> Result<OptResult> {
    require_small(g, "vertex cover")?;
    let n = g.n();
    let edges: Vec<u64> = g.edges().iter().map(|&(u, v)| 1u64 << u | 1u64 << v).collect();
    let mask = first_mask(n, 0..=n, |m| edges.iter().all(|&e| e & m != 0)).expect("the whole vertex set covers");
    Ok(OptResult::found(VertexSet::from_mask(n, mask)))
}

/// Stability number `α(G)`, searched from the largest size down.
pub fn stability_number(g: &Graph) -> Result<OptResult> {
    require_small(g, "stability number")?;
    let n = g.n();
    let edges: Vec<u64> = g.edges().iter().map(|&(u, v)| 1u64 << u | 1u64 << v).collect();
    let mask = first_mask(n, (0..=n).rev(), |m| edges.iter().all(|&e| e & m != e)).expect("the empty set is stable");
    Ok(OptResult::found(VertexSet::from_mask(n, mask)))
}

/// Whether `x` and `y` have equal open or equal closed neighborhoods.
pub fn are_twins(g: &Graph, x: Vertex, y: Vertex) -> bool {
    if x == y {
        return false;
    }
    let (nx, ny) = (g.neighbors(x), g.neighbors(y));
    if nx == ny {
        return true;
    }
    g.has_edge(x, y) && nx.len() == ny.len() && nx.iter().filter(|&&w| w != y).eq(ny.iter().filter(|&&w| w != x))
}

/// The lexicographically first twin pair, if any.
pub fn find_twins(g: &Graph) -> Option<(Vertex, Vertex)> {
    let n = g.n();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| are_twins(g, x, y))
}
