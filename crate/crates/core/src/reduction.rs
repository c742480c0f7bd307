//! Vertex cover to zero blocking: the gadget graph `G'`.
//!
//! For a connected, non-complete `G` on `n` vertices, `G'` has a special
//! vertex `s`, a copy of every vertex of `G`, and for every edge `e = xy` a
//! path `e_0 e_1 ... e_{2n}` whose head `e_0` is adjacent to `s`, `x` and `y`.
//! `G` has a vertex cover of size `k` iff `G'` has a fort of size `k + 1`.
//! The chordal variant additionally makes the heads `e_0` a clique.
//!
//! Layout: `s = 0`, vertex `x` of `G` is `1 + x`, and the path of the `i`-th
//! edge (in sorted edge order) occupies `1 + n + i(2n+1) ..= n + (i+1)(2n+1)`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::count::{ExtendedCount, Finite};
use crate::error::{Error, Result};
use crate::exact;
use crate::forcing::is_fort;
use crate::graph::{Graph, Vertex};
use crate::vertex_set::VertexSet;

/// Largest `|V(G)|` accepted by [`verify_reduction`].
pub const MAX_VERIFY_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Bipartite,
    Chordal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeGadget {
    /// The original edge `(x, y)` with `x < y`.
    pub edge: (Vertex, Vertex),
    /// `e_0, e_1, ..., e_{2n}` as vertices of `G'`.
    pub path: Vec<Vertex>,
}

impl EdgeGadget {
    pub fn head(&self) -> Vertex {
        self.path[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub variant: Variant,
    pub original: Graph,
    pub gprime: Graph,
    pub s: Vertex,
    pub gadgets: Vec<EdgeGadget>,
    /// `image_of[x]` is the vertex of `G'` standing for `x`.
    pub image_of: Vec<Vertex>,
    /// Inverse of `image_of`, `None` for `s` and gadget vertices.
    pub orig_of: Vec<Option<Vertex>>,
}

pub fn build_reduction(g: &Graph, variant: Variant) -> Result<ReductionInstance> {
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::NotConnected);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let n = g.n();
    let edges = g.edges();
    let path_len = 2 * n + 1;
    let total = 1 + n + edges.len() * path_len;
    let s = 0;
    let image_of: Vec<Vertex> = (0..n).map(|x| 1 + x).collect();

    let mut gadgets = Vec::with_capacity(edges.len());
    let mut out_edges = Vec::new();
    for (i, &(x, y)) in edges.iter().enumerate() {
        let start = 1 + n + i * path_len;
        let path: Vec<Vertex> = (start..start + path_len).collect();
        out_edges.push((s, path[0]));
        out_edges.push((image_of[x], path[0]));
        out_edges.push((image_of[y], path[0]));
        out_edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        gadgets.push(EdgeGadget { edge: (x, y), path });
    }
    if variant == Variant::Chordal {
        for (i, a) in gadgets.iter().enumerate() {
            for b in &gadgets[i + 1..] {
                out_edges.push((a.head(), b.head()));
            }
        }
    }

    let mut orig_of = vec![None; total];
    for (x, &v) in image_of.iter().enumerate() {
        orig_of[v] = Some(x);
    }
    Ok(ReductionInstance {
        variant,
        original: g.clone(),
        gprime: Graph::from_edge_list(total, &out_edges)?,
        s,
        gadgets,
        image_of,
        orig_of,
    })
}

fn first_uncovered(g: &Graph, cover: &VertexSet) -> Option<(Vertex, Vertex)> {
    g.edges()
        .into_iter()
        .find(|&(u, v)| !cover.contains(u) && !cover.contains(v))
}

/// `{s} ∪ C`, a fort of `G'` whenever `C` covers `G`.
pub fn lift_cover_to_fort(inst: &ReductionInstance, cover: &VertexSet) -> Result<VertexSet> {
    if cover.universe() != inst.original.n() {
        return Err(Error::InvalidParameter("cover is not a subset of V(G)".into()));
    }
    if let Some((u, v)) = first_uncovered(&inst.original, cover) {
        return Err(Error::NotACover(u, v));
    }
    let mut w = VertexSet::empty(inst.gprime.n());
    w.insert(inst.s);
    for x in cover.iter() {
        w.insert(inst.image_of[x]);
    }
    Ok(w)
}

/// `W \ {s}` mapped back to `G`, for forts that contain `s` and avoid every
/// gadget path.
pub fn project_fort_to_cover(inst: &ReductionInstance, fort: &VertexSet) -> Result<VertexSet> {
    if fort.universe() != inst.gprime.n() {
        return Err(Error::InvalidParameter("set is not a subset of V(G')".into()));
    }
    if !fort.contains(inst.s) {
        return Err(Error::ProjectionFailed("s is not in the set".into()));
    }
    let mut cover = VertexSet::empty(inst.original.n());
    for v in fort.iter().filter(|&v| v != inst.s) {
        match inst.orig_of[v] {
            Some(x) => {
                cover.insert(x);
            }
            None => {
                return Err(Error::ProjectionFailed(format!("vertex {v} lies on an edge gadget")));
            }
        }
    }
    if let Some((u, v)) = first_uncovered(&inst.original, &cover) {
        return Err(Error::ProjectionFailed(format!("edge {u}-{v} is uncovered")));
    }
    Ok(cover)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for start in 0..g.n() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Chordality via maximum cardinality search followed by a perfect
/// elimination ordering check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    // Reverse visit order is the candidate elimination ordering.
    let mut position = vec![0; n];
    for (i, &v) in visit.iter().rev().enumerate() {
        position[v] = i;
    }
    visit.iter().all(|&v| {
        let later: Vec<_> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        match later.iter().min_by_key(|&&w| position[w]) {
            None => true,
            Some(&u) => later.iter().all(|&w| w == u || g.has_edge(u, w)),
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantReport {
    pub variant: Variant,
    pub vertices: usize,
    pub edges: usize,
    /// Bipartite for the bipartite variant, chordal for the chordal one.
    pub structure_ok: bool,
    pub lifted_fort: VertexSet,
    pub lifted_is_fort: bool,
    /// No fort of `G'` has at most `τ` vertices.
    pub smaller_refuted: bool,
    pub b_gprime: ExtendedCount,
    pub round_trip_ok: bool,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub m: usize,
    pub tau: u64,
    pub cover: VertexSet,
    pub variants: Vec<VariantReport>,
}

impl ReductionReport {
    pub fn all_equal(&self) -> bool {
        self.variants
            .iter()
            .all(|v| v.equal && v.structure_ok && v.round_trip_ok)
    }
}

/// Checks `B(G') = τ(G) + 1` for both variants: the lifted minimum cover is a
/// fort of size `τ + 1`, and a search bounded by `τ` finds no smaller one.
pub fn verify_reduction(g: &Graph) -> Result<ReductionReport> {
    if g.n() > MAX_VERIFY_N {
        return Err(Error::TooLarge(format!(
            "verification needs n <= {MAX_VERIFY_N}, got {}",
            g.n()
        )));
    }
    let cover_result = exact::min_vertex_cover(g)?;
    let tau = cover_result.value();
    let cover = cover_result.witness.expect("finite cover has a witness");
    let mut variants = Vec::new();
    for variant in [Variant::Bipartite, Variant::Chordal] {
        let inst = build_reduction(g, variant)?;
        let gp = &inst.gprime;
        let lifted = lift_cover_to_fort(&inst, &cover)?;
        let lifted_is_fort = is_fort(gp, &lifted);
        let smaller_refuted = !exact::min_fort(gp, Some(tau as usize))?.size.is_finite();
        let b_gprime = if smaller_refuted && lifted_is_fort {
            Finite(tau + 1)
        } else {
            exact::min_fort(gp, Some(tau as usize + 1))?.size
        };
        let structure_ok = match variant {
            Variant::Bipartite => is_bipartite(gp),
            Variant::Chordal => is_chordal(gp),
        };
        let round_trip_ok = project_fort_to_cover(&inst, &lifted).is_ok_and(|c| c == cover);
        variants.push(VariantReport {
            variant,
            vertices: gp.n(),
            edges: gp.edge_count(),
            structure_ok,
            lifted_fort: lifted,
            lifted_is_fort,
            smaller_refuted,
            b_gprime,
            round_trip_ok,
            equal: b_gprime == Finite(tau + 1),
        });
    }
    Ok(ReductionReport {
        n: g.n(),
        m: g.edge_count(),
        tau,
        cover,
        variants,
    })
}

/// Serializable description of an instance, written next to `G'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub variant: Variant,
    pub original_n: usize,
    pub original_m: usize,
    pub n: usize,
    pub m: usize,
    pub s: Vertex,
    pub image_of: Vec<Vertex>,
    pub gadgets: Vec<ManifestGadget>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifestGadget {
    pub edge: (Vertex, Vertex),
    pub e0: Vertex,
    /// Inclusive range of the path vertices `e_0 ..= e_{2n}`.
    pub range: (Vertex, Vertex),
}

impl ReductionInstance {
    pub fn manifest(&self) -> Manifest {
        Manifest {
            variant: self.variant,
            original_n: self.original.n(),
            original_m: self.original.edge_count(),
            n: self.gprime.n(),
            m: self.gprime.edge_count(),
            s: self.s,
            image_of: self.image_of.clone(),
            gadgets: self
                .gadgets
                .iter()
                .map(|g| ManifestGadget {
                    edge: g.edge,
                    e0: g.head(),
                    range: (g.head(), *g.path.last().unwrap()),
                })
                .collect(),
        }
    }
}
