//! Minimum forts of hypercubes.
//!
//! Vertices of `Q_n` are bitmasks of subsets of `[n]` (element `i` is bit
//! `i - 1`), adjacent when they differ in one bit. For `n >= 2` the minimum
//! forts are exactly the neighborhoods `N(x)`, together with the sets
//! `N(y) Δ N(z)` for `|y Δ z| = 2` when `n = 4`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact;
use crate::forcing::is_fort;
use crate::graph::{generate, Family, Graph};
use crate::vertex_set::VertexSet;

pub type CubeVertex = usize;

fn check_vertex(n: usize, x: CubeVertex) -> Result<()> {
    if x >> n != 0 {
        return Err(Error::InvalidParameter(format!("{x:#b} is not a vertex of Q_{n}")));
    }
    Ok(())
}

pub fn cube(n: usize) -> Result<Graph> {
    generate(Family::Hypercube(n))
}

/// `N(x)`: the `n` vertices one bit flip away from `x`.
pub fn neighborhood_fort(n: usize, x: CubeVertex) -> Result<VertexSet> {
    if !(2..=30).contains(&n) {
        return Err(Error::InvalidParameter(format!("dimension {n} outside 2..=30")));
    }
    check_vertex(n, x)?;
    VertexSet::from_vertices(1 << n, (0..n).map(|i| x ^ (1 << i)))
}

/// `N(y) Δ N(z)` in `Q_4`, for `y` and `z` at distance two.
pub fn q4_sym_diff_fort(y: CubeVertex, z: CubeVertex) -> Result<VertexSet> {
    check_vertex(4, y)?;
    check_vertex(4, z)?;
    if (y ^ z).count_ones() != 2 {
        return Err(Error::InvalidParameter(format!(
            "|y Δ z| must be 2 for y={y:#06b}, z={z:#06b}"
        )));
    }
    Ok(neighborhood_fort(4, y)?.symmetric_difference(&neighborhood_fort(4, z)?))
}

/// Image of `set` under the automorphism `v -> v XOR shift`.
pub fn translate(set: &VertexSet, shift: CubeVertex) -> VertexSet {
    let mut out = VertexSet::empty(set.universe());
    for v in set.iter() {
        out.insert(v ^ shift);
    }
    out
}

/// The minimum forts predicted for `Q_n`, deduplicated and sorted.
pub fn characterized_family(n: usize) -> Result<Vec<VertexSet>> {
    let mut family = BTreeSet::new();
    for x in 0..1usize << n {
        family.insert(neighborhood_fort(n, x)?);
    }
    if n == 4 {
        for y in 0..16usize {
            for z in y + 1..16 {
                if (y ^ z).count_ones() == 2 {
                    family.insert(q4_sym_diff_fort(y, z)?);
                }
            }
        }
    }
    Ok(family.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub dimension: usize,
    pub b: usize,
    pub min_fort_count: usize,
    pub characterized_count: usize,
    pub min_forts: Vec<VertexSet>,
    pub characterized: Vec<VertexSet>,
    pub characterization_match: bool,
}

/// Enumerates every minimum fort of `Q_n` and compares them with the
/// characterized family. Dimensions 2 to 4 are always allowed; 5 only with
/// `allow_dim5`, since it scans about 2·10^5 candidate sets.
pub fn verify_characterization(n: usize, allow_dim5: bool) -> Result<CharacterizationReport> {
    match n {
        2..=4 => {}
        5 if allow_dim5 => {}
        5 => return Err(Error::TooLarge("dimension 5 needs the opt-in flag".into())),
        _ if n < 2 => return Err(Error::InvalidParameter(format!("dimension {n} below 2"))),
        _ => return Err(Error::TooLarge(format!("dimension {n} above 5"))),
    }
    let q = cube(n)?;
    let min_forts = exact::enumerate_min_forts(&q)?;
    let characterized = characterized_family(n)?;
    Ok(CharacterizationReport {
        dimension: n,
        b: min_forts.first().map_or(0, VertexSet::len),
        min_fort_count: min_forts.len(),
        characterized_count: characterized.len(),
        characterization_match: min_forts == characterized,
        min_forts,
        characterized,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub dimension: usize,
    /// A bounded search found no fort with fewer than `n` vertices.
    pub no_smaller_fort: bool,
    /// `N(0)` is a fort of size `n`.
    pub witness_is_fort: bool,
    pub witness: VertexSet,
}

/// Confirms `B(Q_n) = n` without full enumeration: a search bounded by
/// `n - 1` refutes smaller forts and `N(0)` witnesses the upper bound.
pub fn confirm_value(n: usize) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("dimension {n} below 2")));
    }
    let q = cube(n)?;
    let refuted = exact::min_fort(&q, Some(n - 1))?;
    let witness = neighborhood_fort(n, 0)?;
    Ok(BoundReport {
        dimension: n,
        no_smaller_fort: !refuted.size.is_finite(),
        witness_is_fort: is_fort(&q, &witness) && witness.len() == n,
        witness,
    })
}
