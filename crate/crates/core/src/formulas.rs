//! Closed forms and composition rules for the zero blocking number, plus the
//! dispatcher [`solve_auto`] that tries the cheap rules before falling back
//! to exhaustive search.

use serde::Serialize;

use crate::count::{ExtendedCount, Finite, Infinite};
use crate::error::{Error, Result};
use crate::exact::{self, find_twins};
use crate::graph::{generate, Family, Graph};
use crate::tree_dp::zbs_tree;
use crate::vertex_set::VertexSet;

/// Families with a closed-form zero blocking number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFamily {
    Path(u64),
    Cycle(u64),
    Wheel(u64),
    /// `mK_1 + P_n`
    Fan {
        m: u64,
        n: u64,
    },
    /// `mK_1 + C_n`
    Cone {
        m: u64,
        n: u64,
    },
    Hypercube(u64),
}

fn invalid<T>(msg: String) -> Result<T> {
    Err(Error::InvalidParameter(msg))
}

fn wheel_value(n: u64) -> u64 {
    if n == 4 {
        2
    } else {
        (n + 3).div_ceil(3)
    }
}

pub fn b_closed_form(family: ClosedFamily) -> Result<ExtendedCount> {
    use ClosedFamily::*;
    let value = match family {
        Path(n) if n >= 1 => (n + 1).div_ceil(2),
        Cycle(n) if n >= 3 => n.div_ceil(2),
        Wheel(n) if n >= 3 => wheel_value(n),
        Fan { m: 1, n } if n >= 1 => (n + 3).div_ceil(3),
        Fan { m, n } if m >= 2 && n >= 1 => 2,
        Cone { m: 1, n } if n >= 3 => wheel_value(n),
        Cone { m, n } if m >= 2 && n >= 3 => 2,
        Hypercube(n) if n >= 2 => n,
        other => return invalid(format!("{other:?} is outside the closed-form range")),
    };
    Ok(Finite(value))
}

fn is_path_graph(g: &Graph) -> bool {
    g.n() >= 1 && g.is_tree() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

fn is_cycle_graph(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// Recognizes graphs that are, up to relabeling, a path, cycle, wheel or
/// fan `K_1 + P_n`. Hypercubes are recognized only in the canonical bitmask
/// labeling.
pub fn recognize_closed_family(g: &Graph) -> Option<ClosedFamily> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return None;
    }
    if is_path_graph(g) {
        return Some(ClosedFamily::Path(n as u64));
    }
    if is_cycle_graph(g) {
        return Some(ClosedFamily::Cycle(n as u64));
    }
    // Any two universal vertices are swapped by an automorphism, so one suffices.
    if let Some(hub) = (0..n).find(|&v| g.degree(v) == n - 1) {
        let rest = g.remove_vertex(hub);
        let k = (n - 1) as u64;
        if is_cycle_graph(&rest) {
            return Some(ClosedFamily::Wheel(k));
        }
        if is_path_graph(&rest) {
            return Some(ClosedFamily::Fan { m: 1, n: k });
        }
    }
    let d = n.trailing_zeros() as usize;
    if n.is_power_of_two() && d >= 2 && generate(Family::Hypercube(d)).is_ok_and(|q| &q == g) {
        return Some(ClosedFamily::Hypercube(d as u64));
    }
    None
}

/// `B(G_1 ∪ ... ∪ G_r) = min B(G_i)`.
pub fn b_union(component_values: &[ExtendedCount]) -> Result<ExtendedCount> {
    if component_values.is_empty() {
        return invalid("union of no graphs".into());
    }
    Ok(ExtendedCount::min_of(component_values.iter().copied()))
}

/// Second zero blocking number from the isolated-vertex rules:
/// two or more isolated vertices give 2, exactly one isolated vertex `x`
/// gives `B(G - x)`, none gives `B(G)`; a single vertex gives infinity.
pub fn b_prime(g: &Graph) -> Result<ExtendedCount> {
    if g.n() <= 1 {
        return Ok(Infinite);
    }
    match g.isolated_vertices().as_slice() {
        [] => Ok(solve_auto(g)?.value),
        [x] => Ok(solve_auto(&g.remove_vertex(*x))?.value),
        _ => Ok(Finite(2)),
    }
}

/// `B'(G ∪ H)`: 2 when the union has two isolated vertices, otherwise the
/// smaller of the two second zero blocking numbers.
pub fn b_prime_union(g: &Graph, h: &Graph, bprimes: (ExtendedCount, ExtendedCount)) -> ExtendedCount {
    if g.isolated_vertices().len() + h.isolated_vertices().len() >= 2 {
        Finite(2)
    } else {
        bprimes.0.min(bprimes.1)
    }
}

/// The quantities the join rule depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JoinInputs {
    pub n: u64,
    pub m: u64,
    pub bprime_g: ExtendedCount,
    pub bprime_h: ExtendedCount,
    pub gamma_g: u64,
    pub gamma_h: u64,
}

impl JoinInputs {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 || self.gamma_g == 0 || self.gamma_h == 0 {
            return invalid(format!("{self:?}: orders and domination numbers must be positive"));
        }
        Ok(())
    }

    /// Computes the inputs for `G + H` with the exhaustive oracles.
    pub fn from_graphs(g: &Graph, h: &Graph) -> Result<Self> {
        Ok(Self {
            n: g.n() as u64,
            m: h.n() as u64,
            bprime_g: exact::second_min_fort(g)?.size,
            bprime_h: exact::second_min_fort(h)?.size,
            gamma_g: exact::domination_number(g)?.value(),
            gamma_h: exact::domination_number(h)?.value(),
        })
    }
}

/// The join bound `a`: `γ(G) + γ(H)` if either side is a single vertex or
/// both have a dominating vertex; 4 if both domination numbers are at least
/// 3; otherwise 3.
pub fn compute_a(inputs: &JoinInputs) -> u64 {
    let (gg, gh) = (inputs.gamma_g, inputs.gamma_h);
    if inputs.n == 1 || inputs.m == 1 || (gg == 1 && gh == 1) {
        gg + gh
    } else if gg >= 3 && gh >= 3 {
        4
    } else {
        3
    }
}

/// `B(G + H) = min(B'(G), B'(H), a)`.
pub fn b_join(inputs: &JoinInputs) -> Result<ExtendedCount> {
    inputs.validate()?;
    Ok(inputs.bprime_g.min(inputs.bprime_h).min(Finite(compute_a(inputs))))
}

/// [`b_join`] with its inputs computed from the two graphs.
pub fn b_join_graphs(g: &Graph, h: &Graph) -> Result<ExtendedCount> {
    b_join(&JoinInputs::from_graphs(g, h)?)
}

/// Whether `g` is a cograph, decided by deleting one vertex of a twin pair
/// until a single vertex remains or no twins are left.
pub fn is_cograph(g: &Graph) -> bool {
    let mut current = g.clone();
    while current.n() > 1 {
        match find_twins(&current) {
            Some((_, y)) => current = current.remove_vertex(y),
            None => return false,
        }
    }
    true
}

/// Cograph rule: 1 with an isolated vertex, 2 otherwise; `None` if `g` is
/// not a cograph.
pub fn b_cograph(g: &Graph) -> Option<ExtendedCount> {
    if g.n() == 0 || !is_cograph(g) {
        return None;
    }
    if g.isolated_vertices().is_empty() {
        Some(Finite(2))
    } else {
        Some(Finite(1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Isolated,
    Twins,
    Formula,
    Component,
    TreeDp,
    Cograph,
    Join,
    Brute,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub value: ExtendedCount,
    pub method: Method,
    pub witness: Option<VertexSet>,
}

/// Computes `B(G)` with the first applicable rule: isolated vertex,
/// components, twins, tree program, closed-form family, cograph rule, and
/// finally exhaustive search. The rule that fired is reported.
pub fn solve_auto(g: &Graph) -> Result<SolveReport> {
    let n = g.n();
    if n == 0 {
        return invalid("graph has no vertices".into());
    }
    if let Some(&x) = g.isolated_vertices().first() {
        return Ok(SolveReport {
            value: Finite(1),
            method: Method::Isolated,
            witness: Some(VertexSet::from_vertices(n, [x])?),
        });
    }
    let components = g.components();
    if components.len() > 1 {
        let mut best: Option<SolveReport> = None;
        for c in &components {
            let sub = solve_auto(&c.graph)?;
            if best.as_ref().is_none_or(|b| sub.value < b.value) {
                let witness = sub
                    .witness
                    .map(|w| VertexSet::from_vertices(n, w.iter().map(|v| c.host[v])))
                    .transpose()?;
                best = Some(SolveReport {
                    value: sub.value,
                    method: Method::Component,
                    witness,
                });
            }
        }
        return Ok(best.expect("at least two components"));
    }
    if let Some((x, y)) = find_twins(g) {
        return Ok(SolveReport {
            value: Finite(2),
            method: Method::Twins,
            witness: Some(VertexSet::from_vertices(n, [x, y])?),
        });
    }
    if g.is_tree() {
        let sol = zbs_tree(g, None)?;
        return Ok(SolveReport {
            value: sol.value,
            method: Method::TreeDp,
            witness: Some(sol.witness),
        });
    }
    if let Some(family) = recognize_closed_family(g) {
        return Ok(SolveReport {
            value: b_closed_form(family)?,
            method: Method::Formula,
            witness: None,
        });
    }
    if let Some(value) = b_cograph(g) {
        return Ok(SolveReport {
            value,
            method: Method::Cograph,
            witness: None,
        });
    }
    let r = exact::min_fort(g, None)?;
    Ok(SolveReport {
        value: r.size,
        method: Method::Brute,
        witness: r.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::is_fort;
    use crate::graph::{cartesian_product, join, union};

    fn fam(f: Family) -> Graph {
        generate(f).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_list(10, &edges).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        use ClosedFamily::*;
        assert_eq!(b_closed_form(Wheel(4)).unwrap(), Finite(2));
        assert_eq!(b_closed_form(Wheel(9)).unwrap(), Finite(4));
        assert_eq!(b_closed_form(Fan { m: 1, n: 7 }).unwrap(), Finite(4));
        assert_eq!(b_closed_form(Hypercube(5)).unwrap(), Finite(5));
        assert_eq!(b_closed_form(Cone { m: 3, n: 5 }).unwrap(), Finite(2));
        assert_eq!(b_closed_form(Cone { m: 1, n: 4 }).unwrap(), Finite(2));
        assert!(b_closed_form(Cycle(2)).is_err());
        assert!(b_closed_form(Hypercube(1)).is_err());
        assert!(b_closed_form(Fan { m: 0, n: 3 }).is_err());
    }

    #[test]
    fn closed_forms_match_oracle() {
        for n in 1..=14u64 {
            let g = fam(Family::Path(n as usize));
            assert_eq!(
                b_closed_form(ClosedFamily::Path(n)).unwrap(),
                exact::min_fort(&g, None).unwrap().size
            );
            for m in 1..=3u64 {
                if (m as usize) + (n as usize) > 14 {
                    continue;
                }
                let fan = fam(Family::Fan {
                    m: m as usize,
                    n: n as usize,
                });
                assert_eq!(
                    b_closed_form(ClosedFamily::Fan { m, n }).unwrap(),
                    exact::min_fort(&fan, None).unwrap().size,
                    "fan m={m} n={n}"
                );
            }
        }
        for n in 3..=14u64 {
            let c = fam(Family::Cycle(n as usize));
            assert_eq!(
                b_closed_form(ClosedFamily::Cycle(n)).unwrap(),
                exact::min_fort(&c, None).unwrap().size
            );
            let w = fam(Family::Wheel(n as usize));
            assert_eq!(
                b_closed_form(ClosedFamily::Wheel(n)).unwrap(),
                exact::min_fort(&w, None).unwrap().size,
                "W{n}"
            );
            let cone = fam(Family::Cone { m: 2, n: n as usize });
            assert_eq!(
                b_closed_form(ClosedFamily::Cone { m: 2, n }).unwrap(),
                exact::min_fort(&cone, None).unwrap().size
            );
        }
    }

    #[test]
    fn union_examples() {
        assert_eq!(b_union(&[Finite(3), Finite(2)]).unwrap(), Finite(2));
        assert_eq!(b_union(&[Finite(1)]).unwrap(), Finite(1));
        assert_eq!(b_union(&[Infinite, Finite(4)]).unwrap(), Finite(4));
        assert!(b_union(&[]).is_err());
    }

    #[test]
    fn b_prime_examples() {
        assert_eq!(b_prime(&Graph::empty(3)).unwrap(), Finite(2));
        assert_eq!(b_prime(&fam(Family::Cycle(5))).unwrap(), Finite(3));
        assert_eq!(b_prime(&Graph::empty(1)).unwrap(), Infinite);
        let g = union(&Graph::empty(1), &fam(Family::Path(4)));
        assert_eq!(b_prime(&g).unwrap(), Finite(3));
    }

    #[test]
    fn b_prime_union_examples() {
        let k1 = Graph::empty(1);
        assert_eq!(b_prime_union(&k1, &k1, (Infinite, Infinite)), Finite(2));
        let (c4, c5) = (fam(Family::Cycle(4)), fam(Family::Cycle(5)));
        assert_eq!(b_prime_union(&c4, &c5, (Finite(2), Finite(3))), Finite(2));
        let p4 = fam(Family::Path(4));
        let bp4 = exact::second_min_fort(&p4).unwrap().size;
        assert_eq!(bp4, Finite(3));
        assert_eq!(b_prime_union(&k1, &p4, (Infinite, bp4)), Finite(3));
        let u = union(&k1, &p4);
        assert_eq!(exact::second_min_fort(&u).unwrap().size, Finite(3));
    }

    fn inputs(n: u64, m: u64, gamma_g: u64, gamma_h: u64) -> JoinInputs {
        JoinInputs {
            n,
            m,
            bprime_g: Infinite,
            bprime_h: Infinite,
            gamma_g,
            gamma_h,
        }
    }

    #[test]
    fn a_table() {
        assert_eq!(compute_a(&inputs(1, 4, 1, 2)), 3);
        assert_eq!(compute_a(&inputs(3, 3, 1, 1)), 2);
        assert_eq!(compute_a(&inputs(5, 5, 2, 3)), 3);
        assert_eq!(compute_a(&inputs(9, 9, 3, 3)), 4);
        assert_eq!(compute_a(&inputs(4, 4, 1, 3)), 3);
        assert_eq!(compute_a(&inputs(6, 1, 2, 1)), 3);
    }

    #[test]
    fn join_examples() {
        let w5 = JoinInputs {
            n: 1,
            m: 5,
            bprime_g: Infinite,
            bprime_h: Finite(3),
            gamma_g: 1,
            gamma_h: 2,
        };
        assert_eq!(b_join(&w5).unwrap(), Finite(3));
        let w4 = JoinInputs {
            n: 1,
            m: 4,
            bprime_g: Infinite,
            bprime_h: Finite(2),
            gamma_g: 1,
            gamma_h: 2,
        };
        assert_eq!(b_join(&w4).unwrap(), Finite(2));
        let k22 = JoinInputs {
            n: 2,
            m: 2,
            bprime_g: Finite(2),
            bprime_h: Finite(2),
            gamma_g: 1,
            gamma_h: 1,
        };
        assert_eq!(b_join(&k22).unwrap(), Finite(2));
        assert!(b_join(&inputs(0, 3, 1, 1)).is_err());

        let k1 = Graph::empty(1);
        for n in [4usize, 5, 9] {
            let c = fam(Family::Cycle(n));
            assert_eq!(
                b_join_graphs(&k1, &c).unwrap(),
                exact::min_fort(&join(&k1, &c), None).unwrap().size
            );
        }
    }

    #[test]
    fn cograph_examples() {
        assert_eq!(b_cograph(&fam(Family::Complete(4))), Some(Finite(2)));
        assert_eq!(b_cograph(&Graph::empty(2)), Some(Finite(1)));
        assert_eq!(b_cograph(&fam(Family::Path(4))), None);
        assert_eq!(b_cograph(&Graph::empty(1)), Some(Finite(1)));
        assert!(is_cograph(&fam(Family::Cycle(4))));
        assert!(!is_cograph(&fam(Family::Cycle(5))));
    }

    #[test]
    fn solve_auto_examples() {
        let g = union(&Graph::empty(1), &fam(Family::Cycle(9)));
        let r = solve_auto(&g).unwrap();
        assert_eq!((r.value, r.method), (Finite(1), Method::Isolated));

        let p7 = fam(Family::Path(7));
        let r = solve_auto(&p7).unwrap();
        assert_eq!((r.value, r.method), (Finite(4), Method::TreeDp));
        assert!(is_fort(&p7, r.witness.as_ref().unwrap()));

        let pet = petersen();
        let r = solve_auto(&pet).unwrap();
        assert_eq!(r.method, Method::Brute);
        assert_eq!(r.value, exact::min_fort(&pet, None).unwrap().size);

        let forest = union(&fam(Family::Path(5)), &fam(Family::Path(4)));
        let r = solve_auto(&forest).unwrap();
        assert_eq!((r.value, r.method), (Finite(3), Method::Component));
        assert!(is_fort(&forest, r.witness.as_ref().unwrap()));

        let r = solve_auto(&fam(Family::Cycle(4))).unwrap();
        assert_eq!((r.value, r.method), (Finite(2), Method::Twins));

        let r = solve_auto(&fam(Family::Cycle(30))).unwrap();
        assert_eq!((r.value, r.method), (Finite(15), Method::Formula));

        let torus = cartesian_product(&fam(Family::Cycle(5)), &fam(Family::Cycle(6)));
        assert!(matches!(solve_auto(&torus), Err(Error::TooLarge(_))));
    }

    #[test]
    fn recognition() {
        use ClosedFamily::*;
        assert_eq!(recognize_closed_family(&fam(Family::Path(1))), Some(Path(1)));
        assert_eq!(recognize_closed_family(&fam(Family::Path(6))), Some(Path(6)));
        assert_eq!(recognize_closed_family(&fam(Family::Cycle(3))), Some(Cycle(3)));
        assert_eq!(recognize_closed_family(&fam(Family::Wheel(3))), Some(Wheel(3)));
        assert_eq!(recognize_closed_family(&fam(Family::Wheel(8))), Some(Wheel(8)));
        assert_eq!(
            recognize_closed_family(&fam(Family::Fan { m: 1, n: 5 })),
            Some(Fan { m: 1, n: 5 })
        );
        assert_eq!(recognize_closed_family(&fam(Family::Hypercube(3))), Some(Hypercube(3)));
        assert_eq!(recognize_closed_family(&fam(Family::Hypercube(2))), Some(Cycle(4)));
        assert_eq!(recognize_closed_family(&fam(Family::Star(3))), None);
        assert_eq!(recognize_closed_family(&petersen()), None);
        assert_eq!(recognize_closed_family(&Graph::empty(2)), None);

        let relabeled = Graph::from_edge_list(5, &[(3, 0), (0, 4), (4, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(recognize_closed_family(&relabeled), Some(Cycle(5)));
        for family in [
            Family::Path(9),
            Family::Cycle(9),
            Family::Wheel(7),
            Family::Fan { m: 1, n: 7 },
            Family::Hypercube(3),
        ] {
            let g = fam(family);
            let f = recognize_closed_family(&g).unwrap();
            assert_eq!(
                b_closed_form(f).unwrap(),
                exact::min_fort(&g, None).unwrap().size,
                "{family:?}"
            );
        }
    }
}
