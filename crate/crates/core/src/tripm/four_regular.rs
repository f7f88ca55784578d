//! Constructive procedure for 3-connected 4-regular simple graphs.
//!
//! Take a perfect matching `M1` and look at `G' = G - M1`, which is cubic.
//! If `G'` has a perfect matching `M2`, then `(M1, M2, M2)` works since
//! `M1 ∩ M2 = ∅`. Otherwise, when the Gallai–Edmonds barrier of `G'` is a
//! single vertex `u` and nothing is saturated, `G' - u` splits into
//! components joined to `u` by one edge each, and two `M1` edges `e`, `f`
//! linking a shared component to the other two give matchings `M2 ∋ e` and
//! `M3 ∋ f` inside `G' + e + f` that meet `M1` only in `e` and `f`.

use super::{
    find_triple_direct, verify_triple, TripleCertificate, TripmError, Verdict, Route,
};
use crate::budget::Budget;
use crate::graph::{is_k_connected, EdgeId, EdgeSet, Graph};
use crate::matching::{gallai_edmonds, max_matching, perfect_matching, perfect_matching_with_forced, Matching};

/// Largest order for which the construction is guaranteed to succeed.
const GUARANTEED_ORDER: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourRegularStep {
    /// `G - M1` has a perfect matching disjoint from `M1`.
    DisjointPair,
    /// Built through a single barrier vertex; `M1 ∩ M2 = {e}` and
    /// `M1 ∩ M3 = {f}`.
    SingleBarrier { e: EdgeId, f: EdgeId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourRegularWitness {
    pub triple: TripleCertificate,
    pub step: FourRegularStep,
}

/// 4-regular, simple, even order, 3-connected.
pub fn four_regular_preconditions(g: &Graph) -> Result<(), TripmError> {
    let fail = |msg: &str| Err(TripmError::Precondition(msg.into()));
    if !g.is_regular(4) || g.vertex_count() == 0 {
        return fail("graph is not 4-regular");
    }
    if !g.is_simple() {
        return fail("graph has parallel edges");
    }
    if g.vertex_count() % 2 == 1 {
        return fail("graph has odd order");
    }
    if !is_k_connected(g, 3) {
        return fail("graph is not 3-connected");
    }
    Ok(())
}

/// Steps (i)-(iii) with `M1` from the maximum matching routine. `Ok(None)`
/// when neither step applies.
pub fn four_regular_construct(g: &Graph) -> Result<Option<FourRegularWitness>, TripmError> {
    four_regular_preconditions(g)?;
    let m1 = max_matching(g);
    if !m1.is_perfect(g) {
        return Err(TripmError::ConstructionFailed { n: g.vertex_count() });
    }
    construct(g, &m1)
}

/// Steps (ii)-(iii) for a given perfect matching `m1`.
pub fn four_regular_construct_from(
    g: &Graph,
    m1: &Matching,
) -> Result<Option<FourRegularWitness>, TripmError> {
    four_regular_preconditions(g)?;
    if m1.edges().universe() != g.edge_count() || !m1.is_perfect(g) {
        return Err(TripmError::Precondition("M1 is not a perfect matching".into()));
    }
    construct(g, m1)
}

fn construct(g: &Graph, m1: &Matching) -> Result<Option<FourRegularWitness>, TripmError> {
    let n = g.vertex_count();
    let m1_edges = m1.edges();
    let rest = m1_edges.complement();
    let (sub, ids) = g.spanning_subgraph(&rest);
    if let Some(m2) = perfect_matching(&sub) {
        let mut m2_edges = g.empty_edge_set();
        m2_edges.extend(m2.edges().iter().map(|e| ids[e]));
        let triple = TripleCertificate::new(m1_edges.clone(), m2_edges.clone(), m2_edges);
        return Ok(Some(FourRegularWitness {
            triple,
            step: FourRegularStep::DisjointPair,
        }));
    }

    let ge = gallai_edmonds(&sub);
    if ge.barrier.len() != 1 || !ge.saturated.is_empty() {
        return Ok(None);
    }
    let u = ge.barrier.first().expect("one barrier vertex");
    let failed = || {
        if n <= GUARANTEED_ORDER {
            Err(TripmError::ConstructionFailed { n })
        } else {
            Ok(None)
        }
    };
    if ge.component_count() != 3 {
        return failed();
    }

    // M1 edges between distinct components, with the components they join.
    let links: Vec<(EdgeId, usize, usize)> = m1_edges
        .iter()
        .filter_map(|e| {
            let (x, y) = g.endpoints(e);
            let (cx, cy) = (ge.component_of(x)?, ge.component_of(y)?);
            (cx != cy).then_some((e, cx.min(cy), cx.max(cy)))
        })
        .collect();
    for (i, &(e, a1, b1)) in links.iter().enumerate() {
        for &(f, a2, b2) in &links[i + 1..] {
            if (a1, b1) == (a2, b2) {
                continue;
            }
            let shared = if a1 == a2 || a1 == b2 { a1 } else { b1 };
            let second = if a1 == shared { b1 } else { a1 };
            let third = if a2 == shared { b2 } else { a2 };
            if let Some(w) = attempt(g, &sub, &ids, m1_edges, u, (e, second), (f, third), &ge.components) {
                return Ok(Some(w));
            }
        }
    }
    failed()
}

/// `e` reaches component `second`, `f` reaches component `third`; `y` and
/// `z` are the neighbours of `u` in those components.
#[allow(clippy::too_many_arguments)]
fn attempt(
    g: &Graph,
    sub: &Graph,
    ids: &[EdgeId],
    m1: &EdgeSet,
    u: usize,
    (e, second): (EdgeId, usize),
    (f, third): (EdgeId, usize),
    components: &[crate::matching::DComponent],
) -> Option<FourRegularWitness> {
    let neighbour_in = |c: usize| {
        sub.incident(u)
            .iter()
            .find(|&&(w, _)| components[c].vertices.contains(w))
            .map(|&(_, se)| ids[se])
    };
    let uy = neighbour_in(second)?;
    let uz = neighbour_in(third)?;
    let mut outside = m1.clone();
    outside.remove(e);
    outside.remove(f);
    let m2 = perfect_matching_with_forced(g, &EdgeSet::from_ids(g.edge_count(), [e, uz]), &outside).ok()??;
    let m3 = perfect_matching_with_forced(g, &EdgeSet::from_ids(g.edge_count(), [f, uy]), &outside).ok()??;
    let triple = TripleCertificate::new(m1.clone(), m2.into_edges(), m3.into_edges());
    verify_triple(g, &triple).is_valid().then_some(FourRegularWitness {
        triple,
        step: FourRegularStep::SingleBarrier { e, f },
    })
}

/// The construction, falling back to the direct search when it does not
/// apply.
pub fn four_regular_fastpath(g: &Graph, budget: &Budget) -> Result<Verdict, TripmError> {
    if let Some(w) = four_regular_construct(g)? {
        budget.tick().ok();
        return Ok(Verdict::found(w.triple, None, Route::FourRegular));
    }
    find_triple_direct(g, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{generate, Family};

    #[test]
    fn octahedron_disjoint_pair() {
        let g = generate(Family::Octahedron).unwrap();
        let w = four_regular_construct(&g).unwrap().unwrap();
        assert_eq!(w.step, FourRegularStep::DisjointPair);
        assert!(verify_triple(&g, &w.triple).is_valid());
        assert!(four_regular_fastpath(&g, &Budget::unlimited()).unwrap().is_admissible());
    }

    #[test]
    fn preconditions_are_checked() {
        let k5 = generate(Family::Complete { n: 5 }).unwrap();
        assert!(matches!(four_regular_construct(&k5), Err(TripmError::Precondition(_))));
        let cube = generate(Family::Cube).unwrap();
        assert!(matches!(four_regular_construct(&cube), Err(TripmError::Precondition(_))));
    }
}
