//! Linear-time liar's dominating set approximation: three sequential
//! maximal independent sets plus at most one patch vertex per first-layer
//! vertex. The output is always a valid LDS on feasible instances and its
//! size is within factor 7.31 of optimal (4·√(10/3), via the bound
//! |I| ≤ √(10/3)·|D_opt| relating maximal independent sets to minimum
//! liar's dominating sets in unit disk graphs).

use thiserror::Error;

use crate::domination::lds_feasible;
use crate::exact::{exact_mlds_with, SolveError, SolveLimits};
use crate::geom::{UnitDiskGraph, VertexSet};
use crate::ratio::Ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ApproxError {
    #[error("instance admits no liar's dominating set (a connected component has fewer than 3 vertices)")]
    InfeasibleInstance,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// The three disjoint independent layers and the patch vertices added to
/// repair first-layer coverage. Patches may coincide with layer vertices;
/// the final solution is the deduplicated union.
#[derive(Debug, Clone)]
pub struct MisLayers {
    pub i1: VertexSet,
    pub i2: VertexSet,
    pub i3: VertexSet,
    pub patches: VertexSet,
}

/// Greedy maximal independent set on the subgraph induced by `active`:
/// vertices are scanned in ascending index and added when no neighbor was
/// already added.
pub fn greedy_mis(g: &UnitDiskGraph, active: &VertexSet) -> VertexSet {
    let mut in_mis = vec![false; g.len()];
    let mut out = Vec::new();
    for v in active.iter() {
        if g.neighbors(v).iter().any(|&w| in_mis[w]) {
            continue;
        }
        in_mis[v] = true;
        out.push(v);
    }
    VertexSet::new(out, g.len()).expect("active members are valid")
}

/// Runs the layered construction and returns both the solution and the
/// layer decomposition.
pub fn approx_lds_layers(g: &UnitDiskGraph) -> Result<(VertexSet, MisLayers), ApproxError> {
    if !lds_feasible(g) {
        return Err(ApproxError::InfeasibleInstance);
    }
    let n = g.len();
    let all = VertexSet::full(n);
    let i1 = greedy_mis(g, &all);
    let rest1 = difference(&all, &i1);
    let i2 = greedy_mis(g, &rest1);
    let rest2 = difference(&rest1, &i2);
    let i3 = greedy_mis(g, &rest2);

    let in_i23 = {
        let mut m = i2.mask();
        for v in i3.iter() {
            m[v] = true;
        }
        m
    };

    let mut patches = Vec::new();
    for u in i1.iter() {
        let mut hits = g.neighbors(u).iter().filter(|&&w| in_i23[w]);
        match (hits.next(), hits.next()) {
            (None, _) => {
                // No later-layer neighbor: u needs a second dominator.
                let v = *g.neighbors(u).first().expect("feasible instance has no isolated vertex");
                patches.push(v);
            }
            (Some(&v), None) => {
                // Single later-layer neighbor v: the pair (u, v) needs a
                // third dominator. Prefer a neighbor of v other than u;
                // when v's only neighbor is u, any other neighbor of u
                // serves, since it also lies in N[u] ∪ N[v].
                let w = g.neighbors(v).iter().copied().find(|&w| w != u).or_else(|| {
                    g.neighbors(u).iter().copied().find(|&w| w != v)
                });
                patches.push(w.expect("component of size >= 3 provides a third vertex"));
            }
            _ => {}
        }
    }

    let patches = VertexSet::new(patches, n).expect("patches are valid vertices");
    let solution = i1.union(&i2).union(&i3).union(&patches);
    Ok((solution, MisLayers { i1, i2, i3, patches }))
}

/// The approximate liar's dominating set alone.
pub fn approx_lds(g: &UnitDiskGraph) -> Result<VertexSet, ApproxError> {
    approx_lds_layers(g).map(|(s, _)| s)
}

/// Empirical ratio |greedy MIS| / |minimum LDS| for validating the
/// independent-set bound against the exact oracle.
pub fn mis_vs_opt_ratio(g: &UnitDiskGraph, limits: &SolveLimits) -> Result<Ratio, ApproxError> {
    let mis = greedy_mis(g, &VertexSet::full(g.len()));
    let exact = exact_mlds_with(g, limits)?;
    let opt = exact.optimum_size.ok_or(ApproxError::InfeasibleInstance)?;
    Ok(Ratio::new(mis.len() as u64, opt as u64))
}

fn difference(a: &VertexSet, b: &VertexSet) -> VertexSet {
    let keep: Vec<usize> = a.iter().filter(|&v| !b.contains(v)).collect();
    VertexSet::new(keep, a.graph_size()).expect("subset of a valid set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::check_lds;
    use crate::geom::{build_udg, Point};
    use crate::testutil::{k3, path};

    #[test]
    fn greedy_mis_cases() {
        let k = k3();
        assert_eq!(greedy_mis(&k, &VertexSet::full(3)).members(), &[0]);
        let g = path(3);
        assert_eq!(greedy_mis(&g, &VertexSet::full(3)).members(), &[0, 2]);
        let only1 = VertexSet::new(vec![1], 3).unwrap();
        assert_eq!(greedy_mis(&g, &only1).members(), &[1]);
    }

    #[test]
    fn k3_trace() {
        let g = k3();
        let (sol, layers) = approx_lds_layers(&g).unwrap();
        assert_eq!(layers.i1.members(), &[0]);
        assert_eq!(layers.i2.members(), &[1]);
        assert_eq!(layers.i3.members(), &[2]);
        assert!(layers.patches.is_empty());
        assert_eq!(sol.members(), &[0, 1, 2]);
    }

    #[test]
    fn p3_trace() {
        let g = path(3);
        let (sol, layers) = approx_lds_layers(&g).unwrap();
        assert_eq!(layers.i1.members(), &[0, 2]);
        assert_eq!(layers.i2.members(), &[1]);
        assert!(layers.i3.is_empty());
        assert_eq!(sol.members(), &[0, 1, 2]);
        assert_eq!(sol.len(), 3);
    }

    #[test]
    fn infeasible_rejected() {
        assert_eq!(approx_lds(&path(2)).unwrap_err(), ApproxError::InfeasibleInstance);
    }

    /// Instance where the single later-layer neighbor v of some u in I1 has
    /// no neighbor besides u, so the usual third-vertex choice does not
    /// exist and the fallback neighbor of u must be added instead.
    #[test]
    fn degree_one_partner_fallback() {
        let pts = [
            Point::new(4, -19),  // 0: u, adjacent to 4 and 5 only
            Point::new(4, 9),    // 1
            Point::new(0, 0),    // 2
            Point::new(8, 0),    // 3
            Point::new(4, -9),   // 4
            Point::new(4, -29),  // 5: degree-1 pendant on u
        ];
        let g = build_udg(&pts).unwrap();
        assert_eq!(g.neighbors(5), &[0]);
        let (sol, layers) = approx_lds_layers(&g).unwrap();
        assert_eq!(layers.i1.members(), &[0, 1]);
        assert_eq!(layers.i2.members(), &[2, 5]);
        assert_eq!(layers.i3.members(), &[3]);
        // u = 0 has exactly one later-layer neighbor (5) whose only
        // neighbor is u; the fallback picks 4 from N(0).
        assert!(sol.contains(4));
        assert!(check_lds(&g, &sol).is_valid());
    }

    #[test]
    fn solution_size_bounded_by_twice_layers() {
        for g in [k3(), path(3), path(5), path(9)] {
            let (sol, layers) = approx_lds_layers(&g).unwrap();
            let layer_total = layers.i1.len() + layers.i2.len() + layers.i3.len();
            assert!(sol.len() <= 2 * layer_total);
            assert!(check_lds(&g, &sol).is_valid());
        }
    }

    #[test]
    fn ratio_examples() {
        let limits = SolveLimits::default();
        assert_eq!(mis_vs_opt_ratio(&k3(), &limits).unwrap(), Ratio::new(1, 3));
        assert_eq!(mis_vs_opt_ratio(&path(3), &limits).unwrap(), Ratio::new(2, 3));
    }

    #[test]
    fn determinism() {
        let g = path(7);
        let a = approx_lds(&g).unwrap();
        let b = approx_lds(&g).unwrap();
        assert_eq!(a, b);
    }
}
