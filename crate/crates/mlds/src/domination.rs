//! Domination predicates and liar's-domination certificates.

use crate::geom::{UnitDiskGraph, VertexSet};

/// Which constraint a failed certificate witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// A vertex with fewer than two dominators.
    Single(usize),
    /// A pair of distinct vertices whose joint neighborhoods see fewer
    /// than three dominators.
    Pair(usize, usize),
}

/// Outcome of a liar's-domination check. Valid iff both conditions hold;
/// otherwise `witness` names the first violation in lowest-index order
/// (all single-vertex violations are scanned before pair violations).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdsCertificate {
    pub condition1_ok: bool,
    pub condition2_ok: bool,
    pub witness: Option<Witness>,
}

impl LdsCertificate {
    pub fn is_valid(&self) -> bool {
        self.condition1_ok && self.condition2_ok && self.witness.is_none()
    }
}

/// Per-vertex dominator bitsets over `d`, as packed u64 words.
fn dominator_bitsets(g: &UnitDiskGraph, d: &VertexSet) -> (Vec<Vec<u64>>, usize) {
    let n = g.len();
    let words = n.div_ceil(64);
    let d_mask = d.mask();
    let mut sets = vec![vec![0u64; words]; n];
    for v in 0..n {
        if d_mask[v] {
            sets[v][v / 64] |= 1 << (v % 64);
        }
        for &w in g.neighbors(v) {
            if d_mask[w] {
                sets[v][w / 64] |= 1 << (w % 64);
            }
        }
    }
    (sets, words)
}

fn popcount(words: &[u64]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

/// True iff every vertex has at least one dominator in `d`.
pub fn is_dominating(g: &UnitDiskGraph, d: &VertexSet) -> bool {
    is_ktuple_dominating(g, d, 1)
}

/// True iff every vertex has at least `k` dominators in `d` (closed
/// neighborhoods).
pub fn is_ktuple_dominating(g: &UnitDiskGraph, d: &VertexSet, k: usize) -> bool {
    assert!(k >= 1, "k must be positive");
    let d_mask = d.mask();
    (0..g.len()).all(|v| {
        let mut count = usize::from(d_mask[v]);
        count += g.neighbors(v).iter().filter(|&&w| d_mask[w]).count();
        count >= k
    })
}

/// Checks both liar's-domination conditions for `d` and reports the first
/// violation deterministically.
pub fn check_lds(g: &UnitDiskGraph, d: &VertexSet) -> LdsCertificate {
    let n = g.len();
    let (sets, _) = dominator_bitsets(g, d);
    let counts: Vec<u32> = sets.iter().map(|s| popcount(s)).collect();

    let mut condition1_ok = true;
    let mut witness = None;
    for v in 0..n {
        if counts[v] < 2 {
            condition1_ok = false;
            witness = Some(Witness::Single(v));
            break;
        }
    }

    let mut condition2_ok = true;
    'outer: for u in 0..n {
        for v in (u + 1)..n {
            let joint: u32 = sets[u]
                .iter()
                .zip(&sets[v])
                .map(|(a, b)| (a | b).count_ones())
                .sum();
            if joint < 3 {
                condition2_ok = false;
                if witness.is_none() {
                    witness = Some(Witness::Pair(u, v));
                }
                break 'outer;
            }
        }
    }

    LdsCertificate { condition1_ok, condition2_ok, witness }
}

/// Whether any liar's dominating set exists: true iff every connected
/// component has at least three vertices. With components of size ≥ 3 the
/// whole vertex set is an LDS; a component of size ≤ 2 makes one of the two
/// conditions unsatisfiable.
pub fn lds_feasible(g: &UnitDiskGraph) -> bool {
    g.connected_components().iter().all(|c| c.len() >= 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{build_udg, Point, VertexSet};
    use crate::testutil::{k3, path};

    fn vs(members: &[usize], n: usize) -> VertexSet {
        VertexSet::new(members.to_vec(), n).unwrap()
    }

    #[test]
    fn dominating_basics() {
        let g = path(3);
        assert!(is_dominating(&g, &vs(&[1], 3)));
        assert!(!is_dominating(&g, &vs(&[0], 3)));
        assert!(is_dominating(&g, &VertexSet::full(3)));
    }

    #[test]
    fn ktuple_basics() {
        let k = k3();
        assert!(is_ktuple_dominating(&k, &VertexSet::full(3), 3));
        let g = path(3);
        assert!(!is_ktuple_dominating(&g, &VertexSet::full(3), 3)); // endpoint sees only 2
        let far = build_udg(&[Point::new(0, 0), Point::new(500, 0), Point::new(900, 0)]).unwrap();
        assert!(!is_ktuple_dominating(&far, &VertexSet::empty(3), 1));
    }

    #[test]
    fn check_lds_p3_full_is_valid() {
        let g = path(3);
        let cert = check_lds(&g, &VertexSet::full(3));
        assert!(cert.is_valid());
    }

    #[test]
    fn check_lds_p3_pair_violation() {
        let g = path(3);
        let cert = check_lds(&g, &vs(&[0, 1], 3));
        assert!(cert.condition1_ok);
        assert!(!cert.condition2_ok);
        assert!(matches!(cert.witness, Some(Witness::Pair(_, _))));
    }

    #[test]
    fn check_lds_p5_missing_middle() {
        // Pair (0,1): N[0] ∪ N[1] = {0,1,2}, intersect D = {0,1}, count 2 < 3.
        let g = path(5);
        let cert = check_lds(&g, &vs(&[0, 1, 3, 4], 5));
        assert!(!cert.is_valid());
        assert_eq!(cert.witness, Some(Witness::Pair(0, 1)));
    }

    #[test]
    fn check_lds_condition1_witness_is_lowest_index() {
        let g = path(5);
        let cert = check_lds(&g, &vs(&[3, 4], 5));
        assert!(!cert.condition1_ok);
        assert_eq!(cert.witness, Some(Witness::Single(0)));
    }

    #[test]
    fn feasibility_cases() {
        let one = build_udg(&[Point::new(0, 0)]).unwrap();
        assert!(!lds_feasible(&one));
        let two = path(2);
        assert!(!lds_feasible(&two));
        assert!(lds_feasible(&path(3)));
        // Mixed: a triangle plus an isolated vertex is infeasible.
        let mixed = build_udg(&[
            Point::new(0, 0),
            Point::new(10, 0),
            Point::new(5, 8),
            Point::new(500, 500),
        ])
        .unwrap();
        assert!(!lds_feasible(&mixed));
    }

    #[test]
    fn full_set_valid_iff_feasible() {
        for g in [path(1), path(2), path(3), path(6), k3()] {
            assert_eq!(check_lds(&g, &VertexSet::full(g.len())).is_valid(), lds_feasible(&g));
        }
    }
}
