//! Brute-force minimum liar's dominating set, certified optimal by
//! size-increasing enumeration, plus the restricted variant where the two
//! liar's conditions are required only for a target subset while dominators
//! may come from anywhere in the host graph.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::domination::lds_feasible;
use crate::geom::{UnitDiskGraph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("candidate universe has {n} vertices, exceeding the oracle cap of {cap}")]
    OracleTooLarge { n: usize, cap: usize },
    #[error("time budget of {budget_ms} ms exhausted")]
    TimeBudgetExceeded { budget_ms: u64 },
    #[error("target vertex {vertex} cannot be double-dominated: its closed neighborhood has fewer than 2 vertices")]
    InfeasibleTarget { vertex: usize },
    #[error("target pair ({u}, {v}) cannot see 3 dominators: their joint closed neighborhood has fewer than 3 vertices")]
    InfeasibleTargetPair { u: usize, v: usize },
}

/// Resource limits for the exhaustive search. The cap bounds the candidate
/// universe; enumeration state is kept in single 64-bit masks, so the cap
/// may not exceed 64.
#[derive(Debug, Clone)]
pub struct SolveLimits {
    pub max_vertices: usize,
    pub time_budget: Option<Duration>,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits { max_vertices: 24, time_budget: None }
    }
}

impl SolveLimits {
    pub fn with_cap(max_vertices: usize) -> Self {
        assert!(max_vertices <= 64, "oracle cap may not exceed 64");
        SolveLimits { max_vertices, time_budget: None }
    }

    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }
}

/// Result of an exhaustive solve. `solution` is present iff the instance is
/// feasible; it passes the (restricted) liar's conditions and no smaller
/// set does, certified by the size-increasing search itself.
/// `subsets_examined` counts complete candidate subsets evaluated.
#[derive(Debug, Clone)]
pub struct ExactResult {
    pub solution: Option<VertexSet>,
    pub optimum_size: Option<usize>,
    pub infeasible: bool,
    pub subsets_examined: u64,
}

/// Minimum LDS of the whole graph under default limits.
pub fn exact_mlds(g: &UnitDiskGraph) -> Result<ExactResult, SolveError> {
    exact_mlds_with(g, &SolveLimits::default())
}

pub fn exact_mlds_with(g: &UnitDiskGraph, limits: &SolveLimits) -> Result<ExactResult, SolveError> {
    let n = g.len();
    if n > limits.max_vertices {
        return Err(SolveError::OracleTooLarge { n, cap: limits.max_vertices });
    }
    if !lds_feasible(g) {
        return Ok(ExactResult {
            solution: None,
            optimum_size: None,
            infeasible: true,
            subsets_examined: 0,
        });
    }
    let all: Vec<usize> = (0..n).collect();
    let mut engine = Engine::new(g, &all, &all, limits);
    let sol = engine.run()?.expect("feasible instance must yield a solution");
    Ok(ExactResult {
        optimum_size: Some(sol.len()),
        solution: Some(VertexSet::new(sol, n).expect("valid indices")),
        infeasible: false,
        subsets_examined: engine.examined,
    })
}

/// Minimum set `D ⊆ V(g)` such that every vertex of `target` has at least
/// two dominators in `D` and every distinct pair of target vertices jointly
/// sees at least three. Candidates are restricted to the hop-2 ball around
/// the target; farther vertices cannot dominate any target vertex.
pub fn exact_mlds_restricted(
    g: &UnitDiskGraph,
    target: &VertexSet,
) -> Result<ExactResult, SolveError> {
    exact_mlds_restricted_with(g, target, &SolveLimits::default())
}

pub fn exact_mlds_restricted_with(
    g: &UnitDiskGraph,
    target: &VertexSet,
    limits: &SolveLimits,
) -> Result<ExactResult, SolveError> {
    assert!(!target.is_empty(), "target must be nonempty");
    for &t in target.members() {
        if 1 + g.degree(t) < 2 {
            return Err(SolveError::InfeasibleTarget { vertex: t });
        }
    }
    let universe = g
        .bfs_ball_multi(target.members(), 2)
        .expect("target indices are valid");
    if universe.len() > limits.max_vertices {
        return Err(SolveError::OracleTooLarge { n: universe.len(), cap: limits.max_vertices });
    }
    let mut engine = Engine::new(g, target.members(), universe.members(), limits);
    engine.check_feasible()?;
    let sol = engine.run()?.expect("feasibility was just verified");
    Ok(ExactResult {
        optimum_size: Some(sol.len()),
        solution: Some(VertexSet::new(sol, g.len()).expect("valid indices")),
        infeasible: false,
        subsets_examined: engine.examined,
    })
}

/// Size-increasing lexicographic enumeration over a ≤64-vertex candidate
/// universe, with counting-based pruning on the double-domination counts.
struct Engine<'a> {
    universe: &'a [usize],
    targets: Vec<usize>,
    /// Per target: bitmask over universe positions of its dominators.
    dom: Vec<u64>,
    /// Per target pair (a<b), row-major: OR of the two dominator masks.
    pair_or: Vec<u64>,
    deadline: Option<Instant>,
    budget_ms: u64,
    examined: u64,
    nodes: u64,
    timed_out: bool,
}

impl<'a> Engine<'a> {
    fn new(
        g: &UnitDiskGraph,
        targets: &[usize],
        universe: &'a [usize],
        limits: &SolveLimits,
    ) -> Self {
        assert!(universe.len() <= 64, "engine universe exceeds 64 bits");
        let pos_of = |v: usize| universe.binary_search(&v).ok();
        let mut dom = Vec::with_capacity(targets.len());
        for &t in targets {
            let mut mask = 0u64;
            if let Some(p) = pos_of(t) {
                mask |= 1 << p;
            }
            for &w in g.neighbors(t) {
                if let Some(p) = pos_of(w) {
                    mask |= 1 << p;
                }
            }
            dom.push(mask);
        }
        let mut pair_or = Vec::with_capacity(dom.len() * dom.len().saturating_sub(1) / 2);
        for a in 0..dom.len() {
            for b in (a + 1)..dom.len() {
                pair_or.push(dom[a] | dom[b]);
            }
        }
        Engine {
            universe,
            targets: targets.to_vec(),
            dom,
            pair_or,
            deadline: limits.time_budget.map(|d| Instant::now() + d),
            budget_ms: limits.time_budget.map(|d| d.as_millis() as u64).unwrap_or(0),
            examined: 0,
            nodes: 0,
            timed_out: false,
        }
    }

    /// Feasibility at D = universe: every candidate set is a subset of the
    /// universe, so a failure here certifies restricted infeasibility.
    fn check_feasible(&self) -> Result<(), SolveError> {
        for (i, &m) in self.dom.iter().enumerate() {
            if m.count_ones() < 2 {
                return Err(SolveError::InfeasibleTarget { vertex: self.targets[i] });
            }
        }
        let mut idx = 0;
        for a in 0..self.dom.len() {
            for b in (a + 1)..self.dom.len() {
                if self.pair_or[idx].count_ones() < 3 {
                    return Err(SolveError::InfeasibleTargetPair {
                        u: self.targets[a],
                        v: self.targets[b],
                    });
                }
                idx += 1;
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<Option<Vec<usize>>, SolveError> {
        let u = self.universe.len();
        let min_size = if self.dom.len() >= 2 { 3 } else { 2 };
        for size in min_size.min(u)..=u {
            if let Some(mask) = self.search(0, size, 0u64) {
                let out: Vec<usize> = (0..u)
                    .filter(|&p| mask & (1 << p) != 0)
                    .map(|p| self.universe[p])
                    .collect();
                return Ok(Some(out));
            }
            if self.timed_out {
                return Err(SolveError::TimeBudgetExceeded { budget_ms: self.budget_ms });
            }
        }
        Ok(None)
    }

    fn search(&mut self, start: usize, remaining: usize, chosen: u64) -> Option<u64> {
        if remaining == 0 {
            self.examined += 1;
            return if self.accepts(chosen) { Some(chosen) } else { None };
        }
        let u = self.universe.len();
        if u - start < remaining {
            return None;
        }
        for i in start..=(u - remaining) {
            self.nodes += 1;
            if self.nodes % 8192 == 0 {
                if let Some(dl) = self.deadline {
                    if Instant::now() > dl {
                        self.timed_out = true;
                    }
                }
            }
            if self.timed_out {
                return None;
            }
            let next = chosen | (1 << i);
            if self.prunable(next, i + 1, remaining - 1) {
                continue;
            }
            if let Some(hit) = self.search(i + 1, remaining - 1, next) {
                return Some(hit);
            }
        }
        None
    }

    /// Counting prune: a target whose dominator count cannot reach 2 with
    /// the picks left (drawing only from positions ≥ next) kills the branch.
    fn prunable(&self, chosen: u64, next: usize, left: usize) -> bool {
        let suffix = if next >= 64 { 0u64 } else { !0u64 << next };
        for &d in &self.dom {
            let have = (chosen & d).count_ones() as usize;
            if have >= 2 {
                continue;
            }
            let potential = ((d & suffix).count_ones() as usize).min(left);
            if have + potential < 2 {
                return true;
            }
        }
        false
    }

    fn accepts(&self, chosen: u64) -> bool {
        for &d in &self.dom {
            if (chosen & d).count_ones() < 2 {
                return false;
            }
        }
        self.pair_or.iter().all(|&m| (chosen & m).count_ones() >= 3)
    }
}
