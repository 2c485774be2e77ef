//! Liar's domination in unit disk graphs.
//!
//! A liar's dominating set (LDS) of a graph `G = (V, E)` is a set `D ⊆ V`
//! such that every vertex has at least two dominators in `D` and every pair
//! of distinct vertices jointly sees at least three members of `D` in the
//! union of their closed neighborhoods. This crate works on unit disk
//! graphs with exact integer coordinates (tenths of a unit) and provides:
//!
//! * [`geom`] — points, UDG construction, neighborhoods, BFS balls,
//!   components, set distances, and the point-set file format;
//! * [`domination`] — domination and liar's-domination predicates with
//!   violation certificates;
//! * [`exact`] — a certified brute-force minimum-LDS oracle, also usable
//!   restricted to a target subset;
//! * [`approx`] — a linear-time 7.31-factor approximation built from three
//!   sequential maximal independent sets;
//! * [`ptas`] — a (1+ε)-approximation scheme based on 4-separated
//!   collections with exact local solves;
//! * [`sweep`] — a faithful re-implementation of an earlier x-sweep
//!   coverage algorithm together with a counterexample family showing its
//!   approximation ratio exceeds 11/2;
//! * [`reduction`] — the vertex-cover-to-LDS hardness construction from
//!   orthogonal grid embeddings of max-degree-3 planar graphs.

pub mod approx;
pub mod domination;
pub mod exact;
pub mod geom;
pub mod ptas;
pub mod ratio;
pub mod reduction;
pub mod sweep;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::geom::{build_udg, Point, UnitDiskGraph};

    /// Path graph as unit-spaced collinear points.
    pub fn path(n: usize) -> UnitDiskGraph {
        let coords: Vec<Point> = (0..n).map(|i| Point::new(10 * i as i32, 0)).collect();
        build_udg(&coords).unwrap()
    }

    /// Tight triangle: three pairwise-adjacent points.
    pub fn k3() -> UnitDiskGraph {
        build_udg(&[Point::new(0, 0), Point::new(10, 0), Point::new(5, 8)]).unwrap()
    }
}

pub use approx::{approx_lds, approx_lds_layers, greedy_mis, mis_vs_opt_ratio, MisLayers};
pub use domination::{check_lds, is_dominating, is_ktuple_dominating, lds_feasible, LdsCertificate};
pub use exact::{exact_mlds, exact_mlds_restricted, ExactResult, SolveLimits};
pub use geom::{build_udg, Point, UnitDiskGraph, VertexSet};
pub use ptas::{grow_radius, patch_small_components, ptas_lds, LocalSolver, PtasConfig, SeparatedDecomposition};
pub use ratio::Ratio;
pub use sweep::{bb_solve, gen_counterexample, SweepTrace};
