//! Exact planar geometry and unit disk graph construction.
//!
//! Coordinates are integers in tenths of a unit, so every adjacency
//! decision is an exact integer comparison: two points are unit-adjacent
//! iff the squared distance in tenths is at most 100.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Squared adjacency threshold in tenths: distance ≤ 1 unit.
pub const UNIT_DIST_SQ: i64 = 100;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("empty instance: at least one point is required")]
    EmptyInstance,
    #[error("invalid vertex {vertex} for graph with {size} vertices")]
    InvalidVertex { vertex: usize, size: usize },
    #[error("empty vertex set")]
    EmptySet,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A planar point with exact integer coordinates in tenths of a unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Point { x, y }
    }

    /// Squared Euclidean distance in tenths.
    pub fn dist_sq(&self, other: &Point) -> i64 {
        let dx = self.x as i64 - other.x as i64;
        let dy = self.y as i64 - other.y as i64;
        dx * dx + dy * dy
    }

    /// Unit adjacency: distance at most one unit, computed exactly.
    pub fn unit_adjacent(&self, other: &Point) -> bool {
        self.dist_sq(other) <= UNIT_DIST_SQ
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", fmt_tenths(self.x), fmt_tenths(self.y))
    }
}

/// Formats tenths as a decimal with one fractional digit ("1.5", "-0.3").
pub fn fmt_tenths(v: i32) -> String {
    let sign = if v < 0 { "-" } else { "" };
    let a = (v as i64).abs();
    format!("{}{}.{}", sign, a / 10, a % 10)
}

/// Parses a decimal with at most one fractional digit into tenths.
pub fn parse_tenths(s: &str) -> Result<i32, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("malformed number '{s}'"));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("malformed number '{s}'"));
    }
    if frac_part.len() > 1 || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("at most one fractional digit allowed in '{s}'"));
    }
    let int_val: i64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| format!("malformed number '{s}'"))? };
    let frac_val: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().unwrap() };
    let tenths = sign * (int_val * 10 + frac_val);
    i32::try_from(tenths).map_err(|_| format!("coordinate '{s}' out of range"))
}

/// A sorted set of vertex indices into a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<usize>,
    graph_size: usize,
}

impl VertexSet {
    /// Builds a set from arbitrary indices; sorts and deduplicates.
    pub fn new(mut members: Vec<usize>, graph_size: usize) -> Result<Self, GeomError> {
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= graph_size) {
            return Err(GeomError::InvalidVertex { vertex: v, size: graph_size });
        }
        Ok(VertexSet { members, graph_size })
    }

    /// The full vertex set of a graph with `graph_size` vertices.
    pub fn full(graph_size: usize) -> Self {
        VertexSet { members: (0..graph_size).collect(), graph_size }
    }

    pub fn empty(graph_size: usize) -> Self {
        VertexSet { members: Vec::new(), graph_size }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn graph_size(&self) -> usize {
        self.graph_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut m = self.members.clone();
        m.extend_from_slice(&other.members);
        m.sort_unstable();
        m.dedup();
        VertexSet { members: m, graph_size: self.graph_size }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Membership mask indexed by vertex.
    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.graph_size];
        for &v in &self.members {
            m[v] = true;
        }
        m
    }
}

/// A unit disk graph over a list of points. Vertex `i` is the `i`-th input
/// point; adjacency lists are sorted. Immutable after construction.
#[derive(Debug, Clone)]
pub struct UnitDiskGraph {
    points: Vec<Point>,
    adjacency: Vec<Vec<usize>>,
}

/// Builds the unit disk graph of a point list by an O(n²) pair scan.
/// Duplicate coordinates are permitted and become mutually adjacent
/// distinct vertices.
pub fn build_udg(points: &[Point]) -> Result<UnitDiskGraph, GeomError> {
    if points.is_empty() {
        return Err(GeomError::EmptyInstance);
    }
    let n = points.len();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i].unit_adjacent(&points[j]) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    // Neighbor lists come out sorted because j grows, but the j->i pushes
    // also arrive in increasing i order, so both directions are sorted.
    Ok(UnitDiskGraph { points: points.to_vec(), adjacency })
}

impl UnitDiskGraph {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, v: usize) -> Point {
        self.points[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GeomError> {
        if v < self.len() {
            Ok(())
        } else {
            Err(GeomError::InvalidVertex { vertex: v, size: self.len() })
        }
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GeomError> {
        self.check_vertex(v)?;
        let mut m = self.adjacency[v].clone();
        m.push(v);
        VertexSet::new(m, self.len())
    }

    /// Hop-distance ball: all vertices within `r` edges of `v`.
    pub fn bfs_ball(&self, v: usize, r: usize) -> Result<VertexSet, GeomError> {
        self.check_vertex(v)?;
        self.bfs_ball_multi(&[v], r)
    }

    /// Ball of hop radius `r` around a set of seed vertices.
    pub fn bfs_ball_multi(&self, seeds: &[usize], r: usize) -> Result<VertexSet, GeomError> {
        let n = self.len();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &s in seeds {
            self.check_vertex(s)?;
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            out.push(u);
            if dist[u] == r {
                continue;
            }
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        VertexSet::new(out, n)
    }

    /// Connected components, ordered by smallest member index.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(VertexSet { members: comp, graph_size: n });
        }
        comps
    }

    /// Minimum hop distance between two nonempty sets; `None` when they lie
    /// in different components.
    pub fn set_distance(&self, a: &VertexSet, b: &VertexSet) -> Result<Option<usize>, GeomError> {
        if a.is_empty() || b.is_empty() {
            return Err(GeomError::EmptySet);
        }
        for &v in a.members().iter().chain(b.members()) {
            self.check_vertex(v)?;
        }
        let b_mask = b.mask();
        let n = self.len();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &s in a.members() {
            if b_mask[s] {
                return Ok(Some(0));
            }
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    if b_mask[w] {
                        return Ok(Some(dist[w]));
                    }
                    queue.push_back(w);
                }
            }
        }
        Ok(None)
    }

    /// Induced subgraph on `subset` (sorted original indices). Returns the
    /// subgraph and the map from subgraph index to original index.
    pub fn induced(&self, subset: &VertexSet) -> (UnitDiskGraph, Vec<usize>) {
        let map: Vec<usize> = subset.members().to_vec();
        let pts: Vec<Point> = map.iter().map(|&v| self.points[v]).collect();
        // A UDG induced on a point subset is exactly the UDG of that subset.
        let sub = build_udg(&pts).expect("nonempty induced subset");
        (sub, map)
    }
}

/// Parses the point-set interchange format: one point per line, two decimal
/// numbers with at most one fractional digit; lines beginning '#' ignored.
pub fn parse_points(input: &str) -> Result<Vec<Point>, GeomError> {
    let mut points = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let (xs, ys) = match (parts.next(), parts.next(), parts.next()) {
            (Some(x), Some(y), None) => (x, y),
            _ => {
                return Err(GeomError::Parse {
                    line: line_no,
                    msg: "expected exactly two coordinates".into(),
                })
            }
        };
        let x = parse_tenths(xs).map_err(|msg| GeomError::Parse { line: line_no, msg })?;
        let y = parse_tenths(ys).map_err(|msg| GeomError::Parse { line: line_no, msg })?;
        points.push(Point::new(x, y));
    }
    Ok(points)
}

/// Writes points in the interchange format, one per line.
pub fn write_points(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}
