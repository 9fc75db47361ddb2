//! Height-function sweep over a space graph and the handle-attachment trace it
//! induces.
//!
//! A direction `v` is generic when no edge is level (`u·v ≠ 0` for every edge
//! direction `u`) and no two vertices share a level. Sweeping `h(x) = x·v`
//! upward, the complement only changes at vertex levels. Below every vertex it
//! is a half-space minus one half-line per downward unbounded edge end, which
//! already carries that many trivial handles of index `n − 2`. Passing a vertex
//! with `s ≥ 1` upward branches attaches `s − 1` more trivial handles of the
//! same index; a vertex with `s = 0` attaches a single, possibly non-trivial,
//! handle of index `n − 1`.

use std::fmt;

use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arrangement::{predicted_betti, Arrangement};
use crate::geometry::{
    canonicalize_line, dot, int_dot, point_on_line, primitive_direction, sub, Line, PointN, Rat,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Condition (i): the edge lies in a level hyperplane.
    PerpendicularEdge { edge: usize },
    /// Condition (ii): two vertices share a level.
    SharedLevel {
        first: usize,
        second: usize,
        #[serde(with = "crate::rat_serde")]
        level: Rat,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PerpendicularEdge { edge } => {
                write!(f, "edge {edge} is perpendicular to the direction")
            }
            Self::SharedLevel { first, second, level } => {
                write!(f, "vertices {first} and {second} share level {level}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("direction has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("non-generic direction: {0}")]
    NonGenericDirection(Violation),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("ambient dimension must be at least 2, got {0}")]
    InvalidDimension(usize),
    #[error("vertex {0} has the wrong dimension")]
    VertexDimension(usize),
    #[error("edge {edge} references missing vertex {vertex}")]
    MissingVertex { edge: usize, vertex: usize },
    #[error("edge {0} is degenerate")]
    DegenerateEdge(usize),
    #[error("vertex {vertex} lies in the interior of edge {edge}")]
    VertexInEdge { edge: usize, vertex: usize },
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
}

/// How an edge sits relative to the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EdgeKind {
    /// Closed segment between two vertices.
    Segment { from: usize, to: usize },
    /// Half-line leaving `vertex` along the primitive integer vector `dir`.
    Ray {
        vertex: usize,
        #[serde(with = "bigint_vec")]
        dir: Vec<BigInt>,
    },
    /// A whole line carrying no vertex.
    Line,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub kind: EdgeKind,
    pub carrier: Line,
}

/// Input description of an edge for [`SpaceGraph::new`].
#[derive(Debug, Clone)]
pub enum EdgeSpec {
    Segment(usize, usize),
    Ray(usize, Vec<Rat>),
    Line(PointN, Vec<Rat>),
}

/// A closed union of finitely many segments, half-lines and lines in ℝⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceGraph {
    dimension: usize,
    vertices: Vec<PointN>,
    edges: Vec<GraphEdge>,
}

impl SpaceGraph {
    /// Builds and validates a general space graph.
    pub fn new(dimension: usize, vertices: Vec<PointN>, specs: &[EdgeSpec]) -> Result<Self, GraphError> {
        if dimension < 2 {
            return Err(GraphError::InvalidDimension(dimension));
        }
        if let Some(i) = vertices.iter().position(|v| v.dim() != dimension) {
            return Err(GraphError::VertexDimension(i));
        }
        for i in 0..vertices.len() {
            if let Some(j) = (i + 1..vertices.len()).find(|&j| vertices[i] == vertices[j]) {
                return Err(GraphError::DuplicateVertex(i, j));
            }
        }
        let check = |edge: usize, vertex: usize| {
            if vertex < vertices.len() {
                Ok(())
            } else {
                Err(GraphError::MissingVertex { edge, vertex })
            }
        };
        let mut edges = Vec::with_capacity(specs.len());
        for (ei, spec) in specs.iter().enumerate() {
            let edge = match spec {
                EdgeSpec::Segment(a, b) => {
                    check(ei, *a)?;
                    check(ei, *b)?;
                    let u = sub(vertices[*b].coords(), vertices[*a].coords());
                    let carrier = canonicalize_line(&vertices[*a], &u).map_err(|_| GraphError::DegenerateEdge(ei))?;
                    GraphEdge {
                        kind: EdgeKind::Segment { from: *a, to: *b },
                        carrier,
                    }
                }
                EdgeSpec::Ray(v, dir) => {
                    check(ei, *v)?;
                    if dir.len() != dimension {
                        return Err(GraphError::DegenerateEdge(ei));
                    }
                    let carrier = canonicalize_line(&vertices[*v], dir).map_err(|_| GraphError::DegenerateEdge(ei))?;
                    let dir = outward_primitive(dir);
                    GraphEdge {
                        kind: EdgeKind::Ray { vertex: *v, dir },
                        carrier,
                    }
                }
                EdgeSpec::Line(p, dir) => {
                    if p.dim() != dimension {
                        return Err(GraphError::DegenerateEdge(ei));
                    }
                    let carrier = canonicalize_line(p, dir).map_err(|_| GraphError::DegenerateEdge(ei))?;
                    GraphEdge {
                        kind: EdgeKind::Line,
                        carrier,
                    }
                }
            };
            edges.push(edge);
        }
        let graph = Self {
            dimension,
            vertices,
            edges,
        };
        graph.validate_interiors()?;
        Ok(graph)
    }

    /// The graph whose vertices are the multiple points and whose edges are
    /// the pieces each line is cut into by them.
    pub fn from_arrangement(a: &Arrangement) -> Self {
        let points = a.multiple_points();
        let vertices: Vec<PointN> = points.iter().map(|p| p.location.clone()).collect();
        let mut on_line: Vec<Vec<usize>> = vec![Vec::new(); a.len()];
        for (vi, p) in points.iter().enumerate() {
            for &li in &p.incident {
                on_line[li].push(vi);
            }
        }
        let mut edges = Vec::new();
        for (li, line) in a.lines().iter().enumerate() {
            let mut along: Vec<(Rat, usize)> = on_line[li]
                .iter()
                .map(|&vi| (line.parameter_of(&vertices[vi]), vi))
                .collect();
            along.sort();
            let Some((first, last)) = along.first().zip(along.last()) else {
                edges.push(GraphEdge {
                    kind: EdgeKind::Line,
                    carrier: line.clone(),
                });
                continue;
            };
            let forward = line.dir().to_vec();
            let backward: Vec<BigInt> = forward.iter().map(|c| -c).collect();
            edges.push(GraphEdge {
                kind: EdgeKind::Ray {
                    vertex: first.1,
                    dir: backward,
                },
                carrier: line.clone(),
            });
            for pair in along.windows(2) {
                edges.push(GraphEdge {
                    kind: EdgeKind::Segment {
                        from: pair[0].1,
                        to: pair[1].1,
                    },
                    carrier: line.clone(),
                });
            }
            edges.push(GraphEdge {
                kind: EdgeKind::Ray {
                    vertex: last.1,
                    dir: forward,
                },
                carrier: line.clone(),
            });
        }
        Self {
            dimension: a.dimension(),
            vertices,
            edges,
        }
    }

    fn validate_interiors(&self) -> Result<(), GraphError> {
        for (ei, e) in self.edges.iter().enumerate() {
            for (vi, v) in self.vertices.iter().enumerate() {
                if !point_on_line(v, &e.carrier).expect("dimensions agree") {
                    continue;
                }
                let inside = match &e.kind {
                    EdgeKind::Line => true,
                    EdgeKind::Segment { from, to } => {
                        if vi == *from || vi == *to {
                            false
                        } else {
                            let t = e.carrier.parameter_of(v);
                            let ta = e.carrier.parameter_of(&self.vertices[*from]);
                            let tb = e.carrier.parameter_of(&self.vertices[*to]);
                            let (lo, hi) = if ta < tb { (ta, tb) } else { (tb, ta) };
                            lo < t && t < hi
                        }
                    }
                    EdgeKind::Ray { vertex, dir } => {
                        if vi == *vertex {
                            false
                        } else {
                            let w = sub(v.coords(), self.vertices[*vertex].coords());
                            int_dot(dir, &w).is_positive()
                        }
                    }
                };
                if inside {
                    return Err(GraphError::VertexInEdge { edge: ei, vertex: vi });
                }
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertices(&self) -> &[PointN] {
        &self.vertices
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    fn edge_direction(&self, e: &GraphEdge) -> Vec<Rat> {
        match &e.kind {
            EdgeKind::Segment { from, to } => sub(self.vertices[*to].coords(), self.vertices[*from].coords()),
            EdgeKind::Ray { dir, .. } => dir.iter().map(|c| Rat::from_integer(c.clone())).collect(),
            EdgeKind::Line => e.carrier.dir_rat(),
        }
    }

    fn check_vector(&self, v: &[Rat]) -> Result<(), SweepError> {
        if v.len() != self.dimension {
            return Err(SweepError::DimensionMismatch {
                expected: self.dimension,
                found: v.len(),
            });
        }
        if v.iter().all(Zero::is_zero) {
            return Err(SweepError::ZeroDirection);
        }
        Ok(())
    }

    /// Checks both genericity conditions for the height `x ↦ x·v`.
    ///
    /// Edges are checked first; the reported vertex pair is the one with the
    /// lowest shared level.
    pub fn check_direction(&self, v: &[Rat]) -> Result<(), SweepError> {
        self.check_vector(v)?;
        if let Some(edge) = self
            .edges
            .iter()
            .position(|e| dot(&self.edge_direction(e), v).is_zero())
        {
            return Err(SweepError::NonGenericDirection(Violation::PerpendicularEdge { edge }));
        }
        let mut levels: Vec<(Rat, usize)> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, p)| (dot(p.coords(), v), i))
            .collect();
        levels.sort();
        for pair in levels.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(SweepError::NonGenericDirection(Violation::SharedLevel {
                    first: pair[0].1,
                    second: pair[1].1,
                    level: pair[0].0.clone(),
                }));
            }
        }
        Ok(())
    }

    /// Certified generic directions `(1, k, k², …, k^{n−1})` for `k = 1, 2, …`,
    /// skipping rejected candidates. The sequence is infinite.
    pub fn generic_directions(&self) -> impl Iterator<Item = Vec<Rat>> + '_ {
        (1u64..).filter_map(move |k| {
            let v = moment_direction(self.dimension, k);
            self.check_direction(&v).ok().map(|()| v)
        })
    }

    /// The first accepted moment-curve direction.
    pub fn find_generic_direction(&self) -> Vec<Rat> {
        self.generic_directions()
            .next()
            .expect("only finitely many moment-curve candidates are rejected")
    }

    /// Orders the vertices by height and counts upward and downward branches.
    pub fn sweep_events(&self, v: &[Rat]) -> Result<SweepPlan, SweepError> {
        self.check_direction(v)?;
        let mut up = vec![0usize; self.vertices.len()];
        let mut down = vec![0usize; self.vertices.len()];
        let mut initial_rays_down = 0;
        let mut tally = |vertex: usize, w: &[Rat]| {
            if dot(w, v).is_positive() {
                up[vertex] += 1;
            } else {
                down[vertex] += 1;
            }
        };
        for e in &self.edges {
            match &e.kind {
                EdgeKind::Segment { from, to } => {
                    let w = sub(self.vertices[*to].coords(), self.vertices[*from].coords());
                    tally(*from, &w);
                    let back: Vec<Rat> = w.iter().map(|c| -c).collect();
                    tally(*to, &back);
                }
                EdgeKind::Ray { vertex, dir } => {
                    let w: Vec<Rat> = dir.iter().map(|c| Rat::from_integer(c.clone())).collect();
                    if dot(&w, v).is_negative() {
                        initial_rays_down += 1;
                    }
                    tally(*vertex, &w);
                }
                EdgeKind::Line => initial_rays_down += 1,
            }
        }
        let mut events: Vec<SweepEvent> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, p)| SweepEvent {
                vertex: i,
                critical_value: dot(p.coords(), v),
                s: up[i],
                r: down[i],
            })
            .collect();
        events.sort_by(|a, b| a.critical_value.cmp(&b.critical_value));
        Ok(SweepPlan {
            dimension: self.dimension,
            direction: v.to_vec(),
            events,
            initial_rays_down,
        })
    }
}

fn outward_primitive(dir: &[Rat]) -> Vec<BigInt> {
    // primitive_direction normalizes the sign; undo that to keep the ray's orientation
    let prim = primitive_direction(dir).expect("checked nonzero");
    let w: Vec<Rat> = prim.iter().map(|c| Rat::from_integer(c.clone())).collect();
    if dot(&w, dir).is_negative() {
        prim.into_iter().map(|c| -c).collect()
    } else {
        prim
    }
}

/// The moment-curve candidate `(1, k, k², …, k^{n−1})`.
pub fn moment_direction(n: usize, k: u64) -> Vec<Rat> {
    let k = BigInt::from(k);
    let mut power = BigInt::one();
    (0..n)
        .map(|_| {
            let c = Rat::from_integer(power.clone());
            power *= &k;
            c
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEvent {
    pub vertex: usize,
    #[serde(with = "crate::rat_serde")]
    pub critical_value: Rat,
    /// Branches leaving the vertex upward.
    pub s: usize,
    /// Branches leaving the vertex downward.
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPlan {
    pub dimension: usize,
    #[serde(with = "crate::rat_serde::vec")]
    pub direction: Vec<Rat>,
    /// Strictly increasing in `critical_value`.
    pub events: Vec<SweepEvent>,
    /// Unbounded edge ends pointing downward; each full line counts once.
    pub initial_rays_down: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleStep {
    pub event: SweepEvent,
    pub handles_added: usize,
    pub handle_index: usize,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleTrace {
    pub dimension: usize,
    pub steps: Vec<HandleStep>,
    pub initial_g: usize,
    /// `initial_g` plus all trivial index-`(n − 2)` handles.
    pub final_g: usize,
    pub all_trivial: bool,
}

impl HandleTrace {
    pub fn from_plan(plan: &SweepPlan) -> Self {
        let n = plan.dimension;
        let mut final_g = plan.initial_rays_down;
        let mut all_trivial = true;
        let steps = plan
            .events
            .iter()
            .map(|event| {
                if event.s >= 1 {
                    final_g += event.s - 1;
                    HandleStep {
                        event: event.clone(),
                        handles_added: event.s - 1,
                        handle_index: n - 2,
                        trivial: true,
                    }
                } else {
                    all_trivial = false;
                    HandleStep {
                        event: event.clone(),
                        handles_added: 1,
                        handle_index: n - 1,
                        trivial: false,
                    }
                }
            })
            .collect();
        Self {
            dimension: n,
            steps,
            initial_g: plan.initial_rays_down,
            final_g,
            all_trivial,
        }
    }

    /// Betti vector `(b₀, …, bₙ)` of the complement, available only when every
    /// attachment was trivial.
    pub fn predicted_betti(&self) -> Option<Vec<usize>> {
        self.all_trivial
            .then(|| predicted_betti(self.dimension, self.final_g))
    }
}

pub fn handle_trace(plan: &SweepPlan) -> HandleTrace {
    HandleTrace::from_plan(plan)
}

mod bigint_vec {
    use num::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, ints};

    fn square_graph() -> SpaceGraph {
        let vertices = vec![
            PointN::from_ints([0, 0, 0]),
            PointN::from_ints([1, 0, 0]),
            PointN::from_ints([1, 1, 0]),
            PointN::from_ints([0, 1, 0]),
        ];
        let specs = [
            EdgeSpec::Segment(0, 1),
            EdgeSpec::Segment(1, 2),
            EdgeSpec::Segment(2, 3),
            EdgeSpec::Segment(3, 0),
        ];
        SpaceGraph::new(3, vertices, &specs).unwrap()
    }

    #[test]
    fn graph_of_crossing_pair() {
        let g = SpaceGraph::from_arrangement(&fixtures::crossing_pair(2));
        assert_eq!(g.vertices().len(), 1);
        assert_eq!(g.edges().len(), 4);
        assert!(g.edges().iter().all(|e| matches!(e.kind, EdgeKind::Ray { .. })));
    }

    #[test]
    fn graph_of_single_line() {
        let g = SpaceGraph::from_arrangement(&fixtures::single_line(3));
        assert!(g.vertices().is_empty());
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].kind, EdgeKind::Line);
    }

    #[test]
    fn line_cut_twice_gives_segment_and_two_rays() {
        let a = fixtures::generic_triangle(2);
        let g = SpaceGraph::from_arrangement(&a);
        let on_first: Vec<_> = g.edges().iter().filter(|e| &e.carrier == &a.lines()[0]).collect();
        assert_eq!(on_first.len(), 3);
        assert_eq!(
            on_first
                .iter()
                .filter(|e| matches!(e.kind, EdgeKind::Segment { .. }))
                .count(),
            1
        );
    }

    #[test]
    fn direction_checks() {
        let g = SpaceGraph::from_arrangement(&fixtures::single_line(3));
        assert_eq!(
            g.check_direction(&ints(&[0, 0, 1])),
            Err(SweepError::NonGenericDirection(Violation::PerpendicularEdge { edge: 0 }))
        );
        assert_eq!(g.check_direction(&ints(&[1, 2, 4])), Ok(()));
        assert_eq!(g.check_direction(&ints(&[0, 0, 0])), Err(SweepError::ZeroDirection));
        assert!(matches!(
            g.check_direction(&ints(&[1, 0])),
            Err(SweepError::DimensionMismatch { .. })
        ));

        let two = SpaceGraph::new(
            3,
            vec![PointN::from_ints([0, 0, 0]), PointN::from_ints([1, 0, 0])],
            &[],
        )
        .unwrap();
        assert_eq!(
            two.check_direction(&ints(&[0, 0, 1])),
            Err(SweepError::NonGenericDirection(Violation::SharedLevel {
                first: 0,
                second: 1,
                level: Rat::zero()
            }))
        );
    }

    #[test]
    fn direction_search() {
        let g = SpaceGraph::from_arrangement(&fixtures::single_line(3));
        assert_eq!(g.find_generic_direction(), ints(&[1, 1, 1]));

        let diag = fixtures::from_ints(3, &[(&[0, 0, 0], &[1, -1, 0])]);
        let g = SpaceGraph::from_arrangement(&diag);
        assert_eq!(g.find_generic_direction(), ints(&[1, 2, 4]));

        let empty = SpaceGraph::new(4, vec![], &[]).unwrap();
        assert_eq!(empty.find_generic_direction(), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn crossing_pair_events() {
        let g = SpaceGraph::from_arrangement(&fixtures::crossing_pair(3));
        let plan = g.sweep_events(&g.find_generic_direction()).unwrap();
        assert_eq!(plan.events.len(), 1);
        assert_eq!((plan.events[0].s, plan.events[0].r), (2, 2));
        assert_eq!(plan.initial_rays_down, 2);
        let trace = handle_trace(&plan);
        assert_eq!(trace.initial_g, 2);
        assert_eq!(trace.final_g, 3);
        assert!(trace.all_trivial);
        assert_eq!(trace.predicted_betti(), Some(vec![1, 3, 0, 0]));
    }

    #[test]
    fn pencil_events() {
        for i in 3..=5 {
            let g = SpaceGraph::from_arrangement(&fixtures::pencil(3, i));
            let plan = g.sweep_events(&g.find_generic_direction()).unwrap();
            assert_eq!((plan.events[0].s, plan.events[0].r), (i, i));
            let trace = handle_trace(&plan);
            assert_eq!(trace.initial_g, i);
            assert_eq!(trace.final_g, 2 * i - 1);
        }
    }

    #[test]
    fn generic_planar_triangle_events_are_ordered() {
        let g = SpaceGraph::from_arrangement(&fixtures::generic_triangle(2));
        let plan = g.sweep_events(&g.find_generic_direction()).unwrap();
        assert_eq!(plan.events.len(), 3);
        assert!(plan.events.iter().all(|e| e.s == 2 && e.r == 2));
        assert!(plan
            .events
            .windows(2)
            .all(|w| w[0].critical_value < w[1].critical_value));
        assert_eq!(handle_trace(&plan).final_g, 6);
    }

    #[test]
    fn sweep_rejects_non_generic_direction() {
        let g = SpaceGraph::from_arrangement(&fixtures::crossing_pair(2));
        assert!(matches!(
            g.sweep_events(&ints(&[1, 0])),
            Err(SweepError::NonGenericDirection(Violation::PerpendicularEdge { .. }))
        ));
    }

    #[test]
    fn compact_square_has_a_local_maximum() {
        let g = square_graph();
        let v = g.find_generic_direction();
        let plan = g.sweep_events(&v).unwrap();
        assert_eq!(plan.initial_rays_down, 0);
        let top = plan.events.last().unwrap();
        assert_eq!((top.s, top.r), (0, 2));
        let trace = handle_trace(&plan);
        assert!(!trace.all_trivial);
        let last = trace.steps.last().unwrap();
        assert_eq!(last.handle_index, 2);
        assert!(!last.trivial);
        assert_eq!(trace.final_g, 1);
        assert_eq!(trace.predicted_betti(), None);
    }

    #[test]
    fn graph_validation() {
        let v = vec![
            PointN::from_ints([0, 0]),
            PointN::from_ints([2, 0]),
            PointN::from_ints([1, 0]),
        ];
        assert_eq!(
            SpaceGraph::new(2, v.clone(), &[EdgeSpec::Segment(0, 1)]),
            Err(GraphError::VertexInEdge { edge: 0, vertex: 2 })
        );
        assert_eq!(
            SpaceGraph::new(2, v.clone(), &[EdgeSpec::Segment(0, 0)]),
            Err(GraphError::DegenerateEdge(0))
        );
        assert_eq!(
            SpaceGraph::new(2, v.clone(), &[EdgeSpec::Segment(0, 7)]),
            Err(GraphError::MissingVertex { edge: 0, vertex: 7 })
        );
        // the ray from vertex 0 toward negative x misses the others
        assert!(SpaceGraph::new(2, v.clone(), &[EdgeSpec::Ray(0, ints(&[-1, 0]))]).is_ok());
        assert_eq!(
            SpaceGraph::new(2, v, &[EdgeSpec::Ray(0, ints(&[3, 0]))]),
            Err(GraphError::VertexInEdge { edge: 0, vertex: 1 })
        );
    }

    #[test]
    fn plan_json_uses_rational_strings() {
        let g = SpaceGraph::from_arrangement(&fixtures::generic_triangle(2));
        let plan = g.sweep_events(&g.find_generic_direction()).unwrap();
        let json = serde_json::to_string(&plan).unwrap();
        assert!(json.contains("\"direction\":[\"1\",\"1\"]") || json.contains("\"direction\":[\"1\",\"2\"]"));
        let back: SweepPlan = serde_json::from_str(&json).unwrap();
        assert_eq!(back, plan);
    }
}
