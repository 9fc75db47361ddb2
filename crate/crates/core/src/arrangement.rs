//! Validated line arrangements, their multiple points, and the invariants
//! that determine the topology of the complement.
//!
//! For an arrangement of `d` distinct lines in ℝⁿ with `tᵢ` multiple points of
//! multiplicity `i`, the genus is `g = d + Σ (i − 1)·tᵢ`. For `n ≥ 3` the
//! complement is the interior of an n-ball with `g` trivially attached handles
//! of index `n − 2`, hence homotopy equivalent to a bouquet of `g` spheres
//! `S^{n−2}`. For `n = 2` it has exactly `1 + g` contractible components.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    canonicalize_line, intersect_lines, GeometryError, IntersectionResult, Line, PointN, Rat,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("ambient dimension must be at least 2, got {0}")]
    InvalidDimension(usize),
    #[error("line {index}: {source}")]
    Line {
        index: usize,
        #[source]
        source: GeometryError,
    },
    #[error("lines {first} and {second} are the same line")]
    DuplicateLine { first: usize, second: usize },
}

/// Sparse multiplicity vector `i ↦ tᵢ`; zero entries are omitted.
pub type MultiplicityVector = BTreeMap<usize, usize>;

/// A finite set of distinct affine lines in ℝⁿ, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dimension: usize,
    lines: Vec<Line>,
}

impl Arrangement {
    /// Canonicalizes each `(point, direction)` pair and rejects duplicates.
    ///
    /// The empty arrangement is accepted; its complement is all of ℝⁿ.
    pub fn new(dimension: usize, raw_lines: &[(PointN, Vec<Rat>)]) -> Result<Self, ArrangementError> {
        if dimension < 2 {
            return Err(ArrangementError::InvalidDimension(dimension));
        }
        let mut lines = Vec::with_capacity(raw_lines.len());
        for (index, (p, u)) in raw_lines.iter().enumerate() {
            if p.dim() != dimension {
                return Err(ArrangementError::Line {
                    index,
                    source: GeometryError::DimensionMismatch {
                        expected: dimension,
                        found: p.dim(),
                    },
                });
            }
            let line = canonicalize_line(p, u).map_err(|source| ArrangementError::Line { index, source })?;
            lines.push(line);
        }
        Self::from_lines(dimension, lines)
    }

    /// Builds from already canonical lines.
    pub fn from_lines(dimension: usize, lines: Vec<Line>) -> Result<Self, ArrangementError> {
        if dimension < 2 {
            return Err(ArrangementError::InvalidDimension(dimension));
        }
        let mut seen: BTreeMap<&Line, usize> = BTreeMap::new();
        for (index, line) in lines.iter().enumerate() {
            if line.dim() != dimension {
                return Err(ArrangementError::Line {
                    index,
                    source: GeometryError::DimensionMismatch {
                        expected: dimension,
                        found: line.dim(),
                    },
                });
            }
            if let Some(&first) = seen.get(line) {
                return Err(ArrangementError::DuplicateLine { first, second: index });
            }
            seen.insert(line, index);
        }
        Ok(Self { dimension, lines })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    /// Number of lines `d`.
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// All points lying on at least two lines, sorted by location.
    ///
    /// Every unordered pair is intersected exactly and the resulting points are
    /// grouped by exact coordinate equality.
    pub fn multiple_points(&self) -> Vec<MultiplePoint> {
        let mut clusters: BTreeMap<PointN, BTreeSet<usize>> = BTreeMap::new();
        for (i, a) in self.lines.iter().enumerate() {
            for (j, b) in self.lines.iter().enumerate().skip(i + 1) {
                let hit = intersect_lines(a, b).expect("arrangement lines share a dimension");
                if let IntersectionResult::Point(p) = hit {
                    let set = clusters.entry(p).or_default();
                    set.insert(i);
                    set.insert(j);
                }
            }
        }
        clusters
            .into_iter()
            .map(|(location, incident)| MultiplePoint {
                location,
                incident: incident.into_iter().collect(),
            })
            .collect()
    }

    pub fn multiplicity_vector(&self) -> MultiplicityVector {
        multiplicity_vector_of(&self.multiple_points())
    }

    /// `g = d + Σ (i − 1)·tᵢ`.
    pub fn genus(&self) -> usize {
        genus_from(self.len(), &self.multiplicity_vector())
    }

    pub fn predict_topology(&self) -> InvariantReport {
        InvariantReport::new(self.dimension, self.len(), self.multiplicity_vector())
    }

    /// Image of the arrangement under `x ↦ A·x + b` for an invertible `A`.
    ///
    /// Returns `None` if `A` is singular (two lines collapse) or malformed.
    pub fn transformed(&self, a: &[Vec<Rat>], b: &[Rat]) -> Option<Self> {
        let n = self.dimension;
        if a.len() != n || a.iter().any(|row| row.len() != n) || b.len() != n {
            return None;
        }
        let apply = |v: &[Rat]| -> Vec<Rat> {
            a.iter()
                .map(|row| crate::geometry::dot(row, v))
                .collect::<Vec<_>>()
        };
        let raw: Vec<(PointN, Vec<Rat>)> = self
            .lines
            .iter()
            .map(|l| {
                let p: Vec<Rat> = apply(l.base().coords())
                    .into_iter()
                    .zip(b)
                    .map(|(x, y)| x + y)
                    .collect();
                (PointN::new(p), apply(&l.dir_rat()))
            })
            .collect();
        Self::new(n, &raw).ok()
    }
}

/// A point where at least two lines meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplePoint {
    pub location: PointN,
    /// Sorted indices of every line through `location`.
    pub incident: Vec<usize>,
}

impl MultiplePoint {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }
}

pub fn multiplicity_vector_of(points: &[MultiplePoint]) -> MultiplicityVector {
    let mut t = MultiplicityVector::new();
    for p in points {
        *t.entry(p.multiplicity()).or_default() += 1;
    }
    t
}

pub fn genus_from(d: usize, t: &MultiplicityVector) -> usize {
    d + t.iter().map(|(i, ti)| (i - 1) * ti).sum::<usize>()
}

/// Homotopy type of the complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomotopyType {
    /// Wedge of `count` spheres of dimension `sphere_dimension` (a point when
    /// `count = 0`).
    Bouquet { count: usize, sphere_dimension: usize },
    /// Disjoint union of `count` contractible pieces.
    Points { count: usize },
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Bouquet {
                count,
                sphere_dimension,
            } => write!(f, "bouquet of {count} spheres S^{sphere_dimension}"),
            Self::Points { count } => write!(f, "{count} points"),
        }
    }
}

/// The handle body `B_g` whose interior is the complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleBody {
    pub ball_dimension: usize,
    pub handles: usize,
    pub handle_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub dimension: usize,
    pub d: usize,
    #[serde(with = "count_map")]
    pub t: MultiplicityVector,
    pub g: usize,
    /// `(b₀, …, bₙ)`; `bₙ` is always zero for the open complement.
    pub betti: Vec<usize>,
    pub homotopy: HomotopyType,
    pub homotopy_description: String,
    pub handle_body: HandleBody,
    /// Genus of the boundary surface `Σ_g`, only for n = 3.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub boundary_genus: Option<usize>,
}

impl InvariantReport {
    pub fn new(dimension: usize, d: usize, t: MultiplicityVector) -> Self {
        let g = genus_from(d, &t);
        let betti = predicted_betti(dimension, g);
        let homotopy = if dimension == 2 {
            HomotopyType::Points { count: 1 + g }
        } else {
            HomotopyType::Bouquet {
                count: g,
                sphere_dimension: dimension - 2,
            }
        };
        Self {
            dimension,
            d,
            t,
            g,
            betti,
            homotopy_description: homotopy.to_string(),
            homotopy,
            handle_body: HandleBody {
                ball_dimension: dimension,
                handles: g,
                handle_index: dimension - 2,
            },
            boundary_genus: (dimension == 3).then_some(g),
        }
    }
}

/// Betti vector `(b₀, …, bₙ)` of a bouquet of `g` spheres `S^{n−2}`
/// (or `1 + g` points when n = 2).
pub fn predicted_betti(dimension: usize, g: usize) -> Vec<usize> {
    let mut betti = vec![0; dimension + 1];
    if dimension == 2 {
        betti[0] = 1 + g;
    } else {
        betti[0] = 1;
        betti[dimension - 2] += g;
    }
    betti
}

/// JSON object keys must be strings; multiplicities are written as `"i": tᵢ`.
pub(crate) mod count_map {
    use std::collections::BTreeMap;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<usize, usize>, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, usize>, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn duplicate_parametrizations_rejected() {
        let raw = vec![
            (PointN::from_ints([0, 0]), vec![Rat::from_integer(1.into()), Rat::from_integer(0.into())]),
            (PointN::from_ints([5, 0]), vec![Rat::from_integer((-3).into()), Rat::from_integer(0.into())]),
        ];
        assert_eq!(
            Arrangement::new(2, &raw),
            Err(ArrangementError::DuplicateLine { first: 0, second: 1 })
        );
    }

    #[test]
    fn dimension_one_rejected() {
        assert_eq!(
            Arrangement::new(1, &[]),
            Err(ArrangementError::InvalidDimension(1))
        );
    }

    #[test]
    fn zero_direction_carries_index() {
        let raw = vec![
            (PointN::from_ints([0, 0]), fixtures::ints(&[1, 0])),
            (PointN::from_ints([0, 0]), fixtures::ints(&[0, 0])),
        ];
        assert_eq!(
            Arrangement::new(2, &raw),
            Err(ArrangementError::Line {
                index: 1,
                source: GeometryError::ZeroDirection
            })
        );
    }

    #[test]
    fn axes_of_r3() {
        let a = fixtures::coordinate_axes(3);
        assert_eq!(a.len(), 3);
        let mp = a.multiple_points();
        assert_eq!(mp.len(), 1);
        assert_eq!(mp[0].multiplicity(), 3);
        assert_eq!(mp[0].location, PointN::origin(3));
    }

    #[test]
    fn axes_of_r2() {
        let mp = fixtures::coordinate_axes(2).multiple_points();
        assert_eq!(mp.len(), 1);
        assert_eq!(mp[0].multiplicity(), 2);
    }

    #[test]
    fn skew_pair_has_no_multiple_points() {
        assert!(fixtures::skew_pair().multiple_points().is_empty());
    }

    #[test]
    fn multiplicity_and_genus_examples() {
        let tri = fixtures::generic_triangle(2);
        assert_eq!(tri.multiplicity_vector(), BTreeMap::from([(2, 3)]));
        assert_eq!(tri.genus(), 6);

        let pencil3 = fixtures::pencil(3, 3);
        assert_eq!(pencil3.multiplicity_vector(), BTreeMap::from([(3, 1)]));

        let skew = fixtures::skew_family(4);
        assert!(skew.multiplicity_vector().is_empty());
        assert_eq!(skew.genus(), 4);

        assert_eq!(fixtures::single_line(5).genus(), 1);
        assert_eq!(fixtures::pencil(3, 4).genus(), 7);
    }

    #[test]
    fn predict_topology_examples() {
        let r = fixtures::single_line(3).predict_topology();
        assert_eq!(r.betti, vec![1, 1, 0, 0]);
        assert_eq!(r.boundary_genus, Some(1));

        let r = fixtures::generic_triangle(2).predict_topology();
        assert_eq!(r.betti[0], 7);
        assert_eq!(r.homotopy, HomotopyType::Points { count: 7 });
        assert_eq!(r.boundary_genus, None);

        let r = fixtures::pencil(4, 3).predict_topology();
        assert_eq!(r.betti, vec![1, 0, 5, 0, 0]);
        assert_eq!(r.homotopy_description, "bouquet of 5 spheres S^2");
    }

    #[test]
    fn empty_arrangement_is_contractible() {
        let r = Arrangement::new(3, &[]).unwrap().predict_topology();
        assert_eq!(r.g, 0);
        assert_eq!(r.betti, vec![1, 0, 0, 0]);
        let r = Arrangement::new(2, &[]).unwrap().predict_topology();
        assert_eq!(r.betti, vec![1, 0, 0]);
    }

    #[test]
    fn report_json_shape() {
        let r = fixtures::pencil(3, 3).predict_topology();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"g\":5"), "{json}");
        assert!(json.contains("\"betti\":[1,5,0,0]"), "{json}");
        assert!(json.contains("\"t\":{\"3\":1}"), "{json}");
        let back: InvariantReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
