//! The intersection poset: multiple points, lines and the ambient space `T`,
//! ordered by inclusion.
//!
//! The multiplicities `tᵢ` and the line count `d` can be read back from the
//! order alone, which is what [`IntersectionPoset::recover_t`] and
//! [`IntersectionPoset::recover_d`] do.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::{Serialize, Serializer};

use crate::arrangement::{Arrangement, MultiplicityVector};
use crate::geometry::point_on_line;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PosetElement {
    /// Index into the sorted multiple-point list.
    MPoint(usize),
    /// Index into the arrangement's lines.
    LineEl(usize),
    Top,
}

impl fmt::Display for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MPoint(i) => write!(f, "p{i}"),
            Self::LineEl(i) => write!(f, "l{i}"),
            Self::Top => write!(f, "T"),
        }
    }
}

impl Serialize for PosetElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoset {
    elements: Vec<PosetElement>,
    /// Strict order as pairs of element positions `(x, y)` with `x < y`.
    less: BTreeSet<(usize, usize)>,
}

impl IntersectionPoset {
    /// Builds the inclusion order. Incidence is decided with exact point-on-line
    /// tests rather than reusing the clustering's incidence lists.
    pub fn build(a: &Arrangement) -> Self {
        let points = a.multiple_points();
        let mut elements: Vec<PosetElement> = (0..points.len()).map(PosetElement::MPoint).collect();
        elements.extend((0..a.len()).map(PosetElement::LineEl));
        elements.push(PosetElement::Top);
        let top = elements.len() - 1;
        let line_offset = points.len();

        let mut less = BTreeSet::new();
        for (pi, p) in points.iter().enumerate() {
            for (li, line) in a.lines().iter().enumerate() {
                if point_on_line(&p.location, line).expect("dimensions agree") {
                    less.insert((pi, line_offset + li));
                }
            }
        }
        for x in 0..top {
            less.insert((x, top));
        }
        Self { elements, less }
    }

    /// Builds a poset from explicit cover relations, closing them transitively.
    pub fn from_relations(elements: Vec<PosetElement>, covers: &[(usize, usize)]) -> Self {
        let n = elements.len();
        let mut reach = vec![vec![false; n]; n];
        for &(x, y) in covers {
            reach[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        let less = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| reach[i][j])
            .collect();
        Self { elements, less }
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    pub fn relations(&self) -> impl Iterator<Item = (PosetElement, PosetElement)> + '_ {
        self.less
            .iter()
            .map(|&(x, y)| (self.elements[x], self.elements[y]))
    }

    pub fn less_than(&self, x: usize, y: usize) -> bool {
        self.less.contains(&(x, y))
    }

    fn is_top(&self, x: usize) -> bool {
        self.elements[x] == PosetElement::Top
    }

    fn up_set_without_top(&self, x: usize) -> usize {
        self.less
            .range((x, 0)..(x + 1, 0))
            .filter(|&&(_, y)| !self.is_top(y))
            .count()
    }

    fn is_minimal(&self, x: usize) -> bool {
        !self.less.iter().any(|&(_, y)| y == x)
    }

    /// `tᵢ` = number of minimal elements with exactly `i ≥ 2` elements above
    /// them other than `T`.
    pub fn recover_t(&self) -> MultiplicityVector {
        let mut t = MultiplicityVector::new();
        for x in (0..self.elements.len()).filter(|&x| !self.is_top(x)) {
            if !self.is_minimal(x) {
                continue;
            }
            let up = self.up_set_without_top(x);
            if up >= 2 {
                *t.entry(up).or_default() += 1;
            }
        }
        t
    }

    /// `d` = number of maximal elements of `P ∖ {T}`.
    pub fn recover_d(&self) -> usize {
        (0..self.elements.len())
            .filter(|&x| !self.is_top(x) && self.up_set_without_top(x) == 0)
            .count()
    }

    /// Covering pairs (transitive reduction), ordered by element position.
    pub fn hasse_edges(&self) -> Vec<(PosetElement, PosetElement)> {
        self.less
            .iter()
            .filter(|&&(x, y)| {
                !self
                    .less
                    .range((x, 0)..(x + 1, 0))
                    .any(|&(_, z)| z != y && self.less.contains(&(z, y)))
            })
            .map(|&(x, y)| (self.elements[x], self.elements[y]))
            .collect()
    }

    /// Length of the longest chain, counted in elements.
    pub fn height(&self) -> usize {
        let n = self.elements.len();
        // positions are not topologically sorted in general; iterate to fixpoint
        let mut longest = vec![1usize; n];
        let mut changed = true;
        while changed {
            changed = false;
            for &(x, y) in &self.less {
                if longest[y] < longest[x] + 1 {
                    longest[y] = longest[x] + 1;
                    changed = true;
                }
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Hasse diagram in Graphviz DOT syntax, edges pointing upward.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for e in &self.elements {
            let _ = writeln!(out, "  {e};");
        }
        for (x, y) in self.hasse_edges() {
            let _ = writeln!(out, "  {x} -> {y};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::collections::BTreeMap;
    use PosetElement::*;

    #[test]
    fn crossing_pair_poset() {
        let p = IntersectionPoset::build(&fixtures::crossing_pair(2));
        assert_eq!(p.elements(), &[MPoint(0), LineEl(0), LineEl(1), Top]);
        assert_eq!(
            p.hasse_edges(),
            vec![
                (MPoint(0), LineEl(0)),
                (MPoint(0), LineEl(1)),
                (LineEl(0), Top),
                (LineEl(1), Top)
            ]
        );
        assert!(p.relations().any(|r| r == (MPoint(0), Top)));
    }

    #[test]
    fn skew_pair_poset() {
        let p = IntersectionPoset::build(&fixtures::skew_pair());
        assert_eq!(p.hasse_edges(), vec![(LineEl(0), Top), (LineEl(1), Top)]);
        assert!(p.recover_t().is_empty());
        assert_eq!(p.recover_d(), 2);
    }

    #[test]
    fn single_line_poset() {
        let p = IntersectionPoset::build(&fixtures::single_line(3));
        assert_eq!(p.hasse_edges(), vec![(LineEl(0), Top)]);
        assert_eq!(p.recover_d(), 1);
    }

    #[test]
    fn concurrent_lines_share_one_point() {
        let p = IntersectionPoset::build(&fixtures::pencil(3, 3));
        let points = p.elements().iter().filter(|e| matches!(e, MPoint(_))).count();
        assert_eq!(points, 1);
        assert_eq!(p.recover_d(), 3);
        assert_eq!(p.recover_t(), BTreeMap::from([(3, 1)]));
        assert_eq!(p.height(), 3);
    }

    #[test]
    fn recovery_examples() {
        let tri = IntersectionPoset::build(&fixtures::generic_triangle(2));
        assert_eq!(tri.recover_t(), BTreeMap::from([(2, 3)]));
        let pencil5 = IntersectionPoset::build(&fixtures::pencil(2, 5));
        assert_eq!(pencil5.recover_t(), BTreeMap::from([(5, 1)]));
        let skew = IntersectionPoset::build(&fixtures::skew_family(4));
        assert_eq!(skew.recover_d(), 4);
    }

    #[test]
    fn generic_reduction_drops_implied_pairs() {
        // chain 0 < 1 < 2 < 3 given with a redundant shortcut
        let p = IntersectionPoset::from_relations(
            vec![MPoint(0), LineEl(0), LineEl(1), Top],
            &[(0, 1), (1, 2), (2, 3), (0, 3)],
        );
        assert_eq!(p.hasse_edges().len(), 3);
        assert_eq!(p.height(), 4);
    }

    #[test]
    fn dot_listing_uses_stable_ids() {
        let dot = IntersectionPoset::build(&fixtures::crossing_pair(3)).to_dot();
        assert!(dot.contains("p0 -> l0;"));
        assert!(dot.contains("l1 -> T;"));
    }
}
