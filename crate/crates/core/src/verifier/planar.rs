//! Region counting for planar arrangements by tracing the faces of the
//! subdivision of a bounding rectangle.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::{Signed, Zero};
use serde::Serialize;

use super::VerifyError;
use crate::arrangement::Arrangement;
use crate::geometry::{point_on_line, rat_int, Line, PointN, Rat};

/// The subdivision of a closed rectangle by the clipped lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClippedSubdivision {
    #[serde(with = "crate::rat_serde::vec")]
    pub box_min: Vec<Rat>,
    #[serde(with = "crate::rat_serde::vec")]
    pub box_max: Vec<Rat>,
    pub vertices: usize,
    pub edges: usize,
    /// Bounded faces, i.e. the cells inside the rectangle.
    pub faces: usize,
}

impl ClippedSubdivision {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

/// Number of connected components of the complement of a planar arrangement.
pub fn euler_region_count(a: &Arrangement) -> Result<usize, VerifyError> {
    clipped_subdivision(a).map(|s| s.faces)
}

pub fn clipped_subdivision(a: &Arrangement) -> Result<ClippedSubdivision, VerifyError> {
    if a.dimension() != 2 {
        return Err(VerifyError::WrongDimension {
            expected: "2",
            found: a.dimension(),
        });
    }
    let points = a.multiple_points();
    let mut anchors: Vec<&PointN> = points.iter().map(|p| &p.location).collect();
    anchors.extend(a.lines().iter().map(Line::base));
    let (lo, hi) = bounds(&anchors);
    let extent = (0..2).map(|i| &hi[i] - &lo[i]).max().unwrap_or_else(Rat::zero);
    let unit = if extent.is_zero() { rat_int(1) } else { extent };
    // x margins grow linearly and y margins quadratically, so every corner
    // runs along a parabola and each line can hit it at most twice
    for k in 1i64.. {
        let mx = &unit * rat_int(k);
        let my = &unit * rat_int(k * k);
        let box_min = vec![&lo[0] - &mx, &lo[1] - &my];
        let box_max = vec![&hi[0] + &mx, &hi[1] + &my];
        let corners = corners(&box_min, &box_max);
        let hits_corner = a
            .lines()
            .iter()
            .any(|l| corners.iter().any(|c| point_on_line(c, l).expect("planar")));
        if !hits_corner {
            return Ok(trace(a, &points, box_min, box_max));
        }
    }
    unreachable!("at most 8d inflation steps are rejected")
}

fn bounds(points: &[&PointN]) -> (Vec<Rat>, Vec<Rat>) {
    if points.is_empty() {
        return (vec![Rat::zero(); 2], vec![Rat::zero(); 2]);
    }
    let mut lo = points[0].coords().to_vec();
    let mut hi = lo.clone();
    for p in &points[1..] {
        for (i, c) in p.coords().iter().enumerate() {
            if *c < lo[i] {
                lo[i] = c.clone();
            }
            if *c > hi[i] {
                hi[i] = c.clone();
            }
        }
    }
    (lo, hi)
}

fn corners(min: &[Rat], max: &[Rat]) -> [PointN; 4] {
    [
        PointN::new(vec![min[0].clone(), min[1].clone()]),
        PointN::new(vec![max[0].clone(), min[1].clone()]),
        PointN::new(vec![max[0].clone(), max[1].clone()]),
        PointN::new(vec![min[0].clone(), max[1].clone()]),
    ]
}

/// Parameter range of the line inside the closed rectangle.
pub(crate) fn clip_parameters(l: &Line, min: &[Rat], max: &[Rat]) -> Option<(Rat, Rat)> {
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for (i, d) in l.dir().iter().enumerate() {
        let p = &l.base().coords()[i];
        if d.is_zero() {
            if p < &min[i] || p > &max[i] {
                return None;
            }
            continue;
        }
        let d = Rat::from_integer(d.clone());
        let a = (&min[i] - p) / &d;
        let b = (&max[i] - p) / &d;
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        lo = Some(match lo {
            Some(x) if x > a => x,
            _ => a,
        });
        hi = Some(match hi {
            Some(x) if x < b => x,
            _ => b,
        });
    }
    let (lo, hi) = (lo?, hi?);
    (lo <= hi).then_some((lo, hi))
}

/// Position along the rectangle boundary, counterclockwise from `min`.
fn perimeter_position(p: &PointN, min: &[Rat], max: &[Rat]) -> Rat {
    let (x, y) = (&p.coords()[0], &p.coords()[1]);
    let w = &max[0] - &min[0];
    let h = &max[1] - &min[1];
    if *y == min[1] {
        x - &min[0]
    } else if *x == max[0] {
        &w + (y - &min[1])
    } else if *y == max[1] {
        &w + &h + (&max[0] - x)
    } else {
        &w + &w + &h + (&max[1] - y)
    }
}

fn half(w: &[Rat; 2]) -> u8 {
    if w[1].is_positive() || (w[1].is_zero() && w[0].is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular order of nonzero vectors starting at angle 0.
fn angle_cmp(a: &[Rat; 2], b: &[Rat; 2]) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a[0] * &b[1] - &a[1] * &b[0];
        Rat::zero().cmp(&cross)
    })
}

fn trace(
    a: &Arrangement,
    points: &[crate::arrangement::MultiplePoint],
    box_min: Vec<Rat>,
    box_max: Vec<Rat>,
) -> ClippedSubdivision {
    let mut index: BTreeMap<PointN, usize> = BTreeMap::new();
    let mut coords: Vec<PointN> = Vec::new();
    let mut id = |p: PointN, coords: &mut Vec<PointN>| -> usize {
        *index.entry(p.clone()).or_insert_with(|| {
            coords.push(p);
            coords.len() - 1
        })
    };

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut boundary: Vec<usize> = corners(&box_min, &box_max)
        .into_iter()
        .map(|c| id(c, &mut coords))
        .collect();
    for (li, line) in a.lines().iter().enumerate() {
        let (t0, t1) = clip_parameters(line, &box_min, &box_max).expect("line passes through the box");
        let enter = id(line.point_at(&t0), &mut coords);
        let exit = id(line.point_at(&t1), &mut coords);
        boundary.push(enter);
        boundary.push(exit);
        let mut along: Vec<(Rat, usize)> = vec![(t0, enter), (t1, exit)];
        for p in points.iter().filter(|p| p.incident.contains(&li)) {
            along.push((line.parameter_of(&p.location), id(p.location.clone(), &mut coords)));
        }
        along.sort();
        edges.extend(along.windows(2).map(|w| (w[0].1, w[1].1)));
    }
    boundary.sort_by_key(|&v| perimeter_position(&coords[v], &box_min, &box_max));
    boundary.dedup();
    for i in 0..boundary.len() {
        edges.push((boundary[i], boundary[(i + 1) % boundary.len()]));
    }

    let v = coords.len();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); v];
    for &(x, y) in &edges {
        adjacency[x].push(y);
        adjacency[y].push(x);
    }
    let vector = |from: usize, to: usize| -> [Rat; 2] {
        let (p, q) = (coords[from].coords(), coords[to].coords());
        [&q[0] - &p[0], &q[1] - &p[1]]
    };
    for (u, nbrs) in adjacency.iter_mut().enumerate() {
        nbrs.sort_by(|&x, &y| angle_cmp(&vector(u, x), &vector(u, y)));
    }

    // walk every directed edge once; each closed walk bounds one face
    let slot = |u: usize, w: usize| adjacency[u].iter().position(|&x| x == w).expect("edge is present");
    let mut visited: Vec<Vec<bool>> = adjacency.iter().map(|n| vec![false; n.len()]).collect();
    let mut cycles = 0;
    for start in 0..v {
        for k in 0..adjacency[start].len() {
            if visited[start][k] {
                continue;
            }
            cycles += 1;
            let (mut u, mut i) = (start, k);
            while !visited[u][i] {
                visited[u][i] = true;
                let w = adjacency[u][i];
                let back = slot(w, u);
                let deg = adjacency[w].len();
                // clockwise neighbour of the reversed edge keeps the face on the left
                let next = (back + deg - 1) % deg;
                u = w;
                i = next;
            }
        }
    }

    ClippedSubdivision {
        box_min,
        box_max,
        vertices: v,
        edges: edges.len(),
        faces: cycles - 1,
    }
}
