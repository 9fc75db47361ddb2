//! Box-clipped rasterization of an arrangement complement.
//!
//! The bounding cube is split into `mⁿ` closed grid cubes; a cube is free when
//! it has exactly empty intersection with every line. Occupancy is therefore
//! conservative: any cube touched by a line, even at a single corner, is
//! removed.
//!
//! Near a multiple point the blocked tubes of the incident lines run within a
//! few cubes of each other and can touch again at isolated corners, which adds
//! spurious loops. Every multiple point therefore also blocks all cubes
//! meeting a ball around it whose radius `ρ` satisfies `ρ·sin θ > 2·diam` for
//! every angle `θ` between incident lines; outside the ball the tubes are then
//! disjoint.

use num::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::VerifyError;
use crate::arrangement::{Arrangement, MultiplePoint};
use crate::geometry::{
    closest_approach_midpoint, dot, intersect_lines, line_line_distance_sq, norm_sq, point_line_distance_sq,
    rat, rat_int, sub, IntersectionResult, Line, PointN, Rat,
};

/// An axis-aligned cube `[min, min + side]ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridBox {
    #[serde(with = "crate::rat_serde::vec")]
    pub min: Vec<Rat>,
    #[serde(with = "crate::rat_serde")]
    pub side: Rat,
}

impl GridBox {
    pub fn dimension(&self) -> usize {
        self.min.len()
    }

    pub fn max(&self) -> Vec<Rat> {
        self.min.iter().map(|c| c + &self.side).collect()
    }
}

/// Why a resolution was judged too coarse to trust.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoarseReason {
    MultiplePoints { first: usize, second: usize },
    PointNearLine { point: usize, line: usize },
    PointNearBoundary { point: usize },
    LinesNear { first: usize, second: usize },
    BoundaryCrossings { first: usize, second: usize },
}

impl std::fmt::Display for CoarseReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::MultiplePoints { first, second } => {
                write!(f, "the junction blocks of multiple points {first} and {second} come too close")
            }
            Self::PointNearLine { point, line } => {
                write!(f, "the junction block of multiple point {point} comes too close to line {line}")
            }
            Self::PointNearBoundary { point } => {
                write!(f, "the junction block of multiple point {point} reaches the box boundary")
            }
            Self::LinesNear { first, second } => {
                write!(f, "skew lines {first} and {second} are within two cube diameters")
            }
            Self::BoundaryCrossings { first, second } => {
                write!(f, "lines {first} and {second} leave the box within two cube diameters")
            }
        }
    }
}

/// Top-dimensional grid cubes of the clipped complement, with their faces
/// implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicalComplex {
    resolution: usize,
    grid: GridBox,
    free: Vec<bool>,
}

impl CubicalComplex {
    /// A complex from an explicit occupancy vector, indexed with axis 0
    /// varying fastest.
    pub fn from_free_cubes(grid: GridBox, resolution: usize, free: Vec<bool>) -> Self {
        assert_eq!(free.len(), resolution.pow(grid.dimension() as u32));
        Self {
            resolution,
            grid,
            free,
        }
    }

    pub fn dimension(&self) -> usize {
        self.grid.dimension()
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn grid(&self) -> &GridBox {
        &self.grid
    }

    pub fn is_free(&self, cube: &[usize]) -> bool {
        self.free[cube_index(cube, self.resolution)]
    }

    pub fn free_flags(&self) -> &[bool] {
        &self.free
    }

    pub fn free_count(&self) -> usize {
        self.free.iter().filter(|&&f| f).count()
    }

    pub fn cube_count(&self) -> usize {
        self.free.len()
    }
}

pub(crate) fn cube_index(cube: &[usize], m: usize) -> usize {
    cube.iter().rev().fold(0, |acc, &c| acc * m + c)
}

pub(crate) fn cube_coords(mut index: usize, m: usize, n: usize) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let c = index % m;
            index /= m;
            c
        })
        .collect()
}

/// Points that pin down where the interesting geometry sits: multiple
/// points, the base point of every line without one, and the closest-approach
/// midpoints of skew pairs.
fn anchor_points(a: &Arrangement) -> Vec<PointN> {
    let points = a.multiple_points();
    let mut anchors: Vec<PointN> = points.iter().map(|p| p.location.clone()).collect();
    for (i, l) in a.lines().iter().enumerate() {
        if !points.iter().any(|p| p.incident.contains(&i)) {
            anchors.push(l.base().clone());
        }
    }
    for (i, l) in a.lines().iter().enumerate() {
        for m in &a.lines()[i + 1..] {
            if intersect_lines(l, m).expect("same dimension") == IntersectionResult::Empty {
                anchors.extend(closest_approach_midpoint(l, m));
            }
        }
    }
    anchors
}

/// Bounding cube of the anchor points, centred on them and inflated by one
/// box-width on every side.
pub fn bounding_grid_box(a: &Arrangement) -> GridBox {
    let n = a.dimension();
    let anchors = anchor_points(a);
    let (lo, hi) = match anchors.split_first() {
        None => (vec![Rat::zero(); n], vec![Rat::zero(); n]),
        Some((first, rest)) => rest.iter().fold(
            (first.coords().to_vec(), first.coords().to_vec()),
            |(mut lo, mut hi), p| {
                for (i, c) in p.coords().iter().enumerate() {
                    if *c < lo[i] {
                        lo[i] = c.clone();
                    }
                    if *c > hi[i] {
                        hi[i] = c.clone();
                    }
                }
                (lo, hi)
            },
        ),
    };
    let width = (0..n).map(|i| &hi[i] - &lo[i]).max().unwrap_or_else(Rat::zero);
    let width = if width.is_zero() { rat_int(1) } else { width };
    let half_side = &width * rat(3, 2);
    let min = lo
        .iter()
        .zip(&hi)
        .map(|(l, h)| (l + h) * rat(1, 2) - &half_side)
        .collect();
    GridBox {
        min,
        side: &width * rat_int(3),
    }
}

/// Both ends of the line's chord through the box.
fn boundary_crossings(l: &Line, grid: &GridBox) -> Option<[PointN; 2]> {
    let (t0, t1) = super::planar::clip_parameters(l, &grid.min, &grid.max())?;
    Some([l.point_at(&t0), l.point_at(&t1)])
}

/// Squared sine of the smallest angle between lines through `p`.
fn min_sin_sq(a: &Arrangement, p: &MultiplePoint) -> Rat {
    let dirs: Vec<Vec<Rat>> = p.incident.iter().map(|&i| a.lines()[i].dir_rat()).collect();
    let mut best = rat_int(1);
    for (i, u) in dirs.iter().enumerate() {
        for v in &dirs[i + 1..] {
            let c = dot(u, v);
            let s = rat_int(1) - &c * &c / (norm_sq(u) * norm_sq(v));
            if s < best {
                best = s;
            }
        }
    }
    best
}

/// Junction ball radius in cells, rounded up to eighths: the least `k/8` with
/// `(k/8)²·sin²θ > 4n`.
fn junction_radius_cells(a: &Arrangement, p: &MultiplePoint) -> Rat {
    let s = min_sin_sq(a, p);
    let bound = rat_int(256 * a.dimension() as i64);
    let mut k = 1;
    while rat_int(k * k) * &s <= bound {
        k += 1;
    }
    rat(k, 8)
}

/// Whether `√d > a + √b` for nonnegative `d`, `a`, `b`.
fn exceeds(d: &Rat, a: &Rat, b: &Rat) -> bool {
    let x = d - a * a - b;
    x.is_positive() && &x * &x > rat_int(4) * a * a * b
}

/// Rejects resolutions at which distinct features come within two cube
/// diameters of each other, or at which a junction ball and its blocked
/// cubes would reach another feature or the box boundary.
pub fn check_resolution(a: &Arrangement, grid: &GridBox, m: usize) -> Result<(), VerifyError> {
    let n = a.dimension();
    let cell = &grid.side / rat_int(m as i64);
    // (2·diam)² with diam² = n·cell²
    let limit = &cell * &cell * rat_int(4 * n as i64);
    let coarse = |reason| VerifyError::ResolutionTooCoarse { resolution: m, reason };

    let points = a.multiple_points();
    let radii: Vec<Rat> = points.iter().map(|p| &cell * junction_radius_cells(a, p)).collect();
    let max = grid.max();
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate().skip(i + 1) {
            let d = norm_sq(&sub(p.location.coords(), q.location.coords()));
            if !exceeds(&d, &(&radii[i] + &radii[j]), &limit) {
                return Err(coarse(CoarseReason::MultiplePoints { first: i, second: j }));
            }
        }
        for (li, l) in a.lines().iter().enumerate() {
            if !p.incident.contains(&li) && !exceeds(&point_line_distance_sq(&p.location, l), &radii[i], &limit) {
                return Err(coarse(CoarseReason::PointNearLine { point: i, line: li }));
            }
        }
    }
    for (i, p) in points.iter().enumerate() {
        let reach = &radii[i] + &cell + &cell;
        let inside = (0..n).all(|k| {
            let x = &p.location.coords()[k];
            x - &grid.min[k] > reach && &max[k] - x > reach
        });
        if !inside {
            return Err(coarse(CoarseReason::PointNearBoundary { point: i }));
        }
    }
    for (i, l) in a.lines().iter().enumerate() {
        for (j, k) in a.lines().iter().enumerate().skip(i + 1) {
            if line_line_distance_sq(l, k).is_some_and(|d| d <= limit) {
                return Err(coarse(CoarseReason::LinesNear { first: i, second: j }));
            }
        }
    }
    let crossings: Vec<Option<[PointN; 2]>> = a.lines().iter().map(|l| boundary_crossings(l, grid)).collect();
    for i in 0..crossings.len() {
        for j in i + 1..crossings.len() {
            let (Some(ci), Some(cj)) = (&crossings[i], &crossings[j]) else {
                continue;
            };
            let close = ci
                .iter()
                .any(|p| cj.iter().any(|q| norm_sq(&sub(p.coords(), q.coords())) <= limit));
            if close {
                return Err(coarse(CoarseReason::BoundaryCrossings { first: i, second: j }));
            }
        }
    }
    Ok(())
}

/// Options for [`rasterize_complement_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RasterOptions {
    /// Permit n = 4, whose grids grow as m⁴.
    pub allow_four_dimensional: bool,
    /// Block only the cubes meeting a line, without junction balls.
    pub skip_junction_blocks: bool,
}

pub fn rasterize_complement(a: &Arrangement, m: usize) -> Result<CubicalComplex, VerifyError> {
    rasterize_complement_with(a, m, RasterOptions::default())
}

pub fn rasterize_complement_with(
    a: &Arrangement,
    m: usize,
    options: RasterOptions,
) -> Result<CubicalComplex, VerifyError> {
    let n = a.dimension();
    let allowed = n == 2 || n == 3 || (n == 4 && options.allow_four_dimensional);
    if !allowed {
        return Err(VerifyError::WrongDimension {
            expected: "2 or 3 (4 when explicitly allowed)",
            found: n,
        });
    }
    if m < 2 {
        return Err(VerifyError::InvalidResolution(m));
    }
    let grid = bounding_grid_box(a);
    check_resolution(a, &grid, m)?;
    let mut free = vec![true; m.pow(n as u32)];
    for line in a.lines() {
        mark_blocked(line, &grid, m, &mut free);
    }
    if !options.skip_junction_blocks {
        for p in a.multiple_points() {
            mark_ball(&p.location, junction_radius_cells(a, &p), &grid, m, &mut free);
        }
    }
    Ok(CubicalComplex {
        resolution: m,
        grid,
        free,
    })
}

/// Line position in grid units: `y = (x − min)·m / side`.
fn grid_base(l: &Line, grid: &GridBox, m: usize) -> Vec<Rat> {
    let scale = rat_int(m as i64) / &grid.side;
    l.base()
        .coords()
        .iter()
        .zip(&grid.min)
        .map(|(x, lo)| (x - lo) * &scale)
        .collect()
}

/// Marks every closed cube meeting the ball of `radius` cells around `centre`.
fn mark_ball(centre: &PointN, radius: Rat, grid: &GridBox, m: usize, free: &mut [bool]) {
    let scale = rat_int(m as i64) / &grid.side;
    let q: Vec<Rat> = centre.coords().iter().zip(&grid.min).map(|(x, lo)| (x - lo) * &scale).collect();
    let r = radius;
    let r_sq = &r * &r;
    let ranges: Vec<Vec<usize>> = q
        .iter()
        .map(|c| {
            let lo = (c - &r).floor().to_integer().to_i64().unwrap_or(i64::MIN).max(0);
            let hi = (c + &r).floor().to_integer().to_i64().unwrap_or(i64::MAX).min(m as i64 - 1);
            (lo..=hi).map(|k| k as usize).collect()
        })
        .collect();
    for_each_product(&ranges, |cube| {
        let dist_sq: Rat = cube
            .iter()
            .zip(&q)
            .map(|(&k, c)| {
                let (a, b) = (rat_int(k as i64), rat_int(k as i64 + 1));
                let gap = if *c < a { &a - c } else if *c > b { c - &b } else { Rat::zero() };
                &gap * &gap
            })
            .sum();
        if dist_sq <= r_sq {
            free[cube_index(cube, m)] = false;
        }
    });
}

/// Indices of the closed unit cells along one axis containing coordinate `y`.
fn cells_containing(y: &Rat, m: usize) -> Vec<usize> {
    let floor = y.floor().to_integer();
    let Some(k) = floor.to_i64() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(2);
    if y.is_integer() {
        if k >= 1 && k as usize <= m {
            out.push(k as usize - 1);
        }
        if k >= 0 && (k as usize) < m {
            out.push(k as usize);
        }
    } else if k >= 0 && (k as usize) < m {
        out.push(k as usize);
    }
    out
}

/// Marks every closed cube the line meets by walking its chord through the
/// grid: between consecutive grid-plane crossings the set of cubes containing
/// the line is constant, so crossings and the midpoints between them cover it.
fn mark_blocked(l: &Line, grid: &GridBox, m: usize, free: &mut [bool]) {
    let n = grid.dimension();
    let q = grid_base(l, grid, m);
    let mrat = rat_int(m as i64);
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for i in 0..n {
        let d = &l.dir()[i];
        if d.is_zero() {
            if q[i].is_negative() || q[i] > mrat {
                return;
            }
            continue;
        }
        let d = Rat::from_integer(d.clone());
        let a = -&q[i] / &d;
        let b = (&mrat - &q[i]) / &d;
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        if lo.as_ref().map_or(true, |x| a > *x) {
            lo = Some(a);
        }
        if hi.as_ref().map_or(true, |x| b < *x) {
            hi = Some(b);
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return;
    };
    if lo > hi {
        return;
    }
    let mut breaks = vec![lo.clone(), hi.clone()];
    for i in 0..n {
        let d = &l.dir()[i];
        if d.is_zero() {
            continue;
        }
        let d = Rat::from_integer(d.clone());
        for k in 0..=m {
            let t = (rat_int(k as i64) - &q[i]) / &d;
            if t >= lo && t <= hi {
                breaks.push(t);
            }
        }
    }
    breaks.sort();
    breaks.dedup();
    let mut samples = breaks.clone();
    samples.extend(breaks.windows(2).map(|w| (&w[0] + &w[1]) * rat(1, 2)));

    let dir: Vec<Rat> = l.dir_rat();
    for t in samples {
        let per_axis: Vec<Vec<usize>> = (0..n).map(|i| cells_containing(&(&q[i] + &t * &dir[i]), m)).collect();
        for_each_product(&per_axis, |cube| free[cube_index(cube, m)] = false);
    }
}

fn for_each_product(choices: &[Vec<usize>], mut f: impl FnMut(&[usize])) {
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    let mut pick = vec![0usize; choices.len()];
    let mut current: Vec<usize> = choices.iter().map(|c| c[0]).collect();
    loop {
        f(&current);
        let mut axis = 0;
        loop {
            if axis == choices.len() {
                return;
            }
            pick[axis] += 1;
            if pick[axis] < choices[axis].len() {
                current[axis] = choices[axis][pick[axis]];
                break;
            }
            pick[axis] = 0;
            current[axis] = choices[axis][0];
            axis += 1;
        }
    }
}

/// Direct closed-cube versus line test, used as an independent check of the
/// chord walk.
pub fn cube_meets_line(grid: &GridBox, m: usize, cube: &[usize], l: &Line) -> bool {
    let q = grid_base(l, grid, m);
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for (i, &c) in cube.iter().enumerate() {
        let (a, b) = (rat_int(c as i64), rat_int(c as i64 + 1));
        let d = &l.dir()[i];
        if d.is_zero() {
            if q[i] < a || q[i] > b {
                return false;
            }
            continue;
        }
        let d = Rat::from_integer(d.clone());
        let t0 = (&a - &q[i]) / &d;
        let t1 = (&b - &q[i]) / &d;
        let (t0, t1) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
        if lo.as_ref().map_or(true, |x| t0 > *x) {
            lo = Some(t0);
        }
        if hi.as_ref().map_or(true, |x| t1 < *x) {
            hi = Some(t1);
        }
    }
    match (lo, hi) {
        (Some(lo), Some(hi)) => lo <= hi,
        _ => true,
    }
}
