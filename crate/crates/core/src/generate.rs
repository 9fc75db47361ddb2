//! Seeded random arrangements.
//!
//! All randomness comes from SplitMix64 (64-bit state, increment
//! `0x9E3779B97F4A7C15`, output mix multipliers `0xBF58476D1CE4E5B9` and
//! `0x94D049BB133111EB`), seeded directly with the user seed. An integer in
//! `[lo, hi]` is drawn as `lo + next_u64() % (hi − lo + 1)`, so the same seed
//! yields the same arrangement on every platform.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::arrangement::Arrangement;
use crate::geometry::{canonicalize_line, intersect_lines, point_on_line, rat_int, IntersectionResult, Line, PointN, Rat};

const COORD_RANGE: i64 = 8;
const DIR_RANGE: i64 = 4;
const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid profile `{0}`: expected generic, mixed or pencil(k) with 2 <= k <= count")]
    InvalidProfile(String),
    #[error("line count must be at least 1")]
    EmptyArrangement,
    #[error("dimension must be at least 2, got {0}")]
    InvalidDimension(usize),
    #[error("no admissible line found after {0} attempts")]
    Exhausted(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// No parallel lines in the plane and no point on three or more lines.
    Generic,
    /// `k` lines through one shared point, the rest generic.
    Pencil(usize),
    /// Random mix of generic lines, lines through existing multiple points,
    /// lines meeting an existing line, and parallels.
    Mixed,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Generic => f.write_str("generic"),
            Self::Pencil(k) => write!(f, "pencil({k})"),
            Self::Mixed => f.write_str("mixed"),
        }
    }
}

impl FromStr for Profile {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || GenerateError::InvalidProfile(s.to_string());
        match s.trim() {
            "generic" => Ok(Self::Generic),
            "mixed" => Ok(Self::Mixed),
            other => {
                let k = other
                    .strip_prefix("pencil(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|k| k.trim().parse::<usize>().ok())
                    .ok_or_else(invalid)?;
                if k < 2 {
                    return Err(invalid());
                }
                Ok(Self::Pencil(k))
            }
        }
    }
}

struct Draw(SplitMix64);

impl Draw {
    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.0.next_u64() % span) as i64
    }

    fn point(&mut self, n: usize) -> PointN {
        PointN::from_ints((0..n).map(|_| self.int(-COORD_RANGE, COORD_RANGE)))
    }

    fn direction(&mut self, n: usize) -> Vec<Rat> {
        loop {
            let u: Vec<Rat> = (0..n).map(|_| rat_int(self.int(-DIR_RANGE, DIR_RANGE))).collect();
            if u.iter().any(|c| !c.is_zero()) {
                return u;
            }
        }
    }

    fn line_through(&mut self, p: &PointN) -> Line {
        canonicalize_line(p, &self.direction(p.dim())).expect("direction is nonzero")
    }
}

struct Builder {
    n: usize,
    lines: Vec<Line>,
    /// Pairwise intersection points, with repetitions.
    crossings: Vec<PointN>,
}

impl Builder {
    fn is_duplicate(&self, l: &Line) -> bool {
        self.lines.contains(l)
    }

    fn is_generic(&self, l: &Line) -> bool {
        let parallel = self.n == 2 && self.lines.iter().any(|k| k.dir() == l.dir());
        !self.is_duplicate(l) && !parallel && !self.crossings.iter().any(|p| point_on_line(p, l).expect("same dimension"))
    }

    fn push(&mut self, l: Line) {
        for k in &self.lines {
            if let IntersectionResult::Point(p) = intersect_lines(k, &l).expect("same dimension") {
                self.crossings.push(p);
            }
        }
        self.lines.push(l);
    }

    fn push_generic(&mut self, draw: &mut Draw) -> Result<(), GenerateError> {
        for _ in 0..MAX_ATTEMPTS {
            let p = draw.point(self.n);
            let l = draw.line_through(&p);
            if self.is_generic(&l) {
                self.push(l);
                return Ok(());
            }
        }
        Err(GenerateError::Exhausted(MAX_ATTEMPTS))
    }
}

pub fn generate_random(n: usize, count: usize, profile: Profile, seed: u64) -> Result<Arrangement, GenerateError> {
    if n < 2 {
        return Err(GenerateError::InvalidDimension(n));
    }
    if count == 0 {
        return Err(GenerateError::EmptyArrangement);
    }
    let mut draw = Draw(SplitMix64::seed_from_u64(seed));
    let mut b = Builder {
        n,
        lines: Vec::new(),
        crossings: Vec::new(),
    };
    match profile {
        Profile::Generic => {
            for _ in 0..count {
                b.push_generic(&mut draw)?;
            }
        }
        Profile::Pencil(k) => {
            if k < 2 || k > count {
                return Err(GenerateError::InvalidProfile(profile.to_string()));
            }
            let centre = draw.point(n);
            let mut attempts = 0;
            while b.lines.len() < k {
                attempts += 1;
                if attempts > MAX_ATTEMPTS {
                    return Err(GenerateError::Exhausted(MAX_ATTEMPTS));
                }
                let l = draw.line_through(&centre);
                if !b.is_duplicate(&l) {
                    b.push(l);
                }
            }
            for _ in k..count {
                b.push_generic(&mut draw)?;
            }
        }
        Profile::Mixed => {
            let mut attempts = 0;
            while b.lines.len() < count {
                attempts += 1;
                if attempts > MAX_ATTEMPTS {
                    return Err(GenerateError::Exhausted(MAX_ATTEMPTS));
                }
                let candidate = match (b.lines.is_empty(), draw.int(0, 3)) {
                    (true, _) | (false, 0) => {
                        b.push_generic(&mut draw)?;
                        continue;
                    }
                    (false, 1) if !b.crossings.is_empty() => {
                        let i = draw.int(0, b.crossings.len() as i64 - 1) as usize;
                        let p = b.crossings[i].clone();
                        draw.line_through(&p)
                    }
                    (false, 1 | 2) => {
                        let i = draw.int(0, b.lines.len() as i64 - 1) as usize;
                        let t = rat_int(draw.int(-3, 3));
                        let p = b.lines[i].point_at(&t);
                        draw.line_through(&p)
                    }
                    _ => {
                        let i = draw.int(0, b.lines.len() as i64 - 1) as usize;
                        let u = b.lines[i].dir_rat();
                        canonicalize_line(&draw.point(n), &u).expect("direction is nonzero")
                    }
                };
                if !b.is_duplicate(&candidate) {
                    b.push(candidate);
                }
            }
        }
    }
    Ok(Arrangement::from_lines(n, b.lines).expect("lines are distinct and share the dimension"))
}
