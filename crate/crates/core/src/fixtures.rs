//! Small named arrangements used throughout the tests and the acceptance suite.

use crate::arrangement::Arrangement;
use crate::geometry::{rat_int, PointN, Rat};

pub fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().copied().map(rat_int).collect()
}

fn unit(n: usize, axis: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(i == axis)).collect()
}

fn build(n: usize, lines: &[(Vec<i64>, Vec<i64>)]) -> Arrangement {
    let raw: Vec<(PointN, Vec<Rat>)> = lines
        .iter()
        .map(|(p, u)| (PointN::from_ints(p.iter().copied()), ints(u)))
        .collect();
    Arrangement::new(n, &raw).expect("fixture is a valid arrangement")
}

/// Builds an arrangement from integer `(point, direction)` pairs.
pub fn from_ints(n: usize, lines: &[(&[i64], &[i64])]) -> Arrangement {
    let owned: Vec<(Vec<i64>, Vec<i64>)> = lines.iter().map(|(p, u)| (p.to_vec(), u.to_vec())).collect();
    build(n, &owned)
}

/// The first coordinate axis.
pub fn single_line(n: usize) -> Arrangement {
    build(n, &[(vec![0; n], unit(n, 0))])
}

/// The first two coordinate axes, crossing at the origin.
pub fn crossing_pair(n: usize) -> Arrangement {
    build(n, &[(vec![0; n], unit(n, 0)), (vec![0; n], unit(n, 1))])
}

/// The x-axis and the vertical line through `(0, 1, 0)` in ℝ³.
pub fn skew_pair() -> Arrangement {
    build(3, &[(vec![0, 0, 0], vec![1, 0, 0]), (vec![0, 1, 0], vec![0, 0, 1])])
}

/// `k` pairwise skew lines in ℝ³, one per horizontal level.
pub fn skew_family(k: usize) -> Arrangement {
    let lines: Vec<_> = (0..k as i64).map(|j| (vec![0, 0, j], vec![1, j, 0])).collect();
    build(3, &lines)
}

/// All `n` coordinate axes.
pub fn coordinate_axes(n: usize) -> Arrangement {
    let lines: Vec<_> = (0..n).map(|i| (vec![0; n], unit(n, i))).collect();
    build(n, &lines)
}

/// `k` lines through the origin of ℝⁿ: coordinate axes first, then
/// directions `(1, j, j², …)`.
pub fn pencil(n: usize, k: usize) -> Arrangement {
    let lines: Vec<_> = (0..k)
        .map(|j| {
            let dir = if j < n {
                unit(n, j)
            } else {
                let base = (j - n + 2) as i64;
                (0..n as u32).map(|e| base.pow(e)).collect()
            };
            (vec![0; n], dir)
        })
        .collect();
    build(n, &lines)
}

/// Three pairwise crossing lines in the plane `x₃ = … = 0`: the two first
/// axes and the line `x₁ + x₂ = 1`.
pub fn generic_triangle(n: usize) -> Arrangement {
    let mut third = vec![0; n];
    third[0] = 1;
    let mut dir = vec![0; n];
    dir[0] = -1;
    dir[1] = 1;
    build(n, &[(vec![0; n], unit(n, 0)), (vec![0; n], unit(n, 1)), (third, dir)])
}

/// Two parallel horizontal lines in the plane.
pub fn parallel_pair() -> Arrangement {
    build(2, &[(vec![0, 0], vec![1, 0]), (vec![0, 1], vec![1, 0])])
}
