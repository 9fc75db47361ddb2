//! Cellular homology of cubical complexes over the two-element field.
//!
//! Cells of an `m`-per-axis grid are addressed by integer coordinates in
//! `0..=2m`: an odd coordinate means the cell spans that axis, an even one
//! means it sits on a grid plane. The dimension of a cell is its number of odd
//! coordinates, its faces are obtained by moving one odd coordinate by ±1, and
//! its cofaces by moving one even coordinate by ±1.
//!
//! Before ranks are computed the complex is shrunk by elementary collapses
//! (removing a free face together with its unique coface), which preserves
//! homology. Ranks of the remaining boundary matrices are found by Gaussian
//! elimination over packed bit rows.

use serde::{Deserialize, Serialize};

use super::raster::{cube_coords, CubicalComplex};

/// `(b₀, …, bₙ)` over the two-element field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reduction {
    /// Elementary collapses before elimination.
    #[default]
    Collapse,
    /// Eliminate the full boundary matrices.
    None,
}

/// Cell counts before and after reduction, for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyStats {
    pub cells: usize,
    pub reduced_cells: usize,
}

/// Dense presence map over all cells of the grid.
struct CellGrid {
    n: usize,
    extent: usize,
    strides: Vec<usize>,
    present: Vec<bool>,
}

impl CellGrid {
    fn from_complex(c: &CubicalComplex) -> Self {
        let n = c.dimension();
        let m = c.resolution();
        let extent = 2 * m + 1;
        let strides: Vec<usize> = (0..n).map(|i| extent.pow(i as u32)).collect();
        let mut present = vec![false; extent.pow(n as u32)];
        let offsets: Vec<usize> = (0..3usize.pow(n as u32))
            .map(|mut k| {
                (0..n).fold(0, |acc, i| {
                    let o = k % 3;
                    k /= 3;
                    acc + o * strides[i]
                })
            })
            .collect();
        for (idx, _) in c.free_flags().iter().enumerate().filter(|(_, &f)| f) {
            let cube = cube_coords(idx, m, n);
            let corner: usize = cube.iter().zip(&strides).map(|(&x, s)| 2 * x * s).sum();
            for o in &offsets {
                present[corner + o] = true;
            }
        }
        Self {
            n,
            extent,
            strides,
            present,
        }
    }

    fn coord(&self, cell: usize, axis: usize) -> usize {
        (cell / self.strides[axis]) % self.extent
    }

    fn dim(&self, cell: usize) -> usize {
        (0..self.n).filter(|&i| self.coord(cell, i) % 2 == 1).count()
    }

    fn faces(&self, cell: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n)
            .filter(move |&i| self.coord(cell, i) % 2 == 1)
            .flat_map(move |i| [cell - self.strides[i], cell + self.strides[i]])
    }

    fn cofaces(&self, cell: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n)
            .filter(move |&i| self.coord(cell, i) % 2 == 0)
            .flat_map(move |i| {
                let c = self.coord(cell, i);
                let down = (c > 0).then(|| cell - self.strides[i]);
                let up = (c + 1 < self.extent).then(|| cell + self.strides[i]);
                down.into_iter().chain(up)
            })
    }

    fn count(&self) -> usize {
        self.present.iter().filter(|&&p| p).count()
    }

    /// Removes free-face pairs until none remain.
    fn collapse(&mut self) {
        let mut stack: Vec<usize> = (0..self.present.len()).filter(|&c| self.present[c]).collect();
        while let Some(cell) = stack.pop() {
            if !self.present[cell] {
                continue;
            }
            let partner = {
                let mut cofaces = self.cofaces(cell).filter(|&c| self.present[c]);
                match (cofaces.next(), cofaces.next()) {
                    (Some(p), None) => p,
                    _ => continue,
                }
            };
            self.present[cell] = false;
            self.present[partner] = false;
            stack.extend(self.faces(partner).filter(|&f| self.present[f]));
            stack.extend(self.faces(cell).filter(|&f| self.present[f]));
        }
    }
}

/// A GF(2) matrix stored as packed 64-bit rows.
pub struct BitMatrix {
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, ones: impl IntoIterator<Item = usize>) {
        let mut row = vec![0u64; self.cols.div_ceil(64)];
        for c in ones {
            row[c / 64] ^= 1 << (c % 64);
        }
        self.rows.push(row);
    }

    /// Rank by elimination on the highest set bit of each row.
    pub fn rank(mut self) -> usize {
        let words = self.cols.div_ceil(64);
        let mut pivot_of: Vec<Option<usize>> = vec![None; self.cols];
        let mut pivots: Vec<Vec<u64>> = Vec::new();
        for mut row in self.rows.drain(..) {
            loop {
                let Some(lead) = (0..words).rev().find(|&w| row[w] != 0).map(|w| w * 64 + 63 - row[w].leading_zeros() as usize)
                else {
                    break;
                };
                match pivot_of[lead] {
                    Some(p) => {
                        for (a, b) in row.iter_mut().zip(&pivots[p]) {
                            *a ^= b;
                        }
                    }
                    None => {
                        pivot_of[lead] = Some(pivots.len());
                        pivots.push(row);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

pub fn betti_numbers(c: &CubicalComplex) -> BettiVector {
    betti_numbers_with(c, Reduction::Collapse).0
}

pub fn betti_numbers_with(c: &CubicalComplex, reduction: Reduction) -> (BettiVector, HomologyStats) {
    let mut grid = CellGrid::from_complex(c);
    let cells = grid.count();
    if reduction == Reduction::Collapse {
        grid.collapse();
    }
    let n = grid.n;
    let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for cell in (0..grid.present.len()).filter(|&c| grid.present[c]) {
        by_dim[grid.dim(cell)].push(cell);
    }
    let reduced_cells = by_dim.iter().map(Vec::len).sum();

    // rank of ∂ₖ : Cₖ → Cₖ₋₁ for k = 1..=n; ∂₀ and ∂ₙ₊₁ vanish
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        let lower = &by_dim[k - 1];
        let mut matrix = BitMatrix::new(lower.len());
        for &cell in &by_dim[k] {
            matrix.push_row(grid.faces(cell).map(|f| lower.binary_search(&f).expect("complex is closed under faces")));
        }
        ranks[k] = matrix.rank();
    }
    let betti = (0..=n).map(|k| by_dim[k].len() - ranks[k] - ranks[k + 1]).collect();
    (BettiVector(betti), HomologyStats { cells, reduced_cells })
}
