//! Brute-force checks of predicted topology that do not use the genus formula.

mod homology;
mod planar;
mod raster;

use serde::Serialize;
use thiserror::Error;

use crate::arrangement::Arrangement;

pub use homology::{betti_numbers, betti_numbers_with, BettiVector, BitMatrix, HomologyStats, Reduction};
pub use planar::{clipped_subdivision, euler_region_count, ClippedSubdivision};
pub use raster::{
    bounding_grid_box, check_resolution, cube_meets_line, rasterize_complement, rasterize_complement_with,
    CoarseReason, CubicalComplex, GridBox, RasterOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("expected dimension {expected}, found {found}")]
    WrongDimension { expected: &'static str, found: usize },
    #[error("resolution {0} is below the minimum of 2 cubes per axis")]
    InvalidResolution(usize),
    #[error("resolution {resolution} is too coarse: {reason}")]
    ResolutionTooCoarse { resolution: usize, reason: CoarseReason },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub dimension: usize,
    pub resolution: usize,
    pub predicted: BettiVector,
    pub measured: BettiVector,
    #[serde(rename = "match")]
    pub matches: bool,
    pub free_cubes: usize,
    pub total_cubes: usize,
    pub homology: HomologyStats,
}

pub fn verify_arrangement(a: &Arrangement, m: usize) -> Result<VerificationReport, VerifyError> {
    verify_arrangement_with(a, m, RasterOptions::default())
}

pub fn verify_arrangement_with(
    a: &Arrangement,
    m: usize,
    options: RasterOptions,
) -> Result<VerificationReport, VerifyError> {
    let complex = rasterize_complement_with(a, m, options)?;
    let (measured, homology) = betti_numbers_with(&complex, Reduction::Collapse);
    let predicted = BettiVector(a.predict_topology().betti);
    Ok(VerificationReport {
        dimension: a.dimension(),
        resolution: m,
        matches: predicted == measured,
        predicted,
        measured,
        free_cubes: complex.free_count(),
        total_cubes: complex.cube_count(),
        homology,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn one_spatial_line_matches() {
        let r = verify_arrangement(&fixtures::single_line(3), 16).unwrap();
        assert_eq!(r.measured.0, vec![1, 1, 0, 0]);
        assert!(r.matches);
    }

    #[test]
    fn planar_triangle_matches_region_count() {
        let a = fixtures::generic_triangle(2);
        let r = verify_arrangement(&a, 32).unwrap();
        assert_eq!(r.measured.0, vec![7, 0, 0]);
        assert_eq!(euler_region_count(&a).unwrap(), 7);
        assert!(r.matches);
    }

    #[test]
    fn report_uses_match_key() {
        let r = verify_arrangement(&fixtures::single_line(2), 4).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["match"], true);
        assert_eq!(json["measured"], serde_json::json!([2, 0, 0]));
    }
}
