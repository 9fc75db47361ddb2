use linecomp::fixtures;
use linecomp::generate::{generate_random, Profile};
use linecomp::verifier::{
    betti_numbers, bounding_grid_box, check_resolution, clipped_subdivision, euler_region_count, rasterize_complement,
    rasterize_complement_with, verify_arrangement, RasterOptions, VerifyError,
};

fn planar_corpus() -> impl Iterator<Item = linecomp::Arrangement> {
    (0..60u64).map(|seed| {
        let profile = match seed % 3 {
            0 => Profile::Generic,
            1 => Profile::Mixed,
            _ => Profile::Pencil(3),
        };
        generate_random(2, 3 + (seed % 8) as usize, profile, seed).unwrap()
    })
}

#[test]
fn euler_count_is_one_plus_genus() {
    for a in planar_corpus() {
        let s = clipped_subdivision(&a).unwrap();
        assert_eq!(s.euler_characteristic(), 1);
        assert_eq!(s.faces, 1 + a.genus(), "{a:?}");
    }
}

/// The first `count` seeded arrangements that pass the guard at resolution `m`.
fn guarded(n: usize, m: usize, count: usize) -> Vec<linecomp::Arrangement> {
    (0..5000u64)
        .map(|seed| {
            let profile = [Profile::Mixed, Profile::Generic, Profile::Pencil(2)][(seed % 3) as usize];
            generate_random(n, 2 + (seed % 4) as usize, profile, seed).unwrap()
        })
        .filter(|a| check_resolution(a, &bounding_grid_box(a), m).is_ok())
        .take(count)
        .collect()
}

#[test]
fn planar_raster_matches_region_count() {
    let corpus = guarded(2, 32, 12);
    assert_eq!(corpus.len(), 12);
    for a in corpus {
        let c = rasterize_complement(&a, 32).unwrap();
        assert_eq!(betti_numbers(&c).0[0], euler_region_count(&a).unwrap(), "{a:?}");
    }
}

#[test]
fn spatial_raster_matches_prediction() {
    let corpus = guarded(3, 24, 6);
    assert_eq!(corpus.len(), 6);
    for a in corpus {
        let r = verify_arrangement(&a, 24).unwrap();
        assert!(r.matches, "{a:?}: {r:?}");
    }
}

#[test]
fn junction_balls_remove_corner_contact_loops() {
    // three concurrent lines; their bare tubes touch again near the crossing
    let a = generate_random(3, 3, Profile::Mixed, 1).unwrap();
    assert_eq!(a.multiplicity_vector().get(&3), Some(&1));
    let plain = RasterOptions {
        skip_junction_blocks: true,
        ..RasterOptions::default()
    };
    for m in [16, 24] {
        let bare = betti_numbers(&rasterize_complement_with(&a, m, plain).unwrap());
        assert_eq!(bare.0, vec![1, 7, 0, 0]);
        let blocked = betti_numbers(&rasterize_complement(&a, m).unwrap());
        assert_eq!(blocked.0, vec![1, 5, 0, 0]);
    }
}

#[test]
fn resolution_doubling_is_stable() {
    for a in [fixtures::crossing_pair(3), fixtures::skew_pair(), fixtures::pencil(3, 3)] {
        let coarse = verify_arrangement(&a, 12).unwrap();
        let fine = verify_arrangement(&a, 24).unwrap();
        assert_eq!(coarse.measured, fine.measured);
    }
}

#[test]
fn guard_propagates_through_verification() {
    let a = fixtures::from_ints(2, &[(&[0, 0], &[1, 0]), (&[0, 0], &[0, 1]), (&[1, 0], &[0, 1]), (&[0, 100], &[1, 0])]);
    assert!(matches!(verify_arrangement(&a, 8), Err(VerifyError::ResolutionTooCoarse { .. })));
}
