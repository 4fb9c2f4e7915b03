//! Longer-running node-lab invariants that do not fit as inline unit tests.

use rand_core::SeedableRng;

use cicy_core::nodelab::{
    form::random_form_with_rng, independence_check, intersect_plane_curves,
};

/// Every coprime pair of random curves meets in exactly `deg f * deg g`
/// points counted with multiplicity, across a spread of degree pairs.
#[test]
fn bezout_totals_over_one_hundred_seeded_trials() {
    let p = 10007u64;
    let degree_pairs: [(u32, u32); 10] = [
        (1, 1),
        (1, 2),
        (2, 2),
        (2, 3),
        (3, 3),
        (1, 5),
        (2, 4),
        (3, 5),
        (4, 4),
        (4, 5),
    ];
    for trial in 0..100u64 {
        let (da, db) = degree_pairs[(trial % 10) as usize];
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(40_000 + trial);
        let f = random_form_with_rng(p, da, &mut rng);
        let g = random_form_with_rng(p, db, &mut rng);
        let ix = intersect_plane_curves(&f, &g, trial, 64)
            .unwrap_or_else(|e| panic!("trial {} ({},{}): {}", trial, da, db, e));
        assert_eq!(
            ix.total_multiplicity(),
            da * db,
            "trial {} degrees ({},{})",
            trial,
            da,
            db
        );
        for pt in &ix.points {
            assert!(f.eval_ext(&ix.field, &pt.coords).is_zero());
            assert!(g.eval_ext(&ix.field, &pt.coords).is_zero());
        }
    }
}

/// The two-conic configuration: four points, no three collinear,
/// independence fails exactly at the dimension count boundary.
#[test]
fn conic_intersection_independence_profile() {
    let p = 10007u64;
    for seed in 0..3u64 {
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(90_000 + seed);
        let f = random_form_with_rng(p, 2, &mut rng);
        let g = random_form_with_rng(p, 2, &mut rng);
        let ix = intersect_plane_curves(&f, &g, seed, 32).unwrap();
        assert_eq!(ix.points.len(), 4);
        // d = 1: N_1 = 3, m = 3: no three of the four points collinear
        let rep = independence_check(&ix.points, 1, &ix.field).unwrap();
        assert!(rep.passed, "seed {}: witness {:?}", seed, rep.witness);
        // d = 2: N_2 = 6 > 4 points, m = 4: rows must stay independent,
        // which holds because the four points are a complete intersection
        // imposing independent conditions on conics minus the pencil
        let rep = independence_check(&ix.points, 2, &ix.field).unwrap();
        assert!(rep.passed, "seed {}: witness {:?}", seed, rep.witness);
    }
}
