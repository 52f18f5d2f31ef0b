mod common;

use common::{intrinsic_properties, random_polytope, random_unimodular, unimodular_invariance};
use latvol::exact::{det_int, IntMatrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn random_polytopes_satisfy_ehrhart_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..60 {
        let d = 2 + i % 3;
        let p = random_polytope(&mut rng, d, 2);
        if let Err(msg) = intrinsic_properties(&p) {
            panic!("{msg} for {:?}", p.vertices());
        }
    }
}

#[test]
fn random_unimodular_maps_are_unimodular() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 2..=4 {
        let a = random_unimodular(&mut rng, d);
        let det = det_int(&IntMatrix::from_i64_rows(&a).unwrap()).unwrap();
        assert!(det == 1.into() || det == (-1).into());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unimodular_invariance_holds(seed in any::<u64>(), d in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_polytope(&mut rng, d, 2);
        let a = random_unimodular(&mut rng, d);
        let t: Vec<i64> = (0..d).map(|i| i as i64 - 1).collect();
        prop_assert_eq!(unimodular_invariance(&p, &a, &t), Ok(()));
    }

    #[test]
    fn hull_of_random_points_is_stable(seed in any::<u64>(), d in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_polytope(&mut rng, d, 3);
        let q = latvol::LatticePolytope::hull_from_vertices(p.vertices()).unwrap();
        prop_assert_eq!(p.vertices(), q.vertices());
        prop_assert_eq!(p.facets().len(), q.facets().len());
    }
}
