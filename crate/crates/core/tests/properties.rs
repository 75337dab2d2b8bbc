use proptest::prelude::*;

use e8cas::casimir::theta;
use e8cas::lattice::{label_inner, mu_inner, DIM, RANK};
use e8cas::orbitchar::char_orbit;
use e8cas::rat::{int, pow, rat};
use e8cas::symfunc::EvalPoint;
use e8cas::weyl::{e8_orbit_size, sigma_set_registry, sigma_set_transversal, sigma_set_transversal_with};
use e8cas::{DominantA8, DominantE8, MuVector, Rat};

fn mu_vec() -> impl Strategy<Value = MuVector> {
    prop::array::uniform9(-6i64..=6).prop_map(MuVector::from_ints)
}

fn small_weight() -> impl Strategy<Value = DominantE8> {
    prop::array::uniform8(0u32..=1).prop_map(DominantE8::new)
}

fn weight() -> impl Strategy<Value = DominantE8> {
    prop::array::uniform8(0u32..=4).prop_map(DominantE8::new)
}

fn a8_weight() -> impl Strategy<Value = DominantA8> {
    prop::array::uniform8(0i64..=2).prop_map(|steps| {
        // Partial sums from the right give a non-increasing sequence.
        let mut q = [0i64; RANK];
        let mut acc = 0;
        for i in (0..RANK).rev() {
            acc += steps[i];
            q[i] = acc;
        }
        DominantA8::from_ints(q).unwrap()
    })
}

fn point() -> impl Strategy<Value = EvalPoint> {
    prop::array::uniform8((-9i64..=9, 1i64..=5)).prop_map(|xs| EvalPoint::new(xs.map(|(n, d)| rat(n, d))))
}

fn permutation() -> impl Strategy<Value = [usize; DIM]> {
    Just((0..DIM).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| v.try_into().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mu_inner_is_symmetric_and_bilinear(u in mu_vec(), v in mu_vec(), w in mu_vec(), a in -5i64..=5) {
        prop_assert_eq!(mu_inner(&u, &v), mu_inner(&v, &u));
        let lhs = mu_inner(&u.scale(&int(a)).add(&v), &w);
        prop_assert_eq!(lhs, int(a) * mu_inner(&u, &w) + mu_inner(&v, &w));
    }

    #[test]
    fn mu_inner_ignores_the_all_ones_direction(u in mu_vec(), v in mu_vec()) {
        let shifted = u.add(&MuVector::from_ints([1; DIM]));
        prop_assert_eq!(mu_inner(&shifted, &v), mu_inner(&u, &v));
    }

    #[test]
    fn theta_sums_vanish_and_theta2_is_the_shifted_norm(w in weight()) {
        prop_assert_eq!(theta(1, &w), int(0));
        let shifted = w.r.map(|x| i64::from(x) + 1);
        prop_assert_eq!(theta(2, &w), int(label_inner(&shifted, &shifted)));
    }

    #[test]
    fn sigma_set_sizes_add_up(w in small_weight()) {
        let s = sigma_set_transversal(&w);
        prop_assert_eq!(s.orbit_size_sum(), e8_orbit_size(&w));
        let norm = mu_inner(&e8cas::lattice::e8_weight_to_mu(&w), &e8cas::lattice::e8_weight_to_mu(&w));
        for m in &s.members {
            prop_assert_eq!(mu_inner(&m.q.to_mu(), &m.q.to_mu()), norm.clone());
        }
    }

    #[test]
    fn sigma_methods_agree(w in small_weight()) {
        let reg = sigma_set_registry();
        let a = reg.get("transversal").unwrap().sigma_set(&w).unwrap();
        let b = reg.get("sumset").unwrap().sigma_set(&w).unwrap();
        prop_assert_eq!(a.q_set(), b.q_set());
    }

    #[test]
    fn transversal_does_not_depend_on_the_extra_root(w in small_weight(), perm in permutation()) {
        // Any A8 permutation of β8 is again an E8 root outside A8.
        let beta8 = [0i64, 0, 0, 0, 0, 1, 1, 1, 0];
        let seed: [i64; DIM] = std::array::from_fn(|i| beta8[perm[i]]);
        let with_seed = sigma_set_transversal_with(&w, &seed).unwrap();
        prop_assert_eq!(with_seed.q_set(), sigma_set_transversal(&w).q_set());
    }

    #[test]
    fn orbit_character_is_homogeneous(q in a8_weight(), h in point(), m in prop::sample::select(vec![2u32, 3, 8, 12]), t in (-4i64..=4, 1i64..=3)) {
        let t: Rat = rat(t.0, t.1);
        let scaled = char_orbit(m, &q, &h.scale(&t)).unwrap();
        prop_assert_eq!(scaled, pow(&t, m) * char_orbit(m, &q, &h).unwrap());
    }

    #[test]
    fn orbit_character_is_permutation_invariant(q in a8_weight(), h in point(), perm in permutation(), m in prop::sample::select(vec![2u32, 8, 12, 14])) {
        prop_assert_eq!(char_orbit(m, &q, &h.permuted(&perm)).unwrap(), char_orbit(m, &q, &h).unwrap());
    }
}
