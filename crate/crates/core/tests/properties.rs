use matroid_gwp::betti::{
    betti_sigma, betti_support_shift_check, graded_betti_table, homology_dims_oracle,
    multigraded_betti,
};
use matroid_gwp::sample::elongated_uniform;
use matroid_gwp::weight::{
    binomial, enumerator_from_gwp, enumerator_via_complements, gwp_elongation_shift,
    higher_weights_by_nullity, higher_weights_from_betti, higher_weights_from_gwp,
    uniform_gwp_closed_form,
};
use matroid_gwp::*;
use proptest::prelude::*;

fn vector_matroid() -> impl Strategy<Value = Matroid> {
    (prop_oneof![Just(2u32), Just(5u32)], 1usize..=8)
        .prop_flat_map(|(p, n)| (Just(p), Just(n), 0..=n))
        .prop_flat_map(|(p, n, r)| {
            (
                Just(p),
                Just(n),
                Just(r),
                prop::collection::vec(0..p, r * n),
            )
        })
        .prop_map(|(p, n, r, data)| {
            FieldMatrix::new(FiniteField::prime(p).unwrap(), r, n, data)
                .unwrap()
                .vector_matroid()
                .unwrap()
        })
}

fn any_matroid() -> impl Strategy<Value = Matroid> {
    let uniform = (1usize..=8)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, r)| (Just(n), Just(r), 0..=n - r))
        .prop_map(|(n, r, l)| elongated_uniform(r, n, l));
    prop_oneof![4 => vector_matroid(), 1 => uniform]
}

fn subsets(n: usize) -> impl Iterator<Item = GroundSubset> {
    GroundSubset::full(n).subsets()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn vector_matroids_are_valid(m in vector_matroid()) {
        let again = Matroid::from_bases(m.ground_size(), m.bases().iter().copied());
        prop_assert_eq!(again, Ok(m));
    }

    #[test]
    fn dual_rank_identity(m in any_matroid()) {
        let n = m.ground_size();
        let d = m.dual();
        prop_assert_eq!(d.rank(), m.corank());
        prop_assert_eq!(&d.dual(), &m);
        for s in subsets(n) {
            let rhs = s.len() + m.rank_fast(s.complement(n)) - m.rank();
            prop_assert_eq!(d.rank_fast(s), rhs);
        }
    }

    #[test]
    fn elongation_rank_and_nullity(m in any_matroid()) {
        for i in 0..=m.corank() {
            let e = m.elongate(i).unwrap();
            prop_assert_eq!(e.rank(), m.rank() + i);
            for s in subsets(m.ground_size()) {
                let nul = m.nullity_fast(s);
                let rank = if nul > i { m.rank_fast(s) + i } else { s.len() };
                prop_assert_eq!(e.rank_fast(s), rank);
                prop_assert_eq!(e.nullity_fast(s), nul.saturating_sub(i));
            }
        }
        prop_assert!(m.elongate(m.corank() + 1).is_err());
    }

    #[test]
    fn restriction_commutes_with_elongation(m in any_matroid()) {
        for i in 0..=m.corank() {
            let e = m.elongate(i).unwrap();
            for s in subsets(m.ground_size()) {
                let lhs = e.restrict(s).unwrap();
                let inner = m.restrict(s).unwrap();
                let rhs = inner.matroid.elongate(i.min(m.nullity_fast(s))).unwrap();
                prop_assert_eq!(&lhs.elements, &inner.elements);
                prop_assert_eq!(lhs.matroid.independent_sets(), rhs.independent_sets());
            }
        }
    }

    #[test]
    fn rank_is_monotone_and_submodular(m in any_matroid()) {
        let n = m.ground_size().min(7);
        for a in subsets(n) {
            for b in subsets(n) {
                let (ra, rb) = (m.rank_fast(a), m.rank_fast(b));
                prop_assert!(m.rank_fast(a.union(b)) + m.rank_fast(a.intersection(b)) <= ra + rb);
                if a.is_subset_of(b) {
                    prop_assert!(ra <= rb);
                }
            }
        }
    }

    #[test]
    fn circuits_determine_independence(m in any_matroid()) {
        let circuits = m.circuits();
        for s in subsets(m.ground_size()) {
            let circuit_free = circuits.iter().all(|c| !c.is_subset_of(s));
            prop_assert_eq!(m.is_independent(s), circuit_free);
        }
    }

    #[test]
    fn hochster_oracle_matches_fast_route(m in vector_matroid()) {
        for s in subsets(m.ground_size()) {
            let h = homology_dims_oracle(&m.restrict(s).unwrap().matroid).unwrap();
            for i in 1..=s.len() {
                let expected = h.get(s.len() as isize - i as isize - 1);
                prop_assert_eq!(betti_sigma(&m, i - 1, s), expected, "σ={} i={}", s, i);
            }
        }
    }

    #[test]
    fn alternating_sum_identity(m in any_matroid()) {
        for s in subsets(m.ground_size()) {
            let nul = m.nullity_fast(s);
            if nul == 0 {
                continue;
            }
            let total: i64 = (0..=s.len())
                .map(|i| if i % 2 == 0 { 1 } else { -1 } * betti_sigma(&m, i, s) as i64)
                .sum();
            let sign = if (nul - 1) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(total, sign * betti_sigma(&m, nul - 1, s) as i64);
        }
    }

    #[test]
    fn betti_support_is_minimal_nullity_sets(m in any_matroid()) {
        let support: Vec<(GroundSubset, usize)> =
            multigraded_betti(&m, 0).into_iter().map(|(s, i, _)| (s, i)).collect();
        for s in subsets(m.ground_size()) {
            let nul = m.nullity_fast(s);
            let minimal = nul > 0 && s.labels().all(|e| m.nullity_fast(s.remove(e)) < nul);
            let found: Vec<usize> = support.iter().filter(|(t, _)| *t == s).map(|&(_, i)| i).collect();
            if minimal {
                prop_assert_eq!(found, vec![nul - 1]);
            } else {
                prop_assert!(found.is_empty());
            }
        }
    }

    #[test]
    fn table_length(m in any_matroid()) {
        let n = m.ground_size();
        for l in 0..=m.corank() {
            let table = graded_betti_table(&m, l as i64);
            let has_circuit = l < m.corank();
            let expected = has_circuit.then(|| n - (m.rank() + l) - 1);
            prop_assert_eq!(table.max_index(), expected);
        }
        prop_assert!(betti_support_shift_check(&m));
    }

    #[test]
    fn three_gwp_routes_agree(m in any_matroid()) {
        let direct = gwp_direct(&m);
        prop_assert_eq!(&gwp_complement_form(&m), &direct);
        prop_assert_eq!(&gwp_from_betti(&betti_tables(&m)).unwrap(), &direct);
        prop_assert_eq!(&gwp_naive(&m).unwrap(), &direct);
        prop_assert_eq!(enumerator_via_complements(&m), enumerator_from_gwp(&direct));
    }

    #[test]
    fn degree_bound(m in any_matroid()) {
        let n = m.ground_size();
        let corank = m.corank();
        let g = gwp_direct(&m);
        prop_assert!(g.iter().all(|p| p.degree().is_none_or(|d| d <= corank)));
        let has_coloop = (1..=n).any(|e| m.bases().iter().all(|b| b.contains(e)));
        if has_coloop {
            prop_assert!(g[n].is_zero());
        } else {
            prop_assert_eq!(g[n].degree(), Some(corank));
            prop_assert_eq!(g[n].coeff(corank), 1);
        }
    }

    #[test]
    fn elongation_coefficient_shift(m in any_matroid()) {
        for l in 0..m.corank() {
            let lo = gwp_direct(&m.elongate(l).unwrap());
            let hi = gwp_direct(&m.elongate(l + 1).unwrap());
            for (a, b) in lo.iter().zip(&hi) {
                prop_assert_eq!(&gwp_elongation_shift(a), b);
            }
        }
    }

    #[test]
    fn hierarchies_agree_and_shift(m in any_matroid()) {
        let by_nullity = higher_weights_by_nullity(&m);
        prop_assert_eq!(by_nullity.len(), m.corank());
        prop_assert!(by_nullity.is_strictly_increasing());
        prop_assert_eq!(&higher_weights_from_gwp(&gwp_direct(&m)).unwrap(), &by_nullity);
        prop_assert_eq!(&higher_weights_from_betti(&betti_tables(&m)).unwrap(), &by_nullity);
        for l in 0..m.corank() {
            let lo = higher_weights_by_nullity(&m.elongate(l).unwrap());
            let hi = higher_weights_by_nullity(&m.elongate(l + 1).unwrap());
            for i in 1..=hi.len() {
                prop_assert_eq!(hi.get(i), lo.get(i + 1));
            }
        }
    }

    #[test]
    fn tutte_enumerator_round_trips(m in any_matroid()) {
        let (n, k) = (m.ground_size(), m.rank());
        let t = tutte(&m);
        let w = enumerator(&m);
        prop_assert_eq!(&tutte_from_enumerator(&w, n, k).unwrap(), &t);
        prop_assert_eq!(&enumerator_from_tutte(&t, n, k).unwrap(), &w);
    }

    #[test]
    fn tutte_evaluations_and_duality(m in any_matroid()) {
        let t = tutte(&m);
        prop_assert_eq!(t.eval([1, 1]), m.bases().len() as i128);
        prop_assert_eq!(t.eval([2, 1]), m.independent_sets().len() as i128);
        prop_assert_eq!(t.eval([2, 2]), 1i128 << m.ground_size());
        prop_assert_eq!(tutte(&m.dual()), t.swap_variables());
    }
}

#[test]
fn uniform_betti_closed_form() {
    for n in 1..=8 {
        for r in 0..=n {
            let table = graded_betti_table(&Matroid::uniform(r, n).unwrap(), 0);
            for j in 0..=n {
                for i in 0..=n {
                    let expected = if j > r && i == j - r - 1 {
                        (binomial(j - 1, r) * binomial(n, j)) as u64
                    } else {
                        0
                    };
                    assert_eq!(table.get(i, j), expected, "U({r},{n}) i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn mds_closed_form() {
    for n in 1..=10 {
        for r in 0..=n {
            let u = Matroid::uniform(r, n).unwrap();
            assert_eq!(gwp_direct(&u), uniform_gwp_closed_form(r, n), "U({r},{n})");
        }
    }
}

#[test]
fn column_ranks_of_gf5_7_4_matrix() {
    let h = fixtures::gf5_7_4_parity_check();
    let m = fixtures::gf5_7_4();
    for s in subsets(7) {
        let cols: Vec<usize> = s.labels().map(|e| e - 1).collect();
        assert_eq!(h.select_columns(&cols).rank(), m.rank_fast(s));
        assert_eq!(h.column_rank(s), m.rank_fast(s));
    }
}

#[test]
fn transpose_preserves_rank() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(11);
    for (p, m) in [(2, 1), (5, 1), (2, 2), (5, 2), (2, 3)] {
        let field = FiniteField::new(p, m).unwrap();
        for _ in 0..40 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let a = matroid_gwp::sample::random_matrix(&mut rng, &field, rows, cols);
            assert_eq!(a.rank(), a.transpose().rank());
        }
    }
}

fn field_and_elements() -> impl Strategy<Value = (FiniteField, u32, u32, u32)> {
    prop_oneof![Just((5u32, 1u32)), Just((2, 2)), Just((5, 2)), Just((2, 3))].prop_flat_map(
        |(p, m)| {
            let f = FiniteField::new(p, m).unwrap();
            let q = f.order();
            (Just(f), 0..q, 0..q, 0..q)
        },
    )
}

proptest! {
    #[test]
    fn field_axioms((f, a, b, c) in field_and_elements()) {
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        match f.inv(a) {
            Some(i) => prop_assert_eq!(f.mul(a, i), 1),
            None => prop_assert_eq!(a, 0),
        }
    }
}
