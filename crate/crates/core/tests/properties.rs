mod common;

use proptest::prelude::*;

use lieslice::algebra::random::random_pair;
use lieslice::algebra::{catalog, catalog_names, QuotientMap};
use lieslice::coadjoint::{index, kirillov_form, rep_orbit_coindex};
use lieslice::linalg::{kernel, Matrix, Rat, Subspace};
use lieslice::reduction::{
    cocycle_class_equal, cocycle_gamma, delta_natural, mu_self_membership, natural_kernel, reduced_algebra,
    verify_index_formula,
};
use lieslice::sampling::{draws, stream};
use lieslice::slice::{analyze_slice, extend};

fn small_rats(len: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-4i64..=4, 1i64..=3), len).prop_map(|v| v.into_iter().map(|(p, q)| common::rat(p, q)).collect())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small_rats(cols), rows).prop_map(move |r| Matrix::from_rows(cols, r).unwrap())
}

fn catalog_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(catalog_names().to_vec())
}

fn to_i128(v: &[Rat]) -> Option<Vec<i128>> {
    v.iter().map(|r| r.is_integer().then(|| i128::try_from(r.to_integer()).ok()).flatten()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity_and_oracle_rank(m in matrix(3, 4)) {
        let k = kernel(&m);
        prop_assert_eq!(m.rank() + k.dim(), 4);
        for v in k.basis_vectors() {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| *x == Rat::default()));
        }
        // integer matrices: compare with fraction-free elimination
        let ints: Option<Vec<Vec<i128>>> = m.row_vecs().iter().map(|r| to_i128(r)).collect();
        if let Some(ints) = ints {
            prop_assert_eq!(m.rank(), common::rank(ints));
        }
    }

    #[test]
    fn subspace_lattice(a in matrix(2, 4), b in matrix(2, 4)) {
        let (a, b) = (Subspace::row_space(&a), Subspace::row_space(&b));
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(meet.is_subspace_of(&a).unwrap() && meet.is_subspace_of(&b).unwrap());
        prop_assert_eq!(a.annihilator().annihilator(), a.clone());
        let c = a.complement_in(&sum).unwrap();
        prop_assert_eq!(c.dim() + a.dim(), sum.dim());
        prop_assert!(c.intersect(&a).unwrap().is_zero());
    }

    #[test]
    fn kirillov_forms_are_skew_with_even_rank(name in catalog_name(), seed in 0u64..1000) {
        let g = catalog(name).unwrap().algebra;
        let sigma = draws(seed, "prop-kirillov", 1, 5, g.dim()).last().unwrap();
        let b = kirillov_form(&g, &sigma).unwrap();
        prop_assert!(b.is_skew());
        prop_assert_eq!(b.rank() % 2, 0);
    }

    #[test]
    fn self_membership_sides_agree(name in catalog_name(), seed in 0u64..1000, integral in any::<bool>()) {
        let g = catalog(name).unwrap().algebra;
        // small bounds give many non-regular covectors
        let bound = if integral { 1 } else { 5 };
        for mu in draws(seed, "prop-mu", 2, bound, g.dim()) {
            let (lhs, rhs) = mu_self_membership(&g, &mu).unwrap();
            prop_assert_eq!(lhs, rhs, "{} at {:?}", name, mu);
        }
    }

    #[test]
    fn pullback_identity(name in catalog_name(), beta_seed in 0u64..1000) {
        let e = catalog(name).unwrap();
        for (_, n) in &e.ideals {
            let q = QuotientMap::new(&e.algebra, n).unwrap();
            for beta in draws(beta_seed, "prop-pullback", 1, 4, q.quotient().dim()) {
                prop_assert!(q.pullback_identity_holds(&beta).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn slice_identities_on_random_pairs(seed in 0u64..10_000, k in 0u64..4) {
        let p = random_pair(seed, k).unwrap();
        for sigma in draws(seed, "prop-slice", 2, 2, p.algebra.dim()) {
            let r = analyze_slice(&p.algebra, &p.ideal, &sigma).unwrap();
            prop_assert!(r.all_pass(), "{}: {:?} {:?}", p.recipe, r.verdicts, r.point_conditions);
            // the slice direction annihilates n + g_nu
            prop_assert!(r.contains(&sigma).unwrap());
        }
    }

    #[test]
    fn natural_kernel_has_codimension_at_most_one(seed in 0u64..10_000, k in 0u64..4) {
        let p = random_pair(seed, k).unwrap();
        for nu in draws(seed, "prop-natural", 2, 3, p.ideal.dim()) {
            let red = reduced_algebra(&p.algebra, &p.ideal, &nu).unwrap();
            let nat = natural_kernel(&p.algebra, &p.ideal, &nu).unwrap();
            prop_assert_eq!(&nat, &red.n_natural);
            prop_assert!(red.n_nu.dim() - nat.dim() <= 1);
        }
    }

    #[test]
    fn index_formula_on_random_pairs(seed in 0u64..10_000, k in 0u64..8) {
        let p = random_pair(seed, k).unwrap();
        let r = verify_index_formula(&p.algebra, &p.ideal, seed, 16, 7)
            .or_else(|_| verify_index_formula(&p.algebra, &p.ideal, seed, 16, 13));
        let r = r.unwrap();
        prop_assert!(r.formula.holds, "{}: {:?}", p.recipe, r.formula);
        prop_assert!(r.regular_correspondence);
    }

    #[test]
    fn cocycle_class_is_independent_of_extension(seed in 0u64..10_000, k in 0u64..4) {
        let p = random_pair(seed, k).unwrap();
        let Some(nu) = draws(seed, "prop-cocycle", 4, 5, p.ideal.dim()).next() else { return Ok(()) };
        let red = reduced_algebra(&p.algebra, &p.ideal, &nu).unwrap();
        let base = p.ideal.lift(&nu).unwrap();
        let perp = p.ideal.space().annihilator();
        let s1 = extend(&base, &perp, &mut stream(seed, "prop-tau", 0, 5), 5);
        let s2 = extend(&base, &perp, &mut stream(seed, "prop-tau", 1, 5), 5);
        let c1 = cocycle_gamma(&red, &p.ideal, &red.tau_of(&s1).unwrap()).unwrap();
        let c2 = cocycle_gamma(&red, &p.ideal, &red.tau_of(&s2).unwrap()).unwrap();
        let (equal, lambda) = cocycle_class_equal(c1.quotient.quotient(), &c1.gamma, &c2.gamma).unwrap();
        prop_assert!(equal && lambda.is_some());
    }
}

#[test]
fn delta_is_zero_for_frobenius_and_one_for_abelian() {
    for name in catalog_names() {
        let g = catalog(name).unwrap().algebra;
        let d = delta_natural(&g, 0, 16, 7).unwrap().delta;
        if index(&g, 0, 16, 7).unwrap().algebra_index == 0 {
            assert_eq!(d, 0, "{name}");
        }
        if g.is_abelian() {
            assert_eq!(d, 1, "{name}");
        }
    }
    assert_eq!(delta_natural(&catalog("sl2").unwrap().algebra, 0, 16, 7).unwrap().delta, 1);
}

#[test]
fn sampled_indices_match_the_grid_oracle() {
    for name in catalog_names() {
        let e = catalog(name).unwrap();
        if e.algebra.dim() > 4 {
            continue;
        }
        assert_eq!(index(&e.algebra, 5, 16, 7).unwrap().algebra_index, common::grid_index(&e.algebra, 3), "{name}");
        for (ideal, n) in &e.ideals {
            let co = rep_orbit_coindex(&e.algebra, n, 5, 16, 7).unwrap().coindex;
            assert_eq!(co, common::grid_coindex(&e.algebra, n.space(), 2), "{name}/{ideal}");
        }
    }
}
