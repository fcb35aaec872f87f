use std::sync::Arc;

use proptest::prelude::*;
use stau_core::algebra::BoundQuiverAlgebra;
use stau_core::corpus;
use stau_core::homology::*;
use stau_core::linalg::Matrix;
use stau_core::oracle::{brute_force_pairs, hom_span_matches, path_uniserials};
use stau_core::rep::*;
use stau_core::tautilt::{enumerate_stau, EnumOptions};

/// A representation of `1 -> .. -> n` with the given dimensions and arrow
/// entries drawn from `seed`; path algebras impose no relations.
fn linear_rep(n: usize, p: u32, dims: &[usize], seed: &[u32]) -> (Arc<BoundQuiverAlgebra>, Representation) {
    let alg = corpus::linear_a(n, p);
    let f = alg.field();
    let mut k = 0;
    let maps = (0..n - 1)
        .map(|i| {
            let (r, c) = (dims[i + 1], dims[i]);
            let e: Vec<i64> = (0..r * c)
                .map(|_| {
                    k += 1;
                    seed[k % seed.len()] as i64
                })
                .collect();
            Matrix::from_entries(f, r, c, &e).unwrap()
        })
        .collect();
    let m = Representation::new(alg.clone(), dims.to_vec(), maps).unwrap();
    (alg, m)
}

fn rep_strategy(max_dim: usize) -> impl Strategy<Value = (usize, u32, Vec<usize>, Vec<u32>)> {
    (2usize..=4, prop::sample::select(vec![2u32, 3])).prop_flat_map(move |(n, p)| {
        (
            Just(n),
            Just(p),
            prop::collection::vec(0..=max_dim, n),
            prop::collection::vec(0..p, 1..24),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_from_projectives_and_into_injectives((n, p, dims, seed) in rep_strategy(2)) {
        let (alg, m) = linear_rep(n, p, &dims, &seed);
        for v in 0..n {
            prop_assert_eq!(hom_dim(&Representation::projective(&alg, v), &m).unwrap(), dims[v]);
            prop_assert_eq!(hom_dim(&m, &Representation::injective(&alg, v)).unwrap(), dims[v]);
            prop_assert_eq!(ext1_dim(&Representation::projective(&alg, v), &m).unwrap(), 0);
            prop_assert_eq!(ext1_dim(&m, &Representation::injective(&alg, v)).unwrap(), 0);
        }
    }

    #[test]
    fn decomposition_reassembles((n, p, dims, seed) in rep_strategy(2)) {
        let (alg, m) = linear_rep(n, p, &dims, &seed);
        let parts = decompose(&m).unwrap();
        let mut total = vec![0; n];
        let mut pieces = Vec::new();
        for (s, mult) in &parts {
            prop_assert!(is_indecomposable(s).unwrap());
            for v in 0..n {
                total[v] += mult * s.dims()[v];
            }
            for _ in 0..*mult {
                pieces.push(s.clone());
            }
        }
        prop_assert_eq!(&total, &dims);
        prop_assert!(are_isomorphic(&direct_sum(&alg, &pieces).unwrap(), &m).unwrap());
    }

    #[test]
    fn translates_invert_on_indecomposables((n, p, dims, seed) in rep_strategy(2)) {
        let (_, m) = linear_rep(n, p, &dims, &seed);
        for (x, _) in decompose(&m).unwrap() {
            let t = tau(&x).unwrap().module;
            if is_projective(&x) {
                prop_assert!(t.is_zero());
            } else {
                prop_assert!(are_isomorphic(&tau_inv(&t).unwrap(), &x).unwrap());
            }
        }
    }

    #[test]
    fn hereditary_auslander_reiten_formula((n, p, dims, seed) in rep_strategy(1), pick in 0usize..10) {
        // over a path algebra Ext¹(M, N) is dual to Hom(N, τM)
        let (alg, m) = linear_rep(n, p, &dims, &seed);
        let ind = path_uniserials(&alg);
        let x = &ind[pick % ind.len()];
        let tm = tau(&m).unwrap().module;
        let tx = tau(x).unwrap().module;
        prop_assert_eq!(ext1_dim(&m, x).unwrap(), hom_dim(x, &tm).unwrap());
        prop_assert_eq!(ext1_dim(x, &m).unwrap(), hom_dim(&m, &tx).unwrap());
    }

    #[test]
    fn generated_torsion((n, p, dims, seed) in rep_strategy(2)) {
        let (_, m) = linear_rep(n, p, &dims, &seed);
        prop_assert!(in_fac(&m, &m).unwrap());
        let l = layers(&m).unwrap();
        prop_assert!(in_fac(&m, &l.top).unwrap());
        let (t, incl) = trace(&m, &m).unwrap();
        prop_assert_eq!(t.dims(), m.dims());
        prop_assert!(incl.is_isomorphism());
    }

    #[test]
    fn hom_basis_spans_every_intertwiner((n, dims, seed) in (2usize..=3).prop_flat_map(|n| (
        Just(n), prop::collection::vec(0usize..=1, n), prop::collection::vec(0u32..2, 1..12)))) {
        let (alg, m) = linear_rep(n, 2, &dims, &seed);
        for x in path_uniserials(&alg) {
            prop_assert!(hom_span_matches(&m, &x).unwrap());
            prop_assert!(hom_span_matches(&x, &m).unwrap());
        }
    }
}

#[test]
fn enumeration_matches_brute_force_pairs() {
    for (name, alg) in corpus::algebras() {
        let ind = path_uniserials(&alg);
        if ind.len() >= 24 {
            continue;
        }
        let poset = enumerate_stau(&alg, EnumOptions::default()).unwrap();
        let brute = brute_force_pairs(&alg, &ind).unwrap();
        assert_eq!(poset.nodes.len(), brute.len(), "{name}");
    }
}
