use stau_core::corpus;
use stau_core::homology::{ext1_dim, is_tau_rigid};
use stau_core::oracle::*;
use stau_core::rep::*;
use stau_core::tautilt::*;

fn distinct(mods: Vec<Representation>) -> Vec<Representation> {
    let mut out: Vec<Representation> = Vec::new();
    for m in mods {
        let mut dup = false;
        for o in &out {
            if o.dims() == m.dims() && are_isomorphic(o, &m).unwrap() {
                dup = true;
                break;
            }
        }
        if !dup {
            out.push(m);
        }
    }
    out
}

#[test]
fn quotient_classes_match_submodule_enumeration() {
    for (name, alg) in corpus::algebras().into_iter().take(6) {
        let indecs = path_uniserials(&alg);
        let poset = enumerate_stau(&alg, EnumOptions::default()).unwrap();
        let mut samples: Vec<Representation> = poset.nodes.iter().map(|n| n.pair.module()).collect();
        samples.extend(indecs.iter().map(|x| power(x, 2)));
        for m in samples.into_iter().filter(|m| m.total_dim() <= 8) {
            let by_subs = distinct(
                enumerate_submodules(&m, 1 << 12, 100_000)
                    .unwrap()
                    .iter()
                    .map(|s| m.quotient(s).unwrap().0)
                    .collect(),
            );
            let classes = quotient_classes(&m, &indecs, 1 << 20).unwrap();
            assert_eq!(classes.len(), by_subs.len(), "{name}");
            for q in &by_subs {
                assert!(classes.iter().any(|c| c.dims() == q.dims() && are_isomorphic(c, q).unwrap()), "{name}");
            }
        }
    }
}

#[test]
fn epimorphism_examples() {
    let a = corpus::example_a(2);
    let p2 = Representation::projective(&a, 0);
    let s2 = Representation::simple(&a, 0);
    let s3 = Representation::simple(&a, 1);
    assert!(has_epimorphism(&p2, &s2, 1 << 10).unwrap());
    assert!(!has_epimorphism(&p2, &s3, 1 << 10).unwrap());
    assert!(!has_epimorphism(&s2, &p2, 1 << 10).unwrap());
    let ss = direct_sum(&a, &[s2.clone(), s2.clone()]).unwrap();
    assert!(!has_epimorphism(&p2, &ss, 1 << 10).unwrap());
    assert!(has_epimorphism(&power(&p2, 2), &ss, 1 << 10).unwrap());
}

/// τ-rigidity against Ext¹ into the quotients of `M ⊕ M`.
fn lemma_b_holds(m: &Representation, indecs: &[Representation]) -> bool {
    let rigid = is_tau_rigid(m).unwrap();
    let qs = quotient_classes(&power(m, 2), indecs, 1 << 20).unwrap();
    let vanish = qs.iter().all(|q| ext1_dim(m, q).unwrap() == 0);
    rigid == vanish
}

#[test]
fn lemma_b_on_corpus_nodes() {
    for (name, alg) in corpus::algebras() {
        let indecs = path_uniserials(&alg);
        let poset = enumerate_stau(&alg, EnumOptions::default()).unwrap();
        for n in &poset.nodes {
            assert!(lemma_b_holds(&n.pair.module(), &indecs), "{name}: {}", n.label);
        }
    }
}

#[test]
fn lemma_b_on_non_rigid_sums() {
    let mut non_rigid = 0;
    for (name, alg) in corpus::algebras().into_iter().take(8) {
        let indecs = path_uniserials(&alg);
        for i in 0..indecs.len() {
            for j in i..indecs.len() {
                let m = direct_sum(&alg, &[indecs[i].clone(), indecs[j].clone()]).unwrap();
                if !is_tau_rigid(&m).unwrap() {
                    non_rigid += 1;
                }
                assert!(lemma_b_holds(&m, &indecs), "{name}");
            }
        }
    }
    assert!(non_rigid > 0);
}
