//! Small algebras and extension instances used by tests, benches and the
//! command-line verifier.

use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Quiver, RelationSpec};
use crate::linalg::FieldPrime;
use crate::rep::{are_isomorphic, Representation};

fn build(vertices: &[String], arrows: &[(String, String, String)], rels: Vec<RelationSpec>, p: u32) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::new(vertices.iter().cloned(), arrows.iter().cloned()).expect("valid corpus quiver");
    let f = FieldPrime::new(p).expect("prime");
    Arc::new(BoundQuiverAlgebra::build(q, rels, f).expect("admissible corpus algebra"))
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// The path algebra of `2 -> 3` with arrow `beta`.
pub fn example_a(p: u32) -> Arc<BoundQuiverAlgebra> {
    build(
        &["2".into(), "3".into()],
        &[("beta".into(), "2".into(), "3".into())],
        vec![],
        p,
    )
}

/// `1 -> 2 -> 3` with arrows `alpha`, `beta` and `alpha*beta = 0`.
pub fn example_b(p: u32) -> Arc<BoundQuiverAlgebra> {
    build(
        &names(3),
        &[
            ("alpha".into(), "1".into(), "2".into()),
            ("beta".into(), "2".into(), "3".into()),
        ],
        vec![RelationSpec::monomial(&["alpha", "beta"])],
        p,
    )
}

fn linear_arrows(n: usize) -> Vec<(String, String, String)> {
    (1..n).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string())).collect()
}

/// Path algebra of `1 -> 2 -> .. -> n`.
pub fn linear_a(n: usize, p: u32) -> Arc<BoundQuiverAlgebra> {
    build(&names(n), &linear_arrows(n), vec![], p)
}

/// `1 -> .. -> n` modulo all paths of length two.
pub fn linear_rad2(n: usize, p: u32) -> Arc<BoundQuiverAlgebra> {
    let rels = (1..n.saturating_sub(1))
        .map(|i| RelationSpec::monomial(&[format!("a{i}"), format!("a{}", i + 1)]))
        .collect();
    build(&names(n), &linear_arrows(n), rels, p)
}

/// The oriented cycle on `n` vertices modulo all paths of length two.
pub fn cyclic_rad2(n: usize, p: u32) -> Arc<BoundQuiverAlgebra> {
    let arrows: Vec<_> = (1..=n)
        .map(|i| (format!("a{i}"), i.to_string(), (i % n + 1).to_string()))
        .collect();
    let rels = (1..=n)
        .map(|i| RelationSpec::monomial(&[format!("a{i}"), format!("a{}", i % n + 1)]))
        .collect();
    build(&names(n), &arrows, rels, p)
}

/// Named algebras of the corpus over `F_2`.
pub fn algebras() -> Vec<(String, Arc<BoundQuiverAlgebra>)> {
    let mut out = vec![("example-a".to_string(), example_a(2))];
    for n in 1..=4 {
        out.push((format!("linear-a{n}"), linear_a(n, 2)));
    }
    for n in 3..=4 {
        out.push((format!("linear-rad2-{n}"), linear_rad2(n, 2)));
    }
    for n in 1..=4 {
        out.push((format!("cyclic-rad2-{n}"), cyclic_rad2(n, 2)));
    }
    out
}

/// The uniserial module with top at `start` following the given arrows.
pub fn uniserial(alg: &Arc<BoundQuiverAlgebra>, start: usize, arrows: &[usize]) -> Representation {
    let f = alg.field();
    let q = alg.quiver();
    let mut dims = vec![0; alg.num_vertices()];
    // vertex sequence and the position of each layer in its vertex space
    let mut pos = Vec::new();
    let mut v = start;
    pos.push((v, dims[v]));
    dims[v] += 1;
    for &a in arrows {
        assert_eq!(q.arrows()[a].source, v, "arrows must form a path");
        v = q.arrows()[a].target;
        pos.push((v, dims[v]));
        dims[v] += 1;
    }
    let mut maps: Vec<_> = q
        .arrows()
        .iter()
        .map(|a| crate::linalg::Matrix::zeros(f, dims[a.target], dims[a.source]))
        .collect();
    for (k, &a) in arrows.iter().enumerate() {
        let (s, sp) = pos[k];
        let (t, tp) = pos[k + 1];
        debug_assert_eq!(q.arrows()[a].source, s);
        debug_assert_eq!(q.arrows()[a].target, t);
        maps[a].set(tp, sp, 1);
    }
    Representation::new(alg.clone(), dims, maps).expect("uniserial respects the relations")
}

/// One extension instance `A[X]`.
#[derive(Clone, Debug)]
pub struct ExtensionCase {
    pub name: String,
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub module: Representation,
}

/// Extensions of every corpus algebra by simples, indecomposable projectives
/// and non-projective uniserials, up to isomorphism of `X`.
pub fn extension_cases() -> Vec<ExtensionCase> {
    let mut out = Vec::new();
    for (name, alg) in algebras() {
        let n = alg.num_vertices();
        let mut mods: Vec<(String, Representation)> = Vec::new();
        for v in 0..n {
            let vn = &alg.quiver().vertices()[v];
            mods.push((format!("S({vn})"), Representation::simple(&alg, v)));
            mods.push((format!("P({vn})"), Representation::projective(&alg, v)));
        }
        // uniserials along paths that survive in the algebra
        for path in alg.basis() {
            if path.len() < 1 {
                continue;
            }
            let m = uniserial(&alg, path.source, &path.arrows);
            let label = alg.path_name(path);
            mods.push((format!("U({label})"), m));
        }
        let mut kept: Vec<(String, Representation)> = Vec::new();
        for (label, m) in mods {
            let dup = kept
                .iter()
                .any(|(_, k)| are_isomorphic(k, &m).expect("small modules"));
            if !dup {
                kept.push((label, m));
            }
        }
        for (label, m) in kept {
            out.push(ExtensionCase {
                name: format!("{name}[{label}]"),
                algebra: alg.clone(),
                module: m,
            });
        }
    }
    out
}

/// `2 -> 3` extended by the simple at `2`.
pub fn a2_simple_case() -> ExtensionCase {
    let a = example_a(2);
    ExtensionCase {
        name: "example-a[S(2)]".into(),
        module: Representation::simple(&a, 0),
        algebra: a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_dimensions() {
        assert_eq!(example_a(2).dim(), 3);
        assert_eq!(example_b(2).dim(), 5);
        assert_eq!(linear_a(4, 2).dim(), 10);
        assert_eq!(linear_rad2(4, 2).dim(), 7);
        assert_eq!(cyclic_rad2(1, 2).dim(), 2);
        assert_eq!(cyclic_rad2(4, 2).dim(), 8);
    }

    #[test]
    fn uniserials_are_indecomposable() {
        let a = linear_a(3, 2);
        let m = uniserial(&a, 0, &[0, 1]);
        assert_eq!(m, Representation::projective(&a, 0));
        assert_eq!(m.loewy_word().unwrap(), "1/2/3");
    }
}
