//! One-point extensions `B = A[X]` and their module categories.
//!
//! The new vertex comes first in `B`, followed by the vertices of `A` in
//! order; new arrows come first, followed by the arrows of `A`. A `B`-module
//! is a triple `(M, n, f)` with `M` an `A`-module, `n` the dimension at the
//! new vertex and `f: X^n -> M`.

use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Quiver, RelationSpec};
use crate::error::{Error, Result};
use crate::homology::{min_presentation, ProjPresentation};
use crate::linalg::Matrix;
use crate::rep::{
    direct_sum, hom_dim, in_fac, indecomposables_isomorphic, power, trace, ModuleMap,
    Representation,
};
use crate::tautilt::{enumerate_stau, is_semibrick, is_stau_pair, pt_lookup, EnumOptions, STPair, STPoset};

#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub base: Arc<BoundQuiverAlgebra>,
    pub module: Representation,
    pub vertex_name: String,
    /// Arrow indices in `B` of the new arrows, one per cover summand of `X`.
    pub new_arrows: Vec<usize>,
    pub presentation: ProjPresentation,
}

impl ExtensionResult {
    /// Index of the new vertex in `B`.
    pub fn vertex(&self) -> usize {
        0
    }

    /// Index in `B` of a vertex of `A`.
    pub fn embed_vertex(&self, v: usize) -> usize {
        v + 1
    }

    pub fn embed_arrow(&self, a: usize) -> usize {
        a + self.new_arrows.len()
    }

    /// Whether the new vertex is isolated (`X = 0`).
    pub fn is_disconnected(&self) -> bool {
        self.new_arrows.is_empty()
    }

    /// An `A`-module viewed over `B`.
    pub fn lift(&self, m: &Representation) -> Result<Representation> {
        let f = self.algebra.field();
        let mut dims = vec![0];
        dims.extend_from_slice(m.dims());
        let mut maps: Vec<Matrix> = self
            .presentation
            .p0_vertices
            .iter()
            .map(|&i| Matrix::zeros(f, m.dims()[i], 0))
            .collect();
        maps.extend(m.arrow_maps().iter().cloned());
        Representation::new(self.algebra.clone(), dims, maps)
    }

    /// Restriction of a `B`-module to the vertices of `A`.
    pub fn restrict(&self, n: &Representation) -> Representation {
        let dims = n.dims()[1..].to_vec();
        let maps = (0..self.base.quiver().arrows().len())
            .map(|a| n.arrow_map(self.embed_arrow(a)).clone())
            .collect();
        Representation::new(self.base.clone(), dims, maps).expect("restriction respects the relations of A")
    }

    /// `S_a`.
    pub fn simple_new(&self) -> Representation {
        Representation::simple(&self.algebra, 0)
    }

    /// `P_a`.
    pub fn projective_new(&self) -> Representation {
        Representation::projective(&self.algebra, 0)
    }

    /// Vertex names of `B` for a list of `A` vertices.
    pub fn lift_vertices(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.embed_vertex(v)).collect()
    }
}

fn fresh_arrow_names(existing: &[String], count: usize) -> Vec<String> {
    let mut base = "alpha".to_string();
    loop {
        let names: Vec<String> = if count == 1 {
            vec![base.clone()]
        } else {
            (1..=count).map(|k| format!("{base}{k}")).collect()
        };
        if names.iter().all(|n| !existing.contains(n)) {
            return names;
        }
        base.push('\'');
    }
}

/// Builds `A[X]`: a new vertex with one arrow to `i_k` for each summand
/// `P_{i_k}` of the projective cover of `X`, and one relation
/// `Σ_k alpha_k d(k, l)` per column of the minimal presentation of `X`.
pub fn extend(alg: &Arc<BoundQuiverAlgebra>, x: &Representation, vertex_name: &str) -> Result<ExtensionResult> {
    if *x.algebra().as_ref() != **alg {
        return Err(Error::MixedAlgebras);
    }
    let q = alg.quiver();
    if q.vertices().iter().any(|v| v == vertex_name) {
        return Err(Error::InvalidQuiver(format!("vertex `{vertex_name}` already exists")));
    }
    let pres = min_presentation(x)?;
    let existing: Vec<String> = q.arrows().iter().map(|a| a.name.clone()).collect();
    let new_names = fresh_arrow_names(&existing, pres.p0_vertices.len());

    let mut vertices = vec![vertex_name.to_string()];
    vertices.extend(q.vertices().iter().cloned());
    let mut arrows: Vec<(String, String, String)> = new_names
        .iter()
        .zip(&pres.p0_vertices)
        .map(|(n, &i)| (n.clone(), vertex_name.to_string(), q.vertices()[i].clone()))
        .collect();
    arrows.extend(
        q.arrows()
            .iter()
            .map(|a| (a.name.clone(), q.vertices()[a.source].clone(), q.vertices()[a.target].clone())),
    );
    let quiver = Quiver::new(vertices, arrows)?;

    let mut relations: Vec<RelationSpec> = alg.relations().to_vec();
    for l in 0..pres.p1_vertices.len() {
        let mut terms = Vec::new();
        for (k, name) in new_names.iter().enumerate() {
            for (b, c) in pres.d[k][l].support() {
                let mut path = vec![name.clone()];
                path.extend(alg.basis()[b].arrows.iter().map(|&a| q.arrows()[a].name.clone()));
                terms.push((c as i64, path));
            }
        }
        relations.push(RelationSpec::new(terms));
    }
    let b = BoundQuiverAlgebra::build(quiver, relations, alg.field())?;
    let new_arrows = (0..new_names.len()).collect();
    Ok(ExtensionResult {
        algebra: Arc::new(b),
        base: alg.clone(),
        module: x.clone(),
        vertex_name: vertex_name.to_string(),
        new_arrows,
        presentation: pres,
    })
}

/// A `B`-module as `(M, n, f: X^n -> M)`.
#[derive(Clone, Debug)]
pub struct TripleModule {
    pub m: Representation,
    pub n: usize,
    pub f: ModuleMap,
}

/// Reads off `(M, n, f)`: `f` sends the `k`-th top generator of the `t`-th
/// copy of `X` to the image of `e_t` under the `k`-th new arrow.
pub fn to_triple(ext: &ExtensionResult, module: &Representation) -> Result<TripleModule> {
    let m = ext.restrict(module);
    let n = module.dims()[0];
    let fld = module.field();
    let x = &ext.module;
    let epi = &ext.presentation.epi;
    let xn = power(x, n);
    // right inverses of the cover X <- P0, vertex by vertex
    let sections: Vec<Matrix> = epi
        .components()
        .iter()
        .map(|c| {
            c.solve_right(&Matrix::identity(fld, c.rows()))
                .unwrap()
                .expect("cover is surjective")
        })
        .collect();
    let mut comps: Vec<Matrix> = (0..m.dims().len()).map(|v| Matrix::zeros(fld, m.dims()[v], 0)).collect();
    for t in 0..n {
        let mut e = vec![0u32; n];
        e[t] = 1;
        let et = Matrix::column(fld, &e);
        let gens: Vec<(usize, Vec<u32>)> = ext
            .presentation
            .p0_vertices
            .iter()
            .zip(&ext.new_arrows)
            .map(|(&i, &a)| (i, module.arrow_map(a).dot(&et).col(0)))
            .collect();
        let g = crate::homology::generator_map(&m, &gens);
        for (v, comp) in comps.iter_mut().enumerate() {
            let ft = g.component(v).dot(&sections[v]);
            *comp = comp.hstack(&ft).unwrap();
        }
    }
    let f = ModuleMap::new(xn, m.clone(), comps)?;
    Ok(TripleModule { m, n, f })
}

pub fn from_triple(ext: &ExtensionResult, t: &TripleModule) -> Result<Representation> {
    let fld = ext.algebra.field();
    let x = &ext.module;
    let mut dims = vec![t.n];
    dims.extend_from_slice(t.m.dims());
    let mut maps = Vec::new();
    for (k, &i) in ext.presentation.p0_vertices.iter().enumerate() {
        let gen = &ext.presentation.generators[k].1;
        let mut cols = Matrix::zeros(fld, t.m.dims()[i], 0);
        for copy in 0..t.n {
            // generator k inside the `copy`-th summand of X^n
            let mut v = vec![0u32; x.dims()[i] * t.n];
            v[copy * x.dims()[i]..(copy + 1) * x.dims()[i]].copy_from_slice(gen);
            let img = t.f.component(i).dot(&Matrix::column(fld, &v));
            cols = cols.hstack(&img).unwrap();
        }
        maps.push(cols);
    }
    maps.extend(t.m.arrow_maps().iter().cloned());
    Representation::new(ext.algebra.clone(), dims, maps)
}

/// `Hom_B(S_a, M) = 0 = Hom_B(M, S_a)` for an `A`-module `M`.
pub fn check_lemma31(ext: &ExtensionResult, m: &Representation) -> Result<bool> {
    let mb = ext.lift(m)?;
    let sa = ext.simple_new();
    Ok(hom_dim(&sa, &mb)? == 0 && hom_dim(&mb, &sa)? == 0)
}

/// Whether the `A`-part of `N` lies in the torsion class of the pair whose
/// semibrick is `sb`.
pub fn in_extended_torsion(
    ext: &ExtensionResult,
    module: &Representation,
    sb: &[Representation],
    poset_a: &STPoset,
) -> Result<bool> {
    let node = pt_lookup(sb, poset_a)?;
    let m = ext.restrict(module);
    in_fac(&poset_a.nodes[node].pair.module(), &m)
}

/// `Hom(X, Fac M) = 0`, decided on the torsion parts `trace(M, I_v)` of the
/// indecomposable injectives.
pub fn hom_to_fac_is_zero(x: &Representation, pair: &STPair) -> Result<bool> {
    let m = pair.module();
    let alg = pair.algebra();
    for v in 0..alg.num_vertices() {
        let (t, _) = trace(&m, &Representation::injective(alg, v))?;
        if hom_dim(x, &t)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `S` and `S ∪ {S_a}` are semibricks over `B`.
    Semibricks,
    /// `M` is support τ-tilting over `B`.
    StaysPair,
    /// The pair of `S ∪ {S_a}` over `B` contains `M`.
    LookupContains,
    /// `X ∈ Fac M` gives the pair `P_a ⊕ M`.
    AddProjective,
    /// `Hom(X, Fac M) = 0` gives the pair `S_a ⊕ M`.
    AddSimple,
    /// `|B-pairs| >= 2 |A-pairs|`.
    Count,
}

impl Check {
    pub fn code(self) -> &'static str {
        match self {
            Check::Semibricks => "a",
            Check::StaysPair => "b",
            Check::LookupContains => "c",
            Check::AddProjective => "d",
            Check::AddSimple => "e",
            Check::Count => "f",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckRow {
    /// Label of the `A`-node, empty for global checks.
    pub node: String,
    pub check: Check,
    /// False when the hypothesis of the check does not hold.
    pub applicable: bool,
    pub passed: bool,
    pub witness: Option<String>,
    /// For [`Check::AddProjective`]: whether the witness is τ-tilting.
    pub tau_tilting: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub extension: ExtensionResult,
    pub poset_a: STPoset,
    pub poset_b: STPoset,
    pub rows: Vec<CheckRow>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.poset_a.nodes.len(), self.poset_b.nodes.len())
    }

    pub fn witnesses(&self, check: Check) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| r.check == check && r.applicable)
            .filter_map(|r| r.witness.as_deref())
            .collect()
    }
}

/// Every summand of `small` is isomorphic to a summand of `big`.
fn summands_contained(small: &[Representation], big: &[Representation]) -> Result<bool> {
    for s in small {
        let mut hit = false;
        for b in big {
            if b.dims() == s.dims() && indecomposables_isomorphic(b, s)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs every check on every node of the `A`-poset.
pub fn verify_extension_theorems(
    alg: &Arc<BoundQuiverAlgebra>,
    x: &Representation,
    vertex_name: &str,
    opts: EnumOptions,
) -> Result<VerificationReport> {
    let ext = extend(alg, x, vertex_name)?;
    let b = ext.algebra.clone();
    let poset_a = enumerate_stau(alg, opts)?;
    let poset_b = enumerate_stau(&b, opts)?;
    let sa = ext.simple_new();
    let pa = ext.projective_new();
    let mut rows = Vec::new();
    let row = |node: &str, check, applicable, passed, witness: Option<String>| CheckRow {
        node: node.to_string(),
        check,
        applicable,
        passed,
        witness,
        tau_tilting: None,
    };

    for node in &poset_a.nodes {
        let pair = &node.pair;
        let lifted: Vec<Representation> = pair.summands().iter().map(|s| ext.lift(s)).collect::<Result<_>>()?;
        let m_b = direct_sum(&b, &lifted)?;
        let proj_b = ext.lift_vertices(pair.proj_part());
        let sb: Vec<Representation> = node.semibrick.iter().map(|s| ext.lift(s)).collect::<Result<_>>()?;
        let mut sb_a = sb.clone();
        sb_a.push(sa.clone());

        // (a)
        let ok = is_semibrick(&sb)? && is_semibrick(&sb_a)?;
        rows.push(row(&node.label, Check::Semibricks, true, ok, None));

        // (b): over B the module vanishes at the new vertex as well
        let mut completed = proj_b.clone();
        completed.push(ext.vertex());
        let ok = is_stau_pair(&m_b, &completed)?;
        rows.push(row(&node.label, Check::StaysPair, true, ok, None));

        // (c)
        let (ok, witness) = match pt_lookup(&sb_a, &poset_b) {
            Ok(i) => (
                summands_contained(&lifted, poset_b.nodes[i].pair.summands())?,
                Some(poset_b.nodes[i].label.clone()),
            ),
            Err(_) => (false, None),
        };
        rows.push(row(&node.label, Check::LookupContains, true, ok, witness));

        // (d)
        let applicable = in_fac(&pair.module(), x)?;
        let mut r = row(&node.label, Check::AddProjective, applicable, true, None);
        if applicable {
            let with_pa = direct_sum(&b, &[pa.clone(), m_b.clone()])?;
            let ok = is_stau_pair(&with_pa, &proj_b)?;
            let tilting = proj_b.is_empty();
            r.passed = ok && (tilting == pair.is_tau_tilting());
            r.witness = Some(format!("P({}) + {}", ext.vertex_name, node.label));
            r.tau_tilting = Some(tilting);
        }
        rows.push(r);

        // (e)
        let applicable = hom_to_fac_is_zero(x, pair)?;
        let mut r = row(&node.label, Check::AddSimple, applicable, true, None);
        if applicable {
            let with_sa = direct_sum(&b, &[sa.clone(), m_b.clone()])?;
            r.passed = is_stau_pair(&with_sa, &proj_b)?;
            r.witness = Some(format!("S({}) + {}", ext.vertex_name, node.label));
        }
        rows.push(r);
    }
    let ok = poset_b.nodes.len() >= 2 * poset_a.nodes.len();
    rows.push(row(
        "",
        Check::Count,
        true,
        ok,
        Some(format!("{} >= 2*{}", poset_b.nodes.len(), poset_a.nodes.len())),
    ));
    Ok(VerificationReport {
        extension: ext,
        poset_a,
        poset_b,
        rows,
    })
}
