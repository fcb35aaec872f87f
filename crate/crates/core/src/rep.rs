//! Finite-dimensional modules as quiver representations.
//!
//! A [`Representation`] assigns a vector space `F_p^{d_v}` to each vertex and
//! a `d_target x d_source` matrix to each arrow. A path acts by the product
//! of its arrow matrices in traversal order. Morphisms are [`ModuleMap`]s,
//! one matrix per vertex, commuting with every arrow.
//!
//! Subrepresentations are passed around as one column-basis matrix per
//! vertex (see [`SubBases`]).

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgElem, BoundQuiverAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{subspace, FieldPrime, Matrix};

/// Column bases of a vertexwise family of subspaces.
pub type SubBases = Vec<Matrix>;

/// Upper bound `p^h` on the number of Hom elements enumerated when testing
/// for an isomorphism.
pub const ISO_ENUMERATION_CAP: u64 = 1 << 12;

/// Upper bound `p^h` on endomorphisms enumerated when looking for a
/// splitting endomorphism.
pub const END_ENUMERATION_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Simple,
    Projective,
    Injective,
}

struct RepInner {
    alg: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A representation of a bound quiver. Cheap to clone.
#[derive(Clone)]
pub struct Representation(Arc<RepInner>);

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("dims", &self.0.dims)
            .field("maps", &self.0.maps)
            .finish()
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        *self.0.alg == *other.0.alg && self.0.dims == other.0.dims && self.0.maps == other.0.maps
    }
}

impl Eq for Representation {}

impl Representation {
    /// Validates shapes and relations.
    pub fn new(alg: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() {
            return Err(Error::InvalidRepresentation(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.num_vertices()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::InvalidRepresentation("matrix over the wrong field".into()));
            }
        }
        let rep = Representation(Arc::new(RepInner { alg, dims, maps }));
        rep.check_relations()?;
        Ok(rep)
    }

    fn new_unchecked(alg: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        let rep = Representation(Arc::new(RepInner { alg, dims, maps }));
        debug_assert!(rep.check_relations().is_ok());
        rep
    }

    fn check_relations(&self) -> Result<()> {
        let alg = self.algebra();
        let q = alg.quiver();
        for rel in alg.relations() {
            let mut acc: Option<Matrix> = None;
            for (coef, names) in &rel.terms {
                let arrows: Vec<usize> =
                    names.iter().map(|n| q.arrow_index(n)).collect::<Result<_>>()?;
                let term = self.arrow_path_action(&arrows).scale(alg.field().reduce(*coef));
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term)?,
                });
            }
            if let Some(a) = acc {
                if !a.is_zero() {
                    let text: Vec<String> = rel.terms.iter().map(|t| t.1.join("*")).collect();
                    return Err(Error::InvalidRepresentation(format!(
                        "relation `{}` does not vanish",
                        text.join(" + ")
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<BoundQuiverAlgebra>) -> Self {
        let f = alg.field();
        let maps = alg.quiver().arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Representation::new_unchecked(alg.clone(), vec![0; alg.num_vertices()], maps)
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.0.alg
    }

    pub fn field(&self) -> FieldPrime {
        self.0.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.0.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    pub fn same_algebra(&self, other: &Representation) -> Result<()> {
        if *self.0.alg != *other.0.alg {
            return Err(Error::MixedAlgebras);
        }
        Ok(())
    }

    /// Action of a path (arrow indices, traversal order) as a matrix
    /// `dims[target] x dims[source]`.
    pub fn arrow_path_action(&self, arrows: &[usize]) -> Matrix {
        let q = self.algebra().quiver();
        let s = q.arrows()[arrows[0]].source;
        let mut acc = Matrix::identity(self.field(), self.dims()[s]);
        for &a in arrows {
            acc = self.arrow_map(a).dot(&acc);
        }
        acc
    }

    /// Action of the basis path with index `i`.
    pub fn basis_action(&self, i: usize) -> Matrix {
        let path = &self.algebra().basis()[i];
        if path.is_trivial() {
            Matrix::identity(self.field(), self.dims()[path.source])
        } else {
            self.arrow_path_action(&path.arrows)
        }
    }

    /// Action of an element of `e_i A e_j` as a map from vertex `i` to `j`.
    pub fn element_action(&self, e: &AlgElem, i: usize, j: usize) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::zeros(f, self.dims()[j], self.dims()[i]);
        for (k, c) in e.support() {
            let path = &self.algebra().basis()[k];
            if path.source != i || path.target != j {
                continue;
            }
            acc = acc.add(&self.basis_action(k).scale(c)).unwrap();
        }
        acc
    }

    /// Simple, indecomposable projective or indecomposable injective module
    /// at vertex `v`.
    pub fn standard(alg: &Arc<BoundQuiverAlgebra>, kind: StandardKind, v: usize) -> Self {
        match kind {
            StandardKind::Simple => Self::simple(alg, v),
            StandardKind::Projective => Self::projective(alg, v),
            StandardKind::Injective => Self::injective(alg, v),
        }
    }

    pub fn simple(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Self {
        let f = alg.field();
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Representation::new_unchecked(alg.clone(), dims, maps)
    }

    /// `P_v`: at vertex `w` the span of paths from `v` to `w`; arrows act by
    /// appending.
    pub fn projective(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Self {
        let f = alg.field();
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| alg.pair_basis(v, w).len()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let g = alg.arrow_index_in_basis(a);
                let src = alg.pair_basis(v, arrow.source);
                let tgt = alg.pair_basis(v, arrow.target);
                let mut m = Matrix::zeros(f, tgt.len(), src.len());
                for (c, &pi) in src.iter().enumerate() {
                    for &(k, coef) in alg.basis_product(pi, g) {
                        let r = tgt.iter().position(|&t| t == k).expect("product stays in e_v A");
                        m.set(r, c, coef);
                    }
                }
                m
            })
            .collect();
        Representation::new_unchecked(alg.clone(), dims, maps)
    }

    /// `I_v`: at vertex `w` the dual of the span of paths from `w` to `v`.
    pub fn injective(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Self {
        let f = alg.field();
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| alg.pair_basis(w, v).len()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let g = alg.arrow_index_in_basis(a);
                let src = alg.pair_basis(arrow.source, v);
                let tgt = alg.pair_basis(arrow.target, v);
                let mut m = Matrix::zeros(f, tgt.len(), src.len());
                for (r, &qi) in tgt.iter().enumerate() {
                    for &(k, coef) in alg.basis_product(g, qi) {
                        let c = src.iter().position(|&s| s == k).expect("product stays in A e_v");
                        m.set(r, c, coef);
                    }
                }
                m
            })
            .collect();
        Representation::new_unchecked(alg.clone(), dims, maps)
    }

    /// The algebra as a module over itself, `⊕_v P_v`.
    pub fn regular(alg: &Arc<BoundQuiverAlgebra>) -> Self {
        let parts: Vec<_> = (0..alg.num_vertices()).map(|v| Self::projective(alg, v)).collect();
        direct_sum(alg, &parts).expect("same algebra")
    }

    /// Radical series labels: `Some("1/2/3")` for uniserial modules, `None`
    /// otherwise. The zero module is labelled `"0"`.
    pub fn loewy_word(&self) -> Option<String> {
        if self.is_zero() {
            return Some("0".into());
        }
        let names = self.algebra().quiver().vertices();
        let mut word = Vec::new();
        let mut current = full_bases(self);
        while current.iter().any(|b| b.cols() > 0) {
            let next = self.radical_of(&current);
            let mut layer = Vec::new();
            for v in 0..self.dims().len() {
                let k = current[v].cols() - next[v].cols();
                for _ in 0..k {
                    layer.push(names[v].clone());
                }
            }
            if layer.len() != 1 {
                return None;
            }
            word.push(layer.pop().unwrap());
            current = next;
        }
        Some(word.join("/"))
    }

    /// Number of radical layers.
    pub fn loewy_length(&self) -> usize {
        let mut current = full_bases(self);
        let mut len = 0;
        while current.iter().any(|b| b.cols() > 0) {
            current = self.radical_of(&current);
            len += 1;
        }
        len
    }

    /// `J * U` for a subrepresentation `U` given by bases.
    pub fn radical_of(&self, sub: &[Matrix]) -> SubBases {
        let f = self.field();
        let q = self.algebra().quiver();
        (0..self.dims().len())
            .map(|v| {
                let mut acc = Matrix::zeros(f, self.dims()[v], 0);
                for a in q.arrows_into(v) {
                    let s = q.arrows()[a].source;
                    let img = self.arrow_map(a).dot(&sub[s]);
                    acc = acc.hstack(&img).unwrap();
                }
                acc.column_basis()
            })
            .collect()
    }

    /// Bases of `rad M`.
    pub fn radical_bases(&self) -> SubBases {
        self.radical_of(&full_bases(self))
    }

    /// Bases of `soc M`: at each vertex the common kernel of outgoing arrows.
    pub fn socle_bases(&self) -> SubBases {
        let f = self.field();
        let q = self.algebra().quiver();
        (0..self.dims().len())
            .map(|v| {
                let d = self.dims()[v];
                let outs: Vec<usize> = q.arrows_out_of(v).collect();
                let mut stacked = Matrix::zeros(f, 0, d);
                for a in outs {
                    stacked = stacked.vstack(self.arrow_map(a)).unwrap();
                }
                stacked.kernel_basis()
            })
            .collect()
    }

    /// Smallest subrepresentation containing the given vectors at each vertex.
    pub fn generated_by(&self, gens: &[Matrix]) -> SubBases {
        let q = self.algebra().quiver();
        let mut bases: SubBases = gens.iter().map(|g| g.column_basis()).collect();
        loop {
            let mut changed = false;
            for (a, arrow) in q.arrows().iter().enumerate() {
                let img = self.arrow_map(a).dot(&bases[arrow.source]);
                if !subspace::contains(&bases[arrow.target], &img) {
                    bases[arrow.target] = subspace::sum(&bases[arrow.target], &img);
                    changed = true;
                }
            }
            if !changed {
                return bases;
            }
        }
    }

    /// True when each vertex subspace is mapped into the target subspace.
    pub fn is_subrepresentation(&self, sub: &[Matrix]) -> bool {
        let q = self.algebra().quiver();
        q.arrows().iter().enumerate().all(|(a, arrow)| {
            subspace::contains(&sub[arrow.target], &self.arrow_map(a).dot(&sub[arrow.source]))
        })
    }

    /// The subrepresentation spanned by `sub` with its inclusion.
    pub fn sub_representation(&self, sub: &[Matrix]) -> Result<(Representation, ModuleMap)> {
        let q = self.algebra().quiver();
        let f = self.field();
        let bases: SubBases = sub.iter().map(|b| b.column_basis()).collect();
        let mut maps = Vec::with_capacity(q.arrows().len());
        for (a, arrow) in q.arrows().iter().enumerate() {
            let img = self.arrow_map(a).dot(&bases[arrow.source]);
            let x = bases[arrow.target]
                .solve_right(&img)?
                .ok_or_else(|| Error::InvalidRepresentation("not a subrepresentation".into()))?;
            maps.push(x);
        }
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let _ = f;
        let rep = Representation::new_unchecked(self.algebra().clone(), dims, maps);
        let incl = ModuleMap::new_unchecked(rep.clone(), self.clone(), bases);
        Ok((rep, incl))
    }

    /// The quotient by the subrepresentation spanned by `sub`, with the
    /// projection.
    pub fn quotient(&self, sub: &[Matrix]) -> Result<(Representation, ModuleMap)> {
        if !self.is_subrepresentation(sub) {
            return Err(Error::InvalidRepresentation("not a subrepresentation".into()));
        }
        let q = self.algebra().quiver();
        // rows of proj[v] span the annihilator of sub[v]
        let proj: Vec<Matrix> = sub.iter().map(|b| b.left_kernel_basis()).collect();
        let sections: Vec<Matrix> = proj
            .iter()
            .map(|pm| {
                pm
                    .solve_right(&Matrix::identity(self.field(), pm.rows()))
                    .unwrap()
                    .expect("projection has full row rank")
            })
            .collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                proj[arrow.target]
                    .dot(self.arrow_map(a))
                    .dot(&sections[arrow.source])
            })
            .collect();
        let dims = proj.iter().map(|p| p.rows()).collect();
        let rep = Representation::new_unchecked(self.algebra().clone(), dims, maps);
        let map = ModuleMap::new_unchecked(self.clone(), rep.clone(), proj);
        Ok((rep, map))
    }

    /// Total-space vectors at vertex `v` of the module, as columns.
    fn vertex_space(&self, v: usize) -> Matrix {
        Matrix::identity(self.field(), self.dims()[v])
    }
}

fn full_bases(m: &Representation) -> SubBases {
    (0..m.dims().len()).map(|v| m.vertex_space(v)).collect()
}

fn zero_bases(m: &Representation) -> SubBases {
    let f = m.field();
    m.dims().iter().map(|&d| Matrix::zeros(f, d, 0)).collect()
}

/// Block-diagonal direct sum. The empty sum is the zero module.
pub fn direct_sum(alg: &Arc<BoundQuiverAlgebra>, parts: &[Representation]) -> Result<Representation> {
    for p in parts {
        if *p.algebra().as_ref() != **alg {
            return Err(Error::MixedAlgebras);
        }
    }
    let f = alg.field();
    let n = alg.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims()[v]).sum()).collect();
    let maps = (0..alg.quiver().arrows().len())
        .map(|a| {
            let blocks: Vec<Matrix> = parts.iter().map(|p| p.arrow_map(a).clone()).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    Ok(Representation::new_unchecked(alg.clone(), dims, maps))
}

/// `M^n`.
pub fn power(m: &Representation, n: usize) -> Representation {
    let parts = vec![m.clone(); n];
    direct_sum(m.algebra(), &parts).unwrap()
}

/// A morphism of representations: one matrix `target_v x source_v` per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    components: Vec<Matrix>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleMap").field("components", &self.components).finish()
    }
}

impl ModuleMap {
    /// Checks shapes and the intertwiner law on every arrow.
    pub fn new(source: Representation, target: Representation, components: Vec<Matrix>) -> Result<Self> {
        source.same_algebra(&target)?;
        let n = source.dims().len();
        if components.len() != n {
            return Err(Error::InvalidMap(format!("{} components for {n} vertices", components.len())));
        }
        for v in 0..n {
            let c = &components[v];
            if c.rows() != target.dims()[v] || c.cols() != source.dims()[v] {
                return Err(Error::InvalidMap(format!("component at vertex {v} has the wrong shape")));
            }
        }
        let map = ModuleMap {
            source,
            target,
            components,
        };
        if !map.commutes() {
            return Err(Error::InvalidMap("intertwiner law fails".into()));
        }
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, components: Vec<Matrix>) -> Self {
        let map = ModuleMap {
            source,
            target,
            components,
        };
        debug_assert!(map.commutes(), "module map does not commute");
        map
    }

    pub fn commutes(&self) -> bool {
        let q = self.source.algebra().quiver();
        q.arrows().iter().enumerate().all(|(a, arrow)| {
            let l = self.components[arrow.target].dot(self.source.arrow_map(a));
            let r = self.target.arrow_map(a).dot(&self.components[arrow.source]);
            l == r
        })
    }

    pub fn identity(m: &Representation) -> Self {
        let comps = m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        ModuleMap::new_unchecked(m.clone(), m.clone(), comps)
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        let comps = (0..source.dims().len())
            .map(|v| Matrix::zeros(f, target.dims()[v], source.dims()[v]))
            .collect();
        ModuleMap::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    /// Vertexwise invertible.
    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target.dims() != other.source.dims() {
            return Err(Error::InvalidMap("maps are not composable".into()));
        }
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(f, g)| g.dot(f))
            .collect();
        Ok(ModuleMap::new_unchecked(self.source.clone(), other.target.clone(), comps))
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), comps))
    }

    pub fn scale(&self, s: u32) -> ModuleMap {
        let comps = self.components.iter().map(|c| c.scale(s)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    /// `self - s * id` for an endomorphism.
    pub fn minus_scalar(&self, s: u32) -> ModuleMap {
        let f = self.source.field();
        let comps = self
            .components
            .iter()
            .map(|c| c.sub(&Matrix::identity(f, c.rows()).scale(s)).unwrap())
            .collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn pow(&self, e: usize) -> ModuleMap {
        let comps = self.components.iter().map(|c| c.pow(e)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    /// Image bases inside the target.
    pub fn image_bases(&self) -> SubBases {
        self.components.iter().map(|c| c.column_basis()).collect()
    }

    /// Kernel bases inside the source.
    pub fn kernel_bases(&self) -> SubBases {
        self.components.iter().map(|c| c.kernel_basis()).collect()
    }

    /// All components concatenated row by row, used as a coordinate vector.
    fn flatten(&self) -> Vec<u32> {
        self.components.iter().flat_map(|c| c.entries().iter().copied()).collect()
    }
}

/// Linear combination `Σ c_i f_i` of maps with common source and target.
pub fn combine(source: &Representation, target: &Representation, maps: &[ModuleMap], coeffs: &[u32]) -> ModuleMap {
    let f = source.field();
    let mut comps: Vec<Matrix> = (0..source.dims().len())
        .map(|v| Matrix::zeros(f, target.dims()[v], source.dims()[v]))
        .collect();
    for (m, &c) in maps.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (acc, comp) in comps.iter_mut().zip(&m.components) {
            *acc = acc.add(&comp.scale(c)).unwrap();
        }
    }
    ModuleMap::new_unchecked(source.clone(), target.clone(), comps)
}

/// A basis of `Hom(M, N)`: the null space of the stacked intertwiner
/// equations `F_t M_a - N_a F_s = 0`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    m.same_algebra(n)?;
    let f = m.field();
    let q = m.algebra().quiver();
    let nv = m.dims().len();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims()[v] * m.dims()[v];
    }
    let nvars = offset[nv];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims()[v] + c;

    let neqs: usize = q
        .arrows()
        .iter()
        .map(|a| n.dims()[a.target] * m.dims()[a.source])
        .sum();
    let mut eqs = Matrix::zeros(f, neqs, nvars);
    let mut row = 0;
    for (a, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let ma = m.arrow_map(a);
        let na = n.arrow_map(a);
        for r in 0..n.dims()[t] {
            for c in 0..m.dims()[s] {
                // (F_t M_a)[r][c] = Σ_k F_t[r][k] M_a[k][c]
                for k in 0..m.dims()[t] {
                    let coef = ma.get(k, c);
                    if coef != 0 {
                        let i = var(t, r, k);
                        eqs.set(row, i, f.add(eqs.get(row, i), coef));
                    }
                }
                // -(N_a F_s)[r][c] = -Σ_k N_a[r][k] F_s[k][c]
                for k in 0..n.dims()[s] {
                    let coef = na.get(r, k);
                    if coef != 0 {
                        let i = var(s, k, c);
                        eqs.set(row, i, f.sub(eqs.get(row, i), coef));
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = eqs.kernel_basis();
    let maps = (0..kernel.cols())
        .map(|j| {
            let comps = (0..nv)
                .map(|v| {
                    let (rows, cols) = (n.dims()[v], m.dims()[v]);
                    let mut c = Matrix::zeros(f, rows, cols);
                    for r in 0..rows {
                        for cc in 0..cols {
                            c.set(r, cc, kernel.get(var(v, r, cc), j));
                        }
                    }
                    c
                })
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), comps)
        })
        .collect();
    Ok(maps)
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// Kernel, image and cokernel of a map with their structure maps.
#[derive(Clone, Debug)]
pub struct MapParts {
    pub kernel: Representation,
    pub kernel_inclusion: ModuleMap,
    pub image: Representation,
    pub image_inclusion: ModuleMap,
    pub cokernel: Representation,
    pub cokernel_projection: ModuleMap,
}

pub fn map_parts(f: &ModuleMap) -> Result<MapParts> {
    let (kernel, kernel_inclusion) = f.source().sub_representation(&f.kernel_bases())?;
    let image_bases = f.image_bases();
    let (image, image_inclusion) = f.target().sub_representation(&image_bases)?;
    let (cokernel, cokernel_projection) = f.target().quotient(&image_bases)?;
    Ok(MapParts {
        kernel,
        kernel_inclusion,
        image,
        image_inclusion,
        cokernel,
        cokernel_projection,
    })
}

/// Radical, top and socle of a module.
#[derive(Clone, Debug)]
pub struct Layers {
    pub radical: Representation,
    pub radical_inclusion: ModuleMap,
    pub top: Representation,
    pub top_projection: ModuleMap,
    pub socle: Representation,
    pub socle_inclusion: ModuleMap,
}

pub fn layers(m: &Representation) -> Result<Layers> {
    let rad = m.radical_bases();
    let (radical, radical_inclusion) = m.sub_representation(&rad)?;
    let (top, top_projection) = m.quotient(&rad)?;
    let (socle, socle_inclusion) = m.sub_representation(&m.socle_bases())?;
    Ok(Layers {
        radical,
        radical_inclusion,
        top,
        top_projection,
        socle,
        socle_inclusion,
    })
}

/// Bases of the trace of `M` in `N`: the sum of the images of all maps
/// `M -> N`.
pub fn trace_bases(m: &Representation, n: &Representation) -> Result<SubBases> {
    let homs = hom_basis(m, n)?;
    let f = n.field();
    Ok((0..n.dims().len())
        .map(|v| {
            let blocks: Vec<Matrix> = homs.iter().map(|h| h.component(v).clone()).collect();
            Matrix::hcat(f, n.dims()[v], &blocks).column_basis()
        })
        .collect())
}

/// The largest subrepresentation of `N` generated by `M`, with inclusion.
pub fn trace(m: &Representation, n: &Representation) -> Result<(Representation, ModuleMap)> {
    n.sub_representation(&trace_bases(m, n)?)
}

/// `N ∈ Fac M`, decided by `trace(M, N) = N`.
pub fn in_fac(m: &Representation, n: &Representation) -> Result<bool> {
    let t = trace_bases(m, n)?;
    Ok(t.iter().zip(n.dims()).all(|(b, &d)| b.cols() == d))
}

/// Outcome of analysing `End(M)`.
#[derive(Clone, Debug)]
pub enum EndoAnalysis {
    /// `End(M)` is local with residue field `F_p`; carries a basis of its
    /// radical.
    Local { radical: Vec<ModuleMap> },
    /// An endomorphism that is neither nilpotent nor invertible.
    Splitting(ModuleMap),
}

/// The unique `λ` with `f - λ` nilpotent, if any.
fn nilpotent_shift(f: &ModuleMap, d: usize) -> Option<u32> {
    let p = f.source.field().p();
    let candidates: Box<dyn Iterator<Item = u32>> = if p <= 4096 {
        Box::new(0..p)
    } else {
        // in characteristic not dividing d the shift is trace / d
        let fld = f.source.field();
        if d as u64 % p as u64 == 0 {
            return None;
        }
        let tr = f.components.iter().fold(0u32, |acc, c| {
            (0..c.rows()).fold(acc, |a, i| fld.add(a, c.get(i, i)))
        });
        Box::new(std::iter::once(fld.mul(tr, fld.inv(fld.reduce(d as i64)))))
    };
    candidates.into_iter().find(|&l| f.minus_scalar(l).pow(d).is_zero())
}

/// Some `λ` with `f - λ` not invertible and not nilpotent, if one exists.
fn splitting_shift(f: &ModuleMap, d: usize) -> Option<ModuleMap> {
    let p = f.source.field().p();
    if p > 4096 {
        let g = f.pow(d);
        return (!g.is_zero() && !g.is_isomorphism()).then(|| f.clone());
    }
    (0..p).find_map(|l| {
        let g = f.minus_scalar(l);
        let gd = g.pow(d);
        (!gd.is_zero() && !gd.is_isomorphism()).then_some(g)
    })
}

/// Decides whether `End(M)` is local (with residue field `F_p`) or finds a
/// splitting endomorphism.
///
/// Locality is certified exactly: every basis element `b` must be `λ + n`
/// with `n` nilpotent, and the span of those `n` must be closed under
/// composition and nilpotent as an algebra. Otherwise candidates (basis
/// elements, pairwise sums and products, then exhaustive or sampled
/// combinations) are searched for a map that is neither nilpotent nor
/// invertible.
pub fn analyse_endomorphisms(m: &Representation) -> Result<EndoAnalysis> {
    let d = m.total_dim();
    if d == 0 {
        return Err(Error::DecompositionUndecided("zero module has no endomorphism ring".into()));
    }
    let basis = hom_basis(m, m)?;
    let f = m.field();
    let mut radical = Vec::new();
    let mut all_split = true;
    for b in &basis {
        match nilpotent_shift(b, d) {
            Some(l) => radical.push(b.minus_scalar(l)),
            None => {
                if let Some(g) = splitting_shift(b, d) {
                    return Ok(EndoAnalysis::Splitting(g));
                }
                all_split = false;
            }
        }
    }
    if all_split && nilpotent_span(&radical, d) {
        let key = flattened_basis(f, &radical);
        let radical = key
            .into_iter()
            .map(|i| radical[i].clone())
            .collect();
        return Ok(EndoAnalysis::Local { radical });
    }

    // candidate search
    let mut candidates: Vec<ModuleMap> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i < j {
                candidates.push(basis[i].add(&basis[j])?);
            }
            candidates.push(basis[i].then(&basis[j])?);
        }
    }
    for i in 0..radical.len() {
        for j in 0..radical.len() {
            candidates.push(radical[i].then(&radical[j])?);
        }
    }
    for c in &candidates {
        if let Some(g) = splitting_shift(c, d) {
            return Ok(EndoAnalysis::Splitting(g));
        }
    }
    let h = basis.len();
    let total = f.count_pow(h);
    let mut coeffs = vec![0u32; h];
    let check = |coeffs: &[u32]| -> Option<ModuleMap> {
        let c = combine(m, m, &basis, coeffs);
        let g = c.pow(d);
        (!g.is_zero() && !g.is_isomorphism()).then_some(c)
    };
    if total <= END_ENUMERATION_CAP {
        for _ in 0..total {
            if let Some(g) = check(&coeffs) {
                return Ok(EndoAnalysis::Splitting(g));
            }
            increment(&mut coeffs, f.p());
        }
        // every endomorphism is nilpotent or invertible, so End(M) is local
        // but its residue field is larger than F_p
        return Err(Error::NotSplit(f.p()));
    }
    let mut rng = Lcg::new(0x5eed_0000 ^ h as u64);
    for _ in 0..4096 {
        for c in coeffs.iter_mut() {
            *c = rng.below(f.p());
        }
        if let Some(g) = check(&coeffs) {
            return Ok(EndoAnalysis::Splitting(g));
        }
    }
    Err(Error::DecompositionUndecided(format!(
        "no splitting endomorphism found among samples of a {h}-dimensional End"
    )))
}

/// Whether the span of `maps` is closed under composition and nilpotent.
fn nilpotent_span(maps: &[ModuleMap], d: usize) -> bool {
    if maps.is_empty() {
        return true;
    }
    let f = maps[0].source.field();
    let span_key = |ms: &[ModuleMap]| -> Matrix {
        let cols: Vec<Matrix> = ms.iter().map(|m| Matrix::column(f, &m.flatten())).collect();
        let rows = cols.first().map_or(0, |c| c.rows());
        Matrix::hcat(f, rows, &cols)
    };
    let base = span_key(maps);
    let mut power: Vec<ModuleMap> = maps.to_vec();
    for _ in 0..=d {
        let mut next = Vec::new();
        for x in &power {
            for y in maps {
                let z = x.then(y).unwrap();
                if !z.is_zero() {
                    next.push(z);
                }
            }
        }
        if next.is_empty() {
            return true;
        }
        let nk = span_key(&next);
        if !subspace::contains(&base, &nk) {
            return false;
        }
        let idx = flattened_basis(f, &next);
        power = idx.into_iter().map(|i| next[i].clone()).collect();
    }
    false
}

/// Indices of a maximal linearly independent subfamily.
fn flattened_basis(f: FieldPrime, maps: &[ModuleMap]) -> Vec<usize> {
    if maps.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Matrix> = maps.iter().map(|m| Matrix::column(f, &m.flatten())).collect();
    let rows = cols[0].rows();
    Matrix::hcat(f, rows, &cols).echelon().pivots
}

fn increment(coeffs: &mut [u32], p: u32) {
    for c in coeffs.iter_mut() {
        *c += 1;
        if *c < p {
            return;
        }
        *c = 0;
    }
}

/// Small deterministic generator for sampled searches.
pub(crate) struct Lcg(u64);

impl Lcg {
    pub(crate) fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1)
    }

    pub(crate) fn below(&mut self, n: u32) -> u32 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((self.0 >> 33) % n as u64) as u32
    }
}

/// Whether `End(M)` is local.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(matches!(analyse_endomorphisms(m)?, EndoAnalysis::Local { .. }))
}

/// Isomorphism of two modules known to be indecomposable: some composite
/// `N -> M` after `M -> N` of basis maps is invertible.
pub fn indecomposables_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    Ok(pairing_finds_iso(m, n)?.is_some())
}

fn pairing_finds_iso(m: &Representation, n: &Representation) -> Result<Option<ModuleMap>> {
    let there = hom_basis(m, n)?;
    if there.is_empty() {
        return Ok(None);
    }
    let back = hom_basis(n, m)?;
    for f in &there {
        if f.is_isomorphism() {
            return Ok(Some(f.clone()));
        }
        for g in &back {
            if f.then(g)?.is_isomorphism() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// Decides `M ≅ N`.
///
/// Dimension vectors and Hom dimensions must agree. A basis map or a
/// composite `g ∘ f` of basis maps that is invertible proves isomorphism
/// (and is conclusive when `M` is indecomposable). Otherwise Hom(M, N) is
/// sampled, then enumerated when it has at most [`ISO_ENUMERATION_CAP`]
/// elements, and finally the two Krull-Schmidt decompositions are compared.
pub fn are_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let there = hom_basis(m, n)?;
    let back = hom_basis(n, m)?;
    if there.len() != back.len()
        || hom_dim(m, m)? != there.len()
        || hom_dim(n, n)? != there.len()
    {
        return Ok(false);
    }
    if pairing_finds_iso(m, n)?.is_some() {
        return Ok(true);
    }
    if let EndoAnalysis::Local { .. } = analyse_endomorphisms(m)? {
        return Ok(false);
    }
    let f = m.field();
    let h = there.len();
    let mut rng = Lcg::new(0x150_0000 + h as u64);
    let mut coeffs = vec![0u32; h];
    for _ in 0..256 {
        for c in coeffs.iter_mut() {
            *c = rng.below(f.p());
        }
        if combine(m, n, &there, &coeffs).is_isomorphism() {
            return Ok(true);
        }
    }
    let total = f.count_pow(h);
    if total <= ISO_ENUMERATION_CAP {
        let mut coeffs = vec![0u32; h];
        for _ in 0..total {
            if combine(m, n, &there, &coeffs).is_isomorphism() {
                return Ok(true);
            }
            increment(&mut coeffs, f.p());
        }
        return Ok(false);
    }
    let dm = decompose(m).map_err(|_| Error::UndecidedIsomorphism)?;
    let dn = decompose(n).map_err(|_| Error::UndecidedIsomorphism)?;
    same_multiset(&dm, &dn)
}

fn same_multiset(a: &[(Representation, usize)], b: &[(Representation, usize)]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    for (x, mx) in a {
        let mut found = false;
        for (j, (y, my)) in b.iter().enumerate() {
            if !used[j] && mx == my && indecomposables_isomorphic(x, y)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Krull-Schmidt decomposition by Fitting splitting: for an endomorphism
/// `f` that is neither nilpotent nor invertible, `M = ker f^d ⊕ im f^d` with
/// `d = dim M`. Pieces with local endomorphism ring are indecomposable.
/// Isomorphic pieces are merged with multiplicity, in order of first
/// appearance.
pub fn decompose(m: &Representation) -> Result<Vec<(Representation, usize)>> {
    let mut pieces = Vec::new();
    split_into(m, &mut pieces)?;
    let mut out: Vec<(Representation, usize)> = Vec::new();
    'next: for piece in pieces {
        for (rep, mult) in out.iter_mut() {
            if indecomposables_isomorphic(rep, &piece)? {
                *mult += 1;
                continue 'next;
            }
        }
        out.push((piece, 1));
    }
    Ok(out)
}

fn split_into(m: &Representation, out: &mut Vec<Representation>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    match analyse_endomorphisms(m)? {
        EndoAnalysis::Local { .. } => {
            out.push(m.clone());
            Ok(())
        }
        EndoAnalysis::Splitting(f) => {
            let g = f.pow(m.total_dim());
            let (ker, _) = m.sub_representation(&g.kernel_bases())?;
            let (img, _) = m.sub_representation(&g.image_bases())?;
            split_into(&ker, out)?;
            split_into(&img, out)
        }
    }
}

/// Total number of indecomposable summands counted with multiplicity.
pub fn summand_count(parts: &[(Representation, usize)]) -> usize {
    parts.iter().map(|p| p.1).sum()
}

/// Canonical key of a subrepresentation, for hashing.
pub fn sub_key(sub: &[Matrix]) -> Vec<Matrix> {
    sub.iter().map(|b| b.column_space_key()).collect()
}

/// Every subrepresentation of `M`: the cyclic ones generated by single
/// vectors at one vertex, then closed under sums. Refuses when
/// `p^dim M` exceeds `vector_cap` or more than `count_cap` submodules appear.
pub fn enumerate_submodules(m: &Representation, vector_cap: u64, count_cap: usize) -> Result<Vec<SubBases>> {
    let f = m.field();
    if f.count_pow(m.total_dim()) > vector_cap {
        return Err(Error::CapExceeded(format!(
            "submodule enumeration of a {}-dimensional module",
            m.total_dim()
        )));
    }
    let mut seen: HashSet<Vec<Matrix>> = HashSet::new();
    let mut subs: Vec<SubBases> = Vec::new();
    let push = |b: SubBases, seen: &mut HashSet<Vec<Matrix>>, subs: &mut Vec<SubBases>| -> Result<bool> {
        let key = sub_key(&b);
        if seen.insert(key) {
            subs.push(b);
            if subs.len() > count_cap {
                return Err(Error::CapExceeded(format!("more than {count_cap} submodules")));
            }
            return Ok(true);
        }
        Ok(false)
    };
    push(zero_bases(m), &mut seen, &mut subs)?;
    for v in 0..m.dims().len() {
        let d = m.dims()[v];
        let mut vec = vec![0u32; d];
        for _ in 0..f.count_pow(d) {
            if vec.iter().any(|&x| x != 0) {
                let mut gens = zero_bases(m);
                gens[v] = Matrix::column(f, &vec);
                let b = m.generated_by(&gens);
                push(b, &mut seen, &mut subs)?;
            }
            increment(&mut vec, f.p());
        }
    }
    // every submodule is a sum of cyclic ones, so adding one cyclic
    // submodule at a time reaches the closure under sums
    let cyclic = subs.len();
    let mut i = 1;
    while i < subs.len() {
        for j in 1..cyclic {
            let s: SubBases = subs[i]
                .iter()
                .zip(&subs[j])
                .map(|(a, b)| subspace::sum(a, b))
                .collect();
            push(s, &mut seen, &mut subs)?;
        }
        i += 1;
    }
    Ok(subs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quiver, RelationSpec};

    fn f2() -> FieldPrime {
        FieldPrime::new(2).unwrap()
    }

    fn a2() -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::new(["2", "3"], [("beta", "2", "3")]).unwrap();
        Arc::new(BoundQuiverAlgebra::build(q, vec![], f2()).unwrap())
    }

    fn b3() -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::new(["1", "2", "3"], [("alpha", "1", "2"), ("beta", "2", "3")]).unwrap();
        Arc::new(
            BoundQuiverAlgebra::build(q, vec![RelationSpec::monomial(&["alpha", "beta"])], f2())
                .unwrap(),
        )
    }

    /// Every tuple of component matrices satisfying the intertwiner law,
    /// found by enumerating all candidates.
    fn brute_force_homs(m: &Representation, n: &Representation) -> Vec<Vec<u32>> {
        let f = m.field();
        let sizes: Vec<usize> = (0..m.dims().len()).map(|v| m.dims()[v] * n.dims()[v]).collect();
        let nvars: usize = sizes.iter().sum();
        let mut out = Vec::new();
        let mut x = vec![0u32; nvars];
        for _ in 0..f.count_pow(nvars) {
            let mut off = 0;
            let comps: Vec<Matrix> = (0..m.dims().len())
                .map(|v| {
                    let e: Vec<i64> = x[off..off + sizes[v]].iter().map(|&a| a as i64).collect();
                    off += sizes[v];
                    Matrix::from_entries(f, n.dims()[v], m.dims()[v], &e).unwrap()
                })
                .collect();
            if ModuleMap::new(m.clone(), n.clone(), comps).is_ok() {
                out.push(x.clone());
            }
            increment(&mut x, f.p());
        }
        out
    }

    #[test]
    fn standard_modules_of_a2() {
        let a = a2();
        assert_eq!(Representation::projective(&a, 0).dims(), &[1, 1]);
        assert_eq!(Representation::projective(&a, 1), Representation::simple(&a, 1));
        assert_eq!(Representation::injective(&a, 1).dims(), &[1, 1]);
        assert_eq!(Representation::injective(&a, 0), Representation::simple(&a, 0));
        let b = b3();
        assert_eq!(Representation::projective(&b, 0).dims(), &[1, 1, 0]);
        assert_eq!(Representation::projective(&a, 0).loewy_word().unwrap(), "2/3");
    }

    #[test]
    fn hom_examples_against_enumeration() {
        let a = a2();
        let p2 = Representation::projective(&a, 0);
        let s3 = Representation::simple(&a, 1);
        assert_eq!(hom_dim(&p2, &s3).unwrap(), 0);
        assert_eq!(brute_force_homs(&p2, &s3).len(), 1);
        assert_eq!(hom_dim(&s3, &p2).unwrap(), 1);
        assert_eq!(brute_force_homs(&s3, &p2).len(), 2);
        let id = ModuleMap::identity(&p2);
        assert!(id.commutes());
        assert_eq!(hom_dim(&p2, &p2).unwrap(), 1);
    }

    #[test]
    fn hom_from_projective_is_vertex_space() {
        let b = b3();
        let mods = [
            Representation::regular(&b),
            Representation::injective(&b, 2),
            direct_sum(&b, &[Representation::simple(&b, 1), Representation::projective(&b, 1)]).unwrap(),
        ];
        for m in &mods {
            for v in 0..3 {
                let p = Representation::projective(&b, v);
                assert_eq!(hom_dim(&p, m).unwrap(), m.dims()[v]);
            }
        }
    }

    #[test]
    fn map_parts_examples() {
        let a = a2();
        let p2 = Representation::projective(&a, 0);
        let s3 = Representation::simple(&a, 1);
        let parts = map_parts(&ModuleMap::identity(&p2)).unwrap();
        assert!(parts.kernel.is_zero());
        assert!(parts.cokernel.is_zero());
        assert!(are_isomorphic(&parts.image, &p2).unwrap());

        let parts = map_parts(&ModuleMap::zero(&p2, &s3)).unwrap();
        assert!(are_isomorphic(&parts.kernel, &p2).unwrap());
        assert!(are_isomorphic(&parts.cokernel, &s3).unwrap());

        let socle_incl = hom_basis(&s3, &p2).unwrap().remove(0);
        let parts = map_parts(&socle_incl).unwrap();
        assert_eq!(parts.cokernel, Representation::simple(&a, 0));
        // kernel -> source -> target -> cokernel composes to zero
        assert!(parts.kernel_inclusion.then(&socle_incl).unwrap().is_zero());
        assert!(socle_incl.then(&parts.cokernel_projection).unwrap().is_zero());
    }

    #[test]
    fn layer_examples() {
        let a = a2();
        let p2 = Representation::projective(&a, 0);
        let l = layers(&p2).unwrap();
        assert!(are_isomorphic(&l.top, &Representation::simple(&a, 0)).unwrap());
        assert!(are_isomorphic(&l.socle, &Representation::simple(&a, 1)).unwrap());
        let b = b3();
        let l = layers(&Representation::projective(&b, 0)).unwrap();
        assert!(are_isomorphic(&l.radical, &Representation::simple(&b, 1)).unwrap());
    }

    #[test]
    fn direct_sum_examples() {
        let a = a2();
        assert!(direct_sum(&a, &[]).unwrap().is_zero());
        let s = direct_sum(&a, &[Representation::projective(&a, 0), Representation::simple(&a, 1)]).unwrap();
        assert_eq!(s.dims(), &[1, 2]);
        let p2 = Representation::projective(&a, 0);
        let z = Representation::zero(&a);
        assert!(are_isomorphic(&direct_sum(&a, &[p2.clone(), z]).unwrap(), &p2).unwrap());
    }

    #[test]
    fn trace_examples() {
        let a = a2();
        let p2 = Representation::projective(&a, 0);
        let s2 = Representation::simple(&a, 0);
        let s3 = Representation::simple(&a, 1);
        let t1 = direct_sum(&a, &[p2.clone(), s3.clone()]).unwrap();
        assert!(in_fac(&t1, &t1).unwrap());
        assert!(in_fac(&t1, &s2).unwrap());
        assert!(trace(&p2, &s3).unwrap().0.is_zero());
        // trace is idempotent
        let (t, _) = trace(&s3, &t1).unwrap();
        let (tt, _) = trace(&s3, &t).unwrap();
        assert_eq!(t.dims(), tt.dims());
    }

    #[test]
    fn isomorphism_examples() {
        let a = a2();
        let p2 = Representation::projective(&a, 0);
        assert!(are_isomorphic(&p2, &p2).unwrap());
        assert!(!are_isomorphic(&Representation::simple(&a, 0), &Representation::simple(&a, 1)).unwrap());
        // P_2 with the arrow matrix scaled by 2 over F_3 is still P_2
        let q = Quiver::new(["2", "3"], [("beta", "2", "3")]).unwrap();
        let a3 = Arc::new(BoundQuiverAlgebra::build(q, vec![], FieldPrime::new(3).unwrap()).unwrap());
        let p = Representation::projective(&a3, 0);
        let other = Representation::new(
            a3.clone(),
            vec![1, 1],
            vec![Matrix::from_rows(a3.field(), &[vec![2]])],
        )
        .unwrap();
        assert_ne!(p, other);
        assert!(are_isomorphic(&p, &other).unwrap());
        // S2 ⊕ S3 is not P2
        let ss = direct_sum(&a, &[Representation::simple(&a, 0), Representation::simple(&a, 1)]).unwrap();
        assert!(!are_isomorphic(&ss, &p2).unwrap());
    }

    #[test]
    fn decompose_examples() {
        let a = a2();
        let p2 = Representation::projective(&a, 0);
        let s3 = Representation::simple(&a, 1);
        let d = decompose(&direct_sum(&a, &[p2.clone(), s3.clone()]).unwrap()).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|(_, k)| *k == 1));
        assert!(d.iter().any(|(r, _)| are_isomorphic(r, &p2).unwrap()));
        assert!(d.iter().any(|(r, _)| are_isomorphic(r, &s3).unwrap()));

        let d = decompose(&Representation::simple(&a, 0)).unwrap();
        assert_eq!(d.len(), 1);

        let d = decompose(&power(&p2, 2)).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(are_isomorphic(&d[0].0, &p2).unwrap());
    }

    #[test]
    fn decompose_semisimple_square() {
        // S ⊕ S over F_2 has End = M_2(F_2), which defeats naive basis searches
        let a = a2();
        let s = Representation::simple(&a, 0);
        let d = decompose(&power(&s, 3)).unwrap();
        assert_eq!(d, vec![(d[0].0.clone(), 3)]);
    }

    #[test]
    fn relation_violations_are_rejected() {
        let b = b3();
        let one = Matrix::from_rows(b.field(), &[vec![1]]);
        let err = Representation::new(b.clone(), vec![1, 1, 1], vec![one.clone(), one]).unwrap_err();
        assert!(matches!(err, Error::InvalidRepresentation(_)));
    }

    #[test]
    fn submodules_of_p2() {
        let a = a2();
        let p2 = Representation::projective(&a, 0);
        let subs = enumerate_submodules(&p2, 1 << 16, 1000).unwrap();
        // 0, soc = S3, P2
        assert_eq!(subs.len(), 3);
        let ss = power(&Representation::simple(&a, 1), 2);
        // subspaces of F_2^2: 0, three lines, everything
        assert_eq!(enumerate_submodules(&ss, 1 << 16, 1000).unwrap().len(), 5);
    }
}
