//! Bound quiver algebras `kQ/I` with an explicit basis of normal-form paths.
//!
//! A path is written left to right in the order its arrows are traversed:
//! `alpha*beta` means `alpha` first, then `beta`, so the target of `alpha`
//! must equal the source of `beta`.
//!
//! The relation ideal `I` is handled by truncation. For increasing `m` we
//! compute the image `V_m` of `I` in `kQ / J^{m+1}` (spanned by `u * rho * v`
//! for relations `rho` and paths `u`, `v`) and stop at the first `m` with
//! every path of length `m` inside `V_m`. Then `J^m` lies in `I` and the
//! algebra is `kQ_{<=m} / V_m`. Elimination orders longer paths first, so the
//! surviving (non-pivot) paths are as short as possible.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, Matrix};

/// Default bound on path length while searching for `J^m ⊆ I`.
pub const DEFAULT_LENGTH_CAP: usize = 32;

/// Bound on the number of paths kept in the truncated path algebra.
const PATH_COUNT_CAP: usize = 200_000;

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)` triples
    /// that refer to vertices by name.
    pub fn new<V, A, S>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        A: IntoIterator<Item = (S, S, S)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidQuiver("empty vertex name".into()));
            }
            if vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut out = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        for (name, s, t) in arrows {
            let (name, s, t): (String, String, String) = (name.into(), s.into(), t.into());
            out.push_arrow(name, &s, &t)?;
        }
        Ok(out)
    }

    fn push_arrow(&mut self, name: String, source: &str, target: &str) -> Result<()> {
        if name.is_empty() {
            return Err(Error::InvalidQuiver("empty arrow name".into()));
        }
        if self.arrows.iter().any(|a| a.name == name) || self.vertices.contains(&name) {
            return Err(Error::InvalidQuiver(format!("duplicate name `{name}`")));
        }
        let source = self.vertex_index(source)?;
        let target = self.vertex_index(target)?;
        self.arrows.push(Arrow { name, source, target });
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex `{name}`")))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow `{name}`")))
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn arrows_out_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    /// Checks that consecutive arrows compose and returns `(source, target)`.
    fn path_endpoints(&self, arrows: &[usize]) -> Option<(usize, usize)> {
        let first = arrows.first()?;
        let mut at = self.arrows[*first].target;
        for &a in &arrows[1..] {
            if self.arrows[a].source != at {
                return None;
            }
            at = self.arrows[a].target;
        }
        Some((self.arrows[*first].source, at))
    }
}

/// A linear combination of parallel paths, each given as a sequence of arrow
/// names. Coefficients are integers reduced modulo the field characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationSpec {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl RelationSpec {
    pub fn new(terms: Vec<(i64, Vec<String>)>) -> Self {
        RelationSpec { terms }
    }

    /// A monomial relation `path = 0`.
    pub fn monomial<S: AsRef<str>>(path: &[S]) -> Self {
        RelationSpec {
            terms: vec![(1, path.iter().map(|s| s.as_ref().to_string()).collect())],
        }
    }
}

/// A path in the quiver. Trivial paths have no arrows and
/// `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Sparse vector over the basis: `(basis index, nonzero coefficient)` pairs in
/// increasing index order.
pub type SparseVec = Vec<(usize, u32)>;

/// An element of a particular algebra, as dense coordinates on its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElem {
    algebra_id: u64,
    coords: Vec<u32>,
}

impl AlgElem {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.coords.iter().copied().enumerate().filter(|&(_, c)| c != 0)
    }
}

/// A finite-dimensional bound quiver algebra over `F_p`.
#[derive(Clone)]
pub struct BoundQuiverAlgebra {
    id: u64,
    quiver: Quiver,
    relations: Vec<RelationSpec>,
    field: FieldPrime,
    basis: Vec<Path>,
    basis_index: HashMap<(usize, Vec<usize>), usize>,
    /// Normal forms of nontrivial paths shorter than `nilpotency`.
    normal_forms: HashMap<Vec<usize>, SparseVec>,
    /// Every path of this length or longer is zero.
    nilpotency: usize,
    /// `mult[i * dim + j]` = `basis[i] * basis[j]`.
    mult: Vec<SparseVec>,
    /// `pairs[i][j]` = basis indices of paths from `i` to `j`.
    pairs: Vec<Vec<Vec<usize>>>,
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows)
            .field("p", &self.field.p())
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
            || (self.quiver == other.quiver
                && self.field == other.field
                && self.relations == other.relations)
    }
}

impl Eq for BoundQuiverAlgebra {}

struct ResolvedRelation {
    source: usize,
    target: usize,
    min_len: usize,
    terms: Vec<(u32, Vec<usize>)>,
}

impl BoundQuiverAlgebra {
    /// Builds `kQ/I` with the default length cap.
    pub fn build(quiver: Quiver, relations: Vec<RelationSpec>, field: FieldPrime) -> Result<Self> {
        Self::build_with_cap(quiver, relations, field, DEFAULT_LENGTH_CAP)
    }

    pub fn build_with_cap(
        quiver: Quiver,
        relations: Vec<RelationSpec>,
        field: FieldPrime,
        length_cap: usize,
    ) -> Result<Self> {
        let resolved = resolve_relations(&quiver, &relations, field)?;
        let n = quiver.num_vertices();

        // paths_from[v][l] = nontrivial paths of length l starting at v
        let mut by_len: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        let mut total_paths = 0usize;
        let mut m = 1usize;
        let (columns, echelon) = loop {
            if m > length_cap {
                return Err(Error::InfiniteDimensional(length_cap));
            }
            // extend path lists to length m
            let next: Vec<Vec<usize>> = if m == 1 {
                (0..quiver.arrows.len()).map(|a| vec![a]).collect()
            } else {
                let mut out = Vec::new();
                for p in &by_len[m - 1] {
                    let end = quiver.arrows[*p.last().unwrap()].target;
                    for a in quiver.arrows_out_of(end) {
                        let mut q = p.clone();
                        q.push(a);
                        out.push(q);
                    }
                }
                out
            };
            total_paths += next.len();
            if total_paths > PATH_COUNT_CAP {
                return Err(Error::InfiniteDimensional(m));
            }
            by_len.push(next);

            let (columns, gens) = ideal_generators(&quiver, &resolved, &by_len, m, field);
            let ech = gens.echelon();
            // J^m ⊆ I + J^{m+1} iff adding the length-m paths does not raise the rank
            let top: Vec<usize> = by_len[m].iter().map(|p| columns[p]).collect();
            let covered = if top.is_empty() {
                true
            } else {
                let mut units = Matrix::zeros(field, top.len(), gens.cols());
                for (r, &c) in top.iter().enumerate() {
                    units.set(r, c, 1);
                }
                let rank = ech.pivots.len();
                ech.reduced.block(0, 0, rank, gens.cols()).vstack(&units)?.rank() == rank
            };
            if covered {
                break (columns, ech);
            }
            m += 1;
        };

        // basis: trivial paths, then non-pivot paths by length then lexicographic
        let mut basis: Vec<Path> = (0..n).map(Path::trivial).collect();
        let pivot_of: HashMap<usize, usize> = echelon
            .pivots
            .iter()
            .enumerate()
            .map(|(row, &c)| (c, row))
            .collect();
        let mut col_paths: Vec<(usize, &Vec<usize>)> =
            columns.iter().map(|(p, &c)| (c, p)).collect();
        col_paths.sort();
        let mut survivors: Vec<&Vec<usize>> = col_paths
            .iter()
            .filter(|(c, _)| !pivot_of.contains_key(c))
            .map(|&(_, p)| p)
            .collect();
        survivors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for p in survivors {
            let (s, t) = quiver.path_endpoints(p).unwrap();
            basis.push(Path {
                source: s,
                target: t,
                arrows: p.clone(),
            });
        }
        let basis_index: HashMap<(usize, Vec<usize>), usize> = basis
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.clone()), i))
            .collect();

        let mut normal_forms: HashMap<Vec<usize>, SparseVec> = HashMap::new();
        for (p, &c) in &columns {
            if p.len() >= m {
                continue;
            }
            let nf = match pivot_of.get(&c) {
                None => {
                    let (s, _) = quiver.path_endpoints(p).unwrap();
                    vec![(basis_index[&(s, p.clone())], 1)]
                }
                Some(&row) => {
                    let mut v: SparseVec = Vec::new();
                    for (q, &c2) in &columns {
                        if c2 == c {
                            continue;
                        }
                        let coef = echelon.reduced.get(row, c2);
                        if coef != 0 {
                            let (s, _) = quiver.path_endpoints(q).unwrap();
                            let idx = *basis_index
                                .get(&(s, q.clone()))
                                .expect("reduced rows only touch surviving paths");
                            v.push((idx, field.neg(coef)));
                        }
                    }
                    v.sort();
                    v
                }
            };
            normal_forms.insert(p.clone(), nf);
        }

        let dim = basis.len();
        let mut alg = BoundQuiverAlgebra {
            id: NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed),
            quiver,
            relations,
            field,
            basis,
            basis_index,
            normal_forms,
            nilpotency: m,
            mult: Vec::new(),
            pairs: vec![vec![Vec::new(); n]; n],
        };
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                mult.push(alg.multiply_paths(&alg.basis[i], &alg.basis[j]));
            }
        }
        alg.mult = mult;
        for (i, p) in alg.basis.iter().enumerate() {
            alg.pairs[p.source][p.target].push(i);
        }
        Ok(alg)
    }

    fn multiply_paths(&self, a: &Path, b: &Path) -> SparseVec {
        if a.target != b.source {
            return Vec::new();
        }
        let mut arrows = a.arrows.clone();
        arrows.extend_from_slice(&b.arrows);
        self.reduce_arrows(a.source, &arrows)
    }

    /// Normal form of the path starting at `source` with the given arrows.
    pub fn reduce_arrows(&self, source: usize, arrows: &[usize]) -> SparseVec {
        if arrows.is_empty() {
            return vec![(self.basis_index[&(source, Vec::new())], 1)];
        }
        if arrows.len() >= self.nilpotency {
            return Vec::new();
        }
        self.normal_forms.get(arrows).cloned().unwrap_or_default()
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[RelationSpec] {
        &self.relations
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Every path of at least this length is zero in the algebra.
    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency
    }

    /// Basis indices of the paths from `i` to `j`, spanning `e_i A e_j` in the
    /// left-to-right path convention.
    pub fn pair_basis(&self, i: usize, j: usize) -> &[usize] {
        &self.pairs[i][j]
    }

    pub fn basis_index_of(&self, path: &Path) -> Option<usize> {
        self.basis_index.get(&(path.source, path.arrows.clone())).copied()
    }

    pub fn trivial_index(&self, v: usize) -> usize {
        self.basis_index[&(v, Vec::new())]
    }

    pub fn arrow_index_in_basis(&self, a: usize) -> usize {
        let arrow = &self.quiver.arrows[a];
        self.basis_index[&(arrow.source, vec![a])]
    }

    /// Product of two basis elements as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem {
            algebra_id: self.id,
            coords: vec![0; self.dim()],
        }
    }

    pub fn one(&self) -> AlgElem {
        let mut e = self.zero();
        for v in 0..self.num_vertices() {
            e.coords[self.trivial_index(v)] = 1;
        }
        e
    }

    pub fn basis_element(&self, i: usize) -> AlgElem {
        let mut e = self.zero();
        e.coords[i] = 1;
        e
    }

    pub fn idempotent(&self, v: usize) -> AlgElem {
        self.basis_element(self.trivial_index(v))
    }

    pub fn element_from_sparse(&self, v: &SparseVec) -> AlgElem {
        let mut e = self.zero();
        for &(i, c) in v {
            e.coords[i] = self.field.add(e.coords[i], c);
        }
        e
    }

    pub fn element_from_coords(&self, coords: Vec<u32>) -> Result<AlgElem> {
        if coords.len() != self.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for an algebra of dimension {}",
                coords.len(),
                self.dim()
            )));
        }
        Ok(AlgElem {
            algebra_id: self.id,
            coords: coords.into_iter().map(|c| c % self.field.p()).collect(),
        })
    }

    /// The element given by a path of arrow names (`["alpha", "beta"]`).
    pub fn path_element<S: AsRef<str>>(&self, names: &[S]) -> Result<AlgElem> {
        if names.is_empty() {
            return Err(Error::InvalidQuiver("empty path".into()));
        }
        let arrows: Vec<usize> = names
            .iter()
            .map(|n| self.quiver.arrow_index(n.as_ref()))
            .collect::<Result<_>>()?;
        let (s, _) = self
            .quiver
            .path_endpoints(&arrows)
            .ok_or_else(|| Error::InvalidQuiver("arrows do not compose".into()))?;
        Ok(self.element_from_sparse(&self.reduce_arrows(s, &arrows)))
    }

    fn check_owner(&self, e: &AlgElem) -> Result<()> {
        if e.algebra_id != self.id {
            return Err(Error::MixedAlgebras);
        }
        Ok(())
    }

    pub fn add(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        let f = self.field;
        Ok(AlgElem {
            algebra_id: self.id,
            coords: a.coords.iter().zip(&b.coords).map(|(&x, &y)| f.add(x, y)).collect(),
        })
    }

    pub fn scale(&self, a: &AlgElem, s: u32) -> AlgElem {
        let f = self.field;
        AlgElem {
            algebra_id: a.algebra_id,
            coords: a.coords.iter().map(|&x| f.mul(x, s)).collect(),
        }
    }

    /// Bilinear extension of path composition.
    pub fn multiply(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        self.check_owner(a)?;
        self.check_owner(b)?;
        let f = self.field;
        let mut out = self.zero();
        for (i, ca) in a.support() {
            for (j, cb) in b.support() {
                let c = f.mul(ca, cb);
                for &(k, ck) in self.basis_product(i, j) {
                    out.coords[k] = f.add(out.coords[k], f.mul(c, ck));
                }
            }
        }
        Ok(out)
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e_{}", self.quiver.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.quiver.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    pub fn format_element(&self, e: &AlgElem) -> String {
        let terms: Vec<String> = e
            .support()
            .map(|(i, c)| {
                let name = self.path_name(&self.basis[i]);
                if c == 1 {
                    name
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn resolve_relations(
    quiver: &Quiver,
    relations: &[RelationSpec],
    field: FieldPrime,
) -> Result<Vec<ResolvedRelation>> {
    let mut out = Vec::new();
    for rel in relations {
        let mut terms: Vec<(u32, Vec<usize>)> = Vec::new();
        let mut ends: Option<(usize, usize)> = None;
        for (coef, names) in &rel.terms {
            if names.len() < 2 {
                return Err(Error::NonAdmissible(format!(
                    "path `{}` has length {} < 2",
                    names.join("*"),
                    names.len()
                )));
            }
            let arrows: Vec<usize> = names
                .iter()
                .map(|n| quiver.arrow_index(n))
                .collect::<Result<_>>()?;
            let st = quiver.path_endpoints(&arrows).ok_or_else(|| {
                Error::InvalidQuiver(format!("arrows of `{}` do not compose", names.join("*")))
            })?;
            match ends {
                None => ends = Some(st),
                Some(e) if e != st => {
                    return Err(Error::NonAdmissible(
                        "relation mixes paths with different endpoints".into(),
                    ))
                }
                _ => {}
            }
            let c = field.reduce(*coef);
            if let Some(t) = terms.iter_mut().find(|t| t.1 == arrows) {
                t.0 = field.add(t.0, c);
            } else {
                terms.push((c, arrows));
            }
        }
        terms.retain(|t| t.0 != 0);
        if terms.is_empty() {
            continue;
        }
        let (source, target) = ends.unwrap();
        let min_len = terms.iter().map(|t| t.1.len()).min().unwrap();
        out.push(ResolvedRelation {
            source,
            target,
            min_len,
            terms,
        });
    }
    Ok(out)
}

/// Column index for every nontrivial path of length `<= m` (longest first,
/// then lexicographic) and the matrix whose rows span `V_m`.
fn ideal_generators(
    quiver: &Quiver,
    relations: &[ResolvedRelation],
    by_len: &[Vec<Vec<usize>>],
    m: usize,
    field: FieldPrime,
) -> (HashMap<Vec<usize>, usize>, Matrix) {
    let mut columns = HashMap::new();
    let mut c = 0;
    for l in (1..=m).rev() {
        let mut paths = by_len[l].clone();
        paths.sort();
        for p in paths {
            columns.insert(p, c);
            c += 1;
        }
    }
    let ncols = c;

    // prefix/suffix candidates including trivial ones
    let ending_at = |v: usize, max: usize| -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for l in 1..=max.min(m) {
            for p in &by_len[l] {
                if quiver.arrows[*p.last().unwrap()].target == v {
                    out.push(p.clone());
                }
            }
        }
        out
    };
    let starting_at = |v: usize, max: usize| -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for l in 1..=max.min(m) {
            for p in &by_len[l] {
                if quiver.arrows[p[0]].source == v {
                    out.push(p.clone());
                }
            }
        }
        out
    };

    let mut rows: Vec<Vec<u32>> = Vec::new();
    for rel in relations {
        if rel.min_len > m {
            continue;
        }
        let slack = m - rel.min_len;
        let prefixes = ending_at(rel.source, slack);
        let suffixes = starting_at(rel.target, slack);
        for u in &prefixes {
            for v in &suffixes {
                if u.len() + v.len() > slack {
                    continue;
                }
                let mut row = vec![0u32; ncols];
                let mut any = false;
                for (coef, p) in &rel.terms {
                    let len = u.len() + p.len() + v.len();
                    if len > m {
                        continue;
                    }
                    let mut path = u.clone();
                    path.extend_from_slice(p);
                    path.extend_from_slice(v);
                    let col = columns[&path];
                    row[col] = field.add(row[col], *coef);
                    any = true;
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let mut mat = Matrix::zeros(field, rows.len(), ncols);
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v != 0 {
                mat.set(r, c, v);
            }
        }
    }
    (columns, mat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldPrime {
        FieldPrime::new(2).unwrap()
    }

    pub(crate) fn a2() -> BoundQuiverAlgebra {
        let q = Quiver::new(["2", "3"], [("beta", "2", "3")]).unwrap();
        BoundQuiverAlgebra::build(q, vec![], f2()).unwrap()
    }

    fn b3() -> BoundQuiverAlgebra {
        let q = Quiver::new(
            ["1", "2", "3"],
            [("alpha", "1", "2"), ("beta", "2", "3")],
        )
        .unwrap();
        BoundQuiverAlgebra::build(q, vec![RelationSpec::monomial(&["alpha", "beta"])], f2())
            .unwrap()
    }

    fn names(alg: &BoundQuiverAlgebra) -> Vec<String> {
        alg.basis().iter().map(|p| alg.path_name(p)).collect()
    }

    #[test]
    fn path_algebra_of_a2() {
        let a = a2();
        assert_eq!(a.dim(), 3);
        assert_eq!(names(&a), ["e_2", "e_3", "beta"]);
    }

    #[test]
    fn extension_algebra_with_zero_relation() {
        let b = b3();
        assert_eq!(b.dim(), 5);
        assert_eq!(names(&b), ["e_1", "e_2", "e_3", "alpha", "beta"]);
        let ab = b
            .multiply(&b.path_element(&["alpha"]).unwrap(), &b.path_element(&["beta"]).unwrap())
            .unwrap();
        assert!(ab.is_zero());
        assert!(b.pair_basis(0, 2).is_empty());
    }

    #[test]
    fn loop_with_square_zero() {
        let q = Quiver::new(["1"], [("x", "1", "1")]).unwrap();
        let alg = BoundQuiverAlgebra::build(q, vec![RelationSpec::monomial(&["x", "x"])], f2())
            .unwrap();
        assert_eq!(alg.dim(), 2);
    }

    #[test]
    fn loop_without_relations_is_rejected() {
        let q = Quiver::new(["1"], [("x", "1", "1")]).unwrap();
        let err = BoundQuiverAlgebra::build_with_cap(q, vec![], f2(), 8).unwrap_err();
        assert_eq!(err, Error::InfiniteDimensional(8));
    }

    #[test]
    fn short_relation_is_not_admissible() {
        let q = Quiver::new(["1", "2"], [("a", "1", "2")]).unwrap();
        let err = BoundQuiverAlgebra::build(q, vec![RelationSpec::monomial(&["a"])], f2())
            .unwrap_err();
        assert!(matches!(err, Error::NonAdmissible(_)));
    }

    #[test]
    fn commutative_square() {
        // a*b - c*d on the square 1 -> 2 -> 4, 1 -> 3 -> 4
        let q = Quiver::new(
            ["1", "2", "3", "4"],
            [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let rel = RelationSpec::new(vec![
            (1, vec!["a".into(), "b".into()]),
            (-1, vec!["c".into(), "d".into()]),
        ]);
        let f3 = FieldPrime::new(3).unwrap();
        let alg = BoundQuiverAlgebra::build(q, vec![rel], f3).unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
        let ab = alg.path_element(&["a", "b"]).unwrap();
        let cd = alg.path_element(&["c", "d"]).unwrap();
        assert_eq!(ab, cd);
        assert!(!ab.is_zero());
    }

    #[test]
    fn idempotent_examples() {
        let a = a2();
        let e2 = a.idempotent(0);
        let e3 = a.idempotent(1);
        let beta = a.path_element(&["beta"]).unwrap();
        assert_eq!(a.multiply(&e2, &beta).unwrap(), beta);
        assert!(a.multiply(&e2, &e3).unwrap().is_zero());
        let other = b3();
        assert_eq!(
            a.multiply(&e2, &other.idempotent(0)).unwrap_err(),
            Error::MixedAlgebras
        );
    }

    fn structure_checks(alg: &BoundQuiverAlgebra) {
        let n = alg.dim();
        let one = alg.one();
        for i in 0..n {
            let b = alg.basis_element(i);
            assert_eq!(alg.multiply(&one, &b).unwrap(), b);
            assert_eq!(alg.multiply(&b, &one).unwrap(), b);
        }
        for v in 0..alg.num_vertices() {
            for w in 0..alg.num_vertices() {
                let prod = alg.multiply(&alg.idempotent(v), &alg.idempotent(w)).unwrap();
                if v == w {
                    assert_eq!(prod, alg.idempotent(v));
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (
                        alg.basis_element(i),
                        alg.basis_element(j),
                        alg.basis_element(k),
                    );
                    let l = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
                    let r = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
        let total: usize = (0..alg.num_vertices())
            .flat_map(|i| (0..alg.num_vertices()).map(move |j| (i, j)))
            .map(|(i, j)| alg.pair_basis(i, j).len())
            .sum();
        assert_eq!(total, n);
        // radical is nilpotent: any product of `nilpotency_bound` arrows vanishes
        let rad: Vec<usize> = (0..n).filter(|&i| !alg.basis()[i].is_trivial()).collect();
        let mut power: Vec<AlgElem> = rad.iter().map(|&i| alg.basis_element(i)).collect();
        for _ in 1..alg.nilpotency_bound() {
            let mut next = Vec::new();
            for x in &power {
                for &i in &rad {
                    let y = alg.multiply(x, &alg.basis_element(i)).unwrap();
                    if !y.is_zero() {
                        next.push(y);
                    }
                }
            }
            power = next;
        }
        assert!(power.is_empty());
    }

    #[test]
    fn algebra_axioms_on_small_examples() {
        structure_checks(&a2());
        structure_checks(&b3());
        let q = Quiver::new(
            ["1", "2", "3"],
            [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")],
        )
        .unwrap();
        let rels = vec![
            RelationSpec::monomial(&["a", "b"]),
            RelationSpec::monomial(&["b", "c"]),
            RelationSpec::monomial(&["c", "a"]),
        ];
        let cyc = BoundQuiverAlgebra::build(q, rels, f2()).unwrap();
        assert_eq!(cyc.dim(), 6);
        structure_checks(&cyc);

        let q = Quiver::new(["1"], [("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let rels = vec![
            RelationSpec::monomial(&["x", "x"]),
            RelationSpec::monomial(&["y", "y"]),
            RelationSpec::new(vec![
                (1, vec!["x".into(), "y".into()]),
                (1, vec!["y".into(), "x".into()]),
            ]),
        ];
        let ext = BoundQuiverAlgebra::build(q, rels, FieldPrime::new(3).unwrap()).unwrap();
        assert_eq!(ext.dim(), 4);
        structure_checks(&ext);
    }
}
