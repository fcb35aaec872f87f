//! Projective presentations, the Nakayama functor and the translates τ, τ⁻¹.
//!
//! A direct sum of indecomposable projectives is recorded by its list of
//! vertices `[i_1, .., i_n]`; at vertex `w` the summand `P_{i_k}` contributes
//! the paths `i_k -> w` in [`BoundQuiverAlgebra::pair_basis`] order. Maps
//! between such sums are matrices of algebra elements: a map
//! `⊕ P_{j_l} -> ⊕ P_{i_k}` sends the generator of `P_{j_l}` to
//! `Σ_k d(k, l)` with `d(k, l)` a combination of paths `i_k -> j_l`.

use std::sync::Arc;

use crate::algebra::{AlgElem, BoundQuiverAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{subspace, Matrix};
use crate::rep::{direct_sum, hom_dim, map_parts, ModuleMap, Representation};

/// Matrix of algebra elements, indexed `[row][col]`.
pub type PathMatrix = Vec<Vec<AlgElem>>;

#[derive(Clone, Debug)]
pub struct ProjPresentation {
    /// Vertices of the summands of `P0`.
    pub p0_vertices: Vec<usize>,
    /// Vertices of the summands of `P1`.
    pub p1_vertices: Vec<usize>,
    pub p0: Representation,
    pub p1: Representation,
    /// `d[k][l]` lies in `e_{i_k} A e_{j_l}`.
    pub d: PathMatrix,
    /// Realization of `d` as a map `P1 -> P0`.
    pub d_map: ModuleMap,
    pub epi: ModuleMap,
    /// Image in `M` of each generator of `P0`, as (vertex, vector).
    pub generators: Vec<(usize, Vec<u32>)>,
}

#[derive(Clone, Debug)]
pub struct TauResult {
    pub module: Representation,
    pub presentation: ProjPresentation,
}

/// `⊕_k P_{vertices[k]}`.
pub fn projective_sum(alg: &Arc<BoundQuiverAlgebra>, vertices: &[usize]) -> Representation {
    let parts: Vec<_> = vertices.iter().map(|&v| Representation::projective(alg, v)).collect();
    direct_sum(alg, &parts).expect("same algebra")
}

/// `⊕_k I_{vertices[k]}`.
pub fn injective_sum(alg: &Arc<BoundQuiverAlgebra>, vertices: &[usize]) -> Representation {
    let parts: Vec<_> = vertices.iter().map(|&v| Representation::injective(alg, v)).collect();
    direct_sum(alg, &parts).expect("same algebra")
}

fn block_offsets(alg: &BoundQuiverAlgebra, w: usize, vertices: &[usize], into: bool) -> Vec<usize> {
    let mut off = vec![0];
    for &v in vertices {
        let n = if into { alg.pair_basis(w, v).len() } else { alg.pair_basis(v, w).len() };
        off.push(off.last().unwrap() + n);
    }
    off
}

/// The map `⊕ P_{src[l]} -> ⊕ P_{tgt[k]}` sending the `l`-th generator to
/// `Σ_k d[k][l]`. Entries must lie in `e_{tgt[k]} A e_{src[l]}`.
pub fn projective_map(
    alg: &Arc<BoundQuiverAlgebra>,
    src: &[usize],
    tgt: &[usize],
    d: &PathMatrix,
) -> Result<ModuleMap> {
    check_entries(alg, tgt, src, d)?;
    let f = alg.field();
    let source = projective_sum(alg, src);
    let target = projective_sum(alg, tgt);
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let so = block_offsets(alg, w, src, false);
            let to = block_offsets(alg, w, tgt, false);
            let mut m = Matrix::zeros(f, *to.last().unwrap(), *so.last().unwrap());
            for (l, &j) in src.iter().enumerate() {
                for (ri, &r) in alg.pair_basis(j, w).iter().enumerate() {
                    let r_el = alg.basis_element(r);
                    for (k, &i) in tgt.iter().enumerate() {
                        let prod = alg.multiply(&d[k][l], &r_el).unwrap();
                        for (c, coef) in prod.support() {
                            let pos = alg.pair_basis(i, w).iter().position(|&x| x == c).unwrap();
                            m.set(to[k] + pos, so[l] + ri, coef);
                        }
                    }
                }
            }
            m
        })
        .collect();
    ModuleMap::new(source, target, comps)
}

/// The Nakayama image of [`projective_map`]: `⊕ I_{src[l]} -> ⊕ I_{tgt[k]}`,
/// each entry `q` acting as `φ ↦ (r ↦ φ(r q))`.
pub fn nakayama_map(
    alg: &Arc<BoundQuiverAlgebra>,
    src: &[usize],
    tgt: &[usize],
    d: &PathMatrix,
) -> Result<ModuleMap> {
    check_entries(alg, tgt, src, d)?;
    let f = alg.field();
    let source = injective_sum(alg, src);
    let target = injective_sum(alg, tgt);
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let so = block_offsets(alg, w, src, true);
            let to = block_offsets(alg, w, tgt, true);
            let mut m = Matrix::zeros(f, *to.last().unwrap(), *so.last().unwrap());
            for (k, &i) in tgt.iter().enumerate() {
                for (ri, &r) in alg.pair_basis(w, i).iter().enumerate() {
                    let r_el = alg.basis_element(r);
                    for (l, &j) in src.iter().enumerate() {
                        let prod = alg.multiply(&r_el, &d[k][l]).unwrap();
                        for (c, coef) in prod.support() {
                            let pos = alg.pair_basis(w, j).iter().position(|&x| x == c).unwrap();
                            m.set(to[k] + ri, so[l] + pos, coef);
                        }
                    }
                }
            }
            m
        })
        .collect();
    ModuleMap::new(source, target, comps)
}

fn check_entries(alg: &BoundQuiverAlgebra, rows: &[usize], cols: &[usize], d: &PathMatrix) -> Result<()> {
    if d.len() != rows.len() || d.iter().any(|r| r.len() != cols.len()) {
        return Err(Error::ShapeMismatch(format!(
            "path matrix must be {}x{}",
            rows.len(),
            cols.len()
        )));
    }
    for (k, &i) in rows.iter().enumerate() {
        for (l, &j) in cols.iter().enumerate() {
            let allowed = alg.pair_basis(i, j);
            if d[k][l].support().any(|(b, _)| !allowed.contains(&b)) {
                return Err(Error::InvalidMap(format!("entry ({k},{l}) is not in e_i A e_j")));
            }
        }
    }
    Ok(())
}

/// The map `⊕ P_{v_k} -> M` sending the `k`-th generator to `x_k ∈ M_{v_k}`.
pub fn generator_map(m: &Representation, gens: &[(usize, Vec<u32>)]) -> ModuleMap {
    let alg = m.algebra();
    let f = m.field();
    let vertices: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let source = projective_sum(alg, &vertices);
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let blocks: Vec<Matrix> = gens
                .iter()
                .map(|(v, x)| {
                    let xv = Matrix::column(f, x);
                    let cols: Vec<Matrix> =
                        alg.pair_basis(*v, w).iter().map(|&r| m.basis_action(r).dot(&xv)).collect();
                    Matrix::hcat(f, m.dims()[w], &cols)
                })
                .collect();
            Matrix::hcat(f, m.dims()[w], &blocks)
        })
        .collect();
    ModuleMap::new_unchecked(source, m.clone(), comps)
}

/// Vectors lifting a basis of the top, vertex by vertex.
pub fn top_generators(m: &Representation) -> Vec<(usize, Vec<u32>)> {
    let rad = m.radical_bases();
    let mut gens = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let c = subspace::complement(m.field(), r);
        for j in 0..c.cols() {
            gens.push((v, c.col(j)));
        }
    }
    gens
}

/// Projective cover `P0 -> M` with the vertex list of `P0`.
pub fn projective_cover(m: &Representation) -> (Vec<usize>, ModuleMap) {
    let gens = top_generators(m);
    let vertices = gens.iter().map(|g| g.0).collect();
    (vertices, generator_map(m, &gens))
}

/// Splits a vector of `⊕ P_{vertices}` at vertex `w` into algebra elements,
/// one per summand.
fn split_vector(alg: &BoundQuiverAlgebra, vertices: &[usize], w: usize, x: &[u32]) -> Vec<AlgElem> {
    let off = block_offsets(alg, w, vertices, false);
    vertices
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let sparse = alg
                .pair_basis(i, w)
                .iter()
                .enumerate()
                .filter(|(pos, _)| x[off[k] + pos] != 0)
                .map(|(pos, &b)| (b, x[off[k] + pos]))
                .collect();
            alg.element_from_sparse(&sparse)
        })
        .collect()
}

/// Minimal projective presentation `P1 -d-> P0 -> M -> 0`.
pub fn min_presentation(m: &Representation) -> Result<ProjPresentation> {
    let alg = m.algebra().clone();
    let generators = top_generators(m);
    let p0_vertices: Vec<usize> = generators.iter().map(|g| g.0).collect();
    let epi = generator_map(m, &generators);
    let p0 = epi.source().clone();
    let (omega, incl) = p0.sub_representation(&epi.kernel_bases())?;
    let kernel_gens = top_generators(&omega);
    let p1_vertices: Vec<usize> = kernel_gens.iter().map(|g| g.0).collect();
    let mut d: PathMatrix = vec![Vec::with_capacity(p1_vertices.len()); p0_vertices.len()];
    for (w, y) in &kernel_gens {
        let in_p0 = incl.component(*w).dot(&Matrix::column(m.field(), y)).col(0);
        for (k, e) in split_vector(&alg, &p0_vertices, *w, &in_p0).into_iter().enumerate() {
            d[k].push(e);
        }
    }
    let d_map = projective_map(&alg, &p1_vertices, &p0_vertices, &d)?;
    Ok(ProjPresentation {
        p0_vertices,
        p1: d_map.source().clone(),
        p1_vertices,
        p0,
        d,
        d_map,
        epi,
        generators,
    })
}

/// Syzygy: the kernel of the projective cover.
pub fn syzygy(m: &Representation) -> Result<Representation> {
    let (_, epi) = projective_cover(m);
    Ok(map_parts(&epi)?.kernel)
}

pub fn is_projective(m: &Representation) -> bool {
    let (vertices, _) = projective_cover(m);
    let alg = m.algebra();
    let cover_dim: usize = vertices
        .iter()
        .map(|&v| (0..alg.num_vertices()).map(|w| alg.pair_basis(v, w).len()).sum::<usize>())
        .sum();
    cover_dim == m.total_dim()
}

/// `τM = ker(ν d)` for the minimal presentation `d` of `M`.
pub fn tau(m: &Representation) -> Result<TauResult> {
    let presentation = min_presentation(m)?;
    let nu = nakayama_map(
        m.algebra(),
        &presentation.p1_vertices,
        &presentation.p0_vertices,
        &presentation.d,
    )?;
    let module = map_parts(&nu)?.kernel;
    Ok(TauResult { module, presentation })
}

/// Injective envelope `M -> ⊕ I_{v_k}`, built from functionals that restrict
/// to a dual basis on the socle.
pub fn injective_envelope(m: &Representation) -> Result<(Vec<usize>, ModuleMap)> {
    let alg = m.algebra();
    let f = m.field();
    let soc = m.socle_bases();
    let mut funcs: Vec<(usize, Matrix)> = Vec::new();
    for (v, s) in soc.iter().enumerate() {
        if s.cols() == 0 {
            continue;
        }
        // Ψ with Ψ S = I, i.e. S^T Ψ^T = I
        let psi_t = s
            .transpose()
            .solve_right(&Matrix::identity(f, s.cols()))?
            .expect("socle basis has full column rank");
        let psi = psi_t.transpose();
        for r in 0..psi.rows() {
            funcs.push((v, psi.select_rows(&[r])));
        }
    }
    let vertices: Vec<usize> = funcs.iter().map(|x| x.0).collect();
    let target = injective_sum(alg, &vertices);
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let mut rows = Matrix::zeros(f, 0, m.dims()[w]);
            for (v, psi) in &funcs {
                for &r in alg.pair_basis(w, *v) {
                    rows = rows.vstack(&psi.dot(&m.basis_action(r))).unwrap();
                }
            }
            rows
        })
        .collect();
    let env = ModuleMap::new(m.clone(), target, comps)?;
    debug_assert!(env.is_injective());
    Ok((vertices, env))
}

/// Recovers the path matrix of a map `⊕ I_{src} -> ⊕ I_{tgt}` that is the
/// Nakayama image of `⊕ P_{tgt} -> ⊕ P_{src}`; entry `[l][k]` lies in
/// `e_{tgt[l]} A e_{src[k]}`.
fn path_matrix_of_injective_map(
    alg: &BoundQuiverAlgebra,
    src: &[usize],
    tgt: &[usize],
    map: &ModuleMap,
) -> PathMatrix {
    tgt.iter()
        .enumerate()
        .map(|(l, &w)| {
            let to = block_offsets(alg, w, tgt, true);
            let so = block_offsets(alg, w, src, true);
            // the functional "evaluate at e_w" inside I_w
            let e_row = to[l]
                + alg
                    .pair_basis(w, w)
                    .iter()
                    .position(|&b| b == alg.trivial_index(w))
                    .unwrap();
            src.iter()
                .enumerate()
                .map(|(k, &v)| {
                    let sparse = alg
                        .pair_basis(w, v)
                        .iter()
                        .enumerate()
                        .map(|(pos, &b)| (b, map.component(w).get(e_row, so[k] + pos)))
                        .filter(|x| x.1 != 0)
                        .collect();
                    alg.element_from_sparse(&sparse)
                })
                .collect()
        })
        .collect()
}

/// `τ⁻¹M` from the minimal injective copresentation `0 -> M -> E0 -> E1`,
/// as the cokernel of the inverse Nakayama image `P(E0) -> P(E1)`.
pub fn tau_inv(m: &Representation) -> Result<Representation> {
    let alg = m.algebra().clone();
    let (e0_vertices, env0) = injective_envelope(m)?;
    let coker = map_parts(&env0)?;
    let (e1_vertices, env1) = injective_envelope(&coker.cokernel)?;
    let composite = coker.cokernel_projection.then(&env1)?;
    let q = path_matrix_of_injective_map(&alg, &e0_vertices, &e1_vertices, &composite);
    debug_assert!(nakayama_map(&alg, &e0_vertices, &e1_vertices, &q)
        .map(|n| n.components() == composite.components())
        .unwrap_or(false));
    let p = projective_map(&alg, &e0_vertices, &e1_vertices, &q)?;
    Ok(map_parts(&p)?.cokernel)
}

/// `dim Ext¹(M, N)` from `0 -> Hom(M,N) -> Hom(P0,N) -> Hom(ΩM,N) -> Ext¹(M,N) -> 0`.
pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.same_algebra(n)?;
    let (_, epi) = projective_cover(m);
    let omega = map_parts(&epi)?.kernel;
    let a = hom_dim(&omega, n)?;
    let b = hom_dim(epi.source(), n)?;
    let c = hom_dim(m, n)?;
    Ok(a + c - b)
}

/// `Hom(M, τM) = 0`.
pub fn is_tau_rigid(m: &Representation) -> Result<bool> {
    let t = tau(m)?.module;
    Ok(hom_dim(m, &t)? == 0)
}

