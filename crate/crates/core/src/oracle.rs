//! Slow reference computations used to cross-check the main algorithms.

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::homology::is_tau_rigid;
use crate::linalg::{FieldPrime, Matrix};
use crate::rep::{
    are_isomorphic, direct_sum, enumerate_submodules, hom_basis, layers, power, ModuleMap, Representation,
};

fn increment(x: &mut [u32], p: u32) {
    for c in x.iter_mut() {
        *c += 1;
        if *c < p {
            return;
        }
        *c = 0;
    }
}

/// Every tuple of component matrices satisfying the intertwiner law, as
/// flattened coordinate vectors. Exponential in `Σ_v dim M_v dim N_v`.
pub fn brute_force_homs(m: &Representation, n: &Representation) -> Vec<Vec<u32>> {
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

/// All elements of the span of `maps`, flattened like [`brute_force_homs`].
pub fn span_elements(field: FieldPrime, maps: &[ModuleMap], len: usize) -> Vec<Vec<u32>> {
    let flat: Vec<Vec<u32>> = maps
        .iter()
        .map(|m| m.components().iter().flat_map(|c| c.entries().iter().copied()).collect())
        .collect();
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; maps.len()];
    for _ in 0..field.count_pow(maps.len()) {
        let mut v = vec![0u32; len];
        for (c, f) in coeffs.iter().zip(&flat) {
            for (acc, &x) in v.iter_mut().zip(f) {
                *acc = field.add(*acc, field.mul(*c, x));
            }
        }
        out.push(v);
        increment(&mut coeffs, field.p());
    }
    out
}

/// Whether the span of `hom_basis(M, N)` is exactly the set of brute-force
/// intertwiners.
pub fn hom_span_matches(m: &Representation, n: &Representation) -> Result<bool> {
    let len: usize = (0..m.dims().len()).map(|v| m.dims()[v] * n.dims()[v]).sum();
    let mut a = span_elements(m.field(), &hom_basis(m, n)?, len);
    let mut b = brute_force_homs(m, n);
    a.sort();
    b.sort();
    Ok(a == b)
}

/// `N ∈ Fac M` decided by searching the quotients of `M^k` for a copy of `N`,
/// with `k = dim top N`: maps whose images cover `top N` already cover `N`,
/// and `k` of them suffice.
pub fn fac_by_quotients(m: &Representation, n: &Representation, vector_cap: u64, count_cap: usize) -> Result<bool> {
    if n.is_zero() {
        return Ok(true);
    }
    if m.is_zero() {
        return Ok(false);
    }
    let big = power(m, layers(n)?.top.total_dim());
    for sub in enumerate_submodules(&big, vector_cap, count_cap)? {
        let fits = sub
            .iter()
            .zip(big.dims().iter().zip(n.dims()))
            .all(|(s, (&b, &d))| b >= d && b - s.cols() == d);
        if !fits {
            continue;
        }
        let (q, _) = big.quotient(&sub)?;
        if are_isomorphic(&q, n)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Indecomposable interval modules of a linear quiver algebra, one per
/// nonzero path of the basis (trivial paths give the simples).
pub fn path_uniserials(alg: &Arc<BoundQuiverAlgebra>) -> Vec<Representation> {
    alg.basis()
        .iter()
        .map(|p| crate::corpus::uniserial(alg, p.source, &p.arrows))
        .collect()
}

/// `M` is τ-rigid and vanishes on the vertices of `P`.
pub fn is_tau_rigid_pair(m: &Representation, proj: &[usize]) -> Result<bool> {
    if proj.iter().any(|&v| m.dims()[v] != 0) {
        return Ok(false);
    }
    is_tau_rigid(m)
}

/// Support τ-tilting pairs among subsets of `indecs` and subsets of vertices,
/// checked straight from the definition. Returns the pairs as (summand
/// indices, vertices).
pub fn brute_force_pairs(
    alg: &Arc<BoundQuiverAlgebra>,
    indecs: &[Representation],
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let n = alg.num_vertices();
    let k = indecs.len();
    assert!(k < 24, "too many modules for subset enumeration");
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let chosen: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        if chosen.len() > n {
            continue;
        }
        let parts: Vec<Representation> = chosen.iter().map(|&i| indecs[i].clone()).collect();
        let m = direct_sum(alg, &parts)?;
        if !is_tau_rigid(&m)? {
            continue;
        }
        let zero: Vec<usize> = (0..n).filter(|&v| m.dims()[v] == 0).collect();
        let need = n - chosen.len();
        // P must be a subset of the vertices where M vanishes, of size `need`
        for pmask in 0u32..(1 << zero.len()) {
            if pmask.count_ones() as usize != need {
                continue;
            }
            let proj: Vec<usize> = (0..zero.len()).filter(|i| pmask & (1 << i) != 0).map(|i| zero[i]).collect();
            out.push((chosen.clone(), proj));
        }
    }
    Ok(out)
}

/// No τ-rigid pair strictly contains `(M, P)` when adding one module from
/// `indecs` or one vertex.
pub fn is_maximal_rigid_pair(m: &Representation, proj: &[usize], indecs: &[Representation]) -> Result<bool> {
    let alg = m.algebra();
    for x in indecs {
        let mut already = false;
        for (s, _) in crate::rep::decompose(m)? {
            if s.dims() == x.dims() && are_isomorphic(&s, x)? {
                already = true;
                break;
            }
        }
        if already {
            continue;
        }
        let bigger = direct_sum(alg, &[m.clone(), x.clone()])?;
        if is_tau_rigid_pair(&bigger, proj)? {
            return Ok(false);
        }
    }
    for v in 0..alg.num_vertices() {
        if proj.contains(&v) {
            continue;
        }
        let mut p = proj.to_vec();
        p.push(v);
        if is_tau_rigid_pair(m, &p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether some map `M -> Q` is onto. A map is onto iff it stays onto after
/// projecting to `top Q`, so only the span of the projected Hom basis is
/// searched, exhaustively. Refuses when that span exceeds `span_cap` elements.
pub fn has_epimorphism(m: &Representation, q: &Representation, span_cap: u64) -> Result<bool> {
    let f = m.field();
    if q.is_zero() {
        return Ok(true);
    }
    if (0..q.dims().len()).any(|v| q.dims()[v] > m.dims()[v]) {
        return Ok(false);
    }
    let top = layers(q)?.top_projection;
    let need = top.target().dims().to_vec();
    // independent projected maps, flattened
    let mut kept: Vec<Vec<Matrix>> = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for g in hom_basis(m, q)? {
        let h = g.then(&top)?;
        let flat: Vec<i64> = h.components().iter().flat_map(|c| c.entries().iter().map(|&x| x as i64)).collect();
        if flat.is_empty() {
            continue;
        }
        rows.push(flat);
        if Matrix::from_rows(f, &rows).rank() == rows.len() {
            kept.push(h.components().to_vec());
        } else {
            rows.pop();
        }
    }
    if f.count_pow(kept.len()) > span_cap {
        return Err(Error::CapExceeded(format!("epimorphism search over {} generators", kept.len())));
    }
    let onto = |comps: &[Matrix]| comps.iter().zip(&need).all(|(c, &d)| c.rank() == d);
    let mut coeffs = vec![0u32; kept.len()];
    for _ in 0..f.count_pow(kept.len()) {
        let mut comps: Vec<Matrix> =
            (0..need.len()).map(|v| Matrix::zeros(f, need[v], m.dims()[v])).collect();
        for (c, k) in coeffs.iter().zip(&kept) {
            if *c != 0 {
                for (acc, x) in comps.iter_mut().zip(k) {
                    *acc = acc.add(&x.scale(*c))?;
                }
            }
        }
        if onto(&comps) {
            return Ok(true);
        }
        increment(&mut coeffs, f.p());
    }
    Ok(false)
}

/// Kuhn's augmenting paths: can every right vertex be matched?
fn saturates_right(adj: &[Vec<usize>], left: usize) -> bool {
    fn augment(r: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &l in &adj[r] {
            if seen[l] {
                continue;
            }
            seen[l] = true;
            if owner[l].is_none() || augment(owner[l].unwrap(), adj, seen, owner) {
                owner[l] = Some(r);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; left];
    (0..adj.len()).all(|r| augment(r, adj, &mut vec![false; left], &mut owner))
}

/// Quotients of `M` up to isomorphism, assuming `indecs` lists every
/// indecomposable. Candidates are direct sums of indecomposables whose tops
/// and dimension vectors fit inside those of `M`; a sum is kept when `M`
/// maps onto it. Quotients of quotients are quotients, so a multiset is only
/// grown from one that was kept.
///
/// When every summand involved has a simple top, a map between sums is onto
/// iff its blocks can be matched so each summand of the target receives an
/// epimorphism from its own summand of `M`. Otherwise the projected Hom span
/// is searched.
pub fn quotient_classes(m: &Representation, indecs: &[Representation], span_cap: u64) -> Result<Vec<Representation>> {
    let alg = m.algebra().clone();
    let top_m = layers(m)?.top.dims().to_vec();
    let mut pieces = Vec::new();
    for x in indecs {
        if has_epimorphism(m, x, span_cap)? {
            let t = layers(x)?.top.dims().to_vec();
            pieces.push((x.clone(), t));
        }
    }
    // summands of M, one entry per copy
    let mut m_parts = Vec::new();
    for (s, mult) in crate::rep::decompose(m)? {
        for _ in 0..mult {
            m_parts.push(s.clone());
        }
    }
    let simple_tops = pieces.iter().all(|(_, t)| t.iter().sum::<usize>() == 1)
        && m_parts.iter().all(|s| layers(s).map(|l| l.top.total_dim() == 1).unwrap_or(false));
    let mut epi = vec![vec![false; pieces.len()]; m_parts.len()];
    if simple_tops {
        for (i, s) in m_parts.iter().enumerate() {
            for (j, (x, _)) in pieces.iter().enumerate() {
                epi[i][j] = has_epimorphism(s, x, span_cap)?;
            }
        }
    }
    let is_quotient = |chosen: &[usize], q: &Representation| -> Result<bool> {
        if simple_tops {
            let adj: Vec<Vec<usize>> = chosen
                .iter()
                .map(|&j| (0..m_parts.len()).filter(|&i| epi[i][j]).collect())
                .collect();
            Ok(saturates_right(&adj, m_parts.len()))
        } else {
            has_epimorphism(m, q, span_cap)
        }
    };

    let mut out = vec![Representation::zero(&alg)];
    // (multiset as piece indices, dims, top dims)
    let mut stack: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> =
        vec![(Vec::new(), vec![0; m.dims().len()], vec![0; m.dims().len()])];
    while let Some((chosen, dims, top)) = stack.pop() {
        let from = chosen.last().copied().unwrap_or(0);
        for (i, (x, t)) in pieces.iter().enumerate().skip(from) {
            let nd: Vec<usize> = dims.iter().zip(x.dims()).map(|(a, b)| a + b).collect();
            let nt: Vec<usize> = top.iter().zip(t).map(|(a, b)| a + b).collect();
            if nd.iter().zip(m.dims()).any(|(a, b)| a > b) || nt.iter().zip(&top_m).any(|(a, b)| a > b) {
                continue;
            }
            let mut c = chosen.clone();
            c.push(i);
            let parts: Vec<Representation> = c.iter().map(|&k| pieces[k].0.clone()).collect();
            let q = direct_sum(&alg, &parts)?;
            if c.len() == 1 || is_quotient(&c, &q)? {
                out.push(q);
                stack.push((c, nd, nt));
            }
        }
    }
    Ok(out)
}
