//! Support τ-tilting pairs, left mutation and the mutation poset.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::homology::{ext1_dim, is_tau_rigid};
use crate::linalg::{subspace, Matrix};
use crate::rep::{
    analyse_endomorphisms, decompose, direct_sum, enumerate_submodules, hom_basis, hom_dim,
    in_fac, indecomposables_isomorphic, map_parts, power, trace_bases, EndoAnalysis, ModuleMap,
    Representation,
};

/// A pair `(M, P)`: basic module given by its indecomposable summands and
/// the vertices of the projective part `P = ⊕ P_v`.
#[derive(Clone, Debug)]
pub struct STPair {
    alg: Arc<BoundQuiverAlgebra>,
    summands: Vec<Representation>,
    proj: Vec<usize>,
}

impl STPair {
    /// No validation; see [`STPair::checked`].
    pub fn new(alg: Arc<BoundQuiverAlgebra>, summands: Vec<Representation>, mut proj: Vec<usize>) -> Self {
        proj.sort_unstable();
        STPair { alg, summands, proj }
    }

    /// Decomposes `module` and validates the pair.
    pub fn checked(module: &Representation, proj: Vec<usize>) -> Result<Self> {
        if !is_stau_pair(module, &proj)? {
            return Err(Error::InvalidPair("not a support τ-tilting pair".into()));
        }
        let summands = decompose(module)?.into_iter().map(|(r, _)| r).collect();
        Ok(STPair::new(module.algebra().clone(), summands, proj))
    }

    /// `(A, 0)`.
    pub fn top(alg: &Arc<BoundQuiverAlgebra>) -> Self {
        let summands = (0..alg.num_vertices()).map(|v| Representation::projective(alg, v)).collect();
        STPair::new(alg.clone(), summands, vec![])
    }

    /// `(0, A)`.
    pub fn bottom(alg: &Arc<BoundQuiverAlgebra>) -> Self {
        STPair::new(alg.clone(), vec![], (0..alg.num_vertices()).collect())
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.alg
    }

    pub fn summands(&self) -> &[Representation] {
        &self.summands
    }

    pub fn proj_part(&self) -> &[usize] {
        &self.proj
    }

    pub fn module(&self) -> Representation {
        direct_sum(&self.alg, &self.summands).expect("summands share the algebra")
    }

    pub fn is_tau_tilting(&self) -> bool {
        self.proj.is_empty()
    }
}

/// `M` is τ-rigid, `Hom(P, M) = 0` and `|M| + |P|` is the number of vertices.
pub fn is_stau_pair(m: &Representation, proj: &[usize]) -> Result<bool> {
    let n = m.algebra().num_vertices();
    let mut p = proj.to_vec();
    p.sort_unstable();
    p.dedup();
    if p.len() != proj.len() || p.iter().any(|&v| v >= n) {
        return Ok(false);
    }
    if p.iter().any(|&v| m.dims()[v] != 0) {
        return Ok(false);
    }
    let parts = decompose(m)?;
    if parts.len() + p.len() != n {
        return Ok(false);
    }
    is_tau_rigid(m)
}

pub fn is_sincere(m: &Representation) -> bool {
    m.dims().iter().all(|&d| d > 0)
}

/// Outcome of a left mutation.
#[derive(Clone, Debug)]
pub enum Mutation {
    Downward(STPair),
    /// `X ∈ Fac U`: the exchange at this summand goes up.
    NotDownward,
}

/// The map `X -> ⊕ U_j^{h_j}` stacking a basis of each `Hom(X, U_j)`.
pub fn universal_map(x: &Representation, others: &[Representation]) -> Result<ModuleMap> {
    let alg = x.algebra();
    let mut maps = Vec::new();
    let mut targets = Vec::new();
    for u in others {
        for h in hom_basis(x, u)? {
            maps.push(h);
            targets.push(u.clone());
        }
    }
    let target = direct_sum(alg, &targets)?;
    let comps = (0..alg.num_vertices())
        .map(|v| {
            let mut c = Matrix::zeros(x.field(), 0, x.dims()[v]);
            for h in &maps {
                c = c.vstack(h.component(v)).unwrap();
            }
            c
        })
        .collect();
    ModuleMap::new(x.clone(), target, comps)
}

/// Left mutation of `pair` at module summand `i`.
pub fn left_mutation(pair: &STPair, i: usize) -> Result<Mutation> {
    let alg = pair.algebra();
    let x = pair
        .summands
        .get(i)
        .ok_or_else(|| Error::InvalidPair(format!("no module summand {i}")))?;
    let others: Vec<Representation> = pair
        .summands
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, r)| r.clone())
        .collect();
    let u = direct_sum(alg, &others)?;
    if in_fac(&u, x)? {
        return Ok(Mutation::NotDownward);
    }
    let map = universal_map(x, &others)?;
    let coker = map_parts(&map)?.cokernel;
    let mut fresh: Vec<Representation> = Vec::new();
    for (c, _) in decompose(&coker)? {
        let mut in_add_u = false;
        for o in &others {
            if indecomposables_isomorphic(o, &c)? {
                in_add_u = true;
                break;
            }
        }
        if !in_add_u {
            fresh.push(c);
        }
    }
    match fresh.len() {
        1 => {
            let mut summands = others;
            summands.push(fresh.pop().unwrap());
            Ok(Mutation::Downward(STPair::new(alg.clone(), summands, pair.proj.clone())))
        }
        0 => {
            let candidates: Vec<usize> = (0..alg.num_vertices())
                .filter(|v| !pair.proj.contains(v) && u.dims()[*v] == 0)
                .collect();
            if candidates.len() != 1 {
                return Err(Error::AmbiguousCompletion(format!(
                    "{} candidate vertices for the projective part",
                    candidates.len()
                )));
            }
            let mut proj = pair.proj.clone();
            proj.push(candidates[0]);
            Ok(Mutation::Downward(STPair::new(alg.clone(), others, proj)))
        }
        k => Err(Error::AmbiguousCompletion(format!(
            "{k} new summands in the cokernel of the universal map"
        ))),
    }
}

/// Names indecomposable modules: Loewy words for uniserials, dimension
/// vectors with an index otherwise. Isomorphic modules get the same name.
#[derive(Clone, Debug, Default)]
pub struct Labeler {
    by_base: HashMap<String, Vec<(Representation, String)>>,
}

impl Labeler {
    pub fn new() -> Self {
        Self::default()
    }

    /// Label of an indecomposable module.
    pub fn label(&mut self, m: &Representation) -> Result<String> {
        let (base, uniserial) = match m.loewy_word() {
            Some(w) => (w, true),
            None => {
                let d: Vec<String> = m.dims().iter().map(|x| x.to_string()).collect();
                (format!("[{}]", d.join(",")), false)
            }
        };
        let entries = self.by_base.entry(base.clone()).or_default();
        for (r, l) in entries.iter() {
            if r.dims() == m.dims() && indecomposables_isomorphic(r, m)? {
                return Ok(l.clone());
            }
        }
        let k = entries.len();
        let label = if uniserial && k == 0 { base } else { format!("{base}#{}", k + 1) };
        entries.push((m.clone(), label.clone()));
        Ok(label)
    }
}

/// `ind(M / rad_Γ M)` for `Γ = End(M)`, one brick per summand surviving.
pub fn phi(pair: &STPair) -> Result<Vec<Representation>> {
    let mut bricks: Vec<Representation> = Vec::new();
    for (i, mi) in pair.summands.iter().enumerate() {
        let mut sub: Vec<Matrix> = mi.dims().iter().map(|&d| Matrix::zeros(mi.field(), d, 0)).collect();
        for (j, mj) in pair.summands.iter().enumerate() {
            if i == j {
                continue;
            }
            let t = trace_bases(mj, mi)?;
            sub = sub.iter().zip(&t).map(|(a, b)| subspace::sum(a, b)).collect();
        }
        if let EndoAnalysis::Local { radical } = analyse_endomorphisms(mi)? {
            for r in radical {
                sub = sub.iter().zip(r.image_bases()).map(|(a, b)| subspace::sum(a, &b)).collect();
            }
        } else {
            return Err(Error::InvalidPair("pair summand is decomposable".into()));
        }
        let (q, _) = mi.quotient(&sub)?;
        if q.is_zero() {
            continue;
        }
        let mut dup = false;
        for b in &bricks {
            if indecomposables_isomorphic(b, &q)? {
                dup = true;
                break;
            }
        }
        if !dup {
            bricks.push(q);
        }
    }
    Ok(bricks)
}

/// Each member has one-dimensional endomorphisms; distinct members are
/// Hom-orthogonal.
pub fn is_semibrick(bricks: &[Representation]) -> Result<bool> {
    for (i, b) in bricks.iter().enumerate() {
        if hom_dim(b, b)? != 1 {
            return Ok(false);
        }
        for (j, c) in bricks.iter().enumerate() {
            if i != j && hom_dim(b, c)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every summand of `p1` lies in `Fac` of the module of `p2`.
pub fn fac_leq(p1: &STPair, p2: &STPair) -> Result<bool> {
    let m2 = p2.module();
    for s in &p1.summands {
        if !in_fac(&m2, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiset equality up to isomorphism of two lists of indecomposables.
pub fn same_indecomposables(a: &[Representation], b: &[Representation]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    for x in a {
        let mut hit = false;
        for (j, y) in b.iter().enumerate() {
            if !used[j] && x.dims() == y.dims() && indecomposables_isomorphic(x, y)? {
                used[j] = true;
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

/// Quotients of `M` by every submodule, within the enumeration caps.
pub fn quotients(m: &Representation, vector_cap: u64, count_cap: usize) -> Result<Vec<Representation>> {
    enumerate_submodules(m, vector_cap, count_cap)?
        .iter()
        .map(|s| m.quotient(s).map(|q| q.0))
        .collect()
}

/// Whether `candidate` is Ext-projective in `Fac M`, checked against the
/// quotients of `M ⊕ M`.
pub fn ext_projective_check(pair: &STPair, candidate: &Representation, vector_cap: u64, count_cap: usize) -> Result<bool> {
    let m = pair.module();
    if !in_fac(&m, candidate)? {
        return Ok(false);
    }
    for q in quotients(&power(&m, 2), vector_cap, count_cap)? {
        if ext1_dim(candidate, &q)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct PosetNode {
    pub pair: STPair,
    /// Registry ids of the module summands, in label order.
    pub summand_ids: Vec<usize>,
    pub label: String,
    pub depth: usize,
    pub semibrick: Vec<Representation>,
    pub semibrick_labels: Vec<String>,
}

impl PosetNode {
    pub fn summand_labels<'a>(&self, poset: &'a STPoset) -> Vec<&'a str> {
        self.summand_ids.iter().map(|&i| poset.module_labels[i].as_str()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetEdge {
    pub from: usize,
    pub to: usize,
    /// Label of the summand that was exchanged.
    pub mutated: String,
}

/// The support τ-tilting poset with its Hasse quiver.
#[derive(Clone, Debug)]
pub struct STPoset {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub nodes: Vec<PosetNode>,
    pub edges: Vec<PosetEdge>,
    /// Indecomposable summands seen during enumeration, by registry id.
    pub modules: Vec<Representation>,
    pub module_labels: Vec<String>,
}

impl STPoset {
    pub fn top(&self) -> usize {
        0
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.from == i).map(|e| e.to)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub node_cap: usize,
    /// Largest total dimension allowed for a summand.
    pub dim_cap: usize,
    /// `None` runs on the calling thread; `Some(k)` expands frontiers on a
    /// pool of `k` threads.
    pub threads: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            node_cap: 10_000,
            dim_cap: 64,
            threads: None,
        }
    }
}

struct Registry {
    modules: Vec<Representation>,
    labels: Vec<String>,
    labeler: Labeler,
}

impl Registry {
    fn intern(&mut self, m: &Representation) -> Result<usize> {
        for (i, r) in self.modules.iter().enumerate() {
            if r.dims() == m.dims() && indecomposables_isomorphic(r, m)? {
                return Ok(i);
            }
        }
        let label = self.labeler.label(m)?;
        self.modules.push(m.clone());
        self.labels.push(label);
        Ok(self.modules.len() - 1)
    }
}

fn node_label(names: &[String], summand_labels: &[&str], proj: &[usize]) -> String {
    let mods = if summand_labels.is_empty() {
        "0".to_string()
    } else {
        summand_labels.iter().map(|l| format!("({l})")).collect::<String>()
    };
    if proj.is_empty() {
        mods
    } else {
        let p: Vec<&str> = proj.iter().map(|&v| names[v].as_str()).collect();
        format!("{mods} ; P{{{}}}", p.join(","))
    }
}

/// Breadth-first closure of `(A, 0)` under downward left mutations.
pub fn enumerate_stau(alg: &Arc<BoundQuiverAlgebra>, opts: EnumOptions) -> Result<STPoset> {
    match opts.threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::CapExceeded(format!("thread pool: {e}")))?;
            pool.install(|| enumerate_inner(alg, opts, true))
        }
        None => enumerate_inner(alg, opts, false),
    }
}

type Key = (Vec<usize>, Vec<usize>);

fn enumerate_inner(alg: &Arc<BoundQuiverAlgebra>, opts: EnumOptions, parallel: bool) -> Result<STPoset> {
    let names = alg.quiver().vertices().to_vec();
    let mut reg = Registry {
        modules: Vec::new(),
        labels: Vec::new(),
        labeler: Labeler::new(),
    };
    let mut nodes: Vec<(STPair, Vec<usize>, usize)> = Vec::new();
    let mut index: HashMap<Key, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize, String)> = Vec::new();

    let canonical = |pair: &STPair, reg: &mut Registry| -> Result<(STPair, Key)> {
        let mut ids = Vec::with_capacity(pair.summands.len());
        for s in &pair.summands {
            if s.total_dim() > opts.dim_cap {
                return Err(Error::CapExceeded(format!(
                    "summand of dimension {} exceeds the cap {}",
                    s.total_dim(),
                    opts.dim_cap
                )));
            }
            ids.push(reg.intern(s)?);
        }
        ids.sort_by(|a, b| reg.labels[*a].cmp(&reg.labels[*b]).then(a.cmp(b)));
        let summands = ids.iter().map(|&i| reg.modules[i].clone()).collect();
        let p = STPair::new(pair.alg.clone(), summands, pair.proj.clone());
        let key = (ids, p.proj.clone());
        Ok((p, key))
    };

    let (top, key) = canonical(&STPair::top(alg), &mut reg)?;
    index.insert(key.clone(), 0);
    nodes.push((top, key.0, 0));
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let jobs: Vec<(usize, usize)> = frontier
            .iter()
            .flat_map(|&n| (0..nodes[n].0.summands.len()).map(move |i| (n, i)))
            .collect();
        let run = |&(n, i): &(usize, usize)| left_mutation(&nodes[n].0, i);
        let results: Vec<Result<Mutation>> = if parallel {
            jobs.par_iter().map(run).collect()
        } else {
            jobs.iter().map(run).collect()
        };
        let mut next = Vec::new();
        for (&(n, i), res) in jobs.iter().zip(results) {
            let Mutation::Downward(pair) = res? else { continue };
            let (pair, key) = canonical(&pair, &mut reg)?;
            let target = match index.get(&key) {
                Some(&t) => t,
                None => {
                    if nodes.len() >= opts.node_cap {
                        return Err(Error::CapExceeded(format!(
                            "more than {} support τ-tilting pairs",
                            opts.node_cap
                        )));
                    }
                    let t = nodes.len();
                    index.insert(key.clone(), t);
                    nodes.push((pair, key.0, depth));
                    next.push(t);
                    t
                }
            };
            let mutated = reg.labels[nodes[n].1[i]].clone();
            edges.push((n, target, mutated));
        }
        frontier = next;
    }

    // canonical order: depth, then label
    let labelled: Vec<String> = nodes
        .iter()
        .map(|(p, ids, _)| {
            let ls: Vec<&str> = ids.iter().map(|&i| reg.labels[i].as_str()).collect();
            node_label(&names, &ls, &p.proj)
        })
        .collect();
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&a, &b| nodes[a].2.cmp(&nodes[b].2).then(labelled[a].cmp(&labelled[b])));
    let mut new_id = vec![0; nodes.len()];
    for (k, &o) in order.iter().enumerate() {
        new_id[o] = k;
    }
    let mut labeler = reg.labeler;
    let mut out_nodes = Vec::with_capacity(nodes.len());
    for &o in &order {
        let (pair, ids, depth) = &nodes[o];
        let semibrick = phi(pair)?;
        let mut semibrick_labels = semibrick
            .iter()
            .map(|b| labeler.label(b))
            .collect::<Result<Vec<_>>>()?;
        semibrick_labels.sort();
        out_nodes.push(PosetNode {
            pair: pair.clone(),
            summand_ids: ids.clone(),
            label: labelled[o].clone(),
            depth: *depth,
            semibrick,
            semibrick_labels,
        });
    }
    let mut out_edges: Vec<PosetEdge> = edges
        .into_iter()
        .map(|(f, t, m)| PosetEdge {
            from: new_id[f],
            to: new_id[t],
            mutated: m,
        })
        .collect();
    out_edges.sort_by(|a, b| (a.from, a.to).cmp(&(b.from, b.to)));
    out_edges.dedup_by(|a, b| a.from == b.from && a.to == b.to);
    Ok(STPoset {
        algebra: alg.clone(),
        nodes: out_nodes,
        edges: out_edges,
        modules: reg.modules,
        module_labels: reg.labels,
    })
}

/// The node whose semibrick is `sb`, up to isomorphism.
pub fn pt_lookup(sb: &[Representation], poset: &STPoset) -> Result<usize> {
    for (i, n) in poset.nodes.iter().enumerate() {
        if same_indecomposables(&n.semibrick, sb)? {
            return Ok(i);
        }
    }
    Err(Error::NotFound("no node with this semibrick".into()))
}
