//! Minimal homology basis through annotations and the Horton family.
//!
//! The annotation of a cycle is its coordinate vector on the essential
//! block of the cycle basis `B ∪ H` built by the persistence pass. Two
//! cycles are homologous iff their annotations agree, so independence in
//! `H_1` becomes independence of short `g`-vectors.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};

use crate::digraph::{EdgeId, FilteredDigraph, VertexId};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology_static::tree_cycle;
use crate::persistence::{persistence, Persistence};
use crate::reduce::{Chain1, ReducedBasis};

/// Sum of the weights of edges with a nonzero coefficient.
pub fn cycle_length<E>(c: &Chain1<E>, g: &FilteredDigraph) -> f64
where
    E: Clone + PartialEq,
{
    c.iter().map(|(e, _)| g.weight(*e)).sum()
}

/// Per-edge annotation vectors of length `g = rank H_1`.
#[derive(Clone, Debug)]
pub struct Annotations<E> {
    pub rank: usize,
    pub edges: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq> Annotations<E> {
    /// `α(C) = Σ c_e α(e)`.
    pub fn of<F: Field<Elem = E>>(&self, f: &F, c: &Chain1<E>) -> Vec<E> {
        let mut out = vec![f.zero(); self.rank];
        for (e, coeff) in c.iter() {
            for (slot, a) in out.iter_mut().zip(&self.edges[*e]) {
                if !f.is_zero(a) {
                    *slot = f.add(slot, &f.mul(coeff, a));
                }
            }
        }
        out
    }
}

/// Solves `γ(T, e)` in the cycle basis for each non-tree edge and keeps the
/// essential block.
pub fn compute_annotations<F: Field>(
    g: &FilteredDigraph,
    p: &Persistence<F>,
) -> Result<Annotations<F::Elem>> {
    let f = p.cycle_basis.field();
    let offset = p.boundary.rank();
    let rank = p.cycle_basis.rank() - offset;
    let mut edges = vec![vec![f.zero(); rank]; g.m()];
    for (e, alpha) in edges.iter_mut().enumerate() {
        if p.forest.is_tree_edge(e) {
            continue;
        }
        let gamma = tree_cycle(f, g, &p.forest, e)?;
        let (rest, transcript) = p.cycle_basis.reduce_with_transcript(&gamma);
        if !rest.is_zero() {
            return Err(Error::Invariant(format!(
                "tree cycle of edge {e} is not in the span of the cycle basis"
            )));
        }
        for (j, x) in transcript {
            if j >= offset {
                alpha[j - offset] = f.add(&alpha[j - offset], &x);
            }
        }
    }
    Ok(Annotations { rank, edges })
}

#[derive(Clone, Debug, PartialEq)]
pub struct HortonCandidate<E> {
    pub root: VertexId,
    pub edge: EdgeId,
    pub cycle: Chain1<E>,
    pub length: f64,
}

#[derive(PartialEq)]
struct Entry(f64, VertexId);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on distance, then vertex
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortest-path tree of the undirected view from `root`. Among equal
/// distances the smallest predecessor vertex wins, then the smallest edge.
fn shortest_path_tree(
    g: &FilteredDigraph,
    root: VertexId,
) -> (Vec<f64>, Vec<Option<(VertexId, EdgeId)>>) {
    let n = g.n();
    let mut dist = vec![f64::INFINITY; n];
    let mut pred: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[root] = 0.0;
    heap.push(Entry(0.0, root));
    while let Some(Entry(d, x)) = heap.pop() {
        if done[x] {
            continue;
        }
        done[x] = true;
        for &(y, e) in g.undirected(x) {
            if done[y] {
                continue;
            }
            let nd = d + g.weight(e);
            let better = match nd.total_cmp(&dist[y]) {
                Ordering::Less => true,
                Ordering::Equal => pred[y].is_some_and(|(p, pe)| (x, e) < (p, pe)),
                Ordering::Greater => false,
            };
            if better {
                dist[y] = nd;
                pred[y] = Some((x, e));
                heap.push(Entry(nd, y));
            }
        }
    }
    (dist, pred)
}

fn check_positive(g: &FilteredDigraph) -> Result<()> {
    match g.edges().iter().find(|e| e.weight <= 0.0) {
        Some(e) => Err(Error::InvalidWeight(format!(
            "minimal bases need positive weights, got {}",
            e.weight
        ))),
        None => Ok(()),
    }
}

/// Horton family: for every root `v` and non-tree edge `{x, y}` the cycle
/// `P(v, x) + (x, y) + P(y, v)` when it is simple. Not deduplicated.
pub fn horton_candidates<F: Field>(
    f: &F,
    g: &FilteredDigraph,
) -> Result<Vec<HortonCandidate<F::Elem>>> {
    check_positive(g)?;
    let mut out = Vec::new();
    let mut mark = vec![usize::MAX; g.n()];
    for root in 0..g.n() {
        let (dist, pred) = shortest_path_tree(g, root);
        for (e, edge) in g.edges().iter().enumerate() {
            let (x, y) = (edge.src, edge.dst);
            if dist[x].is_infinite() || dist[y].is_infinite() {
                continue;
            }
            if pred[x].is_some_and(|p| p.1 == e) || pred[y].is_some_and(|p| p.1 == e) {
                continue;
            }
            // simple iff the two tree paths meet only at the root
            let stamp = root * g.m() + e;
            let mut a = x;
            while let Some((p, _)) = pred[a] {
                mark[a] = stamp;
                a = p;
            }
            let mut b = y;
            let mut simple = true;
            while let Some((p, _)) = pred[b] {
                if mark[b] == stamp {
                    simple = false;
                    break;
                }
                b = p;
            }
            if !simple {
                continue;
            }
            // walk root -> x, then e, then y -> root
            let mut terms = Vec::new();
            let mut a = x;
            while let Some((p, pe)) = pred[a] {
                terms.push((pe, if g.edge(pe).src == p { 1 } else { -1 }));
                a = p;
            }
            terms.push((e, 1));
            let mut b = y;
            while let Some((p, pe)) = pred[b] {
                terms.push((pe, if g.edge(pe).src == b { 1 } else { -1 }));
                b = p;
            }
            out.push(HortonCandidate {
                root,
                edge: e,
                length: dist[x] + edge.weight + dist[y],
                cycle: Chain1::from_signed(f, &terms),
            });
        }
    }
    Ok(out)
}

/// Keeps the first candidate per edge support and sorts by
/// `(length, support)`.
pub fn dedup_candidates<E: Clone + PartialEq>(
    candidates: Vec<HortonCandidate<E>>,
) -> Vec<HortonCandidate<E>> {
    let mut seen = HashSet::new();
    let mut out: Vec<(Vec<EdgeId>, HortonCandidate<E>)> = candidates
        .into_iter()
        .filter_map(|c| {
            let s = c.cycle.support();
            seen.insert(s.clone()).then_some((s, c))
        })
        .collect();
    out.sort_by(|a, b| a.1.length.total_cmp(&b.1.length).then_with(|| a.0.cmp(&b.0)));
    out.into_iter().map(|t| t.1).collect()
}

/// A minimal homology basis: `rank H_1` cycles of least total length.
pub fn minimal_basis<F: Field>(
    f: &F,
    g: &FilteredDigraph,
) -> Result<Vec<(Chain1<F::Elem>, f64)>> {
    let p = persistence(f, g)?;
    minimal_basis_from(f, g, &p)
}

/// [`minimal_basis`] reusing an existing persistence pass.
pub fn minimal_basis_from<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    p: &Persistence<F>,
) -> Result<Vec<(Chain1<F::Elem>, f64)>> {
    check_positive(g)?;
    let ann = compute_annotations(g, p)?;
    if ann.rank == 0 {
        return Ok(Vec::new());
    }
    let mut kept = ReducedBasis::new(f.clone(), ann.rank);
    let mut out = Vec::with_capacity(ann.rank);
    for cand in dedup_candidates(horton_candidates(f, g)?) {
        let alpha = Chain1::from_terms(f, ann.of(f, &cand.cycle).into_iter().enumerate());
        if kept.insert(&alpha).is_some() {
            out.push((cand.cycle, cand.length));
            if out.len() == ann.rank {
                return Ok(out);
            }
        }
    }
    Err(Error::Invariant(format!(
        "Horton family spans only {} of {} homology classes",
        out.len(),
        ann.rank
    )))
}
