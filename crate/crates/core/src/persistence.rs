//! Incremental 1-dimensional persistent path homology.
//!
//! Edges enter in filtration order. A union-find splits them into negative
//! edges (merging components, forming the spanning forest) and positive
//! edges (closing a cycle). For each positive edge `e_s = (u, v)` a small
//! set `C_s` of new boundary cycles through `e_s` is generated; together
//! with the boundary basis of `G^{s-1}` it spans the boundary group of
//! `G^s`. Reducing `C_s` into the basis yields the persistence pairs: a
//! column that lands on low `k` pairs `(w(e_k), w(e_s))`.

use std::time::{Duration, Instant};

use crate::digraph::{EdgeId, Edge, FilteredDigraph, UnionFind, VertexId};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology_static::{tree_cycle, SpanningForest};
use crate::reduce::{Chain1, ReducedBasis};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PersistencePair {
    pub birth: f64,
    pub death: f64,
    pub birth_edge: EdgeId,
    pub death_edge: EdgeId,
}

impl PersistencePair {
    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }
}

/// A class that never dies, with a representative cycle.
#[derive(Clone, Debug, PartialEq)]
pub struct Essential<E> {
    pub birth: f64,
    pub birth_edge: EdgeId,
    pub cycle: Chain1<E>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PersistenceDiagram<E> {
    pub pairs: Vec<PersistencePair>,
    pub essentials: Vec<Essential<E>>,
}

impl<E> PersistenceDiagram<E> {
    /// Rank of `H_1` of the full graph.
    pub fn rank_h1(&self) -> usize {
        self.essentials.len()
    }

    /// Removes pairs with `birth == death`.
    pub fn drop_diagonal(&mut self) {
        self.pairs.retain(|p| p.birth != p.death);
    }

    /// Finite pairs as `(birth, death)` sorted, essentials as `(birth, inf)`.
    pub fn sorted_points(&self) -> Vec<(f64, f64)> {
        let mut pts: Vec<(f64, f64)> = self
            .pairs
            .iter()
            .map(|p| (p.birth, p.death))
            .chain(self.essentials.iter().map(|e| (e.birth, f64::INFINITY)))
            .collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        pts
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeSign {
    /// Joins two components.
    Negative,
    /// Closes a cycle.
    Positive,
}

/// Classifies edge `s` given the union-find over edges `0..s`, and merges
/// its endpoints when negative.
pub fn classify_edge(g: &FilteredDigraph, s: EdgeId, uf: &mut UnionFind) -> EdgeSign {
    let Edge { src, dst, .. } = *g.edge(s);
    if uf.union(src, dst) {
        EdgeSign::Negative
    } else {
        EdgeSign::Positive
    }
}

fn chain<F: Field>(f: &F, terms: &[(EdgeId, i64)]) -> Chain1<F::Elem> {
    Chain1::from_signed(f, terms)
}

/// Old out-edge ids from `x` (strictly before `s`).
fn old_out(g: &FilteredDigraph, x: VertexId, s: EdgeId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
    g.out_edges(x).iter().copied().filter(move |&(_, e)| e < s)
}

fn old_in(g: &FilteredDigraph, x: VertexId, s: EdgeId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
    g.in_edges(x).iter().copied().filter(move |&(_, e)| e < s)
}

/// Smallest `z` with old edges `(a, z)` and `(z, b)`, as `(z, e_az, e_zb)`.
fn smallest_old_two_path(
    g: &FilteredDigraph,
    a: VertexId,
    b: VertexId,
    s: EdgeId,
) -> Option<(VertexId, EdgeId, EdgeId)> {
    // scan whichever side is shorter; both lists are sorted by neighbour
    if g.out_edges(a).len() <= g.in_edges(b).len() {
        old_out(g, a, s).find_map(|(z, az)| g.edge_before(z, b, s).map(|zb| (z, az, zb)))
    } else {
        old_in(g, b, s).find_map(|(z, zb)| g.edge_before(a, z, s).map(|az| (z, az, zb)))
    }
}

/// Generating set `C_s` of the boundary cycles created by the positive edge
/// `s`. Edges with id `< s` form the old graph. Order: bigon, triangles,
/// quadrangles with `u` as source, quadrangles with `v` as sink.
pub fn gen_set<F: Field>(f: &F, g: &FilteredDigraph, s: EdgeId) -> Vec<Chain1<F::Elem>> {
    let Edge { src: u, dst: v, .. } = *g.edge(s);
    let mut out = Vec::new();

    if let Some(vu) = g.edge_before(v, u, s) {
        out.push(chain(f, &[(s, 1), (vu, 1)]));
    }

    // triangle with u source and v sink: one witness suffices
    if let Some((_, uw, wv)) = smallest_old_two_path(g, u, v, s) {
        out.push(chain(f, &[(uw, 1), (wv, 1), (s, -1)]));
    }
    // u source, v middle
    for (w, vw) in old_out(g, v, s) {
        if let Some(uw) = g.edge_before(u, w, s) {
            out.push(chain(f, &[(s, 1), (vw, 1), (uw, -1)]));
        }
    }
    // v sink, u middle
    for (x, xu) in old_in(g, u, s) {
        if let Some(xv) = g.edge_before(x, v, s) {
            out.push(chain(f, &[(xu, 1), (s, 1), (xv, -1)]));
        }
    }

    // quadrangles {u, w | v, z}: one z per successor w of v
    let mut m: Vec<(VertexId, VertexId, EdgeId, EdgeId, EdgeId)> = Vec::new();
    for (w, vw) in old_out(g, v, s) {
        if w == u {
            continue;
        }
        if let Some((z, uz, zw)) = smallest_old_two_path(g, u, w, s) {
            m.push((z, w, vw, uz, zw));
        }
    }
    m.sort_unstable_by_key(|t| (t.0, t.1));
    for group in m.chunk_by(|a, b| a.0 == b.0) {
        let z = group[0].0;
        // another u' with old (u', z) and (u', v) makes one member enough
        let keep = if has_common_old_in_neighbor(g, z, v, u, s) {
            1
        } else {
            group.len()
        };
        for &(_, _, vw, uz, zw) in &group[..keep] {
            out.push(chain(f, &[(s, 1), (vw, 1), (uz, -1), (zw, -1)]));
        }
    }

    // quadrangles {x, v | u, z}: one z per predecessor x of u
    let mut m: Vec<(VertexId, VertexId, EdgeId, EdgeId, EdgeId)> = Vec::new();
    for (x, xu) in old_in(g, u, s) {
        if x == v {
            continue;
        }
        if let Some((z, xz, zv)) = smallest_old_two_path(g, x, v, s) {
            m.push((z, x, xu, xz, zv));
        }
    }
    m.sort_unstable_by_key(|t| (t.0, t.1));
    for group in m.chunk_by(|a, b| a.0 == b.0) {
        let z = group[0].0;
        let keep = if has_common_old_out_neighbor(g, z, u, v, s) {
            1
        } else {
            group.len()
        };
        for &(_, _, xu, xz, zv) in &group[..keep] {
            out.push(chain(f, &[(xu, 1), (s, 1), (xz, -1), (zv, -1)]));
        }
    }
    out
}

/// Is there `y != skip` with old edges `(y, a)` and `(y, b)`?
fn has_common_old_in_neighbor(
    g: &FilteredDigraph,
    a: VertexId,
    b: VertexId,
    skip: VertexId,
    s: EdgeId,
) -> bool {
    let (short, other) = if g.in_edges(a).len() <= g.in_edges(b).len() {
        (a, b)
    } else {
        (b, a)
    };
    old_in(g, short, s).any(|(y, _)| y != skip && g.edge_before(y, other, s).is_some())
}

/// Is there `y != skip` with old edges `(a, y)` and `(b, y)`?
fn has_common_old_out_neighbor(
    g: &FilteredDigraph,
    a: VertexId,
    b: VertexId,
    skip: VertexId,
    s: EdgeId,
) -> bool {
    let (short, other) = if g.out_edges(a).len() <= g.out_edges(b).len() {
        (a, b)
    } else {
        (b, a)
    };
    old_out(g, short, s).any(|(y, _)| y != skip && g.edge_before(other, y, s).is_some())
}

/// Reduces each chain of `C_s` into `basis`; every surviving column with
/// low `k` records the pair `(w(e_k), w(e_s))`.
pub fn find_pairs<F: Field>(
    g: &FilteredDigraph,
    basis: &mut ReducedBasis<F>,
    generated: &[Chain1<F::Elem>],
    s: EdgeId,
) -> Vec<PersistencePair> {
    generated
        .iter()
        .filter_map(|c| basis.insert(c))
        .map(|k| PersistencePair {
            birth: g.weight(k),
            death: g.weight(s),
            birth_edge: k,
            death_edge: s,
        })
        .collect()
}

/// Everything the filtration pass produces.
#[derive(Clone, Debug)]
pub struct Persistence<F: Field> {
    pub diagram: PersistenceDiagram<F::Elem>,
    /// Reduced basis of the boundary group of the full graph.
    pub boundary: ReducedBasis<F>,
    /// `boundary` followed by the essential representatives: a reduced
    /// basis of the whole cycle space.
    pub cycle_basis: ReducedBasis<F>,
    pub forest: SpanningForest,
    pub signs: Vec<EdgeSign>,
    /// `sum_s |C_s|`.
    pub generated: usize,
    pub elapsed: Duration,
}

impl<F: Field> Persistence<F> {
    pub fn rank_z1(&self) -> usize {
        self.cycle_basis.rank()
    }

    pub fn rank_b1(&self) -> usize {
        self.boundary.rank()
    }

    pub fn rank_h1(&self) -> usize {
        self.diagram.rank_h1()
    }
}

/// Full persistence diagram of the edge filtration of `g`.
pub fn persistence<F: Field>(f: &F, g: &FilteredDigraph) -> Result<Persistence<F>> {
    let start = Instant::now();
    let mut uf = UnionFind::new(g.n());
    let mut basis = ReducedBasis::new(f.clone(), g.m());
    let mut pairs = Vec::new();
    let mut signs = Vec::with_capacity(g.m());
    let mut generated = 0;
    for s in 0..g.m() {
        let sign = classify_edge(g, s, &mut uf);
        signs.push(sign);
        if sign == EdgeSign::Negative {
            continue;
        }
        let cs = gen_set(f, g, s);
        generated += cs.len();
        pairs.extend(find_pairs(g, &mut basis, &cs, s));
    }

    let forest = SpanningForest::filtration(g);
    let z1 = g.cycle_rank();
    let target = z1 - basis.rank();
    let mut cycle_basis = basis.clone();
    let mut essentials = Vec::with_capacity(target);
    for e in (0..g.m()).filter(|&e| signs[e] == EdgeSign::Positive) {
        if essentials.len() == target {
            break;
        }
        let r = cycle_basis.reduce_column(&tree_cycle(f, g, &forest, e)?);
        let Some(low) = r.low() else { continue };
        if low != e || basis.column_with_low(e).is_some() {
            return Err(Error::Invariant(format!(
                "essential representative for edge {e} has low {low}"
            )));
        }
        cycle_basis.push_reduced(r.clone());
        essentials.push(Essential {
            birth: g.weight(e),
            birth_edge: e,
            cycle: r,
        });
    }
    if essentials.len() != target {
        return Err(Error::Invariant(format!(
            "found {} essential classes, expected {target}",
            essentials.len()
        )));
    }
    Ok(Persistence {
        diagram: PersistenceDiagram { pairs, essentials },
        boundary: basis,
        cycle_basis,
        forest,
        signs,
        generated,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};

    const F: PrimeField = PrimeField::DEFAULT;

    fn graph(n: usize, e: &[(usize, usize)]) -> FilteredDigraph {
        FilteredDigraph::from_unweighted(n, e).unwrap()
    }

    fn points<E>(d: &PersistenceDiagram<E>) -> Vec<(f64, f64)> {
        d.sorted_points()
    }

    #[test]
    fn first_edge_negative_and_star_all_negative() {
        let g = graph(4, &[(0, 1), (0, 2), (3, 0)]);
        let mut uf = UnionFind::new(4);
        for s in 0..3 {
            assert_eq!(classify_edge(&g, s, &mut uf), EdgeSign::Negative);
        }
    }

    #[test]
    fn quadrangle_fourth_edge_positive() {
        let g = graph(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]);
        let mut uf = UnionFind::new(4);
        let signs: Vec<_> = (0..4).map(|s| classify_edge(&g, s, &mut uf)).collect();
        assert_eq!(signs[3], EdgeSign::Positive);
        assert!(signs[..3].iter().all(|&x| x == EdgeSign::Negative));
    }

    #[test]
    fn bigon_generating_set() {
        let g = graph(2, &[(0, 1), (1, 0)]);
        assert_eq!(gen_set(&F, &g, 1), vec![chain(&F, &[(0, 1), (1, 1)])]);
    }

    fn triangle_plus_chord() -> FilteredDigraph {
        graph(3, &[(0, 1), (1, 2), (2, 0), (0, 2)])
    }

    #[test]
    fn triangle_plus_chord_generating_set() {
        let g = triangle_plus_chord();
        let cs = gen_set(&F, &g, 3);
        assert_eq!(
            cs,
            vec![
                chain(&F, &[(2, 1), (3, 1)]),
                chain(&F, &[(0, 1), (1, 1), (3, -1)]),
            ]
        );
    }

    #[test]
    fn triangle_plus_chord_pairs() {
        let g = triangle_plus_chord();
        let p = persistence(&F, &g).unwrap();
        assert_eq!(points(&p.diagram), vec![(3.0, 4.0), (4.0, 4.0)]);
        assert_eq!(p.rank_h1(), 0);
    }

    #[test]
    fn fan_of_three_quadrangles() {
        // v=0, u=1, w_i = 2..5, z_i = 5..8; (u, v) last
        let (v, u) = (0, 1);
        let mut e = Vec::new();
        for i in 0..3 {
            let (w, z) = (2 + i, 5 + i);
            e.push((v, w));
            e.push((z, w));
            e.push((u, z));
        }
        e.push((u, v));
        let g = graph(8, &e);
        let s = g.m() - 1;
        let cs = gen_set(&F, &g, s);
        assert_eq!(cs.len(), 3);
        let mut basis = ReducedBasis::new(F, g.m());
        let pairs = find_pairs(&g, &mut basis, &cs, s);
        assert_eq!(pairs.len(), 3);
    }

    #[test]
    fn quadrangle_pair() {
        let g = graph(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]);
        let p = persistence(&F, &g).unwrap();
        assert_eq!(
            p.diagram.pairs,
            vec![PersistencePair {
                birth: 4.0,
                death: 4.0,
                birth_edge: 3,
                death_edge: 3
            }]
        );
        assert!(p.diagram.essentials.is_empty());
    }

    #[test]
    fn spanned_chain_gives_no_pair() {
        let g = graph(2, &[(0, 1), (1, 0)]);
        let mut basis = ReducedBasis::new(F, 2);
        let cs = gen_set(&F, &g, 1);
        assert_eq!(find_pairs(&g, &mut basis, &cs, 1).len(), 1);
        assert!(find_pairs(&g, &mut basis, &cs, 1).is_empty());
    }

    #[test]
    fn directed_triangle_is_essential() {
        let g = graph(3, &[(0, 1), (1, 2), (2, 0)]);
        let p = persistence(&F, &g).unwrap();
        assert!(p.diagram.pairs.is_empty());
        assert_eq!(points(&p.diagram), vec![(3.0, f64::INFINITY)]);
        assert!(p.diagram.essentials[0].cycle.is_cycle(&F, &g));
    }

    #[test]
    fn bigon_pair() {
        let g = graph(2, &[(0, 1), (1, 0)]);
        let p = persistence(&RationalField, &g).unwrap();
        assert_eq!(points(&p.diagram), vec![(2.0, 2.0)]);
        assert_eq!(p.rank_h1(), 0);
    }

    #[test]
    fn drop_diagonal_filters_zero_persistence() {
        let g = triangle_plus_chord();
        let mut d = persistence(&F, &g).unwrap().diagram;
        d.drop_diagonal();
        assert_eq!(points(&d), vec![(3.0, 4.0)]);
    }

    #[test]
    fn disconnected_components() {
        let g = graph(5, &[(0, 1), (1, 0), (2, 3), (3, 4), (4, 2)]);
        let p = persistence(&F, &g).unwrap();
        assert_eq!(p.rank_h1(), 1);
        assert_eq!(p.rank_z1(), 2);
        assert_eq!(p.diagram.essentials[0].birth_edge, 4);
    }
}
