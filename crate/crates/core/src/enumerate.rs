//! Arboricity-bounded enumeration in the undirected view.
//!
//! Both routines use the Chiba–Nishizeki schedule: vertices are processed
//! in non-increasing degree order (ties by index) and deleted once
//! processed, which bounds the total work by `O(arbor(G) * m)`. Bigons are
//! collapsed to a single undirected adjacency here.

use crate::digraph::{FilteredDigraph, VertexId};

/// `(u, v, W)`: every `w` in `W` is adjacent to both `u` and `v`, so any two
/// witnesses close an undirected quadrangle `u - w_i - v - w_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverTriple {
    pub u: VertexId,
    pub v: VertexId,
    pub witnesses: Vec<VertexId>,
}

/// Directed refinement of a [`CoverTriple`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypedList {
    /// Kind 1: `(u, w)` and `(w, v)` exist for each witness.
    Forward {
        u: VertexId,
        v: VertexId,
        witnesses: Vec<VertexId>,
    },
    /// Kind 2: `(v, w)` and `(w, u)` exist for each witness.
    Backward {
        u: VertexId,
        v: VertexId,
        witnesses: Vec<VertexId>,
    },
    /// Kind 3: `sources` point into both `u` and `v`; `sinks` are reached
    /// from both.
    Cross {
        u: VertexId,
        v: VertexId,
        sources: Vec<VertexId>,
        sinks: Vec<VertexId>,
    },
}

impl TypedList {
    pub fn kind(&self) -> u8 {
        match self {
            TypedList::Forward { .. } => 1,
            TypedList::Backward { .. } => 2,
            TypedList::Cross { .. } => 3,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            TypedList::Forward { witnesses, .. } | TypedList::Backward { witnesses, .. } => {
                witnesses.len()
            }
            TypedList::Cross { sources, sinks, .. } => sources.len() + sinks.len(),
        }
    }
}

struct Schedule {
    adj: Vec<Vec<VertexId>>,
    order: Vec<VertexId>,
}

impl Schedule {
    fn new(g: &FilteredDigraph) -> Self {
        let adj: Vec<Vec<VertexId>> = (0..g.n()).map(|v| g.neighbors(v)).collect();
        let mut order: Vec<VertexId> = (0..g.n()).collect();
        order.sort_by(|&a, &b| adj[b].len().cmp(&adj[a].len()).then(a.cmp(&b)));
        Self { adj, order }
    }
}

/// Every undirected triangle exactly once, as a sorted vertex triple.
pub fn list_triangles(g: &FilteredDigraph) -> Vec<[VertexId; 3]> {
    let Schedule { adj, order } = Schedule::new(g);
    let n = g.n();
    let mut removed = vec![false; n];
    let mut mark = vec![false; n];
    let mut out = Vec::new();
    for &v in &order {
        for &w in &adj[v] {
            if !removed[w] {
                mark[w] = true;
            }
        }
        for &u in &adj[v] {
            if removed[u] || !mark[u] {
                continue;
            }
            for &w in &adj[u] {
                if !removed[w] && w != v && mark[w] {
                    let mut t = [v, u, w];
                    t.sort_unstable();
                    out.push(t);
                }
            }
            mark[u] = false;
        }
        for &w in &adj[v] {
            mark[w] = false;
        }
        removed[v] = true;
    }
    out.sort_unstable();
    out
}

/// Cover triples such that every undirected 4-cycle `a - b - c - d` has a
/// triple with `{u, v}` one of its diagonals and the other diagonal among
/// the witnesses. Only triples with at least two witnesses are returned.
pub fn cover_quadrangles(g: &FilteredDigraph) -> Vec<CoverTriple> {
    let Schedule { adj, order } = Schedule::new(g);
    let n = g.n();
    let mut removed = vec![false; n];
    let mut bucket: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut touched: Vec<VertexId> = Vec::new();
    let mut out = Vec::new();
    for &v in &order {
        for &u in &adj[v] {
            if removed[u] {
                continue;
            }
            for &w in &adj[u] {
                if removed[w] || w == v {
                    continue;
                }
                if bucket[w].is_empty() {
                    touched.push(w);
                }
                bucket[w].push(u);
            }
        }
        touched.sort_unstable();
        for &w in &touched {
            let witnesses = std::mem::take(&mut bucket[w]);
            if witnesses.len() >= 2 {
                out.push(CoverTriple { u: v, v: w, witnesses });
            }
        }
        touched.clear();
        removed[v] = true;
    }
    out
}

/// Splits a triple into its kind 1, 2 and 3 lists, in that order. A witness
/// joined to `u` or `v` by a bigon can qualify for more than one kind.
pub fn derive_typed_lists(t: &CoverTriple, g: &FilteredDigraph) -> [TypedList; 3] {
    let (u, v) = (t.u, t.v);
    let pick = |pred: &dyn Fn(VertexId) -> bool| -> Vec<VertexId> {
        t.witnesses.iter().copied().filter(|&w| pred(w)).collect()
    };
    [
        TypedList::Forward {
            u,
            v,
            witnesses: pick(&|w| g.has_edge(u, w) && g.has_edge(w, v)),
        },
        TypedList::Backward {
            u,
            v,
            witnesses: pick(&|w| g.has_edge(v, w) && g.has_edge(w, u)),
        },
        TypedList::Cross {
            u,
            v,
            sources: pick(&|w| g.has_edge(w, u) && g.has_edge(w, v)),
            sinks: pick(&|w| g.has_edge(u, w) && g.has_edge(v, w)),
        },
    ]
}

/// Degeneracy of the undirected view; an upper bound on the arboricity.
pub fn degeneracy(g: &FilteredDigraph) -> usize {
    let adj: Vec<Vec<VertexId>> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; g.n()];
    let mut best = 0;
    for _ in 0..g.n() {
        let v = (0..g.n())
            .filter(|&v| !removed[v])
            .min_by_key(|&v| deg[v])
            .expect("vertices remain");
        best = best.max(deg[v]);
        removed[v] = true;
        for &w in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> FilteredDigraph {
        FilteredDigraph::from_unweighted(n, e).unwrap()
    }

    #[test]
    fn single_triangle() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(list_triangles(&g), vec![[0, 1, 2]]);
    }

    #[test]
    fn complete_digraph_on_four() {
        let e: Vec<_> = (0..4)
            .flat_map(|a| (0..4).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        let g = graph(4, &e);
        assert_eq!(list_triangles(&g).len(), 4);
    }

    #[test]
    fn bipartite_has_no_triangles() {
        let e: Vec<_> = (0..4).flat_map(|a| (4..8).map(move |b| (a, b))).collect();
        assert!(list_triangles(&graph(8, &e)).is_empty());
    }

    #[test]
    fn single_quadrangle_is_covered() {
        let g = graph(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]);
        let triples = cover_quadrangles(&g);
        assert!(triples.iter().any(|t| {
            let diag = (t.u.min(t.v), t.u.max(t.v));
            let mut w = t.witnesses.clone();
            w.sort_unstable();
            (diag == (0, 2) && w == [1, 3]) || (diag == (1, 3) && w == [0, 2])
        }));
    }

    #[test]
    fn triangle_has_no_cover() {
        assert!(cover_quadrangles(&graph(3, &[(0, 1), (1, 2), (0, 2)])).is_empty());
    }

    #[test]
    fn quadrangle_typed_lists() {
        let g = graph(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]);
        let t = CoverTriple {
            u: 0,
            v: 2,
            witnesses: vec![1, 3],
        };
        let [fwd, bwd, cross] = derive_typed_lists(&t, &g);
        assert_eq!(
            fwd,
            TypedList::Forward {
                u: 0,
                v: 2,
                witnesses: vec![1, 3]
            }
        );
        assert_eq!(bwd.size(), 0);
        assert_eq!(cross.size(), 0);
    }

    #[test]
    fn directed_four_cycle_lists_are_unusable() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let t = CoverTriple {
            u: 0,
            v: 2,
            witnesses: vec![1, 3],
        };
        let lists = derive_typed_lists(&t, &g);
        // one witness per direction: no pair, so no boundary quadrangle
        match &lists[0] {
            TypedList::Forward { witnesses, .. } => assert_eq!(witnesses, &[1]),
            _ => unreachable!(),
        }
        match &lists[1] {
            TypedList::Backward { witnesses, .. } => assert_eq!(witnesses, &[3]),
            _ => unreachable!(),
        }
        match &lists[2] {
            TypedList::Cross { sources, sinks, .. } => {
                assert!(sources.is_empty() && sinks.is_empty())
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn mixed_witnesses_split_by_kind() {
        // w=1 forward, w=3 backward, w=4 source into both, w=5 sink of both
        let g = graph(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2), (0, 5), (2, 5)],
        );
        let t = CoverTriple {
            u: 0,
            v: 2,
            witnesses: vec![1, 3, 4, 5],
        };
        let lists = derive_typed_lists(&t, &g);
        assert_eq!(
            lists[0],
            TypedList::Forward {
                u: 0,
                v: 2,
                witnesses: vec![1]
            }
        );
        assert_eq!(
            lists[1],
            TypedList::Backward {
                u: 0,
                v: 2,
                witnesses: vec![3]
            }
        );
        assert_eq!(
            lists[2],
            TypedList::Cross {
                u: 0,
                v: 2,
                sources: vec![4],
                sinks: vec![5]
            }
        );
    }

    #[test]
    fn fan_cover_is_linear() {
        // two hubs joined through ls sinks and lt sources
        let (ls, lt) = (6, 7);
        let mut e = Vec::new();
        for i in 0..ls {
            e.push((0, 2 + i));
            e.push((1, 2 + i));
        }
        for j in 0..lt {
            e.push((2 + ls + j, 0));
            e.push((2 + ls + j, 1));
        }
        let g = graph(2 + ls + lt, &e);
        let triples = cover_quadrangles(&g);
        let total: usize = triples.iter().map(|t| t.witnesses.len()).sum();
        assert_eq!(total, ls + lt);
        assert_eq!(triples.len(), 1);
    }

    #[test]
    fn degeneracy_of_small_graphs() {
        assert_eq!(degeneracy(&graph(3, &[(0, 1), (1, 2), (0, 2)])), 2);
        assert_eq!(degeneracy(&graph(4, &[(0, 1), (1, 2), (2, 3)])), 1);
    }
}
