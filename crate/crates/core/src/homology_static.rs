//! Rank of `H_1` without persistence: cycle rank from a spanning forest,
//! boundary rank from a small generating set of bigons, boundary triangles
//! and boundary quadrangles selected through the Chiba–Nishizeki cover.

use crate::boundary;
use crate::digraph::{EdgeId, FilteredDigraph, UnionFind, VertexId};
use crate::enumerate::{self, TypedList};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::reduce::{Chain1, ReducedBasis};

/// A rooted spanning forest of the undirected view.
#[derive(Clone, Debug)]
pub struct SpanningForest {
    parent: Vec<Option<(VertexId, EdgeId)>>,
    depth: Vec<usize>,
    root: Vec<VertexId>,
    tree: Vec<bool>,
}

impl SpanningForest {
    /// The forest of negative edges: each edge that joins two components
    /// when the edges are taken in filtration order.
    pub fn filtration(g: &FilteredDigraph) -> Self {
        let mut uf = UnionFind::new(g.n());
        let edges: Vec<EdgeId> = (0..g.m())
            .filter(|&e| uf.union(g.edge(e).src, g.edge(e).dst))
            .collect();
        Self::from_tree_edges(g, edges).expect("union-find output is acyclic")
    }

    /// Builds a forest from an explicit acyclic edge set.
    pub fn from_tree_edges(
        g: &FilteredDigraph,
        edges: impl IntoIterator<Item = EdgeId>,
    ) -> Result<Self> {
        let n = g.n();
        let mut tree = vec![false; g.m()];
        let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        let mut uf = UnionFind::new(n);
        for e in edges {
            let edge = g.edge(e);
            if !uf.union(edge.src, edge.dst) {
                return Err(Error::InvalidArgument(format!(
                    "tree edge {e} closes a cycle"
                )));
            }
            tree[e] = true;
            adj[edge.src].push((edge.dst, e));
            adj[edge.dst].push((edge.src, e));
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut root = vec![usize::MAX; n];
        for r in 0..n {
            if root[r] != usize::MAX {
                continue;
            }
            root[r] = r;
            let mut stack = vec![r];
            while let Some(x) = stack.pop() {
                for &(y, e) in &adj[x] {
                    if root[y] == usize::MAX {
                        root[y] = r;
                        parent[y] = Some((x, e));
                        depth[y] = depth[x] + 1;
                        stack.push(y);
                    }
                }
            }
        }
        Ok(Self {
            parent,
            depth,
            root,
            tree,
        })
    }

    pub fn is_tree_edge(&self, e: EdgeId) -> bool {
        self.tree[e]
    }

    pub fn same_tree(&self, a: VertexId, b: VertexId) -> bool {
        self.root[a] == self.root[b]
    }

    /// Tree edges on the path from `from` to `to`, each with `+1` when the
    /// walk follows the edge direction and `-1` otherwise.
    pub fn path(
        &self,
        g: &FilteredDigraph,
        from: VertexId,
        to: VertexId,
    ) -> Option<Vec<(EdgeId, i64)>> {
        if !self.same_tree(from, to) {
            return None;
        }
        let (mut x, mut y) = (from, to);
        let mut up = Vec::new(); // walked from `from` upwards
        let mut down = Vec::new(); // walked from `to` upwards, reversed later
        while x != y {
            if self.depth[x] >= self.depth[y] {
                let (p, e) = self.parent[x].expect("non-root has a parent");
                up.push((e, if g.edge(e).src == x { 1 } else { -1 }));
                x = p;
            } else {
                let (p, e) = self.parent[y].expect("non-root has a parent");
                down.push((e, if g.edge(e).src == p { 1 } else { -1 }));
                y = p;
            }
        }
        up.extend(down.into_iter().rev());
        Some(up)
    }
}

/// `m - n + c`.
pub fn rank_z1(g: &FilteredDigraph) -> usize {
    g.cycle_rank()
}

/// The fundamental cycle of a non-tree edge `e = (a, b)`: `+1` on `e`, then
/// back from `b` to `a` along the forest.
pub fn tree_cycle<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    forest: &SpanningForest,
    e: EdgeId,
) -> Result<Chain1<F::Elem>> {
    if forest.is_tree_edge(e) {
        return Err(Error::InvalidArgument(format!("edge {e} is a tree edge")));
    }
    let edge = g.edge(e);
    let path = forest.path(g, edge.dst, edge.src).ok_or_else(|| {
        Error::InvalidArgument(format!("endpoints of edge {e} lie in different trees"))
    })?;
    let mut terms = path;
    terms.push((e, 1));
    Ok(Chain1::from_signed(f, &terms))
}

/// Bigons, all boundary triangles and the quadrangle selection from each
/// typed list; spans the boundary group.
pub fn generating_set_static<F: Field>(f: &F, g: &FilteredDigraph) -> Vec<Chain1<F::Elem>> {
    let mut out = Vec::new();
    for e in g.edges() {
        if e.src < e.dst {
            if let Some(b) = boundary::bigon(f, g, e.src, e.dst) {
                out.push(b);
            }
        }
    }
    for [a, b, c] in enumerate::list_triangles(g) {
        for (s, mid, k) in [
            (a, b, c),
            (a, c, b),
            (b, a, c),
            (b, c, a),
            (c, a, b),
            (c, b, a),
        ] {
            if let Some(t) = boundary::triangle(f, g, s, mid, k) {
                out.push(t);
            }
        }
    }
    for triple in enumerate::cover_quadrangles(g) {
        for list in enumerate::derive_typed_lists(&triple, g) {
            push_list_quadrangles(f, g, &list, &mut out);
        }
    }
    out
}

fn push_list_quadrangles<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    list: &TypedList,
    out: &mut Vec<Chain1<F::Elem>>,
) {
    let quad = |s, k, a, b| boundary::quadrangle(f, g, s, k, a, b).expect("list edges exist");
    match list {
        TypedList::Forward { u, v, witnesses } => {
            for &w in witnesses.iter().skip(1) {
                out.push(quad(*u, *v, witnesses[0], w));
            }
        }
        TypedList::Backward { u, v, witnesses } => {
            for &w in witnesses.iter().skip(1) {
                out.push(quad(*v, *u, witnesses[0], w));
            }
        }
        TypedList::Cross {
            u,
            v,
            sources,
            sinks,
        } => {
            let (Some(&s0), Some(&k0)) = (sources.first(), sinks.first()) else {
                return;
            };
            for &k in sinks {
                out.push(quad(s0, k, *u, *v));
            }
            for &s in sources.iter().skip(1) {
                out.push(quad(s, k0, *u, *v));
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StaticRanks {
    pub z1: usize,
    pub b1: usize,
    pub h1: usize,
}

/// `rank Z_1 - rank B_1`, with `B_1` spanned by the static generating set.
pub fn h1_rank_static<F: Field>(f: &F, g: &FilteredDigraph) -> StaticRanks {
    let mut basis = ReducedBasis::new(f.clone(), g.m());
    for c in generating_set_static(f, g) {
        basis.insert(&c);
    }
    let z1 = rank_z1(g);
    let b1 = basis.rank();
    StaticRanks {
        z1,
        b1,
        h1: z1 - b1,
    }
}
