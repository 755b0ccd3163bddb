//! Filtered directed graphs.
//!
//! Edges are kept in filtration order: edge id `s` (0-based) is the `s`-th
//! edge to enter the filtration. Adjacency is available in both directions
//! and in the undirected view, where a bigon `{(u, v), (v, u)}` contributes
//! two entries tagged with their directed edge ids.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type VertexId = usize;
/// Filtration position of an edge.
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub weight: f64,
}

#[derive(Clone, Debug)]
pub struct FilteredDigraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<(VertexId, EdgeId)>>,
    in_adj: Vec<Vec<(VertexId, EdgeId)>>,
    und_adj: Vec<Vec<(VertexId, EdgeId)>>,
    lookup: HashMap<(VertexId, VertexId), EdgeId>,
}

/// An edge as read from input, before filtration sorting.
#[derive(Clone, Debug)]
struct RawEdge {
    src: VertexId,
    dst: VertexId,
    weight: f64,
    line: usize,
}

impl FilteredDigraph {
    /// Vertices are named `0..n`; edges are stably sorted by weight.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId, f64)]) -> Result<Self> {
        let labels = (0..n).map(|v| v.to_string()).collect();
        let raw = edges
            .iter()
            .enumerate()
            .map(|(i, &(src, dst, weight))| {
                if src >= n || dst >= n {
                    return Err(Error::InvalidArgument(format!(
                        "edge {i}: vertex out of range for n = {n}"
                    )));
                }
                Ok(RawEdge {
                    src,
                    dst,
                    weight,
                    line: i + 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::build(labels, raw)
    }

    /// Unweighted input: the `i`-th edge (1-based) gets weight `i`.
    pub fn from_unweighted(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let weighted: Vec<_> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, (i + 1) as f64))
            .collect();
        Self::from_edges(n, &weighted)
    }

    /// Parses the `SRC DST [WEIGHT]` edge-list format. `#` starts a comment.
    /// Missing weights default to the 1-based ordinal of the edge line; with
    /// `line_order_weights` every weight is replaced by that ordinal.
    pub fn parse_edge_list(text: &str, line_order_weights: bool) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, VertexId> = HashMap::new();
        let mut raw = Vec::new();
        let mut intern = |tok: &str, labels: &mut Vec<String>| -> VertexId {
            if let Some(&v) = index.get(tok) {
                return v;
            }
            labels.push(tok.to_string());
            index.insert(tok.to_string(), labels.len() - 1);
            labels.len() - 1
        };
        for (lineno, line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let content = match line.find('#') {
                Some(i) => &line[..i],
                None => line,
            };
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            if toks.len() < 2 || toks.len() > 3 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected `SRC DST [WEIGHT]`, got {} fields", toks.len()),
                });
            }
            let ordinal = (raw.len() + 1) as f64;
            let weight = match toks.get(2) {
                Some(w) if !line_order_weights => w.parse::<f64>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad weight `{w}`"),
                })?,
                _ => ordinal,
            };
            let src = intern(toks[0], &mut labels);
            let dst = intern(toks[1], &mut labels);
            raw.push(RawEdge {
                src,
                dst,
                weight,
                line: line_no,
            });
        }
        Self::build(labels, raw)
    }

    fn build(labels: Vec<String>, mut raw: Vec<RawEdge>) -> Result<Self> {
        let n = labels.len();
        let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::with_capacity(raw.len());
        for e in &raw {
            if e.src == e.dst {
                return Err(Error::SelfLoop {
                    line: e.line,
                    vertex: labels[e.src].clone(),
                });
            }
            if !e.weight.is_finite() {
                return Err(Error::InvalidWeight(format!(
                    "line {}: weight {} is not finite",
                    e.line, e.weight
                )));
            }
            if seen.insert((e.src, e.dst), e.line).is_some() {
                return Err(Error::DuplicateEdge {
                    line: e.line,
                    src: labels[e.src].clone(),
                    dst: labels[e.dst].clone(),
                });
            }
        }
        // stable: ties keep input order
        raw.sort_by(|a, b| a.weight.total_cmp(&b.weight));

        let edges: Vec<Edge> = raw
            .into_iter()
            .map(|e| Edge {
                src: e.src,
                dst: e.dst,
                weight: e.weight,
            })
            .collect();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut und_adj = vec![Vec::new(); n];
        let mut lookup = HashMap::with_capacity(edges.len());
        for (id, e) in edges.iter().enumerate() {
            out_adj[e.src].push((e.dst, id));
            in_adj[e.dst].push((e.src, id));
            und_adj[e.src].push((e.dst, id));
            und_adj[e.dst].push((e.src, id));
            lookup.insert((e.src, e.dst), id);
        }
        for adj in out_adj
            .iter_mut()
            .chain(in_adj.iter_mut())
            .chain(und_adj.iter_mut())
        {
            adj.sort_unstable();
        }
        Ok(Self {
            labels,
            edges,
            out_adj,
            in_adj,
            und_adj,
            lookup,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        self.edges[e].weight
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Out-neighbours of `v` with edge ids, sorted by neighbour.
    pub fn out_edges(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.out_adj[v]
    }

    /// In-neighbours of `v` with edge ids, sorted by neighbour.
    pub fn in_edges(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.in_adj[v]
    }

    /// Undirected view; a bigon shows up twice with distinct edge ids.
    pub fn undirected(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.und_adj[v]
    }

    /// Distinct undirected neighbours of `v`, sorted.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.und_adj[v].iter().map(|&(w, _)| w).collect();
        out.dedup();
        out
    }

    pub fn edge_id(&self, src: VertexId, dst: VertexId) -> Option<EdgeId> {
        self.lookup.get(&(src, dst)).copied()
    }

    pub fn has_edge(&self, src: VertexId, dst: VertexId) -> bool {
        self.lookup.contains_key(&(src, dst))
    }

    /// Edge `(src, dst)` if it exists strictly before filtration position `s`.
    #[inline]
    pub fn edge_before(&self, src: VertexId, dst: VertexId, s: EdgeId) -> Option<EdgeId> {
        self.edge_id(src, dst).filter(|&e| e < s)
    }

    pub fn are_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.has_edge(a, b) || self.has_edge(b, a)
    }

    /// Subgraph on the first `s` edges of the filtration, same vertex set.
    pub fn prefix(&self, s: usize) -> FilteredDigraph {
        let raw = self.edges[..s]
            .iter()
            .enumerate()
            .map(|(i, e)| RawEdge {
                src: e.src,
                dst: e.dst,
                weight: e.weight,
                line: i + 1,
            })
            .collect();
        Self::build(self.labels.clone(), raw).expect("prefix of a valid graph is valid")
    }

    /// Connected components of the undirected view.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.n());
        for e in &self.edges {
            uf.union(e.src, e.dst);
        }
        uf.set_count()
    }

    /// `m - n + c`, the dimension of the cycle space.
    pub fn cycle_rank(&self) -> usize {
        self.m() + self.component_count() - self.n()
    }

    /// Serialises back to the edge-list format, in filtration order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let _ = writeln!(
                out,
                "{} {} {}",
                self.labels[e.src], self.labels[e.dst], e.weight
            );
        }
        out
    }
}

/// Disjoint sets over vertex ids with path compression and union by rank.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
            sets: n,
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn connected(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Returns false if `a` and `b` were already in the same set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}
