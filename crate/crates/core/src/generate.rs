//! Graph generators and small fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{FilteredDigraph, VertexId};
use crate::error::{Error, Result};

/// Erdős–Rényi digraph: each ordered pair `(u, v)`, `u != v`, is an edge
/// independently with probability `p`. Weights are the line order.
pub fn er(n: usize, p: f64, seed: u64) -> Result<FilteredDigraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    FilteredDigraph::from_unweighted(n, &edges)
}

/// ER digraph with random integer weights in `1..=max_weight`, so ties are
/// common.
pub fn er_tied(n: usize, p: f64, max_weight: u32, seed: u64) -> Result<FilteredDigraph> {
    if max_weight == 0 {
        return Err(Error::InvalidArgument("max_weight must be positive".into()));
    }
    let g = er(n, p, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| (e.src, e.dst, rng.random_range(1..=max_weight) as f64))
        .collect();
    FilteredDigraph::from_edges(n, &edges)
}

/// Directed `n`-cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn cycle(n: usize) -> Result<FilteredDigraph> {
    if n < 2 {
        return Err(Error::InvalidArgument("a cycle needs at least 2 vertices".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    FilteredDigraph::from_unweighted(n, &edges)
}

/// Two hubs `0` and `1`, `ls` common sinks `2..2+ls` and `lt` common
/// sources after them. Every pair of sinks or sources closes a boundary
/// quadrangle through the hubs.
pub fn fan(ls: usize, lt: usize) -> FilteredDigraph {
    let mut edges = Vec::new();
    for i in 0..ls {
        edges.push((0, 2 + i));
        edges.push((1, 2 + i));
    }
    for j in 0..lt {
        edges.push((2 + ls + j, 0));
        edges.push((2 + ls + j, 1));
    }
    FilteredDigraph::from_unweighted(2 + ls + lt, &edges).expect("fan edges are simple")
}

/// `a` left vertices, `b` right vertices, all left-to-right edges.
pub fn complete_bipartite(a: usize, b: usize) -> FilteredDigraph {
    let edges: Vec<_> = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect();
    FilteredDigraph::from_unweighted(a + b, &edges).expect("bipartite edges are simple")
}

pub mod fixtures {
    use super::*;

    fn build(n: usize, e: &[(VertexId, VertexId)]) -> FilteredDigraph {
        FilteredDigraph::from_unweighted(n, e).expect("fixture is valid")
    }

    /// `0 -> 1` (weight 1), `1 -> 0` (weight 2).
    pub fn bigon() -> FilteredDigraph {
        build(2, &[(0, 1), (1, 0)])
    }

    /// Directed 3-cycle.
    pub fn directed_triangle() -> FilteredDigraph {
        build(3, &[(0, 1), (1, 2), (2, 0)])
    }

    /// Boundary triangle `(0, 2 | 1)`.
    pub fn boundary_triangle() -> FilteredDigraph {
        build(3, &[(0, 1), (1, 2), (0, 2)])
    }

    /// Boundary quadrangle `{0, 2 | 1, 3}`.
    pub fn quadrangle() -> FilteredDigraph {
        build(4, &[(0, 1), (1, 2), (0, 3), (3, 2)])
    }

    /// Directed 3-cycle `0 -> 1 -> 2 -> 0` plus the chord `0 -> 2` last.
    pub fn triangle_plus_chord() -> FilteredDigraph {
        build(3, &[(0, 1), (1, 2), (2, 0), (0, 2)])
    }

    /// Directed 4-cycle.
    pub fn directed_square() -> FilteredDigraph {
        build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    /// Disjoint directed 3-cycle and 4-cycle.
    pub fn triangle_and_square() -> FilteredDigraph {
        build(
            7,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)],
        )
    }

    /// Four sources, four sinks, all sixteen edges: no boundary quadrangle.
    pub fn bipartite_4x4() -> FilteredDigraph {
        complete_bipartite(4, 4)
    }

    /// Three quadrangles `{u, w_i | v, z_i}` completed by the last edge
    /// `(u, v)`, with `v = 0`, `u = 1`, `w_i = 2 + i`, `z_i = 5 + i`.
    pub fn quadrangle_fan() -> FilteredDigraph {
        let mut e = Vec::new();
        for i in 0..3 {
            e.push((0, 2 + i));
            e.push((5 + i, 2 + i));
            e.push((1, 5 + i));
        }
        e.push((1, 0));
        build(8, &e)
    }

    /// Every fixture with its name.
    pub fn all() -> Vec<(&'static str, FilteredDigraph)> {
        vec![
            ("bigon", bigon()),
            ("directed_triangle", directed_triangle()),
            ("boundary_triangle", boundary_triangle()),
            ("quadrangle", quadrangle()),
            ("triangle_plus_chord", triangle_plus_chord()),
            ("directed_square", directed_square()),
            ("triangle_and_square", triangle_and_square()),
            ("bipartite_4x4", bipartite_4x4()),
            ("quadrangle_fan", quadrangle_fan()),
            ("fan_2_2", fan(2, 2)),
        ]
    }
}
