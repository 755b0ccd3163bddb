#![allow(dead_code)]

use pathhom::generate;
use pathhom::FilteredDigraph;

pub const DENSITIES: [f64; 4] = [0.1, 0.2, 0.3, 0.5];

pub struct Case {
    pub name: String,
    pub graph: FilteredDigraph,
}

/// `per_density` seeded ER digraphs for every density, `n in 3..=9`. Odd
/// cases draw weights from `1..=3` so the filtration has ties.
pub fn corpus(per_density: usize) -> Vec<Case> {
    let mut out = Vec::with_capacity(per_density * DENSITIES.len());
    for (k, &p) in DENSITIES.iter().enumerate() {
        for i in 0..per_density {
            let seed = (k * 1_000_003 + i) as u64;
            let n = 3 + (i + k) % 7;
            let graph = if i % 2 == 0 {
                generate::er(n, p, seed).unwrap()
            } else {
                generate::er_tied(n, p, 3, seed).unwrap()
            };
            out.push(Case {
                name: format!("p={p} i={i} n={n}"),
                graph,
            });
        }
    }
    out
}

/// `m + 3 * sum over edges (u, v) of (d_in(u) + d_out(v))`.
pub fn size_bound(g: &FilteredDigraph) -> usize {
    g.m()
        + 3 * g
            .edges()
            .iter()
            .map(|e| g.in_edges(e.src).len() + g.out_edges(e.dst).len())
            .sum::<usize>()
}
