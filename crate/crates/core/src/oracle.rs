//! Brute-force reference implementations, straight from the definitions.
//!
//! `Ω_2` is the null space of the non-allowed rows of the boundary map on
//! allowed 2-paths; `B_1 = ∂Ω_2`; `Z_1` is the null space of the incidence
//! matrix. Everything is dense Gauss–Jordan elimination, desk scale only.

use std::collections::BTreeMap;

use crate::boundary::{self, GeneratorKind};
use crate::digraph::{EdgeId, FilteredDigraph, VertexId};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::persistence::{Essential, PersistenceDiagram, PersistencePair};
use crate::reduce::{Chain1, ReducedBasis};

/// `(i0, i1, i2)` with both edges present. `i0 == i2` is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AllowedTwoPath(pub VertexId, pub VertexId, pub VertexId);

/// An element of the span of allowed 2-paths.
pub type TwoChain<E> = BTreeMap<AllowedTwoPath, E>;

/// Allowed 2-paths using only edges with id `< k`, sorted.
fn allowed_two_paths(g: &FilteredDigraph, k: usize) -> Vec<AllowedTwoPath> {
    let mut out = Vec::new();
    for e in &g.edges()[..k] {
        for &(c, e2) in g.out_edges(e.dst) {
            if e2 < k {
                out.push(AllowedTwoPath(e.src, e.dst, c));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Gauss–Jordan on dense rows in place; returns the pivot column of each
/// leading row. Zero entries are skipped, which keeps block-sparse inputs
/// cheap.
fn rref<F: Field>(f: &F, rows: &mut [Vec<F::Elem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Null space basis, one vector per free column in increasing order. The
/// vector of free column `c` is supported on columns `<= c`.
fn null_space<F: Field>(f: &F, mut rows: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let pivots = rref(f, &mut rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|c| {
            let mut v = vec![f.zero(); ncols];
            v[c] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(&rows[i][c]);
            }
            v
        })
        .collect()
}

/// Faces of `∂e_{abc} = e_bc - e_ac + e_ab` as vertex pairs; the middle face
/// is dropped when irregular (`a == c`).
fn faces<F: Field>(f: &F, p: AllowedTwoPath) -> Vec<((VertexId, VertexId), F::Elem)> {
    let AllowedTwoPath(a, b, c) = p;
    let mut out = vec![((b, c), f.one()), ((a, b), f.one())];
    if a != c {
        out.push(((a, c), f.from_i64(-1)));
    }
    out
}

/// `Ω_2` of the prefix on edges `< k`.
fn omega2_prefix<F: Field>(f: &F, g: &FilteredDigraph, k: usize) -> Vec<TwoChain<F::Elem>> {
    let paths = allowed_two_paths(g, k);
    let mut row_of: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (j, &p) in paths.iter().enumerate() {
        for ((x, y), c) in faces(f, p) {
            if g.edge_before(x, y, k).is_some() {
                continue;
            }
            let r = *row_of.entry((x, y)).or_insert_with(|| {
                rows.push(vec![f.zero(); paths.len()]);
                rows.len() - 1
            });
            rows[r][j] = f.add(&rows[r][j], &c);
        }
    }
    null_space(f, rows, paths.len())
        .into_iter()
        .map(|v| {
            paths
                .iter()
                .zip(v)
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(&p, c)| (p, c))
                .collect()
        })
        .collect()
}

/// Basis of `Ω_2(G)`.
pub fn omega2_basis<F: Field>(f: &F, g: &FilteredDigraph) -> Vec<TwoChain<F::Elem>> {
    omega2_prefix(f, g, g.m())
}

/// `∂p` in edge coordinates. Fails if a non-allowed face survives.
pub fn boundary_of<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    p: &TwoChain<F::Elem>,
) -> Result<Chain1<F::Elem>> {
    let mut acc: BTreeMap<(VertexId, VertexId), F::Elem> = BTreeMap::new();
    for (&path, c) in p {
        for (pair, s) in faces(f, path) {
            let slot = acc.entry(pair).or_insert_with(|| f.zero());
            *slot = f.add(slot, &f.mul(c, &s));
        }
    }
    let mut terms = Vec::new();
    for ((x, y), c) in acc {
        if f.is_zero(&c) {
            continue;
        }
        let Some(e) = g.edge_id(x, y) else {
            return Err(Error::InvalidArgument(format!(
                "boundary has non-allowed term ({x}, {y})"
            )));
        };
        terms.push((e, c));
    }
    Ok(Chain1::from_terms(f, terms))
}

/// Reduced basis of `B_1` on the prefix with edges `< k`.
fn b1_prefix<F: Field>(f: &F, g: &FilteredDigraph, k: usize) -> ReducedBasis<F> {
    let mut basis = ReducedBasis::new(f.clone(), g.m());
    for p in omega2_prefix(f, g, k) {
        let c = boundary_of(f, g, &p).expect("Ω_2 boundaries are allowed");
        basis.insert(&c);
    }
    basis
}

pub fn b1_basis_oracle<F: Field>(f: &F, g: &FilteredDigraph) -> ReducedBasis<F> {
    b1_prefix(f, g, g.m())
}

/// Nested basis of `Z_1`: the `i`-th vector lives on edges `<= c_i` for
/// increasing free columns `c_i`, so the first `|Z_1(G^k)|` vectors span
/// the cycle space of every prefix.
pub fn z1_basis_oracle<F: Field>(f: &F, g: &FilteredDigraph) -> Vec<Chain1<F::Elem>> {
    let mut rows = vec![vec![f.zero(); g.m()]; g.n()];
    for (i, e) in g.edges().iter().enumerate() {
        rows[e.dst][i] = f.add(&rows[e.dst][i], &f.one());
        rows[e.src][i] = f.sub(&rows[e.src][i], &f.one());
    }
    null_space(f, rows, g.m())
        .into_iter()
        .map(|v| Chain1::from_terms(f, v.into_iter().enumerate()))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleRanks {
    pub z1: usize,
    pub b1: usize,
    pub h1: usize,
}

pub fn h1_rank_oracle<F: Field>(f: &F, g: &FilteredDigraph) -> OracleRanks {
    let z1 = z1_basis_oracle(f, g).len();
    let b1 = b1_basis_oracle(f, g).rank();
    OracleRanks { z1, b1, h1: z1 - b1 }
}

/// Persistence from the rank invariant.
///
/// Index `t in 0..=2m` interleaves the steps: `t = 2k - 1` is
/// `Z(G^k) / B(G^{k-1})` and `t = 2k` is `Z(G^k) / B(G^k)`, so a class born
/// and killed by the same edge shows up as a pair `(2k - 1, 2k)`.
pub fn persistence_oracle<F: Field>(
    f: &F,
    g: &FilteredDigraph,
) -> PersistenceDiagram<F::Elem> {
    let m = g.m();
    let z = z1_basis_oracle(f, g);
    let z_low: Vec<EdgeId> = z.iter().map(|c| c.low().expect("nonzero")).collect();
    // z_count[k]: basis vectors of Z(G^k)
    let z_count: Vec<usize> = (0..=m).map(|k| z_low.iter().filter(|&&l| l < k).count()).collect();

    // nested basis of B across prefixes
    let mut b_vectors: Vec<Chain1<F::Elem>> = Vec::new();
    let mut b_count = vec![0; m + 1];
    let mut running = ReducedBasis::new(f.clone(), m);
    for k in 1..=m {
        for c in b1_prefix(f, g, k).columns() {
            if running.insert(c).is_some() {
                b_vectors.push(c.clone());
            }
        }
        b_count[k] = b_vectors.len();
    }

    // sum_dim[kb][kz] = dim(Z(G^kz) + B(G^kb)) for kz >= kb
    let mut sum_dim = vec![vec![0usize; m + 1]; m + 1];
    for kb in 0..=m {
        let mut basis = ReducedBasis::new(f.clone(), m);
        for c in &b_vectors[..b_count[kb]] {
            basis.insert(c);
        }
        let mut next = 0;
        for kz in 0..=m {
            while next < z_count[kz] {
                basis.insert(&z[next]);
                next += 1;
            }
            sum_dim[kb][kz] = basis.rank();
        }
    }

    let kz = |t: usize| t.div_ceil(2);
    let kb = |t: usize| t / 2;
    let top = 2 * m;
    let r = |a: usize, b: usize| -> i64 {
        if a == 0 {
            return 0;
        }
        (sum_dim[kb(b)][kz(a)] - b_count[kb(b)]) as i64
    };

    let mut pairs = Vec::new();
    let mut essentials = Vec::new();
    for a in (1..=top).step_by(2) {
        let birth_edge = kz(a) - 1;
        for b in ((a + 1)..=top).step_by(2) {
            let mu = r(a, b - 1) - r(a, b) - r(a - 1, b - 1) + r(a - 1, b);
            let death_edge = kb(b) - 1;
            for _ in 0..mu {
                pairs.push(PersistencePair {
                    birth: g.weight(birth_edge),
                    death: g.weight(death_edge),
                    birth_edge,
                    death_edge,
                });
            }
        }
        if r(a, top) - r(a - 1, top) > 0 {
            // birth at `a` means the new null vector is not in Z(a-1) + B
            let cycle = z[z_low.iter().position(|&l| l == birth_edge).expect("a cycle is born")].clone();
            essentials.push(Essential {
                birth: g.weight(birth_edge),
                birth_edge,
                cycle,
            });
        }
    }
    PersistenceDiagram { pairs, essentials }
}

/// One step of a decomposition: `coeff * chain`.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator<E> {
    pub kind: GeneratorKind,
    pub chain: Chain1<E>,
    pub coeff: E,
}

/// Writes `∂p` as a combination of bigons, boundary triangles and boundary
/// quadrangles by repeatedly cancelling the smallest 2-path term.
pub fn decompose_boundary<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    p: &TwoChain<F::Elem>,
) -> Result<Vec<Generator<F::Elem>>> {
    boundary_of(f, g, p)?;
    let mut p: TwoChain<F::Elem> = p.iter().filter(|(_, c)| !f.is_zero(c)).map(|(k, c)| (*k, c.clone())).collect();
    let mut out = Vec::new();
    while let Some((&AllowedTwoPath(u, v, w), c)) = p.iter().next() {
        let c = c.clone();
        let (kind, chain) = if u == w {
            (GeneratorKind::Bigon, boundary::bigon(f, g, u, v))
        } else if g.has_edge(u, w) {
            (GeneratorKind::Triangle, boundary::triangle(f, g, u, v, w))
        } else {
            let partner = p
                .range(AllowedTwoPath(u, 0, w)..)
                .take_while(|(q, _)| q.0 == u)
                .find(|(q, _)| q.2 == w && q.1 != v)
                .map(|(q, _)| q.1);
            let Some(v2) = partner else {
                return Err(Error::InvalidArgument(format!(
                    "2-chain is not in Ω_2: ({u}, {w}) is not cancelled"
                )));
            };
            let slot = p.get_mut(&AllowedTwoPath(u, v2, w)).expect("partner present");
            *slot = f.add(slot, &c);
            if f.is_zero(slot) {
                p.remove(&AllowedTwoPath(u, v2, w));
            }
            (GeneratorKind::Quadrangle, boundary::quadrangle(f, g, u, w, v, v2))
        };
        p.remove(&AllowedTwoPath(u, v, w));
        out.push(Generator {
            kind,
            chain: chain.expect("generator edges exist"),
            coeff: c,
        });
    }
    Ok(out)
}

/// Every bigon, boundary triangle and boundary quadrangle of `g`.
pub fn all_generators<F: Field>(f: &F, g: &FilteredDigraph) -> Vec<Chain1<F::Elem>> {
    let mut out = Vec::new();
    for e in g.edges() {
        if e.src < e.dst {
            out.extend(boundary::bigon(f, g, e.src, e.dst));
        }
    }
    for u in 0..g.n() {
        for &(v, _) in g.out_edges(u) {
            for &(w, _) in g.out_edges(v) {
                if w != u {
                    out.extend(boundary::triangle(f, g, u, v, w));
                }
            }
        }
    }
    for u in 0..g.n() {
        let mut middles: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &(v, _) in g.out_edges(u) {
            for &(w, _) in g.out_edges(v) {
                if w != u {
                    middles.entry(w).or_default().push(v);
                }
            }
        }
        for (w, vs) in middles {
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    out.extend(boundary::quadrangle(f, g, u, w, a, b));
                }
            }
        }
    }
    out
}

/// Every simple cycle of the undirected multigraph, `±1` along the walk,
/// one per edge support.
pub fn simple_cycles<F: Field>(f: &F, g: &FilteredDigraph) -> Vec<Chain1<F::Elem>> {
    let n = g.n();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path: Vec<(EdgeId, i64)> = Vec::new();
    for s in 0..n {
        on_path[s] = true;
        dfs(f, g, s, s, &mut on_path, &mut path, &mut seen, &mut out);
        on_path[s] = false;
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    s: VertexId,
    x: VertexId,
    on_path: &mut [bool],
    path: &mut Vec<(EdgeId, i64)>,
    seen: &mut std::collections::HashSet<Vec<EdgeId>>,
    out: &mut Vec<Chain1<F::Elem>>,
) {
    for &(y, e) in g.undirected(x) {
        if path.iter().any(|&(p, _)| p == e) {
            continue;
        }
        let sign = if g.edge(e).src == x { 1 } else { -1 };
        if y == s {
            path.push((e, sign));
            let mut support: Vec<EdgeId> = path.iter().map(|t| t.0).collect();
            support.sort_unstable();
            if seen.insert(support) {
                out.push(Chain1::from_signed(f, path));
            }
            path.pop();
        } else if y > s && !on_path[y] {
            on_path[y] = true;
            path.push((e, sign));
            dfs(f, g, s, y, on_path, path, seen, out);
            path.pop();
            on_path[y] = false;
        }
    }
}

/// Minimal homology basis by exhaustive enumeration: all simple cycles,
/// sorted by length, greedily kept when independent modulo `B_1`.
pub fn minimal_basis_oracle<F: Field>(
    f: &F,
    g: &FilteredDigraph,
) -> Vec<(Chain1<F::Elem>, f64)> {
    let mut cycles: Vec<(Chain1<F::Elem>, f64)> = simple_cycles(f, g)
        .into_iter()
        .map(|c| {
            let mu = crate::minbasis::cycle_length(&c, g);
            (c, mu)
        })
        .collect();
    cycles.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut basis = b1_basis_oracle(f, g);
    let target = g.cycle_rank() - basis.rank();
    let mut out = Vec::new();
    for (c, mu) in cycles {
        if out.len() == target {
            break;
        }
        if basis.insert(&c).is_some() {
            out.push((c, mu));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use crate::generate::{self, fixtures};

    const F: PrimeField = PrimeField::DEFAULT;

    fn points<E>(d: &PersistenceDiagram<E>) -> Vec<(f64, f64)> {
        d.sorted_points()
    }

    #[test]
    fn omega2_ranks() {
        assert_eq!(omega2_basis(&F, &fixtures::directed_triangle()).len(), 0);
        assert_eq!(omega2_basis(&F, &fixtures::boundary_triangle()).len(), 1);
        let q = omega2_basis(&F, &fixtures::quadrangle());
        assert_eq!(q.len(), 1);
        let keys: Vec<_> = q[0].keys().copied().collect();
        assert_eq!(keys, vec![AllowedTwoPath(0, 1, 2), AllowedTwoPath(0, 3, 2)]);
        assert_eq!(q[0][&AllowedTwoPath(0, 1, 2)], F.neg(&q[0][&AllowedTwoPath(0, 3, 2)]));
    }

    #[test]
    fn omega2_boundaries_are_allowed() {
        for seed in 0..20 {
            let g = generate::er(7, 0.4, seed).unwrap();
            for p in omega2_basis(&F, &g) {
                assert!(boundary_of(&F, &g, &p).unwrap().is_cycle(&F, &g));
            }
        }
    }

    #[test]
    fn h1_ranks() {
        assert_eq!(h1_rank_oracle(&F, &fixtures::bigon()).h1, 0);
        assert_eq!(h1_rank_oracle(&F, &fixtures::directed_square()).h1, 1);
        let r = h1_rank_oracle(&F, &fixtures::bipartite_4x4());
        assert_eq!((r.b1, r.h1), (0, 9));
        assert_eq!(h1_rank_oracle(&F, &generate::fan(2, 2)).h1, 0);
    }

    #[test]
    fn z1_basis_is_nested() {
        let g = generate::er(8, 0.4, 3).unwrap();
        let z = z1_basis_oracle(&F, &g);
        assert_eq!(z.len(), g.cycle_rank());
        for k in 0..=g.m() {
            let count = z.iter().filter(|c| c.low().unwrap() < k).count();
            assert_eq!(count, g.prefix(k).cycle_rank());
        }
    }

    #[test]
    fn oracle_diagrams() {
        assert_eq!(points(&persistence_oracle(&F, &fixtures::bigon())), vec![(2.0, 2.0)]);
        assert_eq!(
            points(&persistence_oracle(&F, &fixtures::directed_triangle())),
            vec![(3.0, f64::INFINITY)]
        );
        assert_eq!(
            points(&persistence_oracle(&F, &fixtures::triangle_plus_chord())),
            vec![(3.0, 4.0), (4.0, 4.0)]
        );
    }

    #[test]
    fn oracle_final_step_matches_rank() {
        for seed in 0..10 {
            let g = generate::er(6, 0.4, seed).unwrap();
            let d = persistence_oracle(&F, &g);
            assert_eq!(d.rank_h1(), h1_rank_oracle(&F, &g).h1);
        }
    }

    fn single(path: AllowedTwoPath) -> TwoChain<u64> {
        TwoChain::from([(path, 1)])
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_boundary(&F, &fixtures::bigon(), &single(AllowedTwoPath(0, 1, 0))).unwrap();
        assert_eq!((d.len(), d[0].kind, d[0].coeff), (1, GeneratorKind::Bigon, 1));

        let g = fixtures::boundary_triangle();
        let d = decompose_boundary(&F, &g, &single(AllowedTwoPath(0, 1, 2))).unwrap();
        assert_eq!((d.len(), d[0].kind), (1, GeneratorKind::Triangle));

        let g = fixtures::quadrangle();
        let p = TwoChain::from([(AllowedTwoPath(0, 1, 2), 1), (AllowedTwoPath(0, 3, 2), F.from_i64(-1))]);
        let d = decompose_boundary(&F, &g, &p).unwrap();
        assert_eq!((d.len(), d[0].kind, d[0].coeff), (1, GeneratorKind::Quadrangle, 1));
        assert!(decompose_boundary(&F, &g, &single(AllowedTwoPath(0, 1, 2))).is_err());
    }

    #[test]
    fn decompose_recomposes() {
        let q = RationalField;
        for seed in 0..10 {
            let g = generate::er(6, 0.5, seed).unwrap();
            for p in omega2_basis(&q, &g) {
                let target = boundary_of(&q, &g, &p).unwrap();
                let mut sum = Chain1::zero();
                for gen in decompose_boundary(&q, &g, &p).unwrap() {
                    sum = sum.add_scaled(&q, &gen.coeff, &gen.chain);
                }
                assert_eq!(sum, target);
            }
        }
    }

    #[test]
    fn all_generators_span_b1() {
        for seed in 0..10 {
            let g = generate::er(6, 0.4, seed).unwrap();
            let mut basis = ReducedBasis::new(F, g.m());
            for c in all_generators(&F, &g) {
                basis.insert(&c);
            }
            assert_eq!(basis.rank(), b1_basis_oracle(&F, &g).rank());
        }
    }

    #[test]
    fn simple_cycle_counts() {
        assert_eq!(simple_cycles(&F, &fixtures::bigon()).len(), 1);
        assert_eq!(simple_cycles(&F, &fixtures::quadrangle()).len(), 1);
        // K4 has 7 cycles
        let e: Vec<_> = (0..4).flat_map(|a| ((a + 1)..4).map(move |b| (a, b))).collect();
        let k4 = FilteredDigraph::from_unweighted(4, &e).unwrap();
        let cs = simple_cycles(&F, &k4);
        assert_eq!(cs.len(), 7);
        assert!(cs.iter().all(|c| c.is_cycle(&F, &k4)));
    }

    #[test]
    fn minimal_basis_oracle_examples() {
        let g = fixtures::directed_triangle();
        let b = minimal_basis_oracle(&F, &g);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].1, 6.0);
        let g = FilteredDigraph::from_edges(
            7,
            &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (3, 4, 1.0), (4, 5, 1.0), (5, 6, 1.0), (6, 3, 1.0)],
        )
        .unwrap();
        let total: f64 = minimal_basis_oracle(&F, &g).iter().map(|t| t.1).sum();
        assert_eq!(total, 7.0);
        assert!(minimal_basis_oracle(&F, &fixtures::boundary_triangle()).is_empty());
    }
}
