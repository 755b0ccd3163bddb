//! The three families of elementary 1-boundaries.
//!
//! * bigon `e_uv + e_vu`
//! * boundary triangle `(s, k | m)`: `e_sm + e_mk - e_sk`, source `s`, sink `k`
//! * boundary quadrangle `{s, k | a, b}`: `e_sa + e_ak - e_sb - e_bk`
//!
//! Constructors return `None` when a required edge is missing.

use crate::digraph::{FilteredDigraph, VertexId};
use crate::field::Field;
use crate::reduce::Chain1;

/// Generator family, used for reporting and oracle decompositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Bigon,
    Triangle,
    Quadrangle,
}

pub fn bigon<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    u: VertexId,
    v: VertexId,
) -> Option<Chain1<F::Elem>> {
    let a = g.edge_id(u, v)?;
    let b = g.edge_id(v, u)?;
    Some(Chain1::from_signed(f, &[(a, 1), (b, 1)]))
}

pub fn triangle<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    source: VertexId,
    middle: VertexId,
    sink: VertexId,
) -> Option<Chain1<F::Elem>> {
    let sm = g.edge_id(source, middle)?;
    let mk = g.edge_id(middle, sink)?;
    let sk = g.edge_id(source, sink)?;
    Some(Chain1::from_signed(f, &[(sm, 1), (mk, 1), (sk, -1)]))
}

pub fn quadrangle<F: Field>(
    f: &F,
    g: &FilteredDigraph,
    source: VertexId,
    sink: VertexId,
    a: VertexId,
    b: VertexId,
) -> Option<Chain1<F::Elem>> {
    let sa = g.edge_id(source, a)?;
    let ak = g.edge_id(a, sink)?;
    let sb = g.edge_id(source, b)?;
    let bk = g.edge_id(b, sink)?;
    Some(Chain1::from_signed(
        f,
        &[(sa, 1), (ak, 1), (sb, -1), (bk, -1)],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn generators_are_cycles() {
        let f = PrimeField::default();
        let g = FilteredDigraph::from_unweighted(
            4,
            &[(0, 1), (1, 0), (1, 2), (0, 2), (0, 3), (3, 2)],
        )
        .unwrap();
        assert!(bigon(&f, &g, 0, 1).unwrap().is_cycle(&f, &g));
        assert!(triangle(&f, &g, 0, 1, 2).unwrap().is_cycle(&f, &g));
        assert!(quadrangle(&f, &g, 0, 2, 1, 3).unwrap().is_cycle(&f, &g));
        assert!(triangle(&f, &g, 2, 0, 1).is_none());
        assert!(bigon(&f, &g, 1, 2).is_none());
    }
}
