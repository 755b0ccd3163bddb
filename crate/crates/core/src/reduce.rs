//! Sparse 1-chains and the reduced column basis.
//!
//! A [`ReducedBasis`] keeps its columns in reduced form: the lowest nonzero
//! entry (largest edge id) of every column is unique. Inserting a chain
//! reduces it left to right against the existing columns and, if anything
//! survives, appends it; older columns are never modified, which is what
//! makes the insertion order meaningful as a persistence pairing.

use crate::digraph::{EdgeId, FilteredDigraph, VertexId};
use crate::field::Field;

/// A sparse 1-chain: edge id -> nonzero coefficient, sorted by edge id.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain1<E> {
    entries: Vec<(EdgeId, E)>,
}

impl<E: Clone + PartialEq> Chain1<E> {
    pub fn zero() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    /// Sums duplicate edges and drops zeros.
    pub fn from_terms<F: Field<Elem = E>>(
        field: &F,
        terms: impl IntoIterator<Item = (EdgeId, E)>,
    ) -> Self {
        let mut terms: Vec<(EdgeId, E)> = terms.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut entries: Vec<(EdgeId, E)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match entries.last_mut() {
                Some(last) if last.0 == e => last.1 = field.add(&last.1, &c),
                _ => entries.push((e, c)),
            }
        }
        entries.retain(|(_, c)| !field.is_zero(c));
        Self { entries }
    }

    /// Convenience for integer coefficients, typically `±1`.
    pub fn from_signed<F: Field<Elem = E>>(field: &F, terms: &[(EdgeId, i64)]) -> Self {
        Self::from_terms(field, terms.iter().map(|&(e, c)| (e, field.from_i64(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest edge id with a nonzero coefficient.
    pub fn low(&self) -> Option<EdgeId> {
        self.entries.last().map(|t| t.0)
    }

    pub fn coeff(&self, e: EdgeId) -> Option<&E> {
        self.entries
            .binary_search_by_key(&e, |t| t.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(EdgeId, E)> {
        self.entries.iter()
    }

    pub fn support(&self) -> Vec<EdgeId> {
        self.entries.iter().map(|t| t.0).collect()
    }

    /// `self + c * other`.
    pub fn add_scaled<F: Field<Elem = E>>(&self, field: &F, c: &E, other: &Self) -> Self {
        if field.is_zero(c) {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, field.mul(c, &b[j].1)));
                j += 1;
            } else {
                let v = field.add(&a[i].1, &field.mul(c, &b[j].1));
                if !field.is_zero(&v) {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        Self { entries: out }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add_scaled(field, &field.one(), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add_scaled(field, &field.neg(&field.one()), other)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        Self {
            entries: self
                .entries
                .iter()
                .map(|(e, v)| (*e, field.mul(c, v)))
                .collect(),
        }
    }

    /// Vertex boundary `sum c_e (dst - src)`, nonzero entries only, sorted.
    pub fn boundary<F: Field<Elem = E>>(&self, field: &F, g: &FilteredDigraph) -> Vec<(VertexId, E)> {
        let mut terms: Vec<(VertexId, E)> = Vec::with_capacity(2 * self.len());
        for (e, c) in &self.entries {
            let edge = g.edge(*e);
            terms.push((edge.dst, c.clone()));
            terms.push((edge.src, field.neg(c)));
        }
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(VertexId, E)> = Vec::new();
        for (v, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 = field.add(&last.1, &c),
                _ => out.push((v, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        out
    }

    pub fn is_cycle<F: Field<Elem = E>>(&self, field: &F, g: &FilteredDigraph) -> bool {
        self.boundary(field, g).is_empty()
    }

    /// Dense coefficient vector of length `dim`.
    pub fn to_dense<F: Field<Elem = E>>(&self, field: &F, dim: usize) -> Vec<E> {
        let mut v = vec![field.zero(); dim];
        for (e, c) in &self.entries {
            v[*e] = c.clone();
        }
        v
    }
}

/// Columns in reduced form, indexed by their unique low.
#[derive(Clone, Debug)]
pub struct ReducedBasis<F: Field> {
    field: F,
    dim: usize,
    columns: Vec<Chain1<F::Elem>>,
    pivot_inv: Vec<F::Elem>,
    low_map: Vec<Option<usize>>,
}

impl<F: Field> ReducedBasis<F> {
    /// Empty basis for chains over `dim` edges.
    pub fn new(field: F, dim: usize) -> Self {
        Self {
            field,
            dim,
            columns: Vec::new(),
            pivot_inv: Vec::new(),
            low_map: vec![None; dim],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Chain1<F::Elem>] {
        &self.columns
    }

    /// Position of the column whose low is `e`.
    pub fn column_with_low(&self, e: EdgeId) -> Option<usize> {
        self.low_map.get(e).copied().flatten()
    }

    pub fn lows(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.columns.iter().map(|c| c.low().expect("columns are nonzero"))
    }

    /// `c` minus a combination of the columns, such that the result is zero
    /// or has a low not owned by any column.
    pub fn reduce_column(&self, c: &Chain1<F::Elem>) -> Chain1<F::Elem> {
        self.reduce_impl(c, None)
    }

    /// Like [`reduce_column`](Self::reduce_column), also returning the
    /// coefficients `x_j` with `c = result + sum_j x_j * column_j`.
    pub fn reduce_with_transcript(
        &self,
        c: &Chain1<F::Elem>,
    ) -> (Chain1<F::Elem>, Vec<(usize, F::Elem)>) {
        let mut transcript = Vec::new();
        let r = self.reduce_impl(c, Some(&mut transcript));
        (r, transcript)
    }

    fn reduce_impl(
        &self,
        c: &Chain1<F::Elem>,
        mut transcript: Option<&mut Vec<(usize, F::Elem)>>,
    ) -> Chain1<F::Elem> {
        let f = &self.field;
        let Some(top) = c.low() else {
            return Chain1::zero();
        };
        debug_assert!(top < self.dim, "chain exceeds basis dimension");
        // first pivot hit means no reduction is needed at all
        if self.low_map[top].is_none() {
            return c.clone();
        }
        let mut work = vec![f.zero(); top + 1];
        for (e, v) in c.iter() {
            work[*e] = v.clone();
        }
        let mut k = top;
        loop {
            match self.low_map[k] {
                Some(j) => {
                    let factor = f.mul(&work[k], &self.pivot_inv[j]);
                    for (e, v) in self.columns[j].iter() {
                        work[*e] = f.sub(&work[*e], &f.mul(&factor, v));
                    }
                    work[k] = f.zero();
                    if let Some(t) = transcript.as_deref_mut() {
                        t.push((j, factor));
                    }
                }
                None => break,
            }
            match (0..k).rev().find(|&i| !f.is_zero(&work[i])) {
                Some(next) => k = next,
                None => return Chain1::zero(),
            }
        }
        work.truncate(k + 1);
        Chain1 {
            entries: work
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !f.is_zero(v))
                .collect(),
        }
    }

    /// Reduces `c` and appends the remainder if nonzero, returning its low.
    pub fn insert(&mut self, c: &Chain1<F::Elem>) -> Option<EdgeId> {
        let r = self.reduce_column(c);
        let low = r.low()?;
        self.push_reduced(r);
        Some(low)
    }

    /// Appends a chain whose low is not yet owned. Panics otherwise.
    pub fn push_reduced(&mut self, r: Chain1<F::Elem>) {
        let low = r.low().expect("cannot push a zero column");
        assert!(self.low_map[low].is_none(), "low {low} already owned");
        let pivot = r.coeff(low).expect("low entry present");
        self.pivot_inv
            .push(self.field.inv(pivot).expect("low entry is nonzero"));
        self.low_map[low] = Some(self.columns.len());
        self.columns.push(r);
    }

    pub fn contains(&self, c: &Chain1<F::Elem>) -> bool {
        self.reduce_column(c).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};

    fn ch(f: &PrimeField, t: &[(EdgeId, i64)]) -> Chain1<u64> {
        Chain1::from_signed(f, t)
    }

    #[test]
    fn empty_basis_leaves_chain() {
        let f = PrimeField::default();
        let b = ReducedBasis::new(f, 4);
        let c = ch(&f, &[(0, 1), (2, -1)]);
        assert_eq!(b.reduce_column(&c), c);
    }

    #[test]
    fn membership_reduces_to_zero() {
        let f = PrimeField::default();
        let mut b = ReducedBasis::new(f, 4);
        b.insert(&ch(&f, &[(0, 1), (1, 1)]));
        assert!(b.reduce_column(&ch(&f, &[(0, 1), (1, 1)])).is_zero());
    }

    #[test]
    fn already_reduced_chain_unchanged() {
        let f = PrimeField::default();
        let mut b = ReducedBasis::new(f, 4);
        b.insert(&ch(&f, &[(0, 1), (1, 1)]));
        let c = ch(&f, &[(1, 1), (2, 1)]);
        assert_eq!(b.reduce_column(&c), c);
    }

    #[test]
    fn second_insert_of_same_chain_fails() {
        let f = PrimeField::default();
        let mut b = ReducedBasis::new(f, 4);
        let c = ch(&f, &[(0, 1), (3, 1)]);
        assert_eq!(b.insert(&c), Some(3));
        assert_eq!(b.insert(&c), None);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn conflicting_low_falls_through() {
        // e1+e2 then e2: low 2 is taken, subtracting leaves -e1 with low 1
        let f = PrimeField::default();
        let mut b = ReducedBasis::new(f, 3);
        assert_eq!(b.insert(&ch(&f, &[(1, 1), (2, 1)])), Some(2));
        assert_eq!(b.reduce_column(&ch(&f, &[(2, 1)])), ch(&f, &[(1, -1)]));
        assert_eq!(b.insert(&ch(&f, &[(2, 1)])), Some(1));
    }

    #[test]
    fn scaled_copy_adds_no_rank() {
        let f = PrimeField::default();
        let mut b = ReducedBasis::new(f, 2);
        let bigon = ch(&f, &[(0, 1), (1, 1)]);
        b.insert(&bigon);
        b.insert(&bigon.scale(&f, &5));
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn transcript_reconstructs_input() {
        let f = RationalField;
        let mut b = ReducedBasis::new(f, 5);
        b.insert(&Chain1::from_signed(&f, &[(0, 1), (1, 2)]));
        b.insert(&Chain1::from_signed(&f, &[(1, 1), (3, -1)]));
        b.insert(&Chain1::from_signed(&f, &[(2, 3), (4, 1)]));
        let c = Chain1::from_signed(&f, &[(0, 1), (2, 1), (3, 5), (4, 2)]);
        let (r, t) = b.reduce_with_transcript(&c);
        let mut back = r.clone();
        for (j, x) in t {
            back = back.add_scaled(&f, &x, &b.columns()[j]);
        }
        assert_eq!(back, c);
    }

    #[test]
    fn chain_arithmetic() {
        let f = PrimeField::default();
        let a = ch(&f, &[(0, 1), (2, 1)]);
        let b = ch(&f, &[(2, 1), (3, 1)]);
        assert_eq!(a.sub(&f, &b), ch(&f, &[(0, 1), (3, -1)]));
        assert_eq!(a.add(&f, &a).sub(&f, &a), a);
        assert!(ch(&f, &[(1, 2), (1, -2)]).is_zero());
        assert_eq!(a.low(), Some(2));
    }

    #[test]
    fn boundary_of_bigon_vanishes() {
        let f = PrimeField::default();
        let g = FilteredDigraph::from_unweighted(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(ch(&f, &[(0, 1), (1, 1)]).is_cycle(&f, &g));
        assert!(!ch(&f, &[(0, 1), (1, -1)]).is_cycle(&f, &g));
    }
}
