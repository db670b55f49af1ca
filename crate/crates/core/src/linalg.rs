//! Sparse exact linear algebra over the rationals.
//!
//! Vectors are sorted `(index, value)` lists with no explicit zeros. Matrices
//! are stored row-major as such vectors. Elimination is incremental
//! ([`Echelon`]) so that rank, kernels, span membership and coordinates all
//! share one deterministic pivot order: the leading index of each vector.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, Q};

pub type SVec = Vec<(usize, Q)>;

/// `a + c * b`.
pub fn axpy(a: &[(usize, Q)], c: &Q, b: &[(usize, Q)]) -> SVec {
    if c.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(a: &[(usize, Q)], c: &Q) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

/// Builds a sorted sparse vector, summing duplicate indices.
pub fn svec_from(entries: impl IntoIterator<Item = (usize, Q)>) -> SVec {
    let mut acc: Vec<(usize, Q)> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    acc.sort_by_key(|e| e.0);
    let mut out: SVec = Vec::with_capacity(acc.len());
    for (i, v) in acc {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

pub fn dot(a: &[(usize, Q)], b: &[(usize, Q)]) -> Q {
    let (mut i, mut j) = (0, 0);
    let mut s = Q::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Q::one())
    }

    pub fn scalar(n: usize, c: &Q) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.rows[i].push((i, c.clone()));
            }
        }
        m
    }

    pub fn diagonal(d: &[Q]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, c) in d.iter().enumerate() {
            if !c.is_zero() {
                m.rows[i].push((i, c.clone()));
            }
        }
        m
    }

    pub fn from_triplets(nrows: usize, ncols: usize, triplets: impl IntoIterator<Item = (usize, usize, Q)>) -> Self {
        let mut buckets: Vec<Vec<(usize, Q)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "triplet ({r},{c}) out of {nrows}x{ncols}");
            buckets[r].push((c, v));
        }
        let rows = buckets.into_iter().map(svec_from).collect();
        Self { nrows, ncols, rows }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SVec>) -> Self {
        Self { nrows: rows.len(), ncols, rows }
    }

    pub fn from_columns(nrows: usize, cols: &[SVec]) -> Self {
        let trip = cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v.clone())));
        Self::from_triplets(nrows, cols.len(), trip)
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let trip = rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone())));
        Self::from_triplets(rows.len(), ncols, trip)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.rows[r][k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<SVec> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                rows[*j].push((i, v.clone()));
            }
        }
        Self { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn columns(&self) -> Vec<SVec> {
        self.transpose().rows
    }

    pub fn column(&self, j: usize) -> SVec {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.binary_search_by_key(&j, |e| e.0).ok().map(|k| (i, r[k].1.clone())))
            .collect()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc: HashMap<usize, Q> = HashMap::new();
                for (k, a) in r {
                    for (j, b) in &other.rows[*k] {
                        *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                    }
                }
                svec_from(acc)
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn apply(&self, v: &[(usize, Q)]) -> SVec {
        let mut dense: HashMap<usize, Q> = HashMap::new();
        // column-oriented product through the transpose would be cheaper for
        // repeated use; callers that need that build it themselves
        let pos: HashMap<usize, &Q> = v.iter().map(|(i, x)| (*i, x)).collect();
        for (i, r) in self.rows.iter().enumerate() {
            let mut s = Q::zero();
            for (j, a) in r {
                if let Some(x) = pos.get(j) {
                    s += a * *x;
                }
            }
            if !s.is_zero() {
                dense.insert(i, s);
            }
        }
        svec_from(dense)
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(&Q::one(), other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(&-Q::one(), other)
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Q, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| axpy(a, c, b)).collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn scale(&self, c: &Q) -> SparseMatrix {
        let rows = self.rows.iter().map(|r| scale(r, c)).collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn neg(&self) -> SparseMatrix {
        self.scale(&-Q::one())
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product; basis index of `(i, j)` is `i * other.dim + j`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut rows = Vec::with_capacity(self.nrows * other.nrows);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut r = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        r.push((ja * other.ncols + jb, a * b));
                    }
                }
                rows.push(r);
            }
        }
        SparseMatrix { nrows: self.nrows * other.nrows, ncols: self.ncols * other.ncols, rows }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let col_pos: HashMap<usize, usize> = cols.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        let out = rows
            .iter()
            .map(|&r| svec_from(self.rows[r].iter().filter_map(|(c, v)| col_pos.get(c).map(|k| (*k, v.clone())))))
            .collect();
        SparseMatrix { nrows: rows.len(), ncols: cols.len(), rows: out }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut rows = self.rows.clone();
        for r in &other.rows {
            rows.push(r.iter().map(|(j, v)| (j + self.ncols, v.clone())).collect());
        }
        SparseMatrix { nrows: self.nrows + other.nrows, ncols: self.ncols + other.ncols, rows }
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.clone(), self.ncols)
    }

    /// Basis of the right kernel, one vector per non-pivot column, in column order.
    pub fn kernel(&self) -> Vec<SVec> {
        let mut ech = Echelon::new(self.nrows, true);
        let mut out = Vec::new();
        for (j, col) in self.columns().into_iter().enumerate() {
            if let Inserted::Dependent(coords) = ech.insert(col) {
                let mut v = scale(&coords, &-Q::one());
                v = axpy(&v, &Q::one(), &[(j, Q::one())]);
                out.push(v);
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.ncols]; self.nrows];
        for (i, j, v) in self.triplets() {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.triplets().map(|(i, j, v)| (i, j, rational::to_string(v))).collect(),
        }
    }

    pub fn from_json(m: &MatrixJson) -> crate::error::Result<SparseMatrix> {
        let mut trip = Vec::with_capacity(m.entries.len());
        for (i, j, s) in &m.entries {
            if *i >= m.nrows || *j >= m.ncols {
                return Err(crate::error::Error::Parse(format!("entry ({i},{j}) out of range")));
            }
            trip.push((*i, *j, rational::parse(s)?));
        }
        Ok(SparseMatrix::from_triplets(m.nrows, m.ncols, trip))
    }
}

/// Sparse-triplet JSON encoding shared by every exported matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub nrows: usize,
    pub ncols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

pub enum Inserted {
    Independent,
    /// Coordinates of the inserted vector in terms of the earlier inserted ids.
    Dependent(SVec),
}

/// Incremental echelon form of a growing family of vectors.
///
/// Each stored vector has a distinct leading index with coefficient one.
/// When `track` is set the structure also records every stored vector as a
/// combination of the inserted vectors, so dependencies and coordinates can
/// be read off.
#[derive(Clone, Debug)]
pub struct Echelon {
    lead: HashMap<usize, usize>,
    basis: Vec<SVec>,
    combos: Option<Vec<SVec>>,
    inserted: usize,
    members: Vec<usize>,
}

impl Echelon {
    pub fn new(_dim: usize, track: bool) -> Self {
        Self { lead: HashMap::new(), basis: Vec::new(), combos: track.then(Vec::new), inserted: 0, members: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Ids of the inserted vectors that were independent of their predecessors.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    fn reduce(&self, mut v: SVec, mut combo: Option<SVec>) -> (SVec, Option<SVec>) {
        while let Some((lead, c)) = v.first().cloned() {
            let Some(&k) = self.lead.get(&lead) else { break };
            let f = -c;
            v = axpy(&v, &f, &self.basis[k]);
            if let (Some(acc), Some(combos)) = (combo.as_mut(), self.combos.as_ref()) {
                *acc = axpy(acc, &f, &combos[k]);
            }
        }
        (v, combo)
    }

    pub fn insert(&mut self, v: SVec) -> Inserted {
        let id = self.inserted;
        self.inserted += 1;
        let start = self.combos.is_some().then(|| vec![(id, Q::one())]);
        let (r, combo) = self.reduce(v, start);
        match r.first() {
            None => {
                let coords = combo
                    .map(|c| c.into_iter().filter(|(i, _)| *i != id).map(|(i, x)| (i, -x)).collect())
                    .unwrap_or_default();
                Inserted::Dependent(coords)
            }
            Some((lead, c)) => {
                let inv = Q::one() / c;
                let lead = *lead;
                self.lead.insert(lead, self.basis.len());
                self.basis.push(scale(&r, &inv));
                if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo) {
                    combos.push(scale(&c, &inv));
                }
                self.members.push(id);
                Inserted::Independent
            }
        }
    }

    pub fn contains(&self, v: SVec) -> bool {
        self.reduce(v, None).0.is_empty()
    }

    /// Coordinates of `v` in terms of the inserted vectors, if `v` lies in their span.
    pub fn express(&self, v: SVec) -> Option<SVec> {
        assert!(self.combos.is_some(), "express needs a tracking echelon");
        let (r, combo) = self.reduce(v, Some(Vec::new()));
        if r.is_empty() {
            Some(combo.unwrap().into_iter().map(|(i, x)| (i, -x)).collect())
        } else {
            None
        }
    }
}

/// Rank by sparse elimination, pivoting on the shortest remaining row.
pub fn rank_of_rows(rows: Vec<SVec>, _ncols: usize) -> usize {
    let mut rows: Vec<SVec> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    // bucket rows by leading column; eliminate column by column choosing the
    // sparsest row with that leading index as pivot
    let mut rank = 0;
    let mut by_lead: std::collections::BTreeMap<usize, Vec<SVec>> = std::collections::BTreeMap::new();
    for r in rows.drain(..) {
        by_lead.entry(r[0].0).or_default().push(r);
    }
    while let Some((_, mut group)) = by_lead.pop_first() {
        let pi = (0..group.len()).min_by_key(|&i| group[i].len()).unwrap();
        let pivot = group.swap_remove(pi);
        rank += 1;
        let inv = Q::one() / &pivot[0].1;
        for r in group {
            let f = -(&r[0].1 * &inv);
            let nr = axpy(&r, &f, &pivot);
            if let Some((l, _)) = nr.first() {
                by_lead.entry(*l).or_default().push(nr);
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).is_empty());
    }

    #[test]
    fn product_and_kron() {
        let a = m(&[&[0, 1], &[0, 0]]);
        assert!(a.mul(&a).is_zero());
        let i = SparseMatrix::identity(2);
        let k = a.kron(&i);
        assert_eq!(k.nrows(), 4);
        assert_eq!(k.get(0, 2), qi(1));
        assert_eq!(k.get(1, 3), qi(1));
        assert_eq!(k.nnz(), 2);
    }

    #[test]
    fn echelon_coordinates() {
        let mut e = Echelon::new(3, true);
        e.insert(vec![(0, qi(1)), (1, qi(1))]);
        e.insert(vec![(1, qi(2))]);
        let c = e.express(vec![(0, qi(1)), (1, qi(3))]).unwrap();
        assert_eq!(c, vec![(0, qi(1)), (1, q(1, 1))]);
        assert!(e.express(vec![(2, qi(1))]).is_none());
        match e.insert(vec![(0, qi(2)), (1, qi(4))]) {
            Inserted::Dependent(c) => assert_eq!(c, vec![(0, qi(2)), (1, qi(1))]),
            Inserted::Independent => panic!("should be dependent"),
        }
    }

    #[test]
    fn json_round_trip() {
        let a = m(&[&[1, 0], &[0, -3]]).scale(&q(1, 2));
        assert_eq!(SparseMatrix::from_json(&a.to_json()).unwrap(), a);
    }
}
