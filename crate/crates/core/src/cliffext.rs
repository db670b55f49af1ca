//! The exterior algebra `∧ū` and its operator algebra `End(∧ū)`.
//!
//! `e_i` is left multiplication by `ξ_i`, `ι_i` the contraction with `X_i`
//! (`ι_i ξ_j = δ_ij`, extended as a graded derivation). Basis words are
//! `w_IJ = e_{i₁}⋯e_{i_k} ι_{j₁}⋯ι_{j_l}` with ascending indices, encoded as
//! a pair of bitmasks.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::linalg::SparseMatrix;
use crate::rational::Q;

pub type Mask = u32;

/// Basis of `∧ū`: subsets ordered by size, then lexicographically.
#[derive(Clone, Debug)]
pub struct ExtBasis {
    pub n: usize,
    pub subsets: Vec<Mask>,
    index: Vec<usize>,
}

impl ExtBasis {
    pub fn new(n: usize) -> Self {
        assert!(n <= 20, "exterior algebra too large");
        let mut subsets: Vec<Mask> = (0..(1u32 << n)).collect();
        subsets.sort_by_key(|&m| (m.count_ones(), lex_key(m, n)));
        let mut index = vec![0; 1 << n];
        for (k, &m) in subsets.iter().enumerate() {
            index[m as usize] = k;
        }
        ExtBasis { n, subsets, index }
    }

    pub fn dim(&self) -> usize {
        self.subsets.len()
    }

    pub fn index(&self, m: Mask) -> usize {
        self.index[m as usize]
    }

    /// Indices of the degree-`k` basis vectors.
    pub fn degree_block(&self, k: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.subsets[i].count_ones() as usize == k).collect()
    }

    pub fn e_matrix(&self, i: usize) -> SparseMatrix {
        let trip = self
            .subsets
            .iter()
            .enumerate()
            .filter(|&(_c, &s)| s & (1 << i) == 0)
            .map(|(c, &s)| (self.index(s | (1 << i)), c, sign_before(s, i)));
        SparseMatrix::from_triplets(self.dim(), self.dim(), trip)
    }

    pub fn iota_matrix(&self, i: usize) -> SparseMatrix {
        let trip = self
            .subsets
            .iter()
            .enumerate()
            .filter(|&(_c, &s)| s & (1 << i) != 0)
            .map(|(c, &s)| (self.index(s & !(1 << i)), c, sign_before(s, i)));
        SparseMatrix::from_triplets(self.dim(), self.dim(), trip)
    }

    /// Matrix of `w_IJ`.
    pub fn word_matrix(&self, i: Mask, j: Mask) -> SparseMatrix {
        let mut trip = Vec::new();
        for (c, &s) in self.subsets.iter().enumerate() {
            // ι_{j₁}⋯ι_{j_l} acts first, rightmost letter first
            let mut cur = s;
            let mut sign = Q::one();
            let mut ok = true;
            for b in bits(j).into_iter().rev() {
                if cur & (1 << b) == 0 {
                    ok = false;
                    break;
                }
                sign *= sign_before(cur, b);
                cur &= !(1 << b);
            }
            if !ok {
                continue;
            }
            for b in bits(i).into_iter().rev() {
                if cur & (1 << b) != 0 {
                    ok = false;
                    break;
                }
                sign *= sign_before(cur, b);
                cur |= 1 << b;
            }
            if ok {
                trip.push((self.index(cur), c, sign));
            }
        }
        SparseMatrix::from_triplets(self.dim(), self.dim(), trip)
    }

    pub fn to_matrix(&self, w: &EndWord) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim(), self.dim());
        for (&(i, j), c) in &w.terms {
            out = out.add_scaled(c, &self.word_matrix(i, j));
        }
        out
    }
}

fn lex_key(m: Mask, n: usize) -> Vec<usize> {
    (0..n).filter(|&b| m & (1 << b) != 0).collect()
}

pub fn bits(m: Mask) -> Vec<usize> {
    (0..32).filter(|&b| m & (1 << b) != 0).collect()
}

/// `(−1)^{#{s ∈ S : s < i}}`.
pub fn sign_before(s: Mask, i: usize) -> Q {
    if (s & ((1u32 << i) - 1)).count_ones().is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Sign of concatenating two ascending index sets into ascending order, or
/// `None` if they overlap.
pub fn merge_sign(a: Mask, b: Mask) -> Option<Q> {
    if a & b != 0 {
        return None;
    }
    let inversions: u32 = bits(b).iter().map(|&k| (a >> (k + 1)).count_ones()).sum();
    Some(if inversions.is_multiple_of(2) { Q::one() } else { -Q::one() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtLetter {
    E(usize),
    I(usize),
}

impl ExtLetter {
    fn key(&self) -> (u8, usize) {
        match self {
            ExtLetter::E(i) => (0, *i),
            ExtLetter::I(i) => (1, *i),
        }
    }
}

/// Element of `End(∧ū)` in the normal-ordered basis `w_IJ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EndWord {
    pub terms: BTreeMap<(Mask, Mask), Q>,
}

impl EndWord {
    pub fn zero() -> Self {
        EndWord::default()
    }

    pub fn one() -> Self {
        EndWord::word(0, 0, Q::one())
    }

    pub fn word(i: Mask, j: Mask, c: Q) -> Self {
        let mut w = EndWord::zero();
        w.add_term((i, j), c);
        w
    }

    pub fn e(i: usize) -> Self {
        EndWord::word(1 << i, 0, Q::one())
    }

    pub fn iota(i: usize) -> Self {
        EndWord::word(0, 1 << i, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: (Mask, Mask), c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn axpy(&mut self, c: &Q, o: &EndWord) {
        for (k, x) in &o.terms {
            self.add_term(*k, c * x);
        }
    }

    pub fn scale(&self, c: &Q) -> EndWord {
        let mut out = EndWord::zero();
        out.axpy(c, self);
        out
    }

    /// Parity of a homogeneous element (`None` for the zero element or mixed parity).
    pub fn parity(&self) -> Option<u32> {
        let mut p = None;
        for &(i, j) in self.terms.keys() {
            let q = (i.count_ones() + j.count_ones()) % 2;
            match p {
                None => p = Some(q),
                Some(x) if x != q => return None,
                _ => {}
            }
        }
        p
    }
}

/// Normal form of an arbitrary product of `e`/`ι` letters.
pub fn normalize_letters(letters: &[ExtLetter]) -> EndWord {
    let mut out = EndWord::zero();
    let mut work: Vec<(Q, Vec<ExtLetter>)> = vec![(Q::one(), letters.to_vec())];
    while let Some((c, seq)) = work.pop() {
        let pos = seq.windows(2).position(|w| w[0].key() >= w[1].key());
        let Some(t) = pos else {
            let mut i: Mask = 0;
            let mut j: Mask = 0;
            for l in &seq {
                match l {
                    ExtLetter::E(a) => i |= 1 << a,
                    ExtLetter::I(a) => j |= 1 << a,
                }
            }
            out.add_term((i, j), c);
            continue;
        };
        let (a, b) = (seq[t], seq[t + 1]);
        if a == b {
            continue;
        }
        let mut swapped = seq.clone();
        swapped.swap(t, t + 1);
        work.push((-c.clone(), swapped));
        if let (ExtLetter::I(x), ExtLetter::E(y)) = (a, b) {
            if x == y {
                let mut removed = seq.clone();
                removed.drain(t..t + 2);
                work.push((c, removed));
            }
        }
    }
    out
}

/// Multiplication in `End(∧ū)`, memoizing the reordering of `ι_J e_K`.
#[derive(Default)]
pub struct EndAlgebra {
    memo: Mutex<HashMap<(Mask, Mask), EndWord>>,
}

impl EndAlgebra {
    pub fn new() -> Self {
        Self::default()
    }

    fn iota_e(&self, j: Mask, k: Mask) -> EndWord {
        if j == 0 || k == 0 {
            return EndWord::word(k, j, Q::one());
        }
        if let Some(w) = self.memo.lock().unwrap().get(&(j, k)) {
            return w.clone();
        }
        let mut letters: Vec<ExtLetter> = bits(j).into_iter().map(ExtLetter::I).collect();
        letters.extend(bits(k).into_iter().map(ExtLetter::E));
        let w = normalize_letters(&letters);
        self.memo.lock().unwrap().insert((j, k), w.clone());
        w
    }

    pub fn mul_words(&self, (i, j): (Mask, Mask), (k, l): (Mask, Mask)) -> EndWord {
        let mut out = EndWord::zero();
        for (&(kk, jj), c) in &self.iota_e(j, k).terms {
            let (Some(s1), Some(s2)) = (merge_sign(i, kk), merge_sign(jj, l)) else { continue };
            out.add_term((i | kk, jj | l), c * s1 * s2);
        }
        out
    }

    pub fn mul(&self, a: &EndWord, b: &EndWord) -> EndWord {
        let mut out = EndWord::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                out.axpy(&(ca * cb), &self.mul_words(*ka, *kb));
            }
        }
        out
    }

    /// Graded commutator `ab − (−1)^{|a||b|} ba` of homogeneous elements.
    pub fn graded_commutator(&self, a: &EndWord, b: &EndWord) -> EndWord {
        let sign = match (a.parity(), b.parity()) {
            (Some(1), Some(1)) => Q::one(),
            _ => -Q::one(),
        };
        let mut out = self.mul(a, b);
        out.axpy(&sign, &self.mul(b, a));
        out
    }
}

/// Element of `∧(ū ⊕ u)` in the basis `ξ_I ∧ X_J`.
pub type Wedge = BTreeMap<(Mask, Mask), Q>;

/// The linear isomorphism `s(w_IJ) = ξ_I ∧ X_J`.
pub fn symbol_s(w: &EndWord) -> Wedge {
    w.terms.clone()
}

pub fn symbol_s_inverse(x: &Wedge) -> EndWord {
    EndWord { terms: x.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (*k, c.clone())).collect() }
}

/// Contraction removing the letter `X_i` from `ξ_I ∧ X_J`, as a graded
/// derivation: the sign is `(−1)` to the number of letters preceding `X_i`.
pub fn contract_x(i: usize, x: &Wedge) -> Wedge {
    let mut out = Wedge::new();
    for (&(a, b), c) in x {
        if b & (1 << i) == 0 {
            continue;
        }
        let before = a.count_ones() + (b & ((1 << i) - 1)).count_ones();
        let v = if before.is_multiple_of(2) { c.clone() } else { -c.clone() };
        let e = out.entry((a, b & !(1 << i))).or_insert_with(Q::zero);
        *e += v;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Echelon;

    #[test]
    fn anticommutation_examples() {
        let w = normalize_letters(&[ExtLetter::I(0), ExtLetter::E(0)]);
        let mut expect = EndWord::one();
        expect.add_term((1, 1), -Q::one());
        assert_eq!(w, expect);
        assert!(normalize_letters(&[ExtLetter::E(0), ExtLetter::E(0)]).is_zero());
    }

    #[test]
    fn words_span_full_matrix_algebra() {
        for n in 1..=3 {
            let b = ExtBasis::new(n);
            let mut ech = Echelon::new(1 << (2 * n), false);
            for i in 0..(1u32 << n) {
                for j in 0..(1u32 << n) {
                    let m = b.word_matrix(i, j);
                    let d = b.dim();
                    let v = crate::linalg::svec_from(m.triplets().map(|(r, c, x)| (r * d + c, x.clone())));
                    ech.insert(v);
                }
            }
            assert_eq!(ech.rank(), 1 << (2 * n));
        }
    }

    #[test]
    fn matrices_respect_products() {
        let n = 3;
        let b = ExtBasis::new(n);
        let alg = EndAlgebra::new();
        for i in 0..8u32 {
            for j in 0..8u32 {
                for k in 0..8u32 {
                    for l in [0u32, 1, 6] {
                        let p = alg.mul_words((i, j), (k, l));
                        assert_eq!(b.to_matrix(&p), b.word_matrix(i, j).mul(&b.word_matrix(k, l)));
                    }
                }
            }
        }
    }

    #[test]
    fn basis_block_sizes() {
        let b = ExtBasis::new(4);
        let sizes: Vec<usize> = (0..=4).map(|k| b.degree_block(k).len()).collect();
        assert_eq!(sizes, vec![1, 4, 6, 4, 1]);
    }
}
