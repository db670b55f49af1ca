//! Root systems, Weyl groups and parabolic data.
//!
//! Weights are stored in fundamental-weight coordinates: the `i`-th coordinate
//! of `μ` is `⟨μ, α_i^∨⟩`. The simple root `α_j` is then column `j` of the
//! Cartan matrix `a_ij = ⟨α_i^∨, α_j⟩`. Simple roots follow Bourbaki.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, qi, Q};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "rational::vec")] pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| qi(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|a| a.is_integer())
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.0.iter().all(rational::is_nonneg_integer)
    }

    /// Parses `"1,0"`, `"1/2, -3"` or the empty string (rank zero).
    pub fn parse(s: &str) -> Result<Weight> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',').map(rational::parse).collect::<Result<Vec<_>>>().map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(rational::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

fn parse_label(label: &str) -> Result<Vec<(Family, usize)>> {
    let bad = || Error::UnsupportedType(label.to_string());
    let mut out = Vec::new();
    for part in label.split(['x', 'X', '×']) {
        let part = part.trim();
        let mut chars = part.chars();
        let fam = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ok = match fam {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::G => n == 2,
        };
        if !ok {
            return Err(bad());
        }
        out.push((fam, n));
    }
    let rank: usize = out.iter().map(|c| c.1).sum();
    if out.is_empty() || rank > 4 {
        return Err(bad());
    }
    Ok(out)
}

fn component_cartan(fam: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match fam {
        Family::A => chain(&mut a, n - 1),
        Family::B => {
            chain(&mut a, n - 1);
            a[n - 1][n - 2] = -2;
        }
        Family::C => {
            chain(&mut a, n - 1);
            a[n - 2][n - 1] = -2;
        }
        Family::D => {
            chain(&mut a, n - 2);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        Family::G => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

/// Inverse of a small rational matrix by Gauss-Jordan.
pub fn invert(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("singular matrix");
        a.swap(c, p);
        let inv = Q::one() / &a[c][c];
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, mu: &Weight) -> Weight {
        Weight(self.matrix.iter().map(|row| row.iter().zip(&mu.0).map(|(a, x)| qi(*a) * x).sum()).collect())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub lie_type: String,
    pub cartan: Vec<Vec<i64>>,
    /// `d_i = (α_i, α_i) / 2`, long roots have `d = 1` in each simple factor.
    pub symmetrizer: Vec<Q>,
    pub form_gram: Vec<Vec<Q>>,
    pub simple_roots: Vec<Weight>,
    pub positive_roots: Vec<Weight>,
    /// Positive roots in simple-root coordinates, same order as `positive_roots`.
    pub positive_simple: Vec<Vec<i64>>,
    pub rho: Weight,
    /// Index of the simple factor containing each simple root.
    pub component_of: Vec<usize>,
    cartan_inv: Vec<Vec<Q>>,
    root_index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn build(lie_type: &str) -> Result<RootSystem> {
        let comps = parse_label(lie_type)?;
        let rank: usize = comps.iter().map(|c| c.1).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut component_of = vec![0; rank];
        let mut off = 0;
        for (ci, (fam, n)) in comps.iter().enumerate() {
            let a = component_cartan(*fam, *n);
            for i in 0..*n {
                component_of[off + i] = ci;
                for j in 0..*n {
                    cartan[off + i][off + j] = a[i][j];
                }
            }
            off += n;
        }
        let symmetrizer = symmetrize(&cartan, &component_of);
        let aq: Vec<Vec<Q>> = cartan.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
        let ainv = invert(&aq);
        let form_gram: Vec<Vec<Q>> =
            (0..rank).map(|i| (0..rank).map(|j| &symmetrizer[i] * &ainv[i][j]).collect()).collect();
        let positive_simple = positive_roots_simple(&cartan);
        let to_fund =
            |c: &[i64]| -> Vec<i64> { (0..rank).map(|i| (0..rank).map(|j| cartan[i][j] * c[j]).sum()).collect() };
        let positive_roots: Vec<Weight> = positive_simple.iter().map(|c| Weight::from_ints(&to_fund(c))).collect();
        let simple_roots =
            (0..rank).map(|j| Weight::from_ints(&(0..rank).map(|i| cartan[i][j]).collect::<Vec<_>>())).collect();
        let root_index = positive_simple.iter().enumerate().map(|(k, c)| (c.clone(), k)).collect();
        Ok(RootSystem {
            lie_type: lie_type.to_string(),
            cartan,
            symmetrizer,
            form_gram,
            simple_roots,
            positive_roots,
            positive_simple,
            rho: Weight(vec![Q::one(); rank]),
            component_of,
            cartan_inv: ainv,
            root_index,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    pub fn form(&self, a: &Weight, b: &Weight) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                s += x * &self.form_gram[i][j] * y;
            }
        }
        s
    }

    /// `d_α = (α, α) / 2` for the positive root with index `k`.
    pub fn root_d(&self, k: usize) -> Q {
        let a = &self.positive_roots[k];
        self.form(a, a) / qi(2)
    }

    /// `⟨μ, α^∨⟩` for the positive root with index `k`.
    pub fn coroot_pairing(&self, mu: &Weight, k: usize) -> Q {
        self.form(mu, &self.positive_roots[k]) / self.root_d(k)
    }

    pub fn to_simple_coords(&self, mu: &Weight) -> Vec<Q> {
        let n = self.rank();
        (0..n).map(|j| (0..n).map(|i| &self.cartan_inv[j][i] * &mu.0[i]).sum()).collect()
    }

    /// Index and sign of a root given in simple-root coordinates.
    pub fn find_root_simple(&self, c: &[i64]) -> Option<(usize, bool)> {
        if let Some(&k) = self.root_index.get(c) {
            return Some((k, true));
        }
        let neg: Vec<i64> = c.iter().map(|x| -x).collect();
        self.root_index.get(&neg).map(|&k| (k, false))
    }

    pub fn root_index_simple(&self, c: &[i64]) -> Option<usize> {
        self.root_index.get(c).copied()
    }

    pub fn simple_reflection(&self, i: usize, mu: &Weight) -> Weight {
        let c = mu.0[i].clone();
        mu.sub(&self.simple_roots[i].scale(&c))
    }

    fn reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0i64; n]; n];
        for r in 0..n {
            m[r][r] = 1;
            m[r][i] -= self.cartan[r][i];
        }
        m
    }

    /// The subgroup generated by the listed simple reflections, in BFS order
    /// (so words are reduced and lengths nondecreasing).
    pub fn weyl_subgroup(&self, gens: &[usize]) -> Vec<WeylElement> {
        let n = self.rank();
        let refl: Vec<Vec<Vec<i64>>> = (0..n).map(|i| self.reflection_matrix(i)).collect();
        let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
        let mut out = vec![WeylElement { word: vec![], matrix: id.clone() }];
        seen.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for &i in gens {
                let m = matmul(&refl[i], &out[k].matrix);
                if seen.contains_key(&m) {
                    continue;
                }
                let mut word = vec![i];
                word.extend(&out[k].word);
                seen.insert(m.clone(), out.len());
                queue.push_back(out.len());
                out.push(WeylElement { word, matrix: m });
            }
        }
        out
    }

    pub fn weyl_group(&self) -> Vec<WeylElement> {
        self.weyl_subgroup(&(0..self.rank()).collect::<Vec<_>>())
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let word: Vec<usize> = w.word.iter().rev().copied().collect();
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for &i in &word {
            m = matmul(&m, &self.reflection_matrix(i));
        }
        WeylElement { word, matrix: m }
    }

    pub fn dot_action(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        w.act(&lambda.add(&self.rho)).sub(&self.rho)
    }

    /// Whether a root given in fundamental coordinates is positive.
    pub fn is_positive_root(&self, beta: &Weight) -> bool {
        self.to_simple_coords(beta).iter().all(|c| !c.is_negative())
    }

    /// Dominant representative of the orbit of `mu` under the reflections in `gens`.
    pub fn dominant_rep(&self, mu: &Weight, gens: &[usize]) -> Weight {
        let mut m = mu.clone();
        loop {
            match gens.iter().find(|&&i| m.0[i].is_negative()) {
                Some(&i) => m = self.simple_reflection(i, &m),
                None => return m,
            }
        }
    }

    pub fn all_indices(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    pub fn weyl_conjugate(&self, a: &Weight, b: &Weight) -> bool {
        let g = self.all_indices();
        self.dominant_rep(a, &g) == self.dominant_rep(b, &g)
    }

    pub fn singular_set(&self, lambda: &Weight) -> Vec<usize> {
        (0..self.positive_roots.len()).filter(|&k| self.coroot_pairing(lambda, k).is_zero()).collect()
    }

    pub fn at_least_as_singular(&self, l1: &Weight, l2: &Weight) -> bool {
        let s1 = self.singular_set(l1);
        self.singular_set(l2).iter().all(|k| s1.contains(k))
    }

    pub fn weyl_dimension(&self, lambda: &Weight) -> Q {
        let lr = lambda.add(&self.rho);
        let mut p = Q::one();
        for k in 0..self.positive_roots.len() {
            p *= self.coroot_pairing(&lr, k) / self.coroot_pairing(&self.rho, k);
        }
        p
    }

    /// Eigenvalue of the quadratic Casimir on an irreducible module with
    /// infinitesimal character parameter `x` (i.e. `(x,x) − (ρ,ρ)`).
    pub fn casimir_at(&self, x: &Weight) -> Q {
        self.form(x, x) - self.form(&self.rho, &self.rho)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lie_type": self.lie_type,
            "rank": self.rank(),
            "dim": self.dim(),
            "cartan_matrix": self.cartan,
            "form_gram": self.form_gram.iter().map(|r| r.iter().map(rational::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "simple_roots": self.simple_roots,
            "positive_roots": self.positive_roots,
            "rho": self.rho,
            "weyl_order": self.weyl_group().len(),
        })
    }
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn symmetrize(cartan: &[Vec<i64>], component_of: &[usize]) -> Vec<Q> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    // d_i a_ij = d_j a_ji
                    let dj = d[i].clone().unwrap() * qi(cartan[i][j]) / qi(cartan[j][i]);
                    d[j] = Some(dj);
                    stack.push(j);
                }
            }
        }
    }
    let mut d: Vec<Q> = d.into_iter().map(Option::unwrap).collect();
    let mut maxes: BTreeMap<usize, Q> = BTreeMap::new();
    for i in 0..n {
        let e = maxes.entry(component_of[i]).or_insert_with(|| d[i].clone());
        if d[i] > *e {
            *e = d[i].clone();
        }
    }
    for i in 0..n {
        d[i] = &d[i] / &maxes[&component_of[i]];
    }
    d
}

/// Positive roots in simple-root coordinates via root strings, ordered by
/// height then lexicographically (descending coordinates).
fn positive_roots_simple(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| -> Vec<i64> { (0..n).map(|j| i64::from(i == j)).collect() };
    let mut roots: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // ⟨β, α_i^∨⟩
                let pair: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pair;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort_by(|a, b| b.cmp(a));
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub levi: Vec<usize>,
    /// Indices into `RootSystem::positive_roots`.
    pub h_roots: Vec<usize>,
    pub u_roots: Vec<usize>,
    pub rho_u: Weight,
    pub rho_h: Weight,
    /// Coordinates of the grading element in the coroot basis `H_i`.
    pub xi0: Vec<Q>,
}

impl ParabolicData {
    pub fn build(rs: &RootSystem, levi: &[usize]) -> Result<ParabolicData> {
        let n = rs.rank();
        let mut levi: Vec<usize> = levi.to_vec();
        levi.sort_unstable();
        levi.dedup();
        if levi.iter().any(|&i| i >= n) {
            return Err(Error::Invalid(format!("Levi index out of range for rank {n}")));
        }
        let (mut h_roots, mut u_roots) = (Vec::new(), Vec::new());
        for (k, c) in rs.positive_simple.iter().enumerate() {
            if (0..n).all(|i| c[i] == 0 || levi.contains(&i)) {
                h_roots.push(k);
            } else {
                u_roots.push(k);
            }
        }
        let mut rho_u = Weight::zero(n);
        for &k in &u_roots {
            rho_u = rho_u.add(&rs.positive_roots[k]);
        }
        rho_u = rho_u.scale(&rational::q(1, 2));
        let rho_h = rs.rho.sub(&rho_u);
        // solve A^T x = t
        let at: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| qi(rs.cartan[j][i])).collect()).collect();
        let inv = invert(&at);
        let t: Vec<Q> = (0..n).map(|i| if levi.contains(&i) { Q::zero() } else { Q::one() }).collect();
        let xi0 = (0..n).map(|i| (0..n).map(|j| &inv[i][j] * &t[j]).sum()).collect();
        Ok(ParabolicData { levi, h_roots, u_roots, rho_u, rho_h, xi0 })
    }

    /// Eigenvalue of `ad ξ₀` on the root vector of a root in simple coordinates.
    pub fn grade(&self, c: &[i64]) -> i64 {
        c.iter().enumerate().filter(|(i, _)| !self.levi.contains(i)).map(|(_, x)| x).sum()
    }

    /// `ξ₀` evaluated on a weight in fundamental coordinates.
    pub fn xi0_pairing(&self, mu: &Weight) -> Q {
        self.xi0.iter().zip(&mu.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_levi_dominant_integral(&self, mu: &Weight) -> bool {
        self.levi.iter().all(|&i| rational::is_nonneg_integer(&mu.0[i]))
    }

    pub fn levi_weyl_group(&self, rs: &RootSystem) -> Vec<WeylElement> {
        rs.weyl_subgroup(&self.levi)
    }

    /// Minimal-length representatives of `W_H \ W_G`: `w⁻¹ α_i > 0` for Levi `i`.
    pub fn w1_representatives(&self, rs: &RootSystem) -> Vec<WeylElement> {
        rs.weyl_group()
            .into_iter()
            .filter(|w| {
                let wi = rs.inverse(w);
                self.levi.iter().all(|&i| rs.is_positive_root(&wi.act(&rs.simple_roots[i])))
            })
            .collect()
    }

    pub fn condition_c(&self, rs: &RootSystem, mu: &Weight, nu: &Weight) -> bool {
        let base = mu.add(&self.rho_u);
        rs.at_least_as_singular(&base.add(nu), &base)
    }

    pub fn levi_conjugate(&self, rs: &RootSystem, a: &Weight, b: &Weight) -> bool {
        rs.dominant_rep(a, &self.levi) == rs.dominant_rep(b, &self.levi)
    }

    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        serde_json::json!({
            "levi": self.levi.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "h_roots": self.h_roots.iter().map(|&k| &rs.positive_roots[k]).collect::<Vec<_>>(),
            "u_roots": self.u_roots.iter().map(|&k| &rs.positive_roots[k]).collect::<Vec<_>>(),
            "rho_u": self.rho_u,
            "xi0": self.xi0.iter().map(rational::to_string).collect::<Vec<_>>(),
        })
    }
}

/// Parses a 1-based index list such as `"1,2"` or `""`.
pub fn parse_levi(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            let i: usize = p.trim().parse().map_err(|_| Error::Parse(format!("bad Levi index {p:?}")))?;
            if i == 0 {
                return Err(Error::Parse("Levi indices are 1-based".into()));
            }
            Ok(i - 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn a1_basics() {
        let rs = RootSystem::build("A1").unwrap();
        assert_eq!(rs.positive_roots.len(), 1);
        assert_eq!(rs.form_gram, vec![vec![q(1, 2)]]);
        assert_eq!(rs.rho, Weight::from_ints(&[1]));
    }

    #[test]
    fn root_counts_match_classification() {
        for (t, pos, order) in [
            ("A2", 3, 6),
            ("B2", 4, 8),
            ("C3", 9, 48),
            ("G2", 6, 12),
            ("A3", 6, 24),
            ("D4", 12, 192),
            ("A1xA1", 2, 4),
            ("B3", 9, 48),
        ] {
            let rs = RootSystem::build(t).unwrap();
            assert_eq!(rs.positive_roots.len(), pos, "{t}");
            assert_eq!(rs.weyl_group().len(), order, "{t}");
        }
    }

    #[test]
    fn long_roots_have_length_two() {
        for t in ["B2", "C3", "G2", "A1xB2"] {
            let rs = RootSystem::build(t).unwrap();
            let max = (0..rs.positive_roots.len()).map(|k| rs.root_d(k)).max().unwrap();
            assert_eq!(max, Q::one(), "{t}");
        }
    }

    #[test]
    fn rejects_unsupported() {
        for t in ["E6", "A5", "D3", "G3", "", "Ax"] {
            assert!(RootSystem::build(t).is_err(), "{t}");
        }
    }

    #[test]
    fn parabolic_a2() {
        let rs = RootSystem::build("A2").unwrap();
        let pd = ParabolicData::build(&rs, &[0]).unwrap();
        assert_eq!(pd.u_roots.len(), 2);
        assert_eq!(pd.rho_u, Weight(vec![Q::zero(), q(3, 2)]));
        assert_eq!(pd.w1_representatives(&rs).len(), 3);
    }

    #[test]
    fn dot_action_examples() {
        let rs = RootSystem::build("A1").unwrap();
        let w = rs.weyl_group();
        assert_eq!(rs.dot_action(&w[1], &Weight::from_ints(&[3])), Weight::from_ints(&[-5]));
        let rs = RootSystem::build("A2").unwrap();
        let w0 = rs.weyl_group().into_iter().max_by_key(|w| w.length()).unwrap();
        assert_eq!(rs.dot_action(&w0, &Weight::zero(2)), Weight::from_ints(&[-2, -2]));
    }
}
