//! Finite-dimensional weight modules with exact generator matrices.
//!
//! A [`WeightedModule`] records a weight basis and, for every simple index
//! `i`, matrices of `E_i` and `F_i`. Only the indices in `acting` carry
//! nonzero raising and lowering operators: for a module over the Levi factor
//! `h` these are the Levi simple roots, for a `g`-module all of them. `H_i`
//! is always diagonal and read off from the weights.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, Inserted, MatrixJson, SVec, SparseMatrix};
use crate::rational::{qi, Q};
use crate::rootsys::{invert, ParabolicData, RootSystem, Weight};

pub const DEFAULT_DIM_CAP: usize = 400;
pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedModule {
    pub rank: usize,
    pub acting: Vec<usize>,
    pub weights: Vec<Weight>,
    pub e: Vec<SparseMatrix>,
    pub f: Vec<SparseMatrix>,
    pub highest_weight: Option<Weight>,
}

pub type Character = BTreeMap<Weight, i64>;

impl WeightedModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn zero(rank: usize, acting: &[usize]) -> Self {
        WeightedModule {
            rank,
            acting: acting.to_vec(),
            weights: Vec::new(),
            e: vec![SparseMatrix::zeros(0, 0); rank],
            f: vec![SparseMatrix::zeros(0, 0); rank],
            highest_weight: None,
        }
    }

    /// One-dimensional module of the given weight (a character of the torus,
    /// trivial on the acting root vectors).
    pub fn line(weight: Weight, acting: &[usize]) -> Self {
        let rank = weight.rank();
        WeightedModule {
            rank,
            acting: acting.to_vec(),
            weights: vec![weight.clone()],
            e: vec![SparseMatrix::zeros(1, 1); rank],
            f: vec![SparseMatrix::zeros(1, 1); rank],
            highest_weight: Some(weight),
        }
    }

    pub fn trivial(rank: usize, acting: &[usize]) -> Self {
        Self::line(Weight::zero(rank), acting)
    }

    pub fn h(&self, i: usize) -> SparseMatrix {
        SparseMatrix::diagonal(&self.weights.iter().map(|w| w.0[i].clone()).collect::<Vec<_>>())
    }

    pub fn character(&self) -> Character {
        let mut c = Character::new();
        for w in &self.weights {
            *c.entry(w.clone()).or_insert(0) += 1;
        }
        c
    }

    /// Basis indices grouped by weight, in ascending weight order.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut m: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (k, w) in self.weights.iter().enumerate() {
            m.entry(w.clone()).or_default().push(k);
        }
        m
    }

    pub fn tensor(&self, other: &WeightedModule) -> Result<WeightedModule> {
        if self.rank != other.rank || self.acting != other.acting {
            return Err(Error::Mismatch("tensor factors act through different algebras".into()));
        }
        let ia = SparseMatrix::identity(self.dim());
        let ib = SparseMatrix::identity(other.dim());
        let lift = |a: &SparseMatrix, b: &SparseMatrix| a.kron(&ib).add(&ia.kron(b));
        let weights = self.weights.iter().flat_map(|a| other.weights.iter().map(move |b| a.add(b))).collect();
        Ok(WeightedModule {
            rank: self.rank,
            acting: self.acting.clone(),
            weights,
            e: (0..self.rank).map(|i| lift(&self.e[i], &other.e[i])).collect(),
            f: (0..self.rank).map(|i| lift(&self.f[i], &other.f[i])).collect(),
            highest_weight: None,
        })
    }

    pub fn dual(&self) -> WeightedModule {
        let neg_t = |m: &SparseMatrix| m.transpose().neg();
        WeightedModule {
            rank: self.rank,
            acting: self.acting.clone(),
            weights: self.weights.iter().map(Weight::neg).collect(),
            e: self.e.iter().map(neg_t).collect(),
            f: self.f.iter().map(neg_t).collect(),
            highest_weight: None,
        }
    }

    pub fn direct_sum(&self, other: &WeightedModule) -> Result<WeightedModule> {
        if self.rank != other.rank || self.acting != other.acting {
            return Err(Error::Mismatch("summands act through different algebras".into()));
        }
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        Ok(WeightedModule {
            rank: self.rank,
            acting: self.acting.clone(),
            weights,
            e: (0..self.rank).map(|i| self.e[i].direct_sum(&other.e[i])).collect(),
            f: (0..self.rank).map(|i| self.f[i].direct_sum(&other.f[i])).collect(),
            highest_weight: None,
        })
    }

    /// Restriction to the subalgebra generated by the torus and the simple
    /// root vectors in `acting`.
    pub fn restrict(&self, acting: &[usize]) -> WeightedModule {
        let n = self.dim();
        let keep = |i: usize, m: &SparseMatrix| {
            if acting.contains(&i) {
                m.clone()
            } else {
                SparseMatrix::zeros(n, n)
            }
        };
        WeightedModule {
            rank: self.rank,
            acting: acting.to_vec(),
            weights: self.weights.clone(),
            e: (0..self.rank).map(|i| keep(i, &self.e[i])).collect(),
            f: (0..self.rank).map(|i| keep(i, &self.f[i])).collect(),
            highest_weight: None,
        }
    }

    /// The submodule spanned by weight vectors `basis` (columns in the
    /// ambient basis), which must be stable under the acting generators.
    pub fn submodule(&self, basis: &[SVec]) -> Result<WeightedModule> {
        let mut ech = Echelon::new(self.dim(), true);
        for b in basis {
            if let Inserted::Dependent(_) = ech.insert(b.clone()) {
                return Err(Error::Invariant("submodule basis is linearly dependent".into()));
            }
        }
        let weights: Vec<Weight> =
            basis.iter().map(|b| self.weights[b.first().expect("zero basis vector").0].clone()).collect();
        let restrict = |m: &SparseMatrix| -> Result<SparseMatrix> {
            let cols = basis
                .iter()
                .map(|b| ech.express(m.apply(b)).ok_or_else(|| Error::Invariant("subspace is not stable".into())))
                .collect::<Result<Vec<_>>>()?;
            Ok(SparseMatrix::from_columns(basis.len(), &cols))
        };
        Ok(WeightedModule {
            rank: self.rank,
            acting: self.acting.clone(),
            weights,
            e: self.e.iter().map(restrict).collect::<Result<_>>()?,
            f: self.f.iter().map(restrict).collect::<Result<_>>()?,
            highest_weight: None,
        })
    }

    /// Commutation relations `[H_i,E_j] = a_ij E_j`, `[H_i,F_j] = −a_ij F_j`,
    /// `[E_i,F_j] = δ_ij H_i` on the acting indices.
    pub fn check_relations(&self, rs: &RootSystem) -> Result<()> {
        for i in 0..self.rank {
            let hi = self.h(i);
            for &j in &self.acting {
                let a = qi(rs.cartan[i][j]);
                if hi.commutator(&self.e[j]) != self.e[j].scale(&a) {
                    return Err(Error::Invariant(format!("[H{},E{}] relation fails", i + 1, j + 1)));
                }
                if hi.commutator(&self.f[j]) != self.f[j].scale(&-a) {
                    return Err(Error::Invariant(format!("[H{},F{}] relation fails", i + 1, j + 1)));
                }
            }
        }
        for &i in &self.acting {
            for &j in &self.acting {
                let c = self.e[i].commutator(&self.f[j]);
                let expect = if i == j { self.h(i) } else { SparseMatrix::zeros(self.dim(), self.dim()) };
                if c != expect {
                    return Err(Error::Invariant(format!("[E{},F{}] relation fails", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            version: CACHE_VERSION,
            rank: self.rank,
            acting: self.acting.clone(),
            weights: self.weights.clone(),
            e: self.e.iter().map(SparseMatrix::to_json).collect(),
            f: self.f.iter().map(SparseMatrix::to_json).collect(),
            highest_weight: self.highest_weight.clone(),
        }
    }

    pub fn from_json(j: &ModuleJson) -> Result<WeightedModule> {
        if j.version != CACHE_VERSION {
            return Err(Error::Parse(format!("module cache version {} unsupported", j.version)));
        }
        Ok(WeightedModule {
            rank: j.rank,
            acting: j.acting.clone(),
            weights: j.weights.clone(),
            e: j.e.iter().map(SparseMatrix::from_json).collect::<Result<_>>()?,
            f: j.f.iter().map(SparseMatrix::from_json).collect::<Result<_>>()?,
            highest_weight: j.highest_weight.clone(),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub version: u32,
    pub rank: usize,
    pub acting: Vec<usize>,
    pub weights: Vec<Weight>,
    pub e: Vec<MatrixJson>,
    pub f: Vec<MatrixJson>,
    pub highest_weight: Option<Weight>,
}

struct Space {
    gram: Vec<Vec<Q>>,
    /// `e[j][b]`: coordinates of `E_j b` in the space of weight `μ + α_j`.
    e: BTreeMap<usize, Vec<SVec>>,
}

impl Space {
    fn dim(&self) -> usize {
        self.gram.len()
    }
}

/// Irreducible highest-weight module of the algebra generated by the torus
/// and the simple root vectors in `acting`.
///
/// The weight spaces are built top-down. Candidates for weight `μ` are
/// `F_i b` with `b` a basis vector of weight `μ + α_i`. Raising operators on
/// candidates follow from `E_j F_i = F_i E_j + δ_ij H_i`, the contravariant
/// form from `⟨F_i b, c⟩ = ⟨b, E_i c⟩`. A maximal set of candidates with
/// independent Gram rows is a basis of the irreducible quotient.
pub fn build_highest_weight(rs: &RootSystem, acting: &[usize], lambda: &Weight, cap: usize) -> Result<WeightedModule> {
    let rank = rs.rank();
    if lambda.rank() != rank {
        return Err(Error::Invalid(format!("weight {lambda} has wrong rank for {}", rs.lie_type)));
    }
    if !acting.iter().all(|&i| crate::rational::is_nonneg_integer(&lambda.0[i])) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut acting = acting.to_vec();
    acting.sort_unstable();
    let mut spaces: BTreeMap<Weight, Space> = BTreeMap::new();
    // f_maps[(i, μ)][b]: coordinates in space μ of F_i applied to basis b of μ + α_i
    let mut f_maps: BTreeMap<(usize, Weight), Vec<SVec>> = BTreeMap::new();
    let mut order: Vec<Weight> = vec![lambda.clone()];
    spaces.insert(lambda.clone(), Space { gram: vec![vec![Q::one()]], e: BTreeMap::new() });
    let mut total = 1usize;
    let mut level: Vec<Weight> = vec![lambda.clone()];
    while !level.is_empty() {
        let mut targets: BTreeSet<Weight> = BTreeSet::new();
        for w in &level {
            for &i in &acting {
                targets.insert(w.sub(&rs.simple_roots[i]));
            }
        }
        let mut next = Vec::new();
        for mu in targets.into_iter().rev() {
            let mut cands: Vec<(usize, usize)> = Vec::new();
            for &i in &acting {
                if let Some(sp) = spaces.get(&mu.add(&rs.simple_roots[i])) {
                    cands.extend((0..sp.dim()).map(|b| (i, b)));
                }
            }
            // raising operators on every candidate
            let mut raised: Vec<BTreeMap<usize, SVec>> = Vec::with_capacity(cands.len());
            for &(i, b) in &cands {
                let src = mu.add(&rs.simple_roots[i]);
                let mut per_j = BTreeMap::new();
                for &j in &acting {
                    let tgt = mu.add(&rs.simple_roots[j]);
                    if !spaces.contains_key(&tgt) {
                        continue;
                    }
                    let mut v: SVec = Vec::new();
                    if let Some(ej) = spaces[&src].e.get(&j) {
                        let ejb = &ej[b];
                        if !ejb.is_empty() {
                            let fi = &f_maps[&(i, tgt.clone())];
                            for (k, c) in ejb {
                                v = linalg::axpy(&v, c, &fi[*k]);
                            }
                        }
                    }
                    if i == j {
                        v = linalg::axpy(&v, &src.0[i], &[(b, Q::one())]);
                    }
                    per_j.insert(j, v);
                }
                raised.push(per_j);
            }
            let n = cands.len();
            let mut gram = vec![vec![Q::zero(); n]; n];
            for (a, &(i, b)) in cands.iter().enumerate() {
                let src = &spaces[&mu.add(&rs.simple_roots[i])];
                for c in 0..n {
                    let ec = &raised[c][&i];
                    gram[a][c] = ec.iter().map(|(k, x)| &src.gram[b][*k] * x).sum();
                }
            }
            let mut ech = Echelon::new(n, false);
            let mut sel = Vec::new();
            for (a, row) in gram.iter().enumerate() {
                let r: SVec = linalg::svec_from(row.iter().cloned().enumerate());
                if let Inserted::Independent = ech.insert(r) {
                    sel.push(a);
                }
            }
            if sel.is_empty() {
                continue;
            }
            total += sel.len();
            if total > cap {
                return Err(Error::DimensionCap { dim: total, cap });
            }
            let gsel: Vec<Vec<Q>> = sel.iter().map(|&a| sel.iter().map(|&c| gram[a][c].clone()).collect()).collect();
            let ginv = invert(&gsel);
            for (c, &(i, b)) in cands.iter().enumerate() {
                let rhs: Vec<&Q> = sel.iter().map(|&a| &gram[a][c]).collect();
                let coords = linalg::svec_from(
                    (0..sel.len()).map(|r| (r, (0..sel.len()).map(|s| &ginv[r][s] * rhs[s]).sum::<Q>())),
                );
                let entry = f_maps
                    .entry((i, mu.clone()))
                    .or_insert_with(|| vec![Vec::new(); spaces[&mu.add(&rs.simple_roots[i])].dim()]);
                entry[b] = coords;
            }
            let mut e: BTreeMap<usize, Vec<SVec>> = BTreeMap::new();
            for &j in &acting {
                if spaces.contains_key(&mu.add(&rs.simple_roots[j])) {
                    e.insert(j, sel.iter().map(|&a| raised[a][&j].clone()).collect());
                }
            }
            spaces.insert(mu.clone(), Space { gram: gsel, e });
            order.push(mu.clone());
            next.push(mu);
        }
        level = next;
    }
    // global basis: weights in construction order
    let mut offset: BTreeMap<Weight, usize> = BTreeMap::new();
    let mut weights = Vec::with_capacity(total);
    for w in &order {
        offset.insert(w.clone(), weights.len());
        weights.extend(std::iter::repeat_n(w.clone(), spaces[w].dim()));
    }
    let mut e_trip: Vec<Vec<(usize, usize, Q)>> = vec![Vec::new(); rank];
    let mut f_trip: Vec<Vec<(usize, usize, Q)>> = vec![Vec::new(); rank];
    for w in &order {
        let o = offset[w];
        for (j, cols) in &spaces[w].e {
            let t = offset[&w.add(&rs.simple_roots[*j])];
            for (b, col) in cols.iter().enumerate() {
                for (k, x) in col {
                    e_trip[*j].push((t + k, o + b, x.clone()));
                }
            }
        }
    }
    for ((i, mu), cols) in &f_maps {
        let t = offset[mu];
        let s = offset[&mu.add(&rs.simple_roots[*i])];
        for (b, col) in cols.iter().enumerate() {
            for (k, x) in col {
                f_trip[*i].push((t + k, s + b, x.clone()));
            }
        }
    }
    Ok(WeightedModule {
        rank,
        acting,
        e: e_trip.into_iter().map(|t| SparseMatrix::from_triplets(total, total, t)).collect(),
        f: f_trip.into_iter().map(|t| SparseMatrix::from_triplets(total, total, t)).collect(),
        weights,
        highest_weight: Some(lambda.clone()),
    })
}

/// Irreducible `g`-module of highest weight `lambda`.
pub fn build_irrep(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<WeightedModule> {
    if lambda.rank() != rs.rank() {
        return Err(Error::Invalid(format!("weight {lambda} has wrong rank for {}", rs.lie_type)));
    }
    if !lambda.is_dominant_integral() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let dim = rs.weyl_dimension(lambda).to_usize().unwrap_or(usize::MAX);
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    build_highest_weight(rs, &rs.all_indices(), lambda, cap)
}

/// Irreducible `h`-module of highest weight `lambda`; the coordinates
/// outside the Levi subset are arbitrary rationals.
pub fn build_levi_irrep(rs: &RootSystem, pd: &ParabolicData, lambda: &Weight) -> Result<WeightedModule> {
    build_highest_weight(rs, &pd.levi, lambda, DEFAULT_DIM_CAP)
}

/// Weight multiplicities of the irreducible module of highest weight
/// `lambda` over the Levi subalgebra with simple roots `acting`, by
/// Freudenthal's recursion.
pub fn freudenthal(rs: &RootSystem, acting: &[usize], lambda: &Weight) -> Character {
    let roots: Vec<usize> = (0..rs.positive_roots.len())
        .filter(|&k| (0..rs.rank()).all(|i| rs.positive_simple[k][i] == 0 || acting.contains(&i)))
        .collect();
    let mut rho_s = Weight::zero(rs.rank());
    for &k in &roots {
        rho_s = rho_s.add(&rs.positive_roots[k]);
    }
    rho_s = rho_s.scale(&crate::rational::q(1, 2));
    let lr = lambda.add(&rho_s);
    let top = rs.form(&lr, &lr);
    let top_height = height(rs, acting, lambda);
    let mut mult: Character = Character::new();
    mult.insert(lambda.clone(), 1);
    let mut level = vec![lambda.clone()];
    while !level.is_empty() {
        let mut targets: BTreeSet<Weight> = BTreeSet::new();
        for w in &level {
            for &i in acting {
                targets.insert(w.sub(&rs.simple_roots[i]));
            }
        }
        let mut next = Vec::new();
        for mu in targets {
            let mut num = Q::zero();
            for &k in &roots {
                let alpha = &rs.positive_roots[k];
                let mut w = mu.add(alpha);
                while height(rs, acting, &w) <= top_height {
                    if let Some(&m) = mult.get(&w) {
                        num += qi(m) * rs.form(&w, alpha);
                    }
                    w = w.add(alpha);
                }
            }
            num *= qi(2);
            if num.is_zero() {
                continue;
            }
            let mr = mu.add(&rho_s);
            let den = &top - rs.form(&mr, &mr);
            let m = num / den;
            assert!(m.is_integer() && m.is_positive(), "Freudenthal produced {m}");
            mult.insert(mu.clone(), m.to_integer().to_i64().unwrap());
            next.push(mu);
        }
        level = next;
    }
    mult
}

/// `S`-height of a weight: sum of its simple-root coordinates over `acting`.
fn height(rs: &RootSystem, acting: &[usize], mu: &Weight) -> Q {
    let c = rs.to_simple_coords(mu);
    acting.iter().map(|&i| c[i].clone()).sum()
}

/// Decomposes a character into irreducible characters of the Levi algebra
/// with simple roots `acting`; returns highest weights with multiplicities.
pub fn decompose_character(rs: &RootSystem, acting: &[usize], ch: &Character) -> Result<Vec<(Weight, i64)>> {
    let mut rest: Character = ch.iter().filter(|(_, &m)| m != 0).map(|(w, m)| (w.clone(), *m)).collect();
    let mut out = Vec::new();
    while let Some(top) =
        rest.keys().max_by(|a, b| height(rs, acting, a).cmp(&height(rs, acting, b)).then(a.cmp(b))).cloned()
    {
        let m = rest[&top];
        if m < 0 || !acting.iter().all(|&i| crate::rational::is_nonneg_integer(&top.0[i])) {
            return Err(Error::Invariant(format!("character is not a sum of irreducibles (top {top})")));
        }
        for (w, k) in freudenthal(rs, acting, &top) {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= m * k;
            if *e == 0 {
                rest.remove(&w);
            }
        }
        out.push((top, m));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

/// An isotypic component of a module over the acting algebra.
#[derive(Clone, Debug)]
pub struct Isotypic {
    pub highest_weight: Weight,
    pub multiplicity: usize,
    /// Weight vectors spanning the component, as columns in the ambient basis.
    pub basis: Vec<SVec>,
}

/// Isotypic decomposition: highest weight vectors are the common kernel of
/// the acting raising operators inside each weight space, and each
/// component is spanned by lowering them.
pub fn isotypic_components(m: &WeightedModule) -> Vec<Isotypic> {
    let mut out = Vec::new();
    let spaces = m.weight_spaces();
    for (w, idx) in spaces.iter().rev() {
        if !m.acting.iter().all(|&i| crate::rational::is_nonneg_integer(&w.0[i])) {
            continue;
        }
        let stacked: Vec<SVec> = m
            .acting
            .iter()
            .flat_map(|&i| {
                let sel = m.e[i].select(&(0..m.dim()).collect::<Vec<_>>(), idx);
                sel.rows().to_vec()
            })
            .filter(|r| !r.is_empty())
            .collect();
        let kmat = SparseMatrix::from_rows(idx.len(), stacked);
        let kernel = kmat.kernel();
        if kernel.is_empty() {
            continue;
        }
        let hw: Vec<SVec> = kernel.iter().map(|v| v.iter().map(|(k, x)| (idx[*k], x.clone())).collect()).collect();
        let mut ech = Echelon::new(m.dim(), false);
        let mut basis = Vec::new();
        let mut frontier = Vec::new();
        for v in hw.iter() {
            if let Inserted::Independent = ech.insert(v.clone()) {
                basis.push(v.clone());
                frontier.push(v.clone());
            }
        }
        while let Some(v) = frontier.pop() {
            for &i in &m.acting {
                let fv = m.f[i].apply(&v);
                if fv.is_empty() {
                    continue;
                }
                if let Inserted::Independent = ech.insert(fv.clone()) {
                    basis.push(fv.clone());
                    frontier.push(fv);
                }
            }
        }
        out.push(Isotypic { highest_weight: w.clone(), multiplicity: hw.len(), basis });
    }
    out
}

#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    /// Dominant representative of the `W_H`-orbit of `θ + ρ_h`.
    pub orbit_rep: Weight,
    pub constituents: Vec<(Weight, usize)>,
    pub basis: Vec<SVec>,
    pub projection: SparseMatrix,
}

/// Groups the isotypic components of an `h`-module by the `W_H`-orbit of
/// `θ + ρ_h` and returns the components with their idempotents.
pub fn primary_decompose(rs: &RootSystem, pd: &ParabolicData, m: &WeightedModule) -> Vec<PrimaryComponent> {
    let iso = isotypic_components(m);
    let mut groups: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (k, c) in iso.iter().enumerate() {
        let rep = rs.dominant_rep(&c.highest_weight.add(&pd.rho_h), &pd.levi);
        groups.entry(rep).or_default().push(k);
    }
    // change of basis per weight space
    let spaces = m.weight_spaces();
    let mut proj_trip: BTreeMap<Weight, Vec<(usize, usize, Q)>> = BTreeMap::new();
    for (w, idx) in &spaces {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(a, b)| (*b, a)).collect();
        let mut cols: Vec<(Weight, Vec<Q>)> = Vec::new();
        for (rep, ks) in &groups {
            for &k in ks {
                for v in &iso[k].basis {
                    if m.weights[v[0].0] == *w {
                        let mut d = vec![Q::zero(); idx.len()];
                        for (i, x) in v {
                            d[pos[i]] = x.clone();
                        }
                        cols.push((rep.clone(), d));
                    }
                }
            }
        }
        assert_eq!(cols.len(), idx.len(), "isotypic bases do not fill the weight space {w}");
        let n = idx.len();
        let pmat: Vec<Vec<Q>> = (0..n).map(|r| (0..n).map(|c| cols[c].1[r].clone()).collect()).collect();
        let pinv = invert(&pmat);
        for rep in groups.keys() {
            let t = proj_trip.entry(rep.clone()).or_default();
            for r in 0..n {
                for c in 0..n {
                    let x: Q = (0..n).filter(|&k| cols[k].0 == *rep).map(|k| &pmat[r][k] * &pinv[k][c]).sum();
                    if !x.is_zero() {
                        t.push((idx[r], idx[c], x));
                    }
                }
            }
        }
    }
    groups
        .into_iter()
        .map(|(rep, ks)| {
            let basis: Vec<SVec> = ks.iter().flat_map(|&k| iso[k].basis.clone()).collect();
            PrimaryComponent {
                constituents: ks.iter().map(|&k| (iso[k].highest_weight.clone(), iso[k].multiplicity)).collect(),
                projection: SparseMatrix::from_triplets(m.dim(), m.dim(), proj_trip.remove(&rep).unwrap_or_default()),
                orbit_rep: rep,
                basis,
            }
        })
        .collect()
}

/// The `χ_{μ+ν}`-primary component of `E ⊗ F^ν|_h`, where `mu` is the
/// parameter of the primary `h`-module `e` (its highest weights `θ` satisfy
/// `θ + ρ_h ∈ W_H (μ + ρ_h)`). Returns `None` if the component is zero.
pub fn zuckerman_translate_h(
    rs: &RootSystem,
    pd: &ParabolicData,
    e: &WeightedModule,
    mu: &Weight,
    f_nu: &WeightedModule,
) -> Result<Option<WeightedModule>> {
    let nu = f_nu.highest_weight.clone().ok_or_else(|| Error::Invalid("F needs a highest weight".into()))?;
    let t = e.tensor(&f_nu.restrict(&pd.levi))?;
    let target = rs.dominant_rep(&mu.add(&nu).add(&pd.rho_h), &pd.levi);
    for c in primary_decompose(rs, pd, &t) {
        if c.orbit_rep == target {
            let mut sub = t.submodule(&c.basis)?;
            sub.highest_weight = Some(mu.add(&nu));
            return Ok(Some(sub));
        }
    }
    Ok(None)
}

/// Splits the basis of a `g`-module into the top `ξ₀`-layer (the
/// `h`-module generated by the highest weight vector) and the rest.
pub fn top_layer(pd: &ParabolicData, m: &WeightedModule) -> (Vec<usize>, Vec<usize>) {
    let grades: Vec<Q> = m.weights.iter().map(|w| pd.xi0_pairing(w)).collect();
    let Some(top) = grades.iter().max().cloned() else { return (Vec::new(), Vec::new()) };
    (0..m.dim()).partition(|&k| grades[k] == top)
}

/// On-disk cache of irreducible modules, keyed by type and highest weight.
pub struct IrrepCache {
    dir: Option<PathBuf>,
}

impl IrrepCache {
    pub fn new(dir: Option<&Path>) -> Self {
        IrrepCache { dir: dir.map(Path::to_path_buf) }
    }

    pub fn from_env() -> Self {
        IrrepCache { dir: std::env::var_os("DOLBEAULT_CACHE").map(PathBuf::from) }
    }

    fn path(&self, rs: &RootSystem, lambda: &Weight) -> Option<PathBuf> {
        let key: Vec<String> = lambda.0.iter().map(crate::rational::to_string).collect();
        let name = format!("{}_{}_v{}.json", rs.lie_type, key.join("_").replace('/', "over"), CACHE_VERSION);
        self.dir.as_ref().map(|d| d.join(name))
    }

    pub fn irrep(&self, rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<WeightedModule> {
        if let Some(p) = self.path(rs, lambda) {
            if let Ok(text) = std::fs::read_to_string(&p) {
                if let Ok(j) = serde_json::from_str::<ModuleJson>(&text) {
                    if let Ok(m) = WeightedModule::from_json(&j) {
                        return Ok(m);
                    }
                }
            }
            let m = build_irrep(rs, lambda, cap)?;
            std::fs::create_dir_all(p.parent().unwrap())?;
            let tmp = p.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_string(&m.to_json())?)?;
            std::fs::rename(tmp, p)?;
            return Ok(m);
        }
        build_irrep(rs, lambda, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn irrep(t: &str, l: &[i64]) -> (RootSystem, WeightedModule) {
        let rs = RootSystem::build(t).unwrap();
        let m = build_irrep(&rs, &Weight::from_ints(l), DEFAULT_DIM_CAP).unwrap();
        (rs, m)
    }

    #[test]
    fn sl2_three_dimensional() {
        let (rs, m) = irrep("A1", &[2]);
        assert_eq!(m.dim(), 3);
        let ws: Vec<Weight> = m.weights.clone();
        assert_eq!(ws, vec![Weight::from_ints(&[2]), Weight::from_ints(&[0]), Weight::from_ints(&[-2])]);
        m.check_relations(&rs).unwrap();
    }

    #[test]
    fn adjoint_a2_and_b2() {
        let (rs, m) = irrep("A2", &[1, 1]);
        assert_eq!(m.dim(), 8);
        m.check_relations(&rs).unwrap();
        let (rs, m) = irrep("B2", &[0, 2]);
        assert_eq!(m.dim(), 10);
        m.check_relations(&rs).unwrap();
        let (rs, m) = irrep("G2", &[1, 0]);
        assert_eq!(m.dim(), 7);
        m.check_relations(&rs).unwrap();
    }

    #[test]
    fn trivial_has_zero_generators() {
        let (_, m) = irrep("A2", &[0, 0]);
        assert_eq!(m.dim(), 1);
        assert!(m.e.iter().chain(&m.f).all(SparseMatrix::is_zero));
    }

    #[test]
    fn rejects_non_dominant_and_cap() {
        let rs = RootSystem::build("A2").unwrap();
        assert!(matches!(build_irrep(&rs, &Weight::from_ints(&[-1, 0]), 400), Err(Error::NotDominant(_))));
        assert!(matches!(build_irrep(&rs, &Weight::from_ints(&[9, 9]), 400), Err(Error::DimensionCap { .. })));
    }

    #[test]
    fn tensor_decomposition() {
        let (rs, a) = irrep("A2", &[1, 0]);
        let (_, b) = irrep("A2", &[0, 1]);
        let t = a.tensor(&b).unwrap();
        t.check_relations(&rs).unwrap();
        let d = decompose_character(&rs, &[0, 1], &t.character()).unwrap();
        assert_eq!(d, vec![(Weight::from_ints(&[1, 1]), 1), (Weight::from_ints(&[0, 0]), 1)]);
        let iso = isotypic_components(&t);
        assert_eq!(iso.iter().map(|c| c.basis.len()).sum::<usize>(), 9);
    }

    #[test]
    fn levi_module_with_rational_center() {
        let rs = RootSystem::build("A2").unwrap();
        let pd = ParabolicData::build(&rs, &[0]).unwrap();
        let lam = Weight(vec![qi(2), crate::rational::q(-1, 3)]);
        let m = build_levi_irrep(&rs, &pd, &lam).unwrap();
        assert_eq!(m.dim(), 3);
        m.check_relations(&rs).unwrap();
    }

    #[test]
    fn primary_projections_are_idempotent() {
        let (rs, adj) = irrep("A2", &[1, 1]);
        let pd = ParabolicData::build(&rs, &[0]).unwrap();
        let h = adj.restrict(&pd.levi);
        let comps = primary_decompose(&rs, &pd, &h);
        let mut total = SparseMatrix::zeros(8, 8);
        for c in &comps {
            assert_eq!(c.projection.mul(&c.projection), c.projection);
            for i in 0..2 {
                assert!(c.projection.commutator(&h.e[i]).is_zero());
                assert!(c.projection.commutator(&h.f[i]).is_zero());
            }
            total = total.add(&c.projection);
        }
        assert_eq!(total, SparseMatrix::identity(8));
    }

    #[test]
    fn json_round_trip() {
        let (_, m) = irrep("B2", &[1, 0]);
        let back = WeightedModule::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }
}
