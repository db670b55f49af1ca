//! The Lie algebra `g` in a Chevalley-type basis.
//!
//! Root vectors are iterated commutators of simple ones along a fixed path
//! (`E_β = [E_i, E_{β−α_i}]` with `i` the smallest admissible index), and
//! `F_β` is scaled so that `[E_β, F_β]` is the coroot `H_β`. The same
//! recipes produce the action of any basis element on any module, so
//! structure constants and module actions are consistent by construction.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SVec, SparseMatrix};
use crate::rational::{qi, Q};
use crate::repn::{build_highest_weight, WeightedModule};
use crate::rootsys::{invert, RootSystem};

/// A basis element of `g`: `E(k)`/`F(k)` for the positive root with index
/// `k`, `H(i)` for the simple coroot `α_i^∨`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    F(usize),
    H(usize),
    E(usize),
}

impl Letter {
    pub fn name(&self) -> String {
        match self {
            Letter::F(k) => format!("F{}", k + 1),
            Letter::H(i) => format!("H{}", i + 1),
            Letter::E(k) => format!("E{}", k + 1),
        }
    }
}

#[derive(Clone, Debug)]
struct Recipe {
    /// `None` for simple roots, else `(i, k')` with `β = α_i + β_{k'}`.
    parent: Option<(usize, usize)>,
    simple: usize,
    f_scale: Q,
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub rs: RootSystem,
    pub basis: Vec<Letter>,
    index: BTreeMap<Letter, usize>,
    recipes: Vec<Recipe>,
    /// `brackets[a][b]` = coordinates of `[x_a, x_b]` in `basis`.
    brackets: Vec<Vec<SVec>>,
    /// Invariant form on `basis` (long roots of squared length 2).
    pub form: Vec<Vec<Q>>,
}

impl LieAlgebra {
    pub fn new(rs: &RootSystem) -> Result<LieAlgebra> {
        let n = rs.rank();
        let np = rs.positive_roots.len();
        let mut recipes = Vec::with_capacity(np);
        for k in 0..np {
            let c = &rs.positive_simple[k];
            let height: i64 = c.iter().sum();
            if height == 1 {
                let i = c.iter().position(|&x| x == 1).unwrap();
                recipes.push(Recipe { parent: None, simple: i, f_scale: Q::one() });
                continue;
            }
            let mut found = None;
            for i in 0..n {
                if c[i] == 0 {
                    continue;
                }
                let mut d = c.clone();
                d[i] -= 1;
                if let Some(kp) = rs.root_index_simple(&d) {
                    found = Some((i, kp));
                    break;
                }
            }
            let (i, kp) = found.ok_or_else(|| Error::Invariant("root without a parent".into()))?;
            recipes.push(Recipe { parent: Some((i, kp)), simple: i, f_scale: Q::one() });
        }
        let mut basis: Vec<Letter> = (0..np).map(Letter::F).collect();
        basis.extend((0..n).map(Letter::H));
        basis.extend((0..np).map(Letter::E));
        let index = basis.iter().enumerate().map(|(a, l)| (*l, a)).collect();
        let mut g = LieAlgebra { rs: rs.clone(), basis, index, recipes, brackets: Vec::new(), form: Vec::new() };

        // faithful module: sum of adjoint modules of the simple factors
        let mut faithful: Option<WeightedModule> = None;
        let comps = rs.component_of.iter().copied().max().map_or(0, |c| c + 1);
        for c in 0..comps {
            let theta = (0..np)
                .filter(|&k| (0..n).all(|i| rs.positive_simple[k][i] == 0 || rs.component_of[i] == c))
                .max_by_key(|&k| rs.positive_simple[k].iter().sum::<i64>())
                .unwrap();
            let m = build_highest_weight(rs, &rs.all_indices(), &rs.positive_roots[theta], usize::MAX)?;
            faithful = Some(match faithful {
                None => m,
                Some(f) => f.direct_sum(&m)?,
            });
        }
        let faithful = faithful.unwrap();

        // scale F_β so that [E_β, F_β] = H_β
        for k in 0..np {
            let e = g.matrix(&faithful, Letter::E(k));
            let f = g.matrix(&faithful, Letter::F(k));
            let comm = e.commutator(&f);
            let hb = g.coroot_matrix(&faithful, k);
            let (r, c, x) = hb.triplets().next().map(|(r, c, x)| (r, c, x.clone())).unwrap();
            let s = x / comm.get(r, c);
            g.recipes[k].f_scale = s.clone();
            if comm.scale(&s) != hb {
                return Err(Error::Invariant(format!("root vector {} is not normalizable", k + 1)));
            }
        }

        // structure constants from the faithful representation
        let mats: Vec<SparseMatrix> = g.basis.iter().map(|l| g.matrix(&faithful, *l)).collect();
        let flat = |m: &SparseMatrix| -> SVec {
            let nc = m.ncols();
            let mut v: SVec = m.triplets().map(|(r, c, x)| (r * nc + c, x.clone())).collect();
            v.sort_by_key(|e| e.0);
            v
        };
        let mut ech = Echelon::new(faithful.dim() * faithful.dim(), true);
        for m in &mats {
            if let crate::linalg::Inserted::Dependent(_) = ech.insert(flat(m)) {
                return Err(Error::Invariant("basis matrices are dependent".into()));
            }
        }
        let dim = g.basis.len();
        let mut brackets = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in (a + 1)..dim {
                let c = mats[a].commutator(&mats[b]);
                let coords =
                    ech.express(flat(&c)).ok_or_else(|| Error::Invariant("bracket leaves the algebra".into()))?;
                brackets[b][a] = coords.iter().map(|(i, x)| (*i, -x)).collect();
                brackets[a][b] = coords;
            }
        }
        g.brackets = brackets;

        // invariant form: B(H_i,H_j) = a_ij / d_j, B(E_β,F_β) = 1 / d_β
        let mut form = vec![vec![Q::zero(); dim]; dim];
        for i in 0..n {
            for j in 0..n {
                form[g.index[&Letter::H(i)]][g.index[&Letter::H(j)]] = qi(rs.cartan[i][j]) / &rs.symmetrizer[j];
            }
        }
        for k in 0..np {
            let v = Q::one() / rs.root_d(k);
            let (e, f) = (g.index[&Letter::E(k)], g.index[&Letter::F(k)]);
            form[e][f] = v.clone();
            form[f][e] = v;
        }
        g.form = form;
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, l: Letter) -> usize {
        self.index[&l]
    }

    /// `[x_a, x_b]` in basis coordinates.
    pub fn bracket(&self, a: usize, b: usize) -> &SVec {
        &self.brackets[a][b]
    }

    pub fn bracket_letters(&self, a: Letter, b: Letter) -> Vec<(Letter, Q)> {
        self.brackets[self.index[&a]][self.index[&b]].iter().map(|(i, x)| (self.basis[*i], x.clone())).collect()
    }

    /// Coroot `H_β` of the positive root `k` as a combination of the `H_i`.
    pub fn coroot(&self, k: usize) -> Vec<(usize, Q)> {
        let rs = &self.rs;
        let dk = rs.root_d(k);
        (0..rs.rank())
            .filter(|&i| rs.positive_simple[k][i] != 0)
            .map(|i| (i, qi(rs.positive_simple[k][i]) * &rs.symmetrizer[i] / &dk))
            .collect()
    }

    fn coroot_matrix(&self, m: &WeightedModule, k: usize) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(m.dim(), m.dim());
        for (i, c) in self.coroot(k) {
            out = out.add_scaled(&c, &m.h(i));
        }
        out
    }

    /// Action of a basis element on a `g`-module.
    pub fn matrix(&self, m: &WeightedModule, l: Letter) -> SparseMatrix {
        match l {
            Letter::H(i) => m.h(i),
            Letter::E(k) => match self.recipes[k].parent {
                None => m.e[self.recipes[k].simple].clone(),
                Some((i, kp)) => m.e[i].commutator(&self.matrix(m, Letter::E(kp))),
            },
            Letter::F(k) => match self.recipes[k].parent {
                None => m.f[self.recipes[k].simple].clone(),
                Some((i, kp)) => m.f[i].commutator(&self.matrix(m, Letter::F(kp))).scale(&self.recipes[k].f_scale),
            },
        }
    }

    /// Actions of every basis element, in basis order.
    pub fn all_matrices(&self, m: &WeightedModule) -> Vec<SparseMatrix> {
        let mut e: Vec<Option<SparseMatrix>> = vec![None; self.rs.positive_roots.len()];
        let mut f = e.clone();
        for k in 0..e.len() {
            let (ek, fk) = match self.recipes[k].parent {
                None => (m.e[self.recipes[k].simple].clone(), m.f[self.recipes[k].simple].clone()),
                Some((i, kp)) => (
                    m.e[i].commutator(e[kp].as_ref().unwrap()),
                    m.f[i].commutator(f[kp].as_ref().unwrap()).scale(&self.recipes[k].f_scale),
                ),
            };
            e[k] = Some(ek);
            f[k] = Some(fk);
        }
        self.basis
            .iter()
            .map(|l| match l {
                Letter::H(i) => m.h(*i),
                Letter::E(k) => e[*k].clone().unwrap(),
                Letter::F(k) => f[*k].clone().unwrap(),
            })
            .collect()
    }

    /// Weight of a basis element in fundamental coordinates.
    pub fn weight_of(&self, l: Letter) -> crate::rootsys::Weight {
        match l {
            Letter::H(_) => crate::rootsys::Weight::zero(self.rs.rank()),
            Letter::E(k) => self.rs.positive_roots[k].clone(),
            Letter::F(k) => self.rs.positive_roots[k].neg(),
        }
    }

    /// Inverse of the form restricted to the Cartan subalgebra (in the `H_i` basis).
    pub fn cartan_form_inverse(&self) -> Vec<Vec<Q>> {
        let n = self.rs.rank();
        let b: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| self.form[self.index[&Letter::H(i)]][self.index[&Letter::H(j)]].clone()).collect())
            .collect();
        invert(&b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repn::{build_irrep, DEFAULT_DIM_CAP};
    use crate::rootsys::Weight;

    #[test]
    fn brackets_are_antisymmetric_and_jacobi() {
        for t in ["A2", "B2", "G2"] {
            let rs = RootSystem::build(t).unwrap();
            let g = LieAlgebra::new(&rs).unwrap();
            let d = g.dim();
            let br = |x: &SVec, y: &SVec| -> SVec {
                let mut acc = Vec::new();
                for (a, p) in x {
                    for (b, q) in y {
                        acc = crate::linalg::axpy(&acc, &(p * q), g.bracket(*a, *b));
                    }
                }
                acc
            };
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        let (ea, eb, ec) = (vec![(a, qi(1))], vec![(b, qi(1))], vec![(c, qi(1))]);
                        let j1 = br(&ea, &br(&eb, &ec));
                        let j2 = br(&eb, &br(&ec, &ea));
                        let j3 = br(&ec, &br(&ea, &eb));
                        let s = crate::linalg::axpy(&crate::linalg::axpy(&j1, &qi(1), &j2), &qi(1), &j3);
                        assert!(s.is_empty(), "{t} Jacobi fails at {a},{b},{c}");
                    }
                }
            }
        }
    }

    #[test]
    fn module_actions_are_homomorphisms() {
        let rs = RootSystem::build("B2").unwrap();
        let g = LieAlgebra::new(&rs).unwrap();
        let m = build_irrep(&rs, &Weight::from_ints(&[1, 1]), DEFAULT_DIM_CAP).unwrap();
        let mats = g.all_matrices(&m);
        for a in 0..g.dim() {
            for b in 0..g.dim() {
                let mut rhs = SparseMatrix::zeros(m.dim(), m.dim());
                for (c, x) in g.bracket(a, b) {
                    rhs = rhs.add_scaled(x, &mats[*c]);
                }
                assert_eq!(mats[a].commutator(&mats[b]), rhs);
            }
        }
    }

    #[test]
    fn form_is_invariant() {
        let rs = RootSystem::build("G2").unwrap();
        let g = LieAlgebra::new(&rs).unwrap();
        let d = g.dim();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    // B([x,y],z) = B(x,[y,z])
                    let l: Q = g.bracket(x, y).iter().map(|(k, c)| c * &g.form[*k][z]).sum();
                    let r: Q = g.bracket(y, z).iter().map(|(k, c)| c * &g.form[x][*k]).sum();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn sl2_trace_form() {
        let rs = RootSystem::build("A1").unwrap();
        let g = LieAlgebra::new(&rs).unwrap();
        let (e, f, h) = (g.index_of(Letter::E(0)), g.index_of(Letter::F(0)), g.index_of(Letter::H(0)));
        assert_eq!(g.form[e][f], qi(1));
        assert_eq!(g.form[h][h], qi(2));
        assert_eq!(g.bracket(e, f), &vec![(h, qi(1))]);
    }
}
