//! Truncated universal enveloping algebra in a block PBW order.
//!
//! Basis letters are ordered `ū < h < u`: first `F_β` for `β ∈ Δ(u)`, then
//! the Levi block (`F_β` for Levi roots, `H_i`, `E_β` for Levi roots), then
//! `E_β` for `β ∈ Δ(u)`. A monomial is a nondecreasing list of letter
//! positions. Products are straightened by memoized right multiplication by
//! single letters.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{Letter, LieAlgebra};
use crate::linalg::SparseMatrix;
use crate::rational::{self, Q};
use crate::rootsys::{ParabolicData, Weight};

pub type Mono = Vec<u8>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Nbar,
    Levi,
    Nil,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pbw {
    pub terms: BTreeMap<Mono, Q>,
}

impl Pbw {
    pub fn zero() -> Pbw {
        Pbw::default()
    }

    pub fn scalar(c: Q) -> Pbw {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Pbw { terms }
    }

    pub fn one() -> Pbw {
        Pbw::scalar(Q::one())
    }

    pub fn mono(m: Mono, c: Q) -> Pbw {
        let mut p = Pbw::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * o`.
    pub fn axpy(&mut self, c: &Q, o: &Pbw) {
        for (m, x) in &o.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn add_scaled(&self, c: &Q, o: &Pbw) -> Pbw {
        let mut out = self.clone();
        out.axpy(c, o);
        out
    }

    pub fn add(&self, o: &Pbw) -> Pbw {
        self.add_scaled(&Q::one(), o)
    }

    pub fn sub(&self, o: &Pbw) -> Pbw {
        self.add_scaled(&-Q::one(), o)
    }

    pub fn scale(&self, c: &Q) -> Pbw {
        Pbw::zero().add_scaled(c, self)
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous(&self, d: usize) -> Pbw {
        Pbw { terms: self.terms.iter().filter(|(m, _)| m.len() == d).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }
}

/// JSON form of an enveloping algebra element: `(letters, coefficient)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbwJson(pub Vec<(String, String)>);

type Memo = Mutex<HashMap<(Mono, u8), Arc<Pbw>>>;

pub struct Uea {
    pub g: Arc<LieAlgebra>,
    pub pd: ParabolicData,
    pub order: Vec<Letter>,
    pub blocks: Vec<Block>,
    pos: HashMap<Letter, u8>,
    brackets: Vec<Vec<Vec<(u8, Q)>>>,
    pub cap: usize,
    memo: Memo,
}

pub const DEFAULT_TRUNCATION: usize = 6;

impl Uea {
    pub fn new(g: Arc<LieAlgebra>, pd: &ParabolicData, cap: usize) -> Uea {
        let np = g.rs.positive_roots.len();
        let n = g.rs.rank();
        let mut order = Vec::new();
        let mut blocks = Vec::new();
        for &k in &pd.u_roots {
            order.push(Letter::F(k));
            blocks.push(Block::Nbar);
        }
        for &k in &pd.h_roots {
            order.push(Letter::F(k));
            blocks.push(Block::Levi);
        }
        for i in 0..n {
            order.push(Letter::H(i));
            blocks.push(Block::Levi);
        }
        for &k in &pd.h_roots {
            order.push(Letter::E(k));
            blocks.push(Block::Levi);
        }
        for &k in &pd.u_roots {
            order.push(Letter::E(k));
            blocks.push(Block::Nil);
        }
        debug_assert_eq!(order.len(), n + 2 * np);
        let pos: HashMap<Letter, u8> = order.iter().enumerate().map(|(p, l)| (*l, p as u8)).collect();
        let brackets = order
            .iter()
            .map(|a| {
                order
                    .iter()
                    .map(|b| {
                        let mut v: Vec<(u8, Q)> =
                            g.bracket_letters(*a, *b).into_iter().map(|(l, c)| (pos[&l], c)).collect();
                        v.sort_by_key(|e| e.0);
                        v
                    })
                    .collect()
            })
            .collect();
        Uea { g, pd: pd.clone(), order, blocks, pos, brackets, cap, memo: Mutex::new(HashMap::new()) }
    }

    pub fn pos(&self, l: Letter) -> u8 {
        self.pos[&l]
    }

    pub fn letter(&self, l: Letter) -> Pbw {
        Pbw::mono(vec![self.pos[&l]], Q::one())
    }

    pub fn letter_name(&self, p: u8) -> String {
        self.order[p as usize].name()
    }

    pub fn bracket_pos(&self, a: u8, b: u8) -> &[(u8, Q)] {
        &self.brackets[a as usize][b as usize]
    }

    /// `m · x` for a normal-ordered monomial `m` and a letter `x`.
    pub fn mono_times_letter(&self, m: &[u8], x: u8) -> Arc<Pbw> {
        if m.last().is_none_or(|&a| a <= x) {
            let mut v = m.to_vec();
            v.push(x);
            return Arc::new(Pbw::mono(v, Q::one()));
        }
        let key = (m.to_vec(), x);
        if let Some(r) = self.memo.lock().unwrap().get(&key) {
            return r.clone();
        }
        let (rest, a) = (&m[..m.len() - 1], m[m.len() - 1]);
        // m' a x = (m' x) a + m' [a, x]
        let mut out = Pbw::zero();
        let left = self.mono_times_letter(rest, x);
        for (t, c) in &left.terms {
            out.axpy(c, &self.mono_times_letter(t, a));
        }
        for (y, c) in self.bracket_pos(a, x) {
            out.axpy(c, &self.mono_times_letter(rest, *y));
        }
        let out = Arc::new(out);
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    pub fn mul(&self, a: &Pbw, b: &Pbw) -> Result<Pbw> {
        if a.is_zero() || b.is_zero() {
            return Ok(Pbw::zero());
        }
        let d = a.degree() + b.degree();
        if d > self.cap {
            return Err(Error::Truncation { degree: d, cap: self.cap });
        }
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &Pbw, b: &Pbw) -> Pbw {
        let mut out = Pbw::zero();
        for (mb, cb) in &b.terms {
            // a · mb, letter by letter
            let mut cur = a.clone();
            for &x in mb {
                let mut next = Pbw::zero();
                for (t, c) in &cur.terms {
                    next.axpy(c, &self.mono_times_letter(t, x));
                }
                cur = next;
            }
            out.axpy(cb, &cur);
        }
        out
    }

    /// Normal form of a product of letters.
    pub fn normalize_word(&self, word: &[Letter]) -> Result<Pbw> {
        if word.len() > self.cap {
            return Err(Error::Truncation { degree: word.len(), cap: self.cap });
        }
        let mut cur = Pbw::one();
        for l in word {
            cur = self.mul_unchecked(&cur, &self.letter(*l));
        }
        Ok(cur)
    }

    pub fn commutator(&self, a: &Pbw, b: &Pbw) -> Result<Pbw> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    /// Principal anti-automorphism `(X₁⋯X_n)♯ = (−1)ⁿ X_n⋯X₁`.
    pub fn antipode(&self, a: &Pbw) -> Pbw {
        let mut out = Pbw::zero();
        for (m, c) in &a.terms {
            let mut cur = Pbw::one();
            for &x in m.iter().rev() {
                cur = self.mul_unchecked(&cur, &Pbw::mono(vec![x], Q::one()));
            }
            let sign = if m.len() % 2 == 0 { c.clone() } else { -c.clone() };
            out.axpy(&sign, &cur);
        }
        out
    }

    /// Automorphism `Y ↦ Y + χ(Y)` of `U(h)` for a character `χ` of `h`,
    /// given in fundamental coordinates and vanishing on Levi root vectors.
    pub fn twist_by_character(&self, a: &Pbw, chi: &Weight) -> Pbw {
        let mut out = Pbw::zero();
        for (m, c) in &a.terms {
            let mut parts: Vec<(Mono, Q)> = vec![(Vec::new(), c.clone())];
            for &x in m {
                let shift = match self.order[x as usize] {
                    Letter::H(i) => chi.0[i].clone(),
                    _ => Q::zero(),
                };
                let mut next = Vec::with_capacity(parts.len() * 2);
                for (pm, pc) in parts {
                    if !shift.is_zero() {
                        next.push((pm.clone(), &pc * &shift));
                    }
                    let mut pm = pm;
                    pm.push(x);
                    next.push((pm, pc));
                }
                parts = next;
            }
            for (pm, pc) in parts {
                out.add_term(pm, pc);
            }
        }
        out
    }

    /// Quadratic Casimir `Σ x_a x^a` for the invariant form of `g`.
    pub fn casimir(&self) -> Pbw {
        let rs = &self.g.rs;
        let n = rs.rank();
        let binv = self.g.cartan_form_inverse();
        let mut out = Pbw::zero();
        for i in 0..n {
            for j in 0..n {
                if binv[i][j].is_zero() {
                    continue;
                }
                let t = self.mul_unchecked(&self.letter(Letter::H(i)), &self.letter(Letter::H(j)));
                out = out.add_scaled(&binv[i][j], &t);
            }
        }
        for k in 0..rs.positive_roots.len() {
            let (e, f) = (self.letter(Letter::E(k)), self.letter(Letter::F(k)));
            let s = self.mul_unchecked(&e, &f).add(&self.mul_unchecked(&f, &e));
            out = out.add_scaled(&rs.root_d(k), &s);
        }
        out
    }

    pub fn is_in_levi(&self, a: &Pbw) -> bool {
        a.terms.keys().all(|m| m.iter().all(|&x| self.blocks[x as usize] == Block::Levi))
    }

    /// Projection onto `U(h)` along `ū U(g) + U(g) u`: keeps the monomials
    /// made of Levi letters only.
    pub fn hc_project(&self, a: &Pbw) -> Pbw {
        Pbw {
            terms: a
                .terms
                .iter()
                .filter(|(m, _)| m.iter().all(|&x| self.blocks[x as usize] == Block::Levi))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether `z` commutes with every simple root vector (and hence with `g`).
    pub fn is_central(&self, z: &Pbw) -> Result<bool> {
        self.commutes_with(z, &(0..self.g.rs.rank()).collect::<Vec<_>>())
    }

    /// Whether `z` commutes with the simple root vectors in `simple` and the torus.
    pub fn commutes_with(&self, z: &Pbw, simple: &[usize]) -> Result<bool> {
        let rs = &self.g.rs;
        let mut letters: Vec<Letter> = (0..rs.rank()).map(Letter::H).collect();
        for &i in simple {
            let k = rs.root_index_simple(&(0..rs.rank()).map(|j| i64::from(i == j)).collect::<Vec<_>>()).unwrap();
            letters.push(Letter::E(k));
            letters.push(Letter::F(k));
        }
        for l in letters {
            let x = self.letter(l);
            let c = self.mul_unchecked(z, &x).sub(&self.mul_unchecked(&x, z));
            if !c.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Scalar of `z` on a highest weight vector of weight `param − shift`.
    /// In every block order all lowering letters precede the torus letters,
    /// which precede all raising letters, so only torus monomials survive.
    pub fn eval_highest(&self, z: &Pbw, weight: &Weight) -> Q {
        let mut s = Q::zero();
        'terms: for (m, c) in &z.terms {
            let mut v = c.clone();
            for &x in m {
                match self.order[x as usize] {
                    Letter::H(i) => v *= &weight.0[i],
                    _ => continue 'terms,
                }
            }
            s += v;
        }
        s
    }

    /// Harish-Chandra scalar of a central element at parameter `param`, for
    /// the algebra whose half-sum of positive roots is `rho`.
    pub fn hc_scalar(&self, z: &Pbw, param: &Weight, rho: &Weight) -> Q {
        self.eval_highest(z, &param.sub(rho))
    }

    /// Matrix of `a` given matrices for the letters (by PBW position).
    pub fn eval(&self, a: &Pbw, letter_mats: &[Option<SparseMatrix>], dim: usize) -> Result<SparseMatrix> {
        let mut out = SparseMatrix::zeros(dim, dim);
        for (m, c) in &a.terms {
            let mut cur = SparseMatrix::scalar(dim, c);
            for &x in m {
                let lm = letter_mats[x as usize]
                    .as_ref()
                    .ok_or_else(|| Error::Invalid(format!("no action given for letter {}", self.letter_name(x))))?;
                cur = cur.mul(lm);
            }
            out = out.add(&cur);
        }
        Ok(out)
    }

    /// Letter matrices of a `g`-module, by PBW position.
    pub fn module_letters(&self, m: &crate::repn::WeightedModule) -> Vec<Option<SparseMatrix>> {
        let all = self.g.all_matrices(m);
        self.order.iter().map(|l| Some(all[self.g.index_of(*l)].clone())).collect()
    }

    pub fn to_json(&self, a: &Pbw) -> PbwJson {
        PbwJson(
            a.terms
                .iter()
                .map(|(m, c)| {
                    let s: Vec<String> = m.iter().map(|&x| self.letter_name(x)).collect();
                    (s.join(" "), rational::to_string(c))
                })
                .collect(),
        )
    }

    /// Human-readable form such as `1/2 H1 H1 + H1`.
    pub fn display(&self, a: &Pbw) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        let mut terms: Vec<(&Mono, &Q)> = a.terms.iter().collect();
        terms.sort_by(|x, y| y.0.len().cmp(&x.0.len()).then(x.0.cmp(y.0)));
        for (m, c) in terms {
            let letters: Vec<String> = m.iter().map(|&x| self.letter_name(x)).collect();
            let coeff = rational::to_string(c);
            parts.push(match (letters.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => letters.join(" "),
                (false, "-1") => format!("-{}", letters.join(" ")),
                _ => format!("{coeff} {}", letters.join(" ")),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Checks, for each `h`-highest weight `ν` of `H(u, F^λ)`, that `p(z)` acts on
/// `E^ν` by the scalar of `z` on `F^λ` and that `ν + ρ_h + ρ_u` is
/// `W_G`-conjugate to `λ + ρ`.
pub fn verify_hc_shift(uea: &Uea, z: &Pbw, lambda: &Weight, nus: &[Weight]) -> Result<bool> {
    if !uea.is_central(z)? {
        return Err(Error::NotCentral(uea.display(z)));
    }
    let rs = &uea.g.rs;
    let pz = uea.hc_project(z);
    let target = uea.hc_scalar(z, &lambda.add(&rs.rho), &rs.rho);
    Ok(nus.iter().all(|nu| {
        let shifted = nu.add(&uea.pd.rho_h).add(&uea.pd.rho_u);
        uea.hc_scalar(&pz, &nu.add(&uea.pd.rho_h), &uea.pd.rho_h) == target
            && rs.weyl_conjugate(&shifted, &lambda.add(&rs.rho))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};
    use crate::rootsys::RootSystem;

    fn sl2() -> Uea {
        let rs = RootSystem::build("A1").unwrap();
        let pd = ParabolicData::build(&rs, &[]).unwrap();
        Uea::new(Arc::new(LieAlgebra::new(&rs).unwrap()), &pd, 6)
    }

    #[test]
    fn sl2_straightening() {
        let u = sl2();
        let (e, f, h) = (Letter::E(0), Letter::F(0), Letter::H(0));
        let ef = u.normalize_word(&[e, f]).unwrap();
        let expect = u.normalize_word(&[f, e]).unwrap().add(&u.letter(h));
        assert_eq!(ef, expect);
        let efe = u.normalize_word(&[e, f, e]).unwrap();
        let expect = u.normalize_word(&[f, e, e]).unwrap().add(&u.normalize_word(&[h, e]).unwrap());
        assert_eq!(efe, expect);
    }

    #[test]
    fn sl2_casimir_and_projection() {
        let u = sl2();
        let om = u.casimir();
        assert_eq!(u.display(&om), "2 F1 E1 + 1/2 H1 H1 + H1");
        assert!(u.is_central(&om).unwrap());
        let p = u.hc_project(&om);
        assert_eq!(u.display(&p), "1/2 H1 H1 + H1");
        let rho = Weight::from_ints(&[1]);
        for m in 0..5 {
            let v = u.hc_scalar(&om, &Weight::from_ints(&[m + 1]), &rho);
            assert_eq!(v, q((m + 1) * (m + 1) - 1, 2));
        }
        assert_eq!(u.hc_scalar(&Pbw::one(), &rho, &rho), qi(1));
    }

    #[test]
    fn antipode_examples() {
        let u = sl2();
        let (e, f, h) = (Letter::E(0), Letter::F(0), Letter::H(0));
        let ef = u.normalize_word(&[e, f]).unwrap();
        let expect = ef.sub(&u.letter(h));
        assert_eq!(u.antipode(&ef), expect);
        assert_eq!(u.antipode(&u.letter(e)), u.letter(e).scale(&qi(-1)));
        assert_eq!(u.antipode(&Pbw::one()), Pbw::one());
    }

    #[test]
    fn truncation_is_an_error() {
        let rs = RootSystem::build("A1").unwrap();
        let pd = ParabolicData::build(&rs, &[]).unwrap();
        let u = Uea::new(Arc::new(LieAlgebra::new(&rs).unwrap()), &pd, 2);
        let e = u.letter(Letter::E(0));
        let ee = u.mul(&e, &e).unwrap();
        assert!(matches!(u.mul(&ee, &e), Err(Error::Truncation { .. })));
    }
}
