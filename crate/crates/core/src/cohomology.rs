//! Chain complexes `M ⊗ ∧ū ⊗ E` with the u-cohomology differential, their
//! `H`-invariant subcomplexes, cohomology with harmonic representatives,
//! induced maps and long exact sequences.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::diffop::{Dolbeault, OpAlgebra};
use crate::error::{Error, Result};
use crate::lie::{Letter, LieAlgebra};
use crate::linalg::{self, Echelon, Inserted, SVec, SparseMatrix};
use crate::rational::Q;
use crate::repn::{self, Character, WeightedModule};
use crate::rootsys::{ParabolicData, RootSystem, Weight};
use crate::uea::{Block, Pbw, Uea};

/// Everything attached to a pair `(g, q)`.
pub struct Context {
    pub rs: RootSystem,
    pub pd: ParabolicData,
    pub g: Arc<LieAlgebra>,
    pub uea: Arc<Uea>,
    pub ops: OpAlgebra,
    pub dol: Dolbeault,
    pub omega: Pbw,
    pub p_omega: Pbw,
}

impl Context {
    pub fn new(lie_type: &str, levi: &[usize], cap: usize) -> Result<Context> {
        let rs = RootSystem::build(lie_type)?;
        let pd = ParabolicData::build(&rs, levi)?;
        let g = Arc::new(LieAlgebra::new(&rs)?);
        let uea = Arc::new(Uea::new(g.clone(), &pd, cap));
        let ops = OpAlgebra::new(uea.clone())?;
        let dol = ops.dolbeault()?;
        let omega = uea.casimir();
        let p_omega = uea.hc_project(&omega);
        Ok(Context { rs, pd, g, uea, ops, dol, omega, p_omega })
    }

    pub fn irrep(&self, lambda: &Weight, cap: usize) -> Result<WeightedModule> {
        repn::build_irrep(&self.rs, lambda, cap)
    }

    pub fn levi_irrep(&self, lambda: &Weight) -> Result<WeightedModule> {
        repn::build_levi_irrep(&self.rs, &self.pd, lambda)
    }

    fn simple_index(&self, i: usize) -> usize {
        let unit: Vec<i64> = (0..self.rs.rank()).map(|j| i64::from(i == j)).collect();
        self.rs.root_index_simple(&unit).expect("simple root")
    }

    /// Weight of the basis vector `ξ_S` of `∧ū`.
    fn wedge_weight(&self, s: u32) -> Weight {
        let mut w = Weight::zero(self.rs.rank());
        for b in crate::cliffext::bits(s) {
            w = w.sub(&self.rs.positive_roots[self.pd.u_roots[b]]);
        }
        w
    }
}

/// Coordinates of a subspace of an ambient space.
#[derive(Clone, Debug)]
enum Frame {
    Coordinate { indices: Vec<usize>, position: HashMap<usize, usize> },
    Span { basis: Vec<SVec>, echelon: Echelon },
}

impl Frame {
    fn coordinate(indices: Vec<usize>) -> Frame {
        let position = indices.iter().enumerate().map(|(a, b)| (*b, a)).collect();
        Frame::Coordinate { indices, position }
    }

    fn span(basis: Vec<SVec>) -> Frame {
        let mut echelon = Echelon::new(0, true);
        for v in &basis {
            let r = echelon.insert(v.clone());
            debug_assert!(matches!(r, Inserted::Independent));
        }
        Frame::Span { basis, echelon }
    }

    fn len(&self) -> usize {
        match self {
            Frame::Coordinate { indices, .. } => indices.len(),
            Frame::Span { basis, .. } => basis.len(),
        }
    }

    fn vector(&self, j: usize) -> SVec {
        match self {
            Frame::Coordinate { indices, .. } => vec![(indices[j], Q::one())],
            Frame::Span { basis, .. } => basis[j].clone(),
        }
    }

    fn coords(&self, v: &SVec) -> Option<SVec> {
        match self {
            Frame::Coordinate { position, .. } => {
                let mut out = Vec::with_capacity(v.len());
                for (i, c) in v {
                    out.push((*position.get(i)?, c.clone()));
                }
                Some(linalg::svec_from(out))
            }
            Frame::Span { echelon, .. } => echelon.express(v.clone()),
        }
    }
}

/// Restriction of an ambient operator to frames; fails if an image leaves the target.
fn restrict(op: &SparseMatrix, src: &Frame, tgt: &Frame, what: &str) -> Result<SparseMatrix> {
    let cols: Vec<SVec> = (0..src.len())
        .into_par_iter()
        .map(|j| {
            let img = op.apply(&src.vector(j));
            tgt.coords(&img).ok_or_else(|| Error::Invariant(format!("{what} does not preserve the chain spaces")))
        })
        .collect::<Result<_>>()?;
    Ok(SparseMatrix::from_columns(tgt.len(), &cols))
}

/// Tensor product ambient `M ⊗ ∧ū ⊗ E` with `M` a `g`-module and `E` an `h`-module.
pub struct Ambient {
    pub dim_m: usize,
    pub dim_w: usize,
    pub dim_e: usize,
    pub weights: Vec<Weight>,
    /// `∧ū`-degree of each ambient basis vector.
    pub wedge_degree: Vec<usize>,
}

impl Ambient {
    pub fn new(ctx: &Context, m: &WeightedModule, e: &WeightedModule) -> Ambient {
        let wedge = &ctx.ops.wedge;
        let (dim_m, dim_w, dim_e) = (m.dim(), wedge.dim(), e.dim());
        let wedge_w: Vec<Weight> = wedge.subsets.iter().map(|&s| ctx.wedge_weight(s)).collect();
        let mut weights = Vec::with_capacity(dim_m * dim_w * dim_e);
        let mut wedge_degree = Vec::with_capacity(weights.capacity());
        for wm in &m.weights {
            for (s, ws) in wedge_w.iter().enumerate() {
                let base = wm.add(ws);
                for we in &e.weights {
                    weights.push(base.add(we));
                    wedge_degree.push(wedge.subsets[s].count_ones() as usize);
                }
            }
        }
        Ambient { dim_m, dim_w, dim_e, weights, wedge_degree }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Index of `m ⊗ ξ_S ⊗ e`, with `S` given by its position in the exterior basis.
    pub fn at(&self, m: usize, s: usize, e: usize) -> usize {
        (m * self.dim_w + s) * self.dim_e + e
    }

    fn degree_indices(&self, k: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.wedge_degree[i] == k).collect()
    }
}

/// Kronecker product of three factors.
fn kron3(a: &SparseMatrix, b: &SparseMatrix, c: &SparseMatrix) -> SparseMatrix {
    a.kron(b).kron(c)
}

/// Diagonal action of a Levi letter on the ambient space.
fn diagonal_action(ctx: &Context, m: &WeightedModule, e: &WeightedModule, l: Letter) -> SparseMatrix {
    let (im, iw, ie) =
        (SparseMatrix::identity(m.dim()), SparseMatrix::identity(ctx.ops.wedge.dim()), SparseMatrix::identity(e.dim()));
    let pos = ctx.uea.pos(l);
    let nu = ctx.ops.wedge.to_matrix(ctx.ops.nu(pos).expect("Levi letter"));
    kron3(&ctx.g.matrix(m, l), &iw, &ie).add(&kron3(&im, &nu, &ie)).add(&kron3(&im, &iw, &ctx.g.matrix(e, l)))
}

/// A cochain complex `C⁰ → C¹ → ⋯` of finite-dimensional spaces realized
/// inside an ambient space.
pub struct ChainComplex {
    pub dims: Vec<usize>,
    pub weights: Vec<Vec<Weight>>,
    /// `d[k] : Cᵏ → Cᵏ⁺¹`; the last one maps to the zero space.
    pub d: Vec<SparseMatrix>,
    /// Operators commuting with `d`, one matrix per degree.
    pub actions: BTreeMap<String, Vec<SparseMatrix>>,
    /// Sign of the cubic term used in the differential.
    pub epsilon: i64,
    frames: Vec<Frame>,
}

impl ChainComplex {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Basis vector `j` of `Cᵏ` in ambient coordinates.
    pub fn basis_vector(&self, k: usize, j: usize) -> SVec {
        self.frames[k].vector(j)
    }

    /// Coordinates in `Cᵏ` of an ambient vector, if it lies in `Cᵏ`.
    pub fn coordinates(&self, k: usize, v: &SVec) -> Option<SVec> {
        self.frames[k].coords(v)
    }

    /// Exact check of `d² = 0` and of the commutation of registered actions with `d`.
    pub fn check(&self) -> Result<()> {
        for k in 0..self.top() {
            if !self.d[k + 1].mul(&self.d[k]).is_zero() {
                return Err(Error::Invariant(format!("d² ≠ 0 in degree {k}")));
            }
        }
        for (name, a) in &self.actions {
            for k in 0..self.top() {
                if self.d[k].mul(&a[k]) != a[k + 1].mul(&self.d[k]) {
                    return Err(Error::Invariant(format!("action {name} does not commute with d in degree {k}")));
                }
            }
        }
        Ok(())
    }

    /// Per-degree matrices of an ambient map into the ambient space of `target`.
    pub fn map_to(&self, target: &ChainComplex, amb: &SparseMatrix) -> Result<Vec<SparseMatrix>> {
        if self.top() != target.top() {
            return Err(Error::Invalid("complexes have different lengths".into()));
        }
        (0..=self.top()).map(|k| restrict(amb, &self.frames[k], &target.frames[k], "the map")).collect()
    }

    pub fn d_squared_zero(&self) -> bool {
        (0..self.top()).all(|k| self.d[k + 1].mul(&self.d[k]).is_zero())
    }

    /// Complex obtained by restricting an ambient differential and ambient
    /// actions to per-degree frames.
    fn assemble(
        frames: Vec<Frame>,
        weights: Vec<Vec<Weight>>,
        d_amb: &SparseMatrix,
        actions_amb: Vec<(String, SparseMatrix)>,
        epsilon: i64,
    ) -> Result<ChainComplex> {
        let top = frames.len() - 1;
        let empty = Frame::coordinate(Vec::new());
        let d: Vec<SparseMatrix> = (0..=top)
            .map(|k| restrict(d_amb, &frames[k], frames.get(k + 1).unwrap_or(&empty), "the differential"))
            .collect::<Result<_>>()?;
        let mut actions = BTreeMap::new();
        for (name, a) in actions_amb {
            let per: Vec<SparseMatrix> =
                (0..=top).map(|k| restrict(&a, &frames[k], &frames[k], &name)).collect::<Result<_>>()?;
            actions.insert(name, per);
        }
        let c = ChainComplex { dims: frames.iter().map(Frame::len).collect(), weights, d, actions, epsilon, frames };
        if !c.d_squared_zero() {
            return Err(Error::Invariant("d² ≠ 0".into()));
        }
        Ok(c)
    }
}

pub fn module_operator(ctx: &Context, m: &WeightedModule, z: &Pbw) -> Result<SparseMatrix> {
    ctx.uea.eval(z, &ctx.uea.module_letters(m), m.dim())
}

/// Ambient differential `Σ π_M(X_i) ⊗ e_i ⊗ I + ε (I ⊗ v ⊗ I)`.
fn ambient_differential(ctx: &Context, m: &WeightedModule, e: &WeightedModule) -> Result<SparseMatrix> {
    let letters = ctx.uea.module_letters(m);
    let d = ctx.ops.model_matrix(&ctx.dol.bar, &letters, m.dim())?;
    Ok(d.kron(&SparseMatrix::identity(e.dim())))
}

/// Matrix of `p(Ω)` acting through the diagonal `h`-action on the ambient space.
fn diagonal_p_omega(ctx: &Context, m: &WeightedModule, e: &WeightedModule, dim: usize) -> Result<SparseMatrix> {
    let mut mats: Vec<Option<SparseMatrix>> = vec![None; ctx.uea.order.len()];
    for (p, l) in ctx.uea.order.iter().enumerate() {
        if ctx.uea.blocks[p] == Block::Levi {
            mats[p] = Some(diagonal_action(ctx, m, e, *l));
        }
    }
    ctx.uea.eval(&ctx.p_omega, &mats, dim)
}

/// The complex `M ⊗ ∧•ū (⊗ E)` computing `H(u, M) (⊗ E)`.
///
/// Registered actions: `omega` (`π_M(Ω) ⊗ I`), `p_omega` (`p(Ω)` through the
/// diagonal `h`-action) and the Levi root vectors `e{i}`, `f{i}`.
pub fn build_full_complex(ctx: &Context, m: &WeightedModule, e: Option<&WeightedModule>) -> Result<ChainComplex> {
    let triv = WeightedModule::trivial(ctx.rs.rank(), &ctx.pd.levi);
    let e = e.unwrap_or(&triv);
    let amb = Ambient::new(ctx, m, e);
    let n = ctx.ops.n;
    let frames: Vec<Frame> = (0..=n).map(|k| Frame::coordinate(amb.degree_indices(k))).collect();
    let weights = (0..=n).map(|k| amb.degree_indices(k).iter().map(|&i| amb.weights[i].clone()).collect()).collect();
    let d = ambient_differential(ctx, m, e)?;
    let mut actions = vec![
        (
            "omega".to_string(),
            module_operator(ctx, m, &ctx.omega)?.kron(&SparseMatrix::identity(amb.dim_w * amb.dim_e)),
        ),
        ("p_omega".to_string(), diagonal_p_omega(ctx, m, e, amb.dim())?),
    ];
    for &i in &ctx.pd.levi {
        let k = ctx.simple_index(i);
        actions.push((format!("e{}", i + 1), diagonal_action(ctx, m, e, Letter::E(k))));
        actions.push((format!("f{}", i + 1), diagonal_action(ctx, m, e, Letter::F(k))));
    }
    ChainComplex::assemble(frames, weights, &d, actions, ctx.dol.epsilon)
}

/// Basis of the `H`-invariants of the ambient space in wedge degree `k`
/// (restricted to the `H`-stable coordinate subspace selected by `keep`):
/// torus weight zero and killed by the Levi raising operators.
fn invariant_basis(
    ctx: &Context,
    amb: &Ambient,
    raising: &[SparseMatrix],
    k: usize,
    keep: &(dyn Fn(usize) -> bool + Sync),
) -> Vec<SVec> {
    let zero = Weight::zero(ctx.rs.rank());
    let idx: Vec<usize> =
        (0..amb.dim()).filter(|&i| amb.wedge_degree[i] == k && amb.weights[i] == zero && keep(i)).collect();
    if raising.is_empty() {
        return idx.iter().map(|&i| vec![(i, Q::one())]).collect();
    }
    let mut rows: Vec<SVec> = Vec::new();
    for r in raising {
        let sel = r.transpose().select(&idx, &(0..amb.dim()).collect::<Vec<_>>()).transpose();
        rows.extend(sel.rows().iter().filter(|x| !x.is_empty()).cloned());
    }
    let mat = SparseMatrix::from_rows(idx.len(), rows);
    mat.kernel().into_iter().map(|v| v.into_iter().map(|(t, c)| (idx[t], c)).collect()).collect()
}

/// The invariant complex `(M ⊗ ∧•ū ⊗ E^∨)^H` with `M = X`, or `M = X ⊗ F^∨`
/// when `f` is given. Registered action: `omega`, i.e. `π_X(Ω)` on the `X`
/// factor.
pub fn build_invariant_complex(
    ctx: &Context,
    x: &WeightedModule,
    e: &WeightedModule,
    f: Option<&WeightedModule>,
) -> Result<ChainComplex> {
    let omega_x = module_operator(ctx, x, &ctx.omega)?;
    let (m, omega_m) = match f {
        Some(f) => (x.tensor(&f.dual())?, omega_x.kron(&SparseMatrix::identity(f.dim()))),
        None => (x.clone(), omega_x),
    };
    build_invariant_complex_on(ctx, &m, &e.dual(), &omega_m, &|_| true)
}

/// Invariant complex `(V ⊗ ∧•ū ⊗ fiber)^H ∩ (coordinates kept by keep)`
/// for an already dualized fiber, with `omega_m` the registered central
/// action on `M`.
pub fn build_invariant_complex_on(
    ctx: &Context,
    m: &WeightedModule,
    fiber: &WeightedModule,
    omega_m: &SparseMatrix,
    keep: &(dyn Fn(usize) -> bool + Sync),
) -> Result<ChainComplex> {
    let amb = Ambient::new(ctx, m, fiber);
    let raising: Vec<SparseMatrix> =
        ctx.pd.levi.iter().map(|&i| diagonal_action(ctx, m, fiber, Letter::E(ctx.simple_index(i)))).collect();
    let n = ctx.ops.n;
    let bases: Vec<Vec<SVec>> =
        (0..=n).into_par_iter().map(|k| invariant_basis(ctx, &amb, &raising, k, keep)).collect();
    let zero = Weight::zero(ctx.rs.rank());
    let weights = bases.iter().map(|b| vec![zero.clone(); b.len()]).collect();
    let frames: Vec<Frame> = bases.into_iter().map(Frame::span).collect();
    let d = ambient_differential(ctx, m, fiber)?;
    let omega = omega_m.kron(&SparseMatrix::identity(amb.dim_w * amb.dim_e));
    ChainComplex::assemble(frames, weights, &d, vec![("omega".into(), omega)], ctx.dol.epsilon)
}

/// Ambient layout of an invariant complex, for building maps between complexes.
pub fn invariant_ambient(ctx: &Context, m: &WeightedModule, fiber: &WeightedModule) -> Ambient {
    Ambient::new(ctx, m, fiber)
}

/// Cohomology in one degree.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyDegree {
    pub degree: usize,
    pub dim: usize,
    /// `h`-highest weights with multiplicities.
    pub constituents: Vec<(Weight, i64)>,
    #[serde(skip)]
    pub character: Character,
    /// Harmonic representatives (cocycles complementing the coboundaries).
    #[serde(skip)]
    pub representatives: Vec<SVec>,
}

pub struct CohomologyResult {
    pub degrees: Vec<CohomologyDegree>,
    pub chain_euler: i64,
    pub euler: i64,
    classes: Vec<(Echelon, usize, HashMap<usize, usize>)>,
}

impl CohomologyResult {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.degrees.iter().map(|d| d.dim).sum()
    }

    /// Coordinates of the class of a cocycle in the harmonic basis.
    pub fn class_of(&self, k: usize, v: &SVec) -> Result<SVec> {
        let (ech, _, rep_of) = &self.classes[k];
        let coords =
            ech.express(v.clone()).ok_or_else(|| Error::Invariant(format!("vector is not a cocycle in degree {k}")))?;
        Ok(linalg::svec_from(coords.into_iter().filter_map(|(id, c)| rep_of.get(&id).map(|r| (*r, c)))))
    }

    /// Matrix induced on `Hᵏ` by a cochain map `Cᵏ → Dᵏ`, in harmonic bases.
    pub fn induced(&self, target: &CohomologyResult, k: usize, map: &SparseMatrix) -> Result<SparseMatrix> {
        let cols: Vec<SVec> =
            self.degrees[k].representatives.iter().map(|r| target.class_of(k, &map.apply(r))).collect::<Result<_>>()?;
        Ok(SparseMatrix::from_columns(target.degrees[k].dim, &cols))
    }

    /// Matrix of an endomorphism action on `Hᵏ`.
    pub fn induced_endo(&self, k: usize, map: &SparseMatrix) -> Result<SparseMatrix> {
        self.induced(self, k, map)
    }
}

fn weight_groups(ws: &[Weight]) -> BTreeMap<&Weight, Vec<usize>> {
    let mut g: BTreeMap<&Weight, Vec<usize>> = BTreeMap::new();
    for (i, w) in ws.iter().enumerate() {
        g.entry(w).or_default().push(i);
    }
    g
}

fn degree_cohomology(c: &ChainComplex, k: usize) -> (Vec<SVec>, Character, Echelon, usize, HashMap<usize, usize>) {
    let groups = weight_groups(&c.weights[k]);
    let next = if k < c.top() { weight_groups(&c.weights[k + 1]) } else { BTreeMap::new() };
    let mut ech = Echelon::new(c.dims[k], true);
    let mut inserted = 0usize;
    if k > 0 {
        for col in c.d[k - 1].columns() {
            if !col.is_empty() {
                ech.insert(col);
                inserted += 1;
            }
        }
    }
    let n_boundary = inserted;
    let mut reps = Vec::new();
    let mut ch = Character::new();
    let mut rep_of = HashMap::new();
    for (w, cols) in groups {
        let kernel: Vec<SVec> = match next.get(w) {
            Some(rows) => c.d[k]
                .select(rows, &cols)
                .kernel()
                .into_iter()
                .map(|v| v.into_iter().map(|(t, x)| (cols[t], x)).collect())
                .collect(),
            None => cols.iter().map(|&i| vec![(i, Q::one())]).collect(),
        };
        for v in kernel {
            let id = inserted;
            inserted += 1;
            if let Inserted::Independent = ech.insert(v.clone()) {
                rep_of.insert(id, reps.len());
                reps.push(v);
                *ch.entry(w.clone()).or_insert(0) += 1;
            }
        }
    }
    (reps, ch, ech, n_boundary, rep_of)
}

/// Cohomology of a complex, degree by degree (in parallel), with the
/// `h`-decomposition read off the weight-graded dimensions.
pub fn cohomology(ctx: &Context, c: &ChainComplex) -> Result<CohomologyResult> {
    let per: Vec<_> = (0..=c.top()).into_par_iter().map(|k| degree_cohomology(c, k)).collect();
    let mut degrees = Vec::new();
    let mut classes = Vec::new();
    let (mut chain_euler, mut euler) = (0i64, 0i64);
    for (k, (reps, ch, ech, nb, rep_of)) in per.into_iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        chain_euler += sign * c.dims[k] as i64;
        euler += sign * reps.len() as i64;
        let constituents = repn::decompose_character(&ctx.rs, &ctx.pd.levi, &ch)?;
        degrees.push(CohomologyDegree {
            degree: k,
            dim: reps.len(),
            constituents,
            character: ch,
            representatives: reps,
        });
        classes.push((ech, nb, rep_of));
    }
    Ok(CohomologyResult { degrees, chain_euler, euler, classes })
}

/// Generalized eigenvalue with Jordan block sizes.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EigenEntry {
    #[serde(with = "crate::rational")]
    pub value: Q,
    pub multiplicity: usize,
    pub jordan_blocks: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EigenTable {
    pub entries: Vec<EigenEntry>,
    /// Whether the listed generalized eigenspaces fill the whole space.
    pub complete: bool,
}

/// Generalized eigenspaces of `a` at the candidate values, found from the
/// ranks of `(a − c)ᵏ`.
pub fn eigen_table(a: &SparseMatrix, candidates: &[Q]) -> EigenTable {
    let n = a.nrows();
    let mut cands: Vec<Q> = candidates.to_vec();
    cands.sort();
    cands.dedup();
    let mut entries = Vec::new();
    let mut total = 0;
    for c in cands {
        let nmat = a.sub(&SparseMatrix::scalar(n, &c));
        let mut ranks = vec![n];
        let mut p = SparseMatrix::identity(n);
        loop {
            p = p.mul(&nmat);
            let r = p.rank();
            let last = *ranks.last().unwrap();
            ranks.push(r);
            if r == last {
                break;
            }
        }
        let mult = n - ranks.last().unwrap();
        if mult == 0 {
            continue;
        }
        // at_least[s] = number of blocks of size ≥ s+1
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut blocks = Vec::new();
        for s in 0..at_least.len() {
            let exact = at_least[s] - at_least.get(s + 1).copied().unwrap_or(0);
            blocks.extend(std::iter::repeat_n(s + 1, exact));
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        total += mult;
        entries.push(EigenEntry { value: c, multiplicity: mult, jordan_blocks: blocks });
    }
    EigenTable { entries, complete: total == n }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftEntry {
    pub degree: usize,
    pub nu: Weight,
    #[serde(with = "crate::rational")]
    pub p_omega_at_nu: Q,
    #[serde(with = "crate::rational")]
    pub omega_at_lambda: Q,
    /// `ν + ρ_h + ρ(u)`.
    pub shifted: Weight,
    pub conjugate: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KostantReport {
    pub lie_type: String,
    pub levi: Vec<usize>,
    pub lambda: Weight,
    pub betti: Vec<usize>,
    pub computed: Vec<Vec<(Weight, i64)>>,
    pub expected: Vec<Vec<Weight>>,
    pub degree0_is_top_layer: bool,
    pub euler_ok: bool,
    pub shift_table: Vec<ShiftEntry>,
    pub pass: bool,
}

/// `ρ(u)`-shift check for an `h`-constituent `ν` of `H(u, F^λ)`.
pub fn shift_entry(ctx: &Context, degree: usize, lambda: &Weight, nu: &Weight) -> ShiftEntry {
    let p_at = ctx.uea.eval_highest(&ctx.p_omega, nu);
    let o_at = ctx.uea.eval_highest(&ctx.omega, lambda);
    let shifted = nu.add(&ctx.pd.rho_h).add(&ctx.pd.rho_u);
    let conjugate = ctx.rs.weyl_conjugate(&shifted, &lambda.add(&ctx.rs.rho));
    ShiftEntry {
        degree,
        nu: nu.clone(),
        pass: conjugate && p_at == o_at,
        p_omega_at_nu: p_at,
        omega_at_lambda: o_at,
        shifted,
        conjugate,
    }
}

/// Compares `H(u, F^λ)` with the constituents `w(λ+ρ)−ρ`, `w ∈ W¹`, `ℓ(w) = k`.
pub fn kostant_verify(ctx: &Context, lambda: &Weight, cap: usize) -> Result<KostantReport> {
    if !lambda.is_dominant_integral() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let x = ctx.irrep(lambda, cap)?;
    let c = build_full_complex(ctx, &x, None)?;
    c.check()?;
    let h = cohomology(ctx, &c)?;
    let n = ctx.ops.n;
    let mut expected: Vec<Vec<Weight>> = vec![Vec::new(); n + 1];
    for w in ctx.pd.w1_representatives(&ctx.rs) {
        expected[w.length()].push(ctx.rs.dot_action(&w, lambda));
    }
    for e in &mut expected {
        e.sort();
    }
    let computed: Vec<Vec<(Weight, i64)>> = h
        .degrees
        .iter()
        .map(|d| {
            let mut v = d.constituents.clone();
            v.sort();
            v
        })
        .collect();
    let mut pass = computed.len() == expected.len();
    for (c, e) in computed.iter().zip(&expected) {
        let flat: Vec<Weight> =
            c.iter().flat_map(|(w, m)| std::iter::repeat_n(w.clone(), (*m).max(0) as usize)).collect();
        pass &= c.iter().all(|(_, m)| *m == 1) && flat == *e;
    }
    // degree 0 is the top ξ₀-layer of F^λ, i.e. the h-module E^λ
    let (top, _) = repn::top_layer(&ctx.pd, &x);
    let degree0_is_top_layer = h.degrees[0].dim == top.len() && computed[0].iter().map(|(w, _)| w).eq([lambda]);
    pass &= degree0_is_top_layer;
    let euler_ok = h.euler == h.chain_euler;
    pass &= euler_ok;
    let mut shift_table = Vec::new();
    for d in &h.degrees {
        for (nu, _) in &d.constituents {
            let s = shift_entry(ctx, d.degree, lambda, nu);
            pass &= s.pass;
            shift_table.push(s);
        }
    }
    Ok(KostantReport {
        lie_type: ctx.rs.lie_type.clone(),
        levi: ctx.pd.levi.iter().map(|i| i + 1).collect(),
        lambda: lambda.clone(),
        betti: h.betti(),
        computed,
        expected,
        degree0_is_top_layer,
        euler_ok,
        shift_table,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CoDegree {
    pub degree: usize,
    pub dim: usize,
    pub matrices_equal: bool,
    pub omega: EigenTable,
    pub p_omega: EigenTable,
}

#[derive(Clone, Debug, Serialize)]
pub struct CasselmanOsborneReport {
    pub lie_type: String,
    pub levi: Vec<usize>,
    pub module: String,
    pub degrees: Vec<CoDegree>,
    pub pass: bool,
}

/// Compares the actions of `π_X(Ω) ⊗ I` and of `p(Ω)` through the diagonal
/// `h`-action on each `Hᵏ(u, X)`, as matrices in the harmonic basis.
pub fn casselman_osborne_verify(ctx: &Context, x: &WeightedModule, label: &str) -> Result<CasselmanOsborneReport> {
    let c = build_full_complex(ctx, x, None)?;
    c.check()?;
    let h = cohomology(ctx, &c)?;
    let mut cands: Vec<Q> = Vec::new();
    for d in &h.degrees {
        for (nu, _) in &d.constituents {
            cands.push(ctx.uea.eval_highest(&ctx.p_omega, nu));
        }
    }
    for comp in repn::isotypic_components(x) {
        cands.push(ctx.uea.eval_highest(&ctx.omega, &comp.highest_weight));
    }
    let mut degrees = Vec::new();
    let mut pass = true;
    for k in 0..=c.top() {
        let a = h.induced_endo(k, &c.actions["omega"][k])?;
        let b = h.induced_endo(k, &c.actions["p_omega"][k])?;
        let eq = a == b;
        let ta = eigen_table(&a, &cands);
        let tb = eigen_table(&b, &cands);
        pass &= eq && ta.complete && tb.complete;
        degrees.push(CoDegree { degree: k, dim: h.degrees[k].dim, matrices_equal: eq, omega: ta, p_omega: tb });
    }
    Ok(CasselmanOsborneReport {
        lie_type: ctx.rs.lie_type.clone(),
        levi: ctx.pd.levi.iter().map(|i| i + 1).collect(),
        module: label.to_string(),
        degrees,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimaryBlock {
    /// Dominant representative of the `W_H`-orbit of `θ + ρ_h`.
    pub orbit_rep: Weight,
    pub constituents: Vec<(Weight, usize)>,
    pub betti: Vec<usize>,
    /// `λ + ρ` is `W_G`-conjugate to `θ + ρ` for some constituent `θ`.
    pub raw_match: bool,
    /// Same with `−(θ + ρ)`.
    pub sharp_match: bool,
    /// Nonzero cohomology only if `raw_match`.
    pub vanishing_ok: bool,
    /// `Ω` acts on nonzero cohomology with eigenvalue at `λ + ρ`.
    pub eigen_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimarySplitReport {
    pub lie_type: String,
    pub levi: Vec<usize>,
    pub lambda: Weight,
    pub fiber: Vec<Weight>,
    pub betti: Vec<usize>,
    pub blocks: Vec<PrimaryBlock>,
    /// `H` of the whole fiber is the degreewise sum over the blocks.
    pub direct_sum: bool,
    pub pass: bool,
}

/// Splits the `h`-module `⊕ E^θ` into primary components and compares the
/// invariant complex of `F^λ` with the complexes of the components.
pub fn primary_split_verify(
    ctx: &Context,
    lambda: &Weight,
    thetas: &[Weight],
    cap: usize,
) -> Result<PrimarySplitReport> {
    let rs = &ctx.rs;
    let x = ctx.irrep(lambda, cap)?;
    let mut e = WeightedModule::zero(rs.rank(), &ctx.pd.levi);
    for t in thetas {
        e = e.direct_sum(&ctx.levi_irrep(t)?)?;
    }
    let whole = build_invariant_complex(ctx, &x, &e, None)?;
    whole.check()?;
    let betti = cohomology(ctx, &whole)?.betti();
    let x_param = lambda.add(&rs.rho);
    let x_casimir = rs.casimir_at(&x_param);
    let mut sum = vec![0; betti.len()];
    let mut blocks = Vec::new();
    for comp in repn::primary_decompose(rs, &ctx.pd, &e) {
        let part = e.submodule(&comp.basis)?;
        let c = build_invariant_complex(ctx, &x, &part, None)?;
        c.check()?;
        let h = cohomology(ctx, &c)?;
        let b = h.betti();
        for (s, d) in sum.iter_mut().zip(&b) {
            *s += d;
        }
        let params: Vec<Weight> = comp.constituents.iter().map(|(t, _)| t.add(&rs.rho)).collect();
        let raw_match = params.iter().any(|p| rs.weyl_conjugate(&x_param, p));
        let sharp_match = params.iter().any(|p| rs.weyl_conjugate(&x_param, &p.neg()));
        let nonzero = b.iter().any(|&d| d > 0);
        let mut eigen_ok = true;
        for k in 0..=c.top() {
            if h.degrees[k].dim > 0 {
                let a = h.induced_endo(k, &c.actions["omega"][k])?;
                eigen_ok &= eigen_table(&a, std::slice::from_ref(&x_casimir)).complete;
                eigen_ok &= params.iter().any(|p| rs.casimir_at(p) == x_casimir);
            }
        }
        blocks.push(PrimaryBlock {
            orbit_rep: comp.orbit_rep,
            constituents: comp.constituents,
            betti: b,
            raw_match,
            sharp_match,
            vanishing_ok: raw_match || !nonzero,
            eigen_ok,
        });
    }
    let direct_sum = sum == betti;
    let pass = direct_sum && blocks.iter().all(|b| b.vanishing_ok && b.eigen_ok);
    Ok(PrimarySplitReport {
        lie_type: rs.lie_type.clone(),
        levi: ctx.pd.levi.iter().map(|i| i + 1).collect(),
        lambda: lambda.clone(),
        fiber: thetas.to_vec(),
        betti,
        blocks,
        direct_sum,
        pass,
    })
}

/// `(type, 0-based Levi, λ, fiber constituents)` pairs covering matching and
/// non-matching blocks in A1 and A2.
pub fn primary_split_battery() -> Vec<(&'static str, Vec<usize>, Weight, Vec<Weight>)> {
    let w = Weight::from_ints;
    vec![
        ("A1", vec![], w(&[0]), vec![w(&[0]), w(&[-2]), w(&[1])]),
        ("A1", vec![], w(&[1]), vec![w(&[1]), w(&[-3]), w(&[0])]),
        ("A1", vec![], w(&[2]), vec![w(&[2]), w(&[-4]), w(&[-2]), w(&[0])]),
        ("A1", vec![], w(&[3]), vec![w(&[3]), w(&[1]), w(&[-5])]),
        ("A2", vec![], w(&[0, 0]), vec![w(&[0, 0]), w(&[-2, 1]), w(&[-3, 0]), w(&[1, 0])]),
        ("A2", vec![], w(&[1, 0]), vec![w(&[1, 0]), w(&[-3, 2]), w(&[0, 1]), w(&[-2, -2])]),
        ("A2", vec![], w(&[1, 1]), vec![w(&[1, 1]), w(&[-3, 3]), w(&[0, 0])]),
        ("A2", vec![0], w(&[0, 0]), vec![w(&[0, 0]), w(&[1, -2]), w(&[0, 1])]),
        ("A2", vec![0], w(&[1, 1]), vec![w(&[1, 1]), w(&[2, -3]), w(&[1, 0])]),
        ("A2", vec![1], w(&[1, 0]), vec![w(&[1, 0]), w(&[-2, 1]), w(&[0, 0])]),
        ("A2", vec![1], w(&[0, 1]), vec![w(&[0, 1]), w(&[-1, 2]), w(&[0, 2])]),
    ]
}

/// Long exact sequence of a subcomplex `S ⊆ T` with quotient `T/S`.
pub struct LongExactSequence {
    pub sub: CohomologyResult,
    pub total: CohomologyResult,
    pub quotient: CohomologyResult,
    pub quotient_complex: ChainComplex,
    /// `Hᵏ(S) → Hᵏ(T)`.
    pub inclusion: Vec<SparseMatrix>,
    /// `Hᵏ(T) → Hᵏ(T/S)`.
    pub projection: Vec<SparseMatrix>,
    /// `Hᵏ(T/S) → Hᵏ⁺¹(S)`.
    pub connecting: Vec<SparseMatrix>,
    /// Chain-level projection `Tᵏ → (T/S)ᵏ`.
    pub chain_projection: Vec<SparseMatrix>,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LesSummary {
    pub sub: Vec<usize>,
    pub total: Vec<usize>,
    pub quotient: Vec<usize>,
    pub inclusion_ranks: Vec<usize>,
    pub projection_ranks: Vec<usize>,
    pub connecting_ranks: Vec<usize>,
    pub exact: bool,
}

impl LongExactSequence {
    pub fn summary(&self) -> LesSummary {
        LesSummary {
            sub: self.sub.betti(),
            total: self.total.betti(),
            quotient: self.quotient.betti(),
            inclusion_ranks: self.inclusion.iter().map(SparseMatrix::rank).collect(),
            projection_ranks: self.projection.iter().map(SparseMatrix::rank).collect(),
            connecting_ranks: self.connecting.iter().map(SparseMatrix::rank).collect(),
            exact: self.exact,
        }
    }
}

/// Builds the long exact sequence of `0 → S → T → T/S → 0` where
/// `inclusion[k] : Sᵏ → Tᵏ` is an injective chain map.
pub fn les_from_subcomplex(
    ctx: &Context,
    sub: &ChainComplex,
    total: &ChainComplex,
    inclusion: &[SparseMatrix],
) -> Result<LongExactSequence> {
    let top = total.top();
    if sub.top() != top || inclusion.len() != top + 1 {
        return Err(Error::Invalid("subcomplex and complex have different lengths".into()));
    }
    for k in 0..top {
        if total.d[k].mul(&inclusion[k]) != inclusion[k + 1].mul(&sub.d[k]) {
            return Err(Error::Invalid(format!("inclusion is not a chain map in degree {k}")));
        }
    }
    // complement of the image of S in each Tᵏ, and the quotient differential
    let mut splits: Vec<(Echelon, usize, Vec<usize>)> = Vec::new();
    for k in 0..=top {
        let mut ech = Echelon::new(total.dims[k], true);
        let cols = inclusion[k].columns();
        for col in &cols {
            if let Inserted::Dependent(_) = ech.insert(col.clone()) {
                return Err(Error::Invalid(format!("inclusion is not injective in degree {k}")));
            }
        }
        let mut comp = Vec::new();
        for j in 0..total.dims[k] {
            if let Inserted::Independent = ech.insert(vec![(j, Q::one())]) {
                comp.push(j);
            }
        }
        splits.push((ech, cols.len(), comp));
    }
    // coordinates of a Tᵏ vector: (S-part, complement-part)
    let split = |k: usize, v: &SVec| -> (SVec, SVec) {
        let (ech, ns, comp) = &splits[k];
        let coords = ech.express(v.clone()).expect("complement spans");
        let pos: HashMap<usize, usize> = (0..comp.len()).map(|t| (ns + t, t)).collect();
        let s: SVec = coords.iter().filter(|(i, _)| *i < *ns).cloned().collect();
        let q: SVec = linalg::svec_from(coords.into_iter().filter_map(|(i, c)| pos.get(&i).map(|t| (*t, c))));
        (s, q)
    };
    let chain_projection: Vec<SparseMatrix> = (0..=top)
        .map(|k| {
            let cols: Vec<SVec> = (0..total.dims[k]).map(|j| split(k, &vec![(j, Q::one())]).1).collect();
            SparseMatrix::from_columns(splits[k].2.len(), &cols)
        })
        .collect();
    let qd: Vec<SparseMatrix> = (0..=top)
        .map(|k| {
            let nrows = if k < top { splits[k + 1].2.len() } else { 0 };
            let cols: Vec<SVec> = splits[k]
                .2
                .iter()
                .map(|&j| if k < top { split(k + 1, &total.d[k].column(j)).1 } else { Vec::new() })
                .collect();
            SparseMatrix::from_columns(nrows, &cols)
        })
        .collect();
    let qweights: Vec<Vec<Weight>> =
        (0..=top).map(|k| splits[k].2.iter().map(|&j| total.weights[k][j].clone()).collect()).collect();
    // actions preserving S descend to the quotient
    let mut qactions = BTreeMap::new();
    for (name, per) in &total.actions {
        let mut out = Vec::new();
        for k in 0..=top {
            let cols: Vec<SVec> = splits[k].2.iter().map(|&j| split(k, &per[k].column(j)).1).collect();
            out.push(SparseMatrix::from_columns(splits[k].2.len(), &cols));
        }
        qactions.insert(name.clone(), out);
    }
    let quotient_complex = ChainComplex {
        dims: splits.iter().map(|s| s.2.len()).collect(),
        weights: qweights,
        d: qd,
        actions: qactions,
        epsilon: total.epsilon,
        frames: splits.iter().map(|s| Frame::coordinate((0..s.2.len()).collect())).collect(),
    };
    if !quotient_complex.d_squared_zero() {
        return Err(Error::Invariant("quotient differential does not square to zero".into()));
    }
    let hs = cohomology(ctx, sub)?;
    let ht = cohomology(ctx, total)?;
    let hq = cohomology(ctx, &quotient_complex)?;
    let incl: Vec<SparseMatrix> = (0..=top).map(|k| hs.induced(&ht, k, &inclusion[k])).collect::<Result<_>>()?;
    let proj: Vec<SparseMatrix> = (0..=top).map(|k| ht.induced(&hq, k, &chain_projection[k])).collect::<Result<_>>()?;
    let mut conn = Vec::new();
    for k in 0..=top {
        let nrows = if k < top { hs.degrees[k + 1].dim } else { 0 };
        let mut cols = Vec::new();
        for r in &hq.degrees[k].representatives {
            if k == top {
                cols.push(Vec::new());
                continue;
            }
            let lift: SVec = r.iter().map(|(t, c)| (splits[k].2[*t], c.clone())).collect();
            let lift = linalg::svec_from(lift);
            let (s, q) = split(k + 1, &total.d[k].apply(&lift));
            if !q.is_empty() {
                return Err(Error::Invariant("lifted quotient cocycle has a boundary outside the subcomplex".into()));
            }
            cols.push(hs.class_of(k + 1, &s)?);
        }
        conn.push(SparseMatrix::from_columns(nrows, &cols));
    }
    // exactness: consecutive compositions vanish and ranks add up
    let mut exact = true;
    for k in 0..=top {
        exact &= proj[k].mul(&incl[k]).is_zero();
        exact &= conn[k].mul(&proj[k]).is_zero();
        if k < top {
            exact &= incl[k + 1].mul(&conn[k]).is_zero();
        }
        exact &= incl[k].rank() + proj[k].rank() == ht.degrees[k].dim;
        exact &= proj[k].rank() + conn[k].rank() == hq.degrees[k].dim;
        let prev_conn = if k > 0 { conn[k - 1].rank() } else { 0 };
        exact &= prev_conn + incl[k].rank() == hs.degrees[k].dim;
    }
    Ok(LongExactSequence {
        sub: hs,
        total: ht,
        quotient: hq,
        quotient_complex,
        inclusion: incl,
        projection: proj,
        connecting: conn,
        chain_projection,
        exact,
    })
}

/// Signed sum of chain dimensions.
pub fn euler_characteristic(dims: &[usize]) -> i64 {
    dims.iter().enumerate().map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    #[test]
    fn sl2_full_complex_shape_and_cohomology() {
        let ctx = Context::new("A1", &[], 4).unwrap();
        for m in 0..=4 {
            let x = ctx.irrep(&w(&[m]), 100).unwrap();
            let c = build_full_complex(&ctx, &x, None).unwrap();
            assert_eq!(c.dims, vec![m as usize + 1, m as usize + 1]);
            c.check().unwrap();
            let h = cohomology(&ctx, &c).unwrap();
            assert_eq!(h.degrees[0].constituents, vec![(w(&[m]), 1)]);
            assert_eq!(h.degrees[1].constituents, vec![(w(&[-m - 2]), 1)]);
            assert_eq!(h.euler, h.chain_euler);
        }
    }

    #[test]
    fn kostant_a2_borel() {
        let ctx = Context::new("A2", &[], 4).unwrap();
        let r = kostant_verify(&ctx, &w(&[0, 0]), 100).unwrap();
        assert_eq!(r.betti, vec![1, 2, 2, 1]);
        assert!(r.pass, "{r:?}");
        assert!(kostant_verify(&ctx, &w(&[1, 1]), 100).unwrap().pass);
    }

    #[test]
    fn kostant_a2_levi() {
        let ctx = Context::new("A2", &[0], 4).unwrap();
        let r = kostant_verify(&ctx, &w(&[1, 1]), 100).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.computed.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 1]);
    }

    #[test]
    fn casselman_osborne_sl2() {
        let ctx = Context::new("A1", &[], 4).unwrap();
        for m in 0..=3 {
            let x = ctx.irrep(&w(&[m]), 100).unwrap();
            let r = casselman_osborne_verify(&ctx, &x, "F").unwrap();
            assert!(r.pass);
            let expect = q(m * m + 2 * m, 2);
            for d in &r.degrees {
                assert_eq!(d.omega.entries.iter().map(|e| e.value.clone()).collect::<Vec<_>>(), vec![expect.clone()]);
            }
        }
    }

    #[test]
    fn diagonal_p_omega_matches_operator_model() {
        let ctx = Context::new("A2", &[1], 4).unwrap();
        let x = ctx.irrep(&w(&[1, 0]), 100).unwrap();
        let triv = WeightedModule::trivial(2, &ctx.pd.levi);
        let amb = Ambient::new(&ctx, &x, &triv);
        let a = diagonal_p_omega(&ctx, &x, &triv, amb.dim()).unwrap();
        let op = ctx.ops.delta_h(&ctx.p_omega).unwrap();
        let b = ctx.ops.model_matrix(&op, &ctx.uea.module_letters(&x), x.dim()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn eigen_table_jordan_block() {
        let a = SparseMatrix::from_dense(&[
            vec![qi(2), qi(1), qi(0)],
            vec![qi(0), qi(2), qi(0)],
            vec![qi(0), qi(0), qi(3)],
        ]);
        let t = eigen_table(&a, &[qi(2), qi(3), qi(5)]);
        assert!(t.complete);
        assert_eq!(t.entries[0].jordan_blocks, vec![2]);
        assert_eq!(t.entries[1].jordan_blocks, vec![1]);
    }

    #[test]
    fn invariant_complex_trivial_is_wedge_invariants() {
        let ctx = Context::new("A2", &[], 4).unwrap();
        let triv = WeightedModule::trivial(2, &[]);
        let c = build_invariant_complex(&ctx, &triv, &triv, None).unwrap();
        // only ξ-monomials of weight zero survive: the empty one
        assert_eq!(c.dims, vec![1, 0, 0, 0]);
    }

    #[test]
    fn les_trivial_cases() {
        let ctx = Context::new("A1", &[], 4).unwrap();
        let x = ctx.irrep(&w(&[2]), 100).unwrap();
        let c = build_full_complex(&ctx, &x, None).unwrap();
        let id: Vec<SparseMatrix> = c.dims.iter().map(|&d| SparseMatrix::identity(d)).collect();
        let les = les_from_subcomplex(&ctx, &c, &c, &id).unwrap();
        assert!(les.exact);
        assert_eq!(les.quotient.total_dim(), 0);
        let zero = build_invariant_complex(&ctx, &x, &WeightedModule::line(w(&[7]), &[]), None).unwrap();
        assert_eq!(zero.total_dim(), 0);
        let inc: Vec<SparseMatrix> = c.dims.iter().map(|&d| SparseMatrix::zeros(d, 0)).collect();
        let les = les_from_subcomplex(&ctx, &zero, &c, &inc).unwrap();
        assert!(les.exact);
        assert_eq!(les.projection.iter().map(SparseMatrix::rank).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn primary_split_battery_passes() {
        let mut hits = 0;
        for (t, levi, lambda, thetas) in primary_split_battery() {
            let ctx = Context::new(t, &levi, 4).unwrap();
            let r = primary_split_verify(&ctx, &lambda, &thetas, 64).unwrap();
            assert!(r.pass, "{}", serde_json::to_string(&r).unwrap());
            hits += r.blocks.iter().filter(|b| b.betti.iter().any(|&d| d > 0)).count();
        }
        assert!(hits >= 5);
    }
}
