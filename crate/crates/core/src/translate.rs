//! Translation of invariant complexes: the split `F^ν = E^ν ⊕ E′`, the
//! projection `p^G`, the long exact sequence of the `E′`-subcomplex, and the
//! comparison with `h`-level translation.
//!
//! The tensored side `H(E) ⊗ F` is represented directly by the invariant
//! complex of the `g`-module `X ⊗ F^∨` with fiber `E^∨`.

use num_traits::One;
use serde::Serialize;

use crate::cohomology::{self, eigen_table, ChainComplex, Context, EigenTable};
use crate::error::{Error, Result};
use crate::lie::Letter;
use crate::linalg::{Echelon, Inserted, SVec, SparseMatrix};
use crate::rational::Q;
use crate::repn::{self, WeightedModule};
use crate::rootsys::Weight;

pub const MODEL_NOTE: &str =
    "H(E) ⊗ F is modelled by the invariant complex of X ⊗ F^∨ with fiber E^∨; target fiber (E ⊗ E^ν)^∨";

/// `F^ν` restricted to `h`, split into its top `ξ₀`-layer `E^ν` and the rest `E′`.
pub struct TranslationDatum {
    /// Highest weight of the irreducible `h`-module `E`.
    pub theta: Weight,
    /// `h`-infinitesimal character parameter `θ + ρ_h`.
    pub mu: Weight,
    pub nu: Weight,
    pub f_nu: WeightedModule,
    pub top: Vec<usize>,
    pub rest: Vec<usize>,
    pub e_nu: WeightedModule,
    pub e_prime: WeightedModule,
    pub condition_c: bool,
    pub checks: DatumChecks,
}

#[derive(Clone, Debug, Serialize)]
pub struct DatumChecks {
    /// Both layers are `h`-stable and together span `F^ν`.
    pub h_split: bool,
    /// `ū F^ν ⊆ E′`.
    pub nbar_into_rest: bool,
    /// `ν` is not a weight of `E′`.
    pub nu_not_in_rest: bool,
    pub dim_e_nu: usize,
    pub dim_e_prime: usize,
}

impl DatumChecks {
    pub fn ok(&self) -> bool {
        self.h_split && self.nbar_into_rest && self.nu_not_in_rest
    }
}

fn units(idx: &[usize]) -> Vec<SVec> {
    idx.iter().map(|&i| vec![(i, Q::one())]).collect()
}

pub fn split_restriction(ctx: &Context, theta: &Weight, nu: &Weight, cap: usize) -> Result<TranslationDatum> {
    if !nu.is_dominant_integral() {
        return Err(Error::NotDominant(nu.to_string()));
    }
    let f = ctx.irrep(nu, cap)?;
    let (top, rest) = repn::top_layer(&ctx.pd, &f);
    let f_h = f.restrict(&ctx.pd.levi);
    let e_nu = f_h.submodule(&units(&top));
    let e_prime = f_h.submodule(&units(&rest));
    let h_split = e_nu.is_ok() && e_prime.is_ok() && top.len() + rest.len() == f.dim();
    let e_nu = e_nu?;
    let e_prime = e_prime?;
    let mut nbar_into_rest = true;
    for &k in &ctx.pd.u_roots {
        let m = ctx.g.matrix(&f, Letter::F(k));
        nbar_into_rest &= top.iter().all(|&r| m.row(r).is_empty());
    }
    let nu_not_in_rest = rest.iter().all(|&i| f.weights[i] != *nu);
    let mu = theta.add(&ctx.pd.rho_h);
    let condition_c = ctx.pd.condition_c(&ctx.rs, &mu, nu);
    let checks = DatumChecks { h_split, nbar_into_rest, nu_not_in_rest, dim_e_nu: top.len(), dim_e_prime: rest.len() };
    Ok(TranslationDatum {
        theta: theta.clone(),
        mu,
        nu: nu.clone(),
        f_nu: f,
        top,
        rest,
        e_nu,
        e_prime,
        condition_c,
        checks,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    /// Rows of `I ⊗ ∂̂_{F^∨} ⊗ I` indexed by `(E^ν)^∨` vanish.
    pub top_rows_zero: bool,
    pub operator_zero: bool,
    /// Rank of the operator; its range lies in the `(E′)^∨` part.
    pub rank: usize,
}

/// Layout of the source ambient `(X ⊗ F^∨) ⊗ ∧ū ⊗ E^∨`.
struct SourceLayout {
    dim_x: usize,
    dim_f: usize,
    dim_w: usize,
    dim_e: usize,
}

impl SourceLayout {
    fn f_of(&self, i: usize) -> usize {
        (i / (self.dim_w * self.dim_e)) % self.dim_f
    }

    fn split(&self, i: usize) -> (usize, usize, usize, usize) {
        let e = i % self.dim_e;
        let s = (i / self.dim_e) % self.dim_w;
        let m = i / (self.dim_e * self.dim_w);
        (m / self.dim_f, m % self.dim_f, s, e)
    }

    fn dim(&self) -> usize {
        self.dim_x * self.dim_f * self.dim_w * self.dim_e
    }
}

fn layout(ctx: &Context, td: &TranslationDatum, e: &WeightedModule, x: &WeightedModule) -> SourceLayout {
    SourceLayout { dim_x: x.dim(), dim_f: td.f_nu.dim(), dim_w: ctx.ops.wedge.dim(), dim_e: e.dim() }
}

/// Checks that `Σ_i I_X ⊗ π_{F^∨}(X_i) ⊗ e_i ⊗ I_E` only reaches the `(E′)^∨` part.
pub fn block_structure_verify(
    ctx: &Context,
    td: &TranslationDatum,
    e: &WeightedModule,
    x: &WeightedModule,
) -> BlockReport {
    let lay = layout(ctx, td, e, x);
    let fd = td.f_nu.dual();
    let mut op = SparseMatrix::zeros(lay.dim(), lay.dim());
    for (i, &k) in ctx.pd.u_roots.iter().enumerate() {
        let term = SparseMatrix::identity(lay.dim_x)
            .kron(&ctx.g.matrix(&fd, Letter::E(k)))
            .kron(&ctx.ops.wedge.e_matrix(i))
            .kron(&SparseMatrix::identity(lay.dim_e));
        op = op.add(&term);
    }
    let top: std::collections::HashSet<usize> = td.top.iter().copied().collect();
    let top_rows_zero = (0..lay.dim()).filter(|&r| top.contains(&lay.f_of(r))).all(|r| op.row(r).is_empty());
    BlockReport { top_rows_zero, operator_zero: op.is_zero(), rank: op.rank() }
}

/// Source, `E′`-subcomplex and target complexes with the maps between them.
pub struct PgData {
    pub source: ChainComplex,
    pub sub: ChainComplex,
    pub target: ChainComplex,
    pub inclusion: Vec<SparseMatrix>,
    pub projection: Vec<SparseMatrix>,
    /// `p ∘ d_source = d_target ∘ p` and `p ∘ inclusion = 0` in every degree.
    pub chain_map: bool,
}

pub fn projection_pg(ctx: &Context, td: &TranslationDatum, e: &WeightedModule, x: &WeightedModule) -> Result<PgData> {
    let lay = layout(ctx, td, e, x);
    let m = x.tensor(&td.f_nu.dual())?;
    let omega_m = cohomology::module_operator(ctx, x, &ctx.omega)?.kron(&SparseMatrix::identity(lay.dim_f));
    let e_dual = e.dual();
    let source = cohomology::build_invariant_complex_on(ctx, &m, &e_dual, &omega_m, &|_| true)?;
    let rest: std::collections::HashSet<usize> = td.rest.iter().copied().collect();
    let keep = |i: usize| rest.contains(&lay.f_of(i));
    let sub = cohomology::build_invariant_complex_on(ctx, &m, &e_dual, &omega_m, &keep)?;
    let target = cohomology::build_invariant_complex(ctx, x, &e.tensor(&td.e_nu)?, None)?;
    let inclusion = sub.map_to(&source, &SparseMatrix::identity(lay.dim()))?;
    let dim_t = td.top.len();
    let pos: std::collections::HashMap<usize, usize> = td.top.iter().enumerate().map(|(a, b)| (*b, a)).collect();
    let tgt_dim = lay.dim_x * lay.dim_w * lay.dim_e * dim_t;
    let trip = (0..lay.dim()).filter_map(|i| {
        let (xi, f, s, ei) = lay.split(i);
        pos.get(&f).map(|&t| (((xi * lay.dim_w + s) * lay.dim_e + ei) * dim_t + t, i, Q::one()))
    });
    let p_amb = SparseMatrix::from_triplets(tgt_dim, lay.dim(), trip);
    let projection = source.map_to(&target, &p_amb)?;
    let mut chain_map = true;
    for k in 0..=source.top() {
        if k < source.top() {
            chain_map &= projection[k + 1].mul(&source.d[k]) == target.d[k].mul(&projection[k]);
        }
        chain_map &= projection[k].mul(&inclusion[k]).is_zero();
        chain_map &= source.dims[k] == sub.dims[k] + target.dims[k];
    }
    Ok(PgData { source, sub, target, inclusion, projection, chain_map })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubcomplexEigen {
    /// `Ω`-eigenvalues on the cohomology of the `E′`-subcomplex.
    pub sub_eigenvalues: Vec<String>,
    /// Casimir values at `θ′ + ρ` for the `h`-constituents `θ′` of `E ⊗ E′`.
    pub allowed: Vec<String>,
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoCheck {
    pub source_primary: Vec<usize>,
    pub target_primary: Vec<usize>,
    pub induced_ranks: Vec<usize>,
    pub isomorphism: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZuckermanCheck {
    /// Highest weights of `Ψ(E)`, the `χ_{μ+ν}`-primary part of `E ⊗ F^ν|_h`.
    pub psi_constituents: Vec<(Weight, i64)>,
    /// Highest weights of the matching primary component of `E ⊗ E^ν`.
    pub top_constituents: Vec<(Weight, i64)>,
    pub characters_equal: bool,
    pub psi_betti: Vec<usize>,
    pub image_betti: Vec<usize>,
    pub psi_eigen: Vec<EigenTable>,
    pub image_eigen: Vec<EigenTable>,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TranslationReport {
    pub model: String,
    pub lie_type: String,
    pub levi: Vec<usize>,
    pub theta: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub x_highest_weight: Weight,
    pub condition_c: bool,
    pub singular_base: Vec<usize>,
    pub singular_target: Vec<usize>,
    pub datum: DatumChecks,
    pub block: BlockReport,
    pub chain_map: bool,
    pub les: cohomology::LesSummary,
    /// `μ + ρ(u) + ν`.
    pub target_parameter: Weight,
    #[serde(with = "crate::rational")]
    pub target_casimir: Q,
    #[serde(with = "crate::rational")]
    pub x_casimir: Q,
    /// `X` has infinitesimal character `χ_{μ+ρ(u)+ν}`.
    pub primary_active: bool,
    /// Distinct `W_G`-orbits with the same `Ω`-eigenvalue as the target;
    /// a run with any of these is reported as `uncertified`.
    pub collisions: Vec<Weight>,
    pub subcomplex_eigen: SubcomplexEigen,
    pub connecting_vanishes: bool,
    pub iso: IsoCheck,
    pub zuckerman: Option<ZuckermanCheck>,
    pub status: String,
}

/// Dimensions of the generalized `c`-eigenspace of the induced `Ω`-action on each `Hᵏ`.
fn primary_dims(
    h: &cohomology::CohomologyResult,
    c: &ChainComplex,
    value: &Q,
) -> Result<(Vec<usize>, Vec<SparseMatrix>)> {
    let mut dims = Vec::new();
    let mut projs = Vec::new();
    for k in 0..=c.top() {
        let a = h.induced_endo(k, &c.actions["omega"][k])?;
        let n = a.nrows();
        let t = eigen_table(&a, std::slice::from_ref(value));
        dims.push(t.entries.first().map_or(0, |e| e.multiplicity));
        // generalized kernel of (a − c)ⁿ: basis vectors as columns
        let mut p = SparseMatrix::identity(n);
        let nm = a.sub(&SparseMatrix::scalar(n, value));
        for _ in 0..n {
            p = p.mul(&nm);
        }
        let ker = p.kernel();
        projs.push(SparseMatrix::from_columns(n, &ker));
    }
    Ok((dims, projs))
}

fn q_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(crate::rational::to_string).collect()
}

/// Runs the translation pipeline for `E = E^θ` (irreducible `h`-module),
/// `F^ν` and an irreducible `g`-module `X = F^λ`.
pub fn verify_translation(
    ctx: &Context,
    td: &TranslationDatum,
    e: &WeightedModule,
    lambda: &Weight,
    cap: usize,
) -> Result<TranslationReport> {
    let rs = &ctx.rs;
    let x = ctx.irrep(lambda, cap)?;
    let base = td.mu.add(&ctx.pd.rho_u);
    let target_parameter = base.add(&td.nu);
    let target_casimir = rs.casimir_at(&target_parameter);
    let x_param = lambda.add(&rs.rho);
    let x_casimir = rs.casimir_at(&x_param);
    let primary_active = rs.weyl_conjugate(&x_param, &target_parameter);
    let block = block_structure_verify(ctx, td, e, &x);
    let pg = projection_pg(ctx, td, e, &x)?;
    pg.source.check()?;
    pg.sub.check()?;
    pg.target.check()?;
    let les = cohomology::les_from_subcomplex(ctx, &pg.sub, &pg.source, &pg.inclusion)?;
    // eigenvalues on H(sub) come from constituents of E ⊗ E′
    let ee = e.tensor(&td.e_prime)?;
    let mut allowed: Vec<Q> = Vec::new();
    let mut collisions = Vec::new();
    for c in repn::isotypic_components(&ee) {
        let p = c.highest_weight.add(&rs.rho);
        let v = rs.casimir_at(&p);
        if v == target_casimir && !rs.weyl_conjugate(&p, &target_parameter) {
            collisions.push(p.clone());
        }
        allowed.push(v);
    }
    if x_casimir == target_casimir && !primary_active {
        collisions.push(x_param.clone());
    }
    allowed.sort();
    allowed.dedup();
    let mut sub_eigen: Vec<Q> = Vec::new();
    for k in 0..=pg.sub.top() {
        if les.sub.degrees[k].dim > 0 {
            let a = les.sub.induced_endo(k, &pg.sub.actions["omega"][k])?;
            let t = eigen_table(&a, std::slice::from_ref(&x_casimir));
            if !t.complete {
                return Err(Error::Invariant("Ω does not act on the subcomplex cohomology by the scalar of X".into()));
            }
            sub_eigen.push(x_casimir.clone());
        }
    }
    sub_eigen.sort();
    sub_eigen.dedup();
    let contained = sub_eigen.iter().all(|v| allowed.contains(v));
    let subcomplex_eigen =
        SubcomplexEigen { sub_eigenvalues: q_strings(&sub_eigen), allowed: q_strings(&allowed), contained };
    // primary parts at χ_{μ+ρ(u)+ν}
    let (src_dims, src_projs) = primary_dims(&les.total, &pg.source, &target_casimir)?;
    let ht = cohomology::cohomology(ctx, &pg.target)?;
    let (tgt_dims, _) = primary_dims(&ht, &pg.target, &target_casimir)?;
    let (_, q_projs) = primary_dims(&les.quotient, &les.quotient_complex, &target_casimir)?;
    let mut connecting_vanishes = true;
    for k in 0..=pg.source.top() {
        connecting_vanishes &= les.connecting[k].mul(&q_projs[k]).is_zero();
    }
    let mut images = Vec::new();
    let mut induced_ranks = Vec::new();
    let mut isomorphism = true;
    for k in 0..=pg.source.top() {
        let m = les.total.induced(&ht, k, &pg.projection[k])?.mul(&src_projs[k]);
        let r = m.rank();
        induced_ranks.push(r);
        isomorphism &= r == src_dims[k] && r == tgt_dims[k];
        images.push(m);
    }
    let iso = IsoCheck { source_primary: src_dims, target_primary: tgt_dims, induced_ranks, isomorphism };
    let zuckerman = zuckerman_check(ctx, td, e, &x, &ht, &pg.target, &images, &target_casimir)?;
    let structural = td.checks.ok() && block.top_rows_zero && pg.chain_map && les.exact && contained;
    let translated = connecting_vanishes && iso.isomorphism && zuckerman.as_ref().is_some_and(|z| z.equal);
    let status = match (structural, td.condition_c, collisions.is_empty(), translated) {
        (false, ..) => "fail",
        (true, false, ..) => "not-applicable",
        (true, true, false, _) => "uncertified",
        (true, true, true, true) => "pass",
        (true, true, true, false) => "fail",
    }
    .to_string();
    Ok(TranslationReport {
        model: MODEL_NOTE.into(),
        lie_type: rs.lie_type.clone(),
        levi: ctx.pd.levi.iter().map(|i| i + 1).collect(),
        theta: td.theta.clone(),
        mu: td.mu.clone(),
        nu: td.nu.clone(),
        x_highest_weight: lambda.clone(),
        condition_c: td.condition_c,
        singular_base: rs.singular_set(&base),
        singular_target: rs.singular_set(&target_parameter),
        datum: td.checks.clone(),
        block,
        chain_map: pg.chain_map,
        les: les.summary(),
        target_parameter,
        target_casimir,
        x_casimir,
        primary_active,
        collisions,
        subcomplex_eigen,
        connecting_vanishes,
        iso,
        zuckerman,
        status,
    })
}

/// Matrix of an endomorphism restricted to the span of the columns of `img`
/// (assumed stable), in a basis of independent columns.
fn restrict_to_image(a: &SparseMatrix, img: &SparseMatrix) -> Result<SparseMatrix> {
    let mut ech = Echelon::new(img.nrows(), true);
    let mut basis = Vec::new();
    for c in img.columns() {
        if let Inserted::Independent = ech.insert(c.clone()) {
            basis.push(c);
        }
    }
    let mut ech = Echelon::new(img.nrows(), true);
    for b in &basis {
        ech.insert(b.clone());
    }
    let cols: Vec<SVec> = basis
        .iter()
        .map(|b| ech.express(a.apply(b)).ok_or_else(|| Error::Invariant("image is not stable".into())))
        .collect::<Result<_>>()?;
    Ok(SparseMatrix::from_columns(basis.len(), &cols))
}

/// Compares the `p^G`-image with the complex whose fiber is `Ψ(E)^∨`.
#[allow(clippy::too_many_arguments)]
fn zuckerman_check(
    ctx: &Context,
    td: &TranslationDatum,
    e: &WeightedModule,
    x: &WeightedModule,
    ht: &cohomology::CohomologyResult,
    target: &ChainComplex,
    images: &[SparseMatrix],
    value: &Q,
) -> Result<Option<ZuckermanCheck>> {
    let Some(psi) = repn::zuckerman_translate_h(&ctx.rs, &ctx.pd, e, &td.theta, &td.f_nu)? else {
        return Ok(None);
    };
    let ee = e.tensor(&td.e_nu)?;
    let target_rep = ctx.rs.dominant_rep(&td.theta.add(&td.nu).add(&ctx.pd.rho_h), &ctx.pd.levi);
    let top_component = repn::primary_decompose(&ctx.rs, &ctx.pd, &ee).into_iter().find(|c| c.orbit_rep == target_rep);
    let mut psi_constituents = repn::decompose_character(&ctx.rs, &ctx.pd.levi, &psi.character())?;
    psi_constituents.sort();
    let mut top_constituents: Vec<(Weight, i64)> = top_component
        .as_ref()
        .map(|c| c.constituents.iter().map(|(w, m)| (w.clone(), *m as i64)).collect())
        .unwrap_or_default();
    top_constituents.sort();
    let characters_equal =
        top_component.is_some_and(|c| ee.submodule(&c.basis).map(|m| m.character()).ok() == Some(psi.character()));
    let c_psi = cohomology::build_invariant_complex(ctx, x, &psi, None)?;
    c_psi.check()?;
    let h_psi = cohomology::cohomology(ctx, &c_psi)?;
    let psi_betti = h_psi.betti();
    let mut psi_eigen = Vec::new();
    let mut image_eigen = Vec::new();
    let mut image_betti = Vec::new();
    for k in 0..=target.top() {
        image_betti.push(images[k].rank());
        let a = h_psi.induced_endo(k, &c_psi.actions["omega"][k])?;
        psi_eigen.push(eigen_table(&a, std::slice::from_ref(value)));
        let b = ht.induced_endo(k, &target.actions["omega"][k])?;
        image_eigen.push(eigen_table(&restrict_to_image(&b, &images[k])?, std::slice::from_ref(value)));
    }
    let equal = characters_equal
        && psi_betti == image_betti
        && psi_eigen.iter().all(|t| t.complete)
        && image_eigen.iter().all(|t| t.complete)
        && psi_eigen == image_eigen;
    Ok(Some(ZuckermanCheck {
        psi_constituents,
        top_constituents,
        characters_equal,
        psi_betti,
        image_betti,
        psi_eigen,
        image_eigen,
        equal,
    }))
}

/// One `(type, Levi, θ, ν, λ)` configuration of the translation pipeline.
#[derive(Clone, Debug, Serialize, serde::Deserialize)]
pub struct TranslationRun {
    pub lie_type: String,
    /// 1-based simple root indices.
    pub levi: Vec<usize>,
    pub theta: Weight,
    pub nu: Weight,
    pub lambda: Weight,
    #[serde(default = "default_cap")]
    pub cap: usize,
}

fn default_cap() -> usize {
    64
}

impl TranslationRun {
    /// `levi` is 0-based here.
    pub fn new(lie_type: &str, levi: &[usize], theta: &[i64], nu: &[i64], lambda: &[i64]) -> Self {
        TranslationRun {
            lie_type: lie_type.into(),
            levi: levi.iter().map(|i| i + 1).collect(),
            theta: Weight::from_ints(theta),
            nu: Weight::from_ints(nu),
            lambda: Weight::from_ints(lambda),
            cap: default_cap(),
        }
    }

    pub fn run(&self) -> Result<TranslationReport> {
        let levi = self
            .levi
            .iter()
            .map(|i| i.checked_sub(1).ok_or_else(|| Error::Parse("Levi indices are 1-based".into())))
            .collect::<Result<Vec<usize>>>()?;
        let ctx = Context::new(&self.lie_type, &levi, 4)?;
        let td = split_restriction(&ctx, &self.theta, &self.nu, self.cap)?;
        let e = ctx.levi_irrep(&self.theta)?;
        verify_translation(&ctx, &td, &e, &self.lambda, self.cap)
    }
}

pub fn run_all(runs: &[TranslationRun]) -> Result<Vec<TranslationReport>> {
    use rayon::prelude::*;
    runs.par_iter().map(TranslationRun::run).collect()
}

/// Configurations in A1 and A2 satisfying condition (C) without `Ω`-collisions.
pub fn standard_runs() -> Vec<TranslationRun> {
    vec![
        TranslationRun::new("A1", &[], &[0], &[1], &[1]),
        TranslationRun::new("A1", &[], &[1], &[1], &[2]),
        TranslationRun::new("A1", &[], &[0], &[2], &[2]),
        TranslationRun::new("A1", &[], &[1], &[2], &[1]),
        TranslationRun::new("A2", &[], &[0, 0], &[1, 0], &[1, 0]),
        TranslationRun::new("A2", &[0], &[0, 0], &[0, 1], &[0, 1]),
        TranslationRun::new("A2", &[0], &[1, 0], &[0, 1], &[1, 1]),
        TranslationRun::new("A2", &[1], &[0, 0], &[1, 0], &[1, 0]),
        TranslationRun::new("A2", &[0], &[0, 0], &[1, 1], &[1, 1]),
        TranslationRun::new("A2", &[0], &[0, 0], &[1, 1], &[0, 0]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    #[test]
    fn a1_borel_top_line() {
        let ctx = Context::new("A1", &[], 4).unwrap();
        let td = split_restriction(&ctx, &w(&[0]), &w(&[1]), 4).unwrap();
        assert!(td.checks.ok());
        assert_eq!((td.checks.dim_e_nu, td.checks.dim_e_prime), (1, 1));
    }

    #[test]
    fn a2_levi_split() {
        let ctx = Context::new("A2", &[0], 4).unwrap();
        let td = split_restriction(&ctx, &w(&[0, 0]), &w(&[0, 1]), 4).unwrap();
        assert!(td.checks.ok());
        assert_eq!(td.checks.dim_e_nu + td.checks.dim_e_prime, 3);
        assert!(td.checks.dim_e_nu == 1 || td.checks.dim_e_nu == 2);
    }

    #[test]
    fn trivial_nu_is_identity() {
        let ctx = Context::new("A1", &[], 4).unwrap();
        let td = split_restriction(&ctx, &w(&[0]), &w(&[0]), 4).unwrap();
        assert_eq!(td.checks.dim_e_prime, 0);
        let e = ctx.levi_irrep(&td.theta).unwrap();
        let x = ctx.irrep(&w(&[1]), 4).unwrap();
        let pg = projection_pg(&ctx, &td, &e, &x).unwrap();
        assert!(pg.chain_map);
        assert_eq!(pg.source.dims, pg.target.dims);
    }

    #[test]
    fn a1_chain_maps() {
        let ctx = Context::new("A1", &[], 4).unwrap();
        let td = split_restriction(&ctx, &w(&[0]), &w(&[1]), 4).unwrap();
        for theta in 0..3 {
            let e = ctx.levi_irrep(&w(&[theta])).unwrap();
            for m in 0..=4 {
                let x = ctx.irrep(&w(&[m]), 8).unwrap();
                let pg = projection_pg(&ctx, &td, &e, &x).unwrap();
                assert!(pg.chain_map, "theta={theta} m={m}");
                assert!(block_structure_verify(&ctx, &td, &e, &x).top_rows_zero);
            }
        }
    }

    #[test]
    fn a1_pipeline() {
        let ctx = Context::new("A1", &[], 4).unwrap();
        let td = split_restriction(&ctx, &w(&[0]), &w(&[1]), 4).unwrap();
        let e = ctx.levi_irrep(&td.theta).unwrap();
        for m in 0..=3 {
            let r = verify_translation(&ctx, &td, &e, &w(&[m]), 4).unwrap();
            assert_ne!(r.status, "fail", "m={m}: {}", serde_json::to_string_pretty(&r).unwrap());
        }
    }

    #[test]
    fn standard_runs_pass() {
        let reports = run_all(&standard_runs()).unwrap();
        for (run, r) in standard_runs().iter().zip(&reports) {
            assert_eq!(r.status, "pass", "{run:?}");
        }
        assert!(reports.iter().filter(|r| r.primary_active).count() >= 5);
    }

    #[test]
    fn wall_crossing_is_not_applicable() {
        let run = TranslationRun::new("A1", &[], &[-1], &[1], &[0]);
        let r = run.run().unwrap();
        assert!(!r.condition_c);
        assert_eq!(r.status, "not-applicable");
        assert!(!r.iso.isomorphism);
    }

    #[test]
    fn contragredient_collision_is_flagged() {
        let r = TranslationRun::new("A2", &[], &[0, 0], &[1, 0], &[0, 1]).run().unwrap();
        assert_eq!(r.status, "uncertified");
        assert_eq!(r.collisions, vec![w(&[1, 2])]);
    }
}
