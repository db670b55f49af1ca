//! Run configurations, reports and the acceptance battery behind the CLI.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cohomology::{self, Context};
use crate::diffop::OperatorElement;
use crate::error::{Error, Result};
use crate::rational;
use crate::repn;
use crate::rootsys::{ParabolicData, RootSystem, Weight};
use crate::translate::{self, TranslationReport, TranslationRun};

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "DOLBEAULT_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Roots,
    Irrep,
    Kostant,
    CasselmanOsborne,
    Hodge,
    Zeta,
    Translate,
    Suite,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

fn default_type() -> String {
    "A1".into()
}

fn default_degree() -> usize {
    4
}

fn default_dim_cap() -> usize {
    64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default = "default_type")]
    pub lie_type: String,
    /// 1-based simple roots of the Levi factor.
    #[serde(default)]
    pub levi: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Weight>,
    /// Highest weight `θ` of the `h`-module `E`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Weight>,
    /// Parameter `θ + ρ_h`; alternative to `theta`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Weight>,
    /// Truncation degree `N`.
    #[serde(default = "default_degree")]
    pub degree: usize,
    #[serde(default = "default_dim_cap")]
    pub dim_cap: usize,
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            lie_type: default_type(),
            levi: Vec::new(),
            lambda: None,
            theta: None,
            mu: None,
            nu: None,
            degree: default_degree(),
            dim_cap: default_dim_cap(),
            format: Format::Json,
            cache_dir: None,
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    fn levi0(&self) -> Result<Vec<usize>> {
        self.levi
            .iter()
            .map(|i| i.checked_sub(1).ok_or_else(|| Error::Invalid("Levi indices are 1-based".into())))
            .collect()
    }

    /// Checks the configuration against the root system before any work.
    pub fn validate(&self) -> Result<()> {
        if self.command == Command::Suite {
            return Ok(());
        }
        let rs = RootSystem::build(&self.lie_type)?;
        let levi = self.levi0()?;
        ParabolicData::build(&rs, &levi)?;
        let rank = rs.rank();
        for (name, w) in [("lambda", &self.lambda), ("theta", &self.theta), ("mu", &self.mu), ("nu", &self.nu)] {
            if let Some(w) = w {
                if w.rank() != rank {
                    return Err(Error::Invalid(format!("{name} has {} coordinates, rank is {rank}", w.rank())));
                }
            }
        }
        if let Some(l) = &self.lambda {
            if !l.is_dominant_integral() {
                return Err(Error::NotDominant(format!("lambda {l}")));
            }
            let d = rs.weyl_dimension(l);
            if d > rational::qi(self.dim_cap as i64) {
                return Err(Error::DimensionCap {
                    dim: rational::as_i64(&d).unwrap_or(i64::MAX) as usize,
                    cap: self.dim_cap,
                });
            }
        }
        if self.theta.is_some() && self.mu.is_some() {
            return Err(Error::Invalid("give either theta or mu, not both".into()));
        }
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::Invalid(format!("{:?} needs {what}", self.command)))
            }
        };
        match self.command {
            Command::Irrep | Command::Kostant | Command::CasselmanOsborne => need(self.lambda.is_some(), "--lambda"),
            Command::Translate => need(
                self.lambda.is_some() && self.nu.is_some() && (self.theta.is_some() || self.mu.is_some()),
                "--lambda, --nu and --theta or --mu",
            ),
            _ => Ok(()),
        }
    }

    /// Configuration with everything that cannot change the report removed.
    fn cache_key(&self) -> RunConfig {
        RunConfig { format: Format::Json, cache_dir: None, ..self.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub summary: String,
    pub certificate: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Check {
    fn new(name: &str, ok: bool, summary: String, certificate: Value, counterexample: impl FnOnce() -> Value) -> Check {
        let status = Status::from_bool(ok);
        let counterexample = (!ok).then(counterexample);
        Check { name: name.into(), status, summary, certificate, counterexample }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SignConvention {
    pub epsilon: i64,
    pub rule: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: RunConfig,
    pub sign_convention: SignConvention,
    pub model: String,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl Report {
    fn new(command: &RunConfig, epsilon: i64, checks: Vec<Check>) -> Report {
        let status = if checks.iter().any(|c| c.status == Status::Fail) { Status::Fail } else { Status::Pass };
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.cache_key(),
            sign_convention: SignConvention {
                epsilon,
                rule: "∂̄ = ∂̂ + ε·v; U(g) letter to the left of the exterior word; ε is the first of −1, +1 with ∂̄² = 0"
                    .into(),
            },
            model: translate::MODEL_NOTE.into(),
            checks,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned `name  status  summary` table.
    pub fn to_text(&self) -> String {
        let w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<w$}  {:<14}  {}\n", c.name, c.status.as_str(), c.summary));
        }
        out.push_str(&format!("{:<w$}  {}\n", "overall", self.status.as_str()));
        out
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("certificate serializes")
}

fn weights(ws: &[Weight]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
}

fn levi_label(levi: &[usize]) -> String {
    if levi.is_empty() {
        "Borel".into()
    } else {
        format!("Levi{{{}}}", levi.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Dominant integral weights whose irreducible module has dimension at most `cap`.
pub fn small_dominant_weights(rs: &RootSystem, cap: usize) -> Vec<Weight> {
    let cap = rational::qi(cap as i64);
    let mut out = Vec::new();
    let mut stack = vec![Weight::zero(rs.rank())];
    let mut seen = std::collections::BTreeSet::new();
    while let Some(w) = stack.pop() {
        if !seen.insert(w.clone()) || rs.weyl_dimension(&w) > cap {
            continue;
        }
        for i in 0..rs.rank() {
            let mut v = w.clone();
            v.0[i] += rational::qi(1);
            stack.push(v);
        }
        out.push(w);
    }
    out.sort();
    out
}

/// `{Borel} ∪ {maximal Levi}` for a root system of rank `n`.
fn parabolics(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    if n > 1 {
        for skip in 0..n {
            out.push((0..n).filter(|&i| i != skip).collect());
        }
    }
    out
}

/// `∂̄² = 0` and `d² = 0` for the full complexes of all irreducible modules
/// of dimension at most 64 and their invariant complexes with trivial fiber.
pub fn criterion_d_squared() -> Result<Check> {
    let mut cases = Vec::new();
    for t in ["A1", "A2", "B2"] {
        let n = RootSystem::build(t)?.rank();
        for levi in parabolics(n) {
            cases.push((t, levi));
        }
    }
    let rows: Vec<(String, usize, bool, Vec<String>)> = cases
        .par_iter()
        .map(|(t, levi)| -> Result<_> {
            let ctx = Context::new(t, levi, 2)?;
            let abstract_ok = ctx.ops.mul(&ctx.dol.bar, &ctx.dol.bar)?.is_zero();
            let ws = small_dominant_weights(&ctx.rs, 64);
            let bad: Vec<String> = ws
                .par_iter()
                .map(|w| -> Result<Option<String>> {
                    let x = ctx.irrep(w, 64)?;
                    let full = cohomology::build_full_complex(&ctx, &x, None)?;
                    let triv = repn::WeightedModule::trivial(ctx.rs.rank(), &ctx.pd.levi);
                    let inv = cohomology::build_invariant_complex(&ctx, &x, &triv, None)?;
                    let ok =
                        full.d_squared_zero() && full.check().is_ok() && inv.d_squared_zero() && inv.check().is_ok();
                    Ok((!ok).then(|| w.to_string()))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            Ok((format!("{t} {}", levi_label(levi)), ws.len() * 2, abstract_ok, bad))
        })
        .collect::<Result<_>>()?;
    let complexes: usize = rows.iter().map(|r| r.1).sum();
    let ok = rows.iter().all(|r| r.2 && r.3.is_empty());
    let cert = json!(rows
        .iter()
        .map(|r| json!({"case": r.0, "complexes": r.1, "abstract_d_squared_zero": r.2}))
        .collect::<Vec<_>>());
    Ok(Check::new("d-squared", ok, format!("{} parabolics, {complexes} complexes", rows.len()), cert, || {
        json!(rows
            .iter()
            .filter(|r| !r.2 || !r.3.is_empty())
            .map(|r| json!({"case": r.0, "abstract": r.2, "failing_weights": r.3}))
            .collect::<Vec<_>>())
    }))
}

pub fn criterion_kostant() -> Result<Check> {
    let ctx = Context::new("A2", &[], 4)?;
    let lambdas = [[0, 0], [1, 0], [1, 1]];
    let reports = lambdas
        .par_iter()
        .map(|l| cohomology::kostant_verify(&ctx, &Weight::from_ints(l), 64))
        .collect::<Result<Vec<_>>>()?;
    let betti0 = reports[0].betti == [1, 2, 2, 1];
    let ok = betti0 && reports.iter().all(|r| r.pass);
    let summary = reports.iter().map(|r| format!("{}:{:?}", r.lambda, r.betti)).collect::<Vec<_>>().join(" ");
    Ok(Check::new("kostant", ok, summary, to_value(&reports), || {
        to_value(&reports.iter().filter(|r| !r.pass).map(|r| (&r.lambda, &r.computed, &r.expected)).collect::<Vec<_>>())
    }))
}

pub fn criterion_casselman_osborne() -> Result<Check> {
    let a1 = Context::new("A1", &[], 4)?;
    let mut jobs: Vec<(&Context, Weight)> = (0..=6).map(|m| (&a1, Weight::from_ints(&[m]))).collect();
    let a2 = Context::new("A2", &[], 4)?;
    let a2l = Context::new("A2", &[0], 4)?;
    jobs.push((&a2, Weight::from_ints(&[1, 1])));
    jobs.push((&a2l, Weight::from_ints(&[1, 1])));
    let reports = jobs
        .par_iter()
        .map(|(ctx, l)| {
            let x = ctx.irrep(l, 64)?;
            cohomology::casselman_osborne_verify(ctx, &x, &format!("F{l}"))
        })
        .collect::<Result<Vec<_>>>()?;
    let ok = reports.iter().all(|r| r.pass);
    Ok(Check::new("casselman-osborne", ok, format!("{} modules", reports.len()), to_value(&reports), || {
        to_value(&reports.iter().filter(|r| !r.pass).collect::<Vec<_>>())
    }))
}

pub fn criterion_hodge() -> Result<Check> {
    let n = 4;
    let rows = ["A1", "A2"]
        .par_iter()
        .map(|t| -> Result<Value> {
            let ctx = Context::new(t, &[], n + 1)?;
            let h = ctx.ops.hodge_decompose(&ctx.dol, &OperatorElement::from_pbw(&ctx.omega))?;
            let zeta_ok = h.residual.is_zero() && h.z == ctx.p_omega;
            let cert = ctx.ops.hodge_certificate(&ctx.dol, n)?;
            Ok(json!({
                "type": t,
                "z": ctx.uea.display(&h.z),
                "residual_zero": h.residual.is_zero(),
                "z_is_projection": zeta_ok,
                "steps": to_value(&h.steps),
                "certificate": to_value(&cert),
                "pass": zeta_ok && cert.holds,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let ok = rows.iter().all(|r| r["pass"] == true);
    let summary = rows
        .iter()
        .map(|r| format!("{} z={}", r["type"].as_str().unwrap_or(""), r["z"].as_str().unwrap_or("")))
        .collect::<Vec<_>>()
        .join("; ");
    Ok(Check::new("hodge", ok, format!("N={n}: {summary}"), json!(rows), || {
        json!(rows.iter().filter(|r| r["pass"] != true).collect::<Vec<_>>())
    }))
}

pub fn criterion_shift() -> Result<Check> {
    let mut jobs: Vec<(&str, Vec<usize>, Weight)> = (0..=3).map(|m| ("A1", vec![], Weight::from_ints(&[m]))).collect();
    for levi in [vec![], vec![0], vec![1]] {
        for l in [[0, 0], [1, 0], [0, 1], [1, 1]] {
            jobs.push(("A2", levi.clone(), Weight::from_ints(&l)));
        }
    }
    for l in [[0, 0], [1, 0], [0, 1]] {
        jobs.push(("B2", vec![], Weight::from_ints(&l)));
    }
    let tables = jobs
        .par_iter()
        .map(|(t, levi, l)| -> Result<Value> {
            let ctx = Context::new(t, levi, 4)?;
            let r = cohomology::kostant_verify(&ctx, l, 64)?;
            let ok = r.shift_table.iter().all(|s| s.pass);
            Ok(json!({"type": t, "levi": levi_label(levi), "lambda": l, "entries": to_value(&r.shift_table), "pass": ok}))
        })
        .collect::<Result<Vec<_>>>()?;
    let entries: usize = tables.iter().map(|t| t["entries"].as_array().map_or(0, Vec::len)).sum();
    let ok = tables.iter().all(|t| t["pass"] == true);
    Ok(Check::new(
        "rho-u-shift",
        ok,
        format!("{} modules, {entries} constituents", tables.len()),
        json!(tables),
        || json!(tables.iter().filter(|t| t["pass"] != true).collect::<Vec<_>>()),
    ))
}

pub fn criterion_primary_split() -> Result<Check> {
    let battery = cohomology::primary_split_battery();
    let reports = battery
        .par_iter()
        .map(|(t, levi, lambda, thetas)| {
            let ctx = Context::new(t, levi, 4)?;
            cohomology::primary_split_verify(&ctx, lambda, thetas, 64)
        })
        .collect::<Result<Vec<_>>>()?;
    let ok = reports.iter().all(|r| r.pass);
    let nonzero = reports.iter().flat_map(|r| &r.blocks).filter(|b| b.betti.iter().any(|&d| d > 0)).count();
    Ok(Check::new(
        "primary-split",
        ok,
        format!("{} pairs, {nonzero} blocks with nonzero cohomology", reports.len()),
        to_value(&reports),
        || to_value(&reports.iter().filter(|r| !r.pass).collect::<Vec<_>>()),
    ))
}

fn translation_summary(r: &TranslationReport) -> Value {
    json!({
        "lie_type": r.lie_type, "levi": r.levi, "theta": r.theta, "nu": r.nu, "lambda": r.x_highest_weight,
        "status": r.status, "chain_map": r.chain_map, "connecting_vanishes": r.connecting_vanishes,
        "iso": to_value(&r.iso),
    })
}

pub fn criterion_translation(reports: &[TranslationReport]) -> Check {
    let applicable: Vec<&TranslationReport> = reports.iter().filter(|r| r.condition_c).collect();
    let ok = applicable.len() >= 5
        && applicable.iter().all(|r| r.status == "pass" && r.chain_map && r.connecting_vanishes && r.iso.isomorphism);
    let active = applicable.iter().filter(|r| r.primary_active).count();
    Check::new(
        "translation",
        ok,
        format!("{} runs under condition (C), {active} with nonzero primary part", applicable.len()),
        json!(reports.iter().map(translation_summary).collect::<Vec<_>>()),
        || json!(reports.iter().filter(|r| r.status != "pass").map(translation_summary).collect::<Vec<_>>()),
    )
}

pub fn criterion_zuckerman(reports: &[TranslationReport]) -> Check {
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| json!({"lie_type": r.lie_type, "levi": r.levi, "theta": r.theta, "nu": r.nu, "lambda": r.x_highest_weight, "zuckerman": to_value(&r.zuckerman)}))
        .collect();
    let ok = !reports.is_empty() && reports.iter().all(|r| r.zuckerman.as_ref().is_some_and(|z| z.equal));
    Check::new("zuckerman", ok, format!("{} runs", reports.len()), json!(rows), || {
        json!(rows
            .iter()
            .zip(reports)
            .filter(|(_, r)| !r.zuckerman.as_ref().is_some_and(|z| z.equal))
            .map(|(v, _)| v)
            .collect::<Vec<_>>())
    })
}

/// Criteria one through eight, in order.
pub fn suite() -> Result<Vec<Check>> {
    type Job = fn() -> Result<Check>;
    let jobs: [Job; 6] = [
        criterion_d_squared,
        criterion_kostant,
        criterion_casselman_osborne,
        criterion_hodge,
        criterion_shift,
        criterion_primary_split,
    ];
    let (checks, translations) = rayon::join(
        || jobs.par_iter().map(|j| j()).collect::<Result<Vec<_>>>(),
        || translate::run_all(&translate::standard_runs()),
    );
    let mut checks = checks?;
    let translations = translations?;
    checks.push(criterion_translation(&translations));
    checks.push(criterion_zuckerman(&translations));
    Ok(checks)
}

fn lambda_of(cfg: &RunConfig) -> Result<Weight> {
    cfg.lambda.clone().ok_or_else(|| Error::Invalid("missing lambda".into()))
}

fn run_command(cfg: &RunConfig) -> Result<(i64, Vec<Check>)> {
    if cfg.command == Command::Suite {
        return Ok((Context::new("A1", &[], 2)?.dol.epsilon, suite()?));
    }
    let levi = cfg.levi0()?;
    let cap = match cfg.command {
        Command::Hodge => cfg.degree + 1,
        Command::Zeta => cfg.degree.max(3),
        _ => 4,
    };
    let ctx = Context::new(&cfg.lie_type, &levi, cap)?;
    let mut checks = Vec::new();
    match cfg.command {
        Command::Roots => {
            let n_pos = ctx.rs.positive_roots.len();
            let ok = 2 * n_pos + ctx.rs.rank() == ctx.rs.dim() && ctx.pd.u_roots.len() + ctx.pd.h_roots.len() == n_pos;
            let cert = json!({"root_system": ctx.rs.to_json(), "parabolic": ctx.pd.to_json(&ctx.rs)});
            checks.push(Check::new(
                "roots",
                ok,
                format!("{n_pos} positive roots, {} in u", ctx.pd.u_roots.len()),
                cert,
                || json!(n_pos),
            ));
        }
        Command::Irrep => {
            let l = lambda_of(cfg)?;
            let x = ctx.irrep(&l, cfg.dim_cap)?;
            let relations = x.check_relations(&ctx.rs);
            let weyl = ctx.rs.weyl_dimension(&l) == rational::qi(x.dim() as i64);
            let freud = repn::freudenthal(&ctx.rs, &ctx.rs.all_indices(), &l) == x.character();
            let ch: Vec<(String, i64)> = x.character().iter().map(|(w, m)| (w.to_string(), *m)).collect();
            let ok = relations.is_ok() && weyl && freud;
            let cert = json!({"dim": x.dim(), "character": ch, "weyl_dimension": weyl, "freudenthal": freud});
            checks.push(Check::new(
                "irrep",
                ok,
                format!("dim {}", x.dim()),
                cert,
                || json!({"relations": relations.err().map(|e| e.to_string())}),
            ));
        }
        Command::Kostant => {
            let r = cohomology::kostant_verify(&ctx, &lambda_of(cfg)?, cfg.dim_cap)?;
            let shift_ok = r.shift_table.iter().all(|s| s.pass);
            let summary = format!(
                "betti {:?}; {}",
                r.betti,
                r.computed
                    .iter()
                    .map(|d| weights(&d.iter().map(|p| p.0.clone()).collect::<Vec<_>>()))
                    .collect::<Vec<_>>()
                    .join(" | ")
            );
            let shift = to_value(&r.shift_table);
            checks.push(Check::new(
                "kostant",
                r.pass,
                summary,
                to_value(&r),
                || json!({"computed": to_value(&r.computed), "expected": to_value(&r.expected)}),
            ));
            checks.push(Check::new(
                "rho-u-shift",
                shift_ok,
                format!("{} constituents", r.shift_table.len()),
                shift.clone(),
                || shift,
            ));
        }
        Command::CasselmanOsborne => {
            let l = lambda_of(cfg)?;
            let x = ctx.irrep(&l, cfg.dim_cap)?;
            let r = cohomology::casselman_osborne_verify(&ctx, &x, &format!("F{l}"))?;
            let bad = to_value(&r.degrees.iter().filter(|d| !d.matrices_equal).collect::<Vec<_>>());
            checks.push(Check::new(
                "casselman-osborne",
                r.pass,
                format!("{} degrees", r.degrees.len()),
                to_value(&r),
                || bad,
            ));
        }
        Command::Hodge => {
            let h = ctx.ops.hodge_decompose(&ctx.dol, &OperatorElement::from_pbw(&ctx.omega))?;
            let ok = h.residual.is_zero() && h.z == ctx.p_omega;
            let z = ctx.uea.display(&h.z);
            let cert = json!({"z": z, "p_omega": ctx.uea.display(&ctx.p_omega), "steps": to_value(&h.steps)});
            let residual = format!("{:?}", h.residual.terms.len());
            checks.push(Check::new(
                "zeta-equals-projection",
                ok,
                format!("z = {z}"),
                cert,
                || json!({"residual_terms": residual}),
            ));
            let c = ctx.ops.hodge_certificate(&ctx.dol, cfg.degree)?;
            checks.push(Check::new(
                "hodge-certificate",
                c.holds,
                format!("N={}: ker {} = center {} + image {}", cfg.degree, c.kernel_dim, c.dim_center, c.rank_odd),
                to_value(&c),
                || to_value(&c),
            ));
            let k = ctx.ops.koszul_cohomology_truncated(cfg.degree);
            let ok = k.matches_expected && k.xi0_nonpositive;
            checks.push(Check::new("koszul", ok, format!("{} symbol degrees", k.rows.len()), to_value(&k), || {
                to_value(&k)
            }));
        }
        Command::Zeta => {
            let r = ctx.ops.zeta_sharp_verify(&ctx.dol, &ctx.omega)?;
            let ok = r.zeta_is_projection && r.twisted_equal;
            let summary = format!("ζ(Ω) = {}; literal ♯-equality {}", r.zeta_z, r.literal_equal);
            checks.push(Check::new("zeta-sharp", ok, summary, to_value(&r), || to_value(&r)));
            let l = cfg.lambda.clone().unwrap_or_else(|| Weight::zero(ctx.rs.rank()));
            let nu = cfg.nu.clone().unwrap_or_else(|| {
                let mut w = Weight::zero(ctx.rs.rank());
                w.0[0] = rational::qi(1);
                w
            });
            let (x, f) = (ctx.irrep(&l, cfg.dim_cap)?, ctx.irrep(&nu, cfg.dim_cap)?);
            let (lx, lf) = (ctx.uea.module_letters(&x), ctx.uea.module_letters(&f));
            let lz = ctx.ops.leibniz_verify(&ctx.dol, &lx, x.dim(), &lf, f.dim())?;
            checks.push(Check::new("coproduct-leibniz", lz.pass, format!("dim {}", lz.dim), to_value(&lz), || {
                to_value(&lz)
            }));
            let b = ctx.ops.coproduct_boundary_verify(&ctx.dol, &ctx.omega, &lx, x.dim(), &lf, f.dim())?;
            checks.push(Check::new("coproduct-boundary", b, format!("M = F{l}, F = F{nu}"), json!(b), || json!(b)));
        }
        Command::Translate => {
            let theta = match (&cfg.theta, &cfg.mu) {
                (Some(t), _) => t.clone(),
                (None, Some(m)) => m.sub(&ctx.pd.rho_h),
                _ => return Err(Error::Invalid("missing theta or mu".into())),
            };
            let run = TranslationRun {
                lie_type: cfg.lie_type.clone(),
                levi: cfg.levi.clone(),
                theta,
                nu: cfg.nu.clone().ok_or_else(|| Error::Invalid("missing nu".into()))?,
                lambda: lambda_of(cfg)?,
                cap: cfg.dim_cap,
            };
            let r = run.run()?;
            let status = match r.status.as_str() {
                "pass" => Status::Pass,
                "fail" => Status::Fail,
                _ => Status::NotApplicable,
            };
            let summary =
                format!("{}; condition (C) {}; primary dims {:?}", r.status, r.condition_c, r.iso.source_primary);
            let cert = to_value(&r);
            let counterexample = (status == Status::Fail).then(|| translation_summary(&r));
            checks.push(Check { name: "translation".into(), status, summary, certificate: cert, counterexample });
        }
        Command::Suite => unreachable!(),
    }
    Ok((ctx.dol.epsilon, checks))
}

/// Runs one configuration; the report is a pure function of the configuration.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let (epsilon, checks) = run_command(cfg)?;
    Ok(Report::new(cfg, epsilon, checks))
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    config: RunConfig,
    report: Report,
}

fn cache_file(dir: &Path, key: &RunConfig) -> PathBuf {
    let mut h = DefaultHasher::new();
    serde_json::to_string(key).expect("config serializes").hash(&mut h);
    dir.join(format!("{:016x}.json", h.finish()))
}

/// Like [`run`], reading and writing `cache_dir` (or `$DOLBEAULT_CACHE_DIR`).
/// Entries whose stored configuration differs are ignored.
pub fn run_cached(cfg: &RunConfig) -> Result<Report> {
    let dir = cfg.cache_dir.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let Some(dir) = dir else {
        return run(cfg);
    };
    cfg.validate()?;
    let key = cfg.cache_key();
    let path = cache_file(&dir, &key);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(entry) = serde_json::from_str::<CacheEntry>(&text) {
            if entry.config == key {
                return Ok(entry.report);
            }
        }
    }
    let report = run(cfg)?;
    std::fs::create_dir_all(&dir)?;
    std::fs::write(&path, serde_json::to_string(&CacheEntry { config: key, report: report.clone() })?)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_weights_a2() {
        let rs = RootSystem::build("A2").unwrap();
        let ws = small_dominant_weights(&rs, 8);
        let got: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(got, ["(0,0)", "(0,1)", "(0,2)", "(1,0)", "(1,1)", "(2,0)"]);
    }

    #[test]
    fn parabolic_list() {
        assert_eq!(parabolics(1), vec![Vec::<usize>::new()]);
        assert_eq!(parabolics(2), vec![vec![], vec![1], vec![0]]);
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::new(Command::Kostant);
        assert!(c.validate().is_err());
        c.lambda = Some(Weight::from_ints(&[1, 0]));
        assert!(c.validate().is_err());
        c.lie_type = "A2".into();
        assert!(c.validate().is_ok());
        c.levi = vec![0];
        assert!(c.validate().is_err());
        c.levi = vec![3];
        assert!(c.validate().is_err());
    }

    #[test]
    fn roots_a1() {
        let mut c = RunConfig::new(Command::Roots);
        c.lie_type = "A1".into();
        let r = run(&c).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].certificate["root_system"]["positive_roots"].as_array().map(Vec::len), Some(1));
    }

    #[test]
    fn hodge_sl2() {
        let mut c = RunConfig::new(Command::Hodge);
        c.degree = 2;
        let r = run(&c).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn config_json_round_trip() {
        let c = RunConfig::from_json(r#"{"command":"translate","lie_type":"A1","theta":[0],"nu":[1],"lambda":[1]}"#)
            .unwrap();
        assert_eq!(c.degree, 4);
        let r = run(&c).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let back: RunConfig = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
