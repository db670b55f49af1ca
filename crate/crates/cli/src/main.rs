use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dolbeault::driver::{self, Command, Format, RunConfig};
use dolbeault::rootsys::{parse_levi, Weight};

/// Exact u-cohomology, Dolbeault operator and translation checks.
#[derive(Parser)]
#[command(name = "dolbeault", version)]
struct Cli {
    /// JSON run configuration; flags given on the command line override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root system and parabolic data.
    Roots(Flags),
    /// Irreducible module F^λ with its character.
    Irrep(Flags),
    /// H(u, F^λ) against w(λ+ρ)−ρ, w ∈ W¹, and the ρ(u)-shift.
    Kostant(Flags),
    /// Ω versus p(Ω) on H(u, F^λ).
    CasselmanOsborne(Flags),
    /// Hodge decomposition of Ω ⊗ 1 and the truncated certificate.
    Hodge(Flags),
    /// ζ and ♯, coproduct Leibniz identities.
    Zeta(Flags),
    /// Translation pipeline for (θ or μ, ν, λ).
    Translate(Flags),
    /// The full acceptance battery.
    Suite(Flags),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Args, Default)]
struct Flags {
    /// Lie type such as A1, A2, B2.
    #[arg(long = "type")]
    lie_type: Option<String>,
    /// Comma-separated 1-based simple roots of the Levi factor ("" for Borel).
    #[arg(long)]
    levi: Option<String>,
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    lambda: Option<Weight>,
    /// Highest weight of the Levi module E.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    theta: Option<Weight>,
    /// Parameter θ + ρ_h of E.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    mu: Option<Weight>,
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    nu: Option<Weight>,
    /// Truncation degree N.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long)]
    dim_cap: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    Weight::parse(s).map_err(|e| e.to_string())
}

impl Flags {
    fn apply(self, cfg: &mut RunConfig) -> Result<(), String> {
        if let Some(t) = self.lie_type {
            cfg.lie_type = t;
        }
        if let Some(l) = self.levi {
            cfg.levi = parse_levi(&l).map_err(|e| e.to_string())?.into_iter().map(|i| i + 1).collect();
        }
        cfg.lambda = self.lambda.or(cfg.lambda.take());
        cfg.theta = self.theta.or(cfg.theta.take());
        cfg.mu = self.mu.or(cfg.mu.take());
        cfg.nu = self.nu.or(cfg.nu.take());
        if let Some(d) = self.degree {
            cfg.degree = d;
        }
        if let Some(d) = self.dim_cap {
            cfg.dim_cap = d;
        }
        if let Some(f) = self.format {
            cfg.format = match f {
                OutFormat::Json => Format::Json,
                OutFormat::Text => Format::Text,
            };
        }
        cfg.cache_dir = self.cache_dir.or(cfg.cache_dir.take());
        Ok(())
    }
}

fn split(cmd: Cmd) -> (Command, Flags) {
    match cmd {
        Cmd::Roots(f) => (Command::Roots, f),
        Cmd::Irrep(f) => (Command::Irrep, f),
        Cmd::Kostant(f) => (Command::Kostant, f),
        Cmd::CasselmanOsborne(f) => (Command::CasselmanOsborne, f),
        Cmd::Hodge(f) => (Command::Hodge, f),
        Cmd::Zeta(f) => (Command::Zeta, f),
        Cmd::Translate(f) => (Command::Translate, f),
        Cmd::Suite(f) => (Command::Suite, f),
    }
}

fn config(cli: Cli) -> Result<RunConfig, String> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            RunConfig::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => match &cli.command {
            Some(_) => RunConfig::new(Command::Roots),
            None => return Err("a subcommand or --config is required".into()),
        },
    };
    if let Some(cmd) = cli.command {
        let (command, flags) = split(cmd);
        cfg.command = command;
        flags.apply(&mut cfg)?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cfg = match config(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match driver::run_cached(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match cfg.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
