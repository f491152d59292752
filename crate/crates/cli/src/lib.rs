//! The `kqsym` command line: argument types, JSON output types and command
//! dispatch. `main.rs` only maps the outcome to an exit status.

pub mod cache;
pub mod target;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use kqsym::expand::{gp_even_to_odd, Basis, Expander, Expansion, FormalGPPoly};
use kqsym::finvar::{specialize, FinitePoly, TruncatedXSeries};
use kqsym::kqfam::{gq_finite, Families, Family, FamilyId};
use kqsym::pairing::{pair, PairingResult};
use kqsym::verify::{run_suite, CheckResult, Suite, VerifyConfig};
use kqsym::PSeries;

use cache::Cache;
use target::Target;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl From<kqsym::Error> for CliError {
    fn from(e: kqsym::Error) -> Self {
        use kqsym::Error as E;
        match e {
            E::Usage(_) | E::Parse(_) | E::Mismatch { .. } | E::Precondition(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "kqsym", version, about = "Exact computations with K-theoretic Q-functions")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Truncation degree D for the infinite families.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub degree: u32,
    /// Number of variables N. `family` specializes only when this is given.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub vars: Option<u64>,
    /// Order M of generating series in z.
    #[arg(long = "z-order", global = true, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    pub z_order: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cache directory; defaults to `$XDG_CACHE_HOME/kqsym` or `~/.cache/kqsym`.
    #[arg(long = "cache-dir", global = true, env = "KQ_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long = "no-cache", global = true)]
    pub no_cache: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one family member as a power-sum series, or its specialization
    /// to N variables when `--vars` is given.
    Family {
        /// One of pG, pg, qG, qg, ovqG, ovqg, GQ, gp.
        #[arg(long)]
        tag: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Expand a target such as `GQ3` or `qG1*qG2` in a basis.
    Expand {
        #[arg(long)]
        target: String,
        /// One of pG_odd, qG_odd, ovqG_odd, qG_strict, ovqG_strict, pg_odd,
        /// qg_odd, ovqg_odd, qg_strict, ovqg_strict, GQ_odd.
        #[arg(long)]
        basis: String,
    },
    /// Pair a G-side target with a g-side target.
    Pair {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Run a verification suite.
    Verify {
        /// recurrences, cancellation, integrality, pairing, cauchy, gpz or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Write even-index gp functions as polynomials in odd ones.
    GpEven {
        /// Largest index; odd values are rounded down.
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyValue {
    Truncated(TruncatedXSeries),
    Polynomial(FinitePoly),
    Series(PSeries),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyOutput {
    pub family: Family,
    pub n: i64,
    pub degree: u32,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub flagged: bool,
    pub value: FamilyValue,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpandOutput {
    pub target: String,
    pub expansion: Expansion,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GpEvenEntry {
    pub n: u32,
    pub formula: FormalGPPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GpEvenOutput {
    pub table: Vec<GpEvenEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutput {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// Rendered output and whether the command succeeded.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

fn default_cache_dir() -> Option<PathBuf> {
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    env("XDG_CACHE_HOME")
        .map(|d| d.join("kqsym"))
        .or_else(|| env("HOME").map(|h| h.join(".cache").join("kqsym")))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable output");
    s.push('\n');
    s
}

fn render<T: Serialize>(format: Format, v: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => json(v),
        Format::Text => {
            let mut s = text();
            s.push('\n');
            s
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    let cache = match (&g.cache_dir, g.no_cache) {
        (_, true) => None,
        (Some(d), false) => Some(Cache::new(d)),
        (None, false) => default_cache_dir().map(Cache::new),
    };
    let request = match &cli.command {
        Command::Verify { .. } => None,
        other => Some(format!(
            "{other:?} degree={} vars={:?} z_order={} format={:?}",
            g.degree, g.vars, g.z_order, g.format
        )),
    };
    if let (Some(c), Some(r)) = (&cache, &request) {
        if let Some(output) = c.get(r) {
            return Ok(Outcome { output, success: true });
        }
    }
    let outcome = dispatch(cli)?;
    if let (Some(c), Some(r)) = (&cache, &request) {
        if outcome.success {
            if let Err(e) = c.put(r, &outcome.output) {
                eprintln!("warning: could not write cache entry in {}: {e}", c.dir().display());
            }
        }
    }
    Ok(outcome)
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    let output = match &cli.command {
        Command::Family { tag, n } => family(g, tag, *n)?,
        Command::Expand { target, basis } => expand(g, target, basis)?,
        Command::Pair { left, right } => pairing(g, left, right)?,
        Command::GpEven { max } => gp_even(g, *max)?,
        Command::Verify { suite } => return verify(g, suite),
    };
    Ok(Outcome { output, success: true })
}

fn family(g: &GlobalArgs, tag: &str, n: i64) -> Result<String, CliError> {
    let family: Family = tag.parse()?;
    let id = FamilyId::new(family, n)?;
    let families = Families::new(g.degree);
    let value = match g.vars {
        None => FamilyValue::Series(families.element(id)),
        Some(v) => {
            let v = v as usize;
            if family == Family::GQ && n >= 1 {
                FamilyValue::Polynomial(gq_finite(n as u32, v)?)
            } else {
                let s = specialize(&families.element(id), v);
                if family.is_truncated() {
                    FamilyValue::Truncated(s)
                } else {
                    FamilyValue::Polynomial(s.poly)
                }
            }
        }
    };
    let out = FamilyOutput {
        family,
        n,
        degree: g.degree,
        flagged: id.is_flagged(),
        value,
    };
    Ok(render(g.format, &out, || {
        let body = match &out.value {
            FamilyValue::Series(s) => s.to_string(),
            FamilyValue::Polynomial(p) => p.to_string(),
            FamilyValue::Truncated(t) => format!("{} + O(degree > {})", t.poly, t.degree),
        };
        let flag = if out.flagged { "  [outside the odd subalgebra]" } else { "" };
        format!("{id} = {body}{flag}")
    }))
}

fn expand(g: &GlobalArgs, target: &str, basis: &str) -> Result<String, CliError> {
    let parsed: Target = target.parse()?;
    let basis: Basis = basis.parse()?;
    let expander = Expander::new(g.degree);
    let element = parsed.evaluate(expander.families());
    let expansion = expander.expand(&element, basis)?;
    let out = ExpandOutput {
        target: parsed.to_string(),
        expansion,
    };
    Ok(render(g.format, &out, || format!("{} = {}", out.target, out.expansion)))
}

fn pairing(g: &GlobalArgs, left: &str, right: &str) -> Result<String, CliError> {
    let families = Families::new(g.degree);
    let f = left.parse::<Target>()?.evaluate(&families);
    let h = right.parse::<Target>()?.evaluate(&families);
    let r: PairingResult = pair(&f, &h)?;
    Ok(render(g.format, &r, || format!("<{left}, {right}> = {} (degree used {})", r.value, r.degree_used)))
}

fn gp_even(g: &GlobalArgs, max: usize) -> Result<String, CliError> {
    let table = gp_even_to_odd(max)?;
    let out = GpEvenOutput {
        table: table.into_iter().map(|(n, formula)| GpEvenEntry { n, formula }).collect(),
    };
    Ok(render(g.format, &out, || {
        let lines: Vec<String> = out.table.iter().map(|e| format!("gp{} = {}", e.n, e.formula)).collect();
        lines.join("\n")
    }))
}

fn verify(g: &GlobalArgs, suite: &str) -> Result<Outcome, CliError> {
    let suite: Suite = suite.parse()?;
    let config = VerifyConfig {
        degree: g.degree,
        num_vars: g.vars.unwrap_or(4) as usize,
        z_order: g.z_order as usize,
    };
    let checks = run_suite(suite, config)?;
    let passed = checks.iter().all(|c| c.passed);
    let out = VerifyOutput { suite, passed, checks };
    let output = render(g.format, &out, || {
        let mut lines: Vec<String> = out
            .checks
            .iter()
            .map(|c| {
                format!(
                    "{} {:<12} {} ({} ms): {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.suite.name(),
                    c.name,
                    c.elapsed.as_millis(),
                    c.detail
                )
            })
            .collect();
        let failed = out.checks.iter().filter(|c| !c.passed).count();
        lines.push(format!(
            "{} {suite}: {} checks, {failed} failed",
            if passed { "PASS" } else { "FAIL" },
            out.checks.len()
        ));
        lines.join("\n")
    });
    Ok(Outcome { output, success: passed })
}
