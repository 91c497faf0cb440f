//! The `levi` command line: a JSON job file supplies defaults, flags
//! override them, and every command writes one deterministic primary output.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::branching::{build_m, check_m_dual, default_lambda_box, leading_term, restrict, Brancher};
use crate::checks;
use crate::equivalence::{search_box, CertificateLog, Comparator, SearchOptions};
use crate::error::{Error, Result};
use crate::rootsys::{Family, LeviDatum, SystemDescriptor, Weight};
use crate::typea::{lr_coefficient, lr_table_csv, multi_lr, polarisation_branch, product_expansion, Partition};
use crate::weylgrp::{diagram_automorphisms, transversal_u};

/// Environment variable naming the partition-function cache directory.
pub const CACHE_ENV: &str = "LEVI_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "levi", version, about = "Branching to Levi subalgebras of classical Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Branching multiplicities m_μ^λ for one μ.
    Branch(BranchArgs),
    /// Whether two ḡ-dominant weights induce the same character.
    Compare(CompareArgs),
    /// Scan a box of ḡ-dominant weights for equal induced characters.
    Search(SearchArgs),
    /// Diagram automorphisms of the Levi lying in W.
    Autos(CommonArgs),
    /// The transversal U of minimal coset representatives.
    U(CommonArgs),
    /// The M-function of μ in the symmetrized monomial basis.
    Mfun(MfunArgs),
    /// Littlewood–Richardson coefficients and polarisation.
    Lr(LrArgs),
    /// Run the invariant suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// JSON job file; flags given on the command line take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Root system as FAMILY:RANK, e.g. C:6 or GL:4.
    #[arg(long)]
    pub system: Option<String>,
    /// 1-based indices of the simple roots spanning the Levi, e.g. 1,2,4,5,6.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub levi: Option<Vec<usize>>,
    /// Primary output file (stdout if absent).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Partition-function cache directory (also read from LEVI_CACHE_DIR).
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for the parallel sums and scans.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Refuse Weyl groups larger than this.
    #[arg(long)]
    pub group_guard: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct BranchArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Highest weight of g (repeatable).
    #[arg(long = "lambda", allow_hyphen_values = true)]
    pub lambdas: Vec<Weight>,
    /// Highest weight of the Levi.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<Weight>,
    /// Use every dominant λ ≤ μ + k·θ instead of explicit λ.
    #[arg(long = "box")]
    pub lambda_box: Option<i32>,
    /// Also evaluate the restriction oracle and report differences.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<Weight>,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<Weight>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Coordinate bound of the scanned box.
    #[arg(long)]
    pub bound: Option<i32>,
    /// Summary JSON file (stdout if absent).
    #[arg(long)]
    pub summary: Option<PathBuf>,
    /// Continue an interrupted scan from its progress file.
    #[arg(long)]
    pub resume: bool,
    /// Stop after this many groups.
    #[arg(long)]
    pub max_groups: Option<usize>,
    /// Groups evaluated in parallel between writes.
    #[arg(long)]
    pub batch: Option<usize>,
}

#[derive(Args, Debug)]
pub struct MfunArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<Weight>,
    /// Also compare against the product form.
    #[arg(long)]
    pub check_dual: bool,
}

#[derive(Args, Debug)]
pub struct LrArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Target partition λ.
    #[arg(long)]
    pub lambda: Option<Partition>,
    /// Factor partitions μ⁽ᵏ⁾ (repeatable, in order).
    #[arg(long = "factor")]
    pub factors: Vec<Partition>,
    /// Print the Schur expansion of the product of the factors as CSV.
    #[arg(long)]
    pub product: bool,
    /// Littlewood branching for gl_n in --system (B, C or D) at this gl_n weight.
    #[arg(long, allow_hyphen_values = true)]
    pub polarise: Option<Weight>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Seed for the randomized checks.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Larger boxes and sample counts.
    #[arg(long)]
    pub full: bool,
    /// Only report checks whose name contains this text (case-insensitive).
    #[arg(long)]
    pub only: Option<String>,
}

/// Everything a job can set. Unknown fields are rejected.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub system: Option<String>,
    pub levi: Option<Vec<usize>>,
    pub lambdas: Option<Vec<Weight>>,
    pub mu: Option<Weight>,
    pub nu: Option<Weight>,
    pub lambda_box: Option<i32>,
    pub oracle: Option<bool>,
    pub format: Option<Format>,
    pub bound: Option<i32>,
    pub summary: Option<PathBuf>,
    pub resume: Option<bool>,
    pub max_groups: Option<usize>,
    pub batch: Option<usize>,
    pub check_dual: Option<bool>,
    pub partition: Option<Partition>,
    pub factors: Option<Vec<Partition>>,
    pub product: Option<bool>,
    pub polarise: Option<Weight>,
    pub seed: Option<u64>,
    pub full: Option<bool>,
    pub only: Option<String>,
    pub output: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub threads: Option<usize>,
    pub group_guard: Option<u64>,
}

fn set<T>(slot: &mut Option<T>, flag: Option<T>) {
    if flag.is_some() {
        *slot = flag;
    }
}

fn set_flag(slot: &mut Option<bool>, flag: bool) {
    if flag {
        *slot = Some(true);
    }
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    fn from_common(c: &CommonArgs) -> Result<Self> {
        let mut cfg = match &c.config {
            Some(p) => JobConfig::load(p)?,
            None => JobConfig::default(),
        };
        set(&mut cfg.system, c.system.clone());
        set(&mut cfg.levi, c.levi.clone());
        set(&mut cfg.output, c.output.clone());
        set(&mut cfg.cache_dir, c.cache_dir.clone());
        set(&mut cfg.threads, c.threads);
        set(&mut cfg.group_guard, c.group_guard);
        if cfg.cache_dir.is_none() {
            cfg.cache_dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
        }
        Ok(cfg)
    }

    /// The job described by a parsed command line.
    pub fn from_command(cmd: &Command) -> Result<Self> {
        Ok(match cmd {
            Command::Branch(a) => {
                let mut c = Self::from_common(&a.common)?;
                if !a.lambdas.is_empty() {
                    c.lambdas = Some(a.lambdas.clone());
                }
                set(&mut c.mu, a.mu.clone());
                set(&mut c.lambda_box, a.lambda_box);
                set_flag(&mut c.oracle, a.oracle);
                set(&mut c.format, a.format);
                c
            }
            Command::Compare(a) => {
                let mut c = Self::from_common(&a.common)?;
                set(&mut c.mu, a.mu.clone());
                set(&mut c.nu, a.nu.clone());
                c
            }
            Command::Search(a) => {
                let mut c = Self::from_common(&a.common)?;
                set(&mut c.bound, a.bound);
                set(&mut c.summary, a.summary.clone());
                set_flag(&mut c.resume, a.resume);
                set(&mut c.max_groups, a.max_groups);
                set(&mut c.batch, a.batch);
                c
            }
            Command::Autos(a) | Command::U(a) => Self::from_common(a)?,
            Command::Mfun(a) => {
                let mut c = Self::from_common(&a.common)?;
                set(&mut c.mu, a.mu.clone());
                set_flag(&mut c.check_dual, a.check_dual);
                c
            }
            Command::Lr(a) => {
                let mut c = Self::from_common(&a.common)?;
                set(&mut c.partition, a.lambda.clone());
                if !a.factors.is_empty() {
                    c.factors = Some(a.factors.clone());
                }
                set_flag(&mut c.product, a.product);
                set(&mut c.polarise, a.polarise.clone());
                c
            }
            Command::Verify(a) => {
                let mut c = Self::from_common(&a.common)?;
                set(&mut c.seed, a.seed);
                set_flag(&mut c.full, a.full);
                set(&mut c.only, a.only.clone());
                c
            }
        })
    }

    pub fn descriptor(&self) -> Result<SystemDescriptor> {
        let s = self
            .system
            .as_deref()
            .ok_or_else(|| Error::Config("a root system is required (--system FAMILY:RANK)".into()))?;
        let mut d: SystemDescriptor = s.parse()?;
        d.levi = self.levi.clone().unwrap_or_default();
        Ok(d)
    }

    pub fn build_levi(&self) -> Result<LeviDatum> {
        let d = self.descriptor()?;
        match self.group_guard {
            Some(g) => d.build_with_guard(g),
            None => d.build(),
        }
    }

    fn weight(&self, name: &str, w: &Option<Weight>, levi: &LeviDatum) -> Result<Weight> {
        let w = w.clone().ok_or_else(|| Error::Config(format!("--{name} is required")))?;
        levi.parent().check_weight(&w)?;
        Ok(w)
    }
}

fn emit(cfg: &JobConfig, text: &str) -> Result<()> {
    match &cfg.output {
        Some(p) => fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
        }
    }
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn with_cache<T>(cfg: &JobConfig, brancher: &Brancher, f: impl FnOnce() -> Result<T>) -> Result<T> {
    if let Some(dir) = &cfg.cache_dir {
        brancher.table().load(dir)?;
    }
    let out = f()?;
    if let Some(dir) = &cfg.cache_dir {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        brancher.table().save(dir)?;
    }
    Ok(out)
}

pub fn cmd_branch(cfg: &JobConfig) -> Result<()> {
    let levi = cfg.build_levi()?;
    let mu = cfg.weight("mu", &cfg.mu, &levi)?;
    let lambdas = match (&cfg.lambdas, cfg.lambda_box) {
        (Some(ls), _) if !ls.is_empty() => ls.clone(),
        (_, Some(k)) => default_lambda_box(&levi, &mu, k),
        _ => return Err(Error::Config("give --lambda (repeatable) or --box K".into())),
    };
    for l in &lambdas {
        levi.parent().check_weight(l)?;
    }
    let brancher = Brancher::new(&levi);
    let row = with_cache(cfg, &brancher, || brancher.row(&mu, &lambdas))?;
    if cfg.oracle.unwrap_or(false) {
        let mut diffs = Vec::new();
        for (lam, &m) in &row.entries {
            let o = restrict(&levi, lam)?.get(&mu);
            if o != m {
                diffs.push(format!("λ={lam}: alternating sum {m}, restriction {o}"));
            }
        }
        if !diffs.is_empty() {
            for d in &diffs {
                eprintln!("{d}");
            }
            return Err(Error::Invariant(format!("{} differences from the restriction oracle", diffs.len())));
        }
        eprintln!("oracle: {} rows agree", row.entries.len());
    }
    let text = match cfg.format {
        Some(Format::Csv) => row.to_csv(),
        Some(Format::Json) => pretty(&row)?,
        None if lambdas.len() == 1 => format!("{}\n", row.entries[&lambdas[0]]),
        None => row.to_csv(),
    };
    emit(cfg, &text)
}

pub fn cmd_compare(cfg: &JobConfig) -> Result<()> {
    let levi = cfg.build_levi()?;
    let mu = cfg.weight("mu", &cfg.mu, &levi)?;
    let nu = cfg.weight("nu", &cfg.nu, &levi)?;
    let verdict = Comparator::new(&levi).classify(&mu, &nu)?;
    emit(cfg, &pretty(&verdict)?)
}

pub fn cmd_search(cfg: &JobConfig) -> Result<()> {
    let levi = cfg.build_levi()?;
    let bound = cfg.bound.ok_or_else(|| Error::Config("--bound is required".into()))?;
    if bound < 0 {
        return Err(Error::Config(format!("bound {bound} must be nonnegative")));
    }
    let path = cfg
        .output
        .clone()
        .ok_or_else(|| Error::Config("search needs --output for the certificate log".into()))?;
    let mut opts = SearchOptions::new(bound);
    opts.max_groups = cfg.max_groups;
    if let Some(b) = cfg.batch {
        opts.batch = b;
    }
    let mut log = CertificateLog::new(path, cfg.resume.unwrap_or(false));
    let summary = search_box(&levi, &opts, &mut log)?;
    let text = pretty(&summary)?;
    match &cfg.summary {
        Some(p) => fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn cmd_autos(cfg: &JobConfig) -> Result<()> {
    let levi = cfg.build_levi()?;
    let autos = diagram_automorphisms(&levi)?;
    emit(
        cfg,
        &pretty(&json!({
            "system": levi.parent().label(),
            "levi": levi.describe(),
            "count": autos.len(),
            "elements": autos,
        }))?,
    )
}

pub fn cmd_u(cfg: &JobConfig) -> Result<()> {
    let levi = cfg.build_levi()?;
    let u = transversal_u(&levi)?;
    emit(
        cfg,
        &pretty(&json!({
            "system": levi.parent().label(),
            "levi": levi.describe(),
            "count": u.len(),
            "elements": u.elements,
        }))?,
    )
}

pub fn cmd_mfun(cfg: &JobConfig) -> Result<()> {
    let levi = cfg.build_levi()?;
    let mu = cfg.weight("mu", &cfg.mu, &levi)?;
    let m = build_m(&levi, &mu)?;
    if cfg.check_dual.unwrap_or(false) {
        check_m_dual(&levi, &mu)?;
    }
    let lead = leading_term(&levi, &mu)?;
    let coeffs: Vec<_> = m
        .m_coefficients()
        .iter()
        .map(|(w, c)| json!({"weight": w, "coeff": c}))
        .collect();
    emit(
        cfg,
        &pretty(&json!({
            "system": levi.parent().label(),
            "levi": levi.describe(),
            "mu": mu,
            "m_basis": coeffs,
            "leading": lead,
        }))?,
    )
}

pub fn cmd_lr(cfg: &JobConfig) -> Result<()> {
    if let Some(mu) = &cfg.polarise {
        let d = cfg.descriptor()?;
        let lam = cfg
            .partition
            .clone()
            .ok_or_else(|| Error::Config("--lambda is required with --polarise".into()))?;
        if d.family == Family::GL {
            return Err(Error::Config("--polarise needs a B, C or D system".into()));
        }
        return emit(cfg, &format!("{}\n", polarisation_branch(d.family, d.rank, mu, &lam)?));
    }
    let factors = cfg.factors.clone().unwrap_or_default();
    if cfg.product.unwrap_or(false) {
        let text = if factors.len() == 2 {
            lr_table_csv(&factors[0], &factors[1])
        } else {
            let mut s = String::from("lambda,coefficient\n");
            for (l, c) in product_expansion(&factors) {
                let parts: Vec<String> = l.parts().iter().map(u32::to_string).collect();
                s.push_str(&format!("\"{}\",{c}\n", parts.join(" ")));
            }
            s
        };
        return emit(cfg, &text);
    }
    let lam = cfg
        .partition
        .clone()
        .ok_or_else(|| Error::Config("--lambda is required".into()))?;
    let c = match factors.as_slice() {
        [a, b] => lr_coefficient(&lam, a, b),
        fs => multi_lr(&lam, fs),
    };
    emit(cfg, &format!("{c}\n"))
}

/// Runs the suite; returns whether every selected check passed.
pub fn cmd_verify(cfg: &JobConfig) -> Result<bool> {
    let seed = cfg.seed.unwrap_or(1);
    let reports = checks::suite(seed, cfg.full.unwrap_or(false))?;
    let selected: Vec<_> = reports
        .into_iter()
        .filter(|r| cfg.only.as_deref().is_none_or(|o| r.name.to_lowercase().contains(&o.to_lowercase())))
        .collect();
    for r in &selected {
        eprintln!("{}", r.line());
    }
    let ok = selected.iter().all(|r| r.passed());
    emit(cfg, &pretty(&json!({"seed": seed, "passed": ok, "checks": selected}))?)?;
    Ok(ok)
}

/// Dispatches a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = (|| -> Result<i32> {
        let cfg = JobConfig::from_command(&cli.command)?;
        if let Some(t) = cfg.threads {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        }
        match &cli.command {
            Command::Branch(_) => cmd_branch(&cfg)?,
            Command::Compare(_) => cmd_compare(&cfg)?,
            Command::Search(_) => cmd_search(&cfg)?,
            Command::Autos(_) => cmd_autos(&cfg)?,
            Command::U(_) => cmd_u(&cfg)?,
            Command::Mfun(_) => cmd_mfun(&cfg)?,
            Command::Lr(_) => cmd_lr(&cfg)?,
            Command::Verify(_) => {
                if !cmd_verify(&cfg)? {
                    return Ok(1);
                }
            }
        }
        Ok(0)
    })();
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> JobConfig {
        let cli = Cli::try_parse_from(std::iter::once("levi").chain(args.iter().copied())).unwrap();
        JobConfig::from_command(&cli.command).unwrap()
    }

    #[test]
    fn flags_fill_the_job() {
        let c = parse(&["branch", "--system", "C:6", "--levi", "1,2,4,5,6", "--lambda", "(1,0,0,0,0,0)", "--mu", "1,0,0,0,0,0"]);
        assert_eq!(c.system.as_deref(), Some("C:6"));
        assert_eq!(c.levi, Some(vec![1, 2, 4, 5, 6]));
        assert_eq!(c.lambdas.as_ref().unwrap().len(), 1);
        let d = c.descriptor().unwrap();
        assert_eq!((d.family, d.rank), (Family::C, 6));
        let c = parse(&["compare", "--system", "GL:3", "--mu", "-1,-2,-3", "--nu", "0,0,0"]);
        assert_eq!(c.mu.unwrap(), Weight::from_ints(&[-1, -2, -3]));
    }

    #[test]
    fn config_file_then_flags() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("job.json");
        fs::write(&p, r#"{"system": "B:3", "levi": [1, 3], "bound": 2, "resume": true}"#).unwrap();
        let c = parse(&["search", "--config", p.to_str().unwrap(), "--bound", "3"]);
        assert_eq!(c.bound, Some(3));
        assert_eq!(c.levi, Some(vec![1, 3]));
        assert_eq!(c.resume, Some(true));

        fs::write(&p, r#"{"system": "B:3", "colour": 1}"#).unwrap();
        let e = JobConfig::load(&p).unwrap_err();
        assert!(matches!(e, Error::Config(_)) && e.exit_code() == 2, "{e}");
    }

    #[test]
    fn validation_errors_map_to_exit_codes() {
        let c = parse(&["branch", "--system", "C:2", "--mu", "1,0"]);
        assert_eq!(cmd_branch(&c).unwrap_err().exit_code(), 2);
        let c = parse(&["autos", "--system", "C:8", "--group-guard", "1000"]);
        assert_eq!(cmd_autos(&c).unwrap_err().exit_code(), 3);
        let c = parse(&["compare", "--system", "C:2", "--levi", "1", "--mu", "1,0,0", "--nu", "0,1"]);
        assert_eq!(cmd_compare(&c).unwrap_err().exit_code(), 2);
        let c = parse(&["branch", "--system", "GL:2", "--mu", "0,0", "--lambda", "0,0", "-o", "/nonexistent/dir/x"]);
        assert_eq!(cmd_branch(&c).unwrap_err().exit_code(), 4);
    }

    #[test]
    fn commands_write_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("o.txt");
        let o = out.to_str().unwrap();
        let c = parse(&["branch", "--system", "GL:2", "--mu", "0,0", "--lambda", "0,0", "--oracle", "-o", o]);
        cmd_branch(&c).unwrap();
        assert_eq!(fs::read_to_string(&out).unwrap(), "1\n");

        let c = parse(&["u", "--system", "GL:3", "--levi", "1", "-o", o]);
        cmd_u(&c).unwrap();
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["count"], 3);

        let c = parse(&["lr", "--lambda", "3,2,1", "--factor", "2,1", "--factor", "2,1", "-o", o]);
        cmd_lr(&c).unwrap();
        assert_eq!(fs::read_to_string(&out).unwrap(), "2\n");

        let c = parse(&["lr", "--system", "B:2", "--polarise", "1,0", "--lambda", "1", "-o", o]);
        cmd_lr(&c).unwrap();
        assert_eq!(fs::read_to_string(&out).unwrap(), "1\n");

        let c = parse(&["mfun", "--system", "GL:2", "--mu", "0,0", "-o", o]);
        cmd_mfun(&c).unwrap();
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["m_basis"], json!([{"weight": [0, 0], "coeff": 1}]));
    }
}
