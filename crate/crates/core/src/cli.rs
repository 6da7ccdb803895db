//! The `csf` command-line driver.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports a
//! failure, 2 on input errors.

use std::env;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::affine_weyl::{evaluate_formula, QConvention};
use crate::chromatic::{chromatic_qsym, euler_char, graded_multiplicities, verify_laws, SuiteSelection, VerifyReport};
use crate::combinatorics::{enumerate_hessenberg, HessenbergFunction, RootIdeal};
use crate::error::{Error, Result};
use crate::symfunc::{install_kostka_table, kostka_table, Basis, KostkaTable};

pub const CACHE_ENV: &str = "CSF_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".csf-cache";
pub const BENCH_CSV_HEADER: &str = "n,h,formula_terms,oracle_terms,formula_ns,oracle_ns";

#[derive(Debug, Parser)]
#[command(name = "csf", version, about = "Chromatic quasisymmetric functions of unit interval graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    /// Cache directory for Kostka tables and reports (CSF_CACHE_DIR wins).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for per-function tasks.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: u16,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic quasisymmetric function and graded multiplicities of one graph.
    Compute {
        #[command(flatten)]
        target: HessArgs,
        #[arg(long, value_enum, default_value_t = BasisArg::S)]
        basis: BasisArg,
    },
    /// Affine Weyl operator product and its projection.
    Formula {
        #[command(flatten)]
        target: HessArgs,
    },
    /// Check every identity over all Hessenberg functions of one size.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Where to write the JSON report (default: <cache>/verify-n<N>.json).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List all Hessenberg functions of one size.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Time the operator product against the coloring oracle.
    Bench {
        #[arg(long)]
        n: usize,
        /// Also write the CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct HessArgs {
    #[command(flatten)]
    pub source: HessSource,
    /// Size for --ideal when it cannot be inferred.
    #[arg(long, requires = "ideal")]
    pub size: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct HessSource {
    /// Hessenberg function, e.g. 2,3,3.
    #[arg(long)]
    pub hess: Option<String>,
    /// Dyck-path area sequence, e.g. 1,1,0.
    #[arg(long)]
    pub dyck: Option<String>,
    /// Root ideal, e.g. "{(1,3)}".
    #[arg(long)]
    pub ideal: Option<String>,
}

impl HessArgs {
    pub fn resolve(&self) -> Result<HessenbergFunction> {
        let src = &self.source;
        if let Some(h) = &src.hess {
            HessenbergFunction::parse_values(h)
        } else if let Some(a) = &src.dyck {
            HessenbergFunction::parse_area(a)
        } else if let Some(i) = &src.ideal {
            Ok(RootIdeal::parse(i, self.size)?.to_hessenberg())
        } else {
            Err(Error::Parse("one of --hess, --dyck, --ideal is required".into()))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    M,
    S,
    E,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::S => Basis::S,
            BasisArg::E => Basis::E,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Task {
    Compute { h: HessenbergFunction, basis: Basis },
    Formula { h: HessenbergFunction },
    Verify { n: usize, suites: SuiteSelection, report: Option<PathBuf> },
    Enumerate { n: usize },
    Bench { n: usize, csv: Option<PathBuf> },
}

/// A fully validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub task: Task,
    pub output: OutputFormat,
    pub cache_dir: PathBuf,
    pub workers: usize,
}

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::Parse("--n must be at least 1".into()))
    } else {
        Ok(n)
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let cache_dir = env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .or(cli.cache_dir)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        let task = match cli.command {
            Command::Compute { target, basis } => Task::Compute {
                h: target.resolve()?,
                basis: basis.into(),
            },
            Command::Formula { target } => Task::Formula { h: target.resolve()? },
            Command::Verify { n, suite, report } => Task::Verify {
                n: positive(n)?,
                suites: suite.parse()?,
                report,
            },
            Command::Enumerate { n } => Task::Enumerate { n: positive(n)? },
            Command::Bench { n, csv } => Task::Bench { n: positive(n)?, csv },
        };
        Ok(RunConfig {
            task,
            output: cli.output,
            cache_dir,
            workers: usize::from(cli.workers),
        })
    }

    fn max_degree(&self) -> usize {
        match &self.task {
            Task::Compute { h, .. } | Task::Formula { h } => h.n(),
            Task::Verify { n, .. } | Task::Enumerate { n } | Task::Bench { n, .. } => *n,
        }
    }
}

/// Load Kostka tables up to `max_degree` from `dir`, computing and storing
/// any that are missing. A corrupt file is recomputed and overwritten.
pub fn prepare_kostka_cache(dir: &Path, max_degree: usize) -> Result<()> {
    for d in 0..=max_degree {
        match KostkaTable::load(dir, d) {
            Ok(Some(t)) => install_kostka_table(t),
            Ok(None) | Err(_) => {
                let t = kostka_table(d);
                t.save(dir)?;
            }
        }
    }
    Ok(())
}

/// Execute a parsed configuration, writing primary output to `out`.
/// Returns the process exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    prepare_kostka_cache(&config.cache_dir, config.max_degree())?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let mut buf = Vec::new();
    let code = pool.install(|| match &config.task {
        Task::Compute { h, basis } => run_compute(h, *basis, config.output, &mut buf),
        Task::Formula { h } => run_formula(h, config.output, &mut buf),
        Task::Verify { n, suites, report } => {
            let path = report
                .clone()
                .unwrap_or_else(|| config.cache_dir.join(format!("verify-n{n}.json")));
            run_verify(*n, suites, &path, config.output, &mut buf)
        }
        Task::Enumerate { n } => run_enumerate(*n, config.output, &mut buf),
        Task::Bench { n, csv } => run_bench(*n, csv.as_deref(), &mut buf),
    });
    out.write_all(&buf)?;
    code
}

fn h_json(h: &HessenbergFunction) -> serde_json::Value {
    json!(h.values())
}

fn run_compute(h: &HessenbergFunction, basis: Basis, fmt: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let x = chromatic_qsym(h).convert(basis);
    let g = graded_multiplicities(h);
    match fmt {
        OutputFormat::Json => {
            let gdim: Vec<serde_json::Value> = g
                .entries
                .iter()
                .rev()
                .map(|(lam, c)| {
                    json!({
                        "partition": lam.parts(),
                        "coeff": c.terms().map(|(k, v)| json!([k, big_number(v)])).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "version": "compute-v1",
                "h": h_json(h),
                "value": x.to_json(),
                "gdim": { "shift": g.shift, "entries": gdim },
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutputFormat::Text | OutputFormat::Csv => {
            writeln!(out, "{x}")?;
            writeln!(out, "gdim (shift |Psi| = {}):", g.shift)?;
            for (lam, c) in g.entries.iter().rev() {
                writeln!(out, "  {lam}  {c}")?;
            }
        }
    }
    Ok(0)
}

fn big_number(v: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(v.to_string().parse().expect("integer literal"))
}

fn run_formula(h: &HessenbergFunction, fmt: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let eval = evaluate_formula(h);
    let projected = eval.projected_symfunc()?;
    let (q_neg, sym_neg) = eval.q_graded(QConvention::NegativeDelta);
    let (q_pos, sym_pos) = eval.q_graded(QConvention::PositiveDelta);
    match fmt {
        OutputFormat::Json => {
            let doc = json!({
                "version": "formula-v1",
                "h": h_json(h),
                "profile": eval.profile,
                "term_count": big_number(&eval.term_count),
                "decorated": eval.decorated.to_json(),
                "projected": projected.to_json(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutputFormat::Text | OutputFormat::Csv => {
            let profile: Vec<String> = eval.profile.iter().map(|v| v.to_string()).collect();
            writeln!(
                out,
                "h = {h}  profile = {}  terms = {}",
                profile.join(","),
                eval.term_count
            )?;
            writeln!(out, "decorated:")?;
            for line in eval.decorated.dump_lines() {
                writeln!(out, "{line}")?;
            }
            writeln!(out, "projected: {projected}")?;
            let tag = |sym: bool| if sym { "" } else { "  [not symmetric per q-degree]" };
            writeln!(out, "q = e^-delta: {}{}", q_neg.format_in("q"), tag(sym_neg))?;
            writeln!(out, "q = e^+delta: {}{}", q_pos.format_in("q"), tag(sym_pos))?;
        }
    }
    Ok(0)
}

fn run_verify(
    n: usize,
    suites: &SuiteSelection,
    report_path: &Path,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    let report = verify_laws(n, suites);
    if let Some(parent) = report_path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(report_path, report.to_json_pretty())?;
    match fmt {
        OutputFormat::Json => writeln!(out, "{}", report.to_json_pretty())?,
        OutputFormat::Csv => write!(out, "{}", VerifyReport::summary_csv(&[&report]))?,
        OutputFormat::Text => {
            writeln!(out, "n = {n}: {} Hessenberg functions", report.functions)?;
            for row in report.summary() {
                writeln!(
                    out,
                    "  {:<20} total {:>4}  pass {:>4}  fail {:>4}  finding {:>4}",
                    row.suite.name(),
                    row.total,
                    row.pass,
                    row.fail,
                    row.finding
                )?;
            }
            for e in report.findings() {
                writeln!(out, "FINDING [{}] h={} {}", e.suite, e.h, e.lhs)?;
            }
            for e in report.failures() {
                writeln!(out, "FAIL [{}] h={}", e.suite, e.h)?;
                writeln!(out, "  lhs: {}", e.lhs)?;
                if let Some(rhs) = &e.rhs {
                    writeln!(out, "  rhs: {rhs}")?;
                }
            }
            writeln!(out, "report: {}", report_path.display())?;
        }
    }
    Ok(if report.is_success() { 0 } else { 1 })
}

fn run_enumerate(n: usize, fmt: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let rows: Vec<(HessenbergFunction, usize, usize, u64)> = enumerate_hessenberg(n)
        .map(|h| {
            let psi = h.to_root_ideal().len();
            let edges = h.edge_count();
            let chi = euler_char(&h);
            (h, psi, edges, chi)
        })
        .collect();
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    match fmt {
        OutputFormat::Json => {
            let functions: Vec<serde_json::Value> = rows
                .iter()
                .map(|(h, psi, edges, chi)| {
                    json!({
                        "h": h.values(),
                        "area": h.area_sequence(),
                        "psi": psi,
                        "edges": edges,
                        "euler_char": chi,
                    })
                })
                .collect();
            let doc = json!({ "version": "enumerate-v1", "n": n, "functions": functions });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutputFormat::Csv => {
            writeln!(out, "h,area,psi,edges,euler_char")?;
            for (h, psi, edges, chi) in &rows {
                writeln!(
                    out,
                    "\"{}\",\"{}\",{psi},{edges},{chi}",
                    join(h.values()),
                    join(&h.area_sequence())
                )?;
            }
        }
        OutputFormat::Text => {
            writeln!(out, "{:<20} {:<20} {:>5} {:>5} {:>10}", "h", "area", "|Psi|", "|E|", "euler_char")?;
            for (h, psi, edges, chi) in &rows {
                writeln!(
                    out,
                    "{:<20} {:<20} {psi:>5} {edges:>5} {chi:>10}",
                    join(h.values()),
                    join(&h.area_sequence())
                )?;
            }
            writeln!(out, "{} functions", rows.len())?;
        }
    }
    Ok(0)
}

/// Timings are taken one function at a time so workers do not skew them.
fn run_bench(n: usize, csv_path: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let oracle_terms = BigInt::from(n).pow(n as u32);
    let mut csv = String::from(BENCH_CSV_HEADER);
    csv.push('\n');
    for h in enumerate_hessenberg(n) {
        let start = Instant::now();
        let eval = evaluate_formula(&h);
        let formula_ns = start.elapsed().as_nanos();
        let start = Instant::now();
        let x = crate::chromatic::chromatic_qsym_m(&h);
        let oracle_ns = start.elapsed().as_nanos();
        std::hint::black_box((&eval, &x));
        let label = h.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        csv.push_str(&format!(
            "{n},\"{label}\",{},{oracle_terms},{formula_ns},{oracle_ns}\n",
            eval.term_count
        ));
    }
    if let Some(path) = csv_path {
        fs::write(path, &csv)?;
    }
    write!(out, "{csv}")?;
    Ok(0)
}

/// Parse argv and run; maps errors to exit code 2.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match run(&config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let dir = tempfile::tempdir().unwrap();
        let mut full = vec!["csf", "--cache-dir", dir.path().to_str().unwrap()];
        full.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_text() {
        let (code, out, _) = run_args(&["compute", "--hess", "2,3,3", "--basis", "s"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("t*s[2,1] + (1+2t+t^2)*s[1,1,1]"));
        assert!(out.contains("[2,1]  t^2"));
        assert!(out.contains("[1,1,1]  t+2t^2+t^3"));
    }

    #[test]
    fn compute_alternative_inputs() {
        let (_, a, _) = run_args(&["compute", "--dyck", "1,1,0"]);
        let (_, b, _) = run_args(&["compute", "--ideal", "{(1,3)}"]);
        let (_, c, _) = run_args(&["compute", "--hess", "2,3,3"]);
        assert_eq!(a, c);
        assert_eq!(b, c);
        let (code, out, _) = run_args(&["compute", "--ideal", "{}", "--size", "3", "--basis", "e"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("(1+2t+2t^2+t^3)*e[3]"));
    }

    #[test]
    fn input_errors_exit_2() {
        let (code, _, err) = run_args(&["compute", "--hess", "3,2,3"]);
        assert_eq!(code, 2);
        assert!(err.contains("NotWeaklyIncreasing"), "{err}");
        assert_eq!(run_args(&["compute"]).0, 2);
        assert_eq!(run_args(&["compute", "--hess", "2,3,3", "--dyck", "1,1,0"]).0, 2);
        assert_eq!(run_args(&["verify", "--n", "0"]).0, 2);
        assert_eq!(run_args(&["verify", "--n", "3", "--suite", "nope"]).0, 2);
        assert_eq!(run_args(&["enumerate", "--n", "3", "--workers", "0"]).0, 2);
    }

    #[test]
    fn enumerate_lists_catalan() {
        let (code, out, _) = run_args(&["enumerate", "--n", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("14 functions"));
        let (_, json_out, _) = run_args(&["enumerate", "--n", "4", "--output", "json"]);
        let doc: serde_json::Value = serde_json::from_str(&json_out).unwrap();
        assert_eq!(doc["version"], "enumerate-v1");
        assert_eq!(doc["functions"].as_array().unwrap().len(), 14);
    }

    #[test]
    fn formula_text() {
        let (code, out, _) = run_args(&["formula", "--hess", "2,3,3"]);
        assert_eq!(code, 0);
        assert!(out.contains("projected: m[2,1] + 6*m[1,1,1]"));
        assert!(out.contains("1  delta=-1 lambda0=1 eps=2,1,0"));
        assert!(out.contains("q = e^-delta: q*m[2,1] + 6*m[1,1,1]"));
        assert!(out.contains("q = e^+delta: q^-1*m[2,1] + 6*m[1,1,1]"));
    }
}
