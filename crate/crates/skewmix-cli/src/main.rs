//! Command-line front end: builds A(n, θ) and its oriented normal Cayley
//! graph, runs the uniform-mixing checks, and exports the results.
//!
//! Exit codes partition outcomes: 0 success, 1 non-uniform, 2 config error,
//! 3 internal consistency failure, 4 method inapplicable at this size or
//! time.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use skewmix::chartable::CharError;
use skewmix::walk::{
    cartesian_product, evolve_dense, extract_hadamard, hadamard_matches_class_sums, skew_matrix,
    verify_um_dense, verify_um_exact, verify_um_spectral, MixingReport, OrientedCayley, Tau,
    TauDesc, WalkError,
};
use skewmix::{CharacterTable, ConjClass, FieldCtx, Policy, SuzukiGroup};
use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "skewmix",
    version,
    about = "Oriented Cayley graphs of Suzuki 2-groups: construction, uniform-mixing verification, Hadamard export"
)]
struct Cli {
    /// Field degree n; must be odd.
    #[arg(long, global = true)]
    n: Option<u32>,

    /// Frobenius exponent e with gcd(e, n) = 1; the twist is x -> x^(2^e).
    /// Defaults to 1 (0 when n = 1).
    #[arg(long, global = true)]
    frob_exp: Option<u32>,

    /// Irreducible polynomial as a hex bitmask, e.g. 0xB for x^3 + x + 1.
    /// Defaults to the least irreducible of degree n.
    #[arg(long, global = true)]
    poly: Option<String>,

    /// Connection-set choice per inverse pair of classes.
    #[arg(long, global = true, value_enum, default_value_t = PolicyArg::Lex)]
    policy: PolicyArg,

    /// RNG seed; required with --policy seeded.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Verification route(s) for `verify`.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::All)]
    method: MethodArg,

    /// Walk time: pi, pi/2^k, pi/N, k*pi/2^s, or a decimal.
    /// Defaults to the mixing time pi/2^(n+1).
    #[arg(long, global = true)]
    tau: Option<String>,

    /// Output directory for exported files.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,

    /// Export format where a tabular form exists.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Conjugacy classes of A(n, θ) with sizes and inverse pairing.
    Classes,
    /// Irreducible character table, orthogonality-checked.
    Chartable,
    /// Exact walk spectrum from class sums.
    Spectrum,
    /// Uniform-mixing verification by the requested route(s).
    Verify,
    /// Extract the real Hadamard matrix sqrt(|G|)·U(τ).
    Hadamard,
    /// Flatness of a Cartesian product of oriented 4-cycles.
    ProductVerify {
        /// Number of 4-cycle factors.
        #[arg(long, default_value_t = 2)]
        factors: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Lex,
    Seeded,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    Spectral,
    Dense,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

/// Failures ordered by exit code; clap's own parse errors already exit 2.
enum Failure {
    NonUniform(String),
    Config(String),
    Consistency(String),
    Inapplicable(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::NonUniform(_) => 1,
            Failure::Config(_) => 2,
            Failure::Consistency(_) => 3,
            Failure::Inapplicable(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NonUniform(m)
            | Failure::Config(m)
            | Failure::Consistency(m)
            | Failure::Inapplicable(m) => write!(f, "{m}"),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Config(format!("io error: {e}"))
    }
}

struct RunConfig {
    n: Option<u32>,
    frob_exp: Option<u32>,
    poly: Option<u64>,
    policy: Policy,
    method: MethodArg,
    tau: Option<Tau>,
    out: PathBuf,
    format: FormatArg,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<RunConfig, Failure> {
        let poly = cli
            .poly
            .as_deref()
            .map(|s| {
                s.strip_prefix("0x")
                    .or_else(|| s.strip_prefix("0X"))
                    .and_then(|hex| u64::from_str_radix(hex, 16).ok())
                    .ok_or_else(|| Failure::Config(format!("invalid --poly '{s}': expected a hex bitmask like 0xB")))
            })
            .transpose()?;
        let policy = match (cli.policy, cli.seed) {
            (PolicyArg::Lex, None) => Policy::Lex,
            (PolicyArg::Lex, Some(_)) => {
                return Err(Failure::Config("--seed requires --policy seeded".into()))
            }
            (PolicyArg::Seeded, Some(s)) => Policy::Seeded(s),
            (PolicyArg::Seeded, None) => {
                return Err(Failure::Config("--policy seeded requires --seed".into()))
            }
        };
        let tau = cli
            .tau
            .as_deref()
            .map(|s| parse_tau(s).ok_or_else(|| Failure::Config(format!("invalid --tau '{s}'"))))
            .transpose()?;
        Ok(RunConfig {
            n: cli.n,
            frob_exp: cli.frob_exp,
            poly,
            policy,
            method: cli.method,
            tau,
            out: cli.out.clone(),
            format: cli.format,
        })
    }

    fn n(&self) -> Result<u32, Failure> {
        self.n.ok_or_else(|| Failure::Config("missing --n".into()))
    }

    fn group(&self) -> Result<SuzukiGroup, Failure> {
        let n = self.n()?;
        let e = self.frob_exp.unwrap_or(if n == 1 { 0 } else { 1 });
        let field = FieldCtx::new(n, e, self.poly).map_err(|err| Failure::Config(err.to_string()))?;
        Ok(SuzukiGroup::new(field))
    }

    /// τ as given, or the mixing time of A(n, θ).
    fn tau_or_mixing_time(&self, n: u32) -> Tau {
        self.tau.unwrap_or_else(|| Tau::mixing_time(n))
    }
}

/// Times of the form num·π/2^pow2 keep their exact shape; everything else
/// becomes a decimal and routes to the numeric methods.
fn parse_tau(s: &str) -> Option<Tau> {
    let t = s.trim();
    let (num, rest) = match t.split_once('*') {
        Some((m, r)) => (m.trim().parse::<i64>().ok()?, r.trim()),
        None => (1, t),
    };
    if rest == "pi" {
        return Some(Tau::dyadic(num, 0));
    }
    if let Some(den) = rest.strip_prefix("pi/") {
        let den = den.trim();
        if let Some(k) = den.strip_prefix("2^") {
            let k = k.parse::<u32>().ok()?;
            return (k < 63).then(|| Tau::dyadic(num, k));
        }
        let d = den.parse::<u64>().ok()?;
        if d == 0 {
            return None;
        }
        return Some(if d.is_power_of_two() {
            Tau::dyadic(num, d.trailing_zeros())
        } else {
            Tau::decimal(num as f64 * PI / d as f64)
        });
    }
    if num != 1 {
        return None;
    }
    t.parse::<f64>().ok().filter(|v| v.is_finite()).map(Tau::decimal)
}

fn write_text(dir: &Path, name: &str, text: &str) -> Result<PathBuf, Failure> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, text)?;
    Ok(path)
}

fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<PathBuf, Failure> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Consistency(format!("serialization failed: {e}")))?;
    write_text(dir, name, &format!("{text}\n"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Ok(v) = std::env::var("SKEWMIX_THREADS") {
        let k = v
            .parse::<usize>()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| Failure::Config(format!("SKEWMIX_THREADS must be a positive integer, got '{v}'")))?;
        // Ignored if a global pool already exists (tests call run repeatedly).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let cfg = RunConfig::from_cli(cli)?;
    match cli.command {
        Cmd::Classes => cmd_classes(&cfg),
        Cmd::Chartable => cmd_chartable(&cfg),
        Cmd::Spectrum => cmd_spectrum(&cfg),
        Cmd::Verify => cmd_verify(&cfg),
        Cmd::Hadamard => cmd_hadamard(&cfg),
        Cmd::ProductVerify { factors } => cmd_product_verify(&cfg, factors),
    }
}

#[derive(Serialize)]
struct ClassesFile {
    n: u32,
    frob_exp: u32,
    poly_hex: String,
    lambda_hex: String,
    order: u64,
    class_count: usize,
    classes: Vec<ConjClass>,
}

fn cmd_classes(cfg: &RunConfig) -> Result<(), Failure> {
    let group = cfg.group()?;
    let desc = group.field().description();
    let classes = group.classes().to_vec();
    let central = classes.iter().filter(|c| c.is_central).count();
    let order4 = classes.len() - central;

    let file = ClassesFile {
        n: desc.n,
        frob_exp: desc.e,
        poly_hex: desc.poly_hex,
        lambda_hex: desc.lambda_hex,
        order: group.order(),
        class_count: classes.len(),
        classes,
    };
    write_json(&cfg.out, "classes.json", &file)?;
    if cfg.format == FormatArg::Csv {
        let mut csv = String::from("id,rep_a,rep_b,size,is_central,inverse_class_id\n");
        for c in &file.classes {
            csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                c.id,
                c.rep.a.bits(),
                c.rep.b.bits(),
                c.size,
                c.is_central,
                c.inverse_class_id
            ));
        }
        write_text(&cfg.out, "classes.csv", &csv)?;
    }
    println!("central={central} order4={order4} total={}", file.class_count);
    Ok(())
}

fn cmd_chartable(cfg: &RunConfig) -> Result<(), Failure> {
    let group = cfg.group()?;
    let conn = group
        .build_connection_set(cfg.policy)
        .map_err(|e| Failure::Consistency(e.to_string()))?;
    let table = CharacterTable::new(&group, Some(&conn));
    let report = table.verify_orthogonality().map_err(|e| match e {
        CharError::DenseTableTooLarge => Failure::Inapplicable(e.to_string()),
        other => Failure::Consistency(other.to_string()),
    })?;
    let degsum: u64 = table.characters().iter().map(|c| c.degree * c.degree).sum();
    if !report.all_ok() {
        println!("orthogonality=FAIL degsum={degsum}");
        return Err(Failure::Consistency("orthogonality failed".into()));
    }
    let exported = table.export().map_err(|e| Failure::Inapplicable(e.to_string()))?;
    write_json(&cfg.out, "chartable.json", &exported)?;
    println!("orthogonality=PASS degsum={degsum}");
    Ok(())
}

#[derive(Serialize)]
struct SpectrumFile {
    n: u32,
    policy: String,
    dim: u64,
    tally: std::collections::BTreeMap<i64, u64>,
    lines: Vec<skewmix::walk::SpectralLine>,
}

fn cmd_spectrum(cfg: &RunConfig) -> Result<(), Failure> {
    let group = cfg.group()?;
    let conn = group
        .build_connection_set(cfg.policy)
        .map_err(|e| Failure::Consistency(e.to_string()))?;
    let table = CharacterTable::new(&group, Some(&conn));
    let spectrum = skewmix::walk::eigenvalues(&table, &conn);
    let tally = spectrum.tally();
    let step = 1i64 << group.n();
    let zero = tally.get(&0).copied().unwrap_or(0);
    let plus = tally.get(&step).copied().unwrap_or(0);
    let minus = tally.get(&-step).copied().unwrap_or(0);

    let file = SpectrumFile {
        n: group.n(),
        policy: cfg.policy.to_string(),
        dim: spectrum.dim,
        tally,
        lines: spectrum.lines,
    };
    write_json(&cfg.out, "spectrum.json", &file)?;
    println!("zero={zero} plus={plus} minus={minus} dim={}", file.dim);
    Ok(())
}

#[derive(Serialize)]
struct VerifyFile {
    n: u32,
    policy: String,
    tau: TauDesc,
    reports: Vec<MixingReport>,
}

fn cmd_verify(cfg: &RunConfig) -> Result<(), Failure> {
    let group = cfg.group()?;
    let n = group.n();
    let conn = group
        .build_connection_set(cfg.policy)
        .map_err(|e| Failure::Consistency(e.to_string()))?;
    let table = CharacterTable::new(&group, Some(&conn));
    let tau = cfg.tau_or_mixing_time(n);
    let want = |m: MethodArg| cfg.method == MethodArg::All || cfg.method == m;

    let mut reports: Vec<MixingReport> = Vec::new();
    let mut lines: Vec<String> = Vec::new();

    if want(MethodArg::Exact) {
        match tau.dyadic {
            Some((num, pow2)) => {
                let report = verify_um_exact(&table, &conn, num, pow2).map_err(|e| match e {
                    WalkError::PhaseNotRepresentable => Failure::Inapplicable(e.to_string()),
                    other => Failure::Consistency(other.to_string()),
                })?;
                lines.push(format!("method=exact uniform={}", report.is_uniform));
                reports.push(report);
            }
            None if cfg.method == MethodArg::Exact => {
                return Err(Failure::Inapplicable(
                    "phase not exactly representable".into(),
                ))
            }
            None => lines.push("method=exact skipped=true".into()),
        }
    }
    if want(MethodArg::Spectral) {
        let (report, _) = verify_um_spectral(&table, &conn, tau);
        lines.push(format!(
            "method=spectral uniform={} max_deviation={:e}",
            report.is_uniform,
            report.max_modulus_deviation.unwrap_or(0.0)
        ));
        reports.push(report);
    }
    if want(MethodArg::Dense) {
        match OrientedCayley::from_suzuki(&group, &conn) {
            Ok(graph) => {
                let (report, _) = verify_um_dense(&graph, tau)
                    .map_err(|e| Failure::Consistency(e.to_string()))?;
                lines.push(format!(
                    "method=dense uniform={} max_deviation={:e}",
                    report.is_uniform,
                    report.max_modulus_deviation.unwrap_or(0.0)
                ));
                reports.push(report);
            }
            Err(WalkError::DenseTooLarge) if cfg.method == MethodArg::All => {
                lines.push("method=dense skipped=true".into())
            }
            Err(WalkError::DenseTooLarge) => {
                return Err(Failure::Inapplicable("use spectral method".into()))
            }
            Err(e) => return Err(Failure::Consistency(e.to_string())),
        }
    }

    if cfg.format == FormatArg::Csv {
        let graph = OrientedCayley::from_suzuki(&group, &conn).map_err(|e| match e {
            WalkError::DenseTooLarge => Failure::Inapplicable("use spectral method".into()),
            other => Failure::Consistency(other.to_string()),
        })?;
        let s = skew_matrix(&graph);
        let mut csv = String::from("u,v,sign\n");
        for (u, v, sign) in s.triples() {
            csv.push_str(&format!("{u},{v},{sign}\n"));
        }
        write_text(&cfg.out, "skew.csv", &csv)?;
    }

    let file = VerifyFile {
        n,
        policy: cfg.policy.to_string(),
        tau: tau.describe(),
        reports,
    };
    write_json(&cfg.out, "verify_report.json", &file)?;
    for line in &lines {
        println!("{line}");
    }
    let uniform = !file.reports.is_empty() && file.reports.iter().all(|r| r.is_uniform);
    println!("uniform={uniform}");
    if uniform {
        Ok(())
    } else {
        Err(Failure::NonUniform("not uniform".into()))
    }
}

#[derive(Serialize)]
struct HadamardSidecar {
    n: u32,
    tau: String,
    policy: String,
    sign_vector: Vec<i8>,
}

fn cmd_hadamard(cfg: &RunConfig) -> Result<(), Failure> {
    let group = cfg.group()?;
    let n = group.n();
    let conn = group
        .build_connection_set(cfg.policy)
        .map_err(|e| Failure::Consistency(e.to_string()))?;
    let tau = cfg.tau_or_mixing_time(n);
    let graph = OrientedCayley::from_suzuki(&group, &conn).map_err(|e| match e {
        WalkError::DenseTooLarge => Failure::Inapplicable("use spectral method".into()),
        other => Failure::Consistency(other.to_string()),
    })?;
    let u = evolve_dense(&skew_matrix(&graph), tau.value)
        .map_err(|e| Failure::Consistency(e.to_string()))?;
    let h = extract_hadamard(&u).map_err(|e| match e {
        WalkError::NotFlat => Failure::NonUniform(e.to_string()),
        other => Failure::Consistency(other.to_string()),
    })?;
    if !h.verify() {
        return Err(Failure::Consistency("not Hadamard".into()));
    }
    if !hadamard_matches_class_sums(&h, &group, &conn) {
        return Err(Failure::Consistency("class sums do not match".into()));
    }

    let mut csv = String::new();
    for row in 0..h.dim() {
        let cells: Vec<String> = h.row(row).iter().map(|e| e.to_string()).collect();
        csv.push_str(&cells.join(","));
        csv.push('\n');
    }
    write_text(&cfg.out, "hadamard.csv", &csv)?;

    let desc = tau.describe();
    let sidecar = HadamardSidecar {
        n,
        tau: desc
            .symbolic
            .unwrap_or_else(|| format!("{}", desc.decimal)),
        policy: cfg.policy.to_string(),
        sign_vector: skewmix::walk::sign_vector(&group, &conn),
    };
    write_json(&cfg.out, "hadamard.json", &sidecar)?;
    println!("dim={} hadamard=PASS class_sums=PASS", h.dim());
    Ok(())
}

#[derive(Serialize)]
struct ProductFile {
    factors: u32,
    dim: usize,
    tau: TauDesc,
    report: MixingReport,
}

fn cmd_product_verify(cfg: &RunConfig, factors: u32) -> Result<(), Failure> {
    if factors == 0 {
        return Err(Failure::Config("--factors must be at least 1".into()));
    }
    if factors > 6 {
        // 4^7 = 16384 exceeds the dense limit.
        return Err(Failure::Inapplicable("use spectral method".into()));
    }
    let field = FieldCtx::new(1, 0, None).map_err(|e| Failure::Config(e.to_string()))?;
    let group = SuzukiGroup::new(field);
    let conn = group
        .build_connection_set(Policy::Lex)
        .map_err(|e| Failure::Consistency(e.to_string()))?;
    let four_cycle = OrientedCayley::from_suzuki(&group, &conn)
        .map_err(|e| Failure::Consistency(e.to_string()))?;
    let mut graph = four_cycle.clone();
    for _ in 1..factors {
        graph = cartesian_product(&graph, &four_cycle);
    }

    let tau = cfg.tau.unwrap_or_else(|| Tau::dyadic(1, 2));
    let (report, _) =
        verify_um_dense(&graph, tau).map_err(|e| Failure::Consistency(e.to_string()))?;
    let file = ProductFile {
        factors,
        dim: graph.dim(),
        tau: tau.describe(),
        report,
    };
    write_json(&cfg.out, "product_report.json", &file)?;
    println!(
        "factors={factors} dim={} uniform={}",
        file.dim, file.report.is_uniform
    );
    if file.report.is_uniform {
        Ok(())
    } else {
        Err(Failure::NonUniform("not uniform".into()))
    }
}
