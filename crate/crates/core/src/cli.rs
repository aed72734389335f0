//! The `azi` command line.
//!
//! [`run`] takes its arguments and streams explicitly so it can be driven
//! in-process; the binary only forwards the process environment.
//! Exit status: 0 on success, 1 when a verification verdict fails, 2 for
//! usage, input or parameter errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::Rational;
use crate::enumerate::{enumerate, verify_class_bounds, verify_huang, verify_lemma1, verify_wang, EnumSpec, MAX_CANON_ORDER};
use crate::error::{Error, Result};
use crate::families::{circulant, construct_lemma1, CycleClass, FamilySpec, Lemma1Shape};
use crate::graph::Graph;
use crate::indices::{abc, azi};
use crate::ng::{csv_summary, ng_scan, verify_ng, write_json_lines};
use crate::report::{emit_certificate, from_graph6, to_edge_list, to_graph6, BoundCertificate, EdgeListReader, Format, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Inclusive order range written `a..b`, `a..=b` or `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for OrderRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid order {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(OrderRange { lo, hi })
    }
}

impl fmt::Display for OrderRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Parser, Debug)]
#[command(name = "azi", version, about = "Exact augmented Zagreb index computation and bound verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute indices of graphs given as graph6 lines or edge lists.
    Compute(ComputeArgs),
    /// Build a member of an extremal family.
    Family(FamilyArgs),
    /// Check a bound exhaustively and write certificates.
    Verify(VerifyArgs),
    /// List isomorphism-class representatives.
    Enumerate(EnumerateArgs),
    /// Scan graphs with connected complements against the complement-sum bounds.
    NgScan(NgScanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IndexChoice {
    Azi,
    Abc,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Input file; standard input when neither this nor --graph6 is given.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Inline graph6 strings.
    #[arg(long = "graph6", value_name = "G6")]
    pub inline: Vec<String>,
    #[arg(long, value_enum, default_value_t = IndexChoice::Azi)]
    pub index: IndexChoice,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    BPrime,
    UPrime,
    Psi,
    Theta,
    Bridged,
    SharedVertex,
    Circulant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassChoice {
    Unicyclic,
    Bicyclic,
}

impl From<ClassChoice> for CycleClass {
    fn from(c: ClassChoice) -> Self {
        match c {
            ClassChoice::Unicyclic => CycleClass::Unicyclic,
            ClassChoice::Bicyclic => CycleClass::Bicyclic,
        }
    }
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub name: FamilyName,
    /// Family index for b-prime and u-prime.
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    #[arg(long, value_enum)]
    pub class: Option<ClassChoice>,
    /// Order for psi and circulant.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated shape parameters: theta a,b,c; bridged a,b,bridge;
    /// shared-vertex a,b; circulant offsets.
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<usize>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    T5,
    Unicyclic,
    Ng,
    Lemma1,
    Wang,
    Huang,
}

impl Theorem {
    /// Largest order run without `--allow-large`.
    pub fn default_budget(self) -> usize {
        match self {
            Theorem::T5 | Theorem::Lemma1 => 10,
            Theorem::Unicyclic => 12,
            Theorem::Ng | Theorem::Wang | Theorem::Huang => 8,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Theorem::T5 => "t5",
            Theorem::Unicyclic => "unicyclic",
            Theorem::Ng => "ng",
            Theorem::Lemma1 => "lemma1",
            Theorem::Wang => "wang",
            Theorem::Huang => "huang",
        }
    }

    fn certify(self, n: usize) -> Result<BoundCertificate> {
        match self {
            Theorem::T5 => verify_class_bounds(CycleClass::Bicyclic, n),
            Theorem::Unicyclic => verify_class_bounds(CycleClass::Unicyclic, n),
            Theorem::Ng => verify_ng(n),
            Theorem::Lemma1 => verify_lemma1(n),
            Theorem::Wang => verify_wang(n),
            Theorem::Huang => verify_huang(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertFormat {
    Json,
    Csv,
}

impl From<CertFormat> for Format {
    fn from(f: CertFormat) -> Self {
        match f {
            CertFormat::Json => Format::Json,
            CertFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Worker threads (default: all cores).
    #[arg(long, env = "AZI_WORKERS")]
    pub workers: Option<usize>,
    /// Permit orders above the default budget (up to 16).
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    /// Order or inclusive range `a..b`.
    #[arg(long)]
    pub n: OrderRange,
    /// Directory for certificate files; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CertFormat::Json)]
    pub format: CertFormat,
    /// Treat SKIPPED verdicts as passing.
    #[arg(long)]
    pub allow_skipped: bool,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Chemical class shortcut: connected, Δ <= 4, m = n (+1 for bicyclic).
    #[arg(long, value_enum)]
    pub class: Option<ClassChoice>,
    /// Edge count or inclusive range `a..b`.
    #[arg(long)]
    pub edges: Option<OrderRange>,
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub complement_connected: bool,
    /// Print only the number of classes.
    #[arg(long)]
    pub count: bool,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Jsonl,
    Csv,
}

#[derive(Args, Debug)]
pub struct NgScanArgs {
    #[arg(long)]
    pub n: OrderRange,
    #[arg(long, value_enum, default_value_t = ScanFormat::Jsonl)]
    pub format: ScanFormat,
    #[command(flatten)]
    pub run: RunArgs,
}

/// Streams a command writes to.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Failure carrying the exit status to report.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit(EXIT_USAGE, e.to_string())
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit(EXIT_USAGE, format!("i/o error: {e}"))
    }
}

type CmdResult = std::result::Result<i32, Exit>;

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, io: Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let out: &mut dyn Write = if e.use_stderr() { io.stderr } else { io.stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let Io { stdin, stdout, stderr } = io;
    let result = match cli.command {
        Command::Compute(a) => compute(&a, stdin, stdout, stderr),
        Command::Family(a) => family(&a, stdout),
        Command::Verify(a) => verify(&a, stdout, stderr),
        Command::Enumerate(a) => enumerate_cmd(&a, stdout),
        Command::NgScan(a) => ng_scan_cmd(&a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

/// Run `f` on a pool of `workers` threads, or the global pool.
fn in_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> std::result::Result<T, Exit> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(Exit(EXIT_USAGE, "--workers must be at least 1".into())),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(w).build().map_err(|e| Exit(EXIT_USAGE, e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn exact(r: &Rational) -> String {
    format!("{r} ({})", r.to_decimal_string())
}

fn index_line(g: &Graph, index: IndexChoice) -> Result<String> {
    Ok(match index {
        IndexChoice::Azi => exact(&azi(g)?),
        IndexChoice::Abc => format!("{:?}", abc(g)?),
        IndexChoice::All => format!("azi={} abc={:?}", exact(&azi(g)?), abc(g)?),
    })
}

fn looks_like_edge_list(text: &str) -> bool {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    first.is_some_and(|l| {
        let parts: Vec<&str> = l.split_whitespace().collect();
        parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
    })
}

fn compute(a: &ComputeArgs, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let text = if !a.inline.is_empty() {
        a.inline.join("\n")
    } else if let Some(p) = &a.input {
        fs::read_to_string(p).map_err(|e| Exit(EXIT_USAGE, format!("{}: {e}", p.display())))?
    } else {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    };
    let edge_list = match a.format {
        InputFormat::EdgeList => true,
        InputFormat::Graph6 => false,
        InputFormat::Auto => looks_like_edge_list(&text),
    };
    let mut report = |g: &Graph, line: usize| -> std::io::Result<()> {
        match index_line(g, a.index) {
            Ok(s) => writeln!(out, "{s}"),
            Err(e) => {
                writeln!(err, "line {line}: {e}")?;
                writeln!(out, "error: {e}")
            }
        }
    };
    if edge_list {
        let mut reader = EdgeListReader::new(&text);
        let mut count = 0;
        while let Some(g) = reader.next() {
            count += 1;
            match g {
                Ok(g) => report(&g, count)?,
                Err(e) => return Err(Exit(EXIT_USAGE, e.to_string())),
            }
        }
    } else {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let g = from_graph6(line).map_err(|e| Exit(EXIT_USAGE, format!("line {}: {e}", i + 1)))?;
            report(&g, i + 1)?;
        }
    }
    Ok(EXIT_OK)
}

fn need<T>(v: Option<T>, flag: &str, family: FamilyName) -> std::result::Result<T, Exit> {
    v.ok_or_else(|| Exit(EXIT_USAGE, format!("--{flag} is required for {family:?}")))
}

fn params<const N: usize>(a: &FamilyArgs) -> std::result::Result<[usize; N], Exit> {
    a.params.as_slice().try_into().map_err(|_| Exit(EXIT_USAGE, format!("--params needs {N} comma-separated values for {:?}", a.name)))
}

fn write_graph(g: &Graph, format: GraphFormat, out: &mut dyn Write) -> std::result::Result<(), Exit> {
    match format {
        GraphFormat::Graph6 => writeln!(out, "{}", to_graph6(g)?)?,
        GraphFormat::EdgeList => write!(out, "{}", to_edge_list(g))?,
    }
    Ok(())
}

fn family(a: &FamilyArgs, out: &mut dyn Write) -> CmdResult {
    let g = match a.name {
        FamilyName::BPrime => FamilySpec::BPrime { k: need(a.k, "k", a.name)? }.construct()?,
        FamilyName::UPrime => FamilySpec::UPrime { k: need(a.k, "k", a.name)? }.construct()?,
        FamilyName::Psi => FamilySpec::Psi { n: need(a.n, "n", a.name)?, class: need(a.class, "class", a.name)?.into() }.construct()?,
        FamilyName::Theta => {
            let [x, y, z] = params(a)?;
            construct_lemma1(Lemma1Shape::Theta { a: x, b: y, c: z })?
        }
        FamilyName::Bridged => {
            let [x, y, bridge] = params(a)?;
            construct_lemma1(Lemma1Shape::TwoCyclesBridged { a: x, b: y, bridge })?
        }
        FamilyName::SharedVertex => {
            let [x, y] = params(a)?;
            construct_lemma1(Lemma1Shape::TwoCyclesSharedVertex { a: x, b: y })?
        }
        FamilyName::Circulant => circulant(need(a.n, "n", a.name)?, &a.params)?,
    };
    write_graph(&g, a.format, out)?;
    writeln!(out, "{}", exact(&azi(&g)?))?;
    Ok(EXIT_OK)
}

fn check_budget(hi: usize, budget: usize, allow_large: bool) -> std::result::Result<(), Exit> {
    if hi > MAX_CANON_ORDER {
        return Err(Exit(EXIT_USAGE, format!("n = {hi} exceeds the hard limit {MAX_CANON_ORDER}")));
    }
    if hi > budget && !allow_large {
        return Err(Exit(EXIT_USAGE, format!("n = {hi} exceeds the default budget {budget}; pass --allow-large to run it")));
    }
    Ok(())
}

fn write_file(path: &Path, bytes: &[u8]) -> std::result::Result<(), Exit> {
    fs::write(path, bytes).map_err(|e| Exit(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let budget = a.theorem.default_budget();
    check_budget(a.n.hi, budget, a.run.allow_large)?;
    let format: Format = a.format.into();
    let ext = match a.format {
        CertFormat::Json => "json",
        CertFormat::Csv => "csv",
    };
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir).map_err(|e| Exit(EXIT_USAGE, format!("{}: {e}", dir.display())))?;
        let mut echo = BTreeMap::new();
        echo.insert("theorem", a.theorem.name().to_string());
        echo.insert("n", a.n.to_string());
        echo.insert("format", ext.to_string());
        echo.insert("budget", budget.to_string());
        echo.insert("allow_large", a.run.allow_large.to_string());
        echo.insert("allow_skipped", a.allow_skipped.to_string());
        echo.insert("workers", a.run.workers.map_or("all".into(), |w| w.to_string()));
        echo.insert("version", env!("CARGO_PKG_VERSION").to_string());
        let mut bytes = serde_json::to_vec_pretty(&echo).expect("string map serialises");
        bytes.push(b'\n');
        write_file(&dir.join("run.json"), &bytes)?;
    }
    let mut code = EXIT_OK;
    let certs = in_pool(a.run.workers, || (a.n.lo..=a.n.hi).map(|n| a.theorem.certify(n).map(|c| (n, c))).collect::<Result<Vec<_>>>())??;
    for (n, mut cert) in certs {
        cert.config.insert("theorem".into(), a.theorem.name().into());
        cert.config.insert("budget".into(), budget.to_string());
        let bytes = emit_certificate(&cert, format);
        let location = match &a.out {
            Some(dir) => {
                let path = dir.join(format!("{}_n{n}.{ext}", a.theorem.name()));
                write_file(&path, &bytes)?;
                path.display().to_string()
            }
            None => {
                out.write_all(&bytes)?;
                "stdout".into()
            }
        };
        let passed = cert.passed(a.allow_skipped);
        writeln!(err, "{} n={n}: {} ({location})", a.theorem.name(), if passed { "PASS" } else { "FAIL" })?;
        for v in cert.verdicts.iter().filter(|v| v.status == Status::Fail || (v.status == Status::Skipped && !a.allow_skipped)) {
            writeln!(err, "  {} {}: {} [{}]", v.status, v.claim, v.detail, v.counterexamples.join(" "))?;
        }
        if !passed {
            code = EXIT_FAIL;
        }
    }
    Ok(code)
}

fn enumerate_cmd(a: &EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    check_budget(a.n, 10, a.run.allow_large)?;
    let mut spec = match a.class {
        Some(c) => EnumSpec::chemical(a.n, c.into()),
        None if a.connected => EnumSpec::connected(a.n),
        None => EnumSpec::all(a.n),
    };
    if let Some(r) = a.edges {
        spec = spec.edge_range(r.lo, r.hi);
    }
    if let Some(d) = a.max_degree {
        spec = spec.max_degree(d);
    }
    spec = spec.complement_connected(a.complement_connected);
    let reps = in_pool(a.run.workers, || enumerate(&spec))??;
    if a.count {
        writeln!(out, "{}", reps.len())?;
    } else {
        for r in &reps {
            write_graph(&r.graph, a.format, out)?;
        }
    }
    Ok(EXIT_OK)
}

fn ng_scan_cmd(a: &NgScanArgs, out: &mut dyn Write) -> CmdResult {
    check_budget(a.n.hi, Theorem::Ng.default_budget(), a.run.allow_large)?;
    let scans = in_pool(a.run.workers, || (a.n.lo..=a.n.hi).map(ng_scan).collect::<Result<Vec<_>>>())??;
    let records: Vec<_> = scans.into_iter().flatten().collect();
    match a.format {
        ScanFormat::Jsonl => write_json_lines(&records, &mut *out)?,
        ScanFormat::Csv => out.write_all(&csv_summary(&records))?,
    }
    Ok(EXIT_OK)
}
