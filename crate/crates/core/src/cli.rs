//! Command-line front end. Every subcommand parses its inputs, calls the
//! library, and prints the result.
//!
//! Exit codes: 0 success or found, 1 negative or invalid result, 2 usage
//! error, 3 inconclusive.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certificate::{verify, Failure, MoveCertificate, VerificationReport};
use crate::curves::{self, PunctureLabeling, Slope};
use crate::family::{self, FamilyBudget, FamilyParams, FamilyRow};
use crate::kirby::FramedLinkMatrix;
use crate::moves::{Move, Regime, Sign};
use crate::presentation::{BalancedPresentation, PresentationDoc};
use crate::search::{hybrid_trivialize, search_with_progress, SearchConfig, SearchOutcome, Strategy};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "acwb", version, about = "Andrews-Curtis and Kirby calculus workbench")]
pub struct Cli {
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Free-group word arithmetic.
    Word {
        #[command(subcommand)]
        op: WordOp,
    },
    /// Inspect presentations and apply moves.
    Pres {
        #[command(subcommand)]
        op: PresOp,
    },
    /// Bounded trivialization search.
    Search(SearchArgs),
    /// Replay and check a certificate.
    Verify {
        /// Certificate document, or `-` for stdin.
        #[arg(long)]
        cert: String,
    },
    /// The presentation family and the built-in Gersten certificate.
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
    /// Linking-matrix operations.
    Kirby {
        #[command(subcommand)]
        op: KirbyOp,
    },
    /// Curves on the 4-punctured sphere.
    Curves {
        #[command(subcommand)]
        op: CurvesOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum WordOp {
    Reduce { word: String },
    /// Conjugator and cyclically reduced core.
    Cyclic { word: String },
    Inverse { word: String },
    Mul { left: String, right: String },
    /// `c w c⁻¹`.
    Conjugate { word: String, by: String },
    /// Replace every occurrence of a generator.
    Substitute {
        word: String,
        #[arg(long)]
        generator: String,
        #[arg(long)]
        image: String,
    },
    /// Exponent sum of each generator.
    Sums {
        word: String,
        #[arg(long)]
        rank: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct PresInput {
    /// Inline presentation `rank; r1; r2; …`.
    #[arg(long, conflicts_with_all = ["pres_file", "family"])]
    pub pres: Option<String>,
    /// File holding a presentation in text or document form, or `-` for stdin.
    #[arg(long)]
    pub pres_file: Option<String>,
    /// Family member, e.g. `n=2` or `n=3,w=yx`.
    #[arg(long, conflicts_with = "pres_file")]
    pub family: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum PresOp {
    /// Rank, lengths, canonical form, key and abelianization.
    Info {
        #[command(flatten)]
        input: PresInput,
    },
    /// Apply moves given as JSON documents, in order.
    Apply {
        #[command(flatten)]
        input: PresInput,
        #[arg(long = "move", required = true)]
        moves: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub input: PresInput,
    /// Bound on total relator length; defaults to the start length plus the budget slack.
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long)]
    pub max_depth: Option<usize>,
    #[arg(long, value_enum, default_value_t = RegimeArg::Strict)]
    pub regime: RegimeArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Bfs)]
    pub strategy: StrategyArg,
    /// Worker threads; 0 uses all cores.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Maximum number of stored states.
    #[arg(long)]
    pub capacity: Option<usize>,
    /// Include stabilization and destabilization moves.
    #[arg(long)]
    pub stabilize: bool,
    /// Certificate to replay before searching.
    #[arg(long, conflicts_with = "gersten_prefix")]
    pub prefix: Option<String>,
    /// Use the built-in Gersten prefix (start must be the n = 2 member).
    #[arg(long)]
    pub gersten_prefix: bool,
    /// Write the certificate document here when found.
    #[arg(long)]
    pub cert_out: Option<String>,
    /// Recorded in the output; the search itself is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Default budget as `slack=S,depth=D[,workers=W][,capacity=C]`.
    #[arg(long, env = "ACWB_BUDGET", hide_env_values = true)]
    pub budget: Option<String>,
    /// Suppress progress lines on stderr.
    #[arg(long, short)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    Strict,
    Extended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Bfs,
    Iddfs,
}

#[derive(Debug, Subcommand)]
pub enum FamilyOp {
    /// Length, determinant and search status for n = 0..=n_max.
    Report {
        #[arg(long, default_value_t = 3)]
        n_max: i64,
        #[arg(long)]
        slack: Option<usize>,
        #[arg(long)]
        max_depth: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, env = "ACWB_BUDGET", hide_env_values = true)]
        budget: Option<String>,
    },
    /// One member of the family.
    Show {
        /// e.g. `n=2` or `n=3,w=yx`.
        spec: String,
    },
    /// The Gersten certificate for the n = 2 member.
    Gersten {
        /// Only the moves up to the generator change.
        #[arg(long)]
        prefix: bool,
    },
}

#[derive(Debug, Args)]
pub struct MatrixInput {
    /// Matrix file in text or JSON form, or `-` for stdin.
    #[arg(long = "in")]
    pub input: String,
}

#[derive(Debug, Subcommand)]
pub enum KirbyOp {
    Show {
        #[command(flatten)]
        m: MatrixInput,
    },
    /// Slide one component over another.
    Slide {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long)]
        component: usize,
        #[arg(long)]
        over: usize,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
    },
    BlowDown {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long)]
        component: usize,
    },
    AddUnlink {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    AddHopf {
        #[command(flatten)]
        m: MatrixInput,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    Det {
        #[command(flatten)]
        m: MatrixInput,
    },
    /// Zero framings and linking numbers; exits 1 when false.
    Gpr {
        #[command(flatten)]
        m: MatrixInput,
    },
    /// Unlink plus canceling Hopf pairs; exits 1 when false.
    WeakTrivial {
        #[command(flatten)]
        m: MatrixInput,
    },
}

#[derive(Debug, Subcommand)]
pub enum CurvesOp {
    /// Candidate slopes up to a height.
    Enumerate {
        #[arg(long)]
        height: i64,
        /// e.g. `L1=00,L2=11,R1=10,R2=01`.
        #[arg(long)]
        labeling: Option<String>,
        /// List every slope, not only candidates.
        #[arg(long)]
        all: bool,
    },
    /// Partition, Z/3 class and candidacy of one slope.
    Classify {
        /// `a/b` or `a,b`.
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        #[arg(long)]
        labeling: Option<String>,
    },
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "plus" | "1" | "+1" => Ok(Sign::Plus),
        "-" | "minus" | "-1" => Ok(Sign::Minus),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}

/// Everything `search` prints in structured form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub start: BalancedPresentation,
    pub config: SearchConfig,
    pub prefix_moves: usize,
    pub seed: Option<u64>,
    pub outcome: SearchOutcome,
}

/// Search budget defaults, overridable through `ACWB_BUDGET`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub slack: usize,
    pub depth: usize,
    pub workers: usize,
    pub capacity: usize,
}

impl Default for Budget {
    fn default() -> Self {
        let f = FamilyBudget::default();
        Budget { slack: f.length_slack, depth: f.max_depth, workers: f.workers, capacity: SearchConfig::DEFAULT_CAPACITY }
    }
}

impl std::str::FromStr for Budget {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut b = Budget::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            let v: usize = v.trim().parse().map_err(|_| format!("bad number in {part:?}"))?;
            match k.trim() {
                "slack" => b.slack = v,
                "depth" => b.depth = v,
                "workers" => b.workers = v,
                "capacity" => b.capacity = v,
                other => return Err(format!("unknown budget key {other:?}")),
            }
        }
        Ok(b)
    }
}

struct Fail {
    code: i32,
    message: String,
}

fn usage(flag: &str, e: impl std::fmt::Display) -> Fail {
    Fail { code: EXIT_USAGE, message: format!("invalid {flag}: {e}") }
}

fn failed(e: impl std::fmt::Display) -> Fail {
    Fail { code: EXIT_NEGATIVE, message: e.to_string() }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Result<(), Fail> {
        let body = match self.format {
            Format::Json => serde_json::to_string_pretty(value).map_err(failed)? + "\n",
            Format::Text => text(),
        };
        self.out.write_all(body.as_bytes()).map_err(failed)
    }

    fn note(&mut self, line: &str) {
        let _ = writeln!(self.err, "{line}");
    }
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { out, err, format: cli.format };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            io.note(&format!("error: {}", f.message));
            f.code
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32, Fail> {
    match cmd {
        Command::Word { op } => word_cmd(op, io),
        Command::Pres { op } => pres_cmd(op, io),
        Command::Search(args) => search_cmd(args, io),
        Command::Verify { cert } => verify_cmd(&cert, io),
        Command::Family { op } => family_cmd(op, io),
        Command::Kirby { op } => kirby_cmd(op, io),
        Command::Curves { op } => curves_cmd(op, io),
    }
}

fn read_source(path: &str, flag: &str) -> Result<String, Fail> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| usage(flag, e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(flag, format!("{path}: {e}")))
    }
}

fn word_arg(s: &str, flag: &str) -> Result<Word, Fail> {
    Word::parse(s).map_err(|e| usage(flag, e))
}

fn word_cmd(op: WordOp, io: &mut Io) -> Result<i32, Fail> {
    match op {
        WordOp::Reduce { word } => {
            let w = word_arg(&word, "<WORD>")?;
            io.emit(&json!({ "word": w, "length": w.len() }), || format!("{w}\n"))?;
        }
        WordOp::Cyclic { word } => {
            let w = word_arg(&word, "<WORD>")?;
            let (c, core) = w.cyclic_reduce();
            io.emit(&json!({ "conjugator": c, "core": core }), || format!("conjugator {c}\ncore {core}\n"))?;
        }
        WordOp::Inverse { word } => {
            let w = word_arg(&word, "<WORD>")?.inverse();
            io.emit(&json!({ "word": w }), || format!("{w}\n"))?;
        }
        WordOp::Mul { left, right } => {
            let w = word_arg(&left, "<LEFT>")?.mul(&word_arg(&right, "<RIGHT>")?);
            io.emit(&json!({ "word": w }), || format!("{w}\n"))?;
        }
        WordOp::Conjugate { word, by } => {
            let w = word_arg(&word, "<WORD>")?.conjugate_by(&word_arg(&by, "<BY>")?);
            io.emit(&json!({ "word": w }), || format!("{w}\n"))?;
        }
        WordOp::Substitute { word, generator, image } => {
            let g = word_arg(&generator, "--generator")?;
            let gen = match g.letters() {
                [l] if l.is_positive() => l.generator(),
                _ => return Err(usage("--generator", "expected a single generator letter")),
            };
            let w = word_arg(&word, "<WORD>")?.substitute(gen, &word_arg(&image, "--image")?);
            io.emit(&json!({ "word": w }), || format!("{w}\n"))?;
        }
        WordOp::Sums { word, rank } => {
            let w = word_arg(&word, "<WORD>")?;
            let rank = rank.unwrap_or(w.max_generator() as usize);
            let sums = w.exponent_sums(rank).map_err(|e| usage("--rank", e))?;
            io.emit(&json!({ "rank": rank, "sums": sums }), || {
                sums.iter().map(i64::to_string).collect::<Vec<_>>().join(" ") + "\n"
            })?;
        }
    }
    Ok(EXIT_OK)
}

/// Text form `rank; r1; …` or a JSON document.
pub fn parse_presentation(text: &str) -> Result<BalancedPresentation, String> {
    let t = text.trim();
    if t.starts_with('{') {
        let doc: PresentationDoc = serde_json::from_str(t).map_err(|e| e.to_string())?;
        BalancedPresentation::from_doc(&doc).map_err(|e| e.to_string())
    } else {
        BalancedPresentation::parse(t).map_err(|e| e.to_string())
    }
}

fn load_presentation(input: &PresInput) -> Result<BalancedPresentation, Fail> {
    if let Some(p) = &input.pres {
        return parse_presentation(p).map_err(|e| usage("--pres", e));
    }
    if let Some(path) = &input.pres_file {
        return parse_presentation(&read_source(path, "--pres-file")?).map_err(|e| usage("--pres-file", e));
    }
    if let Some(spec) = &input.family {
        let params: FamilyParams = spec.parse().map_err(|e| usage("--family", e))?;
        return params.presentation().map_err(|e| usage("--family", e));
    }
    Err(usage("input", "one of --pres, --pres-file or --family is required"))
}

#[derive(Serialize)]
struct PresInfo {
    presentation: BalancedPresentation,
    rank: usize,
    total_length: usize,
    canonical: BalancedPresentation,
    key: String,
    abelianization: Vec<Vec<i64>>,
    determinant: Option<i64>,
    trivial: bool,
}

fn pres_cmd(op: PresOp, io: &mut Io) -> Result<i32, Fail> {
    match op {
        PresOp::Info { input } => {
            let p = load_presentation(&input)?;
            let info = PresInfo {
                rank: p.rank(),
                total_length: p.total_length(),
                canonical: p.canonical_form(),
                key: p.canonical_key().as_bytes().iter().map(|b| format!("{b:02x}")).collect(),
                abelianization: p.abelianization_matrix(),
                determinant: p.abelianization_determinant().ok(),
                trivial: p.is_trivial(),
                presentation: p,
            };
            io.emit(&info, || {
                let det = info.determinant.map_or("overflow".to_string(), |d| d.to_string());
                format!(
                    "presentation {}\nrank {}\ntotal_length {}\ncanonical {}\nkey {}\ndeterminant {}\ntrivial {}\n",
                    info.presentation, info.rank, info.total_length, info.canonical, info.key, det, info.trivial
                )
            })?;
            Ok(EXIT_OK)
        }
        PresOp::Apply { input, moves } => {
            let mut p = load_presentation(&input)?;
            for (k, m) in moves.iter().enumerate() {
                let mv: Move = serde_json::from_str(m).map_err(|e| usage("--move", e))?;
                p = mv.apply(&p).map_err(|e| failed(format!("move {}: {e}", k + 1)))?;
            }
            io.emit(&p, || format!("{p}\n"))?;
            Ok(EXIT_OK)
        }
    }
}

fn load_certificate(path: &str, flag: &str) -> Result<MoveCertificate, Fail> {
    serde_json::from_str(&read_source(path, flag)?).map_err(|e| usage(flag, e))
}

fn search_cmd(args: SearchArgs, io: &mut Io) -> Result<i32, Fail> {
    let start = load_presentation(&args.input)?;
    let budget = match &args.budget {
        Some(s) => s.parse::<Budget>().map_err(|e| usage("ACWB_BUDGET", e))?,
        None => Budget::default(),
    };
    let prefix = match (&args.prefix, args.gersten_prefix) {
        (Some(path), _) => Some(load_certificate(path, "--prefix")?),
        (None, true) => Some(family::gersten_prefix()),
        (None, false) => None,
    };
    let search_start = match &prefix {
        Some(cert) => cert.replay().map_err(|(step, e)| failed(format!("prefix move {step}: {e}")))?,
        None => start.clone(),
    };
    let base = search_start.canonical_form().total_length();
    let mut cfg = SearchConfig::new(
        args.max_len.unwrap_or(base + budget.slack),
        args.max_depth.unwrap_or(budget.depth),
    );
    cfg.regime = match args.regime {
        RegimeArg::Strict => Regime::Strict,
        RegimeArg::Extended => Regime::Extended,
    };
    cfg.strategy = match args.strategy {
        StrategyArg::Bfs => Strategy::BreadthFirst,
        StrategyArg::Iddfs => Strategy::IterativeDeepening,
    };
    cfg.workers = args.workers.unwrap_or(budget.workers);
    cfg.dedup_capacity = args.capacity.unwrap_or(budget.capacity);
    cfg.stabilization = args.stabilize;
    cfg.validate(&search_start).map_err(|e| usage("--max-len/--capacity", e))?;

    let outcome = match &prefix {
        Some(cert) => hybrid_trivialize(&start, cert, &cfg).map_err(|e| usage("--prefix", e))?,
        None => {
            let quiet = args.quiet;
            let began = Instant::now();
            let mut last = began;
            let err = &mut *io.err;
            search_with_progress(&start, &cfg, |p| {
                if !quiet && last.elapsed() >= Duration::from_secs(1) {
                    last = Instant::now();
                    let _ = writeln!(
                        err,
                        "depth {} frontier {} visited {} ({:.1}s)",
                        p.depth,
                        p.frontier,
                        p.visited,
                        began.elapsed().as_secs_f64()
                    );
                }
            })
            .map_err(failed)?
        }
    };
    if let (Some(path), Some(cert)) = (&args.cert_out, outcome.certificate()) {
        let body = serde_json::to_string_pretty(cert).map_err(failed)? + "\n";
        std::fs::write(path, body).map_err(|e| failed(format!("{path}: {e}")))?;
    }
    let code = match &outcome {
        SearchOutcome::Found { .. } => EXIT_OK,
        SearchOutcome::Exhausted { .. } => EXIT_NEGATIVE,
        SearchOutcome::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    };
    let report = SearchReport {
        start,
        prefix_moves: prefix.as_ref().map_or(0, |c| c.moves.len()),
        config: cfg,
        seed: args.seed,
        outcome,
    };
    io.emit(&report, || search_text(&report))?;
    Ok(code)
}

fn search_text(r: &SearchReport) -> String {
    let s = r.outcome.stats();
    let mut t = String::new();
    let _ = writeln!(t, "start {}", r.start);
    let _ = writeln!(t, "status {}", r.outcome.status());
    let _ = writeln!(t, "bounds max_len={} max_depth={}", r.config.max_total_length, r.config.max_depth);
    let _ = writeln!(
        t,
        "visited {} expanded {} frontier_peak {} depth_reached {}",
        s.visited, s.expanded, s.frontier_peak, s.depth_reached
    );
    if let Some(seed) = r.seed {
        let _ = writeln!(t, "seed {seed}");
    }
    if let SearchOutcome::Found { depth, certificate, .. } = &r.outcome {
        let _ = writeln!(t, "depth {depth}");
        let _ = writeln!(t, "certificate {} moves", certificate.moves.len());
        for (k, m) in certificate.moves.iter().enumerate() {
            let _ = writeln!(t, "  {:>3}. {m}", k + 1);
        }
    }
    t
}

fn verify_text(r: &VerificationReport) -> String {
    let mut t = String::new();
    for s in &r.steps {
        let _ = writeln!(t, "{:>3}. {}  =>  {}", s.step, s.mv, s.result);
    }
    match &r.failure {
        None => {
            let regime = match r.regime {
                Regime::Strict => "strict",
                Regime::Extended => "extended",
            };
            let _ = writeln!(t, "valid ({} steps, {regime} regime)", r.steps.len());
        }
        Some(Failure::IllegalMove { step, reason }) => {
            let _ = writeln!(t, "invalid: step {step}: {reason}");
        }
        Some(Failure::NotTrivial { .. }) => {
            let _ = writeln!(t, "invalid: ends at {}, not trivial", r.final_presentation);
        }
    }
    t
}

fn verify_cmd(path: &str, io: &mut Io) -> Result<i32, Fail> {
    let cert = load_certificate(path, "--cert")?;
    let report = verify(&cert);
    io.emit(&report, || verify_text(&report))?;
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn family_text(rows: &[FamilyRow]) -> String {
    let mut t = String::from("n\ttotal_length\tdeterminant\tstatus\tvisited\tdepth\tmax_len\tmax_depth\tpresentation\n");
    for r in rows {
        let depth = r.depth.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(
            t,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.n, r.total_length, r.determinant, r.status, r.visited, depth, r.max_total_length, r.max_depth, r.presentation
        );
    }
    t
}

fn family_cmd(op: FamilyOp, io: &mut Io) -> Result<i32, Fail> {
    match op {
        FamilyOp::Report { n_max, slack, max_depth, workers, budget } => {
            if n_max < 0 {
                return Err(usage("--n-max", "must be nonnegative"));
            }
            let b = match &budget {
                Some(s) => s.parse::<Budget>().map_err(|e| usage("ACWB_BUDGET", e))?,
                None => Budget::default(),
            };
            let fb = FamilyBudget {
                length_slack: slack.unwrap_or(b.slack),
                max_depth: max_depth.unwrap_or(b.depth),
                workers: workers.unwrap_or(b.workers),
            };
            let rows = family::family_report(n_max, &fb).map_err(failed)?;
            io.emit(&rows, || family_text(&rows))?;
        }
        FamilyOp::Show { spec } => {
            let params: FamilyParams = spec.parse().map_err(|e| usage("<SPEC>", e))?;
            let p = params.presentation().map_err(|e| usage("<SPEC>", e))?;
            io.emit(&p, || format!("{p}\n"))?;
        }
        FamilyOp::Gersten { prefix } => {
            let cert = if prefix { family::gersten_prefix() } else { family::gersten_certificate() };
            let json = serde_json::to_string_pretty(&cert).map_err(failed)? + "\n";
            io.out.write_all(json.as_bytes()).map_err(failed)?;
        }
    }
    Ok(EXIT_OK)
}

/// Text form or a JSON document.
pub fn parse_matrix(text: &str) -> Result<FramedLinkMatrix, String> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| e.to_string())
    } else {
        FramedLinkMatrix::parse_text(text).map_err(|e| e.to_string())
    }
}

fn load_matrix(m: &MatrixInput) -> Result<FramedLinkMatrix, Fail> {
    parse_matrix(&read_source(&m.input, "--in")?).map_err(|e| usage("--in", e))
}

fn emit_matrix(io: &mut Io, m: &FramedLinkMatrix) -> Result<(), Fail> {
    io.emit(m, || m.to_text())
}

fn emit_bool(io: &mut Io, key: &str, v: bool) -> Result<i32, Fail> {
    io.emit(&json!({ key: v }), || format!("{v}\n"))?;
    Ok(if v { EXIT_OK } else { EXIT_NEGATIVE })
}

fn kirby_cmd(op: KirbyOp, io: &mut Io) -> Result<i32, Fail> {
    match op {
        KirbyOp::Show { m } => emit_matrix(io, &load_matrix(&m)?)?,
        KirbyOp::Slide { m, component, over, sign } => {
            let out = load_matrix(&m)?.slide(component, over, sign).map_err(failed)?;
            emit_matrix(io, &out)?;
        }
        KirbyOp::BlowDown { m, component } => {
            let out = load_matrix(&m)?.blow_down(component).map_err(failed)?;
            emit_matrix(io, &out)?;
        }
        KirbyOp::AddUnlink { m, count } => emit_matrix(io, &load_matrix(&m)?.add_unlink(count))?,
        KirbyOp::AddHopf { m, count } => {
            let mut out = load_matrix(&m)?;
            for _ in 0..count {
                out = out.add_hopf_pair();
            }
            emit_matrix(io, &out)?;
        }
        KirbyOp::Det { m } => {
            let d = load_matrix(&m)?.det().map_err(failed)?;
            io.emit(&json!({ "det": d }), || format!("{d}\n"))?;
        }
        KirbyOp::Gpr { m } => {
            let v = load_matrix(&m)?.gpr_necessary_condition().map_err(failed)?;
            return emit_bool(io, "gpr_necessary_condition", v);
        }
        KirbyOp::WeakTrivial { m } => {
            return emit_bool(io, "weak_trivial_form", load_matrix(&m)?.is_weak_trivial_form());
        }
    }
    Ok(EXIT_OK)
}

fn labeling_arg(s: &Option<String>) -> Result<PunctureLabeling, Fail> {
    match s {
        Some(s) => s.parse().map_err(|e| usage("--labeling", e)),
        None => Ok(PunctureLabeling::default()),
    }
}

fn curve_line(r: &curves::CurveRow) -> String {
    format!("{}\t{}\t{}\t{}\n", r.slope, r.partition, r.z3_class, r.candidate)
}

fn curves_cmd(op: CurvesOp, io: &mut Io) -> Result<i32, Fail> {
    match op {
        CurvesOp::Enumerate { height, labeling, all } => {
            let lab = labeling_arg(&labeling)?;
            let slopes = if all {
                if height < 1 {
                    return Err(usage("--height", "must be at least 1"));
                }
                let mut v: Vec<Slope> = curves::all_slopes(height).collect();
                v.sort();
                v
            } else {
                curves::enumerate_candidates(height, &lab).map_err(|e| usage("--height", e))?
            };
            let rows: Vec<curves::CurveRow> = slopes.iter().map(|&s| curves::classify(s, &lab)).collect();
            let doc = json!({ "labeling": lab, "height": height, "curves": rows });
            io.emit(&doc, || {
                let mut t = String::from("slope\tpartition\tz3\tcandidate\n");
                rows.iter().for_each(|r| t.push_str(&curve_line(r)));
                t
            })?;
        }
        CurvesOp::Classify { slope, labeling } => {
            let lab = labeling_arg(&labeling)?;
            let s: Slope = slope.parse().map_err(|e| usage("--slope", e))?;
            let row = curves::classify(s, &lab);
            io.emit(&row, || curve_line(&row))?;
        }
    }
    Ok(EXIT_OK)
}
