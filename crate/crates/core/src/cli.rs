//! Command-line front end. Every subcommand prints one JSON document with a
//! schema version field `"v"`; `--pretty` switches to a human-readable
//! rendering instead.
//!
//! Exit codes: 0 success, 1 counterexample or not admissible, 2 invalid
//! input or usage, 3 enumeration budget exceeded.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::distraction::{polarize, DistractionMatrix};
use crate::error::{invalid, Error, Result};
use crate::groebner::{Ideal, PrimeField};
use crate::homology::{default_window, koszul_betti, local_coh_monomial, monomial_betti};
use crate::macaulay::lex_ideal_for_hf;
use crate::monomials::{HilbertFunction, MonomialIdeal, MonomialOrder};
use crate::shakin::ShakinIdeal;
use crate::verify::{self, case_rng, BaseRing, SampleSpec, VerificationReport, DEFAULT_BUDGET, DEFAULT_SEED};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "shakin", version, about = "Lex-embeddings, distractions and extremal Betti numbers over prime fields")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Number of variables (only needed where the input does not say).
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Characteristic of the coefficient field.
    #[arg(long = "char", global = true, default_value_t = PrimeField::DEFAULT_CHARACTERISTIC)]
    pub characteristic: u32,

    /// Truncation degree.
    #[arg(long, global = true)]
    pub dmax: Option<u32>,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Monomial order for printed Gröbner bases.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Degrevlex)]
    pub order: OrderArg,

    /// Degree window `jmin:jmax` for local cohomology.
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,

    /// Largest number of ideals an exhaustive check may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Record wall-clock time in verification reports (makes output
    /// run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Degrevlex,
}

impl OrderArg {
    fn order(self) -> MonomialOrder {
        match self {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        }
    }
}

fn parse_window(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected jmin:jmax, got `{s}`"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("bad jmin: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("bad jmax: {e}"))?;
    if a > b {
        return Err(format!("empty window {a}:{b}"));
    }
    Ok((a, b))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of A/I up to --dmax (default 10).
    Hilbert {
        /// Ideal as JSON or a path to a JSON file.
        #[arg(long)]
        ideal: String,
    },
    /// Lex-segment ideal of K[x1..xn] with the given Hilbert function.
    Lexify {
        /// Hilbert function as a JSON array, or a file holding `hilbert` output.
        #[arg(long)]
        hf: String,
    },
    /// Lex-embedding into a Shakin ring: from a Hilbert function or an ideal containing the base.
    Embed {
        #[arg(long)]
        shakin: String,
        #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
        hf: Option<String>,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Image of a monomial ideal under a distraction.
    Distract {
        #[arg(long)]
        ideal: String,
        /// Distraction matrix; a random one (seeded) when omitted.
        #[arg(long)]
        distraction: Option<String>,
        /// Stored depth of a random distraction.
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Polarization of a monomial ideal; with --distraction also its L-specialization.
    Polarize {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        distraction: Option<String>,
    },
    /// Graded Betti numbers of A/I for degrees up to --dmax (default 10).
    Betti {
        #[arg(long)]
        ideal: String,
    },
    /// Hilbert functions of the local cohomology of A/I (monomial I).
    Localcoh {
        #[arg(long)]
        ideal: String,
    },
    /// Run one of the verification checks.
    Verify {
        #[command(subcommand)]
        theorem: Theorem,
    },
}

#[derive(Debug, Args)]
pub struct BaseArgs {
    /// Shakin ideal defining the base ring.
    #[arg(long, conflicts_with = "base", required_unless_present = "base")]
    pub shakin: Option<String>,
    /// Arbitrary monomial base ideal (no structure check).
    #[arg(long)]
    pub base: Option<String>,
}

#[derive(Debug, Args)]
pub struct DistractedArgs {
    #[arg(long)]
    pub shakin: String,
    /// Distraction matrix; a random one (seeded) when omitted.
    #[arg(long)]
    pub distraction: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct SampledArgs {
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 4)]
    pub max_gens: usize,
    #[arg(long, default_value_t = 4)]
    pub max_degree: u32,
}

#[derive(Debug, Subcommand)]
pub enum Theorem {
    /// Every Hilbert function of an ideal containing the base is attained by its lex-embedding.
    MacaulayLex(BaseArgs),
    /// Lex-embeddings have the largest Betti numbers.
    BettiExtremal {
        #[command(flatten)]
        base: BaseArgs,
        /// Largest internal degree of the compared Betti numbers.
        #[arg(long)]
        betti_dmax: Option<u32>,
    },
    /// Lex-embeddings have the largest local cohomology.
    CohExtremal(BaseArgs),
    /// Ideals of a distracted Shakin ring have admissible Hilbert functions.
    DistractionHf(DistractedArgs),
    /// Distracted lex-embeddings are extremal (H^0, and Betti numbers when the pure-power part is zero).
    EpsilonDExtremal(DistractedArgs),
    /// Distraction preserves graded Betti numbers.
    BettiDistractionInvariance(SampledArgs),
    /// Distraction can only enlarge H^0.
    CodistraH0(SampledArgs),
}

/// Parses `argv` (including the program name) and runs it, writing the
/// result to stdout or `--out` and diagnostics to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cfg) {
        Ok(outcome) => {
            let mut text = outcome.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                let _ = writeln!(err, "error: {msg}");
                return 2;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoSuchIdeal { .. } | Error::NotAdmissible { .. } | Error::Internal(_) => 1,
        Error::InvalidInput(_) | Error::NotLex { .. } | Error::InvalidFamily { .. } => 2,
        Error::BudgetExceeded { .. } => 3,
    }
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn json(cfg: &CliConfig, command: &str, mut body: Value) -> Self {
        body["v"] = json!(SCHEMA_VERSION);
        body["command"] = json!(command);
        let text = if cfg.pretty {
            serde_json::to_string_pretty(&body)
        } else {
            serde_json::to_string(&body)
        };
        Outcome { text: text.expect("values serialize"), code: 0 }
    }

    fn pretty_or(cfg: &CliConfig, pretty: impl FnOnce() -> String, command: &str, body: Value) -> Self {
        if cfg.pretty {
            Outcome { text: pretty(), code: 0 }
        } else {
            Outcome::json(cfg, command, body)
        }
    }
}

/// Reads a JSON argument: inline if it looks like JSON, otherwise a path.
fn load_json(arg: &str) -> Result<Value> {
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::InvalidInput(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("bad JSON in {arg}: {e}")))
}

/// Unwraps the `"ideal"` field of a previous command's output.
fn unwrap_field(v: Value, key: &str) -> Value {
    match v {
        Value::Object(mut m) if m.contains_key(key) && m.contains_key("v") => m.remove(key).expect("key is present"),
        other => other,
    }
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::InvalidInput(format!("bad {what}: {e}")))
}

enum AnyIdeal {
    Monomial(MonomialIdeal),
    Polynomial(Ideal),
}

impl AnyIdeal {
    fn n(&self) -> usize {
        match self {
            AnyIdeal::Monomial(m) => m.n(),
            AnyIdeal::Polynomial(i) => i.n(),
        }
    }
}

fn load_ideal(arg: &str, cfg: &CliConfig) -> Result<AnyIdeal> {
    let mut v = unwrap_field(load_json(arg)?, "ideal");
    let monomial = v.get("gens").and_then(Value::as_array).is_some_and(|g| g.iter().all(Value::is_array));
    if monomial {
        return from_value(v, "monomial ideal").map(AnyIdeal::Monomial);
    }
    if let Value::Object(m) = &mut v {
        m.entry("char").or_insert(json!(cfg.characteristic));
    }
    from_value(v, "ideal").map(AnyIdeal::Polynomial)
}

fn load_monomial_ideal(arg: &str, cfg: &CliConfig) -> Result<MonomialIdeal> {
    match load_ideal(arg, cfg)? {
        AnyIdeal::Monomial(m) => Ok(m),
        AnyIdeal::Polynomial(i) => i.as_monomial().map_or_else(|| invalid("expected a monomial ideal"), Ok),
    }
}

fn load_shakin(arg: &str) -> Result<ShakinIdeal> {
    from_value(unwrap_field(load_json(arg)?, "shakin"), "Shakin ideal")
}

fn load_hf(arg: &str) -> Result<HilbertFunction> {
    from_value(unwrap_field(load_json(arg)?, "hf"), "Hilbert function")
}

fn field(cfg: &CliConfig) -> Result<PrimeField> {
    PrimeField::new(cfg.characteristic)
}

fn load_distraction(arg: Option<&str>, n: usize, depth: usize, cfg: &CliConfig) -> Result<DistractionMatrix> {
    let d: DistractionMatrix = match arg {
        Some(a) => from_value(unwrap_field(load_json(a)?, "distraction"), "distraction")?,
        None => DistractionMatrix::random(n, depth, field(cfg)?, &mut case_rng(cfg.seed, 0)),
    };
    if d.n() != n {
        return invalid(format!("distraction has {} rows, expected {n}", d.n()));
    }
    if let Some(sel) = d.validate().failing_selection {
        return invalid(format!("not a distraction: selection {sel:?} does not span the linear forms"));
    }
    Ok(d)
}

fn execute(cfg: &CliConfig) -> Result<Outcome> {
    match &cfg.command {
        Command::Hilbert { ideal } => {
            let dmax = cfg.dmax.unwrap_or(10) as usize;
            let i = load_ideal(ideal, cfg)?;
            let hf = match &i {
                AnyIdeal::Monomial(m) => m.hilbert_function(dmax),
                AnyIdeal::Polynomial(p) => p.hilbert_function(dmax),
            };
            let n = i.n();
            Ok(Outcome::pretty_or(
                cfg,
                || hf.values().iter().enumerate().map(|(d, h)| format!("{d:>4}  {h}\n")).collect(),
                "hilbert",
                json!({"n": n, "dmax": dmax, "hf": hf}),
            ))
        }
        Command::Lexify { hf } => {
            let h = load_hf(hf)?;
            let Some(n) = cfg.n else { return invalid("lexify needs --n") };
            let l = lex_ideal_for_hf(n, &h)?;
            Ok(Outcome::pretty_or(cfg, || format!("{l}\n"), "lexify", json!({"hf": h, "ideal": l})))
        }
        Command::Embed { shakin, hf, ideal } => {
            let a = load_shakin(shakin)?;
            let (h, l) = match (hf, ideal) {
                (Some(hf), _) => {
                    let h = load_hf(hf)?;
                    let dmax = cfg.dmax.map_or(h.dmax(), |d| d as usize);
                    let l = a.lex_embed(&h, dmax)?;
                    (h.truncate(dmax), l)
                }
                (None, Some(i)) => {
                    let i = load_monomial_ideal(i, cfg)?;
                    let dmax = cfg.dmax.unwrap_or(10) as usize;
                    (i.hilbert_function(dmax), a.embed_ideal(&i, dmax)?)
                }
                (None, None) => return invalid("embed needs --hf or --ideal"),
            };
            Ok(Outcome::pretty_or(cfg, || format!("{l}\n"), "embed", json!({"shakin": a, "hf": h, "ideal": l})))
        }
        Command::Distract { ideal, distraction, depth } => {
            let i = load_monomial_ideal(ideal, cfg)?;
            let d = load_distraction(distraction.as_deref(), i.n(), *depth, cfg)?;
            let j = d.distract_ideal(&i)?;
            let f = *d.field();
            let basis: Vec<String> = j.groebner_basis(&cfg.order.order()).iter().map(|g| g.display(&f)).collect();
            Ok(Outcome::pretty_or(
                cfg,
                || basis.iter().map(|g| format!("{g}\n")).collect(),
                "distract",
                json!({"source": i, "distraction": d, "ideal": j, "groebner_basis": basis, "order": format!("{:?}", cfg.order).to_lowercase()}),
            ))
        }
        Command::Polarize { ideal, distraction } => {
            let i = load_monomial_ideal(ideal, cfg)?;
            let p = polarize(&i);
            let mut body = json!({"source": i, "polarization": p});
            if let Some(d) = distraction {
                let d = load_distraction(Some(d), i.n(), 0, cfg)?;
                body["specialized"] = serde_json::to_value(p.specialize_l(&d)?).expect("ideals serialize");
            }
            Ok(Outcome::pretty_or(
                cfg,
                || format!("{} (in {} variables: {})\n", p.polarized, p.extended_n, p.variables.join(", ")),
                "polarize",
                body,
            ))
        }
        Command::Betti { ideal } => {
            let dmax = cfg.dmax.unwrap_or(10);
            let t = match load_ideal(ideal, cfg)? {
                AnyIdeal::Monomial(m) => monomial_betti(&m, dmax, &field(cfg)?),
                AnyIdeal::Polynomial(p) => koszul_betti(&p, dmax),
            };
            Ok(Outcome::pretty_or(cfg, || t.render(), "betti", json!({"betti": t})))
        }
        Command::Localcoh { ideal } => {
            let i = load_monomial_ideal(ideal, cfg)?;
            let window = cfg.window.unwrap_or_else(|| default_window(&i, cfg.dmax.unwrap_or(6) as i64));
            let t = local_coh_monomial(&i, (0, i.n()), window, &field(cfg)?)?;
            Ok(Outcome::pretty_or(cfg, || t.render(), "localcoh", json!({"local_cohomology": t})))
        }
        Command::Verify { theorem } => {
            let start = Instant::now();
            let mut report = run_theorem(theorem, cfg)?;
            if cfg.timing {
                report.runtime_ms = Some(start.elapsed().as_millis() as u64);
            }
            let code = if report.passed { 0 } else { 1 };
            let text = if cfg.pretty {
                render_report(&report)
            } else {
                let mut body = serde_json::to_value(&report).expect("reports serialize");
                body["v"] = json!(SCHEMA_VERSION);
                body["command"] = json!("verify");
                serde_json::to_string(&body).expect("values serialize")
            };
            Ok(Outcome { text, code })
        }
    }
}

fn load_base(args: &BaseArgs, cfg: &CliConfig) -> Result<BaseRing> {
    match (&args.shakin, &args.base) {
        (Some(s), _) => Ok(BaseRing::Shakin(load_shakin(s)?)),
        (None, Some(b)) => Ok(BaseRing::Unchecked(load_monomial_ideal(b, cfg)?)),
        (None, None) => invalid("need --shakin or --base"),
    }
}

fn sample_spec(args: &SampledArgs, cfg: &CliConfig) -> SampleSpec {
    SampleSpec {
        n: cfg.n.unwrap_or(3),
        samples: args.samples,
        max_gens: args.max_gens,
        max_degree: args.max_degree,
        dmax: cfg.dmax.unwrap_or(6),
        seed: cfg.seed,
    }
}

fn run_theorem(theorem: &Theorem, cfg: &CliConfig) -> Result<VerificationReport> {
    let dmax = cfg.dmax.unwrap_or(4);
    match theorem {
        Theorem::MacaulayLex(b) => verify::verify_macaulay_lex(&load_base(b, cfg)?, dmax, cfg.budget),
        Theorem::BettiExtremal { base, betti_dmax } => verify::verify_betti_extremal(
            &load_base(base, cfg)?,
            dmax,
            betti_dmax.unwrap_or(dmax + 1),
            field(cfg)?,
            cfg.budget,
        ),
        Theorem::CohExtremal(b) => {
            let base = load_base(b, cfg)?;
            let window = cfg.window.unwrap_or_else(|| default_window(base.ideal(), dmax as i64));
            verify::verify_coh_extremal(&base, dmax, window, field(cfg)?, cfg.budget)
        }
        Theorem::DistractionHf(a) | Theorem::EpsilonDExtremal(a) => {
            let s = load_shakin(&a.shakin)?;
            let d = load_distraction(a.distraction.as_deref(), s.n(), dmax as usize, cfg)?;
            if matches!(theorem, Theorem::DistractionHf(_)) {
                verify::verify_distraction_hf(&s, &d, dmax, a.samples, cfg.seed, cfg.budget)
            } else {
                verify::verify_epsilon_d_extremal(&s, &d, dmax, a.samples, cfg.seed, cfg.budget)
            }
        }
        Theorem::BettiDistractionInvariance(a) => Ok(verify::verify_betti_distraction_invariance(&sample_spec(a, cfg), field(cfg)?)),
        Theorem::CodistraH0(a) => Ok(verify::verify_codistra_h0(&sample_spec(a, cfg), field(cfg)?)),
    }
}

fn render_report(r: &VerificationReport) -> String {
    let mut s = format!(
        "{}: {} ({} cases, {} failures, {} findings)\n",
        r.theorem,
        if r.passed { "PASS" } else { "FAIL" },
        r.cases_checked,
        r.failures.len(),
        r.findings.len()
    );
    for n in &r.notices {
        s.push_str(&format!("  note: {n}\n"));
    }
    for n in &r.not_attempted {
        s.push_str(&format!("  not attempted: {n}\n"));
    }
    if let Some(f) = r.failures.first() {
        s.push_str(&format!("  first failure: {f}\n"));
    }
    if let Some(ms) = r.runtime_ms {
        s.push_str(&format!("  runtime: {ms} ms\n"));
    }
    s
}
