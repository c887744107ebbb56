use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use schub_core::ring::Value;
use schub_core::root_weyl::{element_of_word, enumerate_group};
use schub_core::schubert::{
    bs_restriction, bs_structure_constant, recursion_c, restriction_h_word, restriction_k_word,
    structure_constant_h_word, structure_constant_k_word, HVariant, KBasis, PointClass, RecursionSolver, Theory,
    WordIndex,
};
use schub_core::{CartanData, Subword, WeylElement, Word};

use crate::error::{CliError, Result};
use crate::input::{element_of_perm, parse_gcm, parse_mask, parse_word};
use crate::suites::{run_suite, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

/// Environment variable giving the worker count when `--threads` is absent.
pub const THREADS_ENV: &str = "SCHUB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "schub", version, about = "Equivariant Schubert structure constants and their checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for batch work.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
struct CartanArgs {
    /// Built-in type such as A3, B2, C3, D4, G2.
    #[arg(long = "type", conflicts_with = "gcm")]
    kind: Option<String>,
    /// File holding a generalized Cartan matrix.
    #[arg(long)]
    gcm: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct ElementArgs {
    /// u as a word of 1-based generator indices, e.g. "1 2".
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// v as a word.
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    /// w as a word (the word the formula runs over).
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    /// u in one-line notation, type A only.
    #[arg(long, conflicts_with = "u")]
    u_perm: Option<String>,
    #[arg(long, conflicts_with = "v")]
    v_perm: Option<String>,
    #[arg(long, conflicts_with = "w")]
    w_perm: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Ddr,
    Rdd,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology structure constant c_{uv}^w; --w must be a reduced word.
    C {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        elems: ElementArgs,
        #[arg(long, value_enum, default_value_t = VariantArg::Ddr)]
        variant: VariantArg,
    },
    /// K-theory structure constant a_{uv}^w in the ideal-sheaf basis; --w may
    /// be any word with Demazure product w.
    A {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        elems: ElementArgs,
    },
    /// K-theory structure constant in the structure-sheaf basis.
    A0 {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        elems: ElementArgs,
    },
    /// Restriction of the class of v to the fixed point w.
    Restrict {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        elems: ElementArgs,
        /// h, k-ideal or k-structure.
        #[arg(long, default_value = "h")]
        theory: String,
    },
    /// Bott-Samelson structure constant of R, S at J, or with --at the
    /// restriction of the class of J to the fixed point L.
    Bs {
        #[command(flatten)]
        cartan: CartanArgs,
        /// The ambient word.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "h")]
        theory: String,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        s: Option<String>,
        /// Defaults to the whole word.
        #[arg(long)]
        j: Option<String>,
        #[arg(long)]
        at: Option<String>,
    },
    /// Cohomology structure constant by the descent recursion.
    Recurse {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        elems: ElementArgs,
        /// 1-based left descent of w to recurse on; the smallest by default.
        #[arg(long)]
        alpha: Option<usize>,
    },
    /// All nonzero structure constants, streamed in length-lex order of w.
    Table {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, default_value = "h")]
        theory: String,
        #[arg(long, default_value_t = 5000)]
        limit: usize,
    },
    /// Run verification suites and report pass/fail per check.
    Verify {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rational points per word for the pairing checks.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Longest word for the pairing checks.
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 200)]
        random_triples: usize,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn cartan(a: &CartanArgs) -> Result<Option<CartanData>> {
    match (&a.kind, &a.gcm) {
        (Some(t), _) => Ok(Some(CartanData::from_type_name(t)?)),
        (None, Some(p)) => {
            let text =
                std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
            Ok(Some(parse_gcm(&p.display().to_string(), &text)?))
        }
        (None, None) => Ok(None),
    }
}

fn require(a: &CartanArgs) -> Result<CartanData> {
    cartan(a)?.ok_or_else(|| CliError::Usage("one of --type or --gcm is required".into()))
}

/// An element from `--x` or `--x-perm`, with the word when one was given.
fn element(c: &CartanData, name: &str, word: &Option<String>, perm: &Option<String>) -> Result<(WeylElement, Word)> {
    match (word, perm) {
        (Some(t), _) => {
            let q = parse_word(c, &format!("--{name}"), t)?;
            Ok((element_of_word(c, &q)?, q))
        }
        (None, Some(p)) => {
            let w = element_of_perm(c, &format!("--{name}-perm"), p)?;
            let q = w.word().clone();
            Ok((w, q))
        }
        (None, None) => Err(CliError::Usage(format!("one of --{name} or --{name}-perm is required"))),
    }
}

fn one_based(q: &Word) -> Vec<usize> {
    q.letters().iter().map(|l| l + 1).collect()
}

/// The JSON form of a value: its ring, printed form and terms.
pub fn value_json(v: &Value) -> serde_json::Value {
    let (ring, terms): (&str, Vec<serde_json::Value>) = match v {
        Value::H(p) => (
            "H",
            p.terms().rev().map(|(e, k)| serde_json::json!({ "exponents": e, "coefficient": k.to_string() })).collect(),
        ),
        Value::K(p) => (
            "K",
            p.terms().rev().map(|(e, k)| serde_json::json!({ "exponents": e, "coefficient": k.to_string() })).collect(),
        ),
    };
    serde_json::json!({ "ring": ring, "value": v.to_string(), "terms": terms })
}

struct Answer {
    command: &'static str,
    cartan: CartanData,
    fields: Vec<(&'static str, serde_json::Value)>,
    value: Value,
}

impl Answer {
    fn write(&self, format: Format, out: &mut (dyn Write + Send)) -> std::io::Result<()> {
        match format {
            Format::Text => writeln!(out, "{}", self.value),
            Format::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert("command".into(), self.command.into());
                obj.insert("cartan".into(), cartan_json(&self.cartan));
                for (k, v) in &self.fields {
                    obj.insert((*k).into(), v.clone());
                }
                if let serde_json::Value::Object(m) = value_json(&self.value) {
                    obj.extend(m);
                }
                writeln!(out, "{}", serde_json::Value::Object(obj))
            }
        }
    }
}

fn cartan_json(c: &CartanData) -> serde_json::Value {
    let rows: Vec<&[i64]> = (0..c.rank()).map(|i| c.row(i)).collect();
    serde_json::json!({ "name": c.name(), "rank": c.rank(), "matrix": rows })
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io { path: "<stdout>".into(), source: e }
}

fn theory(s: &str) -> Result<Theory> {
    Ok(s.parse::<Theory>()?)
}

fn triple_fields(u: &Word, v: &Word, w: &Word) -> Vec<(&'static str, serde_json::Value)> {
    vec![("u", one_based(u).into()), ("v", one_based(v).into()), ("w", one_based(w).into())]
}

fn dispatch(cmd: Command, format: Format, out: &mut (dyn Write + Send)) -> Result<i32> {
    let answer = match cmd {
        Command::C { cartan, elems, variant } => {
            let c = require(&cartan)?;
            let (u, uq) = element(&c, "u", &elems.u, &elems.u_perm)?;
            let (v, vq) = element(&c, "v", &elems.v, &elems.v_perm)?;
            let (_, q) = element(&c, "w", &elems.w, &elems.w_perm)?;
            let variant = match variant {
                VariantArg::Ddr => HVariant::Ddr,
                VariantArg::Rdd => HVariant::Rdd,
            };
            let value = Value::H(structure_constant_h_word(&c, &u, &v, &q, variant)?);
            Answer { command: "c", fields: triple_fields(&uq, &vq, &q), cartan: c, value }
        }
        Command::A { cartan, elems } => k_constant(&cartan, &elems, KBasis::Ideal)?,
        Command::A0 { cartan, elems } => k_constant(&cartan, &elems, KBasis::Structure)?,
        Command::Restrict { cartan, elems, theory: t } => {
            let c = require(&cartan)?;
            let (v, vq) = element(&c, "v", &elems.v, &elems.v_perm)?;
            let (_, q) = element(&c, "w", &elems.w, &elems.w_perm)?;
            let t = theory(&t)?;
            let value = match t.k_basis() {
                None => Value::H(restriction_h_word(&c, &v, &q)?),
                Some(b) => Value::K(restriction_k_word(&c, &v, &q, b)?),
            };
            let fields = vec![("theory", t.name().into()), ("v", one_based(&vq).into()), ("w", one_based(&q).into())];
            Answer { command: "restrict", cartan: c, fields, value }
        }
        Command::Bs { cartan, q, theory: t, r, s, j, at } => {
            let c = require(&cartan)?;
            let q = parse_word(&c, "--q", &q)?;
            let t = theory(&t)?;
            let j = match &j {
                Some(m) => parse_mask(&q, "--j", m)?,
                None => Subword::full(q.len()),
            };
            let mut fields =
                vec![("theory", t.name().into()), ("q", one_based(&q).into()), ("j", j.to_string().into())];
            let value = match at {
                Some(l) => {
                    let l = parse_mask(&q, "--at", &l)?;
                    let class = match t {
                        Theory::H => PointClass::T,
                        Theory::KIdeal => PointClass::Tau,
                        Theory::KStructure => PointClass::TauCirc,
                    };
                    fields.push(("at", l.to_string().into()));
                    bs_restriction(&c, &q, &j, &l, class)?
                }
                None => {
                    let need = |m: &Option<String>, name: &str| {
                        m.as_deref()
                            .ok_or_else(|| CliError::Usage(format!("--{name} is required without --at")))
                            .and_then(|m| parse_mask(&q, &format!("--{name}"), m))
                    };
                    let (r, s) = (need(&r, "r")?, need(&s, "s")?);
                    fields.push(("r", r.to_string().into()));
                    fields.push(("s", s.to_string().into()));
                    bs_structure_constant(&c, &q, &r, &s, &j, t)?
                }
            };
            Answer { command: "bs", cartan: c, fields, value }
        }
        Command::Recurse { cartan, elems, alpha } => {
            let c = require(&cartan)?;
            let (u, uq) = element(&c, "u", &elems.u, &elems.u_perm)?;
            let (v, vq) = element(&c, "v", &elems.v, &elems.v_perm)?;
            let (w, wq) = element(&c, "w", &elems.w, &elems.w_perm)?;
            let h = match alpha {
                Some(0) => return Err(CliError::Usage("--alpha is 1-based".into())),
                Some(a) => recursion_c(&c, &u, &v, &w, a - 1)?,
                None => RecursionSolver::new(&c).solve(&u, &v, &w),
            };
            Answer { command: "recurse", fields: triple_fields(&uq, &vq, &wq), cartan: c, value: Value::H(h) }
        }
        Command::Table { cartan, theory: t, limit } => {
            let c = require(&cartan)?;
            table(&c, theory(&t)?, limit, format, out)?;
            return Ok(EXIT_OK);
        }
        Command::Verify { cartan: ca, suite, seed, samples, max_len, random_triples, report } => {
            let opts = VerifyOptions { cartan: cartan(&ca)?, seed, samples, max_len, random_triples };
            let rep = run_suite(suite, &opts);
            let json = rep.to_json();
            match format {
                Format::Json => writeln!(out, "{json}").map_err(io)?,
                Format::Text => {
                    for check in &rep.checks {
                        writeln!(out, "{check}").map_err(io)?;
                    }
                    let verdict = if rep.passed() { "PASS" } else { "FAIL" };
                    writeln!(out, "{verdict} suite {} (seed {seed})", suite.name()).map_err(io)?;
                }
            }
            if let Some(p) = report {
                std::fs::write(&p, format!("{json:#}\n"))
                    .map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
            }
            return Ok(if rep.passed() { EXIT_OK } else { EXIT_VERIFY });
        }
    };
    answer.write(format, out).map_err(io)?;
    Ok(EXIT_OK)
}

fn k_constant(cartan: &CartanArgs, elems: &ElementArgs, basis: KBasis) -> Result<Answer> {
    let c = require(cartan)?;
    let (u, uq) = element(&c, "u", &elems.u, &elems.u_perm)?;
    let (v, vq) = element(&c, "v", &elems.v, &elems.v_perm)?;
    let (_, q) = element(&c, "w", &elems.w, &elems.w_perm)?;
    let value = Value::K(structure_constant_k_word(&c, &u, &v, &q, basis)?);
    let command = if basis == KBasis::Ideal { "a" } else { "a0" };
    Ok(Answer { command, fields: triple_fields(&uq, &vq, &q), cartan: c, value })
}

fn table(c: &CartanData, t: Theory, limit: usize, format: Format, out: &mut (dyn Write + Send)) -> Result<()> {
    let g = enumerate_group(c, limit)?;
    for w in &g {
        let idx = WordIndex::new(c, w.word())?;
        let pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|i| (0..g.len()).map(move |j| (i, j))).collect();
        let values: Vec<Value> =
            pairs.par_iter().map(|&(i, j)| idx.value(c, &g[i], &g[j], t)).collect::<schub_core::Result<_>>()?;
        for (&(i, j), val) in pairs.iter().zip(&values) {
            if val.is_zero() {
                continue;
            }
            let (u, v) = (&g[i], &g[j]);
            match format {
                Format::Text => writeln!(out, "u=[{}] v=[{}] w=[{}]: {val}", u.word(), v.word(), w.word()),
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("theory".into(), t.name().into());
                    for (k, x) in triple_fields(u.word(), v.word(), w.word()) {
                        obj.insert(k.into(), x);
                    }
                    if let serde_json::Value::Object(m) = value_json(val) {
                        obj.extend(m);
                    }
                    writeln!(out, "{}", serde_json::Value::Object(obj))
                }
            }
            .map_err(io)?;
        }
        out.flush().map_err(io)?;
    }
    Ok(())
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(THREADS_ENV) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a number, found {s:?}"))),
        Err(_) => Ok(None),
    }
}

/// Runs the command line `args` and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let done = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = if done { write!(out, "{e}") } else { write!(err, "{e}") };
            return if done { EXIT_OK } else { EXIT_DOMAIN };
        }
    };
    let result = thread_count(cli.threads).and_then(|n| {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = n {
            b = b.num_threads(n);
        }
        let pool = b.build().map_err(|e| CliError::Usage(e.to_string()))?;
        pool.install(|| dispatch(cli.cmd, cli.format, out))
    });
    match result {
        Ok(code) => code,
        Err(CliError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
