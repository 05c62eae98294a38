//! Command-line driver.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input, 3 height cap.

pub mod cache;
pub mod spec;
pub mod verify;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::canonical::Canonical;
use crate::error::{Error, Result};
use crate::monomial::Monomials;
use crate::par::{self, Mode};
use crate::pbw::{ExponentVector, Pbw, PathChoice};
use crate::qcoeff::RatFunc;
use crate::rootdata::{build_root_system, first_block_length, word_i, word_j, LieType};
use crate::ualgebra::{UAlgebra, UElement};

use verify::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Words,
    Serre,
    Dims,
    Lemma21,
    Theorem1,
    Canonical,
}

#[derive(Debug, Parser)]
#[command(name = "uqplus", version, about = "PBW, monomial and canonical bases of U_q(g)^+")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Family letter (A-G), or a full name such as B3.
    #[arg(long = "type", global = true)]
    pub lie: Option<String>,
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Weight as comma-separated coordinates, e.g. 1,1.
    #[arg(long, global = true)]
    pub weight: Option<String>,
    /// Exponent vector as comma-separated entries.
    #[arg(long, global = true)]
    pub c: Option<String>,
    /// Word-length cap for word-model computations.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads (0 = all cores, 1 = sequential).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub max_height: Option<u32>,
    #[arg(long, global = true)]
    pub max_total: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots, symmetrizers, the words j and i and the convex order.
    Roots,
    /// PBW coordinates of a product such as "E1 E2^(2)".
    PbwExpand { element: String },
    /// f(c) with its triangularity report (--c), or the basis matrix of a weight (--weight).
    Monomial,
    /// Canonical basis elements at a weight (--weight) or for one exponent vector (--c).
    Canonical,
    /// Runs a property suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

/// Error class to exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::HeightCapExceeded { .. } => 3,
        Error::BadInput(_)
        | Error::Root(_)
        | Error::LengthMismatch(..)
        | Error::UnsupportedType(_)
        | Error::NotInUPlus
        | Error::Coeff(_) => 2,
        _ => 1,
    }
}

pub struct Output {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

struct Session {
    mono: Arc<Monomials>,
    canon: Canonical,
    cache: Option<PathBuf>,
}

impl Session {
    fn open(cli: &Cli, t: LieType) -> Result<Self> {
        let alg = match cli.cap {
            Some(cap) => UAlgebra::with_cap(t, cap),
            None => UAlgebra::new(t),
        };
        let mode = if cli.jobs == 1 { Mode::Sequential } else { Mode::default_mode() };
        let pbw = Arc::new(Pbw::with_options(Arc::new(alg), mode, PathChoice::Shortest)?);
        let mono = Arc::new(Monomials::new(pbw)?);
        let cache = cli.cache_dir.as_ref().map(|d| cache::path_for(d, t));
        if let Some(p) = &cache {
            cache::load(p, &mono);
        }
        Ok(Session { canon: Canonical::new(mono.clone()), mono, cache })
    }

    fn save(&self) -> Result<()> {
        if let Some(p) = &self.cache {
            cache::write(p, &cache::collect(&self.mono))?;
        }
        Ok(())
    }
}

fn lie_type(cli: &Cli) -> Result<Option<LieType>> {
    let Some(s) = &cli.lie else {
        return match cli.rank {
            Some(_) => Err(Error::BadInput("--rank needs --type".into())),
            None => Ok(None),
        };
    };
    let name = match (s.chars().any(|c| c.is_ascii_digit()), cli.rank) {
        (true, None) => s.clone(),
        (true, Some(_)) => return Err(Error::BadInput("give the rank either in --type or in --rank".into())),
        (false, Some(r)) => format!("{s}{r}"),
        (false, None) => return Err(Error::BadInput(format!("--type {s} needs --rank"))),
    };
    Ok(Some(LieType::parse(&name.to_uppercase())?))
}

fn need_type(cli: &Cli) -> Result<LieType> {
    lie_type(cli)?.ok_or_else(|| Error::BadInput("--type is required".into()))
}

fn vector(opt: &Option<String>, flag: &str) -> Result<Vec<u32>> {
    let s = opt.as_ref().ok_or_else(|| Error::BadInput(format!("--{flag} is required")))?;
    spec::parse_vector(s)
}

fn fmt_vec(v: &[u32]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn fmt_word(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_roots(cli: &Cli) -> Result<Output> {
    let t = need_type(cli)?;
    let rs = build_root_system(t);
    let (j, i) = (word_j(t), word_i(t));
    let order = crate::rootdata::validate_convex_order(&rs, &i)?;
    let l = first_block_length(&rs);
    let json = json!({
        "type": t.to_string(),
        "rank": t.rank,
        "d": rs.d,
        "positive_roots": rs.positive_roots,
        "word_j": j,
        "word_i": i,
        "betas": order.betas,
        "first_block_length": l,
    });
    let mut text = format!("{t}: {} positive roots, d = {:?}\n", rs.positive_roots.len(), rs.d);
    text += &format!("j = {}\ni = {}\n", fmt_word(&j), fmt_word(&i));
    for (t, b) in order.betas.iter().enumerate() {
        text += &format!("  β_{} = {}\n", t + 1, fmt_vec(b));
    }
    text += &format!("first block length {l}\n");
    Ok(Output { json, text, ok: true })
}

fn element(s: &Session, spec_str: &str) -> Result<UElement> {
    let alg = &s.mono.pbw.alg;
    let factors = spec::parse_element(spec_str)?;
    let mut x = UElement::one(alg.rank());
    for f in factors {
        if f.node == 0 || f.node > alg.rank() {
            return Err(Error::BadInput(format!("node {} out of range 1..={}", f.node, alg.rank())));
        }
        let y = if f.divided {
            alg.divided_power(f.node, f.exp)?
        } else {
            alg.e_word(&vec![f.node as u8; f.exp as usize])?
        };
        x = alg.multiply(&x, &y)?;
    }
    Ok(x)
}

fn expansion_json(coeffs: &std::collections::BTreeMap<ExponentVector, RatFunc>) -> (Value, String, bool) {
    let integral = coeffs.values().all(|x| x.is_laurent());
    let mut terms = Vec::new();
    let mut text = String::new();
    for (c, x) in coeffs {
        let coeff = match x.to_laurent() {
            Ok(l) => serde_json::to_value(&l),
            Err(_) => serde_json::to_value(x),
        }
        .expect("coefficients serialize");
        terms.push(json!({"c": c, "coeff": coeff}));
        text += &format!("  {} : {}\n", fmt_vec(c), x);
    }
    (Value::Array(terms), text, integral)
}

fn cmd_pbw_expand(cli: &Cli, element_spec: &str) -> Result<Output> {
    let s = Session::open(cli, need_type(cli)?)?;
    let x = element(&s, element_spec)?;
    let e = s.mono.pbw.pbw_expand(&x)?;
    let (terms, body, integral) = expansion_json(&e.coeffs);
    s.save()?;
    let json = json!({
        "type": s.mono.pbw.alg.lie().to_string(),
        "element": element_spec,
        "weight": e.weight,
        "integral": integral,
        "terms": terms,
    });
    let text = format!("{element_spec} in weight {}{}:\n{body}", fmt_vec(&e.weight), if integral { "" } else { " (not integral)" });
    Ok(Output { json, text, ok: true })
}

fn cmd_monomial(cli: &Cli) -> Result<Output> {
    let s = Session::open(cli, need_type(cli)?)?;
    let m = &s.mono;
    let out = if cli.c.is_some() {
        let c = vector(&cli.c, "c")?;
        let (k, source) = m.f(&c)?;
        let rep = m.verify_triangular(&c, &k)?;
        let mut text = format!("f{} = {} ({})\n", fmt_vec(&c), fmt_vec(&k), format!("{source:?}").to_lowercase());
        text += &format!("leading_ok {} integral {}\n", rep.leading_ok, rep.integral);
        for h in &rep.higher {
            text += &format!("  {} : {}\n", fmt_vec(&h.d), h.coeff);
        }
        let ok = rep.passed();
        let mut json = serde_json::to_value(&rep).expect("report serializes");
        json["source"] = serde_json::to_value(source).expect("plain enum");
        Output { json, text, ok }
    } else {
        let nu = vector(&cli.weight, "weight")?;
        let b = m.monomial_basis_matrix(&nu)?;
        let mut text = format!("weight {}: {} rows, unitriangular {}\n", fmt_vec(&nu), b.labels.len(), b.unitriangular);
        for (c, row) in b.labels.iter().zip(&b.entries) {
            text += &format!("  {} : [{}]\n", fmt_vec(c), row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        }
        let ok = b.unitriangular;
        Output { json: serde_json::to_value(&b).expect("matrix serializes"), text, ok }
    };
    s.save()?;
    Ok(out)
}

fn cmd_canonical(cli: &Cli) -> Result<Output> {
    let s = Session::open(cli, need_type(cli)?)?;
    let elements = match &cli.c {
        Some(_) => vec![s.canon.canonical_b(&vector(&cli.c, "c")?)?],
        None => s.canon.canonical_basis_at_weight(&vector(&cli.weight, "weight")?)?,
    };
    let mut ok = true;
    let mut items = Vec::new();
    let mut text = String::new();
    for b in &elements {
        let cert = s.canon.verify_canonical(b);
        ok &= cert.passed();
        let mut v = serde_json::to_value(b).expect("element serializes");
        v["certificate"] = serde_json::to_value(&cert).expect("certificate serializes");
        items.push(v);
        text += &format!("b_{} {}\n", fmt_vec(&b.c), if cert.passed() { "certified" } else { "FAILED" });
        if let Some(f) = &cert.failure {
            text += &format!("  {f}\n");
        }
        for (d, x) in &b.expansion.coeffs {
            text += &format!("  {} : {}\n", fmt_vec(d), x);
        }
        for corr in &b.corrections {
            text += &format!("  corrected by {} · M_f{}\n", corr.xi_prime, fmt_vec(&corr.ck));
        }
    }
    s.save()?;
    Ok(Output { json: json!({"type": s.mono.pbw.alg.lie().to_string(), "elements": items}), text, ok })
}

fn cmd_verify(cli: &Cli, suite: Suite) -> Result<Output> {
    let checks: Vec<Check> = match suite {
        Suite::Words => {
            let types = match lie_type(cli)? {
                Some(t) => vec![t],
                None => verify::CATALOGUE.iter().map(|s| LieType::parse(s).expect("catalogue types parse")).collect(),
            };
            verify::words(&types)
        }
        _ => {
            let s = Session::open(cli, need_type(cli)?)?;
            let checks = match suite {
                Suite::Serre => verify::serre(&s.mono)?,
                Suite::Dims => verify::dims(&s.mono, cli.max_height.unwrap_or(6))?,
                Suite::Lemma21 => verify::lemma21(&s.mono, cli.max_total.unwrap_or(3))?,
                Suite::Theorem1 => verify::theorem1(&s.mono, &s.canon, cli.max_total.unwrap_or(3), cli.seed, 8)?,
                Suite::Canonical => verify::canonical(&s.canon, cli.max_height.unwrap_or(4))?,
                Suite::Words => unreachable!(),
            };
            s.save()?;
            checks
        }
    };
    let ok = checks.iter().all(|c| c.passed);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let name = format!("{suite:?}").to_lowercase();
    let mut text = String::new();
    for c in &checks {
        text += &format!("{} {}{}\n", if c.passed { "ok  " } else { "FAIL" }, c.name, if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) });
    }
    text += &format!("{name}: {} checks, {failed} failed\n", checks.len());
    Ok(Output { json: json!({"suite": name, "passed": ok, "checks": checks}), text, ok })
}

pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Roots => cmd_roots(cli),
        Command::PbwExpand { element } => cmd_pbw_expand(cli, element),
        Command::Monomial => cmd_monomial(cli),
        Command::Canonical => cmd_canonical(cli),
        Command::Verify { suite } => cmd_verify(cli, *suite),
    }
}

#[derive(Serialize)]
struct ErrorJson {
    error: String,
    exit_code: i32,
}

/// Runs the CLI on `args`, writing to stdout/stderr; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = par::with_jobs(cli.jobs, || execute(&cli));
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json output")),
                Format::Text => print!("{}", out.text),
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&ErrorJson { error: e.to_string(), exit_code: code }).expect("json output")
                ),
                Format::Text => eprintln!("error: {e}"),
            }
            code
        }
    }
}
