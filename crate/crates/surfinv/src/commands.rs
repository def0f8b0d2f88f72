//! Command-line interface. Every command renders its whole output into a
//! string so that runs are reproducible and testable without a process.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use surfinv_core::braid::{commute, parse_braid, BraidWord, FreeWord};
use surfinv_core::chart::{build_movie, validate_movie, MovieLimits, TorusChartMovie};
use surfinv_core::group::{
    abelianization, certify_free_abelian, link_group, AbelianInvariants, FreeAbelianVerdict, KbLimits, Refutation,
};
use surfinv_core::quandle::{validate_cocycle, validate_quandle, Cocycle3, LaurentPoly, Quandle};
use surfinv_core::triple::{SweepSetup, Verdict};
use surfinv_core::GroupPresentation;

use crate::formats::{
    builtin_cocycle, builtin_quandle, CaseReportJson, CocycleJson, LaurentJson, MovieJson, PresentationJson,
    QuandleJson,
};
use crate::{sweep, Error};

#[derive(Debug, Parser)]
#[command(name = "surfinv", version, about = "Invariants of torus-covering T^2-links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Link group presentation, abelianization and free-abelian certificate.
    Group(GroupArgs),
    /// Quandle cocycle invariant of the chart built from the braids.
    Invariant(InvariantArgs),
    /// The chart movie from b·a to a·b.
    Movie(BraidArgs),
    /// Exhaustive lower bound on the triple point number.
    TripleBound(TripleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct BraidArgs {
    #[arg(long)]
    pub degree: usize,
    /// Signed generator indices, e.g. "1 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    /// JSON file with `movie` and `kb` search limits.
    #[arg(long)]
    pub limits: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(flatten)]
    pub braids: BraidArgs,
    /// Rank to certify; defaults to the rank of the abelianization.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    #[command(flatten)]
    pub braids: BraidArgs,
    /// `builtin:T<n>`, `builtin:R<n>` or a quandle JSON file.
    #[arg(long, default_value = "builtin:T3")]
    pub quandle: String,
    /// `builtin:theta_z`, `builtin:theta_x`, `builtin:zero` or a cocycle JSON file.
    #[arg(long, default_value = "builtin:theta_z")]
    pub cocycle: String,
    /// Use this movie file instead of searching for one.
    #[arg(long)]
    pub movie: Option<String>,
    /// Print the white-vertex table of every coloring.
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    /// Largest number of triple points to rule out.
    #[arg(long, default_value_t = 3)]
    pub max: usize,
    /// List every surviving case.
    #[arg(long)]
    pub cases: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// What a command printed and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub code: i32,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct MovieLimitsJson {
    pub max_word_len: Option<usize>,
    pub max_slack: Option<usize>,
    pub max_states: Option<usize>,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct KbLimitsJson {
    pub max_rules: Option<usize>,
    pub max_len: Option<usize>,
    pub max_pending: Option<usize>,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct LimitsJson {
    pub movie: MovieLimitsJson,
    pub kb: KbLimitsJson,
}

impl LimitsJson {
    pub fn movie_limits(&self) -> MovieLimits {
        let d = MovieLimits::default();
        MovieLimits {
            max_word_len: self.movie.max_word_len.or(d.max_word_len),
            max_slack: self.movie.max_slack.unwrap_or(d.max_slack),
            max_states: self.movie.max_states.unwrap_or(d.max_states),
        }
    }

    pub fn kb_limits(&self) -> KbLimits {
        let d = KbLimits::default();
        KbLimits {
            max_rules: self.kb.max_rules.unwrap_or(d.max_rules),
            max_len: self.kb.max_len.unwrap_or(d.max_len),
            max_pending: self.kb.max_pending.unwrap_or(d.max_pending),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Error> {
    let text = std::fs::read_to_string(Path::new(path))
        .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{path}: {e}")))
}

fn limits(args: &BraidArgs) -> Result<LimitsJson, Error> {
    args.limits.as_deref().map(read_json).transpose().map(Option::unwrap_or_default)
}

fn braids(args: &BraidArgs) -> Result<(BraidWord, BraidWord), Error> {
    let parse = |s: &str| parse_braid(&s.replace(',', " "), args.degree);
    Ok((parse(&args.a)?, parse(&args.b)?))
}

pub fn load_quandle(spec: &str) -> Result<Quandle, Error> {
    let q = match spec.strip_prefix("builtin:") {
        Some(name) => builtin_quandle(name)?,
        None => read_json::<QuandleJson>(spec)?.to_quandle()?,
    };
    if let Err(v) = validate_quandle(&q) {
        return Err(Error::Input(format!("not a quandle: {:?}", v[0])));
    }
    Ok(q)
}

pub fn load_cocycle(spec: &str, q: &Quandle) -> Result<Cocycle3, Error> {
    let c = match spec.strip_prefix("builtin:") {
        Some(name) => builtin_cocycle(name, q)?,
        None => read_json::<CocycleJson>(spec)?.to_cocycle(q)?,
    };
    if let Err(v) = validate_cocycle(&c) {
        return Err(Error::Input(format!("not a 3-cocycle: {:?}", v[0])));
    }
    Ok(c)
}

fn word_text(w: &FreeWord) -> String {
    if w.is_identity() {
        return "1".into();
    }
    w.letters()
        .iter()
        .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
        .collect::<Vec<_>>()
        .join(" ")
}

fn presentation_text(p: &GroupPresentation) -> String {
    let gens: Vec<String> = (1..=p.generator_count()).map(|j| format!("x{j}")).collect();
    let rels: Vec<String> = p.relators().iter().map(word_text).collect();
    format!("<{} | {}>", gens.join(", "), rels.join(", "))
}

fn abelian_text(ab: &AbelianInvariants) -> String {
    let mut parts = Vec::new();
    if ab.rank > 0 {
        parts.push(format!("Z^{}", ab.rank));
    }
    parts.extend(ab.torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Group(args) => cmd_group(args),
        Command::Invariant(args) => cmd_invariant(args),
        Command::Movie(args) => cmd_movie(args),
        Command::TripleBound(args) => cmd_triple_bound(args),
    }
}

const NOT_COMMUTING: &str = "warning: braids do not commute";

pub fn cmd_group(args: &GroupArgs) -> Result<Output, Error> {
    let (a, b) = braids(&args.braids)?;
    let lim = limits(&args.braids)?;
    let mut out = Output::default();
    if !commute(&a, &b)? {
        out.warnings.push(NOT_COMMUTING.into());
    }
    let p = link_group(&a, &b)?;
    let ab = abelianization(&p);
    let rank = args.rank.unwrap_or(ab.rank);
    let verdict = certify_free_abelian(&p, rank, &lim.kb_limits());
    let (status, detail) = match &verdict {
        FreeAbelianVerdict::Certified(c) => {
            if !c.verify(&p) {
                return Err(Error::Invariant("certificate failed re-verification".into()));
            }
            ("certified", format!("free abelian of rank {rank} ({} rewriting rules)", c.system.rule_count()))
        }
        FreeAbelianVerdict::Refuted(Refutation::Abelianization(ab)) => {
            ("refuted", format!("abelianization is {}, not Z^{rank}", abelian_text(ab)))
        }
        FreeAbelianVerdict::Refuted(Refutation::NonCommuting { i, j, normal_form }) => (
            "refuted",
            format!("[x{i}, x{j}] has normal form {}", word_text(&FreeWord::from_letters(normal_form.iter().copied()))),
        ),
        FreeAbelianVerdict::Inconclusive(e) => {
            out.code = 2;
            (
                "inconclusive",
                format!("completion stopped ({:?}) with {} rules after {} equations", e.reason, e.rules, e.processed),
            )
        }
    };
    match args.braids.format {
        Format::Text => {
            let s = &mut out.stdout;
            writeln!(s, "presentation: {}", presentation_text(&p)).unwrap();
            writeln!(s, "abelianization: {}", abelian_text(&ab)).unwrap();
            writeln!(s, "certificate: {status}: {detail}").unwrap();
        }
        Format::Json => {
            let rules = match &verdict {
                FreeAbelianVerdict::Certified(c) => Some(c.system.rules()),
                _ => None,
            };
            let v = json!({
                "presentation": PresentationJson::from(&p),
                "abelianization": {
                    "rank": ab.rank,
                    "torsion": ab.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                },
                "certificate": { "status": status, "rank": rank, "detail": detail, "rules": rules },
            });
            out.stdout = serde_json::to_string_pretty(&v)? + "\n";
        }
    }
    Ok(out)
}

fn movie_for(args: &BraidArgs) -> Result<TorusChartMovie, Error> {
    let (a, b) = braids(args)?;
    if !commute(&a, &b)? {
        return Err(Error::Input("braids do not commute".into()));
    }
    let m = build_movie(&a, &b, &limits(args)?.movie_limits())?;
    validate_movie(&m)?;
    Ok(m)
}

pub fn cmd_movie(args: &BraidArgs) -> Result<Output, Error> {
    let m = movie_for(args)?;
    let mut out = Output::default();
    match args.format {
        Format::Json => out.stdout = serde_json::to_string_pretty(&MovieJson::from(&m))? + "\n",
        Format::Text => {
            let s = &mut out.stdout;
            writeln!(s, "events: {}, white vertices: {}", m.events().len(), m.r3_count()).unwrap();
            for (i, w) in m.slices()?.iter().enumerate() {
                let word: Vec<String> = w.iter().map(|l| l.to_signed().to_string()).collect();
                match m.events().get(i) {
                    Some(e) => writeln!(s, "{}  {:?}", word.join(" "), e).unwrap(),
                    None => writeln!(s, "{}", word.join(" ")).unwrap(),
                }
            }
        }
    }
    Ok(out)
}

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

pub fn cmd_invariant(args: &InvariantArgs) -> Result<Output, Error> {
    let q = load_quandle(&args.quandle)?;
    let theta = load_cocycle(&args.cocycle, &q)?;
    let m = match &args.movie {
        Some(path) => {
            let m = read_json::<MovieJson>(path)?.to_movie()?;
            validate_movie(&m).map_err(|e| Error::Input(format!("{path}: {e}")))?;
            m
        }
        None => movie_for(&args.braids)?,
    };
    let pool = sweep::thread_pool()?;
    let run = sweep::invariant(&pool, &m, &q, &theta)?;
    if run.invariant.eval_at_one() != run.rows.len() as i64 {
        return Err(Error::Invariant("invariant at t = 1 differs from the number of colorings".into()));
    }
    let mut out = Output::default();
    match args.braids.format {
        Format::Text => {
            let s = &mut out.stdout;
            writeln!(s, "white vertices: {}", m.r3_count()).unwrap();
            writeln!(s, "colorings: {}", run.rows.len()).unwrap();
            writeln!(s, "invariant: {}", run.invariant).unwrap();
            if args.table {
                for r in &run.rows {
                    let cs: Vec<String> = r.coloring.colors().iter().map(|c| c.to_string()).collect();
                    writeln!(s, "coloring ({}): {}", cs.join(", "), LaurentPoly::monomial(1, r.exponent)).unwrap();
                    for v in &r.records {
                        let [x, y, z] = v.color_triple;
                        writeln!(s, "  {} ({x}, {y}, {z})", sign_char(v.sign)).unwrap();
                    }
                }
            }
        }
        Format::Json => {
            let table = args.table.then(|| {
                run.rows
                    .iter()
                    .map(|r| {
                        json!({
                            "coloring": r.coloring.colors(),
                            "exponent": r.exponent,
                            "whiteVertices": r.records.iter().map(|v| json!({
                                "sign": v.sign,
                                "colors": v.color_triple,
                                "event": v.source_event,
                            })).collect::<Vec<_>>(),
                        })
                    })
                    .collect::<Vec<_>>()
            });
            let v = json!({
                "whiteVertices": m.r3_count(),
                "colorings": run.rows.len(),
                "invariant": LaurentJson::from(&run.invariant),
                "table": table,
            });
            out.stdout = serde_json::to_string_pretty(&v)? + "\n";
        }
    }
    Ok(out)
}

pub fn cmd_triple_bound(args: &TripleArgs) -> Result<Output, Error> {
    if args.max > 4 {
        return Err(Error::Input(format!("--max {} is too large; at most 4 triple points are supported", args.max)));
    }
    let pool = sweep::thread_pool()?;
    let report = sweep::certify(&pool, args.max, &SweepSetup::torus_link());
    let mut out = Output::default();
    if !report.holds() {
        out.code = 3;
    }
    match args.format {
        Format::Json => out.stdout = serde_json::to_string_pretty(&CaseReportJson::from(&report))? + "\n",
        Format::Text => {
            let s = &mut out.stdout;
            writeln!(s, "hypotheses: {}", report.enumerated).unwrap();
            writeln!(s, "rejected by edge pairing: {}", report.rejected_by_pairing()).unwrap();
            writeln!(s, "surviving cases: {}", report.survivors.len()).unwrap();
            writeln!(s, "case  verdict  count").unwrap();
            for (case, verdict, n) in report.summary() {
                writeln!(s, "{case:<5} {verdict:<8} {n}").unwrap();
            }
            if args.cases {
                writeln!(s, "colors\tepsilon\tsigns\tverdict").unwrap();
                for e in &report.survivors {
                    let ps = e.hypothesis.profiles();
                    let colors: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                    let eps: String = ps.iter().map(|p| sign_char(p.epsilon)).collect();
                    let ws: String = ps.iter().map(|p| sign_char(p.weight_sign)).collect();
                    let colors = if colors.is_empty() { "(none)".to_string() } else { colors.join(" ") };
                    writeln!(s, "{colors}\t{eps}\t{ws}\t{}", e.verdict).unwrap();
                }
            }
            match report.lower_bound() {
                Some(lb) => writeln!(s, "lower bound {lb} CERTIFIED").unwrap(),
                None => {
                    let fails = report.verdict_count(Verdict::Fail);
                    writeln!(s, "lower bound NOT certified: {fails} cases fail").unwrap()
                }
            }
        }
    }
    Ok(out)
}
