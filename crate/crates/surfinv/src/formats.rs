//! JSON schemas for presentations, quandles, cocycles, movies, polynomials
//! and case reports. Field names are camelCase; braid words are arrays of
//! signed generator indices.

use serde::{Deserialize, Serialize};

use surfinv_core::braid::{BraidWord, FreeWord};
use surfinv_core::chart::{MovieEvent, TorusChartMovie};
use surfinv_core::quandle::{theta_x, theta_z, trivial_quandle, Cocycle3, LaurentPoly, Quandle};
use surfinv_core::triple::{CaseEntry, CaseReport, DiagramHypothesis, Sym, TriplePointProfile};
use surfinv_core::GroupPresentation;

use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PresentationJson {
    pub generator_count: usize,
    pub relators: Vec<Vec<i32>>,
}

impl From<&GroupPresentation> for PresentationJson {
    fn from(p: &GroupPresentation) -> Self {
        Self {
            generator_count: p.generator_count(),
            relators: p.relators().iter().map(|r| r.letters().to_vec()).collect(),
        }
    }
}

impl PresentationJson {
    pub fn to_presentation(&self) -> Result<GroupPresentation, Error> {
        let bad = self.relators.iter().flatten().find(|&&l| l == 0 || l.unsigned_abs() as usize > self.generator_count);
        if let Some(&l) = bad {
            return Err(Error::Input(format!("relator letter {l} out of range")));
        }
        let rels = self.relators.iter().map(|r| FreeWord::from_letters(r.iter().copied())).collect();
        Ok(GroupPresentation::new(self.generator_count, rels))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleJson {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
}

impl From<&Quandle> for QuandleJson {
    fn from(q: &Quandle) -> Self {
        Self { size: q.size(), table: q.rows() }
    }
}

impl QuandleJson {
    pub fn to_quandle(&self) -> Result<Quandle, Error> {
        if self.table.len() != self.size {
            return Err(Error::Input(format!("table has {} rows, size is {}", self.table.len(), self.size)));
        }
        Ok(Quandle::from_table(&self.table)?)
    }
}

/// A cocycle given by its exponent table, or by the name of a built-in one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CocycleJson {
    Table { quandle: QuandleJson, exponents: Vec<i64> },
    Builtin { builtin: String },
}

impl From<&Cocycle3> for CocycleJson {
    fn from(c: &Cocycle3) -> Self {
        CocycleJson::Table { quandle: c.quandle().into(), exponents: c.exponents().to_vec() }
    }
}

impl CocycleJson {
    /// `zero` is resolved against `default_quandle`.
    pub fn to_cocycle(&self, default_quandle: &Quandle) -> Result<Cocycle3, Error> {
        match self {
            CocycleJson::Table { quandle, exponents } => Ok(Cocycle3::new(quandle.to_quandle()?, exponents.clone())?),
            CocycleJson::Builtin { builtin } => builtin_cocycle(builtin, default_quandle),
        }
    }
}

pub fn builtin_quandle(name: &str) -> Result<Quandle, Error> {
    let (kind, n) = name.split_at(name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len()));
    let n: usize = n.parse().map_err(|_| Error::Input(format!("unknown builtin quandle {name:?}")))?;
    match kind {
        "T" => Ok(trivial_quandle(n)?),
        "R" => Ok(surfinv_core::quandle::dihedral_quandle(n)?),
        _ => Err(Error::Input(format!("unknown builtin quandle {name:?}"))),
    }
}

pub fn builtin_cocycle(name: &str, q: &Quandle) -> Result<Cocycle3, Error> {
    match name {
        "theta_z" => Ok(theta_z(q.size())?),
        "theta_x" => Ok(theta_x(q.size())?),
        "zero" => Ok(Cocycle3::zero(q.clone())),
        _ => Err(Error::Input(format!("unknown builtin cocycle {name:?}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum EventJson {
    R3 { position: usize, labels: [usize; 2], signs: [i8; 3] },
    R2Distant { position: usize },
    R2Cancel { position: usize },
    R2Insert { position: usize, index: usize, sign: i8 },
}

impl From<MovieEvent> for EventJson {
    fn from(e: MovieEvent) -> Self {
        match e {
            MovieEvent::R3 { position, labels: (i, j), signs } => EventJson::R3 { position, labels: [i, j], signs },
            MovieEvent::R2Distant { position } => EventJson::R2Distant { position },
            MovieEvent::R2Cancel { position } => EventJson::R2Cancel { position },
            MovieEvent::R2Insert { position, index, sign } => EventJson::R2Insert { position, index, sign },
        }
    }
}

impl From<EventJson> for MovieEvent {
    fn from(e: EventJson) -> Self {
        match e {
            EventJson::R3 { position, labels: [i, j], signs } => MovieEvent::R3 { position, labels: (i, j), signs },
            EventJson::R2Distant { position } => MovieEvent::R2Distant { position },
            EventJson::R2Cancel { position } => MovieEvent::R2Cancel { position },
            EventJson::R2Insert { position, index, sign } => MovieEvent::R2Insert { position, index, sign },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MovieJson {
    pub degree: usize,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub events: Vec<EventJson>,
}

impl From<&TorusChartMovie> for MovieJson {
    fn from(m: &TorusChartMovie) -> Self {
        Self {
            degree: m.degree(),
            a: m.a().to_signed(),
            b: m.b().to_signed(),
            events: m.events().iter().map(|&e| e.into()).collect(),
        }
    }
}

impl MovieJson {
    /// Rebuilds the movie without validating it.
    pub fn to_movie(&self) -> Result<TorusChartMovie, Error> {
        let a = BraidWord::from_signed(self.degree, &self.a)?;
        let b = BraidWord::from_signed(self.degree, &self.b)?;
        Ok(TorusChartMovie::new(a, b, self.events.iter().map(|&e| e.into()).collect())?)
    }
}

/// `(exponent, coefficient)` pairs in ascending exponent order, plus the
/// rendered polynomial for readers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<[i64; 2]>,
    pub text: String,
}

impl From<&LaurentPoly> for LaurentJson {
    fn from(p: &LaurentPoly) -> Self {
        Self { terms: p.terms().map(|(e, c)| [e, c]).collect(), text: p.to_string() }
    }
}

impl LaurentJson {
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|&[e, c]| (e, c)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProfileJson {
    /// Three letters from `abc`.
    pub colors: String,
    pub epsilon: i8,
    pub weight_sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseJson {
    pub profiles: Vec<ProfileJson>,
    pub case: String,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseReportJson {
    pub max_triples: usize,
    pub enumerated: usize,
    pub rejected_by_pairing: usize,
    pub holds: bool,
    pub lower_bound: Option<usize>,
    pub survivors: Vec<CaseJson>,
}

fn profile_json(p: &TriplePointProfile) -> ProfileJson {
    ProfileJson {
        colors: p.colors.iter().map(|s| s.to_string()).collect(),
        epsilon: p.epsilon,
        weight_sign: p.weight_sign,
    }
}

fn parse_sym(c: char) -> Result<Sym, Error> {
    match c {
        'a' => Ok(Sym::A),
        'b' => Ok(Sym::B),
        'c' => Ok(Sym::C),
        _ => Err(Error::Input(format!("color symbol {c:?} is not one of a, b, c"))),
    }
}

impl ProfileJson {
    pub fn to_profile(&self) -> Result<TriplePointProfile, Error> {
        let syms = self.colors.chars().map(parse_sym).collect::<Result<Vec<_>, _>>()?;
        let colors: [Sym; 3] =
            syms.try_into().map_err(|_| Error::Input(format!("{:?} is not a color triple", self.colors)))?;
        for s in [self.epsilon, self.weight_sign] {
            if s != 1 && s != -1 {
                return Err(Error::Input(format!("sign {s} is not ±1")));
            }
        }
        Ok(TriplePointProfile::new(colors, self.epsilon, self.weight_sign))
    }
}

impl From<&CaseReport> for CaseReportJson {
    fn from(r: &CaseReport) -> Self {
        Self {
            max_triples: r.max_triples,
            enumerated: r.enumerated,
            rejected_by_pairing: r.rejected_by_pairing(),
            holds: r.holds(),
            lower_bound: r.lower_bound(),
            survivors: r
                .survivors
                .iter()
                .map(|e| CaseJson {
                    profiles: e.hypothesis.profiles().iter().map(profile_json).collect(),
                    case: e.case.to_string(),
                    verdict: e.verdict.to_string(),
                })
                .collect(),
        }
    }
}

impl CaseReportJson {
    /// Rebuilds the report, recomputing case labels and checking verdict
    /// names.
    pub fn to_report(&self) -> Result<CaseReport, Error> {
        use surfinv_core::triple::{case_label, Verdict};
        let mut survivors = Vec::with_capacity(self.survivors.len());
        for c in &self.survivors {
            let profiles = c.profiles.iter().map(ProfileJson::to_profile).collect::<Result<Vec<_>, _>>()?;
            let hypothesis = DiagramHypothesis::new(profiles);
            let verdict = match c.verdict.as_str() {
                "W1" => Verdict::W1,
                "W2" => Verdict::W2,
                "W3" => Verdict::W3,
                "FAIL" => Verdict::Fail,
                v => return Err(Error::Input(format!("unknown verdict {v:?}"))),
            };
            let case = case_label(&hypothesis);
            if case.to_string() != c.case {
                return Err(Error::Input(format!("case {:?} does not match its profiles", c.case)));
            }
            survivors.push(CaseEntry { hypothesis, case, verdict });
        }
        Ok(CaseReport::assemble(self.max_triples, self.enumerated, survivors))
    }
}
