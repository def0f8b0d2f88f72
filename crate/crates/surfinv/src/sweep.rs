//! Parallel coloring and case sweeps. Work is split across a rayon pool but
//! results are collected in input order, so output never depends on the
//! number of threads.

use rayon::prelude::*;

use surfinv_core::chart::{ColorVector, PreparedMovie, TorusChartMovie, WhiteVertexRecord};
use surfinv_core::quandle::{Cocycle3, LaurentPoly, Quandle};
use surfinv_core::triple::{evaluate_hypothesis, hypotheses, CaseReport, SweepSetup};

use crate::Error;

/// Environment variable overriding the number of worker threads.
pub const THREADS_VAR: &str = "SURFINV_THREADS";

pub fn thread_pool() -> Result<rayon::ThreadPool, Error> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let n: usize = v.parse().map_err(|_| Error::Input(format!("{THREADS_VAR}={v:?} is not a number")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Error::Invariant(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringRow {
    pub coloring: ColorVector,
    pub exponent: i64,
    pub records: Vec<WhiteVertexRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRun {
    pub invariant: LaurentPoly,
    pub rows: Vec<ColoringRow>,
}

/// The cocycle invariant of `m`, with the white-vertex records of every
/// coloring in lexicographic coloring order.
pub fn invariant(
    pool: &rayon::ThreadPool,
    m: &TorusChartMovie,
    q: &Quandle,
    theta: &Cocycle3,
) -> Result<InvariantRun, Error> {
    if theta.quandle() != q {
        return Err(Error::Input("cocycle is defined over a different quandle".into()));
    }
    let prepared = PreparedMovie::new(m)?;
    let colorings = prepared.colorings(q)?;
    let rows: Vec<Result<ColoringRow, Error>> = pool.install(|| {
        colorings
            .into_par_iter()
            .map(|c| {
                let records = prepared.records(&c, q)?;
                let exponent = prepared.weight_exponent(&c, theta)?;
                Ok(ColoringRow { coloring: c, exponent, records })
            })
            .collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut total = LaurentPoly::zero();
    for r in &rows {
        total.add_term(1, r.exponent);
    }
    Ok(InvariantRun { invariant: total, rows })
}

/// The exhaustive case analysis, evaluated in parallel.
pub fn certify(pool: &rayon::ThreadPool, max_triples: usize, setup: &SweepSetup) -> CaseReport {
    let hs = hypotheses(max_triples);
    let survivors = pool.install(|| hs.par_iter().filter_map(|h| evaluate_hypothesis(h, setup)).collect());
    CaseReport::assemble(max_triples, hs.len(), survivors)
}
