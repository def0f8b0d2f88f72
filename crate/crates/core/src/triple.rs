//! Exhaustive lower bound for the triple point number of the torus link
//! with invariants `21 + 4t^{-2} + 2t^4`.
//!
//! A hypothetical diagram is a multiset of triple points, each carrying a
//! formal color triple over the symbols `a, b, c`, a BW-orientation sign `ε`
//! and a weight sign. The orientation signs must let the signed edge colors
//! cancel in pairs; for every diagram passing that test, the Boltzmann
//! weights over the 27 substitutions of `a, b, c` are checked against three
//! conditions, any of which rules the diagram out.

use alloc::vec::Vec;
use core::fmt;

use crate::quandle::{theta_x, theta_z, Cocycle3, LaurentPoly};

/// One of the formal colors `a`, `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    A,
    B,
    C,
}

impl Sym {
    pub const ALL: [Sym; 3] = [Sym::A, Sym::B, Sym::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Sym> {
        Self::ALL.get(i).copied()
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Sym::A => "a",
            Sym::B => "b",
            Sym::C => "c",
        })
    }
}

/// Edge-color pattern of a triple point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColorType {
    /// `(x, y, z)`, all distinct.
    I,
    /// `(x, y, x)`.
    II,
    /// `(x, x, y)`.
    III,
    /// `(y, x, x)`.
    IV,
    /// `(x, x, x)`.
    V,
}

impl ColorType {
    pub fn is_degenerate(self) -> bool {
        matches!(self, ColorType::III | ColorType::IV | ColorType::V)
    }
}

pub fn classify_type(t: [Sym; 3]) -> ColorType {
    let [x, y, z] = t;
    match (x == y, y == z, x == z) {
        (true, true, _) => ColorType::V,
        (true, false, _) => ColorType::III,
        (false, true, _) => ColorType::IV,
        (false, false, true) => ColorType::II,
        (false, false, false) => ColorType::I,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriplePointProfile {
    pub colors: [Sym; 3],
    /// BW-orientation sign.
    pub epsilon: i8,
    /// Sign of the triple point in Boltzmann weights.
    pub weight_sign: i8,
}

impl TriplePointProfile {
    pub fn new(colors: [Sym; 3], epsilon: i8, weight_sign: i8) -> Self {
        Self { colors, epsilon, weight_sign }
    }

    /// All 108 profiles in canonical order.
    pub fn all() -> Vec<TriplePointProfile> {
        let mut out = Vec::with_capacity(108);
        for x in Sym::ALL {
            for y in Sym::ALL {
                for z in Sym::ALL {
                    for epsilon in [-1, 1] {
                        for weight_sign in [-1, 1] {
                            out.push(Self::new([x, y, z], epsilon, weight_sign));
                        }
                    }
                }
            }
        }
        out
    }

    /// Applies a permutation of the symbols.
    pub fn relabeled(&self, rho: [Sym; 3]) -> Self {
        let r = |s: Sym| rho[s.index()];
        Self { colors: [r(self.colors[0]), r(self.colors[1]), r(self.colors[2])], ..*self }
    }
}

impl fmt::Display for TriplePointProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.colors;
        write!(f, "({x},{y},{z})")
    }
}

/// A color pair `(x, y)` on an edge of the singularity set, with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPair {
    pub sign: i8,
    pub pair: (Sym, Sym),
}

impl SignedPair {
    pub fn is_degenerate(&self) -> bool {
        self.pair.0 == self.pair.1
    }
}

/// `{ε(x,y), -ε(x,z), ε(y,z)}` for a triple point colored `(x, y, z)`.
pub fn edge_labels(p: &TriplePointProfile) -> [SignedPair; 3] {
    let [x, y, z] = p.colors;
    let e = p.epsilon;
    [
        SignedPair { sign: e, pair: (x, y) },
        SignedPair { sign: -e, pair: (x, z) },
        SignedPair { sign: e, pair: (y, z) },
    ]
}

/// Sum of the edge labels with degenerate pairs counted as zero.
pub fn e_of(p: &TriplePointProfile) -> i64 {
    edge_labels(p).iter().filter(|l| !l.is_degenerate()).map(|l| i64::from(l.sign)).sum()
}

/// `ε`, `2ε` or `0` by color type.
pub fn e_by_type(p: &TriplePointProfile) -> i64 {
    match classify_type(p.colors) {
        ColorType::I => i64::from(p.epsilon),
        ColorType::II => 2 * i64::from(p.epsilon),
        _ => 0,
    }
}

/// A multiset of triple points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramHypothesis {
    profiles: Vec<TriplePointProfile>,
}

impl DiagramHypothesis {
    pub fn new(mut profiles: Vec<TriplePointProfile>) -> Self {
        profiles.sort();
        Self { profiles }
    }

    pub fn profiles(&self) -> &[TriplePointProfile] {
        &self.profiles
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn relabeled(&self, rho: [Sym; 3]) -> Self {
        Self::new(self.profiles.iter().map(|p| p.relabeled(rho)).collect())
    }

    pub fn e_total(&self) -> i64 {
        self.profiles.iter().map(e_of).sum()
    }
}

/// True iff the non-degenerate edge labels cancel in `+(x,y)`, `-(x,y)`
/// pairs, which forces the total `E` to vanish.
pub fn pairing_consistent(h: &DiagramHypothesis) -> bool {
    let mut balance = [[0i64; 3]; 3];
    for p in &h.profiles {
        for l in edge_labels(p).iter().filter(|l| !l.is_degenerate()) {
            balance[l.pair.0.index()][l.pair.1.index()] += i64::from(l.sign);
        }
    }
    balance.iter().flatten().all(|&b| b == 0) && h.e_total() == 0
}

/// Which condition rules a hypothesis out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    /// Every weight under `θ` is 1, so the invariant would be an integer.
    W1,
    /// Some weight under `θ` is a power of `t` missing from the target.
    W2,
    /// The weights under `θ'` sum to the plain number of colorings.
    W3,
    /// None of the three holds.
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::W1 => "W1",
            Verdict::W2 => "W2",
            Verdict::W3 => "W3",
            Verdict::Fail => "FAIL",
        })
    }
}

/// The two cocycles and the invariant they must reproduce.
#[derive(Debug, Clone)]
pub struct SweepSetup {
    pub theta: Cocycle3,
    pub theta_prime: Cocycle3,
    pub target: LaurentPoly,
}

impl SweepSetup {
    /// `θ_z`, `θ_x` and `21 + 4t^{-2} + 2t^4`.
    pub fn torus_link() -> Self {
        Self {
            theta: theta_z(3).expect("size 3"),
            theta_prime: theta_x(3).expect("size 3"),
            target: LaurentPoly::from_terms([(-2, 4), (0, 21), (4, 2)]),
        }
    }
}

/// Weight exponents under `θ` and `θ'` for every substitution of the
/// symbols, in lexicographic substitution order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSweep {
    pub theta: Vec<i64>,
    pub theta_prime: Vec<i64>,
    pub verdict: Verdict,
}

fn exponent_sum(h: &DiagramHypothesis, theta: &Cocycle3, sub: [usize; 3]) -> i64 {
    h.profiles
        .iter()
        .map(|p| {
            let [x, y, z] = p.colors.map(|s| sub[s.index()]);
            i64::from(p.weight_sign) * theta.exponent(x, y, z)
        })
        .sum()
}

pub fn weight_sweep(h: &DiagramHypothesis, setup: &SweepSetup) -> WeightSweep {
    let n = setup.theta.quandle().size().min(setup.theta_prime.quandle().size());
    let mut theta = Vec::with_capacity(n * n * n);
    let mut theta_prime = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                theta.push(exponent_sum(h, &setup.theta, [a, b, c]));
                theta_prime.push(exponent_sum(h, &setup.theta_prime, [a, b, c]));
            }
        }
    }
    let count = theta.len() as i64;
    let verdict = if theta.iter().all(|&e| e == 0) {
        Verdict::W1
    } else if theta.iter().any(|&e| setup.target.coeff(e) == 0) {
        Verdict::W2
    } else if theta_prime.iter().all(|&e| e == 0) && setup.target != LaurentPoly::constant(count) {
        Verdict::W3
    } else {
        Verdict::Fail
    };
    WeightSweep { theta, theta_prime, verdict }
}

/// Which branch of the case analysis a hypothesis falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// No triple points.
    Empty,
    /// One triple point.
    One,
    /// Two triple points.
    Two,
    /// Three: two of type (i) and one degenerate.
    ThreeDegenerate,
    /// Three: two of type (i) and one of type (ii).
    ThreeTypeTwo,
    /// Three, none of type (i).
    ThreeOther,
    /// Four or more.
    More,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            CaseLabel::Empty => "0",
            CaseLabel::One => "1",
            CaseLabel::Two => "2",
            CaseLabel::ThreeDegenerate => "3.1",
            CaseLabel::ThreeTypeTwo => "3.2",
            CaseLabel::ThreeOther => "3.0",
            CaseLabel::More => "4+",
        })
    }
}

pub fn case_label(h: &DiagramHypothesis) -> CaseLabel {
    let types: Vec<ColorType> = h.profiles.iter().map(|p| classify_type(p.colors)).collect();
    let count = |t: ColorType| types.iter().filter(|&&x| x == t).count();
    match h.len() {
        0 => CaseLabel::Empty,
        1 => CaseLabel::One,
        2 => CaseLabel::Two,
        3 if count(ColorType::I) == 2 && count(ColorType::II) == 1 => CaseLabel::ThreeTypeTwo,
        3 if count(ColorType::I) == 2 => CaseLabel::ThreeDegenerate,
        3 => CaseLabel::ThreeOther,
        _ => CaseLabel::More,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseEntry {
    pub hypothesis: DiagramHypothesis,
    pub case: CaseLabel,
    pub verdict: Verdict,
}

/// Evaluates one hypothesis; `None` when its edge labels do not pair up.
pub fn evaluate_hypothesis(h: &DiagramHypothesis, setup: &SweepSetup) -> Option<CaseEntry> {
    if !pairing_consistent(h) {
        return None;
    }
    Some(CaseEntry { hypothesis: h.clone(), case: case_label(h), verdict: weight_sweep(h, setup).verdict })
}

/// Every multiset of at most `max_triples` profiles, in canonical order.
pub fn hypotheses(max_triples: usize) -> Vec<DiagramHypothesis> {
    let all = TriplePointProfile::all();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = Vec::new();
    fn rec(
        all: &[TriplePointProfile],
        start: usize,
        left: usize,
        idx: &mut Vec<usize>,
        out: &mut Vec<DiagramHypothesis>,
    ) {
        out.push(DiagramHypothesis::new(idx.iter().map(|&i| all[i]).collect()));
        if left == 0 {
            return;
        }
        for i in start..all.len() {
            idx.push(i);
            rec(all, i, left - 1, idx, out);
            idx.pop();
        }
    }
    rec(&all, 0, max_triples, &mut idx, &mut out);
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

/// Outcome of the exhaustive case analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub max_triples: usize,
    pub enumerated: usize,
    /// Hypotheses whose edge labels pair up, sorted canonically.
    pub survivors: Vec<CaseEntry>,
}

impl CaseReport {
    /// Builds a report from survivors listed in any order.
    pub fn assemble(max_triples: usize, enumerated: usize, mut survivors: Vec<CaseEntry>) -> Self {
        survivors.sort_by(|x, y| {
            x.hypothesis.len().cmp(&y.hypothesis.len()).then_with(|| x.hypothesis.cmp(&y.hypothesis))
        });
        Self { max_triples, enumerated, survivors }
    }

    pub fn rejected_by_pairing(&self) -> usize {
        self.enumerated - self.survivors.len()
    }

    /// Every surviving hypothesis is ruled out.
    pub fn holds(&self) -> bool {
        self.survivors.iter().all(|e| e.verdict != Verdict::Fail)
    }

    /// The certified lower bound on the triple point number.
    pub fn lower_bound(&self) -> Option<usize> {
        self.holds().then_some(self.max_triples + 1)
    }

    pub fn verdict_count(&self, v: Verdict) -> usize {
        self.survivors.iter().filter(|e| e.verdict == v).count()
    }

    /// Survivor counts by case and verdict, in canonical order.
    pub fn summary(&self) -> Vec<(CaseLabel, Verdict, usize)> {
        let mut map: alloc::collections::BTreeMap<(CaseLabel, Verdict), usize> = Default::default();
        for e in &self.survivors {
            *map.entry((e.case, e.verdict)).or_default() += 1;
        }
        map.into_iter().map(|((c, v), n)| (c, v, n)).collect()
    }
}

pub fn certify_lower_bound_with(max_triples: usize, setup: &SweepSetup) -> CaseReport {
    let hs = hypotheses(max_triples);
    let survivors = hs.iter().filter_map(|h| evaluate_hypothesis(h, setup)).collect();
    CaseReport::assemble(max_triples, hs.len(), survivors)
}

/// Rules out every diagram with at most `max_triples` triple points.
pub fn certify_lower_bound(max_triples: usize) -> CaseReport {
    certify_lower_bound_with(max_triples, &SweepSetup::torus_link())
}

/// The triple point number, when the certified lower bound meets the number
/// of white vertices of a known chart.
pub fn triple_point_number(report: &CaseReport, white_vertices: usize) -> Option<usize> {
    report.lower_bound().filter(|&lb| lb == white_vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sym::{A, B, C};

    fn p(colors: [Sym; 3], epsilon: i8, weight_sign: i8) -> TriplePointProfile {
        TriplePointProfile::new(colors, epsilon, weight_sign)
    }

    #[test]
    fn types() {
        assert_eq!(classify_type([A, B, C]), ColorType::I);
        assert_eq!(classify_type([A, B, A]), ColorType::II);
        assert_eq!(classify_type([A, A, B]), ColorType::III);
        assert_eq!(classify_type([B, A, A]), ColorType::IV);
        assert_eq!(classify_type([A, A, A]), ColorType::V);
    }

    #[test]
    fn e_values() {
        assert_eq!(e_of(&p([A, B, C], 1, 1)), 1);
        assert_eq!(e_of(&p([A, B, A], -1, 1)), -2);
        assert_eq!(e_of(&p([A, A, B], 1, 1)), 0);
        assert_eq!(e_of(&p([A, A, B], -1, 1)), 0);
        for prof in TriplePointProfile::all() {
            assert_eq!(e_of(&prof), e_by_type(&prof), "{prof}");
        }
    }

    #[test]
    fn pairing() {
        assert!(!pairing_consistent(&DiagramHypothesis::new(alloc::vec![p([A, B, C], 1, 1)])));
        assert!(pairing_consistent(&DiagramHypothesis::new(alloc::vec![p([A, B, C], 1, 1), p([A, B, C], -1, 1)])));
        assert!(pairing_consistent(&DiagramHypothesis::new(alloc::vec![
            p([A, B, C], 1, 1),
            p([B, A, C], 1, 1),
            p([A, B, A], -1, 1),
        ])));
        // E sums to zero but the labels do not pair up.
        let h = DiagramHypothesis::new(alloc::vec![p([A, B, C], 1, 1), p([A, C, B], -1, 1)]);
        assert_eq!(h.e_total(), 0);
        assert!(!pairing_consistent(&h));
        assert!(pairing_consistent(&DiagramHypothesis::new(Vec::new())));
    }

    #[test]
    fn sweep_examples() {
        let setup = SweepSetup::torus_link();
        let same = DiagramHypothesis::new(alloc::vec![p([A, B, C], 1, 1), p([A, B, C], -1, 1)]);
        let s = weight_sweep(&same, &setup);
        // substitution (0, 1, 2) sits at index 5
        assert_eq!(s.theta[5], 8);
        assert_eq!(s.verdict, Verdict::W2);
        let c2 = DiagramHypothesis::new(alloc::vec![p([A, B, C], 1, -1), p([A, C, B], 1, -1), p([B, C, B], -1, 1)]);
        assert!(pairing_consistent(&c2));
        let s = weight_sweep(&c2, &setup);
        assert_eq!(s.verdict, Verdict::W3);
        let total: LaurentPoly = s.theta.iter().map(|&e| LaurentPoly::monomial(1, e)).sum();
        assert_eq!(total, setup.target);
        let degenerate = DiagramHypothesis::new(alloc::vec![p([A, A, B], 1, 1), p([C, C, C], -1, -1)]);
        assert_eq!(weight_sweep(&degenerate, &setup).verdict, Verdict::W1);
    }

    #[test]
    fn small_bounds() {
        let r0 = certify_lower_bound(0);
        assert_eq!(r0.enumerated, 1);
        assert!(r0.holds());
        assert_eq!(r0.survivors[0].verdict, Verdict::W1);
        let r1 = certify_lower_bound(1);
        assert!(r1.holds());
        for e in &r1.survivors {
            if e.case == CaseLabel::One {
                assert!(classify_type(e.hypothesis.profiles()[0].colors).is_degenerate());
                assert_eq!(e.verdict, Verdict::W1);
            }
        }
    }

    #[test]
    fn three_triple_points_are_ruled_out() {
        let r = certify_lower_bound(3);
        assert!(r.holds());
        assert_eq!(r.lower_bound(), Some(4));
        assert_eq!(triple_point_number(&r, 4), Some(4));
        assert!(r.survivors.iter().any(|e| e.case == CaseLabel::ThreeTypeTwo && e.verdict == Verdict::W3));
    }

    #[test]
    fn enumeration_size() {
        // multisets of size ≤ 2 from 108 profiles
        assert_eq!(hypotheses(2).len(), 1 + 108 + 108 * 109 / 2);
    }
}
