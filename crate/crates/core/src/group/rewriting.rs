//! Knuth–Bendix completion for monoid presentations of groups.
//!
//! Each generator `x_j` gets a formal inverse symbol. Symbols are ordered
//! `x_1 < x_1^{-1} < x_2 < x_2^{-1} < …` and words by shortlex. Completion is
//! deterministic: equations are processed first-in first-out and every new
//! rule interreduces the existing system.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::GroupPresentation;

/// Internal symbol: `2(j-1)` is `x_j`, `2(j-1)+1` is `x_j^{-1}`.
type Sym = u16;
type Word = Vec<Sym>;

fn sym_of(letter: i32) -> Sym {
    let j = letter.unsigned_abs() as Sym - 1;
    2 * j + Sym::from(letter < 0)
}

fn letter_of(s: Sym) -> i32 {
    let j = (s / 2) as i32 + 1;
    if s.is_multiple_of(2) {
        j
    } else {
        -j
    }
}

fn inv(s: Sym) -> Sym {
    s ^ 1
}

fn shortlex(a: &[Sym], b: &[Sym]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KbLimits {
    /// Maximum number of live rules.
    pub max_rules: usize,
    /// Maximum left-hand-side length of a rule.
    pub max_len: usize,
    /// Maximum number of pending equations.
    pub max_pending: usize,
}

impl Default for KbLimits {
    fn default() -> Self {
        Self { max_rules: 2000, max_len: 48, max_pending: 500_000 }
    }
}

/// Why completion stopped before reaching a confluent system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KbExhausted {
    pub reason: ExhaustionReason,
    pub rules: usize,
    pub pending: usize,
    pub processed: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExhaustionReason {
    TooManyRules,
    RuleTooLong,
    TooManyPending,
}

/// A (possibly complete) length-lexicographic rewriting system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    generators: usize,
    lhs: Vec<Word>,
    rhs: Vec<Word>,
    alive: Vec<bool>,
    by_last: Vec<Vec<usize>>,
    complete: bool,
}

impl RewriteSystem {
    fn new(generators: usize) -> Self {
        Self {
            generators,
            lhs: Vec::new(),
            rhs: Vec::new(),
            alive: Vec::new(),
            by_last: alloc::vec![Vec::new(); 2 * generators],
            complete: false,
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn rule_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    /// Live rules as signed-letter words, sorted by left-hand side.
    pub fn rules(&self) -> Vec<(Vec<i32>, Vec<i32>)> {
        let mut out: Vec<(Word, Word)> = self
            .live()
            .map(|i| (self.lhs[i].clone(), self.rhs[i].clone()))
            .collect();
        out.sort_by(|a, b| shortlex(&a.0, &b.0));
        out.into_iter()
            .map(|(l, r)| (l.into_iter().map(letter_of).collect(), r.into_iter().map(letter_of).collect()))
            .collect()
    }

    fn live(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.lhs.len()).filter(move |&i| self.alive[i])
    }

    /// Normal form of a signed-letter word.
    pub fn reduce(&self, word: &[i32]) -> Vec<i32> {
        let w: Word = word.iter().map(|&l| sym_of(l)).collect();
        self.reduce_syms(&w).into_iter().map(letter_of).collect()
    }

    fn reduce_syms(&self, w: &[Sym]) -> Word {
        let mut out: Word = Vec::with_capacity(w.len());
        let mut input: Word = w.iter().rev().copied().collect();
        while let Some(s) = input.pop() {
            out.push(s);
            // `out` minus its last symbol is irreducible, so any redex is a suffix.
            if let Some(i) = self.suffix_rule(&out) {
                out.truncate(out.len() - self.lhs[i].len());
                input.extend(self.rhs[i].iter().rev());
            }
        }
        out
    }

    fn suffix_rule(&self, out: &[Sym]) -> Option<usize> {
        let last = *out.last()?;
        self.by_last[last as usize]
            .iter()
            .copied()
            .find(|&i| self.alive[i] && out.ends_with(&self.lhs[i]))
    }

    fn push_rule(&mut self, l: Word, r: Word) -> usize {
        let idx = self.lhs.len();
        self.by_last[*l.last().expect("rules have nonempty lhs") as usize].push(idx);
        self.lhs.push(l);
        self.rhs.push(r);
        self.alive.push(true);
        idx
    }

    /// Critical pairs from proper overlaps of `lhs[a]`'s suffix with
    /// `lhs[b]`'s prefix.
    fn overlaps(&self, a: usize, b: usize, out: &mut impl FnMut(Word, Word)) {
        let (la, lb) = (&self.lhs[a], &self.lhs[b]);
        for k in 1..la.len().min(lb.len()) {
            if la[la.len() - k..] == lb[..k] {
                let mut left = self.rhs[a].clone();
                left.extend_from_slice(&lb[k..]);
                let mut right = la[..la.len() - k].to_vec();
                right.extend_from_slice(&self.rhs[b]);
                out(left, right);
            }
        }
    }

    /// Checks that every critical pair of the live rules joins and that each
    /// rule decreases in shortlex order.
    pub fn verify_local_confluence(&self) -> bool {
        let live: Vec<usize> = self.live().collect();
        for &i in &live {
            if shortlex(&self.lhs[i], &self.rhs[i]) != Ordering::Greater {
                return false;
            }
            // Interreduced systems have no rule inside another lhs.
            for &j in &live {
                if i != j && contains(&self.lhs[i], &self.lhs[j]) {
                    return false;
                }
            }
        }
        let mut ok = true;
        for &i in &live {
            for &j in &live {
                self.overlaps(i, j, &mut |u, v| {
                    if ok && self.reduce_syms(&u) != self.reduce_syms(&v) {
                        ok = false;
                    }
                });
            }
        }
        ok
    }
}

fn contains(hay: &[Sym], needle: &[Sym]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Completes the monoid presentation `⟨x_j, x_j^{-1} | x_j x_j^{-1}, x_j^{-1} x_j, relators⟩`.
pub fn knuth_bendix(p: &GroupPresentation, limits: &KbLimits) -> Result<RewriteSystem, KbExhausted> {
    let m = p.generator_count();
    let mut sys = RewriteSystem::new(m);
    let mut queue: VecDeque<(Word, Word)> = VecDeque::new();
    for s in 0..(2 * m) as Sym {
        queue.push_back((alloc::vec![s, inv(s)], Vec::new()));
    }
    for r in p.relators() {
        queue.push_back((r.letters().iter().map(|&l| sym_of(l)).collect(), Vec::new()));
    }

    let mut deferred: Vec<(Word, Word)> = Vec::new();
    let mut processed = 0usize;
    let exhausted = |reason, sys: &RewriteSystem, pending: usize, processed: usize| KbExhausted {
        reason,
        rules: sys.rule_count(),
        pending,
        processed,
    };

    while let Some((u, v)) = queue.pop_front() {
        processed += 1;
        let u = sys.reduce_syms(&u);
        let v = sys.reduce_syms(&v);
        let (l, r) = match shortlex(&u, &v) {
            Ordering::Equal => continue,
            Ordering::Greater => (u, v),
            Ordering::Less => (v, u),
        };
        if l.len() > limits.max_len {
            deferred.push((l, r));
            continue;
        }
        let new = sys.push_rule(l, r);
        for i in 0..new {
            if !sys.alive[i] {
                continue;
            }
            if contains(&sys.lhs[i], &sys.lhs[new]) {
                sys.alive[i] = false;
                queue.push_back((sys.lhs[i].clone(), sys.rhs[i].clone()));
            } else {
                let reduced = sys.reduce_syms(&sys.rhs[i]);
                sys.rhs[i] = reduced;
            }
        }
        if sys.rule_count() > limits.max_rules {
            return Err(exhausted(ExhaustionReason::TooManyRules, &sys, queue.len(), processed));
        }
        let live: Vec<usize> = sys.live().collect();
        let mut pairs = Vec::new();
        for &i in &live {
            sys.overlaps(new, i, &mut |a, b| pairs.push((a, b)));
            if i != new {
                sys.overlaps(i, new, &mut |a, b| pairs.push((a, b)));
            }
        }
        queue.extend(pairs);
        if queue.len() > limits.max_pending {
            return Err(exhausted(ExhaustionReason::TooManyPending, &sys, queue.len(), processed));
        }
    }

    for (l, r) in &deferred {
        if sys.reduce_syms(l) != sys.reduce_syms(r) {
            return Err(exhausted(ExhaustionReason::RuleTooLong, &sys, deferred.len(), processed));
        }
    }
    sys.complete = true;
    Ok(sys)
}
