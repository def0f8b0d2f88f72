//! Bounded shortest-path search for chart movies.
//!
//! Paths are ranked by their number of third Reidemeister events, then by
//! their total number of events; equal-cost paths are broken by discovery
//! order, and moves are always generated in the same order, so the result is
//! reproducible. Word length is bounded by the start length plus a slack,
//! which grows in steps of two until the configured maximum.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;

use thiserror::Error;

use super::{apply_event, vertex, ChartError, MovieEvent, TorusChartMovie};
use crate::braid::{commute, BraidLetter, BraidWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MovieLimits {
    /// Longest word allowed in any slice; defaults to `3(|a| + 2|b|)`.
    pub max_word_len: Option<usize>,
    /// Largest excess length over the rewritten window.
    pub max_slack: usize,
    /// Largest number of words settled by one search.
    pub max_states: usize,
}

impl Default for MovieLimits {
    fn default() -> Self {
        Self { max_word_len: None, max_slack: 4, max_states: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("movie search exhausted after {states} words (slack {slack}, word length {max_word_len})")]
pub struct SearchExhausted {
    pub states: usize,
    pub slack: usize,
    pub max_word_len: usize,
}

/// Builds a movie from `b·a` to `a·b`, sliding each letter of `a` through
/// `b` in turn when it commutes with `b`, and searching for the whole path
/// otherwise.
pub fn build_movie(a: &BraidWord, b: &BraidWord, limits: &MovieLimits) -> Result<TorusChartMovie, ChartError> {
    if a.degree() != b.degree() {
        return Err(crate::braid::BraidError::DegreeMismatch(a.degree(), b.degree()).into());
    }
    if !commute(a, b)? {
        return Err(ChartError::NotCommuting);
    }
    let m = a.degree();
    let cap = limits.max_word_len.unwrap_or(3 * (a.len() + 2 * b.len()));
    let letterwise = a
        .letters()
        .iter()
        .map(|&s| commute(&BraidWord::new(m, alloc::vec![s])?, b))
        .collect::<Result<Vec<bool>, _>>()?
        .into_iter()
        .all(|c| c);

    let mut events = Vec::new();
    if letterwise {
        let mut tiles: BTreeMap<BraidLetter, Vec<MovieEvent>> = BTreeMap::new();
        for (k, &s) in a.letters().iter().enumerate() {
            if let alloc::collections::btree_map::Entry::Vacant(slot) = tiles.entry(s) {
                let mut from = b.letters().to_vec();
                from.push(s);
                let mut to = alloc::vec![s];
                to.extend_from_slice(b.letters());
                let room = cap.saturating_sub(a.len() - 1);
                slot.insert(search(&from, &to, m, room, limits)?);
            }
            events.extend(tiles[&s].iter().map(|e| e.shifted(k)));
        }
    } else {
        let mut from = b.letters().to_vec();
        from.extend_from_slice(a.letters());
        let mut to = a.letters().to_vec();
        to.extend_from_slice(b.letters());
        events = search(&from, &to, m, cap, limits)?;
    }
    TorusChartMovie::new(a.clone(), b.clone(), events)
}

type Cost = (usize, usize, usize);

/// Moves applicable to `w` that keep it within `max_len` letters, in the
/// order the search tries them.
pub fn available_moves(w: &[BraidLetter], degree: usize, max_len: usize) -> Vec<MovieEvent> {
    let mut out = Vec::new();
    for p in 0..w.len() {
        if p + 3 <= w.len() {
            let window = [w[p], w[p + 1], w[p + 2]];
            if vertex::r3_after(window).is_some() {
                out.push(MovieEvent::R3 {
                    position: p,
                    labels: (w[p].index(), w[p + 1].index()),
                    signs: [w[p].sign(), w[p + 1].sign(), w[p + 2].sign()],
                });
            }
        }
        if p + 2 <= w.len() {
            if w[p].index().abs_diff(w[p + 1].index()) >= 2 {
                out.push(MovieEvent::R2Distant { position: p });
            }
            if w[p + 1] == w[p].inverse() {
                out.push(MovieEvent::R2Cancel { position: p });
            }
        }
    }
    if w.len() + 2 <= max_len {
        for p in 0..=w.len() {
            for index in 1..degree {
                for sign in [1, -1] {
                    out.push(MovieEvent::R2Insert { position: p, index, sign });
                }
            }
        }
    }
    out
}

/// A cheapest path of events from `from` to `to`, with words no longer than
/// `limits.max_word_len` (default three times the longer endpoint).
pub fn find_path(
    from: &[BraidLetter],
    to: &[BraidLetter],
    degree: usize,
    limits: &MovieLimits,
) -> Result<Vec<MovieEvent>, ChartError> {
    let cap = limits.max_word_len.unwrap_or(3 * from.len().max(to.len()));
    search(from, to, degree, cap, limits)
}

fn search(
    from: &[BraidLetter],
    to: &[BraidLetter],
    degree: usize,
    cap: usize,
    limits: &MovieLimits,
) -> Result<Vec<MovieEvent>, ChartError> {
    let base = from.len().max(to.len());
    let mut last = SearchExhausted { states: 0, slack: 0, max_word_len: base.min(cap) };
    for slack in (0..=limits.max_slack).step_by(2) {
        let max_len = (base + slack).min(cap);
        match dijkstra(from, to, degree, max_len, limits.max_states) {
            Ok(Some(path)) => return Ok(path),
            Ok(None) => last = SearchExhausted { states: 0, slack, max_word_len: max_len },
            Err(states) => last = SearchExhausted { states, slack, max_word_len: max_len },
        }
        if max_len == cap {
            break;
        }
    }
    Err(last.into())
}

/// `Ok(None)` when the bounded graph has no path, `Err(states)` when the
/// state budget runs out.
fn dijkstra(
    from: &[BraidLetter],
    to: &[BraidLetter],
    degree: usize,
    max_len: usize,
    max_states: usize,
) -> Result<Option<Vec<MovieEvent>>, usize> {
    // node: (word, parent node, event leading here)
    let mut nodes: Vec<(Vec<BraidLetter>, usize, Option<MovieEvent>)> = alloc::vec![(from.to_vec(), 0, None)];
    let mut best: BTreeMap<Vec<BraidLetter>, (usize, usize)> = BTreeMap::new();
    let mut settled: BTreeMap<Vec<BraidLetter>, ()> = BTreeMap::new();
    let mut heap: BinaryHeap<Reverse<(Cost, usize)>> = BinaryHeap::new();
    best.insert(from.to_vec(), (0, 0));
    heap.push(Reverse(((0, 0, 0), 0)));
    let mut seq = 1usize;

    while let Some(Reverse(((r3, total, _), node))) = heap.pop() {
        let word = nodes[node].0.clone();
        if settled.insert(word.clone(), ()).is_some() {
            continue;
        }
        if word == to {
            let mut path = Vec::new();
            let mut n = node;
            while let Some(e) = nodes[n].2 {
                path.push(e);
                n = nodes[n].1;
            }
            path.reverse();
            return Ok(Some(path));
        }
        if settled.len() > max_states {
            return Err(settled.len());
        }
        for e in available_moves(&word, degree, max_len) {
            let mut next = word.clone();
            apply_event(&mut next, &e, degree).expect("generated moves apply");
            if settled.contains_key(&next) {
                continue;
            }
            let cost = (r3 + usize::from(e.is_r3()), total + 1);
            if best.get(&next).is_some_and(|&c| c <= cost) {
                continue;
            }
            best.insert(next.clone(), cost);
            nodes.push((next, node, Some(e)));
            heap.push(Reverse(((cost.0, cost.1, seq), nodes.len() - 1)));
            seq += 1;
        }
    }
    Ok(None)
}
