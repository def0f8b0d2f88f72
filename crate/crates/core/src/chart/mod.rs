//! Torus charts without black vertices, modelled as movies of braid words.
//!
//! Cutting the torus along both boundary circles leaves a square whose sides
//! read `a` and `b`. Sweeping the square diagonally from the bottom-left
//! corner reads the word `b·a` first and `a·b` last, so a chart is a sequence
//! of local rewrites taking `b·a` to `a·b`. Third Reidemeister moves are the
//! white vertices, far commutations are crossings of the chart, and
//! insertions or cancellations of inverse pairs are local extrema of edges.

mod coloring;
mod search;
mod vertex;

pub use coloring::{
    boltzmann_weight, cocycle_invariant, color_action, enumerate_colorings, white_vertices, ColorVector,
    PreparedMovie, WhiteVertexRecord,
};
pub use search::{available_moves, build_movie, find_path, MovieLimits, SearchExhausted};

use alloc::vec::Vec;

use thiserror::Error;

use crate::braid::{BraidError, BraidLetter, BraidWord};

/// One local rewrite of the current word. Positions are 0-based and refer to
/// the word before the event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MovieEvent {
    /// Replaces `σ_i^{s0} σ_j^{s1} σ_i^{s2}` at `position` by the matching
    /// `σ_j σ_i σ_j` window; `labels = (i, j)` and `signs = [s0, s1, s2]`
    /// describe the word before the event.
    R3 { position: usize, labels: (usize, usize), signs: [i8; 3] },
    /// Swaps two adjacent letters whose indices differ by at least two.
    R2Distant { position: usize },
    /// Deletes an adjacent inverse pair.
    R2Cancel { position: usize },
    /// Inserts `σ_index^{sign} σ_index^{-sign}` at `position`.
    R2Insert { position: usize, index: usize, sign: i8 },
}

impl MovieEvent {
    pub fn is_r3(&self) -> bool {
        matches!(self, MovieEvent::R3 { .. })
    }

    pub fn position(&self) -> usize {
        match *self {
            MovieEvent::R3 { position, .. }
            | MovieEvent::R2Distant { position }
            | MovieEvent::R2Cancel { position }
            | MovieEvent::R2Insert { position, .. } => position,
        }
    }

    /// Applies the event to `word`, leaving it untouched and returning
    /// false when the event does not match.
    pub fn apply(&self, word: &mut Vec<BraidLetter>, degree: usize) -> bool {
        apply_event(word, self, degree).is_ok()
    }

    /// The same event applied further right in a longer word.
    pub fn shifted(self, offset: usize) -> Self {
        match self {
            MovieEvent::R3 { position, labels, signs } => MovieEvent::R3 { position: position + offset, labels, signs },
            MovieEvent::R2Distant { position } => MovieEvent::R2Distant { position: position + offset },
            MovieEvent::R2Cancel { position } => MovieEvent::R2Cancel { position: position + offset },
            MovieEvent::R2Insert { position, index, sign } => {
                MovieEvent::R2Insert { position: position + offset, index, sign }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("event {event} does not apply at position {position}: expected {expected:?}, found {found:?}")]
    InvalidEvent { event: usize, position: usize, expected: Vec<i64>, found: Vec<i64> },
    #[error("movie starts at {found:?}, expected b·a = {expected:?}")]
    BadStart { expected: Vec<i64>, found: Vec<i64> },
    #[error("movie ends at {found:?}, expected a·b = {expected:?}")]
    BadEnd { expected: Vec<i64>, found: Vec<i64> },
    #[error("braids do not commute")]
    NotCommuting,
    #[error(transparent)]
    Exhausted(#[from] SearchExhausted),
    #[error("coloring has {found} colors for degree {degree}")]
    ColorLength { degree: usize, found: usize },
    #[error("color {color} is not an element of a quandle of size {size}")]
    ColorOutOfRange { color: usize, size: usize },
    #[error("coloring is not fixed by the boundary braids")]
    Inadmissible,
    #[error("cocycle is defined over a different quandle")]
    QuandleMismatch,
    #[error(transparent)]
    Quandle(#[from] crate::quandle::QuandleError),
}

/// A rewriting path from `b·a` to `a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusChartMovie {
    degree: usize,
    a: BraidWord,
    b: BraidWord,
    events: Vec<MovieEvent>,
}

impl TorusChartMovie {
    /// Assembles a movie; call [`validate_movie`] to check it.
    pub fn new(a: BraidWord, b: BraidWord, events: Vec<MovieEvent>) -> Result<Self, ChartError> {
        if a.degree() != b.degree() {
            return Err(BraidError::DegreeMismatch(a.degree(), b.degree()).into());
        }
        Ok(Self { degree: a.degree(), a, b, events })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn a(&self) -> &BraidWord {
        &self.a
    }

    pub fn b(&self) -> &BraidWord {
        &self.b
    }

    pub fn events(&self) -> &[MovieEvent] {
        &self.events
    }

    pub fn r3_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_r3()).count()
    }

    /// The word `b·a` the movie starts from.
    pub fn start_word(&self) -> Vec<BraidLetter> {
        let mut w = self.b.letters().to_vec();
        w.extend_from_slice(self.a.letters());
        w
    }

    /// The word `a·b` the movie ends at.
    pub fn end_word(&self) -> Vec<BraidLetter> {
        let mut w = self.a.letters().to_vec();
        w.extend_from_slice(self.b.letters());
        w
    }

    /// Every slice of the movie, starting with `b·a`; stops at the first
    /// invalid event.
    pub fn slices(&self) -> Result<Vec<Vec<BraidLetter>>, ChartError> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut w = self.start_word();
        out.push(w.clone());
        for (i, e) in self.events.iter().enumerate() {
            apply_event(&mut w, e, self.degree).map_err(|(expected, found)| ChartError::InvalidEvent {
                event: i,
                position: e.position(),
                expected,
                found,
            })?;
            out.push(w.clone());
        }
        Ok(out)
    }
}

fn signed(ls: &[BraidLetter]) -> Vec<i64> {
    ls.iter().map(|l| l.to_signed()).collect()
}

/// The letters an event expects to find before it applies.
fn expected_window(e: &MovieEvent, w: &[BraidLetter]) -> Vec<i64> {
    match *e {
        MovieEvent::R3 { labels: (i, j), signs, .. } => {
            alloc::vec![i as i64 * signs[0] as i64, j as i64 * signs[1] as i64, i as i64 * signs[2] as i64]
        }
        MovieEvent::R2Distant { position } | MovieEvent::R2Cancel { position } => {
            signed(w.get(position..(position + 2).min(w.len())).unwrap_or(&[]))
        }
        MovieEvent::R2Insert { .. } => Vec::new(),
    }
}

/// Applies `e` to `w` in place, or returns the expected and found windows.
pub(crate) fn apply_event(
    w: &mut Vec<BraidLetter>,
    e: &MovieEvent,
    degree: usize,
) -> Result<(), (Vec<i64>, Vec<i64>)> {
    let found = |len: usize, p: usize| signed(&w[p.min(w.len())..(p + len).min(w.len())]);
    match *e {
        MovieEvent::R3 { position: p, labels: (i, j), signs } => {
            let window = [
                BraidLetter::new(i.max(1), signs[0] > 0),
                BraidLetter::new(j.max(1), signs[1] > 0),
                BraidLetter::new(i.max(1), signs[2] > 0),
            ];
            let ok = i >= 1 && j >= 1 && i.max(j) < degree && p + 3 <= w.len() && w[p..p + 3] == window;
            let after = if ok { vertex::r3_after(window) } else { None };
            match after {
                Some(after) => {
                    w[p..p + 3].copy_from_slice(&after);
                    Ok(())
                }
                None => Err((expected_window(e, w), found(3, p))),
            }
        }
        MovieEvent::R2Distant { position: p } => {
            if p + 2 <= w.len() && w[p].index().abs_diff(w[p + 1].index()) >= 2 {
                w.swap(p, p + 1);
                Ok(())
            } else {
                Err((expected_window(e, w), found(2, p)))
            }
        }
        MovieEvent::R2Cancel { position: p } => {
            if p + 2 <= w.len() && w[p + 1] == w[p].inverse() {
                w.drain(p..p + 2);
                Ok(())
            } else {
                Err((expected_window(e, w), found(2, p)))
            }
        }
        MovieEvent::R2Insert { position: p, index, sign } => {
            if p <= w.len() && index >= 1 && index < degree && (sign == 1 || sign == -1) {
                let l = BraidLetter::new(index, sign > 0);
                w.splice(p..p, [l, l.inverse()]);
                Ok(())
            } else {
                Err((Vec::new(), found(0, p)))
            }
        }
    }
}

/// Replays the movie and checks its boundary words.
pub fn validate_movie(m: &TorusChartMovie) -> Result<(), ChartError> {
    let slices = m.slices()?;
    let first = &slices[0];
    if first != &m.start_word() {
        return Err(ChartError::BadStart { expected: signed(&m.start_word()), found: signed(first) });
    }
    let last = slices.last().expect("at least one slice");
    if last != &m.end_word() {
        return Err(ChartError::BadEnd { expected: signed(&m.end_word()), found: signed(last) });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::garside_delta;

    fn w(m: usize, ks: &[i64]) -> BraidWord {
        BraidWord::from_signed(m, ks).unwrap()
    }

    fn r3(position: usize, i: usize, j: usize) -> MovieEvent {
        MovieEvent::R3 { position, labels: (i, j), signs: [1, 1, 1] }
    }

    #[test]
    fn empty_movie_is_valid() {
        let m = TorusChartMovie::new(BraidWord::empty(3), BraidWord::empty(3), Vec::new()).unwrap();
        assert!(validate_movie(&m).is_ok());
    }

    #[test]
    fn slide_tile_replays() {
        let m = TorusChartMovie::new(w(3, &[1]), garside_delta(3).unwrap().pow(2), alloc::vec![r3(3, 1, 2), r3(1, 2, 1)])
            .unwrap();
        validate_movie(&m).unwrap();
        let s = m.slices().unwrap();
        assert_eq!(signed(&s[1]), [1, 2, 1, 2, 1, 2, 1]);
    }

    #[test]
    fn reordered_events_are_rejected() {
        let m = TorusChartMovie::new(w(3, &[1]), garside_delta(3).unwrap().pow(2), alloc::vec![r3(1, 2, 1), r3(3, 1, 2)])
            .unwrap();
        match validate_movie(&m) {
            Err(ChartError::InvalidEvent { event: 0, position: 1, expected, found }) => {
                assert_eq!(expected, [2, 1, 2]);
                assert_eq!(found, [2, 1, 1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn incomplete_movie_ends_wrong() {
        let m = TorusChartMovie::new(w(3, &[1]), garside_delta(3).unwrap().pow(2), alloc::vec![r3(3, 1, 2)]).unwrap();
        assert!(matches!(validate_movie(&m), Err(ChartError::BadEnd { .. })));
    }

    #[test]
    fn r2_events() {
        let mut x = alloc::vec![BraidLetter::pos(1), BraidLetter::pos(3)];
        apply_event(&mut x, &MovieEvent::R2Distant { position: 0 }, 4).unwrap();
        assert_eq!(signed(&x), [3, 1]);
        apply_event(&mut x, &MovieEvent::R2Insert { position: 1, index: 2, sign: -1 }, 4).unwrap();
        assert_eq!(signed(&x), [3, -2, 2, 1]);
        assert!(apply_event(&mut x, &MovieEvent::R2Distant { position: 1 }, 4).is_err());
        apply_event(&mut x, &MovieEvent::R2Cancel { position: 1 }, 4).unwrap();
        assert_eq!(signed(&x), [3, 1]);
        assert!(apply_event(&mut x, &MovieEvent::R2Insert { position: 0, index: 4, sign: 1 }, 4).is_err());
    }
}
