//! Quandle colorings of chart movies and the cocycle invariant.
//!
//! Every slice of a movie starts at the same corner of the square, so a
//! coloring is a single vector of strand colors there; colors further along a
//! slice follow from [`color_action`].

use alloc::vec::Vec;

use super::{validate_movie, vertex, ChartError, MovieEvent, TorusChartMovie};
use crate::braid::{BraidLetter, BraidWord};
use crate::quandle::{Cocycle3, LaurentPoly, Quandle};

/// Colors of the strands `1..=m` at the start of a slice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorVector(pub Vec<usize>);

impl ColorVector {
    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A white vertex seen by a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WhiteVertexRecord {
    pub color_triple: [usize; 3],
    pub sign: i8,
    /// Index of the R3 event in the movie.
    pub source_event: usize,
}

fn act(letters: &[BraidLetter], c: &mut [usize], q: &Quandle) -> Result<(), ChartError> {
    for l in letters {
        let i = l.index() - 1;
        let (x, y) = (c[i], c[i + 1]);
        if l.is_positive() {
            c[i] = q.op(y, x);
            c[i + 1] = x;
        } else {
            c[i] = y;
            c[i + 1] = q.right_quotient(x, y)?;
        }
    }
    Ok(())
}

fn check_colors(c: &ColorVector, degree: usize, q: &Quandle) -> Result<(), ChartError> {
    if c.len() != degree {
        return Err(ChartError::ColorLength { degree, found: c.len() });
    }
    match c.0.iter().find(|&&x| x >= q.size()) {
        Some(&color) => Err(ChartError::ColorOutOfRange { color, size: q.size() }),
        None => Ok(()),
    }
}

/// Pushes the colors `c` through `w`: `σ_i` sends `(c_i, c_{i+1})` to
/// `(c_{i+1} * c_i, c_i)` and `σ_i^{-1}` undoes it.
pub fn color_action(w: &BraidWord, c: &ColorVector, q: &Quandle) -> Result<ColorVector, ChartError> {
    check_colors(c, w.degree(), q)?;
    let mut out = c.0.clone();
    act(w.letters(), &mut out, q)?;
    Ok(ColorVector(out))
}

fn is_fixed(w: &BraidWord, c: &[usize], q: &Quandle) -> Result<bool, ChartError> {
    let mut out = c.to_vec();
    act(w.letters(), &mut out, q)?;
    Ok(out == c)
}

/// All color vectors fixed by both `a` and `b`, in lexicographic order.
pub fn enumerate_colorings(a: &BraidWord, b: &BraidWord, q: &Quandle) -> Result<Vec<ColorVector>, ChartError> {
    if a.degree() != b.degree() {
        return Err(crate::braid::BraidError::DegreeMismatch(a.degree(), b.degree()).into());
    }
    let m = a.degree();
    let n = q.size();
    let mut out = Vec::new();
    let mut c = alloc::vec![0usize; m];
    loop {
        if is_fixed(a, &c, q)? && is_fixed(b, &c, q)? {
            out.push(ColorVector(c.clone()));
        }
        // Odometer with the last strand fastest.
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            c[k] += 1;
            if c[k] < n {
                break;
            }
            c[k] = 0;
        }
    }
}

struct PreparedVertex {
    /// Letters from the slice start to the sector the vertex is read from.
    path: Vec<BraidLetter>,
    first_strand: usize,
    sign: i8,
    source_event: usize,
}

/// A validated movie with each white vertex's reading precomputed, so that
/// colorings can be evaluated independently of one another.
pub struct PreparedMovie {
    a: BraidWord,
    b: BraidWord,
    vertices: Vec<PreparedVertex>,
}

impl PreparedMovie {
    pub fn new(m: &TorusChartMovie) -> Result<Self, ChartError> {
        validate_movie(m)?;
        let slices = m.slices()?;
        let mut vertices = Vec::new();
        for (idx, e) in m.events().iter().enumerate() {
            if let MovieEvent::R3 { position: p, .. } = *e {
                let w = &slices[idx];
                let before = [w[p], w[p + 1], w[p + 2]];
                let after = vertex::r3_after(before).expect("validated R3 event");
                let reading = vertex::read_vertex(before, after).expect("validated R3 event");
                let mut path = w[..p].to_vec();
                path.extend(reading.to_start);
                vertices.push(PreparedVertex {
                    path,
                    first_strand: reading.first_strand,
                    sign: reading.sign,
                    source_event: idx,
                });
            }
        }
        Ok(Self { a: m.a().clone(), b: m.b().clone(), vertices })
    }

    pub fn colorings(&self, q: &Quandle) -> Result<Vec<ColorVector>, ChartError> {
        enumerate_colorings(&self.a, &self.b, q)
    }

    /// White-vertex records of an admissible coloring, in event order.
    pub fn records(&self, c: &ColorVector, q: &Quandle) -> Result<Vec<WhiteVertexRecord>, ChartError> {
        check_colors(c, self.a.degree(), q)?;
        if !is_fixed(&self.a, &c.0, q)? || !is_fixed(&self.b, &c.0, q)? {
            return Err(ChartError::Inadmissible);
        }
        let mut out = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let mut colors = c.0.clone();
            act(&v.path, &mut colors, q)?;
            let s = v.first_strand;
            out.push(WhiteVertexRecord {
                color_triple: [colors[s], colors[s + 1], colors[s + 2]],
                sign: v.sign,
                source_event: v.source_event,
            });
        }
        Ok(out)
    }

    /// The exponent of the Boltzmann weight of an admissible coloring.
    pub fn weight_exponent(&self, c: &ColorVector, theta: &Cocycle3) -> Result<i64, ChartError> {
        let records = self.records(c, theta.quandle())?;
        Ok(records
            .iter()
            .map(|r| {
                let [x, y, z] = r.color_triple;
                i64::from(r.sign) * theta.exponent(x, y, z)
            })
            .sum())
    }
}

/// The white vertices of `m` with the colors and signs they carry under `c`.
pub fn white_vertices(m: &TorusChartMovie, c: &ColorVector, q: &Quandle) -> Result<Vec<WhiteVertexRecord>, ChartError> {
    PreparedMovie::new(m)?.records(c, q)
}

/// The Boltzmann weight `t^{Σ sign·θ(triple)}` of one coloring.
pub fn boltzmann_weight(m: &TorusChartMovie, c: &ColorVector, theta: &Cocycle3) -> Result<LaurentPoly, ChartError> {
    Ok(LaurentPoly::monomial(1, PreparedMovie::new(m)?.weight_exponent(c, theta)?))
}

/// The sum of Boltzmann weights over all admissible colorings by `q`.
pub fn cocycle_invariant(m: &TorusChartMovie, q: &Quandle, theta: &Cocycle3) -> Result<LaurentPoly, ChartError> {
    if theta.quandle() != q {
        return Err(ChartError::QuandleMismatch);
    }
    let prepared = PreparedMovie::new(m)?;
    let mut total = LaurentPoly::zero();
    for c in prepared.colorings(q)? {
        total.add_term(1, prepared.weight_exponent(&c, theta)?);
    }
    Ok(total)
}
