//! Finite quandles, 3-cocycles and the Laurent polynomial value ring.
//!
//! Elements of a quandle of size `N` are the dense indices `0..N`; the
//! operation is stored as a table with `table[a][b] = a * b`.

mod cocycle;
mod laurent;

pub use cocycle::{theta_x, theta_z, validate_cocycle, Cocycle3, CocycleViolation};
pub use laurent::LaurentPoly;

use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("quandle must have at least one element")]
    Empty,
    #[error("operation table is not {0}x{0}")]
    BadShape(usize),
    #[error("table entry {value} at ({row}, {col}) is not an element")]
    BadEntry { row: usize, col: usize, value: usize },
    #[error("exponent table has {found} entries, expected {expected}")]
    BadExponents { expected: usize, found: usize },
    #[error("builtin cocycle is only defined on the 3-element trivial quandle, not size {0}")]
    UnsupportedSize(usize),
    #[error("no element c with c * {b} = {a}")]
    NoRightQuotient { a: usize, b: usize },
}

/// A binary operation on `0..N`; see [`validate_quandle`] for the axioms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    size: usize,
    table: Vec<usize>,
    // rdiv[a * size + b] = c with c * b = a, when unique
    rdiv: Vec<Option<usize>>,
}

/// A failure of one of the quandle axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuandleViolation {
    /// `a * a != a`.
    Idempotence { a: usize },
    /// `x ↦ x * b` maps `a1` and `a2` to the same element.
    RightTranslation { b: usize, a1: usize, a2: usize },
    /// `(a * b) * c != (a * c) * (b * c)`.
    SelfDistributivity { a: usize, b: usize, c: usize },
}

impl Quandle {
    /// Builds the operation from its rows; only the shape is checked.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let size = rows.len();
        if size == 0 {
            return Err(QuandleError::Empty);
        }
        let mut table = Vec::with_capacity(size * size);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(QuandleError::BadShape(size));
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= size {
                    return Err(QuandleError::BadEntry { row, col, value });
                }
                table.push(value);
            }
        }
        let mut rdiv = alloc::vec![None; size * size];
        let mut hits = alloc::vec![0u32; size * size];
        for c in 0..size {
            for b in 0..size {
                let a = table[c * size + b];
                hits[a * size + b] += 1;
                rdiv[a * size + b] = Some(c);
            }
        }
        for (slot, &h) in rdiv.iter_mut().zip(hits.iter()) {
            if h != 1 {
                *slot = None;
            }
        }
        Ok(Self { size, table, rdiv })
    }

    pub fn from_fn(size: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, QuandleError> {
        let rows: Vec<Vec<usize>> = (0..size).map(|a| (0..size).map(|b| op(a, b)).collect()).collect();
        Self::from_table(&rows)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `a * b`.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    /// The unique `c` with `c * b = a`, when right translation by `b` is
    /// bijective.
    pub fn right_quotient(&self, a: usize, b: usize) -> Result<usize, QuandleError> {
        self.rdiv[a * self.size + b].ok_or(QuandleError::NoRightQuotient { a, b })
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.op(a, b) == a))
    }
}

/// The trivial quandle `a * b = a` on `n` elements.
pub fn trivial_quandle(n: usize) -> Result<Quandle, QuandleError> {
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    Quandle::from_fn(n, |a, _| a)
}

/// The dihedral quandle `a * b = 2b - a (mod n)`.
pub fn dihedral_quandle(n: usize) -> Result<Quandle, QuandleError> {
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    Quandle::from_fn(n, |a, b| (2 * b + n - a % n) % n)
}

/// Checks idempotence, bijectivity of right translations and right
/// self-distributivity exhaustively, reporting every violation.
pub fn validate_quandle(q: &Quandle) -> Result<(), Vec<QuandleViolation>> {
    let n = q.size;
    let mut violations = Vec::new();
    for a in 0..n {
        if q.op(a, a) != a {
            violations.push(QuandleViolation::Idempotence { a });
        }
    }
    for b in 0..n {
        let mut preimage = alloc::vec![None; n];
        for a in 0..n {
            let v = q.op(a, b);
            match preimage[v] {
                Some(a1) => violations.push(QuandleViolation::RightTranslation { b, a1, a2: a }),
                None => preimage[v] = Some(a),
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c)) {
                    violations.push(QuandleViolation::SelfDistributivity { a, b, c });
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn trivial_quandles_are_quandles() {
        for n in 1..=5 {
            let q = trivial_quandle(n).unwrap();
            assert_eq!(validate_quandle(&q), Ok(()));
            assert!(q.is_trivial());
        }
        assert_eq!(trivial_quandle(3).unwrap().rows(), vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]);
        assert_eq!(trivial_quandle(0), Err(QuandleError::Empty));
    }

    #[test]
    fn constant_to_the_right_is_not_a_quandle() {
        // a * b = b: idempotent, but right translations are constant.
        let q = Quandle::from_fn(2, |_, b| b).unwrap();
        let v = validate_quandle(&q).unwrap_err();
        assert!(v.iter().all(|x| !matches!(x, QuandleViolation::Idempotence { .. })));
        assert!(v.contains(&QuandleViolation::RightTranslation { b: 0, a1: 0, a2: 1 }));
        assert!(v.contains(&QuandleViolation::RightTranslation { b: 1, a1: 0, a2: 1 }));
    }

    #[test]
    fn dihedral_three_is_a_quandle() {
        let q = dihedral_quandle(3).unwrap();
        assert_eq!(validate_quandle(&q), Ok(()));
        assert_eq!(q.op(0, 1), 2);
        assert_eq!(q.right_quotient(2, 1), Ok(0));
    }

    #[test]
    fn non_idempotent_table_is_reported() {
        let q = Quandle::from_fn(2, |a, _| 1 - a).unwrap();
        let v = validate_quandle(&q).unwrap_err();
        assert!(v.contains(&QuandleViolation::Idempotence { a: 0 }));
    }

    #[test]
    fn shape_errors() {
        assert_eq!(Quandle::from_table(&[vec![0, 0]]), Err(QuandleError::BadShape(1)));
        assert_eq!(
            Quandle::from_table(&[vec![0, 5], vec![1, 1]]),
            Err(QuandleError::BadEntry { row: 0, col: 1, value: 5 })
        );
    }
}
