//! 3-cocycles with values in the infinite cyclic group `⟨t⟩`.
//!
//! A cocycle `θ(x, y, z) = t^{e(x, y, z)}` is stored as its integer exponent
//! table `e`, so the multiplicative cocycle identities become additive ones.

use alloc::vec::Vec;

use super::{Quandle, QuandleError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocycle3 {
    quandle: Quandle,
    exponents: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CocycleViolation {
    /// `e(x, y, z) != 0` although `x = y` or `y = z`.
    Degenerate { x: usize, y: usize, z: usize, exponent: i64 },
    /// The 3-cocycle identity fails at `(x, y, z, w)`; `lhs`/`rhs` are the
    /// exponents of both sides.
    CocycleIdentity { x: usize, y: usize, z: usize, w: usize, lhs: i64, rhs: i64 },
}

impl Cocycle3 {
    /// `exponents[(x * N + y) * N + z] = e(x, y, z)`.
    pub fn new(quandle: Quandle, exponents: Vec<i64>) -> Result<Self, QuandleError> {
        let n = quandle.size();
        if exponents.len() != n * n * n {
            return Err(QuandleError::BadExponents { expected: n * n * n, found: exponents.len() });
        }
        Ok(Self { quandle, exponents })
    }

    pub fn from_fn(quandle: Quandle, e: impl Fn(usize, usize, usize) -> i64) -> Self {
        let n = quandle.size();
        let mut exponents = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    exponents.push(e(x, y, z));
                }
            }
        }
        Self { quandle, exponents }
    }

    /// The cocycle with every value `1 = t^0`.
    pub fn zero(quandle: Quandle) -> Self {
        Self::from_fn(quandle, |_, _, _| 0)
    }

    pub fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    pub fn exponent(&self, x: usize, y: usize, z: usize) -> i64 {
        let n = self.quandle.size();
        self.exponents[(x * n + y) * n + z]
    }

    pub fn set_exponent(&mut self, x: usize, y: usize, z: usize, e: i64) {
        let n = self.quandle.size();
        self.exponents[(x * n + y) * n + z] = e;
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Nested `[x][y][z]` view of the exponent table.
    pub fn exponent_cube(&self) -> Vec<Vec<Vec<i64>>> {
        let n = self.quandle.size();
        (0..n)
            .map(|x| (0..n).map(|y| (0..n).map(|z| self.exponent(x, y, z)).collect()).collect())
            .collect()
    }
}

fn on_t3(n: usize, e: impl Fn(i64, i64, i64) -> i64) -> Result<Cocycle3, QuandleError> {
    if n != 3 {
        return Err(QuandleError::UnsupportedSize(n));
    }
    let q = super::trivial_quandle(3)?;
    Ok(Cocycle3::from_fn(q, |x, y, z| e(x as i64, y as i64, z as i64)))
}

/// `θ(x, y, z) = t^{(x-y)(y-z)(z-x)z}` on the trivial quandle `{0, 1, 2}`.
pub fn theta_z(n: usize) -> Result<Cocycle3, QuandleError> {
    on_t3(n, |x, y, z| (x - y) * (y - z) * (z - x) * z)
}

/// `θ'(x, y, z) = t^{(x-y)(y-z)(z-x)x}` on the trivial quandle `{0, 1, 2}`.
pub fn theta_x(n: usize) -> Result<Cocycle3, QuandleError> {
    on_t3(n, |x, y, z| (x - y) * (y - z) * (z - x) * x)
}

/// Exhaustively checks the degeneracy condition over `X³` and the 3-cocycle
/// identity over `X⁴`:
///
/// `e(x,z,w) - e(x,y,w) + e(x,y,z) = e(x*y,z,w) - e(x*z,y*z,w) + e(x*w,y*w,z*w)`.
pub fn validate_cocycle(c: &Cocycle3) -> Result<(), Vec<CocycleViolation>> {
    let q = &c.quandle;
    let n = q.size();
    let mut violations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let e = c.exponent(x, y, z);
                if (x == y || y == z) && e != 0 {
                    violations.push(CocycleViolation::Degenerate { x, y, z, exponent: e });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let lhs = c.exponent(x, z, w) - c.exponent(x, y, w) + c.exponent(x, y, z);
                    let rhs = c.exponent(q.op(x, y), z, w) - c.exponent(q.op(x, z), q.op(y, z), w)
                        + c.exponent(q.op(x, w), q.op(y, w), q.op(z, w));
                    if lhs != rhs {
                        violations.push(CocycleViolation::CocycleIdentity { x, y, z, w, lhs, rhs });
                    }
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
