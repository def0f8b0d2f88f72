//! Braid words of a fixed degree and Artin's action on the free group.
//!
//! Braid equality is decided through the Artin representation, which is
//! faithful: two braids are equal iff they induce the same automorphism of
//! `F_m`. Image words can grow exponentially with the braid length, so the
//! equality check refuses inputs longer than [`DEFAULT_MAX_BRAID_LEN`] unless
//! the caller raises the limit.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Default cap on the length of each input to [`braids_equal`].
pub const DEFAULT_MAX_BRAID_LEN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("generator index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: i64, degree: usize },
    #[error("invalid braid token {0:?}")]
    InvalidToken(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} is too small")]
    DegreeTooSmall(usize),
    #[error("braid word of length {len} exceeds the limit of {limit} letters")]
    TooLong { len: usize, limit: usize },
}

/// The generator `σ_index` (`positive`) or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidLetter {
    index: usize,
    positive: bool,
}

impl BraidLetter {
    pub fn new(index: usize, positive: bool) -> Self {
        assert!(index >= 1, "braid generators are 1-based");
        Self { index, positive }
    }

    pub fn pos(index: usize) -> Self {
        Self::new(index, true)
    }

    pub fn neg(index: usize) -> Self {
        Self::new(index, false)
    }

    /// Builds a letter from its signed-integer encoding (`-k` is `σ_k^{-1}`).
    pub fn from_signed(k: i64) -> Option<Self> {
        if k == 0 {
            return None;
        }
        Some(Self { index: k.unsigned_abs() as usize, positive: k > 0 })
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i8 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn to_signed(self) -> i64 {
        if self.positive {
            self.index as i64
        } else {
            -(self.index as i64)
        }
    }

    pub fn inverse(self) -> Self {
        Self { index: self.index, positive: !self.positive }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "s{}", self.index)
        } else {
            write!(f, "s{}^-1", self.index)
        }
    }
}

/// A word in `σ_1, …, σ_{m-1}` and their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    degree: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(degree: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if degree == 0 {
            return Err(BraidError::DegreeTooSmall(degree));
        }
        if let Some(bad) = letters.iter().find(|l| l.index >= degree) {
            return Err(BraidError::IndexOutOfRange { index: bad.to_signed(), degree });
        }
        Ok(Self { degree, letters })
    }

    /// The identity braid.
    pub fn empty(degree: usize) -> Self {
        Self { degree: degree.max(1), letters: Vec::new() }
    }

    pub fn from_signed(degree: usize, ks: &[i64]) -> Result<Self, BraidError> {
        let letters = ks
            .iter()
            .map(|&k| {
                BraidLetter::from_signed(k).ok_or(BraidError::IndexOutOfRange { index: k, degree })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(degree, letters)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        check_degrees(self, other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { degree: self.degree, letters })
    }

    /// Letterwise inverse: reversed order, every sign negated.
    pub fn reverse_inverse(&self) -> BraidWord {
        BraidWord {
            degree: self.degree,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Same letters in reverse order, signs kept.
    pub fn reversed(&self) -> BraidWord {
        BraidWord { degree: self.degree, letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.reverse_inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { degree: self.degree, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.to_signed())?;
        }
        Ok(())
    }
}

fn check_degrees(u: &BraidWord, v: &BraidWord) -> Result<(), BraidError> {
    if u.degree != v.degree {
        Err(BraidError::DegreeMismatch(u.degree, v.degree))
    } else {
        Ok(())
    }
}

/// Parses whitespace-separated signed generator indices, e.g. `"1 2 -1"`.
pub fn parse_braid(text: &str, degree: usize) -> Result<BraidWord, BraidError> {
    let mut ks = Vec::new();
    for tok in text.split_whitespace() {
        let k: i64 = tok.parse().map_err(|_| BraidError::InvalidToken(tok.to_string()))?;
        if k == 0 || k.unsigned_abs() as usize >= degree {
            return Err(BraidError::IndexOutOfRange { index: k, degree });
        }
        ks.push(k);
    }
    BraidWord::from_signed(degree, &ks)
}

/// Garside's half twist `Δ` as the positive word
/// `(σ_1 ⋯ σ_{m-1})(σ_1 ⋯ σ_{m-2}) ⋯ (σ_1)`.
pub fn garside_delta(degree: usize) -> Result<BraidWord, BraidError> {
    if degree < 2 {
        return Err(BraidError::DegreeTooSmall(degree));
    }
    let mut letters = Vec::new();
    for top in (1..degree).rev() {
        letters.extend((1..=top).map(BraidLetter::pos));
    }
    BraidWord::new(degree, letters)
}

/// A bijection of `{0, …, m-1}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Self { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    fn swap_values(&mut self, a: usize, b: usize) {
        for v in self.images.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }
}

/// Strand permutation of a braid: the strand starting at position `j`
/// (0-based) ends at position `perm.apply(j)`. Letter signs are ignored.
pub fn permutation_of(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.degree);
    for l in &w.letters {
        p.swap_values(l.index - 1, l.index);
    }
    p
}

/// A freely reduced word in `x_1, …, x_m`; letter `j > 0` is `x_j` and
/// `-j` is `x_j^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(j: i32) -> Self {
        assert!(j != 0);
        Self { letters: alloc::vec![j] }
    }

    /// Builds a word and freely reduces it.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "0 is not a free generator");
            push_reduced(&mut out, l);
        }
        Self { letters: out }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        FreeWord { letters: out }
    }

    /// Replaces every `x_j` by `images[j-1]` (and `x_j^{-1}` by its inverse).
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &x in &img.letters {
                    push_reduced(&mut out, x);
                }
            } else {
                for &x in img.letters.iter().rev() {
                    push_reduced(&mut out, -x);
                }
            }
        }
        FreeWord { letters: out }
    }

    /// Exponent sum of each generator; `counts[j-1]` belongs to `x_j`.
    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut sums = alloc::vec![0i64; generators];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        sums
    }

    /// Evaluates the word in a group given by `mul`/`inv` closures.
    pub fn evaluate<G: Clone>(
        &self,
        values: &[G],
        one: G,
        mul: impl Fn(&G, &G) -> G,
        inv: impl Fn(&G) -> G,
    ) -> G {
        self.letters.iter().fold(one, |acc, &l| {
            let v = &values[l.unsigned_abs() as usize - 1];
            if l > 0 {
                mul(&acc, v)
            } else {
                mul(&acc, &inv(v))
            }
        })
    }
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l > 0 {
                write!(f, "x{}", l)?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of `F_m` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorImages {
    images: Vec<FreeWord>,
}

impl GeneratorImages {
    pub fn identity(degree: usize) -> Self {
        Self { images: (1..=degree as i32).map(FreeWord::generator).collect() }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Self {
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `x_j` (1-based).
    pub fn image(&self, j: usize) -> &FreeWord {
        &self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| w.letters == [i as i32 + 1])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GeneratorImages) -> GeneratorImages {
        GeneratorImages { images: other.images.iter().map(|w| w.substitute(&self.images)).collect() }
    }

    /// Generator-class permutation of the abelianized map, if it is one.
    ///
    /// `perm.apply(j-1) = k-1` when `x_j` maps to a word with exponent sum
    /// one in `x_k` and zero elsewhere.
    pub fn abelian_permutation(&self) -> Option<Permutation> {
        let m = self.images.len();
        let mut images = Vec::with_capacity(m);
        for w in &self.images {
            let sums = w.exponent_sums(m);
            let mut target = None;
            for (k, &s) in sums.iter().enumerate() {
                match s {
                    0 => {}
                    1 if target.is_none() => target = Some(k),
                    _ => return None,
                }
            }
            images.push(target?);
        }
        Permutation::from_images(images)
    }

    fn apply_letter(&mut self, letter: BraidLetter) {
        let rule = letter_images(self.images.len(), letter);
        for w in self.images.iter_mut() {
            *w = w.substitute(&rule);
        }
    }
}

/// Artin's automorphism of a single generator or its inverse.
fn letter_images(degree: usize, letter: BraidLetter) -> Vec<FreeWord> {
    let i = letter.index as i32;
    let mut images: Vec<FreeWord> = (1..=degree as i32).map(FreeWord::generator).collect();
    let (lo, hi) = (letter.index - 1, letter.index);
    if letter.positive {
        // x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i
        images[lo] = FreeWord::from_letters([i, i + 1, -i]);
        images[hi] = FreeWord::generator(i);
    } else {
        // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
        images[lo] = FreeWord::generator(i + 1);
        images[hi] = FreeWord::from_letters([-(i + 1), i, i + 1]);
    }
    images
}

/// Artin's automorphism of `w`, composed so that
/// `artin(u·v) = artin(v) ∘ artin(u)`.
pub fn artin(w: &BraidWord) -> GeneratorImages {
    let mut g = GeneratorImages::identity(w.degree);
    for &l in &w.letters {
        g.apply_letter(l);
    }
    g
}

/// Decides `u = v` in the braid group with the default length cap.
pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, BraidError> {
    braids_equal_with_limit(u, v, DEFAULT_MAX_BRAID_LEN)
}

pub fn braids_equal_with_limit(u: &BraidWord, v: &BraidWord, max_len: usize) -> Result<bool, BraidError> {
    check_degrees(u, v)?;
    for w in [u, v] {
        if w.len() > max_len {
            return Err(BraidError::TooLong { len: w.len(), limit: max_len });
        }
    }
    Ok(artin(&u.concat(&v.reverse_inverse())?).is_identity())
}

/// Whether `a·b = b·a`.
pub fn commute(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    check_degrees(a, b)?;
    let limit = DEFAULT_MAX_BRAID_LEN.max(a.len() + b.len());
    braids_equal_with_limit(&a.concat(b)?, &b.concat(a)?, limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(m: usize, ks: &[i64]) -> BraidWord {
        BraidWord::from_signed(m, ks).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_braid("1 1 2 2", 3).unwrap().to_signed(), [1, 1, 2, 2]);
        assert_eq!(parse_braid("1 2 1", 3).unwrap(), garside_delta(3).unwrap());
        assert_eq!(
            parse_braid("3 1", 3),
            Err(BraidError::IndexOutOfRange { index: 3, degree: 3 })
        );
        assert!(matches!(parse_braid("1 x", 3), Err(BraidError::InvalidToken(_))));
        assert!(matches!(parse_braid("0", 3), Err(BraidError::IndexOutOfRange { .. })));
        assert!(parse_braid("  ", 3).unwrap().is_empty());
        assert_eq!(parse_braid("-2 1", 3).unwrap().to_signed(), [-2, 1]);
    }

    #[test]
    fn garside_words() {
        assert_eq!(garside_delta(3).unwrap().to_signed(), [1, 2, 1]);
        assert_eq!(garside_delta(4).unwrap().to_signed(), [1, 2, 3, 1, 2, 1]);
        assert_eq!(garside_delta(2).unwrap().to_signed(), [1]);
        assert_eq!(garside_delta(1), Err(BraidError::DegreeTooSmall(1)));
    }

    #[test]
    fn permutations() {
        assert!(permutation_of(&BraidWord::empty(3)).is_identity());
        for n in -3..=3 {
            let w = bw(3, &[1, 1]).concat(&bw(3, &[2, 2]).pow(n)).unwrap();
            assert!(permutation_of(&w).is_identity());
        }
        let delta = permutation_of(&garside_delta(3).unwrap());
        assert_eq!(delta.images(), &[2, 1, 0]);
    }

    #[test]
    fn artin_generator_tables() {
        let g = artin(&bw(3, &[1]));
        assert_eq!(g.image(1).letters(), &[1, 2, -1]);
        assert_eq!(g.image(2).letters(), &[1]);
        assert_eq!(g.image(3).letters(), &[3]);
        let g = artin(&bw(3, &[-2]));
        assert_eq!(g.image(1).letters(), &[1]);
        assert_eq!(g.image(2).letters(), &[3]);
        assert_eq!(g.image(3).letters(), &[-3, 2, 3]);
        assert!(artin(&bw(3, &[1, -1])).is_identity());
    }

    #[test]
    fn full_twist_conjugates_by_product() {
        // Artin(Δ²)(x_j) = (x1 x2 x3) x_j (x1 x2 x3)^{-1}
        let d2 = garside_delta(3).unwrap().pow(2);
        let g = artin(&d2);
        let p = FreeWord::from_letters([1, 2, 3]);
        for j in 1..=3 {
            let expect = p.mul(&FreeWord::generator(j)).mul(&p.inverse());
            assert_eq!(g.image(j as usize), &expect);
        }
    }

    #[test]
    fn equality_and_commutation() {
        assert!(braids_equal(&bw(3, &[1, 2, 1]), &bw(3, &[2, 1, 2])).unwrap());
        assert!(braids_equal(&bw(4, &[1, 3]), &bw(4, &[3, 1])).unwrap());
        assert!(!braids_equal(&bw(3, &[1]), &bw(3, &[2])).unwrap());
        assert_eq!(
            braids_equal(&bw(3, &[1]), &bw(4, &[1])),
            Err(BraidError::DegreeMismatch(3, 4))
        );
        let d2 = garside_delta(3).unwrap().pow(2);
        for n in -2..=2 {
            let a = bw(3, &[1, 1]).concat(&bw(3, &[2, 2]).pow(n)).unwrap();
            assert!(commute(&a, &d2).unwrap());
        }
        let d2_4 = garside_delta(4).unwrap().pow(2);
        assert!(commute(&bw(4, &[1, 1, 2, 2, 3, 3]), &d2_4).unwrap());
        assert!(!commute(&bw(3, &[1]), &bw(3, &[2])).unwrap());
    }

    #[test]
    fn length_cap() {
        let long = bw(3, &[1; 65]);
        assert_eq!(
            braids_equal(&long, &long),
            Err(BraidError::TooLong { len: 65, limit: 64 })
        );
        assert!(braids_equal_with_limit(&long, &long, 100).unwrap());
    }

    #[test]
    fn free_word_reduction() {
        let w = FreeWord::from_letters([1, 2, -2, -1, 3]);
        assert_eq!(w.letters(), &[3]);
        assert!(w.is_reduced());
        assert!(w.mul(&w.inverse()).is_identity());
        assert_eq!(FreeWord::from_letters(w.letters().iter().copied()), w);
    }
}
