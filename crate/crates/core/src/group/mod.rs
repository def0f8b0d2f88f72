//! Link-group presentations, abelianization and free-abelian certificates.
//!
//! The link group of the torus-covering T²-link with boundary braids `a`, `b`
//! is `⟨x_1, …, x_m | x_j = Artin(a)(x_j) = Artin(b)(x_j)⟩`.

mod rewriting;
mod snf;

pub use rewriting::{knuth_bendix, ExhaustionReason, KbExhausted, KbLimits, RewriteSystem};
pub use snf::invariant_factors;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::braid::{artin, BraidError, BraidWord, FreeWord};

/// Generators `x_1..x_m` and freely reduced relators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<FreeWord>,
}

impl GroupPresentation {
    /// Reduces every relator and drops trivial ones.
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Self {
        let relators = relators
            .into_iter()
            .map(|r| FreeWord::from_letters(r.letters().iter().copied()))
            .filter(|r| !r.is_identity())
            .collect();
        Self { generators, relators }
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// Relator exponent-sum matrix, one row per relator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| r.exponent_sums(self.generators)).collect()
    }
}

/// Presentation of the fundamental group of the complement, read off the
/// boundary braids.
///
/// Relators are `x_j^{-1} Artin(a)(x_j)` followed by `x_j^{-1} Artin(b)(x_j)`;
/// trivial and repeated relators are dropped. Commutation of `a` and `b` is
/// not checked here.
pub fn link_group(a: &BraidWord, b: &BraidWord) -> Result<GroupPresentation, BraidError> {
    if a.degree() != b.degree() {
        return Err(BraidError::DegreeMismatch(a.degree(), b.degree()));
    }
    let m = a.degree();
    let mut relators: Vec<FreeWord> = Vec::new();
    for images in [artin(a), artin(b)] {
        for j in 1..=m {
            let r = FreeWord::generator(-(j as i32)).mul(images.image(j));
            if !r.is_identity() && !relators.contains(&r) {
                relators.push(r);
            }
        }
    }
    Ok(GroupPresentation::new(m, relators))
}

/// `Z^rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | d_2 | …` and every `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_free_abelian_of_rank(&self, rank: usize) -> bool {
        self.rank == rank && self.torsion.is_empty()
    }
}

pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let m = p.generator_count();
    let matrix: Vec<Vec<BigInt>> = p
        .exponent_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let factors = invariant_factors(&matrix, m);
    AbelianInvariants {
        rank: m - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// `[x_i, x_j] = x_i x_j x_i^{-1} x_j^{-1}` (1-based).
pub fn commutator(i: usize, j: usize) -> FreeWord {
    let (i, j) = (i as i32, j as i32);
    FreeWord::from_letters([i, j, -i, -j])
}

/// A complete rewriting system in which every relator and every commutator
/// of generators rewrites to the empty word. Together with abelianization
/// `Z^rank` this proves the group is free abelian of that rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAbelianCertificate {
    pub rank: usize,
    pub abelianization: AbelianInvariants,
    pub system: RewriteSystem,
}

impl FreeAbelianCertificate {
    /// Re-checks the certificate against `p` from scratch.
    pub fn verify(&self, p: &GroupPresentation) -> bool {
        let m = p.generator_count();
        self.system.generators() == m
            && self.system.is_complete()
            && self.system.verify_local_confluence()
            && abelianization(p).is_free_abelian_of_rank(self.rank)
            && self.abelianization.is_free_abelian_of_rank(self.rank)
            && p.relators().iter().all(|r| self.system.reduce(r.letters()).is_empty())
            && (1..=m).all(|i| (i + 1..=m).all(|j| self.system.reduce(commutator(i, j).letters()).is_empty()))
            && (1..=m as i32).all(|j| self.system.reduce(&[j, -j]).is_empty() && self.system.reduce(&[-j, j]).is_empty())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// The abelianization is not `Z^rank`.
    Abelianization(AbelianInvariants),
    /// The group is not abelian: in a complete system `[x_i, x_j]` has the
    /// nonempty normal form `normal_form`.
    NonCommuting { i: usize, j: usize, normal_form: Vec<i32> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeAbelianVerdict {
    Certified(FreeAbelianCertificate),
    Refuted(Refutation),
    Inconclusive(KbExhausted),
}

/// Decides whether `p` presents `Z^rank`, as far as completion allows.
pub fn certify_free_abelian(p: &GroupPresentation, rank: usize, limits: &KbLimits) -> FreeAbelianVerdict {
    let ab = abelianization(p);
    if !ab.is_free_abelian_of_rank(rank) {
        return FreeAbelianVerdict::Refuted(Refutation::Abelianization(ab));
    }
    let system = match knuth_bendix(p, limits) {
        Ok(s) => s,
        Err(e) => return FreeAbelianVerdict::Inconclusive(e),
    };
    let m = p.generator_count();
    for i in 1..=m {
        for j in i + 1..=m {
            let nf = system.reduce(commutator(i, j).letters());
            if !nf.is_empty() {
                return FreeAbelianVerdict::Refuted(Refutation::NonCommuting { i, j, normal_form: nf });
            }
        }
    }
    FreeAbelianVerdict::Certified(FreeAbelianCertificate { rank, abelianization: ab, system })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{garside_delta, permutation_of};
    use alloc::vec;

    fn s_n(n: i64) -> (BraidWord, BraidWord) {
        let a = BraidWord::from_signed(3, &[1, 1]).unwrap();
        let a = a.concat(&BraidWord::from_signed(3, &[2, 2]).unwrap().pow(n)).unwrap();
        (a, garside_delta(3).unwrap().pow(2))
    }

    #[test]
    fn trivial_braids_give_free_group() {
        let e = BraidWord::empty(2);
        let p = link_group(&e, &e).unwrap();
        assert_eq!(p.generator_count(), 2);
        assert!(p.relators().is_empty());
        assert_eq!(abelianization(&p), AbelianInvariants { rank: 2, torsion: vec![] });
    }

    #[test]
    fn degree_mismatch() {
        assert_eq!(
            link_group(&BraidWord::empty(2), &BraidWord::empty(3)),
            Err(BraidError::DegreeMismatch(2, 3))
        );
    }

    #[test]
    fn z_mod_two() {
        let p = GroupPresentation::new(1, vec![FreeWord::from_letters([1, 1])]);
        assert_eq!(abelianization(&p), AbelianInvariants { rank: 0, torsion: vec![BigInt::from(2)] });
    }

    #[test]
    fn rank_three_abelianizations() {
        for n in -5..=5 {
            let (a, b) = s_n(n);
            assert!(permutation_of(&a).is_identity() && permutation_of(&b).is_identity());
            let p = link_group(&a, &b).unwrap();
            for row in p.exponent_matrix() {
                assert!(row.iter().all(|&x| x == 0), "n = {n}");
            }
            assert!(abelianization(&p).is_free_abelian_of_rank(3), "n = {n}");
        }
    }

    #[test]
    fn s0_completes_to_free_abelian() {
        let (a, b) = s_n(0);
        let p = link_group(&a, &b).unwrap();
        let sys = knuth_bendix(&p, &KbLimits::default()).unwrap();
        for i in 1..=3 {
            for j in i + 1..=3 {
                assert!(sys.reduce(commutator(i, j).letters()).is_empty());
            }
        }
    }

    #[test]
    fn free_group_is_not_free_abelian() {
        let p = GroupPresentation::new(2, vec![]);
        match certify_free_abelian(&p, 2, &KbLimits::default()) {
            FreeAbelianVerdict::Refuted(Refutation::NonCommuting { i: 1, j: 2, normal_form }) => {
                assert_eq!(normal_form, [1, 2, -1, -2]);
            }
            other => panic!("unexpected verdict {other:?}"),
        }
        let z2 = GroupPresentation::new(1, vec![FreeWord::from_letters([1, 1])]);
        assert!(matches!(
            certify_free_abelian(&z2, 1, &KbLimits::default()),
            FreeAbelianVerdict::Refuted(Refutation::Abelianization(_))
        ));
    }

    #[test]
    fn z2_certificate_verifies() {
        let p = GroupPresentation::new(2, vec![commutator(1, 2)]);
        let FreeAbelianVerdict::Certified(cert) = certify_free_abelian(&p, 2, &KbLimits::default()) else {
            panic!("Z^2 must certify");
        };
        assert!(cert.verify(&p));
    }
}
