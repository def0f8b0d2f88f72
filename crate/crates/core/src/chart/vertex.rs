//! Local geometry of a white vertex seen by a sweeping slice.
//!
//! The six chart edges around a white vertex carry labels `p, q` alternately;
//! three consecutive edges point inward and three outward. A movie event sees
//! the vertex between two slices: the `before` window `σ_q σ_p σ_q` and the
//! `after` window `σ_p σ_q σ_p`, each letter signed by the orientation of its
//! edge. Listing the edges counterclockwise from the slices' shared left end,
//! they are `r1 r2 r3` (the after window, left to right) followed by
//! `l3 l2 l1` (the before window, right to left). Slices sweep the chart so
//! that a positive letter is an outward edge in the before window and an
//! inward edge in the after window. The six rotations of the in/out pattern
//! give the six admissible sign patterns of a third Reidemeister event.

use alloc::vec::Vec;

use crate::braid::BraidLetter;

/// Inward flags of the ring `[r1, r2, r3, l3, l2, l1]` when the inward run
/// starts at `rotation`.
fn inward(rotation: usize) -> [bool; 6] {
    let mut flags = [false; 6];
    for (t, f) in flags.iter_mut().enumerate() {
        *f = (t + 6 - rotation) % 6 < 3;
    }
    flags
}

fn sign(positive: bool) -> i8 {
    if positive {
        1
    } else {
        -1
    }
}

/// Signs of the before window for a rotation.
pub(crate) fn before_signs(rotation: usize) -> [i8; 3] {
    let f = inward(rotation);
    [sign(!f[5]), sign(!f[4]), sign(!f[3])]
}

/// Signs of the after window for a rotation.
pub(crate) fn after_signs(rotation: usize) -> [i8; 3] {
    let f = inward(rotation);
    [sign(f[0]), sign(f[1]), sign(f[2])]
}

/// The rotation realizing a before-window sign pattern; `(+,-,+)` and
/// `(-,+,-)` are not third Reidemeister patterns.
pub(crate) fn rotation_of(before: [i8; 3]) -> Option<usize> {
    (0..6).find(|&r| before_signs(r) == before)
}

/// The after window replacing `before`, when `before` is an R3 window.
pub(crate) fn r3_after(before: [BraidLetter; 3]) -> Option<[BraidLetter; 3]> {
    let [l1, l2, l3] = before;
    if l1.index() != l3.index() || l1.index().abs_diff(l2.index()) != 1 {
        return None;
    }
    let rot = rotation_of([l1.sign(), l2.sign(), l3.sign()])?;
    let s = after_signs(rot);
    let (p, q) = (l2.index(), l1.index());
    Some([
        BraidLetter::new(p, s[0] > 0),
        BraidLetter::new(q, s[1] > 0),
        BraidLetter::new(p, s[2] > 0),
    ])
}

/// How to read the color triple and sign of the vertex.
pub(crate) struct VertexReading {
    /// Letters taking the window's entry colors to the sector where the
    /// vertex reads as a positive pattern `σ_i σ_j σ_i`.
    pub to_start: Vec<BraidLetter>,
    /// First strand (0-based) of the triple.
    pub first_strand: usize,
    pub sign: i8,
}

pub(crate) fn read_vertex(before: [BraidLetter; 3], after: [BraidLetter; 3]) -> Option<VertexReading> {
    let rot = rotation_of([before[0].sign(), before[1].sign(), before[2].sign()])?;
    let ring = [after[0], after[1], after[2], before[2], before[1], before[0]];
    let flags = inward(rot);
    let larger = before[0].index().max(before[1].index());
    let larger_inward = ring.iter().zip(flags.iter()).filter(|(l, &f)| f && l.index() == larger).count();
    let to_start = if rot <= 3 { after[..rot].to_vec() } else { before[..6 - rot].to_vec() };
    Some(VertexReading {
        to_start,
        first_strand: before[0].index().min(before[1].index()) - 1,
        sign: if larger_inward == 1 { 1 } else { -1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braids_equal, BraidWord};

    #[test]
    fn six_distinct_patterns() {
        let mut seen: Vec<[i8; 3]> = (0..6).map(before_signs).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 6);
        assert_eq!(rotation_of([1, -1, 1]), None);
        assert_eq!(rotation_of([-1, 1, -1]), None);
        assert_eq!(before_signs(0), [1, 1, 1]);
        assert_eq!(after_signs(0), [1, 1, 1]);
        assert_eq!(before_signs(3), [-1, -1, -1]);
    }

    #[test]
    fn every_pattern_is_a_braid_identity() {
        for rot in 0..6 {
            for (q, p) in [(1, 2), (2, 1), (2, 3), (3, 2)] {
                let s = before_signs(rot);
                let before = [
                    BraidLetter::new(q, s[0] > 0),
                    BraidLetter::new(p, s[1] > 0),
                    BraidLetter::new(q, s[2] > 0),
                ];
                let after = r3_after(before).unwrap();
                let u = BraidWord::new(4, before.to_vec()).unwrap();
                let v = BraidWord::new(4, after.to_vec()).unwrap();
                assert!(braids_equal(&u, &v).unwrap(), "rotation {rot}, labels {q} {p}");
                // Reading the event backwards is again an R3 event.
                assert_eq!(r3_after(after), Some(before));
            }
        }
    }

    #[test]
    fn reversed_event_flips_sign_only() {
        for rot in 0..6 {
            let s = before_signs(rot);
            let before = [BraidLetter::new(1, s[0] > 0), BraidLetter::new(2, s[1] > 0), BraidLetter::new(1, s[2] > 0)];
            let after = r3_after(before).unwrap();
            let fwd = read_vertex(before, after).unwrap();
            let back = read_vertex(after, before).unwrap();
            assert_eq!(fwd.sign, -back.sign);
            assert_eq!(fwd.first_strand, back.first_strand);
        }
    }

    #[test]
    fn positive_pattern_signs() {
        let p = |i| BraidLetter::pos(i);
        // σ1σ2σ1 → σ2σ1σ2 is read against the chart orientation: negative.
        assert_eq!(read_vertex([p(1), p(2), p(1)], [p(2), p(1), p(2)]).unwrap().sign, -1);
        assert_eq!(read_vertex([p(2), p(1), p(2)], [p(1), p(2), p(1)]).unwrap().sign, 1);
    }
}
