#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

use surfinv_core::braid::{garside_delta, BraidWord};
use surfinv_core::chart::{available_moves, find_path, MovieEvent, MovieLimits, TorusChartMovie};
use surfinv_core::quandle::Quandle;

pub fn a_n(n: i64) -> BraidWord {
    let mut ks = vec![1, 1];
    ks.extend(std::iter::repeat_n(2 * n.signum(), 2 * n.unsigned_abs() as usize));
    BraidWord::from_signed(3, &ks).unwrap()
}

pub fn full_twist() -> BraidWord {
    garside_delta(3).unwrap().pow(2)
}

/// Leaves the base movie at a random slice, wanders for a few random moves
/// and searches back to the end word.
pub fn perturb(base: &TorusChartMovie, rng: &mut StdRng) -> Option<Vec<MovieEvent>> {
    let slices = base.slices().unwrap();
    let i = rng.gen_range(0..slices.len());
    let mut w = slices[i].clone();
    let mut events = base.events()[..i].to_vec();
    let max_len = w.len() + 4;
    for _ in 0..rng.gen_range(1..=4) {
        let moves = available_moves(&w, base.degree(), max_len);
        let e = moves[rng.gen_range(0..moves.len())];
        assert!(e.apply(&mut w, base.degree()));
        events.push(e);
    }
    let end = slices.last().unwrap();
    let limits = MovieLimits { max_word_len: Some(max_len), max_slack: 4, max_states: 200_000 };
    let tail = find_path(&w, end, base.degree(), &limits).ok()?;
    events.extend(tail);
    Some(events)
}

/// Inserts an inverse pair at a random slice and cancels it right away.
pub fn bump(base: &TorusChartMovie, rng: &mut StdRng) -> Vec<MovieEvent> {
    let slices = base.slices().unwrap();
    let i = rng.gen_range(0..slices.len());
    let p = rng.gen_range(0..=slices[i].len());
    let index = rng.gen_range(1..base.degree());
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let mut events = base.events()[..i].to_vec();
    events.push(MovieEvent::R2Insert { position: p, index, sign });
    events.push(MovieEvent::R2Cancel { position: p });
    events.extend_from_slice(&base.events()[i..]);
    events
}

pub fn perm_mul(p: &[u8; 4], q: &[u8; 4]) -> [u8; 4] {
    [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize], p[q[3] as usize]]
}

pub fn perm_inv(p: &[u8; 4]) -> [u8; 4] {
    let mut out = [0u8; 4];
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as u8;
    }
    out
}

pub fn s4() -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    let mut s = p;
                    s.sort();
                    if s == [0, 1, 2, 3] {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// `x * y = y x y^{-1}` on `S_4`.
pub fn conjugation_quandle(elems: &[[u8; 4]]) -> Quandle {
    let idx = |p: [u8; 4]| elems.iter().position(|&e| e == p).unwrap();
    Quandle::from_fn(elems.len(), |x, y| {
        let (x, y) = (elems[x], elems[y]);
        idx(perm_mul(&perm_mul(&y, &x), &perm_inv(&y)))
    })
    .unwrap()
}
