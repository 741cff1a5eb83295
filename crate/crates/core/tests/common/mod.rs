//! Test-only oracles. Nothing here calls into the library's word or
//! presentation internals; words are plain `Vec<i32>` with `±g` for `g^{±1}`.

#![allow(dead_code)]

use std::collections::HashSet;

use acwb::{BalancedPresentation, Move, Side, Sign, Word};
use rand::Rng;

pub type Raw = Vec<i32>;

/// Deletes the leftmost cancelling pair and rescans from the start until
/// nothing cancels.
pub fn naive_reduce(w: &[i32]) -> Raw {
    let mut v = w.to_vec();
    'scan: loop {
        for k in 0..v.len().saturating_sub(1) {
            if v[k] == -v[k + 1] {
                v.drain(k..k + 2);
                continue 'scan;
            }
        }
        return v;
    }
}

pub fn raw_inverse(w: &[i32]) -> Raw {
    w.iter().rev().map(|&l| -l).collect()
}

fn naive_cyclic_core(w: &[i32]) -> Raw {
    let mut v = naive_reduce(w);
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v.remove(0);
        v.pop();
    }
    v
}

fn rotations(w: &[i32]) -> Vec<Raw> {
    if w.is_empty() {
        return vec![Vec::new()];
    }
    (0..w.len()).map(|k| w[k..].iter().chain(&w[..k]).copied().collect()).collect()
}

/// Least rotation of `w` or `w⁻¹`, ordered by length then `Vec<i32>` order.
fn naive_cyclic_class(w: &[i32]) -> Raw {
    let core = naive_cyclic_core(w);
    let inv = raw_inverse(&core);
    rotations(&core)
        .into_iter()
        .chain(rotations(&inv))
        .min_by(|a, b| (a.len(), a).cmp(&(b.len(), b)))
        .unwrap()
}

fn naive_state(rels: Vec<Raw>) -> Vec<Raw> {
    let mut v: Vec<Raw> = rels.iter().map(|r| naive_cyclic_class(r)).collect();
    v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    v
}

fn naive_trivial(state: &[Raw]) -> bool {
    let mut singles: Vec<i32> = state.iter().filter(|r| r.len() == 1).map(|r| r[0].abs()).collect();
    singles.sort();
    singles.len() == state.len() && singles.iter().enumerate().all(|(k, &g)| g == k as i32 + 1)
}

pub fn to_raw(w: &Word) -> Raw {
    w.letters().iter().map(|l| l.signed()).collect()
}

pub struct NaiveResult {
    pub visited: usize,
    pub found: bool,
}

/// Plain breadth-first enumeration of relator-multiplication classes:
/// replace `r_i` by the cyclic core of any rotation of `r_i` times any
/// rotation of `r_j^{±1}`, keeping total length within `max_len` and depth
/// within `max_depth`. States are compared as sorted lists of cyclic classes.
pub fn naive_bfs(start: &BalancedPresentation, max_len: usize, max_depth: usize) -> NaiveResult {
    let root = naive_state(start.relators().iter().map(to_raw).collect());
    let mut seen: HashSet<Vec<Raw>> = HashSet::new();
    let mut found = naive_trivial(&root);
    seen.insert(root.clone());
    let mut level = vec![root];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for state in &level {
            let total: usize = state.iter().map(Vec::len).sum();
            for i in 0..state.len() {
                for j in 0..state.len() {
                    if i == j || state[j].is_empty() {
                        continue;
                    }
                    for factor in [state[j].clone(), raw_inverse(&state[j])] {
                        for a in rotations(&state[i]) {
                            for b in rotations(&factor) {
                                let prod: Raw = a.iter().chain(&b).copied().collect();
                                let core = naive_cyclic_core(&prod);
                                if total - state[i].len() + core.len() > max_len {
                                    continue;
                                }
                                let mut rels = state.clone();
                                rels[i] = core;
                                let child = naive_state(rels);
                                if seen.insert(child.clone()) {
                                    found |= naive_trivial(&child);
                                    next.push(child);
                                }
                            }
                        }
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    NaiveResult { visited: seen.len(), found }
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &v)| v).collect())
                .collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] as i128 * cofactor_det(&minor)
        })
        .sum()
}

pub fn random_raw(rng: &mut impl Rng, max_len: usize, rank: i32) -> Raw {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=rank);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect()
}

fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }
}

/// A random move for a presentation of rank `n`; may be illegal.
pub fn random_move(rng: &mut impl Rng, n: usize) -> Move {
    let idx = |rng: &mut dyn rand::RngCore| rng.gen_range(1..=n);
    let letter = |rng: &mut dyn rand::RngCore| {
        let g = rng.gen_range(1..=n) as i32;
        acwb::Letter::from_signed(if rng.gen_bool(0.5) { g } else { -g })
    };
    match rng.gen_range(0..10) {
        0 => Move::InvertRelator { relator: idx(rng) },
        1 | 2 => Move::MultiplyRelator {
            target: idx(rng),
            by: idx(rng),
            side: if rng.gen_bool(0.5) { Side::Left } else { Side::Right },
            sign: random_sign(rng),
        },
        3 => Move::ConjugateRelator { relator: idx(rng), letter: letter(rng) },
        4 => Move::SwapRelators { first: idx(rng), second: idx(rng) },
        5 => {
            if rng.gen_bool(0.5) {
                Move::Stabilize
            } else {
                Move::Destabilize { relator: idx(rng) }
            }
        }
        6 => Move::NielsenGenerator { generator: idx(rng), by: idx(rng), sign: random_sign(rng) },
        7 => Move::InvertGenerator { generator: idx(rng) },
        8 => Move::SwapGenerators { first: idx(rng), second: idx(rng) },
        _ => {
            let c: Raw = (0..rng.gen_range(0..3)).map(|_| letter(rng).signed()).collect();
            Move::MultiplyByConjugate {
                target: idx(rng),
                by: idx(rng),
                conjugator: Word::from_signed(&c),
                sign: random_sign(rng),
            }
        }
    }
}

/// Side of a puncture relative to the curve of direction `(a, b)`:
/// the functional `φ(v) = b·v₁ − a·v₂` is constant along the curve's lifts,
/// which sit at `φ ≡ 1/4` and `φ ≡ 3/4`. Points are doubled half-integer
/// coordinates, so `4φ = 2(b·x − a·y)`.
pub fn oracle_side(a: i64, b: i64, point: (u8, u8)) -> bool {
    let four_phi = (2 * (b * point.0 as i64 - a * point.1 as i64)).rem_euclid(4);
    1 < four_phi && four_phi < 3
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}
