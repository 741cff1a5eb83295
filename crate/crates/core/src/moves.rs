//! Andrews-Curtis moves, stabilization, and Nielsen generator changes.
//!
//! All indices are 1-based, matching the usual `r1, …, rn` / `g1, …, gn`
//! notation. Every move maps a balanced presentation of a group to a balanced
//! presentation of an isomorphic group.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::BalancedPresentation;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, w: &Word) -> Word {
        match self {
            Sign::Plus => w.clone(),
            Sign::Minus => w.inverse(),
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Which move set a run may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// Relator moves plus stabilization.
    #[default]
    Strict,
    /// Strict moves plus Nielsen changes of the generating set.
    Extended,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Move {
    /// `r_i ← r_i⁻¹`.
    InvertRelator { relator: usize },
    /// `r_i ← r_i · r_j^±1` (right) or `r_j^±1 · r_i` (left).
    MultiplyRelator { target: usize, by: usize, side: Side, sign: Sign },
    /// `r_i ← l · r_i · l⁻¹`.
    ConjugateRelator { relator: usize, letter: Letter },
    SwapRelators { first: usize, second: usize },
    /// Adds generator `g_{n+1}` and relator `g_{n+1}`.
    Stabilize,
    /// Removes a relator `g_k^±1` together with `g_k`; later generators shift down.
    Destabilize { relator: usize },
    /// Replaces `g_i` by `g_i · g_j^±1` in every relator.
    NielsenGenerator { generator: usize, by: usize, sign: Sign },
    /// Replaces `g_i` by `g_i⁻¹` in every relator.
    InvertGenerator { generator: usize },
    SwapGenerators { first: usize, second: usize },
    /// Macro: `r_i ← r_i · (c · r_j^±1 · c⁻¹)`, expanded to atoms on replay.
    MultiplyByConjugate { target: usize, by: usize, conjugator: Word, sign: Sign },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{what} index {index} out of range for rank {rank}")]
    IndexOutOfRange { what: &'static str, index: usize, rank: usize },
    #[error("move needs two distinct indices, got {index} twice")]
    SameIndex { index: usize },
    #[error("letter generator g{generator} outside rank {rank}")]
    LetterOutOfRank { generator: u32, rank: usize },
    #[error("cannot destabilize: relator {relator} is not a single generator letter")]
    NotSingleLetter { relator: usize },
    #[error("cannot destabilize: generator g{generator} also occurs in relator {other}")]
    GeneratorShared { generator: u32, other: usize },
    #[error("cannot destabilize a rank-1 presentation")]
    RankOne,
}

fn check_index(what: &'static str, index: usize, rank: usize) -> Result<usize, MoveError> {
    if index == 0 || index > rank {
        Err(MoveError::IndexOutOfRange { what, index, rank })
    } else {
        Ok(index - 1)
    }
}

fn check_pair(what: &'static str, a: usize, b: usize, rank: usize) -> Result<(usize, usize), MoveError> {
    let (i, j) = (check_index(what, a, rank)?, check_index(what, b, rank)?);
    if i == j {
        return Err(MoveError::SameIndex { index: a });
    }
    Ok((i, j))
}

fn check_word(w: &Word, rank: usize) -> Result<(), MoveError> {
    match w.letters().iter().find(|l| l.generator() as usize > rank) {
        Some(l) => Err(MoveError::LetterOutOfRank { generator: l.generator(), rank }),
        None => Ok(()),
    }
}

impl Move {
    pub fn regime(&self) -> Regime {
        match self {
            Move::NielsenGenerator { .. } | Move::InvertGenerator { .. } | Move::SwapGenerators { .. } => {
                Regime::Extended
            }
            _ => Regime::Strict,
        }
    }

    pub fn is_macro(&self) -> bool {
        matches!(self, Move::MultiplyByConjugate { .. })
    }

    /// The atomic moves this move stands for (itself, unless it is a macro).
    pub fn atoms(&self) -> Vec<Move> {
        match self {
            Move::MultiplyByConjugate { target, by, conjugator, sign } => {
                let mut out = conjugate_moves(*by, conjugator);
                out.push(Move::MultiplyRelator { target: *target, by: *by, side: Side::Right, sign: *sign });
                out.extend(conjugate_moves(*by, &conjugator.inverse()));
                out
            }
            m => vec![m.clone()],
        }
    }

    /// Applies the move, failing if it is not legal on `p`.
    pub fn apply(&self, p: &BalancedPresentation) -> Result<BalancedPresentation, MoveError> {
        let n = p.rank();
        let mut out = p.clone();
        match self {
            Move::InvertRelator { relator } => {
                let i = check_index("relator", *relator, n)?;
                let rels = out.relators_mut();
                rels[i] = rels[i].inverse();
            }
            Move::MultiplyRelator { target, by, side, sign } => {
                let (i, j) = check_pair("relator", *target, *by, n)?;
                let rels = out.relators_mut();
                let factor = sign.apply(&rels[j]);
                rels[i] = match side {
                    Side::Right => rels[i].mul(&factor),
                    Side::Left => factor.mul(&rels[i]),
                };
            }
            Move::ConjugateRelator { relator, letter } => {
                let i = check_index("relator", *relator, n)?;
                let c = Word::letter(*letter);
                check_word(&c, n)?;
                let rels = out.relators_mut();
                rels[i] = rels[i].conjugate_by(&c);
            }
            Move::SwapRelators { first, second } => {
                let (i, j) = check_pair("relator", *first, *second, n)?;
                out.relators_mut().swap(i, j);
            }
            Move::Stabilize => {
                out.relators_mut().push(Word::letter(Letter::gen(n as u32 + 1)));
                out.set_rank(n + 1);
            }
            Move::Destabilize { relator } => {
                let i = check_index("relator", *relator, n)?;
                let k = destabilizable_generator(p, i)?;
                let rels = out.relators_mut();
                rels.remove(i);
                for r in rels.iter_mut() {
                    *r = r.relabel(|g| if g > k { g - 1 } else { g });
                }
                out.set_rank(n - 1);
            }
            Move::NielsenGenerator { generator, by, sign } => {
                let (i, j) = check_pair("generator", *generator, *by, n)?;
                let image = Word::letter(Letter::gen(i as u32 + 1))
                    .mul(&Word::power(j as u32 + 1, sign.as_i64()));
                for r in out.relators_mut().iter_mut() {
                    *r = r.substitute(i as u32 + 1, &image);
                }
            }
            Move::InvertGenerator { generator } => {
                let i = check_index("generator", *generator, n)? as u32 + 1;
                let image = Word::power(i, -1);
                for r in out.relators_mut().iter_mut() {
                    *r = r.substitute(i, &image);
                }
            }
            Move::SwapGenerators { first, second } => {
                let (i, j) = check_pair("generator", *first, *second, n)?;
                let (a, b) = (i as u32 + 1, j as u32 + 1);
                for r in out.relators_mut().iter_mut() {
                    *r = r.relabel(|g| if g == a { b } else if g == b { a } else { g });
                }
            }
            Move::MultiplyByConjugate { target, by, conjugator, .. } => {
                check_pair("relator", *target, *by, n)?;
                check_word(conjugator, n)?;
                for atom in self.atoms() {
                    out = atom.apply(&out)?;
                }
            }
        }
        Ok(out)
    }

    /// Moves undoing `self` when `self` is applied to `p`.
    ///
    /// Every move has a single-move inverse except destabilization of a
    /// generator other than the last, which needs the new generator and
    /// relator moved back into place.
    pub fn inverse(&self, p: &BalancedPresentation) -> Result<Vec<Move>, MoveError> {
        // legality check doubles as validation of indices
        self.apply(p)?;
        let n = p.rank();
        Ok(match self {
            Move::InvertRelator { .. }
            | Move::SwapRelators { .. }
            | Move::InvertGenerator { .. }
            | Move::SwapGenerators { .. } => vec![self.clone()],
            Move::MultiplyRelator { target, by, side, sign } => {
                vec![Move::MultiplyRelator { target: *target, by: *by, side: *side, sign: sign.flip() }]
            }
            Move::ConjugateRelator { relator, letter } => {
                vec![Move::ConjugateRelator { relator: *relator, letter: letter.inverse() }]
            }
            Move::Stabilize => vec![Move::Destabilize { relator: n + 1 }],
            Move::Destabilize { relator } => {
                let i = *relator;
                let letter = p.relator(i).letters()[0];
                let k = letter.generator() as usize;
                let mut out = vec![Move::Stabilize];
                for g in (k..n).rev() {
                    out.push(Move::SwapGenerators { first: g, second: g + 1 });
                }
                for r in (i..n).rev() {
                    out.push(Move::SwapRelators { first: r, second: r + 1 });
                }
                if !letter.is_positive() {
                    out.push(Move::InvertRelator { relator: i });
                }
                out
            }
            Move::NielsenGenerator { generator, by, sign } => {
                vec![Move::NielsenGenerator { generator: *generator, by: *by, sign: sign.flip() }]
            }
            Move::MultiplyByConjugate { target, by, conjugator, sign } => vec![Move::MultiplyByConjugate {
                target: *target,
                by: *by,
                conjugator: conjugator.clone(),
                sign: sign.flip(),
            }],
        })
    }
}

/// Atoms conjugating relator `relator` by the word `c` (`r ← c r c⁻¹`).
pub fn conjugate_moves(relator: usize, c: &Word) -> Vec<Move> {
    c.letters()
        .iter()
        .rev()
        .map(|&letter| Move::ConjugateRelator { relator, letter })
        .collect()
}

/// Generator removed by destabilizing relator `i` (0-based), if legal.
fn destabilizable_generator(p: &BalancedPresentation, i: usize) -> Result<u32, MoveError> {
    if p.rank() == 1 {
        return Err(MoveError::RankOne);
    }
    let r = &p.relators()[i];
    if r.len() != 1 {
        return Err(MoveError::NotSingleLetter { relator: i + 1 });
    }
    let k = r.letters()[0].generator();
    if let Some(other) = p.relators().iter().enumerate().position(|(j, w)| j != i && w.mentions(k)) {
        return Err(MoveError::GeneratorShared { generator: k, other: other + 1 });
    }
    Ok(k)
}

pub fn apply_move(p: &BalancedPresentation, m: &Move) -> Result<BalancedPresentation, MoveError> {
    m.apply(p)
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::InvertRelator { relator } => write!(f, "invert r{relator}"),
            Move::MultiplyRelator { target, by, side: Side::Right, sign } => {
                write!(f, "r{target} <- r{target} * r{by}^{sign}1")
            }
            Move::MultiplyRelator { target, by, side: Side::Left, sign } => {
                write!(f, "r{target} <- r{by}^{sign}1 * r{target}")
            }
            Move::ConjugateRelator { relator, letter } => {
                write!(f, "conjugate r{relator} by {}", Word::letter(*letter))
            }
            Move::SwapRelators { first, second } => write!(f, "swap r{first} r{second}"),
            Move::Stabilize => write!(f, "stabilize"),
            Move::Destabilize { relator } => write!(f, "destabilize r{relator}"),
            Move::NielsenGenerator { generator, by, sign } => {
                write!(f, "g{generator} -> g{generator} * g{by}^{sign}1")
            }
            Move::InvertGenerator { generator } => write!(f, "g{generator} -> g{generator}^-1"),
            Move::SwapGenerators { first, second } => write!(f, "swap g{first} g{second}"),
            Move::MultiplyByConjugate { target, by, conjugator, sign } => {
                write!(f, "r{target} <- r{target} * ({conjugator}) r{by}^{sign}1 ({conjugator})^-1")
            }
        }
    }
}
