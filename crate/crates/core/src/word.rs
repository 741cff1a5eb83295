//! Words in a finitely generated free group.
//!
//! A [`Letter`] is a nonzero signed generator index (`+g` or `-g`); a [`Word`]
//! is always stored freely reduced, so equality of `Word`s is equality in the
//! free group.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Lowercase letters for generators 1, 2, 3, ... in the compact alphabet.
/// `g` is reserved for the escaped form `g<index>`.
const LETTERS: &[u8] = b"xyzabcdefhijklmnopqrstuvw";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown character {ch:?} at position {pos}")]
    UnknownChar { ch: char, pos: usize },
    #[error("escaped generator index at position {pos} overflows")]
    IndexOverflow { pos: usize },
    #[error("escaped generator at position {pos} has no index")]
    MissingIndex { pos: usize },
    #[error("generator index 0 is not valid (indices start at 1)")]
    ZeroIndex,
    #[error("generator g{generator} is outside rank {rank}")]
    OutOfRank { generator: u32, rank: usize },
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: u32, positive: bool) -> Result<Self, WordError> {
        if generator == 0 {
            return Err(WordError::ZeroIndex);
        }
        let g = i32::try_from(generator).map_err(|_| WordError::IndexOverflow { pos: 0 })?;
        Ok(Letter(if positive { g } else { -g }))
    }

    /// Builds a letter from its signed encoding. Panics on zero.
    pub fn from_signed(value: i32) -> Self {
        assert!(value != 0 && value != i32::MIN, "invalid letter encoding {value}");
        Letter(value)
    }

    pub fn gen(index: u32) -> Self {
        Letter::new(index, true).expect("nonzero generator index")
    }

    #[inline]
    pub fn signed(self) -> i32 {
        self.0
    }

    #[inline]
    pub fn generator(self) -> u32 {
        self.0.unsigned_abs()
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// Total order used for canonical forms: `x < X < y < Y < ...`.
    #[inline]
    fn order_key(self) -> (u32, bool) {
        (self.generator(), self.0 < 0)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// How generator names are rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// `x, y, z, a, b, ...` then `g26, g27, ...`.
    Letters,
    /// `g1, g2, ...` throughout.
    Indexed,
}

impl Alphabet {
    /// The alphabet used to display a presentation of the given rank.
    pub fn for_rank(rank: usize) -> Self {
        if rank <= 3 {
            Alphabet::Letters
        } else {
            Alphabet::Indexed
        }
    }

    fn write_letter(self, out: &mut String, l: Letter) {
        let g = l.generator() as usize;
        match self {
            Alphabet::Letters if g <= LETTERS.len() => {
                let c = LETTERS[g - 1] as char;
                out.push(if l.is_positive() { c } else { c.to_ascii_uppercase() });
            }
            _ => {
                out.push(if l.is_positive() { 'g' } else { 'G' });
                out.push_str(&g.to_string());
            }
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces an arbitrary letter sequence with a single stack pass.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Builds a word from signed integers, reducing on the way.
    pub fn from_signed(values: &[i32]) -> Self {
        Word::reduce(values.iter().map(|&v| Letter::from_signed(v)))
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// `g^exp` for a single generator.
    pub fn power(generator: u32, exp: i64) -> Self {
        let l = Letter::new(generator, exp >= 0).expect("nonzero generator index");
        Word(vec![l; exp.unsigned_abs() as usize])
    }

    pub fn parse(text: &str) -> Result<Self, WordError> {
        let chars: Vec<char> = text.chars().collect();
        let mut letters = Vec::with_capacity(chars.len());
        let mut pos = 0;
        while pos < chars.len() {
            let c = chars[pos];
            if c.is_whitespace() {
                pos += 1;
                continue;
            }
            let positive = c.is_ascii_lowercase();
            let lower = c.to_ascii_lowercase();
            if lower == 'g' && c.is_ascii_alphabetic() {
                let start = pos;
                pos += 1;
                let digits_start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == digits_start {
                    return Err(WordError::MissingIndex { pos: start });
                }
                let digits: String = chars[digits_start..pos].iter().collect();
                let index: u32 = digits
                    .parse()
                    .ok()
                    .filter(|&i| i <= i32::MAX as u32)
                    .ok_or(WordError::IndexOverflow { pos: start })?;
                letters.push(Letter::new(index, positive)?);
                continue;
            }
            match LETTERS.iter().position(|&b| b as char == lower) {
                Some(i) if c.is_ascii_alphabetic() => {
                    letters.push(Letter::new(i as u32 + 1, positive)?);
                }
                _ => return Err(WordError::UnknownChar { ch: c, pos }),
            }
            pos += 1;
        }
        Ok(Word::reduce(letters))
    }

    pub fn format(&self, alphabet: Alphabet) -> String {
        let mut out = String::with_capacity(self.0.len());
        for &l in &self.0 {
            alphabet.write_letter(&mut out, l);
        }
        out
    }

    /// Formats with explicit generator names; inverses are rendered uppercase.
    pub fn format_named(&self, names: &[&str]) -> String {
        let mut out = String::new();
        for &l in &self.0 {
            let name = names[l.generator() as usize - 1];
            if l.is_positive() {
                out.push_str(name);
            } else {
                out.push_str(&name.to_uppercase());
            }
        }
        out
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index that occurs, or 0 for the identity.
    pub fn max_generator(&self) -> u32 {
        self.0.iter().map(|l| l.generator()).max().unwrap_or(0)
    }

    pub fn mentions(&self, generator: u32) -> bool {
        self.0.iter().any(|l| l.generator() == generator)
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), WordError> {
        match self.0.iter().find(|l| l.generator() as usize > rank) {
            Some(l) => Err(WordError::OutOfRank { generator: l.generator(), rank }),
            None => Ok(()),
        }
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Product `self · other`, cancelling at the junction.
    pub fn mul(&self, other: &Word) -> Word {
        let a = &self.0;
        let b = &other.0;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[k].inverse() {
            k += 1;
        }
        let mut out = Vec::with_capacity(a.len() + b.len() - 2 * k);
        out.extend_from_slice(&a[..a.len() - k]);
        out.extend_from_slice(&b[k..]);
        Word(out)
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.mul(self).mul(&c.inverse())
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Splits `self = conjugator · core · conjugator⁻¹` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let w = &self.0;
        let mut k = 0;
        while 2 * k + 1 < w.len() && w[k] == w[w.len() - 1 - k].inverse() {
            k += 1;
        }
        (Word(w[..k].to_vec()), Word(w[k..w.len() - k].to_vec()))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(&a), Some(&b)) => self.0.len() == 1 || a != b.inverse(),
            _ => true,
        }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(k % self.0.len());
        Word(v)
    }

    /// Replaces every occurrence of `target^±1` by `replacement^±1`, then reduces.
    pub fn substitute(&self, target: u32, replacement: &Word) -> Word {
        let inv = replacement.inverse();
        let mut out = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if l.generator() == target {
                out.extend_from_slice(if l.is_positive() { &replacement.0 } else { &inv.0 });
            } else {
                out.push(l);
            }
        }
        Word::reduce(out)
    }

    /// Applies a letter-wise substitution; `images[g - 1]` is the image of `g`.
    pub fn substitute_all(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for &l in &self.0 {
            let img = &images[l.generator() as usize - 1];
            if l.is_positive() {
                out.extend_from_slice(&img.0);
            } else {
                out.extend(img.0.iter().rev().map(|x| x.inverse()));
            }
        }
        Word::reduce(out)
    }

    /// Renumbers generators through `map(g) -> g'`.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Letter::new(map(l.generator()), l.is_positive()).expect("nonzero relabel"))
                .collect(),
        )
    }

    pub fn exponent_sums(&self, rank: usize) -> Result<Vec<i64>, WordError> {
        self.check_rank(rank)?;
        let mut sums = vec![0i64; rank];
        for l in &self.0 {
            sums[l.generator() as usize - 1] += if l.is_positive() { 1 } else { -1 };
        }
        Ok(sums)
    }

    /// Shortlex comparison: length first, then letters in `x < X < y < Y` order.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }

    /// Shortlex-least rotation of this word or its inverse.
    ///
    /// Returns `(form, inverted, rotation)` where `form` is
    /// `rotate_left(rotation)` applied to `self` (or to `self⁻¹` if `inverted`).
    /// Intended for cyclically reduced words.
    pub fn cyclic_canonical(&self) -> (Word, bool, usize) {
        let n = self.0.len();
        if n == 0 {
            return (Word::identity(), false, 0);
        }
        let inv = self.inverse();
        let mut best = (false, 0usize);
        let mut best_vec = self.0.clone();
        for (src, inverted) in [(&self.0, false), (&inv.0, true)] {
            for r in 0..n {
                if rotation_less(src, r, &best_vec) {
                    best_vec.clear();
                    best_vec.extend_from_slice(&src[r..]);
                    best_vec.extend_from_slice(&src[..r]);
                    best = (inverted, r);
                }
            }
        }
        (Word(best_vec), best.0, best.1)
    }

    /// Consumes the word, returning its letters.
    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

fn rotation_less(src: &[Letter], r: usize, than: &[Letter]) -> bool {
    let n = src.len();
    for k in 0..n {
        let a = src[(r + k) % n];
        match a.cmp(&than[k]) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
    }
    false
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shortlex_cmp(other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Alphabet::Letters))
    }
}

impl std::str::FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word::reduce(iter)
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Word::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl serde::Serialize for Letter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&Word::letter(*self).to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Letter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let w = Word::parse(&text).map_err(serde::de::Error::custom)?;
        match w.letters() {
            [l] => Ok(*l),
            _ => Err(serde::de::Error::custom(format!("expected a single letter, got {text:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_basic() {
        assert_eq!(w("xyX").letters(), &[Letter(1), Letter(2), Letter(-1)]);
        assert!(w("xX").is_empty());
        assert_eq!(w("yxyXYX").len(), 6);
        assert_eq!(w(" x y\tX "), w("xyX"));
        assert_eq!(w("g7G7g2"), w("y"));
        assert_eq!(w("a"), Word::letter(Letter::gen(4)));
        assert_eq!(w("G12").letters(), &[Letter(-12)]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Word::parse("x1"), Err(WordError::UnknownChar { ch: '1', pos: 1 }));
        assert_eq!(Word::parse("x?"), Err(WordError::UnknownChar { ch: '?', pos: 1 }));
        assert_eq!(Word::parse("xg"), Err(WordError::MissingIndex { pos: 1 }));
        assert_eq!(Word::parse("g99999999999"), Err(WordError::IndexOverflow { pos: 0 }));
        assert_eq!(Word::parse("g0"), Err(WordError::ZeroIndex));
    }

    #[test]
    fn format_round_trip() {
        for s in ["", "xyX", "yxyXYX", "abcDEF", "wW", "g40G41"] {
            let word = w(s);
            assert_eq!(w(&word.to_string()), word);
        }
        assert_eq!(w("g40G41").to_string(), "g40G41");
        assert_eq!(w("xyZ").format(Alphabet::Indexed), "g1g2G3");
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(Word::from_signed(&[1, -1, 2]), w("y"));
        assert_eq!(Word::from_signed(&[1, 2, -1]), w("xyX"));
        // r1 of Gersten's presentation times r2 times a conjugate of a rotation of r2
        let r1 = w("yxyXYX");
        let prod = r1.mul(&w("xxxYY")).mul(&w("yxy").mul(&w("YYxxx")).mul(&w("yxy").inverse()));
        assert_eq!(prod, w("yxyXYxxYxYxxxYXY"));
        assert_eq!(prod.len(), 16);
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(w("Xyx").cyclic_reduce(), (w("X"), w("y")));
        assert_eq!(w("xyy").cyclic_reduce(), (Word::identity(), w("xyy")));
        let (c, core) = w("yxyXYxxYxYxxxYXY").cyclic_reduce();
        assert_eq!(c.mul(&core).mul(&c.inverse()), w("yxyXYxxYxYxxxYXY"));
        let (form, _, _) = core.cyclic_canonical();
        assert_eq!(form, w("xxYxYxxY").cyclic_canonical().0);
        assert_eq!(w("xX").cyclic_reduce(), (Word::identity(), Word::identity()));
        assert_eq!(w("xyX").cyclic_reduce(), (w("x"), w("y")));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("xy").inverse(), w("YX"));
        assert_eq!(Word::identity().inverse(), Word::identity());
    }

    #[test]
    fn substitute_examples() {
        // y -> z^-1 x^2, with z written in the y slot
        let core = w("xxYxYxxY");
        let sub = core.substitute(2, &w("Yxx"));
        assert_eq!(sub, w("yXyy"));
        let (_, c) = sub.cyclic_reduce();
        assert_eq!(c.cyclic_canonical().0, w("Xyyy").cyclic_canonical().0);
        assert_eq!(w("xxxYY").substitute(2, &w("Yxx")), w("xyXXy"));
        assert_eq!(w("xxX").substitute(2, &w("zz")), w("x"));
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(w("YXYxyx").exponent_sums(2).unwrap(), vec![1, -1]);
        assert_eq!(w("xxxxYYY").exponent_sums(2).unwrap(), vec![4, -3]);
        assert_eq!(Word::identity().exponent_sums(3).unwrap(), vec![0, 0, 0]);
        assert_eq!(w("z").exponent_sums(2), Err(WordError::OutOfRank { generator: 3, rank: 2 }));
    }

    #[test]
    fn canonical_rotation() {
        let (f, inv, r) = w("yxX").cyclic_canonical();
        assert_eq!((f, inv, r), (w("y"), false, 0));
        let word = w("YxY");
        let (f, inv, r) = word.cyclic_canonical();
        let src = if inv { word.inverse() } else { word.clone() };
        assert_eq!(src.rotate_left(r), f);
        assert_eq!(w("X").cyclic_canonical().0, w("x"));
    }
}
