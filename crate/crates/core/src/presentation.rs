//! Balanced group presentations and their relator-level canonical forms.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intmat::{self, Overflow};
use crate::word::{Alphabet, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("unbalanced presentation: rank {rank} with {relators} relators")]
    Unbalanced { rank: usize, relators: usize },
    #[error("relator {index}: {source}")]
    Relator { index: usize, source: WordError },
    #[error("missing rank in presentation text")]
    MissingRank,
    #[error("invalid rank {0:?}")]
    BadRank(String),
}

/// `⟨g1, …, gn | r1, …, rn⟩` with exactly as many relators as generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BalancedPresentation {
    rank: usize,
    relators: Vec<Word>,
}

/// Structured document form: `{"rank": 2, "relators": ["yxyXYX", "xxxYY"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub rank: usize,
    pub relators: Vec<String>,
}

impl BalancedPresentation {
    pub fn new(rank: usize, relators: Vec<Word>) -> Result<Self, PresentationError> {
        if rank == 0 {
            return Err(PresentationError::ZeroRank);
        }
        if relators.len() != rank {
            return Err(PresentationError::Unbalanced { rank, relators: relators.len() });
        }
        for (i, r) in relators.iter().enumerate() {
            r.check_rank(rank)
                .map_err(|source| PresentationError::Relator { index: i + 1, source })?;
        }
        Ok(BalancedPresentation { rank, relators })
    }

    /// Builds without validation; callers guarantee the invariants.
    pub(crate) fn from_parts(rank: usize, relators: Vec<Word>) -> Self {
        debug_assert_eq!(rank, relators.len());
        BalancedPresentation { rank, relators }
    }

    /// `⟨g1, …, gn | g1, …, gn⟩`.
    pub fn trivial(rank: usize) -> Self {
        let relators = (1..=rank as u32).map(|g| Word::letter(Letter::gen(g))).collect();
        BalancedPresentation::new(rank, relators).expect("rank >= 1")
    }

    /// Parses `<rank>; r1; r2; …`.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut parts = text.split(';');
        let rank_text = parts.next().map(str::trim).filter(|s| !s.is_empty());
        let rank_text = rank_text.ok_or(PresentationError::MissingRank)?;
        let rank: usize =
            rank_text.parse().map_err(|_| PresentationError::BadRank(rank_text.to_string()))?;
        let relators = parts
            .enumerate()
            .map(|(i, p)| {
                Word::parse(p).map_err(|source| PresentationError::Relator { index: i + 1, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        BalancedPresentation::new(rank, relators)
    }

    pub fn from_doc(doc: &PresentationDoc) -> Result<Self, PresentationError> {
        let relators = doc
            .relators
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Word::parse(s).map_err(|source| PresentationError::Relator { index: i + 1, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        BalancedPresentation::new(doc.rank, relators)
    }

    pub fn to_doc(&self) -> PresentationDoc {
        let alphabet = Alphabet::for_rank(self.rank);
        PresentationDoc {
            rank: self.rank,
            relators: self.relators.iter().map(|r| r.format(alphabet)).collect(),
        }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Relator by 1-based index.
    pub fn relator(&self, index: usize) -> &Word {
        &self.relators[index - 1]
    }

    pub(crate) fn relators_mut(&mut self) -> &mut Vec<Word> {
        &mut self.relators
    }

    pub(crate) fn set_rank(&mut self, rank: usize) {
        self.rank = rank;
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    /// Row `i` holds the exponent sums of relator `i`.
    pub fn abelianization_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| r.exponent_sums(self.rank).expect("relators lie within rank"))
            .collect()
    }

    pub fn abelianization_determinant(&self) -> Result<i64, Overflow> {
        intmat::determinant(&self.abelianization_matrix())
    }

    /// Representative of the relator-symmetry class: every relator cyclically
    /// reduced and replaced by the shortlex-least rotation of itself or its
    /// inverse, relators sorted shortlex.
    pub fn canonical_form(&self) -> BalancedPresentation {
        let mut relators: Vec<Word> =
            self.relators.iter().map(canonical_relator).collect();
        relators.sort();
        BalancedPresentation { rank: self.rank, relators }
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey::encode(&self.canonical_form())
    }

    /// True iff the canonical form is exactly `⟨g1, …, gn | g1, …, gn⟩`.
    pub fn is_trivial(&self) -> bool {
        self.canonical_form().is_canonical_trivial()
    }

    /// [`is_trivial`](Self::is_trivial) for a presentation already in canonical form.
    pub(crate) fn is_canonical_trivial(&self) -> bool {
        self.relators.iter().enumerate().all(|(i, r)| {
            r.len() == 1 && r.letters()[0] == Letter::gen(i as u32 + 1)
        })
    }
}

/// Cyclically reduced, shortlex-least rotation of `r` or `r⁻¹`.
pub fn canonical_relator(r: &Word) -> Word {
    let (_, core) = r.cyclic_reduce();
    core.cyclic_canonical().0
}

impl fmt::Display for BalancedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = Alphabet::for_rank(self.rank);
        write!(f, "{}", self.rank)?;
        for r in &self.relators {
            write!(f, "; {}", r.format(alphabet))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BalancedPresentation {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BalancedPresentation::parse(s)
    }
}

impl Serialize for BalancedPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_doc().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BalancedPresentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = PresentationDoc::deserialize(d)?;
        BalancedPresentation::from_doc(&doc).map_err(serde::de::Error::custom)
    }
}

/// Compact, hashable encoding of a presentation's canonical form.
///
/// Layout: rank as LEB128, then each relator as zigzag-LEB128 letters
/// terminated by a zero byte. Letters never encode to zero, so the encoding
/// is injective and two keys are equal exactly when the canonical forms are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Box<[u8]>);

impl CanonicalKey {
    /// Encodes a presentation that is already in canonical form.
    pub(crate) fn encode(canonical: &BalancedPresentation) -> Self {
        let mut buf = Vec::with_capacity(canonical.total_length() + canonical.rank + 2);
        put_varint(&mut buf, canonical.rank as u64);
        for r in &canonical.relators {
            for l in r.letters() {
                put_varint(&mut buf, zigzag(*l));
            }
            buf.push(0);
        }
        CanonicalKey(buf.into_boxed_slice())
    }

    /// Recovers the canonical presentation this key was built from.
    pub fn decode(&self) -> BalancedPresentation {
        let mut pos = 0;
        let rank = get_varint(&self.0, &mut pos) as usize;
        let mut relators = Vec::with_capacity(rank);
        let mut current = Vec::new();
        while pos < self.0.len() {
            if self.0[pos] == 0 {
                pos += 1;
                relators.push(Word::reduce(std::mem::take(&mut current)));
            } else {
                current.push(unzigzag(get_varint(&self.0, &mut pos)));
            }
        }
        BalancedPresentation { rank, relators }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

fn zigzag(l: Letter) -> u64 {
    let g = l.generator() as u64;
    if l.is_positive() {
        2 * g - 1
    } else {
        2 * g
    }
}

fn unzigzag(z: u64) -> Letter {
    let g = z.div_ceil(2) as u32;
    Letter::new(g, z % 2 == 1).expect("nonzero encoded letter")
}

fn put_varint(buf: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            buf.push(byte);
            return;
        }
        buf.push(byte | 0x80);
    }
}

fn get_varint(buf: &[u8], pos: &mut usize) -> u64 {
    let mut v = 0u64;
    let mut shift = 0;
    loop {
        let byte = buf[*pos];
        *pos += 1;
        v |= ((byte & 0x7f) as u64) << shift;
        if byte & 0x80 == 0 {
            return v;
        }
        shift += 7;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BalancedPresentation {
        BalancedPresentation::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let pres = p("2; yxyXYX; xxxYY");
        assert_eq!(pres.rank(), 2);
        assert_eq!(pres.to_string(), "2; yxyXYX; xxxYY");
        assert_eq!(p("2;;x").relator(1), &Word::identity());
        assert_eq!(p("4; g1; g2; g3; g4").to_string(), "4; g1; g2; g3; g4");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(BalancedPresentation::parse(""), Err(PresentationError::MissingRank));
        assert_eq!(
            BalancedPresentation::parse("2; x"),
            Err(PresentationError::Unbalanced { rank: 2, relators: 1 })
        );
        assert!(matches!(
            BalancedPresentation::parse("1; y"),
            Err(PresentationError::Relator { index: 1, source: WordError::OutOfRank { .. } })
        ));
        assert_eq!(BalancedPresentation::parse("0"), Err(PresentationError::ZeroRank));
        assert!(matches!(BalancedPresentation::parse("two; x"), Err(PresentationError::BadRank(_))));
    }

    #[test]
    fn canonical_key_symmetries() {
        assert_eq!(p("2; xyy; yxY").canonical_key(), p("2; yxY; xyy").canonical_key());
        assert_eq!(p("2; xyy; y").canonical_key(), p("2; YYX; y").canonical_key());
        assert_eq!(p("2; xyy; y").canonical_key(), p("2; yxy; y").canonical_key());
        assert_eq!(p("2; xyy; y").canonical_key(), p("2; Yxyyy; y").canonical_key());
        assert_ne!(p("2; xyy; y").canonical_key(), p("2; yyx; x").canonical_key());
        assert_ne!(p("2; xy; y").canonical_key(), p("2; xY; y").canonical_key());
    }

    #[test]
    fn key_decodes_to_canonical_form() {
        for s in ["2; yxyXYX; xxxYY", "3; ; zzZy; xg3", "1; X"] {
            let pres = p(s);
            assert_eq!(pres.canonical_key().decode(), pres.canonical_form());
        }
        let big = BalancedPresentation::new(
            200,
            (1..=200).map(|g| Word::letter(Letter::new(g, g % 3 != 0).unwrap())).collect(),
        )
        .unwrap();
        assert_eq!(big.canonical_key().decode(), big.canonical_form());
    }

    #[test]
    fn triviality() {
        assert!(p("2; x; y").is_trivial());
        assert!(p("2; y; X").is_trivial());
        assert!(p("2; yxY; y").is_trivial());
        assert!(!p("2; YXYxyx; xxxxYYY").is_trivial());
        assert!(!p("2; ; y").is_trivial());
        assert!(!p("2; x; x").is_trivial());
    }

    #[test]
    fn abelianization() {
        let pres = p("2; YXYxyx; xxxxYYY");
        assert_eq!(pres.abelianization_matrix(), vec![vec![1, -1], vec![4, -3]]);
        assert_eq!(pres.abelianization_determinant(), Ok(1));
        assert_eq!(p("2; x; y").abelianization_matrix(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(p("2; ; y").abelianization_determinant(), Ok(0));
    }

    #[test]
    fn total_length() {
        assert_eq!(p("2; x; y").total_length(), 2);
        assert_eq!(p("2; yxyXYX; xxxYY").total_length(), 11);
        assert_eq!(p("2; ; y").total_length(), 1);
    }

    #[test]
    fn doc_round_trip() {
        let pres = p("2; YXYxyx; xxxxYYY");
        let json = serde_json::to_string(&pres).unwrap();
        assert_eq!(json, r#"{"rank":2,"relators":["YXYxyx","xxxxYYY"]}"#);
        let back: BalancedPresentation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pres);
    }
}
