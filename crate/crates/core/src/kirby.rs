//! Linking matrices of framed links, with handle slides, blow-downs and
//! stabilization by unlinks and canceling Hopf pairs.
//!
//! Entry `(i, i)` is the framing of component `i`, entry `(i, j)` the linking
//! number of components `i` and `j`. A dotted component stands for a 1-handle:
//! it is 0-framed and has zero linking with every other dotted component.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intmat::{self, Overflow};
use crate::moves::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    TwoHandle,
    Dotted,
}

impl ComponentKind {
    pub fn code(self) -> char {
        match self {
            ComponentKind::TwoHandle => 'h',
            ComponentKind::Dotted => 'd',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KirbyError {
    #[error("component {index} out of range for {size} components")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("cannot slide component {0} over itself")]
    SameComponent(usize),
    #[error("dotted component {component} cannot slide over non-dotted component {over}")]
    DottedOverTwoHandle { component: usize, over: usize },
    #[error("component {component} has framing {framing}; only a ±1-framed component can be blown down")]
    NotUnitFramed { component: usize, framing: i64 },
    #[error("component {0} is dotted")]
    DottedComponent(usize),
    #[error("blowing down component {component} would change dotted component {dotted}")]
    LinksDotted { component: usize, dotted: usize },
    #[error("dotted components present; the condition applies to 2-handles only")]
    DottedPresent,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("row {row} has {len} entries, expected {size}")]
    Ragged { row: usize, len: usize, size: usize },
    #[error("{kinds} kinds given for {size} components")]
    KindCount { kinds: usize, size: usize },
    #[error("dotted component {0} must have framing 0")]
    DottedFraming(usize),
    #[error("dotted components {0} and {1} must not link")]
    DottedLinking(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// Symmetric integer matrix with one kind per component. Indices in the
/// public operations are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixDoc", into = "MatrixDoc")]
pub struct FramedLinkMatrix {
    entries: Vec<Vec<i64>>,
    kinds: Vec<ComponentKind>,
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    entries: Vec<Vec<i64>>,
    kinds: Vec<ComponentKind>,
}

impl TryFrom<MatrixDoc> for FramedLinkMatrix {
    type Error = KirbyError;
    fn try_from(doc: MatrixDoc) -> Result<Self, KirbyError> {
        FramedLinkMatrix::new(doc.entries, doc.kinds)
    }
}

impl From<FramedLinkMatrix> for MatrixDoc {
    fn from(m: FramedLinkMatrix) -> Self {
        MatrixDoc { entries: m.entries, kinds: m.kinds }
    }
}

impl FramedLinkMatrix {
    pub fn new(entries: Vec<Vec<i64>>, kinds: Vec<ComponentKind>) -> Result<Self, KirbyError> {
        let size = entries.len();
        if kinds.len() != size {
            return Err(KirbyError::KindCount { kinds: kinds.len(), size });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != size {
                return Err(KirbyError::Ragged { row: i + 1, len: row.len(), size });
            }
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate().skip(i + 1) {
                if v != entries[j][i] {
                    return Err(KirbyError::NotSymmetric(i + 1, j + 1));
                }
            }
        }
        let m = FramedLinkMatrix { entries, kinds };
        m.check_dotted()?;
        Ok(m)
    }

    /// All components are 2-handles.
    pub fn two_handles(entries: Vec<Vec<i64>>) -> Result<Self, KirbyError> {
        let n = entries.len();
        Self::new(entries, vec![ComponentKind::TwoHandle; n])
    }

    pub fn empty() -> Self {
        FramedLinkMatrix { entries: Vec::new(), kinds: Vec::new() }
    }

    pub fn zero(size: usize) -> Self {
        Self::empty().add_unlink(size)
    }

    fn check_dotted(&self) -> Result<(), KirbyError> {
        for i in 0..self.size() {
            if self.kinds[i] != ComponentKind::Dotted {
                continue;
            }
            if self.entries[i][i] != 0 {
                return Err(KirbyError::DottedFraming(i + 1));
            }
            for j in i + 1..self.size() {
                if self.kinds[j] == ComponentKind::Dotted && self.entries[i][j] != 0 {
                    return Err(KirbyError::DottedLinking(i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn kinds(&self) -> &[ComponentKind] {
        &self.kinds
    }

    /// 1-based entry.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn kind(&self, i: usize) -> ComponentKind {
        self.kinds[i - 1]
    }

    pub fn framing(&self, i: usize) -> i64 {
        self.entry(i, i)
    }

    pub fn has_dotted(&self) -> bool {
        self.kinds.contains(&ComponentKind::Dotted)
    }

    fn index(&self, i: usize) -> Result<usize, KirbyError> {
        if i == 0 || i > self.size() {
            Err(KirbyError::IndexOutOfRange { index: i, size: self.size() })
        } else {
            Ok(i - 1)
        }
    }

    pub fn det(&self) -> Result<i64, Overflow> {
        intmat::determinant(&self.entries)
    }

    /// Slides component `i` over component `j`: congruence by the elementary
    /// matrix adding `sign` times row `j` to row `i`.
    pub fn slide(&self, i: usize, j: usize, sign: Sign) -> Result<Self, KirbyError> {
        let (a, b) = (self.index(i)?, self.index(j)?);
        if a == b {
            return Err(KirbyError::SameComponent(i));
        }
        if self.kinds[a] == ComponentKind::Dotted && self.kinds[b] == ComponentKind::TwoHandle {
            return Err(KirbyError::DottedOverTwoHandle { component: i, over: j });
        }
        let s = sign.as_i64();
        let m = &self.entries;
        let mut out = m.clone();
        let cross = m[a][b].checked_mul(2 * s).ok_or(Overflow)?;
        out[a][a] = m[a][a].checked_add(m[b][b]).and_then(|v| v.checked_add(cross)).ok_or(Overflow)?;
        for k in 0..self.size() {
            if k == a {
                continue;
            }
            let v = m[b][k].checked_mul(s).and_then(|t| m[a][k].checked_add(t)).ok_or(Overflow)?;
            out[a][k] = v;
            out[k][a] = v;
        }
        Ok(FramedLinkMatrix { entries: out, kinds: self.kinds.clone() })
    }

    /// Removes a ±1-framed 2-handle and corrects the rest:
    /// `a'_jk = a_jk − a_ii·a_ij·a_ik`.
    pub fn blow_down(&self, i: usize) -> Result<Self, KirbyError> {
        let a = self.index(i)?;
        if self.kinds[a] == ComponentKind::Dotted {
            return Err(KirbyError::DottedComponent(i));
        }
        let f = self.entries[a][a];
        if f != 1 && f != -1 {
            return Err(KirbyError::NotUnitFramed { component: i, framing: f });
        }
        if let Some(d) = (0..self.size()).find(|&d| self.kinds[d] == ComponentKind::Dotted && self.entries[a][d] != 0) {
            return Err(KirbyError::LinksDotted { component: i, dotted: d + 1 });
        }
        let keep: Vec<usize> = (0..self.size()).filter(|&k| k != a).collect();
        let mut entries = Vec::with_capacity(keep.len());
        for &j in &keep {
            let mut row = Vec::with_capacity(keep.len());
            for &k in &keep {
                let t = self.entries[a][j].checked_mul(self.entries[a][k]).ok_or(Overflow)?;
                row.push(self.entries[j][k].checked_sub(f * t).ok_or(Overflow)?);
            }
            entries.push(row);
        }
        let kinds = keep.iter().map(|&k| self.kinds[k]).collect();
        Ok(FramedLinkMatrix { entries, kinds })
    }

    /// Distant union with an `r`-component 0-framed unlink.
    pub fn add_unlink(&self, r: usize) -> Self {
        let n = self.size() + r;
        let mut entries: Vec<Vec<i64>> = self.entries.iter().map(|row| {
            let mut row = row.clone();
            row.resize(n, 0);
            row
        }).collect();
        entries.resize(n, vec![0; n]);
        let mut kinds = self.kinds.clone();
        kinds.resize(n, ComponentKind::TwoHandle);
        FramedLinkMatrix { entries, kinds }
    }

    /// Distant union with a 0-framed 2-handle and a dotted circle linking once.
    pub fn add_hopf_pair(&self) -> Self {
        let mut out = self.add_unlink(2);
        let n = out.size();
        out.entries[n - 2][n - 1] = 1;
        out.entries[n - 1][n - 2] = 1;
        out.kinds[n - 1] = ComponentKind::Dotted;
        out
    }

    /// Zero framings and zero linking numbers, which any link that slides to a
    /// 0-framed unlink must already have.
    pub fn gpr_necessary_condition(&self) -> Result<bool, KirbyError> {
        if self.has_dotted() {
            return Err(KirbyError::DottedPresent);
        }
        Ok(self.entries.iter().flatten().all(|&v| v == 0))
    }

    /// Up to simultaneous permutation: zero 2-handles plus `[[0,1],[1,0]]`
    /// blocks pairing a 2-handle with a dotted circle.
    pub fn is_weak_trivial_form(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            let nonzero: Vec<usize> = (0..n).filter(|&k| self.entries[i][k] != 0).collect();
            match nonzero.as_slice() {
                [] => self.kinds[i] == ComponentKind::TwoHandle,
                &[j] => {
                    j != i
                        && self.entries[i][j] == 1
                        && self.kinds[i] != self.kinds[j]
                        && (0..n).filter(|&k| self.entries[j][k] != 0).count() == 1
                }
                _ => false,
            }
        })
    }

    /// The text form: size line, one line per row, then a line of `h`/`d` kinds.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.size());
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        let kinds: Vec<String> = self.kinds.iter().map(|k| k.code().to_string()).collect();
        s.push_str(&kinds.join(" "));
        s.push('\n');
        s
    }

    /// Parses [`to_text`](Self::to_text) output. Blank lines and `#` comments
    /// are skipped; a missing kinds line means all 2-handles.
    pub fn parse_text(text: &str) -> Result<Self, KirbyError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, message: String| KirbyError::Parse { line, message };
        let (ln, first) = lines.next().ok_or_else(|| err(1, "missing size line".into()))?;
        let size: usize = first.parse().map_err(|_| err(ln, format!("bad size {first:?}")))?;
        let mut entries = Vec::with_capacity(size);
        for r in 0..size {
            let (ln, line) = lines.next().ok_or_else(|| err(ln + r + 1, format!("missing row {}", r + 1)))?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| err(ln, format!("bad integer {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            entries.push(row);
        }
        let kinds = match lines.next() {
            None => vec![ComponentKind::TwoHandle; size],
            Some((ln, line)) => line
                .split_whitespace()
                .map(|t| match t {
                    "h" | "H" => Ok(ComponentKind::TwoHandle),
                    "d" | "D" => Ok(ComponentKind::Dotted),
                    _ => Err(err(ln, format!("bad kind {t:?}, expected h or d"))),
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        if let Some((ln, _)) = lines.next() {
            return Err(err(ln, "trailing input".into()));
        }
        Self::new(entries, kinds)
    }
}

impl fmt::Display for FramedLinkMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for FramedLinkMatrix {
    type Err = KirbyError;
    fn from_str(s: &str) -> Result<Self, KirbyError> {
        Self::parse_text(s)
    }
}
