//! Essential simple closed curves on the 4-punctured sphere `P`.
//!
//! `P` is the quotient of the torus `R²/Z²` by `v ↦ −v`, punctured at the
//! four half-integer points. A primitive direction `(a, b)` gives the curve
//! that splits the punctures into the pairs `{v, v + (a/2, b/2)}`. Points are
//! stored doubled, so `(1, 0)` means `(½, 0)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("direction (0, 0) is not a slope")]
    Zero,
    #[error("direction ({0}, {1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("bad slope {0:?}, expected a/b or a,b")]
    BadSlope(String),
    #[error("bad labeling {0:?}: {1}")]
    BadLabeling(String, String),
    #[error("height must be at least 1")]
    ZeroHeight,
}

/// Normalized primitive direction: `gcd(|a|, |b|) = 1` and the first nonzero
/// coordinate positive. Ordered by height `max(|a|, |b|)`, then `a`, then `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct Slope {
    a: i64,
    b: i64,
}

fn gcd(mut x: i64, mut y: i64) -> i64 {
    x = x.abs();
    y = y.abs();
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

impl Slope {
    pub fn new(a: i64, b: i64) -> Result<Self, CurveError> {
        if a == 0 && b == 0 {
            return Err(CurveError::Zero);
        }
        if gcd(a, b) != 1 {
            return Err(CurveError::NotPrimitive(a, b));
        }
        Ok(if a < 0 || (a == 0 && b < 0) { Slope { a: -a, b: -b } } else { Slope { a, b } })
    }

    pub fn a(self) -> i64 {
        self.a
    }

    pub fn b(self) -> i64 {
        self.b
    }

    pub fn height(self) -> i64 {
        self.a.abs().max(self.b.abs())
    }

    /// `(a mod 2, b mod 2)`, never `(0, 0)`.
    pub fn parity(self) -> (u8, u8) {
        (self.a.rem_euclid(2) as u8, self.b.rem_euclid(2) as u8)
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.height(), self.a, self.b).cmp(&(other.height(), other.a, other.b))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<(i64, i64)> for Slope {
    type Error = CurveError;
    fn try_from((a, b): (i64, i64)) -> Result<Self, CurveError> {
        Slope::new(a, b)
    }
}

impl From<Slope> for (i64, i64) {
    fn from(s: Slope) -> Self {
        (s.a, s.b)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Accepts `a/b`, `a,b` and `(a,b)`.
impl FromStr for Slope {
    type Err = CurveError;
    fn from_str(s: &str) -> Result<Self, CurveError> {
        let bad = || CurveError::BadSlope(s.to_string());
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (x, y) = t.split_once(['/', ',']).ok_or_else(bad)?;
        let a = x.trim().parse().map_err(|_| bad())?;
        let b = y.trim().parse().map_err(|_| bad())?;
        Slope::new(a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    L1,
    L2,
    R1,
    R2,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::L1, Label::L2, Label::R1, Label::R2];

    pub fn is_left(self) -> bool {
        matches!(self, Label::L1 | Label::L2)
    }

    /// `+1` for the L punctures, `−1` for the R punctures.
    pub fn weight(self) -> i64 {
        if self.is_left() { 1 } else { -1 }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Doubled half-integer point: each coordinate is 0 or 1.
pub type HalfPoint = (u8, u8);

/// Which half-integer point each label sits at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PunctureLabeling {
    points: [HalfPoint; 4],
}

impl Default for PunctureLabeling {
    /// `L1 = (0,0)`, `L2 = (½,½)`, `R1 = (½,0)`, `R2 = (0,½)`.
    fn default() -> Self {
        PunctureLabeling { points: [(0, 0), (1, 1), (1, 0), (0, 1)] }
    }
}

impl PunctureLabeling {
    /// Points in label order `L1, L2, R1, R2`; must be the four distinct
    /// half-integer points.
    pub fn new(points: [HalfPoint; 4]) -> Result<Self, CurveError> {
        let mut seen = [false; 4];
        for (label, &(x, y)) in Label::ALL.iter().zip(&points) {
            if x > 1 || y > 1 {
                return Err(CurveError::BadLabeling(format!("{x}{y}"), format!("{label} is not a half-integer point")));
            }
            let k = (2 * x + y) as usize;
            if seen[k] {
                return Err(CurveError::BadLabeling(format!("{x}{y}"), "point used twice".into()));
            }
            seen[k] = true;
        }
        Ok(PunctureLabeling { points })
    }

    pub fn point(&self, label: Label) -> HalfPoint {
        self.points[label.slot()]
    }

    pub fn label_at(&self, p: HalfPoint) -> Label {
        Label::ALL[self.points.iter().position(|&q| q == p).expect("labeling is a bijection")]
    }
}

impl fmt::Display for PunctureLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Label::ALL
            .iter()
            .map(|&l| {
                let (x, y) = self.point(l);
                format!("{l}={x}{y}")
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `L1=00,L2=11,R1=10,R2=01`; each digit is a coordinate in halves.
/// Labels may appear in any order and each must appear once.
impl FromStr for PunctureLabeling {
    type Err = CurveError;
    fn from_str(s: &str) -> Result<Self, CurveError> {
        let bad = |why: &str| CurveError::BadLabeling(s.to_string(), why.to_string());
        let mut points: [Option<HalfPoint>; 4] = [None; 4];
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, coords) = part.split_once('=').ok_or_else(|| bad("expected LABEL=xy"))?;
            let label = match name.trim() {
                "L1" => Label::L1,
                "L2" => Label::L2,
                "R1" => Label::R1,
                "R2" => Label::R2,
                _ => return Err(bad("labels are L1, L2, R1, R2")),
            };
            let digits: Vec<u8> = coords
                .trim()
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(bad("coordinates are 0 or 1 (in halves)")),
                })
                .collect::<Result<_, _>>()?;
            let &[x, y] = digits.as_slice() else {
                return Err(bad("each point needs two digits"));
            };
            if points[label.slot()].replace((x, y)).is_some() {
                return Err(bad("label given twice"));
            }
        }
        let mut out = [(0, 0); 4];
        for (slot, p) in points.iter().enumerate() {
            out[slot] = p.ok_or_else(|| bad("all four labels are required"))?;
        }
        PunctureLabeling::new(out)
    }
}

impl TryFrom<String> for PunctureLabeling {
    type Error = CurveError;
    fn try_from(s: String) -> Result<Self, CurveError> {
        s.parse()
    }
}

impl From<PunctureLabeling> for String {
    fn from(l: PunctureLabeling) -> Self {
        l.to_string()
    }
}

/// The two sides of a curve, each a pair of labels in label order. The side
/// holding `L1` comes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    pub sides: [[Label; 2]; 2],
}

impl Partition {
    /// Weight sum of one side mod 3. The two sides give negatives of each other.
    pub fn z3_class_of(&self, side: usize) -> u8 {
        self.sides[side].iter().map(|l| l.weight()).sum::<i64>().rem_euclid(3) as u8
    }

    pub fn z3_class(&self) -> u8 {
        self.z3_class_of(0)
    }

    pub fn splits_left_pair(&self) -> bool {
        self.sides.iter().all(|side| side.iter().filter(|l| l.is_left()).count() == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.sides;
        write!(f, "{{{a},{b}}}|{{{c},{d}}}")
    }
}

pub fn partition(s: Slope, lab: &PunctureLabeling) -> Partition {
    let (da, db) = s.parity();
    let l1 = lab.point(Label::L1);
    let partner = lab.label_at((l1.0 ^ da, l1.1 ^ db));
    let rest: Vec<Label> = Label::ALL.iter().copied().filter(|&l| l != Label::L1 && l != partner).collect();
    Partition { sides: [[Label::L1, partner], [rest[0], rest[1]]] }
}

pub fn z3_class(s: Slope, lab: &PunctureLabeling) -> u8 {
    partition(s, lab).z3_class()
}

/// The curve lifts homeomorphically to the fiber iff it separates the two L
/// punctures.
pub fn is_candidate(s: Slope, lab: &PunctureLabeling) -> bool {
    partition(s, lab).splits_left_pair()
}

/// All slopes of height at most `height` that are candidates, in [`Slope`] order.
pub fn enumerate_candidates(height: i64, lab: &PunctureLabeling) -> Result<Vec<Slope>, CurveError> {
    if height < 1 {
        return Err(CurveError::ZeroHeight);
    }
    let mut out: Vec<Slope> = all_slopes(height).filter(|&s| is_candidate(s, lab)).collect();
    out.sort();
    Ok(out)
}

/// Every normalized slope of height at most `height`, unsorted.
pub fn all_slopes(height: i64) -> impl Iterator<Item = Slope> {
    (0..=height).flat_map(move |a| {
        let lo = if a == 0 { 1 } else { -height };
        (lo..=height).filter_map(move |b| Slope::new(a, b).ok())
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRow {
    pub slope: Slope,
    pub partition: Partition,
    pub z3_class: u8,
    pub candidate: bool,
}

pub fn classify(s: Slope, lab: &PunctureLabeling) -> CurveRow {
    let p = partition(s, lab);
    CurveRow { slope: s, partition: p, z3_class: p.z3_class(), candidate: p.splits_left_pair() }
}
