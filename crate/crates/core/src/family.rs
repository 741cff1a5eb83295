//! The two-generator presentations `⟨x, y | y = w⁻¹xw, x^{n+1} = y^n⟩`
//! and Gersten's trivialization of the `n = 2`, `w = yx` member.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::MoveCertificate;
use crate::moves::{Move, Side, Sign};
use crate::presentation::BalancedPresentation;
use crate::search::{search, SearchConfig, SearchError, SearchOutcome};
use crate::word::{Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("n must be nonnegative, got {0}")]
    NegativeN(i64),
    #[error("only k = 1 is built in; supply w explicitly for k = {0}")]
    UnsupportedK(i64),
    #[error("w must be a word in x and y: {0}")]
    WordOutOfRank(WordError),
    #[error("bad family spec {0:?}, expected n=<int>[,k=<int>][,w=<word>]")]
    BadSpec(String),
}

/// Parameters of a family member. `w` overrides the built-in `w = yx` of `k = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: i64,
    pub k: i64,
    pub w: Option<Word>,
}

impl FamilyParams {
    pub fn new(n: i64) -> Self {
        FamilyParams { n, k: 1, w: None }
    }

    pub fn presentation(&self) -> Result<BalancedPresentation, FamilyError> {
        match &self.w {
            Some(w) => presentation_from_w(self.n, w),
            None if self.k == 1 => presentation_ln1(self.n),
            None => Err(FamilyError::UnsupportedK(self.k)),
        }
    }
}

/// Parses `n=2`, `n=2,k=1` or `n=3,w=yx`.
impl std::str::FromStr for FamilyParams {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let bad = || FamilyError::BadSpec(s.to_string());
        let (mut n, mut k, mut w) = (None, 1, None);
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "n" => n = Some(value.trim().parse().map_err(|_| bad())?),
                "k" => k = value.trim().parse().map_err(|_| bad())?,
                "w" => w = Some(Word::parse(value).map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        Ok(FamilyParams { n: n.ok_or_else(bad)?, k, w })
    }
}

fn x() -> Word {
    Word::letter(Letter::gen(1))
}

fn y() -> Word {
    Word::letter(Letter::gen(2))
}

/// `⟨x, y | y⁻¹w⁻¹xw, x^{n+1}y^{−n}⟩`.
pub fn presentation_from_w(n: i64, w: &Word) -> Result<BalancedPresentation, FamilyError> {
    if n < 0 {
        return Err(FamilyError::NegativeN(n));
    }
    w.check_rank(2).map_err(FamilyError::WordOutOfRank)?;
    let r1 = y().inverse().mul(&w.inverse()).mul(&x()).mul(w);
    let r2 = Word::power(1, n + 1).mul(&Word::power(2, -n));
    Ok(BalancedPresentation::new(2, vec![r1, r2]).expect("two relators over x, y"))
}

/// The `k = 1` member: `⟨x, y | y⁻¹x⁻¹y⁻¹xyx, x^{n+1}y^{−n}⟩`.
pub fn presentation_ln1(n: i64) -> Result<BalancedPresentation, FamilyError> {
    presentation_from_w(n, &y().mul(&x()))
}

fn w(s: &str) -> Word {
    Word::parse(s).expect("static word")
}

fn conj(relator: usize, letter: &str) -> Move {
    let l = w(letter).letters()[0];
    Move::ConjugateRelator { relator, letter: l }
}

fn repeat(m: Move, times: usize) -> impl Iterator<Item = Move> {
    std::iter::repeat_n(m, times)
}

/// Gersten's argument as moves from `presentation_ln1(2)`, up to the point
/// where the first relator reads `x⁻¹y³` (with `y` now standing for
/// `x²y⁻¹`):
///
/// 1. invert and conjugate `r1` by `yxy` to get `yxyx⁻¹y⁻¹x⁻¹`;
/// 2. multiply by `x³y⁻²` and by `(yxy)y⁻²x³(yxy)⁻¹`, the conjugate of
///    `x³y⁻²` by `yxyx⁻³`;
/// 3. conjugate down to `x²y⁻¹xy⁻¹x²y⁻¹`;
/// 4. change generators `y ↦ y⁻¹x²` (twice `y ↦ yx`, then invert `y`);
/// 5. conjugate the new relator `yx⁻¹y²` to `x⁻¹y³`.
pub fn gersten_prefix() -> MoveCertificate {
    let start = presentation_ln1(2).expect("n = 2");
    let mut moves = vec![Move::InvertRelator { relator: 1 }, conj(1, "y"), conj(1, "x"), conj(1, "y")];
    moves.push(Move::MultiplyByConjugate { target: 1, by: 2, conjugator: Word::identity(), sign: Sign::Plus });
    moves.push(Move::MultiplyByConjugate { target: 1, by: 2, conjugator: w("yxyXXX"), sign: Sign::Plus });
    moves.extend([conj(1, "Y"), conj(1, "X"), conj(1, "Y"), conj(1, "x"), conj(1, "y")]);
    moves.extend([
        Move::NielsenGenerator { generator: 2, by: 1, sign: Sign::Plus },
        Move::NielsenGenerator { generator: 2, by: 1, sign: Sign::Plus },
        Move::InvertGenerator { generator: 2 },
    ]);
    moves.push(conj(1, "Y"));
    MoveCertificate::new(start, moves)
}

/// Number of leading moves of [`gersten_prefix`] before the generator change.
pub const GERSTEN_MULTIPLY_STEPS: usize = 11;

/// The full Gersten trivialization: [`gersten_prefix`] followed by killing
/// `x` and then `y` using `x = y³`. The second relator goes
/// `xyx⁻²y → yx⁻²y⁴ → y⁵x⁻¹y⁻³ → y⁻¹ → y`, after which `r1 = x⁻¹y³`
/// is reduced to `x`.
pub fn gersten_certificate() -> MoveCertificate {
    let mul_by_conj_x = Move::MultiplyByConjugate { target: 2, by: 1, conjugator: w("x"), sign: Sign::Minus };
    let mut finish = vec![
        conj(2, "X"),
        Move::MultiplyRelator { target: 2, by: 1, side: Side::Right, sign: Sign::Plus },
    ];
    finish.extend(repeat(conj(2, "y"), 4));
    finish.push(mul_by_conj_x.clone());
    finish.extend(repeat(conj(2, "Y"), 3));
    finish.push(mul_by_conj_x);
    finish.push(Move::InvertRelator { relator: 2 });
    finish.extend(repeat(Move::MultiplyRelator { target: 1, by: 2, side: Side::Right, sign: Sign::Minus }, 3));
    finish.push(Move::InvertRelator { relator: 1 });
    gersten_prefix().then(finish)
}

/// Search budget for family reports: the length bound is the member's
/// initial total length plus `length_slack`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBudget {
    pub length_slack: usize,
    pub max_depth: usize,
    pub workers: usize,
}

impl Default for FamilyBudget {
    fn default() -> Self {
        FamilyBudget { length_slack: 2, max_depth: 12, workers: 1 }
    }
}

impl FamilyBudget {
    pub fn config_for(&self, start: &BalancedPresentation) -> SearchConfig {
        let mut cfg = SearchConfig::new(start.canonical_form().total_length() + self.length_slack, self.max_depth);
        cfg.workers = self.workers;
        cfg
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub n: i64,
    pub presentation: BalancedPresentation,
    pub total_length: usize,
    pub determinant: i64,
    pub status: String,
    pub visited: u64,
    pub depth: Option<usize>,
    pub max_total_length: usize,
    pub max_depth: usize,
}

/// One row per `n = 0..=n_max` of `presentation_ln1(n)`.
pub fn family_report(n_max: i64, budget: &FamilyBudget) -> Result<Vec<FamilyRow>, SearchError> {
    (0..=n_max.max(-1))
        .map(|n| {
            let p = presentation_ln1(n).expect("n >= 0");
            let cfg = budget.config_for(&p);
            let outcome = search(&p, &cfg)?;
            Ok(FamilyRow {
                n,
                total_length: p.total_length(),
                determinant: p.abelianization_determinant().expect("2x2 determinant fits"),
                status: outcome.status().to_string(),
                visited: outcome.stats().visited,
                depth: match &outcome {
                    SearchOutcome::Found { depth, .. } => Some(*depth),
                    _ => None,
                },
                max_total_length: cfg.max_total_length,
                max_depth: cfg.max_depth,
                presentation: p,
            })
        })
        .collect()
}
