//! Move certificates and their replay.

use serde::{Deserialize, Serialize};

use crate::moves::{Move, MoveError, Regime};
use crate::presentation::BalancedPresentation;

/// A start presentation plus a move sequence claimed to trivialize it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCertificate {
    pub start: BalancedPresentation,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayStep {
    /// 1-based position in the certificate.
    pub step: usize,
    #[serde(rename = "move")]
    pub mv: Move,
    pub result: BalancedPresentation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    IllegalMove { step: usize, reason: String },
    NotTrivial { step: usize },
}

impl Failure {
    pub fn step(&self) -> usize {
        match self {
            Failure::IllegalMove { step, .. } | Failure::NotTrivial { step } => *step,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub regime: Regime,
    pub steps: Vec<ReplayStep>,
    pub failure: Option<Failure>,
    #[serde(rename = "final")]
    pub final_presentation: BalancedPresentation,
}

impl MoveCertificate {
    pub fn new(start: BalancedPresentation, moves: Vec<Move>) -> Self {
        MoveCertificate { start, moves }
    }

    /// `Extended` if any move changes the generating set.
    pub fn regime(&self) -> Regime {
        if self.moves.iter().any(|m| m.regime() == Regime::Extended) {
            Regime::Extended
        } else {
            Regime::Strict
        }
    }

    /// Replays every move, returning the final presentation or the first
    /// failing step (1-based) with its error.
    pub fn replay(&self) -> Result<BalancedPresentation, (usize, MoveError)> {
        let mut p = self.start.clone();
        for (k, m) in self.moves.iter().enumerate() {
            p = m.apply(&p).map_err(|e| (k + 1, e))?;
        }
        Ok(p)
    }

    /// Certificate with every macro move replaced by its atoms.
    pub fn expanded(&self) -> MoveCertificate {
        MoveCertificate {
            start: self.start.clone(),
            moves: self.moves.iter().flat_map(Move::atoms).collect(),
        }
    }

    pub fn then(mut self, more: impl IntoIterator<Item = Move>) -> Self {
        self.moves.extend(more);
        self
    }

    pub fn verify(&self) -> VerificationReport {
        verify(self)
    }
}

/// Replays `cert` and checks that it ends at a trivial presentation.
pub fn verify(cert: &MoveCertificate) -> VerificationReport {
    let mut p = cert.start.clone();
    let mut steps = Vec::with_capacity(cert.moves.len());
    for (k, m) in cert.moves.iter().enumerate() {
        match m.apply(&p) {
            Ok(next) => {
                p = next;
                steps.push(ReplayStep { step: k + 1, mv: m.clone(), result: p.clone() });
            }
            Err(e) => {
                return VerificationReport {
                    valid: false,
                    regime: cert.regime(),
                    steps,
                    failure: Some(Failure::IllegalMove { step: k + 1, reason: e.to_string() }),
                    final_presentation: p,
                };
            }
        }
    }
    let trivial = p.is_trivial();
    VerificationReport {
        valid: trivial,
        regime: cert.regime(),
        steps,
        failure: (!trivial).then_some(Failure::NotTrivial { step: cert.moves.len() }),
        final_presentation: p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{Side, Sign};

    fn p(s: &str) -> BalancedPresentation {
        BalancedPresentation::parse(s).unwrap()
    }

    #[test]
    fn empty_certificate_on_trivial() {
        let report = verify(&MoveCertificate::new(p("2; x; y"), vec![]));
        assert!(report.valid);
        assert_eq!(report.failure, None);
    }

    #[test]
    fn not_trivial_reported() {
        let report = verify(&MoveCertificate::new(p("2; xy; y"), vec![]));
        assert!(!report.valid);
        assert_eq!(report.failure, Some(Failure::NotTrivial { step: 0 }));
    }

    #[test]
    fn illegal_move_reported_with_step() {
        let cert = MoveCertificate::new(
            p("2; xy; y"),
            vec![
                Move::MultiplyRelator { target: 1, by: 2, side: Side::Right, sign: Sign::Minus },
                Move::Destabilize { relator: 1 },
            ],
        );
        // after step 1 the presentation is <x, y | x, y>, destabilizing r1 is legal
        assert!(verify(&cert).valid);
        let bad = MoveCertificate::new(p("2; xy; y"), vec![Move::Destabilize { relator: 1 }]);
        let report = verify(&bad);
        assert!(!report.valid);
        assert_eq!(report.failure.as_ref().map(Failure::step), Some(1));
        assert!(matches!(report.failure, Some(Failure::IllegalMove { .. })));
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = MoveCertificate::new(
            p("2; xy; y"),
            vec![Move::MultiplyRelator { target: 1, by: 2, side: Side::Right, sign: Sign::Minus }],
        );
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            r#"{"start":{"rank":2,"relators":["xy","y"]},"moves":[{"type":"multiply_relator","target":1,"by":2,"side":"right","sign":"-"}]}"#
        );
        assert_eq!(serde_json::from_str::<MoveCertificate>(&json).unwrap(), cert);
    }
}
