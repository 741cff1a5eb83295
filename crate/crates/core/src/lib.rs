//! Workbench for the algebra behind Andrews-Curtis and Property-R style
//! questions: free-group words, balanced presentations and their moves,
//! certificate replay and bounded trivialization search, framed-link linking
//! matrices, and essential curves on the 4-punctured sphere.

pub mod certificate;
pub mod cli;
pub mod curves;
pub mod family;
pub mod intmat;
pub mod kirby;
pub mod moves;
pub mod presentation;
pub mod search;
pub mod word;

pub use certificate::{verify, MoveCertificate, VerificationReport};
pub use kirby::{ComponentKind, FramedLinkMatrix, KirbyError};
pub use curves::{enumerate_candidates, is_candidate, partition, z3_class, Label, PunctureLabeling, Slope};
pub use family::{gersten_certificate, gersten_prefix, presentation_from_w, presentation_ln1};
pub use moves::{apply_move, Move, MoveError, Regime, Side, Sign};
pub use presentation::{BalancedPresentation, CanonicalKey, PresentationError};
pub use search::{hybrid_trivialize, search, SearchConfig, SearchError, SearchOutcome, SearchStats, Strategy};
pub use word::{Alphabet, Letter, Word, WordError};
