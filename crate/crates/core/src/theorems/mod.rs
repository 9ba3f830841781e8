//! Rank formulas, table predictors, theorem-case classification and the
//! exhaustive verification harness.

mod classify;
pub mod families;
mod formulas;
mod harness;
mod tables;

pub use formulas::{bicyclic_lower_bound, canonical_unicyclic_rank, cycle_attachment_rank, cycle_rank, path_rank, RankValue};
pub use tables::{
    predict_pendant_bicyclic, predict_pendant_free_bicyclic, table_rows, Predicted, TablePrediction, TableRow, TableShape, Target,
};
pub use classify::{
    classify, classify_rank2, classify_rank_eq_girth_family, k4_rank_check, kab_rank2_iff, verify_girth_bound, Case,
    ClassificationReport, Relation, Theorem, TheoremCheck,
};
pub use harness::{run, write_witnesses, Falsification, HarnessConfig, SuiteReport, Suite, Tally, VerificationReport, FORMULA_MIN_N, K4_SAMPLES, MAX_CORPUS_N, UNICYCLIC_INSTANCES};
