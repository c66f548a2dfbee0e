//! Enumeration, exhaustive surveys and randomized lemma checks.

use thiserror::Error;

pub mod enumerate;
pub mod fuzz;
pub mod generate;
pub mod survey;

pub use enumerate::{
    enumerate_class_g, enumerate_class_g_trees, enumerate_hanging_square, enumerate_skeletons,
    ENUMERATION_N_MAX,
};

pub use fuzz::{lemma_fuzz, mutation_fuzz, FuzzReport, MutationReport};
pub use survey::{dichotomy_survey, SurveyOptions, SurveyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("n_max {n_max} exceeds the built-in enumerator limit {limit}")]
    TooLarge { n_max: usize, limit: usize },
}
