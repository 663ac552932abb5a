//! Exact growth series of positive classical and singular braid monoids.
//!
//! The pipeline: [`words`] defines the presentations and permutation-braid
//! primitives; [`automaton`] builds the normal-form syllable alphabet and its
//! predecessor relation; [`growth`] turns that relation into a linear system
//! over rational functions ([`linsys`], [`ratfunc`], [`poly`]) and analyzes
//! the resulting series (roots, residues, growth rate); [`oracle`] counts the
//! same monoids by brute-force relation closure, independently of all of the
//! above, so every number can be cross-checked.

pub mod automaton;
pub mod error;
pub mod growth;
pub mod linsys;
pub mod oracle;
pub mod poly;
pub mod ratfunc;
pub mod words;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

pub use automaton::{
    alphabet, count_via_dp, epsilon_matrix, flip_syllable_id, pred_set, simples_list,
    EpsilonMatrix, Syllable, SyllablePayload, MAX_STRANDS,
};
pub use growth::{
    build_system, cubic_analysis, generating_function, growth_report, isolate_real_roots,
    series_counts, CubicAnalysis, GeneratingFunction, GrowthReport, DEFAULT_ROOT_TOL,
};
pub use linsys::{solve_linear_system, LinearSystem};
pub use oracle::{
    are_equivalent, count_by_length, enumerate_classes, LengthCensus, DEFAULT_WORD_BUDGET,
};
pub use poly::Polynomial;
pub use ratfunc::{recurrence_from, series_expand, RationalFunction, Recurrence};
pub use words::{
    build_presentation, inversions, rewrite_neighbors, GenKind, Generator, Presentation,
    PresentationKind, SimpleElement, Word,
};
