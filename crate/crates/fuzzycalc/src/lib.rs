//! Fuzzy calculus on alpha-level envelopes: fuzzy-number arithmetic,
//! Seikkala differentiability of fuzzy-valued functions, and closed-form
//! plus numeric solution of the fuzzy growth/decay initial value problem
//! `dy/dt = k x y, y(0) = c`.
//!
//! The building blocks:
//!
//! * [`fuzzy`] -- fuzzy numbers as lower/upper level functions sampled on a
//!   shared [`AlphaGrid`], extension-principle arithmetic, and envelope
//!   validity checks.
//! * [`seikkala`] -- fuzzy-valued functions of time as level-function
//!   fields, alpha-partials, time derivatives, and the differentiability
//!   verdict.
//! * [`fivp`] -- the growth/decay problem: case classification, closed
//!   forms (two decay variants that genuinely disagree), a Runge-Kutta
//!   oracle of the crisp min/max system, residual checking, and a combined
//!   analysis report.

pub mod error;
pub mod fivp;
pub mod fuzzy;
pub mod grid;
pub mod seikkala;

pub use error::{Error, Result};
pub use fivp::{
    classify_case, decay_coefficients, residual_check, AnalysisReport, CaseTag,
    DecayCoefficients, DecayVariant, FieldAnalysis, FieldLabel, FivpModel, OracleDeviation,
    PositivityReport, ResidualReport, DECAY_EPSILON, DEFAULT_TOL,
};
pub use fuzzy::{
    multiply_brute_force, EnvelopeCondition, FuzzyNumber, LevelInterval, TriangularParams,
    ValidityReport, Violation,
};
pub use grid::AlphaGrid;
pub use seikkala::{
    seikkala_verdict, FnEval, LevelCondition, LevelEval, LevelFunctionField, SampledField,
    SeikkalaReport, Witness,
};
