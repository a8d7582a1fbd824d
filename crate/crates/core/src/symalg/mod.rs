//! Quasihomogeneous polynomials with exact coefficients, seeded general
//! members, coordinate-change normalization and the `d = 3 a5` normal form.

mod coeff;
mod cubic;
mod normalize;
mod param;
mod plan;
mod poly;
mod qsmember;
mod sample;
mod tables;

pub use coeff::{Coeff, QuadNum};
pub use cubic::{cubic_normal_form, CubicNormalForm, NormalFormPieces};
pub use normalize::{kill_equations, normalize, replay, solve_stage, Normalized};
pub use param::ParamPoly;
pub use plan::{builtin_plan, paper_order_plan, NormalizationPlan, Pass, PassAudit, PlanAudit, Stage, PLAN_NUMBERS};
pub use poly::{stratum_restriction, BinaryRestriction, GradedPolynomial, Restriction, Substitution};
pub use qsmember::{quasismooth_member, QuasismoothReport, QuasismoothStatus, Witness, PRIME_LADDER};
pub use sample::{
    form_splits, normalized_member, sample_general_member, BinarySpec, GenericityCheck, NormalizedMember, Sample,
    SamplingOptions, DEFAULT_BUDGET,
};
pub use tables::golden_table;
