//! Exact representations, projection operators, and coupling coefficients
//! for the cubic (Higgs) deformation of su(2).
//!
//! All arithmetic is exact: rationals, quadratic surds over squarefree
//! radicands, and (sign, square) pairs for coefficients. Closed forms are
//! checked against brute-force tensor-product computations; see the
//! `verify` module for the full grids.

pub mod cgc;
pub mod error;
pub mod exactnum;
pub mod oracle;
pub mod projector;
pub mod repkernel;
pub mod verify;

pub use cgc::{
    cgc_closed_form, cgc_denominator, cgc_numerator, cgc_numerator_double_sum,
    cgc_via_projector_ratio, matrix_element_m, CgcQuery, DenominatorForm,
};
pub use error::{Error, Result};
pub use exactnum::{parse_rational, CGValue, HalfInt, QuadraticSurd, Rational};
pub use oracle::{
    build_ladder_matrices, oracle_cgc, oracle_projector_element, product_weights,
    su2_reference_cgc, validate_cgc_query, ProductSpace, SurdOperator,
};
pub use projector::{
    apply_projector_irrep, apply_series, normalization_n, proj_coeff, series_bound, Carrier,
    IrrepCarrier, ProjectorSpec, Variant,
};
pub use repkernel::{hermiticity_check, HermiticityVerdict, IrrepModel, StructureFunction};
pub use verify::{run_verification, Report, VerifyOptions};
