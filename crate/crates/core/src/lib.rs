//! Four-parameter generalized Fibonacci numbers F^i_{r,s}(k,n) and their Lucas
//! companions L^i_{r,s}(k,n).
//!
//! F counts colored tilings of an (n+1)-board by i-rectangles (r colors),
//! k-rectangles (s colors) and a short prefix of black squares; it satisfies
//! `F(n) = r F(n-i) + s F(n-k)`. The crate evaluates these numbers through
//! several independent routes (recurrence, binomial sums, generating
//! functions, matrix powers, exhaustive tiling enumeration), checks the known
//! identities between them, and maps classical sequences onto parameter
//! choices.
//!
//! ```
//! use genseq_core::{eval_f, Params};
//!
//! let padovan = Params::new(2, 3, 1, 1).unwrap();
//! assert_eq!(eval_f(&padovan, 7).unwrap(), 7u32.into());
//! ```

pub mod closed_form;
pub mod error;
pub mod genfun;
pub mod identities;
pub mod matrix;
pub mod params;
pub mod sequence;
pub mod specializations;
pub mod tilings;

pub use closed_form::{binomial, central_f, closed_f, narayana_closed, BinomialTable};
pub use error::{Error, Result};
pub use genfun::{rational_genfun, series_coeffs, RationalSeries};
pub use identities::{
    check_corollaries, check_identity, list_identities, lookup, verify_all, verify_grid, verify_grid_reading,
    verify_literal_readings, Aux, Counterexample, Grid, IdentityCheck, IdentityReport, IdentitySpec, Reading,
    VerificationReport,
};
pub use matrix::{build_a, build_q, cassini, det, det_a_formula, det_q_formula, f_matrix, mat_mul, mat_pow, IntMatrix};
pub use params::{Params, SeqIndex, MIN_INDEX};
pub use sequence::{
    eval_f, eval_f_range, eval_l, eval_l_by_recurrence, lucas_formula_start, lucas_recurrence_start, FTable, SeqValue,
};
pub use specializations::{
    compare_reference, fit_offset, named_sequence, named_value, parse_bfile, BFile, Family, NamedSequence, SeqKind,
    NAMED_SEQUENCES,
};
pub use tilings::{
    color_decompositions, count_f_tilings, count_l_tilings, enumerate_color_decompositions, enumerate_f_tilings,
    is_breakable_at, is_type_l, render_tiling, Block, ColorDecomposition, Kind, Piece, Tiling,
};
