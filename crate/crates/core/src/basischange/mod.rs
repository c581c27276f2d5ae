//! Solver route: the polynomials `P_π` and coefficients `m^k_π` obtained by
//! exact linear algebra over evaluations on Young diagrams, together with
//! checks of their integrality, positivity, degree, support and parity.
//!
//! ```
//! use boolean_kerov::basischange::boolean_kerov_polynomial;
//! use boolean_kerov::combinatorics::Partition;
//!
//! let p = boolean_kerov_polynomial(&"(3)".parse::<Partition>().unwrap()).unwrap();
//! assert_eq!(p.to_string(), "x4 + x2^2 + x2");
//! ```

mod basis;
mod evaluation;
mod theorems;
mod verify;

pub use basis::MonomialBasis;
pub use evaluation::EvaluationReport;
pub use theorems::{
    boolean_in_characters, boolean_in_characters_with, boolean_kerov_polynomial,
    boolean_kerov_polynomial_with, boolean_support_candidates, display_order,
    evaluate_character_combination, BasisChangeOptions, BooleanSolution, CumulantSign,
    KerovSolution,
};
pub use verify::{
    check_boolean_expansion, check_kerov_polynomial, verify_theorems, Check, ExpansionTable,
    VerificationReport, EXPANSION_GROUP, KEROV_GROUP,
};
