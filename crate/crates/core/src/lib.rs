//! Exact computation of Bott-Chern, Aeppli, Dolbeault and de Rham
//! cohomology of left-invariant forms on Lie algebras with a complex
//! structure, with Hermitian metrics, the anti-linear Hodge star and the
//! Aeppli-class vanishing criterion for closed holomorphic forms.
//!
//! All arithmetic is over the Gaussian rationals, so every result is exact.
//!
//! ```
//! use aeppli_core::{corpus, bc_cohomology};
//!
//! let sl2c = corpus::load("sl2c").unwrap().equations;
//! assert_eq!(bc_cohomology(&sl2c, 1, 0).unwrap().dim, 0);
//! ```

pub mod analysis;
pub mod checks;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod exterior;
pub mod hodge;
pub mod linalg;
pub mod random;
pub mod report;
pub mod scalar;
pub mod structure;

pub use analysis::{
    aeppli_class_vanishes, classify_metric, closed_p0_space, generate_skt_family, salamon_h10_check, skt_condition,
    verify_vanishing_theorem, AeppliDecision, MetricClass, Verdict,
};
pub use cohomology::{
    aeppli_cohomology, bc_cohomology, derham, dolbeault, harmonic_space, hodge_decompose, operator_matrix, Cohomology,
    CohomologyGroup, Laplacian, Operator, Space,
};
pub use error::{Error, Result};
pub use exterior::{basis, Factor, Form, Monomial};
pub use hodge::{fundamental_form, positivity_check, volume_form, HermitianMetric};
pub use linalg::{quotient, Matrix, Subspace};
pub use report::{CohomologyReport, GroupSelection};
pub use scalar::{Rational, Scalar};
pub use structure::{
    parse, parse_document, parse_form, parse_metric, AlgebraFlags, LieDocument, MetricSpec, StructureEquations,
};
