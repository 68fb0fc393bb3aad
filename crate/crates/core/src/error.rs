use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: coframe size {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: generator index {index} outside 1..{n}")]
    IndexOutOfRange { line: usize, index: usize, n: usize },

    #[error("line {line}: generator f{index} defined twice")]
    DuplicateGenerator { line: usize, index: usize },

    #[error("Jacobi violation: d(d f{generator}) = {residual} is not zero")]
    Jacobi { generator: usize, residual: String },

    #[error("structure equations are not integrable: d f{generator} has a (0,2)-component")]
    NotIntegrable { generator: usize },

    #[error("Lie algebra is not unimodular; harmonic characterizations are unavailable")]
    NotUnimodular,

    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,

    #[error("operator `{0}` requires a Hermitian metric")]
    MissingMetric(&'static str),

    #[error("matrix is not Hermitian at entry ({row},{col})")]
    NotHermitian { row: usize, col: usize },

    #[error("metric is not positive definite (leading minor {index} is {minor})")]
    NotPositive { index: usize, minor: String },

    #[error("form is not of pure bidegree")]
    NotPure,

    #[error("bidegree ({p},{q}) outside 0..={n}")]
    Bidegree { p: usize, q: usize, n: usize },

    #[error("Aeppli class of omega^{power} is undefined: ddbar omega^{power} = {residual}")]
    ClassUndefined { power: usize, residual: String },

    #[error("subspace containment violated; witness {witness}")]
    Containment { witness: String },

    #[error("unknown corpus entry `{0}`")]
    UnknownCorpus(String),
}

impl Error {
    /// Input could not be read as a structure-equation document.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::IndexOutOfRange { .. }
                | Error::DuplicateGenerator { .. }
                | Error::Jacobi { .. }
                | Error::NotHermitian { .. }
                | Error::UnknownCorpus(_)
        )
    }
}
