use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,

    #[error("self-loop at vertex {0} in pair ({0}, {0})")]
    SelfLoop(usize),

    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotFound(usize, usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("invalid {family} parameters: {constraint}")]
    InvalidFamily {
        family: &'static str,
        constraint: String,
    },

    #[error("alpha = {0} is outside {1}")]
    AlphaOutOfRange(f64, &'static str),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("exponent {exponent} is excluded for {index}")]
    ExcludedExponent { index: &'static str, exponent: f64 },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("matrix entry ({0}, {1}) is negative")]
    NegativeEntry(usize, usize),

    #[error("radicand {0} is negative")]
    NegativeRadicand(f64),

    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Failures that come from floating-point work rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. } | Error::NegativeRadicand(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha, "[0, 1]"))
    }
}

pub(crate) fn check_alpha_open(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha, "[0, 1)"))
    }
}
