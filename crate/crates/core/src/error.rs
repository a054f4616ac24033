use thiserror::Error;

/// Everything that can go wrong while building graphs or computing spectra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is below the minimum of {1}")]
    ModulusTooSmall(u64, u64),
    #[error("modulus {0} exceeds the supported limit 2^31")]
    ModulusTooLarge(u64),
    #[error("Paley graphs need p = 1 (mod 4), got {0} = {} (mod 4)", .0 % 4)]
    NotOneModFour(u64),
    #[error("zero is not a nonzero square")]
    ZeroResidue,

    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("{what} requires {requirement}, got {got}")]
    InvalidParameter {
        what: &'static str,
        requirement: &'static str,
        got: u64,
    },
    #[error("cannot place {m} edges on {n} vertices (at most {max})")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("graph is not regular")]
    NotRegular,
    #[error("energy ratio is undefined for 0-regular graphs")]
    ZeroDegree,
    #[error("degree {k} out of range for {n} vertices")]
    DegreeOutOfRange { n: usize, k: usize },
    #[error("parameter {param}: {source}")]
    BadRow {
        param: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// True for failures of the numerical method rather than of the input.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::NoConvergence { .. } => true,
            Error::BadRow { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
