use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("no interior optimum: {0}")]
    NoInteriorOptimum(String),

    /// The link budget does not close even directly below the DSC.
    #[error(
        "insufficient power: SNR at nadir is {snr_db:.3} dB, below the {gamma_th_db} dB threshold"
    )]
    InsufficientPower { snr_db: f64, gamma_th_db: f64 },

    #[error("coverage exceeds target area: DSC {dsc} needs diameter {diameter:.1} m but the area's short side is {short_side:.1} m")]
    CoverageExceedsArea {
        dsc: usize,
        diameter: f64,
        short_side: f64,
    },

    #[error("empty search grid: {0}")]
    EmptyGrid(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
