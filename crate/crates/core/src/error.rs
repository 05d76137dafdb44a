use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The Fabry-Perot denominator of the slab coefficients vanished.
    #[error("scattering denominator vanishes at omega = {omega:e} rad/s, l = {l:e} m")]
    Singularity { omega: f64, l: f64 },

    /// No real, positive solution exists for the requested extremum bound.
    #[error("no extremum: {0}")]
    NoExtremum(String),

    /// A narrow-band or pulse-length regime precondition does not hold.
    #[error("regime violated: {0}")]
    Regime(String),

    #[error("quadrature not converged: relative change {rel_change:e} on grid doubling")]
    Accuracy { rel_change: f64 },

    #[error("invalid bracket [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    ///
    /// 2 for configuration problems, 3 for numerical failures, 1 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::InvalidParameter { .. } | Error::Config(_) => 2,
            Error::Singularity { .. }
            | Error::NoExtremum(_)
            | Error::Regime(_)
            | Error::Accuracy { .. }
            | Error::InvalidBracket { .. } => 3,
            Error::Io(_) | Error::Json(_) => 1,
        }
    }
}
