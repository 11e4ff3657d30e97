use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 format error at byte {offset}: {reason}")]
    Format { offset: usize, reason: String },

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("cannot construct graph: {0}")]
    Construction(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("undefined statistic: {0}")]
    UndefinedStatistic(String),

    #[error("size limit exceeded: {what} is {actual}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("hypothesis not met: independent cover {cover} < required {required}")]
    HypothesisNotMet { cover: i64, required: i64 },

    #[error("certificate parse error: {0}")]
    CertificateParse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn check_limit(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::SizeLimit {
                what,
                actual,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
