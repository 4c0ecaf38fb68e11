use std::fmt::Display;

/// An error with its exit status: 1 when a computation fails, 2 for usage
/// and input/output problems.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

pub type CmdResult<T = ()> = Result<T, Failure>;

pub fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 2,
        error: error.into(),
    }
}

pub fn computation(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 1,
        error: error.into(),
    }
}

pub fn usage_msg(message: impl Display) -> Failure {
    usage(anyhow::anyhow!("{message}"))
}

pub trait Context<T> {
    /// Maps the error to an input/output failure with a leading message.
    fn io_context(self, what: impl FnOnce() -> String) -> CmdResult<T>;
}

impl<T, E: Into<anyhow::Error>> Context<T> for Result<T, E> {
    fn io_context(self, what: impl FnOnce() -> String) -> CmdResult<T> {
        self.map_err(|e| usage(e.into().context(what())))
    }
}
