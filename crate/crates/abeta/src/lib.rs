//! Command-line front-end for `abeta-core`: radius computations, bound
//! tables, β sweeps and Monte-Carlo verification, emitted as CSV or JSON.

use std::fmt;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub mod args;
pub mod commands;
pub mod grid;
pub mod output;

pub use args::Cli;
pub use commands::{run, Outcome};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "ABETA_THREADS";

/// A one-line diagnostic, optionally naming the offending flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub flag: Option<String>,
    pub message: String,
}

impl CliError {
    pub fn new(flag: Option<&str>, message: impl Into<String>) -> Self {
        Self {
            flag: flag.map(str::to_owned),
            message: message.into(),
        }
    }

    /// Attaches the flag that an `abeta_core` error refers to.
    pub fn from_core(err: abeta_core::Error) -> Self {
        use abeta_core::Error;
        let flag = match &err {
            Error::BetaOutOfRange(_) | Error::BetaIsOne => Some("--beta".to_owned()),
            Error::InvalidArgument { name, .. } => Some(format!("--{}", name.to_lowercase().replace('_', "-"))),
            _ => None,
        };
        Self {
            flag,
            message: err.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.flag {
            Some(flag) => write!(f, "error: {flag}: {}", self.message),
            None => write!(f, "error: {}", self.message),
        }
    }
}

impl std::error::Error for CliError {}

/// Worker count: `ABETA_THREADS` if set, else the available parallelism.
pub fn thread_limit() -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<NonZeroUsize>()
            .map(NonZeroUsize::get)
            .map_err(|_| CliError::new(Some(THREADS_ENV), format!("expected a positive integer, got `{v}`"))),
        Err(std::env::VarError::NotPresent) => Ok(std::thread::available_parallelism().map_or(1, NonZeroUsize::get)),
        Err(e) => Err(CliError::new(Some(THREADS_ENV), e.to_string())),
    }
}

/// Maps `f` over `items` on up to `threads` scoped threads. Results come back
/// in input order whatever order the work finishes in.
pub fn parallel_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = threads.min(items.len());
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = items.get(i) else { break };
                let r = f(item);
                slots.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("worker panicked")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}
