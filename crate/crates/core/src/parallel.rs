//! Thread-count control for grid evaluation.

/// Environment variable capping worker threads; `0` or unset means automatic.
pub const THREADS_ENV: &str = "EQUIDIST_THREADS";

/// Maximum worker threads for parallel grid work; `0` selects rayon's default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Threads(pub usize);

impl Threads {
    pub fn from_env() -> Self {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Threads)
            .unwrap_or_default()
    }

    /// Runs `f` inside a pool with the configured width. Results do not depend
    /// on the width: parallel work in this crate always collects in order.
    pub fn install<R: Send>(self, f: impl FnOnce() -> R + Send) -> R {
        if self.0 == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.0).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}
