//! Runs the named checks of the core crate on a thread pool and reports them
//! in registry order, so output does not depend on scheduling.

use rayon::prelude::*;
use skeinlab_core::verify::{checks, Check};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    /// `Err` holds the message of a check that could not run.
    pub passed: Result<bool, String>,
}

impl Outcome {
    pub fn ok(&self) -> bool {
        self.passed == Ok(true)
    }

    pub fn label(&self) -> &'static str {
        if self.ok() {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Runs `suite` with the given number of worker threads (0 = rayon default).
pub fn run_checks(suite: &[Check], n_max: usize, threads: usize) -> Result<Vec<Outcome>, rayon::ThreadPoolBuildError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    Ok(pool.install(|| {
        suite
            .par_iter()
            .map(|c| Outcome {
                name: c.name,
                passed: (c.run)(n_max).map_err(|e| e.to_string()),
            })
            .collect()
    }))
}

/// Runs the full registry.
pub fn run_all(n_max: usize, threads: usize) -> Result<Vec<Outcome>, rayon::ThreadPoolBuildError> {
    run_checks(&checks(), n_max, threads)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_independent_of_threads() {
        let one = run_all(3, 1).unwrap();
        let many = run_all(3, 4).unwrap();
        assert_eq!(one, many);
        assert!(one.iter().all(Outcome::ok));
        let names: Vec<_> = checks().iter().map(|c| c.name).collect();
        assert_eq!(one.iter().map(|o| o.name).collect::<Vec<_>>(), names);
    }

    #[test]
    fn errors_become_failures() {
        let bad = [Check {
            name: "always.errors",
            run: |_| Err(skeinlab_core::Error::Inconsistent),
        }];
        let out = run_checks(&bad, 2, 1).unwrap();
        assert_eq!(out[0].label(), "FAIL");
        assert!(out[0].passed.is_err());
    }
}
