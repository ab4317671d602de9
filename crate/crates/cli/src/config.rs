use std::fmt;

use clap::ValueEnum;
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 1000;
pub const MAX_RANGE: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub mode: Mode,
    /// Random integer entries are drawn from [−range, range].
    pub range: i64,
    pub format: Format,
    /// Reject out-of-domain inputs instead of projecting them.
    pub strict: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            mode: Mode::Exact,
            range: g2lab::sample::DEFAULT_RANGE,
            format: Format::Json,
            strict: false,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("--range must be between 1 and {MAX_RANGE}, got {0}")]
    Range(i64),
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(1..=MAX_RANGE).contains(&self.range) {
            return Err(ConfigError::Range(self.range));
        }
        Ok(())
    }

    /// Sample count for the torsion and map suites, which are far costlier
    /// per sample than the rest.
    pub fn heavy_samples(&self) -> usize {
        self.samples.div_ceil(10)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_validation() {
        let cfg = RunConfig::default();
        assert_eq!((cfg.seed, cfg.samples, cfg.range), (42, 1000, 9));
        assert_eq!(cfg.heavy_samples(), 100);
        assert_eq!(
            RunConfig {
                samples: 5,
                ..cfg.clone()
            }
            .heavy_samples(),
            1
        );
        assert_eq!(
            RunConfig { range: 0, ..cfg }.validate(),
            Err(ConfigError::Range(0))
        );
    }
}
